//! Univariate polynomials over GF(p^k).

use crate::error::FieldError;
use crate::field::{Felt, Field, ONE, ZERO};

/// Cost ceiling for trial-division irreducibility: the number of candidate
/// divisors enumerated must stay below this.
const TRIAL_DIVISION_BUDGET: u64 = 200_000_000;

/// Caps on `is_irreducible` from the desk-scale contract.
const IRRED_MAX_Q: u64 = 128;
const IRRED_MAX_DEG: usize = 16;

/// A polynomial `c[0] + c[1] x + ... + c[d] x^d` with nonzero leading
/// coefficient; the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Poly {
    c: Vec<Felt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Felt>) -> Poly {
        while coeffs.last() == Some(&ZERO) {
            coeffs.pop();
        }
        Poly { c: coeffs }
    }

    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { c: vec![ONE] }
    }

    pub fn x() -> Poly {
        Poly { c: vec![ZERO, ONE] }
    }

    pub fn constant(c: Felt) -> Poly {
        Poly::new(vec![c])
    }

    /// x^deg + low-order coefficients taken from `low`.
    pub fn monic(deg: usize, low: &[Felt]) -> Poly {
        assert!(low.len() <= deg);
        let mut c = vec![ZERO; deg + 1];
        c[deg] = ONE;
        c[..low.len()].copy_from_slice(low);
        Poly { c }
    }

    /// The binomial x^r - b.
    pub fn binomial(f: &Field, r: usize, b: Felt) -> Poly {
        let mut c = vec![ZERO; r + 1];
        c[0] = f.neg(b);
        c[r] = ONE;
        Poly::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Felt {
        self.c.get(i).copied().unwrap_or(ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.c.last() == Some(&ONE)
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(f.add(self.coeff(i), other.coeff(i)));
        }
        Poly::new(c)
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(f.sub(self.coeff(i), other.coeff(i)));
        }
        Poly::new(c)
    }

    pub fn scale(&self, f: &Field, s: Felt) -> Poly {
        Poly::new(self.c.iter().map(|&a| f.mul(a, s)).collect())
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![ZERO; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == ZERO {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Poly::new(c)
    }

    /// Exact division algorithm: returns (quotient, remainder) with
    /// deg r < deg d. The divisor must be nonzero.
    pub fn divrem(&self, f: &Field, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = f.inv(*d.c.last().unwrap()).expect("nonzero leading coefficient");
        let dd = d.c.len() - 1;
        let mut rem = self.c.clone();
        let mut quot = vec![ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let coeff = f.mul(rem[i], lead_inv);
            if coeff == ZERO {
                continue;
            }
            quot[i - dd] = coeff;
            rem[i] = ZERO;
            for j in 0..dd {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(coeff, d.c[j]));
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn divides(&self, f: &Field, target: &Poly) -> bool {
        target.divrem(f, self).1.is_zero()
    }

    pub fn eval(&self, f: &Field, x: Felt) -> Felt {
        let mut acc = ZERO;
        for &c in self.c.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// self^e mod m, by square and multiply.
    pub fn pow_mod(&self, f: &Field, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.divrem(f, m).1;
        let mut acc = Poly::one().divrem(f, m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).divrem(f, m).1;
            }
            base = base.mul(f, &base).divrem(f, m).1;
            e >>= 1;
        }
        acc
    }

    pub fn gcd(&self, f: &Field, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(f, &b).1;
            a = b;
            b = r;
        }
        if let Some(&lead) = a.c.last() {
            if lead != ONE {
                let inv = f.inv(lead).unwrap();
                return a.scale(f, inv);
            }
        }
        a
    }

    /// Trial-division irreducibility: a monic polynomial of degree >= 1 is
    /// irreducible iff it has no monic divisor of degree in [1, deg/2].
    /// Capped at the desk scale; larger inputs report `CapExceeded`.
    pub fn is_irreducible(&self, f: &Field) -> Result<bool, FieldError> {
        if !self.is_monic() {
            return Err(FieldError::NonMonic);
        }
        let deg = self.degree().unwrap();
        if deg == 0 {
            return Err(FieldError::BadExponent);
        }
        if deg == 1 {
            return Ok(true);
        }
        let q = f.q();
        if q > IRRED_MAX_Q || deg > IRRED_MAX_DEG {
            return Err(FieldError::CapExceeded);
        }
        let mut cost: u64 = 0;
        for d in 1..=deg / 2 {
            cost = cost.saturating_add(q.saturating_pow(d as u32));
        }
        if cost > TRIAL_DIVISION_BUDGET {
            return Err(FieldError::CapExceeded);
        }
        for d in 1..=deg / 2 {
            if divisor_of_degree_exists(f, self, d) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Human-readable rendering, highest degree first.
    pub fn format(&self, f: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == ZERO {
                continue;
            }
            let cs = f.format_elt(c);
            let part = match i {
                0 => cs,
                1 => {
                    if c == ONE {
                        "x".into()
                    } else {
                        format!("{cs}*x")
                    }
                }
                _ => {
                    if c == ONE {
                        format!("x^{i}")
                    } else {
                        format!("{cs}*x^{i}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// Whether some monic polynomial of degree exactly `d` divides `target`.
fn divisor_of_degree_exists(f: &Field, target: &Poly, d: usize) -> bool {
    let q = f.q();
    let count = q.pow(d as u32);
    (0..count).any(|idx| {
        let mut low = Vec::with_capacity(d);
        let mut n = idx;
        for _ in 0..d {
            low.push(Felt(n % q));
            n /= q;
        }
        Poly::monic(d, &low).divides(f, target)
    })
}

/// The irreducible factors of the binomial x^(q-1) - a over GF(q):
/// exactly `{ x^r - b : b in GF(q)*, b^((q-1)/r) = a }` where `r` is the
/// multiplicative order of `a`. Sorted by constant-term index.
pub fn binomial_factors(f: &Field, a: Felt) -> Result<Vec<Poly>, FieldError> {
    if a == ZERO {
        return Err(FieldError::ZeroElement);
    }
    let q = f.q();
    let r = f.element_order(a)?;
    let t = (q - 1) / r;
    let mut factors = Vec::with_capacity(t as usize);
    for b in f.nonzero_elements() {
        if f.pow(b, t as u128) == a {
            factors.push(Poly::binomial(f, r as usize, b));
        }
    }
    debug_assert_eq!(factors.len() as u64, t);
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let f = Field::new(7, 1).unwrap();
        let a = Poly::new(vec![Felt(3), Felt(0), Felt(5), Felt(1), Felt(2)]);
        let b = Poly::new(vec![Felt(6), Felt(1), Felt(4)]);
        let (q, r) = a.divrem(&f, &b);
        let back = q.mul(&f, &b).add(&f, &r);
        assert_eq!(back, a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn irreducibility_of_x2_plus_1() {
        // x^2 + 1 is irreducible over GF(q) exactly when q = 3 mod 4.
        let f7 = Field::new(7, 1).unwrap();
        let p = Poly::monic(2, &[ONE]);
        assert!(p.is_irreducible(&f7).unwrap());

        let f5 = Field::new(5, 1).unwrap();
        assert!(!p.is_irreducible(&f5).unwrap());

        // Degree-one polynomials are always irreducible.
        for c in f5.elements() {
            assert!(Poly::monic(1, &[c]).is_irreducible(&f5).unwrap());
        }
    }

    #[test]
    fn non_monic_is_rejected() {
        let f5 = Field::new(5, 1).unwrap();
        let p = Poly::new(vec![ONE, Felt(2)]);
        assert!(matches!(p.is_irreducible(&f5), Err(FieldError::NonMonic)));
    }

    #[test]
    fn binomial_factors_split_case() {
        // a = 1: x^(q-1) - 1 splits into all x - b.
        let f = Field::new(5, 1).unwrap();
        let factors = binomial_factors(&f, ONE).unwrap();
        assert_eq!(factors.len(), 4);
        for p in &factors {
            assert_eq!(p.degree(), Some(1));
        }
    }

    #[test]
    fn binomial_factors_gf7_minus_one() {
        // GF(7), a = 6 = -1 has order 2; factors are x^2 - b with b^3 = 6.
        let f = Field::new(7, 1).unwrap();
        let a = Felt(6);
        let factors = binomial_factors(&f, a).unwrap();
        let mut expect = Vec::new();
        for b in 1..7u64 {
            if b * b * b % 7 == 6 {
                expect.push(Poly::binomial(&f, 2, Felt(b)));
            }
        }
        assert_eq!(factors, expect);
        // b in {3, 5, 6}.
        assert_eq!(expect.len(), 3);
        // Product reconstructs x^6 - 6.
        let mut prod = Poly::one();
        for p in &factors {
            prod = prod.mul(&f, p);
        }
        assert_eq!(prod, Poly::binomial(&f, 6, a));
    }

    #[test]
    fn binomial_factors_primitive_case() {
        // GF(9) with a of maximal order 8: single factor x^8 - a.
        let f = Field::new(3, 2).unwrap();
        let a = f.primitive_element();
        assert_eq!(f.element_order(a).unwrap(), 8);
        let factors = binomial_factors(&f, a).unwrap();
        assert_eq!(factors, vec![Poly::binomial(&f, 8, a)]);
        // Verified irreducible by exhaustive trial division.
        assert!(factors[0].is_irreducible(&f).unwrap());
    }

    #[test]
    fn format_renders_polynomials() {
        let f = Field::new(7, 1).unwrap();
        let p = Poly::new(vec![Felt(6), ZERO, ONE]);
        assert_eq!(p.format(&f), "x^2 + 6");
    }
}
