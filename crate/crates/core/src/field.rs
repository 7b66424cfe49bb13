//! Exact arithmetic in GF(p^k).
//!
//! Elements are stored as indices `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` where
//! `(c_0, ..., c_{k-1})` is the coefficient vector of the element modulo a
//! deterministic irreducible polynomial. Multiplication goes through
//! discrete-log tables built once per field, so the same `(p, k)` always
//! yields the same field, the same primitive element and the same tables.

use crate::error::FieldError;

/// Hard cap on field size for table construction.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// An element of a finite field, stored as its index in `0..q`.
///
/// The index encodes the coefficient vector of the element in base `p`.
/// Elements are only meaningful relative to the [`Field`] they came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Felt(pub u64);

pub const ZERO: Felt = Felt(0);
pub const ONE: Felt = Felt(1);

/// GF(p^k) with precomputed exp/log tables.
#[derive(Clone)]
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// Coefficients `c_0..c_{k-1}` of the monic modulus `x^k + sum c_i x^i`.
    /// Empty for prime fields.
    modulus: Vec<u64>,
    /// `log[a]` for `a in 1..q`: discrete log base the primitive element.
    log: Vec<u32>,
    /// `exp[i]` = primitive^i, `i in 0..2(q-1)` (doubled to skip a reduction).
    exp: Vec<u64>,
    primitive: Felt,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)?;
        if self.k > 1 {
            write!(f, " = GF({}^{})", self.p, self.k)?;
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    for p in prime_factors(n) {
        result = result / p * (p - 1);
    }
    result
}

/// Prime factors of `n`, without multiplicity.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// Builds GF(p^k) with the deterministic modulus: among monic degree-k
    /// polynomials over GF(p) ordered by the index of their coefficient
    /// vector, the first irreducible one.
    pub fn new(p: u64, k: u32) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::BadExponent);
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q.checked_mul(p).ok_or(FieldError::FieldTooLarge)?;
            if q > MAX_FIELD_SIZE {
                return Err(FieldError::FieldTooLarge);
            }
        }
        let modulus = if k == 1 {
            Vec::new()
        } else {
            find_modulus(p, k)
        };
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            log: Vec::new(),
            exp: Vec::new(),
            primitive: ONE,
        };
        field.build_tables();
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field size q = p^k.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients `c_0..c_{k-1}` (empty for prime fields).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// All field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Felt> {
        (0..self.q).map(Felt)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Felt> {
        (1..self.q).map(Felt)
    }

    fn check(&self, x: Felt) -> Felt {
        debug_assert!(x.0 < self.q, "element {} out of range for {:?}", x.0, self);
        x
    }

    /// Embeds an integer via the prime subfield (reduces mod p, so -1 maps to
    /// p - 1).
    pub fn from_int(&self, n: i64) -> Felt {
        let p = self.p as i64;
        Felt(n.rem_euclid(p) as u64)
    }

    /// Coefficient vector `c_0..c_{k-1}` of an element.
    pub fn digits(&self, x: Felt) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.k as usize);
        let mut n = self.check(x).0;
        for _ in 0..self.k {
            v.push(n % self.p);
            n /= self.p;
        }
        v
    }

    pub fn from_digits(&self, digits: &[u64]) -> Felt {
        assert!(digits.len() <= self.k as usize);
        let mut n = 0u64;
        for &d in digits.iter().rev() {
            debug_assert!(d < self.p);
            n = n * self.p + d;
        }
        Felt(n)
    }

    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        self.check(a);
        self.check(b);
        if self.k == 1 {
            return Felt((a.0 + b.0) % self.p);
        }
        let mut n = 0u64;
        let mut pw = 1u64;
        let (mut x, mut y) = (a.0, b.0);
        for _ in 0..self.k {
            n += (x % self.p + y % self.p) % self.p * pw;
            x /= self.p;
            y /= self.p;
            pw *= self.p;
        }
        Felt(n)
    }

    pub fn neg(&self, a: Felt) -> Felt {
        self.check(a);
        if self.k == 1 {
            return Felt(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let mut n = 0u64;
        let mut pw = 1u64;
        let mut x = a.0;
        for _ in 0..self.k {
            let d = x % self.p;
            n += if d == 0 { 0 } else { self.p - d } * pw;
            x /= self.p;
            pw *= self.p;
        }
        Felt(n)
    }

    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        self.check(a);
        self.check(b);
        if a.0 == 0 || b.0 == 0 {
            return ZERO;
        }
        let i = self.log[(a.0 - 1) as usize] as usize + self.log[(b.0 - 1) as usize] as usize;
        Felt(self.exp[i])
    }

    pub fn inv(&self, a: Felt) -> Result<Felt, FieldError> {
        self.check(a);
        if a.0 == 0 {
            return Err(FieldError::ZeroElement);
        }
        let l = self.log[(a.0 - 1) as usize] as usize;
        Ok(Felt(self.exp[(self.q as usize - 1) - l]))
    }

    pub fn div(&self, a: Felt, b: Felt) -> Result<Felt, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Felt, e: u128) -> Felt {
        self.check(a);
        if a.0 == 0 {
            return if e == 0 { ONE } else { ZERO };
        }
        let m = (self.q - 1) as u128;
        let l = self.log[(a.0 - 1) as usize] as u128;
        let i = (l * (e % m)) % m;
        Felt(self.exp[i as usize])
    }

    /// The Frobenius endomorphism x -> x^p.
    pub fn frobenius(&self, a: Felt) -> Felt {
        self.pow(a, self.p as u128)
    }

    /// Multiplicative order of a nonzero element: the least t >= 1 with
    /// x^t = 1. Always divides q - 1.
    pub fn element_order(&self, x: Felt) -> Result<u64, FieldError> {
        self.check(x);
        if x.0 == 0 {
            return Err(FieldError::ZeroElement);
        }
        let l = self.log[(x.0 - 1) as usize] as u64;
        Ok((self.q - 1) / gcd(l, self.q - 1))
    }

    /// The deterministic primitive element: the least element (in index
    /// order) of multiplicative order q - 1.
    pub fn primitive_element(&self) -> Felt {
        self.primitive
    }

    /// Slow product via polynomial multiplication mod the modulus; used only
    /// while the tables are being built, and by tests as an independent
    /// route.
    pub fn mul_slow(&self, a: Felt, b: Felt) -> Felt {
        if self.k == 1 {
            return Felt(a.0 * b.0 % self.p);
        }
        let k = self.k as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        // Reduce: x^k = -(sum c_j x^j).
        for i in (k..2 * k - 1).rev() {
            let d = prod[i];
            if d == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let c = self.modulus[j];
                if c != 0 {
                    prod[i - k + j] = (prod[i - k + j] + d * (self.p - c)) % self.p;
                }
            }
        }
        prod.truncate(k);
        self.from_digits(&prod)
    }

    fn pow_slow(&self, a: Felt, mut e: u64) -> Felt {
        let mut base = a;
        let mut acc = ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let factors = prime_factors(q - 1);
        // Least element in index order with order exactly q - 1.
        let mut primitive = ONE;
        'search: for idx in 1..q {
            let cand = Felt(idx);
            let mut ok = true;
            for &f in &factors {
                if self.pow_slow(cand, (q - 1) / f).0 == 1 {
                    ok = false;
                    break;
                }
            }
            if ok {
                primitive = cand;
                break 'search;
            }
        }
        self.primitive = primitive;
        let n = (q - 1) as usize;
        let mut exp = vec![0u64; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize - 1];
        let mut acc = ONE;
        for (i, e) in exp.iter_mut().enumerate().take(n) {
            *e = acc.0;
            log[(acc.0 - 1) as usize] = i as u32;
            acc = self.mul_slow(acc, primitive);
        }
        debug_assert_eq!(acc, ONE, "primitive element order mismatch");
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        if n == 0 {
            exp = vec![1];
        }
        self.exp = exp;
        self.log = log;
    }

    /// Renders an element for reports: plain integer over a prime field,
    /// parenthesised coefficient tuple otherwise.
    pub fn format_elt(&self, x: Felt) -> String {
        if self.k == 1 {
            format!("{}", x.0)
        } else {
            let d = self.digits(x);
            let inner: Vec<String> = d.iter().map(|c| c.to_string()).collect();
            format!("({})", inner.join(","))
        }
    }
}

/// Least monic irreducible polynomial of degree k over GF(p), by index of
/// the non-leading coefficient vector.
fn find_modulus(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let mut total: u64 = 1;
    for _ in 0..k {
        total *= p;
    }
    for idx in 0..total {
        let mut digits = Vec::with_capacity(k);
        let mut n = idx;
        for _ in 0..k {
            digits.push(n % p);
            n /= p;
        }
        if modp_irreducible(p, &digits) {
            return digits;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Irreducibility of the monic polynomial x^k + sum c_i x^i over GF(p), by
/// trial division against all monic polynomials of degree <= k/2.
fn modp_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let k = coeffs.len();
    if k == 1 {
        return true;
    }
    // Full coefficient vector, monic.
    let mut f = coeffs.to_vec();
    f.push(1);
    for d in 1..=k / 2 {
        let mut count: u64 = 1;
        for _ in 0..d {
            count *= p;
        }
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut n = idx;
            for _ in 0..d {
                g.push(n % p);
                n /= p;
            }
            g.push(1);
            if modp_divides(p, &g, &f) {
                return false;
            }
        }
    }
    true
}

/// Whether monic g divides f over GF(p).
fn modp_divides(p: u64, g: &[u64], f: &[u64]) -> bool {
    let dg = g.len() - 1;
    let mut rem = f.to_vec();
    for i in (dg..rem.len()).rev() {
        let lead = rem[i];
        if lead == 0 {
            continue;
        }
        rem[i] = 0;
        for (j, &gc) in g.iter().enumerate().take(dg) {
            let sub = lead * gc % p;
            rem[i - dg + j] = (rem[i - dg + j] + p - sub) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.q(), 2);
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(f7.q(), 7);
        assert!(f7.modulus().is_empty());
        assert!(Field::new(6, 1).is_err());
        assert!(Field::new(2, 17).is_err());
    }

    #[test]
    fn gf9_modulus_is_least_irreducible_quadratic() {
        // Independent derivation: enumerate monic quadratics over GF(3) by
        // coefficient index and test irreducibility by root search.
        let mut expected = None;
        'outer: for idx in 0..9u64 {
            let (c0, c1) = (idx % 3, idx / 3);
            let mut has_root = false;
            for r in 0..3u64 {
                if (r * r + c1 * r + c0) % 3 == 0 {
                    has_root = true;
                    break;
                }
            }
            if !has_root {
                expected = Some(vec![c0, c1]);
                break 'outer;
            }
        }
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), expected.unwrap().as_slice());
        // Which is x^2 + 1.
        assert_eq!(f9.modulus(), &[1, 0]);
    }

    #[test]
    fn primitive_elements() {
        // GF(2): the only nonzero element.
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.primitive_element(), Felt(1));

        // GF(7): brute-force the orders of 2, 3, ... ; 3 is the least
        // element of order 6.
        let f7 = Field::new(7, 1).unwrap();
        let mut first = None;
        for x in f7.nonzero_elements() {
            let mut t = 1u64;
            let mut acc = x;
            while acc != ONE {
                acc = f7.mul_slow(acc, x);
                t += 1;
            }
            if t == 6 {
                first = Some(x);
                break;
            }
        }
        assert_eq!(first, Some(Felt(3)));
        assert_eq!(f7.primitive_element(), Felt(3));

        // GF(9): brute-force order check over all 8 nonzero elements.
        let f9 = Field::new(3, 2).unwrap();
        let w = f9.primitive_element();
        let mut t = 1u64;
        let mut acc = w;
        while acc != ONE {
            acc = f9.mul_slow(acc, w);
            t += 1;
        }
        assert_eq!(t, 8);
    }

    #[test]
    fn element_orders() {
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(f7.element_order(Felt(1)).unwrap(), 1);
        // -1 = 6 in GF(7) has order 2.
        assert_eq!(f7.element_order(f7.from_int(-1)).unwrap(), 2);
        assert_eq!(f7.element_order(Felt(3)).unwrap(), 6);
        assert!(f7.element_order(ZERO).is_err());
    }

    #[test]
    fn orders_divide_group_order() {
        for (p, k) in [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (5, 2)] {
            let f = Field::new(p, k).unwrap();
            let q = f.q();
            for x in f.nonzero_elements() {
                let t = f.element_order(x).unwrap();
                assert_eq!((q - 1) % t, 0);
                assert_eq!(f.pow(x, t as u128), ONE);
                if t > 1 {
                    assert_ne!(f.pow(x, (t - 1) as u128), ONE);
                }
            }
            assert_eq!(f.element_order(f.primitive_element()).unwrap(), q - 1);
        }
    }

    #[test]
    fn table_mul_matches_slow_mul() {
        for (p, k) in [(3, 2), (2, 4), (5, 2), (7, 1)] {
            let f = Field::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, k) in [(2, 2), (3, 2), (2, 3)] {
            let f = Field::new(p, k).unwrap();
            let q = f.q();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
            for a in f.nonzero_elements() {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), ONE);
                assert_eq!(f.pow(a, (q - 1) as u128), ONE);
            }
            // Frobenius is additive.
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                }
            }
        }
    }

    #[test]
    fn format_roundtrip() {
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.format_elt(Felt(5)), "(2,1)");
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(f7.format_elt(Felt(5)), "5");
    }
}
