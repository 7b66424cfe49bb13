//! Independent reference implementations used by the verification suites.
//!
//! Everything in this module deliberately avoids the main implementation
//! paths: the factorizer works by raw trial division, the irreducibility
//! certificate uses Frobenius orbits, and the characteristic polynomial is a
//! cofactor expansion over the polynomial ring. These are the slow,
//! obviously-correct routes that the fast paths are checked against.

use crate::field::{Felt, Field, ONE, ZERO};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Estimated number of candidate divisors trial division would enumerate to
/// fully factor a polynomial whose smallest irreducible factor has the given
/// degree.
pub fn trial_division_cost(q: u64, max_scan_degree: usize) -> u128 {
    let mut cost: u128 = 0;
    for d in 1..=max_scan_degree {
        cost = cost.saturating_add((q as u128).saturating_pow(d as u32));
    }
    cost
}

/// Factorizes a monic polynomial into monic irreducible factors (with
/// multiplicity) by trial division: scan candidate divisors degree by
/// degree, dividing out every factor found. A polynomial with no divisor of
/// degree at most half its own is irreducible.
///
/// Runtime is exponential in the smallest factor degree; callers gate on
/// [`trial_division_cost`].
pub fn trial_division_factorize(f: &Field, target: &Poly) -> Vec<Poly> {
    assert!(target.is_monic(), "factorization target must be monic");
    let q = f.q();
    let mut rest = target.clone();
    let mut factors = Vec::new();
    let mut d = 1usize;
    loop {
        let deg = match rest.degree() {
            None | Some(0) => break,
            Some(deg) => deg,
        };
        if d > deg / 2 {
            // No divisor of degree <= deg/2 exists, so the rest is
            // irreducible.
            factors.push(rest);
            break;
        }
        let count = q.pow(d as u32);
        for idx in 0..count {
            let mut low = Vec::with_capacity(d);
            let mut n = idx;
            for _ in 0..d {
                low.push(Felt(n % q));
                n /= q;
            }
            let cand = Poly::monic(d, &low);
            loop {
                let (quot, rem) = rest.divrem(f, &cand);
                if rem.is_zero() {
                    factors.push(cand.clone());
                    rest = quot;
                } else {
                    break;
                }
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
        // All candidates of degree d have been divided out.
        d += 1;
    }
    factors.sort();
    factors
}

/// Deterministic irreducibility certificate via Frobenius orbits: a monic
/// degree-n polynomial f over GF(q) is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/l)) - x, f) = 1 for every prime l dividing n.
pub fn frobenius_irreducible(f: &Field, target: &Poly) -> bool {
    assert!(target.is_monic());
    let n = target.degree().expect("nonzero polynomial");
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let q = f.q() as u128;
    let x = Poly::x();
    // x^(q^d) mod f, computed by iterating d successive q-th powers.
    let frob_power = |d: usize| -> Poly {
        let mut acc = x.divrem(f, target).1;
        for _ in 0..d {
            acc = acc.pow_mod(f, q, target);
        }
        acc
    };
    for l in crate::field::prime_factors(n as u64) {
        let d = n / l as usize;
        let y = frob_power(d).sub(f, &x);
        let g = y.gcd(f, target);
        if g.degree() != Some(0) {
            return false;
        }
    }
    frob_power(n) == x.divrem(f, target).1
}

/// Characteristic polynomial det(xI - A) by cofactor expansion over the
/// polynomial ring. Exponential in n; for cross-checks on small matrices.
pub fn charpoly_cofactor(f: &Field, a: &Matrix) -> Poly {
    let n = a.n();
    // Entries of xI - A as polynomials.
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut c = vec![f.neg(a.get(i, j))];
            if i == j {
                c.push(ONE);
            }
            entries.push(Poly::new(c));
        }
    }
    poly_det(f, &entries, n, &(0..n).collect::<Vec<_>>())
}

fn poly_det(f: &Field, entries: &[Poly], n: usize, cols: &[usize]) -> Poly {
    let row = n - cols.len();
    if cols.len() == 1 {
        return entries[row * n + cols[0]].clone();
    }
    let mut acc = Poly::zero();
    for (pos, &j) in cols.iter().enumerate() {
        let e = &entries[row * n + j];
        if e.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != j)
            .collect();
        let minor = poly_det(f, entries, n, &sub_cols);
        let term = e.mul(f, &minor);
        if pos % 2 == 0 {
            acc = acc.add(f, &term);
        } else {
            acc = acc.sub(f, &term);
        }
    }
    acc
}

/// Naive multiplicative order by repeated multiplication.
pub fn order_by_powers(f: &Field, x: Felt) -> u64 {
    assert_ne!(x, ZERO);
    let mut acc = x;
    let mut t = 1u64;
    while acc != ONE {
        acc = f.mul(acc, x);
        t += 1;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::binomial_factors;

    #[test]
    fn trial_division_agrees_with_direct_example() {
        // x^6 - 6 over GF(7) factors into three quadratics x^2 - b, b^3 = 6.
        let f = Field::new(7, 1).unwrap();
        let target = Poly::binomial(&f, 6, Felt(6));
        let mut got = trial_division_factorize(&f, &target);
        got.sort();
        let mut expect = binomial_factors(&f, Felt(6)).unwrap();
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn trial_division_handles_repeated_factors() {
        let f = Field::new(5, 1).unwrap();
        // (x + 1)^2 (x^2 + 2)
        let sq = Poly::monic(1, &[ONE]);
        let irr = Poly::monic(2, &[Felt(2)]);
        let target = sq.mul(&f, &sq).mul(&f, &irr);
        let got = trial_division_factorize(&f, &target);
        assert_eq!(got.len(), 3);
        let mut prod = Poly::one();
        for p in &got {
            prod = prod.mul(&f, p);
        }
        assert_eq!(prod, target);
    }

    #[test]
    fn frobenius_matches_trial_division() {
        for (p, k) in [(2u64, 1u32), (3, 1), (5, 1), (7, 1), (3, 2), (2, 2)] {
            let f = Field::new(p, k).unwrap();
            let q = f.q();
            // All monic cubics.
            for idx in 0..q.pow(3) {
                let mut low = Vec::new();
                let mut n = idx;
                for _ in 0..3 {
                    low.push(Felt(n % q));
                    n /= q;
                }
                let poly = Poly::monic(3, &low);
                assert_eq!(
                    frobenius_irreducible(&f, &poly),
                    poly.is_irreducible(&f).unwrap(),
                    "mismatch for {} over GF({})",
                    poly.format(&f),
                    q
                );
            }
        }
    }
}
