//! Dense square matrices over GF(q).
//!
//! Vectors are rows and matrices act on the right: `x -> x * A`. The
//! stabiliser of the line spanned by `e_1` therefore consists of matrices
//! whose first row is `(a, 0, ..., 0)`.

use crate::error::MatError;
use crate::field::{Felt, Field, ONE, ZERO};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    n: usize,
    e: Vec<Felt>,
}

impl Matrix {
    pub fn zero(n: usize) -> Matrix {
        Matrix { n, e: vec![ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, ONE);
        }
        m
    }

    pub fn scalar(n: usize, c: Felt) -> Matrix {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn diagonal(entries: &[Felt]) -> Matrix {
        let mut m = Matrix::zero(entries.len());
        for (i, &c) in entries.iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Felt>]) -> Matrix {
        let n = rows.len();
        let mut m = Matrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "rows must form a square matrix");
            for (j, &c) in row.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Builds a matrix over `f` from integer entries (reduced mod p).
    pub fn from_ints(f: &Field, rows: &[&[i64]]) -> Matrix {
        let n = rows.len();
        let mut m = Matrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, f.from_int(v));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Felt {
        self.e[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, c: Felt) {
        self.e[i * self.n + j] = c;
    }

    pub fn entries(&self) -> &[Felt] {
        &self.e
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b != ZERO {
                        out.set(i, j, f.add(out.get(i, j), f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let e = self
            .e
            .iter()
            .zip(&other.e)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix { n: self.n, e }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn map(&self, mut g: impl FnMut(Felt) -> Felt) -> Matrix {
        Matrix {
            n: self.n,
            e: self.e.iter().map(|&c| g(c)).collect(),
        }
    }

    pub fn pow(&self, f: &Field, mut e: u128) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, bounded by `cap`.
    pub fn order(&self, f: &Field, cap: u64) -> Result<u64, MatError> {
        let id = Matrix::identity(self.n);
        let mut acc = self.clone();
        let mut t = 1u64;
        while acc != id {
            acc = acc.mul(f, self);
            t += 1;
            if t > cap {
                return Err(MatError::CapExceeded);
            }
        }
        Ok(t)
    }

    /// Row-vector action `v * M`.
    pub fn apply_row(&self, f: &Field, v: &[Felt]) -> Vec<Felt> {
        assert_eq!(v.len(), self.n);
        let n = self.n;
        let mut out = vec![ZERO; n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == ZERO {
                continue;
            }
            for (o, e) in out.iter_mut().zip(&self.e[i * n..(i + 1) * n]) {
                *o = f.add(*o, f.mul(vi, *e));
            }
        }
        out
    }

    pub fn det(&self, f: &Field) -> Felt {
        let n = self.n;
        let mut m = self.e.clone();
        let mut det = ONE;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != ZERO);
            let Some(pr) = pivot else {
                return ZERO;
            };
            if pr != col {
                for j in 0..n {
                    m.swap(pr * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[col * n + col];
            det = f.mul(det, pv);
            let inv = f.inv(pv).unwrap();
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], inv);
                if factor == ZERO {
                    continue;
                }
                for j in col..n {
                    let s = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Result<Matrix, MatError> {
        let n = self.n;
        let mut m = self.e.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != ZERO).ok_or(MatError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                    inv.e.swap(pivot * n + j, col * n + j);
                }
            }
            let pv_inv = f.inv(m[col * n + col]).unwrap();
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], pv_inv);
                inv.e[col * n + j] = f.mul(inv.e[col * n + j], pv_inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m[r * n + col];
                if factor == ZERO {
                    continue;
                }
                for j in 0..n {
                    let s = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s);
                    let s2 = f.mul(factor, inv.e[col * n + j]);
                    inv.e[r * n + j] = f.sub(inv.e[r * n + j], s2);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.n;
        let c = self.get(0, 0);
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { c } else { ZERO };
                if self.get(i, j) != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn commutator(&self, f: &Field, other: &Matrix) -> Matrix {
        let ai = self.inverse(f).expect("invertible");
        let bi = other.inverse(f).expect("invertible");
        ai.mul(f, &bi).mul(f, self).mul(f, other)
    }

    pub fn conjugate_by(&self, f: &Field, g: &Matrix) -> Matrix {
        let gi = g.inverse(f).expect("invertible conjugator");
        gi.mul(f, self).mul(f, g)
    }

    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let n = self.n + other.n;
        let mut out = Matrix::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out.set(self.n + i, self.n + j, other.get(i, j));
            }
        }
        out
    }

    /// Characteristic polynomial det(xI - A) by the division-free Berkowitz
    /// recursion; always monic of degree n.
    pub fn char_poly(&self, f: &Field) -> Poly {
        let n = self.n;
        if n == 0 {
            return Poly::one();
        }
        // Coefficient vector, leading coefficient first.
        let mut c = vec![ONE, f.neg(self.get(0, 0))];
        for r in 1..n {
            // Toeplitz column: 1, -a_rr, -(R S), -(R A_r S), ...
            let mut t = Vec::with_capacity(r + 2);
            t.push(ONE);
            t.push(f.neg(self.get(r, r)));
            let mut v: Vec<Felt> = (0..r).map(|i| self.get(i, r)).collect();
            for _ in 0..r {
                let mut dot = ZERO;
                for j in 0..r {
                    dot = f.add(dot, f.mul(self.get(r, j), v[j]));
                }
                t.push(f.neg(dot));
                let mut nv = vec![ZERO; r];
                for (i, nvi) in nv.iter_mut().enumerate() {
                    let mut acc = ZERO;
                    for j in 0..r {
                        acc = f.add(acc, f.mul(self.get(i, j), v[j]));
                    }
                    *nvi = acc;
                }
                v = nv;
            }
            let mut nc = vec![ZERO; r + 2];
            for (i, nci) in nc.iter_mut().enumerate() {
                let mut acc = ZERO;
                for (j, &cj) in c.iter().enumerate().take(i + 1) {
                    if i - j < t.len() {
                        acc = f.add(acc, f.mul(t[i - j], cj));
                    }
                }
                *nci = acc;
            }
            c = nc;
        }
        c.reverse();
        Poly::new(c)
    }

    pub fn format(&self, f: &Field) -> String {
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| f.format_elt(self.get(i, j))).collect();
            rows.push(format!("[{}]", row.join(" ")));
        }
        rows.join("\n")
    }
}

/// The companion matrix of a monic polynomial
/// `f(x) = x^n - b_n x^(n-1) - ... - b_2 x - b_1`: the block matrix with
/// `I_(n-1)` in the upper right and last row `(b_1 b_2 ... b_n)`.
pub fn companion_matrix(field: &Field, f: &Poly) -> Result<Matrix, MatError> {
    if !f.is_monic() {
        return Err(MatError::NonMonic);
    }
    let n = f.degree().unwrap();
    if n == 0 {
        return Err(MatError::Dimension("degree must be at least 1".into()));
    }
    let mut m = Matrix::zero(n);
    for i in 0..n - 1 {
        m.set(i, i + 1, ONE);
    }
    for j in 0..n {
        m.set(n - 1, j, field.neg(f.coeff(j)));
    }
    Ok(m)
}

/// The hypercompanion matrix of f^k for irreducible f: block
/// upper-bidiagonal with C(f) on the diagonal and E_(n,1) above it.
/// Its characteristic polynomial is f^k.
pub fn hypercompanion_matrix(field: &Field, f: &Poly, k: usize) -> Result<Matrix, MatError> {
    if !f.is_monic() {
        return Err(MatError::NonMonic);
    }
    if !f.is_irreducible(field)? {
        return Err(MatError::Reducible);
    }
    assert!(k >= 1);
    let n = f.degree().unwrap();
    let c = companion_matrix(field, f)?;
    let size = n * k;
    let mut m = Matrix::zero(size);
    for b in 0..k {
        for i in 0..n {
            for j in 0..n {
                m.set(b * n + i, b * n + j, c.get(i, j));
            }
        }
        if b + 1 < k {
            m.set(b * n + (n - 1), (b + 1) * n, ONE);
        }
    }
    Ok(m)
}
