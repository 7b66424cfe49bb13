//! Subspaces of GF(q)^n in reduced row echelon form, and the hermitian
//! geometry of GF(q^2)^n with Gram matrix I.

use crate::field::{Felt, Field, ONE, ZERO};
use crate::matrix::Matrix;

/// A subspace stored by its canonical RREF basis, so equality of subspaces
/// is equality of the representation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<Felt>>,
}

/// Reduces `rows` in place to reduced row echelon form and drops zero rows.
pub fn rref(f: &Field, mut rows: Vec<Vec<Felt>>) -> Vec<Vec<Felt>> {
    if rows.is_empty() {
        return rows;
    }
    let n = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != ZERO) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = f.inv(rows[pivot_row][col]).unwrap();
        for x in rows[pivot_row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r2 in 0..rows.len() {
            if r2 == pivot_row || rows[r2][col] == ZERO {
                continue;
            }
            let factor = rows[r2][col];
            for j in 0..n {
                let s = f.mul(factor, rows[pivot_row][j]);
                rows[r2][j] = f.sub(rows[r2][j], s);
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

impl Subspace {
    pub fn from_spanning(f: &Field, n: usize, vectors: &[Vec<Felt>]) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), n);
        }
        Subspace {
            n,
            basis: rref(f, vectors.to_vec()),
        }
    }

    pub fn zero(n: usize) -> Subspace {
        Subspace { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Subspace {
        let mut basis = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = vec![ZERO; n];
            v[i] = ONE;
            basis.push(v);
        }
        Subspace { n, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Felt>] {
        &self.basis
    }

    pub fn contains(&self, f: &Field, v: &[Felt]) -> bool {
        assert_eq!(v.len(), self.n);
        // Reduce v against the RREF basis.
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|&c| c != ZERO).unwrap();
            if v[pivot] != ZERO {
                let factor = v[pivot];
                for j in 0..self.n {
                    let s = f.mul(factor, row[j]);
                    v[j] = f.sub(v[j], s);
                }
            }
        }
        v.iter().all(|&c| c == ZERO)
    }

    pub fn join(&self, f: &Field, other: &Subspace) -> Subspace {
        assert_eq!(self.n, other.n);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace {
            n: self.n,
            basis: rref(f, rows),
        }
    }

    /// Intersection via the Zassenhaus block trick.
    pub fn intersect(&self, f: &Field, other: &Subspace) -> Subspace {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut rows: Vec<Vec<Felt>> = Vec::new();
        for b in &self.basis {
            let mut row = b.clone();
            row.extend(b.iter().copied());
            rows.push(row);
        }
        for b in &other.basis {
            let mut row = b.clone();
            row.extend(std::iter::repeat_n(ZERO, n));
            rows.push(row);
        }
        let reduced = rref(f, rows);
        let mut inter = Vec::new();
        for row in reduced {
            if row[..n].iter().all(|&c| c == ZERO) {
                let right = row[n..].to_vec();
                if right.iter().any(|&c| c != ZERO) {
                    inter.push(right);
                }
            }
        }
        Subspace {
            n,
            basis: rref(f, inter),
        }
    }

    /// Whether a matrix (acting on rows) maps the subspace into itself.
    pub fn is_invariant_under(&self, f: &Field, m: &Matrix) -> bool {
        self.basis
            .iter()
            .all(|b| self.contains(f, &m.apply_row(f, b)))
    }

    /// If `m` acts on this subspace as multiplication by a single scalar,
    /// returns that scalar.
    pub fn scalar_action(&self, f: &Field, m: &Matrix) -> Option<Felt> {
        let mut scalar: Option<Felt> = None;
        for b in &self.basis {
            let image = m.apply_row(f, b);
            let pivot = b.iter().position(|&c| c != ZERO)?;
            let c = f.div(image[pivot], b[pivot]).ok()?;
            for j in 0..self.n {
                if image[j] != f.mul(c, b[j]) {
                    return None;
                }
            }
            match scalar {
                None => scalar = Some(c),
                Some(s) if s != c => return None,
                _ => {}
            }
        }
        scalar
    }

    /// Right kernel of the basis matrix: all v with `sum_j b[i][j] v[j] = 0`.
    pub fn kernel_of_basis(&self, f: &Field) -> Vec<Vec<Felt>> {
        kernel(f, self.n, &self.basis)
    }
}

/// Basis of `{ v : sum_j rows[i][j] v[j] = 0 for all i }`.
pub fn kernel(f: &Field, n: usize, rows: &[Vec<Felt>]) -> Vec<Vec<Felt>> {
    let reduced = rref(f, rows.to_vec());
    let mut pivots = Vec::new();
    for row in &reduced {
        pivots.push(row.iter().position(|&c| c != ZERO).unwrap());
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivots.contains(&col) {
            continue;
        }
        let mut v = vec![ZERO; n];
        v[col] = ONE;
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = f.neg(row[col]);
        }
        basis.push(v);
    }
    basis
}

/// The natural hermitian space GF(q0^2)^n with form
/// `<u, v> = sum_i u_i v_i^q0` (Gram matrix I, sigma: a -> a^q0).
pub struct HermitianSpace {
    n: usize,
    q0: u64,
    pub field: Field,
}

impl HermitianSpace {
    /// `q0` must be a prime power; the space lives over GF(q0^2).
    pub fn new(n: usize, q0: u64) -> Result<HermitianSpace, crate::error::MatError> {
        let factors = crate::field::prime_factors(q0);
        if factors.len() != 1 {
            return Err(crate::error::MatError::NotPrime(q0));
        }
        let p = factors[0];
        let mut k = 0u32;
        let mut t = q0;
        while t > 1 {
            t /= p;
            k += 1;
        }
        let field = Field::new(p, 2 * k)?;
        debug_assert_eq!(field.q(), q0 * q0);
        Ok(HermitianSpace { n, q0, field })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q0(&self) -> u64 {
        self.q0
    }

    /// The involutory field automorphism a -> a^q0 fixing exactly GF(q0).
    pub fn sigma(&self, a: Felt) -> Felt {
        self.field.pow(a, self.q0 as u128)
    }

    pub fn inner(&self, u: &[Felt], v: &[Felt]) -> Felt {
        let f = &self.field;
        let mut acc = ZERO;
        for (&a, &b) in u.iter().zip(v) {
            acc = f.add(acc, f.mul(a, self.sigma(b)));
        }
        acc
    }

    pub fn is_isotropic(&self, v: &[Felt]) -> bool {
        self.inner(v, v) == ZERO
    }

    pub fn conj_transpose(&self, m: &Matrix) -> Matrix {
        m.transpose().map(|c| self.sigma(c))
    }

    /// Membership in SU(n, q0): determinant one and `A A^(sigma T) = I`.
    pub fn in_special_unitary(&self, a: &Matrix) -> Result<bool, crate::error::MatError> {
        if a.n() != self.n {
            return Err(crate::error::MatError::Dimension(format!(
                "expected {}x{} matrix",
                self.n, self.n
            )));
        }
        let f = &self.field;
        if a.det(f) != ONE {
            return Ok(false);
        }
        Ok(a.mul(f, &self.conj_transpose(a)) == Matrix::identity(self.n))
    }

    /// Perpendicular space under the sigma-twisted form.
    pub fn perp(&self, s: &Subspace) -> Subspace {
        let f = &self.field;
        // <b, v> = sum_j b_j v_j^q0 = 0; substitute w_j = v_j^q0, solve the
        // plain linear system, then pull back through sigma (an involution).
        let ker = kernel(f, self.n, s.basis());
        let pulled: Vec<Vec<Felt>> = ker
            .iter()
            .map(|w| w.iter().map(|&c| self.sigma(c)).collect())
            .collect();
        Subspace::from_spanning(f, self.n, &pulled)
    }

    /// A basis vector e_i.
    pub fn e(&self, i: usize) -> Vec<Felt> {
        let mut v = vec![ZERO; self.n];
        v[i] = ONE;
        v
    }
}
