//! Special linear and special unitary groups over small fields: generating
//! sets, exhaustive enumeration, subspace-stabiliser witnesses and the
//! Singer-cycle normaliser construction.

use rustc_hash::FxHashMap;

use crate::error::MatError;
use crate::field::{Felt, Field, ONE, ZERO};
use crate::matrix::{companion_matrix, Matrix};
use crate::poly::Poly;
use crate::subspace::{HermitianSpace, Subspace};

/// Elements cap for exhaustive matrix-group enumeration.
pub const ENUM_CAP: usize = 10_000_000;

/// |SL(n, q)| = q^(n(n-1)/2) * prod_(i=2..n) (q^i - 1).
pub fn sl_order(n: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut order = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        order *= q.pow(i) - 1;
    }
    order
}

/// |SU(n, q)| = q^(n(n-1)/2) * prod_(i=2..n) (q^i - (-1)^i).
pub fn su_order(n: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut order = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        if i % 2 == 0 {
            order *= q.pow(i) - 1;
        } else {
            order *= q.pow(i) + 1;
        }
    }
    order
}

pub fn psl_order(n: u32, q: u64) -> u128 {
    sl_order(n, q) / crate::field::gcd(n as u64, q - 1) as u128
}

pub fn psu_order(n: u32, q: u64) -> u128 {
    su_order(n, q) / crate::field::gcd(n as u64, q + 1) as u128
}

pub fn pgl_order(n: u32, q: u64) -> u128 {
    sl_order(n, q)
}

/// Transvection generators of SL(n, q): `I + w^m E_(i,j)` for `i != j` and
/// `w^m` running over a basis of the additive group.
pub fn sl_generators(f: &Field, n: usize) -> Vec<Matrix> {
    assert!(n >= 2);
    let mut gens = Vec::new();
    let mut scalars = vec![ONE];
    let w = f.primitive_element();
    let mut acc = ONE;
    for _ in 1..f.k() {
        acc = f.mul(acc, w);
        scalars.push(acc);
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for &s in &scalars {
                let mut m = Matrix::identity(n);
                m.set(i, j, s);
                gens.push(m);
            }
        }
    }
    gens
}

/// A nonzero c with c + c^q0 = 0, needed for unitary transvections.
pub fn trace_zero_scalar(space: &HermitianSpace) -> Felt {
    let f = &space.field;
    if space.q0() % 2 == 0 {
        return ONE;
    }
    // c = w^((q0+1)/2) satisfies c^(q0-1) = w^((q0^2-1)/2) = -1.
    let w = f.primitive_element();
    let c = f.pow(w, ((space.q0() + 1) / 2) as u128);
    debug_assert_eq!(f.add(c, space.sigma(c)), ZERO);
    c
}

/// The unitary transvection `x -> x + c <x, s> s` for a singular vector s:
/// determinant one, unitary, acts trivially on the hyperplane s-perp.
pub fn unitary_transvection(space: &HermitianSpace, s: &[Felt], c: Felt) -> Matrix {
    debug_assert!(space.is_isotropic(s));
    let f = &space.field;
    let n = space.n();
    let mut m = Matrix::identity(n);
    for i in 0..n {
        let si = space.sigma(s[i]);
        if si == ZERO {
            continue;
        }
        for j in 0..n {
            let add = f.mul(c, f.mul(si, s[j]));
            m.set(i, j, f.add(m.get(i, j), add));
        }
    }
    m
}

/// All isotropic one-dimensional subspaces, as normalised representative
/// vectors (first nonzero coordinate scaled to one).
pub fn isotropic_points(space: &HermitianSpace) -> Vec<Vec<Felt>> {
    let f = &space.field;
    let n = space.n();
    let mut points = Vec::new();
    // Enumerate canonical projective representatives.
    let q = f.q();
    let mut stack: Vec<Vec<Felt>> = vec![Vec::new()];
    // Canonical rep: leading coordinate 1 at position i, free below.
    for lead in 0..n {
        let tail = n - lead - 1;
        let count = q.pow(tail as u32);
        for idx in 0..count {
            let mut v = vec![ZERO; n];
            v[lead] = ONE;
            let mut m = idx;
            for t in 0..tail {
                v[lead + 1 + t] = Felt(m % q);
                m /= q;
            }
            if v.iter().any(|&c| c != ZERO) && space.is_isotropic(&v) {
                points.push(v);
            }
        }
    }
    stack.clear();
    points
}

/// A generating set for SU(n, q0): unitary transvections at every isotropic
/// point (two additive scalings), plus norm-one diagonal and signed
/// permutation matrices. Verified against the order formula by callers.
///
/// SU(3, 2) is exceptional: over GF(4) the norm map is trivial on nonzero
/// scalars, so every unitary transvection is monomial and the set above
/// closes on the 54-element monomial subgroup. That one group is small
/// enough to saturate by scanning all of GL(3, 4).
pub fn su_generators(space: &HermitianSpace) -> Vec<Matrix> {
    let f = &space.field;
    let n = space.n();
    if n == 3 && space.q0() == 2 {
        return su32_scan(space);
    }
    let mut gens = Vec::new();
    let c = trace_zero_scalar(space);
    // Second scaling: c * w0 where w0 generates GF(q0)^* embedded via norm.
    let w = f.primitive_element();
    let w0 = f.pow(w, (space.q0() + 1) as u128); // primitive element of GF(q0)
    for s in isotropic_points(space) {
        gens.push(unitary_transvection(space, &s, c));
        if space.q0() > 2 {
            gens.push(unitary_transvection(space, &s, f.mul(c, w0)));
        }
    }
    // lambda of norm one spanning the kernel of the norm map.
    let lambda = f.pow(w, (space.q0() - 1) as u128);
    if n >= 2 {
        for i in 0..n - 1 {
            let mut d = Matrix::identity(n);
            d.set(i, i, lambda);
            d.set(i + 1, i + 1, f.inv(lambda).unwrap());
            gens.push(d);
            let mut s = Matrix::identity(n);
            s.set(i, i, ZERO);
            s.set(i + 1, i + 1, ZERO);
            s.set(i, i + 1, ONE);
            s.set(i + 1, i, f.from_int(-1));
            gens.push(s);
        }
    }
    for g in &gens {
        debug_assert_eq!(space.in_special_unitary(g), Ok(true));
    }
    gens
}

/// All 216 elements of SU(3, 2) by direct scan of GL(3, 4).
fn su32_scan(space: &HermitianSpace) -> Vec<Matrix> {
    let f = &space.field;
    let q = f.q();
    let mut out = Vec::new();
    for idx in 0..q.pow(9) {
        let mut m = Matrix::zero(3);
        let mut t = idx;
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, Felt(t % q));
                t /= q;
            }
        }
        if space.in_special_unitary(&m) == Ok(true) {
            out.push(m);
        }
    }
    out
}

/// Exhaustive closure of a matrix generating set, capped.
pub fn matrix_group_closure(
    f: &Field,
    gens: &[Matrix],
    cap: usize,
) -> Result<Vec<Matrix>, MatError> {
    let n = gens.first().map(|g| g.n()).unwrap_or(0);
    let key = |m: &Matrix| -> Vec<u64> { m.entries().iter().map(|c| c.0).collect() };
    let mut seen: FxHashMap<Vec<u64>, u32> = FxHashMap::default();
    let mut elements = vec![Matrix::identity(n)];
    seen.insert(key(&elements[0]), 0);
    let mut frontier = 0usize;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in gens {
            let next = current.mul(f, g);
            let k = key(&next);
            if !seen.contains_key(&k) {
                if elements.len() >= cap {
                    return Err(MatError::CapExceeded);
                }
                seen.insert(k, elements.len() as u32);
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

/// Outcome of the hyperplane-scalar witness construction.
pub struct HyperplaneWitness {
    pub matrix: Matrix,
    /// The scalar by which the matrix acts on the hyperplane.
    pub scalar: Felt,
    pub hyperplane: Subspace,
}

/// A non-scalar element of SU(n, q0) acting as the scalar `lambda = w^(q0-1)`
/// on the nondegenerate hyperplane `<e_2, ..., e_n>`, when one exists:
/// `B = diag(lambda^-(n-1), lambda, ..., lambda)`. Returns `None` exactly
/// when `(q0 + 1) | n`, where every such matrix is forced scalar.
pub fn scalar_on_nondegenerate_hyperplane(space: &HermitianSpace) -> Option<HyperplaneWitness> {
    let f = &space.field;
    let n = space.n();
    if n as u64 % (space.q0() + 1) == 0 {
        return None;
    }
    let w = f.primitive_element();
    let lambda = f.pow(w, (space.q0() - 1) as u128);
    let mut entries = vec![lambda; n];
    entries[0] = f.inv(f.pow(lambda, (n - 1) as u128)).unwrap();
    let b = Matrix::diagonal(&entries);
    let hyperplane = Subspace::from_spanning(f, n, &(1..n).map(|i| space.e(i)).collect::<Vec<_>>());
    debug_assert_eq!(space.in_special_unitary(&b), Ok(true));
    debug_assert!(!b.is_scalar());
    Some(HyperplaneWitness {
        matrix: b,
        scalar: lambda,
        hyperplane,
    })
}

/// A non-scalar element of SU(n, q0) acting trivially on the hyperplane
/// `W = <delta e_1 + e_2, e_3, ..., e_n>` whose perp is totally singular:
/// the 2x2 block `(1+gd, g; -gd^2, 1-gd)` plus an identity block, with
/// `g = w^(q0+1), d = 1` for even q0 and `g = w, d = w^((q0-1)/2)` odd.
pub fn trivial_on_singular_hyperplane(space: &HermitianSpace) -> HyperplaneWitness {
    let f = &space.field;
    let n = space.n();
    assert!(n >= 2);
    let w = f.primitive_element();
    let (gamma, delta) = if space.q0() % 2 == 0 {
        (f.pow(w, (space.q0() + 1) as u128), ONE)
    } else {
        (w, f.pow(w, ((space.q0() - 1) / 2) as u128))
    };
    // delta^(q0+1) = -1 makes delta*e1 + e2 singular.
    debug_assert_eq!(f.pow(delta, (space.q0() + 1) as u128), f.from_int(-1));
    let gd = f.mul(gamma, delta);
    let block = Matrix::from_rows(&[
        vec![f.add(ONE, gd), gamma],
        vec![f.neg(f.mul(gd, delta)), f.sub(ONE, gd)],
    ]);
    let m = block.direct_sum(&Matrix::identity(n - 2));
    let mut w_basis = vec![{
        let mut v = vec![ZERO; n];
        v[0] = delta;
        v[1] = ONE;
        v
    }];
    for i in 2..n {
        w_basis.push(space.e(i));
    }
    let hyperplane = Subspace::from_spanning(f, n, &w_basis);
    debug_assert_eq!(space.in_special_unitary(&m), Ok(true));
    debug_assert!(!m.is_scalar());
    HyperplaneWitness {
        matrix: m,
        scalar: ONE,
        hyperplane,
    }
}

/// Searches `space` for a singular vector inside the subspace, if any.
pub fn singular_vector_in(space: &HermitianSpace, s: &Subspace) -> Option<Vec<Felt>> {
    let f = &space.field;
    match s.dim() {
        0 => None,
        _ => {
            // Scan F-combinations of at most two basis vectors first, then
            // fall back to a full scan of the subspace for tiny fields.
            for b in s.basis() {
                if space.is_isotropic(b) {
                    return Some(b.clone());
                }
            }
            let basis = s.basis();
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    for c in f.nonzero_elements() {
                        let v: Vec<Felt> = basis[i]
                            .iter()
                            .zip(&basis[j])
                            .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                            .collect();
                        if space.is_isotropic(&v) {
                            return Some(v);
                        }
                    }
                }
            }
            // Exhaustive scan (subspace dimension is small at desk scale).
            let q = f.q();
            let dim = s.dim();
            let total = q.pow(dim as u32);
            for idx in 1..total {
                let mut coords = Vec::with_capacity(dim);
                let mut m = idx;
                for _ in 0..dim {
                    coords.push(Felt(m % q));
                    m /= q;
                }
                let mut v = vec![ZERO; s.ambient_dim()];
                for (c, b) in coords.iter().zip(s.basis()) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = f.add(*vi, f.mul(*c, *bi));
                    }
                }
                if space.is_isotropic(&v) {
                    return Some(v);
                }
            }
            None
        }
    }
}

/// A non-scalar SU(n, q0) element acting as a scalar on every subspace in
/// `delta`, constructed from the hyperplane witnesses when the span of
/// `delta` is proper, else found by exhaustive search (capped).
pub fn pointwise_stabilizer_witness(
    space: &HermitianSpace,
    delta: &[Subspace],
) -> Result<Option<Matrix>, MatError> {
    let f = &space.field;
    let n = space.n();
    let mut span = Subspace::zero(n);
    for s in delta {
        span = span.join(f, s);
    }
    let scalar_on_all = |m: &Matrix| -> bool {
        !m.is_scalar() && delta.iter().all(|s| s.scalar_action(f, m).is_some())
    };

    if span.dim() + 2 <= n {
        // Some singular point is perpendicular to the whole span; its
        // transvection fixes the span pointwise.
        let perp = space.perp(&span);
        let s = singular_vector_in(space, &perp)
            .expect("perp of codimension >= 2 contains a singular vector");
        let t = unitary_transvection(space, &s, trace_zero_scalar(space));
        debug_assert_eq!(space.in_special_unitary(&t), Ok(true));
        debug_assert!(scalar_on_all(&t));
        return Ok(Some(t));
    }
    if span.dim() + 1 == n {
        let perp = space.perp(&span);
        let u = &perp.basis()[0];
        if space.is_isotropic(u) {
            let t = unitary_transvection(space, u, trace_zero_scalar(space));
            debug_assert!(scalar_on_all(&t));
            return Ok(Some(t));
        }
        if space.n() as u64 % (space.q0() + 1) != 0 {
            // Projection form of the diagonal witness, valid for any
            // nondegenerate perp vector: lambda off the line, compensating
            // power on it.
            let w = f.primitive_element();
            let lambda = f.pow(w, (space.q0() - 1) as u128);
            let mu = f.inv(f.pow(lambda, (n - 1) as u128)).unwrap();
            let norm_inv = f.inv(space.inner(u, u)).unwrap();
            let mut m = Matrix::zero(n);
            for i in 0..n {
                for j in 0..n {
                    let proj = f.mul(norm_inv, f.mul(space.sigma(u[i]), u[j]));
                    let mut val = f.mul(f.sub(mu, lambda), proj);
                    if i == j {
                        val = f.add(val, lambda);
                    }
                    m.set(i, j, val);
                }
            }
            debug_assert_eq!(space.in_special_unitary(&m), Ok(true));
            debug_assert!(scalar_on_all(&m));
            return Ok(Some(m));
        }
    }
    // No constructive route: exhaust SU(n, q0) if it is small enough.
    let order = su_order(n as u32, space.q0());
    if order > ENUM_CAP as u128 {
        return Err(MatError::CapExceeded);
    }
    let elements = matrix_group_closure(f, &su_generators(space), ENUM_CAP)?;
    debug_assert_eq!(elements.len() as u128, order);
    Ok(elements.into_iter().find(scalar_on_all))
}

/// The diagonal triple `B_1 = diag(l^-2, l, l)`, `B_2`, `B_3` (entries
/// permuted) in SU(3, q0) minus the centre, with the two monomial
/// conjugators carrying B_1 to B_2 and B_3. Requires q0 >= 3: over GF(4)
/// the scalar l = w^(q0-1) has l^3 = 1 and the triple collapses into the
/// centre.
pub struct DiagonalTriple {
    pub b: [Matrix; 3],
    pub conjugators: [Matrix; 2],
    pub lambda: Felt,
}

pub fn su3_diagonal_triple(space: &HermitianSpace) -> Result<DiagonalTriple, MatError> {
    let f = &space.field;
    if space.n() != 3 {
        return Err(MatError::Dimension("triple lives in dimension 3".into()));
    }
    let w = f.primitive_element();
    let lambda = f.pow(w, (space.q0() - 1) as u128);
    if f.pow(lambda, 3) == ONE {
        // Happens exactly when (q0 + 1) | 3, i.e. q0 = 2.
        return Err(MatError::CapExceeded);
    }
    let l2 = f.inv(f.mul(lambda, lambda)).unwrap();
    let b1 = Matrix::diagonal(&[l2, lambda, lambda]);
    let b2 = Matrix::diagonal(&[lambda, l2, lambda]);
    let b3 = Matrix::diagonal(&[lambda, lambda, l2]);
    let c1 = Matrix::from_ints(f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    let c2 = Matrix::from_ints(f, &[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]);
    Ok(DiagonalTriple {
        b: [b1, b2, b3],
        conjugators: [c1, c2],
        lambda,
    })
}

/// Singer pair over GF(q): S generates an irreducible cyclic subgroup of
/// GL(n, q) of order q^n - 1 and B = C(x^n - 1) conjugates S to S^q.
pub struct SingerPair {
    pub s: Matrix,
    pub b: Matrix,
    pub field: Field,
}

/// Builds the Singer pair in a normal basis of GF(q^n) over GF(q): S is the
/// matrix of multiplication by a primitive element, and the q-power
/// Frobenius permutes the basis cyclically, so its matrix is exactly the
/// companion matrix of x^n - 1.
pub fn singer_pair(n: usize, q: u64) -> Result<SingerPair, MatError> {
    if !crate::field::is_prime(n as u64) {
        return Err(MatError::Dimension(format!("{n} must be prime")));
    }
    let pf = crate::field::prime_factors(q);
    if pf.len() != 1 {
        return Err(MatError::NotPrime(q));
    }
    let p = pf[0];
    let k = {
        let mut k = 0u32;
        let mut t = q;
        while t > 1 {
            t /= p;
            k += 1;
        }
        k
    };
    let small = Field::new(p, k)?;
    let big = Field::new(p, k * n as u32)?;
    let prime_field = Field::new(p, 1)?;

    // Embed GF(q) into GF(q^n): send the class of x to a root of the small
    // modulus found by scanning the big field.
    let root = if k == 1 {
        ONE // unused: prime subfield embeds as integer indices
    } else {
        let mcoeffs: Vec<Felt> = small
            .modulus()
            .iter()
            .map(|&c| Felt(c))
            .chain(std::iter::once(ONE))
            .collect();
        let modulus_in_big = Poly::new(mcoeffs);
        big.elements()
            .find(|&z| modulus_in_big.eval(&big, z) == ZERO)
            .expect("small modulus splits in the big field")
    };
    let embed = |x: Felt| -> Felt {
        if k == 1 {
            return x;
        }
        let digits = small.digits(x);
        let mut acc = ZERO;
        let mut pw = ONE;
        for &d in &digits {
            acc = big.add(acc, big.mul(Felt(d), pw));
            pw = big.mul(pw, root);
        }
        acc
    };
    // Inverse embedding table.
    let mut unembed: FxHashMap<Felt, Felt> = FxHashMap::default();
    for x in small.elements() {
        unembed.insert(embed(x), x);
    }

    let kn = (k as usize) * n;
    // GF(p)-coordinates of an element of the big field.
    let digits_of = |z: Felt| -> Vec<Felt> { big.digits(z).into_iter().map(Felt).collect() };

    // Find a normal element: {h^(q^i)} must be a GF(q)-basis, i.e. the
    // p-ary coordinate vectors of h^(q^i) * x^j have full rank.
    let small_gens: Vec<Felt> = (0..k).map(|j| {
        if k == 1 {
            ONE
        } else {
            embed(small.from_digits(&{
                let mut d = vec![0u64; k as usize];
                d[j as usize] = 1;
                d
            }))
        }
    }).collect();

    let rank_full = |h: Felt| -> Option<Vec<Felt>> {
        let mut conjugates = Vec::with_capacity(n);
        let mut acc = h;
        for _ in 0..n {
            conjugates.push(acc);
            acc = big.pow(acc, q as u128);
        }
        if acc != h {
            return None;
        }
        let mut rows = Vec::with_capacity(kn);
        for &c in &conjugates {
            for &g in &small_gens {
                rows.push(digits_of(big.mul(c, g)));
            }
        }
        let reduced = crate::subspace::rref(&prime_field, rows);
        if reduced.len() == kn {
            Some(conjugates)
        } else {
            None
        }
    };

    let mut normal = None;
    for h in big.nonzero_elements() {
        if let Some(conj) = rank_full(h) {
            normal = Some(conj);
            break;
        }
    }
    let basis = normal.expect("normal bases exist for every finite extension");

    // Coordinate matrix over GF(p): columns are the p-ary digit vectors of
    // h_i * x^j; solving against it recovers GF(q)-coordinates.
    let mut cols = Matrix::zero(kn);
    for (bi, &c) in basis.iter().enumerate() {
        for (j, &g) in small_gens.iter().enumerate() {
            let d = digits_of(big.mul(c, g));
            for (r, &val) in d.iter().enumerate() {
                cols.set(r, bi * k as usize + j, val);
            }
        }
    }
    let cols_inv = cols.inverse(&prime_field)?;

    let coords = |z: Felt| -> Vec<Felt> {
        // Solve cols * sol = digits(z): sol = cols^-1 * digits.
        let d = digits_of(z);
        let mut sol = vec![ZERO; kn];
        for (r, s) in sol.iter_mut().enumerate() {
            let mut acc = ZERO;
            for (c, &dc) in d.iter().enumerate() {
                acc = prime_field.add(acc, prime_field.mul(cols_inv.get(r, c), dc));
            }
            *s = acc;
        }
        // Group p-ary digits back into GF(q) elements.
        (0..n)
            .map(|i| {
                let digits: Vec<u64> =
                    (0..k as usize).map(|j| sol[i * k as usize + j].0).collect();
                small.from_digits(&digits)
            })
            .collect()
    };

    let g = big.primitive_element();
    let mut s = Matrix::zero(n);
    for (i, &hi) in basis.iter().enumerate() {
        let row = coords(big.mul(g, hi));
        for (j, &c) in row.iter().enumerate() {
            s.set(i, j, c);
        }
    }
    let b = companion_matrix(&small, &Poly::binomial(&small, n, ONE))?;
    let _ = unembed;
    Ok(SingerPair { s, b, field: small })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_closure_matches_order_formula() {
        for (n, q, p, k) in [(2usize, 4u64, 2u64, 2u32), (2, 5, 5, 1), (3, 2, 2, 1), (3, 3, 3, 1)] {
            let f = Field::new(p, k).unwrap();
            let gens = sl_generators(&f, n);
            let elements = matrix_group_closure(&f, &gens, ENUM_CAP).unwrap();
            assert_eq!(elements.len() as u128, sl_order(n as u32, q));
            for m in elements.iter().take(50) {
                assert_eq!(m.det(&f), ONE);
            }
        }
    }

    #[test]
    fn su_closure_matches_order_formula() {
        for (n, q0) in [(3usize, 2u64), (3, 3), (4, 2)] {
            let space = HermitianSpace::new(n, q0).unwrap();
            let gens = su_generators(&space);
            let elements = matrix_group_closure(&space.field, &gens, ENUM_CAP).unwrap();
            assert_eq!(
                elements.len() as u128,
                su_order(n as u32, q0),
                "SU({n},{q0})"
            );
        }
    }

    #[test]
    fn transvections_are_special_unitary() {
        for (n, q0) in [(3usize, 2u64), (3, 3), (3, 4), (4, 2), (5, 2)] {
            let space = HermitianSpace::new(n, q0).unwrap();
            let c = trace_zero_scalar(&space);
            for s in isotropic_points(&space) {
                let t = unitary_transvection(&space, &s, c);
                assert_eq!(space.in_special_unitary(&t), Ok(true));
                // Trivial on s-perp.
                let line = Subspace::from_spanning(&space.field, n, &[s.clone()]);
                let perp = space.perp(&line);
                assert_eq!(perp.scalar_action(&space.field, &t), Some(ONE));
            }
        }
    }

    #[test]
    fn nondegenerate_hyperplane_witness() {
        // (q0 + 1) | n blocks the construction: SU(3, 2).
        let space = HermitianSpace::new(3, 2).unwrap();
        assert!(scalar_on_nondegenerate_hyperplane(&space).is_none());

        // n = 3, q0 = 3 and n = 5, q0 = 2 admit witnesses.
        for (n, q0) in [(3usize, 3u64), (5, 2)] {
            let space = HermitianSpace::new(n, q0).unwrap();
            let w = scalar_on_nondegenerate_hyperplane(&space).unwrap();
            assert_eq!(space.in_special_unitary(&w.matrix), Ok(true));
            assert!(!w.matrix.is_scalar());
            assert_eq!(
                w.hyperplane.scalar_action(&space.field, &w.matrix),
                Some(w.scalar)
            );
        }
    }

    #[test]
    fn singular_hyperplane_witness() {
        for (n, q0) in [(3usize, 2u64), (3, 3), (4, 2), (3, 4), (5, 2)] {
            let space = HermitianSpace::new(n, q0).unwrap();
            let w = trivial_on_singular_hyperplane(&space);
            assert_eq!(space.in_special_unitary(&w.matrix), Ok(true), "SU({n},{q0})");
            assert!(!w.matrix.is_scalar());
            // Pointwise fixed: scalar action with scalar one.
            assert_eq!(
                w.hyperplane.scalar_action(&space.field, &w.matrix),
                Some(ONE)
            );
            assert_eq!(w.hyperplane.dim(), n - 1);
        }
    }

    #[test]
    fn su32_exhaustive_obstruction() {
        // Over SU(3, 2) no non-scalar matrix acts as a scalar on the
        // nondegenerate hyperplane <e_2, e_3>; checked exhaustively.
        let space = HermitianSpace::new(3, 2).unwrap();
        let f = &space.field;
        let elements =
            matrix_group_closure(f, &su_generators(&space), ENUM_CAP).unwrap();
        assert_eq!(elements.len() as u128, su_order(3, 2));
        let hyper = Subspace::from_spanning(f, 3, &[space.e(1), space.e(2)]);
        for m in &elements {
            if !m.is_scalar() {
                assert_eq!(hyper.scalar_action(f, m), None);
            }
        }
    }

    #[test]
    fn diagonal_triple_checks() {
        for q0 in [3u64, 4, 5] {
            let space = HermitianSpace::new(3, q0).unwrap();
            let f = &space.field;
            let t = su3_diagonal_triple(&space).unwrap();
            for b in &t.b {
                assert_eq!(space.in_special_unitary(b), Ok(true));
                assert!(!b.is_scalar());
            }
            for c in &t.conjugators {
                assert_eq!(space.in_special_unitary(c), Ok(true));
            }
            assert_eq!(t.b[0].conjugate_by(f, &t.conjugators[0]), t.b[1]);
            assert_eq!(t.b[0].conjugate_by(f, &t.conjugators[1]), t.b[2]);
        }
        // q0 = 2: the triple degenerates to scalars.
        let space = HermitianSpace::new(3, 2).unwrap();
        assert!(su3_diagonal_triple(&space).is_err());
    }

    #[test]
    fn singer_pair_relations() {
        // Linear: n = 2 over GF(4) gives S of order 15 with S^B = S^4.
        let pair = singer_pair(2, 4).unwrap();
        let f = &pair.field;
        assert_eq!(pair.s.order(f, 100).unwrap(), 15);
        assert_eq!(
            pair.s.conjugate_by(f, &pair.b),
            pair.s.pow(f, 4)
        );

        // n = 3 over GF(2): S of order 7 in GL(3, 2).
        let pair = singer_pair(3, 2).unwrap();
        let f = &pair.field;
        assert_eq!(pair.s.order(f, 100).unwrap(), 7);
        assert_eq!(pair.s.conjugate_by(f, &pair.b), pair.s.pow(f, 2));
        // B is the 3-cycle companion matrix, determinant 1 (n odd).
        assert_eq!(pair.b.det(f), ONE);

        // Composite n is rejected.
        assert!(singer_pair(4, 2).is_err());
    }

    #[test]
    fn singer_normalizer_order_in_gl32() {
        // Enumerate GL(3, 2) = SL(3, 2) and count the normaliser of <S>:
        // must be n * (q^n - 1) = 21.
        let pair = singer_pair(3, 2).unwrap();
        let f = &pair.field;
        let elements = matrix_group_closure(&f, &sl_generators(&f, 3), ENUM_CAP).unwrap();
        assert_eq!(elements.len(), 168);
        let mut cyclic = Vec::new();
        let mut acc = Matrix::identity(3);
        for _ in 0..7 {
            acc = acc.mul(&f, &pair.s);
            cyclic.push(acc.clone());
        }
        let in_s = |m: &Matrix| cyclic.contains(m);
        let count = elements
            .iter()
            .filter(|g| {
                let conj = pair.s.conjugate_by(&f, g);
                in_s(&conj)
            })
            .count();
        assert_eq!(count, 21);
    }

    #[test]
    fn pointwise_stabilizer_cases() {
        // Codimension >= 2 always yields a transvection witness.
        let space = HermitianSpace::new(3, 3).unwrap();
        let f = &space.field;
        let line = Subspace::from_spanning(f, 3, &[space.e(0)]);
        let w = pointwise_stabilizer_witness(&space, &[line.clone()])
            .unwrap()
            .unwrap();
        assert_eq!(space.in_special_unitary(&w), Ok(true));
        assert!(!w.is_scalar());
        assert!(line.scalar_action(f, &w).is_some());

        // Hyperplane with nondegenerate perp, (q0+1) coprime case.
        let hyper = Subspace::from_spanning(f, 3, &[space.e(1), space.e(2)]);
        let w = pointwise_stabilizer_witness(&space, &[hyper.clone()])
            .unwrap()
            .unwrap();
        assert!(hyper.scalar_action(f, &w).is_some());
        assert!(!w.is_scalar());

        // Three generic lines spanning V in SU(3, 3): exhaustive search
        // reports that no witness exists.
        let l1 = Subspace::from_spanning(f, 3, &[space.e(0)]);
        let l2 = Subspace::from_spanning(f, 3, &[space.e(1)]);
        let sum: Vec<Felt> = vec![ONE, ONE, ONE];
        let l3 = Subspace::from_spanning(f, 3, &[sum]);
        let got = pointwise_stabilizer_witness(&space, &[l1, l2, l3]).unwrap();
        assert!(got.is_none());
    }
}
