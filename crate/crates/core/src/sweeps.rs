//! Exhaustive brute-force verifications over small matrix groups.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::MatError;
use crate::field::{Felt, Field, ONE, ZERO};
use crate::matrix::{companion_matrix, Matrix};
use crate::poly::Poly;
use crate::subspace::HermitianSpace;
use crate::unitary::{matrix_group_closure, sl_generators, sl_order, ENUM_CAP};

/// Exhaustive facts about elements of SL(2, q) generating irreducible
/// subgroups with central powers: every matrix with irreducible
/// characteristic polynomial has A^(q^2-1) central, and one with A^(q-1)
/// central exists if and only if q = 3 mod 4, in which case its
/// characteristic polynomial is x^2 + 1.
#[derive(Debug, Clone, Serialize)]
pub struct IrreducibleCentralReport {
    pub q: u64,
    pub group_order: usize,
    pub irreducible_count: usize,
    pub central_q2_count: usize,
    pub central_q1_count: usize,
    pub all_q1_witnesses_have_x2_plus_1: bool,
    pub pass: bool,
}

pub fn check_irreducible_central_powers(q: u64) -> Result<IrreducibleCentralReport, MatError> {
    if q > 13 {
        return Err(MatError::CapExceeded);
    }
    let pf = crate::field::prime_factors(q);
    let p = pf[0];
    let k = q.ilog(p);
    let f = Field::new(p, k)?;
    let elements = matrix_group_closure(&f, &sl_generators(&f, 2), ENUM_CAP)?;
    debug_assert_eq!(elements.len() as u128, sl_order(2, q));

    let x2_plus_1 = Poly::monic(2, &[ONE]);
    let mut irreducible_count = 0usize;
    let mut central_q2_count = 0usize;
    let mut central_q1_count = 0usize;
    let mut all_x2p1 = true;
    for a in &elements {
        let chi = a.char_poly(&f);
        // Quadratic is irreducible iff it has no root.
        let has_root = f.elements().any(|x| chi.eval(&f, x) == ZERO);
        if has_root {
            continue;
        }
        irreducible_count += 1;
        if a.pow(&f, (q * q - 1) as u128).is_scalar() {
            central_q2_count += 1;
        }
        if a.pow(&f, (q - 1) as u128).is_scalar() {
            central_q1_count += 1;
            if chi != x2_plus_1 {
                all_x2p1 = false;
            }
        }
    }
    let pass = central_q2_count == irreducible_count
        && (central_q1_count > 0) == (q % 4 == 3)
        && all_x2p1;
    Ok(IrreducibleCentralReport {
        q,
        group_order: elements.len(),
        irreducible_count,
        central_q2_count,
        central_q1_count,
        all_q1_witnesses_have_x2_plus_1: all_x2p1,
        pass,
    })
}

/// Brute-force facts about the stabilisers in H = SL(n, q) of the lines
/// X = <e_1> and Y = <e_2>:
/// (i)   no commutator of H_X elements is a non-identity scalar,
/// (ii)  C_H(H_X) = Z(H),
/// (iii) C_H(H_X n H_Y) is H_X n H_Y itself when n = 2 or (n, q) = (3, 2),
///       and Z(H) otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct LineStabilizerReport {
    pub n: usize,
    pub q: u64,
    pub group_order: usize,
    pub stabilizer_order: usize,
    pub intersection_order: usize,
    pub part1_no_scalar_commutators: bool,
    pub part2_centralizer_is_center: bool,
    pub part3_expected_self: bool,
    pub part3_ok: bool,
    pub pass: bool,
}

const LINE_STAB_CASES: &[(usize, u64)] = &[(2, 4), (2, 5), (2, 7), (3, 2), (3, 3), (4, 2)];

pub fn check_line_stabilizer_centralizers(
    n: usize,
    q: u64,
) -> Result<LineStabilizerReport, MatError> {
    if !LINE_STAB_CASES.contains(&(n, q)) {
        return Err(MatError::CapExceeded);
    }
    let pf = crate::field::prime_factors(q);
    let p = pf[0];
    let k = q.ilog(p);
    let f = Field::new(p, k)?;
    let elements = matrix_group_closure(&f, &sl_generators(&f, n), ENUM_CAP)?;
    debug_assert_eq!(elements.len() as u128, sl_order(n as u32, q));

    let row_is = |m: &Matrix, row: usize| -> bool {
        (0..n).all(|j| (j == row) != (m.get(row, j) == ZERO))
    };
    let stab_x: Vec<&Matrix> = elements.iter().filter(|m| row_is(m, 0)).collect();
    let stab_y: Vec<&Matrix> = elements.iter().filter(|m| row_is(m, 1)).collect();
    let inter: Vec<&Matrix> = elements
        .iter()
        .filter(|m| row_is(m, 0) && row_is(m, 1))
        .collect();
    let center: Vec<&Matrix> = elements.iter().filter(|m| m.is_scalar()).collect();

    // (i) commutators in H_X, in parallel over the first factor.
    let id = Matrix::identity(n);
    let inverses: Vec<Matrix> = stab_x.iter().map(|m| m.inverse(&f).unwrap()).collect();
    let part1 = stab_x
        .par_iter()
        .enumerate()
        .all(|(i, a)| {
            stab_x.iter().enumerate().all(|(j, b)| {
                let comm = inverses[i]
                    .mul(&f, &inverses[j])
                    .mul(&f, a)
                    .mul(&f, b);
                comm == id || !comm.is_scalar()
            })
        });

    // (ii) centralizer of H_X in H.
    let centralizer_of = |subset: &[&Matrix]| -> Vec<Matrix> {
        elements
            .par_iter()
            .filter(|a| subset.iter().all(|b| a.mul(&f, b) == b.mul(&f, a)))
            .cloned()
            .collect()
    };
    let c_hx = centralizer_of(&stab_x);
    let part2 = c_hx.len() == center.len() && c_hx.iter().all(|m| m.is_scalar());

    // (iii) centralizer of the intersection.
    let c_inter = centralizer_of(&inter);
    let expected_self = n == 2 || (n == 3 && q == 2);
    let part3 = if expected_self {
        let mut want: Vec<&Matrix> = inter.clone();
        let mut got: Vec<&Matrix> = c_inter.iter().collect();
        want.sort_by_key(|m| m.entries().to_vec());
        got.sort_by_key(|m| m.entries().to_vec());
        want.len() == got.len() && want.iter().zip(&got).all(|(a, b)| a == b)
    } else {
        c_inter.len() == center.len() && c_inter.iter().all(|m| m.is_scalar())
    };

    let pass = part1 && part2 && part3;
    Ok(LineStabilizerReport {
        n,
        q,
        group_order: elements.len(),
        stabilizer_order: stab_x.len(),
        intersection_order: inter.len(),
        part1_no_scalar_commutators: part1,
        part2_centralizer_is_center: part2,
        part3_expected_self: expected_self,
        part3_ok: part3,
        pass,
    })
}

/// Checks on the cycle companion matrix R = C(x^n - 1) inside SU(n, q0):
/// R is special unitary because its inverse is its transpose, and the
/// block involution A (diag(-1, -1) block for odd q0, a swap block for
/// even) has non-scalar commutator with R.
#[derive(Debug, Clone, Serialize)]
pub struct CycleCompanionReport {
    pub n: usize,
    pub q0: u64,
    pub in_su: bool,
    pub inverse_is_transpose: bool,
    pub commutator_non_scalar: bool,
    pub pass: bool,
}

pub fn check_cycle_companion(n: usize, q0: u64) -> Result<CycleCompanionReport, MatError> {
    assert!(n >= 3);
    let space = HermitianSpace::new(n, q0)?;
    let f = &space.field;
    let r = companion_matrix(f, &Poly::binomial(f, n, ONE))?;
    let in_su = space.in_special_unitary(&r)?;
    let inverse_is_transpose = r.inverse(f)? == r.transpose();

    let a = if q0 % 2 == 1 {
        let minus = Matrix::diagonal(&[f.from_int(-1), f.from_int(-1)]);
        Matrix::identity(n - 2).direct_sum(&minus)
    } else {
        let swap = Matrix::from_ints(f, &[&[0, 1], &[1, 0]]);
        Matrix::identity(n - 2).direct_sum(&swap)
    };
    debug_assert_eq!(space.in_special_unitary(&a), Ok(true));
    let comm = r.commutator(f, &a);
    let commutator_non_scalar = !comm.is_scalar();
    let pass = in_su && inverse_is_transpose && commutator_non_scalar;
    Ok(CycleCompanionReport {
        n,
        q0,
        in_su,
        inverse_is_transpose,
        commutator_non_scalar,
        pass,
    })
}
