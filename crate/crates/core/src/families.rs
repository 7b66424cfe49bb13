//! Constructions of the named group families as permutation groups:
//! alternating and symmetric groups in their natural action, projective
//! linear and unitary groups on projective or isotropic points, the small
//! Mathieu groups from literal generators, and groups read from files.

use rustc_hash::FxHashMap;

use crate::error::PermError;
use crate::field::{Felt, Field, ONE, ZERO};
use crate::group::PermGroup;
use crate::matrix::Matrix;
use crate::perm::{parse_cycles, Perm};
use crate::subspace::HermitianSpace;
use crate::unitary::{
    isotropic_points, pgl_order, psl_order, psu_order, sl_generators, su_generators,
};

pub const MAX_DEGREE: usize = 10_000;
pub const MAX_ORDER: u128 = 100_000_000;

/// A group family descriptor, as accepted by the command line
/// (`alt:5`, `psl:2:11`, `mathieu:11`, `file:gens.grp`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Alternating(usize),
    Symmetric(usize),
    Psl(usize, u64),
    Pgl(usize, u64),
    Psu(usize, u64),
    Mathieu(usize),
    FromFile(String),
}

impl GroupSpec {
    pub fn parse(s: &str) -> Result<GroupSpec, PermError> {
        let parts: Vec<&str> = s.split(':').collect();
        let int = |t: &str| -> Result<usize, PermError> {
            t.parse()
                .map_err(|_| PermError::Parse(format!("bad integer '{t}'")))
        };
        match parts.as_slice() {
            ["alt", n] => Ok(GroupSpec::Alternating(int(n)?)),
            ["sym", n] => Ok(GroupSpec::Symmetric(int(n)?)),
            ["psl", n, q] => Ok(GroupSpec::Psl(int(n)?, int(q)? as u64)),
            ["pgl", n, q] => Ok(GroupSpec::Pgl(int(n)?, int(q)? as u64)),
            ["psu", n, q] => Ok(GroupSpec::Psu(int(n)?, int(q)? as u64)),
            ["mathieu", n] => Ok(GroupSpec::Mathieu(int(n)?)),
            ["file", rest @ ..] => Ok(GroupSpec::FromFile(rest.join(":"))),
            _ => Err(PermError::UnsupportedFamily(s.into())),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            GroupSpec::Alternating(n) => format!("alt:{n}"),
            GroupSpec::Symmetric(n) => format!("sym:{n}"),
            GroupSpec::Psl(n, q) => format!("psl:{n}:{q}"),
            GroupSpec::Pgl(n, q) => format!("pgl:{n}:{q}"),
            GroupSpec::Psu(n, q) => format!("psu:{n}:{q}"),
            GroupSpec::Mathieu(n) => format!("mathieu:{n}"),
            GroupSpec::FromFile(p) => format!("file:{p}"),
        }
    }
}

pub fn make_group(spec: &GroupSpec) -> Result<PermGroup, PermError> {
    let group = match spec {
        GroupSpec::Alternating(n) => alternating(*n)?,
        GroupSpec::Symmetric(n) => symmetric(*n)?,
        GroupSpec::Psl(n, q) => projective_special_linear(*n, *q)?,
        GroupSpec::Pgl(n, q) => projective_general_linear(*n, *q)?,
        GroupSpec::Psu(n, q) => projective_special_unitary(*n, *q)?,
        GroupSpec::Mathieu(n) => mathieu(*n)?,
        GroupSpec::FromFile(path) => crate::fileio::read_group_file(std::path::Path::new(path))?,
    };
    if group.order() > MAX_ORDER {
        return Err(PermError::OrderCap(group.order(), MAX_ORDER));
    }
    Ok(group)
}

pub fn alternating(n: usize) -> Result<PermGroup, PermError> {
    if n < 3 || n > MAX_DEGREE {
        return Err(PermError::UnsupportedFamily(format!("alt:{n}")));
    }
    let three = Perm::from_cycles(n, &[vec![0, 1, 2]])?;
    let long = if n % 2 == 1 {
        Perm::from_cycles(n, &[(0..n as u16).collect()])?
    } else {
        Perm::from_cycles(n, &[(1..n as u16).collect()])?
    };
    let group = PermGroup::new(n, vec![three, long])?;
    let expect: u128 = (1..=n as u128).product::<u128>() / 2;
    assert_eq!(group.order(), expect, "alternating order formula");
    Ok(group)
}

pub fn symmetric(n: usize) -> Result<PermGroup, PermError> {
    if n < 2 || n > MAX_DEGREE {
        return Err(PermError::UnsupportedFamily(format!("sym:{n}")));
    }
    let swap = Perm::from_cycles(n, &[vec![0, 1]])?;
    let long = Perm::from_cycles(n, &[(0..n as u16).collect()])?;
    let group = PermGroup::new(n, vec![swap, long])?;
    let expect: u128 = (1..=n as u128).product();
    assert_eq!(group.order(), expect, "symmetric order formula");
    Ok(group)
}

/// Canonical representative of a projective point: first nonzero
/// coordinate scaled to one.
fn normalize_point(f: &Field, v: &mut [Felt]) {
    let lead = v.iter().find(|&&c| c != ZERO).copied();
    if let Some(c) = lead {
        if c != ONE {
            let inv = f.inv(c).unwrap();
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
    }
}

/// All points of projective (n-1)-space over the field, canonicalised.
fn projective_points(f: &Field, n: usize) -> Vec<Vec<Felt>> {
    let q = f.q();
    let mut points = Vec::new();
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
            points.push(v);
        }
    }
    points
}

/// Converts matrix generators to permutations of a point list.
fn matrices_to_perms(
    f: &Field,
    points: &[Vec<Felt>],
    mats: &[Matrix],
) -> Result<Vec<Perm>, PermError> {
    if points.len() > MAX_DEGREE {
        return Err(PermError::DegreeCap(points.len(), MAX_DEGREE));
    }
    let mut index: FxHashMap<Vec<u64>, u16> = FxHashMap::default();
    for (i, p) in points.iter().enumerate() {
        index.insert(p.iter().map(|c| c.0).collect(), i as u16);
    }
    let mut perms = Vec::with_capacity(mats.len());
    for m in mats {
        let mut img = Vec::with_capacity(points.len());
        for p in points {
            let mut image = m.apply_row(f, p);
            normalize_point(f, &mut image);
            let key: Vec<u64> = image.iter().map(|c| c.0).collect();
            img.push(*index.get(&key).expect("action preserves the point set"));
        }
        perms.push(Perm::from_images(img)?);
    }
    Ok(perms)
}

/// Deduplicates identity and repeated permutation images of generators.
fn dedup_gens(perms: Vec<Perm>) -> Vec<Perm> {
    let mut out: Vec<Perm> = Vec::new();
    for p in perms {
        if !p.is_identity() && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

pub fn projective_special_linear(n: usize, q: u64) -> Result<PermGroup, PermError> {
    if n < 2 {
        return Err(PermError::UnsupportedFamily(format!("psl:{n}:{q}")));
    }
    let pf = crate::field::prime_factors(q);
    if pf.len() != 1 {
        return Err(PermError::UnsupportedFamily(format!("psl:{n}:{q}")));
    }
    let f = Field::new(pf[0], q.ilog(pf[0])).map_err(crate::error::MatError::from)?;
    let points = projective_points(&f, n);
    let perms = dedup_gens(matrices_to_perms(&f, &points, &sl_generators(&f, n))?);
    let group = PermGroup::new(points.len(), perms)?;
    assert_eq!(group.order(), psl_order(n as u32, q), "psl order formula");
    Ok(group)
}

pub fn projective_general_linear(n: usize, q: u64) -> Result<PermGroup, PermError> {
    if n < 2 {
        return Err(PermError::UnsupportedFamily(format!("pgl:{n}:{q}")));
    }
    let pf = crate::field::prime_factors(q);
    if pf.len() != 1 {
        return Err(PermError::UnsupportedFamily(format!("pgl:{n}:{q}")));
    }
    let f = Field::new(pf[0], q.ilog(pf[0])).map_err(crate::error::MatError::from)?;
    let points = projective_points(&f, n);
    let mut mats = sl_generators(&f, n);
    let mut d = Matrix::identity(n);
    d.set(0, 0, f.primitive_element());
    mats.push(d);
    let perms = dedup_gens(matrices_to_perms(&f, &points, &mats)?);
    let group = PermGroup::new(points.len(), perms)?;
    assert_eq!(group.order(), pgl_order(n as u32, q), "pgl order formula");
    Ok(group)
}

pub fn projective_special_unitary(n: usize, q: u64) -> Result<PermGroup, PermError> {
    if n < 3 {
        return Err(PermError::UnsupportedFamily(format!("psu:{n}:{q}")));
    }
    let space = HermitianSpace::new(n, q).map_err(PermError::from)?;
    let points = isotropic_points(&space);
    let perms = dedup_gens(matrices_to_perms(
        &space.field,
        &points,
        &su_generators(&space),
    )?);
    let group = PermGroup::new(points.len(), perms)?;
    assert_eq!(group.order(), psu_order(n as u32, q), "psu order formula");
    Ok(group)
}

/// The Mathieu groups on 11, 12 and 22 points, from the classical
/// generator sets (two 11-point generators; the 12- and 22-point
/// extensions add one and two more). Each construction is validated
/// against the known order.
pub fn mathieu(n: usize) -> Result<PermGroup, PermError> {
    let (deg, gens, order): (usize, Vec<&str>, u128) = match n {
        11 => (
            11,
            vec!["(0 1 2 3 4 5 6 7 8 9 10)", "(2 6 10 7)(3 9 4 5)"],
            7920,
        ),
        12 => (
            12,
            vec![
                "(0 1 2 3 4 5 6 7 8 9 10)",
                "(2 6 10 7)(3 9 4 5)",
                "(0 11)(1 10)(2 5)(3 7)(4 8)(6 9)",
            ],
            95040,
        ),
        22 => (
            22,
            vec![
                "(0 1 2 3 4 5 6 7 8 9 10)(11 12 13 14 15 16 17 18 19 20 21)",
                "(0 3 4 8 2)(1 7 9 6 5)(11 14 15 19 13)(12 18 20 17 16)",
                "(0 20)(1 9 7 5)(2 12 3 16)(4 18 8 17)(10 21)(11 13 15 19)",
            ],
            443_520,
        ),
        _ => return Err(PermError::UnsupportedFamily(format!("mathieu:{n}"))),
    };
    let gens: Result<Vec<Perm>, PermError> =
        gens.iter().map(|s| parse_cycles(s, deg)).collect();
    let group = PermGroup::new(deg, gens?)?;
    if group.order() != order {
        return Err(PermError::Parse(format!(
            "mathieu:{n} generator data produced order {} (expected {order})",
            group.order()
        )));
    }
    Ok(group)
}

/// Fixed-point count and cyclic-orbit partition, as used by the
/// derangement arguments for alternating groups.
pub struct DerangementData {
    pub is_derangement: bool,
    pub fixed_points: usize,
    pub orbits: Vec<Vec<u16>>,
}

pub fn derangement_data(x: &Perm) -> DerangementData {
    let fixed = x.fixed_points().len();
    DerangementData {
        is_derangement: fixed == 0,
        fixed_points: fixed,
        orbits: x.cycle_orbits(),
    }
}

/// For a derangement x of an alternating group whose cyclic group is
/// intransitive: a neighbour `g` with `[x, g] != 1` and `<x, g>`
/// intransitive, hence proper. With exactly two x-orbits `g` is the double
/// transposition on the first two points of each; with more it is a
/// 3-cycle across the first two orbits.
pub fn derangement_neighbor(group: &PermGroup, x: &Perm) -> Result<Perm, PermError> {
    if !group.contains(x) {
        return Err(PermError::NotInGroup);
    }
    let data = derangement_data(x);
    if !data.is_derangement || data.orbits.len() < 2 {
        return Err(PermError::Parse(
            "element must be a derangement with an intransitive cyclic group".into(),
        ));
    }
    let deg = group.degree();
    let (a, b) = (&data.orbits[0], &data.orbits[1]);
    let g = if data.orbits.len() == 2 {
        Perm::from_cycles(deg, &[vec![a[0], a[1]], vec![b[0], b[1]]])?
    } else {
        Perm::from_cycles(deg, &[vec![a[0], a[1], b[0]]])?
    };
    // Adjacency contract: non-commuting, and jointly intransitive.
    assert!(!x.commutes_with(&g), "derangement neighbour must not commute");
    let parts = crate::group::orbit_partition(deg, &[x.clone(), g.clone()]);
    assert!(
        parts.iter().any(|&l| l != parts[0]),
        "derangement neighbour must leave the pair intransitive"
    );
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_and_symmetric() {
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert_eq!(alternating(9).unwrap().order(), 181_440);
        assert_eq!(symmetric(7).unwrap().order(), 5040);
    }

    #[test]
    fn psl_small() {
        // psl(2,7): 8 projective points, order 168 by the formula
        // q(q^2-1)/gcd(2,q-1).
        let g = projective_special_linear(2, 7).unwrap();
        assert_eq!(g.degree(), 8);
        assert_eq!(g.order(), 168);
        // psl(2,11): order 660.
        let g = projective_special_linear(2, 11).unwrap();
        assert_eq!(g.degree(), 12);
        assert_eq!(g.order(), 660);
        // psl(2,4) = a5.
        let g = projective_special_linear(2, 4).unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn psl3_and_psl4() {
        let g = projective_special_linear(3, 2).unwrap();
        assert_eq!(g.degree(), 7);
        assert_eq!(g.order(), 168);
        let g = projective_special_linear(3, 3).unwrap();
        assert_eq!(g.degree(), 13);
        assert_eq!(g.order(), 5616);
    }

    #[test]
    fn pgl27() {
        let g = projective_general_linear(2, 7).unwrap();
        assert_eq!(g.degree(), 8);
        assert_eq!(g.order(), 336);
    }

    #[test]
    fn psu33() {
        // 28 isotropic points, order 6048.
        let g = projective_special_unitary(3, 3).unwrap();
        assert_eq!(g.degree(), 28);
        assert_eq!(g.order(), 6048);
    }

    #[test]
    fn mathieu11() {
        let g = mathieu(11).unwrap();
        assert_eq!(g.order(), 7920);
        // Cross-check against the product of stabiliser-chain orbits.
        assert_eq!(crate::group::bsgs_matches_naive(&g, 10_000).unwrap(), true);
    }

    #[test]
    fn mathieu12() {
        assert_eq!(mathieu(12).unwrap().order(), 95_040);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(GroupSpec::parse("alt:5").unwrap(), GroupSpec::Alternating(5));
        assert_eq!(GroupSpec::parse("psl:2:11").unwrap(), GroupSpec::Psl(2, 11));
        assert_eq!(
            GroupSpec::parse("file:some/path.grp").unwrap(),
            GroupSpec::FromFile("some/path.grp".into())
        );
        assert!(GroupSpec::parse("nonsense").is_err());
        assert!(GroupSpec::parse("psl:2").is_err());
    }

    #[test]
    fn derangement_neighbors() {
        let a6 = alternating(6).unwrap();
        // (0 1 2)(3 4 5): two orbits, double transposition neighbour.
        let x = parse_cycles("(0 1 2)(3 4 5)", 6).unwrap();
        let g = derangement_neighbor(&a6, &x).unwrap();
        assert_eq!(g, parse_cycles("(0 1)(3 4)", 6).unwrap());

        // More than two orbits: 3-cycle neighbour.
        let a8 = alternating(8).unwrap();
        let y = parse_cycles("(0 1)(2 3)(4 5)(6 7)", 8).unwrap();
        let g = derangement_neighbor(&a8, &y).unwrap();
        assert_eq!(g, parse_cycles("(0 1 2)", 8).unwrap());

        // Fixed points violate the hypotheses.
        let z = parse_cycles("(0 1 2)", 6).unwrap();
        assert!(derangement_neighbor(&a6, &z).is_err());
        // So does a transitive cyclic group (an n-cycle in odd degree).
        let a5 = alternating(5).unwrap();
        let w = parse_cycles("(0 1 2 3 4)", 5).unwrap();
        assert!(derangement_neighbor(&a5, &w).is_err());
    }
}
