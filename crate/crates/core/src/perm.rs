//! Permutations of {0, ..., deg-1} with disjoint-cycle notation.
//!
//! Composition is left-to-right: `(x * y)` means apply `x` first, then `y`,
//! and the action is written `alpha^x = x.apply(alpha)`.

use crate::error::PermError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u16>,
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl Perm {
    pub fn identity(deg: usize) -> Perm {
        Perm {
            img: (0..deg as u16).collect(),
        }
    }

    pub fn from_images(img: Vec<u16>) -> Result<Perm, PermError> {
        let deg = img.len();
        let mut seen = vec![false; deg];
        for &p in &img {
            if p as usize >= deg || seen[p as usize] {
                return Err(PermError::NotBijection);
            }
            seen[p as usize] = true;
        }
        Ok(Perm { img })
    }

    /// Builds a permutation from disjoint cycles over 0-based points.
    pub fn from_cycles(deg: usize, cycles: &[Vec<u16>]) -> Result<Perm, PermError> {
        let mut img: Vec<u16> = (0..deg as u16).collect();
        let mut used = vec![false; deg];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p as usize >= deg {
                    return Err(PermError::PointRange(p as usize, deg));
                }
                if used[p as usize] {
                    return Err(PermError::NotBijection);
                }
                used[p as usize] = true;
                let next = cycle[(i + 1) % cycle.len()];
                img[p as usize] = next;
            }
        }
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, point: u16) -> u16 {
        self.img[point as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &p)| i as u16 == p)
    }

    /// `self * other`: apply self, then other.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: self.img.iter().map(|&p| other.img[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (i, &p) in self.img.iter().enumerate() {
            img[p as usize] = i as u16;
        }
        Perm { img }
    }

    /// Conjugate `g^-1 * self * g`, computed pointwise.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (i, &p) in self.img.iter().enumerate() {
            img[g.img[i] as usize] = g.img[p as usize];
        }
        Perm { img }
    }

    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        self.img
            .iter()
            .enumerate()
            .all(|(i, &p)| other.img[p as usize] == self.img[other.img[i] as usize] )
    }

    pub fn power(&self, e: i64) -> Perm {
        let deg = self.degree();
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(deg);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.img.len()];
        let mut order = 1u64;
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.img[p] as usize;
                len += 1;
            }
            order = crate::field::lcm(order, len);
        }
        order
    }

    pub fn fixed_points(&self) -> Vec<u16> {
        self.img
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i as u16 == p)
            .map(|(i, _)| i as u16)
            .collect()
    }

    pub fn support(&self) -> Vec<u16> {
        self.img
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i as u16 != p)
            .map(|(i, _)| i as u16)
            .collect()
    }

    pub fn is_derangement(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &p)| i as u16 != p)
    }

    /// Orbits of the generated cyclic group on all points, each sorted,
    /// ordered by least element.
    pub fn cycle_orbits(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.img.len()];
        let mut orbits = Vec::new();
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                orbit.push(p as u16);
                p = self.img[p] as usize;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Nontrivial cycles in canonical form: each cycle starts at its least
    /// point, cycles sorted by first point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.img.len()];
        let mut cycles = Vec::new();
        for start in 0..self.img.len() {
            if seen[start] || self.img[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u16);
                p = self.img[p] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect::<Vec<_>>()
            .join("")
    }

    /// Whether the permutation is even (a product of an even number of
    /// transpositions).
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.img.len()];
        let mut transpositions = 0usize;
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.img[p] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }
}

/// Parses disjoint-cycle notation: `(0 1 2)(3 4)`, `(0,1,2)`, or `()` for
/// the identity. Points are 0-based and must be below `deg`; repeated
/// points are rejected.
pub fn parse_cycles(s: &str, deg: usize) -> Result<Perm, PermError> {
    if deg > u16::MAX as usize {
        return Err(PermError::DegreeCap(deg, u16::MAX as usize));
    }
    let s = s.trim();
    if s.is_empty() || s == "()" || s == "id" {
        return Ok(Perm::identity(deg));
    }
    let mut cycles: Vec<Vec<u16>> = Vec::new();
    let mut current: Option<Vec<u16>> = None;
    let mut number: Option<u32> = None;
    for ch in s.chars() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(PermError::Parse("nested parenthesis".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                let mut cycle = current.take().ok_or_else(|| {
                    PermError::Parse("unmatched closing parenthesis".into())
                })?;
                if let Some(n) = number.take() {
                    if n >= deg as u32 {
                        return Err(PermError::PointRange(n as usize, deg));
                    }
                    cycle.push(n as u16);
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            ' ' | ',' | '\t' => {
                if let Some(n) = number.take() {
                    let cycle = current
                        .as_mut()
                        .ok_or_else(|| PermError::Parse("point outside cycle".into()))?;
                    if n >= deg as u32 {
                        return Err(PermError::PointRange(n as usize, deg));
                    }
                    cycle.push(n as u16);
                }
            }
            d if d.is_ascii_digit() => {
                if current.is_none() {
                    return Err(PermError::Parse("digit outside cycle".into()));
                }
                let v = number.unwrap_or(0) * 10 + d.to_digit(10).unwrap();
                if v > u16::MAX as u32 {
                    return Err(PermError::Parse("point too large".into()));
                }
                number = Some(v);
            }
            other => {
                return Err(PermError::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    if current.is_some() {
        return Err(PermError::Parse("unterminated cycle".into()));
    }
    Perm::from_cycles(deg, &cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = parse_cycles("(0 1 2)", 5).unwrap();
        let b = parse_cycles("(1 2)(3 4)", 5).unwrap();
        let ab = a.compose(&b);
        // 0 -> 1 -> 2 under a then b.
        assert_eq!(ab.apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.inverse(), a.power(-1));
        assert_eq!(a.power(3), Perm::identity(5));
    }

    #[test]
    fn orders_via_cycle_lcm() {
        let p = parse_cycles("(0 1 2)(3 4)", 6).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::identity(4).order(), 1);
    }

    #[test]
    fn conjugation_matches_definition() {
        let x = parse_cycles("(0 1 2 3)", 6).unwrap();
        let g = parse_cycles("(0 4)(1 5)", 6).unwrap();
        let direct = g.inverse().compose(&x).compose(&g);
        assert_eq!(x.conjugate_by(&g), direct);
    }

    #[test]
    fn commutation_test_matches_products() {
        let x = parse_cycles("(0 1)", 4).unwrap();
        let y = parse_cycles("(2 3)", 4).unwrap();
        let z = parse_cycles("(1 2)", 4).unwrap();
        assert!(x.commutes_with(&y));
        assert!(!x.commutes_with(&z));
        assert!(x.commutator(&y).is_identity());
        assert!(!x.commutator(&z).is_identity());
    }

    #[test]
    fn parses_cycle_notation() {
        assert!(parse_cycles("()", 3).unwrap().is_identity());
        let p = parse_cycles("(0, 1, 2)(3 4)", 5).unwrap();
        assert_eq!(p.cycle_string(), "(0 1 2)(3 4)");
        assert!(parse_cycles("(0 1", 3).is_err());
        assert!(parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(parse_cycles("(0 9)", 3).is_err());
        assert!(parse_cycles("3", 5).is_err());
    }

    #[test]
    fn parity_and_support() {
        let three_cycle = parse_cycles("(0 1 2)", 5).unwrap();
        assert!(three_cycle.is_even());
        let transposition = parse_cycles("(0 1)", 5).unwrap();
        assert!(!transposition.is_even());
        assert_eq!(three_cycle.support(), vec![0, 1, 2]);
        assert_eq!(three_cycle.fixed_points(), vec![3, 4]);
        assert!(!three_cycle.is_derangement());
        let der = parse_cycles("(0 1 2)(3 4 5)", 6).unwrap();
        assert!(der.is_derangement());
        assert_eq!(der.cycle_orbits().len(), 2);
    }
}
