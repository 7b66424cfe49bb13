//! Text formats for groups and matrices.
//!
//! Group files: a `degree k` header, then one permutation per line in
//! 0-based disjoint-cycle notation; `#` starts a comment.
//!
//! Matrix files: a header `n q` (or `n q q2` with `q2 = q^2` for matrices
//! over the quadratic extension), then matrices given as `n` lines of `n`
//! whitespace-separated entries; entries are integers over prime fields and
//! `(c0,c1,...)` coefficient tuples otherwise. Blank lines separate
//! matrices.

use std::path::Path;

use crate::error::{MatError, PermError};
use crate::field::{Felt, Field};
use crate::group::PermGroup;
use crate::matrix::Matrix;
use crate::perm::{parse_cycles, Perm};

pub fn parse_group_file(text: &str) -> Result<PermGroup, PermError> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Perm> = Vec::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let mut it = line.split_whitespace();
                match (it.next(), it.next(), it.next()) {
                    (Some("degree"), Some(k), None) => {
                        let k: usize = k
                            .parse()
                            .map_err(|_| PermError::Parse(format!("bad degree '{k}'")))?;
                        if k == 0 || k > crate::families::MAX_DEGREE {
                            return Err(PermError::DegreeCap(k, crate::families::MAX_DEGREE));
                        }
                        degree = Some(k);
                    }
                    _ => {
                        return Err(PermError::Parse(
                            "expected 'degree k' header before generators".into(),
                        ))
                    }
                }
            }
            Some(deg) => {
                gens.push(parse_cycles(line, deg)?);
            }
        }
    }
    let deg = degree.ok_or_else(|| PermError::Parse("empty group file".into()))?;
    if gens.is_empty() {
        return Err(PermError::Parse("group file lists no generators".into()));
    }
    PermGroup::new(deg, gens)
}

pub fn read_group_file(path: &Path) -> Result<PermGroup, PermError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| PermError::Parse(format!("{}: {e}", path.display())))?;
    parse_group_file(&text)
}

pub fn write_group_file(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.cycle_string());
        out.push('\n');
    }
    out
}

fn parse_entry(f: &Field, token: &str) -> Result<Felt, MatError> {
    if let Some(stripped) = token.strip_prefix('(') {
        let inner = stripped
            .strip_suffix(')')
            .ok_or_else(|| MatError::Parse(format!("unterminated tuple '{token}'")))?;
        let mut digits = Vec::new();
        for part in inner.split(',') {
            let d: u64 = part
                .trim()
                .parse()
                .map_err(|_| MatError::Parse(format!("bad coefficient '{part}'")))?;
            if d >= f.p() {
                return Err(MatError::Parse(format!(
                    "coefficient {d} out of range for characteristic {}",
                    f.p()
                )));
            }
            digits.push(d);
        }
        if digits.len() != f.k() as usize {
            return Err(MatError::Parse(format!(
                "tuple '{token}' must have {} coefficients",
                f.k()
            )));
        }
        Ok(f.from_digits(&digits))
    } else {
        if f.k() != 1 {
            return Err(MatError::Parse(format!(
                "entry '{token}' must be a coefficient tuple over GF({})",
                f.q()
            )));
        }
        let v: u64 = token
            .parse()
            .map_err(|_| MatError::Parse(format!("bad entry '{token}'")))?;
        if v >= f.q() {
            return Err(MatError::Parse(format!("entry {v} out of range", )));
        }
        Ok(Felt(v))
    }
}

pub fn parse_matrix_file(text: &str) -> Result<(Field, Vec<Matrix>), MatError> {
    let mut lines = text.lines().map(|raw| {
        match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim()
    });
    let header = lines
        .by_ref()
        .find(|l| !l.is_empty())
        .ok_or_else(|| MatError::Parse("empty matrix file".into()))?;
    let nums: Result<Vec<u64>, _> = header.split_whitespace().map(|t| t.parse::<u64>()).collect();
    let nums = nums.map_err(|_| MatError::Parse(format!("bad header '{header}'")))?;
    let (n, q) = match nums.as_slice() {
        [n, q] => (*n as usize, *q),
        [n, q, q2] => {
            if q.checked_mul(*q) != Some(*q2) {
                return Err(MatError::Parse(format!(
                    "header extension {q2} is not the square of {q}"
                )));
            }
            (*n as usize, *q2)
        }
        _ => return Err(MatError::Parse(format!("bad header '{header}'"))),
    };
    if n == 0 || n > 64 {
        return Err(MatError::Dimension(format!("dimension {n} out of range")));
    }
    let pf = crate::field::prime_factors(q);
    if pf.len() != 1 {
        return Err(MatError::NotPrime(q));
    }
    let field = Field::new(pf[0], q.ilog(pf[0]))?;

    let mut matrices = Vec::new();
    let mut rows: Vec<Vec<Felt>> = Vec::new();
    for line in lines {
        if line.is_empty() {
            if !rows.is_empty() {
                if rows.len() != n {
                    return Err(MatError::Dimension(format!(
                        "matrix has {} rows, expected {n}",
                        rows.len()
                    )));
                }
                matrices.push(Matrix::from_rows(&rows));
                rows = Vec::new();
            }
            continue;
        }
        let mut row = Vec::with_capacity(n);
        for token in line.split_whitespace() {
            row.push(parse_entry(&field, token)?);
        }
        if row.len() != n {
            return Err(MatError::Dimension(format!(
                "row has {} entries, expected {n}",
                row.len()
            )));
        }
        rows.push(row);
        if rows.len() > n {
            return Err(MatError::Dimension(format!(
                "matrix has more than {n} rows"
            )));
        }
    }
    if !rows.is_empty() {
        if rows.len() != n {
            return Err(MatError::Dimension(format!(
                "matrix has {} rows, expected {n}",
                rows.len()
            )));
        }
        matrices.push(Matrix::from_rows(&rows));
    }
    if matrices.is_empty() {
        return Err(MatError::Parse("matrix file lists no matrices".into()));
    }
    Ok((field, matrices))
}

pub fn read_matrix_file(path: &Path) -> Result<(Field, Vec<Matrix>), MatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| MatError::Parse(format!("{}: {e}", path.display())))?;
    parse_matrix_file(&text)
}

/// Serialises matrices in the text format; `base_q` adds the `q q2` header
/// pair for quadratic-extension matrices.
pub fn write_matrix_file(f: &Field, mats: &[Matrix], base_q: Option<u64>) -> String {
    let n = mats.first().map(|m| m.n()).unwrap_or(0);
    let mut out = match base_q {
        Some(q0) => format!("{n} {q0} {}\n", f.q()),
        None => format!("{n} {}\n", f.q()),
    };
    for m in mats {
        for i in 0..m.n() {
            let row: Vec<String> = (0..m.n()).map(|j| f.format_elt(m.get(i, j))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_file_roundtrip() {
        let text = "# alternating group of degree 5\ndegree 5\n(0 1 2 3 4)\n(0 1 2)\n";
        let g = parse_group_file(text).unwrap();
        assert_eq!(g.order(), 60);
        let written = write_group_file(&g);
        let g2 = parse_group_file(&written).unwrap();
        assert_eq!(g2.order(), 60);
    }

    #[test]
    fn group_file_errors() {
        assert!(parse_group_file("").is_err());
        assert!(parse_group_file("degree 5\n").is_err());
        assert!(parse_group_file("(0 1 2)\n").is_err());
        assert!(parse_group_file("degree 0\n(0)\n").is_err());
        assert!(parse_group_file("degree 5\n(0 1 9)\n").is_err());
        assert!(parse_group_file("degree twelve\n").is_err());
    }

    #[test]
    fn matrix_file_prime_field() {
        let text = "3 7\n0 1 0\n0 0 1\n6 0 0\n";
        let (f, mats) = parse_matrix_file(text).unwrap();
        assert_eq!(f.q(), 7);
        assert_eq!(mats.len(), 1);
        assert_eq!(mats[0].get(2, 0), Felt(6));
        // Round trip.
        let written = write_matrix_file(&f, &mats, None);
        let (_, mats2) = parse_matrix_file(&written).unwrap();
        assert_eq!(mats, mats2);
    }

    #[test]
    fn matrix_file_extension_field() {
        let text = "2 3 9\n(1,0) (2,1)\n(0,0) (1,2)\n\n(1,0) (0,0)\n(0,0) (1,0)\n";
        let (f, mats) = parse_matrix_file(text).unwrap();
        assert_eq!(f.q(), 9);
        assert_eq!(mats.len(), 2);
        assert_eq!(mats[1], Matrix::identity(2));
        let written = write_matrix_file(&f, &mats, Some(3));
        let (f2, mats2) = parse_matrix_file(&written).unwrap();
        assert_eq!(f2.q(), 9);
        assert_eq!(mats, mats2);
    }

    #[test]
    fn matrix_file_errors() {
        assert!(parse_matrix_file("").is_err());
        assert!(parse_matrix_file("2 6\n1 0\n0 1\n").is_err());
        assert!(parse_matrix_file("2 3 10\n1 0\n0 1\n").is_err());
        assert!(parse_matrix_file("2 3\n1 0 0\n0 1\n").is_err());
        assert!(parse_matrix_file("2 3\n1 0\n").is_err());
        assert!(parse_matrix_file("2 9\n1 0\n0 1\n").is_err());
        assert!(parse_matrix_file("2 3\n5 0\n0 1\n").is_err());
    }
}
