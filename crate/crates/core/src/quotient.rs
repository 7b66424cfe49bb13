//! The quotient graph: vertices are the cyclic subgroups generated by
//! (non-central) elements, with two subgroups adjacent when their
//! generators are adjacent in the element graph. Identifying elements that
//! generate the same cyclic subgroup leaves distances intact, and
//! conjugation acts as a graph automorphism, so adjacency only ever has to
//! be evaluated against one representative vertex per conjugacy class.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::GraphError;
use crate::group::{ElementBank, PermGroup};
use crate::perm::Perm;

/// Vertex count cap for quotient graphs.
pub const VERTEX_CAP: usize = 100_000;
/// Below this vertex count adjacency rows are materialised for every
/// vertex instead of being translated on demand.
pub const MATERIALIZE_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// Edges between non-central elements that neither commute nor
    /// generate the group.
    Nc,
    /// Edges between non-identity elements that do not generate the group.
    NonGen,
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Nc => "nc",
            GraphKind::NonGen => "nongen",
        }
    }
}

/// Whether x and y fail to commute and fail to generate: the edge relation
/// on non-central elements.
pub fn nc_adjacent(group: &PermGroup, x: &Perm, y: &Perm) -> Result<bool, GraphError> {
    for e in [x, y] {
        if e.is_identity() || group.generators().iter().all(|g| e.commutes_with(g)) {
            return Err(GraphError::CentralVertex);
        }
        if !group.contains(e) {
            return Err(GraphError::Perm(crate::error::PermError::NotInGroup));
        }
    }
    if x.commutes_with(y) {
        return Ok(false);
    }
    Ok(!group.generates_with_unchecked(x, y))
}

/// Whether x and y fail to generate: the edge relation on non-identity
/// elements (x = y allowed; a single non-generator is "adjacent" to
/// itself in the relation sense, though the graph carries no loops).
pub fn nongen_adjacent(group: &PermGroup, x: &Perm, y: &Perm) -> Result<bool, GraphError> {
    for e in [x, y] {
        if e.is_identity() {
            return Err(GraphError::CentralVertex);
        }
        if !group.contains(e) {
            return Err(GraphError::Perm(crate::error::PermError::NotInGroup));
        }
    }
    Ok(!group.generates_with_unchecked(x, y))
}

pub struct QuotientGraph {
    pub kind: GraphKind,
    pub group: PermGroup,
    pub bank: ElementBank,
    /// Canonical generator of each vertex subgroup, lexicographically least
    /// among the generators; vertices sorted by it.
    pub verts: Vec<Perm>,
    /// Element id -> vertex id (u32::MAX for excluded elements).
    pub vert_of: Vec<u32>,
    /// Vertex -> conjugacy class of its cyclic subgroup.
    pub class_of: Vec<u32>,
    /// Class -> least vertex id in the class.
    pub class_reps: Vec<u32>,
    /// Vertex -> group element conjugating the class representative's
    /// subgroup onto this vertex's subgroup.
    pub conj: Vec<Perm>,
    /// Class -> sorted adjacency row of the representative vertex.
    pub rep_rows: Vec<Vec<u32>>,
    /// Rows for every vertex; only present for small graphs.
    pub all_rows: Option<Vec<Vec<u32>>>,
    pub center_order: usize,
    /// Number of adjacency evaluations performed during construction.
    pub pair_tests: u64,
    /// Whether some vertex subgroup has more than one generator (so the
    /// element graph identifies at least two elements per such vertex).
    pub has_multigenerator_vertex: bool,
}

impl QuotientGraph {
    pub fn build(group: PermGroup, kind: GraphKind) -> Result<QuotientGraph, GraphError> {
        let bank = group.elements().map_err(GraphError::Perm)?;
        let n = bank.len();
        let deg = group.degree();

        // Central elements commute with every generator.
        let central: Vec<bool> = bank
            .elements
            .iter()
            .map(|x| group.generators().iter().all(|g| x.commutes_with(g)))
            .collect();
        let center_order = central.iter().filter(|&&c| c).count();

        let excluded = |id: usize| -> bool {
            let x = &bank.elements[id];
            match kind {
                GraphKind::Nc => x.is_identity() || central[id],
                GraphKind::NonGen => x.is_identity(),
            }
        };

        // Canonical generator per cyclic subgroup.
        let mut vert_ids: FxHashMap<Box<[u16]>, u32> = FxHashMap::default();
        let mut canon_of_elem: Vec<u32> = vec![u32::MAX; n];
        let mut canons: Vec<Perm> = Vec::new();
        let mut has_multi = false;
        for id in 0..n {
            if excluded(id) || canon_of_elem[id] != u32::MAX {
                continue;
            }
            let x = &bank.elements[id];
            let ord = x.order();
            // Generators of <x> are x^k with gcd(k, ord) = 1.
            let mut gen_ids = Vec::new();
            let mut canonical = x.clone();
            let mut acc = x.clone();
            for k in 1..=ord {
                if k > 1 {
                    acc = acc.compose(x);
                }
                if crate::field::gcd(k, ord) == 1 {
                    gen_ids.push(bank.id_of(&acc).expect("powers stay in the group"));
                    if acc < canonical {
                        canonical = acc.clone();
                    }
                }
            }
            if gen_ids.len() > 1 {
                has_multi = true;
            }
            let vid = match vert_ids.get(canonical.images()) {
                Some(&v) => v,
                None => {
                    let v = canons.len() as u32;
                    vert_ids.insert(canonical.images().to_vec().into_boxed_slice(), v);
                    canons.push(canonical);
                    v
                }
            };
            for g in gen_ids {
                canon_of_elem[g as usize] = vid;
            }
        }
        if canons.len() > VERTEX_CAP {
            return Err(GraphError::VertexCap(canons.len(), VERTEX_CAP));
        }

        // Sort vertices by canonical generator for a deterministic order.
        let mut order_ids: Vec<u32> = (0..canons.len() as u32).collect();
        order_ids.sort_by(|&a, &b| canons[a as usize].cmp(&canons[b as usize]));
        let mut new_id = vec![0u32; canons.len()];
        for (new, &old) in order_ids.iter().enumerate() {
            new_id[old as usize] = new as u32;
        }
        let mut verts = vec![Perm::identity(deg); canons.len()];
        for (old, c) in canons.into_iter().enumerate() {
            verts[new_id[old] as usize] = c;
        }
        let vert_of: Vec<u32> = canon_of_elem
            .iter()
            .map(|&v| if v == u32::MAX { u32::MAX } else { new_id[v as usize] })
            .collect();

        // Conjugacy classes of vertex subgroups, by orbit search from the
        // least unvisited vertex; conjugators accumulate along the tree.
        let v_count = verts.len();
        let mut class_of = vec![u32::MAX; v_count];
        let mut class_reps = Vec::new();
        let mut conj = vec![Perm::identity(deg); v_count];
        for start in 0..v_count as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let class_id = class_reps.len() as u32;
            class_reps.push(start);
            class_of[start as usize] = class_id;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for g in group.generators() {
                    let image = verts[v as usize].conjugate_by(g);
                    let image_id = bank.id_of(&image).expect("conjugates stay in the group");
                    let w = vert_of[image_id as usize];
                    debug_assert_ne!(w, u32::MAX, "conjugation preserves centrality");
                    if class_of[w as usize] == u32::MAX {
                        class_of[w as usize] = class_id;
                        conj[w as usize] = conj[v as usize].compose(g);
                        queue.push(w);
                    }
                }
            }
        }

        let mut graph = QuotientGraph {
            kind,
            group,
            bank,
            verts,
            vert_of,
            class_of,
            class_reps,
            conj,
            rep_rows: Vec::new(),
            all_rows: None,
            center_order,
            pair_tests: 0,
            has_multigenerator_vertex: has_multi,
        };
        graph.build_rep_rows();
        if v_count <= MATERIALIZE_LIMIT {
            graph.materialize_all_rows();
        }
        Ok(graph)
    }

    fn build_rep_rows(&mut self) {
        let v_count = self.verts.len();
        let group = &self.group;
        let verts = &self.verts;
        let kind = self.kind;
        let rows: Vec<Vec<u32>> = self
            .class_reps
            .par_iter()
            .map(|&rep| {
                let x = &verts[rep as usize];
                (0..v_count as u32)
                    .filter(|&v| {
                        let y = &verts[v as usize];
                        if v == rep {
                            return false;
                        }
                        match kind {
                            GraphKind::Nc => {
                                !x.commutes_with(y) && !group.generates_with_unchecked(x, y)
                            }
                            GraphKind::NonGen => !group.generates_with_unchecked(x, y),
                        }
                    })
                    .collect()
            })
            .collect();
        self.pair_tests = (self.class_reps.len() * v_count) as u64;
        self.rep_rows = rows;
    }

    fn materialize_all_rows(&mut self) {
        let v_count = self.verts.len();
        let rows: Vec<Vec<u32>> = (0..v_count as u32)
            .into_par_iter()
            .map(|v| self.row_of(v))
            .collect();
        self.all_rows = Some(rows);
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    /// Total undirected edge count, from per-class representative degrees.
    pub fn edge_count(&self) -> u64 {
        let mut class_sizes = vec![0u64; self.class_reps.len()];
        for &c in &self.class_of {
            class_sizes[c as usize] += 1;
        }
        let total: u64 = self
            .rep_rows
            .iter()
            .zip(&class_sizes)
            .map(|(row, &size)| row.len() as u64 * size)
            .sum();
        total / 2
    }

    /// Adjacency row of an arbitrary vertex, translating the class
    /// representative's row by the stored conjugator.
    pub fn row_of(&self, v: u32) -> Vec<u32> {
        if let Some(rows) = &self.all_rows {
            return rows[v as usize].clone();
        }
        self.translate_row(v)
    }

    fn translate_row(&self, v: u32) -> Vec<u32> {
        let class = self.class_of[v as usize];
        let rep = self.class_reps[class as usize];
        if rep == v {
            return self.rep_rows[class as usize].clone();
        }
        let g = &self.conj[v as usize];
        self.rep_rows[class as usize]
            .iter()
            .map(|&w| {
                let image = self.verts[w as usize].conjugate_by(g);
                let id = self.bank.id_of(&image).expect("conjugate in group");
                let tv = self.vert_of[id as usize];
                debug_assert_ne!(tv, u32::MAX);
                tv
            })
            .collect()
    }

    /// Runs `f` on each neighbour of `v` without materialising the row.
    pub fn for_neighbors(&self, v: u32, mut f: impl FnMut(u32)) {
        self.neighbors_until(v, |w| {
            f(w);
            false
        });
    }

    /// Visits neighbours of `v` until `f` returns true; returns whether it
    /// did. Lets breadth-first searches probe from the unvisited side with
    /// an early exit.
    pub fn neighbors_until(&self, v: u32, mut f: impl FnMut(u32) -> bool) -> bool {
        if let Some(rows) = &self.all_rows {
            for &w in &rows[v as usize] {
                if f(w) {
                    return true;
                }
            }
            return false;
        }
        let class = self.class_of[v as usize];
        let rep = self.class_reps[class as usize];
        if rep == v {
            for &w in &self.rep_rows[class as usize] {
                if f(w) {
                    return true;
                }
            }
            return false;
        }
        let g = &self.conj[v as usize];
        for &w in &self.rep_rows[class as usize] {
            let image = self.verts[w as usize].conjugate_by(g);
            let id = self.bank.id_of(&image).expect("conjugate in group");
            if f(self.vert_of[id as usize]) {
                return true;
            }
        }
        false
    }

    /// Degree of a vertex (length of its class representative's row).
    pub fn vertex_degree(&self, v: u32) -> usize {
        self.rep_rows[self.class_of[v as usize] as usize].len()
    }

    /// The vertex of an element, if it is one.
    pub fn vertex_of_element(&self, x: &Perm) -> Result<u32, GraphError> {
        let id = self
            .bank
            .id_of(x)
            .ok_or(GraphError::Perm(crate::error::PermError::NotInGroup))?;
        let v = self.vert_of[id as usize];
        if v == u32::MAX {
            return Err(GraphError::CentralVertex);
        }
        Ok(v)
    }

    /// Isolated vertices, expanded from isolated class representatives.
    pub fn isolated_vertices(&self) -> Vec<u32> {
        let isolated_classes: Vec<u32> = self
            .rep_rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.is_empty())
            .map(|(c, _)| c as u32)
            .collect();
        let mut out: Vec<u32> = (0..self.verts.len() as u32)
            .filter(|&v| isolated_classes.contains(&self.class_of[v as usize]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Representatives of the vertex set under conjugation by the
    /// centraliser of the representative of `class` (the per-source
    /// second-level reduction).
    pub fn y_set(&self, class: usize) -> Result<Vec<u32>, GraphError> {
        let x = &self.verts[self.class_reps[class] as usize];
        let cent = self.group.centralizer(x).map_err(GraphError::Perm)?;
        let v_count = self.verts.len();
        let mut seen = vec![false; v_count];
        let mut reps = Vec::new();
        for start in 0..v_count as u32 {
            if seen[start as usize] {
                continue;
            }
            reps.push(start);
            let mut queue = vec![start];
            seen[start as usize] = true;
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for g in cent.generators() {
                    let image = self.verts[v as usize].conjugate_by(g);
                    let id = self.bank.id_of(&image).expect("conjugate in group");
                    let w = self.vert_of[id as usize];
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push(w);
                    }
                }
            }
        }
        Ok(reps)
    }
}

/// Samples alternative generators of the vertex subgroups and checks that
/// the adjacency predicate does not depend on the choice; the quotient is
/// well defined exactly when this holds everywhere.
pub fn sample_well_definedness(
    graph: &QuotientGraph,
    samples: usize,
    seed: u64,
) -> Result<bool, GraphError> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(seed);
    let v_count = graph.vertex_count();
    if v_count < 2 {
        return Ok(true);
    }
    for _ in 0..samples {
        let v = rng.random_range(0..v_count) as u32;
        let w = rng.random_range(0..v_count) as u32;
        if v == w {
            continue;
        }
        let x = &graph.verts[v as usize];
        let y = &graph.verts[w as usize];
        // Random alternative generators of the same subgroups.
        let xo = x.order();
        let yo = y.order();
        let xk = (1..=xo)
            .filter(|&k| crate::field::gcd(k, xo) == 1)
            .nth(rng.random_range(0..crate::euler_phi(xo)) as usize)
            .unwrap();
        let yk = (1..=yo)
            .filter(|&k| crate::field::gcd(k, yo) == 1)
            .nth(rng.random_range(0..crate::euler_phi(yo)) as usize)
            .unwrap();
        let x2 = x.power(xk as i64);
        let y2 = y.power(yk as i64);
        let (a, b) = match graph.kind {
            GraphKind::Nc => (
                nc_adjacent(&graph.group, x, y)?,
                nc_adjacent(&graph.group, &x2, &y2)?,
            ),
            GraphKind::NonGen => (
                nongen_adjacent(&graph.group, x, y)?,
                nongen_adjacent(&graph.group, &x2, &y2)?,
            ),
        };
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{alternating, make_group, GroupSpec};
    use crate::perm::parse_cycles;

    #[test]
    fn a5_quotient_has_31_vertices() {
        // Cyclic subgroups of A5: 15 of order 2, 10 of order 3, 6 of
        // order 5.
        let graph = QuotientGraph::build(alternating(5).unwrap(), GraphKind::Nc).unwrap();
        assert_eq!(graph.vertex_count(), 31);
        // Orders 2, 3, 5 up to conjugacy: one class each.
        assert_eq!(graph.class_count(), 3);
        assert_eq!(graph.center_order, 1);
        // No isolated vertices in an insoluble group.
        assert!(graph.isolated_vertices().is_empty());
    }

    #[test]
    fn adjacency_predicates() {
        let a5 = alternating(5).unwrap();
        let x = parse_cycles("(0 1 2)", 5).unwrap();
        let y = parse_cycles("(0 1 3)", 5).unwrap();
        // <x, y> is the stabiliser of 4 (A4), and [x, y] != 1.
        assert!(nc_adjacent(&a5, &x, &y).unwrap());
        assert!(nongen_adjacent(&a5, &x, &y).unwrap());
        // Powers commute: never nc-adjacent.
        let x2 = x.power(2);
        assert!(!nc_adjacent(&a5, &x, &x2).unwrap());
        // A generating pair is adjacent in neither graph.
        let g = parse_cycles("(0 1 2 3 4)", 5).unwrap();
        assert!(!nc_adjacent(&a5, &x, &g).unwrap());
        assert!(!nongen_adjacent(&a5, &x, &g).unwrap());
        // Identity input is rejected.
        let id = a5.identity();
        assert!(nc_adjacent(&a5, &id, &x).is_err());
        assert!(nongen_adjacent(&a5, &id, &x).is_err());
    }

    #[test]
    fn translated_rows_match_direct_tests() {
        let graph = QuotientGraph::build(alternating(5).unwrap(), GraphKind::Nc).unwrap();
        // For every vertex, the translated row must equal the row computed
        // by direct adjacency tests.
        for v in 0..graph.vertex_count() as u32 {
            let mut row = graph.row_of(v);
            row.sort_unstable();
            let x = &graph.verts[v as usize];
            let direct: Vec<u32> = (0..graph.vertex_count() as u32)
                .filter(|&w| {
                    w != v && {
                        let y = &graph.verts[w as usize];
                        !x.commutes_with(y) && !graph.group.generates_with_unchecked(x, y)
                    }
                })
                .collect();
            assert_eq!(row, direct, "row mismatch at vertex {v}");
        }
    }

    #[test]
    fn quotient_well_definedness_sampling() {
        for spec in [GroupSpec::Alternating(5), GroupSpec::Psl(2, 7)] {
            let g = make_group(&spec).unwrap();
            let graph = QuotientGraph::build(g, GraphKind::Nc).unwrap();
            assert!(sample_well_definedness(&graph, 500, 7).unwrap());
        }
    }

    #[test]
    fn nongen_includes_nc_edges() {
        let nc = QuotientGraph::build(alternating(5).unwrap(), GraphKind::Nc).unwrap();
        let ng = QuotientGraph::build(alternating(5).unwrap(), GraphKind::NonGen).unwrap();
        assert_eq!(nc.vertex_count(), ng.vertex_count());
        for v in 0..nc.vertex_count() as u32 {
            let nc_row: std::collections::BTreeSet<u32> = nc.row_of(v).into_iter().collect();
            let ng_row: std::collections::BTreeSet<u32> = ng.row_of(v).into_iter().collect();
            assert!(nc_row.is_subset(&ng_row));
        }
    }

    #[test]
    fn s3_nc_graph_is_empty() {
        // In S3 every non-commuting pair generates, so the nc graph has
        // all five non-identity elements isolated (collapsed to 4
        // subgroup vertices).
        let s3 = make_group(&GroupSpec::Symmetric(3)).unwrap();
        let graph = QuotientGraph::build(s3, GraphKind::Nc).unwrap();
        assert_eq!(graph.vertex_count(), 4);
        assert_eq!(graph.isolated_vertices().len(), 4);
        assert_eq!(graph.edge_count(), 0);
    }
}
