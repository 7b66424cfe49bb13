//! Exact diameters of the element graphs through their quotients.
//!
//! Conjugation is a graph automorphism, so every vertex has the
//! eccentricity of its class representative and the quotient diameter is
//! the maximum eccentricity over one representative per class. The element
//! graph's diameter follows from the quotient's: collapsed same-subgroup
//! elements sit at distance 2 (non-commuting graph; they commute) or 1
//! (non-generating graph).

use rayon::prelude::*;
use serde::Serialize;

use crate::error::GraphError;
use crate::perm::Perm;
use crate::quotient::{nc_adjacent, nongen_adjacent, GraphKind, QuotientGraph};

const UNSEEN: u16 = u16::MAX;

struct BfsRun {
    dist: Vec<u16>,
    reached: usize,
    ecc: u16,
    /// Farthest vertex, least id among ties.
    farthest: u32,
}

/// Expanding a level from the unvisited side pays roughly this many probes
/// per vertex before the early exit fires; used to pick the direction.
const REVERSE_PROBE_FACTOR: usize = 24;

fn bfs(graph: &QuotientGraph, src: u32) -> BfsRun {
    let n = graph.vertex_count();
    let mut dist = vec![UNSEEN; n];
    dist[src as usize] = 0;
    let mut frontier = vec![src];
    let mut in_frontier = vec![false; n];
    in_frontier[src as usize] = true;
    let mut reached = 1usize;
    let mut level: u16 = 0;
    let mut ecc = 0u16;
    let mut farthest = src;
    while !frontier.is_empty() {
        level += 1;
        let unvisited = n - reached;
        // Direction-optimised expansion: a dense frontier is cheaper to
        // probe from the unvisited side, where the scan stops at the first
        // frontier neighbour.
        let forward_cost: usize = frontier
            .iter()
            .map(|&v| graph.vertex_degree(v))
            .sum();
        let next: Vec<u32> = if forward_cost <= unvisited * REVERSE_PROBE_FACTOR {
            let mut next = Vec::new();
            for &v in &frontier {
                graph.for_neighbors(v, |w| {
                    if dist[w as usize] == UNSEEN {
                        dist[w as usize] = level;
                        next.push(w);
                    }
                });
            }
            next
        } else {
            let mut next = Vec::new();
            for v in 0..n as u32 {
                if dist[v as usize] != UNSEEN {
                    continue;
                }
                if graph.neighbors_until(v, |w| in_frontier[w as usize]) {
                    dist[v as usize] = level;
                    next.push(v);
                }
            }
            next
        };
        for &v in &frontier {
            in_frontier[v as usize] = false;
        }
        for &v in &next {
            in_frontier[v as usize] = true;
        }
        if !next.is_empty() {
            ecc = level;
            reached += next.len();
            let least = *next.iter().min().unwrap();
            farthest = least;
        }
        frontier = next;
    }
    BfsRun {
        dist,
        reached,
        ecc,
        farthest,
    }
}

/// Diameter outcome for one graph, as emitted in reports.
#[derive(Debug, Clone, Serialize)]
pub struct DiameterReport {
    pub kind: GraphKind,
    pub group: String,
    pub group_order: u128,
    pub degree: usize,
    pub center_order: usize,
    pub vertices: usize,
    pub classes: usize,
    pub edges: u64,
    pub connected: bool,
    /// Diameter of the element graph; absent when disconnected or empty.
    pub diameter: Option<u32>,
    /// Diameter of the cyclic-subgroup quotient.
    pub quotient_diameter: Option<u32>,
    /// Eccentric witness pair (elements, cycle notation).
    pub witness_pair: Option<(String, String)>,
    /// Element path realising the witness distance, re-verified edge by
    /// edge before emission.
    pub witness_path: Vec<String>,
    pub isolated_vertices: Vec<String>,
    /// Component sizes (vertices), descending, when disconnected.
    pub component_sizes: Vec<usize>,
    /// Exact per-component quotient diameters (small graphs only).
    pub component_diameters: Option<Vec<u32>>,
    pub bfs_sources: usize,
    pub pair_tests: u64,
    pub reduction_classes: usize,
    pub wall_ms: u64,
}

/// Computes the exact diameter. With `use_reduction` the BFS sources are
/// the class representatives; otherwise every vertex is a source (the two
/// agree, which the test suite checks on small groups).
pub fn graph_diameter(graph: &QuotientGraph, use_reduction: bool) -> DiameterReport {
    let start = std::time::Instant::now();
    let n = graph.vertex_count();
    let sources: Vec<u32> = if use_reduction {
        graph.class_reps.clone()
    } else {
        (0..n as u32).collect()
    };

    let runs: Vec<(u32, u16, u32, usize)> = sources
        .par_iter()
        .map(|&s| {
            let run = bfs(graph, s);
            (s, run.ecc, run.farthest, run.reached)
        })
        .collect();

    let connected = n == 0 || runs.iter().all(|&(_, _, _, reached)| reached == n);
    let (mut best_src, mut best_ecc, mut best_far) = (0u32, 0u16, 0u32);
    for &(s, ecc, far, _) in &runs {
        if ecc > best_ecc || (ecc == best_ecc && s < best_src) {
            best_src = s;
            best_ecc = ecc;
            best_far = far;
        }
    }

    let quotient_diameter = if n == 0 || !connected {
        None
    } else {
        Some(best_ecc as u32)
    };
    let floor = match graph.kind {
        GraphKind::Nc => 2,
        GraphKind::NonGen => 1,
    };
    let diameter = quotient_diameter.map(|dq| {
        if graph.has_multigenerator_vertex {
            dq.max(floor)
        } else {
            dq
        }
    });

    // Witness pair and re-verified path for the quotient diameter.
    let (witness_pair, witness_path) = if n > 0 && connected && best_ecc > 0 {
        let run = bfs(graph, best_src);
        let vertices = descend_path(graph, &run.dist, best_far);
        let path = verified_element_path(graph, &vertices);
        let pair = (
            graph.verts[best_src as usize].cycle_string(),
            graph.verts[best_far as usize].cycle_string(),
        );
        (Some(pair), path)
    } else {
        (None, Vec::new())
    };

    // Component inventory for disconnected graphs.
    let (component_sizes, component_diameters) = if connected {
        (Vec::new(), None)
    } else {
        components_inventory(graph)
    };

    let isolated = graph
        .isolated_vertices()
        .into_iter()
        .map(|v| graph.verts[v as usize].cycle_string())
        .collect();

    DiameterReport {
        kind: graph.kind,
        group: String::new(),
        group_order: graph.group.order(),
        degree: graph.group.degree(),
        center_order: graph.center_order,
        vertices: n,
        classes: graph.class_count(),
        edges: graph.edge_count(),
        connected,
        diameter,
        quotient_diameter,
        witness_pair,
        witness_path,
        isolated_vertices: isolated,
        component_sizes,
        component_diameters,
        bfs_sources: sources.len(),
        pair_tests: graph.pair_tests,
        reduction_classes: graph.class_count(),
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

/// Walks from `dst` toward the BFS source by always stepping to the first
/// neighbour one level closer; returns the vertex path source..dst.
fn descend_path(graph: &QuotientGraph, dist: &[u16], dst: u32) -> Vec<u32> {
    debug_assert_ne!(dist[dst as usize], UNSEEN);
    let mut vertices = vec![dst];
    let mut cur = dst;
    while dist[cur as usize] > 0 {
        let want = dist[cur as usize] - 1;
        let mut found = None;
        graph.neighbors_until(cur, |w| {
            if dist[w as usize] == want {
                found = Some(w);
                true
            } else {
                false
            }
        });
        cur = found.expect("a predecessor exists on every BFS level");
        vertices.push(cur);
    }
    vertices.reverse();
    vertices
}

/// Element path through vertex representatives, re-verified against the
/// element adjacency predicate before emission.
fn verified_element_path(graph: &QuotientGraph, vertices: &[u32]) -> Vec<String> {
    let elements: Vec<&Perm> = vertices
        .iter()
        .map(|&v| &graph.verts[v as usize])
        .collect();
    for pair in elements.windows(2) {
        let ok = match graph.kind {
            GraphKind::Nc => nc_adjacent(&graph.group, pair[0], pair[1]),
            GraphKind::NonGen => nongen_adjacent(&graph.group, pair[0], pair[1]),
        };
        assert_eq!(ok.ok(), Some(true), "witness path failed re-verification");
    }
    elements.iter().map(|p| p.cycle_string()).collect()
}

/// Component sizes (descending) and, when rows are materialised, exact
/// per-component quotient diameters.
fn components_inventory(graph: &QuotientGraph) -> (Vec<usize>, Option<Vec<u32>>) {
    let n = graph.vertex_count();
    let mut label = vec![u32::MAX; n];
    let mut count = 0u32;
    for start in 0..n as u32 {
        if label[start as usize] != u32::MAX {
            continue;
        }
        label[start as usize] = count;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            graph.for_neighbors(v, |w| {
                if label[w as usize] == u32::MAX {
                    label[w as usize] = count;
                    stack.push(w);
                }
            });
        }
        count += 1;
    }
    let mut sizes = vec![0usize; count as usize];
    for &l in &label {
        sizes[l as usize] += 1;
    }
    let diameters = if graph.all_rows.is_some() {
        let mut per = vec![0u32; count as usize];
        for v in 0..n as u32 {
            let run = bfs(graph, v);
            let c = label[v as usize] as usize;
            per[c] = per[c].max(run.ecc as u32);
        }
        Some(per)
    } else {
        None
    };
    let mut order: Vec<usize> = sizes.clone();
    order.sort_unstable_by(|a, b| b.cmp(a));
    (order, diameters)
}

/// Distance and witness path between two elements of the graph.
pub struct PathReport {
    pub distance: Option<u32>,
    pub path: Vec<Perm>,
}

pub fn distance_and_path(
    graph: &QuotientGraph,
    x: &Perm,
    y: &Perm,
) -> Result<PathReport, GraphError> {
    let vx = graph.vertex_of_element(x)?;
    let vy = graph.vertex_of_element(y)?;
    if x == y {
        return Ok(PathReport {
            distance: Some(0),
            path: vec![x.clone()],
        });
    }
    if vx == vy {
        // Same cyclic subgroup: commuting generators. In the
        // non-commuting graph they are non-adjacent with every neighbour
        // in common, in the non-generating graph adjacent when the
        // subgroup is proper.
        match graph.kind {
            GraphKind::NonGen => {
                if (graph.verts[vx as usize].order() as u128) < graph.group.order() {
                    return Ok(PathReport {
                        distance: Some(1),
                        path: vec![x.clone(), y.clone()],
                    });
                }
            }
            GraphKind::Nc => {}
        }
        let row = graph.row_of(vx);
        return match row.first() {
            Some(&w) => Ok(PathReport {
                distance: Some(2),
                path: vec![x.clone(), graph.verts[w as usize].clone(), y.clone()],
            }),
            None => Ok(PathReport {
                distance: None,
                path: Vec::new(),
            }),
        };
    }
    let run = bfs(graph, vx);
    if run.dist[vy as usize] == UNSEEN {
        return Ok(PathReport {
            distance: None,
            path: Vec::new(),
        });
    }
    let vertices = descend_path(graph, &run.dist, vy);
    let mut path: Vec<Perm> = Vec::with_capacity(vertices.len());
    path.push(x.clone());
    for &v in &vertices[1..vertices.len() - 1] {
        path.push(graph.verts[v as usize].clone());
    }
    path.push(y.clone());
    for pair in path.windows(2) {
        let ok = match graph.kind {
            GraphKind::Nc => nc_adjacent(&graph.group, &pair[0], &pair[1])?,
            GraphKind::NonGen => nongen_adjacent(&graph.group, &pair[0], &pair[1])?,
        };
        assert!(ok, "witness path failed re-verification");
    }
    Ok(PathReport {
        distance: Some(run.dist[vy as usize] as u32),
        path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{alternating, make_group, GroupSpec};
    use crate::perm::parse_cycles;
    use crate::quotient::QuotientGraph;

    #[test]
    fn a5_nc_diameter_is_two() {
        let graph = QuotientGraph::build(alternating(5).unwrap(), GraphKind::Nc).unwrap();
        let report = graph_diameter(&graph, true);
        assert!(report.connected);
        assert_eq!(report.diameter, Some(2));
        assert!(!report.witness_path.is_empty());
    }

    #[test]
    fn reduction_and_full_bfs_agree() {
        for spec in [
            GroupSpec::Alternating(5),
            GroupSpec::Alternating(6),
            GroupSpec::Psl(2, 7),
            GroupSpec::Symmetric(5),
        ] {
            let g = make_group(&spec).unwrap();
            for kind in [GraphKind::Nc, GraphKind::NonGen] {
                let graph = QuotientGraph::build(make_group(&spec).unwrap(), kind).unwrap();
                let with = graph_diameter(&graph, true);
                let without = graph_diameter(&graph, false);
                assert_eq!(
                    with.diameter, without.diameter,
                    "mode mismatch for {:?} {:?}",
                    spec, kind
                );
                assert_eq!(with.quotient_diameter, without.quotient_diameter);
            }
            drop(g);
        }
    }

    #[test]
    fn psl211_nc_diameter_is_three() {
        let g = make_group(&GroupSpec::Psl(2, 11)).unwrap();
        let graph = QuotientGraph::build(g, GraphKind::Nc).unwrap();
        let report = graph_diameter(&graph, true);
        assert_eq!(report.diameter, Some(3));
    }

    #[test]
    fn distances_and_paths_in_a5() {
        let graph = QuotientGraph::build(alternating(5).unwrap(), GraphKind::Nc).unwrap();
        // Adjacent pair: distance one.
        let x = parse_cycles("(0 1 2)", 5).unwrap();
        let y = parse_cycles("(0 1 3)", 5).unwrap();
        let r = distance_and_path(&graph, &x, &y).unwrap();
        assert_eq!(r.distance, Some(1));
        assert_eq!(r.path.len(), 2);

        // An element and a nontrivial power: distance two through a
        // common neighbour.
        let five = parse_cycles("(0 1 2 3 4)", 5).unwrap();
        let sq = five.power(2);
        let r = distance_and_path(&graph, &five, &sq).unwrap();
        assert_eq!(r.distance, Some(2));
        assert_eq!(r.path.len(), 3);

        // Identical elements: distance zero.
        let r = distance_and_path(&graph, &x, &x).unwrap();
        assert_eq!(r.distance, Some(0));

        // Central/identity input is an error.
        let id = Perm::identity(5);
        assert!(distance_and_path(&graph, &id, &x).is_err());
    }

    #[test]
    fn disconnected_graph_reports_components() {
        let s3 = make_group(&GroupSpec::Symmetric(3)).unwrap();
        let graph = QuotientGraph::build(s3, GraphKind::Nc).unwrap();
        let report = graph_diameter(&graph, true);
        assert!(!report.connected);
        assert_eq!(report.diameter, None);
        assert_eq!(report.component_sizes.len(), 4);
        // Two elements in different components: no path.
        let x = parse_cycles("(0 1)", 3).unwrap();
        let y = parse_cycles("(0 2)", 3).unwrap();
        let r = distance_and_path(&graph, &x, &y).unwrap();
        assert_eq!(r.distance, None);
    }
}
