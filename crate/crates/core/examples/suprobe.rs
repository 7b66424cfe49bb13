use ncgraph::families::*;
use ncgraph::quotient::{GraphKind, QuotientGraph};
use rayon::prelude::*;

fn main() {
    let spec = GroupSpec::Psu(4, 2);
    let g = make_group(&spec).unwrap();
    let graph = QuotientGraph::build(g, GraphKind::Nc).unwrap();
    let v = graph.vertex_count();
    println!("V = {v}");

    // Independent: direct adjacency rows for every vertex, no class
    // translation. Compare a sample of rows against the translated ones.
    let t0 = std::time::Instant::now();
    let rows: Vec<Vec<u32>> = (0..v as u32)
        .into_par_iter()
        .map(|a| {
            let x = &graph.verts[a as usize];
            (0..v as u32)
                .filter(|&b| {
                    b != a && {
                        let y = &graph.verts[b as usize];
                        !x.commutes_with(y) && !graph.group.generates_with_unchecked(x, y)
                    }
                })
                .collect()
        })
        .collect();
    println!("direct rows built in {:?}", t0.elapsed());
    let mut mismatches = 0;
    for a in (0..v as u32).step_by(97) {
        let mut tr = graph.row_of(a);
        tr.sort_unstable();
        if tr != rows[a as usize] {
            mismatches += 1;
        }
    }
    println!("row mismatches (sampled): {mismatches}");

    // BFS from every vertex on the direct rows.
    let eccs: Vec<u16> = (0..v as u32)
        .into_par_iter()
        .map(|s| {
            let mut dist = vec![u16::MAX; v];
            dist[s as usize] = 0;
            let mut frontier = vec![s];
            let mut level = 0;
            let mut ecc = 0;
            while !frontier.is_empty() {
                level += 1;
                let mut next = Vec::new();
                for &u in &frontier {
                    for &w in &rows[u as usize] {
                        if dist[w as usize] == u16::MAX {
                            dist[w as usize] = level;
                            next.push(w);
                        }
                    }
                }
                if !next.is_empty() {
                    ecc = level;
                }
                frontier = next;
            }
            ecc
        })
        .collect();
    let diam = eccs.iter().max().unwrap();
    println!("direct all-pairs quotient diameter: {diam}");
}
