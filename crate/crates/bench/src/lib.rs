//! Shared input builders for the benchmark suite: deterministic random
//! graphs and a dense rational matrix with spread-out magnitudes, so the
//! benches exercise realistic arithmetic rather than small-integer fast
//! paths.

use graphlie::{ratio, LabeledDigraph, RationalMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random graph on `n` vertices: each unordered pair carries an
/// edge with probability ~1/2, random orientation, labels drawn from a
/// pool of six and compacted to first-use order.
pub fn random_graph(seed: u64, n: usize) -> LabeledDigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertex_names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut raw: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                let (t, h) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
                raw.push((t, h, rng.gen_range(0..6)));
            }
        }
    }
    let mut seen = Vec::new();
    let mut edges_idx = Vec::new();
    for &(t, h, seed_label) in &raw {
        let dense = seen.iter().position(|&s| s == seed_label).unwrap_or_else(|| {
            seen.push(seed_label);
            seen.len() - 1
        });
        edges_idx.push((t, h, dense));
    }
    let label_names: Vec<String> = (0..seen.len()).map(|k| format!("u{k}")).collect();
    let vertex_refs: Vec<&str> = vertex_names.iter().map(String::as_str).collect();
    let edge_refs: Vec<(&str, &str, &str)> = edges_idx
        .iter()
        .map(|&(t, h, l)| {
            (
                vertex_names[t].as_str(),
                vertex_names[h].as_str(),
                label_names[l].as_str(),
            )
        })
        .collect();
    LabeledDigraph::from_named_edges(&vertex_refs, &edge_refs).expect("valid random graph")
}

/// Dense square rational matrix with entries n/d, n in ±1..=40 and d in
/// 1..=7, seeded for reproducibility.
pub fn random_rational_matrix(seed: u64, size: usize) -> RationalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..size)
        .map(|_| {
            (0..size)
                .map(|_| {
                    let n = rng.gen_range(1..=40i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    ratio(n, rng.gen_range(1..=7i64))
                })
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows)
}
