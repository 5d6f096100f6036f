//! Seeded random instances for the property harnesses: arbitrary graphs and
//! cross-intersecting family pairs. Everything is a pure function of its
//! seed.

use crate::family::SetFamily;
use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Erdos-Renyi style graph: each edge present independently with
/// probability `edge_prob`.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_rng(n, edge_prob, &mut rng)
}

/// Same, drawing from a caller-owned generator.
pub fn random_graph_rng(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

/// A random cross-intersecting pair over the given family: the first side is
/// a random subfamily, the second a random subfamily of the sets compatible
/// with every chosen first-side member. Every cross-intersecting pair arises
/// this way for some draw.
pub fn random_cross_pair(
    family: &SetFamily,
    keep_a: f64,
    keep_b: f64,
    seed: u64,
) -> (SetFamily, SetFamily) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<_> = family
        .members()
        .iter()
        .copied()
        .filter(|_| rng.random_bool(keep_a.clamp(0.0, 1.0)))
        .collect();
    let b: Vec<_> = family
        .members()
        .iter()
        .copied()
        .filter(|m| a.iter().all(|x| x.intersects(*m)))
        .filter(|_| rng.random_bool(keep_b.clamp(0.0, 1.0)))
        .collect();
    let fa = SetFamily::new(family.graph().clone(), family.r(), a).expect("subfamily");
    let fb = SetFamily::new(family.graph().clone(), family.r(), b).expect("subfamily");
    (fa, fb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{enumerate_independent, is_cross_intersecting};

    #[test]
    fn cross_pairs_are_cross_intersecting() {
        let g = Graph::cycle(8).unwrap();
        let fam = enumerate_independent(&g, 3);
        for seed in 0..100 {
            let (a, b) = random_cross_pair(&fam, 0.4, 0.7, seed);
            assert!(is_cross_intersecting(&[&a, &b]).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn random_graphs_are_reproducible() {
        assert_eq!(random_graph(7, 0.5, 3), random_graph(7, 0.5, 3));
    }
}
