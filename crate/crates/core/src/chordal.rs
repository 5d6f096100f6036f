//! Chordal graph recognition via simplicial elimination orderings, plus a
//! seeded generator of random chordal instances for the property harnesses.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// True iff the neighborhood of `v` induces a clique. Isolated vertices are
/// simplicial vacuously.
pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(g.is_clique(g.neighbors(v)))
}

fn simplicial_within(g: &Graph, v: usize, remaining: VertexSet) -> bool {
    let nbrs = g.neighbors(v).intersection(remaining);
    nbrs.iter()
        .all(|u| nbrs.without(u).is_subset_of(g.neighbors(u)))
}

/// Greedy simplicial elimination: repeatedly remove the smallest-index
/// vertex that is simplicial among the survivors. Succeeds exactly on
/// chordal graphs; the result is deterministic.
pub fn find_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut remaining = g.vertex_mask();
    let mut order = Vec::with_capacity(g.n());
    while !remaining.is_empty() {
        let next = remaining
            .iter()
            .find(|&v| simplicial_within(g, v, remaining))?;
        order.push(next);
        remaining = remaining.without(next);
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    find_elimination_ordering(g).is_some()
}

/// Search for an induced cycle on at least 4 vertices, returned in cycle
/// order (0-based). Subset scan, usable up to n = 20 or so; the CLI offers
/// it as a non-chordality certificate for n <= 10.
pub fn find_long_induced_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    assert!(n <= 20, "certificate search is a desk-scale subset scan");
    let mut best: Option<VertexSet> = None;
    for mask in 0..(1u64 << n) {
        let set = VertexSet(mask);
        if set.len() < 4 {
            continue;
        }
        if let Some(b) = best {
            if set.len() >= b.len() {
                continue;
            }
        }
        if induces_cycle(g, set) {
            best = Some(set);
        }
    }
    best.map(|set| walk_cycle(g, set))
}

/// Does `set` induce a connected 2-regular subgraph?
fn induces_cycle(g: &Graph, set: VertexSet) -> bool {
    if set.iter().any(|v| g.neighbors(v).intersection(set).len() != 2) {
        return false;
    }
    let start = set.iter().next().expect("nonempty");
    let mut comp = VertexSet::singleton(start);
    loop {
        let grown = comp.iter().fold(comp, |acc, u| {
            acc.union(g.neighbors(u).intersection(set))
        });
        if grown == comp {
            break;
        }
        comp = grown;
    }
    comp == set
}

fn walk_cycle(g: &Graph, set: VertexSet) -> Vec<usize> {
    let start = set.iter().next().expect("nonempty");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).intersection(set).iter().next().unwrap();
    while cur != start {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .intersection(set)
            .iter()
            .find(|&u| u != prev)
            .unwrap();
        prev = cur;
        cur = next;
    }
    order
}

/// Random chordal graph, built by attaching each new vertex to a subset of
/// an existing clique, so a reverse insertion order is a simplicial
/// elimination ordering. The attachment size is Binomial(i, density), hence
/// density 0.0 gives the empty graph and 1.0 the complete graph. Output may
/// be disconnected. Reproducible per seed.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph> {
    assert!((0.0..=1.0).contains(&density), "density must be in [0, 1]");
    let mut g = Graph::empty(n)?;
    if n == 0 {
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // one clique per vertex: the clique it was attached to, plus itself
    let mut cliques: Vec<VertexSet> = vec![VertexSet::singleton(0)];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        let mut want = (0..v).filter(|_| rng.random_bool(density)).count();
        let available = cliques.iter().map(|c| c.len()).max().unwrap();
        want = want.min(available);
        let mut attach = VertexSet::EMPTY;
        if want > 0 {
            let eligible: Vec<&VertexSet> =
                cliques.iter().filter(|c| c.len() >= want).collect();
            let host = eligible[rng.random_range(0..eligible.len())];
            let verts = host.to_vec();
            for idx in sample(&mut rng, verts.len(), want) {
                attach = attach.with(verts[idx]);
            }
            for u in attach.iter() {
                edges.push((u, v));
            }
        }
        cliques.push(attach.with(v));
    }
    g = Graph::from_edges(n, &edges)?;
    debug_assert!(is_chordal(&g));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplicial_examples() {
        let p3 = Graph::path(3).unwrap();
        assert!(is_simplicial(&p3, 0).unwrap());
        assert!(!is_simplicial(&p3, 1).unwrap());
        let k4 = Graph::clique(4).unwrap();
        for v in 0..4 {
            assert!(is_simplicial(&k4, v).unwrap());
        }
        assert!(is_simplicial(&Graph::empty(3).unwrap(), 1).unwrap());
    }

    #[test]
    fn elimination_orderings() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(find_elimination_ordering(&p3), Some(vec![0, 1, 2]));
        assert_eq!(find_elimination_ordering(&Graph::cycle(4).unwrap()), None);
        let cu = Graph::clique_union(&[2, 3]).unwrap();
        let ord = find_elimination_ordering(&cu).unwrap();
        // replay: each vertex simplicial among its successors
        let mut remaining = cu.vertex_mask();
        for &v in &ord {
            assert!(simplicial_within(&cu, v, remaining));
            remaining = remaining.without(v);
        }
    }

    #[test]
    fn chordality_examples() {
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(is_chordal(&Graph::cycle(3).unwrap()));
        assert!(is_chordal(&Graph::matching(3).unwrap()));
        assert!(is_chordal(&Graph::path(7).unwrap()));
        assert!(!is_chordal(&Graph::cycle(9).unwrap()));
    }

    #[test]
    fn certificate_is_a_long_induced_cycle() {
        let c6 = Graph::cycle(6).unwrap();
        let cyc = find_long_induced_cycle(&c6).unwrap();
        assert_eq!(cyc.len(), 6);
        assert!(find_long_induced_cycle(&Graph::path(6).unwrap()).is_none());
        // chordalized 4-cycle has no certificate
        let diag = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(find_long_induced_cycle(&diag).is_none());
    }

    #[test]
    fn chordal_agrees_with_induced_cycle_scan() {
        for seed in 0..200u64 {
            // arbitrary graphs, not necessarily chordal
            let g = crate::sample::random_graph(8, 0.1 + (seed % 8) as f64 * 0.1, seed);
            assert_eq!(
                is_chordal(&g),
                find_long_induced_cycle(&g).is_none(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn generator_extremes_and_heredity() {
        assert_eq!(
            random_chordal(6, 0.0, 7).unwrap(),
            Graph::empty(6).unwrap()
        );
        assert_eq!(
            random_chordal(6, 1.0, 7).unwrap(),
            Graph::clique(6).unwrap()
        );
        for seed in 0..50u64 {
            let g = random_chordal(8, 0.4, seed).unwrap();
            assert!(is_chordal(&g), "seed {seed}");
            assert_eq!(g, random_chordal(8, 0.4, seed).unwrap(), "reproducible");
            // subgraphs of chordal graphs stay chordal
            for v in 0..g.n() {
                let (h, _) = g.delete_vertex(v).unwrap();
                assert!(is_chordal(&h));
            }
        }
    }
}
