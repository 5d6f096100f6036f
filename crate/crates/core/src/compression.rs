//! Compression (shifting) machinery: the dominator shift for chordal hosts,
//! the auxiliary-clique lifting that turns a cross-intersecting tuple into a
//! single intersecting family, and the two-seam split for cycle hosts. Each
//! operation checks its claimed postconditions on every run and aborts with
//! the offending witness serialized if one ever fails.

use crate::error::{Error, Result};
use crate::family::{self, SetFamily};
use crate::graph::{Graph, VertexMap, VertexSet};
use serde_json::json;

fn violation(what: &str, detail: serde_json::Value) -> Error {
    Error::InvariantViolation(json!({ "check": what, "witness": detail }).to_string())
}

fn require_same_host(g: &Graph, fams: &[&SetFamily]) -> Result<usize> {
    let mut r = None;
    for f in fams {
        if f.graph() != g {
            return Err(Error::MismatchedHosts);
        }
        match r {
            None => r = Some(f.r()),
            Some(r0) if r0 != f.r() => {
                return Err(Error::MismatchedUniformity {
                    left: r0,
                    right: f.r(),
                })
            }
            _ => {}
        }
    }
    Ok(r.unwrap_or(0))
}

fn require_cross_intersecting(fams: &[&SetFamily]) -> Result<()> {
    if let Some((i, a, j, b)) = family::cross_violation(fams) {
        return Err(Error::NotCrossIntersecting(format!(
            "family {} member {a:?} is disjoint from family {} member {b:?}",
            i + 1,
            j + 1
        )));
    }
    Ok(())
}

/// Replace `pivot` by `target` in every member whose image is absent from
/// the family snapshot; all decisions consult the pre-shift family.
fn shift_members(snapshot: &SetFamily, target: usize, pivot: usize) -> Vec<VertexSet> {
    snapshot
        .members()
        .iter()
        .map(|&s| {
            if s.contains(pivot) {
                let image = s.without(pivot).with(target);
                if !snapshot.contains(image) {
                    return image;
                }
            }
            s
        })
        .collect()
}

// ---------------------------------------------------------------------------
// chordal compression
// ---------------------------------------------------------------------------

/// One side of a compressed pair.
#[derive(Clone, Debug)]
pub struct CompressedSide {
    /// The family after the dominator shift, still over the original host.
    pub shifted: SetFamily,
    /// Shifted members avoiding the pivot, over the host minus the pivot.
    pub remainder: SetFamily,
    /// Shifted members through the pivot, pivot removed, over the host minus
    /// the pivot's closed neighborhood; uniformity drops by one.
    pub reduced: SetFamily,
}

/// Result of one chordal compression step at a dominated pair of vertices.
#[derive(Clone, Debug)]
pub struct CompressedPair {
    pub target: usize,
    pub pivot: usize,
    pub deleted_graph: Graph,
    pub deleted_map: VertexMap,
    pub reduced_graph: Graph,
    pub reduced_map: VertexMap,
    pub a: CompressedSide,
    pub b: CompressedSide,
}

/// Compress a cross-intersecting pair at vertices with N[target] contained
/// in N[pivot]: shift pivot to target in both families, then split each by
/// pivot membership. Both output pairs are checked to be cross-intersecting
/// in their smaller hosts, and the size bookkeeping
/// |F| = |F'| = |reduced| + |remainder| is enforced.
pub fn compress_pair_chordal(
    g: &Graph,
    a: &SetFamily,
    b: &SetFamily,
    target: usize,
    pivot: usize,
) -> Result<CompressedPair> {
    let r = require_same_host(g, &[a, b])?;
    if !g.is_dominated(target, pivot)? {
        return Err(Error::NotDominated { target, pivot });
    }
    require_cross_intersecting(&[a, b])?;
    if r == 0 {
        return Err(Error::InvalidParams("compression needs r >= 1".into()));
    }

    let (deleted_graph, deleted_map) = g.delete_vertex(pivot)?;
    let (reduced_graph, reduced_map) = g.delete_closed_neighborhood(pivot)?;

    let split = |original: &SetFamily, side: &str| -> Result<CompressedSide> {
        let shifted_members = shift_members(original, target, pivot);
        let shifted = SetFamily::new(g.clone(), r, shifted_members).map_err(|e| {
            violation(
                "shift image stays an independent r-set",
                json!({ "side": side, "error": e.to_string() }),
            )
        })?;
        if shifted.len() != original.len() {
            return Err(violation(
                "shift is injective on the family",
                json!({ "side": side, "before": original.len(), "after": shifted.len() }),
            ));
        }
        let with_pivot = shifted.filter(|m| m.contains(pivot));
        let without_pivot = shifted.filter(|m| !m.contains(pivot));
        let remainder_members = without_pivot
            .members()
            .iter()
            .map(|&m| deleted_map.map_set(m).expect("members avoid the pivot"))
            .collect();
        let remainder = SetFamily::new(deleted_graph.clone(), r, remainder_members)?;
        let reduced_members = with_pivot
            .members()
            .iter()
            .map(|&m| {
                reduced_map
                    .map_set(m.without(pivot))
                    .expect("members avoid the pivot's neighborhood")
            })
            .collect();
        let reduced = SetFamily::new(reduced_graph.clone(), r - 1, reduced_members)?;
        if reduced.len() + remainder.len() != original.len() {
            return Err(violation(
                "split preserves the family size",
                json!({
                    "side": side,
                    "family": original.len(),
                    "reduced": reduced.len(),
                    "remainder": remainder.len(),
                }),
            ));
        }
        Ok(CompressedSide {
            shifted,
            remainder,
            reduced,
        })
    };

    let side_a = split(a, "a")?;
    let side_b = split(b, "b")?;

    // the compressed-pair lemma: both split pairs stay cross-intersecting
    if let Some((_, x, _, y)) = family::cross_violation(&[&side_a.reduced, &side_b.reduced]) {
        return Err(violation(
            "reduced pair is cross-intersecting",
            json!({ "a_member": format!("{x:?}"), "b_member": format!("{y:?}") }),
        ));
    }
    if let Some((_, x, _, y)) = family::cross_violation(&[&side_a.remainder, &side_b.remainder]) {
        return Err(violation(
            "remainder pair is cross-intersecting",
            json!({ "a_member": format!("{x:?}"), "b_member": format!("{y:?}") }),
        ));
    }

    Ok(CompressedPair {
        target,
        pivot,
        deleted_graph,
        deleted_map,
        reduced_graph,
        reduced_map,
        a: side_a,
        b: side_b,
    })
}

// ---------------------------------------------------------------------------
// auxiliary-clique lifting
// ---------------------------------------------------------------------------

/// Attach a fresh k-clique and tag the members of the i-th family with its
/// i-th vertex, producing a single (r+1)-uniform family over the extended
/// graph. The total size is preserved and the result is checked to be
/// intersecting.
pub fn lift_to_auxiliary(g: &Graph, families: &[&SetFamily]) -> Result<(Graph, SetFamily)> {
    if families.is_empty() {
        return Err(Error::InvalidParams("lift needs at least one family".into()));
    }
    let r = require_same_host(g, families)?;
    require_cross_intersecting(families)?;
    let n = g.n();
    let k = families.len();
    let mut all_edges = g.edges();
    all_edges.extend((0..k).flat_map(|i| (i + 1..k).map(move |j| (n + i, n + j))));
    let g2 = Graph::from_edges(n + k, &all_edges)?;

    let total: usize = families.iter().map(|f| f.len()).sum();
    let lifted_members: Vec<VertexSet> = families
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.members().iter().map(move |&m| m.with(n + i)))
        .collect();
    let lifted = SetFamily::new(g2.clone(), r + 1, lifted_members)?;
    if lifted.len() != total {
        return Err(violation(
            "lifted family keeps the total size",
            json!({ "expected": total, "got": lifted.len() }),
        ));
    }
    if !family::is_intersecting(&lifted) {
        let ms = lifted.members();
        let bad = (0..ms.len())
            .flat_map(|i| (i + 1..ms.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !ms[i].intersects(ms[j]));
        return Err(violation(
            "lifted family is intersecting",
            json!({ "pair": bad.map(|(i, j)| vec![ms[i].to_one_based(), ms[j].to_one_based()]) }),
        ));
    }
    Ok((g2, lifted))
}

// ---------------------------------------------------------------------------
// cycle split
// ---------------------------------------------------------------------------

/// The full seam decomposition of a family over the standard cycle: the two
/// pinch groups, the shifted core, and the parts re-hosted on the one- and
/// two-step contractions of the cycle.
#[derive(Clone, Debug)]
pub struct CycleSplit {
    pub n: usize,
    pub r: usize,
    /// Contraction of the last edge; isomorphic to the (n-1)-cycle.
    pub small_host: Graph,
    pub small_map: VertexMap,
    /// Second contraction; isomorphic to the (n-2)-cycle.
    pub tiny_host: Graph,
    pub tiny_map: VertexMap,
    /// Members holding both neighbors of the second-to-last vertex (over the
    /// original cycle).
    pub pinch_second_last_raw: SetFamily,
    /// Members holding both neighbors of the last vertex.
    pub pinch_last_raw: SetFamily,
    /// The same two groups with the last (resp. second-to-last) vertex
    /// removed, re-hosted on the twice-contracted cycle.
    pub pinch_second_last: SetFamily,
    pub pinch_last: SetFamily,
    /// Everything else, over the original cycle.
    pub core: SetFamily,
    /// The core after the end shift (last vertex to second-to-last).
    pub shifted_core: SetFamily,
    /// Shifted members avoiding the last vertex, on the contracted cycle.
    pub on_small: SetFamily,
    /// Shifted members through the last vertex, with it removed, on the
    /// twice-contracted cycle.
    pub residue: SetFamily,
    /// pinch_second_last, pinch_last and residue together; checked to be a
    /// disjoint union.
    pub merged: SetFamily,
}

/// Split a family over the standard cycle at its seam. Checks on every run:
/// the shift is injective, every residue member extends back into the core
/// (claim 2), the three merged parts are pairwise disjoint (claim 3), sizes
/// add up, and both contracted hosts are isomorphic to the smaller standard
/// cycles.
pub fn cycle_split(f: &SetFamily) -> Result<CycleSplit> {
    let g = f.graph();
    let n = g.n();
    if n < 4 || *g != Graph::cycle(n)? {
        return Err(Error::HostNotCycle(n));
    }
    let r = f.r();
    if r == 0 {
        return Err(Error::InvalidParams("cycle split needs r >= 1".into()));
    }
    let last = n - 1;
    let second_last = n - 2;
    let third_last = n - 3;
    let first = 0;

    let (small_host, small_map) = g.contract_edge(second_last, last)?;
    let (tiny_host, tiny_step) = small_host.contract_edge(third_last, second_last)?;
    let tiny_map = small_map.then(&tiny_step);
    if !small_host.is_isomorphic_to(&Graph::cycle(n - 1)?) {
        return Err(violation("first contraction yields the smaller cycle", json!(n)));
    }
    if !tiny_host.is_isomorphic_to(&Graph::cycle(n - 2)?) {
        return Err(violation("second contraction yields the smaller cycle", json!(n)));
    }

    let pinch_second_last_raw =
        f.filter(|m| m.contains(third_last) && m.contains(last));
    let pinch_last_raw = f.filter(|m| m.contains(first) && m.contains(second_last));
    let core = f.filter(|m| {
        !(m.contains(third_last) && m.contains(last))
            && !(m.contains(first) && m.contains(second_last))
    });

    let shifted_members = shift_members(&core, second_last, last);
    let shifted_core = SetFamily::new(g.clone(), r, shifted_members).map_err(|e| {
        violation("cycle shift image stays independent", json!(e.to_string()))
    })?;
    if shifted_core.len() != core.len() {
        return Err(violation(
            "cycle shift is injective",
            json!({ "before": core.len(), "after": shifted_core.len() }),
        ));
    }

    let rehost = |members: Vec<VertexSet>, host: &Graph, map: &VertexMap, rr: usize| {
        let mapped: Option<Vec<VertexSet>> =
            members.iter().map(|&m| map.map_set(m)).collect();
        let mapped = mapped.expect("contraction maps are total");
        SetFamily::new(host.clone(), rr, mapped)
    };

    let on_small = rehost(
        shifted_core
            .members()
            .iter()
            .copied()
            .filter(|m| !m.contains(last))
            .collect(),
        &small_host,
        &small_map,
        r,
    )?;
    let residue_members: Vec<VertexSet> = shifted_core
        .members()
        .iter()
        .copied()
        .filter(|m| m.contains(last))
        .map(|m| m.without(last))
        .collect();
    // claim 2: a residue member plus the second-to-last vertex is in the core
    for &m in &residue_members {
        if !core.contains(m.with(second_last)) {
            return Err(violation(
                "residue member extends back into the core",
                json!(m.with(second_last).to_one_based()),
            ));
        }
    }
    let residue = rehost(residue_members, &tiny_host, &tiny_map, r.saturating_sub(1))?;

    let pinch_second_last = rehost(
        pinch_second_last_raw
            .members()
            .iter()
            .map(|&m| m.without(last))
            .collect(),
        &tiny_host,
        &tiny_map,
        r - 1,
    )?;
    let pinch_last = rehost(
        pinch_last_raw
            .members()
            .iter()
            .map(|&m| m.without(second_last))
            .collect(),
        &tiny_host,
        &tiny_map,
        r - 1,
    )?;

    // claim 3: the three parts are pairwise disjoint as families
    let parts = [&pinch_second_last, &pinch_last, &residue];
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if let Some(shared) = parts[i].members().iter().find(|m| parts[j].contains(**m)) {
                return Err(violation(
                    "merged parts are pairwise disjoint",
                    json!({ "parts": [i, j], "shared": shared.to_one_based() }),
                ));
            }
        }
    }
    let merged = SetFamily::new(
        tiny_host.clone(),
        r - 1,
        parts
            .iter()
            .flat_map(|p| p.members().iter().copied())
            .collect(),
    )?;
    if merged.len() != pinch_second_last.len() + pinch_last.len() + residue.len() {
        return Err(violation("merged union is disjoint", json!(merged.len())));
    }
    if on_small.len() + merged.len() != f.len() {
        return Err(violation(
            "split preserves the family size",
            json!({
                "family": f.len(),
                "on_small": on_small.len(),
                "merged": merged.len(),
            }),
        ));
    }

    Ok(CycleSplit {
        n,
        r,
        small_host,
        small_map,
        tiny_host,
        tiny_map,
        pinch_second_last_raw,
        pinch_last_raw,
        pinch_second_last,
        pinch_last,
        core,
        shifted_core,
        on_small,
        residue,
        merged,
    })
}

/// Outcome of the cross-intersection claims over a pair of splits.
#[derive(Clone, Debug)]
pub struct CrossClaims {
    pub small_pair_ok: bool,
    pub merged_pair_ok: bool,
    pub counterexample: Option<serde_json::Value>,
}

impl CrossClaims {
    pub fn pass(&self) -> bool {
        self.small_pair_ok && self.merged_pair_ok
    }
}

/// Claim 4: splits of a cross-intersecting pair give cross-intersecting
/// pairs on both contracted hosts. A false outcome carries the violating
/// member pair; on valid input it indicts the implementation, not the
/// mathematics.
pub fn verify_cross_claims(a: &CycleSplit, b: &CycleSplit) -> Result<CrossClaims> {
    if a.n != b.n || a.r != b.r {
        return Err(Error::MismatchedHosts);
    }
    let mut counterexample = None;
    let small = family::cross_violation(&[&a.on_small, &b.on_small]);
    if let Some((_, x, _, y)) = small {
        counterexample = Some(json!({
            "stage": "contracted-cycle pair",
            "a_member": x.to_one_based(),
            "b_member": y.to_one_based(),
        }));
    }
    let merged = family::cross_violation(&[&a.merged, &b.merged]);
    if counterexample.is_none() {
        if let Some((_, x, _, y)) = merged {
            counterexample = Some(json!({
                "stage": "twice-contracted pair",
                "a_member": x.to_one_based(),
                "b_member": y.to_one_based(),
            }));
        }
    }
    Ok(CrossClaims {
        small_pair_ok: small.is_none(),
        merged_pair_ok: merged.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal;
    use crate::family::{enumerate_independent, is_cross_intersecting, star, SetFamily};
    use crate::sample;

    fn fam(g: &Graph, r: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(
            g.clone(),
            r,
            sets.iter().map(|s| VertexSet::from_slice(s)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn compress_path_example() {
        // path 1-2-3 (1-based), families both {{2}}: the shift moves 2 to 1
        let g = Graph::path(3).unwrap();
        let a = fam(&g, 1, &[&[1]]);
        let out = compress_pair_chordal(&g, &a, &a, 0, 1).unwrap();
        assert_eq!(out.a.shifted.members(), &[VertexSet::singleton(0)]);
        assert!(out.a.reduced.is_empty());
        assert_eq!(out.a.remainder.len(), 1);
        // vertex 1 (0-based 0) survives deletion of the pivot as label 0
        assert_eq!(out.a.remainder.members(), &[VertexSet::singleton(0)]);
    }

    #[test]
    fn blocked_shift_keeps_member() {
        // both the pivot member {1,3} and its image {0,3} are present:
        // nothing moves
        let g = Graph::path(4).unwrap();
        let a = fam(&g, 2, &[&[1, 3], &[0, 3]]);
        let out = compress_pair_chordal(&g, &a, &a, 0, 1).unwrap();
        assert_eq!(out.a.shifted, a);
    }

    #[test]
    fn compress_idempotent() {
        for seed in 0..40u64 {
            let g = chordal::random_chordal(8, 0.35, seed).unwrap();
            let ord = chordal::find_elimination_ordering(&g).unwrap();
            let Some(&target) = ord.iter().find(|&&v| g.degree(v) >= 1) else {
                continue;
            };
            if !chordal::is_simplicial(&g, target).unwrap() {
                continue;
            }
            let pivot = g.neighbors(target).iter().next().unwrap();
            let r = 2;
            let full = enumerate_independent(&g, r);
            if full.is_empty() {
                continue;
            }
            let (a, b) = sample::random_cross_pair(&full, 0.4, 0.6, seed);
            let once = compress_pair_chordal(&g, &a, &b, target, pivot).unwrap();
            let twice =
                compress_pair_chordal(&g, &once.a.shifted, &once.b.shifted, target, pivot)
                    .unwrap();
            assert_eq!(once.a.shifted, twice.a.shifted, "seed {seed}");
            assert_eq!(once.b.shifted, twice.b.shifted, "seed {seed}");
        }
    }

    #[test]
    fn compress_rejects_bad_input() {
        let g = Graph::path(3).unwrap();
        let a = fam(&g, 1, &[&[2]]);
        // N[2] not within N[0]
        assert!(matches!(
            compress_pair_chordal(&g, &a, &a, 2, 0),
            Err(Error::NotDominated { .. })
        ));
        // not cross-intersecting
        let x = fam(&g, 1, &[&[0]]);
        let y = fam(&g, 1, &[&[2]]);
        assert!(matches!(
            compress_pair_chordal(&g, &x, &y, 0, 1),
            Err(Error::NotCrossIntersecting(_))
        ));
    }

    #[test]
    fn lift_examples() {
        // shared vertex: both lifted members intersect through it
        let g = Graph::matching(2).unwrap();
        let a = fam(&g, 1, &[&[0]]);
        let (g2, lifted) = lift_to_auxiliary(&g, &[&a, &a]).unwrap();
        assert_eq!(g2.n(), 6);
        assert_eq!(lifted.len(), 2);
        assert_eq!(lifted.r(), 2);
        assert!(family::is_intersecting(&lifted));

        // all families empty
        let e = SetFamily::empty(g.clone(), 1);
        let (_, lifted) = lift_to_auxiliary(&g, &[&e, &e, &e]).unwrap();
        assert!(lifted.is_empty());

        // first family not itself intersecting; second empty
        let g = Graph::clique_union(&[2, 2]).unwrap();
        let a = fam(&g, 1, &[&[0], &[2]]);
        let e = SetFamily::empty(g.clone(), 1);
        let (_, lifted) = lift_to_auxiliary(&g, &[&a, &e]).unwrap();
        assert_eq!(lifted.len(), 2);
        assert!(family::is_intersecting(&lifted));

        // cross-intersection is a precondition
        let b = fam(&g, 1, &[&[1]]);
        assert!(matches!(
            lift_to_auxiliary(&g, &[&a, &b]),
            Err(Error::NotCrossIntersecting(_))
        ));
    }

    #[test]
    fn cycle_split_worked_example() {
        // 1-based: A = {{3,5},{1,3}} over the 5-cycle
        let g = Graph::cycle(5).unwrap();
        let a = fam(&g, 2, &[&[2, 4], &[0, 2]]);
        let split = cycle_split(&a).unwrap();
        assert_eq!(split.pinch_second_last.members(), &[VertexSet::singleton(2)]);
        assert!(split.pinch_last.is_empty());
        assert_eq!(split.core.members(), &[VertexSet::from_slice(&[0, 2])]);
        assert_eq!(split.shifted_core, split.core);
        assert_eq!(split.on_small.members(), &[VertexSet::from_slice(&[0, 2])]);
        assert!(split.residue.is_empty());
        assert_eq!(split.merged.len(), 1);
    }

    #[test]
    fn cycle_split_counts_whole_family() {
        let g = Graph::cycle(5).unwrap();
        let all = enumerate_independent(&g, 2);
        let split = cycle_split(&all).unwrap();
        assert_eq!(split.on_small.len(), 2); // |J^2(C_4)|
        assert_eq!(split.merged.len(), 3); // |J^1(C_3)|
        assert_eq!(split.on_small.len() + split.merged.len(), all.len());

        let empty = SetFamily::empty(g, 2);
        let split = cycle_split(&empty).unwrap();
        assert!(split.on_small.is_empty() && split.merged.is_empty());
    }

    #[test]
    fn cycle_split_rejects_non_cycles() {
        let g = Graph::path(5).unwrap();
        let f = enumerate_independent(&g, 2);
        assert!(matches!(cycle_split(&f), Err(Error::HostNotCycle(5))));
        let g = Graph::cycle(3).unwrap();
        let f = enumerate_independent(&g, 1);
        assert!(matches!(cycle_split(&f), Err(Error::HostNotCycle(3))));
    }

    #[test]
    fn cross_claims_on_examples() {
        let g = Graph::cycle(5).unwrap();
        let all = enumerate_independent(&g, 2);
        let none = SetFamily::empty(g.clone(), 2);
        let claims =
            verify_cross_claims(&cycle_split(&all).unwrap(), &cycle_split(&none).unwrap())
                .unwrap();
        assert!(claims.pass());

        let st = star(&g, 2, 0).unwrap();
        assert!(is_cross_intersecting(&[&st, &st]).unwrap());
        let claims =
            verify_cross_claims(&cycle_split(&st).unwrap(), &cycle_split(&st).unwrap()).unwrap();
        assert!(claims.pass(), "{:?}", claims.counterexample);
    }

    #[test]
    fn cross_claims_randomized() {
        for seed in 0..120u64 {
            let n = 4 + (seed % 6) as usize; // 4..=9
            let r = 1 + (seed as usize / 6) % (n / 2);
            let g = Graph::cycle(n).unwrap();
            let full = enumerate_independent(&g, r);
            let (a, b) = sample::random_cross_pair(&full, 0.5, 0.6, seed);
            let sa = cycle_split(&a).unwrap();
            let sb = cycle_split(&b).unwrap();
            let claims = verify_cross_claims(&sa, &sb).unwrap();
            assert!(claims.pass(), "seed {seed}: {:?}", claims.counterexample);
        }
    }

    #[test]
    fn chordal_lemma_randomized() {
        let mut ran = 0;
        for seed in 0..80u64 {
            let g = chordal::random_chordal(8, 0.3, seed).unwrap();
            let Some(target) =
                g.vertices().find(|&v| {
                    g.degree(v) >= 1 && chordal::is_simplicial(&g, v).unwrap()
                })
            else {
                continue;
            };
            for pivot in g.neighbors(target).iter() {
                let full = enumerate_independent(&g, 2);
                let (a, b) = sample::random_cross_pair(&full, 0.45, 0.65, seed);
                // postconditions (the compressed-pair lemma) are checked
                // inside; an Err here is a failure
                compress_pair_chordal(&g, &a, &b, target, pivot).unwrap();
                ran += 1;
            }
        }
        assert!(ran > 50, "harness exercised {ran} compressions");
    }
}
