//! Small simple graphs as per-vertex adjacency bitmasks (at most 64 vertices).
//!
//! Vertices are `0..n-1` internally; all file and CLI I/O is 1-based.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Hard capacity: one machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices of a graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_slice(vs: &[usize]) -> VertexSet {
        VertexSet(vs.iter().fold(0u64, |m, &v| m | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterate members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Sorted 1-based vertex list, the external representation.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    pub fn from_one_based(vs: &[usize], n: usize) -> Result<VertexSet> {
        let mut set = VertexSet::EMPTY;
        for &v in vs {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange {
                    v: v.wrapping_sub(1),
                    n,
                });
            }
            set = set.with(v - 1);
        }
        Ok(set)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

/// Total map from old vertices to new vertices produced by a graph transform.
///
/// Deletions map to `None`; a contraction maps both endpoints to the merged
/// vertex. Surviving labels are compacted preserving order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    forward: Vec<Option<usize>>,
    new_n: usize,
}

impl VertexMap {
    fn from_forward(forward: Vec<Option<usize>>, new_n: usize) -> VertexMap {
        VertexMap { forward, new_n }
    }

    pub fn old_n(&self) -> usize {
        self.forward.len()
    }

    pub fn new_n(&self) -> usize {
        self.new_n
    }

    pub fn map_vertex(&self, v: usize) -> Option<usize> {
        self.forward.get(v).copied().flatten()
    }

    /// Push a vertex set through the map. `None` if any member was deleted.
    /// Under a contraction the image may be smaller than the input.
    pub fn map_set(&self, set: VertexSet) -> Option<VertexSet> {
        let mut out = VertexSet::EMPTY;
        for v in set.iter() {
            out = out.with(self.map_vertex(v)?);
        }
        Some(out)
    }

    /// Compose with a later map: `self` then `next`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        let forward = self
            .forward
            .iter()
            .map(|&m| m.and_then(|v| next.map_vertex(v)))
            .collect();
        VertexMap::from_forward(forward, next.new_n)
    }
}

/// An undirected simple graph on at most [`MAX_VERTICES`] vertices.
///
/// Immutable after construction; every transform returns a fresh graph
/// together with the [`VertexMap`] that relabels the survivors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges_one_based())
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Graph {
    /// Graph on `n` vertices with no edges. `n = 0` is allowed: transforms
    /// may legitimately empty a graph out.
    pub fn empty(n: usize) -> Result<Graph> {
        check_capacity(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidGraphSpec("path needs n >= 1".into()));
        }
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge_mut(v - 1, v);
        }
        Ok(g)
    }

    /// The cycle on `n >= 2` vertices, with `cycle(2)` a solitary edge and
    /// `cycle(3)` a triangle. Edges are `{i, i+1}` plus the wrap edge
    /// `{0, n-1}`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidGraphSpec("cycle needs n >= 2".into()));
        }
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge_mut(v - 1, v);
        }
        if n > 2 {
            g.add_edge_mut(0, n - 1);
        }
        Ok(g)
    }

    /// Perfect matching with `edges` disjoint edges on `2 * edges` vertices;
    /// edge i joins vertices `2i` and `2i + 1`.
    pub fn matching(edges: usize) -> Result<Graph> {
        if edges < 1 {
            return Err(Error::InvalidGraphSpec("matching needs n >= 1 edges".into()));
        }
        let mut g = Graph::empty(2 * edges)?;
        for i in 0..edges {
            g.add_edge_mut(2 * i, 2 * i + 1);
        }
        Ok(g)
    }

    pub fn clique(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidGraphSpec("clique needs n >= 1".into()));
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_mut(u, v);
            }
        }
        Ok(g)
    }

    /// Disjoint union of cliques with the given sizes, laid out consecutively.
    pub fn clique_union(sizes: &[usize]) -> Result<Graph> {
        if sizes.is_empty() || sizes.iter().any(|&s| s < 1) {
            return Err(Error::InvalidGraphSpec(
                "clique union needs at least one size, all >= 1".into(),
            ));
        }
        let n: usize = sizes.iter().sum();
        let mut g = Graph::empty(n)?;
        let mut base = 0;
        for &s in sizes {
            for u in base..base + s {
                for v in u + 1..base + s {
                    g.add_edge_mut(u, v);
                }
            }
            base += s;
        }
        Ok(g)
    }

    /// Build from an explicit 0-based edge list. Duplicate edges are merged
    /// silently; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::InvalidGraphSpec(format!("loop at vertex {}", u + 1)));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Full vertex set as a mask.
    pub fn vertex_mask(&self) -> VertexSet {
        if self.n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << self.n) - 1)
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    /// Open neighborhood of `v` as a mask.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    /// N[v] = {v} together with the neighbors of v.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v] | (1 << v)))
    }

    /// True iff N[target] is contained in N[pivot]. A true result forces
    /// `target` and `pivot` to be adjacent, which is asserted.
    pub fn is_dominated(&self, target: usize, pivot: usize) -> Result<bool> {
        self.check_vertex(target)?;
        self.check_vertex(pivot)?;
        if target == pivot {
            return Err(Error::InvalidParams(
                "domination check needs two distinct vertices".into(),
            ));
        }
        let nt = self.closed_neighborhood(target)?;
        let np = self.closed_neighborhood(pivot)?;
        let dominated = nt.is_subset_of(np);
        if dominated {
            assert!(
                self.has_edge(target, pivot),
                "closed-neighborhood containment must force the edge"
            );
        }
        Ok(dominated)
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// True iff the vertices of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset_of(VertexSet(self.adj[v])))
    }

    /// Remove one vertex; surviving vertices are relabeled compactly.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        self.delete_set(VertexSet::singleton(v))
    }

    /// Remove N[v], the vertex together with all its neighbors.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<(Graph, VertexMap)> {
        let closed = self.closed_neighborhood(v)?;
        self.delete_set(closed)
    }

    fn delete_set(&self, gone: VertexSet) -> Result<(Graph, VertexMap)> {
        let mut forward = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone.contains(v) {
                forward[v] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::empty(next)?;
        for u in 0..self.n {
            let Some(nu) = forward[u] else { continue };
            for v in VertexSet(self.adj[u]).iter() {
                if let Some(nv) = forward[v] {
                    if nu < nv {
                        g.add_edge_mut(nu, nv);
                    }
                }
            }
        }
        Ok((g, VertexMap::from_forward(forward, next)))
    }

    /// Contract the edge {u, v}: the endpoints merge into one vertex placed
    /// at the smaller label; the output is simple (parallel edges merged,
    /// the loop dropped).
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut forward = vec![None; self.n];
        let mut next = 0;
        for w in 0..self.n {
            if w != gone {
                forward[w] = Some(next);
                next += 1;
            }
        }
        forward[gone] = forward[keep];
        let mut g = Graph::empty(next)?;
        for a in 0..self.n {
            let na = forward[a].unwrap();
            for b in VertexSet(self.adj[a]).iter() {
                let nb = forward[b].unwrap();
                if na != nb && na < nb {
                    g.add_edge_mut(na, nb);
                }
            }
        }
        Ok((g, VertexMap::from_forward(forward, next)))
    }

    /// Connected components as vertex masks, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |acc, u| acc.union(VertexSet(self.adj[u])));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// canonical forms (desk-scale fixtures only)
// ---------------------------------------------------------------------------

/// Adjacency-list wrapper implementing `Canonize` so fixtures can be
/// compared up to isomorphism.
#[derive(Ord, PartialOrd, PartialEq, Eq, Clone, Debug)]
struct CanonGraph {
    adj: Vec<Vec<usize>>,
}

impl CanonGraph {
    fn of(g: &Graph) -> CanonGraph {
        CanonGraph {
            adj: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }
}

impl canonical_form::Canonize for CanonGraph {
    fn size(&self) -> usize {
        self.adj.len()
    }

    fn apply_morphism(&self, perm: &[usize]) -> Self {
        let mut adj = vec![Vec::new(); self.adj.len()];
        for (i, nbrs) in self.adj.iter().enumerate() {
            adj[perm[i]] = nbrs.iter().map(|&u| perm[u]).collect();
            adj[perm[i]].sort_unstable();
        }
        CanonGraph { adj }
    }

    fn invariant_neighborhood(&self, u: usize) -> Vec<Vec<usize>> {
        vec![self.adj[u].clone()]
    }
}

impl Graph {
    /// Canonically relabeled copy; two graphs are isomorphic iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> Graph {
        use canonical_form::Canonize;
        let canon = CanonGraph::of(self).canonical();
        let mut g = Graph::empty(self.n).expect("same size");
        for (u, nbrs) in canon.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    g.add_edge_mut(u, v);
                }
            }
        }
        g
    }

    pub fn is_isomorphic_to(&self, other: &Graph) -> bool {
        self.n == other.n && self.canonical() == other.canonical()
    }
}

// ---------------------------------------------------------------------------
// external formats
// ---------------------------------------------------------------------------

/// JSON form: `{"n": 5, "edges": [[1,2], [2,3]]}` with 1-based vertices.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            n: self.n,
            edges: self.edges_one_based(),
        })
        .expect("graph json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Graph> {
        let parsed: GraphJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidGraphSpec(format!("bad graph json: {e}")))?;
        let mut edges = Vec::with_capacity(parsed.edges.len());
        for (u, v) in parsed.edges {
            if u == 0 || v == 0 {
                return Err(Error::InvalidGraphSpec(
                    "graph json uses 1-based vertices".into(),
                ));
            }
            edges.push((u - 1, v - 1));
        }
        Graph::from_edges(parsed.n, &edges)
    }

    /// Parse a builder string: `empty:5`, `path:6`, `cycle:7`, `matching:4`,
    /// `clique:5`, or `cliques:2,3,3`.
    pub fn parse_spec(spec: &str) -> Result<Graph> {
        let (kind, args) = spec
            .split_once(':')
            .ok_or_else(|| Error::InvalidGraphSpec(format!("missing ':' in '{spec}'")))?;
        let bad = |e: std::num::ParseIntError| {
            Error::InvalidGraphSpec(format!("bad number in '{spec}': {e}"))
        };
        match kind {
            "empty" | "path" | "cycle" | "matching" | "clique" => {
                let n: usize = args.trim().parse().map_err(bad)?;
                match kind {
                    "empty" => {
                        if n < 1 {
                            return Err(Error::InvalidGraphSpec("empty needs n >= 1".into()));
                        }
                        Graph::empty(n)
                    }
                    "path" => Graph::path(n),
                    "cycle" => Graph::cycle(n),
                    "matching" => Graph::matching(n),
                    "clique" => Graph::clique(n),
                    _ => unreachable!(),
                }
            }
            "cliques" => {
                let sizes = args
                    .split(',')
                    .map(|s| s.trim().parse::<usize>().map_err(bad))
                    .collect::<Result<Vec<_>>>()?;
                Graph::clique_union(&sizes)
            }
            other => Err(Error::InvalidGraphSpec(format!("unknown kind '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_have_the_right_shape() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let m3 = Graph::matching(3).unwrap();
        assert_eq!(m3.n(), 6);
        assert_eq!(m3.edges(), vec![(0, 1), (2, 3), (4, 5)]);

        let cu = Graph::clique_union(&[2, 3]).unwrap();
        assert_eq!(cu.n(), 5);
        assert_eq!(cu.edge_count(), 4);

        // the footnote convention: a 2-cycle is a solitary edge
        let c2 = Graph::cycle(2).unwrap();
        assert_eq!(c2.edge_count(), 1);
    }

    #[test]
    fn builder_errors() {
        assert!(Graph::cycle(1).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::empty(65).is_err());
        // duplicate edges are merged, not an error
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn delete_vertex_examples() {
        let (g, map) = Graph::cycle(4).unwrap().delete_vertex(1).unwrap();
        assert!(g.is_isomorphic_to(&Graph::path(3).unwrap()));
        assert_eq!(map.map_vertex(1), None);
        assert_eq!(map.map_vertex(3), Some(2));

        let (g, _) = Graph::clique(3).unwrap().delete_vertex(0).unwrap();
        assert!(g.is_isomorphic_to(&Graph::clique(2).unwrap()));

        let (g, _) = Graph::matching(2).unwrap().delete_vertex(0).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 1));
    }

    #[test]
    fn delete_closed_neighborhood_examples() {
        let (g, _) = Graph::cycle(5)
            .unwrap()
            .delete_closed_neighborhood(0)
            .unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));

        let (g, _) = Graph::clique(4)
            .unwrap()
            .delete_closed_neighborhood(2)
            .unwrap();
        assert_eq!(g.n(), 0);

        let (g, _) = Graph::empty(5)
            .unwrap()
            .delete_closed_neighborhood(4)
            .unwrap();
        assert_eq!(g, Graph::empty(4).unwrap());
    }

    #[test]
    fn contract_edge_examples() {
        let (g, map) = Graph::cycle(5).unwrap().contract_edge(3, 4).unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        assert_eq!(map.map_vertex(4), Some(3));
        assert_eq!(map.map_vertex(3), Some(3));

        let (g, _) = Graph::cycle(3).unwrap().contract_edge(0, 1).unwrap();
        assert_eq!(g, Graph::cycle(2).unwrap());

        let (g, _) = Graph::path(2).unwrap().contract_edge(0, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));

        assert!(Graph::matching(2).unwrap().contract_edge(0, 2).is_err());
    }

    #[test]
    fn contracted_cycles_are_cycles() {
        for n in 3..=12 {
            let (g, _) = Graph::cycle(n).unwrap().contract_edge(n - 2, n - 1).unwrap();
            assert!(
                g.is_isomorphic_to(&Graph::cycle(n - 1).unwrap()),
                "contracting the last edge of a {n}-cycle"
            );
        }
    }

    #[test]
    fn closed_neighborhood_and_domination() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            c5.closed_neighborhood(0).unwrap(),
            VertexSet::from_slice(&[0, 1, 4])
        );
        assert_eq!(
            Graph::empty(3).unwrap().closed_neighborhood(2).unwrap(),
            VertexSet::singleton(2)
        );
        assert_eq!(
            Graph::clique(3).unwrap().closed_neighborhood(0).unwrap(),
            VertexSet::from_slice(&[0, 1, 2])
        );

        assert!(Graph::clique(3).unwrap().is_dominated(0, 1).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert!(p3.is_dominated(0, 1).unwrap());
        assert!(!p3.is_dominated(1, 0).unwrap());
        assert!(!Graph::matching(2).unwrap().is_dominated(0, 2).unwrap());
    }

    #[test]
    fn deletions_commute_for_distinct_vertices() {
        let g = Graph::cycle(6).unwrap();
        for u in 0..6 {
            for v in 0..6 {
                if u == v {
                    continue;
                }
                let (g1, m1) = g.delete_vertex(u).unwrap();
                let (g12, _) = g1.delete_vertex(m1.map_vertex(v).unwrap()).unwrap();
                let (g2, m2) = g.delete_vertex(v).unwrap();
                let (g21, _) = g2.delete_vertex(m2.map_vertex(u).unwrap()).unwrap();
                assert_eq!(g12, g21);
            }
        }
    }

    #[test]
    fn spec_strings_and_json_round_trip() {
        let g = Graph::parse_spec("cliques:2,3,3").unwrap();
        assert_eq!(g.n(), 8);
        assert!(Graph::parse_spec("cycle:1").is_err());
        assert!(Graph::parse_spec("banana:3").is_err());
        assert!(Graph::parse_spec("cycle").is_err());

        let c7 = Graph::parse_spec("cycle:7").unwrap();
        let back = Graph::from_json(&c7.to_json()).unwrap();
        assert_eq!(c7, back);
    }
}
