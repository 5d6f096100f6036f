//! Uniform families of independent vertex sets: enumeration of the full
//! family J^r(G) and its stars, the graph parameter mu (smallest maximal
//! independent set), and the intersection predicates everything else is
//! phrased in.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A deduplicated, canonically ordered list of independent `r`-subsets of a
/// fixed host graph. Canonical order is ascending bitmask value; every
/// downstream search and report relies on it for determinism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    graph: Graph,
    r: usize,
    members: Vec<VertexSet>,
}

impl SetFamily {
    /// Validating constructor: members must be independent `r`-sets within
    /// range. Input order is irrelevant; duplicates collapse.
    pub fn new(graph: Graph, r: usize, mut members: Vec<VertexSet>) -> Result<SetFamily> {
        let range = graph.vertex_mask();
        for &m in &members {
            if !m.is_subset_of(range) {
                return Err(Error::InvalidFamily(format!(
                    "set {m:?} has vertices outside the host graph"
                )));
            }
            if m.len() != r {
                return Err(Error::InvalidFamily(format!(
                    "set {m:?} has size {}, family is {r}-uniform",
                    m.len()
                )));
            }
            if !graph.is_independent(m) {
                return Err(Error::InvalidFamily(format!("set {m:?} is not independent")));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { graph, r, members })
    }

    pub fn empty(graph: Graph, r: usize) -> SetFamily {
        SetFamily {
            graph,
            r,
            members: Vec::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    /// Subfamily keeping the members that satisfy `keep`; host and order are
    /// preserved.
    pub fn filter(&self, keep: impl Fn(VertexSet) -> bool) -> SetFamily {
        SetFamily {
            graph: self.graph.clone(),
            r: self.r,
            members: self.members.iter().copied().filter(|&m| keep(m)).collect(),
        }
    }

    /// External representation: JSON list of sorted 1-based vertex lists.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.members
                .iter()
                .map(|m| {
                    serde_json::Value::Array(
                        m.to_one_based()
                            .into_iter()
                            .map(|v| serde_json::Value::from(v))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(graph: Graph, r: usize, value: &serde_json::Value) -> Result<SetFamily> {
        let lists: Vec<Vec<usize>> = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidFamily(format!("bad family json: {e}")))?;
        let n = graph.n();
        let members = lists
            .iter()
            .map(|l| VertexSet::from_one_based(l, n))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(graph, r, members)
    }
}

/// All independent `r`-subsets of `g` in canonical order. `r = 0` yields the
/// single empty set; `r > n` yields the empty family.
pub fn enumerate_independent(g: &Graph, r: usize) -> SetFamily {
    let mut members = Vec::new();
    if r == 0 {
        members.push(VertexSet::EMPTY);
    } else if r <= g.n() {
        let mut chosen = VertexSet::EMPTY;
        collect_independent(g, 0, r, &mut chosen, &mut members);
        members.sort_unstable();
    }
    SetFamily {
        graph: g.clone(),
        r,
        members,
    }
}

fn collect_independent(
    g: &Graph,
    from: usize,
    left: usize,
    chosen: &mut VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if left == 0 {
        out.push(*chosen);
        return;
    }
    // not enough vertices remain
    if g.n() - from < left {
        return;
    }
    for v in from..g.n() {
        if g.n() - v < left {
            break;
        }
        if g.neighbors(v).intersects(*chosen) {
            continue;
        }
        *chosen = chosen.with(v);
        collect_independent(g, v + 1, left - 1, chosen, out);
        *chosen = chosen.without(v);
    }
}

/// The star at `x`: members of J^r(G) containing the vertex `x`.
pub fn star(g: &Graph, r: usize, x: usize) -> Result<SetFamily> {
    g.check_vertex(x)?;
    Ok(enumerate_independent(g, r).filter(|m| m.contains(x)))
}

/// The value and a witness for mu(G), the minimum size of a maximal
/// independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuResult {
    pub mu: usize,
    /// Smallest witness, ties broken by least bitmask value.
    pub witness: VertexSet,
}

/// Exact mu(G) by branch and bound: the first vertex not yet dominated must
/// gain a member of its closed neighborhood. The vertexless graph has
/// mu = 0 (the empty set is vacuously maximal), which the lemma harnesses
/// rely on.
pub fn mu(g: &Graph) -> MuResult {
    let mut best: Option<VertexSet> = None;
    let mut current = VertexSet::EMPTY;
    mu_search(g, VertexSet::EMPTY, &mut current, &mut best);
    let witness = best.expect("search always yields a maximal set");
    MuResult {
        mu: witness.len(),
        witness,
    }
}

fn mu_search(g: &Graph, dominated: VertexSet, current: &mut VertexSet, best: &mut Option<VertexSet>) {
    let undominated = g.vertex_mask().difference(dominated);
    match undominated.iter().next() {
        None => {
            // maximal: every vertex is in the set or sees it
            let better = match best {
                None => true,
                Some(b) => {
                    current.len() < b.len() || (current.len() == b.len() && *current < *b)
                }
            };
            if better {
                *best = Some(*current);
            }
        }
        Some(u) => {
            if let Some(b) = best {
                if current.len() + 1 > b.len() {
                    return;
                }
            }
            let candidates = g.closed_neighborhood(u).expect("in range");
            for c in candidates.iter() {
                if g.neighbors(c).intersects(*current) {
                    continue;
                }
                *current = current.with(c);
                let newly = g.closed_neighborhood(c).expect("in range");
                mu_search(g, dominated.union(newly), current, best);
                *current = current.without(c);
            }
        }
    }
}

/// True iff every two members share a vertex. Empty and singleton families
/// are intersecting.
pub fn is_intersecting(family: &SetFamily) -> bool {
    let ms = family.members();
    for (i, &a) in ms.iter().enumerate() {
        for &b in &ms[i + 1..] {
            if !a.intersects(b) {
                return false;
            }
        }
    }
    true
}

/// True iff members of distinct families always intersect. The individual
/// families need not be intersecting or nonempty. All families must share
/// the host graph and uniformity.
pub fn is_cross_intersecting(families: &[&SetFamily]) -> Result<bool> {
    for w in families.windows(2) {
        if w[0].graph() != w[1].graph() {
            return Err(Error::MismatchedHosts);
        }
        if w[0].r() != w[1].r() {
            return Err(Error::MismatchedUniformity {
                left: w[0].r(),
                right: w[1].r(),
            });
        }
    }
    Ok(cross_violation(families).is_none())
}

/// First violating pair `(i, a, j, b)` with `a` in family i disjoint from
/// `b` in family j, if any. Hosts are assumed consistent.
pub fn cross_violation(families: &[&SetFamily]) -> Option<(usize, VertexSet, usize, VertexSet)> {
    for (i, fa) in families.iter().enumerate() {
        for (j, fb) in families.iter().enumerate().skip(i + 1) {
            for &a in fa.members() {
                for &b in fb.members() {
                    if !a.intersects(b) {
                        return Some((i, a, j, b));
                    }
                }
            }
        }
    }
    None
}
