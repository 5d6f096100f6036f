//! Exact extremal searches over a family's disjointness meta-graph: the
//! largest intersecting subfamily (a maximum independent set there) and the
//! largest total size of a cross-intersecting k-tuple, with witnesses and
//! full optimum enumeration.
//!
//! Member labels are canonicalized to "no family", "one family", or "every
//! family": a label of intermediate size forces the same constraints on
//! meta-neighbors as the full label while gaining less, so it is dominated.
//! The reduced engine additionally uses the fact that all singleton-labeled
//! members may share one family index, giving
//! `opt = m + max over meta-independent X of ((k-1)|X| - |N(X) \ X|)`.
//! The naive engine does not use that reduction and both must agree
//! everywhere, which the test suite checks.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::graph::VertexSet;
use serde_json::json;

// ---------------------------------------------------------------------------
// bitset over family member indices
// ---------------------------------------------------------------------------

/// Dense bitset indexed by family member position (desk scale, a few words).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MemberMask {
    len: usize,
    words: Vec<u64>,
}

impl MemberMask {
    pub fn new(len: usize) -> MemberMask {
        MemberMask {
            len,
            words: vec![0; len.div_ceil(64).max(1)],
        }
    }

    pub fn full(len: usize) -> MemberMask {
        let mut m = MemberMask::new(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of set bits at positions >= from.
    pub fn count_from(&self, from: usize) -> usize {
        if from >= self.len {
            return 0;
        }
        let w = from / 64;
        let off = from % 64;
        (self.words[w] >> off).count_ones() as usize
            + self.words[w + 1..]
                .iter()
                .map(|x| x.count_ones() as usize)
                .sum::<usize>()
    }

    pub fn union_with(&mut self, other: &MemberMask) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &MemberMask) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersect_with(&mut self, other: &MemberMask) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersects(&self, other: &MemberMask) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }
}

// ---------------------------------------------------------------------------
// disjointness meta-graph
// ---------------------------------------------------------------------------

/// Meta-graph on a family's members with an edge wherever two members are
/// disjoint. Intersecting subfamilies are exactly its independent sets.
#[derive(Clone, Debug)]
pub struct DisjointnessGraph {
    family: SetFamily,
    adj: Vec<MemberMask>,
}

impl DisjointnessGraph {
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn member_count(&self) -> usize {
        self.family.len()
    }

    pub fn adjacent(&self, i: usize) -> &MemberMask {
        &self.adj[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count()).sum::<usize>() / 2
    }
}

pub fn disjointness_graph(family: &SetFamily) -> DisjointnessGraph {
    let ms = family.members();
    let m = ms.len();
    let mut adj = vec![MemberMask::new(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if !ms[i].intersects(ms[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    DisjointnessGraph {
        family: family.clone(),
        adj,
    }
}

// ---------------------------------------------------------------------------
// labelings
// ---------------------------------------------------------------------------

/// Membership of one family member across the k families. `Family` carries a
/// 1-based index. Variant order is the canonical label order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    None,
    Family(usize),
    All,
}

impl Label {
    fn gain(self, k: usize) -> u64 {
        match self {
            Label::None => 0,
            Label::Family(_) => 1,
            Label::All => k as u64,
        }
    }
}

/// A full assignment of labels to the members of a family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Labeling {
    pub k: usize,
    pub labels: Vec<Label>,
}

impl Labeling {
    pub fn value(&self) -> u64 {
        self.labels.iter().map(|l| l.gain(self.k)).sum()
    }

    /// Check feasibility straight from the definition: across every disjoint
    /// member pair there must be no two distinct family indices.
    pub fn is_feasible(&self, family: &SetFamily) -> bool {
        let ms = family.members();
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                if ms[i].intersects(ms[j]) {
                    continue;
                }
                if !labels_compatible(self.labels[i], self.labels[j], self.k) {
                    return false;
                }
            }
        }
        true
    }

    /// Materialize the k families this labeling encodes. A member labeled
    /// `All` appears in every family.
    pub fn decode(&self, family: &SetFamily) -> Vec<SetFamily> {
        (1..=self.k)
            .map(|i| {
                let members: Vec<VertexSet> = family
                    .members()
                    .iter()
                    .zip(&self.labels)
                    .filter(|(_, l)| matches!(l, Label::All) || **l == Label::Family(i))
                    .map(|(&m, _)| m)
                    .collect();
                SetFamily::new(family.graph().clone(), family.r(), members)
                    .expect("decoded members come from the family")
            })
            .collect()
    }

    pub fn family_indices(&self, position: usize) -> Vec<usize> {
        match self.labels[position] {
            Label::None => vec![],
            Label::Family(i) => vec![i],
            Label::All => (1..=self.k).collect(),
        }
    }
}

/// May labels `a` and `b` sit on the two ends of a meta-edge?
fn labels_compatible(a: Label, b: Label, _k: usize) -> bool {
    match (a, b) {
        (Label::None, _) | (_, Label::None) => true,
        (Label::Family(x), Label::Family(y)) => x == y,
        // k >= 2: an All label always provides a conflicting index
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// engines
// ---------------------------------------------------------------------------

/// Which algorithm produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Label-by-label enumeration with symmetry pruning; m <= 15.
    Naive,
    /// Search over the all-label set X with the penalty formula.
    Reduced,
    /// Maximum-independent-set search on the meta-graph.
    MetaMis,
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Engine::Naive => write!(f, "naive"),
            Engine::Reduced => write!(f, "reduced"),
            Engine::MetaMis => write!(f, "meta-mis"),
        }
    }
}

/// Node budget for any single search call. Exceeding it is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 50_000_000,
        }
    }
}

struct NodeCounter {
    nodes: u64,
    limit: u64,
}

impl NodeCounter {
    fn new(budget: &Budget) -> NodeCounter {
        NodeCounter {
            nodes: 0,
            limit: budget.max_nodes,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded {
                nodes: self.nodes,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// An exact optimum with a deterministic witness.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub value: u64,
    pub witness: Labeling,
    pub engine: Engine,
    /// Nodes explored; reported for diagnostics only.
    pub nodes: u64,
    /// True for every completed search: budget overruns error out instead.
    pub optimal: bool,
}

impl SearchResult {
    /// Witness JSON: value, per-member family lists, engine, optimality.
    pub fn to_json(&self, family: &SetFamily) -> serde_json::Value {
        let labels: Vec<serde_json::Value> = family
            .members()
            .iter()
            .enumerate()
            .map(|(i, m)| {
                json!({
                    "member": m.to_one_based(),
                    "families": self.witness.family_indices(i),
                })
            })
            .collect();
        json!({
            "value": self.value,
            "labels": labels,
            "engine": self.engine.to_string(),
            "optimal": self.optimal,
        })
    }
}

/// All optimal labelings (up to `limit`), canonically ordered.
#[derive(Clone, Debug)]
pub struct Optima {
    pub value: u64,
    pub labelings: Vec<Labeling>,
    pub truncated: bool,
}

// ---------------------------------------------------------------------------
// reduced engine
// ---------------------------------------------------------------------------

struct ReducedSearch<'a> {
    meta: &'a DisjointnessGraph,
    k: usize,
    counter: NodeCounter,
}

impl ReducedSearch<'_> {
    /// Phase 1: best value of h(X) = (k-1)|X| - |N(X) \ X|.
    fn best_h(&mut self) -> Result<i64> {
        let m = self.meta.member_count();
        let mut best = 0i64; // X = empty
        self.counter.tick()?;
        let mut allowed = MemberMask::full(m);
        let mut penalty = MemberMask::new(m);
        self.descend(0, 0, &mut allowed, &mut penalty, 0, &mut best)?;
        Ok(best)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &mut self,
        from: usize,
        x_count: usize,
        allowed: &mut MemberMask,
        penalty: &mut MemberMask,
        pen_count: usize,
        best: &mut i64,
    ) -> Result<()> {
        let k1 = (self.k - 1) as i64;
        let h = k1 * x_count as i64 - pen_count as i64;
        for next in from..self.meta.member_count() {
            if !allowed.contains(next) {
                continue;
            }
            self.counter.tick()?;
            // taking `next`: penalties grow by its neighbors not yet penalized
            let mut new_pen = self.meta.adjacent(next).clone();
            new_pen.subtract(penalty);
            let grown = new_pen.count();
            let h_next = h + k1 - grown as i64;
            if h_next > *best {
                *best = h_next;
            }
            // descendants add at most (k-1) per remaining candidate
            let mut child_allowed = allowed.clone();
            child_allowed.subtract(self.meta.adjacent(next));
            child_allowed.remove(next);
            let rem = child_allowed.count_from(next + 1);
            if h_next + k1 * rem as i64 > *best {
                penalty.union_with(&new_pen);
                self.descend(
                    next + 1,
                    x_count + 1,
                    &mut child_allowed,
                    penalty,
                    pen_count + grown,
                    best,
                )?;
                penalty.subtract(&new_pen);
            }
        }
        Ok(())
    }

    /// Phase 2: visit candidate sets in lexicographic (pre-)order collecting
    /// those with h(X) = target; `sink` returns false to stop early.
    fn collect_optimal(
        &mut self,
        target: i64,
        sink: &mut impl FnMut(&MemberMask, &MemberMask) -> bool,
    ) -> Result<()> {
        let m = self.meta.member_count();
        self.counter.tick()?;
        let mut x = MemberMask::new(m);
        let mut allowed = MemberMask::full(m);
        let mut penalty = MemberMask::new(m);
        if target == 0 && !sink(&x, &penalty) {
            return Ok(());
        }
        self.collect_descend(target, 0, &mut x, &mut allowed, &mut penalty, sink)
            .map(|_| ())
    }

    fn collect_descend(
        &mut self,
        target: i64,
        from: usize,
        x: &mut MemberMask,
        allowed: &mut MemberMask,
        penalty: &mut MemberMask,
        sink: &mut impl FnMut(&MemberMask, &MemberMask) -> bool,
    ) -> Result<bool> {
        let k1 = (self.k - 1) as i64;
        let h = k1 * x.count() as i64 - penalty.count() as i64;
        for next in from..self.meta.member_count() {
            if !allowed.contains(next) {
                continue;
            }
            self.counter.tick()?;
            let mut new_pen = self.meta.adjacent(next).clone();
            new_pen.subtract(penalty);
            let h_next = h + k1 - new_pen.count() as i64;
            let mut child_allowed = allowed.clone();
            child_allowed.subtract(self.meta.adjacent(next));
            child_allowed.remove(next);
            let rem = child_allowed.count_from(next + 1);
            // descendants (including this X itself) can still reach target?
            if h_next + k1 * rem as i64 >= target {
                x.insert(next);
                penalty.union_with(&new_pen);
                if h_next == target && !sink(x, penalty) {
                    return Ok(false);
                }
                let keep_going =
                    self.collect_descend(target, next + 1, x, &mut child_allowed, penalty, sink)?;
                penalty.subtract(&new_pen);
                x.remove(next);
                if !keep_going {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Meta-connected components of the subgraph induced on `within`.
fn components_within(meta: &DisjointnessGraph, within: &MemberMask) -> Vec<MemberMask> {
    let mut seen = MemberMask::new(within.len());
    let mut out = Vec::new();
    for v in within.iter_ones() {
        if seen.contains(v) {
            continue;
        }
        let mut comp = MemberMask::new(within.len());
        comp.insert(v);
        loop {
            let mut grown = comp.clone();
            for u in comp.iter_ones() {
                let mut nb = meta.adjacent(u).clone();
                nb.intersect_with(within);
                grown.union_with(&nb);
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        seen.union_with(&comp);
        out.push(comp);
    }
    out
}

fn labeling_from_mask(
    m: usize,
    k: usize,
    x: &MemberMask,
    penalty: &MemberMask,
    free_index: usize,
) -> Labeling {
    let labels = (0..m)
        .map(|i| {
            if x.contains(i) {
                Label::All
            } else if penalty.contains(i) {
                Label::None
            } else {
                Label::Family(free_index)
            }
        })
        .collect();
    Labeling { k, labels }
}

fn reduced_max_cross_sum(
    family: &SetFamily,
    k: usize,
    budget: &Budget,
) -> Result<SearchResult> {
    let meta = disjointness_graph(family);
    let m = meta.member_count();
    let mut search = ReducedSearch {
        meta: &meta,
        k,
        counter: NodeCounter::new(budget),
    };
    let best_h = search.best_h()?;
    // lexicographically least optimal X gives the deterministic witness
    let mut found: Option<(MemberMask, MemberMask)> = None;
    search.collect_optimal(best_h, &mut |x, pen| {
        found = Some((x.clone(), pen.clone()));
        false
    })?;
    let (x, penalty) = found.expect("an optimal X always exists");
    let witness = labeling_from_mask(m, k, &x, &penalty, 1);
    let value = (m as i64 + best_h) as u64;
    debug_assert_eq!(witness.value(), value);
    Ok(SearchResult {
        value,
        witness,
        engine: Engine::Reduced,
        nodes: search.counter.nodes,
        optimal: true,
    })
}

fn reduced_enumerate_optima(
    family: &SetFamily,
    k: usize,
    limit: usize,
    budget: &Budget,
) -> Result<Optima> {
    let meta = disjointness_graph(family);
    let m = meta.member_count();
    let mut search = ReducedSearch {
        meta: &meta,
        k,
        counter: NodeCounter::new(budget),
    };
    let best_h = search.best_h()?;
    let value = (m as i64 + best_h) as u64;
    let mut labelings: Vec<Labeling> = Vec::new();
    let mut truncated = false;
    search.collect_optimal(best_h, &mut |x, penalty| {
        // free members all take a single family label, constant on each
        // meta-component of the free set
        let mut free = MemberMask::full(m);
        free.subtract(x);
        free.subtract(penalty);
        let comps = components_within(&meta, &free);
        let mut assignment = vec![1usize; comps.len()];
        loop {
            let labels = (0..m)
                .map(|i| {
                    if x.contains(i) {
                        Label::All
                    } else if penalty.contains(i) {
                        Label::None
                    } else {
                        let c = comps.iter().position(|c| c.contains(i)).expect("free");
                        Label::Family(assignment[c])
                    }
                })
                .collect();
            labelings.push(Labeling { k, labels });
            if labelings.len() > limit {
                truncated = true;
                return false;
            }
            // odometer over assignments
            let mut pos = comps.len();
            loop {
                if pos == 0 {
                    return true;
                }
                pos -= 1;
                if assignment[pos] < k {
                    assignment[pos] += 1;
                    break;
                }
                assignment[pos] = 1;
            }
        }
    })?;
    labelings.sort_unstable();
    labelings.truncate(limit);
    Ok(Optima {
        value,
        labelings,
        truncated,
    })
}

// ---------------------------------------------------------------------------
// naive engine
// ---------------------------------------------------------------------------

const NAIVE_MAX_MEMBERS: usize = 15;

struct NaiveSearch<'a> {
    members: &'a [VertexSet],
    k: usize,
    counter: NodeCounter,
}

impl NaiveSearch<'_> {
    fn compatible_with_prefix(&self, labels: &[Label], next: Label) -> bool {
        let idx = labels.len();
        let mine = self.members[idx];
        labels.iter().enumerate().all(|(j, &lj)| {
            mine.intersects(self.members[j]) || labels_compatible(lj, next, self.k)
        })
    }

    /// Exhaustive labeling search. With `symmetry_prune` singleton indices
    /// are introduced in increasing order (value search); without it every
    /// index choice is explored (optimum enumeration).
    fn run(
        &mut self,
        labels: &mut Vec<Label>,
        used: usize,
        best: &mut i64,
        value: u64,
        symmetry_prune: bool,
        mut collect: Option<(&mut Vec<Labeling>, i64, &mut bool, usize)>,
    ) -> Result<()> {
        self.counter.tick()?;
        let m = self.members.len();
        let idx = labels.len();
        if idx == m {
            let v = value as i64;
            if let Some((out, target, truncated, limit)) = collect.as_mut() {
                if v == *target {
                    out.push(Labeling {
                        k: self.k,
                        labels: labels.clone(),
                    });
                    if out.len() > *limit {
                        **truncated = true;
                    }
                }
            } else if v > *best {
                *best = v;
            }
            return Ok(());
        }
        // bound: every remaining member can contribute at most k
        let optimistic = value as i64 + (self.k as i64) * (m - idx) as i64;
        match &collect {
            Some((_, target, ..)) => {
                if optimistic < *target {
                    return Ok(());
                }
            }
            None => {
                if optimistic <= *best {
                    return Ok(());
                }
            }
        }
        let max_index = if symmetry_prune {
            (used + 1).min(self.k)
        } else {
            self.k
        };
        let mut options = Vec::with_capacity(max_index + 2);
        options.push(Label::None);
        for i in 1..=max_index {
            options.push(Label::Family(i));
        }
        options.push(Label::All);
        for next in options {
            if let Some((out, _, truncated, limit)) = collect.as_ref() {
                if out.len() > *limit {
                    debug_assert!(**truncated);
                    return Ok(());
                }
            }
            if !self.compatible_with_prefix(labels, next) {
                continue;
            }
            let introduces = matches!(next, Label::Family(i) if i == used + 1);
            labels.push(next);
            self.run(
                labels,
                used + usize::from(introduces),
                best,
                value + next.gain(self.k),
                symmetry_prune,
                collect
                    .as_mut()
                    .map(|(out, target, truncated, limit)| (&mut **out, *target, &mut **truncated, *limit)),
            )?;
            labels.pop();
        }
        Ok(())
    }
}

fn naive_max_cross_sum(family: &SetFamily, k: usize, budget: &Budget) -> Result<SearchResult> {
    let m = family.len();
    if m > NAIVE_MAX_MEMBERS {
        return Err(Error::NaiveTooLarge(m));
    }
    let mut search = NaiveSearch {
        members: family.members(),
        k,
        counter: NodeCounter::new(budget),
    };
    let mut best = -1i64;
    let mut labels = Vec::with_capacity(m);
    search.run(&mut labels, 0, &mut best, 0, true, None)?;
    let value = best.max(0) as u64;
    // dedicated second pass for the witness keeps the value pass simple
    let mut out = Vec::new();
    let mut truncated = false;
    let mut labels = Vec::with_capacity(m);
    let mut unused = i64::MIN;
    search.run(
        &mut labels,
        0,
        &mut unused,
        0,
        true,
        Some((&mut out, value as i64, &mut truncated, 0)),
    )?;
    let witness = out.into_iter().next().expect("optimum is attained");
    Ok(SearchResult {
        value,
        witness,
        engine: Engine::Naive,
        nodes: search.counter.nodes,
        optimal: true,
    })
}

fn naive_enumerate_optima(
    family: &SetFamily,
    k: usize,
    limit: usize,
    budget: &Budget,
) -> Result<Optima> {
    let m = family.len();
    if m > NAIVE_MAX_MEMBERS {
        return Err(Error::NaiveTooLarge(m));
    }
    let value = naive_max_cross_sum(family, k, budget)?.value;
    let mut search = NaiveSearch {
        members: family.members(),
        k,
        counter: NodeCounter::new(budget),
    };
    let mut out = Vec::new();
    let mut truncated = false;
    let mut labels = Vec::with_capacity(m);
    let mut unused = i64::MIN;
    search.run(
        &mut labels,
        0,
        &mut unused,
        0,
        false,
        Some((&mut out, value as i64, &mut truncated, limit)),
    )?;
    // generated in canonical (lexicographic label) order already
    out.truncate(limit);
    Ok(Optima {
        value,
        labelings: out,
        truncated,
    })
}

// ---------------------------------------------------------------------------
// public cross-sum API
// ---------------------------------------------------------------------------

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParams("cross-sum search needs k >= 2".into()));
    }
    Ok(())
}

/// Exact maximum of the total size of k cross-intersecting subfamilies.
pub fn max_cross_sum(
    family: &SetFamily,
    k: usize,
    engine: Engine,
    budget: &Budget,
) -> Result<SearchResult> {
    check_k(k)?;
    match engine {
        Engine::Naive => naive_max_cross_sum(family, k, budget),
        Engine::Reduced => reduced_max_cross_sum(family, k, budget),
        Engine::MetaMis => Err(Error::InvalidParams(
            "meta-mis engine only serves max_intersecting".into(),
        )),
    }
}

/// All optimal labelings, canonically ordered, at most `limit` of them.
pub fn enumerate_optima(
    family: &SetFamily,
    k: usize,
    limit: usize,
    engine: Engine,
    budget: &Budget,
) -> Result<Optima> {
    check_k(k)?;
    if limit == 0 {
        return Err(Error::InvalidParams("optimum enumeration needs limit >= 1".into()));
    }
    match engine {
        Engine::Naive => naive_enumerate_optima(family, k, limit, budget),
        Engine::Reduced => reduced_enumerate_optima(family, k, limit, budget),
        Engine::MetaMis => Err(Error::InvalidParams(
            "meta-mis engine only serves max_intersecting".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// maximum intersecting subfamily (meta-graph MIS)
// ---------------------------------------------------------------------------

struct MisSearch<'a> {
    meta: &'a DisjointnessGraph,
    counter: NodeCounter,
    /// Below this size the plain exhaustive bound |candidates| is used.
    use_clique_cover: bool,
}

impl MisSearch<'_> {
    fn candidate_bound(&self, allowed: &MemberMask, from: usize) -> usize {
        let rem = allowed.count_from(from);
        if !self.use_clique_cover || rem <= 4 {
            return rem;
        }
        // greedy clique cover of the candidates: the number of cliques needed
        // bounds any independent set among them
        let mut cliques: Vec<MemberMask> = Vec::new();
        for v in allowed.iter_ones().filter(|&v| v >= from) {
            match cliques.iter_mut().find(|common| common.contains(v)) {
                Some(common) => common.intersect_with(self.meta.adjacent(v)),
                None => {
                    let mut common = self.meta.adjacent(v).clone();
                    common.intersect_with(allowed);
                    cliques.push(common);
                }
            }
        }
        cliques.len()
    }

    fn best_size(
        &mut self,
        from: usize,
        size: usize,
        allowed: &mut MemberMask,
        best: &mut usize,
    ) -> Result<()> {
        for next in from..self.meta.member_count() {
            if !allowed.contains(next) {
                continue;
            }
            self.counter.tick()?;
            let took = size + 1;
            if took > *best {
                *best = took;
            }
            let mut child = allowed.clone();
            child.subtract(self.meta.adjacent(next));
            child.remove(next);
            if took + self.candidate_bound(&child, next + 1) > *best {
                self.best_size(next + 1, took, &mut child, best)?;
            }
        }
        Ok(())
    }

    /// Pre-order collection of every independent set of exactly `target`
    /// members; `sink` returns false to stop.
    fn collect(
        &mut self,
        target: usize,
        from: usize,
        x: &mut MemberMask,
        allowed: &mut MemberMask,
        sink: &mut impl FnMut(&MemberMask) -> bool,
    ) -> Result<bool> {
        if x.count() == target {
            return Ok(sink(x));
        }
        for next in from..self.meta.member_count() {
            if !allowed.contains(next) {
                continue;
            }
            self.counter.tick()?;
            let mut child = allowed.clone();
            child.subtract(self.meta.adjacent(next));
            child.remove(next);
            if x.count() + 1 + self.candidate_bound(&child, next + 1) >= target {
                x.insert(next);
                let keep = self.collect(target, next + 1, x, &mut child, sink)?;
                x.remove(next);
                if !keep {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Exact largest intersecting subfamily, as a maximum independent set of the
/// disjointness meta-graph. Exhaustive scan up to 20 members, branch and
/// bound with a greedy clique-cover bound beyond.
pub fn max_intersecting(family: &SetFamily, budget: &Budget) -> Result<SearchResult> {
    let meta = disjointness_graph(family);
    let m = meta.member_count();
    let mut search = MisSearch {
        meta: &meta,
        counter: NodeCounter::new(budget),
        use_clique_cover: m > 20,
    };
    let mut best = 0usize;
    let mut allowed = MemberMask::full(m);
    search.counter.tick()?;
    search.best_size(0, 0, &mut allowed, &mut best)?;
    // lexicographically least maximum, by pre-order first hit
    let mut witness_mask = MemberMask::new(m);
    if best > 0 {
        let mut x = MemberMask::new(m);
        let mut allowed = MemberMask::full(m);
        search.collect(best, 0, &mut x, &mut allowed, &mut |found| {
            witness_mask = found.clone();
            false
        })?;
    }
    let labels = (0..m)
        .map(|i| {
            if witness_mask.contains(i) {
                Label::Family(1)
            } else {
                Label::None
            }
        })
        .collect();
    Ok(SearchResult {
        value: best as u64,
        witness: Labeling { k: 1, labels },
        engine: Engine::MetaMis,
        nodes: search.counter.nodes,
        optimal: true,
    })
}

/// Every maximum intersecting subfamily (as member-index lists), up to
/// `limit`; used for equality-structure checks.
pub fn enumerate_max_intersecting(
    family: &SetFamily,
    limit: usize,
    budget: &Budget,
) -> Result<(u64, Vec<Vec<usize>>, bool)> {
    if limit == 0 {
        return Err(Error::InvalidParams("enumeration needs limit >= 1".into()));
    }
    let meta = disjointness_graph(family);
    let m = meta.member_count();
    let mut search = MisSearch {
        meta: &meta,
        counter: NodeCounter::new(budget),
        use_clique_cover: m > 20,
    };
    let mut best = 0usize;
    let mut allowed = MemberMask::full(m);
    search.counter.tick()?;
    search.best_size(0, 0, &mut allowed, &mut best)?;
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut truncated = false;
    let mut x = MemberMask::new(m);
    let mut allowed = MemberMask::full(m);
    search.collect(best, 0, &mut x, &mut allowed, &mut |found| {
        out.push(found.to_indices());
        if out.len() > limit {
            truncated = true;
            false
        } else {
            true
        }
    })?;
    out.truncate(limit);
    Ok((best as u64, out, truncated))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{enumerate_independent, is_cross_intersecting, star};
    use crate::graph::Graph;

    fn all2 (g: &Graph) -> SetFamily {
        enumerate_independent(g, 2)
    }

    #[test]
    fn meta_graph_shapes() {
        let singles = enumerate_independent(&Graph::empty(3).unwrap(), 1);
        let meta = disjointness_graph(&singles);
        assert_eq!(meta.edge_count(), 3); // complete on 3 members

        let c5 = all2(&Graph::cycle(5).unwrap());
        let meta = disjointness_graph(&c5);
        assert_eq!(meta.member_count(), 5);
        assert_eq!(meta.edge_count(), 5);
        assert!((0..5).all(|i| meta.adjacent(i).count() == 2)); // meta 5-cycle

        let st = star(&Graph::empty(4).unwrap(), 2, 0).unwrap();
        assert_eq!(disjointness_graph(&st).edge_count(), 0);
    }

    /// The canonical label domain loses nothing: across a meta-edge, every
    /// feasible pair of arbitrary membership sets is dominated by a feasible
    /// canonical pair (collapse any label of size >= 2 to the full label).
    /// Checked by enumerating all 2^k x 2^k subset pairs for k <= 4.
    #[test]
    fn canonical_label_domain_is_lossless_per_edge() {
        fn feasible(s: u32, t: u32) -> bool {
            // no i in s, j in t with i != j
            s == 0 || t == 0 || (s == t && s.count_ones() == 1)
        }
        for k in 2..=4u32 {
            let full = (1u32 << k) - 1;
            for s in 0..=full {
                for t in 0..=full {
                    if !feasible(s, t) {
                        continue;
                    }
                    let canon = |x: u32| if x.count_ones() >= 2 { full } else { x };
                    let (cs, ct) = (canon(s), canon(t));
                    assert!(feasible(cs, ct), "canonicalization stays feasible");
                    assert!(
                        cs.count_ones() + ct.count_ones() >= s.count_ones() + t.count_ones(),
                        "canonicalization never loses value"
                    );
                }
            }
        }
    }

    #[test]
    fn max_intersecting_examples() {
        let budget = Budget::default();
        let r = max_intersecting(&all2(&Graph::empty(4).unwrap()), &budget).unwrap();
        assert_eq!(r.value, 3);
        let r = max_intersecting(&all2(&Graph::matching(3).unwrap()), &budget).unwrap();
        assert_eq!(r.value, 4);
        let r = max_intersecting(&all2(&Graph::cycle(5).unwrap()), &budget).unwrap();
        assert_eq!(r.value, 2);
        // witness decodes to an intersecting family of the right size
        let fam = all2(&Graph::matching(3).unwrap());
        let r = max_intersecting(&fam, &budget).unwrap();
        let decoded = &r.witness.decode(&fam)[0];
        assert_eq!(decoded.len() as u64, r.value);
        assert!(crate::family::is_intersecting(decoded));
    }

    #[test]
    fn max_cross_sum_examples() {
        let budget = Budget::default();
        let e4 = all2(&Graph::empty(4).unwrap());
        for engine in [Engine::Naive, Engine::Reduced] {
            assert_eq!(max_cross_sum(&e4, 2, engine, &budget).unwrap().value, 6);
            assert_eq!(max_cross_sum(&e4, 3, engine, &budget).unwrap().value, 9);
        }
        let m3 = all2(&Graph::matching(3).unwrap());
        assert_eq!(
            max_cross_sum(&m3, 2, Engine::Reduced, &budget).unwrap().value,
            12
        );
        let c5 = all2(&Graph::cycle(5).unwrap());
        for engine in [Engine::Naive, Engine::Reduced] {
            assert_eq!(max_cross_sum(&c5, 2, engine, &budget).unwrap().value, 5);
        }
    }

    #[test]
    fn witnesses_revalidate() {
        let budget = Budget::default();
        for (g, k) in [
            (Graph::empty(4).unwrap(), 3),
            (Graph::cycle(5).unwrap(), 2),
            (Graph::matching(3).unwrap(), 2),
            (Graph::clique_union(&[2, 3]).unwrap(), 2),
        ] {
            let fam = all2(&g);
            let res = max_cross_sum(&fam, k, Engine::Reduced, &budget).unwrap();
            assert!(res.witness.is_feasible(&fam));
            let decoded = res.witness.decode(&fam);
            let refs: Vec<&SetFamily> = decoded.iter().collect();
            assert!(is_cross_intersecting(&refs).unwrap());
            let total: usize = decoded.iter().map(|f| f.len()).sum();
            assert_eq!(total as u64, res.value);
        }
    }

    #[test]
    fn optima_examples() {
        let budget = Budget::default();
        // single nonempty 1-set: the lone member carries every family
        let one = enumerate_independent(&Graph::empty(1).unwrap(), 1);
        let opt = enumerate_optima(&one, 2, 10, Engine::Reduced, &budget).unwrap();
        assert_eq!(opt.value, 2);
        assert_eq!(opt.labelings.len(), 1);
        assert_eq!(opt.labelings[0].labels, vec![Label::All]);

        // matching(3), k = 2: exactly "everything in family 1" and
        // "everything in family 2"
        let m3 = all2(&Graph::matching(3).unwrap());
        let opt = enumerate_optima(&m3, 2, 100, Engine::Reduced, &budget).unwrap();
        assert_eq!(opt.value, 12);
        assert!(!opt.truncated);
        assert_eq!(opt.labelings.len(), 2);
        for (lab, idx) in opt.labelings.iter().zip([1usize, 2]) {
            assert!(lab.labels.iter().all(|&l| l == Label::Family(idx)));
        }

        // empty(4) r=2 k=3: the eight maximum independent transversals of
        // the meta perfect matching, each fully shared
        let e4 = all2(&Graph::empty(4).unwrap());
        let opt = enumerate_optima(&e4, 3, 100, Engine::Reduced, &budget).unwrap();
        assert_eq!(opt.value, 9);
        assert_eq!(opt.labelings.len(), 8);
        for lab in &opt.labelings {
            assert_eq!(lab.labels.iter().filter(|&&l| l == Label::All).count(), 3);
        }
        // naive engine agrees exactly (golden count recorded above)
        let naive = enumerate_optima(&e4, 3, 100, Engine::Naive, &budget).unwrap();
        assert_eq!(naive.value, 9);
        assert_eq!(naive.labelings, opt.labelings);
    }

    #[test]
    fn engines_agree_on_fixtures() {
        let budget = Budget::default();
        let fixtures: Vec<(SetFamily, usize)> = vec![
            (all2(&Graph::empty(4).unwrap()), 2),
            (all2(&Graph::empty(4).unwrap()), 3),
            (all2(&Graph::empty(5).unwrap()), 4),
            (all2(&Graph::cycle(5).unwrap()), 2),
            (all2(&Graph::cycle(6).unwrap()), 3),
            (all2(&Graph::matching(3).unwrap()), 2),
            (enumerate_independent(&Graph::matching(2).unwrap(), 2), 3),
            (enumerate_independent(&Graph::clique_union(&[2, 3]).unwrap(), 2), 2),
            (enumerate_independent(&Graph::path(7).unwrap(), 3), 3),
        ];
        for (fam, k) in fixtures {
            if fam.len() > NAIVE_MAX_MEMBERS {
                continue;
            }
            let naive = max_cross_sum(&fam, k, Engine::Naive, &budget).unwrap();
            let reduced = max_cross_sum(&fam, k, Engine::Reduced, &budget).unwrap();
            assert_eq!(naive.value, reduced.value, "m={} k={k}", fam.len());
        }
    }

    #[test]
    fn monotonicity_and_floors() {
        let budget = Budget::default();
        for g in [
            Graph::cycle(7).unwrap(),
            Graph::matching(3).unwrap(),
            Graph::clique_union(&[3, 3]).unwrap(),
        ] {
            let fam = all2(&g);
            let m = fam.len() as u64;
            let mut prev = 0;
            for k in 2..=5 {
                let v = max_cross_sum(&fam, k, Engine::Reduced, &budget).unwrap().value;
                assert!(v >= m, "never below the one-full-family value");
                assert!(v >= prev, "nondecreasing in k");
                let best_star: u64 = g
                    .vertices()
                    .map(|x| star(&g, 2, x).unwrap().len() as u64)
                    .max()
                    .unwrap();
                assert!(v >= k as u64 * best_star, "k copies of the best star");
                prev = v;
            }
        }
    }

    #[test]
    fn errors_and_budget() {
        let budget = Budget::default();
        let fam = all2(&Graph::empty(7).unwrap());
        assert!(matches!(
            max_cross_sum(&fam, 1, Engine::Reduced, &budget),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            max_cross_sum(&fam, 2, Engine::Naive, &budget),
            Err(Error::NaiveTooLarge(21))
        ));
        assert!(matches!(
            enumerate_optima(&fam, 2, 0, Engine::Reduced, &budget),
            Err(Error::InvalidParams(_))
        ));
        let tiny = Budget { max_nodes: 3 };
        assert!(matches!(
            max_cross_sum(&fam, 2, Engine::Reduced, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn empty_family_searches() {
        let budget = Budget::default();
        let fam = SetFamily::empty(Graph::cycle(4).unwrap(), 3);
        let r = max_cross_sum(&fam, 2, Engine::Reduced, &budget).unwrap();
        assert_eq!(r.value, 0);
        let r = max_intersecting(&fam, &budget).unwrap();
        assert_eq!(r.value, 0);
    }
}
