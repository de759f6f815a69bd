//! r-uniform hypergraphs on labeled vertices `0..n`, with fixed-width bitset
//! edge rows and the structural operations used throughout the crate
//! (link, trace, induced shrinking, connectivity).

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[cfg(feature = "wide-vertices")]
type Word = u128;
#[cfg(not(feature = "wide-vertices"))]
type Word = u64;

/// Hard cap on the vertex count, fixed by the bit-row width.
pub const MAX_VERTICES: usize = Word::BITS as usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("duplicate edge {edge} (edges must be distinct)")]
    DuplicateEdge { edge: VertexSet },
    #[error("edge {edge} has {got} vertices, expected uniformity {expected}")]
    WrongEdgeSize {
        edge: VertexSet,
        got: usize,
        expected: usize,
    },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex count {n} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("uniformity {r} invalid (must be 1..={MAX_VERTICES})")]
    BadUniformity { r: usize },
    #[error("intersection size {j} invalid (must satisfy 1 <= j <= min(r-1, |A|) = {max})")]
    BadIntersectionSize { j: usize, max: usize },
    #[error("shrink target {target} invalid (must be >= 1)")]
    BadShrinkTarget { target: usize },
    #[error("edge {edge} has only {available} vertices outside the forbidden set, below target {target}")]
    TargetTooLarge {
        edge: VertexSet,
        available: usize,
        target: usize,
    },
}

/// A set of vertices below [`MAX_VERTICES`], stored as one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(Word);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, ..., k-1}`.
    pub fn first(k: usize) -> VertexSet {
        debug_assert!(k <= MAX_VERTICES);
        if k == 0 {
            VertexSet(0)
        } else {
            VertexSet(Word::MAX >> (MAX_VERTICES - k))
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn min_vertex(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending vertex indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
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

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Lexicographic order on the ascending vertex sequence, so `{0,3} < {1,2}`
/// and a proper prefix sorts first. This is the canonical edge order.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (mut x, mut y) = (self.0, other.0);
        loop {
            match (x == 0, y == 0) {
                (true, true) => return std::cmp::Ordering::Equal,
                (true, false) => return std::cmp::Ordering::Less,
                (false, true) => return std::cmp::Ordering::Greater,
                (false, false) => {}
            }
            let (a, b) = (x.trailing_zeros(), y.trailing_zeros());
            if a != b {
                return a.cmp(&b);
            }
            x &= x - 1;
            y &= y - 1;
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().map(|v| v.to_string()).join(","))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An r-uniform hypergraph on vertices `0..n`. Edges are kept strictly
/// sorted in the canonical lexicographic order; values are immutable after
/// construction and cheap to clone at desk scale.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<VertexSet>,
}

/// The trace multiset of edge remainders over a fixed anchor set,
/// deduplicated into an (r-j)-uniform hypergraph plus per-edge counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceResult {
    pub deduplicated: Hypergraph,
    pub multiplicities: Vec<usize>,
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, mut edges: Vec<VertexSet>) -> Result<Self, HypergraphError> {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n });
        }
        if r == 0 || r > MAX_VERTICES {
            return Err(HypergraphError::BadUniformity { r });
        }
        let allowed = VertexSet::first(n);
        for e in &edges {
            if !e.is_subset_of(&allowed) {
                let vertex = e.difference(&allowed).min_vertex().unwrap();
                return Err(HypergraphError::VertexOutOfRange { vertex, n });
            }
            if e.len() != r {
                return Err(HypergraphError::WrongEdgeSize {
                    edge: *e,
                    got: e.len(),
                    expected: r,
                });
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(HypergraphError::DuplicateEdge { edge: w[0] });
            }
        }
        Ok(Hypergraph { n, r, edges })
    }

    pub fn from_vertex_lists(
        n: usize,
        r: usize,
        lists: &[Vec<usize>],
    ) -> Result<Self, HypergraphError> {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n });
        }
        let mut edges = Vec::with_capacity(lists.len());
        for list in lists {
            let mut e = VertexSet::EMPTY;
            for &v in list {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
                e.insert(v);
            }
            // Repeated vertices inside a list collapse and surface as a size error.
            if e.len() != list.len() {
                return Err(HypergraphError::WrongEdgeSize {
                    edge: e,
                    got: e.len(),
                    expected: r,
                });
            }
            edges.push(e);
        }
        Hypergraph::new(n, r, edges)
    }

    pub fn empty(n: usize, r: usize) -> Result<Self, HypergraphError> {
        Hypergraph::new(n, r, Vec::new())
    }

    /// Construction bypass for callers that guarantee sorted, validated edges.
    pub(crate) fn from_sorted_unchecked(n: usize, r: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Hypergraph { n, r, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> VertexSet {
        self.edges[i]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            for v in e.iter() {
                d[v] += 1;
            }
        }
        d
    }

    /// Returns the hypergraph with `e` inserted at its sorted position,
    /// together with that position. `None` if `e` is already present.
    pub(crate) fn inserting(&self, e: VertexSet) -> Option<(Hypergraph, usize)> {
        debug_assert_eq!(e.len(), self.r);
        match self.edges.binary_search(&e) {
            Ok(_) => None,
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, e);
                Some((Hypergraph::from_sorted_unchecked(self.n, self.r, edges), pos))
            }
        }
    }

    /// The link hypergraph at `v`: the (r-1)-graph `{e \ {v} : v in e}`.
    pub fn link(&self, v: usize) -> Result<Hypergraph, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.r < 2 {
            return Err(HypergraphError::BadUniformity { r: self.r });
        }
        let mut edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.difference(&VertexSet::singleton(v)))
            .collect();
        edges.sort_unstable();
        Ok(Hypergraph::from_sorted_unchecked(self.n, self.r - 1, edges))
    }

    /// Connectivity in the Berge-path sense: trivially true for n <= 1,
    /// otherwise every vertex must lie in at least one edge and the
    /// vertex-edge incidence graph must be connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = VertexSet::first(self.n);
        let covered = self
            .edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.union(e));
        if covered != full {
            return false;
        }
        let mut reached = VertexSet::singleton(0);
        loop {
            let mut grew = false;
            for e in &self.edges {
                if e.intersects(&reached) && !e.is_subset_of(&reached) {
                    reached = reached.union(e);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        reached == full
    }

    /// Collects `e \ A` over edges meeting `anchor` in exactly `j` vertices,
    /// deduplicated into an (r-j)-graph with multiplicities.
    pub fn trace(&self, anchor: VertexSet, j: usize) -> Result<TraceResult, HypergraphError> {
        let allowed = VertexSet::first(self.n);
        if !anchor.is_subset_of(&allowed) {
            let vertex = anchor.difference(&allowed).min_vertex().unwrap();
            return Err(HypergraphError::VertexOutOfRange { vertex, n: self.n });
        }
        let max = self.r.saturating_sub(1).min(anchor.len());
        if j == 0 || j > max {
            return Err(HypergraphError::BadIntersectionSize { j, max });
        }
        let mut remainders: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| e.intersection(&anchor).len() == j)
            .map(|e| e.difference(&anchor))
            .collect();
        remainders.sort_unstable();
        let mut dedup = Vec::new();
        let mut multiplicities = Vec::new();
        for rem in remainders {
            if dedup.last() == Some(&rem) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                dedup.push(rem);
                multiplicities.push(1);
            }
        }
        Ok(TraceResult {
            deduplicated: Hypergraph::from_sorted_unchecked(self.n, self.r - j, dedup),
            multiplicities,
        })
    }

    /// Shrinks every edge to a `target`-sized subset of `e \ forbidden`,
    /// processing edges in stored order and picking the lexicographically
    /// smallest subset not yet used. Edges whose subsets are all taken are
    /// reported in the second component and omitted from the result.
    pub fn shrink_edges(
        &self,
        forbidden: VertexSet,
        target: usize,
    ) -> Result<(Hypergraph, Vec<usize>), HypergraphError> {
        if target == 0 {
            return Err(HypergraphError::BadShrinkTarget { target });
        }
        for e in &self.edges {
            let available = e.difference(&forbidden).len();
            if available < target {
                return Err(HypergraphError::TargetTooLarge {
                    edge: *e,
                    available,
                    target,
                });
            }
        }
        let mut used: HashSet<VertexSet> = HashSet::new();
        let mut chosen = Vec::new();
        let mut saturated = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let pool = e.difference(&forbidden).to_vec();
            let pick = pool
                .iter()
                .copied()
                .combinations(target)
                .map(VertexSet::from_iter)
                .find(|s| !used.contains(s));
            match pick {
                Some(s) => {
                    used.insert(s);
                    chosen.push(s);
                }
                None => saturated.push(i),
            }
        }
        chosen.sort_unstable();
        Ok((
            Hypergraph::from_sorted_unchecked(self.n, target, chosen),
            saturated,
        ))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hypergraph(n={}, r={}, edges=[{}])",
            self.n,
            self.r,
            self.edges.iter().map(|e| e.to_string()).join(", ")
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawHypergraph {
            n: self.n,
            r: self.r,
            edges: self.edges.iter().map(|e| e.to_vec()).collect(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawHypergraph::deserialize(deserializer)?;
        Hypergraph::from_vertex_lists(raw.n, raw.r, &raw.edges).map_err(D::Error::custom)
    }
}

#[cfg(test)]
pub(crate) use tests::hg;

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hg(n: usize, r: usize, lists: &[&[usize]]) -> Hypergraph {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        Hypergraph::from_vertex_lists(n, r, &lists).unwrap()
    }

    #[test]
    fn new_smallest_valid() {
        let h = hg(3, 3, &[&[0, 1, 2]]);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.n(), 3);
        assert_eq!(h.r(), 3);
    }

    #[test]
    fn new_rejects_duplicates() {
        let lists = vec![vec![0, 1, 2], vec![2, 1, 0]];
        let err = Hypergraph::from_vertex_lists(3, 3, &lists).unwrap_err();
        assert!(matches!(err, HypergraphError::DuplicateEdge { .. }));
    }

    #[test]
    fn new_rejects_out_of_range() {
        let err = Hypergraph::from_vertex_lists(4, 3, &[vec![0, 1, 4]]).unwrap_err();
        assert!(matches!(
            err,
            HypergraphError::VertexOutOfRange { vertex: 4, n: 4 }
        ));
    }

    #[test]
    fn new_rejects_wrong_size() {
        let err = Hypergraph::from_vertex_lists(4, 3, &[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, HypergraphError::WrongEdgeSize { .. }));
        // A repeated vertex collapses the set and is reported the same way.
        let err = Hypergraph::from_vertex_lists(4, 3, &[vec![0, 1, 1]]).unwrap_err();
        assert!(matches!(err, HypergraphError::WrongEdgeSize { .. }));
    }

    #[test]
    fn edges_are_canonically_sorted() {
        let h = hg(5, 2, &[&[1, 2], &[0, 3], &[0, 1]]);
        let listed: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(listed, vec![vec![0, 1], vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn link_matches_definition() {
        let h = hg(5, 3, &[&[0, 1, 2], &[0, 3, 4]]);
        let l0 = h.link(0).unwrap();
        assert_eq!(l0.r(), 2);
        let listed: Vec<Vec<usize>> = l0.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(listed, vec![vec![1, 2], vec![3, 4]]);

        let l1 = h.link(1).unwrap();
        let listed: Vec<Vec<usize>> = l1.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(listed, vec![vec![0, 2]]);
    }

    #[test]
    fn link_of_complete_graph_vertex() {
        // K4 complete 3-graph: link of any vertex has C(3,2) = 3 edges.
        let all: Vec<Vec<usize>> = (0..4)
            .flat_map(|a| {
                (a + 1..4).flat_map(move |b| (b + 1..4).map(move |c| vec![a, b, c]))
            })
            .collect();
        let h = Hypergraph::from_vertex_lists(4, 3, &all).unwrap();
        assert_eq!(h.link(0).unwrap().edge_count(), 3);
        assert_eq!(h.link(0).unwrap().edge_count(), h.degree(0));
    }

    #[test]
    fn link_rejects_bad_vertex() {
        let h = hg(3, 3, &[&[0, 1, 2]]);
        assert!(matches!(
            h.link(3),
            Err(HypergraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn connectivity_cases() {
        let complete4: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ];
        assert!(Hypergraph::from_vertex_lists(4, 3, &complete4)
            .unwrap()
            .is_connected());
        assert!(!hg(6, 3, &[&[0, 1, 2], &[3, 4, 5]]).is_connected());
        assert!(hg(5, 3, &[&[0, 1, 2], &[2, 3, 4]]).is_connected());
        // Uncovered vertex disconnects.
        assert!(!hg(4, 3, &[&[0, 1, 2]]).is_connected());
        assert!(Hypergraph::empty(1, 2).unwrap().is_connected());
        assert!(Hypergraph::empty(0, 2).unwrap().is_connected());
        assert!(!Hypergraph::empty(2, 2).unwrap().is_connected());
    }

    #[test]
    fn trace_direct_definition() {
        let h = hg(5, 3, &[&[0, 1, 2], &[0, 1, 3], &[2, 3, 4]]);
        let t = h.trace(VertexSet::from_iter([0, 1]), 2).unwrap();
        let listed: Vec<Vec<usize>> = t.deduplicated.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(listed, vec![vec![2], vec![3]]);
        assert_eq!(t.multiplicities, vec![1, 1]);
        assert_eq!(t.deduplicated.r(), 1);
    }

    #[test]
    fn trace_merges_multiplicity() {
        let h = hg(5, 3, &[&[0, 2, 3], &[1, 2, 3]]);
        let anchor = VertexSet::from_iter([0, 1]);
        let t = h.trace(anchor, 1).unwrap();
        let listed: Vec<Vec<usize>> = t.deduplicated.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(listed, vec![vec![2, 3]]);
        assert_eq!(t.multiplicities, vec![2]);
        // multiplicity <= C(|A|, j) = C(2,1)
        assert!(t.multiplicities.iter().all(|&m| m <= 2));
    }

    #[test]
    fn trace_disjoint_anchor_is_empty() {
        let h = hg(6, 3, &[&[2, 3, 4]]);
        let t = h.trace(VertexSet::from_iter([0, 1]), 1).unwrap();
        assert_eq!(t.deduplicated.edge_count(), 0);
        assert!(t.multiplicities.is_empty());
    }

    #[test]
    fn trace_rejects_bad_j() {
        let h = hg(5, 3, &[&[0, 1, 2]]);
        let anchor = VertexSet::from_iter([0, 1]);
        assert!(matches!(
            h.trace(anchor, 0),
            Err(HypergraphError::BadIntersectionSize { .. })
        ));
        assert!(matches!(
            h.trace(anchor, 3),
            Err(HypergraphError::BadIntersectionSize { .. })
        ));
    }

    #[test]
    fn shrink_basic_and_lex_policy() {
        let h = hg(4, 4, &[&[0, 1, 2, 3]]);
        let (s, sat) = h.shrink_edges(VertexSet::singleton(0), 3).unwrap();
        assert_eq!(s.edges()[0].to_vec(), vec![1, 2, 3]);
        assert!(sat.is_empty());

        let h = hg(5, 5, &[&[0, 1, 2, 3, 4]]);
        let (s, _) = h.shrink_edges(VertexSet::singleton(0), 3).unwrap();
        assert_eq!(s.edges()[0].to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn shrink_saturation() {
        let h = hg(5, 4, &[&[0, 1, 2, 3], &[1, 2, 3, 4]]);
        let forbidden = VertexSet::from_iter([0, 4]);
        let (s, sat) = h.shrink_edges(forbidden, 3).unwrap();
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.edges()[0].to_vec(), vec![1, 2, 3]);
        assert_eq!(sat, vec![1]);
    }

    #[test]
    fn shrink_rejects_too_large_target() {
        let h = hg(4, 3, &[&[0, 1, 2]]);
        assert!(matches!(
            h.shrink_edges(VertexSet::from_iter([0, 1]), 2),
            Err(HypergraphError::TargetTooLarge { .. })
        ));
    }

    #[test]
    fn handshake_identity() {
        let h = hg(6, 3, &[&[0, 1, 2], &[0, 1, 3], &[2, 3, 4], &[3, 4, 5]]);
        let total: usize = h.degrees().iter().sum();
        assert_eq!(total, h.r() * h.edge_count());
    }

    #[test]
    fn serde_round_trip_is_identity() {
        let h = hg(6, 3, &[&[0, 1, 2], &[0, 1, 3], &[2, 3, 4]]);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"{"n":6,"r":3,"edges":[[0,1,2],[0,1,3],[2,3,4]]}"#);
        let back: Hypergraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
        // Byte-stable: serializing again yields the same bytes.
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn deserialize_rejects_invalid() {
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":3,"r":3,"edges":[[0,1,2],[0,1,2]]}"#).is_err());
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":3,"r":3,"edges":[[0,1,9]]}"#).is_err());
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":99999,"r":3,"edges":[]}"#).is_err());
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":3,"r":0,"edges":[]}"#).is_err());
    }

    #[test]
    fn vertex_set_lex_order() {
        let a = VertexSet::from_iter([0, 3]);
        let b = VertexSet::from_iter([1, 2]);
        assert!(a < b);
        let c = VertexSet::from_iter([0, 1]);
        let d = VertexSet::from_iter([0, 1, 2]);
        assert!(c < d); // proper prefix sorts first
    }
}
