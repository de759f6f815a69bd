//! Forbidden graph families: disjoint unions of paths, stars and explicit
//! graphs, with a small text DSL, a canonical printer, and skeleton layout.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! spec     := term ("+" term)*
//! term     := [multiplier] kind
//! kind     := "P" INT | "S" INT | "M" INT | "T:" edgelist | "G:" edgelist
//! edgelist := pair ("," pair)*
//! pair     := INT "-" INT
//! ```
//!
//! `P`/`S` take the edge count, `Mk` expands to `k` disjoint single edges,
//! `T:` requires a tree, `G:` accepts any simple graph. Parsing normalizes:
//! `S1` and one-edge explicit graphs become `P1`, and components are sorted
//! by (edge count desc, kind, canonical edge list).

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Components larger than this are rejected at parse time.
const MAX_COMPONENT_EDGES: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("edge list at byte {pos} is not a tree (must be connected and acyclic)")]
    NotATree { pos: usize },
    #[error("zero-size component at byte {pos}")]
    ZeroSize { pos: usize },
    #[error("loop edge {v}-{v} at byte {pos}")]
    Loop { pos: usize, v: usize },
    #[error("repeated edge {u}-{v} at byte {pos}")]
    MultiEdge { pos: usize, u: usize, v: usize },
    #[error("family must have at least one edge")]
    Empty,
}

/// A simple graph on a contiguous vertex range, used for `T:`/`G:` components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExplicitGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl ExplicitGraph {
    /// Normalizes an edge list: rejects loops and repeated edges, renumbers
    /// the used labels onto `0..m` preserving their order, and sorts.
    pub fn new(raw_edges: &[(usize, usize)]) -> Result<Self, FamilyError> {
        Self::new_at(raw_edges, 0)
    }

    fn new_at(raw_edges: &[(usize, usize)], pos: usize) -> Result<Self, FamilyError> {
        let mut labels: Vec<usize> = raw_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index = |x: usize| labels.binary_search(&x).unwrap();
        let mut edges = Vec::with_capacity(raw_edges.len());
        for &(u, v) in raw_edges {
            if u == v {
                return Err(FamilyError::Loop { pos, v: u });
            }
            let (a, b) = (index(u).min(index(v)), index(u).max(index(v)));
            edges.push((a, b));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(FamilyError::MultiEdge {
                    pos,
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        Ok(ExplicitGraph {
            vertex_count: labels.len(),
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.vertex_count {
            return false;
        }
        // edges = vertices - 1, so connectivity implies acyclicity.
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// One connected component of a forbidden family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    /// Path with the given number of edges.
    Path(usize),
    /// Star with the given number of edges (>= 2 after normalization).
    Star(usize),
    Explicit(ExplicitGraph),
}

impl Component {
    pub fn edge_count(&self) -> usize {
        match self {
            Component::Path(l) | Component::Star(l) => *l,
            Component::Explicit(g) => g.edges.len(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Component::Path(l) | Component::Star(l) => l + 1,
            Component::Explicit(g) => g.vertex_count,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            Component::Path(_) => 0,
            Component::Star(_) => 1,
            Component::Explicit(_) => 2,
        }
    }

    fn normalized(self) -> Component {
        match self {
            Component::Star(1) => Component::Path(1),
            Component::Explicit(g) if g.edges.len() == 1 => Component::Path(1),
            other => other,
        }
    }

    fn sort_key(&self) -> (std::cmp::Reverse<usize>, u8, Vec<(usize, usize)>) {
        let payload = match self {
            Component::Explicit(g) => g.edges.clone(),
            _ => Vec::new(),
        };
        (std::cmp::Reverse(self.edge_count()), self.kind_rank(), payload)
    }
}

/// A normalized forbidden family: the `F` of Berge-F.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    components: Vec<Component>,
}

/// A concrete labeled copy of the family, components on disjoint vertex
/// ranges. This is the graph a Berge witness embeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    /// Half-open vertex ranges, one per component.
    pub component_ranges: Vec<(usize, usize)>,
}

impl FamilySpec {
    pub fn new(components: Vec<Component>) -> Result<Self, FamilyError> {
        let mut components: Vec<Component> =
            components.into_iter().map(Component::normalized).collect();
        if components.iter().any(|c| c.edge_count() == 0) {
            return Err(FamilyError::ZeroSize { pos: 0 });
        }
        components.sort_by_key(|a| a.sort_key());
        if components.is_empty() {
            return Err(FamilyError::Empty);
        }
        Ok(FamilySpec { components })
    }

    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        Parser::new(text).parse_spec()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(|c| c.edge_count()).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.vertex_count()).sum()
    }

    /// Lays the components out on disjoint vertex ranges: paths as
    /// `0 - 1 - ... - l`, stars center-first, explicit graphs verbatim.
    pub fn skeleton_graph(&self) -> SkeletonGraph {
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut ranges = Vec::with_capacity(self.components.len());
        let mut base = 0usize;
        for c in &self.components {
            let nv = c.vertex_count();
            match c {
                Component::Path(l) => {
                    for i in 0..*l {
                        edges.push((base + i, base + i + 1));
                    }
                }
                Component::Star(l) => {
                    for i in 1..=*l {
                        edges.push((base, base + i));
                    }
                }
                Component::Explicit(g) => {
                    for &(u, v) in &g.edges {
                        edges.push((base + u, base + v));
                    }
                }
            }
            ranges.push((base, base + nv));
            base += nv;
        }
        SkeletonGraph {
            vertex_count: base,
            edges,
            component_ranges: ranges,
        }
    }
}

impl fmt::Display for FamilySpec {
    /// Canonical printer: components in sorted order, equal runs recombined
    /// with a multiplier, runs of single edges printed as a matching.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.components.len() {
            let mut j = i;
            while j < self.components.len() && self.components[j] == self.components[i] {
                j += 1;
            }
            let count = j - i;
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match &self.components[i] {
                Component::Path(1) if count >= 2 => write!(f, "M{count}")?,
                c => {
                    if count >= 2 {
                        write!(f, "{count}")?;
                    }
                    match c {
                        Component::Path(l) => write!(f, "P{l}")?,
                        Component::Star(l) => write!(f, "S{l}")?,
                        Component::Explicit(g) => {
                            write!(f, "{}:", if g.is_tree() { "T" } else { "G" })?;
                            for (k, (u, v)) in g.edges.iter().enumerate() {
                                if k > 0 {
                                    write!(f, ",")?;
                                }
                                write!(f, "{u}-{v}")?;
                            }
                        }
                    }
                }
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilySpec::parse(s)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        FamilySpec::parse(&s).map_err(D::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn syntax(&self, msg: impl Into<String>) -> FamilyError {
        FamilyError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn parse_int(&mut self) -> Result<usize, FamilyError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected integer"));
        }
        self.src[start..self.pos]
            .parse::<usize>()
            .map_err(|_| FamilyError::Syntax {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn parse_edge_list(&mut self) -> Result<Vec<(usize, usize)>, FamilyError> {
        let mut edges = Vec::new();
        loop {
            let u = self.parse_int()?;
            self.skip_ws();
            if self.peek() != Some('-') {
                return Err(self.syntax("expected '-' in edge pair"));
            }
            self.bump();
            let v = self.parse_int()?;
            edges.push((u, v));
            if edges.len() > MAX_COMPONENT_EDGES {
                return Err(self.syntax("edge list too large"));
            }
            self.skip_ws();
            if self.peek() == Some(',') {
                self.bump();
            } else {
                break;
            }
        }
        Ok(edges)
    }

    fn parse_term(&mut self, out: &mut Vec<Component>) -> Result<(), FamilyError> {
        self.skip_ws();
        let term_pos = self.pos;
        let multiplier = if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let m = self.parse_int()?;
            if m == 0 {
                return Err(FamilyError::ZeroSize { pos: term_pos });
            }
            if m > MAX_COMPONENT_EDGES {
                return Err(FamilyError::Syntax {
                    pos: term_pos,
                    msg: "multiplier too large".into(),
                });
            }
            m
        } else {
            1
        };
        self.skip_ws();
        let kind_pos = self.pos;
        let kind = self.bump().ok_or_else(|| self.syntax("expected component kind"))?;
        let edges_so_far: usize = out.iter().map(Component::edge_count).sum();
        let too_large = move |count: usize| {
            count.saturating_mul(multiplier).saturating_add(edges_so_far) > MAX_COMPONENT_EDGES
        };
        let component = match kind {
            'P' | 'S' | 'M' => {
                let size = self.parse_int()?;
                if size == 0 {
                    return Err(FamilyError::ZeroSize { pos: kind_pos });
                }
                if too_large(size) {
                    return Err(FamilyError::Syntax {
                        pos: kind_pos,
                        msg: "family too large".into(),
                    });
                }
                match kind {
                    'P' => Component::Path(size),
                    'S' => Component::Star(size),
                    _ => {
                        // Mk is k disjoint single edges.
                        for _ in 0..multiplier {
                            out.extend(std::iter::repeat_n(Component::Path(1), size));
                        }
                        return Ok(());
                    }
                }
            }
            'T' | 'G' => {
                self.skip_ws();
                if self.bump() != Some(':') {
                    return Err(FamilyError::Syntax {
                        pos: kind_pos,
                        msg: format!("expected ':' after '{kind}'"),
                    });
                }
                let raw = self.parse_edge_list()?;
                if too_large(raw.len()) {
                    return Err(FamilyError::Syntax {
                        pos: kind_pos,
                        msg: "family too large".into(),
                    });
                }
                let g = ExplicitGraph::new_at(&raw, kind_pos)?;
                if kind == 'T' && !g.is_tree() {
                    return Err(FamilyError::NotATree { pos: kind_pos });
                }
                Component::Explicit(g)
            }
            other => {
                return Err(FamilyError::Syntax {
                    pos: kind_pos,
                    msg: format!("unknown component kind '{other}'"),
                })
            }
        };
        out.extend(std::iter::repeat_n(component, multiplier));
        Ok(())
    }

    fn parse_spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let mut components = Vec::new();
        self.parse_term(&mut components)?;
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.bump();
                    self.parse_term(&mut components)?;
                }
                Some(c) => {
                    return Err(self.syntax(format!("unexpected '{c}'")));
                }
            }
        }
        FamilySpec::new(components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> FamilySpec {
        FamilySpec::parse(s).unwrap()
    }

    #[test]
    fn grammar_walkthrough() {
        let f = parse("P3+2S2+M2");
        assert_eq!(
            f.components(),
            &[
                Component::Path(3),
                Component::Star(2),
                Component::Star(2),
                Component::Path(1),
                Component::Path(1),
            ]
        );
        assert_eq!(f.to_string(), "P3+2S2+M2");
    }

    #[test]
    fn tree_edge_list() {
        let f = parse("T:0-1,1-2,1-3");
        assert_eq!(f.components().len(), 1);
        match &f.components()[0] {
            Component::Explicit(g) => {
                assert_eq!(g.edges().len(), 3);
                assert!(g.is_tree());
            }
            other => panic!("expected explicit component, got {other:?}"),
        }
    }

    #[test]
    fn zero_size_rejected() {
        assert!(matches!(
            FamilySpec::parse("P0"),
            Err(FamilyError::ZeroSize { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("M0"),
            Err(FamilyError::ZeroSize { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("0S2"),
            Err(FamilyError::ZeroSize { .. })
        ));
    }

    #[test]
    fn not_a_tree_rejected() {
        assert!(matches!(
            FamilySpec::parse("T:0-1,1-2,2-0"),
            Err(FamilyError::NotATree { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("T:0-1,2-3"),
            Err(FamilyError::NotATree { .. })
        ));
        // Same edge lists are fine as general graphs.
        assert!(FamilySpec::parse("G:0-1,1-2,2-0").is_ok());
    }

    #[test]
    fn loops_and_multi_edges_rejected() {
        assert!(matches!(
            FamilySpec::parse("G:1-1"),
            Err(FamilyError::Loop { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("G:0-1,1-0"),
            Err(FamilyError::MultiEdge { .. })
        ));
    }

    #[test]
    fn oversized_families_rejected() {
        // Found by fuzzing: a huge multiplier must not allocate.
        assert!(FamilySpec::parse("51555555555555555P5").is_err());
        assert!(FamilySpec::parse("P9999999").is_err());
        assert!(FamilySpec::parse("4000M4000").is_err());
        assert!(FamilySpec::parse("2P2000").is_ok());
    }

    #[test]
    fn syntax_errors_report_position() {
        match FamilySpec::parse("P3+") {
            Err(FamilyError::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(FamilySpec::parse("").is_err());
        assert!(FamilySpec::parse("X3").is_err());
        assert!(FamilySpec::parse("P3 S2").is_err());
    }

    #[test]
    fn whitespace_ignored() {
        assert_eq!(parse(" P3 + 2 S2 + M2 "), parse("P3+2S2+M2"));
    }

    #[test]
    fn normalization_rules() {
        // S1, M1 and single-edge explicit graphs all normalize to P1.
        assert_eq!(parse("S1"), parse("P1"));
        assert_eq!(parse("M1"), parse("P1"));
        assert_eq!(parse("T:4-7"), parse("P1"));
        // Matchings expand and recombine.
        assert_eq!(parse("P1+P1").to_string(), "M2");
        assert_eq!(parse("M2+P1").to_string(), "M3");
        // Sorted by edge count descending, paths before stars.
        assert_eq!(parse("S2+P3+P2").to_string(), "P3+P2+S2");
    }

    #[test]
    fn explicit_graphs_renumber_contiguously() {
        let f = parse("G:5-7,7-9,9-5");
        match &f.components()[0] {
            Component::Explicit(g) => {
                assert_eq!(g.vertex_count(), 3);
                assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)][..]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn skeleton_layouts() {
        let s = parse("P3").skeleton_graph();
        assert_eq!(s.vertex_count, 4);
        assert_eq!(s.edges, vec![(0, 1), (1, 2), (2, 3)]);

        let s = parse("S2").skeleton_graph();
        assert_eq!(s.vertex_count, 3);
        assert_eq!(s.edges, vec![(0, 1), (0, 2)]);

        let s = parse("P1+P1").skeleton_graph();
        assert_eq!(s.vertex_count, 4);
        assert_eq!(s.edges, vec![(0, 1), (2, 3)]);
        assert_eq!(s.component_ranges, vec![(0, 2), (2, 4)]);
    }

    #[test]
    fn forest_vertex_count_identity() {
        for text in ["P3+2S2+M2", "P5", "S4+M3", "T:0-1,1-2,1-3"] {
            let f = parse(text);
            let s = f.skeleton_graph();
            assert_eq!(s.vertex_count, f.edge_count() + f.components().len());
        }
    }

    #[test]
    fn round_trip_canonical() {
        for text in [
            "P3+2S2+M2",
            "M2",
            "P1",
            "S3",
            "G:0-1,1-2,2-0",
            "T:0-1,1-2,1-3",
            "2G:0-1,1-2,2-0+P2",
        ] {
            let f = parse(text);
            let printed = f.to_string();
            assert_eq!(parse(&printed), f, "round trip through {printed:?}");
        }
    }

    #[test]
    fn serde_uses_canonical_string() {
        let f = parse("P1+P1+S3");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "\"S3+M2\"");
        let back: FamilySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
