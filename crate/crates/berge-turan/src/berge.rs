//! Berge containment: does an r-graph contain a Berge copy of a family?
//!
//! The decision procedure backtracks over an ordering of the skeleton
//! vertices and keeps a bipartite matching between the fully embedded
//! skeleton edges and the host hyperedges; a branch dies as soon as that
//! matching stops being perfect on the embedded side. A brute-force oracle
//! with no shared machinery backs it in tests.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{FamilySpec, SkeletonGraph};
use crate::hypergraph::{Hypergraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BergeError {
    #[error("edge index {index} out of range (hypergraph has {count} edges)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// An injective vertex embedding plus an injective edge assignment proving
/// that the host contains a Berge copy of the skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    /// Pairs `[skeleton vertex, host vertex]`.
    pub vertex_map: Vec<(usize, usize)>,
    /// Pairs `[skeleton edge index, host edge index]`.
    pub edge_map: Vec<(usize, usize)>,
}

/// Re-validates a witness from scratch, independently of the search that
/// produced it: injectivity of both maps and containment per skeleton edge.
pub fn validate_witness(h: &Hypergraph, f: &FamilySpec, w: &BergeWitness) -> bool {
    let skel = f.skeleton_graph();
    validate_witness_for_skeleton(h, &skel, w)
}

fn validate_witness_for_skeleton(h: &Hypergraph, skel: &SkeletonGraph, w: &BergeWitness) -> bool {
    if w.vertex_map.len() != skel.vertex_count || w.edge_map.len() != skel.edges.len() {
        return false;
    }
    let mut vmap = vec![None; skel.vertex_count];
    let mut host_seen = vec![false; h.n()];
    for &(sv, hv) in &w.vertex_map {
        if sv >= skel.vertex_count || hv >= h.n() || vmap[sv].is_some() || host_seen[hv] {
            return false;
        }
        vmap[sv] = Some(hv);
        host_seen[hv] = true;
    }
    let mut emap = vec![None; skel.edges.len()];
    let mut host_edge_seen = vec![false; h.edge_count()];
    for &(se, he) in &w.edge_map {
        if se >= skel.edges.len() || he >= h.edge_count() || emap[se].is_some() || host_edge_seen[he]
        {
            return false;
        }
        emap[se] = Some(he);
        host_edge_seen[he] = true;
    }
    skel.edges.iter().enumerate().all(|(i, &(u, v))| {
        let edge = h.edge(emap[i].unwrap());
        edge.contains(vmap[u].unwrap()) && edge.contains(vmap[v].unwrap())
    })
}

/// Searches for a Berge copy of `f` in `h`. Returns the first witness in a
/// deterministic order, or `None` when the host is Berge-`f`-free.
pub fn contains(h: &Hypergraph, f: &FamilySpec) -> Option<BergeWitness> {
    Embedder::new(h, f, None).search()
}

/// Like [`contains`], but any returned witness must map some skeleton edge
/// onto the host edge `must_use`. Supports incremental search: a copy that
/// appears when an edge is added must use that edge.
pub fn contains_using(
    h: &Hypergraph,
    f: &FamilySpec,
    must_use: usize,
) -> Result<Option<BergeWitness>, BergeError> {
    if must_use >= h.edge_count() {
        return Err(BergeError::IndexOutOfRange {
            index: must_use,
            count: h.edge_count(),
        });
    }
    Ok(Embedder::new(h, f, Some(must_use)).search())
}

struct Embedder<'a> {
    host: &'a Hypergraph,
    skel: SkeletonGraph,
    /// Skeleton vertices in placement order.
    order: Vec<usize>,
    /// Skeleton edges becoming fully embedded at each placement step.
    completed_at: Vec<Vec<usize>>,
    required: Option<usize>,
    vmap: Vec<usize>,
    used_host: VertexSet,
    /// Host edge candidates per skeleton edge; filled once fully embedded.
    cand: Vec<Vec<usize>>,
    /// skeleton edge -> host edge.
    match_skel: Vec<Option<usize>>,
    /// host edge -> skeleton edge.
    match_host: Vec<Option<usize>>,
}

const UNPLACED: usize = usize::MAX;

impl<'a> Embedder<'a> {
    fn new(host: &'a Hypergraph, f: &FamilySpec, required: Option<usize>) -> Self {
        let skel = f.skeleton_graph();
        let order = placement_order(&skel, f);
        let mut pos = vec![0usize; skel.vertex_count];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let mut completed_at = vec![Vec::new(); skel.vertex_count.max(1)];
        for (i, &(u, v)) in skel.edges.iter().enumerate() {
            completed_at[pos[u].max(pos[v])].push(i);
        }
        Embedder {
            host,
            vmap: vec![UNPLACED; skel.vertex_count],
            used_host: VertexSet::EMPTY,
            cand: vec![Vec::new(); skel.edges.len()],
            match_skel: vec![None; skel.edges.len()],
            match_host: vec![None; host.edge_count()],
            skel,
            order,
            completed_at,
            required,
        }
    }

    fn search(mut self) -> Option<BergeWitness> {
        if self.skel.edges.len() > self.host.edge_count()
            || self.skel.vertex_count > self.host.n()
            || self.host.r() < 2
        {
            return None;
        }
        if self.place(0) {
            Some(self.build_witness())
        } else {
            None
        }
    }

    fn place(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return self.finalize();
        }
        let sv = self.order[k];
        for hv in 0..self.host.n() {
            if self.used_host.contains(hv) {
                continue;
            }
            self.vmap[sv] = hv;
            self.used_host.insert(hv);
            if self.try_complete_edges(k) {
                if self.place(k + 1) {
                    return true;
                }
                self.rollback_edges(k);
            }
            self.used_host.remove(hv);
            self.vmap[sv] = UNPLACED;
        }
        false
    }

    /// Computes candidates for edges completed at step `k` and extends the
    /// matching by one augmenting path per edge. On failure undoes its own
    /// partial work and reports the branch dead.
    fn try_complete_edges(&mut self, k: usize) -> bool {
        for idx in 0..self.completed_at[k].len() {
            let se = self.completed_at[k][idx];
            let (u, v) = self.skel.edges[se];
            let (hu, hv) = (self.vmap[u], self.vmap[v]);
            let cands: Vec<usize> = (0..self.host.edge_count())
                .filter(|&he| {
                    let e = self.host.edge(he);
                    e.contains(hu) && e.contains(hv)
                })
                .collect();
            self.cand[se] = cands;
            if !self.augment(se) {
                for j in 0..=idx {
                    let prev = self.completed_at[k][j];
                    self.unmatch(prev);
                    self.cand[prev].clear();
                }
                return false;
            }
        }
        true
    }

    fn rollback_edges(&mut self, k: usize) {
        for i in 0..self.completed_at[k].len() {
            let se = self.completed_at[k][i];
            self.unmatch(se);
            self.cand[se].clear();
        }
    }

    fn unmatch(&mut self, se: usize) {
        if let Some(he) = self.match_skel[se].take() {
            self.match_host[he] = None;
        }
    }

    /// Kuhn augmenting step for one skeleton edge.
    fn augment(&mut self, se: usize) -> bool {
        let mut visited = vec![false; self.host.edge_count()];
        self.augment_rec(se, &mut visited)
    }

    fn augment_rec(&mut self, se: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.cand[se].len() {
            let he = self.cand[se][i];
            if visited[he] {
                continue;
            }
            visited[he] = true;
            match self.match_host[he] {
                None => {
                    self.match_host[he] = Some(se);
                    self.match_skel[se] = Some(he);
                    return true;
                }
                Some(other) => {
                    if self.augment_rec(other, visited) {
                        self.match_host[he] = Some(se);
                        self.match_skel[se] = Some(he);
                        return true;
                    }
                }
            }
        }
        false
    }

    /// All skeleton vertices placed; every edge already holds a match, so a
    /// witness exists. With a required host edge, rebuild the matching so it
    /// uses that edge, or reject this embedding.
    fn finalize(&mut self) -> bool {
        let req = match self.required {
            None => return true,
            Some(req) => req,
        };
        if self.match_host[req].is_some() {
            return true;
        }
        for se in 0..self.skel.edges.len() {
            if !self.cand[se].contains(&req) {
                continue;
            }
            if let Some(assignment) = forced_matching(&self.cand, se, req) {
                for (s, h) in assignment.iter().enumerate() {
                    self.match_skel[s] = Some(h.unwrap());
                }
                self.match_host = vec![None; self.host.edge_count()];
                for (s, h) in assignment.iter().enumerate() {
                    self.match_host[h.unwrap()] = Some(s);
                }
                return true;
            }
        }
        false
    }

    fn build_witness(&self) -> BergeWitness {
        BergeWitness {
            vertex_map: (0..self.skel.vertex_count)
                .map(|sv| (sv, self.vmap[sv]))
                .collect(),
            edge_map: (0..self.skel.edges.len())
                .map(|se| (se, self.match_skel[se].unwrap()))
                .collect(),
        }
    }
}

/// Perfect matching on all skeleton edges with `fixed_se` pinned to
/// `fixed_he`, by plain Kuhn over the remaining edges.
fn forced_matching(cand: &[Vec<usize>], fixed_se: usize, fixed_he: usize) -> Option<Vec<Option<usize>>> {
    let host_count = cand
        .iter()
        .flat_map(|c| c.iter().copied())
        .max()
        .map_or(0, |m| m + 1)
        .max(fixed_he + 1);
    let mut match_skel: Vec<Option<usize>> = vec![None; cand.len()];
    let mut match_host: Vec<Option<usize>> = vec![None; host_count];
    match_skel[fixed_se] = Some(fixed_he);
    match_host[fixed_he] = Some(fixed_se);

    fn try_augment(
        se: usize,
        cand: &[Vec<usize>],
        fixed_se: usize,
        visited: &mut [bool],
        match_skel: &mut [Option<usize>],
        match_host: &mut [Option<usize>],
    ) -> bool {
        for &he in &cand[se] {
            if visited[he] {
                continue;
            }
            visited[he] = true;
            let take = match match_host[he] {
                None => true,
                // The pinned pair may never be displaced.
                Some(other) if other != fixed_se => {
                    try_augment(other, cand, fixed_se, visited, match_skel, match_host)
                }
                Some(_) => false,
            };
            if take {
                match_host[he] = Some(se);
                match_skel[se] = Some(he);
                return true;
            }
        }
        false
    }

    for se in 0..cand.len() {
        if se == fixed_se {
            continue;
        }
        let mut visited = vec![false; host_count];
        visited[fixed_he] = true;
        if !try_augment(se, cand, fixed_se, &mut visited, &mut match_skel, &mut match_host) {
            return None;
        }
    }
    Some(match_skel)
}

/// Largest components first; within a component start at a maximum-degree
/// vertex and grow by adjacency, preferring vertices with the most placed
/// neighbors. Keeps the partial-embedding matching tight.
fn placement_order(skel: &SkeletonGraph, f: &FamilySpec) -> Vec<usize> {
    let mut deg = vec![0usize; skel.vertex_count];
    let mut adj = vec![Vec::new(); skel.vertex_count];
    for &(u, v) in &skel.edges {
        deg[u] += 1;
        deg[v] += 1;
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp_order: Vec<usize> = (0..f.components().len()).collect();
    comp_order.sort_by_key(|&c| {
        let (start, end) = skel.component_ranges[c];
        (
            std::cmp::Reverse(f.components()[c].edge_count()),
            std::cmp::Reverse(end - start),
            start,
        )
    });
    let mut order = Vec::with_capacity(skel.vertex_count);
    let mut placed = vec![false; skel.vertex_count];
    for &c in &comp_order {
        let (start, end) = skel.component_ranges[c];
        let mut remaining = end - start;
        while remaining > 0 {
            let next = (start..end)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let placed_nbrs = adj[v].iter().filter(|&&w| placed[w]).count();
                    (placed_nbrs, deg[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
            remaining -= 1;
        }
    }
    order
}

/// Berge-star finder: a system of distinct representatives between leaf
/// vertices and the host edges through `center`, computed as a bipartite
/// matching. Stops as soon as `l` leaves are matched.
pub fn find_berge_star(
    h: &Hypergraph,
    center: usize,
    l: usize,
) -> Result<Option<BergeWitness>, BergeError> {
    if center >= h.n() {
        return Err(BergeError::VertexOutOfRange {
            vertex: center,
            n: h.n(),
        });
    }
    if l == 0 || h.r() < 2 {
        return Ok(None);
    }
    let through: Vec<usize> = (0..h.edge_count())
        .filter(|&i| h.edge(i).contains(center))
        .collect();
    if through.len() < l {
        return Ok(None);
    }
    // Left side: edges through the center. Right side: leaf vertices.
    let mut match_leaf: Vec<Option<usize>> = vec![None; h.n()];
    let mut match_edge: Vec<Option<usize>> = vec![None; through.len()];

    fn augment(
        i: usize,
        h: &Hypergraph,
        through: &[usize],
        center: usize,
        visited: &mut [bool],
        match_leaf: &mut [Option<usize>],
        match_edge: &mut [Option<usize>],
    ) -> bool {
        for v in h.edge(through[i]).iter() {
            if v == center || visited[v] {
                continue;
            }
            visited[v] = true;
            let ok = match match_leaf[v] {
                None => true,
                Some(other) => augment(other, h, through, center, visited, match_leaf, match_edge),
            };
            if ok {
                match_leaf[v] = Some(i);
                match_edge[i] = Some(v);
                return true;
            }
        }
        false
    }

    let mut matched = 0;
    for i in 0..through.len() {
        let mut visited = vec![false; h.n()];
        if augment(i, h, &through, center, &mut visited, &mut match_leaf, &mut match_edge) {
            matched += 1;
            if matched == l {
                break;
            }
        }
    }
    if matched < l {
        return Ok(None);
    }
    let pairs: Vec<(usize, usize)> = match_edge
        .iter()
        .enumerate()
        .filter_map(|(i, leaf)| leaf.map(|v| (through[i], v)))
        .take(l)
        .collect();
    // Star skeleton: center is vertex 0, leaves 1..=l in edge order.
    let mut vertex_map = vec![(0, center)];
    let mut edge_map = Vec::with_capacity(l);
    for (slot, &(he, leaf)) in pairs.iter().enumerate() {
        vertex_map.push((slot + 1, leaf));
        edge_map.push((slot, he));
    }
    Ok(Some(BergeWitness { vertex_map, edge_map }))
}

/// Independent brute-force containment check: enumerate every injective
/// vertex map in natural vertex order, then every injective edge assignment.
/// No ordering heuristics, no matching, nothing shared with [`contains`].
/// Intended for small instances (e(h) <= 8, |V(F)| <= 8).
pub fn oracle_contains(h: &Hypergraph, f: &FamilySpec) -> bool {
    let skel = f.skeleton_graph();
    if skel.edges.len() > h.edge_count() || skel.vertex_count > h.n() || h.r() < 2 {
        return false;
    }

    fn assign_edges(h: &Hypergraph, edges: &[(usize, usize)], vmap: &[usize], used: &mut [bool], i: usize) -> bool {
        if i == edges.len() {
            return true;
        }
        let (u, v) = edges[i];
        for he in 0..h.edge_count() {
            if used[he] {
                continue;
            }
            let e = h.edge(he);
            if e.contains(vmap[u]) && e.contains(vmap[v]) {
                used[he] = true;
                if assign_edges(h, edges, vmap, used, i + 1) {
                    return true;
                }
                used[he] = false;
            }
        }
        false
    }

    fn pick_vertex(h: &Hypergraph, skel: &SkeletonGraph, vmap: &mut Vec<usize>, taken: &mut [bool], sv: usize) -> bool {
        if sv == skel.vertex_count {
            let mut used = vec![false; h.edge_count()];
            return assign_edges(h, &skel.edges, vmap, &mut used, 0);
        }
        for hv in 0..h.n() {
            if taken[hv] {
                continue;
            }
            taken[hv] = true;
            vmap.push(hv);
            if pick_vertex(h, skel, vmap, taken, sv + 1) {
                return true;
            }
            vmap.pop();
            taken[hv] = false;
        }
        false
    }

    let mut taken = vec![false; h.n()];
    pick_vertex(h, &skel, &mut Vec::new(), &mut taken, 0)
}
