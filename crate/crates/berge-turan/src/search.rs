//! Exact Turán numbers at desk scale by pruned exhaustive search, plus a
//! randomized local search for lower bounds beyond exhaustive reach.
//!
//! The DFS walks edge subsets in canonical lexicographic order; a child is
//! pruned exactly when the newly added edge completes a Berge copy, which is
//! sound because freeness is closed under edge deletion and a copy appearing
//! at a node must use its last-added edge. Connectivity is not monotone, so
//! the connected variant filters incumbents per node instead of pruning.

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicI64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::berge::contains_using;
use crate::family::FamilySpec;
use crate::hypergraph::{Hypergraph, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown suite id {0:?}")]
    UnknownSuite(String),
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub workers: usize,
    pub time_limit: Option<Duration>,
    pub symmetry_fixing: bool,
    pub iso_hash_pruning: bool,
    pub seed: Option<Hypergraph>,
    /// Seed for randomized components (local search only).
    pub rng_seed: u64,
    /// Hill-climbing iterations for the local search.
    pub local_iterations: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            time_limit: None,
            symmetry_fixing: true,
            iso_hash_pruning: false,
            seed: None,
            rng_seed: 0x5eed_2024,
            local_iterations: 200,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Exact,
    LowerBoundOnly,
    Timeout,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes_containment: u64,
    pub prunes_bound: u64,
    pub prunes_iso: u64,
    /// Wall time is reported on stderr by the CLI and kept out of the
    /// serialized document so identical runs emit identical bytes.
    #[serde(skip)]
    pub wall: Duration,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub value: u64,
    pub status: SearchStatus,
    pub witness: Hypergraph,
    /// Connected search only: no connected free hypergraph exists.
    pub infeasible: bool,
    pub stats: SearchStats,
}

/// Maximum hyperedge count of a Berge-`f`-free r-graph on n vertices.
pub fn turan_exact(
    n: usize,
    r: usize,
    f: &FamilySpec,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    run_search(n, r, f, opts, false)
}

/// The connected variant: incumbents must pass the connectivity check.
pub fn turan_connected(
    n: usize,
    r: usize,
    f: &FamilySpec,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    run_search(n, r, f, opts, true)
}

struct Node {
    edges: Vec<VertexSet>,
    next_start: usize,
}

struct LocalStats {
    nodes: u64,
    prunes_containment: u64,
    prunes_bound: u64,
    prunes_iso: u64,
}

/// Memo buckets: digest -> nodes seen with that digest (edges, last index).
type IsoMemo = HashMap<u64, Vec<(Vec<VertexSet>, usize)>>;

struct Engine<'a> {
    n: usize,
    r: usize,
    family: &'a FamilySpec,
    connected: bool,
    cands: Vec<VertexSet>,
    symmetry_fixing: bool,
    deadline: Option<Instant>,
    timed_out: AtomicBool,
    /// Best value so far, -1 when no feasible incumbent exists yet.
    best: AtomicI64,
    best_witness: Mutex<(i64, Option<Hypergraph>)>,
    iso_memo: Option<Mutex<IsoMemo>>,
}

impl<'a> Engine<'a> {
    fn timed_out(&self) -> bool {
        if self.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.timed_out.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }

    fn offer(&self, edges: &[VertexSet]) {
        let value = edges.len() as i64;
        if value <= self.best.load(Ordering::Relaxed) {
            return;
        }
        if self.connected {
            let hg = Hypergraph::from_sorted_unchecked(self.n, self.r, edges.to_vec());
            if !hg.is_connected() {
                return;
            }
        }
        self.best.fetch_max(value, Ordering::Relaxed);
        let mut guard = self.best_witness.lock().unwrap();
        if value > guard.0 {
            *guard = (
                value,
                Some(Hypergraph::from_sorted_unchecked(
                    self.n,
                    self.r,
                    edges.to_vec(),
                )),
            );
        }
    }

    /// Enumerates the feasible children of a node, counting prunes.
    fn children(&self, node: &Node, stats: &mut LocalStats) -> Vec<Node> {
        let m = self.cands.len();
        let mut out = Vec::new();
        let range = if node.edges.is_empty() && self.symmetry_fixing {
            // Any nonempty hypergraph can be relabeled so its lex-first edge
            // is {0..r-1}; fixing the first edge loses no isomorphism class.
            0..1.min(m)
        } else {
            node.next_start..m
        };
        for next in range {
            if self.timed_out() {
                break;
            }
            if (node.edges.len() + (m - next)) as i64 <= self.best.load(Ordering::Relaxed) {
                stats.prunes_bound += 1;
                break;
            }
            let mut edges = node.edges.clone();
            edges.push(self.cands[next]);
            let idx = edges.len() - 1;
            let hg = Hypergraph::from_sorted_unchecked(self.n, self.r, edges.clone());
            if contains_using(&hg, self.family, idx)
                .expect("index in range")
                .is_some()
            {
                stats.prunes_containment += 1;
                continue;
            }
            if self.iso_seen(&edges, next) {
                stats.prunes_iso += 1;
                continue;
            }
            out.push(Node {
                edges,
                next_start: next + 1,
            });
        }
        out
    }

    fn dfs(&self, node: &Node, stats: &mut LocalStats) {
        stats.nodes += 1;
        self.offer(&node.edges);
        if self.timed_out() {
            return;
        }
        for child in self.children(node, stats) {
            self.dfs(&child, stats);
        }
    }

    /// Isomorph memo: buckets nodes by a degree-refinement digest and prunes
    /// only after an explicit relabeling check that also covers the
    /// remaining-candidate ranges, so exactness is preserved.
    fn iso_seen(&self, edges: &[VertexSet], last: usize) -> bool {
        let memo = match &self.iso_memo {
            Some(m) => m,
            None => return false,
        };
        if self.n > 10 || edges.len() > 12 {
            return false;
        }
        let digest = iso_digest(self.n, edges);
        let mut memo = memo.lock().unwrap();
        let bucket = memo.entry(digest).or_default();
        for (other_edges, other_last) in bucket.iter() {
            if other_edges.len() == edges.len()
                && *other_last <= last
                && maps_into_earlier(self.n, edges, last, other_edges, *other_last, &self.cands)
            {
                return true;
            }
        }
        bucket.push((edges.to_vec(), last));
        false
    }
}

fn iso_digest(n: usize, edges: &[VertexSet]) -> u64 {
    use std::hash::{Hash, Hasher};
    let mut degrees = vec![0u8; n];
    for e in edges {
        for v in e.iter() {
            degrees[v] += 1;
        }
    }
    // Multiset of per-edge degree profiles, plus the sorted degree sequence.
    let mut profiles: Vec<Vec<u8>> = edges
        .iter()
        .map(|e| {
            let mut p: Vec<u8> = e.iter().map(|v| degrees[v]).collect();
            p.sort_unstable();
            p
        })
        .collect();
    profiles.sort();
    degrees.sort_unstable();
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    n.hash(&mut hasher);
    degrees.hash(&mut hasher);
    profiles.hash(&mut hasher);
    hasher.finish()
}

/// Looks for a vertex relabeling carrying `edges` onto `earlier` that maps
/// every candidate above `last` to a candidate above `earlier_last`; such a
/// map embeds this whole subtree into the earlier node's subtree.
fn maps_into_earlier(
    n: usize,
    edges: &[VertexSet],
    last: usize,
    earlier: &[VertexSet],
    earlier_last: usize,
    cands: &[VertexSet],
) -> bool {
    let mut degree_a = vec![0usize; n];
    let mut degree_b = vec![0usize; n];
    for e in edges {
        for v in e.iter() {
            degree_a[v] += 1;
        }
    }
    for e in earlier {
        for v in e.iter() {
            degree_b[v] += 1;
        }
    }
    {
        let mut a = degree_a.clone();
        let mut b = degree_b.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }
    let index_of: HashMap<VertexSet, usize> =
        cands.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut budget = 2000usize;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    try_map(
        0,
        n,
        edges,
        earlier,
        &degree_a,
        &degree_b,
        &mut perm,
        &mut used,
        &mut budget,
        &mut |perm| {
            // Verify the subtree range condition on the full relabeling:
            // the inverse image of the earlier prefix must lie in ours.
            let mut inverse = vec![0usize; n];
            for (x, &px) in perm.iter().enumerate() {
                inverse[px] = x;
            }
            for cand in cands.iter().take(earlier_last + 1) {
                let pre: VertexSet = cand.iter().map(|v| inverse[v]).collect();
                match index_of.get(&pre) {
                    Some(&i) if i <= last => {}
                    _ => return false,
                }
            }
            true
        },
    )
}

#[allow(clippy::too_many_arguments)]
fn try_map(
    v: usize,
    n: usize,
    edges: &[VertexSet],
    earlier: &[VertexSet],
    degree_a: &[usize],
    degree_b: &[usize],
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    budget: &mut usize,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if v == n {
        let mapped: Vec<VertexSet> = edges
            .iter()
            .map(|e| e.iter().map(|x| perm[x]).collect::<VertexSet>())
            .collect();
        let mut sorted = mapped;
        sorted.sort_unstable();
        let mut target = earlier.to_vec();
        target.sort_unstable();
        return sorted == target && accept(perm);
    }
    for w in 0..n {
        if used[w] || degree_a[v] != degree_b[w] {
            continue;
        }
        perm[v] = w;
        used[w] = true;
        if try_map(v + 1, n, edges, earlier, degree_a, degree_b, perm, used, budget, accept) {
            return true;
        }
        used[w] = false;
        perm[v] = usize::MAX;
    }
    false
}

fn validate_common(
    n: usize,
    r: usize,
    opts: &SearchOptions,
    f: &FamilySpec,
    connected: bool,
) -> Result<(), SearchError> {
    if r < 2 || n < r || n > MAX_VERTICES {
        return Err(SearchError::BadParameters(format!(
            "need 2 <= r <= n <= {MAX_VERTICES} (got n={n}, r={r})"
        )));
    }
    if opts.workers == 0 {
        return Err(SearchError::BadParameters("worker count must be >= 1".into()));
    }
    if let Some(seed) = &opts.seed {
        if seed.n() != n || seed.r() != r {
            return Err(SearchError::BadParameters(
                "seed construction must live on the same n and r".into(),
            ));
        }
        if crate::berge::contains(seed, f).is_some() {
            return Err(SearchError::BadParameters(
                "seed construction contains the forbidden family".into(),
            ));
        }
        if connected && !seed.is_connected() {
            return Err(SearchError::BadParameters(
                "seed construction for the connected search must be connected".into(),
            ));
        }
    }
    Ok(())
}

fn run_search(
    n: usize,
    r: usize,
    f: &FamilySpec,
    opts: &SearchOptions,
    connected: bool,
) -> Result<SearchOutcome, SearchError> {
    validate_common(n, r, opts, f, connected)?;
    let start = Instant::now();
    let cands: Vec<VertexSet> = (0..n).combinations(r).map(VertexSet::from_iter).collect();
    let engine = Engine {
        n,
        r,
        family: f,
        connected,
        cands,
        symmetry_fixing: opts.symmetry_fixing,
        deadline: opts.time_limit.map(|d| start + d),
        timed_out: AtomicBool::new(false),
        best: AtomicI64::new(-1),
        best_witness: Mutex::new((-1, None)),
        iso_memo: opts
            .iso_hash_pruning
            .then(|| Mutex::new(IsoMemo::new())),
    };
    if let Some(seed) = &opts.seed {
        engine.best.store(seed.edge_count() as i64, Ordering::Relaxed);
        *engine.best_witness.lock().unwrap() = (seed.edge_count() as i64, Some(seed.clone()));
    }

    let mut totals = LocalStats {
        nodes: 0,
        prunes_containment: 0,
        prunes_bound: 0,
        prunes_iso: 0,
    };
    let root = Node {
        edges: Vec::new(),
        next_start: 0,
    };

    if opts.workers == 1 {
        engine.dfs(&root, &mut totals);
    } else {
        // Split the shallow frontier into independent subtree tasks; the
        // incumbent is the only shared state and max-reduction is
        // order-independent, so value and status match the serial run.
        let target = opts.workers * 8;
        let mut frontier = VecDeque::new();
        frontier.push_back(root);
        while frontier.len() < target && !engine.timed_out() {
            match frontier.pop_front() {
                None => break,
                Some(node) => {
                    totals.nodes += 1;
                    engine.offer(&node.edges);
                    let children = engine.children(&node, &mut totals);
                    frontier.extend(children);
                }
            }
        }
        let queue = Mutex::new(frontier);
        let stats_acc = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..opts.workers {
                scope.spawn(|| {
                    let mut local = LocalStats {
                        nodes: 0,
                        prunes_containment: 0,
                        prunes_bound: 0,
                        prunes_iso: 0,
                    };
                    loop {
                        let task = queue.lock().unwrap().pop_front();
                        match task {
                            Some(node) => engine.dfs(&node, &mut local),
                            None => break,
                        }
                    }
                    stats_acc.lock().unwrap().push(local);
                });
            }
        });
        for local in stats_acc.into_inner().unwrap() {
            totals.nodes += local.nodes;
            totals.prunes_containment += local.prunes_containment;
            totals.prunes_bound += local.prunes_bound;
            totals.prunes_iso += local.prunes_iso;
        }
    }

    let timed_out = engine.timed_out.load(Ordering::Relaxed);
    let (best, witness) = {
        let guard = engine.best_witness.lock().unwrap();
        (guard.0, guard.1.clone())
    };
    let (value, witness, infeasible) = if best >= 0 {
        (best as u64, witness.unwrap(), false)
    } else {
        let empty = Hypergraph::from_sorted_unchecked(n, r, Vec::new());
        (0, empty, !timed_out)
    };
    let status = if timed_out {
        if best >= 0 {
            SearchStatus::LowerBoundOnly
        } else {
            SearchStatus::Timeout
        }
    } else {
        SearchStatus::Exact
    };
    Ok(SearchOutcome {
        value,
        status,
        witness,
        infeasible: connected && infeasible,
        stats: SearchStats {
            nodes: totals.nodes,
            prunes_containment: totals.prunes_containment,
            prunes_bound: totals.prunes_bound,
            prunes_iso: totals.prunes_iso,
            wall: start.elapsed(),
        },
    })
}

/// Randomized greedy insertion plus edge-swap hill climbing, maintaining
/// freeness throughout. Reports a lower bound that never decreases over
/// iterations; never claims exactness.
pub fn local_lower_bound(
    n: usize,
    r: usize,
    f: &FamilySpec,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    validate_common(n, r, opts, f, false)?;
    let start = Instant::now();
    let deadline = opts.time_limit.map(|d| start + d);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
    let cands: Vec<VertexSet> = (0..n).combinations(r).map(VertexSet::from_iter).collect();
    let mut checks: u64 = 0;

    let try_fill = |hg: &Hypergraph, order: &[usize], checks: &mut u64| -> Hypergraph {
        let mut current = hg.clone();
        for &ci in order {
            if let Some((grown, idx)) = current.inserting(cands[ci]) {
                *checks += 1;
                if contains_using(&grown, f, idx).expect("index in range").is_none() {
                    current = grown;
                }
            }
        }
        current
    };

    let base = match &opts.seed {
        Some(seed) => seed.clone(),
        None => Hypergraph::empty(n, r).expect("validated"),
    };
    let mut order: Vec<usize> = (0..cands.len()).collect();
    order.shuffle(&mut rng);
    let mut best = try_fill(&base, &order, &mut checks);

    for _ in 0..opts.local_iterations {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            break;
        }
        let mut working = best.clone();
        if working.edge_count() > 0 {
            // Drop a random edge, then refill greedily in a fresh order.
            let victim = rng.gen_range(0..working.edge_count());
            let edges: Vec<VertexSet> = working
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != victim)
                .map(|(_, e)| *e)
                .collect();
            working = Hypergraph::from_sorted_unchecked(n, r, edges);
        }
        order.shuffle(&mut rng);
        let refined = try_fill(&working, &order, &mut checks);
        if refined.edge_count() > best.edge_count() {
            best = refined;
        }
    }

    Ok(SearchOutcome {
        value: best.edge_count() as u64,
        status: SearchStatus::LowerBoundOnly,
        witness: best,
        infeasible: false,
        stats: SearchStats {
            nodes: checks,
            prunes_containment: 0,
            prunes_bound: 0,
            prunes_iso: 0,
            wall: start.elapsed(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::{contains, oracle_contains};
    use crate::constructions;

    fn fam(s: &str) -> FamilySpec {
        FamilySpec::parse(s).unwrap()
    }

    fn exact(n: usize, r: usize, f: &str) -> SearchOutcome {
        turan_exact(n, r, &fam(f), &SearchOptions::default()).unwrap()
    }

    /// Flat enumeration of every edge subset, filtered by the brute-force
    /// oracle. The independent route the DFS is checked against.
    fn flat_enumeration_maximum(n: usize, r: usize, f: &FamilySpec) -> u64 {
        let cands: Vec<VertexSet> = (0..n).combinations(r).map(VertexSet::from_iter).collect();
        let m = cands.len();
        assert!(m <= 20, "flat enumeration only at desk scale");
        let mut best = 0u64;
        for mask in 0u32..(1 << m) {
            let edges: Vec<VertexSet> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
            if edges.len() as u64 <= best {
                continue;
            }
            let hg = Hypergraph::from_sorted_unchecked(n, r, edges);
            if !oracle_contains(&hg, f) {
                best = hg.edge_count() as u64;
            }
        }
        best
    }

    #[test]
    fn pinned_small_values() {
        assert_eq!(exact(5, 3, "P1").value, 0);
        assert_eq!(exact(6, 3, "M2").value, 1);
        assert_eq!(exact(6, 3, "S2").value, 2);
        assert_eq!(exact(6, 3, "P3").value, 2);
        assert_eq!(exact(6, 3, "S3").value, 4);
        // Flat enumeration pinned the true value 6 here (a complete graph
        // on four vertices is free); the large-n formula value 5 is not yet
        // attained at n = 6.
        assert_eq!(exact(6, 2, "M1+S2").value, 6);
        // Likewise exactly 4 (complete 3-graph on four vertices).
        assert_eq!(exact(6, 3, "S2+M1").value, 4);
    }

    #[test]
    fn outcome_witnesses_are_free_and_exact() {
        for (n, r, f) in [(6, 3, "M2"), (6, 3, "S2"), (5, 3, "P2"), (6, 2, "P3")] {
            let out = exact(n, r, f);
            assert_eq!(out.status, SearchStatus::Exact);
            assert_eq!(out.witness.edge_count() as u64, out.value);
            assert!(contains(&out.witness, &fam(f)).is_none());
        }
    }

    #[test]
    fn agrees_with_flat_enumeration() {
        for n in 3..=5 {
            for f in ["P1", "P2", "S2", "M2"] {
                let want = flat_enumeration_maximum(n, 3, &fam(f));
                let got = exact(n, 3, f).value;
                assert_eq!(got, want, "n={n}, f={f}");
            }
        }
        for f in ["P2", "P3", "S2", "M2", "S2+M1"] {
            let want = flat_enumeration_maximum(5, 2, &fam(f));
            let got = exact(5, 2, f).value;
            assert_eq!(got, want, "n=5, r=2, f={f}");
        }
    }

    #[test]
    fn two_disjoint_triangles_are_extremal_for_p3() {
        // Two triangles have no path on four vertices and no larger free
        // graph exists on six vertices.
        let triangles = Hypergraph::from_vertex_lists(
            6,
            2,
            &[vec![0, 1], vec![0, 2], vec![1, 2], vec![3, 4], vec![3, 5], vec![4, 5]],
        )
        .unwrap();
        assert!(!oracle_contains(&triangles, &fam("P3")));
        assert_eq!(exact(6, 2, "P3").value, 6);
    }

    #[test]
    fn symmetry_and_iso_options_preserve_values() {
        for (n, r, f) in [(5, 3, "S2"), (6, 3, "M2"), (5, 2, "P3"), (6, 3, "S2+M1")] {
            let base = exact(n, r, f).value;
            let mut opts = SearchOptions {
                symmetry_fixing: false,
                ..Default::default()
            };
            assert_eq!(turan_exact(n, r, &fam(f), &opts).unwrap().value, base);
            opts.symmetry_fixing = true;
            opts.iso_hash_pruning = true;
            let with_iso = turan_exact(n, r, &fam(f), &opts).unwrap();
            assert_eq!(with_iso.value, base);
            opts.workers = 4;
            let with_iso_parallel = turan_exact(n, r, &fam(f), &opts).unwrap();
            assert_eq!(with_iso_parallel.value, base);
        }
    }

    #[test]
    fn connected_examples() {
        let out = turan_connected(4, 2, &fam("P3"), &SearchOptions::default()).unwrap();
        assert_eq!(out.value, 3);
        assert!(out.witness.is_connected());

        let out = turan_connected(3, 3, &fam("P1"), &SearchOptions::default()).unwrap();
        assert_eq!(out.value, 0);
        assert!(out.infeasible);
        assert_eq!(out.status, SearchStatus::Exact);
    }

    #[test]
    fn connected_seeded_path_pair() {
        let seed = constructions::htilde(8, &[3, 3], 3).unwrap().hypergraph;
        let opts = SearchOptions {
            seed: Some(seed),
            time_limit: Some(Duration::from_secs(2)),
            ..Default::default()
        };
        let out = turan_connected(8, 3, &fam("P3+P3"), &opts).unwrap();
        assert!(out.value >= 16);
        assert!(matches!(
            out.status,
            SearchStatus::Exact | SearchStatus::LowerBoundOnly
        ));
    }

    #[test]
    fn seeded_value_at_least_seed_and_seed_validation() {
        let seed = constructions::hstar(9, 2, 2, 3).unwrap().hypergraph;
        let opts = SearchOptions {
            seed: Some(seed.clone()),
            time_limit: Some(Duration::from_millis(400)),
            ..Default::default()
        };
        let out = turan_exact(9, 3, &fam("P2+S2"), &opts).unwrap();
        assert!(out.value >= seed.edge_count() as u64);

        // A containing seed is rejected.
        let bad = Hypergraph::from_vertex_lists(6, 3, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(turan_exact(6, 3, &fam("S2"), &SearchOptions {
            seed: Some(bad),
            ..Default::default()
        })
        .is_err());
    }

    #[test]
    fn value_is_independent_of_the_seed() {
        let f = fam("S2");
        let unseeded = exact(6, 3, "S2").value;
        let seed = Hypergraph::from_vertex_lists(6, 3, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let seeded = turan_exact(
            6,
            3,
            &f,
            &SearchOptions {
                seed: Some(seed),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seeded.value, unseeded);
        assert_eq!(seeded.status, SearchStatus::Exact);
    }

    #[test]
    fn monotone_in_n() {
        for f in ["S2", "M2", "P2"] {
            let mut prev = 0;
            for n in 3..=6 {
                let v = exact(n, 3, f).value;
                assert!(v >= prev, "f={f}, n={n}");
                prev = v;
            }
        }
    }

    #[test]
    fn parallel_matches_serial() {
        for f in ["S2", "M2", "P3", "S2+M1"] {
            let serial = exact(6, 3, f);
            let parallel = turan_exact(
                6,
                3,
                &fam(f),
                &SearchOptions {
                    workers: 8,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(serial.value, parallel.value, "f={f}");
            assert_eq!(serial.status, parallel.status, "f={f}");
        }
    }

    #[test]
    fn local_lower_bound_examples() {
        let seed = constructions::hstar(9, 2, 2, 3).unwrap().hypergraph;
        let out = local_lower_bound(
            9,
            3,
            &fam("P2+S2"),
            &SearchOptions {
                seed: Some(seed),
                local_iterations: 30,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(out.value >= 4);
        assert_eq!(out.status, SearchStatus::LowerBoundOnly);
        assert!(contains(&out.witness, &fam("P2+S2")).is_none());

        let out = local_lower_bound(6, 3, &fam("P1"), &SearchOptions::default()).unwrap();
        assert_eq!(out.value, 0);
    }

    #[test]
    fn local_lower_bound_monotone_and_reproducible() {
        let f = fam("S2");
        let mut prev = 0;
        for iters in [0, 5, 20] {
            let out = local_lower_bound(
                7,
                3,
                &f,
                &SearchOptions {
                    local_iterations: iters,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(out.value >= prev);
            prev = out.value;
        }
        let a = local_lower_bound(7, 3, &f, &SearchOptions::default()).unwrap();
        let b = local_lower_bound(7, 3, &f, &SearchOptions::default()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn bad_parameters() {
        assert!(turan_exact(3, 1, &fam("P1"), &SearchOptions::default()).is_err());
        assert!(turan_exact(2, 3, &fam("P1"), &SearchOptions::default()).is_err());
        assert!(turan_exact(
            6,
            3,
            &fam("S2"),
            &SearchOptions {
                workers: 0,
                ..Default::default()
            }
        )
        .is_err());
    }

    #[test]
    fn timeout_downgrades_status() {
        // A family large enough that n = 9, r = 3 cannot finish instantly.
        let opts = SearchOptions {
            time_limit: Some(Duration::from_millis(10)),
            ..Default::default()
        };
        let out = turan_exact(9, 3, &fam("P2+S2"), &opts).unwrap();
        assert_eq!(out.status, SearchStatus::LowerBoundOnly);
    }

    #[test]
    fn outcome_serialization_round_trips() {
        let out = exact(6, 3, "S2");
        let json = serde_json::to_string(&out).unwrap();
        let back: SearchOutcome = serde_json::from_str(&json).unwrap();
        assert_eq!(back.value, out.value);
        assert_eq!(back.status, out.status);
        assert_eq!(back.witness, out.witness);
        assert!(!json.contains("wall"));
    }
}
