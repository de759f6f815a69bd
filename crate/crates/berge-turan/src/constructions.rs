//! Lower-bound constructions, each generated together with its closed-form
//! edge count and the family it is claimed to avoid. Counts are checked at
//! generation; freeness is established by the containment checker, never
//! assumed.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{Component, FamilySpec};
use crate::hypergraph::{Hypergraph, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("total path vertex count is odd (sum of (l_i + 1) must be even)")]
    OddTotal,
    #[error("cannot assemble {want} pairwise edge-disjoint partitions (exhausted after {got})")]
    CollidingShifts { want: usize, got: usize },
}

/// A generated hypergraph, its predicted edge count, and the family it is
/// claimed to avoid (checked downstream).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub in_regime: bool,
    pub predicted_count: u64,
    pub hypergraph: Hypergraph,
    pub freeness_target: Option<FamilySpec>,
    pub claims_connected: bool,
}

fn binom_u64(a: usize, b: usize) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits u64 at desk scale")
}

fn check_sizes(n: usize, others: &[usize]) -> Result<(), ConstructionError> {
    if n > MAX_VERTICES {
        return Err(ConstructionError::BadParameters(format!(
            "n = {n} exceeds the vertex cap {MAX_VERTICES}"
        )));
    }
    if others.iter().any(|&x| x > MAX_VERTICES + 1) {
        return Err(ConstructionError::BadParameters(format!(
            "parameter exceeds the vertex cap {MAX_VERTICES}"
        )));
    }
    Ok(())
}

fn complete_block(into: &mut BTreeSet<VertexSet>, block: &[usize], r: usize) {
    for sub in block.iter().copied().combinations(r) {
        into.insert(VertexSet::from_iter(sub));
    }
}

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Core vertices `A*` of size k-1 joined with vertex classes of size `l`:
/// every r-subset of `A* ∪ X` per class, as a set union. Avoids a tree with
/// `l` edges together with k-1 stars.
pub fn hstar(n: usize, l: usize, k: usize, r: usize) -> Result<ConstructionReport, ConstructionError> {
    hstar_for_tree(n, l, k, r, &Component::Path(l))
}

/// [`hstar`] with the freeness target instantiated at a caller-chosen tree
/// with `l` edges instead of the default path.
pub fn hstar_for_tree(
    n: usize,
    l: usize,
    k: usize,
    r: usize,
    tree: &Component,
) -> Result<ConstructionReport, ConstructionError> {
    check_sizes(n, &[l, k, r])?;
    if k < 2 || l < 1 || r < 2 || n + 1 < k {
        return Err(ConstructionError::BadParameters(format!(
            "need k >= 2, l >= 1, r >= 2, n >= k-1 (got n={n}, l={l}, k={k}, r={r})"
        )));
    }
    if tree.edge_count() != l {
        return Err(ConstructionError::BadParameters(format!(
            "freeness tree must have l = {l} edges, got {}",
            tree.edge_count()
        )));
    }
    let core: Vec<usize> = (0..k - 1).collect();
    let rest = n - (k - 1);
    let full_classes = rest / l;
    let mut edges = BTreeSet::new();
    for c in 0..full_classes {
        let mut block = core.clone();
        block.extend(k - 1 + c * l..k - 1 + (c + 1) * l);
        complete_block(&mut edges, &block, r);
    }
    // The remainder class also receives a complete r-graph on A* ∪ X; its
    // count term C(n - l*floor((n-k+1)/l), r) includes the core subsets once.
    let mut block = core.clone();
    block.extend(k - 1 + full_classes * l..n);
    complete_block(&mut edges, &block, r);

    let predicted = (binom_u64(l + k - 1, r) - binom_u64(k - 1, r)) * full_classes as u64
        + binom_u64(n - l * full_classes, r);
    let hypergraph = Hypergraph::new(n, r, edges.into_iter().collect()).expect("valid by construction");
    assert_eq!(hypergraph.edge_count() as u64, predicted, "hstar count formula");

    let mut target = vec![tree.clone()];
    target.extend(std::iter::repeat_n(Component::Star(l), k - 1));
    Ok(ConstructionReport {
        family: "hstar".into(),
        params: params(&[("n", n as i64), ("l", l as i64), ("k", k as i64), ("r", r as i64)]),
        in_regime: 2 <= r && r < k + l,
        predicted_count: predicted,
        hypergraph,
        freeness_target: Some(FamilySpec::new(target).expect("nonempty family")),
        claims_connected: false,
    })
}

/// Sparse large-r construction: classes of size r-k+2, each contributing the
/// lexicographically first `min(l1,l2)-1` subsets of size r-k+1, unioned
/// with the k-1 core vertices.
pub fn hhat(
    n: usize,
    l1: usize,
    l2: usize,
    k: usize,
    r: usize,
) -> Result<ConstructionReport, ConstructionError> {
    check_sizes(n, &[l1, l2, k, r])?;
    if k < 2 || l1 < 2 || l2 < 2 || r < 2 || n + 1 < k || r + 2 < k {
        return Err(ConstructionError::BadParameters(format!(
            "need k >= 2, l1, l2 >= 2, r-k+2 >= 1, n >= k-1 (got n={n}, l1={l1}, l2={l2}, k={k}, r={r})"
        )));
    }
    let lmin = l1.min(l2);
    let class_size = r - k + 2;
    if lmin - 1 > class_size {
        // Impossible subset demand; cannot occur inside the theorem regime.
        return Err(ConstructionError::BadParameters(format!(
            "class of size {class_size} cannot supply {} distinct subsets",
            lmin - 1
        )));
    }
    let core: Vec<usize> = (0..k - 1).collect();
    let rest = n - (k - 1);
    let full_classes = rest / class_size;
    let mut edges = BTreeSet::new();
    for c in 0..full_classes {
        let class: Vec<usize> =
            (k - 1 + c * class_size..k - 1 + (c + 1) * class_size).collect();
        for sub in class.iter().copied().combinations(r - k + 1).take(lmin - 1) {
            let mut e = VertexSet::from_iter(sub);
            for &v in &core {
                e.insert(v);
            }
            edges.insert(e);
        }
    }
    let predicted = (lmin as u64 - 1) * full_classes as u64;
    let hypergraph = Hypergraph::new(n, r, edges.into_iter().collect()).expect("valid by construction");
    assert_eq!(hypergraph.edge_count() as u64, predicted, "hhat count formula");

    let mut target = vec![Component::Path(l1)];
    target.extend(std::iter::repeat_n(Component::Star(l2), k - 1));
    Ok(ConstructionReport {
        family: "hhat".into(),
        params: params(&[
            ("n", n as i64),
            ("l1", l1 as i64),
            ("l2", l2 as i64),
            ("k", k as i64),
            ("r", r as i64),
        ]),
        in_regime: l1 >= 3 && l2 >= 2 && r >= l1 + l2 + k - 1,
        predicted_count: predicted,
        hypergraph,
        freeness_target: Some(FamilySpec::new(target).expect("nonempty family")),
        claims_connected: false,
    })
}

/// Connected linear-forest construction: a core of size S/2 - 1 (where S is
/// the total path vertex count) completed with each outside vertex in turn.
pub fn htilde(n: usize, lengths: &[usize], r: usize) -> Result<ConstructionReport, ConstructionError> {
    check_sizes(n, &[r, lengths.len()])?;
    if lengths.iter().any(|&l| l > MAX_VERTICES) {
        return Err(ConstructionError::BadParameters(format!(
            "path length exceeds the vertex cap {MAX_VERTICES}"
        )));
    }
    if lengths.is_empty() || lengths.contains(&0) || r < 1 {
        return Err(ConstructionError::BadParameters(
            "need at least one path, all lengths >= 1, r >= 1".into(),
        ));
    }
    let total: usize = lengths.iter().map(|&l| l + 1).sum();
    if !total.is_multiple_of(2) {
        return Err(ConstructionError::OddTotal);
    }
    let core_size = total / 2 - 1;
    if n < core_size {
        return Err(ConstructionError::BadParameters(format!(
            "n = {n} smaller than the core size {core_size}"
        )));
    }
    let core: Vec<usize> = (0..core_size).collect();
    let mut edges = BTreeSet::new();
    complete_block(&mut edges, &core, r);
    for u in core_size..n {
        let mut block = core.clone();
        block.push(u);
        complete_block(&mut edges, &block, r);
    }
    let predicted = if core_size + 1 >= r {
        binom_u64(core_size, r - 1) * (n - core_size) as u64 + binom_u64(core_size, r)
    } else {
        0
    };
    let hypergraph = Hypergraph::new(n, r, edges.into_iter().collect()).expect("valid by construction");
    assert_eq!(hypergraph.edge_count() as u64, predicted, "htilde count formula");

    let target: Vec<Component> = lengths.iter().map(|&l| Component::Path(l)).collect();
    let mut p = params(&[("n", n as i64), ("r", r as i64)]);
    for (i, &l) in lengths.iter().enumerate() {
        p.insert(format!("l{}", i + 1), l as i64);
    }
    let all_odd = lengths.iter().all(|&l| l % 2 == 1);
    Ok(ConstructionReport {
        family: "htilde".into(),
        params: p,
        in_regime: lengths.len() >= 2 && all_odd && 3 <= r && 2 * (r + 7) <= total,
        predicted_count: predicted,
        hypergraph,
        freeness_target: Some(FamilySpec::new(target).expect("nonempty family")),
        claims_connected: n > core_size && core_size + 1 >= r,
    })
}

/// Disjoint complete r-graphs on blocks of `l` vertices (plus a remainder
/// block): the sharpness construction for long Berge paths.
pub fn clique_blocks(n: usize, l: usize, r: usize) -> Result<ConstructionReport, ConstructionError> {
    check_sizes(n, &[l, r])?;
    if l < 1 || r < 1 {
        return Err(ConstructionError::BadParameters(
            "need l >= 1 and r >= 1".into(),
        ));
    }
    let full = n / l;
    let mut edges = BTreeSet::new();
    for b in 0..full {
        let block: Vec<usize> = (b * l..(b + 1) * l).collect();
        complete_block(&mut edges, &block, r);
    }
    let remainder: Vec<usize> = (full * l..n).collect();
    complete_block(&mut edges, &remainder, r);

    let predicted = full as u64 * binom_u64(l, r) + binom_u64(n % l, r);
    let hypergraph = Hypergraph::new(n, r, edges.into_iter().collect()).expect("valid by construction");
    assert_eq!(hypergraph.edge_count() as u64, predicted, "clique_blocks count formula");

    Ok(ConstructionReport {
        family: "clique-blocks".into(),
        params: params(&[("n", n as i64), ("l", l as i64), ("r", r as i64)]),
        in_regime: l > r && r >= 3,
        predicted_count: predicted,
        hypergraph,
        freeness_target: Some(FamilySpec::new(vec![Component::Path(l)]).expect("nonempty")),
        claims_connected: false,
    })
}

/// `d` pairwise edge-disjoint partitions of the vertex set into blocks of
/// size r, giving a d-regular hypergraph with d*n/r edges. Partitions come
/// from cyclic shifts of the contiguous base partition first; if the shifts
/// run out, the lexicographic enumeration of all partitions fills in the
/// rest. No freeness claim is attached; callers verify their own target.
pub fn partition_regular(n: usize, r: usize, d: usize) -> Result<ConstructionReport, ConstructionError> {
    check_sizes(n, &[r, d])?;
    if r < 1 || n == 0 || !n.is_multiple_of(r) {
        return Err(ConstructionError::BadParameters(format!(
            "need r >= 1 and r | n (got n={n}, r={r})"
        )));
    }
    if d < 1 {
        return Err(ConstructionError::BadParameters("need d >= 1".into()));
    }
    let blocks = n / r;
    let mut used: HashSet<VertexSet> = HashSet::new();
    let mut chosen_partitions = 0usize;
    let mut edges: Vec<VertexSet> = Vec::with_capacity(d * blocks);

    let try_partition = |partition: &[VertexSet],
                             used: &mut HashSet<VertexSet>,
                             edges: &mut Vec<VertexSet>| {
        if partition.iter().any(|e| used.contains(e)) {
            return false;
        }
        for e in partition {
            used.insert(*e);
            edges.push(*e);
        }
        true
    };

    for shift in 0..n {
        if chosen_partitions == d {
            break;
        }
        let partition: Vec<VertexSet> = (0..blocks)
            .map(|b| (0..r).map(|i| (b * r + i + shift) % n).collect())
            .collect();
        if try_partition(&partition, &mut used, &mut edges) {
            chosen_partitions += 1;
        }
    }

    if chosen_partitions < d {
        // Lexicographic fallback: build partitions block by block, always
        // extending from the smallest unassigned vertex and skipping blocks
        // already used as edges.
        fn extend(
            n: usize,
            r: usize,
            assigned: &mut VertexSet,
            acc: &mut Vec<VertexSet>,
            used: &HashSet<VertexSet>,
            found: &mut dyn FnMut(&[VertexSet]) -> bool,
        ) -> bool {
            if assigned.len() == n {
                return found(acc);
            }
            let anchor = (0..n).find(|&v| !assigned.contains(v)).unwrap();
            let pool: Vec<usize> = (anchor + 1..n).filter(|&v| !assigned.contains(v)).collect();
            for rest in pool.into_iter().combinations(r - 1) {
                let mut block = VertexSet::singleton(anchor);
                for v in rest {
                    block.insert(v);
                }
                if used.contains(&block) {
                    continue;
                }
                for v in block.iter() {
                    assigned.insert(v);
                }
                acc.push(block);
                if extend(n, r, assigned, acc, used, found) {
                    return true;
                }
                acc.pop();
                for v in block.iter() {
                    assigned.remove(v);
                }
            }
            false
        }

        while chosen_partitions < d {
            let mut assigned = VertexSet::EMPTY;
            let mut acc = Vec::new();
            let mut captured: Option<Vec<VertexSet>> = None;
            let found = extend(n, r, &mut assigned, &mut acc, &used, &mut |p| {
                captured = Some(p.to_vec());
                true
            });
            match (found, captured) {
                (true, Some(p)) => {
                    let ok = try_partition(&p, &mut used, &mut edges);
                    debug_assert!(ok);
                    chosen_partitions += 1;
                }
                _ => {
                    return Err(ConstructionError::CollidingShifts {
                        want: d,
                        got: chosen_partitions,
                    })
                }
            }
        }
    }

    let predicted = (d * blocks) as u64;
    let hypergraph = Hypergraph::new(n, r, edges).expect("valid by construction");
    assert_eq!(hypergraph.edge_count() as u64, predicted, "partition_regular count");
    debug_assert!(hypergraph.degrees().iter().all(|&x| x == d));

    Ok(ConstructionReport {
        family: "partition-regular".into(),
        params: params(&[("n", n as i64), ("r", r as i64), ("d", d as i64)]),
        in_regime: true,
        predicted_count: predicted,
        hypergraph,
        freeness_target: None,
        claims_connected: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::contains;

    #[test]
    fn hstar_examples() {
        let rep = hstar(9, 2, 2, 3).unwrap();
        assert_eq!(rep.predicted_count, 4);
        assert_eq!(rep.hypergraph.edge_count(), 4);
        assert_eq!(rep.freeness_target.as_ref().unwrap().to_string(), "P2+S2");
        assert!(contains(&rep.hypergraph, rep.freeness_target.as_ref().unwrap()).is_none());

        // Single class: the complete 3-graph on 5 vertices.
        let rep = hstar(5, 3, 3, 3).unwrap();
        assert_eq!(rep.predicted_count, 10);

        let rep = hstar(10, 3, 2, 3).unwrap();
        assert_eq!(rep.predicted_count, 12);

        assert!(hstar(9, 2, 1, 3).is_err());
    }

    #[test]
    fn hstar_union_matches_naive_regeneration() {
        for (n, l, k, r) in [(9, 2, 2, 3), (10, 3, 2, 3), (8, 2, 3, 3), (7, 1, 4, 2)] {
            let rep = hstar(n, l, k, r).unwrap();
            // Naive union of complete blocks, deduplicated.
            let mut naive = BTreeSet::new();
            let core: Vec<usize> = (0..k - 1).collect();
            let full = (n - k + 1) / l;
            for c in 0..full {
                let mut b = core.clone();
                b.extend(k - 1 + c * l..k - 1 + (c + 1) * l);
                complete_block(&mut naive, &b, r);
            }
            let mut b = core.clone();
            b.extend(k - 1 + full * l..n);
            complete_block(&mut naive, &b, r);
            let naive: Vec<VertexSet> = naive.into_iter().collect();
            assert_eq!(rep.hypergraph.edges(), &naive[..]);
        }
    }

    #[test]
    fn hstar_for_custom_tree() {
        use crate::family::ExplicitGraph;
        let spider = Component::Explicit(ExplicitGraph::new(&[(0, 1), (1, 2), (1, 3)]).unwrap());
        let rep = hstar_for_tree(9, 3, 2, 3, &spider).unwrap();
        assert_eq!(rep.freeness_target.as_ref().unwrap().to_string(), "S3+T:0-1,1-2,1-3");
        assert!(contains(&rep.hypergraph, rep.freeness_target.as_ref().unwrap()).is_none());
        // The tree must have exactly l edges.
        assert!(hstar_for_tree(9, 2, 2, 3, &spider).is_err());
    }

    #[test]
    fn htilde_union_matches_naive_regeneration() {
        for (n, lengths, r) in [(8usize, vec![3usize, 3], 3usize), (6, vec![1, 1], 2), (7, vec![3, 1], 3)] {
            let rep = htilde(n, &lengths, r).unwrap();
            let total: usize = lengths.iter().map(|&l| l + 1).sum();
            let core: Vec<usize> = (0..total / 2 - 1).collect();
            let mut naive = BTreeSet::new();
            complete_block(&mut naive, &core, r);
            for u in core.len()..n {
                let mut b = core.clone();
                b.push(u);
                complete_block(&mut naive, &b, r);
            }
            let naive: Vec<VertexSet> = naive.into_iter().collect();
            assert_eq!(rep.hypergraph.edges(), &naive[..]);
        }
    }

    #[test]
    fn counts_stay_below_matching_bounds_with_divisibility_equality() {
        use crate::bounds::{eval_bound, BoundValue};
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let pmap = |pairs: &[(&str, i64)]| -> std::collections::BTreeMap<String, i64> {
            pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
        };

        // hstar against the tree-with-stars bound.
        for n in 5..=12usize {
            for (l, k, r) in [(2usize, 2usize, 3usize), (3, 2, 3), (2, 3, 3), (1, 3, 2)] {
                if n + 1 < k || r > k + l - 1 {
                    continue;
                }
                let rep = hstar(n, l, k, r).unwrap();
                let bound = eval_bound(
                    "tree-stars",
                    &pmap(&[("n", n as i64), ("l", l as i64), ("k", k as i64), ("r", r as i64)]),
                )
                .unwrap();
                let value = bound.count().unwrap().0.clone();
                let count = BigRational::from_integer(BigInt::from(rep.predicted_count));
                assert!(count <= value, "hstar(n={n}, l={l}, k={k}, r={r})");
                let divisible = (n - k + 1) % l == 0;
                assert_eq!(count == value, divisible, "hstar(n={n}, l={l}, k={k}, r={r})");
            }
        }

        // clique_blocks against the path bound, tight exactly on divisors.
        for n in 6..=14usize {
            let rep = clique_blocks(n, 4, 3).unwrap();
            let bound = eval_bound("gkl-path-i", &pmap(&[("n", n as i64), ("l", 4), ("r", 3)])).unwrap();
            let value = bound.count().unwrap().0.clone();
            let count = BigRational::from_integer(BigInt::from(rep.predicted_count));
            assert!(count <= value);
            assert_eq!(count == value, n % 4 == 0, "n = {n}");
        }

        // htilde meets the connected-path formula exactly (it is the
        // extremal construction).
        for n in 10..=14usize {
            let rep = htilde(n, &[9, 9], 3).unwrap();
            let bound = eval_bound("connected-path", &pmap(&[("n", n as i64), ("l", 19), ("r", 3)])).unwrap();
            assert_eq!(
                bound.count().unwrap().0,
                BigRational::from_integer(BigInt::from(rep.predicted_count))
            );
        }

        // hhat equals the path-stars lower operand by construction.
        for n in 7..=20usize {
            let rep = hhat(n, 3, 2, 2, 6).unwrap();
            let bound = eval_bound(
                "path-stars",
                &pmap(&[("n", n as i64), ("l1", 3), ("l2", 2), ("k", 2), ("r", 6)]),
            )
            .unwrap();
            match bound.value.unwrap() {
                BoundValue::Slope { lower, .. } => {
                    assert_eq!(lower.0, BigRational::from_integer(BigInt::from(rep.predicted_count)));
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn hhat_examples() {
        let rep = hhat(20, 3, 2, 2, 6).unwrap();
        assert_eq!(rep.predicted_count, 3);
        assert!(rep.in_regime);
        assert_eq!(rep.freeness_target.as_ref().unwrap().to_string(), "P3+S2");
        assert!(contains(&rep.hypergraph, rep.freeness_target.as_ref().unwrap()).is_none());

        let rep = hhat(7, 3, 2, 2, 6).unwrap();
        assert_eq!(rep.predicted_count, 1);

        let rep = hhat(6, 3, 2, 2, 6).unwrap();
        assert_eq!(rep.predicted_count, 0);
        assert_eq!(rep.hypergraph.edge_count(), 0);
    }

    #[test]
    fn htilde_examples() {
        let rep = htilde(8, &[3, 3], 3).unwrap();
        assert_eq!(rep.predicted_count, 16);
        assert!(rep.claims_connected);
        assert!(rep.hypergraph.is_connected());
        assert_eq!(rep.freeness_target.as_ref().unwrap().to_string(), "2P3");
        assert!(contains(&rep.hypergraph, rep.freeness_target.as_ref().unwrap()).is_none());

        // Graph case: a 5-edge star.
        let rep = htilde(6, &[1, 1], 2).unwrap();
        assert_eq!(rep.predicted_count, 5);
        assert!(rep.hypergraph.is_connected());

        assert!(matches!(htilde(8, &[3, 2], 3), Err(ConstructionError::OddTotal)));
    }

    #[test]
    fn clique_blocks_examples() {
        let rep = clique_blocks(8, 4, 3).unwrap();
        assert_eq!(rep.predicted_count, 8);
        assert!(rep.in_regime);
        assert!(contains(&rep.hypergraph, rep.freeness_target.as_ref().unwrap()).is_none());

        assert_eq!(clique_blocks(9, 4, 3).unwrap().predicted_count, 8);
        assert_eq!(clique_blocks(6, 2, 3).unwrap().predicted_count, 0);
    }

    #[test]
    fn partition_regular_examples() {
        // K4 decomposes into 3 perfect matchings.
        let rep = partition_regular(4, 2, 3).unwrap();
        assert_eq!(rep.predicted_count, 6);
        assert!(rep.hypergraph.degrees().iter().all(|&d| d == 3));

        let rep = partition_regular(6, 3, 2).unwrap();
        assert_eq!(rep.predicted_count, 4);
        assert!(rep.hypergraph.degrees().iter().all(|&d| d == 2));
        let listed: Vec<Vec<usize>> =
            rep.hypergraph.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(
            listed,
            vec![vec![0, 1, 2], vec![0, 4, 5], vec![1, 2, 3], vec![3, 4, 5]]
        );

        assert!(matches!(
            partition_regular(5, 3, 1),
            Err(ConstructionError::BadParameters(_))
        ));
        // All partitions of 4 points into pairs are exhausted after 3.
        assert!(matches!(
            partition_regular(4, 2, 4),
            Err(ConstructionError::CollidingShifts { want: 4, got: 3 })
        ));
    }

    #[test]
    fn report_serialization_round_trips() {
        let rep = hstar(9, 2, 2, 3).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: ConstructionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert!(json.contains("\"freeness_target\":\"P2+S2\""));
    }
}
