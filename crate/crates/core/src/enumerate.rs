//! Exhaustive generation of small uncoloured posets and trees, one per
//! isomorphism class.
//!
//! Every poset on `n + 1` points arises from one on `n` points by adding a
//! new maximal element above an order ideal, so growing level by level and
//! deduplicating by canonical form reaches every class exactly once.

use std::collections::{BTreeMap, BTreeSet};

use crate::aut::canonical_form;
use crate::paths::is_cfpo;
use crate::poset::ColoredPoset;

fn element_ids(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

fn extend(p: &ColoredPoset, below: &[usize]) -> ColoredPoset {
    let n = p.len();
    let mut pairs = p.relation_pairs();
    pairs.extend(below.iter().map(|&x| (x, n)));
    ColoredPoset::from_indices(element_ids(n + 1), &pairs, &BTreeMap::new())
        .expect("new maximal element keeps the order antisymmetric")
}

/// Down-closed subsets of `p`.
fn order_ideals(p: &ColoredPoset) -> Vec<Vec<usize>> {
    let n = p.len();
    assert!(n < 32, "ideal enumeration is for small posets");
    (0u32..1 << n)
        .filter(|mask| {
            (0..n)
                .filter(|&x| mask & (1 << x) != 0)
                .all(|x| p.down_bits(x).ones().all(|y| mask & (1 << y) != 0))
        })
        .map(|mask| (0..n).filter(|&x| mask & (1 << x) != 0).collect())
        .collect()
}

/// One poset from each isomorphism class on exactly `n` points.
pub fn posets(n: usize) -> Vec<ColoredPoset> {
    let mut level = vec![ColoredPoset::from_indices(Vec::new(), &[], &BTreeMap::new()).unwrap()];
    for _ in 0..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for p in &level {
            for ideal in order_ideals(p) {
                let q = extend(p, &ideal);
                if seen.insert(canonical_form(&q)) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    level
}

/// Posets on `1..=max_n` points, smallest first.
pub fn posets_up_to(max_n: usize) -> Vec<ColoredPoset> {
    let mut out = Vec::new();
    let mut level = vec![ColoredPoset::from_indices(Vec::new(), &[], &BTreeMap::new()).unwrap()];
    for _ in 0..max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for p in &level {
            for ideal in order_ideals(p) {
                let q = extend(p, &ideal);
                if seen.insert(canonical_form(&q)) {
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Connected CFPOs on `1..=max_n` points, one per isomorphism class.
pub fn connected_cfpos(max_n: usize) -> Vec<ColoredPoset> {
    posets_up_to(max_n)
        .into_iter()
        .filter(|p| p.is_connected() && is_cfpo(p))
        .collect()
}

/// CFPOs (connected or not) on `1..=max_n` points.
pub fn cfpos(max_n: usize) -> Vec<ColoredPoset> {
    posets_up_to(max_n).into_iter().filter(is_cfpo).collect()
}

/// Rooted trees on `1..=max_n` nodes, root at the bottom.
pub fn trees_up_to(max_n: usize) -> Vec<ColoredPoset> {
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    let mut level = vec![ColoredPoset::from_indices(element_ids(1), &[], &BTreeMap::new()).unwrap()];
    out.extend(level.iter().cloned());
    for _ in 1..max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for x in 0..t.len() {
                let below: Vec<usize> = t.down_bits(x).ones().collect();
                let q = extend(t, &below);
                if seen.insert(canonical_form(&q)) {
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63, 318]);
    }

    #[test]
    fn tree_counts() {
        let trees = trees_up_to(7);
        let mut by_size = [0; 8];
        for t in &trees {
            assert!(t.is_tree());
            by_size[t.len()] += 1;
        }
        // Rooted unlabelled trees.
        assert_eq!(&by_size[1..], &[1, 1, 2, 4, 9, 20, 48]);
    }
}
