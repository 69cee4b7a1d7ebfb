//! Small named posets used throughout the tests and the CLI examples.

use std::collections::BTreeMap;

use crate::alt::alt_poset;
use crate::poset::ColoredPoset;

fn letters(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if k <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

fn make(elements: &[&str], relation: &[(&str, &str)]) -> ColoredPoset {
    ColoredPoset::build(elements, relation, &BTreeMap::new()).expect("fixture is a partial order")
}

/// `a < b < c < ...`
pub fn chain(k: usize) -> ColoredPoset {
    let ids = letters(k);
    let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    ColoredPoset::from_indices(ids, &pairs, &BTreeMap::new()).unwrap()
}

pub fn antichain(k: usize) -> ColoredPoset {
    ColoredPoset::from_indices(letters(k), &[], &BTreeMap::new()).unwrap()
}

/// `Alt_n` on `a0..a{n-1}`, with `a0` on top.
pub fn alt(n: usize) -> ColoredPoset {
    alt_poset(n, false).expect("n >= 1")
}

/// `a0 > a1 < a2`.
pub fn alt_v() -> ColoredPoset {
    alt(3)
}

/// `a0 < a1 > a2`.
pub fn lambda() -> ColoredPoset {
    alt_poset(3, true).unwrap()
}

/// `a < b, c < d` with `b` and `c` incomparable.
pub fn diamond() -> ColoredPoset {
    make(&["a", "b", "c", "d"], &[("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")])
}

/// `b1, b2 < x < c1, c2`.
pub fn bowtie() -> ColoredPoset {
    make(
        &["b1", "b2", "x", "c1", "c2"],
        &[("b1", "x"), ("b2", "x"), ("x", "c1"), ("x", "c2")],
    )
}

/// Complete bipartite `a, b < c, d`.
pub fn bip22() -> ColoredPoset {
    make(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
}

/// `b1, b2 < x < y < c1, c2`.
pub fn hbar() -> ColoredPoset {
    make(
        &["b1", "b2", "x", "y", "c1", "c2"],
        &[("b1", "x"), ("b2", "x"), ("x", "y"), ("y", "c1"), ("y", "c2")],
    )
}

/// Complete binary tree of height 2 (seven nodes, root `r`).
pub fn binary_tree_7() -> ColoredPoset {
    make(
        &["r", "p", "q", "p1", "p2", "q1", "q2"],
        &[
            ("r", "p"),
            ("r", "q"),
            ("p", "p1"),
            ("p", "p2"),
            ("q", "q1"),
            ("q", "q2"),
        ],
    )
}
