//! Bounded-cut Dedekind–MacNeille completion.
//!
//! A cut is a pair `(A, B)` of nonempty sets with `A` the lower bounds of `B`
//! and `B` the upper bounds of `A`. Every cut that is not `(↓x, ↑x)` for some
//! element becomes a new, colourless "virtual" element. Cuts with an empty
//! side are never added, so no global top or bottom appears.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;

use crate::poset::{ColoredPoset, ElemSet};

/// Colour placed on virtual elements when a completion is handed to routines
/// that must not confuse them with original points.
pub const VIRTUAL: &str = "VIRTUAL";

#[derive(Clone, Debug)]
pub struct Completion {
    /// Originals first, in their declared order, then virtual elements.
    pub completed: ColoredPoset,
    original_len: usize,
    /// Lower side of each virtual cut, indexed from `original_len`.
    lower_sides: Vec<FixedBitSet>,
    by_lower_side: HashMap<FixedBitSet, usize>,
}

impl Completion {
    pub fn original_len(&self) -> usize {
        self.original_len
    }

    /// Index of an original element inside `completed`.
    pub fn image(&self, x: usize) -> usize {
        assert!(x < self.original_len);
        x
    }

    pub fn is_virtual(&self, x: usize) -> bool {
        x >= self.original_len
    }

    pub fn virtual_elements(&self) -> ElemSet {
        (self.original_len..self.completed.len()).collect()
    }

    pub fn has_virtual(&self) -> bool {
        self.completed.len() > self.original_len
    }

    /// Originals strictly below the virtual element `v`.
    pub fn lower_side(&self, v: usize) -> ElemSet {
        self.lower_sides[v - self.original_len].ones().collect()
    }

    /// The completed poset with every virtual element coloured [`VIRTUAL`].
    pub fn marked(&self) -> ColoredPoset {
        if self.has_virtual() {
            self.completed.with_color(VIRTUAL, &self.virtual_elements())
        } else {
            self.completed.clone()
        }
    }

    /// Extends a permutation of the original carrier to the completion.
    /// The input must be an automorphism of the original order.
    pub fn extend_permutation(&self, perm: &[usize]) -> Vec<usize> {
        let n = self.original_len;
        let mut out: Vec<usize> = perm.to_vec();
        for side in &self.lower_sides {
            let mut image = FixedBitSet::with_capacity(n);
            for a in side.ones() {
                image.insert(perm[a]);
            }
            let target = *self
                .by_lower_side
                .get(&image)
                .expect("automorphisms map cuts to cuts");
            out.push(target);
        }
        out
    }
}

/// Computes the bounded-cut completion of `p`.
pub fn complete(p: &ColoredPoset) -> Completion {
    let n = p.len();
    let principal: Vec<FixedBitSet> = (0..n).map(|x| p.down_bits(x).clone()).collect();

    // Lower sides of cuts are exactly the nonempty intersections of
    // principal down-sets; close the generators under intersection.
    let mut family: Vec<FixedBitSet> = Vec::new();
    let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
    for d in &principal {
        if seen.insert(d.clone(), ()).is_none() {
            family.push(d.clone());
        }
    }
    let mut i = 0;
    while i < family.len() {
        let current = family[i].clone();
        for d in &principal {
            let mut meet = current.clone();
            meet.intersect_with(d);
            if meet.count_ones(..) > 0 && seen.insert(meet.clone(), ()).is_none() {
                family.push(meet);
            }
        }
        i += 1;
    }

    let upper_of = |a: &FixedBitSet| -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(n);
        b.insert_range(..);
        for x in a.ones() {
            b.intersect_with(p.up_bits(x));
        }
        b
    };

    let mut virtuals: Vec<(FixedBitSet, FixedBitSet)> = family
        .into_iter()
        .filter_map(|a| {
            let b = upper_of(&a);
            (a.intersection(&b).next().is_none()).then_some((a, b))
        })
        .collect();
    virtuals.sort_by_key(|(a, _)| (a.count_ones(..), a.ones().collect::<Vec<_>>()));

    let mut ids: Vec<String> = p.ids().to_vec();
    let mut pairs: Vec<(usize, usize)> = p.relation_pairs();
    for (k, (a, b)) in virtuals.iter().enumerate() {
        let v = n + k;
        let maxima: Vec<&str> = a
            .ones()
            .filter(|&x| a.ones().all(|y| y == x || !p.lt(x, y)))
            .map(|x| p.id(x))
            .collect();
        let minima: Vec<&str> = b
            .ones()
            .filter(|&x| b.ones().all(|y| y == x || !p.lt(y, x)))
            .map(|x| p.id(x))
            .collect();
        let base = format!("[{}|{}]", maxima.join(","), minima.join(","));
        let name = crate::poset::fresh_id_avoiding(&base, |s| ids.iter().any(|t| t == s));
        ids.push(name);
        for x in a.ones() {
            pairs.push((x, v));
        }
        for x in b.ones() {
            pairs.push((v, x));
        }
        for (j, (a2, _)) in virtuals.iter().enumerate() {
            if j != k && a.is_subset(a2) {
                pairs.push((v, n + j));
            }
        }
    }
    let colors: BTreeMap<String, ElemSet> = p.colors().map(|(k, v)| (k.to_owned(), v)).collect();
    let completed = ColoredPoset::from_indices(ids, &pairs, &colors)
        .expect("cut inclusion is a partial order");
    let lower_sides: Vec<FixedBitSet> = virtuals.into_iter().map(|(a, _)| a).collect();
    let by_lower_side = lower_sides
        .iter()
        .enumerate()
        .map(|(k, a)| (a.clone(), n + k))
        .collect();
    Completion {
        completed,
        original_len: n,
        lower_sides,
        by_lower_side,
    }
}
