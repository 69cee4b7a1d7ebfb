//! Brute-force reference implementations used to check the library.
//!
//! Nothing here calls the library's completion, path, or automorphism code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use cfpo::ColoredPoset;

/// Every automorphism, by plain backtracking over images in carrier order.
pub fn brute_automorphisms(p: &ColoredPoset) -> BTreeSet<Vec<usize>> {
    let n = p.len();
    let colours: Vec<(String, BTreeSet<usize>)> = p.colors().map(|(k, v)| (k.to_owned(), v)).collect();
    let same_colours = |x: usize, y: usize| colours.iter().all(|(_, c)| c.contains(&x) == c.contains(&y));
    let mut out = BTreeSet::new();
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        p: &ColoredPoset,
        same: &dyn Fn(usize, usize) -> bool,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let x = map.len();
        if x == p.len() {
            out.insert(map.clone());
            return;
        }
        for y in 0..p.len() {
            if used[y] || !same(x, y) {
                continue;
            }
            let ok = (0..x).all(|w| p.leq(w, x) == p.leq(map[w], y) && p.leq(x, w) == p.leq(y, map[w]));
            if !ok {
                continue;
            }
            used[y] = true;
            map.push(y);
            go(p, same, map, used, out);
            map.pop();
            used[y] = false;
        }
    }
    go(p, &same_colours, &mut map, &mut used, &mut out);
    out
}

/// Orbit of a tuple under a listed group.
pub fn tuple_orbit(group: &BTreeSet<Vec<usize>>, tuple: &[usize]) -> BTreeSet<Vec<usize>> {
    group.iter().map(|g| tuple.iter().map(|&x| g[x]).collect()).collect()
}

/// A point of the completion, named by its lower side (originals below or
/// equal to it).
pub type Cut = BTreeSet<usize>;

/// The bounded-cut completion found by checking every subset.
pub struct BruteCompletion {
    pub n: usize,
    /// Lower sides; the first `n` are the principal ones of the originals.
    pub points: Vec<Cut>,
    pub uppers: Vec<Cut>,
}

impl BruteCompletion {
    pub fn new(p: &ColoredPoset) -> Self {
        let n = p.len();
        let ub = |a: &Cut| -> Cut { (0..n).filter(|&y| a.iter().all(|&x| p.leq(x, y))).collect() };
        let lb = |b: &Cut| -> Cut { (0..n).filter(|&x| b.iter().all(|&y| p.leq(x, y))).collect() };
        let principal: Vec<Cut> = (0..n).map(|x| (0..n).filter(|&y| p.leq(y, x)).collect()).collect();
        let mut points = principal.clone();
        let mut uppers: Vec<Cut> = (0..n).map(|x| (0..n).filter(|&y| p.leq(x, y)).collect()).collect();
        for mask in 1u64..(1 << n) {
            let a: Cut = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let b = ub(&a);
            if b.is_empty() || lb(&b) != a || principal.contains(&a) {
                continue;
            }
            points.push(a);
            uppers.push(b);
        }
        BruteCompletion { n, points, uppers }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.points[x].is_subset(&self.points[y])
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.len()).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    /// Every path from `x` to `y` in the sense of connecting sets: a
    /// sequence of saturated chains that alternate in direction and meet
    /// only at their shared turning points. Returned as point sets with
    /// their turning-point sequences.
    pub fn paths(&self, x: usize, y: usize) -> Vec<(BTreeSet<usize>, Vec<usize>)> {
        let m = self.len();
        let nbrs: Vec<Vec<usize>> = (0..m)
            .map(|a| (0..m).filter(|&b| self.covers(a, b) || self.covers(b, a)).collect())
            .collect();
        let mut out = Vec::new();
        let mut walk = vec![x];
        let mut on = vec![false; m];
        on[x] = true;
        self.extend(&nbrs, y, &mut walk, &mut on, &mut out);
        out
    }

    fn extend(
        &self,
        nbrs: &[Vec<usize>],
        target: usize,
        walk: &mut Vec<usize>,
        on: &mut Vec<bool>,
        out: &mut Vec<(BTreeSet<usize>, Vec<usize>)>,
    ) {
        let last = *walk.last().unwrap();
        if last == target {
            let mut corners = vec![walk[0]];
            for w in walk.windows(3) {
                if self.lt(w[0], w[1]) != self.lt(w[1], w[2]) {
                    corners.push(w[1]);
                }
            }
            if walk.len() > 1 {
                corners.push(last);
            }
            out.push((walk.iter().copied().collect(), corners));
            return;
        }
        for &next in &nbrs[last] {
            if on[next] {
                continue;
            }
            on[next] = true;
            walk.push(next);
            self.extend(nbrs, target, walk, on, out);
            walk.pop();
            on[next] = false;
        }
    }
}

/// Cycle-freeness straight from the definition: at most one path between
/// any two original points.
pub fn oracle_is_cfpo(p: &ColoredPoset) -> bool {
    let d = BruteCompletion::new(p);
    (0..p.len()).all(|x| {
        (x + 1..p.len()).all(|y| {
            let sets: BTreeSet<BTreeSet<usize>> = d.paths(x, y).into_iter().map(|(s, _)| s).collect();
            sets.len() <= 1
        })
    })
}

/// Lower sides of the library's completion points, by original index.
pub fn library_cuts(view: &cfpo::paths::CfpoView) -> Vec<Cut> {
    let c = view.completion();
    (0..c.completed.len())
        .map(|v| {
            if c.is_virtual(v) {
                c.lower_side(v)
            } else {
                (0..c.original_len()).filter(|&y| view.poset().leq(y, v)).collect()
            }
        })
        .collect()
}

/// Index of every library completion point among the brute-force points.
pub fn match_points(view: &cfpo::paths::CfpoView, d: &BruteCompletion) -> Vec<usize> {
    let by_cut: BTreeMap<&Cut, usize> = d.points.iter().enumerate().map(|(i, c)| (c, i)).collect();
    library_cuts(view).iter().map(|c| by_cut[c]).collect()
}
