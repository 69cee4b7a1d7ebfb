//! Paths, connecting sets and cycle-freeness.
//!
//! All paths live in the bounded-cut completion. A poset is cycle-free exactly
//! when the Hasse diagram of its completion is a forest; the unique path
//! between two points is then the unique simple path in that forest.

use std::collections::VecDeque;

use crate::completion::{complete, Completion};
use crate::error::{Error, Result};
use crate::poset::{ColoredPoset, CoverGraph, ElemSet};

/// The unique path between two points of a CFPO.
///
/// Indices refer to the completed carrier; originals keep their indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathResult {
    pub element_set: ElemSet,
    /// `c_1 .. c_n`: the endpoints and every interior turning point.
    pub corner_sequence: Vec<usize>,
    pub virtual_members: ElemSet,
}

impl PathResult {
    /// Interior turning points (local maxima and minima).
    pub fn interior_corners(&self) -> ElemSet {
        let k = self.corner_sequence.len();
        if k <= 2 {
            return ElemSet::new();
        }
        self.corner_sequence[1..k - 1].iter().copied().collect()
    }

    pub fn original_members(&self) -> ElemSet {
        self.element_set.difference(&self.virtual_members).copied().collect()
    }
}

/// Two distinct paths between the same pair, certifying a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPaths {
    pub from: usize,
    pub to: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Union of the paths between members of a set, split into original and
/// virtual members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionClosure {
    pub originals: ElemSet,
    pub virtuals: ElemSet,
}

/// A CFPO with its completion and forest structure precomputed.
#[derive(Clone, Debug)]
pub struct CfpoView {
    poset: ColoredPoset,
    completion: Completion,
    covers: CoverGraph,
    /// `parent[root][v]`: predecessor of `v` on the forest path from `root`.
    parent: Vec<Vec<Option<usize>>>,
}

impl CfpoView {
    pub fn new(p: &ColoredPoset) -> Result<Self> {
        let completion = complete(p);
        let covers = completion.completed.covers();
        if let Some(w) = find_cycle(&completion, &covers) {
            let c = &completion.completed;
            return Err(Error::NotACFPO(format!(
                "two paths between {} and {}: [{}] and [{}]",
                c.id(w.from),
                c.id(w.to),
                w.first.iter().map(|&x| c.id(x)).collect::<Vec<_>>().join(","),
                w.second.iter().map(|&x| c.id(x)).collect::<Vec<_>>().join(","),
            )));
        }
        let m = completion.completed.len();
        let parent = (0..m).map(|root| bfs_parents(&covers, root)).collect();
        Ok(CfpoView {
            poset: p.clone(),
            completion,
            covers,
            parent,
        })
    }

    pub fn poset(&self) -> &ColoredPoset {
        &self.poset
    }

    pub fn completion(&self) -> &Completion {
        &self.completion
    }

    pub fn completed(&self) -> &ColoredPoset {
        &self.completion.completed
    }

    pub fn covers(&self) -> &CoverGraph {
        &self.covers
    }

    pub fn is_virtual(&self, x: usize) -> bool {
        self.completion.is_virtual(x)
    }

    /// Vertex sequence of the forest path from `x` to `y`.
    pub fn walk(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        if x == y {
            return Some(vec![x]);
        }
        self.parent[x][y]?;
        let mut seq = vec![y];
        let mut cur = y;
        while let Some(prev) = self.parent[x][cur] {
            seq.push(prev);
            cur = prev;
        }
        seq.reverse();
        Some(seq)
    }

    /// The unique path between `x` and `y`; `None` across components.
    pub fn path(&self, x: usize, y: usize) -> Option<PathResult> {
        let seq = self.walk(x, y)?;
        let c = self.completed();
        let mut corners = vec![seq[0]];
        for w in seq.windows(3) {
            let up_in = c.lt(w[0], w[1]);
            let up_out = c.lt(w[1], w[2]);
            if up_in != up_out {
                corners.push(w[1]);
            }
        }
        if seq.len() > 1 {
            corners.push(*seq.last().unwrap());
        }
        let element_set: ElemSet = seq.iter().copied().collect();
        let virtual_members = element_set
            .iter()
            .copied()
            .filter(|&v| self.is_virtual(v))
            .collect();
        Some(PathResult {
            element_set,
            corner_sequence: corners,
            virtual_members,
        })
    }

    pub fn path_by_id(&self, x: &str, y: &str) -> Result<Option<PathResult>> {
        let c = self.completed();
        Ok(self.path(c.index_of(x)?, c.index_of(y)?))
    }

    /// `⟨A,B⟩`: the intersection of all paths from `A` to `B`, over the
    /// completed carrier.
    pub fn path_sets(&self, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut acc: Option<ElemSet> = None;
        for &x in a {
            for &y in b {
                let p = self.path(x, y).ok_or(Error::NotConnected)?;
                acc = Some(match acc {
                    None => p.element_set,
                    Some(s) => s.intersection(&p.element_set).copied().collect(),
                });
            }
        }
        Ok(acc.unwrap_or_default())
    }

    /// Components of the original carrier.
    pub fn components(&self) -> Vec<ElemSet> {
        let n = self.completion.original_len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let comp: ElemSet = (0..n)
                .filter(|&y| y == start || self.parent[start][y].is_some())
                .collect();
            for &y in &comp {
                seen[y] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Members of the completion in the same component as `x`.
    pub fn component_of(&self, x: usize) -> ElemSet {
        (0..self.completed().len())
            .filter(|&y| y == x || self.parent[x][y].is_some())
            .collect()
    }

    pub fn connection_closure(&self, xs: &ElemSet) -> Result<ConnectionClosure> {
        let mut all = ElemSet::new();
        for &x in xs {
            for &y in xs {
                if y < x {
                    continue;
                }
                let p = self.path(x, y).ok_or(Error::NotConnected)?;
                all.extend(p.element_set);
            }
        }
        let (virtuals, originals) = all.into_iter().partition(|&v| self.is_virtual(v));
        Ok(ConnectionClosure { originals, virtuals })
    }

    /// `B(x) = { y : ⟨x,y⟩ ∩ C = {x} }`, over original elements.
    pub fn branch_at(&self, center: &ElemSet, x: usize) -> Result<ElemSet> {
        if !center.contains(&x) {
            return Err(Error::ElementNotInCenter(self.completed().id(x).to_owned()));
        }
        let n = self.completion.original_len();
        Ok((0..n)
            .filter(|&y| match self.walk(x, y) {
                Some(seq) => seq.iter().all(|v| *v == x || !center.contains(v)),
                None => false,
            })
            .collect())
    }
}

pub fn is_cfpo(p: &ColoredPoset) -> bool {
    let completion = complete(p);
    let covers = completion.completed.covers();
    find_cycle(&completion, &covers).is_none()
}

/// Two distinct paths between a pair, if the poset is not cycle-free.
pub fn cycle_witness(p: &ColoredPoset) -> Option<(Completion, TwoPaths)> {
    let completion = complete(p);
    let covers = completion.completed.covers();
    find_cycle(&completion, &covers).map(|w| (completion, w))
}

fn bfs_parents(g: &CoverGraph, root: usize) -> Vec<Option<usize>> {
    let m = g.upper_covers.len();
    let mut parent = vec![None; m];
    let mut seen = vec![false; m];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbours(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    parent
}

/// Finds a shortest cycle through the first cycle-closing edge and splits it
/// at a pair of original elements.
fn find_cycle(completion: &Completion, g: &CoverGraph) -> Option<TwoPaths> {
    let m = g.upper_covers.len();
    let mut uf: Vec<usize> = (0..m).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut c = x;
        while uf[c] != r {
            let next = uf[c];
            uf[c] = r;
            c = next;
        }
        r
    }
    for &(u, v) in &g.edges {
        let (ru, rv) = (find(&mut uf, u), find(&mut uf, v));
        if ru != rv {
            uf[ru] = rv;
            continue;
        }
        // Shortest u..v route avoiding the edge itself closes a cycle.
        let mut parent = vec![None; m];
        let mut seen = vec![false; m];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbours(x) {
                if (x == u && y == v) || seen[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
        let mut cycle = vec![v];
        let mut cur = v;
        while let Some(prev) = parent[cur] {
            cycle.push(prev);
            cur = prev;
        }
        cycle.reverse(); // u .. v
        let originals: Vec<usize> = {
            let mut o: Vec<usize> = cycle
                .iter()
                .copied()
                .filter(|&x| !completion.is_virtual(x))
                .collect();
            o.sort_unstable();
            o
        };
        let (a, b) = match originals.as_slice() {
            [a, b, ..] => (*a, *b),
            _ => (cycle[0], cycle[1]),
        };
        let ia = cycle.iter().position(|&x| x == a).unwrap();
        let ib = cycle.iter().position(|&x| x == b).unwrap();
        let (lo, hi) = (ia.min(ib), ia.max(ib));
        let first: Vec<usize> = cycle[lo..=hi].to_vec();
        let second: Vec<usize> = cycle[..=lo]
            .iter()
            .rev()
            .chain(cycle[hi..].iter().rev())
            .copied()
            .collect();
        return Some(TwoPaths {
            from: cycle[lo],
            to: cycle[hi],
            first,
            second,
        });
    }
    None
}

/// `B(a;b)`: the cone above `a` containing `b`, in a tree. Empty unless `a < b`.
pub fn cone(t: &ColoredPoset, a: usize, b: usize) -> Result<ElemSet> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if !t.lt(a, b) {
        return Ok(ElemSet::new());
    }
    let g = t.covers();
    let step = |target: usize| {
        g.upper_covers[a]
            .iter()
            .copied()
            .find(|&c| t.leq(c, target))
    };
    let via = step(b);
    Ok((0..t.len())
        .filter(|&x| t.lt(a, x) && step(x) == via)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn ids(p: &ColoredPoset, s: &ElemSet) -> Vec<String> {
        s.iter().map(|&x| p.id(x).to_owned()).collect()
    }

    fn set(p: &ColoredPoset, names: &[&str]) -> ElemSet {
        names.iter().map(|s| p.index_of(s).unwrap()).collect()
    }

    #[test]
    fn path_examples() {
        let a4 = alt(4);
        let v = CfpoView::new(&a4).unwrap();
        let p = v.path(0, 3).unwrap();
        assert_eq!(p.element_set, (0..4).collect());
        assert_eq!(p.corner_sequence, vec![0, 1, 2, 3]);
        assert!(p.virtual_members.is_empty());

        let c3 = CfpoView::new(&chain(3)).unwrap();
        let p = c3.path(0, 2).unwrap();
        assert_eq!(p.element_set, (0..3).collect());
        assert_eq!(p.corner_sequence, vec![0, 2]);

        let anti = CfpoView::new(&antichain(2)).unwrap();
        assert!(anti.path(0, 1).is_none());
        assert_eq!(anti.path(1, 1).unwrap().corner_sequence, vec![1]);
    }

    #[test]
    fn path_through_virtual_midpoint() {
        let b = bip22();
        let v = CfpoView::new(&b).unwrap();
        let p = v.path_by_id("c", "d").unwrap().unwrap();
        assert_eq!(p.virtual_members.len(), 1);
        assert_eq!(p.corner_sequence.len(), 3);
        assert_eq!(ids(v.completed(), &p.original_members()), vec!["c", "d"]);
    }

    #[test]
    fn path_set_examples() {
        let h = hbar();
        let v = CfpoView::new(&h).unwrap();
        let got = v
            .path_sets(&set(&h, &["y", "c1", "c2"]), &set(&h, &["x", "b1", "b2"]))
            .unwrap();
        assert_eq!(got, set(&h, &["x", "y"]));
        let c = chain(3);
        let v = CfpoView::new(&c).unwrap();
        assert_eq!(v.path_sets(&set(&c, &["a"]), &set(&c, &["c"])).unwrap(), set(&c, &["a", "b", "c"]));
        let vv = alt_v();
        let v = CfpoView::new(&vv).unwrap();
        assert_eq!(v.path_sets(&set(&vv, &["a0"]), &set(&vv, &["a2"])).unwrap().len(), 3);
        assert_eq!(v.path_sets(&ElemSet::new(), &set(&vv, &["a2"])), Err(Error::EmptySet));
    }

    #[test]
    fn cfpo_examples() {
        assert!(!is_cfpo(&diamond()));
        assert!(is_cfpo(&alt(5)));
        assert!(is_cfpo(&bip22()));
        assert!(matches!(CfpoView::new(&diamond()), Err(Error::NotACFPO(_))));
    }

    #[test]
    fn diamond_witness_has_two_routes() {
        let (c, w) = cycle_witness(&diamond()).unwrap();
        assert_ne!(w.first, w.second);
        for route in [&w.first, &w.second] {
            assert_eq!(route.first(), Some(&w.from));
            assert_eq!(route.last(), Some(&w.to));
            for pair in route.windows(2) {
                assert!(c.completed.comparable(pair[0], pair[1]));
            }
        }
    }

    #[test]
    fn component_examples() {
        assert_eq!(CfpoView::new(&antichain(2)).unwrap().components().len(), 2);
        assert_eq!(CfpoView::new(&bowtie()).unwrap().components().len(), 1);
        let u = chain(2).disjoint_union(&alt_v()).unwrap();
        assert_eq!(CfpoView::new(&u).unwrap().components().len(), 2);
    }

    #[test]
    fn closure_examples() {
        let a5 = alt(5);
        let v = CfpoView::new(&a5).unwrap();
        assert_eq!(v.connection_closure(&set(&a5, &["a0", "a4"])).unwrap().originals, (0..5).collect());
        let c = chain(3);
        let v = CfpoView::new(&c).unwrap();
        assert_eq!(v.connection_closure(&set(&c, &["a"])).unwrap().originals, set(&c, &["a"]));
        let b = bowtie();
        let v = CfpoView::new(&b).unwrap();
        assert_eq!(
            v.connection_closure(&set(&b, &["c1", "c2"])).unwrap().originals,
            set(&b, &["x", "c1", "c2"])
        );
    }

    #[test]
    fn cone_examples() {
        let v = alt_v();
        assert_eq!(cone(&v, 1, 0).unwrap(), set(&v, &["a0"]));
        assert!(cone(&v, 0, 2).unwrap().is_empty());
        let c = chain(3);
        assert_eq!(cone(&c, 0, 2).unwrap(), set(&c, &["b", "c"]));
        assert_eq!(cone(&lambda(), 0, 1), Err(Error::NotATree));
    }

    #[test]
    fn branch_examples() {
        let a5 = alt(5);
        let v = CfpoView::new(&a5).unwrap();
        assert_eq!(v.branch_at(&set(&a5, &["a2"]), 2).unwrap(), (0..5).collect());
        let h = hbar();
        let v = CfpoView::new(&h).unwrap();
        let y = h.index_of("y").unwrap();
        assert_eq!(v.branch_at(&set(&h, &["x", "y"]), y).unwrap(), set(&h, &["y", "c1", "c2"]));
        let c = chain(3);
        let v = CfpoView::new(&c).unwrap();
        assert_eq!(v.branch_at(&set(&c, &["a", "b", "c"]), 1).unwrap(), set(&c, &["b"]));
        assert!(matches!(v.branch_at(&set(&c, &["a"]), 1), Err(Error::ElementNotInCenter(_))));
    }
}
