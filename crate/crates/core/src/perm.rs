//! Permutations and permutation groups on `0..degree`.
//!
//! Groups are stored as a stabiliser chain built by the Schreier–Sims
//! algorithm, which gives exact orders and membership tests without listing
//! elements. Elements can still be materialised below a size bound.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A bijection on `0..len`. `p.apply(x)` is the image of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Panics unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        Self::try_from_images(images).expect("images form a bijection")
    }

    pub fn try_from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `{x : f(x) != x}`.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, x)| *i != **x)
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// `transversal[b]` maps `base_point` to `b`.
    transversal: BTreeMap<usize, Permutation>,
}

impl Level {
    fn rebuild_orbit(&mut self, degree: usize) {
        let mut transversal = BTreeMap::new();
        transversal.insert(self.base_point, Permutation::identity(degree));
        let mut queue = VecDeque::from([self.base_point]);
        while let Some(b) = queue.pop_front() {
            let ub = transversal[&b].clone();
            for s in &self.gens {
                let c = s.apply(b);
                if let std::collections::btree_map::Entry::Vacant(slot) = transversal.entry(c) {
                    slot.insert(s.compose(&ub));
                    queue.push_back(c);
                }
            }
        }
        self.transversal = transversal;
    }
}

/// A permutation group given by generators, with a stabiliser chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// The group generated by `gens`. Every generator must have degree `degree`.
    pub fn from_generators(degree: usize, gens: impl IntoIterator<Item = Permutation>) -> Self {
        let mut generators: Vec<Permutation> = Vec::new();
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() && !generators.contains(&g) {
                generators.push(g);
            }
        }
        let levels = schreier_sims(degree, &generators);
        PermGroup {
            degree,
            generators,
            levels,
        }
    }

    /// Symmetric group on `0..degree`.
    pub fn symmetric(degree: usize) -> Self {
        let gens = (1..degree).map(|i| {
            let mut im: Vec<usize> = (0..degree).collect();
            im.swap(i - 1, i);
            Permutation(im)
        });
        Self::from_generators(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.transversal.len()))
    }

    /// The order, if it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| acc.checked_mul(l.transversal.len() as u64))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && sift(&self.levels, g, 0).0.is_identity()
    }

    /// Every element, if the order is at most `bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<Permutation>> {
        match self.order_u64() {
            Some(o) if o <= bound => {}
            _ => {
                return Err(Error::TooLarge(format!(
                    "group order {} exceeds {bound}",
                    self.order()
                )))
            }
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.transversal.len());
            for u in level.transversal.values() {
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    /// Orbit partition of points, each orbit sorted, ordered by least member.
    pub fn point_orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for x in 0..self.degree {
                uf.union(x, g.apply(x));
            }
        }
        uf.classes()
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        (0..self.degree)
            .filter(|&x| self.generators.iter().all(|g| g.apply(x) == x))
            .collect()
    }

    /// Equality of the generated permutation sets.
    pub fn equals(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::CarrierMismatch);
        }
        Ok(self.order() == other.order() && other.generators.iter().all(|g| self.contains(g)))
    }

    /// Whether every generator maps `points` onto itself.
    pub fn stabilises(&self, points: &BTreeSet<usize>) -> bool {
        self.generators
            .iter()
            .all(|g| points.iter().all(|&x| points.contains(&g.apply(x))))
    }

    /// The action on an invariant subset, relabelled to `0..points.len()` in
    /// increasing order.
    pub fn restrict(&self, points: &BTreeSet<usize>) -> Result<PermGroup> {
        if !self.stabilises(points) {
            return Err(Error::NotInvariant);
        }
        let list: Vec<usize> = points.iter().copied().collect();
        let pos: BTreeMap<usize, usize> = list.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation(list.iter().map(|x| pos[&g.apply(*x)]).collect()));
        Ok(PermGroup::from_generators(list.len(), gens))
    }

    /// Orbits of `k`-tuples under the diagonal action. Tuples are encoded in
    /// base `degree`, most significant coordinate first.
    pub fn tuple_orbits(&self, k: usize) -> TupleOrbits {
        let n = self.degree;
        let total = n.checked_pow(k as u32).expect("tuple count fits in usize");
        let mut uf = UnionFind::new(total);
        let mut tuple = vec![0; k];
        for code in 0..total {
            decode(code, n, &mut tuple);
            for g in &self.generators {
                let image = tuple.iter().fold(0, |acc, &x| acc * n + g.apply(x));
                uf.union(code, image);
            }
        }
        let ids = uf.canonical_ids();
        TupleOrbits { degree: n, k, ids }
    }
}

/// Orbit labels for every `k`-tuple over `0..degree`.
#[derive(Clone, Debug)]
pub struct TupleOrbits {
    degree: usize,
    k: usize,
    ids: Vec<usize>,
}

impl TupleOrbits {
    fn encode(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.k);
        tuple.iter().fold(0, |acc, &x| acc * self.degree + x)
    }

    pub fn orbit_id(&self, tuple: &[usize]) -> usize {
        self.ids[self.encode(tuple)]
    }

    pub fn same_orbit(&self, a: &[usize], b: &[usize]) -> bool {
        self.orbit_id(a) == self.orbit_id(b)
    }

    /// Orbits as lists of tuples, in order of least member.
    pub fn orbits(&self) -> Vec<Vec<Vec<usize>>> {
        let count = self.ids.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        let mut tuple = vec![0; self.k];
        for (code, &id) in self.ids.iter().enumerate() {
            decode(code, self.degree, &mut tuple);
            out[id].push(tuple.clone());
        }
        out
    }
}

fn decode(mut code: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = code % n;
        code /= n;
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }

    /// Class labels numbered by least member.
    fn canonical_ids(&mut self) -> Vec<usize> {
        let n = self.0.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[x] = label[r];
        }
        out
    }

    fn classes(&mut self) -> Vec<BTreeSet<usize>> {
        let ids = self.canonical_ids();
        let count = ids.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![BTreeSet::new(); count];
        for (x, id) in ids.into_iter().enumerate() {
            out[id].insert(x);
        }
        out
    }
}

/// Strips `g` through the chain from level `start`; returns the residue and
/// the level at which stripping stopped.
fn sift(levels: &[Level], g: &Permutation, start: usize) -> (Permutation, usize) {
    let mut g = g.clone();
    for (i, level) in levels.iter().enumerate().skip(start) {
        let b = g.apply(level.base_point);
        match level.transversal.get(&b) {
            Some(u) => g = u.inverse().compose(&g),
            None => return (g, i),
        }
    }
    (g, levels.len())
}

fn first_moved(g: &Permutation) -> usize {
    (0..g.degree()).find(|&x| g.apply(x) != x).expect("non-identity")
}

fn schreier_sims(degree: usize, gens: &[Permutation]) -> Vec<Level> {
    let mut levels: Vec<Level> = Vec::new();
    if gens.is_empty() {
        return levels;
    }
    // Base covering all generators.
    let mut base: Vec<usize> = Vec::new();
    for g in gens {
        if base.iter().all(|&b| g.apply(b) == b) {
            base.push(first_moved(g));
        }
    }
    for (i, &b) in base.iter().enumerate() {
        let fixing: Vec<Permutation> = gens
            .iter()
            .filter(|g| base[..i].iter().all(|&p| g.apply(p) == p))
            .cloned()
            .collect();
        levels.push(Level {
            base_point: b,
            gens: fixing,
            transversal: BTreeMap::new(),
        });
    }
    for level in levels.iter_mut() {
        level.rebuild_orbit(degree);
    }

    let mut i = levels.len();
    while i > 0 {
        let li = i - 1;
        let mut restart_at = None;
        'scan: for (b, ub) in levels[li].transversal.clone() {
            for s in levels[li].gens.clone() {
                let sb = s.apply(b);
                let u_sb = &levels[li].transversal[&sb];
                let schreier = u_sb.inverse().compose(&s).compose(&ub);
                let (residue, stop) = sift(&levels, &schreier, li + 1);
                if residue.is_identity() {
                    continue;
                }
                if stop == levels.len() {
                    levels.push(Level {
                        base_point: first_moved(&residue),
                        gens: Vec::new(),
                        transversal: BTreeMap::new(),
                    });
                }
                for level in levels.iter_mut().take(stop + 1).skip(li + 1) {
                    level.gens.push(residue.clone());
                    level.rebuild_orbit(degree);
                }
                restart_at = Some(stop + 1);
                break 'scan;
            }
        }
        match restart_at {
            Some(j) => i = j,
            None => i -= 1,
        }
    }
    levels
}
