//! Automorphism groups of coloured posets, isomorphism search and canonical
//! forms, tuple orbits, the finite orbit criterion, wreath products and
//! fh-regular trees.
//!
//! All searches individualise one element at a time and refine the ordered
//! partition of the carrier by colours, principal-set sizes, cover degrees
//! and the cells of strict lower and upper sets.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::paths::CfpoView;
use crate::perm::{PermGroup, Permutation};
use crate::poset::{ColoredPoset, ElemSet};

/// Default largest carrier for which tuple orbits are listed.
pub const DEFAULT_MATERIALISE_BOUND: usize = 10;
/// Default largest group listed element by element.
pub const DEFAULT_ELEMENT_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub carrier: usize,
    pub elements: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            carrier: DEFAULT_MATERIALISE_BOUND,
            elements: DEFAULT_ELEMENT_BOUND,
        }
    }
}

// ---------------------------------------------------------------------------
// Refinement

type Cells = Vec<usize>;

fn colour_names<'a>(posets: impl IntoIterator<Item = &'a ColoredPoset>) -> Vec<String> {
    let mut names = BTreeSet::new();
    for p in posets {
        for (name, members) in p.colors() {
            if !members.is_empty() {
                names.insert(name.to_owned());
            }
        }
    }
    names.into_iter().collect()
}

fn colour_mask(p: &ColoredPoset, names: &[String], x: usize) -> Vec<bool> {
    names.iter().map(|n| p.has_color(n, x)).collect()
}

/// Ranks keys jointly across several posets so equal keys get equal cells.
fn rank<K: Ord + Clone>(keys: &[Vec<K>]) -> Vec<Cells> {
    let all: BTreeSet<&K> = keys.iter().flatten().collect();
    let index: BTreeMap<&K, usize> = all.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    keys.iter()
        .map(|ks| ks.iter().map(|k| index[k]).collect())
        .collect()
}

fn initial_cells(posets: &[&ColoredPoset]) -> Vec<Cells> {
    let names = colour_names(posets.iter().copied());
    let keys: Vec<Vec<_>> = posets
        .iter()
        .map(|p| {
            let cg = p.covers();
            (0..p.len())
                .map(|x| {
                    (
                        colour_mask(p, &names, x),
                        p.down_bits(x).count_ones(..),
                        p.up_bits(x).count_ones(..),
                        cg.lower_covers[x].len(),
                        cg.upper_covers[x].len(),
                    )
                })
                .collect()
        })
        .collect();
    rank(&keys)
}

fn histogram(cells: &Cells) -> Vec<usize> {
    let mut h = vec![0; cells.iter().max().map_or(0, |m| m + 1)];
    for &c in cells {
        h[c] += 1;
    }
    h
}

fn cell_count(cells: &Cells) -> usize {
    cells.iter().collect::<BTreeSet<_>>().len()
}

/// Refines jointly to stability. Returns `false` as soon as the partitions
/// stop being compatible (different cell sizes).
type RefineKey = (usize, Vec<usize>, Vec<usize>);

fn refine(posets: &[&ColoredPoset], cells: &mut [Cells]) -> bool {
    loop {
        let before = cell_count(&cells[0]);
        let keys: Vec<Vec<RefineKey>> = posets
            .iter()
            .zip(cells.iter())
            .map(|(p, c)| {
                (0..p.len())
                    .map(|x| {
                        let mut down: Vec<usize> =
                            p.down_bits(x).ones().filter(|&y| y != x).map(|y| c[y]).collect();
                        let mut up: Vec<usize> =
                            p.up_bits(x).ones().filter(|&y| y != x).map(|y| c[y]).collect();
                        down.sort_unstable();
                        up.sort_unstable();
                        (c[x], down, up)
                    })
                    .collect()
            })
            .collect();
        let ranked = rank(&keys);
        for (slot, r) in cells.iter_mut().zip(ranked) {
            *slot = r;
        }
        let h0 = histogram(&cells[0]);
        if cells[1..].iter().any(|c| histogram(c) != h0) {
            return false;
        }
        if cell_count(&cells[0]) == before {
            return true;
        }
    }
}

/// Splits `v` off the front of its cell.
fn individualise(cells: &Cells, v: usize) -> Cells {
    cells
        .iter()
        .enumerate()
        .map(|(x, &c)| 2 * c + usize::from(x != v))
        .collect()
}

fn is_discrete(cells: &Cells) -> bool {
    cell_count(cells) == cells.len()
}

/// The smallest non-singleton cell, if any.
fn target_cell(cells: &Cells) -> Option<usize> {
    let h = histogram(cells);
    (0..h.len()).find(|&c| h[c] > 1)
}

/// Checks that `map` is a colour-preserving order isomorphism `p -> q`.
fn is_isomorphism(p: &ColoredPoset, q: &ColoredPoset, map: &[usize]) -> bool {
    let names = colour_names([p, q]);
    for x in 0..p.len() {
        if colour_mask(p, &names, x) != colour_mask(q, &names, map[x]) {
            return false;
        }
        for y in 0..p.len() {
            if p.leq(x, y) != q.leq(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

fn iso_search(p: &ColoredPoset, q: &ColoredPoset, cp: Cells, cq: Cells) -> Option<Vec<usize>> {
    let mut cells = [cp, cq];
    if !refine(&[p, q], &mut cells) {
        return None;
    }
    let [cp, cq] = cells;
    if is_discrete(&cp) {
        let mut by_cell = vec![0; cq.len()];
        for (y, &c) in cq.iter().enumerate() {
            by_cell[c] = y;
        }
        let map: Vec<usize> = cp.iter().map(|&c| by_cell[c]).collect();
        return is_isomorphism(p, q, &map).then_some(map);
    }
    let target = target_cell(&cp)?;
    let x = (0..cp.len()).find(|&x| cp[x] == target)?;
    let ip = individualise(&cp, x);
    for y in (0..cq.len()).filter(|&y| cq[y] == target) {
        if let Some(m) = iso_search(p, q, ip.clone(), individualise(&cq, y)) {
            return Some(m);
        }
    }
    None
}

/// An isomorphism `p -> q` as a map of indices, if one exists.
pub fn find_isomorphism(p: &ColoredPoset, q: &ColoredPoset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let mut cells = initial_cells(&[p, q]);
    let h = histogram(&cells[0]);
    if histogram(&cells[1]) != h {
        return None;
    }
    let cq = cells.pop()?;
    let cp = cells.pop()?;
    iso_search(p, q, cp, cq)
}

pub fn are_isomorphic(p: &ColoredPoset, q: &ColoredPoset) -> bool {
    find_isomorphism(p, q).is_some()
}

// ---------------------------------------------------------------------------
// Automorphisms

fn orbit_of(gens: &[Permutation], x: usize) -> BTreeSet<usize> {
    let mut orbit = BTreeSet::from([x]);
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in gens {
            let z = g.apply(y);
            if orbit.insert(z) {
                stack.push(z);
            }
        }
    }
    orbit
}

/// Generators for `Aut(p)`, found level by level from the last point down:
/// at level `i` every point of the orbit of `i` under the stabiliser of
/// `0..i` is reached, which makes the collected set generate the group.
fn automorphism_generators(p: &ColoredPoset) -> Vec<Permutation> {
    let n = p.len();
    let mut base = initial_cells(&[p]).pop().unwrap_or_default();
    refine(&[p], std::slice::from_mut(&mut base));
    let mut gens: Vec<Permutation> = Vec::new();
    // Prefix partitions with 0..i individualised.
    let mut prefixes = vec![base.clone()];
    for i in 0..n {
        let mut next = individualise(&prefixes[i], i);
        refine(&[p], std::slice::from_mut(&mut next));
        prefixes.push(next);
    }
    for i in (0..n).rev() {
        let fixed = &prefixes[i];
        let mut orbit = orbit_of(&gens, i);
        for c in 0..n {
            if fixed[c] != fixed[i] || orbit.contains(&c) {
                continue;
            }
            let cp = individualise(fixed, i);
            let cq = individualise(fixed, c);
            if let Some(map) = iso_search(p, p, cp, cq) {
                gens.push(Permutation::from_images(map));
                orbit = orbit_of(&gens, i);
            }
        }
    }
    gens.sort();
    gens
}

/// The full automorphism group of `p`.
pub fn automorphisms(p: &ColoredPoset) -> PermGroup {
    PermGroup::from_generators(p.len(), automorphism_generators(p))
}

/// Every automorphism, if the carrier is within `limits.carrier` and the
/// group within `limits.elements`.
pub fn automorphism_list(p: &ColoredPoset, limits: Limits) -> Result<Vec<Permutation>> {
    if p.len() > limits.carrier {
        return Err(Error::TooLarge(format!(
            "{} elements exceeds the materialisation bound {}",
            p.len(),
            limits.carrier
        )));
    }
    automorphisms(p).elements(limits.elements)
}

/// Whether `f` preserves the order and every colour class of `p`.
pub fn is_automorphism(p: &ColoredPoset, f: &Permutation) -> bool {
    f.degree() == p.len() && is_isomorphism(p, p, f.images())
}

/// Orbits of `k`-tuples under `Aut(p)`, as lists of index tuples.
pub fn orbits(p: &ColoredPoset, k: usize, limits: Limits) -> Result<Vec<Vec<Vec<usize>>>> {
    if k == 0 {
        return Err(Error::InvalidSize(0));
    }
    if p.len() > limits.carrier {
        return Err(Error::TooLarge(format!(
            "{} elements exceeds the materialisation bound {}",
            p.len(),
            limits.carrier
        )));
    }
    Ok(automorphisms(p).tuple_orbits(k).orbits())
}

/// Elements fixed by every automorphism.
pub fn fixed_points(p: &ColoredPoset) -> ElemSet {
    automorphisms(p).fixed_points()
}

pub fn support(f: &Permutation) -> ElemSet {
    f.support()
}

/// Equality of two groups as permutation sets on the same carrier.
pub fn groups_equal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    g.equals(h)
}

/// `Aut(p)` extended to the completion of `p`.
pub fn completion_automorphisms(view: &CfpoView) -> PermGroup {
    let c = view.completion();
    let gens = automorphisms(view.poset())
        .generators()
        .iter()
        .map(|g| Permutation::from_images(c.extend_permutation(g.images())))
        .collect::<Vec<_>>();
    PermGroup::from_generators(c.completed.len(), gens)
}

// ---------------------------------------------------------------------------
// Canonical forms

/// An isomorphism invariant that determines the poset up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub size: usize,
    pub colors: Vec<String>,
    pub code: Vec<u8>,
}

fn encode(p: &ColoredPoset, names: &[String], labelling: &[usize]) -> Vec<u8> {
    let n = labelling.len();
    let mut code = Vec::with_capacity(n * n + n * names.len());
    for &x in labelling {
        for &y in labelling {
            code.push(u8::from(p.leq(x, y)));
        }
    }
    for name in names {
        for &x in labelling {
            code.push(u8::from(p.has_color(name, x)));
        }
    }
    code
}

struct CanonSearch<'a> {
    p: &'a ColoredPoset,
    names: Vec<String>,
    gens: Vec<Permutation>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn run(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) {
        refine(&[self.p], std::slice::from_mut(&mut cells));
        if is_discrete(&cells) {
            let mut labelling = vec![0; cells.len()];
            for (x, &c) in cells.iter().enumerate() {
                labelling[c] = x;
            }
            let code = encode(self.p, &self.names, &labelling);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, labelling));
            }
            return;
        }
        let Some(target) = target_cell(&cells) else {
            return;
        };
        // Children in one orbit of the prefix stabiliser give equal codes.
        let stab: Vec<Permutation> = self
            .gens
            .iter()
            .filter(|g| prefix.iter().all(|&v| g.apply(v) == v))
            .cloned()
            .collect();
        let mut done = BTreeSet::new();
        for x in (0..cells.len()).filter(|&x| cells[x] == target) {
            if done.contains(&x) {
                continue;
            }
            done.extend(orbit_of(&stab, x));
            prefix.push(x);
            self.run(individualise(&cells, x), prefix);
            prefix.pop();
        }
    }
}

/// The canonical form of `p` with a labelling realising it:
/// `labelling[i]` is the element placed at position `i`.
pub fn canonical_labelling(p: &ColoredPoset) -> (CanonicalForm, Vec<usize>) {
    let names = colour_names([p]);
    let mut search = CanonSearch {
        p,
        names: names.clone(),
        gens: automorphism_generators(p),
        best: None,
    };
    let start = initial_cells(&[p]).pop().unwrap_or_default();
    search.run(start, &mut Vec::new());
    let (code, labelling) = search.best.unwrap_or_default();
    (
        CanonicalForm {
            size: p.len(),
            colors: names,
            code,
        },
        labelling,
    )
}

pub fn canonical_form(p: &ColoredPoset) -> CanonicalForm {
    canonical_labelling(p).0
}

// ---------------------------------------------------------------------------
// Orbit criterion for tuples

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum HullName {
    Entry(usize),
    Corner(usize, usize, usize),
    Median(usize, usize, usize),
}

/// Named points spanning the tuple inside the completion forest: the
/// entries, the corners of the paths between entries, and the branch point
/// of every triple of entries in one component.
fn hull(view: &CfpoView, tuple: &[usize]) -> BTreeMap<HullName, usize> {
    let k = tuple.len();
    let mut out = BTreeMap::new();
    for (i, &a) in tuple.iter().enumerate() {
        out.insert(HullName::Entry(i), a);
    }
    let mut path_sets = BTreeMap::new();
    for i in 0..k {
        for j in i + 1..k {
            if let Some(path) = view.path(tuple[i], tuple[j]) {
                for (pos, &c) in path.corner_sequence.iter().enumerate() {
                    out.insert(HullName::Corner(i, j, pos), c);
                }
                path_sets.insert((i, j), path.element_set);
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let (Some(a), Some(b), Some(c)) = (
                    path_sets.get(&(i, j)),
                    path_sets.get(&(i, l)),
                    path_sets.get(&(j, l)),
                ) else {
                    continue;
                };
                let common: Vec<usize> = a
                    .iter()
                    .filter(|v| b.contains(v) && c.contains(v))
                    .copied()
                    .collect();
                if let [m] = common[..] {
                    out.insert(HullName::Median(i, j, l), m);
                }
            }
        }
    }
    out
}

/// Orbit criterion for tuples of a CFPO.
///
/// Builds the finite structure spanned by each tuple (entries, path corners
/// and branch points, all in the completion), requires the correspondence
/// forced by the names to be an isomorphism of coloured orders that keeps
/// virtual points virtual, and requires every adjacent pair of that
/// structure, and every single point, to match its image up to `Aut`.
pub fn same_orbit_criterion(p: &ColoredPoset, a: &[usize], b: &[usize]) -> Result<bool> {
    let view = CfpoView::new(p)?;
    let group = completion_automorphisms(&view);
    if a.len() != b.len() {
        return Ok(false);
    }
    let (ha, hb) = (tuple_hull(&view, a), tuple_hull(&view, b));
    Ok(same_orbit_in_view(&view, &group.tuple_orbits(2), &ha, &hb))
}

/// The named points spanning one tuple; see [`tuple_hull`].
#[derive(Clone, Debug)]
pub struct TupleHull {
    len: usize,
    points: BTreeMap<HullName, usize>,
}

pub fn tuple_hull(view: &CfpoView, tuple: &[usize]) -> TupleHull {
    TupleHull {
        len: tuple.len(),
        points: hull(view, tuple),
    }
}

/// [`same_orbit_criterion`] with the completion, its 2-orbits and both
/// hulls supplied.
pub fn same_orbit_in_view(
    view: &CfpoView,
    pair_orbits: &crate::perm::TupleOrbits,
    ha: &TupleHull,
    hb: &TupleHull,
) -> bool {
    if ha.len != hb.len || !ha.points.keys().eq(hb.points.keys()) {
        return false;
    }
    let mut f: BTreeMap<usize, usize> = BTreeMap::new();
    for (name, &x) in &ha.points {
        let y = hb.points[name];
        if *f.entry(x).or_insert(y) != y {
            return false;
        }
    }
    // Injective on points.
    if f.values().collect::<BTreeSet<_>>().len() != f.len() {
        return false;
    }
    let c = view.completed();
    let points: Vec<usize> = f.keys().copied().collect();
    for &x in &points {
        if view.is_virtual(x) != view.is_virtual(f[&x])
            || c.color_signature(x) != c.color_signature(f[&x])
            || !pair_orbits.same_orbit(&[x, x], &[f[&x], f[&x]])
        {
            return false;
        }
        for &y in &points {
            if c.leq(x, y) != c.leq(f[&x], f[&y]) {
                return false;
            }
        }
    }
    for &x in &points {
        for &y in &points {
            if x == y || !c.lt(x, y) {
                continue;
            }
            let between = points.iter().any(|&z| c.lt(x, z) && c.lt(z, y));
            if !between && !pair_orbits.same_orbit(&[x, y], &[f[&x], f[&y]]) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Wreath products

/// An element `(h, η)` of `G ≀_S H`; `base[s]` is `η(s)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WreathElement {
    pub top: Permutation,
    pub base: Vec<Permutation>,
}

impl WreathElement {
    pub fn identity(g_degree: usize, s: usize) -> Self {
        WreathElement {
            top: Permutation::identity(s),
            base: vec![Permutation::identity(g_degree); s],
        }
    }

    /// `(h0, η0)(h1, η1) = (h0 h1, x ↦ η0(h1⁻¹ x) η1(x))`, with products in
    /// `G` and `H` read left to right (the left factor acts first).
    pub fn multiply(&self, other: &WreathElement) -> WreathElement {
        let h1_inv = other.top.inverse();
        WreathElement {
            top: other.top.compose(&self.top),
            base: (0..other.base.len())
                .map(|x| other.base[x].compose(&self.base[h1_inv.apply(x)]))
                .collect(),
        }
    }

    /// The action `(s, m) ↦ (h(s), η(h(s))(m))` on `S × carrier(G)`, with
    /// `(s, m)` numbered `s * |carrier(G)| + m`.
    pub fn action(&self) -> Permutation {
        let m = self.base.first().map_or(0, Permutation::degree);
        let s = self.top.degree();
        let mut images = vec![0; s * m];
        for si in 0..s {
            let hs = self.top.apply(si);
            for mi in 0..m {
                images[si * m + mi] = hs * m + self.base[hs].apply(mi);
            }
        }
        Permutation::from_images(images)
    }
}

/// `G ≀_S H` as a permutation group on `S × carrier(G)`.
pub fn wreath_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let (m, s) = (g.degree(), h.degree());
    let mut gens = Vec::new();
    for top in h.generators() {
        let mut e = WreathElement::identity(m, s);
        e.top = top.clone();
        gens.push(e.action());
    }
    for si in 0..s {
        for base in g.generators() {
            let mut e = WreathElement::identity(m, s);
            e.base[si] = base.clone();
            gens.push(e.action());
        }
    }
    PermGroup::from_generators(s * m, gens)
}

/// Every element of `G ≀_S H`, built from the abstract multiplication.
pub fn wreath_elements(g: &PermGroup, h: &PermGroup, bound: u64) -> Result<Vec<WreathElement>> {
    let order = wreath_product(g, h).order();
    if order > bound.into() {
        return Err(Error::TooLarge(format!("wreath product order {order} exceeds {bound}")));
    }
    let gs = g.elements(bound)?;
    let hs = h.elements(bound)?;
    let s = h.degree();
    let mut bases: Vec<Vec<Permutation>> = vec![Vec::new()];
    for _ in 0..s {
        bases = bases
            .into_iter()
            .flat_map(|prefix| {
                gs.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for top in &hs {
        for base in &bases {
            out.push(WreathElement {
                top: top.clone(),
                base: base.clone(),
            });
        }
    }
    Ok(out)
}

/// Each element of `r` replaced by a copy of `q`: `(r, x) ≤ (r', x')` iff
/// `r < r'`, or `r = r'` and `x ≤ x'`. Element `(r, x)` has index
/// `r * |q| + x`.
pub fn replacement_poset(q: &ColoredPoset, r: &ColoredPoset) -> ColoredPoset {
    let m = q.len();
    let ids: Vec<String> = (0..r.len())
        .flat_map(|ri| (0..m).map(move |qi| (ri, qi)))
        .map(|(ri, qi)| format!("{}.{}", r.id(ri), q.id(qi)))
        .collect();
    let mut pairs = Vec::new();
    for ri in 0..r.len() {
        for rj in 0..r.len() {
            for qi in 0..m {
                for qj in 0..m {
                    let below = r.lt(ri, rj) || (ri == rj && q.lt(qi, qj));
                    if below {
                        pairs.push((ri * m + qi, rj * m + qj));
                    }
                }
            }
        }
    }
    ColoredPoset::from_indices(ids, &pairs, &BTreeMap::new()).expect("lexicographic sum is a partial order")
}

// ---------------------------------------------------------------------------
// Trees

/// Number of upper covers.
pub fn ramification(t: &ColoredPoset, x: usize) -> usize {
    t.covers().upper_covers[x].len()
}

/// Finite-height regularity of a tree: all maximal chains of equal length,
/// ramification at least 2 below the top, and equal ramification at equal
/// depth.
pub fn is_fh_regular(t: &ColoredPoset) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let cg = t.covers();
    let depth = |x: usize| t.down_bits(x).count_ones(..);
    let maximal: Vec<usize> = (0..t.len()).filter(|&x| cg.upper_covers[x].is_empty()).collect();
    let heights: BTreeSet<usize> = maximal.iter().map(|&x| depth(x)).collect();
    if heights.len() > 1 {
        return Ok(false);
    }
    let mut by_depth: BTreeMap<usize, usize> = BTreeMap::new();
    for x in 0..t.len() {
        let r = cg.upper_covers[x].len();
        if r == 1 {
            return Ok(false);
        }
        if *by_depth.entry(depth(x)).or_insert(r) != r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `Aut(t)` is transitive on maximal elements.
pub fn transitive_on_maximal(t: &ColoredPoset) -> bool {
    let cg = t.covers();
    let maximal: BTreeSet<usize> = (0..t.len()).filter(|&x| cg.upper_covers[x].is_empty()).collect();
    let Some(&first) = maximal.first() else {
        return true;
    };
    let g = automorphisms(t);
    orbit_of(g.generators(), first).is_superset(&maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn ids(p: &ColoredPoset, s: &ElemSet) -> Vec<String> {
        s.iter().map(|&x| p.id(x).to_owned()).collect()
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&antichain(2)).order_u64(), Some(2));
        assert_eq!(automorphisms(&alt(5)).order_u64(), Some(2));
        assert_eq!(automorphisms(&bowtie()).order_u64(), Some(4));
        assert_eq!(automorphisms(&chain(4)).order_u64(), Some(1));
        assert_eq!(automorphisms(&antichain(6)).order_u64(), Some(720));
        assert_eq!(automorphisms(&binary_tree_7()).order_u64(), Some(8));
    }

    #[test]
    fn colours_restrict_automorphisms() {
        let p = bowtie().with_color("red", &[0].into_iter().collect());
        assert_eq!(automorphisms(&p).order_u64(), Some(2));
    }

    #[test]
    fn generators_are_automorphisms() {
        for p in [bowtie(), hbar(), bip22(), alt(6), binary_tree_7(), antichain(4)] {
            for g in automorphisms(&p).generators() {
                assert!(is_automorphism(&p, g));
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let l = Limits::default();
        assert_eq!(orbits(&antichain(2), 1, l).unwrap(), vec![vec![vec![0], vec![1]]]);
        let a5 = orbits(&alt(5), 1, l).unwrap();
        assert_eq!(a5, vec![vec![vec![0], vec![4]], vec![vec![1], vec![3]], vec![vec![2]]]);
        assert_eq!(orbits(&chain(2), 2, l).unwrap().len(), 4);
        let small = Limits { carrier: 3, ..l };
        assert!(matches!(orbits(&alt(5), 1, small), Err(Error::TooLarge(_))));
    }

    #[test]
    fn fixed_point_examples() {
        let b = bowtie();
        assert_eq!(ids(&b, &fixed_points(&b)), vec!["x"]);
        assert_eq!(fixed_points(&alt(5)), [2].into_iter().collect());
        assert!(fixed_points(&antichain(2)).is_empty());
    }

    #[test]
    fn support_of_flip() {
        let g = automorphisms(&alt(5));
        let flip = &g.generators()[0];
        assert_eq!(support(flip), [0, 1, 3, 4].into_iter().collect());
    }

    #[test]
    fn criterion_examples() {
        let a5 = alt(5);
        assert!(same_orbit_criterion(&a5, &[0, 1], &[4, 3]).unwrap());
        assert!(!same_orbit_criterion(&a5, &[0], &[2]).unwrap());
        assert!(same_orbit_criterion(&chain(2), &[0, 1], &[0, 1]).unwrap());
        assert!(matches!(same_orbit_criterion(&diamond(), &[0], &[0]), Err(Error::NotACFPO(_))));
    }

    #[test]
    fn isomorphism_and_canonical_forms() {
        let p = bowtie();
        let q = ColoredPoset::build(
            &["u", "v", "w", "s", "t"],
            &[("w", "u"), ("w", "v"), ("s", "w"), ("t", "w")],
            &BTreeMap::new(),
        )
        .unwrap();
        let m = find_isomorphism(&p, &q).unwrap();
        assert!(is_isomorphism(&p, &q, &m));
        assert_eq!(canonical_form(&p), canonical_form(&q));
        assert_ne!(canonical_form(&p), canonical_form(&hbar()));
        assert!(!are_isomorphic(&alt(4), &chain(4)));
    }

    #[test]
    fn wreath_orders() {
        let s2 = PermGroup::symmetric(2);
        assert_eq!(wreath_product(&s2, &s2).order_u64(), Some(8));
        let triv = PermGroup::trivial(2);
        let w = wreath_product(&triv, &s2);
        assert_eq!((w.degree(), w.order_u64()), (4, Some(2)));
    }

    #[test]
    fn wreath_multiplication_matches_action() {
        let g = PermGroup::symmetric(3);
        let h = PermGroup::symmetric(2);
        let els = wreath_elements(&g, &h, 1000).unwrap();
        assert_eq!(els.len(), 72);
        for a in els.iter().step_by(5) {
            for b in els.iter().step_by(7) {
                // The left factor acts first.
                assert_eq!(a.multiply(b).action(), b.action().compose(&a.action()));
            }
        }
    }

    #[test]
    fn fh_regular_examples() {
        assert!(is_fh_regular(&binary_tree_7()).unwrap());
        assert!(!is_fh_regular(&chain(2)).unwrap());
        let v_plus = ColoredPoset::build(
            &["a1", "a0", "a2", "e"],
            &[("a1", "a0"), ("a1", "a2"), ("a0", "e")],
            &BTreeMap::new(),
        )
        .unwrap();
        assert!(!is_fh_regular(&v_plus).unwrap());
        assert_eq!(is_fh_regular(&lambda()), Err(Error::NotATree));
    }
}
