//! Trees with the same automorphism group as a finite CFPO.
//!
//! The basic construction plants a point `r` fixed by every automorphism at
//! the bottom and orders every other point by the unique path from `r`:
//! `s ≤ t` iff `s` lies on the path from `r` to `t`. A unary predicate `U`
//! records whether a point was reached by going up or down, which is enough
//! to read the original order back.
//!
//! Paths are taken in the bounded-cut completion, and its extra points stay
//! in the tree (coloured `VIRTUAL`). Without them the tree on the original
//! carrier alone can acquire automorphisms the poset does not have.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::alt::{alt_embeddings, center_midpoints, classify};
use crate::aut::{automorphisms, canonical_labelling, completion_automorphisms, find_isomorphism};
use crate::completion::VIRTUAL;
use crate::error::{Error, Result};
use crate::paths::CfpoView;
use crate::perm::PermGroup;
use crate::poset::{fresh_id_avoiding, ColoredPoset, ElemSet};

pub const U: &str = "U";
pub const ROOT: &str = "ROOT";
pub const CENTER: &str = "CENTER";
pub const FIX: &str = "FIX";
pub const ADJ: &str = "ADJ";

/// Colours added by the constructions, removed again on interpretation.
const SCAFFOLDING: &[&str] = &[U, ROOT, VIRTUAL, CENTER, FIX];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    FixedPoint,
    Cfpo3,
    OddCenter,
    EvenAdjoin,
    Disconnected,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::FixedPoint => "fixed_point",
            Provenance::Cfpo3 => "cfpo3",
            Provenance::OddCenter => "odd_center",
            Provenance::EvenAdjoin => "even_adjoin",
            Provenance::Disconnected => "disconnected",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A tree built from a CFPO. The first `original_len` tree elements are the
/// original elements, in their original order.
#[derive(Clone, Debug)]
pub struct TreeifyResult {
    pub tree: ColoredPoset,
    pub u: ElemSet,
    pub provenance: Provenance,
    pub root: usize,
    pub original_len: usize,
}

impl TreeifyResult {
    /// Points of the tree that are not original elements.
    pub fn added(&self) -> ElemSet {
        (self.original_len..self.tree.len()).collect()
    }
}

/// The layers `X_0, Y_0, X_1, Y_1, ...` around a basepoint. Indices refer
/// to the completed carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XYPartition {
    pub x_layers: Vec<ElemSet>,
    pub y_layers: Vec<ElemSet>,
    pub root: usize,
}

impl XYPartition {
    /// `X`, the union of the `X_i`: the points where `U` holds.
    pub fn x_union(&self) -> ElemSet {
        self.x_layers.iter().flatten().copied().collect()
    }

    pub fn y_union(&self) -> ElemSet {
        self.y_layers.iter().flatten().copied().collect()
    }
}

fn layers(c: &ColoredPoset, component: &ElemSet, r: usize) -> XYPartition {
    let mut seen = ElemSet::new();
    let x0: ElemSet = component.iter().copied().filter(|&t| c.leq(r, t)).collect();
    let y0: ElemSet = component.iter().copied().filter(|&t| c.lt(t, r)).collect();
    seen.extend(&x0);
    seen.extend(&y0);
    let mut x_layers = vec![x0];
    let mut y_layers = vec![y0];
    loop {
        let (px, py) = (x_layers.last().unwrap(), y_layers.last().unwrap());
        let xn: ElemSet = component
            .iter()
            .copied()
            .filter(|&t| !seen.contains(&t) && py.iter().any(|&y| c.leq(y, t)))
            .collect();
        let yn: ElemSet = component
            .iter()
            .copied()
            .filter(|&t| !seen.contains(&t) && px.iter().any(|&x| c.lt(t, x)))
            .collect();
        if xn.is_empty() && yn.is_empty() {
            break;
        }
        seen.extend(&xn);
        seen.extend(&yn);
        x_layers.push(xn);
        y_layers.push(yn);
    }
    while x_layers.len() > 1 && x_layers.last().is_some_and(BTreeSet::is_empty) && y_layers.last().is_some_and(BTreeSet::is_empty) {
        x_layers.pop();
        y_layers.pop();
    }
    XYPartition {
        x_layers,
        y_layers,
        root: r,
    }
}

fn connected_view(m: &ColoredPoset) -> Result<CfpoView> {
    let view = CfpoView::new(m)?;
    if !view.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(view)
}

/// The layer partition of a connected CFPO around `r`, an index into the
/// completed carrier (originals keep their indices).
pub fn partition_xy(m: &ColoredPoset, r: usize) -> Result<XYPartition> {
    let view = connected_view(m)?;
    let c = view.completed();
    if r >= c.len() {
        return Err(Error::UnknownElement(format!("#{r}")));
    }
    Ok(layers(c, &(0..c.len()).collect(), r))
}

/// Fixed points of the completion under `Aut(m)`, originals first.
pub fn completion_fixed_points(view: &CfpoView) -> ElemSet {
    completion_automorphisms(view).fixed_points()
}

/// The lowest original fixed point, or else the lowest fixed point of the
/// completion.
fn default_root(view: &CfpoView) -> Result<usize> {
    completion_fixed_points(view).first().copied().ok_or(Error::NoFixedPoint)
}

/// Builds `T(M)` on the completed carrier of a connected CFPO.
fn tree_at(view: &CfpoView, r: usize) -> (ColoredPoset, ElemSet) {
    let marked = view.completion().marked();
    let all: ElemSet = (0..marked.len()).collect();
    let part = layers(&marked, &all, r);
    let mut pairs = Vec::new();
    for t in 0..marked.len() {
        let walk = view.walk(r, t).expect("connected");
        for &s in &walk {
            if s != t {
                pairs.push((s, t));
            }
        }
    }
    let u = part.x_union();
    let mut colors: BTreeMap<String, ElemSet> = marked.colors().map(|(k, v)| (k.to_owned(), v)).collect();
    colors.insert(U.to_owned(), u.clone());
    let tree = ColoredPoset::from_indices(marked.ids().to_vec(), &pairs, &colors)
        .expect("path order from a fixed root is a partial order");
    (tree, u)
}

/// Whether `Aut(tree)`, restricted to the first `n` points, equals `Aut(m)`,
/// and the restriction loses nothing.
pub fn aut_preserved(m: &ColoredPoset, tree: &ColoredPoset) -> Result<bool> {
    let n = m.len();
    let g = automorphisms(tree);
    let originals: ElemSet = (0..n).collect();
    if !g.stabilises(&originals) {
        return Ok(false);
    }
    let restricted = g.restrict(&originals)?;
    Ok(restricted.order() == g.order() && restricted.equals(&automorphisms(m))?)
}

fn verified(m: &ColoredPoset, result: TreeifyResult) -> Result<TreeifyResult> {
    if aut_preserved(m, &result.tree)? {
        Ok(result)
    } else {
        Err(Error::VerificationFailed(format!(
            "automorphism groups differ after the {} construction",
            result.provenance
        )))
    }
}

fn fixed_point_unverified(m: &ColoredPoset, r: usize) -> Result<TreeifyResult> {
    let view = connected_view(m)?;
    if r >= view.completed().len() {
        return Err(Error::UnknownElement(format!("#{r}")));
    }
    if !completion_fixed_points(&view).contains(&r) {
        return Err(Error::NotAFixedPoint(view.completed().id(r).to_owned()));
    }
    let (tree, u) = tree_at(&view, r);
    Ok(TreeifyResult {
        tree,
        u,
        provenance: Provenance::FixedPoint,
        root: r,
        original_len: m.len(),
    })
}

/// `T(M)` rooted at `r`, an index into the completed carrier that every
/// automorphism fixes.
pub fn treeify_fixed_point(m: &ColoredPoset, r: usize) -> Result<TreeifyResult> {
    let result = fixed_point_unverified(m, r)?;
    verified(m, result)
}

/// [`treeify_fixed_point`] with the root given by id; completion points are
/// named as in the completion.
pub fn treeify_fixed_point_by_id(m: &ColoredPoset, root: &str) -> Result<TreeifyResult> {
    let view = connected_view(m)?;
    let r = view.completed().index_of(root)?;
    treeify_fixed_point(m, r)
}

/// Reads the original order back from a tree with `U`.
///
/// `x ≤ y` holds iff one of:
/// - `x ≤_T y` and `U` holds on every point of `(x, y]`;
/// - `y ≤_T x` and `U` fails on every point of `(y, x]`;
/// - `x`, `y` are incomparable in `T` with meet `z`, `U` holds on all of
///   `(z, y]` and fails on all of `(z, x]`.
///
/// Points coloured `VIRTUAL` are dropped from the result, as is the `ROOT`
/// point when `exclude_root` is set. Construction colours are removed.
pub fn interpret_back(t: &ColoredPoset, exclude_root: bool) -> Result<ColoredPoset> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let u = t.color_class(U).unwrap_or_default();
    let interval = |lo: usize, hi: usize| -> Vec<usize> {
        (0..t.len())
            .filter(|&z| t.lt(lo, z) && t.leq(z, hi))
            .collect()
    };
    let all_u = |lo: usize, hi: usize| interval(lo, hi).iter().all(|z| u.contains(z));
    let none_u = |lo: usize, hi: usize| interval(lo, hi).iter().all(|z| !u.contains(z));
    let leq = |x: usize, y: usize| -> bool {
        if t.leq(x, y) {
            return all_u(x, y);
        }
        if t.leq(y, x) {
            return none_u(y, x);
        }
        match t.meet(x, y) {
            Some(z) => all_u(z, y) && none_u(z, x),
            None => false,
        }
    };
    let virtuals = t.color_class(VIRTUAL).unwrap_or_default();
    let roots = if exclude_root {
        t.color_class(ROOT).unwrap_or_default()
    } else {
        ElemSet::new()
    };
    let keep: Vec<usize> = (0..t.len())
        .filter(|x| !virtuals.contains(x) && !roots.contains(x))
        .collect();
    let mut pairs = Vec::new();
    for (i, &x) in keep.iter().enumerate() {
        for (j, &y) in keep.iter().enumerate() {
            if i != j && leq(x, y) {
                pairs.push((i, j));
            }
        }
    }
    let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let colors: BTreeMap<String, ElemSet> = t
        .colors()
        .filter(|(k, _)| !SCAFFOLDING.contains(k))
        .map(|(k, v)| (k.to_owned(), v.iter().filter_map(|x| pos.get(x).copied()).collect()))
        .collect();
    let ids = keep.iter().map(|&x| t.id(x).to_owned()).collect();
    ColoredPoset::from_indices(ids, &pairs, &colors)
}

// ---------------------------------------------------------------------------
// Fixed points from invariant sets

fn check_invariant(group: &PermGroup, set: &ElemSet) -> Result<()> {
    if group.stabilises(set) {
        Ok(())
    } else {
        Err(Error::NotInvariant)
    }
}

fn check_path_closed(view: &CfpoView, set: &ElemSet) -> Result<()> {
    for &x in set {
        for &y in set {
            let path = view.path(x, y).ok_or(Error::NotConnectedSubset)?;
            if !path.original_members().is_subset(set) {
                return Err(Error::NotConnectedSubset);
            }
        }
    }
    Ok(())
}

/// Walks towards `target` through `set`: starts at the least member and
/// replaces the current point by the branch point of it, the least member
/// not yet behind it, and `target`, until every member is behind it.
fn funnel(view: &CfpoView, set: &ElemSet, target: usize) -> usize {
    let behind = |c: usize, x: usize| view.walk(x, target).expect("connected").contains(&c);
    let mut c = *set.first().expect("nonempty");
    loop {
        let Some(&a) = set.iter().find(|&&x| !behind(c, x)) else {
            return c;
        };
        let via_c = view.path(c, target).expect("connected").element_set;
        let via_a = view.path(a, target).expect("connected").element_set;
        let shared: ElemSet = via_c.intersection(&via_a).copied().collect();
        // The shared part is the path from the branch point to the target;
        // the branch point is its member farthest from the target.
        c = *shared
            .iter()
            .max_by_key(|&&v| (view.walk(v, target).expect("connected").len(), std::cmp::Reverse(v)))
            .expect("target is shared");
    }
}

/// Two points fixed by every automorphism spanning `⟨A, B⟩`, for disjoint,
/// path-closed, invariant sets `A` and `B`. Either point may be a point of
/// the completion.
pub fn find_path_fixed_points(m: &ColoredPoset, a: &ElemSet, b: &ElemSet) -> Result<(usize, usize)> {
    let view = connected_view(m)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if a.iter().any(|x| *x >= m.len()) || b.iter().any(|x| *x >= m.len()) {
        return Err(Error::UnknownElement("index out of range".into()));
    }
    if !a.is_disjoint(b) {
        return Err(Error::Disjointness);
    }
    check_path_closed(&view, a)?;
    check_path_closed(&view, b)?;
    let group = automorphisms(m);
    check_invariant(&group, a)?;
    check_invariant(&group, b)?;
    let b0 = *b.first().expect("nonempty");
    let c = funnel(&view, a, b0);
    let d = funnel(&view, b, c);
    Ok((c, d))
}

// ---------------------------------------------------------------------------
// CFPO_3

/// `(upper, middle, lower)` for a connected CFPO of class at most 3: the
/// points above an upward branching, the points below a downward branching
/// (a point doing both goes up), and the chain between. Branching is read in
/// the completion.
pub fn decompose_cfpo3(m: &ColoredPoset) -> Result<(ElemSet, ElemSet, ElemSet)> {
    let view = connected_view(m)?;
    let class = classify(m)?.n;
    if class > 3 {
        return Err(Error::NotCFPO3(class));
    }
    let c = view.completed();
    let cg = view.covers();
    let n = m.len();
    let mut upper = ElemSet::new();
    let mut lower = ElemSet::new();
    for v in 0..c.len() {
        if cg.upper_covers[v].len() >= 2 {
            upper.extend(c.up_bits(v).ones());
        }
        if cg.lower_covers[v].len() >= 2 {
            lower.extend(c.down_bits(v).ones());
        }
    }
    let upper: ElemSet = upper.into_iter().filter(|&x| x < n).collect();
    let lower: ElemSet = lower.into_iter().filter(|&x| x < n && !upper.contains(&x)).collect();
    if upper.is_empty() && lower.is_empty() {
        // A chain branches nowhere.
        return Ok(((0..n).collect(), ElemSet::new(), ElemSet::new()));
    }
    let middle = (0..n).filter(|x| !upper.contains(x) && !lower.contains(x)).collect();
    Ok((upper, middle, lower))
}

/// Tree for a connected CFPO of class at most 3, rooted at the default
/// fixed point.
pub fn treeify_cfpo3(m: &ColoredPoset) -> Result<TreeifyResult> {
    let view = connected_view(m)?;
    let class = classify(m)?.n;
    if class > 3 {
        return Err(Error::NotCFPO3(class));
    }
    let r = default_root(&view)?;
    let mut result = fixed_point_unverified(m, r)?;
    result.provenance = Provenance::Cfpo3;
    verified(m, result)
}

// ---------------------------------------------------------------------------
// Odd and even classes

/// Assembles a tree from pieces whose points are mapped into one carrier.
struct Assembly {
    ids: Vec<String>,
    pairs: Vec<(usize, usize)>,
    colors: BTreeMap<String, ElemSet>,
}

impl Assembly {
    fn with_originals(m: &ColoredPoset) -> Self {
        Assembly {
            ids: m.ids().to_vec(),
            pairs: Vec::new(),
            colors: m.colors().map(|(k, v)| (k.to_owned(), v)).collect(),
        }
    }

    fn add_point(&mut self, base: &str) -> usize {
        let id = fresh_id_avoiding(base, |s| self.ids.iter().any(|t| t == s));
        self.ids.push(id);
        self.ids.len() - 1
    }

    fn colour(&mut self, name: &str, x: usize) {
        self.colors.entry(name.to_owned()).or_default().insert(x);
    }

    fn finish(self) -> Result<ColoredPoset> {
        ColoredPoset::from_indices(self.ids, &self.pairs, &self.colors)
    }
}

/// Maps the points of a piece tree into an assembly. `originals[i]` is the
/// assembly index of the piece's `i`-th original point; extra points are
/// added fresh and coloured `VIRTUAL`.
fn place(asm: &mut Assembly, piece: &TreeifyResult, originals: &[usize]) -> Vec<usize> {
    let mut map: Vec<usize> = originals.to_vec();
    for x in piece.original_len..piece.tree.len() {
        let g = asm.add_point(piece.tree.id(x));
        if piece.tree.has_color(VIRTUAL, x) {
            asm.colour(VIRTUAL, g);
        }
        if piece.tree.has_color(ROOT, x) {
            asm.colour(ROOT, g);
        }
        map.push(g);
    }
    map
}

/// Tree for a connected CFPO of odd class. The midpoints of the longest
/// fences form an invariant core of class at most 3; the core becomes a
/// tree, and the branch hanging off each core point becomes a tree rooted
/// at that point and is grafted on above it.
pub fn treeify_odd(m: &ColoredPoset) -> Result<TreeifyResult> {
    let view = connected_view(m)?;
    let class = classify(m)?.n;
    if class % 2 == 0 {
        return Err(Error::NotOddClass(class));
    }
    if class <= 3 {
        return treeify_cfpo3(m);
    }
    let center = center_midpoints(m)?;
    let n = m.len();
    let marked = view.completion().marked();
    let total = marked.len();

    // Midpoints can be joined only through completion points; close the core
    // under walks so that it is connected and the branches are disjoint.
    let mut hull = center.clone();
    for &x in &center {
        for &y in &center {
            hull.extend(view.walk(x, y).expect("connected"));
        }
    }

    let mut branches: BTreeMap<usize, ElemSet> = BTreeMap::new();
    let mut covered = ElemSet::new();
    for &x in &hull {
        let b: ElemSet = (0..total)
            .filter(|&y| {
                view.walk(x, y)
                    .is_some_and(|seq| seq.iter().all(|v| *v == x || !hull.contains(v)))
            })
            .collect();
        if !covered.is_disjoint(&b) {
            return Err(Error::VerificationFailed("branches of the centre overlap".into()));
        }
        covered.extend(&b);
        branches.insert(x, b);
    }
    if covered.len() != total {
        return Err(Error::VerificationFailed("branches of the centre miss points".into()));
    }

    // Colour the core by the isomorphism type of the pointed branch.
    let mut types: BTreeMap<_, usize> = BTreeMap::new();
    let mut type_of: BTreeMap<usize, usize> = BTreeMap::new();
    for (&x, b) in &branches {
        let local = b.iter().position(|&y| y == x).expect("x in its branch");
        let pointed = marked.induced(b).with_color(FIX, &[local].into_iter().collect());
        let form = canonical_labelling(&pointed).0;
        let next = types.len();
        type_of.insert(x, *types.entry(form).or_insert(next));
    }
    let hull_list: Vec<usize> = hull.iter().copied().collect();
    let mut core = marked.induced(&hull);
    for t in 0..types.len() {
        let members = hull_list
            .iter()
            .enumerate()
            .filter(|(_, x)| type_of[x] == t)
            .map(|(i, _)| i)
            .collect();
        core = core.with_color(&format!("P_{t}"), &members);
    }
    let core_tree = treeify_unverified(&core)?;

    let mut asm = Assembly::with_originals(&marked);
    let core_map = place(&mut asm, &core_tree, &hull_list);
    for (lo, hi) in core_tree.tree.relation_pairs() {
        asm.pairs.push((core_map[lo], core_map[hi]));
    }
    for (i, &g) in core_map.iter().enumerate() {
        asm.colour(CENTER, g);
        if core_tree.u.contains(&i) {
            asm.colour(U, g);
        }
    }

    for (i, &x) in hull_list.iter().enumerate() {
        let b = &branches[&x];
        let list: Vec<usize> = b.iter().copied().collect();
        let local = list.iter().position(|&y| y == x).expect("x in its branch");
        let pointed = marked.induced(b).with_color(FIX, &[local].into_iter().collect());
        let piece = fixed_point_unverified(&pointed, local)?;
        let map = place(&mut asm, &piece, &list);
        for (lo, hi) in piece.tree.relation_pairs() {
            asm.pairs.push((map[lo], map[hi]));
        }
        let below: Vec<usize> = (0..core_tree.tree.len())
            .filter(|&s| core_tree.tree.leq(s, i))
            .map(|s| core_map[s])
            .collect();
        for t in (0..piece.tree.len()).filter(|&t| t != local) {
            for &s in &below {
                asm.pairs.push((s, map[t]));
            }
            if piece.u.contains(&t) {
                asm.colour(U, map[t]);
            }
        }
    }
    let tree = asm.finish()?;
    let u = tree.color_class(U).unwrap_or_default();
    let result = TreeifyResult {
        root: core_map[core_tree.root],
        tree,
        u,
        provenance: Provenance::OddCenter,
        original_len: n,
    };
    verified(m, result)
}

/// Adds a new point below (or above) every point in the orbit of `e`, where
/// `e` is an end of a longest fence in a CFPO of even class. New points are
/// coloured `ADJ` and follow the originals.
pub fn adjoin_orbit_points(m: &ColoredPoset, e: usize) -> Result<ColoredPoset> {
    if e >= m.len() {
        return Err(Error::UnknownElement(format!("#{e}")));
    }
    CfpoView::new(m)?;
    let class = classify(m)?.n;
    if class % 2 == 1 {
        return Err(Error::NotEvenClass(class));
    }
    let ends: Vec<bool> = alt_embeddings(m, class)
        .into_iter()
        .filter(|emb| emb.map[0] == e)
        .map(|emb| emb.reversed)
        .collect();
    // a_0 of Alt_2n is a maximal corner: adjoin below. Of Alt_2n*: above.
    let below = match (ends.contains(&false), ends.contains(&true)) {
        (true, _) => true,
        (false, true) => false,
        (false, false) => return Err(Error::NotAWitness(m.id(e).to_owned())),
    };
    let group = automorphisms(m);
    let orbit = group
        .point_orbits()
        .into_iter()
        .find(|o| o.contains(&e))
        .expect("orbits cover the carrier");
    let mut asm = Assembly::with_originals(m);
    asm.pairs = m.relation_pairs();
    for &o in &orbit {
        let z = asm.add_point(&format!("{}+", m.id(o)));
        asm.colour(ADJ, z);
        asm.pairs.push(if below { (z, o) } else { (o, z) });
    }
    asm.finish()
}

/// Even class: adjoin points at the least fence end, then build the tree of
/// the resulting odd-class poset.
pub fn treeify_even(m: &ColoredPoset) -> Result<TreeifyResult> {
    connected_view(m)?;
    let class = classify(m)?.n;
    if class % 2 == 1 {
        return Err(Error::NotEvenClass(class));
    }
    let e = alt_embeddings(m, class)
        .iter()
        .map(|emb| emb.map[0])
        .min()
        .ok_or_else(|| Error::NotAWitness("no fence of full length".into()))?;
    let widened = adjoin_orbit_points(m, e)?;
    let mut result = treeify_odd(&widened)?;
    // The adjoined points are extra points of the tree, after the originals;
    // they already follow the originals in the widened carrier.
    result.original_len = m.len();
    result.provenance = Provenance::EvenAdjoin;
    verified(m, result)
}

// ---------------------------------------------------------------------------
// Disconnected posets and the dispatcher

/// A root for a connected CFPO that does not depend on the labelling: the
/// original fixed point earliest in the canonical labelling, otherwise the
/// completion fixed point whose lower side comes first canonically.
fn canonical_root(view: &CfpoView) -> Result<usize> {
    let fixed = completion_fixed_points(view);
    let (_, labelling) = canonical_labelling(view.poset());
    let mut position = vec![0; labelling.len()];
    for (pos, &x) in labelling.iter().enumerate() {
        position[x] = pos;
    }
    let n = view.poset().len();
    if let Some(&r) = fixed.iter().filter(|&&x| x < n).min_by_key(|&&x| position[x]) {
        return Ok(r);
    }
    fixed
        .iter()
        .copied()
        .min_by_key(|&v| {
            let mut side: Vec<usize> = view.completion().lower_side(v).iter().map(|&x| position[x]).collect();
            side.sort_unstable();
            side
        })
        .ok_or(Error::NoFixedPoint)
}

fn treeify_disconnected_unverified(m: &ColoredPoset) -> Result<TreeifyResult> {
    let view = CfpoView::new(m)?;
    if view.is_connected() {
        let r = default_root(&view)?;
        return fixed_point_unverified(m, r);
    }
    let mut asm = Assembly::with_originals(m);
    let mut tops = Vec::new();
    for comp in view.components() {
        let list: Vec<usize> = comp.iter().copied().collect();
        let sub = m.induced(&comp);
        let sub_view = CfpoView::new(&sub)?;
        let r = canonical_root(&sub_view)?;
        let piece = fixed_point_unverified(&sub, r)?;
        let map = place(&mut asm, &piece, &list);
        for (lo, hi) in piece.tree.relation_pairs() {
            asm.pairs.push((map[lo], map[hi]));
        }
        for &x in &piece.u {
            asm.colour(U, map[x]);
        }
        tops.extend(map);
    }
    let root = asm.add_point("root");
    asm.colour(ROOT, root);
    for t in tops {
        asm.pairs.push((root, t));
    }
    let tree = asm.finish()?;
    let u = tree.color_class(U).unwrap_or_default();
    Ok(TreeifyResult {
        tree,
        u,
        provenance: Provenance::Disconnected,
        root,
        original_len: m.len(),
    })
}

/// One tree for a CFPO with several components: each component becomes a
/// tree at a canonically chosen fixed point, and a fresh `ROOT` point is put
/// below all of them. A connected input gets no extra root.
pub fn treeify_disconnected(m: &ColoredPoset) -> Result<TreeifyResult> {
    let result = treeify_disconnected_unverified(m)?;
    verified(m, result)
}

fn treeify_unverified(m: &ColoredPoset) -> Result<TreeifyResult> {
    if m.is_empty() {
        return Err(Error::EmptyPoset);
    }
    treeify_disconnected_unverified(m)
}

/// Chooses a construction and checks that it preserves the automorphism
/// group.
pub fn treeify(m: &ColoredPoset) -> Result<TreeifyResult> {
    let result = treeify_unverified(m)?;
    verified(m, result)
}

/// Isomorphic components receive roots that correspond under some
/// isomorphism; exposed for testing.
pub fn component_roots(m: &ColoredPoset) -> Result<Vec<(ElemSet, usize)>> {
    let view = CfpoView::new(m)?;
    view.components()
        .into_iter()
        .map(|comp| {
            let sub = m.induced(&comp);
            let r = canonical_root(&CfpoView::new(&sub)?)?;
            Ok((comp, r))
        })
        .collect()
}

/// Whether two pointed posets are isomorphic by a map sending `r` to `s`.
pub fn pointed_isomorphic(p: &ColoredPoset, r: usize, q: &ColoredPoset, s: usize) -> bool {
    let pp = p.with_color(FIX, &[r].into_iter().collect());
    let qq = q.with_color(FIX, &[s].into_iter().collect());
    find_isomorphism(&pp, &qq).is_some()
}
