//! Finite coloured partial orders.
//!
//! Elements are addressed by their position in the declared element list;
//! that order is the deterministic tie-break used by every routine in the
//! crate.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of element indices.
pub type ElemSet = BTreeSet<usize>;

/// Colour names minted by the tree constructions. User input may not use them.
pub const RESERVED_COLORS: &[&str] = &["U", "ROOT", "VIRTUAL", "CENTER", "FIX", "ADJ"];

pub fn is_reserved_color(name: &str) -> bool {
    if RESERVED_COLORS.contains(&name) {
        return true;
    }
    match name.strip_prefix("P_") {
        Some(rest) => !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()),
        None => false,
    }
}

/// A finite partial order with named unary colour predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPoset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[x]` holds every `y` with `x <= y`.
    up: Vec<FixedBitSet>,
    /// `down[x]` holds every `y` with `y <= x`.
    down: Vec<FixedBitSet>,
    colors: BTreeMap<String, FixedBitSet>,
}

/// The Hasse diagram of a poset, read as an undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverGraph {
    /// `(lower, upper)` pairs, sorted.
    pub edges: Vec<(usize, usize)>,
    pub upper_covers: Vec<Vec<usize>>,
    pub lower_covers: Vec<Vec<usize>>,
}

impl CoverGraph {
    pub fn neighbours(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.lower_covers[x]
            .iter()
            .chain(self.upper_covers[x].iter())
            .copied()
    }

    pub fn degree(&self, x: usize) -> usize {
        self.lower_covers[x].len() + self.upper_covers[x].len()
    }
}

impl ColoredPoset {
    /// Builds a poset from element ids, generating pairs `(x, y)` meaning
    /// `x <= y`, and colour classes. Reserved colour names are rejected.
    pub fn build<S: AsRef<str>>(
        elements: &[S],
        relation: &[(S, S)],
        colors: &BTreeMap<String, Vec<String>>,
    ) -> Result<Self> {
        if let Some(name) = colors.keys().find(|c| is_reserved_color(c)) {
            return Err(Error::ReservedColor(name.clone()));
        }
        Self::build_with_reserved(elements, relation, colors)
    }

    /// As [`ColoredPoset::build`], but reserved colour names are allowed.
    /// Used when reading back the output of a tree construction.
    pub fn build_with_reserved<S: AsRef<str>>(
        elements: &[S],
        relation: &[(S, S)],
        colors: &BTreeMap<String, Vec<String>>,
    ) -> Result<Self> {
        let ids: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_ids(&ids)?;
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_owned()))
        };
        let mut pairs = Vec::with_capacity(relation.len());
        for (x, y) in relation {
            pairs.push((lookup(x.as_ref())?, lookup(y.as_ref())?));
        }
        let mut color_sets = BTreeMap::new();
        for (name, members) in colors {
            let mut set = ElemSet::new();
            for m in members {
                set.insert(lookup(m)?);
            }
            color_sets.insert(name.clone(), set);
        }
        Self::from_indices(ids, &pairs, &color_sets)
    }

    /// Builds from index pairs. Closure is applied; reserved colours are allowed.
    pub fn from_indices(
        ids: Vec<String>,
        relation: &[(usize, usize)],
        colors: &BTreeMap<String, ElemSet>,
    ) -> Result<Self> {
        let index = index_ids(&ids)?;
        let n = ids.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            row.insert(x);
        }
        for &(x, y) in relation {
            if x >= n || y >= n {
                return Err(Error::UnknownElement(format!("#{}", x.max(y))));
            }
            up[x].insert(y);
        }
        // Warshall closure on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for x in 0..n {
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleInOrder(ids[x].clone(), ids[y].clone()));
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in up[x].ones() {
                down[y].insert(x);
            }
        }
        let mut color_bits = BTreeMap::new();
        for (name, members) in colors {
            let mut bits = FixedBitSet::with_capacity(n);
            for &m in members {
                if m >= n {
                    return Err(Error::UnknownElement(format!("#{m}")));
                }
                bits.insert(m);
            }
            color_bits.insert(name.clone(), bits);
        }
        Ok(ColoredPoset {
            ids,
            index,
            up,
            down,
            colors: color_bits,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, x: usize) -> &str {
        &self.ids[x]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_owned()))
    }

    pub fn contains_id(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up[x].contains(y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn up_bits(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_bits(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// `(↓x, ↑x)`, both containing `x`.
    pub fn principal_sets(&self, x: usize) -> (ElemSet, ElemSet) {
        (self.down[x].ones().collect(), self.up[x].ones().collect())
    }

    pub fn principal_sets_by_id(&self, id: &str) -> Result<(ElemSet, ElemSet)> {
        Ok(self.principal_sets(self.index_of(id)?))
    }

    pub fn colors(&self) -> impl Iterator<Item = (&str, ElemSet)> + '_ {
        self.colors
            .iter()
            .map(|(k, v)| (k.as_str(), v.ones().collect()))
    }

    pub fn color_names(&self) -> impl Iterator<Item = &str> + '_ {
        self.colors.keys().map(String::as_str)
    }

    pub fn color_class(&self, name: &str) -> Option<ElemSet> {
        self.colors.get(name).map(|b| b.ones().collect())
    }

    pub fn has_color(&self, name: &str, x: usize) -> bool {
        self.colors.get(name).is_some_and(|b| b.contains(x))
    }

    /// Names of the colours `x` carries, in name order.
    pub fn color_signature(&self, x: usize) -> Vec<&str> {
        self.colors
            .iter()
            .filter(|(_, b)| b.contains(x))
            .map(|(k, _)| k.as_str())
            .collect()
    }


    pub fn covers(&self) -> CoverGraph {
        let n = self.len();
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for x in 0..n {
            for y in self.up[x].ones() {
                if y == x {
                    continue;
                }
                let between = self.up[x]
                    .ones()
                    .any(|z| z != x && z != y && self.up[z].contains(y));
                if !between {
                    edges.push((x, y));
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        edges.sort_unstable();
        CoverGraph {
            edges,
            upper_covers,
            lower_covers,
        }
    }

    /// Greatest common lower bound of `x` and `y`, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut common = self.down[x].clone();
        common.intersect_with(&self.down[y]);
        common
            .ones()
            .find(|&z| common.ones().all(|w| self.leq(w, z)))
    }

    /// Least common upper bound of `x` and `y`, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut common = self.up[x].clone();
        common.intersect_with(&self.up[y]);
        common
            .ones()
            .find(|&z| common.ones().all(|w| self.leq(z, w)))
    }

    pub fn is_chain(&self, set: impl IntoIterator<Item = usize>) -> bool {
        let items: Vec<usize> = set.into_iter().collect();
        items
            .iter()
            .enumerate()
            .all(|(i, &x)| items[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    /// Partition into comparability-connected components, each sorted, in
    /// order of least member.
    pub fn comparability_components(&self) -> Vec<ElemSet> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = ElemSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for y in self.up[x].ones().chain(self.down[x].ones()) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.comparability_components().len() == 1
    }

    /// Rooted tree: nonempty, connected, every principal down-set a chain and
    /// every pair with a common lower bound.
    pub fn is_tree(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let n = self.len();
        (0..n).all(|x| self.is_chain(self.down[x].ones()))
            && (0..n).all(|x| {
                (x + 1..n).all(|y| {
                    let mut c = self.down[x].clone();
                    c.intersect_with(&self.down[y]);
                    c.count_ones(..) > 0
                })
            })
    }

    /// Every component is a tree.
    pub fn is_forest(&self) -> bool {
        self.comparability_components()
            .iter()
            .all(|c| self.induced(c).is_tree())
    }

    /// Sub-poset on `subset`, keeping declared order and restricting colours.
    pub fn induced(&self, subset: &ElemSet) -> ColoredPoset {
        let members: Vec<usize> = subset.iter().copied().collect();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let ids = members.iter().map(|&x| self.ids[x].clone()).collect();
        let mut pairs = Vec::new();
        for (i, &x) in members.iter().enumerate() {
            for y in self.up[x].ones() {
                if let Some(&j) = pos.get(&y) {
                    pairs.push((i, j));
                }
            }
        }
        let colors = self
            .colors
            .iter()
            .map(|(k, b)| {
                (
                    k.clone(),
                    b.ones().filter_map(|x| pos.get(&x).copied()).collect(),
                )
            })
            .collect();
        ColoredPoset::from_indices(ids, &pairs, &colors).expect("induced order of a valid poset")
    }

    /// The same carrier with the order reversed.
    pub fn reversed(&self) -> ColoredPoset {
        let mut out = self.clone();
        std::mem::swap(&mut out.up, &mut out.down);
        out
    }

    /// Disjoint union; ids must not overlap.
    pub fn disjoint_union(&self, other: &ColoredPoset) -> Result<ColoredPoset> {
        let offset = self.len();
        let mut ids = self.ids.clone();
        ids.extend(other.ids.iter().cloned());
        let mut pairs = self.relation_pairs();
        pairs.extend(
            other
                .relation_pairs()
                .into_iter()
                .map(|(x, y)| (x + offset, y + offset)),
        );
        let mut colors: BTreeMap<String, ElemSet> = BTreeMap::new();
        for (k, b) in &self.colors {
            colors.entry(k.clone()).or_default().extend(b.ones());
        }
        for (k, b) in &other.colors {
            colors
                .entry(k.clone())
                .or_default()
                .extend(b.ones().map(|x| x + offset));
        }
        ColoredPoset::from_indices(ids, &pairs, &colors)
    }

    /// Returns a copy with colour `name` set to exactly `members`.
    pub fn with_color(&self, name: &str, members: &ElemSet) -> ColoredPoset {
        let mut out = self.clone();
        let mut bits = FixedBitSet::with_capacity(self.len());
        for &m in members {
            bits.insert(m);
        }
        out.colors.insert(name.to_owned(), bits);
        out
    }

    pub fn without_color(&self, name: &str) -> ColoredPoset {
        let mut out = self.clone();
        out.colors.remove(name);
        out
    }

    /// A copy carrying only the colours for which `keep` returns true.
    pub fn retain_colors(&self, keep: impl Fn(&str) -> bool) -> ColoredPoset {
        let mut out = self.clone();
        out.colors.retain(|k, _| keep(k));
        out
    }

    /// Strict order pairs `x < y`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].ones() {
                if y != x {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// An id not yet in the carrier, built from `base`.
    pub fn fresh_id(&self, base: &str) -> String {
        fresh_id_avoiding(base, |s| self.index.contains_key(s))
    }
}

pub(crate) fn fresh_id_avoiding(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut candidate = base.to_owned();
    while taken(&candidate) {
        candidate.push('\'');
    }
    candidate
}

fn index_ids(ids: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(Error::DuplicateElement(id.clone()));
        }
    }
    Ok(index)
}
