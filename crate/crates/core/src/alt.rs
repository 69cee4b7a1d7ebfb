//! Alternating chains (fences), embeddings of them, and the CFPO_n class.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::paths::CfpoView;
use crate::poset::{ColoredPoset, ElemSet};

/// The fence `a0 > a1 < a2 > ...` on `n` points (`a0 < a1 > ...` when reversed).
pub fn alt_poset(n: usize, reversed: bool) -> Result<ColoredPoset> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    let ids: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let pairs: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            // Odd positions sit below their neighbours.
            let lower_is_i = (i % 2 == 1) != reversed;
            if lower_is_i {
                (i, i - 1)
            } else {
                (i - 1, i)
            }
        })
        .collect();
    ColoredPoset::from_indices(ids, &pairs, &BTreeMap::new())
}

/// An order-embedding of `Alt_n` (or `Alt_n*`) into a target poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub n: usize,
    pub reversed: bool,
    /// `map[i]` is the image of `a_i`.
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn source(&self) -> ColoredPoset {
        alt_poset(self.n, self.reversed).expect("n >= 1")
    }

    pub fn midpoint(&self) -> usize {
        self.map[self.n / 2]
    }
}

/// Result of classifying a poset by the longest embeddable fence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub n: usize,
    pub witness: Embedding,
    /// Size of the fence shown not to embed (in either orientation), with
    /// the number of search nodes that exhausted it.
    pub refuted_size: usize,
    pub refutation_nodes: u64,
}

struct FenceSearch<'a> {
    p: &'a ColoredPoset,
    n: usize,
    reversed: bool,
    map: Vec<usize>,
    nodes: u64,
}

impl FenceSearch<'_> {
    /// Whether the image of position `i` must lie below that of `i - 1`.
    fn descends_into(&self, i: usize) -> bool {
        (i % 2 == 1) != self.reversed
    }

    fn run(&mut self, stop_at_first: bool, out: &mut Vec<Vec<usize>>) {
        let i = self.map.len();
        if i == self.n {
            out.push(self.map.clone());
            return;
        }
        let candidates: Vec<usize> = if i == 0 {
            (0..self.p.len()).collect()
        } else {
            let prev = self.map[i - 1];
            let bits = if self.descends_into(i) {
                self.p.down_bits(prev)
            } else {
                self.p.up_bits(prev)
            };
            bits.ones().filter(|&c| c != prev).collect()
        };
        for c in candidates {
            self.nodes += 1;
            let clashes = self.map[..i.saturating_sub(1)]
                .iter()
                .any(|&earlier| self.p.comparable(earlier, c));
            if clashes {
                continue;
            }
            self.map.push(c);
            self.run(stop_at_first, out);
            self.map.pop();
            if stop_at_first && !out.is_empty() {
                return;
            }
        }
    }
}

fn search(p: &ColoredPoset, n: usize, reversed: bool, stop_at_first: bool) -> (Vec<Vec<usize>>, u64) {
    let mut s = FenceSearch {
        p,
        n,
        reversed,
        map: Vec::with_capacity(n),
        nodes: 0,
    };
    let mut out = Vec::new();
    if n > 0 && n <= p.len() {
        s.run(stop_at_first, &mut out);
    }
    (out, s.nodes)
}

/// All embeddings of `Alt_n` and then of `Alt_n*`, deduplicated by image
/// sequence (the two fences coincide only for `n = 1`).
pub fn alt_embeddings(p: &ColoredPoset, n: usize) -> Vec<Embedding> {
    let mut out: Vec<Embedding> = Vec::new();
    for reversed in [false, true] {
        for map in search(p, n, reversed, false).0 {
            if out.iter().any(|e| e.map == map) {
                continue;
            }
            out.push(Embedding { n, reversed, map });
        }
    }
    out
}

/// Whether `Alt_n` or `Alt_n*` embeds, with the search node count.
fn fence_embeds(p: &ColoredPoset, n: usize) -> (Option<Embedding>, u64) {
    let mut nodes = 0;
    for reversed in [false, true] {
        let (found, k) = search(p, n, reversed, true);
        nodes += k;
        if let Some(map) = found.into_iter().next() {
            return (Some(Embedding { n, reversed, map }), nodes);
        }
    }
    (None, nodes)
}

/// The largest `n` such that `Alt_n` or `Alt_n*` embeds.
pub fn classify(p: &ColoredPoset) -> Result<Classification> {
    if p.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let mut witness = Embedding {
        n: 1,
        reversed: false,
        map: vec![0],
    };
    let mut n = 1;
    loop {
        let (found, nodes) = fence_embeds(p, n + 1);
        match found {
            Some(e) => {
                witness = e;
                n += 1;
            }
            None => {
                return Ok(Classification {
                    n,
                    witness,
                    refuted_size: n + 1,
                    refutation_nodes: nodes,
                })
            }
        }
    }
}

/// Images of the midpoints of every embedded `Alt_{2k+1}` and `Alt_{2k+1}*`,
/// where `2k+1` is the class of `p`.
pub fn center_midpoints(p: &ColoredPoset) -> Result<ElemSet> {
    let view = CfpoView::new(p)?;
    if !view.is_connected() {
        return Err(Error::NotConnected);
    }
    let class = classify(p)?.n;
    if class < 3 || class % 2 == 0 {
        return Err(Error::NotOddClass(class));
    }
    Ok(alt_embeddings(p, class)
        .iter()
        .map(Embedding::midpoint)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn alt_poset_shapes() {
        let a2 = alt_poset(2, false).unwrap();
        assert!(a2.lt(1, 0));
        let v = alt_poset(3, false).unwrap();
        assert!(v.lt(1, 0) && v.lt(1, 2) && !v.comparable(0, 2));
        let l = alt_poset(3, true).unwrap();
        assert!(l.lt(0, 1) && l.lt(2, 1));
        assert_eq!(alt_poset(0, false), Err(Error::InvalidSize(0)));
    }

    #[test]
    fn embedding_examples() {
        let e = alt_embeddings(&alt(5), 5);
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].map, vec![0, 1, 2, 3, 4]);
        assert_eq!(e[1].map, vec![4, 3, 2, 1, 0]);
        assert!(e.iter().all(|x| !x.reversed));
        assert!(alt_embeddings(&chain(3), 3).is_empty());
        assert!(alt_embeddings(&antichain(2), 2).is_empty());
    }

    #[test]
    fn single_point_fences_coincide() {
        assert_eq!(alt_embeddings(&antichain(2), 1).len(), 2);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&alt(5)).unwrap().n, 5);
        assert_eq!(classify(&bowtie()).unwrap().n, 3);
        assert_eq!(classify(&antichain(2)).unwrap().n, 1);
        assert_eq!(classify(&chain(3)).unwrap().n, 2);
        let empty = ColoredPoset::from_indices(vec![], &[], &BTreeMap::new()).unwrap();
        assert_eq!(classify(&empty), Err(Error::EmptyPoset));
    }

    #[test]
    fn classify_alt_range() {
        for k in 1..=7 {
            assert_eq!(classify(&alt(k)).unwrap().n, k);
            assert_eq!(classify(&alt_poset(k, true).unwrap()).unwrap().n, k);
        }
    }

    #[test]
    fn witness_is_an_order_embedding() {
        let h = hbar();
        let c = classify(&h).unwrap();
        let src = c.witness.source();
        for i in 0..src.len() {
            for j in 0..src.len() {
                assert_eq!(src.leq(i, j), h.leq(c.witness.map[i], c.witness.map[j]));
            }
        }
    }

    #[test]
    fn midpoint_examples() {
        let a5 = alt(5);
        assert_eq!(center_midpoints(&a5).unwrap(), [2].into_iter().collect());
        // Every point of the bowtie is the middle of some V or Λ.
        assert_eq!(center_midpoints(&bowtie()).unwrap(), (0..5).collect());
        // In the H-shape, b1 sits under the incomparable c1, c2 and c1 sits
        // over b1, b2: all six points are midpoints.
        assert_eq!(center_midpoints(&hbar()).unwrap(), (0..6).collect());
        assert_eq!(center_midpoints(&alt(4)), Err(Error::NotOddClass(4)));
        assert!(matches!(center_midpoints(&diamond()), Err(Error::NotACFPO(_))));
    }
}
