//! JSON documents for posets and trees.
//!
//! A poset document is `{"elements": [...], "leq": [[x, y], ...],
//! "colors": {"name": [...]}}`. `leq` may be any generating set of the
//! order. Writing emits the cover pairs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::ColoredPoset;
use crate::treeify::{TreeifyResult, ROOT};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(String, String)>,
    #[serde(default)]
    pub colors: BTreeMap<String, Vec<String>>,
}

impl PosetDocument {
    pub fn from_poset(p: &ColoredPoset) -> Self {
        let leq = p
            .covers()
            .edges
            .iter()
            .map(|&(x, y)| (p.id(x).to_owned(), p.id(y).to_owned()))
            .collect();
        let colors = p
            .colors()
            .map(|(name, members)| {
                (
                    name.to_owned(),
                    members.iter().map(|&x| p.id(x).to_owned()).collect(),
                )
            })
            .collect();
        PosetDocument {
            elements: p.ids().to_vec(),
            leq,
            colors,
        }
    }

    /// Builds the poset; reserved colour names are rejected.
    pub fn to_poset(&self) -> Result<ColoredPoset> {
        ColoredPoset::build(&self.elements, &self.leq, &self.colors)
    }

    /// Builds the poset, allowing reserved colour names.
    pub fn to_poset_with_reserved(&self) -> Result<ColoredPoset> {
        ColoredPoset::build_with_reserved(&self.elements, &self.leq, &self.colors)
    }
}

/// The output of a tree construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDocument {
    pub provenance: String,
    pub root: String,
    pub u: Vec<String>,
    /// Points of the tree that are not elements of the input.
    pub added: Vec<String>,
    pub tree: PosetDocument,
}

impl TreeDocument {
    pub fn from_result(r: &TreeifyResult) -> Self {
        let t = &r.tree;
        TreeDocument {
            provenance: r.provenance.as_str().to_owned(),
            root: t.id(r.root).to_owned(),
            u: r.u.iter().map(|&x| t.id(x).to_owned()).collect(),
            added: r.added().iter().map(|&x| t.id(x).to_owned()).collect(),
            tree: PosetDocument::from_poset(t),
        }
    }
}

fn malformed(e: serde_json::Error) -> Error {
    Error::Malformed(e.to_string())
}

/// Parses a poset document.
pub fn parse_poset(text: &str) -> Result<ColoredPoset> {
    let doc: PosetDocument = serde_json::from_str(text).map_err(malformed)?;
    doc.to_poset()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TreeInput {
    Wrapped { tree: PosetDocument },
    Bare(PosetDocument),
}

/// Parses a tree to interpret: either a [`TreeDocument`] or a bare poset
/// document carrying the construction colours. Returns the tree and whether
/// it has a `ROOT` point to drop.
pub fn parse_tree(text: &str) -> Result<(ColoredPoset, bool)> {
    let input: TreeInput = serde_json::from_str(text).map_err(malformed)?;
    let doc = match input {
        TreeInput::Wrapped { tree } => tree,
        TreeInput::Bare(doc) => doc,
    };
    let t = doc.to_poset_with_reserved()?;
    let has_root = t.color_class(ROOT).is_some_and(|c| !c.is_empty());
    Ok((t, has_root))
}

pub fn to_json(p: &ColoredPoset) -> String {
    serde_json::to_string(&PosetDocument::from_poset(p)).expect("documents serialise")
}
