//! Coloured finite posets whose completion is a forest, with automorphism
//! groups and a tree representation that preserves them.

pub mod alt;
pub mod aut;
pub mod completion;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod paths;
pub mod perm;
pub mod poset;
pub mod treeify;

pub use error::{Error, Result};
pub use poset::{ColoredPoset, ElemSet};
