//! Red-tree and blue-`tK_m` detection, and exhaustive arrowing.

mod embed;
mod packing;
mod search;

pub use embed::{find_red_tree, RedTreeEmbedding};
pub use packing::{find_blue_packing, BlueCliquePacking};
pub use search::{arrows, enumerate_avoiders, ArrowsOutcome};

use serde::Serialize;

use crate::coloring::TwoColoring;
use crate::tree::Tree;

/// Witnesses found in a fixed coloring. The coloring avoids the pair iff
/// both are absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvoidReport {
    pub avoids: bool,
    #[serde(flatten)]
    pub red_witness: Option<RedTreeEmbedding>,
    #[serde(flatten)]
    pub blue_witness: Option<BlueCliquePacking>,
}

impl AvoidReport {
    pub fn avoids(&self) -> bool {
        self.red_witness.is_none() && self.blue_witness.is_none()
    }

    /// Re-validates every present witness against `c`.
    pub fn validate(&self, c: &TwoColoring, tree: &Tree, t: usize, m: usize) -> bool {
        self.avoids == self.avoids()
            && self.red_witness.as_ref().is_none_or(|w| w.validate(c, tree))
            && self.blue_witness.as_ref().is_none_or(|w| w.validate(c, t, m))
    }
}

pub fn avoid_check(c: &TwoColoring, tree: &Tree, t: usize, m: usize) -> AvoidReport {
    let red_witness = find_red_tree(c, tree);
    let blue_witness = find_blue_packing(c, t, m);
    AvoidReport {
        avoids: red_witness.is_none() && blue_witness.is_none(),
        red_witness,
        blue_witness,
    }
}
