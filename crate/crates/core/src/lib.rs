//! Recognition of combs: split graphs with no induced chair or co-chair.
//!
//! [`comb_decompose`] returns either a [`CombDecomposition`] that passes
//! [`validate_comb`] or an induced C4, co-C4, C5, chair or co-chair.

pub mod comb;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod io;
pub mod pattern;
pub mod recognize;
pub mod set;
pub mod split;
pub mod threshold;
pub mod violation;

pub use comb::{lemma1_mirror_holds, threshold_to_comb, validate_comb, CombDecomposition, LevelKind};
pub use error::{Error, Result};
pub use graph::Graph;
pub use io::{parse_edgelist, parse_graph6, write_edgelist, write_graph6};
pub use pattern::{find_any_forbidden, find_induced, verify_witness, PatternKind, Witness};
pub use recognize::{comb_decompose, is_comb, RecognitionResult};
pub use set::VertexSet;
pub use split::{is_complete_split, is_perfect_split, is_split, split_partition, SplitPartition};
pub use threshold::{is_threshold, threshold_decompose, validate_threshold, ThresholdDecomposition};
pub use violation::{Code, Violation};
