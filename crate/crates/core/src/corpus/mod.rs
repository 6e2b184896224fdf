//! Corpora and oracles: enumeration, generators, census, brute force.

mod brute;
mod canon;
mod census;
mod generate;

pub use brute::{brute_force_comb_label, DEFAULT_LIMIT};
pub use canon::{canonical_code, canonical_form, enumerate_graphs, enumerate_up_to, CANONICAL_LIMIT, ENUMERATION_LIMIT};
pub use census::{census, census_csv, CensusRow};
pub use generate::{generate_comb, random_graph, CombParams};
