//! Isomorphism-class counts per order, computed from the pattern oracles.

use serde::{Deserialize, Serialize};

use super::canon::enumerate_graphs;
use crate::error::{Error, Result};
use crate::pattern::{find_any_forbidden, find_first, SPLIT_OBSTRUCTIONS, THRESHOLD_OBSTRUCTIONS};

pub const CENSUS_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: usize,
    pub split: usize,
    pub threshold: usize,
    pub comb: usize,
}

pub fn census(max_n: usize) -> Result<Vec<CensusRow>> {
    if max_n > CENSUS_LIMIT {
        return Err(Error::TooLarge { what: "census", n: max_n, limit: CENSUS_LIMIT });
    }
    (1..=max_n)
        .map(|n| {
            let mut row = CensusRow { n, total: 0, split: 0, threshold: 0, comb: 0 };
            for g in enumerate_graphs(n, true)? {
                row.total += 1;
                row.split += find_first(&g, &SPLIT_OBSTRUCTIONS).is_none() as usize;
                row.threshold += find_first(&g, &THRESHOLD_OBSTRUCTIONS).is_none() as usize;
                row.comb += find_any_forbidden(&g).is_none() as usize;
            }
            Ok(row)
        })
        .collect()
}

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("n,total,split,threshold,comb\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{},{}\n", r.n, r.total, r.split, r.threshold, r.comb));
    }
    out
}
