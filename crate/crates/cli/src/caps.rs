//! Ranges swept by the audit. Defaults are the full acceptance ranges; a JSON
//! file may override any subset of fields.

use anyhow::Context;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub asai_max_entry: u32,
    pub asai_max_union: usize,
    pub asai_d_max: i64,
    /// Ranks for MN orthogonality, the φ routes and the B-type bounds.
    pub weyl_max_n: u64,
    /// Ranks compared against explicitly induced characters.
    pub induced_max_n: usize,
    pub type_d_max_n: u64,
    pub centralizer_max_n: usize,
    pub sym_centralizer_max_n: u32,
    pub degree_max_n: u32,
    pub degree_qs: Vec<u64>,
    pub partition_count_max_n: u32,
    pub count_max_rank: u64,
    pub count_qs: Vec<u64>,
    pub borel_qs: Vec<u64>,
    pub kostka_max_n: u32,
    pub stability_max_n: u64,
    pub stability_max_tail: u32,
    pub brute_flag_max_n: u32,
    pub flag_max_n: u32,
    pub flag_qs: Vec<u64>,
    /// N for the stable-flag and level-n measurements.
    pub desk_n: u32,
    /// Groups above this order are skipped in the table criteria.
    pub group_max_order: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            asai_max_entry: 6,
            asai_max_union: 5,
            asai_d_max: 6,
            weyl_max_n: 6,
            induced_max_n: 3,
            type_d_max_n: 4,
            centralizer_max_n: 5,
            sym_centralizer_max_n: 8,
            degree_max_n: 8,
            degree_qs: vec![2, 3, 4, 5],
            partition_count_max_n: 10,
            count_max_rank: 8,
            count_qs: vec![2, 3],
            borel_qs: vec![2, 3],
            kostka_max_n: 8,
            stability_max_n: 12,
            stability_max_tail: 4,
            brute_flag_max_n: 6,
            flag_max_n: 50,
            flag_qs: vec![2, 3, 4, 5],
            desk_n: 40,
            group_max_order: 200_000,
        }
    }
}

impl Caps {
    pub fn load(path: Option<&Path>) -> anyhow::Result<Caps> {
        let Some(path) = path else { return Ok(Caps::default()) };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing caps file {}", path.display()))
    }
}
