//! Degrees by 2-enumeration: every filling contributes `2^(turns - n)`.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::gpd::{self, BoundarySpec, EdgeLabel, GpdError, Plan, Tile};
use crate::symmetric::Permutation;

/// Default cap on live frontier states before the DP gives up.
pub const DEFAULT_STATE_BUDGET: usize = 20_000_000;

const BITS: u32 = 6;
const MASK: u128 = (1 << BITS) - 1;

#[derive(Debug, Error)]
pub enum DegreeError {
    #[error("n = {n} is out of reach: {states} frontier states exceed the budget of {budget}")]
    InfeasibleSize { n: usize, states: usize, budget: usize },
    #[error("n = {0} is too large for the packed frontier")]
    TooLarge(usize),
    #[error(transparent)]
    Gpd(#[from] GpdError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Dp,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "brute" => Ok(Method::Brute),
            "dp" => Ok(Method::Dp),
            other => Err(format!("unknown method `{other}` (expected brute or dp)")),
        }
    }
}

fn turns(g: &gpd::Gpd) -> usize {
    g.count_tiles(Tile::is_turn)
}

/// The individual terms `2^(turns - n)`, one per filling, in ascending order.
pub fn degree_terms(w: &Permutation) -> Result<Vec<BigUint>, DegreeError> {
    let n = w.size();
    let mut terms: Vec<BigUint> = gpd::enumerate(&BoundarySpec::standard(w))?
        .map(|g| BigUint::from(1u8) << (turns(&g) - n))
        .collect();
    terms.sort();
    Ok(terms)
}

/// `deg E_w` with the default state budget.
pub fn degree_ew(w: &Permutation, method: Method) -> Result<BigUint, DegreeError> {
    degree_ew_with_budget(w, method, DEFAULT_STATE_BUDGET)
}

pub fn degree_ew_with_budget(w: &Permutation, method: Method, budget: usize) -> Result<BigUint, DegreeError> {
    match method {
        Method::Brute => {
            let n = w.size();
            let shards = gpd::shards(&BoundarySpec::standard(w))?;
            Ok(shards
                .into_par_iter()
                .map(|s| s.map(|g| BigUint::from(1u8) << (turns(&g) - n)).sum::<BigUint>())
                .collect::<Vec<_>>()
                .into_iter()
                .sum())
        }
        Method::Dp => frontier_dp(w, budget),
    }
}

/// Degree of the commuting variety, `deg E_{id_n}`.
pub fn degree_commuting(n: usize, method: Method) -> Result<BigUint, DegreeError> {
    degree_ew(&Permutation::identity(n), method)
}

pub fn degree_commuting_with_budget(n: usize, method: Method, budget: usize) -> Result<BigUint, DegreeError> {
    degree_ew_with_budget(&Permutation::identity(n), method, budget)
}

/// Frontier: slot `c < n` holds the label on the North edge last produced in
/// column `c`, slot `n` the pending East edge of the current row, packed
/// six bits per slot with 0 for blank.
fn get(key: u128, slot: usize) -> EdgeLabel {
    let v = ((key >> (BITS * slot as u32)) & MASK) as u16;
    (v != 0).then_some(v)
}

fn set(key: u128, slot: usize, label: EdgeLabel) -> u128 {
    let shift = BITS * slot as u32;
    (key & !(MASK << shift)) | ((label.unwrap_or(0) as u128) << shift)
}

/// Scans squares bottom row first, left to right, keeping for each frontier
/// the sum of `2^turns` over partial fillings reaching it.
fn frontier_dp(w: &Permutation, budget: usize) -> Result<BigUint, DegreeError> {
    let n = w.size();
    if (n as u32 + 1) * BITS > 128 || n as u128 > MASK {
        return Err(DegreeError::TooLarge(n));
    }
    let spec = BoundarySpec::standard(w);
    let plan = Plan::new(&spec)?;
    let mut start = 0u128;
    for c in 0..n {
        start = set(start, c, plan.south_input(c));
    }
    start = set(start, n, plan.west_input(n - 1));
    let mut layer: HashMap<u128, BigUint> = HashMap::from([(start, BigUint::from(1u8))]);

    for p in 0..plan.len() {
        let (r, c) = plan.square(p);
        let row_end = c + 1 == n;
        let next_west = if row_end && r > 0 { plan.west_input(r - 1) } else { None };
        let step = |acc: HashMap<u128, BigUint>, (key, value): (&u128, &BigUint)| {
            let mut acc = acc;
            let options = plan.options(r, c, get(*key, n), get(*key, c));
            for &(tile, north, east) in options.as_slice() {
                let mut k = set(*key, c, north);
                k = set(k, n, if row_end { next_west } else { east });
                let v = if tile.is_turn() { value << 1 } else { value.clone() };
                *acc.entry(k).or_insert_with(BigUint::zero) += v;
            }
            acc
        };
        layer = layer
            .par_iter()
            .fold(HashMap::new, step)
            .reduce(HashMap::new, |a, b| {
                let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                for (k, v) in small {
                    *big.entry(k).or_insert_with(BigUint::zero) += v;
                }
                big
            });
        if layer.len() > budget {
            return Err(DegreeError::InfeasibleSize { n, states: layer.len(), budget });
        }
    }
    // The North boundary was enforced square by square, so every survivor is complete.
    let total: BigUint = layer.into_values().sum();
    Ok(total >> n)
}
