//! Formula-free tiling counts.
//!
//! [`count_tilings`] runs a broken-profile transfer sweep over the rows of
//! the region: cells are visited row by row, and the state records which
//! up-triangles of the next row are already claimed by a vertical lozenge,
//! plus one carry bit for the next cell in the current row. The sweep runs
//! in `u128` and restarts in `BigUint` if a partial sum overflows.
//!
//! [`count_tilings_exhaustive`] is a plain backtracking enumeration kept as
//! an independent cross-check for small regions.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::OracleError;
use crate::lattice::{rotate_120, Orient, Region, Tiling, TriRef};

pub const DEFAULT_MAX_CELLS: usize = 2000;
pub const EXHAUSTIVE_MAX_CELLS: usize = 40;
const MAX_SWEEP_WIDTH: usize = 127;

/// Options for the counting entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_cells: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_cells: DEFAULT_MAX_CELLS }
    }
}

impl OracleConfig {
    pub fn with_max_cells(max_cells: usize) -> Self {
        OracleConfig { max_cells }
    }

    /// Reads `SHAMROCK_MAX_CELLS`, falling back to the default.
    pub fn from_env() -> Self {
        std::env::var("SHAMROCK_MAX_CELLS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(OracleConfig::with_max_cells)
            .unwrap_or_default()
    }

    fn check(&self, region: &Region) -> Result<(), OracleError> {
        if region.len() > self.max_cells {
            return Err(OracleError::OverBudget { cells: region.len(), budget: self.max_cells });
        }
        Ok(())
    }
}

/// Exact number of lozenge tilings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountResult(pub BigUint);

impl CountResult {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl fmt::Display for CountResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<u64> for CountResult {
    fn from(v: u64) -> Self {
        CountResult(BigUint::from(v))
    }
}

/// Planar dual of a region: one vertex per unit triangle, edges across shared sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub up_vertices: Vec<TriRef>,
    pub down_vertices: Vec<TriRef>,
    /// `(up index, down index)` pairs, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    /// Down-neighbours of each up vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.up_vertices.len()];
        for &(u, d) in &self.edges {
            adj[u].push(d);
        }
        adj
    }
}

pub fn dual_graph(region: &Region) -> DualGraph {
    let up_vertices: Vec<TriRef> = region.iter().filter(|t| t.orient == Orient::Up).collect();
    let down_vertices: Vec<TriRef> = region.iter().filter(|t| t.orient == Orient::Down).collect();
    let down_index: HashMap<TriRef, usize> =
        down_vertices.iter().enumerate().map(|(k, &t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (u, t) in up_vertices.iter().enumerate() {
        for n in t.neighbors() {
            if let Some(&d) = down_index.get(&n) {
                edges.push((u, d));
            }
        }
    }
    edges.sort_unstable();
    DualGraph { up_vertices, down_vertices, edges }
}

pub fn count_tilings(region: &Region) -> Result<CountResult, OracleError> {
    count_tilings_with(region, &OracleConfig::default())
}

pub fn count_tilings_with(region: &Region, config: &OracleConfig) -> Result<CountResult, OracleError> {
    config.check(region)?;
    if region.is_empty() {
        return Ok(CountResult(<BigUint as One>::one()));
    }
    if !region.is_balanced() {
        return Ok(CountResult(<BigUint as Zero>::zero()));
    }
    // The count is rotation invariant; sweep along the orientation with the
    // narrowest rows.
    let r1 = rotate_120(region);
    let r2 = rotate_120(&r1);
    let best = [region.clone(), r1, r2]
        .into_iter()
        .min_by_key(sweep_width)
        .expect("three candidates");
    let width = sweep_width(&best);
    if width > MAX_SWEEP_WIDTH {
        return Err(OracleError::TooWide { width, max: MAX_SWEEP_WIDTH });
    }
    let value = match sweep::<u128>(&best) {
        Some(v) => BigUint::from(v),
        None => sweep::<BigUint>(&best).expect("BigUint never overflows"),
    };
    Ok(CountResult(value))
}

fn sweep_width(region: &Region) -> usize {
    region.bounding_box().map_or(0, |((i0, i1), _)| (i1 - i0) as usize)
}

trait Tally: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    /// Returns `false` on overflow.
    fn accumulate(&mut self, other: &Self) -> bool;
}

impl Tally for u128 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn accumulate(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl Tally for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn accumulate(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
}

const CARRY: u128 = 1 << 127;

fn sweep<T: Tally>(region: &Region) -> Option<T> {
    let Some(((i0, _), _)) = region.bounding_box() else {
        return Some(T::one());
    };
    let mut order: Vec<TriRef> = region.iter().collect();
    order.sort_unstable_by_key(|t| (t.j, t.i, t.orient));

    let mut states: HashMap<u128, T> = HashMap::from([(0, T::one())]);
    let mut next: HashMap<u128, T> = HashMap::new();
    let push = |map: &mut HashMap<u128, T>, key: u128, v: &T| -> bool {
        match map.get_mut(&key) {
            Some(acc) => acc.accumulate(v),
            None => {
                map.insert(key, v.clone());
                true
            }
        }
    };

    for t in order {
        let bit = 1u128 << (t.i - i0);
        next.clear();
        match t.orient {
            Orient::Up => {
                let right = region.contains(TriRef::down(t.i, t.j));
                for (&key, v) in &states {
                    let from_below = key & bit != 0;
                    let from_left = key & CARRY != 0;
                    let ok = match (from_below, from_left) {
                        // claimed twice: no tiling extends this state
                        (true, true) => true,
                        (true, false) => push(&mut next, key & !bit, v),
                        (false, true) => push(&mut next, key & !CARRY, v),
                        (false, false) => !right || push(&mut next, key | CARRY, v),
                    };
                    if !ok {
                        return None;
                    }
                }
            }
            Orient::Down => {
                let right = region.contains(TriRef::up(t.i + 1, t.j));
                let above = region.contains(TriRef::up(t.i, t.j + 1));
                for (&key, v) in &states {
                    let ok = if key & CARRY != 0 {
                        push(&mut next, key & !CARRY, v)
                    } else {
                        (!right || push(&mut next, key | CARRY, v))
                            && (!above || push(&mut next, key | bit, v))
                    };
                    if !ok {
                        return None;
                    }
                }
            }
        }
        std::mem::swap(&mut states, &mut next);
        if states.is_empty() {
            break;
        }
    }
    // States where an up cell was claimed twice were dropped on the spot.
    Some(states.remove(&0).unwrap_or_else(T::zero))
}

/// Backtracking enumeration of tilings; independent of the sweep.
pub fn count_tilings_exhaustive(region: &Region) -> Result<CountResult, OracleError> {
    if region.len() > EXHAUSTIVE_MAX_CELLS {
        return Err(OracleError::OverBudget { cells: region.len(), budget: EXHAUSTIVE_MAX_CELLS });
    }
    let cells: Vec<TriRef> = region.iter().collect();
    let index: HashMap<TriRef, usize> = cells.iter().enumerate().map(|(k, &t)| (t, k)).collect();
    let nbrs: Vec<Vec<usize>> = cells
        .iter()
        .map(|t| t.neighbors().iter().filter_map(|n| index.get(n).copied()).collect())
        .collect();
    let mut used = vec![false; cells.len()];
    Ok(CountResult(BigUint::from(backtrack(&nbrs, &mut used, 0))))
}

fn backtrack(nbrs: &[Vec<usize>], used: &mut [bool], from: usize) -> u64 {
    let Some(first) = (from..used.len()).find(|&k| !used[k]) else {
        return 1;
    };
    used[first] = true;
    let mut total = 0;
    for &n in &nbrs[first] {
        if !used[n] {
            used[n] = true;
            total += backtrack(nbrs, used, first + 1);
            used[n] = false;
        }
    }
    used[first] = false;
    total
}

/// Some tiling of the region, or `None` when it has none.
///
/// Uses augmenting paths on the dual graph, so it does not share code with
/// either counter.
pub fn find_one_tiling(region: &Region) -> Result<Option<Tiling>, OracleError> {
    find_one_tiling_with(region, &OracleConfig::default())
}

pub fn find_one_tiling_with(region: &Region, config: &OracleConfig) -> Result<Option<Tiling>, OracleError> {
    config.check(region)?;
    if !region.is_balanced() {
        return Ok(None);
    }
    let g = dual_graph(region);
    let adj = g.adjacency();
    let mut match_down: Vec<Option<usize>> = vec![None; g.down_vertices.len()];
    for u in 0..g.up_vertices.len() {
        let mut seen = vec![false; g.down_vertices.len()];
        if !augment(u, &adj, &mut seen, &mut match_down) {
            return Ok(None);
        }
    }
    let mut lozenges: Vec<(TriRef, TriRef)> = match_down
        .iter()
        .enumerate()
        .map(|(d, u)| (g.up_vertices[u.expect("perfect matching")], g.down_vertices[d]))
        .collect();
    lozenges.sort_unstable();
    Ok(Some(Tiling { lozenges }))
}

fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], match_down: &mut [Option<usize>]) -> bool {
    for &d in &adj[u] {
        if seen[d] {
            continue;
        }
        seen[d] = true;
        if match_down[d].is_none_or(|w| augment(w, adj, seen, match_down)) {
            match_down[d] = Some(u);
            return true;
        }
    }
    false
}
