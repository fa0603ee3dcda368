//! Sweep-based exact matching count. Cells are processed in the canonical
//! `(v, u, down-before-up)` order; every neighbor of a down cell comes later
//! in that order and every neighbor of an up cell earlier, so down cells
//! enter a pending profile and up cells must consume a pending neighbor on
//! the spot. The profile is a bitmask over reusable slots, mapped to exact
//! partial counts.

use super::{CountError, EngineKind};
use crate::geometry::{Orient, TriRegion, UnitTriangle};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Exact tiling count by the profile sweep. `frontier_cap` bounds the number
/// of simultaneously pending down cells (at most 63).
pub fn count_frontier_dp(region: &TriRegion, frontier_cap: usize) -> Result<BigUint, CountError> {
    let cap = frontier_cap.min(63);
    let cells: Vec<UnitTriangle> = region.iter().copied().collect();
    let scan_index: HashMap<UnitTriangle, usize> =
        cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();

    // For each down cell, the scan position after which it can no longer be
    // matched (its last up neighbor, or itself when it has none).
    let mut dies_after: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (i, cell) in cells.iter().enumerate() {
        if cell.orient == Orient::Down {
            let last = cell
                .edge_neighbors()
                .iter()
                .filter_map(|n| scan_index.get(n).copied())
                .max()
                .unwrap_or(i);
            dies_after[last].push(i);
        }
    }

    let mut slot_of: HashMap<usize, u32> = HashMap::new();
    let mut free_slots: Vec<u32> = Vec::new();
    let mut next_slot: u32 = 0;
    let mut alive: usize = 0;

    let mut states: HashMap<u64, BigUint> = HashMap::new();
    states.insert(0, BigUint::one());

    for (i, cell) in cells.iter().enumerate() {
        match cell.orient {
            Orient::Down => {
                alive += 1;
                if alive > cap {
                    return Err(CountError::InstanceTooLarge {
                        engine: EngineKind::FrontierDp,
                        needed: alive,
                        limit: cap,
                    });
                }
                let slot = free_slots.pop().unwrap_or_else(|| {
                    let s = next_slot;
                    next_slot += 1;
                    s
                });
                slot_of.insert(i, slot);
                let bit = 1u64 << slot;
                states = states
                    .into_iter()
                    .map(|(mask, n)| (mask | bit, n))
                    .collect();
            }
            Orient::Up => {
                // Pending neighbors this up cell may consume.
                let targets: Vec<u64> = cell
                    .edge_neighbors()
                    .iter()
                    .filter_map(|n| scan_index.get(n))
                    .map(|&j| 1u64 << slot_of[&j])
                    .collect();
                let mut next: HashMap<u64, BigUint> = HashMap::with_capacity(states.len());
                for (mask, n) in &states {
                    for &bit in &targets {
                        if mask & bit != 0 {
                            let entry = next.entry(mask & !bit).or_insert_with(BigUint::zero);
                            *entry += n;
                        }
                    }
                }
                states = next;
            }
        }
        for &down in &dies_after[i] {
            let slot = slot_of[&down];
            let bit = 1u64 << slot;
            states.retain(|mask, _| mask & bit == 0);
            free_slots.push(slot);
            alive -= 1;
        }
    }

    Ok(states.remove(&0).unwrap_or_else(BigUint::zero))
}
