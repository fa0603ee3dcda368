//! Permanent of the biadjacency matrix by inclusion-exclusion, as a tiny
//! brute-force oracle for the other engines. Exponential in the number of up
//! cells, so hard-capped.

use super::{CountError, EngineKind};
use crate::geometry::TriRegion;
use num_bigint::BigUint;
use num_traits::{One, Zero};

// Above this the i128 accumulators could overflow (and the run time would be
// unreasonable anyway), so the configured cap is clamped to it.
const RYSER_HARD_CAP: usize = 22;

/// Exact tiling count as a 0/1 permanent. Errors when the region has more
/// than `cap` up cells; unbalanced regions count 0.
pub fn count_ryser(region: &TriRegion, cap: usize) -> Result<BigUint, CountError> {
    let graph = region.dual_graph();
    let n = graph.ups.len();
    if n != graph.downs.len() {
        return Ok(BigUint::zero());
    }
    let cap = cap.min(RYSER_HARD_CAP);
    if n > cap {
        return Err(CountError::InstanceTooLarge {
            engine: EngineKind::Ryser,
            needed: n,
            limit: cap,
        });
    }
    if n == 0 {
        return Ok(BigUint::one());
    }

    // Row bitmasks over down-cell columns.
    let mut rows = vec![0u32; n];
    for &(ui, di) in &graph.edges {
        rows[ui] |= 1 << di;
    }

    let mut total: i128 = 0;
    for subset in 0u32..1 << n {
        let mut product: i128 = 1;
        for &row in &rows {
            product *= (row & subset).count_ones() as i128;
            if product == 0 {
                break;
            }
        }
        if (n as u32 - subset.count_ones()) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    debug_assert!(total >= 0, "permanent of a 0/1 matrix is nonnegative");
    Ok(BigUint::from(total.unsigned_abs()))
}
