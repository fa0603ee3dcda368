//! Exact counting of lozenge tilings (= perfect matchings of the dual graph)
//! by three independent engines: a profile-sweep dynamic program, a signed
//! determinant, and an inclusion-exclusion permanent for tiny instances.
//! The engines exist to cross-validate one another; `Auto` runs the sweep and
//! checks it against a second engine whenever the instance is within caps.

mod frontier;
mod kasteleyn;
mod ryser;

pub use frontier::count_frontier_dp;
pub use kasteleyn::count_kasteleyn;
pub use ryser::count_ryser;

use crate::geometry::TriRegion;
use num_bigint::BigUint;

/// Which counting engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EngineKind {
    FrontierDp,
    Kasteleyn,
    Ryser,
    Auto,
}

impl std::fmt::Display for EngineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            EngineKind::FrontierDp => "dp",
            EngineKind::Kasteleyn => "kasteleyn",
            EngineKind::Ryser => "ryser",
            EngineKind::Auto => "auto",
        };
        f.write_str(name)
    }
}

/// Per-engine instance limits. These are configuration, not constants; the
/// defaults keep the full verification grids comfortable on a laptop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineCaps {
    /// Maximum number of simultaneously pending cells in the sweep profile.
    pub dp_frontier: usize,
    /// Maximum number of up cells for the permanent engine.
    pub ryser_ups: usize,
    /// Maximum number of up cells for which `Auto` will run the determinant
    /// cross-check.
    pub kasteleyn_ups: usize,
}

impl Default for EngineCaps {
    fn default() -> Self {
        Self {
            dp_frontier: 22,
            ryser_ups: 16,
            kasteleyn_ups: 400,
        }
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CountError {
    #[error("instance too large for {engine}: needs {needed}, cap is {limit}")]
    InstanceTooLarge {
        engine: EngineKind,
        needed: usize,
        limit: usize,
    },
    #[error(
        "engine mismatch ({first_engine} = {first}, {second_engine} = {second}); this is a bug"
    )]
    EngineMismatch {
        first_engine: EngineKind,
        first: BigUint,
        second_engine: EngineKind,
        second: BigUint,
    },
}

/// Exact number of lozenge tilings of `region` with default caps.
/// Empty regions count 1; unbalanced regions count 0.
pub fn count_tilings(region: &TriRegion, engine: EngineKind) -> Result<BigUint, CountError> {
    count_tilings_with(region, engine, &EngineCaps::default())
}

/// As [`count_tilings`], with explicit caps.
pub fn count_tilings_with(
    region: &TriRegion,
    engine: EngineKind,
    caps: &EngineCaps,
) -> Result<BigUint, CountError> {
    match engine {
        EngineKind::FrontierDp => count_frontier_dp(region, caps.dp_frontier),
        EngineKind::Kasteleyn => Ok(count_kasteleyn(region)),
        EngineKind::Ryser => count_ryser(region, caps.ryser_ups),
        EngineKind::Auto => {
            let first = count_frontier_dp(region, caps.dp_frontier)?;
            let ups = region.up_count();
            let second = if ups <= caps.ryser_ups {
                Some((EngineKind::Ryser, count_ryser(region, caps.ryser_ups)?))
            } else if ups <= caps.kasteleyn_ups {
                Some((EngineKind::Kasteleyn, count_kasteleyn(region)))
            } else {
                None
            };
            if let Some((second_engine, second)) = second {
                if second != first {
                    return Err(CountError::EngineMismatch {
                        first_engine: EngineKind::FrontierDp,
                        first,
                        second_engine,
                        second,
                    });
                }
            }
            Ok(first)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{cored_hexagon, fern_cored_hexagon, hexagon, semihexagon, FernSpec};
    use crate::geometry::{LatticeVec, RegionTransform, UnitTriangle};
    use num_traits::One;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn all_engines(region: &TriRegion) -> [BigUint; 3] {
        [
            count_frontier_dp(region, 22).unwrap(),
            count_kasteleyn(region),
            count_ryser(region, 16).unwrap(),
        ]
    }

    #[test]
    fn trivial_regions() {
        let empty = TriRegion::new();
        assert_eq!(
            all_engines(&empty),
            [BigUint::one(), BigUint::one(), BigUint::one()]
        );
        let lozenge = TriRegion::from_cells([UnitTriangle::up(0, 0), UnitTriangle::down(0, 0)]);
        assert_eq!(all_engines(&lozenge), [big(1), big(1), big(1)]);
        let lone = TriRegion::from_cells([UnitTriangle::up(0, 0)]);
        assert_eq!(all_engines(&lone), [big(0), big(0), big(0)]);
    }

    #[test]
    fn small_hexagons() {
        assert_eq!(
            all_engines(&hexagon([1; 6]).unwrap()),
            [big(2), big(2), big(2)]
        );
        assert_eq!(
            all_engines(&hexagon([2; 6]).unwrap()),
            [big(20), big(20), big(20)]
        );
    }

    #[test]
    fn small_semihexagons() {
        assert_eq!(
            all_engines(&semihexagon(&[1, 1, 1]).unwrap()),
            [big(2), big(2), big(2)]
        );
        assert_eq!(
            all_engines(&semihexagon(&[2, 1, 1]).unwrap()),
            [big(3), big(3), big(3)]
        );
        assert_eq!(
            all_engines(&semihexagon(&[1, 2, 1]).unwrap()),
            [big(3), big(3), big(3)]
        );
    }

    #[test]
    fn forced_lozenges_drop_out() {
        // Appending a final kept segment only adds forced tiles.
        for (even, odd) in [
            (&[2u32, 3][..], &[2u32][..]),
            (&[1, 2, 2, 2][..], &[1, 2, 2][..]),
        ] {
            let a = count_tilings(&semihexagon(even).unwrap(), EngineKind::Auto).unwrap();
            let b = count_tilings(&semihexagon(odd).unwrap(), EngineKind::Auto).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn cored_and_fern_cored_regions() {
        let r = cored_hexagon(1, 1, 1, 1).unwrap();
        assert_eq!(all_engines(&r), [big(2), big(2), big(2)]);
        let spec = FernSpec::new(vec![1, 1]).unwrap();
        let small = fern_cored_hexagon(1, 1, 1, &spec).unwrap();
        let dp = count_frontier_dp(&small, 22).unwrap();
        assert_eq!(count_kasteleyn(&small), dp);
        assert_eq!(count_ryser(&small, 16).unwrap(), dp);
        // Larger instance: the permanent cap is exceeded, compare the other two.
        let fc = fern_cored_hexagon(2, 2, 2, &spec).unwrap();
        let dp = count_frontier_dp(&fc, 22).unwrap();
        assert_eq!(count_kasteleyn(&fc), dp);
    }

    #[test]
    fn counts_invariant_under_symmetry() {
        let spec = FernSpec::new(vec![1, 2, 1]).unwrap();
        let r = fern_cored_hexagon(2, 3, 2, &spec).unwrap();
        let n = count_tilings(&r, EngineKind::Auto).unwrap();
        let rot = r
            .transform(RegionTransform::Rotate180 {
                center: LatticeVec::new(0, 0),
            })
            .unwrap();
        assert_eq!(count_tilings(&rot, EngineKind::Auto).unwrap(), n);
        let mir = r
            .transform(RegionTransform::MirrorHorizontal { line_v2: 2 })
            .unwrap();
        assert_eq!(count_tilings(&mir, EngineKind::Auto).unwrap(), n);
    }

    #[test]
    fn condensation_identity_on_cells() {
        // Four boundary cells of the side-2 hexagon in cyclic order around
        // the outer face: west, north, east, south.
        let g = hexagon([2; 6]).unwrap();
        let a = UnitTriangle::up(0, 0);
        let b = UnitTriangle::down(1, 1);
        let c = UnitTriangle::up(3, 0);
        let d = UnitTriangle::down(1, -2);
        for cell in [a, b, c, d] {
            assert!(g.contains(&cell));
        }
        let minus = |cells: &[UnitTriangle]| {
            let m = g.without(&TriRegion::from_cells(cells.iter().copied()));
            count_frontier_dp(&m, 22).unwrap()
        };
        let whole = count_frontier_dp(&g, 22).unwrap();
        assert_eq!(
            whole * minus(&[a, b, c, d]),
            minus(&[a, b]) * minus(&[c, d]) + minus(&[a, d]) * minus(&[b, c])
        );
    }

    #[test]
    fn caps_are_enforced() {
        let r = hexagon([3; 6]).unwrap(); // 27 up cells
        assert!(matches!(
            count_ryser(&r, 16),
            Err(CountError::InstanceTooLarge {
                engine: EngineKind::Ryser,
                ..
            })
        ));
        assert!(matches!(
            count_frontier_dp(&r, 2),
            Err(CountError::InstanceTooLarge {
                engine: EngineKind::FrontierDp,
                ..
            })
        ));
        // Auto falls back to the determinant cross-check above the permanent cap.
        let caps = EngineCaps {
            ryser_ups: 4,
            ..EngineCaps::default()
        };
        assert_eq!(
            count_tilings_with(&r, EngineKind::Auto, &caps).unwrap(),
            big(980)
        );
    }
}
