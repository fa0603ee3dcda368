//! Constructors for every region family used by the enumeration: hexagons,
//! dented trapezoids and semihexagons, ferns, fern-cored hexagons in all four
//! placement variants, cored hexagons, and the minimal balanced envelope of a
//! fern.
//!
//! All hexagons are anchored with their western corner at the origin, and a
//! boundary walk fixes the sides: clockwise from the top side the directions
//! are `+e1`, `e1-e2`, `-e2`, `-e1`, `e2-e1`, `+e2`.

use crate::geometry::{LatticeVec, TriRegion, UnitTriangle};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("fern must have at least one lobe")]
    EmptyFernSpec,
    #[error("hexagon sides {sides:?} do not close up")]
    NonClosingBoundary { sides: [u32; 6] },
    #[error("expected {expected} dent positions, got {got}")]
    BadDentCount { expected: u32, got: usize },
    #[error("dent position {dent} outside base 1..={base}")]
    DentOutOfRange { dent: u32, base: u32 },
    #[error("dent positions must be strictly increasing")]
    DentsNotIncreasing,
    #[error("fern cell {cell} falls outside the hexagon")]
    FernDoesNotFit { cell: UnitTriangle },
}

/// Lobe sizes of a fern: a row of lattice triangles along a horizontal line,
/// alternately pointing up and down (the first lobe points up), touching at
/// vertices. Zero-size lobes are allowed anywhere and contribute no cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FernSpec {
    lobes: Vec<u32>,
}

impl FernSpec {
    pub fn new(lobes: Vec<u32>) -> Result<Self, BuildError> {
        if lobes.is_empty() {
            return Err(BuildError::EmptyFernSpec);
        }
        Ok(Self { lobes })
    }

    pub fn lobes(&self) -> &[u32] {
        &self.lobes
    }

    /// Number of lobes, including zero-size ones. At least 1.
    pub fn lobe_count(&self) -> usize {
        self.lobes.len()
    }

    /// Total size of the up-pointing (odd-indexed) lobes.
    pub fn up_sum(&self) -> u32 {
        self.lobes.iter().step_by(2).sum()
    }

    /// Total size of the down-pointing (even-indexed) lobes.
    pub fn down_sum(&self) -> u32 {
        self.lobes.iter().skip(1).step_by(2).sum()
    }

    pub fn total(&self) -> u32 {
        self.lobes.iter().sum()
    }

    /// Lobes in reverse order.
    pub fn reversed(&self) -> FernSpec {
        let mut lobes = self.lobes.clone();
        lobes.reverse();
        FernSpec { lobes }
    }

    /// The lobe list with one trailing zero appended when the lobe count is
    /// odd, so the result always has an even number of lobes.
    pub fn padded_even(&self) -> FernSpec {
        let mut lobes = self.lobes.clone();
        if lobes.len() % 2 == 1 {
            lobes.push(0);
        }
        FernSpec { lobes }
    }

    /// `a_1 + ... + a_i` (zero for `i = 0`).
    pub fn prefix_sum(&self, i: usize) -> u32 {
        self.lobes[..i].iter().sum()
    }

    /// `a_{i+1} + ... + a_k`.
    pub fn suffix_sum(&self, i: usize) -> u32 {
        self.lobes[i..].iter().sum()
    }

    /// The two-lobe fern `(up_sum, down_sum)` with the same silhouette totals.
    pub fn flattened(&self) -> FernSpec {
        FernSpec {
            lobes: vec![self.up_sum(), self.down_sum()],
        }
    }
}

/// Where the fern base sits relative to the center of the auxiliary hexagon,
/// determined by the parities of the hexagon core parameters `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlacementKind {
    /// `x`, `y`, `z` all of the same parity: base exactly at the center.
    Center,
    /// `x` of opposite parity to `y` and `z`: half a step west.
    West,
    /// `z` of opposite parity to `x` and `y`: half a step southwest.
    SouthWest,
    /// `y` of opposite parity to `x` and `z`: half a step northwest.
    NorthWest,
}

/// Parity dispatch for the four fern placements.
pub fn placement_kind(x: u32, y: u32, z: u32) -> PlacementKind {
    let (px, py, pz) = (x % 2, y % 2, z % 2);
    if px == py && py == pz {
        PlacementKind::Center
    } else if py == pz {
        PlacementKind::West
    } else if px == py {
        PlacementKind::SouthWest
    } else {
        PlacementKind::NorthWest
    }
}

/// The hexagon with the given side lengths, clockwise from the top side,
/// anchored with its western corner (between the lower-left and upper-left
/// sides) at the origin. Degenerate zero-length sides are fine.
pub fn hexagon(sides: [u32; 6]) -> Result<TriRegion, BuildError> {
    let [s1, s2, s3, s4, s5, s6] = sides.map(i64::from);
    if s1 + s2 != s4 + s5 || s2 + s3 != s5 + s6 {
        return Err(BuildError::NonClosingBoundary { sides });
    }
    // Interior of the boundary walk as six half-plane constraints.
    let u_max = s1 + s2;
    let v_min = s6 - s2 - s3;
    let v_max = s6;
    let w_max = s1 + s6; // u + v at the northeastern side
    let mut cells = Vec::new();
    for v in v_min..v_max {
        for u in 0..u_max {
            if u + v >= 0 && u + v < w_max {
                cells.push(UnitTriangle::up(u, v));
            }
            if u + v >= -1 && u + v <= w_max - 2 {
                cells.push(UnitTriangle::down(u, v));
            }
        }
    }
    Ok(TriRegion::from_cells(cells))
}

/// The trapezoid of side lengths `top`, `legs`, `top+legs`, `legs` (clockwise
/// from the top) with the up-pointing cells at base positions `dents`
/// removed; positions count from 1 at the left end of the base.
pub fn trapezoid_with_dents(top: u32, legs: u32, dents: &[u32]) -> Result<TriRegion, BuildError> {
    let base = top + legs;
    if dents.len() != legs as usize {
        return Err(BuildError::BadDentCount {
            expected: legs,
            got: dents.len(),
        });
    }
    for (i, &d) in dents.iter().enumerate() {
        if d < 1 || d > base {
            return Err(BuildError::DentOutOfRange { dent: d, base });
        }
        if i > 0 && dents[i - 1] >= d {
            return Err(BuildError::DentsNotIncreasing);
        }
    }
    let trapezoid = hexagon([top, legs, 0, base, 0, legs])?;
    let removed = TriRegion::from_cells(dents.iter().map(|&d| UnitTriangle::up(d as i64 - 1, 0)));
    Ok(trapezoid.without(&removed))
}

/// Dent positions of the semihexagon with base segment lengths `blocks`: the
/// leftmost `blocks[0]` base cells are removed, the next `blocks[1]` kept,
/// and so on alternating.
pub fn semihexagon_dents(blocks: &[u32]) -> Vec<u32> {
    let mut dents = Vec::new();
    let mut pos = 0;
    for (i, &b) in blocks.iter().enumerate() {
        if i % 2 == 0 {
            dents.extend(pos + 1..=pos + b);
        }
        pos += b;
    }
    dents
}

/// The semihexagon determined by base segment lengths `blocks` (odd-indexed
/// segments removed). The blocks fix all four trapezoid sides.
pub fn semihexagon(blocks: &[u32]) -> Result<TriRegion, BuildError> {
    let base: u32 = blocks.iter().sum();
    let dents = semihexagon_dents(blocks);
    let legs = dents.len() as u32;
    trapezoid_with_dents(base - legs, legs, &dents)
}

/// Cells of the fern with the given lobe sizes, its base (leftmost point) at
/// `base`. Lobe `i` is the triangle of side `a_i` whose left vertex sits
/// `a_1 + ... + a_{i-1}` steps east of the base; odd lobes point up, even
/// lobes point down.
pub fn fern_cells(base: LatticeVec, spec: &FernSpec) -> TriRegion {
    let (bu, bv) = base.as_int().expect("fern base must be a lattice point");
    let mut cells = Vec::new();
    let mut offset = 0i64;
    for (i, &lobe) in spec.lobes().iter().enumerate() {
        let a = lobe as i64;
        let s = bu + offset;
        if i % 2 == 0 {
            // Up-pointing lobe with corners (s, bv), (s+a, bv), (s, bv+a).
            for dv in 0..a {
                for du in 0..a - dv {
                    cells.push(UnitTriangle::up(s + du, bv + dv));
                    if du < a - dv - 1 {
                        cells.push(UnitTriangle::down(s + du, bv + dv));
                    }
                }
            }
        } else {
            // Down-pointing lobe with corners (s, bv), (s+a, bv), (s+a, bv-a).
            for dv in 1..=a {
                let v = bv - dv;
                for u in s + dv - 1..=s + a - 1 {
                    cells.push(UnitTriangle::down(u, v));
                    if u > s + dv - 1 {
                        cells.push(UnitTriangle::up(u, v));
                    }
                }
            }
        }
        offset += a;
    }
    TriRegion::from_cells(cells)
}

/// Side lengths of the enclosing hexagon of the fern-cored region with core
/// parameters `(x, y, z)`: `x+e, y+o, z+e, x+o, y+e, z+o` clockwise from the
/// top, where `o` and `e` are the fern's up and down totals.
pub fn fern_hexagon_sides(x: u32, y: u32, z: u32, spec: &FernSpec) -> [u32; 6] {
    let o = spec.up_sum();
    let e = spec.down_sum();
    [x + e, y + o, z + e, x + o, y + e, z + o]
}

/// Center of the auxiliary hexagon (sides `x, y, z, x, y, z`) nested in the
/// western corner of the enclosing hexagon. A lattice point exactly when
/// `x`, `y`, `z` share a parity.
pub fn aux_center(x: u32, y: u32, z: u32) -> LatticeVec {
    LatticeVec::from_doubled((x + y) as i64, z as i64 - y as i64)
}

/// Base point of the fern inside the enclosing hexagon: the auxiliary
/// hexagon's center nudged half a step west, southwest, or northwest as the
/// parity case demands. Always a lattice point.
pub fn fern_base_point(x: u32, y: u32, z: u32) -> LatticeVec {
    let delta2 = match placement_kind(x, y, z) {
        PlacementKind::Center => (0, 0),
        PlacementKind::West => (-1, 0),
        PlacementKind::SouthWest => (0, -1),
        PlacementKind::NorthWest => (-1, 1),
    };
    let center = aux_center(x, y, z);
    let base = center + LatticeVec::from_doubled(delta2.0, delta2.1);
    debug_assert!(
        base.is_lattice_point(),
        "parity case analysis guarantees integrality"
    );
    base
}

/// The fern-cored hexagon: the enclosing hexagon minus the fern placed at
/// (or half a step from) the center of the auxiliary hexagon.
pub fn fern_cored_hexagon(
    x: u32,
    y: u32,
    z: u32,
    spec: &FernSpec,
) -> Result<TriRegion, BuildError> {
    let hex = hexagon(fern_hexagon_sides(x, y, z, spec))?;
    let fern = fern_cells(fern_base_point(x, y, z), spec);
    if let Some(cell) = fern.iter().find(|c| !hex.contains(c)) {
        return Err(BuildError::FernDoesNotFit { cell: *cell });
    }
    Ok(hex.without(&fern))
}

/// The cored hexagon: a single up-pointing triangular hole of side `m`, the
/// one-lobe special case of the fern-cored hexagon.
pub fn cored_hexagon(x: u32, y: u32, z: u32, m: u32) -> Result<TriRegion, BuildError> {
    fern_cored_hexagon(x, y, z, &FernSpec::new(vec![m]).expect("one lobe"))
}

/// The smallest balanced hexagon containing the fern, minus the fern: the
/// `x = y = z = 0` fern-cored hexagon. The fern always fits.
pub fn fern_envelope(spec: &FernSpec) -> TriRegion {
    fern_cored_hexagon(0, 0, 0, spec).expect("fern always fits its envelope")
}
