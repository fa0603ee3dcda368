//! Triangular-lattice coordinate system: lattice points, unit triangles,
//! cell regions, region symmetries, and the bipartite dual graph consumed by
//! the counting engines.
//!
//! Coordinates are oblique: a lattice point is `u*e1 + v*e2` where `e1` is a
//! unit step east and `e2` a unit step northeast at 60 degrees. All geometry
//! is exact; points that may sit between lattice points (symmetry centers)
//! carry doubled integer coordinates, never floats.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A point of the triangular lattice, or a half-lattice point such as the
/// center of a centrally symmetric hexagon.
///
/// Stored as doubled coordinates so that halves stay exact: the point is
/// `(u2/2)*e1 + (v2/2)*e2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVec {
    u2: i64,
    v2: i64,
}

impl LatticeVec {
    /// The point `u*e1 + v*e2` with integer coordinates.
    pub fn new(u: i64, v: i64) -> Self {
        Self {
            u2: 2 * u,
            v2: 2 * v,
        }
    }

    /// A point from doubled coordinates; `(u2, v2)` represents `(u2/2, v2/2)`.
    pub fn from_doubled(u2: i64, v2: i64) -> Self {
        Self { u2, v2 }
    }

    /// Doubled coordinates `(2u, 2v)`.
    pub fn doubled(&self) -> (i64, i64) {
        (self.u2, self.v2)
    }

    /// Integer coordinates, if this is a true lattice point.
    pub fn as_int(&self) -> Option<(i64, i64)> {
        if self.u2 % 2 == 0 && self.v2 % 2 == 0 {
            Some((self.u2 / 2, self.v2 / 2))
        } else {
            None
        }
    }

    /// Whether both coordinates are integers.
    pub fn is_lattice_point(&self) -> bool {
        self.as_int().is_some()
    }

    /// Cartesian coordinates with `e2 = (1/2, sqrt(3)/2)`. Only the renderers
    /// should need this.
    pub fn to_cartesian(&self) -> (f64, f64) {
        let u = self.u2 as f64 / 2.0;
        let v = self.v2 as f64 / 2.0;
        (u + v / 2.0, v * 3f64.sqrt() / 2.0)
    }
}

impl Add for LatticeVec {
    type Output = LatticeVec;
    fn add(self, rhs: LatticeVec) -> LatticeVec {
        LatticeVec::from_doubled(self.u2 + rhs.u2, self.v2 + rhs.v2)
    }
}

impl Sub for LatticeVec {
    type Output = LatticeVec;
    fn sub(self, rhs: LatticeVec) -> LatticeVec {
        LatticeVec::from_doubled(self.u2 - rhs.u2, self.v2 - rhs.v2)
    }
}

impl Neg for LatticeVec {
    type Output = LatticeVec;
    fn neg(self) -> LatticeVec {
        LatticeVec::from_doubled(-self.u2, -self.v2)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x2: i64, f: &mut fmt::Formatter<'_>| {
            if x2 % 2 == 0 {
                write!(f, "{}", x2 / 2)
            } else {
                write!(f, "{}/2", x2)
            }
        };
        write!(f, "(")?;
        show(self.u2, f)?;
        write!(f, ", ")?;
        show(self.v2, f)?;
        write!(f, ")")
    }
}

/// Orientation of a unit triangle. `Down` sorts before `Up`, which together
/// with the `(v, u)` key fixes the canonical cell order used by the dual
/// graph, the sweep counter, and the JSON schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orient {
    Down,
    Up,
}

impl Orient {
    pub fn flipped(self) -> Orient {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// One cell of the triangular lattice.
///
/// An up-pointing cell at `(u, v)` has corners `(u,v)`, `(u+1,v)`, `(u,v+1)`;
/// the down-pointing cell at `(u, v)` has corners `(u+1,v)`, `(u,v+1)`,
/// `(u+1,v+1)`. The two together tile the rhombus spanned by `e1` and `e2`
/// based at `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitTriangle {
    pub u: i64,
    pub v: i64,
    pub orient: Orient,
}

impl UnitTriangle {
    pub fn up(u: i64, v: i64) -> Self {
        Self {
            u,
            v,
            orient: Orient::Up,
        }
    }

    pub fn down(u: i64, v: i64) -> Self {
        Self {
            u,
            v,
            orient: Orient::Down,
        }
    }

    /// The three corners, starting from `(u,v)` for up cells and `(u+1,v)`
    /// for down cells.
    pub fn corners(&self) -> [LatticeVec; 3] {
        let (u, v) = (self.u, self.v);
        match self.orient {
            Orient::Up => [
                LatticeVec::new(u, v),
                LatticeVec::new(u + 1, v),
                LatticeVec::new(u, v + 1),
            ],
            Orient::Down => [
                LatticeVec::new(u + 1, v),
                LatticeVec::new(u, v + 1),
                LatticeVec::new(u + 1, v + 1),
            ],
        }
    }

    /// Centroid, in sixths of a lattice step: `(3*(2u)+c, 3*(2v)+c)` pattern
    /// avoided; returns exact sixths as a pair of numerators over 3.
    /// Up centroid is `(u + 1/3, v + 1/3)`, down is `(u + 2/3, v + 2/3)`.
    pub fn centroid_thirds(&self) -> (i64, i64) {
        match self.orient {
            Orient::Up => (3 * self.u + 1, 3 * self.v + 1),
            Orient::Down => (3 * self.u + 2, 3 * self.v + 2),
        }
    }

    /// The up to three edge-adjacent cells, all of opposite orientation.
    /// For an up cell: the down cells at `(u,v)`, `(u-1,v)`, `(u,v-1)`.
    /// For a down cell: the up cells at `(u,v)`, `(u+1,v)`, `(u,v+1)`.
    pub fn edge_neighbors(&self) -> [UnitTriangle; 3] {
        let (u, v) = (self.u, self.v);
        match self.orient {
            Orient::Up => [
                UnitTriangle::down(u, v),
                UnitTriangle::down(u - 1, v),
                UnitTriangle::down(u, v - 1),
            ],
            Orient::Down => [
                UnitTriangle::up(u, v),
                UnitTriangle::up(u + 1, v),
                UnitTriangle::up(u, v + 1),
            ],
        }
    }

    fn sort_key(&self) -> (i64, i64, Orient) {
        (self.v, self.u, self.orient)
    }
}

impl PartialOrd for UnitTriangle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UnitTriangle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for UnitTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orient {
            Orient::Up => "Up",
            Orient::Down => "Down",
        };
        write!(f, "{}({},{})", tag, self.u, self.v)
    }
}

/// A region transform that maps lattice cells to lattice cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionTransform {
    /// Rotation by 180 degrees about `center` (a lattice or half-lattice point).
    Rotate180 { center: LatticeVec },
    /// Reflection across the horizontal line `v = line_v2 / 2`. Only even
    /// `line_v2` (a true lattice line) maps cells to cells.
    MirrorHorizontal { line_v2: i64 },
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("transform does not map cells to lattice cells: mirror line v = {line_v2}/2 is not a lattice line")]
    NonLatticeTransform { line_v2: i64 },
}

/// A finite set of unit triangles with set semantics and a canonical cell
/// order (by `(v, u, orient)`, down before up).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriRegion {
    cells: BTreeSet<UnitTriangle>,
}

impl TriRegion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cells<I: IntoIterator<Item = UnitTriangle>>(cells: I) -> Self {
        Self {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: &UnitTriangle) -> bool {
        self.cells.contains(cell)
    }

    /// Cells in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &UnitTriangle> {
        self.cells.iter()
    }

    pub fn up_count(&self) -> usize {
        self.cells.iter().filter(|c| c.orient == Orient::Up).count()
    }

    pub fn down_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| c.orient == Orient::Down)
            .count()
    }

    /// Number of up cells minus number of down cells. A region with nonzero
    /// balance has no lozenge tiling.
    pub fn balance(&self) -> i64 {
        self.cells
            .iter()
            .map(|c| match c.orient {
                Orient::Up => 1,
                Orient::Down => -1,
            })
            .sum()
    }

    /// Set difference; used to carve holes out of a region.
    pub fn without(&self, other: &TriRegion) -> TriRegion {
        TriRegion {
            cells: self.cells.difference(&other.cells).copied().collect(),
        }
    }

    pub fn is_subset_of(&self, other: &TriRegion) -> bool {
        self.cells.is_subset(&other.cells)
    }

    /// Image of the region under a transform. The image has the same number
    /// of cells with up and down counts swapped.
    pub fn transform(&self, t: RegionTransform) -> Result<TriRegion, TransformError> {
        match t {
            RegionTransform::Rotate180 { center } => {
                let (cu2, cv2) = center.doubled();
                Ok(TriRegion::from_cells(self.cells.iter().map(|c| {
                    UnitTriangle {
                        u: cu2 - c.u - 1,
                        v: cv2 - c.v - 1,
                        orient: c.orient.flipped(),
                    }
                })))
            }
            RegionTransform::MirrorHorizontal { line_v2 } => {
                if line_v2 % 2 != 0 {
                    return Err(TransformError::NonLatticeTransform { line_v2 });
                }
                let line = line_v2 / 2;
                Ok(TriRegion::from_cells(self.cells.iter().map(
                    |c| match c.orient {
                        Orient::Up => UnitTriangle::down(c.u + c.v - line, 2 * line - c.v - 1),
                        Orient::Down => UnitTriangle::up(c.u + c.v + 1 - line, 2 * line - c.v - 1),
                    },
                )))
            }
        }
    }

    /// Bipartite dual graph: one node per cell, one edge per shared lattice
    /// edge. Node and edge orderings are deterministic.
    pub fn dual_graph(&self) -> DualGraph {
        let ups: Vec<UnitTriangle> = self
            .cells
            .iter()
            .copied()
            .filter(|c| c.orient == Orient::Up)
            .collect();
        let downs: Vec<UnitTriangle> = self
            .cells
            .iter()
            .copied()
            .filter(|c| c.orient == Orient::Down)
            .collect();
        let down_index: std::collections::HashMap<UnitTriangle, usize> =
            downs.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut edges = Vec::new();
        for (ui, up) in ups.iter().enumerate() {
            for nbr in up.edge_neighbors() {
                if let Some(&di) = down_index.get(&nbr) {
                    edges.push((ui, di));
                }
            }
        }
        DualGraph { ups, downs, edges }
    }
}

impl FromIterator<UnitTriangle> for TriRegion {
    fn from_iter<I: IntoIterator<Item = UnitTriangle>>(iter: I) -> Self {
        Self::from_cells(iter)
    }
}

/// Planar bipartite dual graph of a region. `ups` and `downs` are in
/// canonical `(v, u)` order; `edges` pairs indices into them, listed per up
/// node in the fixed neighbor order (same rhombus, west, south).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub ups: Vec<UnitTriangle>,
    pub downs: Vec<UnitTriangle>,
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn node_count(&self) -> usize {
        self.ups.len() + self.downs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

// JSON interchange schema: {"triangles":[{"u":..,"v":..,"orient":"up"|"down"},..]}
// with triangles in canonical (v, u, orient) order.
impl Serialize for TriRegion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            triangles: Vec<&'a UnitTriangle>,
        }
        Doc {
            triangles: self.cells.iter().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TriRegion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            triangles: Vec<UnitTriangle>,
        }
        let doc = Doc::deserialize(deserializer)?;
        let region = TriRegion::from_cells(doc.triangles.iter().copied());
        if region.len() != doc.triangles.len() {
            return Err(D::Error::custom("duplicate triangles in region"));
        }
        Ok(region)
    }
}
