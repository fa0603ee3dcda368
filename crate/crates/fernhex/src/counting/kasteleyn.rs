//! Matching count as the absolute determinant of a signed biadjacency
//! matrix. The signs come from an orientation in which every bounded face of
//! the embedded dual graph is clockwise-odd; the orientation is found by
//! solving one parity constraint per bounded face over GF(2), which stays
//! correct when holes or dents make faces non-hexagonal, and for regions
//! whose dual graph is disconnected. The determinant is evaluated by
//! fraction-free elimination over exact integers.

use crate::geometry::{Orient, TriRegion, UnitTriangle};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Exact tiling count via the signed determinant. Returns 0 when the region
/// has unequal numbers of up and down cells.
pub fn count_kasteleyn(region: &TriRegion) -> BigUint {
    let graph = region.dual_graph();
    let n = graph.ups.len();
    if n != graph.downs.len() {
        return BigUint::zero();
    }
    if n == 0 {
        return BigUint::one();
    }

    // Global node ids: ups first, then downs.
    let up_id: HashMap<UnitTriangle, usize> =
        graph.ups.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let down_id: HashMap<UnitTriangle, usize> = graph
        .downs
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, n + i))
        .collect();
    let node_of = |cell: &UnitTriangle| -> Option<usize> {
        match cell.orient {
            Orient::Up => up_id.get(cell).copied(),
            Orient::Down => down_id.get(cell).copied(),
        }
    };
    let cells: Vec<UnitTriangle> = graph
        .ups
        .iter()
        .chain(graph.downs.iter())
        .copied()
        .collect();

    // Counterclockwise neighbor order around each node: the three possible
    // neighbor directions are fixed (30, 150, 270 degrees around an up cell;
    // 90, 210, 330 around a down cell), so the rotation system is a fixed
    // angle-sorted list filtered by presence.
    let ccw_candidates = |c: &UnitTriangle| -> [UnitTriangle; 3] {
        let (u, v) = (c.u, c.v);
        match c.orient {
            Orient::Up => [
                UnitTriangle::down(u, v),
                UnitTriangle::down(u - 1, v),
                UnitTriangle::down(u, v - 1),
            ],
            Orient::Down => [
                UnitTriangle::up(u, v + 1),
                UnitTriangle::up(u, v),
                UnitTriangle::up(u + 1, v),
            ],
        }
    };
    let nbrs: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| ccw_candidates(c).iter().filter_map(&node_of).collect())
        .collect();

    let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new(); // (up id, down id - n)
    for &(ui, di) in &graph.edges {
        edge_of.insert((ui, n + di), edges.len());
        edges.push((ui, di));
    }
    let edge_index = |a: usize, b: usize| -> usize {
        let key = if a < b { (a, b) } else { (b, a) };
        edge_of[&key]
    };

    // Trace all faces of the embedding: from the directed edge (a, b) the
    // face continues along (b, c) with c the predecessor of a in the
    // counterclockwise order around b. Bounded faces come out
    // counterclockwise (positive shoelace area).
    let mut next_dir: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for (b, list) in nbrs.iter().enumerate() {
        let len = list.len();
        for (p, &a) in list.iter().enumerate() {
            let c = list[(p + len - 1) % len];
            next_dir.insert((a, b), (b, c));
        }
    }

    let num_edges = edges.len();
    let words = (num_edges + 1).div_ceil(64);
    let rhs_bit = num_edges;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut starts: Vec<(usize, usize)> = next_dir.keys().copied().collect();
    starts.sort_unstable();
    let mut visited: HashMap<(usize, usize), bool> = HashMap::new();
    for start in starts {
        if visited.get(&start).copied().unwrap_or(false) {
            continue;
        }
        let mut row = vec![0u64; words];
        let mut area2 = 0i64; // doubled shoelace area in oblique thirds
        let mut len = 0usize;
        let mut cur = start;
        loop {
            visited.insert(cur, true);
            let (a, b) = cur;
            let e = edge_index(a, b);
            row[e / 64] ^= 1 << (e % 64);
            let (ax, ay) = cells[a].centroid_thirds();
            let (bx, by) = cells[b].centroid_thirds();
            area2 += ax * by - bx * ay;
            len += 1;
            cur = next_dir[&cur];
            if cur == start {
                break;
            }
        }
        if area2 > 0 {
            // Bounded face: odd number of edges oriented against the walk.
            let rhs = 1 ^ ((len / 2) & 1);
            if rhs == 1 {
                row[rhs_bit / 64] ^= 1 << (rhs_bit % 64);
            }
            rows.push(row);
        }
    }

    // Solve for the orientation bits over GF(2); a solution always exists
    // for a planar embedding.
    let flip = solve_gf2(rows, num_edges, words).expect("planar graph has a valid orientation");

    let mut matrix: Vec<Vec<i128>> = vec![vec![0; n]; n];
    for (e, &(ui, di)) in edges.iter().enumerate() {
        matrix[ui][di] = if flip[e] { -1 } else { 1 };
    }

    match bareiss_det_i128(matrix.clone()) {
        Some(det) => BigUint::from(det.unsigned_abs()),
        None => {
            let big: Vec<Vec<BigInt>> = matrix
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            bareiss_det_big(big)
                .abs()
                .to_biguint()
                .expect("abs is nonnegative")
        }
    }
}

/// One solution of the linear system over GF(2); rows carry the right-hand
/// side in bit `num_vars`. Free variables are set to 0.
fn solve_gf2(mut rows: Vec<Vec<u64>>, num_vars: usize, words: usize) -> Option<Vec<bool>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..num_vars {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][col / 64] >> (col % 64) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, r);
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col / 64] >> (col % 64) & 1 == 1 {
                for w in 0..words {
                    row[w] ^= pivot_row[w];
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // Inconsistent only if a zero row has rhs set.
    let rhs_set = |row: &[u64]| row[num_vars / 64] >> (num_vars % 64) & 1 == 1;
    for row in rows.iter().skip(rank) {
        if rhs_set(row) {
            return None;
        }
    }
    let mut x = vec![false; num_vars];
    for &(r, c) in &pivots {
        x[c] = rhs_set(&rows[r]);
    }
    Some(x)
}

/// Fraction-free determinant over i128 with overflow detection; every
/// division in the elimination is exact.
fn bareiss_det_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        let Some(piv) = (k..n).find(|&r| m[r][k] != 0) else {
            return Some(0);
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].checked_mul(m[k][k])?;
                let s = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = t.checked_sub(s)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Some(sign * m[n - 1][n - 1])
}

fn bareiss_det_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
