//! Shared helpers for the integration tests: an independent brute-force
//! matching counter (plain backtracking over the dual graph, no profile
//! sweep, no determinant) and grid enumeration helpers.

// Not every test binary uses every helper here.
#![allow(dead_code)]

use fernhex::{FernSpec, TriRegion};

/// Exact number of perfect matchings by exhaustive backtracking. Exponential;
/// keep instances at roughly 16 up cells or fewer.
pub fn brute_force_count(region: &TriRegion) -> u128 {
    let graph = region.dual_graph();
    if graph.ups.len() != graph.downs.len() {
        return 0;
    }
    let n = graph.ups.len();
    let mut adjacency = vec![Vec::new(); n];
    for &(u, d) in &graph.edges {
        adjacency[u].push(d);
    }
    fn recurse(i: usize, adjacency: &[Vec<usize>], used: &mut [bool]) -> u128 {
        if i == adjacency.len() {
            return 1;
        }
        let mut total = 0;
        for &d in &adjacency[i] {
            if !used[d] {
                used[d] = true;
                total += recurse(i + 1, adjacency, used);
                used[d] = false;
            }
        }
        total
    }
    let mut used = vec![false; n];
    recurse(0, &adjacency, &mut used)
}

/// All lobe lists with `1..=max_len` entries in `0..=max_entry`.
pub fn all_lobe_lists(max_len: usize, max_entry: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    let mut frontier: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for list in &frontier {
            for entry in 0..=max_entry {
                let mut grown = list.clone();
                grown.push(entry);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.retain(|l| !l.is_empty());
    out
}

pub fn all_ferns(max_len: usize, max_entry: u32) -> Vec<FernSpec> {
    all_lobe_lists(max_len, max_entry)
        .into_iter()
        .map(|lobes| FernSpec::new(lobes).expect("nonempty"))
        .collect()
}
