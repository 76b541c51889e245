//! Shared helpers and independent oracles for the integration suites.
//!
//! The oracles deliberately re-derive everything through the flattening of a
//! soft set over `(X, A)` into a plain subset of the `|X|·|A|`-cell product,
//! so they share no code path with the library's rowwise implementation.

// each test binary uses a different subset of these helpers
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::Arc;

use soft_topology::explorer::EnumerationSpec;
use soft_topology::{SoftSet, SoftSpace, SoftTopology, Universe};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every shape with at most four cells; together with exhaustive mode this
/// is "all soft topologies with |X|·|A| <= 4".
pub fn small_shapes() -> Vec<(usize, usize)> {
    vec![(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (2, 2), (4, 1)]
}

pub fn all_small_spaces() -> Vec<SoftSpace> {
    let mut out = Vec::new();
    for (points, params) in small_shapes() {
        let spec = EnumerationSpec::exhaustive(points, params);
        out.extend(soft_topology::enumerate_spaces(&spec).unwrap());
    }
    out
}

/// Independent flattening: cell `(a, x)` becomes bit `a * |X| + x`.
pub fn flatten(s: &SoftSet) -> u64 {
    let width = s.universe().point_count();
    s.rows()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (a, &row)| acc | row << (a * width))
}

/// Classical point-set topology check on a family of flattened masks.
pub fn is_point_set_topology(masks: &[u64], cells: usize) -> bool {
    let full = if cells >= 64 { u64::MAX } else { (1u64 << cells) - 1 };
    let set: HashSet<u64> = masks.iter().copied().collect();
    if !set.contains(&0) || !set.contains(&full) {
        return false;
    }
    for &s in &set {
        for &t in &set {
            if !set.contains(&(s | t)) || !set.contains(&(s & t)) {
                return false;
            }
        }
    }
    true
}

/// Count the topologies on an `n`-element set by filtering every family of
/// subsets; only feasible for `n <= 4` and used as the ground-truth count.
pub fn brute_force_topology_count(n: usize) -> usize {
    assert!(n <= 4);
    let num_subsets = 1usize << n;
    let full = num_subsets - 1;
    let mut count = 0;
    for fam in 0..(1u64 << num_subsets) {
        if fam & 1 == 0 || fam >> full & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..num_subsets).filter(|&s| fam >> s & 1 == 1).collect();
        let mut ok = true;
        'pairs: for (idx, &s) in members.iter().enumerate() {
            for &t in &members[idx + 1..] {
                if fam >> (s | t) & 1 == 0 || fam >> (s & t) & 1 == 0 {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            count += 1;
        }
    }
    count
}

/// Rebuild the space with points and parameters permuted: the new space is
/// homeomorphic to the old one by construction.
pub fn relabel(sp: &SoftSpace, point_perm: &[usize], param_perm: &[usize]) -> SoftSpace {
    let universe = sp.universe();
    let opens: Vec<SoftSet> = sp
        .opens()
        .iter()
        .map(|open| {
            let rows: Vec<Vec<&str>> = (0..universe.param_count())
                .map(|b| {
                    let old_row = open.row(param_perm[b]);
                    (0..universe.point_count())
                        .filter(|&x| old_row >> point_perm[x] & 1 == 1)
                        .map(|x| universe.point_label(x))
                        .collect()
                })
                .collect();
            let slices: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
            SoftSet::from_label_rows(universe, &slices).unwrap()
        })
        .collect();
    SoftSpace::new(SoftTopology::validated(universe, opens).unwrap())
}

/// Deterministic permutation from a seed, Fisher-Yates with a tiny LCG.
pub fn seeded_permutation(len: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..len).collect();
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
    for i in (1..len).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        perm.swap(i, j);
    }
    perm
}

/// The bundled fixture spaces, via their generated closures.
pub fn fixture_spaces() -> Vec<SoftSpace> {
    let dir = corpus_dir();
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let doc = soft_topology::SpaceDocument::from_json(&text).unwrap();
            doc.to_space_generated().unwrap().0
        })
        .collect()
}

/// Tiny universe for handwritten cases.
pub fn u3() -> Arc<Universe> {
    Universe::new(["x", "y", "z"], ["a1", "a2"]).unwrap()
}
