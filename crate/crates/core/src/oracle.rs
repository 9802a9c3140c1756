//! Exhaustive ground truth on tiny hosts: enumerate all 2^(m*n) red-edge
//! subsets and count the good colorings directly.
//!
//! Deliberately bypasses the bitset machinery in [`crate::coloring`]; rows
//! live in plain `u32` masks so the two paths can cross-validate each other.

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::spec::ProblemSpec;

/// Largest m*n the enumeration accepts.
pub const ORACLE_EDGE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("m*n = {edges} exceeds the enumeration cap {cap}")]
    TooLarge { edges: usize, cap: usize },
}

/// Result of the full enumeration.
#[derive(Clone, Debug)]
pub struct OracleResult {
    /// True when no good coloring exists.
    pub arrows: bool,
    /// Number of good colorings among all 2^(m*n).
    pub good_count: u64,
    /// The good coloring with the least edge bitmask, if any.
    pub example: Option<Coloring>,
}

/// Lists all k-subsets of `0..m` as index vectors, lexicographic.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[inline]
fn mask_rows(mask: u64, m: usize, n: usize) -> [u32; 24] {
    let mut rows = [0u32; 24];
    let row_mask = (1u64 << n) - 1;
    for (i, row) in rows.iter_mut().enumerate().take(m) {
        *row = ((mask >> (i * n)) & row_mask) as u32;
    }
    rows
}

/// True when the coloring given by `mask` avoids both a red K_{a,a} and a
/// blue K_{s,s}.
#[inline]
fn mask_is_good(
    mask: u64,
    m: usize,
    n: usize,
    a_subsets: &[Vec<usize>],
    s_subsets: &[Vec<usize>],
    a: usize,
    s: usize,
) -> bool {
    let rows = mask_rows(mask, m, n);
    let full = (1u32 << n) - 1;
    for xs in a_subsets {
        let mut common = full;
        for &x in xs {
            common &= rows[x];
        }
        if common.count_ones() as usize >= a {
            return false;
        }
    }
    for xs in s_subsets {
        let mut union = 0u32;
        for &x in xs {
            union |= rows[x];
        }
        if n - union.count_ones() as usize >= s {
            return false;
        }
    }
    true
}

/// Decides arrowing by total enumeration. Requires `m*n <= 24`.
///
/// The least-bitmask good coloring is returned as the example, so repeated
/// runs (and parallel runs) agree exactly.
pub fn brute_force_arrow(spec: &ProblemSpec) -> Result<OracleResult, OracleError> {
    let (m, n, a, s) = (spec.m, spec.n, spec.a, spec.s);
    let edges = m * n;
    if edges > ORACLE_EDGE_CAP {
        return Err(OracleError::TooLarge {
            edges,
            cap: ORACLE_EDGE_CAP,
        });
    }
    let a_subsets = subsets(m, a);
    let s_subsets = subsets(m, s);
    let total: u64 = 1u64 << edges;

    // Chunked scan; each chunk reports (good count, least good mask).
    let chunk: u64 = 1 << 16;
    let chunks: u64 = total.div_ceil(chunk);
    let (good_count, least) = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk;
            let hi = total.min(lo + chunk);
            let mut count = 0u64;
            let mut least: Option<u64> = None;
            for mask in lo..hi {
                if mask_is_good(mask, m, n, &a_subsets, &s_subsets, a, s) {
                    count += 1;
                    if least.is_none() {
                        least = Some(mask);
                    }
                }
            }
            (count, least)
        })
        .reduce(
            || (0, None),
            |(c1, l1), (c2, l2)| (c1 + c2, l1.into_iter().chain(l2).min()),
        );

    let example = least.map(|mask| {
        let rows = mask_rows(mask, m, n);
        let rows: Vec<Vec<usize>> = (0..m)
            .map(|i| (0..n).filter(|&j| rows[i] >> j & 1 != 0).collect())
            .collect();
        Coloring::build(m, n, &rows).expect("mask rows are in range")
    });
    Ok(OracleResult {
        arrows: good_count == 0,
        good_count,
        example,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, n: usize, a: usize, s: usize) -> ProblemSpec {
        ProblemSpec::new(m, n, a, s).unwrap()
    }

    #[test]
    fn rejects_hosts_over_the_cap() {
        assert_eq!(
            brute_force_arrow(&spec(5, 5, 2, 2)).unwrap_err(),
            OracleError::TooLarge { edges: 25, cap: 24 }
        );
    }

    #[test]
    fn red_k11_forces_arrowing_on_2x2() {
        // Any red edge is a red K_{1,1}; the all-blue coloring has a blue K_{2,2}.
        let r = brute_force_arrow(&spec(2, 2, 1, 2)).unwrap();
        assert!(r.arrows);
        assert_eq!(r.good_count, 0);
        assert!(r.example.is_none());
    }

    #[test]
    fn k_2_4_admits_good_colorings_for_c4_targets() {
        let r = brute_force_arrow(&spec(2, 4, 2, 2)).unwrap();
        assert!(!r.arrows);
        // Independent count: iterate the two rows directly as u8 masks.
        let mut expected = 0u64;
        for r0 in 0u32..16 {
            for r1 in 0u32..16 {
                let red_ok = (r0 & r1).count_ones() <= 1;
                let blue_ok = (!(r0 | r1) & 0xF).count_ones() <= 1;
                if red_ok && blue_ok {
                    expected += 1;
                }
            }
        }
        assert_eq!(r.good_count, expected);
        let example = r.example.unwrap();
        let s = spec(2, 4, 2, 2);
        assert!(example.verify(&s).unwrap().is_good());
    }

    #[test]
    fn blue_target_larger_than_n_never_appears() {
        // n = 2 < s = 6: the all-blue coloring is already good.
        let r = brute_force_arrow(&spec(6, 2, 2, 6)).unwrap();
        assert!(!r.arrows);
        assert_eq!(r.example.unwrap().max_degree(), 0);
    }

    #[test]
    fn good_count_is_invariant_under_row_permutation() {
        // Count via a permuted goodness check and compare.
        for (m, n, a, s) in [(3, 3, 2, 2), (3, 4, 2, 3), (2, 5, 2, 2)] {
            let base = brute_force_arrow(&spec(m, n, a, s)).unwrap();
            let perm: Vec<usize> = (0..m).rev().collect();
            let a_subsets = subsets(m, a);
            let s_subsets = subsets(m, s);
            let mut permuted_count = 0u64;
            for mask in 0u64..1 << (m * n) {
                // Rebuild the mask with rows permuted.
                let rows = mask_rows(mask, m, n);
                let mut pmask = 0u64;
                for i in 0..m {
                    pmask |= (rows[perm[i]] as u64) << (i * n);
                }
                if mask_is_good(pmask, m, n, &a_subsets, &s_subsets, a, s) {
                    permuted_count += 1;
                }
            }
            assert_eq!(base.good_count, permuted_count, "m={m} n={n} a={a} s={s}");
        }
    }
}
