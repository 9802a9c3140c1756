//! Explicit lower-bound colorings: the star family and the two bundled
//! pairwise-1-intersecting row families on 7x56 and 8x44 hosts.

use crate::coloring::Coloring;
use crate::error::CoreError;
use crate::spec::ProblemSpec;

/// Expected statistics of a named witness, re-derived by the verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessClaims {
    /// Every off-diagonal pairwise intersection equals this.
    pub pairwise: usize,
    /// `min_union(s)` equals this, for the spec's blue order s.
    pub min_union_at_s: usize,
}

/// A bundled coloring together with the spec it certifies and the statistics
/// it is claimed to have.
#[derive(Clone, Debug)]
pub struct NamedWitness {
    pub name: &'static str,
    pub spec: ProblemSpec,
    pub coloring: Coloring,
    pub claims: WitnessClaims,
}

impl NamedWitness {
    /// Re-verifies the stored claims and goodness from scratch.
    pub fn check(&self) -> Result<(), String> {
        let report = self
            .coloring
            .verify(&self.spec)
            .map_err(|e| e.to_string())?;
        if !report.is_good() {
            return Err(format!("{}: not a good coloring", self.name));
        }
        for i in 0..self.spec.m {
            for j in 0..self.spec.m {
                if i != j && report.pairwise[i][j] != self.claims.pairwise {
                    return Err(format!(
                        "{}: pairwise[{i}][{j}] = {}, claimed {}",
                        self.name, report.pairwise[i][j], self.claims.pairwise
                    ));
                }
            }
        }
        let mu = report.min_union_k.as_ref().expect("s <= m for witnesses");
        if mu.value != self.claims.min_union_at_s {
            return Err(format!(
                "{}: min {}–subset union = {}, claimed {}",
                self.name, mu.k, mu.value, self.claims.min_union_at_s
            ));
        }
        Ok(())
    }
}

/// One full red row, the rest all blue: rows[0] = [0, n), rows[i>0] = ∅.
///
/// Good for (m, n, 2, s) exactly when m <= s (given n >= s): the single red
/// star admits no red K_{2,2}, and any s rows must include the full one,
/// which covers every column.
pub fn star_witness(m: usize, n: usize) -> Result<Coloring, CoreError> {
    let mut rows = vec![Vec::new(); m];
    rows[0] = (0..n).collect();
    Coloring::build(m, n, &rows)
}

/// Row listings for the 7x56 witness, 1-based. Each row has 11 entries; any
/// two rows share exactly one column.
const ROWS_7X56: [&[usize]; 7] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    &[1, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21],
    &[2, 12, 22, 23, 24, 25, 26, 27, 28, 29, 30],
    &[3, 13, 22, 31, 32, 33, 34, 35, 36, 37, 38],
    &[4, 14, 23, 31, 39, 40, 41, 42, 43, 44, 45],
    &[5, 15, 24, 32, 39, 46, 47, 48, 49, 50, 51],
    &[6, 16, 25, 33, 40, 46, 52, 53, 54, 55, 56],
];

/// Row listings for the 8x44 witness, 1-based. Each row has 9 entries; any
/// two rows share exactly one column.
const ROWS_8X44: [&[usize]; 8] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9],
    &[1, 10, 11, 12, 13, 14, 15, 16, 17],
    &[2, 10, 18, 19, 20, 21, 22, 23, 24],
    &[3, 11, 18, 25, 26, 27, 28, 29, 30],
    &[4, 12, 19, 25, 31, 32, 33, 34, 35],
    &[5, 13, 20, 26, 31, 36, 37, 38, 39],
    &[6, 14, 21, 27, 32, 36, 40, 41, 42],
    &[7, 15, 22, 28, 33, 37, 40, 43, 44],
];

fn from_one_based(m: usize, n: usize, rows: &[&[usize]]) -> Coloring {
    let rows: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| r.iter().map(|&i| i - 1).collect())
        .collect();
    Coloring::build(m, n, &rows).expect("bundled rows are in range")
}

/// The 7x56 good coloring for (7, 56, 2, 6): no red K_{2,2}, no blue K_{6,6},
/// every 6-subset of rows covering exactly 51 columns.
pub fn witness_7_56() -> NamedWitness {
    NamedWitness {
        name: "a7x56",
        spec: ProblemSpec::new(7, 56, 2, 6).expect("valid"),
        coloring: from_one_based(7, 56, &ROWS_7X56),
        claims: WitnessClaims {
            pairwise: 1,
            min_union_at_s: 51,
        },
    }
}

/// The 8x44 good coloring for (8, 44, 2, 6): no red K_{2,2}, no blue K_{6,6},
/// every 6-subset of rows covering exactly 39 columns.
pub fn witness_8_44() -> NamedWitness {
    NamedWitness {
        name: "b8x44",
        spec: ProblemSpec::new(8, 44, 2, 6).expect("valid"),
        coloring: from_one_based(8, 44, &ROWS_8X44),
        claims: WitnessClaims {
            pairwise: 1,
            min_union_at_s: 39,
        },
    }
}
