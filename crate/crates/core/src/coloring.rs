//! Red/blue 2-colorings of K_{m,n} and detection of monochromatic
//! complete bipartite subgraphs.
//!
//! A coloring stores only the red side: row `i` is the red neighborhood of
//! X-vertex `i` as a [`YSet`]. The blue neighborhood is by definition the
//! complement within `[0, n)` and is never stored.

use std::ops::ControlFlow;

use crate::combi::for_each_combination;
use crate::error::CoreError;
use crate::spec::ProblemSpec;
use crate::yset::{YSet, Y_CAPACITY};

/// A 2-coloring of K_{m,n}, stored as m red-neighborhood rows.
///
/// Immutable after construction; cheap to clone and safe to share across
/// search workers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    m: usize,
    n: usize,
    rows: Vec<YSet>,
}

/// Minimum k-subset union statistic: the smallest `|∪_{i∈S} rows[i]|` over
/// all k-subsets S of X, with the lexicographically least witnessing subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinUnion {
    pub k: usize,
    pub value: usize,
    pub subset: Vec<usize>,
}

/// Everything the verifier measures about a coloring against a spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// A red K_{a,a} copy (X-subset, Y-subset), if one exists.
    pub red_copy: Option<(Vec<usize>, Vec<usize>)>,
    /// A blue K_{s,s} copy (X-subset, Y-subset), if one exists.
    pub blue_copy: Option<(Vec<usize>, Vec<usize>)>,
    /// m x m matrix of red-row intersection sizes; `pairwise[i][i]` is the
    /// degree of row i.
    pub pairwise: Vec<Vec<usize>>,
    /// Minimum union over s-subsets of X, when s <= m.
    pub min_union_k: Option<MinUnion>,
    /// Maximum red degree over X.
    pub max_red_degree: usize,
}

impl VerifyReport {
    /// A coloring is good exactly when both monochromatic copies are absent.
    pub fn is_good(&self) -> bool {
        self.red_copy.is_none() && self.blue_copy.is_none()
    }
}

impl Coloring {
    /// Builds a coloring from explicit 0-based red index rows.
    pub fn build(m: usize, n: usize, rows: &[Vec<usize>]) -> Result<Self, CoreError> {
        if n > Y_CAPACITY {
            return Err(CoreError::CapacityExceeded {
                n,
                capacity: Y_CAPACITY,
            });
        }
        if rows.len() != m {
            return Err(CoreError::RowCountMismatch {
                expected: m,
                got: rows.len(),
            });
        }
        let mut sets = Vec::with_capacity(m);
        for (row, indices) in rows.iter().enumerate() {
            let mut set = YSet::empty();
            for &index in indices {
                if index >= n {
                    return Err(CoreError::IndexOutOfRange { row, index, n });
                }
                set.insert(index);
            }
            sets.push(set);
        }
        Ok(Coloring { m, n, rows: sets })
    }

    /// Builds from ready-made bit rows; every set bit must be below `n`.
    pub fn from_rows(m: usize, n: usize, rows: Vec<YSet>) -> Result<Self, CoreError> {
        if n > Y_CAPACITY {
            return Err(CoreError::CapacityExceeded {
                n,
                capacity: Y_CAPACITY,
            });
        }
        if rows.len() != m {
            return Err(CoreError::RowCountMismatch {
                expected: m,
                got: rows.len(),
            });
        }
        for (row, set) in rows.iter().enumerate() {
            if set.max_bound() > n {
                return Err(CoreError::IndexOutOfRange {
                    row,
                    index: set.max_bound() - 1,
                    n,
                });
            }
        }
        Ok(Coloring { m, n, rows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[YSet] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &YSet {
        &self.rows[i]
    }

    pub fn is_red(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// Red degree of X-vertex `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].len()
    }

    /// Maximum red degree over the X part.
    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// The coloring with red and blue swapped.
    pub fn complement(&self) -> Coloring {
        Coloring {
            m: self.m,
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.complement_within(self.n))
                .collect(),
        }
    }

    /// Searches for a red K_{a,b}: `a` X-vertices and `b` Y-vertices with all
    /// `a*b` edges red. Returns the first copy in lexicographic order over
    /// a-subsets of X (with the `b` smallest common neighbors), or `None`.
    ///
    /// Total: out-of-range `a` or `b` simply yields `None`. Cost is one
    /// bitset intersection chain per a-subset of X.
    pub fn find_red_k(&self, a: usize, b: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if a > self.m || b > self.n {
            return None;
        }
        let mut found = None;
        for_each_combination(self.m, a, |xs| {
            let mut common = YSet::full(self.n);
            for &x in xs {
                common = common.intersection(&self.rows[x]);
                if common.len() < b {
                    return ControlFlow::Continue(());
                }
            }
            found = Some((xs.to_vec(), common.smallest(b)));
            ControlFlow::Break(())
        });
        found
    }

    /// Searches for a blue K_{s,t}: an s-subset S of X leaving at least `t`
    /// Y-vertices outside `∪_{i∈S} rows[i]`. Returns the lexicographically
    /// least such S with the `t` smallest uncovered Y-indices, or `None`.
    pub fn find_blue_k(&self, s: usize, t: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if s > self.m || t > self.n {
            return None;
        }
        let mut found = None;
        for_each_combination(self.m, s, |xs| {
            let mut union = YSet::empty();
            for &x in xs {
                union.union_with(&self.rows[x]);
            }
            if self.n - union.len() >= t {
                let uncovered = union.complement_within(self.n);
                found = Some((xs.to_vec(), uncovered.smallest(t)));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        found
    }

    /// Minimum `|∪_{i∈S} rows[i]|` over k-subsets S of X, with the first
    /// (lexicographically least) witnessing subset.
    pub fn min_union(&self, k: usize) -> Result<MinUnion, CoreError> {
        if k < 1 || k > self.m {
            return Err(CoreError::BadK { k, m: self.m });
        }
        let mut best: Option<MinUnion> = None;
        for_each_combination(self.m, k, |xs| {
            let mut union = YSet::empty();
            for &x in xs {
                union.union_with(&self.rows[x]);
            }
            let value = union.len();
            if best.as_ref().is_none_or(|b| value < b.value) {
                best = Some(MinUnion {
                    k,
                    value,
                    subset: xs.to_vec(),
                });
            }
            ControlFlow::Continue(())
        });
        Ok(best.expect("k <= m guarantees at least one subset"))
    }

    /// Full verification against a spec: monochromatic copies of both
    /// targets, the pairwise intersection matrix, the max red degree, and
    /// the minimum s-subset union. Pure; identical inputs give identical
    /// reports.
    pub fn verify(&self, spec: &ProblemSpec) -> Result<VerifyReport, CoreError> {
        if self.m != spec.m || self.n != spec.n {
            return Err(CoreError::SpecMismatch {
                want_m: spec.m,
                want_n: spec.n,
                got_m: self.m,
                got_n: self.n,
            });
        }
        let mut pairwise = vec![vec![0usize; self.m]; self.m];
        for i in 0..self.m {
            pairwise[i][i] = self.rows[i].len();
            for j in i + 1..self.m {
                let c = self.rows[i].intersection_len(&self.rows[j]);
                pairwise[i][j] = c;
                pairwise[j][i] = c;
            }
        }
        let min_union_k = if spec.s <= self.m {
            Some(self.min_union(spec.s)?)
        } else {
            None
        };
        Ok(VerifyReport {
            red_copy: self.find_red_k(spec.a, spec.a),
            blue_copy: self.find_blue_k(spec.s, spec.s),
            pairwise,
            min_union_k,
            max_red_degree: self.max_degree(),
        })
    }
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Coloring {}x{}", self.m, self.n)?;
        for r in &self.rows {
            writeln!(f, "  {:?}", r)?;
        }
        Ok(())
    }
}
