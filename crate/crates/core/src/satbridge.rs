//! DIMACS CNF export of the arrowing decision, model decoding, and a
//! counterexample-guided loop around an external file-based solver.
//!
//! Variable `x*n + y + 1` is true exactly when edge (x, y) is red. The full
//! encoding forbids all-red a×a blocks and all-blue s×s blocks outright; the
//! red-only encoding keeps just the red constraints so the blue side can be
//! supplied lazily as blocking clauses ([`cegar`]).

use std::io::Write;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::combi::{binomial, for_each_combination};
use crate::coloring::Coloring;
use crate::error::CoreError;
use crate::search::{Budget, SearchOutcome, SearchStats, SearchStatus};
use crate::spec::ProblemSpec;

/// Clause-count cap for a single encoding.
pub const ENCODING_CLAUSE_CAP: u64 = 10_000_000;

/// Environment variable holding the default solver command template.
pub const SOLVER_ENV: &str = "BRAMSEY_SOLVER_CMD";

#[derive(Debug, Error)]
pub enum SatError {
    #[error("the encoding would need about {clauses} clauses, over the cap {cap}; use the CEGAR loop")]
    EncodingTooLarge { clauses: u64, cap: u64 },

    #[error("model leaves edge variable {var} unassigned")]
    IncompleteModel { var: usize },

    #[error("model mentions variable {var}, outside 1..={num_vars}")]
    UnknownVariable { var: i64, num_vars: usize },

    #[error("solver failed: {reason}")]
    SolverFailure { reason: String },

    #[error("no solver configured: set {SOLVER_ENV} or pass a command template")]
    NoSolver,

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EncodeMode {
    /// Red and blue constraints; models are exactly the good colorings.
    Full,
    /// Red constraints only; models are the red-K_{a,a}-free colorings.
    RedOnly,
}

/// A propositional encoding of one arrowing instance.
#[derive(Clone, Debug)]
pub struct CnfDoc {
    pub spec: ProblemSpec,
    pub mode: EncodeMode,
    /// Dense variable ids 1..=num_vars; ids above m*n are symmetry
    /// auxiliaries.
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfDoc {
    /// Edge variables are row-major: var(x, y) = x*n + y + 1.
    pub fn var_id(&self, x: usize, y: usize) -> i32 {
        debug_assert!(x < self.spec.m && y < self.spec.n);
        (x * self.spec.n + y + 1) as i32
    }

    /// Inverse of [`CnfDoc::var_id`] for edge variables; `None` for
    /// auxiliaries.
    pub fn edge_of(&self, var: i32) -> Option<(usize, usize)> {
        let v = var as usize;
        if var < 1 || v > self.spec.m * self.spec.n {
            return None;
        }
        Some(((v - 1) / self.spec.n, (v - 1) % self.spec.n))
    }

    pub fn num_edge_vars(&self) -> usize {
        self.spec.m * self.spec.n
    }

    /// Writes the standard DIMACS form with a `c spec m n a s` comment.
    pub fn write_dimacs(&self, w: &mut impl Write) -> std::io::Result<()> {
        self.write_dimacs_with(w, &[])
    }

    /// As [`CnfDoc::write_dimacs`], appending extra clauses after the fixed
    /// ones (the CEGAR loop passes its accumulated blocking clauses here).
    pub fn write_dimacs_with(
        &self,
        w: &mut impl Write,
        extra: &[Vec<i32>],
    ) -> std::io::Result<()> {
        let spec = self.spec;
        writeln!(w, "c spec {} {} {} {}", spec.m, spec.n, spec.a, spec.s)?;
        writeln!(
            w,
            "p cnf {} {}",
            self.num_vars,
            self.clauses.len() + extra.len()
        )?;
        for clause in self.clauses.iter().chain(extra) {
            for lit in clause {
                write!(w, "{lit} ")?;
            }
            writeln!(w, "0")?;
        }
        Ok(())
    }
}

/// Encodes the instance with symmetry breaking off.
pub fn encode_cnf(spec: &ProblemSpec, mode: EncodeMode) -> Result<CnfDoc, SatError> {
    encode_cnf_opts(spec, mode, false)
}

/// Encodes the instance. `symmetry` adds auxiliary-variable clauses forcing
/// adjacent rows into nonincreasing lexicographic order (column 0 most
/// significant); row permutations preserve goodness, so satisfiability is
/// unchanged.
pub fn encode_cnf_opts(
    spec: &ProblemSpec,
    mode: EncodeMode,
    symmetry: bool,
) -> Result<CnfDoc, SatError> {
    let spec = ProblemSpec::new(spec.m, spec.n, spec.a, spec.s).map_err(SatError::Core)?;
    let (m, n, a, s) = (spec.m, spec.n, spec.a, spec.s);

    let red_clauses = binomial(m, a).saturating_mul(binomial(n, a));
    let blue_clauses = binomial(m, s).saturating_mul(binomial(n, s));
    let planned = match mode {
        EncodeMode::Full => red_clauses.saturating_add(blue_clauses),
        EncodeMode::RedOnly => red_clauses,
    };
    if planned > ENCODING_CLAUSE_CAP {
        return Err(SatError::EncodingTooLarge {
            clauses: planned,
            cap: ENCODING_CLAUSE_CAP,
        });
    }

    let mut doc = CnfDoc {
        spec,
        mode,
        num_vars: m * n,
        clauses: Vec::new(),
    };

    // Red freeness: no a-subset x a-subset block is entirely red.
    for_each_combination(m, a, |xs| {
        let xs = xs.to_vec();
        for_each_combination(n, a, |ys| {
            let mut clause = Vec::with_capacity(a * a);
            for &x in &xs {
                for &y in ys {
                    clause.push(-doc.var_id(x, y));
                }
            }
            doc.clauses.push(clause);
            ControlFlow::Continue(())
        });
        ControlFlow::Continue(())
    });

    // Blue freeness: every s-subset x s-subset block has a red edge.
    if mode == EncodeMode::Full {
        for_each_combination(m, s, |xs| {
            let xs = xs.to_vec();
            for_each_combination(n, s, |ys| {
                let mut clause = Vec::with_capacity(s * s);
                for &x in &xs {
                    for &y in ys {
                        clause.push(doc.var_id(x, y));
                    }
                }
                doc.clauses.push(clause);
                ControlFlow::Continue(())
            });
            ControlFlow::Continue(())
        });
    }

    if symmetry {
        add_lex_row_ordering(&mut doc);
    }
    Ok(doc)
}

/// For each adjacent row pair, auxiliary variables e_k ("the two rows agree
/// on columns 0..=k") enforce row_i >=_lex row_{i+1}.
fn add_lex_row_ordering(doc: &mut CnfDoc) {
    let (m, n) = (doc.spec.m, doc.spec.n);
    for i in 0..m.saturating_sub(1) {
        let b = |y: usize| doc.var_id(i, y);
        let c = |y: usize| doc.var_id(i + 1, y);
        if n == 1 {
            doc.clauses.push(vec![b(0), -c(0)]);
            continue;
        }
        // e_k for k in 0..n-1, freshly numbered after everything so far.
        let e0 = doc.num_vars as i32 + 1;
        doc.num_vars += n - 1;
        let e = |k: usize| e0 + k as i32;

        // Position 0: forbid b < c outright, then define e_0.
        doc.clauses.push(vec![b(0), -c(0)]);
        doc.clauses.push(vec![-e(0), -b(0), c(0)]);
        doc.clauses.push(vec![-e(0), b(0), -c(0)]);
        doc.clauses.push(vec![e(0), b(0), c(0)]);
        doc.clauses.push(vec![e(0), -b(0), -c(0)]);
        for k in 1..n {
            // If the prefix agrees, forbid b < c at position k.
            doc.clauses.push(vec![-e(k - 1), b(k), -c(k)]);
            if k < n - 1 {
                // e_k <-> e_{k-1} and (b_k <-> c_k).
                doc.clauses.push(vec![-e(k), e(k - 1)]);
                doc.clauses.push(vec![-e(k), -b(k), c(k)]);
                doc.clauses.push(vec![-e(k), b(k), -c(k)]);
                doc.clauses.push(vec![e(k), -e(k - 1), b(k), c(k)]);
                doc.clauses.push(vec![e(k), -e(k - 1), -b(k), -c(k)]);
            }
        }
    }
}

/// Rebuilds the coloring named by a total assignment over the doc's edge
/// variables. Auxiliary variables may appear and are ignored.
pub fn decode_model(
    doc: &CnfDoc,
    assignment: &[i64],
    spec: &ProblemSpec,
) -> Result<Coloring, SatError> {
    if doc.spec.m != spec.m || doc.spec.n != spec.n {
        return Err(SatError::Core(CoreError::SpecMismatch {
            want_m: spec.m,
            want_n: spec.n,
            got_m: doc.spec.m,
            got_n: doc.spec.n,
        }));
    }
    let edge_vars = doc.num_edge_vars();
    let mut seen = vec![false; edge_vars + 1];
    let mut rows = vec![Vec::new(); spec.m];
    for &lit in assignment {
        let var = lit.unsigned_abs();
        if lit == 0 || var > doc.num_vars as u64 {
            return Err(SatError::UnknownVariable {
                var: lit,
                num_vars: doc.num_vars,
            });
        }
        let var = var as usize;
        if var <= edge_vars {
            seen[var] = true;
            if lit > 0 {
                let (x, y) = doc.edge_of(var as i32).expect("edge var");
                rows[x].push(y);
            }
        }
    }
    if let Some(var) = (1..=edge_vars).find(|&v| !seen[v]) {
        return Err(SatError::IncompleteModel { var });
    }
    Coloring::build(spec.m, spec.n, &rows).map_err(SatError::Core)
}

/// What an external solver said about one CNF file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverVerdict {
    Sat(Vec<i64>),
    Unsat,
}

/// An external DIMACS solver reached through a command template and the
/// conventional `s SATISFIABLE` / `s UNSATISFIABLE` + `v ...` output lines.
#[derive(Clone, Debug)]
pub struct SolverHarness {
    /// Shell command with a `{cnf_path}` placeholder (appended as a final
    /// argument when the placeholder is missing).
    pub command: String,
    pub timeout: Duration,
}

impl SolverHarness {
    pub fn new(command: impl Into<String>) -> Self {
        SolverHarness {
            command: command.into(),
            timeout: Duration::from_secs(3600),
        }
    }

    /// Reads the command template from `BRAMSEY_SOLVER_CMD`.
    pub fn from_env() -> Option<Self> {
        std::env::var(SOLVER_ENV).ok().map(SolverHarness::new)
    }

    /// Runs the solver on an existing DIMACS file.
    pub fn run_file(&self, cnf_path: &Path) -> Result<SolverVerdict, SatError> {
        let path_str = cnf_path.display().to_string();
        let cmdline = if self.command.contains("{cnf_path}") {
            self.command.replace("{cnf_path}", &path_str)
        } else {
            format!("{} {}", self.command, path_str)
        };
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(&cmdline)
            .stdin(Stdio::null())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| SatError::SolverFailure {
                reason: format!("spawn `{cmdline}`: {e}"),
            })?;

        let started = Instant::now();
        loop {
            match child.try_wait() {
                Ok(Some(_)) => break,
                Ok(None) => {
                    if started.elapsed() > self.timeout {
                        let _ = child.kill();
                        let _ = child.wait();
                        return Err(SatError::SolverFailure {
                            reason: format!("timed out after {:?}", self.timeout),
                        });
                    }
                    std::thread::sleep(Duration::from_millis(2));
                }
                Err(e) => {
                    return Err(SatError::SolverFailure {
                        reason: format!("wait: {e}"),
                    })
                }
            }
        }
        let output = child.wait_with_output().map_err(|e| SatError::SolverFailure {
            reason: format!("collect output: {e}"),
        })?;
        let stdout = String::from_utf8_lossy(&output.stdout);
        parse_solver_output(&stdout).ok_or_else(|| SatError::SolverFailure {
            reason: format!(
                "no s-line in solver output (exit {:?}, first line {:?})",
                output.status.code(),
                stdout.lines().next().unwrap_or("")
            ),
        })
    }
}

/// Extracts the verdict and model literals from conventional solver output.
fn parse_solver_output(stdout: &str) -> Option<SolverVerdict> {
    let mut verdict: Option<bool> = None;
    let mut lits: Vec<i64> = Vec::new();
    for line in stdout.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("s ") {
            match rest.trim() {
                "SATISFIABLE" => verdict = Some(true),
                "UNSATISFIABLE" => verdict = Some(false),
                _ => {}
            }
        } else if let Some(rest) = line.strip_prefix("v ") {
            for tok in rest.split_ascii_whitespace() {
                if let Ok(lit) = tok.parse::<i64>() {
                    if lit != 0 {
                        lits.push(lit);
                    }
                }
            }
        }
    }
    match verdict {
        Some(true) => Some(SolverVerdict::Sat(lits)),
        Some(false) => Some(SolverVerdict::Unsat),
        None => None,
    }
}

/// Options for the CEGAR loop.
#[derive(Clone, Debug, Default)]
pub struct CegarOptions {
    /// Add one blocking clause per violated s-subset of the current model
    /// instead of only the lexicographically least copy.
    pub batch: bool,
    /// Directory for the CNF files; a fresh temp dir when absent.
    pub workdir: Option<PathBuf>,
}

/// One refinement step, reported to the trace observer.
pub struct CegarStep<'a> {
    pub iteration: u64,
    pub model: &'a Coloring,
    /// Blue copies blocked this step, as (X-subset, Y-subset) pairs.
    pub blocked: &'a [(Vec<usize>, Vec<usize>)],
}

/// Counterexample-guided refinement: solve the red-only encoding plus the
/// accumulated blocking clauses; an UNSAT answer proves arrowing, a model
/// without a blue K_{s,s} is a verified witness, and any other model
/// contributes blocking clauses naming its blue copies.
///
/// `budget.max_nodes` bounds the number of solver calls. Arrow outcomes are
/// only as trustworthy as the external solver's UNSAT answers.
pub fn cegar(
    spec: &ProblemSpec,
    harness: &SolverHarness,
    budget: &Budget,
    options: &CegarOptions,
) -> Result<SearchOutcome, SatError> {
    cegar_inner(spec, harness, budget, options, None)
}

/// [`cegar`] with a per-iteration observer.
pub fn cegar_with_trace(
    spec: &ProblemSpec,
    harness: &SolverHarness,
    budget: &Budget,
    options: &CegarOptions,
    observer: &mut dyn FnMut(CegarStep<'_>),
) -> Result<SearchOutcome, SatError> {
    cegar_inner(spec, harness, budget, options, Some(observer))
}

fn cegar_inner(
    spec: &ProblemSpec,
    harness: &SolverHarness,
    budget: &Budget,
    options: &CegarOptions,
    mut observer: Option<&mut dyn FnMut(CegarStep<'_>)>,
) -> Result<SearchOutcome, SatError> {
    let spec = ProblemSpec::new(spec.m, spec.n, spec.a, spec.s).map_err(SatError::Core)?;
    let doc = encode_cnf(&spec, EncodeMode::RedOnly)?;
    let start = Instant::now();
    let max_elapsed = Duration::from_secs(budget.max_seconds);

    let tempdir;
    let dir: PathBuf = match &options.workdir {
        Some(d) => {
            std::fs::create_dir_all(d)?;
            d.clone()
        }
        None => {
            tempdir = tempfile::Builder::new().prefix("bramsey-cegar").tempdir()?;
            tempdir.path().to_path_buf()
        }
    };

    let mut blocking: Vec<Vec<i32>> = Vec::new();
    let mut iterations: u64 = 0;
    let finish = |status: SearchStatus, witness, iterations, blocked: usize| SearchOutcome {
        status,
        witness,
        stats: SearchStats {
            nodes: iterations,
            prunes: [("blocking_clauses", blocked as u64)].into(),
            elapsed: start.elapsed(),
        },
    };

    loop {
        if iterations >= budget.max_nodes || start.elapsed() > max_elapsed {
            return Ok(finish(
                SearchStatus::Inconclusive,
                None,
                iterations,
                blocking.len(),
            ));
        }
        iterations += 1;

        let path = dir.join(format!("iter-{iterations:05}.cnf"));
        {
            let mut file = std::io::BufWriter::new(std::fs::File::create(&path)?);
            doc.write_dimacs_with(&mut file, &blocking)?;
        }
        let verdict = harness.run_file(&path)?;

        match verdict {
            SolverVerdict::Unsat => {
                return Ok(finish(SearchStatus::Arrow, None, iterations, blocking.len()));
            }
            SolverVerdict::Sat(lits) => {
                let model = decode_model(&doc, &lits, &spec)?;
                let copies = blue_copies(&model, spec.s, options.batch);
                if copies.is_empty() {
                    let report = model.verify(&spec).map_err(SatError::Core)?;
                    if !report.is_good() {
                        return Err(SatError::SolverFailure {
                            reason: "model violates the red constraints it was solved under"
                                .to_string(),
                        });
                    }
                    return Ok(finish(
                        SearchStatus::NotArrow,
                        Some(model),
                        iterations,
                        blocking.len(),
                    ));
                }
                if let Some(obs) = observer.as_mut() {
                    obs(CegarStep {
                        iteration: iterations,
                        model: &model,
                        blocked: &copies,
                    });
                }
                for (xs, ys) in &copies {
                    let mut clause = Vec::with_capacity(spec.s * spec.s);
                    for &x in xs {
                        for &y in ys {
                            clause.push(doc.var_id(x, y));
                        }
                    }
                    blocking.push(clause);
                }
            }
        }
    }
}

/// Blue K_{s,s} copies of a coloring: the lexicographically least one, or
/// (in batch mode) one per violated s-subset of X.
fn blue_copies(c: &Coloring, s: usize, batch: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    if !batch {
        return c.find_blue_k(s, s).into_iter().collect();
    }
    let mut out = Vec::new();
    if s > c.m() || s > c.n() {
        return out;
    }
    for_each_combination(c.m(), s, |xs| {
        let mut union = crate::yset::YSet::empty();
        for &x in xs {
            union.union_with(c.row(x));
        }
        if c.n() - union.len() >= s {
            let uncovered = union.complement_within(c.n());
            out.push((xs.to_vec(), uncovered.smallest(s)));
        }
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, n: usize, a: usize, s: usize) -> ProblemSpec {
        ProblemSpec::new(m, n, a, s).unwrap()
    }

    #[test]
    fn tiny_full_encodings_are_exact() {
        let doc = encode_cnf(&spec(2, 2, 2, 2), EncodeMode::Full).unwrap();
        assert_eq!(doc.num_vars, 4);
        assert_eq!(doc.clauses, vec![vec![-1, -2, -3, -4], vec![1, 2, 3, 4]]);

        let doc = encode_cnf(&spec(1, 1, 1, 1), EncodeMode::Full).unwrap();
        assert_eq!(doc.num_vars, 1);
        assert_eq!(doc.clauses, vec![vec![-1], vec![1]]);
    }

    #[test]
    fn oversized_full_encodings_are_refused() {
        let err = encode_cnf(&spec(7, 57, 2, 6), EncodeMode::Full).unwrap_err();
        match err {
            SatError::EncodingTooLarge { clauses, cap } => {
                assert!(clauses > cap);
            }
            other => panic!("unexpected error {other:?}"),
        }
        // The red side alone fits comfortably.
        let doc = encode_cnf(&spec(7, 57, 2, 6), EncodeMode::RedOnly).unwrap();
        assert_eq!(doc.clauses.len(), 21 * 1596);
    }

    #[test]
    fn var_map_is_a_bijection() {
        let doc = encode_cnf(&spec(3, 5, 2, 2), EncodeMode::RedOnly).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..3 {
            for y in 0..5 {
                let v = doc.var_id(x, y);
                assert!((1..=15).contains(&v));
                assert!(seen.insert(v));
                assert_eq!(doc.edge_of(v), Some((x, y)));
            }
        }
        assert_eq!(seen.len(), 15);
        assert_eq!(doc.edge_of(0), None);
        assert_eq!(doc.edge_of(16), None);
    }

    #[test]
    fn no_clause_is_tautological() {
        for symmetry in [false, true] {
            for mode in [EncodeMode::Full, EncodeMode::RedOnly] {
                let doc = encode_cnf_opts(&spec(3, 4, 2, 2), mode, symmetry).unwrap();
                for clause in &doc.clauses {
                    for &lit in clause {
                        assert!(lit != 0);
                        assert!(
                            !clause.contains(&-lit),
                            "clause {clause:?} has complementary literals"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn decode_round_trips_totals() {
        let doc = encode_cnf(&spec(2, 3, 2, 2), EncodeMode::RedOnly).unwrap();
        let all_true: Vec<i64> = (1..=6).collect();
        let c = decode_model(&doc, &all_true, &spec(2, 3, 2, 2)).unwrap();
        assert_eq!(c.degree(0), 3);
        assert_eq!(c.degree(1), 3);

        let all_false: Vec<i64> = (1..=6).map(|v| -v).collect();
        let c = decode_model(&doc, &all_false, &spec(2, 3, 2, 2)).unwrap();
        assert_eq!(c.max_degree(), 0);

        let missing: Vec<i64> = (1..=5).collect();
        assert!(matches!(
            decode_model(&doc, &missing, &spec(2, 3, 2, 2)),
            Err(SatError::IncompleteModel { var: 6 })
        ));
        let unknown = vec![1, 2, 3, 4, 5, 6, 99];
        assert!(matches!(
            decode_model(&doc, &unknown, &spec(2, 3, 2, 2)),
            Err(SatError::UnknownVariable { var: 99, .. })
        ));
    }

    #[test]
    fn dimacs_output_shape() {
        let doc = encode_cnf(&spec(2, 2, 2, 2), EncodeMode::Full).unwrap();
        let mut buf = Vec::new();
        doc.write_dimacs(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("c spec 2 2 2 2"));
        assert_eq!(lines.next(), Some("p cnf 4 2"));
        assert_eq!(lines.next(), Some("-1 -2 -3 -4 0"));
        assert_eq!(lines.next(), Some("1 2 3 4 0"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn solver_output_parsing() {
        assert_eq!(
            parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2 3 0\n"),
            Some(SolverVerdict::Sat(vec![1, -2, 3]))
        );
        assert_eq!(
            parse_solver_output("v 1 -2\nv 3\nv 0\ns SATISFIABLE\n"),
            Some(SolverVerdict::Sat(vec![1, -2, 3]))
        );
        assert_eq!(
            parse_solver_output("s UNSATISFIABLE\n"),
            Some(SolverVerdict::Unsat)
        );
        assert_eq!(parse_solver_output("garbage\n"), None);
    }

    #[test]
    fn harness_surfaces_unusable_solvers() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.cnf");
        std::fs::write(&path, "p cnf 1 1\n1 0\n").unwrap();

        let silent = SolverHarness::new("true");
        assert!(matches!(
            silent.run_file(&path),
            Err(SatError::SolverFailure { .. })
        ));

        let chatty = SolverHarness::new("echo hello");
        assert!(matches!(
            chatty.run_file(&path),
            Err(SatError::SolverFailure { .. })
        ));

        let mut slow = SolverHarness::new("sleep 10");
        slow.timeout = Duration::from_millis(30);
        assert!(matches!(
            slow.run_file(&path),
            Err(SatError::SolverFailure { .. })
        ));
    }

    /// Truth-table check: a total assignment satisfies the full encoding
    /// exactly when the decoded coloring is good. Small hosts only; the
    /// acceptance suite runs the wider sweep.
    #[test]
    fn full_encoding_models_are_exactly_the_good_colorings() {
        for (m, n, a, s) in [(2, 2, 2, 2), (2, 3, 2, 2), (3, 2, 1, 2)] {
            let sp = spec(m, n, a, s);
            let doc = encode_cnf(&sp, EncodeMode::Full).unwrap();
            let vars = doc.num_vars;
            for mask in 0u32..1 << vars {
                let assignment: Vec<i64> = (1..=vars as i64)
                    .map(|v| if mask >> (v - 1) & 1 != 0 { v } else { -v })
                    .collect();
                let satisfied = doc.clauses.iter().all(|clause| {
                    clause
                        .iter()
                        .any(|&lit| (mask >> (lit.unsigned_abs() - 1) & 1 != 0) == (lit > 0))
                });
                let coloring = decode_model(&doc, &assignment, &sp).unwrap();
                let good = coloring.verify(&sp).unwrap().is_good();
                assert_eq!(satisfied, good, "m={m} n={n} a={a} s={s} mask={mask}");
            }
        }
    }

    /// With symmetry clauses, satisfiability is preserved and every model's
    /// rows come out in nonincreasing lexicographic order.
    #[test]
    fn symmetry_clauses_preserve_satisfiability_and_sort_rows() {
        let sp = spec(3, 3, 2, 2);
        let plain = encode_cnf_opts(&sp, EncodeMode::Full, false).unwrap();
        let sym = encode_cnf_opts(&sp, EncodeMode::Full, true).unwrap();
        assert!(sym.num_vars > plain.num_vars);

        let eval = |doc: &CnfDoc, mask: u32| {
            doc.clauses.iter().all(|clause| {
                clause
                    .iter()
                    .any(|&lit| (mask >> (lit.unsigned_abs() - 1) & 1 != 0) == (lit > 0))
            })
        };
        let row_key = |c: &Coloring, i: usize| -> Vec<bool> {
            (0..c.n()).map(|y| c.is_red(i, y)).collect()
        };

        let mut plain_sat = false;
        for mask in 0u32..1 << plain.num_vars {
            if eval(&plain, mask) {
                plain_sat = true;
                break;
            }
        }
        let mut sym_sat = false;
        for mask in 0u32..1 << sym.num_vars {
            if !eval(&sym, mask) {
                continue;
            }
            sym_sat = true;
            let assignment: Vec<i64> = (1..=sym.num_vars as i64)
                .map(|v| if mask >> (v - 1) & 1 != 0 { v } else { -v })
                .collect();
            let c = decode_model(&sym, &assignment, &sp).unwrap();
            assert!(c.verify(&sp).unwrap().is_good());
            for i in 0..sp.m - 1 {
                assert!(
                    row_key(&c, i) >= row_key(&c, i + 1),
                    "rows not lex-sorted in a symmetry model"
                );
            }
        }
        assert_eq!(plain_sat, sym_sat);
    }
}
