use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rmatrix::{dj_gl, dj_glmn, load_json, permutation, super_permutation, RMatrixSpec};
use crate::scalars::{Coeff, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    /// `(R, P)` with the standard `GL(m|n)` R-matrix.
    Rtt,
    /// `(R, R)`.
    Rea,
    /// R and F read from files; F defaults to the flip.
    Custom,
    /// The super flip for both, meaningful at `q = 1`.
    Super,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Axioms,
    Units,
    Glmn,
    Schur,
    Ch,
    Telescope,
    Rect,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Axioms => "axioms",
            Task::Units => "units",
            Task::Glmn => "glmn",
            Task::Schur => "schur",
            Task::Ch => "ch",
            Task::Telescope => "telescope",
            Task::Rect => "rect",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QMode {
    Symbolic,
    Rational(Rational),
}

impl FromStr for QMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "symbolic" {
            return Ok(QMode::Symbolic);
        }
        let q0: Rational = s.parse().map_err(|_| Error::Input(format!("--q expects `symbolic` or a rational P/Q, got {s:?}")))?;
        if q0.is_zero() {
            return Err(Error::ZeroQ);
        }
        Ok(QMode::Rational(q0))
    }
}

#[derive(Parser, Debug, Clone)]
#[command(name = "qch", version, about = "Verify Cayley-Hamilton identities of quantum matrix algebras of GL(m|n) type")]
pub struct Args {
    /// Even part of the type.
    #[arg(long)]
    pub m: usize,
    /// Odd part of the type.
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "rtt")]
    pub pair: PairKind,
    /// R-matrix JSON file for `--pair custom`.
    #[arg(long)]
    pub rfile: Option<PathBuf>,
    /// F-matrix JSON file for `--pair custom`; the flip when omitted.
    #[arg(long)]
    pub ffile: Option<PathBuf>,
    /// `symbolic` or a rational value `P/Q`.
    #[arg(long, default_value = "symbolic")]
    pub q: String,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "axioms")]
    pub tasks: Vec<Task>,
    /// Largest number of tensor strands any task may use.
    #[arg(long, default_value_t = 6)]
    pub arity_bound: usize,
    /// Where to write the JSON report.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Permit symbolic runs with `m + n >= 3` beyond the axiom checks.
    #[arg(long)]
    pub allow_long: bool,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// A validated case.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseConfig {
    pub m: usize,
    pub n: usize,
    pub pair: PairKind,
    pub rfile: Option<String>,
    pub ffile: Option<String>,
    /// `"symbolic"` or `"rational"`.
    pub q_mode: &'static str,
    pub q0: Option<String>,
    /// Requested tasks in execution order.
    pub tasks: Vec<Task>,
    pub arity_bound: usize,
    pub allow_long: bool,
    pub seed: u64,
    #[serde(skip)]
    pub q: QMode,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

/// Tasks that build the algebra or large Hecke representations.
pub const LONG_TASKS: [Task; 6] = [Task::Units, Task::Glmn, Task::Schur, Task::Ch, Task::Telescope, Task::Rect];

impl CaseConfig {
    pub fn from_args(args: Args) -> Result<Self> {
        let q = args.q.parse::<QMode>()?;
        if args.m + args.n == 0 {
            return Err(Error::Range("m + n must be positive".into()));
        }
        let mut tasks = args.tasks.clone();
        tasks.sort();
        tasks.dedup();
        let needed = (args.m + 1) * (args.n + 1);
        if tasks.iter().any(|t| matches!(t, Task::Ch | Task::Telescope | Task::Glmn)) && args.arity_bound < needed {
            return Err(Error::Range(format!("--arity-bound {} is below (m+1)(n+1) = {needed}", args.arity_bound)));
        }
        if args.pair != PairKind::Custom && (args.rfile.is_some() || args.ffile.is_some()) {
            return Err(Error::Input("--rfile and --ffile are only read with --pair custom".into()));
        }
        if args.pair == PairKind::Custom && args.rfile.is_none() {
            return Err(Error::Input("--pair custom needs --rfile".into()));
        }
        let gated = q == QMode::Symbolic && args.m + args.n >= 3 && tasks.iter().any(|t| LONG_TASKS.contains(t));
        if gated && !args.allow_long {
            return Err(Error::Input("symbolic runs with m + n >= 3 are long; pass --allow-long or a rational --q".into()));
        }
        let (q_mode, q0) = match &q {
            QMode::Symbolic => ("symbolic", None),
            QMode::Rational(r) => ("rational", Some(r.to_string())),
        };
        Ok(CaseConfig {
            m: args.m,
            n: args.n,
            pair: args.pair,
            rfile: args.rfile.as_ref().map(|p| p.display().to_string()),
            ffile: args.ffile.as_ref().map(|p| p.display().to_string()),
            q_mode,
            q0,
            tasks,
            arity_bound: args.arity_bound,
            allow_long: args.allow_long,
            seed: args.seed,
            q,
            output: args.report,
        })
    }

    /// The R and F matrices of the case.
    pub fn pair_matrices(&self) -> Result<(RMatrixSpec, RMatrixSpec)> {
        let (m, n) = (self.m, self.n);
        let standard = || if n == 0 { dj_gl(m) } else { dj_glmn(m, n) };
        let (r, f) = match self.pair {
            PairKind::Rtt => (standard()?, permutation(m + n)?),
            PairKind::Rea => {
                let r = standard()?;
                (r.clone(), r)
            }
            PairKind::Super => {
                let p = super_permutation(m, n)?;
                (p.clone(), p)
            }
            PairKind::Custom => {
                let r = load_json(std::path::Path::new(self.rfile.as_deref().expect("checked")))?;
                let f = match &self.ffile {
                    Some(p) => load_json(std::path::Path::new(p))?,
                    None => permutation(r.n())?,
                };
                (r, f)
            }
        };
        if r.n() != m + n || f.n() != m + n {
            return Err(Error::Input(format!("matrices act on dimension {} and {}, expected m + n = {}", r.n(), f.n(), m + n)));
        }
        Ok((r, f))
    }
}
