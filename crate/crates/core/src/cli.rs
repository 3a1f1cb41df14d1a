//! The `carnot` command line. [`run`] does all the work and returns the
//! exit code with captured output, so the binary is a thin wrapper and the
//! commands can be tested in-process.
//!
//! Exit codes: 0 success, 1 a domain check failed, 2 parse or usage error,
//! 3 a search or recursion budget was exceeded.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{CarnotAlgebra, Element};
use crate::constructions::{
    catalog, catalog_names, central_product_glue_top, direct_product, level_one_product, LevelOneFactor,
};
use crate::error::CarnotError;
use crate::exec::Execution;
use crate::format::{emit_algebra, fmt_float, parse_algebra, parse_element, parse_rational_list};
use crate::group::{bch_multiply, HomogeneousMetric};
use crate::linalg::Subspace;
use crate::rank::{
    generated_subalgebra, is_ideal, min_rank_survey, normalizer, rank_of, rank_on_layer, theorem12_space,
    wedge_rank_test, SurveyParams,
};
use crate::rigidity::{certify, CertifyOptions, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "carnot", version, about = "Exact computations on Carnot algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SurveyArgs {
    /// Seed for the random samples.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Grid coefficients range over [-grid, grid].
    #[arg(long, default_value_t = 2)]
    grid: u32,
    /// Maximum support size of grid vectors.
    #[arg(long, default_value_t = 3)]
    sparsity: usize,
    /// Number of random rational samples.
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Cap on grid points plus samples.
    #[arg(long, default_value_t = 10_000_000)]
    max_evaluations: u128,
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

impl SurveyArgs {
    fn params(&self) -> SurveyParams {
        SurveyParams {
            grid_radius: self.grid,
            sparsity: self.sparsity,
            samples: self.samples,
            seed: self.seed,
            max_evaluations: self.max_evaluations,
            execution: if self.sequential { Execution::Sequential } else { Execution::default() },
            ..Default::default()
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ProductKind {
    Direct,
    Central,
    LevelOne,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check antisymmetry, grading, Jacobi and generation.
    Validate { alg: String },
    /// Print dimensions and basis.
    Info { alg: String },
    /// Exact rank of ad(x).
    Rank {
        alg: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Restrict ad(x) to this layer.
        #[arg(long)]
        layer: Option<usize>,
        /// Also decide whether the (k+1)-th exterior power of ad(x) vanishes.
        #[arg(long)]
        wedge: Option<usize>,
    },
    /// Minimal-rank survey and the subspaces derived from W1.
    Analyze {
        alg: String,
        #[command(flatten)]
        survey: SurveyArgs,
        #[arg(long, default_value_t = 10)]
        max_witnesses: usize,
    },
    /// Build a rigidity certificate.
    Rigidity {
        alg: String,
        #[command(flatten)]
        survey: SurveyArgs,
        /// Generator of a user-supplied W1 (repeatable).
        #[arg(long = "w1", allow_hyphen_values = true)]
        w1: Vec<String>,
        /// Assume the algebra or a subalgebra is isomorphic to this catalog entry.
        #[arg(long)]
        assume: Vec<String>,
        /// Exit with status 1 unless the verdict is rigid.
        #[arg(long)]
        require_rigid: bool,
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
    },
    /// Direct, central (top layers glued) or level-one product.
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        a: String,
        b: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Group product x * y.
    Bch {
        alg: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Homogeneous distance d(p, q) = ||(-p) * q||.
    Distance {
        alg: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Ratios d(tw, v * tw) / t.
    ProbeDivergence {
        alg: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value = "1,4,16,64")]
        t: String,
    },
    /// List catalog names, or print one as an algebra file.
    Catalog { name: Option<String> },
}

enum Failure {
    Usage(String),
    Domain(String),
    Budget(String),
}

impl From<CarnotError> for Failure {
    fn from(e: CarnotError) -> Self {
        match e {
            CarnotError::SearchBudgetExceeded { .. }
            | CarnotError::GridBudgetExceeded { .. }
            | CarnotError::RecursionDepthExceeded(_) => Failure::Budget(e.to_string()),
            CarnotError::UnknownCatalogName(_) | CarnotError::BadParams(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CmdResult = Result<(i32, String), Failure>;

fn load(spec: &str) -> Result<CarnotAlgebra, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
        return parse_algebra(&text).map_err(|e| Failure::Usage(format!("{spec}: {e}")));
    }
    catalog(spec).map_err(|_| Failure::Usage(format!("`{spec}` is neither a file nor a catalog name")))
}

fn element(alg: &CarnotAlgebra, text: &str) -> Result<Element, Failure> {
    parse_element(alg, text).map_err(Failure::Usage)
}

fn basis_lines(out: &mut String, alg: &CarnotAlgebra, s: &Subspace) {
    if s.is_zero() {
        out.push_str("  []\n");
    }
    for b in s.basis() {
        let _ = writeln!(out, "  - {}", alg.render(&Element::new(b.clone())));
    }
}

fn dims_text(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_validate(alg: &CarnotAlgebra) -> CmdResult {
    let report = alg.validate();
    let code = if report.passed() { 0 } else { 1 };
    Ok((code, format!("algebra: {}\n{report}", alg.name())))
}

fn cmd_info(alg: &CarnotAlgebra) -> CmdResult {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", alg.name());
    let _ = writeln!(out, "dimension: {}", alg.dim());
    let _ = writeln!(out, "step: {}", alg.step());
    let _ = writeln!(out, "layers: {}", dims_text(alg.layer_dims()));
    let _ = writeln!(out, "hausdorff_dimension: {}", alg.hausdorff_dimension());
    let _ = writeln!(out, "nonzero_brackets: {}", alg.structure().len());
    for i in 1..=alg.step() {
        let _ = writeln!(out, "V{i}: {}", alg.labels()[alg.layer_range(i)].join(" "));
    }
    Ok((0, out))
}

fn cmd_rank(alg: &CarnotAlgebra, x: &str, layer: Option<usize>, wedge: Option<usize>) -> CmdResult {
    let x = element(alg, x)?;
    let mut out = String::new();
    let _ = writeln!(out, "x: {}", alg.render(&x));
    match layer {
        Some(i) => {
            let _ = writeln!(out, "rank_on_layer {i}: {}", rank_on_layer(alg, &x, i)?);
        }
        None => {
            let _ = writeln!(out, "rank: {}", rank_of(alg, &x)?);
        }
    }
    if let Some(k) = wedge {
        let _ = writeln!(out, "wedge {}: {}", k + 1, if wedge_rank_test(alg, &x, k)? { "zero" } else { "nonzero" });
    }
    Ok((0, out))
}

fn cmd_analyze(alg: &CarnotAlgebra, survey: &SurveyArgs, max_witnesses: usize) -> CmdResult {
    let params = survey.params();
    let report = min_rank_survey(alg, None, &params)?;
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", alg.name());
    let _ = writeln!(out, "layers: {}", dims_text(alg.layer_dims()));
    let _ = writeln!(
        out,
        "survey: grid {} sparsity {} samples {} seed {}",
        params.grid_radius, params.sparsity, params.samples, params.seed
    );
    let _ = writeln!(out, "evaluations: {}", report.evaluations);
    let _ = writeln!(out, "r1: {}", report.r_min_found);
    let _ = writeln!(out, "certification: {}", report.certification.as_str());
    let _ = writeln!(out, "max_rank_observed: {}", report.generic_rank);
    let shown = report.witnesses.len().min(max_witnesses);
    let _ = writeln!(out, "witnesses: {} (showing {shown})", report.witnesses.len());
    for w in &report.witnesses[..shown] {
        let _ = writeln!(out, "  - {}", alg.render(w));
    }
    let w1 = &report.span;
    let _ = writeln!(out, "w1_dim: {}", w1.dim());
    out.push_str("w1_basis:\n");
    basis_lines(&mut out, alg, w1);
    out.push_str("layer_ranks:\n");
    for i in 1..alg.step() {
        let r = min_rank_survey(alg, Some(i), &params)?;
        let _ = writeln!(out, "  - layer {i}: r {} w_dim {}", r.r_min_found, r.span.dim());
        for b in r.span.basis() {
            let _ = writeln!(out, "      {}", alg.render(&Element::new(b.clone())));
        }
    }
    let sub = generated_subalgebra(alg, w1)?;
    let _ = writeln!(out, "generated_layer_dims: {}", dims_text(&sub.dims()));
    let _ = writeln!(out, "ideal: {}", is_ideal(alg, &sub)?);
    out.push_str("normalizer_basis:\n");
    basis_lines(&mut out, alg, &normalizer(alg, w1)?);
    match theorem12_space(alg, w1) {
        Ok(t) => {
            out.push_str("t12_space_basis:\n");
            basis_lines(&mut out, alg, &t);
        }
        Err(e) => {
            let _ = writeln!(out, "t12_space: n/a ({e})");
        }
    }
    Ok((0, out))
}

fn cmd_rigidity(
    alg: &CarnotAlgebra,
    survey: &SurveyArgs,
    w1: &[String],
    assume: &[String],
    require_rigid: bool,
    max_depth: usize,
) -> CmdResult {
    let user_w1 = if w1.is_empty() {
        None
    } else {
        let vecs = w1
            .iter()
            .map(|s| element(alg, s).map(Element::into_coords))
            .collect::<Result<Vec<_>, _>>()?;
        Some(Subspace::span(alg.dim(), &vecs))
    };
    for a in assume {
        crate::constructions::catalog_entry(a)?;
    }
    let opts = CertifyOptions {
        survey: survey.params(),
        max_depth,
        user_w1,
        assume: assume.to_vec(),
    };
    let cert = certify(alg, &opts)?;
    let code = if require_rigid && cert.verdict != Verdict::Rigid { 1 } else { 0 };
    Ok((code, cert.to_string()))
}

fn cmd_product(kind: ProductKind, a: &CarnotAlgebra, b: &CarnotAlgebra, name: Option<&str>) -> CmdResult {
    let p = match kind {
        ProductKind::Direct => direct_product(a, b),
        ProductKind::Central => central_product_glue_top(a, b)?.algebra,
        ProductKind::LevelOne => {
            level_one_product(a, b, &LevelOneFactor::default_for(a), &LevelOneFactor::default_for(b))?
        }
    };
    let p = match name {
        Some(n) => p.with_name(n),
        None => p,
    };
    Ok((0, emit_algebra(&p)))
}

fn cmd_bch(alg: &CarnotAlgebra, x: &str, y: &str) -> CmdResult {
    let (x, y) = (element(alg, x)?, element(alg, y)?);
    Ok((0, format!("{}\n", alg.render(&bch_multiply(alg, &x, &y)?))))
}

fn cmd_distance(alg: &CarnotAlgebra, p: &str, q: &str) -> CmdResult {
    let (p, q) = (element(alg, p)?, element(alg, q)?);
    let d = HomogeneousMetric::default().distance(alg, &p, &q)?;
    Ok((0, format!("{}\n", fmt_float(d))))
}

fn cmd_probe(alg: &CarnotAlgebra, w: &str, v: &str, t: &str) -> CmdResult {
    let (w, v) = (element(alg, w)?, element(alg, v)?);
    let ts = parse_rational_list(t).map_err(Failure::Usage)?;
    let rows = HomogeneousMetric::default().coset_divergence_probe(alg, &w, &v, &ts)?;
    let mut out = String::from("t ratio\n");
    for (t, r) in rows {
        let _ = writeln!(out, "{} {}", crate::rational::fmt_q(&t), fmt_float(r));
    }
    Ok((0, out))
}

fn cmd_catalog(name: Option<&str>) -> CmdResult {
    match name {
        None => Ok((0, catalog_names().iter().map(|n| format!("{n}\n")).collect())),
        Some(n) => Ok((0, emit_algebra(&catalog(n)?))),
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Validate { alg } => cmd_validate(&load(&alg)?),
        Command::Info { alg } => cmd_info(&load(&alg)?),
        Command::Rank { alg, x, layer, wedge } => cmd_rank(&load(&alg)?, &x, layer, wedge),
        Command::Analyze { alg, survey, max_witnesses } => cmd_analyze(&load(&alg)?, &survey, max_witnesses),
        Command::Rigidity { alg, survey, w1, assume, require_rigid, max_depth } => {
            cmd_rigidity(&load(&alg)?, &survey, &w1, &assume, require_rigid, max_depth)
        }
        Command::Product { kind, a, b, name } => cmd_product(kind, &load(&a)?, &load(&b)?, name.as_deref()),
        Command::Bch { alg, x, y } => cmd_bch(&load(&alg)?, &x, &y),
        Command::Distance { alg, p, q } => cmd_distance(&load(&alg)?, &p, &q),
        Command::ProbeDivergence { alg, w, v, t } => cmd_probe(&load(&alg)?, &w, &v, &t),
        Command::Catalog { name } => cmd_catalog(name.as_deref()),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Domain(m) => (1, m),
                Failure::Budget(m) => (3, m),
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}
