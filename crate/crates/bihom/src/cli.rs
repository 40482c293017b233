//! The `bihom` command line: argument parsing, dispatch and report rendering.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check or
//! precondition fails, 2 for unreadable or malformed input.

use std::io::IsTerminal;
use std::path::{Path, PathBuf};

use bihom_core::algebra::{
    ideal_closure, intersect_ideals, is_ideal, preimage_ideal, quotient_algebra, validate_algebra,
    validate_morphism, AlgebraRef, IdealHandle, Twist,
};
use bihom_core::coalgebra::{validate_coalgebra, validate_coalgebra_morphism};
use bihom_core::duality::{
    delta_factors_rewrap, dual_algebra_morphism, dual_coalgebra, dual_morphism_report,
    pairing_report, sweedler_add, sweedler_delta, sweedler_dual_morphism, sweedler_twist,
    sweedler_wrap, SweedlerFunctional,
};
use bihom_core::linalg::{dot, unit, Rational};
use bihom_core::modules::{
    comodule_pairing_report, dual_comodule, dual_module_morphism, dual_module_morphism_report,
    module_sweedler_add, module_sweedler_coaction, module_sweedler_wrap, product_submodule,
    transposed_module_morphism, validate_comodule, validate_comodule_morphism, validate_module,
    validate_module_morphism, ModuleSweedlerFunctional,
};
use bihom_core::poly::{
    coassoc_check, delta_dual, functional_in_finite_dual, ideal_absorption_check, ideal_complement,
    pairing_check, twist_apply, twisted_product, CofiniteMonomialIdeal, DualFunctional, MultiIndex,
};
use bihom_core::report::{DisplayVector, Location, ValidationReport, Witness};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::json::{self, FormatError, Morphism};
use crate::random::{property_qq, property_yau, property_zz};

#[derive(Parser, Debug)]
#[command(name = "bihom", version, about = "Exact computations with BiHom-algebras, coalgebras, modules and their finite duals")]
pub struct Cli {
    /// Write the constructed object to this file instead of printing it.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom of a structure or morphism file.
    #[command(subcommand)]
    Validate(ValidateCmd),
    /// Build the dual coalgebra, dual morphism or dual comodule.
    #[command(subcommand)]
    Dualize(DualizeCmd),
    /// Ideals of finite-dimensional BiHom-algebras.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// The quotient algebra G/J of an ideal file.
    Quotient { ideal: PathBuf },
    /// Finite dual of an algebra: functionals with witness ideals.
    #[command(subcommand)]
    Sweedler(SweedlerCmd),
    /// Finite dual of a module.
    #[command(subcommand, name = "module-sweedler")]
    ModuleSweedler(ModuleSweedlerCmd),
    /// The polynomial BiHom-algebras K[x_1, ..., x_r].
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Seeded check of ker(pi_A (x) pi_B) = A (x) J + I (x) B on random subspaces.
    #[command(name = "lemma-zz")]
    LemmaZz(SuiteArgs),
    /// Seeded randomized property suites.
    Property {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        args: SuiteArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    /// Random Yau twists validate and dualize.
    Yau,
    /// Morphism verdicts survive transposition.
    Qq,
    /// Tensor quotient kernels.
    Zz,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    max_dim: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum ValidateCmd {
    Algebra { file: PathBuf },
    Coalgebra { file: PathBuf },
    Module { file: PathBuf },
    Comodule { file: PathBuf },
    Morphism { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum DualizeCmd {
    Algebra { file: PathBuf },
    /// An algebra morphism becomes a coalgebra morphism, a module morphism a comodule morphism.
    Morphism { file: PathBuf },
    Module { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum IdealCmd {
    /// Is the span of `basis` a twist-stable two-sided ideal?
    Check { file: PathBuf },
    /// Smallest ideal containing `basis`.
    Closure { file: PathBuf },
    Intersect { first: PathBuf, second: PathBuf },
    /// f^-1(J) for an algebra morphism file and an ideal of its target.
    Preimage { morphism: PathBuf, ideal: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Alpha,
    Beta,
}

impl From<Which> for Twist {
    fn from(w: Which) -> Twist {
        match w {
            Which::Alpha => Twist::Alpha,
            Which::Beta => Twist::Beta,
        }
    }
}

#[derive(Subcommand, Debug)]
enum SweedlerCmd {
    Delta { functional: PathBuf },
    Add { first: PathBuf, second: PathBuf },
    Twist {
        functional: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// f°(b) = b∘f for an algebra morphism f and a functional b on its target.
    Morphism { morphism: PathBuf, functional: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ModuleSweedlerCmd {
    Coaction { functional: PathBuf },
    Add { first: PathBuf, second: PathBuf },
    Morphism { morphism: PathBuf, functional: PathBuf },
}

#[derive(Args, Debug)]
struct IdealSpec {
    /// span{x^n : |n| >= d}
    #[arg(long, conflicts_with = "staircase")]
    total_degree: Option<u32>,
    /// span{x^n : n_i >= N_i for some i}, N given as comma-separated exponents
    #[arg(long, value_parser = json::multi_index_from_str)]
    staircase: Option<MultiIndex>,
}

impl IdealSpec {
    fn get(&self) -> Result<CofiniteMonomialIdeal, CliError> {
        match (&self.total_degree, &self.staircase) {
            (Some(d), None) => Ok(CofiniteMonomialIdeal::TotalDegree(*d)),
            (None, Some(n)) => Ok(CofiniteMonomialIdeal::Staircase(n.clone())),
            _ => Err(CliError::Input("give exactly one of --total-degree, --staircase".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// x^m · x^n = α(x^m) β(x^n)
    Product {
        file: PathBuf,
        #[arg(long, value_parser = json::multi_index_from_str)]
        m: MultiIndex,
        #[arg(long, value_parser = json::multi_index_from_str)]
        n: MultiIndex,
    },
    Twist {
        file: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = json::multi_index_from_str)]
        m: MultiIndex,
    },
    /// Δ(d_n) = Σ_{i+j=n} μ(d_i) ⊗ η(d_j)
    Delta {
        file: PathBuf,
        #[arg(long, value_parser = json::multi_index_from_str)]
        n: MultiIndex,
    },
    PairingCheck {
        file: PathBuf,
        #[arg(long, value_parser = json::multi_index_from_str)]
        n: MultiIndex,
        #[arg(long, default_value_t = 6)]
        degree_bound: u32,
    },
    CoassocCheck {
        file: PathBuf,
        #[arg(long, value_parser = json::multi_index_from_str)]
        n: MultiIndex,
        #[arg(long, default_value_t = 6)]
        degree_bound: u32,
    },
    /// Absorption and twist stability of a monomial ideal up to a degree bound.
    IdealCheck {
        file: PathBuf,
        #[command(flatten)]
        ideal: IdealSpec,
        #[arg(long, visible_alias = "bound", default_value_t = 6)]
        degree_bound: u32,
    },
    /// Whether Σ c·d_n annihilates a (checked) monomial ideal.
    FiniteDual {
        file: PathBuf,
        /// `exponents=coefficient`, e.g. `1,0=1/2`; repeatable.
        #[arg(long = "term", value_parser = parse_term)]
        terms: Vec<(MultiIndex, Rational)>,
        #[command(flatten)]
        ideal: IdealSpec,
        #[arg(long, visible_alias = "bound", default_value_t = 6)]
        degree_bound: u32,
    },
}

fn parse_term(s: &str) -> Result<(MultiIndex, Rational), String> {
    let (m, c) = s.split_once('=').ok_or("expected exponents=coefficient")?;
    let c = bihom_core::linalg::parse_rational(c).ok_or_else(|| format!("not a rational: {:?}", c))?;
    Ok((json::multi_index_from_str(m)?, c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureKind {
    Input,
    Math,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Math(String),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Math { .. } => CliError::Math(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<bihom_core::Error> for CliError {
    fn from(e: bihom_core::Error) -> Self {
        match e {
            bihom_core::Error::Input(m) => CliError::Input(m),
            other => CliError::Math(other.to_string()),
        }
    }
}

/// Everything a command produced. The exit code is derived from this alone.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: Vec<String>,
    pub sections: Vec<ValidationReport>,
    pub result: Option<Value>,
    pub artifacts: Vec<String>,
    pub error: Option<Failure>,
    /// Help or version text.
    pub message: Option<String>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(Failure { kind: FailureKind::Input, .. }) => 2,
            Some(Failure { kind: FailureKind::Math, .. }) => 1,
            None if self.sections.iter().all(ValidationReport::passed) => 0,
            None => 1,
        }
    }

    pub fn passed(&self) -> bool {
        self.exit_code() == 0
    }

    pub fn to_json(&self) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let params: serde_json::Map<String, Value> =
                    s.parameters.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
                let checks: Vec<Value> = s
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "passed": c.passed,
                            "witness": c.witness.as_ref().map(witness_json),
                        })
                    })
                    .collect();
                json!({ "subject": s.subject, "parameters": params, "checks": checks })
            })
            .collect();
        json!({
            "command": self.command,
            "exit_code": self.exit_code(),
            "sections": sections,
            "result": self.result,
            "artifacts": self.artifacts,
            "error": self.error.as_ref().map(|e| json!({
                "kind": match e.kind { FailureKind::Input => "input", FailureKind::Math => "math" },
                "message": e.message,
            })),
        })
    }

    pub fn render(&self, format: Format, color: bool) -> String {
        if let Some(m) = &self.message {
            return m.clone();
        }
        match format {
            Format::Json => json::to_canonical_string(&self.to_json()),
            Format::Text => self.render_text(color),
        }
    }

    fn render_text(&self, color: bool) -> String {
        let mut out = String::new();
        let paint = |ok: bool| match (ok, color) {
            (true, true) => "\x1b[32mPASS\x1b[0m",
            (false, true) => "\x1b[31mFAIL\x1b[0m",
            (true, false) => "PASS",
            (false, false) => "FAIL",
        };
        for s in &self.sections {
            out.push_str(&s.subject);
            out.push('\n');
            for (k, v) in &s.parameters {
                out.push_str(&format!("  {} = {}\n", k, v));
            }
            for c in &s.checks {
                out.push_str(&format!("  [{}] {}\n", paint(c.passed), c.name));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("      at {}\n", w.at));
                    if !w.lhs.is_empty() || !w.rhs.is_empty() {
                        out.push_str(&format!("      lhs = {}\n", DisplayVector(&w.lhs)));
                        out.push_str(&format!("      rhs = {}\n", DisplayVector(&w.rhs)));
                    }
                }
            }
        }
        if let Some(r) = &self.result {
            out.push_str("result:\n");
            out.push_str(&json::to_canonical_string(r));
        }
        for a in &self.artifacts {
            out.push_str(&format!("wrote {}\n", a));
        }
        if let Some(e) = &self.error {
            let kind = match e.kind {
                FailureKind::Input => "input error",
                FailureKind::Math => "failed",
            };
            out.push_str(&format!("{}: {}\n", kind, e.message));
        }
        out
    }
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "at": w.at.to_string(),
        "lhs": json::vector_to_json(&w.lhs),
        "rhs": json::vector_to_json(&w.rhs),
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> (i32, Report)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_with_format(argv).0
}

/// As [`run`], also returning the requested output format.
pub fn run_with_format<I, S>(argv: I) -> ((i32, Report), Format)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let mut report = Report { command: argv.iter().skip(1).cloned().collect(), ..Report::default() };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                report.message = Some(e.to_string());
            } else {
                report.error = Some(Failure { kind: FailureKind::Input, message: e.to_string() });
            }
            return ((report.exit_code(), report), Format::Text);
        }
    };
    let format = cli.format;
    match dispatch(&cli.command, &mut report) {
        Ok(()) => {}
        Err(CliError::Input(m)) => report.error = Some(Failure { kind: FailureKind::Input, message: m }),
        Err(CliError::Math(m)) => report.error = Some(Failure { kind: FailureKind::Math, message: m }),
    }
    if let (Some(path), Some(result)) = (&cli.output, &report.result) {
        match json::write_json(path, result) {
            Ok(()) => {
                report.artifacts.push(path.display().to_string());
                report.result = None;
            }
            Err(e) => report.error = Some(Failure { kind: FailureKind::Input, message: e.to_string() }),
        }
    }
    ((report.exit_code(), report), format)
}

/// Colour is used only on a terminal and never when `BIHOM_COLOR=0`.
pub fn use_color() -> bool {
    std::env::var("BIHOM_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal()
}

fn load<T>(path: &Path, parse: impl Fn(&Value, &json::Source) -> Result<T, FormatError>) -> Result<T, CliError> {
    let (v, src) = json::read_json(path)?;
    Ok(parse(&v, &src)?)
}

fn checked_ideal(a: &AlgebraRef, s: &bihom_core::Subspace) -> Result<IdealHandle, CliError> {
    is_ideal(a, s).map_err(|e| CliError::Math(format!("witness is not an ideal: {}", e)))
}

fn load_functional(path: &Path) -> Result<SweedlerFunctional, CliError> {
    let f = load(path, json::parse_functional)?;
    let j = checked_ideal(&f.algebra, &f.witness)?;
    Ok(sweedler_wrap(&f.algebra, f.coeffs, &j)?)
}

fn load_module_functional(path: &Path) -> Result<ModuleSweedlerFunctional, CliError> {
    let f = load(path, json::parse_module_functional)?;
    let j = checked_ideal(f.module.algebra(), &f.witness)?;
    Ok(module_sweedler_wrap(&f.module, f.coeffs, &j)?)
}

fn functional_json(f: &SweedlerFunctional) -> Value {
    json::functional_to_json(f.algebra(), f.coeffs(), f.witness().subspace())
}

fn module_functional_json(f: &ModuleSweedlerFunctional) -> Value {
    json::module_functional_to_json(f.module(), f.coeffs(), f.witness().subspace())
}

fn dispatch(cmd: &Command, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        Command::Validate(v) => validate(v, report),
        Command::Dualize(d) => dualize(d, report),
        Command::Ideal(i) => ideal(i, report),
        Command::Quotient { ideal } => {
            let f = load(ideal, json::parse_ideal)?;
            let j = checked_ideal(&f.algebra, &f.basis)?;
            let (q, pi) = quotient_algebra(&f.algebra, &j)?;
            let mut r = ValidationReport::new("quotient algebra")
                .with_parameter("dim", q.dim())
                .with_parameter("codim", j.codim());
            r.absorb("G/J", validate_algebra(&q));
            r.absorb("projection", validate_morphism(&pi));
            report.sections.push(r);
            report.result = Some(json::algebra_to_json(&q));
            Ok(())
        }
        Command::Sweedler(s) => sweedler(s, report),
        Command::ModuleSweedler(s) => module_sweedler(s, report),
        Command::Poly(p) => poly(p, report),
        Command::LemmaZz(args) => {
            report.sections.push(property_zz(args.seed, args.count.unwrap_or(50), args.max_dim.unwrap_or(5)));
            Ok(())
        }
        Command::Property { suite, args } => {
            let r = match suite {
                Suite::Yau => property_yau(args.seed, args.count.unwrap_or(200), args.max_dim.unwrap_or(4)),
                Suite::Qq => property_qq(args.seed, args.count.unwrap_or(100), args.max_dim.unwrap_or(3)),
                Suite::Zz => property_zz(args.seed, args.count.unwrap_or(50), args.max_dim.unwrap_or(5)),
            };
            report.sections.push(r);
            Ok(())
        }
    }
}

fn validate(cmd: &ValidateCmd, report: &mut Report) -> Result<(), CliError> {
    let r = match cmd {
        ValidateCmd::Algebra { file } => validate_algebra(&load(file, json::parse_algebra)?),
        ValidateCmd::Coalgebra { file } => validate_coalgebra(&load(file, json::parse_coalgebra)?),
        ValidateCmd::Module { file } => {
            let m = load(file, json::parse_module)?;
            report.sections.push(validate_algebra(m.algebra()));
            validate_module(&m)
        }
        ValidateCmd::Comodule { file } => {
            let c = load(file, json::parse_comodule)?;
            report.sections.push(validate_coalgebra(c.coalgebra()));
            validate_comodule(&c)
        }
        ValidateCmd::Morphism { file } => match load(file, json::parse_morphism)? {
            Morphism::Algebra(f) => validate_morphism(&f),
            Morphism::Coalgebra(f) => validate_coalgebra_morphism(&f),
            Morphism::Module(f) => validate_module_morphism(&f)?,
            Morphism::Comodule(f) => validate_comodule_morphism(&f)?,
        },
    };
    report.sections.push(r);
    Ok(())
}

fn dualize(cmd: &DualizeCmd, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        DualizeCmd::Algebra { file } => {
            let a = load(file, json::parse_algebra)?;
            let input = validate_algebra(&a);
            let passed = input.passed();
            report.sections.push(input);
            if !passed {
                return Err(CliError::Math("the input is not a BiHom-algebra".into()));
            }
            let c = dual_coalgebra(&a)?;
            report.sections.push(validate_coalgebra(&c));
            report.sections.push(pairing_report(&a, &c));
            report.result = Some(json::coalgebra_to_json(&c));
        }
        DualizeCmd::Morphism { file } => match load(file, json::parse_morphism)? {
            Morphism::Algebra(f) => {
                let g = dual_algebra_morphism(&f);
                report.sections.push(verdicts(validate_morphism(&f), validate_coalgebra_morphism(&g)));
                report.result = Some(json::morphism_to_json(&Morphism::Coalgebra(g)));
            }
            Morphism::Module(s) => {
                let g = transposed_module_morphism(&s);
                report
                    .sections
                    .push(verdicts(validate_module_morphism(&s)?, validate_comodule_morphism(&g)?));
                report.result = Some(json::morphism_to_json(&Morphism::Comodule(g)));
            }
            _ => return Err(CliError::Input("only algebra and module morphisms can be dualized".into())),
        },
        DualizeCmd::Module { file } => {
            let m = load(file, json::parse_module)?;
            let c = dual_comodule(&m)?;
            report.sections.push(validate_comodule(&c));
            report.sections.push(comodule_pairing_report(&m, &c));
            report.result = Some(json::comodule_to_json(&c));
        }
    }
    Ok(())
}

/// Both verdicts side by side; passes only when the input is a morphism and so is its dual.
fn verdicts(direct: ValidationReport, dual: ValidationReport) -> ValidationReport {
    let agree = direct.passed() == dual.passed();
    let mut r = ValidationReport::new("morphism and its dual");
    r.absorb("input", direct);
    r.absorb("dual", dual);
    r.record(
        "verdicts agree",
        (!agree).then(|| Witness { at: Location::Basis(Vec::new()), lhs: Vec::new(), rhs: Vec::new() }),
    );
    r
}

fn ideal(cmd: &IdealCmd, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        IdealCmd::Check { file } => {
            let f = load(file, json::parse_ideal)?;
            let mut r = ValidationReport::new("ideal").with_parameter("dim", f.basis.dim());
            match is_ideal(&f.algebra, &f.basis) {
                Ok(j) => {
                    r.pass("two-sided, alpha- and beta-stable");
                    report.result = Some(json!({ "dim": j.dim(), "codim": j.codim() }));
                }
                Err(e) => r.fail(
                    format!("two-sided, alpha- and beta-stable ({:?})", e.condition),
                    Witness {
                        at: Location::Vector(f.basis.basis_vectors()[e.ideal_vector].clone()),
                        lhs: e.image,
                        rhs: Vec::new(),
                    },
                ),
            }
            report.sections.push(r);
        }
        IdealCmd::Closure { file } => {
            let f = load(file, json::parse_ideal)?;
            let j = ideal_closure(&f.algebra, &f.generators)?;
            let mut r = ValidationReport::new("ideal closure")
                .with_parameter("generators", f.generators.len())
                .with_parameter("dim", j.dim());
            r.record(
                "contains the generators",
                f.generators.iter().find(|g| !j.subspace().contains(g)).map(|g| Witness {
                    at: Location::Vector(g.clone()),
                    lhs: Vec::new(),
                    rhs: Vec::new(),
                }),
            );
            report.sections.push(r);
            report.result = Some(json::ideal_to_json(&f.algebra, j.subspace()));
        }
        IdealCmd::Intersect { first, second } => {
            let (f, g) = (load(first, json::parse_ideal)?, load(second, json::parse_ideal)?);
            let (j, h) = (checked_ideal(&f.algebra, &f.basis)?, checked_ideal(&g.algebra, &g.basis)?);
            let k = intersect_ideals(&j, &h)?;
            let mut r = ValidationReport::new("ideal intersection")
                .with_parameter("codim_j", j.codim())
                .with_parameter("codim_h", h.codim())
                .with_parameter("codim_intersection", k.codim());
            let lhs = k.codim();
            let rhs = h.codim() + (h.dim() - k.dim());
            r.record(
                "dim G/(J∩H) = dim G/H + dim H/(J∩H)",
                (lhs != rhs).then(|| count_witness(lhs, rhs)),
            );
            report.sections.push(r);
            report.result = Some(json::ideal_to_json(&f.algebra, k.subspace()));
        }
        IdealCmd::Preimage { morphism, ideal } => {
            let f = match load(morphism, json::parse_morphism)? {
                Morphism::Algebra(f) => f,
                _ => return Err(CliError::Input("preimage needs an algebra morphism".into())),
            };
            let g = load(ideal, json::parse_ideal)?;
            let j = checked_ideal(&f.target, &g.basis)?;
            let morphism_report = validate_morphism(&f);
            if !morphism_report.passed() {
                report.sections.push(morphism_report);
                return Err(CliError::Math("the map is not a morphism".into()));
            }
            let pre = preimage_ideal(&f, &j)?;
            let mut r = ValidationReport::new("preimage ideal")
                .with_parameter("codim_target", j.codim())
                .with_parameter("codim_preimage", pre.codim());
            r.record(
                "dim G/f^-1(J) <= dim G'/J",
                (pre.codim() > j.codim()).then(|| count_witness(pre.codim(), j.codim())),
            );
            report.sections.push(r);
            report.result = Some(json::ideal_to_json(&f.source, pre.subspace()));
        }
    }
    Ok(())
}

fn count_witness(lhs: usize, rhs: usize) -> Witness {
    Witness {
        at: Location::Basis(Vec::new()),
        lhs: vec![Rational::from_integer(lhs.into())],
        rhs: vec![Rational::from_integer(rhs.into())],
    }
}

/// `⟨tensor, e_x ⊗ e_y⟩` against `f(x·y)` (or `ξ(m·g)`), entry by entry.
fn pairing_against(
    name: &str,
    tensor: &bihom_core::Matrix,
    expected: impl Fn(usize, usize) -> Rational,
) -> ValidationReport {
    let mut r = ValidationReport::new(name);
    let mut witness = None;
    'outer: for x in 0..tensor.rows() {
        for y in 0..tensor.cols() {
            let e = expected(x, y);
            if tensor.get(x, y) != &e {
                witness = Some(Witness {
                    at: Location::Basis(vec![x, y]),
                    lhs: vec![tensor.get(x, y).clone()],
                    rhs: vec![e],
                });
                break 'outer;
            }
        }
    }
    r.record("pairing on all basis pairs", witness);
    r
}

fn sweedler(cmd: &SweedlerCmd, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        SweedlerCmd::Delta { functional } => {
            let f = load_functional(functional)?;
            let d = sweedler_delta(&f)?;
            let mut r = ValidationReport::new("Sweedler comultiplication")
                .with_parameter("witness_codim", f.witness().codim())
                .with_parameter("terms", d.terms.len());
            r.record(
                "every factor annihilates the witness",
                delta_factors_rewrap(&f, &d).err().map(|_| Witness {
                    at: Location::Basis(Vec::new()),
                    lhs: Vec::new(),
                    rhs: Vec::new(),
                }),
            );
            report.sections.push(r);
            let a = f.algebra().clone();
            let n = a.dim();
            let t = d.tensor();
            report.sections.push(pairing_against("<Delta(f), x (x) y> = f(xy)", &t, |x, y| {
                dot(f.coeffs(), &a.multiply(&unit(n, x), &unit(n, y)))
            }));
            let terms: Vec<Value> = d
                .terms
                .iter()
                .map(|(l, r)| json!({ "left": json::vector_to_json(l.coeffs()), "right": json::vector_to_json(r.coeffs()) }))
                .collect();
            report.result = Some(json!({
                "terms": terms,
                "tensor": json::matrix_to_json(&t),
                "witness": json::functional_to_json(&a, f.coeffs(), f.witness().subspace())["witness"],
            }));
        }
        SweedlerCmd::Add { first, second } => {
            let s = sweedler_add(&load_functional(first)?, &load_functional(second)?)?;
            report.result = Some(functional_json(&s));
        }
        SweedlerCmd::Twist { functional, which } => {
            let t = sweedler_twist(&load_functional(functional)?, (*which).into());
            report.result = Some(functional_json(&t));
        }
        SweedlerCmd::Morphism { morphism, functional } => {
            let f = match load(morphism, json::parse_morphism)? {
                Morphism::Algebra(f) => f,
                _ => return Err(CliError::Input("expected an algebra morphism".into())),
            };
            let b = load_functional(functional)?;
            let fb = sweedler_dual_morphism(&f, &b)?;
            report.sections.push(dual_morphism_report(&f, &b)?);
            report.result = Some(functional_json(&fb));
        }
    }
    Ok(())
}

fn module_sweedler(cmd: &ModuleSweedlerCmd, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        ModuleSweedlerCmd::Coaction { functional } => {
            let xi = load_module_functional(functional)?;
            let co = module_sweedler_coaction(&xi)?;
            let m = xi.module().clone();
            let a = m.algebra().clone();
            let mj = product_submodule(&m, xi.witness())?;
            let mut r = ValidationReport::new("module Sweedler coaction")
                .with_parameter("dim_mj", mj.dim())
                .with_parameter("terms", co.terms.len());
            let bad = co.terms.iter().any(|(l, g)| {
                module_sweedler_wrap(&m, l.coeffs().to_vec(), xi.witness()).is_err()
                    || sweedler_wrap(&a, g.coeffs().to_vec(), xi.witness()).is_err()
            });
            r.record(
                "left factors kill M·J, right factors kill J",
                bad.then(|| Witness { at: Location::Basis(Vec::new()), lhs: Vec::new(), rhs: Vec::new() }),
            );
            report.sections.push(r);
            let t = co.tensor();
            let (dm, dg) = (m.dim(), a.dim());
            report.sections.push(pairing_against("<rho°(xi), m (x) g> = xi(m.g)", &t, |p, j| {
                dot(xi.coeffs(), &m.act(&unit(dm, p), &unit(dg, j)))
            }));
            let terms: Vec<Value> = co
                .terms
                .iter()
                .map(|(l, g)| json!({ "left": json::vector_to_json(l.coeffs()), "right": json::vector_to_json(g.coeffs()) }))
                .collect();
            report.result = Some(json!({ "terms": terms, "tensor": json::matrix_to_json(&t) }));
        }
        ModuleSweedlerCmd::Add { first, second } => {
            let s = module_sweedler_add(&load_module_functional(first)?, &load_module_functional(second)?)?;
            report.result = Some(module_functional_json(&s));
        }
        ModuleSweedlerCmd::Morphism { morphism, functional } => {
            let s = match load(morphism, json::parse_morphism)? {
                Morphism::Module(s) => s,
                _ => return Err(CliError::Input("expected a module morphism".into())),
            };
            let xi = load_module_functional(functional)?;
            let sx = dual_module_morphism(&s, &xi)?;
            report.sections.push(dual_module_morphism_report(&s, &xi)?);
            report.sections.push(validate_comodule_morphism(&transposed_module_morphism(&s))?);
            report.result = Some(module_functional_json(&sx));
        }
    }
    Ok(())
}

fn dual_functional_json(f: &DualFunctional) -> Value {
    Value::Array(f.terms().iter().map(|(n, c)| json!([n.0, json::rational_to_json(c)])).collect())
}

fn poly(cmd: &PolyCmd, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        PolyCmd::Product { file, m, n } => {
            let alg = load(file, json::parse_poly_algebra)?;
            report.result = Some(json::poly_to_json(&twisted_product(&alg, m, n)?));
        }
        PolyCmd::Twist { file, which, m } => {
            let alg = load(file, json::parse_poly_algebra)?;
            report.result = Some(json::poly_to_json(&twist_apply(&alg, (*which).into(), m)?));
        }
        PolyCmd::Delta { file, n } => {
            let alg = load(file, json::parse_poly_algebra)?;
            let d = delta_dual(&alg, n)?;
            let collected: Vec<Value> = d
                .collected()
                .iter()
                .map(|((p, q), c)| json!([p.0, q.0, json::rational_to_json(c)]))
                .collect();
            let pairs: Vec<Value> = d
                .terms
                .iter()
                .map(|(l, r)| json!({ "left": dual_functional_json(l), "right": dual_functional_json(r) }))
                .collect();
            report.result = Some(json!({
                "witness": d.witness.to_string(),
                "pairs": pairs,
                "terms": collected,
            }));
        }
        PolyCmd::PairingCheck { file, n, degree_bound } => {
            let alg = load(file, json::parse_poly_algebra)?;
            report.sections.push(pairing_check(&alg, n, *degree_bound)?);
        }
        PolyCmd::CoassocCheck { file, n, degree_bound } => {
            let alg = load(file, json::parse_poly_algebra)?;
            report.sections.push(coassoc_check(&alg, n, *degree_bound)?);
        }
        PolyCmd::IdealCheck { file, ideal, degree_bound } => {
            let alg = load(file, json::parse_poly_algebra)?;
            let spec = ideal.get()?;
            let (r, _) = ideal_absorption_check(&alg, &spec, *degree_bound)?;
            report.sections.push(r);
            let complement: Vec<Value> =
                ideal_complement(&spec, alg.nvars()).iter().map(|m| json!(m.0)).collect();
            report.result = Some(json!({ "ideal": spec.to_string(), "complement": complement }));
        }
        PolyCmd::FiniteDual { file, terms, ideal, degree_bound } => {
            let alg = load(file, json::parse_poly_algebra)?;
            if let Some((m, _)) = terms.iter().find(|(m, _)| m.len() != alg.nvars()) {
                return Err(CliError::Input(format!("term {} does not have {} exponents", m, alg.nvars())));
            }
            let spec = ideal.get()?;
            let (r, checked) = ideal_absorption_check(&alg, &spec, *degree_bound)?;
            report.sections.push(r);
            let checked = checked.ok_or_else(|| CliError::Math(format!("{} is not an ideal up to the bound", spec)))?;
            let f = DualFunctional::from_terms(alg.nvars(), terms.iter().cloned());
            report.sections.push(functional_in_finite_dual(&alg, &f, &checked)?);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn unknown_flags_are_input_errors() {
        let (code, report) = run(["bihom", "validate", "algebra", "x.json", "--frobnicate"]);
        assert_eq!(code, 2);
        assert_eq!(report.error.unwrap().kind, FailureKind::Input);
    }

    #[test]
    fn help_exits_cleanly() {
        let (code, report) = run(["bihom", "--help"]);
        assert_eq!(code, 0);
        assert!(report.message.unwrap().contains("validate"));
    }

    #[test]
    fn suites_run_from_the_command_line() {
        let (code, report) = run(["bihom", "property", "zz", "--seed", "3", "--count", "10"]);
        assert_eq!(code, 0, "{}", report.render(Format::Text, false));
    }
}
