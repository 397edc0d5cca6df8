//! `modlie` command-line front end.
//!
//! Exit status: 0 on success, 1 when a check fails or a computation errors, 2 on bad input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use modlie::chevalley::{reduced_algebra, ChevalleyAlgebra};
use modlie::exactlin::{lattice_quotient, IntMatrix};
use modlie::highest_weight::{irreducible_with_cap, RepFile, DEFAULT_DIMENSION_CAP};
use modlie::invarpoly::{charpoly_invariance_check, is_invariant, jacobian_criterion, s4_difference_invariants_char2};
use modlie::rootsys::{CartanType, RootSystem, Weight};
use modlie::stabilizers::{generic_annihilator_dim, symmetric_nilpotent_check, DEFAULT_EXTENSION_DEGREE, DEFAULT_TRIALS};
use modlie::verify::{self, RunOptions, Status, DEFAULT_SEED};
use modlie::vinberg::{
    check_gammas, h_structure, pairing_kernel_check, sl4_tensor_lattice, theta_grading, v1_generic_stabilizer, ThetaCase,
};
use modlie::Error;

#[derive(Parser)]
#[command(name = "modlie", version, about = "Exact Lie algebra and modular representation computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Integer lattices
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Chevalley basis checks
    #[command(subcommand)]
    Chevalley(ChevalleyCmd),
    /// Build modules
    #[command(subcommand)]
    Rep(RepCmd),
    /// Lie algebra stabilizers
    #[command(subcommand)]
    Stab(StabCmd),
    /// Theta-group gradings of E7 and E8
    #[command(subcommand)]
    Vinberg(VinbergCmd),
    /// Invariant polynomials
    #[command(subcommand)]
    Invar(InvarCmd),
    /// Run the case catalog
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum RootsysCmd {
    /// Rank, root count, highest root and Weyl group order
    Info {
        #[arg(long = "type")]
        cartan_type: CartanType,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Invariant factors of Z^N modulo the span of integer rows read from a file
    Quotient {
        #[arg(long)]
        ambient_rank: usize,
        /// Whitespace-separated integers, one row per line
        #[arg(long)]
        rows: PathBuf,
    },
}

#[derive(Subcommand)]
enum ChevalleyCmd {
    /// Verify the Jacobi identity over the integers and mod p
    Check {
        #[arg(long = "type")]
        cartan_type: CartanType,
        #[arg(long = "char")]
        p: u64,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Irreducible module L(lambda) in characteristic p, written as JSON
    Build {
        #[arg(long = "type")]
        cartan_type: CartanType,
        /// Fundamental-weight coefficients, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        #[arg(long = "char")]
        p: u64,
        #[arg(long, default_value = "rep.json")]
        out: PathBuf,
        /// Largest Weyl module dimension attempted
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum StabCmd {
    /// Minimum annihilator dimension over random vectors
    Generic {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Extension degree d of the sampling field F_{p^d}
        #[arg(long, default_value_t = DEFAULT_EXTENSION_DEGREE)]
        ext: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Skew centralizer of a symmetric regular nilpotent n x n matrix
    Nilpotent {
        #[arg(long)]
        n: usize,
        #[arg(long = "char")]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VinbergCmd {
    /// Grading, gamma subsystem, pairing kernel and H for one case
    Case {
        case: ThetaCase,
        /// Also sample the stabilizer of a generic vector of V_1
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Weight lattice of L(q omega_1 + omega_2) for SL4, q = p^e
    Sl4 {
        #[arg(long = "char")]
        p: u64,
        #[arg(long)]
        e: u32,
    },
}

#[derive(Subcommand)]
enum InvarCmd {
    /// Invariance and Jacobian criterion for the degree 1, 4, 6 generators
    #[command(name = "jacobian-s4")]
    JacobianS4 {
        #[arg(long = "char", default_value_t = 2)]
        p: u64,
    },
    /// Characteristic polynomial coefficients under random conjugation
    Charpoly {
        #[arg(long)]
        n: usize,
        #[arg(long = "char")]
        p: u64,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run all cases, or those matching a filter
    All(VerifyArgs),
    /// Run one case by id
    Case {
        id: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List case ids and tags
    List,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Case ids or tags; repeat or separate with commas
    #[arg(long, value_delimiter = ',')]
    filter: Vec<String>,
    /// Skip cases larger than this dimension
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidType { .. }
            | Error::NotDominant(_)
            | Error::WeightLength { .. }
            | Error::NotPrime(_)
            | Error::UnsupportedField { .. }
            | Error::UnknownCase(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Failed(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn rootsys_info(ct: CartanType) -> CmdResult {
    let rs = RootSystem::from_type(ct)?;
    println!("type: {ct}");
    println!("rank: {}", rs.rank());
    println!("roots: {}", rs.num_roots());
    println!("positive_roots: {}", rs.positive_roots.len());
    println!("dimension: {}", rs.dim_algebra());
    println!("highest_root: {}", list(&rs.highest_root));
    println!("weyl_group_order: {}", rs.weyl_group_order());
    Ok(true)
}

fn lattice_cmd(ambient_rank: usize, rows: &Path) -> CmdResult {
    let text = fs::read_to_string(rows).map_err(|e| usage(format!("cannot read {}: {e}", rows.display())))?;
    let mut data = Vec::new();
    for (k, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let row: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| usage(format!("line {}: bad integer {t:?}", k + 1))))
            .collect::<Result<_, _>>()?;
        if row.len() != ambient_rank {
            return Err(usage(format!("line {}: {} entries, expected {ambient_rank}", k + 1, row.len())));
        }
        data.push(row);
    }
    let q = lattice_quotient(ambient_rank, &IntMatrix::from_i64_rows_with_cols(&data, ambient_rank))?;
    println!("invariant_factors: {}", list(&q.divisors));
    println!("free_rank: {}", q.free_rank);
    println!("quotient: {q}");
    Ok(true)
}

fn chevalley_check(ct: CartanType, p: u64) -> CmdResult {
    let rs = std::sync::Arc::new(RootSystem::from_type(ct)?);
    let ca = ChevalleyAlgebra::new_unchecked(rs)?;
    let integral = ca.check_string_property().and_then(|_| ca.check_jacobi());
    let reduced = ca.specialize(p).and_then(|la| la.check_jacobi());
    println!("type: {ct}");
    println!("dimension: {}", ca.dim());
    println!("jacobi_integers: {}", integral.is_ok());
    println!("jacobi_mod_p: {}", reduced.is_ok());
    if let Err(e) = integral.as_ref().and(reduced.as_ref()) {
        eprintln!("{e}");
    }
    Ok(integral.is_ok() && reduced.is_ok())
}

fn rep_build(ct: CartanType, lambda: Vec<i64>, p: u64, out: &Path, cap: usize) -> CmdResult {
    let la = reduced_algebra(ct, p)?;
    let m = irreducible_with_cap(&la, &Weight(lambda.clone()), cap)?;
    write_json(out, &RepFile::from_module(&m))?;
    println!("type: {ct}");
    println!("lambda: {}", list(&lambda));
    println!("p: {p}");
    println!("dim: {}", m.dim());
    println!("out: {}", out.display());
    Ok(true)
}

fn load_rep(path: &Path) -> Result<modlie::highest_weight::HwModule, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let rf: RepFile = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(rf.to_module()?)
}

fn stab_generic(rep: &Path, trials: usize, ext: usize, seed: u64, json_out: Option<&Path>) -> CmdResult {
    if trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let m = load_rep(rep)?;
    let s = generic_annihilator_dim(&m, trials, ext, seed)?;
    println!("generic_stabilizer_dim: {}", s.min_dim_observed);
    println!("algebra_dim: {}", m.algebra().dim());
    println!("module_dim: {}", m.dim());
    println!("field: F_{}^{}", s.p, s.d);
    println!("trials: {}", s.trials);
    println!("seed: {}", s.seed);
    println!("dims: {}", list(&s.dims));
    if let Some(path) = json_out {
        write_json(path, &s)?;
    }
    Ok(true)
}

fn stab_nilpotent(n: usize, p: u64, seed: u64) -> CmdResult {
    let r = symmetric_nilpotent_check(n, p, seed)?;
    println!("n: {n}");
    println!("p: {p}");
    println!("field: F_{}^{}", p, r.d);
    println!("skew_centralizer_dim: {}", r.skew_centralizer_dim);
    match r.scalar_commutator {
        Some(b) => println!("skew_with_scalar_commutator: {b}"),
        None => println!("skew_with_scalar_commutator: not applicable"),
    }
    println!("passed: {}", r.passed);
    Ok(r.passed)
}

fn vinberg_case(case: ThetaCase, verify: bool, trials: usize, seed: u64, json_out: Option<&Path>) -> CmdResult {
    let grading = theta_grading(case)?;
    let la = modlie::vinberg::ambient_algebra(case)?;
    let subsystem = check_gammas(case, la.root_system())?;
    let kernel = pairing_kernel_check(case)?;
    let h = h_structure(case)?;
    println!("case: {case}");
    println!("grading_dims: {}", list(&grading.dims));
    println!("degree_zero_type: {}", grading.degree_zero_type);
    println!("gamma_subsystem: {subsystem}");
    println!("pairing_kernel_dim: {}", kernel.kernel.len());
    println!("pairing_kernel_in_gamma_span: {}", kernel.kernel_in_gamma_span);
    println!("pairing_kernel_passed: {}", kernel.passed);
    println!("h_characters: {h}");
    let h_ok = h.divisors_u64() == case.expected_invariants();
    let mut ok = kernel.passed && h_ok && grading.degree_zero_type == case.degree_zero_type();
    let mut v1 = None;
    if verify {
        let r = v1_generic_stabilizer(case, trials.max(1), seed, 0)?;
        println!("v1_stabilizer_dim: {}", r.v1_stabilizer_dim);
        println!("v1_annihilator_is_h: {}", r.annihilator_is_h);
        println!("dimension_identity: {} = {} + {} - {}", r.dim_g1, r.dim_g0, r.dim_v1, r.rank);
        ok &= r.passed;
        v1 = Some(r);
    }
    println!("passed: {ok}");
    if let Some(path) = json_out {
        let value = json!({
            "case": case,
            "grading_dims": grading.dims,
            "degree_zero_type": grading.degree_zero_type,
            "gamma_subsystem": subsystem,
            "pairing_kernel": kernel,
            "h_characters": h,
            "v1": v1,
            "passed": ok,
        });
        write_json(path, &value)?;
    }
    Ok(ok)
}

fn vinberg_sl4(p: u64, e: u32) -> CmdResult {
    let r = sl4_tensor_lattice(p, e)?;
    println!("p: {p}");
    println!("q: {}", r.q);
    match &r.index {
        Some(i) => println!("index: {i}"),
        None => println!("index: infinite"),
    }
    println!("quotient: {}", r.invariants);
    let basis: Vec<String> = r.basis.iter().map(|b| format!("({})", list(b))).collect();
    println!("basis: {}", basis.join(" "));
    println!("matches_stated_basis: {}", r.matches_stated_basis);
    Ok(r.matches_stated_basis)
}

fn invar_jacobian(p: u64) -> CmdResult {
    let fs: Vec<_> = s4_difference_invariants_char2().iter().map(|f| f.reduce_mod(p)).collect();
    let invariant = fs.iter().all(is_invariant);
    let r = jacobian_criterion(&fs, p, 24)?;
    println!("p: {p}");
    println!("invariant: {invariant}");
    println!("degrees: {}", list(&fs.iter().map(|f| f.degree().unwrap_or(0)).collect::<Vec<_>>()));
    println!("degree_product: {}", r.degree_product);
    println!("jacobian_nonzero: {}", !r.determinant.is_zero());
    if let Some(w) = &r.witness {
        println!("witness: {}", list(&w.0));
    }
    println!("jacobian_terms: {}", r.determinant.num_terms());
    println!("holds: {}", r.holds && invariant);
    Ok(r.holds && invariant)
}

fn invar_charpoly(n: usize, p: u64, samples: usize, seed: u64) -> CmdResult {
    let r = charpoly_invariance_check(n, p, samples, seed)?;
    println!("n: {n}");
    println!("field: F_{}^{}", p, r.d);
    println!("samples: {samples}");
    println!("mismatches: {}", r.mismatches);
    println!("passed: {}", r.passed);
    Ok(r.passed)
}

fn verify_all(args: &VerifyArgs) -> CmdResult {
    let opts = RunOptions { seed: args.seed, cap: args.cap, workers: args.workers };
    let summary = verify::run_all(&args.filter, &opts)?;
    for w in &summary.warnings {
        eprintln!("warning: {w}");
    }
    for r in &summary.reports {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        let computed = match (&r.computed, &r.error) {
            (Some(c), _) => c.to_string(),
            (None, Some(e)) => format!("error: {e}"),
            (None, None) => "-".into(),
        };
        println!("{status} {} expected={} computed={} ({} ms)", r.case_id, r.expected, computed, r.elapsed_ms);
    }
    println!("passed: {} failed: {} skipped: {}", summary.passed, summary.failed, summary.skipped);
    if let Some(path) = &args.json {
        write_json(path, &summary.reports)?;
    }
    Ok(summary.all_passed())
}

fn verify_case(id: &str, seed: u64) -> CmdResult {
    let r = verify::run_case(id, seed)?;
    println!("{}", serde_json::to_string_pretty(&r).map_err(|e| Failure::Failed(e.to_string()))?);
    Ok(r.status != Status::Fail)
}

fn verify_list() -> CmdResult {
    let mut out = io::stdout().lock();
    for c in verify::catalog() {
        // a closed pipe (e.g. `| head`) ends the listing quietly
        if writeln!(out, "{}\t{}\t{}", c.id, c.tags.join(","), c.description).is_err() {
            break;
        }
    }
    Ok(true)
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Rootsys(RootsysCmd::Info { cartan_type }) => rootsys_info(cartan_type),
        Command::Lattice(LatticeCmd::Quotient { ambient_rank, rows }) => lattice_cmd(ambient_rank, &rows),
        Command::Chevalley(ChevalleyCmd::Check { cartan_type, p }) => chevalley_check(cartan_type, p),
        Command::Rep(RepCmd::Build { cartan_type, lambda, p, out, cap }) => rep_build(cartan_type, lambda, p, &out, cap),
        Command::Stab(StabCmd::Generic { rep, trials, ext, seed, json }) => stab_generic(&rep, trials, ext, seed, json.as_deref()),
        Command::Stab(StabCmd::Nilpotent { n, p, seed }) => stab_nilpotent(n, p, seed),
        Command::Vinberg(VinbergCmd::Case { case, verify, trials, seed, json }) => {
            vinberg_case(case, verify, trials, seed, json.as_deref())
        }
        Command::Vinberg(VinbergCmd::Sl4 { p, e }) => vinberg_sl4(p, e),
        Command::Invar(InvarCmd::JacobianS4 { p }) => invar_jacobian(p),
        Command::Invar(InvarCmd::Charpoly { n, p, samples, seed }) => invar_charpoly(n, p, samples, seed),
        Command::Verify(VerifyCmd::All(args)) => verify_all(&args),
        Command::Verify(VerifyCmd::Case { id, seed }) => verify_case(&id, seed),
        Command::Verify(VerifyCmd::List) => verify_list(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
