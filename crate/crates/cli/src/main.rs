//! Batch front-end: family verification, obstruction-system extraction,
//! system comparison, Gröbner analysis, rewriting-oracle runs, and the
//! per-degree invariant suite. All reports are UTF-8 JSON on stdout.
//!
//! Exit codes: 0 = pass/equal, 1 = fail/unequal/nonempty-conditional,
//! 2 = usage or internal error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use doa_core::cochain::{check_image, check_invariance, check_support_codim};
use doa_core::families::{build, extend_from_std, FamilyName, FamilySpec, TriMode};
use doa_core::groebner::{buchberger, hilbert_dimension, GroebnerOpts};
use doa_core::json;
use doa_core::ledger::LedgerName;
use doa_core::oracle::{build_rewrite, overlap_check};
use doa_core::verifier::{
    compare_systems, extract_system, ledger_system, std_nonexistence_check, CompareMode,
    ObstructionSystem,
};

#[derive(Parser)]
#[command(
    name = "doa",
    about = "Exact verification of PBW deformations of S(V)#S_n on doubled representations",
    version
)]
struct Cli {
    /// Worker threads for the evaluation grids (default: all cores, or
    /// DOA_JOBS).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the five PBW properties of a family instance.
    Verify(VerifyArgs),
    /// Extract the obstruction system of a symbolic family.
    Extract(ExtractArgs),
    /// Compare two obstruction systems as sets or as ideals.
    Compare(CompareArgs),
    /// Gröbner basis, ideal dimension and degree of a system.
    Groebner(GroebnerArgs),
    /// Cross-check a numeric instance with the rewriting oracle.
    Oracle(OracleArgs),
    /// Run the per-degree invariant suite.
    Invariants(InvariantsArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Family name, or `std-lie` for the standard-representation
    /// nonexistence certificate.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// JSON file binding parameter symbols to rationals or polynomials.
    #[arg(long)]
    bindings: Option<PathBuf>,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Output file for the ObstructionSystem JSON.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    bindings: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Left system: a JSON file.
    #[arg(long)]
    left: PathBuf,
    /// Right system: a JSON file or `ledger:NAME[+NAME…]`.
    #[arg(long)]
    right: String,
    #[arg(long, value_parser = ["set", "ideal"])]
    mode: String,
}

#[derive(Args)]
struct GroebnerArgs {
    /// Input ObstructionSystem JSON.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Compute the Krull dimension of the quotient (and projective
    /// dimension).
    #[arg(long)]
    dimension: bool,
    /// Compute the degree (implies --dimension).
    #[arg(long)]
    degree: bool,
    /// Time budget in seconds (default 3600).
    #[arg(long, default_value_t = 3600)]
    budget: u64,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// JSON file assigning a rational to every family parameter.
    #[arg(long)]
    point: PathBuf,
}

#[derive(Args)]
struct InvariantsArgs {
    #[arg(long)]
    n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli
        .jobs
        .or_else(|| std::env::var("DOA_JOBS").ok().and_then(|s| s.parse().ok()));
    if let Some(jobs) = jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Verify(args) => verify(args),
        Command::Extract(args) => extract(args),
        Command::Compare(args) => compare(args),
        Command::Groebner(args) => groebner(args),
        Command::Oracle(args) => oracle(args),
        Command::Invariants(args) => invariants(args),
    }
}

fn load_bindings(path: &Option<PathBuf>) -> anyhow::Result<BTreeMap<doa_core::param::ParamSymbol, doa_core::param::ParamPoly>> {
    match path {
        None => Ok(BTreeMap::new()),
        Some(p) => Ok(json::bindings_from_json(&std::fs::read_to_string(p)?)?),
    }
}

fn build_family(name: &str, n: usize, bindings: &Option<PathBuf>) -> anyhow::Result<doa_core::cochain::TwoCochain> {
    let mut spec = FamilySpec::new(FamilyName::parse(name)?, n);
    spec.bindings = load_bindings(bindings)?;
    Ok(build(&spec)?)
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    if args.family == "std-lie" {
        let report = std_nonexistence_check(args.n)?;
        print_json(&json::nonexistence_to_json(&report))?;
        // a complete certificate means the family does not exist
        return Ok(if report.certified {
            ExitCode::from(1)
        } else {
            ExitCode::from(2)
        });
    }
    let k = build_family(&args.family, args.n, &args.bindings)?;
    let report = doa_core::verifier::check_properties(&k)?;
    print_json(&json::verification_to_json(&args.family, &report))?;
    Ok(if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn extract(args: ExtractArgs) -> anyhow::Result<ExitCode> {
    let k = build_family(&args.family, args.n, &args.bindings)?;
    let sys = extract_system(&k)?;
    let text = serde_json::to_string_pretty(&json::system_to_json(&sys))?;
    std::fs::write(&args.out, format!("{text}\n"))?;
    println!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn parse_right_system(right: &str, n: usize) -> anyhow::Result<ObstructionSystem> {
    if let Some(names) = right.strip_prefix("ledger:") {
        let mut acc: Option<ObstructionSystem> = None;
        for name in names.split('+') {
            let sys = ledger_system(LedgerName::parse(name.trim())?, n)?;
            acc = Some(match acc {
                None => sys,
                Some(prev) => prev.union(&sys)?,
            });
        }
        Ok(acc.ok_or_else(|| anyhow::anyhow!("empty ledger union"))?)
    } else {
        Ok(json::system_from_json(&std::fs::read_to_string(right)?)?)
    }
}

fn compare(args: CompareArgs) -> anyhow::Result<ExitCode> {
    let left = json::system_from_json(&std::fs::read_to_string(&args.left)?)?;
    let right = parse_right_system(&args.right, left.n)?;
    let mode = CompareMode::parse(&args.mode)?;
    let report = compare_systems(&left, &right, mode)?;
    print_json(&json::comparison_to_json(&report))?;
    Ok(if report.equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct GroebnerReportJson {
    schema_version: String,
    n: usize,
    basis_size: Option<usize>,
    spairs: Option<usize>,
    elapsed_ms: u128,
    timed_out: bool,
    affine_dim: Option<i64>,
    projective_dim: Option<i64>,
    degree: Option<String>,
}

fn groebner(args: GroebnerArgs) -> anyhow::Result<ExitCode> {
    let sys = json::system_from_json(&std::fs::read_to_string(&args.input)?)?;
    let start = std::time::Instant::now();
    let opts = GroebnerOpts {
        budget: Some(Duration::from_secs(args.budget)),
        degree_cap: None,
    };
    let want_dims = args.dimension || args.degree;
    match buchberger(&sys.generators, opts) {
        Ok(gb) => {
            let dims = if want_dims {
                Some(hilbert_dimension(&gb, &sys.symbols)?)
            } else {
                None
            };
            let report = GroebnerReportJson {
                schema_version: json::report_schema_version().into(),
                n: sys.n,
                basis_size: Some(gb.generators.len()),
                spairs: Some(gb.spairs),
                elapsed_ms: start.elapsed().as_millis(),
                timed_out: false,
                affine_dim: dims.as_ref().map(|d| d.affine_dim),
                projective_dim: dims.as_ref().map(|d| d.projective_dim),
                degree: dims.as_ref().map(|d| d.degree.to_string()),
            };
            print_json(&report)?;
            Ok(ExitCode::SUCCESS)
        }
        Err(doa_core::Error::BudgetExceeded { elapsed_ms }) => {
            let report = GroebnerReportJson {
                schema_version: json::report_schema_version().into(),
                n: sys.n,
                basis_size: None,
                spairs: None,
                elapsed_ms,
                timed_out: true,
                affine_dim: None,
                projective_dim: None,
                degree: None,
            };
            print_json(&report)?;
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.into()),
    }
}

fn oracle(args: OracleArgs) -> anyhow::Result<ExitCode> {
    let k = build_family(&args.family, args.n, &None)?;
    let point = json::point_from_json(&std::fs::read_to_string(&args.point)?)?;
    let numeric = k.specialize(&point);
    let rs = build_rewrite(&numeric)?;
    let report = overlap_check(&rs);
    print_json(&json::oracle_to_json(&report))?;
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct InvariantsJson {
    schema_version: String,
    n: usize,
    pass: bool,
    checks: Vec<CheckJson>,
}

fn invariants(args: InvariantsArgs) -> anyhow::Result<ExitCode> {
    let n = args.n;
    doa_core::check_n(n)?;
    let mut checks: Vec<CheckJson> = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(CheckJson {
            name: name.into(),
            pass,
            detail,
        });
    };

    let dim = doa_core::space::invariant_two_form_dim(n)?;
    push(
        "invariant_two_form_dim",
        dim == 2,
        format!("dim (Λ²V*)^G = {dim}"),
    );

    let mut families_ok = true;
    let mut detail = String::new();
    for name in FamilyName::ALL {
        let k = build(&FamilySpec::new(name, n))?;
        let ok = check_invariance(&k).ok() && check_image(&k).ok() && check_support_codim(&k).ok();
        if !ok {
            families_ok = false;
            detail.push_str(&format!("{name} "));
        }
    }
    push(
        "family_well_formedness",
        families_ok,
        if families_ok {
            "invariance, image, support codim".into()
        } else {
            format!("failing: {detail}")
        },
    );

    let tri_match = doa_core::families::build_kappa_tri(n, TriMode::Formula)
        == doa_core::families::build_kappa_tri(n, TriMode::Matrix);
    push("tri_formula_vs_matrix", tri_match, String::new());

    let lie1 = build(&FamilySpec::new(FamilyName::Lie1, n))?;
    let refl_l = build(&FamilySpec::new(FamilyName::Refl, n))?.linear_part();
    let pre_doa =
        doa_core::cochain::psi(&lie1).is_zero() && doa_core::cochain::psi(&refl_l).is_zero();
    push("mixed_jacobi_of_linear_parts", pre_doa, String::new());

    let tri = build(&FamilySpec::new(FamilyName::Tri, n))?;
    let theta = doa_core::cochain::phi(&refl_l, &refl_l);
    let only_3cycles = theta
        .support()
        .iter()
        .all(|g| doa_core::group::classify(g).is_3cycle());
    let first = theta
        .sub(&doa_core::cochain::psi(&tri).scale(&doa_core::rat::rat(2)))
        .is_zero();
    push(
        "first_obstruction_identity",
        only_3cycles && first,
        "phi(reflL, reflL) = 2 psi(triC), supported on 3-cycles".into(),
    );

    let reflc_tri = doa_core::families::refl_constant_only(n).add(&tri);
    let second = doa_core::cochain::phi(&reflc_tri, &refl_l).is_zero();
    push("second_obstruction_identity", second, String::new());

    let sys = extract_system(&build(&FamilySpec::new(FamilyName::ReflFull, n))?)?;
    let target = ledger_system(LedgerName::Obstr2PhiC1C2C3L2, n)?;
    let cmp = compare_systems(&sys, &target, CompareMode::Set)?;
    push(
        "refl_full_conditions",
        cmp.equal,
        format!("{} generators", sys.len()),
    );

    let lie_sys = extract_system(&build(&FamilySpec::new(FamilyName::Lie, n))?)?;
    let cmp = compare_systems(&lie_sys, &ledger_system(LedgerName::LOAFull, n)?, CompareMode::Ideal)?;
    push(
        "lie_family_ledger_ideal_equality",
        cmp.equal,
        format!("extracted {} generators", lie_sys.len()),
    );

    for name in [
        FamilyName::ReflTri,
        FamilyName::Combined,
        FamilyName::StdRefl,
        FamilyName::RcaStd,
    ] {
        let report = doa_core::verifier::check_properties(&build(&FamilySpec::new(name, n))?)?;
        push(&format!("verify_{name}"), report.pass(), String::new());
    }

    let rca_perm = extract_system(&build(&FamilySpec::new(FamilyName::RcaPerm, n))?)?;
    push("rca_perm_unconstrained", rca_perm.is_empty(), String::new());
    let rca_free = extract_system(&build(&FamilySpec::new(FamilyName::RcaStdFree, n))?)?;
    let trace = doa_core::param::ParamPoly::sym(doa_core::param::ParamSymbol::Alpha).add(
        &doa_core::param::ParamPoly::sym(doa_core::param::ParamSymbol::Beta)
            .scale(&doa_core::rat::rat(n as i64 - 1)),
    );
    push(
        "rca_std_trace_condition",
        rca_free.len() == 1 && rca_free.generators[0] == trace,
        format!("{:?}", rca_free.generators),
    );

    let nonexistence = std_nonexistence_check(n)?;
    push("std_lie_nonexistence", nonexistence.certified, String::new());

    let ext = extend_from_std(&build(&FamilySpec::new(FamilyName::StdRefl, n))?)?;
    push(
        "std_refl_extension_invariant",
        check_invariance(&ext).ok() && check_image(&ext).ok(),
        String::new(),
    );

    let pass = checks.iter().all(|c| c.pass);
    // human-readable lines on stderr; stdout carries the JSON report
    for c in &checks {
        eprintln!(
            "[{}] {}{}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            if c.detail.is_empty() {
                String::new()
            } else {
                format!(" — {}", c.detail)
            }
        );
    }
    let report = InvariantsJson {
        schema_version: json::report_schema_version().into(),
        n,
        pass,
        checks,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
