//! Command-line surface of the dualkummer library.
//!
//! Exit codes: 0 on success, 1 when a check computed a wrong value, 2 on
//! usage or input errors. Nothing here panics on user input.

mod checks;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use dualkummer::intlin::{kernel_mod, smith_normal_form};
use dualkummer::kummer::{translation_subgroup, verify_factorization, ModuliConfig};
use dualkummer::ledger::parse_ledger;
use dualkummer::orbits::{
    kummer_translation_model, orbifold_euler, singularity_report, FixedPointLedger, TwoStepInputs,
};
use dualkummer::torus::{dual_polarization, isogeny_kernel, PolarizedTorus, TorusHom};
use dualkummer::weyl::{
    betti_table, dual_kummer_decomposition, kummer_fourfold_decomposition, verbitsky_profile,
    weyl_dim, HighestWeight, Series,
};

use report::{Check, Report};

#[derive(Parser)]
#[command(
    name = "dualkummer",
    version,
    about = "Exact integer computations for torus fibrations: normal forms, isogeny kernels, \
             automorphism groups and quotient bookkeeping"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full built-in verification suite.
    VerifyPaper {
        /// Emit the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
        /// Run a single check family (e.g. `galois`).
        #[arg(long)]
        only: Option<String>,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        /// Matrix file, or inline literal like [[1,2],[3,4]].
        #[arg(long)]
        matrix: String,
        /// Also print the transforms U and V.
        #[arg(long)]
        full: bool,
    },
    /// Polarization type of a nondegenerate alternating form.
    PolarizationType {
        /// Form matrix file or inline literal.
        #[arg(long)]
        form: String,
    },
    /// Kernel of a torus isogeny, of the dual polarization, or mod m.
    Kernel {
        /// Isogeny matrix file or inline literal.
        #[arg(long)]
        matrix: Option<String>,
        /// Use the dual polarization isogeny of type (d1, d2).
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        d1: Option<u64>,
        #[arg(long)]
        d2: Option<u64>,
        /// Compute the kernel of the induced map on (Z/m)^k instead.
        #[arg(long, value_name = "M")]
        modulus: Option<u64>,
    },
    /// Translation subgroup of a Kummer moduli construction.
    Galois {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
        #[arg(long)]
        s: i64,
    },
    /// Check the minimal-isogeny factorization for one configuration.
    Factorization {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
        #[arg(long)]
        s: i64,
    },
    /// Matching-sum product of 2n degree-two classes.
    Fujiki {
        /// Builtin lattice name (kum2, u).
        #[arg(long)]
        lattice: String,
        /// Comma-separated vector names or inline a:b:c tuples.
        #[arg(long)]
        vectors: String,
        /// Extra named vectors, e.g. --define y=1,0,0,0,0,0,2 (repeatable).
        #[arg(long)]
        define: Vec<String>,
        /// Override the lattice's half-dimension n.
        #[arg(long)]
        half_dim: Option<usize>,
    },
    /// Cup product matrix of the ample class of type (d1, d2).
    CupL {
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Orbit decomposition and fixed-set summary of a ledger.
    Orbits {
        /// Ledger file; defaults to the built-in translation model.
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
    /// Full singularity and Euler accounting of the dual Kummer fourfold.
    DualKummerReport {
        /// Ledger file; defaults to the built-in translation model.
        #[arg(long)]
        ledger: Option<PathBuf>,
        /// Emit the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Representation dimensions, graded profiles and Betti tables.
    Llv {
        /// Weight spec like B4:2,0,0,0 or B4:1/2,1/2,1/2,1/2.
        #[arg(long)]
        weight: Option<String>,
        /// Print the graded profile of the (2,0,…,0) module for --b2.
        #[arg(long)]
        profile: bool,
        #[arg(long)]
        b2: Option<usize>,
        #[arg(long, default_value_t = 2)]
        half_dim: usize,
        /// Betti table of a named decomposition (kum2, dual-kum2).
        #[arg(long)]
        table: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::VerifyPaper { json, only } => {
            let report = checks::verify_paper(only.as_deref())?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_table());
            }
            Ok(if report.has_failures() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Cmd::Snf { matrix, full } => {
            let a = input::read_matrix(&matrix)?;
            let snf = smith_normal_form(&a);
            println!("D =\n{}", snf.d);
            if full {
                println!("U =\n{}", snf.u);
                println!("V =\n{}", snf.v);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::PolarizationType { form } => {
            let e = input::read_matrix(&form)?;
            let torus = PolarizedTorus::new(e).map_err(|e| anyhow::anyhow!("{e}"))?;
            let parts: Vec<String> = torus
                .polarization_type()
                .iter()
                .map(BigInt::to_string)
                .collect();
            println!("({})", parts.join(","));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Kernel { matrix, dual, d1, d2, modulus } => {
            let hom = match (matrix, dual) {
                (Some(_), true) => bail!("--matrix and --dual are mutually exclusive"),
                (Some(m), false) => TorusHom::new(input::read_matrix(&m)?),
                (None, true) => {
                    let (d1, d2) = match (d1, d2) {
                        (Some(a), Some(b)) => (a, b),
                        _ => bail!("--dual needs --d1 and --d2"),
                    };
                    let torus =
                        PolarizedTorus::of_type(&[BigInt::from(d1), BigInt::from(d2)])
                            .map_err(|e| anyhow::anyhow!("{e}"))?;
                    dual_polarization(
                        &torus.polarization_isogeny(),
                        &BigInt::from(d1 * d2),
                    )
                    .map_err(|e| anyhow::anyhow!("{e}"))?
                }
                (None, false) => bail!("kernel needs --matrix or --dual with --d1/--d2"),
            };
            let group = match modulus {
                Some(m) => {
                    if m < 2 {
                        bail!("--modulus must be at least 2");
                    }
                    if !hom.matrix().is_square() {
                        bail!("--modulus needs a square matrix");
                    }
                    kernel_mod(hom.matrix(), &BigInt::from(m))
                }
                None => isogeny_kernel(&hom).map_err(|e| anyhow::anyhow!("{e}"))?,
            };
            println!("{group}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Galois { n, d1, d2, s } => {
            let cfg = ModuliConfig::new(n, d1, d2, s).map_err(|e| anyhow::anyhow!("{e}"))?;
            if !cfg.coprime() {
                eprintln!("warning: gcd(d1, s) != 1; the group may degenerate");
            }
            println!("{}", translation_subgroup(&cfg));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Factorization { n, d1, d2, s } => {
            let cfg = ModuliConfig::new(n, d1, d2, s).map_err(|e| anyhow::anyhow!("{e}"))?;
            let ok = verify_factorization(&cfg);
            println!(
                "M_phi * M_psi {} (n+1)*I_8",
                if ok { "=" } else { "!=" }
            );
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Fujiki { lattice, vectors, define, half_dim } => {
            let mut li = input::builtin_lattice(&lattice, half_dim)?;
            for d in &define {
                let (name, v) = input::parse_define(d)?;
                li.names.insert(name, v);
            }
            let vs = input::resolve_vectors(&vectors, &li.names, li.lattice.rank())?;
            let value = li
                .lattice
                .fujiki_product(&vs)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CupL { d1, d2 } => {
            let (d1b, d2b) = (BigInt::from(d1), BigInt::from(d2));
            let l = dualkummer::ext::ample_class(&d1b, &d2b)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let cup = dualkummer::ext::cup_product_matrix(&l)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            println!("l = {l}");
            println!("matrix of l∪− in the dual basis:\n{cup}");
            let torus = PolarizedTorus::of_type(&[d1b.clone(), d2b.clone()])
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let dual = dual_polarization(&torus.polarization_isogeny(), &(d1b * d2b))
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            println!(
                "{} the dual polarization matrix",
                if &cup == dual.matrix() { "equals" } else { "differs from" }
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Orbits { ledger } => {
            let ledger = load_ledger(ledger.as_deref())?;
            for (g, data) in ledger.fixed_data() {
                println!("element {g:?}: {} fixed points", data.cardinality());
            }
            let report = singularity_report(&ledger, None)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            if let Some(total) = report.model_total {
                println!("orbits of the singular set: {total}");
                for (gen, count) in &report.per_stabilizer {
                    println!("  stabilizer generated by {gen:?}: {count} orbits");
                }
            }
            for w in &report.warnings {
                println!("warning: {w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::DualKummerReport { ledger, json } => {
            let ledger = load_ledger(ledger.as_deref())?;
            let report = dual_kummer_report(&ledger)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_table());
            }
            Ok(if report.has_failures() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Cmd::Llv { weight, profile, b2, half_dim, table } => {
            let mut did_something = false;
            if let Some(spec) = weight {
                let w = parse_weight(&spec)?;
                println!("dim {w} = {}", weyl_dim(&w));
                did_something = true;
            }
            if profile {
                let b2 = b2.context("--profile needs --b2")?;
                let p = verbitsky_profile(b2, half_dim)
                    .map_err(|e| anyhow::anyhow!("{e}"))?;
                for (d, v) in p.dims() {
                    println!("H^{d}: {v}");
                }
                println!("total: {}", p.total());
                did_something = true;
            }
            if let Some(name) = table {
                let entries = match name.as_str() {
                    "kum2" => kummer_fourfold_decomposition(),
                    "dual-kum2" => dual_kummer_decomposition(),
                    other => bail!("unknown table `{other}` (builtins: kum2, dual-kum2)"),
                };
                let t = betti_table(&entries, 8).map_err(|e| anyhow::anyhow!("{e}"))?;
                let betti: Vec<String> = t.betti.iter().map(BigInt::to_string).collect();
                println!("betti: ({})", betti.join(","));
                println!("total: {}", t.total);
                println!("euler: {}", t.euler);
                did_something = true;
            }
            if !did_something {
                bail!("llv needs one of --weight, --profile, --table");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_ledger(path: Option<&std::path::Path>) -> Result<FixedPointLedger> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading ledger {}", p.display()))?;
            parse_ledger(&text).map_err(|e| anyhow::anyhow!("{e}"))
        }
        None => Ok(kummer_translation_model()),
    }
}

/// The full dual-fourfold accounting as a check report: fixed-point data,
/// the stepwise and model singularity counts (with the disagreement
/// flagged), the local type, and the orbifold Euler number against the
/// cohomological one.
fn dual_kummer_report(ledger: &FixedPointLedger) -> Result<Report> {
    let declared = TwoStepInputs {
        first_quotient_fixed: 27,
        identified_orbits: 9,
        new_fixed_second_step: 9,
    };
    let sing = singularity_report(ledger, Some(declared))
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut checks = Vec::new();

    let counts: Vec<String> = ledger
        .fixed_data()
        .values()
        .map(|d| d.cardinality().to_string())
        .collect();
    checks.push(Check::compare(
        "fixed-points",
        "|Fix(τ)| = 27 per nontrivial translation",
        vec!["27"; ledger.fixed_data().len()].join(","),
        counts.join(","),
    ));
    if let Some(sw) = &sing.model_stepwise {
        checks.push(Check::compare(
            "identified-orbits",
            "27 singular points identified into 9",
            "9".into(),
            sw.identified_orbits.to_string(),
        ));
    }
    checks.push(Check::compare(
        "stepwise-count",
        "9 identified + 9 declared new fixed points",
        "18".into(),
        sing.stepwise_declared
            .map(|v| v.to_string())
            .unwrap_or_default(),
    ));
    if let Some(total) = sing.model_total {
        checks.push(Check::flagged(
            "stepwise-vs-model",
            "stepwise two-quotient count vs full orbit count of the model",
            sing.stepwise_declared
                .map(|v| v.to_string())
                .unwrap_or_default(),
            total.to_string(),
        ));
    }
    let types = dualkummer::orbits::symplectic_cyclic_local_types(3, 4);
    let types_str: Vec<String> = types.iter().map(ToString::to_string).collect();
    checks.push(Check::compare(
        "local-type",
        "the only symplectic order-3 local action",
        "1/3(1,1,2,2)".into(),
        types_str.join(", "),
    ));

    let full = betti_table(&kummer_fourfold_decomposition(), 8)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let dual = betti_table(&dual_kummer_decomposition(), 8)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let ambient: i64 = ledger.ambient_euler().unwrap_or_else(|| {
        full.euler.to_string().parse().expect("small integer")
    });
    let orbifold = orbifold_euler(ledger, ambient).map_err(|e| anyhow::anyhow!("{e}"))?;
    checks.push(Check::compare(
        "orbifold-euler",
        "(1/|G|)·Σ e(X^g) = e(X̌) from the dual decomposition",
        dual.euler.to_string(),
        orbifold.to_string(),
    ));
    for w in &sing.warnings {
        eprintln!("note: {w}");
    }
    Ok(Report::new(checks))
}

/// Parses `B4:2,0,0,0` or `D5:1/2,1/2,1/2,1/2,-1/2`.
fn parse_weight(spec: &str) -> Result<HighestWeight> {
    let (algebra, coords) = spec
        .split_once(':')
        .context("weight spec looks like B4:2,0,0,0")?;
    let series = match algebra.chars().next() {
        Some('B') | Some('b') => Series::B,
        Some('D') | Some('d') => Series::D,
        _ => bail!("series must be B or D"),
    };
    let rank: usize = algebra[1..]
        .parse()
        .context("rank must follow the series letter, e.g. B4")?;
    let mut doubled = Vec::new();
    for tok in coords.split(',') {
        let tok = tok.trim();
        let value = if let Some(num) = tok.strip_suffix("/2") {
            num.parse::<i64>().context("bad half-integer coordinate")?
        } else {
            2 * tok.parse::<i64>().context("bad integer coordinate")?
        };
        doubled.push(value);
    }
    if doubled.len() != rank {
        bail!("expected {rank} coordinates, got {}", doubled.len());
    }
    HighestWeight::new(series, doubled).map_err(|e| anyhow::anyhow!("{e}"))
}
