//! Command-line front end: parse symbols from coefficient literals, run the
//! analysis modules, emit human-readable or JSON reports.
//!
//! Exit codes: 0 success, 2 parse error, 3 violated precondition (e.g. a
//! command that needs circle poles got a general symbol), 4 internal
//! inconsistency (an exact identity that is a theorem failed — never
//! expected).

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::PathBuf;
use toeplitz_lab::apply::{
    apply_forward, compression_solve, hardy_pairing, szego_eigen,
    DomElement,
};
use toeplitz_lab::error::Error;
use toeplitz_lab::profile::{adjoint_profile, forward_flags, profile, RationalFunction};
use toeplitz_lab::report;
use toeplitz_lab::rootloc::factor_circle_with;
use toeplitz_lab::scalar::parse_complex;
use toeplitz_lab::selfadjoint::{analyze as selfadjoint_analyze, helson_family};
use toeplitz_lab::smirnov::canonical_form;
use toeplitz_lab::symbol::{make_symbol, omega_star, RationalSymbol};
use toeplitz_lab::verify;
use toeplitz_lab::{Poly, Result};

#[derive(Parser)]
#[command(
    name = "toeplitz-lab",
    about = "Operator profiles for Toeplitz-like operators with rational symbols having circle poles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SymbolArgs {
    /// Numerator coefficients, ascending, as a JSON array of complex
    /// literals: e.g. '["-i","-i"]' for -i - iz.
    #[arg(long)]
    s: String,
    /// Denominator coefficients, same format.
    #[arg(long)]
    q: String,
    /// Lebesgue exponent label (formulas are p-independent).
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    /// exact | numeric: numeric forces floating factorizations in reports.
    #[arg(long, default_value = "exact")]
    mode: String,
    /// Classification tolerance for numeric factorizations.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Symbol data plus the forward operator profile.
    Analyze {
        #[command(flatten)]
        sym: SymbolArgs,
        /// Write a CSV of sampled boundary values omega(e^{i theta}).
        #[arg(long)]
        emit_curve: Option<PathBuf>,
    },
    /// Adjoint operator profile.
    Adjoint {
        #[command(flatten)]
        sym: SymbolArgs,
    },
    /// Symmetry and selfadjoint-extension certificate for T* (p = 2).
    Selfadjoint {
        #[command(flatten)]
        sym: SymbolArgs,
    },
    /// Apply T to q*h + r.
    Apply {
        #[command(flatten)]
        sym: SymbolArgs,
        /// Coefficients of the polynomial h.
        #[arg(long)]
        h: String,
        /// Coefficients of r (degree < deg q).
        #[arg(long)]
        r: String,
    },
    /// Hardy pairing of two rational functions with poles off the closed disk.
    Pair {
        #[arg(long)]
        f_num: String,
        #[arg(long)]
        f_den: String,
        #[arg(long)]
        g_num: String,
        #[arg(long)]
        g_den: String,
        #[arg(long)]
        json: bool,
    },
    /// Szegő-kernel eigenrelation certificate at λ.
    Szego {
        #[command(flatten)]
        sym: SymbolArgs,
        /// Complex literal, |λ| < 1.
        #[arg(long)]
        lambda: String,
    },
    /// Solve the finite Toeplitz-section relation for r1.
    Compress {
        #[command(flatten)]
        sym: SymbolArgs,
        #[arg(long)]
        r1: String,
    },
    /// Canonical Smirnov form of the symbol (Fejér–Riesz factorization).
    Canonical {
        #[command(flatten)]
        sym: SymbolArgs,
    },
    /// Analyze the Cayley-power family member ω_k.
    Helson {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in verification corpus.
    Selftest {
        /// Overrides the TOEPLITZ_LAB_SEED environment variable.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_poly_literal(text: &str) -> Result<Poly> {
    let items: Vec<String> = serde_json::from_str(text).map_err(|e| Error::Parse {
        position: e.column(),
        expected: "JSON array of complex literals".into(),
    })?;
    let mut coeffs = Vec::with_capacity(items.len());
    for (idx, item) in items.iter().enumerate() {
        let c = parse_complex(item).map_err(|e| match e {
            Error::Parse { position, expected } => Error::Parse {
                position,
                expected: format!("{expected} (coefficient {idx})"),
            },
            other => other,
        })?;
        coeffs.push(c);
    }
    Ok(Poly::new(coeffs))
}

fn build_symbol(args: &SymbolArgs) -> Result<(RationalSymbol, Value)> {
    let s = parse_poly_literal(&args.s)?;
    let q = parse_poly_literal(&args.q)?;
    let omega = make_symbol(&s, &q)?;
    let mut sym_json = report::symbol_json(&omega);
    if args.mode == "numeric" {
        // Re-derive the displayed factorizations numerically at the
        // requested tolerance; the analysis itself stays exact.
        let qf = factor_circle_with(omega.q(), args.tol, 1e-10, true)?;
        if let Some(obj) = sym_json.as_object_mut() {
            obj.insert("q_factorization".into(), report::factorization_json(&qf));
            if !omega.s().is_zero() {
                let sf = factor_circle_with(omega.s(), args.tol, 1e-10, true)?;
                obj.insert("s_factorization".into(), report::factorization_json(&sf));
            }
        }
    }
    Ok((omega, sym_json))
}

fn emit(root: Value, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&root).unwrap());
    } else {
        print!("{}", report::render_text(&root));
    }
}

fn emit_curve(omega: &RationalSymbol, path: &PathBuf) -> Result<()> {
    let mut out = String::from("theta,re,im\n");
    for k in 0..1024 {
        let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / 1024.0;
        let z = num::complex::Complex64::from_polar(1.0, theta);
        if omega.q().eval_c64(z).norm() < 1e-12 {
            continue;
        }
        let v = omega.eval_c64(z);
        out.push_str(&format!("{theta},{},{}\n", v.re, v.im));
    }
    std::fs::File::create(path)
        .and_then(|mut f| f.write_all(out.as_bytes()))
        .map_err(|e| Error::InternalInconsistency(format!("cannot write curve file: {e}")))?;
    Ok(())
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { sym, emit_curve: curve } => {
            let (omega, sym_json) = build_symbol(&sym)?;
            let mut root = Map::new();
            root.insert("symbol".into(), sym_json);
            if omega.is_rat_t() && !omega.s().is_zero() {
                let prof = profile(&omega, sym.p)?;
                root.insert("profile".into(), report::forward_profile_json(&prof));
            } else if !omega.s().is_zero() {
                let flags = forward_flags(&omega)?;
                root.insert(
                    "profile".into(),
                    json!({
                        "closed_range": flags.closed_range,
                        "dense_range": flags.dense_range,
                        "fredholm": flags.fredholm,
                        "note": "full kernel/range descriptors need all poles on the circle",
                    }),
                );
            }
            if let Some(path) = curve {
                emit_curve(&omega, &path)?;
            }
            emit(Value::Object(root), sym.json);
            Ok(0)
        }
        Command::Adjoint { sym } => {
            let (omega, sym_json) = build_symbol(&sym)?;
            let prof = adjoint_profile(&omega, sym.p)?;
            let root = json!({
                "symbol": sym_json,
                "adjoint": report::adjoint_profile_json(&prof),
            });
            emit(root, sym.json);
            Ok(0)
        }
        Command::Selfadjoint { sym } => {
            let (omega, sym_json) = build_symbol(&sym)?;
            let rep = selfadjoint_analyze(&omega)?;
            let root = json!({
                "symbol": sym_json,
                "selfadjoint": report::selfadjoint_json(&rep),
            });
            emit(root, sym.json);
            Ok(0)
        }
        Command::Apply { sym, h, r } => {
            let (omega, sym_json) = build_symbol(&sym)?;
            let h = parse_poly_literal(&h)?;
            let r = parse_poly_literal(&r)?;
            let f = DomElement::from_polys(&omega, h, r)?;
            let image = apply_forward(&omega, &f)?;
            let input = f.value(&omega)?;
            let root = json!({
                "symbol": sym_json,
                "apply": {
                    "input": report::rational_fn_json(&input),
                    "image": report::rational_fn_json(&image),
                },
            });
            emit(root, sym.json);
            Ok(0)
        }
        Command::Pair {
            f_num,
            f_den,
            g_num,
            g_den,
            json: as_json,
        } => {
            let f = RationalFunction::new(parse_poly_literal(&f_num)?, parse_poly_literal(&f_den)?)?;
            let g = RationalFunction::new(parse_poly_literal(&g_num)?, parse_poly_literal(&g_den)?)?;
            let value = hardy_pairing(&f, &g)?;
            let root = json!({
                "pair": {
                    "f": report::rational_fn_json(&f),
                    "g": report::rational_fn_json(&g),
                    "value": value.to_string(),
                },
            });
            emit(root, as_json);
            Ok(0)
        }
        Command::Szego { sym, lambda } => {
            let (omega, sym_json) = build_symbol(&sym)?;
            let lambda = parse_complex(&lambda)?;
            let (c, r) = szego_eigen(&omega, &lambda)?;
            let root = json!({
                "symbol": sym_json,
                "szego": {
                    "lambda": lambda.to_string(),
                    "eigenvalue": c.to_string(),
                    "certificate": report::poly_json(&r),
                },
            });
            emit(root, sym.json);
            Ok(0)
        }
        Command::Compress { sym, r1 } => {
            let (omega, sym_json) = build_symbol(&sym)?;
            let r1 = parse_poly_literal(&r1)?;
            let r = compression_solve(&omega, &r1)?;
            // Cross-check against the division route on the fly.
            let f = DomElement::from_polys(&omega, Poly::zero(), r1.clone())?;
            let via_division = apply_forward(&omega, &f)?;
            let agree = via_division == RationalFunction::from_poly(r.clone());
            let root = json!({
                "symbol": sym_json,
                "compression": {
                    "r1": report::poly_json(&r1),
                    "solution": report::poly_json(&r),
                    "division_route_agrees": agree,
                },
            });
            emit(root, sym.json);
            if agree {
                Ok(0)
            } else {
                Err(Error::InternalInconsistency(
                    "compression and division routes disagree".into(),
                ))
            }
        }
        Command::Canonical { sym } => {
            let (omega, sym_json) = build_symbol(&sym)?;
            let triple = canonical_form(&omega)?;
            // Also report the conjugate symbol whose Sarason operator is T*.
            let star = omega_star(&omega);
            let root = json!({
                "symbol": sym_json,
                "canonical": report::canonical_json(&triple),
                "omega_star": {
                    "shift": star.shift,
                    "numer": report::poly_json(&star.numer),
                    "denom": report::poly_json(&star.denom),
                },
            });
            emit(root, sym.json);
            Ok(0)
        }
        Command::Helson { k, json: as_json } => {
            if k == 0 {
                return Err(Error::Parse {
                    position: 0,
                    expected: "k >= 1".into(),
                });
            }
            let (omega, rep) = helson_family(k)?;
            let root = json!({
                "symbol": report::symbol_json(&omega),
                "selfadjoint": report::selfadjoint_json(&rep),
            });
            emit(root, as_json);
            Ok(0)
        }
        Command::Selftest { seed, json: as_json } => {
            let seed = seed.unwrap_or_else(verify::default_seed);
            let outcomes = verify::run_all(seed);
            let mut failed = 0usize;
            if as_json {
                let items: Vec<Value> = outcomes
                    .iter()
                    .map(|o| {
                        json!({
                            "name": o.name,
                            "status": if o.passed { "ok" } else { "failed" },
                            "detail": o.detail,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "seed": seed, "checks": items }))
                        .unwrap()
                );
                failed = outcomes.iter().filter(|o| !o.passed).count();
            } else {
                println!("selftest seed {seed}");
                for o in &outcomes {
                    let status = if o.passed { "PASS" } else { "FAIL" };
                    println!("{status} {} — {}", o.name, o.detail);
                    if !o.passed {
                        failed += 1;
                    }
                }
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
