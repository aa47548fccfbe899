//! Command-line surface.
//!
//! Exit codes: 0 success, 1 user error (bad flags, syntax errors, unknown
//! variables), 2 internal invariant failure (a `--verify` cross-check
//! against the oracles disagreeing with the primary implementation).

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::diophantine::{
    borel::{borel_normal_form, expand_normal_form},
    hilbert_basis, minimal_solutions,
};
use crate::error::Error;
use crate::euler::{euler_apply, jet_prolong, morphism_compose, GradedMorphism};
use crate::filtration::{
    bound_kl, bound_lk, sequence_orders, series_order, truncate, Flavor,
};
use crate::oracle::{
    oracle_ideal_membership, oracle_minimal_solutions, oracle_substitute,
};
use crate::parse::{parse_expr, parse_signature, parse_trunc};
use crate::print::{format_expr, format_normal_form, parse_normal_form};
use crate::series::{series_add, series_mul, GradedSeries};
use crate::signature::WeightSignature;

#[derive(Parser)]
#[command(
    name = "zgraded",
    about = "Exact arithmetic in Z-graded supercommutative local models",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct SigExpr {
    /// Signature file (.gsig)
    #[arg(long, value_name = "FILE")]
    sig: PathBuf,
    /// Expression text, or `-` to read it from stdin
    #[arg(long, value_name = "TEXT", allow_hyphen_values = true)]
    expr: String,
    /// Truncation tag to impose on the input, e.g. `UF:3`
    #[arg(long, value_name = "FLAVOR:ORDER")]
    trunc: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hilbert basis of α·p = β·q
    Basis {
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        alpha: Vec<u64>,
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        beta: Vec<u64>,
        /// Cross-check against the box-bounded oracle
        #[arg(long)]
        verify: bool,
        /// Search box for --verify
        #[arg(long, value_name = "N", default_value_t = 12)]
        r#box: u64,
    },
    /// Minimal solutions of α·p − β·q = r
    Minimal {
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        alpha: Vec<u64>,
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        beta: Vec<u64>,
        #[arg(long, value_name = "R", allow_negative_numbers = true)]
        weight: i64,
        #[arg(long)]
        verify: bool,
        #[arg(long, value_name = "N", default_value_t = 12)]
        r#box: u64,
    },
    /// Sum of two expressions
    Add {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        /// Exactly two occurrences
        #[arg(long, value_name = "TEXT", num_args = 1, action = clap::ArgAction::Append, allow_hyphen_values = true)]
        expr: Vec<String>,
        #[arg(long, value_name = "FLAVOR:ORDER")]
        trunc: Option<String>,
    },
    /// Product of two expressions
    Mul {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        #[arg(long, value_name = "TEXT", num_args = 1, action = clap::ArgAction::Append, allow_hyphen_values = true)]
        expr: Vec<String>,
        #[arg(long, value_name = "FLAVOR:ORDER")]
        trunc: Option<String>,
    },
    /// Filtration order of an expression
    Order {
        #[command(flatten)]
        common: SigExpr,
        #[arg(long, value_name = "F|UF")]
        flavor: String,
        #[arg(long)]
        verify: bool,
    },
    /// Truncate an expression at a filtration order
    Truncate {
        #[command(flatten)]
        common: SigExpr,
        #[arg(long, value_name = "F|UF")]
        flavor: String,
        #[arg(long, value_name = "P")]
        at: u64,
    },
    /// Cofinal bounds l_k and k_l
    Bounds {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        #[arg(long, value_name = "R", allow_negative_numbers = true)]
        weight: i64,
        #[arg(long, value_name = "K")]
        k: Option<u64>,
        #[arg(long, value_name = "L")]
        l: Option<u64>,
    },
    /// Borel normal form of a homogeneous expression
    Borel {
        #[command(flatten)]
        common: SigExpr,
        #[arg(long, value_name = "R", allow_negative_numbers = true)]
        weight: i64,
    },
    /// Expand a Borel normal form back into an expression
    ExpandBorel {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        /// Normal-form file, or `-` to read it from stdin
        #[arg(long, value_name = "FILE", default_value = "-")]
        input: String,
    },
    /// Apply the Euler derivation
    Euler {
        #[command(flatten)]
        common: SigExpr,
    },
    /// Test weight-homogeneity
    CheckHomogeneous {
        #[command(flatten)]
        common: SigExpr,
        #[arg(long, value_name = "R", allow_negative_numbers = true)]
        weight: i64,
    },
    /// Apply a morphism pullback to an expression over its target
    ApplyMorphism {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
        #[arg(long, value_name = "TEXT", allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_name = "FLAVOR:ORDER")]
        trunc: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Compose two morphisms (first applied first)
    Compose {
        /// Exactly two occurrences: inner then outer
        #[arg(long, value_name = "FILE", num_args = 1, action = clap::ArgAction::Append)]
        morphism: Vec<PathBuf>,
    },
    /// Jet prolongation in the zero-weight variables
    Jet {
        #[command(flatten)]
        common: SigExpr,
        #[arg(long, value_name = "N")]
        order: u64,
    },
    /// F/UF order profile of the standard Cauchy-sequence family
    OrdersProfile {
        /// Family size N: variables ξ_i (weight i), η_i (weight −i), i ≤ N,
        /// increments ξ_i·η_i
        #[arg(long, value_name = "N")]
        family: u64,
    },
}

/// A user-facing failure with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: 1,
            msg: e.to_string(),
        }
    }
}

fn user_err(msg: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        msg: msg.into(),
    }
}

fn internal_err(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| user_err(format!("cannot read {}: {e}", path.display())))
}

fn read_stdin() -> Result<String, Failure> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| user_err(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn load_sig(path: &Path) -> Result<WeightSignature, Failure> {
    Ok(parse_signature(&read_file(path)?)?)
}

fn load_expr(
    sig: &WeightSignature,
    expr: &str,
    trunc: &Option<String>,
) -> Result<GradedSeries, Failure> {
    let text = if expr == "-" {
        read_stdin()?
    } else {
        expr.to_string()
    };
    let mut f = parse_expr(sig, &text)?;
    if let Some(t) = trunc {
        let t = parse_trunc(t)?;
        f = truncate(sig, &f, t.flavor, t.order);
    }
    Ok(f)
}

fn parse_flavor(s: &str) -> Result<Flavor, Failure> {
    match s {
        "F" => Ok(Flavor::F),
        "UF" => Ok(Flavor::UF),
        other => Err(user_err(format!("unknown flavor `{other}` (expected F or UF)"))),
    }
}

/// Loads a `.gmor` morphism file: `source:`/`target:` signature paths
/// (relative to the file), optional `trunc:`, then `var := expr` pullback
/// lines over the source signature.
pub fn load_morphism(path: &Path) -> Result<GradedMorphism, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::parse(1, 1, format!("cannot read {}: {e}", path.display()))
    })?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut source = None;
    let mut target = None;
    let mut trunc = None;
    let mut images: BTreeMap<String, String> = BTreeMap::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = line_no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: String| Error::parse(line, 1, msg);
        if let Some((name, rhs)) = content.split_once(":=") {
            images.insert(name.trim().to_string(), rhs.trim().to_string());
        } else if let Some(p) = content.strip_prefix("source:") {
            let full = dir.join(p.trim());
            let sig_text = std::fs::read_to_string(&full)
                .map_err(|e| err(format!("cannot read {}: {e}", full.display())))?;
            source = Some(parse_signature(&sig_text)?);
        } else if let Some(p) = content.strip_prefix("target:") {
            let full = dir.join(p.trim());
            let sig_text = std::fs::read_to_string(&full)
                .map_err(|e| err(format!("cannot read {}: {e}", full.display())))?;
            target = Some(parse_signature(&sig_text)?);
        } else if let Some(t) = content.strip_prefix("trunc:") {
            trunc = Some(parse_trunc(t.trim())?);
        } else {
            return Err(err(format!("unrecognized line `{content}`")));
        }
    }
    let source =
        source.ok_or_else(|| Error::parse(1, 1, "missing `source:` line"))?;
    let target =
        target.ok_or_else(|| Error::parse(1, 1, "missing `target:` line"))?;
    let mut parsed = BTreeMap::new();
    for (name, rhs) in images {
        parsed.insert(name, parse_expr(&source, &rhs)?);
    }
    GradedMorphism::new(source, target, parsed, trunc)
}

fn signature_line(sig: &WeightSignature) -> String {
    let zero: Vec<&str> = sig.zero_var_names().collect();
    let graded: Vec<String> = sig
        .graded_var_decls()
        .map(|(n, w)| format!("{n}:{w}"))
        .collect();
    match (zero.is_empty(), graded.is_empty()) {
        (false, false) => format!("zero: {}; vars: {}", zero.join(", "), graded.join(", ")),
        (false, true) => format!("zero: {}", zero.join(", ")),
        (true, false) => format!("vars: {}", graded.join(", ")),
        (true, true) => String::new(),
    }
}

fn exec(cmd: Cmd) -> Result<String, Failure> {
    match cmd {
        Cmd::Basis {
            alpha,
            beta,
            verify,
            r#box,
        } => {
            let basis = hilbert_basis(&alpha, &beta);
            if verify {
                let want = oracle_minimal_solutions(&alpha, &beta, 0, r#box);
                if basis != want {
                    return Err(internal_err(format!(
                        "verify failed: hilbert_basis disagrees with the box-{} oracle",
                        r#box
                    )));
                }
            }
            Ok(basis
                .iter()
                .map(|sv| format!("{sv}\n"))
                .collect())
        }
        Cmd::Minimal {
            alpha,
            beta,
            weight,
            verify,
            r#box,
        } => {
            let sols = minimal_solutions(&alpha, &beta, weight);
            if verify {
                // At r = 0 the unique minimal solution is the zero vector,
                // which the oracle excludes by convention.
                let want = if weight == 0 {
                    vec![crate::diophantine::SolutionVector::zero(
                        alpha.len(),
                        beta.len(),
                    )]
                } else {
                    oracle_minimal_solutions(&alpha, &beta, weight, r#box)
                };
                if sols != want {
                    return Err(internal_err(format!(
                        "verify failed: minimal_solutions disagrees with the box-{} oracle",
                        r#box
                    )));
                }
            }
            Ok(sols.iter().map(|sv| format!("{sv}\n")).collect())
        }
        Cmd::Add { sig, expr, trunc } | Cmd::Mul { sig, expr, trunc }
            if expr.len() != 2 =>
        {
            let _ = (sig, trunc);
            Err(user_err("expected exactly two --expr flags"))
        }
        Cmd::Add { sig, expr, trunc } => {
            let sig = load_sig(&sig)?;
            let f = load_expr(&sig, &expr[0], &trunc)?;
            let g = load_expr(&sig, &expr[1], &trunc)?;
            Ok(format!("{}\n", format_expr(&sig, &series_add(&sig, &f, &g)?)))
        }
        Cmd::Mul { sig, expr, trunc } => {
            let sig = load_sig(&sig)?;
            let f = load_expr(&sig, &expr[0], &trunc)?;
            let g = load_expr(&sig, &expr[1], &trunc)?;
            Ok(format!("{}\n", format_expr(&sig, &series_mul(&sig, &f, &g)?)))
        }
        Cmd::Order {
            common,
            flavor,
            verify,
        } => {
            let sig = load_sig(&common.sig)?;
            let f = load_expr(&sig, &common.expr, &common.trunc)?;
            let flavor = parse_flavor(&flavor)?;
            let order = series_order(&sig, &f, flavor);
            if verify {
                // Characterization: order ≥ p iff every monomial is in the
                // order-p ideal, checked directly by the oracle.
                for p in 0..=64u64 {
                    let member = f
                        .monomials()
                        .all(|m| oracle_ideal_membership(&sig, m, flavor, p));
                    if member != order.at_least(p) {
                        return Err(internal_err(format!(
                            "verify failed: order {order} disagrees with the membership oracle at p={p}"
                        )));
                    }
                }
            }
            Ok(format!("{order}\n"))
        }
        Cmd::Truncate { common, flavor, at } => {
            let sig = load_sig(&common.sig)?;
            let f = load_expr(&sig, &common.expr, &common.trunc)?;
            let flavor = parse_flavor(&flavor)?;
            let t = truncate(&sig, &f, flavor, at);
            Ok(format!("{}\n", format_expr(&sig, &t)))
        }
        Cmd::Bounds { sig, weight, k, l } => {
            let sig = load_sig(&sig)?;
            let mut out = String::new();
            if let Some(k) = k {
                out.push_str(&format!("l_k = {}\n", bound_lk(&sig, weight, k)?));
            }
            if let Some(l) = l {
                out.push_str(&format!("k_l = {}\n", bound_kl(&sig, weight, l)?));
            }
            if out.is_empty() {
                return Err(user_err("pass --k and/or --l"));
            }
            Ok(out)
        }
        Cmd::Borel { common, weight } => {
            let sig = load_sig(&common.sig)?;
            let f = load_expr(&sig, &common.expr, &common.trunc)?;
            let nf = borel_normal_form(&sig, &f, weight)?;
            Ok(format_normal_form(&nf))
        }
        Cmd::ExpandBorel { sig, input } => {
            let sig = load_sig(&sig)?;
            let text = if input == "-" {
                read_stdin()?
            } else {
                read_file(Path::new(&input))?
            };
            let nf = parse_normal_form(&sig, &text)?;
            let f = expand_normal_form(&sig, &nf)?;
            Ok(format!("{}\n", format_expr(&sig, &f)))
        }
        Cmd::Euler { common } => {
            let sig = load_sig(&common.sig)?;
            let f = load_expr(&sig, &common.expr, &common.trunc)?;
            Ok(format!("{}\n", format_expr(&sig, &euler_apply(&sig, &f))))
        }
        Cmd::CheckHomogeneous { common, weight } => {
            let sig = load_sig(&common.sig)?;
            let f = load_expr(&sig, &common.expr, &common.trunc)?;
            Ok(format!("{}\n", f.is_homogeneous(&sig, weight)))
        }
        Cmd::ApplyMorphism {
            morphism,
            expr,
            trunc,
            verify,
        } => {
            let phi = load_morphism(&morphism)?;
            let f = load_expr(phi.target(), &expr, &trunc)?;
            let result = phi.apply(&f)?;
            if verify {
                let want = oracle_substitute(&phi, &f)?;
                if result != want {
                    return Err(internal_err(
                        "verify failed: morphism apply disagrees with the substitution oracle",
                    ));
                }
            }
            Ok(format!("{}\n", format_expr(phi.source(), &result)))
        }
        Cmd::Compose { morphism } => {
            if morphism.len() != 2 {
                return Err(user_err("expected exactly two --morphism flags"));
            }
            let phi = load_morphism(&morphism[0])?;
            let psi = load_morphism(&morphism[1])?;
            let comp = morphism_compose(&phi, &psi)?;
            let mut out = String::new();
            for idx in 0..comp.target().num_vars() {
                out.push_str(&format!(
                    "{} := {}\n",
                    comp.target().name(idx),
                    format_expr(comp.source(), comp.image(idx))
                ));
            }
            Ok(out)
        }
        Cmd::Jet { common, order } => {
            let sig = load_sig(&common.sig)?;
            let f = load_expr(&sig, &common.expr, &common.trunc)?;
            let (ext, j) = jet_prolong(&sig, &f, order)?;
            Ok(format!(
                "{}\n{}\n",
                signature_line(&ext),
                format_expr(&ext, &j)
            ))
        }
        Cmd::OrdersProfile { family } => {
            if family == 0 {
                return Err(user_err("--family must be positive"));
            }
            let mut graded = Vec::new();
            for i in 1..=family {
                graded.push((format!("xi{i}"), i as i64));
            }
            for i in 1..=family {
                graded.push((format!("eta{i}"), -(i as i64)));
            }
            let sig = WeightSignature::new(vec![], graded)?;
            let mut increments = Vec::new();
            for i in 1..=family {
                let xi = GradedSeries::var(&sig, &format!("xi{i}"))?;
                let eta = GradedSeries::var(&sig, &format!("eta{i}"))?;
                increments.push(series_mul(&sig, &xi, &eta)?);
            }
            let mut out = String::new();
            for (fo, uo) in sequence_orders(&sig, &increments) {
                out.push_str(&format!("F={fo} UF={uo}\n"));
            }
            Ok(out)
        }
    }
}

/// Parses `argv` (including the program name), runs one subcommand, and
/// returns the exit code together with everything written to stdout.
/// Diagnostics go to stderr.
pub fn cli_dispatch<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through the error path with exit 0
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                return (0, rendered);
            }
            eprint!("{rendered}");
            return (code, String::new());
        }
    };
    match exec(cli.cmd) {
        Ok(out) => (0, out),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            (f.code, String::new())
        }
    }
}
