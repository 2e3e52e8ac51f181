//! Command-line front end: compute polynomial tables and run the identity
//! harness, with text, JSON, and CSV output.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcatalan::genfun::{
    alpha_beta_rec_first, area_col_poly, inv_lrm_fix_rec, inv_lrm_rec, maj_des_rec_first,
    narayana_poly, signed_closed,
};
use qcatalan::polyarith::{qtx, ExpVec, MultiPoly, VarContext};
use qcatalan::verify::{all_checks, find_check, run_checks, CheckReport};

#[derive(Parser)]
#[command(name = "qcatalan", version, about = "Exact polynomial families and identity checks for 321-avoiding permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial from a family
    Compute {
        family: Family,
        /// size parameter
        n: usize,
        /// descent count; only for family A
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit a coefficient matrix for a family, one row per size
    Table {
        family: Family,
        /// largest size to include
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run named identity checks (see `verify list`)
    Verify {
        /// check name, or "all", or "list" to enumerate the checks
        #[arg(default_value = "all")]
        check: String,
        /// alternative way to name the check
        #[arg(long = "check", value_name = "NAME")]
        check_flag: Option<String>,
        /// override the sweep bound (env QCAT_MAX_N is used when absent)
        #[arg(long = "max-n", value_name = "INT")]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// (inv, lrm) polynomial in q, t
    #[value(name = "I")]
    I,
    /// (inv, lrm, fix) polynomial in q, t, x
    #[value(name = "Iqtx")]
    Iqtx,
    /// (maj, des) polynomial in q, t
    #[value(name = "M")]
    M,
    /// maj polynomial over avoiders with exactly k descents
    #[value(name = "A")]
    A,
    /// Dyck-path (alpha, beta, des) polynomial in a, b, t
    #[value(name = "C")]
    C,
    /// polyomino (area, col) polynomial in q, t
    #[value(name = "P")]
    P,
    /// signed polynomial: the q = -1 evaluation
    #[value(name = "signed")]
    Signed,
    /// Narayana polynomial in t
    #[value(name = "narayana")]
    Narayana,
}

impl Family {
    fn context(self) -> VarContext {
        match self {
            Family::C => VarContext::Abt,
            _ => VarContext::Qtx,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Family::I => "I",
            Family::Iqtx => "Iqtx",
            Family::M => "M",
            Family::A => "A",
            Family::C => "C",
            Family::P => "P",
            Family::Signed => "signed",
            Family::Narayana => "narayana",
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute { family, n, k, format } => compute(family, n, k, format),
        Command::Table { family, n_max, format } => table(family, n_max, format),
        Command::Verify { check, check_flag, max_n, format } => {
            verify(check, check_flag, max_n, format)
        }
    }
}

fn family_poly(family: Family, n: usize, k: Option<usize>) -> Result<MultiPoly, String> {
    match family {
        Family::I => Ok(inv_lrm_rec(n)),
        Family::Iqtx => Ok(inv_lrm_fix_rec(n)),
        Family::M => Ok(maj_des_rec_first(n)),
        Family::A => {
            let k = k.ok_or("family A needs both n and k")?;
            if k >= n.max(1) {
                return Err(format!("k = {k} is out of range for n = {n}"));
            }
            Ok(maj_des_rec_first(n).coeff_of(qtx::T, k as i32))
        }
        Family::C => Ok(alpha_beta_rec_first(n)),
        Family::P => {
            if n == 0 {
                return Err("family P starts at n = 1".to_string());
            }
            Ok(area_col_poly(n))
        }
        Family::Signed => Ok(signed_closed(n)),
        Family::Narayana => Ok(narayana_poly(n)),
    }
}

/// Unimodality-style flags reported alongside family A polynomials.
fn shape_flags(p: &MultiPoly) -> (bool, bool, bool) {
    let symmetric = p.is_symmetric_in(qtx::Q);
    let unimodal = p.is_unimodal(qtx::Q).unwrap_or(false);
    let log_concave = p.is_log_concave(qtx::Q).unwrap_or(false);
    (symmetric, unimodal, log_concave)
}

fn compute(family: Family, n: usize, k: Option<usize>, format: Format) -> ExitCode {
    if family != Family::A && k.is_some() {
        return usage_error("k only applies to family A");
    }
    let poly = match family_poly(family, n, k) {
        Ok(p) => p,
        Err(m) => return usage_error(&m),
    };
    let ctx = family.context();
    match format {
        Format::Text => {
            println!("{}", poly.render(ctx));
            if family == Family::A {
                let (s, u, l) = shape_flags(&poly);
                println!("symmetric: {s}");
                println!("unimodal: {u}");
                println!("log-concave: {l}");
            }
        }
        Format::Json => {
            let mut obj = serde_json::json!({
                "family": family.label(),
                "n": n,
                "vars": var_names(ctx),
                "terms": poly,
            });
            if let Some(k) = k {
                obj["k"] = k.into();
            }
            if family == Family::A {
                let (s, u, l) = shape_flags(&poly);
                obj["symmetric"] = s.into();
                obj["unimodal"] = u.into();
                obj["log_concave"] = l.into();
            }
            println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
        Format::Csv => print!("{}", poly_csv(&poly, ctx)),
    }
    ExitCode::SUCCESS
}

fn var_names(ctx: VarContext) -> Vec<&'static str> {
    ctx.names()[..3].to_vec()
}

fn poly_csv(p: &MultiPoly, ctx: VarContext) -> String {
    let names = ctx.names();
    let mut out = format!("{},{},{},coef\n", names[0], names[1], names[2]);
    for (e, c) in p.terms() {
        out.push_str(&format!("{},{},{},{}\n", e.0[0], e.0[1], e.0[2], c));
    }
    out
}

fn table(family: Family, n_max: usize, format: Format) -> ExitCode {
    // rows are (n, optional k, polynomial)
    let mut rows: Vec<(usize, Option<usize>, MultiPoly)> = Vec::new();
    let start = if family == Family::P { 1 } else { 0 };
    for n in start..=n_max {
        match family {
            Family::A => {
                for k in 0..n.max(1) {
                    match family_poly(family, n, Some(k)) {
                        Ok(p) => rows.push((n, Some(k), p)),
                        Err(m) => return usage_error(&m),
                    }
                }
            }
            _ => match family_poly(family, n, None) {
                Ok(p) => rows.push((n, None, p)),
                Err(m) => return usage_error(&m),
            },
        }
    }
    let ctx = family.context();
    match format {
        Format::Text => {
            for (n, k, p) in &rows {
                match k {
                    Some(k) => println!("{}({n},{k}) = {}", family.label(), p.render(ctx)),
                    None => println!("{}({n}) = {}", family.label(), p.render(ctx)),
                }
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, k, p)| {
                    let mut obj = serde_json::json!({ "n": n, "terms": p });
                    if let Some(k) = k {
                        obj["k"] = (*k).into();
                    }
                    obj
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&items).expect("serializable"));
        }
        Format::Csv => {
            // columns: the union of exponent tuples, in display order
            let mut exps: Vec<ExpVec> = Vec::new();
            for (_, _, p) in &rows {
                for (e, _) in p.terms() {
                    if !exps.contains(e) {
                        exps.push(*e);
                    }
                }
            }
            let t_slot = ctx.t_slot();
            let others: Vec<usize> = (0..4).filter(|&s| s != t_slot).collect();
            let key = |e: &ExpVec| (e.0[t_slot], e.0[others[0]], e.0[others[1]], e.0[others[2]]);
            exps.sort_by_key(|e| std::cmp::Reverse(key(e)));
            let headers: Vec<String> = exps
                .iter()
                .map(|e| MultiPoly::monomial(1, *e).render(ctx))
                .collect();
            let key = if family == Family::A { "n,k," } else { "n," };
            println!("{key}{}", headers.join(","));
            for (n, k, p) in &rows {
                let mut fields = vec![n.to_string()];
                if let Some(k) = k {
                    fields.push(k.to_string());
                }
                for e in &exps {
                    fields.push(p.coefficient(e).to_string());
                }
                println!("{}", fields.join(","));
            }
        }
    }
    ExitCode::SUCCESS
}

fn verify(check: String, check_flag: Option<String>, max_n: Option<usize>, format: Format) -> ExitCode {
    let name = match (check_flag, check) {
        (Some(flag), pos) if pos != "all" && pos != flag => {
            return usage_error("conflicting check names given positionally and via --check");
        }
        (Some(flag), _) => flag,
        (None, pos) => pos,
    };
    if name == "list" {
        for c in all_checks() {
            println!("{:<32} (n <= {:>2})  {}", c.name, c.default_max_n, c.summary);
        }
        return ExitCode::SUCCESS;
    }
    let max_n = match max_n {
        Some(n) => Some(n),
        None => match std::env::var("QCAT_MAX_N") {
            Ok(v) => match v.parse::<usize>() {
                Ok(n) => Some(n),
                Err(_) => return usage_error(&format!("QCAT_MAX_N is not an integer: {v:?}")),
            },
            Err(_) => None,
        },
    };
    let checks = if name == "all" {
        all_checks()
    } else {
        match find_check(&name) {
            Some(c) => vec![c],
            None => {
                let names: Vec<&str> = all_checks().iter().map(|c| c.name).collect();
                return usage_error(&format!(
                    "unknown check {name:?}; available: all, {}",
                    names.join(", ")
                ));
            }
        }
    };
    let reports = run_checks(checks, max_n);
    let all_passed = reports.iter().all(CheckReport::passed);
    match format {
        Format::Text => {
            for r in &reports {
                let tag = if r.passed() { "pass" } else { "FAIL" };
                match &r.counterexample {
                    Some(ce) => println!("{tag}  {} (n <= {}): {ce}", r.name, r.max_n),
                    None => println!("{tag}  {} (n <= {})", r.name, r.max_n),
                }
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            println!("{passed}/{} checks passed", reports.len());
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
        }
        Format::Csv => {
            println!("name,max_n,status,counterexample");
            for r in &reports {
                let status = if r.passed() { "pass" } else { "fail" };
                let ce = r.counterexample.clone().unwrap_or_default().replace(',', ";");
                println!("{},{},{},{}", r.name, r.max_n, status, ce);
            }
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
