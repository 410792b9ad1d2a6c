//! Command-line interface: exact evaluation, identity sweeps, CSV emission
//! of the dilation grid, and DOT export of the tree oracle.
//!
//! Output contract: results go to stdout, diagnostics to stderr; exit code 0
//! on success, 1 on any identity-verification failure, 2 on usage or domain
//! errors. All output is byte-deterministic for fixed arguments; decimals
//! use a fixed 12-significant-digit rendering.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::delta::{delta_closed, delta_explicit, delta_recursive};
use crate::digitsum::{
    s1, s1_cumulative_forms, s1_cumulative_trollope, s1_from_delta, s1_from_takagi,
};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::sdtree::{build_dnc_tree, count_labels, export_dot};
use crate::takagi::{
    definition_args, takagi_closed, takagi_definition, takagi_dilation, takagi_explicit,
    tent_series, K_MAX,
};
use crate::verify::{verify_range, IdentityId, IdentityReport, RangeKind, ALL_IDENTITIES};

/// Documented cap for `dilation-csv` (the file has `2^k + 1` data rows).
pub const DILATION_CSV_K_MAX: u32 = 20;

#[derive(Debug, Parser)]
#[command(
    name = "takagi",
    version,
    about = "Exact Takagi-function values on dyadic rationals, D-node counts of \
             divide-and-conquer trees, and binary digit-sum identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate tau(R / 2^K) exactly
    Eval {
        r: u64,
        k: u32,
        /// Evaluation route; `all` cross-checks every applicable route
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
    },
    /// D-node count delta(N) of the divide-and-conquer tree on N leaves
    Delta {
        n: u64,
        #[arg(long, value_enum, default_value_t = DeltaMethod::Closed)]
        method: DeltaMethod,
    },
    /// Hamming weight s1(N)
    S1 {
        n: u64,
        #[arg(long, value_enum, default_value_t = S1Method::Direct)]
        method: S1Method,
    },
    /// Cumulative digit sum S1(N): all exact forms plus the floating Trollope value
    Cumsum { n: u64 },
    /// Sweep identities over integer ranges and report PASS/FAIL per identity
    ///
    /// Accepts `verify [--id ID]... [--lo L] [--hi H]` as well as the
    /// positional shorthand `verify [ID|all]... [L H]`.
    Verify {
        /// Identity to check (repeatable); default: the whole catalog
        #[arg(long = "id")]
        ids: Vec<String>,
        /// Range start (default: per-identity)
        #[arg(long)]
        lo: Option<u64>,
        /// Range end, inclusive (default: per-identity)
        #[arg(long)]
        hi: Option<u64>,
        /// Positional identity names ("all" for the catalog), optionally
        /// followed by the two range bounds
        #[arg(value_name = "ID|BOUND")]
        args: Vec<String>,
    },
    /// Emit CSV of the dilation y = delta(2^K + x) / 2^K for x in [0, 2^K]
    DilationCsv { k: u32 },
    /// Emit the divide-and-conquer tree on N leaves as DOT text
    TreeDot { n: u64 },
    /// List the identity catalog with range semantics and defaults
    Identities,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Dilation,
    Definition,
    Closed,
    Explicit,
    Tent,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DeltaMethod {
    Recursive,
    Closed,
    Explicit,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum S1Method {
    Direct,
    Takagi,
    Delta,
}

/// Renders `v` with 12 significant digits, deterministically.
pub fn format_float_12(v: f64) -> String {
    if v == 0.0 {
        return "0.000000000000".to_string();
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{:.prec$}", v, prec = decimals)
}

fn render(value: &Dyadic) -> String {
    format!("{value} = {}", format_float_12(value.to_f64()))
}

/// Executes a parsed invocation, writing results to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: Command, out: &mut impl Write) -> Result<i32> {
    match cmd {
        Command::Eval { r, k, route } => cmd_eval(r, k, route, out),
        Command::Delta { n, method } => {
            let value = match method {
                DeltaMethod::Recursive => delta_recursive(n)?,
                DeltaMethod::Closed => delta_closed(n)?,
                DeltaMethod::Explicit => delta_explicit(n)?,
                DeltaMethod::Tree => count_labels(&build_dnc_tree(n)?).1,
            };
            let _ = writeln!(out, "{value}");
            Ok(0)
        }
        Command::S1 { n, method } => {
            let value = match method {
                S1Method::Direct => s1(n),
                S1Method::Takagi => s1_from_takagi(n)?,
                S1Method::Delta => s1_from_delta(n)?,
            };
            let _ = writeln!(out, "{value}");
            Ok(0)
        }
        Command::Cumsum { n } => cmd_cumsum(n, out),
        Command::Verify { ids, lo, hi, args } => cmd_verify(&ids, lo, hi, &args, out),
        Command::DilationCsv { k } => cmd_dilation_csv(k, out),
        Command::TreeDot { n } => {
            let _ = write!(out, "{}", export_dot(&build_dnc_tree(n)?));
            Ok(0)
        }
        Command::Identities => {
            for id in ALL_IDENTITIES {
                let (lo, hi) = id.default_range();
                let _ = writeln!(
                    out,
                    "{:<25}  {}-range  default=[{lo},{hi}]  {}",
                    id.name(),
                    id.range_kind().label(),
                    id.citation()
                );
            }
            Ok(0)
        }
    }
}

fn cmd_eval(r: u64, k: u32, route: Route, out: &mut impl Write) -> Result<i32> {
    if k > K_MAX {
        return Err(Error::Range(format!(
            "k = {k} exceeds supported maximum {K_MAX}"
        )));
    }
    if r > 1 << k {
        return Err(Error::Domain(format!("r = {r} out of range [0, 2^{k}]")));
    }
    let single = |value: Result<Dyadic>, out: &mut dyn Write| -> Result<i32> {
        let v = value?;
        let _ = writeln!(out, "{}", render(&v));
        Ok(0)
    };
    match route {
        Route::Dilation => single(takagi_dilation(r, k), out),
        Route::Tent => single(tent_series(&Dyadic::new(r as i128, k)?), out),
        Route::Closed => single(takagi_closed(r, k), out),
        Route::Explicit => single(takagi_explicit(r, k), out),
        Route::Definition => match definition_args(r, k) {
            Some((n, kd)) => single(takagi_definition(n, kd), out),
            None => Err(Error::Domain(
                "route 'definition' needs k >= 1 and r < 2^k".into(),
            )),
        },
        Route::All => {
            let applicable = k >= 1 && r < 1 << k;
            let routes: [(&str, Option<Dyadic>); 5] = [
                ("dilation", Some(takagi_dilation(r, k)?)),
                (
                    "definition",
                    match definition_args(r, k) {
                        Some((n, kd)) => Some(takagi_definition(n, kd)?),
                        None => None,
                    },
                ),
                (
                    "closed",
                    if applicable {
                        Some(takagi_closed(r, k)?)
                    } else {
                        None
                    },
                ),
                (
                    "explicit",
                    if applicable {
                        Some(takagi_explicit(r, k)?)
                    } else {
                        None
                    },
                ),
                ("tent", Some(tent_series(&Dyadic::new(r as i128, k)?)?)),
            ];
            for (name, value) in &routes {
                match value {
                    Some(v) => {
                        let _ = writeln!(out, "{name:<10}  {}", render(v));
                    }
                    None => {
                        let _ = writeln!(out, "{name:<10}  n/a (needs k >= 1 and r < 2^k)");
                    }
                }
            }
            let values: Vec<Dyadic> = routes.iter().filter_map(|(_, v)| *v).collect();
            if values.iter().all(|v| *v == values[0]) {
                let _ = writeln!(out, "{:<10}  OK ({} routes)", "agreement", values.len());
                Ok(0)
            } else {
                let _ = writeln!(out, "{:<10}  DISAGREE", "agreement");
                Ok(1)
            }
        }
    }
}

fn cmd_cumsum(n: u64, out: &mut impl Write) -> Result<i32> {
    let (a, b, c) = s1_cumulative_forms(n)?;
    let _ = writeln!(out, "form_a    {a}");
    let _ = writeln!(out, "form_b    {b}");
    let _ = writeln!(out, "form_c    {c}");
    if a != b || b != c {
        return Ok(1);
    }
    if n >= 2 {
        let float = s1_cumulative_trollope(n)?;
        let rel = (float - c as f64).abs() / (c as f64).max(1.0);
        let _ = writeln!(
            out,
            "trollope  {} (rel err {rel:.3e})",
            format_float_12(float)
        );
    } else {
        let _ = writeln!(out, "trollope  n/a (needs n >= 2)");
    }
    Ok(0)
}

fn cmd_verify(
    ids: &[String],
    mut lo: Option<u64>,
    mut hi: Option<u64>,
    args: &[String],
    out: &mut impl Write,
) -> Result<i32> {
    // Positional form: identity names (or "all") with the two range bounds
    // as trailing numbers.
    let mut names: Vec<&String> = ids.iter().collect();
    let mut bounds: Vec<u64> = Vec::new();
    for token in args {
        match token.parse::<u64>() {
            Ok(v) => bounds.push(v),
            Err(_) => names.push(token),
        }
    }
    match bounds.as_slice() {
        [] => {}
        [l, h] if lo.is_none() && hi.is_none() => {
            lo = Some(*l);
            hi = Some(*h);
        }
        _ => {
            return Err(Error::Domain(
                "give the range as exactly two bounds (either `L H` or `--lo L --hi H`)".into(),
            ))
        }
    }
    let selected: Vec<IdentityId> = if names.is_empty() || names.iter().any(|s| *s == "all") {
        ALL_IDENTITIES.to_vec()
    } else {
        names
            .iter()
            .map(|name| {
                IdentityId::from_name(name)
                    .ok_or_else(|| Error::Domain(format!("unknown identity id '{name}'")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let mut all_passed = true;
    for id in selected {
        // One blanket range can span identities with different range kinds
        // and caps; clamp per identity (the report prints the effective
        // range), so `verify all L H` stays meaningful.
        let (dlo, dhi) = id.default_range();
        let mut lo_eff = lo.unwrap_or(dlo);
        if id.range_kind() == RangeKind::N {
            lo_eff = lo_eff.max(1);
        }
        let hi_eff = hi.unwrap_or(dhi).min(id.cap());
        if lo_eff > hi_eff {
            let _ = writeln!(
                out,
                "{:<25}  {}=[{lo_eff},{hi_eff}]  checked=0  PASS (empty range after cap)",
                id.name(),
                id.range_kind().label()
            );
            continue;
        }
        let report = verify_range(id, lo_eff, hi_eff)?;
        let _ = writeln!(out, "{}", format_report(&report));
        all_passed &= report.passed;
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn format_report(report: &IdentityReport) -> String {
    let mut line = format!(
        "{:<25}  {}=[{},{}]  checked={}  {}",
        report.id.name(),
        report.id.range_kind().label(),
        report.lo,
        report.hi,
        report.checked,
        if report.passed { "PASS" } else { "FAIL" }
    );
    if let Some(f) = &report.first_failure {
        line.push_str(&format!(
            "  first failure at {}: lhs = {}, rhs = {}",
            f.instance, f.lhs, f.rhs
        ));
    }
    line
}

fn cmd_dilation_csv(k: u32, out: &mut impl Write) -> Result<i32> {
    if k < 1 {
        return Err(Error::Domain("dilation-csv needs k >= 1".into()));
    }
    if k > DILATION_CSV_K_MAX {
        return Err(Error::Range(format!(
            "k = {k} exceeds the dilation-csv cap {DILATION_CSV_K_MAX}"
        )));
    }
    let _ = writeln!(out, "x,y_num,y_den,y_float");
    for x in 0..=(1u64 << k) {
        let y = takagi_dilation(x, k)?;
        let _ = writeln!(
            out,
            "{x},{},{},{}",
            y.num(),
            y.den(),
            format_float_12(y.to_f64())
        );
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cmd(cmd: Command) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(Cli { command: cmd }, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_single_routes() {
        let (code, out, _) = run_cmd(Command::Eval {
            r: 1,
            k: 2,
            route: Route::Dilation,
        });
        assert_eq!(code, 0);
        assert_eq!(out, "1/2 = 0.500000000000\n");

        let (code, out, _) = run_cmd(Command::Eval {
            r: 3,
            k: 3,
            route: Route::Tent,
        });
        assert_eq!(code, 0);
        assert!(out.starts_with("5/8 = 0.625"));
    }

    #[test]
    fn eval_all_agrees() {
        let (code, out, _) = run_cmd(Command::Eval {
            r: 3,
            k: 3,
            route: Route::All,
        });
        assert_eq!(code, 0);
        assert!(out.contains("agreement   OK (5 routes)"));

        let (code, out, _) = run_cmd(Command::Eval {
            r: 0,
            k: 5,
            route: Route::All,
        });
        assert_eq!(code, 0);
        assert!(out.contains("0 = 0.000000000000"));
    }

    #[test]
    fn eval_endpoint_marks_inapplicable_routes() {
        let (code, out, _) = run_cmd(Command::Eval {
            r: 4,
            k: 2,
            route: Route::All,
        });
        assert_eq!(code, 0);
        assert_eq!(out.matches("n/a").count(), 3);
        assert!(out.contains("agreement   OK (2 routes)"));
    }

    #[test]
    fn eval_domain_errors_exit_2() {
        let (code, _, err) = run_cmd(Command::Eval {
            r: 9,
            k: 3,
            route: Route::All,
        });
        assert_eq!(code, 2);
        assert!(err.contains("domain error"));
    }

    #[test]
    fn delta_methods() {
        for method in [
            DeltaMethod::Recursive,
            DeltaMethod::Closed,
            DeltaMethod::Explicit,
            DeltaMethod::Tree,
        ] {
            let (code, out, _) = run_cmd(Command::Delta { n: 11, method });
            assert_eq!(code, 0);
            assert_eq!(out, "5\n");
        }
        let (code, _, _) = run_cmd(Command::Delta {
            n: 0,
            method: DeltaMethod::Closed,
        });
        assert_eq!(code, 2);
    }

    #[test]
    fn s1_methods() {
        for method in [S1Method::Direct, S1Method::Takagi, S1Method::Delta] {
            let (code, out, _) = run_cmd(Command::S1 { n: 7, method });
            assert_eq!(code, 0);
            assert_eq!(out, "3\n");
        }
    }

    #[test]
    fn cumsum_output() {
        let (code, out, _) = run_cmd(Command::Cumsum { n: 5 });
        assert_eq!(code, 0);
        assert!(out.contains("form_a    5\n"));
        assert!(out.contains("form_b    5\n"));
        assert!(out.contains("form_c    5\n"));
        assert!(out.contains("trollope  5.00000000000"));

        let (code, out, _) = run_cmd(Command::Cumsum { n: 1 });
        assert_eq!(code, 0);
        assert!(out.contains("trollope  n/a"));
    }

    #[test]
    fn verify_single_id() {
        let (code, out, _) = run_cmd(Command::Verify {
            ids: vec!["DELTA_VS_TREE_ORACLE".into()],
            lo: Some(1),
            hi: Some(2048),
            args: vec![],
        });
        assert_eq!(code, 0);
        assert!(out.contains("DELTA_VS_TREE_ORACLE"));
        assert!(out.contains("checked=2048"));
        assert!(out.contains("PASS"));
    }

    #[test]
    fn verify_positional_form() {
        let (code, out, _) = run_cmd(Command::Verify {
            ids: vec![],
            lo: None,
            hi: None,
            args: vec!["DELTA_VS_TREE_ORACLE".into(), "1".into(), "2048".into()],
        });
        assert_eq!(code, 0);
        assert!(out.contains("checked=2048"));
        assert!(out.contains("PASS"));

        // a lone bound is a usage error
        let (code, _, err) = run_cmd(Command::Verify {
            ids: vec![],
            lo: None,
            hi: None,
            args: vec!["DELTA_SYMMETRY".into(), "1".into()],
        });
        assert_eq!(code, 2);
        assert!(err.contains("exactly two bounds"));
    }

    #[test]
    fn verify_unknown_id_exits_2() {
        let (code, _, err) = run_cmd(Command::Verify {
            ids: vec!["BOGUS".into()],
            lo: Some(1),
            hi: Some(10),
            args: vec![],
        });
        assert_eq!(code, 2);
        assert!(err.contains("unknown identity id"));

        let (code, _, err) = run_cmd(Command::Verify {
            ids: vec![],
            lo: None,
            hi: None,
            args: vec!["BOGUS".into(), "1".into(), "10".into()],
        });
        assert_eq!(code, 2);
        assert!(err.contains("unknown identity id"));
    }

    #[test]
    fn dilation_csv_shape() {
        let (code, out, _) = run_cmd(Command::DilationCsv { k: 4 });
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "x,y_num,y_den,y_float");
        assert_eq!(lines.len(), 1 + 17);
        assert_eq!(lines[1], "0,0,1,0.000000000000");
        assert_eq!(lines[17], "16,0,1,0.000000000000");

        let (code2, out2, _) = run_cmd(Command::DilationCsv { k: 4 });
        assert_eq!((code, &out), (code2, &out2));
    }

    #[test]
    fn dilation_csv_k2_values() {
        let (_, out, _) = run_cmd(Command::DilationCsv { k: 2 });
        let expected = "x,y_num,y_den,y_float\n\
                        0,0,1,0.000000000000\n\
                        1,1,2,0.500000000000\n\
                        2,1,2,0.500000000000\n\
                        3,1,2,0.500000000000\n\
                        4,0,1,0.000000000000\n";
        assert_eq!(out, expected);
    }

    #[test]
    fn dilation_csv_bounds() {
        assert_eq!(run_cmd(Command::DilationCsv { k: 0 }).0, 2);
        assert_eq!(
            run_cmd(Command::DilationCsv {
                k: DILATION_CSV_K_MAX + 1
            })
            .0,
            2
        );
    }

    #[test]
    fn tree_dot_output() {
        let (code, out, _) = run_cmd(Command::TreeDot { n: 3 });
        assert_eq!(code, 0);
        assert_eq!(out.matches(" D\"").count(), 1);
        assert_eq!(out.matches(" S\"").count(), 1);

        let (code, out, _) = run_cmd(Command::TreeDot { n: 1 });
        assert_eq!(code, 0);
        assert_eq!(out.matches("label=").count(), 1);

        let (code, out, _) = run_cmd(Command::TreeDot { n: 4 });
        assert_eq!(code, 0);
        assert_eq!(out.matches(" S\"").count(), 3);
        assert_eq!(out.matches(" D\"").count(), 0);

        assert_eq!(run_cmd(Command::TreeDot { n: 0 }).0, 2);
    }

    #[test]
    fn identities_listing() {
        let (code, out, _) = run_cmd(Command::Identities);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 19);
        assert!(out.contains("DELTA_SYMMETRY"));
    }

    #[test]
    fn float_formatting() {
        assert_eq!(format_float_12(0.0), "0.000000000000");
        assert_eq!(format_float_12(0.625), "0.625000000000");
        assert_eq!(format_float_12(7.0), "7.00000000000");
        assert_eq!(format_float_12(0.5), "0.500000000000");
    }
}
