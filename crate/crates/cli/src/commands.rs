use std::fmt::Write as _;
use std::fs;

use hre_core::diagnostics::{diagnose, known_pair_mismatches};
use hre_core::io::{
    format_significant, parse_known, parse_problem_with, serialize_problem, serialize_ranking, CanonicalProblem,
    Format, NumberStyle, ParseOptions, ProblemFile, SIGNIFICANT_DIGITS,
};
use hre_core::{evm, gmm, HreError, Method, Tolerances};

use crate::{FormatArg, InputArgs, MethodArg, StyleArg};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FINDINGS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_SOLVER: u8 = 3;

/// A failure on its way to stderr: machine code, human detail, exit code.
struct Failure {
    code: &'static str,
    detail: String,
    exit: u8,
}

impl Failure {
    fn usage(detail: impl Into<String>) -> Self {
        Failure {
            code: "USAGE",
            detail: detail.into(),
            exit: EXIT_INPUT,
        }
    }

    fn io(detail: impl Into<String>) -> Self {
        Failure {
            code: "IO_ERROR",
            detail: detail.into(),
            exit: EXIT_INPUT,
        }
    }

    /// `labels` translates solver indices into alternative names when available.
    fn from_hre(err: HreError, labels: Option<&[String]>) -> Self {
        let name = |i: usize| match labels {
            Some(l) => format!("'{}'", l[i]),
            None => format!("#{}", i + 1),
        };
        let detail = match &err {
            HreError::DegenerateRow { row } => format!("alternative {} has no defined comparisons", name(*row)),
            HreError::NotConnected { isolated } => format!(
                "alternatives {} cannot reach any known alternative",
                isolated.iter().map(|&i| name(i)).collect::<Vec<_>>().join(", ")
            ),
            HreError::Reciprocity { row, col, product } => {
                format!("c({0},{1}) * c({1},{0}) = {product}", name(*row), name(*col))
            }
            HreError::NonPositiveSolution { row, value } => {
                format!("computed priority of {} is {value}", name(*row))
            }
            HreError::IllConditioned {
                row,
                residual,
                tolerance,
            } => {
                format!("residual {residual:e} at {} exceeds {tolerance:e}", name(*row))
            }
            HreError::AsymmetricMissing { row, col } => {
                format!("entry ({}, {}) is defined but its mirror is missing", row + 1, col + 1)
            }
            other => other.to_string(),
        };
        Failure {
            code: err.code(),
            detail,
            exit: if err.is_solver_failure() {
                EXIT_SOLVER
            } else {
                EXIT_INPUT
            },
        }
    }

    fn report(&self) -> u8 {
        eprintln!("error: {}: {}", self.code, self.detail);
        self.exit
    }
}

fn format_of(arg: Option<FormatArg>, fallback: Format) -> Format {
    match arg {
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Json) => Format::Json,
        None => fallback,
    }
}

struct Loaded {
    file: ProblemFile,
    output_format: Format,
}

fn load(args: &InputArgs) -> Result<Loaded, Failure> {
    let input_format = format_of(args.format, Format::from_path(&args.input));
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Failure::io(format!("cannot read {}: {e}", args.input.display())))?;
    let opts = ParseOptions {
        force_reciprocal: args.force_reciprocal,
    };
    let mut file = parse_problem_with(&text, input_format, &opts).map_err(|e| Failure::from_hre(e, None))?;
    if let Some(path) = &args.known {
        let text = fs::read_to_string(path).map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
        let known = parse_known(&text, Format::from_path(path)).map_err(|e| Failure::from_hre(e, None))?;
        file.set_known(known).map_err(|e| Failure::from_hre(e, None))?;
    }
    if !(args.tolerance.is_finite() && args.tolerance > 0.0) {
        return Err(Failure::usage("--tolerance must be positive"));
    }
    Ok(Loaded {
        file,
        output_format: format_of(args.output_format, input_format),
    })
}

fn emit(args: &InputArgs, text: &str) -> Result<(), Failure> {
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn tolerances(args: &InputArgs) -> Tolerances {
    Tolerances {
        reciprocity: args.tolerance,
        residual: args.tolerance,
    }
}

fn methods(arg: MethodArg) -> Vec<Method> {
    match arg {
        MethodArg::Arithmetic => vec![Method::Arithmetic],
        MethodArg::Geometric => vec![Method::Geometric],
        MethodArg::Both => vec![Method::Arithmetic, Method::Geometric],
    }
}

fn warn_known_pairs(canon: &CanonicalProblem, tol: f64) {
    for (i, j, c) in known_pair_mismatches(&canon.matrix, &canon.partition, tol) {
        let implied = canon.partition.known_priority(i) / canon.partition.known_priority(j);
        eprintln!(
            "warning: KNOWN_PAIR_MISMATCH: c({}, {}) = {c} but known priorities imply {implied}; comparison ignored",
            canon.labels[i], canon.labels[j]
        );
    }
}

/// Solves with every requested method; results are in the original label order.
fn solve_all(loaded: &Loaded, args: &InputArgs, which: &[Method]) -> Result<Vec<(Method, Vec<f64>)>, Failure> {
    let canon = loaded.file.canonical().map_err(|e| Failure::from_hre(e, None))?;
    warn_known_pairs(&canon, args.tolerance);
    let tol = tolerances(args);
    which
        .iter()
        .map(|&m| {
            m.solve(&canon.matrix, &canon.partition, &tol)
                .map(|r| (m, canon.to_original(r.values())))
                .map_err(|e| Failure::from_hre(e, Some(&canon.labels)))
        })
        .collect()
}

fn run(f: impl FnOnce() -> Result<u8, Failure>) -> u8 {
    f().unwrap_or_else(|fail| fail.report())
}

pub fn rank(args: &InputArgs, method: MethodArg, normalize: bool) -> u8 {
    run(|| {
        let loaded = load(args)?;
        let mut results = solve_all(&loaded, args, &methods(method))?;
        if normalize {
            eprintln!("note: output rescaled to sum to 1; known priorities are rescaled as well");
            for (_, values) in &mut results {
                let total: f64 = values.iter().sum();
                values.iter_mut().for_each(|v| *v /= total);
            }
        }
        let labels = loaded.file.labels();
        let text = if let [(_, values)] = results.as_slice() {
            serialize_ranking(values, labels, loaded.output_format)
        } else {
            side_by_side(&results, labels, loaded.output_format)
        };
        emit(args, &text)?;
        Ok(EXIT_OK)
    })
}

fn side_by_side(results: &[(Method, Vec<f64>)], labels: &[String], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("label");
            for (m, _) in results {
                out.push(',');
                out.push_str(m.name());
            }
            out.push('\n');
            for (i, label) in labels.iter().enumerate() {
                out.push_str(label);
                for (_, values) in results {
                    out.push(',');
                    out.push_str(&format_significant(values[i], SIGNIFICANT_DIGITS));
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = String::from("{\n");
            for (idx, (m, values)) in results.iter().enumerate() {
                let body = serialize_ranking(values, labels, Format::Json);
                let body = body.trim_end().replace('\n', "\n  ");
                let sep = if idx + 1 < results.len() { "," } else { "" };
                let _ = writeln!(out, "  \"{}\": {body}{sep}", m.name());
            }
            out.push_str("}\n");
            out
        }
    }
}

pub fn check(args: &InputArgs) -> u8 {
    run(|| {
        let loaded = load(args)?;
        let file = &loaded.file;
        let labels = file.labels();
        let mut out = String::new();

        let diag = diagnose(file.matrix(), None, args.tolerance);
        if diag.reciprocity_violations.is_empty() {
            out.push_str("reciprocity: ok\n");
        } else {
            let _ = writeln!(out, "reciprocity: {} violation(s)", diag.reciprocity_violations.len());
            for v in &diag.reciprocity_violations {
                let _ = writeln!(
                    out,
                    "  {},{}: c_ij={} c_ji={} product={}",
                    labels[v.i],
                    labels[v.j],
                    v.c_ij,
                    v.c_ji,
                    v.c_ij * v.c_ji
                );
            }
        }

        let counts: Vec<String> = labels
            .iter()
            .zip(&diag.undefined_counts)
            .map(|(l, s)| format!("{l}={s}"))
            .collect();
        let _ = writeln!(out, "undefined: {}", counts.join(" "));

        let mut connected = true;
        if file.has_known() {
            let canon = file.canonical().map_err(|e| Failure::from_hre(e, None))?;
            let conn = hre_core::check_connectivity(&canon.matrix, &canon.partition);
            connected = conn.ok;
            if conn.ok {
                out.push_str("connectivity: ok\n");
            } else {
                let names: Vec<&str> = conn
                    .isolated_unknowns
                    .iter()
                    .map(|&i| canon.labels[i].as_str())
                    .collect();
                let _ = writeln!(out, "connectivity: failed (isolated: {})", names.join(", "));
            }
        } else {
            out.push_str("connectivity: n/a (no known priorities)\n");
        }

        let _ = writeln!(
            out,
            "triads: examined={} deviations={}",
            diag.triads.examined,
            diag.triads.deviations.len()
        );
        for d in &diag.triads.deviations {
            let _ = writeln!(
                out,
                "  {},{},{}: {}",
                labels[d.i],
                labels[d.j],
                labels[d.k],
                format_significant(d.deviation, 6)
            );
        }

        emit(args, &out)?;
        let clean = diag.reciprocity_violations.is_empty() && diag.triads.is_consistent() && connected;
        Ok(if clean { EXIT_OK } else { EXIT_FINDINGS })
    })
}

pub fn complete(args: &InputArgs, method: MethodArg, style: StyleArg) -> u8 {
    run(|| {
        let method = match method {
            MethodArg::Arithmetic => Method::Arithmetic,
            MethodArg::Geometric => Method::Geometric,
            MethodArg::Both => return Err(Failure::usage("complete needs a single --method")),
        };
        let loaded = load(args)?;
        let results = solve_all(&loaded, args, &[method])?;
        let filled = loaded.file.matrix().completed_with(&results[0].1);
        let style = match style {
            StyleArg::Decimal => NumberStyle::Decimal,
            StyleArg::Fraction => NumberStyle::Fraction,
        };
        let text = serialize_problem(&loaded.file.with_matrix(filled), loaded.output_format, style);
        emit(args, &text)?;
        Ok(EXIT_OK)
    })
}

pub fn compare(args: &InputArgs) -> u8 {
    run(|| {
        let loaded = load(args)?;
        let mut columns: Vec<(&str, Vec<f64>)> = solve_all(&loaded, args, &[Method::Arithmetic, Method::Geometric])?
            .into_iter()
            .map(|(m, v)| (m.name(), v))
            .collect();
        let matrix = loaded.file.matrix();
        if matrix.is_complete() {
            let e = evm(
                matrix,
                hre_core::baseline::DEFAULT_MAX_ITER,
                hre_core::baseline::DEFAULT_CONV_TOL,
            )
            .map_err(|e| Failure::from_hre(e, None))?;
            columns.push(("evm", e.weights));
            columns.push(("gmm", gmm(matrix).map_err(|e| Failure::from_hre(e, None))?.weights));
        }
        for (_, values) in &mut columns {
            let total: f64 = values.iter().sum();
            values.iter_mut().for_each(|v| *v /= total);
        }

        let mut out = String::from("label");
        for (name, _) in &columns {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, label) in loaded.file.labels().iter().enumerate() {
            out.push_str(label);
            for (_, values) in &columns {
                out.push(',');
                out.push_str(&format_significant(values[i], SIGNIFICANT_DIGITS));
            }
            out.push('\n');
        }
        out.push_str("\nmethod_a,method_b,max_rel_diff\n");
        for a in 0..columns.len() {
            for b in (a + 1)..columns.len() {
                let diff = columns[a]
                    .1
                    .iter()
                    .zip(&columns[b].1)
                    .map(|(x, y)| (x - y).abs() / x.max(*y))
                    .fold(0.0, f64::max);
                let _ = writeln!(out, "{},{},{}", columns[a].0, columns[b].0, format_significant(diff, 6));
            }
        }
        emit(args, &out)?;
        Ok(EXIT_OK)
    })
}
