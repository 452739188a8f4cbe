//! CSV and JSON problem files and ranking output.
//!
//! CSV problem layout:
//!
//! ```text
//! label,a,b,c
//! a,1,2,4
//! b,1/2,1,?
//! c,0.25,?,1
//!
//! label,priority
//! c,1
//! ```
//!
//! `?` marks a missing comparison. The trailing `label,priority` block is
//! optional and may instead come from a separate file (see [`parse_known`]).
//!
//! JSON layout: `{"alternatives": [..], "matrix": [[..]], "known": {label: value}}`
//! where matrix cells are numbers, `"?"` or fraction strings such as `"1/3"`.

use std::collections::HashSet;
use std::path::Path;

use serde::Deserialize;
use serde_json::{Map, Number, Value};

use crate::error::HreError;
use crate::matrix::{Partition, PcMatrix};

pub const MISSING_TOKEN: &str = "?";
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Guesses from the file extension; anything that is not `.json` is CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

/// How matrix entries are written back out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NumberStyle {
    #[default]
    Decimal,
    /// `p/q` when the value is a ratio of small integers, decimal otherwise.
    Fraction,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Overwrite the lower triangle with reciprocals of the upper triangle.
    pub force_reciprocal: bool,
}

/// A parsed problem in the order the alternatives were given.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    labels: Vec<String>,
    matrix: PcMatrix,
    known: Vec<Option<f64>>,
}

/// Problem reordered so unknown alternatives come first, as the solvers expect.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalProblem {
    /// `order[a]` is the original index of canonical alternative `a`.
    pub order: Vec<usize>,
    pub labels: Vec<String>,
    pub matrix: PcMatrix,
    pub partition: Partition,
}

impl CanonicalProblem {
    /// Maps a canonical-order vector back to the original order.
    pub fn to_original(&self, values: &[f64]) -> Vec<f64> {
        assert_eq!(values.len(), self.order.len(), "length mismatch");
        let mut out = vec![0.0; values.len()];
        for (a, &orig) in self.order.iter().enumerate() {
            out[orig] = values[a];
        }
        out
    }
}

impl ProblemFile {
    pub fn new(labels: Vec<String>, matrix: PcMatrix, known: Vec<(String, f64)>) -> Result<Self, HreError> {
        check_labels(&labels)?;
        if labels.len() != matrix.n() {
            return Err(HreError::Label(format!(
                "{} labels for a {}x{} matrix",
                labels.len(),
                matrix.n(),
                matrix.n()
            )));
        }
        let mut file = ProblemFile {
            known: vec![None; labels.len()],
            labels,
            matrix,
        };
        file.set_known(known)?;
        Ok(file)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &PcMatrix {
        &self.matrix
    }

    /// Known priority per alternative, original order.
    pub fn known(&self) -> &[Option<f64>] {
        &self.known
    }

    pub fn has_known(&self) -> bool {
        self.known.iter().any(Option::is_some)
    }

    /// Replaces the known priorities.
    pub fn set_known(&mut self, known: Vec<(String, f64)>) -> Result<(), HreError> {
        let mut slots = vec![None; self.labels.len()];
        for (label, value) in known {
            let idx = self
                .labels
                .iter()
                .position(|l| *l == label)
                .ok_or_else(|| HreError::Label(format!("known priority for undeclared alternative '{label}'")))?;
            if slots[idx].is_some() {
                return Err(HreError::Label(format!("known priority for '{label}' given twice")));
            }
            if !(value.is_finite() && value > 0.0) {
                return Err(HreError::InvalidValue {
                    row: idx,
                    col: idx,
                    message: format!("known priority of '{label}' must be positive, got {value}"),
                });
            }
            slots[idx] = Some(value);
        }
        self.known = slots;
        Ok(())
    }

    pub fn with_matrix(&self, matrix: PcMatrix) -> ProblemFile {
        assert_eq!(matrix.n(), self.matrix.n(), "matrix size mismatch");
        ProblemFile {
            labels: self.labels.clone(),
            matrix,
            known: self.known.clone(),
        }
    }

    /// Stable reordering: unknowns first, knowns after, each group in input order.
    pub fn canonical(&self) -> Result<CanonicalProblem, HreError> {
        let (unknown, known): (Vec<usize>, Vec<usize>) = (0..self.labels.len()).partition(|&i| self.known[i].is_none());
        let k = unknown.len();
        let partition = Partition::new(k, known.iter().map(|&i| self.known[i].unwrap()).collect())?;
        let order: Vec<usize> = unknown.into_iter().chain(known).collect();
        Ok(CanonicalProblem {
            labels: order.iter().map(|&i| self.labels[i].clone()).collect(),
            matrix: self.matrix.permuted(&order),
            partition,
            order,
        })
    }
}

fn check_labels(labels: &[String]) -> Result<(), HreError> {
    let mut seen = HashSet::new();
    for l in labels {
        if l.is_empty() {
            return Err(HreError::Label("empty label".into()));
        }
        if !seen.insert(l.as_str()) {
            return Err(HreError::Label(format!("duplicate label '{l}'")));
        }
    }
    Ok(())
}

/// Why a single token was rejected; callers attach the position.
enum CellError {
    Syntax(String),
    Value(String),
}

/// Decimal number or `p/q` with positive integers.
fn parse_number(token: &str) -> Result<f64, CellError> {
    if let Some((p, q)) = token.split_once('/') {
        let parse_int = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CellError::Syntax(format!("malformed fraction '{token}'")))
        };
        let (p, q) = (parse_int(p)?, parse_int(q)?);
        if p == 0 || q == 0 {
            return Err(CellError::Value(format!("fraction '{token}' must have positive parts")));
        }
        return Ok(p as f64 / q as f64);
    }
    let v: f64 = token
        .parse()
        .map_err(|_| CellError::Syntax(format!("'{token}' is not a number")))?;
    if !v.is_finite() {
        return Err(CellError::Value(format!("'{token}' is not finite")));
    }
    Ok(v)
}

fn parse_cell(token: &str) -> Result<Option<f64>, CellError> {
    if token == MISSING_TOKEN {
        Ok(None)
    } else if token.is_empty() {
        Err(CellError::Syntax("empty cell".into()))
    } else {
        parse_number(token).map(Some)
    }
}

/// Builds the matrix from raw cells, applying the reciprocal repair first if asked.
fn assemble_matrix(mut grid: Vec<Vec<Option<f64>>>, opts: &ParseOptions) -> Result<PcMatrix, HreError> {
    if opts.force_reciprocal {
        let n = grid.len();
        for i in 0..n {
            for j in (i + 1)..n {
                grid[j][i] = grid[i][j].map(|c| 1.0 / c);
            }
        }
    }
    PcMatrix::new(grid)
}

pub fn parse_problem(text: &str, format: Format) -> Result<ProblemFile, HreError> {
    parse_problem_with(text, format, &ParseOptions::default())
}

pub fn parse_problem_with(text: &str, format: Format, opts: &ParseOptions) -> Result<ProblemFile, HreError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    match format {
        Format::Csv => parse_csv_problem(text, opts),
        Format::Json => parse_json_problem(text, opts),
    }
}

/// Known priorities from their own file: CSV `label,priority` rows (header
/// optional) or a JSON object `{label: value}`.
pub fn parse_known(text: &str, format: Format) -> Result<Vec<(String, f64)>, HreError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    match format {
        Format::Csv => {
            let lines: Vec<(usize, &str)> = text
                .lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l))
                .filter(|(_, l)| !l.trim().is_empty())
                .collect();
            parse_known_rows(&lines)
        }
        Format::Json => {
            let map: Map<String, Value> = serde_json::from_str(text).map_err(json_error)?;
            map.into_iter()
                .map(|(label, v)| json_number(&v).map(|x| (label, x)))
                .collect()
        }
    }
}

fn split_cells(line: &str) -> Vec<&str> {
    line.split(',').map(str::trim).collect()
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> HreError {
    HreError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_known_rows(lines: &[(usize, &str)]) -> Result<Vec<(String, f64)>, HreError> {
    let mut out = Vec::new();
    for (idx, &(line_no, line)) in lines.iter().enumerate() {
        let cells = split_cells(line);
        if idx == 0 && cells.len() == 2 && cells[0] == "label" && cells[1] == "priority" {
            continue;
        }
        if cells.len() != 2 {
            return Err(parse_error(
                line_no,
                1,
                format!("expected 'label,priority', found {} cells", cells.len()),
            ));
        }
        let value = match parse_number(cells[1]) {
            Ok(v) => v,
            Err(CellError::Syntax(msg)) => return Err(parse_error(line_no, 2, msg)),
            Err(CellError::Value(msg)) => return Err(HreError::Label(msg)),
        };
        out.push((cells[0].to_string(), value));
    }
    Ok(out)
}

fn parse_csv_problem(text: &str, opts: &ParseOptions) -> Result<ProblemFile, HreError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .skip_while(|(_, l)| l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let header_cells = split_cells(header);
    let labels: Vec<String> = header_cells[1..].iter().map(|s| s.to_string()).collect();
    check_labels(&labels).map_err(|e| parse_error(header_line, 1, e.to_string()))?;
    let n = labels.len();

    let mut grid = Vec::with_capacity(n);
    for (row, expected_label) in labels.iter().enumerate() {
        let (line_no, line) = lines.next().ok_or_else(|| {
            parse_error(
                header_line + row + 1,
                1,
                format!("expected {n} matrix rows, found {row}"),
            )
        })?;
        let cells = split_cells(line);
        if cells.len() != n + 1 {
            return Err(parse_error(
                line_no,
                1,
                format!("expected {} cells, found {}", n + 1, cells.len()),
            ));
        }
        if cells[0] != expected_label {
            return Err(parse_error(
                line_no,
                1,
                format!(
                    "row label '{}' does not match column label '{expected_label}'",
                    cells[0]
                ),
            ));
        }
        let mut parsed = Vec::with_capacity(n);
        for (col, token) in cells[1..].iter().enumerate() {
            match parse_cell(token) {
                Ok(v) => parsed.push(v),
                Err(CellError::Syntax(msg)) => return Err(parse_error(line_no, col + 2, msg)),
                Err(CellError::Value(message)) => return Err(HreError::InvalidValue { row, col, message }),
            }
        }
        grid.push(parsed);
    }

    let rest: Vec<(usize, &str)> = lines.filter(|(_, l)| !l.trim().is_empty()).collect();
    let known = parse_known_rows(&rest)?;
    let matrix = assemble_matrix(grid, opts)?;
    ProblemFile::new(labels, matrix, known)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonCell {
    Number(f64),
    Text(String),
}

#[derive(Deserialize)]
struct JsonProblem {
    alternatives: Vec<String>,
    matrix: Vec<Vec<JsonCell>>,
    #[serde(default)]
    known: Map<String, Value>,
}

fn json_error(e: serde_json::Error) -> HreError {
    parse_error(e.line(), e.column(), e.to_string())
}

fn json_number(v: &Value) -> Result<f64, HreError> {
    match v {
        Value::Number(x) => x
            .as_f64()
            .ok_or_else(|| HreError::Label(format!("{x} is not representable"))),
        Value::String(s) => parse_number(s.trim()).map_err(|e| match e {
            CellError::Syntax(m) | CellError::Value(m) => HreError::Label(m),
        }),
        other => Err(HreError::Label(format!("expected a number, found {other}"))),
    }
}

fn parse_json_problem(text: &str, opts: &ParseOptions) -> Result<ProblemFile, HreError> {
    let raw: JsonProblem = serde_json::from_str(text).map_err(json_error)?;
    let n = raw.alternatives.len();
    if raw.matrix.len() != n {
        return Err(HreError::InvalidValue {
            row: raw.matrix.len(),
            col: 0,
            message: format!("matrix has {} rows for {n} alternatives", raw.matrix.len()),
        });
    }
    let mut grid = Vec::with_capacity(n);
    for (row, cells) in raw.matrix.into_iter().enumerate() {
        if cells.len() != n {
            return Err(HreError::InvalidValue {
                row,
                col: cells.len(),
                message: format!("row has {} entries, expected {n}", cells.len()),
            });
        }
        let mut parsed = Vec::with_capacity(n);
        for (col, cell) in cells.into_iter().enumerate() {
            let value = match cell {
                JsonCell::Number(v) => Some(v),
                JsonCell::Text(s) => match parse_cell(s.trim()) {
                    Ok(v) => v,
                    Err(CellError::Syntax(message)) | Err(CellError::Value(message)) => {
                        return Err(HreError::InvalidValue { row, col, message })
                    }
                },
            };
            parsed.push(value);
        }
        grid.push(parsed);
    }
    let known = raw
        .known
        .iter()
        .map(|(label, v)| json_number(v).map(|x| (label.clone(), x)))
        .collect::<Result<Vec<_>, _>>()?;
    check_labels(&raw.alternatives)?;
    let matrix = assemble_matrix(grid, opts)?;
    ProblemFile::new(raw.alternatives, matrix, known)
}

/// `x` rounded to `digits` significant digits, positional when the exponent is
/// moderate, scientific otherwise.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits > 0, "need at least one significant digit");
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if exp < -4 || exp >= digits as i32 {
        return sci;
    }
    format!("{:.*}", (digits as i32 - 1 - exp) as usize, x)
}

/// `x` rounded to `digits` significant digits, as a float.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    format!("{:.*e}", digits - 1, x).parse().unwrap()
}

fn trim_zeros(s: String) -> String {
    if s.contains('e') || !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Best rational approximation with denominator at most `max_den`, by continued fractions.
fn as_fraction(x: f64, max_den: u64) -> Option<(u64, u64)> {
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a > 1e12 {
            break;
        }
        let a = a as u64;
        let (p2, q2) = (a.checked_mul(p1)?.checked_add(p0)?, a.checked_mul(q1)?.checked_add(q0)?);
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = r - a as f64;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    (q1 != 0 && p1 != 0 && ((p1 as f64 / q1 as f64) - x).abs() <= 1e-12 * x).then_some((p1, q1))
}

fn format_entry(x: f64, style: NumberStyle) -> String {
    if style == NumberStyle::Fraction {
        match as_fraction(x, 10_000) {
            Some((p, 1)) => return p.to_string(),
            Some((p, q)) => return format!("{p}/{q}"),
            None => {}
        }
    }
    trim_zeros(format_significant(x, SIGNIFICANT_DIGITS))
}

fn json_value(x: f64, style: NumberStyle) -> Value {
    if style == NumberStyle::Fraction {
        if let Some((p, q)) = as_fraction(x, 10_000) {
            if q != 1 {
                return Value::String(format!("{p}/{q}"));
            }
        }
    }
    Number::from_f64(round_significant(x, SIGNIFICANT_DIGITS))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn serialize_problem(file: &ProblemFile, format: Format, style: NumberStyle) -> String {
    let n = file.labels.len();
    let m = &file.matrix;
    match format {
        Format::Csv => {
            let mut out = String::new();
            out.push_str("label");
            for l in &file.labels {
                out.push(',');
                out.push_str(l);
            }
            out.push('\n');
            for i in 0..n {
                out.push_str(&file.labels[i]);
                for j in 0..n {
                    out.push(',');
                    match m.get(i, j) {
                        Some(c) => out.push_str(&format_entry(c, style)),
                        None => out.push_str(MISSING_TOKEN),
                    }
                }
                out.push('\n');
            }
            if file.has_known() {
                out.push_str("\nlabel,priority\n");
                for (l, w) in file.labels.iter().zip(&file.known) {
                    if let Some(w) = w {
                        out.push_str(&format!("{l},{}\n", format_entry(*w, NumberStyle::Decimal)));
                    }
                }
            }
            out
        }
        Format::Json => {
            let matrix: Vec<Value> = (0..n)
                .map(|i| {
                    Value::Array(
                        (0..n)
                            .map(|j| match m.get(i, j) {
                                Some(c) => json_value(c, style),
                                None => Value::String(MISSING_TOKEN.into()),
                            })
                            .collect(),
                    )
                })
                .collect();
            let mut obj = Map::new();
            obj.insert("alternatives".into(), file.labels.clone().into());
            obj.insert("matrix".into(), Value::Array(matrix));
            if file.has_known() {
                let known: Map<String, Value> = file
                    .labels
                    .iter()
                    .zip(&file.known)
                    .filter_map(|(l, w)| w.map(|w| (l.clone(), json_value(w, NumberStyle::Decimal))))
                    .collect();
                obj.insert("known".into(), Value::Object(known));
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
            s.push('\n');
            s
        }
    }
}

/// One `label,priority` row per alternative (CSV) or a `label -> priority`
/// object (JSON), 12 significant digits, in the given label order.
pub fn serialize_ranking(values: &[f64], labels: &[String], format: Format) -> String {
    assert_eq!(values.len(), labels.len(), "ranking and labels differ in length");
    match format {
        Format::Csv => labels
            .iter()
            .zip(values)
            .map(|(l, v)| format!("{l},{}\n", format_significant(*v, SIGNIFICANT_DIGITS)))
            .collect(),
        Format::Json => {
            if labels.is_empty() {
                return String::new();
            }
            let obj: Map<String, Value> = labels
                .iter()
                .zip(values)
                .map(|(l, v)| (l.clone(), json_value(*v, NumberStyle::Decimal)))
                .collect();
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
            s.push('\n');
            s
        }
    }
}

/// Inverse of [`serialize_ranking`].
pub fn parse_ranking(text: &str, format: Format) -> Result<Vec<(String, f64)>, HreError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    parse_known(text, format)
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE: &str = "label,a,b,c\na,1,2,4\nb,1/2,1,?\nc,0.25,?,1\n\nlabel,priority\nc,1\n";

    #[test]
    fn parses_csv_with_known_section() {
        let f = parse_problem(THREE, Format::Csv).unwrap();
        assert_eq!(f.labels(), &["a", "b", "c"]);
        assert_eq!(f.matrix().get(1, 0), Some(0.5));
        assert_eq!(f.matrix().get(1, 2), None);
        assert_eq!(f.known(), &[None, None, Some(1.0)]);
    }

    #[test]
    fn crlf_is_accepted() {
        let f = parse_problem(&THREE.replace('\n', "\r\n"), Format::Csv).unwrap();
        assert_eq!(f, parse_problem(THREE, Format::Csv).unwrap());
    }

    #[test]
    fn csv_errors_carry_positions() {
        let empty_cell = "label,a,b\na,1,\nb,1,1\n";
        assert_eq!(
            parse_problem(empty_cell, Format::Csv).unwrap_err(),
            HreError::Parse {
                line: 2,
                column: 3,
                message: "empty cell".into()
            }
        );
        let junk = "label,a,b\na,1,x\nb,1,1\n";
        assert!(matches!(
            parse_problem(junk, Format::Csv),
            Err(HreError::Parse { line: 2, column: 3, .. })
        ));
        let negative = "label,a,b\na,1,-2\nb,-0.5,1\n";
        assert_eq!(
            parse_problem(negative, Format::Csv).unwrap_err().code(),
            "INVALID_VALUE"
        );
        let zero_fraction = "label,a,b\na,1,0/3\nb,1,1\n";
        assert_eq!(
            parse_problem(zero_fraction, Format::Csv).unwrap_err().code(),
            "INVALID_VALUE"
        );
        let diag = "label,a,b\na,2,1\nb,1,1\n";
        assert_eq!(parse_problem(diag, Format::Csv).unwrap_err().code(), "INVALID_VALUE");
        let unknown_label = "label,a,b\na,1,1\nb,1,1\n\nlabel,priority\nz,1\n";
        assert_eq!(
            parse_problem(unknown_label, Format::Csv).unwrap_err().code(),
            "INVALID_VALUE"
        );
        let short = "label,a,b\na,1,1\n";
        assert_eq!(parse_problem(short, Format::Csv).unwrap_err().code(), "PARSE_ERROR");
        let dup = "label,a,a\na,1,1\na,1,1\n";
        assert_eq!(parse_problem(dup, Format::Csv).unwrap_err().code(), "PARSE_ERROR");
    }

    #[test]
    fn json_asymmetric_missing() {
        let text = r#"{"alternatives":["a","b"],"matrix":[[1,3],["?",1]]}"#;
        assert_eq!(
            parse_problem(text, Format::Json).unwrap_err(),
            HreError::AsymmetricMissing { row: 0, col: 1 }
        );
    }

    #[test]
    fn json_syntax_error_has_position() {
        let err = parse_problem("{\n  \"alternatives\": [\"a\",\n", Format::Json).unwrap_err();
        assert!(matches!(err, HreError::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn json_canonical_reordering() {
        let text = r#"{"alternatives":["c","a","b"],
            "matrix":[[1,"1/4","1/2"],[4,1,2],[2,0.5,1]],
            "known":{"c":1.0}}"#;
        let f = parse_problem(text, Format::Json).unwrap();
        let canon = f.canonical().unwrap();
        assert_eq!(canon.partition.k(), 2);
        assert_eq!(canon.order, vec![1, 2, 0]);
        assert_eq!(canon.labels, vec!["a", "b", "c"]);
        assert_eq!(canon.matrix, PcMatrix::from_priorities(&[4.0, 2.0, 1.0]).unwrap());
        assert_eq!(canon.to_original(&[4.0, 2.0, 1.0]), vec![1.0, 4.0, 2.0]);
    }

    #[test]
    fn force_reciprocal_repairs_lower_triangle() {
        let text = "label,a,b\na,1,2\nb,?,1\n";
        assert_eq!(
            parse_problem(text, Format::Csv).unwrap_err().code(),
            "ASYMMETRIC_MISSING"
        );
        let f = parse_problem_with(text, Format::Csv, &ParseOptions { force_reciprocal: true }).unwrap();
        assert_eq!(f.matrix().get(1, 0), Some(0.5));
    }

    #[test]
    fn number_styles() {
        let text = "label,a,b,c\na,1,1/2,?\nb,2,1,3\nc,?,1/3,1\n";
        let f = parse_problem(text, Format::Csv).unwrap();
        let frac = serialize_problem(&f, Format::Csv, NumberStyle::Fraction);
        assert!(frac.contains("\na,1,1/2,?\n"), "{frac}");
        assert!(frac.contains("\nc,?,1/3,1\n"), "{frac}");
        let dec = serialize_problem(&f, Format::Csv, NumberStyle::Decimal);
        assert!(dec.contains("\na,1,0.5,?\n"), "{dec}");
        assert!(dec.contains("\nc,?,0.333333333333,1\n"), "{dec}");
        assert_eq!(parse_problem(&frac, Format::Csv).unwrap(), f);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(4.0, 12), "4.00000000000");
        assert_eq!(format_significant(0.5, 12), "0.500000000000");
        assert_eq!(format_significant(123.456, 12), "123.456000000");
        assert_eq!(format_significant(9.9999999999999, 12), "10.0000000000");
        assert_eq!(format_significant(1.5e-7, 12), "1.50000000000e-7");
        assert_eq!(format_significant(2.5e20, 12), "2.50000000000e20");
    }

    #[test]
    fn ranking_output() {
        let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            serialize_ranking(&[4.0, 2.0, 1.0], &labels, Format::Csv),
            "x,4.00000000000\ny,2.00000000000\nz,1.00000000000\n"
        );
        assert_eq!(serialize_ranking(&[], &[], Format::Csv), "");
        assert_eq!(serialize_ranking(&[], &[], Format::Json), "");
        let json = serialize_ranking(&[4.0, 2.0, 1.0], &labels, Format::Json);
        let back = parse_ranking(&json, Format::Json).unwrap();
        assert_eq!(back, vec![("x".into(), 4.0), ("y".into(), 2.0), ("z".into(), 1.0)]);
    }
}
