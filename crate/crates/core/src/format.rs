//! The `carnot v1` text format for algebras and the element syntax used on
//! the command line.
//!
//! ```text
//! carnot v1
//! name heisenberg_1
//! layers 2 1
//! basis x1 y1 z
//! bracket 1 2 = 1 3
//! ```
//!
//! Indices are 1-based and layer-major; a bracket line lists `[e_i, e_j]`
//! for `i < j` as `c1 k1 + c2 k2 ...` with rationals `p` or `p/q`. Unlisted
//! brackets are zero. Blank lines and `#` comments are ignored.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::algebra::{BracketTable, CarnotAlgebra, Element};
use crate::rational::{fmt_q, parse_q, Q};

pub const HEADER: &str = "carnot v1";

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `{HEADER}`")]
    MissingHeader,
    #[error("{0}")]
    Syntax(String),
    #[error("duplicate bracket {0} {1}")]
    DuplicateBracket(usize, usize),
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket indices must satisfy i < j, got {0} {1}")]
    BadOrder(usize, usize),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    /// 1-based line number, 0 when the problem concerns the whole file.
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "line {}: {}", self.line, self.kind)
        }
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

fn parse_index(tok: &str, line: usize, dim: usize) -> Result<usize, ParseError> {
    let i: usize = tok
        .parse()
        .map_err(|_| syntax(line, format!("expected index, got `{tok}`")))?;
    if i == 0 || i > dim {
        return Err(err(line, ParseErrorKind::IndexOutOfRange { index: i, dim }));
    }
    Ok(i - 1)
}

fn parse_terms(rhs: &str, line: usize, dim: usize) -> Result<Vec<(usize, Q)>, ParseError> {
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok(Vec::new());
    }
    let mut out: Vec<(usize, Q)> = Vec::new();
    for term in rhs.split('+') {
        let toks: Vec<&str> = term.split_whitespace().collect();
        let [c, k] = toks[..] else {
            return Err(syntax(line, format!("expected `coefficient index`, got `{}`", term.trim())));
        };
        let c = parse_q(c).ok_or_else(|| syntax(line, format!("bad rational `{c}`")))?;
        let k = parse_index(k, line, dim)?;
        if out.iter().any(|(j, _)| *j == k) {
            return Err(syntax(line, format!("index {} repeated", k + 1)));
        }
        out.push((k, c));
    }
    Ok(out)
}

/// Parses a `carnot v1` document. Structural problems (indices, duplicates,
/// labels) are reported with line numbers; the Lie axioms are left to
/// [`CarnotAlgebra::validate`].
pub fn parse_algebra(text: &str) -> Result<CarnotAlgebra, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, l)) if l.split_whitespace().collect::<Vec<_>>() == ["carnot", "v1"] => {}
        Some((n, _)) => return Err(err(n, ParseErrorKind::MissingHeader)),
        None => return Err(err(0, ParseErrorKind::MissingHeader)),
    }
    let mut name: Option<String> = None;
    let mut dims: Option<Vec<usize>> = None;
    let mut labels: Option<(usize, Vec<String>)> = None;
    let mut table: BracketTable = BTreeMap::new();
    let mut bracket_lines: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (n, l) in lines {
        let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match key {
            "name" => {
                if name.is_some() {
                    return Err(syntax(n, "repeated `name`"));
                }
                if rest.is_empty() {
                    return Err(syntax(n, "empty name"));
                }
                name = Some(rest.to_string());
            }
            "layers" => {
                if dims.is_some() {
                    return Err(syntax(n, "repeated `layers`"));
                }
                let d: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| syntax(n, format!("bad layer dimension `{t}`"))))
                    .collect::<Result<_, _>>()?;
                if d.is_empty() || d.contains(&0) {
                    return Err(err(n, ParseErrorKind::Invalid("layer dimensions must be positive".into())));
                }
                dims = Some(d);
            }
            "basis" => {
                if labels.is_some() {
                    return Err(syntax(n, "repeated `basis`"));
                }
                labels = Some((n, rest.split_whitespace().map(String::from).collect()));
            }
            "bracket" => {
                let dim: usize = dims
                    .as_ref()
                    .ok_or_else(|| syntax(n, "`layers` must precede brackets"))?
                    .iter()
                    .sum();
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(n, "expected `bracket i j = ...`"))?;
                let idx: Vec<&str> = lhs.split_whitespace().collect();
                let [i, j] = idx[..] else {
                    return Err(syntax(n, "expected two indices before `=`"));
                };
                let (i, j) = (parse_index(i, n, dim)?, parse_index(j, n, dim)?);
                if i >= j {
                    return Err(err(n, ParseErrorKind::BadOrder(i + 1, j + 1)));
                }
                if bracket_lines.insert((i, j), n).is_some() {
                    return Err(err(n, ParseErrorKind::DuplicateBracket(i + 1, j + 1)));
                }
                let terms = parse_terms(rhs, n, dim)?;
                if !terms.is_empty() {
                    table.insert((i, j), terms);
                }
            }
            other => return Err(syntax(n, format!("unknown directive `{other}`"))),
        }
    }
    let dims = dims.ok_or_else(|| err(0, ParseErrorKind::Invalid("missing `layers`".into())))?;
    let (label_line, labels) = match labels {
        Some((n, l)) => (n, Some(l)),
        None => (0, None),
    };
    CarnotAlgebra::new(name.unwrap_or_else(|| "unnamed".into()), dims, labels, table)
        .map_err(|e| err(label_line, ParseErrorKind::Invalid(e.to_string())))
}

fn emit_bracket_lines(alg: &CarnotAlgebra, out: &mut String) {
    for ((i, j), terms) in alg.structure() {
        let rhs: Vec<String> = terms
            .iter()
            .map(|(k, c)| format!("{} {}", fmt_q(c), k + 1))
            .collect();
        out.push_str(&format!("bracket {} {} = {}\n", i + 1, j + 1, rhs.join(" + ")));
    }
}

fn layers_line(alg: &CarnotAlgebra) -> String {
    let d: Vec<String> = alg.layer_dims().iter().map(usize::to_string).collect();
    format!("layers {}\n", d.join(" "))
}

/// Canonical text: header, name, layers, basis, then brackets by `(i, j)`.
pub fn emit_algebra(alg: &CarnotAlgebra) -> String {
    let mut out = format!("{HEADER}\nname {}\n", alg.name());
    out.push_str(&layers_line(alg));
    out.push_str(&format!("basis {}\n", alg.labels().join(" ")));
    emit_bracket_lines(alg, &mut out);
    out
}

/// Layers and brackets only: equal for algebras with the same structure
/// constants regardless of name and labels.
pub fn structure_text(alg: &CarnotAlgebra) -> String {
    let mut out = layers_line(alg);
    emit_bracket_lines(alg, &mut out);
    out
}

fn label_index(alg: &CarnotAlgebra, label: &str) -> Option<usize> {
    if let Some(k) = alg.labels().iter().position(|l| l == label) {
        return Some(k);
    }
    // `e<k>` names the k-th basis vector when no label is spelled that way
    let k: usize = label.strip_prefix('e')?.parse().ok()?;
    (1..=alg.dim()).contains(&k).then(|| k - 1)
}

/// Splits a leading rational coefficient off a term such as `1/2*e3`,
/// `2 X12` or `3e1`.
fn split_coefficient(term: &str) -> (Option<Q>, &str) {
    let end = term
        .char_indices()
        .find(|(_, c)| !(c.is_ascii_digit() || *c == '/'))
        .map(|(i, _)| i)
        .unwrap_or(term.len());
    if end == 0 {
        return (None, term);
    }
    match parse_q(&term[..end]) {
        Some(c) => (Some(c), term[end..].trim_start_matches([' ', '*'])),
        None => (None, term),
    }
}

/// Parses an element given either as `dim` comma-separated rationals or as
/// a label expression like `e1`, `X-Y` or `2*e1 - 1/2 e3`.
pub fn parse_element(alg: &CarnotAlgebra, text: &str) -> Result<Element, String> {
    let text = text.trim();
    if let Some(k) = label_index(alg, text) {
        return Ok(alg.basis_element(k));
    }
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if let Some(coords) = parts.iter().map(|p| parse_q(p)).collect::<Option<Vec<Q>>>() {
        if coords.len() == alg.dim() {
            return Ok(Element::new(coords));
        }
        return Err(format!("expected {} coordinates, got {}", alg.dim(), coords.len()));
    }
    let mut out = alg.zero();
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in text.chars() {
        if (ch == '+' || ch == '-') && !cur.trim().is_empty() {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.trim().is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
    }
    terms.push((neg, cur));
    for (neg, term) in terms {
        let term = term.trim();
        if term.is_empty() {
            return Err(format!("malformed element `{text}`"));
        }
        let (c, label) = split_coefficient(term);
        let mut c = c.unwrap_or_else(Q::one);
        if neg {
            c = -c;
        }
        let k = label_index(alg, label).ok_or_else(|| format!("unknown basis label `{label}`"))?;
        out.axpy(&c, &alg.basis_element(k));
    }
    if text.is_empty() {
        return Err("empty element".into());
    }
    Ok(out)
}

/// Parses a comma-separated list of rationals such as `1,4,16,1/2`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Q>, String> {
    text.split(',')
        .map(|p| parse_q(p.trim()).ok_or_else(|| format!("bad rational `{}`", p.trim())))
        .collect()
}

/// Prints a float with 12 significant digits, trailing zeros removed.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&exp) {
        let s = format!("{:.11e}", x);
        let (m, e) = s.split_once('e').unwrap();
        let m = m.trim_end_matches('0').trim_end_matches('.');
        return format!("{m}e{e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Renders a vector of rationals as `a, b, c`.
pub fn fmt_coords(v: &[Q]) -> String {
    v.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
}
