//! Text formats for algebras and actions.
//!
//! An algebra file lists a field, a dimension, optional basis names and the
//! nonzero structure constants; unlisted products are zero:
//!
//! ```text
//! field GF(5)
//! dim 3
//! basis x1 x2 z
//! prod 0 1 2 1        # x1 x2 = z
//! prod x2 x1 z -1     # names work too
//! ```
//!
//! An action file names the acting and target algebras (a path relative to
//! the file, `@name` for a canonical algebra, or an inline `{ … }` block) and
//! lists `left b a k c` (`e_b · e_a` has `c` on `e_k`) and `right a b k c`.

use std::fs;
use std::path::{Path, PathBuf};

use crate::action::ActionData;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};
use crate::witness::canonical;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Strips comments and blank lines, keeping 1-based line numbers.
fn lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn resolve_index(token: &str, names: &[String], line: usize) -> Result<usize> {
    if let Ok(i) = token.parse::<usize>() {
        if i < names.len() {
            return Ok(i);
        }
        return Err(parse_err(
            line,
            format!("index {i} out of range for dimension {}", names.len()),
        ));
    }
    names
        .iter()
        .position(|n| n == token)
        .ok_or_else(|| parse_err(line, format!("unknown basis element {token:?}")))
}

fn parse_algebra_lines(ls: &[(usize, &str)]) -> Result<Algebra> {
    let mut field: Option<Field> = None;
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut prods: Vec<(usize, Vec<&str>)> = Vec::new();
    for &(n, l) in ls {
        let mut words = l.split_whitespace();
        let key = words.next().unwrap_or("");
        let rest: Vec<&str> = words.collect();
        match key {
            "field" => {
                let f: Field = rest.join(" ").parse().map_err(|e: Error| parse_err(n, e.to_string()))?;
                field = Some(f);
            }
            "dim" => {
                let d = rest
                    .first()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(n, "dim needs a nonnegative integer"))?;
                dim = Some(d);
            }
            "basis" => names = Some(rest.iter().map(|s| s.to_string()).collect()),
            "prod" => prods.push((n, rest)),
            _ => return Err(parse_err(n, format!("unexpected keyword {key:?}"))),
        }
    }
    let field = field.ok_or_else(|| parse_err(0, "missing field line"))?;
    let dim = match (dim, &names) {
        (Some(d), _) => d,
        (None, Some(ns)) => ns.len(),
        (None, None) => return Err(parse_err(0, "missing dim line")),
    };
    let names = names.unwrap_or_else(|| crate::algebra::default_names(dim));
    if names.len() != dim {
        return Err(parse_err(0, format!("{} basis names for dimension {dim}", names.len())));
    }
    let mut a = Algebra::zero(field, dim).with_names(names.clone())?;
    for (n, rest) in prods {
        if rest.len() != 4 {
            return Err(parse_err(n, "prod needs i j k coefficient"));
        }
        let i = resolve_index(rest[0], &names, n)?;
        let j = resolve_index(rest[1], &names, n)?;
        let k = resolve_index(rest[2], &names, n)?;
        let c = field.parse(rest[3]).map_err(|e| parse_err(n, e.to_string()))?;
        let sum = &a.coefficient(i, j, k).clone() + &c;
        a.set_coefficient(i, j, k, sum)?;
    }
    Ok(a)
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    parse_algebra_lines(&lines(text))
}

/// A path, or `@name` for a canonical algebra.
pub fn load_algebra(spec: &str) -> Result<Algebra> {
    if let Some(name) = spec.strip_prefix('@') {
        return canonical(name);
    }
    parse_algebra(&fs::read_to_string(spec)?)
}

/// Canonical text: nonzero constants in lexicographic `(i, j, k)` order.
pub fn format_algebra(a: &Algebra) -> String {
    let mut out = format!("field {}\ndim {}\nbasis {}\n", a.field(), a.dim(), a.names().join(" "));
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for k in 0..a.dim() {
                let c = a.coefficient(i, j, k);
                if !c.is_zero() {
                    out.push_str(&format!("prod {i} {j} {k} {c}\n"));
                }
            }
        }
    }
    out
}

fn load_reference(reference: &str, base: &Path, line: usize) -> Result<Algebra> {
    if reference.starts_with('@') {
        return load_algebra(reference).map_err(|e| parse_err(line, e.to_string()));
    }
    let path: PathBuf = base.join(reference);
    let text = fs::read_to_string(&path).map_err(|e| parse_err(line, format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

/// Parses an action file; relative paths are resolved against `base`.
pub fn parse_action(text: &str, base: &Path) -> Result<ActionData> {
    let ls = lines(text);
    let mut acting: Option<Algebra> = None;
    let mut target: Option<Algebra> = None;
    let mut entries: Vec<(usize, bool, Vec<&str>)> = Vec::new();
    let mut idx = 0;
    while idx < ls.len() {
        let (n, l) = ls[idx];
        let mut words = l.split_whitespace();
        let key = words.next().unwrap_or("");
        let rest: Vec<&str> = words.collect();
        match key {
            "acting" | "target" => {
                let alg = if rest == ["{"] {
                    let start = idx + 1;
                    let end = (start..ls.len())
                        .find(|&k| ls[k].1 == "}")
                        .ok_or_else(|| parse_err(n, "unterminated block"))?;
                    idx = end;
                    parse_algebra_lines(&ls[start..end])?
                } else if rest.len() == 1 {
                    load_reference(rest[0], base, n)?
                } else {
                    return Err(parse_err(n, format!("{key} needs a path, @name or {{ block")));
                };
                if key == "acting" {
                    acting = Some(alg);
                } else {
                    target = Some(alg);
                }
            }
            "left" | "right" => entries.push((n, key == "left", rest)),
            _ => return Err(parse_err(n, format!("unexpected keyword {key:?}"))),
        }
        idx += 1;
    }
    let acting = acting.ok_or_else(|| parse_err(0, "missing acting algebra"))?;
    let target = target.ok_or_else(|| parse_err(0, "missing target algebra"))?;
    if acting.field() != target.field() {
        return Err(parse_err(
            0,
            format!("acting over {} but target over {}", acting.field(), target.field()),
        ));
    }
    let field = target.field();
    let mut act = ActionData::zero(acting, target)?;
    for (n, left, rest) in entries {
        if rest.len() != 4 {
            return Err(parse_err(n, "entry needs three indices and a coefficient"));
        }
        let (bn, an) = (act.acting().names().to_vec(), act.target().names().to_vec());
        let (first, second) = if left { (&bn, &an) } else { (&an, &bn) };
        let x = resolve_index(rest[0], first, n)?;
        let y = resolve_index(rest[1], second, n)?;
        let k = resolve_index(rest[2], &an, n)?;
        let c: Scalar = field.parse(rest[3]).map_err(|e| parse_err(n, e.to_string()))?;
        let slot = if left {
            act.left_entry_mut(x, y, k)
        } else {
            act.right_entry_mut(x, y, k)
        };
        *slot = &slot.clone() + &c;
    }
    Ok(act)
}

pub fn load_action(path: &str) -> Result<ActionData> {
    let text = fs::read_to_string(path)?;
    let base = Path::new(path).parent().unwrap_or(Path::new("."));
    parse_action(&text, base)
}

/// Canonical text with both algebras inline.
pub fn format_action(act: &ActionData) -> String {
    let block = |a: &Algebra| {
        format_algebra(a)
            .lines()
            .map(|l| format!("  {l}\n"))
            .collect::<String>()
    };
    let mut out = format!(
        "acting {{\n{}}}\ntarget {{\n{}}}\n",
        block(act.acting()),
        block(act.target())
    );
    let (nb, na) = (act.acting().dim(), act.target().dim());
    for b in 0..nb {
        for a in 0..na {
            for (k, c) in act
                .act_left(&act.acting().unit_vector(b), &act.target().unit_vector(a))
                .iter()
                .enumerate()
            {
                if !c.is_zero() {
                    out.push_str(&format!("left {b} {a} {k} {c}\n"));
                }
            }
        }
    }
    for a in 0..na {
        for b in 0..nb {
            for (k, c) in act
                .act_right(&act.target().unit_vector(a), &act.acting().unit_vector(b))
                .iter()
                .enumerate()
            {
                if !c.is_zero() {
                    out.push_str(&format!("right {a} {b} {k} {c}\n"));
                }
            }
        }
    }
    out
}
