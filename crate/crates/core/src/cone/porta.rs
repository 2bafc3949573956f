//! PORTA-style `.ieq` (H-rep) and `.poi` (V-rep) text.
//!
//! Dialect: integers only, sections `DIM = d`, `INEQUALITIES_SECTION`,
//! `CONE_SECTION`, `END`. Cones only: right-hand sides must be 0 and point
//! sections are rejected. Lineality is written as a ± pair of cone rows.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Cone, ConeError};
use crate::linalg::{primitive, primitive_unoriented};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PortaError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Cone(#[from] ConeError),
}

fn perr(line: usize, message: impl Into<String>) -> PortaError {
    PortaError::Parse { line, message: message.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Hrep,
    Vrep,
}

const UNSUPPORTED: &[&str] = &[
    "CONV_SECTION",
    "VALID",
    "LOWER_BOUNDS",
    "UPPER_BOUNDS",
    "ELIMINATION_ORDER",
    "COMMENT",
];

fn term<T: Scalar>(c: &T, var: usize, first: bool) -> String {
    let mag = c.abs();
    let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
    if mag.is_one() {
        format!("{sign}x{var}")
    } else {
        format!("{sign}{mag}x{var}")
    }
}

fn linear_form<T: Scalar>(a: &[T]) -> String {
    let mut s = String::new();
    for (i, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        s.push_str(&term(c, i + 1, s.is_empty()));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Serialises the requested representation.
pub fn write<T: Scalar>(cone: &Cone<T>, which: Which) -> Result<String, PortaError> {
    let mut out = String::new();
    writeln!(out, "DIM = {}", cone.ambient_dim()).unwrap();
    writeln!(out).unwrap();
    let mut idx = 0;
    let mut label = || {
        idx += 1;
        format!("({idx:>3})")
    };
    match which {
        Which::Hrep => {
            writeln!(out, "INEQUALITIES_SECTION").unwrap();
            for a in cone.inequalities()? {
                let a = primitive(a).map_err(ConeError::from)?;
                writeln!(out, "{} {} >= 0", label(), linear_form(&a)).unwrap();
            }
            for e in cone.equations()? {
                let e = primitive_unoriented(e).map_err(ConeError::from)?;
                writeln!(out, "{} {} == 0", label(), linear_form(&e)).unwrap();
            }
        }
        Which::Vrep => {
            writeln!(out, "CONE_SECTION").unwrap();
            let mut rows: Vec<Vec<T>> = Vec::new();
            for r in cone.rays()? {
                rows.push(primitive(r).map_err(ConeError::from)?);
            }
            for l in cone.lineality()? {
                let l = primitive_unoriented(l).map_err(ConeError::from)?;
                rows.push(l.iter().map(|x| -x.clone()).collect());
                rows.push(l);
            }
            for r in rows {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                writeln!(out, "{} {}", label(), cells.join(" ")).unwrap();
            }
        }
    }
    writeln!(out, "END").unwrap();
    Ok(out)
}

#[derive(PartialEq)]
enum Section {
    None,
    Ineq,
    Cone,
    Done,
}

fn strip_label(s: &str, line: usize) -> Result<&str, PortaError> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix('(') {
        let close = rest.find(')').ok_or_else(|| perr(line, "unclosed row label"))?;
        Ok(rest[close + 1..].trim_start())
    } else {
        Ok(s)
    }
}

fn parse_int<T: Scalar>(s: &str, line: usize) -> Result<T, PortaError> {
    if s.contains('/') {
        return Err(perr(line, format!("non-integer coefficient '{s}' (integers only)")));
    }
    T::parse_exact(s).ok_or_else(|| perr(line, format!("bad integer '{s}'")))
}

/// Parses `±c x_k ± …` into a dense vector.
fn parse_form<T: Scalar>(s: &str, dim: usize, line: usize) -> Result<Vec<T>, PortaError> {
    let mut v = vec![T::zero(); dim];
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(v);
    }
    let mut rest = compact.as_str();
    if rest.is_empty() {
        return Err(perr(line, "empty linear form"));
    }
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'+' => (false, &rest[1..]),
            b'-' => (true, &rest[1..]),
            _ => (false, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let tok = &body[..end];
        rest = &body[end..];
        let xpos = tok.find('x').ok_or_else(|| perr(line, format!("expected a term like '3x2', got '{tok}'")))?;
        let coef: T = if xpos == 0 { T::one() } else { parse_int(&tok[..xpos], line)? };
        let var: usize =
            tok[xpos + 1..].parse().map_err(|_| perr(line, format!("bad variable in '{tok}'")))?;
        if var == 0 || var > dim {
            return Err(perr(line, format!("variable x{var} out of range 1..{dim}")));
        }
        let coef = if neg { -coef } else { coef };
        v[var - 1] = v[var - 1].clone() + coef;
    }
    Ok(v)
}

/// Parses either dialect. A `.poi` yields a cone canonicalised from its
/// rows; a `.ieq` yields the H-rep as written.
pub fn read<T: Scalar>(text: &str) -> Result<Cone<T>, PortaError> {
    let mut dim: Option<usize> = None;
    let mut section = Section::None;
    let mut ineqs: Vec<Vec<T>> = Vec::new();
    let mut eqs: Vec<Vec<T>> = Vec::new();
    let mut rays: Vec<Vec<T>> = Vec::new();
    let mut saw_ineq = false;
    let mut saw_cone = false;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if section == Section::Done {
            return Err(perr(line, "content after END"));
        }
        let keyword = s.split(|c: char| c.is_whitespace() || c == '=').next().unwrap_or("");
        if UNSUPPORTED.contains(&keyword) {
            return Err(perr(line, format!("unsupported PORTA keyword {keyword}")));
        }
        match keyword {
            "DIM" => {
                let value = s["DIM".len()..].trim_start().strip_prefix('=').ok_or_else(|| perr(line, "expected 'DIM = d'"))?;
                let d: usize = value.trim().parse().map_err(|_| perr(line, "bad DIM value"))?;
                if dim.is_some() {
                    return Err(perr(line, "duplicate DIM"));
                }
                dim = Some(d);
                continue;
            }
            "INEQUALITIES_SECTION" | "CONE_SECTION" | "END" => {
                if dim.is_none() {
                    return Err(perr(line, "missing DIM"));
                }
                section = match keyword {
                    "INEQUALITIES_SECTION" => {
                        saw_ineq = true;
                        Section::Ineq
                    }
                    "CONE_SECTION" => {
                        saw_cone = true;
                        Section::Cone
                    }
                    _ => Section::Done,
                };
                if saw_ineq && saw_cone {
                    return Err(perr(line, "file mixes INEQUALITIES_SECTION and CONE_SECTION"));
                }
                continue;
            }
            _ => {}
        }
        let d = dim.ok_or_else(|| perr(line, "missing DIM"))?;
        let body = strip_label(s, line)?;
        match section {
            Section::None => return Err(perr(line, "data outside a section")),
            Section::Done => unreachable!(),
            Section::Cone => {
                let row: Vec<T> =
                    body.split_whitespace().map(|t| parse_int(t, line)).collect::<Result<_, _>>()?;
                if row.len() != d {
                    return Err(perr(line, format!("expected {d} entries, found {}", row.len())));
                }
                rays.push(row);
            }
            Section::Ineq => {
                let (op, pos) = ["<=", ">=", "=<", "=>", "=="]
                    .iter()
                    .find_map(|op| body.find(op).map(|p| (*op, p)))
                    .ok_or_else(|| perr(line, "missing relation (<=, >=, ==)"))?;
                let lhs = parse_form::<T>(&body[..pos], d, line)?;
                let rhs = body[pos + 2..].trim();
                if T::parse_exact(rhs).is_none_or(|r| !r.is_zero()) {
                    return Err(perr(line, format!("right-hand side must be 0 (cones only), got '{rhs}'")));
                }
                match op {
                    ">=" | "=>" => ineqs.push(lhs),
                    "<=" | "=<" => ineqs.push(lhs.into_iter().map(|x| -x).collect()),
                    _ => eqs.push(lhs),
                }
            }
        }
    }
    let d = dim.ok_or_else(|| perr(text.lines().count().max(1), "missing DIM"))?;
    if section != Section::Done {
        return Err(perr(text.lines().count().max(1), "missing END"));
    }
    if saw_cone {
        Ok(Cone::from_generators(d, rays, Vec::new())?)
    } else {
        Ok(Cone::from_hrep(d, ineqs, eqs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qv, RatCone};

    #[test]
    fn orthant_ieq() {
        let c = RatCone::orthant(2);
        let text = write(&c, Which::Hrep).unwrap();
        assert!(text.starts_with("DIM = 2\n"));
        assert_eq!(text.lines().filter(|l| l.contains(">=")).count(), 2);
        let back: RatCone = read(&text).unwrap();
        assert_eq!(back.inequalities().unwrap(), c.inequalities().unwrap());
        assert_eq!(write(&back, Which::Hrep).unwrap(), text);
    }

    #[test]
    fn poi_roundtrip_with_lineality() {
        let c = RatCone::from_hrep(3, vec![qv(&[1, 2, 0])], vec![]).unwrap().canonical().unwrap();
        let text = write(&c, Which::Vrep).unwrap();
        let back: RatCone = read(&text).unwrap();
        assert_eq!(back.vrep(), c.vrep());
        assert_eq!(write(&back, Which::Vrep).unwrap(), text);
    }

    #[test]
    fn parse_terms() {
        let text = "DIM = 3\nINEQUALITIES_SECTION\n(1) -x1+3x2 - 2x3 <= 0\n( 2) x2 == 0\nEND\n";
        let c: RatCone = read(text).unwrap();
        assert_eq!(c.inequalities().unwrap(), &[qv(&[1, -3, 2])]);
        assert_eq!(c.equations().unwrap(), &[qv(&[0, 1, 0])]);
    }

    #[test]
    fn errors_carry_lines() {
        let e = read::<crate::Rational>("INEQUALITIES_SECTION\nx1 >= 0\nEND\n").unwrap_err();
        assert_eq!(e.to_string(), "line 1: missing DIM");
        let e = read::<crate::Rational>("DIM = 2\nCONV_SECTION\n").unwrap_err();
        assert!(e.to_string().contains("unsupported PORTA keyword CONV_SECTION"));
        let e = read::<crate::Rational>("DIM = 2\nINEQUALITIES_SECTION\nx1 >= 1\nEND\n").unwrap_err();
        assert!(e.to_string().starts_with("line 3:"));
        let e = read::<crate::Rational>("DIM = 2\nCONE_SECTION\n1/2 1\nEND\n").unwrap_err();
        assert!(e.to_string().contains("integers only"));
        let e = read::<crate::Rational>("DIM = 2\nCONE_SECTION\n1 1\n").unwrap_err();
        assert!(e.to_string().contains("missing END"));
    }
}
