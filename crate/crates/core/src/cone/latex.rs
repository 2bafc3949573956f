//! LaTeX tables: inequalities as `lhs &\ge rhs` with positive terms on the
//! left, rays as coordinate tuples, both inside `aligned` blocks.

use std::fmt::Write as _;

use super::{Cone, ConeError};
use crate::linalg::{primitive, primitive_unoriented};
use crate::scalar::Scalar;

/// `b*3 → b^*_{3}`, `delta_irr → \delta_{irr}`, `D^2_1` unchanged.
pub fn symbol(name: &str) -> String {
    if name.contains('^') {
        return name.to_string();
    }
    let greek = ["lambda", "delta", "omega", "Delta", "kappa"];
    let (head, tail) = match name.find(|c: char| c.is_ascii_digit() || c == '_') {
        Some(i) => name.split_at(i),
        None => (name, ""),
    };
    let (head, star) = match head.strip_suffix('*') {
        Some(h) => (h, "^*"),
        None => (head, ""),
    };
    let head = if greek.contains(&head) { format!("\\{head}") } else { head.to_string() };
    let tail = tail.trim_start_matches('_');
    if tail.is_empty() {
        format!("{head}{star}")
    } else {
        format!("{head}{star}_{{{tail}}}")
    }
}

fn coeff<T: Scalar>(c: &T) -> String {
    if c.is_one() {
        String::new()
    } else if c.to_string().contains('/') {
        let s = c.to_string();
        let (p, q) = s.split_once('/').expect("fraction");
        format!("\\tfrac{{{p}}}{{{q}}}")
    } else {
        c.to_string()
    }
}

fn side<T: Scalar>(terms: &[(T, &str)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|(c, s)| format!("{}\\check {}", coeff(c), s)).collect::<Vec<_>>().join(" + ")
}

fn relation<T: Scalar>(a: &[T], syms: &[String], op: &str) -> String {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (c, s) in a.iter().zip(syms) {
        if c.is_positive() {
            lhs.push((c.clone(), s.as_str()));
        } else if c.is_negative() {
            rhs.push((-c.clone(), s.as_str()));
        }
    }
    format!("{} &{op} {}", side(&lhs), side(&rhs))
}

/// Needs both representations where they are printed; `names` label the
/// coordinates.
pub fn write<T: Scalar>(cone: &Cone<T>, names: &[String]) -> Result<String, ConeError> {
    if names.len() != cone.ambient_dim() {
        return Err(ConeError::DimensionMismatch { expected: cone.ambient_dim(), found: names.len() });
    }
    let syms: Vec<String> = names.iter().map(|n| symbol(n)).collect();
    let mut out = String::new();
    if let Ok(ineqs) = cone.inequalities() {
        writeln!(out, "\\[\n\\begin{{aligned}}").unwrap();
        let mut lines = Vec::new();
        for a in ineqs {
            lines.push(relation(&primitive(a)?, &syms, "\\ge"));
        }
        for e in cone.equations()? {
            lines.push(relation(&primitive_unoriented(e)?, &syms, "="));
        }
        writeln!(out, "{}", lines.join(", \\\\\n")).unwrap();
        writeln!(out, "\\end{{aligned}}\n\\]").unwrap();
    }
    if let Ok(rays) = cone.rays() {
        let coords: Vec<String> = rays
            .iter()
            .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        writeln!(out, "% rays in ({})", syms.join(", ")).unwrap();
        writeln!(out, "\\begin{{align*}}").unwrap();
        let rows: Vec<String> = coords.chunks(5).map(|c| c.join(",& \\quad ")).collect();
        writeln!(out, "{}", rows.join(", \\\\\n")).unwrap();
        writeln!(out, "\\end{{align*}}").unwrap();
        if let Ok(lin) = cone.lineality() {
            for l in lin {
                writeln!(out, "% lineality ({})", l.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).unwrap();
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qv, RatCone};

    #[test]
    fn symbols() {
        assert_eq!(symbol("b3"), "b_{3}");
        assert_eq!(symbol("b*12"), "b^*_{12}");
        assert_eq!(symbol("delta_irr"), "\\delta_{irr}");
        assert_eq!(symbol("lambda"), "\\lambda");
        assert_eq!(symbol("D^2_1"), "D^2_1");
    }

    #[test]
    fn table() {
        let c = RatCone::from_hrep(2, vec![qv(&[-1, 3]), qv(&[1, 0])], vec![]).unwrap().canonical().unwrap();
        let t = write(&c, &["b2".into(), "b3".into()]).unwrap();
        assert!(t.contains("3\\check b_{3} &\\ge \\check b_{2}"), "{t}");
        assert!(t.contains("(0,1),& \\quad (3,1)"), "{t}");
        assert!(write(&c, &["b2".into()]).is_err());
    }
}
