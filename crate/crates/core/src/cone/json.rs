//! JSON form `{ambient_dim, hrep:{inequalities, equations}, vrep:{rays, lineality}}`
//! with rows cleared to integers. Entries that overflow `i64` are written as
//! strings; the reader accepts numbers, integer strings and `"p/q"` strings.

use serde_json::Value;
use thiserror::Error;

use super::{Cone, ConeError, HRep, VRep};
use crate::linalg::{primitive, primitive_unoriented};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("bad cone JSON: {0}")]
    Schema(String),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

fn cell<T: Scalar>(x: &T) -> String {
    let s = x.to_string();
    if s.parse::<i64>().is_ok() {
        s
    } else {
        format!("\"{s}\"")
    }
}

fn rows_json<T: Scalar>(rows: &[Vec<T>], indent: &str) -> String {
    if rows.is_empty() {
        return "[]".to_string();
    }
    let lines: Vec<String> = rows
        .iter()
        .map(|r| format!("{indent}  [{}]", r.iter().map(cell).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[\n{}\n{indent}]", lines.join(",\n"))
}

fn scaled<T: Scalar>(rows: &[Vec<T>], oriented: bool) -> Result<Vec<Vec<T>>, ConeError> {
    rows.iter()
        .map(|r| if oriented { primitive(r) } else { primitive_unoriented(r) })
        .collect::<Result<_, _>>()
        .map_err(ConeError::from)
}

/// Deterministic pretty JSON.
pub fn write<T: Scalar>(cone: &Cone<T>) -> Result<String, ConeError> {
    let h = match cone.hrep() {
        None => "null".to_string(),
        Some(h) => format!(
            "{{\n    \"inequalities\": {},\n    \"equations\": {}\n  }}",
            rows_json(&scaled(&h.inequalities, true)?, "    "),
            rows_json(&scaled(&h.equations, false)?, "    ")
        ),
    };
    let v = match cone.vrep() {
        None => "null".to_string(),
        Some(v) => format!(
            "{{\n    \"rays\": {},\n    \"lineality\": {}\n  }}",
            rows_json(&scaled(&v.rays, true)?, "    "),
            rows_json(&scaled(&v.lineality, false)?, "    ")
        ),
    };
    Ok(format!("{{\n  \"ambient_dim\": {},\n  \"hrep\": {h},\n  \"vrep\": {v}\n}}\n", cone.ambient_dim()))
}

fn scalar<T: Scalar>(v: &Value) -> Result<T, JsonError> {
    let s = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(JsonError::Schema(format!("expected a number, got {v}"))),
    };
    T::parse_exact(&s).ok_or_else(|| JsonError::Schema(format!("not an exact rational: {s}")))
}

fn rows<T: Scalar>(v: Option<&Value>, dim: usize, what: &str) -> Result<Vec<Vec<T>>, JsonError> {
    let Some(arr) = v.and_then(Value::as_array) else {
        return Err(JsonError::Schema(format!("missing array '{what}'")));
    };
    arr.iter()
        .map(|row| {
            let cells = row.as_array().ok_or_else(|| JsonError::Schema(format!("'{what}' rows must be arrays")))?;
            if cells.len() != dim {
                return Err(JsonError::Schema(format!("'{what}' row has {} entries, expected {dim}", cells.len())));
            }
            cells.iter().map(scalar).collect()
        })
        .collect()
}

/// Reads a cone. Representations are taken as stored; a V-rep is
/// re-canonicalised from its generators.
pub fn read<T: Scalar>(text: &str) -> Result<Cone<T>, JsonError> {
    let v: Value = serde_json::from_str(text).map_err(|e| JsonError::Syntax(e.to_string()))?;
    let dim = v
        .get("ambient_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| JsonError::Schema("missing 'ambient_dim'".into()))? as usize;
    let hrep = match v.get("hrep") {
        None | Some(Value::Null) => None,
        Some(h) => Some(HRep {
            inequalities: rows(h.get("inequalities"), dim, "inequalities")?,
            equations: rows(h.get("equations"), dim, "equations")?,
        }),
    };
    let vrep = match v.get("vrep") {
        None | Some(Value::Null) => None,
        Some(r) => Some(VRep { rays: rows(r.get("rays"), dim, "rays")?, lineality: rows(r.get("lineality"), dim, "lineality")? }),
    };
    match (hrep, vrep) {
        (None, None) => Err(JsonError::Schema("neither 'hrep' nor 'vrep' present".into())),
        (Some(h), None) => Ok(Cone::from_hrep(dim, h.inequalities, h.equations)?),
        (h, Some(r)) => {
            let mut c = Cone::from_generators(dim, r.rays, r.lineality)?;
            if let Some(h) = h {
                let given = Cone::from_hrep(dim, h.inequalities, h.equations)?;
                if !given.equals(&c)?.is_equal() {
                    return Err(JsonError::Schema("hrep and vrep describe different cones".into()));
                }
                c.hrep = given.hrep;
            }
            Ok(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qv, RatCone};

    #[test]
    fn roundtrip_is_byte_identical() {
        let c = RatCone::from_generators(3, vec![qv(&[3, 2, 4]), qv(&[1, 3, 6]), qv(&[5, 15, 9])], vec![]).unwrap();
        let text = write(&c).unwrap();
        let back: RatCone = read(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(write(&back).unwrap(), text);
    }

    #[test]
    fn hrep_only_and_errors() {
        let c = RatCone::from_hrep(2, vec![qv(&[1, 0])], vec![qv(&[1, 1])]).unwrap();
        let text = write(&c).unwrap();
        assert!(text.contains("\"vrep\": null"));
        assert_eq!(read::<crate::Rational>(&text).unwrap(), c);
        assert!(read::<crate::Rational>("{\"ambient_dim\": 2}").is_err());
        assert!(read::<crate::Rational>("{").is_err());
        let inconsistent = "{\"ambient_dim\":1,\"hrep\":{\"inequalities\":[[1]],\"equations\":[]},\"vrep\":{\"rays\":[[-1]],\"lineality\":[]}}";
        assert!(read::<crate::Rational>(inconsistent).is_err());
        let fractional = "{\"ambient_dim\":2,\"hrep\":null,\"vrep\":{\"rays\":[[\"1/2\", 1]],\"lineality\":[]}}";
        assert_eq!(read::<crate::Rational>(fractional).unwrap().rays().unwrap(), &[qv(&[1, 2])]);
    }
}
