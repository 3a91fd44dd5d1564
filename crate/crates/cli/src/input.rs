//! Arrangement files: `{"lines": [[a,b,c], ...], "conics": [[A,B,C,D,E,F], ...]}`.

use std::path::Path;

use nearfree_core::arrangement::{Arrangement, ConicSpec, LineSpec};
use nearfree_core::exactpoly::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

fn field(path: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Field {
        path: path.into(),
        message: message.into(),
    }
}

pub fn read_arrangement(path: &Path) -> Result<Arrangement, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_arrangement(&text)
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement, InputError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| InputError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = doc.as_object().ok_or_else(|| field("$", "expected an object"))?;
    if let Some(key) = obj.keys().find(|k| *k != "lines" && *k != "conics") {
        return Err(field(key.as_str(), "unknown key (expected \"lines\" or \"conics\")"));
    }
    let lines = rows(obj.get("lines"), "lines", 3)?
        .into_iter()
        .map(|c| LineSpec::new(c[0].clone(), c[1].clone(), c[2].clone()))
        .collect();
    let conics = rows(obj.get("conics"), "conics", 6)?
        .into_iter()
        .map(|c| ConicSpec::new(c.try_into().expect("six coefficients")))
        .collect();
    Ok(Arrangement::new(lines, conics))
}

fn rows(v: Option<&Value>, key: &str, width: usize) -> Result<Vec<Vec<Rational>>, InputError> {
    let Some(v) = v else {
        return Ok(Vec::new());
    };
    let list = v.as_array().ok_or_else(|| field(key, "expected an array"))?;
    let mut out = Vec::with_capacity(list.len());
    for (i, row) in list.iter().enumerate() {
        let at = format!("{key}[{i}]");
        let entries = row.as_array().ok_or_else(|| field(&at, "expected an array"))?;
        if entries.len() != width {
            return Err(field(&at, format!("expected {width} coefficients, found {}", entries.len())));
        }
        let coeffs = entries
            .iter()
            .enumerate()
            .map(|(j, e)| number(e).map_err(|m| field(format!("{at}[{j}]"), m)))
            .collect::<Result<_, _>>()?;
        out.push(coeffs);
    }
    Ok(out)
}

/// A JSON integer or a string `"p/q"` with `q > 0`.
fn number(v: &Value) -> Result<Rational, String> {
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => Ok(Rational::from_integer(i.into())),
            (None, Some(u)) => Ok(Rational::from_integer(u.into())),
            _ => Err(format!("{n} is not an integer; write fractions as \"p/q\"")),
        },
        Value::String(s) => parse_rational(s),
        other => Err(format!("expected an integer or a \"p/q\" string, found {other}")),
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("\"{s}\" is not a rational number of the form p/q");
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(format!("\"{s}\" has a zero denominator"));
    }
    if q.is_negative() {
        return Err(format!("\"{s}\" has a negative denominator"));
    }
    Ok(Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        let arr = parse_arrangement(r#"{"lines":[[-1,1,4]],"conics":[["1/2",1,"-16",0,0,"0/3"]]}"#).unwrap();
        assert_eq!((arr.d(), arr.k()), (1, 1));
        assert_eq!(arr.conics[0].coeffs[0], Rational::new(1.into(), 2.into()));
        assert_eq!(arr.conics[0].coeffs[2], Rational::from_integer((-16).into()));
    }

    #[test]
    fn missing_keys_are_empty() {
        let arr = parse_arrangement(r#"{"conics":[[1,1,-1,0,0,0]]}"#).unwrap();
        assert_eq!((arr.d(), arr.k()), (0, 1));
    }

    #[test]
    fn diagnostics_name_the_field() {
        let msg = |t: &str| parse_arrangement(t).unwrap_err().to_string();
        assert_eq!(msg(r#"{"lines":[["1/0",0,0]]}"#), "lines[0][0]: \"1/0\" has a zero denominator");
        assert!(msg(r#"{"lines":[[1,0,0]],"conic":[]}"#).starts_with("conic: unknown key"));
        assert!(msg(r#"{"lines":[[1,0]]}"#).starts_with("lines[0]: expected 3"));
        assert!(msg(r#"{"conics":[[1,1,1,0,0,1.5]]}"#).starts_with("conics[0][5]: 1.5 is not an integer"));
        assert!(msg(r#"{"lines":[[1,"x",0]]}"#).starts_with("lines[0][1]: \"x\" is not"));
        assert!(msg(r#"{"lines":[[1,"1/-2",0]]}"#).contains("negative denominator"));
        assert!(msg("{\"lines\":\n[[1,2,3]").starts_with("malformed JSON at line 2"));
    }
}
