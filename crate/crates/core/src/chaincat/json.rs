//! JSON input for user-supplied complexes, maps and intervals:
//!
//! ```json
//! {
//!   "ring": "Z",
//!   "complexes": { "I": { "ranks": [2, 1],
//!                         "differentials": [{ "rows": 2, "cols": 1, "entries": [1, -1] }] } },
//!   "maps": { "bot": { "source": "U", "target": "I",
//!                      "components": [{ "rows": 2, "cols": 1, "entries": [1, 0] }] } },
//!   "interval": { "c1": "I", "c2": "I2", "bot": "bot", "top": "top", "i": "i",
//!                 "down": "down", "up": "up", "star": "star" }
//! }
//! ```
//!
//! `U` always names the tensor unit. Entries are integers or `"p/q"` strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use super::complex::{ChainComplex, ChainMap};
use super::interval::ChainInterval;
use crate::cocat::{Cocategory, Interval};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Ring};

#[derive(Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Value>,
}

#[derive(Deserialize)]
struct RawComplex {
    ranks: Vec<usize>,
    #[serde(default)]
    differentials: Vec<RawMatrix>,
}

#[derive(Deserialize)]
struct RawMap {
    source: String,
    target: String,
    components: Vec<RawMatrix>,
}

#[derive(Deserialize)]
struct RawInterval {
    name: Option<String>,
    c1: String,
    c2: String,
    bot: String,
    top: String,
    i: String,
    down: String,
    up: String,
    star: String,
    sigma: Option<String>,
    meet: Option<String>,
    join: Option<String>,
}

#[derive(Deserialize)]
struct RawInput {
    ring: Option<String>,
    #[serde(default)]
    complexes: BTreeMap<String, RawComplex>,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    interval: Option<RawInterval>,
}

#[derive(Debug, Clone)]
pub struct ChainInput {
    pub ring: Ring,
    pub complexes: BTreeMap<String, Arc<ChainComplex>>,
    pub maps: BTreeMap<String, ChainMap>,
    pub interval: Option<ChainInterval>,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn invalid(message: String) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message,
    }
}

fn matrix(ring: Ring, raw: &RawMatrix) -> Result<Matrix> {
    let data = raw
        .entries
        .iter()
        .map(|v| match v {
            Value::Number(n) => ring.parse_scalar(&n.to_string()),
            Value::String(s) => ring.parse_scalar(s),
            other => Err(invalid(format!("matrix entry {other} is not a number"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_vec(ring, raw.rows, raw.cols, data)
}

/// Parses the JSON input. `default_ring` is used when the document has no
/// `ring` field.
pub fn parse_chain_input(text: &str, default_ring: Ring) -> Result<ChainInput> {
    let raw: RawInput = serde_json::from_str(text).map_err(parse_error)?;
    let ring = match &raw.ring {
        Some(r) => r.parse()?,
        None => default_ring,
    };

    let mut complexes = BTreeMap::new();
    complexes.insert("U".to_string(), Arc::new(ChainComplex::unit(ring)));
    for (name, c) in &raw.complexes {
        let diffs = c
            .differentials
            .iter()
            .map(|m| matrix(ring, m))
            .collect::<Result<Vec<_>>>()?;
        complexes.insert(name.clone(), Arc::new(ChainComplex::new(ring, c.ranks.clone(), diffs)?));
    }
    let lookup = |name: &str| {
        complexes
            .get(name)
            .cloned()
            .ok_or_else(|| invalid(format!("unknown complex `{name}`")))
    };

    let mut maps = BTreeMap::new();
    for (name, m) in &raw.maps {
        let comps = m
            .components
            .iter()
            .map(|c| matrix(ring, c))
            .collect::<Result<Vec<_>>>()?;
        maps.insert(
            name.clone(),
            ChainMap::new(lookup(&m.source)?, lookup(&m.target)?, comps)?,
        );
    }
    let get = |name: &str| {
        maps.get(name)
            .cloned()
            .ok_or_else(|| invalid(format!("unknown map `{name}`")))
    };
    let opt = |name: &Option<String>| name.as_deref().map(get).transpose();

    let interval = match &raw.interval {
        None => None,
        Some(iv) => {
            let mut out = Interval::new(
                iv.name.clone().unwrap_or_else(|| "input".into()),
                Cocategory {
                    c0: complexes["U"].clone(),
                    c1: lookup(&iv.c1)?,
                    c2: lookup(&iv.c2)?,
                    bot: get(&iv.bot)?,
                    top: get(&iv.top)?,
                    i: get(&iv.i)?,
                    down: get(&iv.down)?,
                    up: get(&iv.up)?,
                    star: get(&iv.star)?,
                },
            );
            out.sigma = opt(&iv.sigma)?;
            out.meet = opt(&iv.meet)?;
            out.join = opt(&iv.join)?;
            Some(out)
        }
    };

    Ok(ChainInput {
        ring,
        complexes,
        maps,
        interval,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_a_segment() {
        let text = r#"{
            "ring": "Q",
            "complexes": { "I": { "ranks": [2, 1],
                "differentials": [{ "rows": 2, "cols": 1, "entries": [1, "-1"] }] } },
            "maps": { "bot": { "source": "U", "target": "I",
                "components": [{ "rows": 2, "cols": 1, "entries": [1, 0] }] } }
        }"#;
        let input = parse_chain_input(text, Ring::Integers).unwrap();
        assert_eq!(input.ring, Ring::Rationals);
        assert_eq!(input.complexes["I"].ranks(), &[2, 1]);
        assert!(input.maps.contains_key("bot"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_chain_input("{\n  \"ring\": }", Ring::Integers).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
