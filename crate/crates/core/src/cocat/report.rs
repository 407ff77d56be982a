use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::context::MonoidalContext;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    /// Combines two verdicts: any failure wins, then any inconclusive.
    pub fn and(self, other: Status) -> Status {
        self.max(other)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Named sub-checks with a verdict each. Failed items always carry a
/// witness.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub items: Vec<CheckItem>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Computed values worth reporting (counts, constructed maps).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
}

/// Errors that mean "the bounded machinery gave up" rather than "the
/// equation is false".
pub fn is_resource_error(e: &Error) -> bool {
    matches!(
        e,
        Error::DepthExceeded(_)
            | Error::CapExceeded(_)
            | Error::DegreeBound(_)
            | Error::NotFree(_)
            | Error::Unsupported(_)
    )
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            items: Vec::new(),
            notes: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    pub fn status(&self) -> Status {
        self.items.iter().fold(Status::Pass, |acc, i| acc.and(i.status))
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn set_data(&mut self, key: &str, value: Value) {
        self.data.insert(key.to_string(), value);
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: Option<String>, witness: Option<Value>) {
        self.items.push(CheckItem {
            name: name.into(),
            status,
            detail,
            witness,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Status::Pass, None, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>, witness: Value) {
        self.push(name, Status::Fail, Some(detail.into()), Some(witness));
    }

    pub fn inconclusive(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Status::Inconclusive, Some(detail.into()), None);
    }

    /// Records a context error against `name`.
    pub fn error(&mut self, name: impl Into<String>, e: &Error) {
        if is_resource_error(e) {
            self.inconclusive(name, e.to_string());
        } else {
            self.fail(name, e.to_string(), json!({ "error": e.to_string() }));
        }
    }

    /// Evaluates both sides of an equation and records the outcome; on
    /// failure the two sides become the witness.
    pub fn equation<C: MonoidalContext + ?Sized>(
        &mut self,
        ctx: &C,
        name: impl Into<String>,
        sides: impl FnOnce() -> Result<(C::Mor, C::Mor)>,
    ) -> bool {
        let name = name.into();
        let outcome = sides().and_then(|(l, r)| Ok((ctx.mor_eq(&l, &r)?, l, r)));
        match outcome {
            Ok((true, _, _)) => {
                self.pass(name);
                true
            }
            Ok((false, l, r)) => {
                let w = json!({ "left": ctx.describe(&l), "right": ctx.describe(&r) });
                self.fail(name, "sides differ", w);
                false
            }
            Err(e) => {
                self.error(name, &e);
                false
            }
        }
    }

    /// Records a boolean property, with a witness built on failure.
    pub fn property(
        &mut self,
        name: impl Into<String>,
        outcome: Result<bool>,
        witness: impl FnOnce() -> Value,
    ) -> bool {
        match outcome {
            Ok(true) => {
                self.pass(name);
                true
            }
            Ok(false) => {
                self.fail(name, "property does not hold", witness());
                false
            }
            Err(e) => {
                self.error(name, &e);
                false
            }
        }
    }

    /// Appends another report's items under `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            item.name = format!("{prefix}/{}", item.name);
            self.items.push(item);
        }
        for n in other.notes {
            self.notes.push(format!("{prefix}: {n}"));
        }
        for (k, v) in other.data {
            self.data.insert(format!("{prefix}/{k}"), v);
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["status"] = serde_json::to_value(self.status()).expect("status serializes");
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_combine() {
        let mut r = CheckReport::new("t");
        r.pass("a");
        assert_eq!(r.status(), Status::Pass);
        r.inconclusive("b", "cap");
        assert_eq!(r.status(), Status::Inconclusive);
        r.fail("c", "no", json!(null));
        assert_eq!(r.status(), Status::Fail);
    }

    #[test]
    fn resource_errors_are_inconclusive() {
        let mut r = CheckReport::new("t");
        r.error("x", &Error::CapExceeded("n".into()));
        r.error("y", &Error::TypeMismatch("n".into()));
        assert_eq!(r.items[0].status, Status::Inconclusive);
        assert_eq!(r.items[1].status, Status::Fail);
        assert!(r.items[1].witness.is_some());
    }
}
