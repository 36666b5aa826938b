//! Serializable verification reports.

use serde::Serialize;

use crate::rational::{pq, Rational};

/// One checked pair `(k, k')` with both sides of the identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairEntry {
    pub k: usize,
    #[serde(rename = "k'")]
    pub k_prime: usize,
    #[serde(with = "pq")]
    pub lhs: Rational,
    #[serde(with = "pq")]
    pub rhs: Rational,
    pub pass: bool,
}

impl PairEntry {
    pub fn new(k: usize, k_prime: usize, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        PairEntry { k, k_prime, lhs, rhs, pass }
    }
}

pub fn all_pass(entries: &[PairEntry]) -> bool {
    entries.iter().all(|e| e.pass)
}

/// Serializes with the requested indentation (`None` for compact output).
pub fn to_json<T: Serialize>(value: &T, indent: Option<usize>) -> String {
    match indent {
        None => serde_json::to_string(value).expect("report serializes"),
        Some(n) => {
            let pad = vec![b' '; n];
            let mut buf = Vec::new();
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            value.serialize(&mut ser).expect("report serializes");
            String::from_utf8(buf).expect("utf-8 json")
        }
    }
}
