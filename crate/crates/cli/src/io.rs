//! JSON poset files.
//!
//! ```json
//! {"elements": ["0", "x", "1"], "covers": [["0", "x"], ["x", "1"]],
//!  "labels": {"0|x": "1", "x|1": "2"}}
//! ```
//!
//! `labels` is optional; its keys join the two ends of a cover with `|`.
//! The optional `label_order` is `"natural"` or `"signed"`; when absent it
//! is `"signed"` if any label is a pair and `"natural"` otherwise.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use majordex::poset::{GradedPoset, PosetError, RawPoset};
use majordex::rlabel::{Label, LabelError, LabelOrder, LabeledPoset};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Schema { path: PathBuf, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_order: Option<String>,
}

impl PosetFile {
    pub fn from_poset(p: &GradedPoset) -> Self {
        let raw = p.to_raw();
        Self {
            elements: raw.elements,
            covers: raw.covers.into_iter().map(|(lo, hi)| [lo, hi]).collect(),
            labels: None,
            label_order: None,
        }
    }

    pub fn from_labeled(lp: &LabeledPoset) -> Self {
        let mut file = Self::from_poset(lp.poset());
        let labels = lp
            .named_labels()
            .into_iter()
            .map(|((lo, hi), l)| (format!("{lo}|{hi}"), l.to_string()));
        file.labels = Some(labels.collect());
        file.label_order = Some(
            match lp.order() {
                LabelOrder::Natural => "natural",
                LabelOrder::Signed => "signed",
            }
            .to_string(),
        );
        file
    }

    /// Validates into a poset, plus a labeled poset when labels are present.
    pub fn into_poset(self) -> Result<(GradedPoset, Option<LabeledPoset>), String> {
        let raw = RawPoset {
            elements: self.elements,
            covers: self.covers.into_iter().map(|[lo, hi]| (lo, hi)).collect(),
        };
        let poset = raw.validate().map_err(|e: PosetError| e.to_string())?;
        let Some(labels) = self.labels else {
            if self.label_order.is_some() {
                return Err("\"label_order\" given without \"labels\"".into());
            }
            return Ok((poset, None));
        };
        let mut named = HashMap::with_capacity(labels.len());
        for (key, text) in &labels {
            let (lo, hi) = split_key(&poset, key).ok_or_else(|| format!("label key {key:?} is not \"lower|upper\""))?;
            let label: Label = text.parse().map_err(|e: LabelError| format!("labels[{key:?}]: {e}"))?;
            named.insert((lo, hi), label);
        }
        let order = match self.label_order.as_deref() {
            Some("natural") => LabelOrder::Natural,
            Some("signed") => LabelOrder::Signed,
            Some(other) => {
                return Err(format!(
                    "\"label_order\" must be \"natural\" or \"signed\", not {other:?}"
                ))
            }
            None if named.values().any(|l| matches!(l, Label::Pair(..))) => LabelOrder::Signed,
            None => LabelOrder::Natural,
        };
        let labeled = LabeledPoset::from_named(poset.clone(), order, &named).map_err(|e| format!("labels: {e}"))?;
        Ok((poset, Some(labeled)))
    }
}

/// Splits at the `|` whose two sides both name elements.
fn split_key(p: &GradedPoset, key: &str) -> Option<(String, String)> {
    key.match_indices('|')
        .map(|(i, _)| (&key[..i], &key[i + 1..]))
        .find_map(|(lo, hi)| {
            (p.index_of(lo).is_some() && p.index_of(hi).is_some()).then(|| (lo.to_string(), hi.to_string()))
        })
}

pub fn parse_poset_json(text: &str) -> Result<(GradedPoset, Option<LabeledPoset>), String> {
    let file: PosetFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    file.into_poset()
}

pub fn read_poset_file(path: &Path) -> Result<(GradedPoset, Option<LabeledPoset>), IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_poset_json(&text).map_err(|message| IoError::Schema {
        path: path.to_path_buf(),
        message,
    })
}

pub fn poset_json(p: &GradedPoset) -> String {
    serde_json::to_string_pretty(&PosetFile::from_poset(p)).expect("plain data serializes")
}

pub fn labeled_poset_json(lp: &LabeledPoset) -> String {
    serde_json::to_string_pretty(&PosetFile::from_labeled(lp)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use majordex::poset::boolean_algebra;
    use majordex::rlabel::signed_labeling;

    #[test]
    fn round_trip() {
        let b2 = boolean_algebra(2);
        let (back, labels) = parse_poset_json(&poset_json(&b2)).unwrap();
        assert!(labels.is_none());
        assert_eq!(back.flag_f(), b2.flag_f());
    }

    #[test]
    fn labeled_round_trip() {
        let fan = signed_labeling(&[3]);
        let json = labeled_poset_json(&fan);
        assert!(json.contains("\"(-1,1)\""));
        let (_, labeled) = parse_poset_json(&json).unwrap();
        let labeled = labeled.unwrap();
        assert_eq!(labeled.named_labels(), fan.named_labels());
        assert_eq!(labeled.order(), LabelOrder::Signed);
        assert_eq!(labeled.bs_sum().unwrap(), fan.bs_sum().unwrap());
    }

    #[test]
    fn schema_errors_name_the_key() {
        let e = parse_poset_json(r#"{"elements": ["0", "1"]}"#).unwrap_err();
        assert!(e.contains("covers"), "{e}");
        let e = parse_poset_json(r#"{"elements": ["0"], "covers": [], "cover": []}"#).unwrap_err();
        assert!(e.contains("cover"), "{e}");
        let e = parse_poset_json(r#"{"elements": ["0", "1"], "covers": [["0", "2"]]}"#).unwrap_err();
        assert!(e.contains("\"2\""), "{e}");
        let e = parse_poset_json(r#"{"elements": ["0", "1"], "covers": [["0", "1"]], "labels": {"0-1": "1"}}"#)
            .unwrap_err();
        assert!(e.contains("0-1"), "{e}");
    }

    #[test]
    fn bar_in_element_names() {
        let json = r#"{"elements": ["a|b", "c"], "covers": [["a|b", "c"]], "labels": {"a|b|c": "1"}}"#;
        let (_, labeled) = parse_poset_json(json).unwrap();
        assert_eq!(
            labeled.unwrap().named_labels(),
            vec![(("a|b".into(), "c".into()), Label::Int(1))]
        );
    }
}
