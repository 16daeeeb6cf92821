//! JSON form of a fibration spec.
//!
//! ```json
//! {
//!   "spec_version": 1,
//!   "higher_fiber": [{"genus": 2}],
//!   "lefschetz": [{"type": "I", "twist": "t4"}, {"type": "II", "h": 1, "conjugator": "t3"}],
//!   "rounds": [{"component": 0, "cycle": {"type": "I"}, "monodromy": "t5^-4"}],
//!   "flags": {"spin": false, "simply_connected": true}
//! }
//! ```
//!
//! A Lefschetz entry describes `w · t · w⁻¹` with `w` the conjugator (default
//! empty) and `t` the twist word (default `t1` for type I and
//! `(t1 ... t2h)^(4h+2)` for type II_h). `component` defaults to 0.

use serde::{Deserialize, Serialize};

use super::{FiberComponent, FibrationError, FibrationSpec, Flags, LefschetzDatum, RoundRegion};
use crate::cli::grammar::parse_word;
use crate::surface::{CurveDescriptor, CurveType, Genus, MCGWord};

pub const SPEC_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub spec_version: u32,
    pub higher_fiber: Vec<ComponentDoc>,
    #[serde(default)]
    pub lefschetz: Vec<LefschetzDoc>,
    #[serde(default)]
    pub rounds: Vec<RoundDoc>,
    #[serde(default)]
    pub flags: Flags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleDoc {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LefschetzDoc {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoundDoc {
    pub component: usize,
    pub cycle: CycleDoc,
    pub monodromy: String,
}

fn curve_type(kind: &str, h: Option<u32>) -> Result<CurveType, FibrationError> {
    match (kind, h) {
        ("I", None) => Ok(CurveType::NonSeparating),
        ("I", Some(_)) => Err(FibrationError::Malformed("type I cycles take no h".into())),
        ("II", Some(h)) => Ok(CurveType::Separating { h }),
        ("II", None) => Err(FibrationError::Malformed("type II cycles need h".into())),
        (other, _) => Err(FibrationError::Malformed(format!("unknown cycle type {other:?}"))),
    }
}

fn cycle_doc(kind: CurveType) -> (String, Option<u32>) {
    match kind {
        CurveType::NonSeparating => ("I".into(), None),
        CurveType::Separating { h } => ("II".into(), Some(h)),
    }
}

/// The standard twist along a curve of the given type.
pub fn default_twist(genus: Genus, kind: CurveType) -> Result<MCGWord, FibrationError> {
    Ok(match kind {
        CurveType::NonSeparating => MCGWord::twists(genus, [1])?,
        CurveType::Separating { h } if h == 0 || h >= genus.get() => {
            return Err(FibrationError::Malformed(format!(
                "Lefschetz vanishing cycle of type II_{h} in genus {genus} bounds a disk"
            )))
        }
        CurveType::Separating { h } => MCGWord::twists(genus, 1..=2 * h)?.pow(4 * h as i64 + 2),
    })
}

impl SpecDocument {
    pub fn from_json(text: &str) -> Result<Self, FibrationError> {
        serde_json::from_str(text).map_err(|e| FibrationError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec documents always serialize")
    }

    pub fn into_spec(self) -> Result<FibrationSpec, FibrationError> {
        if self.spec_version != SPEC_VERSION {
            return Err(FibrationError::Malformed(format!(
                "unsupported spec_version {} (expected {SPEC_VERSION})",
                self.spec_version
            )));
        }
        let higher: Vec<FiberComponent> =
            self.higher_fiber.iter().map(|c| FiberComponent { genus: Genus(c.genus) }).collect();
        let mut lefschetz = Vec::new();
        for (j, doc) in self.lefschetz.iter().enumerate() {
            let component = doc.component.unwrap_or(0);
            let genus = higher
                .get(component)
                .ok_or_else(|| FibrationError::Malformed(format!("lefschetz[{j}]: no component {component}")))?
                .genus;
            if genus.get() == 0 {
                return Err(FibrationError::Malformed(format!(
                    "lefschetz[{j}]: component {component} has genus 0"
                )));
            }
            let kind = curve_type(&doc.kind, doc.h)?;
            let cycle = CurveDescriptor::new(genus, kind)?;
            let twist = match &doc.twist {
                Some(t) => parse_word(t, genus).map_err(|e| FibrationError::Parse(format!("lefschetz[{j}].twist: {e}")))?,
                None => default_twist(genus, kind)?,
            };
            let conjugator = match &doc.conjugator {
                Some(t) => parse_word(t, genus)
                    .map_err(|e| FibrationError::Parse(format!("lefschetz[{j}].conjugator: {e}")))?,
                None => MCGWord::empty(genus),
            };
            lefschetz.push(LefschetzDatum { component, cycle, twist, conjugator });
        }
        let mut genera: Vec<Genus> = higher.iter().map(|c| c.genus).collect();
        let mut rounds = Vec::new();
        for (i, doc) in self.rounds.iter().enumerate() {
            let genus = *genera
                .get(doc.component)
                .ok_or_else(|| FibrationError::Malformed(format!("rounds[{i}]: no component {}", doc.component)))?;
            let kind = curve_type(&doc.cycle.kind, doc.cycle.h)?;
            let cycle = CurveDescriptor::new(genus, kind)
                .map_err(|e| FibrationError::Malformed(format!("rounds[{i}]: {e}")))?;
            let monodromy = parse_word(&doc.monodromy, genus)
                .map_err(|e| FibrationError::Parse(format!("rounds[{i}].monodromy: {e}")))?;
            super::apply_round(&mut genera, doc.component, kind);
            rounds.push(RoundRegion { component: doc.component, cycle, monodromy });
        }
        FibrationSpec::new(higher, lefschetz, rounds, self.flags)
    }

    pub fn from_spec(spec: &FibrationSpec) -> Self {
        let word = |w: &MCGWord| if w.is_empty() { "1".to_string() } else { w.to_string() };
        SpecDocument {
            spec_version: SPEC_VERSION,
            higher_fiber: spec.higher_fiber.iter().map(|c| ComponentDoc { genus: c.genus.get() }).collect(),
            lefschetz: spec
                .lefschetz
                .iter()
                .map(|l| {
                    let (kind, h) = cycle_doc(l.cycle.kind());
                    LefschetzDoc {
                        kind,
                        h,
                        component: (l.component != 0).then_some(l.component),
                        twist: Some(word(&l.twist)),
                        conjugator: (!l.conjugator.is_empty()).then(|| l.conjugator.to_string()),
                    }
                })
                .collect(),
            rounds: spec
                .rounds
                .iter()
                .map(|r| {
                    let (kind, h) = cycle_doc(r.cycle.kind());
                    RoundDoc { component: r.component, cycle: CycleDoc { kind, h }, monodromy: word(&r.monodromy) }
                })
                .collect(),
            flags: spec.flags,
        }
    }
}
