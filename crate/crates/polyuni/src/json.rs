//! Serializable mirrors of the core reports. Field order is the key order
//! in the emitted JSON.

use std::time::Duration;

use polyuni_core::enumerate::Method;
use polyuni_core::graph6;
use polyuni_core::sequence::Condition;
use polyuni_core::{CanonicalCode, DegreeSequence, Error, FeasibilityReport, UnigraphicReport, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FeasibilityJson {
    pub sequence: String,
    pub p: usize,
    pub graphical: bool,
    pub polyhedral_necessary: bool,
    pub violated_conditions: Vec<String>,
}

impl FeasibilityJson {
    pub fn new(s: &DegreeSequence, r: &FeasibilityReport) -> Self {
        FeasibilityJson {
            sequence: s.to_string(),
            p: s.len(),
            graphical: r.graphical,
            polyhedral_necessary: r.polyhedral_necessary,
            violated_conditions: r.violated_conditions.iter().map(|c| c.id().to_string()).collect(),
        }
    }

    pub fn to_report(&self) -> Result<FeasibilityReport, Error> {
        let violated_conditions = self
            .violated_conditions
            .iter()
            .map(|id| Condition::from_id(id).ok_or_else(|| Error::ParseSequence(format!("unknown condition {id}"))))
            .collect::<Result<_, _>>()?;
        Ok(FeasibilityReport {
            graphical: self.graphical,
            polyhedral_necessary: self.polyhedral_necessary,
            violated_conditions,
        })
    }
}

/// `canonical_codes` and `witnesses` are graph6 strings; witnesses are
/// emitted in canonical labelling.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub sequence: String,
    pub p: usize,
    pub verdict: String,
    pub realization_count: usize,
    pub truncated: bool,
    pub method: String,
    pub canonical_codes: Vec<String>,
    pub witnesses: Vec<String>,
    pub elapsed_us: u64,
}

impl From<&UnigraphicReport> for ReportJson {
    fn from(r: &UnigraphicReport) -> Self {
        ReportJson {
            sequence: r.sequence.to_string(),
            p: r.sequence.len(),
            verdict: r.verdict.name().to_string(),
            realization_count: r.realization_count,
            truncated: r.truncated,
            method: r.method.name().to_string(),
            canonical_codes: r.canonical_codes.iter().map(|c| c.as_str().to_string()).collect(),
            witnesses: r.witnesses.iter().map(graph6::encode_string).collect(),
            elapsed_us: r.elapsed.as_micros() as u64,
        }
    }
}

impl ReportJson {
    pub fn verdict(&self) -> Option<Verdict> {
        Verdict::from_name(&self.verdict)
    }

    pub fn to_report(&self) -> Result<UnigraphicReport, Error> {
        let bad = |what: &str| Error::ParseSequence(format!("report field {what}"));
        let sequence: DegreeSequence = self.sequence.parse()?;
        let verdict = self.verdict().ok_or_else(|| bad("verdict"))?;
        let method = Method::from_name(&self.method).ok_or_else(|| bad("method"))?;
        let canonical_codes = self.canonical_codes.iter().map(|c| CanonicalCode(c.as_bytes().to_vec())).collect();
        let witnesses = self.witnesses.iter().map(|w| graph6::decode(w.as_bytes())).collect::<Result<_, _>>()?;
        Ok(UnigraphicReport {
            sequence,
            realization_count: self.realization_count,
            canonical_codes,
            verdict,
            witnesses,
            method,
            truncated: self.truncated,
            elapsed: Duration::from_micros(self.elapsed_us),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyuni_core::enumerate::unigraphic_check;

    #[test]
    fn report_round_trip() {
        for text in ["5,5,5,4,4,4,3", "6,6,5,5,4,4,3,3", "3,3,3"] {
            let s: DegreeSequence = text.parse().unwrap();
            let mut r = unigraphic_check(&s, None);
            r.elapsed = Duration::from_micros(1234);
            let json = serde_json::to_string(&ReportJson::from(&r)).unwrap();
            let back: ReportJson = serde_json::from_str(&json).unwrap();
            assert_eq!(back.to_report().unwrap(), r);
        }
    }

    #[test]
    fn key_order_is_stable() {
        let s: DegreeSequence = "3,3,3,3".parse().unwrap();
        let json = serde_json::to_string(&ReportJson::from(&unigraphic_check(&s, None))).unwrap();
        assert!(json.starts_with(r#"{"sequence":"3,3,3,3","p":4,"verdict":"UNIGRAPHIC","#), "{json}");
    }

    #[test]
    fn feasibility_round_trip() {
        let s: DegreeSequence = "2,2,2,1,1".parse().unwrap();
        let r = s.polyhedral_feasible();
        let j = FeasibilityJson::new(&s, &r);
        assert!(j.violated_conditions.contains(&"min-degree-3".to_string()));
        assert_eq!(j.to_report().unwrap(), r);
    }
}
