//! Versioned JSON documents for spaces and mappings. The same files serve as
//! CLI input, CLI output, and test fixtures, so serialization is canonical:
//! points and parameters in universe order, opens sorted by flattened bitset
//! value, synthetic names `0_A`/`1_A`/`s1..sN` when none are given.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, TopologyViolation};
use crate::mapping::SoftMapping;
use crate::reflection::Reflection;
use crate::soft_set::{SoftSet, Universe};
use crate::topology::{validate_family, SoftSpace, SoftTopology};

pub const FORMAT_VERSION: u32 = 1;

/// Table of one soft set: parameter label to point labels.
pub type OpenTable = IndexMap<String, Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniverseDoc {
    pub points: Vec<String>,
    pub parameters: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SpaceMetadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    /// Whether the opens, exactly as printed, already form a topology.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_family_valid: Option<bool>,
    /// Axiom name to expected truth value; only the claimed axioms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_profile: Option<IndexMap<String, bool>>,
    /// Reflected-axiom name to expected truth value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_alpha: Option<IndexMap<String, bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_reflection: Option<ReflectionDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub format: u32,
    pub universe: UniverseDoc,
    pub opens: IndexMap<String, OpenTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<SpaceMetadata>,
}

/// Classes and quotient opens of a reflection.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReflectionDoc {
    pub classes: IndexMap<String, Vec<String>>,
    pub opens: IndexMap<String, OpenTable>,
}

/// Outcome of ingesting a family through closure.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub printed_valid: bool,
    /// Human-readable first violation of the printed family, with set names.
    pub violation: Option<String>,
    /// Soft sets the closure added beyond the printed family.
    pub added: Vec<SoftSet>,
}

impl SpaceDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SpaceDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != FORMAT_VERSION {
            return Err(Error::Document(format!(
                "unsupported format {} (expected {})",
                doc.format, FORMAT_VERSION
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.as_ref().and_then(|m| m.name.as_deref())
    }

    pub fn universe(&self) -> Result<Arc<Universe>> {
        Universe::new(
            self.universe.points.iter().cloned(),
            self.universe.parameters.iter().cloned(),
        )
    }

    /// Resolve the opens against the universe, keeping their names and order.
    pub fn family(&self) -> Result<(Vec<String>, Vec<SoftSet>)> {
        let universe = self.universe()?;
        let mut names = Vec::with_capacity(self.opens.len());
        let mut sets = Vec::with_capacity(self.opens.len());
        for (name, table) in &self.opens {
            let mut rows = vec![0u64; universe.param_count()];
            for (param, points) in table {
                let a = universe.param_index(param)?;
                for p in points {
                    rows[a] |= 1 << universe.point_index(p)?;
                }
            }
            names.push(name.clone());
            sets.push(SoftSet::from_rows(Arc::clone(&universe), rows));
        }
        Ok((names, sets))
    }

    fn describe_violation(names: &[String], violation: TopologyViolation) -> String {
        match violation {
            TopologyViolation::MissingNull => "the null soft set is missing".to_string(),
            TopologyViolation::MissingAbsolute => "the absolute soft set is missing".to_string(),
            TopologyViolation::UnionEscapes(i, j) => format!(
                "the union of `{}` and `{}` is not in the family",
                names[i], names[j]
            ),
            TopologyViolation::IntersectionEscapes(i, j) => format!(
                "the intersection of `{}` and `{}` is not in the family",
                names[i], names[j]
            ),
        }
    }

    /// Strict parse: the printed family must already be a topology. The
    /// error message names the witness pair.
    pub fn to_space(&self) -> Result<SoftSpace> {
        let universe = self.universe()?;
        let (names, sets) = self.family()?;
        match validate_family(&universe, &sets) {
            Ok(()) => {}
            Err(Error::InvalidTopology(v)) => {
                return Err(Error::InvalidFamily(Self::describe_violation(&names, v)))
            }
            Err(e) => return Err(e),
        }
        let topology = SoftTopology::validated(&universe, sets)?;
        Ok(self.attach_name(SoftSpace::new(topology)))
    }

    /// Lenient parse: close the family and report what had to be added.
    pub fn to_space_generated(&self) -> Result<(SoftSpace, ClosureReport)> {
        let universe = self.universe()?;
        let (names, sets) = self.family()?;
        let violation = match validate_family(&universe, &sets) {
            Ok(()) => None,
            Err(Error::InvalidTopology(v)) => Some(Self::describe_violation(&names, v)),
            Err(e) => return Err(e),
        };
        let topology = SoftTopology::generate(&universe, sets.clone())?;
        let added = topology
            .opens()
            .iter()
            .filter(|o| !sets.contains(o))
            .cloned()
            .collect();
        let report = ClosureReport {
            printed_valid: violation.is_none(),
            violation,
            added,
        };
        Ok((self.attach_name(SoftSpace::new(topology)), report))
    }

    fn attach_name(&self, space: SoftSpace) -> SoftSpace {
        match self.name() {
            Some(n) => space.with_name(n),
            None => space,
        }
    }

    /// Canonical document for a space: opens in canonical order under
    /// synthetic names.
    pub fn from_space(space: &SoftSpace) -> SpaceDocument {
        let universe = space.universe();
        let opens = named_tables(universe, space.opens());
        let metadata = space.name().map(|n| SpaceMetadata {
            name: Some(n.to_string()),
            ..SpaceMetadata::default()
        });
        SpaceDocument {
            format: FORMAT_VERSION,
            universe: UniverseDoc {
                points: universe.point_labels().to_vec(),
                parameters: universe.param_labels().to_vec(),
            },
            opens,
            metadata,
        }
    }
}

/// Canonical `name -> table` map for a canonically ordered family.
pub(crate) fn named_tables(universe: &Arc<Universe>, opens: &[SoftSet]) -> IndexMap<String, OpenTable> {
    let mut out = IndexMap::new();
    let mut counter = 0;
    for open in opens {
        let name = if open.is_null() {
            "0_A".to_string()
        } else if open.is_absolute() {
            "1_A".to_string()
        } else {
            counter += 1;
            format!("s{counter}")
        };
        out.insert(name, table_of(universe, open));
    }
    out
}

pub(crate) fn table_of(universe: &Arc<Universe>, s: &SoftSet) -> OpenTable {
    let mut table = IndexMap::new();
    for (a, param) in universe.param_labels().iter().enumerate() {
        let row = s.row(a);
        let points = (0..universe.point_count())
            .filter(|x| row >> x & 1 == 1)
            .map(|x| universe.point_label(x).to_string())
            .collect();
        table.insert(param.clone(), points);
    }
    table
}

impl ReflectionDoc {
    pub fn from_reflection(r: &Reflection) -> ReflectionDoc {
        let source = r.source().universe();
        let quotient = r.quotient().universe();
        let mut classes = IndexMap::new();
        for (i, class) in r.classes().iter().enumerate() {
            classes.insert(
                r.class_label(i).to_string(),
                class.iter().map(|&p| source.point_label(p).to_string()).collect(),
            );
        }
        ReflectionDoc {
            classes,
            opens: named_tables(quotient, r.quotient().opens()),
        }
    }

    /// Compare against a computed reflection: classes must match exactly and
    /// the opens must resolve to the same family over the quotient universe.
    pub fn matches(&self, r: &Reflection) -> Result<bool> {
        let computed = ReflectionDoc::from_reflection(r);
        if self.classes != computed.classes {
            return Ok(false);
        }
        let quotient = r.quotient().universe();
        let mut expected: Vec<SoftSet> = Vec::new();
        for table in self.opens.values() {
            let mut rows = vec![0u64; quotient.param_count()];
            for (param, points) in table {
                let a = quotient.param_index(param)?;
                for p in points {
                    rows[a] |= 1 << quotient.point_index(p)?;
                }
            }
            expected.push(SoftSet::from_rows(Arc::clone(quotient), rows));
        }
        expected.sort();
        expected.dedup();
        Ok(expected == r.quotient().opens())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MappingDocument {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub point_map: IndexMap<String, String>,
    pub param_map: IndexMap<String, String>,
}

impl MappingDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MappingDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != FORMAT_VERSION {
            return Err(Error::Document(format!(
                "unsupported format {} (expected {})",
                doc.format, FORMAT_VERSION
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }

    pub fn to_mapping(&self, source: &Arc<Universe>, target: &Arc<Universe>) -> Result<SoftMapping> {
        let point_pairs: Vec<(&str, &str)> = self
            .point_map
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_str()))
            .collect();
        let param_pairs: Vec<(&str, &str)> = self
            .param_map
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_str()))
            .collect();
        SoftMapping::from_labels(source, target, &point_pairs, &param_pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNIFORM_PAIR: &str = r#"{
  "format": 1,
  "universe": { "points": ["x", "y", "z"], "parameters": ["a1", "a2"] },
  "opens": {
    "0_A": { "a1": [], "a2": [] },
    "1_A": { "a1": ["x", "y", "z"], "a2": ["x", "y", "z"] },
    "F": { "a1": ["z"], "a2": ["z"] },
    "G": { "a1": ["x", "y"], "a2": ["x", "y"] }
  },
  "metadata": { "name": "pair" }
}"#;

    const UNDER_CLOSED: &str = r#"{
  "format": 1,
  "universe": { "points": ["x", "y", "z"], "parameters": ["a1", "a2"] },
  "opens": {
    "0_A": { "a1": [], "a2": [] },
    "1_A": { "a1": ["x", "y", "z"], "a2": ["x", "y", "z"] },
    "B": { "a1": ["x"], "a2": ["x"] },
    "C": { "a1": ["x", "y"], "a2": ["y", "z"] },
    "D": { "a1": ["x"] }
  }
}"#;

    #[test]
    fn strict_parse_builds_the_space() {
        let doc = SpaceDocument::from_json(UNIFORM_PAIR).unwrap();
        let sp = doc.to_space().unwrap();
        assert_eq!(sp.opens().len(), 4);
        assert_eq!(sp.name(), Some("pair"));
    }

    #[test]
    fn strict_parse_names_the_witness_pair() {
        let doc = SpaceDocument::from_json(UNDER_CLOSED).unwrap();
        match doc.to_space() {
            Err(Error::InvalidFamily(msg)) => {
                assert!(msg.contains("`B`") && msg.contains("`C`"), "got: {msg}");
            }
            other => panic!("expected invalid family, got {other:?}"),
        }
    }

    #[test]
    fn generated_parse_reports_the_closure() {
        let doc = SpaceDocument::from_json(UNDER_CLOSED).unwrap();
        let (sp, report) = doc.to_space_generated().unwrap();
        assert!(!report.printed_valid);
        assert_eq!(report.added.len(), 1);
        assert_eq!(sp.opens().len(), 6);
        // a missing row means an empty row
        let u = Arc::clone(sp.universe());
        let d = SoftSet::from_label_rows(&u, &[&["x"], &[]]).unwrap();
        assert!(sp.is_open(&d).unwrap());
    }

    #[test]
    fn serialization_is_canonical_and_stable() {
        let doc = SpaceDocument::from_json(UNIFORM_PAIR).unwrap();
        let sp = doc.to_space().unwrap();
        let canonical = SpaceDocument::from_space(&sp);
        let names: Vec<&String> = canonical.opens.keys().collect();
        assert_eq!(names[0], "0_A");
        assert!(names.contains(&&"1_A".to_string()));
        // parse∘serialize is the identity on spaces
        let text = canonical.to_json();
        let reparsed = SpaceDocument::from_json(&text).unwrap().to_space().unwrap();
        assert_eq!(reparsed, sp);
        // serialize∘parse is the identity on canonical documents
        assert_eq!(SpaceDocument::from_space(&reparsed).to_json(), text);
    }

    #[test]
    fn format_version_is_checked() {
        let bad = UNIFORM_PAIR.replace("\"format\": 1", "\"format\": 2");
        assert!(SpaceDocument::from_json(&bad).is_err());
    }

    #[test]
    fn unresolvable_labels_error() {
        let bad = UNIFORM_PAIR.replacen("\"a1\": [\"z\"]", "\"a1\": [\"w\"]", 1);
        assert_ne!(bad, UNIFORM_PAIR);
        let doc = SpaceDocument::from_json(&bad).unwrap();
        assert_eq!(doc.to_space().unwrap_err(), Error::UnknownPoint("w".into()));
    }

    #[test]
    fn mapping_documents_resolve() {
        let src = Universe::new(["x", "y", "z"], ["a1", "a2"]).unwrap();
        let tgt = Universe::new(["p", "q"], ["b"]).unwrap();
        let text = r#"{
  "format": 1,
  "source": "pair",
  "point_map": { "x": "p", "y": "p", "z": "q" },
  "param_map": { "a1": "b", "a2": "b" }
}"#;
        let doc = MappingDocument::from_json(text).unwrap();
        let m = doc.to_mapping(&src, &tgt).unwrap();
        assert!(m.is_surjective());
        assert!(!m.is_injective());
        let round = MappingDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(round, doc);
    }
}
