//! Exhaustive and sampled enumeration of soft topologies on tiny universes,
//! implication mining over the enumerated corpus, and verification of the
//! bundled example fixtures.
//!
//! Exhaustive enumeration works through the flattening correspondence: soft
//! sets over `(X, A)` are exactly the subsets of a `|X|·|A|`-cell set, and
//! soft topologies are exactly the point-set topologies there. Finite
//! topologies in turn are the up-set families of preorders, so the
//! enumerator walks every preorder on the flattened cells once, by a
//! one-element extension recursion, and reads each topology off as the
//! family of up-closed subsets.

use std::path::Path;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::document::SpaceDocument;
use crate::error::{Error, Result};
use crate::predicate::SpacePredicate;
use crate::reflection::{check_t0_alpha, compute_reflection, Alpha};
use crate::separation::{classify, Axiom, AxiomProfile};
use crate::soft_set::{full_mask, SoftSet, Universe};
use crate::topology::{SoftSpace, SoftTopology};

/// Environment variable raising the exhaustive cell bound (hard cap 7).
pub const EXHAUSTIVE_BOUND_ENV: &str = "SOFT_TOP_EXHAUSTIVE_BOUND";
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 4;
/// Seven cells (9,535,241 topologies) is the last size that enumerates in
/// reasonable memory; six (209,527) already takes a multi-minute mining
/// budget for the heavier predicates.
const HARD_EXHAUSTIVE_CAP: usize = 7;

pub fn exhaustive_cell_bound() -> usize {
    let configured = std::env::var(EXHAUSTIVE_BOUND_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(DEFAULT_EXHAUSTIVE_BOUND);
    configured.min(HARD_EXHAUSTIVE_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every soft topology on the shape, exactly once.
    Exhaustive,
    /// Closures of seeded random families, deterministic per seed.
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub points: usize,
    pub params: usize,
    pub mode: EnumerationMode,
}

impl EnumerationSpec {
    pub fn exhaustive(points: usize, params: usize) -> Self {
        EnumerationSpec {
            points,
            params,
            mode: EnumerationMode::Exhaustive,
        }
    }

    pub fn sampled(points: usize, params: usize, count: usize, seed: u64) -> Self {
        EnumerationSpec {
            points,
            params,
            mode: EnumerationMode::Sampled { count, seed },
        }
    }

    pub fn cells(&self) -> usize {
        self.points * self.params
    }

    pub fn validate(&self) -> Result<()> {
        if self.points == 0 || self.params == 0 {
            return Err(Error::EmptyUniverse);
        }
        if self.points > Universe::MAX_POINTS {
            return Err(Error::TooManyPoints(self.points));
        }
        if let EnumerationMode::Exhaustive = self.mode {
            let bound = exhaustive_cell_bound();
            if self.cells() > bound {
                return Err(Error::ExhaustiveBoundExceeded {
                    cells: self.cells(),
                    bound,
                });
            }
        }
        Ok(())
    }
}

/// One preorder on up to eight elements: `up[i]` is the bitmask of elements
/// above `i`, including `i` itself.
type Preorder = [u8; 8];

fn bits_u8(mut mask: u8) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// All preorders on `n` elements, each exactly once, by extending a preorder
/// on the first `k` elements with element `k`. The new element picks the set
/// `d` of elements below it and the set `u` of elements above it; `d` must
/// be closed under predecessors, `u` under successors, and everything below
/// must relate to everything above.
fn enumerate_preorders(n: usize) -> Vec<Preorder> {
    assert!((1..=8).contains(&n));
    let mut out = Vec::new();
    let mut up: Preorder = [0; 8];
    up[0] = 1;
    extend_preorder(&mut out, &mut up, 1, n);
    out
}

fn extend_preorder(out: &mut Vec<Preorder>, up: &mut Preorder, k: usize, n: usize) {
    if k == n {
        out.push(*up);
        return;
    }
    let mut pred: Preorder = [0; 8];
    for (i, &row) in up.iter().enumerate().take(k) {
        for j in bits_u8(row) {
            pred[j] |= 1 << i;
        }
    }
    let full = (1u16 << k) - 1;
    for d in 0..=full {
        let d = d as u8;
        if bits_u8(d).any(|i| pred[i] & !d != 0) {
            continue;
        }
        for u in 0..=full {
            let u = u as u8;
            if bits_u8(u).any(|j| up[j] & !u != 0) {
                continue;
            }
            if bits_u8(d).any(|i| u & !up[i] != 0) {
                continue;
            }
            for i in bits_u8(d) {
                up[i] |= 1 << k;
            }
            up[k] = u | (1 << k);
            extend_preorder(out, up, k + 1, n);
            for i in bits_u8(d) {
                up[i] &= !(1 << k);
            }
            up[k] = 0;
        }
    }
}

/// Up-closed subsets of the preorder, as flattened cell masks.
fn up_sets(up: &Preorder, n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let ok = (0..n).all(|i| mask >> i & 1 == 0 || u64::from(up[i]) & !mask == 0);
        if ok {
            out.push(mask);
        }
    }
    out
}

fn enumeration_universe(spec: &EnumerationSpec) -> Result<Arc<Universe>> {
    Universe::new(
        (0..spec.points).map(|i| format!("x{i}")),
        (0..spec.params).map(|i| format!("a{i}")),
    )
}

fn unflatten(universe: &Arc<Universe>, flat: u64) -> SoftSet {
    let width = universe.point_count();
    let rows = (0..universe.param_count())
        .map(|a| flat >> (a * width) & full_mask(width))
        .collect();
    SoftSet::from_rows(Arc::clone(universe), rows)
}

enum SpaceSource {
    Exhaustive {
        universe: Arc<Universe>,
        preorders: Vec<Preorder>,
        label: String,
    },
    Sampled {
        universe: Arc<Universe>,
        count: usize,
        seed: u64,
        label: String,
    },
}

impl SpaceSource {
    fn new(spec: &EnumerationSpec) -> Result<SpaceSource> {
        spec.validate()?;
        let universe = enumeration_universe(spec)?;
        Ok(match spec.mode {
            EnumerationMode::Exhaustive => SpaceSource::Exhaustive {
                universe,
                preorders: enumerate_preorders(spec.cells()),
                label: format!("{}x{}", spec.points, spec.params),
            },
            EnumerationMode::Sampled { count, seed } => SpaceSource::Sampled {
                universe,
                count,
                seed,
                label: format!("{}x{}s{}", spec.points, spec.params, seed),
            },
        })
    }

    fn len(&self) -> usize {
        match self {
            SpaceSource::Exhaustive { preorders, .. } => preorders.len(),
            SpaceSource::Sampled { count, .. } => *count,
        }
    }

    fn build(&self, index: usize) -> SoftSpace {
        match self {
            SpaceSource::Exhaustive {
                universe,
                preorders,
                label,
            } => {
                let cells = universe.cells();
                let opens = up_sets(&preorders[index], cells)
                    .into_iter()
                    .map(|flat| unflatten(universe, flat))
                    .collect();
                SoftSpace::new(SoftTopology::from_opens_unchecked(universe, opens))
                    .with_name(format!("{label}#{index}"))
            }
            SpaceSource::Sampled {
                universe,
                seed,
                label,
                ..
            } => {
                let mut rng =
                    ChaCha8Rng::seed_from_u64(seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
                let cells = universe.cells();
                let k = rng.gen_range(1..=2 * cells);
                let full = universe.full_row();
                let family: Vec<SoftSet> = (0..k)
                    .map(|_| {
                        let rows = (0..universe.param_count())
                            .map(|_| rng.gen::<u64>() & full)
                            .collect();
                        SoftSet::from_rows(Arc::clone(universe), rows)
                    })
                    .collect();
                let topology = SoftTopology::generate(universe, family).expect("same universe");
                SoftSpace::new(topology).with_name(format!("{label}#{index}"))
            }
        }
    }
}

/// Stream every space of the spec in a fixed, reproducible order.
pub fn enumerate_spaces(spec: &EnumerationSpec) -> Result<impl Iterator<Item = SoftSpace>> {
    let source = SpaceSource::new(spec)?;
    Ok((0..source.len()).map(move |i| source.build(i)))
}

#[derive(Clone, Debug)]
pub enum ImplicationStatus {
    Holds,
    /// First space, in enumeration order, where the antecedent holds and the
    /// consequent fails.
    Refuted(Box<SoftSpace>),
}

#[derive(Clone, Debug)]
pub struct ImplicationReport {
    pub antecedent: String,
    pub consequent: String,
    pub status: ImplicationStatus,
    /// Spaces on which both predicates applied and were evaluated, up to and
    /// including the witness.
    pub spaces_checked: usize,
    /// Spaces skipped because a predicate did not apply (reflected axioms on
    /// non-T0U spaces).
    pub spaces_skipped: usize,
}

impl ImplicationReport {
    pub fn holds(&self) -> bool {
        matches!(self.status, ImplicationStatus::Holds)
    }

    pub fn witness(&self) -> Option<&SoftSpace> {
        match &self.status {
            ImplicationStatus::Holds => None,
            ImplicationStatus::Refuted(sp) => Some(sp),
        }
    }
}

#[derive(Clone, Copy)]
enum Outcome {
    Skipped,
    Satisfied,
    Refuting,
}

/// Check `antecedent ⟹ consequent` on every space of the spec. Spaces are
/// scanned in enumeration order with parallel chunks; the reported witness
/// is always the first refutation in that order, independent of threading.
pub fn mine_implication(
    spec: &EnumerationSpec,
    antecedent: &dyn SpacePredicate,
    consequent: &dyn SpacePredicate,
) -> Result<ImplicationReport> {
    let source = SpaceSource::new(spec)?;
    let len = source.len();
    const CHUNK: usize = 1024;
    let mut checked = 0;
    let mut skipped = 0;
    let mut witness = None;
    'scan: for start in (0..len).step_by(CHUNK) {
        let end = (start + CHUNK).min(len);
        let outcomes: Vec<Outcome> = (start..end)
            .into_par_iter()
            .map(|i| {
                let sp = source.build(i);
                if !antecedent.applies_to(&sp) || !consequent.applies_to(&sp) {
                    Outcome::Skipped
                } else if antecedent.holds(&sp) && !consequent.holds(&sp) {
                    Outcome::Refuting
                } else {
                    Outcome::Satisfied
                }
            })
            .collect();
        for (offset, outcome) in outcomes.into_iter().enumerate() {
            match outcome {
                Outcome::Skipped => skipped += 1,
                Outcome::Satisfied => checked += 1,
                Outcome::Refuting => {
                    checked += 1;
                    witness = Some(source.build(start + offset));
                    break 'scan;
                }
            }
        }
    }
    Ok(ImplicationReport {
        antecedent: antecedent.name().to_string(),
        consequent: consequent.name().to_string(),
        status: match witness {
            Some(sp) => ImplicationStatus::Refuted(Box::new(sp)),
            None => ImplicationStatus::Holds,
        },
        spaces_checked: checked,
        spaces_skipped: skipped,
    })
}

/// First space, in enumeration order, satisfying the antecedent but not the
/// consequent.
pub fn find_counterexample(
    spec: &EnumerationSpec,
    antecedent: &dyn SpacePredicate,
    consequent: &dyn SpacePredicate,
) -> Result<Option<SoftSpace>> {
    let report = mine_implication(spec, antecedent, consequent)?;
    Ok(match report.status {
        ImplicationStatus::Holds => None,
        ImplicationStatus::Refuted(sp) => Some(*sp),
    })
}

/// One expectation from a fixture versus the computed truth.
#[derive(Clone, Debug)]
pub struct ExpectationCheck {
    pub name: String,
    pub expected: bool,
    pub actual: bool,
}

impl ExpectationCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub printed_family_valid: bool,
    pub expected_printed_valid: Option<bool>,
    /// First axiom violation of the printed family, with set names.
    pub closure_violation: Option<String>,
    pub sets_added_by_closure: usize,
    pub profile: AxiomProfile,
    pub profile_checks: Vec<ExpectationCheck>,
    pub alpha_checks: Vec<ExpectationCheck>,
    pub reflection_matches: Option<bool>,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub entries: Vec<CorpusEntry>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// Ingest every `*.json` fixture in the directory (sorted by file name),
/// classify it on its generated closure, and compare everything the fixture
/// claims: printed-family validity, the expected profile fragment, the
/// reflected-axiom fragment, and the expected reflection.
pub fn verify_corpus(dir: &Path) -> Result<CorpusReport> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io {
            path: dir.display().to_string(),
            msg: e.to_string(),
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Error::Io {
            path: dir.display().to_string(),
            msg: "no .json fixtures found".to_string(),
        });
    }

    let mut entries = Vec::new();
    for path in files {
        let text = std::fs::read_to_string(&path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        let doc = SpaceDocument::from_json(&text).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        let fallback_name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        entries.push(verify_fixture(&doc, fallback_name)?);
    }
    Ok(CorpusReport { entries })
}

fn verify_fixture(doc: &SpaceDocument, fallback_name: String) -> Result<CorpusEntry> {
    let (space, closure) = doc.to_space_generated()?;
    let name = doc.name().map(str::to_string).unwrap_or(fallback_name);
    let metadata = doc.metadata.clone().unwrap_or_default();

    let profile = classify(&space);
    let mut profile_checks = Vec::new();
    if let Some(expected) = &metadata.expected_profile {
        for (axiom_name, &expected_value) in expected {
            let axiom = Axiom::from_name(axiom_name)
                .ok_or_else(|| Error::UnknownPredicate(axiom_name.clone()))?;
            profile_checks.push(ExpectationCheck {
                name: axiom_name.clone(),
                expected: expected_value,
                actual: profile.get(axiom),
            });
        }
    }

    let mut alpha_checks = Vec::new();
    if let Some(expected) = &metadata.expected_alpha {
        for (alpha_name, &expected_value) in expected {
            let alpha = Alpha::from_name(alpha_name)
                .ok_or_else(|| Error::UnknownPredicate(alpha_name.clone()))?;
            alpha_checks.push(ExpectationCheck {
                name: alpha_name.clone(),
                expected: expected_value,
                actual: check_t0_alpha(&space, alpha)?,
            });
        }
    }

    let reflection_matches = match &metadata.expected_reflection {
        Some(expected) => {
            let r = compute_reflection(&space, false)?;
            Some(expected.matches(&r)?)
        }
        None => None,
    };

    let validity_ok = metadata
        .printed_family_valid
        .is_none_or(|expected| expected == closure.printed_valid);
    let passed = validity_ok
        && profile_checks.iter().all(ExpectationCheck::ok)
        && alpha_checks.iter().all(ExpectationCheck::ok)
        && reflection_matches.unwrap_or(true);

    Ok(CorpusEntry {
        name,
        printed_family_valid: closure.printed_valid,
        expected_printed_valid: metadata.printed_family_valid,
        closure_violation: closure.violation,
        sets_added_by_closure: closure.added.len(),
        profile,
        profile_checks,
        alpha_checks,
        reflection_matches,
        passed,
    })
}
