//! Soft sets over a finite universe and their rowwise algebra.
//!
//! A soft set assigns to every parameter a subset of the ground set. All
//! algebra (union, intersection, complement, subset) is performed per
//! parameter row. Membership of a point is the total notion: `x` belongs to
//! a soft set when it lies in *every* row. The strictly stronger
//! complement-membership (`x` lies in no row) is exposed separately; the two
//! must not be conflated, the gap between them is what the `k`-style
//! separation axioms measure.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ground set and parameter set, with a fixed label order that defines the
/// canonical serialization order everywhere else.
#[derive(Debug)]
pub struct Universe {
    points: Vec<String>,
    params: Vec<String>,
}

impl Universe {
    /// At most 64 points so a parameter row fits in one word.
    pub const MAX_POINTS: usize = 64;

    pub fn new<P, Q>(points: impl IntoIterator<Item = P>, params: impl IntoIterator<Item = Q>) -> Result<Arc<Self>>
    where
        P: Into<String>,
        Q: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        if points.is_empty() || params.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if points.len() > Self::MAX_POINTS {
            return Err(Error::TooManyPoints(points.len()));
        }
        for list in [&points, &params] {
            for (i, l) in list.iter().enumerate() {
                if list[..i].contains(l) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        Ok(Arc::new(Universe { points, params }))
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn param_count(&self) -> usize {
        self.params.len()
    }

    /// Number of cells in the membership table, `|X| * |A|`.
    pub fn cells(&self) -> usize {
        self.points.len() * self.params.len()
    }

    pub fn point_labels(&self) -> &[String] {
        &self.points
    }

    pub fn param_labels(&self) -> &[String] {
        &self.params
    }

    pub fn point_label(&self, id: usize) -> &str {
        &self.points[id]
    }

    pub fn param_label(&self, id: usize) -> &str {
        &self.params[id]
    }

    pub fn point_index(&self, label: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn param_index(&self, label: &str) -> Result<usize> {
        self.params
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownParameter(label.to_string()))
    }

    /// Bitmask with one bit per point.
    pub fn full_row(&self) -> u64 {
        full_mask(self.points.len())
    }

    /// Content equality; `Arc` identity is only a fast path.
    pub fn same_as(&self, other: &Universe) -> bool {
        std::ptr::eq(self, other) || (self.points == other.points && self.params == other.params)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the set bits of a row mask.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
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

/// A parameter-indexed family of subsets of the ground set, one bitmask row
/// per parameter in universe order.
#[derive(Clone, Debug)]
pub struct SoftSet {
    universe: Arc<Universe>,
    rows: Vec<u64>,
}

impl SoftSet {
    /// The null soft set: every row empty.
    pub fn null(universe: &Arc<Universe>) -> Self {
        SoftSet {
            universe: Arc::clone(universe),
            rows: vec![0; universe.param_count()],
        }
    }

    /// The absolute soft set: every row is the whole ground set.
    pub fn absolute(universe: &Arc<Universe>) -> Self {
        SoftSet {
            universe: Arc::clone(universe),
            rows: vec![universe.full_row(); universe.param_count()],
        }
    }

    /// The soft set whose every row is the singleton `{x}`.
    pub fn point_soft_set(universe: &Arc<Universe>, x: &str) -> Result<Self> {
        let i = universe.point_index(x)?;
        Ok(SoftSet {
            universe: Arc::clone(universe),
            rows: vec![1u64 << i; universe.param_count()],
        })
    }

    pub(crate) fn from_rows(universe: Arc<Universe>, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), universe.param_count());
        debug_assert!(rows.iter().all(|r| r & !universe.full_row() == 0));
        SoftSet { universe, rows }
    }

    /// Build from point labels, one slice per parameter in universe order.
    pub fn from_label_rows(universe: &Arc<Universe>, rows: &[&[&str]]) -> Result<Self> {
        if rows.len() != universe.param_count() {
            return Err(Error::UnknownParameter(format!(
                "expected {} rows, got {}",
                universe.param_count(),
                rows.len()
            )));
        }
        let mut out = vec![0u64; rows.len()];
        for (a, row) in rows.iter().enumerate() {
            for label in *row {
                out[a] |= 1 << universe.point_index(label)?;
            }
        }
        Ok(SoftSet {
            universe: Arc::clone(universe),
            rows: out,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, param: usize) -> u64 {
        self.rows[param]
    }

    pub fn is_null(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn is_absolute(&self) -> bool {
        let full = self.universe.full_row();
        self.rows.iter().all(|&r| r == full)
    }

    fn same_universe(&self, other: &SoftSet) -> bool {
        self.universe.same_as(&other.universe)
    }

    fn check_universe(&self, other: &SoftSet) -> Result<()> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn complement(&self) -> Self {
        let full = self.universe.full_row();
        SoftSet {
            universe: Arc::clone(&self.universe),
            rows: self.rows.iter().map(|r| full & !r).collect(),
        }
    }

    pub fn union(&self, other: &SoftSet) -> Result<Self> {
        self.check_universe(other)?;
        Ok(self.zip(other, |a, b| a | b))
    }

    pub fn intersection(&self, other: &SoftSet) -> Result<Self> {
        self.check_universe(other)?;
        Ok(self.zip(other, |a, b| a & b))
    }

    pub fn difference(&self, other: &SoftSet) -> Result<Self> {
        self.check_universe(other)?;
        Ok(self.zip(other, |a, b| a & !b))
    }

    fn zip(&self, other: &SoftSet, f: impl Fn(u64, u64) -> u64) -> SoftSet {
        SoftSet {
            universe: Arc::clone(&self.universe),
            rows: self.rows.iter().zip(&other.rows).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn is_subset(&self, other: &SoftSet) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self.rows.iter().zip(&other.rows).all(|(&a, &b)| a & !b == 0))
    }

    pub fn is_disjoint(&self, other: &SoftSet) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self.rows.iter().zip(&other.rows).all(|(&a, &b)| a & b == 0))
    }

    /// Total membership: `x` lies in every row.
    pub fn member(&self, x: &str) -> Result<bool> {
        Ok(self.member_id(self.universe.point_index(x)?))
    }

    pub fn member_id(&self, x: usize) -> bool {
        self.rows.iter().all(|r| r >> x & 1 == 1)
    }

    /// Per-parameter membership: `x` lies in the row of `a`.
    pub fn member_at(&self, x: &str, a: &str) -> Result<bool> {
        let x = self.universe.point_index(x)?;
        let a = self.universe.param_index(a)?;
        Ok(self.rows[a] >> x & 1 == 1)
    }

    pub fn member_at_ids(&self, x: usize, a: usize) -> bool {
        self.rows[a] >> x & 1 == 1
    }

    /// Points belonging to every row.
    pub fn member_mask(&self) -> u64 {
        self.rows.iter().fold(self.universe.full_row(), |acc, r| acc & r)
    }

    /// Points belonging to no row, i.e. total members of the complement.
    pub fn comember_mask(&self) -> u64 {
        self.universe.full_row() & !self.rows.iter().fold(0, |acc, r| acc | r)
    }

    /// Sub soft set over the nonempty point subset `y`, re-anchored to a
    /// fresh universe with points `y` (parent order) and the same parameters.
    pub fn restrict(&self, y: &[&str]) -> Result<SoftSet> {
        let ids = resolve_subset(&self.universe, y)?;
        let sub = sub_universe(&self.universe, &ids)?;
        Ok(self.restrict_with(&sub, &ids))
    }

    /// Restriction onto a prebuilt sub-universe; `parent_ids[i]` is the
    /// parent index of the sub-universe's point `i`.
    pub(crate) fn restrict_with(&self, sub: &Arc<Universe>, parent_ids: &[usize]) -> SoftSet {
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut out = 0u64;
                for (new, &old) in parent_ids.iter().enumerate() {
                    out |= (r >> old & 1) << new;
                }
                out
            })
            .collect();
        SoftSet {
            universe: Arc::clone(sub),
            rows,
        }
    }

    /// Every soft set over the universe, in canonical (flattened bitset)
    /// order. Only sensible for small universes; the caller is responsible
    /// for keeping `cells()` tiny.
    pub fn enumerate_all(universe: &Arc<Universe>) -> impl Iterator<Item = SoftSet> {
        let cells = universe.cells();
        assert!(cells <= 24, "enumerate_all over {cells} cells is not going to finish");
        let u = Arc::clone(universe);
        let width = u.point_count();
        let full: u64 = 1 << cells;
        (0..full).map(move |flat| {
            let rows = (0..u.param_count())
                .map(|a| flat >> (a * width) & full_mask(width))
                .collect();
            SoftSet::from_rows(Arc::clone(&u), rows)
        })
    }
}

pub(crate) fn resolve_subset(universe: &Arc<Universe>, y: &[&str]) -> Result<Vec<usize>> {
    if y.is_empty() {
        return Err(Error::EmptyPointSubset);
    }
    let mut ids: Vec<usize> = y
        .iter()
        .map(|l| universe.point_index(l))
        .collect::<Result<_>>()?;
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

pub(crate) fn sub_universe(universe: &Arc<Universe>, parent_ids: &[usize]) -> Result<Arc<Universe>> {
    Universe::new(
        parent_ids.iter().map(|&i| universe.point_label(i).to_string()),
        universe.param_labels().iter().cloned(),
    )
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_universe(other) && self.rows == other.rows
    }
}

impl Eq for SoftSet {}

impl std::hash::Hash for SoftSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.universe.point_count().hash(state);
        self.rows.hash(state);
    }
}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SoftSet {
    /// Canonical order: by flattened bitset value, i.e. rows compared from
    /// the last parameter down (row 0 holds the least significant bits).
    fn cmp(&self, other: &Self) -> Ordering {
        (self.universe.point_count(), self.universe.param_count())
            .cmp(&(other.universe.point_count(), other.universe.param_count()))
            .then_with(|| self.rows.iter().rev().cmp(other.rows.iter().rev()))
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (a, &row) in self.rows.iter().enumerate() {
            if a > 0 {
                write!(f, ",")?;
            }
            if row == 0 {
                write!(f, "∅")?;
            } else {
                write!(f, "{{")?;
                let mut first = true;
                for x in bits(row) {
                    if !first {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", self.universe.point_label(x))?;
                    first = false;
                }
                write!(f, "}}")?;
            }
        }
        write!(f, "⟩")
    }
}
