//! Soft mappings: a point map and a parameter map between two universes,
//! with the image/preimage semantics acting on soft sets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::soft_set::{bits, SoftSet, Universe};

/// A pair of total functions `(f, e)`: `f` on points, `e` on parameters.
#[derive(Clone, Debug)]
pub struct SoftMapping {
    source: Arc<Universe>,
    target: Arc<Universe>,
    point_map: Vec<usize>,
    param_map: Vec<usize>,
}

impl SoftMapping {
    pub fn new(
        source: &Arc<Universe>,
        target: &Arc<Universe>,
        point_map: Vec<usize>,
        param_map: Vec<usize>,
    ) -> Result<Self> {
        if point_map.len() != source.point_count() {
            return Err(Error::MissingImage(format!(
                "point map covers {} of {} points",
                point_map.len(),
                source.point_count()
            )));
        }
        if param_map.len() != source.param_count() {
            return Err(Error::MissingImage(format!(
                "parameter map covers {} of {} parameters",
                param_map.len(),
                source.param_count()
            )));
        }
        if point_map.iter().any(|&i| i >= target.point_count())
            || param_map.iter().any(|&i| i >= target.param_count())
        {
            return Err(Error::UniverseMismatch);
        }
        Ok(SoftMapping {
            source: Arc::clone(source),
            target: Arc::clone(target),
            point_map,
            param_map,
        })
    }

    /// Build from `(source label, target label)` pairs; every source point
    /// and parameter must be covered exactly once.
    pub fn from_labels(
        source: &Arc<Universe>,
        target: &Arc<Universe>,
        point_pairs: &[(&str, &str)],
        param_pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let point_map = total_map(
            source.point_labels(),
            point_pairs,
            |l| target.point_index(l),
        )?;
        let param_map = total_map(
            source.param_labels(),
            param_pairs,
            |l| target.param_index(l),
        )?;
        SoftMapping::new(source, target, point_map, param_map)
    }

    pub fn identity(universe: &Arc<Universe>) -> Self {
        SoftMapping {
            source: Arc::clone(universe),
            target: Arc::clone(universe),
            point_map: (0..universe.point_count()).collect(),
            param_map: (0..universe.param_count()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<Universe> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Universe> {
        &self.target
    }

    pub fn point_image(&self, id: usize) -> usize {
        self.point_map[id]
    }

    pub fn param_image(&self, id: usize) -> usize {
        self.param_map[id]
    }

    /// Injective when both component maps are.
    pub fn is_injective(&self) -> bool {
        injective(&self.point_map) && injective(&self.param_map)
    }

    /// Surjective when both component maps are.
    pub fn is_surjective(&self) -> bool {
        surjective(&self.point_map, self.target.point_count())
            && surjective(&self.param_map, self.target.param_count())
    }

    /// Inverse mapping; only defined for bijections.
    pub fn inverse(&self) -> Option<SoftMapping> {
        if !(self.is_injective() && self.is_surjective()) {
            return None;
        }
        let mut point_map = vec![0; self.target.point_count()];
        for (i, &j) in self.point_map.iter().enumerate() {
            point_map[j] = i;
        }
        let mut param_map = vec![0; self.target.param_count()];
        for (i, &j) in self.param_map.iter().enumerate() {
            param_map[j] = i;
        }
        Some(SoftMapping {
            source: Arc::clone(&self.target),
            target: Arc::clone(&self.source),
            point_map,
            param_map,
        })
    }

    /// Image of a soft set over the source. Row `b` collects `f(F(a))` over
    /// the fiber `e^{-1}(b)` and stays empty when the fiber is.
    pub fn image(&self, s: &SoftSet) -> Result<SoftSet> {
        if !s.universe().same_as(&self.source) {
            return Err(Error::UniverseMismatch);
        }
        let mut rows = vec![0u64; self.target.param_count()];
        for (a, &b) in self.param_map.iter().enumerate() {
            let mut out = 0u64;
            for x in bits(s.row(a)) {
                out |= 1 << self.point_map[x];
            }
            rows[b] |= out;
        }
        Ok(SoftSet::from_rows(Arc::clone(&self.target), rows))
    }

    /// Preimage of a soft set over the target: row `a` is `f^{-1}(G(e(a)))`.
    pub fn preimage(&self, t: &SoftSet) -> Result<SoftSet> {
        if !t.universe().same_as(&self.target) {
            return Err(Error::UniverseMismatch);
        }
        let rows = self
            .param_map
            .iter()
            .map(|&b| {
                let target_row = t.row(b);
                let mut out = 0u64;
                for (x, &fx) in self.point_map.iter().enumerate() {
                    out |= (target_row >> fx & 1) << x;
                }
                out
            })
            .collect();
        Ok(SoftSet::from_rows(Arc::clone(&self.source), rows))
    }
}

/// Componentwise composition `outer ∘ inner`.
pub fn compose(outer: &SoftMapping, inner: &SoftMapping) -> Result<SoftMapping> {
    if !inner.target.same_as(&outer.source) {
        return Err(Error::NotComposable);
    }
    Ok(SoftMapping {
        source: Arc::clone(&inner.source),
        target: Arc::clone(&outer.target),
        point_map: inner.point_map.iter().map(|&i| outer.point_map[i]).collect(),
        param_map: inner.param_map.iter().map(|&i| outer.param_map[i]).collect(),
    })
}

fn total_map(
    labels: &[String],
    pairs: &[(&str, &str)],
    resolve: impl Fn(&str) -> Result<usize>,
) -> Result<Vec<usize>> {
    let mut out = vec![None; labels.len()];
    for (from, to) in pairs {
        let i = labels
            .iter()
            .position(|l| l == from)
            .ok_or_else(|| Error::UnknownPoint((*from).to_string()))?;
        out[i] = Some(resolve(to)?);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::MissingImage(labels[i].clone())))
        .collect()
}

fn injective(map: &[usize]) -> bool {
    let mut seen = 0u64;
    for &i in map {
        if seen >> i & 1 == 1 {
            return false;
        }
        seen |= 1 << i;
    }
    true
}

fn surjective(map: &[usize], target_len: usize) -> bool {
    let mut seen = 0u64;
    for &i in map {
        seen |= 1 << i;
    }
    seen.count_ones() as usize == target_len
}

impl PartialEq for SoftMapping {
    fn eq(&self, other: &Self) -> bool {
        self.source.same_as(&other.source)
            && self.target.same_as(&other.target)
            && self.point_map == other.point_map
            && self.param_map == other.param_map
    }
}

impl Eq for SoftMapping {}
