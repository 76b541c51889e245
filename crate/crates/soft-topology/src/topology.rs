//! Soft topologies: validation, generation from an arbitrary family,
//! subspaces, closure/interior, neighborhoods, the point-indistinguishability
//! relation `≈`, and locally closed sets.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result, TopologyViolation};
use crate::soft_set::{resolve_subset, sub_universe, SoftSet, Universe};

/// A validated family of soft open sets, deduplicated and kept in canonical
/// (flattened bitset) order so topologies compare by simple equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftTopology {
    universe: Arc<Universe>,
    opens: Vec<SoftSet>,
}

/// Checks the axioms on the family exactly as given (duplicates allowed):
/// null and absolute sets present, closed under pairwise union and
/// intersection. Finite closure suffices on a finite universe. On failure the
/// violation names the witness pair by index into `family`.
pub fn validate_family(universe: &Arc<Universe>, family: &[SoftSet]) -> Result<()> {
    for s in family {
        if !s.universe().same_as(universe) {
            return Err(Error::UniverseMismatch);
        }
    }
    if !family.iter().any(|s| s.is_null()) {
        return Err(Error::InvalidTopology(TopologyViolation::MissingNull));
    }
    if !family.iter().any(|s| s.is_absolute()) {
        return Err(Error::InvalidTopology(TopologyViolation::MissingAbsolute));
    }
    let present: std::collections::HashSet<&[u64]> = family.iter().map(|s| s.rows()).collect();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let union = family[i].union(&family[j])?;
            if !present.contains(union.rows()) {
                return Err(Error::InvalidTopology(TopologyViolation::UnionEscapes(i, j)));
            }
            let inter = family[i].intersection(&family[j])?;
            if !present.contains(inter.rows()) {
                return Err(Error::InvalidTopology(TopologyViolation::IntersectionEscapes(i, j)));
            }
        }
    }
    Ok(())
}

impl SoftTopology {
    /// Accepts a family that already satisfies the axioms.
    pub fn validated(universe: &Arc<Universe>, family: Vec<SoftSet>) -> Result<Self> {
        validate_family(universe, &family)?;
        Ok(Self::from_opens_unchecked(universe, family))
    }

    /// Smallest soft topology containing the family: adds the null and
    /// absolute sets, then closes under pairwise union and intersection to a
    /// fixed point.
    pub fn generate(universe: &Arc<Universe>, family: Vec<SoftSet>) -> Result<Self> {
        for s in &family {
            if !s.universe().same_as(universe) {
                return Err(Error::UniverseMismatch);
            }
        }
        let mut opens: Vec<SoftSet> = Vec::new();
        let mut seen: HashMap<Vec<u64>, ()> = HashMap::new();
        let push = |opens: &mut Vec<SoftSet>, seen: &mut HashMap<Vec<u64>, ()>, s: SoftSet| {
            if seen.insert(s.rows().to_vec(), ()).is_none() {
                opens.push(s);
            }
        };
        push(&mut opens, &mut seen, SoftSet::null(universe));
        push(&mut opens, &mut seen, SoftSet::absolute(universe));
        for s in family {
            push(&mut opens, &mut seen, s);
        }
        // worklist closure: combine every new member with everything present
        let mut next = 0;
        while next < opens.len() {
            let s = opens[next].clone();
            for i in 0..next + 1 {
                let u = s.union(&opens[i])?;
                push(&mut opens, &mut seen, u);
                let t = s.intersection(&opens[i])?;
                push(&mut opens, &mut seen, t);
            }
            next += 1;
        }
        Ok(Self::from_opens_unchecked(universe, opens))
    }

    /// For families that are topologies by construction (subspaces,
    /// quotients, enumerated up-set families).
    pub(crate) fn from_opens_unchecked(universe: &Arc<Universe>, mut opens: Vec<SoftSet>) -> Self {
        opens.sort();
        opens.dedup();
        debug_assert!(validate_family(universe, &opens).is_ok());
        SoftTopology {
            universe: Arc::clone(universe),
            opens,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn opens(&self) -> &[SoftSet] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn contains(&self, s: &SoftSet) -> bool {
        s.universe().same_as(&self.universe) && self.opens.binary_search(s).is_ok()
    }
}

/// A universe together with a soft topology on it.
#[derive(Clone, Debug)]
pub struct SoftSpace {
    topology: SoftTopology,
    name: Option<String>,
}

impl SoftSpace {
    pub fn new(topology: SoftTopology) -> Self {
        SoftSpace { topology, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| {
            format!(
                "{}x{} space with {} opens",
                self.universe().point_count(),
                self.universe().param_count(),
                self.topology.len()
            )
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.topology.universe()
    }

    pub fn topology(&self) -> &SoftTopology {
        &self.topology
    }

    pub fn opens(&self) -> &[SoftSet] {
        self.topology.opens()
    }

    /// Complements of the opens, in canonical order.
    pub fn closed_sets(&self) -> Vec<SoftSet> {
        let mut out: Vec<SoftSet> = self.opens().iter().map(SoftSet::complement).collect();
        out.sort();
        out
    }

    pub fn is_open(&self, s: &SoftSet) -> Result<bool> {
        self.check_universe(s)?;
        Ok(self.topology.contains(s))
    }

    pub fn is_closed(&self, s: &SoftSet) -> Result<bool> {
        self.check_universe(s)?;
        Ok(self.topology.contains(&s.complement()))
    }

    pub fn is_clopen(&self, s: &SoftSet) -> Result<bool> {
        Ok(self.is_open(s)? && self.is_closed(s)?)
    }

    /// The soft clopen members of the topology.
    pub fn clopen_sets(&self) -> Vec<SoftSet> {
        self.opens()
            .iter()
            .filter(|s| self.topology.contains(&s.complement()))
            .cloned()
            .collect()
    }

    /// Open neighborhoods of `x`: the opens containing `x` totally. This is
    /// the filter base of the full soft neighborhood family and is what every
    /// axiom decision quantifies over.
    pub fn neighborhoods(&self, x: &str) -> Result<Vec<SoftSet>> {
        let id = self.universe().point_index(x)?;
        Ok(self
            .opens()
            .iter()
            .filter(|s| s.member_id(id))
            .cloned()
            .collect())
    }

    /// Intersection of all closed supersets of `s`.
    pub fn closure(&self, s: &SoftSet) -> Result<SoftSet> {
        self.check_universe(s)?;
        let mut acc = SoftSet::absolute(self.universe());
        for c in self.closed_sets() {
            if s.is_subset(&c)? {
                acc = acc.intersection(&c)?;
            }
        }
        Ok(acc)
    }

    /// Union of all open subsets of `s`.
    pub fn interior(&self, s: &SoftSet) -> Result<SoftSet> {
        self.check_universe(s)?;
        let mut acc = SoftSet::null(self.universe());
        for o in self.opens() {
            if o.is_subset(s)? {
                acc = acc.union(o)?;
            }
        }
        Ok(acc)
    }

    /// The relation `x ≈ y`: the two points lie (totally) in exactly the
    /// same soft open sets. An equivalence relation on points.
    pub fn approx(&self, x: &str, y: &str) -> Result<bool> {
        let x = self.universe().point_index(x)?;
        let y = self.universe().point_index(y)?;
        Ok(self.approx_ids(x, y))
    }

    pub fn approx_ids(&self, x: usize, y: usize) -> bool {
        self.opens()
            .iter()
            .all(|s| s.member_id(x) == s.member_id(y))
    }

    /// Partition of the points into `≈`-classes. Classes are ordered by
    /// least member and each class lists its members in point order, so the
    /// first member is the canonical representative.
    pub fn point_classes(&self) -> Vec<Vec<usize>> {
        let n = self.universe().point_count();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            match classes.iter_mut().find(|c| self.approx_ids(c[0], x)) {
                Some(c) => c.push(x),
                None => classes.push(vec![x]),
            }
        }
        classes
    }

    /// Soft relative topology on the nonempty point subset `y`. The result
    /// lives over a fresh sub-universe with points `y` in parent order.
    pub fn subspace(&self, y: &[&str]) -> Result<SoftSpace> {
        let ids = resolve_subset(self.universe(), y)?;
        let sub = sub_universe(self.universe(), &ids)?;
        let opens = self
            .opens()
            .iter()
            .map(|s| s.restrict_with(&sub, &ids))
            .collect();
        Ok(SoftSpace::new(SoftTopology::from_opens_unchecked(&sub, opens)))
    }

    /// Whether `s` is the intersection of a soft open and a soft closed set;
    /// decided by scanning all open-closed pairs.
    pub fn is_locally_closed(&self, s: &SoftSet) -> Result<bool> {
        self.check_universe(s)?;
        for open in self.opens() {
            for closed in self.closed_sets() {
                if &open.intersection(&closed)? == s {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// All distinct locally closed sets, in canonical order.
    pub fn locally_closed_sets(&self) -> Vec<SoftSet> {
        let closed = self.closed_sets();
        let mut out: Vec<SoftSet> = Vec::new();
        for open in self.opens() {
            for c in &closed {
                out.push(open.intersection(c).expect("same universe"));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn check_universe(&self, s: &SoftSet) -> Result<()> {
        if s.universe().same_as(self.universe()) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

/// Name-ignoring equality: same universe and same open family.
impl PartialEq for SoftSpace {
    fn eq(&self, other: &Self) -> bool {
        self.topology == other.topology
    }
}

impl Eq for SoftSpace {}
