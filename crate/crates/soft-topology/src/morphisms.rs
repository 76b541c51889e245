//! Properties of soft maps between soft spaces: continuity, open/closed,
//! initiality, quasihomomorphism, homeomorphism, with failure witnesses.

use crate::error::{Error, Result};
use crate::mapping::{compose, SoftMapping};
use crate::soft_set::SoftSet;
use crate::topology::SoftSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapProperty {
    Continuous,
    Open,
    Closed,
    Initial,
    InitialViaClosure,
    Quasihomomorphism,
    Injective,
    Surjective,
    Homeomorphism,
}

impl MapProperty {
    pub const ALL: [MapProperty; 9] = [
        MapProperty::Continuous,
        MapProperty::Open,
        MapProperty::Closed,
        MapProperty::Initial,
        MapProperty::InitialViaClosure,
        MapProperty::Quasihomomorphism,
        MapProperty::Injective,
        MapProperty::Surjective,
        MapProperty::Homeomorphism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapProperty::Continuous => "Continuous",
            MapProperty::Open => "Open",
            MapProperty::Closed => "Closed",
            MapProperty::Initial => "Initial",
            MapProperty::InitialViaClosure => "InitialViaClosure",
            MapProperty::Quasihomomorphism => "Quasihomomorphism",
            MapProperty::Injective => "Injective",
            MapProperty::Surjective => "Surjective",
            MapProperty::Homeomorphism => "Homeomorphism",
        }
    }

    pub fn from_name(name: &str) -> Option<MapProperty> {
        MapProperty::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(name))
    }

    fn index(self) -> usize {
        MapProperty::ALL.iter().position(|&p| p == self).expect("listed")
    }
}

impl std::fmt::Display for MapProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// What broke a property, when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An open of the codomain with non-open preimage.
    PreimageNotOpen(SoftSet),
    /// A domain open (resp. closed) set whose image escapes.
    ImageEscapes(SoftSet),
    /// A domain open set that is no preimage of any codomain open.
    NoOpenOrigin(SoftSet),
    /// A domain closed set failing the closure round trip.
    ClosureRoundTripFails(SoftSet),
    /// A nonnull locally closed set missed by the image of the absolute set.
    UnmetLocallyClosed(SoftSet),
    /// The component maps are not injective/surjective as required.
    NotBijective,
    /// A prerequisite property failed first.
    Prerequisite(MapProperty),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::PreimageNotOpen(s) => write!(f, "preimage of {s} is not open"),
            Witness::ImageEscapes(s) => write!(f, "image of {s} escapes"),
            Witness::NoOpenOrigin(s) => write!(f, "{s} is no preimage of a codomain open"),
            Witness::ClosureRoundTripFails(s) => write!(f, "closure round trip fails on {s}"),
            Witness::UnmetLocallyClosed(s) => write!(f, "locally closed {s} is not met"),
            Witness::NotBijective => write!(f, "component maps are not bijective"),
            Witness::Prerequisite(p) => write!(f, "prerequisite {p} fails"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    fn fail(witness: Witness) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }
}

/// All nine properties of one mapping, with a witness for every failure.
#[derive(Clone, Debug)]
pub struct MapReport {
    pub mapping: String,
    verdicts: Vec<Verdict>,
}

impl MapReport {
    pub fn verdict(&self, p: MapProperty) -> &Verdict {
        &self.verdicts[p.index()]
    }

    pub fn holds(&self, p: MapProperty) -> bool {
        self.verdicts[p.index()].holds
    }

    pub fn iter(&self) -> impl Iterator<Item = (MapProperty, &Verdict)> {
        MapProperty::ALL.into_iter().map(|p| (p, &self.verdicts[p.index()]))
    }
}

pub fn is_continuous(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> bool {
    cod.opens().iter().all(|g| {
        let pre = m.preimage(g).expect("matching universes");
        dom.topology().contains(&pre)
    })
}

fn check_universes(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Result<()> {
    if m.source().same_as(dom.universe()) && m.target().same_as(cod.universe()) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// Decide one property. `Initial`, `InitialViaClosure` and
/// `Quasihomomorphism` presuppose continuity and error out without it.
pub fn check_map(
    m: &SoftMapping,
    dom: &SoftSpace,
    cod: &SoftSpace,
    property: MapProperty,
) -> Result<Verdict> {
    check_universes(m, dom, cod)?;
    match property {
        MapProperty::Continuous => Ok(continuous_verdict(m, dom, cod)),
        MapProperty::Open => Ok(open_verdict(m, dom, cod)),
        MapProperty::Closed => Ok(closed_verdict(m, dom, cod)),
        MapProperty::Initial => {
            if !is_continuous(m, dom, cod) {
                return Err(Error::NotContinuous);
            }
            Ok(initial_verdict(m, dom, cod))
        }
        MapProperty::InitialViaClosure => {
            if !is_continuous(m, dom, cod) {
                return Err(Error::NotContinuous);
            }
            Ok(initial_via_closure_verdict(m, dom, cod))
        }
        MapProperty::Quasihomomorphism => {
            if !is_continuous(m, dom, cod) {
                return Err(Error::NotContinuous);
            }
            Ok(quasihomomorphism_verdict(m, dom, cod))
        }
        MapProperty::Injective => Ok(if m.is_injective() {
            Verdict::pass()
        } else {
            Verdict::fail(Witness::NotBijective)
        }),
        MapProperty::Surjective => Ok(if m.is_surjective() {
            Verdict::pass()
        } else {
            Verdict::fail(Witness::NotBijective)
        }),
        MapProperty::Homeomorphism => Ok(homeomorphism_verdict(m, dom, cod)),
    }
}

/// Decide everything at once; properties whose continuity prerequisite fails
/// are reported as failing with a `Prerequisite` witness instead of erroring.
pub fn map_report(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace, name: impl Into<String>) -> Result<MapReport> {
    check_universes(m, dom, cod)?;
    let continuous = continuous_verdict(m, dom, cod);
    let needs_continuity = |v: fn(&SoftMapping, &SoftSpace, &SoftSpace) -> Verdict| {
        if continuous.holds {
            v(m, dom, cod)
        } else {
            Verdict::fail(Witness::Prerequisite(MapProperty::Continuous))
        }
    };
    let verdicts = vec![
        continuous.clone(),
        open_verdict(m, dom, cod),
        closed_verdict(m, dom, cod),
        needs_continuity(initial_verdict),
        needs_continuity(initial_via_closure_verdict),
        needs_continuity(quasihomomorphism_verdict),
        if m.is_injective() { Verdict::pass() } else { Verdict::fail(Witness::NotBijective) },
        if m.is_surjective() { Verdict::pass() } else { Verdict::fail(Witness::NotBijective) },
        homeomorphism_verdict(m, dom, cod),
    ];
    Ok(MapReport {
        mapping: name.into(),
        verdicts,
    })
}

fn continuous_verdict(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Verdict {
    for g in cod.opens() {
        let pre = m.preimage(g).expect("matching universes");
        if !dom.topology().contains(&pre) {
            return Verdict::fail(Witness::PreimageNotOpen(g.clone()));
        }
    }
    Verdict::pass()
}

fn open_verdict(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Verdict {
    for f in dom.opens() {
        let img = m.image(f).expect("matching universes");
        if !cod.topology().contains(&img) {
            return Verdict::fail(Witness::ImageEscapes(f.clone()));
        }
    }
    Verdict::pass()
}

fn closed_verdict(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Verdict {
    for f in dom.closed_sets() {
        let img = m.image(&f).expect("matching universes");
        if !cod.is_closed(&img).expect("matching universes") {
            return Verdict::fail(Witness::ImageEscapes(f));
        }
    }
    Verdict::pass()
}

/// Every domain open is the preimage of some codomain open.
fn initial_verdict(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Verdict {
    let preimages: Vec<SoftSet> = cod
        .opens()
        .iter()
        .map(|g| m.preimage(g).expect("matching universes"))
        .collect();
    for f in dom.opens() {
        if !preimages.contains(f) {
            return Verdict::fail(Witness::NoOpenOrigin(f.clone()));
        }
    }
    Verdict::pass()
}

/// Closure characterization of initiality, computed independently: every
/// domain closed set must equal the preimage of the closure of its image.
fn initial_via_closure_verdict(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Verdict {
    for f in dom.closed_sets() {
        let round = m
            .preimage(&cod.closure(&m.image(&f).expect("matching universes")).expect("matching universes"))
            .expect("matching universes");
        if round != f {
            return Verdict::fail(Witness::ClosureRoundTripFails(f));
        }
    }
    Verdict::pass()
}

/// Initial, and the image of the absolute set meets every nonnull locally
/// closed set of the codomain. The null set is locally closed and can never
/// be met, so it is excluded from the quantifier.
fn quasihomomorphism_verdict(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Verdict {
    let initial = initial_verdict(m, dom, cod);
    if !initial.holds {
        return initial;
    }
    let reach = m.image(&SoftSet::absolute(dom.universe())).expect("matching universes");
    for lc in cod.locally_closed_sets() {
        if lc.is_null() {
            continue;
        }
        if reach.is_disjoint(&lc).expect("matching universes") {
            return Verdict::fail(Witness::UnmetLocallyClosed(lc));
        }
    }
    Verdict::pass()
}

fn homeomorphism_verdict(m: &SoftMapping, dom: &SoftSpace, cod: &SoftSpace) -> Verdict {
    if !m.is_injective() || !m.is_surjective() {
        return Verdict::fail(Witness::NotBijective);
    }
    let forward = continuous_verdict(m, dom, cod);
    if !forward.holds {
        return Verdict::fail(Witness::Prerequisite(MapProperty::Continuous));
    }
    let inverse = m.inverse().expect("bijective");
    let backward = continuous_verdict(&inverse, cod, dom);
    if !backward.holds {
        if let Some(Witness::PreimageNotOpen(s)) = backward.witness {
            // the inverse's preimage is this map's image
            return Verdict::fail(Witness::ImageEscapes(s));
        }
        return Verdict::fail(Witness::Prerequisite(MapProperty::Open));
    }
    Verdict::pass()
}

/// Outcome of the two-of-three check on a composable pair.
#[derive(Clone, Debug)]
pub struct TwoOfThreeReport {
    pub first: bool,
    pub second: bool,
    pub composed: bool,
    /// Whether any two quasihomomorphisms among the triple force the third.
    pub consistent: bool,
}

/// Evaluate quasihomomorphism on `m1`, `m2` and `m2 ∘ m1` and report whether
/// the two-of-three rule holds on this instance. A violation is an
/// implementation (or theory) failure, never a data condition.
pub fn two_of_three(
    dom: &SoftSpace,
    mid: &SoftSpace,
    cod: &SoftSpace,
    m1: &SoftMapping,
    m2: &SoftMapping,
) -> Result<TwoOfThreeReport> {
    check_universes(m1, dom, mid)?;
    check_universes(m2, mid, cod)?;
    if !is_continuous(m1, dom, mid) || !is_continuous(m2, mid, cod) {
        return Err(Error::NotContinuous);
    }
    let composed = compose(m2, m1)?;
    let first = quasihomomorphism_verdict(m1, dom, mid).holds;
    let second = quasihomomorphism_verdict(m2, mid, cod).holds;
    let third = quasihomomorphism_verdict(&composed, dom, cod).holds;
    let consistent = !((first && second && !third)
        || (first && third && !second)
        || (second && third && !first));
    Ok(TwoOfThreeReport {
        first,
        second,
        composed: third,
        consistent,
    })
}
