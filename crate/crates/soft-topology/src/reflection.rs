//! The soft T0 reflection: quotient a space by the `≈` relation, push the
//! topology down along the canonical surjection, and decide the reflected
//! separation axioms both through the quotient and directly on the source.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mapping::{compose, SoftMapping};
use crate::morphisms::is_continuous;
use crate::separation::{check_axiom, Axiom};
use crate::soft_set::{SoftSet, Universe};
use crate::topology::{SoftSpace, SoftTopology};

/// Reflected axioms: the quotient must satisfy the corresponding axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha {
    ZeroK,
    One,
    OneK,
    Two,
    ThreeK,
    Three,
    TS,
    TSK,
}

impl Alpha {
    pub const ALL: [Alpha; 8] = [
        Alpha::ZeroK,
        Alpha::One,
        Alpha::OneK,
        Alpha::Two,
        Alpha::ThreeK,
        Alpha::Three,
        Alpha::TS,
        Alpha::TSK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Alpha::ZeroK => "T(0,0k)",
            Alpha::One => "T(0,1)",
            Alpha::OneK => "T(0,1k)",
            Alpha::Two => "T(0,2)",
            Alpha::ThreeK => "T(0,3k)",
            Alpha::Three => "T(0,3)",
            Alpha::TS => "T(0,TS)",
            Alpha::TSK => "T(0,TSk)",
        }
    }

    pub fn from_name(name: &str) -> Option<Alpha> {
        Alpha::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(name))
    }

    /// The axiom the quotient is asked to satisfy.
    pub fn axiom(self) -> Axiom {
        match self {
            Alpha::ZeroK => Axiom::T0k,
            Alpha::One => Axiom::T1,
            Alpha::OneK => Axiom::T1k,
            Alpha::Two => Axiom::T2,
            Alpha::ThreeK => Axiom::T3k,
            Alpha::Three => Axiom::T3,
            Alpha::TS => Axiom::TotallySeparated,
            Alpha::TSK => Axiom::KTotallySeparated,
        }
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The quotient of a space by `≈` together with the canonical surjection.
#[derive(Clone, Debug)]
pub struct Reflection {
    source: SoftSpace,
    /// Partition of the source points; each class lists members in point
    /// order, so the first member is the canonical representative.
    classes: Vec<Vec<usize>>,
    quotient: SoftSpace,
    surjection: SoftMapping,
    /// False when the construction was forced on a non-T0U source; the
    /// quotient is still the preimage-defined topology but none of the
    /// reflection laws are asserted.
    verified: bool,
}

impl Reflection {
    pub fn source(&self) -> &SoftSpace {
        &self.source
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn quotient(&self) -> &SoftSpace {
        &self.quotient
    }

    /// The canonical surjection, pointing each point at its class and
    /// keeping parameters fixed.
    pub fn surjection(&self) -> &SoftMapping {
        &self.surjection
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Index of the class containing the source point.
    pub fn class_of(&self, point: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&point))
            .expect("points are partitioned")
    }

    pub fn class_label(&self, class: usize) -> &str {
        self.quotient.universe().point_label(class)
    }
}

fn class_label_for(source: &Arc<Universe>, class: &[usize]) -> String {
    format!("[{}]", source.point_label(class[0]))
}

/// Build the soft T0 reflection. Refuses non-T0U sources unless `force` is
/// set; a forced reflection is marked unverified and its quotient is simply
/// the preimage-defined topology with no laws asserted.
pub fn compute_reflection(sp: &SoftSpace, force: bool) -> Result<Reflection> {
    let t0u = check_axiom(sp, Axiom::T0U);
    if !t0u && !force {
        return Err(Error::NotT0U);
    }

    let classes = sp.point_classes();
    let quotient_universe = Universe::new(
        classes.iter().map(|c| class_label_for(sp.universe(), c)),
        sp.universe().param_labels().iter().cloned(),
    )?;
    let point_map: Vec<usize> = (0..sp.universe().point_count())
        .map(|x| classes.iter().position(|c| c.contains(&x)).expect("partition"))
        .collect();
    let surjection = SoftMapping::new(
        sp.universe(),
        &quotient_universe,
        point_map,
        (0..sp.universe().param_count()).collect(),
    )?;

    // Quotient topology by its definition: the soft sets over the classes
    // whose preimage is open. Small quotients are enumerated outright; for
    // larger ones the same family is read off the saturated opens, which is
    // the identical set because the surjection is onto with fixed parameters.
    let opens = if quotient_universe.cells() <= 20 {
        SoftSet::enumerate_all(&quotient_universe)
            .filter(|s| {
                let pre = surjection.preimage(s).expect("matching universes");
                sp.topology().contains(&pre)
            })
            .collect::<Vec<_>>()
    } else {
        let mut out = Vec::new();
        for open in sp.opens() {
            let image = surjection.image(open).expect("matching universes");
            let back = surjection.preimage(&image).expect("matching universes");
            if &back == open {
                out.push(image);
            }
        }
        out
    };
    let quotient = SoftSpace::new(SoftTopology::from_opens_unchecked(&quotient_universe, opens));

    if t0u {
        // For genuine T0U sources the pushforwards of the opens are exactly
        // the quotient topology and the quotient is soft T0.
        let mut image_route: Vec<SoftSet> = sp
            .opens()
            .iter()
            .map(|open| surjection.image(open).expect("matching universes"))
            .collect();
        image_route.sort();
        image_route.dedup();
        assert_eq!(
            image_route,
            quotient.opens(),
            "image-defined and preimage-defined quotient topologies disagree on {}",
            sp.display_name()
        );
        assert!(
            check_axiom(&quotient, Axiom::T0),
            "quotient of the T0U space {} is not T0",
            sp.display_name()
        );
    }

    let name = sp
        .name()
        .map(|n| format!("{n}#t0"))
        .unwrap_or_else(|| "t0 quotient".to_string());
    Ok(Reflection {
        source: sp.clone(),
        classes,
        quotient: quotient.with_name(name),
        surjection,
        verified: t0u,
    })
}

/// The map induced between the quotients by a continuous map: it sends the
/// class of `x` to the class of `f(x)` and keeps the parameter map.
pub fn induced_map(
    r_src: &Reflection,
    r_tgt: &Reflection,
    m: &SoftMapping,
) -> Result<SoftMapping> {
    if !m.source().same_as(r_src.source.universe()) || !m.target().same_as(r_tgt.source.universe()) {
        return Err(Error::UniverseMismatch);
    }
    if !is_continuous(m, &r_src.source, &r_tgt.source) {
        return Err(Error::NotContinuous);
    }

    let mut class_map = Vec::with_capacity(r_src.classes.len());
    for class in &r_src.classes {
        let image_class = r_tgt.class_of(m.point_image(class[0]));
        for &x in &class[1..] {
            if r_tgt.class_of(m.point_image(x)) != image_class {
                return Err(Error::NotWellDefined(format!(
                    "members of class {} land in different target classes",
                    class_label_for(r_src.source.universe(), class)
                )));
            }
        }
        class_map.push(image_class);
    }
    let param_map = (0..m.source().param_count()).map(|a| m.param_image(a)).collect();
    let induced = SoftMapping::new(
        r_src.quotient.universe(),
        r_tgt.quotient.universe(),
        class_map,
        param_map,
    )?;

    assert!(
        is_continuous(&induced, &r_src.quotient, &r_tgt.quotient),
        "induced map is not continuous between the quotients"
    );
    let square_left = compose(&r_tgt.surjection, m)?;
    let square_right = compose(&induced, &r_src.surjection)?;
    assert_eq!(square_left, square_right, "induced map does not commute with the surjections");
    Ok(induced)
}

/// Factor a continuous map into a soft T0 target through the reflection:
/// returns the unique continuous map from the quotient with
/// `factor ∘ surjection = m`.
pub fn factor_through_reflection(
    r: &Reflection,
    m: &SoftMapping,
    target: &SoftSpace,
) -> Result<SoftMapping> {
    if !m.source().same_as(r.source.universe()) || !m.target().same_as(target.universe()) {
        return Err(Error::UniverseMismatch);
    }
    if !check_axiom(target, Axiom::T0) {
        return Err(Error::TargetNotT0);
    }
    if !is_continuous(m, &r.source, target) {
        return Err(Error::NotContinuous);
    }

    let mut class_map = Vec::with_capacity(r.classes.len());
    for class in &r.classes {
        let image = m.point_image(class[0]);
        for &x in &class[1..] {
            if m.point_image(x) != image {
                return Err(Error::NotWellDefined(format!(
                    "class {} is not collapsed by the map",
                    class_label_for(r.source.universe(), class)
                )));
            }
        }
        class_map.push(image);
    }
    let param_map = (0..m.source().param_count()).map(|a| m.param_image(a)).collect();
    let factor = SoftMapping::new(r.quotient.universe(), target.universe(), class_map, param_map)?;

    // The factorization equation pins the factor on every class because the
    // surjection is onto, so this construction is the unique solution.
    assert_eq!(&compose(&factor, &r.surjection)?, m, "factorization equation failed");
    assert!(
        is_continuous(&factor, &r.quotient, target),
        "factor map is not continuous"
    );
    Ok(factor)
}

/// The soft set over the *source* universe whose every row is the class of
/// `x`.
pub fn point_class_soft_set(r: &Reflection, x: &str) -> Result<SoftSet> {
    let id = r.source.universe().point_index(x)?;
    let class = &r.classes[r.class_of(id)];
    let mut row = 0u64;
    for &p in class {
        row |= 1 << p;
    }
    Ok(SoftSet::from_rows(
        Arc::clone(r.source.universe()),
        vec![row; r.source.universe().param_count()],
    ))
}

/// Reflected axiom via the quotient: build the reflection and test it.
pub fn check_t0_alpha(sp: &SoftSpace, alpha: Alpha) -> Result<bool> {
    let r = compute_reflection(sp, false)?;
    Ok(check_axiom(&r.quotient, alpha.axiom()))
}

/// Reflected axiom decided directly on the source, quantifying over pairs of
/// points in distinct `≈`-classes, without building the quotient.
pub fn check_t0_alpha_direct(sp: &SoftSpace, alpha: Alpha) -> Result<bool> {
    if !check_axiom(sp, Axiom::T0U) {
        return Err(Error::NotT0U);
    }
    let value = match alpha {
        Alpha::ZeroK => nonequiv_pairs_separated(sp, sp.opens(), Separation::ComplementOneSide),
        Alpha::One => nonequiv_pairs_separated(sp, sp.opens(), Separation::ExcludedBothSides),
        Alpha::OneK => one_k_direct(sp),
        Alpha::Two => nonequiv_pairs_separated(sp, sp.opens(), Separation::DisjointOpens),
        Alpha::ThreeK => one_k_direct(sp) && check_axiom(sp, Axiom::KRegular),
        Alpha::Three => {
            nonequiv_pairs_separated(sp, sp.opens(), Separation::ExcludedBothSides)
                && check_axiom(sp, Axiom::Regular)
        }
        Alpha::TS => nonequiv_pairs_separated(sp, &sp.clopen_sets(), Separation::NotMemberOneSide),
        Alpha::TSK => nonequiv_pairs_separated(sp, &sp.clopen_sets(), Separation::ComplementOneSide),
    };
    Ok(value)
}

enum Separation {
    /// A separator contains one point and complement-contains the other.
    ComplementOneSide,
    /// A separator contains one point and merely excludes the other.
    NotMemberOneSide,
    /// Each point has a separator excluding the other.
    ExcludedBothSides,
    /// Each point has a separator complement-containing the other.
    ComplementBothSides,
    /// The two points have disjoint separators.
    DisjointOpens,
}

fn nonequiv_pairs_separated(sp: &SoftSpace, separators: &[SoftSet], kind: Separation) -> bool {
    let full = sp.universe().full_row();
    let member: Vec<u64> = separators.iter().map(SoftSet::member_mask).collect();
    let comember: Vec<u64> = separators.iter().map(SoftSet::comember_mask).collect();
    let pairs = nonequiv_pairs(sp);
    pairs.into_iter().all(|(x, y)| match kind {
        Separation::ComplementOneSide => (0..separators.len()).any(|i| {
            (member[i] >> x & 1 == 1 && comember[i] >> y & 1 == 1)
                || (member[i] >> y & 1 == 1 && comember[i] >> x & 1 == 1)
        }),
        Separation::NotMemberOneSide => (0..separators.len()).any(|i| {
            let excluded = full & !member[i];
            (member[i] >> x & 1 == 1 && excluded >> y & 1 == 1)
                || (member[i] >> y & 1 == 1 && excluded >> x & 1 == 1)
        }),
        Separation::ExcludedBothSides => {
            let one_way = |p: usize, q: usize| {
                (0..separators.len())
                    .any(|i| member[i] >> p & 1 == 1 && (full & !member[i]) >> q & 1 == 1)
            };
            one_way(x, y) && one_way(y, x)
        }
        Separation::ComplementBothSides => {
            let one_way = |p: usize, q: usize| {
                (0..separators.len()).any(|i| member[i] >> p & 1 == 1 && comember[i] >> q & 1 == 1)
            };
            one_way(x, y) && one_way(y, x)
        }
        Separation::DisjointOpens => (0..separators.len()).any(|i| {
            member[i] >> x & 1 == 1
                && (0..separators.len()).any(|j| {
                    member[j] >> y & 1 == 1
                        && separators[i].is_disjoint(&separators[j]).expect("same universe")
                })
        }),
    })
}

fn nonequiv_pairs(sp: &SoftSpace) -> Vec<(usize, usize)> {
    let classes = sp.point_classes();
    let mut out = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            for &x in a {
                for &y in b {
                    out.push((x, y));
                }
            }
        }
    }
    out
}

/// Three equivalent readings of the reflected T1k axiom: pairwise
/// complement-membership, closedness of every class soft set, and (checked
/// elsewhere) T1k of the quotient. The two direct routes must agree.
fn one_k_direct(sp: &SoftSpace) -> bool {
    let pairwise = nonequiv_pairs_separated(sp, sp.opens(), Separation::ComplementBothSides);
    let classes = sp.point_classes();
    let via_closed_classes = classes.iter().all(|class| {
        let mut row = 0u64;
        for &p in class {
            row |= 1 << p;
        }
        let s = SoftSet::from_rows(
            Arc::clone(sp.universe()),
            vec![row; sp.universe().param_count()],
        );
        sp.is_closed(&s).expect("same universe")
    });
    assert_eq!(
        pairwise,
        via_closed_classes,
        "internal consistency violation on {}: pairwise and closed-class readings disagree",
        sp.display_name()
    );
    pairwise
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::SoftTopology;

    fn u3() -> Arc<Universe> {
        Universe::new(["x", "y", "z"], ["a1", "a2"]).unwrap()
    }

    fn set(u: &Arc<Universe>, rows: &[&[&str]]) -> SoftSet {
        SoftSet::from_label_rows(u, rows).unwrap()
    }

    fn space(u: &Arc<Universe>, named: &[&[&[&str]]]) -> SoftSpace {
        let mut fam = vec![SoftSet::null(u), SoftSet::absolute(u)];
        fam.extend(named.iter().map(|rows| set(u, rows)));
        SoftSpace::new(SoftTopology::validated(u, fam).unwrap())
    }

    fn uniform_pair_space(u: &Arc<Universe>) -> SoftSpace {
        space(u, &[&[&["z"], &["z"]], &[&["x", "y"], &["x", "y"]]])
    }

    fn low_separation_space(u: &Arc<Universe>) -> SoftSpace {
        space(u, &[&[&["x"], &[]], &[&["x"], &["x"]]])
    }

    #[test]
    fn reflection_collapses_uniform_pair() {
        let u = u3();
        let r = compute_reflection(&uniform_pair_space(&u), false).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.classes(), &[vec![0, 1], vec![2]]);
        let q = r.quotient();
        assert_eq!(q.universe().point_labels(), &["[x]", "[z]"]);
        assert_eq!(q.opens().len(), 4);
        let qu = Arc::clone(q.universe());
        assert!(q.is_open(&set(&qu, &[&["[x]"], &["[x]"]])).unwrap());
        assert!(q.is_open(&set(&qu, &[&["[z]"], &["[z]"]])).unwrap());
    }

    #[test]
    fn reflection_of_low_separation_space() {
        let u = u3();
        let r = compute_reflection(&low_separation_space(&u), false).unwrap();
        assert_eq!(r.classes(), &[vec![0], vec![1, 2]]);
        let q = r.quotient();
        let qu = Arc::clone(q.universe());
        assert_eq!(q.opens().len(), 4);
        assert!(q.is_open(&set(&qu, &[&["[x]"], &[]])).unwrap());
        assert!(q.is_open(&set(&qu, &[&["[x]"], &["[x]"]])).unwrap());
    }

    #[test]
    fn t0_source_reflects_isomorphically() {
        let u = u3();
        let sp = space(
            &u,
            &[
                &[&["x"], &["x"]],
                &[&["x", "y"], &["y"]],
                &[&["x"], &[]],
                &[&["x", "y"], &["x", "y"]],
            ],
        );
        assert!(check_axiom(&sp, Axiom::T0));
        let r = compute_reflection(&sp, false).unwrap();
        assert!(r.classes().iter().all(|c| c.len() == 1));
        assert_eq!(r.quotient().opens().len(), sp.opens().len());
    }

    #[test]
    fn non_t0u_requires_force() {
        let u = Universe::new(["x", "y"], ["a1", "a2"]).unwrap();
        let sp = space(&u, &[&[&["x"], &["y"]]]);
        assert_eq!(compute_reflection(&sp, false).unwrap_err(), Error::NotT0U);
        let r = compute_reflection(&sp, true).unwrap();
        assert!(!r.is_verified());
        assert_eq!(r.classes().len(), 1);
        assert_eq!(r.quotient().opens().len(), 2);
    }

    #[test]
    fn induced_map_of_identity_is_identity() {
        let u = u3();
        let sp = uniform_pair_space(&u);
        let r = compute_reflection(&sp, false).unwrap();
        let id = SoftMapping::identity(&u);
        let ind = induced_map(&r, &r, &id).unwrap();
        assert_eq!(ind, SoftMapping::identity(r.quotient().universe()));
    }

    #[test]
    fn induced_map_of_constant_map() {
        let u = u3();
        let src = low_separation_space(&u);
        let tgt = uniform_pair_space(&u);
        let constant = SoftMapping::new(&u, &u, vec![2, 2, 2], vec![0, 1]).unwrap();
        let r_src = compute_reflection(&src, false).unwrap();
        let r_tgt = compute_reflection(&tgt, false).unwrap();
        let ind = induced_map(&r_src, &r_tgt, &constant).unwrap();
        // both classes land on [z]
        assert_eq!(ind.point_image(0), 1);
        assert_eq!(ind.point_image(1), 1);
    }

    #[test]
    fn surjection_into_quotient_induces_an_isomorphism() {
        let u = u3();
        let sp = uniform_pair_space(&u);
        let r = compute_reflection(&sp, false).unwrap();
        let r_q = compute_reflection(r.quotient(), false).unwrap();
        // the quotient is T0, so its own classes are singletons and the
        // induced map is a bijection between the quotients
        let ind = induced_map(&r, &r_q, r.surjection()).unwrap();
        assert!(ind.is_injective() && ind.is_surjective());
        assert!(
            crate::morphisms::check_map(&ind, r.quotient(), r_q.quotient(), crate::morphisms::MapProperty::Homeomorphism)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn factorization_through_the_reflection() {
        let u = u3();
        let sp = uniform_pair_space(&u);
        let r = compute_reflection(&sp, false).unwrap();
        // factoring the surjection itself through the reflection is the identity
        let f = factor_through_reflection(&r, r.surjection(), r.quotient()).unwrap();
        assert_eq!(f, SoftMapping::identity(r.quotient().universe()));
    }

    #[test]
    fn factorization_into_a_two_point_target() {
        let u = u3();
        let sp = low_separation_space(&u);
        let r = compute_reflection(&sp, false).unwrap();
        let tu = Universe::new(["p", "q"], ["a1", "a2"]).unwrap();
        let target = space(&tu, &[&[&["p"], &["p"]]]);
        let m = SoftMapping::from_labels(
            &u,
            &tu,
            &[("x", "p"), ("y", "q"), ("z", "q")],
            &[("a1", "a1"), ("a2", "a2")],
        )
        .unwrap();
        let f = factor_through_reflection(&r, &m, &target).unwrap();
        assert_eq!(f.point_image(0), 0); // [x] -> p
        assert_eq!(f.point_image(1), 1); // [y] -> q
        assert_eq!(&compose(&f, r.surjection()).unwrap(), &m);
    }

    #[test]
    fn factorization_demands_a_t0_target() {
        let u = u3();
        let sp = uniform_pair_space(&u);
        let r = compute_reflection(&sp, false).unwrap();
        let m = SoftMapping::identity(&u);
        assert_eq!(
            factor_through_reflection(&r, &m, &sp).unwrap_err(),
            Error::TargetNotT0
        );
    }

    #[test]
    fn point_class_soft_sets() {
        let u = u3();
        let r = compute_reflection(&uniform_pair_space(&u), false).unwrap();
        assert_eq!(
            point_class_soft_set(&r, "x").unwrap(),
            set(&u, &[&["x", "y"], &["x", "y"]])
        );
        let r9 = compute_reflection(&low_separation_space(&u), false).unwrap();
        assert_eq!(
            point_class_soft_set(&r9, "y").unwrap(),
            set(&u, &[&["y", "z"], &["y", "z"]])
        );
    }

    #[test]
    fn alpha_checks_on_the_low_separation_space() {
        let u = u3();
        let sp = low_separation_space(&u);
        assert!(check_t0_alpha(&sp, Alpha::ZeroK).unwrap());
        assert!(!check_t0_alpha(&sp, Alpha::One).unwrap());
        assert!(!check_t0_alpha(&sp, Alpha::TS).unwrap());
        assert!(check_t0_alpha_direct(&sp, Alpha::ZeroK).unwrap());
        assert!(!check_t0_alpha_direct(&sp, Alpha::One).unwrap());
        assert!(!check_t0_alpha_direct(&sp, Alpha::TS).unwrap());
    }

    #[test]
    fn alpha_checks_on_the_uniform_pair_space() {
        let u = u3();
        let sp = uniform_pair_space(&u);
        for alpha in Alpha::ALL {
            assert!(check_t0_alpha(&sp, alpha).unwrap(), "{alpha} should hold");
            assert!(check_t0_alpha_direct(&sp, alpha).unwrap(), "{alpha} direct should hold");
        }
    }

    #[test]
    fn one_point_quotient_satisfies_everything() {
        let u = u3();
        let sp = space(&u, &[]);
        for alpha in Alpha::ALL {
            assert!(check_t0_alpha(&sp, alpha).unwrap());
            assert!(check_t0_alpha_direct(&sp, alpha).unwrap());
        }
    }

    #[test]
    fn class_splitting_map_cannot_factor() {
        // A continuous map with a non-surjective parameter map can split an
        // indistinguishability class: the target's extra parameter is
        // invisible through the preimage. No quotient factorization exists
        // then, even though the target is T0.
        let src_u = Universe::new(["x", "y"], ["a"]).unwrap();
        let indiscrete = SoftSpace::new(
            SoftTopology::validated(
                &src_u,
                vec![SoftSet::null(&src_u), SoftSet::absolute(&src_u)],
            )
            .unwrap(),
        );
        let tgt_u = Universe::new(["p", "q"], ["b1", "b2"]).unwrap();
        let g = SoftSet::from_label_rows(&tgt_u, &[&["p", "q"], &["p"]]).unwrap();
        let target = SoftSpace::new(
            SoftTopology::validated(
                &tgt_u,
                vec![SoftSet::null(&tgt_u), SoftSet::absolute(&tgt_u), g],
            )
            .unwrap(),
        );
        assert!(check_axiom(&target, Axiom::T0));
        let m = SoftMapping::from_labels(&src_u, &tgt_u, &[("x", "p"), ("y", "q")], &[("a", "b1")])
            .unwrap();
        assert!(is_continuous(&m, &indiscrete, &target));

        let r_src = compute_reflection(&indiscrete, false).unwrap();
        assert!(matches!(
            factor_through_reflection(&r_src, &m, &target),
            Err(Error::NotWellDefined(_))
        ));
        let r_tgt = compute_reflection(&target, false).unwrap();
        assert!(matches!(
            induced_map(&r_src, &r_tgt, &m),
            Err(Error::NotWellDefined(_))
        ));
    }

    #[test]
    fn alpha_requires_t0u() {
        let u = Universe::new(["x", "y"], ["a1", "a2"]).unwrap();
        let sp = space(&u, &[&[&["x"], &["y"]]]);
        assert_eq!(check_t0_alpha(&sp, Alpha::One).unwrap_err(), Error::NotT0U);
        assert_eq!(check_t0_alpha_direct(&sp, Alpha::One).unwrap_err(), Error::NotT0U);
    }
}
