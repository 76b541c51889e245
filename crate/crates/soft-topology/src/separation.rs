//! Decision procedures for the twelve soft separation axioms.
//!
//! Two exclusion notions drive the axiom family. A point is *excluded* from a
//! soft set when it misses some row (`x ∉ (F,A)`), and *complement-contained*
//! when it misses every row (`x ∈ (F,A)^c`). The plain axioms use the first
//! notion, the `k`-variants demand the stronger second one, and the totally
//! separated variants restrict the separating sets to clopens.

use crate::error::Result;
use crate::soft_set::SoftSet;
use crate::topology::SoftSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    T0,
    T0U,
    T1,
    T2,
    Regular,
    T3,
    T0k,
    T1k,
    KRegular,
    T3k,
    TotallySeparated,
    KTotallySeparated,
}

impl Axiom {
    pub const ALL: [Axiom; 12] = [
        Axiom::T0,
        Axiom::T0U,
        Axiom::T1,
        Axiom::T2,
        Axiom::Regular,
        Axiom::T3,
        Axiom::T0k,
        Axiom::T1k,
        Axiom::KRegular,
        Axiom::T3k,
        Axiom::TotallySeparated,
        Axiom::KTotallySeparated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::T0 => "T0",
            Axiom::T0U => "T0U",
            Axiom::T1 => "T1",
            Axiom::T2 => "T2",
            Axiom::Regular => "Regular",
            Axiom::T3 => "T3",
            Axiom::T0k => "T0k",
            Axiom::T1k => "T1k",
            Axiom::KRegular => "KRegular",
            Axiom::T3k => "T3k",
            Axiom::TotallySeparated => "TotallySeparated",
            Axiom::KTotallySeparated => "KTotallySeparated",
        }
    }

    pub fn from_name(name: &str) -> Option<Axiom> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(name))
    }

    pub fn index(self) -> usize {
        Axiom::ALL.iter().position(|&a| a == self).expect("listed")
    }
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Implications proven for the axiom family; `classify` refuses to return a
/// profile that contradicts one of them.
pub const PROVEN_IMPLICATIONS: [(Axiom, Axiom); 10] = [
    (Axiom::T0, Axiom::T0U),
    (Axiom::T0k, Axiom::T0),
    (Axiom::T1k, Axiom::T1),
    (Axiom::T2, Axiom::T1k),
    (Axiom::T3, Axiom::T3k),
    (Axiom::T3k, Axiom::T2),
    (Axiom::KTotallySeparated, Axiom::TotallySeparated),
    (Axiom::KTotallySeparated, Axiom::T2),
    (Axiom::KTotallySeparated, Axiom::T3k),
    (Axiom::TotallySeparated, Axiom::T0),
];

/// The truth vector of all twelve axioms for one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomProfile {
    space: String,
    values: [bool; 12],
}

impl AxiomProfile {
    pub fn space(&self) -> &str {
        &self.space
    }

    pub fn get(&self, axiom: Axiom) -> bool {
        self.values[axiom.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Axiom, bool)> + '_ {
        Axiom::ALL.into_iter().map(|a| (a, self.values[a.index()]))
    }

    fn check_consistency(&self) {
        for (stronger, weaker) in PROVEN_IMPLICATIONS {
            assert!(
                !self.get(stronger) || self.get(weaker),
                "internal consistency violation on {}: {} holds but {} fails",
                self.space,
                stronger,
                weaker
            );
        }
    }
}

/// Decide one axiom for the space.
pub fn check_axiom(sp: &SoftSpace, axiom: Axiom) -> bool {
    match axiom {
        Axiom::T0 => t0_like(sp, sp.opens(), Exclusion::NotMember),
        Axiom::T0U => t0u(sp),
        Axiom::T1 => t1_like(sp, Exclusion::NotMember),
        Axiom::T2 => t2(sp),
        Axiom::Regular => regular(sp, Trigger::NotMember),
        Axiom::T3 => regular(sp, Trigger::NotMember) && t1_like(sp, Exclusion::NotMember),
        Axiom::T0k => t0_like(sp, sp.opens(), Exclusion::InComplement),
        Axiom::T1k => t1k(sp),
        Axiom::KRegular => regular(sp, Trigger::InComplement),
        Axiom::T3k => regular(sp, Trigger::InComplement) && t1k(sp),
        Axiom::TotallySeparated => t0_like(sp, &sp.clopen_sets(), Exclusion::NotMember),
        Axiom::KTotallySeparated => t0_like(sp, &sp.clopen_sets(), Exclusion::InComplement),
    }
}

/// Decide all twelve axioms; the profile is consistency-checked against
/// `PROVEN_IMPLICATIONS` before it is returned, so an inconsistent profile is
/// an implementation bug, never a data condition.
pub fn classify(sp: &SoftSpace) -> AxiomProfile {
    let mut values = [false; 12];
    for ax in Axiom::ALL {
        values[ax.index()] = check_axiom(sp, ax);
    }
    let profile = AxiomProfile {
        space: sp.display_name(),
        values,
    };
    profile.check_consistency();
    profile
}

/// Whether the constant singleton soft set of `x` is soft closed; equivalent
/// to the pairwise complement-membership reading of `T1k` when it holds for
/// every point.
pub fn is_point_soft_set_closed(sp: &SoftSpace, x: &str) -> Result<bool> {
    let p = SoftSet::point_soft_set(sp.universe(), x)?;
    sp.is_closed(&p)
}

#[derive(Clone, Copy)]
enum Exclusion {
    /// `y ∉ (F,A)`: y misses some row.
    NotMember,
    /// `y ∈ (F,A)^c`: y misses every row.
    InComplement,
}

#[derive(Clone, Copy)]
enum Trigger {
    NotMember,
    InComplement,
}

fn excluded_mask(s: &SoftSet, excl: Exclusion) -> u64 {
    let full = s.universe().full_row();
    match excl {
        Exclusion::NotMember => full & !s.member_mask(),
        Exclusion::InComplement => s.comember_mask(),
    }
}

/// For every unordered pair of distinct points some separator contains one
/// side and excludes the other.
fn t0_like(sp: &SoftSpace, separators: &[SoftSet], excl: Exclusion) -> bool {
    let n = sp.universe().point_count();
    let member: Vec<u64> = separators.iter().map(SoftSet::member_mask).collect();
    let excluded: Vec<u64> = separators.iter().map(|s| excluded_mask(s, excl)).collect();
    for x in 0..n {
        for y in x + 1..n {
            let found = member.iter().zip(&excluded).any(|(&m, &e)| {
                (m >> x & 1 == 1 && e >> y & 1 == 1) || (m >> y & 1 == 1 && e >> x & 1 == 1)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// For every ordered pair of distinct points some open contains the first
/// and excludes the second.
fn t1_like(sp: &SoftSpace, excl: Exclusion) -> bool {
    let n = sp.universe().point_count();
    let member: Vec<u64> = sp.opens().iter().map(SoftSet::member_mask).collect();
    let excluded: Vec<u64> = sp.opens().iter().map(|s| excluded_mask(s, excl)).collect();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let found = member
                .iter()
                .zip(&excluded)
                .any(|(&m, &e)| m >> x & 1 == 1 && e >> y & 1 == 1);
            if !found {
                return false;
            }
        }
    }
    true
}

/// Pairwise complement-membership both ways, cross-checked against the
/// closed-point-sets characterization; the two must agree.
fn t1k(sp: &SoftSpace) -> bool {
    let pairwise = t1_like(sp, Exclusion::InComplement);
    let via_closed_points = (0..sp.universe().point_count()).all(|x| {
        let rows = vec![1u64 << x; sp.universe().param_count()];
        let p = SoftSet::from_rows(std::sync::Arc::clone(sp.universe()), rows);
        sp.is_closed(&p).expect("same universe")
    });
    assert_eq!(
        pairwise,
        via_closed_points,
        "internal consistency violation on {}: pairwise T1k and closed-point-set T1k disagree",
        sp.display_name()
    );
    pairwise
}

/// Distinct points have disjoint open neighborhoods.
fn t2(sp: &SoftSpace) -> bool {
    let n = sp.universe().point_count();
    let opens = sp.opens();
    let member: Vec<u64> = opens.iter().map(SoftSet::member_mask).collect();
    // sep[i]: points with an open neighborhood disjoint from opens[i]
    let sep = separation_masks(opens, &member);
    for x in 0..n {
        for y in x + 1..n {
            let found = (0..opens.len())
                .any(|i| member[i] >> x & 1 == 1 && sep[i] >> y & 1 == 1);
            if !found {
                return false;
            }
        }
    }
    true
}

fn separation_masks(opens: &[SoftSet], member: &[u64]) -> Vec<u64> {
    let mut sep = vec![0u64; opens.len()];
    for i in 0..opens.len() {
        for j in 0..opens.len() {
            if opens[i].is_disjoint(&opens[j]).expect("same universe") {
                sep[i] |= member[j];
            }
        }
    }
    sep
}

/// Every (closed set, triggered point) pair is separated by disjoint opens,
/// one containing the point and one containing the closed set.
fn regular(sp: &SoftSpace, trigger: Trigger) -> bool {
    let full = sp.universe().full_row();
    let opens = sp.opens();
    let member: Vec<u64> = opens.iter().map(SoftSet::member_mask).collect();
    let sep = separation_masks(opens, &member);
    for closed in sp.closed_sets() {
        let triggered = match trigger {
            Trigger::NotMember => full & !closed.member_mask(),
            Trigger::InComplement => closed.comember_mask(),
        };
        if triggered == 0 {
            continue;
        }
        // points with an open neighborhood disjoint from some open superset
        let mut separated = 0u64;
        for (i, open) in opens.iter().enumerate() {
            if closed.is_subset(open).expect("same universe") {
                separated |= sep[i];
            }
        }
        if triggered & !separated != 0 {
            return false;
        }
    }
    true
}

/// Points indistinguishable under `≈` must agree per parameter in every open.
fn t0u(sp: &SoftSpace) -> bool {
    for class in sp.point_classes() {
        for (i, &x) in class.iter().enumerate() {
            for &y in &class[i + 1..] {
                for open in sp.opens() {
                    for a in 0..sp.universe().param_count() {
                        if open.member_at_ids(x, a) != open.member_at_ids(y, a) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
