//! Named space predicates behind a common trait, registered by name and
//! selected at runtime by the mining commands. The standard registry holds
//! one strategy per separation axiom and one per reflected axiom; callers can
//! register their own.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::reflection::{check_t0_alpha, Alpha};
use crate::separation::{check_axiom, Axiom};
use crate::topology::SoftSpace;

/// A named yes/no question about a soft space.
///
/// `applies_to` guards partial predicates: the reflected axioms are only
/// posed for T0U spaces, so mining skips (and counts) everything else.
/// `holds` may assume `applies_to` returned true.
pub trait SpacePredicate: Send + Sync {
    fn name(&self) -> &str;

    fn applies_to(&self, _space: &SoftSpace) -> bool {
        true
    }

    fn holds(&self, space: &SoftSpace) -> bool;
}

struct AxiomPredicate(Axiom);

impl SpacePredicate for AxiomPredicate {
    fn name(&self) -> &str {
        self.0.name()
    }

    fn holds(&self, space: &SoftSpace) -> bool {
        check_axiom(space, self.0)
    }
}

struct AlphaPredicate(Alpha);

impl SpacePredicate for AlphaPredicate {
    fn name(&self) -> &str {
        self.0.name()
    }

    fn applies_to(&self, space: &SoftSpace) -> bool {
        check_axiom(space, Axiom::T0U)
    }

    fn holds(&self, space: &SoftSpace) -> bool {
        check_t0_alpha(space, self.0).expect("guarded by applies_to")
    }
}

/// Conjunction of predicates, applicable where every term is.
pub struct Conjunction {
    name: String,
    terms: Vec<Arc<dyn SpacePredicate>>,
}

impl Conjunction {
    pub fn new(terms: Vec<Arc<dyn SpacePredicate>>) -> Self {
        let name = terms.iter().map(|t| t.name()).collect::<Vec<_>>().join("&");
        Conjunction { name, terms }
    }
}

impl SpacePredicate for Conjunction {
    fn name(&self) -> &str {
        &self.name
    }

    fn applies_to(&self, space: &SoftSpace) -> bool {
        self.terms.iter().all(|t| t.applies_to(space))
    }

    fn holds(&self, space: &SoftSpace) -> bool {
        self.terms.iter().all(|t| t.holds(space))
    }
}

/// Name-indexed predicate strategies.
pub struct PredicateRegistry {
    entries: Vec<Arc<dyn SpacePredicate>>,
}

impl PredicateRegistry {
    /// Registry with the twelve separation axioms and the eight reflected
    /// axioms registered under their standard names.
    pub fn standard() -> Self {
        let mut reg = PredicateRegistry { entries: Vec::new() };
        for axiom in Axiom::ALL {
            reg.register(Arc::new(AxiomPredicate(axiom)));
        }
        for alpha in Alpha::ALL {
            reg.register(Arc::new(AlphaPredicate(alpha)));
        }
        reg
    }

    pub fn register(&mut self, predicate: Arc<dyn SpacePredicate>) {
        self.entries.retain(|e| !e.name().eq_ignore_ascii_case(predicate.name()));
        self.entries.push(predicate);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn SpacePredicate>> {
        self.entries
            .iter()
            .find(|e| e.name().eq_ignore_ascii_case(name.trim()))
            .cloned()
            .ok_or_else(|| Error::UnknownPredicate(name.trim().to_string()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    /// Parse `NAME` or `NAME&NAME&...` into a predicate.
    pub fn parse_predicate(&self, text: &str) -> Result<Arc<dyn SpacePredicate>> {
        let parts: Vec<&str> = text.split('&').map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::UnknownPredicate(text.to_string()));
        }
        if parts.len() == 1 {
            return self.get(parts[0]);
        }
        let terms = parts
            .into_iter()
            .map(|p| self.get(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(Conjunction::new(terms)))
    }

    /// Parse `ANTE[&ANTE...]=>CONS` into antecedent and consequent.
    pub fn parse_implication(
        &self,
        text: &str,
    ) -> Result<(Arc<dyn SpacePredicate>, Arc<dyn SpacePredicate>)> {
        let (ante, cons) = text
            .split_once("=>")
            .ok_or_else(|| Error::BadImplication(text.to_string()))?;
        if cons.contains("=>") {
            return Err(Error::BadImplication(text.to_string()));
        }
        let antecedent = self
            .parse_predicate(ante)
            .map_err(|_| Error::BadImplication(text.to_string()))?;
        let consequent = self
            .get(cons)
            .map_err(|_| Error::BadImplication(text.to_string()))?;
        Ok((antecedent, consequent))
    }
}

impl Default for PredicateRegistry {
    fn default() -> Self {
        PredicateRegistry::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::soft_set::{SoftSet, Universe};
    use crate::topology::SoftTopology;

    fn indiscrete() -> SoftSpace {
        let u = Universe::new(["x", "y"], ["a1", "a2"]).unwrap();
        let fam = vec![SoftSet::null(&u), SoftSet::absolute(&u)];
        SoftSpace::new(SoftTopology::validated(&u, fam).unwrap())
    }

    #[test]
    fn standard_registry_has_all_strategies() {
        let reg = PredicateRegistry::standard();
        assert_eq!(reg.names().len(), 20);
        assert!(reg.get("T0").is_ok());
        assert!(reg.get("t0k").is_ok());
        assert!(reg.get("T(0,TS)").is_ok());
        match reg.get("T5") {
            Err(Error::UnknownPredicate(name)) => assert_eq!(name, "T5"),
            _ => panic!("expected unknown predicate"),
        }
    }

    #[test]
    fn alpha_predicates_guard_on_t0u() {
        let reg = PredicateRegistry::standard();
        let p = reg.get("T(0,1)").unwrap();
        let sp = indiscrete();
        assert!(p.applies_to(&sp)); // indiscrete is T0U
        assert!(p.holds(&sp)); // one-point quotient
        let u = Universe::new(["x", "y"], ["a1", "a2"]).unwrap();
        let skewed = SoftSpace::new(
            SoftTopology::validated(
                &u,
                vec![
                    SoftSet::null(&u),
                    SoftSet::absolute(&u),
                    SoftSet::from_label_rows(&u, &[&["x"], &["y"]]).unwrap(),
                ],
            )
            .unwrap(),
        );
        assert!(!p.applies_to(&skewed));
    }

    #[test]
    fn conjunctions_parse_and_evaluate() {
        let reg = PredicateRegistry::standard();
        let p = reg.parse_predicate("Regular & T1").unwrap();
        assert_eq!(p.name(), "Regular&T1");
        let sp = indiscrete();
        assert!(!p.holds(&sp)); // regular yes, T1 no
    }

    #[test]
    fn implications_parse() {
        let reg = PredicateRegistry::standard();
        let (a, c) = reg.parse_implication("T0k&T1=>T2").unwrap();
        assert_eq!(a.name(), "T0k&T1");
        assert_eq!(c.name(), "T2");
        assert!(reg.parse_implication("T0k").is_err());
        assert!(reg.parse_implication("T0=>T1=>T2").is_err());
        assert!(reg.parse_implication("bogus=>T0").is_err());
    }

    #[test]
    fn custom_strategies_can_be_registered() {
        struct AtLeastTwoOpens;
        impl SpacePredicate for AtLeastTwoOpens {
            fn name(&self) -> &str {
                "AtLeastTwoOpens"
            }
            fn holds(&self, space: &SoftSpace) -> bool {
                space.opens().len() >= 2
            }
        }
        let mut reg = PredicateRegistry::standard();
        reg.register(Arc::new(AtLeastTwoOpens));
        assert!(reg.get("atleasttwoopens").unwrap().holds(&indiscrete()));
    }
}
