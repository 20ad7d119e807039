//! Interchangeable deciders for monomial equivalence of codes.

use crate::code::{equivalent_bruteforce, LinearCode, BRUTEFORCE_MAX_LENGTH};
use crate::correspondence::{equivalence_via_graphs, graph_from_code_f2, graph_from_code_f3, ternary_equivalence_via_twographs};
use crate::error::{Error, Result};
use crate::registry::Registry;
use crate::twograph::SWITCHING_MAX_ORDER;

pub trait EquivalenceStrategy: Send + Sync {
    fn describe(&self) -> &'static str;
    /// Whether `decide` can answer for this pair.
    fn applies(&self, c1: &LinearCode, c2: &LinearCode) -> bool;
    fn decide(&self, c1: &LinearCode, c2: &LinearCode) -> Result<bool>;
}

fn comparable(c1: &LinearCode, c2: &LinearCode) -> bool {
    c1.field() == c2.field() && c1.len() == c2.len() && c1.dim() == c2.dim()
}

struct BruteForce;

impl EquivalenceStrategy for BruteForce {
    fn describe(&self) -> &'static str {
        "search over monomial maps, lengths up to 10"
    }
    fn applies(&self, c1: &LinearCode, c2: &LinearCode) -> bool {
        c1.len().max(c2.len()) <= BRUTEFORCE_MAX_LENGTH
    }
    fn decide(&self, c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
        if !comparable(c1, c2) {
            return Ok(false);
        }
        Ok(equivalent_bruteforce(c1, c2)?.is_some())
    }
}

struct ViaGraphs;

impl EquivalenceStrategy for ViaGraphs {
    fn describe(&self) -> &'static str {
        "binary even LCD codes: isomorphism of projector graphs"
    }
    fn applies(&self, c1: &LinearCode, c2: &LinearCode) -> bool {
        [c1, c2].iter().all(|c| graph_from_code_f2(c).is_ok())
    }
    fn decide(&self, c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
        if c1.len() != c2.len() {
            return Ok(false);
        }
        equivalence_via_graphs(c1, c2)
    }
}

struct ViaTwoGraphs;

impl EquivalenceStrategy for ViaTwoGraphs {
    fn describe(&self) -> &'static str {
        "ternary LCD codes with ∓1 projectors: switching-class isomorphism"
    }
    fn applies(&self, c1: &LinearCode, c2: &LinearCode) -> bool {
        [c1, c2].iter().all(|c| c.len() <= SWITCHING_MAX_ORDER && graph_from_code_f3(c).is_ok())
    }
    fn decide(&self, c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
        if c1.len() != c2.len() {
            return Ok(false);
        }
        ternary_equivalence_via_twographs(c1, c2)
    }
}

/// First applicable of graph, twograph, bruteforce.
struct Auto;

impl EquivalenceStrategy for Auto {
    fn describe(&self) -> &'static str {
        "first applicable of graph, twograph, bruteforce"
    }
    fn applies(&self, c1: &LinearCode, c2: &LinearCode) -> bool {
        !comparable(c1, c2) || [&ViaGraphs as &dyn EquivalenceStrategy, &ViaTwoGraphs, &BruteForce].iter().any(|s| s.applies(c1, c2))
    }
    fn decide(&self, c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
        if !comparable(c1, c2) {
            return Ok(false);
        }
        for s in [&ViaGraphs as &dyn EquivalenceStrategy, &ViaTwoGraphs, &BruteForce] {
            if s.applies(c1, c2) {
                return s.decide(c1, c2);
            }
        }
        Err(Error::NotApplicable("no equivalence method handles these codes".into()))
    }
}

pub fn equivalence_strategies() -> Registry<dyn EquivalenceStrategy> {
    let mut r: Registry<dyn EquivalenceStrategy> = Registry::new("equivalence method");
    r.register("auto", Box::new(Auto))
        .register("bruteforce", Box::new(BruteForce))
        .register("graph", Box::new(ViaGraphs))
        .register("twograph", Box::new(ViaTwoGraphs));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Monomial;
    use crate::correspondence::{code_from_graph_f2, code_from_twograph_f3};
    use crate::graph::{paley, SimpleGraph};

    #[test]
    fn strategies_agree_on_binary_codes() {
        let reg = equivalence_strategies();
        let g = SimpleGraph::complete(3).disjoint_union(&SimpleGraph::complete(3));
        let c = code_from_graph_f2(&g).unwrap();
        let d = c.transform(&Monomial::permutation(vec![5, 0, 3, 1, 4, 2]).unwrap()).unwrap();
        for name in ["auto", "bruteforce", "graph"] {
            let s = reg.get(name).unwrap();
            assert!(s.applies(&c, &d), "{name}");
            assert!(s.decide(&c, &d).unwrap(), "{name}");
        }
        assert!(!reg.get("twograph").unwrap().applies(&c, &d));
    }

    #[test]
    fn auto_uses_graphs_beyond_bruteforce_range() {
        let c = code_from_graph_f2(&paley(17).unwrap()).unwrap();
        let reg = equivalence_strategies();
        assert!(!reg.get("bruteforce").unwrap().applies(&c, &c));
        assert!(reg.get("auto").unwrap().decide(&c, &c).unwrap());
    }

    #[test]
    fn ternary() {
        let c = code_from_twograph_f3(&SimpleGraph::complete(4)).unwrap();
        let d = c.transform(&Monomial::new(vec![1, 0, 3, 2], vec![2, 1, 1, 2]).unwrap()).unwrap();
        let reg = equivalence_strategies();
        for name in ["auto", "bruteforce", "twograph"] {
            assert!(reg.get(name).unwrap().decide(&c, &d).unwrap(), "{name}");
        }
        assert!(matches!(reg.get("nauty"), Err(Error::UnknownName { .. })));
    }
}
