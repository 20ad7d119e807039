//! Lower bounds on the dual minimum weight of binary codes spanned by
//! adjacency matrices of strongly regular graphs.
//!
//! For `C` the row span of `A` over `F_2`, a dual codeword of weight `w`
//! picks `w` columns summing to zero; counting common neighbors gives
//! `d(C^⊥) >= 1 + k / t` with `t = max(λ, μ)`. For `A + I` the same count
//! gives `1 + (k + 1) / (t + 1)`. Bounds are exact rationals; callers take
//! ceilings.

use std::fmt;

use num_rational::Ratio;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{AdjacencyKind, SimpleGraph, SrgParams};
use crate::matrix::ExactMatrix;

pub type Bound = Ratio<u64>;

/// Largest order accepted by [`verify_bounds`].
pub const VERIFY_MAX_ORDER: usize = 45;

/// `1 + k / max(λ, μ)`.
pub fn bound_dual_minwt_a(p: &SrgParams) -> Result<Bound> {
    bound_a_with(p, p.lambda.max(p.mu))
}

/// `1 + k / min(λ, μ)`, the reading used in some worked examples.
pub fn bound_dual_minwt_a_min(p: &SrgParams) -> Result<Bound> {
    bound_a_with(p, p.lambda.min(p.mu))
}

fn bound_a_with(p: &SrgParams, t: usize) -> Result<Bound> {
    if t == 0 {
        return Err(Error::Degenerate(format!("{p}: the common-neighbor count t is 0")));
    }
    Ok(Bound::from_integer(1) + Bound::new(p.k as u64, t as u64))
}

/// `1 + (k + 1) / (max(λ, μ) + 1)`.
pub fn bound_dual_minwt_ai(p: &SrgParams) -> Bound {
    Bound::from_integer(1) + Bound::new(p.k as u64 + 1, p.lambda.max(p.mu) as u64 + 1)
}

/// `1 + (k + 1) / (min(λ, μ) + 1)`.
pub fn bound_dual_minwt_ai_min(p: &SrgParams) -> Bound {
    Bound::from_integer(1) + Bound::new(p.k as u64 + 1, p.lambda.min(p.mu) as u64 + 1)
}

pub fn ceil(b: &Bound) -> u64 {
    b.ceil().to_integer()
}

/// Smallest even integer at least `b`.
pub fn ceil_even(b: &Bound) -> u64 {
    let c = ceil(b);
    c + c % 2
}

fn srg_params(g: &SimpleGraph) -> Result<SrgParams> {
    g.srg_params().ok_or_else(|| Error::PreconditionFailed("graph is not strongly regular".into()))
}

fn row_span(g: &SimpleGraph, plus_identity: bool) -> Result<LinearCode> {
    let f2 = FieldSpec::f2();
    let mut a = g.adjacency_over(AdjacencyKind::ZeroOne, &f2);
    if plus_identity {
        a = a.add(&ExactMatrix::identity(&f2, g.order()))?;
    }
    LinearCode::from_generator(&a)
}

/// Minimum weight of the dual, or `None` when the dual is zero.
fn dual_min_weight(c: &LinearCode, budget: u64) -> Result<Option<usize>> {
    let dual = c.dual();
    if dual.dim() == 0 {
        return Ok(None);
    }
    dual.min_weight_with_budget(budget).map(Some)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheck {
    pub params: SrgParams,
    /// `None` when `A` has full 2-rank and the dual is zero.
    pub dual_min_weight: Option<usize>,
    pub holds: bool,
}

/// For odd valency, the dual of the row span of `A` has even minimum weight.
pub fn parity_corollary_check(g: &SimpleGraph) -> Result<ParityCheck> {
    let params = srg_params(g)?;
    if params.k % 2 == 0 {
        return Err(Error::NotApplicable(format!("{params} has even valency")));
    }
    let d = dual_min_weight(&row_span(g, false)?, crate::code::DEFAULT_BUDGET)?;
    Ok(ParityCheck { params, dual_min_weight: d, holds: d.is_none_or(|d| d % 2 == 0) })
}

/// One generator choice in a [`BoundsReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundLine {
    pub code_dim: usize,
    pub dual_min_weight: Option<usize>,
    /// `None` when the bound is undefined (`t = 0`).
    pub bound_max: Option<Bound>,
    pub bound_min: Option<Bound>,
}

impl BoundLine {
    /// Actual weight minus the ceiling of the max-variant bound.
    pub fn slack(&self) -> Option<i64> {
        Some(self.dual_min_weight? as i64 - ceil(self.bound_max.as_ref()?) as i64)
    }

    /// The max-variant bound holds (vacuously when the dual is zero or the bound undefined).
    pub fn holds(&self) -> bool {
        self.slack().is_none_or(|s| s >= 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub params: SrgParams,
    pub from_a: BoundLine,
    pub from_a_plus_i: BoundLine,
    /// Set when the dual of the `A + I` code is even, so its bound rounds up to an even value.
    pub even_improved: Option<u64>,
}

impl BoundsReport {
    pub fn holds(&self) -> bool {
        self.from_a.holds()
            && self.from_a_plus_i.holds()
            && match (self.even_improved, self.from_a_plus_i.dual_min_weight) {
                (Some(b), Some(d)) => d as u64 >= b,
                _ => true,
            }
    }
}

fn fmt_bound(b: &Option<Bound>) -> String {
    match b {
        Some(b) => format!("{b}(ceil {})", ceil(b)),
        None => "undefined".into(),
    }
}

impl fmt::Display for BoundLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dual_min_weight.map_or("none".into(), |d| d.to_string());
        let slack = self.slack().map_or("n/a".into(), |s| s.to_string());
        write!(
            f,
            "dim={} dual_d={d} bound_max={} bound_min={} slack={slack}",
            self.code_dim,
            fmt_bound(&self.bound_max),
            fmt_bound(&self.bound_min)
        )
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.params)?;
        writeln!(f, "  A:   {}", self.from_a)?;
        write!(f, "  A+I: {}", self.from_a_plus_i)?;
        if let Some(b) = self.even_improved {
            write!(f, "\n  A+I dual is even: bound rounds up to {b}")?;
        }
        Ok(())
    }
}

/// Computes both bounds and the actual dual minimum weights by enumeration.
/// Returns [`Error::TheoremViolation`] if a bound fails.
pub fn verify_bounds(g: &SimpleGraph) -> Result<BoundsReport> {
    verify_bounds_with_budget(g, crate::code::DEFAULT_BUDGET)
}

pub fn verify_bounds_with_budget(g: &SimpleGraph, budget: u64) -> Result<BoundsReport> {
    let params = srg_params(g)?;
    if params.v > VERIFY_MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("bound verification supports v <= {VERIFY_MAX_ORDER}")));
    }
    let ca = row_span(g, false)?;
    let cai = row_span(g, true)?;
    let from_a = BoundLine {
        code_dim: ca.dim(),
        dual_min_weight: dual_min_weight(&ca, budget)?,
        bound_max: bound_dual_minwt_a(&params).ok(),
        bound_min: bound_dual_minwt_a_min(&params).ok(),
    };
    let from_a_plus_i = BoundLine {
        code_dim: cai.dim(),
        dual_min_weight: dual_min_weight(&cai, budget)?,
        bound_max: Some(bound_dual_minwt_ai(&params)),
        bound_min: Some(bound_dual_minwt_ai_min(&params)),
    };
    let dual_ai = cai.dual();
    let even_improved = (dual_ai.dim() > 0 && dual_ai.is_even()?).then(|| ceil_even(&bound_dual_minwt_ai(&params)));
    let report = BoundsReport { params, from_a, from_a_plus_i, even_improved };
    if !report.holds() {
        return Err(Error::TheoremViolation(format!("dual minimum-weight bound fails:\n{report}")));
    }
    Ok(report)
}

/// Strongly regular graphs with built-in constructions.
pub fn builtin_srgs() -> Vec<(String, SimpleGraph)> {
    let mut out = vec![
        ("pentagon".to_string(), SimpleGraph::cycle(5)),
        ("petersen".to_string(), SimpleGraph::petersen()),
        ("T(5)".to_string(), SimpleGraph::triangular(5)),
    ];
    for q in [9, 13, 17, 25, 29, 37, 41] {
        out.push((format!("paley({q})"), crate::graph::paley(q).expect("valid Paley order")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: u64, b: u64) -> Bound {
        Bound::new(a, b)
    }

    #[test]
    fn formula_values() {
        assert_eq!(bound_dual_minwt_a(&SrgParams::new(10, 3, 0, 1)).unwrap(), r(4, 1));
        assert_eq!(bound_dual_minwt_a(&SrgParams::new(41, 20, 9, 10)).unwrap(), r(3, 1));
        assert_eq!(bound_dual_minwt_a(&SrgParams::new(5, 2, 0, 1)).unwrap(), r(3, 1));
        assert_eq!(bound_dual_minwt_ai(&SrgParams::new(41, 20, 9, 10)), r(32, 11));
        assert_eq!(bound_dual_minwt_ai_min(&SrgParams::new(41, 20, 9, 10)), r(31, 10));
        assert_eq!(bound_dual_minwt_ai(&SrgParams::new(10, 3, 0, 1)), r(3, 1));
        assert_eq!(bound_dual_minwt_ai(&SrgParams::new(5, 2, 0, 1)), r(5, 2));
        assert!(matches!(bound_dual_minwt_a(&SrgParams::new(4, 1, 0, 0)), Err(Error::Degenerate(_))));
        assert!(matches!(bound_dual_minwt_a_min(&SrgParams::new(10, 3, 0, 1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil(&r(32, 11)), 3);
        assert_eq!(ceil(&r(31, 10)), 4);
        assert_eq!(ceil(&r(3, 1)), 3);
        assert_eq!(ceil_even(&r(32, 11)), 4);
        assert_eq!(ceil_even(&r(4, 1)), 4);
    }

    #[test]
    fn monotone_in_k() {
        for t in 1..6 {
            for k in 1..30 {
                let lo = SrgParams::new(100, k, t, t);
                let hi = SrgParams::new(100, k + 1, t, t);
                assert!(bound_dual_minwt_a(&lo).unwrap() < bound_dual_minwt_a(&hi).unwrap());
                assert!(bound_dual_minwt_ai(&lo) < bound_dual_minwt_ai(&hi));
            }
        }
    }

    #[test]
    fn petersen() {
        let rep = verify_bounds(&SimpleGraph::petersen()).unwrap();
        assert!(rep.from_a.dual_min_weight.unwrap() >= 4);
        let parity = parity_corollary_check(&SimpleGraph::petersen()).unwrap();
        assert!(parity.holds);
        assert_eq!(parity.dual_min_weight.map(|d| d % 2), Some(0));
    }

    #[test]
    fn not_applicable() {
        for g in [SimpleGraph::triangular(5), crate::graph::paley(13).unwrap(), SimpleGraph::cycle(5)] {
            assert!(matches!(parity_corollary_check(&g), Err(Error::NotApplicable(_))));
        }
        assert!(matches!(parity_corollary_check(&SimpleGraph::path(4)), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn every_builtin_graph() {
        for (name, g) in builtin_srgs() {
            let rep = verify_bounds(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(rep.holds(), "{name}");
        }
    }

    #[test]
    fn paley41_even_improvement() {
        let rep = verify_bounds(&crate::graph::paley(41).unwrap()).unwrap();
        assert_eq!(rep.from_a.code_dim, 20);
        assert_eq!(rep.from_a_plus_i.code_dim, 21);
        assert_eq!(rep.even_improved, Some(4));
        assert_eq!(rep.from_a_plus_i.dual_min_weight, Some(10));
    }
}
