//! Two-graphs as triple systems and as Seidel switching classes.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, SimpleGraph};

/// Largest order for which switching classes are searched exhaustively.
pub const SWITCHING_MAX_ORDER: usize = 16;

pub type Triple = [usize; 3];

/// Vertex set `0..v` with a set of ascending triples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoGraph {
    v: usize,
    triples: BTreeSet<Triple>,
}

fn induced_edges(g: &SimpleGraph, [a, b, c]: Triple) -> usize {
    usize::from(g.has_edge(a, b)) + usize::from(g.has_edge(a, c)) + usize::from(g.has_edge(b, c))
}

impl TwoGraph {
    /// Validates range and ordering of the triples and the even-4-subset axiom.
    pub fn new(v: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let triples: BTreeSet<Triple> = triples.into_iter().collect();
        for t in &triples {
            if !(t[0] < t[1] && t[1] < t[2] && t[2] < v) {
                return Err(Error::BadInput(format!("triple {t:?} is not ascending within 0..{v}")));
            }
        }
        if !is_two_graph(v, &triples) {
            return Err(Error::BadInput("some 4-subset contains an odd number of triples".into()));
        }
        Ok(TwoGraph { v, triples })
    }

    /// Triples inducing an odd number of edges.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let v = g.order();
        let mut triples = BTreeSet::new();
        for a in 0..v {
            for b in a + 1..v {
                for c in b + 1..v {
                    if induced_edges(g, [a, b, c]) % 2 == 1 {
                        triples.insert([a, b, c]);
                    }
                }
            }
        }
        debug_assert!(is_two_graph(v, &triples));
        TwoGraph { v, triples }
    }

    pub fn order(&self) -> usize {
        self.v
    }

    pub fn triples(&self) -> &BTreeSet<Triple> {
        &self.triples
    }

    pub fn contains(&self, t: Triple) -> bool {
        let mut s = t;
        s.sort_unstable();
        self.triples.contains(&s)
    }

    /// Image under the vertex map `phi`.
    pub fn relabel(&self, phi: &[usize]) -> TwoGraph {
        let triples = self
            .triples
            .iter()
            .map(|t| {
                let mut s = [phi[t[0]], phi[t[1]], phi[t[2]]];
                s.sort_unstable();
                s
            })
            .collect();
        TwoGraph { v: self.v, triples }
    }

    /// A graph in the switching class: vertex 0 isolated, and `x ~ y` for
    /// `0 < x < y` exactly when `{0, x, y}` is a triple.
    pub fn representative(&self) -> SimpleGraph {
        SimpleGraph::from_fn(self.v, |x, y| x > 0 && self.triples.contains(&[0, x, y]))
    }
}

/// Every 4-subset of `0..v` contains an even number of triples from `triples`.
pub fn is_two_graph(v: usize, triples: &BTreeSet<Triple>) -> bool {
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                for d in c + 1..v {
                    let count = [[a, b, c], [a, b, d], [a, c, d], [b, c, d]].iter().filter(|t| triples.contains(*t)).count();
                    if count % 2 == 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Seidel switching: complements adjacency between `s` and its complement.
pub fn switch(g: &SimpleGraph, s: &[usize]) -> Result<SimpleGraph> {
    let v = g.order();
    let mut inside = vec![false; v];
    for &x in s {
        if x >= v {
            return Err(Error::VertexOutOfRange { vertex: x, order: v });
        }
        inside[x] = true;
    }
    Ok(SimpleGraph::from_fn(v, |x, y| g.has_edge(x, y) ^ (inside[x] != inside[y])))
}

fn subset_from_mask(mask: u64, v: usize) -> Vec<usize> {
    (0..v).filter(|&x| mask >> x & 1 == 1).collect()
}

/// Lexicographically least canonical form over the switchings by subsets
/// of `1..v` (a set and its complement switch identically), with the
/// minimizing subset.
pub fn switching_class_form(g: &SimpleGraph) -> Result<(SimpleGraph, Vec<usize>)> {
    let v = g.order();
    if v > SWITCHING_MAX_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "switching-class search supports at most {SWITCHING_MAX_ORDER} vertices, got {v}"
        )));
    }
    if v == 0 {
        return Ok((g.clone(), Vec::new()));
    }
    let best = (0u64..1 << (v - 1))
        .into_par_iter()
        .map(|half| {
            let s = subset_from_mask(half << 1, v);
            let form = canonical_form(&switch(g, &s).expect("in range")).expect("within budget").graph;
            (form, s)
        })
        .min()
        .expect("at least one switching");
    Ok(best)
}

/// Witness `(s, phi)`: switching `g1` on `s` and renaming by `phi` gives `g2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingWitness {
    pub subset: Vec<usize>,
    pub phi: Vec<usize>,
}

pub fn switching_class_iso(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<SwitchingWitness>> {
    if g1.order() != g2.order() {
        return Ok(None);
    }
    let v = g1.order();
    let (f1, s1) = switching_class_form(g1)?;
    let (f2, s2) = switching_class_form(g2)?;
    if f1 != f2 {
        return Ok(None);
    }
    let h1 = switch(g1, &s1)?;
    let h2 = switch(g2, &s2)?;
    let phi = crate::graph::is_isomorphic(&h1, &h2)?.ok_or_else(|| {
        Error::TheoremViolation("graphs with equal canonical forms are not isomorphic".into())
    })?;
    // g2 = switch(phi(switch(g1, s1)), s2) = phi(switch(g1, s1 Δ phi^-1(s2)))
    let mut inv = vec![0; v];
    for (x, &y) in phi.iter().enumerate() {
        inv[y] = x;
    }
    let mut mark = vec![false; v];
    for &x in &s1 {
        mark[x] ^= true;
    }
    for &y in &s2 {
        mark[inv[y]] ^= true;
    }
    let subset: Vec<usize> = (0..v).filter(|&x| mark[x]).collect();
    let witness = SwitchingWitness { subset, phi };
    debug_assert_eq!(&switch(g1, &witness.subset)?.relabel(&witness.phi), g2);
    Ok(Some(witness))
}
