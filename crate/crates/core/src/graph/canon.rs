//! Canonical labeling by partition refinement and backtracking.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton cell at each level and refines to an equitable partition.
//! Leaves are discrete partitions; the canonical form is the leaf whose
//! relabeled adjacency rows are lexicographically least. Automorphisms
//! discovered at leaves prune the tree: children in one orbit of the
//! pointwise stabilizer of the current prefix have identical subtrees, and a
//! leaf matching the first leaf sends the search back to where its path left
//! the first path.

use super::SimpleGraph;
use crate::error::{Error, Result};

pub const CANON_MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// The relabeled graph; equal for isomorphic inputs.
    pub graph: SimpleGraph,
    /// `labeling[i]` is the input vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
}

type Cells = Vec<Vec<usize>>;

struct Canon<'a> {
    adj: &'a [u64],
    v: usize,
    first: Option<(Vec<usize>, Vec<u64>)>,
    first_prefix: Vec<usize>,
    best: Option<(Vec<usize>, Vec<u64>)>,
    automorphisms: Vec<Vec<usize>>,
}

fn mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &x| m | 1 << x)
}

impl Canon<'_> {
    /// Splits cells by neighbor counts into every cell until stable.
    fn refine(&self, cells: &mut Cells) {
        loop {
            let masks: Vec<u64> = cells.iter().map(|c| mask(c)).collect();
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&x| (masks.iter().map(|m| (self.adj[x] & m).count_ones()).collect(), x))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, x)| *x).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        lab.iter()
            .map(|&x| lab.iter().enumerate().fold(0u64, |row, (j, &y)| row | (((self.adj[x] >> y) & 1) << j)))
            .collect()
    }

    /// Orbit representative of every vertex under the stored automorphisms
    /// that fix `prefix` pointwise.
    fn stabilizer_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.v).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.automorphisms {
            if prefix.iter().all(|&x| g[x] == x) {
                for (x, &gx) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..self.v).map(|x| find(&mut parent, x)).collect()
    }

    /// Returns `Some(d)` to abandon every node deeper than prefix length `d`.
    fn search(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        self.refine(&mut cells);
        if cells.len() == self.v {
            return self.leaf(cells.iter().map(|c| c[0]).collect(), prefix);
        }
        let depth = prefix.len();
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .expect("partition is not discrete");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for w in candidates {
            if !explored.is_empty() {
                let orbit = self.stabilizer_orbits(prefix);
                if explored.iter().any(|&e| orbit[e] == orbit[w]) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&x| x != w).collect();
            child[target] = vec![w];
            child.insert(target + 1, rest);
            prefix.push(w);
            let jump = self.search(child, prefix);
            prefix.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let cert = self.certificate(&lab);
        let Some((first_lab, first_cert)) = &self.first else {
            self.first = Some((lab.clone(), cert.clone()));
            self.first_prefix = prefix.to_vec();
            self.best = Some((lab, cert));
            return None;
        };
        if &cert == first_cert {
            let gamma = self.map_between(first_lab, &lab);
            let common = self.first_prefix.iter().zip(prefix).take_while(|(a, b)| a == b).count();
            self.automorphisms.push(gamma);
            return Some(common);
        }
        let (best_lab, best_cert) = self.best.as_ref().expect("set with first");
        match cert.cmp(best_cert) {
            std::cmp::Ordering::Less => self.best = Some((lab, cert)),
            std::cmp::Ordering::Equal => {
                let gamma = self.map_between(best_lab, &lab);
                self.automorphisms.push(gamma);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    fn map_between(&self, from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; self.v];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        gamma
    }
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    let v = g.order();
    if v > CANON_MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("canonical labeling supports at most {CANON_MAX_ORDER} vertices, got {v}")));
    }
    if v == 0 {
        return Ok(CanonicalForm { graph: g.clone(), labeling: Vec::new() });
    }
    let adj: Vec<u64> = (0..v).map(|x| g.adjacency_bits().row(x)[0]).collect();
    let mut canon = Canon { adj: &adj, v, first: None, first_prefix: Vec::new(), best: None, automorphisms: Vec::new() };
    canon.search(vec![(0..v).collect()], &mut Vec::new());
    let (labeling, _) = canon.best.expect("search visits at least one leaf");
    let mut position = vec![0; v];
    for (i, &x) in labeling.iter().enumerate() {
        position[x] = i;
    }
    Ok(CanonicalForm { graph: g.relabel(&position), labeling })
}

/// Isomorphism test through canonical forms. The witness `phi` satisfies
/// `g1.has_edge(x, y) == g2.has_edge(phi[x], phi[y])`.
pub fn is_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    if g1.order() != g2.order() {
        return Ok(None);
    }
    let (c1, c2) = (canonical_form(g1)?, canonical_form(g2)?);
    if g1.edge_count() != g2.edge_count() || c1.graph != c2.graph {
        return Ok(None);
    }
    let mut phi = vec![0; g1.order()];
    for (&a, &b) in c1.labeling.iter().zip(&c2.labeling) {
        phi[a] = b;
    }
    debug_assert_eq!(&g1.relabel(&phi), g2);
    Ok(Some(phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::paley;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffled(g: &SimpleGraph, seed: u64) -> (SimpleGraph, Vec<usize>) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut phi: Vec<usize> = (0..g.order()).collect();
        phi.shuffle(&mut rng);
        (g.relabel(&phi), phi)
    }

    #[test]
    fn relabelings_of_paley17_agree() {
        let g = paley(17).unwrap();
        let (a, _) = shuffled(&g, 1);
        let (b, _) = shuffled(&g, 2);
        assert_eq!(canonical_form(&a).unwrap().graph, canonical_form(&b).unwrap().graph);
    }

    #[test]
    fn distinguishes_k3_and_path() {
        let a = canonical_form(&SimpleGraph::complete(3)).unwrap();
        let b = canonical_form(&SimpleGraph::path(3)).unwrap();
        assert_ne!(a.graph, b.graph);
    }

    #[test]
    fn pentagon_is_self_complementary() {
        let c5 = SimpleGraph::cycle(5);
        let comp = c5.complement();
        assert_eq!(canonical_form(&c5).unwrap().graph, canonical_form(&comp).unwrap().graph);
        let phi = is_isomorphic(&c5, &comp).unwrap().expect("isomorphic");
        assert_eq!(c5.relabel(&phi), comp);
        // independent check: some permutation of 5 vertices maps C5 onto its complement
        let found = permutations(5).into_iter().any(|p| c5.relabel(&p) == comp);
        assert!(found);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn witness_verifies() {
        let g = SimpleGraph::petersen();
        let (h, _) = shuffled(&g, 9);
        let phi = is_isomorphic(&g, &h).unwrap().unwrap();
        assert_eq!(g.relabel(&phi), h);
        assert_eq!(is_isomorphic(&paley(13).unwrap(), &SimpleGraph::cycle(13)).unwrap(), None);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for g in [SimpleGraph::new(64), SimpleGraph::complete(40), SimpleGraph::cycle(64), SimpleGraph::kneser(7, 2)] {
            let (h, _) = shuffled(&g, 3);
            assert!(is_isomorphic(&g, &h).unwrap().is_some());
        }
        let cliques = (0..8).fold(SimpleGraph::new(0), |acc, _| acc.disjoint_union(&SimpleGraph::complete(8)));
        let (h, _) = shuffled(&cliques, 4);
        assert!(is_isomorphic(&cliques, &h).unwrap().is_some());
    }

    #[test]
    fn canonical_form_is_a_complete_invariant_on_small_graphs() {
        // all graphs on 5 vertices: canonical forms agree iff brute-force isomorphic
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let graphs: Vec<SimpleGraph> = (0u32..1 << pairs.len())
            .step_by(7)
            .map(|m| {
                let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e).collect();
                SimpleGraph::from_edges(5, &e).unwrap()
            })
            .collect();
        let perms = permutations(5);
        let forms: Vec<SimpleGraph> = graphs.iter().map(|g| canonical_form(g).unwrap().graph).collect();
        for i in 0..graphs.len() {
            for j in i..graphs.len() {
                let brute = perms.iter().any(|p| graphs[i].relabel(p) == graphs[j]);
                assert_eq!(forms[i] == forms[j], brute);
            }
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(canonical_form(&SimpleGraph::new(65)), Err(Error::BudgetExceeded(_))));
    }
}
