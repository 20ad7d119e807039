//! Self-check suites. Each suite reruns one family of claims on fixed
//! constructions and seeded random samples, and reports one [`Claim`] per
//! property checked.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{builtin_srgs, ceil, parity_corollary_check, verify_bounds, bound_dual_minwt_ai, bound_dual_minwt_ai_min};
use crate::code::{equivalent_bruteforce, griesmer_max_d, LinearCode};
use crate::correspondence::*;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{canonical_form, paley, SimpleGraph};
use crate::io::{write_code, write_graph};
use crate::matrix::ExactMatrix;
use crate::registry::Registry;
use crate::sample::{random_code, random_even_lcd_code, random_lcd_code, random_monomial, random_permutation};
use crate::twograph::{switch, switching_class_form};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random instances per sampled claim.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, samples: 500 }
    }
}

/// Input files and a command line that reproduce a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repro {
    pub files: Vec<(String, String)>,
    pub command: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub passed: bool,
    pub details: String,
    pub repro: Option<Repro>,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "CLAIM {} {status} {}", self.id, self.details)
    }
}

enum Outcome {
    Pass(String),
    Fail(String, Option<Repro>),
}

fn claim(id: &str, body: impl FnOnce() -> Result<Outcome>) -> Claim {
    let (passed, details, repro) = match body() {
        Ok(Outcome::Pass(d)) => (true, d, None),
        Ok(Outcome::Fail(d, r)) => (false, d, r),
        Err(e) => (false, format!("error: {e}"), None),
    };
    Claim { id: id.to_string(), passed, details, repro }
}

fn fail_code(msg: String, c: &LinearCode, command: &str) -> Outcome {
    Outcome::Fail(msg, Some(Repro { files: vec![("input.code".into(), write_code(c))], command: format!("lcdgraph {command}") }))
}

fn fail_graph(msg: String, g: &SimpleGraph, command: &str) -> Outcome {
    Outcome::Fail(msg, Some(Repro { files: vec![("input.graph".into(), write_graph(g))], command: format!("lcdgraph {command}") }))
}

/// Independent stream per claim: FNV-1a of the id mixed into the seed.
fn rng_for(cfg: &VerifyConfig, id: &str) -> ChaCha8Rng {
    let h = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(cfg.seed ^ h)
}

fn field_for(t: usize) -> FieldSpec {
    if t.is_multiple_of(2) {
        FieldSpec::f2()
    } else {
        FieldSpec::f3()
    }
}

pub trait VerifySuite: Send + Sync {
    fn describe(&self) -> &'static str;
    fn run(&self, cfg: &VerifyConfig) -> Vec<Claim>;
}

struct ProjectorSuite;

impl VerifySuite for ProjectorSuite {
    fn describe(&self) -> &'static str {
        "orthogonal projectors of LCD codes over F2 and F3"
    }

    fn run(&self, cfg: &VerifyConfig) -> Vec<Claim> {
        vec![
            projector_properties(cfg),
            lcd_criteria(cfg),
            diagonal_self_inner(cfg),
            monomial_transfer(cfg),
            even_iff_adjacency(cfg),
            counterexample_claim("projector.counterexample"),
        ]
    }
}

fn projector_properties(cfg: &VerifyConfig) -> Claim {
    let id = "projector.symmetric-idempotent-span";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        for t in 0..cfg.samples {
            let n = rng.gen_range(2..=12);
            let c = random_lcd_code(&mut rng, &field_for(t), n);
            let pi = c.projector()?;
            let annihilates = c.dual().generator().mul(&pi)?.is_zero();
            if !(pi.is_symmetric() && pi.is_idempotent() && LinearCode::from_generator(&pi)? == c && annihilates) {
                return Ok(fail_code(format!("projector of {c} is not the orthogonal projector onto it"), &c, "projector input.code"));
            }
        }
        Ok(Outcome::Pass(format!("{} LCD codes: projector symmetric, idempotent, spans C, kills the dual", cfg.samples)))
    })
}

/// Brute-force `C ∩ C^⊥ = {0}` by listing codewords.
fn lcd_by_enumeration(c: &LinearCode) -> Result<bool> {
    let f = c.field();
    let g = c.generator();
    for w in c.codewords(crate::code::DEFAULT_BUDGET)? {
        if w.iter().all(|&x| x == 0) {
            continue;
        }
        let orthogonal = (0..g.rows()).all(|i| g.row(i).iter().zip(&w).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))) == 0);
        if orthogonal {
            return Ok(false);
        }
    }
    Ok(true)
}

fn lcd_criteria(cfg: &VerifyConfig) -> Claim {
    let id = "projector.lcd-criteria-agree";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        let mut lcd = 0;
        for t in 0..cfg.samples {
            let n = rng.gen_range(1..=8);
            let k = rng.gen_range(0..=n);
            let c = random_code(&mut rng, &field_for(t), n, k);
            let by_gram = c.is_lcd();
            let by_hull = c.hull_dim() == 0;
            let by_words = lcd_by_enumeration(&c)?;
            if by_gram != by_hull || by_gram != by_words {
                return Ok(fail_code(format!("{c}: gram {by_gram}, hull {by_hull}, enumeration {by_words}"), &c, "lcd input.code"));
            }
            lcd += usize::from(by_gram);
        }
        Ok(Outcome::Pass(format!("{} codes ({lcd} LCD): Gram rank, hull and enumeration agree", cfg.samples)))
    })
}

fn diagonal_self_inner(cfg: &VerifyConfig) -> Claim {
    let id = "projector.diagonal-is-row-norm";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        for t in 0..cfg.samples {
            let n = rng.gen_range(2..=12);
            let c = random_lcd_code(&mut rng, &field_for(t), n);
            let pi = c.projector()?;
            let f = c.field();
            for i in 0..n {
                let norm = pi.row(i).iter().fold(0, |acc, &x| f.add(acc, f.mul(x, x)));
                if norm != pi.get(i, i) {
                    return Ok(fail_code(format!("{c}: row {} has norm {norm}, diagonal {}", i + 1, pi.get(i, i)), &c, "projector input.code"));
                }
            }
        }
        Ok(Outcome::Pass(format!("{} LCD codes: diagonal entry equals (r_i, r_i)", cfg.samples)))
    })
}

fn monomial_transfer(cfg: &VerifyConfig) -> Claim {
    let id = "projector.monomial-transfer";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        for t in 0..cfg.samples {
            let f = field_for(t);
            let n = rng.gen_range(2..=14);
            let c = random_lcd_code(&mut rng, &f, n);
            let m = random_monomial(&mut rng, &f, n);
            let nm = m.to_matrix(&f)?;
            let moved = c.transform(&m)?.projector()?;
            let conj = nm.transpose().mul(&c.projector()?)?.mul(&nm)?;
            if moved != conj {
                return Ok(fail_code(format!("{c}: projector(CN) != N^T projector(C) N for {m:?}"), &c, "projector input.code"));
            }
        }
        Ok(Outcome::Pass(format!("{} (code, monomial) pairs over F2 and F3", cfg.samples)))
    })
}

fn even_iff_adjacency(cfg: &VerifyConfig) -> Claim {
    let id = "projector.even-iff-adjacency";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        let f2 = FieldSpec::f2();
        let mut even = 0;
        for t in 0..cfg.samples {
            let n = rng.gen_range(3..=12);
            let c = if t % 2 == 0 { random_even_lcd_code(&mut rng, n) } else { random_lcd_code(&mut rng, &f2, n) };
            let pi = c.projector()?;
            let adjacency = pi.is_symmetric() && pi.diagonal().iter().all(|&d| d == 0);
            let is_even = c.is_even()?;
            if adjacency != is_even {
                return Ok(fail_code(format!("{c}: even {is_even}, projector is adjacency {adjacency}"), &c, "projector input.code"));
            }
            even += usize::from(is_even);
        }
        Ok(Outcome::Pass(format!("{} binary LCD codes ({even} even): projector is an adjacency matrix iff even", cfg.samples)))
    })
}

fn counterexample_claim(id: &str) -> Claim {
    claim(id, || {
        let f3 = FieldSpec::f3();
        let c = counterexample_code(3, &ExactMatrix::all_ones(&f3, 3, 3))?;
        let pi = c.projector()?;
        let expected = ExactMatrix::identity(&f3, 3)
            .hstack(&ExactMatrix::all_ones(&f3, 3, 3))?
            .vstack(&ExactMatrix::all_ones(&f3, 3, 3).hstack(&ExactMatrix::zeros(&f3, 3, 3))?)?;
        let ok = c.is_lcd() && c.dim() % 3 == 0 && pi == expected && !twograph_rowweight_check(&c)?;
        if !ok {
            return Ok(fail_code("(I3 | J3) does not behave as expected".into(), &c, "projector input.code"));
        }
        Ok(Outcome::Pass("(I3 | J3): LCD, dim 3, projector [[I, J], [J, 0]] has ones on the diagonal".into()))
    })
}

struct DichotomySuite;

impl VerifySuite for DichotomySuite {
    fn describe(&self) -> &'static str {
        "punctured versus shortened binary LCD codes"
    }

    fn run(&self, cfg: &VerifyConfig) -> Vec<Claim> {
        vec![exactly_one(cfg), even_punctures(cfg)]
    }
}

fn has_zero_column(m: &ExactMatrix) -> bool {
    (0..m.cols()).any(|j| (0..m.rows()).all(|i| m.get(i, j) == 0))
}

/// Both `d(C)` and `d(C^⊥)` are at least 2.
fn distances_at_least_two(c: &LinearCode) -> bool {
    let dual = c.dual();
    c.dim() > 0 && dual.dim() > 0 && !has_zero_column(c.generator()) && !has_zero_column(dual.generator())
}

fn exactly_one(cfg: &VerifyConfig) -> Claim {
    let id = "dichotomy.exactly-one-predicted-by-diagonal";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        let f2 = FieldSpec::f2();
        let mut coords = 0;
        let mut shortened_side = 0;
        let mut t = 0;
        while t < cfg.samples {
            let n = rng.gen_range(3..=14);
            let c = random_lcd_code(&mut rng, &f2, n);
            if !distances_at_least_two(&c) {
                continue;
            }
            t += 1;
            let pi = c.projector()?;
            for i in 0..n {
                let p = c.puncture(&[i])?.is_lcd();
                let s = c.shorten(&[i])?.is_lcd();
                let predicted_shortened = pi.get(i, i) == 1;
                if p == s || s != predicted_shortened || c.puncture_shorten_dichotomy(i).is_err() {
                    let cmd = format!("puncture input.code {} && lcdgraph shorten input.code {}", i + 1, i + 1);
                    return Ok(fail_code(format!("{c} coordinate {}: punctured LCD {p}, shortened LCD {s}, diagonal {}", i + 1, pi.get(i, i)), &c, &cmd));
                }
                coords += 1;
                shortened_side += usize::from(s);
            }
        }
        Ok(Outcome::Pass(format!(
            "{} codes, {coords} coordinates ({shortened_side} shortened-LCD): exactly one side LCD, diagonal predicts it",
            cfg.samples
        )))
    })
}

fn even_punctures(cfg: &VerifyConfig) -> Claim {
    let id = "dichotomy.even-codes-puncture-to-lcd";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        let mut t = 0;
        while t < cfg.samples {
            let n = rng.gen_range(3..=14);
            let c = random_even_lcd_code(&mut rng, n);
            if !distances_at_least_two(&c) {
                continue;
            }
            t += 1;
            for i in 0..n {
                if !c.puncture(&[i])?.is_lcd() {
                    return Ok(fail_code(format!("{c}: puncturing coordinate {} loses LCD", i + 1), &c, &format!("puncture input.code {}", i + 1)));
                }
            }
        }
        Ok(Outcome::Pass(format!("{} even LCD codes: every puncture is LCD", cfg.samples)))
    })
}

struct BinaryBijectionSuite;

impl VerifySuite for BinaryBijectionSuite {
    fn describe(&self) -> &'static str {
        "binary even LCD codes and graphs with A^2 = A"
    }

    fn run(&self, cfg: &VerifyConfig) -> Vec<Claim> {
        vec![graphs_round_trip(), search_is_complete(), codes_round_trip(cfg), binary_equivalence_matches_iso()]
    }
}

/// Largest order for the exhaustive round trip.
pub const BINARY_ROUND_TRIP_MAX: usize = 8;
/// Largest order for the all-pairs equivalence comparison.
pub const BINARY_PAIRS_MAX: usize = 7;
/// Largest order at which the degree shortcut is compared with a plain filter.
pub const BINARY_UNFILTERED_MAX: usize = 7;
/// Largest order for the ternary search.
pub const TERNARY_SEARCH_MAX: usize = 7;

fn graphs_round_trip() -> Claim {
    claim("binary-bijection.graphs-round-trip", || {
        let mut counts = Vec::new();
        for v in 0..=BINARY_ROUND_TRIP_MAX {
            let graphs = idempotent_graphs_f2(v)?;
            for g in &graphs {
                let c = match code_from_graph_f2(g) {
                    Ok(c) => c,
                    Err(e) => return Ok(fail_graph(format!("{e}"), g, "code-from-graph input.graph --field 2")),
                };
                if !(c.is_lcd() && c.is_even()?) || graph_from_code_f2(&c)? != *g {
                    return Ok(fail_graph("graph does not round-trip".into(), g, "code-from-graph input.graph --field 2"));
                }
            }
            counts.push(format!("{v}:{}", graphs.len()));
        }
        Ok(Outcome::Pass(format!("labeled idempotent graphs per order {}", counts.join(" "))))
    })
}

fn search_is_complete() -> Claim {
    claim("binary-bijection.search-complete", || {
        for v in 0..=BINARY_UNFILTERED_MAX {
            let mut a = idempotent_graphs_f2(v)?;
            let mut b = idempotent_graphs_f2_unfiltered(v)?;
            a.sort();
            b.sort();
            if a != b {
                return Ok(Outcome::Fail(format!("v={v}: even-degree search finds {} graphs, plain filter {}", a.len(), b.len()), None));
            }
        }
        Ok(Outcome::Pass(format!("even-degree search equals filtering all graphs for v <= {BINARY_UNFILTERED_MAX}")))
    })
}

fn codes_round_trip(cfg: &VerifyConfig) -> Claim {
    let id = "binary-bijection.codes-round-trip";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        for _ in 0..cfg.samples {
            let n = rng.gen_range(3..=14);
            let c = random_even_lcd_code(&mut rng, n);
            let g = graph_from_code_f2(&c)?;
            if code_from_graph_f2(&g)? != c {
                return Ok(fail_code(format!("{c} does not round-trip"), &c, "graph-from-code input.code"));
            }
        }
        Ok(Outcome::Pass(format!("{} random even LCD codes", cfg.samples)))
    })
}

fn binary_equivalence_matches_iso() -> Claim {
    claim("binary-bijection.equivalence-iff-isomorphic", || {
        let mut pairs = 0usize;
        let mut equivalent = 0usize;
        for v in 0..=BINARY_PAIRS_MAX {
            let graphs = idempotent_graphs_f2(v)?;
            let codes: Vec<LinearCode> = graphs.iter().map(code_from_graph_f2).collect::<Result<_>>()?;
            let forms: Vec<SimpleGraph> = graphs.iter().map(|g| canonical_form(g).map(|f| f.graph)).collect::<Result<_>>()?;
            let n = graphs.len();
            let bad = (0..n).into_par_iter().find_map_first(|i| {
                (i..n).find_map(|j| match equivalent_bruteforce(&codes[i], &codes[j]) {
                    Ok(w) if w.is_some() == (forms[i] == forms[j]) => None,
                    Ok(_) => Some(Ok((i, j))),
                    Err(e) => Some(Err(e)),
                })
            });
            if let Some(r) = bad {
                let (i, j) = r?;
                return Ok(Outcome::Fail(
                    format!("v={v}: isomorphism and code equivalence disagree"),
                    Some(Repro {
                        files: vec![("a.graph".into(), write_graph(&graphs[i])), ("b.graph".into(), write_graph(&graphs[j]))],
                        command: "lcdgraph code-from-graph a.graph --field 2 --out a.code && lcdgraph code-from-graph b.graph --field 2 --out b.code && lcdgraph equiv a.code b.code --method bruteforce".into(),
                    }),
                ));
            }
            pairs += n * (n + 1) / 2;
            equivalent += (0..n).map(|i| (i..n).filter(|&j| forms[i] == forms[j]).count()).sum::<usize>();
        }
        Ok(Outcome::Pass(format!("{pairs} pairs for v <= {BINARY_PAIRS_MAX} ({equivalent} equivalent), zero disagreements")))
    })
}

struct TernaryBijectionSuite;

impl VerifySuite for TernaryBijectionSuite {
    fn describe(&self) -> &'static str {
        "ternary LCD codes and two-graphs"
    }

    fn run(&self, cfg: &VerifyConfig) -> Vec<Claim> {
        vec![
            ternary_search(),
            ternary_equivalence(),
            ternary_switching_samples(cfg),
            rowweight_lemma(cfg),
            counterexample_claim("ternary-bijection.counterexample"),
        ]
    }
}

fn ternary_search() -> Claim {
    claim("ternary-bijection.search-instances", || {
        let mut counts = Vec::new();
        for v in 0..=TERNARY_SEARCH_MAX {
            let graphs = idempotent_pm1_graphs_f3(v)?;
            for g in &graphs {
                let c = code_from_twograph_f3(g)?;
                let pi = c.projector()?;
                let ok = c.is_lcd()
                    && c.dim() % 3 == 0
                    && pi.diagonal().iter().all(|&d| d == 0)
                    && twograph_rowweight_check(&c)?
                    && graph_from_code_f3(&c)? == *g;
                if !ok {
                    return Ok(fail_graph("two-graph code fails".into(), g, "code-from-graph input.graph --field 3"));
                }
            }
            counts.push(format!("{v}:{}", graphs.len()));
        }
        Ok(Outcome::Pass(format!("LCD, 3 | dim, zero diagonal for every instance; instances per order {}", counts.join(" "))))
    })
}

fn ternary_equivalence() -> Claim {
    claim("ternary-bijection.equivalence-iff-switching-isomorphic", || {
        let mut pairs = 0usize;
        let mut equivalent = 0usize;
        for v in 0..=TERNARY_SEARCH_MAX {
            let graphs = idempotent_pm1_graphs_f3(v)?;
            let codes: Vec<LinearCode> = graphs.iter().map(code_from_twograph_f3).collect::<Result<_>>()?;
            let forms: Vec<SimpleGraph> = graphs.iter().map(|g| switching_class_form(g).map(|f| f.0)).collect::<Result<_>>()?;
            for i in 0..graphs.len() {
                for j in i..graphs.len() {
                    let same_class = forms[i] == forms[j];
                    if equivalent_bruteforce(&codes[i], &codes[j])?.is_some() != same_class {
                        return Ok(Outcome::Fail(
                            format!("v={v}: switching-class isomorphism and code equivalence disagree"),
                            Some(Repro {
                                files: vec![("a.graph".into(), write_graph(&graphs[i])), ("b.graph".into(), write_graph(&graphs[j]))],
                                command: "lcdgraph switch a.graph --iso b.graph".into(),
                            }),
                        ));
                    }
                    pairs += 1;
                    equivalent += usize::from(same_class);
                }
            }
        }
        Ok(Outcome::Pass(format!("{pairs} pairs for v <= {TERNARY_SEARCH_MAX} ({equivalent} equivalent), zero disagreements")))
    })
}

/// Switching and relabeling an instance gives an equivalent code, found by both deciders.
fn ternary_switching_samples(cfg: &VerifyConfig) -> Claim {
    let id = "ternary-bijection.switched-relabeled-equivalent";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        let base: Vec<SimpleGraph> = [4, 7].iter().map(|&v| idempotent_pm1_graphs_f3(v)).collect::<Result<Vec<_>>>()?.concat();
        let rounds = cfg.samples.min(100);
        for _ in 0..rounds {
            let g = &base[rng.gen_range(0..base.len())];
            let v = g.order();
            let s: Vec<usize> = (0..v).filter(|_| rng.gen_bool(0.5)).collect();
            let h = switch(&g.relabel(&random_permutation(&mut rng, v)), &s)?;
            let (c, d) = (code_from_twograph_f3(g)?, code_from_twograph_f3(&h)?);
            if !ternary_equivalence_via_twographs(&c, &d)? || equivalent_bruteforce(&c, &d)?.is_none() {
                return Ok(fail_graph("switched copy not recognized".into(), &h, "code-from-graph input.graph --field 3"));
            }
        }
        Ok(Outcome::Pass(format!("{rounds} switched and relabeled copies")))
    })
}

fn rowweight_lemma(cfg: &VerifyConfig) -> Claim {
    let id = "ternary-bijection.row-weight-lemma";
    claim(id, || {
        let mut rng = rng_for(cfg, id);
        let f3 = FieldSpec::f3();
        let mut zero_diag = 0;
        for _ in 0..cfg.samples {
            let n = rng.gen_range(2..=10);
            let c = random_lcd_code(&mut rng, &f3, n);
            let by_weight = twograph_rowweight_check(&c)?;
            let pi = c.projector()?;
            let by_diagonal = pi.diagonal().iter().all(|&d| d == 0);
            if by_weight != by_diagonal {
                return Ok(fail_code(format!("{c}: row weights {by_weight}, diagonal {by_diagonal}"), &c, "projector input.code"));
            }
            if graph_from_code_f3(&c).is_ok() && c.dim() % 3 != 0 {
                return Ok(fail_code(format!("{c}: two-graph projector but 3 does not divide the dimension"), &c, "projector input.code"));
            }
            zero_diag += usize::from(by_diagonal);
        }
        Ok(Outcome::Pass(format!("{} ternary LCD codes ({zero_diag} with zero diagonal)", cfg.samples)))
    })
}

struct BoundsSuite;

impl VerifySuite for BoundsSuite {
    fn describe(&self) -> &'static str {
        "dual minimum-weight bounds for codes of strongly regular graphs"
    }

    fn run(&self, _cfg: &VerifyConfig) -> Vec<Claim> {
        let srgs = builtin_srgs();
        let mut out: Vec<Claim> = srgs
            .iter()
            .map(|(name, g)| {
                claim(&format!("bounds.{name}"), || match verify_bounds(g) {
                    Ok(r) => Ok(Outcome::Pass(format!(
                        "{} A: d={} slack={} A+I: d={} slack={}",
                        r.params,
                        opt(r.from_a.dual_min_weight),
                        opt(r.from_a.slack()),
                        opt(r.from_a_plus_i.dual_min_weight),
                        opt(r.from_a_plus_i.slack())
                    ))),
                    Err(e @ Error::TheoremViolation(_)) => Ok(fail_graph(e.to_string(), g, "bounds input.graph")),
                    Err(e) => Err(e),
                })
            })
            .collect();
        out.push(claim("bounds.odd-valency-parity", || {
            let mut checked = Vec::new();
            for (name, g) in &srgs {
                match parity_corollary_check(g) {
                    Ok(p) if p.holds => checked.push(format!("{name}:d={}", opt(p.dual_min_weight))),
                    Ok(_) => return Ok(fail_graph(format!("{name}: odd valency but odd dual distance"), g, "bounds input.graph")),
                    Err(Error::NotApplicable(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(Outcome::Pass(format!("even dual distance on {}", checked.join(" "))))
        }));
        out.push(claim("bounds.paley41-lower-bound-4", || {
            let g = paley(41)?;
            let r = verify_bounds(&g)?;
            let p = r.params;
            let (bmax, bmin) = (bound_dual_minwt_ai(&p), bound_dual_minwt_ai_min(&p));
            let d = r.from_a_plus_i.dual_min_weight;
            if r.even_improved != Some(4) || d.is_none_or(|d| d < 4) {
                return Ok(fail_graph(format!("even-improved bound {:?}, actual {d:?}", r.even_improved), &g, "bounds input.graph"));
            }
            Ok(Outcome::Pass(format!(
                "A+I bound {bmax} (ceil {}) with max, {bmin} (ceil {}) with min; even code raises it to 4; actual {}",
                ceil(&bmax),
                ceil(&bmin),
                opt(d)
            )))
        }));
        out
    }
}

fn opt<T: fmt::Display>(x: Option<T>) -> String {
    x.map_or_else(|| "none".into(), |v| v.to_string())
}

struct PaleySuite;

/// Paley orders small enough for full enumeration.
pub const PALEY_ORDERS: [u32; 8] = [5, 9, 13, 17, 25, 29, 37, 41];

impl VerifySuite for PaleySuite {
    fn describe(&self) -> &'static str {
        "binary codes of Paley graphs"
    }

    fn run(&self, _cfg: &VerifyConfig) -> Vec<Claim> {
        vec![
            claim("paley.idempotent-iff-1-mod-8", || {
                let mut idem = Vec::new();
                for q in PALEY_ORDERS {
                    let g = paley(q)?;
                    let is = g.is_idempotent_mod2();
                    if is != (q % 8 == 1) {
                        return Ok(fail_graph(format!("paley({q}): idempotent = {is}"), &g, "code-from-graph input.graph --field 2"));
                    }
                    if is {
                        idem.push(q.to_string());
                    }
                }
                Ok(Outcome::Pass(format!("A^2 = A over F2 exactly for q in {{{}}}", idem.join(","))))
            }),
            claim("paley.even-lcd-codes", || {
                let mut dims = Vec::new();
                for q in PALEY_ORDERS.into_iter().filter(|q| q % 8 == 1) {
                    let c = code_from_graph_f2(&paley(q)?)?;
                    dims.push(format!("{q}:{}", c.dim()));
                }
                Ok(Outcome::Pass(format!("even LCD with projector = A; dimensions {}", dims.join(" "))))
            }),
            claim("paley.41-parameters", || {
                let c = code_from_graph_f2(&paley(41)?)?;
                let d = c.min_weight()?;
                let params = format!("[{},{},{d}]", c.len(), c.dim());
                if params != "[41,20,10]" {
                    return Ok(Outcome::Fail(format!("got {params}"), None));
                }
                let griesmer = griesmer_max_d(41, 20, 2)?;
                Ok(Outcome::Pass(format!("{params} even=true lcd=true; Griesmer allows d <= {griesmer}")))
            }),
            claim("paley.25-dimension", || {
                let c = code_from_graph_f2(&paley(25)?)?;
                if c.dim() != 12 {
                    return Ok(Outcome::Fail(format!("dimension {}", c.dim()), None));
                }
                Ok(Outcome::Pass(format!("[25,12,{}]", c.min_weight()?)))
            }),
        ]
    }
}

pub fn verify_suites() -> Registry<dyn VerifySuite> {
    let mut r: Registry<dyn VerifySuite> = Registry::new("verify suite");
    r.register("projector", Box::new(ProjectorSuite))
        .register("dichotomy", Box::new(DichotomySuite))
        .register("binary-bijection", Box::new(BinaryBijectionSuite))
        .register("ternary-bijection", Box::new(TernaryBijectionSuite))
        .register("bounds", Box::new(BoundsSuite))
        .register("paley", Box::new(PaleySuite));
    r
}

/// Name that selects every suite.
pub const ALL_SUITES: &str = "paper";

/// Runs the named suites on `jobs` threads; output order follows `names`.
pub fn run_suites(names: &[String], cfg: &VerifyConfig, jobs: usize) -> Result<Vec<Claim>> {
    let registry = verify_suites();
    let mut selected: Vec<&'static str> = Vec::new();
    for name in names {
        if name == ALL_SUITES {
            selected.extend(registry.names());
        } else {
            let known = registry.names().into_iter().find(|n| n == name);
            selected.push(known.ok_or_else(|| Error::UnknownName { kind: "verify suite", name: name.clone() })?);
        }
    }
    let mut seen = std::collections::HashSet::new();
    selected.retain(|n| seen.insert(*n));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::BadInput(format!("thread pool: {e}")))?;
    let suites: Vec<&dyn VerifySuite> = selected.iter().map(|n| registry.get(n)).collect::<Result<_>>()?;
    let per_suite: Vec<Vec<Claim>> = pool.install(|| {
        if jobs > 1 {
            suites.par_iter().map(|s| s.run(cfg)).collect()
        } else {
            suites.iter().map(|s| s.run(cfg)).collect()
        }
    });
    Ok(per_suite.concat())
}

pub fn format_report(claims: &[Claim]) -> String {
    let mut out: String = claims.iter().map(|c| format!("{c}\n")).collect();
    let failed = claims.iter().filter(|c| !c.passed).count();
    out.push_str(&format!("SUMMARY {} claims, {failed} failed\n", claims.len()));
    out
}

/// Writes one directory per failed claim under `dir`, holding its input
/// files and a `command.txt`.
pub fn write_repro_bundles(claims: &[Claim], dir: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let mut used: BTreeMap<String, usize> = BTreeMap::new();
    for c in claims.iter().filter(|c| !c.passed) {
        let stem: String = c.id.chars().map(|ch| if ch.is_ascii_alphanumeric() || ch == '-' || ch == '.' { ch } else { '_' }).collect();
        let n = used.entry(stem.clone()).or_insert(0);
        *n += 1;
        let sub = if *n == 1 { dir.join(&stem) } else { dir.join(format!("{stem}-{n}")) };
        std::fs::create_dir_all(&sub)?;
        let mut command = format!("# {c}\n");
        if let Some(r) = &c.repro {
            for (name, body) in &r.files {
                std::fs::write(sub.join(name), body)?;
            }
            command.push_str(&r.command);
            command.push('\n');
        }
        std::fs::write(sub.join("command.txt"), command)?;
        written.push(sub);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { seed: 0, samples: 40 }
    }

    #[test]
    fn cheap_suites_pass() {
        for name in ["projector", "dichotomy"] {
            let claims = run_suites(&[name.to_string()], &small(), 1).unwrap();
            assert!(!claims.is_empty());
            for c in &claims {
                assert!(c.passed, "{c}");
            }
        }
    }

    #[test]
    fn same_seed_same_report() {
        let a = format_report(&run_suites(&["projector".into()], &small(), 1).unwrap());
        let b = format_report(&run_suites(&["projector".into()], &small(), 2).unwrap());
        assert_eq!(a, b);
        let c = format_report(&run_suites(&["projector".into()], &VerifyConfig { seed: 7, samples: 40 }, 1).unwrap());
        assert!(c.starts_with("CLAIM projector.symmetric-idempotent-span PASS"));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suites(&["nope".into()], &small(), 1), Err(Error::UnknownName { .. })));
    }

    #[test]
    fn bundles_for_failures_only() {
        let dir = tempfile::tempdir().unwrap();
        let ok = Claim { id: "x.ok".into(), passed: true, details: String::new(), repro: None };
        let bad = Claim {
            id: "x.bad".into(),
            passed: false,
            details: "boom".into(),
            repro: Some(Repro { files: vec![("input.code".into(), "3 1 2\n111\n".into())], command: "lcdgraph lcd input.code".into() }),
        };
        let written = write_repro_bundles(&[ok, bad], dir.path()).unwrap();
        assert_eq!(written.len(), 1);
        let cmd = std::fs::read_to_string(written[0].join("command.txt")).unwrap();
        assert!(cmd.contains("CLAIM x.bad FAIL boom") && cmd.contains("lcdgraph lcd input.code"));
        assert_eq!(std::fs::read_to_string(written[0].join("input.code")).unwrap(), "3 1 2\n111\n");
    }
}
