//! Correspondences between LCD codes and graphs.
//!
//! Binary: the projector of an even LCD code is the 0/1 adjacency matrix of
//! a graph with `A^2 = A` over `F_2`, and every such graph arises this way.
//! Ternary: the projector of a ternary LCD code whose rows have weight
//! divisible by three is a `∓1` adjacency matrix, so the code determines a
//! two-graph; equivalence of codes matches isomorphism of switching classes.
//!
//! Every constructor re-checks the facts it relies on and reports a
//! [`Error::TheoremViolation`] if one fails.

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{is_isomorphic, AdjacencyKind, SimpleGraph};
use crate::matrix::ExactMatrix;
use crate::twograph::switching_class_iso;

fn violation(msg: impl Into<String>) -> Error {
    Error::TheoremViolation(msg.into())
}

/// Row span over `F_2` of an adjacency matrix with `A^2 = A`.
pub fn code_from_graph_f2(g: &SimpleGraph) -> Result<LinearCode> {
    if !g.is_idempotent_mod2() {
        return Err(Error::NotIdempotent(2));
    }
    let f2 = FieldSpec::f2();
    let a = g.adjacency_over(AdjacencyKind::ZeroOne, &f2);
    let code = LinearCode::from_generator(&a)?;
    if !code.is_lcd() {
        return Err(violation("row span of an idempotent adjacency matrix is not LCD"));
    }
    if !code.is_even()? {
        return Err(violation("row span of an idempotent adjacency matrix is not even"));
    }
    if code.projector()? != a {
        return Err(violation("projector of the row span differs from the adjacency matrix"));
    }
    Ok(code)
}

/// The graph whose adjacency matrix is the projector of a binary even LCD code.
pub fn graph_from_code_f2(c: &LinearCode) -> Result<SimpleGraph> {
    if !c.is_binary() {
        return Err(Error::WrongField { expected: 2, actual: c.field().order() });
    }
    if !c.is_lcd() {
        return Err(Error::NotLcd);
    }
    if !c.is_even()? {
        return Err(Error::NotEven);
    }
    let pi = c.projector()?;
    if !pi.is_symmetric() || pi.diagonal().iter().any(|&d| d != 0) {
        return Err(violation("projector of an even LCD code is not a simple-graph adjacency matrix"));
    }
    SimpleGraph::from_adjacency(&pi)
}

/// `∓1` adjacency matrix over `F_3`.
pub fn pm1_adjacency_f3(g: &SimpleGraph) -> ExactMatrix {
    g.adjacency_over(AdjacencyKind::Pm1, &FieldSpec::f3())
}

/// Ternary row span of a `∓1` adjacency matrix with `A^2 = A` over `F_3`.
pub fn code_from_twograph_f3(g: &SimpleGraph) -> Result<LinearCode> {
    let a = pm1_adjacency_f3(g);
    if !a.is_idempotent() {
        return Err(Error::NotIdempotent(3));
    }
    let code = LinearCode::from_generator(&a)?;
    if !code.is_lcd() {
        return Err(violation("row span of an idempotent ∓1 adjacency matrix is not LCD"));
    }
    if code.projector()? != a {
        return Err(violation("projector of the row span differs from the ∓1 adjacency matrix"));
    }
    if code.dim() % 3 != 0 {
        return Err(violation(format!("two-graph code has dimension {} not divisible by 3", code.dim())));
    }
    Ok(code)
}

fn weight(row: &[u32]) -> usize {
    row.iter().filter(|&&x| x != 0).count()
}

/// Whether every row of the projector of a ternary LCD code has weight
/// divisible by three; checked against the all-zero-diagonal condition.
pub fn twograph_rowweight_check(c: &LinearCode) -> Result<bool> {
    if c.field().order() != 3 {
        return Err(Error::WrongField { expected: 3, actual: c.field().order() });
    }
    let pi = c.projector()?;
    let by_weight = (0..pi.rows()).all(|i| weight(pi.row(i)).is_multiple_of(3));
    let by_diagonal = pi.diagonal().iter().all(|&d| d == 0);
    if by_weight != by_diagonal {
        return Err(violation("row weights and projector diagonal disagree"));
    }
    Ok(by_weight)
}

/// The graph whose `∓1` adjacency matrix is the projector of a ternary LCD
/// code. Besides the zero diagonal this needs every off-diagonal entry of
/// the projector to be nonzero.
pub fn graph_from_code_f3(c: &LinearCode) -> Result<SimpleGraph> {
    if !twograph_rowweight_check(c)? {
        return Err(Error::NotTwoGraphProjector);
    }
    let pi = c.projector()?;
    let n = pi.rows();
    if (0..n).any(|i| (0..n).any(|j| i != j && pi.get(i, j) == 0)) {
        return Err(Error::NotTwoGraphProjector);
    }
    // -1 = 2 marks adjacency
    Ok(SimpleGraph::from_fn(n, |i, j| pi.get(i, j) == 2))
}

/// The ternary code generated by `[I_k | A]` with `A A^T = O` and `3 | k`:
/// LCD with `3 | dim`, yet its projector has `k` ones on the diagonal.
pub fn counterexample_code(k: usize, a: &ExactMatrix) -> Result<LinearCode> {
    if a.field().order() != 3 || !a.field().is_prime_field() {
        return Err(Error::BadInput("A must be a matrix over F_3".into()));
    }
    if a.rows() != k {
        return Err(Error::BadInput(format!("A has {} rows, expected {k}", a.rows())));
    }
    if k == 0 || !k.is_multiple_of(3) {
        return Err(Error::BadInput(format!("k = {k} is not a positive multiple of 3")));
    }
    if !a.mul(&a.transpose())?.is_zero() {
        return Err(Error::BadInput("A A^T is not zero".into()));
    }
    let g = ExactMatrix::identity(a.field(), k).hstack(a)?;
    let code = LinearCode::from_generator(&g)?;
    if code.gram() != ExactMatrix::identity(a.field(), k) {
        return Err(violation("G G^T is not the identity"));
    }
    let pi = code.projector()?;
    if pi.diagonal().iter().filter(|&&d| d == 1).count() != k {
        return Err(violation("projector diagonal does not carry k ones"));
    }
    Ok(code)
}

/// Binary even LCD codes are equivalent iff their projector graphs are isomorphic.
pub fn equivalence_via_graphs(c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
    let (g1, g2) = (graph_from_code_f2(c1)?, graph_from_code_f2(c2)?);
    Ok(is_isomorphic(&g1, &g2)?.is_some())
}

/// Ternary LCD codes with two-graph projectors are equivalent iff their
/// projector graphs lie in isomorphic switching classes.
pub fn ternary_equivalence_via_twographs(c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
    let (g1, g2) = (graph_from_code_f3(c1)?, graph_from_code_f3(c2)?);
    Ok(switching_class_iso(&g1, &g2)?.is_some())
}

/// Largest order for [`idempotent_graphs_f2`].
pub const F2_SEARCH_MAX_ORDER: usize = 8;
/// Largest order for [`idempotent_pm1_graphs_f3`].
pub const F3_SEARCH_MAX_ORDER: usize = 7;

fn rows_idempotent_f2(rows: &[u64]) -> bool {
    let v = rows.len();
    (0..v).all(|x| (x + 1..v).all(|y| ((rows[x] & rows[y]).count_ones() & 1 == 1) == (rows[x] >> y & 1 == 1)))
}

/// All labeled graphs on `v` vertices with `A^2 = A` over `F_2`.
///
/// The diagonal of `A^2` holds the degrees mod 2, so only graphs with all
/// degrees even can qualify. Those are enumerated directly: edges among the
/// first `v - 1` vertices are free and the last vertex joins exactly the
/// odd-degree ones.
pub fn idempotent_graphs_f2(v: usize) -> Result<Vec<SimpleGraph>> {
    if v > F2_SEARCH_MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("idempotent-graph search supports v <= {F2_SEARCH_MAX_ORDER}")));
    }
    if v == 0 {
        return Ok(vec![SimpleGraph::new(0)]);
    }
    let m = v - 1;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let found: Vec<Vec<u64>> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let mut rows = vec![0u64; v];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    rows[a] |= 1 << b;
                    rows[b] |= 1 << a;
                }
            }
            for x in 0..m {
                if rows[x].count_ones() % 2 == 1 {
                    rows[x] |= 1 << m;
                    rows[m] |= 1 << x;
                }
            }
            rows_idempotent_f2(&rows).then_some(rows)
        })
        .collect();
    Ok(found.into_iter().map(|rows| SimpleGraph::from_fn(v, |x, y| rows[x] >> y & 1 == 1)).collect())
}

/// Filters every labeled graph on `v` vertices, without the degree shortcut.
pub fn idempotent_graphs_f2_unfiltered(v: usize) -> Result<Vec<SimpleGraph>> {
    if v > F2_SEARCH_MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("idempotent-graph search supports v <= {F2_SEARCH_MAX_ORDER}")));
    }
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    let found: Vec<Vec<u64>> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let mut rows = vec![0u64; v];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    rows[a] |= 1 << b;
                    rows[b] |= 1 << a;
                }
            }
            let diagonal_ok = rows.iter().all(|r| r.count_ones() % 2 == 0);
            (diagonal_ok && rows_idempotent_f2(&rows)).then_some(rows)
        })
        .collect();
    Ok(found.into_iter().map(|rows| SimpleGraph::from_fn(v, |x, y| rows[x] >> y & 1 == 1)).collect())
}

/// All labeled graphs on `v` vertices whose `∓1` adjacency matrix satisfies
/// `A^2 = A` over `F_3`.
pub fn idempotent_pm1_graphs_f3(v: usize) -> Result<Vec<SimpleGraph>> {
    if v > F3_SEARCH_MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("two-graph search supports v <= {F3_SEARCH_MAX_ORDER}")));
    }
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    let found: Vec<u64> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter(|&mask| {
            let mut a = [[0i32; F3_SEARCH_MAX_ORDER]; F3_SEARCH_MAX_ORDER];
            for (i, &(x, y)) in pairs.iter().enumerate() {
                let e = if mask >> i & 1 == 1 { -1 } else { 1 };
                a[x][y] = e;
                a[y][x] = e;
            }
            (0..v).all(|i| {
                (0..v).all(|j| {
                    let sq: i32 = (0..v).map(|l| a[i][l] * a[l][j]).sum();
                    (sq - a[i][j]).rem_euclid(3) == 0
                })
            })
        })
        .collect();
    Ok(found
        .into_iter()
        .map(|mask| {
            let mut g = SimpleGraph::new(v);
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.toggle(x, y);
                }
            }
            g
        })
        .collect())
}
