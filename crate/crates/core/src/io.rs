//! Plain-text file formats.
//!
//! * matrix: header `rows cols p k`, then `rows` lines of canonical integers.
//!   Extension fields use the default modulus of [`FieldSpec::with_default_modulus`].
//! * graph: header `v m`, then `m` lines `u w` with `u < w`, 0-indexed.
//!   Readers also accept a matrix file holding a 0/1 adjacency matrix.
//! * code: header `n k p`, then `k` generator rows as digit strings.
//! * two-graph: header `v t`, then `t` lines `a b c`, ascending.
//!
//! Blank lines and lines starting with `#` are skipped. Errors carry
//! 1-indexed line numbers.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::SimpleGraph;
use crate::matrix::ExactMatrix;
use crate::twograph::TwoGraph;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate(), last: 0 }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            let t = line.trim();
            if !t.is_empty() && !t.starts_with('#') {
                self.last = i + 1;
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let after = self.last;
        self.next_line().ok_or_else(|| Error::Parse { line: after + 1, message: format!("missing {what}") })
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_line() {
            Some((line, _)) => Err(Error::Parse { line, message: "unexpected trailing content".into() }),
            None => Ok(()),
        }
    }
}

fn numbers<T: FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| Error::Parse { line, message: format!("`{tok}` is not a valid number") }))
        .collect()
}

fn header<const N: usize>(lines: &mut Lines) -> Result<(usize, [usize; N])> {
    let (line, text) = lines.expect("header")?;
    let v: Vec<usize> = numbers(line, text)?;
    let arr: [usize; N] = v
        .try_into()
        .map_err(|v: Vec<usize>| Error::Parse { line, message: format!("header has {} fields, expected {N}", v.len()) })?;
    Ok((line, arr))
}

fn at(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Parse { .. } => e,
        other => Error::Parse { line, message: other.to_string() },
    }
}

fn field_of(line: usize, p: usize, k: usize) -> Result<FieldSpec> {
    let (p, k) = (u32::try_from(p), u32::try_from(k));
    match (p, k) {
        (Ok(p), Ok(k)) => FieldSpec::with_default_modulus(p, k).map_err(at(line)),
        _ => Err(Error::Parse { line, message: "field parameters out of range".into() }),
    }
}

pub fn parse_exmat(text: &str) -> Result<ExactMatrix> {
    let mut lines = Lines::new(text);
    let (hl, [rows, cols, p, k]) = header::<4>(&mut lines)?;
    let field = field_of(hl, p, k)?;
    let mut data = Vec::with_capacity(rows);
    for r in 0..rows {
        let (line, t) = lines.expect(&format!("matrix row {}", r + 1))?;
        let row: Vec<u32> = numbers(line, t)?;
        if row.len() != cols {
            return Err(Error::Parse { line, message: format!("row has {} entries, expected {cols}", row.len()) });
        }
        for &x in &row {
            field.check(x).map_err(at(line))?;
        }
        data.push(row);
    }
    lines.finish()?;
    ExactMatrix::from_rows(&field, cols, &data).map_err(at(hl))
}

pub fn write_exmat(m: &ExactMatrix) -> String {
    let f = m.field();
    let mut out = format!("{} {} {} {}\n", m.rows(), m.cols(), f.characteristic(), f.degree());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads an edge list, or a 0/1 adjacency matrix in matrix format.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut probe = Lines::new(text);
    let (hl, h) = probe.expect("header")?;
    match h.split_whitespace().count() {
        4 => {
            let m = parse_exmat(text)?;
            if (0..m.rows()).any(|i| m.row(i).iter().any(|&x| x > 1)) {
                return Err(Error::Parse { line: hl, message: "adjacency matrix must have 0/1 entries".into() });
            }
            let m = ExactMatrix::from_fn(&FieldSpec::f2(), m.rows(), m.cols(), |i, j| m.get(i, j));
            SimpleGraph::from_adjacency(&m).map_err(at(hl))
        }
        2 => parse_edge_list(text),
        n => Err(Error::Parse { line: hl, message: format!("graph header has {n} fields, expected 2 (edge list) or 4 (matrix)") }),
    }
}

fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut lines = Lines::new(text);
    let (_, [v, m]) = header::<2>(&mut lines)?;
    let mut g = SimpleGraph::new(v);
    for e in 0..m {
        let (line, t) = lines.expect(&format!("edge {}", e + 1))?;
        let (a, b) = match numbers::<usize>(line, t)?[..] {
            [a, b] => (a, b),
            _ => return Err(Error::Parse { line, message: "edge line needs two vertices".into() }),
        };
        if a >= b || b >= v {
            return Err(Error::Parse { line, message: format!("edge {a} {b} needs u < w < {v}") });
        }
        if g.has_edge(a, b) {
            return Err(Error::Parse { line, message: format!("duplicate edge {a} {b}") });
        }
        g.add_edge(a, b).map_err(at(line))?;
    }
    lines.finish()?;
    Ok(g)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (a, b) in edges {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = Lines::new(text);
    let (hl, [n, k, p]) = header::<3>(&mut lines)?;
    if p != 2 && p != 3 {
        return Err(Error::Parse { line: hl, message: format!("codes are over F_2 or F_3, got p = {p}") });
    }
    let field = FieldSpec::prime(p as u32).map_err(at(hl))?;
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let (line, t) = lines.expect(&format!("generator row {}", r + 1))?;
        let digits: Vec<u32> = t
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).filter(|&d| d < p as u32).ok_or_else(|| Error::Parse { line, message: format!("`{c}` is not a digit mod {p}") }))
            .collect::<Result<_>>()?;
        if digits.len() != n {
            return Err(Error::Parse { line, message: format!("row has length {}, expected {n}", digits.len()) });
        }
        rows.push(digits);
    }
    lines.finish()?;
    let code = LinearCode::from_rows(&field, n, &rows).map_err(at(hl))?;
    if code.dim() != k {
        return Err(Error::Parse { line: hl, message: format!("generator rows span dimension {}, header says {k}", code.dim()) });
    }
    Ok(code)
}

/// Writes the reduced generator matrix.
pub fn write_code(c: &LinearCode) -> String {
    let g = c.generator();
    let mut out = format!("{} {} {}\n", c.len(), c.dim(), c.field().characteristic());
    for i in 0..g.rows() {
        out.extend(g.row(i).iter().map(|d| char::from_digit(*d, 10).expect("digit")));
        out.push('\n');
    }
    out
}

pub fn parse_twograph(text: &str) -> Result<TwoGraph> {
    let mut lines = Lines::new(text);
    let (hl, [v, t]) = header::<2>(&mut lines)?;
    let mut triples = Vec::with_capacity(t);
    for i in 0..t {
        let (line, s) = lines.expect(&format!("triple {}", i + 1))?;
        match numbers::<usize>(line, s)?[..] {
            [a, b, c] if a < b && b < c && c < v => triples.push([a, b, c]),
            _ => return Err(Error::Parse { line, message: format!("expected an ascending triple within 0..{v}") }),
        }
    }
    lines.finish()?;
    TwoGraph::new(v, triples).map_err(at(hl))
}

pub fn write_twograph(t: &TwoGraph) -> String {
    let mut out = format!("{} {}\n", t.order(), t.triples().len());
    for [a, b, c] in t.triples() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exmat_round_trip() {
        let f9 = FieldSpec::of_order(9).unwrap();
        let m = ExactMatrix::from_fn(&f9, 2, 3, |i, j| ((i * 3 + j) % 9) as u32);
        let text = write_exmat(&m);
        assert!(text.starts_with("2 3 3 2\n"));
        assert_eq!(parse_exmat(&text).unwrap(), m);
    }

    #[test]
    fn exmat_errors_name_lines() {
        assert_eq!(parse_exmat("2 2 2 1\n0 1\n1\n"), Err(Error::Parse { line: 3, message: "row has 1 entries, expected 2".into() }));
        assert!(matches!(parse_exmat("2 2 2 1\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_exmat("1 1 2 1\n5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_exmat("1 1 4 1\n0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_exmat("1 1 2 1\n0\n0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_exmat("1 1 2\n0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn graph_round_trip() {
        let g = SimpleGraph::petersen();
        let text = write_graph(&g);
        assert!(text.starts_with("10 15\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
        let f2 = FieldSpec::f2();
        let as_matrix = write_exmat(&g.adjacency_over(crate::graph::AdjacencyKind::ZeroOne, &f2));
        assert_eq!(parse_graph(&as_matrix).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("3 1\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("# comment\n\n3 2\n0 1\n"), Err(Error::Parse { line: 5, .. })));
        assert!(matches!(parse_graph("2 2 2 1\n1 1\n1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("2 2 3 1\n0 2\n2 0\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_graph("2 2 3 1\n0 1\n1 0\n").unwrap(), SimpleGraph::complete(2));
    }

    #[test]
    fn code_round_trip() {
        let c = LinearCode::from_rows(&FieldSpec::f3(), 4, &[vec![1, 0, 2, 1], vec![0, 1, 1, 2]]).unwrap();
        let text = write_code(&c);
        assert_eq!(text, "4 2 3\n1021\n0112\n");
        assert_eq!(parse_code(&text).unwrap(), c);
    }

    #[test]
    fn code_errors() {
        assert!(matches!(parse_code("3 2 2\n110\n110\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_code("3 1 2\n120\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_code("3 1 2\n10\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_code("3 1 5\n100\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn twograph_round_trip() {
        let t = TwoGraph::from_graph(&SimpleGraph::cycle(5));
        let text = write_twograph(&t);
        assert!(text.starts_with("5 5\n"));
        assert_eq!(parse_twograph(&text).unwrap(), t);
        assert!(matches!(parse_twograph("4 1\n0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_twograph("4 1\n0 2 1\n"), Err(Error::Parse { line: 2, .. })));
    }
}
