use super::SimpleGraph;
use crate::error::{Error, Result};
use crate::field::{prime_power, FieldSpec};

/// Paley graph on `F_q`: `x ~ y` iff `x - y` is a nonzero square.
///
/// Vertices are the packed field elements `0..q` under the default modulus.
/// Requires `q = p^k` with `k <= 2` and `q = 1 mod 4`.
pub fn paley(q: u32) -> Result<SimpleGraph> {
    let (_, k) = prime_power(q).ok_or(Error::NotPaleyOrder { q })?;
    if k > 2 || q % 4 != 1 {
        return Err(Error::NotPaleyOrder { q });
    }
    let f = FieldSpec::of_order(q)?;
    let squares: Vec<bool> = f.elements().map(|a| f.is_nonzero_square(a)).collect();
    Ok(SimpleGraph::from_fn(q as usize, |x, y| squares[f.sub(x as u32, y as u32) as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SrgParams;

    #[test]
    fn pentagon() {
        let g = paley(5).unwrap();
        // squares mod 5 are {1, 4}
        assert_eq!(g, SimpleGraph::cycle(5));
        assert_eq!(g.srg_params(), Some(SrgParams::new(5, 2, 0, 1)));
    }

    #[test]
    fn orders() {
        assert_eq!(paley(9).unwrap().srg_params(), Some(SrgParams::new(9, 4, 1, 2)));
        for q in [13, 17, 25, 29, 37, 41, 49] {
            assert_eq!(paley(q).unwrap().srg_params(), Some(SrgParams::paley(q as usize)), "q={q}");
        }
    }

    #[test]
    fn rejected_orders() {
        for q in [3, 7, 11, 15, 21, 125, 1] {
            assert_eq!(paley(q), Err(Error::NotPaleyOrder { q }));
        }
    }
}
