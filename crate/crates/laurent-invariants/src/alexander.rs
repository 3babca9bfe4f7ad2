use braid_core::{BraidWord, HalfInteger};
use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::burau::reduced_burau;
use crate::error::InvariantError;
use crate::matrix::LaurentMatrix;
use crate::poly::LaurentPoly;

/// Alexander polynomial of the closure of `w`, normalized.
///
/// Computed as `det(I - ρ(w)) / (1 + t + ⋯ + t^{n-1})` with `ρ` the reduced
/// Burau representation, then centred. Knots get `Δ(1) = 1`; links get a
/// positive leading coefficient (see [`normalize_alexander`]).
pub fn alexander_polynomial(w: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    let n = w.strands();
    let components = w.closure_summary().components;
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let rho = reduced_burau(w);
    let det = (&LaurentMatrix::identity(n - 1) - &rho).determinant()?;
    let geometric = LaurentPoly::new(0, vec![BigInt::one(); n]);
    let raw = det.exact_div(&geometric)?;
    Ok(normalize_alexander(&raw, components))
}

/// Shifts `raw` so its exponents are centred and fixes the sign.
///
/// Even breadth `b` is centred exactly on `[-b/2, b/2]`. Odd breadth (only
/// possible for links) uses `[-(b-1)/2, (b+1)/2]`. With one component the
/// sign makes `Δ(1)` positive; otherwise the leading coefficient is positive.
pub fn normalize_alexander(raw: &LaurentPoly, components: usize) -> LaurentPoly {
    if raw.is_zero() {
        return LaurentPoly::zero();
    }
    let breadth = raw.breadth() as i64;
    let centred = raw.shift(-(breadth / 2) - raw.min_exp());
    let flip = if components == 1 {
        centred.eval_at_one().is_negative()
    } else {
        centred.leading_coeff().is_some_and(|c| c.is_negative())
    };
    if flip {
        -centred
    } else {
        centred
    }
}

/// Seifert genus lower bound `breadth(Δ) / 2`.
pub fn alexander_genus_bound(delta: &LaurentPoly) -> HalfInteger {
    HalfInteger::from_twice(delta.breadth() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn p(m: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(m, c)
    }

    #[test]
    fn small_knots() {
        assert!(alexander_polynomial(&w(2, &[1])).unwrap().is_one());
        assert!(alexander_polynomial(&w(1, &[])).unwrap().is_one());
        assert_eq!(alexander_polynomial(&w(2, &[1, 1, 1])).unwrap(), p(-1, &[1, -1, 1]));
        assert_eq!(alexander_polynomial(&w(3, &[1, -2, 1, -2])).unwrap(), p(-1, &[-1, 3, -1]));
    }

    #[test]
    fn split_links_vanish() {
        assert!(alexander_polynomial(&w(2, &[])).unwrap().is_zero());
        assert!(alexander_polynomial(&w(3, &[1])).unwrap().is_zero());
    }

    #[test]
    fn hopf_link_has_odd_breadth() {
        let d = alexander_polynomial(&w(2, &[1, 1])).unwrap();
        assert_eq!(d.breadth(), 1);
        assert_eq!(d.min_exp(), 0);
        assert!(d.leading_coeff().unwrap().is_positive());
    }

    #[test]
    fn genus_bound() {
        assert_eq!(alexander_genus_bound(&LaurentPoly::one()), HalfInteger::from_int(0));
        assert_eq!(alexander_genus_bound(&p(-1, &[1, -1, 1])), HalfInteger::from_int(1));
    }
}
