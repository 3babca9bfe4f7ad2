use braid_core::BraidWord;

use crate::matrix::LaurentMatrix;
use crate::poly::LaurentPoly;

/// Reduced Burau matrix of `w`, of size `(n-1) × (n-1)`.
///
/// `σ_i` acts by the block `[[1, t, 0], [0, -t, 0], [0, 1, 1]]` on rows and
/// columns `i-1, i, i+1` (one-based, clipped to the matrix), and `σ_i^{-1}`
/// by `[[1, 1, 0], [0, -t^-1, 0], [0, t^-1, 1]]`. Letters multiply on the
/// right, so only column `i` changes per letter.
pub fn reduced_burau(w: &BraidWord) -> LaurentMatrix {
    let dim = w.strands().saturating_sub(1);
    let mut m = LaurentMatrix::identity(dim);
    let t = LaurentPoly::monomial(1, 1);
    let t_inv = LaurentPoly::monomial(1, -1);
    for &g in w.letters() {
        let c = g.unsigned_abs() as usize - 1;
        for r in 0..dim {
            let mid = &m[(r, c)];
            let left = (c > 0).then(|| &m[(r, c - 1)]);
            let right = (c + 1 < dim).then(|| &m[(r, c + 1)]);
            let value = if g > 0 {
                let mut v = -&(&t * mid);
                if let Some(l) = left {
                    v = &v + &(&t * l);
                }
                if let Some(rt) = right {
                    v = &v + rt;
                }
                v
            } else {
                let mut v = -&(&t_inv * mid);
                if let Some(l) = left {
                    v = &v + l;
                }
                if let Some(rt) = right {
                    v = &v + &(&t_inv * rt);
                }
                v
            };
            m[(r, c)] = value;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn identity_and_inverses() {
        assert_eq!(reduced_burau(&w(3, &[])), LaurentMatrix::identity(2));
        for n in 2..6 {
            for g in 1..n as i32 {
                assert_eq!(reduced_burau(&w(n, &[g, -g])), LaurentMatrix::identity(n - 1));
                assert_eq!(reduced_burau(&w(n, &[-g, g])), LaurentMatrix::identity(n - 1));
            }
        }
    }

    #[test]
    fn two_strands() {
        assert_eq!(reduced_burau(&w(2, &[1]))[(0, 0)], LaurentPoly::monomial(-1, 1));
    }

    #[test]
    fn braid_relations_hold() {
        assert_eq!(reduced_burau(&w(4, &[1, 2, 1])), reduced_burau(&w(4, &[2, 1, 2])));
        assert_eq!(reduced_burau(&w(4, &[2, 3, 2])), reduced_burau(&w(4, &[3, 2, 3])));
        assert_eq!(reduced_burau(&w(4, &[1, 3])), reduced_burau(&w(4, &[3, 1])));
    }

    #[test]
    fn multiplicative() {
        let (a, b) = (w(4, &[1, -3, 2, 2]), w(4, &[-2, 1, 3]));
        assert_eq!(
            reduced_burau(&a.concat(&b).unwrap()),
            &reduced_burau(&a) * &reduced_burau(&b)
        );
    }
}
