use std::ops::{Index, IndexMut, Mul, Sub};

use crate::error::InvariantError;
use crate::poly::LaurentPoly;

/// Square matrix over `Z[t, t^{-1}]`, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(dim: usize) -> Self {
        LaurentMatrix {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, InvariantError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(InvariantError::DimensionMismatch);
        }
        Ok(LaurentMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, r: usize) -> &[LaurentPoly] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    pub fn try_mul(&self, rhs: &LaurentMatrix) -> Result<LaurentMatrix, InvariantError> {
        if self.dim != rhs.dim {
            return Err(InvariantError::DimensionMismatch);
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division
    /// is exact in the Laurent ring.
    pub fn determinant(&self) -> Result<LaurentPoly, InvariantError> {
        let n = self.dim;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev)?;
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}

impl Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;
    fn index(&self, (r, c): (usize, usize)) -> &LaurentPoly {
        &self.entries[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut LaurentPoly {
        &mut self.entries[r * self.dim + c]
    }
}

impl Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        self.try_mul(rhs).expect("matrix dimensions differ")
    }
}

impl Sub for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        LaurentMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(m, c)
    }

    fn c(v: i64) -> LaurentPoly {
        p(0, &[v])
    }

    #[test]
    fn integer_determinants() {
        let m = LaurentMatrix::from_rows(vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(2)],
            vec![c(1), c(1), c(2)],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), c(6));
        // zero pivot forces a swap
        let s = LaurentMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        assert_eq!(s.determinant().unwrap(), c(-1));
        let z = LaurentMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(0), c(2)]]).unwrap();
        assert!(z.determinant().unwrap().is_zero());
    }

    #[test]
    fn laurent_determinant() {
        // [[t, 1], [1, t^-1]] has determinant 0; [[t, 1], [-1, t]] has t^2 + 1
        let t = p(1, &[1]);
        let m = LaurentMatrix::from_rows(vec![vec![t.clone(), c(1)], vec![c(1), p(-1, &[1])]]).unwrap();
        assert!(m.determinant().unwrap().is_zero());
        let m = LaurentMatrix::from_rows(vec![vec![t.clone(), c(1)], vec![c(-1), t]]).unwrap();
        assert_eq!(m.determinant().unwrap(), p(0, &[1, 0, 1]));
    }

    #[test]
    fn identity_products() {
        let i3 = LaurentMatrix::identity(3);
        assert_eq!(&i3 * &i3, i3);
        assert!((&i3 - &i3).determinant().unwrap().is_zero());
        assert!(LaurentMatrix::from_rows(vec![vec![c(1), c(2)]]).is_err());
    }
}
