//! Jones polynomial through the Kauffman bracket.
//!
//! The bracket of a braid closure is computed by transfer through the
//! Temperley-Lieb algebra: `⟨σ_i^{±1}⟩ = A^{±1}·1 + A^{∓1}·e_i`, states are
//! noncrossing perfect matchings of `2n` boundary points, and the closure
//! of a matching with `L` loops evaluates to `d^{L-1}`, `d = -A² - A^{-2}`.
//! Writhe correction `(-A³)^{-w}` and `t = A^{-4}` give the Jones polynomial.

use std::collections::HashMap;
use std::fmt;

use braid_core::BraidWord;
use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::error::InvariantError;
use crate::poly::LaurentPoly;

pub const DEFAULT_MAX_STRANDS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JonesOptions {
    pub max_strands: usize,
}

impl Default for JonesOptions {
    fn default() -> Self {
        JonesOptions {
            max_strands: DEFAULT_MAX_STRANDS,
        }
    }
}

/// Jones polynomial stored in the variable `t^{1/4}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JonesPolynomial {
    quarter: LaurentPoly,
}

impl JonesPolynomial {
    /// From a Kauffman-bracket style polynomial in `A`, via `t^{1/4} = A^{-1}`.
    fn from_a_poly(a_poly: &LaurentPoly) -> Self {
        JonesPolynomial {
            quarter: a_poly.mirror(),
        }
    }

    /// Polynomial in `s = t^{1/4}`.
    pub fn quarter_grid(&self) -> &LaurentPoly {
        &self.quarter
    }

    /// Smallest `d ∈ {1, 2, 4}` such that every exponent lies on the `t^{1/d}` grid.
    pub fn exponent_denominator(&self) -> i64 {
        let all = |m: i64| self.quarter.terms().all(|(e, _)| e % m == 0);
        if all(4) {
            1
        } else if all(2) {
            2
        } else {
            4
        }
    }

    /// Exponents rescaled to the `t^{1/d}` grid, `d = exponent_denominator()`.
    pub fn on_grid(&self) -> (i64, LaurentPoly) {
        let d = self.exponent_denominator();
        let step = 4 / d;
        let terms = self.quarter.terms().map(|(e, c)| (e / step, c.clone()));
        (d, LaurentPoly::from_terms(terms))
    }

    /// The polynomial in `t` when all exponents are integral.
    pub fn in_t(&self) -> Option<LaurentPoly> {
        let (d, p) = self.on_grid();
        (d == 1).then_some(p)
    }

    pub fn is_one(&self) -> bool {
        self.quarter.is_one()
    }
}

impl fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d, p) = self.on_grid();
        f.write_str(&p.format_with_denominator(d))
    }
}

// {"exponent_denominator": d, "min_exp": m, "coeffs": [...]}, exponents on the t^{1/d} grid
impl Serialize for JonesPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (d, p) = self.on_grid();
        let mut st = s.serialize_struct("JonesPolynomial", 3)?;
        st.serialize_field("exponent_denominator", &d)?;
        st.serialize_field("min_exp", &p.min_exp())?;
        st.serialize_field("coeffs", &coeff_list(&p))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawJones {
    exponent_denominator: i64,
    #[serde(flatten)]
    poly: LaurentPoly,
}

impl<'de> Deserialize<'de> for JonesPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawJones::deserialize(d)?;
        if ![1, 2, 4].contains(&raw.exponent_denominator) {
            return Err(de::Error::custom("exponent_denominator must be 1, 2 or 4"));
        }
        let step = 4 / raw.exponent_denominator;
        let terms = raw.poly.terms().map(|(e, c)| (e * step, c.clone()));
        Ok(JonesPolynomial {
            quarter: LaurentPoly::from_terms(terms),
        })
    }
}

fn coeff_list(p: &LaurentPoly) -> Vec<CoeffOut> {
    use num_traits::ToPrimitive;
    p.coeffs()
        .iter()
        .map(|c| match c.to_i64() {
            Some(v) => CoeffOut::Small(v),
            None => CoeffOut::Big(c.to_string()),
        })
        .collect()
}

#[derive(Serialize)]
#[serde(untagged)]
enum CoeffOut {
    Small(i64),
    Big(String),
}

type Matching = Vec<u8>;

fn loop_value() -> LaurentPoly {
    // d = -A^2 - A^-2
    LaurentPoly::from_i64s(-2, &[-1, 0, 0, 0, -1])
}

fn closure_loops(m: &[u8], n: usize) -> usize {
    // each point has one matching edge and one closure edge (top i <-> bottom i)
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = m[p] as usize;
            seen[q] = true;
            p = if q < n { q + n } else { q - n };
            if seen[p] {
                break;
            }
        }
    }
    loops
}

fn writhe_factor(writhe: i64) -> LaurentPoly {
    // (-A^3)^{-w}
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, -3 * writhe)
}

/// Kauffman bracket of the closure of `w` in the variable `A`, by
/// Temperley-Lieb transfer.
fn bracket_transfer(w: &BraidWord) -> LaurentPoly {
    let n = w.strands();
    let d = loop_value();
    let a = LaurentPoly::monomial(1, 1);
    let a_inv = LaurentPoly::monomial(1, -1);

    let start: Matching = (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect();
    let mut states: HashMap<Matching, LaurentPoly> = HashMap::new();
    states.insert(start, LaurentPoly::one());

    for &g in w.letters() {
        let (id_w, e_w) = if g > 0 { (&a, &a_inv) } else { (&a_inv, &a) };
        let lo = n + g.unsigned_abs() as usize - 1;
        let hi = lo + 1;
        let mut next: HashMap<Matching, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (m, c) in states {
            let id_term = &c * id_w;
            let mut e_term = &c * e_w;
            let mut em = m.clone();
            if m[lo] as usize == hi {
                e_term = &e_term * &d;
            } else {
                let (p, q) = (m[lo] as usize, m[hi] as usize);
                em[p] = q as u8;
                em[q] = p as u8;
                em[lo] = hi as u8;
                em[hi] = lo as u8;
            }
            accumulate(&mut next, m, id_term);
            accumulate(&mut next, em, e_term);
        }
        next.retain(|_, c| !c.is_zero());
        states = next;
    }

    let mut d_pows = vec![LaurentPoly::one()];
    let mut total = LaurentPoly::zero();
    for (m, c) in states {
        let loops = closure_loops(&m, n);
        while d_pows.len() < loops {
            let next = d_pows.last().unwrap() * &d;
            d_pows.push(next);
        }
        total = &total + &(&c * &d_pows[loops - 1]);
    }
    total
}

fn accumulate(map: &mut HashMap<Matching, LaurentPoly>, key: Matching, value: LaurentPoly) {
    match map.get_mut(&key) {
        Some(existing) => *existing = &*existing + &value,
        None => {
            map.insert(key, value);
        }
    }
}

pub fn jones_polynomial(w: &BraidWord) -> Result<JonesPolynomial, InvariantError> {
    jones_polynomial_with(w, JonesOptions::default())
}

pub fn jones_polynomial_with(
    w: &BraidWord,
    opts: JonesOptions,
) -> Result<JonesPolynomial, InvariantError> {
    if w.strands() > opts.max_strands {
        return Err(InvariantError::TooManyStrands {
            strands: w.strands(),
            max: opts.max_strands,
        });
    }
    let bracket = bracket_transfer(w);
    let f = &writhe_factor(w.exponent_sum()) * &bracket;
    Ok(JonesPolynomial::from_a_poly(&f))
}

/// Jones polynomial from the full state sum over all `2^c` smoothings.
///
/// Exponential in the number of letters; a slow cross-check for
/// [`jones_polynomial`] on short words.
pub fn jones_state_sum(w: &BraidWord) -> JonesPolynomial {
    let n = w.strands();
    let letters = w.letters();
    let c = letters.len();
    // boundary points (level, position), levels 0..=c
    let idx = |level: usize, pos: usize| level * n + pos;
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for mask in 0u64..(1u64 << c) {
        let mut uf = UnionFind::new((c + 1) * n);
        let mut a_exp = 0i64;
        for (level, &g) in letters.iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            let smooth_e = mask >> level & 1 == 1;
            for pos in 0..n {
                if pos != i && pos != i + 1 {
                    uf.union(idx(level, pos), idx(level + 1, pos));
                }
            }
            if smooth_e {
                uf.union(idx(level, i), idx(level, i + 1));
                uf.union(idx(level + 1, i), idx(level + 1, i + 1));
            } else {
                uf.union(idx(level, i), idx(level + 1, i));
                uf.union(idx(level, i + 1), idx(level + 1, i + 1));
            }
            // the identity smoothing carries A for a positive letter
            let a_side = smooth_e != (g > 0);
            a_exp += if a_side { 1 } else { -1 };
        }
        for pos in 0..n {
            uf.union(idx(c, pos), idx(0, pos));
        }
        let loops = uf.count_roots();
        // A^a_exp d^{loops-1}
        let term = &LaurentPoly::monomial(1, a_exp) * &loop_value().pow(loops as u32 - 1);
        terms.extend(term.terms().map(|(e, c)| (e, c.clone())));
    }
    let bracket = LaurentPoly::from_terms(terms);
    let f = &writhe_factor(w.exponent_sum()) * &bracket;
    JonesPolynomial::from_a_poly(&f)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn count_roots(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
