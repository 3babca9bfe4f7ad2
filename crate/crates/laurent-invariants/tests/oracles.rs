use std::collections::BTreeMap;

use braid_core::BraidWord;
use laurent_invariants::{
    alexander_genus_bound, alexander_polynomial, jones_polynomial, normalize_alexander,
    reduced_burau, LaurentMatrix, LaurentPoly,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn w(n: usize, l: &[i32]) -> BraidWord {
    BraidWord::new(n, l.to_vec()).unwrap()
}

fn p(m: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(m, c)
}

/// `det(V - t Vᵀ)` for an integer Seifert matrix.
fn seifert_alexander(v: &[&[i64]]) -> LaurentPoly {
    let n = v.len();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| p(0, &[v[i][j], -v[j][i]])).collect())
        .collect();
    let det = LaurentMatrix::from_rows(rows).unwrap().determinant().unwrap();
    normalize_alexander(&det, 1)
}

#[test]
fn trefoil_matches_seifert_matrix() {
    let oracle = seifert_alexander(&[&[-1, 1], &[0, -1]]);
    assert_eq!(oracle, p(-1, &[1, -1, 1]));
    assert_eq!(alexander_polynomial(&w(2, &[1, 1, 1])).unwrap(), oracle);
    assert_eq!(alexander_polynomial(&w(2, &[-1, -1, -1])).unwrap(), oracle);
}

#[test]
fn figure_eight_matches_seifert_matrix() {
    let oracle = seifert_alexander(&[&[-1, 1], &[0, 1]]);
    assert_eq!(oracle, p(-1, &[-1, 3, -1]));
    assert_eq!(alexander_polynomial(&w(3, &[1, -2, 1, -2])).unwrap(), oracle);
}

#[test]
fn mirror_8_20_from_its_bandword() {
    // (σ2σ1²)σ2(σ2σ1²)⁻¹ · σ1σ2σ1⁻¹
    let beta = w(3, &[2, 1, 1, 2, -1, -1, -2, 1, 2, -1]);
    let delta = alexander_polynomial(&beta).unwrap();
    assert_eq!(delta, p(-2, &[1, -2, 3, -2, 1]));
    assert_eq!(delta, p(-1, &[1, -1, 1]).pow(2));
    assert_eq!(alexander_genus_bound(&delta).to_integer(), Some(2));
}

#[test]
fn laurent_arithmetic_examples() {
    assert_eq!(&p(0, &[-1, 1]) * &p(0, &[1, 1]), p(0, &[-1, 0, 1]));
    assert_eq!(p(0, &[-1, 0, 0, 1]).exact_div(&p(0, &[-1, 1])).unwrap(), p(0, &[1, 1, 1]));
    assert!(p(0, &[-1, 0, 1]).exact_div(&p(0, &[2, 1])).is_err());
}

#[test]
fn burau_of_empty_word_is_identity() {
    assert_eq!(reduced_burau(&w(3, &[])), LaurentMatrix::identity(2));
}

/// Kauffman bracket of the closure by summing over all smoothings, with
/// exponent maps instead of the library's polynomial type.
fn bracket_oracle(word: &BraidWord) -> BTreeMap<i64, i64> {
    let n = word.strands();
    let c = word.len();
    let mut out = BTreeMap::new();
    for mask in 0..1u32 << c {
        // arcs: (level, strand) for levels 0..=c, the closure glues c to 0
        let node = |lvl: usize, s: usize| lvl * n + s;
        let mut parent: Vec<usize> = (0..(c + 1) * n).collect();
        fn root(par: &mut [usize], mut x: usize) -> usize {
            while par[x] != x {
                x = par[x];
            }
            x
        }
        let mut join = |a: usize, b: usize| {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            parent[ra] = rb;
        };
        let mut a_exp = 0;
        for (lvl, &g) in word.letters().iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            let horizontal = mask >> lvl & 1 == 1;
            for s in (0..n).filter(|&s| s != i && s != i + 1) {
                join(node(lvl, s), node(lvl + 1, s));
            }
            if horizontal {
                join(node(lvl, i), node(lvl, i + 1));
                join(node(lvl + 1, i), node(lvl + 1, i + 1));
            } else {
                join(node(lvl, i), node(lvl + 1, i));
                join(node(lvl, i + 1), node(lvl + 1, i + 1));
            }
            // vertical smoothing is the A-smoothing of a positive crossing
            a_exp += if horizontal == (g > 0) { -1 } else { 1 };
        }
        for s in 0..n {
            join(node(c, s), node(0, s));
        }
        let loops = (0..parent.len()).filter(|&x| root(&mut parent, x) == x).count();
        // A^a_exp (-A^2 - A^-2)^(loops - 1)
        let mut term = BTreeMap::from([(a_exp, 1i64)]);
        for _ in 1..loops {
            let mut next = BTreeMap::new();
            for (&e, &v) in &term {
                *next.entry(e + 2).or_insert(0) -= v;
                *next.entry(e - 2).or_insert(0) -= v;
            }
            term = next;
        }
        for (e, v) in term {
            *out.entry(e).or_insert(0) += v;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Jones polynomial in `t^{1/4} = A^{-1}` from the bracket oracle.
fn jones_oracle(word: &BraidWord) -> LaurentPoly {
    let writhe = word.exponent_sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    LaurentPoly::from_terms(
        bracket_oracle(word)
            .into_iter()
            .map(|(e, v)| (-(e - 3 * writhe), BigInt::from(sign * v))),
    )
}

#[test]
fn jones_matches_bracket_oracle_on_named_knots() {
    for (n, l) in [
        (2, vec![1, 1, 1]),
        (3, vec![1, -2, 1, -2]),
        (2, vec![1, 1]),
        (3, vec![1, 1, 2, -1, 2]),
        (4, vec![1, 2, 3, -1, 2, -3]),
    ] {
        let b = w(n, &l);
        assert_eq!(jones_polynomial(&b).unwrap().quarter_grid(), &jones_oracle(&b), "{l:?}");
    }
    assert_eq!(jones_oracle(&w(2, &[1, 1, 1])), p(4, &[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1]));
}

#[test]
fn jones_matches_bracket_oracle_exhaustively_on_short_words() {
    for n in 2..=4usize {
        let max_len = [0, 0, 7, 4, 3][n];
        let alphabet: Vec<i32> = (1..n as i32).flat_map(|g| [g, -g]).collect();
        for len in 0..=max_len {
            let mut idx = vec![0usize; len];
            loop {
                let b = w(n, &idx.iter().map(|&k| alphabet[k]).collect::<Vec<_>>());
                assert_eq!(jones_polynomial(&b).unwrap().quarter_grid(), &jones_oracle(&b));
                let Some(pos) = (0..len).rev().find(|&k| idx[k] + 1 < alphabet.len()) else {
                    break;
                };
                idx[pos] += 1;
                idx[pos + 1..].iter_mut().for_each(|k| *k = 0);
            }
        }
    }
}

fn word_strategy(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let g = n as i32 - 1;
        prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
            BraidWord::new(n, v.into_iter().map(|(i, s)| if s { i } else { -i }).collect())
                .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alexander_is_markov_invariant(
        b in word_strategy(5, 15),
        u in prop::collection::vec(any::<i32>(), 0..6),
        positive in any::<bool>(),
    ) {
        let g = b.strands() as i32 - 1;
        let conj = BraidWord::new(
            b.strands(),
            u.into_iter().map(|x| (x.rem_euclid(g) + 1) * if x % 2 == 0 { 1 } else { -1 }).collect(),
        ).unwrap();
        let delta = alexander_polynomial(&b).unwrap();
        prop_assert_eq!(alexander_polynomial(&b.conjugate_closure(&conj).unwrap()).unwrap(), delta.clone());
        prop_assert_eq!(alexander_polynomial(&b.stabilize(positive)).unwrap(), delta);
    }

    #[test]
    fn jones_is_markov_invariant(b in word_strategy(4, 12), positive in any::<bool>(), k in 0usize..12) {
        let j = jones_polynomial(&b).unwrap();
        prop_assert_eq!(jones_polynomial(&b.rotate(k)).unwrap(), j.clone());
        prop_assert_eq!(jones_polynomial(&b.stabilize(positive)).unwrap(), j);
    }

    #[test]
    fn alexander_is_symmetric_and_unital_on_knots(b in word_strategy(5, 15)) {
        let delta = alexander_polynomial(&b).unwrap();
        if b.closure_summary().components == 1 {
            prop_assert_eq!(delta.mirror(), delta.clone());
            prop_assert_eq!(delta.eval_at_one(), BigInt::from(1));
        }
    }

    #[test]
    fn burau_determinant_is_divisible(b in word_strategy(6, 15)) {
        let n = b.strands();
        let det = (&reduced_burau(&b) - &LaurentMatrix::identity(n - 1)).determinant().unwrap();
        let lhs = &det * &p(0, &[-1, 1]);
        let mut tn = vec![0i64; n + 1];
        tn[0] = -1;
        tn[n] = 1;
        prop_assert!(lhs.exact_div(&p(0, &tn)).is_ok());
    }
}
