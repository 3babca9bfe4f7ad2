//! The acceptance checklist: nine criteria, each a list of named checks.

use std::time::Instant;

use braid_core::{band_generator, BraidError, BraidWord, HalfInteger, HandleReducer, Letter};
use constructions::{
    m8_20_bandword, m8_20_sites, make_beta_n, make_beta_n_qp, make_gamma_n, plumb_beta,
    reference_beta_prime, reference_gamma, reference_gamma_symmetric, thm_a_embed,
    thm_a_unknotify, verify_band_surgery_sequence, CertificateOptions, ConstructionError,
};
use laurent_invariants::{
    alexander_genus_bound, alexander_polynomial, jones_polynomial_with, jones_state_sum,
    JonesOptions, LaurentPoly,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use surfaces_bandwords::{bennequin_summary, qp_ribbon_summary, ToBraidWord};

pub const DEFAULT_SEED: u64 = 0x8_20;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// `None` skips every Jones computation.
    pub jones: Option<JonesOptions>,
    pub budget: u64,
    pub seed: u64,
    /// Random words per property suite.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jones: Some(JonesOptions::default()),
            budget: braid_core::DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            samples: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
    /// Reported values that are not asserted.
    pub notes: Vec<String>,
    pub skipped: Vec<String>,
    #[serde(skip)]
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub criteria: Vec<Criterion>,
}

#[derive(Default)]
struct Builder {
    checks: Vec<CheckLine>,
    notes: Vec<String>,
    skipped: Vec<String>,
}

impl Builder {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn error(&mut self, name: impl Into<String>, err: impl std::fmt::Display) {
        self.check(name, false, format!("error: {err}"));
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn skip(&mut self, what: impl Into<String>) {
        self.skipped.push(what.into());
    }
}

pub const TITLES: [&str; 9] = [
    "band generator expansion",
    "example genera of β_0 and β_1",
    "genus family β_n, γ_n",
    "band-surgery sequence",
    "worked m(8_20) example",
    "sublink recovery",
    "slice-genus bookkeeping",
    "invariance property suites",
    "presentation equality and plumbing",
];

pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    let reducer = HandleReducer::new(opts.budget);
    let runners: [fn(&VerifyOptions, &HandleReducer, &mut Builder); 9] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let criteria: Vec<Criterion> = runners
        .iter()
        .zip(TITLES)
        .enumerate()
        .map(|(idx, (run, title))| {
            let start = Instant::now();
            let mut b = Builder::default();
            run(opts, &reducer, &mut b);
            Criterion {
                id: idx + 1,
                title: title.to_string(),
                passed: !b.checks.is_empty() && b.checks.iter().all(|c| c.passed),
                checks: b.checks,
                notes: b.notes,
                skipped: b.skipped,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect();
    VerifyReport {
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

impl VerifyReport {
    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let time = if timings {
                format!("  ({} ms)", c.millis)
            } else {
                String::new()
            };
            out.push_str(&format!("[{mark}] {}. {}{time}\n", c.id, c.title));
            for k in &c.checks {
                let mark = if k.passed { "ok" } else { "FAILED" };
                out.push_str(&format!("    {mark:6} {}: {}\n", k.name, k.detail));
            }
            for n in &c.notes {
                out.push_str(&format!("    note   {n}\n"));
            }
            for s in &c.skipped {
                out.push_str(&format!("    skip   {s}\n"));
            }
        }
        let failed: Vec<String> = self
            .criteria
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.id.to_string())
            .collect();
        if failed.is_empty() {
            out.push_str("all criteria passed\n");
        } else {
            out.push_str(&format!("failed criteria: {}\n", failed.join(", ")));
        }
        out
    }
}

fn prefix_product(i: usize, j: usize, n: usize) -> BraidWord {
    let mut letters: Vec<Letter> = Vec::new();
    for g in i..j - 1 {
        letters.push(g as Letter);
    }
    letters.push((j - 1) as Letter);
    for g in (i..j - 1).rev() {
        letters.push(-(g as Letter));
    }
    BraidWord::new(n, letters).expect("indices below n")
}

/// `(σ_{j-1} ⋯ σ_{i+1})^{-1} σ_i (σ_{j-1} ⋯ σ_{i+1})`, the same element
/// conjugated from the other end.
fn descending_form(i: usize, j: usize, n: usize) -> BraidWord {
    let mut letters: Vec<Letter> = (i + 1..j).rev().map(|g| -(g as Letter)).collect();
    letters.push(i as Letter);
    letters.extend((i + 1..j).map(|g| g as Letter));
    BraidWord::new(n, letters).expect("indices below n")
}

fn criterion_1(_: &VerifyOptions, reducer: &HandleReducer, b: &mut Builder) {
    match band_generator(1, 3, 3) {
        Ok(w) => b.check("σ_{1,3} in B_3", w.letters() == [1, 2, -1], w.to_string()),
        Err(e) => b.error("σ_{1,3} in B_3", e),
    }
    let mut adjacent = true;
    let mut literal = 0;
    let mut mismatches = Vec::new();
    let mut unequal = Vec::new();
    let mut equal = Ok(0usize);
    for n in 2..=6 {
        for i in 1..n {
            for j in i + 1..=n {
                let Ok(w) = band_generator(i, j, n) else {
                    mismatches.push(format!("({i},{j}) in B_{n}"));
                    continue;
                };
                if j == i + 1 {
                    adjacent &= w.letters() == [i as Letter];
                }
                if w == prefix_product(i, j, n) {
                    literal += 1;
                } else {
                    mismatches.push(format!("({i},{j}) in B_{n}"));
                }
                if let Ok(count) = &mut equal {
                    match reducer.equal(&w, &descending_form(i, j, n)) {
                        Ok(true) => *count += 1,
                        Ok(false) => unequal.push(format!("({i},{j}) in B_{n}")),
                        Err(e) => equal = Err(e),
                    }
                }
            }
        }
    }
    b.check("σ_{i,i+1} = σ_i", adjacent, "n ≤ 6");
    b.check(
        "prefix-product formula",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{literal} generators, 1 ≤ i < j ≤ n ≤ 6")
        } else {
            format!("mismatch at {}", mismatches.join(", "))
        },
    );
    match equal {
        Ok(count) => b.check(
            "equals the descending conjugate",
            unequal.is_empty(),
            if unequal.is_empty() {
                format!("{count} generators by handle reduction")
            } else {
                format!("differs at {}", unequal.join(", "))
            },
        ),
        Err(e) => b.error("equals the descending conjugate", e),
    }
}

fn criterion_2(_: &VerifyOptions, _: &HandleReducer, b: &mut Builder) {
    for (n, breadth, genus) in [(0usize, 2u64, 1i64), (1, 6, 3)] {
        let w = make_beta_n(n);
        let delta = match alexander_polynomial(&w.to_braid_word()) {
            Ok(d) => d,
            Err(e) => return b.error(format!("Δ(β_{n})"), e),
        };
        b.check(
            format!("breadth Δ(β_{n}) = {breadth}"),
            delta.breadth() == breadth,
            format!("Δ = {delta}"),
        );
        let bound = alexander_genus_bound(&delta);
        let upper = bennequin_summary(&w).ok().and_then(|s| s.genus);
        b.check(
            format!("g(β_{n}) = {genus}"),
            bound == HalfInteger::from_int(genus) && upper == Some(bound),
            format!(
                "Alexander bound {bound}, Bennequin genus {}",
                upper.map_or("-".into(), |g| g.to_string())
            ),
        );
    }
}

fn criterion_3(_: &VerifyOptions, _: &HandleReducer, b: &mut Builder) {
    for n in 0..=3usize {
        let gamma = bennequin_summary(&make_gamma_n(n));
        let beta_word = make_beta_n(n);
        let beta = bennequin_summary(&beta_word);
        match (gamma, beta) {
            (Ok(g), Ok(s)) => {
                b.check(
                    format!("Bennequin g(γ_{n}) = {}", n + 1),
                    g.genus == Some(HalfInteger::from_int(n as i64 + 1)),
                    format!("χ = {}", g.euler_characteristic),
                );
                b.check(
                    format!("Bennequin g(β_{n}) = {}", 2 * n + 1),
                    s.genus == Some(HalfInteger::from_int(2 * n as i64 + 1))
                        && s.euler_characteristic == -1 - 4 * n as i64,
                    format!("χ = {}", s.euler_characteristic),
                );
                match alexander_polynomial(&beta_word.to_braid_word()) {
                    Ok(delta) if n <= 1 => b.check(
                        format!("Alexander bound certifies g(β_{n})"),
                        Some(alexander_genus_bound(&delta)) == s.genus,
                        format!("breadth {}", delta.breadth()),
                    ),
                    Ok(delta) => b.note(format!(
                        "β_{n}: breadth {} so {} ≤ g ≤ {}",
                        delta.breadth(),
                        alexander_genus_bound(&delta),
                        2 * n + 1
                    )),
                    Err(e) => b.error(format!("Δ(β_{n})"), e),
                }
            }
            (Err(e), _) | (_, Err(e)) => b.error(format!("surfaces for n={n}"), e),
        }
    }
}

fn criterion_4(_: &VerifyOptions, reducer: &HandleReducer, b: &mut Builder) {
    for n in 0..=3 {
        match verify_band_surgery_sequence(n, reducer) {
            Ok(rep) => b.check(
                format!("β_{n} → γ_{n}"),
                rep.passed(),
                format!(
                    "{} positive insertions, equal to γ_{n}: {}",
                    rep.insertions.len(),
                    rep.equals_gamma
                ),
            ),
            Err(e) => b.error(format!("β_{n} → γ_{n}"), e),
        }
    }
}

fn cert_opts(opts: &VerifyOptions) -> CertificateOptions {
    CertificateOptions { jones: opts.jones }
}

fn criterion_5(opts: &VerifyOptions, _: &HandleReducer, b: &mut Builder) {
    let beta = m8_20_bandword();
    let emb = match thm_a_embed(&beta, &m8_20_sites()) {
        Ok(e) => e,
        Err(e) => return b.error("embedding", e),
    };
    let out = match thm_a_unknotify(&emb, cert_opts(opts)) {
        Ok(o) => o,
        Err(ConstructionError::CertificateFailed(o)) => *o,
        Err(e) => return b.error("unknotting", e),
    };
    let reference_bp = reference_beta_prime().free_reduce();
    let bp = out.beta_prime.free_reduce();
    b.check(
        "β′ matches the reference word",
        bp == reference_bp,
        format!("computed {bp} in B_{}; reference {reference_bp} in B_5", bp.strands()),
    );
    let g = out.gamma.free_reduce();
    let reference_g = reference_gamma().free_reduce();
    b.check(
        "γ matches the reference word",
        g == reference_g,
        format!("computed {g} in B_{}; reference {reference_g} in B_5", g.strands()),
    );
    let cert = &out.certificate;
    b.check(
        "components(β′) = 3",
        cert.beta_prime.components == 3,
        format!("{} components", cert.beta_prime.components),
    );
    b.check(
        "components(γ) = 1",
        cert.gamma.components == 1,
        format!("{} components", cert.gamma.components),
    );
    b.check(
        "sl(γ) = -1",
        cert.gamma.self_linking == -1,
        format!("sl = {}", cert.gamma.self_linking),
    );
    b.check(
        "Δ(γ) = 1",
        cert.gamma_alexander.is_one(),
        format!("Δ = {}", cert.gamma_alexander),
    );
    match &cert.gamma_jones {
        Some(j) => b.check("V(γ) = 1", j.is_one(), format!("V = {j}")),
        None => b.skip("V(γ) = 1"),
    }
    b.check(
        "e(γ) = e(β′) + 2",
        cert.gamma.exponent_sum == cert.beta_prime.exponent_sum + 2,
        format!("{} vs {}", cert.gamma.exponent_sum, cert.beta_prime.exponent_sum),
    );
    for c in cert.checks.iter().filter(|c| !c.passed) {
        b.note(format!("construction certificate: {} ({})", c.name, c.detail));
    }
    for (name, w) in [
        ("reference β′", reference_beta_prime()),
        ("reference γ", reference_gamma()),
        ("reference γ (symmetric)", reference_gamma_symmetric()),
    ] {
        b.note(describe_reference(name, &w, opts));
    }
}

fn describe_reference(name: &str, w: &BraidWord, opts: &VerifyOptions) -> String {
    let s = w.closure_summary();
    let delta = alexander_polynomial(w).map_or_else(|e| e.to_string(), |d| d.to_string());
    let jones = match opts.jones {
        Some(o) => jones_polynomial_with(w, o)
            .map_or_else(|e| e.to_string(), |j| j.to_string()),
        None => "skipped".to_string(),
    };
    format!(
        "{name}: components {}, e {}, sl {}, Δ = {delta}, V = {jones}",
        s.components, s.exponent_sum, s.self_linking
    )
}

fn m8_20_alexander() -> LaurentPoly {
    LaurentPoly::from_i64s(-2, &[1, -2, 3, -2, 1])
}

fn criterion_6(_: &VerifyOptions, _: &HandleReducer, b: &mut Builder) {
    let beta = m8_20_bandword();
    let emb = match thm_a_embed(&beta, &m8_20_sites()) {
        Ok(e) => e,
        Err(e) => return b.error("embedding", e),
    };
    let added = emb.added_components();
    let bp = emb.beta_prime_word();
    b.note(format!(
        "{} added component(s) deleted from β′ in B_{}",
        added.len(),
        bp.strands()
    ));
    let sub = match bp.delete_strands(&added) {
        Ok(s) => s,
        Err(e) => return b.error("deleting the added strands", e),
    };
    b.check("3 strands remain", sub.strands() == 3, sub.to_string());
    b.check(
        "exponent sum 2",
        sub.exponent_sum() == 2,
        format!("e = {}", sub.exponent_sum()),
    );
    let target = m8_20_alexander();
    match alexander_polynomial(&sub) {
        Ok(d) => b.check("Δ = t^-2 - 2t^-1 + 3 - 2t + t^2", d == target, format!("Δ = {d}")),
        Err(e) => b.error("Δ of the sublink", e),
    }
    let direct = beta.to_braid_word();
    match alexander_polynomial(&direct) {
        Ok(d) => b.check(
            "matches β",
            d == target && direct.exponent_sum() == 2 && direct.closure_summary().components == 1,
            format!("Δ(β) = {d}, e(β) = {}", direct.exponent_sum()),
        ),
        Err(e) => b.error("Δ(β)", e),
    }
}

fn criterion_7(_: &VerifyOptions, _: &HandleReducer, b: &mut Builder) {
    let s = qp_ribbon_summary(&m8_20_bandword());
    b.check(
        "g_* = 0 for m(8_20)",
        s.genus == Some(HalfInteger::from_int(0)),
        format!("{} bands on {} strands, χ = {}", s.handles, s.strands, s.euler_characteristic),
    );
    for n in 0..=3 {
        let s = qp_ribbon_summary(&make_beta_n_qp(n));
        b.check(
            format!("g_* = 0 for β_{n}"),
            s.genus == Some(HalfInteger::from_int(0)) && s.handles == 3 && s.strands == 4,
            format!("{} bands on {} strands, χ = {}", s.handles, s.strands, s.euler_characteristic),
        );
    }
}

fn random_word(rng: &mut StdRng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    random_letters(rng, n, len)
}

fn random_letters(rng: &mut StdRng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n) as Letter;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters below n")
}

fn all_words(n: usize, len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<Letter> = (1..n as Letter).flat_map(|g| [g, -g]).collect();
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    words
        .into_iter()
        .map(|l| BraidWord::new(n, l).expect("letters below n"))
        .collect()
}

fn criterion_8(opts: &VerifyOptions, _: &HandleReducer, b: &mut Builder) {
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let mut alexander_bad = Vec::new();
    let mut jones_bad = Vec::new();
    let mut knots = 0;
    let mut symmetric_bad = Vec::new();
    for _ in 0..opts.samples {
        let w = random_word(&mut rng, 5, 15);
        let len = rng.gen_range(1..=6);
        let u = random_letters(&mut rng, w.strands(), len);
        let conj = w.conjugate_closure(&u).expect("same strand count");
        let stab = w.stabilize(rng.gen_bool(0.5));
        let moved = [conj, stab];
        match alexander_polynomial(&w) {
            Ok(d) => {
                for m in &moved {
                    if alexander_polynomial(m).ok().as_ref() != Some(&d) {
                        alexander_bad.push(format!("{w} vs {m}"));
                    }
                }
                if w.closure_summary().components == 1 {
                    knots += 1;
                    let one = d.eval_at_one();
                    if d.mirror() != d || (one != 1.into() && one != (-1).into()) {
                        symmetric_bad.push(format!("{w}: Δ = {d}"));
                    }
                }
            }
            Err(e) => alexander_bad.push(format!("{w}: {e}")),
        }
        if let Some(o) = opts.jones {
            match jones_polynomial_with(&w, o) {
                Ok(v) => {
                    for m in &moved {
                        if jones_polynomial_with(m, o).ok().as_ref() != Some(&v) {
                            jones_bad.push(format!("{w} vs {m}"));
                        }
                    }
                }
                Err(e) => jones_bad.push(format!("{w}: {e}")),
            }
        }
    }
    let summary = |bad: &[String]| {
        if bad.is_empty() {
            format!("{} words, n ≤ 5, length ≤ 15", opts.samples)
        } else {
            format!("{} failures, first {}", bad.len(), bad[0])
        }
    };
    b.check(
        "Alexander under conjugation and stabilization",
        alexander_bad.is_empty(),
        summary(&alexander_bad),
    );
    b.check(
        "Δ symmetric with Δ(1) = ±1 on knots",
        symmetric_bad.is_empty(),
        if symmetric_bad.is_empty() {
            format!("{knots} knot closures")
        } else {
            symmetric_bad[0].clone()
        },
    );
    let Some(o) = opts.jones else {
        b.skip("Jones under conjugation and stabilization");
        b.skip("Jones against the state sum");
        return;
    };
    b.check(
        "Jones under conjugation and stabilization",
        jones_bad.is_empty(),
        summary(&jones_bad),
    );

    let mut compared = 0;
    let mut bracket_bad = Vec::new();
    let mut compare = |w: &BraidWord| {
        compared += 1;
        let state = jones_state_sum(w);
        if jones_polynomial_with(w, o).ok().as_ref() != Some(&state) {
            bracket_bad.push(w.to_string());
        }
    };
    for (n, max_len) in [(2usize, 8usize), (3, 5), (4, 4)] {
        for len in 0..=max_len {
            for w in all_words(n, len) {
                compare(&w);
            }
        }
    }
    for _ in 0..opts.samples {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(9..=12);
        compare(&random_letters(&mut rng, n, len));
    }
    b.check(
        "Jones against the state sum",
        bracket_bad.is_empty(),
        if bracket_bad.is_empty() {
            format!("{compared} words: exhaustive to length 8/5/4 on 2/3/4 strands, random to 12")
        } else {
            format!("{} mismatches, first {}", bracket_bad.len(), bracket_bad[0])
        },
    );
}

fn criterion_9(_: &VerifyOptions, reducer: &HandleReducer, b: &mut Builder) {
    for n in 0..=2 {
        let a = make_beta_n(n).to_braid_word();
        let q = make_beta_n_qp(n).to_braid_word();
        match reducer.equal(&a, &q) {
            Ok(eq) => b.check(format!("β_{n} presentations agree"), eq, "handle reduction"),
            Err(e) => b.error(format!("β_{n} presentations agree"), e),
        }
    }
    for n in 1..=3 {
        match plumb_beta(n) {
            Ok(w) => b.check(
                format!("four plumbings β_{} → β_{n}", n - 1),
                w == make_beta_n(n),
                w.to_string(),
            ),
            Err(e) => b.error(format!("four plumbings β_{} → β_{n}", n - 1), e),
        }
    }
}

/// Whether any criterion stopped on an exhausted handle-reduction budget.
pub fn budget_exhausted(report: &VerifyReport, budget: u64) -> bool {
    let needle = BraidError::BudgetExceeded { budget }.to_string();
    report
        .criteria
        .iter()
        .flat_map(|c| &c.checks)
        .any(|k| k.detail.contains(&needle))
}
