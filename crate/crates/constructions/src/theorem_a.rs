//! Embedding a quasipositive braid into one whose band surgery gives an unknot.
//!
//! Each site marks a full twist `σ_j^{2ε}` inside a band's conjugator where
//! one of the two twisting strands runs on to the band core (the "finger").
//! A new strand `x` is placed at a home position next to the twist and lifted
//! under every other crossing. The twist is replaced by a block `Z` on the
//! three strands `j, j+1, j+2` in which `x` clasps the finger; deleting `x`
//! from `Z` gives back `σ_j^{2ε}`. The unknotting braid `γ` inserts one
//! positive generator into each `Z` on the left conjugator only, so
//! `e(γ) = e(β′) + m`.
//!
//! Rules, with local generators `1 = σ_j`, `2 = σ_{j+1}`:
//!
//! | finger | ε | home of `x` | `Z`            | `γ` block          |
//! |--------|---|-------------|----------------|--------------------|
//! | right  | + | `j + 2`     | `1 1 -2 -2`    | `1 2 1 -2 -2`      |
//! | right  | − | `j`         | `-2 1 1 -2`    | `-2 1 2 1 -2`      |
//! | left   | − | `j`         | `1 1 -2 -2`    | `1 2 1 -2 -2`      |
//! | left   | + | `j`         | `-1 -2 -2 -1 2 2` | `-1 -2 -2 -1 2 1 2` |

use std::collections::BTreeSet;

use braid_core::{BraidWord, ClosureSummary, Letter};
use laurent_invariants::{
    alexander_polynomial, jones_polynomial_with, JonesOptions, JonesPolynomial, LaurentPoly,
};
use serde::{Deserialize, Serialize};
use surfaces_bandwords::{Band, QPBandWord, ToBraidWord};

use crate::error::ConstructionError;

/// A full twist `σ_k^{2·sign}` at letters `pos, pos+1` of band `band`'s conjugator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransformSite {
    pub band: usize,
    pub pos: usize,
    pub k: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SiteList {
    pub sites: Vec<TransformSite>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Finger {
    Left,
    Right,
}

struct Rule {
    /// `x` sits at `j + home_offset`.
    home_offset: usize,
    z: &'static [Letter],
    insert_at: usize,
    insert: Letter,
}

fn rule(finger: Finger, sign: i8) -> Rule {
    match (finger, sign > 0) {
        (Finger::Right, true) => Rule {
            home_offset: 2,
            z: &[1, 1, -2, -2],
            insert_at: 1,
            insert: 2,
        },
        (Finger::Right, false) => Rule {
            home_offset: 0,
            z: &[-2, 1, 1, -2],
            insert_at: 2,
            insert: 2,
        },
        (Finger::Left, false) => Rule {
            home_offset: 0,
            z: &[1, 1, -2, -2],
            insert_at: 1,
            insert: 2,
        },
        (Finger::Left, true) => Rule {
            home_offset: 0,
            z: &[-1, -2, -2, -1, 2, 2],
            insert_at: 5,
            insert: 1,
        },
    }
}

fn mismatch(site: usize, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::PatternMismatch {
        site,
        reason: reason.into(),
    }
}

/// Checks the twist pattern and decides which twisting strand reaches the core.
fn classify(beta: &QPBandWord, idx: usize, s: &TransformSite) -> Result<Finger, ConstructionError> {
    let n = beta.strands();
    let band = beta
        .bands()
        .get(s.band)
        .ok_or_else(|| mismatch(idx, format!("band {} does not exist", s.band)))?;
    if s.sign != 1 && s.sign != -1 {
        return Err(mismatch(idx, format!("sign must be ±1, got {}", s.sign)));
    }
    if s.k == 0 || s.k >= n {
        return Err(mismatch(idx, format!("σ{} is out of range for {n} strands", s.k)));
    }
    let twist = s.sign as Letter * s.k as Letter;
    if band.conjugator.get(s.pos..s.pos + 2) != Some(&[twist, twist][..]) {
        return Err(mismatch(
            idx,
            format!("conjugator letters {}..{} are not σ{}^{}", s.pos, s.pos + 2, s.k, 2 * s.sign),
        ));
    }
    // follow the two twisting strands through the rest of the conjugator
    let rest = BraidWord::new(n, band.conjugator[s.pos + 2..].to_vec())?;
    let perm = rest.permutation();
    let (left, right) = (perm.apply(s.k - 1), perm.apply(s.k));
    let core = [band.index - 1, band.index];
    match (core.contains(&left), core.contains(&right)) {
        (false, true) => Ok(Finger::Right),
        (true, false) => Ok(Finger::Left),
        (true, true) => Err(mismatch(idx, "the twist is between the band's own two strands")),
        (false, false) => Err(mismatch(idx, "neither twisting strand reaches the band core")),
    }
}

#[derive(Debug, Clone, Copy)]
struct Item {
    g: Letter,
    /// Present in the left conjugator of `γ` only.
    extra: bool,
}

#[derive(Debug, Clone)]
struct WorkBand {
    conj: Vec<Item>,
    core: usize,
}

#[derive(Debug, Clone, Copy)]
struct Pending {
    band: usize,
    pos: usize,
    j: usize,
    sign: i8,
    finger: Finger,
}

/// One letter with a new strand inserted at position `h`; crossings of the
/// strands on either side of `h` let the new strand pass under.
fn lift_letter(item: Item, h: usize, out: &mut Vec<Item>) {
    let i = item.g.unsigned_abs() as usize;
    let e = item.g.signum();
    let mk = |g: Letter| Item { g, extra: item.extra };
    if i + 1 < h {
        out.push(item);
    } else if i >= h {
        out.push(mk(e * (i as Letter + 1)));
    } else {
        let h = h as Letter;
        out.extend([mk(h - 1), mk(e * h), mk(-(h - 1))]);
    }
}

/// The result of inserting one new strand per site.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub beta: QPBandWord,
    pub sites: Vec<TransformSite>,
    pub beta_prime: QPBandWord,
    /// Home positions (1-based) of the added strands in `β′`, in site order.
    pub added_strands: Vec<usize>,
    #[serde(skip)]
    gamma_left: Vec<Vec<Letter>>,
}

impl Embedding {
    pub fn beta_prime_word(&self) -> BraidWord {
        self.beta_prime.to_braid_word()
    }

    /// `β′` with one positive generator inserted into each site's block.
    pub fn gamma(&self) -> BraidWord {
        let n = self.beta_prime.strands();
        let mut letters = Vec::new();
        for (band, left) in self.beta_prime.bands().iter().zip(&self.gamma_left) {
            letters.extend_from_slice(left);
            letters.push(band.index as Letter);
            letters.extend(band.conjugator.iter().rev().map(|&g| -g));
        }
        BraidWord::new(n, letters).expect("letters stay in range")
    }

    /// Closure components of `β′` traced by the added strands.
    pub fn added_components(&self) -> BTreeSet<usize> {
        let w = self.beta_prime_word();
        self.added_strands
            .iter()
            .filter_map(|&h| w.component_of(h - 1))
            .collect()
    }
}

/// Inserts one new strand per site; the band count is unchanged.
pub fn thm_a_embed(
    beta: &QPBandWord,
    sites: &[TransformSite],
) -> Result<Embedding, ConstructionError> {
    let mut pending = Vec::with_capacity(sites.len());
    for (idx, s) in sites.iter().enumerate() {
        let finger = classify(beta, idx, s)?;
        for (other, t) in sites[..idx].iter().enumerate() {
            if t.band == s.band && t.pos.abs_diff(s.pos) < 2 {
                return Err(ConstructionError::OverlappingSites {
                    first: other,
                    second: idx,
                });
            }
        }
        pending.push(Pending {
            band: s.band,
            pos: s.pos,
            j: s.k,
            sign: s.sign,
            finger,
        });
    }

    let mut bands: Vec<WorkBand> = beta
        .bands()
        .iter()
        .map(|b| WorkBand {
            conj: b.conjugator.iter().map(|&g| Item { g, extra: false }).collect(),
            core: b.index,
        })
        .collect();
    let mut homes: Vec<usize> = Vec::new();

    for current in 0..pending.len() {
        let site = pending[current];
        let r = rule(site.finger, site.sign);
        let h = site.j + r.home_offset;
        let off = site.j as Letter - 1;
        let local = |z: Letter| z.signum() * (z.abs() + off);

        for (bi, band) in bands.iter_mut().enumerate() {
            let mut out = Vec::with_capacity(band.conj.len() + 8);
            let mut idx = 0;
            while idx < band.conj.len() {
                if bi == site.band && idx == site.pos {
                    for (q, &z) in r.z.iter().enumerate() {
                        if q == r.insert_at {
                            out.push(Item { g: local(r.insert), extra: true });
                        }
                        out.push(Item { g: local(z), extra: false });
                    }
                    if r.insert_at == r.z.len() {
                        out.push(Item { g: local(r.insert), extra: true });
                    }
                    idx += 2;
                    continue;
                }
                let later = pending[current + 1..]
                    .iter_mut()
                    .find(|p| p.band == bi && p.pos == idx);
                if let Some(p) = later {
                    let e = p.sign as Letter;
                    p.pos = out.len();
                    if p.j + 1 < h {
                        out.extend_from_slice(&band.conj[idx..idx + 2]);
                    } else if p.j >= h {
                        p.j += 1;
                        let g = e * p.j as Letter;
                        out.extend([Item { g, extra: false }; 2]);
                    } else {
                        // σ_{h-1}^{2ε} lifts to σ_{h-1} σ_h^{2ε} σ_{h-1}^{-1}
                        let hl = h as Letter;
                        out.push(Item { g: hl - 1, extra: false });
                        p.pos = out.len();
                        p.j = h;
                        out.extend([Item { g: e * hl, extra: false }; 2]);
                        out.push(Item { g: -(hl - 1), extra: false });
                    }
                    idx += 2;
                    continue;
                }
                lift_letter(band.conj[idx], h, &mut out);
                idx += 1;
            }
            if band.core + 1 == h {
                out.push(Item { g: h as Letter - 1, extra: false });
                band.core = h;
            } else if band.core >= h {
                band.core += 1;
            }
            band.conj = out;
        }
        for home in homes.iter_mut() {
            if *home >= h {
                *home += 1;
            }
        }
        homes.push(h);
    }

    let strands = beta.strands() + sites.len();
    let qp_bands = bands
        .iter()
        .map(|b| {
            let conj = b.conj.iter().filter(|i| !i.extra).map(|i| i.g).collect();
            Band::new(conj, b.core)
        })
        .collect();
    let gamma_left = bands
        .iter()
        .map(|b| b.conj.iter().map(|i| i.g).collect())
        .collect();
    Ok(Embedding {
        beta: beta.clone(),
        sites: sites.to_vec(),
        beta_prime: QPBandWord::new(strands, qp_bands)?,
        added_strands: homes,
        gamma_left,
    })
}

/// Options for the invariant checks of the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateOptions {
    /// `None` skips the Jones polynomial.
    pub jones: Option<JonesOptions>,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions {
            jones: Some(JonesOptions::default()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub beta_prime: ClosureSummary,
    pub gamma: ClosureSummary,
    pub gamma_alexander: LaurentPoly,
    pub gamma_jones: Option<JonesPolynomial>,
    pub sublink: BraidWord,
    pub sublink_alexander: LaurentPoly,
    pub beta_alexander: LaurentPoly,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremAOutput {
    pub beta_prime: BraidWord,
    pub gamma: BraidWord,
    pub added_strands: Vec<usize>,
    pub certificate: Certificate,
}

/// Builds `γ` and certifies it: `γ` closes to a transverse unknot candidate
/// (one component, `sl = −1`, `Δ = 1`, Jones `= 1`), `e(γ) = e(β′) + m`, and
/// deleting the added strands from `β′` gives back the invariants of `β`.
pub fn thm_a_unknotify(
    emb: &Embedding,
    opts: CertificateOptions,
) -> Result<TheoremAOutput, ConstructionError> {
    let m = emb.added_strands.len();
    let beta_word = emb.beta.to_braid_word();
    let bp = emb.beta_prime_word();
    let gamma = emb.gamma();
    let bs = beta_word.closure_summary();
    let bps = bp.closure_summary();
    let gs = gamma.closure_summary();
    let mut checks = Vec::new();

    checks.push(Check::new(
        "band count preserved",
        emb.beta_prime.band_count() == emb.beta.band_count(),
        format!("{} -> {}", emb.beta.band_count(), emb.beta_prime.band_count()),
    ));
    checks.push(Check::new(
        "components(β′) = components(β) + m",
        bps.components == bs.components + m,
        format!("{} vs {} + {m}", bps.components, bs.components),
    ));
    let added = emb.added_components();
    let sublink = if added.len() == m && bps.components > m {
        bp.delete_strands(&added)?
    } else {
        bp.clone()
    };
    checks.push(Check::new(
        "added strands close up separately",
        added.len() == m && emb.added_strands.iter().all(|&h| bp.permutation().apply(h - 1) == h - 1),
        format!("{m} strands, {} components", added.len()),
    ));
    let beta_alexander = alexander_polynomial(&beta_word)?;
    let sublink_alexander = alexander_polynomial(&sublink)?;
    checks.push(Check::new(
        "sublink recovers β",
        sublink_alexander == beta_alexander
            && sublink.exponent_sum() == beta_word.exponent_sum()
            && sublink.permutation().cycle_type() == beta_word.permutation().cycle_type(),
        format!(
            "Δ {} vs {}, e {} vs {}",
            sublink_alexander,
            beta_alexander,
            sublink.exponent_sum(),
            beta_word.exponent_sum()
        ),
    ));
    checks.push(Check::new(
        "e(γ) = e(β′) + m",
        gs.exponent_sum == bps.exponent_sum + m as i64,
        format!("{} vs {} + {m}", gs.exponent_sum, bps.exponent_sum),
    ));
    checks.push(Check::new(
        "γ is a knot",
        gs.components == 1,
        format!("{} components", gs.components),
    ));
    checks.push(Check::new(
        "sl(γ) = -1",
        gs.self_linking == -1,
        format!("sl = {}", gs.self_linking),
    ));
    let gamma_alexander = alexander_polynomial(&gamma)?;
    checks.push(Check::new(
        "Δ(γ) = 1",
        gamma_alexander.is_one(),
        format!("Δ = {gamma_alexander}"),
    ));
    let gamma_jones = match opts.jones {
        Some(o) => {
            let j = jones_polynomial_with(&gamma, o)?;
            checks.push(Check::new("V(γ) = 1", j.is_one(), format!("V = {j}")));
            Some(j)
        }
        None => None,
    };

    let output = TheoremAOutput {
        beta_prime: bp,
        gamma,
        added_strands: emb.added_strands.clone(),
        certificate: Certificate {
            beta_prime: bps,
            gamma: gs,
            gamma_alexander,
            gamma_jones,
            sublink,
            sublink_alexander,
            beta_alexander,
            checks,
        },
    };
    if output.certificate.passed() {
        Ok(output)
    } else {
        Err(ConstructionError::CertificateFailed(Box::new(output)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(n: usize, bands: &[(&[Letter], usize)]) -> QPBandWord {
        QPBandWord::new(n, bands.iter().map(|(c, k)| Band::new(c.to_vec(), *k)).collect()).unwrap()
    }

    fn site(band: usize, pos: usize, k: usize, sign: i8) -> TransformSite {
        TransformSite { band, pos, k, sign }
    }

    #[test]
    fn no_sites_is_passthrough() {
        let beta = qp(2, &[(&[], 1)]);
        let emb = thm_a_embed(&beta, &[]).unwrap();
        assert_eq!(emb.beta_prime_word(), beta.to_braid_word());
        let out = thm_a_unknotify(&emb, CertificateOptions::default()).unwrap();
        assert_eq!(out.gamma, out.beta_prime);
    }

    #[test]
    fn each_rule_on_a_core_adjacent_twist() {
        // σ_2^{±2} right before the core σ_1 (finger left) or σ_3 (finger right),
        // with a second band making the closure a knot
        for (core, sign) in [(3, 1), (3, -1), (1, 1), (1, -1)] {
            let e = sign as Letter;
            let beta = qp(4, &[(&[2 * e, 2 * e], core), (&[], 2), (&[], 4 - core)]);
            let emb = thm_a_embed(&beta, &[site(0, 0, 2, sign)]).unwrap();
            assert_eq!(emb.beta_prime.strands(), 5);
            let out = thm_a_unknotify(&emb, CertificateOptions::default());
            assert!(out.is_ok(), "core {core} sign {sign}: {out:?}");
        }
    }

    #[test]
    fn pattern_errors() {
        let beta = qp(3, &[(&[1, 1], 2), (&[1], 1)]);
        assert!(matches!(
            thm_a_embed(&beta, &[site(0, 0, 2, 1)]),
            Err(ConstructionError::PatternMismatch { .. })
        ));
        assert!(matches!(
            thm_a_embed(&beta, &[site(1, 0, 1, 1)]),
            Err(ConstructionError::PatternMismatch { .. })
        ));
        // twist between the core's own strands
        let own = qp(3, &[(&[1, 1], 1)]);
        assert!(matches!(
            thm_a_embed(&own, &[site(0, 0, 1, 1)]),
            Err(ConstructionError::PatternMismatch { .. })
        ));
        let twice = qp(3, &[(&[1, 1, 1], 2)]);
        assert!(matches!(
            thm_a_embed(&twice, &[site(0, 0, 1, 1), site(0, 1, 1, 1)]),
            Err(ConstructionError::OverlappingSites { first: 0, second: 1 })
        ));
    }
}
