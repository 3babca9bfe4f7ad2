use braid_core::{BraidWord, HalfInteger};
use constructions::{make_beta_n, make_beta_n_qp, make_gamma_n};
use laurent_invariants::{
    alexander_genus_bound, alexander_polynomial, jones_polynomial_with, InvariantError,
    JonesOptions, JonesPolynomial, LaurentPoly,
};
use serde::{Deserialize, Serialize};
use surfaces_bandwords::{
    bennequin_summary, qp_ribbon_summary, EmbeddedBandWord, QPBandWord, SurfaceSummary,
    ToBraidWord,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// `None` leaves the Jones polynomial out.
    pub jones: Option<JonesOptions>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub input: String,
    pub strands: usize,
    pub word: BraidWord,
    pub components: usize,
    pub exponent_sum: i64,
    pub self_linking: i64,
    pub alexander: LaurentPoly,
    pub alexander_text: String,
    pub breadth: u64,
    pub genus_bound: HalfInteger,
    pub jones: Option<JonesPolynomial>,
    pub jones_text: Option<String>,
    pub surface: Option<SurfaceSummary>,
}

pub fn invariant_report(
    input: &str,
    word: &BraidWord,
    surface: Option<SurfaceSummary>,
    opts: ReportOptions,
) -> Result<InvariantReport, InvariantError> {
    let summary = word.closure_summary();
    let alexander = alexander_polynomial(word)?;
    let jones = opts.jones.map(|o| jones_polynomial_with(word, o)).transpose()?;
    Ok(InvariantReport {
        input: input.to_string(),
        strands: word.strands(),
        word: word.clone(),
        components: summary.components,
        exponent_sum: summary.exponent_sum,
        self_linking: summary.self_linking,
        alexander_text: alexander.to_string(),
        breadth: alexander.breadth(),
        genus_bound: alexander_genus_bound(&alexander),
        alexander,
        jones_text: jones.as_ref().map(ToString::to_string),
        jones,
        surface,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Beta,
    Gamma,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub kind: FamilyKind,
    pub n: usize,
    pub bandword: EmbeddedBandWord,
    pub bandword_text: String,
    pub expansion: BraidWord,
    pub surface: SurfaceSummary,
    pub alexander: LaurentPoly,
    pub alexander_text: String,
    pub breadth: u64,
    pub genus_bound: HalfInteger,
    /// The Bennequin genus is the Seifert genus: always for the strongly
    /// quasipositive `γ_n`, and for `β_n` when the Alexander bound meets it.
    pub genus_certified: bool,
    pub quasipositive: Option<QPBandWord>,
    pub slice: Option<SurfaceSummary>,
}

pub fn family_bandword(kind: FamilyKind, n: usize) -> EmbeddedBandWord {
    match kind {
        FamilyKind::Beta => make_beta_n(n),
        FamilyKind::Gamma => make_gamma_n(n),
    }
}

pub fn family_report(kind: FamilyKind, n: usize) -> Result<FamilyReport, InvariantError> {
    let bandword = family_bandword(kind, n);
    let expansion = bandword.to_braid_word();
    let surface = bennequin_summary(&bandword).expect("family surfaces are connected");
    let alexander = alexander_polynomial(&expansion)?;
    let genus_bound = alexander_genus_bound(&alexander);
    let (quasipositive, slice) = match kind {
        FamilyKind::Beta => {
            let qp = make_beta_n_qp(n);
            let s = qp_ribbon_summary(&qp);
            (Some(qp), Some(s))
        }
        FamilyKind::Gamma => (None, None),
    };
    Ok(FamilyReport {
        kind,
        n,
        bandword_text: bandword.to_string(),
        genus_certified: kind == FamilyKind::Gamma || surface.genus == Some(genus_bound),
        bandword,
        expansion,
        surface,
        alexander_text: alexander.to_string(),
        breadth: alexander.breadth(),
        genus_bound,
        alexander,
        quasipositive,
        slice,
    })
}

/// `key  value` lines with the values aligned.
pub fn aligned(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        out.push_str(&format!("{k}{}  {v}\n", " ".repeat(pad)));
    }
    out
}

fn opt_genus(g: Option<HalfInteger>) -> String {
    g.map_or_else(|| "-".to_string(), |g| g.to_string())
}

fn surface_rows(prefix: &str, s: &SurfaceSummary, rows: &mut Vec<(String, String)>) {
    rows.push((format!("{prefix} χ"), s.euler_characteristic.to_string()));
    rows.push((format!("{prefix} genus"), opt_genus(s.genus)));
}

fn render(rows: Vec<(String, String)>) -> String {
    let borrowed: Vec<(&str, String)> = rows.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    aligned(&borrowed)
}

impl InvariantReport {
    pub fn to_text(&self) -> String {
        let mut rows = vec![
            ("input".to_string(), self.input.clone()),
            ("strands".to_string(), self.strands.to_string()),
            ("word".to_string(), self.word.to_string()),
            ("components".to_string(), self.components.to_string()),
            ("exponent sum".to_string(), self.exponent_sum.to_string()),
            ("self-linking".to_string(), self.self_linking.to_string()),
            ("alexander".to_string(), self.alexander_text.clone()),
            ("breadth".to_string(), self.breadth.to_string()),
            ("genus bound".to_string(), self.genus_bound.to_string()),
        ];
        if let Some(j) = &self.jones_text {
            rows.push(("jones".to_string(), j.clone()));
        }
        if let Some(s) = &self.surface {
            surface_rows("bennequin", s, &mut rows);
        }
        render(rows)
    }
}

impl FamilyReport {
    pub fn to_text(&self) -> String {
        let name = match self.kind {
            FamilyKind::Beta => "beta",
            FamilyKind::Gamma => "gamma",
        };
        let mut rows = vec![
            ("family".to_string(), format!("{name} n={}", self.n)),
            ("bandword".to_string(), self.bandword_text.clone()),
            ("letters".to_string(), self.bandword.len().to_string()),
            ("expansion".to_string(), self.expansion.to_string()),
        ];
        surface_rows("bennequin", &self.surface, &mut rows);
        rows.push(("alexander".to_string(), self.alexander_text.clone()));
        rows.push(("breadth".to_string(), self.breadth.to_string()));
        rows.push(("genus bound".to_string(), self.genus_bound.to_string()));
        rows.push(("genus".to_string(), {
            let g = opt_genus(self.surface.genus);
            if self.genus_certified {
                format!("{g} (certified)")
            } else {
                format!("{} ≤ g ≤ {g}", self.genus_bound)
            }
        }));
        if let Some(qp) = &self.quasipositive {
            rows.push(("quasipositive".to_string(), qp.to_string()));
        }
        if let Some(s) = &self.slice {
            rows.push(("slice genus".to_string(), opt_genus(s.genus)));
        }
        render(rows)
    }
}
