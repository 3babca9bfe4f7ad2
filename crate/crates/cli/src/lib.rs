//! Library side of the `twist` command: invariant and family reports, the
//! unknotting pipeline on files, and the acceptance checklist.

mod report;
mod verify;

pub use report::{
    aligned, family_bandword, family_report, invariant_report, FamilyKind, FamilyReport,
    InvariantReport, ReportOptions,
};
pub use verify::{
    budget_exhausted, run_verify, CheckLine, Criterion, VerifyOptions, VerifyReport,
    DEFAULT_SEED, TITLES,
};

use constructions::{Certificate, TheoremAOutput};

/// Aligned text for an unknotting run.
pub fn theorem_a_text(out: &TheoremAOutput) -> String {
    let mut rows = vec![
        ("β′", format!("{} (B_{})", out.beta_prime, out.beta_prime.strands())),
        ("γ", out.gamma.to_string()),
        (
            "added strands",
            out.added_strands
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        ),
        ("sublink", out.certificate.sublink.to_string()),
        ("Δ(γ)", out.certificate.gamma_alexander.to_string()),
    ];
    if let Some(j) = &out.certificate.gamma_jones {
        rows.push(("V(γ)", j.to_string()));
    }
    let mut text = aligned(&rows);
    text.push_str(&certificate_text(&out.certificate));
    text
}

pub fn certificate_text(cert: &Certificate) -> String {
    let mut out = String::new();
    for c in &cert.checks {
        let mark = if c.passed { "ok" } else { "FAILED" };
        out.push_str(&format!("  {mark:6} {}: {}\n", c.name, c.detail));
    }
    out
}
