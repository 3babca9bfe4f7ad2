//! Braid-level constructions: an unknotting embedding for quasipositive
//! braids, the families `β_n`, `γ_n` with their band surgeries, and the
//! Hopf-plumbing rewrite relating consecutive `β_n`.

mod error;
mod families;
mod theorem_a;
mod worked;

pub use error::ConstructionError;
pub use families::{
    beta_plumbing_sites, hopf_plumb_rewrite, make_beta_n, make_beta_n_qp, make_gamma_n,
    plumb_beta, verify_band_surgery_sequence, BandSurgeryReport, Insertion,
};
pub use theorem_a::{
    thm_a_embed, thm_a_unknotify, Certificate, CertificateOptions, Check, Embedding, SiteList,
    TheoremAOutput, TransformSite,
};
pub use worked::{
    m8_20_bandword, m8_20_sites, reference_beta_prime, reference_gamma,
    reference_gamma_symmetric, reference_w, reference_w_prime,
};
