use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braid_core::{parse_word, DEFAULT_BUDGET};
use clap::{Args, Parser, Subcommand};
use constructions::{
    thm_a_embed, thm_a_unknotify, CertificateOptions, ConstructionError, SiteList,
};
use laurent_invariants::{JonesOptions, DEFAULT_MAX_STRANDS};
use serde::Serialize;
use surfaces_bandwords::{bennequin_summary, EmbeddedBandWord, QPBandWord, ToBraidWord};
use twist_cli::{
    family_bandword, family_report, invariant_report, run_verify, theorem_a_text, FamilyKind,
    ReportOptions, VerifyOptions, DEFAULT_SEED,
};

#[derive(Parser)]
#[command(name = "twist", version, about = "Braid words, bandwords and their closures")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Global {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Skip every Jones polynomial.
    #[arg(long, global = true)]
    no_jones: bool,
    /// Step budget for handle reduction.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Largest strand count the Jones computation accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STRANDS)]
    max_strands: usize,
}

impl Global {
    fn jones(self) -> Option<JonesOptions> {
        (!self.no_jones).then_some(JonesOptions {
            max_strands: self.max_strands,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closure invariants of a braid word, an embedded bandword or a family member.
    Invariants(InvariantsArgs),
    /// A member of the β_n or γ_n family with its genus bounds.
    Family {
        kind: FamilyKind,
        #[arg(long)]
        n: usize,
    },
    /// Embeds a quasipositive bandword with new strands at the given sites and
    /// certifies the unknotted result.
    Unknotify {
        /// Quasipositive bandword JSON: {"strands": n, "bands": [...]}.
        bandword: PathBuf,
        /// Sites JSON: {"sites": [{"band", "pos", "k", "sign"}, ...]}.
        sites: PathBuf,
    },
    /// Runs the acceptance checklist.
    #[command(alias = "verify-paper")]
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Braid word, e.g. "1 2^-1 1".
    #[arg(long)]
    word: Option<String>,
    /// Embedded bandword, e.g. "B(1,3) 2 B(1,4)^-1".
    #[arg(long)]
    bandword: Option<String>,
    #[arg(long, value_enum)]
    family: Option<FamilyKind>,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    strands: Option<usize>,
    /// Family index, with --family.
    #[arg(long, requires = "family")]
    n: Option<usize>,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        );
    } else {
        print!("{}", text());
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn invariants(g: Global, args: InvariantsArgs) -> Result<(), Failure> {
    let opts = ReportOptions { jones: g.jones() };
    let Source {
        word,
        bandword,
        family,
    } = args.source;
    let strands = || args.strands.ok_or_else(|| usage("--strands is required for this input"));
    let (input, braid, surface) = if let Some(text) = word {
        let w = parse_word(&text, strands()?).map_err(usage)?;
        (text, w, None)
    } else if let Some(text) = bandword {
        let b = EmbeddedBandWord::parse(&text, strands()?).map_err(usage)?;
        let s = bennequin_summary(&b).map_err(usage)?;
        (text, b.to_braid_word(), Some(s))
    } else {
        let kind = family.expect("one source is required");
        let n = args.n.ok_or_else(|| usage("--family needs --n"))?;
        let b = family_bandword(kind, n);
        if let Some(s) = args.strands.filter(|&s| s != b.strands()) {
            return Err(usage(format!("the family lives on {} strands, not {s}", b.strands())));
        }
        let s = bennequin_summary(&b).map_err(usage)?;
        (b.to_string(), b.to_braid_word(), Some(s))
    };
    let report = invariant_report(&input, &braid, surface, opts).map_err(usage)?;
    emit(g.json, &report, || report.to_text());
    Ok(())
}

fn unknotify(g: Global, bandword: &Path, sites: &Path) -> Result<(), Failure> {
    let beta: QPBandWord = serde_json::from_str(&read(bandword)?)
        .map_err(|e| usage(format!("{}: {e}", bandword.display())))?;
    let sites: SiteList = serde_json::from_str(&read(sites)?)
        .map_err(|e| usage(format!("{}: {e}", sites.display())))?;
    let emb = thm_a_embed(&beta, &sites.sites).map_err(usage)?;
    match thm_a_unknotify(&emb, CertificateOptions { jones: g.jones() }) {
        Ok(out) => {
            emit(g.json, &out, || theorem_a_text(&out));
            Ok(())
        }
        Err(ConstructionError::CertificateFailed(out)) => {
            emit(g.json, &*out, || theorem_a_text(&out));
            Err(Failure {
                code: 1,
                message: format!(
                    "certificate failed: {}",
                    out.certificate.failures().join("; ")
                ),
            })
        }
        Err(e) => Err(usage(e)),
    }
}

fn verify(g: Global, seed: u64) -> Result<(), Failure> {
    let opts = VerifyOptions {
        jones: g.jones(),
        budget: g.budget,
        seed,
        ..VerifyOptions::default()
    };
    let report = run_verify(&opts);
    emit(g.json, &report, || report.to_text(true));
    if twist_cli::budget_exhausted(&report, g.budget) {
        eprintln!("error: handle reduction exceeded its budget of {} steps", g.budget);
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "verification failed".to_string(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let result = match cli.command {
        Command::Invariants(args) => invariants(g, args),
        Command::Family { kind, n } => family_report(kind, n)
            .map(|r| emit(g.json, &r, || r.to_text()))
            .map_err(usage),
        Command::Unknotify { bandword, sites } => unknotify(g, &bandword, &sites),
        Command::Verify { seed } => verify(g, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
