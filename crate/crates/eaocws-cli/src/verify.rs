//! The `verify` subcommand: load a certificate, rebuild and revalidate the
//! code it describes, re-run the requested verifiers against the claimed
//! distance, and write the updated verification block back.

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use eaocws::{
    dense_verify, symplectic_verify, Certificate, EaocwsCode, Verdict, VerifyRun, Witness,
};

use crate::EXIT_VERIFY_FAILED;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RouteArg {
    /// GF(2) symplectic route
    Symplectic,
    /// Explicit state vectors on the full register (cap set by
    /// EAOCWS_DENSE_CAP)
    Dense,
    /// Both routes
    Both,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Certificate JSON file, updated in place
    pub certificate: PathBuf,
    /// Run only the symplectic verifier
    #[arg(long, conflicts_with_all = ["dense", "both"])]
    pub symplectic: bool,
    /// Run only the dense verifier
    #[arg(long, conflicts_with = "both")]
    pub dense: bool,
    /// Run both verifiers (the default)
    #[arg(long)]
    pub both: bool,
    /// Print the updated certificate JSON instead of the report
    #[arg(long)]
    pub json: bool,
}

impl VerifyArgs {
    fn route(&self) -> RouteArg {
        if self.symplectic {
            RouteArg::Symplectic
        } else if self.dense {
            RouteArg::Dense
        } else {
            RouteArg::Both
        }
    }
}

/// Runs the requested verifier routes at the code's claimed distance.
pub fn route_verdicts(code: &EaocwsCode, route: RouteArg) -> Result<Vec<VerifyRun>> {
    let distance = code.claimed_distance();
    let mut runs = Vec::new();
    if matches!(route, RouteArg::Symplectic | RouteArg::Both) {
        runs.push(symplectic_verify(code, distance)?);
    }
    if matches!(route, RouteArg::Dense | RouteArg::Both) {
        runs.push(dense_verify(code, distance)?);
    }
    Ok(runs)
}

pub fn witness_text(witness: &Witness) -> String {
    match witness {
        Witness::Collision { error, word, codewords } => format!(
            "error {error} has effective word {word}, the difference of codewords {} and {}",
            codewords.0, codewords.1
        ),
        Witness::Degeneracy { error, codewords } => format!(
            "error {error} is gauge-equivalent to the identity word yet separates codewords \
             {} and {}",
            codewords.0, codewords.1
        ),
        Witness::Dense { left_error, right_error, residual } => {
            format!("block residual {residual:.3e} at pair ({left_error}, {right_error})")
        }
    }
}

/// One report line for a completed verifier run.
pub fn run_line(run: &VerifyRun) -> String {
    let verdict = match run.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
    };
    let mut line = format!(
        "{} at d={}: {verdict} ({} checks, {} ms)",
        run.method, run.claimed_distance, run.checked_errors, run.elapsed_ms
    );
    if let Some(witness) = &run.witness {
        line.push_str(&format!(" — {}", witness_text(witness)));
    }
    line
}

pub fn run(args: &VerifyArgs) -> Result<u8> {
    let mut certificate = Certificate::load(&args.certificate)
        .with_context(|| format!("loading certificate {}", args.certificate.display()))?;
    let code = certificate.to_code()?;
    let runs = route_verdicts(&code, args.route())?;
    let mut any_failed = false;
    let mut lines = Vec::new();
    for run in runs {
        any_failed |= run.verdict == Verdict::Fail;
        lines.push(run_line(&run));
        certificate.attach_run(run);
    }
    certificate.save(&args.certificate)?;

    if args.json {
        print!("{}", certificate.to_json_string()?);
    } else {
        println!(
            "{} from {} codewords on {} vertices",
            certificate.parameters,
            certificate.codewords.len(),
            certificate.graph.vertices
        );
        for line in &lines {
            println!("  {line}");
        }
        println!(
            "certificate updated: {} (status {})",
            args.certificate.display(),
            match certificate.verification.status {
                eaocws::certificate::VerificationStatus::Unverified => "unverified",
                eaocws::certificate::VerificationStatus::Passed => "passed",
                eaocws::certificate::VerificationStatus::Failed => "failed",
            }
        );
    }
    Ok(if any_failed { EXIT_VERIFY_FAILED } else { 0 })
}
