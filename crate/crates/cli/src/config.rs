use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ckq_core::funq::{FunMode, Variant};
use ckq_core::scalar::JAssign;

use crate::report::Format;

#[derive(Parser, Debug)]
#[command(name = "ckq", version, about = "Exact verification of Cayley-Klein quantum group identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one check (or `all`) over the selected cases.
    Verify(VerifyArgs),
    /// Replay the last report from `ckq-report.json`.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,
    /// v02, v12, v01 or all.
    #[arg(long, default_value = "all")]
    pub variant: String,
    /// 1,1 | i1,1 | 1,i2 | i1,i2 | all.
    #[arg(long, default_value = "all")]
    pub j: String,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    /// Fun-algebra mode; hopf-fun defaults to ring, everything else to bialgebra.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long, default_value_t = 3)]
    pub maxlen: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (0 = rayon default).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Bialgebra,
    Ring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Check {
    Rtt,
    Ybe,
    RelationsFromRtt,
    Det,
    HopfFun,
    HopfSu,
    HopfSo,
    Pairing,
    Ideal,
    Iso,
    Contraction,
    SpecialCases,
    Confluence,
    All,
}

impl Check {
    pub const EACH: [Check; 13] = [
        Check::Rtt,
        Check::Ybe,
        Check::RelationsFromRtt,
        Check::Det,
        Check::HopfFun,
        Check::HopfSu,
        Check::HopfSo,
        Check::Pairing,
        Check::Ideal,
        Check::Iso,
        Check::Contraction,
        Check::SpecialCases,
        Check::Confluence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Rtt => "rtt",
            Check::Ybe => "ybe",
            Check::RelationsFromRtt => "relations-from-rtt",
            Check::Det => "det",
            Check::HopfFun => "hopf-fun",
            Check::HopfSu => "hopf-su",
            Check::HopfSo => "hopf-so",
            Check::Pairing => "pairing",
            Check::Ideal => "ideal",
            Check::Iso => "iso",
            Check::Contraction => "contraction",
            Check::SpecialCases => "special-cases",
            Check::Confluence => "confluence",
            Check::All => "all",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

/// A validated verification request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub checks: Vec<Check>,
    pub variants: Vec<Variant>,
    pub js: Vec<JAssign>,
    pub order: usize,
    pub mode: Option<FunMode>,
    pub maxlen: usize,
    pub format: Format,
    pub jobs: usize,
}

impl RunConfig {
    pub fn from_args(a: &VerifyArgs) -> Result<Self, ConfigError> {
        let variants = if a.variant == "all" {
            Variant::ALL.to_vec()
        } else {
            vec![a.variant.parse::<Variant>().map_err(ConfigError)?]
        };
        let js = if a.j == "all" {
            JAssign::all().to_vec()
        } else {
            vec![a.j.parse::<JAssign>().map_err(ConfigError)?]
        };
        if a.order < 2 {
            return Err(ConfigError(format!("--order must be at least 2, got {}", a.order)));
        }
        if a.maxlen < 1 {
            return Err(ConfigError("--maxlen must be at least 1".into()));
        }
        if a.check == Check::Iso && variants == [Variant::V01] {
            return Err(ConfigError("iso is defined for v02 and v12 only; there is no v01 isomorphism".into()));
        }
        let checks = if a.check == Check::All { Check::EACH.to_vec() } else { vec![a.check] };
        let mode = a.mode.map(|m| match m {
            ModeArg::Bialgebra => FunMode::Bialgebra,
            ModeArg::Ring => FunMode::CoordinateRing,
        });
        Ok(RunConfig { checks, variants, js, order: a.order, mode, maxlen: a.maxlen, format: a.format, jobs: a.jobs })
    }

    /// Parse a full argument vector (program name first) into a verify
    /// config.
    pub fn parse_args<I, S>(argv: I) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = S>,
        S: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(argv).map_err(|e| ConfigError(e.to_string()))?;
        match cli.command {
            Command::Verify(a) => Self::from_args(&a),
            Command::Report { .. } => Err(ConfigError("`report` takes no verification config".into())),
        }
    }
}

/// `CKQ_STEP_BUDGET`, if set, must be a positive integer.
pub fn check_budget_env() -> Result<Option<u64>, ConfigError> {
    match std::env::var("CKQ_STEP_BUDGET") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(ConfigError(format!("CKQ_STEP_BUDGET must be a positive integer, got `{v}`"))),
        },
    }
}
