mod run;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "foldline",
    version,
    about = "Piecewise-linear parametrizations, diagram folding and tropical monoids"
)]
pub struct Cli {
    /// Compact single-line JSON instead of pretty-printed output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan data: validation and folding.
    #[command(subcommand)]
    Datum(DatumCommand),
    /// Fold a datum by its diagram automorphism.
    Fold(DatumArgs),
    /// Reduced words of the longest element.
    #[command(subcommand)]
    Words(WordsCommand),
    /// Transport coordinates from one reduced word to another.
    Transition(TransitionArgs),
    /// First coordinate in a reduced word starting with a node.
    Lambda(StringArgs),
    /// Last coordinate in a reduced word ending with a node.
    Rho(StringArgs),
    /// Certificates and property checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Transition maps of folded data.
    #[command(subcommand)]
    Folded(FoldedCommand),
    /// The monoid on generators ξ_i^n.
    #[command(subcommand)]
    Monoid(MonoidCommand),
}

#[derive(Args, Debug, Clone)]
pub struct DatumArgs {
    /// Builtin name (A3, A4+flip, Dstyle:n=2, B:n=2, D4+triality, ...) or a JSON datum file.
    #[arg(long)]
    pub datum: Option<String>,
    /// Builtin name.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct ValueArgs {
    #[arg(long, default_value = "tropz")]
    pub semifield: String,
    /// Comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub coords: String,
    /// Variables of symbolic coordinates, comma-separated; inferred when omitted.
    #[arg(long)]
    pub vars: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum DatumCommand {
    /// Validate a datum and print its derived data.
    Validate(DatumArgs),
    /// Fold a datum by its diagram automorphism.
    Fold(DatumArgs),
}

#[derive(Subcommand, Debug)]
pub enum WordsCommand {
    /// All reduced words of w₀ with their braid edges.
    Enumerate {
        #[command(flatten)]
        datum: DatumArgs,
        /// Use the folded datum.
        #[arg(long)]
        folded: bool,
        /// Emit the word graph as DOT.
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = foldline_core::weyl::DEFAULT_WORD_CAP)]
        cap: usize,
    },
    /// Words one braid move away.
    Neighbors {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        folded: bool,
        #[arg(long)]
        word: String,
    },
}

#[derive(Args, Debug)]
pub struct TransitionArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
    #[command(flatten)]
    pub values: ValueArgs,
    /// Include every intermediate decorated word.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Args, Debug)]
pub struct StringArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    /// Word the coordinates are given in; the base word when omitted.
    #[arg(long)]
    pub word: Option<String>,
    #[command(flatten)]
    pub values: ValueArgs,
    /// Node label.
    #[arg(long)]
    pub node: String,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sample count of every randomized check; the documented defaults when omitted.
    #[arg(long)]
    pub trials: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Verify an embedded chain certificate.
    Chain {
        #[arg(long)]
        id: String,
    },
    /// Symbolic transitions agree over every braid path (A₂, A₃).
    PathIndependence,
    /// Tropical closed form against the folded algorithm.
    TropicalB2(SampleArgs),
    /// Symbolic closed form through both folding models.
    ClosedForm,
    /// Reduced-word counts against group models.
    WordCounts,
    /// Monoid relations, associativity and word independence.
    Monoid(SampleArgs),
    /// Frobenius maps.
    Frobenius(SampleArgs),
    /// String lengths, crystal moves and folded λ/ρ.
    Crystal(SampleArgs),
    /// Independence of the folding map from the filling.
    Folding,
    /// Every check.
    All {
        #[arg(long, default_value = "desk")]
        level: String,
        #[command(flatten)]
        sample: SampleArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum FoldedCommand {
    /// Folded transition between folded reduced words.
    Transition(TransitionArgs),
    /// The rank-two transition through the A₃ and A₄ models.
    CompareModels {
        #[command(flatten)]
        values: ValueArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum MonoidCommand {
    /// Product of two elements given by base-word coordinates.
    Mul {
        #[command(flatten)]
        datum: DatumArgs,
        /// Coordinates are folded ones; multiply in the σ-fixed submonoid.
        #[arg(long)]
        folded: bool,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Scale every exponent by e.
    Frobenius {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        coords: String,
    },
    /// l_i and r_i by generator scan and by coordinates.
    Lstring {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        coords: String,
        #[arg(long)]
        node: String,
    },
    /// Crystal graph on elements with coordinates up to a bound.
    CrystalGraph {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 2)]
        bound: u64,
        #[arg(long)]
        dot: bool,
    },
}

/// What a command prints on success.
pub enum Output {
    Json {
        payload: Value,
        trace: Option<Value>,
    },
    Text(String),
}

pub struct Failure {
    pub kind: String,
    pub message: String,
    pub payload: Option<Value>,
}

impl Failure {
    pub fn new(kind: impl Into<String>, message: impl ToString) -> Self {
        Failure {
            kind: kind.into(),
            message: message.to_string(),
            payload: None,
        }
    }

    pub fn usage(message: impl ToString) -> Self {
        Failure::new("usage", message)
    }
}

fn render(value: &Value, compact: bool) -> String {
    if compact {
        value.to_string()
    } else {
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            let message: Vec<&str> = msg
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            let message = message.join(" ").trim_start_matches("error: ").to_string();
            println!(
                "{}",
                render(
                    &json!({"status": "error", "kind": "usage", "message": message}),
                    false
                )
            );
            return ExitCode::from(2);
        }
    };
    match run::run(&cli.command) {
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json { payload, trace }) => {
            let mut out = json!({"status": "ok", "payload": payload});
            if let Some(trace) = trace {
                out["trace"] = trace;
            }
            println!("{}", render(&out, cli.json));
            ExitCode::SUCCESS
        }
        Err(f) => {
            let mut out = json!({"status": "error", "kind": f.kind, "message": f.message});
            if let Some(p) = f.payload {
                out["payload"] = p;
            }
            println!("{}", render(&out, cli.json));
            ExitCode::from(if f.kind == "usage" { 2 } else { 1 })
        }
    }
}
