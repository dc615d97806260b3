use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rim_core::codes::RankBase;
use rim_workbench::{Config, Session};

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
}

/// Run a workbench script and print its transcript.
#[derive(Parser)]
#[command(name = "rim-workbench", version)]
struct Cli {
    /// Script file; reads standard input when absent.
    script: Option<PathBuf>,
    /// Inline script, run instead of a file.
    #[arg(short = 'e', long = "eval", conflicts_with = "script")]
    eval: Option<String>,
    /// State bound for transducer composition.
    #[arg(long, default_value_t = rim_core::transducer::DEFAULT_STATE_BOUND)]
    max_states: usize,
    /// Default depth for bounded checks and sampled ends.
    #[arg(long, default_value_t = 8)]
    depth: usize,
    /// Rank convention for `rank` and `unrank`.
    #[arg(long, value_enum, default_value = "0")]
    rank_base: Base,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let script = match (&cli.eval, &cli.script) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => match fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("rim-workbench: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        (None, None) => {
            let mut s = String::new();
            if let Err(e) = io::stdin().read_to_string(&mut s) {
                eprintln!("rim-workbench: reading stdin: {e}");
                return ExitCode::from(2);
            }
            s
        }
    };
    let config = Config {
        max_states: cli.max_states,
        depth: cli.depth,
        rank_base: match cli.rank_base {
            Base::Zero => RankBase::Zero,
            Base::One => RankBase::One,
        },
    };
    let transcript = Session::new(config).run(&script);
    let mut out = io::stdout().lock();
    let _ = out.write_all(transcript.text().as_bytes());
    if transcript.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
