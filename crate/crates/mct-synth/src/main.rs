//! Thin command-line wrapper over the library. Each subcommand maps onto
//! one library entry point; see the examples directory for richer usage.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mct_synth::{
    cancel_pairs, check_mct, corollary74, cost_table, cost_table_csv, expand_circuit, lemma71,
    lemma72_canonical, parse, serialize, synthesize, Circuit, SynthesisResult, Verdict,
};

#[derive(Parser)]
#[command(
    name = "mct-synth",
    version,
    about = "Multi-controlled Toffoli synthesis and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Lemma71,
    Lemma72,
    #[value(name = "lemma72-peres")]
    Lemma72Peres,
    Cor74,
    #[value(name = "cor74-peres")]
    Cor74Peres,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize an MCT of the given size and write/print the result.
    Synth {
        /// Gate size: number of controls plus one target line.
        #[arg(long)]
        size: usize,
        /// Garbage budget for the automatic selector.
        #[arg(long, default_value_t = 0)]
        garbage: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Replace macro gates with elementary gates before writing.
        #[arg(long)]
        expand: bool,
        /// Circuit file to write; omit to print the summary only.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a circuit file against the MCT specification.
    Verify {
        file: PathBuf,
        /// Comma-separated control lines.
        #[arg(long, value_delimiter = ',')]
        controls: Vec<usize>,
        #[arg(long)]
        target: usize,
        /// Comma-separated lines allowed to carry garbage.
        #[arg(long, value_delimiter = ',')]
        extra: Vec<usize>,
    },
    /// Cancel redundant self-inverse gate pairs.
    Optimize {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replace macro gates with elementary gates.
    Expand {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the reproduced cost table.
    CostTable {
        #[arg(long)]
        max_size: usize,
        /// Emit CSV instead of the aligned table.
        #[arg(long)]
        csv: bool,
    },
}

fn load(path: &Path) -> Result<Circuit, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn store(path: &Path, circuit: &Circuit) -> Result<(), String> {
    std::fs::write(path, serialize(circuit))
        .map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn run_synth(
    size: usize,
    garbage: usize,
    strategy: StrategyArg,
    expand: bool,
    out: Option<&Path>,
) -> Result<(), String> {
    let err = |e: mct_synth::SynthesisError| e.to_string();
    let result: SynthesisResult = match strategy {
        StrategyArg::Auto => synthesize(size, garbage).map_err(err)?,
        StrategyArg::Lemma71 => {
            if size < 3 {
                return Err("lemma71 needs size >= 3".into());
            }
            let controls: Vec<usize> = (0..size - 1).collect();
            lemma71(&controls, size - 1).map_err(err)?
        }
        StrategyArg::Lemma72 => lemma72_canonical(size.saturating_sub(1), false).map_err(err)?,
        StrategyArg::Lemma72Peres => {
            lemma72_canonical(size.saturating_sub(1), true).map_err(err)?
        }
        StrategyArg::Cor74 => corollary74(size.saturating_sub(1), false).map_err(err)?,
        StrategyArg::Cor74Peres => corollary74(size.saturating_sub(1), true).map_err(err)?,
    };
    let circuit = if expand { expand_circuit(&result.circuit) } else { result.circuit.clone() };
    if let Some(path) = out {
        store(path, &circuit)?;
    }
    println!(
        "cost={} garbage={} lines={} strategy={}",
        result.cost, result.garbage_reported, circuit.width, result.strategy
    );
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Synth { size, garbage, strategy, expand, out } => {
            run_synth(size, garbage, strategy, expand, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, controls, target, extra } => {
            let circuit = load(&file)?;
            let report =
                check_mct(&circuit, &controls, target, &extra).map_err(|e| e.to_string())?;
            println!("{report}");
            if report.verdict == Verdict::Fail {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Optimize { file, out } => {
            let circuit = load(&file)?;
            store(&out, &cancel_pairs(&circuit))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { file, out } => {
            let circuit = load(&file)?;
            store(&out, &expand_circuit(&circuit))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CostTable { max_size, csv } => {
            if max_size < 1 {
                return Err("--max-size must be at least 1".into());
            }
            let rows = cost_table(max_size);
            if csv {
                print!("{}", cost_table_csv(&rows));
            } else {
                println!("{:<5} {:<8} {:<6} strategy", "size", "garbage", "cost");
                for row in rows {
                    println!("{:<5} {:<8} {:<6} {}", row.size, row.garbage, row.cost, row.strategy);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are not usage errors.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
