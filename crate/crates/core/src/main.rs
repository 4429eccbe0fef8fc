use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use symai::boolfn::{algebraic_immunity, TruthTable};
use symai::constructions::{
    gap_annihilator, lemma4_solve, support_weights, theorem3_annihilator, theorem3_condition,
};
use symai::surveyor::{self, Filter};
use symai::symfn::{SanfVector, SymValueVector};

#[derive(Parser)]
#[command(
    name = "symai",
    version,
    about = "Algebraic immunity of symmetric Boolean functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    TrivialBalanced,
    Balanced,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => Filter::All,
            FilterArg::TrivialBalanced => Filter::TrivialBalanced,
            FilterArg::Balanced => Filter::Balanced,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Algebraic immunity, annihilated side and a minimal-degree witness.
    #[command(group(ArgGroup::new("input").required(true).args(["table", "value_vector"])))]
    Ai {
        /// Truth table as hex, rightmost digit = inputs 0..3.
        #[arg(long)]
        table: Option<String>,
        /// Variable count for --table (inferred from its length otherwise).
        #[arg(long, requires = "table")]
        n: Option<usize>,
        /// Simplified value vector v(0)..v(n).
        #[arg(long)]
        value_vector: Option<SymValueVector>,
    },
    /// Convert between value vector and SANF vector.
    #[command(group(ArgGroup::new("input").required(true).args(["value_vector", "sanf"])))]
    Convert {
        #[arg(long)]
        value_vector: Option<SymValueVector>,
        #[arg(long)]
        sanf: Option<SanfVector>,
    },
    /// Solutions of the low-degree system on 2i+1 variables.
    Lemma4 {
        #[arg(long)]
        i: usize,
        /// Print every basis solution instead of the canonical one.
        #[arg(long)]
        all: bool,
    },
    /// Product annihilator on n (odd) variables for gap i.
    GapAnnihilator {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// Necessary SANF condition for maximal AI.
    Theorem3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sanf: SanfVector,
        /// Also print the product of (sigma_{2^j} + 1).
        #[arg(long)]
        emit_annihilator: bool,
    },
    /// Survey every symmetric function on n variables.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: FilterArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive verification report for odd n; exits nonzero on failure.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Ai {
            table,
            n,
            value_vector,
        } => {
            let f = match (table, value_vector) {
                (Some(hex), _) => TruthTable::from_hex(&hex, n)?,
                (None, Some(v)) => v.expand()?,
                (None, None) => unreachable!("clap enforces one input"),
            };
            let w = algebraic_immunity(&f);
            writeln!(out, "n: {}", f.num_vars())?;
            writeln!(out, "ai: {}", w.ai)?;
            writeln!(out, "side: {}", w.side)?;
            writeln!(out, "witness: {}", w.witness)?;
            writeln!(
                out,
                "witness_table: {}",
                w.witness.to_truth_table().to_hex()
            )?;
        }
        Command::Convert { value_vector, sanf } => match (value_vector, sanf) {
            (Some(v), _) => writeln!(out, "sanf: {}", v.to_sanf())?,
            (None, Some(l)) => writeln!(out, "value_vector: {}", l.to_value())?,
            (None, None) => unreachable!("clap enforces one input"),
        },
        Command::Lemma4 { i, all } => {
            let sys = lemma4_solve(i)?;
            let sols = if all {
                sys.basis_sanfs()
            } else {
                vec![sys.canonical()]
            };
            writeln!(out, "n: {}", sys.num_vars())?;
            writeln!(out, "nullity: {}", sys.nullity())?;
            for s in sols {
                writeln!(
                    out,
                    "sanf: {}  value_vector: {}  degree: {}",
                    s,
                    s.to_value(),
                    s.sym_degree()
                )?;
            }
        }
        Command::GapAnnihilator { n, i } => {
            let g = gap_annihilator(n, i)?;
            let weights: Vec<String> = g.support_weights().iter().map(|w| w.to_string()).collect();
            writeln!(out, "g_value_vector: {}", g.g_part)?;
            writeln!(out, "table: {}", g.product.to_hex())?;
            writeln!(out, "degree: {}", g.degree())?;
            writeln!(out, "support_weights: {}", weights.join(","))?;
        }
        Command::Theorem3 {
            n,
            sanf,
            emit_annihilator,
        } => {
            if sanf.num_vars() != n {
                return Err(format!(
                    "--sanf has {} entries, expected {}",
                    sanf.num_vars() + 1,
                    n + 1
                )
                .into());
            }
            writeln!(out, "condition: {}", theorem3_condition(&sanf)?)?;
            if emit_annihilator {
                let g = theorem3_annihilator(n)?;
                let weights: Vec<String> =
                    support_weights(&g).iter().map(|w| w.to_string()).collect();
                writeln!(out, "annihilator_table: {}", g.to_hex())?;
                writeln!(out, "annihilator_degree: {}", g.degree())?;
                writeln!(out, "annihilator_support_weights: {}", weights.join(","))?;
            }
        }
        Command::Survey {
            n,
            filter,
            format,
            out: path,
        } => {
            let records = surveyor::survey(n, filter.into())?;
            let sink: Box<dyn Write> = match path {
                Some(p) => Box::new(BufWriter::new(File::create(p)?)),
                None => Box::new(&mut out),
            };
            match format {
                Format::Json => surveyor::write_json(sink, &records)?,
                Format::Csv => surveyor::write_csv(sink, &records)?,
            }
        }
        Command::Verify { n } => {
            let report = surveyor::verify_theorems(n)?;
            surveyor::write_json(&mut out, &report)?;
            if !report.all_hold() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
