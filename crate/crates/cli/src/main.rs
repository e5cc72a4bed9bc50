use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use borbit::atlas::{self, VerifyLevel};
use borbit::monoid;
use borbit::pairs::{DecoratedPermutation, ShareshianPair};
use borbit::{OrbitRecord, RootLabel, StandardFlag};

const DEFAULT_CEILING: usize = 7;

#[derive(Parser)]
#[command(
    name = "borbit",
    version,
    about = "Orbit combinatorics of a lower-rank Borel subgroup on the flag variety"
)]
struct Cli {
    /// Allow degrees above the default ceiling of 7
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every orbit with all of its labels
    Enumerate {
        /// Degree n (at least 2)
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Table)]
        format: ListFormat,
    },
    /// Convert one orbit label into all the others
    Convert {
        n: usize,
        /// Kind of the supplied label
        #[arg(long, value_enum)]
        from: LabelKind,
        /// The label text, e.g. "w=1,3,2;ustar=2,3,1", "h2,h1,e3",
        /// or "w=1,3,2;delta=2,3"
        #[arg(long)]
        value: String,
    },
    /// Print the dimension of the orbit with the given pair
    Dim {
        n: usize,
        /// Pair text "w=...;ustar=..." (one-line or cycle syntax)
        #[arg(long)]
        pair: String,
    },
    /// Apply one monoid root to an orbit pair
    Act {
        n: usize,
        #[arg(long)]
        pair: String,
        /// Root to apply: left:<i> or right:<i>
        #[arg(long)]
        root: String,
    },
    /// Export the closure poset with annotated Hasse covers
    Poset {
        n: usize,
        #[arg(long, value_enum, default_value_t = PosetFormat::Dot)]
        format: PosetFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the cross-verification suite
    Verify {
        n: usize,
        #[arg(long, value_enum, default_value_t = Level::Full)]
        level: Level,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelKind {
    Pair,
    Flag,
    Decorated,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            eprintln!("run 'borbit help' for usage");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let n = match &cli.command {
        Command::Enumerate { n, .. }
        | Command::Convert { n, .. }
        | Command::Dim { n, .. }
        | Command::Act { n, .. }
        | Command::Poset { n, .. }
        | Command::Verify { n, .. } => *n,
    };
    if n < 2 {
        return Err(format!("degree must be at least 2, got {n}"));
    }
    if n > DEFAULT_CEILING {
        if !cli.force {
            return Err(format!(
                "degree {n} is above the default ceiling {DEFAULT_CEILING}; pass --force to proceed"
            ));
        }
        eprintln!(
            "warning: degree {n} involves {} permutations; all-pairs poset work is expensive",
            (1..=n).product::<usize>()
        );
    }

    match cli.command {
        Command::Enumerate { n, format } => {
            let records = atlas::build_atlas(n).map_err(|e| e.to_string())?;
            match format {
                ListFormat::Table => {
                    for r in &records {
                        println!("{}", table_row(r, n));
                    }
                }
                ListFormat::Json => print!("{}", atlas::orbits_json(n, &records)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { n, from, value } => {
            let pair = match from {
                LabelKind::Pair => ShareshianPair::parse(&value, n),
                LabelKind::Flag => StandardFlag::parse(&value, n).map(|f| f.to_pair()),
                LabelKind::Decorated => DecoratedPermutation::parse(&value, n).map(|d| d.to_pair()),
            }
            .map_err(|e| e.to_string())?;
            let standardized = pair.standardize();
            println!("pair: {pair}");
            println!("standardized: {standardized}");
            if n == 3 {
                println!("letters: {}", standardized.letter_label());
            }
            println!("decorated: {}", pair.to_decorated());
            println!("flag: {}", borbit::pair_to_flag(&pair));
            println!("dim: {}", pair.dimension());
            Ok(ExitCode::SUCCESS)
        }
        Command::Dim { n, pair } => {
            let pair = ShareshianPair::parse(&pair, n).map_err(|e| e.to_string())?;
            println!("{}", pair.dimension());
            Ok(ExitCode::SUCCESS)
        }
        Command::Act { n, pair, root } => {
            let pair = ShareshianPair::parse(&pair, n).map_err(|e| e.to_string())?;
            let root = RootLabel::parse(&root).map_err(|e| e.to_string())?;
            let record = monoid::act(root, &pair).map_err(|e| e.to_string())?;
            println!("target: {}", record.target);
            println!("type: {}", record.root_type);
            if n == 3 {
                println!("letters: {}", record.target.standardize().letter_label());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Poset { n, format, out } => {
            let poset = atlas::build_poset(n).map_err(|e| e.to_string())?;
            let text = match format {
                PosetFormat::Dot => atlas::export_dot(&poset),
                PosetFormat::Json => atlas::export_json(&poset),
            };
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, level } => {
            let level = match level {
                Level::Quick => VerifyLevel::Quick,
                Level::Full => VerifyLevel::Full,
            };
            let report = atlas::verify(n, level).map_err(|e| e.to_string())?;
            print!("{}", report.render());
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn table_row(record: &OrbitRecord, n: usize) -> String {
    let mut row = format!(
        "id={} w={} ustar={} u={} delta={} dim={} flag={}",
        record.id,
        record.pair.w(),
        record.pair.u_star(),
        record.standardized.u(),
        record.decorated.delta(),
        record.dim,
        record.flag,
    );
    if n == 3 {
        row.push_str(&format!(" std={}", record.standardized.letter_label()));
    }
    row
}
