//! `praaf` — exact inference for probabilistic abstract argumentation
//! frameworks on the command line.
//!
//! Exit codes: 0 success (and equivalence PASS), 1 equivalence FAIL,
//! 2 input or usage error, 3 capacity error.

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use output::{render, Cell, OutputFormat};
use praaf::io::{format_probability, parse_praaf, serialize_praaf, to_dot};
use praaf::{
    check_equivalence, Aaf, ArgumentSet, Error, GroundTruth, Limits, Praaf, Semantics, Stance,
    WorldMode,
};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "praaf",
    version,
    about = "Exact inference for probabilistic abstract argumentation frameworks",
    after_help = "Files use the APX-style `.praaf` format: `arg(<id>[,<p>]).` and \
                  `att(<src>,<tgt>[,<p>]).` statements, `#` comments, probabilities in (0,1]."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// World generation mode
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Raw)]
    mode: ModeArg,

    /// Extension semantics
    #[arg(long, global = true, value_enum, default_value_t = SemanticsArg::Admissible)]
    semantics: SemanticsArg,

    /// Probability tolerance for equivalence checks
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Cap on probabilistic elements and on arguments per realized AAF
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    max_elements: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    output: OutputFormat,

    /// Ground-truth argument id
    #[arg(long, global = true, default_value = "eta")]
    eta: String,
}

#[derive(Subcommand)]
enum Command {
    /// List every possible world with its probability
    Worlds {
        file: PathBuf,
        /// Also list each world's extensions under --semantics
        #[arg(long)]
        extensions: bool,
    },
    /// List the extensions of a certain framework (or of one world)
    Extensions {
        file: PathBuf,
        /// Select the world at this enumeration index (required for
        /// probabilistic input)
        #[arg(long)]
        world: Option<u64>,
    },
    /// Probability that a set of arguments is an extension
    Prob {
        file: PathBuf,
        /// Comma-separated argument ids; empty string for the empty set
        #[arg(long)]
        set: String,
    },
    /// Probability that an argument is accepted
    Accept {
        file: PathBuf,
        #[arg(long)]
        arg: String,
        #[arg(long, value_enum, default_value_t = StanceArg::Credulous)]
        stance: StanceArg,
    },
    /// Rewrite probabilistic arguments into attacks from the ground truth
    Transform {
        file: PathBuf,
        /// Write the transformed framework here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check that two frameworks have the same extension distribution,
    /// ignoring the ground truth on the right-hand side
    Equiv { file_a: PathBuf, file_b: PathBuf },
    /// Export the framework as GraphViz DOT
    Dot {
        file: PathBuf,
        /// Write the DOT document here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Raw,
    Induced,
}

impl From<ModeArg> for WorldMode {
    fn from(mode: ModeArg) -> WorldMode {
        match mode {
            ModeArg::Raw => WorldMode::Raw,
            ModeArg::Induced => WorldMode::Induced,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    ConflictFree,
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl From<SemanticsArg> for Semantics {
    fn from(sigma: SemanticsArg) -> Semantics {
        match sigma {
            SemanticsArg::ConflictFree => Semantics::ConflictFree,
            SemanticsArg::Admissible => Semantics::Admissible,
            SemanticsArg::Complete => Semantics::Complete,
            SemanticsArg::Grounded => Semantics::Grounded,
            SemanticsArg::Preferred => Semantics::Preferred,
            SemanticsArg::Stable => Semantics::Stable,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StanceArg {
    Credulous,
    Skeptical,
}

impl From<StanceArg> for Stance {
    fn from(stance: StanceArg) -> Stance {
        match stance {
            StanceArg::Credulous => Stance::Credulous,
            StanceArg::Skeptical => Stance::Skeptical,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Failure {
        let code = match error {
            Error::TooManyElements { .. } | Error::TooManyArguments { .. } => EXIT_CAPACITY,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: error.to_string(),
        }
    }
}

/// Resolved global configuration.
struct Config {
    mode: WorldMode,
    semantics: Semantics,
    tol: f64,
    limits: Limits,
    output: OutputFormat,
    eta: GroundTruth,
}

impl Config {
    fn from_cli(cli: &Cli) -> Result<Config, Failure> {
        // NaN must fail this check too.
        if cli.tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
            return Err(Failure::input(format!(
                "--tol must be positive, got {}",
                cli.tol
            )));
        }
        let eta = GroundTruth::new(cli.eta.clone())?;
        let cap = cli.max_elements as usize;
        Ok(Config {
            mode: cli.mode.into(),
            semantics: cli.semantics.into(),
            tol: cli.tol,
            limits: Limits {
                max_elements: cap,
                max_arguments: cap,
            },
            output: cli.output,
            eta,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let config = Config::from_cli(&cli)?;
    match &cli.command {
        Command::Worlds { file, extensions } => cmd_worlds(file, *extensions, &config)?,
        Command::Extensions { file, world } => cmd_extensions(file, *world, &config)?,
        Command::Prob { file, set } => cmd_prob(file, set, &config)?,
        Command::Accept { file, arg, stance } => cmd_accept(file, arg, (*stance).into(), &config)?,
        Command::Transform { file, out } => cmd_transform(file, out.as_deref(), &config)?,
        Command::Equiv { file_a, file_b } => {
            return cmd_equiv(file_a, file_b, &config);
        }
        Command::Dot { file, out } => cmd_dot(file, out.as_deref(), &config)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn read_praaf(path: &Path) -> Result<Praaf, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let praaf =
        parse_praaf(&text).map_err(|e| Failure::input(format!("{}:{e}", path.display())))?;
    // The parser enforces the same invariants, but a second check keeps the
    // CLI honest about what it hands to the engine.
    praaf.validated().map_err(Failure::from)
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_worlds(file: &Path, with_extensions: bool, config: &Config) -> Result<(), Failure> {
    let praaf = read_praaf(file)?;
    let worlds = praaf.worlds_limited(config.mode, config.limits)?;
    let mut rows: Vec<Vec<Cell>> = Vec::new();
    let mut total = 0.0;
    for world in worlds {
        total += world.probability();
        let mut row = vec![
            Cell::Text(world.assignment_string()),
            Cell::Probability(world.probability()),
            Cell::Flag(world.proper()),
        ];
        if with_extensions {
            let extensions = world
                .aaf()
                .extensions_capped(config.semantics, config.limits.max_arguments)?;
            row.push(Cell::List(
                extensions.iter().map(ArgumentSet::to_string).collect(),
            ));
        }
        rows.push(row);
    }
    let mut total_row = vec![
        Cell::Text("total".into()),
        Cell::Probability(total),
        Cell::Empty,
    ];
    let mut columns = vec!["world", "probability", "proper"];
    if with_extensions {
        columns.push("extensions");
        total_row.push(Cell::Empty);
    }
    rows.push(total_row);
    print!("{}", render(config.output, &columns, &rows));
    Ok(())
}

fn cmd_extensions(file: &Path, world: Option<u64>, config: &Config) -> Result<(), Failure> {
    let praaf = read_praaf(file)?;
    let aaf: Aaf = match world {
        Some(index) => praaf
            .world_at(index, config.mode, config.limits)?
            .aaf()
            .clone(),
        None => {
            if !praaf.is_certain() {
                return Err(Failure::input(
                    "input has probabilistic elements; select a world with --world <index>",
                ));
            }
            praaf.underlying_aaf()?
        }
    };
    let extensions = aaf.extensions_capped(config.semantics, config.limits.max_arguments)?;
    let rows: Vec<Vec<Cell>> = extensions
        .iter()
        .map(|ext| vec![Cell::Text(ext.to_string())])
        .collect();
    print!("{}", render(config.output, &["extension"], &rows));
    Ok(())
}

fn parse_set(raw: &str) -> ArgumentSet {
    ArgumentSet::new(
        raw.split(',')
            .map(str::trim)
            .filter(|piece| !piece.is_empty())
            .map(str::to_owned),
    )
}

fn cmd_prob(file: &Path, set: &str, config: &Config) -> Result<(), Failure> {
    let praaf = read_praaf(file)?;
    let set = parse_set(set);
    let probability =
        praaf.extension_probability(&set, config.semantics, config.mode, config.limits)?;
    let rows = vec![vec![Cell::Probability(probability)]];
    print!("{}", render(config.output, &["probability"], &rows));
    Ok(())
}

fn cmd_accept(file: &Path, arg: &str, stance: Stance, config: &Config) -> Result<(), Failure> {
    let praaf = read_praaf(file)?;
    let result =
        praaf.acceptance_probability(arg, config.semantics, stance, config.mode, config.limits)?;
    if result.vacuous > 0.0 {
        eprintln!(
            "note: worlds without any {} extension contribute vacuously (probability {})",
            config.semantics,
            format_probability(result.vacuous)
        );
    }
    let rows = vec![vec![Cell::Probability(result.probability)]];
    print!("{}", render(config.output, &["probability"], &rows));
    Ok(())
}

fn cmd_transform(file: &Path, out: Option<&Path>, config: &Config) -> Result<(), Failure> {
    let praaf = read_praaf(file)?;
    let certificate = praaf.to_normal_form(&config.eta)?;
    let document = serialize_praaf(&certificate.transformed);
    write_or_print(&document, out)?;
    // The mapping goes to stdout when the document went to a file, and to
    // stderr otherwise, so the document can be piped either way.
    let mapping_text = if certificate.mapping.is_empty() {
        "no probabilistic arguments; framework already in normal form\n".to_owned()
    } else {
        let rows: Vec<Vec<Cell>> = certificate
            .mapping
            .iter()
            .map(|entry| {
                vec![
                    Cell::Text(entry.argument.clone()),
                    Cell::Probability(entry.original_probability),
                    Cell::Text(entry.attack.to_string()),
                    Cell::Probability(entry.attack_probability),
                ]
            })
            .collect();
        render(
            config.output,
            &["argument", "probability", "attack", "attack_probability"],
            &rows,
        )
    };
    if out.is_some() {
        print!("{mapping_text}");
    } else {
        eprint!("{mapping_text}");
    }
    Ok(())
}

fn cmd_equiv(file_a: &Path, file_b: &Path, config: &Config) -> Result<ExitCode, Failure> {
    let left = read_praaf(file_a)?;
    let right = read_praaf(file_b)?;
    if !right.has_arg(config.eta.id()) {
        eprintln!(
            "note: `{}` not present in {}; comparing unstripped distributions",
            config.eta.id(),
            file_b.display()
        );
    }
    let report = check_equivalence(
        &left,
        &right,
        &config.eta,
        config.semantics,
        config.tol,
        config.limits,
    )?;
    if report.pass() {
        println!(
            "PASS ({}, tol {}, {} extensions compared)",
            report.sigma,
            format_probability(report.tolerance),
            report.compared
        );
        Ok(ExitCode::SUCCESS)
    } else {
        println!(
            "FAIL ({}, tol {}, {} extensions compared, {} discrepancies)",
            report.sigma,
            format_probability(report.tolerance),
            report.compared,
            report.discrepancies.len()
        );
        let rows: Vec<Vec<Cell>> = report
            .discrepancies
            .iter()
            .map(|d| {
                let side = |p: Option<f64>| match p {
                    Some(p) => Cell::Probability(p),
                    None => Cell::Text("absent".into()),
                };
                vec![
                    Cell::Text(d.extension.to_string()),
                    side(d.left),
                    side(d.right),
                ]
            })
            .collect();
        print!(
            "{}",
            render(config.output, &["extension", "left", "right"], &rows)
        );
        Ok(ExitCode::from(EXIT_FAIL))
    }
}

fn cmd_dot(file: &Path, out: Option<&Path>, config: &Config) -> Result<(), Failure> {
    let praaf = read_praaf(file)?;
    let eta = praaf.has_arg(config.eta.id()).then_some(&config.eta);
    let dot = to_dot(&praaf, eta);
    write_or_print(&dot, out)
}
