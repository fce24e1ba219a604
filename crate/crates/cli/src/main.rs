//! `expander`: build expander families, measure them, and probe for spanning
//! subgraphs with large girth.
//!
//! Exit codes: 0 success, 1 usage, 2 input data, 3 computation refused,
//! 4 internal failure.

mod commands;
mod error;
mod session;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::commands::*;
use crate::error::{CliError, CliResult};
use crate::session::{absolute, load_manifest, read_bytes, sha256_hex, Session};

#[derive(Debug, Parser)]
#[command(name = "expander", version, about = "Expander families, expansion metrics and high-girth spanning subgraphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph from a family spec and write it as an edge list.
    Gen(GenArgs),
    /// Expansion, spectrum, girth and diameter of a graph (JSON).
    Measure(MeasureArgs),
    /// One bond-percolation sample (CSV).
    Percolate(PercolateArgs),
    /// Giant-component fraction over a grid of retention probabilities (CSV).
    Sweep(SweepArgs),
    /// Delete shortest-cycle edges until a girth target holds.
    Trim(TrimArgs),
    /// Search for a spanning subgraph meeting a girth target.
    Search(SearchArgs),
    /// Race all strategies over family instances and girth ratios.
    Probe(ProbeArgs),
    /// Expansion of every radius-r induced ball (JSON).
    Balls(BallsArgs),
    /// Girth and gap along the congruence tower mod p^n (CSV).
    Tower(TowerArgs),
    /// Re-run a command from its manifest and compare output hashes.
    Replay(ReplayArgs),
}

#[derive(Debug, Args, Serialize)]
struct ReplayArgs {
    manifest: PathBuf,
    /// Write the re-run outputs here instead of over the recorded paths.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn config<T: Serialize>(args: &T) -> serde_json::Value {
    serde_json::to_value(args).expect("arguments serialize")
}

fn execute(command: &Command, argv: &[String]) -> CliResult<()> {
    let mut s = Session::default();
    let (name, cfg) = match command {
        Command::Gen(a) => (gen(a, &mut s).map(|_| "gen")?, config(a)),
        Command::Measure(a) => (measure_cmd(a, &mut s).map(|_| "measure")?, config(a)),
        Command::Percolate(a) => (percolate_cmd(a, &mut s).map(|_| "percolate")?, config(a)),
        Command::Sweep(a) => (sweep(a, &mut s).map(|_| "sweep")?, config(a)),
        Command::Trim(a) => (trim(a, &mut s).map(|_| "trim")?, config(a)),
        Command::Search(a) => (search(a, &mut s).map(|_| "search")?, config(a)),
        Command::Probe(a) => (probe(a, &mut s).map(|_| "probe")?, config(a)),
        Command::Balls(a) => (balls(a, &mut s).map(|_| "balls")?, config(a)),
        Command::Tower(a) => (tower(a, &mut s).map(|_| "tower")?, config(a)),
        Command::Replay(a) => return replay(a),
    };
    s.finish(name, argv, cfg)
}

fn replay(args: &ReplayArgs) -> CliResult<()> {
    let m = load_manifest(&args.manifest)?;
    for input in &m.inputs {
        if sha256_hex(&read_bytes(&input.path)?) != input.sha256 {
            return Err(CliError::Read {
                path: input.path.clone(),
                source: io::Error::other("contents differ from the manifest"),
            });
        }
    }
    let mut argv = m.argv.clone();
    let mut targets: Vec<PathBuf> = m.outputs.iter().map(|o| o.path.clone()).collect();
    if let Some(dir) = &args.out_dir {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Write {
            path: dir.clone(),
            source,
        })?;
        let dir = absolute(dir);
        for (rec, target) in m.outputs.iter().zip(targets.iter_mut()) {
            let name = rec
                .path
                .file_name()
                .ok_or_else(|| CliError::Replay(format!("output {} has no file name", rec.path.display())))?;
            *target = dir.join(name);
            for a in argv.iter_mut().filter(|a| rec.path.as_os_str() == a.as_str()) {
                *a = target.display().to_string();
            }
        }
    }
    let cli = Cli::try_parse_from(std::iter::once("expander".to_string()).chain(argv.iter().cloned()))
        .map_err(|e| CliError::Usage(format!("manifest arguments: {e}")))?;
    if matches!(cli.command, Command::Replay(_)) {
        return Err(CliError::Usage("a manifest cannot replay another replay".into()));
    }
    execute(&cli.command, &argv)?;

    let mut differing = 0;
    for (rec, target) in m.outputs.iter().zip(&targets) {
        let same = sha256_hex(&read_bytes(target)?) == rec.sha256;
        if !same {
            differing += 1;
        }
        println!("{}\t{}\t{}", if same { "identical" } else { "differs" }, rec.role, target.display());
    }
    if differing > 0 {
        return Err(CliError::Replay(format!("{differing} output(s) differ from the manifest")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    }
    match execute(&cli.command, &argv[1..]) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
