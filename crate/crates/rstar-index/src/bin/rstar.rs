//! Thin command-line front end: build indexes to files, run batch queries,
//! report statistics, verify answers against the brute-force oracle.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 verification
//! mismatch.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use rstar_index::{io, oracle, BuildOptions, Error, Pattern, RStarIndex};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "rstar", about = "Compressed full-text index: build, query, stats", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index from a text file
    Build(BuildArgs),
    /// Run pattern queries against an index file
    Query(QueryArgs),
    /// Print index statistics and per-section sizes
    Stats(StatsArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Input text file (must not contain byte 0)
    #[arg(long)]
    input: PathBuf,
    /// Output index file
    #[arg(long)]
    output: PathBuf,
    /// Skip the reverse half; rightmost queries become unavailable
    #[arg(long)]
    no_rightmost: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Count,
    Locate,
    Leftmost,
    Rightmost,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("patsrc").required(true))]
struct QueryArgs {
    /// Index file produced by `rstar build`
    #[arg(long)]
    index: PathBuf,
    #[arg(long, value_enum)]
    mode: Mode,
    /// Single pattern (raw bytes)
    #[arg(long, group = "patsrc")]
    pattern: Option<String>,
    /// File with one pattern per line (byte-literal, trailing newline stripped)
    #[arg(long, group = "patsrc")]
    patterns_file: Option<PathBuf>,
    /// Original text file; cross-check every answer against the oracle
    #[arg(long)]
    verify: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    index: PathBuf,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Query(args) => cmd_query(args),
        Command::Stats(args) => cmd_stats(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}

fn data_err(e: impl std::fmt::Display) -> u8 {
    eprintln!("rstar: error: {e}");
    EXIT_DATA
}

fn cmd_build(args: BuildArgs) -> Result<(), u8> {
    let content = fs::read(&args.input).map_err(data_err)?;
    let options = BuildOptions {
        with_rightmost: !args.no_rightmost,
    };
    let idx = RStarIndex::build(&content, options).map_err(data_err)?;
    io::save_to_path(&idx, &args.output).map_err(data_err)?;
    let bytes = fs::metadata(&args.output).map_err(data_err)?.len();
    let s = idx.stats();
    println!(
        "n={} r={} r_rev={} z={} z_rev={} bytes={}",
        s.n,
        s.r,
        s.r_rev,
        s.z,
        s.z_rev.map_or("-".to_string(), |z| z.to_string()),
        bytes
    );
    Ok(())
}

fn read_patterns(args: &QueryArgs) -> Result<Vec<Vec<u8>>, u8> {
    if let Some(p) = &args.pattern {
        return Ok(vec![p.as_bytes().to_vec()]);
    }
    let path = args.patterns_file.as_ref().expect("clap enforces the group");
    let mut raw = fs::read(path).map_err(data_err)?;
    if raw.last() == Some(&b'\n') {
        raw.pop();
    }
    Ok(raw.split(|&b| b == b'\n').map(<[u8]>::to_vec).collect())
}

fn cmd_query(args: QueryArgs) -> Result<(), u8> {
    let idx = io::load_from_path(&args.index).map_err(data_err)?;
    let patterns = read_patterns(&args)?;
    let verify_text: Option<Vec<u8>> = match &args.verify {
        Some(path) => Some(fs::read(path).map_err(data_err)?),
        None => None,
    };

    for bytes in patterns {
        let pattern = Pattern::new(&bytes).map_err(data_err)?;
        let expected = verify_text
            .as_deref()
            .map(|t| oracle::naive_locate(t, &bytes));

        match args.mode {
            Mode::Count => {
                let occ = idx.count(&pattern);
                if let Some(exp) = &expected {
                    check(occ == exp.len(), &bytes, "count")?;
                }
                println!("{occ}");
            }
            Mode::Locate => {
                let hits = idx.locate(&pattern);
                if let Some(exp) = &expected {
                    check(&hits == exp, &bytes, "locate")?;
                }
                let list: Vec<String> = hits.iter().map(usize::to_string).collect();
                println!("{}\t{}", hits.len(), list.join(" "));
            }
            Mode::Leftmost => {
                let pos = idx.leftmost(&pattern);
                if let Some(exp) = &expected {
                    check(pos == exp.first().copied(), &bytes, "leftmost")?;
                }
                println!("{}", pos.map_or("-".to_string(), |p| p.to_string()));
            }
            Mode::Rightmost => {
                let pos = idx.rightmost(&pattern).map_err(|e| match e {
                    Error::RightmostUnavailable => data_err(e),
                    other => data_err(other),
                })?;
                if let Some(exp) = &expected {
                    check(pos == exp.last().copied(), &bytes, "rightmost")?;
                }
                println!("{}", pos.map_or("-".to_string(), |p| p.to_string()));
            }
        }
    }
    Ok(())
}

fn check(ok: bool, pattern: &[u8], what: &str) -> Result<(), u8> {
    if ok {
        Ok(())
    } else {
        eprintln!(
            "rstar: verification mismatch for {what} on pattern {:?}",
            String::from_utf8_lossy(pattern)
        );
        Err(EXIT_MISMATCH)
    }
}

fn cmd_stats(args: StatsArgs) -> Result<(), u8> {
    let buf = fs::read(&args.index).map_err(data_err)?;
    let idx = io::read_index(&buf).map_err(data_err)?;
    let sections = io::read_section_sizes(&buf).map_err(data_err)?;
    let overhead = io::container_overhead(&buf).map_err(data_err)?;
    let s = idx.stats();

    if args.json {
        let mut fields = vec![
            ("n".to_string(), s.n.to_string()),
            ("sigma".to_string(), s.sigma.to_string()),
            ("r".to_string(), s.r.to_string()),
            ("r_rev".to_string(), s.r_rev.to_string()),
            ("r_star".to_string(), s.r_star().to_string()),
            ("z".to_string(), s.z.to_string()),
            (
                "z_rev".to_string(),
                s.z_rev.map_or("null".to_string(), |z| z.to_string()),
            ),
            ("file_bytes".to_string(), buf.len().to_string()),
            ("container_overhead_bytes".to_string(), overhead.to_string()),
            (
                "sparse_bitvector_encoding".to_string(),
                "\"sorted-positions-binary-search\"".to_string(),
            ),
            (
                "range_minimum_encoding".to_string(),
                "\"per-node-sparse-table\"".to_string(),
            ),
        ];
        for sec in &sections {
            fields.push((format!("section_{}_bytes", sec.tag), sec.bytes.to_string()));
        }
        let body: Vec<String> = fields
            .iter()
            .map(|(k, v)| format!("\"{k}\": {v}"))
            .collect();
        println!("{{{}}}", body.join(", "));
    } else {
        println!("n={}", s.n);
        println!("sigma={}", s.sigma);
        println!("r={}", s.r);
        println!("r_rev={}", s.r_rev);
        println!("r_star={}", s.r_star());
        println!("z={}", s.z);
        println!("z_rev={}", s.z_rev.map_or("-".to_string(), |z| z.to_string()));
        println!("file_bytes={}", buf.len());
        println!("container_overhead_bytes={overhead}");
        println!("sparse_bitvector_encoding=sorted-positions-binary-search");
        println!("range_minimum_encoding=per-node-sparse-table");
        for sec in &sections {
            println!("section_{}_bytes={}", sec.tag, sec.bytes);
        }
    }
    Ok(())
}
