//! chring: inspect character tables, their mod-p blocks and Loewy lengths.
//!
//! Exit codes: 0 success, 1 partial scan failures, 2 invalid input,
//! 3 internal invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chring::loewy::{loewy_series, nilradical, oracle_loewy_length, oracle_nilpotent_set};
use chring::modring::FpAlgebra;
use chring::pipeline::{self, Error};

#[derive(Parser)]
#[command(name = "chring", version, about = "blocks and Loewy lengths of mod-p character rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a table file and run all consistency checks.
    Validate { file: PathBuf },
    /// Print the p'-sections of the conjugacy classes.
    Sections {
        file: PathBuf,
        #[arg(short)]
        p: u64,
    },
    /// Report the mod-p structure-constant algebra.
    Algebra {
        file: PathBuf,
        #[arg(short)]
        p: u64,
        /// Dump the exact structure constants as "i j l value" rows.
        #[arg(long)]
        dump_constants: bool,
    },
    /// Print the block decomposition of F_p Irr(G).
    Blocks {
        file: PathBuf,
        #[arg(short)]
        p: u64,
    },
    /// Print radical dimensions and Loewy length per block.
    Loewy {
        file: PathBuf,
        #[arg(short)]
        p: u64,
        /// Restrict to the principal block.
        #[arg(long)]
        principal: bool,
        /// Cross-check against the exhaustive nilpotent enumeration.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare principal Loewy lengths of a group and a normalizer table.
    Compare {
        file_g: PathBuf,
        file_n: PathBuf,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Summarize every table in a directory.
    Scan {
        dir: PathBuf,
        #[arg(short)]
        p: Option<u64>,
        /// Scan each table at every prime dividing its order.
        #[arg(long, conflicts_with = "p")]
        all_primes: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(short)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { file } => {
            let t = chring::load_table(&file)?;
            let report = chring::validate_table(&t);
            if report.passed() {
                println!(
                    "{}: ok ({} classes, order {}, {} checks)",
                    t.name,
                    t.class_count(),
                    t.order,
                    report.checks_run
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{}: INVALID", t.name);
                for f in &report.failures {
                    println!("  {}", f);
                }
                Ok(ExitCode::from(2))
            }
        }
        Command::Sections { file, p } => {
            let t = pipeline::load_validated(&file)?;
            require_prime(p)?;
            let sp = chring::section_partition(&t, p)?;
            for (r, members) in sp.fibers() {
                println!(
                    "section {:>3}  order {:>4}  classes {}",
                    r,
                    t.classes[r].element_order,
                    members
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Algebra {
            file,
            p,
            dump_constants,
        } => {
            let t = pipeline::load_validated(&file)?;
            require_prime(p)?;
            let tensor = chring::exact_tensor(&t)?;
            let algebra = tensor.reduce_mod(p);
            algebra.verify()?;
            println!(
                "{}: F_{} Irr(G) has dimension {}",
                t.name,
                p,
                algebra.dim()
            );
            if dump_constants {
                let k = tensor.dim;
                for i in 0..k {
                    for j in 0..k {
                        for l in 0..k {
                            let v = tensor.get(i, j, l);
                            if v != 0 {
                                println!("{} {} {} {}", i, j, l, v);
                            }
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Blocks { file, p } => {
            let t = pipeline::load_validated(&file)?;
            let analysis = pipeline::analyze(&t, p)?;
            for (i, b) in analysis.blocks.iter().enumerate() {
                println!(
                    "block {:>2}  sections [{}]  dim {:>3}  idempotent [{}]",
                    i,
                    b.sections
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    b.dimension(),
                    b.idempotent
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Loewy {
            file,
            p,
            principal,
            oracle,
            json,
        } => {
            let t = pipeline::load_validated(&file)?;
            let analysis = pipeline::analyze(&t, p)?;
            let blocks: Vec<&chring::BlockAlgebra> = if principal {
                vec![analysis.principal()]
            } else {
                analysis.blocks.iter().collect()
            };
            let mut reports = Vec::new();
            for b in blocks {
                let label = format!(
                    "sections [{}]",
                    b.sections
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                let j = nilradical(b)?;
                let report = loewy_series(b, &label, &j)?;
                if oracle {
                    let nil = oracle_nilpotent_set(b, None)?;
                    let expected = (b.p() as u128).pow(j.len() as u32);
                    if nil.len() as u128 != expected {
                        return Err(chring::BlockError::Internal(format!(
                            "oracle found {} nilpotents, radical predicts {}",
                            nil.len(),
                            expected
                        ))
                        .into());
                    }
                    let ll = oracle_loewy_length(b, &nil)?;
                    if ll != report.loewy_length {
                        return Err(chring::BlockError::Internal(format!(
                            "oracle Loewy length {} != {}",
                            ll, report.loewy_length
                        ))
                        .into());
                    }
                }
                reports.push(report);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                for r in &reports {
                    println!(
                        "{}  dims [{}]  loewy length {}{}",
                        r.block,
                        r.radical_dims
                            .iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                        r.loewy_length,
                        if oracle { "  (oracle ok)" } else { "" }
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            file_g,
            file_n,
            p,
            json,
        } => {
            let report = pipeline::compare_files(&file_g, &file_n, p)?;
            for w in &report.warnings {
                eprintln!("warning: {}", w);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!(
                    "group:      {} (order {})",
                    report.group_name, report.group_order
                );
                println!(
                    "normalizer: {} (order {})",
                    report.normalizer_name, report.normalizer_order
                );
                println!(
                    "p = {}: LL(B_p(G)) = {}, LL(B_p(N)) = {} -> {}",
                    report.p,
                    report.ll_group,
                    report.ll_normalizer,
                    if report.equal { "equal" } else { "NOT equal" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            dir,
            p,
            all_primes,
            format,
            out,
        } => {
            if p.is_none() && !all_primes {
                eprintln!("error: pass -p <prime> or --all-primes");
                return Ok(ExitCode::from(2));
            }
            let report = pipeline::scan_directory(&dir, p)?;
            let body = match format {
                Format::Csv => render_csv(&report),
                Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
            };
            match out {
                Some(path) => std::fs::write(&path, body).map_err(|source| {
                    chring::TableError::Io {
                        path: path.display().to_string(),
                        source,
                    }
                })?,
                None => print!("{}", body),
            }
            for f in &report.failures {
                eprintln!("failed: {}: {}", f.file, f.message);
            }
            if report.failures.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn require_prime(p: u64) -> Result<(), Error> {
    if pipeline::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn render_csv(report: &chring::ScanReport) -> String {
    let mut out = String::from("name,order,p,classes,p_regular,blocks,principal_dim,principal_ll\n");
    for r in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.name, r.order, r.p, r.classes, r.p_regular, r.blocks, r.principal_dim, r.principal_ll
        ));
    }
    out
}
