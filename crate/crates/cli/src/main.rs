use clap::{Parser, Subcommand};
use emb2::io::{failing_triangles, generate_example, parse_document, report_for, InputDocument, InputError};
use emb2::selftest::{seed_from_env, verdict_table, word_fuzz};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "emb2", version, about = "Homotopy type of the embedding space of X in a triangulated surface")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a document describes a valid surface and subcomplex.
    Validate { file: PathBuf },
    /// Classify the embedding space.
    Classify {
        file: PathBuf,
        /// Print every decision with its evidence.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Fundamental group of M and the subgroup induced by X.
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a catalog example.
    Generate {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify the whole catalog and fuzz the word problem.
    Selftest,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        let mut msg = e.to_string();
        if let InputError::Surface(report, triangles) = &e {
            let idx = failing_triangles(report, triangles);
            if !idx.is_empty() {
                msg.push_str(&format!("\n  offending entries: {}", idx.iter().map(|i| format!("triangles[{i}]")).collect::<Vec<_>>().join(", ")));
            }
        }
        Failure::Input(msg)
    }
}

fn load(path: &Path) -> Result<InputDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_document(&text)?)
}

fn classify_error(e: emb2::classifier::ClassifyError) -> Failure {
    if e.is_input_error() {
        Failure::Input(e.to_string())
    } else {
        Failure::Internal(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            let doc = load(&file)?;
            let (s, x) = doc.build()?;
            let f = x.flags();
            println!("ok: {}", emb2::surface::classify_surface(&s));
            println!(
                "subcomplex: {} vertices, {} edges, {} triangles (point={} arc={} circle={} closed_surface={})",
                x.vertices().len(),
                x.edges().len(),
                x.triangles().len(),
                f.is_point,
                f.is_arc,
                f.is_circle,
                f.is_closed_surface
            );
        }
        Command::Classify { file, explain, json } => {
            let doc = load(&file)?;
            let (s, x) = doc.build()?;
            let start = Instant::now();
            let (report, _) = report_for(&doc, &s, &x).map_err(classify_error)?;
            let elapsed = start.elapsed();
            report
                .trace
                .replay()
                .map_err(|e| Failure::Internal(e.to_string()))?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text(explain));
                println!("time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            }
        }
        Command::Pi1 { file, json } => {
            let doc = load(&file)?;
            let (s, x) = doc.build()?;
            let (_, pi1) = report_for(&doc, &s, &x).map_err(classify_error)?;
            if json {
                print!("{}", pi1.to_json());
            } else {
                print!("{}", pi1.to_text());
            }
        }
        Command::Generate { name, output } => {
            let doc = generate_example(&name).map_err(|e| Failure::Input(e.to_string()))?;
            match output {
                Some(path) => std::fs::write(&path, doc.to_json())
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
                None => print!("{}", doc.to_json()),
            }
        }
        Command::Selftest => {
            let rows = verdict_table();
            println!("{:<30} {:<45} {:<16} {}", "example", "homotopy type", "case", "verdict");
            for r in &rows {
                let (d, c) = match &r.got {
                    Ok((d, c)) => (d.to_string(), c.short()),
                    Err(e) => (format!("error: {e}"), String::new()),
                };
                println!("{:<30} {:<45} {:<16} {}", r.name, d, c, if r.passed() { "pass" } else { "FAIL" });
            }
            let seed = seed_from_env();
            let fuzz = word_fuzz(seed, 200);
            println!("word fuzz (seed {seed}): {} checks, {} failures", fuzz.checks, fuzz.failures.len());
            for f in fuzz.failures.iter().take(10) {
                println!("  {f}");
            }
            let failed = rows.iter().filter(|r| !r.passed()).count();
            if failed > 0 || !fuzz.failures.is_empty() {
                return Err(Failure::Internal(format!("{failed} catalog rows failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
