//! Command-line front end: `build`, `query`, `verify` and `dump`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 I/O error or corrupt input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};

use crate::corpus::{self, TrialShape};
use crate::index::{BuildOptions, Fault};
use crate::oracle::{check_index, Report};
use crate::tables::{self, RUNNING_EXAMPLE, SECTIONS};
use crate::{persist, CdmIndex, Dictionary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "circdict",
    version,
    about = "Compressed circular dictionary matching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an index from a dictionary file (one string per line).
    Build {
        input: PathBuf,
        output: PathBuf,
        /// Suffix array sampling factor (default: floor(log2(n + 1))).
        #[arg(long)]
        sa_sample: Option<usize>,
        /// LCP sampling factor (default: floor(log2(n + 1))).
        #[arg(long)]
        lcp_sample: Option<usize>,
        /// Read the length-prefixed binary dictionary format.
        #[arg(long)]
        binary_input: bool,
    },
    /// Report every rotation of a dictionary string occurring in the pattern(s).
    Query {
        index: PathBuf,
        pattern: Option<String>,
        /// File with one pattern per line.
        #[arg(long, conflicts_with = "pattern")]
        pattern_file: Option<PathBuf>,
        /// Switch to decoded arrays once the output grows large.
        #[arg(long)]
        adaptive: bool,
        /// Print work counters to stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Cross-check the index against a brute-force oracle.
    Verify {
        /// Dictionary to check; random dictionaries are generated when absent.
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 60)]
        max_n: usize,
        #[arg(long, default_value_t = 40)]
        max_m: usize,
        #[arg(long, default_value_t = 6)]
        max_d: usize,
        #[arg(long, default_value_t = 4)]
        max_sigma: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        binary_input: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print index tables.
    Dump {
        index: PathBuf,
        /// Sections to print (default: all).
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SECTIONS))]
        sections: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Data(anyhow::Error),
    Verify,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Data(e)
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Build {
            input,
            output,
            sa_sample,
            lcp_sample,
            binary_input,
        } => build(&input, &output, sa_sample, lcp_sample, binary_input),
        Command::Query {
            index,
            pattern,
            pattern_file,
            adaptive,
            stats,
        } => query(&index, pattern, pattern_file, adaptive, stats),
        Command::Verify {
            input,
            trials,
            max_n,
            max_m,
            max_d,
            max_sigma,
            seed,
            binary_input,
            inject_fault,
        } => {
            let shape = TrialShape {
                max_n,
                max_d,
                max_sigma,
                max_m,
            };
            verify(
                input.as_deref(),
                trials,
                shape,
                seed,
                binary_input,
                inject_fault,
            )
        }
        Command::Dump { index, sections } => dump(&index, &sections),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(e))
            if e.chain().any(|c| {
                c.downcast_ref::<std::io::Error>()
                    .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            }) =>
        {
            EXIT_OK
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e:#}");
            EXIT_DATA
        }
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
    }
}

fn read_dictionary(path: &Path, binary: bool) -> anyhow::Result<Dictionary> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let dict = if binary {
        Dictionary::from_binary(&bytes)
    } else {
        Dictionary::from_text(&bytes)
    };
    dict.with_context(|| format!("parsing {}", path.display()))
}

fn load_index(path: &Path) -> anyhow::Result<CdmIndex> {
    persist::load(path).with_context(|| format!("loading {}", path.display()))
}

fn build(
    input: &Path,
    output: &Path,
    sa_sample: Option<usize>,
    lcp_sample: Option<usize>,
    binary: bool,
) -> Result<(), Failure> {
    if sa_sample == Some(0) || lcp_sample == Some(0) {
        return Err(Failure::Usage("sampling factors must be at least 1".into()));
    }
    let dict = read_dictionary(input, binary)?;
    let start = Instant::now();
    let opts = BuildOptions {
        sa_sample,
        lcp_sample,
        fault: None,
    };
    let idx = CdmIndex::build(&dict, opts);
    let bytes = persist::to_bytes(&idx);
    std::fs::write(output, &bytes).with_context(|| format!("writing {}", output.display()))?;
    eprintln!(
        "built index: n={} d={} sigma={} n'={} n*={} s_sa={} s_lcp={} size={} bytes ({:.3} bytes/symbol) in {:.2?}",
        idx.n(),
        idx.d(),
        idx.sigma(),
        idx.n_prime(),
        idx.n_star(),
        idx.suffix_array().sample_rate(),
        idx.lcp().sample_rate(),
        bytes.len(),
        bytes.len() as f64 / idx.n() as f64,
        start.elapsed()
    );
    Ok(())
}

fn query(
    index: &Path,
    pattern: Option<String>,
    pattern_file: Option<PathBuf>,
    adaptive: bool,
    stats: bool,
) -> Result<(), Failure> {
    let patterns: Vec<Vec<u8>> = match (pattern, pattern_file) {
        (Some(p), None) => vec![p.into_bytes()],
        (None, Some(f)) => {
            let raw = std::fs::read(&f).with_context(|| format!("reading {}", f.display()))?;
            raw.split(|&b| b == b'\n')
                .map(|l| l.strip_suffix(b"\r").unwrap_or(l).to_vec())
                .filter(|l| !l.is_empty())
                .collect()
        }
        _ => return Err(Failure::Usage("give a pattern or --pattern-file".into())),
    };
    let idx = load_index(index)?;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for p in &patterns {
        let (occ, st) = if adaptive {
            idx.cdm_adaptive_with_stats(p)
        } else {
            idx.cdm_with_stats(p)
        };
        let write = |out: &mut std::io::BufWriter<_>| -> std::io::Result<()> {
            writeln!(
                out,
                "# pattern={} occurrences={}",
                String::from_utf8_lossy(p),
                occ.len()
            )?;
            for o in &occ {
                writeln!(out, "{}\t{}\t{}\t{}", o.i, o.k, o.string, o.offset)?;
            }
            Ok(())
        };
        write(&mut out).context("writing output")?;
        if stats {
            eprintln!(
                "stats: quadruple_steps={} find_min_len_calls={} marked_climbs={} switched_at={:?}",
                st.quadruple_steps,
                st.find_min_len_calls.iter().sum::<usize>(),
                st.marked_climbs.iter().sum::<usize>(),
                st.switched_at
            );
        }
    }
    out.flush().context("writing output")?;
    Ok(())
}

/// Runs `f`, turning a panic (possible with corrupted samples) into an error message.
fn guarded<T>(f: impl FnOnce() -> T) -> Result<T, String> {
    let hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let res = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f));
    std::panic::set_hook(hook);
    res.map_err(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        format!("panicked: {msg}")
    })
}

fn guarded_check(dict: &Dictionary, opts: BuildOptions, patterns: &[Vec<u8>]) -> Report {
    guarded(|| check_index(dict, &CdmIndex::build(dict, opts), patterns)).unwrap_or_else(|msg| {
        Report {
            checks: 1,
            failures: vec![msg],
        }
    })
}

/// Random oracle trials; returns the merged report.
pub fn random_trials(trials: usize, shape: TrialShape, seed: u64, fault: Option<Fault>) -> Report {
    let mut rng = corpus::rng(seed);
    let mut report = Report::default();
    for trial in 0..trials {
        let dict = corpus::random_dictionary(&mut rng, &shape);
        let rates = [1, 2, 3, 5];
        let opts = BuildOptions {
            sa_sample: Some(rates[trial % 4]),
            lcp_sample: Some(rates[(trial / 4) % 4]),
            fault,
        };
        let patterns: Vec<Vec<u8>> = (0..3)
            .map(|_| corpus::random_pattern(&mut rng, &dict, shape.max_m))
            .collect();
        let mut r = guarded_check(&dict, opts, &patterns);
        let strings: Vec<String> = dict
            .strings()
            .iter()
            .map(|s| String::from_utf8_lossy(s).into_owned())
            .collect();
        for f in &mut r.failures {
            *f = format!("trial {trial} {strings:?}: {f}");
        }
        report.merge(r);
    }
    report
}

fn verify(
    input: Option<&Path>,
    trials: usize,
    shape: TrialShape,
    seed: u64,
    binary: bool,
    inject_fault: bool,
) -> Result<(), Failure> {
    if shape.max_n == 0 || shape.max_m == 0 || shape.max_d == 0 || shape.max_sigma == 0 {
        return Err(Failure::Usage("limits must be at least 1".into()));
    }
    let fault = inject_fault.then_some(Fault::SaSample);
    let start = Instant::now();
    let report = match input {
        Some(path) => {
            let dict = read_dictionary(path, binary)?;
            let mut report = Report::default();
            if dict
                .strings()
                .iter()
                .map(Vec::as_slice)
                .eq(RUNNING_EXAMPLE.iter().map(|s| s.as_bytes()))
            {
                let opts = BuildOptions {
                    sa_sample: Some(2),
                    lcp_sample: Some(2),
                    fault,
                };
                let diffs =
                    guarded(|| tables::compare_running_example(&CdmIndex::build(&dict, opts)))
                        .unwrap_or_else(|msg| vec![("build", msg, "")]);
                for &(name, want) in tables::RUNNING_EXAMPLE_TABLES {
                    let status = if diffs.iter().any(|d| d.0 == name) {
                        "MISMATCH"
                    } else {
                        "ok"
                    };
                    println!("golden {name:<10} {status:<8} {want}");
                }
                report.checks += tables::RUNNING_EXAMPLE_TABLES.len();
                report.failures.extend(
                    diffs
                        .into_iter()
                        .map(|(n, g, w)| format!("golden {n}: got {g}, want {w}")),
                );
            }
            let mut rng = corpus::rng(seed);
            let patterns: Vec<Vec<u8>> = (0..trials.min(200))
                .map(|_| corpus::random_pattern(&mut rng, &dict, shape.max_m))
                .collect();
            let opts = BuildOptions {
                fault,
                ..BuildOptions::default()
            };
            report.merge(guarded_check(&dict, opts, &patterns));
            report
        }
        None => random_trials(trials, shape, seed, fault),
    };
    for f in report.failures.iter().take(20) {
        println!("FAIL {f}");
    }
    println!(
        "verify: {} checks, {} failures in {:.2?}",
        report.checks,
        report.failures.len(),
        start.elapsed()
    );
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn dump(index: &Path, sections: &[String]) -> Result<(), Failure> {
    let idx = load_index(index)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let res = if sections.len() == 1 {
        writeln!(
            out,
            "{}",
            tables::render(&idx, &sections[0]).expect("validated by clap")
        )
    } else {
        let names: Vec<&str> = if sections.is_empty() {
            SECTIONS.to_vec()
        } else {
            sections.iter().map(String::as_str).collect()
        };
        names.iter().try_for_each(|name| {
            writeln!(
                out,
                "{name}: {}",
                tables::render(&idx, name).expect("validated by clap")
            )
        })
    };
    res.context("writing output")?;
    Ok(())
}
