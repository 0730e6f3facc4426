//! Command-line surface: enumeration, section emission, counting,
//! classification sweeps, tangent reports, sampling, and the verification
//! suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure.

use crate::combinat::{enumerate_flag_words, enumerate_indices, FlagWord, IndexSet};
use crate::equations::{build_e, restrict};
use crate::sampler::{sample_flag, sample_isotropic, sample_schubert, SampleConfig};
use crate::schubert::{classify, classify_one, flag_is_lci, CLASSIFY_CSV_HEADER};
use crate::verify::{run_suite, VerifyOptions};
use crate::linalg::RatMatrix;
use crate::{Error, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Once;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "spgr",
    version,
    about = "Exact symplectic conditions on Grassmannian, flag, and Schubert varieties"
)]
struct Cli {
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List index sets of I_{d,2n}, optionally symplectic or Bruhat-bounded
    Enumerate {
        #[arg(long)]
        d: usize,
        #[arg(long = "two-n")]
        two_n: usize,
        #[arg(long)]
        symplectic: bool,
        /// Keep only indices Bruhat-below this one, e.g. "1,3,7"
        #[arg(long)]
        below: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the linear section E_{i'} as JSON
    Equation {
        /// Comma-separated entries of i'; empty for the d = 2 section
        #[arg(long = "i-prime", default_value = "")]
        i_prime: String,
        /// Half ambient size n (the ambient is 2n)
        #[arg(long)]
        n: usize,
    },
    /// Emit E_{i'} restricted to the Schubert variety of i
    Restrict {
        #[arg(long = "i-prime", default_value = "")]
        i_prime: String,
        #[arg(long)]
        i: String,
        #[arg(long = "two-n")]
        two_n: usize,
    },
    /// Count surviving local equations N_{j,i}
    Count {
        #[arg(long)]
        j: String,
        #[arg(long)]
        i: String,
        #[arg(long = "two-n")]
        two_n: usize,
    },
    /// Classify every symplectic index of I^Sp_{d,2n}
    Classify {
        #[arg(long)]
        d: usize,
        #[arg(long = "two-n")]
        two_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Tangent-space and smoothness report for one index
    Tangent {
        #[arg(long)]
        i: String,
        #[arg(long = "two-n")]
        two_n: usize,
    },
    /// Flag-word report, or enumerate flag words with --n
    Flag {
        /// Ordered word, e.g. "3,1,7,2"
        #[arg(long, conflicts_with = "n")]
        w: Option<String>,
        /// Ambient size 2n; defaults to twice the word length
        #[arg(long = "two-n")]
        two_n: Option<usize>,
        /// Enumerate words of this half-size instead
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        symplectic: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sample exact points (matrices as JSON arrays of rational strings)
    Sample {
        #[arg(long, value_enum)]
        kind: SampleKind,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long = "two-n")]
        two_n: Option<usize>,
        /// Schubert index (kind = schubert)
        #[arg(long)]
        i: Option<String>,
        /// Flag word (kind = flag)
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        symplectic: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, default_value_t = 10)]
        bound: i64,
    },
    /// Run verification suites; prints one PASS/FAIL line per check
    Verify {
        /// identities | lemma | span | vanishing | counts | tangent |
        /// schubert-vanishing | flags | classify | all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "two-n-max", default_value_t = 8)]
        two_n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SampleKind {
    Isotropic,
    Schubert,
    Flag,
}

static THREAD_POOL: Once = Once::new();

fn configure_threads() {
    THREAD_POOL.call_once(|| {
        if let Ok(value) = std::env::var("SPGR_THREADS") {
            if let Ok(k) = value.trim().parse::<usize>() {
                if k > 0 {
                    let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
                }
            }
        }
    });
}

/// Parses and dispatches; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    configure_threads();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            };
        }
    };
    let out_path = cli.out.clone();
    match dispatch(cli) {
        Ok(Output { text, exit_code }) => {
            let result = match out_path {
                Some(path) => std::fs::write(&path, text.as_bytes()).map_err(|e| {
                    Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
                }),
                None => {
                    let mut stdout = std::io::stdout().lock();
                    stdout
                        .write_all(text.as_bytes())
                        .map_err(|e| Error::InvalidArgument(format!("stdout: {e}")))
                }
            };
            match result {
                Ok(()) => exit_code,
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

struct Output {
    text: String,
    exit_code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit_code: 0 }
    }
}

fn matrix_json(m: &RatMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|v| v.to_string()).collect())
        .collect();
    json!(rows)
}

fn records_to_csv(records: &[crate::schubert::ClassificationRecord]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(CLASSIFY_CSV_HEADER)
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    for record in records {
        writer
            .write_record(record.csv_fields())
            .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(format!("csv utf8: {e}")))
}

fn dispatch(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Enumerate {
            d,
            two_n,
            symplectic,
            below,
            format,
        } => {
            let below = below
                .map(|text| IndexSet::parse(&text, two_n))
                .transpose()?;
            let list = enumerate_indices(d, two_n, symplectic, below.as_ref())?;
            let text = match format {
                Format::Json => {
                    let items: Vec<Vec<usize>> =
                        list.iter().map(|i| i.entries().to_vec()).collect();
                    serde_json::to_string_pretty(&items).expect("serializes") + "\n"
                }
                _ => {
                    let mut s: String =
                        list.iter().map(|i| i.to_string() + "\n").collect();
                    if s.is_empty() {
                        s.push('\n');
                    }
                    s
                }
            };
            Ok(Output::ok(text))
        }
        Command::Equation { i_prime, n } => {
            let ip = IndexSet::parse(&i_prime, 2 * n)?;
            let section = build_e(&ip, n)?;
            Ok(Output::ok(section.to_json() + "\n"))
        }
        Command::Restrict { i_prime, i, two_n } => {
            let ip = IndexSet::parse(&i_prime, two_n)?;
            let i = IndexSet::parse(&i, two_n)?;
            let section = restrict(&build_e(&ip, two_n / 2)?, &i)?;
            Ok(Output::ok(section.to_json() + "\n"))
        }
        Command::Count { j, i, two_n } => {
            let j = IndexSet::parse(&j, two_n)?;
            let i = IndexSet::parse(&i, two_n)?;
            let n = crate::schubert::count_nonzero(&j, &i)?;
            let mut body = json!({ "n": n });
            if j.entries() == [1, 2, 3] && i.entries() == [1, 3, 7] && two_n == 8 {
                body["note"] = json!(
                    "direct count and closed form both give 1; a commonly cited value of 2 \
                     does not withstand expansion"
                );
            }
            Ok(Output::ok(
                serde_json::to_string_pretty(&body).expect("serializes") + "\n",
            ))
        }
        Command::Classify { d, two_n, format } => {
            let records = classify(d, two_n)?;
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&records).expect("serializes") + "\n"
                }
                _ => records_to_csv(&records)?,
            };
            Ok(Output::ok(text))
        }
        Command::Tangent { i, two_n } => {
            let i = IndexSet::parse(&i, two_n)?;
            let record = classify_one(&i)?;
            Ok(Output::ok(
                serde_json::to_string_pretty(&record).expect("serializes") + "\n",
            ))
        }
        Command::Flag {
            w,
            two_n,
            n,
            symplectic,
            format,
        } => match (w, n) {
            (Some(word), _) => {
                let guessed = 2 * (word.matches(',').count() + 1);
                let w = FlagWord::parse(&word, two_n.unwrap_or(guessed))?;
                let mut body = json!({
                    "w": w.values(),
                    "two_n": w.two_n(),
                    "symplectic": w.is_symplectic(),
                    "dim_a": w.dim_a(),
                });
                if w.is_symplectic() {
                    let (_, dim_c) = w.dims()?;
                    body["dim_c"] = json!(dim_c);
                    if w.is_full() {
                        body["lci"] = json!(flag_is_lci(&w)?);
                    }
                }
                Ok(Output::ok(
                    serde_json::to_string_pretty(&body).expect("serializes") + "\n",
                ))
            }
            (None, Some(n)) => {
                let words = enumerate_flag_words(n, symplectic)?;
                let text = match format {
                    Format::Json => {
                        let items: Vec<Vec<usize>> =
                            words.iter().map(|w| w.values().to_vec()).collect();
                        serde_json::to_string_pretty(&items).expect("serializes") + "\n"
                    }
                    _ => words.iter().map(|w| w.to_string() + "\n").collect(),
                };
                Ok(Output::ok(text))
            }
            (None, None) => Err(Error::InvalidArgument(
                "flag needs either --w or --n".into(),
            )),
        },
        Command::Sample {
            kind,
            d,
            two_n,
            i,
            w,
            symplectic,
            seed,
            samples,
            bound,
        } => {
            let cfg = SampleConfig {
                seed,
                coefficient_bound: bound,
                ..SampleConfig::default()
            };
            let mut matrices = Vec::with_capacity(samples);
            for draw in 0..samples as u64 {
                let m = match kind {
                    SampleKind::Isotropic => {
                        let d = d.ok_or_else(|| {
                            Error::InvalidArgument("isotropic sampling needs --d".into())
                        })?;
                        let two_n = two_n.ok_or_else(|| {
                            Error::InvalidArgument("isotropic sampling needs --two-n".into())
                        })?;
                        sample_isotropic(d, two_n, &cfg, draw)?.matrix().clone()
                    }
                    SampleKind::Schubert => {
                        let idx = i.as_deref().ok_or_else(|| {
                            Error::InvalidArgument("schubert sampling needs --i".into())
                        })?;
                        let two_n = two_n.ok_or_else(|| {
                            Error::InvalidArgument("schubert sampling needs --two-n".into())
                        })?;
                        let idx = IndexSet::parse(idx, two_n)?;
                        sample_schubert(&idx, symplectic, &cfg, draw)?
                            .matrix()
                            .clone()
                    }
                    SampleKind::Flag => {
                        let word = w.as_deref().ok_or_else(|| {
                            Error::InvalidArgument("flag sampling needs --w".into())
                        })?;
                        let guessed = 2 * (word.matches(',').count() + 1);
                        let word = FlagWord::parse(word, two_n.unwrap_or(guessed))?;
                        sample_flag(&word, symplectic, &cfg, draw)?.matrix().clone()
                    }
                };
                matrices.push(matrix_json(&m));
            }
            Ok(Output::ok(
                serde_json::to_string_pretty(&json!(matrices)).expect("serializes") + "\n",
            ))
        }
        Command::Verify {
            suite,
            two_n_max,
            seed,
            samples,
            trials,
            format,
        } => {
            let opts = VerifyOptions {
                two_n_max,
                seed,
                samples,
                trials,
            };
            let results = run_suite(&suite, &opts)?;
            let failed = results.iter().filter(|r| !r.passed).count();
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&results).expect("serializes") + "\n"
                }
                _ => {
                    let mut s = String::new();
                    for r in &results {
                        let tag = if r.passed { "PASS" } else { "FAIL" };
                        s.push_str(&format!("{tag} {} — {}\n", r.name, r.detail));
                    }
                    s.push_str(&format!(
                        "{} checks, {} failed\n",
                        results.len(),
                        failed
                    ));
                    s
                }
            };
            Ok(Output {
                text,
                exit_code: if failed == 0 { 0 } else { 2 },
            })
        }
    }
}
