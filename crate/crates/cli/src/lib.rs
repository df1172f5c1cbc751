//! Command-line front end: braid words and solenoid spec files in, reports and SVG out.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it directly.

pub mod draw;
mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use solenoid_core::braid::{are_conjugate_with, cable_compose, is_achiral_braid_with, normal_form};
use solenoid_core::invariants::{alexander, jones_with};
use solenoid_core::solenoid::{
    algebraically_linked, construct_strictly_achiral, deletion_equivalent, emit_spec,
    encode_2adic_with, infinite_primes, invariant_sequence_with, is_achiral_2adic,
    knotting_report_with, level_linking, parse_spec, signseq_equivalent, smale_enumerate_with,
    supernatural_equal, type_of, verify_strict_achirality_with, Aggregate, InvariantKind,
};
use solenoid_core::{
    AmbientCompanion, BraidWord, Error, Limits, SolenoidSpec, SolenoidType, WLabel,
};

pub use report::{Inputs, Report};

/// Exit status and everything written to standard output.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Parser)]
#[command(
    name = "solenoid",
    version,
    about = "Braids, closed-braid invariants and solenoid defining sequences"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Crossing cap for the Kauffman state sum.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_CROSSINGS)]
    max_crossings: usize,
    /// Cap on the super summit orbit explored by conjugacy search.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_ORBIT)]
    max_orbit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BraidArgs {
    /// Strand count.
    #[arg(long, requires = "word", conflicts_with = "input")]
    strands: Option<usize>,
    /// Letters as signed generator indices, e.g. "1 -2".
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    /// Braid file: `strands: <n>` header followed by the letters.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Garside left normal form and basic data of a braid.
    BraidNormalize(BraidArgs),
    /// Conjugacy of two braids on the same strands, with a witness.
    BraidConjugate {
        #[command(flatten)]
        braid: BraidArgs,
        /// Second braid's letters.
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Whether a braid is conjugate to its mirror.
    BraidAchiral(BraidArgs),
    /// Satellite braid of an outer (cyclic) braid and an inner pattern braid.
    BraidCable {
        #[command(flatten)]
        outer: BraidArgs,
        #[arg(long)]
        inner_strands: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        inner_word: String,
    },
    /// Jones polynomial of the closure.
    InvJones(BraidArgs),
    /// Alexander polynomial of the closure (knots only).
    InvAlexander(BraidArgs),
    /// Type, 2-adic class, strict achirality and knotting of a spec file.
    SolAnalyze {
        spec: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Compare two spec files.
    SolEquiv {
        a: PathBuf,
        b: PathBuf,
        /// Linking number of the two ambient cores.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lk0: i64,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Build a strictly achiral embedding of a given type.
    SolConstruct {
        /// Repeating winding numbers, e.g. "3,5".
        #[arg(long = "type")]
        ty: String,
        /// Winding numbers before the repeating part.
        #[arg(long, default_value = "")]
        prefix: String,
        /// Use the figure-eight knot as ambient companion.
        #[arg(long)]
        knotted: bool,
        /// Also write the spec file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unknotted (Smale) embeddings of a purely periodic type.
    SolSmale {
        #[arg(long = "type")]
        ty: String,
    },
    /// Invariants of the cores N_0..N_depth and their weighted series.
    SolInvariants {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Jones)]
        which: Which,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Series weights g(0), g(1), ...; defaults to all ones.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// SVG diagram of the closed braid.
    Draw {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Jones,
    Alexander,
    Writhe,
}

/// Runs one command. `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once("solenoid".to_string()).chain(args.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return Outcome {
                code,
                stdout: e.render().to_string(),
            };
        }
    };
    let echo = echo(&args);
    let limits = Limits {
        max_crossings: cli.max_crossings,
        max_orbit: cli.max_orbit,
    };
    let mut inputs = Inputs::default();
    let (code, report) = match execute(&cli.command, &limits, &mut inputs) {
        Ok(results) => {
            let mut r = Report::new(echo, &inputs);
            r.results = results;
            (0, r)
        }
        Err(failure) => {
            let mut r = Report::new(echo, &inputs);
            let code = failure.describe(&mut r);
            (code, r)
        }
    };
    Outcome {
        code,
        stdout: if cli.json {
            report.to_json()
        } else {
            report.to_text()
        },
    }
}

/// The invocation as typed, minus `--json` so text and JSON reports agree.
fn echo(args: &[String]) -> String {
    args.iter()
        .filter(|a| a.as_str() != "--json")
        .map(|a| {
            if a.is_empty() || a.chars().any(|c| c.is_whitespace() || c == '"') {
                format!("\"{}\"", a.replace('"', "\\\""))
            } else {
                a.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

enum Failure {
    Domain(Error),
    Usage(String),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn describe(self, r: &mut Report) -> i32 {
        match self {
            Failure::Domain(e @ Error::Parse { line, .. }) => {
                r.push("error", e.to_string()).push("line", line);
                2
            }
            Failure::Domain(
                e @ Error::Limit {
                    what,
                    limit,
                    actual,
                },
            ) => {
                r.push("error", e.to_string())
                    .push("limit", format!("{what}: {actual} > {limit}"));
                1
            }
            Failure::Domain(e) => {
                r.push("error", e.to_string());
                1
            }
            Failure::Usage(message) => {
                r.push("error", message);
                2
            }
            Failure::Io(path, e) => {
                r.push("error", format!("{}: {e}", path.display()));
                1
            }
        }
    }
}

type Results = Vec<(String, Value)>;

struct Builder(Results);

impl Builder {
    fn new() -> Self {
        Builder(Vec::new())
    }

    fn push(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }
}

fn execute(command: &Command, limits: &Limits, inputs: &mut Inputs) -> Result<Results, Failure> {
    Ok(match command {
        Command::BraidNormalize(args) => {
            let b = read_braid(args, inputs)?;
            let nf = normal_form(&b);
            Builder::new()
                .push("braid", braid_fields(&b))
                .push("normal_form", nf.to_string())
                .push("normal_word", nf.to_word().word_string())
                .push("inf", nf.inf())
                .push("sup", nf.sup())
                .push("canonical_length", nf.canonical_length())
                .push("permutation", b.permutation().to_string())
                .push("exponent_sum", b.exponent_sum())
                .push("cyclic", b.is_cyclic())
                .0
        }
        Command::BraidConjugate { braid, other } => {
            let a = read_braid(braid, inputs)?;
            inputs.add("other", other);
            let b = BraidWord::parse_word(a.strands(), other)?;
            let r = are_conjugate_with(&a, &b, limits)?;
            Builder::new()
                .push("a", braid_fields(&a))
                .push("b", braid_fields(&b))
                .push("conjugate", r.conjugate)
                .push("witness", witness_field(r.witness.as_ref()))
                .0
        }
        Command::BraidAchiral(args) => {
            let b = read_braid(args, inputs)?;
            let r = is_achiral_braid_with(&b, limits)?;
            Builder::new()
                .push("braid", braid_fields(&b))
                .push("mirror", braid_fields(&b.mirror()))
                .push("conjugate", r.conjugate)
                .push("witness", witness_field(r.witness.as_ref()))
                .push("exponent_sum", b.exponent_sum())
                .push("cyclic", b.is_cyclic())
                .0
        }
        Command::BraidCable {
            outer,
            inner_strands,
            inner_word,
        } => {
            let o = read_braid(outer, inputs)?;
            inputs
                .add("inner_strands", inner_strands)
                .add("inner_word", inner_word);
            let i = BraidWord::parse_word(*inner_strands, inner_word)?;
            let c = cable_compose(&o, &i)?;
            Builder::new()
                .push("outer", braid_fields(&o))
                .push("inner", braid_fields(&i))
                .push("cable", braid_fields(&c))
                .push("exponent_sum", c.exponent_sum())
                .push("permutation", c.permutation().to_string())
                .0
        }
        Command::InvJones(args) => {
            let b = read_braid(args, inputs)?;
            Builder::new()
                .push("braid", braid_fields(&b))
                .push("components", b.permutation().cycle_count())
                .push("jones", jones_with(&b, limits)?.to_string())
                .0
        }
        Command::InvAlexander(args) => {
            let b = read_braid(args, inputs)?;
            Builder::new()
                .push("braid", braid_fields(&b))
                .push("alexander", alexander(&b)?.to_string())
                .0
        }
        Command::SolAnalyze { spec, depth } => {
            let s = read_spec(spec, "spec", inputs)?;
            inputs.add("depth", depth);
            analyze(&s, *depth, limits)?
        }
        Command::SolEquiv { a, b, lk0, depth } => {
            let sa = read_spec(a, "a", inputs)?;
            let sb = read_spec(b, "b", inputs)?;
            inputs.add("lk0", lk0).add("depth", depth);
            let (ta, tb) = (type_of(&sa), type_of(&sb));
            let signs = match (
                encode_2adic_with(&sa, limits),
                encode_2adic_with(&sb, limits),
            ) {
                (Ok(x), Ok(y)) => Value::Bool(signseq_equivalent(&x, &y)),
                _ => Value::from("n/a"),
            };
            Builder::new()
                .push("type_a", ta.to_string())
                .push("type_b", tb.to_string())
                .push(
                    "deletion_equivalent",
                    deletion_equivalent(ta.seq(), tb.seq()),
                )
                .push("supernatural_equal", supernatural_equal(&ta, &tb))
                .push("signseq_equivalent", signs)
                .push("algebraically_linked", algebraically_linked(&sa, &sb, *lk0))
                .push(
                    "level_linking",
                    level_linking(&sa, *depth, &sb, *depth, *lk0).to_string(),
                )
                .0
        }
        Command::SolConstruct {
            ty,
            prefix,
            knotted,
            out,
        } => {
            inputs
                .add("type", ty)
                .add("prefix", prefix)
                .add("knotted", knotted);
            let t = SolenoidType::new(parse_list(prefix, "prefix")?, parse_list(ty, "type")?)?;
            let spec = construct_strictly_achiral(&t, *knotted)?;
            let text = emit_spec(&spec);
            if let Some(path) = out {
                fs::write(path, &text).map_err(|e| Failure::Io(path.clone(), e))?;
            }
            Builder::new()
                .push("type", t.to_string())
                .push("ambient", ambient_field(&spec.ambient))
                .push(
                    "strict_achirality",
                    verify_strict_achirality_with(&spec, limits).as_str(),
                )
                .push("spec", text.lines().collect::<Vec<_>>())
                .push(
                    "out",
                    out.as_ref()
                        .map_or("none".to_string(), |p| p.display().to_string()),
                )
                .0
        }
        Command::SolSmale { ty } => {
            inputs.add("type", ty);
            let t = SolenoidType::periodic(parse_list(ty, "type")?)?;
            let specs = smale_enumerate_with(&t, limits)?;
            let labels: Vec<String> = specs.iter().map(class_labels).collect();
            Builder::new()
                .push("type", t.to_string())
                .push("count", specs.len())
                .push("specs", labels)
                .0
        }
        Command::SolInvariants {
            spec,
            which,
            depth,
            weights,
        } => {
            let s = read_spec(spec, "spec", inputs)?;
            let kind = match which {
                Which::Jones => InvariantKind::Jones,
                Which::Alexander => InvariantKind::Alexander,
                Which::Writhe => InvariantKind::Writhe,
            };
            let weights = match weights {
                Some(w) => parse_signed_list(w, "weights")?,
                None => vec![1; depth + 1],
            };
            inputs
                .add("which", kind.name())
                .add("depth", depth)
                .add("weights", format!("{weights:?}"));
            let seq = invariant_sequence_with(&s, *depth, kind, &weights, limits)?;
            Builder::new()
                .push("invariant", kind.name())
                .push(
                    "levels",
                    seq.levels
                        .iter()
                        .map(|(n, p)| format!("N{n}: {p}"))
                        .collect::<Vec<_>>(),
                )
                .push(
                    "series",
                    seq.series
                        .iter()
                        .enumerate()
                        .map(|(n, p)| format!("x^{n}: {p}"))
                        .collect::<Vec<_>>(),
                )
                .push("truncated", truncation_field(&seq.truncated))
                .0
        }
        Command::Draw { braid, out } => {
            let b = read_braid(braid, inputs)?;
            draw::write(&b, out).map_err(|e| Failure::Io(out.clone(), e))?;
            Builder::new()
                .push("braid", braid_fields(&b))
                .push("crossings", b.len())
                .push("out", out.display().to_string())
                .0
        }
    })
}

fn analyze(s: &SolenoidSpec, depth: usize, limits: &Limits) -> Result<Results, Failure> {
    let t = type_of(s);
    let primes: Vec<u64> = infinite_primes(&t).into_iter().collect();
    let (signs, achiral) = match encode_2adic_with(s, limits) {
        Ok(seq) => (
            Value::from(seq.to_string()),
            Value::Bool(is_achiral_2adic(&seq)),
        ),
        Err(_) => (Value::from("n/a"), Value::from("n/a")),
    };
    let report = knotting_report_with(s, depth, limits);
    let aggregate = match report.aggregate {
        Aggregate::Knotted => "Knotted",
        Aggregate::UnknottedThrough(_) => "Unknotted",
        Aggregate::Unknown => "Unknown",
    };
    Ok(Builder::new()
        .push("ambient", ambient_field(&s.ambient))
        .push("type", t.to_string())
        .push("infinite_primes", primes)
        .push("sign_sequence", signs)
        .push("achiral_2adic", achiral)
        .push(
            "strict_achirality",
            verify_strict_achirality_with(s, limits).as_str(),
        )
        .push(
            "knotting_levels",
            report
                .levels
                .iter()
                .enumerate()
                .map(|(n, o)| format!("N{n}: {}", o.verdict))
                .collect::<Vec<_>>(),
        )
        .push("knotting", aggregate)
        .push("truncated", truncation_field(&report.truncated))
        .0)
}

fn read_braid(args: &BraidArgs, inputs: &mut Inputs) -> Result<BraidWord, Failure> {
    match (&args.input, args.strands, &args.word) {
        (Some(path), _, _) => {
            let text = read_file(path)?;
            inputs.add("braid", &text);
            Ok(BraidWord::parse_text(&text)?)
        }
        (None, Some(strands), Some(word)) => {
            inputs.add("strands", strands).add("word", word);
            Ok(BraidWord::parse_word(strands, word)?)
        }
        _ => Err(Failure::Usage(
            "give --strands and --word, or --input".into(),
        )),
    }
}

fn read_spec(path: &Path, name: &str, inputs: &mut Inputs) -> Result<SolenoidSpec, Failure> {
    let text = read_file(path)?;
    inputs.add(name, &text);
    Ok(parse_spec(&text)?)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<u64>, Error> {
    split_list(text)
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad {what} entry `{tok}`"),
            })
        })
        .collect()
}

fn parse_signed_list(text: &str, what: &str) -> Result<Vec<i64>, Error> {
    split_list(text)
        .map(|tok| {
            tok.parse::<i64>().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad {what} entry `{tok}`"),
            })
        })
        .collect()
}

fn split_list(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
}

fn braid_fields(b: &BraidWord) -> String {
    if b.is_empty() {
        format!("{} strands: identity", b.strands())
    } else {
        format!("{} strands: {}", b.strands(), b.word_string())
    }
}

fn witness_field(w: Option<&BraidWord>) -> Value {
    match w {
        None => Value::from("none"),
        Some(w) if w.is_empty() => Value::from("identity"),
        Some(w) => Value::from(w.word_string()),
    }
}

fn ambient_field(a: &AmbientCompanion) -> String {
    if a.is_unknot() {
        "unknot".into()
    } else {
        let mut s = format!("braid {}", braid_fields(&a.braid()));
        if a.strictly_achiral_known() {
            s.push_str(" (strictly achiral)");
        }
        s
    }
}

fn truncation_field(t: &Option<(usize, Error)>) -> String {
    match t {
        None => "none".into(),
        Some((level, e)) => format!("N{level}: {e}"),
    }
}

/// Stage classes of an enumerated spec, e.g. `(Plus2, Minus2)^∞`.
fn class_labels(s: &SolenoidSpec) -> String {
    s.stages
        .map(|stage| {
            WLabel::ALL
                .iter()
                .find(|l| &l.representative() == stage.braid())
                .map_or("?", |l| l.name())
        })
        .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echo_quotes_words() {
        let args: Vec<String> = [
            "braid-achiral",
            "--strands",
            "3",
            "--word",
            "1 -2",
            "--json",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(echo(&args), "braid-achiral --strands 3 --word \"1 -2\"");
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("3, 5 7", "type").unwrap(), vec![3, 5, 7]);
        assert!(parse_list("", "type").unwrap().is_empty());
        assert!(parse_list("x", "type").unwrap_err().is_parse());
    }
}
