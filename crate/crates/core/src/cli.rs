//! `markoff` command-line front end.
//!
//! Exit codes: 0 success, 1 a collision was found by `check`, 2 usage or
//! domain error (including internal invariant failures).

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::conjecture::{cross_check, injectivity_scan};
use crate::error::Error;
use crate::markoff::{markoff_tree, triple_of_word, word_of_triple, MarkoffTriple};
use crate::words::{
    christoffel_tree, christoffel_word, is_christoffel, render_path, standard_factorization,
    RenderFormat, Slope, Word,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDING: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "markoff", version, about = "Christoffel words and Markoff triples in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Christoffel word with p x's and q y's
    Word {
        p: u64,
        q: u64,
        /// Also draw the lattice path
        #[arg(long, value_enum)]
        render: Option<RenderArg>,
        /// Write the drawing here instead of stdout
        #[arg(long, requires = "render")]
        out: Option<PathBuf>,
    },
    /// Print the standard factorization `w1 | w2`
    Factor { word: String },
    /// Markoff triple of a proper Christoffel word, given as a word or as `p q`
    Triple {
        #[arg(num_args = 1..=2, required = true, value_name = "WORD | P Q")]
        input: Vec<String>,
    },
    /// Christoffel word realizing a proper Markoff triple
    Unword { a: String, b: String, c: String },
    /// Enumerate the word tree (--depth) or the triple tree (--bound)
    Tree(TreeArgs),
    /// Bounded injectivity scan plus cross-check, as a JSON report
    Check {
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["depth", "bound"])))]
struct TreeArgs {
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    bound: Option<String>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderArg {
    Ascii,
    Svg,
}

impl From<RenderArg> for RenderFormat {
    fn from(r: RenderArg) -> Self {
        match r {
            RenderArg::Ascii => RenderFormat::Ascii,
            RenderArg::Svg => RenderFormat::Svg,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let msg = match f {
                Failure::Domain(e) => e.to_string(),
                Failure::Usage(m) => m,
                Failure::Io(e) => format!("i/o error: {e}"),
            };
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Word { p, q, render, out: path } => cmd_word(p, q, render, path, out),
        Command::Factor { word } => cmd_factor(&word, out),
        Command::Triple { input } => cmd_triple(&input, out),
        Command::Unword { a, b, c } => cmd_unword(&a, &b, &c, out),
        Command::Tree(args) => cmd_tree(args, out),
        Command::Check { depth } => cmd_check(depth, out, err),
    }
}

/// Parses a word and insists it is a Christoffel word before any math.
fn christoffel_arg(s: &str) -> Result<Word, Failure> {
    let word: Word = s.parse()?;
    if is_christoffel(&word).is_none() {
        return Err(Error::NotChristoffel(word.to_string()).into());
    }
    Ok(word)
}

fn positive_arg(s: &str) -> Result<BigUint, Failure> {
    let n: BigUint = s
        .parse()
        .map_err(|_| Failure::Usage(format!("{s:?} is not a non-negative integer")))?;
    if n.is_zero() {
        return Err(Failure::Usage(format!("{s} is not a positive integer")));
    }
    Ok(n)
}

fn cmd_word(
    p: u64,
    q: u64,
    render: Option<RenderArg>,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    let word = christoffel_word(Slope::new(p, q)?);
    writeln!(out, "{word}")?;
    if let Some(fmt) = render {
        let drawing = render_path(&word, fmt.into());
        match path {
            Some(path) => std::fs::write(path, drawing)?,
            None => write!(out, "{drawing}")?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_factor(word: &str, out: &mut dyn Write) -> CmdResult {
    let fw = standard_factorization(&christoffel_arg(word)?)?;
    writeln!(out, "{fw}")?;
    Ok(EXIT_OK)
}

fn cmd_triple(input: &[String], out: &mut dyn Write) -> CmdResult {
    let word = match input {
        [w] => christoffel_arg(w)?,
        [p, q] => {
            let parse = |s: &String| {
                s.parse::<u64>()
                    .map_err(|_| Failure::Usage(format!("{s:?} is not a non-negative integer")))
            };
            christoffel_word(Slope::new(parse(p)?, parse(q)?)?)
        }
        _ => return Err(Failure::Usage("expected a word or two integers p q".into())),
    };
    let prov = triple_of_word(&standard_factorization(&word)?)?;
    writeln!(out, "{}", prov.triple)?;
    writeln!(out, "w1 = {} -> {}", prov.word.w1(), prov.from_w1)?;
    writeln!(out, "w2 = {} -> {}", prov.word.w2(), prov.from_w2)?;
    writeln!(out, "w = {} -> {}", word, prov.from_word)?;
    Ok(EXIT_OK)
}

fn cmd_unword(a: &str, b: &str, c: &str, out: &mut dyn Write) -> CmdResult {
    let t = MarkoffTriple::new(positive_arg(a)?, positive_arg(b)?, positive_arg(c)?)?;
    let fw = word_of_triple(&t)?;
    writeln!(out, "{} = {}", fw.word(), fw)?;
    Ok(EXIT_OK)
}

fn triple_json(t: &MarkoffTriple) -> Value {
    serde_json::to_value(t).expect("triple serializes")
}

fn cmd_tree(args: TreeArgs, out: &mut dyn Write) -> CmdResult {
    let mut rows: Vec<[String; 6]> = Vec::new();
    let mut entries: Vec<Value> = Vec::new();

    if let Some(depth) = args.depth {
        for fw in christoffel_tree(depth) {
            let prov = triple_of_word(&fw)?;
            let [a, b, c] = prov.triple.as_array().map(|n| n.to_string());
            let word = fw.word().to_string();
            entries.push(json!({
                "w1": fw.w1().to_string(),
                "w2": fw.w2().to_string(),
                "word": word,
                "triple": triple_json(&prov.triple),
            }));
            rows.push([a, b, c, word, fw.w1().to_string(), fw.w2().to_string()]);
        }
    } else if let Some(bound) = args.bound.as_deref() {
        for t in markoff_tree(&positive_arg(bound)?) {
            let [a, b, c] = t.as_array().map(|n| n.to_string());
            let (word, w1, w2) = if t.is_proper() {
                let fw = word_of_triple(&t)?;
                (fw.word().to_string(), fw.w1().to_string(), fw.w2().to_string())
            } else {
                Default::default()
            };
            entries.push(triple_json(&t));
            rows.push([a, b, c, word, w1, w2]);
        }
    }

    match args.format {
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&entries).expect("json"))?,
        TableFormat::Csv => {
            writeln!(out, "a,b,c,word,w1,w2")?;
            for row in rows {
                writeln!(out, "{}", row.join(","))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check(depth: usize, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let report = injectivity_scan(depth)?;
    let consistent = cross_check(&report.bound)?;
    writeln!(out, "{}", report.to_json())?;
    writeln!(
        err,
        "scanned {} words, {} distinct numbers, {} collisions; cross-check up to the largest number: {}",
        report.words_checked,
        report.distinct_numbers(),
        report.collisions.len(),
        if consistent { "ok" } else { "MISMATCH" }
    )?;
    if !report.is_injective() {
        return Ok(EXIT_FINDING);
    }
    if !consistent {
        return Err(Error::Invariant(format!(
            "triple maxima and Christoffel numbers disagree below {}",
            report.bound
        ))
        .into());
    }
    Ok(EXIT_OK)
}
