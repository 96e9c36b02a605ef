//! The `brandt` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success or PASS, 1 FAIL (or no isomorphism), 2 usage or
//! input errors, 3 resource limits (search budget, size bounds).

use std::fs;
use std::path::{Path, PathBuf};

use brandt::brandt::{brandt_extension, matrix_units};
use brandt::fixtures::{run_fixture, FIXTURES};
use brandt::format::{parse_sgp, recover_extension, write_extension_sgp, write_sgp, RecoveredExtension};
use brandt::hom::{check_homomorphism, enumerate_homs_with, SearchConfig};
use brandt::iso::iso_search;
use brandt::props::classify;
use brandt::triple::{classify_hom, Classification, MorphismTriple};
use brandt::{Error, FiniteSemigroup};
use clap::{Parser, Subcommand};

/// Environment variable overriding the search node budget.
pub const BUDGET_VAR: &str = "BRANDT_SEARCH_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "brandt", version, about = "Brandt extensions of finite monoids with zero")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural properties of a semigroup file
    Props {
        file: PathBuf,
        /// λ values for the B*_λ flag (repeatable; default 2)
        #[arg(long = "lambda")]
        lambda: Vec<usize>,
    },
    /// Write the matrix-unit semigroup B_K
    Units {
        #[arg(long)]
        lambda: usize,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Write the Brandt extension of FILE with a coordinate legend
    Extend {
        file: PathBuf,
        #[arg(long)]
        lambda: usize,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Enumerate homomorphisms SRC -> DST
    Homs {
        src: PathBuf,
        dst: PathBuf,
        /// Skip constant maps
        #[arg(long)]
        nontrivial: bool,
        /// Annotate each map with its triple
        #[arg(long)]
        classify: bool,
    },
    /// Search for an isomorphism A -> B
    Iso { a: PathBuf, b: PathBuf },
    /// Run a built-in verification fixture
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(FIXTURES))]
        fixture: String,
    },
}

/// Search limits from the environment, falling back to the defaults.
pub fn config_from_env() -> Result<SearchConfig, String> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|node_budget| SearchConfig { node_budget })
            .map_err(|_| format!("{BUDGET_VAR} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(SearchConfig::default()),
    }
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn from_error(e: Error) -> Outcome {
    let code = match e {
        Error::BudgetExceeded { .. } | Error::TooLarge { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    };
    Outcome::error(code, format!("error: {e}\n"))
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I, config: &SearchConfig) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::error(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Props { file, lambda } => props(&file, &lambda),
        Command::Units { lambda, output } => units(lambda, &output),
        Command::Extend { file, lambda, output } => extend(&file, lambda, &output),
        Command::Homs {
            src,
            dst,
            nontrivial,
            classify,
        } => homs(&src, &dst, nontrivial, classify, config),
        Command::Iso { a, b } => iso(&a, &b),
        Command::Verify { fixture } => verify(&fixture, config),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = Result<Outcome, Outcome>;

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path)
        .map_err(|e| Outcome::error(EXIT_USAGE, format!("error: cannot read {}: {e}\n", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Outcome> {
    fs::write(path, text)
        .map_err(|e| Outcome::error(EXIT_USAGE, format!("error: cannot write {}: {e}\n", path.display())))
}

fn load(path: &Path) -> Result<FiniteSemigroup, Outcome> {
    parse_sgp(&read(path)?).map_err(|e| with_path(path, e))
}

fn with_path(path: &Path, e: Error) -> Outcome {
    let code = from_error(e.clone()).code;
    Outcome::error(code, format!("error: {}: {e}\n", path.display()))
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn props(path: &Path, lambdas: &[usize]) -> CmdResult {
    let s = load(path)?;
    let lambdas = if lambdas.is_empty() { vec![2] } else { lambdas.to_vec() };
    if lambdas.contains(&0) {
        return Err(Outcome::error(EXIT_USAGE, "error: --lambda must be positive\n".into()));
    }
    let r = classify(&s, &lambdas);
    let mut rows: Vec<(String, String)> = vec![
        ("order".into(), r.order.to_string()),
        ("monoid_with_zero".into(), yes_no(r.is_monoid_with_zero)),
        ("regular".into(), yes_no(r.is_regular)),
        ("inverse".into(), yes_no(r.is_inverse)),
        ("clifford".into(), yes_no(r.is_clifford)),
        ("idempotents_central".into(), yes_no(r.idempotents_central)),
        ("primitive_inverse".into(), yes_no(r.is_primitive_inverse)),
        (
            "congruence_free".into(),
            r.is_congruence_free.map(yes_no).unwrap_or_else(|| "unknown (too large)".into()),
        ),
        ("b_star".into(), yes_no(r.has_b_star)),
    ];
    for (l, v) in &r.has_b_star_lambda {
        rows.push((format!("b_star_lambda({l})"), v.map(yes_no).unwrap_or_else(|| "n/a (no zero)".into())));
    }
    rows.push(("in_class_b".into(), yes_no(r.in_class_b)));
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{:<w$}: {v}\n", k, w = width));
    }
    Ok(Outcome::ok(out))
}

fn positive(lambda: usize) -> Result<(), Outcome> {
    if lambda == 0 {
        Err(Outcome::error(EXIT_USAGE, "error: --lambda must be positive\n".into()))
    } else {
        Ok(())
    }
}

fn units(lambda: usize, output: &Path) -> CmdResult {
    positive(lambda)?;
    let b = matrix_units(lambda);
    write(output, &write_sgp(&b))?;
    Ok(Outcome::ok(format!("wrote B_{lambda} ({} elements) to {}\n", b.order(), output.display())))
}

fn extend(path: &Path, lambda: usize, output: &Path) -> CmdResult {
    positive(lambda)?;
    let s = load(path)?;
    let ext = brandt_extension(&s, lambda).map_err(|e| with_path(path, e))?;
    write(output, &write_extension_sgp(&ext))?;
    Ok(Outcome::ok(format!(
        "wrote extension with lambda={lambda} ({} elements) to {}\n",
        ext.carrier().order(),
        output.display()
    )))
}

fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn render_triple(t: &MorphismTriple) -> String {
    format!("h={} e={} u={} phi={}", t.h.tuple(), t.e, list(&t.u), list(&t.phi))
}

fn recover(path: &Path) -> Result<RecoveredExtension, Outcome> {
    recover_extension(&read(path)?).map_err(|e| with_path(path, e))
}

fn homs(src: &Path, dst: &Path, nontrivial: bool, annotate: bool, config: &SearchConfig) -> CmdResult {
    let s = load(src)?;
    let t = load(dst)?;
    let found = enumerate_homs_with(&s, &t, nontrivial, config).map_err(from_error)?;
    let coords = if annotate {
        Some((recover(src)?, recover(dst)?))
    } else {
        None
    };
    let mut out = String::new();
    for sigma in &found {
        out.push_str(&sigma.tuple());
        if let Some((a, b)) = &coords {
            out.push_str("  ");
            if sigma.is_trivial() {
                out.push_str("TRIVIAL");
            } else {
                // carry the map over to the extension carriers
                let mut m = vec![0; a.extension.carrier().order()];
                for x in 0..s.order() {
                    m[a.to_carrier[x]] = b.to_carrier[sigma.apply(x)];
                }
                let lifted = check_homomorphism(&m, a.extension.carrier(), b.extension.carrier())
                    .map_err(from_error)?;
                match classify_hom(&lifted, &a.extension, &b.extension).map_err(from_error)? {
                    Classification::Triple(tr) => out.push_str(&render_triple(&tr)),
                    Classification::NotClassifiable(why) => out.push_str(&format!("NOT-CLASSIFIABLE({why})")),
                }
            }
        }
        out.push('\n');
    }
    Ok(Outcome::ok(out))
}

fn iso(a: &Path, b: &Path) -> CmdResult {
    let sa = load(a)?;
    let sb = load(b)?;
    Ok(match iso_search(&sa, &sb) {
        Some(w) => Outcome::ok(format!("{}\n", list(&w).replace('[', "(").replace(']', ")"))),
        None => Outcome {
            code: EXIT_FAIL,
            stdout: "NOT-ISOMORPHIC\n".into(),
            stderr: String::new(),
        },
    })
}

fn verify(name: &str, config: &SearchConfig) -> CmdResult {
    let report = run_fixture(name, config)
        .expect("clap restricts fixture names")
        .map_err(from_error)?;
    Ok(Outcome {
        code: if report.passed { EXIT_OK } else { EXIT_FAIL },
        stdout: report.render(),
        stderr: String::new(),
    })
}
