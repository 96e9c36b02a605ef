//! The `.sgp` text format for Cayley tables.
//!
//! ```text
//! sgp 1
//! n 2
//! labels 0 1
//! row 0 0
//! row 0 1
//! zero 0
//! identity 1
//! ```
//!
//! `#` starts a comment. `labels`, `zero` and `identity` are optional.
//! Extensions written by [`write_extension_sgp`] carry a legend in comments
//! that lets [`recover_extension`] rebuild the coordinate maps.

use crate::brandt::{brandt_extension, BrandtExtension};
use crate::error::{Error, Result};
use crate::semigroup::{default_labels, FiniteSemigroup};

const HEADER: &str = "sgp 1";
const LEGEND_LAMBDA: &str = "# brandt lambda ";
const LEGEND_BASE: &str = "# base ";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Canonical text for `s`: single spaces, every line newline-terminated.
pub fn write_sgp(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("n {}\n", s.order()));
    out.push_str(&format!("labels {}\n", s.labels().join(" ")));
    for a in 0..s.order() {
        let row: Vec<String> = s.row(a).iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("row {}\n", row.join(" ")));
    }
    if let Some(z) = s.zero() {
        out.push_str(&format!("zero {z}\n"));
    }
    if let Some(i) = s.identity() {
        out.push_str(&format!("identity {i}\n"));
    }
    out
}

fn parse_index(tok: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a non-negative integer")))?;
    if v >= n {
        return Err(parse_err(line, format!("index {v} out of range for order {n}")));
    }
    Ok(v)
}

pub fn parse_sgp(text: &str) -> Result<FiniteSemigroup> {
    let mut header_seen = false;
    let mut order: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut zero = None;
    let mut identity = None;
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let key = toks.next().expect("non-empty");
        let args: Vec<&str> = toks.collect();
        if !header_seen {
            if key != "sgp" {
                return Err(parse_err(line, "expected header `sgp 1`"));
            }
            if args != ["1"] {
                return Err(parse_err(line, format!("unsupported format version `{}`", args.join(" "))));
            }
            header_seen = true;
            continue;
        }
        let need_order = |line: usize| order.ok_or_else(|| parse_err(line, format!("`{key}` before `n`")));
        match key {
            "sgp" => return Err(parse_err(line, "duplicate header")),
            "n" => {
                if order.is_some() {
                    return Err(parse_err(line, "duplicate `n`"));
                }
                let [tok] = args[..] else {
                    return Err(parse_err(line, "`n` takes one value"));
                };
                let n: usize = tok.parse().map_err(|_| parse_err(line, format!("bad order `{tok}`")))?;
                if n == 0 {
                    return Err(parse_err(line, "order must be positive"));
                }
                order = Some(n);
            }
            "labels" => {
                let n = need_order(line)?;
                if labels.is_some() {
                    return Err(parse_err(line, "duplicate `labels`"));
                }
                if args.len() != n {
                    return Err(parse_err(line, format!("expected {n} labels, found {}", args.len())));
                }
                let mut seen = std::collections::HashSet::new();
                if let Some(dup) = args.iter().find(|l| !seen.insert(**l)) {
                    return Err(parse_err(line, format!("duplicate label `{dup}`")));
                }
                labels = Some(args.iter().map(|s| s.to_string()).collect());
            }
            "row" => {
                let n = need_order(line)?;
                if rows.len() == n {
                    return Err(parse_err(line, format!("more than {n} rows")));
                }
                if args.len() != n {
                    return Err(parse_err(line, format!("expected {n} entries in row, found {}", args.len())));
                }
                rows.push(args.iter().map(|t| parse_index(t, n, line)).collect::<Result<_>>()?);
            }
            "zero" | "identity" => {
                let n = need_order(line)?;
                let [tok] = args[..] else {
                    return Err(parse_err(line, format!("`{key}` takes one index")));
                };
                let slot = if key == "zero" { &mut zero } else { &mut identity };
                if slot.is_some() {
                    return Err(parse_err(line, format!("duplicate `{key}`")));
                }
                *slot = Some(parse_index(tok, n, line)?);
            }
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
    }
    if !header_seen {
        return Err(parse_err(last_line.max(1), "expected header `sgp 1`"));
    }
    let n = order.ok_or_else(|| parse_err(last_line, "missing `n`"))?;
    if rows.len() != n {
        return Err(parse_err(last_line, format!("expected {n} rows, found {}", rows.len())));
    }
    let labels = labels.unwrap_or_else(|| default_labels(n));
    FiniteSemigroup::new(rows, labels, zero, identity)
}

/// [`write_sgp`] of the carrier followed by the coordinate legend.
pub fn write_extension_sgp(ext: &BrandtExtension) -> String {
    let mut out = write_sgp(ext.carrier());
    out.push_str(&format!("{LEGEND_LAMBDA}{}\n", ext.lambda()));
    for l in write_sgp(ext.base()).lines() {
        out.push_str(LEGEND_BASE);
        out.push_str(l);
        out.push('\n');
    }
    out.push_str("# coord <index> <alpha> <s> <beta>\n");
    for x in 1..ext.carrier().order() {
        let c = ext.decode(x).expect("non-zero cell");
        out.push_str(&format!(
            "# coord {x} {} {} {}\n",
            c.alpha + 1,
            ext.base().label(c.s),
            c.beta + 1
        ));
    }
    out
}

/// An extension recovered from a file, with the map from file indices to
/// carrier indices.
#[derive(Debug, Clone)]
pub struct RecoveredExtension {
    pub file: FiniteSemigroup,
    pub extension: BrandtExtension,
    pub to_carrier: Vec<usize>,
}

/// Rebuilds the Brandt structure of a file.
///
/// With a legend the base and `λ` are read from it and the table must match.
/// Without one, a monoid with zero is read as its own `B⁰_1`.
pub fn recover_extension(text: &str) -> Result<RecoveredExtension> {
    let file = parse_sgp(text)?;
    let mut lambda = None;
    let mut base_text = String::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim_start();
        if let Some(rest) = line.strip_prefix(LEGEND_LAMBDA) {
            let v: usize = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(k + 1, format!("bad legend lambda `{}`", rest.trim())))?;
            lambda = Some(v);
        } else if let Some(rest) = line.strip_prefix(LEGEND_BASE) {
            base_text.push_str(rest);
            base_text.push('\n');
        }
    }
    match lambda {
        Some(l) => {
            let base = parse_sgp(&base_text)?;
            let extension = brandt_extension(&base, l)?;
            if extension.carrier().rows() != file.rows() {
                return Err(Error::Mismatch("table does not match its Brandt legend".into()));
            }
            let to_carrier = (0..file.order()).collect();
            Ok(RecoveredExtension {
                file,
                extension,
                to_carrier,
            })
        }
        None => {
            file.require_identity()?;
            let extension = brandt_extension(&file, 1)?;
            let to_carrier = (0..file.order()).map(|x| extension.encode_or_zero(0, x, 0)).collect();
            Ok(RecoveredExtension {
                file,
                extension,
                to_carrier,
            })
        }
    }
}
