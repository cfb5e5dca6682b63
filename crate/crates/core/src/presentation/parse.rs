//! Text format:
//!
//! ```text
//! # comment
//! gens: m a b
//! rels:
//! m a m^-1 b^-2 a^-1
//! ```
//!
//! A relator may also follow `rels:` on the same line.

use super::word::FreeWord;
use super::Presentation;
use crate::{Error, Result};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits a line into `(column, token)` pairs; columns are 1-based.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_word(toks: &[(usize, &str)], line: usize, generators: &[String]) -> Result<FreeWord> {
    let mut raw = Vec::with_capacity(toks.len());
    for &(col, tok) in toks {
        let (name, exp) = match tok.split_once('^') {
            Some((name, exp)) => {
                let e: i64 = exp
                    .parse()
                    .map_err(|_| syntax(line, col + name.len() + 1, format!("invalid exponent `{exp}`")))?;
                (name, e)
            }
            None => (tok, 1),
        };
        if !is_identifier(name) {
            return Err(syntax(line, col, format!("invalid generator token `{tok}`")));
        }
        let g = generators
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::UndeclaredGenerator {
                name: name.to_string(),
                line,
                column: col,
            })?;
        raw.push((g, exp));
    }
    Ok(FreeWord::reduce(&raw))
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut generators: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    let mut in_rels = false;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let offset = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("gens:") {
            if generators.is_some() {
                return Err(syntax(line_no, offset + 1, "duplicate `gens:` line"));
            }
            let base = offset + "gens:".len();
            let mut names = Vec::new();
            for (col, tok) in tokens(rest) {
                if !is_identifier(tok) {
                    return Err(syntax(line_no, base + col, format!("invalid generator name `{tok}`")));
                }
                if names.iter().any(|n| n == tok) {
                    return Err(syntax(line_no, base + col, format!("duplicate generator `{tok}`")));
                }
                names.push(tok.to_string());
            }
            if names.is_empty() {
                return Err(syntax(line_no, base + 1, "expected at least one generator"));
            }
            generators = Some(names);
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("rels:") {
            let Some(gens) = generators.as_ref() else {
                return Err(syntax(line_no, offset + 1, "`rels:` before `gens:`"));
            };
            if in_rels {
                return Err(syntax(line_no, offset + 1, "duplicate `rels:` line"));
            }
            in_rels = true;
            let base = offset + "rels:".len();
            let toks: Vec<_> = tokens(rest).into_iter().map(|(c, t)| (base + c, t)).collect();
            if !toks.is_empty() {
                relators.push(parse_word(&toks, line_no, gens)?);
            }
            continue;
        }
        if !in_rels {
            return Err(syntax(line_no, offset + 1, "expected `gens:` or `rels:`"));
        }
        let gens = generators.as_ref().expect("rels implies gens");
        relators.push(parse_word(&tokens(line), line_no, gens)?);
    }
    let Some(generators) = generators else {
        return Err(syntax(1, 1, "missing `gens:` line"));
    };
    Presentation::new(generators, relators)
}
