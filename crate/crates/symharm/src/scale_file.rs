//! Plain-text scale files: an optional `name:` line followed by twelve ratios.
//!
//! ```text
//! name: Kepler
//! 1/1 16/15 9/8 6/5 5/4 4/3
//! 45/32 3/2 8/5 5/3 16/9 15/8
//! ```
//!
//! Ratios may be written `p/q` or `p:q` and separated by whitespace or commas.
//! A first line that does not start with a digit is taken as the name.

use std::fmt::Write as _;

use symharm_core::{Error as CoreError, Rational, Scale, NOTES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScaleFileError {
    #[error("expected {NOTES} ratios, found {0}")]
    Arity(usize),
    #[error("ratio {index} ({token:?}): {reason}")]
    Malformed {
        index: usize,
        token: String,
        reason: String,
    },
    #[error("ratio {index}: {reason}")]
    Invalid { index: usize, reason: String },
}

const DEFAULT_NAME: &str = "custom";

pub fn parse_scale(text: &str) -> Result<Scale, ScaleFileError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .peekable();
    let name = match lines.peek() {
        Some(first) if !first.starts_with(|c: char| c.is_ascii_digit()) => {
            let line = lines.next().unwrap_or_default();
            let name = line.strip_prefix("name:").unwrap_or(line).trim();
            if name.is_empty() {
                DEFAULT_NAME
            } else {
                name
            }
        }
        _ => DEFAULT_NAME,
    };
    let tokens: Vec<&str> = lines
        .flat_map(|l| l.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.len() != NOTES {
        return Err(ScaleFileError::Arity(tokens.len()));
    }
    let ratios = tokens
        .iter()
        .enumerate()
        .map(|(index, token)| {
            token
                .parse::<Rational>()
                .map_err(|e| ScaleFileError::Malformed {
                    index,
                    token: token.to_string(),
                    reason: e.to_string(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Scale::new(name, ratios).map_err(|e| match e {
        CoreError::InvalidScale { index, reason } => ScaleFileError::Invalid { index, reason },
        other => ScaleFileError::Invalid {
            index: 0,
            reason: other.to_string(),
        },
    })
}

pub fn serialize_scale(scale: &Scale) -> String {
    let mut out = format!("name: {}\n", scale.name());
    let ratios: Vec<String> = scale.ratios().iter().map(ToString::to_string).collect();
    for half in ratios.chunks(NOTES / 2) {
        let _ = writeln!(out, "{}", half.join(" "));
    }
    out
}
