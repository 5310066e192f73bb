//! JSON and line-oriented file formats.
//!
//! Every count is written as a decimal string, so values beyond 2^63 survive
//! any JSON reader.

use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;

use scatfact_core::scatfact::CountTable;
use scatfact_core::{BigUint, Word};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("count {index} is not a decimal integer: {value:?}")]
    BadCount { index: usize, value: String },
}

/// `{"word": "...", "counts": ["1", "3", ...]}`, with `counts[k]` the number
/// of distinct length-`k` scattered factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTableJson {
    pub word: String,
    pub counts: Vec<String>,
}

impl CountTableJson {
    pub fn new(word: &Word, table: &CountTable) -> Self {
        CountTableJson {
            word: word.to_string(),
            counts: decimal_strings(table.counts()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("count table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// The counts as integers.
    pub fn values(&self) -> Result<Vec<BigUint>, FormatError> {
        self.counts
            .iter()
            .enumerate()
            .map(|(index, value)| {
                BigUint::from_str(value).map_err(|_| FormatError::BadCount {
                    index,
                    value: value.clone(),
                })
            })
            .collect()
    }
}

pub fn decimal_strings(values: &[BigUint]) -> Vec<String> {
    values.iter().map(BigUint::to_string).collect()
}

/// One word per line. A trailing `\r` is dropped, so CRLF files work; an
/// empty line stands for the empty word.
pub fn read_word_lines(path: &Path) -> Result<Vec<String>, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(text
        .lines()
        .map(|l| l.strip_suffix('\r').unwrap_or(l).to_string())
        .collect())
}
