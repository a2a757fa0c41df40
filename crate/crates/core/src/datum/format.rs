//! Datum file format: a JSON object
//!
//! ```json
//! {
//!   "rank": 2,
//!   "field": "rational_function",
//!   "alphas": [[1, 0], [0, 1]],
//!   "gammas": [["t^2", "t^-1"], ["t^-1", "t^2"]]
//! }
//! ```
//!
//! `field` is `rational`, `rational_function` or `cyclotomic(N)`. Point
//! coordinates are strings in the scalar literal grammar; in a cyclotomic
//! file `t` stands for `ζ_N`. Unknown keys are rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Character, Datum, InvalidDatum, RawDatum, TorusPoint};
use crate::scalar::{Field, LiteralError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumFileError {
    #[error("malformed datum file: {0}")]
    Syntax(String),
    #[error("unknown field tag: {0}")]
    Field(String),
    #[error("gamma[{index}][{coord}]: {source}")]
    Literal { index: usize, coord: usize, source: LiteralError },
    #[error(transparent)]
    Invalid(#[from] InvalidDatum),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumFile {
    rank: usize,
    field: String,
    alphas: Vec<Vec<i64>>,
    gammas: Vec<Vec<String>>,
}

pub fn parse_datum(text: &str) -> Result<Datum, DatumFileError> {
    let file: DatumFile = serde_json::from_str(text).map_err(|e| DatumFileError::Syntax(e.to_string()))?;
    let field: Field = file.field.parse().map_err(DatumFileError::Field)?;
    let gammas = file
        .gammas
        .iter()
        .enumerate()
        .map(|(i, g)| {
            g.iter()
                .enumerate()
                .map(|(k, lit)| {
                    Scalar::parse_in(field, lit).map_err(|source| DatumFileError::Literal {
                        index: i + 1,
                        coord: k + 1,
                        source,
                    })
                })
                .collect::<Result<Vec<_>, _>>()
                .map(TorusPoint)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let raw = RawDatum {
        rank: file.rank,
        field,
        alphas: file.alphas.into_iter().map(Character).collect(),
        gammas,
    };
    Ok(Datum::try_from(raw)?)
}

/// Canonical rendering; `parse_datum(&emit_datum(d)) == d`.
pub fn emit_datum(d: &Datum) -> String {
    let file = DatumFile {
        rank: d.rank(),
        field: d.field().to_string(),
        alphas: d.alphas().iter().map(|a| a.0.clone()).collect(),
        gammas: d.gammas().iter().map(|g| g.0.iter().map(Scalar::to_literal).collect()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("datum serializes");
    s.push('\n');
    s
}
