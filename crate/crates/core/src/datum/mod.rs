//! Torus data: nonzero characters paired with torus points, and the
//! matrices of character values they determine.

mod format;
mod presets;

use std::fmt;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::scalar::{Field, Scalar};

pub use format::{emit_datum, parse_datum, DatumFileError};
pub use presets::{preset_cartan, preset_doubled, preset_reductive, CartanType, PresetError};

/// Letters are stored as `u8`, so at most this many characters per datum.
pub const MAX_LETTERS: usize = 255;

/// An element of the character lattice `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character(pub Vec<i64>);

impl Character {
    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn neg(&self) -> Self {
        Character(self.0.iter().map(|e| -e).collect())
    }

    /// Value of the character at a torus point: `∏_k point[k]^exponent[k]`.
    pub fn eval(&self, point: &TorusPoint) -> Scalar {
        let field = point.0[0].field();
        self.0.iter().zip(&point.0).fold(Scalar::one(field), |acc, (&e, x)| {
            if e == 0 {
                acc
            } else {
                &acc * &x.pow(e).expect("torus coordinates are invertible")
            }
        })
    }
}

/// A point of the torus `(K^*)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint(pub Vec<Scalar>);

impl TorusPoint {
    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn identity(field: Field, n: usize) -> Self {
        TorusPoint(vec![Scalar::one(field); n])
    }
}

/// One violated datum invariant. Indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumIssue {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("datum has no letters")]
    Empty,
    #[error("datum has {0} letters; at most {MAX_LETTERS} are supported")]
    TooManyLetters(usize),
    #[error("{count} alphas but {gammas} gammas")]
    LengthMismatch { count: usize, gammas: usize },
    #[error("alpha[{index}] has {found} entries, expected rank {expected}")]
    CharacterLength { index: usize, expected: usize, found: usize },
    #[error("gamma[{index}] has {found} coordinates, expected rank {expected}")]
    PointLength { index: usize, expected: usize, found: usize },
    #[error("alpha[{index}] is zero")]
    ZeroCharacter { index: usize },
    #[error("gamma[{index}][{coord}] is zero")]
    ZeroCoordinate { index: usize, coord: usize },
    #[error("gamma[{index}][{coord}] lies in {found}, expected {expected}")]
    WrongField { index: usize, coord: usize, expected: Field, found: Field },
}

/// Invariant check failure: every issue found, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid datum: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct InvalidDatum(pub Vec<DatumIssue>);

/// Unvalidated datum fields, as read from a file or assembled by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDatum {
    pub rank: usize,
    pub field: Field,
    pub alphas: Vec<Character>,
    pub gammas: Vec<TorusPoint>,
}

impl RawDatum {
    /// Checks every invariant and reports all violations.
    pub fn validate(&self) -> Result<(), InvalidDatum> {
        let mut issues = Vec::new();
        if self.rank == 0 {
            issues.push(DatumIssue::ZeroRank);
        }
        if self.alphas.is_empty() {
            issues.push(DatumIssue::Empty);
        }
        if self.alphas.len() > MAX_LETTERS {
            issues.push(DatumIssue::TooManyLetters(self.alphas.len()));
        }
        if self.alphas.len() != self.gammas.len() {
            issues.push(DatumIssue::LengthMismatch { count: self.alphas.len(), gammas: self.gammas.len() });
        }
        for (i, a) in self.alphas.iter().enumerate() {
            if a.0.len() != self.rank {
                issues.push(DatumIssue::CharacterLength { index: i + 1, expected: self.rank, found: a.0.len() });
            } else if a.is_zero() {
                issues.push(DatumIssue::ZeroCharacter { index: i + 1 });
            }
        }
        for (i, g) in self.gammas.iter().enumerate() {
            if g.0.len() != self.rank {
                issues.push(DatumIssue::PointLength { index: i + 1, expected: self.rank, found: g.0.len() });
            }
            for (k, x) in g.0.iter().enumerate() {
                if x.field() != self.field {
                    issues.push(DatumIssue::WrongField {
                        index: i + 1,
                        coord: k + 1,
                        expected: self.field,
                        found: x.field(),
                    });
                } else if x.is_zero() {
                    issues.push(DatumIssue::ZeroCoordinate { index: i + 1, coord: k + 1 });
                }
            }
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(InvalidDatum(issues))
        }
    }
}

/// `q[i][j] = α_i(γ_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix(Vec<Vec<Scalar>>);

/// `b[i][j] = α_j(γ_i)`, the scalar of the braiding `E_i ⊗ E_j ↦ b[i][j] E_j ⊗ E_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingMatrix(Vec<Vec<Scalar>>);

macro_rules! square_matrix {
    ($ty:ident) => {
        impl $ty {
            pub fn new(rows: Vec<Vec<Scalar>>) -> Self {
                assert!(rows.iter().all(|r| r.len() == rows.len()), "matrix must be square");
                $ty(rows)
            }

            pub fn size(&self) -> usize {
                self.0.len()
            }

            #[inline]
            pub fn get(&self, i: usize, j: usize) -> &Scalar {
                &self.0[i][j]
            }

            pub fn rows(&self) -> &[Vec<Scalar>] {
                &self.0
            }

            pub fn field(&self) -> Field {
                self.0[0][0].field()
            }
        }
    };
}

square_matrix!(QMatrix);
square_matrix!(BraidingMatrix);

fn transpose(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    (0..rows.len()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

impl QMatrix {
    pub fn to_braiding(&self) -> BraidingMatrix {
        BraidingMatrix(transpose(&self.0))
    }
}

impl BraidingMatrix {
    pub fn transposed(&self) -> BraidingMatrix {
        BraidingMatrix(transpose(&self.0))
    }

    /// Image of every entry under `t ↦ ζ_N`.
    pub fn specialize(&self, order: u32) -> Result<BraidingMatrix, crate::scalar::ScalarError> {
        let rows = self
            .0
            .iter()
            .map(|r| r.iter().map(|x| x.specialize(order)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidingMatrix(rows))
    }
}

/// A validated datum with its character-value matrices precomputed.
#[derive(Clone)]
pub struct Datum {
    raw: RawDatum,
    q: QMatrix,
    braiding: BraidingMatrix,
}

impl PartialEq for Datum {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw
    }
}

impl Eq for Datum {}

impl fmt::Debug for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Datum")
            .field("rank", &self.raw.rank)
            .field("field", &self.raw.field)
            .field("alphas", &self.raw.alphas)
            .field("gammas", &self.raw.gammas)
            .finish()
    }
}

impl TryFrom<RawDatum> for Datum {
    type Error = InvalidDatum;

    fn try_from(raw: RawDatum) -> Result<Self, InvalidDatum> {
        raw.validate()?;
        let q: Vec<Vec<Scalar>> =
            raw.alphas.iter().map(|a| raw.gammas.iter().map(|g| a.eval(g)).collect()).collect();
        let q = QMatrix(q);
        let braiding = q.to_braiding();
        Ok(Datum { raw, q, braiding })
    }
}

impl Datum {
    pub fn new(
        rank: usize,
        field: Field,
        alphas: Vec<Character>,
        gammas: Vec<TorusPoint>,
    ) -> Result<Self, InvalidDatum> {
        RawDatum { rank, field, alphas, gammas }.try_into()
    }

    /// The datum with `α_i = e_i` and `γ_j = (q[1][j], …, q[m][j])`, whose
    /// q-matrix is exactly `q`. Any matrix of nonzero entries arises this way.
    pub fn from_q_matrix(q: &[Vec<Scalar>]) -> Result<Self, InvalidDatum> {
        let m = q.len();
        let field = q.first().and_then(|r| r.first()).map_or(Field::Rational, Scalar::field);
        let alphas = (0..m)
            .map(|i| Character((0..m).map(|k| i64::from(k == i)).collect()))
            .collect();
        let gammas = (0..m).map(|j| TorusPoint(q.iter().map(|r| r[j].clone()).collect())).collect();
        Self::new(m, field, alphas, gammas)
    }

    pub fn rank(&self) -> usize {
        self.raw.rank
    }

    pub fn letters(&self) -> usize {
        self.raw.alphas.len()
    }

    pub fn field(&self) -> Field {
        self.raw.field
    }

    pub fn alphas(&self) -> &[Character] {
        &self.raw.alphas
    }

    pub fn gammas(&self) -> &[TorusPoint] {
        &self.raw.gammas
    }

    pub fn raw(&self) -> &RawDatum {
        &self.raw
    }

    pub fn q_matrix(&self) -> &QMatrix {
        &self.q
    }

    pub fn braiding_matrix(&self) -> &BraidingMatrix {
        &self.braiding
    }

    /// The same characters with every point coordinate sent through `t ↦ ζ_N`.
    pub fn specialize(&self, order: u32) -> Result<Datum, crate::scalar::ScalarError> {
        let gammas = self
            .raw
            .gammas
            .iter()
            .map(|g| g.0.iter().map(|x| x.specialize(order)).collect::<Result<Vec<_>, _>>().map(TorusPoint))
            .collect::<Result<Vec<_>, _>>()?;
        let raw = RawDatum { rank: self.raw.rank, field: Field::Cyclotomic(order), alphas: self.raw.alphas.clone(), gammas };
        Ok(Datum::try_from(raw).expect("specialization preserves validity"))
    }

    /// Hex SHA-256 of the canonical file rendering; covers the field tag,
    /// the characters and the points in letter order.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(emit_datum(self).as_bytes()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: i64) -> Scalar {
        Scalar::t_pow(k)
    }

    #[test]
    fn zero_character_is_reported_with_index() {
        let raw = RawDatum {
            rank: 2,
            field: Field::RationalFunction,
            alphas: vec![Character(vec![0, 0]), Character(vec![1, 0])],
            gammas: vec![TorusPoint(vec![t(1), t(1)]); 2],
        };
        let err = raw.validate().unwrap_err();
        assert_eq!(err.0, vec![DatumIssue::ZeroCharacter { index: 1 }]);
        assert_eq!(err.0[0].to_string(), "alpha[1] is zero");
    }

    #[test]
    fn length_mismatch() {
        let raw = RawDatum {
            rank: 1,
            field: Field::RationalFunction,
            alphas: vec![Character(vec![1]), Character(vec![2])],
            gammas: vec![TorusPoint(vec![t(1)])],
        };
        assert!(raw.validate().unwrap_err().0.contains(&DatumIssue::LengthMismatch { count: 2, gammas: 1 }));
    }

    #[test]
    fn zero_coordinate_and_wrong_field() {
        let raw = RawDatum {
            rank: 2,
            field: Field::RationalFunction,
            alphas: vec![Character(vec![1, 1])],
            gammas: vec![TorusPoint(vec![Scalar::zero(Field::RationalFunction), Scalar::one(Field::Rational)])],
        };
        let issues = raw.validate().unwrap_err().0;
        assert_eq!(issues.len(), 2);
        assert_eq!(issues[0], DatumIssue::ZeroCoordinate { index: 1, coord: 1 });
        assert!(matches!(issues[1], DatumIssue::WrongField { index: 1, coord: 2, .. }));
    }

    #[test]
    fn character_evaluation() {
        let d = Datum::new(1, Field::RationalFunction, vec![Character(vec![2])], vec![TorusPoint(vec![t(1)])]).unwrap();
        assert_eq!(d.q_matrix().get(0, 0), &t(2));

        let d = Datum::new(
            2,
            Field::RationalFunction,
            vec![Character(vec![1, 0]), Character(vec![0, 1])],
            vec![TorusPoint(vec![t(2), t(-1)]), TorusPoint(vec![t(-1), t(2)])],
        )
        .unwrap();
        assert_eq!(d.q_matrix().rows(), &[vec![t(2), t(-1)], vec![t(-1), t(2)]]);
    }

    #[test]
    fn identity_points_give_all_ones() {
        let d = Datum::new(
            2,
            Field::Rational,
            vec![Character(vec![1, -1]), Character(vec![3, 2]), Character(vec![0, 5])],
            vec![TorusPoint::identity(Field::Rational, 2); 3],
        )
        .unwrap();
        assert!(d.q_matrix().rows().iter().flatten().all(Scalar::is_one));
    }

    #[test]
    fn braiding_is_transpose() {
        let q = vec![vec![t(1), t(2)], vec![t(3), t(4)]];
        let d = Datum::from_q_matrix(&q).unwrap();
        assert_eq!(d.q_matrix().rows(), q.as_slice());
        assert_eq!(d.braiding_matrix().get(0, 1), &t(3));
        assert_eq!(d.braiding_matrix().get(1, 0), &t(2));
    }

    #[test]
    fn hash_tracks_content() {
        let a = Datum::from_q_matrix(&[vec![t(2)]]).unwrap();
        let b = Datum::from_q_matrix(&[vec![t(3)]]).unwrap();
        assert_eq!(a.content_hash(), a.clone().content_hash());
        assert_ne!(a.content_hash(), b.content_hash());
    }
}
