//! Standard data: quantum Borel parts of Cartan type, reductive
//! degenerations with trivial points, and the doubled `{α_i, -α_i}` family.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Character, Datum, InvalidDatum, TorusPoint};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("cartan matrix is empty or not square")]
    Shape,
    #[error("cartan[{0}][{0}] must be 2")]
    Diagonal(usize),
    #[error("cartan[{0}][{1}] must be nonpositive")]
    OffDiagonal(usize, usize),
    #[error("symmetrizer has {found} entries, expected {expected}")]
    SymmetrizerLength { expected: usize, found: usize },
    #[error("symmetrizer entry {0} must be positive")]
    SymmetrizerSign(usize),
    #[error("symmetrizer does not symmetrize the cartan matrix at ({0}, {1})")]
    NotSymmetrized(usize, usize),
    #[error("unknown cartan type `{0}`")]
    UnknownType(String),
    #[error(transparent)]
    Invalid(#[from] InvalidDatum),
}

/// Finite types available as named presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A1,
    A2,
    A1xA1,
    B2,
    G2,
}

impl CartanType {
    pub const ALL: [CartanType; 5] = [CartanType::A1, CartanType::A2, CartanType::A1xA1, CartanType::B2, CartanType::G2];

    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        match self {
            CartanType::A1 => vec![vec![2]],
            CartanType::A2 => vec![vec![2, -1], vec![-1, 2]],
            CartanType::A1xA1 => vec![vec![2, 0], vec![0, 2]],
            CartanType::B2 => vec![vec![2, -1], vec![-2, 2]],
            CartanType::G2 => vec![vec![2, -1], vec![-3, 2]],
        }
    }

    pub fn symmetrizer(self) -> Vec<i64> {
        match self {
            CartanType::A1 => vec![1],
            CartanType::A2 | CartanType::A1xA1 => vec![1, 1],
            CartanType::B2 => vec![1, 2],
            CartanType::G2 => vec![1, 3],
        }
    }

    /// Positive roots in the basis of simple roots.
    pub fn positive_roots(self) -> Vec<Vec<i64>> {
        match self {
            CartanType::A1 => vec![vec![1]],
            CartanType::A2 => vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            CartanType::A1xA1 => vec![vec![1, 0], vec![0, 1]],
            CartanType::B2 => vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]],
            CartanType::G2 => {
                vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]
            }
        }
    }

    /// All nonzero roots: the positive ones followed by their negatives.
    pub fn roots(self) -> Vec<Character> {
        let pos: Vec<Character> = self.positive_roots().into_iter().map(Character).collect();
        let neg: Vec<Character> = pos.iter().map(Character::neg).collect();
        pos.into_iter().chain(neg).collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanType::A1 => "A1",
            CartanType::A2 => "A2",
            CartanType::A1xA1 => "A1xA1",
            CartanType::B2 => "B2",
            CartanType::G2 => "G2",
        })
    }
}

impl FromStr for CartanType {
    type Err = PresetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CartanType::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| PresetError::UnknownType(s.to_string()))
    }
}

fn check_cartan(cartan: &[Vec<i64>], dvec: &[i64]) -> Result<(), PresetError> {
    let m = cartan.len();
    if m == 0 || cartan.iter().any(|r| r.len() != m) {
        return Err(PresetError::Shape);
    }
    if dvec.len() != m {
        return Err(PresetError::SymmetrizerLength { expected: m, found: dvec.len() });
    }
    if let Some(i) = dvec.iter().position(|&d| d <= 0) {
        return Err(PresetError::SymmetrizerSign(i + 1));
    }
    for i in 0..m {
        if cartan[i][i] != 2 {
            return Err(PresetError::Diagonal(i + 1));
        }
        for j in 0..m {
            if i != j && cartan[i][j] > 0 {
                return Err(PresetError::OffDiagonal(i + 1, j + 1));
            }
            if cartan[i][j] * dvec[j] != cartan[j][i] * dvec[i] {
                return Err(PresetError::NotSymmetrized(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// Points `γ_j` with `γ_j[k] = base^(a_kj d_j)`, so that against the
/// standard basis characters `q_ij = base^(a_ij d_j)`.
fn cartan_points(cartan: &[Vec<i64>], dvec: &[i64], base: &Scalar) -> Result<Vec<TorusPoint>, PresetError> {
    let m = cartan.len();
    (0..m)
        .map(|j| {
            (0..m)
                .map(|k| base.pow(cartan[k][j] * dvec[j]).map_err(|_| PresetError::Invalid(zero_base())))
                .collect::<Result<Vec<_>, _>>()
                .map(TorusPoint)
        })
        .collect()
}

fn zero_base() -> InvalidDatum {
    InvalidDatum(vec![super::DatumIssue::ZeroCoordinate { index: 1, coord: 1 }])
}

fn basis(m: usize, i: usize) -> Character {
    Character((0..m).map(|k| i64::from(k == i)).collect())
}

/// Simple roots `α_i = e_i` with points chosen so that
/// `q_ij = base^(a_ij d_j)`. The symmetrizer must satisfy
/// `a_ij d_j = a_ji d_i`, which makes the q-matrix symmetric.
pub fn preset_cartan(cartan: &[Vec<i64>], dvec: &[i64], base: &Scalar) -> Result<Datum, PresetError> {
    check_cartan(cartan, dvec)?;
    let m = cartan.len();
    let gammas = cartan_points(cartan, dvec, base)?;
    let alphas = (0..m).map(|i| basis(m, i)).collect();
    Ok(Datum::new(m, base.field(), alphas, gammas)?)
}

/// Given characters with every point at the identity of the torus.
pub fn preset_reductive(roots: &[Character]) -> Result<Datum, PresetError> {
    let n = roots.first().map_or(0, |r| r.0.len());
    let gammas = vec![TorusPoint::identity(Field::Rational, n); roots.len()];
    Ok(Datum::new(n.max(1), Field::Rational, roots.to_vec(), gammas)?)
}

/// Characters `α_1..α_m, -α_1..-α_m` with the Cartan points listed twice.
pub fn preset_doubled(cartan: &[Vec<i64>], dvec: &[i64], base: &Scalar) -> Result<Datum, PresetError> {
    check_cartan(cartan, dvec)?;
    let m = cartan.len();
    let points = cartan_points(cartan, dvec, base)?;
    let alphas = (0..m).map(|i| basis(m, i)).chain((0..m).map(|i| basis(m, i).neg())).collect();
    let gammas = points.iter().chain(&points).cloned().collect();
    Ok(Datum::new(m, base.field(), alphas, gammas)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: i64) -> Scalar {
        Scalar::t_pow(k)
    }

    fn q_of(ty: CartanType) -> Vec<Vec<Scalar>> {
        preset_cartan(&ty.cartan_matrix(), &ty.symmetrizer(), &t(1)).unwrap().q_matrix().rows().to_vec()
    }

    #[test]
    fn cartan_q_matrices() {
        assert_eq!(q_of(CartanType::A1), vec![vec![t(2)]]);
        assert_eq!(q_of(CartanType::A2), vec![vec![t(2), t(-1)], vec![t(-1), t(2)]]);
        assert_eq!(q_of(CartanType::B2), vec![vec![t(2), t(-2)], vec![t(-2), t(4)]]);
        assert_eq!(q_of(CartanType::G2), vec![vec![t(2), t(-3)], vec![t(-3), t(6)]]);
        assert_eq!(q_of(CartanType::A1xA1), vec![vec![t(2), t(0)], vec![t(0), t(2)]]);
    }

    #[test]
    fn cartan_rejects_bad_input() {
        assert_eq!(preset_cartan(&[vec![2, -1], vec![-2, 2]], &[2, 1], &t(1)), Err(PresetError::NotSymmetrized(1, 2)));
        assert_eq!(preset_cartan(&[vec![3]], &[1], &t(1)), Err(PresetError::Diagonal(1)));
        assert_eq!(preset_cartan(&[vec![2, 1], vec![1, 2]], &[1, 1], &t(1)), Err(PresetError::OffDiagonal(1, 2)));
        assert_eq!(preset_cartan(&[vec![2]], &[0], &t(1)), Err(PresetError::SymmetrizerSign(1)));
        assert_eq!(
            preset_cartan(&[vec![2]], &[1, 1], &t(1)),
            Err(PresetError::SymmetrizerLength { expected: 1, found: 2 })
        );
        assert!(preset_cartan(&[vec![2]], &[1], &Scalar::zero(Field::RationalFunction)).is_err());
    }

    #[test]
    fn reductive_all_ones() {
        let d = preset_reductive(&[Character(vec![1]), Character(vec![-1])]).unwrap();
        assert_eq!(d.letters(), 2);
        assert!(d.q_matrix().rows().iter().flatten().all(Scalar::is_one));

        let d = preset_reductive(&CartanType::A2.roots()).unwrap();
        assert_eq!(d.letters(), 6);
        assert!(d.q_matrix().rows().iter().flatten().all(Scalar::is_one));

        assert!(preset_reductive(&[]).is_err());
        assert!(preset_reductive(&[Character(vec![0])]).is_err());
    }

    #[test]
    fn doubled_a1_duplicates_points() {
        let d = preset_doubled(&[vec![2]], &[1], &t(1)).unwrap();
        assert_eq!(d.alphas(), &[Character(vec![1]), Character(vec![-1])]);
        assert_eq!(d.gammas()[0], d.gammas()[1]);
        assert_eq!(d.q_matrix().rows(), &[vec![t(2), t(2)], vec![t(-2), t(-2)]]);
    }

    #[test]
    fn doubled_a2_reads_cartan_pairing() {
        let d = preset_doubled(&CartanType::A2.cartan_matrix(), &[1, 1], &t(1)).unwrap();
        assert_eq!(d.letters(), 4);
        let q = d.q_matrix();
        assert_eq!(q.get(0, 1), &t(-1));
        assert_eq!(q.get(2, 1), &t(1));
        assert_eq!(q.get(3, 3), &t(-2));
        assert!(preset_doubled(&CartanType::B2.cartan_matrix(), &[1, 1], &t(1)).is_err());
    }

    #[test]
    fn type_names() {
        for ty in CartanType::ALL {
            assert_eq!(ty.to_string().parse::<CartanType>().unwrap(), ty);
        }
        assert!("E8".parse::<CartanType>().is_err());
    }
}
