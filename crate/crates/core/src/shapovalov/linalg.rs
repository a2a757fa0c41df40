//! Exact rank and determinant.
//!
//! Over `Q` and `Q(t)` every row is first cleared of denominators (which
//! changes neither rank nor, after dividing back, the determinant), then a
//! fraction-free Bareiss elimination runs over `Z` or `Z[t]` where each
//! division is exact. Cyclotomic matrices go through ordinary Gaussian
//! elimination over the field. Pivots are the first nonzero entry of the
//! current column.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Field, RationalFunction, Scalar, ZPoly};

use super::symmetrizer::SymMatrix;

/// Rank of a square matrix and, when it is invertible or singular, its
/// determinant (zero iff `rank < size`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub size: usize,
    pub rank: usize,
    pub determinant: Scalar,
}

/// Integral domain with exact division, as needed by Bareiss.
trait ExactDomain: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % d)));
        self / d
    }
}

impl ExactDomain for ZPoly {
    fn zero() -> Self {
        ZPoly::zero()
    }
    fn one() -> Self {
        ZPoly::one()
    }
    fn is_zero(&self) -> bool {
        ZPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        ZPoly::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ZPoly::sub(self, other)
    }
    fn neg(&self) -> Self {
        ZPoly::neg(self)
    }
    fn div_exact(&self, d: &Self) -> Self {
        ZPoly::div_exact(self, d).expect("Bareiss division is exact")
    }
}

/// Fraction-free elimination; returns `(rank, det)` with `det` zero when
/// the matrix is singular or not square.
fn bareiss<T: ExactDomain>(mut a: Vec<Vec<T>>, ncols: usize) -> (usize, T) {
    let nrows = a.len();
    let mut prev = T::one();
    let mut r = 0;
    let mut negate = false;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::replace(&mut row[c], T::zero());
            for j in c + 1..ncols {
                let v = if lead.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    pivot.mul(&row[j])
                } else {
                    pivot.mul(&row[j]).sub(&lead.mul(&pivot_row[j]))
                };
                row[j] = v.div_exact(&prev);
            }
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if r == nrows && nrows == ncols {
        if nrows == 0 {
            T::one()
        } else if negate {
            prev.neg()
        } else {
            prev
        }
    } else {
        T::zero()
    };
    (r, det)
}

/// Rows for elimination: the columns of `m` (rank and determinant are
/// transpose-invariant, and columns are what the block stores).
fn rows_of(m: &SymMatrix) -> Vec<Vec<Scalar>> {
    let n = m.size();
    (0..n)
        .map(|c| {
            let mut row = vec![Scalar::zero(m.field()); n];
            for (r, x) in m.column(c) {
                row[*r as usize] = x.clone();
            }
            row
        })
        .collect()
}

fn rational_rows(rows: &[Vec<Scalar>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = <BigInt as One>::one();
    let out = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(<BigInt as One>::one(), |acc, x| match x {
                Scalar::Rational(r) => acc.lcm(r.denom()),
                _ => unreachable!("rational matrix"),
            });
            let ints = row
                .iter()
                .map(|x| match x {
                    Scalar::Rational(r) => r.numer() * (&l / r.denom()),
                    _ => unreachable!(),
                })
                .collect();
            scale *= &l;
            ints
        })
        .collect();
    (out, scale)
}

fn poly_lcm(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = a.gcd(b);
    a.div_exact(&g).expect("gcd divides").mul(b)
}

fn function_rows(rows: &[Vec<Scalar>]) -> (Vec<Vec<ZPoly>>, ZPoly) {
    let mut scale = ZPoly::one();
    let out = rows
        .iter()
        .map(|row| {
            let fs: Vec<&RationalFunction> = row.iter().map(|x| x.as_rational_function().expect("Q(t) matrix")).collect();
            let l = fs.iter().fold(ZPoly::one(), |acc, f| if f.is_zero() { acc } else { poly_lcm(&acc, f.denom()) });
            let polys = fs
                .iter()
                .map(|f| if f.is_zero() { ZPoly::zero() } else { f.numer().mul(&l.div_exact(f.denom()).expect("lcm")) })
                .collect();
            scale = scale.mul(&l);
            polys
        })
        .collect();
    (out, scale)
}

/// Gaussian elimination over the scalar field itself. Works for any field
/// tag; used directly for cyclotomic matrices and as a cross-check route.
pub fn field_elimination(rows: Vec<Vec<Scalar>>, field: Field) -> Elimination {
    let n = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a = rows;
    let mut det = Scalar::one(field);
    let mut r = 0;
    for c in 0..ncols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            det = -&det;
        }
        let inv = a[r][c].inv().expect("pivot is nonzero");
        det = &det * &a[r][c];
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(&f * &pivot_row[j]);
                }
            }
        }
        r += 1;
    }
    let determinant = if r == n && n == ncols { det } else { Scalar::zero(field) };
    Elimination { size: n, rank: r, determinant }
}

/// Exact rank and determinant of a symmetrizer block.
pub fn eliminate(m: &SymMatrix) -> Elimination {
    let n = m.size();
    let rows = rows_of(m);
    match m.field() {
        Field::Rational => {
            let (ints, scale) = rational_rows(&rows);
            let (rank, det) = bareiss(ints, n);
            let determinant = Scalar::Rational(BigRational::new(det, scale));
            Elimination { size: n, rank, determinant }
        }
        Field::RationalFunction => {
            let (polys, scale) = function_rows(&rows);
            let (rank, det) = bareiss(polys, n);
            let f = RationalFunction::new(det, scale).expect("nonzero scale");
            Elimination { size: n, rank, determinant: Scalar::RationalFunction(f) }
        }
        Field::Cyclotomic(_) => field_elimination(rows, m.field()),
    }
}

pub fn rank(m: &SymMatrix) -> usize {
    eliminate(m).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::MultiDegree;

    fn mat(rows: Vec<Vec<Scalar>>) -> SymMatrix {
        let n = rows.len();
        let field = rows[0][0].field();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect();
        SymMatrix::from_dense_columns(MultiDegree(vec![n as u32]), vec![Default::default(); n], cols, field)
    }

    fn q(n: i64) -> Scalar {
        Scalar::from_int(Field::Rational, n)
    }

    fn lit(s: &str) -> Scalar {
        Scalar::parse_in(Field::RationalFunction, s).unwrap()
    }

    #[test]
    fn rational_rank_and_det() {
        let m = mat(vec![vec![q(2), q(1), q(0)], vec![q(4), q(2), q(1)], vec![q(0), q(3), q(5)]]);
        let e = eliminate(&m);
        assert_eq!(e.rank, 3);
        // 2(10-3) - 1(20-0) + 0 = -6
        assert_eq!(e.determinant, q(-6));
        let singular = mat(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(eliminate(&singular).rank, 1);
        assert!(eliminate(&singular).determinant.is_zero());
    }

    #[test]
    fn rational_with_fractions() {
        let half = Scalar::Rational(BigRational::new(1.into(), 2.into()));
        let third = Scalar::Rational(BigRational::new(1.into(), 3.into()));
        let m = mat(vec![vec![half.clone(), third.clone()], vec![third.clone(), half.clone()]]);
        let e = eliminate(&m);
        assert_eq!(e.determinant, Scalar::Rational(BigRational::new(5.into(), 36.into())));
    }

    #[test]
    fn function_field_det() {
        let m = mat(vec![vec![lit("1"), lit("t^-1")], vec![lit("t^-1"), lit("1")]]);
        let e = eliminate(&m);
        assert_eq!(e.rank, 2);
        assert_eq!(e.determinant, lit("1-t^-2"));
        let m = mat(vec![vec![lit("1"), lit("t")], vec![lit("t^-1"), lit("1")]]);
        assert_eq!(eliminate(&m).rank, 1);
    }

    #[test]
    fn routes_agree_on_function_field() {
        let rows = vec![
            vec![lit("1+t"), lit("t^2"), lit("1/(t+1)")],
            vec![lit("t"), lit("0"), lit("t^-3")],
            vec![lit("1+2*t"), lit("t^2"), lit("1/(t+1)+t^-3")],
        ];
        let e = eliminate(&mat(rows.clone()));
        let f = field_elimination(rows, Field::RationalFunction);
        assert_eq!(e, f);
        assert_eq!(e.rank, 2);
    }

    #[test]
    fn cyclotomic_rank() {
        let z = Scalar::zeta_pow(2, 1); // -1
        let one = Scalar::one(Field::Cyclotomic(2));
        let m = mat(vec![vec![one.clone(), z.clone()], vec![z, one]]);
        assert_eq!(rank(&m), 1);
    }
}
