use hopfmin_core::sl2::{dim_l, level_factor, parallel_report, shapovalov_value, Dimension};
use num_bigint::BigInt;
use num_rational::BigRational;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn fixtures() -> Vec<BigRational> {
    vec![r(-2, 1), r(-1, 1), r(0, 1), r(1, 2), r(1, 1), r(2, 1), r(3, 1), r(7, 1)]
}

fn closed_product(lambda: &BigRational, k: usize) -> BigRational {
    (1..=k as i64).fold(r(1, 1), |acc, j| acc * BigRational::from_integer(BigInt::from(j)) * (lambda + r(1 - j, 1)))
}

#[test]
fn recursion_matches_closed_product() {
    for lambda in fixtures() {
        for k in 0..=8 {
            assert_eq!(shapovalov_value(&lambda, k), closed_product(&lambda, k), "λ = {lambda}, k = {k}");
        }
    }
}

#[test]
fn consecutive_values_differ_by_level_factor() {
    for lambda in fixtures() {
        for k in 1..=8usize {
            let kk = BigRational::from_integer(BigInt::from(k));
            let factor = &kk * (&lambda + r(1, 1) - &kk);
            assert_eq!(level_factor(&lambda, k), factor);
            assert_eq!(shapovalov_value(&lambda, k), factor * shapovalov_value(&lambda, k - 1));
        }
    }
}

#[test]
fn irreducible_dimensions() {
    for n in 0..=6i64 {
        assert_eq!(dim_l(&r(n, 1)), Dimension::Finite(n as u64 + 1));
    }
    for lambda in [r(-1, 1), r(1, 2), r(5, 3)] {
        assert_eq!(dim_l(&lambda), Dimension::Infinite);
    }
}

#[test]
fn report_rows() {
    let rep = parallel_report(&r(0, 1));
    assert_eq!(rep.dim_l, Dimension::Finite(1));
    assert_eq!(rep.levels[0].irreducible_dim, 1);
    assert!(rep.levels[1..].iter().all(|l| l.irreducible_dim == 0));
    let rep = parallel_report(&r(3, 1));
    let dims: Vec<u64> = rep.levels.iter().map(|l| l.irreducible_dim).collect();
    assert_eq!(&dims[..6], &[1, 1, 1, 1, 0, 0]);
    assert_eq!(rep.correspondence.len(), 4);
}
