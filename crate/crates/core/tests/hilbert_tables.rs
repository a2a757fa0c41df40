mod common;

use hopfmin_core::datum::{preset_reductive, CartanType};
use hopfmin_core::hilbert::{growth_classify, hilbert_table, hilbert_table_for, kostant_dims, GrowthKind, GrowthParams};
use hopfmin_core::shapovalov::BlockOptions;
use hopfmin_core::{BraidingMatrix, Character, Datum, MultiDegree, Scalar};

fn roots(list: &[&[u32]]) -> Vec<MultiDegree> {
    list.iter().map(|r| MultiDegree(r.to_vec())).collect()
}

fn positive_roots(ty: CartanType) -> Vec<MultiDegree> {
    match ty {
        CartanType::A1 => roots(&[&[1]]),
        CartanType::A2 => roots(&[&[1, 0], &[0, 1], &[1, 1]]),
        CartanType::A1xA1 => roots(&[&[1, 0], &[0, 1]]),
        CartanType::B2 => roots(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]),
        CartanType::G2 => roots(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1], &[3, 1], &[3, 2]]),
    }
}

#[test]
fn quantum_borel_dimensions_match_kostant() {
    let opts = BlockOptions::default();
    for (ty, max) in [(CartanType::A1, 8), (CartanType::A2, 8), (CartanType::A1xA1, 8), (CartanType::B2, 6), (CartanType::G2, 5)] {
        let table = hilbert_table(&common::cartan(ty), max, &opts, None).unwrap();
        let pos = positive_roots(ty);
        for (deg, dim) in &table.dims {
            assert_eq!(*dim as u64, kostant_dims(&pos, deg), "{ty} {deg}");
        }
        assert_eq!(table.dims.len(), MultiDegree::all_up_to(pos[0].letters(), max).len());
    }
}

#[test]
fn kostant_small_cases() {
    let b2 = positive_roots(CartanType::B2);
    assert_eq!(kostant_dims(&b2, &MultiDegree(vec![2, 1])), 3);
    assert_eq!(kostant_dims(&b2, &MultiDegree(vec![1, 2])), 2);
    let a1a1 = positive_roots(CartanType::A1xA1);
    assert_eq!(kostant_dims(&a1a1, &MultiDegree(vec![3, 4])), 1);
}

#[test]
fn root_of_unity_collapse() {
    for n in 2..=5u32 {
        let d = Datum::from_q_matrix(&[vec![Scalar::zeta_pow(n, 1)]]).unwrap();
        let table = hilbert_table(&d, 8, &BlockOptions::default(), None).unwrap();
        let expected: Vec<u64> = (0..=8).map(|k| u64::from(k < n as usize)).collect();
        assert_eq!(table.totals, expected, "N = {n}");
        assert_eq!(growth_classify(&table.totals, &GrowthParams::with_window(3)).kind, GrowthKind::Finite);
    }
}

#[test]
fn reductive_datum_gives_symmetric_algebra() {
    let cases = [
        vec![Character(vec![1]), Character(vec![2])],
        vec![Character(vec![1, 0]), Character(vec![0, 1]), Character(vec![1, 1])],
    ];
    for chars in cases {
        let m = chars.len();
        let d = preset_reductive(&chars).unwrap();
        let table = hilbert_table(&d, 8, &BlockOptions::default(), None).unwrap();
        assert!(table.dims.values().all(|&x| x == 1));
        let verdict = growth_classify(&table.totals, &GrowthParams::with_window(3));
        assert_eq!(verdict.kind, GrowthKind::Polynomial(m - 1));
    }
}

#[test]
fn low_degrees_are_one_and_letter_count() {
    let mut braidings: Vec<BraidingMatrix> = CartanType::ALL.iter().map(|&ty| common::cartan(ty).braiding_matrix().clone()).collect();
    braidings.extend(common::random_braidings());
    for b in braidings {
        let t = hilbert_table_for(&b, 1, &BlockOptions::default(), None).unwrap();
        assert_eq!(t.totals, vec![1, b.size() as u64]);
    }
}

fn permuted(b: &BraidingMatrix, perm: &[usize]) -> BraidingMatrix {
    let n = b.size();
    BraidingMatrix::new((0..n).map(|i| (0..n).map(|j| b.get(perm[i], perm[j]).clone()).collect()).collect())
}

#[test]
fn relabeling_letters_permutes_dims() {
    let b = common::random_braiding(31, 3);
    let perm = [2, 0, 1];
    let opts = BlockOptions::default();
    let base = hilbert_table_for(&b, 4, &opts, None).unwrap();
    let moved = hilbert_table_for(&permuted(&b, &perm), 4, &opts, None).unwrap();
    for (deg, dim) in &moved.dims {
        // letter i of the relabeled braiding is letter perm[i] of the original
        let mut orig = vec![0u32; 3];
        for (i, &c) in deg.counts().iter().enumerate() {
            orig[perm[i]] = c;
        }
        assert_eq!(base.dims[&MultiDegree(orig)], *dim, "{deg}");
    }
    let a2 = common::cartan(CartanType::A2).braiding_matrix().clone();
    let base = hilbert_table_for(&a2, 5, &opts, None).unwrap();
    let moved = hilbert_table_for(&permuted(&a2, &[1, 0]), 5, &opts, None).unwrap();
    for (deg, dim) in &moved.dims {
        let flipped = MultiDegree(vec![deg.counts()[1], deg.counts()[0]]);
        assert_eq!(base.dims[&flipped], *dim);
    }
}

#[test]
fn larger_truncation_keeps_earlier_dims() {
    let opts = BlockOptions::default();
    let d = common::cartan(CartanType::B2);
    let small = hilbert_table(&d, 4, &opts, None).unwrap();
    let large = hilbert_table(&d, 6, &opts, None).unwrap();
    for (deg, dim) in &small.dims {
        assert_eq!(large.dims[deg], *dim);
    }
    assert_eq!(&large.totals[..5], &small.totals[..]);
}

#[test]
fn generic_rational_braiding_grows_like_the_free_algebra() {
    let q = |n: i64| common::rational(n, 1);
    let d = Datum::from_q_matrix(&[vec![q(1), q(2)], vec![q(3), q(5)]]).unwrap();
    let table = hilbert_table(&d, 7, &BlockOptions::default(), None).unwrap();
    assert_eq!(table.totals, (0..=7).map(|k| 1u64 << k).collect::<Vec<_>>());
    let verdict = growth_classify(&table.totals, &GrowthParams::with_window(3));
    assert_eq!(verdict.kind, GrowthKind::ExponentialSuspected);
    let one_letter = hilbert_table(&common::cartan(CartanType::A1), 6, &BlockOptions::default(), None).unwrap();
    assert_eq!(growth_classify(&one_letter.totals, &GrowthParams::with_window(3)).kind, GrowthKind::Polynomial(0));
}
