mod common;

use hopfmin_core::datum::CartanType;
use hopfmin_core::words::{braid_at, concat, shuffle, shuffle_words};
use hopfmin_core::{BraidingMatrix, Element, MultiDegree, Scalar, Word};
use proptest::prelude::*;

fn word(letters: &[usize], m: usize) -> Word {
    Word::new(letters, m).unwrap()
}

fn elem(w: &Word, b: &BraidingMatrix) -> Element {
    Element::word(w.clone(), Scalar::one(b.field()))
}

/// Up to three words over `m` letters with total length at most 5.
fn word_triple(m: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<usize>)> {
    (0usize..=5).prop_flat_map(move |total| {
        (0..=total).prop_flat_map(move |a| {
            (0..=total - a).prop_flat_map(move |b| {
                let c = total - a - b;
                (
                    prop::collection::vec(0..m, a),
                    prop::collection::vec(0..m, b),
                    prop::collection::vec(0..m, c),
                )
            })
        })
    })
}

fn braiding_for(seed: u64, m: usize) -> BraidingMatrix {
    if seed.is_multiple_of(4) && m <= 2 {
        common::cartan(if m == 1 { CartanType::A1 } else { CartanType::A2 }).braiding_matrix().clone()
    } else {
        common::random_braiding(seed, m)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn concat_and_shuffle_are_associative(seed in 0u64..1000, m in 1usize..=2, (x, y, z) in word_triple(3)) {
        let m = m.max(x.iter().chain(&y).chain(&z).map(|&l| l + 1).max().unwrap_or(1));
        let b = braiding_for(seed, m);
        let (u, v, w) = (elem(&word(&x, m), &b), elem(&word(&y, m), &b), elem(&word(&z, m), &b));
        prop_assert_eq!(concat(&concat(&u, &v), &w), concat(&u, &concat(&v, &w)));
        prop_assert_eq!(shuffle(&b, &shuffle(&b, &u, &v), &w), shuffle(&b, &u, &shuffle(&b, &v, &w)));
    }

    #[test]
    fn degrees_and_weights_add(seed in 0u64..1000, (x, y, _) in word_triple(3)) {
        let m = 3;
        let d = hopfmin_core::Datum::from_q_matrix(common::random_braiding(seed, m).transposed().rows()).unwrap();
        let (u, v) = (word(&x, m), word(&y, m));
        let sum = u.multidegree(m).add(&v.multidegree(m));
        prop_assert_eq!(u.concat(&v).multidegree(m), sum.clone());
        let wsum: Vec<i64> = u.weight(&d).iter().zip(v.weight(&d)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(u.concat(&v).weight(&d), wsum.clone());
        for (w, _) in shuffle_words(d.braiding_matrix(), &u, &v).terms() {
            prop_assert_eq!(w.multidegree(m), sum.clone());
            prop_assert_eq!(w.weight(&d), wsum.clone());
        }
    }
}

fn apply(b: &BraidingMatrix, w: &Word, positions: &[usize]) -> (Scalar, Word) {
    positions.iter().fold((Scalar::one(b.field()), w.clone()), |(c, w), &k| {
        let (x, next) = braid_at(b, &w, k).unwrap();
        (&c * &x, next)
    })
}

#[test]
fn braid_relation_on_all_length_three_words() {
    for m in 1..=3 {
        let braidings = [common::random_braiding(40 + m as u64, m), common::random_braiding(50 + m as u64, m)];
        for b in &braidings {
            for w in MultiDegree::with_total(m, 3).iter().flat_map(MultiDegree::words) {
                assert_eq!(apply(b, &w, &[0, 1, 0]), apply(b, &w, &[1, 0, 1]), "{w}");
            }
        }
    }
}

#[test]
fn shuffle_of_two_letters() {
    let b = common::cartan(CartanType::A2).braiding_matrix().clone();
    let s = shuffle_words(&b, &word(&[0], 2), &word(&[1], 2));
    assert_eq!(s.coeff(&word(&[0, 1], 2)), Some(&Scalar::one(b.field())));
    assert_eq!(s.coeff(&word(&[1, 0], 2)), Some(b.get(0, 1)));
}
