//! Oracle suites run by `hopfmin selftest`.

use std::fmt;

use hopfmin_core::datum::{preset_cartan, CartanType};
use hopfmin_core::hilbert::{hilbert_table, kostant_dims};
use hopfmin_core::scalar::BigRational;
use hopfmin_core::shapovalov::{permutation_sum_oracle, rank, symmetrizer, BlockOptions, DEFAULT_BLOCK_LIMIT};
use hopfmin_core::words::shuffle;
use hopfmin_core::{BraidingMatrix, Datum, MultiDegree, Scalar, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SelftestOptions {
    /// Lower every total-degree bound by one.
    pub quick: bool,
    /// Negative control: negate one braiding entry on the shuffle side of
    /// the Hopf-morphism suite only, which must make that suite fail.
    pub mutate_braiding: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks, {} failures", self.name, self.checks, self.failures.len())?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n     {msg}")?;
        }
        Ok(())
    }
}

struct Suite {
    name: &'static str,
    checks: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult { name: self.name, checks: self.checks, failures: self.failures }
    }
}

fn cartan(ty: CartanType) -> Datum {
    preset_cartan(&ty.cartan_matrix(), &ty.symmetrizer(), &Scalar::t_pow(1)).expect("built-in type")
}

/// Braiding with small nonzero rational entries, fixed by `seed`.
pub fn seeded_braiding(seed: u64, letters: usize) -> BraidingMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entry = || loop {
        let n: i64 = rng.gen_range(-4..=4);
        if n != 0 {
            let d: i64 = rng.gen_range(1..=3);
            return Scalar::Rational(BigRational::new(n.into(), d.into()));
        }
    };
    BraidingMatrix::new((0..letters).map(|_| (0..letters).map(|_| entry()).collect()).collect())
}

fn random_braidings() -> Vec<BraidingMatrix> {
    vec![seeded_braiding(101, 2), seeded_braiding(102, 3), seeded_braiding(103, 3)]
}

fn bound(base: usize, opts: &SelftestOptions) -> usize {
    if opts.quick {
        base - 1
    } else {
        base
    }
}

pub fn symmetrizer_suite(opts: &SelftestOptions) -> SuiteResult {
    let mut suite = Suite::new("symmetrizer-vs-permutation-sum");
    let mut braidings = vec![cartan(CartanType::A2).braiding_matrix().clone()];
    braidings.extend(random_braidings());
    let max = bound(4, opts);
    for (i, b) in braidings.iter().enumerate() {
        for deg in MultiDegree::all_up_to(b.size(), max) {
            let fast = symmetrizer(b, &deg, DEFAULT_BLOCK_LIMIT);
            let slow = permutation_sum_oracle(b, &deg, max);
            suite.check(matches!((&fast, &slow), (Ok(x), Ok(y)) if x == y), || format!("braiding {i}, block {deg}"));
        }
    }
    suite.finish()
}

/// Positive roots of each type, written out independently of the presets.
fn positive_roots(ty: CartanType) -> Vec<MultiDegree> {
    let roots: &[&[u32]] = match ty {
        CartanType::A1 => &[&[1]],
        CartanType::A2 => &[&[1, 0], &[0, 1], &[1, 1]],
        CartanType::A1xA1 => &[&[1, 0], &[0, 1]],
        CartanType::B2 => &[&[1, 0], &[0, 1], &[1, 1], &[2, 1]],
        CartanType::G2 => &[&[1, 0], &[0, 1], &[1, 1], &[2, 1], &[3, 1], &[3, 2]],
    };
    roots.iter().map(|r| MultiDegree(r.to_vec())).collect()
}

pub fn kostant_suite(opts: &SelftestOptions) -> SuiteResult {
    let mut suite = Suite::new("kostant-tables");
    let cases = [(CartanType::A1, 8), (CartanType::A2, 8), (CartanType::A1xA1, 8), (CartanType::B2, 6)];
    for (ty, max) in cases {
        let max = bound(max, opts);
        match hilbert_table(&cartan(ty), max, &BlockOptions::default(), None) {
            Ok(table) => {
                let roots = positive_roots(ty);
                for (deg, dim) in &table.dims {
                    let expected = kostant_dims(&roots, deg);
                    suite.check(*dim as u64 == expected, || format!("{ty} {deg}: rank {dim}, Kostant {expected}"));
                }
            }
            Err(e) => suite.check(false, || format!("{ty}: {e}")),
        }
    }
    suite.finish()
}

pub fn transposition_suite(opts: &SelftestOptions) -> SuiteResult {
    let mut suite = Suite::new("transposition-invariance");
    let max = bound(5, opts);
    for (i, b) in random_braidings().iter().enumerate() {
        let bt = b.transposed();
        for deg in MultiDegree::all_up_to(b.size(), max) {
            let r = symmetrizer(b, &deg, DEFAULT_BLOCK_LIMIT).map(|m| rank(&m));
            let rt = symmetrizer(&bt, &deg, DEFAULT_BLOCK_LIMIT).map(|m| rank(&m));
            suite.check(matches!((&r, &rt), (Ok(x), Ok(y)) if x == y), || format!("braiding {i}, block {deg}"));
        }
    }
    suite.finish()
}

fn image(b: &BraidingMatrix, w: &Word) -> Option<hopfmin_core::Element> {
    let m = symmetrizer(b, &w.multidegree(b.size()), DEFAULT_BLOCK_LIMIT).ok()?;
    Some(m.image(m.index_of(w)?))
}

fn corrupted(b: &BraidingMatrix) -> BraidingMatrix {
    let mut rows = b.rows().to_vec();
    let j = usize::from(b.size() > 1);
    rows[0][j] = -&rows[0][j];
    BraidingMatrix::new(rows)
}

pub fn hopf_suite(opts: &SelftestOptions) -> SuiteResult {
    let mut suite = Suite::new("hopf-morphism");
    let max = bound(5, opts);
    let data = [
        cartan(CartanType::A1).braiding_matrix().clone(),
        cartan(CartanType::A2).braiding_matrix().clone(),
        seeded_braiding(104, 3),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (i, b) in data.iter().enumerate() {
        let shuffle_side = if opts.mutate_braiding { corrupted(b) } else { b.clone() };
        let m = b.size();
        for _ in 0..50 {
            let total = rng.gen_range(0..=max);
            let split = rng.gen_range(0..=total);
            let mut word = |len: usize| {
                let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..m)).collect();
                Word::new(&letters, m).expect("letters in range")
            };
            let (u, v) = (word(split), word(total - split));
            let lhs = image(b, &u.concat(&v));
            let rhs = match (image(b, &u), image(b, &v)) {
                (Some(x), Some(y)) => Some(shuffle(&shuffle_side, &x, &y)),
                _ => None,
            };
            suite.check(lhs.is_some() && lhs == rhs, || format!("braiding {i}: u = {u}, v = {v}"));
        }
    }
    suite.finish()
}

pub fn run_selftest(opts: &SelftestOptions) -> Vec<SuiteResult> {
    vec![symmetrizer_suite(opts), kostant_suite(opts), transposition_suite(opts), hopf_suite(opts)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let opts = SelftestOptions { quick: true, mutate_braiding: false };
        for r in [symmetrizer_suite(&opts), transposition_suite(&opts), hopf_suite(&opts)] {
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn corrupted_braiding_breaks_hopf_suite() {
        let opts = SelftestOptions { quick: true, mutate_braiding: true };
        assert!(!hopf_suite(&opts).passed());
    }
}
