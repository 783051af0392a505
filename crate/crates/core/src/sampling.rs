//! Seeded random exact values for property checks and CLI trials.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dforms::PolyFn;
use crate::matrix::Matrix;
use crate::scalars::Cyclo;

pub const DEFAULT_SEED: u64 = 0x5eed_2013;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer combination of `1, ζ, ζ², ζ³` with coefficients in `[-bound, bound]`.
pub fn cyclo<R: Rng>(rng: &mut R, bound: i64) -> Cyclo {
    (0..4)
        .map(|k| Cyclo::zeta_power(k) * Cyclo::from_int(rng.gen_range(-bound..=bound)))
        .sum()
}

pub fn nonzero_cyclo<R: Rng>(rng: &mut R, bound: i64) -> Cyclo {
    loop {
        let c = cyclo(rng, bound);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    Matrix::from_rows((0..n).map(|_| (0..n).map(|_| cyclo(rng, bound)).collect()).collect())
}

/// Nonsingular `n×n` matrix with small integer entries.
pub fn invertible_int_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    loop {
        let m = Matrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| Cyclo::from_int(rng.gen_range(-bound..=bound))).collect())
                .collect(),
        );
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Nonsingular 2×2 matrix over the cyclotomic field.
pub fn invertible_matrix<R: Rng>(rng: &mut R, bound: i64) -> Matrix {
    loop {
        let m = matrix(rng, 2, bound);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// `[[a, b], [c, (1 + bc)/a]]`, which has determinant one.
pub fn sl2<R: Rng>(rng: &mut R, bound: i64) -> Matrix {
    let a = nonzero_cyclo(rng, bound);
    let b = cyclo(rng, bound);
    let c = cyclo(rng, bound);
    let d = (Cyclo::one() + &b * &c).div(&a).expect("a is nonzero");
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

/// Random polynomial in `vars` variables of total degree at most `degree`.
pub fn polyfn<R: Rng>(rng: &mut R, vars: usize, degree: u32, terms: usize) -> PolyFn {
    let mut p = PolyFn::zero();
    for _ in 0..terms {
        let mut exps = vec![0u32; vars];
        let total = rng.gen_range(0..=degree);
        for _ in 0..total {
            exps[rng.gen_range(0..vars)] += 1;
        }
        let c = Cyclo::from_int(rng.gen_range(-9..=9));
        p = p.add(&PolyFn::monomial(&exps, c));
    }
    p
}
