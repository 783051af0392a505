use proptest::prelude::*;

use z6alg::covariance::{induced_s, rho_covariance_check, spin_to_lorentz};
use z6alg::hilbert::{hilbert_coeffs, lambda_total_dimension};
use z6alg::oracle::{quotient_basis, words_of_degree};
use z6alg::rewrite::normalize;
use z6alg::sampling;
use z6alg::{make_presentation, AlgebraType, Cyclo, Generator, Matrix, Poly, Presentation, Word};

fn pres(algebra: AlgebraType, n_theta: usize, n_xi: usize) -> Presentation {
    make_presentation(algebra, n_theta, n_xi, Default::default()).unwrap()
}

fn relabel(w: &Word, perm: &[u16]) -> Word {
    Word::new(
        w.letters()
            .iter()
            .map(|g| Generator::new(g.kind, perm[g.index as usize - 1]))
            .collect(),
    )
}

fn permutations(n: u16) -> Vec<Vec<u16>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n as usize {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn quotient_does_not_depend_on_generator_labels() {
    let cases = [
        (AlgebraType::Lambda, 3, 0, 3),
        (AlgebraType::Lambda0, 3, 0, 3),
        (AlgebraType::S1, 3, 0, 3),
        (AlgebraType::S0, 3, 0, 3),
        (AlgebraType::Lambda1, 2, 0, 4),
        (AlgebraType::CombinedZ6, 2, 2, 3),
    ];
    for (algebra, n_theta, n_xi, degree) in cases {
        let p = pres(algebra, n_theta, n_xi);
        let basis = quotient_basis(&p, degree).unwrap();
        for perm in permutations(n_theta.max(n_xi) as u16) {
            // relabelling is an automorphism, so the image of a basis is a basis
            let rows: Vec<Vec<Cyclo>> = basis
                .basis
                .iter()
                .map(|w| basis.coords(&relabel(w, &perm)).unwrap())
                .collect();
            if rows.is_empty() {
                continue;
            }
            let m = Matrix::from_rows(rows);
            assert!(!m.det().is_zero(), "{algebra} under {perm:?}");
        }
        assert_eq!(basis.dimension, basis.word_count - basis.rank());
    }
}

#[test]
fn lambda_total_dimension_matches_oracle() {
    for n in 1..=3 {
        let series = hilbert_coeffs(&pres(AlgebraType::Lambda, n, 0), 5).unwrap();
        assert_eq!(series.coefficients[0], 1);
        assert_eq!(series.coefficients[1..].iter().sum::<u64>(), lambda_total_dimension(n));
    }
}

#[test]
fn xi_only_algebra_has_total_dimension_two_to_the_n() {
    for n in 1..=4 {
        let series = hilbert_coeffs(&pres(AlgebraType::Grassmann, 0, n), n).unwrap();
        assert_eq!(series.coefficients.iter().sum::<u64>(), 1 << n);
    }
}

fn combined_poly() -> impl Strategy<Value = Poly> {
    let p = pres(AlgebraType::CombinedZ6, 2, 2);
    let alphabet = p.alphabet().to_vec();
    (0usize..=4)
        .prop_flat_map(move |degree| {
            let alphabet = alphabet.clone();
            proptest::collection::vec(
                (proptest::collection::vec(0..alphabet.len(), degree), -3i64..=3, 0u32..12),
                1..5,
            )
            .prop_map(move |terms| {
                let mut p = Poly::zero();
                for (letters, c, k) in terms {
                    let w = Word::new(letters.into_iter().map(|i| alphabet[i]).collect());
                    p.add_term(Cyclo::from_int(c) * Cyclo::zeta_power(k as i64), w);
                }
                p
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_are_oracle_representatives(p in combined_poly()) {
        let pr = pres(AlgebraType::CombinedZ6, 2, 2);
        let nf = normalize(&p, &pr).unwrap();
        if let Some(d) = p.max_degree() {
            let basis = quotient_basis(&pr, d).unwrap();
            prop_assert_eq!(basis.coords_of(&p).unwrap(), basis.coords_of(&nf).unwrap());
            prop_assert_eq!(nf.is_zero(), basis.contains(&p).unwrap());
        }
    }

    #[test]
    fn induced_s_is_a_representation(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let u = sampling::matrix(&mut rng, 2, 2);
        let v = sampling::matrix(&mut rng, 2, 2);
        let suv = induced_s(&(&u * &v)).unwrap();
        prop_assert_eq!(suv, &induced_s(&u).unwrap() * &induced_s(&v).unwrap());
    }

    #[test]
    fn rho_transforms_covariantly(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let u = sampling::invertible_matrix(&mut rng, 2);
        let r = rho_covariance_check(&u).unwrap();
        prop_assert!(r.rho_covariant);
        prop_assert_eq!(r.epsilon_preserved, r.det_s.is_one());
    }

    #[test]
    fn lorentz_image_is_real_with_determinant_norm_to_the_fourth(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let u = sampling::matrix(&mut rng, 2, 2);
        let l = spin_to_lorentz(&u).unwrap();
        prop_assert!(l.is_real());
        let norm = &u.det() * &u.det().conj();
        prop_assert_eq!(l.det(), norm.pow(2).unwrap());
    }

    #[test]
    fn quotient_words_are_all_accounted_for(n in 1usize..=3, degree in 0usize..=4) {
        let p = pres(AlgebraType::LambdaBar, n, 0);
        let basis = quotient_basis(&p, degree).unwrap();
        prop_assert_eq!(basis.word_count, words_of_degree(p.alphabet(), degree).len());
        for w in &basis.basis {
            let e = basis.coords(w).unwrap();
            prop_assert_eq!(e.iter().filter(|c| c.is_one()).count(), 1);
            prop_assert_eq!(e.iter().filter(|c| c.is_zero()).count(), e.len() - 1);
        }
    }
}
