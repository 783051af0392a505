//! Invariant tensors of the combined algebra and their transformation laws.
//!
//! Index conventions: a 2×2 matrix `U` stores `U^{A'}_B` at `(A', B)`, all
//! indices 0-based. `Ū` is the entrywise conjugate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Mat2, Mat4, Matrix};
use crate::presentation::{make_presentation, AlgebraType, Generator, PhaseTable, PresentationOptions};
use crate::rewrite::{normalize, Poly, Word};
use crate::scalars::Cyclo;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variance {
    /// `ρ^α_{ABC}`
    Lower,
    /// `ρ^{ABC}_α`
    Upper,
}

/// Two-generator cubic form `ρ^α_{ABC}`, stored as `[α][A][B][C]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoTensor {
    variance: Variance,
    data: Vec<Cyclo>,
}

fn rho_offset(alpha: usize, abc: [usize; 3]) -> usize {
    assert!(alpha < 2 && abc.iter().all(|&x| x < 2), "rho index out of range");
    alpha * 8 + abc[0] * 4 + abc[1] * 2 + abc[2]
}

/// The triples `(A, B, C)` with `ρ^β_{ABC} = δ^β_α` used to read off `S`.
const REPRESENTATIVE: [[usize; 3]; 2] = [[0, 1, 0], [1, 0, 1]];

impl RhoTensor {
    pub fn zero(variance: Variance) -> Self {
        RhoTensor {
            variance,
            data: vec![Cyclo::zero(); 16],
        }
    }

    /// `ρ¹₁₂₁ = 1, ρ¹₂₁₁ = j², ρ¹₁₁₂ = j` and the mirror image for `α = 2`.
    /// Both variances carry the same numbers.
    pub fn canonical(variance: Variance) -> Self {
        let mut r = Self::zero(variance);
        r.set(0, [0, 1, 0], Cyclo::one());
        r.set(0, [1, 0, 0], Cyclo::j2());
        r.set(0, [0, 0, 1], Cyclo::j());
        r.set(1, [1, 0, 1], Cyclo::one());
        r.set(1, [0, 1, 1], Cyclo::j2());
        r.set(1, [1, 1, 0], Cyclo::j());
        r
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn get(&self, alpha: usize, abc: [usize; 3]) -> &Cyclo {
        &self.data[rho_offset(alpha, abc)]
    }

    pub fn set(&mut self, alpha: usize, abc: [usize; 3], value: Cyclo) {
        self.data[rho_offset(alpha, abc)] = value;
    }

    pub fn conjugate(&self) -> Self {
        RhoTensor {
            variance: self.variance,
            data: self.data.iter().map(Cyclo::conj).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo::is_zero)
    }

    /// The cube root `φ` with `ρ_{ABC} = φ ρ_{BCA}` for every component, if any.
    pub fn cyclic_phase(&self) -> Option<Cyclo> {
        [Cyclo::one(), Cyclo::j(), Cyclo::j2()].into_iter().find(|phi| {
            (0..2).all(|alpha| {
                all_triples().all(|[a, b, c]| *self.get(alpha, [a, b, c]) == phi * self.get(alpha, [b, c, a]))
            })
        })
    }
}

fn all_triples() -> impl Iterator<Item = [usize; 3]> {
    (0..8).map(|k| [k >> 2 & 1, k >> 1 & 1, k & 1])
}

/// `ε` with `ε₁₂ = −ε₂₁ = 1` and `ε¹² = −ε²¹ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonForm;

impl EpsilonForm {
    pub fn lower() -> Mat2 {
        Matrix::from_ints(&[&[0, 1], &[-1, 0]])
    }

    pub fn upper() -> Mat2 {
        Self::lower()
    }

    /// `ψ_A = ψ^B ε_{BA}`
    pub fn lower_index(v: &[Cyclo; 2]) -> [Cyclo; 2] {
        let e = Self::lower();
        [0, 1].map(|a| (0..2).map(|b| &v[b] * &e[(b, a)]).sum())
    }

    /// `ψ^A = ε^{AB} ψ_B`
    pub fn raise_index(v: &[Cyclo; 2]) -> [Cyclo; 2] {
        let e = Self::upper();
        [0, 1].map(|a| (0..2).map(|b| &e[(a, b)] * &v[b]).sum())
    }
}

fn det2(u: &Mat2) -> Cyclo {
    &u[(0, 0)] * &u[(1, 1)] - &u[(0, 1)] * &u[(1, 0)]
}

fn check_2x2(u: &Mat2) -> Result<()> {
    if u.rows() != 2 || u.cols() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a 2x2 matrix, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    Ok(())
}

/// `S^{α'}_β` from the four cubic covariance equations, written out term
/// by term before the determinant is recognised.
pub fn induced_s(u: &Mat2) -> Result<Mat2> {
    check_2x2(u)?;
    let (j, j2) = (Cyclo::j(), Cyclo::j2());
    let u = |a: usize, b: usize| u[(a - 1, b - 1)].clone();
    let s11 = u(1, 1) * u(2, 2) * u(1, 1) + &j2 * u(2, 1) * u(1, 2) * u(1, 1) + &j * u(1, 1) * u(1, 2) * u(2, 1);
    let s21 = u(2, 1) * u(1, 2) * u(2, 1) + &j2 * u(1, 1) * u(2, 2) * u(2, 1) + &j * u(2, 1) * u(2, 2) * u(1, 1);
    let s12 = u(1, 2) * u(2, 1) * u(1, 2) + &j2 * u(2, 2) * u(1, 1) * u(1, 2) + &j * u(1, 2) * u(1, 1) * u(2, 2);
    let s22 = u(2, 2) * u(1, 1) * u(2, 2) + &j2 * u(1, 2) * u(2, 1) * u(2, 2) + &j * u(2, 2) * u(2, 1) * u(1, 2);
    Ok(Matrix::from_rows(vec![vec![s11, s12], vec![s21, s22]]))
}

/// `Σ U^{A'}_A U^{B'}_B U^{C'}_C ρ^{α'}_{A'B'C'}` for fixed `α'` and `(A, B, C)`.
fn transformed_component(rho: &RhoTensor, u: &Mat2, alpha: usize, abc: [usize; 3]) -> Cyclo {
    all_triples()
        .map(|p| {
            let r = rho.get(alpha, p);
            if r.is_zero() {
                return Cyclo::zero();
            }
            r * &u[(p[0], abc[0])] * &u[(p[1], abc[1])] * &u[(p[2], abc[2])]
        })
        .sum()
}

/// `S` read off from the general contraction at the representative
/// triples; agrees with `induced_s` for the canonical tensor.
pub fn induced_s_for(rho: &RhoTensor, u: &Mat2) -> Result<Mat2> {
    check_2x2(u)?;
    let mut s = Matrix::zeros(2, 2);
    for alpha in 0..2 {
        for (beta, abc) in REPRESENTATIVE.iter().enumerate() {
            s[(alpha, beta)] = transformed_component(rho, u, alpha, *abc);
        }
    }
    Ok(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoCovarianceReport {
    pub rho_covariant: bool,
    pub epsilon_preserved: bool,
    pub det_u: Cyclo,
    pub det_s: Cyclo,
    pub s: Mat2,
}

impl RhoCovarianceReport {
    pub fn passed(&self) -> bool {
        self.rho_covariant && self.epsilon_preserved
    }
}

/// Check `S^{α'}_β ρ^β_{ABC} = U U U ρ^{α'}` on all sixteen components and
/// `ε_{α'β'} = S^α_{α'} S^β_{β'} ε_{αβ}` with `S^α_{α'}` the inverse of `S`.
pub fn rho_covariance_check_for(rho: &RhoTensor, u: &Mat2) -> Result<RhoCovarianceReport> {
    let s = induced_s_for(rho, u)?;
    let rho_covariant = (0..2).all(|alpha| {
        all_triples().all(|abc| {
            let lhs: Cyclo = (0..2).map(|beta| &s[(alpha, beta)] * rho.get(beta, abc)).sum();
            lhs == transformed_component(rho, u, alpha, abc)
        })
    });
    let epsilon_preserved = match s.inverse() {
        Ok(inv) => {
            let e = EpsilonForm::lower();
            &(&inv.transpose() * &e) * &inv == e
        }
        Err(_) => false,
    };
    Ok(RhoCovarianceReport {
        rho_covariant,
        epsilon_preserved,
        det_u: det2(u),
        det_s: det2(&s),
        s,
    })
}

pub fn rho_covariance_check(u: &Mat2) -> Result<RhoCovarianceReport> {
    rho_covariance_check_for(&RhoTensor::canonical(Variance::Lower), u)
}

/// `U = [[jL₁₁, −jL₁₂], [−jL₂₁, jL₂₂]]`.
pub fn u_from_spinor(l: &Mat2) -> Result<Mat2> {
    check_2x2(l)?;
    let j = Cyclo::j();
    let mj = -Cyclo::j();
    Ok(Matrix::from_rows(vec![
        vec![&j * &l[(0, 0)], &mj * &l[(0, 1)]],
        vec![&mj * &l[(1, 0)], &j * &l[(1, 1)]],
    ]))
}

/// `σ⁰` is the unit matrix, `σ¹˒²˒³` the Pauli matrices.
pub fn sigma(mu: usize) -> Mat2 {
    let (z, o, i) = (Cyclo::zero(), Cyclo::one(), Cyclo::i());
    match mu {
        0 => Matrix::identity(2),
        1 => Matrix::from_rows(vec![vec![z.clone(), o.clone()], vec![o, z]]),
        2 => Matrix::from_rows(vec![vec![z.clone(), -&i], vec![i, z]]),
        3 => Matrix::from_ints(&[&[1, 0], &[0, -1]]),
        _ => panic!("sigma index {mu} out of range"),
    }
}

/// `π^μ_{AḂ}` stored at `pi[μ][(A, Ḃ)]` and `π̄^μ_{ḂA}` at `pi_bar[μ][(Ḃ, A)]`.
/// `σ^μ_{ḂA}` denotes the same components as `σ^μ_{AḂ}` with the index
/// slots swapped, so `pi_bar` holds transposed σ matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiTensor {
    pub pi: [Mat2; 4],
    pub pi_bar: [Mat2; 4],
}

impl Default for PiTensor {
    /// `π = j² i σ`, `π̄ = −j i σ`.
    fn default() -> Self {
        let a = Cyclo::j2() * Cyclo::i();
        let b = -(Cyclo::j() * Cyclo::i());
        Self::from_factors(&a, &b)
    }
}

impl PiTensor {
    pub fn from_factors(pi_factor: &Cyclo, pi_bar_factor: &Cyclo) -> Self {
        PiTensor {
            pi: [0, 1, 2, 3].map(|m| sigma(m).scale(pi_factor)),
            pi_bar: [0, 1, 2, 3].map(|m| sigma(m).transpose().scale(pi_bar_factor)),
        }
    }
}

/// Λ from `Λ^{μ'}_ν π^ν_{AḂ} = U^{A'}_A Ū^{Ḃ'}_Ḃ π^{μ'}_{A'Ḃ'}`, solved as a
/// 16×16 linear system in the entries of Λ.
pub fn spin_to_lorentz(u: &Mat2) -> Result<Mat4> {
    spin_to_lorentz_with(u, &PiTensor::default())
}

pub fn spin_to_lorentz_with(u: &Mat2, pi: &PiTensor) -> Result<Mat4> {
    check_2x2(u)?;
    if det2(u).is_zero() {
        return Err(Error::SingularMatrix);
    }
    let ub = u.conj();
    let mut a = Matrix::zeros(16, 16);
    let mut rhs = Matrix::zeros(16, 1);
    for mu in 0..4 {
        for ai in 0..2 {
            for bi in 0..2 {
                let row = mu * 4 + ai * 2 + bi;
                for nu in 0..4 {
                    a[(row, mu * 4 + nu)] = pi.pi[nu][(ai, bi)].clone();
                }
                let mut acc = Cyclo::zero();
                for ap in 0..2 {
                    for bp in 0..2 {
                        let p = &pi.pi[mu][(ap, bp)];
                        if !p.is_zero() {
                            acc += &(&u[(ap, ai)] * &ub[(bp, bi)] * p);
                        }
                    }
                }
                rhs[(row, 0)] = acc;
            }
        }
    }
    let x = a.solve(&rhs)?;
    let mut lambda = Matrix::zeros(4, 4);
    for mu in 0..4 {
        for nu in 0..4 {
            lambda[(mu, nu)] = x[(mu * 4 + nu, 0)].clone();
        }
    }
    Ok(lambda)
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentEquation {
    pub name: String,
    pub holds: bool,
}

/// The eight Λ–U relations for `μ' = 0, 1`. In the `μ' = 0` group the
/// `±i` equations pair `Λ^{0'}_1` with `Λ^{0'}_2`.
pub fn lorentz_component_equations(u: &Mat2, lambda: &Mat4) -> Vec<ComponentEquation> {
    let ub = u.conj();
    let i = Cyclo::i();
    let l = |m: usize, n: usize| lambda[(m, n)].clone();
    let uu = |a: usize, b: usize| u[(a - 1, b - 1)].clone();
    let bb = |a: usize, b: usize| ub[(a - 1, b - 1)].clone();
    let eqs: Vec<(&str, Cyclo, Cyclo)> = vec![
        ("L00-L03", l(0, 0) - l(0, 3), uu(1, 2) * bb(1, 2) + uu(2, 2) * bb(2, 2)),
        ("L00+L03", l(0, 0) + l(0, 3), uu(1, 1) * bb(1, 1) + uu(2, 1) * bb(2, 1)),
        ("L01-iL02", l(0, 1) - &i * l(0, 2), uu(1, 1) * bb(1, 2) + uu(2, 1) * bb(2, 2)),
        ("L01+iL02", l(0, 1) + &i * l(0, 2), uu(1, 2) * bb(1, 1) + uu(2, 2) * bb(2, 1)),
        ("L10-L13", l(1, 0) - l(1, 3), uu(1, 2) * bb(2, 2) + uu(2, 2) * bb(1, 2)),
        ("L10+L13", l(1, 0) + l(1, 3), uu(1, 1) * bb(2, 1) + uu(2, 1) * bb(1, 1)),
        ("L11-iL12", l(1, 1) - &i * l(1, 2), uu(1, 1) * bb(2, 2) + uu(2, 1) * bb(1, 2)),
        ("L11+iL12", l(1, 1) + &i * l(1, 2), uu(1, 2) * bb(2, 1) + uu(2, 2) * bb(1, 1)),
    ];
    eqs.into_iter()
        .map(|(name, lhs, rhs)| ComponentEquation {
            name: name.to_string(),
            holds: lhs == rhs,
        })
        .collect()
}

/// `g^{μν} = ½ ε^{AC} ε^{ḂḊ} π^μ_{AḂ} π̄^ν_{ḊC}`.
pub fn minkowski_metric() -> Mat4 {
    minkowski_metric_with(&PiTensor::default())
}

pub fn minkowski_metric_with(pi: &PiTensor) -> Mat4 {
    let e = EpsilonForm::upper();
    let half = Cyclo::from_ratio(1, 2);
    let mut g = Matrix::zeros(4, 4);
    for mu in 0..4 {
        for nu in 0..4 {
            let mut acc = Cyclo::zero();
            for a in 0..2 {
                for c in 0..2 {
                    for b in 0..2 {
                        for d in 0..2 {
                            let f = &e[(a, c)] * &e[(b, d)];
                            if f.is_zero() {
                                continue;
                            }
                            acc += &(f * &pi.pi[mu][(a, b)] * &pi.pi_bar[nu][(d, c)]);
                        }
                    }
                }
            }
            g[(mu, nu)] = &acc * &half;
        }
    }
    g
}

pub fn preserves_metric(lambda: &Mat4, g: &Mat4) -> bool {
    &(&lambda.transpose() * g) * lambda == *g
}

#[derive(Clone, Debug, Serialize)]
pub struct BinaryInvarianceReport {
    pub per_mu: [bool; 4],
    pub holds: bool,
}

/// Whether `π^μ_{AḂ} θ^A θ̄^Ḃ − π̄^μ_{ḂA} θ̄^Ḃ θ^A` normalizes to zero under
/// the given phase table, separately for each `μ`.
pub fn binary_invariance_check_with(pi: &PiTensor, phases: PhaseTable) -> Result<BinaryInvarianceReport> {
    let opts = PresentationOptions {
        phases,
        ..Default::default()
    };
    let pres = make_presentation(AlgebraType::CombinedZ6, 2, 1, opts)?;
    let mut per_mu = [false; 4];
    for (mu, slot) in per_mu.iter_mut().enumerate() {
        let mut p = Poly::zero();
        for a in 0..2u16 {
            for b in 0..2u16 {
                let (t, tb) = (Generator::theta(a + 1), Generator::theta_bar(b + 1));
                p.add_term(pi.pi[mu][(a as usize, b as usize)].clone(), Word::new(vec![t, tb]));
                p.add_term(-&pi.pi_bar[mu][(b as usize, a as usize)], Word::new(vec![tb, t]));
            }
        }
        *slot = normalize(&p, &pres)?.is_zero();
    }
    Ok(BinaryInvarianceReport {
        per_mu,
        holds: per_mu.iter().all(|&b| b),
    })
}

/// Binary invariance for the default π tensors under `θθ̄ = −j θ̄θ`.
pub fn binary_invariance_check() -> Result<BinaryInvarianceReport> {
    binary_invariance_check_with(&PiTensor::default(), PhaseTable::invariance_variant())
}
