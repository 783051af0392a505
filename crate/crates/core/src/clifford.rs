//! The three-generator ternary Clifford algebra realised by 3×3 matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Mat3, Matrix};
use crate::scalars::Cyclo;

fn mat(rows: [[Cyclo; 3]; 3]) -> Mat3 {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect())
}

/// `Q₁, Q₂, Q₃`.
pub fn q_matrices() -> [Mat3; 3] {
    let (o, l, j, j2) = (Cyclo::zero, Cyclo::one, Cyclo::j, Cyclo::j2);
    [
        mat([[o(), l(), o()], [o(), o(), j()], [j2(), o(), o()]]),
        mat([[o(), j(), o()], [o(), o(), l()], [j2(), o(), o()]]),
        mat([[o(), l(), o()], [o(), o(), l()], [l(), o(), o()]]),
    ]
}

/// `Q†₁, Q†₂, Q†₃` as printed.
pub fn q_dagger_matrices() -> [Mat3; 3] {
    let (o, l, j, j2) = (Cyclo::zero, Cyclo::one, Cyclo::j, Cyclo::j2);
    [
        mat([[o(), o(), j()], [l(), o(), o()], [o(), j2(), o()]]),
        mat([[o(), o(), j()], [j2(), o(), o()], [o(), l(), o()]]),
        mat([[o(), o(), l()], [l(), o(), o()], [o(), l(), o()]]),
    ]
}

/// `η_{abc}` with 0-based indices.
pub fn eta(a: usize, b: usize, c: usize) -> Cyclo {
    match (a, b, c) {
        (0, 0, 0) | (1, 1, 1) | (2, 2, 2) => Cyclo::one(),
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => Cyclo::one(),
        (1, 0, 2) | (2, 1, 0) | (0, 2, 1) => Cyclo::j2(),
        _ => Cyclo::zero(),
    }
}

pub fn eta_bar(a: usize, b: usize, c: usize) -> Cyclo {
    eta(a, b, c).conj()
}

/// `abc + φ·bca + φ²·cab` for `φ ∈ {1, j, j²}`.
pub fn ternary_bracket(a: &Mat3, b: &Mat3, c: &Mat3, phase: &Cyclo) -> Result<Mat3> {
    if ![Cyclo::one(), Cyclo::j(), Cyclo::j2()].contains(phase) {
        return Err(Error::InvalidPhase(phase.to_string()));
    }
    let phase2 = phase * phase;
    let abc = &(a * b) * c;
    let bca = &(b * c) * a;
    let cab = &(c * a) * b;
    Ok(abc.add(&bca.scale(phase)).add(&cab.scale(&phase2)))
}

fn symmetric_sum(q: &[Mat3; 3], a: usize, b: usize, c: usize) -> Mat3 {
    ternary_bracket(&q[a], &q[b], &q[c], &Cyclo::one()).expect("unit phase")
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleCheck {
    pub triple: [usize; 3],
    pub expected: Cyclo,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliffordReport {
    /// `QₐQᵦQ꜀ + QᵦQ꜀Qₐ + Q꜀QₐQᵦ = 3η_{abc}·1` for all 27 triples (1-based).
    pub anticommutator: Vec<TripleCheck>,
    /// `{Q₁,Q₂,Q₃}_j`, `{Q₁,Q₂,Q₃}_{j²}`, `{Q₂,Q₁,Q₃}_j`, `{Q₂,Q₁,Q₃}_{j²}` vanish.
    pub skew_brackets: [bool; 4],
    /// The printed `Q†` are the conjugate transposes of the `Q`.
    pub dagger_is_adjoint: bool,
    /// `Q†ₐQ†ᵦQ†꜀ + cyclic = 3 η̄_{cba}·1`, the adjoint of the identity above.
    pub conjugate: Vec<TripleCheck>,
    /// Whether the conjugate sums also equal `3 η̄_{abc}·1` index for index.
    pub conjugate_same_order: bool,
    pub eta_bar_is_conjugate: bool,
    pub passed: bool,
}

pub fn verify_clifford() -> CliffordReport {
    let q = q_matrices();
    let qd = q_dagger_matrices();
    let id = Matrix::identity(3);
    let three = Cyclo::from_int(3);
    let triples: Vec<[usize; 3]> = (0..27).map(|k| [k / 9, k / 3 % 3, k % 3]).collect();

    let anticommutator: Vec<TripleCheck> = triples
        .iter()
        .map(|&[a, b, c]| {
            let expected = eta(a, b, c);
            TripleCheck {
                triple: [a + 1, b + 1, c + 1],
                holds: symmetric_sum(&q, a, b, c) == id.scale(&(&three * &expected)),
                expected,
            }
        })
        .collect();

    let vanishes = |a: usize, b: usize, c: usize, phase: Cyclo| {
        ternary_bracket(&q[a], &q[b], &q[c], &phase)
            .expect("cube-root phase")
            .is_zero()
    };
    let skew_brackets = [
        vanishes(0, 1, 2, Cyclo::j()),
        vanishes(0, 1, 2, Cyclo::j2()),
        vanishes(1, 0, 2, Cyclo::j()),
        vanishes(1, 0, 2, Cyclo::j2()),
    ];

    let dagger_is_adjoint = q.iter().zip(&qd).all(|(m, d)| m.adjoint() == *d);

    let conjugate: Vec<TripleCheck> = triples
        .iter()
        .map(|&[a, b, c]| {
            let expected = eta_bar(c, b, a);
            TripleCheck {
                triple: [a + 1, b + 1, c + 1],
                holds: symmetric_sum(&qd, a, b, c) == id.scale(&(&three * &expected)),
                expected,
            }
        })
        .collect();
    let conjugate_same_order = triples
        .iter()
        .all(|&[a, b, c]| symmetric_sum(&qd, a, b, c) == id.scale(&(&three * &eta_bar(a, b, c))));
    let eta_bar_is_conjugate = triples
        .iter()
        .all(|&[a, b, c]| eta_bar(a, b, c) == eta(a, b, c).conj());

    let passed = anticommutator.iter().all(|t| t.holds)
        && skew_brackets.iter().all(|&b| b)
        && dagger_is_adjoint
        && conjugate.iter().all(|t| t.holds)
        && eta_bar_is_conjugate;
    CliffordReport {
        anticommutator,
        skew_brackets,
        dagger_is_adjoint,
        conjugate,
        conjugate_same_order,
        eta_bar_is_conjugate,
        passed,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SimilarityReport {
    pub det_p: Cyclo,
    pub failures: Vec<[usize; 3]>,
    pub passed: bool,
}

/// Whether `Q̃ₐ = P⁻¹QₐP` satisfy the same ternary identity with the same η.
pub fn similarity_check(p: &Mat3) -> Result<SimilarityReport> {
    if p.rows() != 3 || p.cols() != 3 {
        return Err(Error::InvalidArgument("P must be 3x3".into()));
    }
    let det_p = p.det();
    if det_p.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let p_inv = p.inverse()?;
    let q = q_matrices().map(|m| &(&p_inv * &m) * p);
    let id = Matrix::identity(3);
    let three = Cyclo::from_int(3);
    let failures: Vec<[usize; 3]> = (0..27)
        .map(|k| [k / 9, k / 3 % 3, k % 3])
        .filter(|&[a, b, c]| symmetric_sum(&q, a, b, c) != id.scale(&(&three * &eta(a, b, c))))
        .map(|[a, b, c]| [a + 1, b + 1, c + 1])
        .collect();
    Ok(SimilarityReport {
        det_p,
        passed: failures.is_empty(),
        failures,
    })
}
