//! Per-degree dimensions of quotient algebras and their closed forms.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{quotient_basis_with, OracleConfig};
use crate::presentation::{AlgebraType, Presentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub algebra: AlgebraType,
    #[serde(rename = "N")]
    pub theta_count: usize,
    pub n: usize,
    /// Dimensions from degree 0 upward.
    pub coefficients: Vec<u64>,
}

pub fn hilbert_coeffs(pres: &Presentation, dmax: usize) -> Result<HilbertSeries> {
    hilbert_coeffs_with(pres, dmax, &OracleConfig::default())
}

pub fn hilbert_coeffs_with(pres: &Presentation, dmax: usize, config: &OracleConfig) -> Result<HilbertSeries> {
    if !pres.is_homogeneous() {
        return Err(Error::InvalidArgument(
            "Hilbert series need a graded (homogeneous) presentation".into(),
        ));
    }
    let coefficients = (0..=dmax)
        .map(|d| quotient_basis_with(pres, d, config).map(|b| b.dimension as u64))
        .collect::<Result<_>>()?;
    Ok(HilbertSeries {
        algebra: pres.algebra(),
        theta_count: pres.theta_count(),
        n: pres.xi_count(),
        coefficients,
    })
}

/// `1, N, N², (N³ − N)/3` and zero beyond, truncated to `dmax`.
pub fn lambda_closed_form(n: usize, dmax: usize) -> Vec<u64> {
    let n = n as u64;
    let head = [1, n, n * n, (n * n * n - n) / 3];
    (0..=dmax).map(|d| head.get(d).copied().unwrap_or(0)).collect()
}

/// Total dimension of the positive-degree part of Λ: `N + N² + (N³ − N)/3`.
pub fn lambda_total_dimension(n: usize) -> u64 {
    lambda_closed_form(n, 3)[1..].iter().sum()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exterior algebra on `n` generators: binomial coefficients.
pub fn grassmann_closed_form(n: usize, dmax: usize) -> Vec<u64> {
    (0..=dmax as u64).map(|d| binomial(n as u64, d)).collect()
}

/// The closed form for algebras that have one here.
pub fn closed_form(pres: &Presentation, dmax: usize) -> Option<Vec<u64>> {
    match pres.algebra() {
        AlgebraType::Lambda | AlgebraType::LambdaBar => Some(lambda_closed_form(pres.theta_count(), dmax)),
        AlgebraType::Grassmann => Some(grassmann_closed_form(pres.xi_count(), dmax)),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub algebra: AlgebraType,
    #[serde(rename = "N")]
    pub theta_count: usize,
    pub n: usize,
    pub coefficients: Vec<u64>,
    pub closed_form: Option<Vec<u64>>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

pub fn hilbert_report(pres: &Presentation, dmax: usize, config: &OracleConfig) -> Result<HilbertReport> {
    let series = hilbert_coeffs_with(pres, dmax, config)?;
    let closed = closed_form(pres, dmax);
    Ok(HilbertReport {
        algebra: series.algebra,
        theta_count: series.theta_count,
        n: series.n,
        matches: closed.as_ref().map(|c| *c == series.coefficients),
        closed_form: closed,
        coefficients: series.coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::make_presentation;

    #[test]
    fn closed_forms() {
        assert_eq!(lambda_closed_form(2, 3), vec![1, 2, 4, 2]);
        assert_eq!(lambda_closed_form(3, 3), vec![1, 3, 9, 8]);
        assert_eq!(lambda_closed_form(1, 4), vec![1, 1, 1, 0, 0]);
        assert_eq!(grassmann_closed_form(2, 3), vec![1, 2, 1, 0]);
    }

    #[test]
    fn total_dimension_uses_the_summand_form() {
        for n in 1..=6u64 {
            let total = lambda_total_dimension(n as usize);
            assert_eq!(total, n * (n + 1) * (n + 2) / 3);
        }
        // the printed simplification (N³ + N² + 2N)/3 is not an integer at N = 2
        assert_ne!((8 + 4 + 4) % 3, 0);
    }

    #[test]
    fn series_examples() {
        let lam = make_presentation(AlgebraType::Lambda, 2, 0, Default::default()).unwrap();
        assert_eq!(hilbert_coeffs(&lam, 4).unwrap().coefficients, vec![1, 2, 4, 2, 0]);
        let bar = make_presentation(AlgebraType::LambdaBar, 2, 0, Default::default()).unwrap();
        assert_eq!(hilbert_coeffs(&bar, 4).unwrap().coefficients, vec![1, 2, 4, 2, 0]);
        let g = make_presentation(AlgebraType::Grassmann, 0, 2, Default::default()).unwrap();
        let r = hilbert_report(&g, 3, &OracleConfig::default()).unwrap();
        assert_eq!(r.coefficients, vec![1, 2, 1, 0]);
        assert_eq!(r.matches, Some(true));
    }

    #[test]
    fn cap_propagates() {
        let lam = make_presentation(AlgebraType::Lambda, 1, 0, Default::default()).unwrap();
        assert!(matches!(hilbert_coeffs(&lam, 7), Err(Error::DegreeCapExceeded { .. })));
    }
}
