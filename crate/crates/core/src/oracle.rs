//! Quotient slices of the free algebra by exact sparse row reduction.
//!
//! Columns are free words ordered by degree then lexicographically. Each
//! stored row has its largest column as pivot with coefficient 1, so the
//! words that survive as a basis are the smallest representatives of
//! their residue classes.

use std::collections::{BTreeMap, HashMap};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::presentation::{AlgebraType, Generator, Kind, Presentation};
use crate::rewrite::{Poly, Word};
use crate::scalars::Cyclo;

pub const DEFAULT_DEGREE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub degree_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

type SparseRow = Vec<(usize, Cyclo)>;

/// Semi-reduced echelon form keyed by pivot column.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: HashMap<usize, SparseRow>,
}

impl Echelon {
    /// Fully reduce `v`; the result only touches non-pivot columns and is
    /// sorted by descending column.
    fn reduce(&self, v: impl IntoIterator<Item = (usize, Cyclo)>) -> SparseRow {
        let mut work: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (c, x) in v {
            add_into(&mut work, c, x);
        }
        let mut out = Vec::new();
        while let Some((c, x)) = work.pop_last() {
            match self.rows.get(&c) {
                Some(row) => {
                    for (c2, y) in &row[1..] {
                        add_into(&mut work, *c2, -(&x * y));
                    }
                }
                None => out.push((c, x)),
            }
        }
        out
    }

    /// Returns whether the row enlarged the row space.
    fn insert(&mut self, v: impl IntoIterator<Item = (usize, Cyclo)>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero leading coefficient");
            for (_, x) in r.iter_mut() {
                *x *= &inv;
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }
}

fn add_into(work: &mut BTreeMap<usize, Cyclo>, c: usize, x: Cyclo) {
    if x.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match work.entry(c) {
        Entry::Vacant(e) => {
            e.insert(x);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &x;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Column indexing for all words of degree `min_degree..=max_degree`.
#[derive(Clone, Debug)]
struct WordSpace {
    alphabet: Vec<Generator>,
    position: HashMap<Generator, usize>,
    min_degree: usize,
    max_degree: usize,
    offsets: Vec<usize>,
}

impl WordSpace {
    fn new(alphabet: &[Generator], min_degree: usize, max_degree: usize) -> Self {
        let k = alphabet.len();
        let mut offsets = vec![0; max_degree + 2];
        for d in 0..=max_degree {
            let count = if d < min_degree { 0 } else { k.pow(d as u32) };
            offsets[d + 1] = offsets[d] + count;
        }
        WordSpace {
            alphabet: alphabet.to_vec(),
            position: alphabet.iter().enumerate().map(|(i, g)| (*g, i)).collect(),
            min_degree,
            max_degree,
            offsets,
        }
    }

    fn len(&self) -> usize {
        self.offsets[self.max_degree + 1]
    }

    fn index(&self, w: &Word) -> Result<usize> {
        let d = w.degree();
        if d < self.min_degree || d > self.max_degree {
            return Err(Error::DegreeMismatch {
                expected: self.max_degree,
                got: d,
            });
        }
        let mut idx = 0usize;
        for g in w.letters() {
            let p = self
                .position
                .get(g)
                .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
            idx = idx * self.alphabet.len() + p;
        }
        Ok(self.offsets[d] + idx)
    }

    fn word(&self, col: usize) -> Word {
        let d = (0..=self.max_degree)
            .find(|&d| col < self.offsets[d + 1])
            .expect("column in range");
        words_of_degree_nth(&self.alphabet, d, col - self.offsets[d])
    }
}

fn words_of_degree_nth(alphabet: &[Generator], d: usize, mut idx: usize) -> Word {
    let k = alphabet.len();
    let mut letters = vec![alphabet[0]; d];
    for slot in letters.iter_mut().rev() {
        *slot = alphabet[idx % k];
        idx /= k;
    }
    Word::new(letters)
}

/// All words of degree `d` in increasing order.
pub fn words_of_degree(alphabet: &[Generator], d: usize) -> Vec<Word> {
    if alphabet.is_empty() {
        return if d == 0 { vec![Word::unit()] } else { vec![] };
    }
    let n = alphabet.len().pow(d as u32);
    (0..n).map(|i| words_of_degree_nth(alphabet, d, i)).collect()
}

/// Rows `u·r·v` with every framed word inside the degree window.
fn framed_rows<'a>(
    space: &'a WordSpace,
    relations: &'a [Poly],
    translate: &'a dyn Fn(&Word) -> Word,
) -> impl Iterator<Item = Result<SparseRow>> + 'a {
    let (lo, hi) = (space.min_degree, space.max_degree);
    relations.iter().flat_map(move |r| {
        let top = r.max_degree().unwrap_or(0);
        let low = r.terms().map(|(w, _)| w.degree()).min().unwrap_or(0);
        let extra_max = hi.saturating_sub(top);
        let fits = top <= hi;
        (0..=extra_max).filter(move |e| fits && low + e >= lo).flat_map(move |extra| {
            (0..=extra).flat_map(move |k| {
                let us = words_of_degree(&space.alphabet, k);
                let vs = words_of_degree(&space.alphabet, extra - k);
                us.into_iter().flat_map(move |u| {
                    let vs = vs.clone();
                    vs.into_iter().map(move |v| {
                        r.terms()
                            .map(|(w, c)| {
                                let framed = u.concat(&translate(w)).concat(&v);
                                space.index(&framed).map(|i| (i, c.clone()))
                            })
                            .collect::<Result<SparseRow>>()
                    })
                })
            })
        })
    })
}

/// A degree slice (or, for non-homogeneous presentations, the filtered
/// piece of degree at most `degree`) of the quotient algebra.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    pub degree: usize,
    pub filtered: bool,
    /// Representatives of a basis of the slice, in increasing order.
    pub basis: Vec<Word>,
    pub dimension: usize,
    /// Number of free words spanning the slice.
    pub word_count: usize,
    space: WordSpace,
    echelon: Echelon,
    basis_position: HashMap<usize, usize>,
}

impl QuotientBasis {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Words that are reducible modulo the ideal slice.
    pub fn pivot_words(&self) -> Vec<Word> {
        let mut cols: Vec<_> = self.echelon.rows.keys().copied().collect();
        cols.sort_unstable();
        cols.into_iter().map(|c| self.space.word(c)).collect()
    }

    pub fn is_basis_word(&self, w: &Word) -> bool {
        self.space
            .index(w)
            .map(|c| !self.echelon.is_pivot(c))
            .unwrap_or(false)
    }

    /// Residue of `p` written on the basis words.
    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        let v = p
            .terms()
            .map(|(w, c)| self.index_checked(w).map(|i| (i, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Poly::zero();
        for (c, x) in self.echelon.reduce(v) {
            out.add_term(x, self.space.word(c));
        }
        Ok(out)
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Exact coordinates of the residue class of `w` in `basis`.
    pub fn coords(&self, w: &Word) -> Result<Vec<Cyclo>> {
        self.coords_of(&Poly::from_word(w.clone()))
    }

    pub fn coords_of(&self, p: &Poly) -> Result<Vec<Cyclo>> {
        let mut out = vec![Cyclo::zero(); self.dimension];
        for (w, c) in self.reduce(p)?.terms() {
            let col = self.space.index(w)?;
            out[self.basis_position[&col]] = c.clone();
        }
        Ok(out)
    }

    fn index_checked(&self, w: &Word) -> Result<usize> {
        let d = w.degree();
        let ok = if self.filtered { d <= self.degree } else { d == self.degree };
        if !ok {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: d,
            });
        }
        self.space.index(w)
    }
}

impl Serialize for QuotientBasis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuotientBasis", 4)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("filtered", &self.filtered)?;
        st.serialize_field("dimension", &self.dimension)?;
        let words: Vec<String> = self.basis.iter().map(Word::to_string).collect();
        st.serialize_field("basis", &words)?;
        st.end()
    }
}

fn check_cap(degree: usize, config: &OracleConfig) -> Result<()> {
    if degree > config.degree_cap {
        return Err(Error::DegreeCapExceeded {
            requested: degree,
            cap: config.degree_cap,
        });
    }
    Ok(())
}

fn build(
    alphabet: &[Generator],
    relations: &[Poly],
    degree: usize,
    filtered: bool,
    translate: &dyn Fn(&Word) -> Word,
) -> Result<QuotientBasis> {
    let space = WordSpace::new(alphabet, if filtered { 0 } else { degree }, degree);
    let mut echelon = Echelon::default();
    for row in framed_rows(&space, relations, translate) {
        echelon.insert(row?);
    }
    let basis_cols: Vec<usize> = (space.offsets[space.min_degree]..space.len())
        .filter(|c| !echelon.is_pivot(*c))
        .collect();
    let basis: Vec<Word> = basis_cols.iter().map(|&c| space.word(c)).collect();
    let basis_position = basis_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    Ok(QuotientBasis {
        degree,
        filtered,
        dimension: basis.len(),
        word_count: space.len() - space.offsets[space.min_degree],
        basis,
        space,
        echelon,
        basis_position,
    })
}

/// The degree-`degree` slice of the quotient; for non-homogeneous
/// presentations the filtered piece of all words of degree at most `degree`.
pub fn quotient_basis(pres: &Presentation, degree: usize) -> Result<QuotientBasis> {
    quotient_basis_with(pres, degree, &OracleConfig::default())
}

pub fn quotient_basis_with(pres: &Presentation, degree: usize, config: &OracleConfig) -> Result<QuotientBasis> {
    check_cap(degree, config)?;
    build(
        pres.alphabet(),
        pres.relations(),
        degree,
        !pres.is_homogeneous(),
        &|w| w.clone(),
    )
}

/// Whether every framed relation of `contained` lies in the degree slice of
/// the ideal of `container`. Alphabets are identified position by position.
pub fn ideal_contains(container: &Presentation, contained: &Presentation, degree: usize) -> Result<bool> {
    check_cap(degree, &OracleConfig::default())?;
    let (a, b) = (container.alphabet(), contained.alphabet());
    if a.len() != b.len() {
        return Err(Error::AlphabetMismatch(a.len(), b.len()));
    }
    if !container.is_homogeneous() || !contained.is_homogeneous() {
        return Err(Error::InvalidArgument(
            "ideal containment is defined here for homogeneous presentations".into(),
        ));
    }
    let slice = quotient_basis(container, degree)?;
    let map: HashMap<Generator, Generator> = b.iter().copied().zip(a.iter().copied()).collect();
    let translate = |w: &Word| Word::new(w.letters().iter().map(|g| map[g]).collect());
    for row in framed_rows(&slice.space, contained.relations(), &translate) {
        if !slice.echelon.reduce(row?).is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseReport {
    /// All `θ^A ξ^β` classes vanish.
    pub theta_xi: bool,
    /// All `ξ^β θ^A` classes vanish.
    pub xi_theta: bool,
    /// Same for `θ̄ ξ̄` and `ξ̄ θ̄`; `None` without conjugate generators.
    pub conjugate: Option<bool>,
    pub collapsed: bool,
    pub filtered_dimension: usize,
}

/// Whether the mixed products `θξ` vanish once the non-homogeneous cubic
/// relations are framed up to degree four.
pub fn nonhomogeneous_collapse_check(pres: &Presentation) -> Result<CollapseReport> {
    if pres.algebra() != AlgebraType::CombinedZ6NonHomogeneous {
        return Err(Error::InvalidArgument(format!(
            "collapse check needs the non-homogeneous presentation, got {}",
            pres.algebra()
        )));
    }
    let slice = quotient_basis(pres, 4)?;
    let vanish = |even: Kind, odd: Kind, even_first: bool| -> Result<bool> {
        let evens: Vec<_> = pres.alphabet().iter().filter(|g| g.kind == even).collect();
        let odds: Vec<_> = pres.alphabet().iter().filter(|g| g.kind == odd).collect();
        for &&e in &evens {
            for &&o in &odds {
                let w = if even_first {
                    Word::new(vec![e, o])
                } else {
                    Word::new(vec![o, e])
                };
                if !slice.contains(&Poly::from_word(w))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    let theta_xi = vanish(Kind::Theta, Kind::Xi, true)?;
    let xi_theta = vanish(Kind::Theta, Kind::Xi, false)?;
    let conjugate = if pres.options().include_conjugates {
        Some(vanish(Kind::ThetaBar, Kind::XiBar, true)? && vanish(Kind::ThetaBar, Kind::XiBar, false)?)
    } else {
        None
    };
    Ok(CollapseReport {
        theta_xi,
        xi_theta,
        conjugate,
        collapsed: theta_xi && xi_theta && conjugate.unwrap_or(true),
        filtered_dimension: slice.dimension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariance::{RhoTensor, Variance};
    use crate::presentation::{make_presentation, PresentationOptions};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pres(t: AlgebraType, n: usize) -> Presentation {
        make_presentation(t, n, 0, Default::default()).unwrap()
    }

    #[test]
    fn lambda_slices() {
        let b = quotient_basis(&pres(AlgebraType::Lambda, 2), 3).unwrap();
        assert_eq!(b.dimension, 2);
        assert_eq!(b.basis, vec![w("t1 t1 t2"), w("t1 t2 t2")]);
        assert_eq!(quotient_basis(&pres(AlgebraType::Lambda, 2), 4).unwrap().dimension, 0);
        let dims: Vec<_> = (0..=3)
            .map(|d| quotient_basis(&pres(AlgebraType::Lambda, 3), d).unwrap().dimension)
            .collect();
        assert_eq!(dims, vec![1, 3, 9, 8]);
    }

    #[test]
    fn lambda_coords() {
        let b = quotient_basis(&pres(AlgebraType::Lambda, 3), 3).unwrap();
        let k = b.basis.iter().position(|x| *x == w("t1 t2 t3")).unwrap();
        let c = b.coords(&w("t2 t3 t1")).unwrap();
        for (i, x) in c.iter().enumerate() {
            assert_eq!(*x, if i == k { Cyclo::j2() } else { Cyclo::zero() });
        }
        assert!(b.coords(&w("t1 t1 t1")).unwrap().iter().all(Cyclo::is_zero));
        let unit = b.coords(&b.basis[3]).unwrap();
        assert!(unit[3].is_one() && unit.iter().filter(|x| !x.is_zero()).count() == 1);
        assert!(matches!(b.coords(&w("t1 t2")), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn cap_is_enforced() {
        let p = pres(AlgebraType::Lambda, 1);
        assert!(matches!(
            quotient_basis(&p, 7),
            Err(Error::DegreeCapExceeded { requested: 7, cap: 6 })
        ));
        assert_eq!(
            quotient_basis_with(&p, 7, &OracleConfig { degree_cap: 8 }).unwrap().dimension,
            0
        );
    }

    #[test]
    fn s0_degree_three_counts_multisets() {
        // full symmetry identifies each word with its sorted multiset
        for n in 1..=3usize {
            let b = quotient_basis(&pres(AlgebraType::S0, n), 3).unwrap();
            let multisets = (n * (n + 1) * (n + 2)) / 6;
            assert_eq!(b.dimension, multisets, "N = {n}");
        }
    }

    #[test]
    fn containment_diagrams() {
        let at = |t| pres(t, 2);
        use AlgebraType::*;
        assert!(ideal_contains(&at(Lambda), &at(Lambda1), 3).unwrap());
        assert!(ideal_contains(&at(Lambda1), &at(Lambda0), 3).unwrap());
        assert!(!ideal_contains(&at(Lambda1), &at(Lambda), 3).unwrap());
        assert!(ideal_contains(&at(S1), &at(S), 3).unwrap());
        assert!(ideal_contains(&at(S0), &at(S1), 3).unwrap());
        assert!(!ideal_contains(&at(S), &at(S1), 3).unwrap());
        assert!(matches!(
            ideal_contains(&at(Lambda), &pres(Lambda, 3), 3),
            Err(Error::AlphabetMismatch(2, 3))
        ));
    }

    #[test]
    fn grassmann_slices_are_binomial() {
        let g = make_presentation(AlgebraType::Grassmann, 0, 3, Default::default()).unwrap();
        let dims: Vec<_> = (0..=4).map(|d| quotient_basis(&g, d).unwrap().dimension).collect();
        assert_eq!(dims, vec![1, 3, 3, 1, 0]);
    }

    #[test]
    fn nonhomogeneous_collapse() {
        let p = make_presentation(AlgebraType::CombinedZ6NonHomogeneous, 2, 2, Default::default()).unwrap();
        let r = nonhomogeneous_collapse_check(&p).unwrap();
        assert!(r.theta_xi && r.xi_theta && r.collapsed);
        assert_eq!(r.conjugate, Some(true));
        let zero = PresentationOptions {
            rho: Some(RhoTensor::zero(Variance::Upper)),
            rho_bar: Some(RhoTensor::zero(Variance::Upper)),
            ..Default::default()
        };
        let p = make_presentation(AlgebraType::CombinedZ6NonHomogeneous, 2, 2, zero).unwrap();
        let r = nonhomogeneous_collapse_check(&p).unwrap();
        assert!(!r.theta_xi && !r.collapsed);
    }
}
