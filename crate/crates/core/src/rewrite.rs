//! Words, polynomials and canonical normal forms.
//!
//! Every relation family with a rewriting system here is binomial: a word
//! rewrites to a phase times another word, or to zero. Normal forms are
//! reached in two passes:
//!
//! 1. binary phase commutations sort the letters into kind order
//!    `ξ < ξ̄ < θ < θ̄`, with ξ/ξ̄ letters also sorted by index (one sign
//!    per swap, a repeated odd letter kills the word);
//! 2. the contiguous θ block (and θ̄ block) is replaced by its
//!    lexicographically smallest rotation times the accumulated cubic
//!    phase; blocks fixed by rotation and blocks of length four or more
//!    vanish.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::presentation::{
    make_presentation, AlgebraType, Generator, Kind, PhaseTable, Presentation, PresentationOptions,
};
use crate::scalars::Cyclo;

/// A product of generators; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<Generator> for Word {
    fn from(g: Generator) -> Self {
        Word(vec![g])
    }
}

/// Degree first, then lexicographic in the generator order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::unit());
        }
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Cyclo,
    pub word: Word,
}

/// A finite sum of terms, sorted by word, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Cyclo>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_term(Cyclo::one(), w)
    }

    pub fn from_term(coeff: Cyclo, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, w);
        p
    }

    pub fn scalar(c: Cyclo) -> Self {
        Self::from_term(c, Word::unit())
    }

    pub fn add_term(&mut self, coeff: Cyclo, w: Word) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> Cyclo {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Cyclo)> {
        self.terms.iter()
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .map(|(w, c)| Term {
                coeff: c.clone(),
                word: w.clone(),
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::degree)
    }

    pub fn scale(&self, c: &Cyclo) -> Poly {
        let mut out = Poly::zero();
        for (w, k) in &self.terms {
            out.add_term(k * c, w.clone());
        }
        out
    }

    /// Concatenation product in the free algebra.
    pub fn free_mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(a * b, u.concat(v));
            }
        }
        out
    }

    /// The scalar value of a polynomial supported on the unit word.
    pub fn as_scalar(&self) -> Option<Cyclo> {
        match self.terms.len() {
            0 => Some(Cyclo::zero()),
            1 => self.terms.get(&Word::unit()).cloned(),
            _ => None,
        }
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(-c, w.clone());
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (c.is_one(), w.degree()) {
                (true, _) => write!(f, "{w}")?,
                (false, 0) => write!(f, "{c}")?,
                (false, _) => write!(f, "{c}*{w}")?,
            }
        }
        Ok(())
    }
}

/// Sums of `coeff * word` terms, e.g. `t1 t2 - j^2*x1 t1 + (1+j)*tb1`.
/// Juxtaposition and `*` both multiply; generator order is preserved.
impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let toks = tokenize(s)?;
        let mut p = PolyParser { toks, pos: 0 };
        let out = p.sum()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("unexpected trailing input in `{s}`")));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct PolyParser {
    toks: Vec<Tok>,
    pos: usize,
}

impl PolyParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = self.signed_term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.signed_term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.signed_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn signed_term(&mut self) -> Result<Poly> {
        if self.eat_op('-') {
            return Ok(self.signed_term()?.scale(&Cyclo::from_int(-1)));
        }
        if self.eat_op('+') {
            return self.signed_term();
        }
        self.term()
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat_op('*') {
                acc = acc.free_mul(&self.factor()?);
            } else if self.eat_op('/') {
                let d = self
                    .factor()?
                    .as_scalar()
                    .ok_or_else(|| Error::Parse("can only divide by scalars".into()))?;
                acc = acc.scale(&d.inv()?);
            } else if self.starts_factor() {
                acc = acc.free_mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Poly::scalar(Cyclo::from_rational(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                match id.as_str() {
                    "j" => Poly::scalar(Cyclo::j()),
                    "q" => Poly::scalar(Cyclo::q()),
                    "i" => Poly::scalar(Cyclo::i()),
                    "z" => Poly::scalar(Cyclo::zeta_power(1)),
                    _ => Poly::from_word(Word::from(id.parse::<Generator>()?)),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat_op(')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                inner
            }
            other => return Err(Error::Parse(format!("expected a factor, found {other:?}"))),
        };
        if self.eat_op('^') {
            let neg = self.eat_op('-');
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => i64::try_from(n.clone())
                    .map_err(|_| Error::Parse("exponent out of range".into()))?,
                _ => return Err(Error::Parse("expected integer exponent".into())),
            };
            self.pos += 1;
            let s = base
                .as_scalar()
                .ok_or_else(|| Error::Parse("only scalars take exponents".into()))?;
            return Ok(Poly::scalar(s.pow(if neg { -e } else { e })?));
        }
        Ok(base)
    }
}

/// Canonical representative of a cubic block `g^A g^B g^C` under
/// `g^A g^B g^C = φ g^B g^C g^A`.
///
/// Returns `(c, rep)` with `block = c · rep`, where `rep` is the
/// lexicographically smallest rotation, or `None` when the block is fixed
/// by rotation (then `(1 − φ)·block = 0` forces it to vanish).
pub fn canonical_cubic_block<T: Ord + Copy>(block: [T; 3], phase: &Cyclo) -> Option<(Cyclo, [T; 3])> {
    let rot = |k: usize| [block[k % 3], block[(k + 1) % 3], block[(k + 2) % 3]];
    if rot(1) == block {
        return None;
    }
    let k = (0..3).min_by_key(|&k| rot(k)).expect("three rotations");
    Some((phase.pow(k as i64).expect("nonzero phase"), rot(k)))
}

fn sort_key(g: &Generator) -> (Kind, u16) {
    (g.kind, if g.kind.is_odd() { g.index } else { 0 })
}

/// Normal form of a single word: `Some((c, w'))` with `w = c · w'`, or
/// `None` when the word vanishes.
fn normalize_word(
    word: &Word,
    phases: &PhaseTable,
    cubic_phase: impl Fn(Kind) -> Option<Cyclo>,
) -> Option<(Cyclo, Word)> {
    let mut letters = word.letters().to_vec();
    let mut coeff = Cyclo::one();
    // bubble sort keeps the phase bookkeeping explicit
    let n = letters.len();
    for end in (1..n).rev() {
        for i in 0..end {
            let (a, b) = (letters[i], letters[i + 1]);
            if a.kind.is_odd() && a == b {
                return None;
            }
            if sort_key(&a) > sort_key(&b) {
                let phase = phases
                    .swap_phase(a.kind, b.kind)
                    .expect("distinct sort keys imply a binary relation");
                coeff *= &phase;
                letters.swap(i, i + 1);
            }
        }
    }
    if letters.windows(2).any(|p| p[0].kind.is_odd() && p[0] == p[1]) {
        return None;
    }

    let mut i = 0;
    while i < letters.len() {
        let kind = letters[i].kind;
        let end = letters[i..]
            .iter()
            .position(|g| g.kind != kind)
            .map_or(letters.len(), |p| i + p);
        if let Some(phase) = cubic_phase(kind) {
            match end - i {
                len if len >= 4 => return None,
                3 => {
                    let block = [letters[i], letters[i + 1], letters[i + 2]];
                    let (c, rep) = canonical_cubic_block(block, &phase)?;
                    coeff *= &c;
                    letters[i..end].copy_from_slice(&rep);
                }
                _ => {}
            }
        }
        i = end;
    }
    Some((coeff, Word::new(letters)))
}

/// Whether `normalize` supports this presentation.
pub fn has_rewriting_system(pres: &Presentation) -> bool {
    matches!(
        pres.algebra(),
        AlgebraType::Lambda | AlgebraType::LambdaBar | AlgebraType::CombinedZ6 | AlgebraType::Grassmann
    )
}

/// Canonical form of `p` in the quotient algebra of `pres`.
pub fn normalize(p: &Poly, pres: &Presentation) -> Result<Poly> {
    if !has_rewriting_system(pres) {
        return Err(Error::NoRewriteSystem(pres.algebra().to_string()));
    }
    let mut out = Poly::zero();
    for (w, c) in p.terms() {
        pres.check_word(w)?;
        if let Some((phase, nf)) = normalize_word(w, pres.phases(), |k| pres.cubic_phase(k)) {
            out.add_term(c * &phase, nf);
        }
    }
    Ok(out)
}

pub fn normalize_single(w: &Word, pres: &Presentation) -> Result<Poly> {
    normalize(&Poly::from_word(w.clone()), pres)
}

pub fn multiply(p: &Poly, q: &Poly, pres: &Presentation) -> Result<Poly> {
    normalize(&p.free_mul(q), pres)
}

/// Normalized sum of all six orderings of three degree-one words.
pub fn six_sum(a: &Word, b: &Word, c: &Word, pres: &Presentation) -> Result<Poly> {
    for w in [a, b, c] {
        if w.degree() != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: w.degree(),
            });
        }
    }
    let f = [a, b, c];
    let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0], [1, 0, 2], [0, 2, 1]];
    let mut sum = Poly::zero();
    for p in perms {
        sum.add_term(Cyclo::one(), f[p[0]].concat(f[p[1]]).concat(f[p[2]]));
    }
    normalize(&sum, pres)
}

/// One row of the ω scan: whether both six-sums vanish for `ω = ζᵏ`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct OmegaScanRow {
    pub zeta_exponent: usize,
    pub omega: Cyclo,
    pub theta_xi_theta_vanishes: bool,
    pub xi_theta_xi_vanishes: bool,
}

/// Scan `ω` over the twelve powers of ζ₁₂ in `ξθ = ωθξ` and record which
/// six-sums `θ¹ξ¹θ²` and `ξ¹θ¹ξ²` vanish.
pub fn omega_scan() -> Result<Vec<OmegaScanRow>> {
    let w = |s: &str| s.parse::<Word>().expect("static word");
    (0..12)
        .map(|k| {
            let omega = Cyclo::zeta_power(k as i64);
            let opts = PresentationOptions {
                phases: PhaseTable::with_omega(omega.clone()),
                include_conjugates: false,
                ..Default::default()
            };
            let pres = make_presentation(AlgebraType::CombinedZ6, 2, 2, opts)?;
            let txt = six_sum(&w("t1"), &w("x1"), &w("t2"), &pres)?;
            let xtx = six_sum(&w("x1"), &w("t1"), &w("x2"), &pres)?;
            Ok(OmegaScanRow {
                zeta_exponent: k,
                omega,
                theta_xi_theta_vanishes: txt.is_zero(),
                xi_theta_xi_vanishes: xtx.is_zero(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::make_presentation;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn pres(t: AlgebraType, n_theta: usize, n_xi: usize) -> Presentation {
        make_presentation(t, n_theta, n_xi, Default::default()).unwrap()
    }

    fn combined() -> Presentation {
        pres(AlgebraType::CombinedZ6, 3, 2)
    }

    #[test]
    fn word_order_is_degree_then_lex() {
        assert!(w("t1 t2") < w("t1 t1 t1"));
        assert!(w("x1 t1") < w("t1 x1"));
        assert!(w("t1 t1 t2") < w("t1 t2 t1"));
        assert_eq!(w("1"), Word::unit());
    }

    #[test]
    fn poly_parse_display_roundtrip() {
        let poly = p("t1 t2 - j^2*x1 t1 + (1+j)*tb1 + 3/2");
        assert_eq!(poly.coeff(&w("x1 t1")), -Cyclo::j2());
        assert_eq!(poly.coeff(&w("tb1")), -Cyclo::j2());
        assert_eq!(poly.coeff(&Word::unit()), Cyclo::from_ratio(3, 2));
        assert_eq!(p(&poly.to_string()), poly);
        assert!(p("t1 - t1").is_zero());
        assert!("t1 +".parse::<Poly>().is_err());
        assert!("t1 ^ 2".parse::<Poly>().is_err());
    }

    #[test]
    fn cyclic_rotation_phase() {
        let nf = normalize_single(&w("t2 t3 t1"), &combined()).unwrap();
        assert_eq!(nf, Poly::from_term(Cyclo::j2(), w("t1 t2 t3")));
        let nf = normalize_single(&w("t3 t1 t2"), &combined()).unwrap();
        assert_eq!(nf, Poly::from_term(Cyclo::j(), w("t1 t2 t3")));
    }

    #[test]
    fn conjugate_rotation_phase() {
        let nf = normalize_single(&w("tb2 tb3 tb1"), &combined()).unwrap();
        assert_eq!(nf, Poly::from_term(Cyclo::j(), w("tb1 tb2 tb3")));
    }

    #[test]
    fn quartic_and_fixed_blocks_vanish() {
        let c = combined();
        assert!(normalize_single(&w("t1 t2 t3 t1"), &c).unwrap().is_zero());
        assert!(normalize_single(&w("t1 t1 t1"), &c).unwrap().is_zero());
        assert!(normalize_single(&w("tb1 tb2 tb1 tb2"), &c).unwrap().is_zero());
        assert!(normalize_single(&w("x1 x1"), &c).unwrap().is_zero());
        assert!(normalize_single(&w("x1 t1 x1"), &c).unwrap().is_zero());
        // a quartic θ block scattered by other letters still vanishes
        assert!(normalize_single(&w("t1 x1 t2 tb1 t1 t2"), &c).unwrap().is_zero());
    }

    #[test]
    fn binary_phases() {
        let c = combined();
        assert_eq!(
            normalize_single(&w("t1 x1"), &c).unwrap(),
            Poly::from_term(Cyclo::j2(), w("x1 t1"))
        );
        assert_eq!(
            normalize_single(&w("tb1 t1"), &c).unwrap(),
            Poly::from_term(Cyclo::j2(), w("t1 tb1"))
        );
        assert_eq!(
            normalize_single(&w("x2 x1"), &c).unwrap(),
            Poly::from_term(Cyclo::from_int(-1), w("x1 x2"))
        );
        assert_eq!(
            normalize_single(&w("xb1 x1"), &c).unwrap(),
            Poly::from_term(Cyclo::from_int(-1), w("x1 xb1"))
        );
        // ξ θ̄ = j² θ̄ ξ
        assert_eq!(
            normalize_single(&w("tb1 x1"), &c).unwrap(),
            Poly::from_term(Cyclo::j(), w("x1 tb1"))
        );
    }

    #[test]
    fn multiply_examples() {
        let c = combined();
        let prod = multiply(&p("t1 t2"), &p("t3"), &c).unwrap();
        assert_eq!(prod, Poly::from_word(w("t1 t2 t3")));
        let anti = &multiply(&p("x1"), &p("x2"), &c).unwrap() + &multiply(&p("x2"), &p("x1"), &c).unwrap();
        assert!(anti.is_zero());
        assert!(multiply(&p("t1 t2 t3"), &p("t1"), &c).unwrap().is_zero());
    }

    #[test]
    fn six_sums() {
        let c = combined();
        assert!(six_sum(&w("t1"), &w("x1"), &w("t2"), &c).unwrap().is_zero());
        assert!(six_sum(&w("x1"), &w("t2"), &w("x2"), &c).unwrap().is_zero());
        assert!(six_sum(&w("t1"), &w("t1"), &w("t1"), &c).unwrap().is_zero());
        assert!(six_sum(&w("t1 t2"), &w("t1"), &w("t1"), &c).is_err());
    }

    #[test]
    fn six_sum_holds_for_two_kind_triples() {
        let c = pres(AlgebraType::CombinedZ6, 2, 2);
        let gens = c.alphabet().to_vec();
        for &a in &gens {
            for &b in &gens {
                for &d in &gens {
                    let kinds: std::collections::BTreeSet<_> = [a.kind, b.kind, d.kind].into();
                    if kinds.len() > 2 {
                        continue;
                    }
                    let s = six_sum(&a.into(), &b.into(), &d.into(), &c).unwrap();
                    assert!(s.is_zero(), "{a} {b} {d}: {s}");
                }
            }
        }
    }

    #[test]
    fn six_sum_fails_for_three_distinct_even_odd_kinds() {
        // θ, ξ, θ̄ together: every ordering lands on ξθθ̄ with phases
        // 1, j², j², 1, 1, j², summing to 3(1 + j²) ≠ 0.
        let c = pres(AlgebraType::CombinedZ6, 2, 2);
        let s = six_sum(&w("t1"), &w("x1"), &w("tb1"), &c).unwrap();
        let expected = Cyclo::from_int(3) * (Cyclo::one() + Cyclo::j2());
        assert_eq!(s, Poly::from_term(expected, w("x1 t1 tb1")));
    }

    #[test]
    fn omega_scan_selects_primitive_cube_roots() {
        let rows = omega_scan().unwrap();
        let passing: Vec<_> = rows
            .iter()
            .filter(|r| r.theta_xi_theta_vanishes)
            .map(|r| r.zeta_exponent)
            .collect();
        assert_eq!(passing, vec![4, 8]);
        assert!(rows.iter().all(|r| r.xi_theta_xi_vanishes));
    }

    #[test]
    fn lambda_bar_uses_conjugate_phase() {
        let lb = pres(AlgebraType::LambdaBar, 3, 0);
        assert_eq!(
            normalize_single(&w("tb2 tb3 tb1"), &lb).unwrap(),
            Poly::from_term(Cyclo::j(), w("tb1 tb2 tb3"))
        );
        assert!(matches!(
            normalize_single(&w("t1"), &lb),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn unsupported_presentations_are_reported() {
        let l0 = pres(AlgebraType::Lambda0, 2, 0);
        assert!(matches!(
            normalize_single(&w("t1"), &l0),
            Err(Error::NoRewriteSystem(_))
        ));
    }

    #[test]
    fn invariance_variant_phase() {
        let opts = PresentationOptions {
            phases: PhaseTable::invariance_variant(),
            ..Default::default()
        };
        let c = make_presentation(AlgebraType::CombinedZ6, 2, 2, opts).unwrap();
        assert_eq!(
            normalize_single(&w("tb1 t1"), &c).unwrap(),
            Poly::from_term(-Cyclo::j2(), w("t1 tb1"))
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word_in(pres: &Presentation, max_len: usize) -> impl Strategy<Value = Word> {
            let gens = pres.alphabet().to_vec();
            proptest::collection::vec(proptest::sample::select(gens), 0..=max_len).prop_map(Word::new)
        }

        proptest! {
            #[test]
            fn normalize_is_idempotent(word in word_in(&combined(), 7)) {
                let c = combined();
                let once = normalize_single(&word, &c).unwrap();
                prop_assert_eq!(normalize(&once, &c).unwrap(), once);
            }

            #[test]
            fn normalize_preserves_grade(word in word_in(&combined(), 7)) {
                let c = combined();
                let g = c.grade_of(&word).unwrap();
                for (nf, _) in normalize_single(&word, &c).unwrap().terms() {
                    prop_assert_eq!(c.grade_of(nf).unwrap(), g);
                }
            }

            #[test]
            fn pure_theta_quartics_vanish(word in proptest::collection::vec(1u16..=3, 4..=6)) {
                let c = combined();
                let theta = Word::new(word.iter().map(|&i| Generator::theta(i)).collect());
                let bar = Word::new(word.iter().map(|&i| Generator::theta_bar(i)).collect());
                prop_assert!(normalize_single(&theta, &c).unwrap().is_zero());
                prop_assert!(normalize_single(&bar, &c).unwrap().is_zero());
            }

            #[test]
            fn multiplication_is_associative(
                a in word_in(&combined(), 3),
                b in word_in(&combined(), 3),
                d in word_in(&combined(), 3),
            ) {
                let c = combined();
                let (a, b, d) = (Poly::from_word(a), Poly::from_word(b), Poly::from_word(d));
                let left = multiply(&multiply(&a, &b, &c).unwrap(), &d, &c).unwrap();
                let right = multiply(&a, &multiply(&b, &d, &c).unwrap(), &c).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }
}
