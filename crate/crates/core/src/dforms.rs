//! Z₃-graded exterior forms `dxⁱ` (grade 1) and `d²xⁱ` (grade 2) with
//! polynomial coefficients, and the differential `d` with `d³ = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::presentation::{Generator, Kind};
use crate::rewrite::{canonical_cubic_block, Word};
use crate::scalars::Cyclo;

/// Exponent vector with trailing zeros trimmed.
type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

/// Polynomial in `x¹, x², …` with scalar coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyFn {
    terms: BTreeMap<Monomial, Cyclo>,
}

impl PolyFn {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Cyclo) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Cyclo::one())
    }

    /// The coordinate `xⁱ`, 1-based.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are numbered from 1");
        let mut m = vec![0; i];
        m[i - 1] = 1;
        let mut p = Self::zero();
        p.add_term(m, Cyclo::one());
        p
    }

    pub fn monomial(exponents: &[u32], c: Cyclo) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents.to_vec(), c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
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

    /// Highest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn scale(&self, c: &Cyclo) -> PolyFn {
        let mut out = PolyFn::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn add(&self, o: &PolyFn) -> PolyFn {
        let mut out = self.clone();
        for (m, x) in &o.terms {
            out.add_term(m.clone(), x.clone());
        }
        out
    }

    pub fn sub(&self, o: &PolyFn) -> PolyFn {
        self.add(&o.scale(&Cyclo::from_int(-1)))
    }

    pub fn mul(&self, o: &PolyFn) -> PolyFn {
        let mut out = PolyFn::zero();
        for (m1, a) in &self.terms {
            for (m2, b) in &o.terms {
                let len = m1.len().max(m2.len());
                let m = (0..len)
                    .map(|k| m1.get(k).copied().unwrap_or(0) + m2.get(k).copied().unwrap_or(0))
                    .collect();
                out.add_term(m, a * b);
            }
        }
        out
    }

    /// `∂f/∂xⁱ`, 1-based.
    pub fn partial(&self, i: usize) -> PolyFn {
        let mut out = PolyFn::zero();
        for (m, c) in &self.terms {
            let Some(&e) = m.get(i - 1) else { continue };
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i - 1] -= 1;
            out.add_term(m2, c * &Cyclo::from_int(e as i64));
        }
        out
    }
}

impl fmt::Display for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            match (c.is_one(), vars.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "({c})*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

fn split_top_level(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev_op = true;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !prev_op {
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
            prev_op = true;
            continue;
        }
        if depth == 0 && (ch == '+' || ch == '-') && cur.trim().is_empty() {
            if ch == '-' {
                neg = !neg;
            }
            continue;
        }
        if !ch.is_whitespace() {
            prev_op = matches!(ch, '*' | '/' | '^' | '(');
        }
        cur.push(ch);
    }
    out.push((neg, cur));
    out
}

/// Sums of products such as `x1^2*x2 + 3*x3 - (1+j)*x1`.
impl FromStr for PolyFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = PolyFn::zero();
        for (neg, term) in split_top_level(s) {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let mut p = PolyFn::one();
            for factor in term.split('*').map(str::trim) {
                p = p.mul(&parse_factor(factor)?);
            }
            if neg {
                p = p.scale(&Cyclo::from_int(-1));
            }
            out = out.add(&p);
        }
        Ok(out)
    }
}

fn parse_factor(f: &str) -> Result<PolyFn> {
    if let Some(rest) = f.strip_prefix('x') {
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, e),
            None => (rest, "1"),
        };
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable `{f}`")))?;
        let e: u32 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
        if i == 0 {
            return Err(Error::Parse("variables are numbered from 1".into()));
        }
        let mut m = vec![0; i];
        m[i - 1] = e;
        return Ok(PolyFn::monomial(&m, Cyclo::one()));
    }
    Ok(PolyFn::constant(f.parse()?))
}

/// Normal form of a word in `dx`/`d²x`: `Some((c, w'))` with `w = c·w'`.
fn normalize_form_word(word: &Word) -> Option<(Cyclo, Word)> {
    let mut letters = word.letters().to_vec();
    let mut coeff = Cyclo::one();
    // d²xᵏ dxⁱ = j² dxⁱ d²xᵏ
    let n = letters.len();
    for end in (1..n).rev() {
        for i in 0..end {
            if letters[i].kind == Kind::D2x && letters[i + 1].kind == Kind::Dx {
                coeff *= &Cyclo::j2();
                letters.swap(i, i + 1);
            }
        }
    }
    let split = letters.iter().position(|g| g.kind == Kind::D2x).unwrap_or(n);
    if n - split >= 2 || split >= 4 {
        return None;
    }
    if split == 3 {
        let block = [letters[0], letters[1], letters[2]];
        let (c, rep) = canonical_cubic_block(block, &Cyclo::j())?;
        coeff *= &c;
        letters[..3].copy_from_slice(&rep);
    }
    Some((coeff, Word::new(letters)))
}

fn word_grade(w: &[Generator]) -> u32 {
    w.iter()
        .map(|g| match g.kind {
            Kind::Dx => 1,
            Kind::D2x => 2,
            _ => 0,
        })
        .sum::<u32>()
        % 3
}

/// Finite sum of coefficient functions times form words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedForm {
    terms: BTreeMap<Word, PolyFn>,
}

impl GradedForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_fn(f: PolyFn) -> Self {
        let mut g = Self::zero();
        g.add_term(Word::unit(), f);
        g
    }

    pub fn dx(i: u16) -> Self {
        Self::from_word(Word::new(vec![Generator::new(Kind::Dx, i)]))
    }

    pub fn d2x(i: u16) -> Self {
        Self::from_word(Word::new(vec![Generator::new(Kind::D2x, i)]))
    }

    pub fn from_word(w: Word) -> Self {
        let mut g = Self::zero();
        g.add_term(w, PolyFn::one());
        g
    }

    pub fn add_term(&mut self, w: Word, f: PolyFn) {
        if f.is_zero() {
            return;
        }
        let cur = self.terms.remove(&w).unwrap_or_default().add(&f);
        if !cur.is_zero() {
            self.terms.insert(w, cur);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &PolyFn)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &GradedForm) -> GradedForm {
        let mut out = self.clone();
        for (w, f) in &o.terms {
            out.add_term(w.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, o: &GradedForm) -> GradedForm {
        self.add(&o.scale(&Cyclo::from_int(-1)))
    }

    pub fn scale(&self, c: &Cyclo) -> GradedForm {
        self.scale_fn(&PolyFn::constant(c.clone()))
    }

    pub fn scale_fn(&self, f: &PolyFn) -> GradedForm {
        let mut out = GradedForm::zero();
        for (w, g) in &self.terms {
            out.add_term(w.clone(), g.mul(f));
        }
        out
    }

    /// Product of forms; coefficient functions are central.
    pub fn mul(&self, o: &GradedForm) -> GradedForm {
        let mut out = GradedForm::zero();
        for (u, f) in &self.terms {
            for (v, g) in &o.terms {
                out.add_term(u.concat(v), f.mul(g));
            }
        }
        normalize_form(&out)
    }

    /// The Z₃ grade if the form is homogeneous.
    pub fn grade(&self) -> Option<u32> {
        let mut grades = self.terms.keys().map(|w| word_grade(w.letters()));
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }
}

impl fmt::Display for GradedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, g)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if w.degree() == 0 {
                write!(f, "({g})")?;
            } else {
                write!(f, "({g}) {w}")?;
            }
        }
        Ok(())
    }
}

pub fn normalize_form(form: &GradedForm) -> GradedForm {
    let mut out = GradedForm::zero();
    for (w, f) in form.terms() {
        if let Some((c, nf)) = normalize_form_word(w) {
            out.add_term(nf, f.scale(&c));
        }
    }
    out
}

/// `d` on a single form word, by the twisted Leibniz rule
/// `d(ωθ) = (dω)θ + j^{grade ω} ω dθ`.
fn d_word(w: &Word) -> Vec<(Cyclo, Word)> {
    let letters = w.letters();
    let mut out = Vec::new();
    for (p, g) in letters.iter().enumerate() {
        if g.kind != Kind::Dx {
            continue;
        }
        let phase = Cyclo::j().pow(word_grade(&letters[..p]) as i64).expect("nonzero");
        let mut v = letters.to_vec();
        v[p] = Generator::new(Kind::D2x, g.index);
        out.push((phase, Word::new(v)));
    }
    out
}

/// Exterior derivative, returned in normal form.
pub fn d(form: &GradedForm) -> GradedForm {
    let mut out = GradedForm::zero();
    for (w, f) in form.terms() {
        for i in 1..=f.num_vars() {
            let df = f.partial(i);
            if df.is_zero() {
                continue;
            }
            let dxi = Word::new(vec![Generator::new(Kind::Dx, i as u16)]);
            out.add_term(dxi.concat(w), df);
        }
        for (c, v) in d_word(w) {
            out.add_term(v, f.scale(&c));
        }
    }
    normalize_form(&out)
}

pub fn d3_check(f: &PolyFn) -> bool {
    d(&d(&d(&GradedForm::from_fn(f.clone())))).is_zero()
}
