//! Exact arithmetic in the cyclotomic field Q(ζ₁₂).
//!
//! Elements are stored on the power basis `{1, ζ, ζ², ζ³}` where
//! `ζ = e^{iπ/6}` has minimal polynomial `x⁴ − x² + 1`. Every root of
//! unity the algebras need lives here: `−1 = ζ⁶`, `i = ζ³`, `q = ζ²`,
//! `j = ζ⁴`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

/// `ζᵏ` on the power basis, for `k = 0..12`.
const ZETA_POWERS: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

/// An element `c0 + c1·ζ + c2·ζ² + c3·ζ³` of Q(ζ₁₂).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo {
    c: [BigRational; 4],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            c: [
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut z = Self::zero();
        z.c[0] = r;
        z
    }

    pub fn from_coeffs(c: [BigRational; 4]) -> Self {
        Cyclo { c }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    /// `ζᵏ`; any integer exponent, reduced mod 12.
    pub fn zeta_power(k: i64) -> Self {
        let row = ZETA_POWERS[k.rem_euclid(12) as usize];
        Cyclo {
            c: [rat(row[0]), rat(row[1]), rat(row[2]), rat(row[3])],
        }
    }

    /// Primitive cube root of unity `j = e^{2πi/3} = ζ⁴`.
    pub fn j() -> Self {
        Self::zeta_power(4)
    }

    pub fn j2() -> Self {
        Self::zeta_power(8)
    }

    /// Primitive sixth root of unity `q = e^{2πi/6} = ζ²`.
    pub fn q() -> Self {
        Self::zeta_power(2)
    }

    pub fn i() -> Self {
        Self::zeta_power(3)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    /// Fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Image under the field automorphism `ζ ↦ ζᵏ` (`k` coprime to 12).
    pub fn galois(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let row = ZETA_POWERS[(i as i64 * k).rem_euclid(12) as usize];
            for (o, r) in out.c.iter_mut().zip(row) {
                if r != 0 {
                    *o += ci * rat(r);
                }
            }
        }
        out
    }

    /// Complex conjugation, `ζ ↦ ζ¹¹`.
    pub fn conj(&self) -> Self {
        self.galois(11)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> BigRational {
        let p = self * &self.galois(5) * self.galois(7) * self.galois(11);
        debug_assert!(p.as_rational().is_some());
        p.c[0].clone()
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let others = self.galois(5) * self.galois(7) * self.galois(11);
        let n = (self * &others).c[0].clone();
        Ok(others.scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo {
            c: [
                &self.c[0] * r,
                &self.c[1] * r,
                &self.c[2] * r,
                &self.c[3] * r,
            ],
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut result = Self::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        Ok(result)
    }

    /// `Some((r, k))` when the element equals `r·ζᵏ` with `r > 0` rational.
    pub fn as_scaled_root(&self) -> Option<(BigRational, usize)> {
        if self.is_zero() {
            return None;
        }
        for k in 0..12 {
            let candidate = self * &Self::zeta_power(-(k as i64));
            if let Some(r) = candidate.as_rational() {
                if r.is_positive() {
                    return Some((r.clone(), k));
                }
            }
        }
        None
    }

    /// Exponent `k` with `self == ζᵏ`, if any.
    pub fn root_of_unity_exponent(&self) -> Option<usize> {
        match self.as_scaled_root() {
            Some((r, k)) if r.is_one() => Some(k),
            _ => None,
        }
    }

    /// Approximate complex value, for display only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, ck) in self.c.iter().enumerate() {
            let v = ratio_to_f64(ck);
            let angle = std::f64::consts::PI * k as f64 / 6.0;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

impl Default for Cyclo {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for Cyclo {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        Cyclo {
            c: [
                &self.c[0] + &o.c[0],
                &self.c[1] + &o.c[1],
                &self.c[2] + &o.c[2],
                &self.c[3] + &o.c[3],
            ],
        }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &Cyclo) -> Cyclo {
        Cyclo {
            c: [
                &self.c[0] - &o.c[0],
                &self.c[1] - &o.c[1],
                &self.c[2] - &o.c[2],
                &self.c[3] - &o.c[3],
            ],
        }
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &Cyclo) -> Cyclo {
        // Fast paths: most coefficients met in practice are scaled roots of
        // unity with one or two nonzero basis coordinates.
        if self.is_zero() || o.is_zero() {
            return Cyclo::zero();
        }
        let mut prod: [BigRational; 7] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + k] += a * b;
                }
            }
        }
        let [mut c0, mut c1, mut c2, mut c3, c4, c5, c6] = prod;
        // ζ⁶ = −1, ζ⁵ = ζ³ − ζ, ζ⁴ = ζ² − 1
        c0 -= &c6;
        c3 += &c5;
        c1 -= &c5;
        c2 += &c4;
        c0 -= &c4;
        Cyclo {
            c: [c0, c1, c2, c3],
        }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, o: Cyclo) -> Cyclo {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, o: &Cyclo) -> Cyclo {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Cyclo> for &'a Cyclo {
            type Output = Cyclo;
            fn $m(self, o: Cyclo) -> Cyclo {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, o: &Cyclo) {
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, o: &Cyclo) {
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl MulAssign<&Cyclo> for Cyclo {
    fn mul_assign(&mut self, o: &Cyclo) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Self {
        iter.fold(Cyclo::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl std::iter::Product for Cyclo {
    fn product<I: Iterator<Item = Cyclo>>(iter: I) -> Self {
        iter.fold(Cyclo::one(), |acc, x| acc * x)
    }
}

/// Names used when printing `ζᵏ` (sign folded in for `k ≥ 6`).
const ROOT_NAMES: [&str; 12] = [
    "1", "z", "q", "i", "j", "z^5", "-1", "-z", "j^2", "-i", "-j", "-z^5",
];

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some((r, k)) = self.as_scaled_root() {
            let name = ROOT_NAMES[k];
            if r.is_one() {
                return write!(f, "{name}");
            }
            let rs = fmt_rational(&r);
            return match name {
                "1" => write!(f, "{rs}"),
                "-1" => write!(f, "-{rs}"),
                n if n.starts_with('-') => write!(f, "-{rs}*{}", &n[1..]),
                n => write!(f, "{rs}*{n}"),
            };
        }
        let mut parts = Vec::new();
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let coeff = fmt_rational(ck);
            parts.push(match k {
                0 => coeff,
                1 => format!("{coeff}*z"),
                _ => format!("{coeff}*z^{k}"),
            });
        }
        write!(f, "({})", parts.join(" + ").replace("+ -", "- "))
    }
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Scalar expressions: integers, `p/q`, `z^k`, `j`, `q`, `i`, with `+ - * / ^`
/// and parentheses.
impl FromStr for Cyclo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = ScalarParser {
            src: s,
            chars: s.char_indices().collect(),
            pos: 0,
        };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(v)
    }
}

struct ScalarParser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl ScalarParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in scalar `{}`",
            self.chars.get(self.pos).map_or(self.src.len(), |c| c.0),
            self.src
        ))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Cyclo, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Cyclo, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Cyclo, Error> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Cyclo, Error> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            self.skip_ws();
            let e = self.integer()?;
            let e: i64 = e
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        text.parse().map_err(|_| self.error("bad integer"))
    }

    fn atom(&mut self) -> Result<Cyclo, Error> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                Ok(Cyclo::from_rational(BigRational::from_integer(self.integer()?)))
            }
            Some(c @ ('j' | 'q' | 'i' | 'z')) => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_alphanumeric()) {
                    return Err(self.error("unknown identifier"));
                }
                Ok(match c {
                    'j' => Cyclo::j(),
                    'q' => Cyclo::q(),
                    'i' => Cyclo::i(),
                    _ => Cyclo::zeta_power(1),
                })
            }
            _ => Err(self.error("expected scalar")),
        }
    }
}
