//! Generator alphabets, gradings and relation sets of the graded algebras.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::Serialize;

use crate::covariance::{RhoTensor, Variance};
use crate::error::{Error, Result};
use crate::rewrite::{Poly, Word};
use crate::scalars::Cyclo;

/// Generator families, listed in canonical normal-form order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Xi,
    XiBar,
    Theta,
    ThetaBar,
    Dx,
    D2x,
}

impl Kind {
    pub fn token_prefix(self) -> &'static str {
        match self {
            Kind::Xi => "x",
            Kind::XiBar => "xb",
            Kind::Theta => "t",
            Kind::ThetaBar => "tb",
            Kind::Dx => "dx",
            Kind::D2x => "ddx",
        }
    }

    /// Grades carried by a generator of this kind.
    ///
    /// Z₆ grades follow the θ→1, θ̄→5, ξ,ξ̄→3 assignment; the form
    /// generators use the pair-table image of their Z₃ grade.
    pub fn grade(self) -> Grade {
        match self {
            Kind::Theta => Grade::new(1, 0, 1),
            Kind::ThetaBar => Grade::new(2, 0, 5),
            Kind::Xi | Kind::XiBar => Grade::new(0, 1, 3),
            Kind::Dx => Grade::new(1, 0, 2),
            Kind::D2x => Grade::new(2, 0, 4),
        }
    }

    /// Kinds whose same-kind products anticommute.
    pub fn is_odd(self) -> bool {
        matches!(self, Kind::Xi | Kind::XiBar)
    }
}

/// A single generator such as `θ²` (`t2`) or `ξ̄¹` (`xb1`); indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: Kind,
    pub index: u16,
}

impl Generator {
    pub fn new(kind: Kind, index: u16) -> Self {
        Generator { kind, index }
    }

    pub fn theta(index: u16) -> Self {
        Self::new(Kind::Theta, index)
    }

    pub fn theta_bar(index: u16) -> Self {
        Self::new(Kind::ThetaBar, index)
    }

    pub fn xi(index: u16) -> Self {
        Self::new(Kind::Xi, index)
    }

    pub fn xi_bar(index: u16) -> Self {
        Self::new(Kind::XiBar, index)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.token_prefix(), self.index)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // longest prefixes first
        const PREFIXES: [(&str, Kind); 6] = [
            ("ddx", Kind::D2x),
            ("dx", Kind::Dx),
            ("tb", Kind::ThetaBar),
            ("xb", Kind::XiBar),
            ("t", Kind::Theta),
            ("x", Kind::Xi),
        ];
        for (prefix, kind) in PREFIXES {
            if let Some(rest) = s.strip_prefix(prefix) {
                if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                    let index: u16 = rest
                        .parse()
                        .map_err(|_| Error::Parse(format!("generator index too large: `{s}`")))?;
                    if index == 0 {
                        return Err(Error::Parse(format!("generator indices start at 1: `{s}`")));
                    }
                    return Ok(Generator::new(kind, index));
                }
            }
        }
        Err(Error::Parse(format!("not a generator token: `{s}`")))
    }
}

/// Combined grade: Z₃ and Z₂ components plus an independently carried Z₆ grade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Grade {
    pub z3: u8,
    pub z2: u8,
    pub z6: u8,
}

impl Grade {
    pub fn new(z3: u8, z2: u8, z6: u8) -> Self {
        Grade {
            z3: z3 % 3,
            z2: z2 % 2,
            z6: z6 % 6,
        }
    }

    pub fn pair(self) -> (u8, u8) {
        (self.z3, self.z2)
    }
}

impl Add for Grade {
    type Output = Grade;
    fn add(self, o: Grade) -> Grade {
        Grade::new(self.z3 + o.z3, self.z2 + o.z2, self.z6 + o.z6)
    }
}

/// Pairs `(z3, z2)` listed by the power of `q` they correspond to.
const PAIR_OF_Q_POWER: [(u8, u8); 6] = [(0, 0), (2, 1), (1, 0), (0, 1), (2, 0), (1, 1)];

/// The exponent `k` of `qᵏ` corresponding to a `Z₃ × Z₂` pair.
pub fn z6_iso(z3: u8, z2: u8) -> u8 {
    let key = (z3 % 3, z2 % 2);
    PAIR_OF_Q_POWER
        .iter()
        .position(|&p| p == key)
        .expect("every pair is in the table") as u8
}

pub fn z6_iso_inverse(k: u8) -> (u8, u8) {
    PAIR_OF_Q_POWER[(k % 6) as usize]
}

/// Add two `Z₃ × Z₂` pairs componentwise.
pub fn add_pairs(a: (u8, u8), b: (u8, u8)) -> (u8, u8) {
    ((a.0 + b.0) % 3, (a.1 + b.1) % 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraType {
    S,
    SBar,
    S1,
    S0,
    Lambda0,
    Lambda1,
    Lambda,
    LambdaBar,
    CombinedZ6,
    CombinedZ6NonHomogeneous,
    /// Ordinary Grassmann algebra on the ξ generators alone.
    Grassmann,
}

impl AlgebraType {
    pub const ALL: [AlgebraType; 11] = [
        AlgebraType::S,
        AlgebraType::SBar,
        AlgebraType::S1,
        AlgebraType::S0,
        AlgebraType::Lambda0,
        AlgebraType::Lambda1,
        AlgebraType::Lambda,
        AlgebraType::LambdaBar,
        AlgebraType::CombinedZ6,
        AlgebraType::CombinedZ6NonHomogeneous,
        AlgebraType::Grassmann,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraType::S => "s",
            AlgebraType::SBar => "s-bar",
            AlgebraType::S1 => "s1",
            AlgebraType::S0 => "s0",
            AlgebraType::Lambda0 => "lambda0",
            AlgebraType::Lambda1 => "lambda1",
            AlgebraType::Lambda => "lambda",
            AlgebraType::LambdaBar => "lambda-bar",
            AlgebraType::CombinedZ6 => "combined",
            AlgebraType::CombinedZ6NonHomogeneous => "combined-nonhom",
            AlgebraType::Grassmann => "grassmann",
        }
    }

    pub fn is_combined(self) -> bool {
        matches!(
            self,
            AlgebraType::CombinedZ6 | AlgebraType::CombinedZ6NonHomogeneous
        )
    }

    pub fn is_s_family(self) -> bool {
        matches!(
            self,
            AlgebraType::S | AlgebraType::SBar | AlgebraType::S1 | AlgebraType::S0
        )
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for AlgebraType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for AlgebraType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        AlgebraType::ALL
            .into_iter()
            .find(|t| t.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown algebra type `{s}`")))
    }
}

/// Binary commutation phases between generator families.
///
/// Each field `φ` is read as the relation named after it, e.g.
/// `xi_theta`: `ξ θ = φ θ ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseTable {
    /// `ξ^α θ^B = ω θ^B ξ^α`
    pub xi_theta: Cyclo,
    /// `θ^A θ̄^B = φ θ̄^B θ^A`
    pub theta_thetabar: Cyclo,
    /// `ξ^α θ̄^B = φ θ̄^B ξ^α`
    pub xi_thetabar: Cyclo,
    /// `θ^A ξ̄^α = φ ξ̄^α θ^A`
    pub theta_xibar: Cyclo,
    /// `ξ̄^α θ̄^B = φ θ̄^B ξ̄^α`
    pub xibar_thetabar: Cyclo,
}

impl Default for PhaseTable {
    fn default() -> Self {
        PhaseTable {
            xi_theta: Cyclo::j(),
            theta_thetabar: Cyclo::j(),
            xi_thetabar: Cyclo::j2(),
            theta_xibar: Cyclo::j2(),
            xibar_thetabar: Cyclo::j2(),
        }
    }
}

impl PhaseTable {
    /// Variant with `θ θ̄ = −j θ̄ θ`, used by the invariance constructions.
    pub fn invariance_variant() -> Self {
        PhaseTable {
            theta_thetabar: -Cyclo::j(),
            ..Self::default()
        }
    }

    pub fn with_omega(omega: Cyclo) -> Self {
        PhaseTable {
            xi_theta: omega,
            ..Self::default()
        }
    }

    /// The phase `φ` with `later · earlier = φ · earlier · later`, where
    /// `later` sorts after `earlier` in the canonical kind order. `None`
    /// for same-kind even generators, which have no binary relation.
    pub fn swap_phase(&self, later: Kind, earlier: Kind) -> Option<Cyclo> {
        use Kind::*;
        let inv = |c: &Cyclo| c.inv().expect("phases are nonzero");
        Some(match (later, earlier) {
            (Xi, Xi) | (XiBar, XiBar) | (XiBar, Xi) => Cyclo::from_int(-1),
            (Theta, Xi) => inv(&self.xi_theta),
            (Theta, XiBar) => self.theta_xibar.clone(),
            (ThetaBar, Xi) => inv(&self.xi_thetabar),
            (ThetaBar, XiBar) => inv(&self.xibar_thetabar),
            (ThetaBar, Theta) => inv(&self.theta_thetabar),
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationOptions {
    pub phases: PhaseTable,
    /// Add θ̄ and ξ̄ generators to the combined algebras.
    pub include_conjugates: bool,
    /// Structure constants of `θθθ = ρ ξ`; canonical tensor when `None`.
    pub rho: Option<RhoTensor>,
    /// Structure constants of `θ̄θ̄θ̄ = ρ̄ ξ̄`; conjugate of `rho` when `None`.
    pub rho_bar: Option<RhoTensor>,
}

impl Default for PresentationOptions {
    fn default() -> Self {
        PresentationOptions {
            phases: PhaseTable::default(),
            include_conjugates: true,
            rho: None,
            rho_bar: None,
        }
    }
}

/// A fully instantiated presentation: alphabet plus relation polynomials.
#[derive(Clone, Debug)]
pub struct Presentation {
    algebra: AlgebraType,
    theta_count: usize,
    xi_count: usize,
    options: PresentationOptions,
    alphabet: Vec<Generator>,
    relations: Vec<Poly>,
}

fn word(gens: &[Generator]) -> Word {
    Word::new(gens.to_vec())
}

fn triples(n: usize) -> impl Iterator<Item = [u16; 3]> {
    let n = n as u16;
    (1..=n).flat_map(move |a| (1..=n).flat_map(move |b| (1..=n).map(move |c| [a, b, c])))
}

/// `Σ coeffᵢ · (gens permuted by permᵢ)` for a triple of generators.
fn cubic_combination(gens: [Generator; 3], perms: &[([usize; 3], Cyclo)]) -> Poly {
    let mut p = Poly::zero();
    for (perm, coeff) in perms {
        p.add_term(coeff.clone(), word(&[gens[perm[0]], gens[perm[1]], gens[perm[2]]]));
    }
    p
}

const ID: [usize; 3] = [0, 1, 2];
const CYC1: [usize; 3] = [1, 2, 0];
const CYC2: [usize; 3] = [2, 0, 1];
const ODD: [[usize; 3]; 3] = [[2, 1, 0], [1, 0, 2], [0, 2, 1]];

pub fn make_presentation(
    algebra: AlgebraType,
    theta_count: usize,
    xi_count: usize,
    options: PresentationOptions,
) -> Result<Presentation> {
    let invalid = |m: &str| Err(Error::InvalidPresentation(m.to_string()));
    let theta_count = if algebra == AlgebraType::Grassmann {
        0
    } else {
        if theta_count == 0 {
            return invalid("at least one theta-type generator is required");
        }
        theta_count
    };
    let xi_count = match algebra {
        AlgebraType::Grassmann | AlgebraType::CombinedZ6 | AlgebraType::CombinedZ6NonHomogeneous => {
            if xi_count == 0 {
                return invalid("this algebra needs at least one xi generator (n >= 1)");
            }
            xi_count
        }
        _ => 0,
    };
    if theta_count > u16::MAX as usize || xi_count > u16::MAX as usize {
        return invalid("too many generators");
    }

    let mut options = options;
    if algebra == AlgebraType::CombinedZ6NonHomogeneous {
        if theta_count != 2 || xi_count != 2 {
            return invalid("the non-homogeneous relations are defined for N = n = 2");
        }
        let rho = options
            .rho
            .get_or_insert_with(|| RhoTensor::canonical(Variance::Upper))
            .clone();
        options.rho_bar.get_or_insert_with(|| rho.conjugate());
    }

    let conj = options.include_conjugates && algebra.is_combined();
    let mut alphabet = Vec::new();
    let xis = |k: Kind| (1..=xi_count as u16).map(move |i| Generator::new(k, i));
    let thetas = |k: Kind| (1..=theta_count as u16).map(move |i| Generator::new(k, i));
    alphabet.extend(xis(Kind::Xi));
    if conj {
        alphabet.extend(xis(Kind::XiBar));
    }
    match algebra {
        AlgebraType::LambdaBar => alphabet.extend(thetas(Kind::ThetaBar)),
        AlgebraType::Grassmann => {}
        _ => alphabet.extend(thetas(Kind::Theta)),
    }
    if conj {
        alphabet.extend(thetas(Kind::ThetaBar));
    }
    alphabet.sort();

    let mut pres = Presentation {
        algebra,
        theta_count,
        xi_count,
        options,
        alphabet,
        relations: Vec::new(),
    };
    pres.relations = pres.instantiate_relations();
    Ok(pres)
}

impl Presentation {
    pub fn algebra(&self) -> AlgebraType {
        self.algebra
    }

    pub fn theta_count(&self) -> usize {
        self.theta_count
    }

    pub fn xi_count(&self) -> usize {
        self.xi_count
    }

    pub fn options(&self) -> &PresentationOptions {
        &self.options
    }

    pub fn phases(&self) -> &PhaseTable {
        &self.options.phases
    }

    /// Generators in canonical order.
    pub fn alphabet(&self) -> &[Generator] {
        &self.alphabet
    }

    pub fn contains(&self, g: Generator) -> bool {
        self.alphabet.binary_search(&g).is_ok()
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|g| !self.contains(**g)) {
            Some(g) => Err(Error::UnknownGenerator(g.to_string())),
            None => Ok(()),
        }
    }

    /// All relation polynomials.
    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    /// Relations whose longest word has exactly `degree` letters.
    pub fn relations_at(&self, degree: usize) -> Vec<Poly> {
        self.relations
            .iter()
            .filter(|r| r.max_degree() == Some(degree))
            .cloned()
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.algebra != AlgebraType::CombinedZ6NonHomogeneous
    }

    /// Phase `φ` in `g^A g^B g^C = φ g^B g^C g^A` for the kinds carrying a
    /// j-skew cubic relation in this presentation.
    pub fn cubic_phase(&self, kind: Kind) -> Option<Cyclo> {
        match (self.algebra, kind) {
            (AlgebraType::Lambda, Kind::Theta) => Some(Cyclo::j()),
            (AlgebraType::LambdaBar, Kind::ThetaBar) => Some(Cyclo::j2()),
            (t, Kind::Theta) if t.is_combined() => Some(Cyclo::j()),
            (t, Kind::ThetaBar) if t.is_combined() => Some(Cyclo::j2()),
            _ => None,
        }
    }

    pub fn generator_grade(&self, g: Generator) -> Grade {
        if self.algebra.is_s_family() {
            Grade::default()
        } else {
            g.kind.grade()
        }
    }

    pub fn grade_of(&self, w: &Word) -> Result<Grade> {
        self.check_word(w)?;
        Ok(w
            .letters()
            .iter()
            .fold(Grade::default(), |acc, g| acc + self.generator_grade(*g)))
    }

    fn instantiate_relations(&self) -> Vec<Poly> {
        let j = Cyclo::j;
        let j2 = Cyclo::j2;
        let one = Cyclo::one;
        let mut rels = Vec::new();
        let gen_kind = if self.algebra == AlgebraType::LambdaBar {
            Kind::ThetaBar
        } else {
            Kind::Theta
        };
        let gens_of = |t: [u16; 3]| t.map(|i| Generator::new(gen_kind, i));
        let n = self.theta_count;

        let templates: Vec<Vec<([usize; 3], Cyclo)>> = match self.algebra {
            AlgebraType::S => vec![vec![(ID, one()), (CYC1, j()), (CYC2, j2())]],
            AlgebraType::SBar => vec![vec![(ID, one()), (CYC1, j2()), (CYC2, j())]],
            AlgebraType::S1 => vec![vec![(ID, one()), (CYC1, -one())]],
            AlgebraType::S0 => vec![
                vec![(ID, one()), (CYC1, -one())],
                vec![(ID, one()), ([1, 0, 2], -one())],
            ],
            AlgebraType::Lambda0 => {
                let mut all = vec![(ID, one()), (CYC1, one()), (CYC2, one())];
                all.extend(ODD.iter().map(|p| (*p, one())));
                vec![all]
            }
            AlgebraType::Lambda1 => vec![vec![(ID, one()), (CYC1, one()), (CYC2, one())]],
            AlgebraType::Lambda => vec![vec![(ID, one()), (CYC1, -j())]],
            AlgebraType::LambdaBar => vec![vec![(ID, one()), (CYC1, -j2())]],
            AlgebraType::CombinedZ6 | AlgebraType::CombinedZ6NonHomogeneous => {
                vec![vec![(ID, one()), (CYC1, -j())]]
            }
            AlgebraType::Grassmann => vec![],
        };
        for t in triples(n) {
            for tpl in &templates {
                rels.push(cubic_combination(gens_of(t), tpl));
            }
        }

        if self.algebra.is_combined() && self.options.include_conjugates {
            for t in triples(n) {
                let g = t.map(Generator::theta_bar);
                rels.push(cubic_combination(g, &[(ID, one()), (CYC1, -j2())]));
            }
        }

        if matches!(
            self.algebra,
            AlgebraType::CombinedZ6 | AlgebraType::CombinedZ6NonHomogeneous | AlgebraType::Grassmann
        ) {
            rels.extend(self.binary_relations());
        }

        if self.algebra == AlgebraType::CombinedZ6NonHomogeneous {
            let rho = self.options.rho.as_ref().expect("installed at construction");
            rels.extend(self.rho_relations(rho, Kind::Theta, Kind::Xi));
            if self.options.include_conjugates {
                let rho_bar = self.options.rho_bar.as_ref().expect("installed at construction");
                rels.extend(self.rho_relations(rho_bar, Kind::ThetaBar, Kind::XiBar));
            }
        }
        rels
    }

    /// `a b − φ b a` for every ordered pair with `a` of a later kind than
    /// `b`, plus `ξ^α ξ^β + ξ^β ξ^α` within each odd family.
    fn binary_relations(&self) -> Vec<Poly> {
        let mut rels = Vec::new();
        for &a in &self.alphabet {
            for &b in &self.alphabet {
                let later_kind = a.kind > b.kind;
                let same_odd = a.kind == b.kind && a.kind.is_odd();
                if !(later_kind || same_odd) {
                    continue;
                }
                if let Some(phase) = self.options.phases.swap_phase(a.kind, b.kind) {
                    let mut p = Poly::from_word(word(&[a, b]));
                    p.add_term(-phase, word(&[b, a]));
                    if !p.is_zero() {
                        rels.push(p);
                    }
                }
            }
        }
        rels
    }

    fn rho_relations(&self, rho: &RhoTensor, cube: Kind, target: Kind) -> Vec<Poly> {
        let mut rels = Vec::new();
        for t in triples(self.theta_count) {
            let g = t.map(|i| Generator::new(cube, i));
            let mut p = Poly::from_word(word(&g));
            for alpha in 0..self.xi_count.min(2) {
                let c = rho.get(alpha, [t[0] as usize - 1, t[1] as usize - 1, t[2] as usize - 1]);
                p.add_term(-c.clone(), word(&[Generator::new(target, alpha as u16 + 1)]));
            }
            rels.push(p);
        }
        rels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lambda(n: usize) -> Presentation {
        make_presentation(AlgebraType::Lambda, n, 0, Default::default()).unwrap()
    }

    fn combined() -> Presentation {
        make_presentation(AlgebraType::CombinedZ6, 2, 2, Default::default()).unwrap()
    }

    #[test]
    fn generator_tokens_roundtrip() {
        for tok in ["t1", "tb2", "x3", "xb1", "dx4", "ddx2"] {
            assert_eq!(tok.parse::<Generator>().unwrap().to_string(), tok);
        }
        assert!("t0".parse::<Generator>().is_err());
        assert!("y1".parse::<Generator>().is_err());
        assert!("t".parse::<Generator>().is_err());
    }

    #[test]
    fn lambda_relations() {
        let p = lambda(2);
        let rels = p.relations_at(3);
        assert_eq!(rels.len(), 8);
        let mut expect = Poly::from_word(w("t1 t2 t1"));
        expect.add_term(-Cyclo::j(), w("t2 t1 t1"));
        assert!(rels.contains(&expect));
        assert!(p.relations_at(2).is_empty());
    }

    #[test]
    fn lambda0_relations_are_six_term_sums() {
        let p = make_presentation(AlgebraType::Lambda0, 2, 0, Default::default()).unwrap();
        let rels = p.relations_at(3);
        assert_eq!(rels.len(), 8);
        // t1 t1 t2: the six permutations hit each of its three rotations twice
        let r = rels.iter().find(|r| r.coeff(&w("t1 t1 t2")) == Cyclo::from_int(2)).unwrap();
        assert_eq!(r.coeff(&w("t1 t2 t1")), Cyclo::from_int(2));
        assert_eq!(r.coeff(&w("t2 t1 t1")), Cyclo::from_int(2));
    }

    #[test]
    fn combined_contains_xi_antisymmetry() {
        let p = combined();
        let mut skew = Poly::from_word(w("x1 x2"));
        skew.add_term(Cyclo::one(), w("x2 x1"));
        assert!(p.relations_at(2).contains(&skew));
        // θ ξ relation expressed as ξ θ − j θ ξ up to the stored orientation
        let mut mixed = Poly::from_word(w("t2 x1"));
        mixed.add_term(-Cyclo::j2(), w("x1 t2"));
        assert!(p.relations_at(2).contains(&mixed));
    }

    #[test]
    fn combined_requires_xi_generators() {
        let err = make_presentation(AlgebraType::CombinedZ6, 2, 0, Default::default());
        assert!(matches!(err, Err(Error::InvalidPresentation(_))));
        assert!(make_presentation(AlgebraType::Lambda, 0, 0, Default::default()).is_err());
    }

    #[test]
    fn grades() {
        let p = combined();
        assert_eq!(p.grade_of(&w("t1 t2")).unwrap().z6, 2);
        assert_eq!(p.grade_of(&w("t1 tb1")).unwrap().z6, 0);
        assert_eq!(p.grade_of(&w("tb1 x1")).unwrap().z6, 2);
        assert_eq!(p.grade_of(&w("t1 t2 t1")).unwrap().z6, 3);
        assert_eq!(p.grade_of(&w("tb1 tb2 tb1")).unwrap().z6, 3);
        assert_eq!(p.grade_of(&w("t1 t2")).unwrap().z3, 2);
        assert!(matches!(p.grade_of(&w("t3")), Err(Error::UnknownGenerator(_))));
        let s = make_presentation(AlgebraType::S, 2, 0, Default::default()).unwrap();
        assert_eq!(s.grade_of(&w("t1 t2 t1 t1")).unwrap(), Grade::default());
    }

    #[test]
    fn pair_table() {
        assert_eq!(z6_iso(2, 1), 1);
        assert_eq!(z6_iso(0, 1), 3);
        assert_eq!(z6_iso(1, 0), 2);
        assert_eq!(add_pairs((2, 1), (1, 1)), (0, 0));
        assert_eq!(add_pairs((2, 1), (1, 0)), (0, 1));
        for k in 0..6 {
            let (a, b) = z6_iso_inverse(k);
            assert_eq!(z6_iso(a, b), k);
        }
    }

    #[test]
    fn pair_table_is_a_group_isomorphism() {
        for a3 in 0..3 {
            for a2 in 0..2 {
                for b3 in 0..3 {
                    for b2 in 0..2 {
                        let sum = add_pairs((a3, a2), (b3, b2));
                        let lhs = Cyclo::q().pow(z6_iso(sum.0, sum.1) as i64).unwrap();
                        let rhs = Cyclo::q().pow(z6_iso(a3, a2) as i64 + z6_iso(b3, b2) as i64).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_phases_match_relations() {
        let t = PhaseTable::default();
        assert_eq!(t.swap_phase(Kind::Theta, Kind::Xi), Some(Cyclo::j2()));
        assert_eq!(t.swap_phase(Kind::ThetaBar, Kind::Theta), Some(Cyclo::j2()));
        assert_eq!(t.swap_phase(Kind::ThetaBar, Kind::Xi), Some(Cyclo::j()));
        assert_eq!(t.swap_phase(Kind::Theta, Kind::Theta), None);
        let v = PhaseTable::invariance_variant();
        assert_eq!(v.swap_phase(Kind::ThetaBar, Kind::Theta), Some(-Cyclo::j2()));
    }

    #[test]
    fn algebra_names_parse() {
        for t in AlgebraType::ALL {
            assert_eq!(t.name().parse::<AlgebraType>().unwrap(), t);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn combined_word() -> impl Strategy<Value = Word> {
            let gens = combined().alphabet().to_vec();
            proptest::collection::vec(proptest::sample::select(gens), 0..6).prop_map(Word::new)
        }

        proptest! {
            #[test]
            fn grade_is_additive(u in combined_word(), v in combined_word()) {
                let p = combined();
                let sum = p.grade_of(&u).unwrap() + p.grade_of(&v).unwrap();
                prop_assert_eq!(p.grade_of(&u.concat(&v)).unwrap(), sum);
            }
        }
    }
}
