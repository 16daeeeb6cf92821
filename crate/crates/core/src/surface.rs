//! The genus-g reference surface: chain curves `c_1, ..., c_{2g+1}`, words in
//! their Dehn twists and the hyperelliptic involution, and the symplectic
//! action on `H_1(Σ_g; Z)`.
//!
//! Homology coordinates are ordered `(a_1, b_1, ..., a_g, b_g)` with
//! `<a_i, b_i> = +1`. The chain curves are pinned to
//! `[c_{2k}] = b_k` and `[c_{2k-1}] = a_{k-1} + a_k` (with `a_0 = a_{g+1} = 0`),
//! so consecutive chain classes pair to ±1 and all others to 0.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratlin::{int, IntMatrix, Integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("genus 0 has no mapping classes to speak of")]
    GenusZero,
    #[error("chain index {index} out of range 1..={max} for genus {genus}")]
    IndexOutOfRange { index: u32, max: u32, genus: u32 },
    #[error("zero exponent in word")]
    ZeroExponent,
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("separating curve type II_{h} needs 0 <= h <= g = {genus}")]
    BadSeparatingGenus { h: u32, genus: u32 },
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Genus(pub u32);

impl Genus {
    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of chain curves, `2g + 1`.
    pub fn chain_len(self) -> u32 {
        2 * self.0 + 1
    }

    /// Dimension of `H_1`, `2g`.
    pub fn dim(self) -> usize {
        2 * self.0 as usize
    }

    pub fn require_positive(self) -> Result<Self, SurfaceError> {
        if self.0 == 0 {
            Err(SurfaceError::GenusZero)
        } else {
            Ok(self)
        }
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Type I (non-separating) or type II_h (separating into genera h and g−h).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveType {
    NonSeparating,
    Separating { h: u32 },
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveType::NonSeparating => write!(f, "I"),
            CurveType::Separating { h } => write!(f, "II_{h}"),
        }
    }
}

/// A curve type in a fixed genus.
///
/// The standard representatives are `c_{2g+1}` for type I and the boundary of
/// a neighbourhood of the chain `c_1, ..., c_{2h}` for type II_h.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveDescriptor {
    genus: Genus,
    kind: CurveType,
}

impl CurveDescriptor {
    pub fn new(genus: Genus, kind: CurveType) -> Result<Self, SurfaceError> {
        match kind {
            CurveType::NonSeparating => {
                genus.require_positive()?;
            }
            CurveType::Separating { h } if h > genus.0 => {
                return Err(SurfaceError::BadSeparatingGenus { h, genus: genus.0 })
            }
            CurveType::Separating { .. } => {}
        }
        Ok(CurveDescriptor { genus, kind })
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn kind(&self) -> CurveType {
        self.kind
    }

    pub fn is_separating(&self) -> bool {
        matches!(self.kind, CurveType::Separating { .. })
    }

    /// Homology class of the standard representative.
    pub fn homology(&self) -> HomologyClass {
        match self.kind {
            CurveType::NonSeparating => chain_class(self.genus.chain_len(), self.genus)
                .expect("c_{2g+1} exists for g >= 1"),
            CurveType::Separating { .. } => HomologyClass::zero(self.genus),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Right-handed Dehn twist along the chain curve `c_i`.
    Twist(u32),
    /// The hyperelliptic involution.
    Iota,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Twist(i) => write!(f, "t{i}"),
            Generator::Iota => write!(f, "iota"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Gen(Generator),
    Group(Vec<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub atom: Atom,
    pub exp: i64,
}

impl Term {
    pub fn gen(g: Generator, exp: i64) -> Self {
        Term { atom: Atom::Gen(g), exp }
    }
}

/// A word in `t_{c_1}, ..., t_{c_{2g+1}}, ι_g` with integer exponents.
///
/// Parenthesized powers stay symbolic so `(w)^k` costs `O(log k)` products
/// to evaluate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MCGWord {
    genus: Genus,
    terms: Vec<Term>,
}

impl MCGWord {
    pub fn new(genus: Genus, terms: Vec<Term>) -> Result<Self, SurfaceError> {
        fn check(genus: Genus, terms: &[Term]) -> Result<(), SurfaceError> {
            for t in terms {
                if t.exp == 0 {
                    return Err(SurfaceError::ZeroExponent);
                }
                match &t.atom {
                    Atom::Gen(Generator::Twist(i)) => {
                        genus.require_positive()?;
                        if *i < 1 || *i > genus.chain_len() {
                            return Err(SurfaceError::IndexOutOfRange {
                                index: *i,
                                max: genus.chain_len(),
                                genus: genus.0,
                            });
                        }
                    }
                    Atom::Gen(Generator::Iota) => {
                        genus.require_positive()?;
                    }
                    Atom::Group(inner) => check(genus, inner)?,
                }
            }
            Ok(())
        }
        check(genus, &terms)?;
        Ok(MCGWord { genus, terms })
    }

    pub fn empty(genus: Genus) -> Self {
        MCGWord { genus, terms: Vec::new() }
    }

    pub fn from_letters(
        genus: Genus,
        letters: impl IntoIterator<Item = (Generator, i64)>,
    ) -> Result<Self, SurfaceError> {
        MCGWord::new(genus, letters.into_iter().map(|(g, e)| Term::gen(g, e)).collect())
    }

    /// Product of chain twists `t_{c_i}` in the given order.
    pub fn twists(genus: Genus, indices: impl IntoIterator<Item = u32>) -> Result<Self, SurfaceError> {
        MCGWord::from_letters(genus, indices.into_iter().map(|i| (Generator::Twist(i), 1)))
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn concat(&self, other: &MCGWord) -> Result<Self, SurfaceError> {
        if self.genus != other.genus {
            return Err(SurfaceError::GenusMismatch(self.genus.0, other.genus.0));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(MCGWord { genus: self.genus, terms })
    }

    /// The formal inverse: reversed order, negated exponents.
    pub fn inverse(&self) -> Self {
        fn inv(terms: &[Term]) -> Vec<Term> {
            terms.iter().rev().map(|t| Term { atom: t.atom.clone(), exp: -t.exp }).collect()
        }
        MCGWord { genus: self.genus, terms: inv(&self.terms) }
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 || self.terms.is_empty() {
            return MCGWord::empty(self.genus);
        }
        if k == 1 {
            return self.clone();
        }
        MCGWord { genus: self.genus, terms: vec![Term { atom: Atom::Group(self.terms.clone()), exp: k }] }
    }

    /// `w · self · w⁻¹`
    pub fn conjugate_by(&self, w: &MCGWord) -> Result<Self, SurfaceError> {
        w.concat(self)?.concat(&w.inverse())
    }

    /// Length of the fully expanded word (sum of |exponent| over letters).
    pub fn expanded_len(&self) -> u128 {
        fn len(terms: &[Term]) -> u128 {
            terms
                .iter()
                .map(|t| {
                    let inner = match &t.atom {
                        Atom::Gen(_) => 1,
                        Atom::Group(ts) => len(ts),
                    };
                    inner * t.exp.unsigned_abs() as u128
                })
                .sum()
        }
        len(&self.terms)
    }

    /// Fully expanded letters with exponent ±1. Only use on short words.
    pub fn letters(&self) -> Vec<(Generator, i64)> {
        fn push(terms: &[Term], sign: i64, out: &mut Vec<(Generator, i64)>) {
            let iter: Box<dyn Iterator<Item = &Term>> =
                if sign > 0 { Box::new(terms.iter()) } else { Box::new(terms.iter().rev()) };
            for t in iter {
                let e = t.exp * sign;
                for _ in 0..e.unsigned_abs() {
                    match &t.atom {
                        Atom::Gen(g) => out.push((*g, e.signum())),
                        Atom::Group(inner) => push(inner, e.signum(), out),
                    }
                }
            }
        }
        let mut out = Vec::new();
        push(&self.terms, 1, &mut out);
        out
    }

    /// Every generator occurring in the word, with repetition, ignoring exponents.
    pub fn generators(&self) -> Vec<Generator> {
        fn walk(terms: &[Term], out: &mut Vec<Generator>) {
            for t in terms {
                match &t.atom {
                    Atom::Gen(g) => out.push(*g),
                    Atom::Group(inner) => walk(inner, out),
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.terms, &mut out);
        out
    }

    /// Rewrite generators letter by letter. `None` drops the letter (it maps
    /// to the identity). Groups that become empty are removed.
    pub fn map_generators(
        &self,
        genus: Genus,
        f: &impl Fn(Generator) -> Option<Generator>,
    ) -> Result<Self, SurfaceError> {
        fn walk(terms: &[Term], f: &impl Fn(Generator) -> Option<Generator>) -> Vec<Term> {
            terms
                .iter()
                .filter_map(|t| {
                    let atom = match &t.atom {
                        Atom::Gen(g) => Atom::Gen(f(*g)?),
                        Atom::Group(inner) => {
                            let inner = walk(inner, f);
                            if inner.is_empty() {
                                return None;
                            }
                            Atom::Group(inner)
                        }
                    };
                    Some(Term { atom, exp: t.exp })
                })
                .collect()
        }
        MCGWord::new(genus, walk(&self.terms, f))
    }
}

impl fmt::Display for MCGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[Term]) -> fmt::Result {
            for (k, t) in terms.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                match &t.atom {
                    Atom::Gen(g) => write!(f, "{g}")?,
                    Atom::Group(inner) => {
                        write!(f, "(")?;
                        write_terms(f, inner)?;
                        write!(f, ")")?;
                    }
                }
                if t.exp != 1 {
                    write!(f, "^{}", t.exp)?;
                }
            }
            Ok(())
        }
        if self.terms.is_empty() {
            return write!(f, "1");
        }
        write_terms(f, &self.terms)
    }
}

/// Evaluation of words in a group-like target, used for matrices, the
/// Meyer function, and additive homomorphisms alike.
pub trait WordEvaluator {
    type Value: Clone;
    type Error;

    fn identity(&self) -> Self::Value;
    fn generator(&self, g: Generator) -> Result<Self::Value, Self::Error>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, Self::Error>;
    fn inverse(&self, a: &Self::Value) -> Result<Self::Value, Self::Error>;

    fn pow(&self, a: &Self::Value, k: i64) -> Result<Self::Value, Self::Error> {
        let mut base = if k < 0 { self.inverse(a)? } else { a.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        let mut first = true;
        while k > 0 {
            if k & 1 == 1 {
                acc = if first { base.clone() } else { self.mul(&acc, &base)? };
                first = false;
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    fn evaluate(&self, word: &MCGWord) -> Result<Self::Value, Self::Error> {
        self.evaluate_terms(word.terms())
    }

    fn evaluate_terms(&self, terms: &[Term]) -> Result<Self::Value, Self::Error> {
        let mut acc: Option<Self::Value> = None;
        for t in terms {
            let base = match &t.atom {
                Atom::Gen(g) => self.generator(*g)?,
                Atom::Group(inner) => self.evaluate_terms(inner)?,
            };
            let v = if t.exp == 1 { base } else { self.pow(&base, t.exp)? };
            acc = Some(match acc {
                None => v,
                Some(a) => self.mul(&a, &v)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.identity()))
    }
}

/// An integral class in `H_1(Σ_g)`, coordinates `(a_1, b_1, ..., a_g, b_g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    genus: Genus,
    coords: Vec<Integer>,
}

impl HomologyClass {
    pub fn new(genus: Genus, coords: Vec<Integer>) -> Result<Self, SurfaceError> {
        if coords.len() != genus.dim() {
            return Err(SurfaceError::Dimension(coords.len(), genus.dim()));
        }
        Ok(HomologyClass { genus, coords })
    }

    pub fn from_i64(genus: Genus, coords: &[i64]) -> Result<Self, SurfaceError> {
        HomologyClass::new(genus, coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(genus: Genus) -> Self {
        HomologyClass { genus, coords: vec![Integer::zero(); genus.dim()] }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn coords(&self) -> &[Integer] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        HomologyClass { genus: self.genus, coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Algebraic intersection number `<self, other>`.
    pub fn pairing(&self, other: &HomologyClass) -> Integer {
        intersection::<Integer>(&self.coords, &other.coords)
    }
}

/// `<x, y> = Σ_k (x_{a_k} y_{b_k} − x_{b_k} y_{a_k})`
pub fn intersection<T>(x: &[T], y: &[T]) -> T
where
    T: Zero + Clone,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T> + std::ops::Sub<&'a T, Output = T>,
{
    debug_assert_eq!(x.len(), y.len());
    let mut acc = T::zero();
    for k in (0..x.len()).step_by(2) {
        let term = &(&x[k] * &y[k + 1]) - &(&x[k + 1] * &y[k]);
        acc = acc + term;
    }
    acc
}

/// The standard intersection matrix `J` with `x^T J y = <x, y>`.
pub fn standard_j(genus: Genus) -> IntMatrix {
    let n = genus.dim();
    IntMatrix::from_fn(n, n, |i, j| {
        if i % 2 == 0 && j == i + 1 {
            int(1)
        } else if i % 2 == 1 && j + 1 == i {
            int(-1)
        } else {
            int(0)
        }
    })
}

pub fn chain_class(i: u32, genus: Genus) -> Result<HomologyClass, SurfaceError> {
    genus.require_positive()?;
    if i < 1 || i > genus.chain_len() {
        return Err(SurfaceError::IndexOutOfRange { index: i, max: genus.chain_len(), genus: genus.0 });
    }
    let mut c = HomologyClass::zero(genus);
    let g = genus.0;
    if i % 2 == 0 {
        let k = i / 2;
        c.coords[2 * (k as usize - 1) + 1] = int(1);
    } else {
        let k = (i + 1) / 2;
        if k >= 2 {
            c.coords[2 * (k as usize - 2)] += 1;
        }
        if k <= g {
            c.coords[2 * (k as usize - 1)] += 1;
        }
    }
    Ok(c)
}

/// A `2g x 2g` integer matrix with `MᵀJM = J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    genus: Genus,
    m: IntMatrix,
}

impl SymplecticMatrix {
    pub fn new(genus: Genus, m: IntMatrix) -> Result<Self, SurfaceError> {
        if m.rows() != genus.dim() || m.cols() != genus.dim() {
            return Err(SurfaceError::Dimension(m.rows(), genus.dim()));
        }
        let j = standard_j(genus);
        if &(&m.transpose() * &j) * &m != j {
            return Err(SurfaceError::NotSymplectic);
        }
        Ok(SymplecticMatrix { genus, m })
    }

    pub fn identity(genus: Genus) -> Self {
        SymplecticMatrix { genus, m: IntMatrix::identity(genus.dim()) }
    }

    pub fn minus_identity(genus: Genus) -> Self {
        SymplecticMatrix { genus, m: IntMatrix::identity(genus.dim()).map(|x| -x) }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m == IntMatrix::identity(self.genus.dim())
    }

    pub fn is_symplectic(&self) -> bool {
        let j = standard_j(self.genus);
        &(&self.m.transpose() * &j) * &self.m == j
    }

    pub fn mul(&self, other: &SymplecticMatrix) -> Result<Self, SurfaceError> {
        if self.genus != other.genus {
            return Err(SurfaceError::GenusMismatch(self.genus.0, other.genus.0));
        }
        Ok(SymplecticMatrix { genus: self.genus, m: &self.m * &other.m })
    }

    /// `M⁻¹ = −J Mᵀ J`, exact over the integers.
    pub fn inverse(&self) -> Self {
        let j = standard_j(self.genus);
        let inv = &(&j * &self.m.transpose()) * &j;
        SymplecticMatrix { genus: self.genus, m: inv.map(|x| -x) }
    }

    pub fn neg(&self) -> Self {
        SymplecticMatrix { genus: self.genus, m: self.m.map(|x| -x) }
    }

    /// `M = ±I`
    pub fn is_plus_minus_identity(&self) -> bool {
        self.is_identity() || self.neg().is_identity()
    }

    pub fn apply(&self, c: &HomologyClass) -> HomologyClass {
        HomologyClass { genus: self.genus, coords: self.m.mul_vec(&c.coords) }
    }

    /// Restriction to the coordinate block `[start, start + 2h)`, assuming the
    /// matrix preserves that block (used for the induced action after cutting).
    pub fn restrict_block(&self, start: usize, h: u32) -> SymplecticMatrix {
        let n = 2 * h as usize;
        SymplecticMatrix { genus: Genus(h), m: self.m.block(start, start, n, n) }
    }
}

/// Transvection `x ↦ x + <x, c> c`, the action of `t_c` on homology.
pub fn twist_matrix(c: &HomologyClass) -> SymplecticMatrix {
    let g = c.genus;
    let n = g.dim();
    let jc = standard_j(g).mul_vec(&c.coords);
    // <x, c> = xᵀ J c = Σ_j x_j (Jc)_j
    let m = IntMatrix::from_fn(n, n, |i, j| {
        let base = if i == j { Integer::one() } else { Integer::zero() };
        base + &c.coords[i] * &jc[j]
    });
    SymplecticMatrix { genus: g, m }
}

pub fn generator_matrix(gen: Generator, genus: Genus) -> Result<SymplecticMatrix, SurfaceError> {
    match gen {
        Generator::Twist(i) => Ok(twist_matrix(&chain_class(i, genus)?)),
        Generator::Iota => Ok(SymplecticMatrix::minus_identity(genus.require_positive()?)),
    }
}

struct MatrixEval {
    genus: Genus,
}

impl WordEvaluator for MatrixEval {
    type Value = SymplecticMatrix;
    type Error = SurfaceError;

    fn identity(&self) -> SymplecticMatrix {
        SymplecticMatrix::identity(self.genus)
    }

    fn generator(&self, g: Generator) -> Result<SymplecticMatrix, SurfaceError> {
        generator_matrix(g, self.genus)
    }

    fn mul(&self, a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<SymplecticMatrix, SurfaceError> {
        a.mul(b)
    }

    fn inverse(&self, a: &SymplecticMatrix) -> Result<SymplecticMatrix, SurfaceError> {
        Ok(a.inverse())
    }
}

/// Product of generator matrices in word order.
pub fn word_to_matrix(w: &MCGWord) -> Result<SymplecticMatrix, SurfaceError> {
    MatrixEval { genus: w.genus }.evaluate(w)
}

/// How a mapping class acts on an (oriented) curve, as seen by homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveAction {
    /// +1: `M c = c`, −1: `M c = −c`, 0: neither.
    pub sign: i8,
    /// `c = 0`, so homology cannot tell anything.
    pub vacuous: bool,
}

pub fn curve_action(m: &SymplecticMatrix, c: &HomologyClass) -> Result<CurveAction, SurfaceError> {
    if m.genus != c.genus {
        return Err(SurfaceError::Dimension(m.genus.dim(), c.genus.dim()));
    }
    if c.is_zero() {
        return Ok(CurveAction { sign: 1, vacuous: true });
    }
    let mc = m.apply(c);
    let sign = if mc == *c {
        1
    } else if mc == c.neg() {
        -1
    } else {
        0
    };
    Ok(CurveAction { sign, vacuous: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> Genus {
        Genus(n)
    }

    #[test]
    fn chain_classes_genus_two() {
        assert_eq!(chain_class(1, g(2)).unwrap(), HomologyClass::from_i64(g(2), &[1, 0, 0, 0]).unwrap());
        assert_eq!(chain_class(4, g(2)).unwrap(), HomologyClass::from_i64(g(2), &[0, 0, 0, 1]).unwrap());
        assert_eq!(chain_class(3, g(2)).unwrap(), HomologyClass::from_i64(g(2), &[1, 0, 1, 0]).unwrap());
        assert_eq!(chain_class(5, g(2)).unwrap(), HomologyClass::from_i64(g(2), &[0, 0, 1, 0]).unwrap());
        assert!(chain_class(6, g(2)).is_err());
        assert!(chain_class(0, g(2)).is_err());
        assert_eq!(chain_class(1, g(0)), Err(SurfaceError::GenusZero));
    }

    #[test]
    fn chain_intersection_pattern() {
        // brute force over all pairs: consecutive ±1, otherwise 0
        for gg in 1..=4 {
            let genus = g(gg);
            for i in 1..=genus.chain_len() {
                for j in 1..=genus.chain_len() {
                    let p = chain_class(i, genus).unwrap().pairing(&chain_class(j, genus).unwrap());
                    let expected = if i.abs_diff(j) == 1 { 1 } else { 0 };
                    assert_eq!(p.magnitude().to_string(), expected.to_string(), "g={gg} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn transvection_genus_one() {
        let a = chain_class(1, g(1)).unwrap();
        let t = twist_matrix(&a);
        // columns are images: a -> a, b -> b - a
        assert_eq!(t.matrix(), &IntMatrix::from_i64(2, 2, &[1, -1, 0, 1]).unwrap());
        assert!(t.is_symplectic());
        assert!(twist_matrix(&HomologyClass::zero(g(2))).is_identity());
        assert_eq!(twist_matrix(&a.neg()), t);
    }

    #[test]
    fn word_inverse_and_chain_relation() {
        let genus = g(2);
        let w = MCGWord::from_letters(
            genus,
            [(Generator::Twist(1), 2), (Generator::Iota, 1), (Generator::Twist(4), -3)],
        )
        .unwrap();
        let m = word_to_matrix(&w.concat(&w.inverse()).unwrap()).unwrap();
        assert!(m.is_identity());
        assert!(word_to_matrix(&MCGWord::empty(genus)).unwrap().is_identity());

        let lhs = MCGWord::twists(genus, [1, 2, 3]).unwrap().pow(4);
        let rhs = MCGWord::from_letters(genus, [(Generator::Twist(5), 2)]).unwrap();
        assert_eq!(word_to_matrix(&lhs).unwrap(), word_to_matrix(&rhs).unwrap());
    }

    #[test]
    fn symbolic_power_matches_expansion() {
        let genus = g(2);
        let w = MCGWord::twists(genus, [2, 3, 1]).unwrap().pow(-5);
        let expanded = MCGWord::from_letters(genus, w.letters()).unwrap();
        assert_eq!(expanded.expanded_len(), 15);
        assert_eq!(word_to_matrix(&w).unwrap(), word_to_matrix(&expanded).unwrap());
    }

    #[test]
    fn curve_actions() {
        let genus = g(2);
        let a2 = chain_class(5, genus).unwrap();
        let id = SymplecticMatrix::identity(genus);
        assert_eq!(curve_action(&id, &a2).unwrap(), CurveAction { sign: 1, vacuous: false });
        let iota = SymplecticMatrix::minus_identity(genus);
        assert_eq!(curve_action(&iota, &a2).unwrap().sign, -1);
        let tb2 = twist_matrix(&chain_class(4, genus).unwrap());
        assert_eq!(curve_action(&tb2, &a2).unwrap().sign, 0);
        let vac = curve_action(&tb2, &HomologyClass::zero(genus)).unwrap();
        assert!(vac.vacuous && vac.sign == 1);
    }

    #[test]
    fn word_validation() {
        assert!(MCGWord::twists(g(2), [6]).is_err());
        assert_eq!(
            MCGWord::from_letters(g(2), [(Generator::Twist(1), 0)]),
            Err(SurfaceError::ZeroExponent)
        );
        assert_eq!(MCGWord::twists(g(0), [1]), Err(SurfaceError::GenusZero));
    }

    #[test]
    fn display_word() {
        let w = MCGWord::twists(g(2), [4, 3]).unwrap().pow(2);
        let w = w.concat(&MCGWord::from_letters(g(2), [(Generator::Iota, 1), (Generator::Twist(5), -4)]).unwrap()).unwrap();
        assert_eq!(w.to_string(), "(t4 t3)^2 iota t5^-4");
    }
}
