//! Local signatures, the homomorphism `h_{g,c}` on `H_g(c)` / `H_g(c^ori)`,
//! the correction term `s`, and the cutting map `Φ`.

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::meyer::{phi, MeyerError};
use crate::ratlin::{rat, rat_int, rational_string, solve, Rational, RationalMatrix};
use crate::surface::{
    chain_class, generator_matrix, word_to_matrix, CurveDescriptor, CurveType, Generator, Genus,
    MCGWord, SurfaceError, SymplecticMatrix, WordEvaluator,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocsigError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Meyer(#[from] MeyerError),
    #[error(
        "{gen} is not a generator of the stabilizer of a type {kind} curve in genus {genus}; \
         rewrite the monodromy in the standard generating set (automatic rewriting is not supported)"
    )]
    OutOfContext { gen: Generator, kind: CurveType, genus: u32 },
    #[error("a Lefschetz vanishing cycle of type {0} is null-homotopic or not essential")]
    InessentialCycle(CurveType),
    #[error("mapping class does not preserve the curve c up to sign in homology")]
    NotPreserving,
    #[error("(M - I)δ is not a multiple of [c] modulo (M - I)c^⊥")]
    NotDependent,
}

/// A curve context `(g, c)`; words evaluated here must lie in the
/// stabilizer of `c` and be written in its standard generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HContext {
    curve: CurveDescriptor,
}

impl HContext {
    pub fn new(curve: CurveDescriptor) -> Self {
        HContext { curve }
    }

    pub fn type_one(genus: Genus) -> Result<Self, LocsigError> {
        Ok(HContext { curve: CurveDescriptor::new(genus, CurveType::NonSeparating)? })
    }

    pub fn type_two(genus: Genus, h: u32) -> Result<Self, LocsigError> {
        Ok(HContext { curve: CurveDescriptor::new(genus, CurveType::Separating { h })? })
    }

    pub fn curve(&self) -> CurveDescriptor {
        self.curve
    }

    pub fn genus(&self) -> Genus {
        self.curve.genus()
    }

    /// `h` for type II_h with `1 <= h <= g - 1`, `None` otherwise.
    fn essential_h(&self) -> Option<u32> {
        match self.curve.kind() {
            CurveType::Separating { h } if h >= 1 && h < self.genus().get() => Some(h),
            _ => None,
        }
    }

    pub fn admits(&self, gen: Generator) -> bool {
        let g = self.genus().get();
        match (self.curve.kind(), gen) {
            (_, Generator::Twist(i)) if i < 1 || i > 2 * g + 1 => false,
            (CurveType::NonSeparating, Generator::Twist(i)) => i != 2 * g,
            (CurveType::NonSeparating, Generator::Iota) => true,
            (CurveType::Separating { .. }, gen) => match (self.essential_h(), gen) {
                (None, _) => true,
                (Some(h), Generator::Twist(i)) => i != 2 * h + 1,
                (Some(_), Generator::Iota) => false,
            },
        }
    }

    fn out_of_context(&self, gen: Generator) -> LocsigError {
        LocsigError::OutOfContext { gen, kind: self.curve.kind(), genus: self.genus().get() }
    }
}

/// A word in the standard generators of a curve stabilizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HWord {
    context: HContext,
    word: MCGWord,
}

impl HWord {
    pub fn new(context: HContext, word: MCGWord) -> Result<Self, LocsigError> {
        if word.genus() != context.genus() {
            return Err(SurfaceError::GenusMismatch(word.genus().get(), context.genus().get()).into());
        }
        if let Some(bad) = word.generators().into_iter().find(|g| !context.admits(*g)) {
            return Err(context.out_of_context(bad));
        }
        Ok(HWord { context, word })
    }

    pub fn context(&self) -> HContext {
        self.context
    }

    pub fn word(&self) -> &MCGWord {
        &self.word
    }
}

/// `σ_loc` of a Lefschetz singular fiber with the given vanishing cycle.
pub fn sigma_loc(curve: CurveDescriptor) -> Result<Rational, LocsigError> {
    let g = curve.genus().require_positive()?.get() as i64;
    match curve.kind() {
        CurveType::NonSeparating => Ok(rat(-(g + 1), 2 * g + 1)),
        CurveType::Separating { h } if h == 0 || h as i64 >= g => {
            Err(LocsigError::InessentialCycle(curve.kind()))
        }
        CurveType::Separating { h } => {
            let h = h as i64;
            Ok(rat(4 * h * (g - h), 2 * g + 1) - rat(1, 1))
        }
    }
}

/// `(k+1)/(2k+1)`, the Meyer function of a non-separating twist in genus k.
fn phi_twist(k: i64) -> Rational {
    rat(k + 1, 2 * k + 1)
}

pub fn h_generator(ctx: &HContext, gen: Generator) -> Result<Rational, LocsigError> {
    if !ctx.admits(gen) {
        return Err(ctx.out_of_context(gen));
    }
    let g = ctx.genus().get() as i64;
    Ok(match (ctx.curve.kind(), gen) {
        (CurveType::NonSeparating, Generator::Iota) => Rational::zero(),
        (CurveType::NonSeparating, Generator::Twist(i)) if i as i64 == 2 * g + 1 => rat(-g, 2 * g + 1),
        (CurveType::NonSeparating, Generator::Twist(_)) => rat(-1, 4 * g * g - 1),
        (CurveType::Separating { .. }, gen) => match (ctx.essential_h(), gen) {
            (None, _) => Rational::zero(),
            (Some(h), Generator::Twist(i)) if i <= 2 * h => phi_twist(g) - phi_twist(h as i64),
            (Some(h), Generator::Twist(_)) => phi_twist(g) - phi_twist(g - h as i64),
            (Some(_), Generator::Iota) => unreachable!("rejected by admits"),
        },
    })
}

struct Additive<'a> {
    ctx: &'a HContext,
}

impl WordEvaluator for Additive<'_> {
    type Value = Rational;
    type Error = LocsigError;

    fn identity(&self) -> Rational {
        Rational::zero()
    }

    fn generator(&self, g: Generator) -> Result<Rational, LocsigError> {
        h_generator(self.ctx, g)
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Result<Rational, LocsigError> {
        Ok(a + b)
    }

    fn inverse(&self, a: &Rational) -> Result<Rational, LocsigError> {
        Ok(-a)
    }

    fn pow(&self, a: &Rational, k: i64) -> Result<Rational, LocsigError> {
        Ok(a * rat(k, 1))
    }
}

/// `h_{g,c}(w)`, by additivity over the generator table.
pub fn h_word(w: &HWord) -> Result<Rational, LocsigError> {
    Additive { ctx: &w.context }.evaluate(&w.word)
}

/// The correction term `s` of a mapping class preserving `c` up to sign,
/// read off from its symplectic action.
///
/// For type I with `Mc = c`, pick `δ` with `<δ, c> = 1` and write
/// `(M − I)δ = λc + (M − I)w` with `w ∈ c^⊥`; then `s = −sign λ`, and
/// `s = 0` when `c` already lies in `(M − I)c^⊥`. Orientation-reversing
/// classes and separating contexts give 0.
pub fn s_element(ctx: &HContext, m: &SymplecticMatrix) -> Result<i8, LocsigError> {
    if ctx.curve.is_separating() {
        return Ok(0);
    }
    let genus = ctx.genus();
    if m.genus() != genus {
        return Err(SurfaceError::GenusMismatch(m.genus().get(), genus.get()).into());
    }
    let n = genus.dim();
    let c = chain_class(genus.chain_len(), genus)?;
    let mc = m.apply(&c);
    if mc == c.neg() {
        return Ok(0);
    }
    if mc != c {
        return Err(LocsigError::NotPreserving);
    }
    // c = a_g, δ = −b_g, c^⊥ = span of every basis vector except b_g
    let b_g = n - 1;
    let p = m.matrix().to_rational();
    let p = RationalMatrix::from_fn(n, n, |i, j| if i == j { &p[(i, j)] - rat(1, 1) } else { p[(i, j)].clone() });
    let cols: Vec<usize> = (0..n).filter(|&j| j != b_g).collect();
    let c_vec: Vec<Rational> = c.coords().iter().map(rat_int).collect();
    let pw = RationalMatrix::from_fn(n, cols.len(), |i, k| p[(i, cols[k])].clone());
    if solve(&pw, &c_vec).is_some() {
        return Ok(0);
    }
    let system = RationalMatrix::from_fn(n, cols.len() + 1, |i, k| {
        if k < cols.len() {
            pw[(i, k)].clone()
        } else {
            c_vec[i].clone()
        }
    });
    let p_delta: Vec<Rational> = (0..n).map(|i| -p[(i, b_g)].clone()).collect();
    let x = solve(&system, &p_delta).ok_or(LocsigError::NotDependent)?;
    let lambda = &x[cols.len()];
    Ok(if lambda.is_positive() {
        -1
    } else if lambda.is_negative() {
        1
    } else {
        0
    })
}

/// `s` of a single generator.
pub fn s_value(ctx: &HContext, gen: Generator) -> Result<i8, LocsigError> {
    if !ctx.admits(gen) {
        return Err(ctx.out_of_context(gen));
    }
    s_element(ctx, &generator_matrix(gen, ctx.genus())?)
}

/// The cutting map `Φ` on words: for type I the result is one word in genus
/// `g − 1`; for type II_h it is the pair of words on the genus `h` and genus
/// `g − h` sides.
pub fn cut(w: &HWord) -> Result<Vec<MCGWord>, LocsigError> {
    let g = w.context.genus().get();
    match w.context.curve.kind() {
        CurveType::NonSeparating => {
            let lower = Genus(g - 1);
            let piece = w.word.map_generators(lower, &|gen| match gen {
                _ if g == 1 => None,
                Generator::Twist(i) if i == 2 * g + 1 => None,
                other => Some(other),
            })?;
            Ok(vec![piece])
        }
        CurveType::Separating { h } if h == 0 => Ok(vec![MCGWord::empty(Genus(0)), w.word.clone()]),
        CurveType::Separating { h } if h == g => Ok(vec![w.word.clone(), MCGWord::empty(Genus(0))]),
        CurveType::Separating { h } => {
            let first = w.word.map_generators(Genus(h), &|gen| match gen {
                Generator::Twist(i) if i <= 2 * h => Some(gen),
                _ => None,
            })?;
            let second = w.word.map_generators(Genus(g - h), &|gen| match gen {
                Generator::Twist(i) if i >= 2 * h + 2 => Some(Generator::Twist(i - 2 * h - 1)),
                _ => None,
            })?;
            Ok(vec![first, second])
        }
    }
}

/// The induced action on `H_1` of the genus `g − 1` surface obtained by
/// cutting along the type I curve `c = a_g` and capping: `c^⊥ / <c>`, which
/// in coordinates is the leading `2g − 2` block.
pub fn cut_matrix_type_one(m: &SymplecticMatrix) -> SymplecticMatrix {
    m.restrict_block(0, m.genus().get() - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub context: String,
    pub word: String,
    #[serde(serialize_with = "ser_rational")]
    pub h: Rational,
    pub s: i8,
    #[serde(serialize_with = "ser_rational")]
    pub phi: Rational,
    #[serde(serialize_with = "ser_rationals")]
    pub phi_cut: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    pub holds: bool,
}

impl DecompositionReport {
    pub fn discrepancy(&self) -> Rational {
        &self.h - &self.rhs
    }
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

pub(crate) fn ser_rationals<S: serde::Serializer>(rs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(rational_string))
}

/// Compares `h(w)` with `s(w) + φ_g(w) − Σ φ(Φ(w))`.
pub fn decomposition_check(w: &HWord) -> Result<DecompositionReport, LocsigError> {
    let h = h_word(w)?;
    let m = word_to_matrix(&w.word)?;
    let s = s_element(&w.context, &m)?;
    let phi_g = phi(&w.word)?;
    let phi_cut = cut(w)?.iter().map(phi).collect::<Result<Vec<_>, _>>()?;
    let mut rhs = rat(s as i64, 1) + &phi_g;
    for p in &phi_cut {
        rhs -= p;
    }
    Ok(DecompositionReport {
        context: w.context.curve.kind().to_string(),
        word: w.word.to_string(),
        holds: h == rhs,
        h,
        s,
        phi: phi_g,
        phi_cut,
        rhs,
    })
}
