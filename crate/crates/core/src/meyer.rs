//! Meyer's signature cocycle `τ_g` and the Meyer function `φ_g` on the
//! hyperelliptic mapping class group.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::ratlin::{
    kernel_basis, rat, rat_int, signature_of_symmetric, solve, LinAlgError, Rational, RationalMatrix,
};
use crate::surface::{
    chain_class, generator_matrix, intersection, Generator, Genus, HomologyClass, MCGWord, SurfaceError,
    SymplecticMatrix, WordEvaluator,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeyerError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("tau needs symplectic matrices of equal size")]
    BadInput,
    #[error("separating twist of type II_{h} does not exist in genus {genus}")]
    InvalidH { h: u32, genus: u32 },
}

/// `τ_g(A, B)`, the negated signature of Meyer's form on
/// `V_{A,B} = {(x, y) : (A⁻¹ − I)x + (B − I)y = 0}`,
/// `((x₁,y₁),(x₂,y₂)) ↦ <x₁ + y₁, (I − B) y₂>`.
pub fn tau(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<i64, MeyerError> {
    if a.genus() != b.genus() || !a.is_symplectic() || !b.is_symplectic() {
        return Err(MeyerError::BadInput);
    }
    tau_unchecked(a, b)
}

pub(crate) fn tau_unchecked(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<i64, MeyerError> {
    let n = a.genus().dim();
    if n == 0 || a.is_identity() || b.is_identity() {
        return Ok(0);
    }
    let ainv = a.inverse().matrix().to_rational();
    let bm = b.matrix().to_rational();
    let id = RationalMatrix::identity(n);
    let lhs = RationalMatrix::from_fn(n, n, |i, j| &ainv[(i, j)] - &id[(i, j)]);
    let b_minus_i = RationalMatrix::from_fn(n, n, |i, j| &bm[(i, j)] - &id[(i, j)]);
    let system = lhs.hstack(&b_minus_i)?;
    let basis = kernel_basis(&system);
    let k = basis.len();
    if k == 0 {
        return Ok(0);
    }
    // (I − B) y = −(B − I) y
    let sums: Vec<Vec<Rational>> =
        basis.iter().map(|v| (0..n).map(|i| &v[i] + &v[n + i]).collect()).collect();
    let images: Vec<Vec<Rational>> = basis
        .iter()
        .map(|v| b_minus_i.mul_vec(&v[n..]).into_iter().map(|x| -x).collect())
        .collect();
    let gram = RationalMatrix::from_fn(k, k, |p, q| intersection::<Rational>(&sums[p], &images[q]));
    Ok(-signature_of_symmetric(&gram)?)
}

/// `τ(A, t_c)` for a transvection `t_c`. The form on `V` then has rank at
/// most one and `τ = sign(1 + <x, c>)` for any `x` with `(A⁻¹ − I)x = −c`,
/// or 0 when there is no such `x`.
pub fn tau_transvection(a: &SymplecticMatrix, c: &HomologyClass) -> Result<i64, MeyerError> {
    if a.genus() != c.genus() {
        return Err(MeyerError::BadInput);
    }
    let n = a.genus().dim();
    if n == 0 || c.is_zero() || a.is_identity() {
        return Ok(0);
    }
    let ainv = a.inverse().matrix().to_rational();
    let lhs = RationalMatrix::from_fn(n, n, |i, j| if i == j { &ainv[(i, j)] - rat(1, 1) } else { ainv[(i, j)].clone() });
    let rhs: Vec<Rational> = c.coords().iter().map(|v| -rat_int(v)).collect();
    let Some(x) = solve(&lhs, &rhs) else {
        return Ok(0);
    };
    let cq: Vec<Rational> = c.coords().iter().map(rat_int).collect();
    let mu = intersection::<Rational>(&x, &cq) + rat(1, 1);
    Ok(if mu.is_positive() {
        1
    } else if mu.is_negative() {
        -1
    } else {
        0
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseGenerator {
    NonSeparatingTwist,
    SeparatingTwist { h: u32 },
    Iota,
}

/// Base values of `φ_g` on twists and on `ι_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTable {
    genus: Genus,
    non_separating: Rational,
    iota: Rational,
}

impl PhiTable {
    pub fn new(genus: Genus) -> Result<Self, MeyerError> {
        let g = genus.require_positive()?.get() as i64;
        let minus = SymplecticMatrix::minus_identity(genus);
        let t = tau_unchecked(&minus, &minus)?;
        Ok(PhiTable {
            genus,
            non_separating: rat(g + 1, 2 * g + 1),
            // ι² = 1 and φ(1) = 0
            iota: rat(t, 2),
        })
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn value(&self, gen: BaseGenerator) -> Result<Rational, MeyerError> {
        let g = self.genus.get();
        match gen {
            BaseGenerator::NonSeparatingTwist => Ok(self.non_separating.clone()),
            BaseGenerator::Iota => Ok(self.iota.clone()),
            BaseGenerator::SeparatingTwist { h } if h > g => {
                Err(MeyerError::InvalidH { h, genus: g })
            }
            BaseGenerator::SeparatingTwist { h } => {
                let (h, g) = (h as i64, g as i64);
                Ok(rat(-4 * h * (g - h), 2 * g + 1))
            }
        }
    }

    pub fn generator(&self, gen: Generator) -> Rational {
        match gen {
            Generator::Twist(_) => self.non_separating.clone(),
            Generator::Iota => self.iota.clone(),
        }
    }
}

pub fn phi_base(gen: BaseGenerator, genus: Genus) -> Result<Rational, MeyerError> {
    PhiTable::new(genus)?.value(gen)
}

/// A mapping class seen through its symplectic image together with its
/// Meyer function value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Marked {
    pub matrix: SymplecticMatrix,
    pub phi: Rational,
    /// `Some(c)` when the class is known to act as the transvection along `c`.
    pub transvection: Option<HomologyClass>,
}

impl Marked {
    pub fn new(matrix: SymplecticMatrix, phi: Rational) -> Self {
        Marked { matrix, phi, transvection: None }
    }
}

/// Evaluates words to `(matrix, φ)` pairs using `φ(uv) = φ(u) + φ(v) − τ(u, v)`.
pub struct PhiEvaluator {
    table: PhiTable,
}

impl PhiEvaluator {
    pub fn new(genus: Genus) -> Result<Self, MeyerError> {
        Ok(PhiEvaluator { table: PhiTable::new(genus)? })
    }

    pub fn table(&self) -> &PhiTable {
        &self.table
    }
}

impl WordEvaluator for PhiEvaluator {
    type Value = Marked;
    type Error = MeyerError;

    fn identity(&self) -> Marked {
        Marked::new(SymplecticMatrix::identity(self.table.genus), Rational::zero())
    }

    fn generator(&self, g: Generator) -> Result<Marked, MeyerError> {
        let transvection = match g {
            Generator::Twist(i) => Some(chain_class(i, self.table.genus)?),
            Generator::Iota => None,
        };
        Ok(Marked { matrix: generator_matrix(g, self.table.genus)?, phi: self.table.generator(g), transvection })
    }

    fn mul(&self, a: &Marked, b: &Marked) -> Result<Marked, MeyerError> {
        // τ is symmetric, so either factor being a transvection suffices.
        let t = match (&a.transvection, &b.transvection) {
            (_, Some(c)) => tau_transvection(&a.matrix, c)?,
            (Some(c), None) => tau_transvection(&b.matrix, c)?,
            (None, None) => tau_unchecked(&a.matrix, &b.matrix)?,
        };
        Ok(Marked::new(a.matrix.mul(&b.matrix)?, &a.phi + &b.phi - rat(t, 1)))
    }

    fn inverse(&self, a: &Marked) -> Result<Marked, MeyerError> {
        // τ(A, A⁻¹) = 0
        Ok(Marked { matrix: a.matrix.inverse(), phi: -&a.phi, transvection: None })
    }
}

/// `(word_to_matrix(w), φ_g(w))`. Genus 0 words are empty and map to 0.
pub fn phi_marked(w: &MCGWord) -> Result<Marked, MeyerError> {
    if w.genus().get() == 0 {
        return Ok(Marked::new(SymplecticMatrix::identity(w.genus()), Rational::zero()));
    }
    PhiEvaluator::new(w.genus())?.evaluate(w)
}

pub fn phi(w: &MCGWord) -> Result<Rational, MeyerError> {
    Ok(phi_marked(w)?.phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{twist_matrix, word_to_matrix};

    fn word(g: u32, idx: &[u32]) -> MCGWord {
        MCGWord::twists(Genus(g), idx.iter().copied()).unwrap()
    }

    #[test]
    fn normalization() {
        let g = Genus(2);
        let a = twist_matrix(&chain_class(2, g).unwrap());
        let i = SymplecticMatrix::identity(g);
        assert_eq!(tau(&i, &a).unwrap(), 0);
        assert_eq!(tau(&a, &i).unwrap(), 0);
        assert_eq!(tau(&a, &a.inverse()).unwrap(), 0);
    }

    #[test]
    fn minus_identity_pairs_to_zero() {
        for g in 1..=4 {
            let m = SymplecticMatrix::minus_identity(Genus(g));
            assert_eq!(tau(&m, &m).unwrap(), 0);
            assert_eq!(phi_base(BaseGenerator::Iota, Genus(g)).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn anchor_values() {
        assert_eq!(phi(&word(2, &[5])).unwrap(), rat(3, 5));
        assert_eq!(phi(&word(2, &[5]).inverse()).unwrap(), rat(-3, 5));
        assert_eq!(phi(&MCGWord::empty(Genus(2))).unwrap(), rat(0, 1));
        assert_eq!(phi_base(BaseGenerator::NonSeparatingTwist, Genus(3)).unwrap(), rat(4, 7));
        assert_eq!(phi_base(BaseGenerator::SeparatingTwist { h: 1 }, Genus(2)).unwrap(), rat(-4, 5));
        assert!(phi_base(BaseGenerator::SeparatingTwist { h: 3 }, Genus(2)).is_err());
    }

    #[test]
    fn sign_calibration_on_conjugate() {
        // a conjugate keeps the value under either τ sign; the chain relation
        // below is what pins the sign down
        let g = Genus(2);
        let w = MCGWord::from_letters(g, [(Generator::Twist(2), 1), (Generator::Twist(4), -2), (Generator::Twist(3), 1)])
            .unwrap();
        let conj = word(2, &[5]).conjugate_by(&w).unwrap();
        assert_eq!(phi(&conj).unwrap(), rat(3, 5));
        let lhs = word(2, &[1, 2, 3]).pow(4);
        let rhs = word(2, &[5]).pow(2);
        assert_eq!(phi(&lhs).unwrap(), phi(&rhs).unwrap());
    }

    #[test]
    fn separating_twist_from_chain() {
        // t_d = (t1 t2)^6 bounds a genus 1 subsurface
        let td = word(2, &[1, 2]).pow(6);
        assert!(word_to_matrix(&td).unwrap().is_identity());
        assert_eq!(phi(&td).unwrap(), rat(-4, 5));
    }

    #[test]
    fn transvection_shortcut_matches_general_form() {
        use crate::verify::{random_symplectic, rng};
        let mut r = rng(3);
        for g in 1..=3 {
            let genus = Genus(g);
            for _ in 0..150 {
                let a = random_symplectic(&mut r, genus);
                for i in 1..=genus.chain_len() {
                    let c = chain_class(i, genus).unwrap();
                    assert_eq!(tau_transvection(&a, &c).unwrap(), tau(&a, &twist_matrix(&c)).unwrap(), "g={g} i={i} A={}", a.matrix());
                }
            }
        }
    }

    #[test]
    fn symmetric_and_vanishes_on_inverse_pairs() {
        let mut r = crate::verify::rng(11);
        for g in 1..=3 {
            for _ in 0..40 {
                let a = crate::verify::random_symplectic(&mut r, Genus(g));
                let b = crate::verify::random_symplectic(&mut r, Genus(g));
                assert_eq!(tau(&a, &b).unwrap(), tau(&b, &a).unwrap());
                assert_eq!(tau(&a, &a.inverse()).unwrap(), 0);
            }
        }
    }

    #[test]
    fn rejects_non_symplectic() {
        let g = Genus(1);
        let bad = SymplecticMatrix::new(g, crate::ratlin::IntMatrix::from_i64(2, 2, &[2, 0, 0, 1]).unwrap());
        assert!(bad.is_err());
        let a = SymplecticMatrix::identity(g);
        let b = SymplecticMatrix::identity(Genus(2));
        assert_eq!(tau(&a, &b), Err(MeyerError::BadInput));
    }
}
