//! Hyperelliptic directed broken Lefschetz fibrations over `S²`: the data
//! model, validation, the signature via local signatures and `h`, the
//! signature via the Meyer function, Euler characteristic, and the two
//! example families `M_{g,n}` and `M̃_{g,n}`.

mod homeo;
pub mod schema;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use homeo::{homeomorphism_report, Block, Decomposition, Homeomorphism};
pub use schema::SpecDocument;

use crate::locsig::{cut, h_word, s_element, sigma_loc, HContext, HWord, LocsigError};
use crate::meyer::{phi, phi_marked, MeyerError};
use crate::ratlin::{
    int, rank, rat, rational_string, smith_normal_form, IntMatrix, Integer, Rational, RationalMatrix,
};
use crate::surface::{
    curve_action, word_to_matrix, CurveDescriptor, CurveType, Generator, Genus, MCGWord, SurfaceError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibrationError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Meyer(#[from] MeyerError),
    #[error(transparent)]
    Locsig(#[from] LocsigError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("malformed spec: {0}")]
    Malformed(String),
    #[error("signature sum {0} is not an integer; the input data is inconsistent")]
    NonIntegral(String),
    #[error("spin manifold with signature {0} violates Rokhlin's theorem")]
    Rokhlin(i64),
    #[error("{0}")]
    Homeomorphism(String),
    #[error("parameter out of range: {0}")]
    Range(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiberComponent {
    pub genus: Genus,
}

/// A Lefschetz critical value whose monodromy is `conjugator · twist · conjugator⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzDatum {
    pub component: usize,
    pub cycle: CurveDescriptor,
    pub twist: MCGWord,
    pub conjugator: MCGWord,
}

impl LefschetzDatum {
    pub fn word(&self) -> MCGWord {
        self.twist.conjugate_by(&self.conjugator).expect("datum words share the component genus")
    }
}

/// A fold circle; `monodromy` is the monodromy along the higher boundary of
/// its annulus, in the genus of the component it sits on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundRegion {
    pub component: usize,
    pub cycle: CurveDescriptor,
    pub monodromy: MCGWord,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    #[serde(default)]
    pub spin: bool,
    #[serde(default)]
    pub simply_connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationSpec {
    pub higher_fiber: Vec<FiberComponent>,
    pub lefschetz: Vec<LefschetzDatum>,
    pub rounds: Vec<RoundRegion>,
    pub flags: Flags,
}

/// Fiber bookkeeping for one fold: type I lowers the genus, type II_h keeps
/// genus `h` in place and appends a component of genus `g − h`.
fn apply_round(genera: &mut Vec<Genus>, component: usize, kind: CurveType) {
    let g = genera[component].get();
    match kind {
        CurveType::NonSeparating => genera[component] = Genus(g - 1),
        CurveType::Separating { h } => {
            genera[component] = Genus(h);
            genera.push(Genus(g - h));
        }
    }
}

impl FibrationSpec {
    /// Checks the structural constraints (indices, genera, word genera);
    /// the monodromy conditions are left to [`validate`].
    pub fn new(
        higher_fiber: Vec<FiberComponent>,
        lefschetz: Vec<LefschetzDatum>,
        rounds: Vec<RoundRegion>,
        flags: Flags,
    ) -> Result<Self, FibrationError> {
        if higher_fiber.is_empty() {
            return Err(FibrationError::Malformed("the higher fiber needs at least one component".into()));
        }
        for (j, l) in lefschetz.iter().enumerate() {
            let Some(c) = higher_fiber.get(l.component) else {
                return Err(FibrationError::Malformed(format!("lefschetz[{j}]: no component {}", l.component)));
            };
            if c.genus.get() == 0 {
                return Err(FibrationError::Malformed(format!(
                    "lefschetz[{j}]: component {} has genus 0",
                    l.component
                )));
            }
            if l.cycle.genus() != c.genus || l.twist.genus() != c.genus || l.conjugator.genus() != c.genus {
                return Err(FibrationError::Malformed(format!("lefschetz[{j}]: genus does not match its component")));
            }
            if let CurveType::Separating { h } = l.cycle.kind() {
                if h == 0 || h >= c.genus.get() {
                    return Err(FibrationError::Malformed(format!(
                        "lefschetz[{j}]: vanishing cycle of type II_{h} is inessential"
                    )));
                }
            }
        }
        let mut genera: Vec<Genus> = higher_fiber.iter().map(|c| c.genus).collect();
        for (i, r) in rounds.iter().enumerate() {
            let Some(&g) = genera.get(r.component) else {
                return Err(FibrationError::Malformed(format!("rounds[{i}]: no component {}", r.component)));
            };
            if r.cycle.genus() != g || r.monodromy.genus() != g {
                return Err(FibrationError::Malformed(format!(
                    "rounds[{i}]: expected genus {g} for component {}",
                    r.component
                )));
            }
            if matches!(r.cycle.kind(), CurveType::NonSeparating) && g.get() == 0 {
                return Err(FibrationError::Malformed(format!("rounds[{i}]: type I fold on a sphere")));
            }
            apply_round(&mut genera, r.component, r.cycle.kind());
        }
        Ok(FibrationSpec { higher_fiber, lefschetz, rounds, flags })
    }

    /// The trivial bundle `Σ_g × S²`.
    pub fn trivial(genus: Genus) -> Self {
        FibrationSpec {
            higher_fiber: vec![FiberComponent { genus }],
            lefschetz: Vec::new(),
            rounds: Vec::new(),
            flags: Flags { spin: true, simply_connected: genus.get() == 0 },
        }
    }

    pub fn from_json(text: &str) -> Result<Self, FibrationError> {
        SpecDocument::from_json(text)?.into_spec()
    }

    pub fn to_json(&self) -> String {
        SpecDocument::from_spec(self).to_json()
    }

    pub fn lower_fiber(&self) -> Vec<Genus> {
        let mut genera: Vec<Genus> = self.higher_fiber.iter().map(|c| c.genus).collect();
        for r in &self.rounds {
            apply_round(&mut genera, r.component, r.cycle.kind());
        }
        genera
    }

    /// Product of the Lefschetz monodromies sitting on each higher-side component.
    pub fn hurwitz_products(&self) -> Vec<MCGWord> {
        let mut out: Vec<MCGWord> = self.higher_fiber.iter().map(|c| MCGWord::empty(c.genus)).collect();
        for l in &self.lefschetz {
            out[l.component] = out[l.component].concat(&l.word()).expect("genera checked in new");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub index: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &str, index: Option<usize>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), index, passed, detail: detail.into() });
    }

    fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }
}

fn h_round(r: &RoundRegion) -> Result<HWord, LocsigError> {
    HWord::new(HContext::new(r.cycle), r.monodromy.clone())
}

/// Walks the base from the higher disk to the lower disk, checking the
/// monodromy at each step against homology and the Meyer function.
pub fn validate(spec: &FibrationSpec) -> Result<ValidationReport, FibrationError> {
    let mut rep = ValidationReport::default();
    rep.note("monodromy conditions are checked in homology only; geometric membership in the curve stabilizers is assumed");

    for (j, l) in spec.lefschetz.iter().enumerate() {
        let w = l.word();
        let m = phi_marked(&w)?;
        let expected = sigma_loc(l.cycle).map(|s| -s + neighborhood_signature(l.cycle))?;
        let (ok, detail) = match l.cycle.kind() {
            CurveType::NonSeparating => {
                let a = m.matrix.matrix().to_rational();
                let r = rank(&RationalMatrix::from_fn(a.rows(), a.cols(), |p, q| {
                    if p == q { &a[(p, q)] - rat(1, 1) } else { a[(p, q)].clone() }
                }));
                (r == 1, format!("rank(M - I) = {r}"))
            }
            CurveType::Separating { .. } => (m.matrix.is_identity(), "M = I required".to_string()),
        };
        let phi_ok = m.phi == expected;
        rep.push(
            "lefschetz twist",
            Some(j),
            ok && phi_ok,
            format!("{detail}; φ = {} (expected {})", rational_string(&m.phi), rational_string(&expected)),
        );
    }

    let mut current: Vec<Option<MCGWord>> = spec.hurwitz_products().into_iter().map(Some).collect();
    for (i, r) in spec.rounds.iter().enumerate() {
        let k = r.component;
        let hw = h_round(r);
        match &hw {
            Ok(_) => rep.push("(a) generating set", Some(i), true, format!("{} in context {}", r.monodromy, r.cycle.kind())),
            Err(e) => rep.push("(a) generating set", Some(i), false, e.to_string()),
        }

        let m = word_to_matrix(&r.monodromy)?;
        let action = curve_action(&m, &r.cycle.homology())?;
        if action.vacuous {
            rep.push("(b) curve action", Some(i), true, "separating cycle: vacuous in homology");
            rep.note("for type II folds the monodromy must preserve the orientation of the cycle; homology cannot see this");
        } else {
            rep.push(
                "(b) curve action",
                Some(i),
                action.sign != 0,
                format!("M·[d] = {}[d]", match action.sign { 1 => "+", -1 => "-", _ => "?" }),
            );
        }

        match current[k].take() {
            Some(prev) => {
                let pm = word_to_matrix(&prev)?;
                let same = pm == m;
                let ok = same || pm.neg() == m;
                rep.push(
                    "(c) incoming monodromy",
                    Some(i),
                    ok,
                    if same {
                        "matches the round monodromy".to_string()
                    } else if ok {
                        "matches the round monodromy up to ι (−I)".to_string()
                    } else {
                        format!("incoming monodromy {prev} differs from {}", r.monodromy)
                    },
                );
                if ok {
                    rep.note("(c) compares symplectic images, so φ and ιφ are not distinguished");
                }
            }
            None => rep.push("(c) incoming monodromy", Some(i), false, "unknown after an earlier failure"),
        }

        match hw.as_ref().map(cut) {
            Ok(Ok(pieces)) => {
                let mut it = pieces.into_iter();
                current[k] = it.next();
                current.extend(it.map(Some));
            }
            _ => {
                current[k] = None;
                if let CurveType::Separating { .. } = r.cycle.kind() {
                    current.push(None);
                }
            }
        }
    }

    for (k, w) in current.iter().enumerate() {
        match w {
            Some(w) => {
                let m = phi_marked(w)?;
                let ok = m.matrix.is_identity() && m.phi.is_zero();
                rep.push(
                    "(d) lower disk",
                    Some(k),
                    ok,
                    format!("component {k}: {} (φ = {})", if w.is_empty() { "1".into() } else { w.to_string() }, rational_string(&m.phi)),
                );
            }
            None => rep.push("(d) lower disk", Some(k), false, "unknown after an earlier failure"),
        }
    }
    if spec.higher_fiber.len() > 1 {
        rep.note("components carrying no folds or Lefschetz singularities contribute to χ only");
    }
    Ok(rep)
}

/// Signature of a regular neighbourhood of a Lefschetz singular fiber.
fn neighborhood_signature(c: CurveDescriptor) -> Rational {
    if c.is_separating() {
        rat(-1, 1)
    } else {
        Rational::zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureBreakdown {
    pub rounds: Vec<Rational>,
    pub lefschetz: Vec<Rational>,
    pub total: Rational,
}

fn integral(total: &Rational) -> Result<i64, FibrationError> {
    if !total.is_integer() {
        return Err(FibrationError::NonIntegral(rational_string(total)));
    }
    i64::try_from(total.to_integer()).map_err(|_| FibrationError::NonIntegral(rational_string(total)))
}

/// `Σ h_{g_i,d_i}(φ_i) + Σ σ_loc(f⁻¹(y_j))`
pub fn signature_breakdown(spec: &FibrationSpec) -> Result<SignatureBreakdown, FibrationError> {
    let rounds = spec.rounds.iter().map(|r| Ok(h_word(&h_round(r)?)?)).collect::<Result<Vec<_>, FibrationError>>()?;
    let lefschetz = spec.lefschetz.iter().map(|l| sigma_loc(l.cycle)).collect::<Result<Vec<_>, _>>()?;
    let total = rounds.iter().chain(&lefschetz).fold(Rational::zero(), |acc, x| acc + x);
    Ok(SignatureBreakdown { rounds, lefschetz, total })
}

pub fn total_signature(spec: &FibrationSpec) -> Result<i64, FibrationError> {
    integral(&signature_breakdown(spec)?.total)
}

/// The signature assembled from the Meyer function:
/// `Σ s(φ_i) + Σ φ(ψ₁⋯ψ_n) − Σ φ(ψ_j) + Σ Sign(ν(f⁻¹(y_j)))`,
/// with the product of the Hurwitz system standing in for the first round
/// monodromy on each component.
pub fn signature_meyer_path(spec: &FibrationSpec) -> Result<i64, FibrationError> {
    let mut total = Rational::zero();
    for r in &spec.rounds {
        let m = word_to_matrix(&r.monodromy)?;
        total += rat(s_element(&HContext::new(r.cycle), &m)? as i64, 1);
    }
    for w in spec.hurwitz_products() {
        total += phi(&w)?;
    }
    for l in &spec.lefschetz {
        total -= phi(&l.word())?;
        total += neighborhood_signature(l.cycle);
    }
    integral(&total)
}

/// Additivity over the base: disks contribute `χ(F)`, annuli 0, and each
/// Lefschetz fiber one extra.
pub fn euler_characteristic(spec: &FibrationSpec) -> i64 {
    let chi = |gs: &mut dyn Iterator<Item = Genus>| gs.map(|g| 2 - 2 * g.get() as i64).sum::<i64>();
    chi(&mut spec.higher_fiber.iter().map(|c| c.genus)) + spec.lefschetz.len() as i64 + chi(&mut spec.lower_fiber().into_iter())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Mgn,
    MgnTilde,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Mgn => write!(f, "mgn"),
            Family::MgnTilde => write!(f, "mgn-tilde"),
        }
    }
}

/// `M_{g,n}`: Hurwitz system `(t_{2g} ⋯ t_2 t_1² t_2 ⋯ t_{2g})^{2n}` and one
/// type I fold with monodromy `t_{2g+1}^{−4n}`. `M̃_{g,n}` appends
/// `(t_1 ⋯ t_{2g−2})^{2(2g−1)n}` and folds with
/// `(t_{2g+1}^{−2} ι)^{2n} (t_1 ⋯ t_{2g−2})^{2(2g−1)n}`.
pub fn family_spec(family: Family, g: u32, n: u32) -> Result<FibrationSpec, FibrationError> {
    let min_g = match family {
        Family::Mgn => 1,
        Family::MgnTilde => 2,
    };
    if g < min_g || n < 1 {
        return Err(FibrationError::Range(format!("{family} needs g >= {min_g} and n >= 1, got g = {g}, n = {n}")));
    }
    let genus = Genus(g);
    let block: Vec<u32> = (1..=2 * g).rev().chain(1..=2 * g).collect();
    let mut letters: Vec<u32> = (0..2 * n).flat_map(|_| block.iter().copied()).collect();
    let chain = MCGWord::twists(genus, 1..=2 * g - 2)?;
    let chain_power = 2 * (2 * g - 1) * n;
    let monodromy = match family {
        Family::Mgn => MCGWord::from_letters(genus, [(Generator::Twist(2 * g + 1), -4 * n as i64)])?,
        Family::MgnTilde => {
            letters.extend((0..chain_power).flat_map(|_| 1..=2 * g - 2));
            let head = MCGWord::from_letters(genus, [(Generator::Twist(2 * g + 1), -2), (Generator::Iota, 1)])?;
            head.pow(2 * n as i64).concat(&chain.pow(chain_power as i64))?
        }
    };
    let cycle = CurveDescriptor::new(genus, CurveType::NonSeparating)?;
    let lefschetz = letters
        .into_iter()
        .map(|i| {
            Ok(LefschetzDatum { component: 0, cycle, twist: MCGWord::twists(genus, [i])?, conjugator: MCGWord::empty(genus) })
        })
        .collect::<Result<Vec<_>, FibrationError>>()?;
    let spin = match family {
        Family::Mgn => g % 2 == 0 && n % 2 == 0,
        Family::MgnTilde => g % 2 == 0,
    };
    FibrationSpec::new(
        vec![FiberComponent { genus }],
        lefschetz,
        vec![RoundRegion { component: 0, cycle, monodromy }],
        Flags { spin, simply_connected: true },
    )
}

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<Integer>,
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let k = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(match k {
                1 => format!("Z/{d}"),
                2 => format!("(Z/{d})²"),
                3 => format!("(Z/{d})³"),
                k => format!("(Z/{d})^{k}"),
            });
            i += k;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// `H_1` of the stabilizer of a type I curve, or of the oriented stabilizer
/// of a type II_h curve; the latter is `Z² / <(4h(2h+1), −4(g−h)(2(g−h)+1))>`.
pub fn abelianization(curve: CurveDescriptor) -> Result<AbelianGroup, FibrationError> {
    let g = curve.genus().get();
    match curve.kind() {
        CurveType::NonSeparating if g == 0 => Err(FibrationError::Range("genus must be positive".into())),
        CurveType::NonSeparating if g == 1 => Ok(AbelianGroup { free_rank: 1, torsion: vec![int(2)] }),
        CurveType::NonSeparating => Ok(AbelianGroup { free_rank: 1, torsion: vec![int(2), int(2)] }),
        CurveType::Separating { h } if h == 0 || h >= g => {
            Err(FibrationError::Range(format!("type II_{h} needs 1 <= h <= g - 1 = {}", g.saturating_sub(1))))
        }
        CurveType::Separating { h } => {
            let (h, k) = (h as i64, (g - h) as i64);
            let rel = IntMatrix::from_i64(1, 2, &[4 * h * (2 * h + 1), -4 * k * (2 * k + 1)]).expect("1x2");
            let snf = smith_normal_form(&rel);
            let nonzero = snf.diagonal().into_iter().filter(|d| !d.is_zero()).count();
            Ok(AbelianGroup { free_rank: 2 - nonzero, torsion: snf.torsion() })
        }
    }
}

/// Everything computed for a spec. Rationals are `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub signature: Option<i64>,
    pub signature_sum: Option<String>,
    pub euler: i64,
    pub round_terms: Vec<String>,
    pub lefschetz_terms: Vec<String>,
    pub meyer_path_signature: Option<i64>,
    pub paths_agree: bool,
    pub validation: ValidationReport,
    pub homeomorphism: Option<String>,
    pub flags: Flags,
    pub errors: Vec<String>,
}

impl InvariantReport {
    /// Validation passed, both signature paths agree, nothing errored.
    pub fn ok(&self) -> bool {
        self.validation.passed() && self.paths_agree && self.errors.is_empty()
    }
}

pub fn compute(spec: &FibrationSpec) -> Result<InvariantReport, FibrationError> {
    let validation = validate(spec)?;
    let euler = euler_characteristic(spec);
    let mut errors = Vec::new();
    let breakdown = signature_breakdown(spec).map_err(|e| errors.push(e.to_string())).ok();
    let signature = breakdown.as_ref().and_then(|b| integral(&b.total).map_err(|e| errors.push(e.to_string())).ok());
    let meyer = signature_meyer_path(spec).map_err(|e| errors.push(format!("Meyer path: {e}"))).ok();
    let paths_agree = signature.is_some() && signature == meyer;
    let homeomorphism = signature.and_then(|s| {
        homeomorphism_report(s, euler, spec.flags.spin, spec.flags.simply_connected)
            .map(|h| h.to_string())
            .map_err(|e| errors.push(e.to_string()))
            .ok()
    });
    let strings = |v: &[Rational]| v.iter().map(rational_string).collect();
    Ok(InvariantReport {
        signature,
        signature_sum: breakdown.as_ref().map(|b| rational_string(&b.total)),
        euler,
        round_terms: breakdown.as_ref().map_or_else(Vec::new, |b| strings(&b.rounds)),
        lefschetz_terms: breakdown.as_ref().map_or_else(Vec::new, |b| strings(&b.lefschetz)),
        meyer_path_signature: meyer,
        paths_agree,
        validation,
        homeomorphism,
        flags: spec.flags,
        errors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mgn_one_one() {
        let spec = family_spec(Family::Mgn, 1, 1).unwrap();
        assert_eq!(spec.lefschetz.len(), 8);
        assert!(validate(&spec).unwrap().passed());
        assert_eq!(total_signature(&spec).unwrap(), -4);
        assert_eq!(signature_meyer_path(&spec).unwrap(), -4);
        assert_eq!(euler_characteristic(&spec), 10);
        let r = compute(&spec).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.homeomorphism.as_deref(), Some("#2CP² # 6CP̄²"));
    }

    #[test]
    fn tilde_two_one() {
        let spec = family_spec(Family::MgnTilde, 2, 1).unwrap();
        assert_eq!(spec.lefschetz.len(), 28);
        let v = validate(&spec).unwrap();
        assert!(v.passed(), "{:?}", v.failures().collect::<Vec<_>>());
        assert_eq!(total_signature(&spec).unwrap(), -16);
        assert_eq!(signature_meyer_path(&spec).unwrap(), -16);
        assert_eq!(euler_characteristic(&spec), 26);
        assert!(spec.flags.spin);
    }

    #[test]
    fn trivial_bundle() {
        let spec = FibrationSpec::trivial(Genus(2));
        assert!(validate(&spec).unwrap().passed());
        assert_eq!(total_signature(&spec).unwrap(), 0);
        assert_eq!(signature_meyer_path(&spec).unwrap(), 0);
        assert_eq!(euler_characteristic(&spec), -4);
    }

    #[test]
    fn out_of_context_round() {
        let g = Genus(2);
        let cycle = CurveDescriptor::new(g, CurveType::NonSeparating).unwrap();
        let spec = FibrationSpec::new(
            vec![FiberComponent { genus: g }],
            vec![],
            vec![RoundRegion { component: 0, cycle, monodromy: MCGWord::twists(g, [4]).unwrap() }],
            Flags::default(),
        )
        .unwrap();
        let v = validate(&spec).unwrap();
        let f: Vec<_> = v.failures().map(|c| c.name.as_str()).collect();
        assert!(f.contains(&"(a) generating set"), "{f:?}");
    }

    #[test]
    fn json_round_trip() {
        let spec = family_spec(Family::MgnTilde, 2, 1).unwrap();
        let back = FibrationSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn malformed_specs() {
        let bad_component = r#"{"spec_version":1,"higher_fiber":[{"genus":1}],"lefschetz":[{"type":"I","component":3}]}"#;
        assert!(matches!(FibrationSpec::from_json(bad_component), Err(FibrationError::Malformed(_))));
        let sphere = r#"{"spec_version":1,"higher_fiber":[{"genus":0}],"lefschetz":[{"type":"I"}]}"#;
        assert!(matches!(FibrationSpec::from_json(sphere), Err(FibrationError::Malformed(_))));
        let version = r#"{"spec_version":2,"higher_fiber":[{"genus":1}]}"#;
        assert!(FibrationSpec::from_json(version).is_err());
        let word = r#"{"spec_version":1,"higher_fiber":[{"genus":1}],"rounds":[{"component":0,"cycle":{"type":"I"},"monodromy":"t7"}]}"#;
        assert!(matches!(FibrationSpec::from_json(word), Err(FibrationError::Parse(_))));
    }

    #[test]
    fn abelianizations() {
        let c = |g, k| CurveDescriptor::new(Genus(g), k).unwrap();
        assert_eq!(abelianization(c(2, CurveType::NonSeparating)).unwrap().to_string(), "Z ⊕ (Z/2)²");
        assert_eq!(abelianization(c(1, CurveType::NonSeparating)).unwrap().to_string(), "Z ⊕ Z/2");
        assert_eq!(abelianization(c(2, CurveType::Separating { h: 1 })).unwrap().to_string(), "Z ⊕ Z/12");
        assert_eq!(abelianization(c(3, CurveType::Separating { h: 1 })).unwrap().to_string(), "Z ⊕ Z/4");
        assert!(abelianization(c(3, CurveType::Separating { h: 0 })).is_err());
    }
}
