//! Seeded randomized property suites: cocycle and relation identities for
//! `τ` and `φ`, the decomposition `h = s + φ − Φ*φ`, and agreement of the
//! two signature computations on random fibrations.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fibration::{
    family_spec, signature_meyer_path, total_signature, validate, Family, FiberComponent, FibrationSpec, Flags,
    LefschetzDatum, RoundRegion,
};
use crate::locsig::{cut, cut_matrix_type_one, decomposition_check, s_element, HContext, HWord};
use crate::meyer::{phi, phi_marked, tau};
use crate::ratlin::{rat, rational_string};
use crate::surface::{word_to_matrix, CurveDescriptor, CurveType, Generator, Genus, MCGWord, SymplecticMatrix};

pub const DEFAULT_SEED: u64 = 0x5eed_b1f5;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub samples: usize,
    pub max_genus: u32,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { samples: 100, max_genus: 3, seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult { name: name.into(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard generators of the stabilizer of the given curve.
pub fn context_generators(ctx: &HContext) -> Vec<Generator> {
    let g = ctx.genus().get();
    let mut gens: Vec<Generator> = (1..=2 * g + 1).map(Generator::Twist).collect();
    gens.push(Generator::Iota);
    gens.retain(|x| ctx.admits(*x));
    gens
}

pub fn all_generators(genus: Genus) -> Vec<Generator> {
    let mut gens: Vec<Generator> = (1..=genus.chain_len()).map(Generator::Twist).collect();
    gens.push(Generator::Iota);
    gens
}

/// A random word of `len` letters, exponents in `{±1, ±2}`.
pub fn random_word(rng: &mut Rng64, genus: Genus, gens: &[Generator], len: usize) -> MCGWord {
    let letters = (0..len).map(|_| {
        let g = *gens.choose(rng).expect("nonempty generator list");
        let e: i64 = *[1, 1, 1, -1, -1, 2, -2].choose(rng).unwrap();
        (g, e)
    });
    MCGWord::from_letters(genus, letters).expect("generators are in range")
}

fn twist_gens(genus: Genus) -> Vec<Generator> {
    (1..=genus.chain_len()).map(Generator::Twist).collect()
}

pub fn random_symplectic(rng: &mut Rng64, genus: Genus) -> SymplecticMatrix {
    let len = rng.gen_range(1..=8);
    word_to_matrix(&random_word(rng, genus, &twist_gens(genus), len)).expect("valid word")
}

pub fn cocycle_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut r = SuiteResult::new("tau cocycle identity and |tau| <= 2g");
    let mut rng = rng(cfg.seed);
    for g in 1..=cfg.max_genus {
        let genus = Genus(g);
        for _ in 0..cfg.samples {
            let (a, b, c) = (random_symplectic(&mut rng, genus), random_symplectic(&mut rng, genus), random_symplectic(&mut rng, genus));
            let ab = a.mul(&b).unwrap();
            let bc = b.mul(&c).unwrap();
            let vals = [tau(&a, &b), tau(&ab, &c), tau(&b, &c), tau(&a, &bc)];
            let ok = match vals {
                [Ok(x), Ok(y), Ok(z), Ok(w)] => {
                    x + y == z + w && vals.iter().all(|v| v.as_ref().unwrap().unsigned_abs() <= 2 * g as u64)
                }
                _ => false,
            };
            r.record(ok, || format!("g={g}: {vals:?}"));
        }
    }
    r
}

/// Pairs of words that represent the same hyperelliptic mapping class.
pub fn relation_pairs(genus: Genus) -> Vec<(String, MCGWord, MCGWord)> {
    let g = genus.get();
    let n = genus.chain_len();
    let tw = |idx: &[u32]| MCGWord::twists(genus, idx.iter().copied()).unwrap();
    let empty = MCGWord::empty(genus);
    let iota = MCGWord::from_letters(genus, [(Generator::Iota, 1)]).unwrap();
    let mut out = Vec::new();
    for i in 1..n {
        out.push((format!("braid t{i} t{}", i + 1), tw(&[i, i + 1, i]), tw(&[i + 1, i, i + 1])));
    }
    for i in 1..=n {
        for j in i + 2..=n {
            if g == 1 && (i, j) == (1, 3) {
                continue;
            }
            out.push((format!("commute t{i} t{j}"), tw(&[i, j]), tw(&[j, i])));
        }
        out.push((format!("iota central t{i}"), iota.concat(&tw(&[i])).unwrap(), tw(&[i]).concat(&iota).unwrap()));
    }
    let odd: Vec<u32> = (1..2 * g).collect();
    out.push(("chain (t1..t2g-1)^2g = t2g+1^2".into(), tw(&odd).pow(2 * g as i64), tw(&[n]).pow(2)));
    let even: Vec<u32> = (1..=2 * g).collect();
    out.push(("chain (t1..t2g)^(4g+2) = 1".into(), tw(&even).pow(4 * g as i64 + 2), empty.clone()));
    let full: Vec<u32> = (1..=n).collect();
    out.push(("hyperelliptic (t1..t2g+1)^(2g+2) = 1".into(), tw(&full).pow(2 * g as i64 + 2), empty.clone()));
    let rev: Vec<u32> = (1..=n).rev().collect();
    out.push(("t1..t2g+1 t2g+1..t1 = iota".into(), tw(&full).concat(&tw(&rev)).unwrap(), iota.clone()));
    out.push(("iota^2 = 1".into(), iota.pow(2), empty));
    out
}

pub fn relation_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut r = SuiteResult::new("phi word-independence on relations");
    for g in 1..=cfg.max_genus {
        for (name, lhs, rhs) in relation_pairs(Genus(g)) {
            let (a, b) = (phi_marked(&lhs), phi_marked(&rhs));
            let ok = matches!((&a, &b), (Ok(x), Ok(y)) if x == y);
            r.record(ok, || format!("g={g} {name}: {a:?} vs {b:?}"));
        }
    }
    r
}

pub fn phi_suites(cfg: &VerifyConfig) -> Vec<SuiteResult> {
    let mut anti = SuiteResult::new("phi antisymmetry");
    let mut conj = SuiteResult::new("phi conjugation invariance");
    let mut denom = SuiteResult::new("(2g+1) phi integral");
    let mut rng = rng(cfg.seed ^ 0x11);
    for g in 1..=cfg.max_genus {
        let genus = Genus(g);
        let gens = all_generators(genus);
        for _ in 0..cfg.samples {
            let len = rng.gen_range(1..=12);
            let w = random_word(&mut rng, genus, &gens, len);
            let ulen = rng.gen_range(1..=6);
            let u = random_word(&mut rng, genus, &gens, ulen);
            let p = phi(&w).unwrap();
            let pinv = phi(&w.inverse()).unwrap();
            anti.record(p == -pinv.clone(), || format!("g={g} {w}: {p} / {pinv}"));
            let pc = phi(&w.conjugate_by(&u).unwrap()).unwrap();
            conj.record(pc == p, || format!("g={g} {w} by {u}: {p} / {pc}"));
            let scaled = &p * rat(2 * g as i64 + 1, 1);
            denom.record(scaled.is_integer(), || format!("g={g} {w}: {}", rational_string(&p)));
        }
    }
    vec![anti, conj, denom]
}

pub fn contexts(max_genus: u32) -> Vec<HContext> {
    let mut out = Vec::new();
    for g in 1..=max_genus {
        out.push(HContext::type_one(Genus(g)).unwrap());
        for h in 0..=g {
            out.push(HContext::type_two(Genus(g), h).unwrap());
        }
    }
    out
}

pub fn decomposition_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut r = SuiteResult::new("h = s + phi - Phi*phi");
    let mut rng = rng(cfg.seed ^ 0x22);
    for ctx in contexts(cfg.max_genus) {
        let gens = context_generators(&ctx);
        for &gen in &gens {
            let w = HWord::new(ctx, MCGWord::from_letters(ctx.genus(), [(gen, 1)]).unwrap()).unwrap();
            let rep = decomposition_check(&w);
            r.record(matches!(&rep, Ok(x) if x.holds), || format!("{:?} {gen}: {rep:?}", ctx.curve()));
        }
        for _ in 0..cfg.samples {
            let len = rng.gen_range(1..=20);
            let w = HWord::new(ctx, random_word(&mut rng, ctx.genus(), &gens, len)).unwrap();
            let rep = decomposition_check(&w);
            r.record(matches!(&rep, Ok(x) if x.holds), || format!("{:?} {}: {rep:?}", ctx.curve(), w.word()));
        }
    }
    r
}

/// `s(A) + s(B) − s(AB) = τ_{g−1}(ΦA, ΦB) − τ_g(A, B)` in type I contexts.
pub fn s_cocycle_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut r = SuiteResult::new("s cobounds Phi*tau - tau");
    let mut rng = rng(cfg.seed ^ 0x33);
    for g in 1..=cfg.max_genus {
        let ctx = HContext::type_one(Genus(g)).unwrap();
        let gens = context_generators(&ctx);
        for _ in 0..cfg.samples {
            let (la, lb) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let a = word_to_matrix(&random_word(&mut rng, Genus(g), &gens, la)).unwrap();
            let b = word_to_matrix(&random_word(&mut rng, Genus(g), &gens, lb)).unwrap();
            let ab = a.mul(&b).unwrap();
            let s = |m: &SymplecticMatrix| s_element(&ctx, m).unwrap() as i64;
            let lhs = s(&a) + s(&b) - s(&ab);
            let rhs = tau(&cut_matrix_type_one(&a), &cut_matrix_type_one(&b)).unwrap() - tau(&a, &b).unwrap();
            r.record(lhs == rhs, || format!("g={g}: {lhs} vs {rhs}"));
        }
    }
    r
}

fn datum(genus: Genus, kind: CurveType, twist: MCGWord, conjugator: MCGWord) -> LefschetzDatum {
    LefschetzDatum { component: 0, cycle: CurveDescriptor::new(genus, kind).unwrap(), twist, conjugator }
}

fn type_one_data(genus: Genus, letters: &[u32], conjugator: &MCGWord) -> Vec<LefschetzDatum> {
    letters
        .iter()
        .map(|&i| datum(genus, CurveType::NonSeparating, MCGWord::twists(genus, [i]).unwrap(), conjugator.clone()))
        .collect()
}

/// Replace `(ψ_j, ψ_{j+1})` by `(ψ_j ψ_{j+1} ψ_j⁻¹, ψ_j)`; the product is unchanged.
pub fn hurwitz_move(data: &mut [LefschetzDatum], j: usize) {
    let (a, b) = (data[j].clone(), data[j + 1].clone());
    let conj = a.word().concat(&b.conjugator).unwrap();
    data[j] = LefschetzDatum { conjugator: conj, ..b };
    data[j + 1] = a;
}

fn product(data: &[LefschetzDatum], genus: Genus) -> MCGWord {
    data.iter().fold(MCGWord::empty(genus), |acc, d| acc.concat(&d.word()).unwrap())
}

/// A random fibration with a single fold on a genus `g` fiber, built so that
/// the fold monodromy is literally the Hurwitz product and cutting it gives a
/// relation on the lower side. Up to two Hurwitz moves and a global
/// conjugation are applied on top.
pub fn random_spec(rng: &mut Rng64, g: u32) -> FibrationSpec {
    let genus = Genus(g);
    let separating = g >= 2 && rng.gen_bool(0.4);
    let (kind, ctx) = if separating {
        let h = rng.gen_range(1..g);
        (CurveType::Separating { h }, HContext::type_two(genus, h).unwrap())
    } else {
        (CurveType::NonSeparating, HContext::type_one(genus).unwrap())
    };
    let gens = context_generators(&ctx);
    let mut data = Vec::new();
    let blocks = rng.gen_range(1..=3);
    for _ in 0..blocks {
        let xlen = rng.gen_range(0..=2);
        let x = random_word(rng, genus, &gens, xlen);
        match kind {
            CurveType::NonSeparating => match rng.gen_range(0..3) {
                0 => data.extend(type_one_data(genus, &[2 * g + 1], &x)),
                1 if g >= 2 => {
                    // genus g−1 hyperelliptic relation after cutting
                    let chain: Vec<u32> = (1..2 * g).collect();
                    let letters: Vec<u32> = (0..2 * g).flat_map(|_| chain.iter().copied()).collect();
                    data.extend(type_one_data(genus, &letters, &x));
                }
                _ if g >= 2 => {
                    let h = g - 1;
                    let sep = CurveType::Separating { h };
                    let twist = crate::fibration::schema::default_twist(genus, sep).unwrap();
                    data.push(datum(genus, sep, twist, x));
                }
                _ => data.extend(type_one_data(genus, &[1, 3], &x)),
            },
            CurveType::Separating { h } => {
                let side_one: Vec<u32> = (1..=2 * h).collect();
                let side_two: Vec<u32> = (2 * h + 2..=2 * g + 1).collect();
                let (chain, power) = if rng.gen_bool(0.5) {
                    (side_one, 4 * h + 2)
                } else {
                    (side_two, 4 * (g - h) + 2)
                };
                if rng.gen_bool(0.3) && chain[0] == 1 {
                    data.push(datum(genus, kind, crate::fibration::schema::default_twist(genus, kind).unwrap(), x));
                } else {
                    let letters: Vec<u32> = (0..power).flat_map(|_| chain.iter().copied()).collect();
                    data.extend(type_one_data(genus, &letters, &x));
                }
            }
        }
    }
    let mut monodromy = product(&data, genus);
    for _ in 0..rng.gen_range(0..=2) {
        if data.len() >= 2 {
            let j = rng.gen_range(0..data.len() - 1);
            hurwitz_move(&mut data, j);
        }
    }
    if rng.gen_bool(0.5) {
        let ulen = rng.gen_range(1..=2);
        let u = random_word(rng, genus, &gens, ulen);
        for d in &mut data {
            d.conjugator = u.concat(&d.conjugator).unwrap();
        }
        monodromy = monodromy.conjugate_by(&u).unwrap();
    }
    FibrationSpec::new(
        vec![FiberComponent { genus }],
        data,
        vec![RoundRegion { component: 0, cycle: CurveDescriptor::new(genus, kind).unwrap(), monodromy }],
        Flags::default(),
    )
    .expect("constructed spec is well formed")
}

/// Two folds: a type I fold from genus g, then a type I fold on the genus
/// `g − 1` fiber whose monodromy is the cut of the first.
pub fn random_two_fold_spec(rng: &mut Rng64, g: u32) -> FibrationSpec {
    assert!(g >= 2);
    let genus = Genus(g);
    let gens: Vec<Generator> = (1..=2 * g - 3)
        .chain([2 * g - 1, 2 * g + 1])
        .map(Generator::Twist)
        .chain([Generator::Iota])
        .collect();
    let mut data = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let xlen = rng.gen_range(0..=2);
        let x = random_word(rng, genus, &gens, xlen);
        let i = if rng.gen_bool(0.5) { 2 * g + 1 } else { 2 * g - 1 };
        data.extend(type_one_data(genus, &[i], &x));
    }
    let first = product(&data, genus);
    let ctx = HContext::type_one(genus).unwrap();
    let second = cut(&HWord::new(ctx, first.clone()).unwrap()).unwrap().remove(0);
    let one = CurveDescriptor::new(genus, CurveType::NonSeparating).unwrap();
    let two = CurveDescriptor::new(Genus(g - 1), CurveType::NonSeparating).unwrap();
    FibrationSpec::new(
        vec![FiberComponent { genus }],
        data,
        vec![
            RoundRegion { component: 0, cycle: one, monodromy: first },
            RoundRegion { component: 0, cycle: two, monodromy: second },
        ],
        Flags::default(),
    )
    .expect("constructed spec is well formed")
}

/// Validation passes and both signature computations agree.
pub fn check_two_paths(spec: &FibrationSpec) -> Result<i64, String> {
    let v = validate(spec).map_err(|e| e.to_string())?;
    if !v.passed() {
        return Err(format!("validation: {:?}", v.failures().collect::<Vec<_>>()));
    }
    let a = total_signature(spec).map_err(|e| e.to_string())?;
    let b = signature_meyer_path(spec).map_err(|e| e.to_string())?;
    if a != b {
        return Err(format!("h path {a} vs Meyer path {b}"));
    }
    Ok(a)
}

pub fn two_path_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut r = SuiteResult::new("two-path signature equality");
    for g in 1..=cfg.max_genus {
        for n in 1..=2 {
            let spec = family_spec(Family::Mgn, g, n).unwrap();
            let res = check_two_paths(&spec);
            r.record(res == Ok(-4 * (g * n) as i64), || format!("mgn g={g} n={n}: {res:?}"));
            if g >= 2 {
                let spec = family_spec(Family::MgnTilde, g, n).unwrap();
                let res = check_two_paths(&spec);
                r.record(res == Ok(-4 * (g * g * n) as i64), || format!("mgn-tilde g={g} n={n}: {res:?}"));
            }
        }
    }
    let mut rng = rng(cfg.seed ^ 0x44);
    for k in 0..cfg.samples {
        let g = 1 + (k as u32 % cfg.max_genus.max(1));
        let spec = if g >= 2 && k % 5 == 4 { random_two_fold_spec(&mut rng, g) } else { random_spec(&mut rng, g) };
        let res = check_two_paths(&spec);
        r.record(res.is_ok(), || format!("random g={g}: {res:?}\n{}", spec.to_json()));
    }
    r
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteResult> {
    let mut out = vec![cocycle_suite(cfg), relation_suite(cfg)];
    out.extend(phi_suites(cfg));
    out.push(decomposition_suite(cfg));
    out.push(s_cocycle_suite(cfg));
    out.push(two_path_suite(cfg));
    out
}

/// Sum of `phi` over a list of words, for tests that compare aggregates.
pub fn phi_sum(words: &[MCGWord]) -> crate::ratlin::Rational {
    words.iter().fold(crate::ratlin::Rational::zero(), |acc, w| acc + phi(w).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let cfg = VerifyConfig { samples: 15, max_genus: 2, seed: 7 };
        for s in run_all(&cfg) {
            assert!(s.passed(), "{}: {:?}", s.name, s.examples);
        }
    }

    #[test]
    fn hurwitz_move_keeps_product() {
        let spec = family_spec(Family::Mgn, 1, 1).unwrap();
        let mut data = spec.lefschetz.clone();
        hurwitz_move(&mut data, 2);
        hurwitz_move(&mut data, 0);
        assert_eq!(word_to_matrix(&product(&data, Genus(1))).unwrap(), word_to_matrix(&product(&spec.lefschetz, Genus(1))).unwrap());
        assert_eq!(phi_sum(&[product(&data, Genus(1))]), phi_sum(&[product(&spec.lefschetz, Genus(1))]));
    }
}
