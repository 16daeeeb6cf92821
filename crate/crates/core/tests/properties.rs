use proptest::prelude::*;

use blfsig::cli::grammar::parse_word;
use blfsig::fibration::{compute, family_spec, Family, FibrationSpec, InvariantReport};
use blfsig::meyer::phi;
use blfsig::ratlin::{rat, signature_of_symmetric, RationalMatrix};
use blfsig::surface::{twist_matrix, word_to_matrix, Generator, Genus, HomologyClass, MCGWord};
use blfsig::verify::{random_spec, rng};

fn letters(g: u32) -> impl Strategy<Value = Vec<(Generator, i64)>> {
    let gen = (0..=2 * g + 1).prop_map(move |i| if i == 0 { Generator::Iota } else { Generator::Twist(i) });
    let exp = prop_oneof![-3i64..=-1, 1i64..=3];
    prop::collection::vec((gen, exp), 0..8)
}

fn word() -> impl Strategy<Value = MCGWord> {
    (1u32..=4).prop_flat_map(|g| (Just(g), letters(g), letters(g), -3i64..=3, letters(g))).prop_map(|(g, a, b, k, c)| {
        let w = |l: Vec<(Generator, i64)>| MCGWord::from_letters(Genus(g), l).unwrap();
        w(a).concat(&w(b).pow(k)).unwrap().concat(&w(c)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signature_is_a_congruence_invariant(
        n in 1usize..=5,
        entries in prop::collection::vec(-4i64..=4, 25),
        upper in prop::collection::vec(-3i64..=3, 25),
        diag in prop::collection::vec(prop_oneof![Just(-1i64), Just(1), Just(2), Just(-3)], 5),
    ) {
        let a = RationalMatrix::from_fn(n, n, |i, j| rat(entries[i.min(j) * 5 + i.max(j)], 1));
        // P = unit upper triangular with a nonzero diagonal scaling, hence invertible
        let p = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => rat(upper[i * 5 + j], 1),
            std::cmp::Ordering::Equal => rat(diag[i], 1),
            std::cmp::Ordering::Greater => rat(0, 1),
        });
        let b = &(&p.transpose() * &a) * &p;
        prop_assert_eq!(signature_of_symmetric(&a).unwrap(), signature_of_symmetric(&b).unwrap());
    }

    #[test]
    fn words_round_trip_through_text(w in word()) {
        let text = w.to_string();
        let back = parse_word(&text, w.genus()).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(word_to_matrix(&back).unwrap(), word_to_matrix(&w).unwrap());
        prop_assert_eq!(back.expanded_len(), w.expanded_len());
    }

    #[test]
    fn phi_is_antisymmetric(w in word()) {
        prop_assert_eq!(phi(&w.inverse()).unwrap(), -phi(&w).unwrap());
    }

    #[test]
    fn transvections_are_symplectic(g in 1u32..=4, coords in prop::collection::vec(-3i64..=3, 8)) {
        let c = HomologyClass::from_i64(Genus(g), &coords[..2 * g as usize]).unwrap();
        let t = twist_matrix(&c);
        prop_assert!(t.is_symplectic());
        prop_assert!(t.mul(&t.inverse()).unwrap().is_identity());
        prop_assert_eq!(t.apply(&c), c);
    }

    #[test]
    fn specs_round_trip_through_json(seed in any::<u64>(), g in 1u32..=3) {
        let spec = random_spec(&mut rng(seed), g);
        let back = FibrationSpec::from_json(&spec.to_json()).unwrap();
        prop_assert_eq!(back, spec);
    }
}

#[test]
fn reports_round_trip_through_json() {
    for (family, g, n) in [(Family::Mgn, 1, 1), (Family::Mgn, 2, 2), (Family::MgnTilde, 2, 1)] {
        let rep = compute(&family_spec(family, g, n).unwrap()).unwrap();
        let text = serde_json::to_string(&rep).unwrap();
        let back: InvariantReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
    }
}
