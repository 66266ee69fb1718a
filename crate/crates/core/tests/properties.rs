//! Property-based invariants: exact algebra laws, action laws, alternation,
//! and round-trips, on randomized inputs.

use std::collections::BTreeMap;

use proptest::prelude::*;

use doa_core::cochain::{sort_triple, TwoCochain};
use doa_core::families::{build, FamilyName, FamilySpec};
use doa_core::group::{all_perms, compose, Perm};
use doa_core::group_algebra::{ga_act, GAElt};
use doa_core::groebner::{buchberger, normal_form, GroebnerOpts};
use doa_core::oracle::{build_rewrite, normal_form_nc, NCElement, NCWord};
use doa_core::param::{parse_poly, Mono, ParamPoly, ParamSymbol, ALL_SYMBOLS};
use doa_core::rat::{frac, rat, Rat};
use doa_core::space::{basis, BasisIndex, Vect};
use doa_core::sympoly::SymPoly2;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

fn mono() -> impl Strategy<Value = Mono> {
    proptest::collection::vec((0usize..ALL_SYMBOLS.len(), 1u8..=2), 0..3).prop_map(|factors| {
        let mut m = Mono::ONE;
        for (i, e) in factors {
            m.0[i] = m.0[i].saturating_add(e);
        }
        m
    })
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    proptest::collection::vec((mono(), small_rat()), 0..6).prop_map(|terms| {
        let mut p = ParamPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    })
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    let count = (1..=n).product::<usize>();
    (0..count).prop_map(move |i| all_perms(n)[i].clone())
}

fn vect(n: usize) -> impl Strategy<Value = Vect> {
    proptest::collection::vec((0..2 * n, small_rat()), 0..5).prop_map(move |coords| {
        let mut v = Vect::zero();
        let bs = basis(n);
        for (i, c) in coords {
            v.add_coord(bs[i], ParamPoly::constant(c));
        }
        v
    })
}

fn full_point() -> impl Strategy<Value = BTreeMap<ParamSymbol, Rat>> {
    proptest::collection::vec(small_rat(), ALL_SYMBOLS.len()).prop_map(|vals| {
        ALL_SYMBOLS.iter().copied().zip(vals).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // ring axioms, exact
    #[test]
    fn param_poly_ring_axioms(p in param_poly(), q in param_poly(), r in param_poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.add(&p.neg()), ParamPoly::zero());
    }

    // evaluation is a ring homomorphism
    #[test]
    fn eval_is_a_homomorphism(p in param_poly(), q in param_poly(), pt in full_point()) {
        let lhs = p.mul(&q).eval(&pt).unwrap();
        let rhs = p.eval(&pt).unwrap() * q.eval(&pt).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = p.add(&q).eval(&pt).unwrap();
        let rhs = p.eval(&pt).unwrap() + q.eval(&pt).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    // normalization is idempotent and scale-invariant
    #[test]
    fn normalize_generator_idempotent(p in param_poly(), c in small_rat()) {
        prop_assume!(!p.is_zero());
        let n1 = p.normalize_generator().unwrap();
        prop_assert_eq!(n1.normalize_generator().unwrap(), n1.clone());
        if !c.is_integer() || c != rat(0) {
            let scaled = p.scale(&c);
            if !scaled.is_zero() {
                prop_assert_eq!(scaled.normalize_generator().unwrap(), n1);
            }
        }
    }

    // polytext parse ∘ print is the identity
    #[test]
    fn polytext_roundtrip(p in param_poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    // group action law on vectors
    #[test]
    fn action_law(v in vect(4), p in perm(4), q in perm(4)) {
        let pq = compose(&p, &q).unwrap();
        prop_assert_eq!(v.act(&pq), v.act(&q).act(&p));
    }

    // diagonal action on the group algebra is a homomorphism
    #[test]
    fn ga_action_law(p in perm(4), q in perm(4), g in perm(4), v in vect(4)) {
        let e = GAElt::single(g, SymPoly2::from_vect(&v));
        let pq = compose(&p, &q).unwrap();
        prop_assert_eq!(ga_act(&pq, &e), ga_act(&p, &ga_act(&q, &e)));
    }

    // alternation of cochain evaluation on random vectors
    #[test]
    fn eval2_alternation(u in vect(4), v in vect(4)) {
        let k = build(&FamilySpec::new(FamilyName::ReflFull, 4)).unwrap();
        let a = k.eval2(&u, &v);
        let b = k.eval2(&v, &u);
        prop_assert!(a.add(&b).is_zero());
        prop_assert!(k.eval2(&u, &u).is_zero());
    }

    // triple sort sign is the permutation parity
    #[test]
    fn triple_sign(i in 0usize..8, j in 0usize..8, k in 0usize..8) {
        let bs = basis(4);
        let t = [bs[i], bs[j], bs[k]];
        let (sorted, sign) = sort_triple(&t);
        if i == j || j == k || i == k {
            prop_assert_eq!(sign, 0);
        } else {
            prop_assert!(sorted[0] < sorted[1] && sorted[1] < sorted[2]);
            // parity by explicit inversion count
            let mut inv = 0;
            let arr = [t[0], t[1], t[2]];
            for a in 0..3 {
                for b in a + 1..3 {
                    if arr[a] > arr[b] {
                        inv += 1;
                    }
                }
            }
            prop_assert_eq!(sign, if inv % 2 == 0 { 1 } else { -1 });
        }
    }

    // division residual reduces to zero: p − nf(p) is always in the ideal
    #[test]
    fn division_residual(p in param_poly()) {
        let gens = [
            parse_poly("a1^2 - b1*b2").unwrap(),
            parse_poly("a1*b1 - c^2").unwrap(),
            parse_poly("b1^3 - a1*c").unwrap(),
        ];
        let gb = buchberger(&gens, GroebnerOpts::default()).unwrap();
        let r = normal_form(&p, &gb);
        prop_assert!(normal_form(&p.sub(&r), &gb).is_zero());
        prop_assert_eq!(normal_form(&r, &gb), r);
    }

    // rewriting normal form is idempotent on random words
    #[test]
    fn oracle_normal_form_idempotent(
        letters in proptest::collection::vec(0usize..8, 0..4),
        tail in perm(4),
    ) {
        let k = build(&FamilySpec::new(FamilyName::RcaPerm, 4)).unwrap();
        let pt: BTreeMap<ParamSymbol, Rat> = [
            (ParamSymbol::Alpha, rat(1)),
            (ParamSymbol::Beta, rat(-1)),
            (ParamSymbol::C, rat(2)),
        ]
        .into_iter()
        .collect();
        let rs = build_rewrite(&k.specialize(&pt)).unwrap();
        let bs = basis(4);
        let word = NCWord::new(letters.iter().map(|&i| bs[i]).collect(), tail);
        let nf = normal_form_nc(&NCElement::word(word), &rs);
        prop_assert_eq!(normal_form_nc(&nf, &rs), nf.clone());
        for (w, _) in nf.terms() {
            prop_assert!(w.is_sorted());
        }
    }

    // specialization commutes with property checking on the off-identity family
    #[test]
    fn extraction_matches_specialization(
        a in -2i64..=2, ap in -2i64..=2, b in -2i64..=2,
        bp in -2i64..=2, al in -2i64..=2, be in -2i64..=2,
    ) {
        let n = 4;
        let fam = build(&FamilySpec::new(FamilyName::ReflFull, n)).unwrap();
        let sys = doa_core::verifier::extract_system(&fam).unwrap();
        let mut pt: BTreeMap<ParamSymbol, Rat> = FamilyName::ReflFull
            .param_set()
            .into_iter()
            .map(|s| (s, rat(0)))
            .collect();
        for (s, v) in [
            (ParamSymbol::A, a), (ParamSymbol::APerp, ap),
            (ParamSymbol::B, b), (ParamSymbol::BPerp, bp),
            (ParamSymbol::Alpha, al), (ParamSymbol::Beta, be),
        ] {
            pt.insert(s, rat(v));
        }
        let vanish = sys.vanishes_at(&pt).unwrap();
        let report = doa_core::verifier::check_properties(&fam.specialize(&pt)).unwrap();
        prop_assert_eq!(report.pass(), vanish);
    }
}

// deterministic, not property-based: invariance of ledger ideal equality
// under generator scaling and permutation
#[test]
fn ideal_equality_is_an_equivalence_on_scaled_shuffles() {
    use doa_core::verifier::{compare_systems, ledger_system, CompareMode, ObstructionSystem};
    let sys = ledger_system(doa_core::ledger::LedgerName::Obstr2PhiC1C2C3L2, 4).unwrap();
    // scale and reverse the generators
    let scaled: Vec<ParamPoly> = sys
        .generators
        .iter()
        .rev()
        .enumerate()
        .map(|(i, p)| p.scale(&frac(-(i as i64) - 2, 3)))
        .collect();
    let raw = scaled
        .into_iter()
        .map(|p| {
            (
                p,
                doa_core::verifier::Provenance {
                    source: doa_core::verifier::Source::Ledger,
                    g: None,
                    triple: None,
                    label: String::new(),
                },
            )
        })
        .collect();
    let shuffled = ObstructionSystem::from_raw(4, sys.symbols.clone(), raw).unwrap();
    for mode in [CompareMode::Set, CompareMode::Ideal] {
        let cmp = compare_systems(&sys, &shuffled, mode).unwrap();
        assert!(cmp.equal, "{mode:?}");
    }
}

// exhaustive invariance agrees with generator-closure invariance at n = 4
// on a deliberately broken table as well as on the real families
#[test]
fn exhaustive_and_generator_invariance_agree() {
    use doa_core::cochain::{check_invariance, check_invariance_with, Entry, Space};
    for name in [FamilyName::Lie, FamilyName::ReflFull] {
        let k = build(&FamilySpec::new(name, 4)).unwrap();
        assert_eq!(
            check_invariance(&k).ok(),
            check_invariance_with(&k, true).ok()
        );
    }
    let mut broken = TwoCochain::zero(4, Space::Doubled);
    broken.add_entry(
        &Perm::transposition(4, 1, 2),
        BasisIndex::x(1),
        BasisIndex::y(1),
        Entry {
            linear: Vect::zero(),
            constant: parse_poly("c").unwrap(),
        },
    );
    assert_eq!(
        check_invariance(&broken).ok(),
        check_invariance_with(&broken, true).ok()
    );
}
