use easygram::algebra::{LaurentPoly, Poly};
use easygram::categories::CategoryId;
use easygram::gram::gram_matrix_symbolic;
use easygram::partition::ColoredWord;
use easygram::tl_jones::{jones_polynomial, markov_invariance_test, BraidWord, JonesPoly, LoopParam, TLDiagram, TLElement};
use easygram::verify::base_braids;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn delta() -> LaurentPoly {
    LaurentPoly::var()
}

fn eps(k: usize, i: usize) -> TLElement<LaurentPoly> {
    TLElement::epsilon(k, i).unwrap()
}

fn mul(a: &TLElement<LaurentPoly>, b: &TLElement<LaurentPoly>) -> TLElement<LaurentPoly> {
    a.mul(b, &delta()).unwrap()
}

#[test]
fn generators_satisfy_the_relations() {
    for k in 2..=6 {
        for i in 1..k {
            let e = eps(k, i);
            assert_eq!(mul(&e, &e), e.scale(&delta()), "square of ε_{i} on {k}");
            if i + 1 < k {
                let f = eps(k, i + 1);
                assert_eq!(mul(&mul(&e, &f), &e), e);
                assert_eq!(mul(&mul(&f, &e), &f), f);
            }
            for j in i + 2..k {
                let f = eps(k, j);
                assert_eq!(mul(&e, &f), mul(&f, &e), "ε_{i} ε_{j} on {k}");
            }
        }
    }
}

#[test]
fn basis_sizes_are_catalan() {
    let catalan = [1, 2, 5, 14, 42, 132];
    for (k, c) in (1..=6).zip(catalan) {
        assert_eq!(TLDiagram::basis(k).unwrap().len(), c);
    }
}

#[test]
fn trace_is_tracial() {
    let p = LoopParam::new(delta(), Some(LaurentPoly::monomial(1, -1)));
    for k in 1..=4 {
        let basis = TLDiagram::basis(k).unwrap();
        assert_eq!(TLElement::<LaurentPoly>::identity(k).markov_trace(&p).unwrap(), LaurentPoly::one());
        for x in &basis {
            let x = TLElement::basis(x.clone(), LaurentPoly::one());
            for y in &basis {
                let y = TLElement::basis(y.clone(), LaurentPoly::one());
                assert_eq!(mul(&x, &y).markov_trace(&p).unwrap(), mul(&y, &x).markov_trace(&p).unwrap());
            }
            // the embedding preserves the normalized trace, and ε on the new strand costs δ⁻¹
            let up = x.embed();
            assert_eq!(up.markov_trace(&p).unwrap(), x.markov_trace(&p).unwrap());
            let with_eps = mul(&up, &eps(k + 1, k)).markov_trace(&p).unwrap();
            assert_eq!(with_eps, &x.markov_trace(&p).unwrap() * &LaurentPoly::monomial(1, -1));
        }
    }
}

#[test]
fn trace_pairing_is_the_gram_form() {
    let p = LoopParam::new(delta(), Some(LaurentPoly::monomial(1, -1)));
    for k in 1..=4 {
        let basis = TLDiagram::basis(k).unwrap();
        let gram = gram_matrix_symbolic(CategoryId::NC2, &ColoredWord::plain(2 * k)).unwrap();
        for x in &basis {
            for y in &basis {
                let prod = mul(&TLElement::basis(x.clone(), LaurentPoly::one()), &TLElement::basis(y.star(), LaurentPoly::one()));
                let loops = x.to_partition().join_blocks(&y.to_partition());
                let scaled = &prod.markov_trace(&p).unwrap() * &LaurentPoly::monomial(1, k as i32);
                assert_eq!(scaled, LaurentPoly::monomial(1, loops as i32), "{x} against {y}");
                let row = |d: &TLDiagram| d.to_partition().rotate_to_one_row().uncolored();
                let entry = gram.entry(&row(x), &row(y)).unwrap();
                assert_eq!(entry, &Poly::monomial(BigInt::one(), loops), "{x} against {y}");
            }
        }
    }
}

#[test]
fn markov_moves_preserve_the_polynomial() {
    let mut sequences = 0;
    for (i, w) in base_braids(2024).iter().enumerate() {
        let r = markov_invariance_test(w, 25, i as u64, 6).unwrap();
        assert!(r.passed(), "{:?}", r.failure);
        sequences += r.trials;
    }
    assert_eq!(sequences, 500);
}

#[test]
fn known_knots() {
    let v = |k, s| jones_polynomial(&BraidWord::parse(k, s).unwrap()).unwrap();
    // q^{e/2} pairs
    assert_eq!(v(2, "-1 -1 -1"), JonesPoly::from_half_exponents([(-2, 1), (-6, 1), (-8, -1)]));
    assert_eq!(v(3, "1 -2 1 -2"), JonesPoly::from_half_exponents([(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]));
    assert_eq!(v(3, "1 2"), JonesPoly(LaurentPoly::one()));
}

fn braid_strategy() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=4).prop_flat_map(|k| {
        let letter = (1..k as i32, any::<bool>()).prop_map(|(g, pos)| if pos { g } else { -g });
        (proptest::collection::vec(letter.clone(), 0..8), proptest::collection::vec(letter, 1..4))
            .prop_map(move |(w, a)| (BraidWord::new(k, w).unwrap(), BraidWord::new(k, a).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_invariance((w, alpha) in braid_strategy()) {
        prop_assert_eq!(jones_polynomial(&w.conjugate(&alpha).unwrap()).unwrap(), jones_polynomial(&w).unwrap());
    }

    #[test]
    fn mirror_inverts_q((w, _) in braid_strategy()) {
        let mirror = BraidWord::new(w.strands(), w.letters().iter().map(|l| -l).collect()).unwrap();
        prop_assert_eq!(jones_polynomial(&mirror).unwrap().0, jones_polynomial(&w).unwrap().0.rescale_exponents(-1));
    }
}
