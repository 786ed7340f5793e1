//! Cross-checks between the exact invariants, the coloured model and the
//! simulator.

use knit::colored::{braiding_operator_for_plat, colored_invariant, framing_factor, spin_half_jones, ColorLabel};
use knit::diagram::{closure_plat, closure_trace, validate_pd, LinkDiagram};
use knit::jones::{jones_polynomial, kauffman_bracket, markov_trace_bracket, markov_trace_jones};
use knit::qsim::{apply_unitary, estimate_markov_trace, hadamard_test_sample, HadamardCircuit, Part, StateVector};
use knit::{BraidWord, LaurentPoly, Letter};
use num_complex::Complex64;
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn braid_in(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls.into_iter().map(|(generator, positive)| Letter { generator, positive }).collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn braid(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(move |n| braid_in(n, max_len))
}

fn plat_braid(max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop_oneof![braid_in(2, max_len), braid_in(4, max_len)]
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn trace_equals_state_sum(w in braid(9)) {
        prop_assert_eq!(markov_trace_jones(&w).unwrap(), jones_polynomial(&closure_trace(&w)).unwrap());
        let d = closure_trace(&w);
        prop_assert_eq!(markov_trace_bracket(&w).unwrap(), kauffman_bracket(&d).unwrap());
    }

    #[test]
    fn writhe_is_exponent_sum(w in braid(12)) {
        let d = closure_trace(&w);
        prop_assert_eq!(d.writhe(), w.exponent_sum());
        prop_assert!(validate_pd(&d).is_ok());
        prop_assert_eq!(d.component_count().unwrap(), w.underlying_permutation().cycles().len());
    }

    #[test]
    fn mirror_inverts_the_variable(w in braid(8)) {
        let v = jones_polynomial(&closure_trace(&w)).unwrap();
        let m = jones_polynomial(&closure_trace(&w.mirror())).unwrap();
        prop_assert_eq!(m, v.substitute_power(-4).unwrap());
    }

    #[test]
    fn conjugation_keeps_the_bracket(w in braid_in(3, 8), a in braid_in(3, 4)) {
        let c = w.markov_conjugate(&a).unwrap();
        prop_assert_eq!(
            kauffman_bracket(&closure_trace(&c)).unwrap(),
            kauffman_bracket(&closure_trace(&w)).unwrap()
        );
    }

    #[test]
    fn plat_diagrams_are_valid(w in plat_braid(10)) {
        let d = closure_plat(&w).unwrap();
        prop_assert!(validate_pd(&d).is_ok());
        prop_assert_eq!(d.crossing_count(), w.len());
    }

    #[test]
    fn spin_half_reduces_to_jones(w in plat_braid(8), r in prop::sample::select(vec![5u32, 7, 10, 13])) {
        let exact = jones_polynomial(&closure_plat(&w).unwrap()).unwrap().evaluate_at_root(r).unwrap();
        let got = spin_half_jones(&w, r).unwrap();
        prop_assert!((got - exact).norm() < 1e-9, "{} at r={}: {} vs {}", w, r, got, exact);
    }

    #[test]
    fn plat_operators_are_unitary(w in braid_in(4, 8), t in 1u32..=3) {
        let colors = [ColorLabel::new(t); 4];
        let b = braiding_operator_for_plat(&w, &colors, 7).unwrap();
        prop_assert!(b.unitarity_defect() < 1e-10);
    }

    #[test]
    fn framed_invariant_ignores_kinks(w in braid_in(4, 5), t in 1u32..=3, positive in any::<bool>()) {
        // a curl on the first strand, above everything else
        let curl = BraidWord::new(4, vec![Letter { generator: 1, positive }]).unwrap();
        let k = curl.concat(&w).unwrap();
        let comps = closure_plat(&w).unwrap().component_count().unwrap();
        let colors = vec![ColorLabel::new(t); comps];
        let r = 9;
        let a = colored_invariant(&w, &colors, r).unwrap() * framing_factor(&w, &colors, r).unwrap();
        let b = colored_invariant(&k, &colors, r).unwrap() * framing_factor(&k, &colors, r).unwrap();
        prop_assert!((a - b).norm() < 1e-9);
    }

    #[test]
    fn circuits_preserve_norm(w in braid_in(4, 30)) {
        let c = HadamardCircuit::new(&w, &[ColorLabel::half(); 4], 5).unwrap();
        for part in [Part::Real, Part::Imag] {
            let run = c.run(part);
            prop_assert!((run.norm - 1.0).abs() < 1e-8);
            prop_assert_eq!(run.steps, w.len());
        }
    }
}

#[test]
fn hadamard_samples_are_unbiased() {
    // empirical means against <psi|B|psi> for a few braids, 10^4 samples
    let n = 10_000u64;
    for text in ["s2^3", "s2 s1^-1 s3 s2^-1", "s1 s2 s3 s2^-1 s1"] {
        let w = BraidWord::parse(text, 4).unwrap();
        let h = [ColorLabel::half(); 4];
        let b = braiding_operator_for_plat(&w, &h, 5).unwrap();
        let top = b.domain.cup_state().unwrap();
        let psi = StateVector::basis(b.cols(), top).unwrap();
        let exact = psi.inner(&apply_unitary(&psi, &b).unwrap());
        for (part, want) in [(Part::Real, exact.re), (Part::Imag, exact.im)] {
            let mean = (0..n).map(|s| hadamard_test_sample(&b, &psi, part, s).unwrap() as f64).sum::<f64>() / n as f64;
            assert!((mean - want).abs() < 5.0 / (n as f64).sqrt(), "{text} {part:?}: {mean} vs {want}");
        }
    }
}

#[test]
fn seeded_estimates_are_bitwise_stable() {
    let w = BraidWord::parse("s2 s4^-1 s3 s4^-1 s3 s1 s2^-1 s4^-1", 6).unwrap();
    let c = [ColorLabel::new(1), ColorLabel::new(2), ColorLabel::new(1)];
    let a = estimate_markov_trace(&w, &c, 7, 0.3, 0.8, 42).unwrap();
    let b = estimate_markov_trace(&w, &c, 7, 0.3, 0.8, 42).unwrap();
    assert_eq!(a.z_re.to_bits(), b.z_re.to_bits());
    assert_eq!(a.z_im.to_bits(), b.z_im.to_bits());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn pd_round_trip_and_violations() {
    let d = closure_trace(&BraidWord::parse("s1^3", 2).unwrap());
    let text = d.to_string();
    let back: LinkDiagram = text.parse().unwrap();
    assert_eq!(back, d);
    let broken: LinkDiagram = LinkDiagram::from_parts(vec![d.crossings()[0]], 0);
    assert!(validate_pd(&broken).is_err());
}

#[test]
fn named_oracles() {
    let t = |text: &str, n| jones_polynomial(&closure_trace(&BraidWord::parse(text, n).unwrap())).unwrap();
    assert_eq!(t("s1^3", 2), LaurentPoly::from_terms([(4, 1), (12, 1), (16, -1)]));
    assert_eq!(t("s1^2", 2), LaurentPoly::from_terms([(2, -1), (10, -1)]));
    assert_eq!(t("s1 s2^-1 s1 s2^-1", 3), LaurentPoly::from_terms([(-8, 1), (-4, -1), (0, 1), (4, -1), (8, 1)]));
    let unknot = colored_invariant(&BraidWord::identity(2).unwrap(), &[ColorLabel::half()], 5).unwrap();
    assert!((unknot - Complex64::new(2.0 * (std::f64::consts::PI / 5.0).cos(), 0.0)).norm() < 1e-12);
}
