use proptest::prelude::*;
use steenrod_core::dual_hopf::{
    adjoint_coaction, adjoint_coaction_diagram, dual_antipode, full_coproduct, parse_dual, DualMonomial, DualPolynomial,
    DualSpec,
};
use steenrod_core::milnor::{antipode, basis_in_degree, milnor_product, parse_milnor, MilnorElement, Profile};

/// A random sum of Milnor basis elements in degree `d`.
fn element(d: u32) -> impl Strategy<Value = MilnorElement> {
    let basis = basis_in_degree(&Profile::full(), d);
    let n = basis.len();
    proptest::collection::vec(any::<bool>(), n).prop_map(move |mask| {
        let mut e = MilnorElement::zero(d);
        for (m, keep) in basis.iter().zip(mask) {
            if keep {
                e.toggle(m.clone());
            }
        }
        e
    })
}

fn graded() -> impl Strategy<Value = MilnorElement> {
    (1u32..=14).prop_flat_map(element)
}

fn dual_monomial() -> impl Strategy<Value = DualMonomial> {
    proptest::collection::vec(0u16..4, 1..=3).prop_map(|e| DualMonomial::new(&e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_associates(a in graded(), b in graded(), c in graded()) {
        prop_assert!(milnor_product(&milnor_product(&a, &b), &c) == milnor_product(&a, &milnor_product(&b, &c)));
    }

    #[test]
    fn product_distributes(a in graded(), b in element(6), c in element(6)) {
        prop_assert!(milnor_product(&a, &b.add(&c)) == milnor_product(&a, &b).add(&milnor_product(&a, &c)));
    }

    #[test]
    fn antipode_is_an_involution(a in graded()) {
        prop_assert!(antipode(&antipode(&a)) == a);
    }

    #[test]
    fn antipode_reverses_products(a in element(5), b in element(7)) {
        prop_assert!(antipode(&milnor_product(&a, &b)) == milnor_product(&antipode(&b), &antipode(&a)));
    }

    #[test]
    fn milnor_display_parses_back(a in graded()) {
        prop_assume!(!a.is_zero());
        prop_assert!(parse_milnor(&a.to_string()).unwrap() == a);
    }

    #[test]
    fn dual_antipode_is_an_involution(m in dual_monomial()) {
        let mut back = DualPolynomial::zero(m.degree());
        for t in dual_antipode(&m).terms() {
            back.add_assign(&dual_antipode(&t));
        }
        prop_assert_eq!(back, DualPolynomial::from(m));
    }

    #[test]
    fn coproduct_is_multiplicative(a in dual_monomial(), b in dual_monomial()) {
        let pa = DualPolynomial::from(a);
        let pb = DualPolynomial::from(b);
        prop_assert_eq!(full_coproduct(&pa.mul(&pb)), full_coproduct(&pa).mul(&full_coproduct(&pb)));
    }

    #[test]
    fn adjoint_coaction_closed_form_matches_composite(m in dual_monomial()) {
        prop_assume!(m.degree() <= 24);
        prop_assert_eq!(adjoint_coaction(&m), adjoint_coaction_diagram(&m));
    }

    #[test]
    fn dual_display_parses_back(m in dual_monomial()) {
        let p = DualPolynomial::from(m);
        prop_assume!(!p.is_zero());
        let (back, spec) = parse_dual(&p.to_string()).unwrap();
        prop_assert_eq!(back, p);
        prop_assert!(spec.is_full());
    }
}

#[test]
fn spec_names_round_trip() {
    for s in ["A*", "A(1)*", "A(2)*", "A[1]*", "A[2]*", "E[1]*", "A*//A(1)*"] {
        let spec = DualSpec::parse(s).unwrap();
        assert_eq!(DualSpec::parse(spec.name()).unwrap(), spec, "{}", s);
    }
}
