use proptest::prelude::*;
use steenrod_core::comodule::{
    check_unipotent_filtration, cohom, extendable_map_space, is_unipotent, primitive_sequence, random_comodule,
    regular_comodule, tensor_diagonal,
};
use steenrod_core::dual_hopf::DualSpec;
use steenrod_core::module_cat::{dualize_comodule, FiniteAlgebra};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_comodules_are_unipotent(seed in any::<u64>()) {
        let r = random_comodule(seed, 12);
        let m = &r.comodule;
        prop_assert!(m.validate().is_ok());
        prop_assert!(check_unipotent_filtration(m, &r.filtration));
        let f = is_unipotent(m).expect("unipotent");
        prop_assert!(check_unipotent_filtration(m, &f));
        // the primitive sequence is the fastest unipotent filtration
        prop_assert!(f.len() <= r.filtration.len());
    }

    #[test]
    fn unipotence_is_two_out_of_three(seed in any::<u64>()) {
        let r = random_comodule(seed, 12);
        let (sub, _) = r.comodule.subcomodule(&r.sub).unwrap();
        let (quot, _) = r.comodule.quotient(&r.sub).unwrap();
        let lm = is_unipotent(&r.comodule).expect("whole").len();
        let ls = is_unipotent(&sub).expect("sub").len();
        let lq = is_unipotent(&quot).expect("quotient").len();
        prop_assert!(ls <= lm && lq <= lm && lm <= ls + lq, "{} {} {}", ls, lq, lm);
        prop_assert_eq!(sub.dim() + quot.dim(), r.comodule.dim());
    }

    #[test]
    fn no_maps_from_the_regular_comodule(seed in 0u64..10_000) {
        let r = random_comodule(seed, 12);
        let src = regular_comodule(&DualSpec::full(), 24);
        for shift in -8..=8 {
            prop_assert_eq!(extendable_map_space(&src, &r.comodule, shift, 8, 24).dim, 0, "shift {}", shift);
        }
    }

    #[test]
    fn identity_is_a_map(seed in any::<u64>()) {
        let r = random_comodule(seed, 8);
        // Hom(M, M) in shift 0 contains the identity
        prop_assert!(!cohom(&r.comodule, &r.comodule, 0).is_empty());
    }
}

#[test]
fn tensor_with_ground_is_identity() {
    let r = random_comodule(7, 10);
    let k = steenrod_core::comodule::ComoduleWindow::ground(DualSpec::full(), r.comodule.window());
    let t = tensor_diagonal(&r.comodule, &k).unwrap();
    assert_eq!(t.dims(), r.comodule.dims());
}

#[test]
fn primitive_sequence_of_a_truncated_polynomial() {
    let spec = DualSpec::a_dual(1);
    let m = regular_comodule(&spec, 6);
    let f = primitive_sequence(&m);
    assert!(f.exhausts(&m));
    // A[1]* is the dual of a finite algebra, so its dual module is free of rank one
    let (dual, alg) = dualize_comodule(&m).unwrap();
    assert_eq!(dual.dim(), m.dim());
    assert_eq!(alg.total_dim(), FiniteAlgebra::a(1).total_dim());
}
