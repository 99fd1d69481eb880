use proptest::prelude::*;
use steenrod_core::milnor::Profile;
use steenrod_core::module_cat::{
    check_resolution, double_module, ext_dims_k, hom_to_free_vanishing, minimal_free_resolution, moore_module,
    random_finite_module, undouble_module, FinModule, FiniteAlgebra,
};

fn dims_at(m: &std::collections::BTreeMap<(u32, u32), usize>, s: u32, t: u32) -> usize {
    m.get(&(s, t)).copied().unwrap_or(0)
}

#[test]
fn ext_over_e1_is_polynomial_on_two_classes() {
    // exterior on Q0 (degree 1) and Q1 (degree 3): Ext is F2[v0, v1], v0 ∈ (1,1), v1 ∈ (1,3)
    let alg = FiniteAlgebra::e(1);
    let ext = ext_dims_k(&alg, &FinModule::trivial(&alg, 0), 5, 18);
    for s in 0..=5u32 {
        for t in 0..=18u32 {
            let expect = (0..=s).filter(|&a| a + 3 * (s - a) == t).count();
            assert_eq!(dims_at(&ext, s, t), expect, "({}, {})", s, t);
        }
    }
}

#[test]
fn ext_over_a1_low_classes() {
    let alg = FiniteAlgebra::a(1);
    let ext = ext_dims_k(&alg, &FinModule::trivial(&alg, 0), 4, 16);
    // h0 tower, h1, h1^2, the class a in (3, 7) and the periodicity class w in (4, 12)
    for (s, t) in [(0, 0), (1, 1), (1, 2), (2, 2), (2, 4), (3, 3), (3, 7), (4, 4), (4, 8), (4, 12)] {
        assert_eq!(dims_at(&ext, s, t), 1, "({}, {})", s, t);
    }
    assert_eq!(dims_at(&ext, 1, 4), 0);
    assert_eq!(dims_at(&ext, 2, 3), 0);
    // h1^3 = 0
    assert_eq!(dims_at(&ext, 3, 6), 0);
}

#[test]
fn doubling_scales_ext_charts() {
    let alg = FiniteAlgebra::a(1);
    let k = FinModule::trivial(&alg, 0);
    let (dk, dalg) = double_module(&k, &alg, 1);
    let ext = ext_dims_k(&alg, &k, 5, 13);
    let dext = ext_dims_k(&dalg, &dk, 5, 26);
    for (&(s, t), &d) in &ext {
        assert_eq!(dims_at(&dext, s, 2 * t), d, "({}, {})", s, t);
    }
    for (&(s, t), &d) in &dext {
        if d > 0 {
            assert_eq!(t % 2, 0);
            assert_eq!(dims_at(&ext, s, t / 2), d);
        }
    }
    assert_eq!(undouble_module(&dk, 1).unwrap(), k);
}

#[test]
fn moore_module_ext_over_a0_is_concentrated() {
    let alg = FiniteAlgebra::a(0);
    let m = moore_module(&alg);
    let ext = ext_dims_k(&alg, &m, 4, 8);
    // the Moore module is free over A(0)
    assert_eq!(ext.values().sum::<usize>(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_modules_resolve(seed in any::<u64>()) {
        let alg = FiniteAlgebra::a(1);
        let m = random_finite_module(&alg, seed, 8);
        prop_assert!(m.validate(&alg).is_ok());
        prop_assert!(m.dim() <= 8);
        let r = minimal_free_resolution(&alg, &m, 3, 10);
        prop_assert_eq!(check_resolution(&alg, &m, &r), Ok(()));
    }

    #[test]
    fn random_modules_have_no_maps_to_free(seed in any::<u64>()) {
        let alg = FiniteAlgebra::truncated(&Profile::full(), 20);
        let m = random_finite_module(&alg, seed, 8);
        let cert = hom_to_free_vanishing(&m, &alg, 2, &[0]).unwrap();
        prop_assert!(cert.holds, "{:?}", cert);
    }
}
