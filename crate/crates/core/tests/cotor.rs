use steenrod_core::cobar_ss::{cobar_coaction_on_q, cobar_cotor, cotor_comodule_iso, q0_power_filtration, q_monomials};
use steenrod_core::comodule::ComoduleWindow;
use steenrod_core::dual_hopf::{coaction_on_q, DualSpec, QTarget};
use steenrod_oracles::{exterior_ext_dim, q_monomial_count};

#[test]
fn exterior_quotient_cotor_is_polynomial_on_q() {
    let spec = DualSpec::exterior();
    let (s_max, t_max) = (4, 20);
    let c = cobar_cotor(&spec, &ComoduleWindow::ground(spec.clone(), t_max), s_max, t_max).unwrap();
    assert_eq!(c.check_d_squared(), None);
    let dims = c.dims();
    for s in 0..=s_max {
        for t in 0..=t_max {
            let got = dims.get(&(s, t)).copied().unwrap_or(0) as u64;
            assert_eq!(got, q_monomial_count(s, t), "(s, t) = ({}, {})", s, t);
        }
    }
}

#[test]
fn one_generator_exterior_cotor() {
    // A[0]* is exterior on z1 in degree 1
    let spec = DualSpec::a_dual(0);
    let c = cobar_cotor(&spec, &ComoduleWindow::ground(spec.clone(), 10), 5, 10).unwrap();
    let dims = c.dims();
    for s in 0..=5 {
        for t in 0..=10 {
            assert_eq!(dims.get(&(s, t)).copied().unwrap_or(0), exterior_ext_dim(1, s, t), "({}, {})", s, t);
        }
    }
}

#[test]
fn q_listing_counts_match_oracle() {
    for s in 0..=4 {
        let listed = q_monomials(s, 30);
        let total: u64 = (0..=30).map(|t| q_monomial_count(s, t)).sum();
        assert_eq!(listed.len() as u64, total, "s = {}", s);
    }
}

#[test]
fn cobar_coaction_matches_formula() {
    for target in [QTarget::A1, QTarget::A1ModA2, QTarget::A1ModA3] {
        for n in 0..=3 {
            assert_eq!(cobar_coaction_on_q(n, target).unwrap(), coaction_on_q(n, target), "q{} over {:?}", n, target);
        }
    }
}

#[test]
fn cotor_comodule_isomorphism() {
    for k in 0..=2 {
        let r = cotor_comodule_iso(k, 14).unwrap();
        assert!(r.holds(), "k = {}: {:?}", k, r.dims);
    }
}

#[test]
fn q0_power_filtration_is_unipotent() {
    for k in 1..=2 {
        let r = q0_power_filtration(k, QTarget::A1ModA2, 14).unwrap();
        assert!(r.closed && r.trivial_quotients, "k = {}", k);
        assert_eq!(r.stages.len() as u32, k + 1);
    }
}
