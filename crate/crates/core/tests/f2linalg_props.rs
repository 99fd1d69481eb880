use proptest::prelude::*;
use steenrod_core::f2linalg::{F2Matrix, F2Vector, Subspace};
use steenrod_oracles::{brute_force_kernel_dim, brute_force_solutions};

fn matrix(rows: usize, cols: usize, density: f64) -> impl Strategy<Value = F2Matrix> {
    proptest::collection::vec(proptest::bool::weighted(density), rows * cols).prop_map(move |bits| {
        F2Matrix::from_rows(cols, bits.chunks(cols.max(1)).take(rows).map(|c| F2Vector::from_bits(c.iter().copied())).collect())
    })
}

fn sized(max: usize) -> impl Strategy<Value = F2Matrix> {
    (1..=max, 1..=max, 0.05f64..0.6).prop_flat_map(|(r, c, p)| matrix(r, c, p))
}

fn bytes(m: &F2Matrix) -> Vec<Vec<u8>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j) as u8).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in sized(512)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        prop_assert_eq!(Subspace::span(m.cols(), k.iter().cloned()).dim(), k.len());
    }

    #[test]
    fn rank_of_transpose(m in sized(200)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kernel_dim_matches_enumeration(m in sized(14)) {
        prop_assert_eq!(m.kernel_basis().len(), brute_force_kernel_dim(&bytes(&m), m.cols()));
    }

    #[test]
    fn solve_matches_enumeration(m in sized(12), seed in any::<u64>()) {
        let b = F2Vector::from_bits((0..m.rows()).map(|i| (seed >> (i % 64)) & 1 == 1));
        let bb: Vec<u8> = b.bits().iter().map(|&x| x as u8).collect();
        let all = brute_force_solutions(&bytes(&m), m.cols(), &bb);
        match m.solve(&b).unwrap() {
            Some(x) => {
                prop_assert_eq!(m.mul_vec(&x), b);
                prop_assert!(!all.is_empty());
            }
            None => prop_assert!(all.is_empty()),
        }
    }

    #[test]
    fn rref_is_idempotent(m in sized(40)) {
        let (r, piv) = m.rref();
        let (r2, piv2) = r.rref();
        prop_assert!(r == r2);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn product_associates(a in matrix(9, 7, 0.4), b in matrix(7, 11, 0.4), c in matrix(11, 5, 0.4)) {
        prop_assert!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)));
    }
}
