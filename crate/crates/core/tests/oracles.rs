use steenrod_core::milnor::{basis_in_degree, milnor_product, pd_degree, MilnorElement, Profile};
use steenrod_oracles::{adem_product, admissible_basis, partition_counts, poincare_series_a, Squares};

fn admissible_to_milnor(s: &Squares) -> MilnorElement {
    s.iter().fold(MilnorElement::one(), |acc, &a| milnor_product(&acc, &MilnorElement::sq(&[a])))
}

fn sum_to_milnor(set: &std::collections::BTreeSet<Squares>, degree: u32) -> MilnorElement {
    let mut out = MilnorElement::zero(degree);
    for s in set {
        out = out.add(&admissible_to_milnor(s));
    }
    out
}

#[test]
fn milnor_product_matches_adem_reduction() {
    let mut pairs = 0;
    for d1 in 0..=12u32 {
        for d2 in 0..=12 - d1 {
            for x in admissible_basis(d1) {
                for y in admissible_basis(d2) {
                    let direct = milnor_product(&admissible_to_milnor(&x), &admissible_to_milnor(&y));
                    let via_adem = sum_to_milnor(&adem_product(&[x.clone()].into(), &[y.clone()].into()), d1 + d2);
                    assert!(direct == via_adem, "{:?} * {:?}", x, y);
                    pairs += 1;
                }
            }
        }
    }
    let p = partition_counts(12);
    let expected: u64 = (0..=12).map(|a| (0..=12 - a).map(|b| p[a] * p[b]).sum::<u64>()).sum();
    assert_eq!(pairs, expected);
}

#[test]
fn admissibles_map_to_a_basis() {
    // the change of basis admissible -> Milnor is invertible in each degree
    for d in 0..=16u32 {
        let milnor = basis_in_degree(&Profile::full(), d);
        let rows: Vec<Vec<bool>> = admissible_basis(d)
            .iter()
            .map(|s| {
                let e = admissible_to_milnor(s);
                milnor.iter().map(|m| e.contains(m)).collect()
            })
            .collect();
        let m = steenrod_core::f2linalg::F2Matrix::from_rows(
            milnor.len(),
            rows.into_iter().map(steenrod_core::f2linalg::F2Vector::from_bits).collect(),
        );
        assert_eq!(m.rank(), milnor.len(), "degree {}", d);
    }
}

#[test]
fn full_algebra_dims_are_partition_counts() {
    let p = partition_counts(24);
    for d in 0..=24u32 {
        assert_eq!(basis_in_degree(&Profile::full(), d).len() as u64, p[d as usize], "degree {}", d);
    }
}

#[test]
fn finite_subalgebra_dims() {
    let a1: usize = (0..=pd_degree(1)).map(|d| basis_in_degree(&Profile::a(1), d).len()).sum();
    assert_eq!(a1, 8);
    assert_eq!(pd_degree(1), 6);
    assert_eq!(pd_degree(2), 23);
    for n in 0..=3u32 {
        let pd = pd_degree(n) as usize;
        let series = poincare_series_a(n, pd + 2);
        let dims: Vec<i64> = (0..=pd + 2).map(|d| basis_in_degree(&Profile::a(n), d as u32).len() as i64).collect();
        assert_eq!(dims, series, "A({})", n);
        let v = &dims[..=pd];
        assert!(v.iter().eq(v.iter().rev()), "A({}) not palindromic", n);
    }
}
