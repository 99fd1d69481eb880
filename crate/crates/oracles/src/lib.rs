//! Slow reference implementations used as test oracles. Nothing here
//! depends on the main crates: admissible monomials are reduced with Adem
//! relations, dimensions come from generating functions, and kernels are
//! found by enumerating every vector.

use std::collections::BTreeSet;

/// A monomial Sq^{a₁}⋯Sq^{a_k} in the Steenrod squares; empty = 1.
pub type Squares = Vec<u32>;

fn binom_mod2(n: i64, k: i64) -> bool {
    if k < 0 || n < 0 || k > n {
        return false;
    }
    (n & k) == k
}

pub fn is_admissible(s: &[u32]) -> bool {
    s.iter().all(|&a| a > 0) && s.windows(2).all(|w| w[0] >= 2 * w[1])
}

fn toggle(set: &mut BTreeSet<Squares>, s: Squares) {
    if !set.remove(&s) {
        set.insert(s);
    }
}

/// Writes an arbitrary product of squares as a sum of admissible monomials.
pub fn adem_reduce(s: &[u32]) -> BTreeSet<Squares> {
    let mut out = BTreeSet::new();
    let mut pending = vec![s.to_vec()];
    while let Some(mono) = pending.pop() {
        let mono: Squares = mono.into_iter().filter(|&a| a > 0).collect();
        let bad = mono.windows(2).position(|w| w[0] < 2 * w[1]);
        let Some(i) = bad else {
            toggle(&mut out, mono);
            continue;
        };
        // Sq^a Sq^b = Σ_j C(b−1−j, a−2j) Sq^{a+b−j} Sq^j for a < 2b.
        let (a, b) = (mono[i] as i64, mono[i + 1] as i64);
        for j in 0..=a / 2 {
            if binom_mod2(b - 1 - j, a - 2 * j) {
                let mut next = mono[..i].to_vec();
                next.push((a + b - j) as u32);
                if j > 0 {
                    next.push(j as u32);
                }
                next.extend_from_slice(&mono[i + 2..]);
                pending.push(next);
            }
        }
    }
    // Pending work can revisit the same monomial, so parity is tracked in
    // `out` by toggling; this is exact over F2.
    out
}

/// Product of two sums of admissible monomials.
pub fn adem_product(x: &BTreeSet<Squares>, y: &BTreeSet<Squares>) -> BTreeSet<Squares> {
    let mut out = BTreeSet::new();
    for a in x {
        for b in y {
            let mut s = a.clone();
            s.extend_from_slice(b);
            for m in adem_reduce(&s) {
                toggle(&mut out, m);
            }
        }
    }
    out
}

/// All admissible monomials of degree `d`.
pub fn admissible_basis(d: u32) -> Vec<Squares> {
    fn rec(remaining: u32, max_next: u32, cur: &mut Squares, out: &mut Vec<Squares>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for a in 1..=remaining.min(max_next) {
            cur.push(a);
            // the next square must satisfy a ≥ 2·next, and is appended to the right
            rec(remaining - a, a / 2, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out.retain(|s| is_admissible(s));
    out.sort();
    out
}

/// Coefficients of Π_{i≥1} 1/(1 − x^{2^i−1}) through x^d.
pub fn partition_counts(d: usize) -> Vec<u64> {
    let mut c = vec![0u64; d + 1];
    c[0] = 1;
    let mut part = 1usize;
    while part <= d {
        for n in part..=d {
            c[n] += c[n - part];
        }
        part = 2 * part + 1;
    }
    c
}

/// Power series product, truncated at degree `d`.
pub fn series_mul(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; d + 1];
    for (i, &x) in a.iter().enumerate().take(d + 1) {
        for (j, &y) in b.iter().enumerate().take(d + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// a / b for b with constant term 1, truncated at degree `d`.
pub fn series_div(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    assert_eq!(b[0], 1);
    let mut q = vec![0i64; d + 1];
    for n in 0..=d {
        let mut v = a.get(n).copied().unwrap_or(0);
        for k in 1..=n {
            v -= b.get(k).copied().unwrap_or(0) * q[n - k];
        }
        q[n] = v;
    }
    q
}

/// Poincaré polynomial of A(n): Π_{i=1}^{n+1} (1 − x^{2^{n+2−i}(2^i−1)}) / (1 − x^{2^i−1}).
pub fn poincare_series_a(n: u32, d: usize) -> Vec<i64> {
    let mut p = vec![0i64; d + 1];
    p[0] = 1;
    for i in 1..=n + 1 {
        let w = (1usize << i) - 1;
        let h = 1usize << (n + 2 - i);
        // 1 + x^w + … + x^{w(h−1)}
        let mut f = vec![0i64; d + 1];
        for k in 0..h {
            if k * w <= d {
                f[k * w] = 1;
            }
        }
        p = series_mul(&p, &f, d);
    }
    p
}

/// Number of monomials q₀^{r₀}q₁^{r₁}⋯ with Σ rᵢ = s and Σ rᵢ(2^{i+1}−1) = t.
pub fn q_monomial_count(s: u32, t: u32) -> u64 {
    fn rec(i: u32, s: u32, t: u32) -> u64 {
        let w = (1u32 << (i + 1)) - 1;
        if s == 0 {
            return (t == 0) as u64;
        }
        if w > t {
            return 0;
        }
        let mut total = 0;
        for r in 0..=s.min(t / w) {
            total += rec(i + 1, s - r, t - r * w);
        }
        total
    }
    rec(0, s, t)
}

/// Kernel dimension of a 0/1 matrix by trying every vector. Only for
/// small column counts.
pub fn brute_force_kernel_dim(rows: &[Vec<u8>], cols: usize) -> usize {
    assert!(cols <= 20, "brute force limited to 20 columns");
    let mut count = 0u64;
    for x in 0u64..(1u64 << cols) {
        let ok = rows.iter().all(|r| {
            let mut acc = 0u8;
            for (j, &b) in r.iter().enumerate() {
                if b != 0 && (x >> j) & 1 == 1 {
                    acc ^= 1;
                }
            }
            acc == 0
        });
        if ok {
            count += 1;
        }
    }
    count.trailing_zeros() as usize
}

/// All solutions of M x = b by enumeration, as bit masks.
pub fn brute_force_solutions(rows: &[Vec<u8>], cols: usize, b: &[u8]) -> Vec<u64> {
    assert!(cols <= 20);
    (0u64..(1u64 << cols))
        .filter(|x| {
            rows.iter().zip(b).all(|(r, &bi)| {
                let mut acc = 0u8;
                for (j, &v) in r.iter().enumerate() {
                    if v != 0 && (x >> j) & 1 == 1 {
                        acc ^= 1;
                    }
                }
                acc == bi
            })
        })
        .collect()
}

/// Ext over an exterior algebra on one generator of degree `g`:
/// one class in each bidegree (s, s·g).
pub fn exterior_ext_dim(g: u32, s: u32, t: u32) -> usize {
    (t == s * g) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adem_small() {
        assert!(adem_reduce(&[1, 1]).is_empty());
        let r = adem_reduce(&[2, 2]);
        assert_eq!(r, BTreeSet::from([vec![3, 1]]));
        assert_eq!(adem_reduce(&[1, 2]), BTreeSet::from([vec![3]]));
    }

    #[test]
    fn admissible_counts_match_partitions() {
        let p = partition_counts(20);
        for d in 0..=20 {
            assert_eq!(admissible_basis(d).len() as u64, p[d as usize], "degree {}", d);
        }
    }

    #[test]
    fn a1_series() {
        assert_eq!(poincare_series_a(1, 8), vec![1, 1, 1, 2, 1, 1, 1, 0, 0]);
        assert_eq!(poincare_series_a(0, 3), vec![1, 1, 0, 0]);
    }

    #[test]
    fn q_counts() {
        assert_eq!(q_monomial_count(0, 0), 1);
        assert_eq!(q_monomial_count(1, 1), 1);
        assert_eq!(q_monomial_count(1, 3), 1);
        assert_eq!(q_monomial_count(2, 4), 1);
        assert_eq!(q_monomial_count(2, 2), 1);
    }

    #[test]
    fn brute_force() {
        assert_eq!(brute_force_kernel_dim(&[vec![1, 1]], 2), 1);
        assert_eq!(brute_force_solutions(&[vec![1, 1], vec![0, 0]], 2, &[1, 0]).len(), 2);
    }
}
