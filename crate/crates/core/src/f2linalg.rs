//! Dense linear algebra over F2 with rows packed into `u64` words.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_ones(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if b {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn add_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn add(&self, other: &F2Vector) -> F2Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones() & 1;
        }
        acc == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * WORD + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    pub fn bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        let mut v = F2Vector::zeros(self.len + other.len);
        for i in self.iter_ones() {
            v.set(i, true);
        }
        for i in other.iter_ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, end: usize) -> F2Vector {
        let mut v = F2Vector::zeros(end - start);
        for i in self.iter_ones().filter(|&i| i >= start && i < end) {
            v.set(i - start, true);
        }
        v
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix { rows, cols, data: vec![F2Vector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Panics if the rows have differing lengths.
    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        F2Matrix { rows: rows.len(), cols, data: rows }
    }

    pub fn from_bit_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| F2Vector::from_bits(r.iter().map(|&b| b != 0))).collect();
        Self::from_rows(cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.iter_ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.data[i]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut F2Vector {
        &mut self.data[i]
    }

    pub fn row_data(&self) -> &[F2Vector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<F2Vector> {
        self.data
    }

    pub fn push_row(&mut self, r: F2Vector) {
        assert_eq!(r.len(), self.cols, "row length mismatch");
        self.data.push(r);
        self.rows += 1;
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.data[i].set(j, b)
    }

    pub fn column(&self, j: usize) -> F2Vector {
        F2Vector::from_bits((0..self.rows).map(|i| self.get(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for j in r.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// `self · v` with `v` a column vector of length `cols`.
    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        F2Vector::from_bits(self.data.iter().map(|r| r.dot(v)))
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            let acc = &mut out.data[i];
            for k in r.iter_ones() {
                acc.add_assign(&other.data[k]);
            }
        }
        out
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        F2Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        F2Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.concat(b)).collect();
        F2Matrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// Reduced row echelon form. The pivot in each column is the first
    /// remaining row with a one there, so the result is deterministic.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.data[i].get(c)) else {
                continue;
            };
            self.data.swap(r, p);
            let (head, tail) = self.data.split_at_mut(r);
            let (piv, rest) = tail.split_first_mut().unwrap();
            let w = c / WORD;
            let bit = 1u64 << (c % WORD);
            for row in head.iter_mut().chain(rest.iter_mut()) {
                if row.words[w] & bit != 0 {
                    for (a, b) in row.words[w..].iter_mut().zip(&piv.words[w..]) {
                        *a ^= *b;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let (e, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = F2Vector::unit(self.cols, f);
            for (i, &p) in pivots.iter().enumerate() {
                if e.get(i, f) {
                    v.set(p, true);
                }
            }
            out.push(v);
        }
        out
    }

    /// A solution of `self · x = b`; `Ok(None)` when `b` is outside the column space.
    pub fn solve(&self, b: &F2Vector) -> Result<Option<F2Vector>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let aug = self.hstack(&F2Matrix::from_columns(self.rows, core::slice::from_ref(b)));
        let (e, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = F2Vector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if e.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// Basis of the column space, in echelon form.
    pub fn image_basis(&self) -> Vec<F2Vector> {
        let (e, pivots) = self.transpose().rref();
        e.into_rows().into_iter().take(pivots.len()).collect()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            writeln!(f, "  {:?}", r)?;
        }
        Ok(())
    }
}

/// A subspace of F2^n kept as a reduced echelon basis, so membership and
/// normal forms cost one pass over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<F2Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| F2Vector::unit(ambient, i)))
    }

    pub fn span<I: IntoIterator<Item = F2Vector>>(ambient: usize, gens: I) -> Self {
        let mut s = Self::zero(ambient);
        for g in gens {
            s.insert(g);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the subspace.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut v = v.clone();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.add_assign(r);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: F2Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let v = self.reduce(&v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for r in self.rows.iter_mut() {
            if r.get(p) {
                r.add_assign(&v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x = Σ aᵢ uᵢ = Σ bⱼ wⱼ  ⇔  (a, b) in the kernel of [U | W]ᵀ.
        let a = self.dim();
        let cols: Vec<F2Vector> = self.rows.iter().chain(&other.rows).cloned().collect();
        if cols.is_empty() {
            return Subspace::zero(self.ambient);
        }
        let m = F2Matrix::from_columns(self.ambient, &cols);
        let mut out = Subspace::zero(self.ambient);
        for k in m.kernel_basis() {
            let mut x = F2Vector::zeros(self.ambient);
            for i in k.iter_ones().filter(|&i| i < a) {
                x.add_assign(&self.rows[i]);
            }
            out.insert(x);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Standard basis vectors indexed by non-pivot positions: a basis of a
    /// complement, and the canonical coordinates of the quotient.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Extends the basis of `self` (a subspace of `larger`) to a basis of
    /// `larger`, returning only the added vectors.
    pub fn complement_in(&self, larger: &Subspace) -> Vec<F2Vector> {
        let mut s = self.clone();
        let mut out = Vec::new();
        for r in &larger.rows {
            if s.insert(r.clone()) {
                out.push(r.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_zero() {
        let id = F2Matrix::identity(2);
        let (e, p) = id.rref();
        assert_eq!(e, id);
        assert_eq!(p, vec![0, 1]);
        let z = F2Matrix::zeros(3, 3);
        let (e, p) = z.rref();
        assert_eq!(e, z);
        assert!(p.is_empty());
        let (e, p) = F2Matrix::zeros(0, 0).rref();
        assert_eq!(e.rows(), 0);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_all_ones() {
        let m = F2Matrix::from_bit_rows(&[&[1, 1], &[1, 1]]);
        let (e, p) = m.rref();
        assert_eq!(e, F2Matrix::from_bit_rows(&[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_small_cases() {
        assert!(F2Matrix::identity(4).kernel_basis().is_empty());
        assert_eq!(F2Matrix::zeros(1, 3).kernel_basis().len(), 3);
        let k = F2Matrix::from_bit_rows(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![F2Vector::from_bits([true, true])]);
    }

    #[test]
    fn solve_cases() {
        let b = F2Vector::from_bits([true, false, true]);
        assert_eq!(F2Matrix::identity(3).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(F2Matrix::zeros(3, 3).solve(&b).unwrap(), None);
        let m = F2Matrix::from_bit_rows(&[&[1, 1], &[0, 0]]);
        let x = m.solve(&F2Vector::from_bits([true, false])).unwrap().unwrap();
        assert!(x == F2Vector::from_bits([true, false]) || x == F2Vector::from_bits([false, true]));
        assert_eq!(
            m.solve(&F2Vector::zeros(3)),
            Err(LinalgError::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn subspace_ops() {
        let e = |bits: [u8; 4]| F2Vector::from_bits(bits.iter().map(|&b| b == 1));
        let a = Subspace::span(4, [e([1, 1, 0, 0]), e([0, 0, 1, 1])]);
        let b = Subspace::span(4, [e([1, 1, 1, 1]), e([1, 0, 0, 0])]);
        assert_eq!(a.intersection(&b).dim(), 1);
        assert!(a.intersection(&b).contains(&e([1, 1, 1, 1])));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.complement_positions().len(), 2);
    }

    #[test]
    fn mul_and_transpose() {
        let m = F2Matrix::from_bit_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let t = m.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(m.mul(&t), F2Matrix::from_bit_rows(&[&[0, 1], &[1, 0]]));
    }
}
