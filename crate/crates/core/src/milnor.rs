//! The mod 2 Steenrod algebra in the Milnor basis, profile subalgebras
//! A(n) and E(n), and Poincaré duality checks for the finite ones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::f2linalg::{F2Matrix, F2Vector};

/// Degree of ξᵢ, the weight of the i-th Milnor exponent (1-based).
#[inline]
pub fn xi_degree(i: usize) -> u32 {
    (1u32 << i) - 1
}

/// Sq(r₁,…,r_k) with trailing zeros stripped; `Sq(0)` is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MilnorMonomial(Vec<u32>);

impl MilnorMonomial {
    pub fn new(mut r: Vec<u32>) -> Self {
        while r.last() == Some(&0) {
            r.pop();
        }
        MilnorMonomial(r)
    }

    pub fn unit() -> Self {
        MilnorMonomial(Vec::new())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// 1-based exponent rᵢ, zero past the end.
    pub fn r(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &r)| r * xi_degree(i + 1)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MilnorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sq(")?;
        if self.0.is_empty() {
            write!(f, "0")?;
        }
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MilnorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Basis order inside one degree: descending lexicographic on (r₁, r₂, …),
/// so `Sq(3)` precedes `Sq(0,1)`.
pub fn basis_cmp(a: &MilnorMonomial, b: &MilnorMonomial) -> core::cmp::Ordering {
    let n = a.0.len().max(b.0.len());
    for i in 1..=n {
        match b.r(i).cmp(&a.r(i)) {
            core::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    core::cmp::Ordering::Equal
}

/// An F2-sum of Milnor monomials of one degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MilnorElement {
    degree: u32,
    terms: BTreeSet<MilnorMonomial>,
}

impl MilnorElement {
    pub fn zero(degree: u32) -> Self {
        MilnorElement { degree, terms: BTreeSet::new() }
    }

    pub fn one() -> Self {
        Self::from(MilnorMonomial::unit())
    }

    pub fn sq(r: &[u32]) -> Self {
        Self::from(MilnorMonomial::new(r.to_vec()))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in basis order.
    pub fn terms(&self) -> Vec<&MilnorMonomial> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| basis_cmp(a, b));
        t
    }

    pub fn contains(&self, m: &MilnorMonomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds one monomial (mod 2). Panics on degree mismatch.
    pub fn toggle(&mut self, m: MilnorMonomial) {
        assert_eq!(m.degree(), self.degree, "degree mismatch in Milnor sum");
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &MilnorElement) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.degree = other.degree;
        }
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn add(&self, other: &MilnorElement) -> MilnorElement {
        let mut s = self.clone();
        s.add_assign(other);
        s
    }

    pub fn mul(&self, other: &MilnorElement) -> MilnorElement {
        milnor_product(self, other)
    }
}

impl From<MilnorMonomial> for MilnorElement {
    fn from(m: MilnorMonomial) -> Self {
        let degree = m.degree();
        let mut terms = BTreeSet::new();
        terms.insert(m);
        MilnorElement { degree, terms }
    }
}

impl fmt::Display for MilnorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, m) in self.terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MilnorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of two monomials via Milnor matrices. Returns the monomials
/// appearing with odd coefficient.
pub fn milnor_product_monomials(a: &MilnorMonomial, b: &MilnorMonomial) -> Vec<MilnorMonomial> {
    let r = &a.0;
    let s = &b.0;
    if r.is_empty() {
        return vec![b.clone()];
    }
    if s.is_empty() {
        return vec![a.clone()];
    }
    let rows = r.len();
    let cols = s.len();
    // x[i][j] for 1 ≤ i ≤ rows, 1 ≤ j ≤ cols; row 0 and column 0 are implied.
    let mut x = vec![vec![0u32; cols + 1]; rows + 1];
    let mut col_used = vec![0u32; cols + 1];
    let mut out = Vec::new();
    product_rec(r, s, 1, cols, r[0], &mut x, &mut col_used, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn product_rec(
    r: &[u32],
    s: &[u32],
    i: usize,
    j: usize,
    remaining: u32,
    x: &mut Vec<Vec<u32>>,
    col_used: &mut Vec<u32>,
    out: &mut Vec<MilnorMonomial>,
) {
    let rows = r.len();
    let cols = s.len();
    if j == 0 {
        x[i][0] = remaining;
        if i == rows {
            if let Some(m) = read_matrix(s, x) {
                out.push(m);
            }
        } else {
            product_rec(r, s, i + 1, cols, r[i], x, col_used, out);
        }
        return;
    }
    let weight = 1u32 << j;
    let cap = (remaining / weight).min(s[j - 1] - col_used[j]);
    for v in 0..=cap {
        x[i][j] = v;
        col_used[j] += v;
        product_rec(r, s, i, j - 1, remaining - v * weight, x, col_used, out);
        col_used[j] -= v;
    }
    x[i][j] = 0;
}

/// Diagonal sums of a Milnor matrix, or `None` when some multinomial
/// coefficient is even (binary digits collide along a diagonal).
fn read_matrix(s: &[u32], x: &[Vec<u32>]) -> Option<MilnorMonomial> {
    let rows = x.len() - 1;
    let cols = s.len();
    let mut t = Vec::with_capacity(rows + cols);
    for n in 1..=rows + cols {
        let mut acc = 0u32;
        for i in 0..=n.min(rows) {
            let j = n - i;
            if j > cols {
                continue;
            }
            let v = if i == 0 {
                s[j - 1] - (1..=rows).map(|k| x[k][j]).sum::<u32>()
            } else {
                x[i][j]
            };
            if acc & v != 0 {
                return None;
            }
            acc |= v;
        }
        t.push(acc);
    }
    Some(MilnorMonomial::new(t))
}

pub fn milnor_product(a: &MilnorElement, b: &MilnorElement) -> MilnorElement {
    let mut out = MilnorElement::zero(a.degree + b.degree);
    for x in &a.terms {
        for y in &b.terms {
            for m in milnor_product_monomials(x, y) {
                out.toggle(m);
            }
        }
    }
    out
}

/// Componentwise splittings R = A + B.
pub fn coproduct_monomial(m: &MilnorMonomial) -> Vec<(MilnorMonomial, MilnorMonomial)> {
    let mut out = Vec::new();
    let r = &m.0;
    let mut a = vec![0u32; r.len()];
    split_rec(r, 0, &mut a, &mut out);
    out
}

fn split_rec(r: &[u32], i: usize, a: &mut Vec<u32>, out: &mut Vec<(MilnorMonomial, MilnorMonomial)>) {
    if i == r.len() {
        let b: Vec<u32> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
        out.push((MilnorMonomial::new(a.clone()), MilnorMonomial::new(b)));
        return;
    }
    for v in (0..=r[i]).rev() {
        a[i] = v;
        split_rec(r, i + 1, a, out);
    }
}

/// ψ(a) as a list of tensor terms with F2 cancellation already applied.
pub fn coproduct(a: &MilnorElement) -> Vec<(MilnorMonomial, MilnorMonomial)> {
    let mut acc: BTreeSet<(MilnorMonomial, MilnorMonomial)> = BTreeSet::new();
    for m in &a.terms {
        for t in coproduct_monomial(m) {
            if !acc.remove(&t) {
                acc.insert(t);
            }
        }
    }
    acc.into_iter().collect()
}

/// χ from Σ χ(a′)a″ = ε(a): χ(Sq R) = Σ_{A+B=R, B≠0} χ(Sq A)·Sq B.
pub fn antipode(a: &MilnorElement) -> MilnorElement {
    let mut memo = BTreeMap::new();
    let mut out = MilnorElement::zero(a.degree);
    for m in &a.terms {
        out.add_assign(&antipode_memo(m, &mut memo));
    }
    out
}

fn antipode_memo(m: &MilnorMonomial, memo: &mut BTreeMap<MilnorMonomial, MilnorElement>) -> MilnorElement {
    if m.is_unit() {
        return MilnorElement::one();
    }
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    let mut out = MilnorElement::zero(m.degree());
    for (a, b) in coproduct_monomial(m) {
        if b.is_unit() {
            continue;
        }
        let ca = antipode_memo(&a, memo);
        out.add_assign(&milnor_product(&ca, &MilnorElement::from(b)));
    }
    memo.insert(m.clone(), out.clone());
    out
}

/// Sq(R) ↦ Sq(R/2) if every rᵢ is even, otherwise 0.
pub fn verschiebung(a: &MilnorElement) -> MilnorElement {
    let mut out = MilnorElement::zero(a.degree / 2);
    for m in &a.terms {
        if m.0.iter().all(|r| r % 2 == 0) {
            out.toggle(MilnorMonomial::new(m.0.iter().map(|r| r / 2).collect()));
        }
    }
    out
}

/// Exponent bound "infinite".
pub const INF: u32 = u32::MAX;

/// Sub-Hopf-algebra profile: Sq(R) belongs iff rᵢ < 2^{h(i)} for every i.
/// Heights past the listed ones equal `tail`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Profile {
    heights: Vec<u32>,
    tail: u32,
}

impl Profile {
    pub fn new(heights: Vec<u32>, tail: u32) -> Self {
        Profile { heights, tail }
    }

    pub fn full() -> Self {
        Profile { heights: Vec::new(), tail: INF }
    }

    /// A(n): h(i) = max(n+2−i, 0).
    pub fn a(n: u32) -> Self {
        Profile { heights: (1..=n + 1).map(|i| n + 2 - i).collect(), tail: 0 }
    }

    /// E(n), exterior on the Milnor primitives Q₀,…,Q_n.
    pub fn e(n: u32) -> Self {
        Profile { heights: vec![1; n as usize + 1], tail: 0 }
    }

    /// The infinite exterior subalgebra on all Milnor primitives.
    pub fn e_infinite() -> Self {
        Profile { heights: Vec::new(), tail: 1 }
    }

    /// Subalgebra generated by the P^a_t with a < s: all exponents below 2^s.
    pub fn below_power(s: u32) -> Self {
        Profile { heights: Vec::new(), tail: s }
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights.get(i - 1).copied().unwrap_or(self.tail)
    }

    pub fn is_finite(&self) -> bool {
        self.tail == 0 && self.heights.iter().all(|&h| h != INF)
    }

    fn bound(&self, i: usize) -> Option<u32> {
        let h = self.height(i);
        if h >= 32 {
            None
        } else {
            Some(1u32 << h)
        }
    }

    pub fn admits(&self, m: &MilnorMonomial) -> bool {
        m.0.iter().enumerate().all(|(i, &r)| self.bound(i + 1).is_none_or(|b| r < b))
    }

    /// Pointwise minimum (intersection of subalgebras).
    pub fn meet(&self, other: &Profile) -> Profile {
        let n = self.heights.len().max(other.heights.len());
        Profile {
            heights: (1..=n).map(|i| self.height(i).min(other.height(i))).collect(),
            tail: self.tail.min(other.tail),
        }
    }

    /// Top degree, for finite profiles.
    pub fn top_degree(&self) -> Option<u32> {
        if !self.is_finite() {
            return None;
        }
        Some(
            self.heights
                .iter()
                .enumerate()
                .map(|(i, &h)| ((1u32 << h) - 1) * xi_degree(i + 1))
                .sum(),
        )
    }

    pub fn name(&self) -> String {
        use alloc::format;
        for n in 0..8 {
            if *self == Profile::a(n) {
                return format!("A({})", n);
            }
            if *self == Profile::e(n) {
                return format!("E({})", n);
            }
        }
        if *self == Profile::full() {
            return "A".into();
        }
        if *self == Profile::e_infinite() {
            return "E".into();
        }
        let hs: Vec<String> = self
            .heights
            .iter()
            .map(|&h| if h == INF { "inf".into() } else { format!("{}", h) })
            .collect();
        let tail = if self.tail == INF { "inf".into() } else { format!("{}", self.tail) };
        format!("profile[{};{}]", hs.join(","), tail)
    }
}

/// Admissible monomials of degree `d`, in basis order.
pub fn basis_in_degree(p: &Profile, d: u32) -> Vec<MilnorMonomial> {
    let mut top = 1;
    while xi_degree(top + 1) <= d {
        top += 1;
    }
    let mut out = Vec::new();
    let mut r = vec![0u32; top];
    basis_rec(p, top, d, &mut r, &mut out);
    out.sort_by(basis_cmp);
    out
}

fn basis_rec(p: &Profile, i: usize, remaining: u32, r: &mut Vec<u32>, out: &mut Vec<MilnorMonomial>) {
    if i == 0 {
        if remaining == 0 {
            out.push(MilnorMonomial::new(r.clone()));
        }
        return;
    }
    let w = xi_degree(i);
    let mut cap = remaining / w;
    if let Some(b) = p.bound(i) {
        cap = cap.min(b - 1);
    }
    for v in 0..=cap {
        r[i - 1] = v;
        basis_rec(p, i - 1, remaining - v * w, r, out);
    }
    r[i - 1] = 0;
}

/// pd(n) = top degree of A(n) = Σ_{i=1}^{n+1} (2^{n+2−i} − 1)(2^i − 1).
pub fn pd_degree(n: u32) -> u32 {
    Profile::a(n).top_degree().unwrap()
}

/// Structure constants of a profile algebra through degree `max_degree`.
#[derive(Clone, Debug)]
pub struct MultTable {
    profile: Profile,
    max_degree: u32,
    basis: Vec<Vec<MilnorMonomial>>,
    index: BTreeMap<MilnorMonomial, usize>,
    // products[(d1, i, d2, j)] flattened per degree pair
    products: BTreeMap<(u32, u32), Vec<Vec<F2Vector>>>,
}

impl MultTable {
    pub fn new(profile: &Profile, max_degree: u32) -> Self {
        let basis: Vec<Vec<MilnorMonomial>> = (0..=max_degree).map(|d| basis_in_degree(profile, d)).collect();
        let mut index = BTreeMap::new();
        for b in &basis {
            for (i, m) in b.iter().enumerate() {
                index.insert(m.clone(), i);
            }
        }
        let mut products = BTreeMap::new();
        for d1 in 0..=max_degree {
            for d2 in 0..=max_degree - d1 {
                let target = (d1 + d2) as usize;
                let mut block = Vec::with_capacity(basis[d1 as usize].len());
                for x in &basis[d1 as usize] {
                    let mut row = Vec::with_capacity(basis[d2 as usize].len());
                    for y in &basis[d2 as usize] {
                        let mut v = F2Vector::zeros(basis[target].len());
                        for m in milnor_product_monomials(x, y) {
                            let k = *index.get(&m).expect("profile not closed under product");
                            v.flip(k);
                        }
                        row.push(v);
                    }
                    block.push(row);
                }
                products.insert((d1, d2), block);
            }
        }
        MultTable { profile: profile.clone(), max_degree, basis, index, products }
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn basis(&self, d: u32) -> &[MilnorMonomial] {
        &self.basis[d as usize]
    }

    pub fn dim(&self, d: u32) -> usize {
        self.basis.get(d as usize).map_or(0, |b| b.len())
    }

    pub fn index_of(&self, m: &MilnorMonomial) -> usize {
        self.index[m]
    }

    /// Product of basis elements `i` in degree `d1` and `j` in degree `d2`.
    pub fn product(&self, d1: u32, i: usize, d2: u32, j: usize) -> &F2Vector {
        &self.products[&(d1, d2)][i][j]
    }

    /// Product of two elements given as coordinate vectors.
    pub fn mul_vectors(&self, d1: u32, x: &F2Vector, d2: u32, y: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(self.dim(d1 + d2));
        for i in x.iter_ones() {
            for j in y.iter_ones() {
                out.add_assign(self.product(d1, i, d2, j));
            }
        }
        out
    }

    pub fn to_vector(&self, a: &MilnorElement) -> F2Vector {
        let mut v = F2Vector::zeros(self.dim(a.degree()));
        for m in &a.terms {
            v.flip(self.index_of(m));
        }
        v
    }

    pub fn to_element(&self, d: u32, v: &F2Vector) -> MilnorElement {
        let mut e = MilnorElement::zero(d);
        for i in v.iter_ones() {
            e.toggle(self.basis[d as usize][i].clone());
        }
        e
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDWitness {
    pub n: u32,
    pub pd: u32,
    pub dims: Vec<usize>,
    /// Rank of A(n)^k ⊗ A(n)^{pd−k} → A(n)^{pd}, viewed as a dim^k × dim^{pd−k} matrix.
    pub pairing_ranks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PoincareError {
    #[error("top degree {pd} of A({n}) has dimension {dim}, expected 1")]
    TopNotOneDimensional { n: u32, pd: u32, dim: usize },
    #[error("multiplication pairing of A({n}) degenerate in degree {degree}: rank {rank}, dimension {dim}")]
    Degenerate { n: u32, degree: u32, rank: usize, dim: usize },
}

/// The pairing matrix A(n)^k × A(n)^{pd−k} → A(n)^{pd} ≅ F2.
pub fn pairing_matrix(table: &MultTable, k: u32, pd: u32) -> F2Matrix {
    let mut m = F2Matrix::zeros(table.dim(k), table.dim(pd - k));
    for i in 0..table.dim(k) {
        for j in 0..table.dim(pd - k) {
            if table.product(k, i, pd - k, j).get(0) {
                m.set(i, j, true);
            }
        }
    }
    m
}

pub fn poincare_duality_check(n: u32) -> Result<PDWitness, PoincareError> {
    let profile = Profile::a(n);
    let pd = pd_degree(n);
    let table = MultTable::new(&profile, pd);
    let dims: Vec<usize> = (0..=pd).map(|d| table.dim(d)).collect();
    if dims[pd as usize] != 1 {
        return Err(PoincareError::TopNotOneDimensional { n, pd, dim: dims[pd as usize] });
    }
    let mut pairing_ranks = Vec::new();
    for k in 0..=pd {
        let rank = pairing_matrix(&table, k, pd).rank();
        if rank != dims[k as usize] || rank != dims[(pd - k) as usize] {
            return Err(PoincareError::Degenerate { n, degree: k, rank, dim: dims[k as usize] });
        }
        pairing_ranks.push(rank);
    }
    Ok(PDWitness { n, pd, dims, pairing_ranks })
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

pub(crate) struct Cursor<'a> {
    pub s: &'a [u8],
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    pub fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(alloc::format!("expected '{}'", c as char)))
        }
    }

    pub fn eat_str(&mut self, t: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(t.as_bytes()) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    pub fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number".into()));
        }
        core::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError { position: start, message: "number out of range".into() })
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn error(&self, message: String) -> ParseError {
        ParseError { position: self.pos, message }
    }
}

fn parse_milnor_factor(c: &mut Cursor) -> Result<MilnorElement, ParseError> {
    if c.eat(b'(') {
        let e = parse_milnor_sum(c)?;
        c.expect(b')')?;
        return Ok(e);
    }
    if c.peek() == Some(b'0') {
        c.pos += 1;
        return Ok(MilnorElement::zero(0));
    }
    if !c.eat_str("Sq(") {
        return Err(c.error("expected 'Sq(' or '0'".into()));
    }
    let mut r = vec![c.number()?];
    while c.eat(b',') {
        r.push(c.number()?);
    }
    c.expect(b')')?;
    Ok(MilnorElement::from(MilnorMonomial::new(r)))
}

fn parse_milnor_product(c: &mut Cursor) -> Result<MilnorElement, ParseError> {
    let mut acc = parse_milnor_factor(c)?;
    while c.eat(b'*') {
        let f = parse_milnor_factor(c)?;
        acc = milnor_product(&acc, &f);
    }
    Ok(acc)
}

fn parse_milnor_sum(c: &mut Cursor) -> Result<MilnorElement, ParseError> {
    let start = c.pos;
    let mut acc = parse_milnor_product(c)?;
    while c.eat(b'+') {
        let t = parse_milnor_product(c)?;
        if !acc.is_zero() && !t.is_zero() && acc.degree() != t.degree() {
            return Err(ParseError { position: start, message: "sum of elements of different degrees".into() });
        }
        acc.add_assign(&t);
    }
    Ok(acc)
}

/// Parses sums and products of `Sq(r1,...,rk)` terms, e.g. `Sq(1)*Sq(2) + Sq(3)`.
pub fn parse_milnor(s: &str) -> Result<MilnorElement, ParseError> {
    let mut c = Cursor::new(s);
    let e = parse_milnor_sum(&mut c)?;
    if !c.at_end() {
        return Err(c.error("unexpected trailing input".into()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(r: &[u32]) -> MilnorElement {
        MilnorElement::sq(r)
    }

    #[test]
    fn basic_products() {
        assert_eq!(sq(&[0]).mul(&sq(&[2, 1])), sq(&[2, 1]));
        assert!(sq(&[1]).mul(&sq(&[1])).is_zero());
        // Sq²Sq² = Sq³Sq¹, and Sq³Sq¹ = Sq(1,1) in the Milnor basis.
        assert_eq!(sq(&[2]).mul(&sq(&[2])), sq(&[1, 1]));
        assert_eq!(sq(&[3]).mul(&sq(&[1])), sq(&[1, 1]));
        assert_eq!(sq(&[1]).mul(&sq(&[2])), sq(&[3]));
        assert_eq!(sq(&[2]).mul(&sq(&[1])), sq(&[3]).add(&sq(&[0, 1])));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(&sq(&[])), vec![(MilnorMonomial::unit(), MilnorMonomial::unit())]);
        assert_eq!(coproduct(&sq(&[1])).len(), 2);
        let c2 = coproduct(&sq(&[2]));
        assert_eq!(c2.len(), 3);
        assert!(c2.contains(&(MilnorMonomial::new(vec![1]), MilnorMonomial::new(vec![1]))));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&sq(&[])), sq(&[]));
        assert_eq!(antipode(&sq(&[1])), sq(&[1]));
        assert_eq!(antipode(&sq(&[2])), sq(&[2]));
        // χ(Sq³) = Sq²Sq¹ = Sq(3) + Sq(0,1)
        assert_eq!(antipode(&sq(&[3])), sq(&[3]).add(&sq(&[0, 1])));
    }

    #[test]
    fn verschiebung_examples() {
        assert_eq!(verschiebung(&sq(&[2])), sq(&[1]));
        assert!(verschiebung(&sq(&[1])).is_zero());
        assert!(verschiebung(&sq(&[0, 1])).is_zero());
        assert_eq!(verschiebung(&sq(&[4, 2])), sq(&[2, 1]));
    }

    #[test]
    fn bases() {
        assert_eq!(basis_in_degree(&Profile::full(), 0), vec![MilnorMonomial::unit()]);
        assert_eq!(
            basis_in_degree(&Profile::full(), 3),
            vec![MilnorMonomial::new(vec![3]), MilnorMonomial::new(vec![0, 1])]
        );
        assert!(basis_in_degree(&Profile::a(1), 7).is_empty());
        let dim_a1: usize = (0..=6).map(|d| basis_in_degree(&Profile::a(1), d).len()).sum();
        assert_eq!(dim_a1, 8);
    }

    #[test]
    fn pd_values() {
        assert_eq!(pd_degree(0), 1);
        assert_eq!(pd_degree(1), 6);
        assert_eq!(pd_degree(2), 23);
        for n in 0..3 {
            assert!(pd_degree(n) < pd_degree(n + 1));
        }
        for n in 0..4 {
            let enumerated = (0..200).rev().find(|&d| !basis_in_degree(&Profile::a(n), d).is_empty()).unwrap();
            assert_eq!(enumerated, pd_degree(n));
        }
    }

    #[test]
    fn poincare_small() {
        let w0 = poincare_duality_check(0).unwrap();
        assert_eq!(w0.pd, 1);
        assert_eq!(w0.pairing_ranks, vec![1, 1]);
        let w1 = poincare_duality_check(1).unwrap();
        assert_eq!(w1.pd, 6);
        assert_eq!(w1.dims, vec![1, 1, 1, 2, 1, 1, 1]);
        let w2 = poincare_duality_check(2).unwrap();
        assert_eq!(w2.pd, 23);
        let rev: Vec<usize> = w2.dims.iter().rev().copied().collect();
        assert_eq!(w2.dims, rev);
        assert_eq!(w2.dims.iter().sum::<usize>(), 64);
    }

    #[test]
    fn parse_round_trip() {
        let e = parse_milnor("Sq(3) + Sq(0,1)").unwrap();
        assert_eq!(alloc::format!("{}", e), "Sq(3) + Sq(0,1)");
        assert_eq!(parse_milnor(&alloc::format!("{}", e)).unwrap(), e);
        assert!(parse_milnor("Sq(1)*Sq(1)").unwrap().is_zero());
        let err = parse_milnor("Sq(1) + Sq(").unwrap_err();
        assert_eq!(err.position, 11);
        assert!(parse_milnor("Sq(1) + Sq(2)").is_err());
    }
}
