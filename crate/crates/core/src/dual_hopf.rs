//! The dual Steenrod algebra A_* = F2[ζ₁, ζ₂, …] with ξₙ = χ(ζₙ), its
//! monomial quotients and subalgebras, the adjoint coaction, and the
//! coaction on the Cotor generators qₙ.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::milnor::{
    antipode, basis_in_degree, coproduct, coproduct_monomial, milnor_product, xi_degree, Cursor, MilnorElement,
    MilnorMonomial, ParseError, Profile,
};

/// Number of polynomial generators tracked; ζ₈ has degree 255.
pub const GENS: usize = 8;

/// ζ₁^{e₁}⋯ζ₈^{e₈}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualMonomial([u16; GENS]);

impl DualMonomial {
    pub fn one() -> Self {
        DualMonomial([0; GENS])
    }

    pub fn new(e: &[u16]) -> Self {
        assert!(e.len() <= GENS || e[GENS..].iter().all(|&x| x == 0), "too many generators");
        let mut a = [0u16; GENS];
        for (i, &x) in e.iter().take(GENS).enumerate() {
            a[i] = x;
        }
        DualMonomial(a)
    }

    /// ζᵢ (1-based); ζ₀ = 1.
    pub fn zeta(i: usize) -> Self {
        let mut a = [0u16; GENS];
        if i > 0 {
            a[i - 1] = 1;
        }
        DualMonomial(a)
    }

    pub fn zeta_pow(i: usize, e: u16) -> Self {
        let mut a = [0u16; GENS];
        if i > 0 {
            a[i - 1] = e;
        }
        DualMonomial(a)
    }

    /// 1-based exponent.
    pub fn e(&self, i: usize) -> u16 {
        if i == 0 || i > GENS {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn exponents(&self) -> Vec<u16> {
        let mut v = self.0.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn raw(&self) -> &[u16; GENS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| e as u32 * xi_degree(i + 1)).sum()
    }

    /// Total polynomial degree Σ eᵢ.
    pub fn poly_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &DualMonomial) -> DualMonomial {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(other.0.iter()) {
            *x += *y;
        }
        DualMonomial(a)
    }

    /// Raises to the power 2^k.
    pub fn frobenius(&self, k: u32) -> DualMonomial {
        DualMonomial(self.0.map(|e| e << k))
    }

    pub fn divides(&self, other: &DualMonomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// self / other, assuming `other` divides `self`.
    pub fn div(&self, other: &DualMonomial) -> DualMonomial {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(other.0.iter()) {
            *x -= *y;
        }
        DualMonomial(a)
    }

    /// The Milnor monomial with the same exponents (its dual basis element
    /// pairs with the ξ-monomial of these exponents).
    pub fn as_milnor(&self) -> MilnorMonomial {
        MilnorMonomial::new(self.0.iter().map(|&e| e as u32).collect())
    }

    pub fn from_milnor(m: &MilnorMonomial) -> DualMonomial {
        let e: Vec<u16> = m.exponents().iter().map(|&r| r as u16).collect();
        DualMonomial::new(&e)
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}{}", var, i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, "z")
    }
}

impl fmt::Debug for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Basis order: descending lexicographic on (e₁, e₂, …).
pub fn dual_basis_cmp(a: &DualMonomial, b: &DualMonomial) -> core::cmp::Ordering {
    b.0.cmp(&a.0)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualPolynomial {
    degree: u32,
    terms: BTreeSet<DualMonomial>,
}

impl DualPolynomial {
    pub fn zero(degree: u32) -> Self {
        DualPolynomial { degree, terms: BTreeSet::new() }
    }

    pub fn one() -> Self {
        Self::from(DualMonomial::one())
    }

    pub fn zeta(i: usize) -> Self {
        Self::from(DualMonomial::zeta(i))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &DualMonomial) -> bool {
        self.terms.contains(m)
    }

    /// Terms in basis order.
    pub fn terms(&self) -> Vec<DualMonomial> {
        let mut t: Vec<_> = self.terms.iter().copied().collect();
        t.sort_by(dual_basis_cmp);
        t
    }

    pub fn iter(&self) -> impl Iterator<Item = &DualMonomial> {
        self.terms.iter()
    }

    pub fn toggle(&mut self, m: DualMonomial) {
        if self.terms.is_empty() {
            self.degree = m.degree();
        }
        assert_eq!(m.degree(), self.degree, "degree mismatch in dual sum");
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &DualPolynomial) {
        for m in &other.terms {
            self.toggle(*m);
        }
    }

    pub fn add(&self, other: &DualPolynomial) -> DualPolynomial {
        let mut s = self.clone();
        s.add_assign(other);
        s
    }

    pub fn mul(&self, other: &DualPolynomial) -> DualPolynomial {
        dual_product(self, other)
    }

    pub fn square(&self) -> DualPolynomial {
        self.frobenius(1)
    }

    pub fn frobenius(&self, k: u32) -> DualPolynomial {
        DualPolynomial { degree: self.degree << k, terms: self.terms.iter().map(|m| m.frobenius(k)).collect() }
    }

    pub fn pow(&self, e: u32) -> DualPolynomial {
        let mut acc = DualPolynomial::one();
        for k in 0..32 {
            if (e >> k) & 1 == 1 {
                acc = acc.mul(&self.frobenius(k));
            }
        }
        acc
    }

    /// Drops the monomials that vanish in the quotient described by `spec`.
    pub fn reduce(&self, spec: &DualSpec) -> DualPolynomial {
        DualPolynomial {
            degree: self.degree,
            terms: self.terms.iter().filter(|m| spec.within_bounds(m)).copied().collect(),
        }
    }

    pub fn display_in(&self, spec: &DualSpec) -> String {
        if spec.is_full() {
            format!("{}", self)
        } else {
            format!("{}@{}", self, spec.name())
        }
    }
}

impl From<DualMonomial> for DualPolynomial {
    fn from(m: DualMonomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        DualPolynomial { degree: m.degree(), terms }
    }
}

impl fmt::Display for DualPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, m) in self.terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DualPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn dual_product(a: &DualPolynomial, b: &DualPolynomial) -> DualPolynomial {
    let mut out = DualPolynomial::zero(a.degree + b.degree);
    for x in &a.terms {
        for y in &b.terms {
            out.toggle(x.mul(y));
        }
    }
    out
}

/// Σ aᵢ ⊗ bᵢ with F2 coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Tensor(BTreeSet<(DualMonomial, DualMonomial)>);

impl Tensor {
    pub fn zero() -> Self {
        Tensor(BTreeSet::new())
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.toggle(DualMonomial::one(), DualMonomial::one());
        t
    }

    pub fn toggle(&mut self, a: DualMonomial, b: DualMonomial) {
        if !self.0.remove(&(a, b)) {
            self.0.insert((a, b));
        }
    }

    pub fn add_assign(&mut self, other: &Tensor) {
        for &(a, b) in &other.0 {
            self.toggle(a, b);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &(DualMonomial, DualMonomial)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &DualMonomial, b: &DualMonomial) -> bool {
        self.0.contains(&(*a, *b))
    }

    /// Componentwise product, keeping only terms accepted by `keep`.
    pub fn mul_filtered<F: Fn(&DualMonomial, &DualMonomial) -> bool>(&self, other: &Tensor, keep: F) -> Tensor {
        let mut out = Tensor::zero();
        for (a, b) in &self.0 {
            for (c, d) in &other.0 {
                let (x, y) = (a.mul(c), b.mul(d));
                if keep(&x, &y) {
                    out.toggle(x, y);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Tensor) -> Tensor {
        self.mul_filtered(other, |_, _| true)
    }

    pub fn frobenius(&self, k: u32) -> Tensor {
        Tensor(self.0.iter().map(|(a, b)| (a.frobenius(k), b.frobenius(k))).collect())
    }

    /// Groups terms by right factor: Σ_r (Σ aᵢ) ⊗ r.
    pub fn by_right(&self) -> BTreeMap<DualMonomial, DualPolynomial> {
        let mut out: BTreeMap<DualMonomial, DualPolynomial> = BTreeMap::new();
        for &(a, b) in &self.0 {
            out.entry(b).or_insert_with(|| DualPolynomial::zero(a.degree())).toggle(a);
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn from_pairs<I: IntoIterator<Item = (DualMonomial, DualMonomial)>>(pairs: I) -> Tensor {
        let mut t = Tensor::zero();
        for (a, b) in pairs {
            t.toggle(a, b);
        }
        t
    }

    /// a ⊗ b for polynomials.
    pub fn outer(a: &DualPolynomial, b: &DualPolynomial) -> Tensor {
        let mut t = Tensor::zero();
        for x in a.iter() {
            for y in b.iter() {
                t.toggle(*x, *y);
            }
        }
        t
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, b)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}⊗{}", a, b)?;
        }
        Ok(())
    }
}

/// Exponent table describing a monomial sub-quotient of A_*: the exponent
/// of ζᵢ must be divisible by 2^{lo(i)} and smaller than 2^{hi(i)}.
/// `hi = INF_HEIGHT` means unbounded.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DualSpec {
    name: String,
    lo: [u8; GENS],
    hi: [u8; GENS],
    // generators missing from a subalgebra (as opposed to killed in a quotient)
    absent: [bool; GENS],
}

pub const INF_HEIGHT: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DualError {
    #[error("monomial {monomial} is not admissible in {spec}")]
    Inadmissible { monomial: String, spec: String },
    #[error("unsupported target {0}; expected A(1)*, A(1)*//A(3)* or A(1)*//A(2)*")]
    UnsupportedTarget(String),
    #[error("cannot form the quotient {0}")]
    BadQuotient(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

impl DualSpec {
    fn with(name: String, lo: [u8; GENS], hi: [u8; GENS]) -> Self {
        DualSpec { name, lo, hi, absent: [false; GENS] }
    }

    /// A_*.
    pub fn full() -> Self {
        Self::with("A*".into(), [0; GENS], [INF_HEIGHT; GENS])
    }

    /// A^{(s)}_* = F2[ζᵢ^{2^s}].
    pub fn sub_powers(s: u8) -> Self {
        if s == 0 {
            return Self::full();
        }
        Self::with(format!("A({})*", s), [s; GENS], [INF_HEIGHT; GENS])
    }

    /// A^{(a)}_* // A^{(b)}_* = F2[ζᵢ^{2^a}]/(ζᵢ^{2^b}).
    pub fn power_quotient(a: u8, b: u8) -> Self {
        assert!(a < b);
        let base = if a == 0 { "A*".to_string() } else { format!("A({})*", a) };
        Self::with(format!("{}//A({})*", base, b), [a; GENS], [b; GENS])
    }

    /// A_*//A^{(1)}_*, the exterior algebra on the ζᵢ.
    pub fn exterior() -> Self {
        Self::power_quotient(0, 1)
    }

    /// Dual of A(n): F2[ζᵢ]/(ζᵢ^{2^{n+2−i}}).
    pub fn a_dual(n: u8) -> Self {
        let mut hi = [0u8; GENS];
        for i in 1..=(n as usize + 1).min(GENS) {
            hi[i - 1] = n + 2 - i as u8;
        }
        Self::with(format!("A[{}]*", n), [0; GENS], hi)
    }

    /// Dual of E(n): exterior on ζ₁,…,ζ_{n+1}.
    pub fn e_dual(n: u8) -> Self {
        let mut hi = [0u8; GENS];
        for h in hi.iter_mut().take((n as usize + 1).min(GENS)) {
            *h = 1;
        }
        Self::with(format!("E[{}]*", n), [0; GENS], hi)
    }

    /// P(n)^{(s)}_* = F2[ζ₁^{2^s},…,ζₙ^{2^s}].
    pub fn p(n: u8, s: u8) -> Self {
        let mut lo = [0u8; GENS];
        let mut hi = [0u8; GENS];
        for i in 0..(n as usize).min(GENS) {
            lo[i] = s;
            hi[i] = INF_HEIGHT;
        }
        let name = if s == 0 { format!("P({})*", n) } else { format!("P({},{})*", n, s) };
        let mut spec = Self::with(name, lo, hi);
        for i in (n as usize).min(GENS)..GENS {
            spec.absent[i] = true;
        }
        spec
    }

    /// Exponents of ζᵢ divisible by 2^{lo[i]} and below 2^{hi[i]}; generators
    /// past the lists are absent.
    pub fn bounded(name: &str, lo: &[u8], hi: &[u8]) -> Self {
        let mut l = [0u8; GENS];
        let mut h = [0u8; GENS];
        let mut absent = [true; GENS];
        for i in 0..hi.len().min(GENS) {
            l[i] = lo.get(i).copied().unwrap_or(0);
            h[i] = hi[i];
            absent[i] = false;
        }
        let mut spec = Self::with(name.into(), l, h);
        spec.absent = absent;
        spec
    }

    /// Explicit exponent bounds hi(i) (ζᵢ^{2^{hi(i)}} = 0); missing entries unbounded.
    pub fn truncation(bounds: &[u8]) -> Self {
        let mut hi = [INF_HEIGHT; GENS];
        for (i, &b) in bounds.iter().enumerate().take(GENS) {
            hi[i] = b;
        }
        let parts: Vec<String> = bounds.iter().map(|b| format!("{}", b)).collect();
        Self::with(format!("T[{}]*", parts.join(",")), [0; GENS], hi)
    }

    /// A_* / (ζ_{i}^{2^{s}}, …) for the listed (i, s).
    pub fn quotient_by(gens: &[(usize, u8)]) -> Self {
        let mut hi = [INF_HEIGHT; GENS];
        let mut parts = Vec::new();
        for &(i, s) in gens {
            hi[i - 1] = hi[i - 1].min(s);
            parts.push(if s == 0 { format!("z{}", i) } else { format!("z{}^{}", i, 1u32 << s) });
        }
        Self::with(format!("A*/({})", parts.join(",")), [0; GENS], hi)
    }

    /// The coalgebra quotient `self // sub`, for a subalgebra given as a spec
    /// of the form A^{(b)}_* or P(n)^{(s)}_*.
    pub fn quotient(&self, sub: &DualSpec) -> Result<DualSpec, DualError> {
        let mut hi = self.hi;
        for i in 0..GENS {
            let sub_is_polynomial_here = sub.hi[i] == INF_HEIGHT;
            let sub_is_zero_here = sub.hi[i] == 0;
            if sub_is_polynomial_here {
                if sub.lo[i] < self.lo[i] {
                    return Err(DualError::BadQuotient(format!("{}//{}", self.name, sub.name)));
                }
                hi[i] = hi[i].min(sub.lo[i]);
            } else if !sub_is_zero_here {
                return Err(DualError::BadQuotient(format!("{}//{}", self.name, sub.name)));
            }
        }
        let mut q = Self::with(format!("{}//{}", self.name, sub.name), self.lo, hi);
        q.absent = self.absent;
        Ok(q)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lo(&self, i: usize) -> u8 {
        self.lo[i - 1]
    }

    pub fn hi(&self, i: usize) -> u8 {
        self.hi[i - 1]
    }

    pub fn is_full(&self) -> bool {
        self.lo == [0; GENS] && self.hi == [INF_HEIGHT; GENS]
    }

    pub fn is_finite(&self) -> bool {
        self.hi.iter().all(|&h| h != INF_HEIGHT)
    }

    /// Whether every exponent is below its upper bound (ideal membership test).
    pub fn within_bounds(&self, m: &DualMonomial) -> bool {
        m.0.iter().zip(self.hi.iter()).all(|(&e, &h)| h >= 16 || (e as u32) < (1u32 << h))
    }

    pub fn admits(&self, m: &DualMonomial) -> bool {
        self.within_bounds(m) && m.0.iter().zip(self.lo.iter()).all(|(&e, &l)| e % (1u16 << l) == 0)
    }

    /// Top degree of a finite spec.
    pub fn top_degree(&self) -> Option<u32> {
        if !self.is_finite() {
            return None;
        }
        let mut t = 0;
        for i in 0..GENS {
            let (l, h) = (self.lo[i] as u32, self.hi[i] as u32);
            if h > l {
                let max_e = (1u32 << h) - (1u32 << l);
                t += max_e * xi_degree(i + 1);
            }
        }
        Some(t)
    }

    /// Admissible monomials of degree `d` in basis order.
    pub fn basis_in_degree(&self, d: u32) -> Vec<DualMonomial> {
        sub_basis_in_degree(self, d, None)
    }

    /// Σ dims through degree d.
    pub fn dims(&self, d: u32) -> Vec<usize> {
        (0..=d).map(|k| self.basis_in_degree(k).len()).collect()
    }

    /// Checks that ψ of every admissible monomial of degree ≤ d lands in
    /// admissible ⊗ admissible after reduction, and that the ideal generated
    /// by the killed powers is a coideal through degree d.
    pub fn check_hopf(&self, d: u32) -> bool {
        for k in 1..=d {
            for m in self.basis_in_degree(k) {
                for (a, b) in full_coproduct_monomial(&m).terms() {
                    let a_in = self.within_bounds(a) && self.admits_lo(a);
                    let b_in = self.within_bounds(b) && self.admits_lo(b);
                    if self.within_bounds(a) && self.within_bounds(b) && !(a_in && b_in) {
                        return false;
                    }
                }
            }
        }
        // generators of the ideal: ζᵢ^{2^{hᵢ}} whose image under ψ must lie in I⊗A + A⊗I
        for i in 1..=GENS {
            let h = self.hi[i - 1];
            if h == INF_HEIGHT || h >= 16 || self.absent[i - 1] {
                continue;
            }
            let lo = self.lo[i - 1];
            if h < lo {
                continue;
            }
            let g = DualMonomial::zeta_pow(i, 1u16 << h);
            if g.degree() > d {
                continue;
            }
            for (a, b) in full_coproduct_monomial(&g).terms() {
                if self.within_bounds(a) && self.within_bounds(b) {
                    return false;
                }
            }
        }
        true
    }

    fn admits_lo(&self, m: &DualMonomial) -> bool {
        m.0.iter().zip(self.lo.iter()).all(|(&e, &l)| e % (1u16 << l) == 0)
    }

    /// Parses `A*`, `A(s)*`, `A[n]*`, `E[n]*`, `P(n)*`, `P(n,s)*`,
    /// `X//Y`, and `A*/(z1,z2^4,...)`.
    pub fn parse(s: &str) -> Result<DualSpec, DualError> {
        let mut c = Cursor::new(s);
        let base = parse_spec_atom(&mut c)?;
        let spec = if c.eat_str("//") {
            let sub = parse_spec_atom(&mut c)?;
            base.quotient(&sub)?
        } else if c.eat_str("/(") {
            let mut gens = Vec::new();
            loop {
                if !c.eat(b'z') {
                    return Err(c.error("expected z<i>".into()).into());
                }
                let i = c.number()? as usize;
                let mut s = 0u8;
                if c.eat(b'^') {
                    let p = c.number()?;
                    if !p.is_power_of_two() {
                        return Err(c.error("exponent must be a power of two".into()).into());
                    }
                    s = p.trailing_zeros() as u8;
                }
                if i == 0 || i > GENS {
                    return Err(c.error("generator index out of range".into()).into());
                }
                gens.push((i, s));
                if !c.eat(b',') {
                    break;
                }
            }
            c.expect(b')')?;
            if !base.is_full() {
                return Err(DualError::BadQuotient(s.into()));
            }
            DualSpec::quotient_by(&gens)
        } else {
            base
        };
        if !c.at_end() {
            return Err(c.error("unexpected trailing input".into()).into());
        }
        Ok(spec)
    }
}

fn parse_spec_atom(c: &mut Cursor) -> Result<DualSpec, DualError> {
    if c.eat_str("A*") {
        return Ok(DualSpec::full());
    }
    if c.eat_str("A(") {
        let s = c.number()?;
        c.expect(b')')?;
        c.expect(b'*')?;
        return Ok(DualSpec::sub_powers(s as u8));
    }
    if c.eat_str("A[") {
        let n = c.number()?;
        c.expect(b']')?;
        c.expect(b'*')?;
        return Ok(DualSpec::a_dual(n as u8));
    }
    if c.eat_str("E[") {
        let n = c.number()?;
        c.expect(b']')?;
        c.expect(b'*')?;
        return Ok(DualSpec::e_dual(n as u8));
    }
    if c.eat_str("P(") {
        let n = c.number()?;
        let s = if c.eat(b',') { c.number()? } else { 0 };
        c.expect(b')')?;
        c.expect(b'*')?;
        return Ok(DualSpec::p(n as u8, s as u8));
    }
    Err(c.error("expected a coalgebra name".into()).into())
}

impl fmt::Display for DualSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Admissible monomials of degree `d`, optionally with Σ eᵢ ≤ `max_poly_degree`.
pub fn sub_basis_in_degree(q: &DualSpec, d: u32, max_poly_degree: Option<u32>) -> Vec<DualMonomial> {
    let mut top = 1;
    while top < GENS && xi_degree(top + 1) <= d {
        top += 1;
    }
    let mut out = Vec::new();
    let mut e = [0u16; GENS];
    dual_basis_rec(q, top, d, max_poly_degree.unwrap_or(u32::MAX), &mut e, &mut out);
    out.sort_by(dual_basis_cmp);
    out
}

fn dual_basis_rec(q: &DualSpec, i: usize, remaining: u32, poly_left: u32, e: &mut [u16; GENS], out: &mut Vec<DualMonomial>) {
    if i == 0 {
        if remaining == 0 {
            out.push(DualMonomial(*e));
        }
        return;
    }
    let w = xi_degree(i);
    let step = 1u32 << q.lo[i - 1];
    let mut cap = remaining / w;
    let h = q.hi[i - 1];
    if h < 16 {
        cap = cap.min((1u32 << h).saturating_sub(1));
    }
    cap = cap.min(poly_left);
    let mut v = 0;
    while v <= cap {
        e[i - 1] = v as u16;
        dual_basis_rec(q, i - 1, remaining - v * w, poly_left - v, e, out);
        v += step;
    }
    e[i - 1] = 0;
}

/// ψ(ζₙ^{2^k}) = Σᵢ ζᵢ^{2^k} ⊗ ζ_{n−i}^{2^{i+k}}.
fn psi_zeta_power(n: usize, k: u32) -> Tensor {
    let mut t = Tensor::zero();
    for i in 0..=n {
        t.toggle(DualMonomial::zeta(i).frobenius(k), DualMonomial::zeta(n - i).frobenius(i as u32 + k));
    }
    t
}

fn coproduct_filtered<F: Fn(&DualMonomial, &DualMonomial) -> bool + Copy>(m: &DualMonomial, keep: F) -> Tensor {
    let mut acc = Tensor::one();
    for n in 1..=GENS {
        let e = m.e(n);
        for k in 0..16 {
            if (e >> k) & 1 == 1 {
                acc = acc.mul_filtered(&psi_zeta_power(n, k), keep);
            }
        }
    }
    acc
}

/// ψ in A_* with no reduction.
pub fn full_coproduct_monomial(m: &DualMonomial) -> Tensor {
    coproduct_filtered(m, |_, _| true)
}

pub fn full_coproduct(p: &DualPolynomial) -> Tensor {
    let mut t = Tensor::zero();
    for m in p.iter() {
        t.add_assign(&full_coproduct_monomial(m));
    }
    t
}

/// ψ of an admissible monomial of the spec, reduced into spec ⊗ spec.
pub fn dual_coproduct(m: &DualMonomial, q: &DualSpec) -> Result<Tensor, DualError> {
    if !q.admits(m) {
        return Err(DualError::Inadmissible { monomial: format!("{}", m), spec: q.name.clone() });
    }
    let t = coproduct_filtered(m, |a, b| q.within_bounds(a) && q.within_bounds(b));
    debug_assert!(t.terms().all(|(a, b)| q.admits(a) && q.admits(b)));
    Ok(t)
}

/// Memo for χ(ζₙ) and their Frobenius powers.
#[derive(Default, Clone)]
pub struct ChiCache {
    chi_zeta: BTreeMap<(usize, u32), DualPolynomial>,
}

impl ChiCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// χ(ζₙ)^{2^k}.
    pub fn chi_zeta_power(&mut self, n: usize, k: u32) -> DualPolynomial {
        if n == 0 {
            return DualPolynomial::one();
        }
        if let Some(p) = self.chi_zeta.get(&(n, k)) {
            return p.clone();
        }
        let p = if k > 0 {
            self.chi_zeta_power(n, 0).frobenius(k)
        } else {
            // Σ_{i≤n} χ(ζᵢ) ζ_{n−i}^{2^i} = 0 for n ≥ 1.
            let mut acc = DualPolynomial::zero(xi_degree(n));
            for i in 0..n {
                let c = self.chi_zeta_power(i, 0);
                let z = DualPolynomial::from(DualMonomial::zeta(n - i).frobenius(i as u32));
                acc.add_assign(&c.mul(&z));
            }
            acc
        };
        self.chi_zeta.insert((n, k), p.clone());
        p
    }

    pub fn chi_monomial(&mut self, m: &DualMonomial) -> DualPolynomial {
        let mut acc = DualPolynomial::one();
        for n in 1..=GENS {
            let e = m.e(n);
            for k in 0..16 {
                if (e >> k) & 1 == 1 {
                    acc = acc.mul(&self.chi_zeta_power(n, k));
                }
            }
        }
        acc
    }

    pub fn chi(&mut self, p: &DualPolynomial) -> DualPolynomial {
        let mut acc = DualPolynomial::zero(p.degree());
        for m in p.iter() {
            acc.add_assign(&self.chi_monomial(m));
        }
        acc
    }

    /// ξₙ = χ(ζₙ).
    pub fn xi(&mut self, n: usize) -> DualPolynomial {
        self.chi_zeta_power(n, 0)
    }

    /// ξ^E = Π ξᵢ^{eᵢ} in the ζ basis.
    pub fn xi_monomial(&mut self, e: &DualMonomial) -> DualPolynomial {
        self.chi_monomial(e)
    }
}

pub fn dual_antipode(m: &DualMonomial) -> DualPolynomial {
    ChiCache::new().chi_monomial(m)
}

/// ⟨Sq(R), ζ^E⟩: the coefficient of ξ^R when ζ^E is written in ξ-monomials,
/// which is the coefficient of ζ^R in χ(ζ^E).
pub fn milnor_pairing(cache: &mut ChiCache, r: &MilnorMonomial, e: &DualMonomial) -> bool {
    let target = DualMonomial::from_milnor(r);
    target.degree() == e.degree() && cache.chi_monomial(e).contains(&target)
}

/// μ(ζₙ) = Σ_{i+j+k=n} ζᵢ ξ_k^{2^{i+j}} ⊗ ζⱼ^{2^i}.
fn adjoint_zeta(cache: &mut ChiCache, n: usize) -> Tensor {
    let mut t = Tensor::zero();
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            let left = DualPolynomial::zeta(i).mul(&cache.chi_zeta_power(k, (i + j) as u32));
            let right = DualMonomial::zeta(j).frobenius(i as u32);
            for a in left.iter() {
                t.toggle(*a, right);
            }
        }
    }
    t
}

/// The adjoint coaction from the closed formula, extended multiplicatively.
pub fn adjoint_coaction(m: &DualMonomial) -> Tensor {
    let mut cache = ChiCache::new();
    adjoint_coaction_cached(&mut cache, m)
}

pub fn adjoint_coaction_cached(cache: &mut ChiCache, m: &DualMonomial) -> Tensor {
    let mut acc = Tensor::one();
    for n in 1..=GENS {
        let e = m.e(n);
        if e == 0 {
            continue;
        }
        let base = adjoint_zeta(cache, n);
        for k in 0..16 {
            if (e >> k) & 1 == 1 {
                acc = acc.mul(&base.frobenius(k));
            }
        }
    }
    acc
}

/// The adjoint coaction as the composite x ↦ Σ x₍₁₎χ(x₍₃₎) ⊗ x₍₂₎, built
/// from the iterated coproduct, a switch of factors, χ and the product.
pub fn adjoint_coaction_diagram(m: &DualMonomial) -> Tensor {
    let mut cache = ChiCache::new();
    let mut out = Tensor::zero();
    for (x1, rest) in full_coproduct_monomial(m).terms() {
        for (x2, x3) in full_coproduct_monomial(rest).terms() {
            let left = DualPolynomial::from(*x1).mul(&cache.chi_monomial(x3));
            for a in left.iter() {
                out.toggle(*a, *x2);
            }
        }
    }
    out
}

/// Target coalgebras for the qₙ coaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QTarget {
    /// A^{(1)}_*
    A1,
    /// A^{(1)}_* // A^{(3)}_*
    A1ModA3,
    /// A^{(1)}_* // A^{(2)}_*
    A1ModA2,
}

impl QTarget {
    pub fn spec(&self) -> DualSpec {
        match self {
            QTarget::A1 => DualSpec::sub_powers(1),
            QTarget::A1ModA3 => DualSpec::power_quotient(1, 3),
            QTarget::A1ModA2 => DualSpec::power_quotient(1, 2),
        }
    }

    pub fn from_spec(spec: &DualSpec) -> Result<QTarget, DualError> {
        [QTarget::A1, QTarget::A1ModA3, QTarget::A1ModA2]
            .into_iter()
            .find(|t| t.spec() == *spec)
            .ok_or_else(|| DualError::UnsupportedTarget(spec.name().into()))
    }
}

/// The Cotor generator qₙ = [ζ̄_{n+1}], bidegree (1, 2^{n+1}−1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QClass(pub u32);

impl QClass {
    pub fn internal_degree(&self) -> u32 {
        (1u32 << (self.0 + 1)) - 1
    }
}

/// μqₙ = Σ_{j≤n} ξ_{n−j}^{2^{j+1}} ⊗ qⱼ, left factors reduced into the target.
pub fn coaction_on_q(n: u32, target: QTarget) -> Vec<(DualPolynomial, QClass)> {
    let mut cache = ChiCache::new();
    coaction_on_q_cached(&mut cache, n, target)
}

pub fn coaction_on_q_cached(cache: &mut ChiCache, n: u32, target: QTarget) -> Vec<(DualPolynomial, QClass)> {
    let spec = target.spec();
    let mut out = Vec::new();
    for j in (0..=n).rev() {
        let left = cache.chi_zeta_power((n - j) as usize, j + 1).reduce(&spec);
        if !left.is_zero() {
            out.push((left, QClass(j)));
        }
    }
    out
}

/// ζᵢ^{eᵢ} ↦ ζᵢ^{2^e·eᵢ}.
pub fn double(p: &DualPolynomial, e: u32) -> DualPolynomial {
    p.frobenius(e)
}

fn parse_dual_factor(c: &mut Cursor, cache: &mut ChiCache) -> Result<DualPolynomial, ParseError> {
    if c.eat(b'(') {
        let p = parse_dual_sum(c, cache)?;
        c.expect(b')')?;
        return parse_power(c, p);
    }
    let base = if c.eat_str("xi") {
        let i = c.number()? as usize;
        if i > GENS {
            return Err(c.error("generator index out of range".into()));
        }
        cache.xi(i)
    } else if c.eat(b'z') {
        let i = c.number()? as usize;
        if i > GENS {
            return Err(c.error("generator index out of range".into()));
        }
        DualPolynomial::zeta(i)
    } else {
        let start = c.pos;
        let v = c.number()?;
        match v {
            0 => DualPolynomial::zero(0),
            1 => DualPolynomial::one(),
            _ => return Err(ParseError { position: start, message: "only the constants 0 and 1 exist".into() }),
        }
    };
    parse_power(c, base)
}

fn parse_power(c: &mut Cursor, base: DualPolynomial) -> Result<DualPolynomial, ParseError> {
    if c.eat(b'^') {
        let e = c.number()?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

fn parse_dual_product(c: &mut Cursor, cache: &mut ChiCache) -> Result<DualPolynomial, ParseError> {
    let mut acc = parse_dual_factor(c, cache)?;
    while c.eat(b'*') {
        let f = parse_dual_factor(c, cache)?;
        acc = acc.mul(&f);
    }
    Ok(acc)
}

fn parse_dual_sum(c: &mut Cursor, cache: &mut ChiCache) -> Result<DualPolynomial, ParseError> {
    let start = c.pos;
    let mut acc = parse_dual_product(c, cache)?;
    while c.eat(b'+') {
        let t = parse_dual_product(c, cache)?;
        if !acc.is_zero() && !t.is_zero() && acc.degree() != t.degree() {
            return Err(ParseError { position: start, message: "sum of elements of different degrees".into() });
        }
        acc.add_assign(&t);
    }
    Ok(acc)
}

/// Parses expressions like `z1^3*z2 + xi2^2`, optionally followed by
/// `@<coalgebra>`; the result is reduced into that coalgebra.
pub fn parse_dual(s: &str) -> Result<(DualPolynomial, DualSpec), DualError> {
    let (expr, spec) = match s.find('@') {
        Some(at) => (&s[..at], DualSpec::parse(&s[at + 1..]).map_err(|e| shift_error(e, at + 1))?),
        None => (s, DualSpec::full()),
    };
    let mut c = Cursor::new(expr);
    let mut cache = ChiCache::new();
    let p = parse_dual_sum(&mut c, &mut cache)?;
    if !c.at_end() {
        return Err(c.error("unexpected trailing input".into()).into());
    }
    let reduced = p.reduce(&spec);
    if let Some(m) = reduced.iter().find(|m| !spec.admits(m)) {
        return Err(DualError::Inadmissible { monomial: format!("{}", m), spec: spec.name().into() });
    }
    Ok((reduced, spec))
}

fn shift_error(e: DualError, by: usize) -> DualError {
    match e {
        DualError::Parse(p) => DualError::Parse(ParseError { position: p.position + by, message: p.message }),
        other => other,
    }
}

/// Outcome of one exhaustive structure check through a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub degree: u32,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn milnor_basis_upto(d: u32) -> Vec<Vec<MilnorMonomial>> {
    (0..=d).map(|k| basis_in_degree(&Profile::full(), k)).collect()
}

fn push_failure(f: &mut Vec<String>, s: String) {
    if f.len() < 16 {
        f.push(s);
    }
}

/// Associativity, coassociativity, both antipode identities and
/// multiplicativity of ψ for the Steenrod algebra, on basis elements of
/// total degree ≤ `d`.
pub fn steenrod_axioms(d: u32) -> Vec<AxiomCheck> {
    let basis = milnor_basis_upto(d);
    let el = |m: &MilnorMonomial| MilnorElement::from(m.clone());
    let mut products: BTreeMap<(MilnorMonomial, MilnorMonomial), MilnorElement> = BTreeMap::new();
    let mut prod = |a: &MilnorMonomial, b: &MilnorMonomial| -> MilnorElement {
        products.entry((a.clone(), b.clone())).or_insert_with(|| milnor_product(&el(a), &el(b))).clone()
    };

    let mut assoc = AxiomCheck { name: "associativity", degree: d, cases: 0, failures: Vec::new() };
    for d1 in 1..=d {
        for d2 in 1..=d - d1 {
            for d3 in 1..=d - d1 - d2 {
                for a in &basis[d1 as usize] {
                    for b in &basis[d2 as usize] {
                        let ab = prod(a, b);
                        for c in &basis[d3 as usize] {
                            assoc.cases += 1;
                            let mut left = MilnorElement::zero(d1 + d2 + d3);
                            for t in ab.terms() {
                                left.add_assign(&prod(t, c));
                            }
                            let bc = prod(b, c);
                            let mut right = MilnorElement::zero(d1 + d2 + d3);
                            for t in bc.terms() {
                                right.add_assign(&prod(a, t));
                            }
                            if left != right {
                                push_failure(&mut assoc.failures, format!("({}·{})·{}", a, b, c));
                            }
                        }
                    }
                }
            }
        }
    }

    let mut coassoc = AxiomCheck { name: "coassociativity", degree: d, cases: 0, failures: Vec::new() };
    let mut conv = AxiomCheck { name: "antipode convolution", degree: d, cases: 0, failures: Vec::new() };
    for k in 1..=d {
        for m in &basis[k as usize] {
            coassoc.cases += 1;
            let mut left = BTreeSet::new();
            for (a, b) in coproduct_monomial(m) {
                for (a1, a2) in coproduct_monomial(&a) {
                    toggle_set(&mut left, (a1, a2, b.clone()));
                }
            }
            let mut right = BTreeSet::new();
            for (a, b) in coproduct_monomial(m) {
                for (b1, b2) in coproduct_monomial(&b) {
                    toggle_set(&mut right, (a.clone(), b1, b2));
                }
            }
            if left != right {
                push_failure(&mut coassoc.failures, format!("{}", m));
            }
            conv.cases += 1;
            let mut l = MilnorElement::zero(k);
            let mut r = MilnorElement::zero(k);
            for (a, b) in coproduct_monomial(m) {
                l.add_assign(&milnor_product(&antipode(&el(&a)), &el(&b)));
                r.add_assign(&milnor_product(&el(&a), &antipode(&el(&b))));
            }
            if !l.is_zero() || !r.is_zero() {
                push_failure(&mut conv.failures, format!("{}", m));
            }
        }
    }

    let mut mult = AxiomCheck { name: "ψ multiplicative", degree: d, cases: 0, failures: Vec::new() };
    for d1 in 1..=d {
        for d2 in 1..=d - d1 {
            for a in &basis[d1 as usize] {
                for b in &basis[d2 as usize] {
                    mult.cases += 1;
                    let left: BTreeSet<_> = coproduct(&prod(a, b)).into_iter().collect();
                    let mut right = BTreeSet::new();
                    for (a1, a2) in coproduct_monomial(a) {
                        for (b1, b2) in coproduct_monomial(b) {
                            for x in prod(&a1, &b1).terms() {
                                for y in prod(&a2, &b2).terms() {
                                    toggle_set(&mut right, (x.clone(), y.clone()));
                                }
                            }
                        }
                    }
                    if left != right {
                        push_failure(&mut mult.failures, format!("ψ({}·{})", a, b));
                    }
                }
            }
        }
    }
    vec![assoc, coassoc, conv, mult]
}

fn toggle_set<T: Ord>(s: &mut BTreeSet<T>, t: T) {
    if !s.remove(&t) {
        s.insert(t);
    }
}

/// The same checks for the dual: ψ coassociative and multiplicative, the
/// antipode identities, through degree `d`. Products are polynomial, so
/// associativity is structural.
pub fn dual_axioms(d: u32) -> Vec<AxiomCheck> {
    let full = DualSpec::full();
    let mut cache = ChiCache::new();
    let mut coassoc = AxiomCheck { name: "dual coassociativity", degree: d, cases: 0, failures: Vec::new() };
    let mut conv = AxiomCheck { name: "dual antipode convolution", degree: d, cases: 0, failures: Vec::new() };
    let mut mult = AxiomCheck { name: "dual ψ multiplicative", degree: d, cases: 0, failures: Vec::new() };
    let basis: Vec<Vec<DualMonomial>> = (0..=d).map(|k| full.basis_in_degree(k)).collect();
    for k in 1..=d {
        for m in &basis[k as usize] {
            coassoc.cases += 1;
            let psi = full_coproduct_monomial(m);
            let mut left = BTreeSet::new();
            let mut right = BTreeSet::new();
            for (a, b) in psi.terms() {
                for (a1, a2) in full_coproduct_monomial(a).terms() {
                    toggle_set(&mut left, (*a1, *a2, *b));
                }
                for (b1, b2) in full_coproduct_monomial(b).terms() {
                    toggle_set(&mut right, (*a, *b1, *b2));
                }
            }
            if left != right {
                push_failure(&mut coassoc.failures, format!("{}", m));
            }
            conv.cases += 1;
            let mut l = DualPolynomial::zero(k);
            let mut r = DualPolynomial::zero(k);
            for (a, b) in psi.terms() {
                l.add_assign(&cache.chi_monomial(a).mul(&DualPolynomial::from(*b)));
                r.add_assign(&DualPolynomial::from(*a).mul(&cache.chi_monomial(b)));
            }
            if !l.is_zero() || !r.is_zero() {
                push_failure(&mut conv.failures, format!("{}", m));
            }
        }
    }
    for d1 in 1..=d {
        for d2 in d1..=d - d1 {
            for a in &basis[d1 as usize] {
                for b in &basis[d2 as usize] {
                    mult.cases += 1;
                    let left = full_coproduct_monomial(&a.mul(b));
                    let right = full_coproduct_monomial(a).mul(&full_coproduct_monomial(b));
                    if left != right {
                        push_failure(&mut mult.failures, format!("ψ({}·{})", a, b));
                    }
                }
            }
        }
    }
    vec![coassoc, conv, mult]
}

/// ⟨Sq(R)·Sq(S), ζ^E⟩ = Σ ⟨Sq(R), a⟩⟨Sq(S), b⟩ over ψζ^E = Σ a⊗b, for
/// every structure constant through degree `d`: the Milnor product and the
/// coproduct on ζ-monomials are transposes under the pairing.
pub fn duality_check(d: u32) -> AxiomCheck {
    let full = DualSpec::full();
    let basis = milnor_basis_upto(d);
    let mut cache = ChiCache::new();
    let mut chi: BTreeMap<DualMonomial, DualPolynomial> = BTreeMap::new();
    for k in 0..=d {
        for m in full.basis_in_degree(k) {
            chi.insert(m, cache.chi_monomial(&m));
        }
    }
    let pair = |r: &MilnorMonomial, e: &DualMonomial| -> bool {
        let t = DualMonomial::from_milnor(r);
        t.degree() == e.degree() && chi[e].contains(&t)
    };
    let mut out = AxiomCheck { name: "product/coproduct duality", degree: d, cases: 0, failures: Vec::new() };
    for k in 1..=d {
        let dual_basis = full.basis_in_degree(k);
        let psis: Vec<Tensor> = dual_basis.iter().map(full_coproduct_monomial).collect();
        for d1 in 0..=k {
            for r in &basis[d1 as usize] {
                for s in &basis[(k - d1) as usize] {
                    let p = milnor_product(&MilnorElement::from(r.clone()), &MilnorElement::from(s.clone()));
                    for (e, psi) in dual_basis.iter().zip(&psis) {
                        out.cases += 1;
                        let left = p.terms().into_iter().filter(|t| pair(t, e)).count() % 2 == 1;
                        let right = psi
                            .terms()
                            .filter(|(a, b)| a.degree() == d1 && pair(r, a) && pair(s, b))
                            .count()
                            % 2
                            == 1;
                        if left != right {
                            push_failure(&mut out.failures, format!("⟨{}·{}, {}⟩", r, s, e));
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z(e: &[u16]) -> DualMonomial {
        DualMonomial::new(e)
    }

    #[test]
    fn products() {
        let x = DualPolynomial::from(z(&[1, 1]));
        assert_eq!(DualPolynomial::one().mul(&x), x);
        assert_eq!(DualPolynomial::zeta(1).mul(&DualPolynomial::zeta(1)), DualPolynomial::from(z(&[2])));
        assert_eq!(x.mul(&DualPolynomial::zeta(1)), DualPolynomial::from(z(&[2, 1])));
    }

    #[test]
    fn coproduct_examples() {
        let full = DualSpec::full();
        assert_eq!(dual_coproduct(&DualMonomial::one(), &full).unwrap(), Tensor::one());
        let c1 = dual_coproduct(&z(&[1]), &full).unwrap();
        assert_eq!(c1, Tensor::from_pairs([(z(&[1]), z(&[])), (z(&[]), z(&[1]))]));
        let c2 = dual_coproduct(&z(&[0, 1]), &full).unwrap();
        assert_eq!(c2, Tensor::from_pairs([(z(&[0, 1]), z(&[])), (z(&[1]), z(&[2])), (z(&[]), z(&[0, 1]))]));
        assert!(dual_coproduct(&z(&[1]), &DualSpec::sub_powers(1)).is_err());
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(dual_antipode(&DualMonomial::one()), DualPolynomial::one());
        assert_eq!(dual_antipode(&z(&[1])), DualPolynomial::zeta(1));
        let expected = DualPolynomial::from(z(&[0, 1])).add(&DualPolynomial::from(z(&[3])));
        assert_eq!(dual_antipode(&z(&[0, 1])), expected);
    }

    #[test]
    fn adjoint_small() {
        assert_eq!(adjoint_coaction(&DualMonomial::one()), Tensor::one());
        assert_eq!(adjoint_coaction(&z(&[1])), Tensor::from_pairs([(z(&[]), z(&[1]))]));
        for n in 1..=3 {
            let m = DualMonomial::zeta(n);
            assert_eq!(adjoint_coaction(&m), adjoint_coaction_diagram(&m), "n = {}", n);
        }
    }

    #[test]
    fn q_coaction_examples() {
        let q0 = coaction_on_q(0, QTarget::A1);
        assert_eq!(q0, vec![(DualPolynomial::one(), QClass(0))]);
        let q1 = coaction_on_q(1, QTarget::A1ModA3);
        assert_eq!(q1, vec![(DualPolynomial::one(), QClass(1)), (DualPolynomial::from(z(&[2])), QClass(0))]);
        let q2 = coaction_on_q(2, QTarget::A1ModA3);
        let mut cache = ChiCache::new();
        let xi2sq = cache.xi(2).square().reduce(&DualSpec::power_quotient(1, 3));
        assert_eq!(
            q2,
            vec![
                (DualPolynomial::one(), QClass(2)),
                (DualPolynomial::from(z(&[4])), QClass(1)),
                (xi2sq, QClass(0)),
            ]
        );
    }

    #[test]
    fn bases_and_specs() {
        assert_eq!(DualSpec::full().basis_in_degree(2), vec![z(&[2])]);
        assert_eq!(DualSpec::p(1, 0).basis_in_degree(3), vec![z(&[3])]);
        let q = DualSpec::full().quotient(&DualSpec::p(1, 0)).unwrap();
        assert!(q.basis_in_degree(1).is_empty());
        assert_eq!(DualSpec::a_dual(1).dims(7), vec![1, 1, 1, 2, 1, 1, 1, 0]);
        assert_eq!(DualSpec::a_dual(2).top_degree(), Some(23));
        for spec in [
            DualSpec::full(),
            DualSpec::sub_powers(1),
            DualSpec::exterior(),
            DualSpec::power_quotient(1, 2),
            DualSpec::power_quotient(1, 3),
            DualSpec::a_dual(1),
            DualSpec::a_dual(2),
            DualSpec::e_dual(1),
            DualSpec::p(2, 1),
            DualSpec::full().quotient(&DualSpec::p(1, 0)).unwrap(),
        ] {
            assert!(spec.check_hopf(16), "{}", spec);
        }
        // (ζ₂) alone is not a Hopf ideal: ψζ₂ contains ζ₁⊗ζ₁².
        assert!(!DualSpec::quotient_by(&[(2, 0)]).check_hopf(8));
    }

    #[test]
    fn parse_specs_and_polys() {
        assert_eq!(DualSpec::parse("A*//A(1)*").unwrap(), DualSpec::exterior());
        assert_eq!(DualSpec::parse("A(1)*//A(2)*").unwrap(), DualSpec::power_quotient(1, 2));
        assert_eq!(DualSpec::parse("A[1]*").unwrap(), DualSpec::a_dual(1));
        assert_eq!(DualSpec::parse("A*/(z1)").unwrap().basis_in_degree(1).len(), 0);
        let (p, _) = parse_dual("z1^3*z2").unwrap();
        assert_eq!(p, DualPolynomial::from(z(&[3, 1])));
        assert_eq!(format!("{}", p), "z1^3*z2");
        let (x, _) = parse_dual("xi2").unwrap();
        assert_eq!(x, dual_antipode(&z(&[0, 1])));
        let (r, spec) = parse_dual("xi2^2@A(1)*//A(2)*").unwrap();
        assert_eq!(spec, DualSpec::power_quotient(1, 2));
        assert_eq!(r, DualPolynomial::from(z(&[0, 2])).add(&DualPolynomial::from(z(&[6]))).reduce(&spec));
        assert_eq!(parse_dual(&r.display_in(&spec)).unwrap(), (r, spec));
        assert!(parse_dual("z1@A(1)*").is_err());
    }

    #[test]
    fn axioms_low_degree() {
        assert!(steenrod_axioms(8).iter().all(|c| c.holds()));
        assert!(dual_axioms(10).iter().all(|c| c.holds()));
        assert!(duality_check(8).holds());
    }

    #[test]
    fn doubling() {
        assert_eq!(double(&DualPolynomial::zeta(1), 1), DualPolynomial::from(z(&[2])));
        assert_eq!(double(&DualPolynomial::one(), 3), DualPolynomial::one());
        assert_eq!(double(&DualPolynomial::from(z(&[1, 1])), 2), DualPolynomial::from(z(&[4, 4])));
    }
}
