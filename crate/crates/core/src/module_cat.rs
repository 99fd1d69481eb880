//! Graded modules over finite algebras: profile subalgebras A(n), E(n),
//! their normal quotients and doubles, and truncations A/A_{>D} standing in
//! for windows of the full Steenrod algebra.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comodule::{ComoduleWindow, Side};
use crate::dual_hopf::{milnor_pairing, ChiCache, DualMonomial, DualSpec, GENS, INF_HEIGHT};
use crate::f2linalg::{F2Matrix, F2Vector, Subspace};
use crate::milnor::{
    antipode, basis_in_degree, coproduct_monomial, milnor_product_monomials, pd_degree, verschiebung, MilnorElement,
    MilnorMonomial, Profile, INF,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// A finite profile subalgebra.
    Profile(Profile),
    /// A profile algebra modulo everything above the window.
    Truncated(Profile, u32),
    /// big // sub for a normal sub-Hopf-algebra.
    Quotient { big: Profile, sub: Profile },
    /// Degrees multiplied by 2^e.
    Doubled(Box<AlgebraKind>, u32),
    /// A table with products landing in degrees ≥ `from` replaced by zero.
    Degenerate(Box<AlgebraKind>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("profile {0} is infinite")]
    Infinite(String),
    #[error("{sub} is not contained in {big}")]
    NotSubalgebra { sub: String, big: String },
    #[error("{sub} is not normal in {big}: left and right ideals differ in degree {degree}")]
    NotNormal { sub: String, big: String, degree: u32 },
    #[error("algebra {0} has no Hopf structure")]
    NotHopf(String),
    #[error("element {0} is not in {1}")]
    NotInAlgebra(String, String),
}

/// Graded algebra with an explicit basis in each degree and structure constants.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    name: String,
    kind: AlgebraKind,
    top: u32,
    basis: Vec<Vec<MilnorMonomial>>,
    index: BTreeMap<MilnorMonomial, (u32, usize)>,
    products: BTreeMap<(u32, u32), Vec<Vec<F2Vector>>>,
    /// For quotients: images of the basis of the big algebra.
    projection: Option<Box<(FiniteAlgebra, Vec<Vec<F2Vector>>)>>,
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

fn product_table(
    basis: &[Vec<MilnorMonomial>],
    index: &BTreeMap<MilnorMonomial, (u32, usize)>,
    top: u32,
) -> BTreeMap<(u32, u32), Vec<Vec<F2Vector>>> {
    let mut products = BTreeMap::new();
    for d1 in 0..=top {
        for d2 in 0..=top - d1 {
            let target = (d1 + d2) as usize;
            let block = basis[d1 as usize]
                .iter()
                .map(|x| {
                    basis[d2 as usize]
                        .iter()
                        .map(|y| {
                            let mut v = F2Vector::zeros(basis[target].len());
                            for m in milnor_product_monomials(x, y) {
                                v.flip(index[&m].1);
                            }
                            v
                        })
                        .collect()
                })
                .collect();
            products.insert((d1, d2), block);
        }
    }
    products
}

impl FiniteAlgebra {
    fn from_profile_bounded(kind: AlgebraKind, profile: &Profile, top: u32, name: String) -> Self {
        let basis: Vec<Vec<MilnorMonomial>> = (0..=top).map(|d| basis_in_degree(profile, d)).collect();
        let mut index = BTreeMap::new();
        for (d, b) in basis.iter().enumerate() {
            for (i, m) in b.iter().enumerate() {
                index.insert(m.clone(), (d as u32, i));
            }
        }
        let products = product_table(&basis, &index, top);
        FiniteAlgebra { name, kind, top, basis, index, products, projection: None }
    }

    /// A finite profile algebra such as A(n) or E(n).
    pub fn profile(p: &Profile) -> Result<Self, AlgebraError> {
        let top = p.top_degree().ok_or_else(|| AlgebraError::Infinite(p.name()))?;
        Ok(Self::from_profile_bounded(AlgebraKind::Profile(p.clone()), p, top, p.name()))
    }

    pub fn a(n: u32) -> Self {
        Self::profile(&Profile::a(n)).expect("finite")
    }

    pub fn e(n: u32) -> Self {
        Self::profile(&Profile::e(n)).expect("finite")
    }

    /// The quotient of a profile algebra by everything above degree `window`.
    pub fn truncated(p: &Profile, window: u32) -> Self {
        let top = p.top_degree().map_or(window, |t| t.min(window));
        let name = format!("{}/deg>{}", p.name(), window);
        Self::from_profile_bounded(AlgebraKind::Truncated(p.clone(), window), p, top, name)
    }

    /// big // sub = big / big·sub⁺, after checking that sub is normal.
    pub fn quotient(big: &Profile, sub: &Profile) -> Result<Self, AlgebraError> {
        let s = Self::profile(big)?;
        let r = Self::profile(sub)?;
        for m in r.index.keys() {
            if !s.index.contains_key(m) {
                return Err(AlgebraError::NotSubalgebra { sub: sub.name(), big: big.name() });
            }
        }
        let mut ideals = Vec::new();
        for d in 0..=s.top {
            let mut left = Subspace::zero(s.dim(d));
            let mut right = Subspace::zero(s.dim(d));
            for rd in 1..=d.min(r.top) {
                for rm in r.basis(rd) {
                    let (_, ri) = s.index[rm];
                    for si in 0..s.dim(d - rd) {
                        left.insert(s.product(d - rd, si, rd, ri).clone());
                        right.insert(s.product(rd, ri, d - rd, si).clone());
                    }
                }
            }
            if left != right {
                return Err(AlgebraError::NotNormal { sub: sub.name(), big: big.name(), degree: d });
            }
            ideals.push(left);
        }
        let keep: Vec<Vec<usize>> = ideals.iter().map(|i| i.complement_positions()).collect();
        let mut top = 0;
        let mut basis = Vec::new();
        let mut index = BTreeMap::new();
        for d in 0..=s.top {
            let b: Vec<MilnorMonomial> = keep[d as usize].iter().map(|&i| s.basis(d)[i].clone()).collect();
            if !b.is_empty() {
                top = d;
            }
            for (i, m) in b.iter().enumerate() {
                index.insert(m.clone(), (d, i));
            }
            basis.push(b);
        }
        basis.truncate(top as usize + 1);
        let project = |d: u32, v: &F2Vector| -> F2Vector {
            if d > top {
                return F2Vector::zeros(0);
            }
            let r = ideals[d as usize].reduce(v);
            F2Vector::from_bits(keep[d as usize].iter().map(|&i| r.get(i)))
        };
        let projection: Vec<Vec<F2Vector>> =
            (0..=s.top).map(|d| (0..s.dim(d)).map(|i| project(d, &F2Vector::unit(s.dim(d), i))).collect()).collect();
        let mut products = BTreeMap::new();
        for d1 in 0..=top {
            for d2 in 0..=top - d1 {
                let block = keep[d1 as usize]
                    .iter()
                    .map(|&i| keep[d2 as usize].iter().map(|&j| project(d1 + d2, s.product(d1, i, d2, j))).collect())
                    .collect();
                products.insert((d1, d2), block);
            }
        }
        let name = format!("{}//{}", big.name(), sub.name());
        let kind = AlgebraKind::Quotient { big: big.clone(), sub: sub.clone() };
        Ok(FiniteAlgebra { name, kind, top, basis, index, products, projection: Some(Box::new((s, projection))) })
    }

    /// The same algebra with all degrees multiplied by 2^e; basis Sq(R) ↦ Sq(2^e R).
    pub fn doubled(&self, e: u32) -> Self {
        let f = 1u32 << e;
        let top = self.top * f;
        let mut basis = vec![Vec::new(); top as usize + 1];
        let mut index = BTreeMap::new();
        for d in 0..=self.top {
            let b: Vec<MilnorMonomial> = self.basis(d).iter().map(|m| double_monomial(m, e)).collect();
            for (i, m) in b.iter().enumerate() {
                index.insert(m.clone(), (d * f, i));
            }
            basis[(d * f) as usize] = b;
        }
        let mut products = BTreeMap::new();
        for d1 in 0..=top {
            for d2 in 0..=top - d1 {
                if d1 % f == 0 && d2 % f == 0 {
                    products.insert((d1, d2), self.products[&(d1 / f, d2 / f)].clone());
                } else {
                    let block = vec![vec![F2Vector::zeros(0); basis[d2 as usize].len()]; basis[d1 as usize].len()];
                    products.insert((d1, d2), block);
                }
            }
        }
        let name = if e == 1 { format!("D({})", self.name) } else { format!("D^{}({})", e, self.name) };
        FiniteAlgebra {
            name,
            kind: AlgebraKind::Doubled(Box::new(self.kind.clone()), e),
            top,
            basis,
            index,
            products,
            projection: None,
        }
    }

    /// Copy with every product landing in degree ≥ `from` set to zero.
    pub fn degenerate_from(&self, from: u32) -> Self {
        let mut out = self.clone();
        for (&(d1, d2), block) in out.products.iter_mut() {
            if d1 > 0 && d2 > 0 && d1 + d2 >= from {
                for row in block.iter_mut() {
                    for v in row.iter_mut() {
                        *v = F2Vector::zeros(v.len());
                    }
                }
            }
        }
        out.kind = AlgebraKind::Degenerate(Box::new(self.kind.clone()), from);
        out.name = format!("{}[degenerate≥{}]", self.name, from);
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn dim(&self, d: u32) -> usize {
        self.basis.get(d as usize).map_or(0, |b| b.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top).map(|d| self.dim(d)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(|b| b.len()).sum()
    }

    pub fn basis(&self, d: u32) -> &[MilnorMonomial] {
        self.basis.get(d as usize).map_or(&[], |b| b.as_slice())
    }

    pub fn label(&self, d: u32, i: usize) -> String {
        format!("{}", self.basis(d)[i])
    }

    pub fn index_of(&self, m: &MilnorMonomial) -> Option<(u32, usize)> {
        self.index.get(m).copied()
    }

    /// Product of basis elements; `None` when the degree leaves the algebra.
    pub fn product(&self, d1: u32, i: usize, d2: u32, j: usize) -> &F2Vector {
        &self.products[&(d1, d2)][i][j]
    }

    pub fn product_checked(&self, d1: u32, i: usize, d2: u32, j: usize) -> Option<&F2Vector> {
        if d1 + d2 > self.top {
            None
        } else {
            Some(self.product(d1, i, d2, j))
        }
    }

    pub fn mul_vectors(&self, d1: u32, x: &F2Vector, d2: u32, y: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(self.dim(d1 + d2));
        if d1 + d2 > self.top {
            return out;
        }
        for i in x.iter_ones() {
            for j in y.iter_ones() {
                out.add_assign(self.product(d1, i, d2, j));
            }
        }
        out
    }

    /// Coordinates of a Milnor element; for quotients the element is taken
    /// in the big algebra and projected.
    pub fn element_vector(&self, a: &MilnorElement) -> Result<F2Vector, AlgebraError> {
        let d = a.degree();
        if let Some(p) = &self.projection {
            let (big, proj) = &**p;
            let v = big.element_vector(a)?;
            let mut out = F2Vector::zeros(self.dim(d));
            if d <= self.top {
                for i in v.iter_ones() {
                    out.add_assign(&proj[d as usize][i]);
                }
            }
            return Ok(out);
        }
        let mut v = F2Vector::zeros(self.dim(d));
        for m in a.terms() {
            match self.index.get(m) {
                Some(&(_, i)) => v.flip(i),
                None => {
                    if d > self.top && matches!(self.kind, AlgebraKind::Truncated(..)) {
                        continue;
                    }
                    return Err(AlgebraError::NotInAlgebra(format!("{}", a), self.name.clone()));
                }
            }
        }
        Ok(v)
    }

    pub fn to_element(&self, d: u32, v: &F2Vector) -> MilnorElement {
        let mut e = MilnorElement::zero(d);
        for i in v.iter_ones() {
            e.toggle(self.basis(d)[i].clone());
        }
        e
    }

    /// For quotients: the algebra map from the big algebra, on basis elements.
    pub fn projection_from_big(&self) -> Option<(&FiniteAlgebra, &Vec<Vec<F2Vector>>)> {
        self.projection.as_ref().map(|p| (&p.0, &p.1))
    }

    /// Basis elements spanning the indecomposables A⁺/(A⁺)², as (degree, index).
    pub fn generators(&self) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for d in 1..=self.top {
            let mut dec = Subspace::zero(self.dim(d));
            for d1 in 1..d {
                for i in 0..self.dim(d1) {
                    for j in 0..self.dim(d - d1) {
                        dec.insert(self.product(d1, i, d - d1, j).clone());
                    }
                }
            }
            for i in dec.complement_positions() {
                out.push((d, i));
            }
        }
        out
    }

    /// The profile, when the algebra is a sub-Hopf algebra of A with the
    /// Milnor coproduct.
    pub fn hopf_profile(&self) -> Option<&Profile> {
        match &self.kind {
            AlgebraKind::Profile(p) => Some(p),
            _ => None,
        }
    }
}

pub fn double_monomial(m: &MilnorMonomial, e: u32) -> MilnorMonomial {
    MilnorMonomial::new(m.exponents().iter().map(|&r| r << e).collect())
}

/// Checks that the Verschiebung Sq(R) ↦ Sq(R/2) induces an isomorphism
/// A(n+1)//E(n+1) → D(A(n)) of algebras.
pub fn verschiebung_matches_double(n: u32) -> Result<bool, AlgebraError> {
    let q = FiniteAlgebra::quotient(&Profile::a(n + 1), &Profile::e(n + 1))?;
    let dbl = FiniteAlgebra::a(n).doubled(1);
    if q.dims() != dbl.dims() {
        return Ok(false);
    }
    // map each quotient basis element through V and doubling
    let image = |d: u32, i: usize| -> Option<F2Vector> {
        let v = verschiebung(&MilnorElement::from(q.basis(d)[i].clone()));
        let doubled = {
            let mut e = MilnorElement::zero(d);
            for m in v.terms() {
                e.toggle(double_monomial(m, 1));
            }
            e
        };
        dbl.element_vector(&doubled).ok()
    };
    for d in 0..=q.top() {
        let rows: Option<Vec<F2Vector>> = (0..q.dim(d)).map(|i| image(d, i)).collect();
        let Some(rows) = rows else { return Ok(false) };
        if F2Matrix::from_rows(dbl.dim(d), rows).rank() != q.dim(d) {
            return Ok(false);
        }
    }
    for d1 in 0..=q.top() {
        for d2 in 0..=q.top() - d1 {
            for i in 0..q.dim(d1) {
                for j in 0..q.dim(d2) {
                    let lhs = {
                        let p = q.product(d1, i, d2, j);
                        let mut acc = F2Vector::zeros(dbl.dim(d1 + d2));
                        for k in p.iter_ones() {
                            acc.add_assign(&image(d1 + d2, k).unwrap());
                        }
                        acc
                    };
                    let rhs = dbl.mul_vectors(d1, &image(d1, i).unwrap(), d2, &image(d2, j).unwrap());
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("unit does not act as the identity on {0}")]
    Unit(String),
    #[error("({a}·{b})·{x} ≠ {a}·({b}·{x})")]
    Associativity { a: String, b: String, x: String },
    #[error("action of {a} on {x} leaves the degree it should land in")]
    Degree { a: String, x: String },
    #[error("module and algebra mismatch")]
    Mismatch,
    #[error("window too small: {0}")]
    Window(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Finite graded module; `action[d][i][x]` is (basis element i of degree d)·x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinModule {
    name: String,
    labels: Vec<String>,
    degrees: Vec<u32>,
    action: Vec<Vec<Vec<F2Vector>>>,
}

impl FinModule {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree(&self, x: usize) -> u32 {
        self.degrees[x]
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.degrees.iter().copied().max()
    }

    pub fn bottom_degree(&self) -> Option<u32> {
        self.degrees.iter().copied().min()
    }

    pub fn basis_in_degree(&self, d: u32) -> Vec<usize> {
        (0..self.dim()).filter(|&x| self.degrees[x] == d).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        let top = self.top_degree().unwrap_or(0) as usize;
        let mut v = vec![0; top + 1];
        for &d in &self.degrees {
            v[d as usize] += 1;
        }
        v
    }

    /// Image of basis element x under algebra basis element (d, i).
    pub fn act(&self, d: u32, i: usize, x: usize) -> &F2Vector {
        &self.action[d as usize][i][x]
    }

    pub fn act_vector(&self, d: u32, i: usize, v: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(self.dim());
        if (d as usize) < self.action.len() {
            for x in v.iter_ones() {
                out.add_assign(&self.action[d as usize][i][x]);
            }
        }
        out
    }

    pub fn act_element(&self, alg: &FiniteAlgebra, a: &MilnorElement, v: &F2Vector) -> Result<F2Vector, AlgebraError> {
        let av = alg.element_vector(a)?;
        let mut out = F2Vector::zeros(self.dim());
        for i in av.iter_ones() {
            out.add_assign(&self.act_vector(a.degree(), i, v));
        }
        Ok(out)
    }

    pub fn unit_vector(&self, x: usize) -> F2Vector {
        F2Vector::unit(self.dim(), x)
    }

    /// Unit, degree and associativity checks against the algebra table;
    /// associativity is checked for products a·g with g a generator.
    pub fn validate(&self, alg: &FiniteAlgebra) -> Result<(), ModuleError> {
        if self.action.len() != alg.top() as usize + 1 {
            return Err(ModuleError::Mismatch);
        }
        for x in 0..self.dim() {
            if *self.act(0, 0, x) != self.unit_vector(x) {
                return Err(ModuleError::Unit(self.labels[x].clone()));
            }
        }
        for d in 0..=alg.top() {
            for i in 0..alg.dim(d) {
                for x in 0..self.dim() {
                    for y in self.act(d, i, x).iter_ones() {
                        if self.degrees[y] != self.degrees[x] + d {
                            return Err(ModuleError::Degree { a: alg.label(d, i), x: self.labels[x].clone() });
                        }
                    }
                }
            }
        }
        let gens = alg.generators();
        for d in 0..=alg.top() {
            for i in 0..alg.dim(d) {
                for &(gd, gi) in &gens {
                    for x in 0..self.dim() {
                        let lhs = if d + gd <= alg.top() {
                            let ag = alg.product(d, i, gd, gi);
                            let mut acc = F2Vector::zeros(self.dim());
                            for k in ag.iter_ones() {
                                acc.add_assign(self.act(d + gd, k, x));
                            }
                            acc
                        } else {
                            F2Vector::zeros(self.dim())
                        };
                        let rhs = self.act_vector(d, i, self.act(gd, gi, x));
                        if lhs != rhs {
                            return Err(ModuleError::Associativity {
                                a: alg.label(d, i),
                                b: alg.label(gd, gi),
                                x: self.labels[x].clone(),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// k concentrated in `degree`.
    pub fn trivial(alg: &FiniteAlgebra, degree: u32) -> Self {
        let mut action: Vec<Vec<Vec<F2Vector>>> =
            (0..=alg.top()).map(|d| vec![vec![F2Vector::zeros(1)]; alg.dim(d)]).collect();
        action[0][0][0] = F2Vector::unit(1, 0);
        FinModule { name: "k".into(), labels: vec!["1".into()], degrees: vec![degree], action }
    }

    /// The quotient by the submodule generated by `relations`.
    pub fn quotient_by_relations(&self, alg: &FiniteAlgebra, relations: &[F2Vector]) -> (Self, Vec<usize>) {
        let sub = self.generated_submodule(alg, relations);
        self.quotient(&sub)
    }

    pub fn generated_submodule(&self, alg: &FiniteAlgebra, gens: &[F2Vector]) -> Subspace {
        let mut s = Subspace::zero(self.dim());
        for v in gens {
            for d in 0..=alg.top() {
                for i in 0..alg.dim(d) {
                    s.insert(self.act_vector(d, i, v));
                }
            }
        }
        s
    }

    pub fn is_submodule(&self, alg: &FiniteAlgebra, s: &Subspace) -> bool {
        alg.generators()
            .iter()
            .all(|&(d, i)| s.basis().iter().all(|v| s.contains(&self.act_vector(d, i, v))))
    }

    /// Quotient by a submodule spanned by homogeneous vectors; the returned
    /// positions are the surviving standard basis vectors.
    pub fn quotient(&self, s: &Subspace) -> (Self, Vec<usize>) {
        let keep = s.complement_positions();
        let action = self
            .action
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|row| {
                        keep.iter()
                            .map(|&x| {
                                let r = s.reduce(&row[x]);
                                F2Vector::from_bits(keep.iter().map(|&y| r.get(y)))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let m = FinModule {
            name: format!("{}/sub", self.name),
            labels: keep.iter().map(|&x| self.labels[x].clone()).collect(),
            degrees: keep.iter().map(|&x| self.degrees[x]).collect(),
            action,
        };
        (m, keep)
    }

    /// Submodule on a homogeneous subspace, with basis vectors in ambient coordinates.
    pub fn submodule(&self, s: &Subspace) -> (Self, Vec<F2Vector>) {
        let top = self.top_degree().unwrap_or(0);
        let mut basis = Vec::new();
        for d in 0..=top {
            let slice = Subspace::span(self.dim(), self.basis_in_degree(d).into_iter().map(|x| self.unit_vector(x)));
            basis.extend(s.intersection(&slice).basis().iter().cloned());
        }
        let coords = crate::comodule::Coordinates::new(self.dim(), &basis);
        let degrees: Vec<u32> = basis.iter().map(|v| self.degrees[v.first_one().unwrap()]).collect();
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(d, block)| {
                block
                    .iter()
                    .enumerate()
                    .map(|(i, _)| {
                        basis
                            .iter()
                            .map(|v| coords.solve(&self.act_vector(d as u32, i, v)).expect("submodule"))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let labels = basis
            .iter()
            .map(|v| {
                let parts: Vec<&str> = v.iter_ones().map(|i| self.labels[i].as_str()).collect();
                parts.join("+")
            })
            .collect();
        (FinModule { name: format!("sub({})", self.name), labels, degrees, action }, basis)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    /// Restriction along an inclusion of profile algebras `small → alg`.
    pub fn restrict(&self, alg: &FiniteAlgebra, small: &FiniteAlgebra) -> Result<Self, AlgebraError> {
        let top = small.top();
        let action = (0..=top)
            .map(|d| {
                (0..small.dim(d))
                    .map(|i| {
                        let a = MilnorElement::from(small.basis(d)[i].clone());
                        let av = alg.element_vector(&a)?;
                        Ok((0..self.dim())
                            .map(|x| {
                                let mut v = F2Vector::zeros(self.dim());
                                for k in av.iter_ones() {
                                    if d <= alg.top() {
                                        v.add_assign(self.act(d, k, x));
                                    }
                                }
                                v
                            })
                            .collect())
                    })
                    .collect::<Result<Vec<_>, AlgebraError>>()
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Ok(FinModule { name: self.name.clone(), labels: self.labels.clone(), degrees: self.degrees.clone(), action })
    }

    /// Pullback along the projection big → quotient.
    pub fn inflate(&self, quotient: &FiniteAlgebra) -> Option<Self> {
        let (big, proj) = quotient.projection_from_big()?;
        let action = (0..=big.top())
            .map(|d| {
                (0..big.dim(d))
                    .map(|i| {
                        (0..self.dim())
                            .map(|x| {
                                let mut v = F2Vector::zeros(self.dim());
                                if d <= quotient.top() {
                                    for k in proj[d as usize][i].iter_ones() {
                                        v.add_assign(self.act(d, k, x));
                                    }
                                }
                                v
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Some(FinModule { name: self.name.clone(), labels: self.labels.clone(), degrees: self.degrees.clone(), action })
    }
}

/// Free module ⊕ A·gⱼ with generators in the given degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub gens: Vec<u32>,
}

/// Basis of a free module in one degree: (generator, algebra degree, algebra index).
#[derive(Clone, Debug, Default)]
pub struct FreeBasis {
    pub elems: Vec<(usize, u32, usize)>,
    index: BTreeMap<(usize, usize), usize>,
}

impl FreeBasis {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Position of a·g for the given generator and algebra index.
    pub fn position(&self, g: usize, ai: usize) -> usize {
        self.index[&(g, ai)]
    }
}

impl FreeModule {
    pub fn new(gens: Vec<u32>) -> Self {
        FreeModule { gens }
    }

    pub fn basis(&self, alg: &FiniteAlgebra, t: u32) -> FreeBasis {
        let mut b = FreeBasis::default();
        for (g, &gd) in self.gens.iter().enumerate() {
            if gd > t {
                continue;
            }
            let ad = t - gd;
            for ai in 0..alg.dim(ad) {
                b.index.insert((g, ai), b.elems.len());
                b.elems.push((g, ad, ai));
            }
        }
        b
    }

    fn flat_basis(&self, alg: &FiniteAlgebra, window: u32) -> (Vec<String>, Vec<u32>, Vec<(usize, u32, usize)>) {
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        let mut pos = Vec::new();
        for t in 0..=window {
            for &(g, ad, ai) in &self.basis(alg, t).elems {
                labels.push(if self.gens.len() == 1 { alg.label(ad, ai) } else { format!("{}·g{}", alg.label(ad, ai), g) });
                degrees.push(t);
                pos.push((g, ad, ai));
            }
        }
        (labels, degrees, pos)
    }

    /// a·v for v in degree t, result in degree t + |a|.
    pub fn act(&self, alg: &FiniteAlgebra, ad: u32, ai: usize, t: u32, v: &F2Vector) -> F2Vector {
        let src = self.basis(alg, t);
        let dst = self.basis(alg, t + ad);
        self.act_with(alg, ad, ai, &src, &dst, v)
    }

    pub fn act_with(&self, alg: &FiniteAlgebra, ad: u32, ai: usize, src: &FreeBasis, dst: &FreeBasis, v: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(dst.len());
        for k in v.iter_ones() {
            let (g, bd, bi) = src.elems[k];
            if let Some(p) = alg.product_checked(ad, ai, bd, bi) {
                for c in p.iter_ones() {
                    out.flip(dst.position(g, c));
                }
            }
        }
        out
    }
}

impl FinModule {
    /// Free module on generators of the given degrees, truncated at `window`.
    pub fn free_module(alg: &FiniteAlgebra, gens: &[u32], window: u32) -> Self {
        let fm = FreeModule::new(gens.to_vec());
        let (labels, degrees, pos) = fm.flat_basis(alg, window);
        let index: BTreeMap<(usize, u32, usize), usize> = pos.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let n = labels.len();
        let action = (0..=alg.top())
            .map(|d| {
                (0..alg.dim(d))
                    .map(|i| {
                        (0..n)
                            .map(|x| {
                                let (g, bd, bi) = pos[x];
                                let mut v = F2Vector::zeros(n);
                                if let Some(p) = alg.product_checked(d, i, bd, bi) {
                                    for k in p.iter_ones() {
                                        if let Some(&y) = index.get(&(g, d + bd, k)) {
                                            v.flip(y);
                                        }
                                    }
                                }
                                v
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        FinModule { name: format!("free{:?}", gens), labels, degrees, action }
    }
}

/// One stage P_s of a resolution: generator degrees and their images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStage {
    pub gens: Vec<u32>,
    /// Image of each generator, in the previous stage's basis at the
    /// generator's degree (for s = 0: in the module).
    pub d: Vec<F2Vector>,
}

/// Minimal free resolution through internal degree `t_max` and stage `s_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionWindow {
    pub algebra: String,
    pub module: String,
    pub s_max: u32,
    pub t_max: u32,
    pub stages: Vec<ResolutionStage>,
}

impl ResolutionWindow {
    pub fn free(&self, s: usize) -> FreeModule {
        FreeModule::new(self.stages[s].gens.clone())
    }

    /// Number of stage-s generators in degree t.
    pub fn generator_count(&self, s: u32, t: u32) -> usize {
        self.stages.get(s as usize).map_or(0, |st| st.gens.iter().filter(|&&g| g == t).count())
    }

    /// Image of d_s on an element of P_s in degree t, in P_{s−1} (or M) coordinates.
    pub fn apply_d(&self, alg: &FiniteAlgebra, m: &FinModule, s: usize, t: u32, v: &F2Vector) -> F2Vector {
        let src = self.free(s).basis(alg, t);
        let st = &self.stages[s];
        if s == 0 {
            let mut out = F2Vector::zeros(m.dim());
            for k in v.iter_ones() {
                let (g, ad, ai) = src.elems[k];
                out.add_assign(&m.act_vector(ad, ai, &st.d[g]));
            }
            out
        } else {
            let prev = self.free(s - 1);
            let dst = prev.basis(alg, t);
            let mut out = F2Vector::zeros(dst.len());
            for k in v.iter_ones() {
                let (g, ad, ai) = src.elems[k];
                let gsrc = prev.basis(alg, st.gens[g]);
                out.add_assign(&prev.act_with(alg, ad, ai, &gsrc, &dst, &st.d[g]));
            }
            out
        }
    }

    /// Matrix of d_s in degree t (rows = target coordinates).
    pub fn d_matrix(&self, alg: &FiniteAlgebra, m: &FinModule, s: usize, t: u32) -> F2Matrix {
        let src = self.free(s).basis(alg, t);
        let rows = if s == 0 { m.dim() } else { self.free(s - 1).basis(alg, t).len() };
        let cols: Vec<F2Vector> = (0..src.len()).map(|k| self.apply_d(alg, m, s, t, &F2Vector::unit(src.len(), k))).collect();
        F2Matrix::from_columns(rows, &cols)
    }
}

/// Module elements of degree t as a subspace selector.
fn module_degree_vectors(m: &FinModule, t: u32) -> Vec<usize> {
    m.basis_in_degree(t)
}

pub fn minimal_free_resolution(alg: &FiniteAlgebra, m: &FinModule, s_max: u32, t_max: u32) -> ResolutionWindow {
    let t_min = m.bottom_degree().unwrap_or(0);
    let mut stages: Vec<ResolutionStage> = Vec::new();
    // kernels of the previous map, per degree, in the previous stage's coordinates
    let mut prev_kernels: Vec<Subspace> = (0..=t_max)
        .map(|t| {
            let idx = module_degree_vectors(m, t);
            Subspace::span(m.dim(), idx.into_iter().map(|x| m.unit_vector(x)))
        })
        .collect();
    for s in 0..=s_max as usize {
        let mut stage = ResolutionStage { gens: Vec::new(), d: Vec::new() };
        let mut kernels = Vec::new();
        for t in 0..=t_max {
            let target_len = if s == 0 { m.dim() } else { FreeModule::new(stages[s - 1].gens.clone()).basis(alg, t).len() };
            let free = FreeModule::new(stage.gens.clone());
            let src = free.basis(alg, t);
            let mut image = Subspace::zero(target_len);
            let mut cols = Vec::with_capacity(src.len());
            for k in 0..src.len() {
                let v = apply_stage(alg, m, &stages, &stage, s, t, &src, k);
                image.insert(v.clone());
                cols.push(v);
            }
            if t >= t_min {
                for v in image.complement_in(&prev_kernels[t as usize]) {
                    stage.gens.push(t);
                    stage.d.push(v.clone());
                    image.insert(v.clone());
                    cols.push(v);
                }
            }
            let n_src = cols.len();
            let mat = F2Matrix::from_columns(target_len, &cols);
            kernels.push(Subspace::span(n_src, mat.kernel_basis()));
        }
        prev_kernels = kernels;
        stages.push(stage);
    }
    ResolutionWindow {
        algebra: alg.name().into(),
        module: m.name().into(),
        s_max,
        t_max,
        stages,
    }
}

#[allow(clippy::too_many_arguments)]
fn apply_stage(
    alg: &FiniteAlgebra,
    m: &FinModule,
    stages: &[ResolutionStage],
    stage: &ResolutionStage,
    s: usize,
    t: u32,
    src: &FreeBasis,
    k: usize,
) -> F2Vector {
    let (g, ad, ai) = src.elems[k];
    if s == 0 {
        m.act_vector(ad, ai, &stage.d[g])
    } else {
        let prev = FreeModule::new(stages[s - 1].gens.clone());
        let gsrc = prev.basis(alg, stage.gens[g]);
        let dst = prev.basis(alg, t);
        prev.act_with(alg, ad, ai, &gsrc, &dst, &stage.d[g])
    }
}

/// Checks d∘d = 0, exactness and minimality through the window.
pub fn check_resolution(alg: &FiniteAlgebra, m: &FinModule, r: &ResolutionWindow) -> Result<(), String> {
    for t in 0..=r.t_max {
        // surjectivity onto M in degree t
        let d0 = r.d_matrix(alg, m, 0, t);
        if d0.rank() != m.basis_in_degree(t).len() {
            return Err(format!("P_0 → M not onto in degree {}", t));
        }
        for s in 0..r.stages.len() {
            let ds = r.d_matrix(alg, m, s, t);
            if s + 1 < r.stages.len() {
                let dn = r.d_matrix(alg, m, s + 1, t);
                if !ds.mul(&dn).is_zero() {
                    return Err(format!("d∘d ≠ 0 at stage {} degree {}", s + 1, t));
                }
                let ker = ds.cols() - ds.rank();
                if dn.rank() != ker {
                    return Err(format!("not exact at stage {} degree {}", s, t));
                }
            }
            // minimality: generator images have no unit coefficient on generators
            if s > 0 {
                let prev = r.free(s - 1);
                let b = prev.basis(alg, t);
                for (g, &gd) in r.stages[s].gens.iter().enumerate() {
                    if gd != t {
                        continue;
                    }
                    for k in r.stages[s].d[g].iter_ones() {
                        if b.elems[k].1 == 0 {
                            return Err(format!("unit entry at stage {} generator {}", s, g));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// dim Ext^{s,t}(M, N) from the Hom complex over a minimal resolution of M.
/// Maps of degree t send a generator of degree g to N_{g−t}.
pub fn ext_groups(alg: &FiniteAlgebra, m: &FinModule, n: &FinModule, s_max: u32, t_max: u32) -> BTreeMap<(u32, i64), usize> {
    let n_top = n.top_degree().unwrap_or(0) as i64;
    let n_bot = n.bottom_degree().unwrap_or(0) as i64;
    // Hom degree t ranges over g − deg(N) for generator degrees g ≤ t_res.
    let t_res = (t_max as i64 + n_top).max(0) as u32;
    let res = minimal_free_resolution(alg, m, s_max + 1, t_res);
    let mut out = BTreeMap::new();
    let t_lo = -(n_top);
    for t in t_lo..=t_max as i64 {
        // cochains C^s_t: (gen j of P_s, y ∈ N_{deg g_j − t})
        let cochain_basis = |s: usize| -> Vec<(usize, usize)> {
            let mut b = Vec::new();
            for (j, &g) in res.stages[s].gens.iter().enumerate() {
                let nd = g as i64 - t;
                if nd < n_bot || nd > n_top {
                    continue;
                }
                for y in n.basis_in_degree(nd as u32) {
                    b.push((j, y));
                }
            }
            b
        };
        let bases: Vec<Vec<(usize, usize)>> = (0..=s_max as usize + 1).map(cochain_basis).collect();
        // δ: C^s → C^{s+1}, (δf)(g') = f(d g')
        let delta = |s: usize| -> F2Matrix {
            let src = &bases[s];
            let dst = &bases[s + 1];
            let src_index: BTreeMap<(usize, usize), usize> = src.iter().enumerate().map(|(k, &p)| (p, k)).collect();
            let mut mat = F2Matrix::zeros(dst.len(), src.len());
            let prev = res.free(s);
            for (row, &(j2, y2)) in dst.iter().enumerate() {
                let gd = res.stages[s + 1].gens[j2];
                let b = prev.basis(alg, gd);
                let dg = &res.stages[s + 1].d[j2];
                for k in dg.iter_ones() {
                    let (j, ad, ai) = b.elems[k];
                    // f(a·g_j) = a·f(g_j); coefficient on y2 for f = e_{(j, y)}
                    let gdeg = res.stages[s].gens[j] as i64;
                    let nd = gdeg - t;
                    if nd < n_bot || nd > n_top {
                        continue;
                    }
                    for y in n.basis_in_degree(nd as u32) {
                        if n.act_vector(ad, ai, &n.unit_vector(y)).get(y2) {
                            let col = src_index[&(j, y)];
                            mat.set(row, col, !mat.get(row, col));
                        }
                    }
                }
            }
            mat
        };
        let mut prev_rank = 0;
        for s in 0..=s_max as usize {
            let ds = delta(s);
            let rank = ds.rank();
            let dim = bases[s].len() - rank - prev_rank;
            if dim > 0 {
                out.insert((s as u32, t), dim);
            }
            prev_rank = rank;
        }
    }
    out
}

/// Ext^{s,t}(M, k) = generator counts of a minimal resolution.
pub fn ext_dims_k(alg: &FiniteAlgebra, m: &FinModule, s_max: u32, t_max: u32) -> BTreeMap<(u32, u32), usize> {
    let res = minimal_free_resolution(alg, m, s_max, t_max);
    let mut out = BTreeMap::new();
    for (s, st) in res.stages.iter().enumerate() {
        for &g in &st.gens {
            *out.entry((s as u32, g)).or_insert(0) += 1;
        }
    }
    out
}

/// A presentation ⊕ A(n)·r_l → ⊕ A(n)·e_k; `relations[l]` lists (k, π_{lk}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresentation {
    pub n: u32,
    pub gens: Vec<u32>,
    pub relations: Vec<Vec<(usize, MilnorElement)>>,
}

impl FinitePresentation {
    fn relation_degree(&self, l: usize) -> Option<u32> {
        self.relations[l].first().map(|(k, a)| a.degree() + self.gens[*k])
    }

    /// The cokernel over `alg` (A(n) itself or a window of A), truncated at `window`.
    pub fn cokernel(&self, alg: &FiniteAlgebra, window: u32) -> Result<FinModule, ModuleError> {
        let free = FinModule::free_module(alg, &self.gens, window);
        let fm = FreeModule::new(self.gens.clone());
        let mut rels = Vec::new();
        for l in 0..self.relations.len() {
            let Some(d) = self.relation_degree(l) else { continue };
            if d > window {
                continue;
            }
            let mut v = F2Vector::zeros(free.dim());
            // flat positions of degree-d basis elements
            let offset = (0..d).map(|t| fm.basis(alg, t).len()).sum::<usize>();
            let b = fm.basis(alg, d);
            for (k, a) in &self.relations[l] {
                if a.degree() + self.gens[*k] != d {
                    return Err(ModuleError::Window(format!("relation {} is not homogeneous", l)));
                }
                let av = alg.element_vector(a)?;
                for ai in av.iter_ones() {
                    v.flip(offset + b.position(*k, ai));
                }
            }
            rels.push(v);
        }
        Ok(free.quotient_by_relations(alg, &rels).0.with_name("coker"))
    }
}

/// A ⊗_{A(n)} M′ through degree `window`, as the quotient of A_{≤window} ⊗ M′
/// by the relations ab⊗m − a⊗bm.
pub fn induce_up(big: &FiniteAlgebra, small: &FiniteAlgebra, m: &FinModule) -> Result<FinModule, ModuleError> {
    let parts = induce_parts(big, small, m)?;
    Ok(parts.ambient.quotient(&parts.relations).0.with_name(&format!("A⊗_{}{}", small.name(), m.name())))
}

struct InducedParts {
    ambient: FinModule,
    relations: Subspace,
    index: BTreeMap<(u32, usize, usize), usize>,
    elems: Vec<(u32, usize, usize)>,
}

fn induce_parts(big: &FiniteAlgebra, small: &FiniteAlgebra, m: &FinModule) -> Result<InducedParts, ModuleError> {
    let window = big.top();
    // basis (a, x) with |a| + deg x ≤ window, grouped by degree
    let mut elems: Vec<(u32, usize, usize)> = Vec::new();
    let mut index = BTreeMap::new();
    let mut degrees = Vec::new();
    let mut labels = Vec::new();
    for t in 0..=window {
        for x in 0..m.dim() {
            let xd = m.degree(x);
            if xd > t {
                continue;
            }
            for ai in 0..big.dim(t - xd) {
                index.insert((t - xd, ai, x), elems.len());
                elems.push((t - xd, ai, x));
                degrees.push(t);
                labels.push(format!("{}⊗{}", big.label(t - xd, ai), m.labels()[x]));
            }
        }
    }
    let n = elems.len();
    // small basis elements inside big
    let mut small_in_big = Vec::new();
    for d in 1..=small.top() {
        for i in 0..small.dim(d) {
            let a = MilnorElement::from(small.basis(d)[i].clone());
            if d <= window {
                small_in_big.push((d, i, big.element_vector(&a)?));
            }
        }
    }
    let mut rel = Subspace::zero(n);
    for &(ad, ai, x) in &elems {
        for (bd, bi, bv) in &small_in_big {
            if ad + bd + m.degree(x) > window {
                continue;
            }
            let mut v = F2Vector::zeros(n);
            for k in big.mul_vectors(ad, &F2Vector::unit(big.dim(ad), ai), *bd, bv).iter_ones() {
                v.flip(index[&(ad + bd, k, x)]);
            }
            for y in m.act(*bd, *bi, x).iter_ones() {
                v.flip(index[&(ad, ai, y)]);
            }
            rel.insert(v);
        }
    }
    // A-action on A ⊗ M′ by left multiplication, then pass to the quotient
    let action = (0..=big.top())
        .map(|d| {
            (0..big.dim(d))
                .map(|i| {
                    (0..n)
                        .map(|k| {
                            let (ad, ai, x) = elems[k];
                            let mut v = F2Vector::zeros(n);
                            if let Some(p) = big.product_checked(d, i, ad, ai) {
                                if d + ad + m.degree(x) <= window {
                                    for c in p.iter_ones() {
                                        v.flip(index[&(d + ad, c, x)]);
                                    }
                                }
                            }
                            v
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let ambient = FinModule { name: format!("A⊗{}", m.name()), labels, degrees, action };
    Ok(InducedParts { ambient, relations: rel, index, elems })
}

/// Per-degree injectivity of v ↦ (g·v)_g on a free module, for a list of
/// elements g; the basis of a contradiction argument for maps into free modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: u32,
    pub dim: usize,
    pub rank: usize,
    /// For each basis vector of this degree, an element z of the witness
    /// algebra with z·v ≠ 0, highest degree first.
    pub witnesses: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingCertificate {
    pub module: String,
    pub window: u32,
    pub witness: String,
    /// Highest image degree covered by the argument.
    pub max_image_degree: u32,
    pub checks: Vec<DegreeCheck>,
    /// (shift, dimension of the directly solved map space).
    pub direct: Vec<(i64, usize)>,
    pub holds: bool,
}

/// Shared engine: maps from `l` (a module over `l_alg`, a subalgebra window
/// of `big`) into the free `big`-module on `free_gens`.
fn vanishing_into_free(
    l: &FinModule,
    l_alg: &FiniteAlgebra,
    big: &FiniteAlgebra,
    free_gens: &[u32],
    witness_elems: &[MilnorElement],
    witness_algebra: &FiniteAlgebra,
    witness_name: &str,
) -> Result<VanishingCertificate, ModuleError> {
    let window = big.top();
    let reach = witness_elems.iter().map(|g| g.degree()).max().unwrap_or(0);
    if window < reach {
        return Err(ModuleError::Window(format!("window {} below witness degree {}", window, reach)));
    }
    let max_image = window - reach;
    let wvecs: Vec<(u32, F2Vector)> = witness_elems
        .iter()
        .map(|g| Ok((g.degree(), big.element_vector(g)?)))
        .collect::<Result<_, AlgebraError>>()?;
    let mut checks = Vec::new();
    let mut holds = true;
    let fm = FreeModule::new(free_gens.to_vec());
    for d in 0..=max_image {
        let b = fm.basis(big, d);
        let mut rows: Vec<F2Vector> = Vec::new();
        for (gd, gv) in &wvecs {
            let dst = fm.basis(big, d + gd);
            let cols: Vec<F2Vector> = (0..b.len())
                .map(|k| {
                    let mut acc = F2Vector::zeros(dst.len());
                    for gi in gv.iter_ones() {
                        acc.add_assign(&fm.act_with(big, *gd, gi, &b, &dst, &F2Vector::unit(b.len(), k)));
                    }
                    acc
                })
                .collect();
            rows.extend(F2Matrix::from_columns(dst.len(), &cols).into_rows());
        }
        let rank = F2Matrix::from_rows(b.len(), rows).rank();
        let mut witnesses = Vec::new();
        for k in 0..b.len() {
            let (g, ad, ai) = b.elems[k];
            let mut found = None;
            'search: for zd in (1..=witness_algebra.top()).rev() {
                if ad + zd > window {
                    continue;
                }
                for zi in 0..witness_algebra.dim(zd) {
                    let z = MilnorElement::from(witness_algebra.basis(zd)[zi].clone());
                    let Ok(zv) = big.element_vector(&z) else { continue };
                    let prod = big.mul_vectors(zd, &zv, ad, &F2Vector::unit(big.dim(ad), ai));
                    if !prod.is_zero() {
                        found = Some(format!("{}", z));
                        break 'search;
                    }
                }
            }
            let label = if free_gens.len() == 1 { big.label(ad, ai) } else { format!("{}·g{}", big.label(ad, ai), g) };
            witnesses.push((label, found.unwrap_or_else(|| "none".into())));
        }
        if rank != b.len() {
            holds = false;
        }
        checks.push(DegreeCheck { degree: d, dim: b.len(), rank, witnesses });
    }
    // direct solve for every shift whose images stay in degrees ≤ max_image
    let mut direct = Vec::new();
    if l.dim() > 0 {
        let top = l.top_degree().unwrap() as i64;
        let bot = l.bottom_degree().unwrap() as i64;
        for shift in (top - max_image as i64)..=top {
            let dim = direct_hom_dim(l, l_alg, big, free_gens, shift, window)?;
            if dim != 0 {
                holds = false;
            }
            direct.push((shift, dim));
            let _ = bot;
        }
    }
    Ok(VanishingCertificate {
        module: l.name().into(),
        window,
        witness: witness_name.into(),
        max_image_degree: max_image,
        checks,
        direct,
        holds,
    })
}

/// Dimension of the space of linear f: L → F (images of x in degree
/// deg x − shift ≤ window) with f(g·x) = g·f(x) for the generators g of
/// `l_alg` whenever both sides lie in the window.
fn direct_hom_dim(
    l: &FinModule,
    l_alg: &FiniteAlgebra,
    big: &FiniteAlgebra,
    free_gens: &[u32],
    shift: i64,
    window: u32,
) -> Result<usize, ModuleError> {
    let fm = FreeModule::new(free_gens.to_vec());
    let mut offsets = Vec::new();
    let mut bases = Vec::new();
    let mut total = 0;
    for x in 0..l.dim() {
        let td = l.degree(x) as i64 - shift;
        let b = if td < 0 || td > window as i64 { FreeBasis::default() } else { fm.basis(big, td as u32) };
        offsets.push(total);
        total += b.len();
        bases.push((td, b));
    }
    let gens = l_alg.generators();
    let mut rows = Vec::new();
    for &(gd, gi) in &gens {
        let gel = MilnorElement::from(l_alg.basis(gd)[gi].clone());
        let gv = big.element_vector(&gel)?;
        for x in 0..l.dim() {
            let (td, bx) = &bases[x];
            if *td < 0 || *td + gd as i64 > window as i64 {
                continue;
            }
            let target_deg = (*td + gd as i64) as u32;
            let dst = fm.basis(big, target_deg);
            // g·f(x) − f(g·x) as a map from the unknowns to dst
            let mut eqs = vec![F2Vector::zeros(total); dst.len()];
            for k in 0..bx.len() {
                let mut img = F2Vector::zeros(dst.len());
                for a in gv.iter_ones() {
                    img.add_assign(&fm.act_with(big, gd, a, bx, &dst, &F2Vector::unit(bx.len(), k)));
                }
                for r in img.iter_ones() {
                    eqs[r].flip(offsets[x] + k);
                }
            }
            for y in l.act(gd, gi, x).iter_ones() {
                let (ty, by) = &bases[y];
                debug_assert_eq!(*ty, target_deg as i64);
                for k in 0..by.len() {
                    eqs[k].flip(offsets[y] + k);
                }
            }
            rows.extend(eqs);
        }
    }
    let mat = F2Matrix::from_rows(total, rows);
    Ok(total - mat.rank())
}

/// Hom_A(M, Σ^j F) = 0 for a finite A-module M and free F, certified in
/// a window of A using the generators of A(witness_n).
pub fn hom_to_free_vanishing(
    m: &FinModule,
    window_alg: &FiniteAlgebra,
    witness_n: u32,
    free_gens: &[u32],
) -> Result<VanishingCertificate, ModuleError> {
    let witness_alg = FiniteAlgebra::a(witness_n);
    let elems: Vec<MilnorElement> = (0..=witness_n).map(|i| MilnorElement::sq(&[1 << i])).collect();
    let pd = pd_degree(witness_n);
    let mut cert = vanishing_into_free(m, window_alg, window_alg, free_gens, &elems, &witness_alg, &format!("A({})", witness_n))?;
    // the rank argument is only expected below the top class of the witness algebra
    if cert.max_image_degree >= pd {
        cert.checks.retain(|c| c.degree < pd);
        cert.max_image_degree = pd - 1;
        cert.direct.retain(|&(shift, _)| m.top_degree().is_none_or(|t| t as i64 - shift < pd as i64));
        cert.holds = cert.checks.iter().all(|c| c.rank == c.dim) && cert.direct.iter().all(|&(_, d)| d == 0);
    }
    Ok(cert)
}

/// Coherent targets whose first injective stage is free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoherentTarget {
    /// A//A(n), embedded in Σ^{pd(n)} A by a ↦ a·top(A(n)).
    QuotientByA(u32),
    Free(Vec<u32>),
}

impl CoherentTarget {
    pub fn first_stage(&self) -> Vec<u32> {
        match self {
            CoherentTarget::QuotientByA(n) => vec![pd_degree(*n)],
            CoherentTarget::Free(g) => g.clone(),
        }
    }
}

/// The map A//A(n) → Σ^{pd(n)} A, a ↦ a·top, on a window: rank per degree.
pub fn quotient_embedding_ranks(n: u32, window_alg: &FiniteAlgebra) -> Result<Vec<(u32, usize, usize)>, ModuleError> {
    let small = FiniteAlgebra::a(n);
    let k = FinModule::trivial(&small, 0);
    let q = induce_up(window_alg, &small, &k)?;
    let pd = pd_degree(n);
    let top_elem = small.to_element(pd, &F2Vector::unit(1, 0));
    let top_vec = window_alg.element_vector(&top_elem)?;
    let mut out = Vec::new();
    for d in 0..=window_alg.top().saturating_sub(pd) {
        // representatives a⊗1 of the quotient basis in degree d
        let reps: Vec<usize> = q.basis_in_degree(d);
        let cols: Vec<F2Vector> = reps
            .iter()
            .map(|&x| {
                let label = &q.labels()[x];
                let a = label.split('⊗').next().unwrap();
                let ai = window_alg.basis(d).iter().position(|m| format!("{}", m) == a).unwrap();
                window_alg.mul_vectors(d, &F2Vector::unit(window_alg.dim(d), ai), pd, &top_vec)
            })
            .collect();
        let rank = F2Matrix::from_columns(window_alg.dim(d + pd), &cols).rank();
        out.push((d, reps.len(), rank));
    }
    Ok(out)
}

/// Hom_B(L, J⁰) = 0 for the free first stage J⁰ of a coherent target, with B
/// an infinite sub-Hopf algebra given by `b_profile` (E or A), in a window.
pub fn hom_induced_vanishing(
    l: &FinModule,
    l_alg: &FiniteAlgebra,
    b_profile: &Profile,
    target: &CoherentTarget,
    window_alg: &FiniteAlgebra,
    witness_n: u32,
) -> Result<VanishingCertificate, ModuleError> {
    let (elems, witness_alg, name) = if *b_profile == Profile::e_infinite() {
        let elems: Vec<MilnorElement> = (0..=witness_n as usize)
            .map(|i| {
                let mut r = vec![0u32; i + 1];
                r[i] = 1;
                MilnorElement::sq(&r)
            })
            .collect();
        (elems, FiniteAlgebra::e(witness_n), format!("E({})", witness_n))
    } else {
        let elems: Vec<MilnorElement> = (0..=witness_n).map(|i| MilnorElement::sq(&[1 << i])).collect();
        (elems, FiniteAlgebra::a(witness_n), format!("A({})", witness_n))
    };
    let top = witness_alg.top();
    let mut cert = vanishing_into_free(l, l_alg, window_alg, &target.first_stage(), &elems, &witness_alg, &name)?;
    // the free stage starts at its lowest generator; the argument runs up to
    // the witness top class above it
    let base = target.first_stage().into_iter().min().unwrap_or(0);
    if cert.max_image_degree >= base + top {
        cert.checks.retain(|c| c.degree < base + top);
        cert.max_image_degree = base + top - 1;
        let lim = (base + top) as i64;
        cert.direct.retain(|&(shift, _)| l.top_degree().is_none_or(|t| (t as i64) - shift < lim));
        cert.holds = cert.checks.iter().all(|c| c.rank == c.dim) && cert.direct.iter().all(|&(_, d)| d == 0);
    }
    Ok(cert)
}

/// Φ^e: degrees times 2^e, the doubled algebra acting through the original action.
pub fn double_module(m: &FinModule, alg: &FiniteAlgebra, e: u32) -> (FinModule, FiniteAlgebra) {
    let dbl = alg.doubled(e);
    let f = 1u32 << e;
    let action = (0..=dbl.top())
        .map(|d| {
            if d % f == 0 {
                m.action[(d / f) as usize].clone()
            } else {
                vec![]
            }
        })
        .collect();
    let labels = m.labels.iter().map(|l| format!("{}₍{}₎", l, e)).collect();
    let degrees = m.degrees.iter().map(|&d| d * f).collect();
    (FinModule { name: format!("Φ{}({})", e, m.name), labels, degrees, action }, dbl)
}

/// Inverse of `double_module` on objects.
pub fn undouble_module(m: &FinModule, e: u32) -> Option<FinModule> {
    let f = 1u32 << e;
    if m.degrees.iter().any(|&d| d % f != 0) {
        return None;
    }
    let action = m.action.iter().step_by(f as usize).cloned().collect();
    let labels = m
        .labels
        .iter()
        .map(|l| l.strip_suffix(&format!("₍{}₎", e)).unwrap_or(l).into())
        .collect();
    let name = m.name.strip_prefix(&format!("Φ{}(", e)).and_then(|s| s.strip_suffix(')')).unwrap_or(&m.name).into();
    Some(FinModule { name, labels, degrees: m.degrees.iter().map(|&d| d / f).collect(), action })
}

/// The Moore-space module k{x₀, x₁} with Sq¹x₀ = x₁, over a window of A.
pub fn moore_module(alg: &FiniteAlgebra) -> FinModule {
    let free = FinModule::free_module(alg, &[0], alg.top());
    let rels: Vec<F2Vector> = (0..free.dim()).filter(|&x| free.degree(x) >= 2).map(|x| free.unit_vector(x)).collect();
    free.quotient_by_relations(alg, &rels).0.with_name("A(0)")
}

/// Seeded random finite module of dimension ≤ `max_dim`: a quotient of a
/// free module on one or two generators by random relations plus everything
/// above a random degree bound.
pub fn random_finite_module(alg: &FiniteAlgebra, seed: u64, max_dim: usize) -> FinModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let ngen = rng.gen_range(1..=2usize);
        let gens: Vec<u32> = (0..ngen).map(|_| rng.gen_range(0..=2u32)).collect();
        let cap = rng.gen_range(2..=6u32).min(alg.top());
        let free = FinModule::free_module(alg, &gens, alg.top());
        let mut rels: Vec<F2Vector> = (0..free.dim()).filter(|&x| free.degree(x) > cap).map(|x| free.unit_vector(x)).collect();
        for _ in 0..rng.gen_range(0..=3usize) {
            let d = rng.gen_range(1..=cap);
            let idx = free.basis_in_degree(d);
            if idx.is_empty() {
                continue;
            }
            let mut v = F2Vector::zeros(free.dim());
            for &x in &idx {
                if rng.gen_bool(0.5) {
                    v.flip(x);
                }
            }
            rels.push(v);
        }
        let (m, _) = free.quotient_by_relations(alg, &rels);
        if m.dim() > 0 && m.dim() <= max_dim {
            return m.with_name(&format!("random{}", seed));
        }
    }
}

/// Left A-module A_{<j} = A/A_{≥j} of a window.
pub fn truncation_module(alg: &FiniteAlgebra, j: u32) -> FinModule {
    let free = FinModule::free_module(alg, &[0], alg.top());
    let rels: Vec<F2Vector> = (0..free.dim()).filter(|&x| free.degree(x) >= j).map(|x| free.unit_vector(x)).collect();
    free.quotient_by_relations(alg, &rels).0.with_name(&format!("A/A≥{}", j))
}

/// Coproduct of a Hopf algebra basis element as index pairs.
pub fn coproduct_indices(alg: &FiniteAlgebra, d: u32, i: usize) -> Vec<((u32, usize), (u32, usize))> {
    coproduct_monomial(&alg.basis(d)[i])
        .into_iter()
        .map(|(a, b)| (alg.index_of(&a).expect("closed"), alg.index_of(&b).expect("closed")))
        .collect()
}

pub fn antipode_vector(alg: &FiniteAlgebra, d: u32, i: usize) -> F2Vector {
    let chi = antipode(&MilnorElement::from(alg.basis(d)[i].clone()));
    alg.element_vector(&chi).expect("closed under antipode")
}

/// M ⊗ N with the diagonal action through the Milnor coproduct.
pub fn tensor_modules(alg: &FiniteAlgebra, m: &FinModule, n: &FinModule) -> Result<FinModule, AlgebraError> {
    if alg.hopf_profile().is_none() && !matches!(alg.kind(), AlgebraKind::Truncated(..)) {
        return Err(AlgebraError::NotHopf(alg.name().into()));
    }
    let mut pairs = Vec::new();
    let mut index = BTreeMap::new();
    for x in 0..m.dim() {
        for y in 0..n.dim() {
            index.insert((x, y), pairs.len());
            pairs.push((x, y));
        }
    }
    let np = pairs.len();
    let action = (0..=alg.top())
        .map(|d| {
            (0..alg.dim(d))
                .map(|i| {
                    let cop = coproduct_indices(alg, d, i);
                    pairs
                        .iter()
                        .map(|&(x, y)| {
                            let mut v = F2Vector::zeros(np);
                            for &((ad, ai), (bd, bi)) in &cop {
                                if (ad as usize) >= m.action.len() || (bd as usize) >= n.action.len() {
                                    continue;
                                }
                                for x2 in m.act(ad, ai, x).iter_ones() {
                                    for y2 in n.act(bd, bi, y).iter_ones() {
                                        v.flip(index[&(x2, y2)]);
                                    }
                                }
                            }
                            v
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(FinModule {
        name: format!("{}⊗{}", m.name(), n.name()),
        labels: pairs.iter().map(|&(x, y)| format!("{}⊗{}", m.labels()[x], n.labels()[y])).collect(),
        degrees: pairs.iter().map(|&(x, y)| m.degree(x) + n.degree(y)).collect(),
        action,
    })
}


/// The algebra dual to a quotient coalgebra F2[ζᵢ]/(ζᵢ^{2^{hᵢ}}), truncated at
/// `window` when it is infinite.
pub fn dual_algebra(spec: &DualSpec, window: u32) -> Result<FiniteAlgebra, AlgebraError> {
    if (1..=GENS).any(|i| spec.lo(i) != 0) {
        return Err(AlgebraError::NotHopf(spec.name().into()));
    }
    let h = |i: usize| if spec.hi(i) == INF_HEIGHT { INF } else { spec.hi(i) as u32 };
    let tail = h(GENS);
    let tail = if tail == INF { INF } else { 0 };
    let mut heights: Vec<u32> = (1..=GENS).map(h).collect();
    while heights.last() == Some(&tail) {
        heights.pop();
    }
    let profile = Profile::new(heights, tail);
    if spec.is_finite() {
        FiniteAlgebra::profile(&profile)
    } else {
        Ok(FiniteAlgebra::truncated(&profile, window))
    }
}

fn pairing_block(alg: &FiniteAlgebra, spec: &DualSpec, d: u32, cache: &mut ChiCache) -> (Vec<DualMonomial>, F2Matrix) {
    let cols = spec.basis_in_degree(d);
    let rows = (0..alg.dim(d))
        .map(|i| F2Vector::from_bits(cols.iter().map(|c| milnor_pairing(cache, &alg.basis(d)[i], c))))
        .collect();
    (cols, F2Matrix::from_rows(spec.basis_in_degree(d).len(), rows))
}

/// The dual module of a left comodule: θ·y* = Σ ⟨θ, c⟩ x* over the terms
/// c ⊗ y of the coaction of x.
pub fn dualize_comodule(m: &ComoduleWindow) -> Result<(FinModule, FiniteAlgebra), ModuleError> {
    let alg = dual_algebra(m.coalgebra(), m.window())?;
    let mut cache = ChiCache::new();
    let n = m.dim();
    let mut action: Vec<Vec<Vec<F2Vector>>> =
        (0..=alg.top()).map(|d| vec![vec![F2Vector::zeros(n); n]; alg.dim(d)]).collect();
    for x in 0..n {
        for (c, y) in m.coaction_terms(x) {
            let d = c.degree();
            if d > alg.top() {
                continue;
            }
            for i in 0..alg.dim(d) {
                if milnor_pairing(&mut cache, &alg.basis(d)[i], c) {
                    action[d as usize][i][*y].flip(x);
                }
            }
        }
    }
    let labels = m.labels().iter().map(|l| format!("{}*", l)).collect();
    let module = FinModule { name: "dual".into(), labels, degrees: m.degrees().to_vec(), action };
    Ok((module, alg))
}

/// Inverse of `dualize_comodule`: recovers coaction coefficients by inverting
/// the pairing in each degree.
pub fn comodule_of_module(n: &FinModule, alg: &FiniteAlgebra, spec: &DualSpec, window: u32) -> Result<ComoduleWindow, ModuleError> {
    let mut cache = ChiCache::new();
    let mut blocks = BTreeMap::new();
    let mut coaction = vec![Vec::new(); n.dim()];
    for y in 0..n.dim() {
        for x in 0..n.dim() {
            if n.degree(x) < n.degree(y) {
                continue;
            }
            let d = n.degree(x) - n.degree(y);
            let f = F2Vector::from_bits((0..alg.dim(d)).map(|i| d <= alg.top() && n.act(d, i, y).get(x)));
            let (cols, p) = blocks.entry(d).or_insert_with(|| pairing_block(alg, spec, d, &mut cache));
            let c = p
                .solve(&f)
                .ok()
                .flatten()
                .ok_or_else(|| ModuleError::Window(format!("pairing not invertible in degree {}", d)))?;
            for k in c.iter_ones() {
                coaction[x].push((cols[k], y));
            }
        }
    }
    let labels = n.labels().iter().map(|l| l.strip_suffix('*').unwrap_or(l).into()).collect();
    ComoduleWindow::new(spec.clone(), window, Side::Left, labels, n.degrees().to_vec(), coaction)
        .map_err(|e| ModuleError::Window(format!("{}", e)))
}

/// Outcome of checking M ⊗ (A ⊗_B N) ≅ A ⊗_B (M ⊗ N) in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingReport {
    pub dims: Vec<usize>,
    pub invertible: bool,
    pub equivariant: bool,
}

/// The map m ⊗ (a ⊗ n) ↦ Σ a′ ⊗ (χ(a″)m ⊗ n) through the window of `big`,
/// for B a Hopf subalgebra given by `small`.
pub fn twisting_isomorphism(
    big: &FiniteAlgebra,
    small: &FiniteAlgebra,
    m: &FinModule,
    n: &FinModule,
) -> Result<TwistingReport, ModuleError> {
    let window = big.top();
    let ind_n = induce_parts(big, small, n)?;
    let (ind_n_mod, kept) = ind_n.ambient.quotient(&ind_n.relations);
    let lhs_full = tensor_modules(big, m, &ind_n_mod)?;
    let low = Subspace::span(
        lhs_full.dim(),
        (0..lhs_full.dim()).filter(|&v| lhs_full.degree(v) > window).map(|v| lhs_full.unit_vector(v)),
    );
    let (lhs, lhs_keep) = lhs_full.quotient(&low);
    let m_small = m.restrict(big, small)?;
    let mn = tensor_modules(small, &m_small, n)?;
    let rhs_parts = induce_parts(big, small, &mn)?;
    let (rhs, rhs_keep) = rhs_parts.ambient.quotient(&rhs_parts.relations);
    if lhs.dims() != rhs.dims() {
        return Ok(TwistingReport { dims: lhs.dims(), invertible: false, equivariant: false });
    }
    let to_rhs = |v: &F2Vector| -> F2Vector {
        let r = rhs_parts.relations.reduce(v);
        F2Vector::from_bits(rhs_keep.iter().map(|&k| r.get(k)))
    };
    // pairs in M ⊗ N are indexed x·dim N + y by tensor_modules
    let nn = n.dim();
    let mut images = Vec::with_capacity(lhs.dim());
    for &v in &lhs_keep {
        let (x, k) = (v / ind_n_mod.dim(), v % ind_n_mod.dim());
        let (ad, ai, y) = ind_n.elems[kept[k]];
        let mut out = F2Vector::zeros(rhs_parts.ambient.dim());
        for ((d1, i1), (d2, i2)) in coproduct_indices(big, ad, ai) {
            let chi = antipode_vector(big, d2, i2);
            let mut mx = F2Vector::zeros(m.dim());
            for c in chi.iter_ones() {
                if (d2 as usize) < m.action.len() {
                    mx.add_assign(m.act(d2, c, x));
                }
            }
            for x2 in mx.iter_ones() {
                let pair = x2 * nn + y;
                if d1 + mn.degree(pair) <= window {
                    out.flip(rhs_parts.index[&(d1, i1, pair)]);
                }
            }
        }
        images.push(to_rhs(&out));
    }
    let mat = F2Matrix::from_columns(rhs.dim(), &images);
    let invertible = mat.rank() == lhs.dim();
    let mut equivariant = true;
    for (gd, gi) in big.generators() {
        for (col, img) in images.iter().enumerate() {
            let lhs_act = lhs.act_vector(gd, gi, &lhs.unit_vector(col));
            let mut mapped = F2Vector::zeros(rhs.dim());
            for k in lhs_act.iter_ones() {
                mapped.add_assign(&images[k]);
            }
            if mapped != rhs.act_vector(gd, gi, img) {
                equivariant = false;
            }
        }
    }
    Ok(TwistingReport { dims: lhs.dims(), invertible, equivariant })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_dims() {
        assert_eq!(FiniteAlgebra::a(1).total_dim(), 8);
        assert_eq!(FiniteAlgebra::a(2).total_dim(), 64);
        assert_eq!(FiniteAlgebra::e(1).total_dim(), 4);
        let q = FiniteAlgebra::quotient(&Profile::a(1), &Profile::e(1)).unwrap();
        assert_eq!(q.dims(), vec![1, 0, 1]);
        assert!(matches!(
            FiniteAlgebra::quotient(&Profile::a(1), &Profile::a(0)),
            Err(AlgebraError::NotNormal { .. })
        ));
    }

    #[test]
    fn generators_of_a1() {
        let g = FiniteAlgebra::a(1).generators();
        assert_eq!(g, vec![(1, 0), (2, 0)]);
        let e = FiniteAlgebra::e(1).generators();
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn double_matches_verschiebung() {
        assert!(verschiebung_matches_double(0).unwrap());
        assert!(verschiebung_matches_double(1).unwrap());
    }

    #[test]
    fn resolution_of_k_over_a0() {
        let a0 = FiniteAlgebra::a(0);
        let k = FinModule::trivial(&a0, 0);
        let r = minimal_free_resolution(&a0, &k, 10, 12);
        check_resolution(&a0, &k, &r).unwrap();
        for s in 0..=10 {
            for t in 0..=12 {
                assert_eq!(r.generator_count(s, t), (s == t) as usize);
            }
        }
    }

    #[test]
    fn free_module_has_short_resolution() {
        let a1 = FiniteAlgebra::a(1);
        let f = FinModule::free_module(&a1, &[0, 3], 20);
        f.validate(&a1).unwrap();
        let r = minimal_free_resolution(&a1, &f, 3, 12);
        assert_eq!(r.stages[0].gens, vec![0, 3]);
        assert!(r.stages[1..].iter().all(|s| s.gens.is_empty()));
    }

    #[test]
    fn ext_identity_class() {
        let a1 = FiniteAlgebra::a(1);
        let m = moore_module(&a1);
        m.validate(&a1).unwrap();
        let e = ext_groups(&a1, &m, &m, 1, 4);
        assert!(e.get(&(0, 0)).copied().unwrap_or(0) >= 1);
    }

    #[test]
    fn induced_dims() {
        let big = FiniteAlgebra::truncated(&Profile::full(), 12);
        let a0 = FiniteAlgebra::a(0);
        let k = FinModule::trivial(&a0, 0);
        let q = induce_up(&big, &a0, &k).unwrap();
        q.validate(&big).unwrap();
        // Sq(R) with r₁ even
        let expect: Vec<usize> =
            (0..=12).map(|d| basis_in_degree(&Profile::full(), d).iter().filter(|m| m.r(1) % 2 == 0).count()).collect();
        assert_eq!(q.dims(), expect);
        let free = induce_up(&big, &a0, &FinModule::free_module(&a0, &[0], 1)).unwrap();
        assert_eq!(free.dims(), big.dims());
    }

    #[test]
    fn certificate_for_k() {
        let w = FiniteAlgebra::truncated(&Profile::full(), 12);
        let k = FinModule::trivial(&w, 0);
        let c = hom_to_free_vanishing(&k, &w, 1, &[0]).unwrap();
        assert!(c.holds, "{:?}", c);
        assert_eq!(c.checks[0].witnesses[0].1, "Sq(3,1)");
        let bad = w.degenerate_from(4);
        let c = hom_to_free_vanishing(&FinModule::trivial(&bad, 0), &bad, 1, &[0]).unwrap();
        assert!(!c.holds);
    }

    #[test]
    fn doubling_round_trip() {
        let a1 = FiniteAlgebra::a(1);
        let m = moore_module(&FiniteAlgebra::a(1));
        let (d, dbl) = double_module(&m, &a1, 1);
        d.validate(&dbl).unwrap();
        assert!(d.degrees().iter().all(|x| x % 2 == 0));
        assert_eq!(undouble_module(&d, 1).unwrap(), m);
    }

    #[test]
    fn dual_of_regular_comodule_is_free() {
        let r = crate::comodule::regular_comodule(&DualSpec::full(), 10);
        let (m, alg) = dualize_comodule(&r).unwrap();
        m.validate(&alg).unwrap();
        let unit = r.labels().iter().position(|l| l == "1").unwrap();
        let gen = m.generated_submodule(&alg, &[m.unit_vector(unit)]);
        assert_eq!(gen.dim(), m.dim());
        let back = comodule_of_module(&m, &alg, &DualSpec::full(), 10).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn dualize_round_trip_over_a1() {
        let c = crate::comodule::regular_comodule(&DualSpec::a_dual(1), 6);
        let (m, alg) = dualize_comodule(&c).unwrap();
        assert_eq!(alg, FiniteAlgebra::a(1));
        m.validate(&alg).unwrap();
        assert_eq!(comodule_of_module(&m, &alg, &DualSpec::a_dual(1), 6).unwrap(), c);
    }

    #[test]
    fn twisting_over_a0() {
        let big = FiniteAlgebra::truncated(&Profile::full(), 7);
        let a0 = FiniteAlgebra::a(0);
        let m = moore_module(&big);
        let n = FinModule::trivial(&a0, 0);
        let r = twisting_isomorphism(&big, &a0, &m, &n).unwrap();
        assert!(r.invertible && r.equivariant, "{:?}", r);
    }
}
