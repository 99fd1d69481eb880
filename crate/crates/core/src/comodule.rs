//! Finite graded comodules over monomial quotients of A_*, truncated at a
//! degree window: coaction tables, primitives, primitive sequences,
//! tensor and cotensor products, and spaces of comodule maps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dual_hopf::{dual_coproduct, full_coproduct, ChiCache, DualMonomial, DualPolynomial, DualSpec};
use crate::f2linalg::{F2Matrix, F2Vector, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// μ: M → C ⊗ M
    Left,
    /// μ: M → M ⊗ C
    Right,
}

/// Coaction terms (c, y) of one basis element: c ⊗ y for left comodules,
/// y ⊗ c for right ones.
pub type CoactionTerms = Vec<(DualMonomial, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleWindow {
    coalgebra: DualSpec,
    window: u32,
    side: Side,
    labels: Vec<String>,
    degrees: Vec<u32>,
    coaction: Vec<CoactionTerms>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComoduleError {
    #[error("basis element {label}: counit term (1, itself) missing or wrong")]
    Counit { label: String },
    #[error("basis element {label}: coaction term has degree {found}, expected {expected}")]
    Degree { label: String, expected: u32, found: u32 },
    #[error("basis element {label}: coaction coefficient {monomial} is not in {coalgebra}")]
    Inadmissible { label: String, monomial: String, coalgebra: String },
    #[error("coassociativity fails on basis element {label}")]
    Coassociativity { label: String },
    #[error("basis element {label} has degree {degree} above the window {window}")]
    OutsideWindow { label: String, degree: u32, window: u32 },
    #[error("basis element index {index} out of range")]
    Index { index: usize },
    #[error("coalgebra mismatch: {0} vs {1}")]
    CoalgebraMismatch(String, String),
    #[error("subspace is not a subcomodule")]
    NotSubcomodule,
    #[error("polynomials do not span a subcomodule: {0}")]
    NotClosed(String),
}

fn toggle_term(terms: &mut BTreeMap<(DualMonomial, usize), ()>, c: DualMonomial, y: usize) {
    if terms.remove(&(c, y)).is_none() {
        terms.insert((c, y), ());
    }
}

impl ComoduleWindow {
    /// Builds and validates a comodule.
    pub fn new(
        coalgebra: DualSpec,
        window: u32,
        side: Side,
        labels: Vec<String>,
        degrees: Vec<u32>,
        coaction: Vec<CoactionTerms>,
    ) -> Result<Self, ComoduleError> {
        let m = Self::new_unchecked(coalgebra, window, side, labels, degrees, coaction);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        coalgebra: DualSpec,
        window: u32,
        side: Side,
        labels: Vec<String>,
        degrees: Vec<u32>,
        coaction: Vec<CoactionTerms>,
    ) -> Self {
        let coaction = coaction
            .into_iter()
            .map(|t| {
                let mut acc = BTreeMap::new();
                for (c, y) in t {
                    toggle_term(&mut acc, c, y);
                }
                acc.into_keys().collect()
            })
            .collect();
        ComoduleWindow { coalgebra, window, side, labels, degrees, coaction }
    }

    /// Re-checks counit, degrees, admissibility and coassociativity.
    pub fn validate(&self) -> Result<(), ComoduleError> {
        let n = self.dim();
        for x in 0..n {
            let label = self.labels[x].clone();
            if self.degrees[x] > self.window {
                return Err(ComoduleError::OutsideWindow { label, degree: self.degrees[x], window: self.window });
            }
            let mut has_counit = false;
            for &(c, y) in &self.coaction[x] {
                if y >= n {
                    return Err(ComoduleError::Index { index: y });
                }
                if !self.coalgebra.admits(&c) {
                    return Err(ComoduleError::Inadmissible {
                        label,
                        monomial: format!("{}", c),
                        coalgebra: self.coalgebra.name().into(),
                    });
                }
                if c.degree() + self.degrees[y] != self.degrees[x] {
                    return Err(ComoduleError::Degree {
                        label,
                        expected: self.degrees[x],
                        found: c.degree() + self.degrees[y],
                    });
                }
                if c.is_one() {
                    if y != x {
                        return Err(ComoduleError::Counit { label });
                    }
                    has_counit = true;
                }
            }
            if !has_counit {
                return Err(ComoduleError::Counit { label });
            }
        }
        for x in 0..n {
            if !self.coassociative_at(x) {
                return Err(ComoduleError::Coassociativity { label: self.labels[x].clone() });
            }
        }
        Ok(())
    }

    fn coassociative_at(&self, x: usize) -> bool {
        // Left: (ψ⊗1)μ = (1⊗μ)μ as triples (a, b, z).
        // Right: (μ⊗1)μ = (1⊗ψ)μ as triples (z, a, b) with z ⊗ a ⊗ b.
        let mut lhs: BTreeMap<(DualMonomial, DualMonomial, usize), ()> = BTreeMap::new();
        let mut rhs: BTreeMap<(DualMonomial, DualMonomial, usize), ()> = BTreeMap::new();
        let flip = |m: &mut BTreeMap<(DualMonomial, DualMonomial, usize), ()>, k| {
            if m.remove(&k).is_none() {
                m.insert(k, ());
            }
        };
        for &(c, y) in &self.coaction[x] {
            let psi = dual_coproduct(&c, &self.coalgebra).expect("admissible coefficient");
            for &(a, b) in psi.terms() {
                flip(&mut lhs, (a, b, y));
            }
            for &(c2, z) in &self.coaction[y] {
                match self.side {
                    Side::Left => flip(&mut rhs, (c, c2, z)),
                    Side::Right => flip(&mut rhs, (c2, c, z)),
                }
            }
        }
        lhs == rhs
    }

    pub fn coalgebra(&self) -> &DualSpec {
        &self.coalgebra
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn side(&self) -> Side {
        self.side
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

    pub fn coaction_terms(&self, x: usize) -> &[(DualMonomial, usize)] {
        &self.coaction[x]
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.degrees.iter().copied().max()
    }

    /// Global indices of basis elements of degree `d`.
    pub fn basis_in_degree(&self, d: u32) -> Vec<usize> {
        (0..self.dim()).filter(|&x| self.degrees[x] == d).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        let top = self.window as usize;
        let mut v = vec![0; top + 1];
        for &d in &self.degrees {
            v[d as usize] += 1;
        }
        v
    }

    /// μ(v) grouped by coalgebra monomial, coefficients as vectors over the basis.
    pub fn coact(&self, v: &F2Vector) -> BTreeMap<DualMonomial, F2Vector> {
        let mut out: BTreeMap<DualMonomial, F2Vector> = BTreeMap::new();
        for x in v.iter_ones() {
            for &(c, y) in &self.coaction[x] {
                out.entry(c).or_insert_with(|| F2Vector::zeros(self.dim())).flip(y);
            }
        }
        out.retain(|_, w| !w.is_zero());
        out
    }

    /// μ(v) − 1⊗v.
    pub fn reduced_coact(&self, v: &F2Vector) -> BTreeMap<DualMonomial, F2Vector> {
        let mut m = self.coact(v);
        m.remove(&DualMonomial::one());
        m
    }

    pub fn unit_vector(&self, x: usize) -> F2Vector {
        F2Vector::unit(self.dim(), x)
    }

    /// The comodule with the same basis and trivial coaction x ↦ 1⊗x.
    pub fn trivial(coalgebra: DualSpec, window: u32, labels: Vec<String>, degrees: Vec<u32>) -> Self {
        let coaction = (0..degrees.len()).map(|x| vec![(DualMonomial::one(), x)]).collect();
        ComoduleWindow { coalgebra, window, side: Side::Left, labels, degrees, coaction }
    }

    /// The ground field k in degree 0.
    pub fn ground(coalgebra: DualSpec, window: u32) -> Self {
        Self::trivial(coalgebra, window, vec!["1".into()], vec![0])
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.dim()).all(|x| self.coaction[x] == [(DualMonomial::one(), x)])
    }

    /// Whether `s` (spanned by homogeneous vectors) is closed under the coaction.
    pub fn is_subcomodule(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| self.reduced_coact(v).values().all(|w| s.contains(w)))
    }

    /// Subcomodule generated by the given vectors: span of all coefficient vectors of μ.
    pub fn generated_subcomodule(&self, gens: &[F2Vector]) -> Subspace {
        let mut s = Subspace::zero(self.dim());
        for g in gens {
            s.insert(g.clone());
            for w in self.coact(g).values() {
                s.insert(w.clone());
            }
        }
        s
    }

    /// Per-degree homogeneous basis of a homogeneous subspace.
    fn homogeneous_basis(&self, s: &Subspace) -> Vec<F2Vector> {
        let mut out = Vec::new();
        for d in 0..=self.window {
            let idx = self.basis_in_degree(d);
            if idx.is_empty() {
                continue;
            }
            let part = self.degree_part(s, &idx);
            out.extend(part);
        }
        out
    }

    /// Basis of s ∩ M_d.
    fn degree_part(&self, s: &Subspace, idx: &[usize]) -> Vec<F2Vector> {
        let mut slice = Subspace::zero(self.dim());
        for &i in idx {
            slice.insert(F2Vector::unit(self.dim(), i));
        }
        s.intersection(&slice).basis().to_vec()
    }

    /// The subcomodule on `s`, with basis vectors expressed in the ambient basis.
    pub fn subcomodule(&self, s: &Subspace) -> Result<(ComoduleWindow, Vec<F2Vector>), ComoduleError> {
        if !self.is_subcomodule(s) {
            return Err(ComoduleError::NotSubcomodule);
        }
        let basis = self.homogeneous_basis(s);
        let coords = Coordinates::new(self.dim(), &basis);
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        let mut coaction = Vec::new();
        for v in &basis {
            let d = v.iter_ones().next().map(|i| self.degrees[i]).unwrap();
            labels.push(vector_label(&self.labels, v));
            degrees.push(d);
            let mut terms = Vec::new();
            for (c, w) in self.coact(v) {
                let cw = coords.solve(&w).ok_or(ComoduleError::NotSubcomodule)?;
                for j in cw.iter_ones() {
                    terms.push((c, j));
                }
            }
            coaction.push(terms);
        }
        let m = ComoduleWindow::new_unchecked(self.coalgebra.clone(), self.window, self.side, labels, degrees, coaction);
        Ok((m, basis))
    }

    /// The quotient by a subcomodule; basis = standard vectors off the pivots of `s`.
    pub fn quotient(&self, s: &Subspace) -> Result<(ComoduleWindow, Vec<usize>), ComoduleError> {
        if !self.is_subcomodule(s) {
            return Err(ComoduleError::NotSubcomodule);
        }
        let keep = s.complement_positions();
        let mut pos = vec![usize::MAX; self.dim()];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let mut coaction = Vec::new();
        for &i in &keep {
            let mut terms = Vec::new();
            for (c, w) in self.coact(&self.unit_vector(i)) {
                let r = s.reduce(&w);
                for j in r.iter_ones() {
                    debug_assert!(pos[j] != usize::MAX);
                    terms.push((c, pos[j]));
                }
            }
            coaction.push(terms);
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let degrees = keep.iter().map(|&i| self.degrees[i]).collect();
        let m = ComoduleWindow::new_unchecked(self.coalgebra.clone(), self.window, self.side, labels, degrees, coaction);
        Ok((m, keep))
    }

    /// Pushes the coaction along the quotient map onto `target`, dropping
    /// coefficients that vanish there.
    pub fn corestrict(&self, target: &DualSpec) -> ComoduleWindow {
        let coaction = self
            .coaction
            .iter()
            .map(|t| t.iter().filter(|(c, _)| target.within_bounds(c)).copied().collect())
            .collect();
        ComoduleWindow {
            coalgebra: target.clone(),
            window: self.window,
            side: self.side,
            labels: self.labels.clone(),
            degrees: self.degrees.clone(),
            coaction,
        }
    }

    pub fn with_window(&self, window: u32) -> ComoduleWindow {
        let keep: Vec<usize> = (0..self.dim()).filter(|&x| self.degrees[x] <= window).collect();
        let mut pos = vec![usize::MAX; self.dim()];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        ComoduleWindow {
            coalgebra: self.coalgebra.clone(),
            window,
            side: self.side,
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            degrees: keep.iter().map(|&i| self.degrees[i]).collect(),
            coaction: keep
                .iter()
                .map(|&i| self.coaction[i].iter().map(|&(c, y)| (c, pos[y])).collect())
                .collect(),
        }
    }

    /// Same basis, coaction replaced; used to build mutated controls.
    pub fn with_coaction_unchecked(&self, coaction: Vec<CoactionTerms>) -> ComoduleWindow {
        ComoduleWindow::new_unchecked(
            self.coalgebra.clone(),
            self.window,
            self.side,
            self.labels.clone(),
            self.degrees.clone(),
            coaction,
        )
    }

    /// Whether the coaction has no terms (c, y) with c ≠ 1 and c outside
    /// the coideal of `sub`: i.e. restricted along the quotient onto
    /// `quotient_spec` it is trivial.
    pub fn is_trivial_over(&self, quotient_spec: &DualSpec) -> bool {
        self.corestrict(quotient_spec).is_trivial()
    }
}

fn vector_label(labels: &[String], v: &F2Vector) -> String {
    let parts: Vec<&str> = v.iter_ones().map(|i| labels[i].as_str()).collect();
    parts.join("+")
}

/// Coordinates with respect to a fixed list of independent vectors.
pub(crate) struct Coordinates {
    echelon: Vec<(usize, F2Vector, F2Vector)>,
    k: usize,
}

impl Coordinates {
    pub fn new(ambient: usize, basis: &[F2Vector]) -> Self {
        let k = basis.len();
        let mut echelon: Vec<(usize, F2Vector, F2Vector)> = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(b.len(), ambient);
            let mut v = b.clone();
            let mut tag = F2Vector::unit(k, i);
            for (p, r, t) in &echelon {
                if v.get(*p) {
                    v.add_assign(r);
                    tag.add_assign(t);
                }
            }
            let p = v.first_one().expect("basis vectors must be independent");
            for (_, r, t) in echelon.iter_mut() {
                if r.get(p) {
                    r.add_assign(&v);
                    t.add_assign(&tag);
                }
            }
            echelon.push((p, v, tag));
        }
        Coordinates { echelon, k }
    }

    pub fn solve(&self, w: &F2Vector) -> Option<F2Vector> {
        let mut v = w.clone();
        let mut out = F2Vector::zeros(self.k);
        for (p, r, t) in &self.echelon {
            if v.get(*p) {
                v.add_assign(r);
                out.add_assign(t);
            }
        }
        if v.is_zero() {
            Some(out)
        } else {
            None
        }
    }
}

/// Ascending chain of subcomodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub stages: Vec<Subspace>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    /// Whether the last stage is the whole comodule.
    pub fn exhausts(&self, m: &ComoduleWindow) -> bool {
        self.stages.last().is_some_and(|s| s.dim() == m.dim()) || m.dim() == 0
    }
}

/// Preimage of the primitives of M/S: {v : μ(v) − 1⊗v ∈ C⊗S}.
pub fn primitives_modulo(m: &ComoduleWindow, s: &Subspace) -> Subspace {
    let mut out = s.clone();
    for d in 0..=m.window {
        let idx = m.basis_in_degree(d);
        if idx.is_empty() {
            continue;
        }
        // rows indexed by (c, ambient coordinate), one column per basis element of degree d
        let mut rows: BTreeMap<(DualMonomial, usize), F2Vector> = BTreeMap::new();
        for (col, &x) in idx.iter().enumerate() {
            for (c, w) in m.reduced_coact(&m.unit_vector(x)) {
                let r = s.reduce(&w);
                for j in r.iter_ones() {
                    rows.entry((c, j)).or_insert_with(|| F2Vector::zeros(idx.len())).flip(col);
                }
            }
        }
        let mat = F2Matrix::from_rows(idx.len(), rows.into_values().collect());
        for k in mat.kernel_basis() {
            let mut v = F2Vector::zeros(m.dim());
            for c in k.iter_ones() {
                v.flip(idx[c]);
            }
            out.insert(v);
        }
    }
    out
}

pub fn primitives(m: &ComoduleWindow) -> Subspace {
    primitives_modulo(m, &Subspace::zero(m.dim()))
}

/// M^{[0]} = Prim M, M^{[i]} = preimage of Prim(M/M^{[i−1]}), until it stops growing.
pub fn primitive_sequence(m: &ComoduleWindow) -> Filtration {
    let mut stages = Vec::new();
    let mut cur = Subspace::zero(m.dim());
    loop {
        let next = primitives_modulo(m, &cur);
        if next.dim() == cur.dim() {
            break;
        }
        stages.push(next.clone());
        cur = next;
        if cur.dim() == m.dim() {
            break;
        }
    }
    Filtration { stages }
}

/// The primitive sequence when it exhausts M inside the window.
pub fn is_unipotent(m: &ComoduleWindow) -> Option<Filtration> {
    let f = primitive_sequence(m);
    if f.exhausts(m) {
        Some(f)
    } else {
        None
    }
}

/// Whether the chain is a unipotent filtration: stages are subcomodules,
/// increasing, ending at M, with trivial successive quotients.
pub fn check_unipotent_filtration(m: &ComoduleWindow, f: &Filtration) -> bool {
    let mut prev = Subspace::zero(m.dim());
    for s in &f.stages {
        if !prev.is_subspace_of(s) || !m.is_subcomodule(s) {
            return false;
        }
        for v in s.basis() {
            if !m.reduced_coact(v).values().all(|w| prev.contains(w)) {
                return false;
            }
        }
        prev = s.clone();
    }
    f.exhausts(m)
}

/// Diagonal coaction x⊗y ↦ Σ c c′ ⊗ x′⊗y′, truncated at the smaller window.
pub fn tensor_diagonal(m: &ComoduleWindow, n: &ComoduleWindow) -> Result<ComoduleWindow, ComoduleError> {
    if m.coalgebra != n.coalgebra {
        return Err(ComoduleError::CoalgebraMismatch(m.coalgebra.name().into(), n.coalgebra.name().into()));
    }
    let window = m.window.min(n.window);
    let mut pairs = Vec::new();
    for x in 0..m.dim() {
        for y in 0..n.dim() {
            if m.degrees[x] + n.degrees[y] <= window {
                pairs.push((x, y));
            }
        }
    }
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut coaction = Vec::new();
    for &(x, y) in &pairs {
        labels.push(format!("{}⊗{}", m.labels[x], n.labels[y]));
        degrees.push(m.degrees[x] + n.degrees[y]);
        let mut terms = Vec::new();
        for &(c, x2) in &m.coaction[x] {
            for &(c2, y2) in &n.coaction[y] {
                let cc = c.mul(&c2);
                if m.coalgebra.within_bounds(&cc) {
                    terms.push((cc, index[&(x2, y2)]));
                }
            }
        }
        coaction.push(terms);
    }
    Ok(ComoduleWindow::new_unchecked(m.coalgebra.clone(), window, Side::Left, labels, degrees, coaction))
}

/// Basis c⊗w for admissible c and w ∈ W with deg ≤ window; coaction on c alone.
pub fn extended_comodule(w_degrees: &[u32], w_labels: &[String], q: &DualSpec, window: u32) -> ComoduleWindow {
    let mut index = BTreeMap::new();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    for (j, &wd) in w_degrees.iter().enumerate() {
        for d in wd..=window {
            for c in q.basis_in_degree(d - wd) {
                index.insert((c, j), labels.len());
                labels.push(if w_degrees.len() == 1 && wd == 0 {
                    format!("{}", c)
                } else {
                    format!("{}⊗{}", c, w_labels[j])
                });
                degrees.push(d);
            }
        }
    }
    let mut coaction = vec![Vec::new(); labels.len()];
    for (&(c, j), &k) in &index {
        let psi = dual_coproduct(&c, q).expect("admissible");
        coaction[k] = psi.terms().map(|&(a, b)| (a, index[&(b, j)])).collect();
    }
    ComoduleWindow::new_unchecked(q.clone(), window, Side::Left, labels, degrees, coaction)
}

/// The coalgebra as a left comodule over itself, through degree `window`.
pub fn regular_comodule(q: &DualSpec, window: u32) -> ComoduleWindow {
    extended_comodule(&[0], &["1".into()], q, window)
}

/// The monomial basis of `basis_spec` as a left comodule over the quotient
/// coalgebra `coaction_spec`, using ψ with left factors reduced.
pub fn restricted_regular(basis_spec: &DualSpec, coaction_spec: &DualSpec, window: u32) -> ComoduleWindow {
    regular_comodule(basis_spec, window).corestrict(coaction_spec)
}

/// `basis_spec` as a right comodule over `coaction_spec`: x ↦ Σ x′ ⊗ π(x″).
pub fn regular_right_comodule(basis_spec: &DualSpec, coaction_spec: &DualSpec, window: u32) -> ComoduleWindow {
    let mut index = BTreeMap::new();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    for d in 0..=window {
        for c in basis_spec.basis_in_degree(d) {
            index.insert(c, labels.len());
            labels.push(format!("{}", c));
            degrees.push(d);
        }
    }
    let mut coaction = vec![Vec::new(); labels.len()];
    for (c, &k) in &index {
        let psi = dual_coproduct(c, basis_spec).expect("admissible");
        coaction[k] = psi
            .terms()
            .filter(|(_, b)| coaction_spec.within_bounds(b))
            .map(|&(a, b)| (b, index[&a]))
            .collect();
    }
    ComoduleWindow::new_unchecked(coaction_spec.clone(), window, Side::Right, labels, degrees, coaction)
}

/// Subcomodule of the regular left A_*-comodule (left factors reduced into
/// `coaction_spec`) spanned by the given homogeneous polynomials.
pub fn comodule_from_polynomials(
    polys: &[(String, DualPolynomial)],
    coaction_spec: &DualSpec,
    window: u32,
) -> Result<ComoduleWindow, ComoduleError> {
    // Coordinates of polynomials in their ζ-monomial support, per degree.
    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (k, (_, p)) in polys.iter().enumerate() {
        by_degree.entry(p.degree()).or_default().push(k);
    }
    let mut solvers = BTreeMap::new();
    for (&d, ks) in &by_degree {
        let mut support: Vec<DualMonomial> = ks.iter().flat_map(|&k| polys[k].1.iter().copied()).collect();
        support.sort();
        support.dedup();
        let pos: BTreeMap<DualMonomial, usize> = support.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let vecs: Vec<F2Vector> = ks
            .iter()
            .map(|&k| {
                let mut v = F2Vector::zeros(support.len());
                for m in polys[k].1.iter() {
                    v.flip(pos[m]);
                }
                v
            })
            .collect();
        solvers.insert(d, (pos, Coordinates::new(support.len(), &vecs), ks.clone()));
    }
    let mut coaction = Vec::new();
    for (label, p) in polys {
        let mut per_left: BTreeMap<DualMonomial, DualPolynomial> = BTreeMap::new();
        for (r, left) in full_coproduct(p).by_right() {
            for a in left.reduce(coaction_spec).iter() {
                per_left.entry(*a).or_insert_with(|| DualPolynomial::zero(r.degree())).toggle(r);
            }
        }
        let mut out = Vec::new();
        for (a, right) in per_left {
            if right.is_zero() {
                continue;
            }
            let Some((pos, coords, ks)) = solvers.get(&right.degree()) else {
                return Err(ComoduleError::NotClosed(format!("{}: nothing in degree {}", label, right.degree())));
            };
            let mut v = F2Vector::zeros(pos.len());
            for m in right.iter() {
                let Some(&i) = pos.get(m) else {
                    return Err(ComoduleError::NotClosed(format!("{}: {} outside span", label, right)));
                };
                v.flip(i);
            }
            let x = coords
                .solve(&v)
                .ok_or_else(|| ComoduleError::NotClosed(format!("{}: {} outside span", label, right)))?;
            for j in x.iter_ones() {
                out.push((a, ks[j]));
            }
        }
        coaction.push(out);
    }
    let labels = polys.iter().map(|(l, _)| l.clone()).collect();
    let degrees = polys.iter().map(|(_, p)| p.degree()).collect();
    ComoduleWindow::new(coaction_spec.clone(), window, Side::Left, labels, degrees, coaction)
}

/// ^{≤k} A^{(s)}_*: span of the ξ-monomials ξ^{2^s E} with Σ eᵢ ≤ k, as a left
/// comodule over `coaction_spec`. Labels use the ξ exponents.
pub fn xi_bounded_comodule(s: u32, k: u32, coaction_spec: &DualSpec, window: u32) -> Result<ComoduleWindow, ComoduleError> {
    let mut cache = ChiCache::new();
    let base = DualSpec::full();
    let mut polys = Vec::new();
    for d in 0..=window {
        if d % (1 << s) != 0 {
            continue;
        }
        for e in crate::dual_hopf::sub_basis_in_degree(&base, d >> s, Some(k)) {
            let p = cache.xi_monomial(&e).frobenius(s);
            polys.push((xi_label(&e, s), p));
        }
    }
    comodule_from_polynomials(&polys, coaction_spec, window)
}

pub fn xi_label(e: &DualMonomial, s: u32) -> String {
    if e.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for i in 1..=crate::dual_hopf::GENS {
        let x = e.e(i) as u32;
        if x == 0 {
            continue;
        }
        let p = x << s;
        parts.push(if p == 1 { format!("xi{}", i) } else { format!("xi{}^{}", i, p) });
    }
    parts.join("*")
}

/// Graded subspace of M ⊗ N (right ⊗ left) on which μ_M⊗1 = 1⊗μ_N.
#[derive(Clone, Debug)]
pub struct CotensorResult {
    pub pairs: Vec<(usize, usize)>,
    pub pair_degrees: Vec<u32>,
    pub space: Subspace,
}

impl CotensorResult {
    pub fn dims(&self, window: u32) -> Vec<usize> {
        let mut v = vec![0; window as usize + 1];
        for b in self.space.basis() {
            let d = self.pair_degrees[b.first_one().unwrap()];
            v[d as usize] += 1;
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn cotensor(m: &ComoduleWindow, n: &ComoduleWindow) -> Result<CotensorResult, ComoduleError> {
    if m.coalgebra != n.coalgebra {
        return Err(ComoduleError::CoalgebraMismatch(m.coalgebra.name().into(), n.coalgebra.name().into()));
    }
    assert_eq!(m.side, Side::Right, "first factor must be a right comodule");
    assert_eq!(n.side, Side::Left, "second factor must be a left comodule");
    let window = m.window.min(n.window);
    let mut pairs = Vec::new();
    let mut pair_degrees = Vec::new();
    for x in 0..m.dim() {
        for y in 0..n.dim() {
            let d = m.degrees[x] + n.degrees[y];
            if d <= window {
                pairs.push((x, y));
                pair_degrees.push(d);
            }
        }
    }
    let mut space = Subspace::zero(pairs.len());
    for d in 0..=window {
        let cols: Vec<usize> = (0..pairs.len()).filter(|&k| pair_degrees[k] == d).collect();
        if cols.is_empty() {
            continue;
        }
        // coordinates (x, c, y) of x⊗c⊗y
        let mut rows: BTreeMap<(usize, DualMonomial, usize), F2Vector> = BTreeMap::new();
        for (col, &k) in cols.iter().enumerate() {
            let (x, y) = pairs[k];
            for &(c, x2) in &m.coaction[x] {
                rows.entry((x2, c, y)).or_insert_with(|| F2Vector::zeros(cols.len())).flip(col);
            }
            for &(c, y2) in &n.coaction[y] {
                rows.entry((x, c, y2)).or_insert_with(|| F2Vector::zeros(cols.len())).flip(col);
            }
        }
        let mat = F2Matrix::from_rows(cols.len(), rows.into_values().collect());
        for kv in mat.kernel_basis() {
            let mut v = F2Vector::zeros(pairs.len());
            for c in kv.iter_ones() {
                v.flip(cols[c]);
            }
            space.insert(v);
        }
    }
    Ok(CotensorResult { pairs, pair_degrees, space })
}

/// A degree-shifting linear map f: M_d → N_{d+shift}; `images[x]` is f(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleMap {
    pub shift: i32,
    pub images: Vec<F2Vector>,
}

/// Whether f satisfies μ_N ∘ f = (1⊗f) ∘ μ_M exactly.
pub fn is_comodule_map(m: &ComoduleWindow, n: &ComoduleWindow, f: &ComoduleMap) -> bool {
    for x in 0..m.dim() {
        let lhs = n.coact(&f.images[x]);
        let mut rhs: BTreeMap<DualMonomial, F2Vector> = BTreeMap::new();
        for &(c, y) in &m.coaction[x] {
            let c = if n.coalgebra.within_bounds(&c) { c } else { continue };
            if f.images[y].is_zero() {
                continue;
            }
            rhs.entry(c).or_insert_with(|| F2Vector::zeros(n.dim())).add_assign(&f.images[y]);
        }
        rhs.retain(|_, v| !v.is_zero());
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Result of computing maps of one shift from a source window into a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpaceReport {
    pub shift: i32,
    /// Degrees of the source whose images are reported.
    pub window: u32,
    /// Highest source degree whose equations were imposed.
    pub extended_to: u32,
    /// Dimension of the restriction to the window of the maps defined
    /// through `extended_to`; an upper bound for genuine maps, exact zero
    /// when it reaches 0.
    pub dim: usize,
    /// (source degree processed, restricted dimension) after each step.
    pub trace: Vec<(u32, usize)>,
    /// A nonzero map restricted to the window, when `dim > 0`.
    pub witness: Option<ComoduleMap>,
}

/// Comodule maps of a fixed shift from `source` to `target`, solved degree by
/// degree through `extend_to`; reports the dimension of their restriction to
/// source degrees ≤ `window`. Stops early once that dimension is 0.
///
/// For a finite window-complete source, `extend_to` = its top degree gives
/// the exact map space.
pub fn extendable_map_space(
    source: &ComoduleWindow,
    target: &ComoduleWindow,
    shift: i32,
    window: u32,
    extend_to: u32,
) -> MapSpaceReport {
    assert_eq!(source.side, Side::Left);
    assert_eq!(target.side, Side::Left);
    let target_spec = target.coalgebra.clone();
    let mut offsets = vec![usize::MAX; source.dim()];
    let mut target_slots: Vec<Vec<usize>> = vec![Vec::new(); source.dim()];
    let mut total = 0usize;
    let mut window_end = 0usize;
    let mut solutions: Vec<F2Vector> = Vec::new();
    let mut trace = Vec::new();
    let mut last_dim = 0usize;
    let extend_to = extend_to.min(source.window);
    for d in 0..=extend_to {
        let xs = source.basis_in_degree(d);
        let td = d as i64 + shift as i64;
        // new unknowns
        let start = total;
        for &x in &xs {
            offsets[x] = total;
            target_slots[x] = if td < 0 || td > target.window as i64 { Vec::new() } else { target.basis_in_degree(td as u32) };
            total += target_slots[x].len();
        }
        if d <= window {
            window_end = total;
        }
        let added = total - start;
        for s in solutions.iter_mut() {
            *s = s.concat(&F2Vector::zeros(added));
        }
        for k in start..total {
            solutions.push(F2Vector::unit(total, k));
        }
        // equations from each x in degree d
        if !xs.is_empty() && !solutions.is_empty() {
            let mut rows: BTreeMap<(usize, DualMonomial, usize), F2Vector> = BTreeMap::new();
            let ncols = solutions.len();
            for (col, sol) in solutions.iter().enumerate() {
                for &x in &xs {
                    let fx = image_of(sol, offsets[x], &target_slots[x], target.dim());
                    // μ_N(f(x)) − 1⊗f(x)
                    for (c, w) in target.reduced_coact(&fx) {
                        for j in w.iter_ones() {
                            rows.entry((x, c, j)).or_insert_with(|| F2Vector::zeros(ncols)).flip(col);
                        }
                    }
                    // − Σ_{c≠1} c ⊗ f(y)
                    for &(c, y) in &source.coaction[x] {
                        if c.is_one() || !target_spec.within_bounds(&c) {
                            continue;
                        }
                        let fy = image_of(sol, offsets[y], &target_slots[y], target.dim());
                        for j in fy.iter_ones() {
                            rows.entry((x, c, j)).or_insert_with(|| F2Vector::zeros(ncols)).flip(col);
                        }
                    }
                }
            }
            rows.retain(|_, v| !v.is_zero());
            if !rows.is_empty() {
                let mat = F2Matrix::from_rows(ncols, rows.into_values().collect());
                let kernel = mat.kernel_basis();
                solutions = kernel
                    .iter()
                    .map(|k| {
                        let mut v = F2Vector::zeros(total);
                        for c in k.iter_ones() {
                            v.add_assign(&solutions[c]);
                        }
                        v
                    })
                    .collect();
            }
        }
        let restricted = Subspace::span(window_end, solutions.iter().map(|s| s.slice(0, window_end)));
        last_dim = restricted.dim();
        trace.push((d, last_dim));
        if d >= window && last_dim == 0 {
            return MapSpaceReport { shift, window, extended_to: d, dim: 0, trace, witness: None };
        }
    }
    let witness = solutions.iter().find(|s| !s.slice(0, window_end).is_zero()).map(|s| {
        let images = (0..source.dim())
            .map(|x| {
                if offsets[x] == usize::MAX || source.degrees[x] > window {
                    F2Vector::zeros(target.dim())
                } else {
                    image_of(s, offsets[x], &target_slots[x], target.dim())
                }
            })
            .collect();
        ComoduleMap { shift, images }
    });
    MapSpaceReport { shift, window, extended_to: extend_to, dim: last_dim, trace, witness }
}

fn image_of(sol: &F2Vector, offset: usize, slots: &[usize], n: usize) -> F2Vector {
    let mut v = F2Vector::zeros(n);
    for (k, &j) in slots.iter().enumerate() {
        if sol.get(offset + k) {
            v.flip(j);
        }
    }
    v
}

/// Exact map space between finite comodules for one shift.
pub fn cohom(m: &ComoduleWindow, n: &ComoduleWindow, shift: i32) -> Vec<ComoduleMap> {
    let top = m.top_degree().unwrap_or(0);
    let mut offsets = vec![usize::MAX; m.dim()];
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); m.dim()];
    let mut total = 0;
    for d in 0..=top {
        for x in m.basis_in_degree(d) {
            offsets[x] = total;
            let td = d as i64 + shift as i64;
            slots[x] = if td < 0 || td > n.window as i64 { Vec::new() } else { n.basis_in_degree(td as u32) };
            total += slots[x].len();
        }
    }
    let mut rows: BTreeMap<(usize, DualMonomial, usize), F2Vector> = BTreeMap::new();
    for x in 0..m.dim() {
        for (k, &j) in slots[x].iter().enumerate() {
            let var = offsets[x] + k;
            for (c, w) in n.reduced_coact(&n.unit_vector(j)) {
                for t in w.iter_ones() {
                    rows.entry((x, c, t)).or_insert_with(|| F2Vector::zeros(total)).flip(var);
                }
            }
        }
        for &(c, y) in &m.coaction[x] {
            if c.is_one() || !n.coalgebra.within_bounds(&c) {
                continue;
            }
            for (k, &j) in slots[y].iter().enumerate() {
                rows.entry((x, c, j)).or_insert_with(|| F2Vector::zeros(total)).flip(offsets[y] + k);
            }
        }
    }
    let mat = F2Matrix::from_rows(total, rows.into_values().collect());
    mat.kernel_basis()
        .into_iter()
        .map(|sol| ComoduleMap {
            shift,
            images: (0..m.dim()).map(|x| image_of(&sol, offsets[x], &slots[x], n.dim())).collect(),
        })
        .collect()
}

/// Seeded random comodule of bounded dimension, built as a subquotient of an
/// extended comodule A_* ⊗ W, together with the filtration inherited from
/// the degree of the A_* factor (a unipotent filtration) and a random
/// subcomodule for short exact sequences.
#[derive(Clone, Debug)]
pub struct RandomComodule {
    pub seed: u64,
    pub comodule: ComoduleWindow,
    pub filtration: Filtration,
    pub sub: Subspace,
}

pub fn random_comodule(seed: u64, max_dim: usize) -> RandomComodule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = DualSpec::full();
    loop {
        let ngen = rng.gen_range(1..=2usize);
        let w_degrees: Vec<u32> = (0..ngen).map(|_| rng.gen_range(0..=2u32)).collect();
        let w_labels: Vec<String> = (0..ngen).map(|i| format!("w{}", i)).collect();
        let window = 8;
        let ext = extended_comodule(&w_degrees, &w_labels, &spec, window);
        // coalgebra-degree filtration on the extended comodule
        let coalgebra_degree: Vec<u32> = (0..ext.dim())
            .map(|x| ext.degree(x) - w_degrees[w_index(&ext.labels()[x], ngen)])
            .collect();
        let pick = |rng: &mut ChaCha8Rng| -> F2Vector {
            let d = rng.gen_range(1..=7u32);
            let idx = ext.basis_in_degree(d);
            let mut v = F2Vector::zeros(ext.dim());
            for &i in &idx {
                if rng.gen_bool(0.5) {
                    v.flip(i);
                }
            }
            if v.is_zero() && !idx.is_empty() {
                v.flip(idx[0]);
            }
            v
        };
        let ngens = rng.gen_range(1..=2usize);
        let gens: Vec<F2Vector> = (0..ngens).map(|_| pick(&mut rng)).collect();
        let big = ext.generated_subcomodule(&gens);
        if big.dim() == 0 {
            continue;
        }
        // kill a random subcomodule generated by one element of `big`
        let killer = if rng.gen_bool(0.5) {
            let b = big.basis();
            let mut v = F2Vector::zeros(ext.dim());
            let d = ext.degree(b[rng.gen_range(0..b.len())].first_one().unwrap());
            for x in b.iter().filter(|x| ext.degree(x.first_one().unwrap()) == d) {
                if rng.gen_bool(0.5) {
                    v.add_assign(x);
                }
            }
            ext.generated_subcomodule(&[v])
        } else {
            Subspace::zero(ext.dim())
        };
        if big.dim() - killer.dim() > max_dim || big.dim() == killer.dim() {
            continue;
        }
        let (sub_m, sub_basis) = ext.subcomodule(&big).expect("generated subcomodule");
        let sub_coords = Coordinates::new(ext.dim(), &sub_basis);
        let killer_in_sub = Subspace::span(sub_m.dim(), killer.basis().iter().map(|v| sub_coords.solve(v).unwrap()));
        let (m, keep) = sub_m.quotient(&killer_in_sub).expect("subcomodule");
        let top = coalgebra_degree.iter().copied().max().unwrap_or(0);
        let mut stages = Vec::new();
        for j in 0..=top {
            let fj = Subspace::span(
                ext.dim(),
                (0..ext.dim()).filter(|&x| coalgebra_degree[x] <= j).map(|x| ext.unit_vector(x)),
            );
            let in_sub = fj.intersection(&big);
            let image = Subspace::span(
                m.dim(),
                in_sub.basis().iter().map(|v| {
                    let c = sub_coords.solve(v).unwrap();
                    let r = killer_in_sub.reduce(&c);
                    F2Vector::from_bits(keep.iter().map(|&i| r.get(i)))
                }),
            );
            if stages.last().is_none_or(|s: &Subspace| s.dim() < image.dim()) {
                stages.push(image);
            }
        }
        let filtration = Filtration { stages };
        let sub_gen = {
            let mut v = F2Vector::zeros(m.dim());
            for i in 0..m.dim() {
                if rng.gen_bool(0.3) && m.degree(i) == m.degree(0) {
                    v.flip(i);
                }
            }
            if v.is_zero() {
                v.flip(rng.gen_range(0..m.dim()));
            }
            v
        };
        let sub = m.generated_subcomodule(&[sub_gen]);
        return RandomComodule { seed, comodule: m, filtration, sub };
    }
}

fn w_index(label: &str, ngen: usize) -> usize {
    if ngen == 1 {
        return 0;
    }
    label.rsplit("⊗w").next().and_then(|s| s.parse().ok()).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn three_dim_extension() -> ComoduleWindow {
        // span{1, ζ₁} ⊕ k[2]
        let z1 = DualMonomial::zeta(1);
        ComoduleWindow::new(
            DualSpec::full(),
            4,
            Side::Left,
            vec!["x0".into(), "x1".into(), "y".into()],
            vec![0, 1, 2],
            vec![
                vec![(DualMonomial::one(), 0)],
                vec![(DualMonomial::one(), 1), (z1, 0)],
                vec![(DualMonomial::one(), 2)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn primitives_examples() {
        let k = ComoduleWindow::trivial(DualSpec::full(), 3, vec!["a".into(), "b".into()], vec![0, 2]);
        assert_eq!(primitives(&k).dim(), 2);
        let m = ComoduleWindow::new(
            DualSpec::full(),
            1,
            Side::Left,
            vec!["1".into(), "z1".into()],
            vec![0, 1],
            vec![vec![(DualMonomial::one(), 0)], vec![(DualMonomial::one(), 1), (DualMonomial::zeta(1), 0)]],
        )
        .unwrap();
        let p = primitives(&m);
        assert_eq!(p.dim(), 1);
        assert!(p.contains(&F2Vector::unit(2, 0)));
    }

    #[test]
    fn primitive_sequence_examples() {
        let k = ComoduleWindow::ground(DualSpec::full(), 0);
        assert_eq!(primitive_sequence(&k).len(), 1);
        let m = three_dim_extension();
        let f = primitive_sequence(&m);
        assert_eq!(f.len(), 2);
        assert_eq!(f.stages[0].dim(), 2);
        assert!(check_unipotent_filtration(&m, &f));
    }

    #[test]
    fn regular_comodule_is_valid() {
        for spec in [DualSpec::full(), DualSpec::a_dual(1), DualSpec::exterior(), DualSpec::sub_powers(1)] {
            let r = regular_comodule(&spec, 10);
            r.validate().unwrap();
            // comodule primitives of the regular comodule: just 1
            assert_eq!(primitives(&r).dim(), 1, "{}", spec);
        }
    }

    #[test]
    fn mutated_table_is_rejected() {
        let m = three_dim_extension();
        let mut coaction: Vec<CoactionTerms> = (0..3).map(|x| m.coaction_terms(x).to_vec()).collect();
        coaction[2].push((DualMonomial::zeta(1), 1));
        let bad = ComoduleWindow::new(DualSpec::full(), 4, Side::Left, m.labels().to_vec(), m.degrees().to_vec(), coaction);
        assert!(matches!(bad, Err(ComoduleError::Coassociativity { .. })));
        let mut coaction: Vec<CoactionTerms> = (0..3).map(|x| m.coaction_terms(x).to_vec()).collect();
        coaction[1].retain(|(c, _)| !c.is_one());
        let bad = ComoduleWindow::new(DualSpec::full(), 4, Side::Left, m.labels().to_vec(), m.degrees().to_vec(), coaction);
        assert!(matches!(bad, Err(ComoduleError::Counit { .. })));
    }

    #[test]
    fn tensor_units_and_symmetry() {
        let m = three_dim_extension();
        let k = ComoduleWindow::ground(DualSpec::full(), 4);
        let mk = tensor_diagonal(&m, &k).unwrap();
        assert_eq!(mk.dim(), m.dim());
        for x in 0..m.dim() {
            assert_eq!(mk.coaction_terms(x), m.coaction_terms(x));
        }
        let km = tensor_diagonal(&k, &m).unwrap();
        assert_eq!(km.dims(), m.dims());
        let a = regular_comodule(&DualSpec::full(), 2);
        let ab = tensor_diagonal(&a, &m).unwrap();
        let ba = tensor_diagonal(&m, &a).unwrap();
        ab.validate().unwrap();
        // relabel (x, y) ↦ (y, x) and compare coaction tables
        let pos: BTreeMap<String, usize> = ba.labels().iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let swap = |l: &str| {
            let (x, y) = l.split_once('⊗').unwrap();
            format!("{}⊗{}", y, x)
        };
        for i in 0..ab.dim() {
            let j = pos[&swap(&ab.labels()[i])];
            let mut lhs: Vec<(DualMonomial, usize)> =
                ab.coaction_terms(i).iter().map(|&(c, y)| (c, pos[&swap(&ab.labels()[y])])).collect();
            let mut rhs = ba.coaction_terms(j).to_vec();
            lhs.sort();
            rhs.sort();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cotensor_examples() {
        let full = DualSpec::full();
        let a_right = regular_right_comodule(&full, &full, 6);
        a_right.validate().unwrap();
        let k = ComoduleWindow::ground(full.clone(), 6);
        let r = cotensor(&a_right, &k).unwrap();
        assert_eq!(r.dims(6), vec![1, 0, 0, 0, 0, 0, 0]);
        let q = full.quotient(&DualSpec::p(1, 0)).unwrap();
        let a_right_q = regular_right_comodule(&full, &q, 10);
        a_right_q.validate().unwrap();
        let kq = ComoduleWindow::ground(q.clone(), 10);
        let r = cotensor(&a_right_q, &kq).unwrap();
        assert_eq!(r.dims(10), vec![1; 11]);
        for b in r.space.basis() {
            let (x, _) = r.pairs[b.first_one().unwrap()];
            assert_eq!(b.count_ones(), 1);
            let label = &a_right_q.labels()[x];
            assert!(label == "1" || label.starts_with("z1") && !label.contains('*'), "{}", label);
        }
    }

    #[test]
    fn cotensor_with_k_trivial_comodule() {
        // H = A(1)_*, K = E(1)_*, K\\H = k□_K H = span{1, ζ₁²}.
        let h = DualSpec::a_dual(1);
        let kq = DualSpec::e_dual(1);
        let h_left = regular_comodule(&h, 6);
        let twisted = h_left.corestrict(&kq);
        let kh = primitives(&twisted);
        assert_eq!(kh.dim(), 2);
        let (khl, _) = h_left.subcomodule(&kh).unwrap();
        assert!(khl.is_trivial_over(&kq));
        // K\\H as a right H-comodule
        let right_full = regular_right_comodule(&h, &h, 6);
        let kh_right = {
            let idx: Vec<usize> = (0..right_full.dim())
                .filter(|&i| right_full.labels()[i] == "1" || right_full.labels()[i] == "z1^2")
                .collect();
            let s = Subspace::span(right_full.dim(), idx.iter().map(|&i| F2Vector::unit(right_full.dim(), i)));
            right_full.subcomodule(&s).unwrap().0
        };
        for l in [ComoduleWindow::ground(h.clone(), 6), khl.clone()] {
            let r = cotensor(&kh_right, &l).unwrap();
            assert_eq!(r.dim(), l.dim());
        }
    }

    #[test]
    fn cohom_examples() {
        let m = three_dim_extension();
        let maps = cohom(&m, &m, 0);
        assert!(maps.iter().all(|f| is_comodule_map(&m, &m, f)));
        let id = ComoduleMap { shift: 0, images: (0..3).map(|x| F2Vector::unit(3, x)).collect() };
        assert!(is_comodule_map(&m, &m, &id));
        let span = Subspace::span(
            maps.iter().map(|f| f.images.len() * 3).next().unwrap_or(0),
            maps.iter().map(|f| f.images.iter().fold(F2Vector::zeros(0), |a, v| a.concat(v))),
        );
        let id_flat = id.images.iter().fold(F2Vector::zeros(0), |a, v| a.concat(v));
        assert!(span.contains(&id_flat));
        let k = ComoduleWindow::ground(DualSpec::full(), 6);
        let a = regular_comodule(&DualSpec::full(), 6);
        assert_eq!(cohom(&k, &a, 0).len(), 1);
    }

    #[test]
    fn truncated_window_has_spurious_maps() {
        // maps A_* → k of shift −3 exist on a truncated window, but none extend
        let a = regular_comodule(&DualSpec::full(), 20);
        let k = ComoduleWindow::ground(DualSpec::full(), 20);
        let naive = cohom(&a.with_window(3), &k, -3);
        assert!(!naive.is_empty());
        let r = extendable_map_space(&a, &k, -3, 3, 20);
        assert_eq!(r.dim, 0);
    }

    #[test]
    fn extended_primitives_contain_w() {
        let w = [0u32, 2];
        let labels = ["a".to_string(), "b".to_string()];
        let e = extended_comodule(&w, &labels, &DualSpec::full(), 6);
        e.validate().unwrap();
        let p = primitives(&e);
        for (x, l) in e.labels().iter().enumerate() {
            if l.starts_with("1⊗") {
                assert!(p.contains(&e.unit_vector(x)));
            }
        }
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn random_samples_are_valid() {
        for seed in 0..20 {
            let r = random_comodule(seed, 12);
            r.comodule.validate().unwrap();
            assert!(r.comodule.dim() <= 12);
            assert!(check_unipotent_filtration(&r.comodule, &r.filtration), "seed {}", seed);
            assert!(r.comodule.is_subcomodule(&r.sub));
        }
    }

    #[test]
    fn xi_bounded_pieces() {
        let m = xi_bounded_comodule(0, 1, &DualSpec::full(), 8).unwrap();
        assert_eq!(m.dims(), vec![1, 1, 0, 1, 0, 0, 0, 1, 0]);
        // ψξₙ = Σ ξ_{n−i}^{2^i} ⊗ ξᵢ links ξ₃ → ξ₂ → ξ₁ → 1
        let f = primitive_sequence(&m);
        assert_eq!(f.len(), 4);
        let m2 = xi_bounded_comodule(1, 2, &DualSpec::sub_powers(1), 12).unwrap();
        m2.validate().unwrap();
        assert!(is_unipotent(&m2).is_some());
    }

    #[test]
    fn regular_windows_need_longer_primitive_sequences() {
        let lens: Vec<usize> =
            [1u32, 3, 7, 15].iter().map(|&d| primitive_sequence(&regular_comodule(&DualSpec::full(), d)).len()).collect();
        assert!(lens.windows(2).all(|w| w[0] < w[1]), "{:?}", lens);
    }
}
