//! Inverse systems `I^⊥` of `𝔪`-primary ideals, built degree by degree by
//! integration, together with their contraction matrices.

use thiserror::Error;

use crate::apolarity::{contract_var, dual_ring, InverseSystemBasis};
use crate::arith::{LinearSpan, Monomial, Poly, QMatrix, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InverseSystemError {
    #[error("no stabilization up to degree {cap}; the ideal is probably not m-primary")]
    NotMPrimary { cap: u32 },
    #[error("the ideal contains a unit, so the inverse system is zero")]
    UnitIdeal,
    #[error("the ideal has no generators")]
    NoGenerators,
    #[error("generators use {found} variables, expected {expected}")]
    VariableCount { expected: usize, found: usize },
    #[error("basis element {index} is linearly dependent on the previous ones")]
    Dependent { index: usize },
    #[error("x{var} contracts basis element {index} outside the span")]
    NotClosed { var: usize, index: usize },
    #[error("contraction matrices do not commute")]
    NonCommuting,
}

/// A basis `b_1,…,b_t` of a contraction-closed subspace of `S` with the
/// matrices `U_k` satisfying `x_k ∘ b_i = Σ_j (U_k)_{j,i} b_j`.
#[derive(Clone, Debug)]
pub struct DualBasisWithContractions {
    span: LinearSpan,
    pub(crate) u: Vec<QMatrix>,
}

impl DualBasisWithContractions {
    /// The subspace spanned by `1`.
    pub fn unit(ring: &Ring) -> Self {
        let mut span = LinearSpan::new(ring);
        span.insert(&Poly::one(ring));
        DualBasisWithContractions { span, u: vec![QMatrix::zeros(1, 1); ring.nvars()] }
    }

    /// Takes `basis` as given (in order) and computes the contraction
    /// matrices, checking independence and closure.
    pub fn from_basis(ring: &Ring, basis: &[Poly]) -> Result<Self, InverseSystemError> {
        let mut span = LinearSpan::new(ring);
        for (i, b) in basis.iter().enumerate() {
            if span.insert(b).is_none() {
                return Err(InverseSystemError::Dependent { index: i });
            }
        }
        let mut out = DualBasisWithContractions { span, u: Vec::new() };
        out.u = out.compute_matrices(0, &vec![QMatrix::zeros(0, 0); ring.nvars()])?;
        Ok(out)
    }

    /// Matrices for the whole basis, reusing the first `known` columns of
    /// `prev`.
    fn compute_matrices(&self, known: usize, prev: &[QMatrix]) -> Result<Vec<QMatrix>, InverseSystemError> {
        let t = self.dim();
        let n = self.nvars();
        let mut out = Vec::with_capacity(n);
        for (k, p) in prev.iter().enumerate().take(n) {
            let mut m = p.resized(t, t);
            for (i, b) in self.basis().iter().enumerate().skip(known) {
                let image = contract_var(k, b);
                let coords = self
                    .span
                    .coordinates(&image)
                    .ok_or(InverseSystemError::NotClosed { var: k + 1, index: i })?;
                for (j, c) in coords.into_iter().enumerate() {
                    m.set(j, i, c);
                }
            }
            out.push(m);
        }
        Ok(out)
    }

    pub fn ring(&self) -> &Ring {
        self.span.ring()
    }

    pub fn nvars(&self) -> usize {
        self.ring().nvars()
    }

    pub fn basis(&self) -> &[Poly] {
        self.span.generators()
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn span(&self) -> &LinearSpan {
        &self.span
    }

    /// `U_k` for `x_k`, with `k` starting at 0.
    pub fn contraction_matrix(&self, k: usize) -> &QMatrix {
        &self.u[k]
    }

    pub fn contraction_matrices(&self) -> &[QMatrix] {
        &self.u
    }

    pub fn coordinates(&self, p: &Poly) -> Option<Vec<Rational>> {
        self.span.coordinates(p)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.span.contains(p)
    }

    pub fn commute(&self) -> bool {
        let n = self.u.len();
        (0..n).all(|k| (k + 1..n).all(|l| &self.u[k] * &self.u[l] == &self.u[l] * &self.u[k]))
    }

    /// Re-derives every contraction from the polynomials and compares.
    pub fn verify(&self) -> bool {
        match self.compute_matrices(0, &vec![QMatrix::zeros(0, 0); self.nvars()]) {
            Ok(m) => m == self.u && self.commute(),
            Err(_) => false,
        }
    }

    pub fn to_inverse_system(&self) -> InverseSystemBasis {
        InverseSystemBasis::from_polys(self.ring(), self.basis(), true)
    }

    /// Appends new elements (already known to keep the span closed).
    pub(crate) fn extended(&self, new: &[Poly]) -> Result<Self, InverseSystemError> {
        let known = self.dim();
        let mut span = self.span.clone();
        for (i, p) in new.iter().enumerate() {
            if span.insert(p).is_none() {
                return Err(InverseSystemError::Dependent { index: known + i });
            }
        }
        let mut out = DualBasisWithContractions { span, u: Vec::new() };
        out.u = out.compute_matrices(known, &self.u)?;
        Ok(out)
    }
}

/// Candidate elements of `∫_𝔪 M` (optionally also orthogonal to `orth`),
/// one per kernel vector of the linear conditions.
///
/// Unknowns `λ^k_j` multiply `∫_k b_j |_{y_{k+1}=…=y_n=0}`, ordered by `k`
/// then `j`; kernel vectors are sorted by the position of their first
/// nonzero entry (stably).
pub(crate) fn integration_candidates(d: &DualBasisWithContractions, orth: &[Poly]) -> Vec<Poly> {
    let n = d.nvars();
    let t = d.dim();
    let ring = d.ring();
    let mut unknowns: Vec<(usize, usize)> = Vec::with_capacity(n * t);
    for k in 0..n {
        for j in 0..t {
            unknowns.push((k, j));
        }
    }
    let col = |k: usize, j: usize| k * t + j;
    let prims: Vec<Poly> = unknowns
        .iter()
        .map(|&(k, j)| {
            let zeros: Vec<(usize, Rational)> = (k + 1..n).map(|i| (i, Rational::zero())).collect();
            d.basis()[j].substitute(&zeros).mul_monomial(&Monomial::var(k, 1))
        })
        .collect();

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            // U_k λ_l − U_l λ_k = 0
            for i in 0..t {
                let mut row = vec![Rational::zero(); n * t];
                for j in 0..t {
                    let a = d.u[k].get(i, j);
                    if !a.is_zero() {
                        row[col(l, j)] += a;
                    }
                    let b = d.u[l].get(i, j);
                    if !b.is_zero() {
                        row[col(k, j)] -= b;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    for f in orth {
        // (f ∘ Λ)(0) is the pairing of f with Λ's coefficients
        let row: Vec<Rational> = prims
            .iter()
            .map(|p| {
                let mut acc = Rational::zero();
                for (m, c) in f.terms() {
                    let x = p.coefficient(m);
                    if !x.is_zero() {
                        acc += &(c * &x);
                    }
                }
                acc
            })
            .collect();
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    }
    let system = if rows.is_empty() { QMatrix::zeros(0, n * t) } else { QMatrix::from_rows(rows) };
    let mut kernel = system.kernel_basis();
    kernel.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
    kernel
        .into_iter()
        .map(|v| {
            let terms = v
                .iter()
                .zip(&prims)
                .filter(|(c, _)| !c.is_zero())
                .flat_map(|(c, p)| p.terms().iter().map(move |(m, x)| (*m, x * c)));
            Poly::from_terms(ring, terms)
        })
        .collect()
}

/// Keeps the candidates that enlarge the span, each reduced against the
/// span so far and scaled to leading coefficient 1.
pub(crate) fn new_elements(span: &LinearSpan, candidates: Vec<Poly>) -> Vec<Poly> {
    let mut span = span.clone();
    let mut out = Vec::new();
    for c in candidates {
        let r = span.reduce(&c);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        span.insert(&r);
        out.push(r);
    }
    out
}

/// Default degree cap: twice the sum of the generator degrees.
pub fn default_degree_cap(gens: &[Poly]) -> u32 {
    2 * gens.iter().filter_map(Poly::degree).sum::<u32>()
}

/// A basis of `I^⊥` with contraction matrices, for `I = (gens)` an
/// `𝔪`-primary ideal of `ℚ[[x_1,…,x_n]]`.
pub fn inverse_system(gens: &[Poly], degree_cap: Option<u32>) -> Result<DualBasisWithContractions, InverseSystemError> {
    let first = gens.first().ok_or(InverseSystemError::NoGenerators)?;
    let n = first.nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
        return Err(InverseSystemError::VariableCount { expected: n, found: g.nvars() });
    }
    if gens.iter().any(|g| !g.constant_term().is_zero()) {
        return Err(InverseSystemError::UnitIdeal);
    }
    let cap = degree_cap.unwrap_or_else(|| default_degree_cap(gens));
    let ring = dual_ring(n);
    let orth: Vec<Poly> = gens.iter().map(|g| g.map_vars(&ring, &(0..n).collect::<Vec<_>>())).collect();

    let mut d = DualBasisWithContractions::unit(&ring);
    let mut degree = 0;
    loop {
        let candidates = integration_candidates(&d, &orth);
        let new = new_elements(d.span(), candidates);
        if new.is_empty() {
            return Ok(d);
        }
        degree += 1;
        if degree > cap {
            return Err(InverseSystemError::NotMPrimary { cap });
        }
        d = d.extended(&new)?;
    }
}
