//! Varieties of minimal Gorenstein covers in colength 1 (Teter) and 2.
//!
//! A cover is parametrized by its coordinates on an adapted basis of
//! `∫_{𝔪^t} I^⊥ / I^⊥`. Parameters are named `a1,…` for the first layer and
//! `b1,…` for the second; the auxiliary vector `v` of the colength-2 case is
//! `v1,…,vn`.

mod sample;

pub use sample::{sample_and_certify, PointOutcome, PointResult, SampleReport};

use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::apolarity::{algebra_profile, InverseSystemBasis};
use crate::arith::{ArithError, Monomial, Poly, PolyMatrix, QMatrix, Rational, Ring};
use crate::groebner::{eliminate, intersect, radical_contains, saturate_by_variable, Ideal};
use crate::integrator::AdaptedIntegral;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MgcError {
    #[error("gcl = 0: the algebra is Gorenstein")]
    Gorenstein,
    #[error("gcl = 1: the Teter variety is nonempty")]
    TeterNonEmpty,
    #[error("need {needed} integration layers, got {got}")]
    NotEnoughLayers { needed: usize, got: usize },
    #[error("integration layer {0} is empty")]
    EmptyLayer(usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `H = Σ p_i·P_i` with symbolic coefficients `p_i` (the parameters of
/// `params`) multiplying the adapted basis elements `P_i`.
#[derive(Clone, Debug)]
pub struct GenericCover {
    params: Ring,
    parts: Vec<Poly>,
    iperp: InverseSystemBasis,
    colength: usize,
}

impl GenericCover {
    pub fn params(&self) -> &Ring {
        &self.params
    }

    /// The basis element multiplied by each parameter.
    pub fn parts(&self) -> &[Poly] {
        &self.parts
    }

    pub fn iperp(&self) -> &InverseSystemBasis {
        &self.iperp
    }

    /// The colength of the covers this family is meant to parametrize.
    pub fn colength(&self) -> usize {
        self.colength
    }

    /// The dual polynomial at a point of the parameter space.
    pub fn at(&self, point: &[Rational]) -> Poly {
        let ring = self.iperp.ring();
        let mut acc = Poly::zero(ring);
        for (c, p) in point.iter().zip(&self.parts) {
            if !c.is_zero() {
                acc = &acc + &p.scale(c);
            }
        }
        acc
    }

    /// `H` as a polynomial in the parameters and the dual variables.
    pub fn combined(&self) -> Poly {
        let dual = self.iperp.ring();
        let ring = self.params.extended(dual.names().iter().cloned());
        let np = self.params.nvars();
        let shift: Vec<usize> = (0..dual.nvars()).map(|i| np + i).collect();
        let mut acc = Poly::zero(&ring);
        for (i, p) in self.parts.iter().enumerate() {
            acc = &acc + &(&Poly::var(&ring, i) * &p.map_vars(&ring, &shift));
        }
        acc
    }
}

impl fmt::Display for GenericCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.combined())
    }
}

/// `V₊(keep) ∖ V₊(remove)` in the projective space with coordinates `ring`.
#[derive(Clone, Debug)]
pub struct VarietyPresentation {
    pub ring: Ring,
    pub keep: Ideal,
    pub remove: Ideal,
}

impl VarietyPresentation {
    pub fn ambient_dim(&self) -> usize {
        self.ring.nvars() - 1
    }

    pub fn coordinates(&self) -> &[String] {
        self.ring.names()
    }

    /// Whether the point lies in the presented set.
    pub fn contains(&self, point: &[Rational]) -> bool {
        point.iter().any(|x| !x.is_zero())
            && self.keep.gens().iter().all(|g| g.eval(point).is_zero())
            && self.remove.gens().iter().any(|g| !g.eval(point).is_zero())
    }

    /// `V₊(keep) ⊆ V₊(remove)`, decided by radical membership.
    pub fn is_empty(&self) -> bool {
        radical_contains(&self.keep, &self.remove)
    }
}

/// The Teter variety together with the matrix it came from.
#[derive(Clone, Debug)]
pub struct TeterVariety {
    pub cover: GenericCover,
    /// Rows are `x^α ∘ F` on the basis of `I^⊥`, after ℚ-row reduction.
    pub matrix: PolyMatrix,
    pub presentation: VarietyPresentation,
}

impl TeterVariety {
    /// `gcl(A) = 1` exactly when the ideal of minors is nonzero.
    pub fn is_teter(&self) -> bool {
        !self.presentation.remove.is_zero()
    }
}

/// Parameter ring `a1,…,a_{h1}` followed by `b1,…,b_{h2}`.
fn parameter_ring(h1: usize, h2: usize) -> Ring {
    let names = (1..=h1).map(|i| format!("a{i}")).chain((1..=h2).map(|i| format!("b{i}")));
    Ring::new(names)
}

/// Coordinates of `x^α ∘ P_j` over the full basis for every `α` with
/// `lo ≤ |α| ≤ hi`, where the `P_j` are the basis elements `first..`.
/// Each matrix has one column per `P_j`.
fn contraction_images(u: &[QMatrix], first: usize, lo: u32, hi: u32) -> Vec<(Monomial, QMatrix)> {
    let size = u.first().map_or(0, QMatrix::rows);
    let n = u.len();
    let k = size - first;
    let mut start = QMatrix::zeros(size, k);
    for j in 0..k {
        start.set(first + j, j, Rational::one());
    }
    let mut known: FxHashMap<Monomial, QMatrix> = FxHashMap::default();
    known.insert(Monomial::one(), start);
    let mut out = Vec::new();
    for d in 1..=hi {
        for alpha in Monomial::all_of_degree(n, d) {
            let var = (0..n).find(|&i| alpha.exp(i) > 0).expect("positive degree");
            let prev = alpha.checked_div(&Monomial::var(var, 1)).expect("divisible");
            let img = match known.get(&prev) {
                Some(p) => &u[var] * p,
                None => continue,
            };
            if img.is_zero() {
                continue;
            }
            if d >= lo {
                out.push((alpha, img.clone()));
            }
            known.insert(alpha, img);
        }
    }
    out
}

/// `Σ_j m[row][j]·p_j` over the parameters `p_j` of `ring`, starting at
/// parameter `offset`.
fn linear_form(ring: &Ring, m: &QMatrix, row: usize, offset: usize) -> Poly {
    Poly::from_terms(
        ring,
        (0..m.cols())
            .filter(|&j| !m.get(row, j).is_zero())
            .map(|j| (Monomial::var(offset + j, 1), m.get(row, j).clone())),
    )
}

fn check_layers(ai: &AdaptedIntegral, needed: usize) -> Result<(), MgcError> {
    if ai.power() < needed {
        return Err(MgcError::NotEnoughLayers { needed, got: ai.power() });
    }
    if let Some(i) = ai.h().iter().take(needed).position(|&h| h == 0) {
        return Err(MgcError::EmptyLayer(i + 1));
    }
    Ok(())
}

/// Teter variety `MGC(A) = P^{h−1} ∖ V₊(𝔞)` with `𝔞` the ideal of maximal
/// minors of the matrix of `x^α ∘ F`, `1 ≤ |α| ≤ s+1`, for the generic
/// `F = Σ a_j F_j` on the first layer.
pub fn teter_variety(ai: &AdaptedIntegral) -> Result<TeterVariety, MgcError> {
    check_layers(ai, 1)?;
    let iperp = ai.base().to_inverse_system();
    let profile = algebra_profile(&iperp);
    if profile.is_gorenstein() {
        return Err(MgcError::Gorenstein);
    }
    let t = ai.base().dim();
    let h = ai.h()[0];
    let ring = parameter_ring(h, 0);
    let u = ai.full().contraction_matrices();
    let images = contraction_images(u, t, 1, profile.socle_degree as u32 + 1);
    let rows: Vec<Vec<Poly>> = images
        .iter()
        .map(|(_, m)| {
            let m = m.resized(m.rows(), h);
            (0..t).map(|i| linear_form(&ring, &m, i, 0)).collect()
        })
        .collect();
    let matrix = PolyMatrix::from_rows(&ring, rows).without_zero_rows().rational_row_basis();
    let minors = if matrix.rows() >= t { matrix.minors(t)? } else { Vec::new() };
    let cover = GenericCover {
        params: ring.clone(),
        parts: ai.layer(1).to_vec(),
        iperp,
        colength: 1,
    };
    let presentation = VarietyPresentation {
        keep: Ideal::zero(&ring),
        remove: Ideal::new(&ring, minors),
        ring,
    };
    Ok(TeterVariety { cover, matrix, presentation })
}

/// The parameter matrices of the colength-2 construction.
#[derive(Clone, Debug)]
pub struct Mgc2Matrices {
    /// `a1..a_{h1}, b1..b_{h2}, v1..vn`.
    pub ring: Ring,
    pub cover: GenericCover,
    pub n: usize,
    pub t: usize,
    pub h1: usize,
    pub h2: usize,
    /// `B_H`, `n × h1`: first-layer coordinates of `x_k ∘ H`.
    pub b_h: PolyMatrix,
    /// `C_{H,v} = [B_H | v]`.
    pub c_hv: PolyMatrix,
    /// Rows `(v_l x_k − v_k x_l) ∘ H` and `x^θ ∘ H` (`2 ≤ |θ| ≤ s+2`) on the
    /// basis of `I^⊥`, identically zero rows dropped.
    pub u_hv: PolyMatrix,
}

impl Mgc2Matrices {
    /// Indices of the `(a, b)` variables.
    pub fn ab_block(&self) -> Vec<usize> {
        (0..self.h1 + self.h2).collect()
    }

    /// Indices of the `v` variables.
    pub fn v_block(&self) -> Vec<usize> {
        (self.h1 + self.h2..self.ring.nvars()).collect()
    }
}

/// Builds `B_H`, `C_{H,v}` and `U_{H,v}` for `H = Σ a_i F_i + Σ b_i G_i`.
/// Fails unless `gcl(A) > 1`.
pub fn mgc2_matrices(ai: &AdaptedIntegral) -> Result<Mgc2Matrices, MgcError> {
    check_layers(ai, 2)?;
    if teter_variety(ai)?.is_teter() {
        return Err(MgcError::TeterNonEmpty);
    }
    let iperp = ai.base().to_inverse_system();
    let s = algebra_profile(&iperp).socle_degree as u32;
    let n = ai.base().nvars();
    let t = ai.base().dim();
    let (h1, h2) = (ai.h()[0], ai.h()[1]);
    let np = h1 + h2;
    let params = parameter_ring(h1, h2);
    let ring = params.extended((1..=n).map(|i| format!("v{i}")));
    let v = |k: usize| Poly::var(&ring, np + k);
    let u = ai.full().contraction_matrices();

    // x_k ∘ H as coordinate vectors of linear forms
    let first: Vec<QMatrix> = (0..n)
        .map(|k| {
            let mut start = QMatrix::zeros(t + np, np);
            for j in 0..np {
                start.set(t + j, j, Rational::one());
            }
            &u[k].resized(t + np, t + np) * &start
        })
        .collect();
    let b_rows: Vec<Vec<Poly>> =
        (0..n).map(|k| (0..h1).map(|j| linear_form(&ring, &first[k], t + j, 0)).collect()).collect();
    let b_h = PolyMatrix::from_rows(&ring, b_rows);
    let vcol: Vec<Poly> = (0..n).map(v).collect();
    let c_hv = b_h.with_column(&vcol);

    let mut rows: Vec<Vec<Poly>> = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            let row = (0..t)
                .map(|i| {
                    let xk = linear_form(&ring, &first[k], i, 0);
                    let xl = linear_form(&ring, &first[l], i, 0);
                    &(&v(l) * &xk) - &(&v(k) * &xl)
                })
                .collect();
            rows.push(row);
        }
    }
    let full = u.iter().map(|m| m.resized(t + np, t + np)).collect::<Vec<_>>();
    for (_, m) in contraction_images(&full, t, 2, s + 2) {
        rows.push((0..t).map(|i| linear_form(&ring, &m, i, 0)).collect());
    }
    let u_hv = PolyMatrix::from_rows(&ring, rows).without_zero_rows();

    let cover = GenericCover {
        params,
        parts: ai.layer(1).iter().chain(ai.layer(2)).cloned().collect(),
        iperp,
        colength: 2,
    };
    Ok(Mgc2Matrices { ring, cover, n, t, h1, h2, b_h, c_hv, u_hv })
}

/// The ideals of the colength-2 construction.
#[derive(Clone, Debug)]
pub struct Mgc2Ideals {
    /// 2-minors of `C_{H,v}`, in the ring with `v`.
    pub c: Ideal,
    /// Maximal minors of `U_{H,v}`, in the ring with `v`.
    pub a: Ideal,
    /// `𝔟 = ĉ`, in the `(a, b)` ring.
    pub b: Ideal,
    /// `d̂` for `𝔡 = 𝔞 + 𝔠`, in the `(a, b)` ring.
    pub d_hat: Ideal,
    /// `MGC₂(A) = V₊(𝔟) ∖ V₊(d̂)`.
    pub presentation: VarietyPresentation,
}

/// Projective elimination of the variables `block` (one projective factor,
/// placed last in the ring), restricted to `target`.
///
/// This is the intersection over `i ∈ block` of `(J : v_i^∞) ∩ k[rest]`.
/// For `J` homogeneous the saturation is taken directly; otherwise each
/// term is the affine elimination ideal of the chart `v_i = 1`.
pub fn projective_elimination(j: &Ideal, block: &[usize], target: &Ring) -> Ideal {
    // One grevlex basis first: the per-variable steps then start from a
    // small generating set.
    let j = &j.reduced();
    let homogeneous = j.is_homogeneous();
    let mut acc: Option<Ideal> = None;
    for &i in block {
        let e = match saturate_by_variable(j, i) {
            Ok(sat) if homogeneous => eliminate(&sat, block),
            _ => {
                let chart = j.substitute(&[(i, Rational::one())]);
                let rest: Vec<usize> = block.iter().copied().filter(|&k| k != i).collect();
                eliminate(&chart, &rest)
            }
        };
        let e = Ideal::new(target, e.gens().iter().map(|g| g.restrict(target)));
        acc = Some(match acc {
            None => e,
            Some(prev) => intersect(&prev, &e),
        });
    }
    acc.unwrap_or_else(|| Ideal::new(target, j.gens().iter().map(|g| g.restrict(target)))).reduced()
}

pub fn mgc2_ideals(m: &Mgc2Matrices) -> Result<Mgc2Ideals, MgcError> {
    let c = Ideal::new(&m.ring, m.c_hv.minors(2)?);
    let u = m.u_hv.rational_row_basis();
    let a = if u.rows() >= m.t { Ideal::new(&m.ring, u.minors(m.t)?) } else { Ideal::zero(&m.ring) };
    let d = c.sum(&a);
    let vb = m.v_block();
    let target = m.cover.params().clone();
    let b = projective_elimination(&c, &vb, &target);
    let d_hat = projective_elimination(&d, &vb, &target);
    let presentation = VarietyPresentation { ring: target, keep: b.clone(), remove: d_hat.clone() };
    Ok(Mgc2Ideals { c, a, b, d_hat, presentation })
}

/// Every generator is homogeneous in each block separately.
pub fn is_bihomogeneous(j: &Ideal, blocks: &[Vec<usize>]) -> bool {
    j.gens().iter().all(|g| blocks.iter().all(|b| g.block_degree(b).is_some()))
}
