//! Annihilators, the colon ideal `K_F` and Gorenstein cover certificates.

use rustc_hash::FxHashMap;

use crate::arith::{LinearSpan, Monomial, Poly, QMatrix, Ring};

use super::{algebra_profile, contract_monomial, principal_system, series_ring, ApolarityError, InverseSystemBasis};

/// Minimal generators of the ideal `{f ∈ R : value(f) = 0}` for a linear map
/// `value` into a tuple of polynomials, given on monomials, assuming every monomial of degree `top`
/// already lies in the kernel.
///
/// Works modulo `𝔪^{top+1}`: for each `d ≤ top` the kernel on polynomials of
/// degree at most `d` is put in echelon form with pivots at the lowest
/// monomials, and a kernel element becomes a new generator when it is not in
/// the ideal spanned by the earlier ones.
fn kernel_ideal(xring: &Ring, top: u32, value: impl Fn(&Monomial) -> Vec<Poly>) -> Vec<Poly> {
    let n = xring.nvars();
    let monos = Monomial::all_in_degree_range(n, 0, top);
    let images: Vec<Vec<Poly>> = monos.iter().map(&value).collect();

    let mut index: FxHashMap<(usize, Monomial), usize> = FxHashMap::default();
    for img in &images {
        for (i, p) in img.iter().enumerate() {
            for (m, _) in p.terms() {
                let next = index.len();
                index.entry((i, *m)).or_insert(next);
            }
        }
    }

    let mut gens: Vec<Poly> = Vec::new();
    let mut ideal_span = LinearSpan::new(xring);
    let mut ncols = 0;
    for d in 0..=top {
        while ncols < monos.len() && monos[ncols].degree() <= d {
            ncols += 1;
        }
        // rows = image coordinates, columns = monomials of degree ≤ d
        let mut m = QMatrix::zeros(index.len().max(1), ncols);
        for (j, img) in images[..ncols].iter().enumerate() {
            for (i, p) in img.iter().enumerate() {
                for (mono, c) in p.terms() {
                    m.set(index[&(i, *mono)], j, c.clone());
                }
            }
        }
        let kernel = m.kernel_basis();
        if kernel.is_empty() {
            continue;
        }
        let echelon = QMatrix::from_rows(kernel).rref();
        for r in 0..echelon.rank {
            let row = echelon.matrix.row(r);
            let f = Poly::from_terms(
                xring,
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (monos[j], c.clone())),
            );
            if ideal_span.contains(&f) {
                continue;
            }
            for mono in Monomial::all_in_degree_range(n, 0, top) {
                let prod = truncate(&f.mul_monomial(&mono), top);
                if !prod.is_zero() {
                    ideal_span.insert(&prod);
                }
            }
            gens.push(f.normalized());
        }
    }
    gens
}

fn truncate(p: &Poly, top: u32) -> Poly {
    Poly::from_terms(p.ring(), p.terms().iter().filter(|(m, _)| m.degree() <= top).cloned())
}

/// Generators of `Ann_R(F)`.
pub fn annihilator(f: &Poly) -> Result<Vec<Poly>, ApolarityError> {
    let top = f.degree().ok_or(ApolarityError::ZeroPolynomial)? + 1;
    let xring = series_ring(f.nvars());
    Ok(kernel_ideal(&xring, top, |a| vec![contract_monomial(a, f)]))
}

/// Generators of `Ann_R(V) = V^⊥` for the span `V` of `polys`.
pub fn annihilator_of_span(ring: &Ring, polys: &[Poly]) -> Vec<Poly> {
    let top = polys.iter().filter_map(Poly::degree).max().unwrap_or(0) + 1;
    let xring = series_ring(ring.nvars());
    kernel_ideal(&xring, top, |a| polys.iter().map(|p| contract_monomial(a, p)).collect())
}

/// Generators of `K_F = (I^⊥ :_R ⟨F⟩) = {f : f∘F ∈ I^⊥}`.
pub fn colon_kf(iperp: &InverseSystemBasis, f: &Poly) -> Result<Vec<Poly>, ApolarityError> {
    let principal = principal_system(f)?;
    if let Some(w) = iperp.basis().iter().find(|b| !principal.contains(b)) {
        return Err(ApolarityError::NotACover { witness: w.to_string() });
    }
    Ok(colon_unchecked(iperp, f))
}

fn colon_unchecked(iperp: &InverseSystemBasis, f: &Poly) -> Vec<Poly> {
    let top = f.degree().unwrap_or(0) + 1;
    let xring = series_ring(f.nvars());
    kernel_ideal(&xring, top, |a| vec![iperp.span().reduce(&contract_monomial(a, f))])
}

/// Evidence that `G = R/Ann(F)` is a Gorenstein cover of `A = R/I`.
#[derive(Clone, Debug)]
pub struct CoverCertificate {
    pub f: Poly,
    /// `ℓ(G) − ℓ(A)`.
    pub colength: usize,
    pub kf: Vec<Poly>,
    pub length_a: usize,
    pub length_g: usize,
    pub emb_dim_g: usize,
}

#[derive(Clone, Debug)]
pub enum CoverCheck {
    Cover(CoverCertificate),
    /// A basis element of `I^⊥` outside `⟨F⟩`.
    Rejected { witness: Poly },
    ZeroPolynomial,
}

impl CoverCheck {
    pub fn certificate(&self) -> Option<&CoverCertificate> {
        match self {
            CoverCheck::Cover(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_cover(&self) -> bool {
        matches!(self, CoverCheck::Cover(_))
    }

    pub fn colength(&self) -> Option<usize> {
        self.certificate().map(|c| c.colength)
    }
}

/// Decides whether `I^⊥ ⊆ ⟨F⟩` and, if so, certifies the colength and `K_F`.
pub fn check_cover(iperp: &InverseSystemBasis, f: &Poly) -> CoverCheck {
    if f.is_zero() {
        return CoverCheck::ZeroPolynomial;
    }
    let principal = InverseSystemBasis::generated_by(f.ring(), [f]);
    if let Some(w) = iperp.basis().iter().find(|b| !principal.contains(b)) {
        return CoverCheck::Rejected { witness: w.clone() };
    }
    let profile = algebra_profile(&principal);
    CoverCheck::Cover(CoverCertificate {
        f: f.clone(),
        colength: principal.dim() - iperp.dim(),
        kf: colon_unchecked(iperp, f),
        length_a: iperp.dim(),
        length_g: principal.dim(),
        emb_dim_g: profile.emb_dim,
    })
}

/// `span{g ∘ F : g ∈ gens, all multiples}`, i.e. `(gens)∘F` as a subspace.
pub fn ideal_applied(gens: &[Poly], f: &Poly) -> InverseSystemBasis {
    let images: Vec<Poly> = gens
        .iter()
        .map(|g| super::contract(g, f).expect("same variable count"))
        .collect();
    InverseSystemBasis::generated_by(f.ring(), &images)
}

/// The ideal generated by `gens` in `R/𝔪^{top+1}`, as a vector space.
pub fn local_ideal_span(xring: &Ring, gens: &[Poly], top: u32) -> LinearSpan {
    let n = xring.nvars();
    let monos = Monomial::all_in_degree_range(n, 0, top);
    let mut span = LinearSpan::new(xring);
    for g in gens {
        for m in &monos {
            let p = truncate(&g.mul_monomial(m), top);
            if !p.is_zero() {
                span.insert(&p);
            }
        }
    }
    span
}

/// `dim_ℚ R/(gens)`, for an `𝔪`-primary ideal containing `𝔪^{top+1}`.
pub fn colength_of(xring: &Ring, gens: &[Poly], top: u32) -> usize {
    let total = Monomial::all_in_degree_range(xring.nvars(), 0, top).len();
    total - local_ideal_span(xring, gens, top).dim()
}

/// Equality of two ideals of `R` that both contain `𝔪^{top+1}`.
pub fn same_local_ideal(xring: &Ring, a: &[Poly], b: &[Poly], top: u32) -> bool {
    local_ideal_span(xring, a, top).same_span(&local_ideal_span(xring, b, top))
}
