//! The contraction action of `R = ℚ[[x_1,…,x_n]]` on `S = ℚ[y_1,…,y_n]`,
//! principal inverse systems and algebra invariants.
//!
//! Series polynomials live in a ring named `x1,…,xn` and dual polynomials in
//! one named `y1,…,yn`; only the variable count has to agree.

mod cover;

pub use cover::{
    annihilator, annihilator_of_span, check_cover, colength_of, colon_kf, ideal_applied, local_ideal_span, same_local_ideal,
    CoverCertificate, CoverCheck,
};

use std::collections::VecDeque;

use thiserror::Error;

use crate::arith::{LinearSpan, Monomial, Poly, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApolarityError {
    #[error("series ring has {series} variables but dual ring has {dual}")]
    VariableCount { series: usize, dual: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("{witness} is in the inverse system but not in <F>")]
    NotACover { witness: String },
}

/// `ℚ[x1,…,xn]`.
pub fn series_ring(n: usize) -> Ring {
    Ring::indexed("x", n)
}

/// `ℚ[y1,…,yn]`.
pub fn dual_ring(n: usize) -> Ring {
    Ring::indexed("y", n)
}

/// `x^α ∘ G`.
pub fn contract_monomial(alpha: &Monomial, g: &Poly) -> Poly {
    let terms = g
        .terms()
        .iter()
        .filter_map(|(m, c)| m.checked_div(alpha).map(|q| (q, c.clone())));
    Poly::from_terms(g.ring(), terms)
}

/// `x_k ∘ G`.
pub fn contract_var(k: usize, g: &Poly) -> Poly {
    contract_monomial(&Monomial::var(k, 1), g)
}

/// `f ∘ G`, extended bilinearly from `x^α ∘ y^β = y^{β−α}`.
pub fn contract(f: &Poly, g: &Poly) -> Result<Poly, ApolarityError> {
    if f.nvars() != g.nvars() {
        return Err(ApolarityError::VariableCount { series: f.nvars(), dual: g.nvars() });
    }
    let mut acc = Vec::new();
    for (a, c) in f.terms() {
        for (b, d) in g.terms() {
            if let Some(q) = b.checked_div(a) {
                acc.push((q, c * d));
            }
        }
    }
    Ok(Poly::from_terms(g.ring(), acc))
}

/// The `i`-primitive `∫_i f = y_i·f`.
pub fn primitive(i: usize, f: &Poly) -> Poly {
    f.mul_monomial(&Monomial::var(i, 1))
}

/// A basis of a subspace of `S`, optionally known to be closed under
/// contraction.
#[derive(Clone, Debug)]
pub struct InverseSystemBasis {
    span: LinearSpan,
    closed: bool,
}

impl InverseSystemBasis {
    /// Independent elements of `polys` span the result.
    pub fn from_polys<'a>(ring: &Ring, polys: impl IntoIterator<Item = &'a Poly>, closed: bool) -> Self {
        InverseSystemBasis { span: LinearSpan::from_polys(ring, polys), closed }
    }

    /// The contraction closure `⟨polys⟩ = R∘polys`.
    pub fn generated_by<'a>(ring: &Ring, polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let mut span = LinearSpan::new(ring);
        let mut queue = VecDeque::new();
        for p in polys {
            if span.insert(p).is_some() {
                queue.push_back(p.clone());
            }
        }
        while let Some(q) = queue.pop_front() {
            for k in 0..ring.nvars() {
                let c = contract_var(k, &q);
                if !c.is_zero() && span.insert(&c).is_some() {
                    queue.push_back(c);
                }
            }
        }
        InverseSystemBasis { span, closed: true }
    }

    pub fn ring(&self) -> &Ring {
        self.span.ring()
    }

    pub fn nvars(&self) -> usize {
        self.span.ring().nvars()
    }

    pub fn basis(&self) -> &[Poly] {
        self.span.generators()
    }

    pub fn span(&self) -> &LinearSpan {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Checks closure under every `x_k` directly.
    pub fn verify_closed(&self) -> bool {
        self.basis()
            .iter()
            .all(|b| (0..self.nvars()).all(|k| self.span.contains(&contract_var(k, b))))
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.span.contains(p)
    }

    pub fn same_span(&self, other: &InverseSystemBasis) -> bool {
        self.span.same_span(&other.span)
    }

    pub fn is_subspace_of(&self, other: &InverseSystemBasis) -> bool {
        self.span.is_subspace_of(&other.span)
    }

    /// `𝔪 ∘ V` as a span.
    pub fn contracted_by_maximal_ideal(&self) -> InverseSystemBasis {
        let images: Vec<Poly> = self
            .basis()
            .iter()
            .flat_map(|b| (0..self.nvars()).map(move |k| contract_var(k, b)))
            .collect();
        InverseSystemBasis::from_polys(self.ring(), &images, self.closed)
    }
}

/// `⟨F⟩`, the span of all `x^α ∘ F`.
pub fn principal_system(f: &Poly) -> Result<InverseSystemBasis, ApolarityError> {
    if f.is_zero() {
        return Err(ApolarityError::ZeroPolynomial);
    }
    Ok(InverseSystemBasis::generated_by(f.ring(), [f]))
}

/// Numerical invariants of `A = R/I` read off from `I^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraProfile {
    pub length: usize,
    pub hilbert: Vec<usize>,
    pub socle_degree: usize,
    /// Cohen–Macaulay type `τ(A) = dim I^⊥/(𝔪∘I^⊥)`.
    pub cm_type: usize,
    pub emb_dim: usize,
}

impl AlgebraProfile {
    pub fn is_gorenstein(&self) -> bool {
        self.cm_type == 1
    }
}

pub fn algebra_profile(iperp: &InverseSystemBasis) -> AlgebraProfile {
    let dims = iperp.span().filtration_dims();
    let mut hilbert = Vec::with_capacity(dims.len());
    let mut prev = 0;
    for d in dims {
        hilbert.push(d - prev);
        prev = d;
    }
    let length = iperp.dim();
    let cm_type = length - iperp.contracted_by_maximal_ideal().dim();
    AlgebraProfile {
        length,
        socle_degree: hilbert.len().saturating_sub(1),
        emb_dim: hilbert.get(1).copied().unwrap_or(0),
        hilbert,
        cm_type,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    fn y(n: usize, s: &str) -> Poly {
        parse_poly(&dual_ring(n), s).unwrap()
    }

    fn x(n: usize, s: &str) -> Poly {
        parse_poly(&series_ring(n), s).unwrap()
    }

    #[test]
    fn contraction_examples() {
        let f = y(3, "y3^4 + y1^2*y2");
        assert_eq!(contract(&x(3, "x1"), &f).unwrap(), y(3, "y1*y2"));
        assert_eq!(contract(&x(3, "x3"), &f).unwrap(), y(3, "y3^3"));
        assert!(contract(&x(2, "x1^2"), &y(2, "y2")).unwrap().is_zero());
        assert!(contract(&x(2, "x1"), &y(3, "y1")).is_err());
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(0, &y(2, "1")), y(2, "y1"));
        assert_eq!(primitive(1, &y(2, "y1*y2")), y(2, "y1*y2^2"));
        let f = y(2, "y1^2 + 3*y2 - 1");
        assert_eq!(contract_var(0, &primitive(0, &f)), f);
    }

    #[test]
    fn principal_systems() {
        let s = principal_system(&y(2, "y1^2")).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.contains(&y(2, "1")) && s.contains(&y(2, "y1")));
        assert_eq!(principal_system(&y(2, "1")).unwrap().dim(), 1);
        assert!(principal_system(&Poly::zero(&dual_ring(2))).is_err());
        // ⟨y3^4 + y1^2 y2⟩ has dimension dim⟨y1y2, y3^3⟩ + 2
        let m = InverseSystemBasis::generated_by(&dual_ring(3), &[y(3, "y1*y2"), y(3, "y3^3")]);
        let f = principal_system(&y(3, "y3^4 + y1^2*y2")).unwrap();
        assert_eq!(m.dim(), 7);
        assert_eq!(f.dim(), m.dim() + 2);
    }

    #[test]
    fn profile_of_square_of_maximal_ideal() {
        let iperp = InverseSystemBasis::generated_by(&dual_ring(2), &[y(2, "y1"), y(2, "y2")]);
        let p = algebra_profile(&iperp);
        assert_eq!(p, AlgebraProfile { length: 3, hilbert: vec![1, 2], socle_degree: 1, cm_type: 2, emb_dim: 2 });
        let one = InverseSystemBasis::generated_by(&dual_ring(2), &[y(2, "1")]);
        let p = algebra_profile(&one);
        assert_eq!((p.length, p.socle_degree), (1, 0));
    }
}
