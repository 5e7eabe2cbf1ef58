//! Integrals `∫_{𝔪^t} M` of contraction-closed subspaces and adapted bases
//! of `∫_{𝔪^t} I^⊥ / I^⊥`.

use thiserror::Error;

use crate::apolarity::{annihilator_of_span, InverseSystemBasis};
use crate::arith::Poly;
use crate::inverse_system::{
    integration_candidates, inverse_system, new_elements, DualBasisWithContractions, InverseSystemError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegratorError {
    #[error("contraction matrices do not commute")]
    NonCommuting,
    #[error("layer {layer} is not an adapted basis: {reason}")]
    NotAdapted { layer: usize, reason: String },
    #[error(transparent)]
    InverseSystem(#[from] InverseSystemError),
}

/// A basis of `∫_𝔪 M` extending the basis of `M`, with contraction matrices.
pub fn integrate_once(d: &DualBasisWithContractions) -> Result<DualBasisWithContractions, IntegratorError> {
    if !d.commute() {
        return Err(IntegratorError::NonCommuting);
    }
    let new = new_elements(d.span(), integration_candidates(d, &[]));
    Ok(d.extended(&new)?)
}

/// `M = I^⊥` together with layers `F^i_1,…,F^i_{h_i}` whose cosets form a
/// basis of `∫_{𝔪^i} M / ∫_{𝔪^{i−1}} M`.
#[derive(Clone, Debug)]
pub struct AdaptedIntegral {
    base: DualBasisWithContractions,
    layers: Vec<Vec<Poly>>,
    full: DualBasisWithContractions,
}

impl AdaptedIntegral {
    /// Checks that the given representatives form an adapted basis of
    /// `∫_{𝔪^t} M / M` with `t = layers.len()`.
    pub fn from_layers(base: DualBasisWithContractions, layers: Vec<Vec<Poly>>) -> Result<Self, IntegratorError> {
        let mut full = base.clone();
        for (i, layer) in layers.iter().enumerate() {
            let not_adapted = |reason: &str| IntegratorError::NotAdapted { layer: i + 1, reason: reason.to_string() };
            let target = integrate_once(&full)?;
            if layer.iter().any(|p| !target.contains(p)) {
                return Err(not_adapted("an element lies outside the integral"));
            }
            full = match full.extended(layer) {
                Ok(f) => f,
                Err(InverseSystemError::Dependent { .. }) => return Err(not_adapted("elements are dependent")),
                Err(e) => return Err(e.into()),
            };
            if full.dim() != target.dim() {
                return Err(not_adapted("elements do not span the integral"));
            }
        }
        Ok(AdaptedIntegral { base, layers, full })
    }

    pub fn base(&self) -> &DualBasisWithContractions {
        &self.base
    }

    /// Layer `i` (starting at 1).
    pub fn layer(&self, i: usize) -> &[Poly] {
        &self.layers[i - 1]
    }

    pub fn layers(&self) -> &[Vec<Poly>] {
        &self.layers
    }

    /// `t`.
    pub fn power(&self) -> usize {
        self.layers.len()
    }

    /// `h_i = dim ∫_{𝔪^i} M / ∫_{𝔪^{i−1}} M` for `i = 1..t`.
    pub fn h(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Basis of `∫_{𝔪^t} M` (the base first, then the layers) with its
    /// contraction matrices.
    pub fn full(&self) -> &DualBasisWithContractions {
        &self.full
    }
}

/// `t` successive integrations, recording each layer.
pub fn integrate_power(d: &DualBasisWithContractions, t: usize) -> Result<AdaptedIntegral, IntegratorError> {
    let mut full = d.clone();
    let mut layers = Vec::with_capacity(t);
    for _ in 0..t {
        let next = integrate_once(&full)?;
        let layer = next.basis()[full.dim()..].to_vec();
        if layer.is_empty() {
            break;
        }
        layers.push(layer);
        full = next;
    }
    layers.resize(t, Vec::new());
    Ok(AdaptedIntegral { base: d.clone(), layers, full })
}

/// `∫_K M = (K·M^⊥)^⊥`, computed through annihilators and a fresh inverse
/// system. Slow; meant for cross-checking.
pub fn integral_wrt_ideal_oracle(m: &InverseSystemBasis, k: &[Poly]) -> Result<InverseSystemBasis, InverseSystemError> {
    let ann = annihilator_of_span(m.ring(), m.basis());
    let mut products = Vec::with_capacity(ann.len() * k.len());
    for a in &ann {
        for g in k {
            products.push(a * g);
        }
    }
    Ok(inverse_system(&products, None)?.to_inverse_system())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolarity::{dual_ring, series_ring};
    use crate::arith::{parse_poly_list, QMatrix};

    fn ys(n: usize, s: &str) -> Vec<Poly> {
        parse_poly_list(&dual_ring(n), s).unwrap()
    }

    fn closure(n: usize, s: &str) -> DualBasisWithContractions {
        let m = InverseSystemBasis::generated_by(&dual_ring(n), &ys(n, s));
        DualBasisWithContractions::from_basis(m.ring(), m.basis()).unwrap()
    }

    fn maximal(n: usize) -> Vec<Poly> {
        (0..n).map(|i| Poly::var(&series_ring(n), i)).collect()
    }

    #[test]
    fn integral_of_two_generated_system() {
        let m = closure(3, "y1*y2, y3^3");
        let out = integrate_once(&m).unwrap();
        let expect = closure(3, "y1^2, y1*y2, y1*y3, y2^2, y2*y3, y3^4");
        assert!(out.span().same_span(expect.span()));
        assert!(out.verify());
        let contracted = out.to_inverse_system().contracted_by_maximal_ideal();
        assert!(contracted.same_span(&closure(3, "y1, y2, y3^3").to_inverse_system()));
        assert!(contracted.dim() < m.dim());
    }

    #[test]
    fn integral_of_constants() {
        let one = DualBasisWithContractions::unit(&dual_ring(3));
        let out = integrate_once(&one).unwrap();
        assert_eq!(out.basis(), ys(3, "1, y1, y2, y3").as_slice());
    }

    #[test]
    fn printed_matrices_for_square_of_maximal_ideal() {
        let d = closure(2, "y1, y2");
        let out = integrate_once(&d).unwrap();
        let printed = DualBasisWithContractions::from_basis(out.ring(), &ys(2, "1, y1, y2, y2^2, y1*y2, y1^2")).unwrap();
        assert!(printed.span().same_span(out.span()));
        let u1 = QMatrix::from_i64_rows(&[
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
        ]);
        let u2 = QMatrix::from_i64_rows(&[
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
        ]);
        assert_eq!(printed.contraction_matrix(0), &u1);
        assert_eq!(printed.contraction_matrix(1), &u2);
        assert!(out.commute());
    }

    #[test]
    fn first_layer_of_two_generated_system() {
        let ai = integrate_power(&closure(3, "y1*y2, y3^3"), 1).unwrap();
        assert_eq!(ai.h(), vec![5]);
        let given = AdaptedIntegral::from_layers(ai.base().clone(), vec![ys(3, "y1^2, y1*y3, y2^2, y2*y3, y3^4")]);
        assert!(given.is_ok());
    }

    #[test]
    fn printed_adapted_layers() {
        let base = crate::inverse_system::inverse_system(
            &parse_poly_list(&series_ring(2), "x1^2, x1*x2^2, x2^4").unwrap(),
            None,
        )
        .unwrap();
        let ai = integrate_power(&base, 2).unwrap();
        assert_eq!(ai.h(), vec![3, 4]);
        let f = ys(2, "y2^4, y1*y2^2, y1^2");
        let g = ys(2, "y1^2*y2, y1*y2^3, y2^5, y1^3");
        let given = AdaptedIntegral::from_layers(base.clone(), vec![f.clone(), g]).unwrap();
        assert!(given.full().span().same_span(ai.full().span()));
        let bad = AdaptedIntegral::from_layers(base, vec![f, ys(2, "y1^2*y2, y1*y2^3, y2^5, y1*y2^2")]);
        assert!(matches!(bad, Err(IntegratorError::NotAdapted { layer: 2, .. })));
    }

    #[test]
    fn powers_compose() {
        let d = closure(3, "y1*y2, y3^3");
        let twice = integrate_once(&integrate_once(&d).unwrap()).unwrap();
        let direct = integrate_power(&d, 2).unwrap();
        assert!(direct.full().span().same_span(twice.span()));
        assert_eq!(integrate_power(&d, 0).unwrap().full().dim(), d.dim());
    }

    #[test]
    fn oracle_agrees_on_examples() {
        let m = closure(3, "y1*y2, y3^3");
        let oracle = integral_wrt_ideal_oracle(&m.to_inverse_system(), &maximal(3)).unwrap();
        assert!(oracle.same_span(&integrate_once(&m).unwrap().to_inverse_system()));

        let m = closure(3, "y1, y2, y3^2").to_inverse_system();
        let oracle = integral_wrt_ideal_oracle(&m, &maximal(3)).unwrap();
        assert!(oracle.same_span(&closure(3, "y1^2, y1*y2, y1*y3, y2^2, y2*y3, y3^3").to_inverse_system()));

        let one = closure(2, "1").to_inverse_system();
        let oracle = integral_wrt_ideal_oracle(&one, &maximal(2)).unwrap();
        assert!(oracle.same_span(&closure(2, "y1, y2").to_inverse_system()));
    }

    #[test]
    fn non_commuting_input_is_rejected() {
        let ring = dual_ring(2);
        let mut d = DualBasisWithContractions::from_basis(&ring, &ys(2, "1, y1, y2")).unwrap();
        d.u[0].set(2, 1, crate::arith::Rational::one());
        assert_eq!(integrate_once(&d).unwrap_err(), IntegratorError::NonCommuting);
    }
}
