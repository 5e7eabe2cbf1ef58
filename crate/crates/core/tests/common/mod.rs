//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use gcover::apolarity::{dual_ring, series_ring, InverseSystemBasis};
use gcover::arith::{parse_poly_list, Poly, Ring};
use gcover::groebner::Ideal;
use gcover::integrator::AdaptedIntegral;
use gcover::inverse_system::{inverse_system, DualBasisWithContractions};

/// An ideal `I ⊂ ℚ[[x1,…,xn]]` with the Hilbert function of `R/I`.
#[derive(Clone, Copy, Debug)]
pub struct Instance {
    pub n: usize,
    pub ideal: &'static str,
    pub hilbert: &'static [usize],
}

const fn inst(n: usize, ideal: &'static str, hilbert: &'static [usize]) -> Instance {
    Instance { n, ideal, hilbert }
}

/// Algebras of length at most 6 and Gorenstein colength 1.
pub const COLENGTH_ONE: [Instance; 16] = [
    inst(2, "x1^2, x1*x2, x2^2", &[1, 2]),
    inst(2, "x1*x2, x2^2, x1^3", &[1, 2, 1]),
    inst(3, "x1^2, x2^2, x3^2, x1*x2, x1*x3, x2*x3", &[1, 3]),
    inst(2, "x1^2, x1*x2, x2^4", &[1, 2, 1, 1]),
    inst(2, "x1*x2, x1^3, x2^3", &[1, 2, 2]),
    inst(2, "x1*x2^2, x1^2, x2^3", &[1, 2, 2]),
    inst(3, "x1*x2, x1*x3, x2*x3, x2^2, x3^2, x1^3", &[1, 3, 1]),
    inst(4, "x1^2, x2^2, x3^2, x4^2, x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4", &[1, 4]),
    inst(2, "x1*x2, x1^5, x2^2", &[1, 2, 1, 1, 1]),
    inst(2, "x1*x2, x1^3, x2^4", &[1, 2, 2, 1]),
    inst(2, "x1^2 + x2^3, x1*x2^2, x2^4", &[1, 2, 2, 1]),
    inst(3, "x1*x2, x1*x3, x2*x3, x2^2, x3^2, x1^4", &[1, 3, 1, 1]),
    inst(3, "x1^2, x1*x2, x1*x3, x2^2, x2*x3^2, x3^3", &[1, 3, 2]),
    inst(3, "x1^2, x1*x2, x1*x3, x2*x3, x2^3, x3^3", &[1, 3, 2]),
    inst(
        4,
        "x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4, x2^2, x3^2, x4^2, x1^3",
        &[1, 4, 1],
    ),
    inst(
        5,
        "x1^2, x2^2, x3^2, x4^2, x5^2, x1*x2, x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3*x4, x3*x5, x4*x5",
        &[1, 5],
    ),
];

/// Algebras of length at most 6 and Gorenstein colength 2.
pub const COLENGTH_TWO: [Instance; 10] = [
    inst(3, "x1*x2, x1*x3, x1^2, x2^2, x3^2", &[1, 3, 1]),
    inst(2, "x1^2, x1*x2^2, x2^4", &[1, 2, 2, 1]),
    inst(3, "x1*x2, x1*x3, x2*x3, x2^2, x3^2 - x1^3", &[1, 3, 1, 1]),
    inst(3, "x1*x2, x2*x3, x3^2, x2^2 - x1*x3, x1^3", &[1, 3, 2]),
    inst(3, "x1*x2, x3^2, x1*x3 - x2*x3, x1^2 + x2^2 - x1*x3", &[1, 3, 2]),
    inst(3, "x1*x2, x1*x3, x2^2, x3^2, x1^3", &[1, 3, 2]),
    inst(3, "x1*x2, x1*x3, x2*x3, x1^2 + x2^2 - x3^2", &[1, 3, 2]),
    inst(3, "x1^2, x1*x2, x2*x3, x1*x3 + x2^2 - x3^2", &[1, 3, 2]),
    inst(3, "x1^2, x1*x2, x2^2, x3^2", &[1, 3, 2]),
    inst(4, "x1^2, x2^2, x3^2, x4^2, x1*x2, x1*x3, x1*x4, x2*x3, x2*x4", &[1, 4, 1]),
];

/// Index in [`COLENGTH_TWO`] of the instance whose elimination is far more
/// expensive than the others.
pub const SLOW_COLENGTH_TWO: usize = 4;

/// Other instances used for cross-checks.
pub const EXTRA: [Instance; 6] = [
    inst(3, "x1^2, x2^2, x1*x3, x2*x3, x3^4", &[1, 3, 2, 1]),
    inst(2, "x1^3, x1^2*x2, x1*x2^2, x2^3", &[1, 2, 3]),
    inst(1, "x1^4", &[1, 1, 1, 1]),
    inst(2, "x1^2, x2^3", &[1, 2, 2, 1]),
    inst(3, "x1^2, x2^2, x3^2", &[1, 3, 3, 1]),
    inst(2, "x2^2 - x1^3, x1*x2", &[1, 2, 1, 1]),
];

pub fn xring(n: usize) -> Ring {
    series_ring(n)
}

pub fn xs(n: usize, s: &str) -> Vec<Poly> {
    parse_poly_list(&series_ring(n), s).unwrap()
}

pub fn ys(n: usize, s: &str) -> Vec<Poly> {
    parse_poly_list(&dual_ring(n), s).unwrap()
}

pub fn ideal(ring: &Ring, s: &str) -> Ideal {
    Ideal::new(ring, parse_poly_list(ring, s).unwrap())
}

impl Instance {
    pub fn gens(&self) -> Vec<Poly> {
        xs(self.n, self.ideal)
    }

    pub fn dual(&self) -> DualBasisWithContractions {
        inverse_system(&self.gens(), None).unwrap()
    }

    pub fn iperp(&self) -> InverseSystemBasis {
        self.dual().to_inverse_system()
    }
}

/// `⟨polys⟩` with contraction matrices.
pub fn closure(n: usize, s: &str) -> DualBasisWithContractions {
    let m = InverseSystemBasis::generated_by(&dual_ring(n), &ys(n, s));
    DualBasisWithContractions::from_basis(m.ring(), m.basis()).unwrap()
}

/// Adapted data with the layer representatives printed alongside a
/// computed cover, so that parameter names agree with the printed ideals.
pub fn printed_layers(n: usize, ideal: &str, layers: &[&str]) -> AdaptedIntegral {
    let base = inverse_system(&xs(n, ideal), None).unwrap();
    let layers = layers.iter().map(|l| ys(n, l)).collect();
    AdaptedIntegral::from_layers(base, layers).unwrap()
}

/// `𝔪²` in two variables.
pub const SQUARE: Instance = COLENGTH_ONE[0];

/// `HF = {1,3,2}`, `τ = 3`: Teter, with `𝔞` radical-equal to `(a1·a4·a6)`.
pub const TETER_132: Instance = inst(3, "x1^2, x1*x2, x1*x3, x2*x3, x2^3, x3^3", &[1, 3, 2]);
pub const TETER_132_LAYER: &str = "y3^3, y2*y3, y1*y3, y2^3, y1*y2, y1^2";

/// `HF = {1,3,1}`, `τ = 2`.
pub const MGC_131: Instance = inst(3, "x1^2, x2^2, x3^2, x1*x2, x1*x3", &[1, 3, 1]);
pub const MGC_131_LAYERS: [&str; 2] = [
    "y3^2, y1*y3, y2^2, y1*y2, y1^2",
    "y1^2*y3, y1*y2*y3, y2^2*y3, y1*y3^2, y3^3, y2*y3^2, y1^2*y2, y1*y2^2, y2^3, y1^3",
];
pub const MGC_131_B: &str = "b8^2-b7*b9, b7*b8-b9*b10, b6*b8-b4*b9, b3*b8-b2*b9, b2*b8-b1*b9, \
    b1*b8-b3*b10, b7^2-b8*b10, b6*b7-b4*b8, b4*b7-b6*b10, b3*b7-b1*b9, b2*b7-b3*b10, \
    b1*b7-b2*b10, b3*b6-b5*b9, b2*b6-b5*b8, b1*b6-b5*b7, b2*b5-b4*b6, b4^2-b1*b5, \
    b3*b4-b5*b8, b2*b4-b5*b7, b1*b4-b5*b10, b2*b3-b4*b9, b1*b3-b4*b8, b2^2-b4*b8, \
    b1*b2-b6*b10, b1^2-b4*b10, b3*b5*b10-b6^2*b10, b3^2*b10-b6*b9*b10, b4*b6^2-b5^2*b8, \
    b6^3*b10-b5^2*b9*b10";
pub const MGC_131_D_EXTRA: &str = "a5*b3*b5-a5*b6^2, a5*b3^2-a5*b6*b9, a5*b6^3-a5*b5^2*b9";

/// `HF = {1,3,1,1}`, `τ = 2`.
pub const MGC_1311: Instance = inst(3, "x1*x2, x1*x3, x2*x3, x2^2, x3^2 - x1^3", &[1, 3, 1, 1]);
pub const MGC_1311_LAYERS: [&str; 2] = [
    "y3^2, y2*y3, y1*y3, y2^2, y1*y2",
    "y1*y2*y3, y2^2*y3, y1*y3^2, y2*y3^2, y3^3, y1^2*y3, y1*y2^2, y2^3, y1^2*y2, -y1^4",
];
/// The printed 27 generators of `𝔟`.
pub const MGC_1311_B: &str = "b8*b10, b7*b10, b4*b10, b2*b10, b1*b10, b6*b8-b2*b9, b7^2-b8*b9, \
    b6*b7-b1*b9, b4*b7-b3*b8, b3*b7-b4*b9, b2*b7-b1*b8, b1*b7-b2*b9, b4*b6-b5*b9, \
    b2*b6-b4*b9, b1*b6-b3*b9, b4^2-b2*b5, b3*b4-b1*b5, b2*b4-b5*b8, b1*b4-b5*b7, \
    b3^2-b5*b6+b3*b10, b2*b3-b5*b7, b1*b3-b5*b9, b2^2-b4*b8, b1*b2-b3*b8, b1^2-b4*b9, \
    b5*b9*b10, b3*b9*b10";
/// The two generators completing the printed 29 generators of `𝔡̂`.
pub const MGC_1311_D_EXTRA: &str = "a4*b5*b10, a4*b3*b10";

/// `HF = {1,2,2,1}` with the layers printed for it.
pub const MGC_1221: Instance = inst(2, "x1^2, x1*x2^2, x2^4", &[1, 2, 2, 1]);
pub const MGC_1221_LAYERS: [&str; 2] = ["y2^4, y1*y2^2, y1^2", "y1^2*y2, y1*y2^3, y2^5, y1^3"];

/// `HF = {1,3,2}`, `τ = 2`. The first four layer-2 elements span the `P⁷`
/// carrying `MGC(A) = P⁷ ∖ V₊(b2² − b1·b3)`.
pub const MGC_132: Instance = inst(3, "x1^2, x2^2, x3^2, x1*x2", &[1, 3, 2]);
pub const MGC_132_LAYERS: [&str; 2] = [
    "y3^2, y2^2, y1*y2, y1^2",
    "y1^2*y3, y1*y2*y3, y2^2*y3, y3^3, y1^3, y1^2*y2, y1*y2^2, y1*y3^2, y2^3, y2*y3^2",
];
