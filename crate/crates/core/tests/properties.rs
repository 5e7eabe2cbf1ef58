mod common;

use gcover::apolarity::{contract, contract_var, dual_ring, series_ring, InverseSystemBasis};
use gcover::arith::{Monomial, Poly, QMatrix, Rational};
use gcover::groebner::Ideal;
use gcover::integrator::{integral_wrt_ideal_oracle, integrate_once};
use gcover::inverse_system::{inverse_system, DualBasisWithContractions};
use proptest::prelude::*;

fn poly(n: usize, dual: bool, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    let ring = if dual { dual_ring(n) } else { series_ring(n) };
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -5i64..=5), 0..max_terms).prop_map(move |t| {
        Poly::from_terms(&ring, t.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), Rational::from(c))))
    })
}

fn matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(|rows| {
            QMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Rational::from).collect()).collect())
        })
    })
}

/// `(x1^a, x2^b, x1^i·x2^j, …)`, always 𝔪-primary.
fn staircase() -> impl Strategy<Value = Vec<Poly>> {
    (1u32..5, 1u32..5, prop::collection::vec((1u32..4, 1u32..4), 0..3)).prop_map(|(a, b, mixed)| {
        let r = series_ring(2);
        let mut gens = vec![Poly::var(&r, 0).pow(a), Poly::var(&r, 1).pow(b)];
        gens.extend(mixed.iter().map(|&(i, j)| &Poly::var(&r, 0).pow(i) * &Poly::var(&r, 1).pow(j)));
        gens
    })
}

/// Standard monomials of a monomial ideal in two variables.
fn count_standard(gens: &[Poly]) -> usize {
    let lead: Vec<Monomial> = gens.iter().map(|g| g.leading().unwrap().0.clone()).collect();
    Monomial::all_in_degree_range(2, 0, 8).iter().filter(|m| !lead.iter().any(|l| m.divisible_by(l))).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contraction_is_an_action(f in poly(3, false, 2, 4), g in poly(3, false, 2, 4), h in poly(3, true, 5, 5)) {
        prop_assert_eq!(contract(&(&f * &g), &h).unwrap(), contract(&f, &contract(&g, &h).unwrap()).unwrap());
        prop_assert_eq!(contract(&(&f + &g), &h).unwrap(), &contract(&f, &h).unwrap() + &contract(&g, &h).unwrap());
    }

    #[test]
    fn rref_is_idempotent_and_kernel_is_exact(a in matrix()) {
        let r = a.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        let kernel = a.kernel_basis();
        prop_assert_eq!(kernel.len() + a.rank(), a.cols());
        for v in &kernel {
            prop_assert!(a.mul_vec(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn inverse_system_of_a_monomial_ideal(gens in staircase()) {
        let d = inverse_system(&gens, None).unwrap();
        prop_assert_eq!(d.dim(), count_standard(&gens));
        prop_assert!(d.verify() && d.commute());
        for g in &gens {
            for b in d.basis() {
                prop_assert!(contract(g, b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn closure_is_closed_and_contains_generators(fs in prop::collection::vec(poly(2, true, 3, 4), 1..3)) {
        let m = InverseSystemBasis::generated_by(&dual_ring(2), &fs);
        prop_assert!(m.verify_closed());
        for f in &fs {
            prop_assert!(m.contains(f));
        }
    }

    #[test]
    fn integral_is_the_largest_lift(gens in staircase()) {
        let d = inverse_system(&gens, None).unwrap();
        let up = integrate_once(&d).unwrap();
        let m = d.to_inverse_system();
        prop_assert!(m.is_subspace_of(&up.to_inverse_system()));
        for b in up.basis() {
            for k in 0..2 {
                prop_assert!(m.contains(&contract_var(k, b)));
            }
        }
        let r = series_ring(2);
        let oracle = integral_wrt_ideal_oracle(&m, &[Poly::var(&r, 0), Poly::var(&r, 1)]).unwrap();
        prop_assert!(oracle.same_span(&up.to_inverse_system()));
    }

    #[test]
    fn reduced_basis_is_stable(gens in prop::collection::vec(poly(2, false, 3, 3), 1..4)) {
        let r = series_ring(2);
        let i = Ideal::new(&r, gens.clone());
        let red = i.reduced();
        let again = red.reduced();
        prop_assert_eq!(again.gens(), red.gens());
        for g in &gens {
            prop_assert!(red.contains(g));
        }
        prop_assert!(red.same_ideal(&i));
    }
}

#[test]
fn from_basis_rejects_open_spans() {
    let r = dual_ring(2);
    let f = gcover::arith::parse_poly(&r, "y1*y2").unwrap();
    assert!(DualBasisWithContractions::from_basis(&r, &[f]).is_err());
}
