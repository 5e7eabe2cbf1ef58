//! Gröbner bases over ℚ and the ideal operations built on them:
//! elimination, saturation, intersection and radical membership.

mod buchberger;
mod order;

pub use buchberger::{buchberger, normal_form, GroebnerBasis};
pub use order::TermOrder;

use std::fmt;

use thiserror::Error;

use crate::arith::{Poly, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturator,
    #[error("variable index {0} out of range")]
    BadVariable(usize),
}

/// An ideal given by generators in a fixed polynomial ring.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
}

impl Ideal {
    /// Zero generators are dropped. Panics on generators from another ring.
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Poly>) -> Ideal {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        assert!(gens.iter().all(|g| g.ring().same(ring)), "generator from a different ring");
        Ideal { ring: ring.clone(), gens }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, [Poly::one(ring)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Poly> {
        self.gens
    }

    /// True when there are no (nonzero) generators.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner(&self, order: &TermOrder) -> GroebnerBasis {
        GroebnerBasis::new(&self.ring, &self.gens, order)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner(&TermOrder::Grevlex).is_unit()
    }

    pub fn contains(&self, f: &Poly) -> bool {
        f.is_zero() || self.groebner(&TermOrder::Grevlex).contains(f)
    }

    /// Same ideal given by its reduced Gröbner basis for grevlex.
    pub fn reduced(&self) -> Ideal {
        Ideal::new(&self.ring, self.groebner(&TermOrder::Grevlex).polys())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Adds the given extra generators.
    pub fn with(&self, extra: impl IntoIterator<Item = Poly>) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    /// Moves the generators to `target`, sending variable `i` to `map[i]`.
    pub fn map_vars(&self, target: &Ring, map: &[usize]) -> Ideal {
        Ideal::new(target, self.gens.iter().map(|g| g.map_vars(target, map)))
    }

    /// Substitutes constants for some variables.
    pub fn substitute(&self, values: &[(usize, Rational)]) -> Ideal {
        Ideal::new(&self.ring, self.gens.iter().map(|g| g.substitute(values)))
    }

    /// Every generator is homogeneous for the standard grading.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// Both ideals contain each other's generators.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        let a = self.groebner(&TermOrder::Grevlex);
        let b = other.groebner(&TermOrder::Grevlex);
        other.gens.iter().all(|g| a.contains(g)) && self.gens.iter().all(|g| b.contains(g))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// `J ∩ ℚ[variables outside block]`, expressed in the ring of `J`.
pub fn eliminate(j: &Ideal, block: &[usize]) -> Ideal {
    if block.is_empty() {
        return j.clone();
    }
    let order = TermOrder::block(block.to_vec(), TermOrder::Grevlex);
    let gb = j.groebner(&order);
    let gens = gb
        .polys()
        .into_iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.partial_degree(block) == 0));
    Ideal::new(j.ring(), gens)
}

/// The ring with one extra variable `z` appended, and the index of `z`.
fn with_extra_variable(ring: &Ring, stem: &str) -> (Ring, usize) {
    let z = ring.fresh_name(stem);
    (ring.extended([z]), ring.nvars())
}

/// `(J : f^∞)`, by eliminating `z` from `J + (1 − z·f)`.
pub fn saturate(j: &Ideal, f: &Poly) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroSaturator);
    }
    let (big, z) = with_extra_variable(j.ring(), "z");
    let zf = &Poly::var(&big, z) * &f.embed(&big);
    let gens = j.gens().iter().map(|g| g.embed(&big)).chain([&Poly::one(&big) - &zf]);
    let elim = eliminate(&Ideal::new(&big, gens), &[z]);
    Ok(Ideal::new(j.ring(), elim.gens.iter().map(|g| g.restrict(j.ring()))))
}

/// `(J : z_i^∞)` for a single variable. Homogeneous ideals use a grevlex
/// basis with `z_i` last, whose elements divided by their largest power of
/// `z_i` generate the saturation; others fall back to [`saturate`].
pub fn saturate_by_variable(j: &Ideal, i: usize) -> Result<Ideal, GroebnerError> {
    let n = j.ring().nvars();
    if i >= n {
        return Err(GroebnerError::BadVariable(i));
    }
    if !j.is_homogeneous() {
        return saturate(j, &Poly::var(j.ring(), i));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i, n - 1);
    let swapped = j.map_vars(j.ring(), &perm);
    let gb = swapped.groebner(&TermOrder::Grevlex);
    let last = n - 1;
    let gens = gb.polys().into_iter().map(|g| {
        let e = g.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
        let terms = g.terms().iter().map(|(m, c)| {
            let mut m = *m;
            m.set_exp(last, m.exp(last) - e);
            (m, c.clone())
        });
        Poly::from_terms(j.ring(), terms).map_vars(j.ring(), &perm)
    });
    Ok(Ideal::new(j.ring(), gens))
}

/// `J₁ ∩ J₂`, by eliminating `t` from `t·J₁ + (1 − t)·J₂`.
pub fn intersect(j1: &Ideal, j2: &Ideal) -> Ideal {
    if j1.is_zero() || j2.is_zero() {
        return Ideal::zero(j1.ring());
    }
    let (big, t) = with_extra_variable(j1.ring(), "t");
    let tv = Poly::var(&big, t);
    let one_minus = &Poly::one(&big) - &tv;
    let gens = j1
        .gens()
        .iter()
        .map(|g| &tv * &g.embed(&big))
        .chain(j2.gens().iter().map(|g| &one_minus * &g.embed(&big)));
    let elim = eliminate(&Ideal::new(&big, gens), &[t]);
    Ideal::new(j1.ring(), elim.gens.iter().map(|g| g.restrict(j1.ring())))
}

/// Largest power tried directly before falling back to the Rabinowitsch test.
const DIRECT_POWER_LIMIT: u32 = 3;

/// Decides `f ∈ √J`: first by testing small powers of `f` against one basis
/// of `J`, then by checking `1 ∈ J + (1 − z·f)`.
pub fn radical_membership(f: &Poly, j: &Ideal) -> bool {
    if f.is_zero() {
        return true;
    }
    if j.is_zero() {
        return false;
    }
    let gb = j.groebner(&TermOrder::Grevlex);
    if gb.is_unit() {
        return true;
    }
    let mut pw = f.clone();
    for k in 1..=DIRECT_POWER_LIMIT {
        if gb.contains(&pw) {
            return true;
        }
        if k < DIRECT_POWER_LIMIT {
            pw = &pw * f;
        }
    }
    rabinowitsch(f, j)
}

/// `1 ∈ J + (1 − z·f)`.
pub fn rabinowitsch(f: &Poly, j: &Ideal) -> bool {
    let (big, z) = with_extra_variable(j.ring(), "z");
    let zf = &Poly::var(&big, z) * &f.embed(&big);
    let gens = j.gens().iter().map(|g| g.embed(&big)).chain([&Poly::one(&big) - &zf]);
    Ideal::new(&big, gens).is_unit()
}

/// `√J₁ = √J₂`, i.e. the same projective or affine zero set over the
/// algebraic closure.
pub fn equal_up_to_radical(j1: &Ideal, j2: &Ideal) -> bool {
    radical_contains(j2, j1) && radical_contains(j1, j2)
}

/// Every generator of `inner` lies in `√outer`.
pub fn radical_contains(outer: &Ideal, inner: &Ideal) -> bool {
    inner.gens().iter().all(|g| radical_membership(g, outer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly_list;

    fn ideal(ring: &Ring, s: &str) -> Ideal {
        Ideal::new(ring, parse_poly_list(ring, s).unwrap())
    }

    #[test]
    fn eliminate_examples() {
        let r = Ring::new(["v1", "a", "b"]);
        let e = eliminate(&ideal(&r, "v1 - a, v1 - b"), &[0]);
        assert!(e.same_ideal(&ideal(&r, "a - b")));
        let e = eliminate(&ideal(&r, "a^2"), &[0]);
        assert!(e.same_ideal(&ideal(&r, "a^2")));
    }

    #[test]
    fn eliminate_two_variables() {
        let r = Ring::new(["v1", "v2", "a", "b", "c"]);
        let j = ideal(&r, "v1*a - v2*b, v1*b - v2*c");
        let e = eliminate(&j, &[0, 1]);
        // the resultant b^2 - ac vanishes on the projection but need not lie
        // in the affine elimination ideal itself
        let disc = parse_poly_list(&r, "b^2 - a*c").unwrap().remove(0);
        let sat = saturate(&j, &Poly::var(&r, 0)).unwrap();
        assert!(sat.contains(&disc));
        assert!(e.gens().iter().all(|g| j.contains(g)));
    }

    #[test]
    fn saturate_examples() {
        let r = Ring::new(["x", "y", "z"]);
        let x = Poly::var(&r, 0);
        assert!(saturate(&ideal(&r, "x*y"), &x).unwrap().same_ideal(&ideal(&r, "y")));
        assert!(saturate(&ideal(&r, "x^2"), &x).unwrap().is_unit());
        let s = saturate(&ideal(&r, "x^2*y, x*z"), &x).unwrap();
        assert!(s.same_ideal(&ideal(&r, "x*y, z")) || s.same_ideal(&ideal(&r, "y, z")));
        assert!(s.same_ideal(&ideal(&r, "y, z")));
        assert_eq!(saturate(&ideal(&r, "x"), &Poly::zero(&r)).unwrap_err(), GroebnerError::ZeroSaturator);
    }

    #[test]
    fn bayer_saturation_matches_extra_variable() {
        let r = Ring::new(["x", "y", "z"]);
        let j = ideal(&r, "x^2*y - x*z^2, x*y*z, x^3");
        for i in 0..3 {
            let a = saturate_by_variable(&j, i).unwrap();
            let b = saturate(&j, &Poly::var(&r, i)).unwrap();
            assert!(a.same_ideal(&b), "variable {i}");
        }
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = Ring::new(["x", "y"]);
        let i = intersect(&ideal(&r, "x"), &ideal(&r, "y"));
        assert!(i.same_ideal(&ideal(&r, "x*y")));
    }

    #[test]
    fn radical_examples() {
        let r = Ring::new(["x", "y"]);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        assert!(radical_membership(&x, &ideal(&r, "x^2")));
        assert!(!radical_membership(&y, &ideal(&r, "x")));
        assert!(radical_membership(&x, &ideal(&r, "x^5 + x^4*y, y^7")));
        assert!(equal_up_to_radical(&ideal(&r, "x^2"), &ideal(&r, "x")));
        assert!(!equal_up_to_radical(&ideal(&r, "x"), &ideal(&r, "y")));
    }
}
