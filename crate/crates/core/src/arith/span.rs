//! Finite-dimensional ℚ-subspaces of a polynomial ring.

use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::poly::{Poly, Ring};
use super::rational::Rational;

/// A subspace kept in reduced echelon form with respect to graded lex
/// leading monomials. Each echelon row remembers how it is written in terms
/// of the accepted generators, so coordinates in that basis are available.
#[derive(Clone, Debug)]
pub struct LinearSpan {
    ring: Ring,
    gens: Vec<Poly>,
    rows: Vec<Poly>,
    track: Vec<Vec<Rational>>,
    pivots: FxHashMap<Monomial, usize>,
}

impl LinearSpan {
    pub fn new(ring: &Ring) -> LinearSpan {
        LinearSpan {
            ring: ring.clone(),
            gens: Vec::new(),
            rows: Vec::new(),
            track: Vec::new(),
            pivots: FxHashMap::default(),
        }
    }

    /// Span of `polys`; dependent inputs are skipped.
    pub fn from_polys<'a>(ring: &Ring, polys: impl IntoIterator<Item = &'a Poly>) -> LinearSpan {
        let mut s = LinearSpan::new(ring);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The accepted (linearly independent) generators, in insertion order.
    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// The reduced echelon basis, in insertion order of pivots.
    pub fn echelon(&self) -> &[Poly] {
        &self.rows
    }

    /// Leading monomials of the echelon basis.
    pub fn pivot_monomials(&self) -> Vec<Monomial> {
        self.rows.iter().map(|r| r.terms()[0].0).collect()
    }

    fn pivot_coefficients(&self, p: &Poly) -> Vec<(usize, Rational)> {
        p.terms()
            .iter()
            .filter_map(|(m, c)| self.pivots.get(m).map(|&r| (r, c.clone())))
            .collect()
    }

    fn combine(&self, p: &Poly, coeffs: &[(usize, Rational)]) -> Poly {
        if coeffs.is_empty() {
            return p.clone();
        }
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in p.terms() {
            acc.insert(*m, c.clone());
        }
        for (r, c) in coeffs {
            for (m, x) in self.rows[*r].terms() {
                let e = acc.entry(*m).or_insert_with(Rational::zero);
                *e -= &(x * c);
            }
        }
        Poly::from_terms(&self.ring, acc)
    }

    /// Remainder of `p` after eliminating every pivot monomial; zero iff
    /// `p` lies in the span.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let coeffs = self.pivot_coefficients(p);
        self.combine(p, &coeffs)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Coordinates of `p` with respect to [`generators`](Self::generators),
    /// or `None` when `p` is outside the span.
    pub fn coordinates(&self, p: &Poly) -> Option<Vec<Rational>> {
        let coeffs = self.pivot_coefficients(p);
        if !self.combine(p, &coeffs).is_zero() {
            return None;
        }
        let mut out = vec![Rational::zero(); self.gens.len()];
        for (r, c) in coeffs {
            for (j, t) in self.track[r].iter().enumerate() {
                if !t.is_zero() {
                    out[j] += &(t * &c);
                }
            }
        }
        Some(out)
    }

    /// Adds `p`; returns its generator index when it enlarged the span.
    pub fn insert(&mut self, p: &Poly) -> Option<usize> {
        assert!(p.ring().same(&self.ring), "polynomial from a different ring");
        let coeffs = self.pivot_coefficients(p);
        let rem = self.combine(p, &coeffs);
        if rem.is_zero() {
            return None;
        }
        let g = self.gens.len();
        self.gens.push(p.clone());
        for t in &mut self.track {
            t.push(Rational::zero());
        }
        let mut tr = vec![Rational::zero(); g + 1];
        tr[g] = Rational::one();
        for (r, c) in &coeffs {
            for (j, t) in self.track[*r].iter().enumerate() {
                if !t.is_zero() {
                    tr[j] -= &(t * c);
                }
            }
        }
        let (lead, lc) = rem.terms()[0].clone();
        let inv = lc.recip();
        let row = rem.scale(&inv);
        for t in &mut tr {
            *t *= &inv;
        }
        for r in 0..self.rows.len() {
            let c = self.rows[r].coefficient(&lead);
            if c.is_zero() {
                continue;
            }
            self.rows[r] = &self.rows[r] - &row.scale(&c);
            for j in 0..=g {
                if !tr[j].is_zero() {
                    let d = &tr[j] * &c;
                    self.track[r][j] -= &d;
                }
            }
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(row);
        self.track.push(tr);
        Some(g)
    }

    pub fn is_subspace_of(&self, other: &LinearSpan) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn same_span(&self, other: &LinearSpan) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// `dim(V ∩ S_{≤d})` for every `d` up to the top degree, read off from
    /// the degrees of the pivots.
    pub fn filtration_dims(&self) -> Vec<usize> {
        let top = self.rows.iter().map(|r| r.terms()[0].0.degree()).max().unwrap_or(0) as usize;
        let mut per = vec![0usize; top + 1];
        for r in &self.rows {
            per[r.terms()[0].0.degree() as usize] += 1;
        }
        let mut acc = 0;
        per.into_iter()
            .map(|k| {
                acc += k;
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    fn p(r: &Ring, s: &str) -> Poly {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn dependent_insert_is_rejected() {
        let r = Ring::indexed("y", 3);
        let mut s = LinearSpan::new(&r);
        assert_eq!(s.insert(&p(&r, "y1*y2")), Some(0));
        assert_eq!(s.insert(&p(&r, "y3^3")), Some(1));
        assert_eq!(s.insert(&p(&r, "y1*y2 + y3^3")), None);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn coordinates_in_generator_basis() {
        let r = Ring::indexed("y", 2);
        let s = LinearSpan::from_polys(&r, &[p(&r, "y1 + y2"), p(&r, "y1 - y2"), p(&r, "1")]);
        let c = s.coordinates(&p(&r, "3*y1 + y2 - 2")).unwrap();
        assert_eq!(c, vec![Rational::from(2), Rational::from(1), Rational::from(-2)]);
        assert!(s.coordinates(&p(&r, "y1^2")).is_none());
    }

    #[test]
    fn span_equality_and_filtration() {
        let r = Ring::indexed("y", 2);
        let a = LinearSpan::from_polys(&r, &[p(&r, "1"), p(&r, "y1"), p(&r, "y1^2 + y2")]);
        let b = LinearSpan::from_polys(&r, &[p(&r, "y1^2 + y2 + y1"), p(&r, "y1 + 1"), p(&r, "1")]);
        assert!(a.same_span(&b));
        assert_eq!(a.filtration_dims(), vec![1, 2, 3]);
    }
}
