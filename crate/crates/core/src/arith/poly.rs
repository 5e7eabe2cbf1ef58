//! Sparse multivariate polynomials over ℚ.
//!
//! A [`Poly`] lives in a [`Ring`], which names its variables. Terms are kept
//! sorted in descending graded-lexicographic order with no zero
//! coefficients, so two polynomials are equal iff their term vectors are.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::{Monomial, MAX_VARS};
use super::rational::Rational;
use super::ArithError;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    names: Vec<String>,
}

/// A polynomial ring `ℚ[z_1, …, z_n]` identified by its variable names.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Ring {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(
            names.len() <= MAX_VARS,
            "rings are limited to {MAX_VARS} variables"
        );
        Ring(Arc::new(RingData { names }))
    }

    /// `prefix1, …, prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Ring {
        Ring::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    /// A ring with the same variables followed by `extra`.
    pub fn extended<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Ring {
        let mut names = self.0.names.clone();
        names.extend(extra.into_iter().map(Into::into));
        Ring::new(names)
    }

    /// A fresh variable name not used by this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut k = 0usize;
        loop {
            let cand = if k == 0 { stem.to_string() } else { format!("{stem}{k}") };
            if self.index_of(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Ring {}

/// A polynomial with exact rational coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::one(), c)] };
        Poly { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, Rational::one())
    }

    /// The variable `z_i`.
    pub fn var(ring: &Ring, i: usize) -> Poly {
        assert!(i < ring.nvars(), "variable index out of range");
        Poly::monomial(ring, Monomial::var(i, 1), Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Poly {
        Poly::constant(ring, c).mul_monomial(&m)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Poly {
        let mut v: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// Leading term with respect to graded lex.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Degree in the variables `vars` if every term has the same one.
    pub fn block_degree(&self, vars: &[usize]) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.partial_degree(vars));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Indices of variables occurring in the polynomial.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars()];
        for (m, _) in &self.terms {
            for (i, u) in used.iter_mut().enumerate() {
                if m.exp(i) > 0 {
                    *u = true;
                }
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    fn check_ring(&self, other: &Poly) -> Result<(), ArithError> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(ArithError::RingMismatch {
                left: self.ring.names().join(","),
                right: other.ring.names().join(","),
            })
        }
    }

    fn merge(&self, other: &Poly, negate_other: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Poly::zero(&self.ring);
        for (m, c) in &small.terms {
            let part = big.mul_term(m, c);
            acc = acc.merge(&part, false);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Multiplying by a monomial preserves any monomial order, so no re-sort.
    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient (grlex). Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Evaluates at a point (one value per variable).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "point has wrong dimension");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes constants for some variables, leaving the rest symbolic.
    pub fn substitute(&self, values: &[(usize, Rational)]) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut m = *m;
            let mut c = c.clone();
            for (i, v) in values {
                let e = m.exp(*i);
                if e > 0 {
                    c *= &v.pow(e);
                    m.set_exp(*i, 0);
                }
            }
            (m, c)
        });
        Poly::from_terms(&self.ring, terms)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]`.
    pub fn map_vars(&self, target: &Ring, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.nvars());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one();
            for (i, &j) in map.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    out.set_exp(j, out.exp(j) + e);
                }
            }
            (out, c.clone())
        });
        Poly::from_terms(target, terms)
    }

    /// Same polynomial viewed in a ring whose variables extend this one's
    /// (the first `n` variables coincide).
    pub fn embed(&self, target: &Ring) -> Poly {
        assert!(target.nvars() >= self.nvars());
        Poly { ring: target.clone(), terms: self.terms.clone() }
    }

    /// Re-expresses in a smaller ring; the caller guarantees the dropped
    /// trailing variables are absent.
    pub fn restrict(&self, target: &Ring) -> Poly {
        debug_assert!(self
            .terms
            .iter()
            .all(|(m, _)| (target.nvars()..self.nvars()).all(|i| m.exp(i) == 0)));
        Poly { ring: target.clone(), terms: self.terms.clone() }
    }

    /// Partial derivative-free coefficient extraction: writes the polynomial
    /// as `Σ_e z_i^e · c_e` and returns the `c_e` indexed by `e`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let maxe = self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); maxe + 1];
        for (m, c) in &self.terms {
            let e = m.exp(i);
            let mut rest = *m;
            rest.set_exp(i, 0);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets.into_iter().map(|b| Poly::from_terms(&self.ring, b)).collect()
    }

    /// A canonical scalar normalization: leading coefficient 1.
    pub fn normalized(&self) -> Poly {
        self.monic()
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = format_monomial(m, names);
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, name) in names.iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    /// Canonical ordering for output: by leading monomials, then terms, then
    /// coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(self.ring.names()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
