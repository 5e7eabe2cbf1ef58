//! Buchberger's algorithm with the Gebauer–Möller pair update.

use std::cmp::Ordering;

use crate::arith::{Monomial, Poly, Rational, Ring};

use super::order::TermOrder;

pub(crate) type Term = (Monomial, Rational);

/// Sorts and combines term lists in a fixed monomial order. Term lists are
/// kept in descending order.
pub(crate) struct Sorter<'a> {
    pub order: &'a TermOrder,
    pub nvars: usize,
}

impl Sorter<'_> {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.nvars)
    }

    pub fn sorted(&self, p: &Poly) -> Vec<Term> {
        let mut v = p.terms().to_vec();
        if !matches!(self.order, TermOrder::Grlex) {
            v.sort_by(|a, b| self.cmp(&b.0, &a.0));
        }
        v
    }

    /// `p - c·q·g`, assuming the leading terms cancel.
    fn sub_mul_tail(&self, p: &[Term], c: &Rational, q: &Monomial, g: &[Term]) -> Vec<Term> {
        let a = &p[1..];
        let b = &g[1..];
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut bm = b.first().map(|t| t.0.mul(q));
        while i < a.len() && j < b.len() {
            let m = bm.expect("in range");
            match self.cmp(&a[i].0, &m) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((m, -&(&b[j].1 * c)));
                    j += 1;
                    bm = b.get(j).map(|t| t.0.mul(q));
                }
                Ordering::Equal => {
                    let x = &a[i].1 - &(&b[j].1 * c);
                    if !x.is_zero() {
                        out.push((m, x));
                    }
                    i += 1;
                    j += 1;
                    bm = b.get(j).map(|t| t.0.mul(q));
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        while j < b.len() {
            out.push((b[j].0.mul(q), -&(&b[j].1 * c)));
            j += 1;
        }
        out
    }
}

pub(crate) fn make_monic(v: &mut [Term]) {
    if let Some((_, c)) = v.first() {
        if !c.is_one() {
            let inv = c.recip();
            for t in v.iter_mut() {
                t.1 *= &inv;
            }
        }
    }
}

fn max_degree(v: &[Term]) -> u32 {
    v.iter().map(|t| t.0.degree()).max().unwrap_or(0)
}

/// Leading monomials of a set of basis elements, with support masks for a
/// quick divisibility filter.
#[derive(Default)]
pub(crate) struct Divisors {
    lts: Vec<Monomial>,
    masks: Vec<u64>,
    ids: Vec<usize>,
}

impl Divisors {
    pub fn push(&mut self, lt: Monomial, id: usize) {
        self.masks.push(lt.support_mask());
        self.lts.push(lt);
        self.ids.push(id);
    }

    pub fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        let mut k = 0;
        for i in 0..self.ids.len() {
            if keep(self.ids[i]) {
                self.lts.swap(k, i);
                self.masks.swap(k, i);
                self.ids.swap(k, i);
                k += 1;
            }
        }
        self.lts.truncate(k);
        self.masks.truncate(k);
        self.ids.truncate(k);
    }

    #[inline]
    pub fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        for k in 0..self.lts.len() {
            if self.masks[k] & !mask == 0 && m.divisible_by(&self.lts[k]) {
                return Some(self.ids[k]);
            }
        }
        None
    }
}

/// Fully reduces `p` by the polynomials `polys[id]` registered in `divs`.
pub(crate) fn reduce_full(s: &Sorter, mut p: Vec<Term>, polys: &[Vec<Term>], divs: &Divisors) -> Vec<Term> {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        match divs.find(m) {
            Some(id) => {
                let g = &polys[id];
                let q = m.checked_div(&g[0].0).expect("divisor");
                let c = c.clone();
                p = s.sub_mul_tail(&p[start..], &c, &q, g);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'a> {
    s: Sorter<'a>,
    polys: Vec<Vec<Term>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    divs: Divisors,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lt(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.lt(i).lcm(self.lt(j));
        let di = self.sugar[i] - self.lt(i).degree();
        let dj = self.sugar[j] - self.lt(j).degree();
        Pair { i, j, lcm, sugar: lcm.degree() + di.max(dj) }
    }

    /// Inserts a new monic, fully reduced element (Gebauer–Möller update).
    fn insert(&mut self, h: Vec<Term>, sugar: u32) {
        let sugar = sugar.max(max_degree(&h));
        let hid = self.polys.len();
        let hlt = h[0].0;
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(false);

        let cand: Vec<Pair> = (0..hid)
            .filter(|&g| self.active[g])
            .map(|g| self.pair(g, hid))
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in cand.iter().enumerate() {
            let other = self.lt(p.i);
            let coprime = hlt.coprime(other);
            let dominated = cand[k + 1..].iter().chain(kept.iter()).any(|q| p.lcm.divisible_by(&q.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        kept.retain(|p| !hlt.coprime(self.lt(p.i)));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = polys[p.i][0].0.lcm(&hlt);
            let lj = polys[p.j][0].0.lcm(&hlt);
            !p.lcm.divisible_by(&hlt) || li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(kept);

        for g in 0..hid {
            if self.active[g] && self.polys[g][0].0.divisible_by(&hlt) {
                self.active[g] = false;
            }
        }
        let active = &self.active;
        self.divs.retain(|id| active[id]);
        self.active[hid] = true;
        self.divs.push(hlt, hid);
    }

    fn best_pair(&self) -> Option<usize> {
        let s = &self.s;
        (0..self.pairs.len()).min_by(|&x, &y| {
            let (p, q) = (&self.pairs[x], &self.pairs[y]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| s.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })
    }

    fn spoly(&self, p: &Pair) -> Vec<Term> {
        let gi = &self.polys[p.i];
        let gj = &self.polys[p.j];
        let qi = p.lcm.checked_div(&gi[0].0).expect("lcm");
        let qj = p.lcm.checked_div(&gj[0].0).expect("lcm");
        let a: Vec<Term> = gi.iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect();
        self.s.sub_mul_tail(&a, &Rational::one(), &qj, gj)
    }
}

/// Reduced Gröbner basis as term lists sorted in `order`, ascending by
/// leading monomial; empty for the zero ideal.
pub(crate) fn reduced_basis(gens: &[Poly], order: &TermOrder, nvars: usize) -> Vec<Vec<Term>> {
    let s = Sorter { order, nvars };
    let mut inputs: Vec<Vec<Term>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut v = s.sorted(p);
            make_monic(&mut v);
            v
        })
        .collect();
    if inputs.is_empty() {
        return Vec::new();
    }
    // Inputs wait in the queue like S-pairs, ordered by degree, so that
    // large generating sets mostly reduce to zero against lower degrees.
    inputs.sort_by(|a, b| {
        max_degree(b)
            .cmp(&max_degree(a))
            .then_with(|| s.cmp(&b[0].0, &a[0].0))
            .then_with(|| b.len().cmp(&a.len()))
    });

    let mut st = State {
        s,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        divs: Divisors::default(),
        pairs: Vec::new(),
    };
    loop {
        let next_input = inputs.last().map(|f| max_degree(f));
        let pair_sugar = st.best_pair().map(|k| st.pairs[k].sugar);
        let (f, sugar) = match (next_input, pair_sugar) {
            (Some(d), Some(ps)) if d <= ps => (inputs.pop().expect("input"), d),
            (Some(d), None) => (inputs.pop().expect("input"), d),
            (_, Some(_)) => {
                let k = st.best_pair().expect("pair");
                let p = st.pairs.swap_remove(k);
                (st.spoly(&p), p.sugar)
            }
            (None, None) => break,
        };
        let mut h = reduce_full(&st.s, f, &st.polys, &st.divs);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if h[0].0.is_one() {
            return vec![h];
        }
        st.insert(h, sugar);
    }

    let ids: Vec<usize> = (0..st.polys.len()).filter(|&i| st.active[i]).collect();
    let mut out = Vec::with_capacity(ids.len());
    for &i in &ids {
        let mut others = Divisors::default();
        for &j in &ids {
            if j != i {
                others.push(st.polys[j][0].0, j);
            }
        }
        let g = &st.polys[i];
        let mut tail = reduce_full(&st.s, g[1..].to_vec(), &st.polys, &others);
        let mut r = vec![g[0].clone()];
        r.append(&mut tail);
        out.push(r);
    }
    out.sort_by(|a, b| st.s.cmp(&a[0].0, &b[0].0));
    out
}

/// A reduced Gröbner basis of a polynomial ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: TermOrder,
    elems: Vec<Vec<Term>>,
}

impl GroebnerBasis {
    pub fn new(ring: &Ring, gens: &[Poly], order: &TermOrder) -> GroebnerBasis {
        assert!(gens.iter().all(|g| g.ring().same(ring)), "generator from a different ring");
        let elems = reduced_basis(gens, order, ring.nvars());
        GroebnerBasis { ring: ring.clone(), order: order.clone(), elems }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0][0].0.is_one()
    }

    /// Basis elements, ascending by leading monomial.
    pub fn polys(&self) -> Vec<Poly> {
        self.elems.iter().map(|t| Poly::from_terms(&self.ring, t.iter().cloned())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|t| t[0].0).collect()
    }

    fn sorter(&self) -> Sorter<'_> {
        Sorter { order: &self.order, nvars: self.ring.nvars() }
    }

    fn divisors(&self) -> Divisors {
        let mut d = Divisors::default();
        for (i, t) in self.elems.iter().enumerate() {
            d.push(t[0].0, i);
        }
        d
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        assert!(f.ring().same(&self.ring), "polynomial from a different ring");
        let s = self.sorter();
        let r = reduce_full(&s, s.sorted(f), &self.elems, &self.divisors());
        Poly::from_terms(&self.ring, r)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        let s = self.sorter();
        let divs = self.divisors();
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (gi, gj) = (&self.elems[i], &self.elems[j]);
                let lcm = gi[0].0.lcm(&gj[0].0);
                let qi = lcm.checked_div(&gi[0].0).expect("lcm");
                let qj = lcm.checked_div(&gj[0].0).expect("lcm");
                let a: Vec<Term> = gi.iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect();
                let sp = s.sub_mul_tail(&a, &Rational::one(), &qj, gj);
                if !reduce_full(&s, sp, &self.elems, &divs).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Number of standard monomials of degree at most `bound`, i.e. the
    /// dimension of `k[z]/(J + 𝔪^{bound+1})` when the order is graded.
    pub fn count_standard_monomials_up_to(&self, bound: u32) -> usize {
        let lts = self.leading_monomials();
        let n = self.ring.nvars();
        let mut count = 0;
        for d in 0..=bound {
            let mut any = false;
            for m in Monomial::all_of_degree(n, d) {
                if !lts.iter().any(|l| m.divisible_by(l)) {
                    count += 1;
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        count
    }
}

/// Reduced Gröbner basis of `gens` (all from one ring), ascending by leading
/// monomial.
pub fn buchberger(gens: &[Poly], order: &TermOrder) -> Vec<Poly> {
    match gens.first() {
        None => Vec::new(),
        Some(g) => GroebnerBasis::new(g.ring(), gens, order).polys(),
    }
}

/// Remainder of `f` on division by a Gröbner basis `basis` for `order`.
pub fn normal_form(f: &Poly, basis: &[Poly], order: &TermOrder) -> Poly {
    let s = Sorter { order, nvars: f.nvars() };
    let mut elems = Vec::new();
    let mut divs = Divisors::default();
    for g in basis.iter().filter(|g| !g.is_zero()) {
        let mut v = s.sorted(g);
        make_monic(&mut v);
        divs.push(v[0].0, elems.len());
        elems.push(v);
    }
    Poly::from_terms(f.ring(), reduce_full(&s, s.sorted(f), &elems, &divs))
}
