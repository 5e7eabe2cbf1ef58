//! Exponent vectors.

use std::cmp::Ordering;
use std::fmt;

/// Upper bound on the number of variables in any polynomial ring.
pub const MAX_VARS: usize = 48;

/// An exponent vector `α ∈ ℕⁿ` with a cached total degree `|α|`.
///
/// Entries past the ring's variable count are always zero, so monomials from
/// the same ring compare and hash consistently regardless of `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables ({})", exps.len());
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    /// The monomial `x_i^e`.
    pub fn var(i: usize, e: u32) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = u16::try_from(e).expect("exponent overflow");
        m.deg = e;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        let old = self.exps[i] as u32;
        self.exps[i] = u16::try_from(e).expect("exponent overflow");
        self.deg = self.deg - old + e;
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        out.deg = self.deg + other.deg;
        out
    }

    /// `self ≥ other` componentwise.
    #[inline]
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        if other.deg > self.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a >= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divisible_by(other) {
            return None;
        }
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] -= other.exps[i];
        }
        out.deg = self.deg - other.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i mod 64` set when variable `i` occurs; a cheap divisibility filter.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Lexicographic comparison with `x_1 > x_2 > …`.
    #[inline]
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Graded lexicographic comparison.
    #[inline]
    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| self.cmp_lex(other))
    }

    /// Graded reverse lexicographic comparison among the first `nvars` variables.
    #[inline]
    pub fn cmp_grevlex(&self, other: &Monomial, nvars: usize) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {
                for i in (0..nvars).rev() {
                    match self.exps[i].cmp(&other.exps[i]) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }

    /// Degree restricted to the variables selected by `vars`.
    pub fn partial_degree(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i] as u32).sum()
    }

    /// All monomials in `nvars` variables of total degree exactly `d`, in
    /// descending lexicographic order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e;
                rec(pos + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }

    /// All monomials of degree `lo ≤ |α| ≤ hi`, by increasing degree.
    pub fn all_in_degree_range(nvars: usize, lo: u32, hi: u32) -> Vec<Monomial> {
        (lo..=hi).flat_map(|d| Self::all_of_degree(nvars, d)).collect()
    }
}

impl Ord for Monomial {
    /// The default (storage) order is graded lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial::one()]);
        assert_eq!(Monomial::all_in_degree_range(3, 1, 3).len(), 3 + 6 + 10);
    }

    #[test]
    fn orders() {
        let x1 = Monomial::var(0, 1);
        let x2 = Monomial::var(1, 1);
        let x3sq = Monomial::var(2, 2);
        assert_eq!(x1.cmp_grlex(&x2), Ordering::Greater);
        assert_eq!(x3sq.cmp_grlex(&x1), Ordering::Greater);
        // grevlex: x1*x3 < x2^2 in three variables
        let x1x3 = x1.mul(&Monomial::var(2, 1));
        let x2sq = Monomial::var(1, 2);
        assert_eq!(x1x3.cmp_grevlex(&x2sq, 3), Ordering::Less);
        assert_eq!(x1x3.cmp_grlex(&x2sq), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 1, 0]);
        assert_eq!(a.checked_div(&b), Some(Monomial::var(0, 1)));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.lcm(&Monomial::var(2, 3)).degree(), 6);
        assert!(a.coprime(&Monomial::var(2, 1)));
    }
}
