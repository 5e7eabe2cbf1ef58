use std::cmp::Ordering;

use crate::arith::Monomial;

/// A monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Graded lexicographic.
    Grlex,
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic, `z_1 > z_2 > …`.
    Lex,
    /// Elimination order for `block`: monomials are compared first by their
    /// degree in the block, then by `inner`.
    Block { block: Vec<usize>, inner: Box<TermOrder> },
}

impl TermOrder {
    pub fn block(block: Vec<usize>, inner: TermOrder) -> TermOrder {
        TermOrder::Block { block, inner: Box::new(inner) }
    }

    /// Compares two monomials of a ring with `nvars` variables.
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match self {
            TermOrder::Grlex => a.cmp_grlex(b),
            TermOrder::Grevlex => a.cmp_grevlex(b, nvars),
            TermOrder::Lex => a.cmp_lex(b),
            TermOrder::Block { block, inner } => a
                .partial_degree(block)
                .cmp(&b.partial_degree(block))
                .then_with(|| inner.cmp(a, b, nvars)),
        }
    }

    /// True for orders that refine total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::Grlex | TermOrder::Grevlex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_order_eliminates() {
        let ord = TermOrder::block(vec![0], TermOrder::Grevlex);
        let x = Monomial::var(0, 1);
        let big = Monomial::from_exponents(&[0, 5, 5]);
        assert_eq!(ord.cmp(&x, &big, 3), Ordering::Greater);
        assert_eq!(TermOrder::Grevlex.cmp(&x, &big, 3), Ordering::Less);
    }

    #[test]
    fn lex_prefers_first_variable() {
        let x1 = Monomial::var(0, 1);
        let x2cubed = Monomial::var(1, 3);
        assert_eq!(TermOrder::Lex.cmp(&x1, &x2cubed, 2), Ordering::Greater);
        assert_eq!(TermOrder::Grlex.cmp(&x1, &x2cubed, 2), Ordering::Less);
    }
}
