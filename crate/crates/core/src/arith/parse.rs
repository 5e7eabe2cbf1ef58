//! Parsing polynomial expressions such as `x1^2 - 3/2*x1*x2 + (x2 - 1)^3`.

use super::poly::{Poly, Ring};
use super::rational::Rational;
use super::ArithError;

/// Parses an expression in the variables of `ring`.
///
/// Accepted syntax: rational constants, variable names, `+ - * /` (division
/// only by constants), `^` with a nonnegative integer exponent, and
/// parentheses. Whitespace is ignored.
pub fn parse_poly(ring: &Ring, src: &str) -> Result<Poly, ArithError> {
    let mut p = Parser { ring, src: src.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.error("empty expression"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(out)
}

/// Parses a comma-separated list of expressions.
pub fn parse_poly_list(ring: &Ring, src: &str) -> Result<Vec<Poly>, ArithError> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(src, b',')
        .into_iter()
        .map(|s| parse_poly(ring, s))
        .collect()
}

/// Splits at `sep` outside parentheses.
pub(crate) fn split_top_level(src: &str, sep: u8) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, b) in src.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if b == sep && depth == 0 => {
                out.push(&src[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&src[start..]);
    out
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ArithError {
        ArithError::Parse { pos: self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, ArithError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ArithError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.error("division by a non-constant or zero"));
                    }
                    acc = acc.scale(&d.constant_term().recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly, ArithError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
            let e: u32 = digits.parse().map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ArithError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("0");
                let n: Rational = s.parse().map_err(|_| self.error("bad number"))?;
                Ok(Poly::constant(self.ring, n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                match self.ring.index_of(name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_back() {
        let ring = Ring::indexed("x", 3);
        let p = parse_poly(&ring, "x1^2 - 3/2*x1*x2 + 2").unwrap();
        assert_eq!(p.to_string(), "x1^2 - 3/2*x1*x2 + 2");
        assert_eq!(parse_poly(&ring, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn parentheses_and_powers() {
        let ring = Ring::indexed("x", 2);
        let p = parse_poly(&ring, "(x1 + x2)^2 - x1*(x1 + 2*x2)").unwrap();
        assert_eq!(p.to_string(), "x2^2");
        assert_eq!(parse_poly(&ring, "-x1^2").unwrap().to_string(), "-x1^2");
    }

    #[test]
    fn errors_report_position() {
        let ring = Ring::indexed("x", 2);
        assert!(matches!(parse_poly(&ring, "x1 + x3"), Err(ArithError::Parse { pos: 5, .. })));
        assert!(parse_poly(&ring, "x1 +").is_err());
        assert!(parse_poly(&ring, "x1 / x2").is_err());
        assert!(parse_poly(&ring, "").is_err());
    }

    #[test]
    fn lists_split_outside_parentheses() {
        let ring = Ring::indexed("x", 2);
        let v = parse_poly_list(&ring, "x1^2, (x1 + x2)*x2, x2^3").unwrap();
        assert_eq!(v.len(), 3);
    }
}
