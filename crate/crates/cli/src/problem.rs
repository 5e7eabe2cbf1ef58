//! Problem files:
//!
//! ```text
//! vars x1, x2, x3;
//! ideal x1^2, x1*x2, x2^2 - x3^3;
//! dualpoly y3^4 + y1^2*y2;
//! ```
//!
//! Statements end with `;`, whitespace is free and `#` starts a comment that
//! runs to the end of the line. The ideal may use any declared variable
//! names; the dual polynomial is always written in `y1, …, yn`, where `yi`
//! is dual to the `i`-th declared variable.

use gcover::apolarity::{dual_ring, series_ring};
use gcover::arith::{parse_poly_list, Poly, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` statement")]
    Missing(&'static str),
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    /// Generators as written, in the declared variables.
    pub ideal: Vec<Poly>,
    pub dualpoly: Option<Poly>,
}

impl ProblemFile {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// The declared ring.
    pub fn ring(&self) -> Ring {
        Ring::new(self.vars.iter().cloned())
    }

    /// The generators moved to `x1, …, xn`.
    pub fn generators(&self) -> Vec<Poly> {
        let target = series_ring(self.nvars());
        let map: Vec<usize> = (0..self.nvars()).collect();
        self.ideal.iter().map(|g| g.map_vars(&target, &map)).collect()
    }

    /// Reprints the problem in its own syntax.
    pub fn to_source(&self) -> String {
        let gens: Vec<String> = self.ideal.iter().map(|g| g.to_string()).collect();
        let mut out = format!("vars {};\nideal {};\n", self.vars.join(", "), gens.join(", "));
        if let Some(f) = &self.dualpoly {
            out += &format!("dualpoly {f};\n");
        }
        out
    }
}

fn strip_comments(src: &str) -> String {
    src.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_problem(src: &str) -> Result<ProblemFile, ProblemError> {
    let clean = strip_comments(src);
    let mut vars: Option<Vec<String>> = None;
    let mut ideal_src: Option<(usize, String)> = None;
    let mut dual_src: Option<(usize, String)> = None;
    let mut offset = 0;
    for stmt in clean.split(';') {
        let lead = stmt.len() - stmt.trim_start().len();
        let line = clean[..offset + lead].matches('\n').count() + 1;
        offset += stmt.len() + 1;
        let stmt = stmt.trim();
        if stmt.is_empty() {
            continue;
        }
        let syntax = |message: String| ProblemError::Syntax { line, message };
        let (keyword, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
        let rest = rest.trim();
        let duplicate = || syntax(format!("duplicate `{keyword}` statement"));
        match keyword {
            "vars" => {
                if vars.is_some() {
                    return Err(duplicate());
                }
                let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                if names.iter().any(|n| !is_identifier(n)) {
                    return Err(syntax(format!("bad variable list `{rest}`")));
                }
                let mut sorted = names.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != names.len() {
                    return Err(syntax("repeated variable name".into()));
                }
                vars = Some(names);
            }
            "ideal" => {
                if ideal_src.is_some() {
                    return Err(duplicate());
                }
                ideal_src = Some((line, rest.to_string()));
            }
            "dualpoly" => {
                if dual_src.is_some() {
                    return Err(duplicate());
                }
                dual_src = Some((line, rest.to_string()));
            }
            other => return Err(syntax(format!("unknown statement `{other}`"))),
        }
    }
    let vars = vars.ok_or(ProblemError::Missing("vars"))?;
    let (line, ideal_src) = ideal_src.ok_or(ProblemError::Missing("ideal"))?;
    let ring = Ring::new(vars.iter().cloned());
    let ideal = parse_poly_list(&ring, &ideal_src).map_err(|e| ProblemError::Syntax { line, message: e.to_string() })?;
    if ideal.is_empty() {
        return Err(ProblemError::Syntax { line, message: "the generator list is empty".into() });
    }
    let dualpoly = match dual_src {
        None => None,
        Some((line, s)) => {
            let f = gcover::arith::parse_poly(&dual_ring(vars.len()), &s)
                .map_err(|e| ProblemError::Syntax { line, message: e.to_string() })?;
            Some(f)
        }
    };
    Ok(ProblemFile { vars, ideal, dualpoly })
}
