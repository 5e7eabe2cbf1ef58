//! Rational points of a presented variety, checked one by one with the
//! apolarity oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apolarity::{algebra_profile, check_cover, CoverCheck};
use crate::arith::{Poly, Rational};

use super::{GenericCover, VarietyPresentation};

/// What the oracle said about one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointOutcome {
    Cover { colength: usize, emb_dim: usize },
    NotCover,
}

#[derive(Clone, Debug)]
pub struct PointResult {
    pub point: Vec<Rational>,
    pub h: Poly,
    /// The point lies on `V₊(remove)`.
    pub removed: bool,
    pub outcome: PointOutcome,
}

impl PointResult {
    /// A cover of exactly the expected colength.
    pub fn is_expected_cover(&self, colength: usize) -> bool {
        matches!(self.outcome, PointOutcome::Cover { colength: c, .. } if c == colength)
    }

    /// Off the removed locus the point must be a cover of the expected
    /// colength; on it, it must not be.
    pub fn agrees(&self, colength: usize) -> bool {
        self.is_expected_cover(colength) != self.removed
    }
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub colength: usize,
    /// `τ(A)`.
    pub cm_type: usize,
    pub points: Vec<PointResult>,
    /// Some requested points could not be found within the attempt budget.
    pub exhausted: bool,
}

impl SampleReport {
    pub fn kept(&self) -> impl Iterator<Item = &PointResult> {
        self.points.iter().filter(|p| !p.removed)
    }

    pub fn removed(&self) -> impl Iterator<Item = &PointResult> {
        self.points.iter().filter(|p| p.removed)
    }

    pub fn certified_covers(&self) -> usize {
        self.kept().filter(|p| p.is_expected_cover(self.colength)).count()
    }

    pub fn certified_failures(&self) -> usize {
        self.removed().filter(|p| !p.is_expected_cover(self.colength)).count()
    }

    pub fn all_agree(&self) -> bool {
        self.points.iter().all(|p| p.agrees(self.colength))
    }

    /// `emb dim(G) ≤ τ(A) + colength − 1` for every cover found.
    pub fn embedding_bound_holds(&self) -> bool {
        self.points.iter().all(|p| match p.outcome {
            PointOutcome::Cover { colength, emb_dim } => emb_dim + 1 <= self.cm_type + colength,
            PointOutcome::NotCover => true,
        })
    }
}

const ATTEMPTS_PER_POINT: usize = 200;
/// Solved coordinates with a larger numerator or denominator are rejected:
/// chains of linear solves otherwise produce huge rationals.
const MAX_HEIGHT_BITS: u64 = 24;
const ZERO_RATES: [f64; 4] = [0.0, 0.3, 0.55, 0.8];

/// Draws up to `trials` points of `V₊(keep) ∖ V₊(remove)` and up to `trials`
/// points of `V₊(keep) ∩ V₊(remove)`, and checks each with the oracle.
///
/// Points start from small random integers with a varying share of zeros;
/// equations are then satisfied one variable at a time wherever they are
/// linear in some variable, and the point is rejected otherwise.
pub fn sample_and_certify(p: &VarietyPresentation, cover: &GenericCover, trials: usize, seed: u64) -> SampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colength = cover.colength();
    let cm_type = algebra_profile(cover.iperp()).cm_type;
    let mut report = SampleReport { colength, cm_type, points: Vec::new(), exhausted: false };
    let on_eqs: Vec<Poly> = p.keep.gens().iter().chain(p.remove.gens()).cloned().collect();
    let mut seen: Vec<Vec<Rational>> = Vec::new();

    for removed in [false, true] {
        let eqs = if removed { &on_eqs } else { p.keep.gens() };
        let mut found = 0;
        let mut attempts = 0;
        while found < trials {
            if attempts == ATTEMPTS_PER_POINT * trials {
                report.exhausted = true;
                break;
            }
            let rate = ZERO_RATES[attempts % ZERO_RATES.len()];
            attempts += 1;
            let Some(point) = draw(&mut rng, p.ring.nvars(), eqs, rate) else { continue };
            if p.contains(&point) == removed || seen.contains(&point) {
                continue;
            }
            let h = cover.at(&point);
            if h.is_zero() {
                continue;
            }
            seen.push(point.clone());
            let outcome = match check_cover(cover.iperp(), &h) {
                CoverCheck::Cover(c) => PointOutcome::Cover { colength: c.colength, emb_dim: c.emb_dim_g },
                _ => PointOutcome::NotCover,
            };
            report.points.push(PointResult { point, h, removed, outcome });
            found += 1;
        }
    }
    report
}

fn draw(rng: &mut ChaCha8Rng, n: usize, eqs: &[Poly], zero_rate: f64) -> Option<Vec<Rational>> {
    let mut point: Vec<Rational> = (0..n)
        .map(|_| {
            if rng.gen_bool(zero_rate) {
                Rational::zero()
            } else {
                let mut x = rng.gen_range(-3i64..=3);
                if x == 0 {
                    x = 1;
                }
                Rational::from(x)
            }
        })
        .collect();
    let mut order: Vec<usize> = (0..eqs.len()).collect();
    for _ in 0..3 {
        order.shuffle(rng);
        let mut changed = false;
        for &e in &order {
            let g = &eqs[e];
            if g.eval(&point).is_zero() {
                continue;
            }
            let mut vars = g.support_vars();
            vars.shuffle(rng);
            for x in vars {
                if let Some(value) = solve_linear(g, x, &point) {
                    point[x] = value;
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // a failed solve leaves the equation unsatisfied and the point is rejected
    let ok = eqs.iter().all(|g| g.eval(&point).is_zero()) && point.iter().any(|x| !x.is_zero());
    ok.then_some(point)
}

/// The value of variable `x` making `g` vanish when every other variable is
/// fixed by `point`, if `g` is then of degree exactly one in `x`.
fn solve_linear(g: &Poly, x: usize, point: &[Rational]) -> Option<Rational> {
    let others: Vec<(usize, Rational)> =
        (0..point.len()).filter(|&i| i != x).map(|i| (i, point[i].clone())).collect();
    let q = g.substitute(&others);
    let coeffs = q.coefficients_in(x);
    if coeffs.len() != 2 || coeffs[1].is_zero() {
        return None;
    }
    let c0 = coeffs[0].constant_term();
    let c1 = coeffs[1].constant_term();
    let value = -(c0 / c1);
    (value.numer().bits() <= MAX_HEIGHT_BITS && value.denom().bits() <= MAX_HEIGHT_BITS).then_some(value)
}
