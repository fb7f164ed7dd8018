use cremona_arith::{BigRational, ComplexBall, GaussianRational};
use num_traits::{Signed, Zero};

use crate::modline::line_degrees;
use crate::{ExactMap, ProjmapError};

pub const DEFAULT_N_MAX: usize = 12;
pub const DEFAULT_BUDGET: usize = 200;
/// Consecutive ratios must stay above 1 + DELTA for exponential growth.
pub const DELTA: (i64, i64) = (1, 10);
pub const TAIL: usize = 5;
pub const MIN_ENTRIES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    /// deg f, deg f², …; degrees above the budget are not included.
    pub degrees: Vec<usize>,
    pub truncated: bool,
}

/// Degrees of the iterates, computed on a random line modulo two primes
/// (per-step gcd removal); the larger value wins at each step, which guards
/// against an unlucky prime or line.
pub fn degree_sequence(f: &ExactMap, n_max: usize, budget: usize) -> DegreeSequence {
    let mut runs = Vec::new();
    for trial in 0..6 {
        if let Some(r) = line_degrees(f.components(), n_max, budget, trial) {
            runs.push(r);
            if runs.len() == 2 {
                break;
            }
        }
    }
    if runs.is_empty() {
        // fall back to exact composition
        return exact_degree_sequence(f, n_max, budget).unwrap_or(DegreeSequence {
            degrees: vec![],
            truncated: true,
        });
    }
    let len = runs
        .iter()
        .filter(|(_, t)| *t)
        .map(|(d, _)| d.len())
        .min()
        .unwrap_or_else(|| runs.iter().map(|(d, _)| d.len()).max().unwrap());
    let degrees: Vec<usize> = (0..len)
        .map(|k| {
            runs.iter()
                .filter_map(|(d, _)| d.get(k))
                .copied()
                .max()
                .unwrap()
        })
        .collect();
    let truncated = runs.iter().any(|(_, t)| *t) && degrees.len() < n_max;
    DegreeSequence { degrees, truncated }
}

/// Degrees by exact composition and gcd removal (slow; for cross-checks).
pub fn exact_degree_sequence(
    f: &ExactMap,
    n_max: usize,
    budget: usize,
) -> Result<DegreeSequence, ProjmapError> {
    let mut g = f.clone();
    let mut degrees = Vec::new();
    for n in 0..n_max {
        if n > 0 {
            if (g.degree() as usize) * (f.degree() as usize) > budget.saturating_mul(8) {
                return Ok(DegreeSequence {
                    degrees,
                    truncated: true,
                });
            }
            g = f.compose(&g)?;
        }
        if g.degree() as usize > budget {
            return Ok(DegreeSequence {
                degrees,
                truncated: true,
            });
        }
        degrees.push(g.degree() as usize);
    }
    Ok(DegreeSequence {
        degrees,
        truncated: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthTag {
    Bounded,
    Linear,
    Quadratic,
    Exponential,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthClass {
    pub tag: GrowthTag,
    /// Enclosure of the dynamical degree (exponential growth only).
    pub rate: Option<ComplexBall>,
}

fn diffs(v: &[i64]) -> Vec<i64> {
    v.windows(2).map(|w| w[1] - w[0]).collect()
}

fn constant(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// Classify degree growth from at least eight degrees, looking at the last
/// five (the tail window).
///
/// * Bounded — the tail never exceeds the earlier maximum;
/// * Linear — tail first differences, or differences at lag 2 (degrees
///   that climb every other step), are constant and positive;
/// * Quadratic — tail second differences are constant and positive;
/// * Exponential — tail ratios stay ≥ 1 + 1/10; the rate is the Aitken
///   extrapolation of the ratios, with radius the last Aitken step.
pub fn growth_class(degrees: &[usize]) -> Result<GrowthClass, ProjmapError> {
    if degrees.len() < MIN_ENTRIES {
        return Err(ProjmapError::TooShort {
            needed: MIN_ENTRIES,
            got: degrees.len(),
        });
    }
    let d: Vec<i64> = degrees.iter().map(|&v| v as i64).collect();
    let n = d.len();
    let tail = &d[n - TAIL..];
    let head_max = d[..n - TAIL].iter().copied().max().unwrap();
    let plain = |tag| Ok(GrowthClass { tag, rate: None });
    if tail.iter().copied().max().unwrap() <= head_max {
        return plain(GrowthTag::Bounded);
    }
    let d1 = diffs(tail);
    let lag2: Vec<i64> = tail.windows(3).map(|w| w[2] - w[0]).collect();
    if (constant(&d1) && d1[0] > 0) || (constant(&lag2) && lag2[0] > 0) {
        return plain(GrowthTag::Linear);
    }
    let d2 = diffs(&d1);
    if constant(&d2) && d2[0] > 0 {
        return plain(GrowthTag::Quadratic);
    }
    let ratios: Vec<BigRational> = d[n - TAIL - 1..]
        .windows(2)
        .map(|w| rat(w[1], w[0].max(1)))
        .collect();
    let thresh = rat(DELTA.0 + DELTA.1, DELTA.1);
    if ratios.iter().all(|r| *r >= thresh) {
        return Ok(GrowthClass {
            tag: GrowthTag::Exponential,
            rate: Some(rate_ball(&ratios)),
        });
    }
    Err(ProjmapError::Inconclusive)
}

fn rate_ball(r: &[BigRational]) -> ComplexBall {
    let aitken = |a: &BigRational, b: &BigRational, c: &BigRational| {
        let den = c - b - b + a;
        if den.is_zero() {
            c.clone()
        } else {
            let num = (c - b) * (c - b);
            c - num / den
        }
    };
    let k = r.len();
    let a1 = aitken(&r[k - 3], &r[k - 2], &r[k - 1]);
    let a0 = aitken(&r[k - 4], &r[k - 3], &r[k - 2]);
    let rad = (&a1 - &a0).abs();
    ComplexBall::with_radius(&GaussianRational::real(a1), rad, 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    /// deg fⁿ = (deg f)ⁿ verified for all n up to this value.
    pub stable_up_to: usize,
    pub violated_at: Option<usize>,
}

/// First n with deg fⁿ < (deg f)ⁿ, if any within `n_max`.
pub fn stability_probe(f: &ExactMap, n_max: usize) -> StabilityReport {
    const CAP: usize = 4096;
    let d = f.degree() as usize;
    let seq = degree_sequence(f, n_max, CAP);
    let mut expected = 1usize;
    for (k, &deg) in seq.degrees.iter().enumerate() {
        expected = expected.saturating_mul(d);
        if deg < expected {
            return StabilityReport {
                stable_up_to: k,
                violated_at: Some(k + 1),
            };
        }
    }
    StabilityReport {
        stable_up_to: if d == 1 { n_max } else { seq.degrees.len() },
        violated_at: None,
    }
}
