use std::fmt::LowerExp;
use std::io;

use num_complex::Complex;
use num_traits::Float;

/// Orbits whose coordinates exceed this modulus are cut off.
pub const OMEGA_CAP: f64 = 1e12;

pub const OMEGA_HEADER: [&str; 7] = ["n", "om1_a", "om1_b", "om1_c", "om2_a", "om2_b", "om2_c"];

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaRow<F> {
    pub n: usize,
    /// (Re x, Im x, Im y)
    pub om1: [F; 3],
    /// (Re x, Re y, Im y)
    pub om2: [F; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaSamples<F> {
    pub rows: Vec<OmegaRow<F>>,
    /// Step at which the orbit left the cap (or hit the pole x = −1).
    pub overflow_at: Option<usize>,
}

/// f_{α,β}(x, y) = ((αx + y)/(x + 1), βy); `None` on the pole.
pub fn lin_family_step<F: Float>(
    alpha: Complex<F>,
    beta: Complex<F>,
    (x, y): (Complex<F>, Complex<F>),
) -> Option<(Complex<F>, Complex<F>)> {
    let d = x + Complex::new(F::one(), F::zero());
    if d.norm_sqr() == F::zero() {
        return None;
    }
    Some(((alpha * x + y) / d, beta * y))
}

/// Rows n = 1..=count of the Ω₁/Ω₂ projections of the orbit of m0.
pub fn orbit_projection_samples<F: Float>(
    alpha: Complex<F>,
    beta: Complex<F>,
    m0: (Complex<F>, Complex<F>),
    count: usize,
) -> OmegaSamples<F> {
    let cap = F::from(OMEGA_CAP).unwrap_or_else(F::max_value);
    let mut rows = Vec::with_capacity(count);
    let mut p = m0;
    for n in 1..=count {
        let next =
            lin_family_step(alpha, beta, p).filter(|(x, y)| x.norm() <= cap && y.norm() <= cap);
        let Some((x, y)) = next else {
            return OmegaSamples {
                rows,
                overflow_at: Some(n),
            };
        };
        rows.push(OmegaRow {
            n,
            om1: [x.re, x.im, y.im],
            om2: [x.re, y.re, y.im],
        });
        p = (x, y);
    }
    OmegaSamples {
        rows,
        overflow_at: None,
    }
}

/// CSV with header `n,om1_a,om1_b,om1_c,om2_a,om2_b,om2_c`.
pub fn write_omega_csv<F: Float + LowerExp, W: io::Write>(
    rows: &[OmegaRow<F>],
    out: W,
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(OMEGA_HEADER)?;
    for r in rows {
        let mut rec = vec![r.n.to_string()];
        rec.extend(r.om1.iter().chain(&r.om2).map(|v| format!("{v:e}")));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}
