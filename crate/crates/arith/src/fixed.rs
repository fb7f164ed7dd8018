//! Complex fixed-point numbers `(re + i·im) / 2^f` on big integers: the
//! working type for high-precision root polishing (no gcd normalisation).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::GaussianRational;

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Fx {
    pub re: BigInt,
    pub im: BigInt,
}

fn scale_floor(x: &BigRational, f: u32) -> BigInt {
    (x.numer() << f as usize).div_floor(x.denom())
}

impl Fx {
    pub fn zero() -> Self {
        Fx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn from_gaussian(g: &GaussianRational, f: u32) -> Self {
        Fx {
            re: scale_floor(g.re(), f),
            im: scale_floor(g.im(), f),
        }
    }

    pub fn from_int(v: &BigInt, f: u32) -> Self {
        Fx {
            re: v << f as usize,
            im: BigInt::zero(),
        }
    }

    pub fn to_gaussian(&self, f: u32) -> GaussianRational {
        let d = BigInt::from(1) << f as usize;
        GaussianRational::new(
            BigRational::new(self.re.clone(), d.clone()),
            BigRational::new(self.im.clone(), d),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Fx, f: u32) -> Fx {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Fx {
            re: re >> f as usize,
            im: im >> f as usize,
        }
    }

    /// `None` when `o` is zero at this resolution.
    pub fn div(&self, o: &Fx, f: u32) -> Option<Fx> {
        let n = &o.re * &o.re + &o.im * &o.im;
        if n.is_zero() {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << f as usize;
        let im = (&self.im * &o.re - &self.re * &o.im) << f as usize;
        Some(Fx {
            re: re.div_floor(&n),
            im: im.div_floor(&n),
        })
    }

    pub fn one(f: u32) -> Fx {
        Fx::from_int(&BigInt::from(1), f)
    }

    /// |z| as a double, for convergence bookkeeping only.
    pub fn abs_f64(&self, f: u32) -> f64 {
        let shift = |x: &BigInt| {
            let b = x.bits() as i64;
            let drop = (b - 60).max(0);
            (x >> drop as usize).to_f64().unwrap_or(0.0) * 2f64.powi((drop - f as i64) as i32)
        };
        shift(&self.re).hypot(shift(&self.im))
    }
}
