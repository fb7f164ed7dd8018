use std::fmt;

use cremona_arith::{Coeff, ComplexBall, GaussianRational};

use crate::gcd::gcd_homogeneous;
use crate::modline::coprime_certificate;
use crate::{Poly3, ProjectivePoint, ProjmapError};

/// Coefficient domains that know how to strip a common factor from the
/// components of a composition.
pub trait MapCoeff: Coeff {
    fn remove_common_factor(comps: [Poly3<Self>; 3]) -> Result<[Poly3<Self>; 3], ProjmapError>;
}

impl MapCoeff for GaussianRational {
    fn remove_common_factor(comps: [Poly3<Self>; 3]) -> Result<[Poly3<Self>; 3], ProjmapError> {
        Ok(strip_content(comps))
    }
}

impl MapCoeff for ComplexBall {
    fn remove_common_factor(_: [Poly3<Self>; 3]) -> Result<[Poly3<Self>; 3], ProjmapError> {
        Err(ProjmapError::BallCoefficients)
    }
}

/// Divide three exact homogeneous polynomials by their gcd.
pub fn strip_content(comps: [Poly3<GaussianRational>; 3]) -> [Poly3<GaussianRational>; 3] {
    // common monomial first: cheap and very common
    let mut m = [u32::MAX; 3];
    for c in comps.iter().filter(|c| !c.is_zero()) {
        let e = c.monomial_content();
        for k in 0..3 {
            m[k] = m[k].min(e[k]);
        }
    }
    let comps = if m.iter().any(|&v| v > 0 && v != u32::MAX) {
        comps.map(|c| c.div_monomial(&m))
    } else {
        comps
    };
    if coprime_certificate(&comps, 17) {
        return comps;
    }
    let mut g = Poly3::zero();
    for c in &comps {
        g = gcd_homogeneous(&g, c);
        if g.degree() == Some(0) {
            return comps;
        }
    }
    if g.degree().unwrap_or(0) == 0 {
        return comps;
    }
    comps.map(|c| c.div_exact(&g).expect("gcd divides each component"))
}

/// Result of evaluating a map at a point.
#[derive(Clone, Debug, PartialEq)]
pub enum Evaluation<T> {
    Image(ProjectivePoint<T>),
    /// All components vanish exactly.
    Indeterminate,
    /// Ball case: every component enclosure contains 0.
    PossiblyIndeterminate,
}

impl<T> Evaluation<T> {
    pub fn image(self) -> Option<ProjectivePoint<T>> {
        match self {
            Evaluation::Image(p) => Some(p),
            _ => None,
        }
    }
}

/// A rational self-map of P² given by three homogeneous polynomials of equal
/// degree. Exact maps always have coprime components.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousMap<T> {
    comps: [Poly3<T>; 3],
    degree: u32,
}

impl<T: MapCoeff> HomogeneousMap<T> {
    /// Build a map, removing the common factor of the components when the
    /// coefficients are exact.
    pub fn new(comps: [Poly3<T>; 3]) -> Result<Self, ProjmapError> {
        let comps = Self::check(comps)?;
        let comps = if T::EXACT {
            T::remove_common_factor(comps)?
        } else {
            comps
        };
        Self::from_coprime(comps)
    }

    /// Build without content removal (caller guarantees coprimality, or the
    /// coefficients are balls).
    pub fn from_coprime(comps: [Poly3<T>; 3]) -> Result<Self, ProjmapError> {
        let comps = Self::check(comps)?;
        let degree = comps.iter().filter_map(|c| c.degree()).max().unwrap();
        if degree == 0 {
            return Err(ProjmapError::NotHomogeneous);
        }
        Ok(HomogeneousMap { comps, degree })
    }

    fn check(comps: [Poly3<T>; 3]) -> Result<[Poly3<T>; 3], ProjmapError> {
        if comps.iter().all(|c| c.is_zero()) {
            return Err(ProjmapError::AllZero);
        }
        let degs: Vec<u32> = comps.iter().filter_map(|c| c.degree()).collect();
        if comps.iter().any(|c| !c.is_homogeneous()) || degs.iter().any(|&d| d != degs[0]) {
            return Err(ProjmapError::NotHomogeneous);
        }
        Ok(comps)
    }

    pub fn identity() -> Self {
        HomogeneousMap {
            comps: [Poly3::x(), Poly3::y(), Poly3::z()],
            degree: 1,
        }
    }

    pub fn components(&self) -> &[Poly3<T>; 3] {
        &self.comps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Components of `self ∘ g` before content removal.
    pub fn substitute(&self, g: &HomogeneousMap<T>) -> [Poly3<T>; 3] {
        std::array::from_fn(|k| self.comps[k].substitute(&g.comps))
    }

    /// `self ∘ g` with the common factor removed (exact coefficients only).
    pub fn compose(&self, g: &HomogeneousMap<T>) -> Result<HomogeneousMap<T>, ProjmapError> {
        if !T::EXACT {
            return Err(ProjmapError::BallCoefficients);
        }
        let comps = self.substitute(g);
        if comps.iter().all(|c| c.is_zero()) {
            return Err(ProjmapError::NullComposition);
        }
        Self::from_coprime(T::remove_common_factor(comps)?)
    }

    /// n-th iterate by repeated composition.
    pub fn iterate(&self, n: u32) -> Result<HomogeneousMap<T>, ProjmapError> {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn evaluate(&self, p: &ProjectivePoint<T>) -> Evaluation<T> {
        let v: [T; 3] = std::array::from_fn(|k| self.comps[k].eval(p.coords()));
        if T::EXACT {
            match ProjectivePoint::new(v) {
                Some(q) => Evaluation::Image(q),
                None => Evaluation::Indeterminate,
            }
        } else if v.iter().all(|c| c.may_be_zero()) {
            Evaluation::PossiblyIndeterminate
        } else {
            match ProjectivePoint::new(v) {
                Some(q) => Evaluation::Image(q),
                None => Evaluation::PossiblyIndeterminate,
            }
        }
    }

    pub fn map_coeffs<U: MapCoeff>(&self, f: impl Fn(&T) -> U) -> HomogeneousMap<U> {
        HomogeneousMap {
            comps: std::array::from_fn(|k| self.comps[k].map_coeffs(&f)),
            degree: self.degree,
        }
    }

    /// det of the Jacobian matrix of the components.
    pub fn jacobian(&self) -> Poly3<T> {
        let j: Vec<Vec<Poly3<T>>> = self
            .comps
            .iter()
            .map(|c| (0..3).map(|k| c.derivative(k)).collect())
            .collect();
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            &(&j[1][a] * &j[2][b]) - &(&j[1][c] * &j[2][d])
        };
        let t0 = &j[0][0] * &minor(1, 2, 2, 1);
        let t1 = &j[0][1] * &minor(0, 2, 2, 0);
        let t2 = &j[0][2] * &minor(0, 1, 1, 0);
        &(&t0 - &t1) + &t2
    }
}

impl HomogeneousMap<GaussianRational> {
    pub fn to_ball(&self) -> HomogeneousMap<ComplexBall> {
        self.map_coeffs(ComplexBall::exact)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for HomogeneousMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.comps[0], self.comps[1], self.comps[2]
        )
    }
}
