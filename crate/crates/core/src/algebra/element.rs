use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::Error;
use crate::scalar::{Int, Rational, Scalar};

use super::AlgebraSpec;

/// A coordinate vector over an algebra's basis.
///
/// The coefficient ring defaults to the rationals; Binet evaluation uses
/// elements over ℚ(√5). Elements are immutable values; every operation
/// is pure.
#[derive(Debug, Clone)]
pub struct Element<S: Scalar = Rational> {
    spec: Arc<AlgebraSpec>,
    coords: Vec<S>,
}

impl<S: Scalar> Element<S> {
    pub fn new(spec: &Arc<AlgebraSpec>, coords: Vec<S>) -> Result<Self, Error> {
        if coords.len() != spec.dim() {
            return Err(Error::CoordinateCount {
                dim: spec.dim(),
                got: coords.len(),
            });
        }
        Ok(Element {
            spec: spec.clone(),
            coords,
        })
    }

    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        Element {
            spec: spec.clone(),
            coords: vec![S::zero(); spec.dim()],
        }
    }

    /// The basis element `e_k`.
    pub fn basis(spec: &Arc<AlgebraSpec>, k: usize) -> Self {
        assert!(k < spec.dim(), "basis index out of range");
        let mut coords = vec![S::zero(); spec.dim()];
        coords[k] = S::one();
        Element {
            spec: spec.clone(),
            coords,
        }
    }

    /// The two-sided unit `e_0`.
    pub fn unit(spec: &Arc<AlgebraSpec>) -> Self {
        Element::basis(spec, 0)
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(S::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        Element {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|c| c.ring_mul(s)).collect(),
        }
    }

    fn same_algebra(&self, rhs: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &rhs.spec)
            || (self.spec.dim() == rhs.spec.dim()
                && (0..self.spec.dim()).all(|i| {
                    (0..self.spec.dim()).all(|j| {
                        (0..self.spec.dim())
                            .all(|k| self.spec.constant(i, j, k) == rhs.spec.constant(i, j, k))
                    })
                }))
    }

    /// Bilinear product through the structure constants. Fails when the
    /// operands belong to different algebras.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Error> {
        if !self.same_algebra(rhs) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Element {
            spec: self.spec.clone(),
            coords: self.spec.mul_coords(&self.coords, &rhs.coords),
        })
    }

    /// Componentwise sign flip per the conjugation signature.
    pub fn conjugate(&self) -> Result<Self, Error> {
        let sig = self.spec.conj_signature().ok_or(Error::MissingConjugation)?;
        let coords = self
            .coords
            .iter()
            .zip(sig)
            .map(|(c, &s)| if s >= 0 { c.clone() } else { c.ring_neg() })
            .collect();
        Ok(Element {
            spec: self.spec.clone(),
            coords,
        })
    }
}

impl Element<Rational> {
    /// Convenience constructor from integer coordinates.
    pub fn from_ints(spec: &Arc<AlgebraSpec>, coords: Vec<Int>) -> Result<Self, Error> {
        Element::new(
            spec,
            coords.into_iter().map(Rational::from_integer).collect(),
        )
    }

    pub fn from_i64s(spec: &Arc<AlgebraSpec>, coords: &[i64]) -> Result<Self, Error> {
        Element::from_ints(spec, coords.iter().map(|&c| Int::from(c)).collect())
    }

    /// Trace and norm by the closed forms of the named constructions:
    /// `t(a) = 2a₀`, `n(a) = Σ coeff_k a_k²` with the construction's
    /// diagonal coefficients. Consistency with the table products
    /// (`a + ā = t·e₀`, `a·ā = n·e₀`) is a checkable property, not an
    /// assumption: imported tables may be corrupt and the verification
    /// suites compare the two routes explicitly.
    pub fn trace_norm(&self) -> Result<(Rational, Rational), Error> {
        let coeffs = self
            .spec
            .norm_form_coefficients()
            .ok_or(Error::NotNamedConstruction)?;
        let two = Rational::from_integer(Int::from(2));
        let trace = &self.coords[0] * two;
        let norm = self
            .coords
            .iter()
            .zip(&coeffs)
            .fold(Rational::zero(), |acc, (c, w)| acc + c * c * w);
        Ok((trace, norm))
    }

    /// The residual `a² − t(a)·a + n(a)·e₀`, which is zero in every
    /// algebra whose table matches its declared construction.
    pub fn quadratic_residual(&self) -> Result<Element, Error> {
        let (t, n) = self.trace_norm()?;
        let square = self.try_mul(self)?;
        Ok(square - self.scale(&t) + Element::unit(&self.spec).scale(&n))
    }
}

impl Element<crate::scalar::Golden> {
    /// Drops to rational coordinates when every √5 component vanishes.
    pub fn to_rational_element(&self) -> Option<Element<Rational>> {
        let coords = self
            .coords
            .iter()
            .map(|g| g.as_rational().cloned())
            .collect::<Option<Vec<_>>>()?;
        Some(Element {
            spec: self.spec.clone(),
            coords,
        })
    }
}

impl<S: Scalar> PartialEq for Element<S> {
    fn eq(&self, other: &Self) -> bool {
        self.spec.dim() == other.spec.dim() && self.coords == other.coords
    }
}

impl<S: Scalar> Eq for Element<S> {}

impl<S: Scalar> Add for Element<S> {
    type Output = Element<S>;
    fn add(self, rhs: Element<S>) -> Element<S> {
        assert_eq!(self.spec.dim(), rhs.spec.dim(), "algebra dimension mismatch");
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a.ring_add(b))
            .collect();
        Element {
            spec: self.spec,
            coords,
        }
    }
}

impl<S: Scalar> Sub for Element<S> {
    type Output = Element<S>;
    fn sub(self, rhs: Element<S>) -> Element<S> {
        assert_eq!(self.spec.dim(), rhs.spec.dim(), "algebra dimension mismatch");
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a.ring_sub(b))
            .collect();
        Element {
            spec: self.spec,
            coords,
        }
    }
}

impl<S: Scalar> Neg for Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Element<S> {
        let coords = self.coords.iter().map(S::ring_neg).collect();
        Element {
            spec: self.spec,
            coords,
        }
    }
}

impl<S: Scalar> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, c) in self.coords.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
