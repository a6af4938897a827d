//! Imaginary Fibonacci quaternions and octonions: trace-zero vectors
//! whose coordinates are consecutive Fibonacci numbers, their closed-form
//! cross products, and the vanishing mixed products that make any three
//! of them linearly dependent.

use num_traits::Zero;

use crate::cross::{cross, dot, gram_det, mixed, ImaginaryVector};
use crate::error::Error;
use crate::fib::fib;
use crate::scalar::Rational;

/// Direction of every 3D Fibonacci cross product:
/// `F_k × F_m = (−1)^k f_{m−k} · (1, 1, −1)`.
pub const CROSS_DIRECTION_3D: [i64; 3] = [1, 1, -1];

/// Direction of every 7D Fibonacci cross product:
/// `F_k × F_m = (−1)^k f_{m−k} · (−3, 2, 7, 0, 4, −9, 3)`.
pub const CROSS_DIRECTION_7D: [i64; 7] = [-3, 2, 7, 0, 4, -9, 3];

/// The imaginary Fibonacci quaternion `f_n i + f_{n+1} j + f_{n+2} k`.
pub fn imaginary_fib_quaternion(n: i64) -> ImaginaryVector {
    imaginary_fib_vector(3, n).expect("3 is an admissible dimension")
}

/// The imaginary Fibonacci octonion with coordinates `f_n, …, f_{n+6}`
/// on `e₁ … e₇`.
pub fn imaginary_fib_octonion(n: i64) -> ImaginaryVector {
    imaginary_fib_vector(7, n).expect("7 is an admissible dimension")
}

/// Consecutive Fibonacci coordinates starting at `f_n`, in the requested
/// imaginary dimension.
pub fn imaginary_fib_vector(dim: usize, n: i64) -> Result<ImaginaryVector, Error> {
    if dim != 3 && dim != 7 {
        return Err(Error::UnsupportedVectorDimension(dim));
    }
    ImaginaryVector::new(
        (0..dim as i64)
            .map(|k| Rational::from_integer(fib(n + k)))
            .collect(),
    )
}

/// The closed-form value of `F_k × F_m`: the fixed direction vector of
/// the dimension scaled by `(−1)^k f_{m−k}`.
pub fn fib_cross_closed_form(dim: usize, k: i64, m: i64) -> Result<ImaginaryVector, Error> {
    let direction: &[i64] = match dim {
        3 => &CROSS_DIRECTION_3D,
        7 => &CROSS_DIRECTION_7D,
        d => return Err(Error::UnsupportedVectorDimension(d)),
    };
    let mut factor = Rational::from_integer(fib(m - k));
    if k.rem_euclid(2) == 1 {
        factor = -factor;
    }
    let base = ImaginaryVector::from_i64s(direction)?;
    Ok(base.scale(&factor))
}

/// A computed vector against its closed form.
#[derive(Debug, Clone)]
pub struct VectorCheck {
    pub computed: ImaginaryVector,
    pub closed_form: ImaginaryVector,
}

impl VectorCheck {
    pub fn holds(&self) -> bool {
        self.computed == self.closed_form
    }
}

/// `F_k × F_m` through the cross-product module, against the closed form.
pub fn fib_cross_check(dim: usize, k: i64, m: i64) -> Result<VectorCheck, Error> {
    let fk = imaginary_fib_vector(dim, k)?;
    let fm = imaginary_fib_vector(dim, m)?;
    Ok(VectorCheck {
        computed: cross(&fk, &fm)?,
        closed_form: fib_cross_closed_form(dim, k, m)?,
    })
}

/// The mixed product `⟨F_k × F_m, F_n⟩`, expected to vanish, together
/// with the dependence certificates available in dimension 3: the Gram
/// determinant and the coordinate determinant of the three vectors.
#[derive(Debug, Clone)]
pub struct MixedCheck {
    pub mixed: Rational,
    pub gram: Option<Rational>,
    pub coordinate_det: Option<Rational>,
}

impl MixedCheck {
    pub fn holds(&self) -> bool {
        self.mixed.is_zero()
            && self.gram.as_ref().is_none_or(Zero::is_zero)
            && self.coordinate_det.as_ref().is_none_or(Zero::is_zero)
    }
}

pub fn mixed_zero_check(dim: usize, k: i64, m: i64, n: i64) -> Result<MixedCheck, Error> {
    let fk = imaginary_fib_vector(dim, k)?;
    let fm = imaginary_fib_vector(dim, m)?;
    let fn_ = imaginary_fib_vector(dim, n)?;
    let mixed = mixed(&fk, &fm, &fn_)?;
    let (gram, coordinate_det) = if dim == 3 {
        let vectors = [fk, fm, fn_];
        let matrix: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        (
            Some(gram_det(&vectors)?),
            Some(crate::cross::rational_determinant(&matrix)),
        )
    } else {
        (None, None)
    };
    Ok(MixedCheck {
        mixed,
        gram,
        coordinate_det,
    })
}

/// The collapse behind the 3D dependence statement:
/// `(1, 1, −1) · F_n = f_n + f_{n+1} − f_{n+2} = 0`.
pub fn dot_collapse_check(n: i64) -> Result<Rational, Error> {
    let direction = ImaginaryVector::from_i64s(&CROSS_DIRECTION_3D)?;
    dot(&direction, &imaginary_fib_quaternion(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imaginary_vectors_hold_consecutive_fibonacci_values() {
        assert_eq!(
            imaginary_fib_quaternion(0),
            ImaginaryVector::from_i64s(&[0, 1, 1]).unwrap()
        );
        assert_eq!(
            imaginary_fib_quaternion(2),
            ImaginaryVector::from_i64s(&[1, 2, 3]).unwrap()
        );
        assert_eq!(
            imaginary_fib_quaternion(-1),
            ImaginaryVector::from_i64s(&[1, 0, 1]).unwrap()
        );
        assert_eq!(
            imaginary_fib_octonion(0),
            ImaginaryVector::from_i64s(&[0, 1, 1, 2, 3, 5, 8]).unwrap()
        );
        assert_eq!(
            imaginary_fib_octonion(1),
            ImaginaryVector::from_i64s(&[1, 1, 2, 3, 5, 8, 13]).unwrap()
        );
        assert_eq!(
            imaginary_fib_octonion(-2),
            ImaginaryVector::from_i64s(&[-1, 1, 0, 1, 1, 2, 3]).unwrap()
        );
        assert!(imaginary_fib_vector(5, 0).is_err());
    }

    #[test]
    fn the_displayed_7d_cross_vector_is_reproduced() {
        let chk = fib_cross_check(7, 0, 1).unwrap();
        assert_eq!(
            chk.computed,
            ImaginaryVector::from_i64s(&[-3, 2, 7, 0, 4, -9, 3]).unwrap()
        );
        assert!(chk.holds());
    }

    #[test]
    fn closed_form_examples() {
        let chk = fib_cross_check(3, 0, 1).unwrap();
        assert_eq!(chk.computed, ImaginaryVector::from_i64s(&[1, 1, -1]).unwrap());
        assert!(chk.holds());
        // k = m collapses to the zero vector on both routes.
        for dim in [3, 7] {
            let chk = fib_cross_check(dim, 4, 4).unwrap();
            assert!(chk.computed.is_zero());
            assert!(chk.holds());
        }
    }

    /// The closed forms against the cross products they summarize, over
    /// a dense index sweep — this is the oracle that justifies
    /// hard-coding the direction vectors.
    #[test]
    fn closed_form_sweep() {
        for dim in [3, 7] {
            for k in -12..=12 {
                for m in -12..=12 {
                    let chk = fib_cross_check(dim, k, m).unwrap();
                    assert!(chk.holds(), "dim {dim}, (k, m) = ({k}, {m})");
                }
            }
        }
    }

    #[test]
    fn mixed_product_examples() {
        let chk = mixed_zero_check(3, 0, 1, 2).unwrap();
        assert!(chk.holds());
        assert_eq!(chk.gram, Some(Rational::zero()));
        let chk = mixed_zero_check(7, 0, 1, 2).unwrap();
        assert!(chk.holds());
        assert_eq!(chk.gram, None);
        let chk = mixed_zero_check(7, 3, 3, 9).unwrap();
        assert!(chk.holds());
    }

    #[test]
    fn mixed_product_sweep() {
        for dim in [3, 7] {
            for k in 0..=8 {
                for m in 0..=8 {
                    for n in 0..=8 {
                        let chk = mixed_zero_check(dim, k, m, n).unwrap();
                        assert!(chk.holds(), "dim {dim}, ({k}, {m}, {n})");
                    }
                }
            }
        }
    }

    #[test]
    fn dot_collapse() {
        for n in -30..=30 {
            assert!(dot_collapse_check(n).unwrap().is_zero(), "n = {n}");
        }
    }
}
