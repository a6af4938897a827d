//! Exact inner products, the 3- and 7-dimensional cross products, Gram
//! determinants, and the cross-product axiom checks.
//!
//! The 3D cross product is computed by two independent backends — the
//! formal determinant expansion and the imaginary-quaternion product in
//! `H(1,1)` with the scalar part cancelled by `⟨x,y⟩` — and the two are
//! asserted equal on every call. The 7D product is the coordinate
//! formula built on the octonion Fano triples; its basis convention
//! differs from the octonion multiplication table and the two are kept
//! as distinct backends on purpose.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraSpec, Element};
use crate::error::Error;
use crate::scalar::{rat_int, Int, Rational};

/// An exact coordinate vector in the imaginary subspace of a quaternion
/// or octonion algebra. Binary cross products exist only in dimensions
/// 3 and 7, so other lengths are rejected outright.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImaginaryVector {
    coords: Vec<Rational>,
}

impl ImaginaryVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self, Error> {
        if coords.len() != 3 && coords.len() != 7 {
            return Err(Error::UnsupportedVectorDimension(coords.len()));
        }
        Ok(ImaginaryVector { coords })
    }

    pub fn from_i64s(coords: &[i64]) -> Result<Self, Error> {
        ImaginaryVector::new(coords.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero(dim: usize) -> Result<Self, Error> {
        ImaginaryVector::new(vec![Rational::zero(); dim])
    }

    /// The `k`-th canonical basis vector (0-based).
    pub fn basis(dim: usize, k: usize) -> Result<Self, Error> {
        let mut v = ImaginaryVector::zero(dim)?;
        assert!(k < dim, "basis index out of range");
        v.coords[k] = Rational::one();
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ImaginaryVector {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    fn check_same_dim(&self, rhs: &Self) -> Result<(), Error> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        Ok(())
    }
}

impl Add for &ImaginaryVector {
    type Output = ImaginaryVector;
    fn add(self, rhs: &ImaginaryVector) -> ImaginaryVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        ImaginaryVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ImaginaryVector {
    type Output = ImaginaryVector;
    fn sub(self, rhs: &ImaginaryVector) -> ImaginaryVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        ImaginaryVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ImaginaryVector {
    type Output = ImaginaryVector;
    fn neg(self) -> ImaginaryVector {
        ImaginaryVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for ImaginaryVector {
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

/// Euclidean inner product `⟨x,y⟩ = Σ x_i y_i`.
pub fn dot(x: &ImaginaryVector, y: &ImaginaryVector) -> Result<Rational, Error> {
    x.check_same_dim(y)?;
    Ok(x.coords
        .iter()
        .zip(&y.coords)
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
}

fn h11() -> &'static Arc<AlgebraSpec> {
    static SPEC: OnceLock<Arc<AlgebraSpec>> = OnceLock::new();
    SPEC.get_or_init(|| AlgebraSpec::quaternion(rat_int(1), rat_int(1)))
}

/// 3D cross product, computed by both backends and asserted equal:
///
/// * the formal determinant expansion over the canonical basis;
/// * the quaternion identity `x×y = xy + ⟨x,y⟩·1` for imaginary
///   quaternions in `H(1,1)` — the scalar part of `xy` is exactly
///   `−⟨x,y⟩`, so adding the inner product leaves the imaginary part.
///
/// A disagreement is an internal-consistency error and must abort the
/// caller's suite; it cannot be a property of the inputs.
pub fn cross3(x: &ImaginaryVector, y: &ImaginaryVector) -> Result<ImaginaryVector, Error> {
    x.check_same_dim(y)?;
    if x.dim() != 3 {
        return Err(Error::UnsupportedVectorDimension(x.dim()));
    }
    let (x1, x2, x3) = (&x.coords[0], &x.coords[1], &x.coords[2]);
    let (y1, y2, y3) = (&y.coords[0], &y.coords[1], &y.coords[2]);
    let det = ImaginaryVector::new(vec![
        x2 * y3 - x3 * y2,
        x3 * y1 - x1 * y3,
        x1 * y2 - x2 * y1,
    ])?;

    let spec = h11();
    let embed = |v: &ImaginaryVector| {
        let mut coords = vec![Rational::zero(); 4];
        coords[1..].clone_from_slice(&v.coords);
        Element::new(spec, coords).expect("embedded imaginary quaternion")
    };
    let product = embed(x).try_mul(&embed(y))?;
    let inner = dot(x, y)?;
    let shifted = product + Element::unit(spec).scale(&inner);
    let quat = ImaginaryVector::new(shifted.coords()[1..].to_vec())?;
    let scalar_part = &shifted.coords()[0];

    if quat != det || !scalar_part.is_zero() {
        return Err(Error::CrossBackendMismatch {
            determinant: det.to_string(),
            quaternion: shifted.to_string(),
        });
    }
    Ok(det)
}

/// 7D cross product: the coordinate formula on the octonion Fano
/// triples, transcribed term for term.
pub fn cross7(x: &ImaginaryVector, y: &ImaginaryVector) -> Result<ImaginaryVector, Error> {
    x.check_same_dim(y)?;
    if x.dim() != 7 {
        return Err(Error::UnsupportedVectorDimension(x.dim()));
    }
    // 1-based views keep the 21 antisymmetric terms legible.
    let xc = |i: usize| &x.coords[i - 1];
    let yc = |i: usize| &y.coords[i - 1];
    let term = |a: usize, b: usize| xc(a) * yc(b) - xc(b) * yc(a);
    ImaginaryVector::new(vec![
        term(2, 4) + term(3, 7) + term(5, 6),
        term(3, 5) + term(4, 1) + term(6, 7),
        term(4, 6) + term(5, 2) + term(7, 1),
        term(5, 7) + term(6, 3) + term(1, 2),
        term(6, 1) + term(7, 4) + term(2, 3),
        term(7, 2) + term(1, 5) + term(3, 4),
        term(1, 3) + term(2, 6) + term(4, 5),
    ])
}

/// Cross product dispatched on the dimension.
pub fn cross(x: &ImaginaryVector, y: &ImaginaryVector) -> Result<ImaginaryVector, Error> {
    x.check_same_dim(y)?;
    match x.dim() {
        3 => cross3(x, y),
        7 => cross7(x, y),
        d => Err(Error::UnsupportedVectorDimension(d)),
    }
}

/// The scalar triple product `⟨x×y, z⟩`.
pub fn mixed(
    x: &ImaginaryVector,
    y: &ImaginaryVector,
    z: &ImaginaryVector,
) -> Result<Rational, Error> {
    x.check_same_dim(z)?;
    dot(&cross(x, y)?, z)
}

/// Exact determinant of an integer matrix by fraction-free Bareiss
/// elimination: every intermediate division is exact, so entries stay
/// integral instead of growing into large fractions.
pub fn bareiss_determinant(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i8;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact determinant of a rational matrix: denominators are cleared to a
/// common multiple per row, the integer determinant is computed
/// fraction-free, and the scaling is divided back out.
pub fn rational_determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scaled = Vec::with_capacity(n);
    let mut scale = Int::one();
    for row in m {
        debug_assert_eq!(row.len(), n);
        let lcm = row
            .iter()
            .fold(Int::one(), |acc, e| acc.lcm(e.denom()));
        let ints: Vec<Int> = row
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        scale *= &lcm;
        scaled.push(ints);
    }
    Rational::new(bareiss_determinant(scaled), scale)
}

/// Gram determinant `det(⟨v_i, v_j⟩)` of up to `dim` vectors.
pub fn gram_det(vs: &[ImaginaryVector]) -> Result<Rational, Error> {
    let Some(first) = vs.first() else {
        return Ok(Rational::one());
    };
    for v in vs {
        first.check_same_dim(v)?;
    }
    if vs.len() > first.dim() {
        return Err(Error::Precondition(format!(
            "Gram determinant of {} vectors in dimension {}",
            vs.len(),
            first.dim()
        )));
    }
    let gram: Vec<Vec<Rational>> = vs
        .iter()
        .map(|a| vs.iter().map(|b| dot(a, b).expect("dims checked")).collect())
        .collect();
    Ok(rational_determinant(&gram))
}

/// The two defining axioms of a binary cross product, evaluated exactly:
/// orthogonality to both arguments, and the Gram identity
/// `⟨x×y, x×y⟩ = ⟨x,x⟩⟨y,y⟩ − ⟨x,y⟩²`.
#[derive(Debug, Clone)]
pub struct CrossAxioms {
    /// `⟨x×y, x⟩`, which must vanish.
    pub orthogonality_x: Rational,
    /// `⟨x×y, y⟩`, which must vanish.
    pub orthogonality_y: Rational,
    /// Squared norm of the cross product.
    pub gram_lhs: Rational,
    /// The 2×2 Gram determinant of the arguments.
    pub gram_rhs: Rational,
}

impl CrossAxioms {
    pub fn holds(&self) -> bool {
        self.orthogonality_x.is_zero()
            && self.orthogonality_y.is_zero()
            && self.gram_lhs == self.gram_rhs
    }
}

/// Evaluates both cross-product axioms for a pair of vectors.
pub fn cross_axioms(x: &ImaginaryVector, y: &ImaginaryVector) -> Result<CrossAxioms, Error> {
    let c = cross(x, y)?;
    Ok(CrossAxioms {
        orthogonality_x: dot(&c, x)?,
        orthogonality_y: dot(&c, y)?,
        gram_lhs: dot(&c, &c)?,
        gram_rhs: &dot(x, x)? * &dot(y, y)? - {
            let xy = dot(x, y)?;
            &xy * &xy
        },
    })
}
