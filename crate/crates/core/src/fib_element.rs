//! Fibonacci elements `F_m = Σ_k f_{m+k} e_k` over an arbitrary algebra,
//! and exact checks of the identities they satisfy: the recurrence, the
//! partial-sum closed form, Binet's formula over ℚ(√5), the generating
//! function, the negative-index identity, and Cassini's identity in both
//! multiplication orders.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraSpec, Element};
use crate::fib::fib;
use crate::scalar::{Golden, Rational};

/// The Fibonacci element `F_m`: coordinate `k` is `f_{m+k}`.
pub fn fib_element(spec: &Arc<AlgebraSpec>, m: i64) -> Element {
    let coords = (0..spec.dim() as i64).map(|k| fib(m + k)).collect();
    Element::from_ints(spec, coords).expect("coordinate per basis vector")
}

/// `(−1)^e · x` for rationals.
fn alternate(e: i64, x: Rational) -> Rational {
    if e.rem_euclid(2) == 0 {
        x
    } else {
        -x
    }
}

/// Two exactly evaluated element sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementCheck {
    pub lhs: Element,
    pub rhs: Element,
}

impl ElementCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `F_{m+2} = F_{m+1} + F_m`, both sides by definition.
pub fn recurrence_check(spec: &Arc<AlgebraSpec>, m: i64) -> ElementCheck {
    ElementCheck {
        lhs: fib_element(spec, m + 2),
        rhs: fib_element(spec, m + 1) + fib_element(spec, m),
    }
}

/// The corrected partial-sum identity, in both equivalent forms:
/// `Σ_{i=1}^p F_i = F_{p+2} − F_2` and `Σ_{i=0}^p F_i = F_{p+2} − F_1`.
/// The first component is the sum from 1, the second from 0.
pub fn sum_checks(spec: &Arc<AlgebraSpec>, p: u32) -> (ElementCheck, ElementCheck) {
    let p = i64::from(p);
    let mut sum = Element::zero(spec);
    for i in 1..=p {
        sum = sum + fib_element(spec, i);
    }
    let from_one = ElementCheck {
        lhs: sum.clone(),
        rhs: fib_element(spec, p + 2) - fib_element(spec, 2),
    };
    let from_zero = ElementCheck {
        lhs: sum + fib_element(spec, 0),
        rhs: fib_element(spec, p + 2) - fib_element(spec, 1),
    };
    (from_one, from_zero)
}

/// Binet's formula evaluated exactly in the algebra with ℚ(√5)
/// coordinates: `F_m = (α*·α^m − β*·β^m)/(α − β)` where `α, β` are the
/// roots of `x² = x + 1` and `α* = Σ α^k e_k`, `β* = Σ β^k e_k`.
pub fn binet_element(spec: &Arc<AlgebraSpec>, m: i64) -> Element<Golden> {
    let phi = Golden::phi();
    let psi = Golden::psi();
    let phi_m = phi.pow(m).expect("φ is nonzero");
    let psi_m = psi.pow(m).expect("ψ is nonzero");
    let inv_sqrt5 = Golden::sqrt5().inv().expect("√5 is nonzero");
    let mut phi_k = Golden::one();
    let mut psi_k = Golden::one();
    let mut coords = Vec::with_capacity(spec.dim());
    for k in 0..spec.dim() {
        let diff = &(&phi_k * &phi_m) - &(&psi_k * &psi_m);
        coords.push(&diff * &inv_sqrt5);
        if k + 1 < spec.dim() {
            phi_k = &phi_k * &phi;
            psi_k = &psi_k * &psi;
        }
    }
    Element::new(spec, coords).expect("coordinate per basis vector")
}

/// Binet evaluation against the definition. Passing means the √5
/// component of every coordinate vanished and the rational parts equal
/// `fib_element(spec, m)` exactly.
#[derive(Debug, Clone)]
pub struct BinetCheck {
    pub formula: Element<Golden>,
    pub definition: Element,
}

impl BinetCheck {
    pub fn holds(&self) -> bool {
        self.formula
            .to_rational_element()
            .is_some_and(|e| e == self.definition)
    }
}

pub fn binet_check(spec: &Arc<AlgebraSpec>, m: i64) -> BinetCheck {
    BinetCheck {
        formula: binet_element(spec, m),
        definition: fib_element(spec, m),
    }
}

/// A formal power series over algebra elements, truncated at a fixed
/// degree bound. All coefficients share one spec.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<Element>,
}

impl TruncatedSeries {
    /// `Σ_{m=0}^{degree} F_m t^m`.
    pub fn fibonacci(spec: &Arc<AlgebraSpec>, degree: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=degree as i64).map(|m| fib_element(spec, m)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Element {
        &self.coeffs[k]
    }

    /// Convolution with a scalar polynomial, truncated at this series'
    /// degree bound. The polynomial coefficients act by scaling.
    pub fn mul_scalar_poly(&self, poly: &[Rational]) -> TruncatedSeries {
        let spec = self.coeffs[0].spec().clone();
        let mut out = vec![Element::zero(&spec); self.coeffs.len()];
        for (j, p) in poly.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (i, c) in self.coeffs.iter().enumerate() {
                if i + j > self.degree() {
                    break;
                }
                out[i + j] = out[i + j].clone() + c.scale(p);
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

/// The generating-function identity `G(t)(1 − t − t²) = F_0 + (F_1 − F_0)t`,
/// checked coefficient by coefficient up to degree `N − 2`: one check per
/// degree, expecting `F_0`, then `F_1 − F_0`, then zero from degree two on.
pub fn generating_function_checks(spec: &Arc<AlgebraSpec>, degree: usize) -> Vec<ElementCheck> {
    assert!(degree >= 2, "the truncation bound must be at least 2");
    let series = TruncatedSeries::fibonacci(spec, degree);
    let poly = [
        Rational::one(),
        -Rational::one(),
        -Rational::one(),
    ];
    let product = series.mul_scalar_poly(&poly);
    (0..=degree - 2)
        .map(|d| {
            let rhs = match d {
                0 => fib_element(spec, 0),
                1 => fib_element(spec, 1) - fib_element(spec, 0),
                _ => Element::zero(spec),
            };
            ElementCheck {
                lhs: product.coeff(d).clone(),
                rhs,
            }
        })
        .collect()
}

/// The negative-index identity
/// `F_{−m} = (−1)^{m+1} f_m F_1 + (−1)^m f_{m+1} F_0`.
pub fn negative_index_check(spec: &Arc<AlgebraSpec>, m: u32) -> ElementCheck {
    let m = i64::from(m);
    let a = alternate(m + 1, Rational::from_integer(fib(m)));
    let b = alternate(m, Rational::from_integer(fib(m + 1)));
    ElementCheck {
        lhs: fib_element(spec, -m),
        rhs: fib_element(spec, 1).scale(&a) + fib_element(spec, 0).scale(&b),
    }
}

/// Cassini's identity in both multiplication orders. Order matters: the
/// algebra may be non-commutative, and each order has its own base value.
#[derive(Debug, Clone)]
pub struct CassiniCheck {
    /// `F_{m−1}F_{m+1} − F_m² = (−1)^m (F_{−1}F_1 − F_0²)`
    pub standard: ElementCheck,
    /// `F_{m+1}F_{m−1} − F_m² = (−1)^m (F_1F_{−1} − F_0²)`
    pub reversed: ElementCheck,
}

impl CassiniCheck {
    pub fn holds(&self) -> bool {
        self.standard.holds() && self.reversed.holds()
    }
}

/// Scales an element by `(−1)^e`.
fn alternate_element(e: i64, x: Element) -> Element {
    if e.rem_euclid(2) == 0 {
        x
    } else {
        -x
    }
}

pub fn cassini_check(spec: &Arc<AlgebraSpec>, m: i64) -> CassiniCheck {
    let prev = fib_element(spec, m - 1);
    let next = fib_element(spec, m + 1);
    let mid = fib_element(spec, m);
    let mid_sq = mid.try_mul(&mid).expect("same spec");
    let f_neg1 = fib_element(spec, -1);
    let f_one = fib_element(spec, 1);
    let f_zero = fib_element(spec, 0);
    let zero_sq = f_zero.try_mul(&f_zero).expect("same spec");

    let standard = ElementCheck {
        lhs: prev.try_mul(&next).expect("same spec") - mid_sq.clone(),
        rhs: alternate_element(
            m,
            f_neg1.try_mul(&f_one).expect("same spec") - zero_sq.clone(),
        ),
    };
    let reversed = ElementCheck {
        lhs: next.try_mul(&prev).expect("same spec") - mid_sq,
        rhs: alternate_element(m, f_one.try_mul(&f_neg1).expect("same spec") - zero_sq),
    };
    CassiniCheck { standard, reversed }
}
