//! Finite-dimensional unital algebras over exact scalars, defined by
//! dense structure constants.
//!
//! Basis index 0 is always the two-sided unit. The named constructions
//! are the generalized quaternions `H(α,β)` (derived from the generator
//! relations `i² = −α`, `j² = −β`, `k = ij = −ji` and then verified
//! associative on every basis triple) and the generalized octonions
//! `O(α,β,γ)` with the standard eight-dimensional multiplication table.

mod element;
mod text;

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::Error;
use crate::scalar::{rat_int, Int, Rational, Scalar};

pub use element::Element;

/// Parameters of a named construction, kept so trace, norm, and
/// division/split classification have their closed forms available.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraParams {
    Quaternion { alpha: Rational, beta: Rational },
    Octonion { alpha: Rational, beta: Rational, gamma: Rational },
}

impl AlgebraParams {
    pub fn values(&self) -> Vec<Rational> {
        match self {
            AlgebraParams::Quaternion { alpha, beta } => vec![alpha.clone(), beta.clone()],
            AlgebraParams::Octonion { alpha, beta, gamma } => {
                vec![alpha.clone(), beta.clone(), gamma.clone()]
            }
        }
    }
}

/// A unital algebra given by its dimension and the dense array of
/// structure constants `c[i][j][k]` (the coefficient of `e_k` in
/// `e_i · e_j`).
///
/// Specs are immutable after construction and meant to be shared behind
/// an [`Arc`]; every operation on them is a pure function.
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    label: String,
    dim: usize,
    table: Vec<Rational>,
    /// Per-(i,j) nonzero entries of the table, for fast multiplication.
    products: Vec<Vec<(usize, Rational)>>,
    conj_signature: Option<Vec<i8>>,
    params: Option<AlgebraParams>,
}

/// Structure-constant cells of the octonion table for `e_i · e_j`,
/// `1 ≤ i, j ≤ 7`: `(sign, parameter mask, target basis index)` where the
/// mask selects the product of α (bit 0), β (bit 1), γ (bit 2).
#[rustfmt::skip]
const OCTONION_CELLS: [[(i8, u8, usize); 7]; 7] = [
    [(-1, 1, 0), ( 1, 0, 3), (-1, 1, 2), ( 1, 0, 5), (-1, 1, 4), (-1, 0, 7), ( 1, 1, 6)],
    [(-1, 0, 3), (-1, 2, 0), ( 1, 2, 1), ( 1, 0, 6), ( 1, 0, 7), (-1, 2, 4), (-1, 2, 5)],
    [( 1, 1, 2), (-1, 2, 1), (-1, 3, 0), ( 1, 0, 7), (-1, 1, 6), ( 1, 2, 5), (-1, 3, 4)],
    [(-1, 0, 5), (-1, 0, 6), (-1, 0, 7), (-1, 4, 0), ( 1, 4, 1), ( 1, 4, 2), ( 1, 4, 3)],
    [( 1, 1, 4), (-1, 0, 7), ( 1, 1, 6), (-1, 4, 1), (-1, 5, 0), (-1, 4, 3), ( 1, 5, 2)],
    [( 1, 0, 7), ( 1, 2, 4), (-1, 2, 5), (-1, 4, 2), ( 1, 4, 3), (-1, 6, 0), (-1, 6, 1)],
    [(-1, 1, 6), ( 1, 2, 5), ( 1, 3, 4), (-1, 4, 3), (-1, 5, 2), ( 1, 6, 1), (-1, 7, 0)],
];

impl AlgebraSpec {
    /// The generalized quaternion algebra with `i² = −α`, `j² = −β`,
    /// `k = ij = −ji`.
    ///
    /// The full table is derived mechanically from the generator
    /// relations (basis words `i^a j^b` with anticommuting generators)
    /// and then verified associative on all basis triples, so a
    /// transcription slip cannot survive construction.
    pub fn quaternion(alpha: Rational, beta: Rational) -> Arc<Self> {
        let dim = 4;
        let mut table = vec![Rational::zero(); dim * dim * dim];
        // basis index b encodes the word i^(b & 1) j^(b >> 1)
        for bi in 0..dim {
            for bj in 0..dim {
                let (a1, b1) = (bi & 1, bi >> 1);
                let (a2, b2) = (bj & 1, bj >> 1);
                let mut coeff = if (b1 * a2) % 2 == 1 {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                if a1 + a2 == 2 {
                    coeff *= -&alpha;
                }
                if b1 + b2 == 2 {
                    coeff *= -&beta;
                }
                let target = ((a1 + a2) & 1) + 2 * ((b1 + b2) & 1);
                table[(bi * dim + bj) * dim + target] = coeff;
            }
        }
        let label = format!("quaternion({alpha},{beta})");
        let spec = AlgebraSpec::assemble(
            label,
            dim,
            table,
            Some(vec![1, -1, -1, -1]),
            Some(AlgebraParams::Quaternion { alpha, beta }),
        );
        assert!(
            spec.basis_associativity_violations().is_empty(),
            "derived quaternion table is not associative"
        );
        spec.validate_unit().expect("derived quaternion table lost the unit");
        Arc::new(spec)
    }

    /// The generalized octonion algebra `O(α,β,γ)` on the basis
    /// `{1, e₁, …, e₇}`.
    pub fn octonion(alpha: Rational, beta: Rational, gamma: Rational) -> Arc<Self> {
        let dim = 8;
        let mut table = vec![Rational::zero(); dim * dim * dim];
        for k in 0..dim {
            table[k * dim + k] = Rational::one(); // e0 · e_k = e_k
            table[(k * dim) * dim + k] = Rational::one(); // e_k · e0 = e_k
        }
        let factors = [&alpha, &beta, &gamma];
        for (i, row) in OCTONION_CELLS.iter().enumerate() {
            for (j, &(sign, mask, target)) in row.iter().enumerate() {
                let mut coeff = rat_int(i64::from(sign));
                for (bit, f) in factors.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        coeff *= *f;
                    }
                }
                table[((i + 1) * dim + (j + 1)) * dim + target] = coeff;
            }
        }
        let label = format!("octonion({alpha},{beta},{gamma})");
        let spec = AlgebraSpec::assemble(
            label,
            dim,
            table,
            Some(std::iter::once(1).chain(std::iter::repeat_n(-1, 7)).collect()),
            Some(AlgebraParams::Octonion { alpha, beta, gamma }),
        );
        spec.validate_unit().expect("octonion table lost the unit");
        Arc::new(spec)
    }

    /// A user-supplied algebra. The table must make `e₀` a two-sided
    /// unit; the violated cell is named otherwise.
    pub fn custom(
        label: impl Into<String>,
        dim: usize,
        table: Vec<Rational>,
        conj_signature: Option<Vec<i8>>,
        params: Option<AlgebraParams>,
    ) -> Result<Arc<Self>, Error> {
        if dim == 0 {
            return Err(Error::Parse("algebra dimension must be at least 1".into()));
        }
        if table.len() != dim * dim * dim {
            return Err(Error::Parse(format!(
                "expected {} structure constants for dimension {dim}, got {}",
                dim * dim * dim,
                table.len()
            )));
        }
        if let Some(sig) = &conj_signature {
            if sig.len() != dim {
                return Err(Error::Parse(format!(
                    "conjugation signature has {} entries, expected {dim}",
                    sig.len()
                )));
            }
            if sig[0] != 1 {
                return Err(Error::Parse(
                    "conjugation signature must be +1 at the unit".into(),
                ));
            }
            if sig.iter().any(|&s| s != 1 && s != -1) {
                return Err(Error::Parse(
                    "conjugation signature entries must be +1 or -1".into(),
                ));
            }
        }
        match &params {
            Some(AlgebraParams::Quaternion { .. }) if dim != 4 => {
                return Err(Error::Parse(
                    "quaternion parameters require dimension 4".into(),
                ));
            }
            Some(AlgebraParams::Octonion { .. }) if dim != 8 => {
                return Err(Error::Parse(
                    "octonion parameters require dimension 8".into(),
                ));
            }
            _ => {}
        }
        let spec = AlgebraSpec::assemble(label.into(), dim, table, conj_signature, params);
        spec.validate_unit()?;
        Ok(Arc::new(spec))
    }

    /// A seeded random algebra: structure constants are uniform integers
    /// in `[−3, 3]`, with the unit row and column overwritten so `e₀`
    /// stays a two-sided unit. Legitimate test points for every identity
    /// whose proof uses only bilinearity.
    pub fn random(label: impl Into<String>, dim: usize, rng: &mut impl Rng) -> Arc<Self> {
        assert!((1..=8).contains(&dim), "random algebra dimension out of range");
        let mut table = vec![Rational::zero(); dim * dim * dim];
        for i in 1..dim {
            for j in 1..dim {
                for k in 0..dim {
                    table[(i * dim + j) * dim + k] = rat_int(rng.gen_range(-3i64..=3));
                }
            }
        }
        for k in 0..dim {
            table[k * dim + k] = Rational::one();
            table[(k * dim) * dim + k] = Rational::one();
        }
        let spec = AlgebraSpec::assemble(label.into(), dim, table, None, None);
        debug_assert!(spec.validate_unit().is_ok());
        Arc::new(spec)
    }

    fn assemble(
        label: String,
        dim: usize,
        table: Vec<Rational>,
        conj_signature: Option<Vec<i8>>,
        params: Option<AlgebraParams>,
    ) -> Self {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut cell = Vec::new();
                for k in 0..dim {
                    let c = &table[(i * dim + j) * dim + k];
                    if !c.is_zero() {
                        cell.push((k, c.clone()));
                    }
                }
                products.push(cell);
            }
        }
        AlgebraSpec {
            label,
            dim,
            table,
            products,
            conj_signature,
            params,
        }
    }

    fn validate_unit(&self) -> Result<(), Error> {
        let d = self.dim;
        for j in 0..d {
            for k in 0..d {
                let expected = if j == k { Rational::one() } else { Rational::zero() };
                let found = self.constant(0, j, k);
                if *found != expected {
                    return Err(Error::NonUnitalTable {
                        i: 0,
                        j,
                        k,
                        found: found.to_string(),
                        expected: expected.to_string(),
                    });
                }
                let found = self.constant(j, 0, k);
                if *found != expected {
                    return Err(Error::NonUnitalTable {
                        i: j,
                        j: 0,
                        k,
                        found: found.to_string(),
                        expected: expected.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> Option<&AlgebraParams> {
        self.params.as_ref()
    }

    pub fn conj_signature(&self) -> Option<&[i8]> {
        self.conj_signature.as_deref()
    }

    /// The structure constant `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub(crate) fn product_cell(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    /// Bilinear product of two coordinate vectors through the table.
    pub(crate) fn mul_coords<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S> {
        let d = self.dim;
        let mut out = vec![S::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = xi.ring_mul(yj);
                for (k, c) in self.product_cell(i, j) {
                    let term = if c.is_one() {
                        p.clone()
                    } else if (-c).is_one() {
                        p.ring_neg()
                    } else {
                        p.ring_mul(&S::from_rational(c))
                    };
                    out[*k] = out[*k].ring_add(&term);
                }
            }
        }
        out
    }

    /// All basis triples `(i, j, k)` where `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    /// Empty exactly when the table is associative on the basis.
    pub fn basis_associativity_violations(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        let basis: Vec<Vec<Rational>> = (0..d)
            .map(|k| {
                let mut v = vec![Rational::zero(); d];
                v[k] = Rational::one();
                v
            })
            .collect();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_coords(&basis[i], &basis[j]);
                for k in 0..d {
                    let left = self.mul_coords(&ij, &basis[k]);
                    let jk = self.mul_coords(&basis[j], &basis[k]);
                    let right = self.mul_coords(&basis[i], &jk);
                    if left != right {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Diagonal coefficients of the norm form `n(x) = Σ coeff_k x_k²`,
    /// available for the named constructions only.
    pub fn norm_form_coefficients(&self) -> Option<Vec<Rational>> {
        match &self.params {
            Some(AlgebraParams::Quaternion { alpha, beta }) => Some(vec![
                Rational::one(),
                alpha.clone(),
                beta.clone(),
                alpha * beta,
            ]),
            Some(AlgebraParams::Octonion { alpha, beta, gamma }) => Some(vec![
                Rational::one(),
                alpha.clone(),
                beta.clone(),
                alpha * beta,
                gamma.clone(),
                alpha * gamma,
                beta * gamma,
                alpha * beta * gamma,
            ]),
            None => None,
        }
    }

    /// Reconstructs the canonical table from the declared parameters.
    /// `None` when the spec carries no parameters.
    pub fn rebuild_from_params(&self) -> Option<Arc<AlgebraSpec>> {
        match &self.params {
            Some(AlgebraParams::Quaternion { alpha, beta }) => {
                Some(AlgebraSpec::quaternion(alpha.clone(), beta.clone()))
            }
            Some(AlgebraParams::Octonion { alpha, beta, gamma }) => Some(AlgebraSpec::octonion(
                alpha.clone(),
                beta.clone(),
                gamma.clone(),
            )),
            None => None,
        }
    }

    /// Cells where this spec's table differs from the canonical table of
    /// its declared parameters. Empty when the table is authentic.
    pub fn table_deviations(&self) -> Vec<TableDeviation> {
        let Some(canonical) = self.rebuild_from_params() else {
            return Vec::new();
        };
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let found = self.constant(i, j, k);
                    let expected = canonical.constant(i, j, k);
                    if found != expected {
                        out.push(TableDeviation {
                            i,
                            j,
                            k,
                            found: found.clone(),
                            expected: expected.clone(),
                        });
                    }
                }
            }
        }
        out
    }
}

/// A structure constant that disagrees with the canonical table of the
/// declared construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDeviation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub found: Rational,
    pub expected: Rational,
}

/// Verdict of the division/split classification over the reals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// The norm form is positive definite: `n(a) ≠ 0` for every `a ≠ 0`.
    Division,
    /// The norm form is real-isotropic; a witness is attached.
    Split(SplitWitness),
}

/// An exact certificate that the norm form is not positive definite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitWitness {
    /// A nonzero rational vector with `n(w) = 0`.
    Isotropic(Element),
    /// A vector with `n(w) < 0`. Over the reals an indefinite quadratic
    /// form is isotropic, but the isotropic vector itself need not have
    /// rational coordinates, so this is the exact certificate emitted
    /// when the rational search finds none.
    NegativeNorm(Element),
}

/// `√r` when `r` is the square of a rational, else `None`.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let int_sqrt = |v: &Int| -> Option<Int> {
        let s = v.sqrt();
        (&s * &s == *v).then_some(s)
    };
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(Rational::new(n, d))
}

/// Classifies a named quaternion/octonion algebra over ℝ: division iff
/// every parameter is positive (the norm form of the construction is
/// positive definite exactly then), split otherwise, with an exact
/// witness attached.
pub fn classify_division(spec: &Arc<AlgebraSpec>) -> Result<Classification, Error> {
    let coeffs = spec
        .norm_form_coefficients()
        .ok_or(Error::NotNamedConstruction)?;
    let params = spec.params().expect("norm form implies params").values();
    if params.iter().all(|p| p.is_positive()) {
        return Ok(Classification::Division);
    }
    // A vanishing diagonal coefficient makes the basis vector isotropic.
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            return Ok(Classification::Split(SplitWitness::Isotropic(
                Element::basis(spec, k),
            )));
        }
    }
    // Two-component search: c_i x² + c_j y² = 0 has a rational solution
    // exactly when −c_j/c_i is the square of a rational.
    for i in 0..coeffs.len() {
        for j in 0..coeffs.len() {
            if i == j {
                continue;
            }
            let ratio = -(&coeffs[j] / &coeffs[i]);
            if !ratio.is_positive() {
                continue;
            }
            if let Some(s) = rational_sqrt(&ratio) {
                let mut coords = vec![Rational::zero(); spec.dim()];
                coords[i] = Rational::from_integer(s.numer().clone());
                coords[j] = Rational::from_integer(s.denom().clone());
                let witness = Element::new(spec, coords).expect("witness has spec dimension");
                return Ok(Classification::Split(SplitWitness::Isotropic(witness)));
            }
        }
    }
    // Indefinite but rationally anisotropic as far as the pair search
    // sees: certify real isotropy with a negative-norm basis vector.
    let k = coeffs
        .iter()
        .position(|c| c.is_negative())
        .expect("some coefficient is negative once none vanish and not all params are positive");
    Ok(Classification::Split(SplitWitness::NegativeNorm(
        Element::basis(spec, k),
    )))
}

/// A random element with small fractional coordinates, for seeded
/// property suites.
pub fn random_element(spec: &Arc<AlgebraSpec>, rng: &mut impl Rng) -> Element {
    let coords = (0..spec.dim())
        .map(|_| {
            let n = rng.gen_range(-9i64..=9);
            let d = rng.gen_range(1i64..=4);
            Rational::new(Int::from(n), Int::from(d))
        })
        .collect();
    Element::new(spec, coords).expect("generated coordinate count matches")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn h11() -> Arc<AlgebraSpec> {
        AlgebraSpec::quaternion(rat_int(1), rat_int(1))
    }

    #[test]
    fn quaternion_generator_relations() {
        let q = AlgebraSpec::quaternion(rat_int(2), rat_int(3));
        let e = |k: usize| Element::basis(&q, k);
        let (i, j, k) = (e(1), e(2), e(3));
        assert_eq!(i.try_mul(&j).unwrap(), k);
        assert_eq!(j.try_mul(&i).unwrap(), -k.clone());
        // i² = −α, j² = −β, k² = −αβ
        assert_eq!(i.try_mul(&i).unwrap(), Element::unit(&q).scale(&rat_int(-2)));
        assert_eq!(j.try_mul(&j).unwrap(), Element::unit(&q).scale(&rat_int(-3)));
        assert_eq!(k.try_mul(&k).unwrap(), Element::unit(&q).scale(&rat_int(-6)));
        // ik = −αj, ki = αj, jk = βi, kj = −βi
        assert_eq!(i.try_mul(&k).unwrap(), e(2).scale(&rat_int(-2)));
        assert_eq!(k.try_mul(&i).unwrap(), e(2).scale(&rat_int(2)));
        assert_eq!(j.try_mul(&k).unwrap(), e(1).scale(&rat_int(3)));
        assert_eq!(k.try_mul(&j).unwrap(), e(1).scale(&rat_int(-3)));
    }

    #[test]
    fn quaternion_is_associative_on_basis() {
        for (a, b) in [(1, 1), (2, 3), (-1, 1), (1, -2)] {
            let q = AlgebraSpec::quaternion(rat_int(a), rat_int(b));
            assert!(q.basis_associativity_violations().is_empty());
        }
    }

    /// Independent oracle for H(α,β): the closed-form product of two
    /// quaternions, written out without reference to the table.
    fn quat_mul_closed_form(
        alpha: &Rational,
        beta: &Rational,
        x: &[Rational],
        y: &[Rational],
    ) -> Vec<Rational> {
        let ab = alpha * beta;
        vec![
            &x[0] * &y[0] - alpha * &x[1] * &y[1] - beta * &x[2] * &y[2] - &ab * &x[3] * &y[3],
            &x[0] * &y[1] + &x[1] * &y[0] + beta * (&x[2] * &y[3] - &x[3] * &y[2]),
            &x[0] * &y[2] + &x[2] * &y[0] + alpha * (&x[3] * &y[1] - &x[1] * &y[3]),
            &x[0] * &y[3] + &x[3] * &y[0] + (&x[1] * &y[2] - &x[2] * &y[1]),
        ]
    }

    #[test]
    fn quaternion_table_matches_closed_form_oracle() {
        let (alpha, beta) = (rat(3, 2), rat(-2, 1));
        let q = AlgebraSpec::quaternion(alpha.clone(), beta.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x = random_element(&q, &mut rng);
            let y = random_element(&q, &mut rng);
            let expected = quat_mul_closed_form(&alpha, &beta, x.coords(), y.coords());
            assert_eq!(x.try_mul(&y).unwrap().coords(), &expected[..]);
        }
    }

    #[test]
    fn squared_sum_of_generators_collapses() {
        // (i + j)² = i² + ij + ji + j² = −α − β
        let q = AlgebraSpec::quaternion(rat_int(2), rat_int(5));
        let s = Element::basis(&q, 1) + Element::basis(&q, 2);
        assert_eq!(
            s.try_mul(&s).unwrap(),
            Element::unit(&q).scale(&rat_int(-7))
        );
    }

    #[test]
    fn octonion_table_spot_entries() {
        let o = AlgebraSpec::octonion(rat_int(1), rat_int(1), rat_int(1));
        let e = |k: usize| Element::basis(&o, k);
        assert_eq!(e(1).try_mul(&e(2)).unwrap(), e(3));
        assert_eq!(e(4).try_mul(&e(5)).unwrap(), e(1));
        assert_eq!(
            e(7).try_mul(&e(7)).unwrap(),
            Element::unit(&o).scale(&rat_int(-1))
        );
        let o2 = AlgebraSpec::octonion(rat(2, 1), rat(3, 1), rat(5, 1));
        let e2 = |k: usize| Element::basis(&o2, k);
        assert_eq!(e2(1).try_mul(&e2(2)).unwrap(), e2(3)); // parameter-free cell
        assert_eq!(e2(4).try_mul(&e2(5)).unwrap(), e2(1).scale(&rat_int(5)));
        assert_eq!(
            e2(7).try_mul(&e2(7)).unwrap(),
            Element::unit(&o2).scale(&rat_int(-30))
        );
    }

    #[test]
    fn octonion_is_not_associative() {
        let o = AlgebraSpec::octonion(rat_int(1), rat_int(1), rat_int(1));
        assert!(!o.basis_associativity_violations().is_empty());
        let e = |k: usize| -> Element { Element::basis(&o, k) };
        let left = e(1).try_mul(&e(2)).unwrap().try_mul(&e(4)).unwrap();
        let right = e(1).try_mul(&e(2).try_mul(&e(4)).unwrap()).unwrap();
        assert_eq!(left, e(7));
        assert_eq!(right, -e(7));
        assert_ne!(left, right);
    }

    /// The named constructions are composition algebras: the norm is
    /// multiplicative. A single wrong cell in the table breaks this, so
    /// it is a strong independent check of the transcription.
    #[test]
    fn norm_is_multiplicative_on_named_constructions() {
        let specs = [
            AlgebraSpec::quaternion(rat_int(1), rat_int(1)),
            AlgebraSpec::quaternion(rat(2, 3), rat(-7, 2)),
            AlgebraSpec::octonion(rat_int(1), rat_int(1), rat_int(1)),
            AlgebraSpec::octonion(rat_int(2), rat_int(1), rat_int(3)),
            AlgebraSpec::octonion(rat(-1, 2), rat(2, 5), rat_int(1)),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for spec in &specs {
            for _ in 0..100 {
                let x = random_element(spec, &mut rng);
                let y = random_element(spec, &mut rng);
                let (_, nx) = x.trace_norm().unwrap();
                let (_, ny) = y.trace_norm().unwrap();
                let (_, nxy) = x.try_mul(&y).unwrap().trace_norm().unwrap();
                assert_eq!(nxy, nx * ny, "norm not multiplicative in {}", spec.label());
            }
        }
    }

    #[test]
    fn octonions_are_alternative() {
        // (xx)y = x(xy) and (xy)y = x(yy) hold in every generalized
        // octonion algebra; they fail for random tables, so they pin the
        // transcription down further.
        let o = AlgebraSpec::octonion(rat_int(2), rat(1, 3), rat_int(-1));
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let x = random_element(&o, &mut rng);
            let y = random_element(&o, &mut rng);
            let xx = x.try_mul(&x).unwrap();
            let xy = x.try_mul(&y).unwrap();
            let yy = y.try_mul(&y).unwrap();
            assert_eq!(xx.try_mul(&y).unwrap(), x.try_mul(&xy).unwrap());
            assert_eq!(xy.try_mul(&y).unwrap(), x.try_mul(&yy).unwrap());
        }
    }

    #[test]
    fn custom_accepts_the_scalar_algebra() {
        let spec = AlgebraSpec::custom("reals", 1, vec![Rational::one()], Some(vec![1]), None)
            .unwrap();
        assert_eq!(spec.dim(), 1);
        let x = Element::new(&spec, vec![rat(7, 3)]).unwrap();
        assert_eq!(x.try_mul(&x).unwrap().coords()[0], rat(49, 9));
    }

    #[test]
    fn custom_rejects_non_unital_tables() {
        // c[0][1][1] = 0 breaks e0 · e1 = e1.
        let mut table = vec![Rational::zero(); 8];
        table[0] = Rational::one(); // c[0][0][0]
        let err = AlgebraSpec::custom("broken", 2, table, None, None).unwrap_err();
        match err {
            Error::NonUnitalTable { i, j, k, .. } => assert_eq!((i, j, k), (0, 1, 1)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn random_tables_are_unital_and_reproducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a = AlgebraSpec::random("r", 5, &mut rng);
        assert!(a.validate_unit().is_ok());
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let b = AlgebraSpec::random("r", 5, &mut rng);
        for i in 0..5 {
            for j in 0..5 {
                for k in 0..5 {
                    assert_eq!(a.constant(i, j, k), b.constant(i, j, k));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for dim in 1..=8 {
            let spec = AlgebraSpec::random(format!("r{dim}"), dim, &mut rng);
            let x = random_element(&spec, &mut rng);
            let unit = Element::unit(&spec);
            assert_eq!(unit.try_mul(&x).unwrap(), x);
            assert_eq!(x.try_mul(&unit).unwrap(), x);
        }
    }

    #[test]
    fn table_deviations_catch_a_corrupted_cell() {
        let q = h11();
        let idx = |i: usize, j: usize, k: usize| (i * 4 + j) * 4 + k;
        let mut table: Vec<Rational> = (0..4 * 4 * 4)
            .map(|n| q.constant(n / 16, (n / 4) % 4, n % 4).clone())
            .collect();
        table[idx(1, 2, 3)] = rat_int(2); // c[1][2][3]: 1 → 2
        let corrupted = AlgebraSpec::custom(
            "tampered",
            4,
            table,
            Some(vec![1, -1, -1, -1]),
            Some(AlgebraParams::Quaternion {
                alpha: rat_int(1),
                beta: rat_int(1),
            }),
        )
        .unwrap();
        let devs = corrupted.table_deviations();
        assert_eq!(devs.len(), 1);
        assert_eq!((devs[0].i, devs[0].j, devs[0].k), (1, 2, 3));
        assert!(q.table_deviations().is_empty());
    }

    #[test]
    fn classification_follows_the_sign_rule() {
        let division = [
            AlgebraSpec::quaternion(rat_int(1), rat_int(1)),
            AlgebraSpec::octonion(rat_int(1), rat_int(1), rat_int(1)),
            AlgebraSpec::quaternion(rat(2, 3), rat(7, 5)),
        ];
        for spec in &division {
            assert_eq!(classify_division(spec).unwrap(), Classification::Division);
        }
        // H(1,1) is positive definite: no isotropic vector among random
        // samples.
        let q = h11();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10_000 {
            let x = random_element(&q, &mut rng);
            let (_, n) = x.trace_norm().unwrap();
            if !x.is_zero() {
                assert!(n.is_positive());
            }
        }
    }

    #[test]
    fn split_verdicts_carry_exact_witnesses() {
        let s = AlgebraSpec::quaternion(rat_int(-1), rat_int(1));
        match classify_division(&s).unwrap() {
            Classification::Split(SplitWitness::Isotropic(w)) => {
                // n(1 + i) = 1 + α = 0
                assert_eq!(w.coords(), &[rat_int(1), rat_int(1), rat_int(0), rat_int(0)]);
                let (_, n) = w.trace_norm().unwrap();
                assert!(n.is_zero() && !w.is_zero());
            }
            other => panic!("expected isotropic witness, got {other:?}"),
        }
        // −α/… is never a rational square for H(−2,3), so the honest
        // certificate is a negative-norm vector.
        let s = AlgebraSpec::quaternion(rat_int(-2), rat_int(3));
        match classify_division(&s).unwrap() {
            Classification::Split(SplitWitness::NegativeNorm(w)) => {
                let (_, n) = w.trace_norm().unwrap();
                assert!(n.is_negative());
            }
            other => panic!("expected negative-norm witness, got {other:?}"),
        }
        let o = AlgebraSpec::octonion(rat_int(-1), rat_int(2), rat_int(1));
        match classify_division(&o).unwrap() {
            Classification::Split(SplitWitness::Isotropic(w)) => {
                let (_, n) = w.trace_norm().unwrap();
                assert!(n.is_zero() && !w.is_zero());
            }
            other => panic!("expected isotropic witness, got {other:?}"),
        }
        assert!(matches!(
            classify_division(&AlgebraSpec::random("r", 3, &mut ChaCha8Rng::seed_from_u64(1))),
            Err(Error::NotNamedConstruction)
        ));
    }
}
