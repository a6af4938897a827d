//! Exact verification of Fibonacci-element identities over arbitrary
//! finite-dimensional unital algebras.
//!
//! Everything is computed in exact arithmetic — arbitrary-precision
//! integers, reduced rationals, and ℚ(√5) — so every identity check is a
//! plain equality with zero floating-point error. The crate covers
//!
//! * Fibonacci elements `F_m = Σ_k f_{m+k} e_k` over any algebra given by
//!   structure constants, with recurrence, sum, Binet, generating
//!   function, negative-index, and Cassini checks;
//! * generalized quaternion algebras `H(α,β)` and generalized octonion
//!   algebras `O(α,β,γ)`, with conjugation, trace, norm, the quadratic
//!   identity, and division/split classification;
//! * exact 3- and 7-dimensional cross products with their orthogonality
//!   and Gram-determinant axioms;
//! * imaginary Fibonacci quaternions/octonions, their closed-form cross
//!   products, and the vanishing mixed products;
//! * deterministic verification suites producing machine-readable
//!   reports.

pub mod algebra;
pub mod cross;
pub mod error;
pub mod fib;
pub mod fib_element;
pub mod fib_vector;
pub mod report;
pub mod scalar;
pub mod suites;

pub use algebra::{
    classify_division, random_element, AlgebraParams, AlgebraSpec, Classification, Element,
    SplitWitness, TableDeviation,
};
pub use cross::{
    cross, cross3, cross7, cross_axioms, dot, gram_det, mixed, CrossAxioms, ImaginaryVector,
};
pub use error::Error;
pub use fib::{fib, fib_sum, BothSides, FibCache};
pub use fib_element::{
    binet_check, binet_element, cassini_check, fib_element, generating_function_checks,
    negative_index_check, recurrence_check, sum_checks, BinetCheck, CassiniCheck, ElementCheck,
    TruncatedSeries,
};
pub use fib_vector::{
    dot_collapse_check, fib_cross_check, fib_cross_closed_form, imaginary_fib_octonion,
    imaginary_fib_quaternion, imaginary_fib_vector, mixed_zero_check, MixedCheck, VectorCheck,
    CROSS_DIRECTION_3D, CROSS_DIRECTION_7D,
};
pub use report::{Failure, Report, ReportBuilder};
pub use scalar::{Golden, Int, Rational, Scalar};
pub use suites::{
    default_named_algebras, effective_algebras, run_all, run_suite, SuiteAlgebra, SuiteConfig,
    SuiteKind,
};
