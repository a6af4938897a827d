//! Cross-module flows through the public API: algebras that travel
//! through the text format keep every identity, and the suite layer is
//! deterministic end to end.

use fibalg_core::scalar::{rat, rat_int};
use fibalg_core::suites::{run_all, SuiteAlgebra, SuiteConfig};
use fibalg_core::{
    binet_check, cassini_check, fib, fib_element, imaginary_fib_octonion,
    imaginary_fib_quaternion, mixed, mixed_zero_check, AlgebraSpec, Element, Rational,
};

#[test]
fn identities_survive_the_text_format() {
    let original = AlgebraSpec::octonion(rat(2, 1), rat(1, 2), rat(-3, 1));
    let reloaded = AlgebraSpec::from_text("travelled", &original.to_text()).unwrap();
    assert!(reloaded.table_deviations().is_empty());
    for m in -12..=12 {
        assert!(cassini_check(&reloaded, m).holds(), "m = {m}");
        assert!(binet_check(&reloaded, m).holds(), "m = {m}");
    }
    let x = Element::from_i64s(&reloaded, &[1, -2, 3, 0, 5, 0, -1, 4]).unwrap();
    assert!(x.quadratic_residual().unwrap().is_zero());
}

#[test]
fn fibonacci_elements_restrict_to_fibonacci_vectors() {
    // The imaginary vectors are the elements with the scalar coordinate
    // dropped and the index shifted accordingly.
    let q = AlgebraSpec::quaternion(rat_int(1), rat_int(1));
    for n in -10..=10 {
        let element = fib_element(&q, n);
        let vector = imaginary_fib_quaternion(n + 1);
        assert_eq!(&element.coords()[1..], vector.coords());
    }
    let o = AlgebraSpec::octonion(rat_int(1), rat_int(1), rat_int(1));
    for n in -10..=10 {
        let element = fib_element(&o, n);
        let vector = imaginary_fib_octonion(n + 1);
        assert_eq!(&element.coords()[1..], vector.coords());
    }
}

#[test]
fn mixed_products_vanish_beyond_the_acceptance_window() {
    // Negative bases exercise the negation identity inside the closed
    // forms.
    for dim in [3usize, 7] {
        for k in -6..=6 {
            for m in -6..=6 {
                for n in -6..=6 {
                    let chk = mixed_zero_check(dim, k, m, n).unwrap();
                    assert!(chk.holds(), "dim {dim} ({k},{m},{n})");
                }
            }
        }
    }
    let x = imaginary_fib_octonion(-9);
    let y = imaginary_fib_octonion(4);
    let z = imaginary_fib_octonion(40);
    assert_eq!(mixed(&x, &y, &z).unwrap(), Rational::from_integer(fib(0)));
}

#[test]
fn full_runs_are_reproducible() {
    let config = SuiteConfig {
        m_min: -6,
        m_max: 6,
        p_max: 30,
        k_max: 6,
        algebras: vec![
            SuiteAlgebra::trusted(AlgebraSpec::quaternion(rat_int(-1), rat_int(1))),
            SuiteAlgebra::trusted(AlgebraSpec::octonion(rat_int(2), rat_int(1), rat_int(3))),
        ],
        random_count: 5,
        seed: Some(2024),
    };
    let first = run_all(&config).unwrap();
    let second = run_all(&config).unwrap();
    assert_eq!(first.len(), second.len());
    for (a, b) in first.iter().zip(&second) {
        assert!(a.passed(), "{}: {:?}", a.suite, a.failures.first());
        assert_eq!(a.suite, b.suite);
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.failures, b.failures);
    }
}
