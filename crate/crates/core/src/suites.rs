//! Deterministic verification suites.
//!
//! A suite walks a configured index range or sample count, evaluates both
//! sides of each identity exactly, and produces a [`Report`]. Case order
//! is fixed by the configuration and all randomness is drawn from a
//! seeded generator, so two runs with the same configuration produce
//! identical reports.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    classify_division, random_element, AlgebraParams, AlgebraSpec, Classification, Element,
    SplitWitness,
};
use crate::cross::{cross, cross3, cross_axioms, dot, rational_determinant, ImaginaryVector};
use crate::error::Error;
use crate::fib::FibCache;
use crate::fib_element::{
    binet_check, cassini_check, fib_element, generating_function_checks, negative_index_check,
    recurrence_check,
};
use crate::fib_vector::{dot_collapse_check, fib_cross_closed_form, imaginary_fib_vector};
use crate::report::{Failure, Report, ReportBuilder};
use crate::scalar::{rat_int, Int, Rational};

/// The selectable verification suites, in their canonical run order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    ScalarIdentities,
    AlgebraAxioms,
    FibElements,
    Cassini,
    CrossAxioms,
    FibVectors,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 6] = [
        SuiteKind::ScalarIdentities,
        SuiteKind::AlgebraAxioms,
        SuiteKind::FibElements,
        SuiteKind::Cassini,
        SuiteKind::CrossAxioms,
        SuiteKind::FibVectors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::ScalarIdentities => "scalar-identities",
            SuiteKind::AlgebraAxioms => "algebra-axioms",
            SuiteKind::FibElements => "fib-elements",
            SuiteKind::Cassini => "cassini",
            SuiteKind::CrossAxioms => "cross-axioms",
            SuiteKind::FibVectors => "fib-vectors",
        }
    }

    pub fn from_name(name: &str) -> Option<SuiteKind> {
        SuiteKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// An algebra enrolled in a run. Tables imported from files are
/// untrusted: when `check_table` is set and the spec declares
/// construction parameters, suites first verify the table cell-by-cell
/// against the canonical construction and report any deviation as a
/// failure.
#[derive(Debug, Clone)]
pub struct SuiteAlgebra {
    pub spec: Arc<AlgebraSpec>,
    pub check_table: bool,
}

impl SuiteAlgebra {
    /// An algebra built in-process; its constructor already validated it.
    pub fn trusted(spec: Arc<AlgebraSpec>) -> Self {
        SuiteAlgebra {
            spec,
            check_table: false,
        }
    }

    /// An algebra read from external input.
    pub fn imported(spec: Arc<AlgebraSpec>) -> Self {
        SuiteAlgebra {
            spec,
            check_table: true,
        }
    }
}

/// Ranges, algebras, and seeding for a run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub m_min: i64,
    pub m_max: i64,
    pub p_max: u32,
    pub k_max: i64,
    pub algebras: Vec<SuiteAlgebra>,
    pub random_count: u32,
    pub seed: Option<u64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            m_min: -15,
            m_max: 15,
            p_max: 200,
            k_max: 30,
            algebras: default_named_algebras(),
            random_count: 0,
            seed: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.m_min > self.m_max {
            return Err(Error::Precondition(format!(
                "empty index range {}..{}",
                self.m_min, self.m_max
            )));
        }
        if self.k_max < 0 {
            return Err(Error::Precondition("k-max must be nonnegative".into()));
        }
        if self.random_count > 0 && self.seed.is_none() {
            return Err(Error::Precondition(
                "a seed is required when random algebras are requested".into(),
            ));
        }
        Ok(())
    }

    fn seed_required(&self) -> Result<u64, Error> {
        self.seed.ok_or_else(|| {
            Error::Precondition("this suite draws random samples and needs --seed".into())
        })
    }
}

/// The named parameter sets exercised by default: four quaternion
/// algebras (two of them split) and three octonion algebras.
pub fn default_named_algebras() -> Vec<SuiteAlgebra> {
    vec![
        SuiteAlgebra::trusted(AlgebraSpec::quaternion(rat_int(1), rat_int(1))),
        SuiteAlgebra::trusted(AlgebraSpec::quaternion(rat_int(2), rat_int(3))),
        SuiteAlgebra::trusted(AlgebraSpec::quaternion(rat_int(-1), rat_int(1))),
        SuiteAlgebra::trusted(AlgebraSpec::quaternion(rat_int(1), rat_int(-2))),
        SuiteAlgebra::trusted(AlgebraSpec::octonion(rat_int(1), rat_int(1), rat_int(1))),
        SuiteAlgebra::trusted(AlgebraSpec::octonion(rat_int(2), rat_int(1), rat_int(3))),
        SuiteAlgebra::trusted(AlgebraSpec::octonion(rat_int(-1), rat_int(2), rat_int(1))),
    ]
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// The configured algebras plus the seeded random ones. Dimensions and
/// tables depend only on the seed, so every suite in a run sees the same
/// list.
pub fn effective_algebras(config: &SuiteConfig) -> Result<Vec<SuiteAlgebra>, Error> {
    let mut out = config.algebras.clone();
    if config.random_count > 0 {
        let seed = config.seed_required()?;
        let mut rng = rng_for(seed, 1);
        for idx in 0..config.random_count {
            let dim = rng.gen_range(1usize..=8);
            let label = format!("random-{idx}(dim={dim},seed={seed})");
            out.push(SuiteAlgebra::trusted(AlgebraSpec::random(
                label, dim, &mut rng,
            )));
        }
    }
    if out.is_empty() {
        return Err(Error::Precondition("no algebras configured".into()));
    }
    Ok(out)
}

/// Runs one suite against a validated configuration.
pub fn run_suite(kind: SuiteKind, config: &SuiteConfig) -> Result<Report, Error> {
    config.validate()?;
    match kind {
        SuiteKind::ScalarIdentities => Ok(scalar_identities(config)),
        SuiteKind::AlgebraAxioms => algebra_axioms(config),
        SuiteKind::FibElements => fib_elements_suite(config),
        SuiteKind::Cassini => cassini_suite(config),
        SuiteKind::CrossAxioms => cross_axioms_suite(config),
        SuiteKind::FibVectors => Ok(fib_vectors_suite(config)),
    }
}

/// Runs every suite in canonical order.
pub fn run_all(config: &SuiteConfig) -> Result<Vec<Report>, Error> {
    SuiteKind::ALL
        .into_iter()
        .map(|kind| run_suite(kind, config))
        .collect()
}

/// Fibonacci-number identities: the recurrence and negation rules, the
/// partial-sum closed form, D'Ocagne, Johnson, the index-shift identity,
/// and classical Cassini.
fn scalar_identities(config: &SuiteConfig) -> Report {
    let mut rb = ReportBuilder::new(SuiteKind::ScalarIdentities.name());
    let k = config.k_max.max(1);
    let reach = (3 * k + 10).max(105).max(i64::from(config.p_max) + 2);
    let cache = FibCache::covering(-reach, reach);

    for n in -100..=100i64 {
        let lhs = cache.get(n);
        let rhs = cache.get(n - 1) + cache.get(n - 2);
        rb.record(lhs == rhs, || {
            Failure::new("fib-recurrence", [("n", n.to_string())], &lhs, &rhs)
        });
    }
    for m in 0..=100i64 {
        let lhs = cache.get(-m);
        let rhs = if (m + 1) % 2 == 0 {
            cache.get(m)
        } else {
            -cache.get(m)
        };
        rb.record(lhs == rhs, || {
            Failure::new("fib-negation", [("m", m.to_string())], &lhs, &rhs)
        });
    }
    let mut sum = Int::zero();
    for p in 0..=i64::from(config.p_max) {
        if p >= 1 {
            sum += cache.get(p);
        }
        let rhs = cache.get(p + 2) - Int::one();
        rb.record(sum == rhs, || {
            Failure::new("fib-sum", [("p", p.to_string())], &sum, &rhs)
        });
    }
    for m in -k..=k {
        for n in -k..=k {
            let chk = cache.docagne(m, n);
            rb.record(chk.holds(), || {
                Failure::new(
                    "docagne",
                    [("m", m.to_string()), ("n", n.to_string())],
                    &chk.lhs,
                    &chk.rhs,
                )
            });
        }
    }
    let jb = k.min(20);
    for a in -jb..=jb {
        for b in -jb..=jb {
            for c in -jb..=jb {
                let d = a + b - c;
                if d.abs() > jb {
                    continue;
                }
                for r in -10..=10i64 {
                    let chk = cache.johnson(a, b, c, d, r).expect("a + b = c + d");
                    rb.record(chk.holds(), || {
                        Failure::new(
                            "johnson",
                            [
                                ("a", a.to_string()),
                                ("b", b.to_string()),
                                ("c", c.to_string()),
                                ("d", d.to_string()),
                                ("r", r.to_string()),
                            ],
                            &chk.lhs,
                            &chk.rhs,
                        )
                    });
                }
            }
        }
    }
    for i in -k..=k {
        for j in -k..=k {
            for s in -k..=k {
                let chk = cache.koshy_shift(i, j, s);
                rb.record(chk.holds(), || {
                    Failure::new(
                        "koshy-shift",
                        [
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("k", s.to_string()),
                        ],
                        &chk.lhs,
                        &chk.rhs,
                    )
                });
            }
        }
    }
    for m in -2 * k..=2 * k {
        let chk = cache.classical_cassini(m);
        rb.record(chk.holds(), || {
            Failure::new("classical-cassini", [("m", m.to_string())], &chk.lhs, &chk.rhs)
        });
    }
    rb.finish()
}

/// Re-verifies an imported table against its declared construction.
fn record_table_integrity(rb: &mut ReportBuilder, alg: &SuiteAlgebra) {
    if !alg.check_table || alg.spec.params().is_none() {
        return;
    }
    let deviations = alg.spec.table_deviations();
    rb.record(deviations.is_empty(), || {
        let d = &deviations[0];
        Failure::new(
            "table-matches-params",
            [
                ("algebra", alg.spec.label().to_string()),
                ("cell", format!("c[{}][{}][{}]", d.i, d.j, d.k)),
                ("deviations", deviations.len().to_string()),
            ],
            &d.found,
            &d.expected,
        )
    });
}

/// Structural axioms of the configured algebras: the unit law,
/// quaternion associativity, the octonion non-associativity witness,
/// conjugation/trace/norm consistency, the quadratic identity, and
/// division/split classification.
fn algebra_axioms(config: &SuiteConfig) -> Result<Report, Error> {
    let seed = config.seed_required()?;
    let algebras = effective_algebras(config)?;
    let mut rng = rng_for(seed, 2);
    let mut rb = ReportBuilder::new(SuiteKind::AlgebraAxioms.name());

    for alg in &algebras {
        let spec = &alg.spec;
        let label = spec.label().to_string();
        record_table_integrity(&mut rb, alg);

        let unit: Element = Element::unit(spec);
        for _ in 0..8 {
            let x = random_element(spec, &mut rng);
            let left = unit.try_mul(&x).expect("same spec");
            let right = x.try_mul(&unit).expect("same spec");
            rb.record(left == x && right == x, || {
                Failure::new(
                    "unit-axiom",
                    [("algebra", label.clone()), ("element", x.to_string())],
                    &left,
                    &x,
                )
            });
        }

        match spec.params() {
            Some(AlgebraParams::Quaternion { .. }) => {
                let violations = spec.basis_associativity_violations();
                let d = spec.dim();
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            rb.record(!violations.contains(&(i, j, k)), || {
                                let e = |n| -> Element { Element::basis(spec, n) };
                                let left = e(i).try_mul(&e(j)).unwrap().try_mul(&e(k)).unwrap();
                                let right = e(i).try_mul(&e(j).try_mul(&e(k)).unwrap()).unwrap();
                                Failure::new(
                                    "associativity",
                                    [
                                        ("algebra", label.clone()),
                                        ("triple", format!("({i},{j},{k})")),
                                    ],
                                    &left,
                                    &right,
                                )
                            });
                        }
                    }
                }
            }
            Some(AlgebraParams::Octonion { .. }) => {
                let e = |n| -> Element { Element::basis(spec, n) };
                let left = e(1).try_mul(&e(2)).unwrap().try_mul(&e(4)).unwrap();
                let right = e(1).try_mul(&e(2).try_mul(&e(4)).unwrap()).unwrap();
                rb.record(left != right, || {
                    Failure::new(
                        "non-associativity-witness",
                        [("algebra", label.clone())],
                        &left,
                        &right,
                    )
                });
            }
            None => {}
        }

        if spec.params().is_some() {
            for _ in 0..500 {
                let x = random_element(spec, &mut rng);
                let (t, n) = x.trace_norm().expect("named construction");
                let conj = x.conjugate().expect("named constructions have signatures");

                let product = x.try_mul(&conj).expect("same spec");
                let expected = unit.scale(&n);
                rb.record(product == expected, || {
                    Failure::new(
                        "norm-product",
                        [("algebra", label.clone()), ("element", x.to_string())],
                        &product,
                        &expected,
                    )
                });

                let sum = x.clone() + conj;
                let expected = unit.scale(&t);
                rb.record(sum == expected, || {
                    Failure::new(
                        "trace-sum",
                        [("algebra", label.clone()), ("element", x.to_string())],
                        &sum,
                        &expected,
                    )
                });

                let residual = x.quadratic_residual().expect("named construction");
                rb.record(residual.is_zero(), || {
                    Failure::new(
                        "quadratic-identity",
                        [("algebra", label.clone()), ("element", x.to_string())],
                        &residual,
                        Element::<Rational>::zero(spec),
                    )
                });
            }

            match classify_division(spec).expect("named construction") {
                Classification::Division => {
                    let mut counterexample = None;
                    for _ in 0..200 {
                        let x = random_element(spec, &mut rng);
                        if x.is_zero() {
                            continue;
                        }
                        let (_, n) = x.trace_norm().expect("named construction");
                        if n.is_zero() {
                            counterexample = Some(x);
                            break;
                        }
                    }
                    rb.record(counterexample.is_none(), || {
                        Failure::new(
                            "division-classification",
                            [
                                ("algebra", label.clone()),
                                ("verdict", "division".to_string()),
                                (
                                    "element",
                                    counterexample.as_ref().unwrap().to_string(),
                                ),
                            ],
                            "0",
                            "nonzero norm",
                        )
                    });
                }
                Classification::Split(witness) => {
                    let (w, pass, expected) = match &witness {
                        SplitWitness::Isotropic(w) => {
                            let (_, n) = w.trace_norm().expect("named construction");
                            (w, !w.is_zero() && n.is_zero(), "zero norm")
                        }
                        SplitWitness::NegativeNorm(w) => {
                            let (_, n) = w.trace_norm().expect("named construction");
                            (w, n.is_negative(), "negative norm")
                        }
                    };
                    let (_, n) = w.trace_norm().expect("named construction");
                    rb.record(pass, || {
                        Failure::new(
                            "division-classification",
                            [
                                ("algebra", label.clone()),
                                ("verdict", "split".to_string()),
                                ("witness", w.to_string()),
                            ],
                            &n,
                            expected,
                        )
                    });
                }
            }
        }
    }
    Ok(rb.finish())
}

/// Fibonacci-element identities over every configured algebra: the
/// recurrence, both corrected sum forms, Binet agreement, the generating
/// function at degree 100, and the negative-index identity.
fn fib_elements_suite(config: &SuiteConfig) -> Result<Report, Error> {
    let algebras = effective_algebras(config)?;
    let mut rb = ReportBuilder::new(SuiteKind::FibElements.name());
    for alg in &algebras {
        let spec = &alg.spec;
        let label = spec.label().to_string();
        record_table_integrity(&mut rb, alg);

        for m in config.m_min..=config.m_max {
            let chk = recurrence_check(spec, m);
            rb.record(chk.holds(), || {
                Failure::new(
                    "recurrence",
                    [("algebra", label.clone()), ("m", m.to_string())],
                    &chk.lhs,
                    &chk.rhs,
                )
            });
            let chk = binet_check(spec, m);
            rb.record(chk.holds(), || {
                Failure::new(
                    "binet",
                    [("algebra", label.clone()), ("m", m.to_string())],
                    &chk.formula,
                    &chk.definition,
                )
            });
        }

        let f0 = fib_element(spec, 0);
        let f1 = fib_element(spec, 1);
        let f2 = fib_element(spec, 2);
        let mut sum = Element::zero(spec);
        for p in 0..=i64::from(config.p_max) {
            if p >= 1 {
                sum = sum + fib_element(spec, p);
            }
            let fp2 = fib_element(spec, p + 2);
            let rhs = fp2.clone() - f2.clone();
            rb.record(sum == rhs, || {
                Failure::new(
                    "sum-from-one",
                    [("algebra", label.clone()), ("p", p.to_string())],
                    &sum,
                    &rhs,
                )
            });
            let lhs = sum.clone() + f0.clone();
            let rhs = fp2 - f1.clone();
            rb.record(lhs == rhs, || {
                Failure::new(
                    "sum-from-zero",
                    [("algebra", label.clone()), ("p", p.to_string())],
                    &lhs,
                    &rhs,
                )
            });
        }

        for (degree, chk) in generating_function_checks(spec, 100).iter().enumerate() {
            rb.record(chk.holds(), || {
                Failure::new(
                    "generating-function",
                    [("algebra", label.clone()), ("degree", degree.to_string())],
                    &chk.lhs,
                    &chk.rhs,
                )
            });
        }

        for m in 0..=100u32 {
            let chk = negative_index_check(spec, m);
            rb.record(chk.holds(), || {
                Failure::new(
                    "negative-index",
                    [("algebra", label.clone()), ("m", m.to_string())],
                    &chk.lhs,
                    &chk.rhs,
                )
            });
        }
    }
    Ok(rb.finish())
}

/// Cassini's identity in both multiplication orders over every
/// configured algebra and the whole index range.
fn cassini_suite(config: &SuiteConfig) -> Result<Report, Error> {
    let algebras = effective_algebras(config)?;
    let mut rb = ReportBuilder::new(SuiteKind::Cassini.name());
    for alg in &algebras {
        let spec = &alg.spec;
        let label = spec.label().to_string();
        record_table_integrity(&mut rb, alg);
        for m in config.m_min..=config.m_max {
            let chk = cassini_check(spec, m);
            rb.record(chk.standard.holds(), || {
                Failure::new(
                    "cassini",
                    [("algebra", label.clone()), ("m", m.to_string())],
                    &chk.standard.lhs,
                    &chk.standard.rhs,
                )
            });
            rb.record(chk.reversed.holds(), || {
                Failure::new(
                    "cassini-reversed",
                    [("algebra", label.clone()), ("m", m.to_string())],
                    &chk.reversed.lhs,
                    &chk.reversed.rhs,
                )
            });
        }
    }
    Ok(rb.finish())
}

fn random_vector(dim: usize, rng: &mut impl Rng) -> ImaginaryVector {
    let coords = (0..dim)
        .map(|_| {
            let n = rng.gen_range(-9i64..=9);
            let d = rng.gen_range(1i64..=4);
            Rational::new(Int::from(n), Int::from(d))
        })
        .collect();
    ImaginaryVector::new(coords).expect("admissible dimension")
}

/// The defining cross-product axioms on seeded random pairs in both
/// admissible dimensions, with the two 3D backends compared on every
/// pair. A backend disagreement aborts the suite: it indicates an
/// internal inconsistency, not a property of the inputs.
fn cross_axioms_suite(config: &SuiteConfig) -> Result<Report, Error> {
    let seed = config.seed_required()?;
    let mut rng = rng_for(seed, 3);
    let mut rb = ReportBuilder::new(SuiteKind::CrossAxioms.name());
    for dim in [3usize, 7] {
        for idx in 0..1000u32 {
            let x = random_vector(dim, &mut rng);
            let y = random_vector(dim, &mut rng);
            if dim == 3 {
                match cross3(&x, &y) {
                    Ok(_) => rb.record(true, || unreachable!()),
                    Err(Error::CrossBackendMismatch {
                        determinant,
                        quaternion,
                    }) => {
                        rb.record(false, || {
                            Failure::new(
                                "cross3-backends",
                                [
                                    ("pair", idx.to_string()),
                                    ("x", x.to_string()),
                                    ("y", y.to_string()),
                                ],
                                determinant,
                                quaternion,
                            )
                        });
                        return Ok(rb.finish());
                    }
                    Err(other) => return Err(other),
                }
            }
            let axioms = cross_axioms(&x, &y).expect("dimensions match");
            for (argument, value) in [
                ("x", &axioms.orthogonality_x),
                ("y", &axioms.orthogonality_y),
            ] {
                rb.record(value.is_zero(), || {
                    Failure::new(
                        "cross-orthogonality",
                        [
                            ("dim", dim.to_string()),
                            ("pair", idx.to_string()),
                            ("argument", argument.to_string()),
                            ("x", x.to_string()),
                            ("y", y.to_string()),
                        ],
                        value,
                        "0",
                    )
                });
            }
            rb.record(axioms.gram_lhs == axioms.gram_rhs, || {
                Failure::new(
                    "cross-gram-identity",
                    [
                        ("dim", dim.to_string()),
                        ("pair", idx.to_string()),
                        ("x", x.to_string()),
                        ("y", y.to_string()),
                    ],
                    &axioms.gram_lhs,
                    &axioms.gram_rhs,
                )
            });
        }
    }
    Ok(rb.finish())
}

/// Closed-form cross products and vanishing mixed products of imaginary
/// Fibonacci quaternions and octonions, with the dependence certificates
/// in dimension 3.
fn fib_vectors_suite(config: &SuiteConfig) -> Report {
    let mut rb = ReportBuilder::new(SuiteKind::FibVectors.name());
    let k_max = config.k_max;
    for dim in [3usize, 7] {
        let vectors: Vec<ImaginaryVector> = (0..=k_max)
            .map(|n| imaginary_fib_vector(dim, n).expect("admissible dimension"))
            .collect();
        for k in 0..=k_max {
            for m in 0..=k_max {
                let computed = match cross(&vectors[k as usize], &vectors[m as usize]) {
                    Ok(c) => c,
                    Err(Error::CrossBackendMismatch {
                        determinant,
                        quaternion,
                    }) => {
                        rb.record(false, || {
                            Failure::new(
                                "cross3-backends",
                                [("k", k.to_string()), ("m", m.to_string())],
                                determinant,
                                quaternion,
                            )
                        });
                        return rb.finish();
                    }
                    Err(_) => unreachable!("dimensions are admissible"),
                };
                let closed = fib_cross_closed_form(dim, k, m).expect("admissible dimension");
                rb.record(computed == closed, || {
                    Failure::new(
                        "fib-cross-closed-form",
                        [
                            ("dim", dim.to_string()),
                            ("k", k.to_string()),
                            ("m", m.to_string()),
                        ],
                        &computed,
                        &closed,
                    )
                });
                for n in 0..=k_max {
                    let mixed = dot(&computed, &vectors[n as usize]).expect("same dimension");
                    rb.record(mixed.is_zero(), || {
                        Failure::new(
                            "mixed-zero",
                            [
                                ("dim", dim.to_string()),
                                ("k", k.to_string()),
                                ("m", m.to_string()),
                                ("n", n.to_string()),
                            ],
                            &mixed,
                            "0",
                        )
                    });
                }
            }
        }
        if dim == 3 {
            let count = vectors.len();
            let mut dots = vec![vec![Rational::zero(); count]; count];
            for (i, a) in vectors.iter().enumerate() {
                for (j, b) in vectors.iter().enumerate() {
                    dots[i][j] = dot(a, b).expect("same dimension");
                }
            }
            for k in 0..count {
                for m in 0..count {
                    for n in 0..count {
                        let gram = rational_determinant(&[
                            vec![dots[k][k].clone(), dots[k][m].clone(), dots[k][n].clone()],
                            vec![dots[m][k].clone(), dots[m][m].clone(), dots[m][n].clone()],
                            vec![dots[n][k].clone(), dots[n][m].clone(), dots[n][n].clone()],
                        ]);
                        rb.record(gram.is_zero(), || {
                            Failure::new(
                                "gram-zero",
                                [
                                    ("k", k.to_string()),
                                    ("m", m.to_string()),
                                    ("n", n.to_string()),
                                ],
                                &gram,
                                "0",
                            )
                        });
                        let coord = rational_determinant(&[
                            vectors[k].coords().to_vec(),
                            vectors[m].coords().to_vec(),
                            vectors[n].coords().to_vec(),
                        ]);
                        rb.record(coord.is_zero(), || {
                            Failure::new(
                                "coordinate-det-zero",
                                [
                                    ("k", k.to_string()),
                                    ("m", m.to_string()),
                                    ("n", n.to_string()),
                                ],
                                &coord,
                                "0",
                            )
                        });
                    }
                }
            }
        }
    }
    for n in -k_max..=k_max {
        let collapse = dot_collapse_check(n).expect("dimension 3 is admissible");
        rb.record(collapse.is_zero(), || {
            Failure::new("dot-collapse", [("n", n.to_string())], &collapse, "0")
        });
    }
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config() -> SuiteConfig {
        SuiteConfig {
            m_min: -4,
            m_max: 4,
            p_max: 12,
            k_max: 4,
            algebras: vec![
                SuiteAlgebra::trusted(AlgebraSpec::quaternion(rat_int(1), rat_int(1))),
                SuiteAlgebra::trusted(AlgebraSpec::octonion(rat_int(1), rat_int(1), rat_int(1))),
            ],
            random_count: 2,
            seed: Some(42),
        }
    }

    #[test]
    fn every_suite_passes_on_a_small_config() {
        for kind in SuiteKind::ALL {
            let report = run_suite(kind, &quick_config()).unwrap();
            assert!(
                report.passed(),
                "{} failed: {:?}",
                kind.name(),
                report.failures.first()
            );
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn reports_are_deterministic_for_a_fixed_seed() {
        let a = run_suite(SuiteKind::CrossAxioms, &quick_config()).unwrap();
        let b = run_suite(SuiteKind::CrossAxioms, &quick_config()).unwrap();
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.failures, b.failures);
        let a = effective_algebras(&quick_config()).unwrap();
        let b = effective_algebras(&quick_config()).unwrap();
        let dims_a: Vec<usize> = a.iter().map(|s| s.spec.dim()).collect();
        let dims_b: Vec<usize> = b.iter().map(|s| s.spec.dim()).collect();
        assert_eq!(dims_a, dims_b);
    }

    #[test]
    fn config_validation_rejects_bad_ranges_and_missing_seeds() {
        let mut config = quick_config();
        config.m_min = 3;
        config.m_max = -3;
        assert!(config.validate().is_err());
        let mut config = quick_config();
        config.seed = None;
        assert!(config.validate().is_err());
        config.random_count = 0;
        assert!(config.validate().is_ok());
        // ...but suites that draw samples still demand a seed.
        assert!(run_suite(SuiteKind::CrossAxioms, &config).is_err());
        assert!(run_suite(SuiteKind::Cassini, &config).is_ok());
    }

    #[test]
    fn corrupted_import_fails_the_cassini_suite() {
        let genuine = AlgebraSpec::quaternion(rat_int(1), rat_int(1));
        let mut text = genuine.to_text();
        // flip one structure constant without touching the unit rows
        assert!(text.contains("params 1 1"));
        let table_line_start = text.find("table").unwrap();
        let corrupted_body = text.split_off(table_line_start);
        let corrupted_body = corrupted_body.replacen("-1", "-2", 1);
        text.push_str(&corrupted_body);
        let imported = AlgebraSpec::from_text("tampered", &text).unwrap();
        let config = SuiteConfig {
            algebras: vec![SuiteAlgebra::imported(imported)],
            random_count: 0,
            seed: None,
            m_min: -2,
            m_max: 2,
            ..SuiteConfig::default()
        };
        let report = run_suite(SuiteKind::Cassini, &config).unwrap();
        assert!(!report.passed());
        assert_eq!(report.failures[0].op, "table-matches-params");
        // an authentic import sails through
        let fine = AlgebraSpec::from_text("genuine", &genuine.to_text()).unwrap();
        let config = SuiteConfig {
            algebras: vec![SuiteAlgebra::imported(fine)],
            random_count: 0,
            seed: None,
            m_min: -2,
            m_max: 2,
            ..SuiteConfig::default()
        };
        assert!(run_suite(SuiteKind::Cassini, &config).unwrap().passed());
    }
}
