//! Integer Fibonacci kernel: fast doubling at arbitrary precision,
//! negative indices, and the classical product identities used to
//! collapse coordinate expressions.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::Int;

/// `(f_n, f_{n+1})` by fast doubling:
/// `f_{2k} = f_k (2 f_{k+1} − f_k)`, `f_{2k+1} = f_k² + f_{k+1}²`.
fn fib_pair(n: u64) -> (Int, Int) {
    if n == 0 {
        return (Int::zero(), Int::one());
    }
    let (a, b) = fib_pair(n >> 1);
    let c = &a * ((&b << 1) - &a);
    let d = &a * &a + &b * &b;
    if n & 1 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// Exact Fibonacci number at any signed index, with `f_0 = 0`, `f_1 = 1`
/// and `f_{−m} = (−1)^{m+1} f_m`.
pub fn fib(n: i64) -> Int {
    if n >= 0 {
        fib_pair(n as u64).0
    } else {
        let m = n.unsigned_abs();
        let f = fib_pair(m).0;
        if m % 2 == 0 {
            -f
        } else {
            f
        }
    }
}

/// `Σ_{i=1}^{p} f_i`, computed by summation and cross-checked against the
/// closed form `f_{p+2} − 1`.
pub fn fib_sum(p: u32) -> Int {
    let mut sum = Int::zero();
    let mut a = Int::zero();
    let mut b = Int::one();
    for _ in 0..p {
        sum += &b;
        let next = &a + &b;
        a = b;
        b = next;
    }
    debug_assert_eq!(sum, fib(i64::from(p) + 2) - 1);
    sum
}

/// `(−1)^e` applied to a value.
fn alternate(e: i64, v: Int) -> Int {
    if e.rem_euclid(2) == 0 {
        v
    } else {
        -v
    }
}

/// Both exactly evaluated sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BothSides {
    pub lhs: Int,
    pub rhs: Int,
}

impl BothSides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A consecutive run of Fibonacci values, precomputed so the identity
/// sweeps stay linear. Lookups outside the prepared range fall back to
/// fast doubling, so the cache is an optimization, never a constraint.
///
/// The table is immutable after construction and shareable across threads.
#[derive(Debug, Clone)]
pub struct FibCache {
    lo: i64,
    values: Vec<Int>,
}

impl FibCache {
    /// Precomputes `f_n` for every `n` in `[lo, hi]`.
    pub fn covering(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty cache range");
        let mut values = Vec::with_capacity((hi - lo) as usize + 1);
        let mut a = fib(lo);
        let mut b = fib(lo + 1);
        for _ in lo..=hi {
            values.push(a.clone());
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        FibCache { lo, values }
    }

    /// Symmetric cache over `[−max_abs, max_abs]`.
    pub fn up_to(max_abs: i64) -> Self {
        FibCache::covering(-max_abs, max_abs)
    }

    pub fn get(&self, n: i64) -> Int {
        match usize::try_from(n - self.lo) {
            Ok(idx) if idx < self.values.len() => self.values[idx].clone(),
            _ => fib(n),
        }
    }

    /// D'Ocagne's identity: `f_m f_{n+1} − f_n f_{m+1} = (−1)^n f_{m−n}`.
    pub fn docagne(&self, m: i64, n: i64) -> BothSides {
        let lhs = self.get(m) * self.get(n + 1) - self.get(n) * self.get(m + 1);
        let rhs = alternate(n, self.get(m - n));
        BothSides { lhs, rhs }
    }

    /// Johnson's identity for `a + b = c + d`:
    /// `f_a f_b − f_c f_d = (−1)^r (f_{a−r} f_{b−r} − f_{c−r} f_{d−r})`.
    pub fn johnson(&self, a: i64, b: i64, c: i64, d: i64, r: i64) -> Result<BothSides, Error> {
        if a + b != c + d {
            return Err(Error::Precondition(format!(
                "Johnson's identity requires a + b = c + d; got {a} + {b} ≠ {c} + {d}"
            )));
        }
        let lhs = self.get(a) * self.get(b) - self.get(c) * self.get(d);
        let rhs = alternate(
            r,
            self.get(a - r) * self.get(b - r) - self.get(c - r) * self.get(d - r),
        );
        Ok(BothSides { lhs, rhs })
    }

    /// The index-shift identity
    /// `f_i f_j − f_{i+k} f_{j−k} = (−1)^{j−k} f_{i+k−j} f_k`.
    pub fn koshy_shift(&self, i: i64, j: i64, k: i64) -> BothSides {
        let lhs = self.get(i) * self.get(j) - self.get(i + k) * self.get(j - k);
        let rhs = alternate(j - k, self.get(i + k - j) * self.get(k));
        BothSides { lhs, rhs }
    }

    /// Classical Cassini: `f_{m+1} f_{m−1} − f_m² = (−1)^m`.
    pub fn classical_cassini(&self, m: i64) -> BothSides {
        let fm = self.get(m);
        let lhs = self.get(m + 1) * self.get(m - 1) - &fm * &fm;
        let rhs = alternate(m, Int::one());
        BothSides { lhs, rhs }
    }
}
