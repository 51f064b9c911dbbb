//! Exact integer and rational arithmetic substrate.
//!
//! Counts and coefficients live in [`BigInt`] / [`BigRational`] (always in
//! lowest terms with a positive denominator; `num-rational` maintains that
//! on construction). On top of the raw types this module provides the
//! generalized binomial coefficient, rising factorials, and a
//! fraction-free exact determinant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= t;
    }
    acc
}

/// Generalized binomial coefficient with arbitrary integer arguments.
///
/// Zero for `b < 0`; otherwise the falling product
/// `a(a-1)...(a-b+1) / b!`, which is an integer for every integer `a`,
/// negative upper arguments included: `binomial(-2, 3) = -4`.
pub fn binomial(a: &BigInt, b: &BigInt) -> BigInt {
    if b.is_negative() {
        return BigInt::zero();
    }
    if !a.is_negative() && a < b {
        return BigInt::zero();
    }
    let b = b
        .to_u64()
        .expect("binomial: lower argument out of supported range");
    let mut acc = BigInt::one();
    for t in 0..b {
        // acc = C(a, t) here, so the division is exact at every step.
        acc *= a - BigInt::from(t);
        let quot = &acc / (t + 1);
        debug_assert!((&acc % (t + 1)).is_zero());
        acc = quot;
    }
    acc
}

/// [`binomial`] on machine integers.
pub fn binomial_i(a: i64, b: i64) -> BigInt {
    binomial(&BigInt::from(a), &BigInt::from(b))
}

/// Rising factorial with `n` factors: `a(a+1)...(a+n-1)`, empty product 1.
pub fn rising_factorial(a: &BigInt, n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= a + BigInt::from(i);
    }
    acc
}

/// [`rising_factorial`] on a machine integer base.
pub fn rising_factorial_i(a: i64, n: u64) -> BigInt {
    rising_factorial(&BigInt::from(a), n)
}

/// Dense matrix of exact rationals.
///
/// Indexing is 1-based throughout, matching the usual subscript
/// conventions for the binomial matrices this crate builds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    /// Build from row vectors. Panics unless the rows are nonuniform-free
    /// (all the same length).
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ExactMatrix::from_rows: ragged rows"
        );
        ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build an `r x c` matrix from a function of the 1-based index pair.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    /// Convenience constructor from machine integers (tests, fixtures).
    pub fn from_int_rows(rows: Vec<Vec<i64>>) -> Self {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "ExactMatrix::at({i}, {j}) out of bounds for {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    /// Exact matrix product. Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "ExactMatrix::mul: dimension mismatch");
        ExactMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigRational::zero();
            for t in 1..=self.cols {
                acc += self.at(i, t) * rhs.at(t, j);
            }
            acc
        })
    }

    /// Exact matrix-vector product.
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "ExactMatrix::mul_vec: dimension mismatch");
        (1..=self.rows)
            .map(|i| {
                let mut acc = BigRational::zero();
                for (t, x) in v.iter().enumerate() {
                    acc += self.at(i, t + 1) * x;
                }
                acc
            })
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Denominators are cleared row by row first, so the elimination runs
    /// entirely over integers; the 0x0 determinant is 1. Panics if the
    /// matrix is not square.
    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "ExactMatrix::det: matrix is not square");
        let n = self.rows;
        if n == 0 {
            return BigRational::one();
        }

        // Clear denominators: scale row i by the lcm of its denominators.
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 1..=n {
            let mut l = BigInt::one();
            for j in 1..=n {
                l = l.lcm(self.at(i, j).denom());
            }
            a.push((1..=n).map(|j| (self.at(i, j) * &l).to_integer()).collect());
            scale *= l;
        }

        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigRational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    debug_assert!((&num % &prev).is_zero());
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        BigRational::new(&a[n - 1][n - 1] * BigInt::from(sign), scale)
    }
}
