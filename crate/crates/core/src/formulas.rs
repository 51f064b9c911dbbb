//! Closed-form product formulas and the binomial matrices attached to
//! them: total and refined counts, the rectangular generalization, the
//! eigenvector matrix, the conjugation matrices, and the plane partition
//! determinant.
//!
//! Every function evaluates factorial products exactly and reduces a
//! single rational at the end, asserting integrality there; matrix
//! entries are indexed 1-based to match the usual subscripts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{binomial_i, factorial, rising_factorial_i, ExactMatrix};
use crate::poly::{MultiPoly, VarIndex};

fn expect_integer(q: BigRational, what: &str) -> BigInt {
    assert!(q.is_integer(), "{what} produced a non-integer {q}");
    q.to_integer()
}

/// `prod_{j=1}^{n} (3j-2)!/(n+j-1)!`, the total count of `n x n`
/// alternating sign matrices.
pub fn asm_total(n: usize) -> BigInt {
    assert!(n >= 1);
    let n = n as u64;
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for j in 1..=n {
        numer *= factorial(3 * j - 2);
        denom *= factorial(n + j - 1);
    }
    expect_integer(BigRational::new(numer, denom), "total count")
}

/// Refined count: the number of `n x n` alternating sign matrices whose
/// first-row 1 sits in column `i`, via
/// `(i)_{n-1} (1+n-i)_{n-1} / (n-1)! * prod_{j<n} (3j-2)!/(n+j-1)!`
/// with the standard `m`-factor rising factorial.
pub fn refined_formula(n: usize, i: usize) -> BigInt {
    assert!(n >= 1, "refined count needs n >= 1");
    assert!((1..=n).contains(&i), "column index {i} out of range 1..={n}");
    let (n_i, i_i) = (n as i64, i as i64);
    let m = (n - 1) as u64;
    let mut numer = rising_factorial_i(i_i, m) * rising_factorial_i(1 + n_i - i_i, m);
    let mut denom = factorial(m);
    for j in 1..=m {
        numer *= factorial(3 * j - 2);
        denom *= factorial(n as u64 + j - 1);
    }
    expect_integer(BigRational::new(numer, denom), "refined count")
}

/// The vector of refined counts for one matrix size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedTable {
    n: usize,
    values: Vec<BigInt>,
}

impl RefinedTable {
    pub fn new(n: usize) -> Self {
        RefinedTable {
            n,
            values: (1..=n).map(|i| refined_formula(n, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.values[i - 1]
    }

    pub fn as_rationals(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect()
    }
}

/// `sum_i refined(n, i) * C(i + k - n - 1, i - 1)`: the closed form for
/// the count with bottom row `(1, ..., n-1, k)`.
pub fn refined_binomial_sum(n: usize, k: i64) -> BigInt {
    assert!(n >= 1);
    let n_i = n as i64;
    (1..=n_i)
        .map(|i| refined_formula(n, i as usize) * binomial_i(i + k - n_i - 1, i - 1))
        .sum()
}

/// Same sum as a univariate polynomial in `k` (variable `k1`), suitable
/// for exact coefficient comparison.
pub fn refined_binomial_sum_poly(n: usize) -> MultiPoly {
    assert!(n >= 1);
    let n_i = n as i64;
    let k = MultiPoly::var(1, VarIndex::new(1));
    let mut acc = MultiPoly::zero(1);
    for i in 1..=n_i {
        // C(i + k - n - 1, i - 1) as a polynomial in k
        let mut binom = MultiPoly::one(1);
        for t in 0..i - 1 {
            binom = &binom * &(&k + &MultiPoly::from_integer(1, i - n_i - 1 - t));
        }
        let coeff = BigRational::new(refined_formula(n, i as usize), factorial((i - 1) as u64));
        acc = &acc + &binom.scale(&coeff);
    }
    acc
}

/// Count of the `n x k` generalized matrices, written as the product
/// formula: prefactor `prod_{j<n} (3j-2)!/(n+j-1)!` times the sum over
/// `i` of `(i)_{n-1}(1+n-i)_{n-1}/(n-1)! * C(i+k-n-1, i-1)`.
pub fn side_formula(n: usize, k: usize) -> BigInt {
    assert!(n >= 1 && k >= n, "side_formula needs k >= n >= 1");
    let (n_i, k_i) = (n as i64, k as i64);
    let m = (n - 1) as u64;
    let mut pre_num = BigInt::one();
    let mut pre_den = factorial(m);
    for j in 1..=m {
        pre_num *= factorial(3 * j - 2);
        pre_den *= factorial(n as u64 + j - 1);
    }
    let sum: BigInt = (1..=n_i)
        .map(|i| {
            rising_factorial_i(i, m)
                * rising_factorial_i(1 + n_i - i, m)
                * binomial_i(i + k_i - n_i - 1, i - 1)
        })
        .sum();
    expect_integer(BigRational::new(pre_num * sum, pre_den), "side count")
}

/// The `n x n` matrix with entry `(i, j) = (-1)^{j+1} C(2n-i-1, n-i-j+1)`
/// that fixes the refined count vector.
pub fn eigen_matrix(n: usize) -> ExactMatrix {
    assert!(n >= 1);
    let n_i = n as i64;
    ExactMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let sign = if j % 2 == 1 { 1 } else { -1 };
        BigRational::from_integer(binomial_i(2 * n_i - i - 1, n_i - i - j + 1) * BigInt::from(sign))
    })
}

/// Determinant `det_{1<=i,j<=n-2} (C(i+j, j-1) + delta_{i,j})`, the count
/// of descending plane partitions with no part greater than `n - 1`;
/// size-0 determinant is 1.
pub fn dpp_determinant(n: usize) -> BigInt {
    assert!(n >= 2);
    let size = n - 2;
    let m = ExactMatrix::from_fn(size, size, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let delta = BigInt::from(i64::from(i == j));
        BigRational::from_integer(binomial_i(i + j, j - 1) + delta)
    });
    expect_integer(m.det(), "plane partition determinant")
}

/// The `(n-1) x (n-1)` matrices of the rank argument: `b` is the
/// eigenvector matrix shifted past its first row and column with the
/// identity added, `r`/`r_inv` conjugate it into `b_star + I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationMatrices {
    pub r: ExactMatrix,
    pub r_inv: ExactMatrix,
    pub b: ExactMatrix,
    pub b_star: ExactMatrix,
}

pub fn conjugation_matrices(n: usize) -> ConjugationMatrices {
    assert!(n >= 2);
    let size = n - 1;
    let n_i = n as i64;
    let r = ExactMatrix::from_fn(size, size, |i, j| {
        let (i, j) = (i as i64, j as i64);
        BigRational::from_integer(binomial_i(n_i + j - i - 1, j - i))
    });
    let r_inv = ExactMatrix::from_fn(size, size, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
        BigRational::from_integer(binomial_i(n_i, j - i) * BigInt::from(sign))
    });
    let b = ExactMatrix::from_fn(size, size, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let sign = if j % 2 == 1 { 1 } else { -1 };
        let delta = BigInt::from(i64::from(i == j));
        BigRational::from_integer(
            binomial_i(2 * n_i - i - 2, n_i - i - j - 1) * BigInt::from(sign) + delta,
        )
    });
    let b_star = ExactMatrix::from_fn(size, size, |i, j| {
        if i == size {
            BigRational::zero()
        } else {
            let (i, j) = (i as i64, j as i64);
            BigRational::from_integer(binomial_i(i + j, j - 1))
        }
    });
    ConjugationMatrices { r, r_inv, b, b_star }
}
