//! The operator formula: the number of monotone triangles with
//! prescribed bottom row `(k_1, ..., k_n)`, as an explicit polynomial.
//!
//! The polynomial is obtained by applying every pair operator
//! `(id + E_{k_p} Delta_{k_q})`, `p < q`, to the normalized Vandermonde
//! product `prod_{i<j} (k_j - k_i)/(j - i)`. The pair operators commute,
//! so the application order (fixed here to lexicographic `(p, q)`) does
//! not matter; a property test checks that instead of assuming it.
//!
//! Evaluated at a strictly increasing row the polynomial counts monotone
//! triangles; on all other integer rows it is the canonical polynomial
//! extension of that counting function.

use num_bigint::BigInt;

use crate::poly::{vandermonde_poly, MultiPoly, VarIndex};
use crate::Error;

/// Default cap on the variable count; the term count grows like `n^n`,
/// so anything past this is no longer a desk-scale computation.
pub const DEFAULT_MAX_VARS: usize = 7;

/// The counting polynomial for a fixed number of rows.
///
/// Per-variable degree is at most `n - 1`, and evaluation at any
/// strictly increasing integer row agrees with brute-force enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaPolynomial {
    n: usize,
    poly: MultiPoly,
}

impl AlphaPolynomial {
    /// Build the polynomial for `n` rows, refusing `n` past
    /// [`DEFAULT_MAX_VARS`].
    pub fn new(n: usize) -> Result<Self, Error> {
        Self::with_limit(n, DEFAULT_MAX_VARS)
    }

    /// Build with an explicit cap for callers that know what they are
    /// paying for.
    pub fn with_limit(n: usize, limit: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one row".into()));
        }
        if n > limit {
            return Err(Error::SizeLimit {
                what: "operator formula size n",
                value: n,
                limit,
            });
        }
        let mut poly = vandermonde_poly(n);
        for p in 1..=n {
            for q in p + 1..=n {
                poly = poly.apply_pair_operator(VarIndex::new(p), VarIndex::new(q));
            }
        }
        Ok(AlphaPolynomial { n, poly })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// Exact value at an integer row. Panics if the value is not an
    /// integer, which would mean the expansion itself is corrupt.
    pub fn eval(&self, row: &[i64]) -> BigInt {
        assert_eq!(row.len(), self.n, "row length does not match variable count");
        let value = self.poly.eval_int(row);
        assert!(
            value.is_integer(),
            "counting polynomial produced a non-integer {value} at {row:?}"
        );
        value.to_integer()
    }

    /// Specialize the first `n - 1` variables to `(1, ..., n-1)`, leaving
    /// a univariate polynomial in the last bottom-row entry.
    pub fn last_var_poly(&self) -> MultiPoly {
        let images: Vec<MultiPoly> = (1..=self.n)
            .map(|v| {
                if v < self.n {
                    MultiPoly::from_integer(1, v as i64)
                } else {
                    MultiPoly::var(1, VarIndex::new(1))
                }
            })
            .collect();
        self.poly.substitute(&images)
    }
}

/// One-shot evaluation of the counting polynomial on a row of any
/// integers (the combinatorial meaning applies to increasing rows; other
/// rows give the polynomial extension).
pub fn alpha_eval(row: &[i64]) -> Result<BigInt, Error> {
    Ok(AlphaPolynomial::new(row.len())?.eval(row))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{alpha_brute, BottomRow};
    use crate::poly::apply_elementary_symmetric_shift;
    use crate::exact::binomial_i;
    use num_rational::BigRational;

    #[test]
    fn smallest_cases() {
        assert_eq!(AlphaPolynomial::new(1).unwrap().poly(), &MultiPoly::one(1));
        assert_eq!(
            AlphaPolynomial::new(2).unwrap().poly(),
            &MultiPoly::parse_with_arity("k2 - k1 + 1", 2).unwrap()
        );
    }

    /// The full three-variable expansion, frozen coefficient by
    /// coefficient: 1/2 (-3k1 + k1^2 + 2k1k2 - k1^2k2 - 2k2^2 + k1k2^2
    /// + 3k3 - 4k1k3 + k1^2k3 + 2k2k3 - k2^2k3 + k3^2 - k1k3^2 + k2k3^2).
    fn expansion_n3() -> MultiPoly {
        let half = |n: i64| BigRational::new(n.into(), 2.into());
        MultiPoly::from_terms(
            3,
            [
                (vec![1, 0, 0], half(-3)),
                (vec![2, 0, 0], half(1)),
                (vec![1, 1, 0], half(2)),
                (vec![2, 1, 0], half(-1)),
                (vec![0, 2, 0], half(-2)),
                (vec![1, 2, 0], half(1)),
                (vec![0, 0, 1], half(3)),
                (vec![1, 0, 1], half(-4)),
                (vec![2, 0, 1], half(1)),
                (vec![0, 1, 1], half(2)),
                (vec![0, 2, 1], half(-1)),
                (vec![0, 0, 2], half(1)),
                (vec![1, 0, 2], half(-1)),
                (vec![0, 1, 2], half(1)),
            ],
        )
    }

    #[test]
    fn three_variable_expansion_is_exact() {
        let alpha = AlphaPolynomial::new(3).unwrap();
        assert_eq!(alpha.poly(), &expansion_n3());
        assert_eq!(alpha.poly().num_terms(), 14);
    }

    #[test]
    fn eval_matches_brute_force_and_extends() {
        let alpha = AlphaPolynomial::new(3).unwrap();
        assert_eq!(alpha.eval(&[1, 2, 3]), BigInt::from(7));
        assert_eq!(alpha.eval(&[1, 2, 4]), BigInt::from(14));
        // translation invariance of the count
        assert_eq!(alpha.eval(&[2, 3, 4]), BigInt::from(7));
        // polynomial extension at a non-increasing row
        let alpha2 = AlphaPolynomial::new(2).unwrap();
        assert_eq!(alpha2.eval(&[2, 2]), BigInt::from(1));
        assert_eq!(alpha_eval(&[1, 2, 3]).unwrap(), BigInt::from(7));
    }

    #[test]
    fn deleted_entry_rows_give_refined_counts() {
        // alpha over n variables at (1, ..., i-1, i+1, ..., n+1) counts
        // the (n+1)-size matrices with the first-row 1 in column i
        use crate::enumerate::refined_counts_brute;
        for n in 1..=3usize {
            let alpha = AlphaPolynomial::new(n).unwrap();
            let refined = refined_counts_brute(n + 1);
            for i in 1..=n as i64 + 1 {
                let row: Vec<i64> = (1..=n as i64 + 1).filter(|&v| v != i).collect();
                assert_eq!(alpha.eval(&row), refined[(i - 1) as usize], "n={n} i={i}");
            }
        }
    }

    #[test]
    fn oracle_equivalence_small_grid() {
        for n in 1..=4usize {
            let alpha = AlphaPolynomial::new(n).unwrap();
            let lo = -2i64;
            let hi = n as i64 + 3;
            let mut row: Vec<i64> = Vec::new();
            grid_rows(lo, hi, n, &mut row, &mut |r: &[i64]| {
                let expected = alpha_brute(&BottomRow::new(r.to_vec()).unwrap());
                assert_eq!(alpha.eval(r), expected, "mismatch at {r:?}");
            });
        }
    }

    fn grid_rows(lo: i64, hi: i64, n: usize, row: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if row.len() == n {
            f(row);
            return;
        }
        let start = row.last().map_or(lo, |&v| v + 1);
        for v in start..=hi {
            row.push(v);
            grid_rows(lo, hi, n, row, f);
            row.pop();
        }
    }

    #[test]
    fn per_variable_degree_bound() {
        for n in 1..=5usize {
            let alpha = AlphaPolynomial::new(n).unwrap();
            for v in 1..=n {
                assert!(alpha.poly().degree_in(VarIndex::new(v)) <= (n - 1) as u32);
            }
        }
    }

    #[test]
    fn last_var_poly_small() {
        assert_eq!(
            AlphaPolynomial::new(1).unwrap().last_var_poly(),
            MultiPoly::one(1)
        );
        // alpha(2; 1, k) = k - 1 + 1 = k
        assert_eq!(
            AlphaPolynomial::new(2).unwrap().last_var_poly(),
            MultiPoly::parse("k1").unwrap()
        );
        let a3 = AlphaPolynomial::new(3).unwrap().last_var_poly();
        assert_eq!(a3.eval_int(&[4]), BigRational::from_integer(14.into()));
        assert_eq!(a3.eval_int(&[3]), BigRational::from_integer(7.into()));
    }

    #[test]
    fn parity_of_last_var_poly() {
        // alpha(n; 1, ..., n-1, k) is even in k for odd n, odd for even n
        for n in 1..=5usize {
            let p = AlphaPolynomial::new(n).unwrap().last_var_poly();
            let reflected = p.substitute(&[-&MultiPoly::var(1, VarIndex::new(1))]);
            let signed = if n % 2 == 1 { reflected.clone() } else { -&reflected };
            assert_eq!(p, signed, "parity fails at n={n}");
        }
    }

    #[test]
    fn symmetric_shift_scales_values_by_binomial() {
        // applying e_r of the shifts in all variables multiplies values
        // by C(n, r)
        for n in 1..=4usize {
            let alpha = AlphaPolynomial::new(n).unwrap();
            let vars: Vec<VarIndex> = (1..=n).map(VarIndex::new).collect();
            let points: Vec<Vec<i64>> = vec![
                (1..=n as i64).collect(),
                (0..n as i64).map(|v| 2 * v - 3).collect(),
            ];
            for r in 0..=n {
                let shifted = apply_elementary_symmetric_shift(alpha.poly(), &vars, r);
                for point in &points {
                    let lhs = shifted.eval_int(point);
                    let rhs = alpha.poly().eval_int(point)
                        * BigRational::from_integer(binomial_i(n as i64, r as i64));
                    assert_eq!(lhs, rhs, "n={n} r={r} point={point:?}");
                }
            }
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        assert!(matches!(
            AlphaPolynomial::new(DEFAULT_MAX_VARS + 1),
            Err(Error::SizeLimit { .. })
        ));
        assert!(AlphaPolynomial::with_limit(3, 3).is_ok());
        assert!(AlphaPolynomial::with_limit(4, 3).is_err());
        assert!(AlphaPolynomial::new(0).is_err());
    }
}
