//! Exact verification suites for every identity the crate implements.
//!
//! Each check computes both sides of one identity, renders them in
//! canonical text form, and records a [`CheckResult`]; a check passes iff
//! the two witness strings are identical. Checks never abort a run: a
//! broken identity shows up as a failed result with both sides attached.
//!
//! Suite sizes live in a single [`VerifyConfig`]; the hard limits below
//! bound what a run may ask for, the config defaults are what
//! [`Verifier::run_all`] does out of the box.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::{count_side_matrices_brute, refined_counts_brute, AlphaCounter, BottomRow};
use crate::exact::{binomial_i, ExactMatrix};
use crate::formulas::{
    asm_total, conjugation_matrices, dpp_determinant, eigen_matrix, refined_binomial_sum_poly,
    side_formula, RefinedTable,
};
use crate::operator::AlphaPolynomial;
use crate::poly::{apply_elementary_symmetric_shift, elementary_symmetric_poly, MultiPoly, VarIndex};
use crate::Error;

/// Hard cap for suites that expand the counting polynomial.
pub const POLY_N_LIMIT: usize = 7;
/// Hard cap for suites that enumerate matrices or triangles.
pub const BRUTE_N_LIMIT: usize = 7;
/// Hard cap for the binomial-matrix suites.
pub const MATRIX_N_LIMIT: usize = 64;
/// Hard cap for the scalar binomial identity and refined-table suites.
pub const IDENTITY_N_LIMIT: usize = 200;
/// Hard cap for the length of the quotient polynomial sequence.
pub const Q_LEN_LIMIT: usize = 200;
/// Hard caps for the rectangular brute-force suite.
pub const SIDE_N_LIMIT: usize = 4;
pub const SIDE_K_LIMIT: usize = 7;

/// All suite names, in report order.
pub const SUITES: &[&str] = &[
    "alpha-consistency",
    "binomial-identity",
    "conjugation",
    "cyclic-shift",
    "eigenvector",
    "ideal-decomposition",
    "induction-constant",
    "last-arg-formula",
    "q-sequence",
    "refined-counts",
    "reflection-translation",
    "side-count",
    "sym-action",
    "sym-specialization",
    "total-count",
];

/// Size caps for one verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Cap for polynomial-identity suites (operator expansions).
    pub poly_n_max: usize,
    /// Cap for brute-force enumeration suites.
    pub brute_n_max: usize,
    /// Cap for the eigenvector/conjugation matrix suites.
    pub matrix_n_max: usize,
    /// Cap for the scalar binomial identity and refined-table sums.
    pub identity_n_max: usize,
    /// Number of entries of the quotient polynomial sequence.
    pub q_len: usize,
    /// Caps for the rectangular generalization.
    pub side_n_max: usize,
    pub side_k_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            poly_n_max: 5,
            brute_n_max: 6,
            matrix_n_max: 12,
            identity_n_max: 30,
            q_len: 30,
            side_n_max: 4,
            side_k_max: 7,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let bounds = [
            ("poly_n_max", self.poly_n_max, POLY_N_LIMIT),
            ("brute_n_max", self.brute_n_max, BRUTE_N_LIMIT),
            ("matrix_n_max", self.matrix_n_max, MATRIX_N_LIMIT),
            ("identity_n_max", self.identity_n_max, IDENTITY_N_LIMIT),
            ("q_len", self.q_len, Q_LEN_LIMIT),
            ("side_n_max", self.side_n_max, SIDE_N_LIMIT),
            ("side_k_max", self.side_k_max, SIDE_K_LIMIT),
        ];
        for (what, value, limit) in bounds {
            if value == 0 {
                return Err(Error::InvalidArgument(format!("{what} must be at least 1")));
            }
            if value > limit {
                return Err(Error::SizeLimit { what: "verification cap", value, limit });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check: canonical text of both sides plus bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn finish(name: &str, params: &[(&str, i64)], lhs: String, rhs: String, start: Instant) -> Self {
        CheckResult {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: if lhs == rhs { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Normalize ordering (suite name, then parameters) and tally.
    pub fn from_checks(mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.params.cmp(&b.params)));
        let passed = checks.iter().filter(|c| c.passed()).count();
        let summary = Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        };
        VerificationReport { checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

fn list(items: impl IntoIterator<Item = String>) -> String {
    let v: Vec<String> = items.into_iter().collect();
    format!("[{}]", v.join(", "))
}

fn render_matrix(m: &ExactMatrix) -> String {
    list((1..=m.rows()).map(|i| list((1..=m.cols()).map(|j| m.at(i, j).to_string()))))
}

fn render_rationals(v: &[BigRational]) -> String {
    list(v.iter().map(BigRational::to_string))
}

/// Visit all strictly increasing rows of length `n` with entries in
/// `lo..=hi`, in lexicographic order.
fn for_each_increasing_row(lo: i64, hi: i64, n: usize, f: &mut impl FnMut(&[i64])) {
    fn go(lo: i64, hi: i64, n: usize, buf: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if buf.len() == n {
            f(buf);
            return;
        }
        let start = buf.last().map_or(lo, |&v| v + 1);
        for v in start..=hi {
            buf.push(v);
            go(lo, hi, n, buf, f);
            buf.pop();
        }
    }
    go(lo, hi, n, &mut Vec::with_capacity(n), f);
}

/// The quotient polynomial sequence `q_0 = 0`,
/// `q_{j+1}(X) = (X+1)^{2j+1} - X^j - q_j(X) - q_j(X)/X`.
///
/// The division by `X` only stays polynomial because `q_j(0) = 0`; that
/// is asserted after every step, and `build` reports the first violation
/// instead of producing a Laurent tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeq {
    entries: Vec<MultiPoly>,
}

/// Exact division by the variable; `None` if a constant term remains.
fn div_by_var(p: &MultiPoly) -> Option<MultiPoly> {
    if p.terms().any(|(e, _)| e[0] == 0) {
        return None;
    }
    Some(MultiPoly::from_terms(
        1,
        p.terms().map(|(e, c)| (vec![e[0] - 1], c.clone())),
    ))
}

impl LaurentSeq {
    /// Build `q_0, ..., q_{j_max}`.
    pub fn build(j_max: usize) -> Result<Self, Error> {
        let x = MultiPoly::var(1, VarIndex::new(1));
        let xp1 = &x + &MultiPoly::one(1);
        let mut entries = vec![MultiPoly::zero(1)];
        for j in 0..j_max {
            let q = &entries[j];
            let quotient = div_by_var(q).ok_or_else(|| {
                Error::InvalidArgument(format!("sequence entry {j} has a nonzero value at 0"))
            })?;
            let next = &(&xp1.pow(2 * j as u32 + 1) - &x.pow(j as u32)) - &(q + &quotient);
            entries.push(next);
        }
        Ok(LaurentSeq { entries })
    }

    /// Number of entries (`j_max + 1`).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `q_j`.
    pub fn entry(&self, j: usize) -> &MultiPoly {
        &self.entries[j]
    }

    /// `p_j = q_j(X) (X+1)^{n-j} / X`, a polynomial for `j <= n`.
    pub fn p_entry(&self, j: usize, n: usize) -> MultiPoly {
        assert!(j <= n, "p_entry needs j <= n");
        let xp1 = &MultiPoly::var(1, VarIndex::new(1)) + &MultiPoly::one(1);
        let scaled = &self.entries[j] * &xp1.pow((n - j) as u32);
        div_by_var(&scaled).expect("entries vanish at 0 by construction")
    }
}

/// Coefficient of `Y^j` in the series `X Y / ((1 - XY)(1 - (X+1)^2 Y))`:
/// both geometric factors expanded and convolved.
fn series_coefficient(j: usize) -> MultiPoly {
    if j == 0 {
        return MultiPoly::zero(1);
    }
    let x = MultiPoly::var(1, VarIndex::new(1));
    let sq = (&x + &MultiPoly::one(1)).pow(2);
    let mut acc = MultiPoly::zero(1);
    for b in 0..j {
        acc = &acc + &(&x.pow((j - 1 - b) as u32) * &sq.pow(b as u32));
    }
    &x * &acc
}

/// Runs the identity checks, caching the expensive operator expansions
/// and the brute-force counter across checks.
#[derive(Default)]
pub struct Verifier {
    alphas: HashMap<usize, AlphaPolynomial>,
    counter: AlphaCounter,
}

fn alpha_entry(alphas: &mut HashMap<usize, AlphaPolynomial>, n: usize) -> &AlphaPolynomial {
    alphas
        .entry(n)
        .or_insert_with(|| AlphaPolynomial::with_limit(n, POLY_N_LIMIT).expect("n within hard limit"))
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Operator formula vs. the delete-row recursion on every strictly
    /// increasing row with entries in `lo..=hi`.
    pub fn alpha_consistency(&mut self, n: usize, lo: i64, hi: i64) -> CheckResult {
        assert!(n >= 1 && n <= POLY_N_LIMIT.min(BRUTE_N_LIMIT));
        let start = Instant::now();
        let alpha = alpha_entry(&mut self.alphas, n);
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        let counter = &mut self.counter;
        for_each_increasing_row(lo, hi, n, &mut |row| {
            lhs.push(alpha.eval(row).to_string());
            let bottom = BottomRow::new(row.to_vec()).expect("grid rows are increasing");
            rhs.push(counter.count(&bottom).to_string());
        });
        CheckResult::finish(
            "alpha-consistency",
            &[("n", n as i64), ("lo", lo), ("hi", hi)],
            list(lhs),
            list(rhs),
            start,
        )
    }

    /// The elementary symmetric operator in all `n` shifts acts on the
    /// counting polynomial as the scalar `C(n, r)`.
    pub fn sym_action(&mut self, n: usize, r: usize) -> CheckResult {
        assert!(n >= 1 && n <= POLY_N_LIMIT && r <= n);
        let start = Instant::now();
        let alpha = alpha_entry(&mut self.alphas, n);
        let vars: Vec<VarIndex> = (1..=n).map(VarIndex::new).collect();
        let lhs = apply_elementary_symmetric_shift(alpha.poly(), &vars, r);
        let rhs = alpha
            .poly()
            .scale(&BigRational::from_integer(binomial_i(n as i64, r as i64)));
        CheckResult::finish(
            "sym-action",
            &[("n", n as i64), ("r", r as i64)],
            lhs.to_string(),
            rhs.to_string(),
            start,
        )
    }

    /// Elementary symmetric shifts in the first `n - 1` variables,
    /// specialized at `(1, ..., n-1, n+j)`, against the refined-count
    /// expansion, for all `0 <= j <= p <= n-1` (the `j = 0` row is the
    /// plain specialization formula).
    pub fn sym_specializations(&mut self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= POLY_N_LIMIT.min(BRUTE_N_LIMIT));
        let start = Instant::now();
        let counts = refined_counts_brute(n);
        let alpha = alpha_entry(&mut self.alphas, n);
        let vars: Vec<VarIndex> = (1..n).map(VarIndex::new).collect();
        let n_i = n as i64;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for p in 0..n as i64 {
            for j in 0..=p {
                let shifted =
                    apply_elementary_symmetric_shift(alpha.poly(), &vars, (p - j) as usize);
                let mut point: Vec<i64> = (1..n_i).collect();
                point.push(n_i + j);
                let value = shifted.eval_int(&point);
                assert!(value.is_integer());
                lhs.push(format!("p={p} j={j}: {}", value.to_integer()));

                let mut sum = BigInt::zero();
                for (idx, a) in counts.iter().enumerate() {
                    let i = idx as i64 + 1;
                    let mut bracket = binomial_i(n_i - i, p);
                    for l in 0..j {
                        let sign = if l % 2 == 1 { 1 } else { -1 };
                        bracket += binomial_i(n_i, p - l) * binomial_i(i + l - 1, l) * sign;
                    }
                    sum += a * bracket;
                }
                if j % 2 == 1 {
                    sum = -sum;
                }
                rhs.push(format!("p={p} j={j}: {sum}"));
            }
        }
        CheckResult::finish("sym-specialization", &[("n", n_i)], list(lhs), list(rhs), start)
    }

    /// The counting polynomial with first arguments pinned to
    /// `(1, ..., n-1)` equals the refined binomial sum, as univariate
    /// polynomials in the last argument.
    pub fn last_arg_formula(&mut self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= POLY_N_LIMIT);
        let start = Instant::now();
        let lhs = alpha_entry(&mut self.alphas, n).last_var_poly();
        let rhs = refined_binomial_sum_poly(n);
        CheckResult::finish(
            "last-arg-formula",
            &[("n", n as i64)],
            lhs.to_string(),
            rhs.to_string(),
            start,
        )
    }

    /// Rotating the bottom row by one position while lowering the moved
    /// entry by `n` flips the sign by `(-1)^{n-1}`, as polynomials.
    pub fn cyclic_shift(&mut self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= POLY_N_LIMIT);
        let start = Instant::now();
        let alpha = alpha_entry(&mut self.alphas, n);
        let images: Vec<MultiPoly> = (1..=n)
            .map(|v| {
                if v < n {
                    MultiPoly::var(n, VarIndex::new(v + 1))
                } else {
                    &MultiPoly::var(n, VarIndex::new(1)) - &MultiPoly::from_integer(n, n as i64)
                }
            })
            .collect();
        let mut rhs = alpha.poly().substitute(&images);
        if n % 2 == 0 {
            rhs = -&rhs;
        }
        CheckResult::finish(
            "cyclic-shift",
            &[("n", n as i64)],
            alpha.poly().to_string(),
            rhs.to_string(),
            start,
        )
    }

    /// Negating and reversing the bottom row, and translating every
    /// entry by `c`, both fix the counting polynomial.
    pub fn reflection_translation(&mut self, n: usize, c: i64) -> CheckResult {
        assert!(n >= 1 && n <= POLY_N_LIMIT);
        let start = Instant::now();
        let alpha = alpha_entry(&mut self.alphas, n);
        let reflect: Vec<MultiPoly> = (1..=n)
            .map(|v| -&MultiPoly::var(n, VarIndex::new(n + 1 - v)))
            .collect();
        let translate: Vec<MultiPoly> = (1..=n)
            .map(|v| &MultiPoly::var(n, VarIndex::new(v)) + &MultiPoly::from_integer(n, c))
            .collect();
        let base = alpha.poly().to_string();
        let lhs = list([base.clone(), base]);
        let rhs = list([
            alpha.poly().substitute(&reflect).to_string(),
            alpha.poly().substitute(&translate).to_string(),
        ]);
        CheckResult::finish(
            "reflection-translation",
            &[("n", n as i64), ("c", c)],
            lhs,
            rhs,
            start,
        )
    }

    /// The refined count vector is fixed by the binomial matrix.
    pub fn eigenvector(&self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= MATRIX_N_LIMIT);
        let start = Instant::now();
        let v = RefinedTable::new(n).as_rationals();
        let image = eigen_matrix(n).mul_vec(&v);
        CheckResult::finish(
            "eigenvector",
            &[("n", n as i64)],
            render_rationals(&image),
            render_rationals(&v),
            start,
        )
    }

    /// Conjugating the shifted matrix yields the companion matrix plus
    /// the identity, and its determinant equals both the plane partition
    /// determinant and the total count one size down.
    pub fn conjugation(&self, n: usize) -> CheckResult {
        assert!(n >= 2 && n <= MATRIX_N_LIMIT);
        let start = Instant::now();
        let m = conjugation_matrices(n);
        let conjugated = m.r_inv.mul(&m.b).mul(&m.r);
        let with_identity = ExactMatrix::from_fn(n - 1, n - 1, |i, j| {
            let delta = if i == j { BigRational::one() } else { BigRational::zero() };
            m.b_star.at(i, j) + delta
        });
        let det_b = m.b.det();
        assert!(det_b.is_integer());
        let dpp = dpp_determinant(n);
        let total = asm_total(n - 1);
        let lhs = list([
            render_matrix(&conjugated),
            det_b.to_integer().to_string(),
            dpp.to_string(),
        ]);
        let rhs = list([
            render_matrix(&with_identity),
            dpp.to_string(),
            total.to_string(),
        ]);
        CheckResult::finish("conjugation", &[("n", n as i64)], lhs, rhs, start)
    }

    /// The alternating scalar binomial identity behind the fixed-vector
    /// computation, for every row index.
    pub fn binomial_identity(&self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= IDENTITY_N_LIMIT);
        let start = Instant::now();
        let n_i = n as i64;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for i in 1..=n_i {
            let mut sum = BigInt::zero();
            for j in 1..=n_i {
                let sign = if j % 2 == 1 { 1 } else { -1 };
                sum += binomial_i(2 * n_i - i - 1, n_i - j - i + 1)
                    * binomial_i(n_i + j - 2, n_i - 1)
                    * binomial_i(2 * n_i - j - 1, n_i - 1)
                    * sign;
            }
            lhs.push(format!("i={i}: {sum}"));
            let prod = binomial_i(n_i + i - 2, n_i - 1) * binomial_i(2 * n_i - i - 1, n_i - 1);
            rhs.push(format!("i={i}: {prod}"));
        }
        CheckResult::finish("binomial-identity", &[("n", n_i)], list(lhs), list(rhs), start)
    }

    /// The recursion-built quotient polynomials match the coefficients of
    /// the closed generating series (which also forces each entry to be a
    /// polynomial vanishing at 0).
    pub fn q_sequence(&self, j_max: usize) -> CheckResult {
        assert!(j_max >= 1 && j_max <= Q_LEN_LIMIT);
        let start = Instant::now();
        let rhs = list((0..=j_max).map(|j| series_coefficient(j).to_string()));
        let lhs = match LaurentSeq::build(j_max) {
            Ok(seq) => list((0..=j_max).map(|j| seq.entry(j).to_string())),
            Err(e) => format!("recursion left the polynomial ring: {e}"),
        };
        CheckResult::finish("q-sequence", &[("j_max", j_max as i64)], lhs, rhs, start)
    }

    /// The explicit decomposition of the operator difference into
    /// elementary symmetric polynomials with the quotient-sequence
    /// cofactors, as an `n`-variable polynomial identity.
    pub fn ideal_decomposition(&self, n: usize) -> CheckResult {
        assert!((2..=POLY_N_LIMIT).contains(&n));
        let start = Instant::now();
        let x1 = MultiPoly::var(n, VarIndex::new(1));
        let one = MultiPoly::one(n);
        let x1p1 = &x1 + &one;

        let mut first = x1p1.pow(n as u32);
        let mut second = one.clone();
        for q in 2..=n {
            let xq = MultiPoly::var(n, VarIndex::new(q));
            first = &first * &(&one + &(&x1p1 * &xq));
            second = &second * &(&one + &(&(&xq + &one) * &x1));
        }
        let lhs = &first - &second;

        let rhs = match LaurentSeq::build(n) {
            Ok(seq) => {
                let mut acc = MultiPoly::zero(n);
                for j in 0..=n {
                    let p_j = seq.p_entry(j, n).substitute(&[x1.clone()]);
                    acc = &acc + &(&p_j * &elementary_symmetric_poly(n, j));
                }
                acc.to_string()
            }
            Err(e) => format!("recursion left the polynomial ring: {e}"),
        };
        CheckResult::finish(
            "ideal-decomposition",
            &[("n", n as i64)],
            lhs.to_string(),
            rhs,
            start,
        )
    }

    /// Rectangular matrices: brute count = product formula = counting
    /// polynomial at `(1, ..., n-1, k)`.
    pub fn side_count(&mut self, n: usize, k: usize) -> CheckResult {
        assert!((1..=SIDE_N_LIMIT).contains(&n) && (n..=SIDE_K_LIMIT).contains(&k));
        let start = Instant::now();
        let brute = count_side_matrices_brute(n, k).expect("arguments validated");
        let formula = side_formula(n, k);
        let mut row: Vec<i64> = (1..n as i64).collect();
        row.push(k as i64);
        let via_alpha = alpha_entry(&mut self.alphas, n).eval(&row);
        let lhs = list([brute.to_string(), formula.to_string()]);
        let rhs = list([formula.to_string(), via_alpha.to_string()]);
        CheckResult::finish(
            "side-count",
            &[("n", n as i64), ("k", k as i64)],
            lhs,
            rhs,
            start,
        )
    }

    /// Refined counts: product formula vs. brute force.
    pub fn refined_counts(&mut self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= BRUTE_N_LIMIT);
        let start = Instant::now();
        let brute = refined_counts_brute(n);
        let table = RefinedTable::new(n);
        CheckResult::finish(
            "refined-counts",
            &[("n", n as i64)],
            list(brute.iter().map(BigInt::to_string)),
            list(table.values().iter().map(BigInt::to_string)),
            start,
        )
    }

    /// Total count: product formula vs. brute-force matrix enumeration.
    pub fn total_count(&mut self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= BRUTE_N_LIMIT);
        let start = Instant::now();
        let brute = count_side_matrices_brute(n, n).expect("square case is always valid");
        CheckResult::finish(
            "total-count",
            &[("n", n as i64)],
            brute.to_string(),
            asm_total(n).to_string(),
            start,
        )
    }

    /// The ratio of brute-force to closed-form refined sums, which the
    /// induction argument pins to exactly 1.
    pub fn induction_constant(&mut self, n: usize) -> CheckResult {
        assert!(n >= 1 && n <= BRUTE_N_LIMIT);
        let start = Instant::now();
        let brute: BigInt = refined_counts_brute(n).into_iter().sum();
        let formula: BigInt = RefinedTable::new(n).values().iter().cloned().sum();
        let ratio = BigRational::new(brute, formula);
        CheckResult::finish(
            "induction-constant",
            &[("n", n as i64)],
            ratio.to_string(),
            "1".to_string(),
            start,
        )
    }

    /// Run every suite at the configured sizes.
    pub fn run_all(&mut self, config: &VerifyConfig) -> Result<VerificationReport, Error> {
        self.run_selected(config, None)
    }

    /// Run a subset of suites (all of them for `None`).
    pub fn run_selected(
        &mut self,
        config: &VerifyConfig,
        suites: Option<&[String]>,
    ) -> Result<VerificationReport, Error> {
        config.validate()?;
        if let Some(names) = suites {
            for name in names {
                if !SUITES.contains(&name.as_str()) {
                    return Err(Error::InvalidArgument(format!(
                        "unknown suite {name:?}; available: {}",
                        SUITES.join(", ")
                    )));
                }
            }
        }
        let want = |name: &str| suites.map_or(true, |s| s.iter().any(|x| x == name));
        let mut checks = Vec::new();

        if want("alpha-consistency") {
            for n in 1..=config.poly_n_max.min(config.brute_n_max) {
                checks.push(self.alpha_consistency(n, -2, n as i64 + 4));
            }
        }
        if want("binomial-identity") {
            for n in 1..=config.identity_n_max {
                checks.push(self.binomial_identity(n));
            }
        }
        if want("conjugation") {
            for n in 2..=config.matrix_n_max {
                checks.push(self.conjugation(n));
            }
        }
        if want("cyclic-shift") {
            for n in 1..=config.poly_n_max {
                checks.push(self.cyclic_shift(n));
            }
        }
        if want("eigenvector") {
            for n in 1..=config.matrix_n_max {
                checks.push(self.eigenvector(n));
            }
        }
        if want("ideal-decomposition") {
            for n in 2..=config.poly_n_max {
                checks.push(self.ideal_decomposition(n));
            }
        }
        if want("induction-constant") {
            for n in 1..=config.brute_n_max {
                checks.push(self.induction_constant(n));
            }
        }
        if want("last-arg-formula") {
            for n in 1..=config.poly_n_max {
                checks.push(self.last_arg_formula(n));
            }
        }
        if want("q-sequence") {
            checks.push(self.q_sequence(config.q_len));
        }
        if want("refined-counts") {
            for n in 1..=config.brute_n_max {
                checks.push(self.refined_counts(n));
            }
        }
        if want("reflection-translation") {
            for n in 1..=config.poly_n_max {
                for c in [-3, 5] {
                    checks.push(self.reflection_translation(n, c));
                }
            }
        }
        if want("side-count") {
            for n in 1..=config.side_n_max {
                for k in n..=config.side_k_max {
                    checks.push(self.side_count(n, k));
                }
            }
        }
        if want("sym-action") {
            for n in 1..=config.poly_n_max {
                for r in 0..=n {
                    checks.push(self.sym_action(n, r));
                }
            }
        }
        if want("sym-specialization") {
            for n in 1..=config.poly_n_max.min(config.brute_n_max) {
                checks.push(self.sym_specializations(n));
            }
        }
        if want("total-count") {
            for n in 1..=config.brute_n_max {
                checks.push(self.total_count(n));
            }
        }
        Ok(VerificationReport::from_checks(checks))
    }
}
