//! Multivariate polynomials over exact rationals, plus the shift and
//! difference operator calculus applied to them.
//!
//! A polynomial belongs to a ring with a fixed variable count (`arity`);
//! variables are positional and render as `k1, k2, ...`. Terms are stored
//! sparsely as a map from exponent vector to nonzero coefficient, and the
//! canonical graded-lex ordering is imposed only when text is produced.
//! Binary operations require equal arities and panic otherwise; parse
//! errors on untrusted text are returned as [`Error`] values.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::binomial_i;
use crate::Error;

/// Largest variable index accepted when parsing without an explicit arity.
const MAX_PARSE_INDEX: usize = 256;

/// 1-based index of a ring variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarIndex(usize);

impl VarIndex {
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "variable indices are 1-based");
        VarIndex(index)
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: HashMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: HashMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    pub fn from_integer(arity: usize, c: i64) -> Self {
        Self::constant(arity, BigRational::from_integer(c.into()))
    }

    /// The monomial `k_v`.
    pub fn var(arity: usize, v: VarIndex) -> Self {
        assert!(v.get() <= arity, "variable k{} outside arity {}", v.get(), arity);
        let mut exps = vec![0; arity];
        exps[v.get() - 1] = 1;
        let mut p = Self::zero(arity);
        p.add_term(exps, BigRational::one());
        p
    }

    /// Build from raw terms, merging duplicates and pruning zeros.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(arity);
        for (exps, coeff) in terms {
            p.add_term(exps, coeff);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigRational) {
        assert_eq!(exps.len(), self.arity, "exponent vector length != arity");
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        assert_eq!(exps.len(), self.arity);
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree in one variable; 0 for the zero polynomial.
    pub fn degree_in(&self, v: VarIndex) -> u32 {
        assert!(v.get() <= self.arity);
        self.terms.keys().map(|e| e[v.get() - 1]).max().unwrap_or(0)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, q)| (e.clone(), q * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, point: &[i64]) -> BigRational {
        assert_eq!(point.len(), self.arity, "evaluation point length != arity");
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(self.arity);
        for (v, &x) in point.iter().enumerate() {
            let d = self.terms.keys().map(|e| e[v]).max().unwrap_or(0);
            let mut col = Vec::with_capacity(d as usize + 1);
            col.push(BigInt::one());
            for _ in 0..d {
                col.push(col.last().unwrap() * BigInt::from(x));
            }
            powers.push(col);
        }
        let mut acc = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut m = BigInt::one();
            for (v, &e) in exps.iter().enumerate() {
                m *= &powers[v][e as usize];
            }
            acc += coeff * BigRational::from_integer(m);
        }
        acc
    }

    /// Replace `k_v` by `k_v + c`: the shift operator `E_v^c`.
    pub fn shift(&self, v: VarIndex, c: i64) -> MultiPoly {
        assert!(v.get() >= 1 && v.get() <= self.arity, "shift: invalid variable");
        if c == 0 {
            return self.clone();
        }
        let vi = v.get() - 1;
        let maxd = self.degree_in(v) as i64;
        let mut cpow = Vec::with_capacity(maxd as usize + 1);
        cpow.push(BigInt::one());
        for _ in 0..maxd {
            cpow.push(cpow.last().unwrap() * BigInt::from(c));
        }
        let mut out = Self::zero(self.arity);
        for (exps, coeff) in &self.terms {
            let e = exps[vi];
            // (k + c)^e = sum_t C(e, t) c^(e-t) k^t
            for t in 0..=e {
                let w = binomial_i(e as i64, t as i64) * &cpow[(e - t) as usize];
                let mut ne = exps.clone();
                ne[vi] = t;
                out.add_term(ne, coeff * BigRational::from_integer(w));
            }
        }
        out
    }

    /// The difference operator in `k_v`: `shift(p, v, 1) - p`.
    pub fn delta(&self, v: VarIndex) -> MultiPoly {
        &self.shift(v, 1) - self
    }

    /// One factor of the operator product: `(id + E_a Delta_b) p`.
    pub fn apply_pair_operator(&self, a: VarIndex, b: VarIndex) -> MultiPoly {
        assert_ne!(a, b, "pair operator requires two distinct variables");
        self + &self.delta(b).shift(a, 1)
    }

    /// Substitute `images[v]` for variable `v + 1`; every image must live
    /// in one common target ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.arity, "substitute: image count != arity");
        if self.arity == 0 {
            return self.clone();
        }
        let target = images[0].arity;
        assert!(
            images.iter().all(|q| q.arity == target),
            "substitute: images have mixed arities"
        );
        // Power tables, one per variable, up to the degree actually used.
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(self.arity);
        for (v, img) in images.iter().enumerate() {
            let d = self.terms.keys().map(|e| e[v]).max().unwrap_or(0);
            let mut col = vec![MultiPoly::one(target)];
            for e in 1..=d {
                col.push(&col[(e - 1) as usize] * img);
            }
            powers.push(col);
        }
        let mut acc = MultiPoly::zero(target);
        for (exps, coeff) in &self.terms {
            let mut term = MultiPoly::constant(target, coeff.clone());
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[v][e as usize];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Parse the canonical text form, inferring the arity from the largest
    /// variable index that occurs (a constant gets arity 0).
    pub fn parse(s: &str) -> Result<MultiPoly, Error> {
        parse_impl(s, None)
    }

    /// Parse the canonical text form into a ring of the given arity.
    pub fn parse_with_arity(s: &str, arity: usize) -> Result<MultiPoly, Error> {
        parse_impl(s, Some(arity))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "add: arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "sub: arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "mul: arity mismatch");
        let mut out = MultiPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

/// The normalized Vandermonde product `prod_{i<j} (k_j - k_i)/(j - i)`.
pub fn vandermonde_poly(n: usize) -> MultiPoly {
    assert!(n >= 1, "vandermonde_poly: n must be at least 1");
    let mut p = MultiPoly::one(n);
    let mut denom = BigInt::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let diff = &MultiPoly::var(n, VarIndex::new(j)) - &MultiPoly::var(n, VarIndex::new(i));
            p = &p * &diff;
            denom *= BigInt::from((j - i) as i64);
        }
    }
    p.scale(&BigRational::new(BigInt::one(), denom))
}

/// The elementary symmetric polynomial `e_r` in all ring variables.
pub fn elementary_symmetric_poly(arity: usize, r: usize) -> MultiPoly {
    if r > arity {
        return MultiPoly::zero(arity);
    }
    let mut acc = MultiPoly::zero(arity);
    for_each_combination(arity, r, |subset| {
        let mut m = MultiPoly::one(arity);
        for &v in subset {
            m = &m * &MultiPoly::var(arity, VarIndex::new(v + 1));
        }
        acc = &acc + &m;
    });
    acc
}

/// Apply the elementary symmetric operator `e_r(E_{v_1}, ..., E_{v_m})`:
/// the sum over all `r`-subsets of `vars` of `p` shifted by +1 in each
/// chosen variable. `e_0` is the identity.
pub fn apply_elementary_symmetric_shift(p: &MultiPoly, vars: &[VarIndex], r: usize) -> MultiPoly {
    assert!(r <= vars.len(), "symmetric shift: order exceeds variable count");
    for (i, a) in vars.iter().enumerate() {
        assert!(a.get() <= p.arity(), "symmetric shift: invalid variable");
        assert!(!vars[i + 1..].contains(a), "symmetric shift: duplicate variable");
    }
    let mut acc = MultiPoly::zero(p.arity());
    for_each_combination(vars.len(), r, |subset| {
        let mut q = p.clone();
        for &i in subset {
            q = q.shift(vars[i], 1);
        }
        acc = &acc + &q;
    });
    acc
}

/// Visit every `r`-element subset of `0..n` in lexicographic order.
fn for_each_combination(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, left: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if left == 0 {
            f(buf);
            return;
        }
        for v in start..=n - left {
            buf.push(v);
            go(v + 1, n, left - 1, buf, f);
            buf.pop();
        }
    }
    if r > n {
        return;
    }
    go(0, n, r, &mut Vec::with_capacity(r), &mut f);
}

// ---- canonical text form ----

impl fmt::Display for MultiPoly {
    /// Graded-lex order, highest degree first: e.g.
    /// `1/2*k1^2*k3 - 2*k2^2 + 3*k3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        for (pos, (exps, coeff)) in terms.into_iter().enumerate() {
            let neg = coeff.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("k{}", v + 1)
                    } else {
                        format!("k{}^{}", v + 1, e)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn read_digits(&mut self) -> Result<&'a str, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!("expected digits at byte {}", self.pos)));
        }
        // Slicing on digit boundaries is always valid UTF-8.
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }
}

fn parse_impl(s: &str, arity: Option<usize>) -> Result<MultiPoly, Error> {
    let mut sc = Scanner::new(s);
    // (exponent map, coefficient) per textual term
    let mut parsed: Vec<(BTreeMap<usize, u32>, BigRational)> = Vec::new();
    let mut max_index = 0usize;

    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(Error::Parse("empty input".into()));
    }
    loop {
        // optional sign (required as separator after the first term)
        let mut negative = false;
        match sc.peek() {
            Some(b'+') => {
                sc.bump();
            }
            Some(b'-') => {
                sc.bump();
                negative = true;
            }
            _ if parsed.is_empty() => {}
            _ => return Err(Error::Parse(format!("expected '+' or '-' at byte {}", sc.pos))),
        }
        sc.skip_ws();

        let mut coeff = if negative {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        let mut exps: BTreeMap<usize, u32> = BTreeMap::new();
        loop {
            sc.skip_ws();
            match sc.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let numer: BigInt = sc.read_digits()?.parse().unwrap();
                    sc.skip_ws();
                    let denom = if sc.peek() == Some(b'/') {
                        sc.bump();
                        sc.skip_ws();
                        let d: BigInt = sc.read_digits()?.parse().unwrap();
                        if d.is_zero() {
                            return Err(Error::Parse("zero denominator".into()));
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coeff *= BigRational::new(numer, denom);
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    sc.bump();
                    let index: usize = sc
                        .read_digits()?
                        .parse()
                        .map_err(|_| Error::Parse("variable index too large".into()))?;
                    if index == 0 {
                        return Err(Error::Parse("variable indices are 1-based".into()));
                    }
                    let limit = arity.unwrap_or(MAX_PARSE_INDEX);
                    if index > limit {
                        return Err(Error::Parse(format!(
                            "variable index {index} exceeds limit {limit}"
                        )));
                    }
                    let exp: u32 = if sc.peek() == Some(b'^') {
                        sc.bump();
                        sc.read_digits()?
                            .parse()
                            .map_err(|_| Error::Parse("exponent too large".into()))?
                    } else {
                        1
                    };
                    max_index = max_index.max(index);
                    let slot = exps.entry(index).or_insert(0);
                    *slot = slot
                        .checked_add(exp)
                        .ok_or_else(|| Error::Parse("exponent too large".into()))?;
                }
                _ => return Err(Error::Parse(format!("expected a factor at byte {}", sc.pos))),
            }
            sc.skip_ws();
            if sc.peek() == Some(b'*') {
                sc.bump();
            } else {
                break;
            }
        }
        parsed.push((exps, coeff));

        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(b'+') | Some(b'-') => {}
            Some(_) => {
                return Err(Error::Parse(format!("unexpected input at byte {}", sc.pos)))
            }
        }
    }

    let arity = arity.unwrap_or(max_index);
    let mut poly = MultiPoly::zero(arity);
    for (map, coeff) in parsed {
        let mut exps = vec![0u32; arity];
        for (index, e) in map {
            exps[index - 1] = e;
        }
        poly.add_term(exps, coeff);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(i: usize) -> VarIndex {
        VarIndex::new(i)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn add_examples() {
        let k1 = MultiPoly::var(1, v(1));
        assert!((&k1 + &(-&k1)).is_zero());
        let a = MultiPoly::parse_with_arity("k1 + 1", 2).unwrap();
        let b = MultiPoly::parse_with_arity("k2", 2).unwrap();
        assert_eq!(&a + &b, MultiPoly::parse_with_arity("k1 + k2 + 1", 2).unwrap());
        let half = MultiPoly::from_terms(2, [(vec![0, 2], rat(1, 2))]);
        assert_eq!(&half + &half, MultiPoly::parse_with_arity("k2^2", 2).unwrap());
    }

    #[test]
    fn mul_examples() {
        let k1 = MultiPoly::parse_with_arity("k1", 2).unwrap();
        let diff = MultiPoly::parse_with_arity("k2 - k1", 2).unwrap();
        assert_eq!(&k1 * &diff, MultiPoly::parse_with_arity("k1*k2 - k1^2", 2).unwrap());
        let q = p("1/3*k1^2 - k1 + 5");
        assert_eq!(&q * &MultiPoly::one(1), q);
        let x1 = p("k1 + 1");
        assert_eq!(&x1.pow(2) * &x1, p("k1^3 + 3*k1^2 + 3*k1 + 1"));
    }

    #[test]
    fn eval_examples() {
        let q = MultiPoly::parse_with_arity("k2 - k1 + 1", 2).unwrap();
        assert_eq!(q.eval_int(&[1, 2]), rat(2, 1));
        assert_eq!(q.eval_int(&[2, 2]), rat(1, 1));
        assert_eq!(MultiPoly::from_integer(3, 7).eval_int(&[-4, 0, 9]), rat(7, 1));
    }

    #[test]
    fn shift_examples() {
        let sq = p("k1^2");
        assert_eq!(sq.shift(v(1), 1), p("k1^2 + 2*k1 + 1"));
        let q = p("2/3*k1^3 - k1");
        assert_eq!(q.shift(v(1), 0), q);
        assert_eq!(p("k1").shift(v(1), -3), p("k1 - 3"));
    }

    #[test]
    fn delta_examples() {
        let q = MultiPoly::parse_with_arity("k2 - k1", 2).unwrap();
        assert_eq!(q.delta(v(2)), MultiPoly::parse_with_arity("1", 2).unwrap());
        assert!(MultiPoly::from_integer(2, 9).delta(v(1)).is_zero());
        assert_eq!(
            MultiPoly::parse_with_arity("k2^2", 2).unwrap().delta(v(2)),
            MultiPoly::parse_with_arity("2*k2 + 1", 2).unwrap()
        );
    }

    #[test]
    fn pair_operator_examples() {
        let q = MultiPoly::parse_with_arity("k2 - k1", 2).unwrap();
        assert_eq!(
            q.apply_pair_operator(v(1), v(2)),
            MultiPoly::parse_with_arity("k2 - k1 + 1", 2).unwrap()
        );
        let c = MultiPoly::from_integer(2, 11);
        assert_eq!(c.apply_pair_operator(v(1), v(2)), c);
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn pair_operator_rejects_equal_vars() {
        MultiPoly::zero(2).apply_pair_operator(v(1), v(1));
    }

    #[test]
    #[should_panic(expected = "arity mismatch")]
    fn add_rejects_arity_mismatch() {
        let _ = &MultiPoly::zero(2) + &MultiPoly::zero(3);
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(vandermonde_poly(1), MultiPoly::one(1));
        assert_eq!(vandermonde_poly(2), MultiPoly::parse_with_arity("k2 - k1", 2).unwrap());
        // 1/2 (k2-k1)(k3-k1)(k3-k2), built independently factor by factor
        let k = |i| MultiPoly::var(3, v(i));
        let expect = (&(&(&k(2) - &k(1)) * &(&k(3) - &k(1))) * &(&k(3) - &k(2))).scale(&rat(1, 2));
        assert_eq!(vandermonde_poly(3), expect);
    }

    #[test]
    fn vandermonde_superdiagonal_point_is_one() {
        for n in 1..=8 {
            let point: Vec<i64> = (1..=n as i64).collect();
            assert_eq!(vandermonde_poly(n).eval_int(&point), rat(1, 1));
        }
    }

    #[test]
    fn elementary_symmetric_basics() {
        assert_eq!(elementary_symmetric_poly(3, 0), MultiPoly::one(3));
        assert_eq!(
            elementary_symmetric_poly(3, 2),
            MultiPoly::parse_with_arity("k1*k2 + k1*k3 + k2*k3", 3).unwrap()
        );
        assert!(elementary_symmetric_poly(2, 3).is_zero());
    }

    #[test]
    fn symmetric_shift_examples() {
        let q = MultiPoly::parse_with_arity("k1*k2", 2).unwrap();
        assert_eq!(apply_elementary_symmetric_shift(&q, &[v(1), v(2)], 0), q);
        assert_eq!(
            apply_elementary_symmetric_shift(&p("k1"), &[v(1)], 1),
            p("k1 + 1")
        );
        // (k1+1)k2 + k1(k2+1)
        assert_eq!(
            apply_elementary_symmetric_shift(&q, &[v(1), v(2)], 1),
            MultiPoly::parse_with_arity("2*k1*k2 + k1 + k2", 2).unwrap()
        );
    }

    #[test]
    fn substitute_translates_and_permutes() {
        // p(k1,k2) = k2 - k1 + 1 under k1 -> k2, k2 -> k1 - 2
        let q = MultiPoly::parse_with_arity("k2 - k1 + 1", 2).unwrap();
        let images = vec![
            MultiPoly::parse_with_arity("k2", 2).unwrap(),
            MultiPoly::parse_with_arity("k1 - 2", 2).unwrap(),
        ];
        assert_eq!(
            q.substitute(&images),
            MultiPoly::parse_with_arity("k1 - k2 - 1", 2).unwrap()
        );
    }

    #[test]
    fn display_canonical_form() {
        let q = MultiPoly::from_terms(
            3,
            [
                (vec![2, 0, 1], rat(1, 2)),
                (vec![0, 2, 0], rat(-2, 1)),
                (vec![0, 0, 1], rat(3, 1)),
            ],
        );
        assert_eq!(q.to_string(), "1/2*k1^2*k3 - 2*k2^2 + 3*k3");
        assert_eq!(MultiPoly::zero(4).to_string(), "0");
        assert_eq!(p("-k1 - 1").to_string(), "-k1 - 1");
        assert_eq!(MultiPoly::from_integer(0, 42).to_string(), "42");
    }

    #[test]
    fn parse_accepts_reasonable_variants() {
        assert_eq!(p("k1*k1"), p("k1^2"));
        assert_eq!(p("+2*k1 - 0"), p("2*k1"));
        assert_eq!(p("0"), MultiPoly::zero(0));
        assert_eq!(p("3/6"), MultiPoly::constant(0, rat(1, 2)));
        assert_eq!(
            MultiPoly::parse_with_arity("k2-k1+1", 2).unwrap(),
            MultiPoly::parse_with_arity("1 + k2 - k1", 2).unwrap()
        );
        // any ascii letter works for variables
        assert_eq!(MultiPoly::parse("X1^2 + x2").unwrap(), p("k1^2 + k2"));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in [
            "", "  ", "+", "k", "k0", "1/0", "2 3", "k1 +", "k1 ** k2", "1//2", "*k1",
            "k1^", "k1^99999999999999999999", "k999", "é", "k1 k2",
        ] {
            assert!(MultiPoly::parse(bad).is_err(), "expected parse failure for {bad:?}");
        }
        // index above the explicit arity
        assert!(MultiPoly::parse_with_arity("k3", 2).is_err());
    }

    // ---- property tests ----

    fn arb_poly(arity: usize) -> impl Strategy<Value = MultiPoly> {
        let term = (
            proptest::collection::vec(0u32..4, arity),
            (-9i64..=9, 1i64..=4),
        );
        proptest::collection::vec(term, 0..6).prop_map(move |ts| {
            MultiPoly::from_terms(
                arity,
                ts.into_iter().map(|(e, (n, d))| (e, rat(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn pair_operators_commute(q in arb_poly(4)) {
            let ab = q.apply_pair_operator(v(1), v(2)).apply_pair_operator(v(3), v(4));
            let ba = q.apply_pair_operator(v(3), v(4)).apply_pair_operator(v(1), v(2));
            prop_assert_eq!(ab, ba);
            let overlap_ab = q.apply_pair_operator(v(1), v(3)).apply_pair_operator(v(2), v(3));
            let overlap_ba = q.apply_pair_operator(v(2), v(3)).apply_pair_operator(v(1), v(3));
            prop_assert_eq!(overlap_ab, overlap_ba);
        }

        #[test]
        fn shift_and_delta_commute(q in arb_poly(3)) {
            let a = q.delta(v(2)).shift(v(2), 1);
            let b = q.shift(v(2), 1).delta(v(2));
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.shift(v(2), -1), q.delta(v(2)));
        }

        #[test]
        fn shifts_compose_additively(q in arb_poly(2), c1 in -5i64..=5, c2 in -5i64..=5) {
            prop_assert_eq!(q.shift(v(1), c1).shift(v(1), c2), q.shift(v(1), c1 + c2));
        }

        #[test]
        fn display_parse_round_trip(q in arb_poly(3)) {
            let text = q.to_string();
            let back = MultiPoly::parse_with_arity(&text, 3).unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn mul_distributes_over_add(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
