//! Brute-force ground truth: monotone triangles, alternating sign
//! matrices and their rectangular generalization, and the bijection
//! between triangles and matrices.
//!
//! Everything here enumerates explicitly, so it is only meant for desk
//! scale, but it is the layer every closed form is checked against.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Error;

/// Strictly increasing integer row prescribing the bottom of a monotone
/// triangle. May be empty (the one "empty triangle" counts once).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottomRow(Vec<i64>);

impl BottomRow {
    pub fn new(values: Vec<i64>) -> Result<Self, Error> {
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::RowNotIncreasing(values));
        }
        Ok(BottomRow(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Parse a comma-separated integer row such as `1,2,4`.
pub fn parse_row(s: &str) -> Result<Vec<i64>, Error> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty row".into()));
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad row entry {part:?}: {e}")))
        })
        .collect()
}

/// Triangular integer array, strictly increasing along rows and weakly
/// increasing along both diagonal directions; row `i` (1-based) has `i`
/// entries and the last row is the prescribed bottom row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<i64>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::InvalidTriangle("no rows".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::InvalidTriangle(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    i + 1
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTriangle(format!(
                    "row {} is not strictly increasing",
                    i + 1
                )));
            }
        }
        // a[i][j] <= a[i-1][j] <= a[i][j+1] in 1-based paper coordinates
        for i in 1..rows.len() {
            for j in 0..i {
                if rows[i][j] > rows[i - 1][j] || rows[i - 1][j] > rows[i][j + 1] {
                    return Err(Error::InvalidTriangle(format!(
                        "monotonicity fails between rows {} and {}",
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    /// Number of rows.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Rows from top (1 entry) to bottom (`n` entries).
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn top(&self) -> i64 {
        self.rows[0][0]
    }

    pub fn bottom(&self) -> &[i64] {
        self.rows.last().unwrap()
    }

    /// Parse the centered text rendering (whitespace-insensitive).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let rows: Vec<Vec<i64>> = s
            .lines()
            .filter(|line| !line.trim().is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<i64>()
                            .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Self::new(rows)
    }
}

impl fmt::Display for MonotoneTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        let width = strs.iter().map(String::len).max().unwrap_or(0);
        for (i, s) in strs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{:indent$}{}", "", s, indent = (width - s.len()) / 2)?;
        }
        Ok(())
    }
}

/// Rectangular matrix over {-1, 0, 1}. Validity as an alternating sign
/// matrix or as one of their rectangular generalizations is checked by
/// [`SignMatrix::is_asm`] / [`SignMatrix::is_side_valid`], not by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<i8>,
}

/// Sign profile of one row or column.
struct LineProfile {
    alternates: bool,
    sum: i32,
    first: i8,
}

fn profile(entries: impl Iterator<Item = i8>) -> LineProfile {
    let mut last = 0i8;
    let mut first = 0i8;
    let mut sum = 0i32;
    let mut alternates = true;
    for e in entries {
        if e != 0 {
            if last == e {
                alternates = false;
            }
            if first == 0 {
                first = e;
            }
            last = e;
            sum += i32::from(e);
        }
    }
    LineProfile { alternates, sum, first }
}

impl SignMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self, Error> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::InvalidMatrix("matrix must be nonempty".into()));
        }
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        if rows.iter().flatten().any(|e| !(-1..=1).contains(e)) {
            return Err(Error::InvalidMatrix("entries must be -1, 0 or 1".into()));
        }
        Ok(SignMatrix {
            n_rows,
            n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> i8 {
        assert!((1..=self.n_rows).contains(&i) && (1..=self.n_cols).contains(&j));
        self.entries[(i - 1) * self.n_cols + (j - 1)]
    }

    fn row_iter(&self, i: usize) -> impl Iterator<Item = i8> + '_ {
        (1..=self.n_cols).map(move |j| self.at(i, j))
    }

    fn col_iter(&self, j: usize) -> impl Iterator<Item = i8> + '_ {
        (1..=self.n_rows).map(move |i| self.at(i, j))
    }

    /// True iff this is an alternating sign matrix: square, every row and
    /// column sums to 1 with non-zero entries alternating in sign.
    pub fn is_asm(&self) -> bool {
        if self.n_rows != self.n_cols {
            return false;
        }
        (1..=self.n_rows).all(|i| {
            let p = profile(self.row_iter(i));
            p.alternates && p.sum == 1
        }) && (1..=self.n_cols).all(|j| {
            let p = profile(self.col_iter(j));
            p.alternates && p.sum == 1
        })
    }

    /// True iff this `n x k` matrix satisfies the generalized column
    /// profile: rows alternate and sum to 1; columns `1..n-1` and `k`
    /// alternate and sum to 1; columns `n..k-1` alternate, sum to 0 and
    /// have a 1 as first non-zero entry (vacuously true when empty).
    pub fn is_side_valid(&self) -> bool {
        let (n, k) = (self.n_rows, self.n_cols);
        if k < n {
            return false;
        }
        (1..=n).all(|i| {
            let p = profile(self.row_iter(i));
            p.alternates && p.sum == 1
        }) && (1..=k).all(|j| {
            let p = profile(self.col_iter(j));
            let target = if j < n || j == k { 1 } else { 0 };
            p.alternates && p.sum == target && (target == 1 || p.first != -1)
        })
    }

    /// Parse rows of space-separated entries.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let rows: Vec<Vec<i8>> = s
            .lines()
            .filter(|line| !line.trim().is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| match tok {
                        "-1" => Ok(-1),
                        "0" => Ok(0),
                        "1" => Ok(1),
                        _ => Err(Error::Parse(format!("bad matrix entry {tok:?}"))),
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Self::new(rows)
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n_rows {
            if i > 1 {
                writeln!(f)?;
            }
            let row: Vec<String> = self.row_iter(i).map(|e| e.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Visit every interleaving row `(l_1, ..., l_{m-1})` of a strictly
/// increasing row `(k_1, ..., k_m)`: `k_i <= l_i <= k_{i+1}` with
/// consecutive `l` distinct. Rows are produced in lexicographic order.
fn for_each_interleaving(row: &[i64], f: &mut impl FnMut(&[i64])) {
    fn go(row: &[i64], pos: usize, buf: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if pos + 1 == row.len() {
            f(buf);
            return;
        }
        for v in row[pos]..=row[pos + 1] {
            if pos > 0 && buf[pos - 1] == v {
                continue;
            }
            buf.push(v);
            go(row, pos + 1, buf, f);
            buf.pop();
        }
    }
    debug_assert!(row.len() >= 2);
    go(row, 0, &mut Vec::with_capacity(row.len() - 1), f);
}

/// Memoizing counter for monotone triangles with prescribed bottom row.
///
/// The memo key is the row translated so its minimum is 0; counts are
/// invariant under translating the whole row by a constant.
#[derive(Default)]
pub struct AlphaCounter {
    memo: HashMap<Vec<i64>, BigInt>,
}

impl AlphaCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of monotone triangles with the given bottom row.
    pub fn count(&mut self, row: &BottomRow) -> BigInt {
        self.count_values(row.values())
    }

    fn count_values(&mut self, row: &[i64]) -> BigInt {
        if row.len() <= 1 {
            return BigInt::one();
        }
        let key: Vec<i64> = row.iter().map(|v| v - row[0]).collect();
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        let mut total = BigInt::zero();
        for_each_interleaving(row, &mut |l| total += self.count_values(l));
        self.memo.insert(key, total.clone());
        total
    }
}

/// Number of monotone triangles with the given bottom row, by the
/// delete-last-row recursion with memoization.
pub fn alpha_brute(row: &BottomRow) -> BigInt {
    AlphaCounter::new().count(row)
}

/// Stream of all monotone triangles with a prescribed bottom row, in
/// lexicographic order of the row tuples read bottom-up.
pub fn enumerate_triangles(row: &BottomRow) -> TriangleIter {
    TriangleIter::new(row)
}

struct Level {
    candidates: Vec<Vec<i64>>,
    idx: usize,
}

pub struct TriangleIter {
    levels: Vec<Level>,
    primed: bool,
    done: bool,
}

impl TriangleIter {
    fn new(row: &BottomRow) -> Self {
        if row.is_empty() {
            return TriangleIter { levels: Vec::new(), primed: true, done: true };
        }
        TriangleIter {
            levels: vec![Level { candidates: vec![row.values().to_vec()], idx: 0 }],
            primed: false,
            done: false,
        }
    }

    fn current_top(&self) -> &[i64] {
        let level = self.levels.last().unwrap();
        &level.candidates[level.idx]
    }

    fn extend_to_top(&mut self) {
        while self.current_top().len() > 1 {
            let mut candidates = Vec::new();
            for_each_interleaving(self.current_top(), &mut |l| candidates.push(l.to_vec()));
            self.levels.push(Level { candidates, idx: 0 });
        }
    }

    fn advance(&mut self) -> bool {
        loop {
            if self.levels.len() == 1 {
                return false;
            }
            let last = self.levels.last_mut().unwrap();
            last.idx += 1;
            if last.idx < last.candidates.len() {
                self.extend_to_top();
                return true;
            }
            self.levels.pop();
        }
    }
}

impl Iterator for TriangleIter {
    type Item = MonotoneTriangle;

    fn next(&mut self) -> Option<MonotoneTriangle> {
        if self.done {
            return None;
        }
        if !self.primed {
            self.primed = true;
            self.extend_to_top();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        let mut rows: Vec<Vec<i64>> = self
            .levels
            .iter()
            .map(|l| l.candidates[l.idx].clone())
            .collect();
        rows.reverse();
        Some(MonotoneTriangle::new(rows).expect("enumerated triangle must be valid"))
    }
}

/// Monotone triangle of the column partial sums of an alternating sign
/// matrix: row `i` lists the columns whose sums through row `i` equal 1.
pub fn asm_to_triangle(m: &SignMatrix) -> Result<MonotoneTriangle, Error> {
    if !m.is_asm() {
        return Err(Error::InvalidMatrix("not an alternating sign matrix".into()));
    }
    let n = m.n_rows();
    let mut sums = vec![0i8; n];
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        for j in 1..=n {
            sums[j - 1] += m.at(i, j);
        }
        rows.push(
            (1..=n)
                .filter(|&j| sums[j - 1] == 1)
                .map(|j| j as i64)
                .collect(),
        );
    }
    MonotoneTriangle::new(rows)
}

/// Inverse of [`asm_to_triangle`]: only triangles with bottom row
/// `(1, ..., n)` correspond to matrices.
pub fn triangle_to_asm(t: &MonotoneTriangle) -> Result<SignMatrix, Error> {
    let n = t.n();
    if t.bottom().iter().copied().ne(1..=n as i64) {
        return Err(Error::InvalidTriangle(
            "bottom row must be (1, ..., n) to invert the bijection".into(),
        ));
    }
    let mut prev = vec![false; n];
    let mut rows = Vec::with_capacity(n);
    for tri_row in t.rows() {
        let mut cur = vec![false; n];
        for &v in tri_row {
            cur[(v - 1) as usize] = true;
        }
        rows.push(
            (0..n)
                .map(|j| match (prev[j], cur[j]) {
                    (false, true) => 1,
                    (true, false) => -1,
                    _ => 0,
                })
                .collect(),
        );
        prev = cur;
    }
    let m = SignMatrix::new(rows)?;
    debug_assert!(m.is_asm());
    Ok(m)
}

/// Refined counts by brute force: entry `i` (1-based) is the number of
/// `n x n` alternating sign matrices whose first-row 1 is in column `i`,
/// counted as monotone triangles with the `i`-th entry deleted from
/// `(1, ..., n)`.
pub fn refined_counts_brute(n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut counter = AlphaCounter::new();
    (1..=n as i64)
        .map(|i| {
            let row: Vec<i64> = (1..=n as i64).filter(|&v| v != i).collect();
            counter.count(&BottomRow::new(row).unwrap())
        })
        .collect()
}

/// Column targets for the `n x k` generalization: columns `1..n-1` and
/// `k` must sum to 1, columns `n..k-1` to 0.
fn side_targets(n: usize, k: usize) -> Vec<i8> {
    (1..=k).map(|c| i8::from(c < n || c == k)).collect()
}

/// Row-by-row search over valid alternating rows with column-state
/// pruning: a 1 may only be placed on a column with partial sum 0 and a
/// -1 only on a column with partial sum 1, which keeps every column
/// prefix completable with first non-zero entry 1.
fn search_sign_matrices(n: usize, targets: &[i8], mut visit: impl FnMut(&[Vec<i8>])) {
    let k = targets.len();

    fn fill_row(
        col: usize,
        k: usize,
        last: i8,
        row: &mut Vec<i8>,
        sums: &mut Vec<i8>,
        done: &mut impl FnMut(&mut Vec<i8>, &mut Vec<i8>),
    ) {
        if col == k {
            if last == 1 {
                done(row, sums);
            }
            return;
        }
        if sums[col] == 1 && last == 1 {
            row.push(-1);
            sums[col] = 0;
            fill_row(col + 1, k, -1, row, sums, done);
            sums[col] = 1;
            row.pop();
        }
        row.push(0);
        fill_row(col + 1, k, last, row, sums, done);
        row.pop();
        if sums[col] == 0 && last != 1 {
            row.push(1);
            sums[col] = 1;
            fill_row(col + 1, k, 1, row, sums, done);
            sums[col] = 0;
            row.pop();
        }
    }

    fn rec(
        depth: usize,
        n: usize,
        k: usize,
        targets: &[i8],
        sums: &mut Vec<i8>,
        acc: &mut Vec<Vec<i8>>,
        visit: &mut impl FnMut(&[Vec<i8>]),
    ) {
        if depth == n {
            if sums == targets {
                visit(acc);
            }
            return;
        }
        let mut row = Vec::with_capacity(k);
        let mut descend = |row: &mut Vec<i8>, sums: &mut Vec<i8>| {
            acc.push(row.clone());
            rec(depth + 1, n, k, targets, sums, acc, visit);
            acc.pop();
        };
        fill_row(0, k, 0, &mut row, sums, &mut descend);
    }

    let mut sums = vec![0i8; k];
    rec(0, n, k, targets, &mut sums, &mut Vec::new(), &mut visit);
}

fn from_rows_unchecked(rows: &[Vec<i8>]) -> SignMatrix {
    SignMatrix {
        n_rows: rows.len(),
        n_cols: rows[0].len(),
        entries: rows.iter().flatten().copied().collect(),
    }
}

/// All `n x n` alternating sign matrices, rows enumerated in
/// lexicographic order with entries ordered -1 < 0 < 1.
pub fn enumerate_asms(n: usize) -> Vec<SignMatrix> {
    assert!(n >= 1);
    let mut out = Vec::new();
    search_sign_matrices(n, &vec![1; n], |rows| out.push(from_rows_unchecked(rows)));
    out
}

/// All `n x k` matrices of the generalized family, same order as
/// [`enumerate_asms`].
pub fn enumerate_side_matrices(n: usize, k: usize) -> Result<Vec<SignMatrix>, Error> {
    if n < 1 || k < n {
        return Err(Error::InvalidArgument(format!(
            "need k >= n >= 1, got n = {n}, k = {k}"
        )));
    }
    let mut out = Vec::new();
    search_sign_matrices(n, &side_targets(n, k), |rows| {
        out.push(from_rows_unchecked(rows))
    });
    Ok(out)
}

/// Count of the `n x k` generalized matrices (rows sum to 1 and
/// alternate; columns `n..k-1` sum to 0 with first non-zero entry 1, all
/// others to 1), by pruned row-by-row enumeration.
pub fn count_side_matrices_brute(n: usize, k: usize) -> Result<BigInt, Error> {
    if n < 1 || k < n {
        return Err(Error::InvalidArgument(format!(
            "need k >= n >= 1, got n = {n}, k = {k}"
        )));
    }
    let mut count = BigInt::zero();
    search_sign_matrices(n, &side_targets(n, k), |_| count += 1);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(values: &[i64]) -> BottomRow {
        BottomRow::new(values.to_vec()).unwrap()
    }

    fn paper_example_asm() -> SignMatrix {
        SignMatrix::new(vec![
            vec![0, 0, 1, 0, 0],
            vec![1, 0, -1, 1, 0],
            vec![0, 1, 0, -1, 1],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap()
    }

    fn paper_example_triangle() -> MonotoneTriangle {
        MonotoneTriangle::new(vec![
            vec![3],
            vec![1, 4],
            vec![1, 2, 5],
            vec![1, 2, 3, 5],
            vec![1, 2, 3, 4, 5],
        ])
        .unwrap()
    }

    #[test]
    fn bottom_row_validation() {
        assert!(BottomRow::new(vec![]).is_ok());
        assert!(BottomRow::new(vec![5]).is_ok());
        assert!(BottomRow::new(vec![-3, 0, 7]).is_ok());
        assert!(matches!(
            BottomRow::new(vec![1, 1]),
            Err(Error::RowNotIncreasing(_))
        ));
        assert!(BottomRow::new(vec![2, 1]).is_err());
    }

    #[test]
    fn parse_row_basics() {
        assert_eq!(parse_row("1,2,4").unwrap(), vec![1, 2, 4]);
        assert_eq!(parse_row(" -2 , 0 , 5 ").unwrap(), vec![-2, 0, 5]);
        assert_eq!(parse_row("42").unwrap(), vec![42]);
        assert!(parse_row("").is_err());
        assert!(parse_row("1,,2").is_err());
        assert!(parse_row("1,2,").is_err());
        assert!(parse_row("a,b").is_err());
    }

    #[test]
    fn alpha_brute_examples() {
        assert_eq!(alpha_brute(&row(&[1, 2, 3])), BigInt::from(7));
        assert_eq!(alpha_brute(&row(&[9])), BigInt::from(1));
        assert_eq!(alpha_brute(&row(&[1, 2, 4])), BigInt::from(14));
        assert_eq!(alpha_brute(&row(&[])), BigInt::from(1));
        // translation invariance exploited by the memo
        assert_eq!(alpha_brute(&row(&[-4, -3, -1])), BigInt::from(14));
    }

    /// Plain recursion without memoization or translation, as an oracle
    /// for the cached counter.
    fn alpha_reference(values: &[i64]) -> BigInt {
        if values.len() <= 1 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for_each_interleaving(values, &mut |l| total += alpha_reference(l));
        total
    }

    #[test]
    fn memoized_counter_matches_plain_recursion() {
        let rows: &[&[i64]] = &[
            &[1, 2, 3, 4],
            &[-2, 0, 1, 5],
            &[0, 2, 4, 6],
            &[1, 3],
            &[-5, -4, -3, -2, -1],
        ];
        let mut counter = AlphaCounter::new();
        for values in rows {
            assert_eq!(counter.count(&row(values)), alpha_reference(values));
        }
    }

    #[test]
    fn enumerate_triangles_examples() {
        let ts: Vec<_> = enumerate_triangles(&row(&[1, 2])).collect();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1], vec![1, 2]]);
        assert_eq!(ts[1].rows(), &[vec![2], vec![1, 2]]);

        let ts: Vec<_> = enumerate_triangles(&row(&[1])).collect();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1]]);

        assert_eq!(enumerate_triangles(&row(&[])).count(), 0);
    }

    #[test]
    fn enumeration_count_matches_alpha() {
        for values in [&[1, 2, 3][..], &[1, 2, 4], &[-1, 1, 2, 4], &[0, 2, 5]] {
            let n = enumerate_triangles(&row(values)).count();
            assert_eq!(BigInt::from(n), alpha_brute(&row(values)), "row {values:?}");
        }
        let seven: Vec<_> = enumerate_triangles(&row(&[1, 2, 3])).collect();
        assert_eq!(seven.len(), 7);
        // all distinct
        let set: std::collections::HashSet<_> = seven.iter().cloned().collect();
        assert_eq!(set.len(), 7);
    }

    #[test]
    fn paper_running_example_maps_to_displayed_triangle() {
        let t = asm_to_triangle(&paper_example_asm()).unwrap();
        assert_eq!(t, paper_example_triangle());
        assert_eq!(t.top(), 3);
        assert_eq!(t.rows()[1], vec![1, 4]);
        // and back
        assert_eq!(triangle_to_asm(&t).unwrap(), paper_example_asm());
    }

    #[test]
    fn bijection_small_cases() {
        let id3 = SignMatrix::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            asm_to_triangle(&id3).unwrap().rows(),
            &[vec![1], vec![1, 2], vec![1, 2, 3]]
        );
        let anti2 = SignMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(asm_to_triangle(&anti2).unwrap().rows(), &[vec![2], vec![1, 2]]);
        let t2 = MonotoneTriangle::new(vec![vec![1], vec![1, 2]]).unwrap();
        assert_eq!(
            triangle_to_asm(&t2).unwrap(),
            SignMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap()
        );
    }

    #[test]
    fn bijection_rejects_bad_inputs() {
        let zero = SignMatrix::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(asm_to_triangle(&zero).is_err());
        let shifted = MonotoneTriangle::new(vec![vec![2], vec![2, 3]]).unwrap();
        assert!(triangle_to_asm(&shifted).is_err());
    }

    #[test]
    fn triangles_for_n3_map_to_seven_distinct_asms() {
        let asms: Vec<_> = enumerate_triangles(&row(&[1, 2, 3]))
            .map(|t| triangle_to_asm(&t).unwrap())
            .collect();
        assert_eq!(asms.len(), 7);
        let set: std::collections::HashSet<_> = asms.iter().cloned().collect();
        assert_eq!(set.len(), 7);
        assert!(asms.iter().all(SignMatrix::is_asm));
    }

    #[test]
    fn round_trip_over_all_asms_n4() {
        for m in enumerate_asms(4) {
            let t = asm_to_triangle(&m).unwrap();
            assert_eq!(triangle_to_asm(&t).unwrap(), m);
            // top entry = column of the single 1 in the first row
            let col = (1..=4).find(|&j| m.at(1, j) == 1).unwrap();
            assert_eq!(t.top(), col as i64);
        }
    }

    #[test]
    fn refined_counts_examples() {
        assert_eq!(refined_counts_brute(1), vec![BigInt::one()]);
        assert_eq!(
            refined_counts_brute(3),
            vec![2, 3, 2].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(
            refined_counts_brute(4),
            vec![7, 14, 14, 7].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn refined_counts_symmetry_and_stacking() {
        for n in 2..=5 {
            let counts = refined_counts_brute(n);
            for i in 0..n {
                assert_eq!(counts[i], counts[n - 1 - i], "symmetry fails at n={n}");
            }
            let prev_total: BigInt = refined_counts_brute(n - 1).into_iter().sum();
            assert_eq!(prev_total, counts[0], "stacking fails at n={n}");
        }
    }

    #[test]
    fn asm_counts_small() {
        let expected = [1usize, 2, 7, 42];
        for (i, &e) in expected.iter().enumerate() {
            let asms = enumerate_asms(i + 1);
            assert_eq!(asms.len(), e);
            assert!(asms.iter().all(SignMatrix::is_asm));
        }
    }

    #[test]
    fn enumerated_asms_match_triangle_counts() {
        for n in 1..=5usize {
            let via_triangles = alpha_brute(&row(&(1..=n as i64).collect::<Vec<_>>()));
            assert_eq!(BigInt::from(enumerate_asms(n).len()), via_triangles);
        }
    }

    #[test]
    fn side_matrix_counts() {
        assert_eq!(count_side_matrices_brute(1, 2).unwrap(), BigInt::from(1));
        assert_eq!(count_side_matrices_brute(2, 3).unwrap(), BigInt::from(3));
        for n in 1..=4usize {
            assert_eq!(
                count_side_matrices_brute(n, n).unwrap(),
                BigInt::from(enumerate_asms(n).len())
            );
        }
        assert!(count_side_matrices_brute(3, 2).is_err());
        assert!(count_side_matrices_brute(0, 0).is_err());
    }

    /// Exhaustive filter over all 3^(n*k) sign matrices; independent of
    /// the pruned search.
    fn count_side_naive(n: usize, k: usize) -> BigInt {
        let cells = n * k;
        let mut count = 0u64;
        for code in 0..3u64.pow(cells as u32) {
            let mut c = code;
            let mut rows = vec![vec![0i8; k]; n];
            for cell in rows.iter_mut().flatten() {
                *cell = (c % 3) as i8 - 1;
                c /= 3;
            }
            let m = SignMatrix::new(rows).unwrap();
            if m.is_side_valid() {
                count += 1;
            }
        }
        BigInt::from(count)
    }

    #[test]
    fn pruned_search_matches_naive_filter() {
        for (n, k) in [(1, 1), (1, 2), (1, 4), (2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)] {
            assert_eq!(
                count_side_matrices_brute(n, k).unwrap(),
                count_side_naive(n, k),
                "mismatch at ({n}, {k})"
            );
        }
    }

    #[test]
    fn enumerated_side_matrices_are_valid_and_counted() {
        for (n, k) in [(2, 4), (3, 5)] {
            let ms = enumerate_side_matrices(n, k).unwrap();
            assert!(ms.iter().all(SignMatrix::is_side_valid));
            assert_eq!(BigInt::from(ms.len()), count_side_matrices_brute(n, k).unwrap());
            let set: std::collections::HashSet<_> = ms.iter().cloned().collect();
            assert_eq!(set.len(), ms.len());
        }
    }

    #[test]
    fn validate_asm_examples() {
        assert!(paper_example_asm().is_asm());
        assert!(SignMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap().is_asm());
        assert!(!SignMatrix::new(vec![vec![0, 0], vec![0, 0]]).unwrap().is_asm());
        // column alternation violated
        assert!(!SignMatrix::new(vec![vec![1, 0], vec![1, -1]]).unwrap().is_asm());
        // not square
        assert!(!SignMatrix::new(vec![vec![1, 0]]).unwrap().is_asm());
    }

    #[test]
    fn sign_matrix_construction_rejects_bad_entries() {
        assert!(SignMatrix::new(vec![vec![2, 0]]).is_err());
        assert!(SignMatrix::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(SignMatrix::new(vec![]).is_err());
    }

    #[test]
    fn sign_matrix_text_round_trip() {
        let m = paper_example_asm();
        let text = m.to_string();
        assert!(text.starts_with("0 0 1 0 0\n"));
        assert_eq!(SignMatrix::parse(&text).unwrap(), m);
        assert!(SignMatrix::parse("0 2\n1 0").is_err());
        assert!(SignMatrix::parse("").is_err());
    }

    #[test]
    fn triangle_text_round_trip() {
        let t = paper_example_triangle();
        let text = t.to_string();
        assert_eq!(MonotoneTriangle::parse(&text).unwrap(), t);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0].trim(), "3");
        assert_eq!(lines[4], "1 2 3 4 5");
        // negative entries survive the round trip
        let neg = MonotoneTriangle::new(vec![vec![-2], vec![-3, 0]]).unwrap();
        assert_eq!(MonotoneTriangle::parse(&neg.to_string()).unwrap(), neg);
    }

    #[test]
    fn triangle_validation() {
        assert!(MonotoneTriangle::new(vec![]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1, 2]]).is_err());
        // row not strictly increasing
        assert!(MonotoneTriangle::new(vec![vec![1], vec![2, 2]]).is_err());
        // diagonal monotonicity violated: top must lie between 1 and 2
        assert!(MonotoneTriangle::new(vec![vec![3], vec![1, 2]]).is_err());
        assert!(MonotoneTriangle::parse("1\n1 x").is_err());
    }
}
