//! Exact rank over `GF(2)`, `GF(p)` and `Q`.
//!
//! All three engines are incremental row reducers: vectors are inserted one
//! at a time, reduced against the stored pivots, and kept if something
//! survives. The pivot of a stored vector is its lowest nonzero position.
//! Reporting pivot positions lets the homology code skip columns that are
//! already known to be cycles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::field::FieldSpec;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, 1);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        IntMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().enumerate().filter(|(_, &x)| x != 0).map(|(c, &x)| (c, x)).collect())
            .collect()
    }
}

/// Rank over `GF(p)`; `p` is assumed prime.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    rank_sparse(FieldSpec::Prime(p), m.cols, &m.sparse_rows()).0
}

/// Rank over `Q`, by fraction-free elimination over the integers.
pub fn rank_rational(m: &IntMatrix) -> usize {
    rank_sparse(FieldSpec::Rational, m.cols, &m.sparse_rows()).0
}

/// Rank of the span of `vectors` (sparse, entries `< width`), together with
/// the pivot position of every independent vector.
pub(crate) fn rank_sparse(field: FieldSpec, width: usize, vectors: &[Vec<(usize, i64)>]) -> (usize, Vec<usize>) {
    match field {
        FieldSpec::Prime(2) => run(Gf2Reducer::new(width), vectors),
        FieldSpec::Prime(p) => run(ModPReducer::new(width, p), vectors),
        FieldSpec::Rational => {
            // small integers first, big integers only if something overflows
            let mut small = IntReducer::<i128>::new(width);
            let mut pivots = Vec::new();
            for v in vectors {
                match small.insert(v) {
                    Ok(Some(p)) => pivots.push(p),
                    Ok(None) => {}
                    Err(Overflow) => return run(BigReducer::new(width), vectors),
                }
            }
            (pivots.len(), pivots)
        }
    }
}

fn run<R: Reducer>(mut reducer: R, vectors: &[Vec<(usize, i64)>]) -> (usize, Vec<usize>) {
    let pivots: Vec<usize> = vectors.iter().filter_map(|v| reducer.insert(v)).collect();
    (pivots.len(), pivots)
}

trait Reducer {
    /// Returns the pivot position if the vector is independent of those seen so far.
    fn insert(&mut self, v: &[(usize, i64)]) -> Option<usize>;
}

struct Gf2Reducer {
    words: usize,
    pivots: Vec<Option<Box<[u64]>>>,
}

impl Gf2Reducer {
    fn new(width: usize) -> Self {
        Gf2Reducer { words: width.div_ceil(64), pivots: vec![None; width] }
    }
}

impl Reducer for Gf2Reducer {
    fn insert(&mut self, v: &[(usize, i64)]) -> Option<usize> {
        let mut bits = vec![0u64; self.words];
        for &(c, x) in v {
            if x.rem_euclid(2) == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        let mut w = 0;
        loop {
            while w < self.words && bits[w] == 0 {
                w += 1;
            }
            if w == self.words {
                return None;
            }
            let pos = w * 64 + bits[w].trailing_zeros() as usize;
            match &self.pivots[pos] {
                Some(p) => {
                    for q in w..self.words {
                        bits[q] ^= p[q];
                    }
                }
                None => {
                    self.pivots[pos] = Some(bits.into_boxed_slice());
                    return Some(pos);
                }
            }
        }
    }
}

struct ModPReducer {
    p: u64,
    width: usize,
    pivots: Vec<Option<Box<[u64]>>>,
}

impl ModPReducer {
    fn new(width: usize, p: u64) -> Self {
        ModPReducer { p, width, pivots: vec![None; width] }
    }

    fn inverse(&self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Reducer for ModPReducer {
    fn insert(&mut self, v: &[(usize, i64)]) -> Option<usize> {
        let p = self.p;
        let mut row = vec![0u64; self.width];
        for &(c, x) in v {
            row[c] = (row[c] + x.rem_euclid(p as i64) as u64) % p;
        }
        for pos in 0..self.width {
            let c = row[pos];
            if c == 0 {
                continue;
            }
            match &self.pivots[pos] {
                Some(piv) => {
                    // pivot rows are normalized to 1 at `pos`
                    let neg = p - c;
                    for q in pos..self.width {
                        if piv[q] != 0 {
                            row[q] = (row[q] + neg * piv[q]) % p;
                        }
                    }
                }
                None => {
                    let inv = self.inverse(c);
                    for x in row[pos..].iter_mut() {
                        *x = *x * inv % p;
                    }
                    self.pivots[pos] = Some(row.into_boxed_slice());
                    return Some(pos);
                }
            }
        }
        None
    }
}

#[derive(Debug)]
struct Overflow;

/// Fraction-free reducer over a signed integer type. Vectors are kept
/// primitive (content 1) to limit coefficient growth.
struct IntReducer<T> {
    width: usize,
    pivots: Vec<Option<Box<[T]>>>,
}

impl<T> IntReducer<T>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub + From<i64>,
{
    fn new(width: usize) -> Self {
        IntReducer { width, pivots: (0..width).map(|_| None).collect() }
    }

    fn insert(&mut self, v: &[(usize, i64)]) -> Result<Option<usize>, Overflow> {
        let mut row: Vec<T> = vec![T::zero(); self.width];
        for &(c, x) in v {
            row[c] = row[c].clone() + T::from(x);
        }
        for pos in 0..self.width {
            if row[pos].is_zero() {
                continue;
            }
            match &self.pivots[pos] {
                Some(piv) => {
                    // row <- a·row − b·piv, where a = piv[pos], b = row[pos]
                    let a = piv[pos].clone();
                    let b = row[pos].clone();
                    let g = a.gcd(&b);
                    let (a, b) = (a / g.clone(), b / g);
                    for q in pos..self.width {
                        let lhs = row[q].checked_mul(&a).ok_or(Overflow)?;
                        let rhs = piv[q].checked_mul(&b).ok_or(Overflow)?;
                        row[q] = lhs.checked_sub(&rhs).ok_or(Overflow)?;
                    }
                    make_primitive(&mut row[pos..]);
                }
                None => {
                    make_primitive(&mut row[pos..]);
                    if row[pos].is_negative() {
                        for x in row[pos..].iter_mut() {
                            *x = -x.clone();
                        }
                    }
                    self.pivots[pos] = Some(row.into_boxed_slice());
                    return Ok(Some(pos));
                }
            }
        }
        Ok(None)
    }
}

fn make_primitive<T: Integer + Signed + Clone>(row: &mut [T]) {
    let mut g = T::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = x.clone() / g.clone();
    }
}

struct BigReducer(IntReducer<BigInt>);

impl BigReducer {
    fn new(width: usize) -> Self {
        BigReducer(IntReducer::new(width))
    }
}

impl Reducer for BigReducer {
    fn insert(&mut self, v: &[(usize, i64)]) -> Option<usize> {
        self.0.insert(v).expect("big integers do not overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_fields() -> [FieldSpec; 4] {
        [FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Prime(5), FieldSpec::Rational]
    }

    fn rank(m: &IntMatrix, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(p) => rank_mod_p(m, p),
            FieldSpec::Rational => rank_rational(m),
        }
    }

    #[test]
    fn identity_has_full_rank() {
        for field in all_fields() {
            assert_eq!(rank(&IntMatrix::identity(3), field), 3);
        }
    }

    #[test]
    fn all_ones() {
        let ones = IntMatrix::from_rows(vec![vec![1; 4]; 4]);
        assert_eq!(rank_mod_p(&ones, 2), 1);
        assert_eq!(rank_rational(&ones), 1);
    }

    #[test]
    fn triangle_boundary_rank() {
        // columns {0,1}, {0,2}, {1,2}; rows {0}, {1}, {2}
        let d1 = IntMatrix::from_rows(vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(rank_rational(&d1), 2);
        assert_eq!(rank_mod_p(&d1, 2), 2);
    }

    #[test]
    fn characteristic_matters() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
        assert_eq!(rank_rational(&m), 2);
    }

    #[test]
    fn rational_falls_back_to_big_integers() {
        // the Hilbert matrix scaled to integers has full rank; entries grow fast
        let n = 12;
        let l: i64 = (1..=2 * n as i64).fold(1, |acc, k| acc / gcd(acc, k) * k);
        let rows = (0..n).map(|i| (0..n).map(|j| l / (i + j + 1) as i64).collect()).collect();
        assert_eq!(rank_rational(&IntMatrix::from_rows(rows)), n);
    }

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(rank_rational(&IntMatrix::zeros(0, 5)), 0);
        assert_eq!(rank_mod_p(&IntMatrix::zeros(3, 0), 2), 0);
    }
}
