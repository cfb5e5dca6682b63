//! Dense matrices over a commutative ring, determinants, and Smith normal
//! form over a Euclidean domain.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Result;

/// Commutative ring operations. Elements may carry context (a field
/// descriptor), so constants are produced from an existing element.
pub trait Ring: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// A Euclidean domain with a chosen normal form for associates.
pub trait EuclideanDomain: Ring {
    /// Compares Euclidean sizes (absolute value, degree span, ...).
    fn euclid_cmp(&self, other: &Self) -> Ordering;
    /// `self = q * divisor + r` with `r == 0` or `r` smaller than `divisor`.
    fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)>;
    /// Returns `(unit, unit_inverse)` such that `self * unit` is the normal
    /// associate of `self`. Zero maps to `(1, 1)`.
    fn normalizing_unit(&self) -> Result<(Self, Self)>;
    fn is_unit(&self) -> bool;

    fn divides(&self, other: &Self) -> Result<bool> {
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.div_rem(self)?.1.is_zero())
    }
}

macro_rules! ring_for_num {
    ($t:ty, $from:expr) => {
        impl Ring for $t {
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn zero_like(&self) -> Self {
                <$t>::zero()
            }
            fn one_like(&self) -> Self {
                <$t>::one()
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self.clone()
            }
            fn from_int_like(&self, n: i64) -> Self {
                $from(n)
            }
        }
    };
}

ring_for_num!(i64, |n| n);
ring_for_num!(BigInt, BigInt::from);
ring_for_num!(BigRational, |n| BigRational::from_integer(BigInt::from(n)));

impl EuclideanDomain for BigInt {
    fn euclid_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }

    fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if Zero::is_zero(divisor) {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Integer::div_rem(self, divisor))
    }

    fn normalizing_unit(&self) -> Result<(Self, Self)> {
        let u = if self.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Ok((u.clone(), u))
    }

    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }
}

#[derive(Clone, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    zero: T,
}

impl<T: PartialEq> PartialEq for Matrix<T> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, zero: T) -> Self {
        let zero = zero.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, zero: T) -> Self {
        let mut m = Self::zeros(n, n, zero);
        let one = m.zero.one_like();
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
    }

    /// Builds a matrix from rows; `zero` fixes the ring context when there
    /// are no entries. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>, zero: T) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
            zero: zero.zero_like(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, zero: T, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            zero: zero.zero_like(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn zero_elem(&self) -> &T {
        &self.zero
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<S: Ring>(&self, zero: S, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: zero.zero_like(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, zero: S, f: impl Fn(&T) -> Result<S, E>) -> Result<Matrix<S>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
            zero: zero.zero_like(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.zero.clone(), |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        Self::from_fn(self.rows, other.cols, self.zero.clone(), |i, j| {
            (0..self.cols).fold(self.zero.clone(), |acc, k| acc.add(&self[(i, k)].mul(&other[(k, j)])))
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(self.zero.clone(), |acc, k| acc.add(&self[(i, k)].mul(&v[k]))))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), self.zero.clone(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Determinant by cofactor expansion over column subsets; exact and
    /// division-free, `O(n 2^n)`.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return self.zero.one_like();
        }
        assert!(n <= 20, "determinant expansion limited to 20x20");
        // minors[mask] = det of rows (n - popcount(mask))..n against columns in mask
        let mut minors: Vec<Option<T>> = vec![None; 1 << n];
        minors[0] = Some(self.zero.one_like());
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = n - k;
            let mut acc = self.zero.clone();
            let mut sign_pos = true;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = &self[(row, col)];
                if !entry.is_zero() {
                    let rest = minors[mask & !(1 << col)].as_ref().expect("filled in mask order");
                    let term = entry.mul(rest);
                    acc = if sign_pos { acc.add(&term) } else { acc.sub(&term) };
                }
                sign_pos = !sign_pos;
            }
            minors[mask] = Some(acc);
        }
        minors[(1 << n) - 1].take().expect("full minor")
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += factor * row[source]`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for j in 0..self.cols {
            let delta = factor.mul(&self[(source, j)]);
            if !delta.is_zero() {
                self[(target, j)] = self[(target, j)].add(&delta);
            }
        }
    }

    /// `col[target] += factor * col[source]`
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for i in 0..self.rows {
            let delta = self[(i, source)].mul(factor);
            if !delta.is_zero() {
                self[(i, target)] = self[(i, target)].add(&delta);
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, factor: &T) {
        for j in 0..self.cols {
            self[(i, j)] = self[(i, j)].mul(factor);
        }
    }

    pub fn scale_col(&mut self, j: usize, factor: &T) {
        for i in 0..self.rows {
            self[(i, j)] = self[(i, j)].mul(factor);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// `u · a · v = d` with `d` diagonal, its nonzero diagonal entries in
/// normal form and ascending divisibility `d₀ | d₁ | …`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: EuclideanDomain> SmithDecomposition<T> {
    pub fn diagonal(&self) -> Vec<T> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Nonzero diagonal entries, ascending divisibility.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct SmithState<T> {
    a: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: EuclideanDomain> SmithState<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, target: usize, source: usize, factor: &T) {
        self.a.add_row_multiple(target, source, factor);
        self.u.add_row_multiple(target, source, factor);
        self.u_inv.add_col_multiple(source, target, &factor.neg());
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &T) {
        self.a.add_col_multiple(target, source, factor);
        self.v.add_col_multiple(target, source, factor);
        self.v_inv.add_row_multiple(source, target, &factor.neg());
    }

    fn scale_row(&mut self, i: usize, unit: &T, unit_inv: &T) {
        self.a.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, unit_inv);
    }

    fn smallest_in(&self, rows: impl Iterator<Item = usize>, cols: &[usize]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in rows {
            for &j in cols {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => x.euclid_cmp(&self.a[b]) == Ordering::Less,
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `k` outside the pivot; pivot divides the rest.
    fn reduce_pivot(&mut self, k: usize) -> Result<()> {
        let (m, n) = self.a.shape();
        loop {
            let mut clean = true;
            for i in k + 1..m {
                if self.a[(i, k)].is_zero() {
                    continue;
                }
                let (q, r) = self.a[(i, k)].div_rem(&self.a[(k, k)])?;
                self.add_row(i, k, &q.neg());
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                if self.a[(k, j)].is_zero() {
                    continue;
                }
                let (q, r) = self.a[(k, j)].div_rem(&self.a[(k, k)])?;
                self.add_col(j, k, &q.neg());
                if !r.is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let cols: Vec<usize> = (k..n).collect();
                let cross = self
                    .smallest_in(k..m, &[k])
                    .into_iter()
                    .chain(self.smallest_in(std::iter::once(k), &cols))
                    .min_by(|x, y| self.a[*x].euclid_cmp(&self.a[*y]));
                if let Some((i, j)) = cross {
                    self.swap_rows(k, i);
                    self.swap_cols(k, j);
                }
                continue;
            }
            // row k and column k are clear; enforce divisibility of the rest
            let mut offender = None;
            'outer: for i in k + 1..m {
                for j in k + 1..n {
                    if !self.a[(k, k)].divides(&self.a[(i, j)])? {
                        offender = Some(i);
                        break 'outer;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = self.a[(k, k)].one_like();
                    self.add_row(k, i, &one);
                }
                None => return Ok(()),
            }
        }
    }
}

/// Smith normal form with smallest-size pivoting and full row/column
/// elimination. Suitable for small matrices; entry growth is not controlled.
pub fn smith_normal_form<T: EuclideanDomain>(a: &Matrix<T>) -> Result<SmithDecomposition<T>> {
    let (m, n) = a.shape();
    let zero = a.zero_elem().clone();
    let mut st = SmithState {
        a: a.clone(),
        u: Matrix::identity(m, zero.clone()),
        u_inv: Matrix::identity(m, zero.clone()),
        v: Matrix::identity(n, zero.clone()),
        v_inv: Matrix::identity(n, zero),
    };
    for k in 0..m.min(n) {
        let cols: Vec<usize> = (k..n).collect();
        let Some((i, j)) = st.smallest_in(k..m, &cols) else {
            break;
        };
        st.swap_rows(k, i);
        st.swap_cols(k, j);
        st.reduce_pivot(k)?;
        let (unit, unit_inv) = st.a[(k, k)].normalizing_unit()?;
        if !unit.is_one() {
            st.scale_row(k, &unit, &unit_inv);
        }
    }
    Ok(SmithDecomposition {
        u: st.u,
        u_inv: st.u_inv,
        d: st.a,
        v: st.v,
        v_inv: st.v_inv,
    })
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            BigInt::zero(),
        )
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn determinant_small() {
        let a = int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.determinant(), BigInt::from(18));
        let b = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(b.determinant(), BigInt::from(-1));
    }

    #[test]
    fn smith_of_rank_deficient_matrix() {
        let a = int_matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a).unwrap();
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(s.u.mul(&s.u_inv), Matrix::identity(3, BigInt::zero()));
        assert_eq!(s.v.mul(&s.v_inv), Matrix::identity(3, BigInt::zero()));
    }
}
