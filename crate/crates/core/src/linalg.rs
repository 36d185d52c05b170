//! Exact dense linear algebra over the rationals.
//!
//! Everything downstream (fixed spaces, structure constants, tensor
//! expansions, rank certificates) is computed with the routines here, so
//! there is no floating point anywhere in the crate. Matrices are stored
//! row-major and pivoting always takes the first nonzero entry, which keeps
//! every reduced form reproducible.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; `BigRational` keeps itself in lowest terms
/// with a positive denominator.
pub type Scalar = BigRational;

/// Coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `num/den` or a bare integer.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::InvalidInput(format!("cannot parse rational `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in `{text}`")));
            }
            Ok(Scalar::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Scalar::from_integer(n))
        }
    }
}

/// Always `num/den`, including integers (`3/1`), so machine consumers never
/// have to special-case the format.
pub fn format_scalar(q: &Scalar) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn zero_vector(len: usize) -> Vector {
    vec![Scalar::zero(); len]
}

pub fn unit_vector(len: usize, i: usize) -> Vector {
    let mut v = zero_vector(len);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Rescales `v` in place to integer coordinates with content 1 and a
/// positive first nonzero entry. The zero vector is left alone.
pub fn integer_normalize(v: &mut [Scalar]) {
    let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() else {
        return;
    };
    let lcm_den = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let gcd_num = v
        .iter()
        .map(|x| (x * Scalar::from_integer(lcm_den.clone())).to_integer())
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    let mut factor = Scalar::new(lcm_den, gcd_num);
    if first.is_negative() {
        factor = -factor;
    }
    for x in v.iter_mut() {
        *x *= &factor;
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::from_vec(rows, cols, entries.iter().map(|&x| int(x)).collect())
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged rows".into()));
        }
        Ok(Self { rows: rows.len(), cols, data: rows.concat() })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::InvalidInput("column length mismatch".into()));
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product; zero entries of `self` are skipped, which matters for
    /// the Kronecker-structured products used by the Hopf axiom checks.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| c * x).collect() }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix]) -> Result<Matrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::InvalidInput("vstack column mismatch".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let data = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Ok(Matrix { rows, cols, data })
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(blocks: &[Matrix]) -> Result<Matrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::InvalidInput("hstack row mismatch".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    m[(i, offset + j)] = b[(i, j)].clone();
                }
            }
            offset += b.cols;
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Reduced row-echelon form together with the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].recip();
        let mut pivot_row: Vec<(usize, Scalar)> = Vec::new();
        for j in c..a.cols {
            let x = &mut a.data[r * m.cols + j];
            if !x.is_zero() {
                *x *= &inv;
                pivot_row.push((j, x.clone()));
            }
        }
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let f = a[(i, c)].clone();
            if f.is_zero() {
                continue;
            }
            for (j, x) in &pivot_row {
                a.data[i * m.cols + j] -= &f * x;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of the right null space, one column per free variable.
pub fn kernel(m: &Matrix) -> Matrix {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut k = Matrix::zeros(m.cols, free.len());
    for (col, &f) in free.iter().enumerate() {
        k[(f, col)] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            k[(p, col)] = -r[(row, f)].clone();
        }
    }
    k
}

/// Solves `m * x = rhs`. Returns `None` when the system is inconsistent; free
/// variables are set to zero.
pub fn solve(m: &Matrix, rhs: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows, rhs.rows, "solve: row mismatch");
    let aug = Matrix::hstack(&[m.clone(), rhs.clone()]).expect("row counts checked");
    let (r, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= m.cols) {
        return None;
    }
    let mut x = Matrix::zeros(m.cols, rhs.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..rhs.cols {
            x[(p, j)] = r[(row, m.cols + j)].clone();
        }
    }
    Some(x)
}

pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * b.rows + k, j * b.cols + l)] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Coordinates with respect to a fixed linearly independent family.
///
/// Precomputes an invertible square minor of the basis matrix so repeated
/// coordinate lookups cost one small product plus an exact membership check.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Matrix,
    rows: Vec<usize>,
    minor_inverse: Matrix,
}

impl Coordinates {
    pub fn new(ambient_dim: usize, basis: &[Vector]) -> Result<Self> {
        let basis = Matrix::from_columns(ambient_dim, basis)?;
        let (_, rows) = rref(&basis.transpose());
        if rows.len() != basis.cols() {
            return Err(Error::InvalidInput(format!(
                "basis of {} vectors has rank {}",
                basis.cols(),
                rows.len()
            )));
        }
        let k = rows.len();
        let mut minor = Matrix::zeros(k, k);
        for (a, &r) in rows.iter().enumerate() {
            for j in 0..k {
                minor[(a, j)] = basis[(r, j)].clone();
            }
        }
        let minor_inverse = solve(&minor, &Matrix::identity(k)).expect("minor is invertible");
        Ok(Self { basis, rows, minor_inverse })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn of(&self, v: &[Scalar]) -> Option<Vector> {
        let picked: Vector = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.minor_inverse.mul_vec(&picked);
        (self.basis.mul_vec(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.of(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_rank_one() {
        let id = Matrix::identity(2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        let m = Matrix::from_i64(2, 2, &[1, 2, 2, 4]).unwrap();
        let (r, p) = rref(&m);
        assert_eq!(r, Matrix::from_i64(2, 2, &[1, 2, 0, 0]).unwrap());
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(kernel(&Matrix::zeros(3, 3)).cols(), 3);
        assert_eq!(kernel(&Matrix::identity(3)).cols(), 0);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let v = Matrix::from_i64(2, 1, &[3, -7]).unwrap();
        assert_eq!(solve(&Matrix::identity(2), &v), Some(v));
        let m = Matrix::from_i64(2, 1, &[1, 1]).unwrap();
        let rhs = Matrix::from_i64(2, 1, &[1, 2]).unwrap();
        assert_eq!(solve(&m, &rhs), None);
    }

    #[test]
    fn kronecker_small_cases() {
        assert_eq!(kronecker(&Matrix::identity(2), &Matrix::identity(3)), Matrix::identity(6));
        let m = Matrix::from_i64(2, 2, &[1, -1, 3, 5]).unwrap();
        let two = Matrix::from_i64(1, 1, &[2]).unwrap();
        assert_eq!(kronecker(&two, &m), m.scale(&int(2)));
    }

    #[test]
    fn scalar_parse_and_format() {
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar("12").unwrap(), int(12));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert_eq!(format_scalar(&int(3)), "3/1");
        assert_eq!(format_scalar(&frac(2, -4)), "-1/2");
    }

    #[test]
    fn normalize_to_primitive_integer_vector() {
        let mut v = vec![frac(-1, 2), int(0), frac(3, 4)];
        integer_normalize(&mut v);
        assert_eq!(v, vec![int(2), int(0), int(-3)]);
    }

    #[test]
    fn coordinates_membership() {
        let b = vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]];
        let c = Coordinates::new(3, &b).unwrap();
        assert_eq!(c.of(&[int(2), int(5), int(3)]), Some(vec![int(2), int(3)]));
        assert_eq!(c.of(&[int(1), int(0), int(0)]), None);
    }
}
