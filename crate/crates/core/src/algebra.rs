//! Finite-dimensional associative algebras over the rationals given by
//! structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, kernel, unit_vector, zero_vector, Coordinates, Matrix, Scalar, Vector};

/// Structure constants are stored sparsely: entry `i * dim + j` lists the
/// nonzero `(k, c_ijk)` with `e_i e_j = sum_k c_ijk e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Vector,
}

impl Algebra {
    /// `products[i * dim + j]` is the coordinate vector of `e_i e_j`.
    pub fn from_products(dim: usize, products: Vec<Vector>, unit: Vector) -> Result<Self> {
        if products.len() != dim * dim || products.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidInput("structure constant shape mismatch".into()));
        }
        if unit.len() != dim {
            return Err(Error::InvalidInput("unit has wrong length".into()));
        }
        let table = products
            .into_iter()
            .map(|p| {
                p.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        Ok(Self { dim, table, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.dim);
        for (k, c) in &self.table[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.table[i * self.dim + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(Scalar::zero, |(_, c)| c.clone())
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Scalar], exp: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..exp {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of `x -> a x`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul(a, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Matrix of `x -> x a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul(&self.basis_vector(j), a))
            .collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// The multiplication map `A (x) A -> A` as a `dim x dim^2` matrix, with
    /// `e_i (x) e_j` at column `i * dim + j`.
    pub fn mult_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim * self.dim);
        for (col, entries) in self.table.iter().enumerate() {
            for (k, c) in entries {
                m[(*k, col)] = c.clone();
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_associative(&self) -> bool {
        let left: Vec<Matrix> = (0..self.dim).map(|i| self.left_mul_matrix(&self.basis_vector(i))).collect();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let prod = self.basis_product(i, j);
                let mut lhs = Matrix::zeros(self.dim, self.dim);
                for (k, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        lhs = lhs.add(&left[k].scale(c));
                    }
                }
                lhs == left[i].mul(&left[j])
            })
        })
    }

    pub fn unit_is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_vector(i);
            self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e
        })
    }

    /// Basis (as columns) of the center.
    pub fn center(&self) -> Matrix {
        let blocks: Vec<Matrix> = (0..self.dim)
            .map(|i| {
                let e = self.basis_vector(i);
                self.right_mul_matrix(&e).sub(&self.left_mul_matrix(&e))
            })
            .collect();
        kernel(&Matrix::vstack(&blocks).expect("equal widths"))
    }

    /// Structure constants of the subspace spanned by `basis`, which must be
    /// closed under multiplication; `unit` is the element that acts as the
    /// identity there (for an ideal `eA` this is `e`, not `1_A`).
    pub fn restrict(&self, basis: &[Vector], unit: &[Scalar]) -> Result<(Algebra, Coordinates)> {
        let coords = Coordinates::new(self.dim, basis)?;
        let k = basis.len();
        let mut products = Vec::with_capacity(k * k);
        for a in basis {
            for b in basis {
                let p = self.mul(a, b);
                products.push(
                    coords
                        .of(&p)
                        .ok_or_else(|| Error::NotClosed("subspace not closed under product".into()))?,
                );
            }
        }
        let unit = coords
            .of(unit)
            .ok_or_else(|| Error::NotClosed("unit outside subspace".into()))?;
        Ok((Algebra::from_products(k, products, unit)?, coords))
    }

    /// Embeds `coords` (relative to `basis`) back into the ambient space.
    pub fn combine(basis: &[Vector], coords: &[Scalar]) -> Vector {
        let mut out = zero_vector(basis.first().map_or(0, Vec::len));
        for (b, c) in basis.iter().zip(coords) {
            axpy(&mut out, c, b);
        }
        out
    }
}

/// The quaternion algebra (-1, -1) over the rationals, basis `1, i, j, k`.
pub fn quaternions() -> Algebra {
    // table[a][b] = (sign, index) with e_a e_b = sign * e_index
    const TABLE: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let mut products = Vec::new();
    for row in TABLE {
        for (sign, idx) in row {
            let mut v = zero_vector(4);
            v[idx] = crate::linalg::int(sign);
            products.push(v);
        }
    }
    Algebra::from_products(4, products, unit_vector(4, 0)).expect("valid table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn quaternions_are_associative_noncommutative() {
        let q = quaternions();
        assert!(q.is_associative());
        assert!(q.unit_is_identity());
        assert!(!q.is_commutative());
        assert_eq!(q.center().cols(), 1);
        let i = q.basis_vector(1);
        assert_eq!(q.mul(&i, &i), vec![int(-1), int(0), int(0), int(0)]);
    }

    #[test]
    fn restrict_to_center() {
        let q = quaternions();
        let basis = q.center().columns();
        let (z, _) = q.restrict(&basis, q.unit()).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(z.unit_is_identity());
    }
}
