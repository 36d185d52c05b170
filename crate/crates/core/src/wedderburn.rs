//! Wedderburn-Artin decompositions of small semisimple rational algebras by
//! splitting along rational eigenvalues and, for 4-dimensional central
//! simple pieces, certifying `Mat_2(Q)` with a nonzero nilpotent.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, is_zero_vector, rref, scale_vector, solve, sub_vectors, Matrix, Scalar, Vector,
};

/// Default coordinate bound for the nilpotent scan.
pub const DEFAULT_SCAN_BOUND: i64 = 2;

/// Divisor enumeration in the rational-root test gives up above this size.
const MAX_ROOT_SEARCH: u64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    /// A commutative field factor split all the way to `Q`.
    Field,
    /// `Mat_2` over a center of dimension 1, certified by a nilpotent.
    Matrix2OverCenter,
    /// A noncommutative division algebra. Neither routine certifies this
    /// case; it is part of the report vocabulary only.
    DivisionNoncommutative,
    /// Not split further by the available methods.
    Undetermined,
}

impl ComponentKind {
    pub fn label(&self) -> &'static str {
        match self {
            ComponentKind::Field => "field",
            ComponentKind::Matrix2OverCenter => "matrix2_over_center",
            ComponentKind::DivisionNoncommutative => "division_noncommutative",
            ComponentKind::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub dim: usize,
    pub center_dim: usize,
    pub kind: ComponentKind,
    /// Central idempotent cutting out this component.
    pub idempotent: Vector,
    /// A nonzero element squaring to zero, when one was found.
    pub nilpotent: Option<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnReport {
    pub components: Vec<Component>,
}

impl WedderburnReport {
    /// Sorted `(dim, center_dim, kind)` triples.
    pub fn shape(&self) -> Vec<(usize, usize, ComponentKind)> {
        let mut shape: Vec<_> = self.components.iter().map(|c| (c.dim, c.center_dim, c.kind)).collect();
        shape.sort();
        shape
    }

    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim).sum()
    }

    /// Component idempotents are orthogonal idempotents summing to the unit.
    pub fn idempotents_are_complete(&self, algebra: &Algebra) -> bool {
        let es: Vec<&Vector> = self.components.iter().map(|c| &c.idempotent).collect();
        let mut sum = vec![Scalar::zero(); algebra.dim()];
        for e in &es {
            axpy(&mut sum, &Scalar::one(), e);
        }
        sum == *algebra.unit()
            && es.iter().enumerate().all(|(i, e)| {
                es.iter().enumerate().all(|(j, f)| {
                    let prod = algebra.mul(e, f);
                    if i == j {
                        prod == **e
                    } else {
                        is_zero_vector(&prod)
                    }
                })
            })
    }

    /// `1 x 1 x ...` and `Mat_2` pieces written as e.g. `Q x Q x Mat2(Q)`.
    pub fn describe(&self) -> String {
        self.shape()
            .iter()
            .map(|&(dim, center, kind)| match kind {
                ComponentKind::Field if dim == 1 => "Q".to_string(),
                ComponentKind::Matrix2OverCenter if center == 1 => "Mat2(Q)".to_string(),
                _ => format!("[{kind} dim {dim}]"),
            })
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Monic minimal polynomial (coefficients low to high) of `x` inside the
/// unital subalgebra with unit `unit`.
pub fn minimal_polynomial(algebra: &Algebra, unit: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let mut powers: Vec<Vector> = vec![unit.to_vec()];
    loop {
        let next = algebra.mul(x, powers.last().expect("nonempty"));
        let m = Matrix::from_columns(algebra.dim(), &powers).expect("column length");
        let rhs = Matrix::from_columns(algebra.dim(), std::slice::from_ref(&next)).expect("column length");
        if let Some(c) = solve(&m, &rhs) {
            if m.mul(&c).column(0) == next {
                let mut poly: Vec<Scalar> = (0..powers.len()).map(|i| -c[(i, 0)].clone()).collect();
                poly.push(Scalar::one());
                return poly;
            }
        }
        powers.push(next);
    }
}

fn eval_poly(poly: &[Scalar], t: &Scalar) -> Scalar {
    poly.iter().rev().fold(Scalar::zero(), |acc, c| acc * t + c)
}

/// Quotient of `poly` by `t - root`.
fn deflate(poly: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    let n = poly.len() - 1;
    let mut out = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for i in (0..n).rev() {
        carry = &poly[i + 1] + &carry * root;
        out[i] = carry.clone();
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots, in increasing order. `None` when the
/// coefficients are too large for the divisor search.
pub fn rational_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = poly.iter().map(|c| (c * Scalar::from(lcm.clone())).to_integer()).collect();
    while ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() > 1 && ints[0].is_zero() {
        roots.push(Scalar::zero());
        while ints.len() > 1 && ints[0].is_zero() {
            ints.remove(0);
        }
    }
    if ints.len() > 1 {
        let a0 = ints[0].abs().to_u64().filter(|&v| v <= MAX_ROOT_SEARCH)?;
        let an = ints.last().expect("nonempty").abs().to_u64().filter(|&v| v <= MAX_ROOT_SEARCH)?;
        let reduced: Vec<Scalar> = ints.iter().map(|c| Scalar::from(c.clone())).collect();
        for num in divisors(a0) {
            for den in divisors(an) {
                for sign in [1i64, -1] {
                    let candidate = Scalar::new(BigInt::from(num) * sign, BigInt::from(den));
                    if eval_poly(&reduced, &candidate).is_zero() && !roots.contains(&candidate) {
                        roots.push(candidate);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// `poly(x)` with `t^0 = unit`.
fn eval_in_algebra(algebra: &Algebra, unit: &[Scalar], poly: &[Scalar], x: &[Scalar]) -> Vector {
    let mut acc = vec![Scalar::zero(); algebra.dim()];
    for c in poly.iter().rev() {
        acc = algebra.mul(x, &acc);
        axpy(&mut acc, c, unit);
    }
    acc
}

/// A maximal independent subset, in order.
fn independent(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (_, pivots) = rref(&Matrix::from_columns(dim, vectors).expect("column length"));
    pivots.into_iter().map(|j| vectors[j].clone()).collect()
}

/// A piece `eA` of a commutative algebra.
#[derive(Clone, Debug)]
struct Piece {
    idempotent: Vector,
    basis: Vec<Vector>,
}

/// Splits `piece` by the rational eigenvalues of multiplication by `e x`.
fn split_piece(algebra: &Algebra, piece: &Piece, x: &[Scalar]) -> Option<Vec<Piece>> {
    let e = &piece.idempotent;
    let y = algebra.mul(e, x);
    let poly = minimal_polynomial(algebra, e, &y);
    if poly.len() <= 2 {
        return None;
    }
    let roots = rational_roots(&poly)?;
    if roots.is_empty() {
        return None;
    }
    let mut pieces = Vec::new();
    let mut rest = e.clone();
    for root in &roots {
        let q = deflate(&poly, root);
        let q_at_root = eval_poly(&q, root);
        if q_at_root.is_zero() {
            // repeated root: not semisimple along this element
            return None;
        }
        let f = scale_vector(&(Scalar::one() / q_at_root), &eval_in_algebra(algebra, e, &q, &y));
        rest = sub_vectors(&rest, &f);
        pieces.push(f);
    }
    if !is_zero_vector(&rest) {
        pieces.push(rest);
    }
    if pieces.len() < 2 {
        return None;
    }
    Some(
        pieces
            .into_iter()
            .map(|f| {
                let products: Vec<Vector> = piece.basis.iter().map(|b| algebra.mul(&f, b)).collect();
                Piece { basis: independent(&products, algebra.dim()), idempotent: f }
            })
            .collect(),
    )
}

/// Basis elements, then pairwise sums of basis elements.
fn element_sequence(dim: usize) -> Vec<Vector> {
    let e = |i: usize| crate::linalg::unit_vector(dim, i);
    let mut seq: Vec<Vector> = (0..dim).map(e).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            seq.push(crate::linalg::add_vectors(&e(i), &e(j)));
        }
    }
    seq
}

fn split_commutative(algebra: &Algebra) -> Vec<Piece> {
    let dim = algebra.dim();
    let all: Vec<Vector> = (0..dim).map(|i| algebra.basis_vector(i)).collect();
    let mut pieces = vec![Piece { idempotent: algebra.unit().clone(), basis: all }];
    for x in element_sequence(dim) {
        if pieces.iter().all(|p| p.basis.len() == 1) {
            break;
        }
        pieces = pieces
            .into_iter()
            .flat_map(|p| {
                if p.basis.len() == 1 {
                    return vec![p];
                }
                split_piece(algebra, &p, &x).unwrap_or_else(|| vec![p])
            })
            .collect();
    }
    pieces
}

/// Splits a commutative algebra into pieces along rational eigenvalues.
/// One-dimensional pieces are `Q`; anything left is `Undetermined`.
pub fn commutative_wedderburn(algebra: &Algebra) -> Result<WedderburnReport> {
    if !algebra.is_commutative() {
        return Err(Error::InvalidInput("commutative_wedderburn needs a commutative algebra".into()));
    }
    let components = split_commutative(algebra)
        .into_iter()
        .map(|p| Component {
            dim: p.basis.len(),
            center_dim: p.basis.len(),
            kind: if p.basis.len() == 1 { ComponentKind::Field } else { ComponentKind::Undetermined },
            idempotent: p.idempotent,
            nilpotent: None,
        })
        .collect();
    Ok(WedderburnReport { components })
}

fn is_nonzero_square_zero(algebra: &Algebra, x: &[Scalar]) -> bool {
    !is_zero_vector(x) && is_zero_vector(&algebra.mul(x, x))
}

/// Odometer over `[-bound, bound]^n`, skipping the zero vector.
fn scan_nilpotent(algebra: &Algebra, basis: &[Vector], bound: i64) -> Option<Vector> {
    let n = basis.len();
    let mut digits = vec![-bound; n];
    loop {
        if digits.iter().any(|&d| d != 0) {
            let coords: Vec<Scalar> = digits.iter().map(|&d| Scalar::from_integer(d.into())).collect();
            let x = Algebra::combine(basis, &coords);
            if is_nonzero_square_zero(algebra, &x) {
                return Some(x);
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return None;
            }
            digits[k] += 1;
            if digits[k] <= bound {
                break;
            }
            digits[k] = -bound;
            k += 1;
        }
    }
}

/// Central idempotents from splitting the center, then per component:
/// commutative pieces of dimension 1 are `Q`; a 4-dimensional piece with
/// 1-dimensional center is `Mat_2(Q)` once a nonzero nilpotent is found among
/// the projected `witnesses` or by scanning coordinates in `[-bound, bound]`.
pub fn noncommutative_wedderburn(algebra: &Algebra, witnesses: &[Vector], bound: i64) -> Result<WedderburnReport> {
    let dim = algebra.dim();
    let center_basis = algebra.center().columns();
    let (center, _) = algebra.restrict(&center_basis, algebra.unit())?;
    let center_pieces = split_commutative(&center);
    let mut components = Vec::new();
    for piece in center_pieces {
        let e = Algebra::combine(&center_basis, &piece.idempotent);
        let center_dim = piece.basis.len();
        let products: Vec<Vector> = (0..dim).map(|i| algebra.mul(&e, &algebra.basis_vector(i))).collect();
        let basis = independent(&products, dim);
        let component_dim = basis.len();
        let (kind, nilpotent) = if component_dim == center_dim {
            let kind = if center_dim == 1 { ComponentKind::Field } else { ComponentKind::Undetermined };
            (kind, None)
        } else if center_dim == 1 && component_dim == 4 {
            let nilpotent = witnesses
                .iter()
                .map(|w| algebra.mul(&e, w))
                .find(|x| is_nonzero_square_zero(algebra, x))
                .or_else(|| scan_nilpotent(algebra, &basis, bound));
            match nilpotent {
                Some(x) => (ComponentKind::Matrix2OverCenter, Some(x)),
                None => (ComponentKind::Undetermined, None),
            }
        } else {
            (ComponentKind::Undetermined, None)
        };
        components.push(Component { dim: component_dim, center_dim, kind, idempotent: e, nilpotent });
    }
    Ok(WedderburnReport { components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quaternions;
    use crate::groups::{cyclic, dihedral};
    use crate::hopf::group_algebra_hopf;
    use crate::linalg::{frac, int};

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rational_root_extraction() {
        // (t - 1)(t + 1/2) t = t^3 - t^2/2 - t/2
        let poly = vec![int(0), frac(-1, 2), frac(-1, 2), int(1)];
        assert_eq!(rational_roots(&poly).unwrap(), vec![frac(-1, 2), int(0), int(1)]);
        // t^2 + t + 1
        assert_eq!(rational_roots(&ints(&[1, 1, 1])).unwrap(), vec![]);
        assert_eq!(deflate(&ints(&[-1, 0, 1]), &int(1)), ints(&[1, 1]));
    }

    #[test]
    fn minimal_polynomial_of_group_element() {
        let h = group_algebra_hopf(&cyclic(3).unwrap());
        let g = h.algebra.basis_vector(1);
        assert_eq!(minimal_polynomial(&h.algebra, h.algebra.unit(), &g), ints(&[-1, 0, 0, 1]));
    }

    #[test]
    fn c2_splits_into_two_rationals() {
        let h = group_algebra_hopf(&cyclic(2).unwrap());
        let report = commutative_wedderburn(&h.algebra).unwrap();
        assert_eq!(report.shape(), vec![(1, 1, ComponentKind::Field); 2]);
        let mut es: Vec<Vector> = report.components.iter().map(|c| c.idempotent.clone()).collect();
        es.sort();
        assert_eq!(es, vec![vec![frac(1, 2), frac(-1, 2)], vec![frac(1, 2), frac(1, 2)]]);
        assert!(report.idempotents_are_complete(&h.algebra));
    }

    #[test]
    fn c3_leaves_a_quadratic_field() {
        let h = group_algebra_hopf(&cyclic(3).unwrap());
        let report = commutative_wedderburn(&h.algebra).unwrap();
        assert_eq!(report.shape(), vec![(1, 1, ComponentKind::Field), (2, 2, ComponentKind::Undetermined)]);
        assert!(report.idempotents_are_complete(&h.algebra));
    }

    #[test]
    fn d3_group_algebra_shape() {
        let h = group_algebra_hopf(&dihedral(3).unwrap());
        let report = noncommutative_wedderburn(&h.algebra, &[], DEFAULT_SCAN_BOUND).unwrap();
        assert_eq!(
            report.shape(),
            vec![
                (1, 1, ComponentKind::Field),
                (1, 1, ComponentKind::Field),
                (4, 1, ComponentKind::Matrix2OverCenter)
            ]
        );
        assert_eq!(report.describe(), "Q x Q x Mat2(Q)");
        assert!(report.idempotents_are_complete(&h.algebra));
    }

    #[test]
    fn quaternions_have_no_nilpotent() {
        let q = quaternions();
        let report = noncommutative_wedderburn(&q, &[], DEFAULT_SCAN_BOUND).unwrap();
        assert_eq!(report.shape(), vec![(4, 1, ComponentKind::Undetermined)]);
        assert!(report.components[0].nilpotent.is_none());
    }

    #[test]
    fn noncommutative_input_rejected_by_commutative_split() {
        assert!(commutative_wedderburn(&quaternions()).is_err());
    }
}
