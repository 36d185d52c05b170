//! The presentation `Q[x, y]/I` of the commutative Hopf algebra `H_0`, with
//! `I = (y² - b x² + u, (x-2)(x-1)(x+1)(x+2), (x-1)(x+1) x y)` and `u = 4b`,
//! its six rational points, and its isomorphism to the descended `H_0`.
//!
//! Basis order: `1, x, x², x³, y, xy`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::algebra::Algebra;
use crate::descent::DescendedHopf;
use crate::error::{Error, Result};
use crate::galois::sqrt_d_witness;
use crate::hopf::{check_hopf_morphism, HopfPresentation};
use crate::linalg::{add_vectors, int, solve, sub_vectors, zero_vector, Matrix, Scalar, Vector};
use crate::wedderburn::{commutative_wedderburn, WedderburnReport};

/// Normal-form monomials `x^i y^j`, in basis order.
pub const MONOMIALS: [(usize, usize); 6] = [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1)];

fn monomial_index(i: usize, j: usize) -> Option<usize> {
    MONOMIALS.iter().position(|&m| m == (i, j))
}

/// The rewrite rules generating the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// `x⁴ -> 5x² - 4`
    QuarticX,
    /// `y² -> b x² - u`
    SquareY,
    /// `x² y -> y`
    MixedXY,
}

impl Rule {
    fn applies(&self, (i, j): (usize, usize)) -> bool {
        match self {
            Rule::QuarticX => i >= 4,
            Rule::SquareY => j >= 2,
            Rule::MixedXY => i >= 2 && j >= 1,
        }
    }

    /// Replacement for `x^i y^j` after one application.
    fn rewrite(&self, (i, j): (usize, usize), b: &Scalar) -> Vec<((usize, usize), Scalar)> {
        match self {
            Rule::QuarticX => vec![((i - 2, j), int(5)), ((i - 4, j), int(-4))],
            Rule::SquareY => vec![((i + 2, j - 2), b.clone()), ((i, j - 2), -(b * int(4)))],
            Rule::MixedXY => vec![((i - 2, j), Scalar::one())],
        }
    }
}

pub const DEFAULT_RULE_ORDER: [Rule; 3] = [Rule::QuarticX, Rule::SquareY, Rule::MixedXY];

/// Reduces `x^i y^j`, always rewriting the largest reducible monomial with
/// the first applicable rule in `order`.
pub fn normal_form_with_order(b: &Scalar, i: usize, j: usize, order: &[Rule]) -> Vector {
    // keyed by (j, i) so the last entry is the largest in the reduction order
    let mut poly: BTreeMap<(usize, usize), Scalar> = BTreeMap::from([((j, i), Scalar::one())]);
    loop {
        let reducible = poly
            .iter()
            .rev()
            .find_map(|(&(j, i), c)| order.iter().find(|r| r.applies((i, j))).map(|r| ((i, j), c.clone(), *r)));
        let Some((mono, coeff, rule)) = reducible else { break };
        poly.remove(&(mono.1, mono.0));
        for ((ni, nj), c) in rule.rewrite(mono, b) {
            let entry = poly.entry((nj, ni)).or_insert_with(Scalar::zero);
            *entry += &coeff * c;
            if entry.is_zero() {
                poly.remove(&(nj, ni));
            }
        }
    }
    let mut out = zero_vector(6);
    for ((j, i), c) in poly {
        out[monomial_index(i, j).expect("irreducible monomials are in the basis")] = c;
    }
    out
}

pub fn normal_form(b: &Scalar, i: usize, j: usize) -> Vector {
    normal_form_with_order(b, i, j, &DEFAULT_RULE_ORDER)
}

/// All rule priorities agree on `x^i y^j` for `i <= max_i`, `j <= max_j`.
pub fn rewrite_is_confluent(b: &Scalar, max_i: usize, max_j: usize) -> bool {
    use Rule::*;
    let orders = [
        [QuarticX, SquareY, MixedXY],
        [QuarticX, MixedXY, SquareY],
        [SquareY, QuarticX, MixedXY],
        [SquareY, MixedXY, QuarticX],
        [MixedXY, QuarticX, SquareY],
        [MixedXY, SquareY, QuarticX],
    ];
    (0..=max_i).all(|i| {
        (0..=max_j).all(|j| {
            let reference = normal_form_with_order(b, i, j, &orders[0]);
            orders[1..].iter().all(|o| normal_form_with_order(b, i, j, o) == reference)
        })
    })
}

#[derive(Clone, Debug)]
pub struct HpAlgebra {
    pub b: Scalar,
    pub hopf: HopfPresentation,
}

fn is_rational_square(q: &Scalar) -> bool {
    let square = |n: &num_bigint::BigInt| {
        let r = n.sqrt();
        &r * &r == *n
    };
    !q.is_negative() && square(q.numer()) && square(q.denom())
}

/// Product in `H (x) H`, elements as `n²` coefficient vectors.
fn tensor_product(algebra: &Algebra, a: &[Scalar], c: &[Scalar]) -> Vector {
    let n = algebra.dim();
    let mut out = zero_vector(n * n);
    for (ij, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (kl, y) in c.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            let left = algebra.basis_product(ij / n, kl / n);
            let right = algebra.basis_product(ij % n, kl % n);
            let coeff = x * y;
            for (p, l) in left.iter().enumerate().filter(|(_, l)| !l.is_zero()) {
                for (q, r) in right.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                    out[p * n + q] += &coeff * l * r;
                }
            }
        }
    }
    out
}

fn simple_tensor(n: usize, terms: &[(Scalar, usize, usize)]) -> Vector {
    let mut out = zero_vector(n * n);
    for (c, i, j) in terms {
        out[i * n + j] += c;
    }
    out
}

/// `Q[x, y]/I` with `Δ(x) = ½ x⊗x + (1/2b) y⊗y`, `Δ(y) = ½(x⊗y + y⊗x)`,
/// `ε(x) = 2`, `ε(y) = 0`, `σ(x) = x`, `σ(y) = -y`.
pub fn hp_algebra(b: &Scalar) -> Result<HpAlgebra> {
    if b.is_zero() || is_rational_square(b) {
        return Err(Error::InvalidInput(format!("b = {b} must be a nonzero non-square")));
    }
    let products = MONOMIALS
        .iter()
        .flat_map(|&(i, j)| MONOMIALS.iter().map(move |&(k, l)| (i + k, j + l)))
        .map(|(i, j)| normal_form(b, i, j))
        .collect();
    let algebra = Algebra::from_products(6, products, normal_form(b, 0, 0))?;
    let (x, y) = (1, 4);
    let half = Scalar::new(1.into(), 2.into());
    let delta_x = simple_tensor(6, &[(half.clone(), x, x), (Scalar::one() / (b * int(2)), y, y)]);
    let delta_y = simple_tensor(6, &[(half.clone(), x, y), (half, y, x)]);
    let unit_tensor = simple_tensor(6, &[(Scalar::one(), 0, 0)]);
    let mut comul_cols = Vec::with_capacity(6);
    let mut counit = Matrix::zeros(1, 6);
    let mut antipode = Matrix::zeros(6, 6);
    for (k, &(i, j)) in MONOMIALS.iter().enumerate() {
        let mut d = unit_tensor.clone();
        for _ in 0..i {
            d = tensor_product(&algebra, &d, &delta_x);
        }
        for _ in 0..j {
            d = tensor_product(&algebra, &d, &delta_y);
        }
        comul_cols.push(d);
        counit[(0, k)] = if j == 0 { int(1 << i) } else { Scalar::zero() };
        antipode[(k, k)] = if j % 2 == 0 { Scalar::one() } else { -Scalar::one() };
    }
    let comul = Matrix::from_columns(36, &comul_cols)?;
    let hopf = HopfPresentation { algebra, comul, counit, antipode, provenance: format!("HP(b = {b})") };
    Ok(HpAlgebra { b: b.clone(), hopf })
}

impl HpAlgebra {
    /// Value of each ideal generator at `(x, y)`.
    pub fn generators_at(&self, x: &Scalar, y: &Scalar) -> [Scalar; 3] {
        let u = &self.b * int(4);
        let one = Scalar::one();
        let two = int(2);
        [
            y * y - &self.b * x * x + u,
            (x - &two) * (x - &one) * (x + &one) * (x + &two),
            (x - &one) * (x + &one) * x * y,
        ]
    }

    /// Evaluation `x^i y^j -> x0^i y0^j` on the basis.
    pub fn evaluation(&self, x: &Scalar, y: &Scalar) -> Vector {
        MONOMIALS
            .iter()
            .map(|&(i, j)| num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j))
            .collect()
    }

    /// Evaluation at the point is a unital algebra map to `Q`.
    pub fn evaluation_is_algebra_map(&self, x: &Scalar, y: &Scalar) -> bool {
        let psi = self.evaluation(x, y);
        let apply = |v: &[Scalar]| v.iter().zip(&psi).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
        let algebra = &self.hopf.algebra;
        apply(algebra.unit()).is_one()
            && (0..6).all(|i| (0..6).all(|j| apply(&algebra.basis_product(i, j)) == &psi[i] * &psi[j]))
    }
}

/// The six rational points of `I` for `b = -3`.
pub fn variety_points() -> Vec<(Scalar, Scalar)> {
    [(-2, 0), (-1, 3), (1, 3), (2, 0), (1, -3), (-1, -3)]
        .iter()
        .map(|&(x, y)| (int(x), int(y)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyReport {
    pub generators_vanish: bool,
    pub algebra_maps: bool,
    pub pairwise_distinct: bool,
    pub evaluation_rank: usize,
}

impl VarietyReport {
    pub fn passes(&self) -> bool {
        self.generators_vanish && self.algebra_maps && self.pairwise_distinct && self.evaluation_rank == 6
    }
}

pub fn evaluation_matrix(hp: &HpAlgebra, points: &[(Scalar, Scalar)]) -> Result<Matrix> {
    Matrix::from_rows(&points.iter().map(|(x, y)| hp.evaluation(x, y)).collect::<Vec<_>>())
}

pub fn check_variety(hp: &HpAlgebra, points: &[(Scalar, Scalar)]) -> Result<VarietyReport> {
    let rows: Vec<Vector> = points.iter().map(|(x, y)| hp.evaluation(x, y)).collect();
    Ok(VarietyReport {
        generators_vanish: points.iter().all(|(x, y)| hp.generators_at(x, y).iter().all(Zero::is_zero)),
        algebra_maps: points.iter().all(|(x, y)| hp.evaluation_is_algebra_map(x, y)),
        pairwise_distinct: (0..rows.len()).all(|i| (i + 1..rows.len()).all(|j| rows[i] != rows[j])),
        evaluation_rank: evaluation_matrix(hp, points)?.rank(),
    })
}

/// `x -> η + η^{-1}`, `y -> w(η - η^{-1})` with `w² = d`, extended
/// multiplicatively to `HP(d) -> H_0`. Returns the matrix after checking it
/// is a Hopf isomorphism.
pub fn hp_iso_to_descended(hp: &HpAlgebra, h0: &DescendedHopf) -> Result<Matrix> {
    let a = &h0.group_algebra;
    let field = a.field();
    let (w, d) = sqrt_d_witness(field)?;
    if d != hp.b {
        return Err(Error::InvalidInput(format!("HP parameter {} differs from d = {d}", hp.b)));
    }
    let n = a.subgroup();
    let (eta, eta_inv) = (1, n.inv_index(1));
    let one = field.unit();
    let x_img = add_vectors(&a.pure(one, eta), &a.pure(one, eta_inv));
    let y_img = sub_vectors(&a.pure(&w, eta), &a.pure(&w, eta_inv));
    let cols: Vec<Vector> = MONOMIALS
        .iter()
        .map(|&(i, j)| {
            let mut v = a.unit();
            for _ in 0..i {
                v = a.mul(&v, &x_img);
            }
            for _ in 0..j {
                v = a.mul(&v, &y_img);
            }
            h0.coordinates(&v)
                .ok_or_else(|| Error::MapCheck(format!("image of x^{i} y^{j} is not in H_0")))
        })
        .collect::<Result<_>>()?;
    let phi = Matrix::from_columns(6, &cols)?;
    check_hopf_morphism(&hp.hopf, &h0.hopf, &phi)?;
    Ok(phi)
}

/// `HP(t² b) -> HP(b)`, `x -> x`, `y -> t y`, checked to be a Hopf
/// isomorphism.
pub fn rescaling_iso(b: &Scalar, t: &Scalar) -> Result<Matrix> {
    let source = hp_algebra(&(b * t * t))?;
    let target = hp_algebra(b)?;
    let mut phi = Matrix::zeros(6, 6);
    for (k, &(_, j)) in MONOMIALS.iter().enumerate() {
        phi[(k, k)] = num_traits::pow(t.clone(), j);
    }
    check_hopf_morphism(&source.hopf, &target.hopf, &phi)?;
    Ok(phi)
}

#[derive(Clone, Debug)]
pub struct Q6Report {
    pub wedderburn: WedderburnReport,
    /// The component idempotents are exactly the interpolants `e_j` with
    /// `e_j(P_k) = δ_jk` at the six points.
    pub idempotents_match_interpolants: bool,
}

impl Q6Report {
    pub fn passes(&self) -> bool {
        self.idempotents_match_interpolants
            && self.wedderburn.components.len() == 6
            && self.wedderburn.components.iter().all(|c| c.dim == 1)
    }
}

pub fn hp_q6_check(hp: &HpAlgebra, points: &[(Scalar, Scalar)]) -> Result<Q6Report> {
    let wedderburn = commutative_wedderburn(&hp.hopf.algebra)?;
    let e = evaluation_matrix(hp, points)?;
    let mut interpolants: Vec<Vector> = (0..points.len())
        .map(|j| {
            let rhs = Matrix::from_columns(points.len(), &[crate::linalg::unit_vector(points.len(), j)])?;
            solve(&e, &rhs)
                .map(|c| c.column(0))
                .ok_or_else(|| Error::MapCheck("interpolation system is singular".into()))
        })
        .collect::<Result<_>>()?;
    let mut idempotents: Vec<Vector> = wedderburn.components.iter().map(|c| c.idempotent.clone()).collect();
    interpolants.sort();
    idempotents.sort();
    Ok(Q6Report { wedderburn, idempotents_match_interpolants: interpolants == idempotents })
}
