//! Concrete Galois algebras over the rationals: the splitting field of
//! `x^3 - v` with its `D_3` action, quadratic fields, and the split model
//! `Maps(G, Q)` with translation action.

use std::collections::VecDeque;

use num_traits::{One, Signed, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::groups::{cyclic, FiniteGroup};
use crate::linalg::{
    int, integer_normalize, kernel, scale_vector, unit_vector, zero_vector, Matrix, Scalar, Vector,
};

/// A commutative algebra with a faithful group action by automorphisms.
#[derive(Clone, Debug)]
pub struct GaloisAlgebra {
    name: String,
    algebra: Algebra,
    group: FiniteGroup,
    action: Vec<Matrix>,
    basis_names: Vec<String>,
}

impl GaloisAlgebra {
    /// Builds the action of every group element from the matrices of the
    /// group's generators, using `M(t x) = M(t) M(x)`. Fails if two words for
    /// the same element disagree.
    pub fn from_generator_action(
        name: impl Into<String>,
        algebra: Algebra,
        group: FiniteGroup,
        generator_action: Vec<Matrix>,
        basis_names: Vec<String>,
    ) -> Result<Self> {
        let dim = algebra.dim();
        if generator_action.len() != group.generators().len() {
            return Err(Error::InvalidGaloisAlgebra("one matrix per generator required".into()));
        }
        let mut action: Vec<Option<Matrix>> = vec![None; group.order()];
        action[group.identity()] = Some(Matrix::identity(dim));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            let mx = action[x].clone().expect("queued");
            for (&t, mt) in group.generators().iter().zip(&generator_action) {
                let y = group.mul(t, x);
                let my = mt.mul(&mx);
                match &action[y] {
                    Some(existing) if *existing != my => {
                        return Err(Error::InvalidGaloisAlgebra(format!(
                            "action is not a homomorphism at {}",
                            group.name(y)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        action[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let action = action.into_iter().map(|m| m.expect("generators generate")).collect();
        Ok(Self { name: name.into(), algebra, group, action, basis_names })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.action[g]
    }

    pub fn act(&self, g: usize, v: &[Scalar]) -> Vector {
        self.action[g].mul_vec(v)
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    /// Embeds a rational as `q * 1`.
    pub fn scalar(&self, q: &Scalar) -> Vector {
        scale_vector(q, self.unit())
    }

    /// `Some(q)` if `x = q * 1`.
    pub fn as_rational(&self, x: &[Scalar]) -> Option<Scalar> {
        let unit = self.unit();
        let pivot = unit.iter().position(|c| !c.is_zero())?;
        let q = &x[pivot] / &unit[pivot];
        (scale_vector(&q, unit) == x).then_some(q)
    }

    /// Renders an element using the basis names.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let terms: Vec<String> = x
            .iter()
            .zip(&self.basis_names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| {
                if name == "1" {
                    c.to_string()
                } else if c.is_one() {
                    name.clone()
                } else if *c == -Scalar::one() {
                    format!("-{name}")
                } else {
                    format!("{c}{name}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    /// Named invariant checks; all must hold for a Galois algebra.
    pub fn invariant_checks(&self) -> Vec<(&'static str, bool)> {
        let a = &self.algebra;
        let dim = a.dim();
        let automorphisms = self.action.iter().all(|m| {
            m.mul_vec(a.unit()) == *a.unit()
                && (0..dim).all(|i| {
                    (0..dim).all(|j| {
                        let lhs = m.mul_vec(&a.basis_product(i, j));
                        let rhs = a.mul(&m.column(i), &m.column(j));
                        lhs == rhs
                    })
                })
        });
        let g = &self.group;
        let homomorphism = self.action[g.identity()] == Matrix::identity(dim)
            && (0..g.order()).all(|x| {
                (0..g.order()).all(|y| self.action[g.mul(x, y)] == self.action[x].mul(&self.action[y]))
            });
        let fixed = self.fixed_space(&(0..g.order()).collect::<Vec<_>>());
        let galois = fixed.len() == 1 && self.as_rational(&fixed[0]).is_some();
        vec![
            ("commutative", a.is_commutative()),
            ("associative", a.is_associative()),
            ("unit", a.unit_is_identity()),
            ("automorphisms", automorphisms),
            ("homomorphism", homomorphism),
            ("fixed_space_is_rationals", galois),
        ]
    }

    pub fn validate(&self) -> Result<()> {
        match self.invariant_checks().into_iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(Error::InvalidGaloisAlgebra(format!("{} fails {name}", self.name))),
            None => Ok(()),
        }
    }

    /// Integer-normalized basis of the vectors fixed by every listed element.
    pub fn fixed_space(&self, elements: &[usize]) -> Vec<Vector> {
        let dim = self.dim();
        let blocks: Vec<Matrix> = elements
            .iter()
            .map(|&g| self.action[g].sub(&Matrix::identity(dim)))
            .collect();
        let stacked = if blocks.is_empty() {
            Matrix::zeros(0, dim)
        } else {
            Matrix::vstack(&blocks).expect("square blocks")
        };
        let mut basis = kernel(&stacked).columns();
        for v in &mut basis {
            integer_normalize(v);
        }
        basis
    }

    /// Sign character `χ(g) = ±1`, trivial exactly on the subgroup generated
    /// by squares, which must have index 2.
    pub fn sign_character(&self) -> Result<Vec<i64>> {
        let g = &self.group;
        let squares: Vec<usize> = (0..g.order()).map(|x| g.mul(x, x)).collect();
        let kernel = g.subgroup_generated(&squares);
        if 2 * kernel.len() != g.order() {
            return Err(Error::InvalidGaloisAlgebra(
                "acting group has no unique sign character".into(),
            ));
        }
        Ok((0..g.order()).map(|x| if kernel.contains(&x) { 1 } else { -1 }).collect())
    }
}

/// Subalgebra spanned by the given columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub basis: Vec<Vector>,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn is_rational_cube(q: &Scalar) -> bool {
    let cube = |n: &num_bigint::BigInt| {
        let r = n.abs().cbrt();
        &r * &r * &r == n.abs()
    };
    cube(q.numer()) && cube(q.denom())
}

/// Multiplication table of `Q[α, ζ]/(α^3 - v, ζ^2 + ζ + 1)` on the basis
/// `α^i ζ^j` at index `i + 3j`.
fn cubic_products(v: &Scalar) -> Vec<Vector> {
    let mut products = Vec::with_capacity(36);
    for a in 0..6 {
        for b in 0..6 {
            let (i, j) = (a % 3 + b % 3, a / 3 + b / 3);
            // α^i with i < 6
            let (alpha_pow, alpha_coeff) = if i >= 3 { (i - 3, v.clone()) } else { (i, Scalar::one()) };
            // ζ^j with j < 3: ζ^2 = -1 - ζ
            let zeta: Vec<(usize, Scalar)> = match j {
                0 => vec![(0, Scalar::one())],
                1 => vec![(1, Scalar::one())],
                _ => vec![(0, -Scalar::one()), (1, -Scalar::one())],
            };
            let mut out = zero_vector(6);
            for (zp, zc) in zeta {
                out[alpha_pow + 3 * zp] += &alpha_coeff * zc;
            }
            products.push(out);
        }
    }
    products
}

/// Matrix of the algebra endomorphism sending each generator to the given
/// image, where basis element `k` is the product of generator powers
/// `exponents(k)`.
fn endomorphism_matrix(algebra: &Algebra, images: &[Vector], exponents: impl Fn(usize) -> Vec<usize>) -> Matrix {
    let cols: Vec<Vector> = (0..algebra.dim())
        .map(|k| {
            exponents(k)
                .iter()
                .zip(images)
                .fold(algebra.unit().clone(), |acc, (&e, img)| algebra.mul(&acc, &algebra.pow(img, e)))
        })
        .collect();
    Matrix::from_columns(algebra.dim(), &cols).expect("square")
}

/// Splitting field of `x^3 - v` over the rationals with basis
/// `(1, α, α², ζ, αζ, α²ζ)` and `r(α) = ζα, r(ζ) = ζ, s(α) = α, s(ζ) = ζ²`.
pub fn splitting_field_cubic(v: &Scalar) -> Result<GaloisAlgebra> {
    if v.is_zero() || is_rational_cube(v) {
        return Err(Error::InvalidInput(format!("{v} is a rational cube")));
    }
    let algebra = Algebra::from_products(6, cubic_products(v), unit_vector(6, 0))?;
    let exps = |k: usize| vec![k % 3, k / 3];
    let alpha = unit_vector(6, 1);
    let zeta = unit_vector(6, 3);
    let zeta_alpha = unit_vector(6, 4);
    let zeta_sq = algebra.mul(&zeta, &zeta);
    let r = endomorphism_matrix(&algebra, &[zeta_alpha, zeta.clone()], exps);
    let s = endomorphism_matrix(&algebra, &[alpha, zeta_sq], exps);
    let names = ["1", "α", "α²", "ζ", "αζ", "α²ζ"].iter().map(|s| s.to_string()).collect();
    let field = GaloisAlgebra::from_generator_action(
        format!("cubic:{v}"),
        algebra,
        crate::groups::dihedral(3)?,
        vec![r, s],
        names,
    )?;
    field.validate()?;
    Ok(field)
}

/// `Q[z]/(z^2 - b)` with `C_2` acting by `z -> -z`.
pub fn quadratic_field(b: &Scalar) -> Result<GaloisAlgebra> {
    let is_square = |n: &num_bigint::BigInt| !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    };
    if is_square(b.numer()) && is_square(b.denom()) {
        return Err(Error::InvalidInput(format!("{b} is a rational square")));
    }
    let products = vec![
        vec![int(1), int(0)],
        vec![int(0), int(1)],
        vec![int(0), int(1)],
        vec![b.clone(), int(0)],
    ];
    let algebra = Algebra::from_products(2, products, unit_vector(2, 0))?;
    let conj = Matrix::from_i64(2, 2, &[1, 0, 0, -1])?;
    let field = GaloisAlgebra::from_generator_action(
        format!("quadratic:{b}"),
        algebra,
        cyclic(2)?,
        vec![conj],
        vec!["1".into(), "z".into()],
    )?;
    field.validate()?;
    Ok(field)
}

/// `Maps(G, Q)`: indicator functions `δ_g` with pointwise product and
/// `g · δ_h = δ_{gh}`.
pub fn split_model(group: &FiniteGroup) -> GaloisAlgebra {
    let n = group.order();
    let mut products = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            products.push(if i == j { unit_vector(n, i) } else { zero_vector(n) });
        }
    }
    let algebra = Algebra::from_products(n, products, vec![Scalar::one(); n]).expect("valid table");
    let translation = |g: usize| {
        let mut m = Matrix::zeros(n, n);
        for h in 0..n {
            m[(group.mul(g, h), h)] = Scalar::one();
        }
        m
    };
    let gens = group.generators().iter().map(|&g| translation(g)).collect();
    let names = (0..n).map(|h| format!("δ[{}]", group.name(h))).collect();
    GaloisAlgebra::from_generator_action("split", algebra, group.clone(), gens, names)
        .expect("translation action is a homomorphism")
}

/// Fixed subalgebra of the subgroup generated by `elements`.
pub fn fixed_subalgebra(field: &GaloisAlgebra, elements: &[usize]) -> Result<Subalgebra> {
    let subgroup = field.group().subgroup_generated(elements);
    let basis = field.fixed_space(&subgroup);
    let coords = crate::linalg::Coordinates::new(field.dim(), &basis)?;
    if !coords.contains(field.unit()) {
        return Err(Error::NotClosed("fixed space misses the unit".into()));
    }
    for a in &basis {
        for b in &basis {
            if !coords.contains(&field.mul(a, b)) {
                return Err(Error::NotClosed("fixed space is not multiplicatively closed".into()));
            }
        }
    }
    Ok(Subalgebra { basis })
}

/// `√d`: a nonzero `w` with `g(w) = χ(g) w` for the sign character `χ` and
/// `w² = d · 1`. Returns `(w, d)`.
pub fn sqrt_d_witness(field: &GaloisAlgebra) -> Result<(Vector, Scalar)> {
    let chi = field.sign_character()?;
    let dim = field.dim();
    let blocks: Vec<Matrix> = field
        .group()
        .generators()
        .iter()
        .map(|&g| field.action(g).sub(&Matrix::identity(dim).scale(&int(chi[g]))))
        .collect();
    let mut candidates = kernel(&Matrix::vstack(&blocks)?).columns();
    if candidates.len() != 1 {
        return Err(Error::InvalidGaloisAlgebra(format!(
            "sign eigenspace has dimension {}",
            candidates.len()
        )));
    }
    let mut w = candidates.remove(0);
    integer_normalize(&mut w);
    let d = field
        .as_rational(&field.mul(&w, &w))
        .ok_or_else(|| Error::InvalidGaloisAlgebra("square of the sign witness is not rational".into()))?;
    Ok((w, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::dihedral;
    use crate::linalg::frac;

    #[test]
    fn cubic_relations() {
        let l = splitting_field_cubic(&int(2)).unwrap();
        let (r, s) = (l.action(1), l.action(3));
        assert_eq!(r.mul(r).mul(r), Matrix::identity(6));
        assert_eq!(s.mul(s), Matrix::identity(6));
        let r_inv = r.mul(r);
        assert_eq!(s.mul(r).mul(s), r_inv);
        let alpha = unit_vector(6, 1);
        let cube = l.algebra().pow(&alpha, 3);
        assert_eq!(cube, l.scalar(&int(2)));
    }

    #[test]
    fn cubic_fixed_fields() {
        let l = splitting_field_cubic(&int(2)).unwrap();
        assert_eq!(l.fixed_space(&[1, 3]), vec![unit_vector(6, 0)]);
        assert_eq!(fixed_subalgebra(&l, &[1]).unwrap().dim(), 2);
        let s_fixed = fixed_subalgebra(&l, &[3]).unwrap();
        assert_eq!(s_fixed.basis, vec![unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)]);
        assert_eq!(fixed_subalgebra(&l, &[0, 1, 3]).unwrap().dim(), 1);
    }

    #[test]
    fn cubic_rejects_cubes() {
        assert!(splitting_field_cubic(&int(8)).is_err());
        assert!(splitting_field_cubic(&frac(-27, 64)).is_err());
        assert!(splitting_field_cubic(&int(0)).is_err());
        assert!(splitting_field_cubic(&frac(3, 8)).is_ok());
    }

    #[test]
    fn quadratic_field_models_sqrt_minus_three() {
        let f = quadratic_field(&int(-3)).unwrap();
        let z = unit_vector(2, 1);
        assert_eq!(f.mul(&z, &z), f.scalar(&int(-3)));
        assert_eq!(f.fixed_space(&[1]), vec![unit_vector(2, 0)]);
        let (w, d) = sqrt_d_witness(&f).unwrap();
        assert_eq!((w, d), (z, int(-3)));
        assert!(quadratic_field(&frac(9, 4)).is_err());
    }

    #[test]
    fn split_model_basics() {
        let d3 = dihedral(3).unwrap();
        let m = split_model(&d3);
        assert!(m.validate().is_ok());
        let (e0, e1) = (unit_vector(6, 0), unit_vector(6, 1));
        assert_eq!(m.mul(&e0, &e0), e0);
        assert_eq!(m.mul(&e0, &e1), zero_vector(6));
        assert_eq!(split_model(&dihedral(5).unwrap()).dim(), 10);
    }

    #[test]
    fn sign_witnesses() {
        let l = splitting_field_cubic(&int(2)).unwrap();
        let (w, d) = sqrt_d_witness(&l).unwrap();
        assert_eq!(w, vec![int(1), int(0), int(0), int(2), int(0), int(0)]);
        assert_eq!(d, int(-3));

        let m = split_model(&dihedral(3).unwrap());
        let (w, d) = sqrt_d_witness(&m).unwrap();
        let expected: Vec<Scalar> = [1, 1, 1, -1, -1, -1].iter().map(|&x| int(x)).collect();
        assert_eq!(w, expected);
        assert_eq!(d, int(1));
    }
}
