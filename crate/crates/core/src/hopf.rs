//! Finite-dimensional Hopf algebras over the rationals given by exact
//! matrices, and verification of the Hopf axioms and of Hopf morphisms.
//!
//! Tensor bases follow `kronecker`: `h_i (x) h_j` sits at index `i * dim + j`.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{kronecker, rref, unit_vector, Matrix, Scalar, Vector};

#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub algebra: Algebra,
    /// `dim^2 x dim`; column `k` holds `Δ(h_k)`.
    pub comul: Matrix,
    /// `1 x dim`.
    pub counit: Matrix,
    /// `dim x dim`.
    pub antipode: Matrix,
    pub provenance: String,
}

/// One named pass/fail entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }
}

impl HopfPresentation {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn comul_of(&self, k: usize) -> Vector {
        self.comul.column(k)
    }

    pub fn counit_of(&self, k: usize) -> Scalar {
        self.counit[(0, k)].clone()
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    /// `Δ = τ ∘ Δ`.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|k| (0..n).all(|i| (0..n).all(|j| self.comul[(i * n + j, k)] == self.comul[(j * n + i, k)])))
    }

    /// Product of two elements of `H (x) H`. Writing `b` as an `n x n`
    /// matrix `X`, the product is `sum_ij a_ij L_i X L_j^T` with `L_i` the
    /// left multiplication by `h_i`.
    fn tensor_mul(&self, left_mul: &[Matrix], a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim();
        let x = Matrix::from_vec(n, n, b.to_vec()).expect("n^2 entries");
        let y: Vec<Option<Matrix>> = (0..n)
            .map(|j| {
                (0..n)
                    .any(|i| !a[i * n + j].is_zero())
                    .then(|| x.mul(&left_mul[j].transpose()))
            })
            .collect();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            let mut inner = Matrix::zeros(n, n);
            let mut any = false;
            for (j, yj) in y.iter().enumerate() {
                let c = &a[i * n + j];
                if let (false, Some(yj)) = (c.is_zero(), yj) {
                    inner = inner.add(&yj.scale(c));
                    any = true;
                }
            }
            if any {
                out = out.add(&left_mul[i].mul(&inner));
            }
        }
        out.entries().to_vec()
    }

    /// Basis indices that generate the algebra, chosen greedily.
    fn algebra_generators(&self) -> Vec<usize> {
        let n = self.dim();
        let mut gens: Vec<usize> = Vec::new();
        for candidate in 0..n {
            if generated_dim(&self.algebra, &gens) == n {
                break;
            }
            let mut trial = gens.clone();
            trial.push(candidate);
            if generated_dim(&self.algebra, &trial) > generated_dim(&self.algebra, &gens) {
                gens = trial;
            }
        }
        gens
    }

    /// `Δ(a b) = Δ(a) Δ(b)`. Checking `a` over algebra generators and `b` over
    /// a basis suffices once `Δ(1) = 1 (x) 1`: by induction on word length
    /// `Δ(s_1 .. s_k b) = Δ(s_1) .. Δ(s_k) Δ(b)`.
    fn comul_is_multiplicative(&self) -> bool {
        let n = self.dim();
        let unit = self.algebra.unit();
        let unit_tensor: Vector = kronecker(
            &Matrix::from_columns(n, std::slice::from_ref(unit)).expect("column"),
            &Matrix::from_columns(n, std::slice::from_ref(unit)).expect("column"),
        )
        .column(0);
        if self.comul.mul_vec(unit) != unit_tensor {
            return false;
        }
        let left_mul: Vec<Matrix> = (0..n)
            .map(|i| self.algebra.left_mul_matrix(&unit_vector(n, i)))
            .collect();
        self.algebra_generators().into_iter().all(|s| {
            let ds = self.comul_of(s);
            (0..n).all(|b| {
                let lhs = self.comul.mul_vec(&self.algebra.basis_product(s, b));
                lhs == self.tensor_mul(&left_mul, &ds, &self.comul_of(b))
            })
        })
    }

    fn counit_is_multiplicative(&self) -> bool {
        let n = self.dim();
        let eps = |v: &[Scalar]| self.counit.mul_vec(v)[0].clone();
        eps(self.algebra.unit()).is_one()
            && (0..n).all(|i| {
                (0..n).all(|j| eps(&self.algebra.basis_product(i, j)) == self.counit_of(i) * self.counit_of(j))
            })
    }

    pub fn axiom_report(&self) -> HopfAxiomReport {
        hopf_axiom_report(self)
    }
}

fn generated_dim(algebra: &Algebra, gens: &[usize]) -> usize {
    let n = algebra.dim();
    let mut span: Vec<Vector> = vec![algebra.unit().clone()];
    let mut frontier = span.clone();
    let rank = |vs: &[Vector]| Matrix::from_columns(n, vs).expect("len").rank();
    let mut current = rank(&span);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for &g in gens {
                let v = algebra.mul(&unit_vector(n, g), f);
                let mut trial = span.clone();
                trial.push(v.clone());
                let r = rank(&trial);
                if r > current {
                    current = r;
                    span = trial;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    current
}

/// Exact check of every Hopf algebra axiom; failures are entries, not errors.
pub fn hopf_axiom_report(h: &HopfPresentation) -> HopfAxiomReport {
    let n = h.dim();
    let id = Matrix::identity(n);
    let delta = &h.comul;
    let eps = &h.counit;
    let sigma = &h.antipode;
    let mult = h.algebra.mult_matrix();
    let unit_col = Matrix::from_columns(n, &[h.algebra.unit().clone()]).expect("column");

    let coassociative = kronecker(&id, delta).mul(delta) == kronecker(delta, &id).mul(delta);
    let counit_law = kronecker(eps, &id).mul(delta) == id && kronecker(&id, eps).mul(delta) == id;
    let unit_eps = unit_col.mul(eps);
    let antipode_law = mult.mul(&kronecker(sigma, &id)).mul(delta) == unit_eps
        && mult.mul(&kronecker(&id, sigma)).mul(delta) == unit_eps;

    let checks = vec![
        AxiomCheck { name: "associative", pass: h.algebra.is_associative() },
        AxiomCheck { name: "unit", pass: h.algebra.unit_is_identity() },
        AxiomCheck { name: "coassociative", pass: coassociative },
        AxiomCheck { name: "counit", pass: counit_law },
        AxiomCheck { name: "antipode", pass: antipode_law },
        AxiomCheck { name: "comul_algebra_map", pass: h.comul_is_multiplicative() },
        AxiomCheck { name: "counit_algebra_map", pass: h.counit_is_multiplicative() },
    ];
    HopfAxiomReport { checks }
}

/// The group algebra `Q[G]` with `Δ(g) = g (x) g`, `ε(g) = 1`, `σ(g) = g^{-1}`;
/// basis in group index order.
pub fn group_algebra_hopf(group: &FiniteGroup) -> HopfPresentation {
    let n = group.order();
    let products = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| unit_vector(n, group.mul(a, b)))
        .collect();
    let algebra = Algebra::from_products(n, products, unit_vector(n, group.identity())).expect("group table");
    let mut comul = Matrix::zeros(n * n, n);
    let mut antipode = Matrix::zeros(n, n);
    for g in 0..n {
        comul[(g * n + g, g)] = Scalar::one();
        antipode[(group.inv(g), g)] = Scalar::one();
    }
    let counit = Matrix::from_vec(1, n, vec![Scalar::one(); n]).expect("row");
    HopfPresentation { algebra, comul, counit, antipode, provenance: "group algebra".into() }
}

/// Checks that `phi` (a `dim x dim` matrix, columns are images of basis
/// elements of `source` in the basis of `target`) is a bijective Hopf
/// algebra map. Returns the first violated identity.
pub fn check_hopf_morphism(source: &HopfPresentation, target: &HopfPresentation, phi: &Matrix) -> Result<()> {
    check_algebra_morphism(&source.algebra, &target.algebra, phi)?;
    let fail = |what: &str| Err(Error::MapCheck(what.to_string()));
    if kronecker(phi, phi).mul(&source.comul) != target.comul.mul(phi) {
        return fail("comultiplication not preserved");
    }
    if target.counit.mul(phi) != source.counit {
        return fail("counit not preserved");
    }
    if phi.mul(&source.antipode) != target.antipode.mul(phi) {
        return fail("antipode not preserved");
    }
    Ok(())
}

/// Bijective, unital and multiplicative.
pub fn check_algebra_morphism(source: &Algebra, target: &Algebra, phi: &Matrix) -> Result<()> {
    let n = source.dim();
    let fail = |what: &str| Err(Error::MapCheck(what.to_string()));
    if phi.rows() != target.dim() || phi.cols() != n {
        return fail("shape mismatch");
    }
    if rref(phi).1.len() != n || target.dim() != n {
        return fail("not bijective");
    }
    if phi.mul_vec(source.unit()) != *target.unit() {
        return fail("unit not preserved");
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.mul_vec(&source.basis_product(i, j));
            let rhs = target.mul(&phi.column(i), &phi.column(j));
            if lhs != rhs {
                return fail(&format!("product of basis elements {i}, {j} not preserved"));
            }
        }
    }
    Ok(())
}
