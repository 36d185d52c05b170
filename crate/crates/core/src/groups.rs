//! Finite groups as Cayley tables, permutation groups, and the searches
//! descent theory needs: regularity, normalization by the left
//! regular representation, exhaustive enumeration of regular normalized
//! subgroups for small orders, and equivariant isomorphism testing.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Default safety bound on the size of a generated permutation group.
pub const DEFAULT_CLOSURE_BOUND: usize = 10080;

/// Largest group order for which [`enumerate_regular_normalized`] runs.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 8;

/// Closure bound, overridable through `HGL_CLOSURE_BOUND`.
pub fn closure_bound() -> usize {
    std::env::var("HGL_CLOSURE_BOUND")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CLOSURE_BOUND)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the group axioms and builds the group.
    pub fn from_table(table: Vec<Vec<usize>>, names: Vec<String>, generators: Vec<usize>) -> Result<Self> {
        let n = table.len();
        let bad = |msg: &str| Error::InvalidInput(format!("not a group table: {msg}"));
        if n == 0 || names.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(bad("shape"));
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let (r, c) = (table[i][j], table[j][i]);
                if r >= n || c >= n || row_seen[r] || col_seen[c] {
                    return Err(bad("row or column is not a permutation"));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| bad("no identity"))?;
        let inverses = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity && table[h][g] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad("missing inverse"))?;
        let group = Self { table, identity, inverses, names, generators };
        if !group.is_associative() {
            return Err(bad("not associative"));
        }
        if group.subgroup_generated(&group.generators).len() != n {
            return Err(bad("generators do not generate"));
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    /// Identity, inverse and associativity laws, checked exhaustively.
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        let e = self.identity;
        (0..n).all(|g| self.mul(e, g) == g && self.mul(g, e) == g)
            && (0..n).all(|g| self.mul(g, self.inv(g)) == e && self.mul(self.inv(g), g) == e)
            && self.is_associative()
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&g| seen[g]).collect()
    }

    /// All subgroups, found as closures of at most two elements; this is
    /// complete for every group in scope (cyclic, dihedral, Klein four).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut found = std::collections::BTreeSet::new();
        for a in 0..n {
            for b in a..n {
                found.insert(self.subgroup_generated(&[a, b]));
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.clone()));
        out
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }
}

fn dihedral_name(i: usize, j: usize) -> String {
    match (i, j) {
        (0, 0) => "1".into(),
        (0, 1) => "s".into(),
        (1, 0) => "r".into(),
        (1, 1) => "rs".into(),
        (i, 0) => format!("r^{i}"),
        (i, _) => format!("r^{i}s"),
    }
}

/// The dihedral group `<r, s | r^p = s^2 = rsrs = 1>` of order `2p`, with
/// `r^i s^j` stored at index `i + p j`.
pub fn dihedral(p: u64) -> Result<FiniteGroup> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let p = p as usize;
    let n = 2 * p;
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        let (i, j) = (a % p, a / p);
        for b in 0..n {
            let (k, l) = (b % p, b / p);
            // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j + l)
            let rot = if j == 0 { (i + k) % p } else { (i + p - k) % p };
            table[a][b] = rot + p * ((j + l) % 2);
        }
    }
    let names = (0..n).map(|a| dihedral_name(a % p, a / p)).collect();
    FiniteGroup::from_table(table, names, vec![1, p])
}

/// Cyclic group of order `n` generated by index 1 (`t`).
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group of order 0".into()));
    }
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let names = (0..n)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "t".to_string(),
            a => format!("t^{a}"),
        })
        .collect();
    let gens = if n == 1 { vec![] } else { vec![1] };
    FiniteGroup::from_table(table, names, gens)
}

/// Klein four-group `<r, s>` with `r^i s^j` at index `i + 2j`.
pub fn elementary_abelian_4() -> FiniteGroup {
    let table = (0..4).map(|a: usize| (0..4).map(|b: usize| a ^ b).collect()).collect();
    let names = ["1", "r", "s", "rs"].iter().map(|s| s.to_string()).collect();
    FiniteGroup::from_table(table, names, vec![1, 2]).expect("Klein table is a group")
}

/// A bijection of `{0, .., degree - 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidInput(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Perm::identity(self.degree()), |acc, _| base.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_derangement(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i != x)
    }

    pub fn order(&self) -> usize {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = self.compose(&x);
            k += 1;
        }
        k
    }
}

/// `lg ∘ eta ∘ lg^{-1}`.
pub fn conj_by(lg: &Perm, eta: &Perm) -> Perm {
    lg.compose(eta).compose(&lg.inverse())
}

/// A subgroup of `Perm(X)`; the identity is always element 0.
#[derive(Clone, Debug)]
pub struct PermSubgroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    label: Option<String>,
}

impl PartialEq for PermSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.key() == other.key()
    }
}

impl Eq for PermSubgroup {}

impl PermSubgroup {
    fn from_elements_unchecked(degree: usize, elements: Vec<Perm>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self { degree, elements, index, label: None }
    }

    /// Builds a subgroup from an explicit element list, checking the
    /// subgroup axioms. The identity is moved to the front.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Result<Self> {
        if elements.iter().any(|p| p.degree() != degree) {
            return Err(Error::InvalidInput("element degree mismatch".into()));
        }
        let id = elements
            .iter()
            .position(Perm::is_identity)
            .ok_or_else(|| Error::InvalidInput("subgroup lacks the identity".into()))?;
        elements.swap(0, id);
        let s = Self::from_elements_unchecked(degree, elements);
        if s.index.len() != s.elements.len() {
            return Err(Error::InvalidInput("duplicate elements".into()));
        }
        let closed = s.elements.iter().all(|a| {
            s.contains(&a.inverse()) && s.elements.iter().all(|b| s.contains(&a.compose(b)))
        });
        if !closed {
            return Err(Error::InvalidInput("element set is not a subgroup".into()));
        }
        Ok(s)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the product `elements[a] ∘ elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv_index(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// Canonical key: the sorted image tuples.
    pub fn key(&self) -> Vec<Vec<usize>> {
        let mut k: Vec<Vec<usize>> = self.elements.iter().map(|p| p.0.clone()).collect();
        k.sort();
        k
    }

    /// Small generating set, chosen greedily in element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([Perm::identity(self.degree)]);
        for (i, p) in self.elements.iter().enumerate() {
            if span.contains(p) {
                continue;
            }
            gens.push(i);
            let g: Vec<Perm> = gens.iter().map(|&i| self.elements[i].clone()).collect();
            span = closure_set(&g, self.degree, usize::MAX).expect("unbounded");
            if span.len() == self.order() {
                break;
            }
        }
        gens
    }
}

fn closure_set(gens: &[Perm], degree: usize, bound: usize) -> Result<HashSet<Perm>> {
    let id = Perm::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if seen.len() > bound {
                    return Err(Error::ClosureBound { bound });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Smallest subgroup containing `gens`, found breadth-first. Elements are
/// listed in discovery order, identity first.
pub fn closure_bounded(gens: &[Perm], bound: usize) -> Result<PermSubgroup> {
    let degree = gens.first().map_or(0, Perm::degree);
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidInput("generators of different degrees".into()));
    }
    let id = Perm::identity(degree);
    let mut elements = vec![id.clone()];
    let mut seen = HashSet::from([id]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if elements.len() >= bound {
                    return Err(Error::ClosureBound { bound });
                }
                elements.push(y);
            }
        }
    }
    Ok(PermSubgroup::from_elements_unchecked(degree, elements))
}

/// [`closure_bounded`] with the configured bound.
pub fn closure(gens: &[Perm]) -> Result<PermSubgroup> {
    closure_bounded(gens, closure_bound())
}

/// `λ(g)(h) = g h`, one permutation per group element in index order.
pub fn left_regular_perm(g: &FiniteGroup, x: usize) -> Perm {
    Perm((0..g.order()).map(|h| g.mul(x, h)).collect())
}

/// `ρ(g)(h) = h g^{-1}`.
pub fn right_regular_perm(g: &FiniteGroup, x: usize) -> Perm {
    let xi = g.inv(x);
    Perm((0..g.order()).map(|h| g.mul(h, xi)).collect())
}

/// `λ(G)`; element `k` is `λ(g_k)`.
pub fn left_regular(g: &FiniteGroup) -> PermSubgroup {
    let elements = (0..g.order()).map(|x| left_regular_perm(g, x)).collect();
    PermSubgroup::from_elements_unchecked(g.order(), elements).with_label("lambda")
}

/// `ρ(G)`; element `k` is `ρ(g_k)`.
pub fn right_regular(g: &FiniteGroup) -> PermSubgroup {
    let elements = (0..g.order()).map(|x| right_regular_perm(g, x)).collect();
    PermSubgroup::from_elements_unchecked(g.order(), elements).with_label("rho")
}

/// `|N| = |X|` and no non-identity element fixes a point.
pub fn is_regular(n: &PermSubgroup) -> bool {
    n.order() == n.degree() && n.elements().iter().all(|p| p.is_identity() || p.is_derangement())
}

/// Every conjugate `l η l^{-1}` with `l ∈ L`, `η ∈ N` lies in `N`.
pub fn is_normalized_by(n: &PermSubgroup, l: &PermSubgroup) -> bool {
    first_normalization_failure(n, l.elements()).is_none()
}

/// First `(l, η)` index pair whose conjugate leaves `N`.
pub fn first_normalization_failure(n: &PermSubgroup, conjugators: &[Perm]) -> Option<(usize, usize)> {
    conjugators.iter().enumerate().find_map(|(li, l)| {
        n.elements()
            .iter()
            .position(|eta| !n.contains(&conj_by(l, eta)))
            .map(|ei| (li, ei))
    })
}

fn all_derangements(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        if current.iter().enumerate().all(|(i, &x)| i != x) {
            out.push(Perm(current.clone()));
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Smallest subgroup containing `gens` and stable under conjugation by
/// `conjugators`, or `None` once it is larger than `limit` or contains a
/// non-identity element with a fixed point.
fn semiregular_normal_closure(gens: &[Perm], conjugators: &[Perm], limit: usize) -> Option<PermSubgroup> {
    let mut gens = gens.to_vec();
    loop {
        let s = closure_bounded(&gens, limit).ok()?;
        if s.elements().iter().any(|p| !p.is_identity() && !p.is_derangement()) {
            return None;
        }
        let missing: Vec<Perm> = s
            .elements()
            .iter()
            .flat_map(|eta| conjugators.iter().map(move |l| conj_by(l, eta)))
            .filter(|c| !s.contains(c))
            .collect();
        if missing.is_empty() {
            return Some(s);
        }
        gens.push(missing[0].clone());
    }
}

/// Every regular subgroup of `Perm(G)` normalized by `λ(G)`, sorted by
/// canonical key.
///
/// Each search node is a semiregular subgroup normalized by `λ(G)`; it is
/// extended by one more derangement at a time until it becomes regular. Any
/// regular normalized `N` is reached from any of its elements this way, so
/// the search is complete.
pub fn enumerate_regular_normalized(g: &FiniteGroup) -> Result<Vec<PermSubgroup>> {
    let n = g.order();
    if n > EXHAUSTIVE_ORDER_LIMIT {
        return Err(Error::SearchInfeasible { order: n, limit: EXHAUSTIVE_ORDER_LIMIT });
    }
    let lambda_gens: Vec<Perm> = g.generators().iter().map(|&x| left_regular_perm(g, x)).collect();
    let derangements = all_derangements(n);

    let mut found: BTreeMap<Vec<Vec<usize>>, PermSubgroup> = BTreeMap::new();
    let mut visited: HashSet<Vec<Vec<usize>>> = HashSet::new();
    let mut stack: Vec<PermSubgroup> = Vec::new();

    let mut consider = |s: PermSubgroup, stack: &mut Vec<PermSubgroup>| {
        let key = s.key();
        if !visited.insert(key.clone()) {
            return;
        }
        if s.order() == n {
            found.insert(key, s);
        } else {
            stack.push(s);
        }
    };

    for d in &derangements {
        if let Some(s) = semiregular_normal_closure(std::slice::from_ref(d), &lambda_gens, n) {
            consider(s, &mut stack);
        }
    }
    while let Some(s) = stack.pop() {
        let gens: Vec<Perm> = s.generating_set().iter().map(|&i| s.element(i).clone()).collect();
        for d in derangements.iter().filter(|d| !s.contains(d)) {
            let mut extended = gens.clone();
            extended.push(d.clone());
            if let Some(t) = semiregular_normal_closure(&extended, &lambda_gens, n) {
                consider(t, &mut stack);
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Abstract isomorphism types the classifier recognizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoType {
    /// Cyclic of the given order.
    Cyclic(usize),
    /// Dihedral of the given order `2m`, `m >= 3`.
    Dihedral(usize),
    /// `C_2 x C_2`.
    Klein,
}

impl IsoType {
    pub fn order(&self) -> usize {
        match *self {
            IsoType::Cyclic(n) | IsoType::Dihedral(n) => n,
            IsoType::Klein => 4,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, IsoType::Cyclic(_))
    }

    pub fn is_dihedral(&self) -> bool {
        matches!(self, IsoType::Dihedral(_))
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::Cyclic(n) => write!(f, "C{n}"),
            IsoType::Dihedral(n) => write!(f, "D{}", n / 2),
            IsoType::Klein => write!(f, "C2xC2"),
        }
    }
}

/// Element-order census of a permutation group: order -> count.
pub fn order_census(n: &PermSubgroup) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for p in n.elements() {
        *census.entry(p.order()).or_insert(0) += 1;
    }
    census
}

/// Identifies cyclic, dihedral and Klein groups. Cyclic and Klein are
/// decided by the order census; dihedral additionally requires an explicit
/// presentation `r^m = s^2 = (sr)^2 = 1`.
pub fn iso_type(n: &PermSubgroup) -> Result<IsoType> {
    let order = n.order();
    let census = order_census(n);
    if census.contains_key(&order) {
        return Ok(IsoType::Cyclic(order));
    }
    if order == 4 && census.get(&2) == Some(&3) {
        return Ok(IsoType::Klein);
    }
    if order.is_multiple_of(2) && order >= 6 {
        let m = order / 2;
        if let Some(r) = n.elements().iter().find(|p| p.order() == m) {
            let rotations = closure_bounded(std::slice::from_ref(r), m)?;
            let reflection = n
                .elements()
                .iter()
                .find(|s| !rotations.contains(s) && s.order() == 2 && s.compose(r).compose(s) == r.inverse());
            if reflection.is_some() {
                return Ok(IsoType::Dihedral(order));
            }
        }
    }
    Err(Error::UnknownIsoType { order })
}

/// A group isomorphism between permutation groups, as element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupIso {
    /// `map[i]` is the index in the target of the image of source element `i`.
    pub map: Vec<usize>,
}

/// Why a candidate isomorphism failed the equivariance test: conjugating by
/// group element `g` does not commute with the map at source element `eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivarianceFailure {
    pub map: Vec<usize>,
    pub g: usize,
    pub eta: usize,
}

/// Outcome of an exhaustive equivariant-isomorphism search.
#[derive(Clone, Debug, Default)]
pub struct IsoSearch {
    /// Generator-image assignments tried.
    pub candidates: usize,
    /// How many of those extended to group isomorphisms.
    pub isomorphisms: usize,
    pub equivariant: Vec<GroupIso>,
    pub failures: Vec<EquivarianceFailure>,
}

/// Extends a generator assignment to a map, or `None` if it is not a
/// well-defined bijective homomorphism.
fn extend_homomorphism(
    source: &PermSubgroup,
    target: &PermSubgroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map: Vec<Option<usize>> = vec![None; source.order()];
    map[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x].expect("queued elements are mapped");
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.mul_index(g, x);
            let fy = target.mul_index(img, fx);
            match map[y] {
                Some(existing) if existing != fy => return None,
                Some(_) => {}
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    let map: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
    let mut hit = vec![false; target.order()];
    for &m in &map {
        if std::mem::replace(&mut hit[m], true) {
            return None;
        }
    }
    Some(map)
}

/// Exhaustive search for isomorphisms `N -> N2` commuting with conjugation
/// by `λ(g)` for every `g` in `acting` (indices into `group`).
pub fn equivariant_isomorphism_search(
    source: &PermSubgroup,
    target: &PermSubgroup,
    group: &FiniteGroup,
    acting: &[usize],
) -> IsoSearch {
    let mut search = IsoSearch::default();
    if source.order() != target.order() || source.degree() != target.degree() {
        return search;
    }
    let gens = source.generating_set();
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let ord = source.element(g).order();
            (0..target.order()).filter(|&t| target.element(t).order() == ord).collect()
        })
        .collect();
    let lambdas: Vec<(usize, Perm)> = acting.iter().map(|&g| (g, left_regular_perm(group, g))).collect();

    let mut cursor = vec![0usize; gens.len()];
    if choices.iter().any(Vec::is_empty) {
        return search;
    }
    loop {
        let images: Vec<usize> = cursor.iter().zip(&choices).map(|(&c, ch)| ch[c]).collect();
        search.candidates += 1;
        if let Some(map) = extend_homomorphism(source, target, &gens, &images) {
            search.isomorphisms += 1;
            let failure = lambdas.iter().find_map(|(g, l)| {
                (0..source.order()).find_map(|eta| {
                    let conj = source.position(&conj_by(l, source.element(eta)))?;
                    let lhs = target.element(map[conj]);
                    let rhs = conj_by(l, target.element(map[eta]));
                    (*lhs != rhs).then_some((*g, eta))
                })
            });
            match failure {
                None => search.equivariant.push(GroupIso { map }),
                Some((g, eta)) => search.failures.push(EquivarianceFailure { map, g, eta }),
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == cursor.len() {
                return search;
            }
            cursor[k] += 1;
            if cursor[k] < choices[k].len() {
                break;
            }
            cursor[k] = 0;
            k += 1;
        }
    }
}

/// All `G`-equivariant isomorphisms `N -> N2`.
pub fn equivariant_isomorphisms(source: &PermSubgroup, target: &PermSubgroup, group: &FiniteGroup) -> Vec<GroupIso> {
    let all: Vec<usize> = (0..group.order()).collect();
    equivariant_isomorphism_search(source, target, group, &all).equivariant
}
