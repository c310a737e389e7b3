//! Bijective skew PBW extensions `A = σ(ℚ)⟨x_1, …, x_n⟩` with central
//! rational coefficients.
//!
//! The ring is determined by the relations
//!
//! ```text
//! x_j x_i = c_ij x_i x_j + d_ij        (i < j, c_ij ≠ 0, deg d_ij ≤ 1)
//! ```
//!
//! and every element is kept in PBW normal form, a ℚ-combination of the
//! ordered monomials `x_1^α_1 ⋯ x_n^α_n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order::OrderSpec;
use crate::poly::{Monomial, Poly, PolyDisplay, Rational, Term};

/// Which side ring elements act on a module from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Collects the data of a skew PBW extension; [`build`](Self::build)
/// validates it.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    names: Vec<String>,
    relations: Vec<(usize, usize, Rational, Vec<Term>)>,
    order: Option<OrderSpec>,
}

impl AlgebraBuilder {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        AlgebraBuilder {
            names: names.into_iter().map(Into::into).collect(),
            relations: Vec::new(),
            order: None,
        }
    }

    /// Declares `x_j x_i = c x_i x_j + d` for `i < j` (0-based). Pairs left
    /// undeclared commute.
    pub fn relation(mut self, i: usize, j: usize, c: Rational, d: Vec<Term>) -> Self {
        self.relations.push((i, j, c, d));
        self
    }

    pub fn order(mut self, order: OrderSpec) -> Self {
        self.order = Some(order);
        self
    }

    pub fn build(self) -> Result<Algebra> {
        let n = self.names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("an algebra needs at least one variable".into()));
        }
        for (a, name) in self.names.iter().enumerate() {
            if self.names[..a].contains(name) {
                return Err(Error::InvalidAlgebra(format!("variable `{}` declared twice", name)));
            }
        }
        let order = self.order.unwrap_or_else(|| OrderSpec::default_for(n));
        if order.monomial.nvars() != n {
            return Err(Error::InvalidAlgebra(format!(
                "order ranks {} variables, algebra has {}",
                order.monomial.nvars(),
                n
            )));
        }
        let mut c = vec![Rational::one(); n * n];
        let mut d = vec![Poly::zero(); n * n];
        let mut declared = vec![false; n * n];
        for (i, j, cij, dij) in self.relations {
            if i >= j || j >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "relation indices ({}, {}) must satisfy i < j ≤ n",
                    i + 1,
                    j + 1
                )));
            }
            if declared[i * n + j] {
                return Err(Error::InvalidAlgebra(format!(
                    "relation for x{}*x{} given twice",
                    j + 1,
                    i + 1
                )));
            }
            declared[i * n + j] = true;
            if cij.is_zero() {
                return Err(Error::ZeroConstant { i: i + 1, j: j + 1 });
            }
            for t in &dij {
                if t.mono.nvars() != n {
                    return Err(Error::AlgebraMismatch {
                        expected: n,
                        found: t.mono.nvars(),
                    });
                }
            }
            let dpoly = Poly::from_terms(dij, &order.monomial);
            if let Some(deg) = dpoly.total_degree() {
                if deg > 1 {
                    return Err(Error::DegreeViolation {
                        i: i + 1,
                        j: j + 1,
                        degree: deg,
                    });
                }
            }
            let xixj = Monomial::var(n, i).mul(&Monomial::var(n, j));
            if dpoly
                .terms()
                .iter()
                .any(|t| order.monomial.cmp(&t.mono, &xixj) != std::cmp::Ordering::Less)
            {
                return Err(Error::OrderIncompatible { i: i + 1, j: j + 1 });
            }
            c[i * n + j] = cij;
            d[i * n + j] = dpoly;
        }
        let quasi = d.iter().all(Poly::is_zero);
        let alg = Algebra(Arc::new(Inner {
            names: self.names,
            c,
            d,
            order,
            quasi,
            products: Mutex::new(HashMap::new()),
            op_images: Mutex::new(HashMap::new()),
            opposite: OnceLock::new(),
        }));
        alg.check_associativity()?;
        Ok(alg)
    }
}

struct Inner {
    names: Vec<String>,
    c: Vec<Rational>,
    d: Vec<Poly>,
    order: OrderSpec,
    quasi: bool,
    products: Mutex<HashMap<(Monomial, Monomial), Poly>>,
    op_images: Mutex<HashMap<Monomial, Poly>>,
    opposite: OnceLock<Algebra>,
}

/// A validated skew PBW extension. Cheap to clone; all clones share the
/// product caches.
#[derive(Clone)]
pub struct Algebra(Arc<Inner>);

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rels = Vec::new();
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                rels.push(format!(
                    "{}*{} = {}*{}*{} + {}",
                    self.0.names[j],
                    self.0.names[i],
                    self.c(i, j),
                    self.0.names[i],
                    self.0.names[j],
                    self.display(self.d(i, j))
                ));
            }
        }
        f.debug_struct("Algebra")
            .field("names", &self.0.names)
            .field("relations", &rels)
            .field("order", &self.0.order)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.names == other.0.names
                && self.0.c == other.0.c
                && self.0.d == other.0.d
                && self.0.order == other.0.order)
    }
}

impl Algebra {
    pub fn n(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn order(&self) -> &OrderSpec {
        &self.0.order
    }

    /// `c_ij` for `i < j`, 0-based.
    pub fn c(&self, i: usize, j: usize) -> &Rational {
        &self.0.c[i * self.n() + j]
    }

    /// `d_ij` for `i < j`, 0-based.
    pub fn d(&self, i: usize, j: usize) -> &Poly {
        &self.0.d[i * self.n() + j]
    }

    /// All `d_ij = 0`.
    pub fn is_quasi_commutative(&self) -> bool {
        self.0.quasi
    }

    pub fn is_commutative(&self) -> bool {
        self.0.quasi && self.0.c.iter().all(One::is_one)
    }

    /// Same relations under a different order.
    pub fn with_order(&self, order: OrderSpec) -> Result<Algebra> {
        let mut b = AlgebraBuilder::new(self.0.names.clone()).order(order);
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                b = b.relation(i, j, self.c(i, j).clone(), self.d(i, j).terms().to_vec());
            }
        }
        b.build()
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.n())
    }

    pub fn constant(&self, c: Rational) -> Poly {
        Poly::constant(self.n(), c)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::monomial(Rational::one(), Monomial::var(self.n(), i))
    }

    pub fn display<'a>(&'a self, p: &'a Poly) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: p,
            names: &self.0.names,
        }
    }

    pub fn check_poly(&self, p: &Poly) -> Result<()> {
        for t in p.terms() {
            if t.mono.nvars() != self.n() {
                return Err(Error::AlgebraMismatch {
                    expected: self.n(),
                    found: t.mono.nvars(),
                });
            }
        }
        Ok(())
    }

    /// Sorts terms of a polynomial built elsewhere under this algebra's order.
    pub fn normalize(&self, p: &Poly) -> Poly {
        p.reorder(&self.0.order.monomial)
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        f.add(g, &self.0.order.monomial)
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Poly {
        f.sub(g, &self.0.order.monomial)
    }

    /// PBW normal form of `x^u · x^v`.
    pub fn monomial_product(&self, u: &Monomial, v: &Monomial) -> Poly {
        let (k, l) = match (u.last_var(), v.first_var()) {
            (Some(k), Some(l)) if k > l => (k, l),
            _ => return Poly::monomial(Rational::one(), u.mul(v)),
        };
        if self.0.quasi {
            return Poly::monomial(self.quasi_coeff(u, v), u.mul(v));
        }
        let key = (u.clone(), v.clone());
        if let Some(p) = self.0.products.lock().unwrap().get(&key) {
            return p.clone();
        }
        let p = self.rewrite_product(u, v, k, l);
        self.0.products.lock().unwrap().insert(key, p.clone());
        p
    }

    /// Moving each `x_j` of `u` past each `x_i` of `v` (i < j) contributes
    /// one factor `c_ij`.
    fn quasi_coeff(&self, u: &Monomial, v: &Monomial) -> Rational {
        let n = self.n();
        let (eu, ev) = (u.exponents(), v.exponents());
        let mut coeff = Rational::one();
        for i in 0..n {
            if ev[i] == 0 {
                continue;
            }
            for j in i + 1..n {
                let swaps = eu[j] * ev[i];
                if swaps > 0 {
                    let c = self.c(i, j);
                    if !c.is_one() {
                        coeff *= num_traits::pow(c.clone(), swaps as usize);
                    }
                }
            }
        }
        coeff
    }

    // `k` is the last variable of `u`, `l` the first of `v`, and `k > l`.
    fn rewrite_product(&self, u: &Monomial, v: &Monomial, k: usize, l: usize) -> Poly {
        let n = self.n();
        let ord = &self.0.order.monomial;
        let (a, b) = (u.exponents()[k], v.exponents()[l]);
        if u.is_pure_power() && v.is_pure_power() {
            if a == 1 && b == 1 {
                let mut p = Poly::monomial(self.c(l, k).clone(), u.mul(v));
                p.add_scaled(&Rational::one(), self.d(l, k), ord);
                return p;
            }
            let mut acc = HashMap::new();
            if a > 1 {
                // x_k^a x_l^b = x_k · (x_k^{a-1} x_l^b)
                let xk = Monomial::var(n, k);
                let inner = self.monomial_product(&Monomial::var_pow(n, k, a - 1), v);
                for t in inner.terms() {
                    accumulate(&mut acc, &t.coeff, &self.monomial_product(&xk, &t.mono));
                }
            } else {
                // x_k x_l^b = (x_k x_l^{b-1}) · x_l
                let xl = Monomial::var(n, l);
                let inner = self.monomial_product(u, &Monomial::var_pow(n, l, b - 1));
                for t in inner.terms() {
                    accumulate(&mut acc, &t.coeff, &self.monomial_product(&t.mono, &xl));
                }
            }
            return Poly::from_map(acc, ord);
        }
        // u = u'·x_k^a, v = x_l^b·v'
        let u_rest = u.with_exponent(k, 0);
        let v_rest = v.with_exponent(l, 0);
        let core = self.monomial_product(&Monomial::var_pow(n, k, a), &Monomial::var_pow(n, l, b));
        let mut acc = HashMap::new();
        for t in core.terms() {
            let left = self.monomial_product(&u_rest, &t.mono);
            for s in left.terms() {
                let c = &t.coeff * &s.coeff;
                accumulate(&mut acc, &c, &self.monomial_product(&s.mono, &v_rest));
            }
        }
        Poly::from_map(acc, ord)
    }

    /// Ring product in PBW normal form.
    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        if g.len() == 1 {
            let t = &g.terms()[0];
            return self.mul_term_right(f, &t.coeff, &t.mono);
        }
        if f.len() == 1 {
            let t = &f.terms()[0];
            return self.mul_term_left(&t.coeff, &t.mono, g);
        }
        let mut acc = HashMap::new();
        for s in f.terms() {
            for t in g.terms() {
                let c = &s.coeff * &t.coeff;
                if self.0.quasi {
                    let c = c * self.quasi_coeff(&s.mono, &t.mono);
                    *acc.entry(s.mono.mul(&t.mono)).or_insert_with(Rational::zero) += c;
                } else {
                    accumulate(&mut acc, &c, &self.monomial_product(&s.mono, &t.mono));
                }
            }
        }
        Poly::from_map(acc, &self.0.order.monomial)
    }

    /// `(c·x^γ) · f`.
    pub fn mul_term_left(&self, c: &Rational, gamma: &Monomial, f: &Poly) -> Poly {
        if c.is_zero() || f.is_zero() {
            return Poly::zero();
        }
        if self.0.quasi {
            // Monomial orders are multiplicative, so shifting keeps the order.
            let terms = f
                .terms()
                .iter()
                .map(|t| Term::new(c * &t.coeff * self.quasi_coeff(gamma, &t.mono), gamma.mul(&t.mono)))
                .collect();
            return Poly::from_sorted(terms);
        }
        let mut acc = HashMap::new();
        for t in f.terms() {
            accumulate(&mut acc, &(c * &t.coeff), &self.monomial_product(gamma, &t.mono));
        }
        Poly::from_map(acc, &self.0.order.monomial)
    }

    /// `f · (c·x^γ)`.
    pub fn mul_term_right(&self, f: &Poly, c: &Rational, gamma: &Monomial) -> Poly {
        if c.is_zero() || f.is_zero() {
            return Poly::zero();
        }
        if self.0.quasi {
            let terms = f
                .terms()
                .iter()
                .map(|t| Term::new(c * &t.coeff * self.quasi_coeff(&t.mono, gamma), t.mono.mul(gamma)))
                .collect();
            return Poly::from_sorted(terms);
        }
        let mut acc = HashMap::new();
        for t in f.terms() {
            accumulate(&mut acc, &(c * &t.coeff), &self.monomial_product(&t.mono, gamma));
        }
        Poly::from_map(acc, &self.0.order.monomial)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (xi, xj, xk) = (self.var(i), self.var(j), self.var(k));
                    let lhs = self.mul(&self.mul(&xk, &xj), &xi);
                    let rhs = self.mul(&xk, &self.mul(&xj, &xi));
                    if lhs != rhs {
                        return Err(Error::InconsistentRelations {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `fa = af` for every `a ∈ A`; it suffices to test the generators
    /// since coefficients are central.
    pub fn is_central(&self, f: &Poly) -> bool {
        (0..self.n()).all(|i| {
            let x = self.var(i);
            self.mul(f, &x) == self.mul(&x, f)
        })
    }

    /// Presentation of `A^op` over the same variables and order: constants
    /// `c_ij^{-1}`, corrections `-d_ij / c_ij`.
    pub fn try_opposite(&self) -> Result<Algebra> {
        let n = self.n();
        let mut b = AlgebraBuilder::new(self.0.names.clone()).order(self.0.order.clone());
        for i in 0..n {
            for j in i + 1..n {
                let c = self.c(i, j);
                let inv = c.recip();
                let d = self.d(i, j).scale(&-inv.clone());
                b = b.relation(i, j, inv, d.into_terms());
            }
        }
        b.build()
    }

    pub fn opposite(&self) -> &Algebra {
        self.0
            .opposite
            .get_or_init(|| self.try_opposite().expect("opposite of a validated algebra is valid"))
    }

    /// Coordinates of `f ∈ A` in the PBW basis of `A^op`.
    pub fn to_opposite(&self, f: &Poly) -> Poly {
        if self.is_commutative() {
            return f.clone();
        }
        let mut acc = HashMap::new();
        for t in f.terms() {
            accumulate(&mut acc, &t.coeff, &self.op_image(&t.mono));
        }
        Poly::from_map(acc, &self.0.order.monomial)
    }

    /// Inverse of [`to_opposite`](Self::to_opposite).
    pub fn from_opposite(&self, f: &Poly) -> Poly {
        self.opposite().to_opposite(f)
    }

    // x_1^a_1 ⋯ x_n^a_n in A equals x_n^a_n ∗ ⋯ ∗ x_1^a_1 in A^op.
    fn op_image(&self, m: &Monomial) -> Poly {
        if m.is_pure_power() {
            return Poly::monomial(Rational::one(), m.clone());
        }
        if let Some(p) = self.0.op_images.lock().unwrap().get(m) {
            return p.clone();
        }
        let op = self.opposite();
        let n = self.n();
        let mut acc = op.one();
        for i in (0..n).rev() {
            let e = m.exponents()[i];
            if e > 0 {
                acc = op.mul_term_right(&acc, &Rational::one(), &Monomial::var_pow(n, i, e));
            }
        }
        self.0.op_images.lock().unwrap().insert(m.clone(), acc.clone());
        acc
    }
}

fn accumulate(acc: &mut HashMap<Monomial, Rational>, c: &Rational, p: &Poly) {
    for t in p.terms() {
        *acc.entry(t.mono.clone()).or_insert_with(Rational::zero) += c * &t.coeff;
    }
}

/// Algebras used throughout the examples and tests.
pub mod presets {
    use super::*;
    use crate::poly::rat;

    /// `ℚ[x_1, …, x_n]`, named `x, y, z` for `n ≤ 3`.
    pub fn commutative(n: usize) -> Algebra {
        AlgebraBuilder::new(default_names(n)).build().unwrap()
    }

    /// `yx = q·xy`.
    pub fn quantum_plane(q: Rational) -> Result<Algebra> {
        AlgebraBuilder::new(["x", "y"]).relation(0, 1, q, vec![]).build()
    }

    /// `yx = −xy`, deglex `x ≻ y`, TOP with descending positions.
    pub fn anticommuting_plane() -> Algebra {
        quantum_plane(rat(-1)).unwrap()
    }

    /// First Weyl algebra in `t, ∂` (written `t, d`): `∂t = t∂ + 1`.
    pub fn weyl() -> Algebra {
        AlgebraBuilder::new(["t", "d"])
            .relation(0, 1, rat(1), vec![Term::new(rat(1), Monomial::one(2))])
            .build()
            .unwrap()
    }

    /// Enveloping algebra of the Heisenberg Lie algebra, `[x_2, x_3] = x_1`.
    pub fn heisenberg() -> Algebra {
        AlgebraBuilder::new(["x1", "x2", "x3"])
            .relation(1, 2, rat(1), vec![Term::new(rat(-1), Monomial::var(3, 0))])
            .build()
            .unwrap()
    }

    fn default_names(n: usize) -> Vec<String> {
        if n <= 3 {
            ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{}", i)).collect()
        }
    }
}
