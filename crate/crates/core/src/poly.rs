//! Monomials, terms and polynomials in PBW normal form.
//!
//! A [`Poly`] is a list of terms sorted strictly descending under a
//! [`MonomialOrder`]. The polynomial itself does not know which order (or
//! which algebra) it belongs to; every operation that depends on the order
//! takes it explicitly, and ring multiplication lives on
//! [`Algebra`](crate::Algebra).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::order::MonomialOrder;

/// Exact coefficient field.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector `α` of the PBW monomial `x_1^α_1 ⋯ x_n^α_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn var_pow(n: usize, i: usize, a: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = a;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Exponent sum; the leading monomial of the ring product.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Index of the first variable with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Index of the last variable with a positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// True when at most one variable occurs.
    pub fn is_pure_power(&self) -> bool {
        self.0.iter().filter(|&&e| e > 0).count() <= 1
    }

    pub(crate) fn with_exponent(&self, i: usize, a: u32) -> Monomial {
        let mut e = self.0.clone();
        e[i] = a;
        Monomial(e)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// An element of the algebra in PBW normal form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(c, Monomial::one(n))
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn monomial(coeff: Rational, mono: Monomial) -> Self {
        if coeff.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term { coeff, mono }],
            }
        }
    }

    /// Collects like terms, drops zeros and sorts under `ord`.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I, ord: &MonomialOrder) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for t in terms {
            *acc.entry(t.mono).or_insert_with(Rational::zero) += t.coeff;
        }
        Self::from_map(acc, ord)
    }

    pub(crate) fn from_map(acc: HashMap<Monomial, Rational>, ord: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        Poly { terms }
    }

    /// Trusts the caller that `terms` is sorted descending with no zero
    /// coefficients and no repeated monomial.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Poly { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Coefficient of `mono`, zero when absent.
    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.mono == mono)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-t.coeff.clone(), t.mono.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly, ord: &MonomialOrder) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other, ord);
        out
    }

    pub fn sub(&self, other: &Poly, ord: &MonomialOrder) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other, ord);
        out
    }

    /// `self += c * other`, as a linear merge of two sorted term lists.
    pub fn add_scaled(&mut self, c: &Rational, other: &Poly, ord: &MonomialOrder) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + other.terms.len());
        let mut a = lhs.into_iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let t = b.next().unwrap();
                    out.push(Term::new(&t.coeff * c, t.mono.clone()));
                }
                (Some(x), Some(y)) => match ord.cmp(&x.mono, &y.mono) {
                    Ordering::Greater => out.push(a.next().unwrap()),
                    Ordering::Less => {
                        let t = b.next().unwrap();
                        out.push(Term::new(&t.coeff * c, t.mono.clone()));
                    }
                    Ordering::Equal => {
                        let mut t = a.next().unwrap();
                        let y = b.next().unwrap();
                        t.coeff += &y.coeff * c;
                        if !t.coeff.is_zero() {
                            out.push(t);
                        }
                    }
                },
            }
        }
        self.terms = out;
    }

    /// Re-sorts under a different order.
    pub fn reorder(&self, ord: &MonomialOrder) -> Poly {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        Poly { terms }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Appends a term strictly smaller than every existing term.
    pub(crate) fn push_smallest(&mut self, t: Term) {
        self.terms.push(t);
    }
}

/// Plain-text rendering with caller-supplied variable names.
pub struct PolyDisplay<'a> {
    pub poly: &'a Poly,
    pub names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.poly.terms().iter().enumerate() {
            let neg = t.coeff < Rational::zero();
            let abs = if neg { -t.coeff.clone() } else { t.coeff.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = render_monomial(&t.mono, self.names);
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{}", abs)?,
                (true, false) => write!(f, "{}", mono)?,
                (false, false) => write!(f, "{}*{}", abs, mono)?,
            }
        }
        Ok(())
    }
}

fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}
