//! Column vectors in `A^m` and matrices over `A`. Columns of a matrix are
//! read as generators of a submodule.

use std::cmp::Ordering;

use num_traits::One;

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::order::{ModuleMonomial, OrderSpec};
use crate::poly::{Monomial, Poly, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Vector(pub Vec<Poly>);

impl Vector {
    pub fn zero(m: usize) -> Self {
        Vector(vec![Poly::zero(); m])
    }

    /// The canonical basis vector `e_i` (0-based).
    pub fn unit(alg: &Algebra, m: usize, i: usize) -> Self {
        let mut v = Vector::zero(m);
        v.0[i] = alg.one();
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    /// Maximal module monomial with its coefficient.
    pub fn leading(&self, order: &OrderSpec) -> Option<(ModuleMonomial, &Rational)> {
        let mut best: Option<(ModuleMonomial, &Rational)> = None;
        for (pos, p) in self.0.iter().enumerate() {
            if let Some(t) = p.leading_term() {
                let cand = ModuleMonomial {
                    mono: t.mono.clone(),
                    position: pos,
                };
                let better = match &best {
                    None => true,
                    Some((b, _)) => order.compare(&cand, b) == Ordering::Greater,
                };
                if better {
                    best = Some((cand, &t.coeff));
                }
            }
        }
        best
    }

    pub fn leading_term(&self, order: &OrderSpec) -> Result<(Rational, ModuleMonomial)> {
        self.leading(order)
            .map(|(m, c)| (c.clone(), m))
            .ok_or(Error::ZeroVector)
    }

    pub fn add(&self, alg: &Algebra, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| alg.add(a, b)).collect())
    }

    pub fn sub(&self, alg: &Algebra, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| alg.sub(a, b)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|p| p.scale(c)).collect())
    }

    /// `self += c·x^γ·v`.
    pub fn add_term_left(&mut self, alg: &Algebra, c: &Rational, gamma: &Monomial, v: &Vector) {
        let ord = &alg.order().monomial;
        for (a, b) in self.0.iter_mut().zip(&v.0) {
            if !b.is_zero() {
                let prod = alg.mul_term_left(&Rational::one(), gamma, b);
                a.add_scaled(c, &prod, ord);
            }
        }
    }

    /// `f·v`, entries multiplied on the left.
    pub fn mul_left(&self, alg: &Algebra, f: &Poly) -> Vector {
        Vector(self.0.iter().map(|p| alg.mul(f, p)).collect())
    }

    /// `v·f`, entries multiplied on the right.
    pub fn mul_right(&self, alg: &Algebra, f: &Poly) -> Vector {
        Vector(self.0.iter().map(|p| alg.mul(p, f)).collect())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Vector {
        Vector(self.0.iter().map(f).collect())
    }
}

/// An `m × s` matrix over `A`, stored by columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols: vec![Vector::zero(rows); cols],
        }
    }

    pub fn identity(alg: &Algebra, n: usize) -> Self {
        Matrix {
            rows: n,
            cols: (0..n).map(|i| Vector::unit(alg, n, i)).collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vector>) -> Result<Self> {
        for (j, c) in cols.iter().enumerate() {
            if c.rank() != rows {
                return Err(Error::ShapeMismatch(format!(
                    "column {} has {} entries, expected {}",
                    j + 1,
                    c.rank(),
                    rows
                )));
            }
        }
        Ok(Matrix { rows, cols })
    }

    /// Builds from rows; `ncols` fixes the shape when there are no rows.
    pub fn from_rows(rows: Vec<Vec<Poly>>, ncols: usize) -> Result<Self> {
        let mut cols = vec![Vector::zero(rows.len()); ncols];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    ncols
                )));
            }
            for (j, p) in row.iter().enumerate() {
                cols[j].0[i] = p.clone();
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols.len())
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vector> {
        self.cols
    }

    pub fn col(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.cols[j].0[i]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.cols[j].0[i] = p;
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        self.cols.iter().map(|c| c.0[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vector::is_zero)
    }

    /// Entrywise-literal transpose.
    pub fn transpose(&self) -> Matrix {
        Matrix {
            rows: self.cols.len(),
            cols: (0..self.rows).map(|i| Vector(self.row(i))).collect(),
        }
    }

    /// `[A | B | …]`.
    pub fn hcat(blocks: &[&Matrix]) -> Result<Matrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let mut cols = Vec::new();
        for b in blocks {
            if b.rows != rows {
                return Err(Error::ShapeMismatch(format!(
                    "cannot place a {}-row block beside a {}-row block",
                    b.rows, rows
                )));
            }
            cols.extend(b.cols.iter().cloned());
        }
        Ok(Matrix { rows, cols })
    }

    /// First `k` coordinates of every column.
    pub fn take_rows(&self, k: usize) -> Matrix {
        Matrix {
            rows: k,
            cols: self.cols.iter().map(|c| Vector(c.0[..k].to_vec())).collect(),
        }
    }

    pub fn prune_zero_columns(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols.into_iter().filter(|c| !c.is_zero()).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols.iter().map(|c| c.map(&f)).collect(),
        }
    }

    pub fn check_algebra(&self, alg: &Algebra) -> Result<()> {
        for c in &self.cols {
            for p in &c.0 {
                alg.check_poly(p)?;
            }
        }
        Ok(())
    }

    /// Ordinary matrix product `self · other`.
    pub fn mul(&self, alg: &Algebra, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.ncols(),
                other.rows,
                other.ncols()
            )));
        }
        let cols = other
            .cols
            .iter()
            .map(|b| self.apply(alg, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols,
        })
    }

    /// The combination of the columns with coefficients `z`: `Σ z_k·col_k`
    /// on the left side, `Σ col_k·z_k` on the right.
    pub fn combine(&self, alg: &Algebra, side: Side, z: &Vector) -> Vector {
        let mut acc = Vector::zero(self.rows);
        for (c, zk) in self.cols.iter().zip(&z.0) {
            if zk.is_zero() {
                continue;
            }
            let term = match side {
                Side::Left => c.mul_left(alg, zk),
                Side::Right => c.mul_right(alg, zk),
            };
            acc = acc.add(alg, &term);
        }
        acc
    }

    // Matrix-vector product: row i is Σ_k a_ik·z_k.
    fn apply(&self, alg: &Algebra, z: &Vector) -> Vector {
        let ord = &alg.order().monomial;
        let mut acc = Vector::zero(self.rows);
        for (c, zk) in self.cols.iter().zip(&z.0) {
            if zk.is_zero() {
                continue;
            }
            for (a, e) in acc.0.iter_mut().zip(&c.0) {
                if !e.is_zero() {
                    a.add_scaled(&Rational::one(), &alg.mul(e, zk), ord);
                }
            }
        }
        acc
    }
}

/// Kronecker product: entry `(i·c + k, j·d + l)` (0-based) is `P_ij·Q_kl`.
pub fn kron(alg: &Algebra, p: &Matrix, q: &Matrix) -> Matrix {
    let (a, b) = p.shape();
    let (c, d) = q.shape();
    let mut out = Matrix::zeros(a * c, b * d);
    for i in 0..a {
        for j in 0..b {
            let pij = p.get(i, j);
            if pij.is_zero() {
                continue;
            }
            for k in 0..c {
                for l in 0..d {
                    let qkl = q.get(k, l);
                    if !qkl.is_zero() {
                        out.set(i * c + k, j * d + l, alg.mul(pij, qkl));
                    }
                }
            }
        }
    }
    out
}
