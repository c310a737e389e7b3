//! Buchberger's algorithm for left and right submodules of `A^m`.
//!
//! Right-side bases are computed as left bases over `A^op`; a
//! [`GroebnerBasis`] keeps its elements in the coordinates of the ring it
//! was computed over and converts at the boundary.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::algebra::{Algebra, Side};
use crate::division::{check_vector, divide_with_leads, divide_within, Division};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::order::ModuleMonomial;
use crate::poly::{Monomial, Poly, Rational, Term};

#[derive(Clone)]
pub struct GroebnerBasis {
    algebra: Algebra,
    side: Side,
    rank: usize,
    ngens: usize,
    elements: Vec<Vector>,
    leads: Vec<ModuleMonomial>,
    provenance: Vec<Vector>,
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("side", &self.side)
            .field("rank", &self.rank)
            .field("elements", &self.elements)
            .finish()
    }
}

/// The coefficient field dimension of a quotient `A^m/N`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QDim {
    Finite(u64),
    Infinite,
}

impl fmt::Display for QDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QDim::Finite(d) => write!(f, "{}", d),
            QDim::Infinite => f.write_str("infinite"),
        }
    }
}

/// The ring computations on `side` actually run over.
pub fn working_ring(alg: &Algebra, side: Side) -> &Algebra {
    match side {
        Side::Left => alg,
        Side::Right => alg.opposite(),
    }
}

pub(crate) fn to_working(alg: &Algebra, side: Side, v: &Vector) -> Vector {
    match side {
        Side::Left => v.clone(),
        Side::Right => v.map(|p| alg.to_opposite(p)),
    }
}

pub(crate) fn from_working(alg: &Algebra, side: Side, v: &Vector) -> Vector {
    match side {
        Side::Left => v.clone(),
        Side::Right => v.map(|p| alg.from_opposite(p)),
    }
}

impl GroebnerBasis {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Basis elements in the coordinates of `A`.
    pub fn elements(&self) -> Vec<Vector> {
        self.elements
            .iter()
            .map(|v| from_working(&self.algebra, self.side, v))
            .collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_columns(self.rank, self.elements()).expect("basis vectors share the ambient rank")
    }

    /// Leading module monomials, in working-ring coordinates.
    pub fn leading_monomials(&self) -> &[ModuleMonomial] {
        &self.leads
    }

    /// The `s × t` matrix `H` with `g_k = Σ_j H_jk·f_j` (left) or
    /// `g_k = Σ_j f_j·H_jk` (right).
    pub fn provenance(&self) -> Matrix {
        let cols = self
            .provenance
            .iter()
            .map(|v| from_working(&self.algebra, self.side, v))
            .collect();
        Matrix::from_columns(self.ngens, cols).expect("provenance vectors share the generator count")
    }

    pub(crate) fn working_elements(&self) -> &[Vector] {
        &self.elements
    }

    pub(crate) fn working_provenance(&self) -> &[Vector] {
        &self.provenance
    }

    pub(crate) fn working(&self) -> &Algebra {
        working_ring(&self.algebra, self.side)
    }

    /// Division by the basis in working-ring coordinates.
    pub(crate) fn divide_working(&self, f: &Vector) -> Division {
        let leads: Vec<Option<ModuleMonomial>> = self.leads.iter().cloned().map(Some).collect();
        divide_with_leads(self.working(), f, &self.elements, &leads)
    }

    /// Normal form of `f` (in the coordinates of `A`).
    pub fn reduce(&self, f: &Vector) -> Result<Vector> {
        check_vector(&self.algebra, f, self.rank)?;
        let w = to_working(&self.algebra, self.side, f);
        let d = self.divide_working(&w);
        Ok(from_working(&self.algebra, self.side, &d.remainder))
    }

    pub fn member(&self, f: &Vector) -> Result<bool> {
        check_vector(&self.algebra, f, self.rank)?;
        let w = to_working(&self.algebra, self.side, f);
        Ok(self.divide_working(&w).remainder.is_zero())
    }

    /// Dimension over ℚ of `A^m/⟨G⟩`, by counting standard monomials.
    pub fn qdimension(&self) -> QDim {
        let n = self.algebra.n();
        let mut total: u64 = 0;
        for pos in 0..self.rank {
            let here: Vec<&Monomial> = self
                .leads
                .iter()
                .filter(|l| l.position == pos)
                .map(|l| &l.mono)
                .collect();
            if here.iter().any(|m| m.is_one()) {
                continue;
            }
            let mut bounds = Vec::with_capacity(n);
            for i in 0..n {
                let pure = here
                    .iter()
                    .filter(|m| m.is_pure_power() && m.first_var() == Some(i))
                    .map(|m| m.exponents()[i])
                    .min();
                match pure {
                    Some(a) => bounds.push(a),
                    None => return QDim::Infinite,
                }
            }
            total += count_standard(&bounds, &here);
        }
        QDim::Finite(total)
    }

    /// Every S-vector reduces to zero modulo the basis.
    pub fn is_groebner(&self) -> bool {
        let ring = self.working();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if let Some(s) = s_vector(ring, &self.elements[i], &self.leads[i], &self.elements[j], &self.leads[j]) {
                    if !self.divide_working(&s.vector).remainder.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn count_standard(bounds: &[u32], leads: &[&Monomial]) -> u64 {
    let n = bounds.len();
    let mut e = vec![0u32; n];
    let mut count = 0;
    loop {
        let m = Monomial::from_exponents(e.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

pub(crate) struct SVector {
    pub vector: Vector,
    /// `(x^γ/λ)` multipliers for the two inputs: `S = a·g − b·h`.
    pub a: Term,
    pub b: Term,
}

/// `(1/λ_g)·x^{γ−lm g}·g − (1/λ_h)·x^{γ−lm h}·h` for leading monomials in
/// the same position, `None` otherwise.
pub(crate) fn s_vector(
    ring: &Algebra,
    g: &Vector,
    lg: &ModuleMonomial,
    h: &Vector,
    lh: &ModuleMonomial,
) -> Option<SVector> {
    if lg.position != lh.position {
        return None;
    }
    let lcm = lg.mono.lcm(&lh.mono);
    let (gg, gh) = (lcm.div(&lg.mono).unwrap(), lcm.div(&lh.mono).unwrap());
    let one = Rational::one();
    let pg = g.map(|e| ring.mul_term_left(&one, &gg, e));
    let ph = h.map(|e| ring.mul_term_left(&one, &gh, e));
    let a = pg.0[lg.position].coeff(&lcm).recip();
    let b = ph.0[lh.position].coeff(&lcm).recip();
    let mut v = pg.scale(&a);
    let ord = &ring.order().monomial;
    for (x, y) in v.0.iter_mut().zip(&ph.0) {
        x.add_scaled(&-b.clone(), y, ord);
    }
    Some(SVector {
        vector: v,
        a: Term::new(a, gg),
        b: Term::new(b, gh),
    })
}

/// Reduced Gröbner basis of the `side`-module generated by the columns of
/// `f`, with provenance.
pub fn buchberger(alg: &Algebra, side: Side, f: &Matrix) -> Result<GroebnerBasis> {
    Ok(buchberger_with_limit(alg, side, f, None)?.expect("unbounded completion finishes"))
}

/// [`buchberger`] that gives up, returning `None`, once the S-vector
/// reductions have touched more than `max_work` terms.
pub fn buchberger_with_limit(
    alg: &Algebra,
    side: Side,
    f: &Matrix,
    max_work: Option<usize>,
) -> Result<Option<GroebnerBasis>> {
    f.check_algebra(alg)?;
    let ring = working_ring(alg, side);
    let s = f.ncols();
    let mut gens = Vec::new();
    let mut prov = Vec::new();
    for (j, c) in f.columns().iter().enumerate() {
        if !c.is_zero() {
            gens.push(to_working(alg, side, c));
            prov.push(Vector::unit(ring, s, j));
        }
    }
    let Some((elements, provenance)) = complete(ring, gens, prov, max_work) else {
        return Ok(None);
    };
    let (elements, leads, provenance) = reduce_with_provenance(ring, elements, provenance);
    Ok(Some(GroebnerBasis {
        algebra: alg.clone(),
        side,
        rank: f.nrows(),
        ngens: s,
        elements,
        leads,
        provenance,
    }))
}

/// Canonical form (monic, interreduced, sorted) of a basis that is already
/// a Gröbner basis.
pub fn reduce_basis(alg: &Algebra, side: Side, g: &[Vector]) -> Vec<Vector> {
    let ring = working_ring(alg, side);
    let g: Vec<Vector> = g
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| to_working(alg, side, v))
        .collect();
    let prov = vec![Vector::zero(0); g.len()];
    let (elements, _, _) = reduce_with_provenance(ring, g, prov);
    elements.iter().map(|v| from_working(alg, side, v)).collect()
}

/// Membership in the module generated by the columns of `f`, giving up
/// (`None`) once the completion has touched more than `max_work` terms.
pub(crate) fn bounded_member(alg: &Algebra, side: Side, f: &Matrix, v: &Vector, max_work: usize) -> Option<bool> {
    let ring = working_ring(alg, side);
    let gens: Vec<Vector> = f
        .columns()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| to_working(alg, side, c))
        .collect();
    let prov = vec![Vector::zero(0); gens.len()];
    let (g, _) = complete(ring, gens, prov, Some(max_work))?;
    let leads: Vec<Option<ModuleMonomial>> = g.iter().map(|e| e.leading(ring.order()).map(|l| l.0)).collect();
    let mut budget = max_work;
    Some(divide_within(ring, &to_working(alg, side, v), &g, &leads, &mut budget)?.remainder.is_zero())
}

/// Runs the pair loop with the normal selection strategy. With a work
/// limit, returns `None` once the reductions have used it up.
fn complete(
    ring: &Algebra,
    mut g: Vec<Vector>,
    mut h: Vec<Vector>,
    limit: Option<usize>,
) -> Option<(Vec<Vector>, Vec<Vector>)> {
    let mut budget = limit.unwrap_or(usize::MAX);
    let order = ring.order();
    let mut leads: Vec<ModuleMonomial> = g.iter().map(|v| v.leading(order).unwrap().0).collect();
    let mut pairs: Vec<(usize, usize, ModuleMonomial)> = Vec::new();
    let pair_for = |leads: &[ModuleMonomial], i: usize, j: usize| -> Option<(usize, usize, ModuleMonomial)> {
        (leads[i].position == leads[j].position).then(|| {
            (
                i,
                j,
                ModuleMonomial {
                    mono: leads[i].mono.lcm(&leads[j].mono),
                    position: leads[i].position,
                },
            )
        })
    };
    for j in 0..g.len() {
        for i in 0..j {
            pairs.extend(pair_for(&leads, i, j));
        }
    }
    while !pairs.is_empty() {
        let mut best = 0;
        for (k, p) in pairs.iter().enumerate().skip(1) {
            if order.compare(&p.2, &pairs[best].2) == Ordering::Less {
                best = k;
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        // Chain criterion: skip when some `g_k` has a leading monomial
        // dividing the lcm and both pairs with `k` are already done.
        let pending = |a: usize, b: usize| pairs.iter().any(|p| (p.0, p.1) == (a.min(b), a.max(b)));
        if (0..g.len()).any(|k| k != i && k != j && leads[k].divides(&lcm) && !pending(i, k) && !pending(j, k)) {
            continue;
        }
        let sv = s_vector(ring, &g[i], &leads[i], &g[j], &leads[j]).unwrap();
        let opt_leads: Vec<Option<ModuleMonomial>> = leads.iter().cloned().map(Some).collect();
        let d = divide_within(ring, &sv.vector, &g, &opt_leads, &mut budget)?;
        if d.remainder.is_zero() {
            continue;
        }
        let mut hr = Vector::zero(h[i].rank());
        hr.add_term_left(ring, &sv.a.coeff, &sv.a.mono, &h[i]);
        hr.add_term_left(ring, &-sv.b.coeff.clone(), &sv.b.mono, &h[j]);
        subtract_combination(ring, &mut hr, &d.quotients, &h, &mut budget)?;
        let (lead, lc) = d.remainder.leading(order).unwrap();
        let inv = lc.recip();
        g.push(d.remainder.scale(&inv));
        h.push(hr.scale(&inv));
        leads.push(lead);
        let new = g.len() - 1;
        for i in 0..new {
            pairs.extend(pair_for(&leads, i, new));
        }
    }
    Some((g, h))
}

/// `target -= Σ_k q_k·vs_k`, charging `|q_k|·|e|` against `budget` for
/// each entry product.
fn subtract_combination(ring: &Algebra, target: &mut Vector, q: &[Poly], vs: &[Vector], budget: &mut usize) -> Option<()> {
    let ord = &ring.order().monomial;
    let minus_one = -Rational::one();
    for (qk, vk) in q.iter().zip(vs) {
        if qk.is_zero() || vk.rank() == 0 {
            continue;
        }
        for (t, e) in target.0.iter_mut().zip(&vk.0) {
            if !e.is_zero() {
                *budget = budget.checked_sub(qk.len() * e.len())?;
                t.add_scaled(&minus_one, &ring.mul(qk, e), ord);
            }
        }
    }
    Some(())
}

fn reduce_with_provenance(
    ring: &Algebra,
    g: Vec<Vector>,
    h: Vec<Vector>,
) -> (Vec<Vector>, Vec<ModuleMonomial>, Vec<Vector>) {
    let order = ring.order();
    let leads: Vec<ModuleMonomial> = g.iter().map(|v| v.leading(order).unwrap().0).collect();
    // Drop elements whose leading monomial is divisible by another's; among
    // equal leading monomials the first survives.
    let keep: Vec<usize> = (0..g.len())
        .filter(|&i| {
            !(0..g.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i))
        })
        .collect();
    let mut g: Vec<Vector> = keep.iter().map(|&i| g[i].clone()).collect();
    let mut h: Vec<Vector> = keep.iter().map(|&i| h[i].clone()).collect();
    let leads: Vec<ModuleMonomial> = keep.iter().map(|&i| leads[i].clone()).collect();

    for i in 0..g.len() {
        let others: Vec<Option<ModuleMonomial>> = leads
            .iter()
            .enumerate()
            .map(|(k, l)| (k != i).then(|| l.clone()))
            .collect();
        let d = divide_with_leads(ring, &g[i], &g, &others);
        let mut hi = h[i].clone();
        let mut unlimited = usize::MAX;
        subtract_combination(ring, &mut hi, &d.quotients, &h, &mut unlimited);
        g[i] = d.remainder;
        h[i] = hi;
    }
    for (gi, hi) in g.iter_mut().zip(h.iter_mut()) {
        let inv = gi.leading(order).unwrap().1.recip();
        if !inv.is_one() {
            *gi = gi.scale(&inv);
            *hi = hi.scale(&inv);
        }
    }
    let mut idx: Vec<usize> = (0..g.len()).collect();
    idx.sort_by(|&a, &b| order.compare(&leads[b], &leads[a]));
    (
        idx.iter().map(|&i| g[i].clone()).collect(),
        idx.iter().map(|&i| leads[i].clone()).collect(),
        idx.iter().map(|&i| h[i].clone()).collect(),
    )
}

/// Whether the columns of `f1` and `f2` generate the same `side`-module.
pub fn module_equal(alg: &Algebra, side: Side, f1: &Matrix, f2: &Matrix) -> Result<bool> {
    if f1.nrows() != f2.nrows() {
        return Err(Error::RankMismatch {
            expected: f1.nrows(),
            found: f2.nrows(),
        });
    }
    let g1 = buchberger(alg, side, f1)?;
    let g2 = buchberger(alg, side, f2)?;
    Ok(g1.elements == g2.elements)
}

/// Whether every column of `sub` lies in the module generated by `sup`.
pub fn module_contains(alg: &Algebra, side: Side, sup: &Matrix, sub: &Matrix) -> Result<bool> {
    if sup.nrows() != sub.nrows() {
        return Err(Error::RankMismatch {
            expected: sup.nrows(),
            found: sub.nrows(),
        });
    }
    let g = buchberger(alg, side, sup)?;
    for c in sub.columns() {
        if !g.member(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
