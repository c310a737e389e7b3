//! Syzygy modules, finite presentations and free resolutions.

use num_traits::One;

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::groebner::{bounded_member, buchberger, from_working, s_vector, to_working, GroebnerBasis};
use crate::matrix::{Matrix, Vector};
use crate::poly::{Poly, Rational};

/// Generators of `Syz(F)` on the given side, as the columns of an
/// `s × k` matrix, passed through [`trim`].
pub fn syzygy(alg: &Algebra, side: Side, f: &Matrix) -> Result<Matrix> {
    let raw = syzygy_untrimmed(alg, side, f)?;
    trim(alg, side, raw)
}

/// `[H·Syz(G) | I_s − H·Q]` with zero columns removed, where `G` is the
/// reduced Gröbner basis of the columns of `F`, `H` its provenance and `Q`
/// the division coefficients of `F` by `G`.
pub fn syzygy_untrimmed(alg: &Algebra, side: Side, f: &Matrix) -> Result<Matrix> {
    let gb = buchberger(alg, side, f)?;
    let s = f.ncols();
    let ring = gb.working();
    let g = gb.working_elements();
    let leads = gb.leading_monomials();
    let h = gb.working_provenance();
    let t = g.len();
    let mut out = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let Some(sv) = s_vector(ring, &g[i], &leads[i], &g[j], &leads[j]) else {
                continue;
            };
            let d = gb.divide_working(&sv.vector);
            debug_assert!(d.remainder.is_zero(), "S-vector of a Gröbner basis must reduce to zero");
            let mut z = d.quotients.iter().map(Poly::neg).collect::<Vec<_>>();
            let ord = &ring.order().monomial;
            z[i].add_scaled(&Rational::one(), &Poly::monomial(sv.a.coeff.clone(), sv.a.mono.clone()), ord);
            z[j].add_scaled(&-Rational::one(), &Poly::monomial(sv.b.coeff.clone(), sv.b.mono.clone()), ord);
            out.push(combine_left(ring, &z, h, s));
        }
    }
    for (j, c) in f.columns().iter().enumerate() {
        let d = gb.divide_working(&to_working(alg, side, c));
        debug_assert!(d.remainder.is_zero());
        let mut v = combine_left(ring, &d.quotients, h, s).scale(&-Rational::one());
        let ord = &ring.order().monomial;
        v.0[j].add_scaled(&Rational::one(), &ring.one(), ord);
        out.push(v);
    }
    let cols: Vec<Vector> = out
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| from_working(alg, side, &v))
        .collect();
    Ok(Matrix::from_columns(s, cols)?)
}

/// `Σ_k z_k·h_k` over the working ring.
fn combine_left(ring: &Algebra, z: &[Poly], h: &[Vector], s: usize) -> Vector {
    let ord = &ring.order().monomial;
    let mut acc = Vector::zero(s);
    for (zk, hk) in z.iter().zip(h) {
        if zk.is_zero() {
            continue;
        }
        for (a, e) in acc.0.iter_mut().zip(&hk.0) {
            if !e.is_zero() {
                a.add_scaled(&Rational::one(), &ring.mul(zk, e), ord);
            }
        }
    }
    acc
}

/// Work cap, in terms touched by reductions, for each membership check in
/// [`trim`].
pub const TRIM_WORK: usize = 20_000;

/// Removes zero columns and columns proportional to an earlier one, then
/// every column found to lie in the module generated by the remaining ones.
/// Removal is attempted from the largest leading term down; a check that
/// exceeds [`TRIM_WORK`] keeps the column.
pub fn trim(alg: &Algebra, side: Side, m: Matrix) -> Result<Matrix> {
    let rows = m.nrows();
    let order = alg.order();
    let mut cols: Vec<Vector> = Vec::new();
    for c in m.into_columns() {
        if c.is_zero() {
            continue;
        }
        let monic = c.scale(&c.leading(order).unwrap().1.recip());
        if !cols.iter().any(|d| d.scale(&d.leading(order).unwrap().1.recip()) == monic) {
            cols.push(c);
        }
    }
    if cols.len() <= 1 {
        return Matrix::from_columns(rows, cols);
    }
    let mut idx: Vec<usize> = (0..cols.len()).collect();
    idx.sort_by(|&a, &b| {
        let (la, lb) = (cols[a].leading(order).unwrap().0, cols[b].leading(order).unwrap().0);
        order.compare(&lb, &la).then(b.cmp(&a))
    });
    let mut alive = vec![true; cols.len()];
    for &i in &idx {
        let others: Vec<Vector> = (0..cols.len())
            .filter(|&k| k != i && alive[k])
            .map(|k| cols[k].clone())
            .collect();
        if others.is_empty() {
            break;
        }
        let others = Matrix::from_columns(rows, others)?;
        if bounded_member(alg, side, &others, &cols[i], TRIM_WORK) == Some(true) {
            alive[i] = false;
        }
    }
    let kept = cols
        .into_iter()
        .zip(alive)
        .filter_map(|(c, a)| a.then_some(c))
        .collect();
    Matrix::from_columns(rows, kept)
}

/// `M ≅ A^s/⟨Δ⟩`. `generators` is the embedding `F_0` when `M` was given
/// as a submodule of a free module.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub side: Side,
    pub generators: Option<Matrix>,
    pub relations: Matrix,
}

impl Presentation {
    /// A presentation given directly by its relation matrix.
    pub fn from_relations(side: Side, relations: Matrix) -> Self {
        Presentation {
            side,
            generators: None,
            relations,
        }
    }

    /// Number of generators `s`.
    pub fn ngens(&self) -> usize {
        self.relations.nrows()
    }

    /// Same relation matrix, transposed and read on the other side.
    pub fn transposed(&self) -> Presentation {
        Presentation::from_relations(self.side.flip(), self.relations.transpose())
    }
}

/// `(F_0, Syz(F_0))`.
pub fn presentation(alg: &Algebra, side: Side, generators: &Matrix) -> Result<Presentation> {
    let relations = syzygy(alg, side, generators)?;
    Ok(Presentation {
        side,
        generators: Some(generators.clone()),
        relations,
    })
}

/// Generators of `Syz(M/N)` for `N = ⟨G⟩ ⊆ M = ⟨F⟩`: the first `s`
/// coordinates of `Syz([F | G])`.
pub fn quotient_syzygy(alg: &Algebra, side: Side, f: &Matrix, g: &Matrix) -> Result<Matrix> {
    if f.nrows() != g.nrows() {
        return Err(Error::RankMismatch {
            expected: f.nrows(),
            found: g.nrows(),
        });
    }
    let full = syzygy_untrimmed(alg, side, &Matrix::hcat(&[f, g])?)?;
    trim(alg, side, full.take_rows(f.ncols()))
}

/// `⋯ → A^{s_2} →F_2→ A^{s_1} →F_1→ A^{s_0} → M → 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Resolution {
    pub side: Side,
    pub generators: Option<Matrix>,
    rank0: usize,
    maps: Vec<Matrix>,
}

impl Resolution {
    /// Length: the number of nonzero maps `F_1, …, F_len`.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `s_r`, zero past the end.
    pub fn rank(&self, r: usize) -> usize {
        match r {
            0 => self.rank0,
            r if r <= self.maps.len() => self.maps[r - 1].ncols(),
            _ => 0,
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.len()).map(|r| self.rank(r)).collect()
    }

    /// `F_r` for `r ≥ 1`; an `s_{r−1} × 0` matrix past the end.
    pub fn map(&self, r: usize) -> Matrix {
        assert!(r >= 1, "resolution maps are numbered from 1");
        if r <= self.maps.len() {
            self.maps[r - 1].clone()
        } else {
            Matrix::zeros(self.rank(r - 1), 0)
        }
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Builds a resolution from given maps, checking that shapes chain.
    pub fn from_maps(side: Side, rank0: usize, maps: Vec<Matrix>) -> Result<Resolution> {
        let mut prev = rank0;
        for (r, m) in maps.iter().enumerate() {
            if m.nrows() != prev {
                return Err(Error::ShapeMismatch(format!(
                    "F_{} has {} rows, expected {}",
                    r + 1,
                    m.nrows(),
                    prev
                )));
            }
            prev = m.ncols();
        }
        let mut maps = maps;
        while maps.last().is_some_and(|m| m.ncols() == 0) {
            maps.pop();
        }
        Ok(Resolution {
            side,
            generators: None,
            rank0,
            maps,
        })
    }
}

/// Default cap on the resolution length: the variable count plus two.
pub fn default_max_len(alg: &Algebra) -> usize {
    alg.n() + 2
}

/// `F_1 = Δ`, `F_{r+1} = Syz(F_r)`, until a syzygy module is zero.
pub fn free_resolution(alg: &Algebra, start: &Presentation, max_len: usize) -> Result<Resolution> {
    let side = start.side;
    let mut res = Resolution {
        side,
        generators: start.generators.clone(),
        rank0: start.ngens(),
        maps: Vec::new(),
    };
    let mut current = start.relations.clone().prune_zero_columns();
    while current.ncols() > 0 {
        if res.maps.len() == max_len {
            return Err(Error::LengthExceeded(Box::new(res)));
        }
        let next = syzygy(alg, side, &current)?;
        res.maps.push(current);
        current = next;
    }
    Ok(res)
}

/// `⟨X⟩/⟨Y⟩` on a side.
#[derive(Clone, Debug, PartialEq)]
pub struct SubquotientData {
    pub side: Side,
    pub numerator: Matrix,
    pub denominator: Matrix,
}

/// Outcome of a zero test: the first numerator column outside `⟨Y⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTest {
    pub zero: bool,
    pub witness: Option<usize>,
}

impl SubquotientData {
    pub fn check_containment(&self, alg: &Algebra) -> Result<()> {
        let gx = buchberger(alg, self.side, &self.numerator)?;
        for (j, c) in self.denominator.columns().iter().enumerate() {
            if !gx.member(c)? {
                return Err(Error::ContainmentViolation { column: j + 1 });
            }
        }
        Ok(())
    }

    pub fn zero_test(&self, alg: &Algebra) -> Result<ZeroTest> {
        if self.numerator.nrows() != self.denominator.nrows() {
            return Err(Error::RankMismatch {
                expected: self.numerator.nrows(),
                found: self.denominator.nrows(),
            });
        }
        self.check_containment(alg)?;
        let gy = buchberger(alg, self.side, &self.denominator)?;
        first_outside(&gy, &self.numerator)
    }
}

pub(crate) fn first_outside(gb: &GroebnerBasis, m: &Matrix) -> Result<ZeroTest> {
    for (j, c) in m.columns().iter().enumerate() {
        if !gb.member(c)? {
            return Ok(ZeroTest {
                zero: false,
                witness: Some(j),
            });
        }
    }
    Ok(ZeroTest {
        zero: true,
        witness: None,
    })
}

/// `⟨X⟩/⟨Y⟩ = 0`, after checking `⟨Y⟩ ⊆ ⟨X⟩`.
pub fn is_zero_quotient(alg: &Algebra, q: &SubquotientData) -> Result<bool> {
    Ok(q.zero_test(alg)?.zero)
}
