//! Left and right division of vectors in `A^m` by a list of vectors.

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::matrix::Vector;
use crate::order::ModuleMonomial;
use crate::poly::{Poly, Rational, Term};

/// `f = Σ q_k·g_k + r` (left) or `f = Σ g_k·q_k + r` (right).
#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub quotients: Vec<Poly>,
    pub remainder: Vector,
}

/// Divides `f` by `gs` on the given side. Zero divisors are skipped. On the
/// right side the remainder is irreducible in the PBW coordinates of the
/// opposite algebra.
pub fn divide(alg: &Algebra, side: Side, f: &Vector, gs: &[Vector]) -> Result<Division> {
    check_vector(alg, f, f.rank())?;
    for g in gs {
        check_vector(alg, g, f.rank())?;
    }
    match side {
        Side::Left => Ok(divide_left(alg, f, gs)),
        Side::Right => {
            let to = |v: &Vector| v.map(|p| alg.to_opposite(p));
            let gs: Vec<Vector> = gs.iter().map(to).collect();
            let d = divide_left(alg.opposite(), &to(f), &gs);
            Ok(Division {
                quotients: d.quotients.iter().map(|q| alg.from_opposite(q)).collect(),
                remainder: d.remainder.map(|p| alg.from_opposite(p)),
            })
        }
    }
}

pub(crate) fn check_vector(alg: &Algebra, v: &Vector, rank: usize) -> Result<()> {
    if v.rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: v.rank(),
        });
    }
    for p in v.entries() {
        alg.check_poly(p)?;
    }
    Ok(())
}

/// Left division over `ring` with leading monomials already known.
pub(crate) fn divide_left(ring: &Algebra, f: &Vector, gs: &[Vector]) -> Division {
    let leads: Vec<Option<ModuleMonomial>> = gs
        .iter()
        .map(|g| g.leading(ring.order()).map(|(m, _)| m))
        .collect();
    divide_with_leads(ring, f, gs, &leads)
}

pub(crate) fn divide_with_leads(
    ring: &Algebra,
    f: &Vector,
    gs: &[Vector],
    leads: &[Option<ModuleMonomial>],
) -> Division {
    let mut budget = usize::MAX;
    divide_within(ring, f, gs, leads, &mut budget).expect("unbounded division finishes")
}

/// Division that charges each step, one unit per term touched, against
/// `budget` and gives up when it runs out.
pub(crate) fn divide_within(
    ring: &Algebra,
    f: &Vector,
    gs: &[Vector],
    leads: &[Option<ModuleMonomial>],
    budget: &mut usize,
) -> Option<Division> {
    let order = ring.order();
    let mut p = f.clone();
    let mut rem = Vector::zero(f.rank());
    let mut quotients: Vec<Poly> = vec![Poly::zero(); gs.len()];
    while let Some((lm, lc)) = p.leading(order) {
        let lc = lc.clone();
        let hit = leads
            .iter()
            .position(|l| l.as_ref().is_some_and(|l| l.divides(&lm)));
        match hit {
            Some(k) => {
                let lead_k = leads[k].as_ref().unwrap();
                let gamma = lm.mono.div(&lead_k.mono).unwrap();
                let prod = gs[k].map(|e| ring.mul_term_left(&Rational::one(), &gamma, e));
                let cost = 1 + prod.0.iter().chain(&p.0).map(Poly::len).sum::<usize>();
                *budget = budget.checked_sub(cost)?;
                let lambda = prod.0[lm.position].leading_term().unwrap().coeff.clone();
                let a = lc / lambda;
                for (pe, qe) in p.0.iter_mut().zip(&prod.0) {
                    if !qe.is_zero() {
                        pe.add_scaled(&-a.clone(), qe, &order.monomial);
                    }
                }
                quotients[k].push_smallest(Term::new(a, gamma));
            }
            None => {
                *budget = budget.checked_sub(1)?;
                let t = p.0[lm.position].pop_leading().unwrap();
                debug_assert!(!t.coeff.is_zero());
                rem.0[lm.position].push_smallest(t);
            }
        }
    }
    Some(Division {
        quotients,
        remainder: rem,
    })
}
