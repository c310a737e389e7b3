//! Randomized invariants, one seed per case. Each returns a description of
//! the violation.

use rand::Rng;
use skewpbw::division::divide;
use skewpbw::groebner::buchberger;
use skewpbw::syzygy::syzygy;
use skewpbw::{Algebra, Matrix, Poly, Side, Vector};

use super::{gen, rewrite, rng};

type Check = Result<(), String>;

fn pick(seed: u64) -> (rand_chacha::ChaCha8Rng, Algebra, Side) {
    let mut r = rng(seed);
    let algs = gen::algebras();
    let alg = algs[r.gen_range(0..algs.len())].clone();
    let side = if r.gen_bool(0.5) { Side::Left } else { Side::Right };
    (r, alg, side)
}

fn ring(alg: &Algebra, side: Side) -> &Algebra {
    match side {
        Side::Left => alg,
        Side::Right => alg.opposite(),
    }
}

fn to_ring(alg: &Algebra, side: Side, v: &Vector) -> Vector {
    match side {
        Side::Left => v.clone(),
        Side::Right => v.map(|p| alg.to_opposite(p)),
    }
}

/// `Σ q_k·g_k` (left) or `Σ g_k·q_k` (right), entry by entry.
fn recombine(alg: &Algebra, side: Side, qs: &[Poly], gs: &[Vector], rank: usize) -> Vector {
    let mut acc = vec![Poly::zero(); rank];
    for (q, g) in qs.iter().zip(gs) {
        for (a, e) in acc.iter_mut().zip(&g.0) {
            let p = match side {
                Side::Left => alg.mul(q, e),
                Side::Right => alg.mul(e, q),
            };
            *a = alg.add(a, &p);
        }
    }
    Vector(acc)
}

fn show(alg: &Algebra, v: &Vector) -> String {
    let e: Vec<String> = v.0.iter().map(|p| alg.display(p).to_string()).collect();
    format!("({})", e.join(", "))
}

/// `f = Σ q·g + r` with no term of `r` divisible by a leading monomial.
pub fn division(seed: u64) -> Check {
    let (mut r, alg, side) = pick(seed);
    let rank = r.gen_range(1..=2);
    let f = gen::vector(&mut r, &alg, rank, 4, 3);
    let k = r.gen_range(1..=3);
    let gs: Vec<Vector> = gen::columns(&mut r, &alg, rank, k, 3, 2).into_columns();
    let d = divide(&alg, side, &f, &gs).map_err(|e| e.to_string())?;
    let back = recombine(&alg, side, &d.quotients, &gs, rank).add(&alg, &d.remainder);
    if back != f {
        return Err(format!("{:?}: {} ≠ Σqg + r = {}", side, show(&alg, &f), show(&alg, &back)));
    }
    let w = ring(&alg, side);
    let leads: Vec<_> = gs.iter().map(|g| to_ring(&alg, side, g).leading(w.order()).unwrap().0).collect();
    let rem = to_ring(&alg, side, &d.remainder);
    for (pos, p) in rem.0.iter().enumerate() {
        for t in p.terms() {
            if leads.iter().any(|l| l.position == pos && l.mono.divides(&t.mono)) {
                return Err(format!("reducible remainder term in {}", show(&alg, &d.remainder)));
            }
        }
    }
    Ok(())
}

/// Every S-vector of a computed basis reduces to zero, and every basis
/// element is the combination of the input recorded by the provenance.
pub fn s_vectors(seed: u64) -> Check {
    let (mut r, alg, side) = pick(seed);
    let rank = r.gen_range(1..=2);
    let k = r.gen_range(1..=2);
    let f = gen::columns(&mut r, &alg, rank, k, 2, 2);
    let gb = buchberger(&alg, side, &f).map_err(|e| e.to_string())?;
    let w = ring(&alg, side);
    let els: Vec<Vector> = gb.elements().iter().map(|g| to_ring(&alg, side, g)).collect();
    let one = skewpbw::poly::rat(1);
    for a in 0..els.len() {
        for b in a + 1..els.len() {
            let (la, ca) = els[a].leading(w.order()).map(|(m, c)| (m, c.clone())).unwrap();
            let (lb, cb) = els[b].leading(w.order()).map(|(m, c)| (m, c.clone())).unwrap();
            if la.position != lb.position {
                continue;
            }
            let l = la.mono.lcm(&lb.mono);
            let sa = els[a].map(|p| w.mul_term_left(&one, &l.div(&la.mono).unwrap(), p));
            let sb = els[b].map(|p| w.mul_term_left(&one, &l.div(&lb.mono).unwrap(), p));
            let lca = sa.0[la.position].coeff(&l);
            let lcb = sb.0[lb.position].coeff(&l);
            let _ = (ca, cb);
            let s = sa.scale(&lcb).sub(w, &sb.scale(&lca));
            let d = divide(w, Side::Left, &s, &els).map_err(|e| e.to_string())?;
            if !d.remainder.is_zero() {
                return Err(format!("S-vector of elements {a} and {b} leaves {}", show(w, &d.remainder)));
            }
        }
    }
    let h = gb.provenance();
    for (g, hcol) in gb.elements().iter().zip(h.columns()) {
        let comb = recombine(&alg, side, &hcol.0, f.columns(), rank);
        if &comb != g {
            return Err(format!("provenance does not reproduce {}", show(&alg, g)));
        }
    }
    Ok(())
}

/// Every returned syzygy `z` satisfies `F·z = 0`.
pub fn syzygy_soundness(seed: u64) -> Check {
    let (mut r, alg, side) = pick(seed);
    let rank = r.gen_range(1..=2);
    let f = gen::columns(&mut r, &alg, rank, 2, 2, 2);
    let z = syzygy(&alg, side, &f).map_err(|e| e.to_string())?;
    for c in z.columns() {
        let v = recombine(&alg, side, &c.0, f.columns(), rank);
        if !v.is_zero() {
            return Err(format!("F·z = {} for z = {}", show(&alg, &v), show(&alg, c)));
        }
    }
    Ok(())
}

/// `(fg)° = g°·f°` in the opposite algebra, and the map is invertible.
pub fn anti_homomorphism(seed: u64) -> Check {
    let (mut r, alg, _) = pick(seed);
    let f = gen::poly(&mut r, &alg, 3, 3);
    let g = gen::poly(&mut r, &alg, 3, 3);
    let op = alg.opposite();
    let lhs = alg.to_opposite(&alg.mul(&f, &g));
    let rhs = op.mul(&alg.to_opposite(&g), &alg.to_opposite(&f));
    if lhs != rhs {
        return Err(format!("(fg)° ≠ g°f° for f = {}, g = {}", alg.display(&f), alg.display(&g)));
    }
    if alg.from_opposite(&alg.to_opposite(&f)) != f {
        return Err(format!("round trip fails for {}", alg.display(&f)));
    }
    Ok(())
}

/// `(fg)h = f(gh)`.
pub fn associativity(seed: u64) -> Check {
    let (mut r, alg, _) = pick(seed);
    let f = gen::poly(&mut r, &alg, 3, 3);
    let g = gen::poly(&mut r, &alg, 3, 3);
    let h = gen::poly(&mut r, &alg, 3, 3);
    let lhs = alg.mul(&alg.mul(&f, &g), &h);
    let rhs = alg.mul(&f, &alg.mul(&g, &h));
    if lhs != rhs {
        return Err(format!(
            "(fg)h ≠ f(gh) for f = {}, g = {}, h = {}",
            alg.display(&f),
            alg.display(&g),
            alg.display(&h)
        ));
    }
    Ok(())
}

/// `monomial_product` agrees with naive word rewriting.
pub fn rewriting(seed: u64) -> Check {
    let (mut r, alg, _) = pick(seed);
    let u = gen::monomial(&mut r, alg.n(), 4);
    let v = gen::monomial(&mut r, alg.n(), 4);
    let fast = alg.monomial_product(&u, &v);
    let slow = rewrite::product(&alg, &u, &v);
    if fast != slow {
        return Err(format!("{:?}·{:?}: {} vs {}", u, v, alg.display(&fast), alg.display(&slow)));
    }
    Ok(())
}

/// Columns as a matrix, for callers that only have vectors.
pub fn matrix(rank: usize, cols: Vec<Vector>) -> Matrix {
    Matrix::from_columns(rank, cols).unwrap()
}
