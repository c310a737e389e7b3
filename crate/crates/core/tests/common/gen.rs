//! Seeded random algebras, polynomials and matrices.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use skewpbw::algebra::presets::{anticommuting_plane, commutative, heisenberg, quantum_plane, weyl};
use skewpbw::poly::{rat, ratio};
use skewpbw::{Algebra, AlgebraBuilder, Matrix, Monomial, Poly, Rational, Term, Vector};

/// Quasi-commutative and non-quasi-commutative algebras in 2 and 3
/// variables.
pub fn algebras() -> Vec<Algebra> {
    let x = |n, i| vec![Term::new(rat(1), Monomial::var(n, i))];
    let scaled = |n, i, c| vec![Term::new(rat(c), Monomial::var(n, i))];
    vec![
        commutative(2),
        commutative(3),
        anticommuting_plane(),
        quantum_plane(rat(2)).unwrap(),
        quantum_plane(ratio(-1, 3)).unwrap(),
        weyl(),
        heisenberg(),
        AlgebraBuilder::new(["x", "y", "z"])
            .relation(0, 1, rat(2), vec![])
            .relation(0, 2, rat(-1), vec![])
            .relation(1, 2, ratio(1, 2), vec![])
            .build()
            .unwrap(),
        // q-Weyl: d t = 2 t d + 1
        AlgebraBuilder::new(["t", "d"])
            .relation(0, 1, rat(2), vec![Term::new(rat(1), Monomial::one(2))])
            .build()
            .unwrap(),
        // U(sl2): f e = e f − h, h e = e h + 2e, h f = f h − 2f
        AlgebraBuilder::new(["e", "f", "h"])
            .relation(0, 1, rat(1), scaled(3, 2, -1))
            .relation(0, 2, rat(1), scaled(3, 0, 2))
            .relation(1, 2, rat(1), scaled(3, 1, -2))
            .build()
            .unwrap(),
        // x central, z y = 2 y z + x
        AlgebraBuilder::new(["x", "y", "z"])
            .relation(1, 2, rat(2), x(3, 0))
            .build()
            .unwrap(),
    ]
}

pub fn coeff(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = loop {
        let v = rng.gen_range(-3..=3);
        if v != 0 {
            break v;
        }
    };
    if rng.gen_bool(0.2) {
        ratio(n, rng.gen_range(2..=3))
    } else {
        rat(n)
    }
}

pub fn monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Monomial {
    let d = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(e)
}

pub fn poly(rng: &mut ChaCha8Rng, alg: &Algebra, terms: usize, max_deg: u32) -> Poly {
    let k = rng.gen_range(0..=terms);
    let n = alg.n();
    Poly::from_terms(
        (0..k).map(|_| Term::new(coeff(rng), monomial(rng, n, max_deg))),
        &alg.order().monomial,
    )
}

pub fn vector(rng: &mut ChaCha8Rng, alg: &Algebra, rank: usize, terms: usize, max_deg: u32) -> Vector {
    Vector((0..rank).map(|_| poly(rng, alg, terms, max_deg)).collect())
}

/// Nonzero columns.
pub fn columns(rng: &mut ChaCha8Rng, alg: &Algebra, rank: usize, count: usize, terms: usize, max_deg: u32) -> Matrix {
    let cols = (0..count)
        .map(|_| loop {
            let v = vector(rng, alg, rank, terms, max_deg);
            if !v.is_zero() {
                break v;
            }
        })
        .collect();
    Matrix::from_columns(rank, cols).unwrap()
}
