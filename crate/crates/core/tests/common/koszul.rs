//! Brute-force homology of the Koszul complex of ℚ = ℚ[x,y]/(x,y), by
//! ranks of ℚ-matrices on monomial bases of each graded piece.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for k in c..cols {
                    let v = &f * &m[r][k];
                    m[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

fn one() -> BigRational {
    BigRational::one()
}

/// Monomials x^a y^(d−a) of degree d, listed by decreasing a.
fn basis(d: i64) -> Vec<(i64, i64)> {
    if d < 0 {
        return Vec::new();
    }
    (0..=d).rev().map(|a| (a, d - a)).collect()
}

/// Matrix of `(p, q) ↦ Σ blocks` from a direct sum of degree pieces to
/// another, where each block multiplies by a signed monomial.
fn block_map(src: &[i64], dst: &[i64], blocks: &[(usize, usize, i64, (i64, i64))]) -> Vec<Vec<BigRational>> {
    let sb: Vec<Vec<(i64, i64)>> = src.iter().map(|&d| basis(d)).collect();
    let db: Vec<Vec<(i64, i64)>> = dst.iter().map(|&d| basis(d)).collect();
    let nrows: usize = db.iter().map(|b| b.len()).sum();
    let ncols: usize = sb.iter().map(|b| b.len()).sum();
    let mut m = vec![vec![BigRational::zero(); ncols]; nrows];
    let off = |bs: &[Vec<(i64, i64)>], k: usize| bs[..k].iter().map(|b| b.len()).sum::<usize>();
    for &(from, to, sign, (ex, ey)) in blocks {
        for (j, &(a, b)) in sb[from].iter().enumerate() {
            let target = (a + ex, b + ey);
            if let Some(i) = db[to].iter().position(|&t| t == target) {
                let v = if sign > 0 { one() } else { -one() };
                m[off(&db, to) + i][off(&sb, from) + j] += v;
            }
        }
    }
    m
}

fn dim(ds: &[i64]) -> usize {
    ds.iter().map(|&d| basis(d).len()).sum()
}

/// Total dimensions of `Ext^r(ℚ, ℚ[x,y])` for r = 0, 1, 2, summed over
/// internal degrees up to `top`.
pub fn ext_dims(top: i64) -> [usize; 3] {
    let mut out = [0; 3];
    for d in -2..=top {
        let c0 = [d];
        let c1 = [d + 1, d + 1];
        let c2 = [d + 2];
        // d0: a ↦ (x a, y a); d1: (a, b) ↦ y a − x b
        let d0 = block_map(&c0, &c1, &[(0, 0, 1, (1, 0)), (0, 1, 1, (0, 1))]);
        let d1 = block_map(&c1, &c2, &[(0, 0, 1, (0, 1)), (1, 0, -1, (1, 0))]);
        let (r0, r1) = (rank(d0), rank(d1));
        out[0] += dim(&c0) - r0;
        out[1] += dim(&c1) - r1 - r0;
        out[2] += dim(&c2) - r1;
    }
    out
}

/// Dimensions of `Tor_r(ℚ, ℚ)` for r = 0..=3: the Koszul complex
/// `0 → A → A² → A` tensored with ℚ, i.e. evaluated at the origin.
pub fn tor_dims() -> [usize; 4] {
    // entries as (coefficient, exponent of x, exponent of y)
    type Entry = Vec<(i64, i64, i64)>;
    let d1: Vec<Vec<Entry>> = vec![vec![vec![(1, 1, 0)], vec![(1, 0, 1)]]];
    let d2: Vec<Vec<Entry>> = vec![vec![vec![(1, 0, 1)]], vec![vec![(-1, 1, 0)]]];
    let at_origin = |m: &Vec<Vec<Entry>>| -> Vec<Vec<BigRational>> {
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        let c: i64 = e.iter().filter(|t| t.1 == 0 && t.2 == 0).map(|t| t.0).sum();
                        BigRational::from_integer(c.into())
                    })
                    .collect()
            })
            .collect()
    };
    let (r1, r2) = (rank(at_origin(&d1)), rank(at_origin(&d2)));
    let c = [1usize, 2, 1, 0];
    [c[0] - r1, c[1] - r1 - r2, c[2] - r2, c[3]]
}
