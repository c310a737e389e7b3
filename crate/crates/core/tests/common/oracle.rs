//! Classical Buchberger over ℚ[x_1..x_n]^m, written without the crate's
//! polynomial types. Order: deglex with x_1 > x_2 > ⋯, then position
//! (e_m > ⋯ > e_1). An optional block split makes every position `< split`
//! dominate the rest, which turns the basis computation into an elimination.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Exp = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub exp: Exp,
    pub pos: usize,
    pub c: BigRational,
}

/// Terms strictly decreasing, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem(pub Vec<Term>);

#[derive(Clone, Copy, Debug)]
pub struct Ord {
    pub split: Option<usize>,
}

impl Ord {
    pub const TOP: Ord = Ord { split: None };

    pub fn cmp(&self, a: (&Exp, usize), b: (&Exp, usize)) -> Ordering {
        if let Some(s) = self.split {
            let (ba, bb) = (a.1 < s, b.1 < s);
            if ba != bb {
                return ba.cmp(&bb);
            }
        }
        let (da, db): (u32, u32) = (a.0.iter().sum(), b.0.iter().sum());
        da.cmp(&db).then_with(|| a.0.cmp(b.0)).then_with(|| a.1.cmp(&b.1))
    }
}

impl Elem {
    pub fn from_map(map: BTreeMap<(Exp, usize), BigRational>, ord: Ord) -> Elem {
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((exp, pos), c)| Term { exp, pos, c })
            .collect();
        terms.sort_by(|a, b| ord.cmp((&b.exp, b.pos), (&a.exp, a.pos)));
        Elem(terms)
    }

    fn to_map(&self) -> BTreeMap<(Exp, usize), BigRational> {
        self.0.iter().map(|t| ((t.exp.clone(), t.pos), t.c.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.0.first()
    }

    /// `self + c·x^e·other`.
    pub fn add_mul(&self, c: &BigRational, e: &Exp, other: &Elem, ord: Ord) -> Elem {
        let mut map = self.to_map();
        for t in &other.0 {
            let exp: Exp = t.exp.iter().zip(e).map(|(a, b)| a + b).collect();
            let entry = map.entry((exp, t.pos)).or_insert_with(BigRational::zero);
            *entry += c * &t.c;
        }
        Elem::from_map(map, ord)
    }

    pub fn monic(&self) -> Elem {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.c.recip();
                Elem(self.0.iter().map(|t| Term { c: &t.c * &inv, ..t.clone() }).collect())
            }
        }
    }
}

fn divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn sub_exp(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lcm(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full reduction of `f` modulo `gs`.
pub fn normal_form(f: &Elem, gs: &[Elem], ord: Ord) -> Elem {
    let mut p = f.clone();
    let mut rem: BTreeMap<(Exp, usize), BigRational> = BTreeMap::new();
    while let Some(t) = p.lead().cloned() {
        let hit = gs.iter().find(|g| {
            let l = g.lead().unwrap();
            l.pos == t.pos && divides(&l.exp, &t.exp)
        });
        match hit {
            Some(g) => {
                let l = g.lead().unwrap();
                let c = -(&t.c / &l.c);
                p = p.add_mul(&c, &sub_exp(&t.exp, &l.exp), g, ord);
            }
            None => {
                rem.insert((t.exp.clone(), t.pos), t.c.clone());
                p.0.remove(0);
            }
        }
    }
    Elem::from_map(rem, ord)
}

fn spoly(f: &Elem, g: &Elem, ord: Ord) -> Option<Elem> {
    let (lf, lg) = (f.lead()?, g.lead()?);
    if lf.pos != lg.pos {
        return None;
    }
    let l = lcm(&lf.exp, &lg.exp);
    let a = Elem::default().add_mul(&lg.c, &sub_exp(&l, &lf.exp), f, ord);
    Some(a.add_mul(&-lf.c.clone(), &sub_exp(&l, &lg.exp), g, ord))
}

/// Reduced, monic Gröbner basis, sorted by decreasing leading term.
pub fn groebner(gens: &[Elem], ord: Ord) -> Vec<Elem> {
    let mut g: Vec<Elem> = gens.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        if let Some(s) = spoly(&g[i], &g[j], ord) {
            let r = normal_form(&s, &g, ord);
            if !r.is_zero() {
                let k = g.len();
                g.push(r.monic());
                for i in 0..k {
                    pairs.push((i, k));
                }
            }
        }
    }
    // minimalize
    let mut keep: Vec<Elem> = Vec::new();
    for (k, e) in g.iter().enumerate() {
        let l = e.lead().unwrap();
        let redundant = g.iter().enumerate().any(|(m, o)| {
            let lo = o.lead().unwrap();
            m != k && lo.pos == l.pos && divides(&lo.exp, &l.exp) && (lo.exp != l.exp || m < k)
        });
        if !redundant {
            keep.push(e.monic());
        }
    }
    // interreduce
    let mut out: Vec<Elem> = Vec::new();
    for k in 0..keep.len() {
        let others: Vec<Elem> = keep.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, e)| e.clone()).collect();
        let head = Elem(vec![keep[k].0[0].clone()]);
        let tail = Elem(keep[k].0[1..].to_vec());
        let mut t = normal_form(&tail, &others, ord);
        t.0.insert(0, head.0[0].clone());
        out.push(t.monic());
    }
    out.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        ord.cmp((&lb.exp, lb.pos), (&la.exp, la.pos))
    });
    out
}

pub fn member(f: &Elem, gb: &[Elem], ord: Ord) -> bool {
    normal_form(f, gb, ord).is_zero()
}

/// Generators of the syzygies of `fs` in ℚ[x]^s, by elimination on
/// `(f_j, e_j)` in ℚ[x]^{m+s}.
pub fn syzygies(fs: &[Elem], m: usize, n: usize) -> Vec<Elem> {
    let ord = Ord { split: Some(m) };
    let lifted: Vec<Elem> = fs
        .iter()
        .enumerate()
        .map(|(j, f)| {
            let mut map: BTreeMap<(Exp, usize), BigRational> = f.to_map();
            map.insert((vec![0; n], m + j), BigRational::one());
            Elem::from_map(map, ord)
        })
        .collect();
    groebner(&lifted, ord)
        .into_iter()
        .filter(|e| e.lead().unwrap().pos >= m)
        .map(|e| {
            let map = e.0.iter().map(|t| ((t.exp.clone(), t.pos - m), t.c.clone())).collect();
            Elem::from_map(map, Ord::TOP)
        })
        .collect()
}
