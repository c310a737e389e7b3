//! Monomial orders on `Mon(A)` and term orders on the free module `A^m`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Monomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseOrder {
    Deglex,
    Lex,
    Degrevlex,
}

/// A monomial order. `priority[0]` is the largest variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    base: BaseOrder,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(base: BaseOrder, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            if v >= priority.len() || seen[v] {
                return Err(Error::InvalidAlgebra(format!(
                    "variable priority {:?} is not a permutation",
                    priority
                )));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { base, priority })
    }

    /// Deglex with `x_1 ≻ ⋯ ≻ x_n`.
    pub fn deglex(n: usize) -> Self {
        MonomialOrder {
            base: BaseOrder::Deglex,
            priority: (0..n).collect(),
        }
    }

    pub fn base(&self) -> BaseOrder {
        self.base
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.base {
            BaseOrder::Lex => self.lex(ea, eb),
            BaseOrder::Deglex => a.degree().cmp(&b.degree()).then_with(|| self.lex(ea, eb)),
            BaseOrder::Degrevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.priority.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        for &v in &self.priority {
            match ea[v].cmp(&eb[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleStrategy {
    /// Term over position.
    Top,
    /// Position over term.
    Pot,
}

/// Ranking of the canonical basis vectors `e_1, …, e_m` (0-based internally).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PositionPriority {
    /// `e_m > ⋯ > e_1`.
    Descending,
    /// `e_1 > ⋯ > e_m`.
    Ascending,
    /// Explicit list, largest first. Positions not listed rank below all
    /// listed ones, descending among themselves.
    Custom(Vec<usize>),
}

impl PositionPriority {
    fn key(&self, pos: usize) -> i64 {
        match self {
            PositionPriority::Descending => pos as i64,
            PositionPriority::Ascending => -(pos as i64),
            PositionPriority::Custom(list) => match list.iter().position(|&p| p == pos) {
                Some(idx) => i64::MAX / 2 - idx as i64,
                None => pos as i64,
            },
        }
    }

    /// Normalizes an explicit list to `Descending`/`Ascending` when it is one.
    pub fn from_list(list: Vec<usize>) -> Self {
        let m = list.len();
        if list.iter().enumerate().all(|(k, &p)| p == m - 1 - k) {
            PositionPriority::Descending
        } else if list.iter().enumerate().all(|(k, &p)| p == k) {
            PositionPriority::Ascending
        } else {
            PositionPriority::Custom(list)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleOrder {
    pub strategy: ModuleStrategy,
    pub positions: PositionPriority,
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder {
            strategy: ModuleStrategy::Top,
            positions: PositionPriority::Descending,
        }
    }
}

/// A monomial order together with a module term order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderSpec {
    pub monomial: MonomialOrder,
    pub module: ModuleOrder,
}

impl OrderSpec {
    /// Deglex with declaration-order priority, TOP with `e_m > ⋯ > e_1`.
    pub fn default_for(n: usize) -> Self {
        OrderSpec {
            monomial: MonomialOrder::deglex(n),
            module: ModuleOrder::default(),
        }
    }

    pub fn compare(&self, u: &ModuleMonomial, v: &ModuleMonomial) -> Ordering {
        let pos = || {
            let p = &self.module.positions;
            p.key(u.position).cmp(&p.key(v.position))
        };
        match self.module.strategy {
            ModuleStrategy::Top => self.monomial.cmp(&u.mono, &v.mono).then_with(pos),
            ModuleStrategy::Pot => pos().then_with(|| self.monomial.cmp(&u.mono, &v.mono)),
        }
    }

    /// [`compare`](Self::compare) with the ambient rank and variable count
    /// checked.
    pub fn compare_in(&self, rank: usize, u: &ModuleMonomial, v: &ModuleMonomial) -> Result<Ordering> {
        let n = self.monomial.nvars();
        for w in [u, v] {
            if w.position >= rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: w.position + 1,
                });
            }
            if w.mono.nvars() != n {
                return Err(Error::AlgebraMismatch {
                    expected: n,
                    found: w.mono.nvars(),
                });
            }
        }
        Ok(self.compare(u, v))
    }
}

/// `x^α e_i`, with `position` 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleMonomial {
    pub mono: Monomial,
    pub position: usize,
}

impl ModuleMonomial {
    /// Same position and componentwise exponent `≤`.
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.position == other.position && self.mono.divides(&other.mono)
    }
}
