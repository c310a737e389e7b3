//! Module-theoretic tests built on Hom and Ext: stable freeness, duals,
//! grade, transposed modules, torsion and reflexiveness.

use std::fmt;

use crate::algebra::{Algebra, Side};
use crate::error::Result;
use crate::homological::{ext, hom, relations_of, resolve, Convention, HomologyResult, ModuleInput, Options};
use crate::matrix::Matrix;
use crate::syzygy::{Presentation, Resolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A verdict with the Hom or Ext module that decided it.
#[derive(Clone, Debug, PartialEq)]
pub struct TestVerdict {
    pub verdict: Verdict,
    pub witness: Option<HomologyResult>,
    pub note: String,
}

impl TestVerdict {
    fn new(verdict: Verdict, witness: HomologyResult, note: impl Into<String>) -> Self {
        TestVerdict {
            verdict,
            witness: Some(witness),
            note: note.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade {
    Finite(usize),
    /// `Ext^i(M, A) = 0` for every `i` up to the bound.
    InfinityUpTo(usize),
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Finite(j) => write!(f, "{j}"),
            Grade::InfinityUpTo(b) => write!(f, "> {b}"),
        }
    }
}

/// Stably free iff `Ext^1(M, A) = 0`, valid for projective dimension ≤ 1.
/// A nonzero `Ext^1` always answers No.
pub fn stably_free_test(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<TestVerdict> {
    let res = resolve(alg, side, m, opts)?;
    let len = res.len();
    let e1 = ext(alg, side, &ModuleInput::Resolution(res), &ModuleInput::Ring, 1, opts)?;
    Ok(if !e1.zero {
        TestVerdict::new(Verdict::No, e1, "Ext^1(M, A) is nonzero")
    } else if len <= 1 {
        TestVerdict::new(Verdict::Yes, e1, format!("Ext^1(M, A) = 0 and the resolution has length {len}"))
    } else {
        TestVerdict::new(
            Verdict::Inconclusive,
            e1,
            format!("Ext^1(M, A) = 0 but the resolution has length {len}"),
        )
    })
}

/// `M* = Hom(M, A)`, with `A` presented according to the convention.
pub fn dual(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<HomologyResult> {
    hom(alg, side, m, &ModuleInput::Ring, opts)
}

/// Least `i ≤ max_i` with `Ext^i(M, A) ≠ 0`.
pub fn grade(alg: &Algebra, side: Side, m: &ModuleInput, max_i: usize, opts: &Options) -> Result<Grade> {
    let res = ModuleInput::Resolution(resolve(alg, side, m, opts)?);
    for i in 0..=max_i {
        if !ext(alg, side, &res, &ModuleInput::Ring, i, opts)?.zero {
            return Ok(Grade::Finite(i));
        }
    }
    Ok(Grade::InfinityUpTo(max_i))
}

/// `M^T = A^{s_1}/⟨F_1^T⟩` on the other side.
pub fn transpose_module(side: Side, relations: &Matrix) -> Presentation {
    Presentation::from_relations(side, relations.clone()).transposed()
}

/// `M^T` as a module argument. Under the unit convention its presentation is
/// taken as a complete resolution.
fn transposed_input(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<ModuleInput> {
    let t = transpose_module(side, &relations_of(alg, side, m)?);
    Ok(match opts.convention {
        Convention::Unit => {
            ModuleInput::Resolution(Resolution::from_maps(t.side, t.ngens(), vec![t.relations])?)
        }
        Convention::Empty => ModuleInput::Presentation(t.relations),
    })
}

/// `t(M) ≅ Ext^1(M^T, A)`, on the side of `M`.
pub fn torsion_presentation(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<HomologyResult> {
    let mt = transposed_input(alg, side, m, opts)?;
    ext(alg, side.flip(), &mt, &ModuleInput::Ring, 1, opts)
}

pub fn torsion_free_test(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<TestVerdict> {
    let t = torsion_presentation(alg, side, m, opts)?;
    Ok(if t.zero {
        TestVerdict::new(Verdict::Yes, t, "Ext^1(M^T, A) = 0")
    } else {
        TestVerdict::new(Verdict::No, t, "Ext^1(M^T, A) is nonzero")
    })
}

/// Torsion iff `M* = 0`.
pub fn torsion_module_test(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<TestVerdict> {
    let d = dual(alg, side, m, opts)?;
    Ok(if d.zero {
        TestVerdict::new(Verdict::Yes, d, "Hom(M, A) = 0")
    } else {
        TestVerdict::new(Verdict::No, d, "Hom(M, A) is nonzero")
    })
}

/// Reflexive iff `Ext^1(M^T, A) = Ext^2(M^T, A) = 0`.
pub fn reflexive_test(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<TestVerdict> {
    let mt = transposed_input(alg, side, m, opts)?;
    let e1 = ext(alg, side.flip(), &mt, &ModuleInput::Ring, 1, opts)?;
    if !e1.zero {
        return Ok(TestVerdict::new(Verdict::No, e1, "Ext^1(M^T, A) is nonzero"));
    }
    let e2 = ext(alg, side.flip(), &mt, &ModuleInput::Ring, 2, opts)?;
    Ok(if e2.zero {
        TestVerdict::new(Verdict::Yes, e2, "Ext^1(M^T, A) = Ext^2(M^T, A) = 0")
    } else {
        TestVerdict::new(Verdict::No, e2, "Ext^2(M^T, A) is nonzero")
    })
}
