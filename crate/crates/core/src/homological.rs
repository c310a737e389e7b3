//! Presentations of `M ⊗ N`, `Tor_r`, `Hom` and `Ext^r` as subquotients of
//! free modules.
//!
//! Modules are given on one side (`side`); tensor products and Tor stay on
//! that side, Hom and Ext land on the other one. Coordinates of a tensor
//! `A^s ⊗ A^t` are ordered `f_1⊗g_1, …, f_1⊗g_t, …, f_s⊗g_t`.

use std::fmt;

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, QDim};
use crate::matrix::{kron, Matrix};
use crate::syzygy::{
    default_max_len, first_outside, free_resolution, quotient_syzygy, syzygy, Presentation, Resolution,
    SubquotientData,
};

/// How a module argument is supplied.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleInput {
    /// The ring itself, generated by `1`.
    Ring,
    /// Submodule of `A^m` generated by the columns.
    Generators(Matrix),
    /// `A^s/⟨Δ⟩` given by its relation matrix.
    Presentation(Matrix),
    /// A resolution taken as complete: `F_1 = Δ`, and every map past the
    /// last given one is zero.
    Resolution(Resolution),
}

impl ModuleInput {
    /// Number of generators `s` of the module.
    pub fn ngens(&self) -> usize {
        match self {
            ModuleInput::Ring => 1,
            ModuleInput::Generators(f) => f.ncols(),
            ModuleInput::Presentation(d) => d.nrows(),
            ModuleInput::Resolution(r) => r.rank(0),
        }
    }
}

/// How `A` is presented when it is the target of `Hom`, and how a
/// transposed presentation is resolved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// `A` as a `Hom` target carries the unit relation matrix `[1]`, and the
    /// presentation of a transposed module is read as a complete length-one
    /// resolution.
    #[default]
    Unit,
    /// `A` as a `Hom` target has no relations (`Syz(1) = 0`), and every
    /// resolution is computed.
    Empty,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Unit => "unit",
            Convention::Empty => "empty",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub convention: Convention,
    /// Cap on resolution length; defaults to the variable count plus two.
    pub max_len: Option<usize>,
}

/// A module presented as `⟨X⟩/⟨Y⟩` and as `A^q/⟨relations⟩`, with
/// generators the cosets of the columns of `X`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyResult {
    pub side: Side,
    pub numerator: Matrix,
    pub denominator: Matrix,
    pub relations: Matrix,
    pub zero: bool,
    /// A numerator column whose coset is nonzero.
    pub witness: Option<usize>,
}

impl HomologyResult {
    /// `q`, the rank of the free module the presentation lives in.
    pub fn ambient_rank(&self) -> usize {
        self.numerator.ncols()
    }

    pub fn subquotient(&self) -> SubquotientData {
        SubquotientData {
            side: self.side,
            numerator: self.numerator.clone(),
            denominator: self.denominator.clone(),
        }
    }

    /// Dimension over ℚ of `A^q/⟨relations⟩`.
    pub fn qdimension(&self, alg: &Algebra) -> Result<QDim> {
        Ok(buchberger(alg, self.side, &self.relations)?.qdimension())
    }

    /// Finishes a subquotient: containment check, zero test, presentation.
    fn assemble(alg: &Algebra, side: Side, numerator: Matrix, denominator: Matrix) -> Result<HomologyResult> {
        let q = SubquotientData {
            side,
            numerator,
            denominator,
        };
        q.check_containment(alg)?;
        let relations = quotient_syzygy(alg, side, &q.numerator, &q.denominator)?;
        // The coset of the k-th numerator column is e_k in A^q.
        let gb = buchberger(alg, side, &relations)?;
        let test = first_outside(&gb, &Matrix::identity(alg, q.numerator.ncols()))?;
        Ok(HomologyResult {
            side,
            numerator: q.numerator,
            denominator: q.denominator,
            relations,
            zero: test.zero,
            witness: test.witness,
        })
    }
}

fn max_len(alg: &Algebra, opts: &Options) -> usize {
    opts.max_len.unwrap_or_else(|| default_max_len(alg))
}

/// Relation matrix `Δ` of a module argument.
pub fn relations_of(alg: &Algebra, side: Side, m: &ModuleInput) -> Result<Matrix> {
    match m {
        ModuleInput::Ring => Ok(Matrix::zeros(1, 0)),
        ModuleInput::Generators(f) => syzygy(alg, side, f),
        ModuleInput::Presentation(d) => Ok(d.clone()),
        ModuleInput::Resolution(r) => Ok(r.map(1)),
    }
}

/// A free resolution of a module argument; a given resolution is used as is.
pub fn resolve(alg: &Algebra, side: Side, m: &ModuleInput, opts: &Options) -> Result<Resolution> {
    let cap = max_len(alg, opts);
    match m {
        ModuleInput::Resolution(r) => Ok(r.clone()),
        ModuleInput::Generators(f) => {
            let start = Presentation {
                side,
                generators: Some(f.clone()),
                relations: syzygy(alg, side, f)?,
            };
            free_resolution(alg, &start, cap)
        }
        _ => {
            let d = relations_of(alg, side, m)?;
            free_resolution(alg, &Presentation::from_relations(side, d), cap)
        }
    }
}

/// Every entry of every generator is central.
pub fn check_centralizing(alg: &Algebra, m: &ModuleInput) -> Result<()> {
    if let ModuleInput::Generators(f) = m {
        for (j, c) in f.columns().iter().enumerate() {
            for (i, p) in c.entries().iter().enumerate() {
                if !alg.is_central(p) {
                    return Err(Error::NotCentralizing {
                        generator: j + 1,
                        entry: i + 1,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Presentation of `M ⊗ N` with relations `[Δ_M ⊗ I_t | I_s ⊗ Δ_N]`.
pub fn tensor_presentation(alg: &Algebra, side: Side, m: &ModuleInput, n: &ModuleInput) -> Result<HomologyResult> {
    check_centralizing(alg, m)?;
    let (s, t) = (m.ngens(), n.ngens());
    let dm = relations_of(alg, side, m)?;
    let dn = relations_of(alg, side, n)?;
    let rel = Matrix::hcat(&[
        &kron(alg, &dm, &Matrix::identity(alg, t)),
        &kron(alg, &Matrix::identity(alg, s), &dn),
    ])?
    .prune_zero_columns();
    let gb = buchberger(alg, side, &rel)?;
    let test = first_outside(&gb, &Matrix::identity(alg, s * t))?;
    Ok(HomologyResult {
        side,
        numerator: Matrix::identity(alg, s * t),
        denominator: rel.clone(),
        relations: rel,
        zero: test.zero,
        witness: test.witness,
    })
}

/// `Tor_r(M, N)`, resolving `N` by `G_1 = Δ_N, G_2, …`:
/// the kernel `{u : (I_s ⊗ G_r)u ∈ ⟨Δ_M ⊗ I_{t_{r−1}}⟩}` modulo
/// `⟨I_s ⊗ G_{r+1} | Δ_M ⊗ I_{t_r}⟩`.
pub fn tor(alg: &Algebra, side: Side, m: &ModuleInput, n: &ModuleInput, r: usize, opts: &Options) -> Result<HomologyResult> {
    if r == 0 {
        return tensor_presentation(alg, side, m, n);
    }
    check_centralizing(alg, m)?;
    let s = m.ngens();
    let dm = relations_of(alg, side, m)?;
    let res = resolve(alg, side, n, opts)?;
    let is = Matrix::identity(alg, s);
    let g_r = res.map(r);
    let g_next = res.map(r + 1);
    let (t_prev, t_r) = (res.rank(r - 1), res.rank(r));
    let kernel = Matrix::hcat(&[&kron(alg, &is, &g_r), &kron(alg, &dm, &Matrix::identity(alg, t_prev))])?;
    let numerator = syzygy(alg, side, &kernel)?.take_rows(s * t_r);
    let denominator = Matrix::hcat(&[&kron(alg, &is, &g_next), &kron(alg, &dm, &Matrix::identity(alg, t_r))])?
        .prune_zero_columns();
    HomologyResult::assemble(alg, side, numerator, denominator)
}

fn hom_target_relations(alg: &Algebra, side: Side, n: &ModuleInput, opts: &Options) -> Result<Matrix> {
    match (n, opts.convention) {
        (ModuleInput::Ring, Convention::Unit) => Ok(Matrix::identity(alg, 1)),
        _ => {
            if let ModuleInput::Generators(g) = n {
                check_centralizing(alg, n)?;
                // A centralizing submodule has the same relations on both sides.
                return syzygy(alg, side.flip(), g);
            }
            relations_of(alg, side, n)
        }
    }
}

/// `Hom(M, N)` on the side opposite to `side`: `⟨U⟩/⟨I_s ⊗ Δ_N⟩`, where `U`
/// is the first `st` coordinates of `Syz([(Δ_M ⊗ I_t)^T | I_{s_1} ⊗ Δ_N])`.
pub fn hom(alg: &Algebra, side: Side, m: &ModuleInput, n: &ModuleInput, opts: &Options) -> Result<HomologyResult> {
    let out = side.flip();
    let (s, t) = (m.ngens(), n.ngens());
    let dm = relations_of(alg, side, m)?;
    let dn = hom_target_relations(alg, side, n, opts)?;
    if dn.nrows() != t {
        return Err(Error::ShapeMismatch(format!(
            "relations of the target have {} rows, expected {}",
            dn.nrows(),
            t
        )));
    }
    let s1 = dm.ncols();
    let k1 = kron(alg, &dm, &Matrix::identity(alg, t)).transpose();
    let b = kron(alg, &Matrix::identity(alg, s1), &dn);
    let u = if s1 == 0 {
        Matrix::identity(alg, s * t)
    } else {
        syzygy(alg, out, &Matrix::hcat(&[&k1, &b])?)?.take_rows(s * t)
    };
    let denominator = kron(alg, &Matrix::identity(alg, s), &dn).prune_zero_columns();
    HomologyResult::assemble(alg, out, u, denominator)
}

/// `Ext^r(M, N)` on the side opposite to `side`, resolving `M` by
/// `F_1 = Δ_M, F_2, …`: the kernel of `I_t ⊗ F_{r+1}^T` modulo `⟨Δ_N⟩`,
/// divided by `⟨I_t ⊗ F_r^T | Δ_N ⊗ I_{s_r}⟩`. For `r = 0` this is `Hom`.
pub fn ext(alg: &Algebra, side: Side, m: &ModuleInput, n: &ModuleInput, r: usize, opts: &Options) -> Result<HomologyResult> {
    if r == 0 {
        return hom(alg, side, m, n, opts);
    }
    let out = side.flip();
    let t = n.ngens();
    let dn = match n {
        ModuleInput::Ring => Matrix::zeros(1, 0),
        _ => hom_target_relations(alg, side, n, opts)?,
    };
    let res = resolve(alg, side, m, opts)?;
    let it = Matrix::identity(alg, t);
    let (s_r, s_next) = (res.rank(r), res.rank(r + 1));
    let f_next = kron(alg, &it, &res.map(r + 1).transpose());
    let kernel = Matrix::hcat(&[&f_next, &kron(alg, &dn, &Matrix::identity(alg, s_next))])?;
    let numerator = if kernel.ncols() == 0 || kernel.nrows() == 0 {
        Matrix::identity(alg, t * s_r)
    } else {
        syzygy(alg, out, &kernel)?.take_rows(t * s_r)
    };
    let f_r = kron(alg, &it, &res.map(r).transpose());
    let denominator = Matrix::hcat(&[&f_r, &kron(alg, &dn, &Matrix::identity(alg, s_r))])?.prune_zero_columns();
    HomologyResult::assemble(alg, out, numerator, denominator)
}
