//! Command-line driver: `skewpbw <command> <session-file> [names] [flags]`.

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Side};
use crate::applications::{
    dual, grade, reflexive_test, stably_free_test, torsion_free_test, torsion_module_test, torsion_presentation,
    transpose_module, TestVerdict,
};
use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::homological::{ext, hom, relations_of, resolve, tensor_presentation, tor, Convention, ModuleInput, Options};
use crate::matrix::Matrix;
use crate::render;
use crate::session::{parse_session, Session};
use crate::syzygy::{presentation, syzygy};

pub const COMMANDS: &[&str] = &[
    "groebner",
    "syzygy",
    "presentation",
    "resolution",
    "tensor",
    "tor",
    "hom",
    "ext",
    "dual",
    "grade",
    "transpose",
    "torsion",
    "stably-free",
    "torsion-free",
    "torsion-module",
    "reflexive",
];

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DeltaArg {
    /// `A` as a Hom target is presented by `[1]`
    #[value(alias = "unit")]
    Paper,
    /// `A` as a Hom target has no relations
    Empty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "skewpbw", version, about = "Gröbner bases, syzygies, Tor and Ext over skew PBW extensions")]
pub struct Cli {
    /// One of: groebner, syzygy, presentation, resolution, tensor, tor, hom,
    /// ext, dual, grade, transpose, torsion, stably-free, torsion-free,
    /// torsion-module, reflexive
    pub command: String,
    /// Session file
    pub session: String,
    /// Module, matrix or algebra names the command acts on
    pub names: Vec<String>,
    /// Homological degree for tor and ext
    #[arg(long = "r", default_value_t = 0)]
    pub r: usize,
    /// Upper bound for grade
    #[arg(long, default_value_t = 4)]
    pub max: usize,
    /// Cap on resolution length (default: number of variables plus two)
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
    #[arg(long = "delta-a", value_enum, default_value_t = DeltaArg::Paper)]
    pub delta_a: DeltaArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

struct Ctx<'a> {
    session: &'a Session,
    side: Side,
    opts: Options,
    json: bool,
}

impl Ctx<'_> {
    fn alg(&self) -> &Algebra {
        &self.session.algebra
    }

    /// A module argument: the algebra name is the ring, a module is given
    /// by generators, a matrix by relations.
    fn input(&self, name: &str) -> Result<ModuleInput> {
        let s = self.session;
        if name == s.algebra_name {
            Ok(ModuleInput::Ring)
        } else if let Some(m) = s.module(name) {
            Ok(ModuleInput::Generators(m.generators.clone()))
        } else if let Some(m) = s.matrix(name) {
            Ok(ModuleInput::Presentation(m.matrix.clone()))
        } else {
            Err(Error::UnknownName(name.to_string()))
        }
    }

    /// Column generators of a module or matrix.
    fn columns(&self, name: &str) -> Result<Matrix> {
        let s = self.session;
        if let Some(m) = s.module(name) {
            Ok(m.generators.clone())
        } else if let Some(m) = s.matrix(name) {
            Ok(m.matrix.clone())
        } else {
            Err(Error::UnknownName(name.to_string()))
        }
    }

    fn matrix_out(&self, title: &str, m: &Matrix) -> (String, Value) {
        let text = format!("{title}\n{}", render::matrix_text(self.alg(), m));
        (text, render::matrix_json(m))
    }

    fn verdict_out(&self, title: &str, v: &TestVerdict) -> (String, Value) {
        (render::verdict_text(self.alg(), title, v), render::verdict_json(v))
    }
}

fn names<'a>(cli: &'a Cli, n: usize) -> Result<&'a [String]> {
    if cli.names.len() != n {
        return Err(Error::Usage(format!(
            "`{}` takes {} name{}, got {}",
            cli.command,
            n,
            if n == 1 { "" } else { "s" },
            cli.names.len()
        )));
    }
    Ok(&cli.names)
}

/// Runs a parsed command and returns the rendered document.
pub fn execute(cli: &Cli, session_text: &str) -> Result<String> {
    if !COMMANDS.contains(&cli.command.as_str()) {
        return Err(Error::UnknownCommand(cli.command.clone()));
    }
    let session = parse_session(session_text)?;
    let ctx = Ctx {
        session: &session,
        side: match cli.side {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        },
        opts: Options {
            convention: match cli.delta_a {
                DeltaArg::Paper => Convention::Unit,
                DeltaArg::Empty => Convention::Empty,
            },
            max_len: cli.max_len,
        },
        json: matches!(cli.format, FormatArg::Json),
    };
    let alg = ctx.alg();
    let (side, opts) = (ctx.side, &ctx.opts);
    let (text, value) = match cli.command.as_str() {
        "groebner" => {
            let n = names(cli, 1)?;
            let gb = buchberger(alg, side, &ctx.columns(&n[0])?)?;
            ctx.matrix_out(&format!("reduced {} basis of {}, {} elements", side, n[0], gb.len()), &gb.to_matrix())
        }
        "syzygy" => {
            let n = names(cli, 1)?;
            let z = syzygy(alg, side, &ctx.columns(&n[0])?)?;
            ctx.matrix_out(&format!("{} syzygies of {}", side, n[0]), &z)
        }
        "presentation" => {
            let n = names(cli, 1)?;
            let p = presentation(alg, side, &ctx.columns(&n[0])?)?;
            ctx.matrix_out(
                &format!("{} = A^{}/<relations> ({}), relations:", n[0], p.ngens(), side),
                &p.relations,
            )
        }
        "resolution" => {
            let n = names(cli, 1)?;
            let r = resolve(alg, side, &ctx.input(&n[0])?, opts)?;
            (render::resolution_text(alg, &r), render::resolution_json(&r))
        }
        "tensor" | "tor" | "hom" | "ext" => {
            let n = names(cli, 2)?;
            let (m, nn) = (ctx.input(&n[0])?, ctx.input(&n[1])?);
            let (h, title) = match cli.command.as_str() {
                "tensor" => (tensor_presentation(alg, side, &m, &nn)?, format!("{} (x) {}", n[0], n[1])),
                "tor" => (tor(alg, side, &m, &nn, cli.r, opts)?, format!("Tor_{}({}, {})", cli.r, n[0], n[1])),
                "hom" => (hom(alg, side, &m, &nn, opts)?, format!("Hom({}, {})", n[0], n[1])),
                _ => (ext(alg, side, &m, &nn, cli.r, opts)?, format!("Ext^{}({}, {})", cli.r, n[0], n[1])),
            };
            (render::homology_text(alg, &title, &h), render::homology_json(&h))
        }
        "dual" => {
            let n = names(cli, 1)?;
            let h = dual(alg, side, &ctx.input(&n[0])?, opts)?;
            (render::homology_text(alg, &format!("dual of {}", n[0]), &h), render::homology_json(&h))
        }
        "grade" => {
            let n = names(cli, 1)?;
            let g = grade(alg, side, &ctx.input(&n[0])?, cli.max, opts)?;
            (format!("grade of {}: {}\n", n[0], g), render::grade_json(g))
        }
        "transpose" => {
            let n = names(cli, 1)?;
            let p = transpose_module(side, &relations_of(alg, side, &ctx.input(&n[0])?)?);
            ctx.matrix_out(
                &format!("transpose of {} = A^{}/<relations> ({}), relations:", n[0], p.ngens(), p.side),
                &p.relations,
            )
        }
        "torsion" => {
            let n = names(cli, 1)?;
            let h = torsion_presentation(alg, side, &ctx.input(&n[0])?, opts)?;
            (render::homology_text(alg, &format!("torsion of {}", n[0]), &h), render::homology_json(&h))
        }
        cmd => {
            let n = names(cli, 1)?;
            let m = ctx.input(&n[0])?;
            let v = match cmd {
                "stably-free" => stably_free_test(alg, side, &m, opts)?,
                "torsion-free" => torsion_free_test(alg, side, &m, opts)?,
                "torsion-module" => torsion_module_test(alg, side, &m, opts)?,
                _ => reflexive_test(alg, side, &m, opts)?,
            };
            ctx.verdict_out(&format!("{cmd} {}", n[0]), &v)
        }
    };
    if ctx.json {
        let doc = json!({
            "format": render::JSON_FORMAT,
            "command": cli.command,
            "names": cli.names,
            "side": side.to_string(),
            "result": value,
        });
        Ok(serde_json::to_string(&doc).expect("JSON values serialize") + "\n")
    } else {
        Ok(text)
    }
}

/// Parses arguments, reads the session file and runs the command.
pub fn run<I, T>(args: I) -> Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Usage(e.to_string()))?;
    let text = std::fs::read_to_string(&cli.session)
        .map_err(|e| Error::Usage(format!("cannot read `{}`: {}", cli.session, e)))?;
    execute(&cli, &text)
}
