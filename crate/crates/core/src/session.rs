//! The session file format.
//!
//! ```text
//! # quantum plane, module M in A^4
//! algebra A {
//!     vars x, y;
//!     rel y*x = -1*x*y;
//!     order deglex(x > y);
//!     morder TOP(e4 > e3 > e2 > e1);
//! }
//! module M in A^4 {
//!     (1, 0, 1, 0), (0, 1, 0, 1), (x, x, 0, 0),
//!     (y, 0, 0, 0), (0, 0, 0, y^2), (0, 0, y, x),
//! }
//! matrix Q { [x, y] }
//! matrix Z { [ shape 3x0 ] }
//! ```
//!
//! Relations read `x_j*x_i = c*x_i*x_j + d` with `x_j` declared after
//! `x_i`; the right side is taken literally as coordinates. Module and
//! matrix entries are evaluated in the algebra, so `y*x` means `-x*y` above.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{Algebra, AlgebraBuilder};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::order::{BaseOrder, ModuleOrder, ModuleStrategy, MonomialOrder, OrderSpec, PositionPriority};
use crate::poly::{Monomial, Poly, Rational};

const MAX_DEGREE: u32 = 128;
const MAX_RANK: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleDecl {
    pub name: String,
    pub rank: usize,
    /// Generators as columns, `rank × s`.
    pub generators: Matrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixDecl {
    pub name: String,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Session {
    pub algebra_name: String,
    pub algebra: Algebra,
    pub modules: Vec<ModuleDecl>,
    pub matrices: Vec<MatrixDecl>,
}

impl Session {
    pub fn module(&self, name: &str) -> Option<&ModuleDecl> {
        self.modules.iter().find(|m| m.name == name)
    }

    pub fn matrix(&self, name: &str) -> Option<&MatrixDecl> {
        self.matrices.iter().find(|m| m.name == name)
    }
}

pub fn parse_session(text: &str) -> Result<Session> {
    let mut p = Parser::new(text)?;
    p.session()
}

/// Parses one polynomial expression, evaluated in `alg`.
pub fn parse_poly(alg: &Algebra, text: &str) -> Result<Poly> {
    let mut p = Parser::new(text)?;
    let f = p.expr(alg)?;
    p.expect_end()?;
    Ok(f)
}

/// Parses a matrix body: bracketed rows `[a, b], [c, d]` or `[ shape RxC ]`.
pub fn parse_matrix(alg: &Algebra, text: &str) -> Result<Matrix> {
    let mut p = Parser::new(text)?;
    let m = p.matrix_body(alg, None)?;
    p.expect_end()?;
    Ok(m)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Shape(usize, usize),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
        let c = chars[*i];
        *i += 1;
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col);
            }
            continue;
        }
        let (tl, tc) = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                advance(&mut i, &mut line, &mut col);
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: tl,
                col: tc,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                advance(&mut i, &mut line, &mut col);
            }
            let digits: String = chars[start..i].iter().collect();
            // `3x0` is a shape, never a product: products need `*`.
            if i + 1 < chars.len() && chars[i] == 'x' && chars[i + 1].is_ascii_digit() {
                advance(&mut i, &mut line, &mut col);
                let s2 = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    advance(&mut i, &mut line, &mut col);
                }
                let cols: String = chars[s2..i].iter().collect();
                let parse = |s: &str| {
                    s.parse::<usize>().ok().filter(|&v| v <= MAX_RANK).ok_or_else(|| Error::Syntax {
                        line: tl,
                        col: tc,
                        msg: format!("shape dimension `{}` out of range", s),
                    })
                };
                out.push(Token {
                    tok: Tok::Shape(parse(&digits)?, parse(&cols)?),
                    line: tl,
                    col: tc,
                });
            } else {
                out.push(Token {
                    tok: Tok::Int(digits.parse().expect("ASCII digits form an integer")),
                    line: tl,
                    col: tc,
                });
            }
        } else if "{}()[],;=+-*/^><".contains(c) {
            advance(&mut i, &mut line, &mut col);
            out.push(Token {
                tok: Tok::Sym(c),
                line: tl,
                col: tc,
            });
        } else {
            return Err(Error::Syntax {
                line: tl,
                col: tc,
                msg: format!("unexpected character `{}`", c),
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        })
    }

    fn describe(&self) -> String {
        match &self.peek().tok {
            Tok::Ident(s) => format!("`{}`", s),
            Tok::Int(n) => format!("`{}`", n),
            Tok::Shape(r, c) => format!("`{}x{}`", r, c),
            Tok::Sym(c) => format!("`{}`", c),
            Tok::End => "end of input".into(),
        }
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`, found {}", c, self.describe()))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        if self.is_keyword(kw) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected `{}`, found {}", kw, self.describe()))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                let t = self.bump();
                Ok((s, t.line, t.col))
            }
            _ => self.err(format!("expected a name, found {}", self.describe())),
        }
    }

    fn usize_lit(&mut self) -> Result<usize> {
        match self.peek().tok.clone() {
            Tok::Int(n) => match n.to_usize() {
                Some(v) if v <= MAX_RANK => {
                    self.bump();
                    Ok(v)
                }
                _ => self.err(format!("`{}` is out of range", n)),
            },
            _ => self.err(format!("expected an integer, found {}", self.describe())),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            self.err(format!("unexpected {}", self.describe()))
        }
    }

    fn session(&mut self) -> Result<Session> {
        let (algebra_name, mut algebra) = self.algebra_block()?;
        let mut modules: Vec<ModuleDecl> = Vec::new();
        let mut matrices: Vec<MatrixDecl> = Vec::new();
        let mut names = vec![algebra_name.clone()];
        while self.peek().tok != Tok::End {
            if self.is_keyword("module") {
                self.bump();
                let (name, line, col) = self.ident()?;
                check_fresh(&names, &name, line, col)?;
                self.expect_keyword("in")?;
                let (ring, rl, rc) = self.ident()?;
                if ring != algebra_name {
                    return Err(Error::Syntax {
                        line: rl,
                        col: rc,
                        msg: format!("unknown algebra `{}`", ring),
                    });
                }
                self.expect_sym('^')?;
                let rank = self.usize_lit()?;
                let generators = self.module_body(&algebra, rank)?;
                names.push(name.clone());
                modules.push(ModuleDecl { name, rank, generators });
            } else if self.is_keyword("matrix") {
                self.bump();
                let (name, line, col) = self.ident()?;
                check_fresh(&names, &name, line, col)?;
                self.expect_sym('{')?;
                let matrix = self.matrix_body(&algebra, Some('}'))?;
                self.expect_sym('}')?;
                names.push(name.clone());
                matrices.push(MatrixDecl { name, matrix });
            } else if self.is_keyword("morder") {
                if !modules.is_empty() || !matrices.is_empty() {
                    return self.err("`morder` must come before module and matrix blocks");
                }
                self.bump();
                let module = self.module_order()?;
                self.expect_sym(';')?;
                let mut spec = algebra.order().clone();
                spec.module = module;
                algebra = algebra.with_order(spec)?;
            } else {
                return self.err(format!("expected `module`, `matrix` or `morder`, found {}", self.describe()));
            }
        }
        Ok(Session {
            algebra_name,
            algebra,
            modules,
            matrices,
        })
    }

    fn algebra_block(&mut self) -> Result<(String, Algebra)> {
        self.expect_keyword("algebra")?;
        let (name, _, _) = self.ident()?;
        self.expect_sym('{')?;
        self.expect_keyword("vars")?;
        let mut vars: Vec<String> = Vec::new();
        loop {
            let (v, line, col) = self.ident()?;
            if vars.contains(&v) {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: format!("variable `{}` declared twice", v),
                });
            }
            vars.push(v);
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym(';')?;
        if vars.len() > 64 {
            return self.err("at most 64 variables are supported");
        }
        let n = vars.len();
        let comm = AlgebraBuilder::new(vars.clone()).build()?;
        let mut relations: Vec<(usize, usize, Rational, Poly)> = Vec::new();
        let mut monomial = MonomialOrder::deglex(n);
        let mut module = ModuleOrder::default();
        loop {
            if self.is_keyword("rel") {
                self.bump();
                let (j, i) = self.relation_lhs(&vars)?;
                if relations.iter().any(|r| (r.0, r.1) == (i, j)) {
                    return self.err(format!("relation for {}*{} given twice", vars[j], vars[i]));
                }
                self.expect_sym('=')?;
                let rhs = self.expr(&comm)?;
                self.expect_sym(';')?;
                let xixj = Monomial::var(n, i).mul(&Monomial::var(n, j));
                let c = rhs.coeff(&xixj);
                let d = comm.sub(&rhs, &Poly::monomial(c.clone(), xixj));
                relations.push((i, j, c, d));
            } else if self.is_keyword("order") {
                self.bump();
                monomial = self.monomial_order(&vars)?;
                self.expect_sym(';')?;
            } else if self.is_keyword("morder") {
                self.bump();
                module = self.module_order()?;
                self.expect_sym(';')?;
            } else {
                break;
            }
        }
        self.expect_sym('}')?;
        let mut b = AlgebraBuilder::new(vars).order(OrderSpec { monomial, module });
        for (i, j, c, d) in relations {
            b = b.relation(i, j, c, d.into_terms());
        }
        Ok((name, b.build()?))
    }

    // `x_j * x_i` with `x_j` declared after `x_i`; returns `(j, i)`.
    fn relation_lhs(&mut self, vars: &[String]) -> Result<(usize, usize)> {
        let start = self.peek().clone();
        let (a, al, ac) = self.ident()?;
        let ja = var_index(vars, &a, al, ac)?;
        self.expect_sym('*')?;
        let (b, bl, bc) = self.ident()?;
        let ib = var_index(vars, &b, bl, bc)?;
        if ja <= ib {
            return Err(Error::Syntax {
                line: start.line,
                col: start.col,
                msg: format!("left side must be `x_j*x_i` with x_j declared after x_i, found `{}*{}`", a, b),
            });
        }
        Ok((ja, ib))
    }

    fn monomial_order(&mut self, vars: &[String]) -> Result<MonomialOrder> {
        let (kind, line, col) = self.ident()?;
        let base = match kind.as_str() {
            "deglex" => BaseOrder::Deglex,
            "lex" => BaseOrder::Lex,
            "degrevlex" => BaseOrder::Degrevlex,
            other => {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: format!("unknown monomial order `{}`", other),
                })
            }
        };
        let mut priority: Vec<usize> = (0..vars.len()).collect();
        if self.eat_sym('(') {
            priority.clear();
            loop {
                let (v, l, c) = self.ident()?;
                priority.push(var_index(vars, &v, l, c)?);
                if !self.eat_sym('>') {
                    break;
                }
            }
            self.expect_sym(')')?;
            if priority.len() != vars.len() {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: "variable priority must list every variable once".into(),
                });
            }
        }
        MonomialOrder::new(base, priority).map_err(|_| Error::Syntax {
            line,
            col,
            msg: "variable priority must list every variable once".into(),
        })
    }

    fn module_order(&mut self) -> Result<ModuleOrder> {
        let (kind, line, col) = self.ident()?;
        let strategy = match kind.as_str() {
            "TOP" => ModuleStrategy::Top,
            "POT" => ModuleStrategy::Pot,
            other => {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: format!("unknown module order `{}`", other),
                })
            }
        };
        let mut positions = PositionPriority::Descending;
        if self.eat_sym('(') {
            if self.is_keyword("desc") {
                self.bump();
            } else if self.is_keyword("asc") {
                self.bump();
                positions = PositionPriority::Ascending;
            } else {
                let mut list = Vec::new();
                loop {
                    let (e, l, c) = self.ident()?;
                    let idx = e
                        .strip_prefix('e')
                        .and_then(|d| d.parse::<usize>().ok())
                        .filter(|&k| k >= 1 && k <= MAX_RANK)
                        .ok_or_else(|| Error::Syntax {
                            line: l,
                            col: c,
                            msg: format!("expected a basis vector `e<k>`, found `{}`", e),
                        })?;
                    if list.contains(&(idx - 1)) {
                        return Err(Error::Syntax {
                            line: l,
                            col: c,
                            msg: format!("`{}` listed twice", e),
                        });
                    }
                    list.push(idx - 1);
                    if !self.eat_sym('>') {
                        break;
                    }
                }
                positions = PositionPriority::from_list(list);
            }
            self.expect_sym(')')?;
        }
        Ok(ModuleOrder { strategy, positions })
    }

    fn module_body(&mut self, alg: &Algebra, rank: usize) -> Result<Matrix> {
        self.expect_sym('{')?;
        let mut cols = Vec::new();
        while !self.is_sym('}') {
            let open = self.peek().clone();
            self.expect_sym('(')?;
            let mut entries = Vec::new();
            if !self.is_sym(')') {
                loop {
                    entries.push(self.expr(alg)?);
                    if !self.eat_sym(',') {
                        break;
                    }
                }
            }
            self.expect_sym(')')?;
            if entries.len() != rank {
                return Err(Error::Syntax {
                    line: open.line,
                    col: open.col,
                    msg: format!("generator has {} entries, the module lives in rank {}", entries.len(), rank),
                });
            }
            cols.push(Vector(entries));
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym('}')?;
        Matrix::from_columns(rank, cols)
    }

    /// Rows up to `close` (or end of input).
    fn matrix_body(&mut self, alg: &Algebra, close: Option<char>) -> Result<Matrix> {
        let at_close = |p: &Parser| match close {
            Some(c) => p.is_sym(c),
            None => p.peek().tok == Tok::End,
        };
        let first = self.peek().clone();
        if self.is_sym('[') && matches!(&self.toks[self.pos + 1].tok, Tok::Ident(s) if s == "shape") {
            self.bump();
            self.bump();
            let (r, c) = match self.peek().tok {
                Tok::Shape(r, c) => {
                    self.bump();
                    (r, c)
                }
                _ => return self.err(format!("expected a shape like `3x0`, found {}", self.describe())),
            };
            self.expect_sym(']')?;
            self.eat_sym(',');
            if r != 0 && c != 0 {
                return Err(Error::Syntax {
                    line: first.line,
                    col: first.col,
                    msg: "explicit shapes are only for empty matrices; write the rows instead".into(),
                });
            }
            return Ok(Matrix::zeros(r, c));
        }
        let mut rows: Vec<Vec<Poly>> = Vec::new();
        let mut width = None;
        while !at_close(self) {
            let open = self.peek().clone();
            self.expect_sym('[')?;
            let mut row = Vec::new();
            if !self.is_sym(']') {
                loop {
                    row.push(self.expr(alg)?);
                    if !self.eat_sym(',') || self.is_sym(']') {
                        break;
                    }
                }
            }
            self.expect_sym(']')?;
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::Syntax {
                        line: open.line,
                        col: open.col,
                        msg: format!("row has {} entries, previous rows have {}", row.len(), w),
                    })
                }
                _ => {}
            }
            if rows.len() >= MAX_RANK {
                return self.err("too many rows");
            }
            rows.push(row);
            self.eat_sym(',');
        }
        let w = width.unwrap_or(0);
        if rows.is_empty() || w == 0 {
            return Err(Error::Syntax {
                line: first.line,
                col: first.col,
                msg: "empty matrices need an explicit shape, e.g. `[ shape 3x0 ]`".into(),
            });
        }
        Matrix::from_rows(rows, w)
    }

    fn expr(&mut self, alg: &Algebra) -> Result<Poly> {
        let mut acc = if self.eat_sym('-') {
            self.term(alg)?.neg()
        } else {
            self.eat_sym('+');
            self.term(alg)?
        };
        loop {
            if self.eat_sym('+') {
                let t = self.term(alg)?;
                acc = alg.add(&acc, &t);
            } else if self.eat_sym('-') {
                let t = self.term(alg)?;
                acc = alg.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, alg: &Algebra) -> Result<Poly> {
        let mut acc = self.factor(alg)?;
        loop {
            if self.eat_sym('*') {
                let f = self.factor(alg)?;
                acc = self.checked(alg.mul(&acc, &f))?;
            } else if self.is_sym('/') {
                self.bump();
                let f = self.factor(alg)?;
                if !f.is_constant() || f.is_zero() {
                    return self.err("division only by a nonzero constant");
                }
                let c = f.leading_term().unwrap().coeff.recip();
                acc = acc.scale(&c);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self, alg: &Algebra) -> Result<Poly> {
        if self.eat_sym('-') {
            return Ok(self.factor(alg)?.neg());
        }
        let base = self.atom(alg)?;
        if self.eat_sym('^') {
            let e = match self.peek().tok.clone() {
                Tok::Int(n) => match n.to_u32() {
                    Some(v) if v <= MAX_DEGREE => {
                        self.bump();
                        v
                    }
                    _ => return self.err(format!("exponent `{}` is too large", n)),
                },
                _ => return self.err(format!("expected an exponent, found {}", self.describe())),
            };
            let mut acc = alg.one();
            for _ in 0..e {
                acc = self.checked(alg.mul(&acc, &base))?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self, alg: &Algebra) -> Result<Poly> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(n) => {
                self.bump();
                Ok(alg.constant(Rational::from_integer(n)))
            }
            Tok::Ident(name) => {
                self.bump();
                match alg.names().iter().position(|v| *v == name) {
                    Some(i) => Ok(alg.var(i)),
                    None => Err(Error::UnknownVariable {
                        name,
                        line: t.line,
                        col: t.col,
                    }),
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr(alg)?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => self.err(format!("expected an expression, found {}", self.describe())),
        }
    }

    fn checked(&self, p: Poly) -> Result<Poly> {
        match p.total_degree() {
            Some(d) if d > MAX_DEGREE => self.err(format!("degree exceeds {}", MAX_DEGREE)),
            _ => Ok(p),
        }
    }
}

fn var_index(vars: &[String], name: &str, line: usize, col: usize) -> Result<usize> {
    vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable {
        name: name.to_string(),
        line,
        col,
    })
}

fn check_fresh(names: &[String], name: &str, line: usize, col: usize) -> Result<()> {
    if names.iter().any(|n| n == name) {
        Err(Error::Syntax {
            line,
            col,
            msg: format!("name `{}` already defined", name),
        })
    } else {
        Ok(())
    }
}
