//! Text and JSON rendering. Text output reuses the session syntax, so
//! rendered matrices and sessions parse back to the same values.

use std::fmt::Write as _;

use num_traits::One;
use serde_json::{json, Value};

use crate::algebra::{Algebra, AlgebraBuilder};
use crate::applications::{Grade, TestVerdict};
use crate::homological::HomologyResult;
use crate::matrix::Matrix;
use crate::order::{BaseOrder, ModuleStrategy, PositionPriority};
use crate::poly::{Monomial, Poly};
use crate::session::Session;
use crate::syzygy::Resolution;

/// Version of the JSON documents.
pub const JSON_FORMAT: u64 = 1;

pub fn poly_text(alg: &Algebra, p: &Poly) -> String {
    alg.display(p).to_string()
}

/// One bracketed row per line; `[ shape RxC ]` when a dimension is zero.
pub fn matrix_text(alg: &Algebra, m: &Matrix) -> String {
    let (r, c) = m.shape();
    if r == 0 || c == 0 {
        return format!("[ shape {r}x{c} ]\n");
    }
    let mut out = String::new();
    for i in 0..r {
        let row: Vec<String> = m.row(i).iter().map(|p| poly_text(alg, p)).collect();
        let _ = writeln!(out, "[ {} ]", row.join(", "));
    }
    out
}

fn order_text(alg: &Algebra) -> (String, String) {
    let spec = alg.order();
    let base = match spec.monomial.base() {
        BaseOrder::Deglex => "deglex",
        BaseOrder::Lex => "lex",
        BaseOrder::Degrevlex => "degrevlex",
    };
    let prio: Vec<&str> = spec.monomial.priority().iter().map(|&i| alg.names()[i].as_str()).collect();
    let strategy = match spec.module.strategy {
        ModuleStrategy::Top => "TOP",
        ModuleStrategy::Pot => "POT",
    };
    let positions = match &spec.module.positions {
        PositionPriority::Descending => "desc".to_string(),
        PositionPriority::Ascending => "asc".to_string(),
        PositionPriority::Custom(list) => list.iter().map(|p| format!("e{}", p + 1)).collect::<Vec<_>>().join(" > "),
    };
    (
        format!("{}({})", base, prio.join(" > ")),
        format!("{}({})", strategy, positions),
    )
}

/// The algebra block of a session.
pub fn algebra_text(name: &str, alg: &Algebra) -> String {
    let n = alg.n();
    let mut out = format!("algebra {name} {{\n    vars {};\n", alg.names().join(", "));
    let comm = AlgebraBuilder::new(alg.names().to_vec()).build().expect("variable names were validated");
    for i in 0..n {
        for j in i + 1..n {
            let (c, d) = (alg.c(i, j), alg.d(i, j));
            if c.is_one() && d.is_zero() {
                continue;
            }
            let xixj = Poly::monomial(c.clone(), Monomial::var(n, i).mul(&Monomial::var(n, j)));
            let rhs = comm.add(&xixj, d);
            let names = alg.names();
            let _ = writeln!(out, "    rel {}*{} = {};", names[j], names[i], poly_text(&comm, &rhs));
        }
    }
    let (ord, morder) = order_text(alg);
    let _ = writeln!(out, "    order {ord};\n    morder {morder};\n}}");
    out
}

pub fn session_text(s: &Session) -> String {
    let alg = &s.algebra;
    let mut out = algebra_text(&s.algebra_name, alg);
    for m in &s.modules {
        let _ = writeln!(out, "\nmodule {} in {}^{} {{", m.name, s.algebra_name, m.rank);
        for c in m.generators.columns() {
            let e: Vec<String> = c.entries().iter().map(|p| poly_text(alg, p)).collect();
            let _ = writeln!(out, "    ({}),", e.join(", "));
        }
        out.push_str("}\n");
    }
    for m in &s.matrices {
        let _ = writeln!(out, "\nmatrix {} {{", m.name);
        for line in matrix_text(alg, &m.matrix).lines() {
            let _ = writeln!(out, "    {line},");
        }
        out.push_str("}\n");
    }
    out
}

pub fn homology_text(alg: &Algebra, title: &str, h: &HomologyResult) -> String {
    let mut out = format!(
        "{title}: {} module, {}\n",
        h.side,
        if h.zero { "zero" } else { "nonzero" }
    );
    if let Some(w) = h.witness {
        let _ = writeln!(out, "nonzero generator: {}", w + 1);
    }
    let _ = writeln!(out, "generators ({}):", h.ambient_rank());
    out.push_str(&matrix_text(alg, &h.numerator));
    let _ = writeln!(out, "relations in rank {}:", h.ambient_rank());
    out.push_str(&matrix_text(alg, &h.relations));
    out
}

pub fn resolution_text(alg: &Algebra, r: &Resolution) -> String {
    let ranks: Vec<String> = r.ranks().iter().map(|s| s.to_string()).collect();
    let mut out = format!("{} resolution of length {}, ranks {}\n", r.side, r.len(), ranks.join(" "));
    for (k, m) in r.maps().iter().enumerate() {
        let _ = writeln!(out, "F{}:", k + 1);
        out.push_str(&matrix_text(alg, m));
    }
    out
}

pub fn verdict_text(alg: &Algebra, title: &str, v: &TestVerdict) -> String {
    let mut out = format!("{title}: {} ({})\n", v.verdict, v.note);
    if let Some(w) = &v.witness {
        out.push_str(&homology_text(alg, "witness", w));
    }
    out
}

pub fn poly_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|t| {
                json!({
                    "num": t.coeff.numer().to_string(),
                    "den": t.coeff.denom().to_string(),
                    "exp": t.mono.exponents(),
                })
            })
            .collect(),
    )
}

/// Row-major entries.
pub fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.nrows())
        .map(|i| Value::Array(m.row(i).iter().map(poly_json).collect()))
        .collect();
    json!({ "rows": m.nrows(), "cols": m.ncols(), "entries": rows })
}

pub fn homology_json(h: &HomologyResult) -> Value {
    json!({
        "side": h.side.to_string(),
        "zero": h.zero,
        "witness": h.witness.map(|w| w + 1),
        "ambient_rank": h.ambient_rank(),
        "numerator": matrix_json(&h.numerator),
        "denominator": matrix_json(&h.denominator),
        "relations": matrix_json(&h.relations),
    })
}

pub fn resolution_json(r: &Resolution) -> Value {
    json!({
        "side": r.side.to_string(),
        "length": r.len(),
        "ranks": r.ranks(),
        "maps": r.maps().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

pub fn verdict_json(v: &TestVerdict) -> Value {
    json!({
        "verdict": v.verdict.to_string(),
        "note": v.note,
        "witness": v.witness.as_ref().map(homology_json),
    })
}

pub fn grade_json(g: Grade) -> Value {
    match g {
        Grade::Finite(j) => json!({ "finite": true, "value": j }),
        Grade::InfinityUpTo(b) => json!({ "finite": false, "bound": b }),
    }
}
