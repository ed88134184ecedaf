//! Report construction and rendering.
//!
//! Reports are built as `serde_json::Value` trees. serde_json's default map
//! keeps keys sorted, so serializing the same tree always yields the same
//! bytes; combined with exact rational arithmetic this makes every command
//! deterministic at the byte level.

use leibniz2::{
    format_scalar, Cochain1, Cochain2, Derivation2, GradedMap, Hom2, Leibniz2Algebra, Mat,
    MultiMap, Scalar, Splitting, TwoTermComplex, Violation,
};
use serde_json::{json, Value};

pub fn scalar_value(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

pub fn scalar_vec_value(xs: &[Scalar]) -> Value {
    Value::Array(xs.iter().map(scalar_value).collect())
}

pub fn mat_value(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| scalar_value(m.at(r, c))).collect()))
            .collect(),
    )
}

pub fn multimap_value(mm: &MultiMap) -> Value {
    let dims = mm.input_dims();
    fn build(mm: &MultiMap, dims: &[usize], idx: &mut Vec<usize>) -> Value {
        if idx.len() == dims.len() {
            return Value::Array(
                (0..mm.out_dim())
                    .map(|o| scalar_value(mm.get(o, idx)))
                    .collect(),
            );
        }
        let depth = idx.len();
        Value::Array(
            (0..dims[depth])
                .map(|k| {
                    idx.push(k);
                    let v = build(mm, dims, idx);
                    idx.pop();
                    v
                })
                .collect(),
        )
    }
    build(mm, dims, &mut Vec::new())
}

pub fn complex_value(c: &TwoTermComplex) -> Value {
    json!({
        "dim0": c.dim0,
        "dim1": c.dim1,
        "partial": mat_value(&c.d),
    })
}

pub fn algebra_value(g: &Leibniz2Algebra) -> Value {
    json!({
        "dim0": g.dim0,
        "dim1": g.dim1,
        "d": mat_value(&g.d),
        "b00": multimap_value(&g.b00),
        "b01": multimap_value(&g.b01),
        "b10": multimap_value(&g.b10),
        "l3": multimap_value(&g.l3),
    })
}

pub fn graded_value(f: &GradedMap) -> Value {
    json!({
        "m0": mat_value(&f.m0),
        "m1": mat_value(&f.m1),
    })
}

pub fn splitting_value(s: &Splitting) -> Value {
    json!({
        "s0": mat_value(&s.s0),
        "s1": mat_value(&s.s1),
    })
}

pub fn cochain1_value(c: &Cochain1) -> Value {
    json!({
        "phi0": mat_value(&c.phi0),
        "phi1": mat_value(&c.phi1),
        "chi": multimap_value(&c.chi),
    })
}

pub fn cochain2_value(c: &Cochain2) -> Value {
    json!({
        "psi": mat_value(&c.psi),
        "omega": multimap_value(&c.omega),
        "mu": multimap_value(&c.mu),
        "nu": multimap_value(&c.nu),
        "theta": multimap_value(&c.theta),
    })
}

pub fn hom_value(f: &Hom2) -> Value {
    json!({
        "f0": mat_value(&f.f0),
        "f1": mat_value(&f.f1),
        "f2": multimap_value(&f.f2),
    })
}

pub fn der_value(d: &Derivation2) -> Value {
    json!({
        "d0": mat_value(&d.d0),
        "d1": mat_value(&d.d1),
        "d2": multimap_value(&d.d2),
    })
}

pub fn violations_value(vs: &[Violation]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| {
                json!({
                    "law": v.law,
                    "at": v.at,
                    "residual": scalar_vec_value(&v.residual),
                })
            })
            .collect(),
    )
}

pub fn basis_value(basis: &[Vec<Scalar>]) -> Value {
    Value::Array(basis.iter().map(|v| scalar_vec_value(v)).collect())
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Render a finished report. Both formats end with a single newline and
/// depend only on the value tree, never on insertion order.
pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serialization");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            render_text(report, 0, &mut out);
            out
        }
    }
}

fn is_leaf(v: &Value) -> bool {
    matches!(v, Value::Null | Value::Bool(_) | Value::Number(_) | Value::String(_))
}

fn leaf_str(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => unreachable!("leaf_str on container"),
    }
}

fn inline_array(v: &Value) -> Option<String> {
    let Value::Array(items) = v else { return None };
    if !items.iter().all(is_leaf) {
        return None;
    }
    let parts: Vec<String> = items.iter().map(leaf_str).collect();
    Some(format!("[{}]", parts.join(", ")))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                if is_leaf(val) {
                    out.push_str(&format!("{pad}{key}: {}\n", leaf_str(val)));
                } else if let Some(inline) = inline_array(val) {
                    out.push_str(&format!("{pad}{key}: {inline}\n"));
                } else {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render_text(val, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{pad}[]\n"));
                return;
            }
            for item in items {
                if is_leaf(item) {
                    out.push_str(&format!("{pad}- {}\n", leaf_str(item)));
                } else if let Some(inline) = inline_array(item) {
                    out.push_str(&format!("{pad}- {inline}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        _ => {
            out.push_str(&format!("{pad}{}\n", leaf_str(v)));
        }
    }
}
