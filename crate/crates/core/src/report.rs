//! Stable JSON shapes for every analysis result.
//!
//! Exact rationals are emitted as literal strings ("3/2", "-1+2i") so no
//! precision is lost; polynomials are ascending arrays of such literals and
//! round-trip through the CLI parser bit-exactly.  serde_json's default map
//! keeps keys sorted, so identical requests yield byte-identical output.

use crate::poly::Poly;
use crate::profile::{AdjointProfile, KernelData, OperatorProfile, RationalFunction, SpaceDescriptor};
use crate::rootloc::{CircleFactorization, FactorParts, RootCounts};
use crate::selfadjoint::SelfAdjointReport;
use crate::smirnov::CanonicalTriple;
use crate::symbol::{CircleImage, RationalSymbol};
use serde_json::{json, Map, Value};

pub fn poly_json(p: &Poly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn rational_fn_json(f: &RationalFunction) -> Value {
    json!({
        "numer": poly_json(f.numer()),
        "denom": poly_json(f.denom()),
        "display": f.to_string(),
    })
}

pub fn counts_json(c: &RootCounts) -> Value {
    json!({
        "inside": c.inside,
        "on_circle": c.on_circle,
        "outside": c.outside,
    })
}

fn complex_vec_json(v: &[num::complex::Complex64]) -> Value {
    Value::Array(v.iter().map(|c| json!([c.re, c.im])).collect())
}

pub fn factorization_json(f: &CircleFactorization) -> Value {
    let mut m = Map::new();
    m.insert("counts".into(), counts_json(&f.counts));
    match &f.parts {
        FactorParts::Exact {
            unit,
            inside,
            on_circle,
            outside,
        } => {
            m.insert("exact".into(), Value::Bool(true));
            m.insert("unit".into(), Value::String(unit.to_string()));
            m.insert("inside".into(), poly_json(inside));
            m.insert("on_circle".into(), poly_json(on_circle));
            m.insert("outside".into(), poly_json(outside));
        }
        FactorParts::Numeric {
            unit,
            inside,
            on_circle,
            outside,
            max_residual,
        } => {
            m.insert("exact".into(), Value::Bool(false));
            m.insert("unit".into(), json!([unit.re, unit.im]));
            m.insert("inside".into(), complex_vec_json(inside));
            m.insert("on_circle".into(), complex_vec_json(on_circle));
            m.insert("outside".into(), complex_vec_json(outside));
            m.insert("max_residual".into(), json!(max_residual));
        }
    }
    Value::Object(m)
}

pub fn symbol_json(w: &RationalSymbol) -> Value {
    json!({
        "s": poly_json(w.s()),
        "q": poly_json(w.q()),
        "s_display": w.s().to_string(),
        "q_display": w.q().to_string(),
        "class": match w.is_rat_t() {
            true => "rat_t",
            false => "general",
        },
        "m": w.m(),
        "n": w.n(),
        "reduced_by": w.reduction().map(poly_json),
        "q_factorization": factorization_json(w.q_split()),
        "s_factorization": w.s_split().ok().map(factorization_json),
    })
}

fn space_json(d: &SpaceDescriptor, space: &str) -> Value {
    json!({
        "shift": d.shift,
        "multiplier": d.multiplier.as_ref().map(|(n, den)| json!({
            "numer": poly_json(n),
            "denom": poly_json(den),
        })),
        "tail_cut": d.tail_cut,
        "inner": poly_json(&d.inner),
        "finite_span": d.finite_span.iter().map(rational_fn_json).collect::<Vec<_>>(),
        "display": d.render(space),
    })
}

fn kernel_json(k: &KernelData) -> Value {
    json!({
        "dim": k.dim,
        "basis": k.basis.as_ref().map(|b| {
            b.iter().map(rational_fn_json).collect::<Vec<_>>()
        }),
        "basis_exact": k.basis.is_some(),
    })
}

pub fn forward_profile_json(p: &OperatorProfile) -> Value {
    let space = format!("H^{}", trim_float(p.p_label));
    json!({
        "p": p.p_label,
        "kernel_dim": p.kernel.dim,
        "kernel": kernel_json(&p.kernel),
        "domain": space_json(&p.domain, &space),
        "range": space_json(&p.range, &space),
        "range_complement_dim": p.range_complement_dim,
        "closed_range": p.closed_range,
        "dense_range": p.dense_range,
        "injective": p.injective,
        "fredholm": p.fredholm,
        "index": p.index,
    })
}

pub fn adjoint_profile_json(a: &AdjointProfile) -> Value {
    let space = format!("H^{}", trim_float(a.p_prime_label));
    json!({
        "p_prime": a.p_prime_label,
        "kernel_dim": a.kernel.dim,
        "kernel": kernel_json(&a.kernel),
        "domain": space_json(&a.domain, &space),
        "range": space_json(&a.range, &space),
        "closed_range": a.closed_range,
        "dense_range": a.dense_range,
        "injective": a.injective,
        "fredholm": a.fredholm,
        "index": a.index,
    })
}

fn image_str(i: CircleImage) -> &'static str {
    match i {
        CircleImage::NotRealValued => "not_real_valued",
        CircleImage::RealProperSubset => "real_proper_subset",
        CircleImage::RealFullLine => "real_full_line",
    }
}

pub fn selfadjoint_json(r: &SelfAdjointReport) -> Value {
    let mut m = Map::new();
    m.insert("symmetric".into(), Value::Bool(r.symmetric));
    m.insert("image".into(), Value::String(image_str(r.image).into()));
    m.insert(
        "extension_exists".into(),
        r.extension_exists().map_or(Value::Null, Value::Bool),
    );
    if let Some(d) = &r.details {
        m.insert("gamma".into(), Value::String(d.gamma.to_string()));
        m.insert("s_tilde".into(), poly_json(&d.s_tilde));
        m.insert(
            "omega_at_zero".into(),
            Value::String(d.omega_at_zero.to_string()),
        );
        m.insert("l_plus".into(), json!(d.l_plus));
        m.insert("l_minus".into(), json!(d.l_minus));
        m.insert("k_plus_in".into(), json!(d.k_plus_in));
        m.insert("k_plus_out".into(), json!(d.k_plus_out));
        m.insert("k_minus_in".into(), json!(d.k_minus_in));
        m.insert("k_minus_out".into(), json!(d.k_minus_out));
        m.insert("n_plus".into(), json!(d.n_plus));
        m.insert("n_minus".into(), json!(d.n_minus));
    }
    m.insert(
        "checks".into(),
        Value::Array(
            r.checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "status": if c.passed { "ok" } else { "failed" },
                    })
                })
                .collect(),
        ),
    );
    Value::Object(m)
}

pub fn canonical_json(t: &CanonicalTriple) -> Value {
    json!({
        "spectral_factor": complex_vec_json(t.spectral_factor.coeffs()),
        "a_numer": poly_json(&t.a_numer),
        "b_numer": poly_json(&t.b_numer),
        "a_at_zero": [t.a_at_zero.re, t.a_at_zero.im],
        "max_unimodular_residual": t.max_unimodular_residual,
        "min_factor_root_modulus": t.min_factor_root_modulus,
        "sarason_domain": space_json(&t.sarason_domain, "H^2"),
    })
}

fn trim_float(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

/// Plain-text rendering of a JSON report: indented key/value lines.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out
}

fn render_into(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(v, indent + 1, out);
                    }
                    Value::Array(items)
                        if items.iter().any(|i| i.is_object() || i.is_array()) =>
                    {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            render_into(item, indent + 1, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                render_into(item, indent, out);
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", inline(value))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}
