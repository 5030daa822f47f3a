//! Rendering of generated objects as JSON, LaTeX, CSV or text tables.

use serde_json::{json, Value};

use wittkit::dirac::{dirac_spectral_new, dirac_spectral_standard, pauli_spectral, plain_latex};
use wittkit::verify::basis_for;
use wittkit::witt_local::{c8_table_text, C8Entry};
use wittkit::{
    c8_complex_table, complex_identification_g22, hadamard_identification, make_global_witt, make_local_witt, omega,
    Error, FrameMap, Multivector, Result, Scalar, SpectralBasis, Variant,
};

use crate::{Format, Object};

pub fn generate(
    object: Object,
    algebra: Option<&str>,
    k: Option<usize>,
    m: Option<usize>,
    variant: Option<&str>,
    format: Format,
) -> Result<String> {
    if format == Format::Table && !matches!(object, Object::C8Table) {
        return Err(Error::Schema("--format table is only available for c8-table".into()));
    }
    let out = match object {
        Object::GlobalWitt => global_witt(algebra.unwrap_or("g11"), format)?,
        Object::LocalWitt => local_witt(m.unwrap_or(8), format)?,
        Object::Spectral => spectral(&basis_for(algebra.unwrap_or("g11"))?, format),
        Object::Omega => {
            let variant: Variant = variant.unwrap_or("plain").parse()?;
            let o = omega(k.unwrap_or(2), variant)?;
            match format {
                Format::Json => pretty(&json!({
                    "k": o.k,
                    "variant": o.variant.to_string(),
                    "matrix": o.entries.to_json(),
                })),
                Format::Latex => format!("{}\n", plain_latex(&o.entries)),
                _ => o.entries.to_csv(),
            }
        }
        Object::DiracStandard | Object::DiracNew => {
            let dm = if matches!(object, Object::DiracStandard) {
                dirac_spectral_standard()?
            } else {
                dirac_spectral_new()?
            };
            match format {
                Format::Json => pretty(&dm.to_json()),
                Format::Latex => format!("{}\n", dm.to_latex()),
                _ => dm.to_csv(),
            }
        }
        Object::Pauli => {
            let p = pauli_spectral()?;
            match format {
                Format::Json => pretty(&p.to_json()),
                Format::Latex => format!("{}\n", p.to_latex()),
                _ => format!("{}\n", p.to_csv()),
            }
        }
        Object::FrameMap => {
            let fm = match variant {
                Some("complex") | Some("complex-plain") => complex_identification_g22()?,
                None | Some("plain") => hadamard_identification(k.unwrap_or(2))?,
                Some(other) => return Err(Error::Schema(format!("frame-map variant must be plain or complex, got {other:?}"))),
            };
            frame_map(&fm, format)
        }
        Object::C8Table => c8(&c8_complex_table(), format),
    };
    Ok(out)
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn mv_csv(name: &str, g: &Multivector) -> String {
    let labels: Vec<String> = (0..g.signature().dim()).map(|i| g.signature().label(i).to_string()).collect();
    let mut out = String::new();
    for (mask, c) in g.terms() {
        let blade: Vec<&str> = (0..labels.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| labels[i].as_str())
            .collect();
        let blade = if blade.is_empty() { "1".to_string() } else { blade.join("") };
        out.push_str(&format!("{name},{blade},\"{c}\"\n"));
    }
    out
}

fn named_mvs(items: &[(String, &Multivector)], format: Format, header: Value) -> String {
    match format {
        Format::Json => {
            let mut obj = header;
            let map = obj.as_object_mut().expect("object header");
            for (n, g) in items {
                map.insert(n.clone(), g.to_json());
            }
            pretty(&obj)
        }
        Format::Latex => items
            .iter()
            .map(|(n, g)| format!("{n} = {}\n", g.to_latex()))
            .collect(),
        _ => {
            let mut out = "name,blade,coeff\n".to_string();
            for (n, g) in items {
                out.push_str(&mv_csv(n, g));
            }
            out
        }
    }
}

fn global_witt(algebra: &str, format: Format) -> Result<String> {
    let n = match algebra {
        "g11" => 1,
        "g22" => 2,
        "g33" => 3,
        "g44" => 4,
        other => return Err(Error::Schema(format!("global-witt needs g11, g22, g33 or g44, got {other:?}"))),
    };
    let w = make_global_witt(n)?;
    let mut items = Vec::new();
    for i in 0..n {
        items.push((format!("a_{}", i + 1), &w.a[i]));
    }
    for i in 0..n {
        items.push((format!("b_{}", i + 1), &w.b[i]));
    }
    Ok(named_mvs(&items, format, json!({"n": n})))
}

fn local_witt(m: usize, format: Format) -> Result<String> {
    let w = make_local_witt(m)?;
    let items: Vec<(String, &Multivector)> = w.c.iter().enumerate().map(|(i, c)| (format!("c_{}", i + 1), c)).collect();
    Ok(named_mvs(&items, format, json!({"m": m})))
}

fn spectral(sb: &SpectralBasis, format: Format) -> String {
    match format {
        Format::Json => {
            let units: Vec<Vec<Value>> = (0..sb.dim())
                .map(|i| (0..sb.dim()).map(|j| sb.unit(i, j).to_json()).collect())
                .collect();
            pretty(&json!({
                "dim": sb.dim(),
                "rows": sb.row_elems().iter().map(Multivector::to_json).collect::<Vec<_>>(),
                "center": sb.center().to_json(),
                "cols": sb.col_elems().iter().map(Multivector::to_json).collect::<Vec<_>>(),
                "units": units,
            }))
        }
        Format::Latex => sb.to_latex(),
        _ => {
            let mut out = "name,blade,coeff\n".to_string();
            for i in 0..sb.dim() {
                for j in 0..sb.dim() {
                    out.push_str(&mv_csv(&format!("E{}{}", i + 1, j + 1), sb.unit(i, j)));
                }
            }
            out
        }
    }
}

fn frame_map(fm: &FrameMap, format: Format) -> String {
    match format {
        Format::Json => pretty(&fm.to_json()),
        Format::Latex => {
            let mut out = String::new();
            for (r, label) in fm.target_labels.iter().enumerate() {
                let mut rhs = String::new();
                for (s, c) in fm.signs.row(r).iter().zip(&fm.source_labels) {
                    if s.is_zero() {
                        continue;
                    }
                    let (sign, coeff) = split_sign(s);
                    if rhs.is_empty() {
                        rhs.push_str(if sign == "-" { "-" } else { "" });
                    } else {
                        rhs.push_str(&format!(" {sign} "));
                    }
                    rhs.push_str(&format!("{coeff}{}", latex_label(c)));
                }
                out.push_str(&format!("{}\\, {} = {rhs}\n", fm.scales[r].to_latex(), latex_label(label)));
            }
            out
        }
        _ => {
            let mut out = format!("scale,target,{}\n", fm.source_labels.join(","));
            for (r, label) in fm.target_labels.iter().enumerate() {
                let signs: Vec<String> = fm.signs.row(r).iter().map(Scalar::to_string).collect();
                out.push_str(&format!("\"{}\",{label},{}\n", fm.scales[r], signs.join(",")));
            }
            out
        }
    }
}

/// `(sign, magnitude)` of a coefficient, with unit magnitudes left blank.
fn split_sign(s: &Scalar) -> (&'static str, String) {
    let t = s.to_latex();
    let (sign, mag) = match t.strip_prefix('-') {
        Some(rest) => ("-", rest.to_string()),
        None => ("+", t),
    };
    (sign, if mag == "1" { String::new() } else { mag })
}

/// `c3` → `c_{3}`, `jf1` → `jf_{1}`.
fn latex_label(label: &str) -> String {
    let split = label.find(|c: char| c.is_ascii_digit()).unwrap_or(label.len());
    let (head, tail) = label.split_at(split);
    if tail.is_empty() {
        head.to_string()
    } else {
        format!("{head}_{{{tail}}}")
    }
}

fn c8(entries: &[C8Entry], format: Format) -> String {
    match format {
        Format::Table => c8_table_text(entries),
        Format::Json => {
            let rows: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "label": e.label,
                        "witt_label": e.witt_label,
                        "printed": e.printed_text,
                        "matches_printed": e.matches_printed,
                        "correction": e.correction,
                        "multivector": e.value.to_json(),
                    })
                })
                .collect();
            pretty(&json!({"entries": rows}))
        }
        Format::Latex => entries
            .iter()
            .map(|e| format!("{} = {} = {}\n", latex_label(e.label), e.witt_label, e.value.to_latex()))
            .collect(),
        Format::Csv => {
            let mut out = "label,witt_label,printed,matches_printed,correction\n".to_string();
            for e in entries {
                out.push_str(&format!(
                    "{},{},\"{}\",{},\"{}\"\n",
                    e.label,
                    e.witt_label,
                    e.printed_text,
                    e.matches_printed,
                    e.correction.clone().unwrap_or_default()
                ));
            }
            out
        }
    }
}
