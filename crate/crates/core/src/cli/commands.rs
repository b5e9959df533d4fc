use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{ResultDocument, Row, Summary, Thresholds};
use super::{ComplexDocument, Format, Outcome, EXIT_INAPPLICABLE, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};
use crate::closed_forms::{
    applicability, distinct_tangent_hp, tangent_cone_comparison, validity_thresholds, ClosedFormError, Guarantee,
};
use crate::hilbert::{hilbert_data, QPoly};
use crate::polyring::{format_rational, Polynomial, Rational};
use crate::spline_complex::{
    classify_configuration, dim_kernel, spline_basis, Configuration, FormulaOracle, SplineError, StarComplex,
};

fn input_error(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_INPUT, format!("error: {e}\n"))
}

fn inapplicable(msg: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_INAPPLICABLE, format!("error: {msg}\n"))
}

fn complex(doc: &ComplexDocument, r: u32) -> Result<StarComplex, Outcome> {
    doc.complex(r).map_err(input_error)
}

fn formula_oracle(c: &StarComplex, r: u32) -> Result<FormulaOracle, Outcome> {
    FormulaOracle::new(c, r).map_err(|e| match e {
        SplineError::MixedSmoothness { .. } => inapplicable(e),
        other => input_error(other),
    })
}

fn closed_error(e: ClosedFormError) -> Outcome {
    match e {
        ClosedFormError::Spline(s) => input_error(s),
        other => inapplicable(other),
    }
}

fn check_cap(d: u32, cap: u32) -> Result<(), Outcome> {
    if d > cap {
        return Err(inapplicable(format!(
            "degree {d} exceeds the cap {cap}; raise it with --max-degree or {}",
            super::MAX_DEGREE_VAR
        )));
    }
    Ok(())
}

fn list<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

#[derive(Serialize)]
struct ClassifyReport {
    complex: String,
    kind: String,
    summary: String,
    degrees: Vec<u32>,
    tangents: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pencil_span: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<String>,
}

pub(super) fn classify(doc: &ComplexDocument, format: Format) -> Result<Outcome, Outcome> {
    let c = complex(doc, doc.default_smoothness)?;
    let conf = classify_configuration(&c);
    let report = ClassifyReport {
        complex: doc.label().to_string(),
        kind: conf.kind().to_string(),
        summary: conf.to_string(),
        degrees: c.degrees(),
        tangents: c.linear_parts().iter().map(|l| l.to_string()).collect(),
        pencil_span: match &conf {
            Configuration::Pencil { span, .. } => Some([span[0].to_string(), span[1].to_string()]),
            _ => None,
        },
        diagnostics: match &conf {
            Configuration::Other { diagnostics, .. } => diagnostics.iter().map(|d| d.to_string()).collect(),
            _ => Vec::new(),
        },
        warnings: c.warnings().to_vec(),
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Text | Format::Csv => {
            let mut out = format!("{}\n", report.summary);
            let forms: Vec<String> = c.forms().iter().map(|f| f.to_string()).collect();
            let _ = writeln!(out, "edges: {}", list(&forms));
            let _ = writeln!(out, "tangents at the vertex: {}", list(&report.tangents));
            if let Some([a, b]) = &report.pencil_span {
                let _ = writeln!(out, "pencil spanned by: {a}; {b}");
            }
            for w in &report.warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}

pub(super) struct TableOptions {
    pub rs: Vec<u32>,
    pub ds: RangeInclusive<u32>,
    pub formula: bool,
    pub kernel: bool,
    pub closed_form: bool,
    pub force: bool,
    pub max_degree: u32,
}

/// Closed-form values for one smoothness order.
struct ClosedForm {
    description: String,
    hp: QPoly,
    value: Box<dyn Fn(u32) -> i64 + Send + Sync>,
    guaranteed_from: Option<u32>,
}

fn rational_integer(q: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    q.to_integer().to_i64().unwrap_or(i64::MAX)
}

fn closed_form(c: &StarComplex, r: u32, force: bool) -> Result<(ClosedForm, Option<Thresholds>), Outcome> {
    let app = applicability(c, r).map_err(closed_error)?;
    let t = app.t.map(|t| format!(", t = {t}")).unwrap_or_default();
    match app.guarantee {
        Guarantee::HilbertFunction(ps) => Ok((
            ClosedForm {
                description: format!("pencil, free module; exact in every degree{t}"),
                hp: ps.hilbert_polynomial(),
                value: Box::new(move |d| ps.hilbert_function(d) as i64),
                guaranteed_from: Some(0),
            },
            None,
        )),
        Guarantee::HilbertPolynomial { hp, threshold } => {
            let th = validity_thresholds(&c.degrees(), r);
            let low = match app.low_power {
                Some(true) => ", saturation is the ideal of tangent powers",
                _ => "",
            };
            let poly = hp.hp.clone();
            Ok((
                ClosedForm {
                    description: format!("distinct tangents; Hilbert polynomial exact, equal to dim from d = {threshold}{t}{low}"),
                    hp: hp.hp,
                    value: Box::new(move |d| rational_integer(&poly.eval(d as i64))),
                    guaranteed_from: u32::try_from(threshold).ok(),
                },
                Some(Thresholds {
                    general: th.general,
                    three_curve: th.three_curve,
                }),
            ))
        }
        Guarantee::None => {
            if !force {
                return Err(inapplicable(format!(
                    "no closed form applies to this complex ({}); pass --force to evaluate the distinct-tangent polynomial anyway",
                    app.configuration
                )));
            }
            let hp = distinct_tangent_hp(&c.degrees(), r).map_err(closed_error)?.hp;
            let poly = hp.clone();
            Ok((
                ClosedForm {
                    description: "forced distinct-tangent polynomial, not guaranteed".into(),
                    hp,
                    value: Box::new(move |d| rational_integer(&poly.eval(d as i64))),
                    guaranteed_from: None,
                },
                None,
            ))
        }
    }
}

fn table_for_r(doc: &ComplexDocument, r: u32, opts: &TableOptions) -> Result<(Summary, Vec<Row>), Outcome> {
    let c = complex(doc, r)?;
    let oracle = if opts.formula { Some(formula_oracle(&c, r)?) } else { None };
    let closed = if opts.closed_form {
        if doc.has_overrides() {
            return Err(inapplicable("closed forms need one smoothness order on every edge"));
        }
        Some(closed_form(&c, r, opts.force)?)
    } else {
        None
    };
    let kernel: Vec<Option<u64>> = opts
        .ds
        .clone()
        .into_par_iter()
        .map(|d| opts.kernel.then(|| dim_kernel(&c, d)))
        .collect();
    let mut rows = Vec::new();
    for (k, d) in opts.ds.clone().enumerate() {
        let dim_formula = oracle.as_ref().map(|o| o.dim(d));
        let hp_value = oracle.as_ref().map(|o| format_rational(&o.hilbert_polynomial().eval(d as i64)));
        let (closed_value, guaranteed) = match &closed {
            Some((cf, _)) => (Some((cf.value)(d)), Some(cf.guaranteed_from.is_some_and(|t| d >= t))),
            None => (None, None),
        };
        let mut must_agree: Vec<i64> = Vec::new();
        must_agree.extend(dim_formula.map(|v| v as i64));
        must_agree.extend(kernel[k].map(|v| v as i64));
        if guaranteed == Some(true) {
            must_agree.extend(closed_value);
        }
        let agrees = (must_agree.len() >= 2).then(|| must_agree.windows(2).all(|w| w[0] == w[1]));
        rows.push(Row {
            r,
            d,
            dim_formula,
            dim_kernel: kernel[k],
            closed_form: closed_value,
            closed_form_guaranteed: guaranteed,
            hp_value,
            agrees,
        });
    }
    let (hp, postulation, multiplicity) = match &oracle {
        Some(o) => (
            Some(o.hilbert_polynomial()),
            Some(o.postulation()),
            Some(o.multiplicity().to_string()),
        ),
        None => (closed.as_ref().map(|(cf, _)| cf.hp.clone()), None, None),
    };
    let summary = Summary {
        r,
        hp_coefficients: hp
            .as_ref()
            .map(|p| p.coefficients().iter().map(format_rational).collect())
            .unwrap_or_default(),
        hilbert_polynomial: hp.map(|p| p.to_string()),
        postulation,
        multiplicity,
        thresholds: closed.as_ref().and_then(|(_, t)| t.clone()),
        applicability: closed.as_ref().map(|(cf, _)| cf.description.clone()),
        closed_form_hp: closed.as_ref().map(|(cf, _)| cf.hp.to_string()),
    };
    Ok((summary, rows))
}

pub(super) fn table(doc: &ComplexDocument, opts: &TableOptions, format: Format) -> Result<Outcome, Outcome> {
    check_cap(*opts.ds.end(), opts.max_degree)?;
    let c = complex(doc, doc.default_smoothness)?;
    let classification = classify_configuration(&c).to_string();
    let parts: Vec<(Summary, Vec<Row>)> = opts
        .rs
        .par_iter()
        .map(|&r| table_for_r(doc, r, opts))
        .collect::<Result<_, _>>()?;
    let mut result = ResultDocument {
        complex: doc.label().to_string(),
        classification,
        summaries: Vec::new(),
        rows: Vec::new(),
    };
    for (s, rows) in parts {
        result.summaries.push(s);
        result.rows.extend(rows);
    }
    let mut outcome = Outcome::ok(result.render(format));
    if let Some(bad) = result.rows.iter().find(|r| r.agrees == Some(false)) {
        outcome.code = EXIT_MISMATCH;
        outcome.stderr = format!("mismatch at r = {}, d = {}\n", bad.r, bad.d);
    }
    Ok(outcome)
}

#[derive(Serialize)]
struct Mismatch {
    r: u32,
    d: u32,
    what: String,
}

#[derive(Serialize)]
struct VerifyReport {
    complex: String,
    classification: String,
    agreements: usize,
    verified_through: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    not_verified_beyond: Option<u32>,
    mismatches: Vec<Mismatch>,
    notes: Vec<String>,
    status: String,
}

fn verify_closed_forms(
    c: &StarComplex,
    r: u32,
    oracle: &FormulaOracle,
    values: &[u64],
    notes: &mut Vec<String>,
    mismatches: &mut Vec<Mismatch>,
) -> Result<(), Outcome> {
    let app = applicability(c, r).map_err(closed_error)?;
    let top = values.len() as u32 - 1;
    match &app.guarantee {
        Guarantee::HilbertFunction(ps) => {
            for (d, &v) in values.iter().enumerate() {
                if ps.hilbert_function(d as u32) != v {
                    mismatches.push(Mismatch {
                        r,
                        d: d as u32,
                        what: format!("pencil closed form {} vs oracle {v}", ps.hilbert_function(d as u32)),
                    });
                }
            }
            if ps.postulation() != oracle.postulation() {
                mismatches.push(Mismatch {
                    r,
                    d: 0,
                    what: format!("pencil postulation {} vs oracle {}", ps.postulation(), oracle.postulation()),
                });
            }
            notes.push(format!("r = {r}: pencil closed form matches in every degree, postulation {}", ps.postulation()));
        }
        Guarantee::HilbertPolynomial { hp, threshold } => {
            if hp.hp != oracle.hilbert_polynomial() {
                mismatches.push(Mismatch {
                    r,
                    d: 0,
                    what: format!("closed-form HP {} vs oracle HP {}", hp.hp, oracle.hilbert_polynomial()),
                });
            }
            for d in (*threshold as u32)..=top {
                let v = Rational::from_integer(values[d as usize].into());
                if hp.hp.eval(d as i64) != v {
                    mismatches.push(Mismatch {
                        r,
                        d,
                        what: format!("closed-form HP value beyond threshold {threshold}"),
                    });
                }
            }
            notes.push(format!("r = {r}: distinct-tangent Hilbert polynomial matches (threshold {threshold})"));
        }
        Guarantee::None => match tangent_cone_comparison(&c.j_ideal()) {
            Ok(cmp) if !cmp.agrees() => notes.push(format!(
                "r = {r}: expected off-hypothesis divergence: tangent-cone multiplicity {}, oracle multiplicity {} ({}; relation degree spread {})",
                cmp.multiplicity_tangent_cone,
                cmp.multiplicity_j,
                app.configuration,
                cmp.resolution.relation_spread()
            )),
            Ok(cmp) => notes.push(format!(
                "r = {r}: no closed form applies ({}); tangent-cone multiplicity {} happens to agree",
                app.configuration, cmp.multiplicity_j
            )),
            Err(ClosedFormError::NotZeroDimensional) => notes.push(format!(
                "r = {r}: no closed form applies ({}); tangent cone not supported at the vertex",
                app.configuration
            )),
            Err(e) => return Err(closed_error(e)),
        },
    }
    Ok(())
}

pub(super) fn verify(doc: &ComplexDocument, r_max: u32, d_max: u32, cap: u32, format: Format) -> Result<Outcome, Outcome> {
    let top = d_max.min(cap);
    let c0 = complex(doc, doc.default_smoothness)?;
    let classification = classify_configuration(&c0).to_string();
    let mut agreements = 0;
    let mut mismatches = Vec::new();
    let mut notes = Vec::new();
    for r in 0..=r_max {
        let c = complex(doc, r)?;
        let oracle = formula_oracle(&c, r)?;
        let values: Vec<u64> = (0..=top).map(|d| oracle.dim(d)).collect();
        let kernel: Vec<u64> = (0..=top).into_par_iter().map(|d| dim_kernel(&c, d)).collect();
        for d in 0..=top {
            let (f, k) = (values[d as usize], kernel[d as usize]);
            if f == k {
                agreements += 1;
            } else {
                mismatches.push(Mismatch {
                    r,
                    d,
                    what: format!("formula {f} vs kernel {k}"),
                });
            }
        }
        if !doc.has_overrides() {
            verify_closed_forms(&c, r, &oracle, &values, &mut notes, &mut mismatches)?;
        }
    }
    let capped = d_max > cap;
    let status = if let Some(m) = mismatches.first() {
        format!("FAIL at r = {}, d = {}: {}", m.r, m.d, m.what)
    } else {
        format!("PASS, {agreements} agreements")
    };
    let report = VerifyReport {
        complex: doc.label().to_string(),
        classification,
        agreements,
        verified_through: top,
        not_verified_beyond: capped.then_some(cap),
        mismatches,
        notes,
        status,
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Text | Format::Csv => {
            let mut out = format!("{}: {}\n", report.complex, report.classification);
            for n in &report.notes {
                let _ = writeln!(out, "{n}");
            }
            if let Some(c) = report.not_verified_beyond {
                let _ = writeln!(out, "not verified beyond d = {c} (degree cap)");
            }
            let _ = writeln!(out, "{}", report.status);
            out
        }
    };
    let code = if !report.mismatches.is_empty() {
        EXIT_MISMATCH
    } else if capped {
        EXIT_INAPPLICABLE
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

#[derive(Serialize)]
struct BasisReport {
    r: u32,
    d: u32,
    dimension: usize,
    splines: Vec<Vec<String>>,
}

pub(super) fn basis(doc: &ComplexDocument, r: u32, d: u32, cap: u32, format: Format) -> Result<Outcome, Outcome> {
    check_cap(d, cap)?;
    let c = complex(doc, r)?;
    let splines = spline_basis(&c, d);
    let out = match format {
        Format::Text => splines.iter().map(|s| format!("{s}\n")).collect(),
        Format::Csv => {
            let mut out = String::from("spline,face,polynomial\n");
            for (i, s) in splines.iter().enumerate() {
                for (f, p) in s.parts.iter().enumerate() {
                    let _ = writeln!(out, "{},{},\"{p}\"", i + 1, f + 1);
                }
            }
            out
        }
        Format::Json => json(&BasisReport {
            r,
            d,
            dimension: splines.len(),
            splines: splines
                .iter()
                .map(|s| s.parts.iter().map(Polynomial::to_string).collect())
                .collect(),
        }),
    };
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct ModuleData {
    hilbert_polynomial: String,
    postulation: i64,
}

#[derive(Serialize)]
struct HilbertReport {
    r: u32,
    ideal: Vec<String>,
    hilbert_function: Vec<u64>,
    hilbert_polynomial: String,
    hp_coefficients: Vec<String>,
    postulation: i64,
    multiplicity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    spline_module: Option<ModuleData>,
}

pub(super) fn hilbert(doc: &ComplexDocument, r: u32, ideal_only: bool, format: Format) -> Result<Outcome, Outcome> {
    let c = complex(doc, r)?;
    let j = c.j_ideal();
    let data = hilbert_data(&j).map_err(inapplicable)?;
    let top = (data.postulation + 2).max(3) as u32;
    let spline_module = if ideal_only {
        None
    } else {
        let o = formula_oracle(&c, r)?;
        Some(ModuleData {
            hilbert_polynomial: o.hilbert_polynomial().to_string(),
            postulation: o.postulation(),
        })
    };
    let report = HilbertReport {
        r,
        ideal: j.generators().iter().map(|g| g.to_string()).collect(),
        hilbert_function: (0..=top).map(|d| data.value(d)).collect(),
        hilbert_polynomial: data.hp.to_string(),
        hp_coefficients: data.hp.coefficients().iter().map(format_rational).collect(),
        postulation: data.postulation,
        multiplicity: data.multiplicity.to_string(),
        spline_module,
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Text | Format::Csv => {
            let mut out = format!("J = <{}>\n", report.ideal.join(", "));
            let _ = writeln!(out, "HF(S/J, d) for d = 0..{top}: {}", list(&report.hilbert_function));
            let _ = writeln!(out, "HP(S/J): {}", report.hilbert_polynomial);
            let _ = writeln!(out, "postulation: {}", report.postulation);
            let _ = writeln!(out, "multiplicity: {}", report.multiplicity);
            if let Some(m) = &report.spline_module {
                let _ = writeln!(out, "spline module HP: {}", m.hilbert_polynomial);
                let _ = writeln!(out, "spline module postulation: {}", m.postulation);
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}
