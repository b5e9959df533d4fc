//! Table results and their text, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Format;

/// One degree of one smoothness order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub r: u32,
    pub d: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_formula: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_kernel: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<i64>,
    /// Whether the closed form is guaranteed to equal `dim C^r_d` here.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_guaranteed: Option<bool>,
    /// Value of the Hilbert polynomial at `d`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hp_value: Option<String>,
    /// All methods that must agree do; absent when only one method ran.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub general: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub three_curve: Option<u64>,
}

/// Per-smoothness data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub r: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_polynomial: Option<String>,
    /// Coefficients of the Hilbert polynomial, constant term first.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hp_coefficients: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub postulation: Option<i64>,
    /// Multiplicity of the scheme defined by `J`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thresholds: Option<Thresholds>,
    /// What the closed forms guarantee.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub applicability: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_hp: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub complex: String,
    pub classification: String,
    pub summaries: Vec<Summary>,
    pub rows: Vec<Row>,
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn yes_no(b: &Option<bool>) -> String {
    match b {
        Some(true) => "yes".into(),
        Some(false) => "NO".into(),
        None => String::new(),
    }
}

impl ResultDocument {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("plain data serializes") + "\n",
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::from("r,d,dim_formula,dim_kernel,closed_form,closed_form_guaranteed,hp_value,agrees\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                row.r,
                row.d,
                cell(&row.dim_formula),
                cell(&row.dim_kernel),
                cell(&row.closed_form),
                cell(&row.closed_form_guaranteed),
                cell(&row.hp_value),
                cell(&row.agrees)
            );
        }
        out
    }

    fn text(&self) -> String {
        let mut out = format!("{}: {}\n", self.complex, self.classification);
        let has = |f: &dyn Fn(&Row) -> bool| self.rows.iter().any(f);
        let formula = has(&|r| r.dim_formula.is_some());
        let kernel = has(&|r| r.dim_kernel.is_some());
        let closed = has(&|r| r.closed_form.is_some());
        let hp = has(&|r| r.hp_value.is_some());
        let agrees = has(&|r| r.agrees.is_some());
        for s in &self.summaries {
            out.push('\n');
            let _ = write!(out, "r = {}", s.r);
            if let Some(p) = &s.hilbert_polynomial {
                let _ = write!(out, "  HP {p}");
            }
            if let Some(p) = s.postulation {
                let _ = write!(out, "  postulation {p}");
            }
            if let Some(m) = &s.multiplicity {
                let _ = write!(out, "  multiplicity {m}");
            }
            out.push('\n');
            if let Some(a) = &s.applicability {
                let _ = writeln!(out, "  closed form: {a}");
            }
            if let Some(t) = &s.thresholds {
                let _ = write!(out, "  thresholds: general {}", t.general);
                if let Some(tc) = t.three_curve {
                    let _ = write!(out, ", three-curve {tc}");
                }
                out.push('\n');
            }
            let mut header = vec!["d"];
            if formula {
                header.push("formula");
            }
            if kernel {
                header.push("kernel");
            }
            if closed {
                header.push("closed");
            }
            if hp {
                header.push("HP");
            }
            if agrees {
                header.push("agrees");
            }
            let mut lines: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
            for row in self.rows.iter().filter(|row| row.r == s.r) {
                let mut l = vec![row.d.to_string()];
                if formula {
                    l.push(cell(&row.dim_formula));
                }
                if kernel {
                    l.push(cell(&row.dim_kernel));
                }
                if closed {
                    let mark = if row.closed_form_guaranteed == Some(false) { "*" } else { "" };
                    l.push(format!("{}{mark}", cell(&row.closed_form)));
                }
                if hp {
                    l.push(cell(&row.hp_value));
                }
                if agrees {
                    l.push(yes_no(&row.agrees));
                }
                lines.push(l);
            }
            let widths: Vec<usize> = (0..lines[0].len())
                .map(|k| lines.iter().map(|l| l[k].len()).max().unwrap_or(0))
                .collect();
            for l in &lines {
                let cells: Vec<String> = l.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                let _ = writeln!(out, "  {}", cells.join("  "));
            }
        }
        if closed {
            out.push_str("\n* closed form not guaranteed in this degree\n");
        }
        out
    }
}
