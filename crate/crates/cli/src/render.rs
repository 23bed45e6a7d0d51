use std::fmt::Write as _;

use surgery_core::engine::{Premise, Property, Trace, Verdict};
use surgery_core::logic::Tri;
use surgery_core::slope::Slope;

pub struct Style {
    pub color: bool,
    pub trace: bool,
}

impl Style {
    fn tri(&self, t: Tri) -> String {
        let code = match t {
            Tri::Yes => "32",
            Tri::No => "31",
            Tri::Unknown => "2",
        };
        if self.color {
            format!("\x1b[{code}m{t}\x1b[0m")
        } else {
            t.to_string()
        }
    }

    /// Pads before colouring so escape codes do not break alignment.
    fn cell(&self, t: Tri, width: usize) -> String {
        let pad = width.saturating_sub(t.as_str().len());
        format!("{}{}", self.tri(t), " ".repeat(pad))
    }
}

fn premise_lines(out: &mut String, p: &Premise, indent: usize) {
    let pad = " ".repeat(indent);
    match p {
        Premise::Fact(f) => {
            let _ = writeln!(out, "{pad}- {f}");
        }
        Premise::Sub(s) => {
            let _ = writeln!(
                out,
                "{pad}- {}({}): {} = {}",
                s.knot, s.slope, s.property, s.value
            );
            for t in &s.traces {
                trace_lines(out, t, indent + 4);
            }
        }
    }
}

fn trace_lines(out: &mut String, t: &Trace, indent: usize) {
    let pad = " ".repeat(indent);
    let conj = if t.conjectural { " CONJECTURAL" } else { "" };
    let _ = writeln!(
        out,
        "{pad}{} = {}  [{}, {}]{conj}",
        t.property, t.value, t.rule_id, t.citation
    );
    for p in &t.premises {
        premise_lines(out, p, indent + 2);
    }
}

pub fn verdict(style: &Style, v: &Verdict) -> String {
    let mut out = String::new();
    for p in Property::ALL {
        let _ = writeln!(out, "  {:<10} {}", p.as_str(), style.tri(v.get(p)));
    }
    for r in &v.reductions {
        let _ = writeln!(
            out,
            "  reduction: {} ({}({}))",
            r.description, r.knot, r.slope
        );
    }
    for n in &v.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    if style.trace {
        out.push_str("  traces:\n");
        for t in &v.traces {
            trace_lines(&mut out, t, 4);
        }
    }
    out
}

pub fn table(style: &Style, results: &[(Slope, Verdict)]) -> String {
    let width = results
        .iter()
        .map(|(s, _)| s.to_string().len())
        .max()
        .unwrap_or(0)
        .max(5);
    let mut out = format!("{:<width$}", "slope");
    for p in Property::ALL {
        let _ = write!(out, "  {:<9}", p.as_str());
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for (s, v) in results {
        let mut row = format!("{:<width$}", s.to_string());
        for p in Property::ALL {
            let _ = write!(row, "  {}", style.cell(v.get(p), 9));
        }
        out.push_str(row.trim_end());
        out.push('\n');
        if style.trace {
            for t in &v.traces {
                trace_lines(&mut out, t, 4);
            }
        }
    }
    out
}
