use std::fmt::{self, Write as _};

use crate::knot::{FdtcSign, HypAttrs, KnotExpr, LocusForm, PatternAttrs};
use crate::slope::Slope;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn slope_list(v: &[Slope]) -> String {
    let items: Vec<String> = v.iter().map(Slope::to_string).collect();
    format!("[{}]", items.join(" "))
}

fn hyp_attrs(attrs: &HypAttrs, name: Option<&str>) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(n) = name {
        out.push(format!("name={n}"));
    }
    if let Some(g) = attrs.genus {
        out.push(format!("genus={g}"));
    }
    if let Some(b) = attrs.fibred {
        out.push(format!("fibred={}", yes_no(b)));
    }
    match attrs.fdtc {
        FdtcSign::Positive => out.push("fdtc=+".into()),
        FdtcSign::Negative => out.push("fdtc=-".into()),
        FdtcSign::Zero => out.push("fdtc=0".into()),
        FdtcSign::Unknown => {}
    }
    if let Some(b) = attrs.positive_lspace {
        out.push(format!("plsk={}", yes_no(b)));
    }
    if let Some(b) = attrs.alternating {
        out.push(format!("alt={}", yes_no(b)));
    }
    if let Some(b) = attrs.persistently_foliar {
        out.push(format!("pf={}", yes_no(b)));
    }
    if let Some(d) = attrs.degeneracy_locus {
        let tail = match d.form {
            LocusForm::Mu => "",
            LocusForm::MuPlusLambda => "+lambda",
        };
        out.push(format!("delta={}mu{tail}", d.b));
    }
    if let Some(b) = attrs.branched_cover_not_lo {
        out.push(format!("bcnlo={}", yes_no(b)));
    }
    if !attrs.known_lo.is_empty() {
        out.push(format!("lo={}", slope_list(&attrs.known_lo)));
    }
    if !attrs.known_not_lo.is_empty() {
        out.push(format!("nlo={}", slope_list(&attrs.known_not_lo)));
    }
    out
}

fn pattern_attrs(p: &PatternAttrs) -> Vec<String> {
    let mut out = vec![format!("w={}", p.winding)];
    if let Some(b) = p.braided {
        out.push(format!("braided={}", yes_no(b)));
    }
    if let Some(o) = p.one_bridge_braid {
        out.push(format!("obb=({},{},{})", o.w, o.b, o.t));
    }
    if let Some(a) = p.compress_a {
        out.push(format!("a={a}"));
    }
    if let Some(b) = p.solid_torus_surgery {
        out.push(format!("stsurg={}", yes_no(b)));
    }
    match (p.cable_params, p.cabled) {
        (Some((m, n)), _) => out.push(format!("cable=({m},{n})")),
        (None, Some(b)) => out.push(format!("cable={}", yes_no(b))),
        (None, None) => {}
    }
    if let Some(b) = p.atoroidal {
        out.push(format!("atoroidal={}", yes_no(b)));
    }
    if let Some(b) = p.positive_lspace {
        out.push(format!("plsk={}", yes_no(b)));
    }
    if let Some(c) = p.closure_genus {
        out.push(format!("cgenus={c}"));
    }
    if let Some(c) = &p.closure {
        out.push(format!("closure={c}"));
    }
    out
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_char('U'),
            KnotExpr::Torus { m, n } => write!(f, "T({m},{n})"),
            KnotExpr::Hyp { attrs, name } => {
                write!(f, "Hyp({})", hyp_attrs(attrs, name.as_deref()).join(", "))
            }
            KnotExpr::Cable { m, n, companion } => write!(f, "C({m},{n}; {companion})"),
            KnotExpr::Satellite { pattern, companion } => {
                write!(f, "Sat({}; {companion})", pattern_attrs(pattern).join(", "))
            }
            KnotExpr::Sum(s) => {
                f.write_str("Sum(")?;
                for (i, k) in s.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{k}")?;
                }
                f.write_char(')')
            }
        }
    }
}
