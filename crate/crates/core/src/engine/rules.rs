use std::cmp::Ordering;

use crate::detection::{self, Detectable};
use crate::farey::fg_distance;
use crate::knot::{self, FdtcSign, KnotExpr};
use crate::logic::Tri;
use crate::slope::{satellite_image, Slope};

use super::{Ctx, Effect, EngineError, Premise, Property, Reduction, Side, SubVerdict, Verdict};

pub(crate) type Eval = fn(&Ctx, &Side) -> Result<Vec<Effect>, EngineError>;

type Out = Result<Vec<Effect>, EngineError>;

use Property::*;

fn fact(s: impl Into<String>) -> Premise {
    Premise::Fact(s.into())
}

fn conclude(property: Property, value: Tri, premises: Vec<Premise>) -> Effect {
    Effect::Conclude {
        property,
        value,
        premises,
        citation: None,
        conjectural: false,
    }
}

fn cited(property: Property, value: Tri, premises: Vec<Premise>, citation: &'static str) -> Effect {
    Effect::Conclude {
        property,
        value,
        premises,
        citation: Some(citation),
        conjectural: false,
    }
}

fn yes(property: Property, premises: Vec<Premise>) -> Effect {
    conclude(property, Tri::Yes, premises)
}

fn no(property: Property, premises: Vec<Premise>) -> Effect {
    conclude(property, Tri::No, premises)
}

fn sub_premise(knot: &KnotExpr, slope: Slope, property: Property, v: &Verdict) -> Premise {
    Premise::Sub(Box::new(SubVerdict {
        knot: knot.clone(),
        slope,
        property,
        value: v.get(property),
        traces: v.traces_for(property).cloned().collect(),
    }))
}

fn cable_slope(m: i64, n: i64) -> Slope {
    Slope::integer(m * n)
}

/// Winding number of the outermost companion torus of a cable or satellite.
fn winding(k: &KnotExpr) -> Option<u64> {
    match k {
        KnotExpr::Cable { m, .. } => Some(*m as u64),
        KnotExpr::Satellite { pattern, .. } => Some(pattern.winding),
        _ => None,
    }
}

fn at_most(r: Slope, bound: i128) -> bool {
    r.cmp_integer(bound) != Ordering::Greater
}

fn at_least(r: Slope, bound: i128) -> bool {
    r.cmp_integer(bound) != Ordering::Less
}

fn abs_p(r: Slope) -> u64 {
    r.p().unsigned_abs()
}

fn not_cabling_fact(r: Slope) -> Premise {
    fact(format!("{r} is not a cabling slope of the companion torus"))
}

pub(crate) fn none(_: &Ctx, _: &Side) -> Out {
    Ok(Vec::new())
}

pub(crate) fn reducible(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    let at = |m: i64, n: i64| {
        let c = cable_slope(m, n);
        let why = if r == c {
            format!("{r} is the cabling slope mn = {c}")
        } else {
            format!("{r} differs from the cabling slope mn = {c}")
        };
        (Tri::from_bool(r == c), why)
    };
    Ok(match &s.knot {
        KnotExpr::Cable { m, n, .. } => {
            let (v, why) = at(*m, *n);
            vec![conclude(Reducible, v, vec![fact(why)])]
        }
        KnotExpr::Satellite { pattern, .. } => match pattern.cable_params {
            Some((m, n)) => {
                let (v, why) = at(m, n);
                vec![conclude(Reducible, v, vec![fact(why)])]
            }
            None if knot::not_cabling(&s.knot, r) => vec![no(Reducible, vec![not_cabling_fact(r)])],
            None => Vec::new(),
        },
        KnotExpr::Sum(_) => vec![no(
            Reducible,
            vec![fact("a connected sum has no cabling annulus")],
        )],
        KnotExpr::Torus { m, n } => {
            let (v, why) = at(*m, *n);
            vec![cited(
                Reducible,
                v,
                vec![fact(why)],
                "Thm:torus-knot-surgery",
            )]
        }
        _ => Vec::new(),
    })
}

pub(crate) fn reducible_lens(cx: &Ctx, s: &Side) -> Out {
    if !cx.value(Reducible).is_yes() {
        return Ok(Vec::new());
    }
    let r = s.slope;
    let mut out = Vec::new();
    match &s.knot {
        KnotExpr::Cable { m, n, companion } if r == cable_slope(*m, *n) => {
            let split = fact(format!("K({r}) ≅ K0({n}/{m}) # L({m},{n})"));
            out.push(no(Lo, vec![split.clone()]));
            out.push(no(Ctf, vec![split.clone()]));
            let r0 = Slope::new(*n, *m)?;
            let sub = cx.sub(companion, r0)?;
            let v = sub.l_space();
            if v.is_known() {
                out.push(conclude(
                    LSpace,
                    v,
                    vec![split, sub_premise(companion, r0, LSpace, &sub)],
                ));
            }
        }
        KnotExpr::Satellite { pattern, .. } => {
            if let Some((m, n)) = pattern.cable_params {
                if r == cable_slope(m, n) {
                    let split = fact(format!("K({r}) has a summand L({m},{n})"));
                    out.push(no(Lo, vec![split.clone()]));
                    out.push(no(Ctf, vec![split]));
                }
            }
        }
        KnotExpr::Torus { m, n } if r == cable_slope(*m, *n) => {
            let split = fact(format!("K({r}) ≅ L({m},{n}) # L({n},{m})"));
            let c = "Thm:torus-knot-surgery";
            out.push(cited(Lo, Tri::No, vec![split.clone()], c));
            out.push(cited(Ctf, Tri::No, vec![split.clone()], c));
            out.push(cited(LSpace, Tri::Yes, vec![split], c));
        }
        _ => {}
    }
    Ok(out)
}

pub(crate) fn cable_compression(cx: &Ctx, s: &Side) -> Out {
    let KnotExpr::Cable { m, n, companion } = &s.knot else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    let c = cable_slope(*m, *n);
    let d = r.distance(&c);
    let mut out = Vec::new();
    if d == 1 {
        let r0 = satellite_image(r, *m as u64)?;
        let why = format!("Δ({r}, {c}) = 1, so K({r}) ≅ K0({r0})");
        out.push(Effect::Reduce(Reduction {
            description: why.clone(),
            knot: (**companion).clone(),
            slope: r0,
        }));
        let sub = cx.sub(companion, r0)?;
        for p in Property::ALL {
            let v = sub.get(p);
            if v.is_known() {
                out.push(conclude(
                    p,
                    v,
                    vec![fact(why.clone()), sub_premise(companion, r0, p, &sub)],
                ));
            }
        }
    } else if d >= 2 {
        out.push(yes(
            Toroidal,
            vec![fact(format!(
                "Δ({r}, {c}) = {d} >= 2, the companion torus stays incompressible"
            ))],
        ));
    }
    Ok(out)
}

pub(crate) fn companion_compression(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    Ok(match &s.knot {
        KnotExpr::Sum(_) => vec![yes(
            Toroidal,
            vec![fact("a swallow-follow torus stays incompressible")],
        )],
        KnotExpr::Satellite { pattern, .. } => {
            if knot::companion_torus_incompressible(&s.knot, r).is_yes() {
                vec![yes(
                    Toroidal,
                    vec![fact(format!(
                        "{r} is not a compressing slope of the companion torus"
                    ))],
                )]
            } else {
                match pattern.compress_a {
                    Some(a) if r == Slope::integer(a) || r == Slope::integer(a + 1) => {
                        let r0 = satellite_image(r, pattern.winding)?;
                        let side = if s.mirrored { "mirror: " } else { "" };
                        vec![Effect::Note(format!(
                            "{side}if the companion torus compresses in K({r}), then K({r}) ≅ K0({r0})"
                        ))]
                    }
                    _ => Vec::new(),
                }
            }
        }
        _ => Vec::new(),
    })
}

pub(crate) fn winding_zero(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    match &s.knot {
        KnotExpr::Satellite { pattern, .. }
            if pattern.winding == 0 && knot::not_cabling(&s.knot, r) =>
        {
            let why = || vec![fact("winding number 0"), not_cabling_fact(r)];
            Ok(vec![yes(Lo, why()), yes(Nls, why())])
        }
        _ => Ok(Vec::new()),
    }
}

pub(crate) fn winding_one(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    match &s.knot {
        KnotExpr::Satellite { pattern, .. } if pattern.winding == 1 => {
            let d = fg_distance(Slope::LONGITUDE, r);
            if d > 2 {
                return Ok(Vec::new());
            }
            let why = || {
                vec![fact(format!(
                    "winding number 1 and d_FG(0, {r}) = {d} <= 2"
                ))]
            };
            Ok(vec![yes(Lo, why()), yes(Nls, why())])
        }
        _ => Ok(Vec::new()),
    }
}

pub(crate) fn farey_balls(_: &Ctx, s: &Side) -> Out {
    let mut j = 0u32;
    let mut node = &s.knot;
    while let KnotExpr::Satellite { pattern, companion } = node {
        if pattern.winding != 1 {
            break;
        }
        j += 1;
        node = companion;
    }
    if j < 2 {
        return Ok(Vec::new());
    }
    let r = s.slope;
    let d = fg_distance(Slope::LONGITUDE, r);
    if d > j + 1 {
        return Ok(Vec::new());
    }
    let why = || {
        vec![fact(format!(
            "{j} nested winding number 1 satellites and d_FG(0, {r}) = {d} <= {}",
            j + 1
        ))]
    };
    Ok(vec![yes(Lo, why()), yes(Nls, why())])
}

pub(crate) fn split(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    if !s.knot.contains_sum() || !knot::not_cabling(&s.knot, r) {
        return Ok(Vec::new());
    }
    let root = matches!(s.knot, KnotExpr::Sum(_));
    let citation = if root {
        "Cor:composite-surgery"
    } else {
        "Thm:split-tori"
    };
    let why = || {
        let mut v = vec![fact(
            "the exterior contains a split torus from a connected sum",
        )];
        if !root {
            v.push(not_cabling_fact(r));
        }
        v
    };
    Ok(vec![
        cited(Lo, Tri::Yes, why(), citation),
        cited(Nls, Tri::Yes, why(), citation),
    ])
}

pub(crate) fn split_ctf(cx: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    if !knot::not_cabling(&s.knot, r) {
        return Ok(Vec::new());
    }
    let root = matches!(s.knot, KnotExpr::Sum(_));
    let mut node = &s.knot;
    let summands = loop {
        match node {
            KnotExpr::Sum(v) => break v,
            KnotExpr::Cable { companion, .. } | KnotExpr::Satellite { companion, .. } => {
                node = companion
            }
            _ => return Ok(Vec::new()),
        }
    };
    let fibred = summands.iter().filter(|k| knot::fibred(k).is_yes()).count();
    if fibred >= 2 {
        let citation = if root {
            "Cor:composite-fibred-ctf"
        } else {
            "Thm:split-tori-ctf"
        };
        let mut why = vec![fact(format!("{fibred} fibred summands in {node}"))];
        if !root {
            why.push(not_cabling_fact(r));
        }
        return Ok(vec![cited(Ctf, Tri::Yes, why, citation)]);
    }
    if root {
        if let Some(k) = summands.iter().find(|k| knot::persistently_foliar(k)) {
            return Ok(vec![cited(
                Ctf,
                Tri::Yes,
                vec![fact(format!("persistently foliar summand {k}"))],
                "Cor:persistently-foliar-summand",
            )]);
        }
    }
    if cx.flags().assume_conjecture {
        return Ok(vec![Effect::Conclude {
            property: Ctf,
            value: Tri::Yes,
            premises: vec![
                fact(format!("connected sum {node}")),
                fact("assuming CTF detection of the meridional family"),
            ],
            citation: Some("Conj:ctf-meridional-detection"),
            conjectural: true,
        }]);
    }
    Ok(Vec::new())
}

pub(crate) fn pattern_closure(cx: &Ctx, s: &Side) -> Out {
    let KnotExpr::Satellite { pattern, .. } = &s.knot else {
        return Ok(Vec::new());
    };
    let Some(closure) = pattern.closure.as_deref() else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    let sub = cx.sub(closure, r)?;
    if !sub.lo().is_yes() {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Lo,
        vec![
            fact(format!("pattern closure {closure}")),
            sub_premise(closure, r, Lo, &sub),
        ],
    )])
}

pub(crate) fn companion_lo(cx: &Ctx, s: &Side) -> Out {
    let (Some(w), Some(companion)) = (winding(&s.knot), s.knot.companion()) else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    if w == 0 || !knot::not_cabling(&s.knot, r) {
        return Ok(Vec::new());
    }
    let r0 = satellite_image(r, w)?;
    let sub = cx.sub(companion, r0)?;
    let incompressible = knot::companion_torus_incompressible(&s.knot, r).is_yes();
    let mut out = Vec::new();
    for (p, d) in [(Lo, Detectable::Lo), (Nls, Detectable::Nls)] {
        if sub.get(p).is_yes() {
            out.push(yes(
                p,
                vec![
                    fact(format!("winding number {w}, r/w² = {r0}")),
                    not_cabling_fact(r),
                    sub_premise(companion, r0, p, &sub),
                ],
            ));
        } else if incompressible {
            let det = detection::detected(companion, r0, d);
            if det.value.is_yes() {
                out.push(cited(
                    p,
                    Tri::Yes,
                    vec![
                        fact(format!(
                            "{r} is not a compressing slope of the companion torus"
                        )),
                        fact(format!(
                            "{r0} is {p}-detected in the companion exterior ({})",
                            det.provenance.unwrap_or("")
                        )),
                    ],
                    "Thm:gluing",
                ));
            }
        }
    }
    Ok(out)
}

pub(crate) fn companion_ctf(_: &Ctx, s: &Side) -> Out {
    let (Some(w), Some(companion)) = (winding(&s.knot), s.knot.companion()) else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    if w == 0 || !knot::not_cabling(&s.knot, r) {
        return Ok(Vec::new());
    }
    let r0 = satellite_image(r, w)?;
    let det = detection::strongly_ctf_detected(companion, r0);
    if !det.value.is_yes() {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Ctf,
        vec![
            fact(format!(
                "{r0} is strongly CTF-detected in the companion exterior ({})",
                det.provenance.unwrap_or("")
            )),
            not_cabling_fact(r),
        ],
    )])
}

pub(crate) fn winding_zero_ctf(cx: &Ctx, s: &Side) -> Out {
    let KnotExpr::Satellite { pattern, companion } = &s.knot else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    if pattern.winding != 0 || !knot::not_cabling(&s.knot, r) {
        return Ok(Vec::new());
    }
    if knot::fibred(companion).is_yes() {
        return Ok(vec![yes(
            Ctf,
            vec![
                fact(format!("winding number 0, fibred companion {companion}")),
                not_cabling_fact(r),
            ],
        )]);
    }
    if cx.flags().assume_conjecture {
        return Ok(vec![Effect::Conclude {
            property: Ctf,
            value: Tri::Yes,
            premises: vec![
                fact("winding number 0"),
                not_cabling_fact(r),
                fact("assuming CTF detection of the meridional family"),
            ],
            citation: Some("Conj:ctf-meridional-detection"),
            conjectural: true,
        }]);
    }
    Ok(Vec::new())
}

pub(crate) fn fdtc_satellite(_: &Ctx, s: &Side) -> Out {
    let (Some(w), Some(companion)) = (winding(&s.knot), s.knot.companion()) else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    if w == 0 || !knot::fibred(companion).is_yes() || !knot::not_cabling(&s.knot, r) {
        return Ok(Vec::new());
    }
    let w2 = (w as i128) * (w as i128);
    let (inside, range) = match knot::fdtc_sign(companion) {
        FdtcSign::Positive => (at_most(r, w2), format!("(-inf, {w2}]")),
        FdtcSign::Negative => (at_least(r, -w2), format!("[{}, inf)", -w2)),
        FdtcSign::Zero => (true, "every slope".to_string()),
        FdtcSign::Unknown => return Ok(Vec::new()),
    };
    if !inside {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Ctf,
        vec![
            fact(format!(
                "fibred companion with FDTC sign {:?}, {r} in {range}",
                knot::fdtc_sign(companion)
            )),
            not_cabling_fact(r),
        ],
    )])
}

pub(crate) fn satellite_lspace(_: &Ctx, s: &Side) -> Out {
    let Some(w) = winding(&s.knot) else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    if !knot::positive_lspace(&s.knot).is_yes() || !at_most(r, (w as i128) * (w as i128)) {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Ctf,
        vec![fact(format!(
            "positive satellite L-space knot, {r} <= w² = {}",
            w * w
        ))],
    )])
}

/// The `n` for which the knot may be `C(2,n; T(2,3))`, when it may be one at all.
enum TrefoilCable {
    Is(i64),
    MaybeWith(i64),
    MaybeUnknown,
    Not,
}

fn trefoil_cable(k: &KnotExpr) -> TrefoilCable {
    let trefoil = KnotExpr::torus(2, 3);
    match k {
        KnotExpr::Cable { m: 2, n, companion } if **companion == trefoil => TrefoilCable::Is(*n),
        KnotExpr::Satellite { pattern, companion }
            if **companion == trefoil && pattern.winding == 2 && !pattern.is_uncabled() =>
        {
            match (pattern.cable_params, knot::genus(k)) {
                (Some((_, n)), _) => TrefoilCable::MaybeWith(n),
                (None, Some(g)) => TrefoilCable::MaybeWith(2 * g as i64 - 3),
                (None, None) => TrefoilCable::MaybeUnknown,
            }
        }
        _ => TrefoilCable::Not,
    }
}

pub(crate) fn satellite_lspace_nine(_: &Ctx, s: &Side) -> Out {
    if winding(&s.knot).is_none() || !knot::positive_lspace(&s.knot).is_yes() {
        return Ok(Vec::new());
    }
    let r = s.slope;
    if !at_most(r, 9) {
        return Ok(Vec::new());
    }
    let exceptional = |n: i64| matches!(n, 3 | 5 | 7) && at_least(r, n as i128 + 2);
    let ctf = || {
        yes(
            Ctf,
            vec![fact(format!("positive satellite L-space knot, {r} <= 9"))],
        )
    };
    Ok(match trefoil_cable(&s.knot) {
        TrefoilCable::Is(n) if exceptional(n) => {
            let why = || vec![fact(format!("C(2,{n}; T(2,3)) with {r} in [{}, 9]", n + 2))];
            vec![yes(LSpace, why()), no(Ctf, why())]
        }
        TrefoilCable::MaybeWith(n) if exceptional(n) => Vec::new(),
        TrefoilCable::MaybeUnknown if at_least(r, 5) => Vec::new(),
        _ => vec![ctf()],
    })
}

pub(crate) fn lspace_range(_: &Ctx, s: &Side) -> Out {
    if !knot::positive_lspace(&s.knot).is_yes() {
        return Ok(Vec::new());
    }
    let Some(g) = knot::genus(&s.knot) else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    let bound = 2 * g as i128 - 1;
    Ok(vec![conclude(
        LSpace,
        Tri::from_bool(at_least(r, bound)),
        vec![fact(format!(
            "positive L-space knot of genus {g}, L-space slopes are r >= {bound}"
        ))],
    )])
}

pub(crate) fn torus(_: &Ctx, s: &Side) -> Out {
    let KnotExpr::Torus { m, n } = &s.knot else {
        return Ok(Vec::new());
    };
    if *n < 0 {
        return Ok(Vec::new());
    }
    let (m, n) = (*m as i128, *n as i128);
    let b = m * n - m - n;
    let r = s.slope;
    let below = r.cmp_integer(b) == Ordering::Less;
    let why = || {
        let rel = if below { "<" } else { ">=" };
        vec![fact(format!("T({m},{n}): {r} {rel} mn - m - n = {b}"))]
    };
    let v = Tri::from_bool(below);
    Ok(vec![
        conclude(Lo, v, why()),
        conclude(Ctf, v, why()),
        conclude(Nls, v, why()),
        conclude(LSpace, !v, why()),
    ])
}

pub(crate) fn small_homology(cx: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    if !cx.value(Toroidal).is_yes() || !cx.value(Reducible).is_no() || !(1..=4).contains(&abs_p(r))
    {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Lo,
        vec![
            fact(format!("|H1(K({r}))| = {} <= 4", abs_p(r))),
            fact("K(r) is irreducible and toroidal"),
        ],
    )])
}

/// Signs `ε` for which the knot may be the `(2,ε)`-cable of a knot.
fn two_cable_signs(k: &KnotExpr, hyperbolic_companion: bool) -> Vec<i64> {
    let companion_ok = |c: &KnotExpr| !hyperbolic_companion || matches!(c, KnotExpr::Hyp { .. });
    match k {
        KnotExpr::Cable { m: 2, n, companion } if n.abs() == 1 && companion_ok(companion) => {
            vec![*n]
        }
        KnotExpr::Satellite { pattern, companion } if companion_ok(companion) => {
            match pattern.cable_params {
                Some((2, e)) if e.abs() == 1 => vec![e],
                Some(_) => Vec::new(),
                None if pattern.is_uncabled() => Vec::new(),
                None if hyperbolic_companion && pattern.winding == 2 => vec![1, -1],
                None if !hyperbolic_companion && pattern.winding % 2 == 0 => vec![1, -1],
                None => Vec::new(),
            }
        }
        _ => Vec::new(),
    }
}

pub(crate) fn satellite_small_p(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    if !s.knot.is_satellite() || !(1..=4).contains(&abs_p(r)) || r.q() < 2 {
        return Ok(Vec::new());
    }
    if two_cable_signs(&s.knot, true)
        .iter()
        .any(|&e| (r.p(), r.q()) == (3 * e, 2))
    {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Lo,
        vec![fact(format!(
            "satellite knot, {r} with 1 <= |p| <= 4 and q >= 2"
        ))],
    )])
}

pub(crate) fn small_p_satellite(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    if !s.knot.is_satellite() || !matches!(abs_p(r), 1 | 2) {
        return Ok(Vec::new());
    }
    if two_cable_signs(&s.knot, false)
        .iter()
        .any(|&e| r == Slope::integer(2 * e))
    {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Lo,
        vec![fact(format!("satellite knot, {r} with |p| <= 2"))],
    )])
}

pub(crate) fn degeneracy_locus(_: &Ctx, s: &Side) -> Out {
    let KnotExpr::Hyp { attrs, .. } = &s.knot else {
        return Ok(Vec::new());
    };
    let Some(delta) = attrs.degeneracy_locus else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    if !matches!(abs_p(r), 1 | 2) {
        return Ok(Vec::new());
    }
    let i = delta.intersection(r);
    if i.abs() < 2 {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Lo,
        vec![fact(format!(
            "degeneracy locus meets {r} with |Δ| = {} >= 2",
            i.abs()
        ))],
    )])
}

pub(crate) fn small_p_hyperbolic(_: &Ctx, s: &Side) -> Out {
    let r = s.slope;
    if !matches!(s.knot, KnotExpr::Hyp { .. })
        || !matches!(abs_p(r), 1 | 2)
        || knot::small_p_candidates().contains(&r)
    {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Lo,
        vec![fact(format!(
            "hyperbolic knot, {r} with |p| <= 2 outside {{±1, ±2, ±1/2, ±2/3}}"
        ))],
    )])
}

pub(crate) fn fibred_small_p(_: &Ctx, s: &Side) -> Out {
    let KnotExpr::Hyp { attrs, .. } = &s.knot else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    if !matches!(abs_p(r), 1 | 2) || r.q() < 2 {
        return Ok(Vec::new());
    }
    let (citation, why) = if attrs.is_fibred().is_yes() {
        ("Cor:fibred-small-p", "fibred")
    } else if attrs.alternating == Some(true) {
        ("Cor:alternating-small-p", "alternating")
    } else if attrs.branched_cover_not_lo == Some(true) {
        ("Cor:branched-cover-small-p", "non-LO double branched cover")
    } else {
        return Ok(Vec::new());
    };
    Ok(vec![cited(
        Lo,
        Tri::Yes,
        vec![fact(format!(
            "hyperbolic knot ({why}), {r} with |p| <= 2 and q >= 2"
        ))],
        citation,
    )])
}

pub(crate) fn strong_ctf(_: &Ctx, s: &Side) -> Out {
    if !matches!(s.knot, KnotExpr::Torus { .. } | KnotExpr::Hyp { .. }) {
        return Ok(Vec::new());
    }
    let r = s.slope;
    let det = detection::strongly_ctf_detected(&s.knot, r);
    if !det.value.is_yes() {
        return Ok(Vec::new());
    }
    Ok(vec![yes(
        Ctf,
        vec![fact(format!(
            "{r} is strongly CTF-detected in the exterior ({})",
            det.provenance.unwrap_or("")
        ))],
    )])
}

pub(crate) fn declared(_: &Ctx, s: &Side) -> Out {
    let KnotExpr::Hyp { attrs, .. } = &s.knot else {
        return Ok(Vec::new());
    };
    let r = s.slope;
    let mut out = Vec::new();
    if attrs.known_lo.contains(&r) {
        out.push(yes(Lo, vec![fact(format!("{r} declared LO"))]));
    }
    if attrs.known_not_lo.contains(&r) {
        out.push(no(Lo, vec![fact(format!("{r} declared not LO"))]));
    }
    Ok(out)
}

pub(crate) fn ctf_nls(cx: &Ctx, _: &Side) -> Out {
    let mut out = Vec::new();
    if cx.value(Ctf).is_yes() {
        out.push(yes(Nls, vec![fact("K(r) is CTF")]));
    }
    let (l, nls) = (cx.value(LSpace), cx.value(Nls));
    // each side fills or contradicts the other, never confirms it
    if l.is_known() && nls != !l {
        out.push(cited(
            Nls,
            !l,
            vec![fact(format!("l_space = {l}"))],
            "Def:l-space",
        ));
    }
    if nls.is_known() && l != !nls {
        out.push(cited(
            LSpace,
            !nls,
            vec![fact(format!("nls = {nls}"))],
            "Def:l-space",
        ));
    }
    Ok(out)
}
