//! Knot expressions: constructors, attribute atoms and derived invariants.
//!
//! A `KnotExpr` is syntax. Anything the engine cannot compute from the
//! constructors themselves has to be declared as an attribute, and an
//! undeclared attribute is treated as unknown rather than assumed.

use num_integer::Integer;
use thiserror::Error;

use crate::logic::Tri;
use crate::slope::Slope;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("invalid torus knot parameters: {0}")]
    InvalidTorusParams(String),
    #[error("invalid cable parameters: {0}")]
    InvalidCableParams(String),
    #[error("trivial companion: {0}")]
    TrivialCompanion(String),
    #[error("malformed pattern: {0}")]
    MalformedPattern(String),
    #[error("malformed connected sum: {0}")]
    MalformedSum(String),
    #[error("inconsistent attributes: {0}")]
    InconsistentAttrs(String),
    #[error("depth {depth} exceeds the constructor chain length {chain}")]
    DepthExceeded { depth: usize, chain: usize },
}

/// Sign of the fractional Dehn twist coefficient of a fibred knot's monodromy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum FdtcSign {
    Positive,
    Negative,
    Zero,
    #[default]
    Unknown,
}

impl FdtcSign {
    pub fn flip(self) -> FdtcSign {
        match self {
            FdtcSign::Positive => FdtcSign::Negative,
            FdtcSign::Negative => FdtcSign::Positive,
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocusForm {
    /// `b μ`
    Mu,
    /// `b μ + λ`
    MuPlusLambda,
}

/// Degeneracy locus of a pseudo-Anosov flow on the knot complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyLocus {
    pub form: LocusForm,
    pub b: i64,
}

impl DegeneracyLocus {
    /// Algebraic intersection number of the locus with `p μ + q λ`.
    pub fn intersection(&self, r: Slope) -> i128 {
        let (p, q) = (r.p() as i128, r.q() as i128);
        let b = self.b as i128;
        match self.form {
            LocusForm::Mu => b * q,
            LocusForm::MuPlusLambda => b * q - p,
        }
    }
}

/// Declared facts about a hyperbolic knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HypAttrs {
    pub genus: Option<u64>,
    pub fibred: Option<bool>,
    pub fdtc: FdtcSign,
    pub positive_lspace: Option<bool>,
    pub alternating: Option<bool>,
    pub persistently_foliar: Option<bool>,
    pub degeneracy_locus: Option<DegeneracyLocus>,
    /// Some cyclic branched cover of order at least 2 is not LO.
    pub branched_cover_not_lo: Option<bool>,
    pub known_lo: Vec<Slope>,
    pub known_not_lo: Vec<Slope>,
}

impl HypAttrs {
    pub fn is_fibred(&self) -> Tri {
        if self.positive_lspace == Some(true) || self.fdtc != FdtcSign::Unknown {
            return Tri::Yes;
        }
        Tri::from_option(self.fibred)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneBridgeBraid {
    pub w: u64,
    pub b: u64,
    pub t: u64,
}

/// Declared facts about a satellite pattern `P ⊂ V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PatternAttrs {
    pub winding: u64,
    pub braided: Option<bool>,
    pub one_bridge_braid: Option<OneBridgeBraid>,
    /// The integer `a` with solid-torus surgery slopes contained in `{a, a+1}`.
    pub compress_a: Option<i64>,
    /// The pattern admits a non-trivial surgery yielding a solid torus.
    pub solid_torus_surgery: Option<bool>,
    pub cabled: Option<bool>,
    pub cable_params: Option<(i64, i64)>,
    /// The pattern exterior in the solid torus contains no essential torus.
    pub atoroidal: Option<bool>,
    /// The satellite knot itself is a positive L-space knot.
    pub positive_lspace: Option<bool>,
    /// The knot `P(U)`.
    pub closure: Option<Box<KnotExpr>>,
    pub closure_genus: Option<u64>,
}

impl PatternAttrs {
    pub fn with_winding(w: u64) -> Self {
        PatternAttrs {
            winding: w,
            ..Default::default()
        }
    }

    /// Known not to be a cabled pattern.
    pub fn is_uncabled(&self) -> bool {
        self.cabled == Some(false)
            || self.braided == Some(false)
            || self.one_bridge_braid.is_some()
            || self.compress_a.is_some()
    }

    pub fn closure_genus(&self) -> Option<u64> {
        self.closure_genus
            .or_else(|| self.closure.as_deref().and_then(genus))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotExpr {
    Unknot,
    /// Canonical form after validation: `2 <= m < |n|`.
    Torus {
        m: i64,
        n: i64,
    },
    Hyp {
        attrs: HypAttrs,
        name: Option<String>,
    },
    Cable {
        m: i64,
        n: i64,
        companion: Box<KnotExpr>,
    },
    Satellite {
        pattern: PatternAttrs,
        companion: Box<KnotExpr>,
    },
    Sum(Vec<KnotExpr>),
}

impl KnotExpr {
    pub fn torus(m: i64, n: i64) -> KnotExpr {
        KnotExpr::Torus { m, n }
    }

    pub fn hyp(attrs: HypAttrs) -> KnotExpr {
        KnotExpr::Hyp { attrs, name: None }
    }

    pub fn cable(m: i64, n: i64, companion: KnotExpr) -> KnotExpr {
        KnotExpr::Cable {
            m,
            n,
            companion: Box::new(companion),
        }
    }

    pub fn satellite(pattern: PatternAttrs, companion: KnotExpr) -> KnotExpr {
        KnotExpr::Satellite {
            pattern,
            companion: Box::new(companion),
        }
    }

    pub fn sum(summands: Vec<KnotExpr>) -> KnotExpr {
        KnotExpr::Sum(summands)
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self, KnotExpr::Unknot)
    }

    /// True for constructors whose exterior contains an essential torus.
    pub fn is_satellite(&self) -> bool {
        matches!(
            self,
            KnotExpr::Cable { .. } | KnotExpr::Satellite { .. } | KnotExpr::Sum(_)
        )
    }

    pub fn companion(&self) -> Option<&KnotExpr> {
        match self {
            KnotExpr::Cable { companion, .. } | KnotExpr::Satellite { companion, .. } => {
                Some(companion)
            }
            _ => None,
        }
    }

    /// Winding number of the outermost companion torus (1 for a connected sum).
    pub fn root_winding(&self) -> Option<u64> {
        match self {
            KnotExpr::Cable { m, .. } => Some(*m as u64),
            KnotExpr::Satellite { pattern, .. } => Some(pattern.winding),
            KnotExpr::Sum(_) => Some(1),
            _ => None,
        }
    }

    pub fn height(&self) -> usize {
        match self {
            KnotExpr::Unknot | KnotExpr::Torus { .. } => 1,
            KnotExpr::Hyp { .. } => 1,
            KnotExpr::Cable { companion, .. } => 1 + companion.height(),
            KnotExpr::Satellite { pattern, companion } => {
                let closure = pattern.closure.as_deref().map_or(0, KnotExpr::height);
                1 + companion.height().max(closure)
            }
            KnotExpr::Sum(s) => 1 + s.iter().map(KnotExpr::height).max().unwrap_or(0),
        }
    }

    pub fn contains_sum(&self) -> bool {
        match self {
            KnotExpr::Sum(_) => true,
            KnotExpr::Cable { companion, .. } | KnotExpr::Satellite { companion, .. } => {
                companion.contains_sum()
            }
            _ => false,
        }
    }
}

/// Bound on torus, cable and winding parameters, so `mn` and `w²` fit in an `i64`.
pub const MAX_PARAM: u64 = i32::MAX as u64;

fn check_cable_pair(m: i64, n: i64) -> Result<(), String> {
    if m.unsigned_abs() > MAX_PARAM || n.unsigned_abs() > MAX_PARAM {
        return Err(format!("parameters above {MAX_PARAM} are not supported"));
    }
    if m < 2 {
        return Err(format!("m = {m} must be at least 2"));
    }
    if n == 0 {
        return Err("n must be non-zero".into());
    }
    if m.gcd(&n) != 1 {
        return Err(format!("gcd({m}, {n}) != 1"));
    }
    Ok(())
}

/// Checks every structural invariant and returns the normalized tree:
/// torus parameters in canonical order, nested sums flattened and sorted,
/// declared slope lists sorted.
pub fn validate(expr: &KnotExpr) -> Result<KnotExpr, KnotError> {
    use KnotError::*;
    match expr {
        KnotExpr::Unknot => Ok(KnotExpr::Unknot),
        KnotExpr::Torus { m, n } => {
            let (am, an) = (m.unsigned_abs(), n.unsigned_abs());
            if am > MAX_PARAM || an > MAX_PARAM {
                return Err(InvalidTorusParams(format!(
                    "parameters above {MAX_PARAM} are not supported"
                )));
            }
            if am < 2 || an < 2 {
                return Err(InvalidTorusParams(format!(
                    "T({m},{n}) is trivial; both parameters need |.| >= 2"
                )));
            }
            if am.gcd(&an) != 1 {
                return Err(InvalidTorusParams(format!("gcd({m}, {n}) != 1")));
            }
            let sign = m.signum() * n.signum();
            let (lo, hi) = (am.min(an) as i64, am.max(an) as i64);
            Ok(KnotExpr::Torus {
                m: lo,
                n: sign * hi,
            })
        }
        KnotExpr::Hyp { attrs, name } => {
            if let Some(name) = name {
                let starts_ok = name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_');
                if !starts_ok || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(InconsistentAttrs(format!("bad atom name {name:?}")));
                }
            }
            Ok(KnotExpr::Hyp {
                attrs: validate_hyp(attrs)?,
                name: name.clone(),
            })
        }
        KnotExpr::Cable { m, n, companion } => {
            check_cable_pair(*m, *n).map_err(InvalidCableParams)?;
            if companion.is_unknot() {
                return Err(TrivialCompanion(
                    "a cable needs a non-trivial companion".into(),
                ));
            }
            Ok(KnotExpr::cable(*m, *n, validate(companion)?))
        }
        KnotExpr::Satellite { pattern, companion } => {
            if companion.is_unknot() {
                return Err(TrivialCompanion(
                    "a satellite needs a non-trivial companion".into(),
                ));
            }
            let companion = validate(companion)?;
            let pattern = validate_pattern(pattern, &companion)?;
            Ok(KnotExpr::satellite(pattern, companion))
        }
        KnotExpr::Sum(summands) => {
            let mut flat = Vec::new();
            for s in summands {
                match validate(s)? {
                    KnotExpr::Sum(inner) => flat.extend(inner),
                    KnotExpr::Unknot => {
                        return Err(TrivialCompanion("the unknot cannot be a summand".into()));
                    }
                    k => flat.push(k),
                }
            }
            if flat.len() < 2 {
                return Err(MalformedSum("a connected sum needs two summands".into()));
            }
            flat.sort();
            Ok(KnotExpr::Sum(flat))
        }
    }
}

fn validate_hyp(attrs: &HypAttrs) -> Result<HypAttrs, KnotError> {
    let bad = |msg: &str| Err(KnotError::InconsistentAttrs(msg.to_string()));
    if attrs.genus == Some(0) {
        return bad("a non-trivial knot has genus at least 1");
    }
    if let Some(d) = attrs.degeneracy_locus {
        if d.b == 0 {
            return bad("degeneracy locus coefficient b must be non-zero");
        }
    }
    if attrs.fibred == Some(false) {
        if attrs.fdtc != FdtcSign::Unknown {
            return bad("fdtc is only defined for fibred knots");
        }
        if attrs.positive_lspace == Some(true) {
            return bad("positive L-space knots are fibred");
        }
    }
    if attrs.positive_lspace == Some(true) {
        if !matches!(attrs.fdtc, FdtcSign::Positive | FdtcSign::Unknown) {
            return bad("positive L-space knots have positive fdtc");
        }
        if attrs.persistently_foliar == Some(true) {
            return bad(
                "a positive L-space knot has L-space surgeries, so it is not persistently foliar",
            );
        }
        if attrs.genus.is_some_and(|g| g < 3) {
            return bad("hyperbolic L-space knots have genus at least 3");
        }
    }
    let mut out = attrs.clone();
    for list in [&mut out.known_lo, &mut out.known_not_lo] {
        list.sort();
        list.dedup();
        if list.iter().any(Slope::is_meridian) {
            return bad("declared surgery slopes must be rational");
        }
    }
    if out.known_lo.iter().any(|s| out.known_not_lo.contains(s)) {
        return bad("a slope is declared both LO and not LO");
    }
    let small: Vec<Slope> = out
        .known_not_lo
        .iter()
        .copied()
        .filter(|s| matches!(s.p().abs(), 1 | 2))
        .collect();
    if !fits_exceptional_shape(&small) {
        return bad("non-LO slopes with |p| <= 2 must lie in {e/2, 2e/3, e, 2e} for one sign e");
    }
    let restricted = out.is_fibred().is_yes()
        || out.alternating == Some(true)
        || out.branched_cover_not_lo == Some(true);
    for s in &small {
        if restricted && s.q() != 1 {
            return bad(
                "fibred, alternating or branched-cover atoms are LO at 1/q and 2/q for q >= 2",
            );
        }
        if let Some(d) = out.degeneracy_locus {
            if d.intersection(*s).abs() >= 2 {
                return bad("a slope meeting the degeneracy locus at least twice is LO");
            }
        }
    }
    Ok(out)
}

fn validate_pattern(p: &PatternAttrs, companion: &KnotExpr) -> Result<PatternAttrs, KnotError> {
    use KnotError::*;
    let w = p.winding;
    let bad = |msg: String| Err(InconsistentAttrs(msg));
    if w > MAX_PARAM {
        return Err(MalformedPattern(format!(
            "winding number above {MAX_PARAM}"
        )));
    }
    if let Some(obb) = p.one_bridge_braid {
        if obb.w < 3 || obb.b < 1 || obb.t < 1 || obb.b > obb.w - 2 || obb.t > obb.w - 2 {
            return Err(MalformedPattern(format!(
                "1-bridge braid ({},{},{}) needs w >= 3 and 1 <= b,t <= w-2",
                obb.w, obb.b, obb.t
            )));
        }
        if obb.w != w {
            return Err(MalformedPattern(format!(
                "1-bridge braid has {} strands but winding number is {w}",
                obb.w
            )));
        }
        if p.braided == Some(false) {
            return bad("a 1-bridge braid is braided".into());
        }
    }
    if p.braided == Some(true) && w == 0 {
        return bad("a braided pattern has winding number at least 1".into());
    }
    if let Some((m, n)) = p.cable_params {
        check_cable_pair(m, n).map_err(InvalidCableParams)?;
        if p.cabled == Some(false) {
            return bad("cable parameters declared on an uncabled pattern".into());
        }
        if !w.is_multiple_of(m as u64) {
            return bad(format!(
                "a cabled pattern C({m},{n})(..) has winding divisible by {m}"
            ));
        }
    }
    let cabled = p.cabled.or(p.cable_params.map(|_| true));
    if cabled == Some(true) && w == 1 {
        return bad("a winding number one pattern is never cabled".into());
    }
    if cabled == Some(true) && (p.one_bridge_braid.is_some() || p.compress_a.is_some()) {
        return bad("1-bridge braid data describes an uncabled pattern".into());
    }
    if p.solid_torus_surgery == Some(true) {
        if p.braided == Some(false) {
            return bad("only braided patterns have solid torus surgeries".into());
        }
        if w < 4 {
            return bad(format!(
                "a pattern with a solid torus surgery has winding number at least 4, not {w}"
            ));
        }
        if cabled == Some(false) && w < 5 {
            return bad("an uncabled 1-bridge braid with a solid torus surgery has w >= 5".into());
        }
    }
    if let Some(a) = p.compress_a {
        let w = w as i64;
        let lo = w + 1;
        let hi = w * w - w - 2;
        if w < 5 || !((lo..=hi).contains(&a) || (-hi - 1..=-lo - 1).contains(&a)) {
            return bad(format!(
                "compressing integer a = {a} is out of range for winding {w}"
            ));
        }
        if p.solid_torus_surgery == Some(false) {
            return bad(
                "compressing integer declared for a pattern without solid torus surgery".into(),
            );
        }
    }
    let closure = match &p.closure {
        Some(c) => Some(Box::new(validate(c)?)),
        None => None,
    };
    if let (Some(c), Some((m, n))) = (closure.as_deref(), p.cable_params) {
        let fits = match c {
            KnotExpr::Unknot => n.abs() == 1,
            KnotExpr::Torus { .. } => validate(&KnotExpr::torus(m, n)).ok().as_ref() == Some(c),
            KnotExpr::Cable { m: cm, n: cn, .. } => (*cm, *cn) == (m, n),
            _ => false,
        };
        if !fits {
            return bad(format!(
                "closure of a C({m},{n}) cabled pattern must be that cable of a knot"
            ));
        }
    }
    if let (Some((m, n)), Some(g)) = (p.cable_params, p.closure_genus) {
        let torus_genus = (m.unsigned_abs() - 1) * (n.unsigned_abs() - 1) / 2;
        let fits = if w == m as u64 {
            g == torus_genus
        } else {
            g >= torus_genus && (g - torus_genus) % m as u64 == 0
        };
        if !fits {
            return bad(format!(
                "closure genus {g} is impossible for a C({m},{n}) cabled pattern"
            ));
        }
    }
    if let (Some(c), Some(g)) = (closure.as_deref(), p.closure_genus) {
        if let Some(actual) = genus(c) {
            if actual != g {
                return bad(format!("closure genus {g} disagrees with closure {actual}"));
            }
        }
    }
    let out = PatternAttrs {
        closure,
        cabled,
        ..p.clone()
    };
    if p.positive_lspace == Some(true) {
        if w < 2 {
            return bad("a satellite L-space knot has winding number at least 2".into());
        }
        if p.braided == Some(false) {
            return bad("the pattern of a satellite L-space knot is braided".into());
        }
        if let Some((m, n)) = p.cable_params {
            if n <= m {
                return bad(format!(
                    "a cabled positive L-space knot needs n > m, not ({m},{n})"
                ));
            }
            // the cabled knot has genus at least (w/m)·g0
            if let Some(g0) = genus(companion) {
                let inner = (w / m as u64) as i128 * g0 as i128;
                if (n as i128) < (m as i128) * (2 * inner - 1) {
                    return bad(format!(
                        "C({m},{n}) of a knot of genus at least {inner} is not an L-space knot"
                    ));
                }
            }
        }
        if !positive_lspace(companion).is_yes() {
            return bad("the companion of a positive satellite L-space knot must be a positive L-space knot".into());
        }
        if let (Some(c), Some(g0)) = (out.closure_genus(), genus(companion)) {
            let (c, g0, w) = (c as i128, g0 as i128, w as i128);
            if 2 * c - 1 <= w * (w - 1) * (2 * g0 - 1) - w {
                return bad(format!(
                    "closure genus {c} is too small for a positive satellite L-space knot"
                ));
            }
        }
    }
    Ok(out)
}

/// The slopes `{±1, ±2, ±1/2, ±2/3}`, outside which every small-`p` surgery on
/// a hyperbolic knot is LO.
pub fn small_p_candidates() -> [Slope; 8] {
    let s = |p, q| Slope::new(p, q).expect("reduced");
    [
        s(1, 1),
        s(2, 1),
        s(1, 2),
        s(2, 3),
        s(-1, 1),
        s(-2, 1),
        s(-1, 2),
        s(-2, 3),
    ]
}

/// Whether a set of non-LO slopes with `|p| <= 2` lies in `{ε/2, 2ε/3, ε, 2ε}`
/// for a single sign `ε`.
pub fn fits_exceptional_shape(not_lo: &[Slope]) -> bool {
    [1i64, -1].iter().any(|&e| {
        let allowed = [(e, 2), (2 * e, 3), (e, 1), (2 * e, 1)];
        not_lo.iter().all(|s| allowed.contains(&(s.p(), s.q())))
    })
}

/// Seifert genus, when every input it depends on is known.
pub fn genus(expr: &KnotExpr) -> Option<u64> {
    match expr {
        KnotExpr::Unknot => Some(0),
        KnotExpr::Torus { m, n } => Some((m.unsigned_abs() - 1) * (n.unsigned_abs() - 1) / 2),
        KnotExpr::Hyp { attrs, .. } => attrs.genus,
        KnotExpr::Cable { m, n, companion } => {
            let g0 = genus(companion)?;
            let m = *m as u64;
            Some((m - 1) * (n.unsigned_abs() - 1) / 2 + m * g0)
        }
        KnotExpr::Satellite { pattern, companion } => {
            Some(pattern.closure_genus()? + pattern.winding * genus(companion)?)
        }
        KnotExpr::Sum(s) => s.iter().map(genus).sum(),
    }
}

/// The slope `mn` of the unique cabling annulus, when the knot is a cable.
pub fn cabling_slope(expr: &KnotExpr) -> Option<Slope> {
    match expr {
        KnotExpr::Cable { m, n, .. } => Some(Slope::integer(m * n)),
        KnotExpr::Satellite { pattern, .. } => {
            pattern.cable_params.map(|(m, n)| Slope::integer(m * n))
        }
        _ => None,
    }
}

/// True when `r` is certainly not a cabling slope of the outermost companion
/// torus, i.e. when `K` is not a cable with cabling slope `r`.
pub fn not_cabling(expr: &KnotExpr, r: Slope) -> bool {
    match expr {
        KnotExpr::Cable { m, n, .. } => r != Slope::integer(m * n),
        KnotExpr::Satellite { pattern, .. } => {
            if let Some((m, n)) = pattern.cable_params {
                return r != Slope::integer(m * n);
            }
            if pattern.is_uncabled() || pattern.winding == 1 {
                return true;
            }
            let Some(r) = r.as_integer() else {
                return true;
            };
            let w = pattern.winding as i64;
            if w != 0 && (r as i128).abs() == (w as i128) * (w as i128) {
                return true;
            }
            // C(m,n) with m | w has cabling slope mn, gcd(m, n) = 1.
            let divisors = (2..=r.unsigned_abs()).filter(|m| r.unsigned_abs() % m == 0);
            !divisors.into_iter().any(|m| {
                let m = m as i64;
                (w == 0 || w % m == 0) && m.gcd(&(r / m)) == 1
            })
        }
        _ => true,
    }
}

/// Whether the outermost companion torus stays incompressible in `K(r)`.
///
/// A non-meridional compressing slope exists only when the pattern is the
/// cable pattern itself (slopes within distance 1 of the cabling slope) or a
/// 1-bridge braid with `w >= 5` (two consecutive integers `a, a+1` with
/// `w+1 <= |a|` and `|a+1| <= w²-w-1`).
pub fn companion_torus_incompressible(expr: &KnotExpr, r: Slope) -> Tri {
    if r.is_meridian() {
        return Tri::No;
    }
    let (p, q) = (r.p() as i128, r.q() as i128);
    match expr {
        KnotExpr::Cable { m, n, .. } => Tri::from_bool(r.distance(&Slope::integer(m * n)) >= 2),
        KnotExpr::Sum(_) => Tri::Yes,
        KnotExpr::Satellite { pattern, .. } => {
            let w = pattern.winding as i128;
            let cable_possible = match pattern.cable_params {
                Some((m, n)) if m as i128 == w => r.distance(&Slope::integer(m * n)) <= 1,
                Some(_) => false,
                None if pattern.is_uncabled() || w < 2 => false,
                None => {
                    // n coprime to w with |p - q w n| <= 1
                    let base = Integer::div_floor(&p, &(q * w));
                    (base - 1..=base + 2).any(|n| n.gcd(&w) == 1 && (p - q * w * n).abs() <= 1)
                }
            };
            let braid_possible = match pattern.compress_a {
                Some(a) => q == 1 && (p == a as i128 || p == a as i128 + 1),
                None => {
                    pattern.braided != Some(false)
                        && pattern.solid_torus_surgery != Some(false)
                        && w >= 5
                        && q == 1
                        && (w + 1..=w * w - w - 1).contains(&p.abs())
                }
            };
            if cable_possible || braid_possible {
                Tri::Unknown
            } else {
                Tri::Yes
            }
        }
        _ => Tri::Unknown,
    }
}

/// Whether the JSJ graph of the exterior is an interval rooted at an endpoint.
pub fn jsj_is_rooted_interval(expr: &KnotExpr) -> Tri {
    fn chain(expr: &KnotExpr) -> Tri {
        match expr {
            KnotExpr::Torus { .. } | KnotExpr::Hyp { .. } => Tri::Yes,
            KnotExpr::Cable { companion, .. } => chain(companion),
            KnotExpr::Satellite { pattern, companion } => {
                let here = if pattern.atoroidal == Some(true) {
                    Tri::Yes
                } else {
                    Tri::Unknown
                };
                here.and(chain(companion))
            }
            KnotExpr::Unknot | KnotExpr::Sum(_) => Tri::Unknown,
        }
    }
    if expr.contains_sum() {
        return Tri::No;
    }
    chain(expr)
}

/// Mirror image; an involution on validated expressions.
pub fn mirror(expr: &KnotExpr) -> KnotExpr {
    match expr {
        KnotExpr::Unknot => KnotExpr::Unknot,
        KnotExpr::Torus { m, n } => KnotExpr::Torus { m: *m, n: -n },
        KnotExpr::Hyp { attrs, name } => {
            let mut attrs = attrs.clone();
            attrs.fdtc = attrs.fdtc.flip();
            if let Some(d) = attrs.degeneracy_locus.as_mut() {
                d.b = -d.b;
            }
            let flip = |v: &mut Vec<Slope>| {
                *v = v.iter().map(Slope::negate).collect();
                v.sort();
            };
            flip(&mut attrs.known_lo);
            flip(&mut attrs.known_not_lo);
            // The mirror of a positive L-space knot is a negative one.
            if attrs.positive_lspace == Some(true) {
                attrs.positive_lspace = None;
            }
            KnotExpr::Hyp {
                attrs,
                name: name.clone(),
            }
        }
        KnotExpr::Cable { m, n, companion } => KnotExpr::cable(*m, -n, mirror(companion)),
        KnotExpr::Satellite { pattern, companion } => {
            let mut pattern = pattern.clone();
            pattern.cable_params = pattern.cable_params.map(|(m, n)| (m, -n));
            pattern.compress_a = pattern.compress_a.map(|a| -a - 1);
            pattern.closure = pattern.closure.map(|c| Box::new(mirror(&c)));
            if pattern.positive_lspace == Some(true) {
                pattern.positive_lspace = None;
            }
            KnotExpr::satellite(pattern, mirror(companion))
        }
        KnotExpr::Sum(s) => {
            let mut v: Vec<_> = s.iter().map(mirror).collect();
            v.sort();
            KnotExpr::Sum(v)
        }
    }
}

/// Product of the winding numbers of the outermost `depth` companion tori.
pub fn total_winding(expr: &KnotExpr, depth: usize) -> Result<u64, KnotError> {
    let mut product = 1u64;
    let mut node = expr;
    for level in 0..depth {
        let w = node.root_winding().ok_or(KnotError::DepthExceeded {
            depth,
            chain: level,
        })?;
        product *= w;
        match node.companion() {
            Some(c) => node = c,
            None if level + 1 == depth => {}
            None => {
                return Err(KnotError::DepthExceeded {
                    depth,
                    chain: level + 1,
                });
            }
        }
    }
    Ok(product)
}

/// Whether the knot is a positive L-space knot (has a positive L-space surgery).
pub fn positive_lspace(expr: &KnotExpr) -> Tri {
    match expr {
        KnotExpr::Unknot => Tri::No,
        KnotExpr::Torus { n, .. } => Tri::from_bool(*n > 0),
        KnotExpr::Hyp { attrs, .. } => Tri::from_option(attrs.positive_lspace),
        KnotExpr::Cable { m, n, companion } => {
            // Cabling criterion: C(m,n)(K0) is a positive L-space knot iff K0 is
            // one and n/m > 2 g(K0) - 1.
            if !positive_lspace(companion).is_yes() {
                return Tri::Unknown;
            }
            match genus(companion) {
                Some(g0) => Tri::from_bool((*n as i128) > (*m as i128) * (2 * g0 as i128 - 1)),
                None if *n < 0 => Tri::No,
                None => Tri::Unknown,
            }
        }
        KnotExpr::Satellite { pattern, companion } => {
            if pattern.winding < 2 || companion.contains_sum() {
                return Tri::No;
            }
            match pattern.positive_lspace {
                Some(true) => Tri::Yes,
                _ => Tri::Unknown,
            }
        }
        KnotExpr::Sum(_) => Tri::No,
    }
}

/// Whether the mirror image is a positive L-space knot.
pub fn negative_lspace(expr: &KnotExpr) -> Tri {
    positive_lspace(&mirror(expr))
}

pub fn fibred(expr: &KnotExpr) -> Tri {
    match expr {
        KnotExpr::Unknot => Tri::Yes,
        KnotExpr::Torus { .. } => Tri::Yes,
        KnotExpr::Hyp { attrs, .. } => attrs.is_fibred(),
        KnotExpr::Sum(s) => s.iter().fold(Tri::Yes, |acc, k| acc.and(fibred(k))),
        _ => {
            if positive_lspace(expr).is_yes() || negative_lspace(expr).is_yes() {
                Tri::Yes
            } else {
                Tri::Unknown
            }
        }
    }
}

/// FDTC sign of a fibred knot, when both fibredness and the sign are known.
pub fn fdtc_sign(expr: &KnotExpr) -> FdtcSign {
    match expr {
        KnotExpr::Torus { n, .. } => {
            if *n > 0 {
                FdtcSign::Positive
            } else {
                FdtcSign::Negative
            }
        }
        KnotExpr::Hyp { attrs, .. } => {
            if attrs.positive_lspace == Some(true) {
                FdtcSign::Positive
            } else {
                attrs.fdtc
            }
        }
        KnotExpr::Cable { .. } | KnotExpr::Satellite { .. } => {
            if positive_lspace(expr).is_yes() {
                FdtcSign::Positive
            } else if negative_lspace(expr).is_yes() {
                FdtcSign::Negative
            } else {
                FdtcSign::Unknown
            }
        }
        KnotExpr::Unknot | KnotExpr::Sum(_) => FdtcSign::Unknown,
    }
}

pub fn persistently_foliar(expr: &KnotExpr) -> bool {
    matches!(expr, KnotExpr::Hyp { attrs, .. } if attrs.persistently_foliar == Some(true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(m: i64, n: i64) -> KnotExpr {
        KnotExpr::torus(m, n)
    }

    fn hyp() -> KnotExpr {
        KnotExpr::hyp(HypAttrs::default())
    }

    #[test]
    fn torus_validation() {
        assert_eq!(validate(&t(2, 3)).unwrap(), t(2, 3));
        assert_eq!(validate(&t(3, 2)).unwrap(), t(2, 3));
        assert_eq!(validate(&t(-3, 2)).unwrap(), t(2, -3));
        assert_eq!(validate(&t(-2, -3)).unwrap(), t(2, 3));
        assert!(matches!(
            validate(&t(1, 5)),
            Err(KnotError::InvalidTorusParams(_))
        ));
        assert!(matches!(
            validate(&t(4, 6)),
            Err(KnotError::InvalidTorusParams(_))
        ));
    }

    #[test]
    fn cable_validation() {
        assert!(matches!(
            validate(&KnotExpr::cable(2, 1, KnotExpr::Unknot)),
            Err(KnotError::TrivialCompanion(_))
        ));
        assert!(matches!(
            validate(&KnotExpr::cable(2, 4, t(2, 3))),
            Err(KnotError::InvalidCableParams(_))
        ));
        assert!(matches!(
            validate(&KnotExpr::cable(1, 4, t(2, 3))),
            Err(KnotError::InvalidCableParams(_))
        ));
    }

    #[test]
    fn small_braid_with_solid_torus_surgery_is_rejected() {
        let pattern = PatternAttrs {
            winding: 3,
            one_bridge_braid: Some(OneBridgeBraid { w: 3, b: 1, t: 1 }),
            solid_torus_surgery: Some(true),
            ..Default::default()
        };
        assert!(matches!(
            validate(&KnotExpr::satellite(pattern, hyp())),
            Err(KnotError::InconsistentAttrs(_))
        ));
    }

    #[test]
    fn braid_triple_must_match_winding() {
        let pattern = PatternAttrs {
            winding: 5,
            one_bridge_braid: Some(OneBridgeBraid { w: 4, b: 1, t: 1 }),
            ..Default::default()
        };
        assert!(matches!(
            validate(&KnotExpr::satellite(pattern, hyp())),
            Err(KnotError::MalformedPattern(_))
        ));
    }

    #[test]
    fn sums_flatten_and_sort() {
        let e = KnotExpr::sum(vec![t(2, 5), KnotExpr::sum(vec![t(3, 2), hyp()])]);
        let v = validate(&e).unwrap();
        let KnotExpr::Sum(s) = &v else { panic!() };
        assert_eq!(s.len(), 3);
        assert!(s.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(validate(&v).unwrap(), v);
        assert!(validate(&KnotExpr::sum(vec![t(2, 3), KnotExpr::Unknot])).is_err());
        assert!(validate(&KnotExpr::sum(vec![t(2, 3)])).is_err());
    }

    #[test]
    fn genera() {
        for n in (3..=21).step_by(2) {
            let k = KnotExpr::cable(2, n, t(2, 3));
            assert_eq!(genus(&k), Some(((n + 3) / 2) as u64));
        }
        assert_eq!(genus(&KnotExpr::Unknot), Some(0));
        assert_eq!(genus(&t(3, 5)), Some(4));
        assert_eq!(genus(&hyp()), None);
        assert_eq!(genus(&KnotExpr::sum(vec![t(2, 3), t(3, 5)])), Some(5));
    }

    #[test]
    fn cabling_slopes() {
        assert_eq!(
            cabling_slope(&KnotExpr::cable(2, 7, t(2, 3))),
            Some(Slope::integer(14))
        );
        assert_eq!(cabling_slope(&t(2, 3)), None);
        assert_eq!(
            cabling_slope(&KnotExpr::satellite(PatternAttrs::with_winding(1), hyp())),
            None
        );
    }

    #[test]
    fn rooted_intervals() {
        assert_eq!(
            jsj_is_rooted_interval(&KnotExpr::sum(vec![t(2, 3), t(2, 5)])),
            Tri::No
        );
        assert_eq!(
            jsj_is_rooted_interval(&KnotExpr::cable(2, 3, t(2, 5))),
            Tri::Yes
        );
        assert_eq!(
            jsj_is_rooted_interval(&KnotExpr::satellite(PatternAttrs::with_winding(2), hyp())),
            Tri::Unknown
        );
        let declared = PatternAttrs {
            atoroidal: Some(true),
            ..PatternAttrs::with_winding(2)
        };
        assert_eq!(
            jsj_is_rooted_interval(&KnotExpr::satellite(declared, hyp())),
            Tri::Yes
        );
        assert_eq!(
            jsj_is_rooted_interval(&KnotExpr::cable(2, 1, KnotExpr::sum(vec![t(2, 3), hyp()]))),
            Tri::No
        );
    }

    #[test]
    fn mirrors() {
        assert_eq!(mirror(&t(2, 3)), t(2, -3));
        let h = KnotExpr::hyp(HypAttrs {
            degeneracy_locus: Some(DegeneracyLocus {
                form: LocusForm::Mu,
                b: -2,
            }),
            fdtc: FdtcSign::Negative,
            fibred: Some(true),
            ..Default::default()
        });
        let KnotExpr::Hyp { attrs, .. } = mirror(&h) else {
            panic!()
        };
        assert_eq!(attrs.degeneracy_locus.unwrap().b, 2);
        assert_eq!(attrs.fdtc, FdtcSign::Positive);
        let k = KnotExpr::cable(2, 7, KnotExpr::sum(vec![t(2, 3), h]));
        assert_eq!(mirror(&mirror(&k)), k);
    }

    #[test]
    fn winding_products() {
        let k = KnotExpr::satellite(
            PatternAttrs::with_winding(3),
            KnotExpr::cable(2, 5, t(2, 3)),
        );
        assert_eq!(total_winding(&k, 0).unwrap(), 1);
        assert_eq!(total_winding(&k, 1).unwrap(), 3);
        assert_eq!(total_winding(&k, 2).unwrap(), 6);
        assert!(matches!(
            total_winding(&k, 3),
            Err(KnotError::DepthExceeded { .. })
        ));
        assert_eq!(
            total_winding(&KnotExpr::cable(2, 3, t(2, 5)), 1).unwrap(),
            2
        );
    }

    #[test]
    fn positive_lspace_cables() {
        assert_eq!(positive_lspace(&KnotExpr::cable(2, 3, t(2, 3))), Tri::Yes);
        assert_eq!(positive_lspace(&KnotExpr::cable(2, 1, t(2, 3))), Tri::No);
        assert_eq!(positive_lspace(&KnotExpr::cable(2, 7, t(2, 5))), Tri::Yes);
        assert_eq!(positive_lspace(&KnotExpr::cable(2, 5, t(2, 5))), Tri::No);
        assert_eq!(negative_lspace(&KnotExpr::cable(2, -3, t(2, -3))), Tri::Yes);
    }

    #[test]
    fn positive_lspace_declarations_are_checked() {
        let over_torus = |w, cg| PatternAttrs {
            positive_lspace: Some(true),
            closure_genus: Some(cg),
            ..PatternAttrs::with_winding(w)
        };
        assert!(validate(&KnotExpr::satellite(over_torus(2, 1), t(2, 3))).is_ok());
        assert!(validate(&KnotExpr::satellite(over_torus(1, 1), t(2, 3))).is_err());
        // 2c - 1 > w(w-1)(2g0-1) - w = 6 - 3 = 3 needs c >= 3
        assert!(validate(&KnotExpr::satellite(over_torus(3, 2), t(2, 3))).is_err());
        assert!(validate(&KnotExpr::satellite(over_torus(3, 3), t(2, 3))).is_ok());
        assert!(validate(&KnotExpr::satellite(over_torus(2, 1), t(2, -3))).is_err());
        assert!(validate(&KnotExpr::satellite(over_torus(2, 1), hyp())).is_err());
    }

    #[test]
    fn cabled_pattern_genus_and_lspace_bounds() {
        let cabled = |w, (m, n), cg, plsk| PatternAttrs {
            cable_params: Some((m, n)),
            closure_genus: cg,
            positive_lspace: plsk,
            ..PatternAttrs::with_winding(w)
        };
        assert!(validate(&KnotExpr::satellite(
            cabled(2, (2, 3), Some(1), None),
            hyp()
        ))
        .is_ok());
        assert!(validate(&KnotExpr::satellite(
            cabled(2, (2, 3), Some(10), None),
            hyp()
        ))
        .is_err());
        // w = 4: the closure is C(2,3) of a winding 2 closure, genus 1 + 2k
        assert!(validate(&KnotExpr::satellite(
            cabled(4, (2, 3), Some(5), None),
            hyp()
        ))
        .is_ok());
        assert!(validate(&KnotExpr::satellite(
            cabled(4, (2, 3), Some(4), None),
            hyp()
        ))
        .is_err());
        // over T(2,5): n/m must exceed 2·2 - 1
        assert!(validate(&KnotExpr::satellite(
            cabled(2, (2, 5), None, Some(true)),
            t(2, 5)
        ))
        .is_err());
        assert!(validate(&KnotExpr::satellite(
            cabled(2, (2, 7), None, Some(true)),
            t(2, 5)
        ))
        .is_ok());
    }
}
