use super::rules::{self, Eval};

/// A rule of the forward-chaining engine.
pub struct RuleInfo {
    pub id: &'static str,
    /// Results the rule applies; the first is the default citation of its traces.
    pub citations: &'static [&'static str],
    pub summary: &'static str,
    /// Checked over a whole scan rather than fired per slope.
    pub scan_assertion: bool,
    pub(crate) eval: Eval,
}

macro_rules! rule {
    ($id:literal, [$($c:literal),+], $summary:literal, $eval:path) => {
        RuleInfo {
            id: $id,
            citations: &[$($c),+],
            summary: $summary,
            scan_assertion: false,
            eval: $eval,
        }
    };
}

pub static RULES: &[RuleInfo] = &[
    rule!(
        "R-red",
        ["Cor:cable-reducible", "Thm:torus-knot-surgery"],
        "K(r) is reducible exactly when K is a cable (or torus knot) and r is its cabling slope",
        rules::reducible
    ),
    rule!(
        "R-red-lens",
        ["Thm:cable-surgery", "Thm:torus-knot-surgery"],
        "a reducible surgery has a lens space summand: not LO, not CTF; L-space iff K0(n/m) is",
        rules::reducible_lens
    ),
    rule!(
        "R-compress",
        ["Thm:cable-surgery"],
        "cable at distance 1 from mn reduces to K0(r/m²); at distance >= 2 the companion torus survives",
        rules::cable_compression
    ),
    rule!(
        "R-compress-1bb",
        ["Thm:companion-compression"],
        "the companion torus compresses only for cable patterns or 1-bridge braids at {a, a+1}",
        rules::companion_compression
    ),
    rule!(
        "R-w0",
        ["Thm:winding-zero"],
        "winding number zero satellite at a non-cabling slope: LO and NLS",
        rules::winding_zero
    ),
    rule!(
        "R-w1",
        ["Thm:winding-one"],
        "winding number one satellite with d_FG(0, r) <= 2: LO and NLS",
        rules::winding_one
    ),
    rule!(
        "R-farey",
        ["Thm:farey-balls"],
        "j >= 2 nested winding one satellites with d_FG(0, r) <= j + 1: LO and NLS",
        rules::farey_balls
    ),
    rule!(
        "R-split",
        ["Thm:split-tori", "Cor:composite-surgery"],
        "a connected sum in the companion chain at a non-cabling slope: LO and NLS",
        rules::split
    ),
    rule!(
        "R-split-ctf",
        [
            "Thm:split-tori-ctf",
            "Cor:composite-fibred-ctf",
            "Cor:persistently-foliar-summand",
            "Conj:ctf-meridional-detection"
        ],
        "connected sums with two fibred summands or a persistently foliar summand: CTF",
        rules::split_ctf
    ),
    rule!(
        "R-pattern",
        ["Prop:pattern-closure"],
        "an LO surgery on the pattern closure gives an LO surgery on the satellite",
        rules::pattern_closure
    ),
    rule!(
        "R-companion-lo",
        ["Prop:companion-slope", "Thm:gluing"],
        "LO or NLS passes from K0(r/w²) to P(K0)(r)",
        rules::companion_lo
    ),
    rule!(
        "R-companion-ctf",
        ["Prop:companion-strong-ctf"],
        "r/w² strongly CTF-detected in the companion exterior: CTF",
        rules::companion_ctf
    ),
    rule!(
        "R-w0-ctf",
        ["Thm:winding-zero-ctf", "Conj:ctf-meridional-detection"],
        "winding number zero satellite of a fibred knot at a non-cabling slope: CTF",
        rules::winding_zero_ctf
    ),
    rule!(
        "R-fdtc",
        ["Prop:fdtc-satellite"],
        "fibred companion with FDTC sign: CTF on the matching side of ±w²",
        rules::fdtc_satellite
    ),
    rule!(
        "R-psL",
        ["Cor:satellite-lspace-ctf"],
        "positive satellite L-space knot with r <= w²: CTF",
        rules::satellite_lspace
    ),
    rule!(
        "R-psL9",
        ["Thm:satellite-lspace-nine"],
        "positive satellite L-space knot with r <= 9: CTF, except three cables of T(2,3)",
        rules::satellite_lspace_nine
    ),
    rule!(
        "R-plsk-lspace",
        ["Thm:lspace-surgery-range"],
        "positive L-space knot of genus g: K(r) is an L-space iff r >= 2g - 1",
        rules::lspace_range
    ),
    rule!(
        "R-torus",
        ["Thm:torus-knot-surgery"],
        "T(m,n), n > 0: LO, CTF and NLS iff r < mn - m - n",
        rules::torus
    ),
    rule!(
        "R-smallH",
        ["Thm:small-homology"],
        "irreducible toroidal with |H1| <= 4: LO",
        rules::small_homology
    ),
    rule!(
        "R-sat-smallp",
        ["Prop:satellite-small-p"],
        "satellite with 1 <= |p| <= 4 and q >= 2: LO, except 3ε/2 on a (2,ε)-cable of a hyperbolic knot",
        rules::satellite_small_p
    ),
    rule!(
        "R-smallp-sat",
        ["Thm:small-p-satellite"],
        "satellite with |p| <= 2: LO, except 2ε on a (2,ε)-cable",
        rules::small_p_satellite
    ),
    rule!(
        "R-psa",
        ["Thm:degeneracy-locus"],
        "hyperbolic with degeneracy locus δ and |p| <= 2: LO when |Δ(r, δ)| >= 2",
        rules::degeneracy_locus
    ),
    rule!(
        "R-smallp-hyp",
        ["Thm:small-p-hyperbolic"],
        "hyperbolic with |p| <= 2 outside {±1, ±2, ±1/2, ±2/3}: LO",
        rules::small_p_hyperbolic
    ),
    rule!(
        "R-fibred-smallp",
        [
            "Cor:fibred-small-p",
            "Cor:alternating-small-p",
            "Cor:branched-cover-small-p"
        ],
        "fibred, alternating or non-LO branched cover hyperbolic knot with |p| <= 2, q >= 2: LO",
        rules::fibred_small_p
    ),
    rule!(
        "R-strong-ctf",
        ["Def:strongly-ctf-detected"],
        "r strongly CTF-detected in the exterior of a torus or hyperbolic knot: CTF",
        rules::strong_ctf
    ),
    rule!(
        "R-declared",
        ["Decl:attribute"],
        "slopes declared LO or not LO on a hyperbolic atom",
        rules::declared
    ),
    rule!(
        "R-ctf-nls",
        ["Thm:ctf-implies-nls", "Def:l-space"],
        "CTF implies NLS; NLS is the negation of L-space",
        rules::ctf_nls
    ),
    RuleInfo {
        id: "R-E-shape",
        citations: &["Thm:small-p-exceptional-set"],
        summary: "the non-LO slopes with |p| <= 2 lie in {ε, 2ε} or {ε/2, 2ε/3, ε, 2ε}",
        scan_assertion: true,
        eval: rules::none,
    },
];

/// Every citation key a trace may carry, with the result it names.
pub static CITATIONS: &[(&str, &str)] = &[
    (
        "Cor:cable-reducible",
        "cable surgery is reducible exactly at the cabling slope",
    ),
    (
        "Thm:cable-surgery",
        "surgery on a cable at distance 0, 1 and >= 2 from the cabling slope",
    ),
    (
        "Thm:torus-knot-surgery",
        "LO, CTF, NLS and L-space surgeries on positive torus knots",
    ),
    (
        "Thm:companion-compression",
        "compressing slopes of the companion torus",
    ),
    (
        "Thm:winding-zero",
        "surgery on winding number zero satellites",
    ),
    (
        "Thm:winding-one",
        "surgery on winding number one satellites",
    ),
    (
        "Thm:farey-balls",
        "Farey balls of slopes for nested winding one satellites",
    ),
    ("Thm:split-tori", "exteriors containing split tori"),
    ("Cor:composite-surgery", "surgery on composite knots"),
    (
        "Thm:split-tori-ctf",
        "CTF surgeries when split tori bound fibred exteriors",
    ),
    (
        "Cor:composite-fibred-ctf",
        "composite knots with two fibred summands",
    ),
    (
        "Cor:persistently-foliar-summand",
        "composite knots with a persistently foliar summand",
    ),
    (
        "Conj:ctf-meridional-detection",
        "CTF detection of the meridional family (assumed)",
    ),
    ("Prop:pattern-closure", "LO surgery on the pattern closure"),
    (
        "Prop:companion-slope",
        "LO and NLS inherited from the companion at r/w²",
    ),
    (
        "Thm:gluing",
        "gluing along an incompressible torus with detected slopes",
    ),
    (
        "Prop:companion-strong-ctf",
        "CTF inherited from a strongly detected companion slope",
    ),
    (
        "Thm:winding-zero-ctf",
        "CTF surgery on winding number zero satellites of fibred knots",
    ),
    (
        "Prop:fdtc-satellite",
        "CTF surgeries on satellites of fibred knots with known FDTC sign",
    ),
    (
        "Cor:satellite-lspace-ctf",
        "CTF surgeries up to w² on satellite L-space knots",
    ),
    (
        "Thm:satellite-lspace-nine",
        "CTF surgeries up to 9 on satellite L-space knots",
    ),
    (
        "Thm:lspace-surgery-range",
        "L-space surgery slopes of a positive L-space knot",
    ),
    (
        "Thm:small-homology",
        "toroidal manifolds with small first homology",
    ),
    (
        "Prop:satellite-small-p",
        "satellite surgeries with 1 <= |p| <= 4 and q >= 2",
    ),
    ("Thm:small-p-satellite", "satellite surgeries with |p| <= 2"),
    (
        "Thm:degeneracy-locus",
        "small-p surgeries via the degeneracy locus of a pseudo-Anosov flow",
    ),
    (
        "Thm:small-p-hyperbolic",
        "small-p surgeries on hyperbolic knots",
    ),
    (
        "Cor:fibred-small-p",
        "non-integral small-p surgeries on fibred hyperbolic knots",
    ),
    (
        "Cor:alternating-small-p",
        "non-integral small-p surgeries on alternating hyperbolic knots",
    ),
    (
        "Cor:branched-cover-small-p",
        "hyperbolic knots with non-LO double branched cover",
    ),
    (
        "Def:strongly-ctf-detected",
        "strong CTF detection of a slope",
    ),
    ("Decl:attribute", "a slope declared on the knot"),
    ("Thm:ctf-implies-nls", "CTF manifolds are not L-spaces"),
    ("Def:l-space", "NLS is the negation of being an L-space"),
    (
        "Thm:small-p-exceptional-set",
        "shape of the set of non-LO small-p slopes",
    ),
];

pub fn citation_known(key: &str) -> bool {
    CITATIONS.iter().any(|(k, _)| *k == key)
}

pub fn rule(id: &str) -> Option<&'static RuleInfo> {
    RULES.iter().find(|r| r.id == id)
}
