//! Slopes detected on the boundary of a knot exterior.
//!
//! Detection facts are predicates over slopes. Infinite families are never
//! materialized; membership is decided exactly.

use std::cmp::Ordering;

use crate::knot::{self, FdtcSign, KnotExpr};
use crate::logic::Tri;
use crate::slope::Slope;

pub const LONGITUDE_DETECTED: &str = "Prop:longitude-detected";
pub const MERIDIONAL_DETECTION: &str = "Thm:meridional-detection";
pub const FDTC_INTERVAL: &str = "Prop:fdtc-interval";
pub const PERSISTENTLY_FOLIAR: &str = "Def:persistently-foliar";
pub const FILLING_DETECTED: &str = "Rem:filling-detected";
pub const CONJECTURAL_MERIDIONAL: &str = "Conj:ctf-meridional-detection";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Detectable {
    Lo,
    Nls,
    Ctf,
}

/// One end of a rational interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Infinite,
    Open(i64),
    Closed(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeSet {
    Finite(Vec<Slope>),
    /// `{1/q : q ∈ Z} ∪ {1/0}`, the slopes meeting the longitude once.
    DistanceOneFromLongitude,
    /// Rational slopes strictly between or at the bounds; never contains `1/0`.
    Interval {
        lower: Bound,
        upper: Bound,
    },
}

impl SlopeSet {
    pub fn contains(&self, s: Slope) -> bool {
        match self {
            SlopeSet::Finite(v) => v.contains(&s),
            SlopeSet::DistanceOneFromLongitude => s.distance(&Slope::LONGITUDE) == 1,
            SlopeSet::Interval { lower, upper } => {
                if s.is_meridian() {
                    return false;
                }
                let above = match lower {
                    Bound::Infinite => true,
                    Bound::Open(a) => s.cmp_integer(*a as i128) == Ordering::Greater,
                    Bound::Closed(a) => s.cmp_integer(*a as i128) != Ordering::Less,
                };
                let below = match upper {
                    Bound::Infinite => true,
                    Bound::Open(b) => s.cmp_integer(*b as i128) == Ordering::Less,
                    Bound::Closed(b) => s.cmp_integer(*b as i128) != Ordering::Greater,
                };
                above && below
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionFact {
    pub property: Detectable,
    pub slope_set: SlopeSet,
    pub provenance: &'static str,
    /// Holds only under the CTF meridional detection conjecture.
    pub conjectural: bool,
    /// The set consists of strongly CTF-detected slopes.
    pub strong: bool,
}

/// Result of a detection query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Detection {
    pub value: Tri,
    pub provenance: Option<&'static str>,
    pub conjectural: bool,
}

impl Detection {
    const UNKNOWN: Detection = Detection {
        value: Tri::Unknown,
        provenance: None,
        conjectural: false,
    };

    fn yes(fact: &DetectionFact) -> Detection {
        Detection {
            value: Tri::Yes,
            provenance: Some(fact.provenance),
            conjectural: fact.conjectural,
        }
    }
}

fn fdtc_interval(sign: FdtcSign) -> Option<SlopeSet> {
    let (lower, upper) = match sign {
        FdtcSign::Positive => (Bound::Infinite, Bound::Open(1)),
        FdtcSign::Negative => (Bound::Open(-1), Bound::Infinite),
        FdtcSign::Zero => (Bound::Infinite, Bound::Infinite),
        FdtcSign::Unknown => return None,
    };
    Some(SlopeSet::Interval { lower, upper })
}

/// Every detection fact known for the exterior of `expr`, in a fixed order.
pub fn facts(expr: &KnotExpr, assume_conjecture: bool) -> Vec<DetectionFact> {
    if expr.is_unknot() {
        return Vec::new();
    }
    let fact = |property, slope_set, provenance| DetectionFact {
        property,
        slope_set,
        provenance,
        conjectural: false,
        strong: false,
    };
    let mut out = Vec::new();
    for p in [Detectable::Lo, Detectable::Nls, Detectable::Ctf] {
        out.push(fact(
            p,
            SlopeSet::Finite(vec![Slope::LONGITUDE]),
            LONGITUDE_DETECTED,
        ));
    }
    for p in [Detectable::Lo, Detectable::Nls] {
        out.push(fact(
            p,
            SlopeSet::DistanceOneFromLongitude,
            MERIDIONAL_DETECTION,
        ));
    }
    if knot::fibred(expr).is_yes() {
        out.push(fact(
            Detectable::Ctf,
            SlopeSet::DistanceOneFromLongitude,
            MERIDIONAL_DETECTION,
        ));
    } else if assume_conjecture {
        out.push(DetectionFact {
            conjectural: true,
            ..fact(
                Detectable::Ctf,
                SlopeSet::DistanceOneFromLongitude,
                CONJECTURAL_MERIDIONAL,
            )
        });
    }
    if knot::persistently_foliar(expr) {
        out.push(DetectionFact {
            strong: true,
            ..fact(
                Detectable::Ctf,
                SlopeSet::Interval {
                    lower: Bound::Infinite,
                    upper: Bound::Infinite,
                },
                PERSISTENTLY_FOLIAR,
            )
        });
    }
    if knot::fibred(expr).is_yes() {
        if let Some(set) = fdtc_interval(knot::fdtc_sign(expr)) {
            out.push(DetectionFact {
                strong: true,
                ..fact(Detectable::Ctf, set, FDTC_INTERVAL)
            });
        }
    }
    out
}

pub fn detected(expr: &KnotExpr, s: Slope, property: Detectable) -> Detection {
    detected_with(expr, s, property, false)
}

/// As [`detected`], optionally assuming CTF detection of the meridional family
/// for non-fibred knots.
pub fn detected_with(
    expr: &KnotExpr,
    s: Slope,
    property: Detectable,
    assume_conjecture: bool,
) -> Detection {
    facts(expr, assume_conjecture)
        .iter()
        .find(|f| f.property == property && f.slope_set.contains(s))
        .map_or(Detection::UNKNOWN, Detection::yes)
}

/// As [`detected`], also using a known verdict for the filling `K(s)`:
/// an LO (resp. NLS) filling makes its slope LO- (resp. NLS-) detected.
/// The analogous implication for CTF is not known and is not used.
pub fn detected_with_filling(
    expr: &KnotExpr,
    s: Slope,
    property: Detectable,
    filling: Tri,
) -> Detection {
    let d = detected(expr, s, property);
    if d.value.is_yes() || !filling.is_yes() || property == Detectable::Ctf || s.is_meridian() {
        return d;
    }
    Detection {
        value: Tri::Yes,
        provenance: Some(FILLING_DETECTED),
        conjectural: false,
    }
}

pub fn strongly_ctf_detected(expr: &KnotExpr, s: Slope) -> Detection {
    if s.is_meridian() {
        return Detection::UNKNOWN;
    }
    facts(expr, false)
        .iter()
        .find(|f| f.strong && f.slope_set.contains(s))
        .map_or(Detection::UNKNOWN, Detection::yes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::HypAttrs;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn fibred_hyp(fdtc: FdtcSign) -> KnotExpr {
        KnotExpr::hyp(HypAttrs {
            fibred: Some(true),
            fdtc,
            ..Default::default()
        })
    }

    #[test]
    fn meridian_and_longitude() {
        let k = KnotExpr::hyp(HypAttrs::default());
        assert_eq!(
            detected(&k, Slope::MERIDIAN, Detectable::Lo).value,
            Tri::Yes
        );
        assert_eq!(
            detected(&k, Slope::MERIDIAN, Detectable::Ctf).value,
            Tri::Unknown
        );
        assert_eq!(
            detected(&k, Slope::LONGITUDE, Detectable::Ctf).value,
            Tri::Yes
        );
        assert_eq!(
            detected(&k, Slope::LONGITUDE, Detectable::Ctf).provenance,
            Some(LONGITUDE_DETECTED)
        );
        let conj = detected_with(&k, s(1, 3), Detectable::Ctf, true);
        assert!(conj.value.is_yes() && conj.conjectural);
    }

    #[test]
    fn distance_one_family() {
        let fam = SlopeSet::DistanceOneFromLongitude;
        for p in -6..=6i64 {
            for q in 1..=6i64 {
                if num_integer::Integer::gcd(&p, &q) == 1 {
                    assert_eq!(fam.contains(s(p, q)), p.abs() == 1, "{p}/{q}");
                }
            }
        }
        assert!(fam.contains(Slope::MERIDIAN));
    }

    #[test]
    fn fdtc_intervals() {
        let pos = fibred_hyp(FdtcSign::Positive);
        assert_eq!(detected(&pos, s(-7, 3), Detectable::Ctf).value, Tri::Yes);
        assert_eq!(strongly_ctf_detected(&pos, s(1, 1)).value, Tri::Unknown);
        assert_eq!(strongly_ctf_detected(&pos, s(99, 100)).value, Tri::Yes);
        let neg = fibred_hyp(FdtcSign::Negative);
        assert_eq!(strongly_ctf_detected(&neg, s(-1, 1)).value, Tri::Unknown);
        assert_eq!(strongly_ctf_detected(&neg, s(-1, 2)).value, Tri::Yes);
        let zero = fibred_hyp(FdtcSign::Zero);
        assert_eq!(strongly_ctf_detected(&zero, s(100, 1)).value, Tri::Yes);
        assert_eq!(
            strongly_ctf_detected(&zero, Slope::MERIDIAN).value,
            Tri::Unknown
        );
    }

    #[test]
    fn persistently_foliar_atoms() {
        let k = KnotExpr::hyp(HypAttrs {
            persistently_foliar: Some(true),
            ..Default::default()
        });
        assert_eq!(strongly_ctf_detected(&k, s(17, 5)).value, Tri::Yes);
        let bare = KnotExpr::hyp(HypAttrs::default());
        assert_eq!(strongly_ctf_detected(&bare, s(1, 2)).value, Tri::Unknown);
    }

    #[test]
    fn filling_verdicts_extend_lo_and_nls_only() {
        let k = KnotExpr::hyp(HypAttrs::default());
        let r = s(5, 2);
        assert_eq!(detected(&k, r, Detectable::Lo).value, Tri::Unknown);
        let d = detected_with_filling(&k, r, Detectable::Lo, Tri::Yes);
        assert_eq!((d.value, d.provenance), (Tri::Yes, Some(FILLING_DETECTED)));
        assert_eq!(
            detected_with_filling(&k, r, Detectable::Ctf, Tri::Yes).value,
            Tri::Unknown
        );
        assert_eq!(
            detected_with_filling(&k, r, Detectable::Nls, Tri::No).value,
            Tri::Unknown
        );
    }

    #[test]
    fn torus_knots_use_their_fdtc() {
        let t = KnotExpr::torus(2, 3);
        assert_eq!(strongly_ctf_detected(&t, s(1, 2)).value, Tri::Yes);
        assert_eq!(detected(&t, s(1, 5), Detectable::Ctf).value, Tri::Yes);
        assert_eq!(
            strongly_ctf_detected(&KnotExpr::torus(2, -3), s(1, 2)).value,
            Tri::Yes
        );
        assert_eq!(
            strongly_ctf_detected(&KnotExpr::torus(2, -3), s(-3, 2)).value,
            Tri::Unknown
        );
    }
}
