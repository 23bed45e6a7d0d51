//! Farey graph metric.
//!
//! Vertices are the slopes `Q ∪ {1/0}`; two slopes are joined by an edge when
//! their distance is 1. Distances are computed by moving one endpoint to
//! `1/0` with an element of `SL(2, Z)` and walking the continued-fraction
//! ladder of the other endpoint.

use num_integer::Integer;

use crate::slope::Slope;

pub fn adjacent(a: Slope, b: Slope) -> bool {
    a.distance(&b) == 1
}

/// Length of a shortest edge path between `a` and `b` in the Farey graph.
pub fn fg_distance(a: Slope, b: Slope) -> u32 {
    if a == b {
        return 0;
    }
    let (p, q) = (a.p() as i128, a.q() as i128);
    // p*s - q*r = 1
    let e = p.extended_gcd(&q);
    let sign = if e.gcd < 0 { -1 } else { 1 };
    let (s, r) = (e.x * sign, -e.y * sign);
    debug_assert_eq!(p * s - q * r, 1);

    let (x, y) = (b.p() as i128, b.q() as i128);
    let (x, y) = (s * x - r * y, -q * x + p * y);
    distance_from_infinity(x, y)
}

/// Farey distance from `1/0` to the rational `x/y` (`y != 0`).
fn distance_from_infinity(mut x: i128, mut y: i128) -> u32 {
    if y == 0 {
        return 0;
    }
    if y < 0 {
        x = -x;
        y = -y;
    }
    // Partial quotients of the regular continued fraction, first one by floor.
    let mut quotients = Vec::new();
    let (mut num, mut den) = (x, y);
    while den != 0 {
        let (a, rem) = num.div_mod_floor(&den);
        quotients.push(a);
        num = den;
        den = rem;
    }

    // Ladder vertices are the convergents c_{-1} = 1/0, c_0, ..., c_n.
    // Consecutive convergents are adjacent; c_{k-2} and c_k are adjacent
    // exactly when the k-th quotient is 1.
    let mut before = 0u32; // c_{k-2}
    let mut last = 1u32; // c_{k-1}
    for &a in &quotients[1..] {
        let mut next = last + 1;
        if a == 1 {
            next = next.min(before + 1);
        }
        before = last;
        last = next;
    }
    last
}

pub fn ball_membership(r: Slope, k: u32) -> bool {
    fg_distance(Slope::LONGITUDE, r) <= k
}

/// A ball in the Farey graph, enumerated inside a finite window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FareyBallQuery {
    pub center: Slope,
    pub radius: u32,
    /// Bounds both `q` and `|p|` of enumerated slopes.
    pub denominator_bound: u64,
}

impl FareyBallQuery {
    pub fn around_zero(radius: u32, denominator_bound: u64) -> Self {
        FareyBallQuery {
            center: Slope::LONGITUDE,
            radius,
            denominator_bound,
        }
    }

    /// Members of the ball with `1 <= q <= bound` and `|p| <= bound`, plus
    /// `1/0` when it lies in the ball; sorted by value with `1/0` last.
    pub fn enumerate(&self) -> Vec<Slope> {
        let bound = self.denominator_bound.min(i64::MAX as u64) as i64;
        let mut out = Vec::new();
        for q in 1..=bound {
            for p in -bound..=bound {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let r = Slope::new(p, q).expect("coprime pair");
                if fg_distance(self.center, r) <= self.radius {
                    out.push(r);
                }
            }
        }
        if fg_distance(self.center, Slope::MERIDIAN) <= self.radius {
            out.push(Slope::MERIDIAN);
        }
        out.sort();
        out
    }
}

pub fn ball_enumerate(k: u32, denominator_bound: u64) -> Vec<Slope> {
    FareyBallQuery::around_zero(k, denominator_bound).enumerate()
}
