//! Seeded generator of validated knot expressions and slopes.
//!
//! Declared LO and non-LO slope lists are only placed on a hyperbolic atom at
//! the root of an expression.

use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use surgery_core::knot::{
    self, DegeneracyLocus, FdtcSign, HypAttrs, KnotExpr, LocusForm, OneBridgeBraid, PatternAttrs,
};
use surgery_core::slope::Slope;

pub struct Gen {
    rng: StdRng,
    names: u32,
}

impl Gen {
    pub fn new(seed: u64) -> Gen {
        Gen {
            rng: StdRng::seed_from_u64(seed),
            names: 0,
        }
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    fn maybe_bool(&mut self, p: f64) -> Option<bool> {
        self.chance(p).then(|| self.chance(0.5))
    }

    fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.rng.random_range(0..items.len())]
    }

    /// A reduced `p/q` with `|p| <= bound`, `1 <= q <= bound`.
    pub fn slope(&mut self, bound: i64) -> Slope {
        loop {
            let p = self.rng.random_range(-bound..=bound);
            let q = self.rng.random_range(1..=bound);
            if p.gcd(&q) == 1 {
                return Slope::new(p, q).unwrap();
            }
        }
    }

    /// A slope drawn mostly from the small values the rules care about.
    pub fn interesting_slope(&mut self) -> Slope {
        match self.rng.random_range(0..4) {
            0 => Slope::integer(self.rng.random_range(-30..=30)),
            1 => self.pick(&knot::small_p_candidates()),
            2 => self.slope(12),
            _ => self.slope(200),
        }
    }

    fn torus(&mut self) -> KnotExpr {
        loop {
            let m = self.rng.random_range(2..=5i64);
            let n = self.rng.random_range(2..=13i64);
            if m.gcd(&n) == 1 && m != n {
                let sign = if self.chance(0.5) { 1 } else { -1 };
                return KnotExpr::torus(m, sign * n);
            }
        }
    }

    fn hyp(&mut self, root: bool) -> KnotExpr {
        let mut a = HypAttrs {
            genus: self.chance(0.5).then(|| self.rng.random_range(1..=6)),
            fibred: self.maybe_bool(0.6),
            alternating: self.maybe_bool(0.2),
            persistently_foliar: self.chance(0.1).then_some(true),
            branched_cover_not_lo: self.maybe_bool(0.15),
            ..Default::default()
        };
        if a.fibred != Some(false) && self.chance(0.6) {
            a.fdtc = self.pick(&[FdtcSign::Positive, FdtcSign::Negative, FdtcSign::Zero]);
        }
        if a.fibred != Some(false)
            && matches!(a.fdtc, FdtcSign::Positive | FdtcSign::Unknown)
            && a.persistently_foliar.is_none()
            && self.chance(0.2)
        {
            a.positive_lspace = Some(true);
            a.genus = Some(self.rng.random_range(3..=7));
        }
        if self.chance(0.35) {
            let form = self.pick(&[LocusForm::Mu, LocusForm::MuPlusLambda]);
            let b = self.pick(&[-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6]);
            a.degeneracy_locus = Some(DegeneracyLocus { form, b });
        }
        let name = if self.chance(0.2) {
            self.names += 1;
            Some(format!("K{}", self.names))
        } else {
            None
        };
        let plain = KnotExpr::Hyp {
            attrs: a.clone(),
            name: name.clone(),
        };
        if !root || !self.chance(0.4) {
            return plain;
        }
        let lo = (0..self.rng.random_range(0..3))
            .map(|_| self.interesting_slope())
            .collect();
        let nlo = (0..self.rng.random_range(0..3))
            .map(|_| self.interesting_slope())
            .collect();
        let declared = KnotExpr::Hyp {
            attrs: HypAttrs {
                known_lo: lo,
                known_not_lo: nlo,
                ..a
            },
            name,
        };
        if knot::validate(&declared).is_ok() {
            declared
        } else {
            plain
        }
    }

    fn atom(&mut self, root: bool) -> KnotExpr {
        if self.chance(0.5) {
            self.torus()
        } else {
            self.hyp(root)
        }
    }

    fn cable_pair(&mut self, m: i64) -> (i64, i64) {
        loop {
            let n = self.rng.random_range(-13..=13i64);
            if n != 0 && m.gcd(&n) == 1 {
                return (m, n);
            }
        }
    }

    fn pattern(&mut self, companion: &KnotExpr, depth: usize) -> PatternAttrs {
        let w = self.pick(&[0u64, 1, 1, 1, 2, 2, 3, 4, 5, 6, 7]);
        let mut p = PatternAttrs::with_winding(w);
        if w >= 1 {
            p.braided = self.maybe_bool(0.2);
        }
        if w >= 3 && self.chance(0.15) {
            let b = self.rng.random_range(1..=w - 2);
            let t = self.rng.random_range(1..=w - 2);
            p.one_bridge_braid = Some(OneBridgeBraid { w, b, t });
            p.braided = Some(true);
            p.cabled = Some(false);
            if w >= 5 && self.chance(0.5) {
                let w = w as i64;
                let a = self.rng.random_range(w + 1..=w * w - w - 2);
                p.compress_a = Some(if self.chance(0.5) { a } else { -a - 1 });
            }
        } else if w >= 2 && self.chance(0.3) {
            let divisors: Vec<i64> = (2..=w as i64).filter(|m| w as i64 % m == 0).collect();
            let m = self.pick(&divisors);
            p.cable_params = Some(self.cable_pair(m));
        } else if w >= 2 {
            p.cabled = self.maybe_bool(0.3);
        }
        p.solid_torus_surgery = self.chance(0.1).then_some(false);
        p.atoroidal = self.maybe_bool(0.2);
        if depth > 1 && p.cable_params.is_none() && self.chance(0.25) {
            let c = if self.chance(0.3) {
                KnotExpr::Unknot
            } else {
                self.knot_at(depth - 1, false)
            };
            p.closure_genus = knot::genus(&c);
            p.closure = Some(Box::new(c));
        } else if self.chance(0.2) {
            p.closure_genus = Some(self.rng.random_range(0..=5));
        }
        if w >= 2
            && p.braided != Some(false)
            && knot::positive_lspace(companion).is_yes()
            && self.chance(0.5)
        {
            p.positive_lspace = Some(true);
            if p.closure.is_none() {
                if let Some(g0) = knot::genus(companion) {
                    let (wi, g0) = (w as i64, g0 as i64);
                    let min = (wi * (wi - 1) * (2 * g0 - 1) - wi + 2) / 2 + 1;
                    p.closure_genus = Some((min.max(0) + self.rng.random_range(0..3)) as u64);
                }
            }
            if let Some((m, n)) = p.cable_params {
                let inner = (w as i64 / m) * knot::genus(companion).unwrap_or(0) as i64;
                let mut n = n.max(m + 1).max(m * (2 * inner - 1) + 1);
                while n.gcd(&m) != 1 {
                    n += 1;
                }
                p.cable_params = Some((m, n));
                p.closure_genus = (w as i64 == m).then(|| ((m - 1) * (n - 1) / 2) as u64);
            }
        }
        p
    }

    fn knot_at(&mut self, depth: usize, root: bool) -> KnotExpr {
        if depth <= 1 {
            return self.atom(root);
        }
        let raw = match self.rng.random_range(0..20) {
            0..=5 => self.atom(root),
            6..=10 => {
                let c = self.knot_at(depth - 1, false);
                let m = self.rng.random_range(2..=4);
                let (m, n) = self.cable_pair(m);
                KnotExpr::cable(m, n, c)
            }
            11..=16 => {
                let c = self.knot_at(depth - 1, false);
                let p = self.pattern(&c, depth);
                KnotExpr::satellite(p, c)
            }
            _ => self.sum(depth),
        };
        match knot::validate(&raw) {
            Ok(k) => k,
            Err(_) => self.knot_at(depth, root),
        }
    }

    fn sum(&mut self, depth: usize) -> KnotExpr {
        let count = self.rng.random_range(2..=3);
        KnotExpr::sum((0..count).map(|_| self.knot_at(depth - 1, false)).collect())
    }

    /// A validated expression of height at most `depth`.
    pub fn knot(&mut self, depth: usize) -> KnotExpr {
        knot::validate(&self.knot_at(depth, true)).unwrap()
    }

    /// A validated connected sum of height at most `depth`.
    pub fn composite(&mut self, depth: usize) -> KnotExpr {
        knot::validate(&self.sum(depth.max(2))).unwrap()
    }

    /// A copy of a validated expression with some optional attributes removed.
    pub fn weaken(&mut self, k: &KnotExpr) -> KnotExpr {
        match k {
            KnotExpr::Hyp { attrs, name } => {
                let mut a = attrs.clone();
                if self.chance(0.3) {
                    a.genus = None;
                }
                if self.chance(0.3) {
                    a.fibred = None;
                }
                if self.chance(0.3) {
                    a.fdtc = FdtcSign::Unknown;
                }
                if self.chance(0.3) {
                    a.positive_lspace = None;
                }
                if self.chance(0.3) {
                    a.degeneracy_locus = None;
                }
                if self.chance(0.3) {
                    a.persistently_foliar = None;
                }
                if self.chance(0.3) {
                    a.alternating = None;
                }
                if self.chance(0.3) {
                    a.branched_cover_not_lo = None;
                }
                if self.chance(0.3) {
                    a.known_lo.clear();
                }
                if self.chance(0.3) {
                    a.known_not_lo.clear();
                }
                KnotExpr::Hyp {
                    attrs: a,
                    name: name.clone(),
                }
            }
            KnotExpr::Cable { m, n, companion } => KnotExpr::cable(*m, *n, self.weaken(companion)),
            KnotExpr::Satellite { pattern, companion } => {
                let mut p = pattern.clone();
                if self.chance(0.3) {
                    p.braided = None;
                }
                if self.chance(0.3) {
                    p.one_bridge_braid = None;
                    p.compress_a = None;
                }
                if self.chance(0.3) {
                    p.cable_params = None;
                    p.cabled = None;
                }
                if self.chance(0.3) {
                    p.atoroidal = None;
                }
                if self.chance(0.3) {
                    p.positive_lspace = None;
                }
                if self.chance(0.3) {
                    p.closure = None;
                    p.closure_genus = None;
                }
                if self.chance(0.3) {
                    p.solid_torus_surgery = None;
                }
                KnotExpr::satellite(p, self.weaken(companion))
            }
            KnotExpr::Sum(s) => KnotExpr::sum(s.iter().map(|x| self.weaken(x)).collect()),
            other => other.clone(),
        }
    }
}
