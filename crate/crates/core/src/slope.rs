//! Slopes on a torus and the slope arithmetic of satellite knots.
//!
//! A slope is stored as a reduced pair `p/q` with `q > 0`, except for the
//! meridian which is stored as `1/0`. Products are formed in `i128` and
//! every narrowing back to `i64` is checked, so overflow surfaces as an
//! error instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("(0,0) does not determine a slope")]
    ZeroPair,
    #[error("the meridian 1/0 is not a valid input here")]
    MeridianInput,
    #[error("({0},{1}) is not a primitive pair")]
    NotPrimitive(i64, i64),
    #[error("integer overflow in slope arithmetic")]
    Overflow,
    #[error("cannot parse slope from {0:?}")]
    Parse(String),
}

/// Narrows to `i64`, rejecting `i64::MIN` so that negation never overflows.
fn narrow(x: i128) -> Result<i64, SlopeError> {
    match i64::try_from(x) {
        Ok(v) if v != i64::MIN => Ok(v),
        _ => Err(SlopeError::Overflow),
    }
}

/// An element of `Q ∪ {1/0}`, i.e. an unoriented primitive class `±(pμ + qλ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const MERIDIAN: Slope = Slope { p: 1, q: 0 };
    pub const LONGITUDE: Slope = Slope { p: 0, q: 1 };

    /// Reduces `(p, q)` to the canonical representative.
    pub fn new(p: i64, q: i64) -> Result<Slope, SlopeError> {
        Self::from_wide(p as i128, q as i128)
    }

    pub(crate) fn from_wide(p: i128, q: i128) -> Result<Slope, SlopeError> {
        if p == 0 && q == 0 {
            return Err(SlopeError::ZeroPair);
        }
        if q == 0 {
            return Ok(Slope::MERIDIAN);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Slope {
            p: narrow(p)?,
            q: narrow(q)?,
        })
    }

    pub fn integer(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_meridian(&self) -> bool {
        self.q == 0
    }

    pub fn is_integral(&self) -> bool {
        self.q == 1
    }

    /// The integer value, if the slope is integral.
    pub fn as_integer(&self) -> Option<i64> {
        self.is_integral().then_some(self.p)
    }

    /// The slope `-p/q`; the meridian is fixed.
    pub fn negate(&self) -> Slope {
        if self.is_meridian() {
            *self
        } else {
            Slope {
                p: -self.p,
                q: self.q,
            }
        }
    }

    /// Absolute algebraic intersection number `|p q' - p' q|`.
    pub fn distance(&self, other: &Slope) -> u128 {
        let d = self.p as i128 * other.q as i128 - other.p as i128 * self.q as i128;
        d.unsigned_abs()
    }

    /// Exact comparison against the rational `num/den` (`den > 0`).
    /// The meridian compares greater than every rational.
    pub fn cmp_rational(&self, num: i128, den: i128) -> Ordering {
        debug_assert!(den > 0);
        if self.is_meridian() {
            return Ordering::Greater;
        }
        (self.p as i128 * den).cmp(&(num * self.q as i128))
    }

    pub fn cmp_integer(&self, n: i128) -> Ordering {
        self.cmp_rational(n, 1)
    }
}

impl Ord for Slope {
    /// Orders by rational value with `1/0` last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_meridian(), other.is_meridian()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => self.cmp_rational(other.p as i128, other.q as i128),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = SlopeError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SlopeError::Parse(s.to_string());
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        if q.starts_with(['-', '+']) {
            return Err(bad());
        }
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        Slope::new(p, q)
    }
}

/// An integer class `a·μ₀ + b·λ₀` on the companion boundary torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    pub a: i64,
    pub b: i64,
}

impl HomologyClass {
    pub const MU: HomologyClass = HomologyClass { a: 1, b: 0 };
    pub const LAMBDA: HomologyClass = HomologyClass { a: 0, b: 1 };

    pub fn slope(&self) -> Result<Slope, SlopeError> {
        Slope::new(self.a, self.b)
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b) == 1
    }
}

/// Image on the companion torus of the pattern-surgery longitude:
/// `1/0` for winding number zero, otherwise `p/(q w²)` reduced.
pub fn satellite_image(r: Slope, w: u64) -> Result<Slope, SlopeError> {
    if r.is_meridian() {
        return Err(SlopeError::MeridianInput);
    }
    if w == 0 {
        return Ok(Slope::MERIDIAN);
    }
    let w2 = (w as i128)
        .checked_mul(w as i128)
        .ok_or(SlopeError::Overflow)?;
    let q = (r.q as i128).checked_mul(w2).ok_or(SlopeError::Overflow)?;
    Slope::from_wide(r.p as i128, q)
}

/// The primitive class `(p μ₀ + q w² λ₀) / gcd(p, w²)`; `μ₀` when `w = 0`.
pub fn longitude_class(p: i64, q: i64, w: u64) -> Result<HomologyClass, SlopeError> {
    if p == 0 && q == 0 {
        return Err(SlopeError::ZeroPair);
    }
    if p.gcd(&q) != 1 {
        return Err(SlopeError::NotPrimitive(p, q));
    }
    if w == 0 {
        return Ok(HomologyClass::MU);
    }
    let w2 = (w as i128)
        .checked_mul(w as i128)
        .ok_or(SlopeError::Overflow)?;
    let g = (p as i128).gcd(&w2);
    let b = (q as i128).checked_mul(w2).ok_or(SlopeError::Overflow)? / g;
    Ok(HomologyClass {
        a: narrow(p as i128 / g)?,
        b: narrow(b)?,
    })
}
