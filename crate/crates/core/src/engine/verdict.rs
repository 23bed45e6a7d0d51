use std::fmt;

use crate::knot::KnotExpr;
use crate::logic::Tri;
use crate::slope::Slope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Reducible,
    Toroidal,
    Lo,
    Nls,
    Ctf,
    LSpace,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Reducible,
        Property::Toroidal,
        Property::Lo,
        Property::Nls,
        Property::Ctf,
        Property::LSpace,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Reducible => "reducible",
            Property::Toroidal => "toroidal",
            Property::Lo => "lo",
            Property::Nls => "nls",
            Property::Ctf => "ctf",
            Property::LSpace => "l_space",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Premise {
    Fact(String),
    Sub(Box<SubVerdict>),
}

/// A property value of another surgery that a rule relied on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubVerdict {
    pub knot: KnotExpr,
    pub slope: Slope,
    pub property: Property,
    pub value: Tri,
    pub traces: Vec<Trace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub rule_id: &'static str,
    pub citation: &'static str,
    pub premises: Vec<Premise>,
    pub property: Property,
    pub value: Tri,
    pub conjectural: bool,
}

/// `K(r)` is homeomorphic to `knot(slope)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub description: String,
    pub knot: KnotExpr,
    pub slope: Slope,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    values: [Tri; 6],
    pub traces: Vec<Trace>,
    pub reductions: Vec<Reduction>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn get(&self, p: Property) -> Tri {
        self.values[p.index()]
    }

    pub(crate) fn set(&mut self, p: Property, v: Tri) {
        self.values[p.index()] = v;
    }

    pub(crate) fn values(&self) -> [Tri; 6] {
        self.values
    }

    pub fn reducible(&self) -> Tri {
        self.get(Property::Reducible)
    }

    pub fn toroidal(&self) -> Tri {
        self.get(Property::Toroidal)
    }

    pub fn lo(&self) -> Tri {
        self.get(Property::Lo)
    }

    pub fn nls(&self) -> Tri {
        self.get(Property::Nls)
    }

    pub fn ctf(&self) -> Tri {
        self.get(Property::Ctf)
    }

    pub fn l_space(&self) -> Tri {
        self.get(Property::LSpace)
    }

    pub fn traces_for(&self, p: Property) -> impl Iterator<Item = &Trace> {
        self.traces.iter().filter(move |t| t.property == p)
    }
}
