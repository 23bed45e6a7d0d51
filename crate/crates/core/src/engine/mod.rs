//! Forward-chaining classification of Dehn surgeries.
//!
//! Rules run in catalog order on `(K, r)` and on the mirrored query
//! `(K*, -r)` until no property changes. Properties of `K(r)` are invariant
//! under orientation reversal, so conclusions from either side apply to
//! both. Two conclusions that disagree abort the query.

mod catalog;
mod rules;
mod verdict;

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use rayon::prelude::*;
use thiserror::Error;

use crate::knot::{self, KnotError, KnotExpr};
use crate::logic::Tri;
use crate::slope::{Slope, SlopeError};

pub use catalog::{citation_known, rule, RuleInfo, CITATIONS, RULES};
pub use verdict::{Premise, Property, Reduction, SubVerdict, Trace, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Flags {
    /// Extend the CTF conclusions to non-fibred knots; traces are tagged conjectural.
    pub assume_conjecture: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub knot: KnotExpr,
    pub slope: Slope,
    /// Defaults to the expression height plus 2.
    pub depth: Option<usize>,
    pub flags: Flags,
}

impl Query {
    pub fn new(knot: KnotExpr, slope: Slope) -> Query {
        Query {
            knot,
            slope,
            depth: None,
            flags: Flags::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InconsistencyError {
    pub knot: String,
    pub slope: Slope,
    pub property: Property,
    pub first_rule: String,
    pub first_value: Tri,
    pub second_rule: String,
    pub second_value: Tri,
}

impl fmt::Display for InconsistencyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} of {} at {}: {} concluded {} but {} concluded {}",
            self.property,
            self.knot,
            self.slope,
            self.first_rule,
            self.first_value,
            self.second_rule,
            self.second_value
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("inconsistent conclusions: {0}")]
    Inconsistency(Box<InconsistencyError>),
    #[error(
        "exceptional set {found} of {knot} is not contained in {{e, 2e}} or {{e/2, 2e/3, e, 2e}}"
    )]
    ExceptionalShape { knot: String, found: String },
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Slope(#[from] SlopeError),
    #[error("the meridian 1/0 is not a surgery slope")]
    MeridianSlope,
    #[error("surgery on the unknot is not classified")]
    TrivialKnot,
}

impl EngineError {
    /// Contradictory conclusions, as opposed to bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            EngineError::Inconsistency(_) | EngineError::ExceptionalShape { .. }
        )
    }
}

/// What a rule produced when evaluated on one side of a query.
pub(crate) enum Effect {
    Conclude {
        property: Property,
        value: Tri,
        premises: Vec<Premise>,
        citation: Option<&'static str>,
        conjectural: bool,
    },
    Reduce(Reduction),
    Note(String),
}

/// One orientation of the query.
pub(crate) struct Side {
    pub knot: KnotExpr,
    pub slope: Slope,
    pub mirrored: bool,
}

pub(crate) struct Ctx<'a> {
    session: &'a Session,
    depth: usize,
    values: [Tri; 6],
    notes: RefCell<Vec<String>>,
}

impl Ctx<'_> {
    pub fn value(&self, p: Property) -> Tri {
        self.values[p as usize]
    }

    pub fn flags(&self) -> Flags {
        self.session.flags
    }

    /// Classifies `knot(slope)` with one less unit of depth.
    pub fn sub(&self, knot: &KnotExpr, slope: Slope) -> Result<Rc<Verdict>, EngineError> {
        let v = self.session.run(knot, slope, self.depth - 1)?;
        self.notes.borrow_mut().extend(v.notes.iter().cloned());
        Ok(v)
    }
}

struct Session {
    flags: Flags,
    cache: RefCell<HashMap<(KnotExpr, Slope, usize), Rc<Verdict>>>,
}

impl Session {
    fn new(flags: Flags) -> Session {
        Session {
            flags,
            cache: RefCell::new(HashMap::new()),
        }
    }

    fn run(&self, knot: &KnotExpr, slope: Slope, depth: usize) -> Result<Rc<Verdict>, EngineError> {
        let key = (knot.clone(), slope, depth);
        if let Some(v) = self.cache.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = Rc::new(self.evaluate(knot, slope, depth)?);
        self.cache.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    fn evaluate(
        &self,
        knot: &KnotExpr,
        slope: Slope,
        depth: usize,
    ) -> Result<Verdict, EngineError> {
        let mut state = Verdict::default();
        if knot.is_unknot() {
            return Ok(state);
        }
        if depth == 0 {
            state
                .notes
                .push(format!("depth budget exhausted at {knot}({slope})"));
            return Ok(state);
        }
        let sides = [
            Side {
                knot: knot.clone(),
                slope,
                mirrored: false,
            },
            Side {
                knot: knot::mirror(knot),
                slope: slope.negate(),
                mirrored: true,
            },
        ];
        let mut first_rule: HashMap<Property, &'static str> = HashMap::new();
        let mut traced: HashSet<(usize, Property)> = HashSet::new();
        loop {
            let mut changed = false;
            for (idx, info) in RULES.iter().enumerate() {
                for side in &sides {
                    let cx = Ctx {
                        session: self,
                        depth,
                        values: state.values(),
                        notes: RefCell::new(Vec::new()),
                    };
                    let effects = (info.eval)(&cx, side)?;
                    for note in cx.notes.into_inner() {
                        if !state.notes.contains(&note) {
                            state.notes.push(note);
                        }
                    }
                    for effect in effects {
                        match effect {
                            Effect::Reduce(mut r) => {
                                if side.mirrored {
                                    r.description = format!("mirror: {}", r.description);
                                    r.knot = knot::mirror(&r.knot);
                                    r.slope = r.slope.negate();
                                }
                                let seen = state
                                    .reductions
                                    .iter()
                                    .any(|x| x.knot == r.knot && x.slope == r.slope);
                                if !seen {
                                    state.reductions.push(r);
                                }
                            }
                            Effect::Note(n) => {
                                if !state.notes.contains(&n) {
                                    state.notes.push(n);
                                }
                            }
                            Effect::Conclude {
                                property,
                                value,
                                mut premises,
                                citation,
                                conjectural,
                            } => {
                                debug_assert!(value.is_known());
                                let current = state.get(property);
                                if current.is_known() && current != value {
                                    return Err(EngineError::Inconsistency(Box::new(
                                        InconsistencyError {
                                            knot: knot.to_string(),
                                            slope,
                                            property,
                                            first_rule: first_rule[&property].to_string(),
                                            first_value: current,
                                            second_rule: info.id.to_string(),
                                            second_value: value,
                                        },
                                    )));
                                }
                                if !traced.insert((idx, property)) {
                                    continue;
                                }
                                if current == Tri::Unknown {
                                    state.set(property, value);
                                    first_rule.insert(property, info.id);
                                    changed = true;
                                }
                                if side.mirrored {
                                    premises.insert(
                                        0,
                                        Premise::Fact(format!(
                                            "mirror: {} at {}",
                                            side.knot, side.slope
                                        )),
                                    );
                                }
                                state.traces.push(Trace {
                                    rule_id: info.id,
                                    citation: citation.unwrap_or(info.citations[0]),
                                    premises,
                                    property,
                                    value,
                                    conjectural,
                                });
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ok(state)
    }
}

fn prepare(knot: &KnotExpr, slope: Slope) -> Result<KnotExpr, EngineError> {
    if slope.is_meridian() {
        return Err(EngineError::MeridianSlope);
    }
    let knot = knot::validate(knot)?;
    if knot.is_unknot() {
        return Err(EngineError::TrivialKnot);
    }
    Ok(knot)
}

/// Classifies `K(r)`.
pub fn classify(query: &Query) -> Result<Verdict, EngineError> {
    let knot = prepare(&query.knot, query.slope)?;
    let depth = query.depth.unwrap_or(knot.height() + 2);
    let v = Session::new(query.flags).run(&knot, query.slope, depth)?;
    Ok(Rc::try_unwrap(v).unwrap_or_else(|rc| (*rc).clone()))
}

/// Classifies `K(r)` for each slope, in input order, and checks the shape of
/// the set of non-LO slopes with `|p| <= 2`.
pub fn scan(
    knot: &KnotExpr,
    slopes: &[Slope],
    depth: Option<usize>,
    flags: Flags,
) -> Result<Vec<(Slope, Verdict)>, EngineError> {
    let knot = knot::validate(knot)?;
    if knot.is_unknot() {
        return Err(EngineError::TrivialKnot);
    }
    let results = slopes
        .par_iter()
        .map(|&s| {
            let q = Query {
                knot: knot.clone(),
                slope: s,
                depth,
                flags,
            };
            classify(&q).map(|v| (s, v))
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_exceptional_shape(&knot, &results)?;
    Ok(results)
}

/// The R-E-shape assertion over a set of classified slopes.
pub fn check_exceptional_shape(
    knot: &KnotExpr,
    results: &[(Slope, Verdict)],
) -> Result<(), EngineError> {
    let not_lo: Vec<Slope> = results
        .iter()
        .filter(|(s, v)| matches!(s.p().abs(), 1 | 2) && v.lo().is_no())
        .map(|(s, _)| *s)
        .collect();
    if knot::fits_exceptional_shape(&not_lo) {
        return Ok(());
    }
    let found: Vec<String> = not_lo.iter().map(Slope::to_string).collect();
    Err(EngineError::ExceptionalShape {
        knot: knot.to_string(),
        found: format!("{{{}}}", found.join(", ")),
    })
}
