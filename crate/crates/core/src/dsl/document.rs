//! Batch documents: named definitions plus `query` lines.
//!
//! ```text
//! # comment
//! K = C(2,7; T(2,3))
//! query K 13/2
//! query K 1/1, 2/1 assume-conjecture-1.6
//! query K p=1..2 q=-5..5
//! ```

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::knot::KnotExpr;
use crate::slope::{Slope, SlopeError};

use super::parser::{parse_expr_at, Pos};
use super::DslError;

pub const CONJECTURE_FLAG: &str = "assume-conjecture-1.6";

const MAX_GRID: u128 = 1_000_000;

/// A finite set of integers: `a..b` (inclusive) or `a,b,c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntSet {
    Range(i64, i64),
    List(Vec<i64>),
}

impl IntSet {
    pub fn values(&self) -> Vec<i64> {
        match self {
            IntSet::Range(a, b) => (*a..=*b).collect(),
            IntSet::List(v) => v.clone(),
        }
    }

    fn len(&self) -> u128 {
        match self {
            IntSet::Range(a, b) => (*b as i128 - *a as i128 + 1) as u128,
            IntSet::List(v) => v.len() as u128,
        }
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntSet::Range(a, b) => write!(f, "{a}..{b}"),
            IntSet::List(v) => {
                let items: Vec<String> = v.iter().map(i64::to_string).collect();
                f.write_str(&items.join(","))
            }
        }
    }
}

pub fn parse_int_set(s: &str) -> Result<IntSet, String> {
    let s = s.trim();
    let int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("`{t}` is not an integer"))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (int(a)?, int(b)?);
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        return Ok(IntSet::Range(a, b));
    }
    let v = s.split(',').map(int).collect::<Result<Vec<_>, _>>()?;
    Ok(IntSet::List(v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeSpec {
    List(Vec<Slope>),
    /// Every reduced `p/q` with `p` and `q` drawn from the sets, `q != 0`.
    Grid {
        p: IntSet,
        q: IntSet,
    },
}

impl SlopeSpec {
    /// The slopes in input order, duplicates removed.
    pub fn slopes(&self) -> Result<Vec<Slope>, SlopeError> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let candidates: Vec<Slope> = match self {
            SlopeSpec::List(v) => v.clone(),
            SlopeSpec::Grid { p, q } => {
                let mut v = Vec::new();
                for a in p.values() {
                    for b in q.values() {
                        if b != 0 && a.gcd(&b) == 1 {
                            v.push(Slope::new(a, b)?);
                        }
                    }
                }
                v
            }
        };
        for s in candidates {
            if seen.insert(s) {
                out.push(s);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SlopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeSpec::List(v) => {
                let items: Vec<String> = v.iter().map(Slope::to_string).collect();
                f.write_str(&items.join(", "))
            }
            SlopeSpec::Grid { p, q } => write!(f, "p={p} q={q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryLine {
    pub name: String,
    pub slopes: SlopeSpec,
    pub assume_conjecture: bool,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DslDocument {
    pub definitions: Vec<(String, KnotExpr)>,
    pub queries: Vec<QueryLine>,
}

impl DslDocument {
    pub fn get(&self, name: &str) -> Option<&KnotExpr> {
        self.definitions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, k)| k)
    }
}

impl fmt::Display for DslDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, k) in &self.definitions {
            writeln!(f, "{name} = {k}")?;
        }
        for q in &self.queries {
            write!(f, "query {} {}", q.name, q.slopes)?;
            if q.assume_conjecture {
                write!(f, " {CONJECTURE_FLAG}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn is_name(s: &str) -> bool {
    s.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "query"
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

fn paren_depth(s: &str) -> i64 {
    s.chars().fold(0, |d, c| match c {
        '(' => d + 1,
        ')' => d - 1,
        _ => d,
    })
}

fn parse_query(rest: &str, line: usize) -> Result<QueryLine, DslError> {
    let doc_err = |message: String| DslError::Document { line, message };
    let rest = rest.trim();
    let (name, mut spec) = rest
        .split_once(char::is_whitespace)
        .ok_or_else(|| doc_err("a query needs a knot name and slopes".into()))?;
    if !is_name(name) {
        return Err(doc_err(format!("`{name}` is not a valid name")));
    }
    spec = spec.trim();
    let mut assume_conjecture = false;
    if let Some(s) = spec.strip_suffix(CONJECTURE_FLAG) {
        assume_conjecture = true;
        spec = s.trim();
    }
    let slopes = if spec.starts_with("p=") {
        let mut parts = spec.split_whitespace();
        let p = parts.next().and_then(|t| t.strip_prefix("p="));
        let q = parts.next().and_then(|t| t.strip_prefix("q="));
        let (Some(p), Some(q), None) = (p, q, parts.next()) else {
            return Err(doc_err("a slope grid is written `p=<set> q=<set>`".into()));
        };
        let p = parse_int_set(p).map_err(doc_err)?;
        let q = parse_int_set(q).map_err(doc_err)?;
        if p.len().saturating_mul(q.len()) > MAX_GRID {
            return Err(doc_err(format!("slope grid larger than {MAX_GRID} points")));
        }
        SlopeSpec::Grid { p, q }
    } else {
        let mut v = Vec::new();
        for t in spec.split(',') {
            let s: Slope = t
                .trim()
                .parse()
                .map_err(|e: SlopeError| doc_err(e.to_string()))?;
            if s.is_meridian() {
                return Err(doc_err("the meridian 1/0 is not a surgery slope".into()));
            }
            v.push(s);
        }
        SlopeSpec::List(v)
    };
    Ok(QueryLine {
        name: name.to_string(),
        slopes,
        assume_conjecture,
        line,
    })
}

/// Parses a batch document.
pub fn parse(text: &str) -> Result<DslDocument, DslError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut doc = DslDocument::default();
    let mut names = HashSet::new();
    let mut i = 0;
    while i < lines.len() {
        let line_no = i + 1;
        let line = strip_comment(lines[i]);
        i += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("query") {
            if rest.starts_with(char::is_whitespace) {
                doc.queries.push(parse_query(rest, line_no)?);
                continue;
            }
        }
        let Some((name, expr)) = line.split_once('=') else {
            return Err(DslError::Document {
                line: line_no,
                message: "expected `NAME = expr` or `query NAME slopes`".into(),
            });
        };
        let name = name.trim();
        if !is_name(name) {
            return Err(DslError::Document {
                line: line_no,
                message: format!("`{name}` is not a valid name"),
            });
        }
        if !names.insert(name.to_string()) {
            return Err(DslError::Document {
                line: line_no,
                message: format!("`{name}` is defined twice"),
            });
        }
        let col = line.len() - expr.len() + 1;
        let mut body = expr.to_string();
        while paren_depth(&body) > 0 && i < lines.len() {
            body.push('\n');
            body.push_str(strip_comment(lines[i]));
            i += 1;
        }
        let k = parse_expr_at(&body, Pos { line: line_no, col })?;
        doc.definitions.push((name.to_string(), k));
    }
    for q in &doc.queries {
        if !names.contains(&q.name) {
            return Err(DslError::Document {
                line: q.line,
                message: format!("query references undefined knot `{}`", q.name),
            });
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = "\
# two knots
K = C(2,7;
      T(2,3))   # continued
J = Sum(T(2,3), T(2,5))
query K 13/2
query J 1/1, 2/1 assume-conjecture-1.6
query K p=1,2 q=-2..2
";

    #[test]
    fn parses_definitions_and_queries() {
        let d = parse(DOC).unwrap();
        assert_eq!(d.definitions.len(), 2);
        assert_eq!(d.get("K").unwrap().to_string(), "C(2,7; T(2,3))");
        assert_eq!(d.queries.len(), 3);
        assert!(d.queries[1].assume_conjecture);
        assert_eq!(d.queries[2].line, 7);
        let grid = d.queries[2].slopes.slopes().unwrap();
        let text: Vec<String> = grid.iter().map(Slope::to_string).collect();
        assert_eq!(text, ["-1/2", "-1/1", "1/1", "1/2", "-2/1", "2/1"]);
    }

    #[test]
    fn printing_is_canonical() {
        let d = parse(DOC).unwrap();
        let printed = d.to_string();
        assert_eq!(parse(&printed).unwrap().to_string(), printed);
        assert!(printed.contains("query K p=1,2 q=-2..2\n"));
    }

    #[test]
    fn document_errors() {
        let err = |t: &str| parse(t).unwrap_err();
        assert!(matches!(
            err("query K 1/2"),
            DslError::Document { line: 1, .. }
        ));
        assert!(matches!(
            err("K = T(2,3)\nK = T(2,5)"),
            DslError::Document { line: 2, .. }
        ));
        assert!(matches!(
            err("K = T(2,3)\nquery K 1/0"),
            DslError::Document { .. }
        ));
        assert!(matches!(
            err("K = T(2,3)\nJ = Hyp(size=3)"),
            DslError::UnknownAttribute {
                line: 2,
                col: 9,
                ..
            }
        ));
        assert!(matches!(
            err("K = T(2,3)\nquery K p=1..2"),
            DslError::Document { .. }
        ));
        assert!(matches!(err("nonsense"), DslError::Document { .. }));
    }

    #[test]
    fn int_sets() {
        assert_eq!(parse_int_set("-5..5").unwrap(), IntSet::Range(-5, 5));
        assert_eq!(parse_int_set("1,2").unwrap(), IntSet::List(vec![1, 2]));
        assert!(parse_int_set("3..1").is_err());
        assert!(parse_int_set("x").is_err());
    }
}
