//! Recursive-descent parser for knot expressions.

use crate::knot::{
    self, DegeneracyLocus, FdtcSign, HypAttrs, KnotExpr, LocusForm, OneBridgeBraid, PatternAttrs,
};
use crate::slope::Slope;

use super::DslError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

fn lex(text: &str, origin: Pos) -> Result<Vec<(Tok, Pos)>, DslError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (origin.line, origin.col);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse::<i64>().map_err(|_| DslError::Syntax {
                line,
                col,
                expected: "an integer that fits in 64 bits".into(),
                found: digits.clone(),
            })?;
            out.push((Tok::Int(n), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if "(),;=[]/+-".contains(c) {
            i += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(DslError::Syntax {
                line,
                col,
                expected: "a knot expression".into(),
                found: format!("`{c}`"),
            });
        }
        col += i - start;
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = Result<T, DslError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        let p = self.pos();
        Err(DslError::Syntax {
            line: p.line,
            col: p.col,
            expected: expected.into(),
            found: self.peek().describe(),
        })
    }

    fn sym(&mut self, c: char) -> PResult<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.error(&format!("`{c}`"))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat('-');
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => self.error("an integer"),
        }
    }

    fn uint(&mut self) -> PResult<u64> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n as u64)
            }
            _ => self.error("a non-negative integer"),
        }
    }

    fn boolean(&mut self) -> PResult<bool> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "yes" => {
                self.bump();
                Ok(true)
            }
            Tok::Ident(s) if s == "no" => {
                self.bump();
                Ok(false)
            }
            _ => self.error("`yes` or `no`"),
        }
    }

    fn slope(&mut self) -> PResult<Slope> {
        let pos = self.pos();
        let p = self.int()?;
        let q = if self.eat('/') {
            self.uint()? as i64
        } else {
            1
        };
        Slope::new(p, q).map_err(|source| DslError::Slope {
            line: pos.line,
            col: pos.col,
            source,
        })
    }

    fn slope_list(&mut self) -> PResult<Vec<Slope>> {
        self.sym('[')?;
        let mut out = Vec::new();
        while !self.eat(']') {
            if *self.peek() == Tok::End {
                return self.error("`]`");
            }
            out.push(self.slope()?);
            self.eat(',');
        }
        Ok(out)
    }

    fn expr(&mut self) -> PResult<KnotExpr> {
        let pos = self.pos();
        let head = match self.peek().clone() {
            Tok::Ident(s) => s,
            _ => return self.error("one of `U`, `T`, `C`, `Sat`, `Sum`, `Hyp`"),
        };
        self.bump();
        let e = match head.as_str() {
            "U" => KnotExpr::Unknot,
            "T" => {
                self.sym('(')?;
                let m = self.int()?;
                self.sym(',')?;
                let n = self.int()?;
                self.sym(')')?;
                KnotExpr::torus(m, n)
            }
            "C" => {
                self.sym('(')?;
                let m = self.int()?;
                self.sym(',')?;
                let n = self.int()?;
                self.sym(';')?;
                let c = self.expr()?;
                self.sym(')')?;
                KnotExpr::cable(m, n, c)
            }
            "Sum" => {
                self.sym('(')?;
                let mut v = vec![self.expr()?];
                while self.eat(',') {
                    v.push(self.expr()?);
                }
                self.sym(')')?;
                KnotExpr::sum(v)
            }
            "Hyp" => {
                self.sym('(')?;
                let e = self.hyp_attrs()?;
                self.sym(')')?;
                e
            }
            "Sat" => {
                self.sym('(')?;
                let pattern = self.pattern_attrs()?;
                self.sym(';')?;
                let c = self.expr()?;
                self.sym(')')?;
                KnotExpr::satellite(pattern, c)
            }
            _ => {
                self.at -= 1;
                return self.error("one of `U`, `T`, `C`, `Sat`, `Sum`, `Hyp`");
            }
        };
        knot::validate(&e).map_err(|source| DslError::Validation {
            line: pos.line,
            col: pos.col,
            source,
        })
    }

    fn key(&mut self, constructor: &str, keys: &[&str]) -> PResult<(String, Pos)> {
        let pos = self.pos();
        let k = match self.peek().clone() {
            Tok::Ident(s) => s,
            _ => return self.error("an attribute name"),
        };
        if !keys.contains(&k.as_str()) {
            return Err(DslError::UnknownAttribute {
                line: pos.line,
                col: pos.col,
                key: k,
                constructor: constructor.into(),
            });
        }
        self.bump();
        self.sym('=')?;
        Ok((k, pos))
    }

    fn duplicate<T>(&self, key: &str, pos: Pos) -> PResult<T> {
        Err(DslError::Syntax {
            line: pos.line,
            col: pos.col,
            expected: "each attribute at most once".into(),
            found: format!("a second `{key}`"),
        })
    }

    fn hyp_attrs(&mut self) -> PResult<KnotExpr> {
        const KEYS: &[&str] = &[
            "name", "genus", "fibred", "fdtc", "plsk", "alt", "pf", "delta", "bcnlo", "lo", "nlo",
        ];
        let mut a = HypAttrs::default();
        let mut name = None;
        let mut seen: Vec<String> = Vec::new();
        if *self.peek() == Tok::Sym(')') {
            return Ok(KnotExpr::hyp(a));
        }
        loop {
            let (k, pos) = self.key("Hyp", KEYS)?;
            if seen.contains(&k) {
                return self.duplicate(&k, pos);
            }
            seen.push(k.clone());
            match k.as_str() {
                "name" => match self.bump() {
                    Tok::Ident(s) => name = Some(s),
                    _ => {
                        self.at -= 1;
                        return self.error("an atom name");
                    }
                },
                "genus" => a.genus = Some(self.uint()?),
                "fibred" => a.fibred = Some(self.boolean()?),
                "fdtc" => {
                    a.fdtc = match self.bump() {
                        Tok::Sym('+') => FdtcSign::Positive,
                        Tok::Sym('-') => FdtcSign::Negative,
                        Tok::Int(0) => FdtcSign::Zero,
                        _ => {
                            self.at -= 1;
                            return self.error("`+`, `-` or `0`");
                        }
                    }
                }
                "plsk" => a.positive_lspace = Some(self.boolean()?),
                "alt" => a.alternating = Some(self.boolean()?),
                "pf" => a.persistently_foliar = Some(self.boolean()?),
                "bcnlo" => a.branched_cover_not_lo = Some(self.boolean()?),
                "delta" => {
                    let b = self.int()?;
                    match self.bump() {
                        Tok::Ident(s) if s == "mu" => {}
                        _ => {
                            self.at -= 1;
                            return self.error("`mu`");
                        }
                    }
                    let form = if self.eat('+') {
                        match self.bump() {
                            Tok::Ident(s) if s == "lambda" => LocusForm::MuPlusLambda,
                            _ => {
                                self.at -= 1;
                                return self.error("`lambda`");
                            }
                        }
                    } else {
                        LocusForm::Mu
                    };
                    a.degeneracy_locus = Some(DegeneracyLocus { form, b });
                }
                "lo" => a.known_lo = self.slope_list()?,
                "nlo" => a.known_not_lo = self.slope_list()?,
                _ => unreachable!("closed key set"),
            }
            if !self.eat(',') {
                break;
            }
        }
        Ok(KnotExpr::Hyp { attrs: a, name })
    }

    fn pattern_attrs(&mut self) -> PResult<PatternAttrs> {
        const KEYS: &[&str] = &[
            "w",
            "braided",
            "obb",
            "a",
            "stsurg",
            "cable",
            "atoroidal",
            "plsk",
            "cgenus",
            "closure",
        ];
        let start = self.pos();
        let mut p = PatternAttrs::default();
        let mut seen: Vec<String> = Vec::new();
        loop {
            let (k, pos) = self.key("Sat", KEYS)?;
            if seen.contains(&k) {
                return self.duplicate(&k, pos);
            }
            seen.push(k.clone());
            match k.as_str() {
                "w" => p.winding = self.uint()?,
                "braided" => p.braided = Some(self.boolean()?),
                "obb" => {
                    self.sym('(')?;
                    let w = self.uint()?;
                    self.sym(',')?;
                    let b = self.uint()?;
                    self.sym(',')?;
                    let t = self.uint()?;
                    self.sym(')')?;
                    p.one_bridge_braid = Some(OneBridgeBraid { w, b, t });
                }
                "a" => p.compress_a = Some(self.int()?),
                "stsurg" => p.solid_torus_surgery = Some(self.boolean()?),
                "cable" => {
                    if self.eat('(') {
                        let m = self.int()?;
                        self.sym(',')?;
                        let n = self.int()?;
                        self.sym(')')?;
                        p.cable_params = Some((m, n));
                        p.cabled = Some(true);
                    } else {
                        p.cabled = Some(self.boolean()?);
                    }
                }
                "atoroidal" => p.atoroidal = Some(self.boolean()?),
                "plsk" => p.positive_lspace = Some(self.boolean()?),
                "cgenus" => p.closure_genus = Some(self.uint()?),
                "closure" => p.closure = Some(Box::new(self.expr()?)),
                _ => unreachable!("closed key set"),
            }
            if !self.eat(',') {
                break;
            }
        }
        if !seen.iter().any(|k| k == "w") {
            return Err(DslError::Syntax {
                line: start.line,
                col: start.col,
                expected: "a winding number `w=...`".into(),
                found: "a pattern without one".into(),
            });
        }
        Ok(p)
    }
}

/// Parses a single knot expression starting at `origin`; the whole text must be consumed.
pub(crate) fn parse_expr_at(text: &str, origin: Pos) -> Result<KnotExpr, DslError> {
    let mut p = Parser {
        toks: lex(text, origin)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("end of expression");
    }
    Ok(e)
}

/// Parses and validates a knot expression.
pub fn parse_expr(text: &str) -> Result<KnotExpr, DslError> {
    parse_expr_at(text, Pos { line: 1, col: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::KnotError;

    #[test]
    fn constructors() {
        assert_eq!(
            parse_expr("C(2,7; T(2,3))").unwrap(),
            KnotExpr::cable(2, 7, KnotExpr::torus(2, 3))
        );
        assert_eq!(parse_expr("U").unwrap(), KnotExpr::Unknot);
        let e = parse_expr("Sat(w=1; Sat(w=1; Hyp(genus=2)))").unwrap();
        let KnotExpr::Satellite { pattern, companion } = &e else {
            panic!()
        };
        assert_eq!(pattern.winding, 1);
        assert!(matches!(**companion, KnotExpr::Satellite { .. }));
        assert_eq!(parse_expr("T(3,-2)").unwrap(), KnotExpr::torus(2, -3));
    }

    #[test]
    fn attributes() {
        let e =
            parse_expr("Hyp(fibred=yes, fdtc=-, delta=-2mu+lambda, lo=[1/2 3], nlo=[-1])").unwrap();
        let KnotExpr::Hyp { attrs, .. } = e else {
            panic!()
        };
        assert_eq!(attrs.fdtc, FdtcSign::Negative);
        assert_eq!(
            attrs.degeneracy_locus,
            Some(DegeneracyLocus {
                form: LocusForm::MuPlusLambda,
                b: -2
            })
        );
        assert_eq!(
            attrs.known_lo,
            vec![Slope::new(1, 2).unwrap(), Slope::integer(3)]
        );
        let s = parse_expr("Sat(w=2, cable=(2,3), closure=T(2,3); T(2,5))").unwrap();
        assert_eq!(
            s.to_string(),
            "Sat(w=2, cable=(2,3), closure=T(2,3); T(2,5))"
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_expr("Hyp(genus=2, colour=red)") {
            Err(DslError::UnknownAttribute { line, col, key, .. }) => {
                assert_eq!((line, col, key.as_str()), (1, 14, "colour"));
            }
            other => panic!("{other:?}"),
        }
        match parse_expr("C(2,7;\n  T(2,3)") {
            Err(DslError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 9)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_expr("C(2,1; U)"),
            Err(DslError::Validation {
                source: KnotError::TrivialCompanion(_),
                ..
            })
        ));
        assert!(parse_expr("Sat(braided=yes; T(2,3))").is_err());
        assert!(parse_expr("Hyp(genus=2, genus=3)").is_err());
        assert!(parse_expr("T(2,3) x").is_err());
        assert!(parse_expr("T(2,3").is_err());
        assert!(parse_expr("Q(1)").is_err());
    }
}
