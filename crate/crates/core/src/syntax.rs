//! A small text language for ideals.
//!
//! ```text
//! expr  := term ('+' term)*
//! term  := atom | 'cap(' expr (',' expr)* ')'
//! atom  := 'I[' bounds ';' flags ']'        box I_{alpha,eps}
//!        | 'J[' bounds ';' flags ']'        irreducible J_{alpha,eps}
//!        | 'Jp[' idx ',' bound ',' flag ']' pure power J_{i,alpha,eps}
//!        | 'gen(' monomial (',' monomial)* ')'
//! bound := rational | 'inf'      rational := digits ('/' digits)?
//! flag  := '0' | '1'             monomial := '1' | 'X'idx ('^' rational)? ('*' ...)*
//! ```
//!
//! Whitespace between tokens is ignored. Variable indices are 1-based in the
//! text and 0-based in the library.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{finite_gen_to_afg, intersect_afg, sum_afg};
use crate::decomposition::recompose;
use crate::exponent::{ExtExp, Flag, Rational, Ray};
use crate::ideal::{AfgIdeal, BoxIdeal, Decomposition, FiniteGeneratorSet, IrreducibleIdeal, PurePowerIdeal};
use crate::monomial::Monomial;

const MAX_DEPTH: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    /// Wrong number of coordinates, or a variable index out of range.
    Dimension(String),
    Negative,
}

/// A diagnostic anchored at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn is_dimension_error(&self) -> bool {
        matches!(self.kind, ParseErrorKind::Dimension(_))
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::Dimension(msg) => write!(f, "dimension error: {msg}"),
            ParseErrorKind::Negative => f.write_str("negative rational"),
        }
    }
}

/// Parsed ideal expression. All leaves share the dimension given to the
/// parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Box(BoxIdeal),
    Irr(IrreducibleIdeal),
    PurePower(PurePowerIdeal),
    Gens(FiniteGeneratorSet),
    Sum(Vec<Expr>),
    Intersection(Vec<Expr>),
}

impl Expr {
    /// The ideal as a sum of boxes.
    pub fn elaborate(&self, dim: usize) -> AfgIdeal {
        if let Some(d) = self.as_decomposition(dim) {
            return recompose(&d);
        }
        match self {
            Expr::Box(b) => AfgIdeal::from_box(b.clone()),
            Expr::Gens(s) => finite_gen_to_afg(s),
            Expr::Sum(terms) => terms
                .iter()
                .map(|t| t.elaborate(dim))
                .reduce(|a, b| sum_afg(&a, &b).expect("leaves share a dimension"))
                .expect("sums have at least one term"),
            Expr::Intersection(terms) => terms
                .iter()
                .map(|t| t.elaborate(dim))
                .reduce(|a, b| intersect_afg(&a, &b).expect("leaves share a dimension"))
                .expect("intersections have at least one term"),
            Expr::Irr(_) | Expr::PurePower(_) => unreachable!("handled as decompositions"),
        }
    }

    /// The expression as an intersection of irreducibles, when it is one.
    pub fn as_decomposition(&self, dim: usize) -> Option<Decomposition> {
        let mut out = Vec::new();
        self.collect_irreducibles(dim, &mut out)?;
        Decomposition::new(dim, out).ok()
    }

    fn collect_irreducibles(&self, dim: usize, out: &mut Vec<IrreducibleIdeal>) -> Option<()> {
        match self {
            Expr::Irr(j) => out.push(j.clone()),
            Expr::PurePower(p) => out.push(p.to_irreducible(dim).ok()?),
            Expr::Intersection(terms) => {
                for t in terms {
                    t.collect_irreducibles(dim, out)?;
                }
            }
            _ => return None,
        }
        Some(())
    }
}

/// Parses an ideal expression over `dim` variables.
pub fn parse_expr(text: &str, dim: usize) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text, dim)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a monomial such as `X1^3/2*X2` or `1`.
pub fn parse_monomial(text: &str, dim: usize) -> Result<Monomial, ParseError> {
    let mut p = Parser::new(text, dim)?;
    let m = p.monomial()?;
    p.finish()?;
    Ok(m)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, dim: usize) -> Result<Self, ParseError> {
        let p = Parser { src: text.as_bytes(), pos: 0, dim, depth: 0 };
        if dim == 0 {
            return Err(p.dim_err(0, "the ambient ring needs at least one variable".into()));
        }
        Ok(p)
    }

    fn syntax(&self, offset: usize, msg: impl Into<String>) -> ParseError {
        ParseError { offset, kind: ParseErrorKind::Syntax(msg.into()) }
    }

    fn dim_err(&self, offset: usize, msg: String) -> ParseError {
        ParseError { offset, kind: ParseErrorKind::Dimension(msg) }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", byte as char)))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        match self.peek() {
            None => self.syntax(self.pos, format!("expected {wanted}, found end of input")),
            Some(b) if b.is_ascii_graphic() => self.syntax(self.pos, format!("expected {wanted}, found '{}'", b as char)),
            Some(_) => self.syntax(self.pos, format!("expected {wanted}, found a non-ASCII or control byte")),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn ident(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        // Only ASCII letters were consumed.
        (start, std::str::from_utf8(&self.src[start..self.pos]).unwrap_or(""))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.syntax(self.pos, "expression nested too deeply"));
        }
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        self.depth -= 1;
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let (start, word) = self.ident();
        match word {
            "cap" => {
                self.expect(b'(')?;
                let mut parts = vec![self.expr()?];
                while self.eat(b',') {
                    parts.push(self.expr()?);
                }
                self.expect(b')')?;
                Ok(Expr::Intersection(parts))
            }
            "I" | "J" => {
                self.expect(b'[')?;
                let alphas = self.list(b';', Self::bound)?;
                self.expect(b';')?;
                let flags = self.list(b']', Self::flag)?;
                self.expect(b']')?;
                for (what, n) in [("bounds", alphas.len()), ("flags", flags.len())] {
                    if n != self.dim {
                        return Err(self.dim_err(start, format!("{word}[...] has {n} {what}, expected {}", self.dim)));
                    }
                }
                let rays: Vec<Ray> = alphas.into_iter().zip(flags).map(|(a, e)| Ray::new(a, e)).collect();
                Ok(if word == "I" {
                    Expr::Box(BoxIdeal::new(rays).expect("dim > 0"))
                } else {
                    Expr::Irr(IrreducibleIdeal::new(rays).expect("dim > 0"))
                })
            }
            "Jp" => {
                self.expect(b'[')?;
                let var = self.index()?;
                self.expect(b',')?;
                let alpha = self.bound()?;
                self.expect(b',')?;
                let eps = self.flag()?;
                self.expect(b']')?;
                Ok(Expr::PurePower(PurePowerIdeal::new(var, Ray::new(alpha, eps))))
            }
            "gen" => {
                self.expect(b'(')?;
                let mut gens = vec![self.monomial()?];
                while self.eat(b',') {
                    gens.push(self.monomial()?);
                }
                self.expect(b')')?;
                Ok(Expr::Gens(FiniteGeneratorSet::new(self.dim, gens).expect("monomials have dim entries")))
            }
            "" => Err(self.unexpected("an ideal term")),
            other => Err(self.syntax(start, format!("unknown term '{other}'"))),
        }
    }

    /// Items separated by commas, stopping before `end`.
    fn list<T>(&mut self, end: u8, mut item: impl FnMut(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        let mut out = vec![item(self)?];
        while self.peek() != Some(end) {
            self.expect(b',')?;
            out.push(item(self)?);
        }
        Ok(out)
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        if text.is_empty() {
            None
        } else {
            text.parse().ok()
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        if self.peek() == Some(b'-') {
            return Err(ParseError { offset: self.pos, kind: ParseErrorKind::Negative });
        }
        let Some(num) = self.digits() else {
            return Err(self.unexpected("a rational"));
        };
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        let at = self.pos;
        match self.digits() {
            Some(den) if den.is_zero() => Err(self.syntax(at, "zero denominator")),
            Some(den) => Ok(Rational::new(num, den)),
            None => Err(self.unexpected("a denominator")),
        }
    }

    fn bound(&mut self) -> Result<ExtExp, ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"inf") {
            self.pos += 3;
            return Ok(ExtExp::INFINITY);
        }
        let r = self.rational()?;
        Ok(ExtExp::finite(r).expect("parsed rationals are nonnegative"))
    }

    fn flag(&mut self) -> Result<Flag, ParseError> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Flag::Closed)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Flag::Open)
            }
            _ => Err(self.unexpected("a flag 0 or 1")),
        }
    }

    /// A 1-based variable index, returned 0-based.
    fn index(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let at = self.pos;
        let Some(n) = self.digits() else {
            return Err(self.unexpected("a variable index"));
        };
        match usize::try_from(n) {
            Ok(i) if (1..=self.dim).contains(&i) => Ok(i - 1),
            _ => Err(self.dim_err(at, format!("variable index out of range 1..={}", self.dim))),
        }
    }

    fn monomial(&mut self) -> Result<Monomial, ParseError> {
        let mut exps = vec![Rational::zero(); self.dim];
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Monomial::new(exps).expect("dim > 0"));
        }
        loop {
            if self.peek() != Some(b'X') {
                return Err(self.unexpected("a variable X<i> or 1"));
            }
            self.pos += 1;
            let var = self.index()?;
            let exp = if self.eat(b'^') { self.rational()? } else { Rational::from_integer(1.into()) };
            exps[var] += exp;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(Monomial::new(exps).expect("exponents are nonnegative"))
    }
}

fn sort_key(rays: &[Ray]) -> (Vec<ExtExp>, Vec<Flag>) {
    (rays.iter().map(|r| r.alpha.clone()).collect(), rays.iter().map(|r| r.eps).collect())
}

/// Canonical text of a sum: nonzero boxes deduplicated and sorted by
/// `(alpha vector, eps vector)`, joined by `+`. The zero ideal prints as
/// `I[inf,...;0,...]`.
pub fn print_sum(a: &AfgIdeal) -> String {
    let mut boxes: Vec<BoxIdeal> = a.boxes().iter().filter(|b| !b.is_zero()).cloned().collect();
    if boxes.is_empty() {
        return BoxIdeal::zero(a.dim()).expect("dim > 0").to_string();
    }
    boxes.sort_by_cached_key(|b| sort_key(b.rays()));
    boxes.dedup();
    boxes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ")
}

/// Canonical text of an intersection: components with empty rays closed,
/// deduplicated and sorted like [`print_sum`], inside `cap(...)`. The empty
/// intersection prints as `cap(J[0,...;0,...])`.
pub fn print_intersection(d: &Decomposition) -> String {
    let mut comps: Vec<IrreducibleIdeal> = d.components().iter().map(IrreducibleIdeal::normalized).collect();
    if comps.is_empty() {
        comps.push(IrreducibleIdeal::unit(d.dim()).expect("dim > 0"));
    }
    comps.sort_by_cached_key(|j| sort_key(j.rays()));
    comps.dedup();
    let parts: Vec<String> = comps.iter().map(ToString::to_string).collect();
    format!("cap({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{decompose, equal, remove_redundant};

    #[test]
    fn box_literal() {
        let e = parse_expr("I[2,3/2;1,0]", 2).unwrap();
        assert_eq!(e, Expr::Box(BoxIdeal::from_parts(&["2", "3/2"], &[1, 0]).unwrap()));
        assert_eq!(parse_expr(" I [ 2 , 3 / 2 ; 1 , 0 ] ", 2).unwrap(), e);
    }

    #[test]
    fn pure_power_intersection() {
        let e = parse_expr("cap(Jp[1,2,1],Jp[2,3/2,0],Jp[1,5/3,0],Jp[2,1,1])", 2).unwrap();
        let d = e.as_decomposition(2).unwrap();
        assert_eq!(d.components().len(), 4);
        assert_eq!(d.components()[1], IrreducibleIdeal::from_parts(&["inf", "3/2"], &[0, 0]).unwrap());
        assert_eq!(print_sum(&e.elaborate(2)), "I[2,3/2;1,0]");
    }

    #[test]
    fn generators() {
        let e = parse_expr("gen(X1^1*X2^1)", 2).unwrap();
        let expected = FiniteGeneratorSet::new(2, vec![Monomial::from_ratios(&[(1, 1), (1, 1)])]).unwrap();
        assert_eq!(e, Expr::Gens(expected));
        let m = parse_monomial("X1^3/2*X2*X1", 2).unwrap();
        assert_eq!(m, Monomial::from_ratios(&[(5, 2), (1, 1)]));
        assert!(parse_monomial("1", 3).unwrap().is_one());
    }

    #[test]
    fn diagnostics_carry_offsets() {
        let err = parse_expr("I[2,3/2;1,0", 2).unwrap_err();
        assert_eq!(err.offset, 11);
        let err = parse_expr("I[2;1]", 2).unwrap_err();
        assert!(err.is_dimension_error());
        assert_eq!(err.offset, 0);
        let err = parse_expr("I[2,-1;0,0]", 2).unwrap_err();
        assert_eq!(err, ParseError { offset: 4, kind: ParseErrorKind::Negative });
        let err = parse_expr("Jp[3,1,0]", 2).unwrap_err();
        assert!(err.is_dimension_error());
        assert_eq!(parse_expr("K[1;0]", 1).unwrap_err().offset, 0);
        assert_eq!(parse_expr("I[1/0;0]", 1).unwrap_err().offset, 4);
        assert_eq!(parse_expr("I[1;2]", 1).unwrap_err().offset, 4);
        assert_eq!(parse_expr("", 1).unwrap_err().offset, 0);
        assert_eq!(parse_expr("I[1;0] I[2;0]", 1).unwrap_err().offset, 7);
        assert!(parse_expr("I[1;0]", 0).is_err());
    }

    #[test]
    fn deep_nesting_is_rejected() {
        let text = format!("{}I[1;0]{}", "cap(".repeat(500), ")".repeat(500));
        assert!(parse_expr(&text, 1).is_err());
    }

    #[test]
    fn canonical_printing() {
        let b = AfgIdeal::from_box(BoxIdeal::from_parts(&["2", "3/2"], &[1, 0]).unwrap());
        assert_eq!(print_sum(&b), "I[2,3/2;1,0]");
        assert_eq!(print_sum(&AfgIdeal::zero(2).unwrap()), "I[inf,inf;0,0]");
        let two = AfgIdeal::new(
            2,
            vec![BoxIdeal::from_parts(&["1", "0"], &[0, 0]).unwrap(), BoxIdeal::from_parts(&["0", "1"], &[0, 1]).unwrap()],
        )
        .unwrap();
        assert_eq!(print_sum(&two), "I[0,1;0,1] + I[1,0;0,0]");
        assert_eq!(print_intersection(&Decomposition::unit(2).unwrap()), "cap(J[0,0;0,0])");
    }

    #[test]
    fn example_box_decomposition_prints_two_components() {
        let e = parse_expr("cap(Jp[1,2,1],Jp[2,3/2,0],Jp[1,5/3,0],Jp[2,1,1])", 2).unwrap();
        let d = remove_redundant(&decompose(&e.elaborate(2)));
        assert_eq!(print_intersection(&d), "cap(J[2,inf;1,0],J[inf,3/2;0,0])");
    }

    #[test]
    fn mixed_expression_elaborates() {
        let e = parse_expr("cap(I[1,0;0,0] + gen(X2), J[2,2;0,0])", 2).unwrap();
        let a = e.elaborate(2);
        let expected = parse_expr("I[2,0;0,0] + I[1,2;0,0] + I[0,2;0,0] + I[2,1;0,0]", 2).unwrap().elaborate(2);
        assert!(equal(&a, &expected).unwrap());
    }
}
