use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn neg(self) -> Formula {
        Formula::Neg(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(other))
    }

    /// `~(~a & ~b)`, the definition of `a | b`.
    pub fn or_definiens(a: &Formula, b: &Formula) -> Formula {
        a.clone().neg().and(b.clone().neg()).neg()
    }

    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::Atom(a) => out.push(a.clone()),
            Formula::Neg(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// All subformulas, including `self`.
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut out = vec![self.clone()];
        match self {
            Formula::Atom(_) => {}
            Formula::Neg(f) => out.extend(f.subformulas()),
            Formula::And(a, b) | Formula::Or(a, b) => {
                out.extend(a.subformulas());
                out.extend(b.subformulas());
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Neg(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Parse a formula. `~` binds tightest, then `&`, then `|`; binary
    /// operators associate to the left.
    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        let mut p = Parser::new(text)?;
        let f = p.or_expr()?;
        p.expect_end()?;
        Ok(f)
    }

    fn prec(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Neg(_) | Formula::Atom(_) => 3,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Formula::Atom(a) => f.write_str(a)?,
            Formula::Neg(x) => {
                f.write_str("~")?;
                x.fmt_prec(f, 3)?;
            }
            // left operand may share the level, right operand may not
            Formula::And(a, b) => {
                a.fmt_prec(f, 2)?;
                f.write_str(" & ")?;
                b.fmt_prec(f, 3)?;
            }
            Formula::Or(a, b) => {
                a.fmt_prec(f, 1)?;
                f.write_str(" | ")?;
                b.fmt_prec(f, 2)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

/// `B1, ..., Bn |- A`; the antecedent stands for `B1 & (B2 & (... & Bn))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub gamma: Vec<Formula>,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(ante: Formula, succedent: Formula) -> Self {
        Sequent {
            gamma: vec![ante],
            succedent,
        }
    }

    /// The antecedent as one right-nested conjunction.
    pub fn antecedent(&self) -> Formula {
        let mut it = self.gamma.iter().rev();
        let last = it.next().expect("nonempty antecedent").clone();
        it.fold(last, |acc, f| f.clone().and(acc))
    }

    /// Same judgement once the antecedent is expanded.
    pub fn same_as(&self, other: &Sequent) -> bool {
        self.succedent == other.succedent && self.antecedent() == other.antecedent()
    }

    pub fn atoms(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .gamma
            .iter()
            .chain(std::iter::once(&self.succedent))
            .flat_map(|f| f.atoms())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn parse(text: &str) -> Result<Sequent, ParseError> {
        let mut p = Parser::new(text)?;
        let mut gamma = vec![p.or_expr()?];
        while p.eat(&Tok::Comma) {
            gamma.push(p.or_expr()?);
        }
        if !p.eat(&Tok::Turnstile) {
            return Err(p.error("expected `|-`"));
        }
        let succedent = p.or_expr()?;
        p.expect_end()?;
        Ok(Sequent { gamma, succedent })
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gamma.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, " |- {}", self.succedent)
    }
}

impl FromStr for Sequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sequent::parse(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    LParen,
    RParen,
    Comma,
    Turnstile,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        let mut toks = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some((i, ch)) = chars.next() {
            let tok = match ch {
                c if c.is_whitespace() => continue,
                '~' => Tok::Not,
                '&' => Tok::And,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '|' => {
                    if chars.peek().map(|&(_, c)| c) == Some('-') {
                        chars.next();
                        Tok::Turnstile
                    } else {
                        Tok::Or
                    }
                }
                c if c.is_ascii_alphabetic() => {
                    let mut s = c.to_string();
                    while let Some(&(_, c)) = chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            s.push(c);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(s)
                }
                c => {
                    return Err(ParseError::Syntax {
                        pos: i,
                        msg: format!("unexpected character `{c}`"),
                    })
                }
            };
            toks.push((i, tok));
        }
        Ok(Parser {
            toks,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn error(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.offset(),
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }

    fn or_expr(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and_expr()?;
        while self.eat(&Tok::Or) {
            f = f.or(self.and_expr()?);
        }
        Ok(f)
    }

    fn and_expr(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.eat(&Tok::And) {
            f = f.and(self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Not) {
            return Ok(self.unary()?.neg());
        }
        if self.eat(&Tok::LParen) {
            let f = self.or_expr()?;
            if !self.eat(&Tok::RParen) {
                return Err(self.error("expected `)`"));
            }
            return Ok(f);
        }
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Formula::Atom(s))
            }
            Some(_) => Err(self.error("expected a formula")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Formula {
        Formula::atom(s)
    }

    #[test]
    fn precedence_and_negation() {
        assert_eq!(
            Formula::parse("~(~A & ~B)").unwrap(),
            a("A").neg().and(a("B").neg()).neg()
        );
        assert_eq!(
            Formula::parse("A & B | C").unwrap(),
            a("A").and(a("B")).or(a("C"))
        );
        assert_eq!(
            Formula::parse("A | B | C").unwrap(),
            a("A").or(a("B")).or(a("C"))
        );
        assert_eq!(Formula::parse("~~A").unwrap(), a("A").neg().neg());
    }

    #[test]
    fn printing_minimal_parentheses() {
        for s in ["A & (~A | B)", "A | (B | C)", "~(A & B) | C", "A & B & C", "x_1 | ~~y2"] {
            let f = Formula::parse(s).unwrap();
            assert_eq!(f.to_string(), s);
            assert_eq!(Formula::parse(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn sequents() {
        let s = Sequent::parse("A, ~A |- B").unwrap();
        assert_eq!(s.gamma, vec![a("A"), a("A").neg()]);
        assert_eq!(s.succedent, a("B"));
        assert_eq!(s.antecedent(), a("A").and(a("A").neg()));
        let t = Sequent::parse("A, B, C |- D").unwrap();
        assert_eq!(t.antecedent(), a("A").and(a("B").and(a("C"))));
        assert_eq!(t.to_string(), "A, B, C |- D");
        assert!(Sequent::parse("A & (B, C) |- D").is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match Formula::parse("A & ") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            e => panic!("{e:?}"),
        }
        match Formula::parse("A $ B") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 2),
            e => panic!("{e:?}"),
        }
        assert!(Formula::parse("(A").is_err());
        assert!(Formula::parse("A B").is_err());
        assert!(Sequent::parse("A").is_err());
        assert!(Formula::parse("1A").is_err());
    }
}
