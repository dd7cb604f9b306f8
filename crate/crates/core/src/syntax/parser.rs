use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use super::{Formula, SyntaxError, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lexeme {
    Ident(String),
    Natural(BigUint),
    Forall,
    Exists,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Comma,
    Dot,
}

impl fmt::Display for Lexeme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lexeme::Ident(s) => write!(f, "identifier {s:?}"),
            Lexeme::Natural(n) => write!(f, "numeral {n}"),
            Lexeme::Forall => f.write_str("\"forall\""),
            Lexeme::Exists => f.write_str("\"exists\""),
            Lexeme::Not => f.write_str("\"~\""),
            Lexeme::And => f.write_str("\"&\""),
            Lexeme::Or => f.write_str("\"|\""),
            Lexeme::Implies => f.write_str("\"->\""),
            Lexeme::Iff => f.write_str("\"<->\""),
            Lexeme::LParen => f.write_str("\"(\""),
            Lexeme::RParen => f.write_str("\")\""),
            Lexeme::Comma => f.write_str("\",\""),
            Lexeme::Dot => f.write_str("\".\""),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub pos: usize,
    pub lexeme: Lexeme,
}

pub fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (lexeme, len) = match c {
            '~' => (Lexeme::Not, 1),
            '&' => (Lexeme::And, 1),
            '|' => (Lexeme::Or, 1),
            '(' => (Lexeme::LParen, 1),
            ')' => (Lexeme::RParen, 1),
            ',' => (Lexeme::Comma, 1),
            '.' => (Lexeme::Dot, 1),
            '-' if matches!(chars.get(i + 1), Some((_, '>'))) => (Lexeme::Implies, 2),
            '<' if matches!(chars.get(i + 1), Some((_, '-')))
                && matches!(chars.get(i + 2), Some((_, '>'))) =>
            {
                (Lexeme::Iff, 3)
            }
            c if c.is_ascii_alphabetic() => {
                let end = chars[i..]
                    .iter()
                    .position(|(_, c)| !c.is_ascii_alphanumeric())
                    .map_or(chars.len(), |p| i + p);
                let word: String = chars[i..end].iter().map(|(_, c)| *c).collect();
                let lexeme = match word.as_str() {
                    "forall" => Lexeme::Forall,
                    "exists" => Lexeme::Exists,
                    _ => Lexeme::Ident(word),
                };
                (lexeme, end - i)
            }
            c if c.is_ascii_digit() => {
                let end = chars[i..]
                    .iter()
                    .position(|(_, c)| !c.is_ascii_digit())
                    .map_or(chars.len(), |p| i + p);
                let digits: String = chars[i..end].iter().map(|(_, c)| *c).collect();
                let value = digits.parse::<BigUint>().expect("ascii digits");
                (Lexeme::Natural(value), end - i)
            }
            ch => return Err(SyntaxError::UnexpectedChar { pos, ch }),
        };
        out.push(Spanned { pos, lexeme });
        i += len;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Lexeme> {
        self.tokens.get(self.at).map(|t| &t.lexeme)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn found(&self) -> String {
        self.peek()
            .map_or_else(|| "end of input".to_string(), |l| l.to_string())
    }

    fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError::Unexpected {
            pos: self.pos(),
            expected: expected.to_string(),
            found: self.found(),
        }
    }

    fn eat(&mut self, lexeme: &Lexeme) -> bool {
        if self.peek() == Some(lexeme) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lexeme: &Lexeme) -> Result<(), SyntaxError> {
        if self.eat(lexeme) {
            Ok(())
        } else {
            Err(self.error(&lexeme.to_string()))
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.imp()?;
        while self.eat(&Lexeme::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.or()?;
        if self.eat(&Lexeme::Implies) {
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.and()?;
        while self.eat(&Lexeme::Or) {
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.eat(&Lexeme::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek() {
            Some(Lexeme::Not) => {
                self.at += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Lexeme::LParen) => {
                self.at += 1;
                let inner = self.formula()?;
                self.expect(&Lexeme::RParen)?;
                Ok(inner)
            }
            Some(Lexeme::Forall) | Some(Lexeme::Exists) => {
                let universal = self.peek() == Some(&Lexeme::Forall);
                self.at += 1;
                let var = self.ident()?;
                self.expect(&Lexeme::Dot)?;
                let body = self.unary()?;
                Ok(if universal {
                    Formula::forall(var, body)
                } else {
                    Formula::exists(var, body)
                })
            }
            Some(Lexeme::Ident(_)) => self.atom(),
            _ => Err(self.error("formula")),
        }
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Lexeme::Ident(name)) => {
                let name = name.clone();
                self.at += 1;
                Ok(name)
            }
            _ => Err(self.error("identifier")),
        }
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        let name = self.ident()?;
        if !self.eat(&Lexeme::LParen) {
            return Ok(Formula::Atom(name));
        }
        let mut args = vec![self.term()?];
        while self.eat(&Lexeme::Comma) {
            args.push(self.term()?);
        }
        self.expect(&Lexeme::RParen)?;
        Ok(Formula::Pred(name, args))
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        match self.peek() {
            Some(Lexeme::Ident(name)) => {
                let t = Term::Var(name.clone());
                self.at += 1;
                Ok(t)
            }
            Some(Lexeme::Natural(n)) => {
                let t = Term::Numeral(n.clone());
                self.at += 1;
                Ok(t)
            }
            _ => Err(self.error("term")),
        }
    }
}

/// Parses a formula and checks that every predicate symbol has one arity.
pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        at: 0,
        end: text.len(),
    };
    let f = parser.formula()?;
    if parser.at < parser.tokens.len() {
        return Err(parser.error("end of input"));
    }
    f.collect_arities(&mut BTreeMap::new())?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn diaz_implication() {
        let expected = Formula::implies(
            Formula::and(Formula::atom("P"), Formula::not(Formula::atom("P"))),
            Formula::atom("Q"),
        );
        assert_eq!(p("(P & ~P) -> Q"), expected);
    }

    #[test]
    fn single_atom() {
        assert_eq!(p("P"), Formula::atom("P"));
    }

    #[test]
    fn universal_implication() {
        let expected = Formula::forall(
            "x",
            Formula::implies(Formula::unary("F", "x"), Formula::unary("G", "x")),
        );
        assert_eq!(p("forall x. (F(x) -> G(x))"), expected);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            p("P | Q & R"),
            Formula::or(
                Formula::atom("P"),
                Formula::and(Formula::atom("Q"), Formula::atom("R"))
            )
        );
        assert_eq!(
            p("P -> Q -> R"),
            Formula::implies(
                Formula::atom("P"),
                Formula::implies(Formula::atom("Q"), Formula::atom("R"))
            )
        );
        assert_eq!(
            p("P & Q & R"),
            Formula::and(
                Formula::and(Formula::atom("P"), Formula::atom("Q")),
                Formula::atom("R")
            )
        );
        assert_eq!(
            p("P <-> Q -> R | ~S"),
            Formula::iff(
                Formula::atom("P"),
                Formula::implies(
                    Formula::atom("Q"),
                    Formula::or(Formula::atom("R"), Formula::not(Formula::atom("S")))
                )
            )
        );
    }

    #[test]
    fn quantifier_body_is_unary() {
        assert_eq!(
            p("exists x. F(x) & G(y)"),
            Formula::and(
                Formula::exists("x", Formula::unary("F", "x")),
                Formula::unary("G", "y")
            )
        );
    }

    #[test]
    fn big_numerals() {
        let f = p("Prf(x, 123456789012345678901234567890)");
        let n: BigUint = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(
            f,
            Formula::pred("Prf", vec![Term::var("x"), Term::Numeral(n)])
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_formula("P & "),
            Err(SyntaxError::Unexpected {
                pos: 4,
                expected: "formula".into(),
                found: "end of input".into()
            })
        );
        assert_eq!(
            parse_formula("P $ Q"),
            Err(SyntaxError::UnexpectedChar { pos: 2, ch: '$' })
        );
        assert!(matches!(
            parse_formula("(P & Q"),
            Err(SyntaxError::Unexpected { pos: 6, .. })
        ));
        assert!(matches!(
            parse_formula("P Q"),
            Err(SyntaxError::Unexpected { pos: 2, .. })
        ));
    }

    #[test]
    fn arity_conflicts_are_rejected() {
        assert_eq!(
            parse_formula("F(x) & F(x,y)"),
            Err(SyntaxError::ArityConflict {
                name: "F".into(),
                first: 1,
                second: 2
            })
        );
        assert!(matches!(
            parse_formula("F & F(x)"),
            Err(SyntaxError::ArityConflict { .. })
        ));
    }
}
