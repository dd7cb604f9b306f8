use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::GoedelError;
use crate::syntax::{lex, parse_formula, render, Formula, Lexeme};

/// Token alphabet; a token's code digit is its position plus one.
pub const ALPHABET: [&str; 17] = [
    "~", "&", "(", ")", ",", "exists", ".", "x", "y", "z", "Prf", "Diag", ";", "#", "d0", "d1",
    "->",
];

pub const BASE: u32 = ALPHABET.len() as u32;

pub const SEPARATOR: &str = ";";

/// 1-based alphabet index of a token.
pub fn token_index(token: &str) -> Option<u32> {
    ALPHABET
        .iter()
        .position(|t| *t == token)
        .map(|i| i as u32 + 1)
}

/// Bijective base-17 value of a nonempty token sequence.
pub fn encode<S: AsRef<str>>(tokens: &[S]) -> Result<BigUint, GoedelError> {
    if tokens.is_empty() {
        return Err(GoedelError::EmptySequence);
    }
    let mut n = BigUint::zero();
    for t in tokens {
        let t = t.as_ref();
        let digit = token_index(t).ok_or_else(|| GoedelError::UnknownToken(t.to_string()))?;
        n = n * BASE + digit;
    }
    Ok(n)
}

/// Inverse of [`encode`]; every positive natural names exactly one sequence.
pub fn decode(n: &BigUint) -> Result<Vec<&'static str>, GoedelError> {
    if n.is_zero() {
        return Err(GoedelError::ZeroCode);
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    while !n.is_zero() {
        let r = (&n % BASE).to_u32().expect("digit fits");
        n /= BASE;
        let digit = if r == 0 {
            n -= 1u32;
            BASE
        } else {
            r
        };
        out.push(ALPHABET[digit as usize - 1]);
    }
    out.reverse();
    Ok(out)
}

fn numeral_tokens(n: &BigUint, out: &mut Vec<&'static str>) {
    out.push("#");
    if n.is_zero() {
        out.push("d0");
        return;
    }
    for i in (0..n.bits()).rev() {
        out.push(if n.bit(i) { "d1" } else { "d0" });
    }
}

/// Token stream of a formula: its rendering, with numerals spelled in binary.
pub fn formula_tokens(f: &Formula) -> Result<Vec<&'static str>, GoedelError> {
    let text = render(f);
    let lexemes = lex(&text).map_err(|e| GoedelError::Syntax(e.to_string()))?;
    let mut out = Vec::with_capacity(lexemes.len());
    for s in lexemes {
        let symbol = match &s.lexeme {
            Lexeme::Ident(name) => name.as_str(),
            Lexeme::Natural(n) => {
                numeral_tokens(n, &mut out);
                continue;
            }
            Lexeme::Exists => "exists",
            Lexeme::Not => "~",
            Lexeme::And => "&",
            Lexeme::Implies => "->",
            Lexeme::LParen => "(",
            Lexeme::RParen => ")",
            Lexeme::Comma => ",",
            Lexeme::Dot => ".",
            Lexeme::Forall => "forall",
            Lexeme::Or => "|",
            Lexeme::Iff => "<->",
        };
        match token_index(symbol) {
            Some(i) if !matches!(symbol, ";" | "#" | "d0" | "d1") => {
                out.push(ALPHABET[i as usize - 1])
            }
            _ => return Err(GoedelError::Unexpressible(symbol.to_string())),
        }
    }
    Ok(out)
}

/// The Gödel number of a formula.
pub fn goedel_number(f: &Formula) -> Result<BigUint, GoedelError> {
    encode(&formula_tokens(f)?)
}

/// Parses a token stream back into a formula. Only streams produced by
/// [`formula_tokens`] are accepted, so distinct numbers never decode to the
/// same formula.
pub fn formula_from_tokens(tokens: &[&str]) -> Option<Formula> {
    let mut text = String::new();
    let mut i = 0;
    while i < tokens.len() {
        let t = tokens[i];
        i += 1;
        match t {
            "#" => {
                let mut n = BigUint::zero();
                let start = i;
                while i < tokens.len() && matches!(tokens[i], "d0" | "d1") {
                    n = n * 2u32 + u32::from(tokens[i] == "d1");
                    i += 1;
                }
                if i == start {
                    return None;
                }
                text.push_str(&n.to_string());
            }
            "d0" | "d1" | ";" => return None,
            other => text.push_str(other),
        }
        text.push(' ');
    }
    let f = parse_formula(&text).ok()?;
    (formula_tokens(&f).ok()?.as_slice() == tokens).then_some(f)
}

/// The formula a number codes, if any.
pub fn decode_formula(n: &BigUint) -> Option<Formula> {
    formula_from_tokens(&decode(n).ok()?)
}
