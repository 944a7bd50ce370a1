//! Text syntax for ordinals.
//!
//! ```text
//! ordinal := term ('+' term)* | '0'
//! term    := 'w' ('^' atom)? ('*' nat)? | 'w_' nat ('*' nat)? | nat
//! atom    := nat | 'w' | 'w_' nat | '(' ordinal ')'
//! nat     := [1-9][0-9]*
//! ```
//!
//! `w_k` is sugar for the tower `ω_k`. Non-normal sums such as `1 + w` are
//! accepted and normalized. `ω` is accepted as a synonym for `w`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::ParseError;
use crate::ordinal::{add, mul_nat, omega_pow, omega_stack, Ordinal};

pub const GRAMMAR: &str = "\
ordinal := term ('+' term)* | '0'
term    := 'w' ('^' atom)? ('*' nat)? | 'w_' nat ('*' nat)? | nat
atom    := nat | 'w' | 'w_' nat | '(' ordinal ')'
nat     := [1-9][0-9]*";

// Towers are materialized as nested terms; keep them small enough to be useful.
const MAX_TOWER: usize = 4096;

pub fn parse(text: &str) -> Result<Ordinal, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("expected an ordinal, found end of input"));
    }
    let o = p.ordinal()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(o),
        Some(c) => Err(p.error(format!("unexpected character '{c}'"))),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ordinal(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.term()?;
        while self.eat('+') {
            let t = self.term()?;
            acc = add(&acc, &t);
        }
        Ok(acc)
    }

    fn reject_epsilon(&self) -> Result<(), ParseError> {
        let rest: String = self.chars[self.pos..].iter().take(7).collect();
        let lower = rest.to_lowercase();
        if lower.starts_with('ε') || lower.starts_with("eps") || lower.starts_with("e0") || lower.starts_with("e_0") {
            return Err(self.error("ε₀ is not a term of the notation system (only ordinals below it are)"));
        }
        Ok(())
    }

    fn omega_symbol(&mut self) -> bool {
        if matches!(self.peek(), Some('w') | Some('ω')) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// After an omega symbol: `_k` tower suffix, if present.
    fn tower_suffix(&mut self) -> Result<Option<Ordinal>, ParseError> {
        if self.peek() != Some('_') {
            return Ok(None);
        }
        self.pos += 1;
        let start = self.pos;
        let k = self.nat()?;
        let k = usize::try_from(&k)
            .ok()
            .filter(|&k| k <= MAX_TOWER)
            .ok_or_else(|| ParseError {
                position: start,
                message: format!("tower height exceeds {MAX_TOWER}"),
            })?;
        Ok(Some(omega_stack(k, &Ordinal::one())))
    }

    fn term(&mut self) -> Result<Ordinal, ParseError> {
        self.skip_ws();
        self.reject_epsilon()?;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::finite(self.nat()?)),
            Some('w') | Some('ω') => {
                self.omega_symbol();
                let base = match self.tower_suffix()? {
                    Some(tower) => tower,
                    None => {
                        let exponent = if self.eat('^') { self.atom()? } else { Ordinal::one() };
                        omega_pow(&exponent)
                    }
                };
                if self.eat('*') {
                    self.skip_ws();
                    let c = self.nat()?;
                    Ok(mul_nat(&base, &c))
                } else {
                    Ok(base)
                }
            }
            Some('(') => Err(self.error("parentheses are only allowed in exponents")),
            Some(c) => Err(self.error(format!("expected a term, found '{c}'"))),
            None => Err(self.error("expected a term, found end of input")),
        }
    }

    fn atom(&mut self) -> Result<Ordinal, ParseError> {
        self.skip_ws();
        self.reject_epsilon()?;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::finite(self.nat()?)),
            Some('w') | Some('ω') => {
                self.omega_symbol();
                Ok(self.tower_suffix()?.unwrap_or_else(Ordinal::omega))
            }
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.ordinal()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) => Err(self.error(format!("expected an exponent, found '{c}'"))),
            None => Err(self.error("expected an exponent, found end of input")),
        }
    }

    fn nat(&mut self) -> Result<BigUint, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        if digits.is_empty() {
            return Err(ParseError {
                position: start,
                message: "expected a natural number".into(),
            });
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(ParseError {
                position: start,
                message: "leading zeros are not allowed".into(),
            });
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}

/// Canonical text: `w^w + w*2 + 1`.
pub fn render(a: &Ordinal) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in a.terms().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if t.exponent.is_zero() {
            out.push_str(&t.coefficient.to_string());
            continue;
        }
        out.push('w');
        if t.exponent != Ordinal::one() {
            out.push('^');
            if let Some(n) = t.exponent.as_finite() {
                out.push_str(&n.to_string());
            } else if t.exponent == Ordinal::omega() {
                out.push('w');
            } else {
                out.push('(');
                out.push_str(&render(&t.exponent));
                out.push(')');
            }
        }
        if !t.coefficient.is_one() {
            out.push('*');
            out.push_str(&t.coefficient.to_string());
        }
    }
    out
}
