//! Digit-list encoding of ordinal terms over the alphabet {1,2,3,4}.
//!
//! A nonzero ordinal is the concatenation of its summands, each written as
//! `4 ⌜exponent⌝ 3 ⌜coefficient⌝`; the coefficient is in binary, most
//! significant bit first, with bit 1 as digit `1` and bit 0 as digit `2`.
//! Zero is the single digit `2`. With this layout `⌜ω_n^α⌝` is `n` fours,
//! then `⌜α⌝`, then `n` copies of `3,1`.
//!
//! [`code_value`] reads a digit string as a bijective base-4 numeral.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, ParseError};
use crate::ordinal::{compare, Ordinal, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitString(Vec<u8>);

impl DigitString {
    pub fn new(digits: Vec<u8>) -> Result<Self, Error> {
        if let Some(i) = digits.iter().position(|d| !(1..=4).contains(d)) {
            return Err(Error::Digits(ParseError {
                position: i,
                message: format!("digit {} is outside 1..=4", digits[i]),
            }));
        }
        Ok(DigitString(digits))
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DigitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut digits = Vec::new();
        for (i, field) in s.split(',').enumerate() {
            let d: u8 = field.trim().parse().map_err(|_| {
                Error::Digits(ParseError {
                    position: i,
                    message: format!("'{}' is not a digit", field.trim()),
                })
            })?;
            digits.push(d);
        }
        DigitString::new(digits)
    }
}

pub fn encode_digits(a: &Ordinal) -> DigitString {
    let mut out = Vec::new();
    encode_into(a, &mut out);
    DigitString(out)
}

fn encode_into(a: &Ordinal, out: &mut Vec<u8>) {
    if a.is_zero() {
        out.push(2);
        return;
    }
    for t in a.terms() {
        out.push(4);
        encode_into(&t.exponent, out);
        out.push(3);
        let bits = t.coefficient.bits();
        for i in (0..bits).rev() {
            out.push(if t.coefficient.bit(i) { 1 } else { 2 });
        }
    }
}

pub fn decode_digits(d: &DigitString) -> Result<Ordinal, Error> {
    let mut dec = Decoder { digits: &d.0, pos: 0 };
    let o = dec.ordinal().map_err(Error::Digits)?;
    if dec.pos != d.0.len() {
        return Err(Error::Digits(dec.error("trailing digits after a complete term")));
    }
    Ok(o)
}

struct Decoder<'a> {
    digits: &'a [u8],
    pos: usize,
}

impl Decoder<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn ordinal(&mut self) -> Result<Ordinal, ParseError> {
        match self.digits.get(self.pos) {
            Some(2) => {
                self.pos += 1;
                return Ok(Ordinal::zero());
            }
            Some(4) => {}
            Some(_) => return Err(self.error("a term must start with 4 (summand) or be 2 (zero)")),
            None => return Err(self.error("unexpected end of digits")),
        }
        let mut terms: Vec<Term> = Vec::new();
        while self.digits.get(self.pos) == Some(&4) {
            let start = self.pos;
            self.pos += 1;
            let exponent = self.ordinal()?;
            if self.digits.get(self.pos) != Some(&3) {
                return Err(self.error("expected 3 after an exponent"));
            }
            self.pos += 1;
            if self.digits.get(self.pos) != Some(&1) {
                return Err(self.error("a coefficient must start with digit 1"));
            }
            let mut coefficient = BigUint::zero();
            while let Some(&d @ (1 | 2)) = self.digits.get(self.pos) {
                coefficient <<= 1u32;
                if d == 1 {
                    coefficient += 1u32;
                }
                self.pos += 1;
            }
            if let Some(prev) = terms.last() {
                if compare(&prev.exponent, &exponent) != std::cmp::Ordering::Greater {
                    return Err(ParseError {
                        position: start,
                        message: "exponents are not strictly decreasing".into(),
                    });
                }
            }
            terms.push(Term { exponent, coefficient });
        }
        Ok(Ordinal::from_terms_unchecked(terms))
    }
}

/// Bijective base-4 value; the last digit is the least significant.
pub fn code_value(d: &DigitString) -> BigUint {
    d.0.iter().fold(BigUint::zero(), |acc, &digit| (acc << 2u32) + digit)
}

/// `code_value(encode_digits(a))`.
pub fn code_of(a: &Ordinal) -> BigUint {
    code_value(&encode_digits(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::omega_stack;
    use crate::syntax::parse;

    fn ds(v: &[u8]) -> DigitString {
        DigitString::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_encodings() {
        assert_eq!(encode_digits(&Ordinal::zero()), ds(&[2]));
        assert_eq!(encode_digits(&Ordinal::one()), ds(&[4, 2, 3, 1]));
        // 5 = 101b
        assert_eq!(encode_digits(&parse("5").unwrap()), ds(&[4, 2, 3, 1, 2, 1]));
        assert_eq!(encode_digits(&parse("w").unwrap()), ds(&[4, 4, 2, 3, 1, 3, 1]));
    }

    #[test]
    fn round_trip() {
        let a = parse("w^w + 1").unwrap();
        assert_eq!(decode_digits(&encode_digits(&a)).unwrap(), a);
    }

    #[test]
    fn omega_stack_layout() {
        for alpha in ["0", "1", "w^w + w*3 + 2", "w^(w^2 + 1)*6"] {
            let alpha = parse(alpha).unwrap();
            let inner = encode_digits(&alpha);
            for n in 0..5 {
                let mut expected = vec![4; n];
                expected.extend_from_slice(inner.digits());
                for _ in 0..n {
                    expected.extend_from_slice(&[3, 1]);
                }
                assert_eq!(encode_digits(&omega_stack(n, &alpha)).digits(), expected.as_slice());
            }
        }
    }

    #[test]
    fn code_value_examples() {
        assert_eq!(code_value(&ds(&[1])), BigUint::from(1u32));
        assert_eq!(code_value(&ds(&[4])), BigUint::from(4u32));
        assert_eq!(code_value(&ds(&[1, 1])), BigUint::from(5u32));
        assert_eq!(code_of(&Ordinal::one()), BigUint::from(4u32 * 64 + 2 * 16 + 3 * 4 + 1));
    }

    #[test]
    fn decode_rejects_malformed() {
        let cases: &[(&[u8], usize)] = &[
            (&[], 0),
            (&[1], 0),
            (&[4, 2, 3], 3),
            (&[4, 2, 1], 2),
            (&[4, 2, 3, 2], 3),
            (&[2, 2], 1),
            // 1 + w is not in normal form
            (&[4, 2, 3, 1, 4, 4, 2, 3, 1, 3, 1], 4),
            (&[4, 2, 3, 1, 4, 2, 3, 1], 4),
        ];
        for (digits, pos) in cases {
            match decode_digits(&ds(digits)) {
                Err(Error::Digits(e)) => assert_eq!(e.position, *pos, "{digits:?}: {e}"),
                other => panic!("{digits:?} decoded to {other:?}"),
            }
        }
    }

    #[test]
    fn digit_string_text() {
        let d: DigitString = "4, 2,3,1".parse().unwrap();
        assert_eq!(d.to_string(), "4,2,3,1");
        assert!("4,5".parse::<DigitString>().is_err());
        assert!("4,,1".parse::<DigitString>().is_err());
    }
}
