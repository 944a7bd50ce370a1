//! Ordinals below ε₀ as Cantor normal form terms.
//!
//! An [`Ordinal`] is a finite list of summands `ω^e·c` with strictly
//! decreasing exponents and positive coefficients. Every constructor keeps
//! that invariant, so structural equality coincides with ordinal equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// One summand `ω^exponent · coefficient` of a normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: Ordinal,
    pub coefficient: BigUint,
}

/// Cloning is cheap: the summands are shared, so descending sequences that
/// differ only near the tail reuse the rest of each term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Arc<[Term]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Zero,
    Successor,
    Limit,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Zero => "zero",
            Kind::Successor => "successor",
            Kind::Limit => "limit",
        })
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::wrap(Vec::new())
    }

    pub fn one() -> Self {
        Ordinal::from(1u32)
    }

    /// ω itself.
    pub fn omega() -> Self {
        omega_pow(&Ordinal::one())
    }

    pub fn finite(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Ordinal::zero()
        } else {
            Ordinal::wrap(vec![Term {
                exponent: Ordinal::zero(),
                coefficient: n,
            }])
        }
    }

    /// Builds an ordinal from summands that must already be in normal form.
    pub fn from_terms(terms: Vec<Term>) -> Result<Self, &'static str> {
        let o = Ordinal::wrap(terms);
        o.validate()?;
        Ok(o)
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<Term>) -> Self {
        Ordinal::wrap(terms)
    }

    fn wrap(terms: Vec<Term>) -> Self {
        Ordinal { terms: terms.into() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        match &self.terms[..] {
            [] => true,
            [t] => t.exponent.is_zero(),
            _ => false,
        }
    }

    /// The natural-number value, if the ordinal is finite.
    pub fn as_finite(&self) -> Option<BigUint> {
        match &self.terms[..] {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_finite().and_then(|n| n.to_u64())
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn kind(&self) -> Kind {
        classify(self)
    }

    /// Checks every normal-form invariant, recursively.
    pub fn validate(&self) -> Result<(), &'static str> {
        for (i, t) in self.terms.iter().enumerate() {
            if t.coefficient.is_zero() {
                return Err("coefficient must be positive");
            }
            t.exponent.validate()?;
            if i > 0 && compare(&self.terms[i - 1].exponent, &t.exponent) != Ordering::Greater {
                return Err("exponents must be strictly decreasing");
            }
        }
        if let Some(e) = self.leading_exponent() {
            if compare(e, self) != Ordering::Less {
                return Err("leading exponent must lie below the ordinal");
            }
        }
        Ok(())
    }

    /// Nesting depth of exponents; 0 for finite ordinals.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .filter(|t| !t.exponent.is_zero())
            .map(|t| 1 + t.exponent.height())
            .max()
            .unwrap_or(0)
    }

    /// Number of summands, counted through all exponents.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|t| 1 + t.exponent.size()).sum()
    }

    /// Strips a trailing `+1`; `None` unless the ordinal is a successor.
    pub fn predecessor(&self) -> Option<Ordinal> {
        let last = self.terms.last()?;
        if !last.exponent.is_zero() {
            return None;
        }
        let mut terms = self.terms.to_vec();
        let last = terms.last_mut().unwrap();
        if last.coefficient.is_one() {
            terms.pop();
        } else {
            last.coefficient -= 1u32;
        }
        Some(Ordinal::wrap(terms))
    }

    pub fn successor(&self) -> Ordinal {
        add(self, &Ordinal::one())
    }
}

impl From<u32> for Ordinal {
    fn from(n: u32) -> Self {
        Ordinal::finite(BigUint::from(n))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::finite(BigUint::from(n))
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::finite(n)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::render(self))
    }
}

/// Lexicographic comparison of normal forms.
pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    if Arc::ptr_eq(&a.terms, &b.terms) {
        return Ordering::Equal;
    }
    for (x, y) in a.terms.iter().zip(b.terms.iter()) {
        let ord = compare(&x.exponent, &y.exponent).then_with(|| x.coefficient.cmp(&y.coefficient));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.terms.len().cmp(&b.terms.len())
}

/// Ordinal sum. Summands of `a` below the leading exponent of `b` are absorbed.
pub fn add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let Some(head) = b.terms.first() else {
        return a.clone();
    };
    let mut terms: Vec<Term> = Vec::with_capacity(a.terms.len() + b.terms.len());
    for t in a.terms.iter() {
        match compare(&t.exponent, &head.exponent) {
            Ordering::Greater => terms.push(t.clone()),
            Ordering::Equal => {
                terms.push(Term {
                    exponent: t.exponent.clone(),
                    coefficient: &t.coefficient + &head.coefficient,
                });
                terms.extend(b.terms[1..].iter().cloned());
                return Ordinal::wrap(terms);
            }
            Ordering::Less => break,
        }
    }
    terms.extend(b.terms.iter().cloned());
    Ordinal::wrap(terms)
}

/// `a · c` for a natural number `c`.
pub fn mul_nat(a: &Ordinal, c: &BigUint) -> Ordinal {
    if c.is_zero() || a.is_zero() {
        return Ordinal::zero();
    }
    let mut terms = a.terms.to_vec();
    terms[0].coefficient *= c;
    Ordinal::wrap(terms)
}

pub fn omega_pow(a: &Ordinal) -> Ordinal {
    Ordinal::wrap(vec![Term {
        exponent: a.clone(),
        coefficient: BigUint::one(),
    }])
}

/// `ω_n^a`: a stack of `n` ω's on top of `a`.
pub fn omega_stack(n: usize, a: &Ordinal) -> Ordinal {
    (0..n).fold(a.clone(), |acc, _| omega_pow(&acc))
}

/// `ω_n`, i.e. `omega_stack(n, 1)`.
pub fn omega_tower(n: usize) -> Ordinal {
    omega_stack(n, &Ordinal::one())
}

pub fn classify(a: &Ordinal) -> Kind {
    match a.terms.last() {
        None => Kind::Zero,
        Some(t) if t.exponent.is_zero() => Kind::Successor,
        Some(_) => Kind::Limit,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn o(s: &str) -> Ordinal {
        parse(s).unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&o("w"), &o("w")), Ordering::Equal);
        assert_eq!(compare(&o("w^2"), &o("w*3 + 5")), Ordering::Greater);
        assert_eq!(compare(&o("3"), &o("w")), Ordering::Less);
        assert_eq!(compare(&o("w^w"), &o("w^5*100")), Ordering::Greater);
        assert_eq!(compare(&o("w + 1"), &o("w")), Ordering::Greater);
    }

    #[test]
    fn add_examples() {
        assert_eq!(add(&o("w"), &o("1")), o("w + 1"));
        assert_eq!(add(&o("1"), &o("w")), o("w"));
        assert_eq!(add(&o("w^2 + w"), &o("w + 1")), o("w^2 + w*2 + 1"));
        assert_eq!(add(&o("w^2*3 + 5"), &o("w^3")), o("w^3"));
    }

    #[test]
    fn mul_nat_examples() {
        assert_eq!(mul_nat(&o("w + 1"), &3u32.into()), o("w*3 + 1"));
        assert_eq!(mul_nat(&o("w^w"), &1u32.into()), o("w^w"));
        assert_eq!(mul_nat(&o("5"), &4u32.into()), o("20"));
        assert!(mul_nat(&o("w^w + 7"), &0u32.into()).is_zero());
    }

    #[test]
    fn omega_pow_and_stack() {
        assert_eq!(omega_pow(&Ordinal::zero()), Ordinal::one());
        assert_eq!(omega_pow(&Ordinal::one()), Ordinal::omega());
        assert_eq!(omega_pow(&o("w")), o("w^w"));
        assert_eq!(omega_stack(0, &o("w + 1")), o("w + 1"));
        assert_eq!(omega_stack(2, &Ordinal::one()), o("w^w"));
        assert_eq!(omega_stack(1, &o("3")), o("w^3"));
        assert_eq!(omega_tower(3).height(), 3);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&Ordinal::zero()), Kind::Zero);
        assert_eq!(classify(&o("w^2 + 3")), Kind::Successor);
        assert_eq!(classify(&o("w*5")), Kind::Limit);
    }

    #[test]
    fn validate_rejects_broken_forms() {
        let w = Ordinal::omega();
        let bad = Ordinal::from_terms(vec![
            Term {
                exponent: Ordinal::zero(),
                coefficient: 1u32.into(),
            },
            Term {
                exponent: Ordinal::one(),
                coefficient: 1u32.into(),
            },
        ]);
        assert!(bad.is_err());
        let zero_coeff = Ordinal::from_terms(vec![Term {
            exponent: w,
            coefficient: 0u32.into(),
        }]);
        assert!(zero_coeff.is_err());
    }

    #[test]
    fn predecessor_strips_one() {
        assert_eq!(o("w + 2").predecessor(), Some(o("w + 1")));
        assert_eq!(o("w + 1").predecessor(), Some(o("w")));
        assert_eq!(o("w").predecessor(), None);
        assert_eq!(Ordinal::zero().predecessor(), None);
    }
}
