//! The inverse of `F_ε₀`, the slow function `F⋄`, the hierarchy built on top
//! of it, and the arithmetic shell of slow proof pairs.

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::hierarchy::{
    evaluate, f_eps0_eval, fgh_eval, hierarchy_eval, refutes_f_eps0_at_most, BaseFunction, Budget, EvalOutcome, Growth,
    Halt, Meter, SuccessorBase,
};
use crate::ordinal::{omega_tower, Ordinal};

/// `⟨x,y⟩ = (x+y)(x+y+1)/2 + y`.
pub fn cantor_pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    ((&s * (&s + 1u32)) >> 1u32) + y
}

pub fn cantor_unpair(p: &BigUint) -> (BigUint, BigUint) {
    // largest w with w(w+1)/2 <= p
    let w = ((p * 8u32 + 1u32).sqrt() - 1u32) >> 1u32;
    let t = (&w * (&w + 1u32)) >> 1u32;
    let y = p - t;
    let x = w - &y;
    (x, y)
}

/// Why a candidate `z` fails `F_ε₀(z) ≤ x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// The evaluation completed with a value above `x`.
    Exact { value: BigUint },
    /// `F_ε₀(z) ≥ 2^{z+1} > x`.
    PowerBound,
    /// Capped evaluation of `F_ε₀(z)` crossed the cap.
    Capped { lower_bound: BigUint },
    /// `F_ε₀(z) ≥ F_ω(z)` and capped evaluation of `F_ω(z)` crossed the cap.
    OmegaBound { lower_bound: BigUint },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseCertificate {
    pub x: BigUint,
    pub value: u64,
    /// `F_ε₀(value) = w ≤ x`, when some candidate qualifies.
    pub witness: Option<BigUint>,
    /// The least non-qualifying candidate. `F_ε₀` is increasing, so every
    /// larger candidate fails as well.
    pub refuted: u64,
    pub refutation: Refutation,
}

// Capped evaluations here never need a step limit: they either finish or
// cross the cap after a handful of rewrites.
const UNMETERED: u64 = u64::MAX;

/// `F_ε₀⁻¹(x) = max({z ≤ x | F_ε₀(z) ≤ x} ∪ {0})` with a certificate.
pub fn f_eps0_inverse_certified(x: &BigUint) -> InverseCertificate {
    let budget = Budget::new(x.bits() + 1, UNMETERED);
    let mut witness = None;
    let mut z: u64 = 0;
    loop {
        match check_candidate(z, x, budget) {
            Ok(w) => witness = Some(w),
            Err(refutation) => {
                return InverseCertificate {
                    x: x.clone(),
                    value: z.saturating_sub(1),
                    witness,
                    refuted: z,
                    refutation,
                }
            }
        }
        z += 1;
    }
}

pub fn f_eps0_inverse(x: &BigUint) -> BigUint {
    BigUint::from(f_eps0_inverse_certified(x).value)
}

fn check_candidate(z: u64, x: &BigUint, budget: Budget) -> Result<BigUint, Refutation> {
    let zb = BigUint::from(z);
    if refutes_f_eps0_at_most(&zb, x) {
        return Err(Refutation::PowerBound);
    }
    let z = usize::try_from(z).expect("candidate fits in usize");
    if z >= 2 {
        // The direct evaluation of F_{w_{z+1}}(z) sits in a limit-dispatch
        // chain of length about (z+1)^^z before its argument moves, so go
        // through F_w(z) <= F_e0(z) first.
        match fgh_eval(&Ordinal::omega(), &zb, budget) {
            EvalOutcome::Exceeded { lower_bound } => return Err(Refutation::OmegaBound { lower_bound }),
            EvalOutcome::Value(v) if &v > x => return Err(Refutation::OmegaBound { lower_bound: v }),
            _ => {}
        }
    }
    match f_eps0_eval(z, budget) {
        EvalOutcome::Value(w) if &w <= x => Ok(w),
        EvalOutcome::Value(value) => Err(Refutation::Exact { value }),
        EvalOutcome::Exceeded { lower_bound } => Err(Refutation::Capped { lower_bound }),
        EvalOutcome::StepLimit => unreachable!("unmetered evaluation hit a step limit"),
    }
}

/// `F⋄(x) = F_{ω_{F_ε₀⁻¹(x)+1}}(x)`.
pub fn f_diamond(x: &BigUint, budget: Budget) -> EvalOutcome {
    let z = f_eps0_inverse_certified(x).value as usize;
    fgh_eval(&omega_tower(z + 1), x, budget)
}

/// `F⋄` as the base of a hierarchy. Nested work is charged to the outer meter.
#[derive(Clone, Copy, Debug, Default)]
pub struct DiamondBase;

impl BaseFunction for DiamondBase {
    fn name(&self) -> String {
        "F_diamond".into()
    }

    fn growth(&self) -> Growth {
        Growth::AboveSquare
    }

    fn apply(&self, x: &BigUint, meter: &mut Meter) -> Result<BigUint, Halt> {
        let z = f_eps0_inverse_certified(x).value as usize;
        evaluate(&SuccessorBase, &omega_tower(z + 1), &BigUint::one(), x, meter, None)
    }
}

/// `F⋄_{ε₀+a}(x)`.
pub fn slow_hierarchy_eval(a: &Ordinal, x: &BigUint, budget: Budget) -> EvalOutcome {
    hierarchy_eval(&DiamondBase, a, &BigUint::one(), x, budget)
}

/// The arithmetic part of a slow proof `⟨q,N⟩`: the pair and, when `N` is a
/// value of `F_ε₀`, the stage `n` with `F_ε₀(n) = N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlowProofShape {
    pub q: BigUint,
    pub n_bound: BigUint,
    pub stage: Option<u64>,
}

impl Serialize for SlowProofShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SlowProofShape", 3)?;
        st.serialize_field("q", &self.q.to_string())?;
        st.serialize_field("N", &self.n_bound.to_string())?;
        st.serialize_field("stage", &self.stage)?;
        st.end()
    }
}

/// Unpairs `p` and recovers the stage. Never looks at what `q` encodes.
pub fn slow_proof_shape(p: &BigUint) -> SlowProofShape {
    let (q, n_bound) = cantor_unpair(p);
    let cert = f_eps0_inverse_certified(&n_bound);
    let stage = match &cert.witness {
        Some(w) if *w == n_bound => Some(cert.value),
        _ => None,
    };
    SlowProofShape { q, n_bound, stage }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(cantor_pair(&n(0), &n(0)), n(0));
        assert_eq!(cantor_pair(&n(1), &n(1)), n(4));
        assert_eq!(cantor_unpair(&n(4)), (n(1), n(1)));
        assert_eq!(cantor_pair(&n(1), &n(0)), n(1));
        assert_eq!(cantor_pair(&n(0), &n(1)), n(2));
    }

    #[test]
    fn pairing_is_a_bijection_on_a_prefix() {
        let mut seen = std::collections::HashSet::new();
        for p in 0u64..2000 {
            let (x, y) = cantor_unpair(&n(p));
            assert_eq!(cantor_pair(&x, &y), n(p));
            assert!(seen.insert((x, y)));
        }
    }

    #[test]
    fn inverse_examples() {
        let c = f_eps0_inverse_certified(&n(0));
        assert_eq!((c.value, c.refuted), (0, 0));
        assert_eq!(c.refutation, Refutation::Exact { value: n(1) });
        assert_eq!(c.witness, None);

        let c = f_eps0_inverse_certified(&n(1));
        assert_eq!((c.value, c.refuted, c.witness.clone()), (0, 1, Some(n(1))));
        assert_eq!(c.refutation, Refutation::PowerBound);

        let big = num_traits::pow(n(10), 100);
        let c = f_eps0_inverse_certified(&big);
        assert_eq!(c.value, 0);
        assert!(matches!(c.refutation, Refutation::Capped { ref lower_bound } if *lower_bound > big));
    }

    #[test]
    fn diamond_values() {
        let d = Budget::default();
        assert_eq!(f_diamond(&n(0), d), EvalOutcome::Value(n(1)));
        assert_eq!(f_diamond(&n(1), d), EvalOutcome::Value(n(7)));
        assert!(matches!(
            f_diamond(&n(2), Budget::with_bits(1_000_000)),
            EvalOutcome::Exceeded { .. }
        ));
    }

    #[test]
    fn slow_hierarchy_values() {
        let d = Budget::default();
        assert_eq!(
            slow_hierarchy_eval(&Ordinal::zero(), &n(1), d),
            EvalOutcome::Value(n(7))
        );
        assert_eq!(slow_hierarchy_eval(&Ordinal::one(), &n(0), d), EvalOutcome::Value(n(1)));
        let w = slow_hierarchy_eval(&parse("w").unwrap(), &n(2), d);
        let three = slow_hierarchy_eval(&parse("3").unwrap(), &n(2), d);
        assert!(matches!(w, EvalOutcome::Exceeded { .. }));
        assert_eq!(w, three);
    }

    #[test]
    fn proof_shapes() {
        let s = slow_proof_shape(&cantor_pair(&n(17), &n(1)));
        assert_eq!(
            s,
            SlowProofShape {
                q: n(17),
                n_bound: n(1),
                stage: Some(0)
            }
        );
        let s = slow_proof_shape(&cantor_pair(&n(5), &n(2)));
        assert_eq!(
            s,
            SlowProofShape {
                q: n(5),
                n_bound: n(2),
                stage: None
            }
        );
        let s = slow_proof_shape(&n(0));
        assert_eq!(
            s,
            SlowProofShape {
                q: n(0),
                n_bound: n(0),
                stage: None
            }
        );
        let json = serde_json::to_string(&slow_proof_shape(&cantor_pair(&n(17), &n(1)))).unwrap();
        assert_eq!(json, r#"{"q":"17","N":"1","stage":0}"#);
    }
}
