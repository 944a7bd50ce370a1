//! Fundamental sequences, the step-down relation, and a budgeted evaluator
//! for diagonal hierarchies over an arbitrary base function.
//!
//! The evaluator keeps an expression `H_{a1}^{i1}(H_{a2}^{i2}(...(v)))` as a
//! stack of frames over the current argument `v` and rewrites the innermost
//! frame until the stack is empty. Every base function is strictly
//! inflationary, so `v` never decreases; once it crosses the value cap the
//! final result is certified to be at least `v`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::ordinal::{classify, compare, omega_tower, Kind, Ordinal, Term};

/// `{a}(n)`. Successors step to their predecessor at every `n`; `{0}(n) = 0`.
pub fn fund_seq(a: &Ordinal, n: &BigUint) -> Ordinal {
    match classify(a) {
        Kind::Zero => Ordinal::zero(),
        Kind::Successor => a.predecessor().expect("successor"),
        Kind::Limit => {
            // a = beta + w^gamma * (k+1), gamma > 0 the smallest exponent.
            let terms = a.terms();
            let last = terms.last().unwrap();
            let mut out: Vec<Term> = terms[..terms.len() - 1].to_vec();
            let k = &last.coefficient - 1u32;
            if !k.is_zero() {
                out.push(Term {
                    exponent: last.exponent.clone(),
                    coefficient: k,
                });
            }
            // the new exponent is below every exponent kept in `out`
            out.push(match last.exponent.predecessor() {
                Some(delta) => Term {
                    exponent: delta,
                    coefficient: n + 1u32,
                },
                None => Term {
                    exponent: fund_seq(&last.exponent, n),
                    coefficient: BigUint::one(),
                },
            });
            Ordinal::from_terms_unchecked(out)
        }
    }
}

pub fn fund_seq_at(a: &Ordinal, n: u64) -> Ordinal {
    fund_seq(a, &BigUint::from(n))
}

/// `{ε₀}(n) = ω_{n+1}`.
pub fn eps0_fund_seq(n: usize) -> Ordinal {
    omega_tower(n + 1)
}

/// A witness `⟨δ₀,…,δ_k⟩` for `δ₀ →ₙ δ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepDownPath {
    pub ordinals: Vec<Ordinal>,
    pub index: BigUint,
}

impl StepDownPath {
    pub fn source(&self) -> &Ordinal {
        &self.ordinals[0]
    }

    pub fn target(&self) -> &Ordinal {
        self.ordinals.last().unwrap()
    }

    /// Number of fundamental-sequence steps, `k`.
    pub fn steps(&self) -> usize {
        self.ordinals.len() - 1
    }

    /// Re-checks `{δ_i}(n) = δ_{i+1}` along the whole path.
    pub fn verify(&self) -> bool {
        !self.ordinals.is_empty() && self.ordinals.windows(2).all(|w| fund_seq(&w[0], &self.index) == w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepDown {
    Path(StepDownPath),
    /// The descent passed strictly below the target.
    Refuted,
    /// The length or work cap ran out before a verdict.
    Exhausted {
        steps: usize,
    },
}

impl StepDown {
    pub fn path(self) -> Option<StepDownPath> {
        match self {
            StepDown::Path(p) => Some(p),
            _ => None,
        }
    }
}

pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// Bound on the summands copied while descending, summed over all steps.
/// Descents from towers widen their inner exponents by about one summand per
/// step, so the work per step keeps growing long before the length cap.
pub const DESCENT_WORK_CAP: u64 = 10_000_000;

/// Summands `fund_seq` copies: the widths of the nested last exponents.
fn spine_width(a: &Ordinal) -> u64 {
    let mut w = 0;
    let mut cur = a;
    while let Some(last) = cur.terms().last() {
        w += cur.terms().len() as u64;
        cur = &last.exponent;
    }
    w
}

/// Decides `a →ₙ b` by direct descent.
pub fn step_down(a: &Ordinal, n: &BigUint, b: &Ordinal, max_len: usize) -> StepDown {
    let mut path = vec![a.clone()];
    let mut work = 0u64;
    loop {
        let cur = path.last().unwrap();
        match compare(cur, b) {
            Ordering::Equal => {
                return StepDown::Path(StepDownPath {
                    ordinals: path,
                    index: n.clone(),
                })
            }
            Ordering::Less => return StepDown::Refuted,
            Ordering::Greater => {}
        }
        work += spine_width(cur);
        if path.len() > max_len || work > DESCENT_WORK_CAP {
            return StepDown::Exhausted { steps: path.len() - 1 };
        }
        let next = fund_seq(cur, n);
        path.push(next);
    }
}

/// True iff `b + {a}(n) = {b + a}(n)` is guaranteed: every exponent of `b`
/// is at least the leading exponent of `a`.
pub fn meshes(b: &Ordinal, a: &Ordinal) -> bool {
    match a.leading_exponent() {
        None => true,
        Some(lead) => b.terms().iter().all(|t| compare(&t.exponent, lead) != Ordering::Less),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Budget {
    pub max_value_bits: u64,
    pub max_steps: u64,
}

impl Budget {
    pub const DEFAULT_BITS: u64 = 1 << 20;
    pub const DEFAULT_STEPS: u64 = 10_000_000;

    pub fn new(max_value_bits: u64, max_steps: u64) -> Self {
        assert!(max_value_bits > 0 && max_steps > 0, "budget limits must be positive");
        Budget {
            max_value_bits,
            max_steps,
        }
    }

    pub fn with_bits(max_value_bits: u64) -> Self {
        Budget::new(max_value_bits, Self::DEFAULT_STEPS)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_BITS, Self::DEFAULT_STEPS)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalOutcome {
    Value(BigUint),
    /// The true value is at least `lower_bound`, which is `≥ 2^max_value_bits`.
    Exceeded {
        lower_bound: BigUint,
    },
    StepLimit,
}

impl EvalOutcome {
    pub fn value(&self) -> Option<&BigUint> {
        match self {
            EvalOutcome::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_definite(&self) -> bool {
        matches!(self, EvalOutcome::Value(_))
    }

    /// The best certified lower bound on the true value, if any.
    pub fn lower_bound(&self) -> Option<&BigUint> {
        match self {
            EvalOutcome::Value(v) => Some(v),
            EvalOutcome::Exceeded { lower_bound } => Some(lower_bound),
            EvalOutcome::StepLimit => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Halt {
    Exceeded(BigUint),
    StepLimit,
}

impl From<Halt> for EvalOutcome {
    fn from(h: Halt) -> Self {
        match h {
            Halt::Exceeded(lower_bound) => EvalOutcome::Exceeded { lower_bound },
            Halt::StepLimit => EvalOutcome::StepLimit,
        }
    }
}

/// Shared resource accounting for one evaluation, including nested
/// evaluations performed by a base function.
#[derive(Debug)]
pub struct Meter {
    max_bits: u64,
    max_steps: u64,
    used: u64,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            max_bits: budget.max_value_bits,
            max_steps: budget.max_steps,
            used: 0,
        }
    }

    pub fn max_bits(&self) -> u64 {
        self.max_bits
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.max_steps
    }

    /// Consumes one unit of work.
    pub fn charge(&mut self) -> Result<(), Halt> {
        if self.exhausted() {
            return Err(Halt::StepLimit);
        }
        self.used += 1;
        Ok(())
    }

    /// `Err(Exceeded(v))` once `v ≥ 2^max_bits`.
    pub fn check(&self, v: &BigUint) -> Result<(), Halt> {
        if v.bits() > self.max_bits {
            Err(Halt::Exceeded(v.clone()))
        } else {
            Ok(())
        }
    }

    pub fn cap(&self) -> BigUint {
        BigUint::one() << self.max_bits
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Growth {
    /// `g(n) > n`.
    AboveIdentity,
    /// `g(n) > n²`.
    AboveSquare,
}

/// A strictly monotone, strictly inflationary function on the naturals that
/// serves as level 0 of a hierarchy.
pub trait BaseFunction {
    fn name(&self) -> String;

    fn growth(&self) -> Growth;

    /// One application `g(x)`. Nested work must be charged to `meter`.
    fn apply(&self, x: &BigUint, meter: &mut Meter) -> Result<BigUint, Halt>;

    /// `g^count(x)`, stopping at the first iterate that reaches the cap.
    ///
    /// The first application is covered by the caller's rewrite step; every
    /// further application costs one unit of work.
    fn iterate(&self, x: &BigUint, count: &BigUint, meter: &mut Meter) -> Result<BigUint, Halt> {
        let mut v = x.clone();
        let mut left = count.clone();
        let mut first = true;
        while !left.is_zero() {
            if !first {
                meter.charge()?;
            }
            first = false;
            let next = self.apply(&v, meter)?;
            assert!(next > v, "base function {} is not inflationary at {v}", self.name());
            v = next;
            meter.check(&v)?;
            left -= 1u32;
        }
        Ok(v)
    }

    /// Closed form for `H_1^count(x)`, if the base admits one.
    fn iterate_level_one(&self, _x: &BigUint, _count: &BigUint, _meter: &Meter) -> Option<Result<BigUint, Halt>> {
        None
    }
}

/// `F₀(x) = x + 1`, the base of the fast-growing hierarchy.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuccessorBase;

impl BaseFunction for SuccessorBase {
    fn name(&self) -> String {
        "x+1".into()
    }

    fn growth(&self) -> Growth {
        Growth::AboveIdentity
    }

    fn apply(&self, x: &BigUint, _meter: &mut Meter) -> Result<BigUint, Halt> {
        Ok(x + 1u32)
    }

    fn iterate(&self, x: &BigUint, count: &BigUint, meter: &mut Meter) -> Result<BigUint, Halt> {
        let v = x + count;
        if v.bits() > meter.max_bits() {
            // Unit increments pass through the cap exactly.
            return Err(Halt::Exceeded(meter.cap()));
        }
        Ok(v)
    }

    // F_1^j(x) = 2^j (x+1) - 1
    fn iterate_level_one(&self, x: &BigUint, count: &BigUint, meter: &Meter) -> Option<Result<BigUint, Halt>> {
        let y = x + 1u32;
        let max_bits = meter.max_bits();
        // least j with 2^j y - 1 >= 2^max_bits
        let mut j = (max_bits + 1).saturating_sub(y.bits());
        if ((&y << j) - 1u32).bits() <= max_bits {
            j += 1;
        }
        let crosses = match count.to_u64() {
            Some(c) => c >= j,
            None => true,
        };
        if crosses {
            return Some(Err(Halt::Exceeded((&y << j) - 1u32)));
        }
        let c = count.to_u64().unwrap();
        Some(Ok((y << c) - 1u32))
    }
}

/// `g(n) = scale·n² + offset` with `offset ≥ 1`; a tame base for testing
/// hierarchy laws at feasible scale.
#[derive(Clone, Copy, Debug)]
pub struct QuadraticBase {
    pub scale: u32,
    pub offset: u32,
}

impl QuadraticBase {
    pub fn new(scale: u32, offset: u32) -> Self {
        assert!(scale >= 1 && offset >= 1, "quadratic base needs scale, offset >= 1");
        QuadraticBase { scale, offset }
    }
}

impl BaseFunction for QuadraticBase {
    fn name(&self) -> String {
        match self.scale {
            1 => format!("x^2+{}", self.offset),
            s => format!("{s}x^2+{}", self.offset),
        }
    }

    fn growth(&self) -> Growth {
        Growth::AboveSquare
    }

    fn apply(&self, x: &BigUint, _meter: &mut Meter) -> Result<BigUint, Halt> {
        Ok(x * x * self.scale + self.offset)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Base,
    SuccessorExpand,
    LimitDispatch,
    /// A level-one frame resolved by the base's closed form.
    ClosedForm,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Base => "base",
            Rule::SuccessorExpand => "successor-expand",
            Rule::LimitDispatch => "limit-dispatch",
            Rule::ClosedForm => "closed-form",
        })
    }
}

/// Decimal numerals longer than this many bits are elided in traces.
pub const TRACE_ELIDE_BITS: u64 = 4096;

/// State after one rewrite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub step: u64,
    /// Outermost frame first, each as `F_{<ordinal>}^{<iter>}`.
    pub stack: Vec<String>,
    /// Decimal value, or `~2^<bits>` above [`TRACE_ELIDE_BITS`].
    pub argument: String,
    pub argument_bits: u64,
    pub rule: Rule,
}

pub fn render_number(v: &BigUint, elide_above_bits: Option<u64>) -> String {
    match elide_above_bits {
        Some(limit) if v.bits() > limit => format!("~2^{}", v.bits()),
        _ => v.to_string(),
    }
}

#[derive(Clone, Debug)]
struct Frame {
    ordinal: Ordinal,
    count: BigUint,
}

/// `H_a^i(x)` over `base` with a fresh meter.
pub fn hierarchy_eval(base: &dyn BaseFunction, a: &Ordinal, i: &BigUint, x: &BigUint, budget: Budget) -> EvalOutcome {
    let mut meter = Meter::new(budget);
    match evaluate(base, a, i, x, &mut meter, None) {
        Ok(v) => EvalOutcome::Value(v),
        Err(h) => h.into(),
    }
}

/// As [`hierarchy_eval`], reporting each rewrite to `trace`.
pub fn hierarchy_eval_traced(
    base: &dyn BaseFunction,
    a: &Ordinal,
    i: &BigUint,
    x: &BigUint,
    budget: Budget,
    trace: &mut dyn FnMut(&TraceRecord),
) -> EvalOutcome {
    let mut meter = Meter::new(budget);
    match evaluate(base, a, i, x, &mut meter, Some(trace)) {
        Ok(v) => EvalOutcome::Value(v),
        Err(h) => h.into(),
    }
}

/// The rewriting engine behind every hierarchy in this crate. Work is charged
/// to a caller-supplied meter so base functions can nest evaluations.
pub fn evaluate(
    base: &dyn BaseFunction,
    a: &Ordinal,
    i: &BigUint,
    x: &BigUint,
    meter: &mut Meter,
    mut trace: Option<&mut dyn FnMut(&TraceRecord)>,
) -> Result<BigUint, Halt> {
    let mut v = x.clone();
    meter.check(&v)?;
    let mut stack: Vec<Frame> = Vec::new();
    if !i.is_zero() {
        stack.push(Frame {
            ordinal: a.clone(),
            count: i.clone(),
        });
    }
    let mut step = 0u64;
    while let Some(top) = stack.last_mut() {
        meter.charge()?;
        step += 1;
        let rule = match classify(&top.ordinal) {
            Kind::Zero => {
                let count = std::mem::take(&mut top.count);
                stack.pop();
                v = base.iterate(&v, &count, meter)?;
                Rule::Base
            }
            Kind::Successor => {
                let level_one = if top.ordinal == Ordinal::one() {
                    base.iterate_level_one(&v, &top.count, meter)
                } else {
                    None
                };
                match level_one {
                    Some(result) => {
                        stack.pop();
                        v = result?;
                        Rule::ClosedForm
                    }
                    None => {
                        let pred = top.ordinal.predecessor().unwrap();
                        pop_one(&mut stack);
                        stack.push(Frame {
                            ordinal: pred,
                            count: &v + 1u32,
                        });
                        Rule::SuccessorExpand
                    }
                }
            }
            Kind::Limit => {
                let next = fund_seq(&top.ordinal, &v);
                pop_one(&mut stack);
                stack.push(Frame {
                    ordinal: next,
                    count: BigUint::one(),
                });
                Rule::LimitDispatch
            }
        };
        meter.check(&v)?;
        if let Some(t) = trace.as_mut() {
            t(&TraceRecord {
                step,
                stack: stack
                    .iter()
                    .map(|f| format!("F_{{{}}}^{{{}}}", f.ordinal, f.count))
                    .collect(),
                argument: render_number(&v, Some(TRACE_ELIDE_BITS)),
                argument_bits: v.bits(),
                rule,
            });
        }
    }
    Ok(v)
}

fn pop_one(stack: &mut Vec<Frame>) {
    let top = stack.last_mut().unwrap();
    top.count -= 1u32;
    if top.count.is_zero() {
        stack.pop();
    }
}

/// `F_a(x)` in the fast-growing hierarchy.
pub fn fgh_eval(a: &Ordinal, x: &BigUint, budget: Budget) -> EvalOutcome {
    hierarchy_eval(&SuccessorBase, a, &BigUint::one(), x, budget)
}

/// `F_ε₀(x) = F_{ω_{x+1}}(x)`.
pub fn f_eps0_eval(x: usize, budget: Budget) -> EvalOutcome {
    fgh_eval(&eps0_fund_seq(x), &BigUint::from(x), budget)
}

/// Certified `F_ε₀(x) ≥ 2^{x+1}` for `x ≥ 1`, via `F_ε₀(x) ≥ F_2(x) = 2^{x+1}(x+1) - 1`.
pub fn f_eps0_lower_bound(x: &BigUint) -> Option<BigUint> {
    if x.is_zero() {
        return None;
    }
    let e = x.to_u64()?.checked_add(1)?;
    Some(BigUint::one() << e)
}

/// True when `F_ε₀(x) ≤ y` is refuted by [`f_eps0_lower_bound`] alone.
pub fn refutes_f_eps0_at_most(x: &BigUint, y: &BigUint) -> bool {
    if x.is_zero() {
        return false;
    }
    // 2^{x+1} > y  <=>  x + 1 >= bits(y)
    x + 1u32 >= BigUint::from(y.bits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn o(s: &str) -> Ordinal {
        parse(s).unwrap()
    }

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn fund_seq_examples() {
        assert_eq!(fund_seq_at(&o("w"), 2), o("3"));
        assert_eq!(fund_seq_at(&o("w^w"), 3), o("w^4"));
        assert_eq!(fund_seq_at(&o("w^2*2"), 1), o("w^2 + w*2"));
        assert_eq!(fund_seq_at(&Ordinal::zero(), 7), Ordinal::zero());
        assert_eq!(fund_seq_at(&o("w + 5"), 0), o("w + 4"));
        assert_eq!(fund_seq_at(&o("w + 5"), 9), o("w + 4"));
        assert_eq!(fund_seq_at(&o("w^(w + 1)"), 2), o("w^w*3"));
        assert_eq!(fund_seq_at(&o("w^w*2 + w^3"), 0), o("w^w*2 + w^2"));
    }

    #[test]
    fn eps0_fund_seq_examples() {
        assert_eq!(eps0_fund_seq(0), o("w"));
        assert_eq!(eps0_fund_seq(1), o("w^w"));
        assert_eq!(eps0_fund_seq(4), o("w_5"));
    }

    #[test]
    fn step_down_examples() {
        let p = step_down(&o("w"), &n(2), &o("3"), DEFAULT_PATH_CAP).path().unwrap();
        assert_eq!(p.ordinals, vec![o("w"), o("3")]);
        let p = step_down(&o("w^w"), &n(1), &Ordinal::zero(), DEFAULT_PATH_CAP)
            .path()
            .unwrap();
        let expected: Vec<Ordinal> = ["w^w", "w^2", "w*2", "w + 2", "w + 1", "w", "2", "1", "0"]
            .iter()
            .map(|s| o(s))
            .collect();
        assert_eq!(p.ordinals, expected);
        assert!(p.verify());
        assert_eq!(step_down(&o("3"), &n(2), &o("w"), DEFAULT_PATH_CAP), StepDown::Refuted);
        let refl = step_down(&o("w^w"), &n(4), &o("w^w"), DEFAULT_PATH_CAP).path().unwrap();
        assert_eq!(refl.steps(), 0);
        // w*2 -> w + 2 skips over w + 5
        assert_eq!(
            step_down(&o("w*2"), &n(1), &o("w + 5"), DEFAULT_PATH_CAP),
            StepDown::Refuted
        );
        assert!(matches!(
            step_down(&o("w^w"), &n(1), &Ordinal::zero(), 3),
            StepDown::Exhausted { steps: 3 }
        ));
    }

    #[test]
    fn meshes_examples() {
        assert!(meshes(&o("w^5"), &o("w*2")));
        assert_eq!(fund_seq_at(&o("w^5 + w*2"), 3), o("w^5 + w + 4"));
        assert!(!meshes(&o("w"), &o("w^2")));
        assert!(meshes(&Ordinal::zero(), &o("w^w")));
        assert!(meshes(&o("w^w"), &Ordinal::zero()));
        assert!(meshes(&o("w"), &o("w")));
    }

    #[test]
    fn fgh_small_values() {
        let d = Budget::default();
        assert_eq!(
            hierarchy_eval(&SuccessorBase, &Ordinal::zero(), &n(1), &n(5), d),
            EvalOutcome::Value(n(6))
        );
        assert_eq!(
            hierarchy_eval(&SuccessorBase, &o("2"), &n(1), &n(3), d),
            EvalOutcome::Value(n(63))
        );
        assert_eq!(fgh_eval(&o("1"), &n(4), d), EvalOutcome::Value(n(9)));
        assert_eq!(fgh_eval(&o("w"), &n(1), d), EvalOutcome::Value(n(7)));
        assert_eq!(fgh_eval(&Ordinal::zero(), &n(0), d), EvalOutcome::Value(n(1)));
        assert_eq!(
            hierarchy_eval(&SuccessorBase, &o("w"), &n(0), &n(9), d),
            EvalOutcome::Value(n(9))
        );
    }

    #[test]
    fn f_omega_of_two_exceeds_a_million_bits() {
        let out = hierarchy_eval(&SuccessorBase, &o("w"), &n(1), &n(2), Budget::with_bits(1_000_000));
        let EvalOutcome::Exceeded { lower_bound } = out else {
            panic!("{out:?}")
        };
        assert!(lower_bound.bits() > 1_000_000);
        // The bound is an honest F_1 iterate on the way from 402653183.
        let y = BigUint::from(402_653_184u64);
        let j = lower_bound.bits() - y.bits();
        assert_eq!(lower_bound, (y << j) - 1u32);
    }

    #[test]
    fn f_eps0_values() {
        assert_eq!(f_eps0_eval(0, Budget::default()), EvalOutcome::Value(n(1)));
        assert!(matches!(
            f_eps0_eval(1, Budget::with_bits(1 << 20)),
            EvalOutcome::Exceeded { .. }
        ));
        assert!(refutes_f_eps0_at_most(&n(10), &n(1000)));
        assert!(!refutes_f_eps0_at_most(&n(10), &n(2048)));
        assert!(refutes_f_eps0_at_most(&n(10), &n(2047)));
        assert!(!refutes_f_eps0_at_most(&n(0), &n(0)));
        assert_eq!(f_eps0_lower_bound(&n(3)), Some(n(16)));
    }

    #[test]
    fn step_limit_and_priority() {
        let out = fgh_eval(&o("w^w"), &n(3), Budget::new(1 << 20, 5));
        assert_eq!(out, EvalOutcome::StepLimit);
        // the rewrite that crosses the cap wins over an exhausted step count
        let out = fgh_eval(&o("2"), &n(4), Budget::new(3, 2));
        assert_eq!(out, EvalOutcome::Exceeded { lower_bound: n(9) });
        assert_eq!(fgh_eval(&o("2"), &n(4), Budget::new(3, 1)), EvalOutcome::StepLimit);
        let out = fgh_eval(&Ordinal::zero(), &n(20), Budget::new(3, 1));
        assert_eq!(out, EvalOutcome::Exceeded { lower_bound: n(20) });
    }

    #[test]
    fn successor_base_crossing_is_exact() {
        let out = hierarchy_eval(&SuccessorBase, &Ordinal::zero(), &n(100), &n(3), Budget::new(4, 10));
        assert_eq!(out, EvalOutcome::Exceeded { lower_bound: n(16) });
    }

    #[test]
    fn quadratic_base_iterates() {
        let g = QuadraticBase::new(1, 1);
        let d = Budget::default();
        assert_eq!(
            hierarchy_eval(&g, &Ordinal::zero(), &n(2), &n(2), d),
            EvalOutcome::Value(n(26))
        );
        // H_1(1) = g^2(1) = g(2) = 5
        assert_eq!(hierarchy_eval(&g, &o("1"), &n(1), &n(1), d), EvalOutcome::Value(n(5)));
    }

    #[test]
    fn trace_rules_and_steps() {
        let mut records = Vec::new();
        let out = hierarchy_eval_traced(&SuccessorBase, &o("w"), &n(1), &n(1), Budget::default(), &mut |r| {
            records.push(r.clone())
        });
        assert_eq!(out, EvalOutcome::Value(n(7)));
        let rules: Vec<Rule> = records.iter().map(|r| r.rule).collect();
        // F_w(1) -> F_2(1) -> F_1^2(1) -> closed form 7
        assert_eq!(
            rules,
            vec![Rule::LimitDispatch, Rule::SuccessorExpand, Rule::ClosedForm]
        );
        assert_eq!(records[1].stack, vec!["F_{1}^{2}".to_string()]);
        assert_eq!(records.last().unwrap().argument, "7");
        assert_eq!(records.iter().map(|r| r.step).collect::<Vec<_>>(), vec![1, 2, 3]);
    }
}
