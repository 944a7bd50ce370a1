//! Named invariant suites over deterministic corpora. Each suite counts the
//! instances it checked and keeps the first few failures verbatim.
//!
//! An instance is *undecided* when the budget stops the library before the
//! property can be confirmed or refuted; those are reported separately and
//! never counted as passes.

use std::cmp::Ordering;

use num_bigint::{BigUint, RandBigInt};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::digits::{code_of, decode_digits, encode_digits};
use crate::error::{Error, Result};
use crate::hierarchy::{
    eps0_fund_seq, f_eps0_eval, fgh_eval, fund_seq_at, hierarchy_eval, meshes, step_down, BaseFunction, Budget,
    EvalOutcome, QuadraticBase, StepDown, SuccessorBase,
};
use crate::oracle::{self, SmallOrdinal};
use crate::ordinal::{add, compare, mul_nat, omega_stack, omega_tower, Kind, Ordinal, Term};
use crate::ramsey::{find_witness, ph_holds, PhVerdict};
use crate::slow::{cantor_pair, cantor_unpair, f_eps0_inverse_certified, Refutation};
use crate::syntax::{parse, render};

pub const DEFAULT_SEED: u64 = 0x5eed_0e0e;

const MAX_RECORDED_FAILURES: usize = 20;

pub const SUITES: &[&str] = &[
    "order",
    "arith",
    "closure",
    "roundtrip",
    "encoding-bound",
    "fundseq",
    "diagonal",
    "meshing",
    "stepdown",
    "hierarchy-laws",
    "abort",
    "inverse",
    "pairing",
    "ph-oracle",
    "ph-monotone",
];

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub undecided: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn undecided(&mut self) {
        self.checked += 1;
        self.undecided += 1;
    }

    /// No instance failed.
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = match name {
        "order" => order(&mut rng),
        "arith" => arith(&mut rng),
        "closure" => closure(&mut rng),
        "roundtrip" => roundtrip(&mut rng, 1000),
        "encoding-bound" => encoding_bound(&mut rng, 100),
        "fundseq" => fundseq(&mut rng),
        "diagonal" => diagonal(),
        "meshing" => meshing(&mut rng),
        "stepdown" => stepdown(&mut rng),
        "hierarchy-laws" => hierarchy_laws(),
        "abort" => abort(),
        "inverse" => inverse(&mut rng, 10_000, 100),
        "pairing" => pairing(&mut rng),
        "ph-oracle" => ph_oracle(),
        "ph-monotone" => ph_monotone(),
        other => {
            return Err(Error::Precondition(format!(
                "unknown suite '{other}'; expected one of: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(report)
}

/// A random ordinal with at most `width` summands per level and exponents
/// nested at most `depth` deep.
pub fn random_ordinal(rng: &mut impl Rng, depth: usize, width: usize) -> Ordinal {
    let count = rng.gen_range(0..=width);
    let mut exps: Vec<Ordinal> = (0..count)
        .map(|_| {
            if depth == 0 || rng.gen_bool(0.3) {
                Ordinal::finite(rng.gen_range(0u32..4))
            } else {
                random_ordinal(rng, depth - 1, width)
            }
        })
        .collect();
    exps.sort_by(|a, b| compare(b, a));
    exps.dedup();
    let terms = exps
        .into_iter()
        .map(|exponent| {
            let coefficient = if rng.gen_bool(0.05) {
                rng.gen_biguint(80) + 1u32
            } else {
                BigUint::from(rng.gen_range(1u32..=5))
            };
            Term { exponent, coefficient }
        })
        .collect();
    Ordinal::from_terms(terms).expect("sorted distinct exponents")
}

fn random_limit(rng: &mut impl Rng) -> Ordinal {
    loop {
        let a = random_ordinal(rng, 3, 3);
        if a.kind() == Kind::Limit {
            return a;
        }
    }
}

fn small(rng: &mut impl Rng) -> SmallOrdinal {
    SmallOrdinal::new(rng.gen_range(0..4), rng.gen_range(0..6))
}

fn to_ordinal(s: SmallOrdinal) -> Ordinal {
    let w = mul_nat(&Ordinal::omega(), &BigUint::from(s.omegas));
    add(&w, &Ordinal::finite(s.units))
}

fn order(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("order");
    // agreement with the lexicographic order on pairs
    for _ in 0..500 {
        let (a, b) = (small(rng), small(rng));
        let want = (a.omegas, a.units).cmp(&(b.omegas, b.units));
        r.check(compare(&to_ordinal(a), &to_ordinal(b)) == want, || {
            format!("compare({}, {}) != {want:?}", a.text(), b.text())
        });
    }
    for _ in 0..300 {
        let a = random_ordinal(rng, 3, 3);
        let b = random_ordinal(rng, 3, 3);
        let c = random_ordinal(rng, 3, 3);
        let ab = compare(&a, &b);
        r.check(ab == compare(&b, &a).reverse(), || {
            format!("antisymmetry fails for {a} and {b}")
        });
        r.check((ab == Ordering::Equal) == (a == b), || {
            format!("equality mismatch for {a} and {b}")
        });
        let mut v = [a.clone(), b.clone(), c.clone()];
        v.sort();
        r.check(v[0] <= v[2], || format!("transitivity fails on {a}, {b}, {c}"));
        r.check(a < a.successor(), || format!("{a} is not below its successor"));
    }
    r
}

fn arith(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("arith");
    for _ in 0..500 {
        let (a, b) = (small(rng), small(rng));
        let want = if b.omegas > 0 {
            SmallOrdinal::new(a.omegas + b.omegas, b.units)
        } else {
            SmallOrdinal::new(a.omegas, a.units + b.units)
        };
        let got = add(&to_ordinal(a), &to_ordinal(b));
        r.check(got == to_ordinal(want), || {
            format!("{} + {} gave {got}", a.text(), b.text())
        });
    }
    for _ in 0..300 {
        let a = random_ordinal(rng, 2, 3);
        let b = random_ordinal(rng, 2, 3);
        let c = random_ordinal(rng, 2, 3);
        let left = add(&add(&a, &b), &c);
        let right = add(&a, &add(&b, &c));
        r.check(left == right, || format!("({a} + {b}) + {c} != {a} + ({b} + {c})"));
        r.check(add(&a, &b) >= a, || format!("{a} + {b} < {a}"));
        r.check(add(&a, &b) >= b, || format!("{a} + {b} < {b}"));
        if b < c {
            r.check(add(&a, &b) < add(&a, &c), || {
                format!("right addition not strictly monotone: {a}, {b} < {c}")
            });
        }
        let k = rng.gen_range(0u32..5);
        let mut repeated = Ordinal::zero();
        for _ in 0..k {
            repeated = add(&repeated, &a);
        }
        r.check(mul_nat(&a, &BigUint::from(k)) == repeated, || {
            format!("{a} * {k} is not repeated addition")
        });
    }
    r
}

fn closure(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("closure");
    for _ in 0..500 {
        let a = random_ordinal(rng, 3, 3);
        let n = rng.gen_range(0u64..6);
        let f = fund_seq_at(&a, n);
        r.check(f.validate().is_ok(), || format!("{{{a}}}({n}) is not in normal form"));
        let b = random_ordinal(rng, 3, 3);
        r.check(add(&a, &b).validate().is_ok(), || {
            format!("{a} + {b} is not in normal form")
        });
        match a.kind() {
            Kind::Zero => r.check(f.is_zero(), || "{0}(n) != 0".into()),
            Kind::Successor => r.check(f.successor() == a, || format!("{{{a}}}({n}) is not the predecessor")),
            Kind::Limit => {
                r.check(f < a, || format!("{{{a}}}({n}) = {f} is not below"));
                let g = fund_seq_at(&a, n + 1);
                r.check(f < g, || format!("{{{a}}}({n}) >= {{{a}}}({})", n + 1));
            }
        }
    }
    r
}

fn roundtrip(rng: &mut ChaCha8Rng, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("roundtrip");
    for _ in 0..count {
        let a = random_ordinal(rng, 3, 4);
        let text = render(&a);
        r.check(parse(&text).as_ref() == Ok(&a), || {
            format!("parse(render) differs for {text}")
        });
        let d = encode_digits(&a);
        r.check(decode_digits(&d).ok().as_ref() == Some(&a), || {
            format!("decode(encode) differs for {text}")
        });
        let again: Option<crate::digits::DigitString> = d.to_string().parse().ok();
        r.check(again.as_ref() == Some(&d), || {
            format!("digit text does not round-trip for {text}")
        });
    }
    r
}

fn encoding_bound(rng: &mut ChaCha8Rng, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("encoding-bound");
    let four = BigUint::from(4u32);
    for _ in 0..count {
        let a = random_ordinal(rng, 3, 3);
        let ca = code_of(&a);
        for n in 0..=4usize {
            let lhs = code_of(&omega_stack(n, &a));
            let rhs = num_traits::pow(four.clone(), 3 * n + 1) * (&ca + 1u32);
            r.check(lhs <= rhs, || format!("code(w_{n}^({a})) = {lhs} > {rhs}"));
        }
    }
    r
}

fn fundseq(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("fundseq");
    for _ in 0..300 {
        let a = small(rng);
        let n = rng.gen_range(0u64..10);
        let want = match (a.omegas, a.units) {
            (0, 0) => SmallOrdinal::new(0, 0),
            (w, 0) => SmallOrdinal::new(w - 1, n + 1),
            (w, u) => SmallOrdinal::new(w, u - 1),
        };
        let got = fund_seq_at(&to_ordinal(a), n);
        r.check(got == to_ordinal(want), || format!("{{{}}}({n}) gave {got}", a.text()));
    }
    // {w^(k+1)}(n) = w^k*(n+1) and {w^w}(n) = w^(n+1)
    for k in 0u32..6 {
        for n in 0u64..6 {
            let a = parse(&format!("w^{}", k + 1)).unwrap();
            let want = mul_nat(&crate::ordinal::omega_pow(&Ordinal::from(k)), &BigUint::from(n + 1));
            r.check(fund_seq_at(&a, n) == want, || format!("{{w^{}}}({n})", k + 1));
        }
    }
    for n in 0u64..6 {
        let want = crate::ordinal::omega_pow(&Ordinal::from(n + 1));
        r.check(fund_seq_at(&parse("w^w").unwrap(), n) == want, || {
            format!("{{w^w}}({n})")
        });
    }
    r
}

/// `{ω_{n+1}}(n) = ω_n^{n+1}` and the `ε₀` dispatch `F_ε₀(x) = F_{ω_{x+1}}(x)`.
fn diagonal() -> SuiteReport {
    let mut r = SuiteReport::new("diagonal");
    for n in 1..=5usize {
        let lhs = fund_seq_at(&omega_tower(n + 1), n as u64);
        let rhs = omega_stack(n, &Ordinal::from(n as u64 + 1));
        r.check(lhs == rhs, || format!("{{w_{}}}({n}) = {lhs}, expected {rhs}", n + 1));
    }
    for n in 0..=5usize {
        r.check(eps0_fund_seq(n) == omega_tower(n + 1), || {
            format!("{{e0}}({n}) != w_{}", n + 1)
        });
    }
    for x in 0..=1usize {
        let direct = fgh_eval(&omega_tower(x + 1), &BigUint::from(x), Budget::default());
        r.check(f_eps0_eval(x, Budget::default()) == direct, || {
            format!("F_e0({x}) differs from F_w_{}({x})", x + 1)
        });
    }
    r
}

fn meshing(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("meshing");
    for _ in 0..500 {
        let a = random_limit(rng);
        let b = random_ordinal(rng, 3, 3);
        let n = rng.gen_range(0u64..6);
        if meshes(&b, &a) {
            let lhs = fund_seq_at(&add(&b, &a), n);
            let rhs = add(&b, &fund_seq_at(&a, n));
            r.check(lhs == rhs, || {
                format!("{b} meshes with {a} but {{b+a}}({n}) = {lhs} != {rhs}")
            });
        }
        // w_m meshes with every a below w_m
        let m = rng.gen_range(1usize..5);
        let tower = omega_tower(m);
        if a < tower {
            r.check(meshes(&tower, &a), || format!("w_{m} does not mesh with {a}"));
        }
    }
    r
}

/// Path caps for step-down checks: length, and a wall-clock share per pair.
pub const STEPDOWN_PATH_CAP: usize = 200_000;

fn stepdown(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("stepdown");
    for _ in 0..300 {
        let a = random_ordinal(rng, 2, 3);
        let n = rng.gen_range(0u64..4);
        let nb = BigUint::from(n);
        if !a.is_zero() {
            let next = fund_seq_at(&a, n);
            let one_step = step_down(&a, &nb, &next, 10).path();
            r.check(one_step.is_some_and(|p| p.steps() == 1 && p.verify()), || {
                format!("{a} ->_{n} {{a}}({n}) not in one step")
            });
        }
        r.check(step_down(&a, &nb, &a, 1).path().is_some_and(|p| p.steps() == 0), || {
            format!("{a} ->_{n} {a} not trivial")
        });
        // transitivity along a descent to 0
        if let StepDown::Path(p) = step_down(&a, &nb, &Ordinal::zero(), 2_000) {
            let len = p.ordinals.len();
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(i..len);
            let sub = step_down(&p.ordinals[i], &nb, &p.ordinals[j], 2_000).path();
            r.check(sub.is_some_and(|s| s.ordinals == p.ordinals[i..=j]), || {
                format!("transitivity: {} ->_{n} {} not a subpath", p.ordinals[i], p.ordinals[j])
            });
        }
    }
    for m in 1..=4usize {
        for n in 1..=4u64 {
            match step_down(
                &omega_tower(m + 1),
                &BigUint::from(n),
                &Ordinal::from(2u32),
                STEPDOWN_PATH_CAP,
            ) {
                StepDown::Path(p) => r.check(p.verify(), || format!("w_{} ->_{n} 2 path does not verify", m + 1)),
                StepDown::Refuted => r.check(false, || format!("w_{} ->_{n} 2 refuted", m + 1)),
                StepDown::Exhausted { steps } => {
                    r.undecided();
                    r.notes
                        .push(format!("w_{} ->_{n} 2: no explicit path within {steps} steps", m + 1));
                }
            }
        }
    }
    r
}

/// The ordinal grid shared by the hierarchy-law checks.
pub fn laws_grid() -> Vec<Ordinal> {
    ["0", "1", "2", "w", "w + 1", "w*2", "w^2"]
        .iter()
        .map(|s| parse(s).unwrap())
        .collect()
}

/// `H_b(x) ≤ H_a(x)`, certified from whatever the two evaluations returned.
fn certify_le(small: &EvalOutcome, big: &EvalOutcome) -> Option<bool> {
    match (small, big) {
        (EvalOutcome::Value(s), EvalOutcome::Value(b)) => Some(s <= b),
        (EvalOutcome::Value(s), EvalOutcome::Exceeded { lower_bound }) => Some(s <= lower_bound).filter(|&ok| ok),
        (EvalOutcome::Exceeded { lower_bound }, EvalOutcome::Value(b)) => Some(lower_bound <= b).filter(|&ok| !ok),
        _ => None,
    }
}

fn hierarchy_laws() -> SuiteReport {
    let mut r = SuiteReport::new("hierarchy-laws");
    let grid = laws_grid();
    let bases = [QuadraticBase::new(1, 1), QuadraticBase::new(2, 2)];
    let one = BigUint::one();
    for base in &bases {
        let values: Vec<Vec<EvalOutcome>> = grid
            .iter()
            .map(|a| {
                (0..=5u32)
                    .map(|n| hierarchy_eval(base, a, &one, &BigUint::from(n), Budget::default()))
                    .collect()
            })
            .collect();
        let name = base.name();
        for (a, row) in grid.iter().zip(&values) {
            for (n, v) in row.iter().enumerate() {
                let sq = BigUint::from(n * n);
                // (i) n <= n² < H_a(n)
                let ok = match v {
                    EvalOutcome::Value(h) => *h > sq,
                    EvalOutcome::Exceeded { lower_bound } => *lower_bound > sq,
                    EvalOutcome::StepLimit => {
                        r.undecided();
                        continue;
                    }
                };
                r.check(ok, || format!("[{name}] (i) H_{a}({n}) <= {n}^2"));
            }
            // (ii) m <= n => H_a(m) <= H_a(n)
            for m in 0..row.len() {
                for n in m..row.len() {
                    match certify_le(&row[m], &row[n]) {
                        Some(ok) => r.check(ok, || format!("[{name}] (ii) H_{a}({m}) > H_{a}({n})")),
                        None => r.undecided(),
                    }
                }
            }
        }
        // (iii) a ->_n b => H_b(n) <= H_a(n)
        for (i, a) in grid.iter().enumerate() {
            for (j, b) in grid.iter().enumerate() {
                #[allow(clippy::needless_range_loop)]
                for n in 0..=5usize {
                    if step_down(a, &BigUint::from(n), b, 100_000).path().is_none() {
                        continue;
                    }
                    match certify_le(&values[j][n], &values[i][n]) {
                        Some(ok) => r.check(ok, || {
                            format!("[{name}] (iii) {a} ->_{n} {b} but H_{b}({n}) > H_{a}({n})")
                        }),
                        None => r.undecided(),
                    }
                }
            }
        }
    }
    r.notes
        .push("pairs where both sides exceed the value cap are undecided".into());
    r
}

/// Base name, base, `α`, `x` and the oracle value `H_α(x)`.
pub type AbortCase = (String, Box<dyn BaseFunction>, SmallOrdinal, u64, BigUint);

/// Inputs with values known to the brute-force oracle, over two bases.
pub fn abort_corpus() -> Vec<AbortCase> {
    let mut out: Vec<AbortCase> = Vec::new();
    let alphas = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0)];
    for &(w, u) in &alphas {
        for x in 0..=9u64 {
            let a = SmallOrdinal::new(w, u);
            if let Some(v) = oracle::fgh_small(a, x as u128) {
                out.push(("x+1".into(), Box::new(SuccessorBase), a, x, BigUint::from(v)));
            }
        }
    }
    let quad = |v: u128| v.checked_mul(v)?.checked_add(1);
    for &(w, u) in &alphas {
        for x in 0..=4u64 {
            let a = SmallOrdinal::new(w, u);
            if let Some(v) = oracle::hierarchy_small(&quad, a, x as u128) {
                out.push((
                    "x^2+1".into(),
                    Box::new(QuadraticBase::new(1, 1)),
                    a,
                    x,
                    BigUint::from(v),
                ));
            }
        }
    }
    out.truncate(50);
    out
}

fn abort() -> SuiteReport {
    let mut r = SuiteReport::new("abort");
    let corpus = abort_corpus();
    let bits = [1u64, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 100, 128, 1 << 20];
    let steps = [1u64, 2, 3, 5, 10, 100, 10_000, 10_000_000];
    let mut definite = 0u64;
    for (name, base, a, x, want) in &corpus {
        let alpha = to_ordinal(*a);
        for &b in &bits {
            for &s in &steps {
                let got = hierarchy_eval(
                    base.as_ref(),
                    &alpha,
                    &BigUint::one(),
                    &BigUint::from(*x),
                    Budget::new(b, s),
                );
                let ok = match &got {
                    EvalOutcome::Value(v) => {
                        definite += 1;
                        v == want
                    }
                    EvalOutcome::Exceeded { lower_bound } => lower_bound <= want,
                    EvalOutcome::StepLimit => true,
                };
                r.check(ok, || {
                    format!(
                        "[{name}] H_{}({x}) with bits={b} steps={s}: {got:?}, oracle {want}",
                        a.text()
                    )
                });
            }
        }
    }
    r.notes
        .push(format!("{} inputs, {definite} definite results", corpus.len()));
    r
}

fn inverse_certificate_ok(x: &BigUint) -> bool {
    let c = f_eps0_inverse_certified(x);
    let shape = if x.bits() == 0 {
        c.refuted == 0 && c.witness.is_none()
    } else {
        c.refuted == 1 && c.witness == Some(BigUint::one())
    };
    if c.value != 0 || !shape {
        return false;
    }
    // the refutation must actually exceed x
    match &c.refutation {
        Refutation::Exact { value } => value > x,
        Refutation::PowerBound => c.refuted >= 1 && x.bits() <= c.refuted + 1,
        Refutation::Capped { lower_bound } | Refutation::OmegaBound { lower_bound } => lower_bound > x,
    }
}

fn inverse(rng: &mut ChaCha8Rng, up_to: u64, random: usize) -> SuiteReport {
    let mut r = SuiteReport::new("inverse");
    for x in 0..=up_to {
        let xb = BigUint::from(x);
        r.check(inverse_certificate_ok(&xb), || {
            format!("F_e0^-1({x}) lacks a certified 0")
        });
    }
    for _ in 0..random {
        let x = rng.gen_biguint(4096);
        r.check(inverse_certificate_ok(&x), || {
            format!("F_e0^-1 of a {}-bit x lacks a certified 0", x.bits())
        });
    }
    r
}

fn pairing(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = SuiteReport::new("pairing");
    for _ in 0..500 {
        let bits = rng.gen_range(1u64..300);
        let x = rng.gen_biguint(bits);
        let y = rng.gen_biguint(bits);
        let p = cantor_pair(&x, &y);
        r.check(cantor_unpair(&p) == (x.clone(), y.clone()), || {
            format!("unpair(pair({x}, {y})) differs")
        });
        r.check(cantor_pair(&(&x + 1u32), &y) > p, || {
            format!("pair not increasing in x at ({x}, {y})")
        });
        r.check(cantor_pair(&x, &(&y + 1u32)) > p, || {
            format!("pair not increasing in y at ({x}, {y})")
        });
    }
    r
}

/// Grid bounds for the PH checks.
pub const PH_MAX_K: usize = 3;
pub const PH_MAX_N: usize = 2;
pub const PH_MAX_GROUND: usize = 6;
pub const PH_MAX_M: usize = 4;
pub const PH_NODE_BUDGET: u64 = 100_000_000;

fn ph_oracle() -> SuiteReport {
    let mut r = SuiteReport::new("ph-oracle");
    for k in 1..=PH_MAX_K {
        for n in 1..=PH_MAX_N {
            for ground in 0..=PH_MAX_GROUND {
                let table = oracle::ph_table(k, n, ground, PH_MAX_M);
                for m in 0..=PH_MAX_M {
                    let report = match ph_holds(k, m, n, ground, PH_NODE_BUDGET) {
                        Ok(rep) => rep,
                        Err(e) => {
                            r.check(false, || format!("PH({k},{m},{n},{ground}): {e}"));
                            continue;
                        }
                    };
                    let case = format!("PH({k},{m},{n},{ground})");
                    match (&report.verdict, &table.first_bad[m]) {
                        (PhVerdict::Holds, None) => r.check(true, String::new),
                        (PhVerdict::Fails { witness }, Some(first)) => {
                            r.check(witness.colors == *first, || {
                                format!(
                                    "{case}: counterexample {:?}, oracle's least is {first:?}",
                                    witness.colors
                                )
                            });
                            r.check(find_witness(witness, m).is_none(), || {
                                format!("{case}: counterexample has a witness")
                            });
                        }
                        (PhVerdict::Unknown { .. }, _) => r.undecided(),
                        (v, o) => r.check(false, || format!("{case}: search says {}, oracle {o:?}", v.label())),
                    }
                }
            }
        }
    }
    r
}

fn ph_monotone() -> SuiteReport {
    let mut r = SuiteReport::new("ph-monotone");
    for k in 1..=PH_MAX_K {
        for n in 1..=PH_MAX_N {
            for m in 0..=PH_MAX_M {
                let verdicts: Vec<PhVerdict> = (0..=PH_MAX_GROUND)
                    .map(|g| {
                        ph_holds(k, m, n, g, PH_NODE_BUDGET)
                            .map(|rep| rep.verdict)
                            .unwrap_or(PhVerdict::Unknown {
                                reason: "precondition".into(),
                            })
                    })
                    .collect();
                for g in 0..PH_MAX_GROUND {
                    match (&verdicts[g], &verdicts[g + 1]) {
                        (PhVerdict::Holds, PhVerdict::Fails { .. }) => r.check(false, || {
                            format!("PH({k},{m},{n},{g}) holds but PH({k},{m},{n},{}) fails", g + 1)
                        }),
                        (PhVerdict::Unknown { .. }, _) | (_, PhVerdict::Unknown { .. }) => r.undecided(),
                        _ => r.check(true, String::new),
                    }
                }
            }
        }
    }
    r.notes
        .push("monotonicity in N is observed on this grid, not assumed".into());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", DEFAULT_SEED).is_err());
    }

    #[test]
    fn corpus_is_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert_eq!(random_ordinal(&mut a, 3, 3), random_ordinal(&mut b, 3, 3));
        }
    }

    #[test]
    fn certify_le_cases() {
        let v = |x: u32| EvalOutcome::Value(x.into());
        let e = |x: u32| EvalOutcome::Exceeded { lower_bound: x.into() };
        assert_eq!(certify_le(&v(3), &v(4)), Some(true));
        assert_eq!(certify_le(&v(5), &v(4)), Some(false));
        assert_eq!(certify_le(&v(3), &e(8)), Some(true));
        assert_eq!(certify_le(&e(8), &v(4)), Some(false));
        assert_eq!(certify_le(&e(8), &e(9)), None);
        assert_eq!(certify_le(&v(9), &e(8)), None);
    }

    #[test]
    fn abort_corpus_has_fifty_inputs() {
        assert_eq!(abort_corpus().len(), 50);
    }
}
