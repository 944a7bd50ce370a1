//! The finite Paris–Harrington predicate `PH(k, m, n, N)`: every colouring
//! of the `n`-element subsets of `{0,…,N−1}` with `k` colours has a large
//! homogeneous set of size at least `m`.
//!
//! Subsets are always handled as sorted `usize` slices and colourings store
//! one colour per subset in colex order.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(a, b)` for the small arguments used here.
pub fn binomial(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1))
}

/// Colex rank of a sorted subset: `Σ C(s_i, i+1)`.
pub fn colex_rank(subset: &[usize]) -> usize {
    subset.iter().enumerate().map(|(i, &s)| binomial(s, i + 1)).sum()
}

/// All `n`-subsets of `{0,…,N−1}` in colex order.
pub fn colex_subsets(n: usize, ground: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(ground, n));
    let mut cur = Vec::with_capacity(n);
    // colex order = lexicographic order on the reversed tuples
    fn rec(top: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut s = cur.clone();
            s.reverse();
            out.push(s);
            return;
        }
        for x in (left - 1)..top {
            cur.push(x);
            rec(x, left - 1, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    for max in (n - 1)..ground {
        cur.push(max);
        rec(max, n - 1, &mut cur, &mut out);
        cur.pop();
    }
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Calls `f` on every `r`-subset of `items` (kept in input order).
fn for_each_combination(items: &[usize], r: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == r {
            return f(cur);
        }
        let need = r - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            cur.push(items[i]);
            let keep_going = rec(items, r, i + 1, cur, f);
            cur.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut cur = Vec::with_capacity(r);
    rec(items, r, 0, &mut cur, f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    #[serde(rename = "n")]
    pub arity: usize,
    #[serde(rename = "N")]
    pub ground: usize,
    #[serde(rename = "k")]
    pub num_colors: usize,
    /// One colour per `n`-subset, colex order.
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn new(arity: usize, ground: usize, num_colors: usize, colors: Vec<u8>) -> Result<Self> {
        let c = Coloring {
            arity,
            ground,
            num_colors,
            colors,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn constant(arity: usize, ground: usize, color: u8) -> Self {
        Coloring {
            arity,
            ground,
            num_colors: color as usize + 1,
            colors: vec![color; binomial(ground, arity)],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.arity == 0 {
            return Err(Error::Coloring("arity must be at least 1".into()));
        }
        if self.num_colors == 0 || self.num_colors > 256 {
            return Err(Error::Coloring("number of colors must be in 1..=256".into()));
        }
        let expected = binomial(self.ground, self.arity);
        if self.colors.len() != expected {
            return Err(Error::Coloring(format!(
                "expected {expected} colors for C({}, {}), got {}",
                self.ground,
                self.arity,
                self.colors.len()
            )));
        }
        if let Some(i) = self.colors.iter().position(|&c| c as usize >= self.num_colors) {
            return Err(Error::Coloring(format!(
                "color {} at index {i} is not below k",
                self.colors[i]
            )));
        }
        Ok(())
    }

    /// Colour of a sorted `n`-subset.
    pub fn color(&self, subset: &[usize]) -> u8 {
        debug_assert_eq!(subset.len(), self.arity);
        self.colors[colex_rank(subset)]
    }
}

/// Nonempty with `|Y| ≥ min Y`. Duplicates are ignored.
pub fn is_large(y: &[usize]) -> bool {
    let mut v = y.to_vec();
    v.sort_unstable();
    v.dedup();
    match v.first() {
        None => false,
        Some(&min) => v.len() >= min,
    }
}

/// All `n`-subsets of `Y` get one colour; vacuous when `|Y| < n`.
pub fn is_homogeneous(c: &Coloring, y: &[usize]) -> bool {
    let mut v = y.to_vec();
    v.sort_unstable();
    v.dedup();
    let mut first: Option<u8> = None;
    for_each_combination(&v, c.arity, &mut |s| {
        let col = c.color(s);
        match first {
            None => {
                first = Some(col);
                true
            }
            Some(f) => f == col,
        }
    })
}

/// Least size a witness with minimum `a` must have.
fn required_size(m: usize, a: usize) -> usize {
    m.max(a).max(1)
}

/// Some large homogeneous `Y` with `|Y| ≥ m`, found by exhaustive search in
/// order of increasing minimum.
pub fn find_witness(c: &Coloring, m: usize) -> Option<Vec<usize>> {
    for a in 0..c.ground {
        let need = required_size(m, a);
        if need > c.ground - a {
            continue;
        }
        let mut set = vec![a];
        let color = (c.arity == 1).then(|| c.color(&[a]));
        if extend_homogeneous(c, &mut set, need, color) {
            return Some(set);
        }
    }
    None
}

fn extend_homogeneous(c: &Coloring, set: &mut Vec<usize>, need: usize, color: Option<u8>) -> bool {
    if set.len() >= need {
        return true;
    }
    let last = *set.last().unwrap();
    let remaining = need - set.len();
    for e in (last + 1)..c.ground {
        if c.ground - e < remaining {
            break;
        }
        let mut col = color;
        let ok = if set.len() + 1 < c.arity {
            true
        } else {
            for_each_combination(set, c.arity - 1, &mut |rest| {
                let mut s = rest.to_vec();
                s.push(e);
                let got = c.color(&s);
                match col {
                    None => {
                        col = Some(got);
                        true
                    }
                    Some(want) => want == got,
                }
            })
        };
        if ok {
            set.push(e);
            if extend_homogeneous(c, set, need, col) {
                return true;
            }
            set.pop();
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum BadColoring {
    /// Colex-least colouring without a witness.
    Found { coloring: Coloring },
    /// The search space is exhausted: every colouring has a witness.
    Absent,
    /// The node budget ran out.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub result: BadColoring,
    pub nodes: u64,
    /// FNV-1a hash of the branch log; identical runs give identical hashes.
    pub search_hash: String,
}

struct Search<'a> {
    k: usize,
    m: usize,
    n: usize,
    subsets: &'a [Vec<usize>],
    colors: Vec<u8>,
    nodes: u64,
    node_budget: u64,
    hash: u64,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

impl Search<'_> {
    fn log(&mut self, word: u64) {
        for b in word.to_le_bytes() {
            self.hash ^= b as u64;
            self.hash = self.hash.wrapping_mul(FNV_PRIME);
        }
    }

    fn color_of(&self, s: &[usize]) -> u8 {
        self.colors[colex_rank(s)]
    }

    /// Is there a witness whose colex-largest `n`-subset is `subsets[t]`?
    fn closes_witness(&self, t: usize) -> bool {
        let top = &self.subsets[t];
        let c = self.colors[t];
        let low = top[0];
        if top.len() >= required_size(self.m, low) {
            return true;
        }
        // Y = T ∪ top with T ⊆ [0, low) nonempty; min Y = min T = a.
        for a in 0..low {
            let need = required_size(self.m, a);
            let need_extra = need.saturating_sub(self.n);
            if need_extra > low - a {
                continue;
            }
            let mut chosen = vec![a];
            if !self.fits(&chosen, top, a, c) {
                continue;
            }
            if self.extend_below(&mut chosen, top, need_extra.max(1), c) {
                return true;
            }
        }
        false
    }

    /// Every `n`-subset of `chosen ∪ top` that contains `e` has colour `c`.
    fn fits(&self, chosen: &[usize], top: &[usize], e: usize, c: u8) -> bool {
        let others: Vec<usize> = chosen
            .iter()
            .copied()
            .filter(|&x| x != e)
            .chain(top.iter().copied())
            .collect();
        for_each_combination(&others, self.n - 1, &mut |rest| {
            let mut s = Vec::with_capacity(self.n);
            s.push(e);
            s.extend_from_slice(rest);
            s.sort_unstable();
            self.color_of(&s) == c
        })
    }

    fn extend_below(&self, chosen: &mut Vec<usize>, top: &[usize], need: usize, c: u8) -> bool {
        if chosen.len() >= need {
            return true;
        }
        let low = top[0];
        let last = *chosen.last().unwrap();
        for e in (last + 1)..low {
            if low - e < need - chosen.len() {
                break;
            }
            if self.fits(chosen, top, e, c) {
                chosen.push(e);
                if self.extend_below(chosen, top, need, c) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// `Ok(true)` when a counterexample is completed.
    fn run(&mut self, t: usize, max_used: Option<u8>) -> Result<bool, ()> {
        if t == self.subsets.len() {
            return Ok(true);
        }
        // colours are interchangeable: only open a new colour in order
        let limit = match max_used {
            None => 1,
            Some(u) => (u as usize + 2).min(self.k),
        };
        for c in 0..limit {
            if self.nodes >= self.node_budget {
                return Err(());
            }
            self.nodes += 1;
            let c = c as u8;
            self.colors[t] = c;
            let pruned = self.closes_witness(t);
            self.log(((t as u64) << 9) | ((c as u64) << 1) | pruned as u64);
            if pruned {
                continue;
            }
            let used = Some(max_used.map_or(c, |u| u.max(c)));
            if self.run(t + 1, used)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Searches for a colouring of `[N]^n` with `k` colours that has no large
/// homogeneous set of size `≥ m`.
pub fn find_bad_coloring(k: usize, m: usize, n: usize, ground: usize, node_budget: u64) -> Result<SearchReport> {
    if k == 0 || n == 0 {
        return Err(Error::Precondition("k and n must be at least 1".into()));
    }
    if k > 256 {
        return Err(Error::Precondition("at most 256 colors are supported".into()));
    }
    let subsets = colex_subsets(n, ground);
    let mut search = Search {
        k,
        m,
        n,
        subsets: &subsets,
        colors: vec![0; subsets.len()],
        nodes: 0,
        node_budget,
        hash: FNV_OFFSET,
    };
    // witnesses smaller than n are vacuously homogeneous under every colouring
    let small = required_size(m, 0);
    let result = if small < n && small <= ground {
        BadColoring::Absent
    } else {
        match search.run(0, None) {
            Ok(true) => BadColoring::Found {
                coloring: Coloring {
                    arity: n,
                    ground,
                    num_colors: k,
                    colors: search.colors.clone(),
                },
            },
            Ok(false) => BadColoring::Absent,
            Err(()) => BadColoring::Unknown,
        }
    };
    Ok(SearchReport {
        result,
        nodes: search.nodes,
        search_hash: format!("{:016x}", search.hash),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum PhVerdict {
    Holds,
    Fails { witness: Coloring },
    Unknown { reason: String },
}

impl PhVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            PhVerdict::Holds => "Holds",
            PhVerdict::Fails { .. } => "Fails",
            PhVerdict::Unknown { .. } => "Unknown",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PhReport {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    #[serde(rename = "N")]
    pub ground: usize,
    #[serde(flatten)]
    pub verdict: PhVerdict,
    pub nodes: u64,
    pub search_hash: String,
    pub timing: Timing,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Timing {
    pub wall_ms: f64,
}

pub fn ph_holds(k: usize, m: usize, n: usize, ground: usize, node_budget: u64) -> Result<PhReport> {
    let start = Instant::now();
    let report = find_bad_coloring(k, m, n, ground, node_budget)?;
    let verdict = match report.result {
        BadColoring::Absent => PhVerdict::Holds,
        BadColoring::Found { coloring } => {
            debug_assert!(find_witness(&coloring, m).is_none());
            PhVerdict::Fails { witness: coloring }
        }
        BadColoring::Unknown => PhVerdict::Unknown {
            reason: format!("node budget of {node_budget} exhausted"),
        },
    };
    Ok(PhReport {
        k,
        m,
        n,
        ground,
        verdict,
        nodes: report.nodes,
        search_hash: report.search_hash,
        timing: Timing {
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        },
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum MinWitness {
    /// `N` is the least ground size where PH holds. `below` is the
    /// counterexample at `N − 1` (absent for `N = 0`); `search_hash`
    /// identifies the exhausted search at `N`.
    Found {
        #[serde(rename = "N")]
        ground: usize,
        below: Option<Coloring>,
        nodes: u64,
        search_hash: String,
    },
    Unknown {
        reason: String,
    },
}

impl MinWitness {
    pub fn value(&self) -> Option<usize> {
        match self {
            MinWitness::Found { ground, .. } => Some(*ground),
            MinWitness::Unknown { .. } => None,
        }
    }
}

/// Least `N ≤ n_cap` with `PH(k, m, n, N)`. An undecided ground size below the
/// first success makes the whole answer unknown.
pub fn min_witness(k: usize, m: usize, n: usize, node_budget: u64, n_cap: usize) -> Result<MinWitness> {
    let mut below = None;
    for ground in 0..=n_cap {
        let report = ph_holds(k, m, n, ground, node_budget)?;
        match report.verdict {
            PhVerdict::Holds => {
                return Ok(MinWitness::Found {
                    ground,
                    below,
                    nodes: report.nodes,
                    search_hash: report.search_hash,
                })
            }
            PhVerdict::Fails { witness } => below = Some(witness),
            PhVerdict::Unknown { reason } => {
                return Ok(MinWitness::Unknown {
                    reason: format!("N = {ground}: {reason}"),
                })
            }
        }
    }
    Ok(MinWitness::Unknown {
        reason: format!("no witness up to N = {n_cap}"),
    })
}

/// `σ(n, k)`: least `N` with `PH(k, n+1, n, N)`.
pub fn sigma(n: usize, k: usize, node_budget: u64, n_cap: usize) -> Result<MinWitness> {
    min_witness(k, n + 1, n, node_budget, n_cap)
}

/// One comparison in the numeric chain behind `σ(n+2, 10^{35n²})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub n: u64,
    pub links: Vec<ChainLink>,
    pub holds: bool,
}

const MATERIALIZE_UP_TO: u64 = 24;

/// Exact check of `F_3(n) ≥ 2^{2^n} ≥ 2^{140n²} ≥ 10^{35n²}` for any `n`.
///
/// The head uses the closed form of `F_2` twice: `F_3(n) ≥ F_2(F_2(n))` and
/// `F_2(x) = 2^{x+1}(x+1) − 1 ≥ 2^x`, so it reduces to `F_2(n) ≥ 2^n`.
pub fn chain_links(n: u64) -> ChainReport {
    use num_bigint::BigUint;
    use num_traits::One;

    let one = BigUint::one();
    // 2^{n+1}(n+1) - 1 >= 2^n holds outright; evaluate it while cheap
    let head = n > 1 << 16 || (&one << (n + 1)) * (n + 1) > &one << n;

    // Materialize the numbers while they fit comfortably in memory; above
    // that compare exponents (still exact, since both sides are powers).
    let (middle, tail) = if n <= MATERIALIZE_UP_TO {
        let tower = &one << (1u64 << n);
        let sq = 140 * n * n;
        let lhs = &one << sq;
        let tail = lhs >= num_traits::pow(BigUint::from(10u32), (35 * n * n) as usize);
        (tower >= lhs, tail)
    } else {
        // 16^{35n²} >= 10^{35n²}
        (n >= 128 || (1u128 << n) >= 140 * (n as u128) * (n as u128), true)
    };

    let links = vec![
        ChainLink {
            claim: format!("F_2({n}) >= 2^{n}, hence F_3({n}) >= 2^(2^{n})"),
            holds: head,
        },
        ChainLink {
            claim: format!("2^(2^{n}) >= 2^(140*{n}^2)"),
            holds: middle,
        },
        ChainLink {
            claim: format!("2^(140*{n}^2) >= 10^(35*{n}^2)"),
            holds: tail,
        },
    ];
    let holds = links.iter().all(|l| l.holds);
    ChainReport { n, links, holds }
}

/// The chain on the window `15 ≤ n ≤ 18`, where the numbers stay feasible.
pub fn chain_check(n: u64) -> Result<bool> {
    if !(15..=18).contains(&n) {
        return Err(Error::Precondition(format!(
            "chain check is defined for 15 <= n <= 18, got {n}"
        )));
    }
    Ok(chain_links(n).holds)
}
