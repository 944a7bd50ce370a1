//! Brute-force reference implementations. Nothing here shares code with the
//! engines it is used to check: ordinals below `ω²` are plain pairs, the
//! hierarchy is naive recursion over `u128`, and PH is decided by running
//! through every colouring.

/// `ω·omegas + units`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallOrdinal {
    pub omegas: u64,
    pub units: u64,
}

impl SmallOrdinal {
    pub fn new(omegas: u64, units: u64) -> Self {
        SmallOrdinal { omegas, units }
    }

    /// Canonical text, matching the crate's ordinal syntax.
    pub fn text(&self) -> String {
        match (self.omegas, self.units) {
            (0, u) => u.to_string(),
            (1, 0) => "w".into(),
            (w, 0) => format!("w*{w}"),
            (1, u) => format!("w + {u}"),
            (w, u) => format!("w*{w} + {u}"),
        }
    }
}

/// Values above this are treated as "too big to know".
const ORACLE_LIMIT: u128 = 1 << 100;

/// `F_α(x)` by the textbook recursion, or `None` once anything passes 2^100.
pub fn fgh_small(alpha: SmallOrdinal, x: u128) -> Option<u128> {
    let limited = |v: u128| Some(v).filter(|&v| v <= ORACLE_LIMIT);
    match (alpha.omegas, alpha.units) {
        (0, 0) => limited(x + 1),
        // F_1(x) = 2x + 1; counting up one at a time would never finish
        (0, 1) => limited(x.checked_mul(2)?.checked_add(1)?),
        (w, 0) => fgh_small(SmallOrdinal::new(w - 1, u64::try_from(x + 1).ok()?), x),
        (w, u) => {
            let pred = SmallOrdinal::new(w, u - 1);
            let mut v = x;
            for _ in 0..=x {
                v = fgh_small(pred, v)?;
            }
            Some(v)
        }
    }
}

/// The same recursion over an arbitrary base.
pub fn hierarchy_small(base: &dyn Fn(u128) -> Option<u128>, alpha: SmallOrdinal, x: u128) -> Option<u128> {
    if x > ORACLE_LIMIT {
        return None;
    }
    let SmallOrdinal { omegas, units } = alpha;
    if omegas == 0 && units == 0 {
        return base(x).filter(|&v| v <= ORACLE_LIMIT);
    }
    if units > 0 {
        let pred = SmallOrdinal::new(omegas, units - 1);
        let mut v = x;
        let mut i: u128 = 0;
        while i <= x {
            v = hierarchy_small(base, pred, v)?;
            i += 1;
        }
        return Some(v);
    }
    // {ω·(a+1)}(x) = ω·a + (x+1)
    let next = u64::try_from(x + 1).ok()?;
    hierarchy_small(base, SmallOrdinal::new(omegas - 1, next), x)
}

/// `F_2(x) = 2^{x+1}(x+1) − 1`.
pub fn f2_closed_form(x: u32) -> num_bigint::BigUint {
    (num_bigint::BigUint::from(1u32) << (x + 1)) * (x + 1) - 1u32
}

/// Every colouring of `[N]^n` with `k` colours, in lexicographic order of the
/// flat colour array (first entry most significant).
pub struct Colorings {
    k: u8,
    cur: Vec<u8>,
    done: bool,
}

impl Colorings {
    pub fn new(k: u8, len: usize) -> Self {
        Colorings {
            k,
            cur: vec![0; len],
            done: k == 0 && len > 0,
        }
    }
}

impl Iterator for Colorings {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let mut i = self.cur.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.cur[i] += 1;
            if self.cur[i] < self.k {
                break;
            }
            self.cur[i] = 0;
        }
        Some(out)
    }
}

/// The `n`-subsets of `[N]` in colex order, found by filtering bitmasks.
pub fn subsets_colex(n: usize, ground: usize) -> Vec<Vec<usize>> {
    let mut subs: Vec<u32> = (0u32..(1u32 << ground))
        .filter(|m| m.count_ones() as usize == n)
        .collect();
    // for equal-size subsets, colex order is the numeric order of bitmasks
    subs.sort_unstable();
    subs.iter()
        .map(|&m| (0..ground).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// Per-`(k, n, N)` table from full enumeration.
#[derive(Clone, Debug)]
pub struct PhTable {
    pub k: usize,
    pub n: usize,
    pub ground: usize,
    /// `first_bad[m]`: lexicographically first colouring whose largest large
    /// homogeneous set is smaller than `max(m, 1)`, for `m ≤ max_m`.
    pub first_bad: Vec<Option<Vec<u8>>>,
}

impl PhTable {
    pub fn holds(&self, m: usize) -> bool {
        self.first_bad[m].is_none()
    }
}

pub fn ph_table(k: usize, n: usize, ground: usize, max_m: usize) -> PhTable {
    let subsets = subsets_colex(n, ground);
    let index_of = |s: &[usize]| subsets.iter().position(|t| t.as_slice() == s).unwrap();
    // every large subset Y of [N], with the indices of its n-subsets
    let mut candidates: Vec<(usize, Vec<usize>)> = Vec::new();
    for mask in 1u32..(1u32 << ground) {
        let y: Vec<usize> = (0..ground).filter(|i| mask & (1 << i) != 0).collect();
        if y.len() < y[0] {
            continue;
        }
        let inner: Vec<usize> = subsets
            .iter()
            .filter(|s| s.iter().all(|e| y.contains(e)))
            .map(|s| index_of(s))
            .collect();
        candidates.push((y.len(), inner));
    }
    candidates.sort_by_key(|c| std::cmp::Reverse(c.0));

    let mut first_bad: Vec<Option<Vec<u8>>> = vec![None; max_m + 1];
    for colors in Colorings::new(k as u8, subsets.len()) {
        let best = candidates
            .iter()
            .find(|(_, inner)| inner.iter().all(|&i| colors[i] == colors[inner[0]]))
            .map_or(0, |(size, _)| *size);
        for (m, slot) in first_bad.iter_mut().enumerate() {
            if slot.is_none() && best < m.max(1) {
                *slot = Some(colors.clone());
            }
        }
        if first_bad.iter().all(Option::is_some) {
            break;
        }
    }
    PhTable {
        k,
        n,
        ground,
        first_bad,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fgh_values() {
        let f = |w, u, x| fgh_small(SmallOrdinal::new(w, u), x);
        assert_eq!(f(0, 0, 5), Some(6));
        assert_eq!(f(0, 1, 4), Some(9));
        assert_eq!(f(0, 2, 3), Some(63));
        assert_eq!(f(1, 0, 1), Some(7));
        assert_eq!(f(0, 3, 1), Some(2047));
        assert_eq!(f(1, 0, 0), Some(1));
        assert_eq!(f(0, 3, 2), None);
        for x in 0..=20u32 {
            assert_eq!(
                num_bigint::BigUint::from(f(0, 2, x as u128).unwrap()),
                f2_closed_form(x)
            );
        }
    }

    #[test]
    fn enumeration_order() {
        let all: Vec<Vec<u8>> = Colorings::new(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(Colorings::new(3, 0).count(), 1);
        assert_eq!(
            subsets_colex(2, 4),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn tiny_ph_tables() {
        let t = ph_table(2, 1, 2, 2);
        assert!(t.holds(1));
        assert_eq!(t.first_bad[2], Some(vec![0, 1]));
        assert!(ph_table(2, 1, 3, 2).holds(2));
        assert!(!ph_table(1, 1, 0, 1).holds(1));
    }
}
