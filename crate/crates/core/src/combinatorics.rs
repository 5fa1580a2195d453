//! Stirling cycle and subset numbers, their r-associated versions, the
//! second-order Eulerian numbers, and exhaustive enumeration used to check
//! all of them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::demoivre::{demoivre, CoeffSequence};
use crate::error::{Error, Result};
use crate::numeric::{factorial, Integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StirlingKind {
    /// Arrangements into cycles.
    Cycle,
    /// Partitions into nonempty blocks.
    Subset,
}

impl StirlingKind {
    pub fn name(self) -> &'static str {
        match self {
            StirlingKind::Cycle => "cycle",
            StirlingKind::Subset => "subset",
        }
    }
}

type Memo = HashMap<(StirlingKind, usize), Vec<Integer>>;

fn rows() -> &'static Mutex<Memo> {
    static ROWS: OnceLock<Mutex<Memo>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(HashMap::new()))
}

fn stirling_row(kind: StirlingKind, n: usize) -> Vec<Integer> {
    if let Some(row) = rows().lock().expect("stirling memo").get(&(kind, n)) {
        return row.clone();
    }
    let mut row = vec![Integer::one()];
    for m in 1..=n {
        let mut next = vec![Integer::zero(); m + 1];
        for k in 1..=m {
            let stay = row.get(k).cloned().unwrap_or_default();
            let weight = match kind {
                StirlingKind::Cycle => m - 1,
                StirlingKind::Subset => k,
            };
            next[k] = &row[k - 1] + stay * weight;
        }
        row = next;
    }
    rows().lock().expect("stirling memo").insert((kind, n), row.clone());
    row
}

/// Classical Stirling numbers with `[0 0] = {0 0} = 1`.
pub fn stirling(kind: StirlingKind, n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    stirling_row(kind, n)[k].clone()
}

/// The sequence `1/r, 1/(r+1), ...` (cycles) or `1/r!, 1/(r+1)!, ...`
/// (subsets).
fn min_size_sequence(kind: StirlingKind, r: usize) -> CoeffSequence<Rational> {
    match kind {
        StirlingKind::Cycle => CoeffSequence::reciprocal(r - 1),
        StirlingKind::Subset => CoeffSequence::reciprocal_factorial(r as i64 - 1),
    }
}

fn scale(n: usize, k: usize, value: Rational) -> Integer {
    let q = value * Rational::new(factorial(n as u64), factorial(k as u64));
    assert!(q.is_integer(), "associated Stirling value is not an integer");
    q.to_integer()
}

/// Stirling numbers with every cycle or block of size at least `r`,
/// computed from De Moivre values of the shifted sequence.
pub fn stirling_associated(kind: StirlingKind, n: usize, k: usize, r: usize) -> Integer {
    assert!(r >= 1, "minimum part size must be positive");
    if n == 0 {
        return if k == 0 { Integer::one() } else { Integer::zero() };
    }
    let m = n as i64 - ((r - 1) * k) as i64;
    scale(n, k, demoivre(m, k, &min_size_sequence(kind, r)))
}

/// Same count through the sequence with `r - 1` leading zeros.
pub fn stirling_associated_padded(kind: StirlingKind, n: usize, k: usize, r: usize) -> Integer {
    assert!(r >= 1, "minimum part size must be positive");
    if n == 0 {
        return if k == 0 { Integer::one() } else { Integer::zero() };
    }
    let seq = match kind {
        StirlingKind::Cycle => CoeffSequence::reciprocal(0),
        StirlingKind::Subset => CoeffSequence::reciprocal_factorial(0),
    }
    .shifted(r - 1)
    .zero_prefixed(r - 1);
    scale(n, k, demoivre(n as i64, k, &seq))
}

fn eulerian_rows() -> &'static Mutex<Vec<Vec<Integer>>> {
    static ROWS: OnceLock<Mutex<Vec<Vec<Integer>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![vec![Integer::one()]]))
}

/// Second-order Eulerian number `<<n, k>>`; zero outside `0 <= k < n`
/// (and `<<0, 0>> = 1`).
pub fn eulerian2(n: usize, k: i64) -> Integer {
    let mut memo = eulerian_rows().lock().expect("eulerian memo");
    while memo.len() <= n {
        let m = memo.len();
        let prev = &memo[m - 1];
        let at = |j: i64| -> Integer {
            if j < 0 {
                Integer::zero()
            } else {
                prev.get(j as usize).cloned().unwrap_or_default()
            }
        };
        let row: Vec<Integer> = (0..m as i64)
            .map(|j| at(j) * (j + 1) + at(j - 1) * (2 * m as i64 - 1 - j))
            .collect();
        memo.push(row);
    }
    if k < 0 {
        return Integer::zero();
    }
    memo[n].get(k as usize).cloned().unwrap_or_default()
}

/// Largest `n` the enumeration oracle accepts.
pub const ENUMERATION_LIMIT: usize = 12;

/// Largest `n` for which cycles are counted by walking permutations; past
/// this, set partitions weighted by `(|B| - 1)!` per block are used.
pub const PERMUTATION_LIMIT: usize = 10;

/// `profile[k][m]`: structures on `n` labelled points with `k` parts whose
/// smallest part has size `m` (`m = 0` only for the empty structure).
pub fn enumerate_profile(kind: StirlingKind, n: usize) -> Result<Vec<Vec<Integer>>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "exhaustive enumeration refused for n = {n} (limit {ENUMERATION_LIMIT})"
        )));
    }
    let mut profile = vec![vec![Integer::zero(); n + 1]; n + 1];
    if n == 0 {
        profile[0][0] = Integer::one();
        return Ok(profile);
    }
    match kind {
        StirlingKind::Cycle if n <= PERMUTATION_LIMIT => {
            let mut counts = vec![vec![0u64; n + 1]; n + 1];
            for_each_permutation(n, |perm| {
                let (k, min) = cycle_shape(perm);
                counts[k][min] += 1;
            });
            for (k, row) in counts.iter().enumerate() {
                for (m, &c) in row.iter().enumerate() {
                    profile[k][m] = Integer::from(c);
                }
            }
        }
        _ => {
            let weights: Vec<Integer> = match kind {
                StirlingKind::Cycle => (0..=n).map(|s| factorial(s.saturating_sub(1) as u64)).collect(),
                StirlingKind::Subset => vec![Integer::one(); n + 1],
            };
            for_each_set_partition(n, |sizes| {
                let k = sizes.len();
                let min = *sizes.iter().min().expect("nonempty partition");
                let w = sizes.iter().fold(Integer::one(), |acc, &s| acc * &weights[s]);
                profile[k][min] += w;
            });
        }
    }
    Ok(profile)
}

/// Exhaustive count of structures on `n` points with `k` parts, each of
/// size at least `r`.
pub fn enumerate_oracle(kind: StirlingKind, n: usize, k: usize, r: usize) -> Result<Integer> {
    let profile = enumerate_profile(kind, n)?;
    if k > n {
        return Ok(Integer::zero());
    }
    Ok(profile[k].iter().enumerate().filter(|(m, _)| *m >= r || n == 0).map(|(_, c)| c.clone()).sum())
}

/// Visit every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Number of cycles and the shortest cycle length.
fn cycle_shape(perm: &[usize]) -> (usize, usize) {
    let mut seen = 0u32;
    let mut cycles = 0;
    let mut min = usize::MAX;
    for start in 0..perm.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = perm[x];
            len += 1;
        }
        cycles += 1;
        min = min.min(len);
    }
    (cycles, min)
}

/// Visit every set partition of `n` points through restricted growth
/// strings, passing the block sizes.
fn for_each_set_partition(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(i: usize, n: usize, sizes: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == n {
            f(sizes);
            return;
        }
        for b in 0..sizes.len() {
            sizes[b] += 1;
            go(i + 1, n, sizes, f);
            sizes[b] -= 1;
        }
        sizes.push(1);
        go(i + 1, n, sizes, f);
        sizes.pop();
    }
    go(0, n, &mut Vec::new(), &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{binomial, double_factorial};

    fn big(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn small_values() {
        assert_eq!(stirling(StirlingKind::Cycle, 3, 2), big(3));
        assert_eq!(stirling(StirlingKind::Subset, 4, 2), big(7));
        for n in 0..8 {
            assert_eq!(stirling(StirlingKind::Subset, n, n), big(1));
        }
        assert_eq!(eulerian2(1, 0), big(1));
        assert_eq!(eulerian2(2, 1), big(2));
        assert_eq!(eulerian2(3, 1), big(8));
        assert_eq!(eulerian2(3, 3), big(0));
        assert_eq!(eulerian2(3, -1), big(0));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_oracle(StirlingKind::Subset, 3, 2, 1).unwrap(), big(3));
        for n in 1..=7 {
            assert_eq!(enumerate_oracle(StirlingKind::Cycle, n, n, 1).unwrap(), big(1));
        }
        assert_eq!(enumerate_oracle(StirlingKind::Subset, 6, 2, 3).unwrap(), big(10));
        assert_eq!(enumerate_oracle(StirlingKind::Subset, 5, 2, 2).unwrap(), big(10));
        assert_eq!(enumerate_oracle(StirlingKind::Cycle, 3, 2, 1).unwrap(), big(3));
        assert!(matches!(
            enumerate_oracle(StirlingKind::Subset, 13, 2, 1),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn enumeration_routes_agree_for_cycles() {
        for n in 0..=8 {
            let perms = enumerate_profile(StirlingKind::Cycle, n).unwrap();
            let mut weighted = vec![vec![Integer::zero(); n + 1]; n + 1];
            if n == 0 {
                weighted[0][0] = Integer::one();
                assert_eq!(perms, weighted);
                continue;
            }
            for_each_set_partition(n, |sizes| {
                let min = *sizes.iter().min().unwrap();
                let w = sizes.iter().fold(Integer::one(), |a, &s| a * factorial(s as u64 - 1));
                weighted[sizes.len()][min] += w;
            });
            assert_eq!(perms, weighted, "n = {n}");
        }
    }

    #[test]
    fn associated_matches_enumeration() {
        for kind in [StirlingKind::Cycle, StirlingKind::Subset] {
            for n in 0..=10 {
                let profile = enumerate_profile(kind, n).unwrap();
                for r in 1..=3 {
                    for k in 0..=n {
                        let brute: Integer = if n == 0 {
                            profile[k][0].clone()
                        } else {
                            profile[k].iter().skip(r).cloned().sum()
                        };
                        assert_eq!(stirling_associated(kind, n, k, r), brute, "{kind:?} {n} {k} {r}");
                        assert_eq!(stirling_associated_padded(kind, n, k, r), brute);
                    }
                }
                for k in 0..=n {
                    assert_eq!(stirling_associated(kind, n, k, 1), stirling(kind, n, k));
                }
            }
        }
    }

    #[test]
    fn eulerian_identities() {
        for r in 0..=10usize {
            for j in 0..=10usize {
                let cyc: Integer = (0..=r)
                    .map(|k| eulerian2(r, k as i64) * binomial((r + j + k) as u64, 2 * r as u64))
                    .sum();
                assert_eq!(cyc, stirling(StirlingKind::Cycle, r + j, j), "cycle r={r} j={j}");
                let sub: Integer = (0..=r)
                    .map(|k| {
                        let top = 2 * r as i64 + j as i64 - 1 - k as i64;
                        crate::numeric::binomial_int(top, 2 * r as u64) * eulerian2(r, k as i64)
                    })
                    .sum();
                assert_eq!(sub, stirling(StirlingKind::Subset, r + j, j), "subset r={r} j={j}");
            }
        }
        for n in 1..=10usize {
            let s: Integer = (0..n as i64).map(|k| eulerian2(n, k)).sum();
            assert_eq!(s, double_factorial(2 * n as i64 - 1));
        }
    }

    #[test]
    fn bell_row_sums() {
        for n in 0..=10 {
            let profile = enumerate_profile(StirlingKind::Subset, n).unwrap();
            let brute: Integer = profile.iter().flatten().cloned().sum();
            let row: Integer = (0..=n).map(|k| stirling(StirlingKind::Subset, n, k)).sum();
            assert_eq!(row, brute);
        }
    }
}
