//! De Moivre polynomials `A_{n,k}(a_1, a_2, ...)`: the coefficient of `x^n`
//! in `(a_1 x + a_2 x^2 + ...)^k`.
//!
//! Two evaluation routes live here. [`DeMoivreTable`] works over any
//! [`Ring`] by repeated truncated convolution. For rational sequences,
//! [`demoivre`] goes through a shared memo of [`RationalTable`]s that keep
//! each row over a common denominator so the inner loop is integer-only.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::combinatorics::{eulerian2, stirling, StirlingKind};
use crate::numeric::{binomial, binomial_int, factorial, ring_pow, Integer, Rational, Ring};

type Generator<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

/// A lazily evaluated sequence `a_1, a_2, ...` with a tag naming it.
///
/// Sequences built from formulas are memoizable: their tag identifies the
/// values. Sequences built from explicit data are not, since two different
/// vectors could share a tag.
#[derive(Clone)]
pub struct CoeffSequence<T = Rational> {
    tag: String,
    memoizable: bool,
    gen: Generator<T>,
}

impl<T> fmt::Debug for CoeffSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoeffSequence").field("tag", &self.tag).finish()
    }
}

impl<T: Ring + Send + Sync + 'static> CoeffSequence<T> {
    /// `f(j)` gives `a_j` for `j >= 1`. The tag must determine the values.
    pub fn from_fn(tag: impl Into<String>, f: impl Fn(usize) -> T + Send + Sync + 'static) -> Self {
        Self {
            tag: tag.into(),
            memoizable: true,
            gen: Arc::new(f),
        }
    }

    /// `a_j = values[j-1]`, zero past the end.
    pub fn from_vec(tag: impl Into<String>, values: Vec<T>) -> Self {
        let values = Arc::new(values);
        Self {
            tag: tag.into(),
            memoizable: false,
            gen: Arc::new(move |j| values.get(j - 1).cloned().unwrap_or_else(T::zero)),
        }
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn is_memoizable(&self) -> bool {
        self.memoizable
    }

    /// `a_j` for `j >= 1`.
    pub fn get(&self, j: usize) -> T {
        assert!(j >= 1, "sequences are indexed from 1");
        (self.gen)(j)
    }

    pub fn values(&self, count: usize) -> Vec<T> {
        (1..=count).map(|j| self.get(j)).collect()
    }

    /// `a_{r+1}, a_{r+2}, ...`
    pub fn shifted(&self, r: usize) -> Self {
        let gen = self.gen.clone();
        Self {
            tag: format!("shift{r}[{}]", self.tag),
            memoizable: self.memoizable,
            gen: Arc::new(move |j| gen(j + r)),
        }
    }

    /// `0, ..., 0, a_1, a_2, ...` with `zeros` leading zeros.
    pub fn zero_prefixed(&self, zeros: usize) -> Self {
        let gen = self.gen.clone();
        Self {
            tag: format!("zeros{zeros}[{}]", self.tag),
            memoizable: self.memoizable,
            gen: Arc::new(move |j| if j <= zeros { T::zero() } else { gen(j - zeros) }),
        }
    }

    /// `c a_1, c a_2, ...`
    pub fn scaled(&self, c: T) -> Self {
        let gen = self.gen.clone();
        Self {
            tag: format!("scaled[{}]", self.tag),
            memoizable: false,
            gen: Arc::new(move |j| c.clone() * gen(j)),
        }
    }

    /// `c a_1, c^2 a_2, c^3 a_3, ...`
    pub fn graded(&self, c: T) -> Self {
        let gen = self.gen.clone();
        Self {
            tag: format!("graded[{}]", self.tag),
            memoizable: false,
            gen: Arc::new(move |j| ring_pow(&c, j as u64) * gen(j)),
        }
    }
}

impl CoeffSequence<Rational> {
    /// `a_j = 1/(j+c)`, so `c = 0` is `1, 1/2, 1/3, ...` and `c = 2` is
    /// `1/3, 1/4, ...`.
    pub fn reciprocal(c: usize) -> Self {
        let tag = if c == 0 { "1/j".to_string() } else { format!("1/(j+{c})") };
        Self::from_fn(tag, move |j| Rational::new(1.into(), Integer::from(j + c)))
    }

    /// `a_j = 1/(j+c)!` for `c >= -1`.
    pub fn reciprocal_factorial(c: i64) -> Self {
        assert!(c >= -1, "1/(j+c)! needs j + c >= 0 for every j >= 1");
        let tag = match c {
            0 => "1/j!".to_string(),
            c if c < 0 => format!("1/(j{c})!"),
            c => format!("1/(j+{c})!"),
        };
        Self::from_fn(tag, move |j| {
            Rational::new(1.into(), factorial((j as i64 + c) as u64))
        })
    }

    /// Same values as [`CoeffSequence::scaled`] but memoizable, keyed on
    /// the scale factor.
    pub fn scaled_rational(&self, c: &Rational) -> Self {
        let mut out = self.scaled(c.clone());
        out.tag = format!("scaled({c})[{}]", self.tag);
        out.memoizable = self.memoizable;
        out
    }
}

/// `A_{n,k}` for all `n <= max_n` over any ring, by repeated convolution.
///
/// Row `k` stores `A_{k+i,k}` for `i = 0..=max_n-k`.
#[derive(Clone, Debug)]
pub struct DeMoivreTable<T> {
    max_n: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Ring + Send + Sync + 'static> DeMoivreTable<T> {
    pub fn new(seq: &CoeffSequence<T>, max_n: usize) -> Self {
        let a = seq.values(max_n + 1);
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(max_n + 1);
        let mut first = vec![T::zero(); max_n + 1];
        first[0] = T::one();
        rows.push(first);
        for k in 0..max_n {
            let prev = &rows[k];
            let len = max_n - k;
            let next: Vec<T> = (0..len)
                .map(|i| {
                    (0..=i).fold(T::zero(), |acc, l| acc + prev[l].clone() * a[i - l].clone())
                })
                .collect();
            rows.push(next);
        }
        Self { max_n, rows }
    }
}

impl<T: Ring> DeMoivreTable<T> {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn get(&self, n: i64, k: usize) -> T {
        if n < k as i64 {
            return T::zero();
        }
        let n = n as usize;
        assert!(n <= self.max_n, "A_{{{n},{k}}} is beyond this table (max n = {})", self.max_n);
        self.rows[k][n - k].clone()
    }
}

/// Rational De Moivre table with one common denominator per row.
#[derive(Debug)]
pub struct RationalTable {
    max_n: usize,
    rows: Vec<(Vec<Integer>, Integer)>,
}

impl RationalTable {
    pub fn new(seq: &CoeffSequence<Rational>, max_n: usize) -> Self {
        let a = seq.values(max_n + 1);
        let lcm = a.iter().fold(Integer::one(), |acc, q| acc.lcm(q.denom()));
        let b: Vec<Integer> = a.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let mut rows = Vec::with_capacity(max_n + 1);
        let mut first = vec![Integer::zero(); max_n + 1];
        first[0] = Integer::one();
        rows.push((first, Integer::one()));
        for k in 0..max_n {
            let (prev, den) = &rows[k];
            let len = max_n - k;
            let mut next: Vec<Integer> = (0..len)
                .map(|i| {
                    let mut acc = Integer::zero();
                    for l in 0..=i {
                        if !prev[l].is_zero() && !b[i - l].is_zero() {
                            acc += &prev[l] * &b[i - l];
                        }
                    }
                    acc
                })
                .collect();
            let mut den = den * &lcm;
            let mut g = den.clone();
            for x in &next {
                if g.is_one() {
                    break;
                }
                if !x.is_zero() {
                    g = g.gcd(x);
                }
            }
            if !g.is_one() {
                for x in next.iter_mut() {
                    *x = &*x / &g;
                }
                den /= &g;
            }
            rows.push((next, den));
        }
        Self { max_n, rows }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn get(&self, n: i64, k: usize) -> Rational {
        if n < k as i64 {
            return Rational::zero();
        }
        let n = n as usize;
        assert!(n <= self.max_n, "A_{{{n},{k}}} is beyond this table (max n = {})", self.max_n);
        let (nums, den) = &self.rows[k];
        Rational::new(nums[n - k].clone(), den.clone())
    }
}

fn cache() -> &'static Mutex<HashMap<String, Arc<RationalTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<RationalTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A table covering `n <= max_n`, shared through the memo when the
/// sequence is memoizable. Tables grow by at least doubling.
pub fn rational_table(seq: &CoeffSequence<Rational>, max_n: usize) -> Arc<RationalTable> {
    if !seq.is_memoizable() {
        return Arc::new(RationalTable::new(seq, max_n));
    }
    if let Some(t) = cache().lock().expect("cache lock").get(seq.tag()) {
        if t.max_n() >= max_n {
            return t.clone();
        }
    }
    let target = {
        let guard = cache().lock().expect("cache lock");
        guard
            .get(seq.tag())
            .map_or(max_n.max(16), |t| max_n.max(2 * t.max_n()))
    };
    let table = Arc::new(RationalTable::new(seq, target));
    let mut guard = cache().lock().expect("cache lock");
    let entry = guard.entry(seq.tag().to_string()).or_insert_with(|| table.clone());
    if entry.max_n() < table.max_n() {
        *entry = table.clone();
    }
    entry.clone()
}

/// `A_{n,k}(seq)`; zero whenever `n < k`.
pub fn demoivre(n: i64, k: usize, seq: &CoeffSequence<Rational>) -> Rational {
    if n < k as i64 {
        return Rational::zero();
    }
    rational_table(seq, n as usize).get(n, k)
}

/// `A_{n,k}(seq)` over any ring, without memoization.
pub fn demoivre_generic<T: Ring + Send + Sync + 'static>(n: i64, k: usize, seq: &CoeffSequence<T>) -> T {
    if n < k as i64 {
        return T::zero();
    }
    DeMoivreTable::new(seq, n as usize).get(n, k)
}

/// `A_{n,k}(a_2, a_3, ...)` from values on the full sequence, by the
/// binomial theorem.
pub fn strip_first(n: i64, k: usize, seq: &CoeffSequence<Rational>) -> Rational {
    let a1 = seq.get(1);
    (0..=k).fold(Rational::zero(), |acc, j| {
        let c = Rational::from_integer(binomial(k as u64, j as u64));
        let p = ring_pow(&-a1.clone(), (k - j) as u64);
        acc + c * p * demoivre(n + j as i64, j, seq)
    })
}

/// Weak compositions of `total` into `parts` nonnegative parts.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

pub(crate) fn multinomial(parts: &[usize]) -> Integer {
    let total: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total as u64), |acc, &p| acc / factorial(p as u64))
}

/// `A_{n,k}(a_{r+1}, a_{r+2}, ...)` by the multinomial expansion over
/// the first `r` coefficients.
pub fn strip_r(n: i64, k: usize, r: usize, seq: &CoeffSequence<Rational>) -> Rational {
    assert!(r >= 1, "strip_r needs r >= 1");
    let neg_a: Vec<Rational> = (1..=r).map(|i| -seq.get(i)).collect();
    compositions(k, r + 1)
        .into_iter()
        .fold(Rational::zero(), |acc, js| {
            let last = js[r];
            // J = (r-1) j_1 + (r-2) j_2 + ... + 1 j_{r-1}
            let big_j: usize = (0..r).map(|i| (r - 1 - i) * js[i]).sum();
            let inner = demoivre(n + (big_j + r * last) as i64, last, seq);
            if inner.is_zero() {
                return acc;
            }
            let coeff = (0..r).fold(Rational::from_integer(multinomial(&js)), |c, i| {
                c * ring_pow(&neg_a[i], js[i] as u64)
            });
            acc + coeff * inner
        })
}

/// Closed forms for De Moivre values on special sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `A_{n,k}(1, 1/2, 1/3, ...)` through Stirling cycle numbers.
    Cycle,
    /// `A_{n,k}(1/1!, 1/2!, ...)` through Stirling subset numbers.
    Subset,
    /// `A_{n,k}(1/2, 1/3, ...)` as an alternating sum of cycle numbers.
    Jfa,
    /// `A_{n,k}(1/2!, 1/3!, ...)` as an alternating sum of subset numbers.
    Jfb,
    /// `A_{n,k}(1/2, 1/3, ...)` through second-order Eulerian numbers.
    Yta,
    /// `A_{n,k}(1/2!, 1/3!, ...)` through second-order Eulerian numbers.
    Ytb,
    /// `A_{n,k}(1/3, 1/4, ...)` as a triple sum of cycle numbers.
    Wew,
    /// `A_{n,k}(1/2!, 1/3!, ...)` as a triple sum of powers.
    Mvw,
    /// `A_{n,k}(1/3!, 1/4!, ...)` as a quadruple sum of powers.
    Mvw2,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 9] = [
        ClosedForm::Cycle,
        ClosedForm::Subset,
        ClosedForm::Jfa,
        ClosedForm::Jfb,
        ClosedForm::Yta,
        ClosedForm::Ytb,
        ClosedForm::Wew,
        ClosedForm::Mvw,
        ClosedForm::Mvw2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Cycle => "cycle",
            ClosedForm::Subset => "subset",
            ClosedForm::Jfa => "jfa",
            ClosedForm::Jfb => "jfb",
            ClosedForm::Yta => "yta",
            ClosedForm::Ytb => "ytb",
            ClosedForm::Wew => "wew",
            ClosedForm::Mvw => "mvw",
            ClosedForm::Mvw2 => "mvw2",
        }
    }

    /// The sequence whose De Moivre values this form describes.
    pub fn sequence(self) -> CoeffSequence<Rational> {
        match self {
            ClosedForm::Cycle => CoeffSequence::reciprocal(0),
            ClosedForm::Subset => CoeffSequence::reciprocal_factorial(0),
            ClosedForm::Jfa | ClosedForm::Yta => CoeffSequence::reciprocal(1),
            ClosedForm::Jfb | ClosedForm::Ytb | ClosedForm::Mvw => {
                CoeffSequence::reciprocal_factorial(1)
            }
            ClosedForm::Wew => CoeffSequence::reciprocal(2),
            ClosedForm::Mvw2 => CoeffSequence::reciprocal_factorial(2),
        }
    }
}

fn ratio(num: Integer, den: Integer) -> Rational {
    Rational::new(num, den)
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `j^e / e!` with `0^0 = 1`.
fn power_over_factorial(j: usize, e: usize) -> Rational {
    ratio(Integer::from(j).pow(e as u32), factorial(e as u64))
}

/// Evaluate a closed form at `(n, k)`, `n, k >= 0`.
pub fn special_closed_form(n: usize, k: usize, which: ClosedForm) -> Rational {
    let fact = |m: usize| factorial(m as u64);
    let kf = Rational::from_integer(fact(k));
    match which {
        ClosedForm::Cycle => ratio(fact(k) * stirling(StirlingKind::Cycle, n, k), fact(n)),
        ClosedForm::Subset => ratio(fact(k) * stirling(StirlingKind::Subset, n, k), fact(n)),
        ClosedForm::Jfa | ClosedForm::Jfb => {
            let kind = if which == ClosedForm::Jfa {
                StirlingKind::Cycle
            } else {
                StirlingKind::Subset
            };
            let sum = (0..=k).fold(Rational::zero(), |acc, j| {
                let term = binomial((n + k) as u64, (n + j) as u64) * stirling(kind, n + j, j);
                acc + sign(k - j) * Rational::from_integer(term)
            });
            sum * kf / Rational::from_integer(fact(n + k))
        }
        ClosedForm::Yta | ClosedForm::Ytb => {
            if k > n {
                return Rational::zero();
            }
            let sum = (0..=n).fold(Integer::zero(), |acc, j| {
                let c = if which == ClosedForm::Yta {
                    binomial(j as u64, (n - k) as u64)
                } else {
                    binomial_int(n as i64 - 1 - j as i64, (n - k) as u64)
                };
                acc + eulerian2(n, j as i64) * c
            });
            Rational::from_integer(sum) * kf / Rational::from_integer(fact(n + k))
        }
        ClosedForm::Wew => compositions(k, 3).into_iter().fold(Rational::zero(), |acc, js| {
            let (j1, j2, j3) = (js[0], js[1], js[2]);
            let m = n + j2 + 2 * j3;
            let st = stirling(StirlingKind::Cycle, m, j3);
            if st.is_zero() {
                return acc;
            }
            let den = fact(j1) * fact(j2) * fact(m) * Integer::from(2u32).pow(j1 as u32);
            acc + sign(j1 + j2) * ratio(fact(k) * st, den)
        }),
        ClosedForm::Mvw => compositions(k, 3).into_iter().fold(Rational::zero(), |acc, js| {
            let (j1, j2, j3) = (js[0], js[1], js[2]);
            let e = n + j1 + j3;
            acc + sign(j1 + j2)
                * Rational::from_integer(multinomial(&js))
                * power_over_factorial(j3, e)
        }),
        ClosedForm::Mvw2 => compositions(k, 4).into_iter().fold(Rational::zero(), |acc, js| {
            let (j1, j2, j3, j4) = (js[0], js[1], js[2], js[3]);
            let e = n + 2 * j1 + j2 + 2 * j4;
            let half = ratio(Integer::one(), Integer::from(2u32).pow(j3 as u32));
            acc + sign(j1 + j2 + j3)
                * Rational::from_integer(multinomial(&js))
                * half
                * power_over_factorial(j4, e)
        }),
    }
}

/// `A_{m+k,k}(1/0!, 1/1!, 1/2!, ...) = k^m / m!`.
pub fn shifted_exponential_value(m: usize, k: usize) -> Rational {
    power_over_factorial(k, m)
}

/// `k!/n!` as a rational, the scale between De Moivre values and counts.
pub fn count_scale(n: usize, k: usize) -> Rational {
    ratio(factorial(k as u64), factorial(n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, int};
    use proptest::prelude::*;

    fn generic_value(n: i64, k: usize, seq: &CoeffSequence<Rational>) -> Rational {
        demoivre_generic(n, k, seq)
    }

    #[test]
    fn empty_product_and_square() {
        let seq = CoeffSequence::reciprocal(0);
        assert_eq!(demoivre(0, 0, &seq), int(1));
        assert_eq!(demoivre(3, 0, &seq), int(0));
        let a = CoeffSequence::from_vec("a", vec![int(2), int(5), int(7)]);
        assert_eq!(demoivre(3, 2, &a), int(2 * 2 * 5));
        assert_eq!(demoivre(-1, 0, &a), int(0));
    }

    #[test]
    fn cycle_example() {
        assert_eq!(demoivre(4, 2, &CoeffSequence::reciprocal(0)), frac(11, 12));
        assert_eq!(special_closed_form(4, 2, ClosedForm::Cycle), frac(11, 12));
        assert_eq!(special_closed_form(4, 2, ClosedForm::Subset), frac(7, 12));
        assert_eq!(special_closed_form(1, 1, ClosedForm::Wew), frac(1, 3));
    }

    #[test]
    fn strip_examples() {
        let recip = CoeffSequence::reciprocal(0);
        assert_eq!(strip_first(3, 2, &recip), demoivre(3, 2, &CoeffSequence::reciprocal(1)));
        assert_eq!(strip_first(0, 0, &recip), int(1));
        assert_eq!(strip_first(2, 1, &CoeffSequence::reciprocal_factorial(0)), frac(1, 6));
    }

    #[test]
    fn fast_table_matches_plain_convolution() {
        for seq in [
            CoeffSequence::reciprocal(2),
            CoeffSequence::reciprocal_factorial(2),
            CoeffSequence::reciprocal(0).zero_prefixed(2),
        ] {
            let plain = DeMoivreTable::new(&seq, 14);
            for n in 0..=14i64 {
                for k in 0..=n as usize {
                    assert_eq!(demoivre(n, k, &seq), plain.get(n, k), "{} {n} {k}", seq.tag());
                }
            }
        }
    }

    #[test]
    fn strip_r_is_a_shift() {
        let seqs = [CoeffSequence::reciprocal(0), CoeffSequence::reciprocal_factorial(0)];
        for seq in &seqs {
            for r in 1..=3 {
                let shifted = seq.shifted(r);
                for n in 0..=12i64 {
                    for k in 0..=6 {
                        assert_eq!(strip_r(n, k, r, seq), demoivre(n, k, &shifted));
                        if r == 1 {
                            assert_eq!(strip_r(n, k, 1, seq), strip_first(n, k, seq));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_direct_values() {
        for form in ClosedForm::ALL {
            let seq = form.sequence();
            for n in 0..=12usize {
                for k in 0..=n {
                    assert_eq!(
                        special_closed_form(n, k, form),
                        demoivre(n as i64, k, &seq),
                        "{} at ({n},{k})",
                        form.name()
                    );
                }
            }
        }
    }

    #[test]
    fn exponential_shift_identity() {
        let seq = CoeffSequence::reciprocal_factorial(-1);
        for m in 0..=10 {
            for k in 0..=10 {
                assert_eq!(demoivre((m + k) as i64, k, &seq), shifted_exponential_value(m, k));
            }
        }
    }

    #[test]
    fn memo_grows_and_stays_consistent() {
        let seq = CoeffSequence::from_fn("test:1/(j+5)", |j| frac(1, j as i64 + 5));
        let small = demoivre(5, 2, &seq);
        let big = demoivre(40, 7, &seq);
        assert_eq!(demoivre(5, 2, &seq), small);
        assert_eq!(generic_value(40, 7, &seq), big);
    }

    fn arb_values() -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-20i64..20, 1i64..9).prop_map(|(a, b)| frac(a, b)), 1..8)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn vanishing_below_diagonal(vals in arb_values(), n in 0i64..8, extra in 1usize..4) {
            let seq = CoeffSequence::from_vec("v", vals);
            prop_assert_eq!(demoivre(n, n as usize + extra, &seq), int(0));
        }

        #[test]
        fn homogeneity(vals in arb_values(), c in (-9i64..9, 1i64..5), n in 0i64..9, k in 0usize..6) {
            let c = frac(c.0, c.1);
            let seq = CoeffSequence::from_vec("v", vals.clone());
            let scaled = CoeffSequence::from_vec("cv", vals.iter().map(|a| a * &c).collect());
            prop_assert_eq!(demoivre(n, k, &scaled), ring_pow(&c, k as u64) * demoivre(n, k, &seq));
        }

        #[test]
        fn grading(vals in arb_values(), c in (-9i64..9, 1i64..5), n in 0i64..9, k in 0usize..6) {
            let c = frac(c.0, c.1);
            let seq = CoeffSequence::from_vec("v", vals);
            let graded = seq.graded(c.clone());
            prop_assert_eq!(demoivre(n, k, &graded), ring_pow(&c, n as u64) * demoivre(n, k, &seq));
        }

        #[test]
        fn leading_zero_shift(vals in arb_values(), n in 0i64..10, k in 0usize..6) {
            let seq = CoeffSequence::from_vec("v", vals);
            prop_assert_eq!(demoivre(n, k, &seq.zero_prefixed(1)), demoivre(n - k as i64, k, &seq));
        }
    }
}
