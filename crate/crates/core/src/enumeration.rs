//! Exhaustive generators, counters and closed-form counts.
//!
//! Everything here is brute force: partitions of `n` are generated one by
//! one and filtered. Self-conjugate partitions are generated from their
//! diagonal hook sets, i.e. from sets of distinct odd numbers.
//!
//! Simultaneous cores are finite in number when the moduli are coprime. A
//! `(s, t)`-core with `gcd(s, t) = 1` has weight at most
//! `(s² - 1)(t² - 1) / 24`; this bound comes from the literature on
//! simultaneous cores and is what [`sim_core_weight_bound`] returns. Since
//! a self-conjugate `(2t_1, ..., 2t_p)`-core of class `m` corresponds to a
//! `(t_1, ..., t_p)`-core `μ` with `|λ| = 4|μ| + m(m+1)/2`, the self-conjugate
//! side uses `4 * bound + m(m+1)/2`.

use serde::Serialize;

use crate::bijection::{class_of_diagonal, ScClass};
use crate::diagonal::{sc_from_diagonal, DiagonalHookSet};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Iterator over the partitions of `n` in reverse lexicographic order:
/// `(n)` first, `(1, 1, ..., 1)` last.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::from_sorted(parts.clone());
        self.current = successor(parts);
        Some(out)
    }
}

/// Next partition in reverse lexicographic order.
fn successor(mut parts: Vec<usize>) -> Option<Vec<usize>> {
    let q = parts.iter().rposition(|&p| p > 1)?;
    let ones = parts.len() - q - 1;
    let x = parts[q] - 1;
    parts[q] = x;
    parts.truncate(q + 1);
    let mut rest = ones + 1;
    while rest > x {
        parts.push(x);
        rest -= x;
    }
    if rest > 0 {
        parts.push(rest);
    }
    Some(parts)
}

pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Diagonal hook sets summing to `n`, in decreasing lexicographic order.
pub fn diagonal_sets_of(n: usize) -> Vec<DiagonalHookSet> {
    fn extend(
        remaining: usize,
        max_odd: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<DiagonalHookSet>,
    ) {
        if remaining == 0 {
            out.push(DiagonalHookSet::from_sorted(prefix.clone()));
            return;
        }
        let largest = if remaining % 2 == 1 {
            remaining
        } else {
            remaining - 1
        };
        let mut delta = largest.min(max_odd);
        while delta >= 1 {
            // the largest possible total from odd numbers <= delta is ((delta+1)/2)^2
            let room = delta.div_ceil(2).pow(2);
            if room < remaining {
                break;
            }
            prefix.push(delta);
            extend(remaining - delta, delta.saturating_sub(2), prefix, out);
            prefix.pop();
            if delta < 2 {
                break;
            }
            delta -= 2;
        }
    }
    let mut out = Vec::new();
    extend(n, n | 1, &mut Vec::new(), &mut out);
    out
}

/// Self-conjugate partitions of `n`, built from the sets of distinct odd
/// numbers summing to `n` and ordered as [`diagonal_sets_of`].
pub fn self_conjugate_of(n: usize) -> impl Iterator<Item = Partition> {
    diagonal_sets_of(n)
        .into_iter()
        .map(|set| sc_from_diagonal(&set))
}

/// Number of self-conjugate partitions of `n` in class `m`.
pub fn count_sc_m(n: usize, m: usize) -> u64 {
    diagonal_sets_of(n)
        .iter()
        .filter(|set| class_of_diagonal(set) == ScClass(m))
        .count() as u64
}

/// Number of `t`-core partitions of `n`.
pub fn count_t_core(n: usize, t: usize) -> Result<u64> {
    if t == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut count = 0;
    for p in partitions_of(n) {
        if p.is_t_core(t)? {
            count += 1;
        }
    }
    Ok(count)
}

fn validate_moduli(moduli: &[usize]) -> Result<()> {
    if moduli.is_empty() {
        return Err(Error::EmptyModuli);
    }
    if moduli.contains(&0) {
        return Err(Error::ZeroModulus);
    }
    Ok(())
}

/// All `moduli`-cores of weight at most `max_n`, by weight and then in
/// reverse lexicographic order.
pub fn enumerate_simultaneous_cores(moduli: &[usize], max_n: usize) -> Result<Vec<Partition>> {
    validate_moduli(moduli)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        for p in partitions_of(n) {
            if p.is_simultaneous_core(moduli)? {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// All self-conjugate `moduli`-cores of weight at most `max_n`, each with
/// its class.
pub fn enumerate_sc_simultaneous_cores(
    moduli: &[usize],
    max_n: usize,
) -> Result<Vec<(ScClass, Partition)>> {
    validate_moduli(moduli)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        for set in diagonal_sets_of(n) {
            let lambda = sc_from_diagonal(&set);
            if lambda.is_simultaneous_core(moduli)? {
                out.push((class_of_diagonal(&set), lambda));
            }
        }
    }
    Ok(out)
}

/// Weight bound beyond which no `moduli`-core exists, taken over the
/// coprime pairs among `moduli`. `None` when no pair is coprime (then there
/// are infinitely many cores).
pub fn sim_core_weight_bound(moduli: &[usize]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (idx, &s) in moduli.iter().enumerate() {
        for &t in &moduli[idx..] {
            if s == 0 || t == 0 || gcd(s as u64, t as u64) != 1 {
                continue;
            }
            let bound = (s * s - 1) * (t * t - 1) / 24;
            best = Some(best.map_or(bound, |b| b.min(bound)));
        }
    }
    best
}

/// Weight bound for self-conjugate `moduli`-cores of class `m`, where every
/// modulus is even: `4 * sim_core_weight_bound(moduli / 2) + m(m+1)/2`.
pub fn sc_sim_core_weight_bound(moduli: &[usize], m: usize) -> Result<Option<usize>> {
    let halves = halve_even_moduli(moduli)?;
    Ok(sim_core_weight_bound(&halves).map(|b| 4 * b + ScClass(m).triangular()))
}

fn halve_even_moduli(moduli: &[usize]) -> Result<Vec<usize>> {
    validate_moduli(moduli)?;
    moduli
        .iter()
        .map(|&t| {
            if t % 2 == 0 {
                Ok(t / 2)
            } else {
                Err(Error::OddModulus(t))
            }
        })
        .collect()
}

/// Per-weight counts of self-conjugate `moduli`-cores in class `m` for
/// `n <= max_n`. Every modulus must be even.
pub fn count_sc_sim_core_m(moduli: &[usize], m: usize, max_n: usize) -> Result<CountTable> {
    halve_even_moduli(moduli)?;
    count_table(
        &Counter::ScSimultaneousClass {
            moduli: moduli.to_vec(),
            m,
        },
        max_n,
    )
}

/// Which sequence a [`CountTable`] holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Counter {
    /// `p(n)`
    Partitions,
    /// `sc(n)`
    SelfConjugate,
    /// `c_t(n)`
    Core { t: usize },
    /// `sc_t(n)`
    ScCore { t: usize },
    /// `sc^(m)(n)`
    ScClass { m: usize },
    /// `c_(t_1, ..., t_p)(n)`
    Simultaneous { moduli: Vec<usize> },
    /// `sc_(t_1, ..., t_p)(n)`
    ScSimultaneous { moduli: Vec<usize> },
    /// `sc^(m)_(t_1, ..., t_p)(n)`
    ScSimultaneousClass { moduli: Vec<usize>, m: usize },
}

/// Counts indexed by weight `n = 0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    counter: Counter,
    rows: Vec<u64>,
}

impl CountTable {
    pub fn new(counter: Counter, rows: Vec<u64>) -> Self {
        CountTable { counter, rows }
    }

    pub fn counter(&self) -> &Counter {
        &self.counter
    }

    /// Count at weight `n`, if the table reaches it.
    pub fn get(&self, n: usize) -> Option<u64> {
        self.rows.get(n).copied()
    }

    pub fn counts(&self) -> &[u64] {
        &self.rows
    }

    /// Largest weight covered, or `None` for an empty table.
    pub fn max_n(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.rows.iter().copied().enumerate()
    }
}

#[derive(Serialize)]
struct Row {
    n: usize,
    count: u64,
}

impl Serialize for CountTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Row> = self.rows().map(|(n, count)| Row { n, count }).collect();
        let mut st = serializer.serialize_struct("CountTable", 2)?;
        st.serialize_field("counter", &self.counter)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// Tabulates `counter` for `n = 0..=max_n` by enumeration.
pub fn count_table(counter: &Counter, max_n: usize) -> Result<CountTable> {
    let mut rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let count = match counter {
            Counter::Partitions => partitions_of(n).count() as u64,
            Counter::SelfConjugate => diagonal_sets_of(n).len() as u64,
            Counter::Core { t } => count_t_core(n, *t)?,
            Counter::ScCore { t } => count_sc_where(n, |_, p| p.is_t_core(*t))?,
            Counter::ScClass { m } => count_sc_m(n, *m),
            Counter::Simultaneous { moduli } => {
                validate_moduli(moduli)?;
                let mut c = 0;
                for p in partitions_of(n) {
                    if p.is_simultaneous_core(moduli)? {
                        c += 1;
                    }
                }
                c
            }
            Counter::ScSimultaneous { moduli } => {
                count_sc_where(n, |_, p| p.is_simultaneous_core(moduli))?
            }
            Counter::ScSimultaneousClass { moduli, m } => count_sc_where(n, |class, p| {
                Ok(class == ScClass(*m) && p.is_simultaneous_core(moduli)?)
            })?,
        };
        rows.push(count);
    }
    Ok(CountTable::new(counter.clone(), rows))
}

fn count_sc_where(
    n: usize,
    mut pred: impl FnMut(ScClass, &Partition) -> Result<bool>,
) -> Result<u64> {
    let mut count = 0;
    for set in diagonal_sets_of(n) {
        if pred(class_of_diagonal(&set), &sc_from_diagonal(&set))? {
            count += 1;
        }
    }
    Ok(count)
}

/// `p(0), ..., p(max)` from Euler's pentagonal number recurrence
/// `p(n) = Σ_{k≥1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
pub fn partition_numbers(max: usize) -> Result<Vec<u64>> {
    let mut p: Vec<i128> = vec![0; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut total: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    p.into_iter()
        .map(|v| u64::try_from(v).map_err(|_| Error::Overflow("partition numbers")))
        .collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `C(n, k)` with overflow checking.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial"))
}

/// `(a + b + c)! / (a! b! c!)`.
pub fn multinomial3(a: u64, b: u64, c: u64) -> Result<u64> {
    let ab = binomial(a + b, a)?;
    let abc = binomial(a + b + c, c)?;
    ab.checked_mul(abc).ok_or(Error::Overflow("multinomial"))
}

/// Number of `(t1, t2)`-cores for coprime `t1, t2`:
/// `C(t1 + t2, t1) / (t1 + t2)`.
pub fn anderson_count(t1: u64, t2: u64) -> Result<u64> {
    if t1 == 0 || t2 == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(t1, t2) != 1 {
        return Err(Error::NotCoprime(t1, t2));
    }
    let sum = t1
        .checked_add(t2)
        .ok_or(Error::Overflow("anderson count"))?;
    let total = binomial(sum, t1)?;
    debug_assert_eq!(total % sum, 0);
    Ok(total / sum)
}

/// Number of `(n, n + d, n + 2d)`-cores for coprime `n, d`:
/// `Σ_{i=0}^{⌊n/2⌋} multinomial(n + d; i, i + d, n - 2i) / (n + d)`.
pub fn wang_count(n: u64, d: u64) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(n, d) != 1 {
        return Err(Error::NotCoprime(n, d));
    }
    let mut sum: u64 = 0;
    for i in 0..=n / 2 {
        let term = multinomial3(i, i + d, n - 2 * i)?;
        sum = sum.checked_add(term).ok_or(Error::Overflow("wang count"))?;
    }
    debug_assert_eq!(sum % (n + d), 0);
    Ok(sum / (n + d))
}

/// `C_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Result<u64> {
    let two_n = n.checked_mul(2).ok_or(Error::Overflow("catalan"))?;
    Ok(binomial(two_n, n)? / (n + 1))
}

/// `M_n = Σ_i C(n, 2i) C(2i, i) / (i + 1)`.
pub fn motzkin(n: u64) -> Result<u64> {
    let mut sum: u64 = 0;
    for i in 0..=n / 2 {
        let term = binomial(n, 2 * i)?
            .checked_mul(catalan(i)?)
            .ok_or(Error::Overflow("motzkin"))?;
        sum = sum.checked_add(term).ok_or(Error::Overflow("motzkin"))?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_small() {
        assert_eq!(
            partitions_of(0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        let four: Vec<Partition> = partitions_of(4).collect();
        assert_eq!(
            four,
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(5).count(), 7);
        assert_eq!(partitions_of(1).collect::<Vec<_>>(), vec![p(&[1])]);
    }

    #[test]
    fn reverse_lexicographic_order() {
        for n in 0..=15 {
            let all: Vec<Partition> = partitions_of(n).collect();
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
            assert!(all.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn euler_recurrence() {
        let p = partition_numbers(10).unwrap();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn self_conjugate_small() {
        assert_eq!(self_conjugate_of(3).collect::<Vec<_>>(), vec![p(&[2, 1])]);
        assert_eq!(self_conjugate_of(2).count(), 0);
        assert_eq!(
            self_conjugate_of(0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert!(self_conjugate_of(15).any(|q| q == p(&[4, 4, 4, 3])));
        let sets: Vec<Vec<usize>> = diagonal_sets_of(16)
            .iter()
            .map(|s| s.deltas().to_vec())
            .collect();
        assert_eq!(
            sets,
            vec![
                vec![15, 1],
                vec![13, 3],
                vec![11, 5],
                vec![9, 7],
                vec![7, 5, 3, 1]
            ]
        );
    }

    #[test]
    fn class_counts() {
        assert_eq!(count_sc_m(15, 2), 3);
        assert_eq!(count_sc_m(5, 1), 1);
        assert_eq!(count_sc_m(2, 0), 0);
    }

    #[test]
    fn core_counts() {
        assert_eq!(count_t_core(2, 3), Ok(2));
        assert_eq!(count_t_core(2, 2), Ok(0));
        for t in 1..6 {
            assert_eq!(count_t_core(0, t), Ok(1));
        }
        assert_eq!(count_t_core(3, 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn simultaneous_cores() {
        let cores = enumerate_simultaneous_cores(&[2, 3], 10).unwrap();
        assert_eq!(cores, vec![Partition::empty(), p(&[1])]);
        assert_eq!(enumerate_simultaneous_cores(&[3, 4], 5).unwrap().len(), 5);
        assert_eq!(
            enumerate_simultaneous_cores(&[3, 4, 5], 6).unwrap().len(),
            4
        );
        assert_eq!(
            enumerate_simultaneous_cores(&[], 3),
            Err(Error::EmptyModuli)
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(sim_core_weight_bound(&[2, 3]), Some(1));
        assert_eq!(sim_core_weight_bound(&[3, 4]), Some(5));
        assert_eq!(sim_core_weight_bound(&[5, 6]), Some(35));
        assert_eq!(sim_core_weight_bound(&[3, 4, 5]), Some(5));
        assert_eq!(sim_core_weight_bound(&[2, 4]), None);
        assert_eq!(sim_core_weight_bound(&[1, 4]), Some(0));
        assert_eq!(sc_sim_core_weight_bound(&[4, 6], 3), Ok(Some(10)));
        assert_eq!(
            sc_sim_core_weight_bound(&[4, 5], 0),
            Err(Error::OddModulus(5))
        );
    }

    #[test]
    fn sc_simultaneous_class_tables() {
        let total = |moduli: &[usize], m: usize| {
            let bound = sc_sim_core_weight_bound(moduli, m).unwrap().unwrap();
            count_sc_sim_core_m(moduli, m, bound).unwrap().total()
        };
        assert_eq!(total(&[4, 6], 0), 2);
        assert_eq!(total(&[6, 8], 0), 5);
        let table = count_sc_sim_core_m(&[4, 6], 1, 20).unwrap();
        for (n, count) in table.rows() {
            if n % 4 != 1 {
                assert_eq!(count, 0, "n = {n}");
            }
        }
        assert_eq!(
            count_sc_sim_core_m(&[4, 5], 0, 5),
            Err(Error::OddModulus(5))
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(anderson_count(2, 3), Ok(2));
        assert_eq!(anderson_count(3, 4), Ok(5));
        assert_eq!(anderson_count(1, 7), Ok(1));
        assert_eq!(anderson_count(2, 4), Err(Error::NotCoprime(2, 4)));
        assert_eq!(wang_count(3, 1), Ok(4));
        assert_eq!(wang_count(4, 1), Ok(9));
        assert_eq!(wang_count(1, 5), Ok(1));
        assert_eq!(wang_count(2, 2), Err(Error::NotCoprime(2, 2)));
        assert_eq!(
            (0..6).map(|n| catalan(n).unwrap()).collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 14, 42]
        );
        assert_eq!(
            (0..5).map(|n| motzkin(n).unwrap()).collect::<Vec<_>>(),
            vec![1, 1, 2, 4, 9]
        );
        assert!(catalan(40).is_err());
        assert!(binomial(200, 100).is_err());
    }

    #[test]
    fn catalan_and_motzkin_recurrences() {
        // C_{n+1} = Σ C_i C_{n-i};  M_{n+1} = M_n + Σ M_i M_{n-1-i}
        let mut c = vec![1u64];
        let mut m = vec![1u64, 1];
        for n in 0..15 {
            c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
        }
        for n in 1..15 {
            let s: u64 = (0..n).map(|i| m[i] * m[n - 1 - i]).sum();
            m.push(m[n] + s);
        }
        for n in 0..=15 {
            assert_eq!(catalan(n as u64), Ok(c[n]));
            assert_eq!(motzkin(n as u64), Ok(m[n]));
        }
    }

    #[test]
    fn count_table_json() {
        let table = count_table(&Counter::Core { t: 3 }, 2).unwrap();
        assert_eq!(table.counts(), &[1, 1, 2]);
        let json = serde_json::to_string(&table).unwrap();
        assert_eq!(
            json,
            r#"{"counter":{"family":"core","t":3},"rows":[{"n":0,"count":1},{"n":1,"count":1},{"n":2,"count":2}]}"#
        );
        assert_eq!(table.max_n(), Some(2));
        assert_eq!(table.total(), 4);
    }
}
