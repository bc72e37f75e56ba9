//! The correspondence between self-conjugate partitions and ordinary
//! partitions.
//!
//! Self-conjugate partitions are sorted into classes `SC^(m)`, `m >= 0`, by
//! the difference `|D_1| - |D_3|` between the number of diagonal hooks that
//! are `1 (mod 4)` and `3 (mod 4)`:
//!
//! | difference | class |
//! |------------|-------|
//! | `k >= 1`   | `m = 2k - 1` |
//! | `-k <= 0`  | `m = 2k` |
//!
//! Within a class, [`phi`] maps a partition `λ` of `4n + m(m+1)/2` to a
//! partition `μ` of `n`, and [`psi`] undoes it. Even hooks of `λ` come in
//! pairs matching the hooks of `μ`: `λ` has twice as many hooks of length
//! `2k` as `μ` has hooks of length `k`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::diagonal::{
    diagonal_hooks, sc_from_diagonal, split_diagonal_classes, DiagonalHookSet, DiagonalResidue,
};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The class index `m` of a self-conjugate partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ScClass(pub usize);

impl ScClass {
    /// Class of a self-conjugate partition with `|D_1| - |D_3| = diff`.
    pub fn from_difference(diff: i64) -> ScClass {
        if diff >= 1 {
            ScClass((2 * diff - 1) as usize)
        } else {
            ScClass((-2 * diff) as usize)
        }
    }

    pub fn m(self) -> usize {
        self.0
    }

    /// `ceil(m / 2)`.
    pub fn k(self) -> usize {
        self.0.div_ceil(2)
    }

    /// The value `|D_1| - |D_3|` shared by every member of the class:
    /// `(-1)^(m+1) * ceil(m/2)`.
    pub fn difference(self) -> i64 {
        let k = self.k() as i64;
        if self.0 % 2 == 1 {
            k
        } else {
            -k
        }
    }

    /// `m(m+1)/2`, the disparity of every member and the weight offset of
    /// the class.
    pub fn triangular(self) -> usize {
        self.0 * (self.0 + 1) / 2
    }

    pub fn contains(self, sc: &Partition) -> Result<bool> {
        Ok(classify(sc)? == self)
    }
}

impl fmt::Display for ScClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `((a_1, ..., a_r), (b_1, ..., b_s))` with `D_1 = {4a_i + 1}` and
/// `D_3 = {4b_j - 1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DiagonalSequencePair {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl DiagonalSequencePair {
    /// `a` must be strictly decreasing and `b` strictly decreasing with every
    /// entry at least 1.
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSequencePair(format!(
                "{a:?} is not strictly decreasing"
            )));
        }
        if b.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSequencePair(format!(
                "{b:?} is not strictly decreasing"
            )));
        }
        if b.last() == Some(&0) {
            return Err(Error::InvalidSequencePair(
                "entries of b must be at least 1".into(),
            ));
        }
        Ok(DiagonalSequencePair { a, b })
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Reassembles `D = {4a_i + 1} ∪ {4b_j - 1}`.
    pub fn to_diagonal(&self) -> DiagonalHookSet {
        let mut deltas: Vec<usize> = self
            .a
            .iter()
            .map(|&a| 4 * a + 1)
            .chain(self.b.iter().map(|&b| 4 * b - 1))
            .collect();
        deltas.sort_unstable_by(|x, y| y.cmp(x));
        DiagonalHookSet::from_sorted(deltas)
    }
}

/// Halves of the even first-column hooks of a self-conjugate partition.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct HalfEvenBetaSet {
    values: Vec<usize>,
}

impl HalfEvenBetaSet {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn require_self_conjugate(sc: &Partition) -> Result<DiagonalHookSet> {
    diagonal_hooks(sc)
}

pub fn classify(sc: &Partition) -> Result<ScClass> {
    let set = require_self_conjugate(sc)?;
    Ok(class_of_diagonal(&set))
}

pub(crate) fn class_of_diagonal(set: &DiagonalHookSet) -> ScClass {
    let classes = split_diagonal_classes(set);
    ScClass::from_difference(classes.d1.len() as i64 - classes.d3.len() as i64)
}

pub fn diagonal_sequence_pair(sc: &Partition) -> Result<DiagonalSequencePair> {
    Ok(sequence_pair_of_diagonal(&require_self_conjugate(sc)?))
}

pub(crate) fn sequence_pair_of_diagonal(set: &DiagonalHookSet) -> DiagonalSequencePair {
    let classes = split_diagonal_classes(set);
    DiagonalSequencePair {
        a: classes.d1.iter().map(|&delta| (delta - 1) / 4).collect(),
        b: classes.d3.iter().map(|&delta| (delta + 1) / 4).collect(),
    }
}

/// Maps a self-conjugate partition to its class and its corresponding
/// partition `μ`, with `|λ| = 4|μ| + m(m+1)/2`.
pub fn phi(sc: &Partition) -> Result<(ScClass, Partition)> {
    let set = require_self_conjugate(sc)?;
    Ok(phi_of_diagonal(&set))
}

pub(crate) fn phi_of_diagonal(set: &DiagonalHookSet) -> (ScClass, Partition) {
    let class = class_of_diagonal(set);
    let pair = sequence_pair_of_diagonal(set);
    (class, mu_of_pair(&pair))
}

fn mu_of_pair(pair: &DiagonalSequencePair) -> Partition {
    let (r, s) = (pair.a.len(), pair.b.len());
    // μ_i = a_i + i + s - r for i <= r; never negative since a_i >= r - i
    let mut parts: Vec<usize> = pair
        .a
        .iter()
        .enumerate()
        .map(|(idx, &a)| a + idx + 1 + s - r)
        .collect();
    // the rest is the conjugate of γ = (b_1 - s, b_2 - s + 1, ..., b_s - 1)
    let gamma: Vec<usize> = pair
        .b
        .iter()
        .enumerate()
        .map(|(idx, &b)| b + idx - s)
        .collect();
    let gamma = Partition::new(gamma).expect("γ is weakly decreasing");
    parts.extend_from_slice(gamma.conjugate().parts());
    Partition::new(parts).expect("μ is weakly decreasing")
}

/// Inverse of [`phi`] within the class `class`.
///
/// # Panics
///
/// Panics if the split point `r` is not unique, which would contradict the
/// bijectivity of the map.
pub fn psi(class: ScClass, mu: &Partition) -> Partition {
    sc_from_diagonal(&psi_pair(class, mu).to_diagonal())
}

/// The diagonal sequence pair of `psi(class, mu)`.
pub fn psi_pair(class: ScClass, mu: &Partition) -> DiagonalSequencePair {
    let k = class.k();
    let ell = mu.len();
    let candidates: Vec<usize> = if class.m() % 2 == 1 {
        // unique s with μ_{s+k} >= s and μ_{s+k+1} <= s; then r = s + k
        (0..=ell)
            .filter(|&s| mu.part(s + k) >= s && mu.part(s + k + 1) <= s)
            .map(|s| s + k)
            .collect()
    } else {
        // unique r with μ_r >= r + k (vacuous for r = 0) and μ_{r+1} <= r + k
        (0..=ell)
            .filter(|&r| (r == 0 || mu.part(r) >= r + k) && mu.part(r + 1) <= r + k)
            .collect()
    };
    assert_eq!(
        candidates.len(),
        1,
        "split point for m = {class}, mu = ({mu}) is not unique: {candidates:?}"
    );
    let r = candidates[0];
    let s = if class.m() % 2 == 1 { r - k } else { r + k };

    let a: Vec<usize> = (1..=r).map(|i| mu.part(i) + r - i - s).collect();
    let tail = Partition::from_sorted(mu.parts()[r.min(ell)..].to_vec());
    let mut gamma = tail.conjugate().into_parts();
    assert!(
        gamma.len() <= s,
        "conjugate tail has more than s = {s} parts"
    );
    gamma.resize(s, 0);
    let b: Vec<usize> = gamma
        .iter()
        .enumerate()
        .map(|(idx, &g)| g + s - idx)
        .collect();
    DiagonalSequencePair { a, b }
}

/// `{h(i,1)/2 : h(i,1) even}` for a nonempty self-conjugate partition.
pub fn half_even_beta(sc: &Partition) -> Result<HalfEvenBetaSet> {
    require_self_conjugate(sc)?;
    if sc.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(HalfEvenBetaSet {
        values: sc
            .beta_set()
            .values()
            .iter()
            .filter(|&&h| h % 2 == 0)
            .map(|&h| h / 2)
            .collect(),
    })
}

/// `{h(1,1) - h(i,1) : 2 <= i <= ℓ}`.
pub fn complement_beta(mu: &Partition) -> Result<BTreeSet<usize>> {
    let beta = mu.beta_set();
    let Some(top) = beta.max() else {
        return Err(Error::EmptyPartition);
    };
    Ok(beta.values()[1..].iter().map(|&h| top - h).collect())
}

/// Removes the principal hook: the self-conjugate partition whose diagonal
/// hooks are those of `sc` without `δ_1`.
pub fn delete_principal_hook(sc: &Partition) -> Result<Partition> {
    let set = require_self_conjugate(sc)?;
    if set.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(sc_from_diagonal(&set.without_principal()))
}

/// The partition corresponding to `delete_principal_hook(λ)`, computed from
/// `μ = phi(λ)` alone: drop the first row when `δ_1 ≡ 1 (mod 4)`, drop the
/// first column when `δ_1 ≡ 3 (mod 4)`.
pub fn corresponding_partition_after_deletion(
    mu: &Partition,
    principal: DiagonalResidue,
) -> Partition {
    match principal {
        DiagonalResidue::One => {
            Partition::from_sorted(mu.parts().iter().skip(1).copied().collect())
        }
        DiagonalResidue::Three => Partition::from_sorted(
            mu.parts()
                .iter()
                .filter(|&&p| p > 1)
                .map(|&p| p - 1)
                .collect(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sc(values: &[usize]) -> Partition {
        sc_from_diagonal(&DiagonalHookSet::new(values.to_vec()).unwrap())
    }

    #[test]
    fn class_arithmetic() {
        assert_eq!(ScClass::from_difference(0), ScClass(0));
        assert_eq!(ScClass::from_difference(1), ScClass(1));
        assert_eq!(ScClass::from_difference(-1), ScClass(2));
        assert_eq!(ScClass::from_difference(2), ScClass(3));
        assert_eq!(ScClass::from_difference(-2), ScClass(4));
        for m in 0..20 {
            let class = ScClass(m);
            assert_eq!(ScClass::from_difference(class.difference()), class);
            assert_eq!(class.triangular(), m * (m + 1) / 2);
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&p(&[4, 4, 4, 3])), Ok(ScClass(2)));
        assert_eq!(classify(&sc(&[21, 15, 13, 9, 3, 1])), Ok(ScClass(3)));
        assert_eq!(classify(&Partition::empty()), Ok(ScClass(0)));
        assert!(matches!(
            classify(&p(&[2])),
            Err(Error::NotSelfConjugate(_))
        ));
        assert!(ScClass(2).contains(&p(&[4, 4, 4, 3])).unwrap());
    }

    #[test]
    fn sequence_pairs() {
        let pair = diagonal_sequence_pair(&p(&[4, 4, 4, 3])).unwrap();
        assert_eq!((pair.a(), pair.b()), (&[1][..], &[2, 1][..]));
        let pair = diagonal_sequence_pair(&sc(&[21, 15, 13, 9, 3, 1])).unwrap();
        assert_eq!((pair.a(), pair.b()), (&[5, 3, 2, 0][..], &[4, 1][..]));
        let pair = diagonal_sequence_pair(&sc(&[31, 19, 11, 5])).unwrap();
        assert_eq!((pair.a(), pair.b()), (&[1][..], &[8, 5, 3][..]));
        assert_eq!(pair.to_diagonal().deltas(), &[31, 19, 11, 5]);
        assert!(DiagonalSequencePair::new(vec![1, 1], vec![]).is_err());
        assert!(DiagonalSequencePair::new(vec![], vec![2, 0]).is_err());
        assert!(DiagonalSequencePair::new(vec![3, 0], vec![2, 1]).is_ok());
    }

    #[test]
    fn phi_examples() {
        let mu = p(&[4, 3, 3, 2, 1, 1]);
        assert_eq!(
            phi(&sc(&[21, 15, 13, 9, 3, 1])),
            Ok((ScClass(3), mu.clone()))
        );
        assert_eq!(phi(&sc(&[31, 19, 11, 5])), Ok((ScClass(4), mu)));
        assert_eq!(
            phi(&Partition::empty()),
            Ok((ScClass(0), Partition::empty()))
        );
        // δ = 1 alone: a = (0), r = 1, s = 0 and μ_1 = 0
        assert_eq!(phi(&p(&[1])), Ok((ScClass(1), Partition::empty())));
        assert!(phi(&p(&[5, 4, 2, 1])).is_err());
    }

    #[test]
    fn psi_examples() {
        let mu = p(&[4, 3, 3, 2, 1, 1]);
        assert_eq!(psi(ScClass(3), &mu), sc(&[21, 15, 13, 9, 3, 1]));
        assert_eq!(psi(ScClass(4), &mu), sc(&[31, 19, 11, 5]));
        assert_eq!(psi(ScClass(0), &Partition::empty()), Partition::empty());
        let lam = psi(ScClass(1), &p(&[1]));
        assert_eq!(lam, p(&[3, 1, 1]));
        assert_eq!(lam.weight(), 5);
        let pair = psi_pair(ScClass(3), &mu);
        assert_eq!((pair.a(), pair.b()), (&[5, 3, 2, 0][..], &[4, 1][..]));
    }

    #[test]
    fn half_even_beta_examples() {
        assert_eq!(
            half_even_beta(&sc(&[21, 15, 13, 9, 3, 1]))
                .unwrap()
                .values(),
            &[9, 6, 4, 1]
        );
        assert_eq!(
            half_even_beta(&sc(&[31, 19, 11, 5])).unwrap().values(),
            &[9, 7, 6, 4, 2, 1]
        );
        assert!(half_even_beta(&p(&[1])).unwrap().is_empty());
        assert_eq!(
            half_even_beta(&Partition::empty()),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn complement_beta_examples() {
        let got = complement_beta(&p(&[4, 3, 3, 2, 1, 1])).unwrap();
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![2, 3, 5, 7, 8]);
        assert!(complement_beta(&p(&[1])).unwrap().is_empty());
        assert!(complement_beta(&p(&[6])).unwrap().is_empty());
        assert_eq!(
            complement_beta(&Partition::empty()),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn deletion() {
        assert_eq!(delete_principal_hook(&p(&[4, 4, 4, 3])), Ok(p(&[3, 3, 2])));
        assert_eq!(delete_principal_hook(&p(&[1])), Ok(Partition::empty()));
        assert_eq!(
            delete_principal_hook(&sc(&[21, 15, 13, 9, 3, 1])),
            Ok(sc(&[15, 13, 9, 3, 1]))
        );
        assert_eq!(
            delete_principal_hook(&Partition::empty()),
            Err(Error::EmptyPartition)
        );

        let mu = p(&[4, 3, 3, 2, 1, 1]);
        assert_eq!(
            corresponding_partition_after_deletion(&mu, DiagonalResidue::One),
            p(&[3, 3, 2, 1, 1])
        );
        assert_eq!(
            corresponding_partition_after_deletion(&mu, DiagonalResidue::Three),
            p(&[3, 2, 2, 1])
        );
        for residue in [DiagonalResidue::One, DiagonalResidue::Three] {
            assert_eq!(
                corresponding_partition_after_deletion(&Partition::empty(), residue),
                Partition::empty()
            );
        }
    }
}
