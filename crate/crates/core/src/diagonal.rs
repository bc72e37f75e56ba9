//! Main diagonal hook sets of self-conjugate partitions.
//!
//! A self-conjugate partition is determined by the hook lengths
//! `δ_1 > δ_2 > ... > δ_d` of its diagonal boxes, and these are distinct odd
//! numbers. Conversely every finite set of distinct odd positive integers is
//! the diagonal hook set of exactly one self-conjugate partition, whose
//! weight is the sum of the set.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{parse_list, BetaSet, Partition};

/// Strictly decreasing odd positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalHookSet {
    deltas: Vec<usize>,
}

impl DiagonalHookSet {
    /// Accepts the entries in any order. Even, zero or repeated entries are
    /// rejected.
    pub fn new(values: impl Into<Vec<usize>>) -> Result<Self> {
        let mut deltas = values.into();
        deltas.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(&even) = deltas.iter().find(|&&v| v % 2 == 0) {
            return Err(Error::InvalidDiagonal(format!(
                "{even} is not a positive odd number"
            )));
        }
        if let Some(w) = deltas.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidDiagonal(format!(
                "{} appears more than once",
                w[0]
            )));
        }
        Ok(DiagonalHookSet { deltas })
    }

    pub(crate) fn from_sorted(deltas: Vec<usize>) -> Self {
        debug_assert!(deltas.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(deltas.iter().all(|d| d % 2 == 1));
        DiagonalHookSet { deltas }
    }

    pub fn deltas(&self) -> &[usize] {
        &self.deltas
    }

    /// Number of diagonal boxes.
    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    /// Weight of the corresponding self-conjugate partition.
    pub fn weight(&self) -> usize {
        self.deltas.iter().sum()
    }

    /// The largest hook, `h(1,1)`.
    pub fn principal(&self) -> Option<usize> {
        self.deltas.first().copied()
    }

    /// The set with its largest element removed.
    pub fn without_principal(&self) -> DiagonalHookSet {
        DiagonalHookSet {
            deltas: self.deltas.iter().skip(1).copied().collect(),
        }
    }
}

impl fmt::Display for DiagonalHookSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.deltas.iter().map(|d| d.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for DiagonalHookSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl std::str::FromStr for DiagonalHookSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).and_then(DiagonalHookSet::new)
    }
}

impl serde::Serialize for DiagonalHookSet {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The diagonal hooks split by residue mod 4.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiagonalClasses {
    /// Entries `≡ 1 (mod 4)`, decreasing.
    pub d1: Vec<usize>,
    /// Entries `≡ 3 (mod 4)`, decreasing.
    pub d3: Vec<usize>,
}

/// Residue class of an odd number mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum DiagonalResidue {
    One,
    Three,
}

impl DiagonalResidue {
    pub fn of(delta: usize) -> Option<DiagonalResidue> {
        match delta % 4 {
            1 => Some(DiagonalResidue::One),
            3 => Some(DiagonalResidue::Three),
            _ => None,
        }
    }
}

/// Diagonal hook lengths of a self-conjugate partition.
pub fn diagonal_hooks(p: &Partition) -> Result<DiagonalHookSet> {
    if !p.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(p.to_string()));
    }
    // on the diagonal λ'_i = λ_i, so h(i,i) = 2λ_i - 2i + 1
    let d = p.durfee_side();
    Ok(DiagonalHookSet::from_sorted(
        (1..=d).map(|i| 2 * p.part(i) + 1 - 2 * i).collect(),
    ))
}

/// The unique self-conjugate partition with the given diagonal hooks.
pub fn sc_from_diagonal(set: &DiagonalHookSet) -> Partition {
    let d = set.len();
    let mut parts: Vec<usize> = set
        .deltas
        .iter()
        .enumerate()
        .map(|(idx, &delta)| (delta - 1) / 2 + idx + 1)
        .collect();
    // rows below the Durfee square mirror the columns to its right
    let width = parts.first().copied().unwrap_or(0);
    for row in d + 1..=width {
        let len = parts[..d].iter().take_while(|&&p| p >= row).count();
        if len == 0 {
            break;
        }
        parts.push(len);
    }
    Partition::from_sorted(parts)
}

pub fn split_diagonal_classes(set: &DiagonalHookSet) -> DiagonalClasses {
    let (d1, d3) = set.deltas.iter().partition(|&&delta| delta % 4 == 1);
    DiagonalClasses { d1, d3 }
}

/// First-column hooks computed from the diagonal hooks alone.
///
/// The top `d` rows contribute `(δ_1 + δ_i) / 2`. The rows below the Durfee
/// square contribute `{1, ..., (δ_1 - 1) / 2}` with the values
/// `(δ_1 - δ_j) / 2`, `j >= 2`, removed.
pub fn beta_from_diagonal(set: &DiagonalHookSet) -> BetaSet {
    let Some(first) = set.principal() else {
        return BetaSet::default();
    };
    let upper = set.deltas.iter().map(|&delta| (first + delta) / 2);
    let excluded: Vec<usize> = set.deltas[1..]
        .iter()
        .map(|&delta| (first - delta) / 2)
        .collect();
    let lower = (1..=(first - 1) / 2).filter(|v| !excluded.contains(v));
    BetaSet::from_values(upper.chain(lower)).expect("beta values from a diagonal set are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dset(values: &[usize]) -> DiagonalHookSet {
        DiagonalHookSet::new(values.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(dset(&[3, 7, 5]).deltas(), &[7, 5, 3]);
        assert!(DiagonalHookSet::new(vec![3, 4]).is_err());
        assert!(DiagonalHookSet::new(vec![0]).is_err());
        assert!(DiagonalHookSet::new(vec![5, 5]).is_err());
        assert_eq!(
            "21,15,13,9,3,1"
                .parse::<DiagonalHookSet>()
                .unwrap()
                .weight(),
            62
        );
    }

    #[test]
    fn diagonal_hooks_examples() {
        assert_eq!(diagonal_hooks(&p(&[4, 4, 4, 3])).unwrap(), dset(&[7, 5, 3]));
        assert_eq!(diagonal_hooks(&p(&[1])).unwrap(), dset(&[1]));
        assert_eq!(diagonal_hooks(&p(&[2, 1])).unwrap(), dset(&[3]));
        assert_eq!(diagonal_hooks(&Partition::empty()).unwrap(), dset(&[]));
        assert!(matches!(
            diagonal_hooks(&p(&[5, 4, 2, 1])),
            Err(Error::NotSelfConjugate(_))
        ));
    }

    #[test]
    fn reconstruction() {
        assert_eq!(sc_from_diagonal(&dset(&[7, 5, 3])), p(&[4, 4, 4, 3]));
        assert_eq!(sc_from_diagonal(&dset(&[])), Partition::empty());
        assert_eq!(sc_from_diagonal(&dset(&[5, 3])), p(&[3, 3, 2]));
        let big = sc_from_diagonal(&dset(&[21, 15, 13, 9, 3, 1]));
        assert_eq!(big.weight(), 62);
        assert!(big.is_self_conjugate());
        assert_eq!(big, p(&[11, 9, 9, 8, 6, 6, 4, 4, 3, 1, 1]));
    }

    #[test]
    fn classes() {
        let c = split_diagonal_classes(&dset(&[7, 5, 3]));
        assert_eq!((c.d1, c.d3), (vec![5], vec![7, 3]));
        let c = split_diagonal_classes(&dset(&[21, 15, 13, 9, 3, 1]));
        assert_eq!((c.d1, c.d3), (vec![21, 13, 9, 1], vec![15, 3]));
        assert_eq!(
            split_diagonal_classes(&dset(&[])),
            DiagonalClasses::default()
        );
        assert_eq!(DiagonalResidue::of(21), Some(DiagonalResidue::One));
        assert_eq!(DiagonalResidue::of(31), Some(DiagonalResidue::Three));
        assert_eq!(DiagonalResidue::of(4), None);
    }

    #[test]
    fn beta_from_diagonal_examples() {
        assert_eq!(
            beta_from_diagonal(&dset(&[7, 5, 3])).values(),
            &[7, 6, 5, 3]
        );
        assert_eq!(
            beta_from_diagonal(&dset(&[7, 5, 3])),
            p(&[4, 4, 4, 3]).beta_set()
        );
        assert_eq!(beta_from_diagonal(&dset(&[1])).values(), &[1]);
        assert_eq!(beta_from_diagonal(&dset(&[5])).values(), &[5, 2, 1]);
        assert_eq!(p(&[3, 1, 1]).beta_set().values(), &[5, 2, 1]);
        assert!(beta_from_diagonal(&dset(&[])).is_empty());
    }
}
