//! Self-conjugate partitions and their correspondence with pairs
//! `(m, μ)` of a class index and an ordinary partition.
//!
//! ```
//! use scpart::{phi, psi, Partition};
//!
//! let lambda: Partition = "4,4,4,3".parse().unwrap();
//! let (class, mu) = phi(&lambda).unwrap();
//! assert_eq!(class.m(), 2);
//! assert_eq!(psi(class, &mu), lambda);
//! ```

pub mod bijection;
pub mod diagonal;
pub mod enumeration;
pub mod error;
pub mod partition;
pub mod series;
pub mod verify;

pub use bijection::{
    classify, complement_beta, corresponding_partition_after_deletion, delete_principal_hook,
    diagonal_sequence_pair, half_even_beta, phi, psi, psi_pair, DiagonalSequencePair,
    HalfEvenBetaSet, ScClass,
};
pub use diagonal::{
    beta_from_diagonal, diagonal_hooks, sc_from_diagonal, split_diagonal_classes, DiagonalClasses,
    DiagonalHookSet, DiagonalResidue,
};
pub use enumeration::{count_table, partitions_of, self_conjugate_of, CountTable, Counter};
pub use error::{Error, Result};
pub use partition::{BetaSet, HookMultiset, Partition};
pub use series::{check_identity, product_form, IdentityReport, ProductKind, TruncatedSeries};
pub use verify::{run, run_all, CheckId, VerificationReport, VerifyParams};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/self-conjugate.md")]
    mod self_conjugate {}
    #[doc = include_str!("../../../book/src/correspondence.md")]
    mod correspondence {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
