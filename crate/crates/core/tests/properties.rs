use std::collections::BTreeSet;

use proptest::prelude::*;
use scpart::{
    diagonal_hooks, half_even_beta, phi, psi, sc_from_diagonal, DiagonalHookSet, Partition,
    ScClass, TruncatedSeries,
};

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn diagonal_set(max_half: usize) -> impl Strategy<Value = DiagonalHookSet> {
    prop::collection::btree_set(0..max_half, 0..=8).prop_map(|halves| {
        DiagonalHookSet::new(halves.into_iter().map(|h| 2 * h + 1).collect::<Vec<_>>()).unwrap()
    })
}

fn self_conjugate() -> impl Strategy<Value = Partition> {
    diagonal_set(20).prop_map(|d| sc_from_diagonal(&d))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..=50, order + 1)
        .prop_map(move |coeffs| TruncatedSeries::from_coeffs(order, coeffs))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(12, 12)) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.len(), p.part(1));
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn hook_table_transposes_under_conjugation(p in partition(10, 10)) {
        let table = p.hook_table();
        let conj_table = p.conjugate().hook_table();
        for (i, row) in table.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                prop_assert_eq!(conj_table[j][i], h);
                prop_assert_eq!(p.hook_length(i + 1, j + 1).unwrap(), h);
            }
        }
        prop_assert_eq!(p.hook_multiset().total(), p.weight());
    }

    #[test]
    fn beta_set_is_first_column(p in partition(10, 10)) {
        let beta = p.beta_set();
        prop_assert_eq!(beta.len(), p.len());
        let column: Vec<usize> = p.hook_table().iter().map(|row| row[0]).collect();
        prop_assert_eq!(beta.values(), &column[..]);
    }

    #[test]
    fn t_core_means_no_hook_divisible_by_t(p in partition(8, 8), t in 1usize..6) {
        let divisible = p.hook_multiset().iter().any(|(h, _)| h % t == 0);
        prop_assert_eq!(p.is_t_core(t).unwrap(), !divisible);
    }

    #[test]
    fn text_and_json_round_trip(p in partition(15, 10)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn diagonal_sets_round_trip(d in diagonal_set(25)) {
        let lambda = sc_from_diagonal(&d);
        prop_assert!(lambda.is_self_conjugate());
        prop_assert_eq!(lambda.weight(), d.weight());
        prop_assert_eq!(lambda.durfee_side(), d.len());
        prop_assert_eq!(diagonal_hooks(&lambda).unwrap(), d);
    }

    #[test]
    fn self_conjugate_hook_tables_are_symmetric(lambda in self_conjugate()) {
        let table = lambda.hook_table();
        for (i, row) in table.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                prop_assert_eq!(table[j][i], h);
            }
        }
    }

    #[test]
    fn phi_then_psi(lambda in self_conjugate()) {
        let (class, mu) = phi(&lambda).unwrap();
        prop_assert_eq!(lambda.weight(), 4 * mu.weight() + class.triangular());
        prop_assert_eq!(lambda.disparity(), class.triangular() as i64);
        prop_assert_eq!(psi(class, &mu), lambda);
    }

    #[test]
    fn psi_then_phi(mu in partition(8, 8), m in 0usize..10) {
        let lambda = psi(ScClass(m), &mu);
        prop_assert!(lambda.is_self_conjugate());
        prop_assert_eq!(phi(&lambda).unwrap(), (ScClass(m), mu));
    }

    #[test]
    fn even_hooks_double(lambda in self_conjugate()) {
        let (_, mu) = phi(&lambda).unwrap();
        let lam = lambda.hook_multiset();
        let small = mu.hook_multiset();
        for k in 1..=lambda.part(1) {
            prop_assert_eq!(lam.count(2 * k), 2 * small.count(k));
        }
    }

    #[test]
    fn half_even_beta_is_a_beta_set_of_mu(lambda in self_conjugate()) {
        prop_assume!(!lambda.is_empty());
        let (_, mu) = phi(&lambda).unwrap();
        let half: BTreeSet<usize> = half_even_beta(&lambda).unwrap().values().iter().copied().collect();
        let of_mu: BTreeSet<usize> = mu.beta_set().values().iter().copied().collect();
        let of_conj: BTreeSet<usize> = mu.conjugate().beta_set().values().iter().copied().collect();
        prop_assert!(half == of_mu || half == of_conj);
    }

    #[test]
    fn series_ring_laws(a in series(12), b in series(12), c in series(12)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &TruncatedSeries::zero(12));
        prop_assert_eq!(&a * &TruncatedSeries::one(12), a);
    }

    #[test]
    fn truncation_commutes_with_products(a in series(12), b in series(12), n in 0usize..=12) {
        prop_assert_eq!((&a * &b).truncate(n), &a.truncate(n) * &b.truncate(n));
    }
}
