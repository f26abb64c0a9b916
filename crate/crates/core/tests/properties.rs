//! Property-based invariants for the combinatorial and I/O layers.

use proptest::prelude::*;

use wreathgap::combinatorics::{
    enumerate_multipartitions, enumerate_partitions, MultiPartition, Partition,
};
use wreathgap::groups::Permutation;
use wreathgap::hypergraph::{
    degree_profile, parse_hypergraph, serialize_hypergraph, WeightedHypergraph,
};
use wreathgap::subset::Subset;

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size)
        .prop_flat_map(|m| {
            let all = enumerate_partitions(m);
            let count = all.len();
            (Just(all), 0..count.max(1))
        })
        .prop_map(|(all, idx)| all[idx.min(all.len() - 1)].clone())
}

fn arb_hypergraph() -> impl Strategy<Value = WeightedHypergraph> {
    (2usize..=5)
        .prop_flat_map(|n| {
            let edges = prop::collection::vec(
                (1u32..(1 << n), 0.0f64..4.0),
                0..=6,
            );
            (Just(n), edges)
        })
        .prop_map(|(n, edges)| {
            let mut gamma = WeightedHypergraph::new(n).unwrap();
            for (mask, w) in edges {
                let b = Subset::from_mask(mask, n).unwrap();
                gamma.set_weight(&b, w).unwrap();
            }
            gamma
        })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(n).prop_perturb(move |n, mut rng| {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() as usize) % (i + 1);
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn partition_label_roundtrip(mu in arb_partition(9)) {
        let label = mu.to_string();
        prop_assert_eq!(Partition::parse(&label).unwrap(), mu);
    }

    #[test]
    fn multipartition_label_roundtrip(k in 1usize..4, n in 0usize..5, pick in 0usize..1000) {
        let all = enumerate_multipartitions(k, n);
        let mv = all[pick % all.len()].clone();
        let label = mv.to_string();
        prop_assert_eq!(MultiPartition::parse(&label).unwrap(), mv);
    }

    #[test]
    fn hypergraph_serialize_parse_identity(gamma in arb_hypergraph()) {
        let text = serialize_hypergraph(&gamma);
        let reparsed = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(&reparsed, &gamma);
        // Canonical: a second pass is byte-identical.
        prop_assert_eq!(serialize_hypergraph(&reparsed), text);
    }

    #[test]
    fn degree_profile_relabel_covariance(gamma in arb_hypergraph(), seed in any::<u64>()) {
        let n = gamma.n();
        let sigma = {
            let mut images: Vec<usize> = (0..n).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                images.swap(i, j);
            }
            Permutation::from_images(images).unwrap()
        };
        let relabeled = gamma.relabeled(&sigma).unwrap();
        let before = degree_profile(&gamma);
        let after = degree_profile(&relabeled);
        // Summation order differs after relabeling, so compare to rounding.
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * (1.0 + a.abs());
        prop_assert!(close(before.min_degree, after.min_degree));
        for i in 0..n {
            prop_assert!(close(before.per_vertex[i], after.per_vertex[sigma.apply(i)]));
        }
    }

    #[test]
    fn permutation_group_laws(a in arb_permutation(6), b in arb_permutation(6), c in arb_permutation(6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).parity(), a.parity() * b.parity());
    }

    #[test]
    fn subset_display_roundtrip(mask in 0u32..(1 << 6)) {
        let b = Subset::from_mask(mask, 6).unwrap();
        let verts = b.vertices();
        let back = Subset::from_vertices(&verts, 6).unwrap();
        prop_assert_eq!(b, back);
    }
}
