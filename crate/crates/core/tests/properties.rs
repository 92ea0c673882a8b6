use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unicyclic::edgelist::{read_edge_list, write_edge_list};
use unicyclic::invariants::oracle::{hosoya_oracle, rooted_subtree_oracle, sigma_oracle, subtree_count_oracle, wiener_oracle};
use unicyclic::verification::corpus::{random_tree, random_unicyclic};
use unicyclic::*;

/// A seeded tree (`cyclic = false`) or unicyclic graph on `n` vertices.
fn instance(seed: u64, n: usize, cyclic: bool) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if cyclic {
        random_unicyclic(&mut rng, n)
    } else {
        random_tree(&mut rng, n)
    }
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn profile_matches_oracle(seed: u64, n in 3usize..=12, cyclic: bool) {
        let g = instance(seed, n, cyclic);
        prop_assert_eq!(subtree_profile(&g).unwrap(), subtree_count_oracle(&g).unwrap());
    }

    #[test]
    fn rooted_profile_matches_oracle(seed: u64, n in 3usize..=11, cyclic: bool, pick in 0usize..64) {
        let g = instance(seed, n, cyclic);
        let v = pick % n;
        let anchors = [Anchor::Vertex(v)];
        prop_assert_eq!(rooted_subtree_profile(&g, &anchors).unwrap(), rooted_subtree_oracle(&g, &anchors).unwrap());
        let (a, b) = g.edges()[pick % g.edge_count()];
        let both = [Anchor::Vertex(v), Anchor::Edge(a, b)];
        prop_assert_eq!(rooted_subtree_profile(&g, &both).unwrap(), rooted_subtree_oracle(&g, &both).unwrap());
    }

    #[test]
    fn indices_match_oracles(seed: u64, n in 3usize..=12, cyclic: bool) {
        let g = instance(seed, n, cyclic);
        prop_assert_eq!(merrifield_simmons(&g), sigma_oracle(&g).unwrap());
        prop_assert_eq!(hosoya(&g), hosoya_oracle(&g).unwrap());
        prop_assert_eq!(wiener(&g).unwrap(), wiener_oracle(&g).unwrap());
    }

    #[test]
    fn sigma_and_hosoya_multiply_over_unions(s1: u64, s2: u64, n1 in 1usize..=9, n2 in 3usize..=9, cyclic: bool) {
        let a = instance(s1, n1, false);
        let b = instance(s2, n2, cyclic);
        let u = a.disjoint_union(&b);
        prop_assert_eq!(merrifield_simmons(&u), merrifield_simmons(&a) * merrifield_simmons(&b));
        prop_assert_eq!(hosoya(&u), hosoya(&a) * hosoya(&b));
    }

    #[test]
    fn invariants_ignore_labels(seed: u64, n in 3usize..=12, cyclic: bool, perm_seed: u64) {
        let g = instance(seed, n, cyclic);
        let h = shuffled(&g, perm_seed);
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(subtree_profile(&g).unwrap(), subtree_profile(&h).unwrap());
        prop_assert_eq!(merrifield_simmons(&g), merrifield_simmons(&h));
        prop_assert_eq!(hosoya(&g), hosoya(&h));
        prop_assert_eq!(wiener(&g).unwrap(), wiener(&h).unwrap());
        if cyclic {
            prop_assert_eq!(g.segment_sequence().unwrap(), h.segment_sequence().unwrap());
        }
    }

    #[test]
    fn canonical_form_is_a_fixed_point(seed: u64, n in 3usize..=12, cyclic: bool) {
        let g = instance(seed, n, cyclic);
        let (key, canon) = canonical_form(&g).unwrap();
        let (key2, canon2) = canonical_form(&canon).unwrap();
        prop_assert_eq!(key, key2);
        prop_assert_eq!(canon, canon2);
    }

    #[test]
    fn edge_list_round_trip(seed: u64, n in 1usize..=12, cyclic: bool) {
        let g = instance(seed, n.max(if cyclic { 3 } else { 1 }), cyclic);
        let text = write_edge_list(&g);
        prop_assert_eq!(read_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn merge_identity_on_random_pairs(s1: u64, s2: u64, n1 in 2usize..=8, n2 in 1usize..=8, c1: bool, pick in 0usize..64) {
        let k = instance(s1, if c1 { n1.max(3) } else { n1 }, c1);
        let h = instance(s2, n2, false);
        let (u, w) = (pick % k.vertex_count(), pick % h.vertex_count());
        let g = k.merge_vertices(u, &h, w).unwrap();
        let rooted = |x: &Graph, v: usize| rooted_subtree_count(x, &[Anchor::Vertex(v)]).unwrap();
        let rhs = subtree_count(&h).unwrap() + subtree_count(&k).unwrap() - 2u32
            + (rooted(&h, w) - 1u32) * (rooted(&k, u) - 1u32);
        prop_assert_eq!(subtree_count(&g).unwrap(), rhs);
    }

    #[test]
    fn girth_classes_partition_each_order(n in 3usize..=9) {
        let all = class_count(&ClassFilter::order(n)).unwrap();
        let by_girth: usize = (3..=n).map(|l| class_count(&ClassFilter::with_girth(n, l)).unwrap()).sum();
        let by_segments: usize = (1..=n).map(|m| class_count(&ClassFilter::segment_count(n, m)).unwrap()).sum();
        prop_assert_eq!(all, by_girth);
        prop_assert_eq!(all, by_segments);
    }
}

#[test]
fn enumeration_agrees_with_brute_force() {
    for n in 3..=7 {
        assert_eq!(unicyclic(&ClassFilter::order(n)).unwrap(), enumeration::unicyclic_brute_force(n).unwrap(), "n = {n}");
    }
    for n in 1..=8 {
        assert_eq!(trees(n).unwrap(), enumeration::trees_brute_force(n).unwrap(), "n = {n}");
    }
}

#[test]
fn known_class_counts() {
    let expected = [1, 2, 5, 13, 33, 89, 240, 657, 1806];
    for (n, &c) in (3..=11).zip(&expected) {
        assert_eq!(class_count(&ClassFilter::order(n)).unwrap(), c, "n = {n}");
    }
    let tree_counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
    for (n, &c) in (1..=12).zip(&tree_counts) {
        assert_eq!(trees(n).unwrap().len(), c, "n = {n}");
    }
}

#[test]
fn segment_classes_partition_each_order() {
    for n in 3..=10 {
        let seqs = verification::admissible_segment_sequences(n).unwrap();
        let total: usize = seqs
            .iter()
            .filter(|s| s.total() == n)
            .map(|s| class_count(&ClassFilter::segments(s.clone())).unwrap())
            .sum();
        assert_eq!(total, class_count(&ClassFilter::order(n)).unwrap(), "n = {n}");
    }
}
