use std::collections::BTreeSet;

use isg_core::bisection::{local_bisections, DEFAULT_BISECTION_BOUND};
use isg_core::boolean::{decompose_fundamental, is_boolean, product_of_symmetric};
use isg_core::congruence::{congruence_closure, mu, quotient, sigma};
use isg_core::format::{read_semigroup, write_semigroup};
use isg_core::greens::greens;
use isg_core::groupoid::{atomic_groupoid, groupoids_isomorphic};
use isg_core::hom::{are_isomorphic, wagner_preston};
use isg_core::munn::{munn_semigroup, MeetSemilattice};
use isg_core::predicates;
use isg_core::{
    closure_from_generators, enumerate_symmetric_inverse_monoid, FiniteGroupoid,
    FiniteInverseSemigroup, PartialBijection,
};
use proptest::prelude::*;

fn pbij(degree: usize) -> impl Strategy<Value = PartialBijection> {
    // a permutation of the points plus a domain mask
    (
        Just((1..=degree).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), degree),
    )
        .prop_map(move |(perm, mask)| {
            let pairs = (1..=degree)
                .filter(|&x| mask[x - 1])
                .map(|x| (x, perm[x - 1]));
            PartialBijection::new(degree, pairs).expect("partial bijection")
        })
}

fn generated(
    max_degree: usize,
) -> impl Strategy<
    Value = (
        Vec<PartialBijection>,
        FiniteInverseSemigroup,
        Vec<PartialBijection>,
    ),
> {
    (1..=max_degree)
        .prop_flat_map(|n| prop::collection::vec(pbij(n), 1..4))
        .prop_map(|gens| {
            let (s, elems) = closure_from_generators(&gens, 10_000).expect("closure");
            (gens, s, elems)
        })
}

fn partition(max_points: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1..=max_points)
        .prop_flat_map(|n| prop::collection::vec(0..n, n))
        .prop_map(|block_of| {
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            let mut seen: Vec<usize> = Vec::new();
            for (i, b) in block_of.iter().enumerate() {
                match seen.iter().position(|x| x == b) {
                    Some(j) => blocks[j].push(i + 1),
                    None => {
                        seen.push(*b);
                        blocks.push(vec![i + 1]);
                    }
                }
            }
            blocks
        })
}

fn graph_subset(a: &PartialBijection, b: &PartialBijection) -> bool {
    a.graph().all(|(x, y)| b.apply(x) == Some(y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_closed((gens, s, elems) in generated(4)) {
        for g in &gens {
            prop_assert!(elems.contains(g));
            prop_assert!(elems.contains(&g.invert()));
        }
        for (i, a) in elems.iter().enumerate() {
            prop_assert_eq!(&elems[s.inv(i)], &a.invert());
            for (j, b) in elems.iter().enumerate() {
                prop_assert_eq!(&elems[s.mul(i, j)], &a.compose(b).unwrap());
            }
        }
    }

    #[test]
    fn natural_order_is_restriction((_, s, elems) in generated(4)) {
        for a in s.elements() {
            for b in s.elements() {
                prop_assert_eq!(s.leq(a, b), graph_subset(&elems[a], &elems[b]));
                prop_assert_eq!(s.compatible(a, b), elems[a].compatible_union(&elems[b]).unwrap().is_some());
            }
        }
    }

    #[test]
    fn green_classes_by_domain_and_range((_, s, elems) in generated(4)) {
        let g = greens(&s);
        let key = |classes: &[Vec<usize>], a: usize| classes.iter().position(|c| c.contains(&a)).unwrap();
        for a in s.elements() {
            for b in s.elements() {
                prop_assert_eq!(key(&g.l, a) == key(&g.l, b), elems[a].domain() == elems[b].domain());
                prop_assert_eq!(key(&g.r, a) == key(&g.r, b), elems[a].range() == elems[b].range());
            }
        }
    }

    #[test]
    fn principal_congruence_is_least((_, s, _) in generated(3), a in 0usize..64, b in 0usize..64) {
        let (a, b) = (a % s.len(), b % s.len());
        let c = congruence_closure(&s, &[(a, b)]);
        prop_assert!(c.is_congruence_on(&s));
        prop_assert!(c.related(a, b));
        // closing the congruence's own pairs changes nothing, and each pair
        // generates a congruence inside it
        let again = congruence_closure(&s, &c.classes().iter().flat_map(|cl| cl.iter().map(|&x| (cl[0], x))).collect::<Vec<_>>());
        prop_assert_eq!(&again, &c);
        for x in s.elements() {
            for y in s.elements() {
                if c.related(x, y) {
                    let p = congruence_closure(&s, &[(x, y)]);
                    prop_assert!(p.is_contained_in(&c));
                }
            }
        }
    }

    #[test]
    fn sigma_and_mu((_, s, _) in generated(3)) {
        let sig = sigma(&s);
        prop_assert!(sig.has_group_quotient(&s));
        let m = mu(&s);
        prop_assert!(m.is_idempotent_separating(&s));
        let (q, nat) = quotient(&s, &m).unwrap();
        prop_assert!(predicates::is_fundamental(&q));
        prop_assert_eq!(&nat.kernel(), &m);
        for x in s.elements() {
            for y in s.elements() {
                // μ-related elements conjugate every idempotent the same way
                if m.related(x, y) {
                    for &e in s.idempotents() {
                        prop_assert_eq!(s.mul(s.mul(s.inv(x), e), x), s.mul(s.mul(s.inv(y), e), y));
                    }
                }
            }
        }
    }

    #[test]
    fn wagner_preston_embeds((_, s, _) in generated(3)) {
        let wp = wagner_preston(&s).unwrap();
        prop_assert!(wp.hom.is_injective());
        prop_assert!(are_isomorphic(&s, &wp.hom.image_semigroup().unwrap()));
    }

    #[test]
    fn semigroup_files_round_trip((_, s, _) in generated(3)) {
        let text = write_semigroup(&s).unwrap();
        let back = read_semigroup(&text, 10_000).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(write_semigroup(&back).unwrap(), text);
    }

    #[test]
    fn munn_semigroup_has_the_same_idempotents((_, s, _) in generated(3)) {
        let e = MeetSemilattice::of_idempotents(&s);
        let t = munn_semigroup(&e, 10_000).unwrap();
        prop_assert_eq!(t.semigroup.idempotents().len(), e.len());
        prop_assert!(predicates::is_fundamental(&t.semigroup));
    }

    #[test]
    fn equivalence_groupoids_give_products(blocks in partition(4)) {
        let g = FiniteGroupoid::from_equivalence(&blocks).unwrap();
        let k = local_bisections(&g, DEFAULT_BISECTION_BOUND).unwrap();
        prop_assert!(is_boolean(&k.semigroup).unwrap().is_some());
        prop_assert!(groupoids_isomorphic(&atomic_groupoid(&k.semigroup).unwrap(), &g).unwrap());
        let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let d = decompose_fundamental(&k.semigroup).unwrap();
        prop_assert_eq!(&d.factors, &sizes);
        prop_assert!(d.iso.is_injective() && d.iso.is_surjective());
    }

    #[test]
    fn products_decompose(factors in prop::collection::vec(0usize..=3, 0..3)) {
        let size: usize = factors
            .iter()
            .map(|&n| enumerate_symmetric_inverse_monoid(n, 5).unwrap().len())
            .product();
        prop_assume!(size <= 100);
        let p = product_of_symmetric(&factors).unwrap();
        prop_assert_eq!(p.len(), size);
        let d = decompose_fundamental(&p).unwrap();
        let mut want: Vec<usize> = factors.iter().copied().filter(|&n| n > 0).collect();
        want.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(d.factors, want);
    }
}

#[test]
fn symmetric_inverse_monoid_sizes() {
    // sum over k of C(n,k)^2 k!
    let expected = [1, 2, 7, 34, 209, 1546];
    for (n, &want) in expected.iter().enumerate() {
        let elems = enumerate_symmetric_inverse_monoid(n, 5).unwrap();
        assert_eq!(elems.len(), want, "I{n}");
        assert_eq!(elems.iter().collect::<BTreeSet<_>>().len(), want);
    }
}

#[test]
fn symmetric_d_classes_are_ranks() {
    for n in 0..=3 {
        let elems = enumerate_symmetric_inverse_monoid(n, 5).unwrap();
        let s = FiniteInverseSemigroup::from_partial_bijections(&elems).unwrap();
        let g = greens(&s);
        assert_eq!(g.d.len(), n + 1);
        assert_eq!(g.j, g.d);
        for class in &g.d {
            let ranks: BTreeSet<usize> = class.iter().map(|&a| elems[a].rank()).collect();
            assert_eq!(ranks.len(), 1);
        }
    }
}
