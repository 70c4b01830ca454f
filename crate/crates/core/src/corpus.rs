//! Named example semigroups and groupoids.

use crate::bisection::{local_bisections, DEFAULT_BISECTION_BOUND};
use crate::boolean::{direct_product, symmetric_inverse_monoid};
use crate::groupoid::FiniteGroupoid;
use crate::pbij::PartialBijection;
use crate::semigroup::{closure_from_generators, FiniteInverseSemigroup};

fn from_table(labels: &[&str], table: &[Vec<usize>]) -> FiniteInverseSemigroup {
    FiniteInverseSemigroup::from_table(
        labels.iter().map(|l| l.to_string()).collect(),
        table,
        None,
        None,
    )
    .expect("corpus tables are valid")
}

pub fn cyclic_group(n: usize) -> FiniteInverseSemigroup {
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let labels: Vec<String> = (0..n)
        .map(|i| if i == 0 { "1".into() } else { format!("g{i}") })
        .collect();
    FiniteInverseSemigroup::from_table(labels, &table, None, None).expect("cyclic group")
}

pub fn trivial_group() -> FiniteInverseSemigroup {
    cyclic_group(1)
}

/// `(Z_2)⁰`.
pub fn z2_with_zero() -> FiniteInverseSemigroup {
    FiniteGroupoid::cyclic_group(2)
        .adjoin_zero()
        .expect("G⁰ is inverse")
}

/// The chain `0 < 1 < … < n-1` under minimum.
pub fn chain(n: usize) -> FiniteInverseSemigroup {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    FiniteInverseSemigroup::from_table(labels, &table, None, None).expect("chain")
}

/// Subsets of `{1, 2}` under intersection.
pub fn square() -> FiniteInverseSemigroup {
    from_table(
        &["{}", "{1}", "{2}", "{1,2}"],
        &[
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ],
    )
}

/// The Brandt semigroup generated by `1>2` on two points.
pub fn brandt() -> FiniteInverseSemigroup {
    let x = PartialBijection::parse("1>2", 2).expect("valid");
    closure_from_generators(&[x], 100).expect("five elements").0
}

pub fn symmetric(n: usize) -> FiniteInverseSemigroup {
    symmetric_inverse_monoid(n).expect("degree within the enumeration bound")
}

pub fn bisections_of(g: &FiniteGroupoid) -> FiniteInverseSemigroup {
    local_bisections(g, DEFAULT_BISECTION_BOUND)
        .expect("small groupoid")
        .semigroup
}

pub fn i1_times_i2() -> FiniteInverseSemigroup {
    direct_product(&symmetric(1), &symmetric(2)).expect("product")
}

pub fn equivalence_groupoid() -> FiniteGroupoid {
    FiniteGroupoid::from_equivalence(&[vec![1, 2], vec![3]]).expect("partition")
}

/// The shipped corpus, as `(name, semigroup)` pairs.
pub fn corpus() -> Vec<(&'static str, FiniteInverseSemigroup)> {
    vec![
        ("trivial", trivial_group()),
        ("z2", cyclic_group(2)),
        ("z3", cyclic_group(3)),
        ("z2_zero", z2_with_zero()),
        ("chain2", chain(2)),
        ("chain3", chain(3)),
        ("square", square()),
        ("b2", brandt()),
        ("i1", symmetric(1)),
        ("i2", symmetric(2)),
        ("i3", symmetric(3)),
        ("k_z2", bisections_of(&FiniteGroupoid::cyclic_group(2))),
        ("k_pair2", bisections_of(&FiniteGroupoid::pair_groupoid(2))),
        ("i1_x_i2", i1_times_i2()),
        ("k_equiv", bisections_of(&equivalence_groupoid())),
    ]
}

/// Groupoids used for the duality round trips.
pub fn duality_groupoids() -> Vec<(&'static str, FiniteGroupoid)> {
    vec![
        ("pair0", FiniteGroupoid::pair_groupoid(0)),
        ("pair1", FiniteGroupoid::pair_groupoid(1)),
        ("pair2", FiniteGroupoid::pair_groupoid(2)),
        ("pair3", FiniteGroupoid::pair_groupoid(3)),
        ("z2", FiniteGroupoid::cyclic_group(2)),
        ("z3", FiniteGroupoid::cyclic_group(3)),
        ("equiv", equivalence_groupoid()),
    ]
}
