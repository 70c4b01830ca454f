//! Green's relations.

use crate::semigroup::FiniteInverseSemigroup;
use crate::util::{partition_by_key, UnionFind};

/// Partitions of the elements for each of Green's relations. Classes are
/// sorted and listed in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Greens {
    pub l: Vec<Vec<usize>>,
    pub r: Vec<Vec<usize>>,
    pub h: Vec<Vec<usize>>,
    pub d: Vec<Vec<usize>>,
    pub j: Vec<Vec<usize>>,
}

/// The two-sided principal ideal `S¹aS¹` as a membership vector.
pub fn principal_ideal(s: &FiniteInverseSemigroup, a: usize) -> Vec<bool> {
    let mut inside = vec![false; s.len()];
    inside[a] = true;
    for x in s.elements() {
        let xa = s.mul(x, a);
        inside[xa] = true;
        inside[s.mul(a, x)] = true;
        for y in s.elements() {
            inside[s.mul(xa, y)] = true;
        }
    }
    inside
}

/// Components of the underlying groupoid, as a representative per element:
/// `a` and `b` are 𝓓-related iff the returned values at `a` and `b` agree.
pub fn d_representatives(s: &FiniteInverseSemigroup) -> Vec<usize> {
    let mut uf = UnionFind::new(s.len());
    for a in s.elements() {
        uf.union(s.d(a), s.r(a));
    }
    s.elements().map(|a| uf.find(s.d(a))).collect()
}

/// 𝓙-classes from equality of principal ideals.
pub fn j_classes_by_ideals(s: &FiniteInverseSemigroup) -> Vec<Vec<usize>> {
    let ideals: Vec<Vec<bool>> = s.elements().map(|a| principal_ideal(s, a)).collect();
    partition_by_key(s.len(), |a| ideals[a].clone())
}

/// 𝓙-classes from the criterion `a ≤_J b ⇔ a 𝓓 b′` for some `b′ ≤ b`.
pub fn j_classes_by_criterion(s: &FiniteInverseSemigroup) -> Vec<Vec<usize>> {
    let drep = d_representatives(s);
    let below = |a: usize, b: usize| s.elements().any(|c| s.leq(c, b) && drep[c] == drep[a]);
    let up: Vec<Vec<bool>> = s
        .elements()
        .map(|a| s.elements().map(|b| below(a, b)).collect())
        .collect();
    partition_by_key(s.len(), |a| {
        s.elements()
            .filter(|&b| up[a][b] && up[b][a])
            .min()
            .unwrap_or(a)
    })
}

pub fn greens(s: &FiniteInverseSemigroup) -> Greens {
    let n = s.len();
    let drep = d_representatives(s);
    let j = j_classes_by_ideals(s);
    debug_assert_eq!(j, j_classes_by_criterion(s));
    Greens {
        l: partition_by_key(n, |a| s.d(a)),
        r: partition_by_key(n, |a| s.r(a)),
        h: partition_by_key(n, |a| (s.d(a), s.r(a))),
        d: partition_by_key(n, |a| drep[a]),
        j,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbij::enumerate_symmetric_inverse_monoid;

    fn sym(n: usize) -> FiniteInverseSemigroup {
        FiniteInverseSemigroup::from_partial_bijections(
            &enumerate_symmetric_inverse_monoid(n, 5).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn i2_d_classes_are_rank_classes() {
        let s = sym(2);
        let g = greens(&s);
        let mut sizes: Vec<usize> = g.d.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 4]);
        assert_eq!(g.d, g.j);
        assert_eq!(g.h.len(), 1 + 4 + 1);
    }

    #[test]
    fn j_two_ways_on_i3() {
        let s = sym(3);
        assert_eq!(j_classes_by_ideals(&s), j_classes_by_criterion(&s));
        let g = greens(&s);
        assert_eq!(g.d.len(), 4);
        // in a finite inverse semigroup D = J, and a D b iff |rank| agrees here
        for c in &g.d {
            let ranks: std::collections::BTreeSet<usize> = c
                .iter()
                .map(|&a| crate::pbij::label_rank(s.label(a)).unwrap())
                .collect();
            assert_eq!(ranks.len(), 1);
        }
    }

    #[test]
    fn group_and_semilattice_extremes() {
        let z3 = FiniteInverseSemigroup::from_table(
            vec!["0".into(), "1".into(), "2".into()],
            &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            None,
            None,
        )
        .unwrap();
        let g = greens(&z3);
        for p in [&g.l, &g.r, &g.h, &g.d, &g.j] {
            assert_eq!(p, &vec![vec![0, 1, 2]]);
        }
        let chain = FiniteInverseSemigroup::from_table(
            vec!["0".into(), "e".into(), "1".into()],
            &[vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
            None,
            None,
        )
        .unwrap();
        let g = greens(&chain);
        for p in [&g.l, &g.r, &g.h, &g.d, &g.j] {
            assert_eq!(p, &vec![vec![0], vec![1], vec![2]]);
        }
    }
}
