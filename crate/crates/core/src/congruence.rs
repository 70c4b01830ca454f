//! Congruences, quotients and the canonical congruences σ, μ and ξ.

use std::collections::{BTreeSet, HashSet};
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::semigroup::FiniteInverseSemigroup;
use crate::util::{class_index, partition_by_key, UnionFind};

/// Default size cap for [`all_congruences`].
pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// An equivalence on `0..n`, stored as sorted classes listed in order of
/// their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    classes: Vec<Vec<usize>>,
    index: Vec<usize>,
}

impl Congruence {
    pub fn from_key<K: Eq + Hash>(n: usize, key: impl Fn(usize) -> K) -> Self {
        Self::from_partition(n, partition_by_key(n, key))
    }

    fn from_partition(n: usize, classes: Vec<Vec<usize>>) -> Self {
        let index = class_index(n, &classes);
        Self { classes, index }
    }

    /// Builds from arbitrary classes, which must cover `0..n` exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut seen = vec![false; n];
        for &x in classes.iter().flatten() {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Format(format!(
                    "element {x} repeated or out of range"
                )));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Format("classes do not cover every element".into()));
        }
        let idx = class_index(n, classes);
        Ok(Self::from_key(n, |a| idx[a]))
    }

    pub fn equality(n: usize) -> Self {
        Self::from_key(n, |a| a)
    }

    pub fn universal(n: usize) -> Self {
        Self::from_key(n, |_| ())
    }

    /// Number of elements of the base set.
    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.index[a]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.index[a] == self.index[b]
    }

    pub fn is_equality(&self) -> bool {
        self.classes.len() == self.size()
    }

    pub fn is_universal(&self) -> bool {
        self.classes.len() <= 1
    }

    /// Containment of relations: every class of `self` lies in a class of `other`.
    pub fn is_contained_in(&self, other: &Congruence) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| other.related(x, c[0])))
    }

    /// Join in the lattice of equivalences, which for congruences is again
    /// a congruence.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for c in self.classes.iter().chain(&other.classes) {
            for &x in &c[1..] {
                uf.union(c[0], x);
            }
        }
        Self::from_partition(self.size(), uf.classes())
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        Self::from_key(self.size(), |a| (self.index[a], other.index[a]))
    }

    /// Left and right compatibility with multiplication.
    pub fn is_congruence_on(&self, s: &FiniteInverseSemigroup) -> bool {
        self.size() == s.len()
            && self.classes.iter().all(|c| {
                c[1..].iter().all(|&x| {
                    s.elements().all(|u| {
                        self.related(s.mul(u, c[0]), s.mul(u, x))
                            && self.related(s.mul(c[0], u), s.mul(x, u))
                    })
                })
            })
    }

    /// Each class holds at most one idempotent.
    pub fn is_idempotent_separating(&self, s: &FiniteInverseSemigroup) -> bool {
        let mut seen = vec![false; self.num_classes()];
        s.idempotents()
            .iter()
            .all(|&e| !std::mem::replace(&mut seen[self.index[e]], true))
    }

    /// An element related to an idempotent is an idempotent.
    pub fn is_idempotent_pure(&self, s: &FiniteInverseSemigroup) -> bool {
        self.classes
            .iter()
            .filter(|c| c.iter().any(|&x| s.is_idempotent(x)))
            .all(|c| c.iter().all(|&x| s.is_idempotent(x)))
    }

    /// The class of zero is a singleton.
    pub fn is_zero_restricted(&self, s: &FiniteInverseSemigroup) -> Result<bool> {
        let z = s.require_zero()?;
        Ok(self.classes[self.index[z]].len() == 1)
    }

    /// The quotient is a group, i.e. all idempotents are related.
    pub fn has_group_quotient(&self, s: &FiniteInverseSemigroup) -> bool {
        let e = s.idempotents();
        e.iter().all(|&x| self.related(x, e[0]))
    }

    /// Classes as sorted lists of labels, sorted.
    pub fn labelled(&self, s: &FiniteInverseSemigroup) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .classes
            .iter()
            .map(|c| {
                let mut v: Vec<String> = c.iter().map(|&x| s.label(x).to_owned()).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }
}

/// The least congruence containing the given pairs.
pub fn congruence_closure(s: &FiniteInverseSemigroup, pairs: &[(usize, usize)]) -> Congruence {
    let mut uf = UnionFind::new(s.len());
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = work.pop() {
        if uf.union(a, b) {
            for u in s.elements() {
                work.push((s.mul(u, a), s.mul(u, b)));
                work.push((s.mul(a, u), s.mul(b, u)));
            }
        }
    }
    Congruence::from_partition(s.len(), uf.classes())
}

/// Every congruence on `S`, as the closure under joins of the principal
/// congruences. Sorted by number of classes, descending, then by classes.
pub fn all_congruences(s: &FiniteInverseSemigroup, bound: usize) -> Result<Vec<Congruence>> {
    if s.len() > bound {
        return Err(Error::BoundExceeded {
            what: "congruence oracle",
            size: s.len(),
            bound,
        });
    }
    let mut principal: BTreeSet<Congruence> = BTreeSet::new();
    for a in s.elements() {
        for b in a + 1..s.len() {
            principal.insert(congruence_closure(s, &[(a, b)]));
        }
    }
    let principal: Vec<Congruence> = principal.into_iter().collect();
    let mut all: HashSet<Congruence> = HashSet::new();
    let mut work = vec![Congruence::equality(s.len())];
    all.insert(work[0].clone());
    while let Some(c) = work.pop() {
        for p in &principal {
            let j = c.join(p);
            if all.insert(j.clone()) {
                work.push(j);
            }
        }
    }
    let mut out: Vec<Congruence> = all.into_iter().collect();
    out.sort_by(|x, y| {
        y.num_classes()
            .cmp(&x.num_classes())
            .then_with(|| x.classes.cmp(&y.classes))
    });
    Ok(out)
}

/// The quotient `S/ρ` and the natural map. Element `i` of the quotient is
/// class `i` of `ρ`, labelled by its least member.
pub fn quotient(
    s: &FiniteInverseSemigroup,
    rho: &Congruence,
) -> Result<(FiniteInverseSemigroup, Homomorphism)> {
    if !rho.is_congruence_on(s) {
        return Err(Error::NotAHomomorphism(
            "relation is not a congruence".into(),
        ));
    }
    let k = rho.num_classes();
    let reps: Vec<usize> = rho.classes.iter().map(|c| c[0]).collect();
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| rho.class_of(s.mul(a, b))).collect())
        .collect();
    let labels = reps.iter().map(|&a| s.label(a).to_owned()).collect();
    let q = FiniteInverseSemigroup::from_table(labels, &table, None, None)?;
    debug_assert_eq!(q.len(), k);
    let map = s.elements().map(|a| rho.class_of(a)).collect();
    let h = Homomorphism::new(s.clone(), q.clone(), map)?;
    Ok((q, h))
}

pub fn is_ideal(s: &FiniteInverseSemigroup, ideal: &[usize]) -> bool {
    let mut inside = vec![false; s.len()];
    for &x in ideal {
        inside[x] = true;
    }
    !ideal.is_empty()
        && ideal.iter().all(|&x| {
            s.elements()
                .all(|u| inside[s.mul(u, x)] && inside[s.mul(x, u)])
        })
}

/// The smallest ideal containing the given elements.
pub fn ideal_generated_by(s: &FiniteInverseSemigroup, gens: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; s.len()];
    for &a in gens {
        for (x, b) in crate::greens::principal_ideal(s, a).into_iter().enumerate() {
            inside[x] |= b;
        }
    }
    s.elements().filter(|&x| inside[x]).collect()
}

pub fn rees_congruence(s: &FiniteInverseSemigroup, ideal: &[usize]) -> Result<Congruence> {
    if !is_ideal(s, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let mut inside = vec![false; s.len()];
    for &x in ideal {
        inside[x] = true;
    }
    Ok(Congruence::from_key(s.len(), |a| {
        if inside[a] {
            usize::MAX
        } else {
            a
        }
    }))
}

/// `S/I`: the ideal collapses to a zero, which sits at the position of the
/// least ideal element.
pub fn rees_quotient(
    s: &FiniteInverseSemigroup,
    ideal: &[usize],
) -> Result<FiniteInverseSemigroup> {
    let rho = rees_congruence(s, ideal)?;
    Ok(quotient(s, &rho)?.0)
}

/// `s σ t` iff some `u` lies below both.
pub fn sigma(s: &FiniteInverseSemigroup) -> Congruence {
    let mut uf = UnionFind::new(s.len());
    for a in s.elements() {
        for b in a + 1..s.len() {
            if s.elements().any(|u| s.leq(u, a) && s.leq(u, b)) {
                uf.union(a, b);
            }
        }
    }
    Congruence::from_partition(s.len(), uf.classes())
}

/// `s μ t` iff `ses⁻¹ = tet⁻¹` for every idempotent `e`.
pub fn mu(s: &FiniteInverseSemigroup) -> Congruence {
    Congruence::from_key(s.len(), |a| {
        s.idempotents()
            .iter()
            .map(|&e| s.mul(s.mul(a, e), s.inv(a)))
            .collect::<Vec<usize>>()
    })
}

/// `s ξ t` iff `asb = 0 ⇔ atb = 0` for all `a, b`.
pub fn xi(s: &FiniteInverseSemigroup) -> Result<Congruence> {
    let z = s.require_zero()?;
    Ok(Congruence::from_key(s.len(), |x| {
        s.elements()
            .flat_map(|a| s.elements().map(move |b| (a, b)))
            .map(|(a, b)| s.mul(s.mul(a, x), b) == z)
            .collect::<Vec<bool>>()
    }))
}

/// The compatibility relation as a list of classes is not generally an
/// equivalence; this reports whether it is one.
pub fn compatibility_is_transitive(s: &FiniteInverseSemigroup) -> bool {
    s.elements().all(|a| {
        s.elements().filter(|&b| s.compatible(a, b)).all(|b| {
            s.elements()
                .all(|c| !s.compatible(b, c) || s.compatible(a, c))
        })
    })
}

/// Compatibility as a congruence, when it is an equivalence.
pub fn compatibility_congruence(s: &FiniteInverseSemigroup) -> Option<Congruence> {
    if !compatibility_is_transitive(s) {
        return None;
    }
    Some(Congruence::from_key(s.len(), |a| {
        s.elements()
            .find(|&b| s.compatible(a, b))
            .expect("a is compatible with itself")
    }))
}

/// Given `θ: S → G` with `G` a group, the unique `θ*: S/σ → G` with
/// `θ = θ* ∘ σ♮`.
pub fn factor_through_sigma(theta: &Homomorphism) -> Result<Homomorphism> {
    let (s, g) = (theta.source(), theta.target());
    if g.idempotents().len() != 1 {
        return Err(Error::TargetNotAGroup);
    }
    let sig = sigma(s);
    let (q, _) = quotient(s, &sig)?;
    let mut map = Vec::with_capacity(sig.num_classes());
    for c in sig.classes() {
        let v = theta.apply(c[0]);
        if c.iter().any(|&x| theta.apply(x) != v) {
            return Err(Error::NotAHomomorphism(
                "map is not constant on σ-classes".into(),
            ));
        }
        map.push(v);
    }
    Homomorphism::new(q, g.clone(), map)
}

/// Congruence-free test via fundamental, 0-simple and 0-disjunctive.
/// Semigroups of order one are reported as not congruence-free.
pub fn is_congruence_free(s: &FiniteInverseSemigroup) -> Result<bool> {
    s.require_zero()?;
    if s.len() < 2 {
        return Ok(false);
    }
    Ok(crate::predicates::is_fundamental(s)
        && crate::predicates::is_0_simple(s)? == Some(true)
        && crate::predicates::is_0_disjunctive(s)?)
}

/// Congruence-free test by enumerating the congruence lattice.
pub fn is_congruence_free_by_oracle(s: &FiniteInverseSemigroup, bound: usize) -> Result<bool> {
    Ok(s.len() >= 2 && all_congruences(s, bound)?.len() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbij::{enumerate_symmetric_inverse_monoid, PartialBijection};
    use crate::semigroup::closure_from_generators;

    fn sym(n: usize) -> FiniteInverseSemigroup {
        FiniteInverseSemigroup::from_partial_bijections(
            &enumerate_symmetric_inverse_monoid(n, 5).unwrap(),
        )
        .unwrap()
    }

    fn b2() -> FiniteInverseSemigroup {
        closure_from_generators(&[PartialBijection::parse("1>2", 2).unwrap()], 100)
            .unwrap()
            .0
    }

    fn chain(n: usize) -> FiniteInverseSemigroup {
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
        FiniteInverseSemigroup::from_table(
            (0..n).map(|i| i.to_string()).collect(),
            &table,
            None,
            None,
        )
        .unwrap()
    }

    fn cyclic(n: usize) -> FiniteInverseSemigroup {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteInverseSemigroup::from_table(
            (0..n).map(|i| format!("g{i}")).collect(),
            &table,
            None,
            None,
        )
        .unwrap()
    }

    #[test]
    fn closure_examples() {
        let s = b2();
        assert!(congruence_closure(&s, &[]).is_equality());
        let z = s.zero().unwrap();
        for a in s.elements().filter(|&a| a != z) {
            assert!(congruence_closure(&s, &[(z, a)]).is_universal());
        }
        let i2 = sym(2);
        let c = congruence_closure(&i2, &[(i2.find_label("1>1").unwrap(), i2.one().unwrap())]);
        assert!(c.is_congruence_on(&i2));
        assert!(c.related(
            i2.find_label("1>2").unwrap(),
            i2.find_label("1>2,2>1").unwrap()
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(all_congruences(&cyclic(1), 12).unwrap().len(), 1);
        assert_eq!(all_congruences(&b2(), 12).unwrap().len(), 2);
        assert_eq!(all_congruences(&chain(2), 12).unwrap().len(), 2);
        assert!(matches!(
            all_congruences(&sym(3), 12),
            Err(Error::BoundExceeded { .. })
        ));
        for c in all_congruences(&sym(2), 12).unwrap() {
            assert!(c.is_congruence_on(&sym(2)));
        }
    }

    #[test]
    fn quotients() {
        let s = sym(2);
        let (q, h) = quotient(&s, &Congruence::equality(7)).unwrap();
        assert_eq!(q, s);
        assert!(h.is_injective());
        let c = chain(3);
        let (q, _) = quotient(&c, &Congruence::universal(3)).unwrap();
        assert_eq!(q.len(), 1);
        let (q, _) = quotient(&s, &mu(&s)).unwrap();
        assert_eq!(q, s);
        let bad = Congruence::from_classes(3, &[vec![0, 2], vec![1]]).unwrap();
        assert!(quotient(&c, &bad).is_err());
    }

    #[test]
    fn rees_quotients() {
        let s = sym(2);
        let z = s.zero().unwrap();
        assert_eq!(rees_quotient(&s, &[z]).unwrap(), s);
        let rank1: Vec<usize> = s
            .elements()
            .filter(|&a| crate::pbij::label_rank(s.label(a)).unwrap() <= 1)
            .collect();
        let q = rees_quotient(&s, &rank1).unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(q.idempotents().len(), 2);
        assert!(q.zero().is_some() && q.one().is_some());
        assert_eq!(
            rees_quotient(&s, &s.elements().collect::<Vec<_>>())
                .unwrap()
                .len(),
            1
        );
        assert!(matches!(
            rees_quotient(&s, &[s.one().unwrap()]),
            Err(Error::NotAnIdeal)
        ));
        assert_eq!(
            ideal_generated_by(&s, &[s.find_label("1>2").unwrap()]),
            rank1
        );
    }

    #[test]
    fn sigma_examples() {
        assert!(sigma(&cyclic(3)).is_equality());
        assert!(sigma(&sym(2)).is_universal());
        assert!(sigma(&chain(3)).is_universal());
    }

    #[test]
    fn mu_examples() {
        assert!(mu(&chain(3)).is_equality());
        assert!(mu(&cyclic(3)).is_universal());
        // (Z_2)⁰: classes {0}, {e, g}
        let g0 = FiniteInverseSemigroup::from_table(
            vec!["0".into(), "e".into(), "g".into()],
            &[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]],
            None,
            None,
        )
        .unwrap();
        let m = mu(&g0);
        assert_eq!(m.classes(), &[vec![0], vec![1, 2]]);
        let (q, _) = quotient(&g0, &m).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.idempotents().len(), 2);
    }

    #[test]
    fn xi_examples() {
        assert!(xi(&b2()).unwrap().is_equality());
        assert!(xi(&sym(2)).unwrap().is_equality());
        assert_eq!(xi(&chain(3)).unwrap().classes(), &[vec![0], vec![1, 2]]);
        assert!(matches!(xi(&cyclic(2)), Err(Error::NoZero)));
    }

    #[test]
    fn factor_through_sigma_examples() {
        let s = chain(3);
        let (q, nat) = quotient(&s, &sigma(&s)).unwrap();
        let star = factor_through_sigma(&nat).unwrap();
        assert_eq!(star.map(), &[0]);
        assert_eq!(q.len(), 1);
        // Z_2 × 2-chain projected to Z_2
        let z2 = cyclic(2);
        let c2 = chain(2);
        let labels: Vec<String> = (0..4).map(|i| format!("({},{})", i / 2, i % 2)).collect();
        let table: Vec<Vec<usize>> = (0..4)
            .map(|x| {
                (0..4)
                    .map(|y| z2.mul(x / 2, y / 2) * 2 + c2.mul(x % 2, y % 2))
                    .collect()
            })
            .collect();
        let p = FiniteInverseSemigroup::from_table(labels, &table, None, None).unwrap();
        let theta =
            Homomorphism::new(p.clone(), z2.clone(), (0..4).map(|x| x / 2).collect()).unwrap();
        let star = factor_through_sigma(&theta).unwrap();
        let (_, nat) = quotient(&p, &sigma(&p)).unwrap();
        for x in p.elements() {
            assert_eq!(star.apply(nat.apply(x)), theta.apply(x));
        }
        let not_group = Homomorphism::identity(&c2);
        assert!(matches!(
            factor_through_sigma(&not_group),
            Err(Error::TargetNotAGroup)
        ));
    }

    #[test]
    fn congruence_free_examples() {
        assert!(is_congruence_free(&b2()).unwrap());
        assert!(!is_congruence_free(&sym(2)).unwrap());
        assert!(is_congruence_free(&chain(2)).unwrap());
        assert!(!is_congruence_free(&chain(1)).unwrap());
        assert!(matches!(is_congruence_free(&cyclic(2)), Err(Error::NoZero)));
        for s in [b2(), sym(2), chain(2), chain(3)] {
            assert_eq!(
                is_congruence_free(&s).unwrap(),
                is_congruence_free_by_oracle(&s, 12).unwrap()
            );
        }
    }

    #[test]
    fn labelled_classes_are_sorted() {
        let s = chain(3);
        let c = xi(&s).unwrap();
        assert_eq!(
            c.labelled(&s),
            vec![vec!["0".to_string()], vec!["1".into(), "2".into()]]
        );
    }
}
