//! Structural predicates of finite inverse semigroups.

use serde::Serialize;

use crate::congruence::{compatibility_congruence, sigma};
use crate::error::Result;
use crate::greens::{d_representatives, principal_ideal};
use crate::local::{centralizer_of_idempotents, units};
use crate::semigroup::FiniteInverseSemigroup;

/// A predicate value. Properties that only make sense in the presence of a
/// zero (or an identity) are `NotApplicable` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Yes,
    No,
    NotApplicable,
}

impl Flag {
    pub fn from_option(v: Option<bool>) -> Self {
        match v {
            Some(true) => Flag::Yes,
            Some(false) => Flag::No,
            None => Flag::NotApplicable,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Yes => "true",
            Flag::No => "false",
            Flag::NotApplicable => "n/a",
        }
    }
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::Yes
        } else {
            Flag::No
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub is_group: Flag,
    pub is_meet_semilattice: Flag,
    pub is_clifford: Flag,
    pub has_infinitesimal: Flag,
    pub is_e_unitary: Flag,
    pub is_e_star_unitary: Flag,
    pub is_factorizable: Flag,
    pub is_f_inverse: Flag,
    pub is_fundamental: Flag,
    pub is_0_simple: Flag,
    pub is_0_disjunctive: Flag,
    pub is_bisimple: Flag,
    pub is_0_bisimple: Flag,
}

impl Predicates {
    /// Name/value pairs in a fixed order.
    pub fn entries(&self) -> [(&'static str, Flag); 13] {
        [
            ("is_group", self.is_group),
            ("is_meet_semilattice", self.is_meet_semilattice),
            ("is_clifford", self.is_clifford),
            ("has_infinitesimal", self.has_infinitesimal),
            ("is_e_unitary", self.is_e_unitary),
            ("is_e_star_unitary", self.is_e_star_unitary),
            ("is_factorizable", self.is_factorizable),
            ("is_f_inverse", self.is_f_inverse),
            ("is_fundamental", self.is_fundamental),
            ("is_0_simple", self.is_0_simple),
            ("is_0_disjunctive", self.is_0_disjunctive),
            ("is_bisimple", self.is_bisimple),
            ("is_0_bisimple", self.is_0_bisimple),
        ]
    }
}

pub fn is_group(s: &FiniteInverseSemigroup) -> bool {
    s.idempotents().len() == 1
}

pub fn is_meet_semilattice(s: &FiniteInverseSemigroup) -> bool {
    s.idempotents().len() == s.len()
}

/// Idempotents are central.
pub fn is_clifford(s: &FiniteInverseSemigroup) -> bool {
    centralizer_of_idempotents(s).len() == s.len()
}

pub fn is_clifford_by_domains(s: &FiniteInverseSemigroup) -> bool {
    s.elements().all(|a| s.d(a) == s.r(a))
}

/// Every element lies in the group 𝓗-class of its domain idempotent.
pub fn is_clifford_by_union_of_groups(s: &FiniteInverseSemigroup) -> bool {
    s.elements().all(|a| {
        let e = s.d(a);
        crate::local::local_group_elements(s, e).is_ok_and(|h| h.contains(&a))
    })
}

/// A nonzero `a` with `a² = 0`; `None` without a zero.
pub fn has_infinitesimal(s: &FiniteInverseSemigroup) -> Option<bool> {
    let z = s.zero()?;
    Some(s.elements().any(|a| a != z && s.mul(a, a) == z))
}

pub fn is_e_unitary(s: &FiniteInverseSemigroup) -> bool {
    s.idempotents()
        .iter()
        .all(|&e| s.elements().all(|a| !s.leq(e, a) || s.is_idempotent(a)))
}

pub fn is_e_star_unitary(s: &FiniteInverseSemigroup) -> Option<bool> {
    let z = s.zero()?;
    Some(
        s.idempotents()
            .iter()
            .filter(|&&e| e != z)
            .all(|&e| s.elements().all(|a| !s.leq(e, a) || s.is_idempotent(a))),
    )
}

pub fn is_factorizable(s: &FiniteInverseSemigroup) -> Option<bool> {
    let u = units(s).ok()?;
    Some(s.elements().all(|a| u.iter().any(|&g| s.leq(a, g))))
}

pub fn is_f_inverse(s: &FiniteInverseSemigroup) -> Option<bool> {
    s.one()?;
    let sig = sigma(s);
    Some(sig.classes().iter().all(|c| s.greatest(c).is_some()))
}

pub fn is_fundamental(s: &FiniteInverseSemigroup) -> bool {
    centralizer_of_idempotents(s) == s.idempotents()
}

/// The only ideals are `{0}` and `S`; `None` without a zero.
pub fn is_0_simple(s: &FiniteInverseSemigroup) -> Result<Option<bool>> {
    let Some(z) = s.zero() else { return Ok(None) };
    Ok(Some(
        s.elements()
            .filter(|&a| a != z)
            .all(|a| principal_ideal(s, a).into_iter().all(|b| b)),
    ))
}

/// For all `0 ≠ f < e` in `E(S)` there is `0 ≠ g ≤ e` with `fg = 0`.
pub fn is_0_disjunctive(s: &FiniteInverseSemigroup) -> Result<bool> {
    let z = s.require_zero()?;
    let e = s.idempotents();
    Ok(e.iter().all(|&hi| {
        e.iter().filter(|&&f| f != z && s.lt(f, hi)).all(|&f| {
            e.iter()
                .any(|&g| g != z && s.leq(g, hi) && s.mul(f, g) == z)
        })
    }))
}

pub fn groupoid_component_count(s: &FiniteInverseSemigroup) -> usize {
    let mut reps = d_representatives(s);
    reps.sort_unstable();
    reps.dedup();
    reps.len()
}

/// Compute every flag.
pub fn predicates(s: &FiniteInverseSemigroup) -> Predicates {
    let has_zero = s.zero().is_some();
    let comps = groupoid_component_count(s);
    Predicates {
        is_group: is_group(s).into(),
        is_meet_semilattice: is_meet_semilattice(s).into(),
        is_clifford: is_clifford(s).into(),
        has_infinitesimal: Flag::from_option(has_infinitesimal(s)),
        is_e_unitary: is_e_unitary(s).into(),
        is_e_star_unitary: Flag::from_option(is_e_star_unitary(s)),
        is_factorizable: Flag::from_option(is_factorizable(s)),
        is_f_inverse: Flag::from_option(is_f_inverse(s)),
        is_fundamental: is_fundamental(s).into(),
        is_0_simple: Flag::from_option(is_0_simple(s).ok().flatten()),
        is_0_disjunctive: Flag::from_option(is_0_disjunctive(s).ok()),
        is_bisimple: (comps == 1).into(),
        is_0_bisimple: Flag::from_option(has_zero.then_some(comps == 2)),
    }
}

/// The equivalent forms of E-unitarity: compatibility transitive, equal to
/// σ, and σ idempotent-pure. Returned in that order with the definition first.
pub fn e_unitary_characterizations(s: &FiniteInverseSemigroup) -> [bool; 4] {
    let sig = sigma(s);
    [
        is_e_unitary(s),
        crate::congruence::compatibility_is_transitive(s),
        compatibility_congruence(s).is_some_and(|c| c == sig),
        sig.is_idempotent_pure(s),
    ]
}

/// The equivalent forms of being Clifford.
pub fn clifford_characterizations(s: &FiniteInverseSemigroup) -> [bool; 3] {
    [
        is_clifford(s),
        is_clifford_by_domains(s),
        is_clifford_by_union_of_groups(s),
    ]
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
    fn symmetric_inverse_monoids() {
        let p3 = predicates(&sym(3));
        assert_eq!(p3.is_fundamental, Flag::Yes);
        assert_eq!(p3.is_e_star_unitary, Flag::No);
        assert_eq!(p3.is_factorizable, Flag::Yes);
        assert_eq!(p3.is_e_unitary, Flag::No);
        let p2 = predicates(&sym(2));
        assert_eq!(p2.is_e_star_unitary, Flag::Yes);
        assert_eq!(p2.is_factorizable, Flag::Yes);
        assert_eq!(p2.is_0_simple, Flag::No);
        assert_eq!(p2.is_0_disjunctive, Flag::Yes);
        assert_eq!(p2.has_infinitesimal, Flag::Yes);
    }

    #[test]
    fn group_flags() {
        let p = predicates(&cyclic(3));
        assert_eq!(p.is_group, Flag::Yes);
        assert_eq!(p.is_clifford, Flag::Yes);
        assert_eq!(p.is_fundamental, Flag::No);
        assert_eq!(p.is_bisimple, Flag::Yes);
        assert_eq!(p.has_infinitesimal, Flag::NotApplicable);
        assert_eq!(p.is_0_simple, Flag::NotApplicable);
        assert_eq!(p.is_0_bisimple, Flag::NotApplicable);
        assert_eq!(p.is_f_inverse, Flag::Yes);
    }

    #[test]
    fn brandt_flags() {
        let s = b2();
        let p = predicates(&s);
        assert_eq!(p.is_0_simple, Flag::Yes);
        assert_eq!(p.is_0_bisimple, Flag::Yes);
        assert_eq!(p.is_fundamental, Flag::Yes);
        assert_eq!(p.is_factorizable, Flag::NotApplicable);
        assert_eq!(p.is_e_star_unitary, Flag::Yes);
        assert_eq!(p.has_infinitesimal, Flag::Yes);
        assert_eq!(p.is_clifford, Flag::No);
    }

    #[test]
    fn characterizations_agree_on_small_examples() {
        for s in [sym(2), sym(3), b2(), cyclic(2)] {
            let e = e_unitary_characterizations(&s);
            assert!(e.iter().all(|&x| x == e[0]));
            let c = clifford_characterizations(&s);
            assert!(c.iter().all(|&x| x == c[0]));
        }
    }

    #[test]
    fn zero_forces_e_unitary_to_semilattice() {
        for s in [sym(2), b2()] {
            assert_eq!(is_e_unitary(&s), is_meet_semilattice(&s));
        }
    }
}
