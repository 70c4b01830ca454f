//! Distinguished inverse subsemigroups: centralizer, local monoids, units,
//! local groups and the essential part.

use crate::error::{Error, Result};
use crate::semigroup::FiniteInverseSemigroup;

/// Elements commuting with every idempotent.
pub fn centralizer_of_idempotents(s: &FiniteInverseSemigroup) -> Vec<usize> {
    s.elements()
        .filter(|&a| s.idempotents().iter().all(|&e| s.mul(a, e) == s.mul(e, a)))
        .collect()
}

fn require_idempotent(s: &FiniteInverseSemigroup, e: usize) -> Result<()> {
    if e >= s.len() || !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    Ok(())
}

/// Elements of `eSe`.
pub fn local_monoid_elements(s: &FiniteInverseSemigroup, e: usize) -> Result<Vec<usize>> {
    require_idempotent(s, e)?;
    let mut v: Vec<usize> = s
        .elements()
        .filter(|&a| s.mul(s.mul(e, a), e) == a)
        .collect();
    v.sort_unstable();
    Ok(v)
}

/// The local monoid `eSe`; its identity is `e`.
pub fn local_monoid(s: &FiniteInverseSemigroup, e: usize) -> Result<FiniteInverseSemigroup> {
    let elems = local_monoid_elements(s, e)?;
    let pos = elems.iter().position(|&a| a == e).expect("e lies in eSe");
    let sub = s.restrict(&elems)?;
    debug_assert_eq!(sub.one(), Some(pos));
    Ok(sub)
}

/// The 𝓗-class of an idempotent `e`: all `s` with `d(s) = r(s) = e`.
pub fn local_group_elements(s: &FiniteInverseSemigroup, e: usize) -> Result<Vec<usize>> {
    require_idempotent(s, e)?;
    Ok(s.elements()
        .filter(|&a| s.d(a) == e && s.r(a) == e)
        .collect())
}

pub fn local_group(s: &FiniteInverseSemigroup, e: usize) -> Result<FiniteInverseSemigroup> {
    s.restrict(&local_group_elements(s, e)?)
}

pub fn group_of_units(s: &FiniteInverseSemigroup) -> Result<FiniteInverseSemigroup> {
    local_group(s, s.require_one()?)
}

pub fn units(s: &FiniteInverseSemigroup) -> Result<Vec<usize>> {
    local_group_elements(s, s.require_one()?)
}

/// Nonzero idempotents `e` with `ef ≠ 0` for every nonzero idempotent `f`.
pub fn essential_idempotents(s: &FiniteInverseSemigroup) -> Result<Vec<usize>> {
    let z = s.require_zero()?;
    let nonzero: Vec<usize> = s
        .idempotents()
        .iter()
        .copied()
        .filter(|&e| e != z)
        .collect();
    Ok(nonzero
        .iter()
        .copied()
        .filter(|&e| nonzero.iter().all(|&f| s.mul(e, f) != z))
        .collect())
}

/// Elements whose domain and range idempotents are both essential.
pub fn essential_part(s: &FiniteInverseSemigroup) -> Result<Vec<usize>> {
    let ess = essential_idempotents(s)?;
    Ok(s.elements()
        .filter(|&a| ess.contains(&s.d(a)) && ess.contains(&s.r(a)))
        .collect())
}

/// Whether `subset` contains every idempotent.
pub fn is_wide(s: &FiniteInverseSemigroup, subset: &[usize]) -> bool {
    s.idempotents().iter().all(|e| subset.contains(e))
}
