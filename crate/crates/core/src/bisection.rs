//! The Boolean inverse monoid `K(G)` of local bisections of a finite
//! groupoid, and the maps relating it to inverse monoids.

use std::collections::HashMap;

use crate::boolean::{is_boolean, BooleanCertificate};
use crate::error::{Error, Result};
use crate::groupoid::{atomic_groupoid, atoms, FiniteGroupoid};
use crate::hom::Homomorphism;
use crate::semigroup::FiniteInverseSemigroup;

/// Default cap on `|K(G)|`.
pub const DEFAULT_BISECTION_BOUND: usize = 1024;

/// Above this many arrows, subset filtering is not attempted.
pub const SUBSET_FILTER_LIMIT: usize = 16;

/// `K(G)` together with the arrow set of each element.
#[derive(Clone, Debug)]
pub struct LocalBisections {
    pub semigroup: FiniteInverseSemigroup,
    /// Sorted arrow indices of element `i`.
    pub sets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl LocalBisections {
    /// Element index of a sorted arrow set, if it is a local bisection.
    pub fn element(&self, set: &[usize]) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn singleton(&self, arrow: usize) -> usize {
        self.index[&vec![arrow]]
    }
}

/// Distinct arrows have distinct domains and distinct codomains.
pub fn is_local_bisection(g: &FiniteGroupoid, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &x)| {
        set[i + 1..]
            .iter()
            .all(|&y| x != y && g.dom(x) != g.dom(y) && g.cod(x) != g.cod(y))
    })
}

fn canonical_order(sets: &mut [Vec<usize>]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Local bisections by filtering every subset of arrows.
pub fn bisection_sets_by_subsets(g: &FiniteGroupoid) -> Result<Vec<Vec<usize>>> {
    let m = g.len();
    if m > SUBSET_FILTER_LIMIT {
        return Err(Error::BoundExceeded {
            what: "subset filtering",
            size: m,
            bound: SUBSET_FILTER_LIMIT,
        });
    }
    let mut out: Vec<Vec<usize>> = (0u32..1 << m)
        .map(|mask| {
            (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .collect::<Vec<usize>>()
        })
        .filter(|s| is_local_bisection(g, s))
        .collect();
    canonical_order(&mut out);
    Ok(out)
}

/// Local bisections by choosing, for each identity in turn, either no arrow
/// or one arrow out of it whose codomain is still free.
pub fn bisection_sets(g: &FiniteGroupoid, bound: usize) -> Result<Vec<Vec<usize>>> {
    fn go(
        g: &FiniteGroupoid,
        out_arrows: &[Vec<usize>],
        k: usize,
        used_cod: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        bound: usize,
    ) -> Result<()> {
        if k == out_arrows.len() {
            if out.len() >= bound {
                return Err(Error::BoundExceeded {
                    what: "local bisections",
                    size: out.len() + 1,
                    bound,
                });
            }
            let mut s = current.clone();
            s.sort_unstable();
            out.push(s);
            return Ok(());
        }
        go(g, out_arrows, k + 1, used_cod, current, out, bound)?;
        for &x in &out_arrows[k] {
            let c = g.cod(x);
            if !used_cod[c] {
                used_cod[c] = true;
                current.push(x);
                go(g, out_arrows, k + 1, used_cod, current, out, bound)?;
                current.pop();
                used_cod[c] = false;
            }
        }
        Ok(())
    }
    let out_arrows: Vec<Vec<usize>> = g
        .identities()
        .iter()
        .map(|&e| (0..g.len()).filter(|&x| g.dom(x) == e).collect())
        .collect();
    let mut out = Vec::new();
    go(
        g,
        &out_arrows,
        0,
        &mut vec![false; g.len()],
        &mut Vec::new(),
        &mut out,
        bound,
    )?;
    canonical_order(&mut out);
    Ok(out)
}

/// The product `AB = {a·b : a ∈ A, b ∈ B, dom(a) = cod(b)}`.
pub fn set_product(g: &FiniteGroupoid, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a
        .iter()
        .flat_map(|&x| b.iter().filter_map(move |&y| g.compose(x, y)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn set_label(g: &FiniteGroupoid, set: &[usize]) -> String {
    let names: Vec<&str> = set.iter().map(|&x| g.name(x)).collect();
    format!("{{{}}}", names.join(","))
}

/// `K(G)`: local bisections under set product. The empty set is element 0;
/// elements are ordered by size, then lexicographically by arrow index.
pub fn local_bisections(g: &FiniteGroupoid, bound: usize) -> Result<LocalBisections> {
    let sets = bisection_sets(g, bound)?;
    if g.len() <= SUBSET_FILTER_LIMIT {
        debug_assert_eq!(sets, bisection_sets_by_subsets(g)?);
    }
    let index: HashMap<Vec<usize>, usize> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let n = sets.len();
    let mut table = vec![vec![0; n]; n];
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            table[i][j] = *index.get(&set_product(g, a, b)).ok_or(Error::NotClosed)?;
        }
    }
    let labels = sets.iter().map(|s| set_label(g, s)).collect();
    let one = index[&g.identities().to_vec()];
    let semigroup = FiniteInverseSemigroup::from_table(labels, &table, Some(0), Some(one))?;
    Ok(LocalBisections {
        semigroup,
        sets,
        index,
    })
}

/// `θ(a) = a↓ ∩ atoms`, an isomorphism `S → K(A(S))` for finite Boolean `S`.
pub fn atom_iso(s: &FiniteInverseSemigroup) -> Result<(Homomorphism, LocalBisections)> {
    let cert = is_boolean(s)?.ok_or(Error::NotBoolean)?;
    let at = atoms(s)?;
    let ag = atomic_groupoid(s)?;
    let k = local_bisections(&ag, DEFAULT_BISECTION_BOUND.max(s.len()))?;
    let mut map = Vec::with_capacity(s.len());
    for a in s.elements() {
        let below: Vec<usize> = (0..at.len()).filter(|&i| s.leq(at[i], a)).collect();
        let members: Vec<usize> = below.iter().map(|&i| at[i]).collect();
        if cert.join_all(s, &members) != Some(a) {
            return Err(Error::NotAHomomorphism(format!(
                "{} is not the join of its atoms",
                s.label(a)
            )));
        }
        map.push(k.element(&below).ok_or(Error::NotClosed)?);
    }
    let h = Homomorphism::new(s.clone(), k.semigroup.clone(), map)?;
    if !(h.is_injective() && h.is_surjective()) {
        return Err(Error::NotAHomomorphism("atom map is not bijective".into()));
    }
    Ok((h, k))
}

/// `β(a) = a↓`, an injective monoid homomorphism `S → K(G)` where `G` is
/// the underlying groupoid of `S`.
pub fn downset_embedding(
    s: &FiniteInverseSemigroup,
    bound: usize,
) -> Result<(Homomorphism, LocalBisections)> {
    s.require_one()?;
    let g = FiniteGroupoid::underlying(s);
    let k = local_bisections(&g, bound)?;
    let map = s
        .elements()
        .map(|a| k.element(&s.down(a)).ok_or(Error::NotClosed))
        .collect::<Result<Vec<_>>>()?;
    Ok((Homomorphism::new(s.clone(), k.semigroup.clone(), map)?, k))
}

fn require_monoid_map(alpha: &Homomorphism) -> Result<()> {
    let (s, t) = (alpha.source(), alpha.target());
    if alpha.apply(s.require_one()?) != t.require_one()? {
        return Err(Error::NotAHomomorphism("identity is not preserved".into()));
    }
    Ok(())
}

/// Given a monoid homomorphism `α: S → T` into a Boolean inverse monoid,
/// the morphism `γ: K(G) → T` with `γ({a}) = α(a) ∖ ⋁ α(b < a)` and
/// `γ(A) = ⋁_{a ∈ A} γ({a})`, where `k` is `K` of the underlying groupoid
/// of `S` (as returned by [`downset_embedding`]).
pub fn extend_to_bisections(alpha: &Homomorphism, k: &LocalBisections) -> Result<Homomorphism> {
    require_monoid_map(alpha)?;
    let (s, t) = (alpha.source(), alpha.target());
    let cert = is_boolean(t)?.ok_or(Error::NotBoolean)?;
    let single: Vec<usize> = s
        .elements()
        .map(|a| {
            let below: Vec<usize> = s
                .elements()
                .filter(|&b| s.lt(b, a))
                .map(|b| alpha.apply(b))
                .collect();
            let j = cert.join_all(t, &below).ok_or(Error::NoJoin)?;
            cert.relative_complement(t, alpha.apply(a), j)
        })
        .collect::<Result<_>>()?;
    let map = k
        .sets
        .iter()
        .map(|set| {
            let parts: Vec<usize> = set.iter().map(|&a| single[a]).collect();
            cert.join_all(t, &parts).ok_or(Error::NoJoin)
        })
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new(k.semigroup.clone(), t.clone(), map)
}

/// Every morphism `γ′: K(G) → T` of Boolean inverse monoids with
/// `γ′∘β = α`, found by choosing `γ′({a})` for each `a` in order of height.
/// A choice `t` for `a` must satisfy `t ≤ α(a)` and make the join of the
/// choices on `a↓` equal `α(a)`. Complete candidates are kept when they are
/// join-preserving multiplicative monoid maps sending `∅` to `0`.
pub fn join_preserving_extensions(
    alpha: &Homomorphism,
    k: &LocalBisections,
) -> Result<Vec<Vec<usize>>> {
    require_monoid_map(alpha)?;
    let (s, t) = (alpha.source(), alpha.target());
    let cert = is_boolean(t)?.ok_or(Error::NotBoolean)?;
    let heights = s.heights();
    let mut order: Vec<usize> = s.elements().collect();
    order.sort_by_key(|&a| (heights[a], a));

    struct Ctx<'a> {
        s: &'a FiniteInverseSemigroup,
        t: &'a FiniteInverseSemigroup,
        alpha: &'a Homomorphism,
        cert: &'a BooleanCertificate,
        k: &'a LocalBisections,
        order: Vec<usize>,
        found: Vec<Vec<usize>>,
    }

    fn finish(c: &Ctx, single: &[usize]) -> Option<Vec<usize>> {
        let map =
            c.k.sets
                .iter()
                .map(|set| {
                    c.cert
                        .join_all(c.t, &set.iter().map(|&a| single[a]).collect::<Vec<_>>())
                })
                .collect::<Option<Vec<usize>>>()?;
        let ks = &c.k.semigroup;
        if map[0] != c.t.zero()? || map[ks.one()?] != c.t.one()? {
            return None;
        }
        for x in ks.elements() {
            for y in ks.elements() {
                if map[ks.mul(x, y)] != c.t.mul(map[x], map[y]) {
                    return None;
                }
            }
        }
        // binary compatible joins in K(G) are unions
        for (x, a) in c.k.sets.iter().enumerate() {
            for (y, b) in c.k.sets.iter().enumerate().skip(x + 1) {
                let mut u = a.clone();
                u.extend(b);
                u.sort_unstable();
                u.dedup();
                if let Some(z) = c.k.element(&u) {
                    if c.cert.join(map[x], map[y]) != Some(map[z]) {
                        return None;
                    }
                }
            }
        }
        Some(map)
    }

    // {x}{y} is {xy} when d(x) = r(y) and ∅ otherwise; check every product
    // of assigned singletons that involves `a`
    fn singletons_multiply(c: &Ctx, a: usize, single: &[usize]) -> bool {
        let Some(zero) = c.t.zero() else { return false };
        let (s, t) = (c.s, c.t);
        let set = |x: usize| single[x] != usize::MAX;
        let holds = |x: usize, y: usize| {
            let p = t.mul(single[x], single[y]);
            if s.d(x) != s.r(y) {
                p == zero
            } else {
                let xy = s.mul(x, y);
                !set(xy) || p == single[xy]
            }
        };
        s.elements()
            .filter(|&y| set(y))
            .all(|y| holds(a, y) && holds(y, a))
            && s.elements().all(|x| {
                !set(x)
                    || s.elements()
                        .all(|y| !set(y) || s.d(x) != s.r(y) || s.mul(x, y) != a || holds(x, y))
            })
    }

    fn go(c: &mut Ctx, pos: usize, single: &mut Vec<usize>) {
        if pos == c.order.len() {
            if let Some(m) = finish(c, single) {
                c.found.push(m);
            }
            return;
        }
        let a = c.order[pos];
        let target = c.alpha.apply(a);
        let mut parts: Vec<usize> =
            c.s.elements()
                .filter(|&b| c.s.lt(b, a))
                .map(|b| single[b])
                .collect();
        for cand in c.t.elements().filter(|&x| c.t.leq(x, target)) {
            parts.push(cand);
            let ok = c.cert.join_all(c.t, &parts) == Some(target);
            parts.pop();
            if ok {
                single[a] = cand;
                if singletons_multiply(c, a, single) {
                    go(c, pos + 1, single);
                }
            }
        }
        single[a] = usize::MAX;
    }

    let mut ctx = Ctx {
        s,
        t,
        alpha,
        cert: &cert,
        k,
        order,
        found: Vec::new(),
    };
    go(&mut ctx, 0, &mut vec![usize::MAX; s.len()]);
    Ok(ctx.found)
}
