//! Homomorphisms, the Wagner–Preston representation and homomorphism search.

use std::collections::HashMap;

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::pbij::PartialBijection;
use crate::semigroup::{closure_from_generators, FiniteInverseSemigroup, DEFAULT_CLOSURE_BOUND};

/// A map between two finite inverse semigroups, checked to be multiplicative
/// on construction.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: FiniteInverseSemigroup,
    target: FiniteInverseSemigroup,
    map: Vec<usize>,
}

/// Flags describing a homomorphism.
#[derive(Clone, Debug)]
pub struct HomReport {
    pub is_homomorphism: bool,
    pub is_injective: bool,
    pub is_surjective: bool,
    pub is_idempotent_separating: bool,
    pub is_idempotent_pure: bool,
    pub image: FiniteInverseSemigroup,
}

impl Homomorphism {
    pub fn new(
        source: FiniteInverseSemigroup,
        target: FiniteInverseSemigroup,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::NotAHomomorphism(format!(
                "map has {} entries for {} elements",
                map.len(),
                source.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.len()) {
            return Err(Error::NotAHomomorphism(format!("image {bad} out of range")));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "θ({}·{}) ≠ θ({})θ({})",
                        source.label(a),
                        source.label(b),
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn identity(s: &FiniteInverseSemigroup) -> Self {
        Self {
            source: s.clone(),
            target: s.clone(),
            map: s.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteInverseSemigroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteInverseSemigroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if other.source != self.target {
            return Err(Error::NotAHomomorphism(
                "composition of mismatched maps".into(),
            ));
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        })
    }

    pub fn preserves_inverses(&self) -> bool {
        self.source
            .elements()
            .all(|a| self.map[self.source.inv(a)] == self.target.inv(self.map[a]))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map
            .iter()
            .all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for &x in &self.map {
            seen[x] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Distinct idempotents have distinct images.
    pub fn is_idempotent_separating(&self) -> bool {
        let e = self.source.idempotents();
        e.iter()
            .enumerate()
            .all(|(i, &x)| e[i + 1..].iter().all(|&y| self.map[x] != self.map[y]))
    }

    /// Only idempotents map to idempotents.
    pub fn is_idempotent_pure(&self) -> bool {
        self.source
            .elements()
            .all(|a| !self.target.is_idempotent(self.map[a]) || self.source.is_idempotent(a))
    }

    /// Image elements in the target, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn image_semigroup(&self) -> Result<FiniteInverseSemigroup> {
        self.target.restrict(&self.image())
    }

    pub fn kernel(&self) -> Congruence {
        Congruence::from_key(self.source.len(), |a| self.map[a])
    }

    pub fn checks(&self) -> Result<HomReport> {
        Ok(HomReport {
            is_homomorphism: true,
            is_injective: self.is_injective(),
            is_surjective: self.is_surjective(),
            is_idempotent_separating: self.is_idempotent_separating(),
            is_idempotent_pure: self.is_idempotent_pure(),
            image: self.image_semigroup()?,
        })
    }
}

/// The Wagner–Preston representation together with the partial bijections
/// `λ_a` on the points `1..=|S|` (point `i + 1` stands for element `i`).
#[derive(Clone, Debug)]
pub struct WagnerPreston {
    pub hom: Homomorphism,
    pub lambdas: Vec<PartialBijection>,
}

/// `λ_a(x) = ax` on the domain `d(a)S`.
pub fn wagner_preston(s: &FiniteInverseSemigroup) -> Result<WagnerPreston> {
    let n = s.len();
    let lambdas: Vec<PartialBijection> = s
        .elements()
        .map(|a| {
            let da = s.d(a);
            let mut dom: Vec<usize> = s.elements().map(|y| s.mul(da, y)).collect();
            dom.sort_unstable();
            dom.dedup();
            PartialBijection::new(n, dom.into_iter().map(|x| (x + 1, s.mul(a, x) + 1)))
        })
        .collect::<Result<_>>()?;
    let (target, elems) = closure_from_generators(&lambdas, DEFAULT_CLOSURE_BOUND)?;
    let index: HashMap<&PartialBijection, usize> =
        elems.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let map = lambdas.iter().map(|l| index[l]).collect();
    Ok(WagnerPreston {
        hom: Homomorphism::new(s.clone(), target, map)?,
        lambdas,
    })
}

/// Constraints for [`homomorphisms`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub injective: bool,
    pub preserve_one: bool,
    pub preserve_zero: bool,
    /// Stop after this many maps have been found.
    pub limit: Option<usize>,
}

/// Closure of `gens` under right multiplication, as the list of reached
/// elements.
fn semigroup_closure(s: &FiniteInverseSemigroup, gens: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; s.len()];
    let mut list = Vec::new();
    for &g in gens {
        if !std::mem::replace(&mut inside[g], true) {
            list.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for &g in gens {
            let y = s.mul(list[i], g);
            if !std::mem::replace(&mut inside[y], true) {
                list.push(y);
            }
        }
        i += 1;
    }
    list
}

/// A small generating set for `S` as a semigroup, chosen greedily.
pub fn generating_set(s: &FiniteInverseSemigroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = vec![false; s.len()];
    while covered.contains(&false) {
        let best = s
            .elements()
            .filter(|&x| !covered[x])
            .max_by_key(|&x| {
                let mut trial = gens.clone();
                trial.push(x);
                (semigroup_closure(s, &trial).len(), std::cmp::Reverse(x))
            })
            .expect("an uncovered element exists");
        gens.push(best);
        covered = vec![false; s.len()];
        for x in semigroup_closure(s, &gens) {
            covered[x] = true;
        }
    }
    gens
}

/// Isomorphism invariants of an element.
fn invariants(s: &FiniteInverseSemigroup) -> Vec<(bool, usize, usize, usize, usize, usize)> {
    let drep = crate::greens::d_representatives(s);
    s.elements()
        .map(|a| {
            let dsize = s.elements().filter(|&b| drep[b] == drep[a]).count();
            // index and period of the monogenic subsemigroup
            let mut powers = vec![a];
            loop {
                let next = s.mul(*powers.last().expect("nonempty"), a);
                if let Some(p) = powers.iter().position(|&x| x == next) {
                    break (
                        s.is_idempotent(a),
                        s.down(a).len(),
                        s.up(a).len(),
                        dsize,
                        p,
                        powers.len() - p,
                    );
                }
                powers.push(next);
            }
        })
        .collect()
}

struct Search<'a> {
    s: &'a FiniteInverseSemigroup,
    t: &'a FiniteInverseSemigroup,
    gens: Vec<usize>,
    cands: Vec<Vec<usize>>,
    opts: SearchOptions,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Propagates the partial assignment of the first `k` generators. Returns
    /// the determined map, or `None` on a conflict.
    fn propagate(&self, images: &[usize]) -> Option<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let gens = &self.gens[..images.len()];
        let mut map = vec![UNSET; self.s.len()];
        let mut used = vec![false; if self.opts.injective { self.t.len() } else { 0 }];
        let mut list = Vec::new();
        for (&g, &img) in gens.iter().zip(images) {
            map[g] = img;
            if self.opts.injective && std::mem::replace(&mut used[img], true) {
                return None;
            }
            list.push(g);
        }
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.s.mul(x, g);
                let v = self.t.mul(map[x], img);
                if map[y] == UNSET {
                    if self.opts.injective && std::mem::replace(&mut used[v], true) {
                        return None;
                    }
                    map[y] = v;
                    list.push(y);
                } else if map[y] != v {
                    return None;
                }
            }
            i += 1;
        }
        Some(map)
    }

    fn run(&mut self, images: &mut Vec<usize>) {
        if self.opts.limit.is_some_and(|l| self.found.len() >= l) {
            return;
        }
        let Some(map) = self.propagate(images) else {
            return;
        };
        if images.len() == self.gens.len() {
            let fixed = |a: Option<usize>, b: Option<usize>| match (a, b) {
                (Some(x), Some(y)) => map[x] == y,
                (Some(_), None) => false,
                (None, _) => true,
            };
            if self.opts.preserve_one && !fixed(self.s.one(), self.t.one()) {
                return;
            }
            if self.opts.preserve_zero && !fixed(self.s.zero(), self.t.zero()) {
                return;
            }
            self.found.push(map);
            return;
        }
        let k = images.len();
        for ci in 0..self.cands[k].len() {
            images.push(self.cands[k][ci]);
            self.run(images);
            images.pop();
        }
    }
}

/// All homomorphisms `S → T` satisfying the options, as element maps, in
/// lexicographic order of generator images.
pub fn homomorphisms(
    s: &FiniteInverseSemigroup,
    t: &FiniteInverseSemigroup,
    opts: SearchOptions,
) -> Vec<Vec<usize>> {
    if s.is_empty() {
        return vec![Vec::new()];
    }
    let gens = generating_set(s);
    let cands = gens
        .iter()
        .map(|&g| {
            t.elements()
                .filter(|&x| !s.is_idempotent(g) || t.is_idempotent(x))
                .collect()
        })
        .collect();
    let mut search = Search {
        s,
        t,
        gens,
        cands,
        opts,
        found: Vec::new(),
    };
    search.run(&mut Vec::new());
    search.found
}

/// An isomorphism `S → T`, if one exists.
pub fn find_isomorphism(
    s: &FiniteInverseSemigroup,
    t: &FiniteInverseSemigroup,
) -> Option<Vec<usize>> {
    if s.len() != t.len() || s.idempotents().len() != t.idempotents().len() {
        return None;
    }
    if s.is_empty() {
        return Some(Vec::new());
    }
    let (is, it) = (invariants(s), invariants(t));
    let mut si = is.clone();
    let mut ti = it.clone();
    si.sort_unstable();
    ti.sort_unstable();
    if si != ti {
        return None;
    }
    let gens = generating_set(s);
    let cands = gens
        .iter()
        .map(|&g| t.elements().filter(|&x| it[x] == is[g]).collect())
        .collect();
    let mut search = Search {
        s,
        t,
        gens,
        cands,
        opts: SearchOptions {
            injective: true,
            limit: Some(1),
            ..SearchOptions::default()
        },
        found: Vec::new(),
    };
    search.run(&mut Vec::new());
    search.found.pop()
}

pub fn are_isomorphic(s: &FiniteInverseSemigroup, t: &FiniteInverseSemigroup) -> bool {
    find_isomorphism(s, t).is_some()
}
