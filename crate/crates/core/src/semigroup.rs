//! Validated finite inverse semigroups given by a multiplication table.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pbij::PartialBijection;

/// Default cap on the size of a closure under product and inverse.
pub const DEFAULT_CLOSURE_BOUND: usize = 100_000;

/// A finite inverse semigroup. Elements are the indices `0..len()`; labels
/// are for display only.
///
/// Construction always goes through [`FiniteInverseSemigroup::from_table`],
/// which checks associativity, regularity and commutation of idempotents, so
/// every value of this type satisfies the inverse semigroup axioms.
#[derive(Clone, Debug)]
pub struct FiniteInverseSemigroup {
    labels: Vec<String>,
    mult: Vec<usize>,
    inv: Vec<usize>,
    zero: Option<usize>,
    one: Option<usize>,
    idempotents: Vec<usize>,
    is_idem: Vec<bool>,
    leq: OnceLock<Vec<bool>>,
}

impl PartialEq for FiniteInverseSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.mult == other.mult
    }
}

impl Eq for FiniteInverseSemigroup {}

impl FiniteInverseSemigroup {
    /// Validates a Cayley table. Undeclared zero and identity are detected by
    /// scanning; declared ones are checked.
    pub fn from_table(
        labels: Vec<String>,
        table: &[Vec<usize>],
        zero: Option<usize>,
        one: Option<usize>,
    ) -> Result<Self> {
        let m = labels.len();
        if table.len() != m {
            return Err(Error::NotSquare(format!(
                "{} labels but {} rows",
                m,
                table.len()
            )));
        }
        let mut mult = Vec::with_capacity(m * m);
        for (i, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(Error::NotSquare(format!(
                    "row {} has length {}",
                    i,
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= m) {
                return Err(Error::NotSquare(format!(
                    "entry {bad} out of range in row {i}"
                )));
            }
            mult.extend_from_slice(row);
        }
        Self::from_flat(labels, mult, zero, one)
    }

    pub(crate) fn from_flat(
        labels: Vec<String>,
        mult: Vec<usize>,
        zero: Option<usize>,
        one: Option<usize>,
    ) -> Result<Self> {
        let m = labels.len();
        debug_assert_eq!(mult.len(), m * m);
        let mul = |a: usize, b: usize| mult[a * m + b];

        for a in 0..m {
            for b in 0..m {
                let ab = mul(a, b);
                for c in 0..m {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }

        let is_idem: Vec<bool> = (0..m).map(|a| mul(a, a) == a).collect();
        let idempotents: Vec<usize> = (0..m).filter(|&a| is_idem[a]).collect();

        // Regular semigroup with commuting idempotents is inverse, and then the
        // inverse is the unique t with sts = s and tst = t.
        let mut inv = vec![usize::MAX; m];
        for (s, slot) in inv.iter_mut().enumerate() {
            if let Some(t) = (0..m).find(|&t| mul(mul(s, t), s) == s && mul(mul(t, s), t) == t) {
                *slot = t;
            } else if let Some(x) = (0..m).find(|&x| mul(mul(s, x), s) == s) {
                *slot = mul(mul(x, s), x);
            } else {
                return Err(Error::NotRegular(s));
            }
        }
        for (i, &e) in idempotents.iter().enumerate() {
            for &f in &idempotents[i + 1..] {
                if mul(e, f) != mul(f, e) {
                    return Err(Error::IdempotentsDoNotCommute(e, f));
                }
            }
        }

        let is_zero = |z: usize| (0..m).all(|s| mul(z, s) == z && mul(s, z) == z);
        let is_one = |u: usize| (0..m).all(|s| mul(u, s) == s && mul(s, u) == s);
        let zero = match zero {
            Some(z) if z >= m || !is_zero(z) => return Err(Error::BadZero(z)),
            Some(z) => Some(z),
            None => (0..m).find(|&z| is_zero(z)),
        };
        let one = match one {
            Some(u) if u >= m || !is_one(u) => return Err(Error::BadOne(u)),
            Some(u) => Some(u),
            None => (0..m).find(|&u| is_one(u)),
        };

        Ok(Self {
            labels,
            mult,
            inv,
            zero,
            one,
            idempotents,
            is_idem,
            leq: OnceLock::new(),
        })
    }

    /// Builds the semigroup whose elements are the given partial bijections,
    /// which must already be closed under composition and inversion.
    pub fn from_partial_bijections(elements: &[PartialBijection]) -> Result<Self> {
        let index: HashMap<&PartialBijection, usize> =
            elements.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let m = elements.len();
        let mut mult = Vec::with_capacity(m * m);
        for f in elements {
            for g in elements {
                let fg = f.compose(g)?;
                mult.push(*index.get(&fg).ok_or(Error::NotClosed)?);
            }
        }
        let labels = elements.iter().map(|f| f.to_string()).collect();
        Self::from_flat(labels, mult, None, None)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.len() + b]
    }

    pub fn product(&self, elems: &[usize]) -> Option<usize> {
        elems.iter().copied().reduce(|acc, x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn require_zero(&self) -> Result<usize> {
        self.zero.ok_or(Error::NoZero)
    }

    pub fn require_one(&self) -> Result<usize> {
        self.one.ok_or(Error::NotAMonoid)
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.is_idem[a]
    }

    /// Domain idempotent `s⁻¹s`.
    #[inline]
    pub fn d(&self, s: usize) -> usize {
        self.mul(self.inv(s), s)
    }

    /// Range idempotent `ss⁻¹`.
    #[inline]
    pub fn r(&self, s: usize) -> usize {
        self.mul(s, self.inv(s))
    }

    pub fn is_nonzero(&self, a: usize) -> bool {
        self.zero != Some(a)
    }

    /// Multiplication table as rows, for serialization.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult
            .chunks(self.len().max(1))
            .take(self.len())
            .map(|r| r.to_vec())
            .collect()
    }

    pub(crate) fn leq_cache(&self) -> &OnceLock<Vec<bool>> {
        &self.leq
    }

    /// Relabels the elements without touching the table.
    pub fn with_labels(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        let mut s = self.clone();
        s.labels = labels;
        s
    }

    /// Smallest subset containing `subset` closed under product and inverse.
    pub fn subclosure(&self, subset: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.len()];
        let mut members: Vec<usize> = Vec::new();
        for &a in subset {
            for x in [a, self.inv(a)] {
                if !inside[x] {
                    inside[x] = true;
                    members.push(x);
                }
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for x in [self.mul(a, b), self.mul(b, a)] {
                    if !inside[x] {
                        inside[x] = true;
                        members.push(x);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_closed(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        set.iter().all(|&a| {
            set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
        })
    }

    /// The inverse subsemigroup on a closed subset, keeping labels and the
    /// relative order of elements.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let mut elems: Vec<usize> = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut mult = Vec::with_capacity(elems.len() * elems.len());
        for &a in &elems {
            for &b in &elems {
                mult.push(*pos.get(&self.mul(a, b)).ok_or(Error::NotClosed)?);
            }
        }
        if elems.iter().any(|a| !pos.contains_key(&self.inv(*a))) {
            return Err(Error::NotClosed);
        }
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        Self::from_flat(labels, mult, None, None)
    }
}

/// Closure of a set of partial bijections under composition and inversion.
///
/// Elements are listed in breadth-first discovery order: the sorted
/// generators first, then the inverses of generators not already present,
/// then right products by those in turn.
pub fn closure_from_generators(
    gens: &[PartialBijection],
    bound: usize,
) -> Result<(FiniteInverseSemigroup, Vec<PartialBijection>)> {
    let Some(first) = gens.first() else {
        return Err(Error::Parse("no generators".into()));
    };
    let degree = first.degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: g.degree(),
        });
    }
    let mut sorted: Vec<PartialBijection> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut extended = sorted.clone();
    for g in &sorted {
        let gi = g.invert();
        if !extended.contains(&gi) {
            extended.push(gi);
        }
    }

    let mut index: HashMap<PartialBijection, usize> = HashMap::new();
    let mut elements: Vec<PartialBijection> = Vec::new();
    for g in &extended {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elements.len() {
        for g in &extended {
            let y = elements[i].compose(g)?;
            if !index.contains_key(&y) {
                if elements.len() >= bound {
                    return Err(Error::BoundExceeded {
                        what: "closure",
                        size: elements.len() + 1,
                        bound,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let s = FiniteInverseSemigroup::from_partial_bijections(&elements)?;
    Ok((s, elements))
}
