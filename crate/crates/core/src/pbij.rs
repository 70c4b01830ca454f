//! Partial bijections on the ground set `{1..n}`.
//!
//! A [`PartialBijection`] is an injective partial map with an explicit degree,
//! so the empty map of degree 2 and the empty map of degree 3 are different
//! values. Composition applies the right-hand argument first:
//! `f.compose(&g)` is `x ↦ f(g(x))`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest degree accepted by [`enumerate_symmetric_inverse_monoid`] unless a
/// caller asks for more.
pub const DEFAULT_ENUMERATION_DEGREE: usize = 5;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialBijection {
    // images[x - 1] = Some(y) when x ↦ y
    images: Vec<Option<u32>>,
}

impl PartialBijection {
    /// Builds a partial bijection from `(x, y)` pairs meaning `x ↦ y`.
    pub fn new<I>(degree: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut images = vec![None; degree];
        let mut hit = vec![false; degree];
        for (x, y) in pairs {
            for p in [x, y] {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
            }
            match images[x - 1] {
                Some(prev) if prev as usize != y => {
                    return Err(Error::NotPartialBijection(format!("{x} has two images")))
                }
                Some(_) => continue,
                None => {}
            }
            if hit[y - 1] {
                return Err(Error::NotPartialBijection(format!("{y} has two preimages")));
            }
            hit[y - 1] = true;
            images[x - 1] = Some(y as u32);
        }
        Ok(Self { images })
    }

    pub fn empty(degree: usize) -> Self {
        Self {
            images: vec![None; degree],
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (1..=degree as u32).map(Some).collect(),
        }
    }

    /// The idempotent `1_A`.
    pub fn partial_identity<I>(degree: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        Self::new(degree, points.into_iter().map(|a| (a, a)))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        if x == 0 || x > self.degree() {
            return None;
        }
        self.images[x - 1].map(|y| y as usize)
    }

    /// The graph as `(x, y)` pairs sorted by `x`.
    pub fn graph(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(i, y)| y.map(|y| (i + 1, y as usize)))
    }

    pub fn domain(&self) -> Vec<usize> {
        self.graph().map(|(x, _)| x).collect()
    }

    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.graph().map(|(_, y)| y).collect();
        r.sort_unstable();
        r
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|y| y.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_idempotent(&self) -> bool {
        self.graph().all(|(x, y)| x == y)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.graph()
            .filter(|(x, y)| x == y)
            .map(|(x, _)| x)
            .collect()
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `x ↦ self(other(x))`, defined where `other(x)` lands in the domain of `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let images = other
            .images
            .iter()
            .map(|y| y.and_then(|y| self.images[y as usize - 1]))
            .collect();
        Ok(Self { images })
    }

    pub fn invert(&self) -> Self {
        let mut images = vec![None; self.degree()];
        for (x, y) in self.graph() {
            images[y - 1] = Some(x as u32);
        }
        Self { images }
    }

    /// Graph inclusion.
    pub fn restriction_leq(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .all(|(a, b)| a.is_none() || a == b))
    }

    /// `self ∪ other` when the union is again a partial bijection.
    pub fn compatible_union(&self, other: &Self) -> Result<Option<Self>> {
        self.check_degree(other)?;
        match Self::new(self.degree(), self.graph().chain(other.graph())) {
            Ok(u) => Ok(Some(u)),
            Err(Error::NotPartialBijection(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Parses `"1>2,3>1"`, `"id:1,2"` or `"0"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(Self::empty(degree));
        }
        let bad = || Error::Parse(format!("bad partial bijection {text:?}"));
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        if let Some(rest) = text.strip_prefix("id:") {
            let pts = rest
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(num)
                .collect::<Result<Vec<_>>>()?;
            return Self::partial_identity(degree, pts);
        }
        let mut pairs = Vec::new();
        for part in text.split(',') {
            let (x, y) = part.split_once('>').ok_or_else(bad)?;
            pairs.push((num(x)?, num(y)?));
        }
        Self::new(degree, pairs)
    }
}

/// Number of pairs in a label written in the textual partial-bijection syntax.
pub fn label_rank(label: &str) -> Option<usize> {
    let label = label.trim();
    if label == "0" {
        return Some(0);
    }
    if let Some(rest) = label.strip_prefix("id:") {
        return Some(rest.split(',').filter(|s| !s.trim().is_empty()).count());
    }
    let mut n = 0;
    for part in label.split(',') {
        let (x, y) = part.split_once('>')?;
        x.trim().parse::<usize>().ok()?;
        y.trim().parse::<usize>().ok()?;
        n += 1;
    }
    Some(n)
}

impl Ord for PartialBijection {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.graph().cmp(other.graph()))
    }
}

impl PartialOrd for PartialBijection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (x, y) in self.graph() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{x}>{y}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialBijection[{}]({})", self.degree(), self)
    }
}

/// All injective partial maps on `{1..n}`, sorted.
pub fn enumerate_symmetric_inverse_monoid(n: usize, bound: usize) -> Result<Vec<PartialBijection>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "symmetric inverse monoid degree",
            size: n,
            bound,
        });
    }
    fn go(
        x: usize,
        n: usize,
        used: &mut [bool],
        cur: &mut Vec<Option<u32>>,
        out: &mut Vec<PartialBijection>,
    ) {
        if x == n {
            out.push(PartialBijection {
                images: cur.clone(),
            });
            return;
        }
        cur[x] = None;
        go(x + 1, n, used, cur, out);
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                cur[x] = Some(y as u32 + 1);
                go(x + 1, n, used, cur, out);
                used[y] = false;
            }
        }
        cur[x] = None;
    }
    let mut out = Vec::new();
    go(0, n, &mut vec![false; n], &mut vec![None; n], &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(s: &str, n: usize) -> PartialBijection {
        PartialBijection::parse(s, n).unwrap()
    }

    #[test]
    fn compose_applies_right_argument_first() {
        assert_eq!(pb("2>3", 3).compose(&pb("1>2", 3)).unwrap(), pb("1>3", 3));
        assert!(pb("1>2", 2).compose(&pb("1>2", 2)).unwrap().is_empty());
        let f = pb("1>2", 2);
        assert_eq!(PartialBijection::identity(2).compose(&f).unwrap(), f);
        assert_eq!(f.compose(&PartialBijection::identity(2)).unwrap(), f);
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let err = pb("1>1", 1).compose(&pb("1>1", 2)).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn invert_and_partial_identities() {
        assert_eq!(pb("1>2", 2).invert(), pb("2>1", 2));
        let a = PartialBijection::partial_identity(3, [1, 2]).unwrap();
        assert_eq!(a.invert(), a);
        let b = PartialBijection::partial_identity(3, [2, 3]).unwrap();
        assert_eq!(a.compose(&b).unwrap(), pb("id:2", 3));
        assert_eq!(
            PartialBijection::partial_identity(2, []).unwrap(),
            PartialBijection::empty(2)
        );
        assert!(matches!(
            PartialBijection::partial_identity(2, [3]),
            Err(Error::PointOutOfRange {
                point: 3,
                degree: 2
            })
        ));
        assert_ne!(PartialBijection::empty(2), PartialBijection::empty(3));
    }

    #[test]
    fn restriction_order() {
        assert!(pb("id:1", 2).restriction_leq(&pb("id:1,2", 2)).unwrap());
        assert!(pb("1>2", 2).restriction_leq(&pb("1>2,2>1", 2)).unwrap());
        assert!(!pb("1>2", 2).restriction_leq(&pb("id:1,2", 2)).unwrap());
    }

    #[test]
    fn compatible_unions() {
        assert_eq!(
            pb("1>1", 2).compatible_union(&pb("2>2", 2)).unwrap(),
            Some(pb("id:1,2", 2))
        );
        assert_eq!(pb("1>1", 2).compatible_union(&pb("1>2", 2)).unwrap(), None);
        assert_eq!(pb("1>2", 3).compatible_union(&pb("3>2", 3)).unwrap(), None);
    }

    #[test]
    fn enumeration_counts() {
        // sum over k of C(n,k)^2 k!
        let count = |n: usize| -> usize {
            let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
            (0..=n)
                .map(|k| binom(n, k).pow(2) * (1..=k).product::<usize>())
                .sum()
        };
        for (n, expected) in [(1, 2), (2, 7), (3, 34), (4, 209)] {
            let all = enumerate_symmetric_inverse_monoid(n, DEFAULT_ENUMERATION_DEGREE).unwrap();
            assert_eq!(all.len(), expected);
            assert_eq!(all.len(), count(n));
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        assert!(matches!(
            enumerate_symmetric_inverse_monoid(6, DEFAULT_ENUMERATION_DEGREE),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn textual_syntax() {
        assert_eq!(pb("1>2,3>1", 3).to_string(), "1>2,3>1");
        assert_eq!(pb("id:1,2", 2).to_string(), "1>1,2>2");
        assert_eq!(pb("0", 2).to_string(), "0");
        assert!(PartialBijection::parse("1-2", 2).is_err());
        assert!(PartialBijection::parse("1>2,1>1", 2).is_err());
        assert_eq!(label_rank("1>2,2>1"), Some(2));
        assert_eq!(label_rank("0"), Some(0));
        assert_eq!(label_rank("e"), None);
    }

    #[test]
    fn i3_axioms_exhaustive() {
        let all = enumerate_symmetric_inverse_monoid(3, 5).unwrap();
        for f in &all {
            let fi = f.invert();
            assert_eq!(&fi.invert(), f);
            assert_eq!(&f.compose(&fi).unwrap().compose(f).unwrap(), f);
            assert_eq!(fi.compose(f).unwrap().compose(&fi).unwrap(), fi);
            // uniqueness of the inverse
            let witnesses = all
                .iter()
                .filter(|g| {
                    &f.compose(g).unwrap().compose(f).unwrap() == f
                        && &g.compose(f).unwrap().compose(g).unwrap() == *g
                })
                .count();
            assert_eq!(witnesses, 1);
            // idempotents are exactly the partial identities
            let idem = &f.compose(f).unwrap() == f;
            assert_eq!(idem, f.is_idempotent());
            for g in &all {
                let comp = f.invert().compose(g).unwrap().is_idempotent()
                    && f.compose(&g.invert()).unwrap().is_idempotent();
                assert_eq!(f.compatible_union(g).unwrap().is_some(), comp);
                for h in &all {
                    assert_eq!(
                        f.compose(g).unwrap().compose(h).unwrap(),
                        f.compose(&g.compose(h).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_pbij(n: usize) -> impl Strategy<Value = PartialBijection> {
            let all = enumerate_symmetric_inverse_monoid(n, 5).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        }

        proptest! {
            #[test]
            fn text_round_trip(f in arb_pbij(4)) {
                prop_assert_eq!(PartialBijection::parse(&f.to_string(), 4).unwrap(), f);
            }

            #[test]
            fn inverse_reverses_products(f in arb_pbij(4), g in arb_pbij(4)) {
                prop_assert_eq!(f.compose(&g).unwrap().invert(), g.invert().compose(&f.invert()).unwrap());
            }
        }
    }
}
