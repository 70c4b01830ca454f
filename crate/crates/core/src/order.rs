//! The natural partial order, compatibility, orthogonality, meets and joins.

use crate::error::{Error, Result};
use crate::semigroup::FiniteInverseSemigroup;

impl FiniteInverseSemigroup {
    fn leq_matrix(&self) -> &[bool] {
        self.leq_cache().get_or_init(|| {
            let m = self.len();
            let mut leq = vec![false; m * m];
            for s in 0..m {
                let ds = self.d(s);
                for t in 0..m {
                    leq[s * m + t] = self.mul(t, ds) == s;
                }
            }
            leq
        })
    }

    /// `s ≤ t` in the natural partial order, i.e. `s = t·d(s)`.
    #[inline]
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.leq_matrix()[s * self.len() + t]
    }

    pub fn lt(&self, s: usize, t: usize) -> bool {
        s != t && self.leq(s, t)
    }

    /// `s = te` for some idempotent `e`.
    pub fn leq_by_right_idempotent(&self, s: usize, t: usize) -> bool {
        self.idempotents().iter().any(|&e| self.mul(t, e) == s)
    }

    /// `s = ft` for some idempotent `f`.
    pub fn leq_by_left_idempotent(&self, s: usize, t: usize) -> bool {
        self.idempotents().iter().any(|&f| self.mul(f, t) == s)
    }

    /// `s = r(s)·t`.
    pub fn leq_by_range(&self, s: usize, t: usize) -> bool {
        self.mul(self.r(s), t) == s
    }

    /// The principal order ideal `a↓`, sorted.
    pub fn down(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&b| self.leq(b, a)).collect()
    }

    pub fn up(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&b| self.leq(a, b)).collect()
    }

    pub fn compatible(&self, s: usize, t: usize) -> bool {
        self.is_idempotent(self.mul(self.inv(s), t)) && self.is_idempotent(self.mul(s, self.inv(t)))
    }

    pub fn orthogonal(&self, s: usize, t: usize) -> Result<bool> {
        let z = self.zero().ok_or(Error::NoZero)?;
        Ok(self.mul(self.inv(s), t) == z && self.mul(s, self.inv(t)) == z)
    }

    /// Greatest element of `set` in the natural order, if there is one.
    pub fn greatest(&self, set: &[usize]) -> Option<usize> {
        set.iter()
            .copied()
            .find(|&u| set.iter().all(|&v| self.leq(v, u)))
    }

    /// Least element of `set` in the natural order, if there is one.
    pub fn least(&self, set: &[usize]) -> Option<usize> {
        set.iter()
            .copied()
            .find(|&u| set.iter().all(|&v| self.leq(u, v)))
    }

    /// Greatest lower bound of a set of elements. The meet of the empty set
    /// is the greatest element of `S`, if any.
    pub fn meet_all(&self, elems: &[usize]) -> Option<usize> {
        let lower: Vec<usize> = self
            .elements()
            .filter(|&u| elems.iter().all(|&s| self.leq(u, s)))
            .collect();
        self.greatest(&lower)
    }

    /// Least upper bound of a set of elements. The join of the empty set is
    /// the least element of `S` (the zero, when present).
    pub fn join_all(&self, elems: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = self
            .elements()
            .filter(|&u| elems.iter().all(|&s| self.leq(s, u)))
            .collect();
        self.least(&upper)
    }

    pub fn meet(&self, s: usize, t: usize) -> Option<usize> {
        self.meet_all(&[s, t])
    }

    pub fn join(&self, s: usize, t: usize) -> Option<usize> {
        self.join_all(&[s, t])
    }

    /// The largest idempotent below `a`.
    pub fn fixed_point(&self, a: usize) -> Option<usize> {
        let below: Vec<usize> = self
            .idempotents()
            .iter()
            .copied()
            .filter(|&e| self.leq(e, a))
            .collect();
        self.greatest(&below)
    }

    /// Length of the longest strictly descending chain starting at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut by_size: Vec<(usize, usize)> =
            self.elements().map(|a| (self.down(a).len(), a)).collect();
        by_size.sort_unstable();
        let mut h = vec![0usize; self.len()];
        for &(_, a) in &by_size {
            h[a] = self
                .elements()
                .filter(|&b| self.lt(b, a))
                .map(|b| h[b] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use crate::pbij::{enumerate_symmetric_inverse_monoid, PartialBijection};
    use crate::semigroup::{closure_from_generators, FiniteInverseSemigroup};

    fn sym(n: usize) -> (FiniteInverseSemigroup, Vec<PartialBijection>) {
        let all = enumerate_symmetric_inverse_monoid(n, 5).unwrap();
        (
            FiniteInverseSemigroup::from_partial_bijections(&all).unwrap(),
            all,
        )
    }

    fn at(s: &FiniteInverseSemigroup, label: &str) -> usize {
        s.find_label(label)
            .unwrap_or_else(|| panic!("no element {label}"))
    }

    #[test]
    fn order_is_restriction_in_i3() {
        let (s, all) = sym(3);
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(s.leq(a, b), all[a].restriction_leq(&all[b]).unwrap());
                let c = s.leq(a, b);
                assert_eq!(c, s.leq_by_right_idempotent(a, b));
                assert_eq!(c, s.leq_by_left_idempotent(a, b));
                assert_eq!(c, s.leq_by_range(a, b));
            }
        }
    }

    #[test]
    fn zero_is_below_everything() {
        let (s, _) = sym(2);
        let z = s.zero().unwrap();
        assert!(s.elements().all(|a| s.leq(z, a)));
        assert!(s.leq(at(&s, "1>1"), at(&s, "1>1,2>2")));
    }

    #[test]
    fn group_order_is_equality() {
        let g = FiniteInverseSemigroup::from_table(
            vec!["e".into(), "a".into(), "b".into()],
            &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            None,
            None,
        )
        .unwrap();
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(g.leq(a, b), a == b);
            }
        }
        assert!(g.orthogonal(0, 1).is_err());
    }

    #[test]
    fn compatibility_and_orthogonality_examples() {
        let (s, _) = sym(2);
        assert!(s.compatible(at(&s, "1>2"), at(&s, "2>1")));
        assert!(!s.compatible(at(&s, "1>2"), at(&s, "1>1")));
        let x = PartialBijection::parse("1>2", 2).unwrap();
        let (b2, _) = closure_from_generators(&[x], 100).unwrap();
        assert!(b2.orthogonal(at(&b2, "1>1"), at(&b2, "2>2")).unwrap());
        assert!(!b2.orthogonal(at(&b2, "1>2"), at(&b2, "1>2")).unwrap());
    }

    #[test]
    fn meets_joins_and_fixed_points() {
        let (s, all) = sym(2);
        let e1 = at(&s, "1>1");
        let e2 = at(&s, "2>2");
        assert_eq!(s.meet(e1, e2), Some(s.mul(e1, e2)));
        assert_eq!(s.join(e1, e2), Some(at(&s, "1>1,2>2")));
        assert_eq!(
            s.join(at(&s, "1>2"), at(&s, "2>1")),
            Some(at(&s, "1>2,2>1"))
        );
        assert_eq!(s.join(at(&s, "1>2"), at(&s, "1>1")), None);
        assert_eq!(s.fixed_point(at(&s, "1>2,2>1")), s.zero());
        for a in s.elements() {
            let fix = PartialBijection::partial_identity(2, all[a].fixed_points()).unwrap();
            assert_eq!(s.fixed_point(a), Some(at(&s, &fix.to_string())));
            if s.is_idempotent(a) {
                assert_eq!(s.fixed_point(a), Some(a));
            }
        }
        // with all fixed points present, meets are φ(ab⁻¹)b
        for a in s.elements() {
            for b in s.elements() {
                let m = s.mul(s.fixed_point(s.mul(a, s.inv(b))).unwrap(), b);
                assert_eq!(s.meet(a, b), Some(m));
                if s.compatible(a, b) {
                    assert_eq!(s.meet(a, b), Some(s.mul(b, s.d(a))));
                }
            }
        }
    }

    #[test]
    fn heights_in_i2() {
        let (s, _) = sym(2);
        let h = s.heights();
        assert_eq!(h[s.zero().unwrap()], 0);
        assert_eq!(h[at(&s, "1>2")], 1);
        assert_eq!(h[s.one().unwrap()], 2);
    }
}
