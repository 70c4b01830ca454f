//! Distributive and Boolean inverse monoids.

use crate::error::{Error, Result};
use crate::groupoid::{atomic_groupoid, atoms};
use crate::hom::Homomorphism;
use crate::pbij::{enumerate_symmetric_inverse_monoid, PartialBijection};
use crate::semigroup::FiniteInverseSemigroup;

/// Complements of idempotents and joins of compatible pairs, found by scan.
#[derive(Clone, Debug)]
pub struct BooleanCertificate {
    n: usize,
    complement: Vec<Option<usize>>,
    join: Vec<Option<usize>>,
}

impl BooleanCertificate {
    /// Complement of an idempotent.
    pub fn complement(&self, e: usize) -> Option<usize> {
        self.complement[e]
    }

    /// Join of a compatible pair.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a * self.n + b]
    }

    /// Join of a finite set; the empty join is zero.
    pub fn join_all(&self, s: &FiniteInverseSemigroup, elems: &[usize]) -> Option<usize> {
        elems
            .iter()
            .try_fold(s.zero()?, |acc, &x| self.join(acc, x))
    }

    /// `x ∖ y = x·comp(d(y))` for `y ≤ x`.
    pub fn relative_complement(
        &self,
        s: &FiniteInverseSemigroup,
        x: usize,
        y: usize,
    ) -> Result<usize> {
        if !s.leq(y, x) {
            return Err(Error::NotBelow(y, x));
        }
        let c = self.complement(s.d(y)).ok_or(Error::NotBoolean)?;
        Ok(s.mul(x, c))
    }
}

fn require_monoid_with_zero(s: &FiniteInverseSemigroup) -> Result<(usize, usize)> {
    let one = s.require_one()?;
    let zero = s.require_zero()?;
    Ok((zero, one))
}

/// Joins of all compatible pairs, if they all exist and multiplication
/// distributes over them on both sides.
fn distributive_joins(s: &FiniteInverseSemigroup) -> Option<Vec<Option<usize>>> {
    let n = s.len();
    let mut join = vec![None; n * n];
    for a in s.elements() {
        for b in a..n {
            if s.compatible(a, b) {
                let upper: Vec<usize> = s
                    .elements()
                    .filter(|&u| s.leq(a, u) && s.leq(b, u))
                    .collect();
                let j = s.least(&upper)?;
                join[a * n + b] = Some(j);
                join[b * n + a] = Some(j);
            }
        }
    }
    // compatibility is preserved by multiplication, so the right-hand joins
    // are already in the table
    for a in s.elements() {
        for b in a + 1..n {
            let Some(j) = join[a * n + b] else { continue };
            for c in s.elements() {
                if join[s.mul(c, a) * n + s.mul(c, b)] != Some(s.mul(c, j))
                    || join[s.mul(a, c) * n + s.mul(b, c)] != Some(s.mul(j, c))
                {
                    return None;
                }
            }
        }
    }
    Some(join)
}

pub fn is_distributive(s: &FiniteInverseSemigroup) -> Result<bool> {
    require_monoid_with_zero(s)?;
    Ok(distributive_joins(s).is_some())
}

/// A certificate when `S` is a Boolean inverse monoid, `None` otherwise.
/// A complement that is not unique is reported as an error.
pub fn is_boolean(s: &FiniteInverseSemigroup) -> Result<Option<BooleanCertificate>> {
    let (zero, one) = require_monoid_with_zero(s)?;
    let Some(join) = distributive_joins(s) else {
        return Ok(None);
    };
    let n = s.len();
    let mut complement = vec![None; n];
    for &e in s.idempotents() {
        let mut comps = s
            .idempotents()
            .iter()
            .copied()
            .filter(|&f| s.mul(e, f) == zero && join[e * n + f] == Some(one));
        let Some(f) = comps.next() else {
            return Ok(None);
        };
        if comps.next().is_some() {
            return Err(Error::NonUniqueComplement(e));
        }
        complement[e] = Some(f);
    }
    Ok(Some(BooleanCertificate {
        n,
        complement,
        join,
    }))
}

/// Checks Frink's condition `ab = a ⇔ a·comp(b) = 0` on a commutative band
/// with a complement map, and returns the table of `a + b = comp(comp(a)·comp(b))`
/// after confirming it is the least upper bound.
pub fn frink_verify(
    table: &[Vec<usize>],
    complement: &[usize],
    zero: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = table.len();
    if table.iter().any(|r| r.len() != n) || complement.len() != n || zero >= n {
        return Err(Error::NotSquare("band table".into()));
    }
    if complement.iter().any(|&c| c >= n) {
        return Err(Error::Format("complement out of range".into()));
    }
    for a in 0..n {
        if table[a][a] != a {
            return Err(Error::NotABand(format!("{a}·{a} ≠ {a}")));
        }
        for b in 0..n {
            if table[a][b] != table[b][a] {
                return Err(Error::NotCommutative(a, b));
            }
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotABand(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    for (a, row) in table.iter().enumerate() {
        for b in 0..n {
            if (row[b] == a) != (row[complement[b]] == zero) {
                return Err(Error::FrinkViolation(a, b));
            }
        }
    }
    let leq = |a: usize, b: usize| table[a][b] == a;
    let mut plus = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let j = complement[table[complement[a]][complement[b]]];
            let upper = leq(a, j) && leq(b, j);
            let least = (0..n).all(|c| !(leq(a, c) && leq(b, c)) || leq(j, c));
            if !(upper && least) {
                return Err(Error::FrinkViolation(a, b));
            }
            plus[a][b] = j;
        }
    }
    Ok(plus)
}

/// Least upper bound of pairwise orthogonal elements.
pub fn orthogonal_join(s: &FiniteInverseSemigroup, elems: &[usize]) -> Result<usize> {
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            if !s.orthogonal(a, b)? {
                return Err(Error::NotOrthogonal);
            }
        }
    }
    if elems.is_empty() {
        return s.require_zero();
    }
    s.join_all(elems).ok_or(Error::NoJoin)
}

/// All ideals, as sorted element lists, ordered by size then contents.
pub fn ideals(s: &FiniteInverseSemigroup) -> Vec<Vec<usize>> {
    let j = crate::greens::j_classes_by_ideals(s);
    let reps: Vec<usize> = j.iter().map(|c| c[0]).collect();
    let pi: Vec<Vec<bool>> = reps
        .iter()
        .map(|&a| crate::greens::principal_ideal(s, a))
        .collect();
    // class q lies below class p iff q's representative is in p's ideal
    let below = |p: usize, q: usize| pi[p][reps[q]];
    let k = j.len();
    let mut out = Vec::new();
    let mut chosen = vec![false; k];
    fn go(i: usize, k: usize, chosen: &mut Vec<bool>, j: &[Vec<usize>], out: &mut Vec<Vec<usize>>) {
        if i == k {
            let mut ideal: Vec<usize> = (0..k)
                .filter(|&c| chosen[c])
                .flat_map(|c| j[c].clone())
                .collect();
            if !ideal.is_empty() {
                ideal.sort_unstable();
                out.push(ideal);
            }
            return;
        }
        go(i + 1, k, chosen, j, out);
        chosen[i] = true;
        go(i + 1, k, chosen, j, out);
        chosen[i] = false;
    }
    go(0, k, &mut chosen, &j, &mut out);
    out.retain(|ideal| {
        (0..k)
            .filter(|&p| ideal.binary_search(&reps[p]).is_ok())
            .all(|p| {
                (0..k)
                    .filter(|&q| below(p, q))
                    .all(|q| ideal.binary_search(&reps[q]).is_ok())
            })
    });
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Ideals closed under joins of compatible pairs.
pub fn additive_ideals(s: &FiniteInverseSemigroup) -> Result<Vec<Vec<usize>>> {
    let cert = is_boolean(s)?.ok_or(Error::NotBoolean)?;
    Ok(ideals(s)
        .into_iter()
        .filter(|ideal| {
            ideal.iter().all(|&a| {
                ideal.iter().all(|&b| {
                    cert.join(a, b)
                        .is_none_or(|j| ideal.binary_search(&j).is_ok())
                })
            })
        })
        .collect())
}

/// The only additive ideals are `{0}` and `S`.
pub fn is_0_simplifying(s: &FiniteInverseSemigroup) -> Result<bool> {
    let z = s.require_zero()?;
    let all: Vec<usize> = s.elements().collect();
    Ok(additive_ideals(s)?.iter().all(|i| *i == all || *i == [z]))
}

/// `S × T` with element `(s, t)` at index `s·|T| + t`.
pub fn direct_product(
    s: &FiniteInverseSemigroup,
    t: &FiniteInverseSemigroup,
) -> Result<FiniteInverseSemigroup> {
    let m = t.len();
    let n = s.len() * m;
    let labels = (0..n)
        .map(|i| format!("({},{})", s.label(i / m), t.label(i % m)))
        .collect();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| s.mul(x / m, y / m) * m + t.mul(x % m, y % m))
                .collect()
        })
        .collect();
    FiniteInverseSemigroup::from_table(labels, &table, None, None)
}

/// `I_n` as the semigroup of all partial bijections of `{1..n}`, in sorted order.
pub fn symmetric_inverse_monoid(n: usize) -> Result<FiniteInverseSemigroup> {
    FiniteInverseSemigroup::from_partial_bijections(&enumerate_symmetric_inverse_monoid(
        n,
        crate::pbij::DEFAULT_ENUMERATION_DEGREE,
    )?)
}

/// `I_{n_1} × … × I_{n_r}`; the empty product is the trivial monoid.
pub fn product_of_symmetric(factors: &[usize]) -> Result<FiniteInverseSemigroup> {
    let mut acc: Option<FiniteInverseSemigroup> = None;
    for &n in factors {
        let f = symmetric_inverse_monoid(n)?;
        acc = Some(match acc {
            None => f,
            Some(p) => direct_product(&p, &f)?,
        });
    }
    match acc {
        Some(p) => Ok(p),
        None => FiniteInverseSemigroup::from_table(vec!["1".into()], &[vec![0]], None, None),
    }
}

/// A decomposition `S ≅ I_{n_1} × … × I_{n_r}` with `n_1 ≥ … ≥ n_r`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub factors: Vec<usize>,
    pub iso: Homomorphism,
}

impl Decomposition {
    /// For example `I3 x I1`; the empty product prints as `I0`.
    pub fn describe(&self) -> String {
        describe_factors(&self.factors)
    }
}

pub fn describe_factors(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "I0".into();
    }
    factors
        .iter()
        .map(|n| format!("I{n}"))
        .collect::<Vec<_>>()
        .join(" x ")
}

/// Decomposes a finite fundamental Boolean inverse monoid, building and
/// checking the isomorphism onto the product.
pub fn decompose_fundamental(s: &FiniteInverseSemigroup) -> Result<Decomposition> {
    is_boolean(s)?.ok_or(Error::NotBoolean)?;
    if !crate::predicates::is_fundamental(s) {
        return Err(Error::NotFundamental);
    }
    let at = atoms(s)?;
    let ag = atomic_groupoid(s)?;
    let mut comps = ag.components();
    // descending by size, ties by least identity
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let factors: Vec<usize> = comps.iter().map(Vec::len).collect();
    // atom i moves point p to point q of its component
    let mut place = vec![(0usize, 0usize); ag.len()];
    for (ci, comp) in comps.iter().enumerate() {
        for &e in comp {
            let p = comp.iter().position(|&x| x == e).expect("member") + 1;
            place[e] = (ci, p);
        }
    }
    let product = product_of_symmetric(&factors)?;
    let factor_elems: Vec<Vec<PartialBijection>> = factors
        .iter()
        .map(|&n| enumerate_symmetric_inverse_monoid(n, crate::pbij::DEFAULT_ENUMERATION_DEGREE))
        .collect::<Result<_>>()?;
    let mut map = Vec::with_capacity(s.len());
    for a in s.elements() {
        let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); factors.len()];
        for (i, &x) in at.iter().enumerate() {
            if s.leq(x, a) {
                let (ci, p) = place[ag.dom(i)];
                let (_, q) = place[ag.cod(i)];
                pairs[ci].push((p, q));
            }
        }
        let mut idx = 0;
        for (ci, &n) in factors.iter().enumerate() {
            let f = PartialBijection::new(n, pairs[ci].iter().copied())?;
            let k = factor_elems[ci]
                .binary_search(&f)
                .map_err(|_| Error::NotClosed)?;
            idx = idx * factor_elems[ci].len() + k;
        }
        map.push(idx);
    }
    let iso = Homomorphism::new(s.clone(), product, map)?;
    if !(iso.is_injective() && iso.is_surjective()) {
        return Err(Error::NotAHomomorphism(
            "decomposition map is not bijective".into(),
        ));
    }
    Ok(Decomposition { factors, iso })
}

/// A finite Boolean inverse monoid is fundamental iff its atomic groupoid
/// is principal.
pub fn is_fundamental_boolean(s: &FiniteInverseSemigroup) -> Result<bool> {
    is_boolean(s)?.ok_or(Error::NotBoolean)?;
    Ok(atomic_groupoid(s)?.is_principal())
}
