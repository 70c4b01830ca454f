//! Finite groupoids, the underlying groupoid of an inverse semigroup, atoms
//! and the atomic groupoid.

use crate::error::{Error, Result};
use crate::semigroup::FiniteInverseSemigroup;
use crate::util::{partition_by_key, UnionFind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    /// Index of the identity arrow at the domain.
    pub dom: usize,
    /// Index of the identity arrow at the codomain.
    pub cod: usize,
}

/// A finite groupoid. The product `x·y` is defined iff `dom(x) = cod(y)`,
/// so `y` acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    comp: Vec<Option<usize>>,
    inv: Vec<usize>,
}

impl FiniteGroupoid {
    /// Validates arrows, a partial composition table and the inversion.
    pub fn new(arrows: Vec<Arrow>, comp: &[Vec<Option<usize>>], inv: Vec<usize>) -> Result<Self> {
        let m = arrows.len();
        let bad = |msg: String| Err(Error::InvalidGroupoid(msg));
        if comp.len() != m || comp.iter().any(|r| r.len() != m) || inv.len() != m {
            return bad("table sizes do not match the arrow count".into());
        }
        for (i, a) in arrows.iter().enumerate() {
            if a.dom >= m || a.cod >= m {
                return bad(format!("arrow {i} has an out-of-range endpoint"));
            }
            for e in [a.dom, a.cod] {
                if arrows[e].dom != e || arrows[e].cod != e {
                    return bad(format!("endpoint {e} of arrow {i} is not an identity"));
                }
            }
        }
        let identities: Vec<usize> = (0..m)
            .filter(|&i| arrows[i].dom == i && arrows[i].cod == i)
            .collect();
        for x in 0..m {
            for y in 0..m {
                let defined = arrows[x].dom == arrows[y].cod;
                match comp[x][y] {
                    Some(_) if !defined => {
                        return bad(format!("product {x}·{y} should be undefined"))
                    }
                    None if defined => return bad(format!("product {x}·{y} is missing")),
                    Some(z) if z >= m => return bad(format!("product {x}·{y} out of range")),
                    Some(z) if arrows[z].dom != arrows[y].dom || arrows[z].cod != arrows[x].cod => {
                        return bad(format!("product {x}·{y} has wrong endpoints"))
                    }
                    _ => {}
                }
            }
        }
        for &e in &identities {
            for x in 0..m {
                if arrows[x].cod == e && comp[e][x] != Some(x)
                    || arrows[x].dom == e && comp[x][e] != Some(x)
                {
                    return bad(format!("identity {e} is not neutral on arrow {x}"));
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                let Some(xy) = comp[x][y] else { continue };
                for z in 0..m {
                    if let (Some(yz), Some(l)) = (comp[y][z], comp[xy][z]) {
                        if comp[x][yz] != Some(l) {
                            return bad(format!(
                                "composition is not associative at ({x}, {y}, {z})"
                            ));
                        }
                    }
                }
            }
        }
        for x in 0..m {
            let xi = inv[x];
            if xi >= m || comp[xi][x] != Some(arrows[x].dom) || comp[x][xi] != Some(arrows[x].cod) {
                return bad(format!("arrow {x} has no valid inverse"));
            }
        }
        Ok(Self {
            arrows,
            identities,
            comp: comp.concat(),
            inv,
        })
    }

    /// Builds a groupoid from arrows and a total function on composable
    /// pairs. Identities and inverses are found by search.
    pub fn from_fn(arrows: Vec<Arrow>, product: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let m = arrows.len();
        let comp: Vec<Vec<Option<usize>>> = (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| (arrows[x].dom == arrows[y].cod).then(|| product(x, y)))
                    .collect()
            })
            .collect();
        let inv = (0..m)
            .map(|x| {
                (0..m)
                    .find(|&y| {
                        comp[y][x] == Some(arrows[x].dom) && comp[x][y] == Some(arrows[x].cod)
                    })
                    .ok_or_else(|| Error::InvalidGroupoid(format!("arrow {x} has no inverse")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::new(arrows, &comp, inv)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn name(&self, x: usize) -> &str {
        &self.arrows[x].name
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, x: usize) -> bool {
        self.arrows[x].dom == x && self.arrows[x].cod == x
    }

    pub fn dom(&self, x: usize) -> usize {
        self.arrows[x].dom
    }

    pub fn cod(&self, x: usize) -> usize {
        self.arrows[x].cod
    }

    pub fn compose(&self, x: usize, y: usize) -> Option<usize> {
        self.comp[x * self.len() + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// The composition table as rows, for serialization.
    pub fn table(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.len())
            .map(|x| (0..self.len()).map(|y| self.compose(x, y)).collect())
            .collect()
    }

    /// Arrows from `e` to `f`.
    pub fn hom(&self, e: usize, f: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.dom(x) == e && self.cod(x) == f)
            .collect()
    }

    pub fn local_group(&self, e: usize) -> Vec<usize> {
        self.hom(e, e)
    }

    fn component_roots(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.len());
        for x in 0..self.len() {
            uf.union(self.dom(x), self.cod(x));
        }
        (0..self.len()).map(|x| uf.find(self.dom(x))).collect()
    }

    /// Connected components as sets of identities.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let roots = self.component_roots();
        let classes = partition_by_key(self.len(), |x| roots[x]);
        classes
            .into_iter()
            .map(|c| c.into_iter().filter(|&x| self.is_identity(x)).collect())
            .collect()
    }

    /// Connected components as sets of arrows.
    pub fn component_arrows(&self) -> Vec<Vec<usize>> {
        let roots = self.component_roots();
        partition_by_key(self.len(), |x| roots[x])
    }

    /// At most one arrow between any ordered pair of identities.
    pub fn is_principal(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        (0..self.len()).all(|x| seen.insert((self.dom(x), self.cod(x))))
    }

    /// Every local group is trivial.
    pub fn is_principal_by_local_groups(&self) -> bool {
        self.identities
            .iter()
            .all(|&e| self.local_group(e).len() == 1)
    }

    pub fn is_union_of_groups(&self) -> bool {
        (0..self.len()).all(|x| self.dom(x) == self.cod(x))
    }

    /// `G⁰`: the zero is element 0 and arrow `x` becomes element `x + 1`.
    pub fn adjoin_zero(&self) -> Result<FiniteInverseSemigroup> {
        let m = self.len();
        let labels = std::iter::once("0".to_owned())
            .chain(self.arrows.iter().map(|a| a.name.clone()))
            .collect();
        let table: Vec<Vec<usize>> = (0..=m)
            .map(|i| {
                (0..=m)
                    .map(|j| {
                        if i == 0 || j == 0 {
                            0
                        } else {
                            self.compose(i - 1, j - 1).map_or(0, |z| z + 1)
                        }
                    })
                    .collect()
            })
            .collect();
        FiniteInverseSemigroup::from_table(labels, &table, Some(0), None)
    }

    /// One identity `(x,x)` per point; arrows `(x,y)` for every ordered pair,
    /// listed lexicographically.
    pub fn pair_groupoid(n: usize) -> Self {
        Self::from_equivalence(&[(1..=n).collect()]).expect("a single block is a partition")
    }

    /// The principal groupoid of an equivalence on points: arrows `(x,y)`
    /// with `x ∼ y`, listed lexicographically.
    pub fn from_equivalence(blocks: &[Vec<usize>]) -> Result<Self> {
        let mut block_of = std::collections::BTreeMap::new();
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if block_of.insert(x, b).is_some() {
                    return Err(Error::InvalidGroupoid(format!("point {x} repeated")));
                }
            }
        }
        let mut pairs = Vec::new();
        for (&x, &bx) in &block_of {
            for (&y, &by) in &block_of {
                if bx == by {
                    pairs.push((x, y));
                }
            }
        }
        let pos = |p: (usize, usize)| pairs.binary_search(&p).expect("pair present");
        // (x,y)·(y,z) = (x,z): dom is (y,y), cod is (x,x)
        let arrows = pairs
            .iter()
            .map(|&(x, y)| Arrow {
                name: format!("({x},{y})"),
                dom: pos((y, y)),
                cod: pos((x, x)),
            })
            .collect();
        Self::from_fn(arrows, |a, b| pos((pairs[a].0, pairs[b].1)))
    }

    /// A one-object groupoid from a group table whose identity is row 0.
    pub fn from_group(names: Vec<String>, table: &[Vec<usize>]) -> Result<Self> {
        let arrows = names
            .into_iter()
            .map(|name| Arrow {
                name,
                dom: 0,
                cod: 0,
            })
            .collect();
        Self::from_fn(arrows, |a, b| table[a][b])
    }

    pub fn cyclic_group(n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        let names = (0..n)
            .map(|i| {
                if i == 0 {
                    "1".to_owned()
                } else {
                    format!("g{i}")
                }
            })
            .collect();
        Self::from_group(names, &table).expect("cyclic group table")
    }

    pub fn discrete(k: usize) -> Self {
        let arrows = (0..k)
            .map(|i| Arrow {
                name: format!("e{}", i + 1),
                dom: i,
                cod: i,
            })
            .collect();
        Self::from_fn(arrows, |a, _| a).expect("discrete groupoid")
    }

    /// The underlying groupoid of `S` under the restricted product. Arrow
    /// `i` is element `i`.
    pub fn underlying(s: &FiniteInverseSemigroup) -> Self {
        let arrows = s
            .elements()
            .map(|a| Arrow {
                name: s.label(a).to_owned(),
                dom: s.d(a),
                cod: s.r(a),
            })
            .collect();
        Self::from_fn(arrows, |a, b| s.mul(a, b)).expect("restricted product is a groupoid")
    }

    /// The groupoid on the elements `subset` of `S` (closed under inverse and
    /// restricted product). Arrow `i` is `subset[i]`.
    pub fn restricted_on(s: &FiniteInverseSemigroup, subset: &[usize]) -> Result<Self> {
        let pos = |x: usize| subset.iter().position(|&y| y == x);
        let arrows = subset
            .iter()
            .map(|&a| {
                Ok(Arrow {
                    name: s.label(a).to_owned(),
                    dom: pos(s.d(a)).ok_or(Error::NotClosed)?,
                    cod: pos(s.r(a)).ok_or(Error::NotClosed)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let m = subset.len();
        let mut comp = vec![vec![None; m]; m];
        for x in 0..m {
            for y in 0..m {
                if arrows[x].dom == arrows[y].cod {
                    comp[x][y] = Some(pos(s.mul(subset[x], subset[y])).ok_or(Error::NotClosed)?);
                }
            }
        }
        let inv = subset
            .iter()
            .map(|&a| pos(s.inv(a)).ok_or(Error::NotClosed))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arrows, &comp, inv)
    }
}

/// Nonzero elements with nothing strictly between them and zero.
pub fn atoms(s: &FiniteInverseSemigroup) -> Result<Vec<usize>> {
    let z = s.require_zero()?;
    Ok(s.elements()
        .filter(|&a| a != z && s.elements().all(|b| !s.leq(b, a) || b == a || b == z))
        .collect())
}

/// The groupoid of atoms under the restricted product. Arrow `i` is the
/// `i`-th atom in element order. Empty exactly when `S = {0}`.
pub fn atomic_groupoid(s: &FiniteInverseSemigroup) -> Result<FiniteGroupoid> {
    FiniteGroupoid::restricted_on(s, &atoms(s)?)
}

/// Isomorphism of groupoids, tested as isomorphism of `G⁰` and `H⁰`.
pub fn groupoids_isomorphic(g: &FiniteGroupoid, h: &FiniteGroupoid) -> Result<bool> {
    Ok(g.len() == h.len()
        && g.identities().len() == h.identities().len()
        && crate::hom::are_isomorphic(&g.adjoin_zero()?, &h.adjoin_zero()?))
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

    #[test]
    fn pair_groupoids() {
        let g = FiniteGroupoid::pair_groupoid(3);
        assert_eq!(g.len(), 9);
        assert_eq!(g.identities().len(), 3);
        assert!(g.is_principal() && g.is_principal_by_local_groups());
        assert_eq!(g.components().len(), 1);
        let x = 1; // (1,2)
        assert_eq!(g.name(x), "(1,2)");
        assert_eq!(g.name(g.dom(x)), "(2,2)");
        assert_eq!(g.name(g.inv(x)), "(2,1)");
    }

    #[test]
    fn one_object_groups_are_not_principal() {
        let g = FiniteGroupoid::cyclic_group(2);
        assert!(!g.is_principal());
        assert!(!g.is_principal_by_local_groups());
        assert!(g.is_union_of_groups());
        let z0 = g.adjoin_zero().unwrap();
        assert_eq!(z0.len(), 3);
        assert_eq!(z0.zero(), Some(0));
    }

    #[test]
    fn equivalence_groupoid_components() {
        let g = FiniteGroupoid::from_equivalence(&[vec![1, 2], vec![3]]).unwrap();
        assert!(g.is_principal());
        let mut sizes: Vec<usize> = g.component_arrows().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 4]);
        assert!(FiniteGroupoid::from_equivalence(&[vec![1], vec![1]]).is_err());
    }

    #[test]
    fn adjoin_zero_of_pair_groupoid_is_b2() {
        let g = FiniteGroupoid::pair_groupoid(2).adjoin_zero().unwrap();
        assert!(crate::hom::are_isomorphic(&g, &b2()));
        let d = FiniteGroupoid::discrete(3).adjoin_zero().unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.idempotents().len() == 4);
        for a in 1..4 {
            for b in 1..4 {
                assert_eq!(d.leq(a, b), a == b);
            }
        }
    }

    #[test]
    fn underlying_groupoids() {
        let g = FiniteGroupoid::underlying(&sym(2));
        assert_eq!(g.components().len(), 3);
        let full = sym(2).one().unwrap();
        assert_eq!(g.local_group(full).len(), 2);
        let chain = FiniteInverseSemigroup::from_table(
            vec!["0".into(), "1".into()],
            &[vec![0, 0], vec![0, 1]],
            None,
            None,
        )
        .unwrap();
        let g = FiniteGroupoid::underlying(&chain);
        assert_eq!(g.identities().len(), 2);
    }

    #[test]
    fn atoms_examples() {
        let s = sym(2);
        let a = atoms(&s).unwrap();
        assert_eq!(a.len(), 4);
        assert!(a
            .iter()
            .all(|&x| crate::pbij::label_rank(s.label(x)) == Some(1)));
        let ag = atomic_groupoid(&s).unwrap();
        assert!(groupoids_isomorphic(&ag, &FiniteGroupoid::pair_groupoid(2)).unwrap());
        let b = b2();
        assert_eq!(atoms(&b).unwrap().len(), 4);
        let z2 = FiniteGroupoid::cyclic_group(2).adjoin_zero().unwrap();
        assert!(atoms(&FiniteGroupoid::underlying(&z2).adjoin_zero().unwrap()).is_ok());
        let g =
            FiniteInverseSemigroup::from_table(vec!["e".into()], &[vec![0]], None, None).unwrap();
        assert!(atomic_groupoid(&g).unwrap().is_empty());
    }

    #[test]
    fn invalid_groupoids_are_rejected() {
        let arrows = vec![Arrow {
            name: "e".into(),
            dom: 0,
            cod: 0,
        }];
        assert!(FiniteGroupoid::new(arrows.clone(), &[vec![None]], vec![0]).is_err());
        assert!(FiniteGroupoid::new(arrows, &[vec![Some(0)]], vec![0]).is_ok());
    }
}
