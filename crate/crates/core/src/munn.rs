//! Meet semilattices, the Munn semigroup `T_E` and the Munn representation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::pbij::PartialBijection;
use crate::semigroup::FiniteInverseSemigroup;

/// Default cap on `|T_E|`.
pub const DEFAULT_MUNN_BOUND: usize = 10_000;

/// A finite meet semilattice given by its meet table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetSemilattice {
    labels: Vec<String>,
    meet: Vec<Vec<usize>>,
}

impl MeetSemilattice {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.meet
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet[a][b] == a
    }

    /// `e↓`, sorted.
    pub fn down(&self, e: usize) -> Vec<usize> {
        (0..self.len()).filter(|&f| self.leq(f, e)).collect()
    }

    pub fn to_semigroup(&self) -> Result<FiniteInverseSemigroup> {
        FiniteInverseSemigroup::from_table(self.labels.clone(), &self.meet, None, None)
    }

    /// The semilattice of idempotents of `S`, in element order.
    pub fn of_idempotents(s: &FiniteInverseSemigroup) -> Self {
        let e = s.idempotents();
        let pos: HashMap<usize, usize> = e.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Self {
            labels: e.iter().map(|&x| s.label(x).to_owned()).collect(),
            meet: e
                .iter()
                .map(|&a| e.iter().map(|&b| pos[&s.mul(a, b)]).collect())
                .collect(),
        }
    }
}

/// Validates a commutative idempotent associative table.
pub fn semilattice_from_band(labels: Vec<String>, table: &[Vec<usize>]) -> Result<MeetSemilattice> {
    let n = labels.len();
    if table.len() != n
        || table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
    {
        return Err(Error::NotSquare("semilattice table".into()));
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
    let e = MeetSemilattice {
        labels,
        meet: table.to_vec(),
    };
    for a in 0..n {
        for b in 0..n {
            let m = e.meet(a, b);
            let glb = e.leq(m, a)
                && e.leq(m, b)
                && (0..n).all(|c| !(e.leq(c, a) && e.leq(c, b)) || e.leq(c, m));
            if !glb {
                return Err(Error::NotABand(format!(
                    "{m} is not the meet of {a} and {b}"
                )));
            }
        }
    }
    Ok(e)
}

/// An order isomorphism `from↓ → to↓`, stored as sorted `(x, image)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderIso {
    pub from: usize,
    pub to: usize,
    pub map: Vec<(usize, usize)>,
}

impl OrderIso {
    fn to_pbij(&self, n: usize) -> Result<PartialBijection> {
        PartialBijection::new(n, self.map.iter().map(|&(x, y)| (x + 1, y + 1)))
    }

    fn label(&self, e: &MeetSemilattice) -> String {
        let moves: Vec<String> = self
            .map
            .iter()
            .map(|&(x, y)| format!("{}>{}", e.labels[x], e.labels[y]))
            .collect();
        format!(
            "{}>{}:[{}]",
            e.labels[self.from],
            e.labels[self.to],
            moves.join(",")
        )
    }
}

/// All order isomorphisms between two principal ideals, in lexicographic order.
fn order_isos(e: &MeetSemilattice, from: usize, to: usize) -> Vec<OrderIso> {
    let dom = e.down(from);
    let cod = e.down(to);
    if dom.len() != cod.len() {
        return Vec::new();
    }
    fn go(
        e: &MeetSemilattice,
        dom: &[usize],
        cod: &[usize],
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = img.len();
        if k == dom.len() {
            out.push(img.clone());
            return;
        }
        for (j, &y) in cod.iter().enumerate() {
            if used[j] {
                continue;
            }
            let ok = (0..k).all(|i| {
                e.leq(dom[i], dom[k]) == e.leq(img[i], y)
                    && e.leq(dom[k], dom[i]) == e.leq(y, img[i])
            });
            if ok {
                used[j] = true;
                img.push(y);
                go(e, dom, cod, img, used, out);
                img.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        e,
        &dom,
        &cod,
        &mut Vec::new(),
        &mut vec![false; cod.len()],
        &mut out,
    );
    out.into_iter()
        .map(|img| OrderIso {
            from,
            to,
            map: dom.iter().copied().zip(img).collect(),
        })
        .collect()
}

/// `T_E` with the order isomorphism behind each element.
#[derive(Clone, Debug)]
pub struct MunnSemigroup {
    pub semigroup: FiniteInverseSemigroup,
    pub isos: Vec<OrderIso>,
    index: HashMap<OrderIso, usize>,
}

impl MunnSemigroup {
    pub fn element(&self, iso: &OrderIso) -> Option<usize> {
        self.index.get(iso).copied()
    }
}

/// All order isomorphisms between principal ideals of `E` under composition
/// (the right factor acts first). Elements are sorted by `(from, to, map)`.
pub fn munn_semigroup(e: &MeetSemilattice, bound: usize) -> Result<MunnSemigroup> {
    let n = e.len();
    let mut isos = Vec::new();
    for from in 0..n {
        for to in 0..n {
            isos.extend(order_isos(e, from, to));
            if isos.len() > bound {
                return Err(Error::BoundExceeded {
                    what: "Munn semigroup",
                    size: isos.len(),
                    bound,
                });
            }
        }
    }
    isos.sort();
    let maps: Vec<PartialBijection> = isos.iter().map(|i| i.to_pbij(n)).collect::<Result<_>>()?;
    let by_map: HashMap<&PartialBijection, usize> =
        maps.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let table = maps
        .iter()
        .map(|f| {
            maps.iter()
                .map(|g| Ok(*by_map.get(&f.compose(g)?).ok_or(Error::NotClosed)?))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = isos.iter().map(|i| i.label(e)).collect();
    let semigroup = FiniteInverseSemigroup::from_table(labels, &table, None, None)?;
    let index = isos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();
    Ok(MunnSemigroup {
        semigroup,
        isos,
        index,
    })
}

/// `δ_s(e) = ses⁻¹` from `d(s)↓` to `r(s)↓`, as a homomorphism into `T_{E(S)}`.
pub fn munn_representation(
    s: &FiniteInverseSemigroup,
    bound: usize,
) -> Result<(Homomorphism, MunnSemigroup)> {
    let e = MeetSemilattice::of_idempotents(s);
    let t = munn_semigroup(&e, bound)?;
    let pos: HashMap<usize, usize> = s
        .idempotents()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    let map = s
        .elements()
        .map(|a| {
            let from = pos[&s.d(a)];
            let to = pos[&s.r(a)];
            let iso = OrderIso {
                from,
                to,
                map: e
                    .down(from)
                    .into_iter()
                    .map(|f| (f, pos[&s.mul(s.mul(a, s.idempotents()[f]), s.inv(a))]))
                    .collect(),
            };
            t.element(&iso).ok_or(Error::NotClosed)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Homomorphism::new(s.clone(), t.semigroup.clone(), map)?, t))
}

/// Fundamental iff the Munn representation is injective.
pub fn is_fundamental_munn(s: &FiniteInverseSemigroup) -> Result<bool> {
    Ok(munn_representation(s, DEFAULT_MUNN_BOUND)?.0.is_injective())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::symmetric_inverse_monoid;
    use crate::congruence::mu;
    use crate::groupoid::FiniteGroupoid;
    use crate::hom::are_isomorphic;

    fn chain_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect()
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn band_validation() {
        assert!(semilattice_from_band(names(3), &chain_table(3)).is_ok());
        assert!(matches!(
            semilattice_from_band(names(2), &[vec![0, 0], vec![1, 1]]),
            Err(Error::NotCommutative(0, 1))
        ));
        assert!(matches!(
            semilattice_from_band(names(2), &[vec![1, 0], vec![0, 1]]),
            Err(Error::NotABand(_))
        ));
        let e = MeetSemilattice::of_idempotents(&symmetric_inverse_monoid(2).unwrap());
        assert_eq!(e.len(), 4);
        let square = semilattice_from_band(
            names(4),
            &[
                vec![0, 0, 0, 0],
                vec![0, 1, 0, 1],
                vec![0, 0, 2, 2],
                vec![0, 1, 2, 3],
            ],
        )
        .unwrap();
        assert!(are_isomorphic(
            &e.to_semigroup().unwrap(),
            &square.to_semigroup().unwrap()
        ));
    }

    #[test]
    fn munn_semigroups_of_small_semilattices() {
        let c2 = semilattice_from_band(names(2), &chain_table(2)).unwrap();
        assert_eq!(munn_semigroup(&c2, 100).unwrap().semigroup.len(), 2);
        let v = semilattice_from_band(names(3), &[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]])
            .unwrap();
        let tv = munn_semigroup(&v, 100).unwrap();
        assert_eq!(tv.semigroup.len(), 5);
        assert!(are_isomorphic(
            &tv.semigroup,
            &FiniteGroupoid::pair_groupoid(2).adjoin_zero().unwrap()
        ));
        let sq = MeetSemilattice::of_idempotents(&symmetric_inverse_monoid(2).unwrap());
        let tsq = munn_semigroup(&sq, 100).unwrap();
        assert!(are_isomorphic(
            &tsq.semigroup,
            &symmetric_inverse_monoid(2).unwrap()
        ));
        assert!(matches!(
            munn_semigroup(&sq, 3),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn idempotents_of_t_e_are_identity_maps() {
        let sq = MeetSemilattice::of_idempotents(&symmetric_inverse_monoid(2).unwrap());
        let t = munn_semigroup(&sq, 100).unwrap();
        for a in t.semigroup.elements() {
            let iso = &t.isos[a];
            let identity = iso.from == iso.to && iso.map.iter().all(|&(x, y)| x == y);
            assert_eq!(t.semigroup.is_idempotent(a), identity);
        }
        assert!(are_isomorphic(
            &MeetSemilattice::of_idempotents(&t.semigroup)
                .to_semigroup()
                .unwrap(),
            &sq.to_semigroup().unwrap()
        ));
    }

    #[test]
    fn munn_representation_examples() {
        let e = semilattice_from_band(names(3), &chain_table(3))
            .unwrap()
            .to_semigroup()
            .unwrap();
        let (d, _) = munn_representation(&e, 100).unwrap();
        assert!(d.is_injective());
        let g = FiniteGroupoid::cyclic_group(3).adjoin_zero().unwrap();
        let z3 = crate::local::local_group(&g, 1).unwrap();
        let (d, t) = munn_representation(&z3, 100).unwrap();
        assert_eq!(t.semigroup.len(), 1);
        assert!(d.kernel().is_universal());
        for s in [
            symmetric_inverse_monoid(2).unwrap(),
            symmetric_inverse_monoid(3).unwrap(),
            g,
        ] {
            let (d, _) = munn_representation(&s, 1000).unwrap();
            assert_eq!(d.kernel(), mu(&s));
            assert!(d.is_idempotent_separating());
            assert_eq!(
                is_fundamental_munn(&s).unwrap(),
                crate::predicates::is_fundamental(&s)
            );
        }
        assert!(
            is_fundamental_munn(&FiniteGroupoid::pair_groupoid(2).adjoin_zero().unwrap()).unwrap()
        );
    }
}
