//! Invariant suites run by `check`.

use std::fmt;
use std::str::FromStr;

use crate::bisection::{atom_iso, downset_embedding, local_bisections, DEFAULT_BISECTION_BOUND};
use crate::boolean::{decompose_fundamental, frink_verify, is_boolean, is_fundamental_boolean};
use crate::congruence::{
    all_congruences, compatibility_congruence, is_congruence_free, mu, quotient, sigma, xi,
    Congruence, DEFAULT_ORACLE_BOUND,
};
use crate::error::{Error, Result};
use crate::greens::{greens, j_classes_by_criterion, j_classes_by_ideals};
use crate::groupoid::{atomic_groupoid, atoms, groupoids_isomorphic, FiniteGroupoid};
use crate::hom::{are_isomorphic, wagner_preston};
use crate::munn::{munn_representation, DEFAULT_MUNN_BOUND};
use crate::predicates::{self, clifford_characterizations, e_unitary_characterizations};
use crate::semigroup::FiniteInverseSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Orders,
    Congruences,
    Duality,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orders" => Ok(Suite::Orders),
            "congruences" => Ok(Suite::Congruences),
            "duality" => Ok(Suite::Duality),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to this input, or beyond a size bound.
    Skip,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    fn record(&mut self, name: &'static str, ok: bool) {
        self.checks.push(Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
        });
    }

    fn skip(&mut self, name: &'static str) {
        self.checks.push(Check {
            name,
            status: Status::Skip,
        });
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            writeln!(f, "{tag} {}", c.name)?;
        }
        Ok(())
    }
}

fn all_pairs(s: &FiniteInverseSemigroup, mut p: impl FnMut(usize, usize) -> bool) -> bool {
    s.elements().all(|a| s.elements().all(|b| p(a, b)))
}

fn orders(s: &FiniteInverseSemigroup, r: &mut SuiteReport) {
    r.record(
        "order characterizations agree",
        all_pairs(s, |a, b| {
            let x = s.leq(a, b);
            x == s.leq_by_right_idempotent(a, b)
                && x == s.leq_by_left_idempotent(a, b)
                && x == s.leq_by_range(a, b)
        }),
    );
    r.record(
        "natural order is a partial order",
        s.elements().all(|a| s.leq(a, a))
            && all_pairs(s, |a, b| !(s.leq(a, b) && s.leq(b, a)) || a == b)
            && all_pairs(s, |a, b| {
                !s.leq(a, b) || s.elements().all(|c| !s.leq(b, c) || s.leq(a, c))
            }),
    );
    r.record(
        "order respects inverses and products",
        all_pairs(s, |a, b| {
            !s.leq(a, b)
                || s.leq(s.inv(a), s.inv(b))
                    && s.elements()
                        .all(|u| s.leq(s.mul(u, a), s.mul(u, b)) && s.leq(s.mul(a, u), s.mul(b, u)))
        }),
    );
    r.record(
        "inverse of a product",
        all_pairs(s, |a, b| s.inv(s.mul(a, b)) == s.mul(s.inv(b), s.inv(a))),
    );
    r.record(
        "conjugates of idempotents are idempotent",
        s.elements().all(|a| {
            s.idempotents()
                .iter()
                .all(|&e| s.is_idempotent(s.mul(s.mul(a, e), s.inv(a))))
        }),
    );
    r.record(
        "idempotents pass through",
        s.elements().all(|a| {
            s.idempotents().iter().all(|&e| {
                s.idempotents().iter().any(|&f| s.mul(e, a) == s.mul(a, f))
                    && s.idempotents().iter().any(|&g| s.mul(a, e) == s.mul(g, a))
            })
        }),
    );
    r.record(
        "principal ideal matches domain ideal",
        s.elements().all(|a| {
            let down = s.down(a);
            let dd = s.down(s.d(a));
            down.len() == dd.len()
                && down
                    .iter()
                    .all(|&b| dd.contains(&s.d(b)) && s.mul(a, s.d(b)) == b)
                && dd
                    .iter()
                    .all(|&e| down.contains(&s.mul(a, e)) && s.d(s.mul(a, e)) == e)
        }),
    );
    r.record(
        "below implies compatible",
        all_pairs(s, |a, b| !s.leq(a, b) || s.compatible(a, b)),
    );
    r.record(
        "compatible with equal domains are equal",
        all_pairs(s, |a, b| {
            !(s.compatible(a, b) && s.d(a) == s.d(b)) || a == b
        }),
    );
    r.record(
        "meet of compatible elements",
        all_pairs(s, |a, b| {
            !s.compatible(a, b)
                || s.meet(a, b) == Some(s.mul(b, s.d(a)))
                    && s.d(s.mul(b, s.d(a))) == s.mul(s.d(a), s.d(b))
        }),
    );
    r.record(
        "left translation preserves meets",
        all_pairs(s, |a, b| match s.meet(a, b) {
            Some(m) => s
                .elements()
                .all(|c| s.meet(s.mul(c, a), s.mul(c, b)) == Some(s.mul(c, m))),
            None => true,
        }),
    );
    let phi: Option<Vec<usize>> = s.elements().map(|a| s.fixed_point(a)).collect();
    match phi {
        Some(phi) => r.record(
            "meets from fixed points",
            all_pairs(s, |a, b| {
                s.meet(a, b) == Some(s.mul(phi[s.mul(a, s.inv(b))], b))
            }),
        ),
        None => r.skip("meets from fixed points"),
    }
    if s.zero().is_some() {
        r.record(
            "orthogonality is preserved by translation",
            all_pairs(s, |a, b| {
                !s.orthogonal(a, b).unwrap_or(false)
                    || s.elements().all(|c| {
                        s.orthogonal(s.mul(a, c), s.mul(b, c)).unwrap_or(false)
                            && s.orthogonal(s.mul(c, a), s.mul(c, b)).unwrap_or(false)
                    })
            }),
        );
    } else {
        r.skip("orthogonality is preserved by translation");
    }
    r.record(
        "J by ideals equals J by criterion",
        j_classes_by_ideals(s) == j_classes_by_criterion(s),
    );
    match wagner_preston(s) {
        Ok(wp) => r.record(
            "Wagner-Preston embedding",
            wp.hom.is_injective()
                && all_pairs(s, |a, b| {
                    s.leq(a, b)
                        == wp.lambdas[a]
                            .restriction_leq(&wp.lambdas[b])
                            .unwrap_or(false)
                }),
        ),
        Err(_) => r.record("Wagner-Preston embedding", false),
    }
    let e = e_unitary_characterizations(s);
    r.record(
        "E-unitary characterizations agree",
        e.iter().all(|&x| x == e[0]),
    );
    let c = clifford_characterizations(s);
    r.record(
        "Clifford characterizations agree",
        c.iter().all(|&x| x == c[0]),
    );
    if predicates::is_0_disjunctive(s).unwrap_or(false) {
        r.record(
            "Clifford iff no infinitesimals",
            c[0] == !predicates::has_infinitesimal(s).unwrap_or(false),
        );
    } else {
        r.skip("Clifford iff no infinitesimals");
    }
}

fn join_where<'a>(n: usize, cs: impl Iterator<Item = &'a Congruence>) -> Congruence {
    cs.fold(Congruence::equality(n), |acc, c| acc.join(c))
}

fn congruences(s: &FiniteInverseSemigroup, r: &mut SuiteReport) -> Result<()> {
    let n = s.len();
    let sig = sigma(s);
    let m = mu(s);
    r.record(
        "sigma is a congruence with group quotient",
        sig.is_congruence_on(s) && sig.has_group_quotient(s),
    );
    r.record(
        "mu is an idempotent-separating congruence",
        m.is_congruence_on(s) && m.is_idempotent_separating(s),
    );
    let h = greens(s).h;
    r.record(
        "mu lies in H",
        m.classes()
            .iter()
            .all(|c| h.iter().any(|hc| c.iter().all(|x| hc.contains(x)))),
    );
    let (q, _) = quotient(s, &m)?;
    r.record(
        "quotient by mu is fundamental",
        predicates::is_fundamental(&q),
    );
    let (delta, _) = munn_representation(s, DEFAULT_MUNN_BOUND)?;
    r.record(
        "kernel of the Munn representation is mu",
        delta.kernel() == m,
    );
    r.record(
        "fundamental agrees with Munn",
        predicates::is_fundamental(s) == delta.is_injective(),
    );
    match compatibility_congruence(s) {
        Some(c) => r.record("compatibility lies in sigma", c.is_contained_in(&sig)),
        None => r.skip("compatibility lies in sigma"),
    }
    if predicates::is_f_inverse(s) == Some(true) {
        r.record("F-inverse implies E-unitary", predicates::is_e_unitary(s));
    } else {
        r.skip("F-inverse implies E-unitary");
    }
    let x = if s.zero().is_some() {
        Some(xi(s)?)
    } else {
        None
    };
    if let Some(x) = &x {
        r.record(
            "xi is a 0-restricted congruence containing mu",
            x.is_congruence_on(s) && x.is_zero_restricted(s)? && m.is_contained_in(x),
        );
        let ex = crate::munn::MeetSemilattice::of_idempotents(s).to_semigroup()?;
        let xe = xi(&ex)?;
        let e = s.idempotents();
        r.record(
            "xi on idempotents is xi of the semilattice",
            e.iter().enumerate().all(|(i, &a)| {
                e.iter()
                    .enumerate()
                    .all(|(j, &b)| x.related(a, b) == xe.related(i, j))
            }),
        );
        r.record(
            "xi is equality iff fundamental with 0-disjunctive idempotents",
            x.is_equality() == (predicates::is_fundamental(s) && predicates::is_0_disjunctive(s)?),
        );
    }
    if n > DEFAULT_ORACLE_BOUND {
        r.skip("sigma is the least group congruence");
        r.skip("mu is the largest idempotent-separating congruence");
        r.skip("xi is the largest 0-restricted congruence");
        r.skip("congruence-free theorem");
        return Ok(());
    }
    let all = all_congruences(s, DEFAULT_ORACLE_BOUND)?;
    r.record(
        "oracle congruences are congruences",
        all.iter().all(|c| c.is_congruence_on(s)),
    );
    let group: Vec<&Congruence> = all.iter().filter(|c| c.has_group_quotient(s)).collect();
    r.record(
        "sigma is the least group congruence",
        group.contains(&&sig) && group.iter().all(|c| sig.is_contained_in(c)),
    );
    r.record(
        "mu is the largest idempotent-separating congruence",
        join_where(n, all.iter().filter(|c| c.is_idempotent_separating(s))) == m,
    );
    if let Some(x) = &x {
        let zr: Vec<&Congruence> = all
            .iter()
            .filter(|c| c.is_zero_restricted(s).unwrap_or(false))
            .collect();
        r.record(
            "xi is the largest 0-restricted congruence",
            join_where(n, zr.into_iter()) == *x,
        );
        if n >= 2 {
            r.record(
                "congruence-free theorem",
                is_congruence_free(s)? == (all.len() == 2),
            );
        } else {
            r.skip("congruence-free theorem");
        }
    } else {
        r.skip("xi is the largest 0-restricted congruence");
        r.skip("congruence-free theorem");
    }
    Ok(())
}

fn duality(s: &FiniteInverseSemigroup, r: &mut SuiteReport) -> Result<()> {
    let g = FiniteGroupoid::underlying(s);
    r.record(
        "Clifford iff underlying groupoid is a union of groups",
        predicates::is_clifford(s) == g.is_union_of_groups(),
    );
    r.record(
        "products factor through restricted products",
        all_pairs(s, |a, b| {
            let st = s.mul(a, b);
            s.down(a).into_iter().any(|x| {
                s.down(b)
                    .into_iter()
                    .any(|y| s.d(x) == s.r(y) && s.mul(x, y) == st)
            })
        }),
    );
    if let Some(z) = s.zero() {
        let at = atoms(s)?;
        r.record(
            "atoms are closed under inverse and restricted product",
            at.iter().all(|&x| at.contains(&s.inv(x)))
                && at.iter().all(|&x| {
                    at.iter()
                        .all(|&y| s.d(x) != s.r(y) || at.contains(&s.mul(x, y)))
                }),
        );
        r.record(
            "distinct compatible atoms are orthogonal",
            at.iter().all(|&x| {
                at.iter()
                    .all(|&y| x == y || !s.compatible(x, y) || s.orthogonal(x, y).unwrap_or(false))
            }),
        );
        let _ = z;
    }
    if s.one().is_some() {
        match downset_embedding(s, DEFAULT_BISECTION_BOUND) {
            Ok((beta, k)) => r.record(
                "down-set map is an injective monoid embedding",
                beta.is_injective()
                    && k.semigroup.one() == Some(beta.apply(s.one().expect("monoid"))),
            ),
            Err(Error::BoundExceeded { .. }) => {
                r.skip("down-set map is an injective monoid embedding")
            }
            Err(e) => return Err(e),
        }
    }
    let cert = if s.zero().is_some() && s.one().is_some() {
        is_boolean(s)?
    } else {
        None
    };
    let Some(cert) = cert else {
        r.skip("atom map is an isomorphism");
        return Ok(());
    };
    let (theta, k) = atom_iso(s)?;
    r.record(
        "atom map is an isomorphism",
        theta.is_injective() && theta.is_surjective(),
    );
    let ag = atomic_groupoid(s)?;
    let kk = local_bisections(&ag, DEFAULT_BISECTION_BOUND)?;
    let back = atomic_groupoid(&kk.semigroup)?;
    r.record(
        "groupoid of atoms round trip",
        groupoids_isomorphic(&ag, &back)? && k.semigroup.len() == s.len(),
    );
    let fund = predicates::is_fundamental(s);
    r.record(
        "fundamental iff atoms form a principal groupoid",
        is_fundamental_boolean(s)? == fund,
    );
    if fund {
        let d = decompose_fundamental(s)?;
        r.record(
            "fundamental decomposition",
            are_isomorphic(s, d.iso.target()),
        );
    }
    let e = s.idempotents();
    let pos = |x: usize| e.iter().position(|&y| y == x).expect("idempotent");
    let table: Vec<Vec<usize>> = e
        .iter()
        .map(|&a| e.iter().map(|&b| pos(s.mul(a, b))).collect())
        .collect();
    let comp: Vec<usize> = e
        .iter()
        .map(|&a| pos(cert.complement(a).expect("complement")))
        .collect();
    r.record(
        "Frink axioms on idempotents",
        frink_verify(&table, &comp, pos(s.zero().expect("zero"))).is_ok(),
    );
    r.record(
        "relative complements",
        all_pairs(s, |x, y| {
            if !s.leq(y, x) {
                return true;
            }
            let Ok(c) = cert.relative_complement(s, x, y) else {
                return false;
            };
            s.orthogonal(y, c).unwrap_or(false)
                && cert.join(y, c) == Some(x)
                && Some(s.d(c)) == cert.complement(s.d(y)).map(|f| s.mul(s.d(x), f))
                && Some(s.r(c)) == cert.complement(s.r(y)).map(|f| s.mul(s.r(x), f))
        }),
    );
    r.record(
        "joins and domains",
        all_pairs(s, |a, b| match cert.join(a, b) {
            Some(j) => {
                cert.join(s.d(a), s.d(b)) == Some(s.d(j))
                    && cert.join(s.r(a), s.r(b)) == Some(s.r(j))
                    && cert
                        .complement(s.d(b))
                        .is_some_and(|f| cert.join(s.mul(a, f), b) == Some(j))
            }
            None => true,
        }),
    );
    Ok(())
}

pub fn run_suite(s: &FiniteInverseSemigroup, suite: Suite) -> Result<SuiteReport> {
    let mut r = SuiteReport::default();
    if matches!(suite, Suite::Orders | Suite::All) {
        orders(s, &mut r);
    }
    if matches!(suite, Suite::Congruences | Suite::All) {
        congruences(s, &mut r)?;
    }
    if matches!(suite, Suite::Duality | Suite::All) {
        duality(s, &mut r)?;
    }
    Ok(r)
}
