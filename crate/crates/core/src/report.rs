//! The analysis report printed by the command-line tool.

use serde::Serialize;

use crate::boolean::{decompose_fundamental, is_boolean};
use crate::congruence::{is_congruence_free, mu, sigma, xi};
use crate::error::Result;
use crate::greens::greens;
use crate::groupoid::atoms;
use crate::predicates::{predicates, Flag, Predicates};
use crate::semigroup::FiniteInverseSemigroup;

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub idempotents: usize,
    pub zero: Option<String>,
    pub one: Option<String>,
    #[serde(flatten)]
    pub predicates: Predicates,
    pub congruence_free: Flag,
    pub l_classes: usize,
    pub r_classes: usize,
    pub h_classes: usize,
    pub d_classes: usize,
    pub j_classes: usize,
    pub sigma_classes: usize,
    pub mu_classes: usize,
    pub xi_classes: Option<usize>,
    pub atoms: Option<usize>,
    pub boolean: Flag,
    pub decomposition: Option<String>,
}

pub fn analyze(s: &FiniteInverseSemigroup) -> Result<AnalysisReport> {
    let g = greens(s);
    let has_zero = s.zero().is_some();
    let monoid_with_zero = has_zero && s.one().is_some();
    let boolean = if monoid_with_zero {
        Some(is_boolean(s)?.is_some())
    } else {
        None
    };
    let decomposition = match boolean {
        Some(true) if crate::predicates::is_fundamental(s) => {
            Some(decompose_fundamental(s)?.describe())
        }
        _ => None,
    };
    Ok(AnalysisReport {
        order: s.len(),
        idempotents: s.idempotents().len(),
        zero: s.zero().map(|z| s.label(z).to_owned()),
        one: s.one().map(|u| s.label(u).to_owned()),
        predicates: predicates(s),
        congruence_free: Flag::from_option(if has_zero {
            Some(is_congruence_free(s)?)
        } else {
            None
        }),
        l_classes: g.l.len(),
        r_classes: g.r.len(),
        h_classes: g.h.len(),
        d_classes: g.d.len(),
        j_classes: g.j.len(),
        sigma_classes: sigma(s).num_classes(),
        mu_classes: mu(s).num_classes(),
        xi_classes: if has_zero {
            Some(xi(s)?.num_classes())
        } else {
            None
        },
        atoms: if has_zero {
            Some(atoms(s)?.len())
        } else {
            None
        },
        boolean: Flag::from_option(boolean),
        decomposition,
    })
}

impl AnalysisReport {
    /// One `key: value` line per field, in a fixed order.
    pub fn to_text(&self) -> String {
        let na = || "n/a".to_owned();
        let mut lines: Vec<(String, String)> = vec![
            ("order".into(), self.order.to_string()),
            ("idempotents".into(), self.idempotents.to_string()),
            ("zero".into(), self.zero.clone().unwrap_or_else(na)),
            ("one".into(), self.one.clone().unwrap_or_else(na)),
        ];
        for (k, v) in self.predicates.entries() {
            lines.push((k.into(), v.as_str().into()));
        }
        lines.extend([
            (
                "congruence_free".into(),
                self.congruence_free.as_str().into(),
            ),
            ("l_classes".into(), self.l_classes.to_string()),
            ("r_classes".into(), self.r_classes.to_string()),
            ("h_classes".into(), self.h_classes.to_string()),
            ("d_classes".into(), self.d_classes.to_string()),
            ("j_classes".into(), self.j_classes.to_string()),
            ("sigma_classes".into(), self.sigma_classes.to_string()),
            ("mu_classes".into(), self.mu_classes.to_string()),
            (
                "xi_classes".into(),
                self.xi_classes.map_or_else(na, |x| x.to_string()),
            ),
            (
                "atoms".into(),
                self.atoms.map_or_else(na, |x| x.to_string()),
            ),
            ("boolean".into(), self.boolean.as_str().into()),
            (
                "decomposition".into(),
                self.decomposition.clone().unwrap_or_else(na),
            ),
        ]);
        lines
            .into_iter()
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string(self)?;
        s.push('\n');
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn i2_report() {
        let r = analyze(&corpus::symmetric(2)).unwrap();
        let text = r.to_text();
        assert!(text.starts_with("order: 7\nidempotents: 4\n"));
        assert!(text.contains("is_fundamental: true\n"));
        assert!(text.contains("congruence_free: false\n"));
        assert!(text.contains("decomposition: I2\n"));
        assert!(text.contains("d_classes: 3\n"));
    }

    #[test]
    fn brandt_report() {
        let text = analyze(&corpus::brandt()).unwrap().to_text();
        assert!(text.starts_with("order: 5\n"));
        assert!(text.contains("congruence_free: true\n"));
        assert!(text.contains("boolean: n/a\n"));
    }

    #[test]
    fn group_report_and_json() {
        let r = analyze(&corpus::cyclic_group(3)).unwrap();
        assert!(r.to_text().contains("xi_classes: n/a\n"));
        let j = r.to_json().unwrap();
        assert!(j.starts_with(
            "{\"order\":3,\"idempotents\":1,\"zero\":null,\"one\":\"1\",\"is_group\":\"yes\""
        ));
    }
}
