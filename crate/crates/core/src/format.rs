//! JSON file formats, DOT export and congruence serialization.
//!
//! Writers emit compact JSON with keys in sorted order followed by a
//! newline, so output depends only on the value written.

use serde::{Deserialize, Serialize};

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::groupoid::{Arrow, FiniteGroupoid};
use crate::pbij::PartialBijection;
use crate::semigroup::{closure_from_generators, FiniteInverseSemigroup};

pub const SEMIGROUP_FORMAT: &str = "isg-1";
pub const GENERATOR_FORMAT: &str = "isg-gen-1";
pub const GROUPOID_FORMAT: &str = "grpd-1";

// Field order is alphabetical; serde_json writes fields in declaration order.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemigroupFile {
    format: String,
    labels: Vec<String>,
    mult: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    one: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero: Option<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    degree: usize,
    format: String,
    generators: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowEntry {
    cod: usize,
    dom: usize,
    name: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidFile {
    arrows: Vec<ArrowEntry>,
    comp: Vec<Vec<Option<usize>>>,
    format: String,
    identities: Vec<usize>,
    inv: Vec<usize>,
}

#[derive(Deserialize)]
struct FormatTag {
    format: String,
}

fn format_tag(text: &str) -> Result<String> {
    let tag: FormatTag = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    Ok(tag.format)
}

fn to_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

pub fn write_semigroup(s: &FiniteInverseSemigroup) -> Result<String> {
    to_line(&SemigroupFile {
        format: SEMIGROUP_FORMAT.into(),
        labels: s.labels().to_vec(),
        mult: s.table(),
        one: s.one(),
        zero: s.zero(),
    })
}

/// Reads either an `isg-1` table or an `isg-gen-1` generator list; the
/// latter is closed under product and inverse.
pub fn read_semigroup(text: &str, closure_bound: usize) -> Result<FiniteInverseSemigroup> {
    match format_tag(text)?.as_str() {
        SEMIGROUP_FORMAT => {
            let f: SemigroupFile = serde_json::from_str(text).map_err(parse_err)?;
            FiniteInverseSemigroup::from_table(f.labels, &f.mult, f.zero, f.one)
        }
        GENERATOR_FORMAT => {
            let f: GeneratorFile = serde_json::from_str(text).map_err(parse_err)?;
            let gens = parse_generators(f.degree, &f.generators)?;
            Ok(closure_from_generators(&gens, closure_bound)?.0)
        }
        other => Err(Error::Format(format!("unknown format {other:?}"))),
    }
}

pub fn parse_generators(degree: usize, gens: &[String]) -> Result<Vec<PartialBijection>> {
    gens.iter()
        .map(|g| PartialBijection::parse(g, degree))
        .collect()
}

pub fn write_generators(degree: usize, gens: &[PartialBijection]) -> Result<String> {
    to_line(&GeneratorFile {
        degree,
        format: GENERATOR_FORMAT.into(),
        generators: gens.iter().map(|g| g.to_string()).collect(),
    })
}

pub fn write_groupoid(g: &FiniteGroupoid) -> Result<String> {
    to_line(&GroupoidFile {
        arrows: g
            .arrows()
            .iter()
            .map(|a| ArrowEntry {
                cod: a.cod,
                dom: a.dom,
                name: a.name.clone(),
            })
            .collect(),
        comp: g.table(),
        format: GROUPOID_FORMAT.into(),
        identities: g.identities().to_vec(),
        inv: (0..g.len()).map(|x| g.inv(x)).collect(),
    })
}

pub fn read_groupoid(text: &str) -> Result<FiniteGroupoid> {
    let tag = format_tag(text)?;
    if tag != GROUPOID_FORMAT {
        return Err(Error::Format(format!(
            "expected {GROUPOID_FORMAT}, found {tag:?}"
        )));
    }
    let f: GroupoidFile = serde_json::from_str(text).map_err(parse_err)?;
    let arrows = f
        .arrows
        .into_iter()
        .map(|a| Arrow {
            name: a.name,
            dom: a.dom,
            cod: a.cod,
        })
        .collect();
    let g = FiniteGroupoid::new(arrows, &f.comp, f.inv)?;
    if g.identities() != f.identities.as_slice() {
        return Err(Error::InvalidGroupoid(
            "identity list does not match the arrows".into(),
        ));
    }
    Ok(g)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One node per identity and one edge `dom -> cod` per other arrow, both in
/// index order.
pub fn groupoid_to_dot(g: &FiniteGroupoid) -> String {
    let mut out = String::from("digraph groupoid {\n");
    for &e in g.identities() {
        out.push_str(&format!(
            "  n{} [label=\"{}\"];\n",
            e,
            dot_escape(g.name(e))
        ));
    }
    for x in (0..g.len()).filter(|&x| !g.is_identity(x)) {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            g.dom(x),
            g.cod(x),
            dot_escape(g.name(x))
        ));
    }
    out.push_str("}\n");
    out
}

/// Sorted list of sorted classes of labels.
pub fn write_congruence(s: &FiniteInverseSemigroup, c: &Congruence) -> Result<String> {
    to_line(&c.labelled(s))
}

pub fn read_congruence(s: &FiniteInverseSemigroup, text: &str) -> Result<Congruence> {
    let classes: Vec<Vec<String>> = serde_json::from_str(text).map_err(parse_err)?;
    let idx = classes
        .iter()
        .map(|c| {
            c.iter()
                .map(|l| {
                    s.find_label(l)
                        .ok_or_else(|| Error::Format(format!("unknown label {l:?}")))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Congruence::from_classes(s.len(), &idx)
}
