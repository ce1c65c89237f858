use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::DiagramObject;
use crate::catalog::{build_simple_system, lowest_root};
use crate::double::DoubleVoganSuperdiagram;
use crate::dynkin::{affine_extension, diagram_of, Arrow, DiagramMap, DynkinDiagram};
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::rational::format_q;
use crate::vogan::VoganSuperdiagram;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: usize,
    pub kind: String,
    pub root: String,
    pub mark: Option<u32>,
    pub painted: bool,
    pub black: bool,
    pub circled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub a: usize,
    pub b: usize,
    pub bond: u32,
    /// `none`, `to_a` or `to_b`.
    pub arrow: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    pub schema_version: u32,
    pub kind: String,
    pub family: String,
    pub affine_vertex: Option<usize>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    /// Entries written as `p/q`.
    pub cartan: Vec<Vec<String>>,
    /// Nontrivial cycles of the diagram involution.
    pub involution: Vec<Vec<usize>>,
    /// Free-form key/value output such as labels or filter results; not read back.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub annotations: BTreeMap<String, String>,
}

fn arrow_name(a: Arrow) -> &'static str {
    match a {
        Arrow::None => "none",
        Arrow::TowardFirst => "to_a",
        Arrow::TowardSecond => "to_b",
    }
}

impl DiagramDocument {
    pub fn of(x: &DiagramObject) -> Self {
        let d = x.diagram();
        let deco = x.decorations();
        DiagramDocument {
            schema_version: SCHEMA_VERSION,
            kind: x.kind_name().to_string(),
            family: d.family.to_string(),
            affine_vertex: x.affine_vertex(),
            vertices: d
                .vertices
                .iter()
                .map(|v| VertexDoc {
                    id: v.id,
                    kind: v.kind.name().to_string(),
                    root: d.roots[v.id].to_string(),
                    mark: v.mark,
                    painted: deco.painted.contains(&v.id),
                    black: deco.black.contains(&v.id),
                    circled: deco.circled.contains(&v.id),
                })
                .collect(),
            edges: d
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    a: e.a,
                    b: e.b,
                    bond: e.bond,
                    arrow: arrow_name(e.arrow).to_string(),
                })
                .collect(),
            cartan: d
                .cartan
                .iter()
                .map(|r| r.iter().map(|&q| format_q(q)).collect())
                .collect(),
            involution: deco.involution.map(|i| i.cycles()).unwrap_or_default(),
            annotations: BTreeMap::new(),
        }
    }

    pub fn annotate(mut self, key: &str, value: impl Into<String>) -> Self {
        self.annotations.insert(key.to_string(), value.into());
        self
    }
}

/// Pretty JSON with a trailing newline, for one document or a list of them.
pub fn documents_to_json<T: Serialize + ?Sized>(docs: &T) -> String {
    let mut s = serde_json::to_string_pretty(docs).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn to_json(x: &DiagramObject) -> String {
    documents_to_json(&DiagramDocument::of(x))
}

fn ids(doc: &DiagramDocument, pick: impl Fn(&VertexDoc) -> bool) -> BTreeSet<usize> {
    doc.vertices
        .iter()
        .filter(|v| pick(v))
        .map(|v| v.id)
        .collect()
}

/// Parses a document and rebuilds the object from its family, rejecting any
/// disagreement between the stored and the recomputed diagram data.
pub fn from_json(text: &str) -> Result<DiagramObject> {
    let doc: DiagramDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_document(doc)
}

/// Accepts either a single document or a JSON array of documents.
pub fn from_json_many(text: &str) -> Result<Vec<DiagramObject>> {
    let docs: Vec<DiagramDocument> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text)
    } else {
        serde_json::from_str(text).map(|d| vec![d])
    }
    .map_err(|e| Error::Parse(e.to_string()))?;
    docs.into_iter().map(from_document).collect()
}

fn from_document(doc: DiagramDocument) -> Result<DiagramObject> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            doc.schema_version
        )));
    }
    let family = FamilyId::parse_permissive(&doc.family)?;
    let finite = diagram_of(&build_simple_system(&family)?);
    let base = match doc.kind.as_str() {
        "dynkin" | "vogan" => DiagramObject::Dynkin(finite),
        "affine" | "double" => {
            DiagramObject::Affine(affine_extension(&finite, &lowest_root(&family)?)?)
        }
        other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
    };
    let expected = DiagramDocument::of(&base);
    let check = |what: &str, ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::Structural(format!(
                "{what} do not match the {} diagram",
                doc.family
            )))
        }
    };
    check("affine vertex", doc.affine_vertex == expected.affine_vertex)?;
    check("cartan entries", doc.cartan == expected.cartan)?;
    check("edges", doc.edges == expected.edges)?;
    check(
        "vertex count",
        doc.vertices.len() == expected.vertices.len(),
    )?;
    for (got, want) in doc.vertices.iter().zip(&expected.vertices) {
        let same = got.id == want.id
            && got.kind == want.kind
            && got.root == want.root
            && got.mark == want.mark;
        check(&format!("vertex {}", got.id), same)?;
    }

    let diagram: &DynkinDiagram = base.diagram();
    let inv = DiagramMap::from_cycles(diagram.len(), &doc.involution)?;
    let painted = ids(&doc, |v| v.painted);
    let black = ids(&doc, |v| v.black);
    let circled = ids(&doc, |v| v.circled);
    let plain = inv.is_identity() && painted.is_empty() && black.is_empty() && circled.is_empty();

    Ok(match (doc.kind.as_str(), base) {
        ("dynkin", d) | ("affine", d) => {
            check("decorations", plain)?;
            d
        }
        ("vogan", DiagramObject::Dynkin(d)) => {
            check("black vertices", black.is_empty())?;
            DiagramObject::Vogan(VoganSuperdiagram::new(Arc::new(d), inv, painted, circled)?)
        }
        ("double", DiagramObject::Affine(a)) => DiagramObject::Double(
            DoubleVoganSuperdiagram::new(Arc::new(a), inv, black, circled, painted)?,
        ),
        _ => unreachable!("kind and base agree"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::affine_of;
    use crate::rational::Q;

    #[test]
    fn half_is_exact_in_cartan() {
        let ad = affine_of(&FamilyId::d21(Q::new(1, 2)).unwrap()).unwrap();
        let text = to_json(&ad.clone().into());
        assert!(text.contains("\"-1/2\""), "{text}");
        assert!(!text.contains("0.5"));
        assert_eq!(from_json(&text).unwrap(), DiagramObject::Affine(ad));
    }

    #[test]
    fn unknown_field_is_named() {
        let ad = affine_of(&FamilyId::a(1, 0).unwrap()).unwrap();
        let text = to_json(&ad.into()).replacen("\"kind\"", "\"colour\": 1, \"kind\"", 1);
        let err = from_json(&text).unwrap_err().to_string();
        assert!(err.contains("colour"), "{err}");
        assert!(err.contains("line"), "{err}");
    }

    #[test]
    fn future_schema_rejected() {
        let ad = affine_of(&FamilyId::a(1, 0).unwrap()).unwrap();
        let text = to_json(&ad.into()).replace("\"schema_version\": 1", "\"schema_version\": 2");
        assert!(matches!(from_json(&text), Err(Error::Parse(_))));
    }

    #[test]
    fn tampered_mark_rejected() {
        let ad = affine_of(&FamilyId::b(1, 1).unwrap()).unwrap();
        let text = to_json(&ad.into()).replacen("\"mark\": 2", "\"mark\": 3", 1);
        assert!(matches!(from_json(&text), Err(Error::Structural(_))));
    }
}
