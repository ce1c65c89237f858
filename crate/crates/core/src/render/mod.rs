//! Serialization and drawing of diagram objects.
//!
//! Glyphs: `○` white, `⊗` grey, `◆` odd non-isotropic, `●` painted or black;
//! a circled vertex (or a painted white in a double diagram) is wrapped in `( )`.

mod draw;
mod json;

use std::collections::BTreeSet;

use crate::double::DoubleVoganSuperdiagram;
use crate::dynkin::{AffineDiagram, DiagramMap, DynkinDiagram};
use crate::vogan::VoganSuperdiagram;

pub use draw::{to_dot, to_text, to_text_with, to_tikz};
pub use json::{
    documents_to_json, from_json, from_json_many, to_json, DiagramDocument, EdgeDoc, VertexDoc,
    SCHEMA_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramObject {
    Dynkin(DynkinDiagram),
    Affine(AffineDiagram),
    Vogan(VoganSuperdiagram),
    Double(DoubleVoganSuperdiagram),
}

impl From<DynkinDiagram> for DiagramObject {
    fn from(d: DynkinDiagram) -> Self {
        DiagramObject::Dynkin(d)
    }
}

impl From<AffineDiagram> for DiagramObject {
    fn from(d: AffineDiagram) -> Self {
        DiagramObject::Affine(d)
    }
}

impl From<VoganSuperdiagram> for DiagramObject {
    fn from(v: VoganSuperdiagram) -> Self {
        DiagramObject::Vogan(v)
    }
}

impl From<DoubleVoganSuperdiagram> for DiagramObject {
    fn from(x: DoubleVoganSuperdiagram) -> Self {
        DiagramObject::Double(x)
    }
}

/// Per-vertex decorations shared by every output format.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Decorations {
    pub painted: BTreeSet<usize>,
    pub black: BTreeSet<usize>,
    pub circled: BTreeSet<usize>,
    pub involution: Option<DiagramMap>,
}

impl DiagramObject {
    pub fn kind_name(&self) -> &'static str {
        match self {
            DiagramObject::Dynkin(_) => "dynkin",
            DiagramObject::Affine(_) => "affine",
            DiagramObject::Vogan(_) => "vogan",
            DiagramObject::Double(_) => "double",
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        match self {
            DiagramObject::Dynkin(d) => d,
            DiagramObject::Affine(a) => &a.diagram,
            DiagramObject::Vogan(v) => &v.diagram,
            DiagramObject::Double(x) => &x.affine.diagram,
        }
    }

    pub(crate) fn affine_vertex(&self) -> Option<usize> {
        match self {
            DiagramObject::Affine(a) => Some(a.affine_vertex),
            DiagramObject::Double(x) => Some(x.affine.affine_vertex),
            _ => None,
        }
    }

    pub(crate) fn decorations(&self) -> Decorations {
        match self {
            DiagramObject::Dynkin(_) | DiagramObject::Affine(_) => Decorations::default(),
            DiagramObject::Vogan(v) => Decorations {
                painted: v.painted.clone(),
                black: BTreeSet::new(),
                circled: v.circled.clone(),
                involution: Some(v.involution.clone()),
            },
            DiagramObject::Double(x) => Decorations {
                painted: x.white_painting.clone(),
                black: x.black.clone(),
                circled: x.circled.clone(),
                involution: Some(x.involution.clone()),
            },
        }
    }
}
