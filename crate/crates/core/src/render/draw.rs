use std::fmt::Write;

use super::DiagramObject;
use crate::dynkin::{Arrow, VertexKind};

fn glyph(x: &DiagramObject, v: usize, color: bool) -> String {
    let d = x.diagram();
    let deco = x.decorations();
    let filled = deco.black.contains(&v) || (!is_double(x) && deco.painted.contains(&v));
    let base = if filled {
        "●"
    } else {
        match d.kind(v) {
            VertexKind::White => "○",
            VertexKind::Grey => "⊗",
            VertexKind::OddNonIsotropic => "◆",
        }
    };
    let base = if color && filled {
        format!("\x1b[1;31m{base}\x1b[0m")
    } else {
        base.to_string()
    };
    // In a double diagram a painted white is shown by its parentheses alone.
    let wrapped = deco.circled.contains(&v) || (is_double(x) && deco.painted.contains(&v));
    if wrapped {
        format!("({base})")
    } else {
        base
    }
}

fn is_double(x: &DiagramObject) -> bool {
    matches!(x, DiagramObject::Double(_))
}

fn arrow_mark(a: Arrow) -> &'static str {
    match a {
        Arrow::None => "",
        Arrow::TowardFirst => " <",
        Arrow::TowardSecond => " >",
    }
}

pub fn to_text(x: &DiagramObject) -> String {
    to_text_with(x, false)
}

/// Header, marks, links and involution, then the glyph chain on the last line.
pub fn to_text_with(x: &DiagramObject, color: bool) -> String {
    let d = x.diagram();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", d.family, x.kind_name());
    if let Some(a) = x.affine_vertex() {
        let marks: Vec<String> = d
            .vertices
            .iter()
            .map(|v| v.mark.unwrap_or(0).to_string())
            .collect();
        let _ = writeln!(out, "marks: {} (affine vertex {a})", marks.join(" "));
    }
    let links: Vec<String> = d
        .edges
        .iter()
        .map(|e| format!("{}-{} x{}{}", e.a, e.b, e.bond, arrow_mark(e.arrow)))
        .collect();
    let _ = writeln!(
        out,
        "links: {}",
        if links.is_empty() {
            "none".into()
        } else {
            links.join(", ")
        }
    );
    if let Some(inv) = x.decorations().involution {
        let _ = writeln!(out, "involution: {inv}");
    }
    let chain: Vec<String> = (0..d.len())
        .map(|v| format!("{v}:{}", glyph(x, v, color)))
        .collect();
    out.push_str(&chain.join(" "));
    out.push('\n');
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(x: &DiagramObject) -> String {
    let d = x.diagram();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "digraph \"{}\" {{",
        dot_escape(&format!("{} {}", d.family, x.kind_name()))
    );
    let _ = writeln!(out, "  node [shape=plaintext];");
    for v in &d.vertices {
        let label = match v.mark {
            Some(m) => format!("{} {m}", glyph(x, v.id, false)),
            None => glyph(x, v.id, false),
        };
        let _ = writeln!(out, "  \"v{}\" [label=\"{}\"];", v.id, dot_escape(&label));
    }
    for e in &d.edges {
        let dir = match e.arrow {
            Arrow::None => "none",
            Arrow::TowardFirst => "back",
            Arrow::TowardSecond => "forward",
        };
        let _ = writeln!(
            out,
            "  \"v{}\" -> \"v{}\" [dir={dir}, label=\"{}\"];",
            e.a, e.b, e.bond
        );
    }
    if let Some(inv) = x.decorations().involution {
        for c in inv.cycles() {
            let _ = writeln!(
                out,
                "  \"v{}\" -> \"v{}\" [style=dashed, dir=both, constraint=false];",
                c[0], c[1]
            );
        }
    }
    out.push_str("}\n");
    out
}

pub fn to_tikz(x: &DiagramObject) -> String {
    let d = x.diagram();
    let deco = x.decorations();
    let mut out = String::from("\\begin{tikzpicture}\n");
    for v in &d.vertices {
        let filled = deco.black.contains(&v.id) || (!is_double(x) && deco.painted.contains(&v.id));
        let ringed = deco.circled.contains(&v.id) || (is_double(x) && deco.painted.contains(&v.id));
        let mut style = match v.kind {
            VertexKind::White => "circle,draw".to_string(),
            VertexKind::Grey => "circle,draw,cross out".to_string(),
            VertexKind::OddNonIsotropic => "diamond,draw".to_string(),
        };
        if filled {
            style.push_str(",fill");
        }
        if ringed {
            style.push_str(",double");
        }
        if let Some(m) = v.mark {
            let _ = write!(style, ",label=above:{{{m}}}");
        }
        let _ = writeln!(out, "  \\node[{style}] (v{}) at ({},0) {{}};", v.id, v.id);
    }
    for e in &d.edges {
        let tip = match e.arrow {
            Arrow::None => "",
            Arrow::TowardFirst => "<-,",
            Arrow::TowardSecond => "->,",
        };
        let lines = match e.bond {
            1 => "".to_string(),
            2 => "double,".to_string(),
            k => format!("line width={k}pt,"),
        };
        let _ = writeln!(out, "  \\draw[{tip}{lines}] (v{}) -- (v{});", e.a, e.b);
    }
    if let Some(inv) = deco.involution {
        for c in inv.cycles() {
            let _ = writeln!(
                out,
                "  \\draw[<->, dashed, bend left=40] (v{}) to (v{});",
                c[0], c[1]
            );
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
