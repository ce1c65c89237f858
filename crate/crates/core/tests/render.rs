use std::sync::Arc;

use supervogan::catalog::build_simple_system;
use supervogan::double::DoubleVoganSuperdiagram;
use supervogan::dynkin::{affine_of, diagram_of};
use supervogan::render::{from_json, to_dot, to_json, to_text, to_tikz, DiagramObject};
use supervogan::vogan::VoganSuperdiagram;
use supervogan::{FamilyId, Q};

#[test]
fn every_affine_diagram_round_trips() {
    for f in FamilyId::sweep(3, &[Q::from(1), Q::from(2), Q::new(-1, 2)]) {
        let x: DiagramObject = affine_of(&f).unwrap().into();
        let text = to_json(&x);
        assert_eq!(from_json(&text).unwrap(), x, "{f}");
    }
}

/// Quoted node ids, balanced braces, and every statement terminated.
fn dot_is_well_formed(dot: &str) -> bool {
    let lines: Vec<&str> = dot.lines().collect();
    let open = lines
        .first()
        .is_some_and(|l| l.starts_with("digraph \"") && l.ends_with('{'));
    let close = lines.last() == Some(&"}");
    let body_ok = lines[1..lines.len() - 1].iter().all(|l| {
        let l = l.trim();
        l.ends_with(';') && (l.starts_with('"') || l.starts_with("node "))
    });
    let depth_ok = dot.matches('{').count() == dot.matches('}').count();
    let quotes_ok = lines
        .iter()
        .all(|l| l.replace("\\\"", "").matches('"').count() % 2 == 0);
    open && close && body_ok && depth_ok && quotes_ok
}

#[test]
fn dot_output_is_well_formed() {
    for f in FamilyId::sweep(2, &[Q::from(2)]) {
        let ad = Arc::new(affine_of(&f).unwrap());
        let dot = to_dot(&DoubleVoganSuperdiagram::plain(ad.clone()).into());
        assert!(dot_is_well_formed(&dot), "{f}\n{dot}");
    }
}

#[test]
fn osp_1_2n_ends_with_diamond() {
    for n in 1..=4 {
        let d = diagram_of(&build_simple_system(&FamilyId::b(0, n).unwrap()).unwrap());
        let t = to_text(&d.into());
        assert!(t.trim_end().ends_with('◆'), "{t}");
    }
}

#[test]
fn unpainted_diagrams_have_no_filled_glyph() {
    for f in FamilyId::sweep(3, &[Q::from(2)]) {
        let d = Arc::new(diagram_of(&build_simple_system(&f).unwrap()));
        let v: DiagramObject = VoganSuperdiagram::plain(d).into();
        assert!(!to_text(&v).contains('●'));
        assert!(!to_tikz(&v).contains(",fill"));
    }
}
