use std::process::{Command, Output};

use supervogan::double::{is_double, DoubleOptions};
use supervogan::render::{from_json_many, DiagramObject};

fn sv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supervogan"))
        .args(args)
        .env_remove("SUPERVOGAN_COLOR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_objects(args: &[&str]) -> Vec<DiagramObject> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = sv(&full);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    from_json_many(&stdout(&o)).unwrap()
}

#[test]
fn d21_at_one_marks() {
    let o = sv(&["affine", "D(2,1;a=1/1)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let marks: Vec<u64> = doc["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["mark"].as_u64().unwrap())
        .collect();
    assert_eq!(marks, [1, 2, 1, 1]);
}

#[test]
fn verify_b_2_2_passes() {
    let o = sv(&["verify", "B(2,2)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn almost_minus_double_is_the_parity_failures() {
    let almost = json_objects(&["double", "B(1,1)", "--almost"]);
    let double = json_objects(&["double", "B(1,1)"]);
    let opts = DoubleOptions::default();
    let unwrap = |x: &DiagramObject| match x {
        DiagramObject::Double(d) => d.clone(),
        other => panic!("expected a double diagram, got {}", other.kind_name()),
    };
    let almost: Vec<_> = almost.iter().map(unwrap).collect();
    let double: Vec<_> = double.iter().map(unwrap).collect();
    for d in &double {
        assert!(almost.contains(d));
    }
    let dropped: Vec<_> = almost.iter().filter(|x| !double.contains(x)).collect();
    assert!(!dropped.is_empty());
    for x in &dropped {
        assert!(!is_double(x, opts));
        assert_eq!(
            x.black.iter().map(|&v| x.affine.marks[v]).sum::<u32>() % 2,
            1
        );
    }
    assert_eq!(almost.len() - dropped.len(), double.len());
}

#[test]
fn json_output_of_every_subcommand_reparses() {
    for args in [
        vec!["families"],
        vec!["diagram", "A(2,1)"],
        vec!["affine", "G(3)"],
        vec!["vogan", "C(3)"],
        vec!["vogan", "D(3,1)", "--canonical"],
        vec!["double", "A(1,0)", "--almost"],
        vec!["double", "D(2,1;a=2/1)", "--r", "2"],
        vec!["classify", "F(4)"],
        vec!["verify", "A(1,0)"],
    ] {
        assert!(!json_objects(&args).is_empty(), "{args:?}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [["classify", "A(2,1)"], ["vogan", "B(1,2)"]] {
        assert_eq!(sv(&args).stdout, sv(&args).stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(sv(&["diagram", "A(2,1"]).status.code(), Some(3));
    assert_eq!(sv(&["diagram", "A(1,1)"]).status.code(), Some(1));
    assert_eq!(
        sv(&["diagram", "A(1,1)", "--permissive"]).status.code(),
        Some(0)
    );
    assert_eq!(sv(&["nonsense"]).status.code(), Some(1));
    assert_eq!(sv(&["double", "A(1,0)", "--r", "3"]).status.code(), Some(1));
    // D(2,2) has Vogan classes whose flip orbit never drops below three painted vertices.
    assert_eq!(sv(&["verify", "D(2,2)"]).status.code(), Some(2));
    let bad = std::env::temp_dir().join("supervogan-bad.json");
    std::fs::write(&bad, "{\"schema_version\": 1,").unwrap();
    let o = sv(&["render", "--in", bad.to_str().unwrap(), "--to", "text"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn help_documents_the_family_grammar() {
    let o = sv(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("family   = name"));
    assert!(s.contains(";a="));
}

#[test]
fn render_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("supervogan-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.json");
    let o = sv(&[
        "affine",
        "D(3,1)",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let original = std::fs::read_to_string(&path).unwrap();
    let again = sv(&["render", "--in", path.to_str().unwrap(), "--to", "json"]);
    assert_eq!(stdout(&again), original);
    let dot = stdout(&sv(&[
        "render",
        "--in",
        path.to_str().unwrap(),
        "--to",
        "dot",
    ]));
    assert!(dot.starts_with("digraph \""));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    let tikz = stdout(&sv(&[
        "render",
        "--in",
        path.to_str().unwrap(),
        "--to",
        "tikz",
    ]));
    assert!(tikz.contains("\\begin{tikzpicture}"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn color_env_only_changes_filled_glyphs() {
    let plain = sv(&["vogan", "A(2,1)", "--canonical"]);
    let colored = Command::new(env!("CARGO_BIN_EXE_supervogan"))
        .args(["vogan", "A(2,1)", "--canonical"])
        .env("SUPERVOGAN_COLOR", "1")
        .output()
        .unwrap();
    let colored = String::from_utf8(colored.stdout).unwrap();
    assert!(colored.contains("\x1b["));
    let stripped = colored.replace("\x1b[1;31m", "").replace("\x1b[0m", "");
    assert_eq!(stripped, stdout(&plain));
}

#[test]
fn classify_lists_captions() {
    let s = stdout(&sv(&["classify", "G(3)"]));
    assert!(s.contains("caption=G(3)/(sl(2,ℝ)⊕g_c)"), "{s}");
    let s = stdout(&sv(&["classify", "G(3)", "--ascii"]));
    assert!(s.contains("caption=G(3)/(sl(2,R)+g_c)"), "{s}");
}
