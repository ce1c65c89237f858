//! Command-line front end for the `supervogan` library.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use supervogan::catalog::build_simple_system;
use supervogan::double::{
    enumerate_almost_double, enumerate_double, is_double, pair_rows, BlackAction, DoubleOptions,
    ParityScope,
};
use supervogan::dynkin::{affine_of, diagram_of};
use supervogan::labels::ascii;
use supervogan::oracle::verify_family;
use supervogan::render::{
    documents_to_json, from_json_many, to_dot, to_json, to_text_with, to_tikz, DiagramDocument,
    DiagramObject,
};
use supervogan::vogan::{enumerate_vogan, equivalence_classes, real_form_label, CircleMode};
use supervogan::{Error, FamilyId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

const FAMILY_GRAMMAR: &str = "\
FAMILY syntax (EBNF):
  family   = name \"(\" int [ \",\" int ] [ \";a=\" rational ] \")\" ;
  name     = \"A\" | \"B\" | \"C\" | \"D\" | \"F\" | \"G\" ;
  rational = [ \"-\" ] digits [ \"/\" digits ] ;
Examples: A(2,1)  B(0,2)  C(3)  D(3,1)  D(2,1;a=2/1)  F(4)  G(3)

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 parse error.
Set SUPERVOGAN_COLOR=1 to color filled glyphs in text output.";

#[derive(Debug, Parser)]
#[command(name = "supervogan", version, about = "Affine, Vogan and double Vogan superdiagrams", after_help = FAMILY_GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Whether circlings separate Vogan classes.
    #[arg(long, global = true, value_enum, default_value_t = Circles::Distinguish)]
    circles: Circles,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Accept A(n,n).
    #[arg(long, global = true)]
    permissive: bool,
    /// Transliterate captions to ASCII.
    #[arg(long, global = true)]
    ascii: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the supported families and their parameter ranges.
    Families,
    /// Finite Dynkin diagram of the distinguished simple system.
    Diagram { family: String },
    /// Affine diagram with marks.
    Affine { family: String },
    /// Vogan superdiagrams on the finite diagram.
    Vogan {
        family: String,
        /// One representative per equivalence class.
        #[arg(long)]
        canonical: bool,
    },
    /// Double (or almost double) Vogan superdiagrams on the affine diagram.
    Double {
        family: String,
        /// Skip the parity filter and report it per diagram instead.
        #[arg(long)]
        almost: bool,
        #[command(flatten)]
        parity: ParityArgs,
    },
    /// Symmetric superpair table, one row per double class.
    Classify {
        family: String,
        #[command(flatten)]
        parity: ParityArgs,
    },
    /// Run every oracle check; exit 2 on any failure.
    Verify {
        family: String,
        #[command(flatten)]
        parity: ParityArgs,
    },
    /// Re-render a JSON document (or a list of them).
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
}

#[derive(Debug, clap::Args)]
struct ParityArgs {
    /// Multiplier in the parity condition on black marks.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
    r: u32,
    /// Families on which the parity condition is enforced.
    #[arg(long, value_enum, default_value_t = Scope::All)]
    scope: Scope,
}

impl ParityArgs {
    fn options(&self) -> DoubleOptions {
        DoubleOptions {
            r: self.r,
            scope: match self.scope {
                Scope::All => ParityScope::AllFamilies,
                Scope::Ab => ParityScope::TypeAB,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Circles {
    Distinguish,
    Ignore,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    All,
    Ab,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Text,
    Dot,
    Tikz,
    Json,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::FamilySyntax { .. } | Error::Parse(_) => EXIT_PARSE,
            Error::ParameterRange { .. } => EXIT_USAGE,
            _ => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            code: EXIT_OK,
        }
    }
}

struct Ctx {
    format: Format,
    circles: CircleMode,
    permissive: bool,
    ascii: bool,
    color: bool,
}

impl Ctx {
    fn family(&self, s: &str) -> Result<FamilyId, Failure> {
        let f = if self.permissive {
            FamilyId::parse_permissive(s)
        } else {
            s.parse()
        };
        Ok(f?)
    }

    fn caption(&self, s: &str) -> String {
        if self.ascii {
            ascii(s)
        } else {
            s.to_string()
        }
    }

    fn text(&self, x: &DiagramObject) -> String {
        to_text_with(x, self.color)
    }
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let ctx = Ctx {
        format: cli.format,
        circles: match cli.circles {
            Circles::Distinguish => CircleMode::Distinguish,
            Circles::Ignore => CircleMode::Ignore,
        },
        permissive: cli.permissive,
        ascii: cli.ascii,
        color: std::env::var("SUPERVOGAN_COLOR").is_ok_and(|v| v == "1"),
    };
    let result = match &cli.command {
        Command::Families => Ok(families(&ctx)),
        Command::Diagram { family } => diagram(&ctx, family),
        Command::Affine { family } => affine(&ctx, family),
        Command::Vogan { family, canonical } => vogan(&ctx, family, *canonical),
        Command::Double {
            family,
            almost,
            parity,
        } => double(&ctx, family, *almost, parity.options()),
        Command::Classify { family, parity } => classify(&ctx, family, parity.options()),
        Command::Verify { family, parity } => verify(&ctx, family, parity.options()),
        Command::Render { input, to } => render(&ctx, input, *to),
    };
    match result {
        Ok(o) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &o.body),
                None => out.write_all(o.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

const FAMILY_RULES: &[(&str, &str, &str)] = &[
    (
        "A(m,n)",
        "sl(m+1|n+1)",
        "m, n >= 0, m != n (A(n,n) with --permissive)",
    ),
    ("B(m,n)", "osp(2m+1|2n)", "m >= 1, n >= 1"),
    ("B(0,n)", "osp(1|2n)", "n >= 1"),
    ("C(n)", "osp(2|2n-2)", "n >= 2"),
    ("D(m,n)", "osp(2m|2n)", "m >= 2, n >= 1"),
    (
        "D(2,1;a=p/q)",
        "D(2,1;alpha)",
        "alpha rational, not 0 or -1",
    ),
    ("F(4)", "F(4)", "no parameters"),
    ("G(3)", "G(3)", "no parameters"),
];

fn families(ctx: &Ctx) -> Output {
    match ctx.format {
        Format::Text => {
            let mut s = String::new();
            for (spec, name, rule) in FAMILY_RULES {
                let _ = writeln!(s, "{spec:<14} {name:<14} {rule}");
            }
            Output::ok(s)
        }
        Format::Json => {
            let samples = [
                "A(1,0)",
                "B(1,1)",
                "B(0,1)",
                "C(2)",
                "D(2,1)",
                "D(2,1;a=2/1)",
                "F(4)",
                "G(3)",
            ];
            let docs: Vec<DiagramDocument> = FAMILY_RULES
                .iter()
                .zip(samples)
                .map(|((spec, name, rule), sample)| {
                    let f: FamilyId = sample.parse().expect("sample families are valid");
                    let ad = affine_of(&f).expect("sample families build");
                    DiagramDocument::of(&ad.into())
                        .annotate("family_pattern", *spec)
                        .annotate("algebra", *name)
                        .annotate("parameters", *rule)
                })
                .collect();
            Output::ok(documents_to_json(&docs))
        }
    }
}

fn single(ctx: &Ctx, x: DiagramObject) -> Output {
    Output::ok(match ctx.format {
        Format::Text => ctx.text(&x),
        Format::Json => to_json(&x),
    })
}

fn diagram(ctx: &Ctx, family: &str) -> Result<Output, Failure> {
    let f = ctx.family(family)?;
    Ok(single(ctx, diagram_of(&build_simple_system(&f)?).into()))
}

fn affine(ctx: &Ctx, family: &str) -> Result<Output, Failure> {
    let f = ctx.family(family)?;
    Ok(single(ctx, affine_of(&f)?.into()))
}

/// Text blocks separated by blank lines, or a JSON array of annotated documents.
fn listing(ctx: &Ctx, items: Vec<(DiagramObject, Vec<(&str, String)>)>) -> Output {
    match ctx.format {
        Format::Text => {
            let mut s = String::new();
            for (i, (x, notes)) in items.iter().enumerate() {
                let notes: Vec<String> = notes.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(s, "#{i} {}", notes.join(" "));
                s.push_str(&ctx.text(x));
                s.push('\n');
            }
            let _ = writeln!(s, "total: {}", items.len());
            Output::ok(s)
        }
        Format::Json => {
            let docs: Vec<DiagramDocument> = items
                .iter()
                .map(|(x, notes)| {
                    notes
                        .iter()
                        .fold(DiagramDocument::of(x), |d, (k, v)| d.annotate(k, v.clone()))
                })
                .collect();
            Output::ok(documents_to_json(&docs))
        }
    }
}

fn vogan(ctx: &Ctx, family: &str, canonical: bool) -> Result<Output, Failure> {
    let f = ctx.family(family)?;
    let d = diagram_of(&build_simple_system(&f)?);
    let all = enumerate_vogan(&d);
    let classes = equivalence_classes(&all, ctx.circles);
    let items = if canonical {
        classes
            .into_iter()
            .map(|c| {
                let label = real_form_label(&c.representative).display;
                let notes = vec![
                    ("class_size", c.members.len().to_string()),
                    ("label", label),
                ];
                (c.representative.into(), notes)
            })
            .collect()
    } else {
        let mut class_of = vec![0; all.len()];
        for (k, c) in classes.iter().enumerate() {
            for &i in &c.members {
                class_of[i] = k;
            }
        }
        all.into_iter()
            .zip(class_of)
            .map(|(v, k)| (v.into(), vec![("class", k.to_string())]))
            .collect()
    };
    Ok(listing(ctx, items))
}

fn double(ctx: &Ctx, family: &str, almost: bool, opts: DoubleOptions) -> Result<Output, Failure> {
    let f = ctx.family(family)?;
    let ad = Arc::new(affine_of(&f)?);
    let xs = if almost {
        enumerate_almost_double(&ad)
    } else {
        enumerate_double(&ad, opts)
    };
    let items = xs
        .into_iter()
        .map(|x| {
            let notes = vec![
                ("black_mark_sum", x.black_mark_sum().to_string()),
                (
                    "parity",
                    if is_double(&x, opts) { "pass" } else { "fail" }.to_string(),
                ),
            ];
            (x.into(), notes)
        })
        .collect();
    Ok(listing(ctx, items))
}

fn classify(ctx: &Ctx, family: &str, opts: DoubleOptions) -> Result<Output, Failure> {
    let f = ctx.family(family)?;
    let ad = affine_of(&f)?;
    let rows = pair_rows(&enumerate_double(&ad, opts));
    let items = rows
        .into_iter()
        .map(|row| {
            let mut notes = vec![
                ("caption", ctx.caption(row.classification.caption())),
                ("class_size", row.class_size.to_string()),
            ];
            if let Some(h) = row.hermitian {
                let action = match h.black_action {
                    BlackAction::Preserves => "preserves",
                    BlackAction::Interchanges => "interchanges",
                };
                notes.push((
                    "hermitian",
                    format!("{action} ({:+},{:+})", h.sign_on_z0, h.sign_on_z1),
                ));
            }
            if let Some(ok) = row.mark_sum_check {
                notes.push(("mark_sum_4", ok.to_string()));
            }
            (row.representative.into(), notes)
        })
        .collect();
    Ok(listing(ctx, items))
}

fn verify(ctx: &Ctx, family: &str, opts: DoubleOptions) -> Result<Output, Failure> {
    let f = ctx.family(family)?;
    let checks = verify_family(&f, opts)?;
    let failed = checks.iter().any(|c| !c.passed);
    let body = match ctx.format {
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(
                    s,
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            s
        }
        Format::Json => {
            let doc = checks
                .iter()
                .fold(DiagramDocument::of(&affine_of(&f)?.into()), |d, c| {
                    let v = format!("{}: {}", if c.passed { "pass" } else { "fail" }, c.detail);
                    d.annotate(c.name, v)
                });
            documents_to_json(&doc)
        }
    };
    Ok(Output {
        body,
        code: if failed { EXIT_VERIFY } else { EXIT_OK },
    })
}

fn render(ctx: &Ctx, input: &PathBuf, to: Target) -> Result<Output, Failure> {
    let text = std::fs::read_to_string(input).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("cannot read {}: {e}", input.display()),
    })?;
    let multiple = text.trim_start().starts_with('[');
    let xs = from_json_many(&text)?;
    let body = match to {
        Target::Json if multiple => {
            documents_to_json(&xs.iter().map(DiagramDocument::of).collect::<Vec<_>>())
        }
        Target::Json => xs.iter().map(to_json).collect(),
        Target::Text => xs
            .iter()
            .map(|x| ctx.text(x))
            .collect::<Vec<_>>()
            .join("\n"),
        Target::Dot => xs.iter().map(to_dot).collect::<Vec<_>>().join("\n"),
        Target::Tikz => xs.iter().map(to_tikz).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output::ok(body))
}
