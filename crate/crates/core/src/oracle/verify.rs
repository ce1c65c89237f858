//! The full battery of independent checks for one family instance.

use std::collections::BTreeSet;

use crate::catalog::{build_simple_system, full_root_set, lowest_root};
use crate::double::{
    black_mark_sum_check, double_classes, enumerate_almost_double, enumerate_double, DoubleOptions,
    ParityScope,
};
use crate::dynkin::{affine_of, compute_marks, diagram_of};
use crate::error::Result;
use crate::family::FamilyId;
use crate::render::{from_json, to_json, DiagramObject};
use crate::roots::Vector;
use crate::vogan::{enumerate_vogan, equivalence_classes, CircleMode};

use super::{check_kernel, painting_bound, realize_double};

/// Largest `gl(m|n)` size (`m + n`) on which double diagrams are realized.
pub const REALIZE_MAX_DIM: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, failures: Vec<String>, checked: usize) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} checked")
        } else {
            format!(
                "{} of {checked} failed; first: {}",
                failures.len(),
                failures[0]
            )
        };
        CheckResult {
            name,
            passed,
            detail,
        }
    }
}

fn round_trips(x: DiagramObject) -> Option<String> {
    let text = to_json(&x);
    match from_json(&text) {
        Ok(y) if y == x && to_json(&y) == text => None,
        Ok(_) => Some(format!(
            "{} {} changed on round trip",
            x.diagram().family,
            x.kind_name()
        )),
        Err(e) => Some(e.to_string()),
    }
}

/// The painting bound is only claimed for the classical families and `D(2,1;alpha)`.
pub fn painting_bound_applies(family: &FamilyId) -> bool {
    !matches!(family, FamilyId::F4 | FamilyId::G3)
}

/// Runs every check; `Err` only when the family itself cannot be built.
pub fn verify_family(family: &FamilyId, opts: DoubleOptions) -> Result<Vec<CheckResult>> {
    let system = build_simple_system(family)?;
    let finite = diagram_of(&system);
    let ad = affine_of(family)?;
    let mut out = Vec::new();

    let (even, odd) = full_root_set(family)?;
    let is_root = |v: &Vector| even.iter().chain(&odd).any(|r| &r.vector == v);
    let low = lowest_root(family)?;
    let mut bad = Vec::new();
    if !is_root(&low.vector) {
        bad.push(format!("lowest root {low} is not a root"));
    }
    for a in &system.simple_roots {
        let below = &low.vector - &a.vector;
        if is_root(&below) {
            bad.push(format!("{low} minus {a} is still a root"));
        }
    }
    out.push(CheckResult::new("lowest root", bad, 1));

    let mut bad = Vec::new();
    match compute_marks(&ad) {
        Ok(m) if m == ad.marks => {}
        Ok(m) => bad.push(format!("recomputed marks {m:?} differ from {:?}", ad.marks)),
        Err(e) => bad.push(e.to_string()),
    }
    if !check_kernel(&ad) {
        bad.push(format!(
            "marks {:?} fail the root-set kernel check",
            ad.marks
        ));
    }
    out.push(CheckResult::new("marks", bad, 1));

    let vogans = enumerate_vogan(&finite);
    let classes = equivalence_classes(&vogans, CircleMode::Distinguish);
    let mut bad = Vec::new();
    let mut covered = BTreeSet::new();
    for c in &classes {
        covered.extend(c.members.iter().copied());
        if let Err(e) = c.representative.validate() {
            bad.push(e.to_string());
        }
    }
    if covered.len() != vogans.len() {
        bad.push("classes do not partition the enumeration".into());
    }
    out.push(CheckResult::new("vogan classes", bad, classes.len()));

    if painting_bound_applies(family) {
        let bad = classes
            .iter()
            .filter(|c| painting_bound(&c.representative, &ad).is_none())
            .map(|c| {
                format!(
                    "no short painting for involution {} painted {:?}",
                    c.representative.involution, c.representative.painted
                )
            })
            .collect();
        out.push(CheckResult::new("painting bound", bad, classes.len()));
    }

    let almost = enumerate_almost_double(&ad);
    let doubles = enumerate_double(&ad, opts);
    let mut bad = Vec::new();
    let enforced = opts.scope == ParityScope::AllFamilies
        || matches!(
            family,
            FamilyId::A { .. } | FamilyId::B { .. } | FamilyId::BZero { .. }
        );
    let recount: Vec<_> = almost
        .iter()
        .filter(|x| {
            !enforced
                || (opts.r * x.black.iter().map(|&v| ad.marks[v]).sum::<u32>()).is_multiple_of(2)
        })
        .cloned()
        .collect();
    if recount != doubles {
        bad.push(format!(
            "{} doubles but {} in the recount",
            doubles.len(),
            recount.len()
        ));
    }
    for x in &almost {
        if let Err(e) = x.validate() {
            bad.push(e.to_string());
        }
    }
    out.push(CheckResult::new("double filter", bad, almost.len()));

    let dclasses = double_classes(&doubles);
    let bad = dclasses
        .iter()
        .filter(|c| black_mark_sum_check(&c.representative) == Ok(false))
        .map(|c| {
            format!(
                "black {:?} marks sum to {}",
                c.representative.black,
                c.representative.black_mark_sum()
            )
        })
        .collect();
    out.push(CheckResult::new("two-black mark sum", bad, dclasses.len()));

    let mut objects: Vec<DiagramObject> = vec![finite.clone().into(), ad.clone().into()];
    objects.extend(classes.iter().map(|c| c.representative.clone().into()));
    objects.extend(dclasses.iter().map(|c| c.representative.clone().into()));
    let n = objects.len();
    let bad = objects.into_iter().filter_map(round_trips).collect();
    out.push(CheckResult::new("json round trip", bad, n));

    if let FamilyId::A { m, n } = *family {
        if m + n + 2 <= REALIZE_MAX_DIM {
            let mut bad = Vec::new();
            for c in &dclasses {
                match realize_double(&c.representative) {
                    Ok(Some(_)) => {}
                    Ok(None) => bad.push(format!(
                        "black {:?} has no matrix realization",
                        c.representative.black
                    )),
                    Err(e) => bad.push(e.to_string()),
                }
            }
            out.push(CheckResult::new("matrix realization", bad, dclasses.len()));
        }
    }
    Ok(out)
}
