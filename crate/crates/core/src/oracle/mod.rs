//! Independent checks: mark relations from the closed-form root sets, and a
//! `gl(m|n)` matrix model for involution pairs.

pub mod pairs;
pub mod supermatrix;
pub mod verify;

use num_integer::Integer;

use crate::catalog::full_root_set;
use crate::double::DoubleVoganSuperdiagram;
use crate::dynkin::AffineDiagram;
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::rational::Q;
use crate::roots::Vector;
use crate::vogan::{orbit, CircleMode, VoganSuperdiagram};

pub use pairs::{brute_involution_pairs, Fingerprint, InvolutionCandidate, PairCensus};
pub use supermatrix::{gl_model, SuperMatrix};
pub use verify::{verify_family, CheckResult};

/// True iff the stored marks are positive, primitive and annihilate the roots.
pub fn check_kernel(ad: &AffineDiagram) -> bool {
    check_marks(ad, &ad.marks)
}

/// Every vertex root must appear in the closed-form root set, and
/// `sum a_i alpha_i` must vanish exactly with `a` positive and primitive.
pub fn check_marks(ad: &AffineDiagram, marks: &[u32]) -> bool {
    let Ok((even, odd)) = full_root_set(ad.family()) else {
        return false;
    };
    let d = &ad.diagram;
    if marks.len() != d.len() || marks.contains(&0) {
        return false;
    }
    let mut sum = Vector::zero();
    for (root, &a) in d.roots.iter().zip(marks) {
        let pool = if root.is_odd() { &odd } else { &even };
        let Some(found) = pool.iter().find(|r| r.vector == root.vector) else {
            return false;
        };
        sum = &sum + &found.vector.scale(Q::from(a as i64));
    }
    let g = marks.iter().fold(0u32, |g, &a| g.gcd(&a));
    sum.is_zero() && g == 1
}

/// Largest painted count allowed in some orbit representative.
pub fn painting_limit(family: &FamilyId) -> usize {
    match family {
        FamilyId::D21 { .. } => 3,
        _ => 2,
    }
}

/// Looks through the move orbit of `v` for a representative with at most
/// [`painting_limit`] painted vertices, each of affine mark 1 or 2.
pub fn painting_bound(v: &VoganSuperdiagram, ad: &AffineDiagram) -> Option<VoganSuperdiagram> {
    let limit = painting_limit(ad.family());
    orbit(v, CircleMode::Distinguish).into_iter().find(|w| {
        w.painted.len() <= limit
            && w.painted
                .iter()
                .all(|&i| matches!(ad.marks[ad.from_finite(i)], 1 | 2))
    })
}

/// A commuting candidate pair realizing a double Vogan superdiagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub theta: usize,
    pub sigma: usize,
    pub fingerprint: Fingerprint,
}

/// Searches the `gl(m+1|n+1)` candidates for `theta` acting by `-1` exactly on
/// black root vectors and `sigma` permuting root vectors like the diagram
/// involution with the diagram's sign bits on fixed vertices.
pub fn realize_double(x: &DoubleVoganSuperdiagram) -> Result<Option<Realization>> {
    let FamilyId::A { m, n } = *x.affine.family() else {
        return Err(Error::Structural(
            "realization is only available for the A family".into(),
        ));
    };
    let (gm, gn) = (m as usize + 1, n as usize + 1);
    let basis = gl_model(gm, gn)?;
    let cands = pairs::candidates(gm, gn)?;
    let d = &x.affine.diagram;
    let idx: Vec<usize> = d
        .roots
        .iter()
        .map(|r| {
            basis
                .iter()
                .position(|b| b.root.as_ref() == Some(&r.vector))
                .ok_or_else(|| Error::Structural(format!("no root vector for {r}")))
        })
        .collect::<Result<_>>()?;
    let sigma_marks = x.sigma_marks();
    let inv = &x.involution;

    let mut thetas = Vec::new();
    let mut sigmas = Vec::new();
    for (c, cand) in cands.iter().enumerate() {
        let Some(action) = pairs::root_action(&cand.map, &basis, &idx) else {
            continue;
        };
        let is_theta = (0..d.len()).all(|v| {
            let (coef, l) = action[v];
            let want = if x.black.contains(&v) { -1 } else { 1 };
            l == idx[v] && pairs::sign_bit(coef) == Some(want)
        });
        let is_sigma = (0..d.len()).all(|v| {
            let (coef, l) = action[v];
            if l != idx[inv.apply(v)] {
                return false;
            }
            if !inv.fixes(v) {
                return true;
            }
            let want = if sigma_marks.contains(&v) { -1 } else { 1 };
            pairs::sign_bit(coef) == Some(want)
        });
        if is_theta {
            thetas.push(c);
        }
        if is_sigma {
            sigmas.push(c);
        }
    }
    for &t in &thetas {
        for &s in &sigmas {
            if pairs::commute(&cands[t].map, &cands[s].map) {
                return Ok(Some(Realization {
                    theta: t,
                    sigma: s,
                    fingerprint: pairs::fingerprint(gm, gn, &cands[t].map, &cands[s].map),
                }));
            }
        }
    }
    Ok(None)
}
