//! Almost-double and double Vogan superdiagrams on affine diagrams.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::dynkin::{affine_of, automorphisms, involutions, AffineDiagram, DiagramMap, VertexKind};
use crate::error::{Error, Result};
use crate::family::{FamilyId, FamilyTag};
use crate::labels::{self, split_caption};
use crate::vogan::subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleVoganSuperdiagram {
    pub affine: Arc<AffineDiagram>,
    pub involution: DiagramMap,
    /// Even vertices of mark 1 or 2, at most two, stable under the involution.
    pub black: BTreeSet<usize>,
    /// Fixed vertices that are black or odd.
    pub circled: BTreeSet<usize>,
    /// Fixed white vertices that are not black.
    pub white_painting: BTreeSet<usize>,
}

/// Families on which the parity filter is enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParityScope {
    #[default]
    AllFamilies,
    /// Only `A`, `B` and `B(0,n)`; every other family passes.
    TypeAB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleOptions {
    /// Multiplier in the parity test `r * sum(black marks)`; 1 or 2.
    pub r: u32,
    pub scope: ParityScope,
}

impl Default for DoubleOptions {
    fn default() -> Self {
        DoubleOptions {
            r: 1,
            scope: ParityScope::AllFamilies,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotApplicable;

impl fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not applicable")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlackAction {
    Preserves,
    Interchanges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HermitianTypeInfo {
    pub hermitian: bool,
    pub black_action: BlackAction,
    pub sign_on_z0: i8,
    pub sign_on_z1: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSuperpair {
    pub caption: &'static str,
    pub numerator: &'static str,
    pub denominator: &'static str,
}

impl SymmetricSuperpair {
    fn of(caption: &'static str) -> Self {
        let (numerator, denominator) = split_caption(caption);
        SymmetricSuperpair {
            caption,
            numerator,
            denominator,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Classified(SymmetricSuperpair),
    Unclassified,
}

impl Classification {
    pub fn caption(&self) -> &'static str {
        match self {
            Classification::Classified(p) => p.caption,
            Classification::Unclassified => labels::UNCLASSIFIED,
        }
    }

    pub fn is_classified(&self) -> bool {
        matches!(self, Classification::Classified(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    involution: Vec<usize>,
    black: Vec<usize>,
    circled: Vec<usize>,
    white_painting: Vec<usize>,
}

impl DoubleVoganSuperdiagram {
    pub fn new(
        affine: Arc<AffineDiagram>,
        involution: DiagramMap,
        black: BTreeSet<usize>,
        circled: BTreeSet<usize>,
        white_painting: BTreeSet<usize>,
    ) -> Result<Self> {
        let x = DoubleVoganSuperdiagram {
            affine,
            involution,
            black,
            circled,
            white_painting,
        };
        x.validate()?;
        Ok(x)
    }

    pub fn plain(affine: Arc<AffineDiagram>) -> Self {
        let n = affine.len();
        DoubleVoganSuperdiagram {
            affine,
            involution: DiagramMap::identity(n),
            black: BTreeSet::new(),
            circled: BTreeSet::new(),
            white_painting: BTreeSet::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ad = &self.affine;
        let d = &ad.diagram;
        let inv = &self.involution;
        let bad = |what: String| Err(Error::Structural(what));
        if inv.perm.len() != ad.len()
            || !inv.is_involution()
            || !automorphisms(ad.as_ref()).contains(inv)
        {
            return bad(format!("{inv} is not an affine diagram involution"));
        }
        if self.black.len() > 2 {
            return bad("more than two black vertices".into());
        }
        for &b in &self.black {
            if b >= ad.len() || d.kind(b) != VertexKind::White || !(1..=2).contains(&ad.marks[b]) {
                return bad(format!("vertex {b} cannot be black"));
            }
            if !self.black.contains(&inv.apply(b)) {
                return bad("involution does not preserve the black set".into());
            }
        }
        for &c in &self.circled {
            if c >= ad.len() || !inv.fixes(c) || (d.kind(c).is_even() && !self.black.contains(&c)) {
                return bad(format!("vertex {c} cannot be circled"));
            }
        }
        for &w in &self.white_painting {
            if w >= ad.len() || !inv.fixes(w) || !d.kind(w).is_even() || self.black.contains(&w) {
                return bad(format!("vertex {w} cannot carry a white painting"));
            }
        }
        Ok(())
    }

    pub fn black_mark_sum(&self) -> u32 {
        self.black.iter().map(|&b| self.affine.marks[b]).sum()
    }

    /// Fixed vertices whose sign bit is set: circled ones and painted whites.
    pub fn sigma_marks(&self) -> BTreeSet<usize> {
        self.circled.union(&self.white_painting).copied().collect()
    }

    pub fn is_hermitian(&self) -> bool {
        self.black.len() == 2 && self.black.iter().all(|&b| self.affine.marks[b] == 1)
    }

    pub fn conjugate(&self, g: &DiagramMap) -> Self {
        let map = |s: &BTreeSet<usize>| s.iter().map(|&v| g.apply(v)).collect();
        DoubleVoganSuperdiagram {
            affine: self.affine.clone(),
            involution: self.involution.conjugate_by(g),
            black: map(&self.black),
            circled: map(&self.circled),
            white_painting: map(&self.white_painting),
        }
    }

    fn key(&self) -> Key {
        Key {
            involution: self.involution.perm.clone(),
            black: self.black.iter().copied().collect(),
            circled: self.circled.iter().copied().collect(),
            white_painting: self.white_painting.iter().copied().collect(),
        }
    }
}

fn black_choices(ad: &AffineDiagram, inv: &DiagramMap) -> Vec<BTreeSet<usize>> {
    let eligible: Vec<usize> = (0..ad.len())
        .filter(|&v| ad.diagram.kind(v) == VertexKind::White && (1..=2).contains(&ad.marks[v]))
        .collect();
    let mut out = vec![BTreeSet::new()];
    for &a in &eligible {
        if inv.fixes(a) {
            out.push(BTreeSet::from([a]));
        }
    }
    for (i, &a) in eligible.iter().enumerate() {
        for &b in &eligible[i + 1..] {
            let (ia, ib) = (inv.apply(a), inv.apply(b));
            if (ia == a && ib == b) || (ia == b && ib == a) {
                out.push(BTreeSet::from([a, b]));
            }
        }
    }
    out
}

/// Every structure satisfying the type invariants, in a fixed order:
/// involution, black set (by size then ids), circling mask, painting mask.
pub fn enumerate_almost_double(ad: &AffineDiagram) -> Vec<DoubleVoganSuperdiagram> {
    let shared = Arc::new(ad.clone());
    let d = &ad.diagram;
    let mut out = Vec::new();
    for inv in involutions(ad) {
        let fixed = inv.fixed_points();
        for black in black_choices(ad, &inv) {
            let circ: Vec<usize> = fixed
                .iter()
                .copied()
                .filter(|v| black.contains(v) || !d.kind(*v).is_even())
                .collect();
            let paint: Vec<usize> = fixed
                .iter()
                .copied()
                .filter(|v| d.kind(*v).is_even() && !black.contains(v))
                .collect();
            for cm in 0u32..(1 << circ.len()) {
                for pm in 0u32..(1 << paint.len()) {
                    out.push(DoubleVoganSuperdiagram {
                        affine: shared.clone(),
                        involution: inv.clone(),
                        black: black.clone(),
                        circled: subset(&circ, cm),
                        white_painting: subset(&paint, pm),
                    });
                }
            }
        }
    }
    out
}

pub fn parity_applies(family: &FamilyId, scope: ParityScope) -> bool {
    match scope {
        ParityScope::AllFamilies => true,
        ParityScope::TypeAB => {
            matches!(family.tag(), FamilyTag::A | FamilyTag::B | FamilyTag::BZero)
        }
    }
}

pub fn is_double(x: &DoubleVoganSuperdiagram, opts: DoubleOptions) -> bool {
    !parity_applies(x.affine.family(), opts.scope)
        || (opts.r * x.black_mark_sum()).is_multiple_of(2)
}

pub fn enumerate_double(ad: &AffineDiagram, opts: DoubleOptions) -> Vec<DoubleVoganSuperdiagram> {
    enumerate_almost_double(ad)
        .into_iter()
        .filter(|x| is_double(x, opts))
        .collect()
}

/// For non-Hermitian inputs with two black vertices: `a_g + a_d == 4`.
pub fn black_mark_sum_check(x: &DoubleVoganSuperdiagram) -> Result<bool, NotApplicable> {
    if x.black.len() != 2 || x.is_hermitian() {
        return Err(NotApplicable);
    }
    Ok(x.black_mark_sum() == 4)
}

pub fn hermitian_split(x: &DoubleVoganSuperdiagram) -> Result<HermitianTypeInfo, NotApplicable> {
    if !x.is_hermitian() {
        return Err(NotApplicable);
    }
    let b = *x.black.iter().next().expect("two black vertices");
    let (black_action, sign_on_z1) = if x.involution.fixes(b) {
        (BlackAction::Preserves, 1)
    } else {
        (BlackAction::Interchanges, -1)
    };
    Ok(HermitianTypeInfo {
        hermitian: true,
        black_action,
        sign_on_z0: 1,
        sign_on_z1,
    })
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

/// Caption lookup keyed on family, involution, black set and sign bits.
pub fn classify(x: &DoubleVoganSuperdiagram) -> Classification {
    match caption_of(x) {
        Some(c) => Classification::Classified(SymmetricSuperpair::of(c)),
        None => Classification::Unclassified,
    }
}

fn caption_of(x: &DoubleVoganSuperdiagram) -> Option<&'static str> {
    let ad = &x.affine;
    let inv = &x.involution;
    let identity = inv.is_identity();
    let sigma = x.sigma_marks();
    let black = &x.black;
    match *ad.family() {
        FamilyId::A { m, n } if m != n => {
            if identity {
                return None;
            }
            let (m, n) = (m as usize, n as usize);
            let mut mids = BTreeSet::new();
            if m % 2 == 1 {
                mids.insert(1 + (m - 1) / 2);
            }
            if n % 2 == 1 {
                mids.insert(m + 2 + (n - 1) / 2);
            }
            let swapped_pair = black.len() == 2 && black.iter().all(|&b| !inv.fixes(b));
            if swapped_pair && sigma.is_empty() {
                Some(labels::A_SL_R)
            } else if black.is_empty() {
                match sigma.len() {
                    0 => Some(labels::A_SU_STAR_O_STAR),
                    1 => Some(labels::A_SU_STAR_SP),
                    2 if sigma == mids => Some(labels::A_SU_OSP_STAR),
                    _ => None,
                }
            } else if mids.len() == 2 && *black == mids && x.white_painting.is_empty() {
                match x.circled.len() {
                    2 => Some(labels::A_SU_OSP),
                    1 => Some(labels::A_SU_SU_IR),
                    _ => Some(labels::A_SU_UPQ),
                }
            } else {
                None
            }
        }
        FamilyId::B { m, n } if identity => {
            let (m, n) = (m as usize, n as usize);
            let first_eps = n + 1;
            if sigma != set(&[first_eps]) {
                return None;
            }
            if *black == set(&[0]) {
                Some(labels::B_SP)
            } else if *black == set(&[0, n + m]) {
                Some(labels::B_SP_SO)
            } else {
                None
            }
        }
        FamilyId::C { n } if identity => {
            let tail = n as usize;
            if sigma != set(&[tail]) {
                return None;
            }
            if black.is_empty() {
                Some(labels::C_SP_R)
            } else if n >= 3 && *black == set(&[2]) {
                Some(labels::C_SP_RS)
            } else {
                None
            }
        }
        FamilyId::D { m, n } => {
            let (m, n) = (m as usize, n as usize);
            let fork = (n + m - 1, n + m);
            if identity && black.is_empty() && sigma.is_empty() {
                Some(labels::D_SP_SO_STAR)
            } else if inv.apply(fork.0) == fork.1
                && *black == set(&[0, n + m - 2])
                && sigma.is_empty()
            {
                Some(labels::D_SP_R_SO)
            } else {
                None
            }
        }
        FamilyId::D21 { .. } if sigma.is_empty() => {
            let arm_swap = inv.apply(0) == 2;
            match (
                identity,
                arm_swap,
                black.iter().copied().collect::<Vec<_>>().as_slice(),
            ) {
                (true, _, []) => Some(labels::D21_SL3),
                (true, _, [3]) => Some(labels::D21_SU_SU_SL),
                (false, true, []) => Some(labels::D21_SLC_SL),
                _ => None,
            }
        }
        FamilyId::F4 if identity && sigma.is_empty() => {
            match black.iter().copied().collect::<Vec<_>>().as_slice() {
                [2] => Some(labels::F4_SO16),
                [3] => Some(labels::F4_SO25),
                [0, 4] => Some(labels::F4_SO34),
                [0] => Some(labels::F4_SO7),
                _ => None,
            }
        }
        FamilyId::G3 if identity && sigma.is_empty() => {
            match black.iter().copied().collect::<Vec<_>>().as_slice() {
                [3] => Some(labels::G3_GC),
                [0] => Some(labels::G3_GS),
                _ => None,
            }
        }
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleClass {
    pub representative: DoubleVoganSuperdiagram,
    pub members: Vec<usize>,
}

/// Least element of the orbit under affine automorphism conjugation.
pub fn canonicalize_double(x: &DoubleVoganSuperdiagram) -> DoubleVoganSuperdiagram {
    automorphisms(x.affine.as_ref())
        .iter()
        .map(|g| x.conjugate(g))
        .min_by_key(DoubleVoganSuperdiagram::key)
        .expect("identity is an automorphism")
}

pub fn double_classes(xs: &[DoubleVoganSuperdiagram]) -> Vec<DoubleClass> {
    let mut by_rep: BTreeMap<Key, DoubleClass> = BTreeMap::new();
    for (i, x) in xs.iter().enumerate() {
        let rep = canonicalize_double(x);
        by_rep
            .entry(rep.key())
            .or_insert_with(|| DoubleClass {
                representative: rep,
                members: Vec::new(),
            })
            .members
            .push(i);
    }
    by_rep.into_values().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRow {
    pub representative: DoubleVoganSuperdiagram,
    pub class_size: usize,
    pub classification: Classification,
    pub hermitian: Option<HermitianTypeInfo>,
    pub mark_sum_check: Option<bool>,
}

/// One row per double class.
pub fn enumerate_pairs(family: &FamilyId, opts: DoubleOptions) -> Result<Vec<PairRow>> {
    let ad = affine_of(family)?;
    Ok(pair_rows(&enumerate_double(&ad, opts)))
}

pub fn pair_rows(xs: &[DoubleVoganSuperdiagram]) -> Vec<PairRow> {
    double_classes(xs)
        .into_iter()
        .map(|c| {
            let r = c.representative;
            PairRow {
                class_size: c.members.len(),
                classification: classify(&r),
                hermitian: hermitian_split(&r).ok(),
                mark_sum_check: black_mark_sum_check(&r).ok(),
                representative: r,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Q;

    fn aff(f: FamilyId) -> Arc<AffineDiagram> {
        Arc::new(affine_of(&f).unwrap())
    }

    fn dv(
        ad: &Arc<AffineDiagram>,
        inv: DiagramMap,
        black: &[usize],
        circled: &[usize],
        wp: &[usize],
    ) -> DoubleVoganSuperdiagram {
        DoubleVoganSuperdiagram::new(ad.clone(), inv, set(black), set(circled), set(wp)).unwrap()
    }

    #[test]
    fn plain_is_always_present_and_double() {
        for f in FamilyId::sweep(2, &[Q::from(2)]) {
            let ad = aff(f);
            let all = enumerate_almost_double(&ad);
            let plain = DoubleVoganSuperdiagram::plain(ad);
            assert!(all.contains(&plain));
            assert!(is_double(&plain, DoubleOptions::default()));
        }
    }

    #[test]
    fn sl_2_1_counts() {
        let ad = aff(FamilyId::a(1, 0).unwrap());
        assert_eq!(enumerate_almost_double(&ad).len(), 20);
        let dbl = enumerate_double(&ad, DoubleOptions::default());
        assert_eq!(dbl.len(), 10);
        assert_eq!(double_classes(&dbl).len(), 8);
    }

    #[test]
    fn single_affine_black_in_b_is_not_double() {
        let ad = aff(FamilyId::b(1, 1).unwrap());
        let x = dv(&ad, DiagramMap::identity(ad.len()), &[0], &[], &[]);
        assert!(!is_double(&x, DoubleOptions::default()));
        assert!(is_double(
            &x,
            DoubleOptions {
                r: 2,
                ..Default::default()
            }
        ));
    }

    #[test]
    fn scoped_parity_passes_exceptional_families() {
        let ad = aff(FamilyId::G3);
        let x = dv(&ad, DiagramMap::identity(4), &[0], &[], &[]);
        assert!(!is_double(&x, DoubleOptions::default()));
        assert!(is_double(
            &x,
            DoubleOptions {
                r: 1,
                scope: ParityScope::TypeAB
            }
        ));
    }

    #[test]
    fn mark_sum_check_cases() {
        let ad = aff(FamilyId::b(2, 2).unwrap());
        let id = DiagramMap::identity(ad.len());
        assert_eq!(
            black_mark_sum_check(&dv(&ad, id.clone(), &[1, 3], &[], &[])),
            Ok(true)
        );
        assert_eq!(
            black_mark_sum_check(&dv(&ad, id.clone(), &[0, 3], &[], &[])),
            Ok(false)
        );
        assert_eq!(
            black_mark_sum_check(&dv(&ad, id, &[3], &[], &[])),
            Err(NotApplicable)
        );
    }

    #[test]
    fn hermitian_preserve_and_interchange() {
        let ad = aff(FamilyId::a(2, 1).unwrap());
        let auts = automorphisms(ad.as_ref());
        let r = auts.iter().find(|g| !g.is_identity()).unwrap().clone();
        let fixed = dv(&ad, DiagramMap::identity(ad.len()), &[1, 2], &[], &[]);
        let h = hermitian_split(&fixed).unwrap();
        assert_eq!(
            (h.black_action, h.sign_on_z0, h.sign_on_z1),
            (BlackAction::Preserves, 1, 1)
        );
        let swapped = dv(&ad, r.clone(), &[1, 2], &[], &[]);
        assert_eq!(r.apply(1), 2);
        let h = hermitian_split(&swapped).unwrap();
        assert_eq!(
            (h.black_action, h.sign_on_z0, h.sign_on_z1),
            (BlackAction::Interchanges, 1, -1)
        );
        assert_eq!(classify(&swapped).caption(), labels::A_SL_R);
    }

    #[test]
    fn invalid_structures_rejected() {
        let ad = aff(FamilyId::b(1, 1).unwrap());
        let id = DiagramMap::identity(ad.len());
        // grey vertex cannot be black
        assert!(DoubleVoganSuperdiagram::new(
            ad.clone(),
            id.clone(),
            set(&[1]),
            set(&[]),
            set(&[])
        )
        .is_err());
        // white painting and black overlap
        assert!(DoubleVoganSuperdiagram::new(ad, id, set(&[2]), set(&[]), set(&[2])).is_err());
    }

    #[test]
    fn exceptional_captions_present() {
        let captions = |f: FamilyId| -> Vec<&'static str> {
            enumerate_pairs(&f, DoubleOptions::default())
                .unwrap()
                .iter()
                .map(|r| r.classification.caption())
                .collect()
        };
        assert!(captions(FamilyId::G3).contains(&labels::G3_GC));
        assert!(captions(FamilyId::F4).contains(&labels::F4_SO34));
        assert!(captions(FamilyId::d21(Q::from(2)).unwrap()).contains(&labels::D21_SL3));
        assert!(captions(FamilyId::c(2).unwrap()).contains(&labels::C_SP_R));
        let g3 = captions(FamilyId::G3);
        assert!(!g3.contains(&labels::G3_GS));
    }
}
