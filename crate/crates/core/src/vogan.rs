//! Vogan superdiagrams on finite Dynkin diagrams.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use crate::dynkin::{automorphisms, involutions, DiagramMap, DynkinDiagram, VertexKind};
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::labels::UNLABELED;
use crate::rational::is_odd_integer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoganSuperdiagram {
    pub diagram: Arc<DynkinDiagram>,
    pub involution: DiagramMap,
    /// Fixed white vertices.
    pub painted: BTreeSet<usize>,
    /// Fixed odd vertices.
    pub circled: BTreeSet<usize>,
}

/// Whether circlings take part in class comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CircleMode {
    #[default]
    Distinguish,
    Ignore,
}

/// Orbit element; the derived order is the canonical-representative order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct State {
    painted_count: usize,
    involution: Vec<usize>,
    painted: Vec<usize>,
    circled: Vec<usize>,
}

impl VoganSuperdiagram {
    pub fn new(
        diagram: Arc<DynkinDiagram>,
        involution: DiagramMap,
        painted: BTreeSet<usize>,
        circled: BTreeSet<usize>,
    ) -> Result<Self> {
        let v = VoganSuperdiagram {
            diagram,
            involution,
            painted,
            circled,
        };
        v.validate()?;
        Ok(v)
    }

    pub fn plain(diagram: Arc<DynkinDiagram>) -> Self {
        let n = diagram.len();
        VoganSuperdiagram {
            diagram,
            involution: DiagramMap::identity(n),
            painted: BTreeSet::new(),
            circled: BTreeSet::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = &self.diagram;
        let inv = &self.involution;
        if inv.perm.len() != d.len()
            || !automorphisms(d.as_ref()).contains(inv)
            || !inv.is_involution()
        {
            return Err(Error::Structural(format!(
                "{inv} is not a diagram involution"
            )));
        }
        for &v in &self.painted {
            if v >= d.len() || !inv.fixes(v) || d.kind(v) != VertexKind::White {
                return Err(Error::Structural(format!("vertex {v} cannot be painted")));
            }
        }
        for &v in &self.circled {
            if v >= d.len() || !inv.fixes(v) || d.kind(v).is_even() {
                return Err(Error::Structural(format!("vertex {v} cannot be circled")));
            }
        }
        Ok(())
    }

    fn state(&self, mode: CircleMode) -> State {
        State {
            painted_count: self.painted.len(),
            involution: self.involution.perm.clone(),
            painted: self.painted.iter().copied().collect(),
            circled: match mode {
                CircleMode::Distinguish => self.circled.iter().copied().collect(),
                CircleMode::Ignore => Vec::new(),
            },
        }
    }

    fn with_state(&self, s: &State) -> Self {
        VoganSuperdiagram {
            diagram: self.diagram.clone(),
            involution: DiagramMap {
                perm: s.involution.clone(),
            },
            painted: s.painted.iter().copied().collect(),
            circled: s.circled.iter().copied().collect(),
        }
    }

    /// Flip at painted vertex `w`: every fixed white neighbour `u` with odd
    /// `cartan[w][u]` changes painting. `None` if `w` is not painted.
    pub fn flip(&self, w: usize) -> Option<Self> {
        if !self.painted.contains(&w) {
            return None;
        }
        let d = &self.diagram;
        let mut painted = self.painted.clone();
        for u in d.neighbours(w) {
            if d.kind(u) == VertexKind::White
                && self.involution.fixes(u)
                && is_odd_integer(d.cartan[w][u])
                && !painted.remove(&u)
            {
                painted.insert(u);
            }
        }
        Some(VoganSuperdiagram {
            painted,
            ..self.clone()
        })
    }

    pub fn conjugate(&self, g: &DiagramMap) -> Self {
        VoganSuperdiagram {
            diagram: self.diagram.clone(),
            involution: self.involution.conjugate_by(g),
            painted: self.painted.iter().map(|&v| g.apply(v)).collect(),
            circled: self.circled.iter().map(|&v| g.apply(v)).collect(),
        }
    }
}

/// Every (involution, painting, circling) triple, involutions in sorted order,
/// then paintings and circlings by bitmask.
pub fn enumerate_vogan(d: &DynkinDiagram) -> Vec<VoganSuperdiagram> {
    let diagram = Arc::new(d.clone());
    let mut out = Vec::new();
    for inv in involutions(d) {
        let fixed = inv.fixed_points();
        let whites: Vec<usize> = fixed
            .iter()
            .copied()
            .filter(|&v| d.kind(v).is_even())
            .collect();
        let odds: Vec<usize> = fixed
            .iter()
            .copied()
            .filter(|&v| !d.kind(v).is_even())
            .collect();
        for pm in 0u32..(1 << whites.len()) {
            for cm in 0u32..(1 << odds.len()) {
                out.push(VoganSuperdiagram {
                    diagram: diagram.clone(),
                    involution: inv.clone(),
                    painted: subset(&whites, pm),
                    circled: subset(&odds, cm),
                });
            }
        }
    }
    out
}

pub(crate) fn subset(items: &[usize], mask: u32) -> BTreeSet<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

fn orbit_states(v: &VoganSuperdiagram, mode: CircleMode) -> BTreeSet<State> {
    let auts = automorphisms(v.diagram.as_ref());
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let start = match mode {
        CircleMode::Distinguish => v.clone(),
        CircleMode::Ignore => VoganSuperdiagram {
            circled: BTreeSet::new(),
            ..v.clone()
        },
    };
    seen.insert(start.state(mode));
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        let mut next: Vec<VoganSuperdiagram> =
            x.painted.iter().filter_map(|&w| x.flip(w)).collect();
        next.extend(auts.iter().map(|g| x.conjugate(g)));
        for y in next {
            if seen.insert(y.state(mode)) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// All diagrams reachable by flips and automorphism conjugation.
pub fn orbit(v: &VoganSuperdiagram, mode: CircleMode) -> Vec<VoganSuperdiagram> {
    orbit_states(v, mode)
        .iter()
        .map(|s| v.with_state(s))
        .collect()
}

/// Least orbit element by (painted count, involution word, painted, circled).
pub fn canonicalize(v: &VoganSuperdiagram) -> VoganSuperdiagram {
    canonicalize_with(v, CircleMode::Distinguish)
}

pub fn canonicalize_with(v: &VoganSuperdiagram, mode: CircleMode) -> VoganSuperdiagram {
    let states = orbit_states(v, mode);
    v.with_state(states.iter().next().expect("orbit contains its start"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoganClass {
    pub representative: VoganSuperdiagram,
    /// Indices into the input list.
    pub members: Vec<usize>,
}

/// Partition by orbit; classes sorted by representative.
pub fn equivalence_classes(vs: &[VoganSuperdiagram], mode: CircleMode) -> Vec<VoganClass> {
    let mut by_rep: BTreeMap<State, (VoganSuperdiagram, Vec<usize>)> = BTreeMap::new();
    let mut known: BTreeMap<State, State> = BTreeMap::new();
    for (i, v) in vs.iter().enumerate() {
        let key = v.state(mode);
        let rep = match known.get(&key) {
            Some(r) => r.clone(),
            None => {
                let states = orbit_states(v, mode);
                let rep = states.iter().next().cloned().expect("nonempty orbit");
                for s in states {
                    known.insert(s, rep.clone());
                }
                rep
            }
        };
        by_rep
            .entry(rep.clone())
            .or_insert_with(|| (v.with_state(&rep), Vec::new()))
            .1
            .push(i);
    }
    by_rep
        .into_values()
        .map(|(representative, members)| VoganClass {
            representative,
            members,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFormLabel {
    pub display: String,
    pub family: FamilyId,
    pub parameters: Vec<(String, u32)>,
}

impl RealFormLabel {
    fn new(display: impl Into<String>, family: &FamilyId, parameters: &[(&str, u32)]) -> Self {
        RealFormLabel {
            display: display.into(),
            family: family.clone(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
        }
    }

    fn unlabeled(family: &FamilyId) -> Self {
        Self::new(UNLABELED, family, &[])
    }

    pub fn is_unlabeled(&self) -> bool {
        self.display == UNLABELED
    }
}

/// A-family table entry. `p` and `q` are 1-based positions of the painted
/// vertex in the first and second white chain (0 if unpainted).
pub fn a_family_label(m: u32, n: u32, trivial_involution: bool, p: u32, q: u32) -> String {
    if !trivial_involution {
        return format!("su*({}|{})", 2 * m, 2 * n);
    }
    let (mm, nn) = (m + 1, n + 1);
    if p == 0 && q == 0 {
        format!("su({mm}|{nn})-compact")
    } else {
        format!("su({p},{}|{q},{})", mm - p, nn - q)
    }
}

/// Table-driven label for a canonical representative; never guesses.
pub fn real_form_label(v: &VoganSuperdiagram) -> RealFormLabel {
    let d = &v.diagram;
    let fam = &d.family;
    let painted: Vec<usize> = v.painted.iter().copied().collect();
    let trivial = v.involution.is_identity();
    let count = painted.len() as u32;
    match *fam {
        FamilyId::A { m, n } if m != n => {
            if !v.circled.is_empty() || !trivial {
                return RealFormLabel::unlabeled(fam);
            }
            let eps: Vec<usize> = painted
                .iter()
                .copied()
                .filter(|&x| x < m as usize)
                .collect();
            let del: Vec<usize> = painted
                .iter()
                .copied()
                .filter(|&x| x > m as usize)
                .collect();
            if eps.len() > 1 || del.len() > 1 {
                return RealFormLabel::unlabeled(fam);
            }
            let p = eps.first().map_or(0, |&x| x as u32 + 1);
            let q = del.first().map_or(0, |&x| (x - m as usize) as u32);
            RealFormLabel::new(a_family_label(m, n, true, p, q), fam, &[("p", p), ("q", q)])
        }
        FamilyId::B { m, n } => {
            let first_eps = n as usize;
            if !v.circled.is_empty() || painted.iter().any(|&x| x < first_eps) || count > 1 {
                return RealFormLabel::unlabeled(fam);
            }
            let k = painted.first().map_or(0, |&x| (x - first_eps) as u32 + 1);
            let display = if k == 0 {
                format!("osp({},0|{})", 2 * m + 1, 2 * n)
            } else {
                format!("osp({},{}|{})", 2 * k, 2 * m + 1 - 2 * k, 2 * n)
            };
            RealFormLabel::new(display, fam, &[("k", k)])
        }
        FamilyId::BZero { n } if count == 0 && v.circled.is_empty() => {
            RealFormLabel::new(format!("osp(1,0|{})", 2 * n), fam, &[])
        }
        FamilyId::D { m, n } => {
            let first_eps = n as usize;
            let fork = [first_eps + m as usize - 2, first_eps + m as usize - 1];
            if !v.circled.is_empty()
                || count > 1
                || painted.iter().any(|&x| x < first_eps || fork.contains(&x))
            {
                return RealFormLabel::unlabeled(fam);
            }
            let k = painted.first().map_or(0, |&x| (x - first_eps) as u32 + 1);
            let swaps_fork = v.involution.apply(fork[0]) == fork[1];
            let display = match (trivial, swaps_fork, k) {
                (true, _, 0) => format!("osp({},0|{})", 2 * m, 2 * n),
                (true, _, k) => format!("osp({},{}|{})", 2 * k, 2 * m - 2 * k, 2 * n),
                (false, true, 0) => format!("osp(1,{}|{})", 2 * m - 1, 2 * n),
                (false, true, k) => format!("osp({},{}|{})", 2 * k + 1, 2 * m - 2 * k - 1, 2 * n),
                _ => return RealFormLabel::unlabeled(fam),
            };
            RealFormLabel::new(display, fam, &[("k", k)])
        }
        FamilyId::C { n } => {
            let tail = n as usize - 1;
            if trivial && v.circled.is_empty() && painted == [tail] {
                RealFormLabel::new(format!("osp(2|{})", 2 * (n - 1)), fam, &[])
            } else {
                RealFormLabel::unlabeled(fam)
            }
        }
        FamilyId::D21 { .. } => RealFormLabel::new("D(α)", fam, &[("painted", count)]),
        FamilyId::F4 => RealFormLabel::new("F(4)", fam, &[("painted", count)]),
        FamilyId::G3 => RealFormLabel::new("G(3)", fam, &[("painted", count)]),
        _ => RealFormLabel::unlabeled(fam),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_simple_system;
    use crate::dynkin::diagram_of;
    use crate::rational::Q;

    fn fin(f: FamilyId) -> DynkinDiagram {
        diagram_of(&build_simple_system(&f).unwrap())
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn osp_1_2_has_two_diagrams() {
        let vs = enumerate_vogan(&fin(FamilyId::b(0, 1).unwrap()));
        assert_eq!(vs.len(), 2);
        assert!(vs.iter().all(|v| v.painted.is_empty()));
    }

    #[test]
    fn sl_2_1_product_count() {
        // one white, one grey, identity only: 2 paintings x 2 circlings
        assert_eq!(enumerate_vogan(&fin(FamilyId::a(1, 0).unwrap())).len(), 4);
    }

    #[test]
    fn d21_at_one_has_swapped_arms() {
        let vs = enumerate_vogan(&fin(FamilyId::d21(Q::from(1)).unwrap()));
        let swapped: Vec<_> = vs.iter().filter(|v| !v.involution.is_identity()).collect();
        assert!(!swapped.is_empty());
        assert!(swapped
            .iter()
            .all(|v| v.painted.iter().all(|&p| v.involution.fixes(p))));
    }

    #[test]
    fn three_painted_in_a_3_1_reduce() {
        let d = Arc::new(fin(FamilyId::a(3, 1).unwrap()));
        let v = VoganSuperdiagram::new(
            d.clone(),
            DiagramMap::identity(d.len()),
            set(&[0, 1, 2]),
            set(&[]),
        )
        .unwrap();
        let c = canonicalize(&v);
        assert!(c.painted.len() <= 2);
        assert_eq!(canonicalize(&c), c);
        assert!(orbit(&v, CircleMode::Distinguish).contains(&c));
    }

    #[test]
    fn trivial_inputs_are_fixed() {
        let d = Arc::new(fin(FamilyId::b(2, 1).unwrap()));
        let plain = VoganSuperdiagram::plain(d.clone());
        assert_eq!(canonicalize(&plain), plain);
    }

    #[test]
    fn flips_never_touch_odd_vertices() {
        let d = Arc::new(fin(FamilyId::b(2, 2).unwrap()));
        for v in enumerate_vogan(&d) {
            for &w in &v.painted {
                let f = v.flip(w).unwrap();
                assert!(f.painted.iter().all(|&x| d.kind(x) == VertexKind::White));
                assert_eq!(f.circled, v.circled);
            }
        }
    }

    #[test]
    fn invalid_painting_rejected() {
        let d = Arc::new(fin(FamilyId::a(1, 0).unwrap()));
        let err = VoganSuperdiagram::new(d.clone(), DiagramMap::identity(2), set(&[1]), set(&[]));
        assert!(err.is_err());
        let err = VoganSuperdiagram::new(d, DiagramMap::identity(2), set(&[]), set(&[0]));
        assert!(err.is_err());
    }

    #[test]
    fn labels() {
        let d = Arc::new(fin(FamilyId::a(2, 1).unwrap()));
        let plain = VoganSuperdiagram::plain(d.clone());
        assert_eq!(real_form_label(&plain).display, "su(3|2)-compact");
        let v = VoganSuperdiagram::new(d, DiagramMap::identity(4), set(&[0, 3]), set(&[])).unwrap();
        assert_eq!(real_form_label(&v).display, "su(1,2|1,1)");

        let b = Arc::new(fin(FamilyId::b(2, 1).unwrap()));
        let v = VoganSuperdiagram::new(b.clone(), DiagramMap::identity(3), set(&[1]), set(&[]))
            .unwrap();
        assert_eq!(real_form_label(&v).display, "osp(2,3|2)");
        assert_eq!(
            real_form_label(&VoganSuperdiagram::plain(b)).display,
            "osp(5,0|2)"
        );

        assert_eq!(a_family_label(2, 1, false, 0, 0), "su*(4|2)");

        let sq = Arc::new(fin(FamilyId::a_permissive(1, 1)));
        assert!(real_form_label(&VoganSuperdiagram::plain(sq)).is_unlabeled());
    }

    #[test]
    fn classes_partition_input() {
        let vs = enumerate_vogan(&fin(FamilyId::a(2, 1).unwrap()));
        let classes = equivalence_classes(&vs, CircleMode::Distinguish);
        let mut all: Vec<usize> = classes.iter().flat_map(|c| c.members.clone()).collect();
        all.sort();
        assert_eq!(all, (0..vs.len()).collect::<Vec<_>>());
        let ignored = equivalence_classes(&vs, CircleMode::Ignore);
        assert!(ignored.len() <= classes.len());
    }
}
