//! Finite and affine Dynkin diagrams, marks, and diagram automorphisms.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::catalog::{self, affine_position, AffinePosition, SimpleSystem};
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::linalg;
use crate::rational::Q;
use crate::roots::{BilinearForm, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    White,
    Grey,
    OddNonIsotropic,
}

impl VertexKind {
    pub fn of(root: &Root) -> VertexKind {
        match (root.is_odd(), root.isotropic) {
            (false, _) => VertexKind::White,
            (true, true) => VertexKind::Grey,
            (true, false) => VertexKind::OddNonIsotropic,
        }
    }

    pub fn is_even(self) -> bool {
        self == VertexKind::White
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::White => "white",
            VertexKind::Grey => "grey",
            VertexKind::OddNonIsotropic => "odd_nonisotropic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub kind: VertexKind,
    /// Only set on affine diagrams.
    pub mark: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    None,
    TowardFirst,
    TowardSecond,
}

/// `a < b` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub bond: u32,
    pub arrow: Arrow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub family: FamilyId,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub roots: Vec<Root>,
    pub form: BilinearForm,
    pub cartan: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDiagram {
    /// Includes the affine vertex, with marks filled in.
    pub diagram: DynkinDiagram,
    pub affine_vertex: usize,
    pub marks: Vec<u32>,
}

impl AsRef<DynkinDiagram> for DynkinDiagram {
    fn as_ref(&self) -> &DynkinDiagram {
        self
    }
}

impl AsRef<DynkinDiagram> for AffineDiagram {
    fn as_ref(&self) -> &DynkinDiagram {
        &self.diagram
    }
}

impl DynkinDiagram {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.vertices[v].kind
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&u| u != v && !self.cartan[v][u].is_zero())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl AffineDiagram {
    pub fn family(&self) -> &FamilyId {
        &self.diagram.family
    }

    pub fn len(&self) -> usize {
        self.diagram.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagram.is_empty()
    }

    /// Affine-diagram id of finite vertex `i`.
    pub fn from_finite(&self, i: usize) -> usize {
        if i >= self.affine_vertex {
            i + 1
        } else {
            i
        }
    }
}

fn bond_of(x: Q) -> u32 {
    x.abs().ceil().to_integer() as u32
}

fn build_edges(kinds: &[VertexKind], gram: &[Vec<Q>], cartan: &[Vec<Q>]) -> Vec<Edge> {
    let n = kinds.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if gram[a][b].is_zero() {
                continue;
            }
            let ga = kinds[a] == VertexKind::Grey;
            let gb = kinds[b] == VertexKind::Grey;
            let (bond, arrow) = match (ga, gb) {
                (true, true) => (bond_of(gram[a][b]), Arrow::None),
                (true, false) | (false, true) => {
                    let (w, toward_w) = if ga {
                        (b, Arrow::TowardSecond)
                    } else {
                        (a, Arrow::TowardFirst)
                    };
                    let g = if ga { a } else { b };
                    let x = cartan[w][g].abs();
                    if x > Q::from(1) {
                        (bond_of(x), toward_w)
                    } else {
                        (1, Arrow::None)
                    }
                }
                (false, false) => {
                    let xa = cartan[a][b].abs();
                    let xb = cartan[b][a].abs();
                    let arrow = if xa > xb {
                        Arrow::TowardFirst
                    } else if xb > xa {
                        Arrow::TowardSecond
                    } else {
                        Arrow::None
                    };
                    (bond_of(xa * xb), arrow)
                }
            };
            edges.push(Edge { a, b, bond, arrow });
        }
    }
    edges
}

fn assemble(family: &FamilyId, roots: Vec<Root>, form: BilinearForm) -> Result<DynkinDiagram> {
    let gram = catalog::gram_of(&roots, &form);
    let (cartan, _) = catalog::cartan_from_gram(&gram)?;
    let kinds: Vec<VertexKind> = roots.iter().map(VertexKind::of).collect();
    let edges = build_edges(&kinds, &gram, &cartan);
    let vertices = kinds
        .iter()
        .enumerate()
        .map(|(id, &kind)| Vertex {
            id,
            kind,
            mark: None,
        })
        .collect();
    Ok(DynkinDiagram {
        family: family.clone(),
        vertices,
        edges,
        roots,
        form,
        cartan,
    })
}

pub fn diagram_of(s: &SimpleSystem) -> DynkinDiagram {
    assemble(&s.family, s.simple_roots.clone(), s.form.clone())
        .expect("a built simple system has no disconnected grey vertex")
}

/// Appends the lowest root at the family's affine position and computes marks.
pub fn affine_extension(d: &DynkinDiagram, low: &Root) -> Result<AffineDiagram> {
    let expected = catalog::lowest_root(&d.family)?;
    if *low != expected {
        return Err(Error::Structural(format!(
            "{low} is not the lowest root of {} (expected {expected})",
            d.family
        )));
    }
    let mut roots = d.roots.clone();
    let affine_vertex = match affine_position(&d.family) {
        AffinePosition::First => {
            roots.insert(0, low.clone());
            0
        }
        AffinePosition::Last => {
            roots.push(low.clone());
            roots.len() - 1
        }
    };
    let diagram = assemble(&d.family, roots, d.form.clone())?;
    let mut ad = AffineDiagram {
        diagram,
        affine_vertex,
        marks: Vec::new(),
    };
    let marks = compute_marks(&ad)?;
    for (v, &m) in ad.diagram.vertices.iter_mut().zip(&marks) {
        v.mark = Some(m);
    }
    ad.marks = marks;
    Ok(ad)
}

pub fn affine_of(family: &FamilyId) -> Result<AffineDiagram> {
    let s = catalog::build_simple_system(family)?;
    let d = diagram_of(&s);
    affine_extension(&d, &catalog::lowest_root(family)?)
}

/// Primitive positive integer solution of `sum a_i alpha_i = 0`.
pub fn compute_marks(ad: &AffineDiagram) -> Result<Vec<u32>> {
    let d = &ad.diagram;
    let cols: Vec<Vec<Q>> = d
        .roots
        .iter()
        .map(|r| d.form.dense(&r.vector))
        .collect::<Result<_>>()?;
    let dim = d.form.basis().len();
    let matrix: Vec<Vec<Q>> = (0..dim)
        .map(|row| cols.iter().map(|c| c[row]).collect())
        .collect();
    let ker = linalg::kernel(&matrix, cols.len());
    if ker.len() != 1 {
        return Err(Error::Degenerate(format!(
            "{}: kernel of the affine root matrix has dimension {}",
            d.family,
            ker.len()
        )));
    }
    let mut v = linalg::primitive_integer(&ker[0]);
    if v.iter().any(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    if v.iter().any(|&x| x <= 0) {
        return Err(Error::Degenerate(format!(
            "{}: marks {v:?} are not all positive",
            d.family
        )));
    }
    Ok(v.into_iter().map(|x| x as u32).collect())
}

/// A permutation of vertex ids; `perm[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramMap {
    pub perm: Vec<usize>,
}

impl DiagramMap {
    pub fn identity(n: usize) -> Self {
        DiagramMap {
            perm: (0..n).collect(),
        }
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for (k, &v) in c.iter().enumerate() {
                if v >= n || seen[v] {
                    return Err(Error::Structural(format!("bad cycle entry {v}")));
                }
                seen[v] = true;
                perm[v] = c[(k + 1) % c.len()];
            }
        }
        Ok(DiagramMap { perm })
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &DiagramMap) -> DiagramMap {
        DiagramMap {
            perm: other.perm.iter().map(|&v| self.perm[v]).collect(),
        }
    }

    pub fn inverse(&self) -> DiagramMap {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        DiagramMap { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.perm[v] == v
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.perm.len()).filter(|&v| self.fixes(v)).collect()
    }

    /// `g self g^-1`.
    pub fn conjugate_by(&self, g: &DiagramMap) -> DiagramMap {
        g.compose(self).compose(&g.inverse())
    }

    /// Nontrivial cycles in increasing order of their least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.perm.len()];
        let mut out = Vec::new();
        for s in 0..self.perm.len() {
            if seen[s] || self.fixes(s) {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut v = self.perm[s];
            while v != s {
                seen[v] = true;
                c.push(v);
                v = self.perm[v];
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for DiagramMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

fn rows_match(d: &DynkinDiagram, p: &[usize], i: usize, upto: usize) -> bool {
    let c = &d.cartan;
    let pi = p[i];
    if d.vertices[i].kind == VertexKind::Grey {
        // Grey rows are only defined up to a nonzero scalar.
        let mut ratio: Option<Q> = None;
        for j in 0..upto {
            let (x, y) = (c[i][j], c[pi][p[j]]);
            if x.is_zero() != y.is_zero() {
                return false;
            }
            if x.is_zero() {
                continue;
            }
            let r = y / x;
            match ratio {
                None => ratio = Some(r),
                Some(r0) if r0 != r => return false,
                _ => {}
            }
        }
        true
    } else {
        (0..upto).all(|j| c[i][j] == c[pi][p[j]])
    }
}

fn search(d: &DynkinDiagram, p: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<DiagramMap>) {
    let k = p.len();
    let n = d.len();
    if k == n {
        if (0..n).all(|i| rows_match(d, p, i, n)) {
            out.push(DiagramMap { perm: p.clone() });
        }
        return;
    }
    for t in 0..n {
        if used[t]
            || d.vertices[t].kind != d.vertices[k].kind
            || d.vertices[t].mark != d.vertices[k].mark
        {
            continue;
        }
        p.push(t);
        let ok = (0..=k).all(|i| {
            // zero pattern on the assigned block, plus exact non-grey entries
            (0..=k).all(|j| d.cartan[i][j].is_zero() == d.cartan[p[i]][p[j]].is_zero())
                && (d.vertices[i].kind == VertexKind::Grey || rows_match(d, p, i, k + 1))
        });
        if ok {
            used[t] = true;
            search(d, p, used, out);
            used[t] = false;
        }
        p.pop();
    }
}

/// All kind-, mark- and Cartan-preserving vertex permutations, sorted.
pub fn automorphisms<D: AsRef<DynkinDiagram>>(d: &D) -> Vec<DiagramMap> {
    let d = d.as_ref();
    let mut out = Vec::new();
    let mut used = vec![false; d.len()];
    search(d, &mut Vec::with_capacity(d.len()), &mut used, &mut out);
    out.sort();
    out
}

pub fn involutions<D: AsRef<DynkinDiagram>>(d: &D) -> Vec<DiagramMap> {
    automorphisms(d)
        .into_iter()
        .filter(DiagramMap::is_involution)
        .collect()
}
