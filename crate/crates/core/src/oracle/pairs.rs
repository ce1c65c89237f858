//! Commuting involution pairs on `gl(m|n)`, counted up to a fixed conjugation group.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::supermatrix::{gl_model, gq, BasisElement, Gq, SuperMatrix};
use crate::error::{Error, Result};
use crate::linalg;

/// Linear endomorphism of `gl(m|n)` in the row-major `E_ij` basis;
/// column `k` is the image of the `k`-th basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap(pub Vec<Vec<Gq>>);

impl LinearMap {
    pub fn identity(dim: usize) -> Self {
        let mut a = vec![vec![Gq::zero(); dim]; dim];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = Gq::one();
        }
        LinearMap(a)
    }

    pub fn from_fn(m: usize, n: usize, f: impl Fn(&SuperMatrix) -> SuperMatrix) -> Self {
        let d = m + n;
        let dim = d * d;
        let mut a = vec![vec![Gq::zero(); dim]; dim];
        for k in 0..dim {
            let img = f(&SuperMatrix::unit(m, n, k / d, k % d)).flatten();
            for (r, x) in img.into_iter().enumerate() {
                a[r][k] = x;
            }
        }
        LinearMap(a)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let n = self.dim();
        let mut out = vec![vec![Gq::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = self.0[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += a * other.0[k][j];
                }
            }
        }
        LinearMap(out)
    }

    pub fn pow(&self, k: u32) -> LinearMap {
        (0..k).fold(LinearMap::identity(self.dim()), |acc, _| acc.compose(self))
    }

    pub fn is_identity_on(&self, idx: &[usize]) -> bool {
        idx.iter().all(|&k| {
            (0..self.dim()).all(|r| self.0[r][k] == if r == k { Gq::one() } else { Gq::zero() })
        })
    }

    pub fn apply(&self, m: usize, n: usize, x: &SuperMatrix) -> SuperMatrix {
        let v = x.flatten();
        let img: Vec<Gq> = self
            .0
            .iter()
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
        SuperMatrix::from_flat(m, n, &img)
    }

    /// Dimension of the fixed space restricted to the basis indices `idx`
    /// (which must span an invariant subspace).
    pub fn fixed_dim_on(&self, idx: &[usize]) -> usize {
        let sub: Vec<Vec<Gq>> = idx
            .iter()
            .map(|&r| {
                idx.iter()
                    .map(|&c| self.0[r][c] - if r == c { Gq::one() } else { Gq::zero() })
                    .collect()
            })
            .collect();
        idx.len() - linalg::rank(&sub)
    }

    /// `(c, l)` with `self(E_k) = c E_l`, if the image is a single basis element.
    pub fn monomial_image(&self, k: usize) -> Option<(Gq, usize)> {
        let nz: Vec<usize> = (0..self.dim())
            .filter(|&r| !self.0[r][k].is_zero())
            .collect();
        match nz.as_slice() {
            [l] => Some((self.0[*l][k], *l)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CandidateKind {
    Inner,
    Outer,
}

/// A grading-preserving automorphism given by `Ad(D)` or `X -> -Ad(DP)(X^st)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionCandidate {
    pub kind: CandidateKind,
    /// Diagonal of `D`.
    pub diagonal: Vec<Gq>,
    /// Block permutation `P`: `P e_j = e_{perm[j]}`.
    pub perm: Vec<usize>,
    pub map: LinearMap,
}

fn ad_dp(d: &[Gq], perm: &[usize], x: &SuperMatrix) -> SuperMatrix {
    let mut out = SuperMatrix::zero(x.m, x.n);
    for i in 0..x.dim() {
        for j in 0..x.dim() {
            let v = x.data[i][j];
            if !v.is_zero() {
                let (pi, pj) = (perm[i], perm[j]);
                out.data[pi][pj] = v * d[pi] / d[pj];
            }
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Permutations of `0..m+n` that preserve both blocks.
pub fn block_permutations(m: usize, n: usize) -> Vec<Vec<usize>> {
    let evens: Vec<usize> = (0..m).collect();
    let odds: Vec<usize> = (m..m + n).collect();
    let mut out = Vec::new();
    for pe in permutations(&evens) {
        for po in permutations(&odds) {
            let mut p = pe.clone();
            p.extend(po);
            out.push(p);
        }
    }
    out
}

fn sign_vectors(len: usize) -> Vec<Vec<i64>> {
    (0..1u32 << len)
        .map(|mask| {
            (0..len)
                .map(|k| if mask >> k & 1 == 1 { -1 } else { 1 })
                .collect()
        })
        .collect()
}

pub fn even_indices(m: usize, n: usize) -> Vec<usize> {
    let d = m + n;
    (0..d * d).filter(|k| (k / d < m) == (k % d < m)).collect()
}

pub fn odd_indices(m: usize, n: usize) -> Vec<usize> {
    let d = m + n;
    (0..d * d).filter(|k| (k / d < m) != (k % d < m)).collect()
}

/// Candidates with `D = diag(1, +-1, ..., z(+-1), ...)`, `z in {1, i}`,
/// kept when the square is the identity on the even part and the fourth power is the identity.
pub fn candidates(m: usize, n: usize) -> Result<Vec<InvolutionCandidate>> {
    gl_model(m, n)?;
    let even = even_indices(m, n);
    let full: Vec<usize> = (0..(m + n) * (m + n)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let id: Vec<usize> = (0..m + n).collect();
    for zeta in [gq(1, 0), gq(0, 1)] {
        for signs in sign_vectors(m + n - 1) {
            let mut diag = vec![gq(1, 0)];
            for (k, &s) in signs.iter().enumerate() {
                let idx = k + 1;
                let base = gq(s, 0);
                diag.push(if idx < m { base } else { base * zeta });
            }
            let mut push = |kind, perm: Vec<usize>, map: LinearMap| {
                if map.pow(2).is_identity_on(&even)
                    && map.pow(4).is_identity_on(&full)
                    && seen.insert(map.clone())
                {
                    out.push(InvolutionCandidate {
                        kind,
                        diagonal: diag.clone(),
                        perm,
                        map,
                    });
                }
            };
            let inner = LinearMap::from_fn(m, n, |x| ad_dp(&diag, &id, x));
            push(CandidateKind::Inner, id.clone(), inner);
            for perm in block_permutations(m, n) {
                let outer = LinearMap::from_fn(m, n, |x| {
                    ad_dp(&diag, &perm, &x.supertranspose()).scale(gq(-1, 0))
                });
                push(CandidateKind::Outer, perm, outer);
            }
        }
    }
    Ok(out)
}

/// Fixed-space dimensions `(even, odd)` of sigma, theta and sigma*theta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub sigma: (usize, usize),
    pub theta: (usize, usize),
    pub sigma_theta: (usize, usize),
}

pub fn fingerprint(m: usize, n: usize, theta: &LinearMap, sigma: &LinearMap) -> Fingerprint {
    let (e, o) = (even_indices(m, n), odd_indices(m, n));
    let dims = |f: &LinearMap| (f.fixed_dim_on(&e), f.fixed_dim_on(&o));
    Fingerprint {
        sigma: dims(sigma),
        theta: dims(theta),
        sigma_theta: dims(&sigma.compose(theta)),
    }
}

/// Conjugating automorphism `g` with its inverse.
#[derive(Debug, Clone)]
pub struct Conjugator {
    pub g: LinearMap,
    pub g_inv: LinearMap,
}

impl Conjugator {
    pub fn conjugate(&self, f: &LinearMap) -> LinearMap {
        self.g.compose(f).compose(&self.g_inv)
    }
}

/// Generators: `Ad` of a single sign flip, `Ad` of adjacent in-block swaps, and `-st`.
pub fn conjugation_generators(m: usize, n: usize) -> Vec<Conjugator> {
    let d = m + n;
    let id: Vec<usize> = (0..d).collect();
    let mut out = Vec::new();
    for k in 0..d {
        let mut diag = vec![gq(1, 0); d];
        diag[k] = gq(-1, 0);
        let g = LinearMap::from_fn(m, n, |x| ad_dp(&diag, &id, x));
        out.push(Conjugator {
            g: g.clone(),
            g_inv: g,
        });
    }
    let ones = vec![gq(1, 0); d];
    for k in 0..d.saturating_sub(1) {
        if (k < m) == (k + 1 < m) {
            let mut p = id.clone();
            p.swap(k, k + 1);
            let g = LinearMap::from_fn(m, n, |x| ad_dp(&ones, &p, x));
            out.push(Conjugator {
                g: g.clone(),
                g_inv: g,
            });
        }
    }
    let tau = LinearMap::from_fn(m, n, |x| x.supertranspose().scale(gq(-1, 0)));
    let tau_inv = tau.pow(3);
    out.push(Conjugator {
        g: tau,
        g_inv: tau_inv,
    });
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCensus {
    pub m: usize,
    pub n: usize,
    pub candidates: usize,
    pub commuting_pairs: usize,
    pub classes: usize,
    /// One entry per class, sorted.
    pub fingerprints: Vec<Fingerprint>,
}

impl PairCensus {
    pub fn fingerprint_set(&self) -> BTreeSet<Fingerprint> {
        self.fingerprints.iter().copied().collect()
    }
}

pub fn commute(a: &LinearMap, b: &LinearMap) -> bool {
    a.compose(b) == b.compose(a)
}

/// Ordered commuting pairs `(theta, sigma)` of candidates, classes under the
/// group generated by [`conjugation_generators`].
pub fn brute_involution_pairs(m: usize, n: usize) -> Result<PairCensus> {
    if m + n > 3 {
        return Err(Error::SizeBound(format!(
            "pair search is limited to m+n <= 3, got gl({m}|{n})"
        )));
    }
    let cands = candidates(m, n)?;
    let gens = conjugation_generators(m, n);
    let pairs: Vec<(usize, usize)> = (0..cands.len())
        .flat_map(|t| (0..cands.len()).map(move |s| (t, s)))
        .filter(|&(t, s)| commute(&cands[t].map, &cands[s].map))
        .collect();

    let mut class_of: HashMap<(LinearMap, LinearMap), usize> = HashMap::new();
    let mut fingerprints = Vec::new();
    for &(t, s) in &pairs {
        let start = (cands[t].map.clone(), cands[s].map.clone());
        if class_of.contains_key(&start) {
            continue;
        }
        let id = fingerprints.len();
        fingerprints.push(fingerprint(m, n, &start.0, &start.1));
        let mut queue = VecDeque::from([start.clone()]);
        class_of.insert(start, id);
        while let Some((a, b)) = queue.pop_front() {
            for g in &gens {
                let next = (g.conjugate(&a), g.conjugate(&b));
                if !class_of.contains_key(&next) {
                    class_of.insert(next.clone(), id);
                    queue.push_back(next);
                }
            }
        }
    }
    let classes = fingerprints.len();
    fingerprints.sort();
    Ok(PairCensus {
        m,
        n,
        candidates: cands.len(),
        commuting_pairs: pairs.len(),
        classes,
        fingerprints,
    })
}

/// Action of `f` on the root vectors listed in `roots`: for each, the image
/// basis index and coefficient, or `None` if some image is not a root vector.
pub fn root_action(
    f: &LinearMap,
    basis: &[BasisElement],
    idx: &[usize],
) -> Option<Vec<(Gq, usize)>> {
    idx.iter()
        .map(|&k| {
            f.monomial_image(k)
                .filter(|(_, l)| basis[*l].root.is_some())
        })
        .collect()
}

/// `+1` for `1` and `i`, `-1` for `-1` and `-i`, `None` otherwise.
pub fn sign_bit(c: Gq) -> Option<i8> {
    if c == gq(1, 0) || c == gq(0, 1) {
        Some(1)
    } else if c == gq(-1, 0) || c == gq(0, -1) {
        Some(-1)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_pair_is_present() {
        let cands = candidates(2, 1).unwrap();
        let id = LinearMap::identity(9);
        assert!(cands.iter().any(|c| c.map == id));
        assert!(commute(&id, &id));
    }

    #[test]
    fn candidates_are_automorphisms_with_order_dividing_four() {
        let basis = gl_model(2, 1).unwrap();
        for c in candidates(2, 1).unwrap() {
            for a in &basis {
                for b in &basis {
                    let lhs = c
                        .map
                        .apply(2, 1, &a.matrix.supercommutator(&b.matrix).unwrap());
                    let rhs = c
                        .map
                        .apply(2, 1, &a.matrix)
                        .supercommutator(&c.map.apply(2, 1, &b.matrix))
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            assert!(c.map.pow(2).is_identity_on(&even_indices(2, 1)));
        }
    }

    #[test]
    fn census_size_bound() {
        assert!(matches!(
            brute_involution_pairs(2, 2),
            Err(Error::SizeBound(_))
        ));
    }

    #[test]
    fn sign_bits() {
        assert_eq!(sign_bit(gq(0, 1)), Some(1));
        assert_eq!(sign_bit(gq(0, -1)), Some(-1));
        assert_eq!(sign_bit(gq(2, 0)), None);
    }
}
