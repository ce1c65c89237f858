//! Distinguished simple systems, root sets and lowest roots of every family.
//!
//! Vertex order follows the left-to-right order of the standard pictures:
//! the `A` chain runs `e`-part, grey, `d`-part; the orthosymplectic chains run
//! `d`-part, grey, `e`-part; `D(2,1;alpha)` lists arm, hub, arm.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::linalg;
use crate::rational::Q;
use crate::roots::{Basis, BilinearForm, Parity, Root, Vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleSystem {
    pub family: FamilyId,
    pub form: BilinearForm,
    pub simple_roots: Vec<Root>,
    /// Row `i` is `2(a_i,a_j)/(a_i,a_i)` for non-isotropic `a_i`, otherwise the
    /// raw pairings scaled so the first nonzero off-diagonal entry is `+-1`.
    pub cartan: Vec<Vec<Q>>,
    /// `symmetrizer[i] * cartan[i][j] == (a_i, a_j)`.
    pub symmetrizer: Vec<Q>,
    /// `(index, w)` for every even simple root, with `(w_j, a_k) = delta_jk / symmetrizer[k]`
    /// over the even indices `k`.
    pub coweights_even: Vec<(usize, Vector)>,
}

impl SimpleSystem {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn gram(&self) -> Vec<Vec<Q>> {
        gram_of(&self.simple_roots, &self.form)
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.simple_roots[i].parity == Parity::Even)
            .collect()
    }
}

pub(crate) fn gram_of(roots: &[Root], form: &BilinearForm) -> Vec<Vec<Q>> {
    roots
        .iter()
        .map(|a| {
            roots
                .iter()
                .map(|b| {
                    form.pair(&a.vector, &b.vector)
                        .expect("roots share the form's basis")
                })
                .collect()
        })
        .collect()
}

/// Cartan matrix and symmetrizer from a Gram matrix, with the normalization
/// documented on [`SimpleSystem::cartan`].
pub(crate) fn cartan_from_gram(gram: &[Vec<Q>]) -> Result<(Vec<Vec<Q>>, Vec<Q>)> {
    let n = gram.len();
    let mut cartan = Vec::with_capacity(n);
    let mut sym = Vec::with_capacity(n);
    for i in 0..n {
        let scale = if gram[i][i].is_zero() {
            let first = (0..n)
                .filter(|&j| j != i)
                .map(|j| gram[i][j])
                .find(|x| !x.is_zero())
                .ok_or_else(|| {
                    Error::Structural(format!("isotropic vertex {i} is disconnected"))
                })?;
            first.abs()
        } else {
            gram[i][i] / Q::from(2)
        };
        cartan.push(gram[i].iter().map(|&g| g / scale).collect());
        sym.push(scale);
    }
    Ok((cartan, sym))
}

fn e(i: u8) -> Vector {
    Vector::eps(i)
}

fn d(j: u8) -> Vector {
    Vector::delta(j)
}

fn q(x: i64) -> Q {
    Q::from(x)
}

pub fn form_of(family: &FamilyId) -> BilinearForm {
    match *family {
        FamilyId::A { m, n } => BilinearForm::standard(m as u8 + 1, n as u8 + 1),
        FamilyId::B { m, n } | FamilyId::D { m, n } => BilinearForm::standard(m as u8, n as u8),
        FamilyId::BZero { n } => BilinearForm::standard(0, n as u8),
        FamilyId::C { n } => BilinearForm::standard(1, n as u8 - 1),
        FamilyId::D21 { alpha } => {
            let two = q(2);
            BilinearForm::new(
                vec![Basis::Eps(1), Basis::Eps(2), Basis::Eps(3)],
                vec![
                    vec![-(Q::from(1) + alpha) / two, q(0), q(0)],
                    vec![q(0), Q::new(1, 2), q(0)],
                    vec![q(0), q(0), alpha / two],
                ],
            )
            .expect("diagonal form")
        }
        FamilyId::F4 => BilinearForm::new(
            vec![Basis::Eps(1), Basis::Eps(2), Basis::Eps(3), Basis::Delta(1)],
            vec![
                vec![q(1), q(0), q(0), q(0)],
                vec![q(0), q(1), q(0), q(0)],
                vec![q(0), q(0), q(1), q(0)],
                vec![q(0), q(0), q(0), q(-3)],
            ],
        )
        .expect("diagonal form"),
        // e3 = -e1 - e2 is not a basis symbol.
        FamilyId::G3 => BilinearForm::new(
            vec![Basis::Eps(1), Basis::Eps(2), Basis::Delta(1)],
            vec![
                vec![q(2), q(-1), q(0)],
                vec![q(-1), q(2), q(0)],
                vec![q(0), q(0), q(-2)],
            ],
        )
        .expect("symmetric form"),
    }
}

/// `e3` in the two-dimensional `G(3)` coordinates.
fn g3_e3() -> Vector {
    -&(&e(1) + &e(2))
}

fn g3_eps(i: u8) -> Vector {
    if i == 3 {
        g3_e3()
    } else {
        e(i)
    }
}

fn simple_vectors(family: &FamilyId) -> Vec<(Vector, Parity)> {
    use Parity::{Even, Odd};
    let mut out = Vec::new();
    match *family {
        FamilyId::A { m, n } => {
            let (m, n) = (m as u8, n as u8);
            for i in 1..=m {
                out.push((&e(i) - &e(i + 1), Even));
            }
            out.push((&e(m + 1) - &d(1), Odd));
            for j in 1..=n {
                out.push((&d(j) - &d(j + 1), Even));
            }
        }
        FamilyId::B { m, n } | FamilyId::D { m, n } => {
            let (m, n) = (m as u8, n as u8);
            for j in 1..n {
                out.push((&d(j) - &d(j + 1), Even));
            }
            out.push((&d(n) - &e(1), Odd));
            for i in 1..m {
                out.push((&e(i) - &e(i + 1), Even));
            }
            if matches!(family, FamilyId::B { .. }) {
                out.push((e(m), Even));
            } else {
                out.push((&e(m - 1) + &e(m), Even));
            }
        }
        FamilyId::BZero { n } => {
            let n = n as u8;
            for j in 1..n {
                out.push((&d(j) - &d(j + 1), Even));
            }
            out.push((d(n), Odd));
        }
        FamilyId::C { n } => {
            let k = n as u8 - 1;
            out.push((&e(1) - &d(1), Odd));
            for j in 1..k {
                out.push((&d(j) - &d(j + 1), Even));
            }
            out.push((d(k).scale(q(2)), Even));
        }
        FamilyId::D21 { .. } => {
            out.push((e(2).scale(q(2)), Even));
            out.push((&(&e(1) - &e(2)) - &e(3), Odd));
            out.push((e(3).scale(q(2)), Even));
        }
        FamilyId::F4 => {
            let half = Q::new(1, 2);
            out.push(((&(&(&d(1) - &e(1)) - &e(2)) - &e(3)).scale(half), Odd));
            out.push((e(3), Even));
            out.push((&e(2) - &e(3), Even));
            out.push((&e(1) - &e(2), Even));
        }
        FamilyId::G3 => {
            out.push((&d(1) + &g3_e3(), Odd));
            out.push((e(1), Even));
            out.push((&e(2) - &e(1), Even));
        }
    }
    out
}

/// The distinguished simple system with exact Cartan data.
pub fn build_simple_system(family: &FamilyId) -> Result<SimpleSystem> {
    family.validate_with(true)?;
    let form = form_of(family);
    let simple_roots = simple_vectors(family)
        .into_iter()
        .map(|(v, p)| Root::new(v, p, &form))
        .collect::<Result<Vec<_>>>()?;
    let gram = gram_of(&simple_roots, &form);
    let (cartan, symmetrizer) = cartan_from_gram(&gram)?;

    let even: Vec<usize> = (0..simple_roots.len())
        .filter(|&i| simple_roots[i].parity == Parity::Even)
        .collect();
    let sub: Vec<Vec<Q>> = even
        .iter()
        .map(|&a| even.iter().map(|&b| gram[a][b]).collect())
        .collect();
    let mut coweights_even = Vec::with_capacity(even.len());
    for (jj, &j) in even.iter().enumerate() {
        let rhs: Vec<Q> = even
            .iter()
            .enumerate()
            .map(|(ll, &l)| {
                if ll == jj {
                    Q::from(1) / symmetrizer[l]
                } else {
                    Q::zero()
                }
            })
            .collect();
        let x = linalg::solve(&sub, &rhs)
            .ok_or_else(|| Error::Degenerate("even part of the form is singular".into()))?;
        let mut w = Vector::zero();
        for (kk, &k) in even.iter().enumerate() {
            w = &w + &simple_roots[k].vector.scale(x[kk]);
        }
        coweights_even.push((j, w));
    }

    Ok(SimpleSystem {
        family: family.clone(),
        form,
        simple_roots,
        cartan,
        symmetrizer,
        coweights_even,
    })
}

fn push_pm(out: &mut Vec<Vector>, v: Vector) {
    out.push(-&v);
    out.push(v);
}

/// Even and odd roots, each closed under negation, without duplicates.
pub fn full_root_set(family: &FamilyId) -> Result<(Vec<Root>, Vec<Root>)> {
    family.validate_with(true)?;
    let form = form_of(family);
    let mut even = Vec::new();
    let mut odd = Vec::new();
    match *family {
        FamilyId::A { m, n } => {
            let (m, n) = (m as u8 + 1, n as u8 + 1);
            for i in 1..=m {
                for j in i + 1..=m {
                    push_pm(&mut even, &e(i) - &e(j));
                }
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    push_pm(&mut even, &d(i) - &d(j));
                }
            }
            for i in 1..=m {
                for j in 1..=n {
                    push_pm(&mut odd, &e(i) - &d(j));
                }
            }
        }
        FamilyId::B { .. } | FamilyId::D { .. } | FamilyId::BZero { .. } => {
            let (m, n) = match *family {
                FamilyId::B { m, n } | FamilyId::D { m, n } => (m as u8, n as u8),
                FamilyId::BZero { n } => (0, n as u8),
                _ => unreachable!(),
            };
            let has_short = !matches!(family, FamilyId::D { .. });
            for i in 1..=m {
                for j in i + 1..=m {
                    push_pm(&mut even, &e(i) - &e(j));
                    push_pm(&mut even, &e(i) + &e(j));
                }
                if has_short {
                    push_pm(&mut even, e(i));
                }
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    push_pm(&mut even, &d(i) - &d(j));
                    push_pm(&mut even, &d(i) + &d(j));
                }
                push_pm(&mut even, d(i).scale(q(2)));
            }
            for i in 1..=n {
                for j in 1..=m {
                    push_pm(&mut odd, &d(i) - &e(j));
                    push_pm(&mut odd, &d(i) + &e(j));
                }
                if has_short {
                    push_pm(&mut odd, d(i));
                }
            }
        }
        FamilyId::C { n } => {
            let k = n as u8 - 1;
            for i in 1..=k {
                for j in i + 1..=k {
                    push_pm(&mut even, &d(i) - &d(j));
                    push_pm(&mut even, &d(i) + &d(j));
                }
                push_pm(&mut even, d(i).scale(q(2)));
                push_pm(&mut odd, &e(1) - &d(i));
                push_pm(&mut odd, &e(1) + &d(i));
            }
        }
        FamilyId::D21 { .. } => {
            for i in 1..=3 {
                push_pm(&mut even, e(i).scale(q(2)));
            }
            for s2 in [1, -1] {
                for s3 in [1, -1] {
                    push_pm(&mut odd, &(&e(1) + &e(2).scale(q(s2))) + &e(3).scale(q(s3)));
                }
            }
        }
        FamilyId::F4 => {
            for i in 1..=3 {
                for j in i + 1..=3 {
                    push_pm(&mut even, &e(i) - &e(j));
                    push_pm(&mut even, &e(i) + &e(j));
                }
                push_pm(&mut even, e(i));
            }
            push_pm(&mut even, d(1));
            let half = Q::new(1, 2);
            for s1 in [1, -1] {
                for s2 in [1, -1] {
                    for s3 in [1, -1] {
                        let v = &(&(&d(1) + &e(1).scale(q(s1))) + &e(2).scale(q(s2)))
                            + &e(3).scale(q(s3));
                        push_pm(&mut odd, v.scale(half));
                    }
                }
            }
        }
        FamilyId::G3 => {
            for i in 1..=3 {
                push_pm(&mut even, g3_eps(i));
                for j in i + 1..=3 {
                    push_pm(&mut even, &g3_eps(i) - &g3_eps(j));
                }
                push_pm(&mut odd, &d(1) + &g3_eps(i));
                push_pm(&mut odd, &d(1) - &g3_eps(i));
            }
            push_pm(&mut even, d(1).scale(q(2)));
            push_pm(&mut odd, d(1));
        }
    }
    let build = |vs: Vec<Vector>, p: Parity| -> Result<Vec<Root>> {
        let mut roots = vs
            .into_iter()
            .map(|v| Root::new(v, p, &form))
            .collect::<Result<Vec<_>>>()?;
        roots.sort();
        roots.dedup();
        Ok(roots)
    };
    Ok((build(even, Parity::Even)?, build(odd, Parity::Odd)?))
}

/// The negative of the highest root of the distinguished positive system.
pub fn lowest_root(family: &FamilyId) -> Result<Root> {
    family.validate_with(true)?;
    let form = form_of(family);
    let (v, p) = match *family {
        FamilyId::A { m: _, n } => (&d(n as u8 + 1) - &e(1), Parity::Odd),
        FamilyId::B { .. } | FamilyId::BZero { .. } | FamilyId::D { .. } => {
            (d(1).scale(q(-2)), Parity::Even)
        }
        FamilyId::C { .. } => (-&(&e(1) + &d(1)), Parity::Odd),
        FamilyId::D21 { .. } => (e(1).scale(q(-2)), Parity::Even),
        FamilyId::F4 => (d(1).scale(q(-1)), Parity::Even),
        FamilyId::G3 => (d(1).scale(q(-2)), Parity::Even),
    };
    Root::new(v, p, &form)
}

/// Index the affine vertex takes in the affine diagram's vertex order.
pub fn affine_position(family: &FamilyId) -> AffinePosition {
    match family {
        FamilyId::D21 { .. } => AffinePosition::Last,
        _ => AffinePosition::First,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffinePosition {
    First,
    Last,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::from(x)).collect()
    }

    #[test]
    fn sl_2_1_simple_system() {
        let s = build_simple_system(&FamilyId::a(1, 0).unwrap()).unwrap();
        assert_eq!(s.simple_roots[0].vector, &e(1) - &e(2));
        assert_eq!(s.simple_roots[0].parity, Parity::Even);
        assert_eq!(s.simple_roots[1].vector, &e(2) - &d(1));
        assert!(s.simple_roots[1].isotropic);
        assert_eq!(s.cartan, vec![qs(&[2, -1]), qs(&[-1, 0])]);
    }

    #[test]
    fn osp_1_2_is_rank_one() {
        let s = build_simple_system(&FamilyId::b(0, 1).unwrap()).unwrap();
        assert_eq!(s.rank(), 1);
        let r = &s.simple_roots[0];
        assert_eq!(r.vector, d(1));
        assert!(r.is_odd() && !r.isotropic);
        assert_eq!(s.cartan, vec![qs(&[2])]);
    }

    #[test]
    fn d21_at_one_specializes_to_osp_4_2() {
        let s = build_simple_system(&FamilyId::d21(Q::from(1)).unwrap()).unwrap();
        let t = build_simple_system(&FamilyId::d(2, 1).unwrap()).unwrap();
        // D(2,1) lists hub first; D(2,1;a) lists arm, hub, arm.
        let perm = [1usize, 0, 2];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.cartan[perm[i]][perm[j]], t.cartan[i][j], "({i},{j})");
            }
        }
        assert_eq!(s.cartan[1][1], Q::from(0));
    }

    #[test]
    fn root_counts() {
        let (ev, od) = full_root_set(&FamilyId::a(1, 0).unwrap()).unwrap();
        assert_eq!((ev.len(), od.len()), (2, 4));

        let (ev, od) = full_root_set(&FamilyId::b(0, 1).unwrap()).unwrap();
        assert_eq!(
            ev.iter().map(|r| r.vector.clone()).collect::<Vec<_>>(),
            vec![d(1).scale(q(-2)), d(1).scale(q(2))]
        );
        assert_eq!(
            od.iter().map(|r| r.vector.clone()).collect::<Vec<_>>(),
            vec![-&d(1), d(1)]
        );

        let (_, od) = full_root_set(&FamilyId::c(2).unwrap()).unwrap();
        assert!(od.iter().all(|r| r.isotropic));

        // dim F(4) = 40 = 4 + 24 + 16 - ... : 24 even roots (18 + 2 + rank-4 Cartan => 24 even dims) and 16 odd.
        let (ev, od) = full_root_set(&FamilyId::F4).unwrap();
        assert_eq!((ev.len(), od.len()), (20, 16));
        // G(3): 12 + 2 even, 14 odd (dim 31 = 17 even dims + 14 odd).
        let (ev, od) = full_root_set(&FamilyId::G3).unwrap();
        assert_eq!((ev.len(), od.len()), (14, 14));
    }

    #[test]
    fn lowest_roots() {
        assert_eq!(
            lowest_root(&FamilyId::a(1, 0).unwrap()).unwrap().vector,
            &d(1) - &e(1)
        );
        let b = lowest_root(&FamilyId::b(1, 1).unwrap()).unwrap();
        assert_eq!(b.vector, d(1).scale(q(-2)));
        assert_eq!(b.parity, Parity::Even);
    }

    #[test]
    fn symmetrizer_reproduces_gram() {
        for f in FamilyId::sweep(3, &[Q::from(2), Q::new(1, 3)]) {
            let s = build_simple_system(&f).unwrap();
            let g = s.gram();
            for i in 0..s.rank() {
                for j in 0..s.rank() {
                    assert_eq!(s.symmetrizer[i] * s.cartan[i][j], g[i][j], "{f}");
                }
            }
        }
    }
}
