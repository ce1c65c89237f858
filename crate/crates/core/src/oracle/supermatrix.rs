//! Dense super matrices over the Gaussian rationals.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::roots::{Parity, Vector};

pub type Gq = Complex<Q>;

pub fn gq(re: i64, im: i64) -> Gq {
    Complex::new(Q::from(re), Q::from(im))
}

/// `(m+n) x (m+n)` matrix; indices `< m` are even.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperMatrix {
    pub m: usize,
    pub n: usize,
    pub data: Vec<Vec<Gq>>,
}

impl SuperMatrix {
    pub fn zero(m: usize, n: usize) -> Self {
        SuperMatrix {
            m,
            n,
            data: vec![vec![Gq::zero(); m + n]; m + n],
        }
    }

    pub fn unit(m: usize, n: usize, i: usize, j: usize) -> Self {
        let mut x = Self::zero(m, n);
        x.data[i][j] = Gq::one();
        x
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn index_parity(&self, i: usize) -> Parity {
        if i < self.m {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity of a homogeneous matrix; `None` for mixed ones. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut even = false;
        let mut odd = false;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.data[i][j].is_zero() {
                    if self.index_parity(i) == self.index_parity(j) {
                        even = true;
                    } else {
                        odd = true;
                    }
                }
            }
        }
        match (even, odd) {
            (_, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            (true, true) => None,
        }
    }

    pub fn scale(&self, c: Gq) -> Self {
        SuperMatrix {
            m: self.m,
            n: self.n,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    /// `[X,Y] = XY - (-1)^{|X||Y|} YX` on homogeneous arguments.
    pub fn supercommutator(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        let (px, py) = match (self.parity(), other.parity()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Structural(
                    "supercommutator needs homogeneous arguments".into(),
                ))
            }
        };
        let xy = self * other;
        let yx = other * self;
        Ok(if px == Parity::Odd && py == Parity::Odd {
            &xy + &yx
        } else {
            &xy - &yx
        })
    }

    pub fn supertrace(&self) -> Gq {
        (0..self.dim()).fold(Gq::zero(), |acc, i| match self.index_parity(i) {
            Parity::Even => acc + self.data[i][i],
            Parity::Odd => acc - self.data[i][i],
        })
    }

    /// `[[A,B],[C,D]] -> [[A^t, C^t], [-B^t, D^t]]`.
    pub fn supertranspose(&self) -> SuperMatrix {
        let mut out = Self::zero(self.m, self.n);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let x = self.data[j][i];
                let upper_right_source =
                    self.index_parity(j) == Parity::Even && self.index_parity(i) == Parity::Odd;
                out.data[i][j] = if upper_right_source { -x } else { x };
            }
        }
        out
    }

    /// Row-major coordinates.
    pub fn flatten(&self) -> Vec<Gq> {
        self.data.iter().flatten().copied().collect()
    }

    pub fn from_flat(m: usize, n: usize, v: &[Gq]) -> Self {
        let d = m + n;
        SuperMatrix {
            m,
            n,
            data: v.chunks(d).map(<[Gq]>::to_vec).collect(),
        }
    }
}

impl Mul for &SuperMatrix {
    type Output = SuperMatrix;
    fn mul(self, rhs: &SuperMatrix) -> SuperMatrix {
        let d = self.dim();
        let mut out = SuperMatrix::zero(self.m, self.n);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out.data[i][j] += a * rhs.data[k][j];
                }
            }
        }
        out
    }
}

impl Add for &SuperMatrix {
    type Output = SuperMatrix;
    fn add(self, rhs: &SuperMatrix) -> SuperMatrix {
        let mut out = self.clone();
        for (r, s) in out.data.iter_mut().zip(&rhs.data) {
            for (x, y) in r.iter_mut().zip(s) {
                *x += y;
            }
        }
        out
    }
}

impl Sub for &SuperMatrix {
    type Output = SuperMatrix;
    fn sub(self, rhs: &SuperMatrix) -> SuperMatrix {
        self + &rhs.scale(-Gq::one())
    }
}

/// Basis element of `gl(m|n)` with its root label (`None` on the diagonal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub i: usize,
    pub j: usize,
    pub matrix: SuperMatrix,
    pub root: Option<Vector>,
}

/// Weight of the `i`-th standard basis vector: `e_{i+1}` or `d_{i-m+1}`.
pub fn weight(m: usize, i: usize) -> Vector {
    if i < m {
        Vector::eps(i as u8 + 1)
    } else {
        Vector::delta((i - m) as u8 + 1)
    }
}

pub const MAX_MODEL_DIM: usize = 5;

/// `E_ij` basis in row-major order.
pub fn gl_model(m: usize, n: usize) -> Result<Vec<BasisElement>> {
    if m + n > MAX_MODEL_DIM || m + n == 0 {
        return Err(Error::SizeBound(format!(
            "gl({m}|{n}) model needs 1 <= m+n <= {MAX_MODEL_DIM}"
        )));
    }
    let d = m + n;
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let root = (i != j).then(|| &weight(m, i) - &weight(m, j));
            out.push(BasisElement {
                i,
                j,
                matrix: SuperMatrix::unit(m, n, i, j),
                root,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::BilinearForm;

    #[test]
    fn gl_1_1_odd_bracket_uses_plus() {
        let e12 = SuperMatrix::unit(1, 1, 0, 1);
        let e21 = SuperMatrix::unit(1, 1, 1, 0);
        let b = e12.supercommutator(&e21).unwrap();
        let expect = &SuperMatrix::unit(1, 1, 0, 0) + &SuperMatrix::unit(1, 1, 1, 1);
        assert_eq!(b, expect);
        assert!(b.supertrace().is_zero());
    }

    #[test]
    fn cartan_acts_by_root_values() {
        let basis = gl_model(2, 1).unwrap();
        let form = BilinearForm::standard(2, 1);
        // H = diag(h) acts on E_ij by h_i - h_j.
        let h = [gq(3, 0), gq(-1, 0), gq(5, 0)];
        let mut hm = SuperMatrix::zero(2, 1);
        for (k, x) in h.iter().enumerate() {
            hm.data[k][k] = *x;
        }
        for b in basis.iter().filter(|b| b.root.is_some()) {
            let br = hm.supercommutator(&b.matrix).unwrap();
            assert_eq!(br, b.matrix.scale(h[b.i] - h[b.j]));
            let root = b.root.as_ref().unwrap();
            let odd = (b.i < 2) != (b.j < 2);
            assert_eq!(form.pair(root, root).unwrap().is_zero(), odd);
        }
    }

    #[test]
    fn size_bound() {
        assert!(matches!(gl_model(3, 3), Err(Error::SizeBound(_))));
    }

    #[test]
    fn supertranspose_twice_is_parity() {
        let x = SuperMatrix::unit(2, 1, 0, 2);
        assert_eq!(x.supertranspose().supertranspose(), x.scale(gq(-1, 0)));
        let y = SuperMatrix::unit(2, 1, 0, 1);
        assert_eq!(y.supertranspose().supertranspose(), y);
    }
}
