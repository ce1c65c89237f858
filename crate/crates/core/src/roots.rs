//! Roots in epsilon/delta coordinates and the invariant bilinear form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

/// A basis symbol: `Eps(i)` is epsilon_i and `Delta(j)` is delta_j (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Eps(u8),
    Delta(u8),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Eps(i) => write!(f, "e{i}"),
            Basis::Delta(j) => write!(f, "d{j}"),
        }
    }
}

impl Basis {
    pub fn parse(s: &str) -> Option<Basis> {
        let (head, idx) = s.split_at(1.min(s.len()));
        let idx: u8 = idx.parse().ok()?;
        match head {
            "e" => Some(Basis::Eps(idx)),
            "d" => Some(Basis::Delta(idx)),
            _ => None,
        }
    }
}

/// Sparse exact coordinate vector; zero coordinates are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(BTreeMap<Basis, Q>);

impl Vector {
    pub fn zero() -> Self {
        Vector(BTreeMap::new())
    }

    pub fn unit(b: Basis) -> Self {
        Self::from_terms([(b, Q::from(1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (Basis, Q)>>(terms: I) -> Self {
        let mut v = Vector::zero();
        for (b, c) in terms {
            v.add_term(b, c);
        }
        v
    }

    pub fn eps(i: u8) -> Self {
        Self::unit(Basis::Eps(i))
    }

    pub fn delta(j: u8) -> Self {
        Self::unit(Basis::Delta(j))
    }

    pub fn add_term(&mut self, b: Basis, c: Q) {
        let e = self.0.entry(b).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&b);
        }
    }

    pub fn scale(&self, c: Q) -> Self {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector(self.0.iter().map(|(&b, &x)| (b, x * c)).collect())
    }

    pub fn coord(&self, b: Basis) -> Q {
        self.0.get(&b).copied().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, Q)> + '_ {
        self.0.iter().map(|(&b, &c)| (b, c))
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c);
        }
        out
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self + &(-rhs)
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(Q::from(-1))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in self.terms() {
            let sign = if c < Q::zero() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = if c < Q::zero() { -c } else { c };
            if mag == Q::from(1) {
                write!(f, "{sign}{b}")?;
            } else if mag.is_integer() {
                write!(f, "{sign}{}{b}", mag.numer())?;
            } else {
                write!(f, "{sign}({}){b}", format_q(mag))?;
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub vector: Vector,
    pub parity: Parity,
    pub isotropic: bool,
}

impl Root {
    /// Builds a root, deriving the isotropy flag from the form.
    pub fn new(vector: Vector, parity: Parity, form: &BilinearForm) -> Result<Root> {
        let isotropic = form.pair(&vector, &vector)?.is_zero();
        if isotropic && parity == Parity::Even {
            return Err(Error::Structural(format!(
                "even root {vector} is isotropic"
            )));
        }
        Ok(Root {
            vector,
            parity,
            isotropic,
        })
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn negated(&self) -> Root {
        Root {
            vector: -&self.vector,
            parity: self.parity,
            isotropic: self.isotropic,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vector)
    }
}

/// Symmetric exact form given by its Gram matrix on an ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    basis: Vec<Basis>,
    gram: Vec<Vec<Q>>,
}

impl BilinearForm {
    pub fn new(basis: Vec<Basis>, gram: Vec<Vec<Q>>) -> Result<Self> {
        let n = basis.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(Error::Structural(
                "Gram matrix shape does not match basis".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Structural("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(BilinearForm { basis, gram })
    }

    /// `(e_i, e_j) = delta_ij`, `(d_i, d_j) = -delta_ij`, with `eps` and `delta` entries.
    pub fn standard(eps: u8, delta: u8) -> Self {
        let mut basis: Vec<Basis> = (1..=eps).map(Basis::Eps).collect();
        basis.extend((1..=delta).map(Basis::Delta));
        let n = basis.len();
        let mut gram = vec![vec![Q::zero(); n]; n];
        for (i, b) in basis.iter().enumerate() {
            gram[i][i] = match b {
                Basis::Eps(_) => Q::from(1),
                Basis::Delta(_) => Q::from(-1),
            };
        }
        BilinearForm { basis, gram }
    }

    pub fn basis(&self) -> &[Basis] {
        &self.basis
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    fn index(&self, b: Basis) -> Result<usize> {
        self.basis.iter().position(|&x| x == b).ok_or_else(|| {
            Error::Structural(format!("basis symbol {b} is not in the form's basis"))
        })
    }

    pub fn pair(&self, a: &Vector, b: &Vector) -> Result<Q> {
        let mut acc = Q::zero();
        for (ba, ca) in a.terms() {
            let i = self.index(ba)?;
            for (bb, cb) in b.terms() {
                let j = self.index(bb)?;
                acc += ca * cb * self.gram[i][j];
            }
        }
        Ok(acc)
    }

    /// Coordinates of `v` as a dense column over the form's basis.
    pub fn dense(&self, v: &Vector) -> Result<Vec<Q>> {
        let mut out = vec![Q::zero(); self.basis.len()];
        for (b, c) in v.terms() {
            out[self.index(b)?] = c;
        }
        Ok(out)
    }
}

/// Exact value of the form on two roots.
pub fn inner(a: &Root, b: &Root, form: &BilinearForm) -> Result<Q> {
    form.pair(&a.vector, &b.vector)
}
