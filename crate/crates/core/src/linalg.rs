//! Exact Gaussian elimination over the rationals (and any other exact field).

use num_integer::Integer;
use num_traits::{Num, One, Zero};

use crate::rational::Q;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<T: Clone + Num>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let d = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Clone + Num>(m: &[Vec<T>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); ncols];
            x[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[row][f];
            }
            x
        })
        .collect()
}

/// Solves the square system `m x = b`; `None` if `m` is singular.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(aug.iter().map(|r| r[n]).collect())
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer(v: &[Q]) -> Vec<i64> {
    let lcm = v.iter().fold(1i64, |l, q| l.lcm(q.denom()));
    let ints: Vec<i64> = v.iter().map(|q| (q * Q::from(lcm)).to_integer()).collect();
    let g = crate::rational::gcd_all(&ints);
    if g == 0 {
        return ints;
    }
    ints.iter().map(|x| x / g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Q {
        Q::from(x)
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let s: Q = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn solve_and_singular() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(solve(&m, &[q(3), q(4)]).unwrap(), vec![q(1), q(1)]);
        let s = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve(&s, &[q(1), q(1)]).is_none());
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(
            primitive_integer(&[Q::new(1, 2), q(1), Q::new(3, 2)]),
            vec![1, 2, 3]
        );
        assert_eq!(primitive_integer(&[q(-4), q(6)]), vec![-2, 3]);
    }
}
