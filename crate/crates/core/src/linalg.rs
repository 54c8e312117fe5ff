//! Exact linear algebra: fraction-free elimination over the integers and
//! reduced row echelon forms over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Clears denominators row by row.
fn integer_rows(matrix: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    matrix
        .iter()
        .map(|row| {
            let den = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect()
        })
        .collect()
}

/// Bareiss elimination to row echelon form; returns the pivot columns.
fn bareiss(a: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, below) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss step must divide exactly");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(matrix: &[Vec<Rational>], ncols: usize) -> usize {
    let mut a = integer_rows(matrix);
    bareiss(&mut a, ncols).len()
}

/// A basis of `{x : A x = 0}`, one vector per free column in increasing order.
pub fn kernel(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = integer_rows(matrix);
    let pivots = bareiss(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate().rev() {
                let mut s = Rational::zero();
                for j in p + 1..ncols {
                    if !a[r][j].is_zero() && !x[j].is_zero() {
                        s += Rational::from_integer(a[r][j].clone()) * &x[j];
                    }
                }
                x[p] = -s / Rational::from_integer(a[r][p].clone());
            }
            x
        })
        .collect()
}

/// Reduced row echelon form; zero rows are dropped.
pub fn rref(matrix: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}
