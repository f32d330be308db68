//! Row reduction over Q and over a prime field.

use crate::rational::Q;
use num_traits::{One, Zero};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank_q(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub const PRIME: u64 = 2_147_483_647;

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// Rank over F_p (`p < 2^32`).
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] % p != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[col] % p;
            if f != 0 {
                for j in col..ncols {
                    row[j] = (row[j] + (p - f) * pivot_row[j]) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn rank_small() {
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]];
        assert_eq!(rank_q(&m), 2);
        let mut m2 = m.clone();
        assert_eq!(rref(&mut m2), vec![0, 1]);
    }

    #[test]
    fn rank_prime_field() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_mod_p(m, PRIME), 2);
        assert_eq!(inv_mod(3, 7), 5);
    }
}
