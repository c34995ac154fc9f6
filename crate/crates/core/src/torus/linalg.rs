//! Dense Gaussian elimination over F_p.

use crate::ring::{inv_mod, mul_mod, sub_mod};

/// Reduced row echelon form in place; returns the pivot columns.
///
/// Pivots are taken left to right, each in the first available row.
fn rref(rows: &mut [Vec<u32>], p: u32) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = inv_mod(rows[r][c], p).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = sub_mod(*x, mul_mod(f, y, p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    rref(&mut rows, p).len()
}

/// Solves `A x = b`, free variables set to 0.
pub(crate) fn solve(a: &[Vec<u32>], b: &[u32], p: u32) -> Option<Vec<u32>> {
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<u32>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(&mut rows, p);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![0; n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems() {
        let a = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(rank(a.clone(), 2), 2);
        let x = solve(&a, &[1, 0], 2).unwrap();
        assert_eq!(x, vec![1, 0, 0]);
        let singular = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(rank(singular.clone(), 5), 1);
        assert!(solve(&singular, &[1, 1], 5).is_none());
        assert_eq!(solve(&singular, &[1, 2], 5).unwrap(), vec![1, 0]);
    }
}
