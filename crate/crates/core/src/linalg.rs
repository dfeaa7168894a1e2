//! Dense Gaussian elimination over F_p.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Prime;

/// Reduces `rows` in place to reduced row echelon form; returns pivot columns.
pub fn rref(p: Prime, rows: &mut Vec<Vec<u32>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = p.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = p.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                #[allow(clippy::needless_range_loop)]
                for j in 0..ncols {
                    let sub = p.mul(f, rows[r][j]);
                    rows[i][j] = p.sub(rows[i][j], sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(p: Prime, rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(p, &mut m, ncols).len()
}

/// Basis of `{v : A v = 0}` for the matrix with the given rows, one vector per
/// free column, read off the reduced echelon form.
pub fn nullspace(p: Prime, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut m = rows.to_vec();
    let pivots = rref(p, &mut m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = p.neg(row[free]);
        }
        out.push(v);
    }
    out
}

/// Indices of a maximal linearly independent subset of `vectors`, chosen
/// greedily in order.
pub fn independent_subset(p: Prime, vectors: &[Vec<u32>], ncols: usize) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (pc, row) in &echelon {
            if w[*pc] != 0 {
                let f = w[*pc];
                for j in 0..ncols {
                    w[j] = p.sub(w[j], p.mul(f, row[j]));
                }
            }
        }
        if let Some(pc) = w.iter().position(|&x| x != 0) {
            let inv = p.inv(w[pc]);
            for x in w.iter_mut() {
                *x = p.mul(*x, inv);
            }
            echelon.push((pc, w));
            chosen.push(idx);
        }
    }
    chosen
}

/// Coordinates `c` with `Σ c_i basis_i = target`, if `target` lies in the span.
pub fn solve_in_span(p: Prime, basis: &[Vec<u32>], target: &[u32]) -> Option<Vec<u32>> {
    let n = target.len();
    let k = basis.len();
    // Columns are the basis vectors, augmented by the target.
    let mut rows: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut r: Vec<u32> = basis.iter().map(|b| b[i]).collect();
            r.push(target[i]);
            r
        })
        .collect();
    let pivots = rref(p, &mut rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut sol = vec![0u32; k];
    for (row, &pc) in rows.iter().zip(&pivots) {
        sol[pc] = row[k];
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_vec(p: Prime, rows: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
        rows.iter()
            .map(|r| r.iter().zip(v).fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b))))
            .collect()
    }

    #[test]
    fn nullspace_is_annihilated() {
        let p = Prime::new(3).unwrap();
        let a = vec![vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 0, 0]];
        let ns = nullspace(p, &a, 4);
        assert_eq!(ns.len(), 4 - rank(p, &a, 4));
        for v in &ns {
            assert!(mat_vec(p, &a, v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn span_membership() {
        let p = Prime::new(5).unwrap();
        let basis = vec![vec![1, 0, 2], vec![0, 1, 3]];
        assert_eq!(solve_in_span(p, &basis, &[2, 3, p.add(4, 9 % 5)]), Some(vec![2, 3]));
        assert_eq!(solve_in_span(p, &basis, &[0, 0, 1]), None);
        assert_eq!(independent_subset(p, &[vec![1, 1], vec![2, 2], vec![0, 1]], 2), vec![0, 2]);
    }
}
