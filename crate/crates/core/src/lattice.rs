//! Integer matrices: kernels over ℤ, ranks and lattice saturation.

use alloc::vec::Vec;

use crate::error::{Error, Result};

type Mat = Vec<Vec<i128>>;

fn ck(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::Overflow)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// A basis of `{x ∈ ℤⁿ : A x = 0}` for the `rows × ncols` matrix `a`.
pub fn kernel_basis(a: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let m = a.len();
    // columns of A·U and of U, updated in lockstep
    let mut cols: Mat = (0..ncols).map(|j| a.iter().map(|r| r[j] as i128).collect()).collect();
    let mut u: Mat = (0..ncols).map(|j| (0..ncols).map(|i| (i == j) as i128).collect()).collect();
    let mut p = 0;
    for r in 0..m {
        if p == ncols {
            break;
        }
        for j in p + 1..ncols {
            let b = cols[j][r];
            if b == 0 {
                continue;
            }
            let a0 = cols[p][r];
            if a0 == 0 {
                cols.swap(p, j);
                u.swap(p, j);
                continue;
            }
            let (g, s, t) = ext_gcd(a0, b);
            let (ag, bg) = (a0 / g, b / g);
            let combine = |x: &[i128], y: &[i128]| -> Result<(Vec<i128>, Vec<i128>)> {
                let mut nx = Vec::with_capacity(x.len());
                let mut ny = Vec::with_capacity(x.len());
                for (&xi, &yi) in x.iter().zip(y) {
                    nx.push(ck(ck(s.checked_mul(xi))?.checked_add(ck(t.checked_mul(yi))?))?);
                    ny.push(ck(ck(ag.checked_mul(yi))?.checked_sub(ck(bg.checked_mul(xi))?))?);
                }
                Ok((nx, ny))
            };
            let (cp, cj) = combine(&cols[p], &cols[j])?;
            cols[p] = cp;
            cols[j] = cj;
            let (up, uj) = combine(&u[p], &u[j])?;
            u[p] = up;
            u[j] = uj;
        }
        if cols[p][r] != 0 {
            p += 1;
        }
    }
    u[p..]
        .iter()
        .map(|c| c.iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect())
        .collect()
}

/// Diagonal entries of a diagonal form of the integer matrix with the given
/// rows; their count is the rank.
pub fn diagonal_form(rows: &[Vec<i64>]) -> Result<Vec<i128>> {
    let k = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut m: Mat = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < k.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..k {
            for j in t..n {
                if m[i][j] != 0 && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let piv = m[t][t];
            let mut clean = true;
            for i in t + 1..k {
                let q = m[i][t] / piv;
                if q != 0 {
                    for j in t..n {
                        m[i][j] = ck(m[i][j].checked_sub(ck(q.checked_mul(m[t][j]))?))?;
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = m[t][j] / piv;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] = ck(row[j].checked_sub(ck(q.checked_mul(row[t]))?))?;
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // bring the smallest nonzero remainder in row t or column t to the pivot
            let mut bi = t;
            let mut bj = t;
            for i in t..k {
                if m[i][t] != 0 && m[i][t].abs() < m[bi][bj].abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..n {
                if m[t][j] != 0 && m[t][j].abs() < m[bi][bj].abs() {
                    (bi, bj) = (t, j);
                }
            }
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    Ok(diag)
}

pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    Ok(diagonal_form(rows)?.len())
}

/// Whether the lattice spanned by `rows` equals its saturation in ℤⁿ.
pub fn is_saturated(rows: &[Vec<i64>]) -> Result<bool> {
    Ok(diagonal_form(rows)?.iter().all(|&d| d == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
        a.iter().map(|r| r.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
    }

    #[test]
    fn kernel_of_incidence_matrix_of_square() {
        // vertices x1..x4, edges x1x2, x2x3, x3x4, x4x1
        let a = alloc::vec![
            alloc::vec![1, 0, 0, 1],
            alloc::vec![1, 1, 0, 0],
            alloc::vec![0, 1, 1, 0],
            alloc::vec![0, 0, 1, 1],
        ];
        let k = kernel_basis(&a, 4).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(mul(&a, &k[0]), alloc::vec![0; 4]);
        assert_eq!(k[0].iter().map(|x| x.abs()).collect::<Vec<_>>(), alloc::vec![1, 1, 1, 1]);
    }

    #[test]
    fn saturation_and_rank() {
        assert!(is_saturated(&[alloc::vec![1, -1, 0], alloc::vec![0, 1, -1]]).unwrap());
        assert!(!is_saturated(&[alloc::vec![2, -2, 0]]).unwrap());
        assert!(!is_saturated(&[alloc::vec![1, 1], alloc::vec![1, -1]]).unwrap());
        assert_eq!(rank(&[alloc::vec![1, 2], alloc::vec![2, 4]]).unwrap(), 1);
        assert_eq!(rank(&[]).unwrap(), 0);
    }
}
