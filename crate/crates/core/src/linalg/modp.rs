//! Gaussian elimination over the prime field Z_p.

use super::IntMatrix;

fn reduce(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let pi = p as i64;
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|&x| x.rem_euclid(pi) as u64).collect())
        .collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and small.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Reduced row echelon form mod `p`; returns the nonzero rows and pivot columns.
pub fn rref(m: &IntMatrix, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut a = reduce(m, p);
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(src) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, src);
        let inv = inv_mod(a[r][c], p);
        for x in a[r][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = (*x + (p - f) * y % p) % p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

/// Rank over Z_p (forward elimination only).
pub fn rank(m: &IntMatrix, p: u64) -> usize {
    let mut a = reduce(m, p);
    let mut r = 0;
    for c in 0..m.cols() {
        let Some(src) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, src);
        let inv = inv_mod(a[r][c], p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = row[c] * inv % p;
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if y != 0 {
                    *x = (*x + (p - f) * y % p) % p;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Basis of `{x : m x = 0}` over Z_p, one vector per free column, in column order.
pub fn kernel_basis(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let (rows, pivots) = rref(m, p);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[free]) % p;
            }
            v
        })
        .collect()
}

/// Whether `m x = b` has a solution over Z_p.
pub fn solvable(m: &IntMatrix, b: &[i64], p: u64) -> bool {
    rank(m, p) == rank(&m.hconcat(&IntMatrix::column(b)), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&m, 5), 1);
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank(&m, 2), 1);
        assert_eq!(rank(&m, 3), 2);
        assert_eq!(rank(&IntMatrix::zeros(3, 0), 3), 0);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        for p in [2u64, 3, 5, 7] {
            let k = kernel_basis(&m, p);
            assert_eq!(k.len(), 4 - rank(&m, p));
            for v in &k {
                let v: Vec<i64> = v.iter().map(|&x| x as i64).collect();
                assert!(m.mul_vec(&v).iter().all(|x| x.rem_euclid(p as i64) == 0));
            }
        }
    }

    #[test]
    fn solvability() {
        let m = IntMatrix::from_rows(&[vec![2], vec![0]]);
        assert!(solvable(&m, &[1, 0], 3));
        assert!(!solvable(&m, &[1, 0], 2));
        assert!(!solvable(&m, &[0, 1], 3));
    }
}
