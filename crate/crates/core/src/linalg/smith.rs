//! Smith normal form over Z.
//!
//! Elimination runs in `i128` with checked arithmetic and restarts in
//! `BigInt` if an intermediate entry overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

trait Entry: Clone + Sized {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// `(q, r)` with `self = q*d + r`, `|r| < |d|`.
    fn div_rem(&self, d: &Self) -> (Self, Self);
    /// `self - q*other`, or `None` on overflow.
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Entry for i128 {
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        (self / d, self % d)
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*other)?)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Entry for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        Integer::div_rem(self, d)
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        Some(self - q * other)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

struct Overflow;

/// Diagonalizes by unimodular row and column operations; returns the
/// nonzero diagonal entries (not yet in divisibility order).
fn diagonalize<E: Entry>(m: &IntMatrix) -> Result<Vec<E>, Overflow> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<E>> = (0..rows)
        .map(|r| m.row(r).iter().map(|&x| E::from_i64(x)).collect())
        .collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // Pivot: a unit if one exists, otherwise the smallest nonzero entry.
        let mut best: Option<(usize, usize)> = None;
        'search: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if x.is_zero() {
                    continue;
                }
                if x.is_unit() {
                    best = Some((i, j));
                    break 'search;
                }
                if best.is_none_or(|(bi, bj)| x.abs_lt(&a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut().skip(t) {
            row.swap(t, pj);
        }
        loop {
            // Clear column t below the pivot.
            let mut smaller_row = None;
            let (head, tail) = a.split_at_mut(t + 1);
            let pivot_row = &head[t];
            for (off, row) in tail.iter_mut().enumerate() {
                if row[t].is_zero() {
                    continue;
                }
                let (q, r) = row[t].div_rem(&pivot_row[t]);
                for j in t..cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = row[j].sub_mul(&q, &pivot_row[j]).ok_or(Overflow)?;
                    }
                }
                if !r.is_zero() && smaller_row.is_none() {
                    smaller_row = Some(t + 1 + off);
                }
            }
            if let Some(i) = smaller_row {
                a.swap(t, i);
                continue;
            }
            // Column t is now zero below the pivot, so column operations
            // only touch row t.
            let mut smaller_col = None;
            let p = a[t][t].clone();
            for (j, x) in a[t].iter_mut().enumerate().take(cols).skip(t + 1) {
                if x.is_zero() {
                    continue;
                }
                let (_, r) = x.div_rem(&p);
                if !r.is_zero() && smaller_col.is_none() {
                    smaller_col = Some(j);
                }
                *x = r;
            }
            match smaller_col {
                Some(j) => {
                    for row in a.iter_mut().skip(t) {
                        row.swap(t, j);
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    Ok(diag)
}

fn diagonal(m: &IntMatrix) -> Vec<BigInt> {
    match diagonalize::<i128>(m) {
        Ok(d) => d.into_iter().map(Entry::into_big).collect(),
        Err(Overflow) => match diagonalize::<BigInt>(m) {
            Ok(d) => d,
            Err(Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
        },
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` (positive, units included).
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let d: Vec<BigInt> = diagonal(m).into_iter().map(|x| x.abs()).collect();
    let units = d.iter().filter(|x| x.is_one()).count();
    let mut rest: Vec<BigInt> = d.into_iter().filter(|x| !x.is_one()).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            if g != rest[i] {
                let l = &rest[i] / &g * &rest[j];
                rest[i] = g;
                rest[j] = l;
            }
        }
    }
    let mut out = vec![BigInt::one(); units];
    out.extend(rest);
    out
}

pub fn rank(m: &IntMatrix) -> usize {
    diagonal(m).len()
}

/// Whether `m x = b` has an integer solution: the augmented matrix must
/// have the same invariant factors.
pub fn solvable_over_z(m: &IntMatrix, b: &[i64]) -> bool {
    invariant_factors(m) == invariant_factors(&m.hconcat(&IntMatrix::column(b)))
}

/// Whether `m x ≡ b (mod modulus)` is solvable, i.e. `[m | modulus·I] z = b` over Z.
pub fn solvable_mod(m: &IntMatrix, b: &[i64], modulus: u64) -> bool {
    let widened = m.hconcat(&IntMatrix::scalar_identity(m.rows(), modulus as i64));
    solvable_over_z(&widened, b)
}
