//! Exact linear algebra: kernel computation over a field, and a
//! fraction-free (Bareiss) integer path used by the guessing code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Minimal field interface for exact Gaussian elimination.
pub trait Field: Clone + PartialEq {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn f_is_zero(&self) -> bool;
    fn f_add(&self, other: &Self) -> Self;
    fn f_sub(&self, other: &Self) -> Self;
    fn f_mul(&self, other: &Self) -> Self;
    fn f_div(&self, other: &Self) -> Self;
}

impl Field for crate::gauss::Gaussian {
    fn f_zero() -> Self {
        crate::gauss::Gaussian::zero()
    }
    fn f_one() -> Self {
        crate::gauss::Gaussian::one()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_add(&self, other: &Self) -> Self {
        self + other
    }
    fn f_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn f_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn f_div(&self, other: &Self) -> Self {
        self / other
    }
}

impl Field for crate::poly::RatFunc {
    fn f_zero() -> Self {
        crate::poly::RatFunc::zero()
    }
    fn f_one() -> Self {
        crate::poly::RatFunc::one()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn f_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn f_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn f_div(&self, other: &Self) -> Self {
        self.div(other).expect("division by zero in elimination")
    }
}

impl Field for crate::rat::Rat {
    fn f_zero() -> Self {
        num_traits::Zero::zero()
    }
    fn f_one() -> Self {
        num_traits::One::one()
    }
    fn f_is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn f_add(&self, other: &Self) -> Self {
        self + other
    }
    fn f_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn f_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn f_div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Kernel basis of the linear map given by `mat` (rows x cols) over a field.
/// Returns vectors v with mat * v = 0; the v's set one free variable to 1.
pub fn kernel_basis<F: Field>(mat: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = mat.to_vec();
    let rows = m.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        // Find a pivot row.
        let mut sel = None;
        for r in rank..rows {
            if !m[r][col].f_is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        m.swap(rank, sel);
        let inv_pivot = F::f_one().f_div(&m[rank][col]);
        for c in col..cols {
            m[rank][c] = m[rank][c].f_mul(&inv_pivot);
        }
        for r in 0..rows {
            if r != rank && !m[r][col].f_is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = factor.f_mul(&m[rank][c]);
                    m[r][c] = m[r][c].f_sub(&delta);
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_row_of_col[col] = Some(rank);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_row_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![F::f_zero(); cols];
        v[free] = F::f_one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            // pivot entry is 1; v[pc] = -m[r][free]
            if !m[r][free].f_is_zero() {
                v[pc] = F::f_zero().f_sub(&m[r][free]);
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mat: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..cols {
        let mut sel = None;
        for r in rank..rows {
            if !m[r][col].is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        m.swap(rank, sel);
        let pivot = m[rank][col].clone();
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let t = &pivot * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = &t / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Kernel basis of an integer matrix, as primitive integer vectors.
///
/// Fraction-free forward elimination (Bareiss) keeps all intermediate
/// entries integral; back-substitution runs over rationals and each basis
/// vector is scaled to coprime integers.
pub fn kernel_basis_int(mat: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let rows = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..cols {
        let mut sel = None;
        for r in rank..rows {
            if !m[r][col].is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        m.swap(rank, sel);
        let pivot = m[rank][col].clone();
        for r in (rank + 1)..rows {
            for c in 0..cols {
                if c == col {
                    continue;
                }
                let t = &pivot * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = &t / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Back-substitute per free column over Q, then clear to primitive integers.
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![crate::rat::Rat::zero(); cols];
        v[free] = crate::rat::Rat::one();
        // Solve upward: rows rank-1 .. 0.
        for r in (0..rank).rev() {
            let pc = pivot_cols[r];
            // m[r][pc] * v[pc] + sum_{c > pc} m[r][c] * v[c] = 0
            let mut acc = crate::rat::Rat::zero();
            for c in (pc + 1)..cols {
                if !m[r][c].is_zero() && !num_traits::Zero::is_zero(&v[c]) {
                    acc += crate::rat::Rat::from_integer(m[r][c].clone()) * v[c].clone();
                }
            }
            v[pc] = -acc / crate::rat::Rat::from_integer(m[r][pc].clone());
        }
        // Primitive integer scaling.
        let mut lcm = BigInt::one();
        for x in &v {
            lcm = lcm.lcm(x.denom());
        }
        let mut ints: Vec<BigInt> = v
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for x in ints.iter_mut() {
                *x = &*x / &g;
            }
        }
        // First nonzero coordinate positive.
        if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in ints.iter_mut() {
                    *x = -&*x;
                }
            }
        }
        basis.push(ints);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, Rat};

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // x + y + z = 0; x + 2y + 3z = 0  => kernel spanned by (1, -2, 1)
        let mat = vec![
            vec![rat_int(1), rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(2), rat_int(3)],
        ];
        let basis = kernel_basis::<Rat>(&mat, 3);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        // Check on both rows.
        for row in &mat {
            let mut acc = Rat::zero();
            for (a, b) in row.iter().zip(v.iter()) {
                acc += a.clone() * b.clone();
            }
            assert!(num_traits::Zero::is_zero(&acc));
        }
    }

    #[test]
    fn int_kernel_is_primitive() {
        let mat = vec![
            vec![bi(2), bi(4), bi(6)],
            vec![bi(1), bi(2), bi(3)],
        ];
        let basis = kernel_basis_int(&mat, 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let mut acc = BigInt::zero();
            for (a, b) in mat[0].iter().zip(v.iter()) {
                acc += a * b;
            }
            assert!(acc.is_zero());
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            assert!(g.is_one());
            assert!(!v.iter().find(|x| !x.is_zero()).unwrap().is_negative());
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let mat = vec![
            vec![bi(1), bi(0)],
            vec![bi(0), bi(1)],
        ];
        assert!(kernel_basis_int(&mat, 2).is_empty());
        assert_eq!(bareiss_rank(&mat), 2);
    }
}
