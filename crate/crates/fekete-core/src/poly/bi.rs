//! Bivariate polynomials h(X, Y) over the Gaussian rationals.
//!
//! Stored as rows by Y-degree: `rows[j]` is the UniPoly in X multiplying Y^j.
//! Canonical form keeps the top row nonzero, so the bidegree is tight in both
//! variables (each row is itself canonical).

use std::fmt;

use num_traits::Zero;

use crate::gauss::Gaussian;
use crate::poly::series::Series;
use crate::poly::uni::UniPoly;
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    rows: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<UniPoly>) -> Self {
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }

    /// Integer grid, rows indexed by Y-degree and columns by X-degree.
    pub fn from_int_grid(grid: &[Vec<i64>]) -> Self {
        BiPoly::from_rows(grid.iter().map(|row| UniPoly::from_ints(row)).collect())
    }

    fn normalize(&mut self) {
        while self.rows.last().map_or(false, |r| r.is_zero()) {
            self.rows.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        if self.rows.is_empty() {
            None
        } else {
            Some(self.rows.len() - 1)
        }
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.degree()).max()
    }

    /// Max of alpha + beta over nonzero coefficients of X^alpha Y^beta.
    pub fn total_degree(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (beta, row) in self.rows.iter().enumerate() {
            for (alpha, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    best = Some(best.map_or(alpha + beta, |b| b.max(alpha + beta)));
                }
            }
        }
        best
    }

    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> UniPoly {
        self.rows.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn coeff(&self, alpha: usize, beta: usize) -> Gaussian {
        self.row(beta).coeff(alpha)
    }

    pub fn is_real(&self) -> bool {
        self.rows.iter().all(|r| r.is_real())
    }

    // ---- Arithmetic ----

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(other.rows.len());
        let mut rows = Vec::with_capacity(n);
        for j in 0..n {
            rows.push(self.row(j).add(&other.row(j)));
        }
        BiPoly::from_rows(rows)
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(other.rows.len());
        let mut rows = Vec::with_capacity(n);
        for j in 0..n {
            rows.push(self.row(j).sub(&other.row(j)));
        }
        BiPoly::from_rows(rows)
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![UniPoly::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                rows[i + j] = rows[i + j].add(&a.mul(b));
            }
        }
        BiPoly::from_rows(rows)
    }

    pub fn scale(&self, c: &Gaussian) -> BiPoly {
        BiPoly::from_rows(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn derivative_x(&self) -> BiPoly {
        BiPoly::from_rows(self.rows.iter().map(|r| r.derivative()).collect())
    }

    pub fn derivative_y(&self) -> BiPoly {
        if self.rows.len() <= 1 {
            return BiPoly::zero();
        }
        let mut rows = Vec::with_capacity(self.rows.len() - 1);
        for (j, r) in self.rows.iter().enumerate().skip(1) {
            rows.push(r.scale(&Gaussian::from_int(j as i64)));
        }
        BiPoly::from_rows(rows)
    }

    // ---- Evaluation ----

    pub fn eval(&self, x: &Gaussian, y: &Gaussian) -> Gaussian {
        let mut acc = Gaussian::zero();
        for r in self.rows.iter().rev() {
            acc = &(&acc * y) + &r.eval(x);
        }
        acc
    }

    /// h(0, Y) as a univariate polynomial in Y.
    pub fn eval_x_zero(&self) -> UniPoly {
        UniPoly::from_coeffs(self.rows.iter().map(|r| r.coeff(0)).collect())
    }

    /// Substitute a truncated series for Y: h(X, g(X)) mod X^n.
    ///
    /// Horner scheme in Y; the X-polynomials are folded into the series.
    pub fn compose_series(&self, g: &Series, n: usize) -> Series {
        let mut acc = Series::zero(n);
        for r in self.rows.iter().rev() {
            acc = acc.mul_trunc(g, n).add(&Series::from_unipoly(r, n));
        }
        acc
    }

    /// Apply a Gaussian-rational substitution Y := c, giving a UniPoly in X.
    pub fn eval_y_const(&self, c: &Gaussian) -> UniPoly {
        let mut acc = UniPoly::zero();
        for r in self.rows.iter().rev() {
            acc = acc.scale(c).add(r);
        }
        acc
    }

    /// Clear denominators and strip integer content across the whole grid,
    /// normalizing the sign of the lexicographically first nonzero entry
    /// (X-degree major, then Y-degree).
    pub fn primitive_integer_form(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        // Flatten X-degree major so the sign normalization matches the
        // witness convention (first nonzero coordinate positive).
        let mut flat: Vec<Gaussian> = Vec::new();
        let dx = self.deg_x().unwrap_or(0);
        for alpha in 0..=dx {
            for row in &self.rows {
                flat.push(row.coeff(alpha));
            }
        }
        let stride = self.rows.len();
        let first_idx = flat.iter().position(|c| !c.is_zero()).expect("nonzero BiPoly");
        let mut lcm = num_bigint::BigInt::from(1);
        for c in &flat {
            lcm = num_integer::lcm(lcm, c.re.denom().clone());
            lcm = num_integer::lcm(lcm, c.im.denom().clone());
        }
        let scaled: Vec<Gaussian> = flat
            .iter()
            .map(|c| c * &Gaussian::from_rat(Rat::from_integer(lcm.clone())))
            .collect();
        let mut content = num_bigint::BigInt::zero();
        for c in &scaled {
            content = num_integer::Integer::gcd(&content, c.re.numer());
            content = num_integer::Integer::gcd(&content, c.im.numer());
        }
        if content.is_zero() {
            content = num_bigint::BigInt::from(1);
        }
        let mut out: Vec<Gaussian> = scaled
            .iter()
            .map(|c| {
                Gaussian::new(
                    Rat::from_integer(c.re.numer() / &content),
                    Rat::from_integer(c.im.numer() / &content),
                )
            })
            .collect();
        let lead = &out[first_idx];
        let flip = if !lead.re.is_zero() {
            lead.re < Rat::zero()
        } else {
            lead.im < Rat::zero()
        };
        if flip {
            for c in out.iter_mut() {
                *c = -&*c;
            }
        }
        // Un-flatten.
        let mut rows = vec![Vec::new(); stride];
        for (k, c) in out.into_iter().enumerate() {
            rows[k % stride].push(c);
        }
        BiPoly::from_rows(rows.into_iter().map(UniPoly::from_coeffs).collect())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, r) in self.rows.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "[{}]", r)?;
            } else {
                write!(f, "[{}]*Y^{}", r, j)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bidegree_is_tight() {
        let h = BiPoly::from_int_grid(&[vec![1, 0], vec![0, 0], vec![0, 0]]);
        assert_eq!(h.deg_y(), Some(0));
        assert_eq!(h.deg_x(), Some(0));
    }

    #[test]
    fn catalan_annihilator_shape() {
        // X*Y^2 - Y + 1
        let h = BiPoly::from_int_grid(&[vec![1], vec![-1], vec![0, 1]]);
        assert_eq!(h.deg_x(), Some(1));
        assert_eq!(h.deg_y(), Some(2));
        assert_eq!(h.total_degree(), Some(3));
    }

    #[test]
    fn eval_matches_structure() {
        let h = BiPoly::from_int_grid(&[vec![1], vec![-1], vec![0, 1]]);
        let x = Gaussian::from_int(2);
        let y = Gaussian::from_int(3);
        // 2*9 - 3 + 1 = 16
        assert_eq!(h.eval(&x, &y), Gaussian::from_int(16));
    }

    #[test]
    fn derivative_xy() {
        let h = BiPoly::from_int_grid(&[vec![0, 0, 1], vec![0, 1]]); // X^2 + XY
        assert_eq!(h.derivative_x(), BiPoly::from_int_grid(&[vec![0, 2], vec![1]]));
        assert_eq!(h.derivative_y(), BiPoly::from_int_grid(&[vec![0, 1]]));
    }
}
