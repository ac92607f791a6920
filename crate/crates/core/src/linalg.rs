//! Dense matrices over an exact ring, determinants, and the moment-block
//! builder `<h(t), Γ>_v`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{BiPoly, Rat, Ring, UniPoly};
use crate::error::{Error, Result};

/// Ordered list of pairwise distinct rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RootList(Vec<Rat>);

impl RootList {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        for (i, a) in values.iter().enumerate() {
            if values[..i].contains(a) {
                return Err(Error::DuplicateRoot(a.to_string()));
            }
        }
        Ok(RootList(values))
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Rat::from(v)).collect())
    }

    pub fn empty() -> Self {
        RootList(Vec::new())
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    /// List concatenation; fails if the two lists share a value.
    pub fn concat(&self, other: &RootList) -> Result<RootList> {
        let mut values = self.0.clone();
        values.extend(other.0.iter().cloned());
        RootList::new(values)
    }

    /// The monic polynomial with exactly these roots.
    pub fn poly(&self) -> UniPoly {
        UniPoly::from_roots(&self.0)
    }
}

impl fmt::Debug for RootList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a RootList {
    type Item = &'a Rat;
    type IntoIter = std::slice::Iter<'a, Rat>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

pub type PolyMatrix = Matrix<BiPoly>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Domain("ragged rows".to_string()));
        }
        Ok(Matrix {
            rows: n_rows,
            cols: n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Copy with the given rows and columns removed.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Stacks `self` above `below`.
    pub fn vstack(&self, below: &Matrix<R>) -> Result<Self> {
        if self.cols != below.cols && self.rows != 0 && below.rows != 0 {
            return Err(Error::Domain(format!(
                "vstack of {} and {} columns",
                self.cols, below.cols
            )));
        }
        let cols = if self.rows == 0 { below.cols } else { self.cols };
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + below.rows,
            cols,
            entries,
        })
    }

    /// Places `right` to the right of `self`.
    pub fn hstack(&self, right: &Matrix<R>) -> Result<Self> {
        if self.rows != right.rows {
            return Err(Error::Domain(format!(
                "hstack of {} and {} rows",
                self.rows, right.rows
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + right.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                right.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn mul(&self, rhs: &Matrix<R>) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, t| {
                let a = self.get(i, t);
                let b = rhs.get(t, j);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc.add_ref(&a.mul_ref(b))
                }
            })
        }))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Determinant by recursive cofactor expansion along the first row.
    pub fn det_laplace(&self) -> Result<R> {
        self.require_square()?;
        Ok(laplace(self))
    }

    /// Fraction-free (Bareiss) elimination. Every division is exact in the
    /// entry ring; a zero pivot is replaced by the first lower row with a
    /// nonzero entry in that column.
    pub fn det_bareiss(&self) -> Result<R> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Ok(R::zero());
                };
                m.swap_rows(k, swap);
                negate = !negate;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                let lead = m.get(i, k).clone();
                for j in k + 1..n {
                    let num = m.get(i, j).mul_ref(&pivot).sub_ref(&lead.mul_ref(m.get(k, j)));
                    let value = if num.is_zero() { num } else { num.exact_div(&prev)? };
                    m.set(i, j, value);
                }
                m.set(i, k, R::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg_ref() } else { d })
    }

    /// Laplace expansion up to 4x4, Bareiss above. The empty matrix has
    /// determinant 1.
    pub fn det(&self) -> Result<R> {
        if self.rows <= 4 {
            self.det_laplace()
        } else {
            self.det_bareiss()
        }
    }
}

impl Matrix<Rat> {
    /// Determinant of a rational matrix: each row is scaled to integers by
    /// the lcm of its denominators, then Bareiss runs over `BigInt`, where
    /// every division is exact and no gcd is taken.
    pub fn det_integral(&self) -> Result<Rat> {
        self.require_square()?;
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                scale *= &lcm;
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(Rat::zero());
                };
                m.swap(k, swap);
                negate = !negate;
            }
            let (top, bottom) = m.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                let lead = std::mem::take(&mut row[k]);
                for j in k + 1..n {
                    let num = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                    row[j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let last = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
        let det = Rat::new(last, scale)?;
        Ok(if negate { -det } else { det })
    }
}

impl Matrix<BiPoly> {
    /// Determinant by evaluation at an integer grid in `(x, T)` and Lagrange
    /// interpolation. The grid is sized from row and column degree bounds, so
    /// the result is exact; it agrees with `det_bareiss` and is much faster
    /// for large polynomial matrices.
    pub fn det_interpolated(&self) -> Result<BiPoly> {
        self.require_square()?;
        if self.rows <= 2 {
            return self.det_laplace();
        }
        let (Some(bound_x), Some(bound_t)) = (
            self.degree_bound(BiPoly::deg_x),
            self.degree_bound(BiPoly::deg_t),
        ) else {
            return Ok(BiPoly::zero());
        };
        let xs: Vec<Rat> = (0..=bound_x as i64).map(Rat::from).collect();
        let ts: Vec<Rat> = (0..=bound_t as i64).map(Rat::from).collect();
        let mut slices = Vec::with_capacity(ts.len());
        for t in &ts {
            let at_t = self.map(|e| e.eval_t(t));
            let values = xs
                .iter()
                .map(|x| at_t.map(|e| e.eval(x)).det_integral())
                .collect::<Result<Vec<_>>>()?;
            slices.push(interpolate(&xs, &values));
        }
        let basis = lagrange_basis(&ts);
        let mut t_coeffs = vec![UniPoly::zero(); ts.len()];
        for (slice, l) in slices.iter().zip(&basis) {
            for (k, c) in l.coeffs().iter().enumerate() {
                t_coeffs[k] = &t_coeffs[k] + &slice.scale(c);
            }
        }
        Ok(BiPoly::from_t_coeffs(t_coeffs))
    }

    /// Upper bound on a degree of the determinant; `None` if some row or
    /// column is identically zero.
    fn degree_bound(&self, deg: impl Fn(&BiPoly) -> Option<usize>) -> Option<usize> {
        let n = self.rows;
        let line_max = |cells: &mut dyn Iterator<Item = &BiPoly>| cells.filter_map(&deg).max();
        let mut by_rows = 0;
        let mut by_cols = 0;
        for i in 0..n {
            by_rows += line_max(&mut self.row(i).iter())?;
            by_cols += line_max(&mut (0..n).map(|r| self.get(r, i)))?;
        }
        Some(by_rows.min(by_cols))
    }
}

/// Lagrange basis polynomials for distinct nodes.
fn lagrange_basis(nodes: &[Rat]) -> Vec<UniPoly> {
    (0..nodes.len())
        .map(|j| {
            let others: Vec<Rat> = nodes
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, v)| v.clone())
                .collect();
            let denom: Rat = others.iter().map(|v| &nodes[j] - v).product();
            UniPoly::from_roots(&others).scale(&(Rat::one() / denom))
        })
        .collect()
}

/// The unique polynomial of degree `< nodes.len()` through the given values.
pub fn interpolate(nodes: &[Rat], values: &[Rat]) -> UniPoly {
    lagrange_basis(nodes)
        .iter()
        .zip(values)
        .filter(|(_, v)| !v.is_zero())
        .fold(UniPoly::zero(), |acc, (l, v)| &acc + &l.scale(v))
}

fn laplace<R: Ring>(m: &Matrix<R>) -> R {
    match m.rows {
        0 => R::one(),
        1 => m.get(0, 0).clone(),
        2 => m
            .get(0, 0)
            .mul_ref(m.get(1, 1))
            .sub_ref(&m.get(0, 1).mul_ref(m.get(1, 0))),
        n => {
            let mut acc = R::zero();
            for j in 0..n {
                let a = m.get(0, j);
                if a.is_zero() {
                    continue;
                }
                let term = a.mul_ref(&laplace(&m.minor(0, j)));
                acc = if j % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
            acc
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The weight `h(t)` applied to each column of a moment block.
#[derive(Clone, Copy, Debug)]
pub enum Kernel<'a> {
    /// `h = 1`
    One,
    /// `h = T`, the auxiliary indeterminate
    T,
    /// `h = x - t`
    XMinusT,
    /// `h = g(t)` for a fixed polynomial `g`
    Poly(&'a UniPoly),
}

/// The `v x |Γ|` matrix with entry `(i, j) = γ_j^i h(γ_j)`, rows counted
/// from zero.
pub fn block(kernel: Kernel<'_>, gamma: &RootList, v: usize) -> PolyMatrix {
    let weights: Vec<BiPoly> = gamma
        .iter()
        .map(|g| match kernel {
            Kernel::One => BiPoly::one(),
            Kernel::T => BiPoly::t(),
            Kernel::XMinusT => BiPoly::from_uni(UniPoly::linear(g)),
            Kernel::Poly(h) => BiPoly::constant(h.eval(g)),
        })
        .collect();
    let mut powers: Vec<Rat> = vec![Rat::one(); gamma.len()];
    let mut m = PolyMatrix::zeros(v, gamma.len());
    for i in 0..v {
        for (j, w) in weights.iter().enumerate() {
            m.set(i, j, w.scale(&powers[j]));
            powers[j] = &powers[j] * &gamma.values()[j];
        }
    }
    m
}

/// `det(γ_j^(i-1))`, computed from the pairwise-difference product.
pub fn vandermonde(gamma: &RootList) -> Rat {
    let v = gamma.values();
    let mut acc = Rat::one();
    for j in 0..v.len() {
        for i in 0..j {
            acc = &acc * &(&v[j] - &v[i]);
        }
    }
    acc
}

/// `R(Y, Z) = prod_{y in Y, z in Z} (y - z)`, 1 when either list is empty.
pub fn r_product(ys: &[Rat], zs: &[Rat]) -> Rat {
    let mut acc = Rat::one();
    for y in ys {
        for z in zs {
            acc = &acc * &(y - z);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> BiPoly {
        BiPoly::from_uni(UniPoly::from_ints(c))
    }

    fn c(v: i64) -> BiPoly {
        BiPoly::constant(Rat::from(v))
    }

    fn roots(v: &[i64]) -> RootList {
        RootList::from_ints(v).unwrap()
    }

    #[test]
    fn root_list_rejects_duplicates() {
        assert_eq!(RootList::from_ints(&[1, 1]), Err(Error::DuplicateRoot("1".into())));
        assert!(roots(&[1, 2]).concat(&roots(&[2])).is_err());
    }

    #[test]
    fn block_examples() {
        let m = block(Kernel::One, &roots(&[2, 3]), 2);
        assert_eq!(m, Matrix::from_rows(vec![vec![c(1), c(1)], vec![c(2), c(3)]]).unwrap());

        let m = block(Kernel::XMinusT, &roots(&[3]), 2);
        assert_eq!(m, Matrix::from_rows(vec![vec![p(&[-3, 1])], vec![p(&[-9, 3])]]).unwrap());

        let m = block(Kernel::T, &roots(&[2]), 1);
        assert_eq!(m.get(0, 0), &BiPoly::t());

        let g = UniPoly::from_ints(&[12, -7, 1]);
        let m = block(Kernel::Poly(&g), &roots(&[1, 2]), 2);
        assert_eq!(m.row(1), &[c(6), c(4)]);

        let empty = block(Kernel::One, &roots(&[1, 2]), 0);
        assert_eq!((empty.rows(), empty.cols()), (0, 2));
    }

    #[test]
    fn determinant_examples() {
        let m = Matrix::from_rows(vec![vec![c(1), c(1)], vec![c(1), c(2)]]).unwrap();
        assert_eq!(m.det().unwrap(), c(1));
        let m = Matrix::from_rows(vec![vec![c(1), p(&[-2, 1])], vec![c(1), p(&[-3, 1])]]).unwrap();
        assert_eq!(m.det().unwrap(), c(-1));
        assert_eq!(m.det_bareiss().unwrap(), c(-1));
        // [[1, T], [x - 3, x - 2]]
        let u = Matrix::from_rows(vec![vec![c(1), BiPoly::t()], vec![p(&[-3, 1]), p(&[-2, 1])]]).unwrap();
        let expected = BiPoly::from_t_coeffs(vec![UniPoly::from_ints(&[-2, 1]), UniPoly::from_ints(&[3, -1])]);
        assert_eq!(u.det().unwrap(), expected);
        assert_eq!(u.det_bareiss().unwrap(), expected);
    }

    #[test]
    fn empty_determinant_is_one() {
        let m: PolyMatrix = Matrix::zeros(0, 0);
        assert_eq!(m.det().unwrap(), BiPoly::one());
        assert_eq!(m.det_bareiss().unwrap(), BiPoly::one());
    }

    #[test]
    fn non_square_is_rejected() {
        let m: PolyMatrix = Matrix::zeros(2, 3);
        assert_eq!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert_eq!(m.det_bareiss(), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn bareiss_pivots_past_zero_entries() {
        let m = Matrix::from_rows(vec![
            vec![c(0), c(0), c(1), c(2), c(0)],
            vec![c(0), c(3), c(0), c(0), c(1)],
            vec![c(2), c(0), c(0), c(1), c(0)],
            vec![c(1), c(1), c(1), c(1), c(1)],
            vec![c(0), c(1), c(0), c(4), c(0)],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), m.det_laplace().unwrap());
        let singular = Matrix::from_rows(vec![
            vec![c(0), c(1), c(2)],
            vec![c(0), c(3), c(4)],
            vec![c(0), c(5), c(6)],
        ])
        .unwrap();
        assert_eq!(singular.det_bareiss().unwrap(), BiPoly::zero());
    }

    #[test]
    fn interpolated_det_matches_bareiss() {
        let a = roots(&[1, -2, 3]);
        let b = roots(&[4, 5]);
        let m = block(Kernel::XMinusT, &a, 3)
            .hstack(&block(Kernel::One, &b, 3))
            .unwrap()
            .vstack(&block(Kernel::T, &a, 2).hstack(&block(Kernel::XMinusT, &b, 2)).unwrap())
            .unwrap();
        assert_eq!(m.det_interpolated().unwrap(), m.det_bareiss().unwrap());
        let zero_col = Matrix::from_fn(3, 3, |i, j| if j == 1 { BiPoly::zero() } else { BiPoly::from_uni_t_power(UniPoly::x(), i + j) });
        assert_eq!(zero_col.det_interpolated().unwrap(), BiPoly::zero());
    }

    #[test]
    fn interpolation_through_points() {
        let nodes: Vec<Rat> = (0..4).map(Rat::from).collect();
        let p = UniPoly::from_ints(&[3, 0, -2, 1]);
        let values: Vec<Rat> = nodes.iter().map(|v| p.eval(v)).collect();
        assert_eq!(interpolate(&nodes, &values), p);
    }

    #[test]
    fn integral_det_matches_rational_bareiss() {
        let q = |n: i64, d: i64| Rat::new(n, d).unwrap();
        let m = Matrix::from_rows(vec![
            vec![q(1, 2), q(-3, 4), q(5, 6), q(0, 1)],
            vec![q(0, 1), q(0, 1), q(2, 3), q(7, 5)],
            vec![q(-1, 7), q(4, 9), q(1, 1), q(3, 2)],
            vec![q(2, 1), q(1, 3), q(0, 1), q(-5, 8)],
        ])
        .unwrap();
        assert_eq!(m.det_integral().unwrap(), m.det_bareiss().unwrap());
        assert_eq!(Matrix::<Rat>::zeros(0, 0).det_integral().unwrap(), Rat::one());
        assert_eq!(Matrix::<Rat>::zeros(3, 3).det_integral().unwrap(), Rat::zero());
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(&roots(&[1, 2])), Rat::from(1));
        assert_eq!(vandermonde(&roots(&[1, 2, 3])), Rat::from(2));
        assert_eq!(vandermonde(&RootList::empty()), Rat::from(1));
        assert_eq!(vandermonde(&roots(&[5])), Rat::from(1));
        let g = roots(&[1, 2, 3]);
        let direct = block(Kernel::One, &g, 3).det().unwrap();
        assert_eq!(direct, BiPoly::constant(Rat::from(2)));
    }

    #[test]
    fn r_product_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| Rat::from(x)).collect::<Vec<_>>();
        assert_eq!(r_product(&ints(&[1, 2]), &ints(&[3, 4])), Rat::from(12));
        assert_eq!(r_product(&[], &ints(&[3])), Rat::from(1));
        assert_eq!(r_product(&ints(&[2]), &ints(&[2])), Rat::from(0));
    }
}
