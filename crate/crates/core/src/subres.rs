//! Determinantal subresultants of two monic polynomials and their Bézout
//! cofactors.
//!
//! For `f` of degree `m` and `g` of degree `n` the `k`-th subresultant is the
//! determinant of an `(m+n-2k)`-square matrix: `n-k` shifted rows of the
//! coefficients of `f` and `m-k` shifted rows of `g`, whose last column holds
//! the polynomials `x^i f` and `x^i g` instead of scalars. Only that column is
//! non-scalar, so the determinant is expanded along it and every cofactor is a
//! rational determinant.

use crate::arith::{BiPoly, Rat, UniPoly};
use crate::error::{Error, Result};
use crate::linalg::{block, vandermonde, Kernel, Matrix, PolyMatrix, RootList};

/// `Sres_k = F_k f + G_k g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorPair {
    pub f_cof: UniPoly,
    pub g_cof: UniPoly,
}

fn degrees(f: &UniPoly, g: &UniPoly) -> Result<(usize, usize)> {
    f.require_monic()?;
    g.require_monic()?;
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!(
            "subresultants need deg f >= 1 and deg g >= 1, got {m} and {n}"
        )));
    }
    Ok((m, n))
}

/// Checks `0 <= k <= m < n` or `0 <= k < m = n` and returns `(m, n)`.
fn validate(f: &UniPoly, g: &UniPoly, k: usize) -> Result<(usize, usize)> {
    let (m, n) = degrees(f, g)?;
    if m > n {
        return Err(Error::Domain(format!(
            "deg f = {m} exceeds deg g = {n}; swap the inputs"
        )));
    }
    let ok = (m < n && k <= m) || (m == n && k < m);
    if !ok {
        return Err(Error::Domain(format!(
            "subresultant index k = {k} out of range for m = {m}, n = {n}"
        )));
    }
    Ok((m, n))
}

/// Entry `(i, j)` of a coefficient band: `c_{top - j + i}`, zero outside
/// `0..=top`.
fn band(coeffs: &UniPoly, top: usize, i: usize, j: usize) -> Rat {
    let idx = (top + i) as i64 - j as i64;
    if idx < 0 {
        Rat::zero()
    } else {
        coeffs.coeff(idx as usize)
    }
}

/// The scalar part of the subresultant matrix (all columns but the last).
fn scalar_block(f: &UniPoly, g: &UniPoly, m: usize, n: usize, k: usize) -> Matrix<Rat> {
    let size = m + n - 2 * k;
    let f_rows = n - k;
    Matrix::from_fn(size, size - 1, |i, j| {
        if i < f_rows {
            band(f, m, i, j)
        } else {
            band(g, n, i - f_rows, j)
        }
    })
}

/// The full `(m+n-2k)`-square subresultant matrix with `x^(n-k-1) f, ..., f,
/// x^(m-k-1) g, ..., g` in the last column.
pub fn sres_matrix(f: &UniPoly, g: &UniPoly, k: usize) -> Result<PolyMatrix> {
    let (m, n) = validate(f, g, k)?;
    let scalars = scalar_block(f, g, m, n, k);
    let size = m + n - 2 * k;
    let f_rows = n - k;
    Ok(Matrix::from_fn(size, size, |i, j| {
        if j + 1 < size {
            BiPoly::constant(scalars.get(i, j).clone())
        } else if i < f_rows {
            BiPoly::from_uni(f.shift(f_rows - 1 - i))
        } else {
            BiPoly::from_uni(g.shift(m - k - 1 - (i - f_rows)))
        }
    }))
}

/// Expands the subresultant determinant along its last column.
fn expand_last_column(f: &UniPoly, g: &UniPoly, k: usize) -> Result<CofactorPair> {
    let (m, n) = validate(f, g, k)?;
    let scalars = scalar_block(f, g, m, n, k);
    let size = m + n - 2 * k;
    let f_rows = n - k;
    let mut f_coeffs = vec![Rat::zero(); f_rows];
    let mut g_coeffs = vec![Rat::zero(); m - k];
    for r in 0..size {
        let minor = Matrix::from_fn(size - 1, size - 1, |i, j| {
            let src = if i < r { i } else { i + 1 };
            scalars.get(src, j).clone()
        })
        .det_integral()?;
        let cofactor = if (r + size - 1).is_multiple_of(2) { minor } else { -minor };
        if r < f_rows {
            f_coeffs[f_rows - 1 - r] = cofactor;
        } else {
            g_coeffs[m - k - 1 - (r - f_rows)] = cofactor;
        }
    }
    Ok(CofactorPair {
        f_cof: UniPoly::from_coeffs(f_coeffs),
        g_cof: UniPoly::from_coeffs(g_coeffs),
    })
}

/// `F_k` and `G_k` with `Sres_k = F_k f + G_k g`.
pub fn cofactors(f: &UniPoly, g: &UniPoly, k: usize) -> Result<CofactorPair> {
    expand_last_column(f, g, k)
}

/// The `k`-th subresultant. For `k = m < n` this is `f` itself.
pub fn sres(f: &UniPoly, g: &UniPoly, k: usize) -> Result<UniPoly> {
    let (m, n) = validate(f, g, k)?;
    if k == m && m < n {
        return Ok(f.clone());
    }
    let cof = expand_last_column(f, g, k)?;
    Ok(&(&cof.f_cof * f) + &(&cof.g_cof * g))
}

/// Coefficient of `x^k` in `Sres_k`; 1 by convention when `k = m = n`.
pub fn scalar_subresultant(f: &UniPoly, g: &UniPoly, k: usize) -> Result<Rat> {
    let (m, n) = degrees(f, g)?;
    if k == m && m == n {
        return Ok(Rat::one());
    }
    Ok(sres(f, g, k)?.coeff(k))
}

/// `Res(f, g)` for monic `f`, `g` of positive degree.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Rat> {
    let (m, n) = degrees(f, g)?;
    if m > n {
        let swapped = resultant(g, f)?;
        return Ok(if (m * n) % 2 == 0 { swapped } else { -swapped });
    }
    Ok(sres(f, g, 0)?.coeff(0))
}

/// Checks `Δ_k(f, g) V(A) = det [<1, A>_k ; <g(t), A>_(m-k)]` where `f` is
/// the monic polynomial with roots `A`.
pub fn dhks_delta_check(a: &RootList, g: &UniPoly, k: usize) -> Result<bool> {
    let m = a.len();
    if k > m {
        return Err(Error::Domain(format!("k = {k} exceeds |A| = {m}")));
    }
    let f = a.poly();
    let delta = scalar_subresultant(&f, g, k)?;
    let lhs = &delta * &vandermonde(a);
    let stacked = block(Kernel::One, a, k).vstack(&block(Kernel::Poly(g), a, m - k))?;
    Ok(stacked.det_interpolated()? == BiPoly::constant(lhs))
}
