use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::{Rat, Ring, UniPoly};

/// Polynomial in `x` and `T`, stored as a dense list of `x`-polynomials
/// indexed by the power of `T`. No trailing zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    t_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn from_t_coeffs(mut t_coeffs: Vec<UniPoly>) -> Self {
        while t_coeffs.last().is_some_and(UniPoly::is_zero) {
            t_coeffs.pop();
        }
        BiPoly { t_coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { t_coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_uni(UniPoly::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_uni(UniPoly::constant(c))
    }

    pub fn from_uni(p: UniPoly) -> Self {
        Self::from_t_coeffs(vec![p])
    }

    /// `p(x) * T^j`
    pub fn from_uni_t_power(p: UniPoly, j: usize) -> Self {
        let mut t_coeffs = vec![UniPoly::zero(); j];
        t_coeffs.push(p);
        Self::from_t_coeffs(t_coeffs)
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        Self::from_uni_t_power(UniPoly::one(), 1)
    }

    /// Builds a polynomial in `T` alone from ascending rational coefficients.
    pub fn from_t_scalars(coeffs: Vec<Rat>) -> Self {
        Self::from_t_coeffs(coeffs.into_iter().map(UniPoly::constant).collect())
    }

    pub fn t_coeffs(&self) -> &[UniPoly] {
        &self.t_coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.t_coeffs.is_empty()
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.t_coeffs.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.t_coeffs.iter().filter_map(UniPoly::degree).max()
    }

    /// Coefficient of `T^j`; the zero polynomial past the `T`-degree.
    pub fn coeff_of_t(&self, j: usize) -> UniPoly {
        self.t_coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^i`, a polynomial in `T` returned as a `BiPoly`.
    pub fn coeff_of_x(&self, i: usize) -> BiPoly {
        BiPoly::from_t_scalars(self.t_coeffs.iter().map(|p| p.coeff(i)).collect())
    }

    /// The coefficient of the highest power of `x`, as a polynomial in `T`.
    pub fn leading_x_coeff(&self) -> BiPoly {
        match self.deg_x() {
            Some(k) => self.coeff_of_x(k),
            None => BiPoly::zero(),
        }
    }

    /// Substitutes `T = t`.
    pub fn eval_t(&self, t: &Rat) -> UniPoly {
        self.t_coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &acc.scale(t) + c)
    }

    /// Substitutes `x = v`; the result is a polynomial in `T` with no `x`.
    pub fn eval_x(&self, v: &Rat) -> BiPoly {
        BiPoly::from_t_scalars(self.t_coeffs.iter().map(|p| p.eval(v)).collect())
    }

    /// `true` when `T` does not occur.
    pub fn is_t_free(&self) -> bool {
        self.t_coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_t_coeffs(self.t_coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_uni(&self, p: &UniPoly) -> Self {
        Self::from_t_coeffs(self.t_coeffs.iter().map(|c| c * p).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Exact division in `Q[x][T]`, by repeated elimination of the leading
    /// `T`-coefficient. Fails if the divisor does not divide `self`.
    pub fn exact_div(&self, divisor: &BiPoly) -> Result<BiPoly> {
        let dd = divisor.deg_t().ok_or(Error::DivisionByZero)?;
        let lead = &divisor.t_coeffs[dd];
        let mut rem = self.t_coeffs.clone();
        let Some(sd) = self.deg_t() else {
            return Ok(BiPoly::zero());
        };
        if sd < dd {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![UniPoly::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            if rem[i + dd].is_zero() {
                continue;
            }
            let c = rem[i + dd].exact_div(lead)?;
            for (j, dc) in divisor.t_coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(BiPoly::from_t_coeffs(quot))
    }

    fn add_impl(&self, rhs: &BiPoly, negate_rhs: bool) -> BiPoly {
        let len = self.t_coeffs.len().max(rhs.t_coeffs.len());
        let zero = UniPoly::zero();
        let t_coeffs = (0..len)
            .map(|i| {
                let a = self.t_coeffs.get(i).unwrap_or(&zero);
                let b = rhs.t_coeffs.get(i).unwrap_or(&zero);
                if negate_rhs {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        BiPoly::from_t_coeffs(t_coeffs)
    }

    fn mul_impl(&self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.t_coeffs.len() + rhs.t_coeffs.len() - 1];
        for (i, a) in self.t_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.t_coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BiPoly::from_t_coeffs(out)
    }
}

/// `(x - 2) + (-x + 3)*T` style: ascending powers of `T`, each `x`-part
/// rendered in descending powers.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.t_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let t_part = match j {
                0 => String::new(),
                1 => "*T".to_string(),
                _ => format!("*T^{j}"),
            };
            write!(f, "({c}){t_part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl From<UniPoly> for BiPoly {
    fn from(p: UniPoly) -> Self {
        BiPoly::from_uni(p)
    }
}

impl From<Rat> for BiPoly {
    fn from(c: Rat) -> Self {
        BiPoly::constant(c)
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, false)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, true)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg_ref(&self) -> Self {
        BiPoly {
            t_coeffs: self.t_coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        BiPoly::exact_div(self, rhs)
    }
}

super::forward_ring_ops!(BiPoly);
