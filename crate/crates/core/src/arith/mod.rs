//! Exact scalar and polynomial arithmetic over the rationals.

mod bipoly;
mod poly;
mod rat;
mod ring;

pub use bipoly::BiPoly;
pub use poly::UniPoly;
pub use rat::Rat;
pub use ring::Ring;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

macro_rules! forward_ring_ops {
    ($ty:ty) => {
        impl<'a> Add<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, rhs: &'a $ty) -> $ty {
                Ring::add_ref(self, rhs)
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                Ring::add_ref(&self, &rhs)
            }
        }
        impl<'a> Sub<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, rhs: &'a $ty) -> $ty {
                Ring::sub_ref(self, rhs)
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                Ring::sub_ref(&self, &rhs)
            }
        }
        impl<'a> Mul<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn mul(self, rhs: &'a $ty) -> $ty {
                Ring::mul_ref(self, rhs)
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                Ring::mul_ref(&self, &rhs)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                Ring::neg_ref(self)
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                Ring::neg_ref(&self)
            }
        }
    };
}
pub(crate) use forward_ring_ops;

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Domain(format!("binomial with negative n = {n}")));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

/// `(-1)^e` for any integer `e`.
pub fn sign_pow(e: i64) -> Rat {
    if e.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(binomial(3, 5).unwrap(), BigInt::zero());
        assert_eq!(binomial(3, -1).unwrap(), BigInt::zero());
        assert_eq!(binomial(0, 0).unwrap(), BigInt::one());
        assert_eq!(binomial(30, 15).unwrap(), BigInt::from(155117520));
        assert!(matches!(binomial(-1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![BigInt::one()];
        for n in 0..20i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k).unwrap(), row[k as usize]);
            }
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn sign_pow_examples() {
        assert_eq!(sign_pow(0), Rat::one());
        assert_eq!(sign_pow(-3), -Rat::one());
        assert_eq!(sign_pow(-4), Rat::one());
        // q(m - p) with q = 1, m = 2, p = 1
        assert_eq!(sign_pow(1), -Rat::one());
    }
}
