//! The quadratic extension `Q(x)[w] / (w² − Δ)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Poly, RatFunc, Rational};
use crate::error::{Error, Result};

/// `1 − 2x − 3x²`, the discriminant for all involutions.
pub fn delta_motzkin() -> Poly {
    Poly::from_ints(&[1, -2, -3])
}

/// `1 − 2x + 5x²`, the discriminant for the parity-signed count.
pub fn delta_signed() -> Poly {
    Poly::from_ints(&[1, -2, 5])
}

/// `a + b·w` with `w² = Δ`.
///
/// Both discriminants used here are square-free, so `(a, b)` is a canonical
/// representation and equality is componentwise.
#[derive(Clone)]
pub struct QuadExt {
    a: RatFunc,
    b: RatFunc,
    disc: Arc<Poly>,
}

impl QuadExt {
    pub fn new(a: RatFunc, b: RatFunc, disc: Arc<Poly>) -> Self {
        Self { a, b, disc }
    }

    pub fn rational(a: RatFunc, disc: Arc<Poly>) -> Self {
        Self::new(a, RatFunc::zero(), disc)
    }

    pub fn zero(disc: Arc<Poly>) -> Self {
        Self::rational(RatFunc::zero(), disc)
    }

    pub fn one(disc: Arc<Poly>) -> Self {
        Self::rational(RatFunc::one(), disc)
    }

    /// The square root `w` itself.
    pub fn sqrt(disc: Arc<Poly>) -> Self {
        Self::new(RatFunc::zero(), RatFunc::one(), disc)
    }

    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    pub fn disc(&self) -> &Poly {
        &self.disc
    }

    pub fn disc_arc(&self) -> &Arc<Poly> {
        &self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn same_field(&self, other: &QuadExt) -> Result<()> {
        if Arc::ptr_eq(&self.disc, &other.disc) || self.disc == other.disc {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "mixing discriminants {} and {}",
                self.disc, other.disc
            )))
        }
    }

    pub fn checked_add(&self, other: &QuadExt) -> Result<QuadExt> {
        self.same_field(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, self.disc.clone()))
    }

    pub fn checked_sub(&self, other: &QuadExt) -> Result<QuadExt> {
        self.same_field(other)?;
        Ok(Self::new(&self.a - &other.a, &self.b - &other.b, self.disc.clone()))
    }

    /// `(a + bw)(c + dw) = (ac + bdΔ) + (ad + bc)w`.
    pub fn checked_mul(&self, other: &QuadExt) -> Result<QuadExt> {
        self.same_field(other)?;
        let disc = RatFunc::from_poly((*self.disc).clone());
        let bd = &self.b * &other.b;
        let a = &(&self.a * &other.a) + &(&bd * &disc);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(Self::new(a, b, self.disc.clone()))
    }

    pub fn scale(&self, f: &RatFunc) -> QuadExt {
        Self::new(&self.a * f, &self.b * f, self.disc.clone())
    }

    pub fn scale_q(&self, c: &Rational) -> QuadExt {
        Self::new(self.a.scale(c), self.b.scale(c), self.disc.clone())
    }

    pub fn conj(&self) -> QuadExt {
        Self::new(self.a.clone(), -&self.b, self.disc.clone())
    }

    /// `a² − b²Δ`.
    pub fn norm(&self) -> RatFunc {
        let disc = RatFunc::from_poly((*self.disc).clone());
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &disc)
    }

    /// `(a − bw) / (a² − b²Δ)`.
    pub fn inv(&self) -> Result<QuadExt> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inverse of zero in the quadratic extension".into()));
        }
        let n = self.norm().inv()?;
        Ok(self.conj().scale(&n))
    }

    pub fn checked_div(&self, other: &QuadExt) -> Result<QuadExt> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> QuadExt {
        let mut acc = Self::one(self.disc.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && *self.disc == *other.disc
    }
}

impl Eq for QuadExt {}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({} + ({})*w, w^2 = {})", self.a, self.b, self.disc)
    }
}

// Operator forms panic when the discriminants differ; use the checked_*
// methods at API boundaries.
impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.checked_add(rhs).expect("quadratic extension add")
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.checked_sub(rhs).expect("quadratic extension sub")
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.checked_mul(rhs).expect("quadratic extension mul")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b, self.disc.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn motzkin() -> Arc<Poly> {
        Arc::new(delta_motzkin())
    }

    #[test]
    fn w_squared_is_delta() {
        let w = QuadExt::sqrt(motzkin());
        let sq = &w * &w;
        assert_eq!(sq.a(), &RatFunc::from_poly(delta_motzkin()));
        assert!(sq.b().is_zero());
    }

    #[test]
    fn inverse_of_w() {
        let w = QuadExt::sqrt(motzkin());
        let inv = w.inv().unwrap();
        assert!(inv.a().is_zero());
        assert_eq!(inv.b(), &RatFunc::recip_poly(&delta_motzkin()).unwrap());
        assert_eq!(&inv * &w, QuadExt::one(motzkin()));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(QuadExt::zero(motzkin()).inv().is_err());
    }

    #[test]
    fn mixing_fields_is_rejected() {
        let u = QuadExt::sqrt(motzkin());
        let v = QuadExt::sqrt(Arc::new(delta_signed()));
        assert!(matches!(u.checked_mul(&v), Err(Error::Argument(_))));
        assert!(u.checked_add(&v).is_err());
    }
}
