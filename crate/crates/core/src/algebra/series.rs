//! Truncated power series with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Poly, QuadExt, RatFunc, Rational};
use crate::error::{Error, Result};

/// Default truncation order for coefficient extraction.
pub const DEFAULT_ORDER: usize = 40;

/// Largest pole order at `x = 0` tolerated in a component while expanding a
/// closed form; the components carry at most a `1/x²` prefactor in practice.
pub const MAX_POLE: usize = 4;

/// Coefficients of `x^0 ..= x^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<Rational>,
}

impl SeriesQ {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Takes `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_ints(values: &[i64], order: usize) -> Self {
        Self::from_coeffs(
            values.iter().map(|&v| Rational::from_integer(v.into())).collect(),
            order,
        )
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::Arithmetic(
                "series with zero constant term has no inverse".into(),
            ));
        }
        let c0 = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = if n == 0 { Rational::one() } else { Rational::zero() };
            for i in 1..=n {
                acc -= &self.coeffs[i] * &out[n - i];
            }
            out.push(acc * &c0);
        }
        Ok(Self { coeffs: out })
    }
}

impl fmt::Debug for SeriesQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SeriesQ{:?}",
            self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>()
        )
    }
}

impl Add for &SeriesQ {
    type Output = SeriesQ;
    fn add(self, rhs: &SeriesQ) -> SeriesQ {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        SeriesQ {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &SeriesQ {
    type Output = SeriesQ;
    fn sub(self, rhs: &SeriesQ) -> SeriesQ {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        SeriesQ {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &SeriesQ {
    type Output = SeriesQ;
    fn neg(self) -> SeriesQ {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &SeriesQ {
    type Output = SeriesQ;
    fn mul(self, rhs: &SeriesQ) -> SeriesQ {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SeriesQ { coeffs: out }
    }
}

/// The series `S` with `S² = Δ` and `S(0) = 1`, from the term recurrence
/// `2 S_n = Δ_n − Σ_{0<i<n} S_i S_{n−i}`.
pub fn sqrt_series(delta: &Poly, order: usize) -> Result<SeriesQ> {
    if !delta.coeff(0).is_one() {
        return Err(Error::Argument(format!(
            "square root series needs constant term 1, got {}",
            delta.coeff(0)
        )));
    }
    let half = Rational::new(1.into(), 2.into());
    let mut s: Vec<Rational> = vec![Rational::one()];
    for n in 1..=order {
        let mut acc = delta.coeff(n);
        for i in 1..n {
            acc -= &s[i] * &s[n - i];
        }
        s.push(acc * &half);
    }
    Ok(SeriesQ { coeffs: s })
}

/// A Laurent tail `Σ coeffs[i] x^(i − pole)` known through `x^order`.
struct Laurent {
    pole: usize,
    coeffs: Vec<Rational>,
}

fn laurent(f: &RatFunc, order: usize) -> Result<Laurent> {
    if f.is_zero() {
        return Ok(Laurent {
            pole: 0,
            coeffs: vec![Rational::zero(); order + 1],
        });
    }
    let k = f.den().valuation().unwrap();
    if k > MAX_POLE {
        return Err(Error::Arithmetic(format!(
            "pole of order {k} at x = 0 exceeds the supported {MAX_POLE}"
        )));
    }
    let len = order + k + 1;
    let num = SeriesQ::from_poly(f.num(), len - 1);
    let den = SeriesQ::from_poly(&f.den().shift_down(k), len - 1);
    let q = &num * &den.inverse()?;
    Ok(Laurent {
        pole: k,
        coeffs: q.coeffs,
    })
}

/// Taylor coefficients of a rational function regular at 0.
pub fn ratfunc_series(f: &RatFunc, order: usize) -> Result<SeriesQ> {
    let l = laurent(f, order)?;
    finish(l.pole, l.coeffs, order)
}

fn finish(pole: usize, coeffs: Vec<Rational>, order: usize) -> Result<SeriesQ> {
    if let Some(i) = coeffs[..pole].iter().position(|c| !c.is_zero()) {
        return Err(Error::Arithmetic(format!(
            "expansion has a pole: coefficient of x^-{} is {}",
            pole - i,
            coeffs[i]
        )));
    }
    Ok(SeriesQ::from_coeffs(coeffs[pole..].to_vec(), order))
}

/// Taylor coefficients of `a + b·√Δ` through `x^order`, with `√Δ` the branch
/// equal to 1 at 0. Either component may have a pole at 0 as long as the
/// poles cancel in the sum.
pub fn quadext_to_series(u: &QuadExt, order: usize) -> Result<SeriesQ> {
    let a = laurent(u.a(), order)?;
    let b = laurent(u.b(), order)?;
    let pole = a.pole.max(b.pole);
    let len = order + pole + 1;
    let mut total = vec![Rational::zero(); len];
    for (i, c) in a.coeffs.into_iter().enumerate() {
        total[i + pole - a.pole] += c;
    }
    if !u.b().is_zero() {
        let root = sqrt_series(u.disc(), order + b.pole)?;
        let bs = &SeriesQ { coeffs: b.coeffs } * &root;
        for (i, c) in bs.coeffs.into_iter().enumerate() {
            total[i + pole - b.pole] += c;
        }
    }
    finish(pole, total, order)
}
