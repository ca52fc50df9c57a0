//! Generating functions `I_r`, `N_r`, `E_r = (I_r + N_r)/2` and
//! `O_r = (I_r − N_r)/2` as exact elements of `Q(x)[√Δ]`.
//!
//! `I_r` lives over `Δ = 1 − 2x − 3x²` and the parity-signed `N_r` over
//! `Δ = 1 − 2x + 5x²`; `E_r` and `O_r` are kept as the pair `(I_r, N_r)`.

mod render;
mod solver;

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{delta_motzkin, delta_signed, Poly, QuadExt, RatFunc, SeriesQ};
use crate::error::{Error, Result};

pub use render::{emit_closed_form, render_canonical, render_paper, GfDocument, Rendered, Style};
pub use solver::{compute_er_or, compute_ir, compute_nr, shape_contribution, shape_weight, Solver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GfKind {
    I,
    N,
    E,
    O,
}

impl GfKind {
    pub const ALL: [GfKind; 4] = [GfKind::I, GfKind::N, GfKind::E, GfKind::O];

    /// Discriminant of the field the closed form lives in; `None` for the
    /// pair-valued `E` and `O`.
    pub fn disc(self) -> Option<Arc<Poly>> {
        static MOTZKIN: OnceLock<Arc<Poly>> = OnceLock::new();
        static SIGNED: OnceLock<Arc<Poly>> = OnceLock::new();
        match self {
            GfKind::I => Some(MOTZKIN.get_or_init(|| Arc::new(delta_motzkin())).clone()),
            GfKind::N => Some(SIGNED.get_or_init(|| Arc::new(delta_signed())).clone()),
            GfKind::E | GfKind::O => None,
        }
    }

    pub(crate) fn field_disc(self) -> Result<Arc<Poly>> {
        self.disc()
            .ok_or_else(|| Error::Argument(format!("{self} has no single field; it is an (I, N) pair")))
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GfKind::I => "I",
            GfKind::N => "N",
            GfKind::E => "E",
            GfKind::O => "O",
        })
    }
}

impl FromStr for GfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" => Ok(GfKind::I),
            "N" | "n" => Ok(GfKind::N),
            "E" | "e" => Ok(GfKind::E),
            "O" | "o" => Ok(GfKind::O),
            _ => Err(Error::Parse(format!("unknown generating function kind {s:?}"))),
        }
    }
}

/// A closed form: one field element for `I`/`N`, the `(I_r, N_r)` pair for
/// `E`/`O`.
#[derive(Debug, Clone, PartialEq)]
pub enum Closed {
    Single(QuadExt),
    Pair { i: QuadExt, n: QuadExt },
}

#[derive(Debug, Clone)]
pub struct GfResult {
    pub r: usize,
    pub kind: GfKind,
    pub closed: Closed,
    pub series: SeriesQ,
}

fn inv_two_x2() -> RatFunc {
    RatFunc::recip_poly(&Poly::from_ints(&[0, 0, 2])).unwrap()
}

/// `I₀ = (1 − x − w)/(2x²)`, the branch with `I₀(0) = 1`.
pub fn i0_closed() -> QuadExt {
    let h = inv_two_x2();
    QuadExt::new(
        &RatFunc::from_poly(Poly::from_ints(&[1, -1])) * &h,
        -&h,
        GfKind::I.disc().unwrap(),
    )
}

/// `N₀ = (x − 1 + u)/(2x²)`, the branch with `N₀(0) = 1`.
pub fn n0_closed() -> QuadExt {
    let h = inv_two_x2();
    QuadExt::new(
        &RatFunc::from_poly(Poly::from_ints(&[-1, 1])) * &h,
        h,
        GfKind::N.disc().unwrap(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quadext_to_series, rational};

    fn x() -> QuadExt {
        QuadExt::rational(RatFunc::x(), GfKind::I.disc().unwrap())
    }

    #[test]
    fn i0_branch_and_functional_equation() {
        let i0 = i0_closed();
        let disc = i0.disc_arc().clone();
        let one = QuadExt::one(disc.clone());
        let x = x();
        let x2 = &x * &x;
        // 1 − x − 2x²I₀ = w
        let lhs = &(&one - &x) - &(&x2 * &i0).scale_q(&rational(2, 1));
        assert_eq!(lhs, QuadExt::sqrt(disc));
        // I₀ − 1 = xI₀ + x²I₀²
        let rhs = &(&x * &i0) + &(&x2 * &(&i0 * &i0));
        assert_eq!(&i0 - &one, rhs);
    }

    #[test]
    fn n0_branch_and_functional_equation() {
        let n0 = n0_closed();
        let disc = n0.disc_arc().clone();
        let one = QuadExt::one(disc.clone());
        let x = QuadExt::rational(RatFunc::x(), disc.clone());
        let x2 = &x * &x;
        let lhs = &(&one - &x) + &(&x2 * &n0).scale_q(&rational(2, 1));
        assert_eq!(lhs, QuadExt::sqrt(disc));
        let rhs = &(&x * &n0) - &(&x2 * &(&n0 * &n0));
        assert_eq!(&n0 - &one, rhs);
    }

    #[test]
    fn base_series() {
        let s = quadext_to_series(&i0_closed(), 12).unwrap();
        assert_eq!(s.coeff(12), &rational(15511, 1));
        let n = quadext_to_series(&n0_closed(), 6).unwrap();
        let got: Vec<i64> = n.to_integers().unwrap().iter().map(|c| c.try_into().unwrap()).collect();
        // 2·E₀ − I₀ with E₀ = 1,1,1,1,3,11,31 and I₀ = 1,1,2,4,9,21,51;
        // of the four involutions of size 3 only 123 is even
        assert_eq!(got, [1, 1, 0, -2, -3, 1, 11]);
    }

    #[test]
    fn kind_round_trip() {
        for k in GfKind::ALL {
            assert_eq!(k.to_string().parse::<GfKind>().unwrap(), k);
        }
        assert!("Q".parse::<GfKind>().is_err());
        assert!(GfKind::E.field_disc().is_err());
    }
}
