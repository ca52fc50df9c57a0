//! Text renderings of closed forms.
//!
//! The canonical form is `(A)/(B) + (C)/(D)*sqrt(Δ)^(e)` with integer
//! coefficients, readable by any computer-algebra system. The paper form pulls
//! out `1/(2x²)` and `√Δ^{1−2r}` and prints the two remaining numerators with
//! their denominators cleared over `x`, `1 ± x` and `1 + x²`.

use num_traits::Signed;
use serde::Serialize;

use super::{Closed, GfKind, GfResult};
use crate::algebra::{Poly, QuadExt, RatFunc, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Canonical,
    Paper,
}

impl std::str::FromStr for Style {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(Style::Canonical),
            "paper" => Ok(Style::Paper),
            _ => Err(Error::Parse(format!("unknown style {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    /// Set when the paper form was requested but could not be produced.
    pub warning: Option<String>,
}

/// `num/den` rescaled to integer coefficients, with the lowest nonzero
/// coefficient of the denominator positive.
fn integer_fraction(f: &RatFunc) -> (Poly, Poly) {
    if f.is_zero() {
        return (Poly::zero(), Poly::one());
    }
    let (cn, pn) = f.num().primitive_part();
    let (cd, pd) = f.den().primitive_part();
    let ratio = cn / cd;
    let mut num = Poly::from_bigints(&pn).scale(&Rational::from_integer(ratio.numer().clone()));
    let mut den = Poly::from_bigints(&pd).scale(&Rational::from_integer(ratio.denom().clone()));
    let low = den.valuation().unwrap();
    if den.coeff(low).is_negative() {
        num = -&num;
        den = -&den;
    }
    (num, den)
}

fn fraction_text(f: &RatFunc) -> String {
    let (num, den) = integer_fraction(f);
    if den.is_one() {
        format!("({num})")
    } else {
        format!("({num})/({den})")
    }
}

/// Splits `b = b' / Δ^k` with `Δ` not dividing the denominator of `b'`.
fn split_disc_power(b: &RatFunc, disc: &Poly) -> (RatFunc, usize) {
    let monic = disc.monic();
    let mut den = b.den().clone();
    let mut k = 0;
    while let Some(q) = den.exact_div(&monic) {
        den = q;
        k += 1;
    }
    let lifted = b * &RatFunc::from_poly(disc.pow(k as u32));
    (lifted, k)
}

fn sqrt_text(disc: &Poly, e: i64) -> String {
    if e == 1 {
        format!("sqrt({disc})")
    } else {
        format!("sqrt({disc})^({e})")
    }
}

/// `a + b·√Δ` as `(A)/(B) + (C)/(D)*sqrt(Δ)^(e)`.
pub fn render_canonical(u: &QuadExt) -> String {
    if u.b().is_zero() {
        return fraction_text(u.a());
    }
    let (b, k) = split_disc_power(u.b(), u.disc());
    let radical = format!("{}*{}", fraction_text(&b), sqrt_text(u.disc(), 1 - 2 * k as i64));
    if u.a().is_zero() {
        radical
    } else {
        format!("{} + {}", fraction_text(u.a()), radical)
    }
}

/// Denominator factors the paper form is allowed to clear.
fn clearing_factors() -> [(Poly, &'static str); 4] {
    [
        (Poly::x(), "x"),
        (Poly::from_ints(&[1, -1]), "1 - x"),
        (Poly::from_ints(&[1, 1]), "1 + x"),
        (Poly::from_ints(&[1, 0, 1]), "1 + x^2"),
    ]
}

fn power_text(base: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 if base == "x" => Some("x".into()),
        1 => Some(format!("({base})")),
        _ if base == "x" => Some(format!("x^{k}")),
        _ => Some(format!("({base})^{k}")),
    }
}

/// `lhs*name(x) = rhs` for the rational function `f`, or `None` if its
/// denominator has a factor outside the clearing set.
fn cleared_line(name: &str, f: &RatFunc) -> Option<String> {
    let (num, mut den) = integer_fraction(f);
    let mut mult = [0usize; 4];
    for (i, (p, _)) in clearing_factors().iter().enumerate() {
        while let Some(q) = den.exact_div(p) {
            den = q;
            mult[i] += 1;
        }
    }
    if den.degree() != Some(0) {
        return None;
    }
    let c = den.coeff(0);
    // pair (1 - x)^a (1 + x)^b into (1 - x^2)^min(a, b)
    let paired = mult[1].min(mult[2]);
    let mut parts: Vec<String> = Vec::new();
    let names = clearing_factors();
    parts.extend(power_text(names[0].1, mult[0]));
    parts.extend(power_text("1 - x^2", paired));
    parts.extend(power_text(names[1].1, mult[1] - paired));
    parts.extend(power_text(names[2].1, mult[2] - paired));
    parts.extend(power_text(names[3].1, mult[3]));
    let scaled = num.scale(&c.recip());
    let rhs = if scaled.coeffs().iter().all(|q| q.is_integer()) {
        scaled
    } else {
        parts.insert(0, c.to_string());
        num
    };
    parts.push(format!("{name}(x)"));
    Some(format!("{} = {rhs}", parts.join("*")))
}

/// The paper form of `I_r` (letters `F`, `G`) or `N_r` (letters `P`, `Q`).
pub fn render_paper(u: &QuadExt, kind: GfKind, r: usize) -> Result<String> {
    let (lf, lg) = match kind {
        GfKind::I => ("F", "G"),
        GfKind::N => ("P", "Q"),
        _ => return Err(Error::Argument(format!("no paper form for {kind}"))),
    };
    let two_x2 = RatFunc::from_poly(Poly::from_ints(&[0, 0, 2]));
    let disc = RatFunc::from_poly(u.disc().clone());
    let rat = u.a() * &two_x2;
    let rad = &(u.b() * &two_x2) * &disc.pow(r as i32)?;
    let (fname, gname) = (format!("{lf}_{r}"), format!("{lg}_{r}"));
    let fail = |what: &str| {
        Error::Arithmetic(format!(
            "{kind}_{r} has no paper form: {what} is not a polynomial over x, 1 - x, 1 + x, 1 + x^2"
        ))
    };
    let fline = cleared_line(&fname, &rat).ok_or_else(|| fail(&fname))?;
    let gline = cleared_line(&gname, &rad).ok_or_else(|| fail(&gname))?;
    Ok(format!(
        "{kind}_{r}(x) = {fname}(x)/(2*x^2) + {gname}(x)/(2*x^2)*{}\n{fline}\n{gline}",
        sqrt_text(u.disc(), 1 - 2 * r as i64)
    ))
}

fn pair_text(kind: GfKind, i: &str, n: &str) -> String {
    let op = if kind == GfKind::E { '+' } else { '-' };
    format!("(({i}) {op} ({n}))/2")
}

pub fn emit_closed_form(g: &GfResult, style: Style) -> Rendered {
    match (&g.closed, style) {
        (Closed::Single(u), Style::Canonical) => Rendered {
            text: render_canonical(u),
            warning: None,
        },
        (Closed::Single(u), Style::Paper) => match render_paper(u, g.kind, g.r) {
            Ok(text) => Rendered { text, warning: None },
            Err(e) => Rendered {
                text: render_canonical(u),
                warning: Some(format!("{e}; falling back to the canonical form")),
            },
        },
        (Closed::Pair { i, n }, Style::Canonical) => Rendered {
            text: pair_text(g.kind, &render_canonical(i), &render_canonical(n)),
            warning: None,
        },
        (Closed::Pair { i, n }, Style::Paper) => {
            match (render_paper(i, GfKind::I, g.r), render_paper(n, GfKind::N, g.r)) {
                (Ok(ti), Ok(tn)) => Rendered {
                    text: format!(
                        "{}_{r}(x) = {}\n{ti}\n{tn}",
                        g.kind,
                        pair_text(g.kind, &format!("I_{r}(x)", r = g.r), &format!("N_{r}(x)", r = g.r)),
                        r = g.r
                    ),
                    warning: None,
                },
                (Err(e), _) | (_, Err(e)) => Rendered {
                    text: pair_text(g.kind, &render_canonical(i), &render_canonical(n)),
                    warning: Some(format!("{e}; falling back to the canonical form")),
                },
            }
        }
    }
}

/// JSON document for one generating function.
#[derive(Debug, Clone, Serialize)]
pub struct GfDocument {
    pub r: usize,
    pub kind: GfKind,
    pub closed_canonical: String,
    pub closed_paper: Option<String>,
    pub series: Vec<String>,
    pub order: usize,
}

impl GfDocument {
    pub fn new(g: &GfResult) -> Self {
        let paper = emit_closed_form(g, Style::Paper);
        Self {
            r: g.r,
            kind: g.kind,
            closed_canonical: emit_closed_form(g, Style::Canonical).text,
            closed_paper: paper.warning.is_none().then_some(paper.text),
            series: g.series.coeffs().iter().map(|c| c.to_string()).collect(),
            order: g.series.order(),
        }
    }
}
