//! Closed forms as printed, for diffing against the solver.
//!
//! Each fixture gives `T_r = F/(2x²) + G/(2x²)·√Δ^{1−2r}` with `F` and `G`
//! as `numerator / denominator` strings. They are transcribed verbatim,
//! including any misprints; the brute-force tables are the ground truth.

use serde::Serialize;

use crate::algebra::{quadext_to_series, Poly, QuadExt, RatFunc};
use crate::error::{Error, Result};
use crate::genfun::{GfKind, Solver};

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub kind: GfKind,
    pub r: usize,
    /// `(denominator, numerator)` of `F_r` (or `P_r`).
    pub rational: (&'static str, &'static str),
    /// `(denominator, numerator)` of `G_r` (or `Q_r`).
    pub radical: (&'static str, &'static str),
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        kind: GfKind::I,
        r: 0,
        rational: ("1", "1-x"),
        radical: ("1", "-1"),
    },
    Fixture {
        kind: GfKind::I,
        r: 1,
        rational: ("1-x", "-(1-2x)"),
        radical: ("1", "1-2x-2x^2"),
    },
    Fixture {
        kind: GfKind::I,
        r: 2,
        rational: ("1-x", "1-2x"),
        radical: ("(1-x)^2", "-(1-6x+8x^2+8x^3-15x^4-2x^5+4x^6)"),
    },
    Fixture {
        kind: GfKind::I,
        r: 3,
        rational: ("(1-x^2)", "-(1-2x)(1+x+x^2)"),
        radical: ("(1-x)^2", "1-8x+18x^2+x^2-29x^4-12x^5+14x^6+41x^7+2x^8-18x^9"),
    },
    Fixture {
        kind: GfKind::I,
        r: 4,
        rational: ("(1-x^2)", "-1+3x+4x^2-8x^3-2x^4"),
        radical: ("(1-x)^4", "1-14x+71x^2-124x^3-166x^4+874x^5-624x^6-1332x^7+1909x^8+426x^9-1585x^10+292x^11+400x^12-126x^13"),
    },
    Fixture {
        kind: GfKind::I,
        r: 5,
        rational: ("(1-x^2)", "3-7x-7x^2+12x^3+6x^4"),
        radical: ("(1-x)^4", "-3+46x-267x^2+627x^3+134x^4-3321x^5+3954x^6+5214x^7-11775x^8-2186x^9+14525x^10-1701x^11-8824x^12+1537x^13+2594x^14-216x^15-324x^16"),
    },
    Fixture {
        kind: GfKind::I,
        r: 6,
        rational: ("(1-x^2)^2", "-5+9x+21x^2-25x^3-34x^4+16x^5+24x^6-2x^7-2x^8"),
        radical: ("(1-x)^6", "5-94x+712x^2-2582x^3+3124x^4+8364x^5-31620x^6+15464x^7+77508x^8-107098x^9-76814x^10+214160x^11+5782x^12-231050x^13+62700x^14+146176x^15-65653x^16-50328x^17+29646x^18+6462x^19-5346x^20+486x^21"),
    },
    Fixture {
        kind: GfKind::I,
        r: 7,
        rational: ("(1-x^2)^2", "7-11x-28x^2+20x^3+54x^4-2x^5-46x^6+2x^8"),
        radical: ("(1-x)^6", "-7+144x-1210x^2+5020x^3-8206x^4-12180x^5+69464x^6-54210x^7-181468x^8+315366x^9+239852x^10-779338x^11-124766x^12+1226006x^13-168810x^14-1272344x^15+418555x^16+813368x^17-373802x^18-279554x^19+153648x^20+37188x^21-23166x^22+486x^23"),
    },
    Fixture {
        kind: GfKind::N,
        r: 0,
        rational: ("1", "x-1"),
        radical: ("1", "1"),
    },
    Fixture {
        kind: GfKind::N,
        r: 1,
        rational: ("(x^2+1)", "(x+1)(2x^2-2x+1)"),
        radical: ("(x^2+1)", "(x^2-1)(4x^2-2x+1)"),
    },
    Fixture {
        kind: GfKind::N,
        r: 2,
        rational: ("(x^2+1)^2", "(x-1)(2x^2-2x+1)(1+x)^2"),
        radical: ("(x^2+1)^2", "(22x^6-58x^5+69x^4-48x^3+22x^2-6x+1)(1+x)^2"),
    },
    Fixture {
        kind: GfKind::N,
        r: 3,
        rational: ("(x^2+1)^3", "(2x^2-2x+1)(x^6+x^5+3x^4-2x^3-x^2+x+1)"),
        radical: ("(x^2+1)^3", "(x-1)(100x^12-18x^11+323x^10-507x^9+491x^8-182x^7+52x^6-14x^5+46x^4-34x^3+19x^2-5x+1)"),
    },
    Fixture {
        kind: GfKind::N,
        r: 4,
        rational: ("(x^2+1)^4", "(1-x^2)(2x^8-2x^7+10x^6+x^5+15x^4-12x^3+12x^2-3x+1)"),
        radical: ("(x^2+1)^4", "-(1+x)(650x^16-1880x^15+5992x^14-9143x^13+13671x^12-19666x^11+26606x^10-28683x^9+24771x^8-16778x^7+9158x^6-3969x^5+1385x^4-374x^3+78x^2-11x+1)"),
    },
    Fixture {
        kind: GfKind::N,
        r: 5,
        rational: ("(x^2+1)^5", "-4x^13-14x^11+5x^10-33x^9+29x^8-16x^7+34x^6-42x^5+14x^4+6x^3-15x^2+7x-3"),
        radical: ("(x^2+1)^5", "(1-x)(5000x^21-4650x^20+24624x^19-25585x^18+76987x^17-95269x^16+127936x^15-140244x^14+169896x^13-159580x^12+119898x^11-51878x^10-84x^9+26302x^8-26778x^7+17822x^6-8604x^5+3270x^4-940x^3+209x^2-31x+3)"),
    },
    Fixture {
        kind: GfKind::N,
        r: 6,
        rational: ("(x^2+1)^6", "-6x^16+6x^15-44x^14+58x^13-128x^12+163x^11-195x^10+271x^9-221x^8+188x^7-170x^6+160x^5-82x^4+27x^3+9x^2-9x+5"),
        radical: ("(x^2+1)^6", "-43750x^27+133750x^26-542500x^25+1329674x^24-2984612x^23+5378699x^22-8590394x^21+12236909x^20-15828644x^19+18229621x^18-19177696x^17+18659837x^16-17024788x^15+14266232x^14-10700428x^13+6908636x^12-3700402x^11+1527142x^10-395516x^9-27686x^8+101584x^7-68679x^6+30486x^5-10181x^4+2580x^3-493x^2+64x-5"),
    },
    Fixture {
        kind: GfKind::N,
        r: 7,
        rational: ("(x^2+1)^7", "-14x^18+12x^17-80x^16+94x^15-176x^14+212x^13-188x^12+247x^11-157x^10+35x^9-51x^8+28x^7+62x^6-142x^5+102x^4-49x^3-3x^2+11x-7"),
        radical: ("(x^2+1)^7", "-481250x^31+1658750x^30-5844500x^29+14332172x^28-29824134x^27+52203592x^26-78380980x^25+104774831x^24-124983968x^23+132048678x^22-122776812x^21+101431782x^20-72478438x^19+39230434x^18-4374004x^17-25236483x^16+42491126x^15-44337242x^14+34831062x^13-21298364x^12+9941638x^11-3111220x^10+199166x^9+519349x^8-425180x^7+212566x^6-78950x^5+22882x^4-5138x^3+874x^2-102x+7"),
    },
];

pub fn fixture(kind: GfKind, r: usize) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.kind == kind && f.r == r)
}

fn ratio(pair: (&str, &str)) -> Result<RatFunc> {
    RatFunc::new(Poly::parse(pair.1)?, Poly::parse(pair.0)?)
}

impl Fixture {
    /// The printed closed form as a field element.
    pub fn to_quadext(&self) -> Result<QuadExt> {
        let disc = self
            .kind
            .disc()
            .ok_or_else(|| Error::Argument(format!("no fixtures for {}", self.kind)))?;
        let h = RatFunc::recip_poly(&Poly::from_ints(&[0, 0, 2]))?;
        let a = &ratio(self.rational)? * &h;
        let delta = RatFunc::from_poly((*disc).clone());
        let b = &(&ratio(self.radical)? * &h) * &delta.pow(-(self.r as i32))?;
        Ok(QuadExt::new(a, b, disc))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SeriesDiff {
    Match,
    Mismatch {
        n: usize,
        printed: String,
        computed: String,
    },
    /// The printed form does not even expand to a power series.
    Unexpandable {
        error: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaperCheck {
    pub kind: GfKind,
    pub r: usize,
    /// Exact equality in the extension field.
    pub exact: bool,
    pub series: SeriesDiff,
    pub order: usize,
}

impl PaperCheck {
    pub fn matches(&self) -> bool {
        self.exact && self.series == SeriesDiff::Match
    }
}

/// Order to which printed forms are expanded and compared.
pub const PAPER_DIFF_ORDER: usize = 30;

/// Diffs the printed `I_r` and `N_r` against the solver.
pub fn verify_paper_formulas(solver: &mut Solver, r: usize) -> Result<Vec<PaperCheck>> {
    let mut out = Vec::new();
    for kind in [GfKind::I, GfKind::N] {
        let fx = fixture(kind, r).ok_or_else(|| Error::Argument(format!("no printed form for {kind}_{r}")))?;
        let printed = fx.to_quadext()?;
        let computed = solver.table(kind, r)?[r].clone();
        let cs = quadext_to_series(&computed, PAPER_DIFF_ORDER)?;
        let series = match quadext_to_series(&printed, PAPER_DIFF_ORDER) {
            Err(e) => SeriesDiff::Unexpandable { error: e.to_string() },
            Ok(ps) => match (0..=PAPER_DIFF_ORDER).find(|&n| ps.coeff(n) != cs.coeff(n)) {
                None => SeriesDiff::Match,
                Some(n) => SeriesDiff::Mismatch {
                    n,
                    printed: ps.coeff(n).to_string(),
                    computed: cs.coeff(n).to_string(),
                },
            },
        };
        out.push(PaperCheck {
            kind,
            r,
            exact: printed == computed,
            series,
            order: PAPER_DIFF_ORDER,
        });
    }
    Ok(out)
}
