//! The recursions for `I_r` and `N_r`.
//!
//! For `r ≥ 1`, with `T` standing for `I` or `N`,
//!
//! ```text
//! T_r = x·T_r ± x²·Σ_{a+b=r} T_a T_b + Σ_ρ weight(ρ)·[y^{r−c(ρ)}] (Σ_k T_k y^k)^{f(ρ)}
//! ```
//!
//! where the first two terms come from the base shapes `1` and `21` and the
//! sum runs over the kernel shapes of capacity `1..=r`. Since
//! `1 − x ∓ 2x²T₀` is the square root of the discriminant, `T_r` is isolated
//! by one exact division.

use num_traits::One;

use super::{i0_closed, n0_closed, Closed, GfKind, GfResult};
use crate::algebra::{quadext_to_series, Poly, QuadExt, RatFunc, Rational, SeriesQ};
use crate::error::{Error, Result};
use crate::kernel::{shape_catalog, ShapeRecord};

/// `x^s / ((1−x²)^d (1−x)^dd)` for `I`, and
/// `(−1)^{21(ρ)} x^s (1+x)^dd / (1+x²)^{d+dd}` for `N`.
pub fn shape_weight(rec: &ShapeRecord, kind: GfKind) -> Result<RatFunc> {
    let xs = Poly::monomial(Rational::one(), rec.s);
    let (num, den) = match kind {
        GfKind::I => {
            let den = &Poly::from_ints(&[1, 0, -1]).pow(rec.d as u32) * &Poly::from_ints(&[1, -1]).pow(rec.dd as u32);
            (xs, den)
        }
        GfKind::N => {
            let num =
                (&xs * &Poly::from_ints(&[1, 1]).pow(rec.dd as u32)).scale(&Rational::from_integer(rec.sign().into()));
            (num, Poly::from_ints(&[1, 0, 1]).pow((rec.d + rec.dd) as u32))
        }
        _ => return Err(Error::Argument(format!("no shape weight for kind {kind}"))),
    };
    RatFunc::new(num, den)
}

/// Coefficients `[y^m] (Σ_k T_k y^k)^f`, filled in lazily as the table grows.
#[derive(Debug, Default, Clone)]
struct PowerCache {
    // pows[f - 1][m]
    pows: Vec<Vec<QuadExt>>,
}

impl PowerCache {
    fn coeff(&mut self, table: &[QuadExt], f: usize, m: usize) -> QuadExt {
        if f == 0 {
            let disc = table[0].disc_arc().clone();
            return if m == 0 {
                QuadExt::one(disc)
            } else {
                QuadExt::zero(disc)
            };
        }
        while self.pows.len() < f {
            self.pows.push(Vec::new());
        }
        for g in 1..=f {
            while self.pows[g - 1].len() <= m {
                let k = self.pows[g - 1].len();
                let v = if g == 1 {
                    table[k].clone()
                } else {
                    let lower = &self.pows[g - 2];
                    let mut acc = QuadExt::zero(table[0].disc_arc().clone());
                    for j in 0..=k {
                        acc = &acc + &(&lower[j] * &table[k - j]);
                    }
                    acc
                };
                self.pows[g - 1].push(v);
            }
        }
        self.pows[f - 1][m].clone()
    }
}

fn contribution(
    rec: &ShapeRecord,
    r: usize,
    table: &[QuadExt],
    kind: GfKind,
    cache: &mut PowerCache,
) -> Result<QuadExt> {
    if rec.c == 0 || rec.c > r {
        return Err(Error::Argument(format!(
            "shape {} has capacity {} outside 1..={r}",
            rec.shape, rec.c
        )));
    }
    let m = r - rec.c;
    if table.len() <= m {
        return Err(Error::Argument(format!(
            "table holds {} terms, need {}",
            table.len(),
            m + 1
        )));
    }
    let weight = shape_weight(rec, kind)?;
    Ok(cache.coeff(table, rec.f, m).scale(&weight))
}

/// The contribution of one kernel shape to `T_r`, given `T_0..T_{r−c}`.
pub fn shape_contribution(rec: &ShapeRecord, r: usize, table: &[QuadExt], kind: GfKind) -> Result<QuadExt> {
    kind.field_disc()?;
    contribution(rec, r, table, kind, &mut PowerCache::default())
}

#[derive(Debug, Clone)]
struct Family {
    kind: GfKind,
    table: Vec<QuadExt>,
    cache: PowerCache,
}

impl Family {
    fn new(kind: GfKind) -> Self {
        let base = if kind == GfKind::I { i0_closed() } else { n0_closed() };
        Self {
            kind,
            table: vec![base],
            cache: PowerCache::default(),
        }
    }

    fn extend(&mut self, r: usize, catalog: &[ShapeRecord]) -> Result<()> {
        while self.table.len() <= r {
            let next = self.step(self.table.len(), catalog)?;
            self.table.push(next);
        }
        Ok(())
    }

    /// `Σ_ρ weight(ρ)·[y^{r−c}](Σ_k T_k y^k)^f` over the catalog.
    fn kernel_sum(&mut self, r: usize, catalog: &[ShapeRecord]) -> Result<QuadExt> {
        let mut acc = QuadExt::zero(self.table[0].disc_arc().clone());
        for rec in catalog.iter().filter(|rec| rec.c <= r) {
            acc = &acc + &contribution(rec, r, &self.table, self.kind, &mut self.cache)?;
        }
        Ok(acc)
    }

    fn base_sign(&self) -> RatFunc {
        let x2 = RatFunc::from_poly(Poly::from_ints(&[0, 0, 1]));
        if self.kind == GfKind::N {
            -&x2
        } else {
            x2
        }
    }

    fn step(&mut self, r: usize, catalog: &[ShapeRecord]) -> Result<QuadExt> {
        let disc = self.table[0].disc_arc().clone();
        let mut cross = QuadExt::zero(disc.clone());
        for a in 1..r {
            cross = &cross + &(&self.table[a] * &self.table[r - a]);
        }
        let rhs = &cross.scale(&self.base_sign()) + &self.kernel_sum(r, catalog)?;
        rhs.checked_div(&QuadExt::sqrt(disc))
    }

    /// `T_r − x·T_r ∓ x²·Σ_{a+b=r} T_a T_b − K_r`, before isolating `T_r`.
    fn residual(&mut self, r: usize, catalog: &[ShapeRecord]) -> Result<QuadExt> {
        let mut conv = QuadExt::zero(self.table[0].disc_arc().clone());
        for a in 0..=r {
            conv = &conv + &(&self.table[a] * &self.table[r - a]);
        }
        let t = self.table[r].clone();
        let lhs = &t - &t.scale(&RatFunc::x());
        let rhs = &conv.scale(&self.base_sign()) + &self.kernel_sum(r, catalog)?;
        Ok(&lhs - &rhs)
    }
}

/// Incremental solver over a fixed shape catalog.
///
/// The catalog must hold every kernel shape of capacity up to the largest `r`
/// requested; [`Solver::new`] builds it.
#[derive(Debug, Clone)]
pub struct Solver {
    catalog: Vec<ShapeRecord>,
    r_max: usize,
    order: usize,
    all: Family,
    signed: Family,
}

impl Solver {
    pub fn new(r_max: usize, order: usize) -> Result<Self> {
        let catalog = if r_max == 0 { Vec::new() } else { shape_catalog(r_max)? };
        Ok(Self::with_catalog(catalog, r_max, order))
    }

    /// Uses `catalog` as given, so a perturbed catalog can be fed in.
    pub fn with_catalog(catalog: Vec<ShapeRecord>, r_max: usize, order: usize) -> Self {
        Self {
            catalog,
            r_max,
            order,
            all: Family::new(GfKind::I),
            signed: Family::new(GfKind::N),
        }
    }

    pub fn catalog(&self) -> &[ShapeRecord] {
        &self.catalog
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn check_r(&self, r: usize) -> Result<()> {
        if r > self.r_max {
            return Err(Error::Argument(format!(
                "r = {r} exceeds the solver's r_max = {}",
                self.r_max
            )));
        }
        Ok(())
    }

    /// `I_0..=I_r` (or `N_0..=N_r`).
    pub fn table(&mut self, kind: GfKind, r: usize) -> Result<&[QuadExt]> {
        self.check_r(r)?;
        let fam = match kind {
            GfKind::I => &mut self.all,
            GfKind::N => &mut self.signed,
            _ => return Err(Error::Argument(format!("{kind} is not solved directly"))),
        };
        fam.extend(r, &self.catalog)?;
        Ok(&fam.table[..=r])
    }

    pub fn closed(&mut self, kind: GfKind, r: usize) -> Result<Closed> {
        match kind {
            GfKind::I | GfKind::N => Ok(Closed::Single(self.table(kind, r)?[r].clone())),
            GfKind::E | GfKind::O => Ok(Closed::Pair {
                i: self.table(GfKind::I, r)?[r].clone(),
                n: self.table(GfKind::N, r)?[r].clone(),
            }),
        }
    }

    pub fn result(&mut self, kind: GfKind, r: usize) -> Result<GfResult> {
        let closed = self.closed(kind, r)?;
        let series = closed_series(&closed, kind, self.order)?;
        Ok(GfResult {
            r,
            kind,
            closed,
            series,
        })
    }

    /// The unsolved recursion evaluated at the computed `T_r`; zero exactly
    /// when the solve is consistent.
    pub fn residual(&mut self, kind: GfKind, r: usize) -> Result<QuadExt> {
        if r == 0 {
            return Err(Error::Argument("the recursion starts at r = 1".into()));
        }
        self.table(kind, r)?;
        let fam = if kind == GfKind::I {
            &mut self.all
        } else {
            &mut self.signed
        };
        fam.residual(r, &self.catalog)
    }
}

fn closed_series(closed: &Closed, kind: GfKind, order: usize) -> Result<SeriesQ> {
    match closed {
        Closed::Single(u) => quadext_to_series(u, order),
        Closed::Pair { i, n } => {
            let si = quadext_to_series(i, order)?;
            let sn = quadext_to_series(n, order)?;
            let half = Rational::new(1.into(), 2.into());
            let sum = if kind == GfKind::E { &si + &sn } else { &si - &sn };
            Ok(sum.scale(&half))
        }
    }
}

/// `I_r` over `catalog`, solving `I_1..I_{r−1}` on the way.
pub fn compute_ir(r: usize, catalog: &[ShapeRecord], order: usize) -> Result<GfResult> {
    Solver::with_catalog(catalog.to_vec(), r, order).result(GfKind::I, r)
}

pub fn compute_nr(r: usize, catalog: &[ShapeRecord], order: usize) -> Result<GfResult> {
    Solver::with_catalog(catalog.to_vec(), r, order).result(GfKind::N, r)
}

/// `(E_r, O_r)` from the solved `I_r` and `N_r`.
pub fn compute_er_or(solver: &mut Solver, r: usize) -> Result<(GfResult, GfResult)> {
    Ok((solver.result(GfKind::E, r)?, solver.result(GfKind::O, r)?))
}
