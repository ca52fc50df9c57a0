//! Pipeline series against brute-force counts.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::tables::{brute_parity_table, ParityTable};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::genfun::{GfKind, Solver};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesMismatch {
    pub kind: GfKind,
    pub r: usize,
    pub n: usize,
    pub pipeline: String,
    pub brute: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub max_r: usize,
    pub max_n: usize,
    /// Cells compared for `I_r` and for `N_r`.
    pub i_cells: usize,
    pub n_cells: usize,
    pub mismatches: Vec<SeriesMismatch>,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn same(q: &Rational, v: i64) -> bool {
    q.is_integer() && q.to_integer().to_i64() == Some(v)
}

/// Checks `[x^n] I_r = counts[r][n]` and `[x^n] N_r = even − odd` for
/// `r ≤ max_r`, `n ≤ table.max_n`.
pub fn compare_with_tables(solver: &mut Solver, table: &ParityTable, max_r: usize) -> Result<SeriesReport> {
    if max_r > table.max_r {
        return Err(Error::Argument(format!(
            "table covers r <= {}, asked for {max_r}",
            table.max_r
        )));
    }
    if solver.order() < table.max_n {
        return Err(Error::Argument(format!(
            "series order {} is below n = {}",
            solver.order(),
            table.max_n
        )));
    }
    let counts = table.counts();
    let mut report = SeriesReport {
        max_r,
        max_n: table.max_n,
        i_cells: 0,
        n_cells: 0,
        mismatches: Vec::new(),
    };
    for r in 0..=max_r {
        let si = solver.result(GfKind::I, r)?.series;
        let sn = solver.result(GfKind::N, r)?.series;
        for n in 0..=table.max_n {
            let checks = [
                (GfKind::I, si.coeff(n), counts.get(r, n) as i64),
                (GfKind::N, sn.coeff(n), table.signed(r, n)),
            ];
            for (kind, got, want) in checks {
                if !same(got, want) {
                    report.mismatches.push(SeriesMismatch {
                        kind,
                        r,
                        n,
                        pipeline: got.to_string(),
                        brute: want,
                    });
                }
            }
            report.i_cells += 1;
            report.n_cells += 1;
        }
    }
    Ok(report)
}

/// Builds the solver and the brute-force tables, then compares them.
pub fn verify_series_vs_brute(max_r: usize, max_n: usize) -> Result<SeriesReport> {
    let table = brute_parity_table(max_n, max_r)?;
    let mut solver = Solver::new(max_r, max_n.max(1))?;
    compare_with_tables(&mut solver, &table, max_r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::shape_catalog;

    #[test]
    fn small_range_matches() {
        let rep = verify_series_vs_brute(2, 9).unwrap();
        assert!(rep.passed(), "{:?}", rep.mismatches);
        assert_eq!(rep.i_cells, 30);
    }

    #[test]
    fn perturbed_dd_is_caught_at_n5() {
        let mut cat = shape_catalog(1).unwrap();
        cat[0].dd = 0;
        let mut solver = Solver::with_catalog(cat, 1, 8);
        let table = brute_parity_table(8, 1).unwrap();
        let rep = compare_with_tables(&mut solver, &table, 1).unwrap();
        let first = rep.mismatches.iter().find(|m| m.kind == GfKind::I).unwrap();
        assert_eq!((first.r, first.n), (1, 5));
    }
}
