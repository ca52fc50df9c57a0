//! Exhaustive cross-check of a cell classification.
//!
//! Every involution up to a size bound whose kernel shape is `ρ` is
//! decomposed, and its cells are checked against the labels in the
//! [`ShapeRecord`]: nothing in infeasible cells, decreasing contents where
//! required, mirrored sizes, row ordering of decreasing cells, occurrences and
//! inversion parity splitting over the cells the way the recursion assumes,
//! and finally the number of such involutions per size against the count the
//! labels predict.

use std::collections::HashMap;

use serde::Serialize;

use super::cells::{self, CellClass, ShapeRecord};
use super::graph;
use crate::enumerate::{self, involution_count};
use crate::error::Result;
use crate::perm::{self, Involution};

const MAX_KEPT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// An entry landed in a cell labelled infeasible.
    InfeasiblePopulated,
    OffDiagonalNotDecreasing,
    MirrorSizeMismatch,
    DiagonalNotDecreasing,
    /// A free cell never held both an increasing and a decreasing pair.
    FreeCellNotWitnessed,
    /// Two decreasing cells in one band were not ordered left-high.
    RowOrder,
    /// Occurrences of 3412 did not split into kernel plus free cells.
    OccurrenceSplit,
    /// Inversion parity did not split over kernel and cells.
    ParitySplit,
    /// Number of involutions with this kernel shape disagrees with the labels.
    Census,
    Structural,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub cell: Option<(usize, usize)>,
    pub witness: Option<Involution>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub shape: Involution,
    pub n_max: usize,
    /// `(n, involutions of size n with this kernel shape)`.
    pub scanned: Vec<(usize, u64)>,
    pub violations: Vec<Violation>,
    /// Violations beyond the first few are counted, not kept.
    pub suppressed: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_counterexample(&self) -> Option<&Involution> {
        self.violations.iter().find_map(|v| v.witness.as_ref())
    }
}

#[derive(Debug, Clone, Default)]
struct FreeWitness {
    increasing: bool,
    decreasing: bool,
    example: Option<Involution>,
}

#[derive(Debug, Clone)]
struct Partial {
    count: u64,
    violations: Vec<Violation>,
    suppressed: usize,
    // indexed like the grid, only free cells are touched
    free: Vec<FreeWitness>,
}

impl Partial {
    fn new(s: usize) -> Self {
        Self {
            count: 0,
            violations: Vec::new(),
            suppressed: 0,
            free: vec![FreeWitness::default(); s * s],
        }
    }

    fn push(&mut self, v: Violation) {
        if self.violations.len() < MAX_KEPT {
            self.violations.push(v);
        } else {
            self.suppressed += 1;
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.count += other.count;
        for v in other.violations {
            self.push(v);
        }
        self.suppressed += other.suppressed;
        for (a, b) in self.free.iter_mut().zip(other.free) {
            a.increasing |= b.increasing;
            a.decreasing |= b.decreasing;
            if a.example.is_none() {
                a.example = b.example;
            }
        }
        self
    }
}

fn violation(kind: ViolationKind, cell: Option<(usize, usize)>, witness: &Involution, detail: String) -> Violation {
    Violation {
        kind,
        cell,
        witness: Some(witness.clone()),
        detail,
    }
}

/// Checks one involution whose kernel shape is `rec.shape`.
fn check_member(rec: &ShapeRecord, pi: &Involution, acc: &mut Partial) {
    use ViolationKind::*;
    let s = rec.s;
    let grid = &rec.grid;
    let (_, contents) = match cells::decompose(pi) {
        Ok(x) => x,
        Err(e) => {
            acc.push(violation(Structural, None, pi, e.to_string()));
            return;
        }
    };
    let mut occurrences = rec.c;
    let mut parity = rec.parity21 as usize;
    for (m, l, values) in contents.populated() {
        let class = grid.get(m, l);
        let k = values.len();
        match class {
            CellClass::Infeasible => {
                acc.push(violation(
                    InfeasiblePopulated,
                    Some((m, l)),
                    pi,
                    format!("cell holds {values:?}"),
                ));
            }
            CellClass::Free => {
                let content = cells::perm_of_values(values);
                occurrences += perm::count_3412(&content);
                parity += perm::count_pattern_21(&content);
                let w = &mut acc.free[(m - 1) * s + (l - 1)];
                for (a, &x) in values.iter().enumerate() {
                    for &y in &values[a + 1..] {
                        if x < y {
                            w.increasing = true;
                        } else {
                            w.decreasing = true;
                        }
                    }
                }
                if k >= 2 && w.example.is_none() {
                    w.example = Some(pi.clone());
                }
            }
            CellClass::DiagonalDecreasing => {
                if !cells::is_strictly_decreasing(values) {
                    acc.push(violation(
                        DiagonalNotDecreasing,
                        Some((m, l)),
                        pi,
                        format!("cell holds {values:?}"),
                    ));
                }
                parity += k * (k.saturating_sub(1)) / 2;
            }
            CellClass::Decreasing => {
                if !cells::is_strictly_decreasing(values) {
                    acc.push(violation(
                        OffDiagonalNotDecreasing,
                        Some((m, l)),
                        pi,
                        format!("cell holds {values:?}"),
                    ));
                }
                let mirror = contents.get(l, m).len();
                if mirror != k {
                    acc.push(violation(
                        MirrorSizeMismatch,
                        Some((m, l)),
                        pi,
                        format!("|C({m},{l})| = {k} but |C({l},{m})| = {mirror}"),
                    ));
                }
                if m < l {
                    parity += k;
                }
            }
        }
    }
    // decreasing cells sharing a band: the left one sits entirely higher
    for m in 1..=s {
        let row: Vec<(usize, &[usize])> = (1..=s)
            .filter(|&l| l != m && grid.get(m, l) == CellClass::Decreasing)
            .map(|l| (l, contents.get(m, l)))
            .filter(|(_, v)| !v.is_empty())
            .collect();
        for (a, &(la, va)) in row.iter().enumerate() {
            for &(lb, vb) in &row[a + 1..] {
                let low = va.iter().min().unwrap();
                let high = vb.iter().max().unwrap();
                if low < high {
                    acc.push(violation(
                        RowOrder,
                        Some((m, la)),
                        pi,
                        format!("C({m},{la}) = {va:?} not above C({m},{lb}) = {vb:?}"),
                    ));
                }
            }
        }
    }
    let actual = perm::count_3412(pi);
    if actual != occurrences {
        acc.push(violation(
            OccurrenceSplit,
            None,
            pi,
            format!("{actual} occurrences, kernel plus free cells account for {occurrences}"),
        ));
    }
    let actual = perm::count_pattern_21(pi);
    if actual % 2 != parity % 2 {
        acc.push(violation(
            ParitySplit,
            None,
            pi,
            format!("inversion parity {} but cells predict {}", actual % 2, parity % 2),
        ));
    }
}

/// `[x^n] x^s T(x)^f / ((1-x^2)^d (1-x)^dd)` for `n ≤ n_max`, where `T` is the
/// generating function of all involutions.
pub fn predicted_census(rec: &ShapeRecord, n_max: usize) -> Vec<u128> {
    let len = n_max + 1;
    let t: Vec<u128> = (0..len).map(|n| involution_count(n) as u128).collect();
    let mut series = vec![0u128; len];
    if rec.s < len {
        series[rec.s] = 1;
    }
    for _ in 0..rec.f {
        let mut next = vec![0u128; len];
        for (i, &a) in series.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in t[..len - i].iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        series = next;
    }
    for _ in 0..rec.dd {
        for n in 1..len {
            series[n] += series[n - 1];
        }
    }
    for _ in 0..rec.d {
        for n in 2..len {
            series[n] += series[n - 2];
        }
    }
    series
}

/// Validates several shapes in one sweep: shape `rec` is checked against every
/// involution of size `rec.s ..= rec.s + extra`.
pub fn validate_shapes(records: &[ShapeRecord], extra: usize, cap: usize) -> Result<Vec<ValidationReport>> {
    let bounds: Vec<usize> = records.iter().map(|r| r.s + extra).collect();
    validate_shapes_bounded(records, &bounds, cap)
}

/// Validates a single shape against all involutions of size `s ..= n_max`.
pub fn validate_classification(rec: &ShapeRecord, n_max: usize, cap: usize) -> Result<ValidationReport> {
    Ok(validate_shapes_bounded(std::slice::from_ref(rec), &[n_max], cap)?.remove(0))
}

/// Validates `records[i]` against every involution of size `s ..= bounds[i]`.
pub fn validate_shapes_bounded(records: &[ShapeRecord], bounds: &[usize], cap: usize) -> Result<Vec<ValidationReport>> {
    let Some(&top) = bounds.iter().max() else {
        return Ok(Vec::new());
    };
    enumerate::check_cap(top, cap)?;
    let bottom = records.iter().map(|r| r.s).min().unwrap_or(1).max(1);
    let mut totals: Vec<Partial> = records.iter().map(|r| Partial::new(r.s)).collect();
    let mut scanned: Vec<Vec<(usize, u64)>> = vec![Vec::new(); records.len()];

    for n in bottom..=top {
        let active: HashMap<Vec<u8>, usize> = records
            .iter()
            .enumerate()
            .filter(|&(i, r)| r.s <= n && n <= bounds[i])
            .map(|(i, r)| (r.shape.raw().to_vec(), i))
            .collect();
        if active.is_empty() {
            continue;
        }
        let sizes: Vec<usize> = active.keys().map(Vec::len).collect();
        let partials = enumerate::fold_involutions(
            n,
            cap,
            || records.iter().map(|r| Partial::new(r.s)).collect::<Vec<_>>(),
            |acc, values| {
                let kernel = graph::kernel_positions_raw(values);
                if !sizes.contains(&kernel.len()) {
                    return;
                }
                let shape = graph::shape_of_raw(values, &kernel);
                if let Some(&i) = active.get(&shape) {
                    acc[i].count += 1;
                    check_member(&records[i], &Involution::from_raw(values.to_vec()), &mut acc[i]);
                }
            },
            |a, b| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect(),
        )?;
        for (i, p) in partials.into_iter().enumerate() {
            if active.values().any(|&j| j == i) {
                scanned[i].push((n, p.count));
                let t = std::mem::replace(&mut totals[i], Partial::new(0));
                totals[i] = t.merge(p);
            }
        }
    }

    let mut reports = Vec::with_capacity(records.len());
    for (i, rec) in records.iter().enumerate() {
        let mut acc = std::mem::replace(&mut totals[i], Partial::new(0));
        let n_max = bounds[i];
        if n_max >= rec.s + 2 {
            for (m, l) in rec.grid.cells_of(CellClass::Free) {
                let w = &acc.free[(m - 1) * rec.s + (l - 1)];
                if !(w.increasing && w.decreasing) {
                    let v = Violation {
                        kind: ViolationKind::FreeCellNotWitnessed,
                        cell: Some((m, l)),
                        witness: w.example.clone(),
                        detail: format!(
                            "free cell ({m},{l}) showed increasing: {}, decreasing: {}",
                            w.increasing, w.decreasing
                        ),
                    };
                    acc.push(v);
                }
            }
        }
        let predicted = predicted_census(rec, n_max);
        for &(n, count) in &scanned[i] {
            if predicted[n] != count as u128 {
                acc.push(Violation {
                    kind: ViolationKind::Census,
                    cell: None,
                    witness: None,
                    detail: format!("n = {n}: found {count}, labels predict {}", predicted[n]),
                });
            }
        }
        reports.push(ValidationReport {
            shape: rec.shape.clone(),
            n_max,
            scanned: std::mem::take(&mut scanned[i]),
            violations: acc.violations,
            suppressed: acc.suppressed,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_CAP;

    fn record(s: &str) -> ShapeRecord {
        ShapeRecord::new(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn census_prediction_for_3412() {
        // x^4 T^3 / (1-x): 1, then 3 + 1 at n = 5
        let p = predicted_census(&record("3412"), 6);
        assert_eq!(&p[..6], &[0, 0, 0, 0, 1, 4]);
    }

    #[test]
    fn validates_3412() {
        let rep = validate_classification(&record("3412"), 8, DEFAULT_CAP).unwrap();
        assert!(rep.passed(), "{:#?}", rep.violations);
        assert_eq!(rep.scanned.first(), Some(&(4, 1)));
    }

    #[test]
    fn validates_351624() {
        let rep = validate_classification(&record("351624"), 10, DEFAULT_CAP).unwrap();
        assert!(rep.passed(), "{:#?}", rep.violations);
    }

    #[test]
    fn mislabelled_diagonal_cell_is_caught() {
        let mut rec = record("3412");
        rec.grid.set(2, 2, CellClass::Free);
        rec.f += 1;
        rec.dd -= 1;
        let rep = validate_classification(&rec, 8, DEFAULT_CAP).unwrap();
        assert!(!rep.passed());
        assert!(rep
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::FreeCellNotWitnessed && v.cell == Some((2, 2))));
        assert!(rep.first_counterexample().is_some());
    }

    #[test]
    fn mislabelled_infeasible_cell_is_caught() {
        let mut rec = record("3412");
        rec.grid.set(1, 1, CellClass::Infeasible);
        let rep = validate_classification(&rec, 6, DEFAULT_CAP).unwrap();
        let v = rep
            .violations
            .iter()
            .find(|v| v.kind == ViolationKind::InfeasiblePopulated)
            .expect("populated infeasible cell");
        assert_eq!(v.cell, Some((1, 1)));
        assert!(v.witness.is_some());
    }
}
