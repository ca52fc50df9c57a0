//! Kernel cell decomposition and cell classification.
//!
//! Cells are addressed `(m, l)`, 1-based: `m` is the value band between the
//! `m`-th and `(m+1)`-th smallest kernel values, `l` the position gap between
//! the `l`-th and `(l+1)`-th kernel positions (the last band and gap run to
//! `n + 1`).

use std::fmt;

use serde::{Serialize, Serializer};

use super::graph::{self, Kernel};
use crate::error::{Error, Result};
use crate::perm::{self, Involution, Perm};

/// Contents of the `s × s` cells for a concrete involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellContents {
    size: usize,
    cells: Vec<Vec<usize>>,
}

impl CellContents {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Values in cell `(m, l)` in position order.
    pub fn get(&self, m: usize, l: usize) -> &[usize] {
        &self.cells[(m - 1) * self.size + (l - 1)]
    }

    pub fn is_all_empty(&self) -> bool {
        self.cells.iter().all(Vec::is_empty)
    }

    /// Nonempty cells as `(m, l, values)`.
    pub fn populated(&self) -> impl Iterator<Item = (usize, usize, &[usize])> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(k, c)| (k / self.size + 1, k % self.size + 1, c.as_slice()))
    }
}

/// Distributes the non-kernel entries of `p` over the kernel cells.
///
/// Fails with a structural error when an entry lies left of the first kernel
/// position or below the smallest kernel value.
pub fn cell_decomposition(p: &Involution, k: &Kernel) -> Result<CellContents> {
    let s = k.size();
    let values = k.sorted_values(p);
    let mut cells = vec![Vec::new(); s * s];
    let mut next_kernel = 0;
    for j in 1..=p.len() {
        if next_kernel < s && k.positions[next_kernel] == j {
            next_kernel += 1;
            continue;
        }
        let v = p.at(j);
        // gap l: i_l < j < i_{l+1}; band m: v_m < v < v_{m+1}
        let l = next_kernel;
        let m = values.partition_point(|&kv| kv < v);
        if l == 0 || m == 0 {
            return Err(Error::Structural(format!(
                "entry {v} at position {j} of {p} falls outside every kernel cell"
            )));
        }
        cells[(m - 1) * s + (l - 1)].push(v);
    }
    Ok(CellContents { size: s, cells })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CellClass {
    Infeasible,
    Free,
    DiagonalDecreasing,
    Decreasing,
}

impl CellClass {
    pub fn is_feasible(self) -> bool {
        self != CellClass::Infeasible
    }

    fn symbol(self) -> char {
        match self {
            CellClass::Infeasible => '.',
            CellClass::Free => 'F',
            CellClass::DiagonalDecreasing => 'd',
            CellClass::Decreasing => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellGrid {
    size: usize,
    classes: Vec<CellClass>,
}

impl CellGrid {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, m: usize, l: usize) -> CellClass {
        self.classes[(m - 1) * self.size + (l - 1)]
    }

    /// Overwrites one label. Used to inject faults when testing validators.
    pub fn set(&mut self, m: usize, l: usize, class: CellClass) {
        self.classes[(m - 1) * self.size + (l - 1)] = class;
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, CellClass)> + '_ {
        let s = self.size;
        self.classes
            .iter()
            .enumerate()
            .map(move |(k, &c)| (k / s + 1, k % s + 1, c))
    }

    /// Cells of one class in row-major order, which is also the componentwise
    /// order whenever that order is linear.
    pub fn cells_of(&self, class: CellClass) -> Vec<(usize, usize)> {
        self.cells()
            .filter(|&(_, _, c)| c == class)
            .map(|(m, l, _)| (m, l))
            .collect()
    }

    pub fn free_count(&self) -> usize {
        self.cells_of(CellClass::Free).len()
    }

    pub fn diagonal_decreasing_count(&self) -> usize {
        self.cells_of(CellClass::DiagonalDecreasing).len()
    }

    /// Decreasing cells strictly above the diagonal (`m < l`); each pairs
    /// with its mirror below.
    pub fn decreasing_pair_count(&self) -> usize {
        self.cells_of(CellClass::Decreasing)
            .into_iter()
            .filter(|&(m, l)| m < l)
            .count()
    }

    /// Checks the mirror symmetry of infeasibility and that only diagonal
    /// cells carry the free and diagonal-decreasing labels.
    pub fn check_consistency(&self) -> Result<()> {
        for (m, l, c) in self.cells() {
            if self.get(l, m).is_feasible() != c.is_feasible() {
                return Err(Error::Consistency(format!(
                    "cell ({m},{l}) is {c:?} but its mirror is {:?}",
                    self.get(l, m)
                )));
            }
            let ok = match c {
                CellClass::Infeasible => true,
                CellClass::Free | CellClass::DiagonalDecreasing => m == l,
                CellClass::Decreasing => m != l,
            };
            if !ok {
                return Err(Error::Consistency(format!("cell ({m},{l}) cannot be {c:?}")));
            }
        }
        Ok(())
    }

    /// Row strings, top row = band `s`, for terminal display.
    pub fn picture(&self) -> Vec<String> {
        (1..=self.size)
            .rev()
            .map(|m| (1..=self.size).map(|l| self.get(m, l).symbol()).collect())
            .collect()
    }
}

/// Serialized as `grid[m-1][l-1]`, class names as strings.
impl Serialize for CellGrid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<CellClass>> = self
            .classes
            .chunks(self.size.max(1))
            .map(<[CellClass]>::to_vec)
            .collect();
        rows.serialize(s)
    }
}

impl fmt::Display for CellGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.picture() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Whether a single entry placed in cell `(m, l)` of `rho` (together with its
/// mirror in `(l, m)`) takes part in some 3412 occurrence.
fn probe_hits(rho: &[u8], m: usize, l: usize) -> bool {
    // Doubled coordinates: kernel entry k sits at (2k, 2ρ(k)); the probe sits
    // strictly between kernel positions l, l+1 and kernel values m, m+1.
    let mut points: Vec<(usize, usize)> = rho
        .iter()
        .enumerate()
        .map(|(k, &v)| (2 * (k + 1), 2 * (v as usize + 1)))
        .collect();
    let probe = (2 * l + 1, 2 * m + 1);
    points.push(probe);
    if m != l {
        points.push((2 * m + 1, 2 * l + 1));
    }
    points.sort_unstable();
    let at = points.iter().position(|&pt| pt == probe).unwrap();
    let values: Vec<usize> = points.iter().map(|&(_, v)| v).collect();
    let values = perm::standardize(&values);
    let mut hit = false;
    perm::visit_3412(&values, |q| {
        hit = q.contains(&at);
        !hit
    });
    hit
}

/// Whether the kernel entries of `rho` northwest or southeast of diagonal
/// cell `(i, i)` contain an increasing pair.
fn has_12_nw_or_se(rho: &[u8], i: usize) -> bool {
    let increasing = |pts: &[u8]| {
        pts.iter()
            .enumerate()
            .any(|(a, &x)| pts[a + 1..].iter().any(|&y| y > x))
    };
    // 1-based: NW = positions k <= i with values >= i+1,
    //          SE = positions k >= i+1 with values <= i.
    let nw: Vec<u8> = rho[..i].iter().copied().filter(|&v| v as usize >= i).collect();
    let se: Vec<u8> = rho[i..].iter().copied().filter(|&v| (v as usize) < i).collect();
    increasing(&nw) || increasing(&se)
}

/// Labels the cells of a kernel involution (or of the base shapes `1`, `21`).
///
/// A cell is infeasible when a single probe entry there (mirrored across the
/// diagonal) joins a 3412 occurrence with the kernel. Feasible off-diagonal
/// cells are decreasing. A feasible diagonal cell is diagonal-decreasing when
/// the kernel has an increasing pair northwest or southeast of it, free
/// otherwise.
pub fn classify_cells(rho: &Involution) -> Result<CellGrid> {
    let base = rho.len() <= 2 && !rho.is_empty();
    if !base && !graph::is_kernel_involution(rho) {
        return Err(Error::Argument(format!("{rho} is not a kernel involution")));
    }
    let s = rho.len();
    let raw = rho.raw();
    let mut classes = Vec::with_capacity(s * s);
    for m in 1..=s {
        for l in 1..=s {
            let class = if probe_hits(raw, m, l) {
                CellClass::Infeasible
            } else if m != l {
                CellClass::Decreasing
            } else if has_12_nw_or_se(raw, m) {
                CellClass::DiagonalDecreasing
            } else {
                CellClass::Free
            };
            classes.push(class);
        }
    }
    let grid = CellGrid { size: s, classes };
    grid.check_consistency()?;
    Ok(grid)
}

/// A kernel shape with everything the generating-function recursion needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeRecord {
    pub shape: Involution,
    pub s: usize,
    /// Capacity: occurrences of 3412 in the shape.
    pub c: usize,
    pub f: usize,
    pub dd: usize,
    pub d: usize,
    pub parity21: u8,
    pub grid: CellGrid,
}

impl ShapeRecord {
    pub fn new(rho: &Involution) -> Result<Self> {
        let grid = classify_cells(rho)?;
        Ok(Self {
            shape: rho.clone(),
            s: rho.len(),
            c: perm::count_3412(rho),
            f: grid.free_count(),
            dd: grid.diagonal_decreasing_count(),
            d: grid.decreasing_pair_count(),
            parity21: (perm::count_pattern_21(rho) % 2) as u8,
            grid,
        })
    }

    pub fn sign(&self) -> i32 {
        if self.parity21 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Kernel and cells of `p` in one step.
pub fn decompose(p: &Involution) -> Result<(Kernel, CellContents)> {
    let k = graph::kernel_of(p)?;
    let cells = cell_decomposition(p, &k)?;
    Ok((k, cells))
}

pub(crate) fn is_strictly_decreasing(values: &[usize]) -> bool {
    values.windows(2).all(|w| w[0] > w[1])
}

pub(crate) fn perm_of_values(values: &[usize]) -> Perm {
    Perm::from_raw(perm::standardize(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::graph::kernel_of;
    use CellClass::*;

    fn inv(s: &str) -> Involution {
        s.parse().unwrap()
    }

    const FIG1: &str = "8 2 3 13 7 6 5 1 11 12 9 10 4 14";

    #[test]
    fn figure_two_decomposition() {
        let pi = inv(FIG1);
        let (_, cells) = decompose(&pi).unwrap();
        assert_eq!(cells.get(1, 1), &[2, 3]);
        assert_eq!(cells.get(2, 2), &[7, 6, 5]);
        assert_eq!(cells.get(3, 3), &[11, 12, 9, 10]);
        assert_eq!(cells.get(4, 4), &[14]);
        assert_eq!(cells.populated().count(), 4);
    }

    #[test]
    fn kernel_itself_has_empty_cells() {
        for s in ["3412", "351624"] {
            let rho = inv(s);
            let k = kernel_of(&rho).unwrap();
            let cells = cell_decomposition(&rho, &k).unwrap();
            assert!(cells.is_all_empty());
            assert_eq!(cells.size() * cells.size(), rho.len() * rho.len());
        }
    }

    #[test]
    fn unassignable_entry_is_reported() {
        // kernel of 2 1 3 is the value-1 entry at position 2; entry 2 precedes it
        let pi = inv("213");
        let k = kernel_of(&pi).unwrap();
        assert!(matches!(cell_decomposition(&pi, &k), Err(Error::Structural(_))));
    }

    #[test]
    fn classify_3412() {
        let g = classify_cells(&inv("3412")).unwrap();
        for (m, l, c) in g.cells() {
            let expected = match (m, l) {
                (2, 2) => DiagonalDecreasing,
                (1, 1) | (3, 3) | (4, 4) => Free,
                _ => Infeasible,
            };
            assert_eq!(c, expected, "cell ({m},{l})");
        }
        let rec = ShapeRecord::new(&inv("3412")).unwrap();
        assert_eq!((rec.s, rec.c, rec.f, rec.dd, rec.d, rec.parity21), (4, 1, 3, 1, 0, 0));
    }

    #[test]
    fn classify_base_shapes() {
        let g = classify_cells(&inv("1")).unwrap();
        assert_eq!(g.get(1, 1), Free);
        let g = classify_cells(&inv("21")).unwrap();
        assert_eq!(g.get(1, 1), Free);
        assert_eq!(g.get(2, 2), Free);
        assert_eq!(g.get(1, 2), Infeasible);
        assert_eq!(g.get(2, 1), Infeasible);
    }

    #[test]
    fn classify_rejects_non_kernels() {
        assert!(classify_cells(&inv("1324")).is_err());
    }

    #[test]
    fn consistency_check_catches_asymmetry() {
        let mut g = classify_cells(&inv("3412")).unwrap();
        g.set(2, 1, Decreasing);
        assert!(g.check_consistency().is_err());
        let mut g = classify_cells(&inv("3412")).unwrap();
        g.set(1, 1, Decreasing);
        assert!(g.check_consistency().is_err());
    }

    #[test]
    fn grid_serializes_as_rows_of_names() {
        let g = classify_cells(&inv("21")).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"[["Free","Infeasible"],["Infeasible","Free"]]"#
        );
    }
}
