//! The occurrence graph and kernel extraction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{self, Involution, Occurrence, Perm};

/// Bipartite graph joining every entry of `π` (identified by its 1-based
/// position) to each 3412 occurrence it takes part in.
#[derive(Debug, Clone, Serialize)]
pub struct OccurrenceGraph {
    entries: usize,
    occurrences: Vec<Occurrence>,
}

impl OccurrenceGraph {
    pub fn entry_count(&self) -> usize {
        self.entries
    }

    pub fn occurrences(&self) -> &[Occurrence] {
        &self.occurrences
    }

    /// `(entry position, occurrence index)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.occurrences
            .iter()
            .enumerate()
            .flat_map(|(j, o)| o.positions.iter().map(move |&i| (i, j)))
    }

    pub fn entry_degree(&self, position: usize) -> usize {
        self.occurrences
            .iter()
            .filter(|o| o.positions.contains(&position))
            .count()
    }

    /// Entry sets (sorted positions) of the connected components, ordered by
    /// their smallest position.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.entries);
        for o in &self.occurrences {
            let [a, b, c, d] = o.positions.map(|i| i - 1);
            uf.union(a, b);
            uf.union(a, c);
            uf.union(a, d);
        }
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); self.entries];
        for i in 0..self.entries {
            by_root[uf.find(i)].push(i + 1);
        }
        by_root.retain(|c| !c.is_empty());
        by_root.sort();
        by_root
    }
}

pub fn occurrence_graph(p: &Involution) -> OccurrenceGraph {
    OccurrenceGraph {
        entries: p.len(),
        occurrences: perm::occurrences_3412(p),
    }
}

#[derive(Debug, Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// 0-based positions of the kernel entries of `values`, ascending.
///
/// Hot path for the oracle scans: one pass over the occurrences feeding a
/// union-find, then a sweep for the class of the entry holding value 0.
pub(crate) fn kernel_positions_raw(values: &[u8]) -> Vec<usize> {
    let n = values.len();
    let mut uf = UnionFind::new(n);
    perm::visit_3412(values, |[a, b, c, d]| {
        uf.union(a, b);
        uf.union(a, c);
        uf.union(a, d);
        true
    });
    let one = values.iter().position(|&v| v == 0).expect("nonempty permutation");
    let root = uf.find(one);
    (0..n).filter(|&i| uf.find(i) == root).collect()
}

/// Kernel of an involution: the entries in the component of the entry with
/// value 1, and the involution order-isomorphic to them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    /// 1-based positions, ascending.
    pub positions: Vec<usize>,
    pub shape: Involution,
}

impl Kernel {
    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Occurrences of 3412 inside the kernel.
    pub fn capacity(&self) -> usize {
        perm::count_3412(&self.shape)
    }

    /// Values of the kernel entries in `p`, ascending.
    pub fn sorted_values(&self, p: &Perm) -> Vec<usize> {
        let mut v: Vec<usize> = self.positions.iter().map(|&i| p.at(i)).collect();
        v.sort_unstable();
        v
    }
}

pub(crate) fn shape_of_raw(values: &[u8], positions: &[usize]) -> Vec<u8> {
    let sub: Vec<u8> = positions.iter().map(|&i| values[i]).collect();
    perm::standardize(&sub)
}

pub fn kernel_of(p: &Involution) -> Result<Kernel> {
    if p.is_empty() {
        return Err(Error::Argument("the empty involution has no kernel".into()));
    }
    let raw = kernel_positions_raw(p.raw());
    let shape = shape_of_raw(p.raw(), &raw);
    if !perm::is_involution_raw(&shape) {
        return Err(Error::Structural(format!("kernel shape of {p} is not an involution")));
    }
    Ok(Kernel {
        positions: raw.into_iter().map(|i| i + 1).collect(),
        shape: Involution::from_raw(shape),
    })
}

/// `ρ` is a kernel involution iff it is its own kernel shape.
pub fn is_kernel_involution(rho: &Involution) -> bool {
    !rho.is_empty() && kernel_positions_raw(rho.raw()).len() == rho.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(s: &str) -> Involution {
        s.parse().unwrap()
    }

    const FIG1: &str = "8 2 3 13 7 6 5 1 11 12 9 10 4 14";

    #[test]
    fn figure_one_graph() {
        let g = occurrence_graph(&inv(FIG1));
        assert_eq!(g.entry_count(), 14);
        assert_eq!(g.occurrences().len(), 2);
        assert_eq!(g.edges().count(), 8);
        let comps = g.components();
        // kernel {1,4,8,13}, the 11 12 9 10 block, and six singletons
        assert_eq!(comps.len(), 8);
        assert!(comps.contains(&vec![1, 4, 8, 13]));
        assert!(comps.contains(&vec![9, 10, 11, 12]));
    }

    #[test]
    fn trivial_graphs() {
        let g = occurrence_graph(&Involution::identity(5));
        assert!(g.occurrences().is_empty());
        assert_eq!(g.edges().count(), 0);
        let g = occurrence_graph(&inv("3412"));
        assert_eq!(g.occurrences().len(), 1);
        assert!((1..=4).all(|i| g.entry_degree(i) == 1));
        assert_eq!(g.edges().count(), 4);
    }

    #[test]
    fn kernels() {
        let pi = inv(FIG1);
        let k = kernel_of(&pi).unwrap();
        assert_eq!(k.positions, vec![1, 4, 8, 13]);
        let kernel_values: Vec<usize> = k.positions.iter().map(|&i| pi.at(i)).collect();
        assert_eq!(kernel_values, vec![8, 13, 1, 4]);
        assert_eq!(k.shape, inv("3412"));
        assert_eq!((k.size(), k.capacity()), (4, 1));

        let k = kernel_of(&Involution::identity(6)).unwrap();
        assert_eq!(k.positions, vec![1]);
        assert_eq!(k.shape, inv("1"));

        let k = kernel_of(&inv("2157364")).unwrap();
        assert_eq!(k.shape, inv("1"));
        assert_eq!(k.positions, vec![2]);

        assert!(kernel_of(&inv("")).is_err());
    }

    #[test]
    fn kernel_involution_recognition() {
        assert!(is_kernel_involution(&inv("3412")));
        assert!(is_kernel_involution(&inv("351624")));
        assert!(!is_kernel_involution(&inv("1324")));
        assert!(is_kernel_involution(&inv("1")));
        assert!(!is_kernel_involution(&inv("21")));
    }
}
