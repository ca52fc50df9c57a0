//! Kernel shapes with capacity up to `r`.

use std::collections::BTreeSet;

use super::cells::ShapeRecord;
use super::graph;
use crate::enumerate::{self, check_cap, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::perm::{self, Involution};

/// The unique kernel involution of capacity `r` and size `2r + 2`.
///
/// `ψ⁰ = 21`; for `r ≥ 1` it is the product of the transpositions `(1 3)`,
/// `(2i, 2i+3)` for `1 ≤ i < r`, and `(2r, 2r+2)`.
pub fn psi_shape(r: usize) -> Result<Involution> {
    let size = 2 * r + 2;
    if size > perm::MAX_LEN {
        return Err(Error::Argument(format!("psi^{r} is too large")));
    }
    let mut one_line: Vec<usize> = (1..=size).collect();
    let mut swap = |a: usize, b: usize| {
        one_line[a - 1] = b;
        one_line[b - 1] = a;
    };
    if r == 0 {
        swap(1, 2);
    } else {
        swap(1, 3);
        for i in 1..r {
            swap(2 * i, 2 * i + 3);
        }
        swap(2 * r, 2 * r + 2);
    }
    let psi = Involution::new(&one_line)?;
    let c = perm::count_3412(&psi);
    if c != r {
        return Err(Error::Consistency(format!(
            "psi^{r} = {psi} has capacity {c}, expected {r}"
        )));
    }
    Ok(psi)
}

/// Kernel involutions of size `n` whose capacity lies in `1..=r`.
pub fn kernel_shapes_of_size(n: usize, r: usize, cap: usize) -> Result<Vec<Involution>> {
    let found = enumerate::fold_involutions(
        n,
        cap,
        Vec::new,
        |acc: &mut Vec<Vec<u8>>, values| {
            let c = perm::count_3412_capped(values, r);
            if c >= 1 && c <= r && graph::kernel_positions_raw(values).len() == n {
                acc.push(values.to_vec());
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    Ok(found.into_iter().map(Involution::from_raw).collect())
}

/// All kernel shapes with capacity `1..=r`, sorted by size then one-line
/// notation. Sizes up to `2r + 1` come from exhaustive search; the size
/// `2r + 2` shape is `ψ^r`. The base shapes `1` and `21` are not included.
pub fn shape_catalog(r: usize) -> Result<Vec<ShapeRecord>> {
    shape_catalog_capped(r, DEFAULT_CAP)
}

pub fn shape_catalog_capped(r: usize, cap: usize) -> Result<Vec<ShapeRecord>> {
    if r == 0 {
        return Err(Error::Argument("the shape catalog needs r >= 1".into()));
    }
    check_cap(2 * r + 1, cap)?;
    let mut shapes: BTreeSet<(usize, Involution)> = BTreeSet::new();
    for n in 4..=2 * r + 1 {
        for rho in kernel_shapes_of_size(n, r, cap)? {
            shapes.insert((n, rho));
        }
    }
    for c in 1..=r {
        let psi = psi_shape(c)?;
        shapes.insert((psi.len(), psi));
    }
    shapes.into_iter().map(|(_, rho)| ShapeRecord::new(&rho)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_lines(cat: &[ShapeRecord]) -> Vec<String> {
        cat.iter().map(|r| r.shape.to_string()).collect()
    }

    #[test]
    fn psi_small_cases() {
        assert_eq!(psi_shape(0).unwrap().to_string(), "21");
        assert_eq!(psi_shape(1).unwrap().to_string(), "3412");
        assert_eq!(psi_shape(2).unwrap().to_string(), "351624");
        assert_eq!(psi_shape(3).unwrap().to_string(), "35172846");
        for r in 0..=8 {
            let psi = psi_shape(r).unwrap();
            assert_eq!(psi.len(), 2 * r + 2);
            assert!(r == 0 || graph::is_kernel_involution(&psi), "r = {r}");
        }
    }

    #[test]
    fn catalogs_for_r1_r2() {
        assert_eq!(one_lines(&shape_catalog(1).unwrap()), vec!["3412"]);
        assert_eq!(one_lines(&shape_catalog(2).unwrap()), vec!["3412", "351624"]);
    }

    #[test]
    fn catalog_r3_contains_psi3() {
        let cat = shape_catalog(3).unwrap();
        let psi3 = cat.iter().find(|r| r.shape.to_string() == "35172846").unwrap();
        assert_eq!((psi3.s, psi3.c, psi3.f, psi3.dd, psi3.d), (8, 3, 5, 3, 0));
        assert!(cat.iter().all(|r| r.c >= 1 && r.c <= 3 && r.s <= 2 * r.c + 2));
        assert!(cat.windows(2).all(|w| (w[0].s, &w[0].shape) < (w[1].s, &w[1].shape)));
    }

    #[test]
    fn catalog_refuses_r0_and_huge_r() {
        assert!(shape_catalog(0).is_err());
        assert!(matches!(shape_catalog(8), Err(Error::ResourceCap { .. })));
    }
}
