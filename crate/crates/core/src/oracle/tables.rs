//! Occurrence-count tables by direct enumeration, and the printed reference
//! tables they are compared with.

use serde::Serialize;

use crate::enumerate::{self, involution_count};
use crate::error::{Error, Result};
use crate::perm;

/// Default largest `n` for table building.
pub const DEFAULT_TABLE_CAP: usize = 14;

/// Published counts of involutions of size `n` (columns 0..=12) with exactly
/// `r` occurrences of 3412 (rows 0..=6).
pub const TABLE1: [[u64; 13]; 7] = [
    [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511],
    [0, 0, 0, 0, 1, 5, 20, 70, 231, 735, 2289, 7029, 21384],
    [0, 0, 0, 0, 0, 0, 1, 7, 37, 165, 671, 2563, 9375],
    [0, 0, 0, 0, 0, 0, 1, 4, 17, 63, 236, 877, 3270],
    [0, 0, 0, 0, 0, 0, 2, 12, 56, 220, 803, 2783, 9364],
    [0, 0, 0, 0, 0, 0, 0, 2, 14, 80, 383, 1658, 6690],
    [0, 0, 0, 0, 0, 0, 0, 2, 11, 51, 212, 856, 3402],
];

/// Published counts of the even ones among them.
pub const TABLE2_EVEN: [[u64; 13]; 7] = [
    [1, 1, 1, 2, 3, 11, 31, 71, 155, 379, 1051, 2971, 8053],
    [0, 0, 0, 0, 1, 5, 14, 30, 82, 320, 1213, 3895, 11141],
    [0, 0, 0, 0, 0, 0, 0, 0, 11, 95, 439, 1463, 4407],
    [0, 0, 0, 0, 0, 0, 1, 4, 11, 29, 104, 396, 1486],
    [0, 0, 0, 0, 0, 0, 0, 0, 14, 108, 321, 1612, 4782],
    [0, 0, 0, 0, 0, 0, 0, 0, 6, 60, 275, 878, 2247],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 21, 122, 446, 1504],
];

/// `counts[r][n]` = involutions of size `n` with exactly `r` occurrences;
/// `overflow[n]` = those with more than `max_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub max_n: usize,
    pub max_r: usize,
    pub counts: Vec<Vec<u64>>,
    pub overflow: Vec<u64>,
}

impl CountTable {
    pub fn get(&self, r: usize, n: usize) -> u64 {
        self.counts[r][n]
    }

    pub fn column_sum(&self, n: usize) -> u64 {
        self.counts.iter().map(|row| row[n]).sum::<u64>() + self.overflow[n]
    }

    /// Every column must add up to the number of involutions of that size.
    pub fn check_column_sums(&self) -> Result<()> {
        for n in 0..=self.max_n {
            let (got, want) = (self.column_sum(n), involution_count(n));
            if got != want {
                return Err(Error::Consistency(format!(
                    "column n = {n} sums to {got}, expected {want}"
                )));
            }
        }
        Ok(())
    }
}

/// The same counts split by parity of the number of inversions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityTable {
    pub max_n: usize,
    pub max_r: usize,
    pub even: Vec<Vec<u64>>,
    pub odd: Vec<Vec<u64>>,
    pub overflow_even: Vec<u64>,
    pub overflow_odd: Vec<u64>,
}

impl ParityTable {
    pub fn counts(&self) -> CountTable {
        let add = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
        CountTable {
            max_n: self.max_n,
            max_r: self.max_r,
            counts: self.even.iter().zip(&self.odd).map(|(e, o)| add(e, o)).collect(),
            overflow: add(&self.overflow_even, &self.overflow_odd),
        }
    }

    /// `even − odd`, the coefficient of `x^n` in `N_r`.
    pub fn signed(&self, r: usize, n: usize) -> i64 {
        self.even[r][n] as i64 - self.odd[r][n] as i64
    }
}

/// Builds both tables in one sweep per size. Counting stops at `max_r + 1`
/// occurrences, which lands in the overflow bucket.
fn scan(max_n: usize, max_r: usize, cap: usize) -> Result<ParityTable> {
    enumerate::check_cap(max_n, cap)?;
    let mut even = vec![vec![0u64; max_n + 1]; max_r + 2];
    let mut odd = even.clone();
    for n in 0..=max_n {
        let (e, o) = enumerate::fold_involutions(
            n,
            cap,
            || (vec![0u64; max_r + 2], vec![0u64; max_r + 2]),
            |(e, o), values| {
                let r = perm::count_3412_capped(values, max_r);
                if perm::inversions_raw(values) % 2 == 0 {
                    e[r] += 1;
                } else {
                    o[r] += 1;
                }
            },
            |(mut e, mut o), (e2, o2)| {
                e.iter_mut().zip(e2).for_each(|(a, b)| *a += b);
                o.iter_mut().zip(o2).for_each(|(a, b)| *a += b);
                (e, o)
            },
        )?;
        for r in 0..=max_r + 1 {
            even[r][n] = e[r];
            odd[r][n] = o[r];
        }
    }
    let overflow_even = even.pop().unwrap();
    let overflow_odd = odd.pop().unwrap();
    Ok(ParityTable {
        max_n,
        max_r,
        even,
        odd,
        overflow_even,
        overflow_odd,
    })
}

pub fn brute_table(max_n: usize, max_r: usize) -> Result<CountTable> {
    brute_table_capped(max_n, max_r, DEFAULT_TABLE_CAP)
}

pub fn brute_table_capped(max_n: usize, max_r: usize, cap: usize) -> Result<CountTable> {
    Ok(scan(max_n, max_r, cap)?.counts())
}

pub fn brute_parity_table(max_n: usize, max_r: usize) -> Result<ParityTable> {
    brute_parity_table_capped(max_n, max_r, DEFAULT_TABLE_CAP)
}

pub fn brute_parity_table_capped(max_n: usize, max_r: usize, cap: usize) -> Result<ParityTable> {
    scan(max_n, max_r, cap)
}

/// One cell where a computed table and a printed table disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenDiff {
    pub r: usize,
    pub n: usize,
    pub printed: u64,
    pub computed: u64,
}

fn diff_rows(rows: &[Vec<u64>], golden: &[[u64; 13]; 7]) -> Vec<GoldenDiff> {
    let mut out = Vec::new();
    for (r, row) in rows.iter().enumerate().take(golden.len()) {
        for (n, &computed) in row.iter().enumerate().take(13) {
            let printed = golden[r][n];
            if printed != computed {
                out.push(GoldenDiff {
                    r,
                    n,
                    printed,
                    computed,
                });
            }
        }
    }
    out
}

/// Cells of `t` that differ from [`TABLE1`] (over the overlap of the two).
pub fn golden_diff_counts(t: &CountTable) -> Vec<GoldenDiff> {
    diff_rows(&t.counts, &TABLE1)
}

/// Cells of the even part of `t` that differ from [`TABLE2_EVEN`].
pub fn golden_diff_even(t: &ParityTable) -> Vec<GoldenDiff> {
    diff_rows(&t.even, &TABLE2_EVEN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let t = brute_parity_table(8, 2).unwrap();
        let c = t.counts();
        c.check_column_sums().unwrap();
        assert_eq!(c.get(1, 5), 5);
        assert_eq!(c.get(2, 6), 1);
        assert_eq!(t.even[0][5], 11);
        assert_eq!(t.odd[0][4], 6);
        // 351624 is odd
        assert_eq!(t.odd[2][6], 1);
        assert!(golden_diff_counts(&c).is_empty());
    }

    #[test]
    fn overflow_holds_the_rest() {
        let c = brute_table(6, 0).unwrap();
        assert_eq!(c.overflow[6], 76 - 51);
        c.check_column_sums().unwrap();
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(brute_table_capped(9, 1, 8), Err(Error::ResourceCap { .. })));
    }
}
