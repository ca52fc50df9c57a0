//! Permutations and involutions in one-line notation.
//!
//! Positions and values are 1-based at every public boundary. Internally a
//! permutation of length `n` is a `Vec<u8>` holding the 0-based images, which
//! keeps the hot enumeration loops allocation-free and cache friendly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest length a `Perm` can hold.
pub const MAX_LEN: usize = u8::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    values: Vec<u8>,
}

impl Perm {
    /// Builds a permutation from 1-based one-line notation.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if n > MAX_LEN {
            return Err(Error::Argument(format!("length {n} exceeds {MAX_LEN}")));
        }
        let mut seen = vec![false; n];
        let mut values = Vec::with_capacity(n);
        for &v in one_line {
            if v == 0 || v > n {
                return Err(Error::Argument(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Argument(format!("value {v} repeated")));
            }
            values.push((v - 1) as u8);
        }
        Ok(Self { values })
    }

    /// Wraps 0-based images. The caller guarantees bijectivity.
    pub(crate) fn from_raw(values: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&values));
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self::from_raw((0..n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Image of the 1-based position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.values[pos - 1] as usize + 1
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize + 1).collect()
    }

    /// 0-based images; the layout used by the counting kernels.
    pub fn raw(&self) -> &[u8] {
        &self.values
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Self::from_raw(inv)
    }

    pub fn is_involution(&self) -> bool {
        is_involution_raw(&self.values)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

/// Digits are run together when every value is a single digit (`3412`),
/// otherwise values are space separated (`8 2 3 13 ...`).
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.len() <= 9;
        for (i, v) in self.one_line().into_iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `3412`, `3 4 1 2` or `3,4,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let separated = s.contains(|c: char| c.is_whitespace() || c == ',');
        let bad = || Error::Parse(format!("bad permutation {s:?}"));
        let values: Vec<usize> = if separated {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Perm::new(&values)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::new(&v).map_err(serde::de::Error::custom)
    }
}

/// A self-inverse permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Involution(Perm);

impl Involution {
    pub fn new(one_line: &[usize]) -> Result<Self> {
        Perm::new(one_line)?.try_into()
    }

    pub(crate) fn from_raw(values: Vec<u8>) -> Self {
        debug_assert!(is_involution_raw(&values));
        Self(Perm::from_raw(values))
    }

    pub fn identity(n: usize) -> Self {
        Self(Perm::identity(n))
    }

    pub fn as_perm(&self) -> &Perm {
        &self.0
    }

    pub fn into_perm(self) -> Perm {
        self.0
    }
}

impl std::ops::Deref for Involution {
    type Target = Perm;
    fn deref(&self) -> &Perm {
        &self.0
    }
}

impl TryFrom<Perm> for Involution {
    type Error = Error;
    fn try_from(p: Perm) -> Result<Self> {
        if p.is_involution() {
            Ok(Self(p))
        } else {
            Err(Error::Argument(format!("{p} is not an involution")))
        }
    }
}

impl FromStr for Involution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Perm>()?.try_into()
    }
}

impl<'de> Deserialize<'de> for Involution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Perm::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({})", self.0)
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An occurrence of 3412: positions `i1 < i2 < i3 < i4` (1-based) with
/// `π(i3) < π(i4) < π(i1) < π(i2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Occurrence {
    pub positions: [usize; 4],
}

pub(crate) fn is_bijection(values: &[u8]) -> bool {
    let mut seen = vec![false; values.len()];
    values
        .iter()
        .all(|&v| (v as usize) < seen.len() && !std::mem::replace(&mut seen[v as usize], true))
}

pub(crate) fn is_involution_raw(values: &[u8]) -> bool {
    values
        .iter()
        .enumerate()
        .all(|(i, &v)| (v as usize) < values.len() && values[v as usize] as usize == i)
}

/// Calls `f` with the 0-based positions of every 3412 occurrence, in
/// lexicographic order. Stops early when `f` returns `false`.
pub(crate) fn visit_3412(values: &[u8], mut f: impl FnMut([usize; 4]) -> bool) {
    let n = values.len();
    for i1 in 0..n {
        let a = values[i1];
        for i2 in i1 + 1..n {
            if values[i2] <= a {
                continue;
            }
            for i3 in i2 + 1..n {
                let c = values[i3];
                if c >= a {
                    continue;
                }
                for i4 in i3 + 1..n {
                    let d = values[i4];
                    if d > c && d < a && !f([i1, i2, i3, i4]) {
                        return;
                    }
                }
            }
        }
    }
}

/// Number of 3412 occurrences, giving up once the count exceeds `cap`.
/// The return value is then `cap + 1`.
pub fn count_3412_capped(values: &[u8], cap: usize) -> usize {
    let mut count = 0usize;
    visit_3412(values, |_| {
        count += 1;
        count <= cap
    });
    count
}

pub fn count_3412_raw(values: &[u8]) -> usize {
    count_3412_capped(values, usize::MAX - 1)
}

/// Counts 3412 occurrences without the quadruple loop: for every increasing
/// pair `(i1, i2)` it looks up how many increasing pairs lie strictly to the
/// right of `i2` with both values below `π(i1)`, from a suffix table.
pub fn count_3412_ranked(values: &[u8]) -> usize {
    let n = values.len();
    // below[p][v] = # increasing pairs (j < k), j >= p, with π(k) < v.
    // Since π(j) < π(k) < v, both values are below v.
    let mut below = vec![vec![0usize; n + 1]; n + 1];
    for p in (0..n).rev() {
        let head = values[p] as usize;
        for v in 0..=n {
            // pairs starting at p: later k with head < π(k) < v
            let starting = if head + 1 < v {
                values[p + 1..]
                    .iter()
                    .filter(|&&x| (x as usize) > head && (x as usize) < v)
                    .count()
            } else {
                0
            };
            below[p][v] = below[p + 1][v] + starting;
        }
    }
    let mut total = 0;
    for i1 in 0..n {
        for i2 in i1 + 1..n {
            if values[i2] > values[i1] {
                total += below[i2 + 1][values[i1] as usize];
            }
        }
    }
    total
}

/// All occurrences of 3412 in `p`, sorted lexicographically.
pub fn occurrences_3412(p: &Perm) -> Vec<Occurrence> {
    let mut out = Vec::new();
    visit_3412(p.raw(), |q| {
        out.push(Occurrence {
            positions: q.map(|i| i + 1),
        });
        true
    });
    out
}

pub fn count_3412(p: &Perm) -> usize {
    count_3412_raw(p.raw())
}

pub(crate) fn inversions_raw(values: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                count += 1;
            }
        }
    }
    count
}

/// Occurrences of the pattern 21, i.e. the inversion count.
pub fn count_pattern_21(p: &Perm) -> usize {
    inversions_raw(p.raw())
}

/// The permutation order-isomorphic to the subsequence of `p` at the given
/// strictly increasing 1-based positions.
pub fn reduce_to_pattern(p: &Perm, positions: &[usize]) -> Result<Perm> {
    let mut prev = 0;
    for &pos in positions {
        if pos == 0 || pos > p.len() {
            return Err(Error::Argument(format!("position {pos} outside 1..={}", p.len())));
        }
        if pos <= prev {
            return Err(Error::Argument("positions must be strictly increasing".into()));
        }
        prev = pos;
    }
    let sub: Vec<u8> = positions.iter().map(|&i| p.raw()[i - 1]).collect();
    Ok(Perm::from_raw(standardize(&sub)))
}

/// Replaces each value by its rank (0-based) among the values present.
pub(crate) fn standardize<T: Ord + Copy>(values: &[T]) -> Vec<u8> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    let mut out = vec![0u8; values.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank as u8;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    const FIG1: &str = "8 2 3 13 7 6 5 1 11 12 9 10 4 14";

    #[test]
    fn involution_checks() {
        assert!(p("3412").is_involution());
        assert!(!p("2341").is_involution());
        assert!(Perm::new(&[]).unwrap().is_involution());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(&[1, 1]).is_err());
        assert!(Perm::new(&[0, 1]).is_err());
        assert!(Perm::new(&[1, 3]).is_err());
        assert!("3421".parse::<Involution>().is_err());
    }

    #[test]
    fn occurrences_of_examples() {
        assert_eq!(occurrences_3412(&p(FIG1)).len(), 2);
        assert_eq!(
            occurrences_3412(&p("3412")),
            vec![Occurrence {
                positions: [1, 2, 3, 4]
            }]
        );
        assert_eq!(occurrences_3412(&p("456123")).len(), 9);
        assert_eq!(count_3412_ranked(p("456123").raw()), 9);
    }

    #[test]
    fn capped_count_stops_early() {
        assert_eq!(count_3412_capped(p("456123").raw(), 3), 4);
        assert_eq!(count_3412_capped(p("456123").raw(), 20), 9);
    }

    #[test]
    fn inversions() {
        assert_eq!(count_pattern_21(&p("3412")), 4);
        assert_eq!(count_pattern_21(&Perm::identity(7)), 0);
        assert_eq!(count_pattern_21(&p("21")), 1);
    }

    #[test]
    fn reduction() {
        let pi = p(FIG1);
        // values 8, 13, 1, 4 sit at positions 1, 4, 8, 13
        assert_eq!(reduce_to_pattern(&pi, &[1, 4, 8, 13]).unwrap(), p("3412"));
        let q = p("351624");
        assert_eq!(reduce_to_pattern(&q, &[1, 2, 3, 4, 5, 6]).unwrap(), q);
        assert_eq!(reduce_to_pattern(&q, &[1, 3]).unwrap(), p("21"));
        assert!(reduce_to_pattern(&q, &[0]).is_err());
        assert!(reduce_to_pattern(&q, &[7]).is_err());
        assert!(reduce_to_pattern(&q, &[3, 2]).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(FIG1).to_string(), FIG1);
        assert_eq!(p("3,4,1,2").to_string(), "3412");
        let json = serde_json::to_string(&p("3412")).unwrap();
        assert_eq!(json, "[3,4,1,2]");
        let back: Involution = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_string(), "3412");
    }
}
