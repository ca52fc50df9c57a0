//! Involution enumeration.
//!
//! Involutions are generated by deciding, for the largest element not yet
//! placed, whether it is a fixed point or which smaller free element it is
//! swapped with. Fixed point first, then partners in decreasing order. A
//! partial assignment after the first few decisions is a [`Shard`]; the shards
//! of a given depth partition the full stream and, concatenated in order,
//! reproduce it exactly.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Involution;

/// Default ceiling on `n` for any full enumeration.
pub const DEFAULT_CAP: usize = 16;

const FREE: u8 = u8::MAX;

/// Involution numbers `t(n) = t(n-1) + (n-1) t(n-2)`.
pub fn involution_count(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for k in 1..n as u64 {
        (prev, cur) = (cur, cur + k * prev);
    }
    if n == 0 {
        1
    } else {
        cur
    }
}

pub fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::ResourceCap { requested: n, cap })
    } else {
        Ok(())
    }
}

/// A partially decided involution; undecided slots hold `FREE`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shard {
    slots: Vec<u8>,
}

impl Shard {
    fn root(n: usize) -> Self {
        Self { slots: vec![FREE; n] }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Streams the completions of this shard in canonical order.
    pub fn stream(&self) -> Involutions {
        Involutions::from_slots(self.slots.clone())
    }
}

fn largest_free(slots: &[u8]) -> Option<usize> {
    slots.iter().rposition(|&v| v == FREE)
}

fn largest_free_below(slots: &[u8], bound: usize) -> Option<usize> {
    slots[..bound].iter().rposition(|&v| v == FREE)
}

/// Splits the enumeration of `I_n` into shards by fixing the first `depth`
/// decisions. Shards come back in stream order.
pub fn shards(n: usize, depth: usize) -> Vec<Shard> {
    fn rec(slots: &mut Vec<u8>, depth: usize, out: &mut Vec<Shard>) {
        let Some(e) = (if depth == 0 { None } else { largest_free(slots) }) else {
            out.push(Shard { slots: slots.clone() });
            return;
        };
        slots[e] = e as u8;
        rec(slots, depth - 1, out);
        slots[e] = FREE;
        let mut c = e;
        while let Some(j) = largest_free_below(slots, c) {
            slots[e] = j as u8;
            slots[j] = e as u8;
            rec(slots, depth - 1, out);
            slots[e] = FREE;
            slots[j] = FREE;
            c = j;
        }
    }
    let mut out = Vec::new();
    rec(&mut Shard::root(n).slots, depth, &mut out);
    out
}

/// Depth-first stream over the completions of a partial assignment.
///
/// [`Involutions::advance`] exposes each involution as a borrowed 0-based
/// slice without allocating; the `Iterator` impl clones into [`Involution`].
#[derive(Debug, Clone)]
pub struct Involutions {
    slots: Vec<u8>,
    // (element being decided, its current image)
    stack: Vec<(u8, u8)>,
    started: bool,
    done: bool,
}

impl Involutions {
    fn from_slots(slots: Vec<u8>) -> Self {
        Self {
            slots,
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn fill_fixed(&mut self) {
        while let Some(e) = largest_free(&self.slots) {
            self.slots[e] = e as u8;
            self.stack.push((e as u8, e as u8));
        }
    }

    /// Moves to the next involution and returns it as 0-based images.
    pub fn advance(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_fixed();
            return Some(&self.slots);
        }
        while let Some((e, c)) = self.stack.pop() {
            let (e, c) = (e as usize, c as usize);
            self.slots[e] = FREE;
            self.slots[c] = FREE;
            if let Some(j) = largest_free_below(&self.slots, c) {
                self.slots[e] = j as u8;
                self.slots[j] = e as u8;
                self.stack.push((e as u8, j as u8));
                self.fill_fixed();
                return Some(&self.slots);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        self.advance().map(|s| Involution::from_raw(s.to_vec()))
    }
}

/// Every involution of `{1..n}` exactly once, refusing `n` above `cap`.
pub fn enumerate_involutions_capped(n: usize, cap: usize) -> Result<Involutions> {
    check_cap(n, cap)?;
    Ok(Involutions::from_slots(vec![FREE; n]))
}

pub fn enumerate_involutions(n: usize) -> Result<Involutions> {
    enumerate_involutions_capped(n, DEFAULT_CAP)
}

/// Calls `f` on every involution of size `n` (0-based images).
pub fn for_each_involution(n: usize, mut f: impl FnMut(&[u8])) {
    let mut it = Involutions::from_slots(vec![FREE; n]);
    while let Some(s) = it.advance() {
        f(s);
    }
}

/// Number of leading decisions used to shard a parallel scan of `I_n`.
fn shard_depth(n: usize) -> usize {
    if n >= 10 {
        3
    } else if n >= 6 {
        1
    } else {
        0
    }
}

/// Parallel fold over `I_n`: each shard folds into its own accumulator and
/// the partials are merged in shard order, so the result does not depend on
/// the number of worker threads.
pub fn fold_involutions<T, I, F, R>(n: usize, cap: usize, init: I, fold: F, merge: R) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &[u8]) + Sync,
    R: Fn(T, T) -> T,
{
    check_cap(n, cap)?;
    let partials: Vec<T> = shards(n, shard_depth(n))
        .into_par_iter()
        .map(|shard| {
            let mut acc = init();
            let mut it = shard.stream();
            while let Some(s) = it.advance() {
                fold(&mut acc, s);
            }
            acc
        })
        .collect();
    Ok(partials.into_iter().fold(init(), merge))
}
