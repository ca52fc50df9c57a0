//! Strategies shared by the property suites and the acceptance target.
#![allow(dead_code)]

use std::sync::Arc;

use inv3412::algebra::{delta_motzkin, delta_signed, Poly, QuadExt, RatFunc};
use inv3412::{Involution, Perm};
use proptest::prelude::*;

pub fn discriminants() -> [(&'static str, Arc<Poly>); 2] {
    [
        ("1 - 2*x - 3*x^2", Arc::new(delta_motzkin())),
        ("1 - 2*x + 5*x^2", Arc::new(delta_signed())),
    ]
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

/// Rational functions whose denominator does not vanish at 0, so they expand
/// as power series.
pub fn regular_ratfunc() -> impl Strategy<Value = RatFunc> {
    let lead = prop_oneof![-3i64..=-1, 1i64..=3];
    (poly(3), lead, prop::collection::vec(-3i64..=3, 0..=2)).prop_map(|(num, c0, rest)| {
        let mut den = vec![c0];
        den.extend(rest);
        RatFunc::new(num, Poly::from_ints(&den)).expect("nonzero denominator")
    })
}

pub fn quadext(disc: Arc<Poly>) -> impl Strategy<Value = QuadExt> {
    (regular_ratfunc(), regular_ratfunc()).prop_map(move |(a, b)| QuadExt::new(a, b, disc.clone()))
}

/// Uniform-ish permutation of size `0..=max_n` in one-line notation.
pub fn perm(max_n: usize) -> impl Strategy<Value = Perm> {
    (0..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Perm::new(&v).expect("shuffle is a permutation"))
    })
}

/// Random involution: shuffle `1..=n`, then pair up consecutive entries
/// where the coin says so.
pub fn involution(min_n: usize, max_n: usize) -> impl Strategy<Value = Involution> {
    (min_n..=max_n).prop_flat_map(|n| {
        (
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(order, coins)| {
                let mut img: Vec<usize> = (0..=n).collect();
                let mut i = 0;
                while i + 1 < order.len() {
                    if coins[i] {
                        let (a, b) = (order[i], order[i + 1]);
                        img[a] = b;
                        img[b] = a;
                        i += 2;
                    } else {
                        i += 1;
                    }
                }
                Involution::new(&img[1..]).expect("paired transpositions")
            })
    })
}

pub fn reverse_complement(p: &Perm) -> Perm {
    let n = p.len();
    let v: Vec<usize> = (1..=n).rev().map(|i| n + 1 - p.at(i)).collect();
    Perm::new(&v).expect("reverse-complement is a permutation")
}
