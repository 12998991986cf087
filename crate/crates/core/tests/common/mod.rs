//! Brute-force oracles written independently of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn orbit(n: u64, q: u64, a: u64) -> Vec<u64> {
    let mut out = vec![a % n];
    loop {
        let next = out.last().unwrap() * q % n;
        if next == out[0] {
            return out;
        }
        out.push(next);
    }
}

pub fn leader(n: u64, q: u64, a: u64) -> u64 {
    *orbit(n, q, a).iter().min().unwrap()
}

pub fn residue(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

/// `n` minus the size of the union of the orbits of `b, ..., b + delta - 2`.
pub fn dimension(n: u64, q: u64, b: i64, delta: u64) -> u64 {
    let mut roots = BTreeSet::new();
    for x in b..=b + delta as i64 - 2 {
        roots.extend(orbit(n, q, residue(x, n)));
    }
    n - roots.len() as u64
}

/// Every nonzero weight of the linear span of `rows` over GF(p), `p` prime.
pub fn min_weight_prime(rows: &[Vec<u64>], p: u64) -> u64 {
    let k = rows.len() as u32;
    let n = rows[0].len();
    let mut best = u64::MAX;
    for msg in 1..p.pow(k) {
        let mut word = vec![0u64; n];
        let mut x = msg;
        for row in rows {
            let c = x % p;
            x /= p;
            for (w, r) in word.iter_mut().zip(row) {
                *w = (*w + c * r) % p;
            }
        }
        best = best.min(word.iter().filter(|&&w| w != 0).count() as u64);
    }
    best
}
