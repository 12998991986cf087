//! q-cyclotomic cosets modulo n.
//!
//! Integers in intervals may be negative; `x < 0` stands for the residue
//! `n + x`. The leader-set helpers (`cl`, `pcl_plus`, `pcl_minus`) return
//! integers, not residues, so the sign information is kept.

use serde::Serialize;

use crate::arith::{gcd, residue};
use crate::error::{Error, Result};
use crate::field::ord_mod;

/// Default cap on the length of a sieved index.
pub const DEFAULT_INDEX_LIMIT: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetRecord {
    pub leader: u64,
    pub size: u64,
    /// `a, aq, aq^2, ...` in orbit order, starting from the reduced input.
    pub members: Vec<u64>,
}

fn check_coprime(n: u64, q: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

fn orbit(n: u64, q: u64, a: u64) -> Vec<u64> {
    let mut out = vec![a];
    let mut x = (a as u128 * q as u128 % n as u128) as u64;
    while x != a {
        out.push(x);
        x = (x as u128 * q as u128 % n as u128) as u64;
    }
    out
}

pub fn coset_of(n: u64, q: u64, a: i64) -> Result<CosetRecord> {
    check_coprime(n, q)?;
    let members = orbit(n, q, residue(a, n));
    Ok(CosetRecord {
        leader: *members.iter().min().unwrap(),
        size: members.len() as u64,
        members,
    })
}

/// Leader test by walking the orbit; needs no sieve.
pub fn is_coset_leader(n: u64, q: u64, a: i64) -> Result<bool> {
    let rec = coset_of(n, q, a)?;
    Ok(rec.leader == rec.members[0])
}

/// The integers `b, b+1, ..., b+delta-2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DefiningRange {
    pub n: u64,
    pub b: i64,
    pub delta: u64,
}

impl DefiningRange {
    pub fn new(n: u64, b: i64, delta: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        if delta < 2 {
            return Err(Error::params(format!("designed distance {delta} is below 2")));
        }
        Ok(DefiningRange { n, b, delta })
    }

    pub fn first(&self) -> i64 {
        self.b
    }

    pub fn last(&self) -> i64 {
        self.b + self.delta as i64 - 2
    }

    pub fn integers(&self) -> std::ops::RangeInclusive<i64> {
        self.first()..=self.last()
    }

    /// Residues mod n in interval order; repeats appear only if the interval
    /// wraps past n.
    pub fn resolved(&self) -> Vec<u64> {
        self.integers().map(|x| residue(x, self.n)).collect()
    }

    /// Resolved residues, sorted and deduplicated.
    pub fn resolved_set(&self) -> Vec<u64> {
        let mut v = self.resolved();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Whether the residue set is closed under `i -> -i mod n`.
    pub fn is_negation_closed(&self) -> bool {
        let set = self.resolved_set();
        set.iter()
            .all(|&i| set.binary_search(&((self.n - i) % self.n)).is_ok())
    }
}

/// Full sieve of the cosets of Z_n under multiplication by q.
#[derive(Debug, Clone)]
pub struct CosetIndex {
    n: u64,
    q: u64,
    ord: u32,
    leader_of: Vec<u32>,
    /// `(leader, size)` in increasing leader order.
    sizes: Vec<(u32, u32)>,
}

impl CosetIndex {
    pub fn build(n: u64, q: u64) -> Result<Self> {
        Self::build_with_limit(n, q, DEFAULT_INDEX_LIMIT)
    }

    pub fn build_with_limit(n: u64, q: u64, limit: u64) -> Result<Self> {
        check_coprime(n, q)?;
        let limit = limit.min(u32::MAX as u64);
        if n > limit {
            return Err(Error::SizeExceeded {
                what: "coset index length",
                size: n as u128,
                limit: limit as u128,
            });
        }
        let ord = ord_mod(n, q)?;
        let mut leader_of = vec![u32::MAX; n as usize];
        let mut sizes = Vec::new();
        for a in 0..n {
            if leader_of[a as usize] != u32::MAX {
                continue;
            }
            let mut x = a;
            let mut size = 0u32;
            loop {
                leader_of[x as usize] = a as u32;
                size += 1;
                x = (x as u128 * q as u128 % n as u128) as u64;
                if x == a {
                    break;
                }
            }
            sizes.push((a as u32, size));
        }
        Ok(CosetIndex {
            n,
            q,
            ord,
            leader_of,
            sizes,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `ord_n(q)`.
    pub fn ord(&self) -> u32 {
        self.ord
    }

    pub fn leader(&self, a: i64) -> u64 {
        self.leader_of[residue(a, self.n) as usize] as u64
    }

    pub fn is_leader(&self, a: i64) -> bool {
        let r = residue(a, self.n);
        self.leader_of[r as usize] as u64 == r
    }

    pub fn coset_size(&self, a: i64) -> u64 {
        let l = self.leader(a) as u32;
        let i = self
            .sizes
            .binary_search_by_key(&l, |&(leader, _)| leader)
            .expect("every leader has a size");
        self.sizes[i].1 as u64
    }

    /// `(leader, size)` pairs in increasing leader order.
    pub fn cosets(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.sizes.iter().map(|&(l, s)| (l as u64, s as u64))
    }

    pub fn coset_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn record(&self, a: i64) -> CosetRecord {
        let members = orbit(self.n, self.q, residue(a, self.n));
        CosetRecord {
            leader: self.leader(a),
            size: members.len() as u64,
            members,
        }
    }

    /// Distinct coset leaders met by the range, increasing.
    pub fn leaders_in(&self, range: &DefiningRange) -> Result<Vec<u64>> {
        if range.n != self.n {
            return Err(Error::LengthMismatch {
                range: range.n,
                index: self.n,
            });
        }
        let mut leaders: Vec<u64> = range.integers().map(|x| self.leader(x)).collect();
        leaders.sort_unstable();
        leaders.dedup();
        Ok(leaders)
    }

    /// Size of the union of the cosets of the range's residues.
    pub fn union_size(&self, range: &DefiningRange) -> Result<u64> {
        Ok(self
            .leaders_in(range)?
            .into_iter()
            .map(|l| self.coset_size(l as i64))
            .sum())
    }

    /// `n - union_size`, the dimension of the cyclic code with this defining
    /// range.
    pub fn dimension(&self, range: &DefiningRange) -> Result<u64> {
        Ok(self.n - self.union_size(range)?)
    }

    /// `{x in [b1, b2] : x != 0, |x| is a coset leader}`.
    pub fn cl(&self, b1: i64, b2: i64) -> Vec<i64> {
        (b1..=b2)
            .filter(|&x| x != 0 && self.is_leader(x.abs()))
            .collect()
    }

    fn orbit_meets(&self, x: i64, lo: i64, hi: i64) -> bool {
        orbit(self.n, self.q, residue(x, self.n))
            .into_iter()
            .any(|y| lo <= y as i64 && y as i64 <= hi)
    }

    /// Leaders below `b1` whose coset meets `[b1, b2]`.
    pub fn pcl_plus(&self, b1: i64, b2: i64) -> Vec<i64> {
        let out: Vec<i64> = self
            .cl(1, b1 - 1)
            .into_iter()
            .filter(|&x| self.orbit_meets(x, b1, b2))
            .collect();
        debug_assert!(out.iter().all(|x| (1..b1).contains(x)));
        out
    }

    /// `{x in CL(-b0, -1) : some q^j x mod n lies in [1, b1]}`.
    pub fn pcl_minus(&self, b0: i64, b1: i64) -> Vec<i64> {
        let out: Vec<i64> = self
            .cl(-b0, -1)
            .into_iter()
            .filter(|&x| self.orbit_meets(x, 1, b1))
            .collect();
        debug_assert!(out.iter().all(|x| (-b0..0).contains(x)));
        out
    }
}
