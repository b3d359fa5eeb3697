//! Ranks of the cobordism groups of simple branched coverings in every
//! dimension.
//!
//! Rationally the group splits as the oriented bordism group of the target
//! plus `k - 1` copies of a bordism group of the normal data of the singular
//! locus. For oriented singular submanifolds that summand is
//! `Omega_{n-2}(BSO_2)`, for unoriented ones the twisted `Omega_{n-2}(BO_2)`.

use std::sync::OnceLock;

use serde::Serialize;

use crate::hurwitz::Mode;

const PARTITION_CACHE: usize = 512;

fn partition_table() -> &'static [u128] {
    static TABLE: OnceLock<Vec<u128>> = OnceLock::new();
    TABLE.get_or_init(|| partition_counts(PARTITION_CACHE))
}

/// `pi(0), .., pi(max)` by the coin-change recurrence over part sizes.
fn partition_counts(max: usize) -> Vec<u128> {
    let mut ways = vec![0u128; max + 1];
    ways[0] = 1;
    for part in 1..=max {
        for total in part..=max {
            ways[total] += ways[total - part];
        }
    }
    ways
}

/// Number of partitions of `i` into positive integers; `pi(0) = 1`.
pub fn partition_count(i: usize) -> u128 {
    match partition_table().get(i) {
        Some(&v) => v,
        None => partition_counts(i)[i],
    }
}

fn partition_prefix_sum(upto: i64) -> u128 {
    (0..=upto).map(|i| partition_count(i as usize)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankQuery {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankBreakdown {
    pub total: u128,
    /// `rk Omega^SO_n`.
    pub bordism_of_target: u128,
    /// `rk Omega^SO_{n-2}(BSO_2)` or `rk Omega^{gamma_O}_{n-2}(BO_2)`.
    pub singular_summand: u128,
    /// Number of singular summands, `k - 1`.
    pub multiplicity: u128,
}

/// `rk Omega^SO_n`: `pi(n / 4)` when `4 | n`, otherwise 0.
pub fn oriented_bordism_rank(n: usize) -> u128 {
    if n % 4 == 0 {
        partition_count(n / 4)
    } else {
        0
    }
}

/// Rank of the singular-locus summand in dimension `n`.
pub fn singular_summand_rank(n: usize, mode: Mode) -> u128 {
    let n = n as i64;
    match mode {
        Mode::Oriented if n % 2 == 0 => partition_prefix_sum((n - 2).div_euclid(4)),
        Mode::Unoriented if n % 4 == 0 => partition_prefix_sum((n - 1).div_euclid(4)),
        _ => 0,
    }
}

/// Closed form of the total rank, evaluated independently of the breakdown.
pub fn closed_form_rank(q: RankQuery) -> u128 {
    let k = q.k as u128;
    let n = q.n;
    if n % 2 == 1 {
        return 0;
    }
    let below = |m: usize| -> u128 { (0..m).map(partition_count).sum() };
    if n % 4 == 0 {
        let m = n / 4;
        (k - 1) * below(m) + partition_count(m)
    } else {
        match q.mode {
            Mode::Oriented => (k - 1) * below((n + 2) / 4),
            Mode::Unoriented => 0,
        }
    }
}

/// Rank of `Cob(n, k)` with its summand decomposition. Panics if the
/// breakdown and the closed form disagree.
pub fn rank_cob(q: RankQuery) -> RankBreakdown {
    assert!(q.k >= 2, "degree must be at least 2");
    let bordism_of_target = oriented_bordism_rank(q.n);
    let singular_summand = singular_summand_rank(q.n, q.mode);
    let multiplicity = (q.k - 1) as u128;
    let total = bordism_of_target + multiplicity * singular_summand;
    assert_eq!(total, closed_form_rank(q), "rank breakdown disagrees with the closed form for {q:?}");
    RankBreakdown {
        total,
        bordism_of_target,
        singular_summand,
        multiplicity,
    }
}
