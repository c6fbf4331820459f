//! Stirling numbers of both kinds.
//!
//! Both kinds are defined by their triangular recurrences and memoized in
//! process-global tables. The tables only ever grow, and are guarded by a
//! reader/writer lock so concurrent callers see a consistent triangle.

use std::sync::{LazyLock, RwLock};

use num::{BigInt, Zero};

static FIRST_KIND: LazyLock<RwLock<Vec<Vec<BigInt>>>> = LazyLock::new(new_table);
static SECOND_KIND: LazyLock<RwLock<Vec<Vec<BigInt>>>> = LazyLock::new(new_table);

fn new_table() -> RwLock<Vec<Vec<BigInt>>> {
    // Row 0 is the shared base case: [0 atop 0] = {0 brace 0} = 1.
    RwLock::new(vec![vec![BigInt::from(1)]])
}

/// How row `m` is produced from row `m-1`; the factor multiplying the
/// same-index predecessor distinguishes the two kinds.
#[derive(Clone, Copy)]
enum Kind {
    First,
    Second,
}

fn extend_to(rows: &mut Vec<Vec<BigInt>>, n: usize, kind: Kind) {
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut v = BigInt::zero();
            if k >= 1 {
                v += &prev[k - 1];
            }
            if k < prev.len() {
                let factor = match kind {
                    // [m atop k] = [m-1 atop k-1] + (m-1) [m-1 atop k]
                    Kind::First => BigInt::from(m - 1),
                    // {m brace k} = {m-1 brace k-1} + k {m-1 brace k}
                    Kind::Second => BigInt::from(k),
                };
                v += factor * &prev[k];
            }
            row.push(v);
        }
        rows.push(row);
    }
}

fn lookup(table: &RwLock<Vec<Vec<BigInt>>>, n: usize, k: isize, kind: Kind) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = k as usize;
    {
        let rows = table.read().unwrap();
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = table.write().unwrap();
    extend_to(&mut rows, n, kind);
    rows[n][k].clone()
}

/// Unsigned Stirling number of the first kind: permutations of `n` elements
/// with exactly `k` disjoint cycles. Zero outside 0 <= k <= n.
pub fn stirling1_unsigned(n: usize, k: isize) -> BigInt {
    lookup(&FIRST_KIND, n, k, Kind::First)
}

/// Stirling number of the second kind: partitions of an `n`-set into exactly
/// `k` non-empty blocks. Zero outside 0 <= k <= n.
pub fn stirling2(n: usize, k: isize) -> BigInt {
    lookup(&SECOND_KIND, n, k, Kind::Second)
}
