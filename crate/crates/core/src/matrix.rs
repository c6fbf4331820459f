//! Dense square matrices over arbitrary-precision integers, with exact
//! determinants by fraction-free elimination and, as a cross-check, by
//! cofactor expansion.

use num::{BigInt, One, Signed, Zero};

use crate::arith::exact_div;
use crate::error::{Error, Result};

/// Largest size accepted by the cofactor expansion; it exists only to
/// cross-check the elimination path on small inputs.
pub const LAPLACE_SIZE_LIMIT: usize = 8;

/// Determinant algorithm selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    /// Fraction-free Gaussian elimination; every intermediate division is exact.
    Bareiss,
    /// Recursive cofactor expansion, guarded to small sizes.
    Laplace,
}

/// A square matrix of big integers, row-major. Size 0 is permitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        IntMatrix { size, entries }
    }

    /// Builds from explicit rows; panics unless the layout is square.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "matrix rows must all have length {size}"
        );
        IntMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.size + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |i, j| self.at(j, i).clone())
    }

    pub fn swap_rows(&mut self, r: usize, s: usize) {
        if r == s {
            return;
        }
        for j in 0..self.size {
            self.entries.swap(r * self.size + j, s * self.size + j);
        }
    }

    /// Exact determinant. The 0x0 determinant is 1.
    pub fn det(&self, method: DetMethod) -> Result<BigInt> {
        match method {
            DetMethod::Bareiss => Ok(self.det_bareiss()),
            DetMethod::Laplace => {
                if self.size > LAPLACE_SIZE_LIMIT {
                    return Err(Error::SizeGuard {
                        size: self.size,
                        limit: LAPLACE_SIZE_LIMIT,
                    });
                }
                Ok(self.det_laplace())
            }
        }
    }

    /// Fraction-free elimination with row pivoting on the first nonzero
    /// entry of each column. Total: a zero column means determinant 0.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.size;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut negate = false;
        let mut prev_pivot = BigInt::one();
        for k in 0..n - 1 {
            let Some(pivot_row) = (k..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                return BigInt::zero();
            };
            if pivot_row != k {
                for j in 0..n {
                    a.swap(idx(pivot_row, j), idx(k, j));
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = exact_div(&t, &prev_pivot);
                }
                a[idx(i, k)] = BigInt::zero();
            }
            prev_pivot = a[idx(k, k)].clone();
        }
        let det = a[idx(n - 1, n - 1)].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    fn det_laplace(&self) -> BigInt {
        let n = self.size;
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return self.at(0, 0).clone();
        }
        let mut det = BigInt::zero();
        for j in 0..n {
            let a0j = self.at(0, j);
            if a0j.is_zero() {
                continue;
            }
            let minor = IntMatrix::from_fn(n - 1, |r, c| {
                self.at(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let cofactor = a0j * minor.det_laplace();
            if j % 2 == 0 {
                det += cofactor;
            } else {
                det -= cofactor;
            }
        }
        det
    }

    /// Determinants of all leading principal submatrices, from the empty
    /// matrix (1) up to the full matrix, in one fraction-free elimination.
    ///
    /// Without row swaps the k-th pivot equals the k-th leading minor, so a
    /// single pass yields the whole sequence. Returns `None` when an
    /// intermediate leading minor vanishes, in which case callers must fall
    /// back to per-size determinants.
    pub fn leading_minors(&self) -> Option<Vec<BigInt>> {
        let n = self.size;
        let mut out = Vec::with_capacity(n + 1);
        out.push(BigInt::one());
        if n == 0 {
            return Some(out);
        }
        let mut a = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut prev_pivot = BigInt::one();
        for k in 0..n {
            let pivot = a[idx(k, k)].clone();
            if pivot.is_zero() && k + 1 < n {
                return None;
            }
            out.push(pivot.clone());
            if k + 1 == n {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[idx(i, j)] * &pivot - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = exact_div(&t, &prev_pivot);
                }
            }
            prev_pivot = pivot;
        }
        Some(out)
    }

    /// Largest absolute entry, useful for growth diagnostics in benches.
    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}
