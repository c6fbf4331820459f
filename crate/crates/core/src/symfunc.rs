//! Integer alphabets and specializations of the elementary and complete
//! homogeneous symmetric functions.

use std::fmt;

use num::{BigInt, One, Zero};

/// An ordered list of integers to substitute for the variables of a
/// symmetric function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    values: Vec<BigInt>,
}

impl Alphabet {
    pub fn new(values: Vec<BigInt>) -> Self {
        Alphabet { values }
    }

    /// The canonical alphabet (1, 2, ..., n).
    pub fn canonical(n: usize) -> Self {
        Alphabet {
            values: (1..=n).map(BigInt::from).collect(),
        }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Alphabet {
            values: values.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// True when no two entries coincide (required by the bialternant).
    pub fn is_pairwise_distinct(&self) -> bool {
        let mut sorted = self.values.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Which family of symmetric functions to specialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    Complete,
}

/// Evaluates e_m or h_m at an integer alphabet.
///
/// Conventions: m = 0 gives 1, m < 0 gives 0, e_m vanishes for m beyond the
/// alphabet size, and h_m on the empty alphabet vanishes for m > 0.
pub fn sym_spec(kind: SymKind, m: isize, alphabet: &Alphabet) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    let m = m as usize;
    match kind {
        SymKind::Elementary => elementary(m, alphabet.values()),
        SymKind::Complete => complete(m, alphabet.values()),
    }
}

/// e_m by adding one variable at a time: e_j <- e_j + x e_{j-1}, where the
/// descending sweep keeps e_{j-1} at the previous variable count.
fn elementary(m: usize, xs: &[BigInt]) -> BigInt {
    let mut dp = vec![BigInt::zero(); m + 1];
    dp[0] = BigInt::one();
    for x in xs {
        for j in (1..=m).rev() {
            let add = x * &dp[j - 1];
            dp[j] += add;
        }
    }
    dp.pop().unwrap()
}

/// h_m by h_j(x_1..x_N) = h_j(x_1..x_{N-1}) + x_N h_{j-1}(x_1..x_N); the
/// ascending sweep makes dp[j-1] the already-updated value.
fn complete(m: usize, xs: &[BigInt]) -> BigInt {
    let mut dp = vec![BigInt::zero(); m + 1];
    dp[0] = BigInt::one();
    for x in xs {
        for j in 1..=m {
            let add = x * &dp[j - 1];
            dp[j] += add;
        }
    }
    dp.pop().unwrap()
}
