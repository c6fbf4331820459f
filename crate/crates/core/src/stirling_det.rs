//! The two families of Stirling-number matrices, their determinants beta
//! and gamma by every available route, and the duality between them.
//!
//! For n, a, b >= 0 the matrices are
//!   M_n(a,b) = ([i+a atop j+b])  and  N_n(a,b) = ({i+a brace j+b}),  1 <= i,j <= n,
//! with beta_n(a,b) = det M_n(a,b) and gamma_n(a,b) = det N_n(a,b).
//! The alternative routes evaluate the same numbers as Schur functions of
//! rectangular shape or as an explicit alternating sum over index subsets;
//! agreement across routes is the point of the whole crate.

use itertools::Itertools;
use num::{traits::Pow, BigInt, BigRational, One, Zero};

use crate::arith::{binomial, factorial};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::Partition;
use crate::schur::{schur_eval, SchurMethod};
use crate::stirling::{stirling1_unsigned, stirling2};
use crate::symfunc::Alphabet;

/// Which Stirling triangle fills the matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    /// Unsigned first kind: M_n(a,b).
    FirstKind,
    /// Second kind: N_n(a,b).
    SecondKind,
}

/// Parameters of one matrix. No a >= b restriction at build time: entries
/// outside the Stirling support are 0 by convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StirlingMatrixSpec {
    pub kind: StirlingKind,
    pub n: usize,
    pub a: usize,
    pub b: usize,
}

/// The n x n matrix with entry (i,j) = S(i+a, j+b), 1-based i and j.
pub fn build_matrix(spec: &StirlingMatrixSpec) -> IntMatrix {
    let StirlingMatrixSpec { kind, n, a, b } = *spec;
    IntMatrix::from_fn(n, |i, j| {
        let row = i + 1 + a;
        let col = (j + 1 + b) as isize;
        match kind {
            StirlingKind::FirstKind => stirling1_unsigned(row, col),
            StirlingKind::SecondKind => stirling2(row, col),
        }
    })
}

/// Evaluation routes for beta_n(a,b).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaMethod {
    /// Fraction-free determinant of M_n(a,b).
    Direct,
    /// s of the rectangle with a-b rows of length n, at (1..a), bialternant.
    SchurBialternant,
    /// Same Schur value through the Jacobi-Trudi h-determinant.
    SchurJacobiTrudiH,
    /// Same Schur value through the Naegelsbach-Kostka e-determinant.
    SchurNaegelsbachE,
    /// The explicit alternating sum over (a-b)-subsets of {1..a}.
    ExplicitSum,
}

pub const BETA_METHODS: [BetaMethod; 5] = [
    BetaMethod::Direct,
    BetaMethod::SchurBialternant,
    BetaMethod::SchurJacobiTrudiH,
    BetaMethod::SchurNaegelsbachE,
    BetaMethod::ExplicitSum,
];

/// Evaluation routes for gamma_n(a,b).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaMethod {
    /// Fraction-free determinant of N_n(a,b).
    Direct,
    /// s of the rectangle with n rows of length a-b, at (1..n+b).
    Schur,
}

pub const GAMMA_METHODS: [GammaMethod; 2] = [GammaMethod::Direct, GammaMethod::Schur];

fn require_b_le_a(a: usize, b: usize, what: &str) -> Result<()> {
    if b > a {
        return Err(Error::Domain(format!(
            "{what} requires b <= a, got a={a}, b={b}"
        )));
    }
    Ok(())
}

/// beta_n(a,b) by the chosen route. Only `Direct` is defined for b > a.
pub fn beta(n: usize, a: usize, b: usize, method: BetaMethod) -> Result<BigInt> {
    match method {
        BetaMethod::Direct => {
            let spec = StirlingMatrixSpec {
                kind: StirlingKind::FirstKind,
                n,
                a,
                b,
            };
            Ok(build_matrix(&spec).det_bareiss())
        }
        BetaMethod::SchurBialternant => beta_schur(n, a, b, SchurMethod::Bialternant),
        BetaMethod::SchurJacobiTrudiH => beta_schur(n, a, b, SchurMethod::JacobiTrudiH),
        BetaMethod::SchurNaegelsbachE => beta_schur(n, a, b, SchurMethod::NaegelsbachE),
        BetaMethod::ExplicitSum => beta_explicit_sum(n, a, b),
    }
}

fn beta_schur(n: usize, a: usize, b: usize, method: SchurMethod) -> Result<BigInt> {
    require_b_le_a(a, b, "the Schur evaluation of beta")?;
    let shape = Partition::rectangle(n, a - b);
    schur_eval(&shape, &Alphabet::canonical(a), method)
}

/// The subset weights A_i = (-1)^(a-i) i^a / a! * C(a,i), i in 1..=a.
pub(crate) fn explicit_sum_weights(a: usize) -> Vec<BigRational> {
    let fact = factorial(a);
    (1..=a)
        .map(|i| {
            let numer = Pow::pow(&BigInt::from(i), a as u32) * binomial(a, i as isize);
            let mut w = BigRational::new(numer, fact.clone());
            if (a - i) % 2 == 1 {
                w = -w;
            }
            w
        })
        .collect()
}

/// One term of the explicit sum, without the i^(n-k+1) power factor:
/// prod A_i * prod of squared differences. Shared by the direct evaluation
/// and the partial-fraction regrouping.
pub(crate) fn explicit_sum_base_term(subset: &[usize], weights: &[BigRational]) -> BigRational {
    let mut term = BigRational::one();
    for &i in subset {
        term *= &weights[i - 1];
    }
    for (&x, &y) in subset.iter().tuple_combinations() {
        let d = x as i64 - y as i64;
        term *= BigRational::from_integer(BigInt::from(d * d));
    }
    term
}

/// The global sign (-1)^(k(k-1)/2) in front of the explicit sum.
pub(crate) fn explicit_sum_sign(k: usize) -> bool {
    (k * k.saturating_sub(1) / 2) % 2 == 1
}

fn beta_explicit_sum(n: usize, a: usize, b: usize) -> Result<BigInt> {
    require_b_le_a(a, b, "the explicit sum for beta")?;
    let k = a - b;
    let weights = explicit_sum_weights(a);
    let exp = n as i32 - k as i32 + 1;
    let mut total = BigRational::zero();
    for subset in (1..=a).combinations(k) {
        let mut term = explicit_sum_base_term(&subset, &weights);
        let rate: BigInt = subset.iter().map(|&i| BigInt::from(i)).product();
        term *= Pow::pow(&BigRational::from_integer(rate), exp);
        total += term;
    }
    if explicit_sum_sign(k) {
        total = -total;
    }
    assert!(
        total.is_integer(),
        "explicit beta sum for (n,a,b)=({n},{a},{b}) did not reduce to an integer: {total}"
    );
    Ok(total.to_integer())
}

/// Number of index subsets in the explicit sum for beta(.,a,b); the sum
/// ranges over the (a-b)-subsets of {1..a}.
pub fn explicit_sum_term_count(a: usize, b: usize) -> Result<usize> {
    require_b_le_a(a, b, "the explicit sum for beta")?;
    Ok((1..=a).combinations(a - b).count())
}

/// gamma_n(a,b) by the chosen route. Only `Direct` is defined for b > a.
pub fn gamma(n: usize, a: usize, b: usize, method: GammaMethod) -> Result<BigInt> {
    match method {
        GammaMethod::Direct => {
            let spec = StirlingMatrixSpec {
                kind: StirlingKind::SecondKind,
                n,
                a,
                b,
            };
            Ok(build_matrix(&spec).det_bareiss())
        }
        GammaMethod::Schur => {
            require_b_le_a(a, b, "the Schur evaluation of gamma")?;
            // The alphabet is (1..n+b), not (1..a); see docs/math-notes.md.
            let shape = Partition::rectangle(a - b, n);
            schur_eval(&shape, &Alphabet::canonical(n + b), SchurMethod::Bialternant)
        }
    }
}

/// beta_n(a+b,b) - gamma_a(n+b,b), both by direct determinants. The duality
/// under test asserts this is always 0.
pub fn duality_residual(n: usize, a: usize, b: usize) -> BigInt {
    let lhs = beta(n, a + b, b, BetaMethod::Direct).expect("direct beta is total");
    let rhs = gamma(a, n + b, b, GammaMethod::Direct).expect("direct gamma is total");
    lhs - rhs
}

/// beta_0(a,b) .. beta_max_n(a,b) by direct determinants.
///
/// The matrices are nested, so one fraction-free elimination of the largest
/// one yields every smaller determinant as a leading principal minor. When a
/// vanishing intermediate minor rules that out (possible only for b > a at
/// desk scale), each determinant is computed separately instead; both paths
/// produce exactly the determinant sequence.
pub fn beta_sequence(a: usize, b: usize, max_n: usize) -> Vec<BigInt> {
    let spec = StirlingMatrixSpec {
        kind: StirlingKind::FirstKind,
        n: max_n,
        a,
        b,
    };
    let full = build_matrix(&spec);
    if let Some(minors) = full.leading_minors() {
        return minors;
    }
    (0..=max_n)
        .map(|n| {
            let spec = StirlingMatrixSpec {
                kind: StirlingKind::FirstKind,
                n,
                a,
                b,
            };
            build_matrix(&spec).det_bareiss()
        })
        .collect()
}

/// True when all five beta routes and both gamma routes agree at (n,a,b).
/// Requires b <= a so that every route is defined.
pub fn methods_agree(n: usize, a: usize, b: usize) -> Result<bool> {
    let reference = beta(n, a, b, BetaMethod::Direct)?;
    for method in BETA_METHODS {
        if beta(n, a, b, method)? != reference {
            return Ok(false);
        }
    }
    let reference = gamma(n, a, b, GammaMethod::Direct)?;
    for method in GAMMA_METHODS {
        if gamma(n, a, b, method)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_matrix_examples() {
        let m = build_matrix(&StirlingMatrixSpec {
            kind: StirlingKind::FirstKind,
            n: 2,
            a: 2,
            b: 1,
        });
        assert_eq!(m, IntMatrix::from_i64_rows(&[&[3, 1], &[11, 6]]));

        let n = build_matrix(&StirlingMatrixSpec {
            kind: StirlingKind::SecondKind,
            n: 2,
            a: 1,
            b: 0,
        });
        assert_eq!(n, IntMatrix::from_i64_rows(&[&[1, 1], &[1, 3]]));

        let empty = build_matrix(&StirlingMatrixSpec {
            kind: StirlingKind::FirstKind,
            n: 0,
            a: 3,
            b: 7,
        });
        assert_eq!(empty.size(), 0);
    }

    #[test]
    fn beta_frozen_examples() {
        for method in BETA_METHODS {
            assert_eq!(beta(1, 2, 1, method).unwrap(), BigInt::from(3));
            assert_eq!(beta(2, 2, 1, method).unwrap(), BigInt::from(7));
            assert_eq!(beta(2, 3, 1, method).unwrap(), BigInt::from(85));
            for n in 0..=5 {
                assert_eq!(beta(n, 1, 1, method).unwrap(), BigInt::one());
            }
            assert_eq!(beta(0, 4, 2, method).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn explicit_sum_weights_worked_example() {
        // a = 3: A_1 = 1/2, A_2 = -4, A_3 = 9/2.
        let w = explicit_sum_weights(3);
        assert_eq!(w[0], BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(w[1], BigRational::from_integer(BigInt::from(-4)));
        assert_eq!(w[2], BigRational::new(BigInt::from(9), BigInt::from(2)));
        assert_eq!(
            beta(1, 3, 1, BetaMethod::ExplicitSum).unwrap(),
            BigInt::from(11)
        );
    }

    #[test]
    fn explicit_sum_term_counts() {
        for a in 0..=7usize {
            for b in 0..=a {
                let count = explicit_sum_term_count(a, b).unwrap();
                assert_eq!(BigInt::from(count), binomial(a, (a - b) as isize));
            }
        }
    }

    #[test]
    fn gamma_frozen_examples() {
        for method in GAMMA_METHODS {
            assert_eq!(gamma(2, 1, 0, method).unwrap(), BigInt::from(2));
            assert_eq!(gamma(1, 3, 1, method).unwrap(), BigInt::from(7));
            assert_eq!(gamma(2, 3, 1, method).unwrap(), BigInt::from(85));
        }
    }

    #[test]
    fn literal_gamma_alphabet_fails_where_corrected_succeeds() {
        // With alphabet (1..a) the Schur form of gamma is wrong already at
        // (n,a,b) = (2,1,0): the shape (1,1) needs two variables.
        let shape = Partition::rectangle(1, 2);
        let literal = schur_eval(&shape, &Alphabet::canonical(1), SchurMethod::Bialternant).unwrap();
        assert_eq!(literal, BigInt::zero());
        assert_eq!(
            gamma(2, 1, 0, GammaMethod::Direct).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(gamma(2, 1, 0, GammaMethod::Schur).unwrap(), BigInt::from(2));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(duality_residual(2, 2, 1), BigInt::zero());
        assert_eq!(duality_residual(1, 1, 0), BigInt::zero());
        assert_eq!(duality_residual(3, 2, 2), BigInt::zero());
        // Spot values behind the first case: both sides are 85.
        assert_eq!(
            beta(2, 3, 1, BetaMethod::Direct).unwrap(),
            BigInt::from(85)
        );
        assert_eq!(
            gamma(2, 3, 1, GammaMethod::Direct).unwrap(),
            BigInt::from(85)
        );
    }

    #[test]
    fn non_direct_methods_reject_b_greater_than_a() {
        assert!(beta(2, 1, 3, BetaMethod::SchurBialternant).is_err());
        assert!(beta(2, 1, 3, BetaMethod::ExplicitSum).is_err());
        assert!(gamma(2, 1, 3, GammaMethod::Schur).is_err());
        // Direct determinants stay total.
        assert!(beta(2, 1, 3, BetaMethod::Direct).is_ok());
        assert!(gamma(2, 1, 3, GammaMethod::Direct).is_ok());
    }

    #[test]
    fn beta_sequence_matches_individual_determinants() {
        for &(a, b) in &[(2usize, 1usize), (3, 1), (4, 2), (3, 3), (0, 0)] {
            let seq = beta_sequence(a, b, 8);
            assert_eq!(seq.len(), 9);
            for (n, value) in seq.iter().enumerate() {
                assert_eq!(
                    *value,
                    beta(n, a, b, BetaMethod::Direct).unwrap(),
                    "(n,a,b)=({n},{a},{b})"
                );
            }
        }
    }

    #[test]
    fn beta_sequence_falls_back_when_minors_vanish() {
        // b > a makes the first entry [1+a atop 1+b] = 0, forcing the
        // per-size fallback path.
        for &(a, b) in &[(0usize, 1usize), (0, 2), (1, 3)] {
            let seq = beta_sequence(a, b, 4);
            assert_eq!(seq.len(), 5);
            for (n, value) in seq.iter().enumerate() {
                assert_eq!(
                    *value,
                    beta(n, a, b, BetaMethod::Direct).unwrap(),
                    "(n,a,b)=({n},{a},{b})"
                );
            }
        }
    }
}
