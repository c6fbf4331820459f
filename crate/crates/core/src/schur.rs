//! Schur function evaluation at integer alphabets by three independent
//! routes: the bialternant quotient, the Jacobi-Trudi determinant in the
//! complete homogeneous functions, and the Naegelsbach-Kostka determinant
//! in the elementary ones.

use num::{traits::Pow, BigInt, Zero};

use crate::arith::exact_div;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::Partition;
use crate::symfunc::{sym_spec, Alphabet, SymKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurMethod {
    /// det(x_i^(lambda_j + a - j)) / det(x_i^(a - j)) over a distinct alphabet.
    Bialternant,
    /// det(h_(lambda_i - i + j)) of size len(lambda).
    JacobiTrudiH,
    /// det(e_(lambda'_i - i + j)) of size len(lambda').
    NaegelsbachE,
}

/// The exact value s_lambda(alphabet).
///
/// Whenever lambda has more parts than the alphabet has entries the value is
/// 0 for every method; that check runs before the bialternant's
/// distinctness requirement, so oversized partitions never error.
pub fn schur_eval(lambda: &Partition, alphabet: &Alphabet, method: SchurMethod) -> Result<BigInt> {
    if lambda.len() > alphabet.len() {
        return Ok(BigInt::zero());
    }
    match method {
        SchurMethod::Bialternant => bialternant(lambda, alphabet),
        SchurMethod::JacobiTrudiH => {
            let size = lambda.len();
            Ok(sym_det(size, alphabet, SymKind::Complete, |i| {
                lambda.part(i) as isize
            }))
        }
        SchurMethod::NaegelsbachE => {
            let conj = lambda.conjugate();
            let size = conj.len();
            Ok(sym_det(size, alphabet, SymKind::Elementary, |i| {
                conj.part(i) as isize
            }))
        }
    }
}

/// det(f_(part(i) - i + j)) with the part indexed by the row, the classical
/// determinant-identity convention. The column-indexed variant with shift
/// j - i agrees only on rectangular shapes; it fails already at
/// lambda = (2,1), so it is not what these identities mean.
fn sym_det(
    size: usize,
    alphabet: &Alphabet,
    kind: SymKind,
    part: impl Fn(usize) -> isize,
) -> BigInt {
    let m = IntMatrix::from_fn(size, |i, j| {
        sym_spec(kind, part(i) - i as isize + j as isize, alphabet)
    });
    m.det_bareiss()
}

fn bialternant(lambda: &Partition, alphabet: &Alphabet) -> Result<BigInt> {
    if !alphabet.is_pairwise_distinct() {
        return Err(Error::DegenerateAlphabet);
    }
    let a = alphabet.len();
    let xs = alphabet.values();
    // lambda is zero-padded to a parts; column j (0-based) carries exponent
    // lambda_j + a - 1 - j.
    let numer = IntMatrix::from_fn(a, |i, j| {
        let e = (lambda.part(j) + a - 1 - j) as u32;
        Pow::pow(&xs[i], e)
    })
    .det_bareiss();
    let denom = IntMatrix::from_fn(a, |i, j| Pow::pow(&xs[i], (a - 1 - j) as u32)).det_bareiss();
    // The alternant quotient divides exactly; exact_div enforces it.
    Ok(exact_div(&numer, &denom))
}

/// All three methods on one input, in a fixed order. Convenience for the
/// agreement checks.
pub fn schur_eval_all(lambda: &Partition, alphabet: &Alphabet) -> Result<Vec<BigInt>> {
    [
        SchurMethod::Bialternant,
        SchurMethod::JacobiTrudiH,
        SchurMethod::NaegelsbachE,
    ]
    .iter()
    .map(|&m| schur_eval(lambda, alphabet, m))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    const METHODS: [SchurMethod; 3] = [
        SchurMethod::Bialternant,
        SchurMethod::JacobiTrudiH,
        SchurMethod::NaegelsbachE,
    ];

    #[test]
    fn frozen_examples() {
        let lam = Partition::new(vec![1, 1]);
        let alph = Alphabet::from_i64(&[1, 2]);
        for m in METHODS {
            // s_(1,1)(x1,x2) = x1 x2 = 2 at (1,2).
            assert_eq!(schur_eval(&lam, &alph, m).unwrap(), BigInt::from(2));
        }
        for m in METHODS {
            assert_eq!(
                schur_eval(&Partition::empty(), &alph, m).unwrap(),
                BigInt::one()
            );
        }
        // Jacobi-Trudi 2x2: h_2^2 - h_1 h_3 = 625 - 540 with h at (1,2,3).
        let lam = Partition::new(vec![2, 2]);
        let alph = Alphabet::from_i64(&[1, 2, 3]);
        for m in METHODS {
            assert_eq!(schur_eval(&lam, &alph, m).unwrap(), BigInt::from(85));
        }
    }

    #[test]
    fn non_rectangular_shape_pins_index_convention() {
        // s_(2,1)(x,y) = xy(x+y) = 6 at (1,2). A column-indexed shift j - i
        // in the determinant identities collapses this to 0.
        let lam = Partition::new(vec![2, 1]);
        let alph = Alphabet::from_i64(&[1, 2]);
        for m in METHODS {
            assert_eq!(schur_eval(&lam, &alph, m).unwrap(), BigInt::from(6));
        }
    }

    #[test]
    fn vanishing_when_too_many_parts() {
        let lam = Partition::new(vec![1, 1, 1]);
        let alph = Alphabet::from_i64(&[1, 2]);
        for m in METHODS {
            assert_eq!(schur_eval(&lam, &alph, m).unwrap(), BigInt::zero());
        }
        // The short-circuit runs before the distinctness check.
        let repeated = Alphabet::from_i64(&[5, 5]);
        assert_eq!(
            schur_eval(&lam, &repeated, SchurMethod::Bialternant).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn degenerate_alphabet_is_an_error() {
        let lam = Partition::new(vec![1]);
        let repeated = Alphabet::from_i64(&[5, 5]);
        match schur_eval(&lam, &repeated, SchurMethod::Bialternant) {
            Err(Error::DegenerateAlphabet) => {}
            other => panic!("expected degenerate-alphabet error, got {other:?}"),
        }
        // The determinant identities do not divide by an alternant and stay total.
        assert!(schur_eval(&lam, &repeated, SchurMethod::JacobiTrudiH).is_ok());
    }

    #[test]
    fn single_row_and_single_column_reduce_to_h_and_e() {
        let alph = Alphabet::from_i64(&[1, 2, 3, 4]);
        for m in 0..=6usize {
            let row = if m == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![m])
            };
            let col = Partition::rectangle(1, m);
            for method in METHODS {
                assert_eq!(
                    schur_eval(&row, &alph, method).unwrap(),
                    sym_spec(SymKind::Complete, m as isize, &alph)
                );
                assert_eq!(
                    schur_eval(&col, &alph, method).unwrap(),
                    sym_spec(SymKind::Elementary, m as isize, &alph)
                );
            }
        }
    }

    #[test]
    fn two_variable_rectangles_factor() {
        // s_(n,n)(x1,x2) = (x1 x2)^n, so 2^n at (1,2).
        let alph = Alphabet::from_i64(&[1, 2]);
        for n in 0..=10usize {
            let lam = Partition::rectangle(n, 2);
            let want = Pow::pow(&BigInt::from(2), n as u32);
            for m in METHODS {
                assert_eq!(schur_eval(&lam, &alph, m).unwrap(), want, "n={n}");
            }
        }
    }

    #[test]
    fn empty_alphabet() {
        let empty = Alphabet::new(vec![]);
        for m in METHODS {
            assert_eq!(
                schur_eval(&Partition::empty(), &empty, m).unwrap(),
                BigInt::one()
            );
            assert_eq!(
                schur_eval(&Partition::new(vec![2]), &empty, m).unwrap(),
                BigInt::zero()
            );
        }
    }

    #[test]
    fn negative_alphabet_entries_agree_across_methods() {
        let alph = Alphabet::from_i64(&[-2, 1, 3]);
        for n in 0..=4usize {
            for lam in Partition::all_of(n) {
                let vals = schur_eval_all(&lam, &alph).unwrap();
                assert!(vals.windows(2).all(|w| w[0] == w[1]), "lambda={lam}");
            }
        }
    }
}
