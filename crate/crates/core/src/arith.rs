//! Exact integer helpers shared by every other module.

use num::{BigInt, Integer, One, Zero};

/// Divides `a` by `b`, panicking if the quotient is not exact.
///
/// All divisions in the fraction-free elimination and in the alternant
/// quotient are exact by construction; a remainder here is a bug in the
/// caller, not bad input.
pub fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division: {a} / {b}");
    q
}

/// n! by direct product.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient C(n, k). Returns 0 for k < 0 or k > n.
pub fn binomial(n: usize, k: isize) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut c = BigInt::one();
    for i in 1..=k {
        // c * (n-k+i) is divisible by i at every step.
        c = exact_div(&(c * BigInt::from(n - k + i)), &BigInt::from(i));
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520i64));
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        // Independent oracle: Pascal triangle built by addition only.
        let n_max = 20;
        let mut row = vec![BigInt::one()];
        for n in 0..=n_max {
            for k in 0..=n {
                assert_eq!(binomial(n, k as isize), row[k], "C({n},{k})");
            }
            let mut next = vec![BigInt::one()];
            for k in 1..=n {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigInt::one());
            row = next;
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(
            factorial(20),
            "2432902008176640000".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn exact_div_divides() {
        assert_eq!(
            exact_div(&BigInt::from(42), &BigInt::from(-7)),
            BigInt::from(-6)
        );
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn exact_div_rejects_remainder() {
        exact_div(&BigInt::from(7), &BigInt::from(2));
    }
}
