//! Rational generating functions for the beta sequences.
//!
//! The denominator is predicted in fully factored form from (a,b) alone;
//! the numerator is fitted from the sequence and then verified against a
//! block of guard coefficients that must all vanish. A failed guard check
//! is a loud error, never a silent truncation. The same machinery also
//! builds the closed form beta_n = sum of c_r * r^n by regrouping the
//! explicit subset sum by the product of each subset.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{traits::Pow, BigInt, BigRational, One, Zero};

use crate::arith::{exact_div, factorial};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::stirling_det::{
    beta_sequence, explicit_sum_base_term, explicit_sum_sign, explicit_sum_weights,
};

/// A quotient of polynomials in q, normalized so den(0) = 1. Not reduced to
/// lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Scales numerator and denominator so the denominator's constant term
    /// is 1; errors when den(0) = 0 (no power series at q = 0).
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let c0 = den.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if c0.is_one() {
            return Ok(RationalFunction { num, den });
        }
        let inv = c0.recip();
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Degree of gcd(num, den): 0 means the fit produced a fraction already
    /// in lowest terms, a positive value records an observed cancellation.
    pub fn common_factor_degree(&self) -> usize {
        if self.num.is_zero() {
            return 0;
        }
        self.num.gcd(&self.den).degree().unwrap_or(0)
    }
}

/// Growth rates a!/(i_1...i_b) over the b-subsets of {1..a}, sorted
/// ascending. Each is exact because the quotient is the product of the
/// complementary subset.
pub fn denominator_factors(a: usize, b: usize) -> Result<Vec<BigInt>> {
    if b > a {
        return Err(Error::Domain(format!(
            "denominator factors require b <= a, got a={a}, b={b}"
        )));
    }
    let fact = factorial(a);
    let mut rates: Vec<BigInt> = (1..=a)
        .combinations(b)
        .map(|subset| {
            let prod: BigInt = subset.iter().map(|&i| BigInt::from(i)).product();
            exact_div(&fact, &prod)
        })
        .collect();
    rates.sort();
    Ok(rates)
}

/// The predicted denominator: the product of (1 - r q) over the rates.
/// Degree C(a,b), constant term 1.
pub fn denominator(a: usize, b: usize) -> Result<Poly> {
    let rates = denominator_factors(a, b)?;
    let mut den = Poly::one();
    for r in rates {
        let factor = Poly::from_coeffs(vec![
            BigRational::one(),
            BigRational::from_integer(-r),
        ]);
        den = &den * &factor;
    }
    Ok(den)
}

/// Fits sum_n beta_n(a,b) q^n = num / den with den predicted from (a,b).
///
/// The first deg(den) product coefficients become the numerator; the next
/// `guard` + 1 coefficients of the product series x denominator must all be
/// exactly zero or the fit fails.
pub fn fit_generating_function(a: usize, b: usize, guard: usize) -> Result<RationalFunction> {
    if guard == 0 {
        return Err(Error::Domain("fit requires guard >= 1".into()));
    }
    let den = denominator(a, b)?;
    let d = den.degree().expect("denominator has positive degree");
    let betas: Vec<BigRational> = beta_sequence(a, b, d + guard)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    let mut num_coeffs = Vec::with_capacity(d);
    for m in 0..=d + guard {
        let mut c = BigRational::zero();
        for j in 0..=m.min(d) {
            c += den.coeff(j) * &betas[m - j];
        }
        if m < d {
            num_coeffs.push(c);
        } else if !c.is_zero() {
            return Err(Error::FitFailure {
                a,
                b,
                index: m,
                value: c.to_string(),
            });
        }
    }
    RationalFunction::new(Poly::from_coeffs(num_coeffs), den)
}

/// The closed form beta_n = sum over terms of coeff * rate^n, with rates
/// strictly decreasing. Terms whose aggregated coefficient vanishes are
/// dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionForm {
    terms: Vec<(BigInt, BigRational)>,
}

impl PartialFractionForm {
    pub fn terms(&self) -> &[(BigInt, BigRational)] {
        &self.terms
    }

    /// sum coeff * rate^n.
    pub fn value_at(&self, n: usize) -> BigRational {
        let mut total = BigRational::zero();
        for (rate, coeff) in &self.terms {
            total += coeff * BigRational::from_integer(Pow::pow(rate, n as u32));
        }
        total
    }
}

/// Regroups the explicit subset sum for beta(., a, b) by the product of
/// each (a-b)-subset: the subset with product r contributes
/// sign * (prod A_i) * (prod squared differences) * r^(1-k) to the
/// coefficient of r^n. Subsets sharing a product are aggregated.
pub fn partial_fractions(a: usize, b: usize) -> Result<PartialFractionForm> {
    if b > a {
        return Err(Error::Domain(format!(
            "partial fractions require b <= a, got a={a}, b={b}"
        )));
    }
    let k = a - b;
    let weights = explicit_sum_weights(a);
    let negate = explicit_sum_sign(k);
    let mut by_rate: BTreeMap<BigInt, BigRational> = BTreeMap::new();
    for subset in (1..=a).combinations(k) {
        let mut coeff = explicit_sum_base_term(&subset, &weights);
        let rate: BigInt = subset.iter().map(|&i| BigInt::from(i)).product();
        coeff *= Pow::pow(&BigRational::from_integer(rate.clone()), 1 - k as i32);
        if negate {
            coeff = -coeff;
        }
        *by_rate.entry(rate).or_insert_with(BigRational::zero) += coeff;
    }
    let terms = by_rate
        .into_iter()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(PartialFractionForm { terms })
}

/// First `count` Taylor coefficients of `rf` at q = 0, by the linear
/// recurrence its denominator induces (den(0) = 1 by construction).
pub fn series_expand(rf: &RationalFunction, count: usize) -> Vec<BigRational> {
    let den_deg = rf.den().degree().unwrap_or(0);
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    for m in 0..count {
        let mut c = rf.num().coeff(m);
        for j in 1..=m.min(den_deg) {
            let sub = rf.den().coeff(j) * &out[m - j];
            c -= sub;
        }
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stirling_det::{beta, BetaMethod};

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn denominator_examples() {
        // (a,b) = (2,1): (1-q)(1-2q) = 1 - 3q + 2q^2.
        assert_eq!(denominator(2, 1).unwrap(), Poly::from_i64_coeffs(&[1, -3, 2]));
        // (a,b) = (2,0): the empty subset alone, factor 1 - 2!q.
        assert_eq!(denominator(2, 0).unwrap(), Poly::from_i64_coeffs(&[1, -2]));
        assert_eq!(denominator(1, 1).unwrap(), Poly::from_i64_coeffs(&[1, -1]));
        assert!(denominator(1, 2).is_err());
    }

    #[test]
    fn denominator_factor_multiset_complements() {
        // {a!/prod(T) : |T| = b} equals {prod(S) : |S| = a-b} as multisets.
        for a in 0..=7usize {
            for b in 0..=a {
                let rates = denominator_factors(a, b).unwrap();
                let mut complements: Vec<BigInt> = (1..=a)
                    .combinations(a - b)
                    .map(|s| s.iter().map(|&i| BigInt::from(i)).product())
                    .collect();
                complements.sort();
                assert_eq!(rates, complements, "(a,b)=({a},{b})");
            }
        }
    }

    #[test]
    fn fit_examples() {
        // beta_n(2,1) = 2^(n+1) - 1 has generating function 1/((1-q)(1-2q)).
        let rf = fit_generating_function(2, 1, 10).unwrap();
        assert_eq!(rf.num(), &Poly::one());
        assert_eq!(rf.den(), &denominator(2, 1).unwrap());

        let rf = fit_generating_function(1, 1, 5).unwrap();
        assert_eq!(rf.num(), &Poly::one());
        assert_eq!(rf.den(), &Poly::from_i64_coeffs(&[1, -1]));

        let rf = fit_generating_function(2, 0, 5).unwrap();
        assert_eq!(rf.num(), &Poly::one());
        assert_eq!(rf.den(), &Poly::from_i64_coeffs(&[1, -2]));
    }

    #[test]
    fn fit_rejects_bad_guard() {
        assert!(fit_generating_function(2, 1, 0).is_err());
    }

    #[test]
    fn fit_failure_is_loud_for_a_wrong_denominator() {
        // Feed the fitter machinery a sequence that is NOT generated by the
        // (a,b) denominator by checking the guard tail directly: the
        // sequence beta_n(3,1) against the (2,1) denominator.
        let den = denominator(2, 1).unwrap();
        let d = den.degree().unwrap();
        let betas: Vec<BigRational> = beta_sequence(3, 1, d + 5)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut nonzero_guard = false;
        for m in d..=d + 5 {
            let mut c = BigRational::zero();
            for j in 0..=m.min(d) {
                c += den.coeff(j) * &betas[m - j];
            }
            if !c.is_zero() {
                nonzero_guard = true;
            }
        }
        assert!(nonzero_guard, "wrong denominator must trip the guard");
    }

    #[test]
    fn series_examples() {
        let geo = RationalFunction::new(Poly::one(), Poly::from_i64_coeffs(&[1, -2])).unwrap();
        assert_eq!(series_expand(&geo, 4), vec![rat(1), rat(2), rat(4), rat(8)]);

        let two_rates =
            RationalFunction::new(Poly::one(), denominator(2, 1).unwrap()).unwrap();
        assert_eq!(
            series_expand(&two_rates, 4),
            vec![rat(1), rat(3), rat(7), rat(15)]
        );

        let poly_case =
            RationalFunction::new(Poly::from_i64_coeffs(&[1, 1]), Poly::one()).unwrap();
        assert_eq!(series_expand(&poly_case, 3), vec![rat(1), rat(1), rat(0)]);

        assert_eq!(series_expand(&geo, 0), Vec::<BigRational>::new());
    }

    #[test]
    fn rational_function_normalizes_constant_term() {
        let rf = RationalFunction::new(
            Poly::from_i64_coeffs(&[2]),
            Poly::from_i64_coeffs(&[2, -4]),
        )
        .unwrap();
        assert_eq!(rf.den(), &Poly::from_i64_coeffs(&[1, -2]));
        assert_eq!(rf.num(), &Poly::one());
        assert!(RationalFunction::new(Poly::one(), Poly::from_i64_coeffs(&[0, 1])).is_err());
    }

    #[test]
    fn partial_fraction_examples() {
        // beta_n(2,1) = 2*2^n - 1.
        let pf = partial_fractions(2, 1).unwrap();
        assert_eq!(
            pf.terms(),
            &[(BigInt::from(2), rat(2)), (BigInt::from(1), rat(-1))]
        );
        // beta_n(1,1) = 1.
        let pf = partial_fractions(1, 1).unwrap();
        assert_eq!(pf.terms(), &[(BigInt::from(1), rat(1))]);
        // beta_n(2,0) = 2^n.
        let pf = partial_fractions(2, 0).unwrap();
        assert_eq!(pf.terms(), &[(BigInt::from(2), rat(1))]);
    }

    #[test]
    fn partial_fractions_match_beta_with_repeated_rates() {
        // In {1..6} the pairs {1,6} and {2,3} share the product 6, so the
        // denominator has repeated roots; the aggregated closed form must
        // still reproduce the sequence.
        for &(a, b) in &[(6usize, 4usize), (6, 2)] {
            let pf = partial_fractions(a, b).unwrap();
            let rates: Vec<&BigInt> = pf.terms().iter().map(|(r, _)| r).collect();
            assert!(rates.windows(2).all(|w| w[0] > w[1]), "rates must decrease");
            for n in 0..=8usize {
                let direct = beta(n, a, b, BetaMethod::Direct).unwrap();
                assert_eq!(
                    pf.value_at(n),
                    BigRational::from_integer(direct),
                    "(n,a,b)=({n},{a},{b})"
                );
            }
        }
    }

    #[test]
    fn observed_cancellation_with_repeated_rates() {
        // Repeated denominator roots must cancel against the numerator for
        // the closed form to stay purely geometric.
        let rf = fit_generating_function(6, 4, 10).unwrap();
        assert!(rf.common_factor_degree() > 0);
        let rf = fit_generating_function(2, 1, 10).unwrap();
        assert_eq!(rf.common_factor_degree(), 0);
    }
}
