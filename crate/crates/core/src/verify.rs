//! The invariant suite behind the `verify` subcommand: every library
//! invariant at desk scale, with independent oracles where one exists.
//! All randomness is seeded, so a run is reproducible bit for bit.

use num::{traits::Pow, BigInt, BigRational, One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{binomial, factorial};
use crate::genfun::{
    denominator, denominator_factors, fit_generating_function, partial_fractions, series_expand,
    RationalFunction,
};
use crate::matrix::{DetMethod, IntMatrix};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::schur::{schur_eval, schur_eval_all, SchurMethod};
use crate::stirling::{stirling1_unsigned, stirling2};
use crate::stirling_det::{
    beta, duality_residual, explicit_sum_term_count, gamma, BetaMethod, GammaMethod, BETA_METHODS,
};
use crate::symfunc::{sym_spec, Alphabet, SymKind};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Empty on success; the first offending case on failure.
    pub detail: String,
}

type Check = std::result::Result<(), String>;

fn run(name: &'static str, f: impl FnOnce() -> Check) -> CheckResult {
    match f() {
        Ok(()) => CheckResult {
            name,
            passed: true,
            detail: String::new(),
        },
        Err(detail) => CheckResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs the whole suite. `max` scales the beta/gamma sweep ranges; the
/// remaining checks run at their fixed desk-scale bounds. At `max` = 6 the
/// suite covers every documented invariant.
pub fn run_all(max: usize) -> Vec<CheckResult> {
    vec![
        run("stirling1-row-sums", stirling1_row_sums),
        run("rising-factorial-coefficients", rising_factorial_coefficients),
        run("bell-row-sums", bell_row_sums),
        run("stirling2-ogf", stirling2_ogf),
        run("specialization-identities", specialization_identities),
        run("sym-spec-symmetry", sym_spec_symmetry),
        run("det-methods-agree", det_methods_agree),
        run("det-alternating", det_alternating),
        run("det-transpose", det_transpose),
        run("det-repeated-row", det_repeated_row),
        run("schur-methods-agree", schur_methods_agree),
        run("schur-vanishing", schur_vanishing),
        run("schur-row-column", schur_row_column),
        run("schur-symmetry", schur_symmetry),
        run("schur-rectangle-two-vars", schur_rectangle_two_vars),
        run("beta-methods-agree", move || beta_methods_agree(max)),
        run("gamma-methods-agree", move || gamma_methods_agree(max)),
        run("gamma-literal-alphabet-counterexample", gamma_literal_alphabet),
        run("duality", move || duality(max)),
        run("explicit-sum-term-count", move || term_count(max)),
        run("beta-positivity", move || beta_positivity(max)),
        run("genfun-roundtrip", move || genfun_roundtrip(max)),
        run("partial-fractions-consistency", move || {
            partial_fractions_consistency(max)
        }),
        run("rate-denominator-duality", move || rate_duality(max)),
    ]
}

// ---- combinatorics oracles ----

fn stirling1_row_sums() -> Check {
    for n in 0..=12usize {
        let sum: BigInt = (0..=n).map(|k| stirling1_unsigned(n, k as isize)).sum();
        if sum != factorial(n) {
            return Err(format!("row {n}: sum {sum} != {}", factorial(n)));
        }
    }
    Ok(())
}

/// Coefficients of x(x+1)...(x+n-1) by plain integer polynomial
/// multiplication, independent of the Stirling recurrences.
fn rising_factorial_coeffs(n: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for i in 0..n {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j] += BigInt::from(i) * c;
            next[j + 1] += c;
        }
        coeffs = next;
    }
    coeffs
}

fn rising_factorial_coefficients() -> Check {
    for n in 0..=12usize {
        let coeffs = rising_factorial_coeffs(n);
        for (k, c) in coeffs.iter().enumerate() {
            let s = stirling1_unsigned(n, k as isize);
            if *c != s {
                return Err(format!("n={n}, k={k}: coefficient {c} != [n atop k] {s}"));
            }
        }
    }
    Ok(())
}

fn bell_row_sums() -> Check {
    // B_0 = 1, B_(n+1) = sum_k C(n,k) B_k: uses only the binomial.
    let mut bell = vec![BigInt::one()];
    for n in 0..12usize {
        let next: BigInt = (0..=n).map(|k| binomial(n, k as isize) * &bell[k]).sum();
        bell.push(next);
    }
    for n in 0..=12usize {
        let sum: BigInt = (0..=n).map(|k| stirling2(n, k as isize)).sum();
        if sum != bell[n] {
            return Err(format!("row {n}: sum {sum} != B_{n} = {}", bell[n]));
        }
    }
    Ok(())
}

/// The classical ordinary generating function of the second kind in a fixed
/// column: sum_n {n brace k} q^n = q^k / ((1-q)(1-2q)...(1-kq)).
fn stirling2_ogf() -> Check {
    for k in 0..=6usize {
        let mut den = Poly::one();
        for j in 1..=k {
            den = &den * &Poly::from_i64_coeffs(&[1, -(j as i64)]);
        }
        let rf = RationalFunction::new(
            Poly::monomial(BigRational::one(), k),
            den,
        )
        .expect("den(0) = 1");
        for (n, c) in series_expand(&rf, 13).into_iter().enumerate() {
            let want = BigRational::from_integer(stirling2(n, k as isize));
            if c != want {
                return Err(format!("k={k}, n={n}: series {c} != {want}"));
            }
        }
    }
    Ok(())
}

fn specialization_identities() -> Check {
    for big_n in 0..=10usize {
        let alphabet = Alphabet::canonical(big_n);
        for m in 0..=10isize {
            let e = sym_spec(SymKind::Elementary, m, &alphabet);
            let want_e = stirling1_unsigned(big_n + 1, big_n as isize + 1 - m);
            if e != want_e {
                return Err(format!("e_{m}(1..{big_n}) = {e}, expected {want_e}"));
            }
            let h = sym_spec(SymKind::Complete, m, &alphabet);
            let want_h = stirling2(big_n + m as usize, big_n as isize);
            if h != want_h {
                return Err(format!("h_{m}(1..{big_n}) = {h}, expected {want_h}"));
            }
        }
    }
    Ok(())
}

fn sym_spec_symmetry() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..60 {
        let len = rng.gen_range(0..=6);
        let mut values: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
        let before = Alphabet::from_i64(&values);
        values.shuffle(&mut rng);
        let after = Alphabet::from_i64(&values);
        for m in 0..=6isize {
            for kind in [SymKind::Elementary, SymKind::Complete] {
                let x = sym_spec(kind, m, &before);
                let y = sym_spec(kind, m, &after);
                if x != y {
                    return Err(format!(
                        "{kind:?} m={m}: {x} != {y} after shuffling {before}"
                    ));
                }
            }
        }
    }
    Ok(())
}

// ---- determinant engine ----

fn random_matrix(rng: &mut ChaCha8Rng, size: usize) -> IntMatrix {
    IntMatrix::from_fn(size, |_, _| BigInt::from(rng.gen_range(-9..=9)))
}

fn det_methods_agree() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for trial in 0..500 {
        let size = rng.gen_range(0..=6);
        let m = random_matrix(&mut rng, size);
        let bareiss = m.det(DetMethod::Bareiss).expect("total");
        let laplace = m.det(DetMethod::Laplace).expect("size <= 8");
        if bareiss != laplace {
            return Err(format!(
                "trial {trial}, size {size}: bareiss {bareiss} != laplace {laplace}"
            ));
        }
    }
    Ok(())
}

fn det_alternating() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(203);
    for _ in 0..100 {
        let size = rng.gen_range(2..=6);
        let m = random_matrix(&mut rng, size);
        let r = rng.gen_range(0..size);
        let mut s = rng.gen_range(0..size - 1);
        if s >= r {
            s += 1;
        }
        let mut swapped = m.clone();
        swapped.swap_rows(r, s);
        if swapped.det_bareiss() != -m.det_bareiss() {
            return Err(format!("swap rows {r},{s} of size {size} did not negate"));
        }
    }
    Ok(())
}

fn det_transpose() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(204);
    for _ in 0..100 {
        let size = rng.gen_range(0..=6);
        let m = random_matrix(&mut rng, size);
        if m.transpose().det_bareiss() != m.det_bareiss() {
            return Err(format!("transpose changed a determinant at size {size}"));
        }
    }
    Ok(())
}

fn det_repeated_row() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(205);
    for _ in 0..100 {
        let size = rng.gen_range(2..=6);
        let mut m = random_matrix(&mut rng, size);
        let src = rng.gen_range(0..size);
        let mut dst = rng.gen_range(0..size - 1);
        if dst >= src {
            dst += 1;
        }
        let row: Vec<BigInt> = (0..size).map(|j| m.at(src, j).clone()).collect();
        m = IntMatrix::from_fn(size, |i, j| {
            if i == dst {
                row[j].clone()
            } else {
                m.at(i, j).clone()
            }
        });
        if !m.det_bareiss().is_zero() {
            return Err(format!("repeated row at size {size} gave nonzero det"));
        }
    }
    Ok(())
}

// ---- Schur evaluation ----

fn schur_methods_agree() -> Check {
    for a in 0..=5usize {
        let alphabet = Alphabet::canonical(a);
        for weight in 0..=8usize {
            for lambda in Partition::all_of(weight) {
                if lambda.len() > a {
                    continue;
                }
                let vals = schur_eval_all(&lambda, &alphabet).map_err(|e| e.to_string())?;
                if !vals.windows(2).all(|w| w[0] == w[1]) {
                    return Err(format!("lambda={lambda}, a={a}: {vals:?}"));
                }
            }
        }
    }
    Ok(())
}

fn schur_vanishing() -> Check {
    let alphabet = Alphabet::canonical(2);
    for lambda in [
        Partition::rectangle(1, 3),
        Partition::new(vec![2, 2, 1]),
        Partition::rectangle(1, 5),
    ] {
        for method in [
            SchurMethod::Bialternant,
            SchurMethod::JacobiTrudiH,
            SchurMethod::NaegelsbachE,
        ] {
            let v = schur_eval(&lambda, &alphabet, method).map_err(|e| e.to_string())?;
            if !v.is_zero() {
                return Err(format!("{lambda} on 2 variables gave {v}"));
            }
        }
    }
    Ok(())
}

fn schur_row_column() -> Check {
    for a in 0..=5usize {
        let alphabet = Alphabet::canonical(a);
        for m in 0..=8usize {
            let row = Partition::rectangle(m, 1);
            let col = Partition::rectangle(1, m);
            let h = sym_spec(SymKind::Complete, m as isize, &alphabet);
            let e = sym_spec(SymKind::Elementary, m as isize, &alphabet);
            for method in [
                SchurMethod::Bialternant,
                SchurMethod::JacobiTrudiH,
                SchurMethod::NaegelsbachE,
            ] {
                let sr = schur_eval(&row, &alphabet, method).map_err(|e| e.to_string())?;
                if sr != h {
                    return Err(format!("s_({m}) != h_{m} on 1..{a}: {sr} vs {h}"));
                }
                let sc = schur_eval(&col, &alphabet, method).map_err(|e| e.to_string())?;
                if sc != e {
                    return Err(format!("s_(1^{m}) != e_{m} on 1..{a}: {sc} vs {e}"));
                }
            }
        }
    }
    Ok(())
}

fn schur_symmetry() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let pool: Vec<i64> = (-6..=6).collect();
    for _ in 0..40 {
        let len = rng.gen_range(1..=4);
        let mut picks = pool.clone();
        picks.shuffle(&mut rng);
        picks.truncate(len);
        let before = Alphabet::from_i64(&picks);
        picks.shuffle(&mut rng);
        let after = Alphabet::from_i64(&picks);
        let weight = rng.gen_range(0..=6);
        for lambda in Partition::all_of(weight) {
            if lambda.len() > len {
                continue;
            }
            let x = schur_eval_all(&lambda, &before).map_err(|e| e.to_string())?;
            let y = schur_eval_all(&lambda, &after).map_err(|e| e.to_string())?;
            if x != y {
                return Err(format!("lambda={lambda}: {x:?} != {y:?} after shuffle"));
            }
        }
    }
    Ok(())
}

fn schur_rectangle_two_vars() -> Check {
    let alphabet = Alphabet::from_i64(&[1, 2]);
    for n in 0..=10usize {
        let lam = Partition::rectangle(n, 2);
        let want = Pow::pow(&BigInt::from(2), n as u32);
        let got = schur_eval(&lam, &alphabet, SchurMethod::Bialternant).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("s_(n,n)(1,2) at n={n}: {got} != {want}"));
        }
    }
    Ok(())
}

// ---- beta/gamma sweeps ----

fn beta_methods_agree(max: usize) -> Check {
    for a in 0..=max {
        for b in 0..=a {
            for n in 0..=max + 2 {
                let reference = beta(n, a, b, BetaMethod::Direct).map_err(|e| e.to_string())?;
                for method in BETA_METHODS {
                    let v = beta(n, a, b, method).map_err(|e| e.to_string())?;
                    if v != reference {
                        return Err(format!(
                            "(n,a,b)=({n},{a},{b}) {method:?}: {v} != {reference}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn gamma_methods_agree(max: usize) -> Check {
    for a in 0..=max {
        for b in 0..=a {
            for n in 0..=max + 2 {
                let direct = gamma(n, a, b, GammaMethod::Direct).map_err(|e| e.to_string())?;
                let schur = gamma(n, a, b, GammaMethod::Schur).map_err(|e| e.to_string())?;
                if direct != schur {
                    return Err(format!("(n,a,b)=({n},{a},{b}): {direct} != {schur}"));
                }
            }
        }
    }
    Ok(())
}

fn gamma_literal_alphabet() -> Check {
    // With alphabet (1..a) the Schur form of gamma fails at (n,a,b) =
    // (2,1,0); this pins the corrected alphabet (1..n+b).
    let literal = schur_eval(
        &Partition::rectangle(1, 2),
        &Alphabet::canonical(1),
        SchurMethod::Bialternant,
    )
    .map_err(|e| e.to_string())?;
    let direct = gamma(2, 1, 0, GammaMethod::Direct).map_err(|e| e.to_string())?;
    let corrected = gamma(2, 1, 0, GammaMethod::Schur).map_err(|e| e.to_string())?;
    if !literal.is_zero() {
        return Err(format!("literal alphabet unexpectedly gave {literal}"));
    }
    if direct != BigInt::from(2) || corrected != BigInt::from(2) {
        return Err(format!(
            "(2,1,0): direct {direct}, corrected {corrected}, expected 2"
        ));
    }
    Ok(())
}

fn duality(max: usize) -> Check {
    for n in 0..=max {
        for a in 0..=max {
            for b in 0..=max {
                let r = duality_residual(n, a, b);
                if !r.is_zero() {
                    return Err(format!("(n,a,b)=({n},{a},{b}): residual {r}"));
                }
            }
        }
    }
    Ok(())
}

fn term_count(max: usize) -> Check {
    for a in 0..=max {
        for b in 0..=a {
            let count = explicit_sum_term_count(a, b).map_err(|e| e.to_string())?;
            let want = binomial(a, (a - b) as isize);
            if BigInt::from(count) != want {
                return Err(format!("(a,b)=({a},{b}): {count} terms, expected {want}"));
            }
        }
    }
    Ok(())
}

fn beta_positivity(max: usize) -> Check {
    for a in 0..=max {
        for b in 0..=a {
            for n in 0..=max + 2 {
                let v = beta(n, a, b, BetaMethod::Direct).map_err(|e| e.to_string())?;
                if !v.is_positive() {
                    return Err(format!("beta({n},{a},{b}) = {v} is not positive"));
                }
            }
        }
    }
    Ok(())
}

// ---- generating functions ----

fn genfun_roundtrip(max: usize) -> Check {
    for a in 0..=max.min(5) {
        for b in 0..=a {
            let rf = fit_generating_function(a, b, 10).map_err(|e| e.to_string())?;
            let d = denominator(a, b)
                .map_err(|e| e.to_string())?
                .degree()
                .unwrap_or(0);
            if rf.num().degree().map_or(false, |nd| nd >= d) {
                return Err(format!(
                    "(a,b)=({a},{b}): numerator degree {:?} not below {d}",
                    rf.num().degree()
                ));
            }
            let series = series_expand(&rf, d + 11);
            for (n, c) in series.into_iter().enumerate() {
                let direct =
                    BigRational::from_integer(beta(n, a, b, BetaMethod::Direct).unwrap());
                if c != direct {
                    return Err(format!("(a,b)=({a},{b}), n={n}: {c} != {direct}"));
                }
            }
        }
    }
    Ok(())
}

fn partial_fractions_consistency(max: usize) -> Check {
    for a in 0..=max.min(5) {
        for b in 0..=a {
            let pf = partial_fractions(a, b).map_err(|e| e.to_string())?;
            for n in 0..=10usize {
                let direct =
                    BigRational::from_integer(beta(n, a, b, BetaMethod::Direct).unwrap());
                let closed = pf.value_at(n);
                if closed != direct {
                    return Err(format!("(a,b)=({a},{b}), n={n}: {closed} != {direct}"));
                }
            }
            // The rates are exactly the reciprocals of the denominator roots.
            let mut rates: Vec<BigInt> =
                pf.terms().iter().map(|(r, _)| r.clone()).collect();
            rates.sort();
            let factors = denominator_factors(a, b).map_err(|e| e.to_string())?;
            if rates != factors {
                return Err(format!("(a,b)=({a},{b}): rates {rates:?} != {factors:?}"));
            }
        }
    }
    Ok(())
}

fn rate_duality(max: usize) -> Check {
    use itertools::Itertools;
    for a in 0..=max.saturating_add(1).min(7) {
        for b in 0..=a {
            let rates = denominator_factors(a, b).map_err(|e| e.to_string())?;
            let mut complements: Vec<BigInt> = (1..=a)
                .combinations(a - b)
                .map(|s| s.iter().map(|&i| BigInt::from(i)).product())
                .collect();
            complements.sort();
            if rates != complements {
                return Err(format!("(a,b)=({a},{b}) multisets differ"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes_at_desk_scale() {
        for r in run_all(4) {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let a: Vec<(bool, String)> = run_all(3)
            .into_iter()
            .map(|r| (r.passed, r.detail))
            .collect();
        let b: Vec<(bool, String)> = run_all(3)
            .into_iter()
            .map(|r| (r.passed, r.detail))
            .collect();
        assert_eq!(a, b);
    }
}
