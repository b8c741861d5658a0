//! Acceptance suite: one test per shipped guarantee, each printing a single
//! PASS/FAIL line with its elapsed time (run with `--nocapture` to see the
//! lines for passing criteria). Time budgets are pinned here in code; a
//! criterion that exceeds its budget fails even if every residual is zero.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orthoinvert::families::{
    gen_ultraspherical, jacobi, jacobi_binomial_product, jacobi_negated_sum, FamilySpec,
};
use orthoinvert::hypersum::{
    saalschutz, saalschutz_ratio, sum_1f0_partial, vandermonde, weighted_zero_sum, wellpoised,
    SumCheck,
};
use orthoinvert::identities::{
    check_derivative_rule, check_laguerre_degenerate, check_monomial_expansion, check_ode,
    check_recurrence, check_symmetry, IdentityId, MonomialBasis,
};
use orthoinvert::inversion::{
    build_inversion_matrices, charlier_inversion_check, gen_laguerre_is_inversion_point,
    gen_laguerre_sum, jacobi_inversion_check, jacobi_product_diagonal, jacobi_product_formula,
    laguerre_convolution_check, laguerre_inversion_check, InversionMatrixKind,
    JacobiInversionVariant, LaguerreConvolutionVariant,
};
use orthoinvert::poly::Poly;
use orthoinvert::rational::{int, rat, Rational};
use orthoinvert::report::CheckReport;
use orthoinvert::solver::{
    forward_apply, residual_check, solve_by_elimination, solve_triangular, TriangularSystem,
};
use orthoinvert::ultrade::{
    a0_from_recurrence, a0_partial_sum_check, a0_sequence, a0_value, bc_closed_form,
    check_raw_system, coeffs_via_inversion, de_residual, identity_55_check, verify_de, CoeffRoute,
    RawSystem,
};

type Outcome = Result<(), String>;

fn run(index: usize, label: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let ok = outcome.is_ok() && elapsed <= budget;
    println!(
        "acceptance {index}: {} in {:.2}s (budget {}s) - {label}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs(),
    );
    if let Err(msg) = outcome {
        panic!("criterion {index} failed: {msg}");
    }
    if elapsed > budget {
        panic!(
            "criterion {index} exceeded its {}s budget (took {:.2}s)",
            budget.as_secs(),
            elapsed.as_secs_f64()
        );
    }
}

fn expect_pass(report: CheckReport) -> Outcome {
    if report.passed() {
        Ok(())
    } else {
        Err(format!(
            "{} failed at {:?}: {}",
            report.identity,
            report.params,
            serde_json::to_string(&report).unwrap_or_default()
        ))
    }
}

fn expect_equal(name: &str, check: &SumCheck) -> Outcome {
    if check.equal {
        Ok(())
    } else {
        Err(format!("{name}: lhs {} != rhs {}", check.lhs, check.rhs))
    }
}

fn rand_rat(rng: &mut ChaCha8Rng, span: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

/// Sample parameters until `attempt` lands outside every pole, with a hard
/// retry cap so a bad sampler fails loudly instead of spinning.
fn sample_pole_free<T>(
    label: &str,
    mut attempt: impl FnMut() -> orthoinvert::Result<T>,
) -> Result<T, String> {
    for _ in 0..200 {
        match attempt() {
            Ok(value) => return Ok(value),
            Err(e) if e.is_pole() => continue,
            Err(e) => return Err(format!("{label}: unexpected error {e}")),
        }
    }
    Err(format!("{label}: no pole-free sample in 200 draws"))
}

const JACOBI_POINTS: [(i64, i64, i64, i64); 6] = [
    (0, 1, 0, 1),
    (1, 2, -1, 3),
    (-1, 4, 1, 5),
    (2, 1, 3, 1),
    (5, 2, -4, 7),
    (7, 3, 1, 3),
];

fn jacobi_points() -> Vec<(Rational, Rational)> {
    JACOBI_POINTS
        .iter()
        .map(|&(a, b, c, d)| (rat(a, b), rat(c, d)))
        .collect()
}

#[test]
fn criterion_1_jacobi_constructions_agree() {
    run(
        1,
        "three jacobi constructions agree for n <= 12 at 6 parameter points",
        Duration::from_secs(5),
        || {
            for (alpha, beta) in jacobi_points() {
                for n in 0..=12 {
                    let direct = jacobi(n, &alpha, &beta);
                    let negated = jacobi_negated_sum(n, &alpha, &beta);
                    let binomial = jacobi_binomial_product(n, &alpha, &beta);
                    if direct != negated || direct != binomial {
                        return Err(format!(
                            "constructions disagree at n={n}, alpha={alpha}, beta={beta}"
                        ));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_2_structural_identity_suite() {
    run(
        2,
        "structural suite Eq5-Eq7, Eq11-Eq15, Eq17-Eq22, Eq56 for n <= 12",
        Duration::from_secs(30),
        || {
            let laguerre_params = [int(0), rat(1, 2), rat(-1, 3), int(3)];
            let ultra_params = [int(0), rat(1, 2), rat(-1, 3), int(2)];
            for n in 0..=12usize {
                for alpha in &laguerre_params {
                    let family = FamilySpec::Laguerre {
                        alpha: alpha.clone(),
                    };
                    for i in 0..=n {
                        expect_pass(check_derivative_rule(&family, n, i).map_err(err_str)?)?;
                    }
                    expect_pass(check_ode(&family, n).map_err(err_str)?)?;
                    expect_pass(
                        check_monomial_expansion(
                            &MonomialBasis::Laguerre {
                                alpha: alpha.clone(),
                            },
                            n,
                        )
                        .map_err(err_str)?,
                    )?;
                }
                for (alpha, beta) in jacobi_points().into_iter().take(4) {
                    let family = FamilySpec::Jacobi {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    };
                    for i in 0..=n {
                        expect_pass(check_derivative_rule(&family, n, i).map_err(err_str)?)?;
                    }
                    expect_pass(check_symmetry(n, &alpha, &beta))?;
                    expect_pass(check_ode(&family, n).map_err(err_str)?)?;
                    expect_pass(
                        check_monomial_expansion(
                            &MonomialBasis::Jacobi {
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                            },
                            n,
                        )
                        .map_err(err_str)?,
                    )?;
                    expect_pass(
                        check_monomial_expansion(
                            &MonomialBasis::JacobiRatio {
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                            },
                            n,
                        )
                        .map_err(err_str)?,
                    )?;
                    if n >= 1 {
                        for id in [
                            IdentityId::DerivTimesXMinusOne,
                            IdentityId::DerivTimesXPlusOne,
                            IdentityId::ParamShiftDifference,
                        ] {
                            expect_pass(check_recurrence(id, n, &alpha, &beta).map_err(err_str)?)?;
                        }
                    }
                }
                if n >= 2 {
                    for alpha in &ultra_params {
                        for id in [
                            IdentityId::UltraDerivRelation,
                            IdentityId::UltraThreeTerm,
                            IdentityId::UltraQuadraticSplit,
                        ] {
                            expect_pass(check_recurrence(id, n, alpha, alpha).map_err(err_str)?)?;
                        }
                    }
                }
                expect_pass(check_laguerre_degenerate(n))?;
            }
            Ok(())
        },
    );
}

fn err_str(e: orthoinvert::Error) -> String {
    e.to_string()
}

#[test]
fn criterion_3_hypergeometric_summations() {
    run(
        3,
        "summation identities Eq23-Eq25, Eq27-Eq29 at 20 random points each",
        Duration::from_secs(30),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(23);

            // Hand-checked anchor instances first.
            let hand = sum_1f0_partial(&int(1), 2);
            if hand.lhs != int(6) {
                return Err(format!("Eq23 anchor: expected 6, got {}", hand.lhs));
            }
            expect_equal("Eq23 anchor", &hand)?;
            let hand = wellpoised(&int(3), &int(1), 1).map_err(err_str)?;
            if hand.lhs != int(2) {
                return Err(format!("Eq29 anchor: expected 2, got {}", hand.lhs));
            }
            expect_equal("Eq29 anchor", &hand)?;

            for _ in 0..20 {
                let n = rng.gen_range(0..=15usize);
                let check = sum_1f0_partial(&rand_rat(&mut rng, 10, 6), n);
                expect_equal("Eq23", &check)?;

                let n = rng.gen_range(0..=15usize);
                let check = sample_pole_free("Eq24", || {
                    vandermonde(&rand_rat(&mut rng, 10, 6), &rand_rat(&mut rng, 10, 6), n)
                })?;
                expect_equal("Eq24", &check)?;

                let n = rng.gen_range(1..=15usize);
                let check =
                    sample_pole_free("Eq25", || weighted_zero_sum(&rand_rat(&mut rng, 10, 6), n))?;
                expect_equal("Eq25", &check)?;

                let n = rng.gen_range(0..=15usize);
                let check = sample_pole_free("Eq27", || {
                    saalschutz(
                        &rand_rat(&mut rng, 8, 5),
                        &rand_rat(&mut rng, 8, 5),
                        &rand_rat(&mut rng, 8, 5),
                        n,
                    )
                })?;
                expect_equal("Eq27", &check)?;

                let n = rng.gen_range(0..=15usize);
                let check = sample_pole_free("Eq28", || {
                    saalschutz_ratio(&rand_rat(&mut rng, 8, 5), &rand_rat(&mut rng, 8, 5), n)
                })?;
                expect_equal("Eq28", &check)?;

                let n = rng.gen_range(0..=15usize);
                let check = sample_pole_free("Eq29", || {
                    wellpoised(&rand_rat(&mut rng, 8, 5), &rand_rat(&mut rng, 8, 5), n)
                })?;
                expect_equal("Eq29", &check)?;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_4_inversion_formulas() {
    run(
        4,
        "inversion formulas Eq30, Eq31, Eq33, Eq37, Eq46, Eq49 for j <= i <= 12, matrices at N = 12, Eq34 window",
        Duration::from_secs(120),
        || {
            let charlier_points = [int(1), rat(-2, 3), rat(5, 2), int(-7)];
            let laguerre_points = [int(0), rat(1, 2), rat(-1, 3), int(3)];
            for i in 0..=12usize {
                for j in 0..=i {
                    for a in &charlier_points {
                        expect_pass(charlier_inversion_check(i, j, a).map_err(err_str)?)?;
                    }
                    for alpha in &laguerre_points {
                        expect_pass(laguerre_inversion_check(i, j, alpha).map_err(err_str)?)?;
                    }
                    for (alpha, beta) in jacobi_points().into_iter().take(4) {
                        for variant in [
                            JacobiInversionVariant::Delta31,
                            JacobiInversionVariant::Monomial37,
                        ] {
                            expect_pass(
                                jacobi_inversion_check(i, j, &alpha, &beta, variant)
                                    .map_err(err_str)?,
                            )?;
                        }
                    }
                    // Ultraspherical instances Eq46 / Eq49: beta = alpha.
                    for alpha in &laguerre_points {
                        for variant in [
                            JacobiInversionVariant::Delta31,
                            JacobiInversionVariant::Monomial37,
                        ] {
                            expect_pass(
                                jacobi_inversion_check(i, j, alpha, alpha, variant)
                                    .map_err(err_str)?,
                            )?;
                        }
                    }
                }
            }

            // Full matrix products at N = 12.
            let pair = build_inversion_matrices(
                &InversionMatrixKind::Charlier { a: rat(2, 3) },
                12,
                &rat(5, 7),
            );
            if !pair.is_inverse_pair() {
                return Err("charlier matrix pair is not mutually inverse at N = 12".into());
            }
            let pair = build_inversion_matrices(
                &InversionMatrixKind::Laguerre { alpha: rat(1, 2) },
                12,
                &rat(-3, 4),
            );
            if !pair.is_inverse_pair() {
                return Err("laguerre matrix pair is not mutually inverse at N = 12".into());
            }

            // Eq34: the sum equals (p-q+2)_n/n! everywhere, and vanishes
            // exactly on the inversion window p-q in {-n-1, ..., -2}.
            for n in 1..=8usize {
                for d in -(n as i64 + 3)..=3 {
                    for (p, q) in [
                        (int(d), int(0)),
                        (int(d) + rat(1, 3), rat(1, 3)),
                    ] {
                        expect_pass(gen_laguerre_sum(n, &rat(1, 2), &p, &q))?;
                        let in_window = d >= -(n as i64) - 1 && d <= -2;
                        if gen_laguerre_is_inversion_point(n, &p, &q) != in_window {
                            return Err(format!(
                                "Eq34 window mismatch at n={n}, p={p}, q={q}"
                            ));
                        }
                    }
                    // A non-integer difference never lands on the window.
                    let p = int(d) + rat(1, 2);
                    let q = int(0);
                    expect_pass(gen_laguerre_sum(n, &rat(-1, 3), &p, &q))?;
                    if gen_laguerre_is_inversion_point(n, &p, &q) {
                        return Err(format!(
                            "Eq34 claims an inversion point at non-integer p-q = {}",
                            &p - &q
                        ));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_5_product_and_convolution_formulas() {
    run(
        5,
        "product formula Eq35 with y-scan, diagonal Eq36, convolutions Eq57 and general",
        Duration::from_secs(120),
        || {
            let pairs = [(int(0), int(0)), (rat(1, 2), rat(-1, 3)), (int(2), int(3))];
            for (alpha, beta) in &pairs {
                for n in 0..=10usize {
                    // n+1 distinct rational y values per degree.
                    for k in 0..=n {
                        let y0 = rat(2 * k as i64 - n as i64, n as i64 + 2);
                        expect_pass(jacobi_product_formula(n, alpha, beta, &y0).map_err(err_str)?)?;
                    }
                }
                for n in 0..=12usize {
                    let report =
                        jacobi_product_diagonal(n, alpha, beta, &rat(3, 7)).map_err(err_str)?;
                    expect_pass(report.clone())?;
                    let expected = if n == 0 { "1" } else { "0" };
                    if report.lhs.as_deref() != Some(expected) {
                        return Err(format!(
                            "Eq36 diagonal at n={n} produced {:?}, expected {expected}",
                            report.lhs
                        ));
                    }
                }
            }

            let mut rng = ChaCha8Rng::seed_from_u64(57);
            for n in 0..=10usize {
                for _ in 0..4 {
                    let alpha = rand_rat(&mut rng, 6, 5);
                    let beta = rand_rat(&mut rng, 6, 5);
                    let y0 = rand_rat(&mut rng, 6, 5);
                    expect_pass(laguerre_convolution_check(
                        n,
                        &alpha,
                        &beta,
                        &y0,
                        LaguerreConvolutionVariant::General,
                    ))?;
                    expect_pass(laguerre_convolution_check(
                        n,
                        &alpha,
                        &beta,
                        &y0,
                        LaguerreConvolutionVariant::Eq57,
                    ))?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_6_triangular_solver_round_trip() {
    run(
        6,
        "solver round-trip on 52 random systems, closed form vs elimination",
        Duration::from_secs(120),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(54);
            let pairs = [
                (int(0), int(0)),
                (rat(1, 2), rat(-1, 3)),
                (int(2), int(3)),
                (rat(-1, 4), rat(1, 5)),
            ];
            for trial in 0..52usize {
                let (alpha, beta) = pairs[trial % pairs.len()].clone();
                let i_max = 8;
                let planted: Vec<Poly> = (1..=i_max)
                    .map(|i| {
                        let deg = rng.gen_range(0..=i);
                        Poly::from_coeffs((0..=deg).map(|_| rand_rat(&mut rng, 9, 4)).collect())
                    })
                    .collect();
                let sys = TriangularSystem {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    f: forward_apply(&alpha, &beta, &planted),
                };
                let closed = solve_triangular(&sys).map_err(err_str)?;
                let eliminated = solve_by_elimination(&sys).map_err(err_str)?;
                if closed != planted {
                    return Err(format!(
                        "closed form missed the planted coefficients on trial {trial}"
                    ));
                }
                if eliminated != planted {
                    return Err(format!(
                        "elimination missed the planted coefficients on trial {trial}"
                    ));
                }
                for report in residual_check(&sys, &closed).map_err(err_str)? {
                    expect_pass(report)?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_ultra_coefficient_synthesis() {
    run(
        7,
        "a0 closed form vs recurrence to n = 20, route agreement to i = 10, Eq55 to i = 12",
        Duration::from_secs(180),
        || {
            let alphas = [int(0), rat(1, 2), rat(-1, 3), int(2)];
            for alpha in &alphas {
                for a01 in [int(0), int(5)] {
                    let closed = a0_sequence(alpha, &a01, 20).map_err(err_str)?;
                    let grown = a0_from_recurrence(alpha, &a01, 20).map_err(err_str)?;
                    if closed != grown {
                        return Err(format!(
                            "a0 closed form disagrees with recurrence at alpha={alpha}, a01={a01}"
                        ));
                    }
                    let expected = int(4) * (alpha + alpha + int(3));
                    if closed[2] != expected {
                        return Err(format!(
                            "a0(2) = {} but 4(2a+3) = {expected} at alpha={alpha}",
                            closed[2]
                        ));
                    }
                }
                for n in 1..=10usize {
                    for odd in [false, true] {
                        expect_pass(a0_partial_sum_check(alpha, n, odd).map_err(err_str)?)?;
                    }
                }
            }
            if a0_value(4, &int(0), &int(9)) != int(180) {
                return Err("a0(4) at alpha = 0 is not 180".into());
            }

            for alpha in &alphas {
                for a01 in [int(0), int(5)] {
                    let closed: Vec<Poly> = (1..=10usize)
                        .map(|i| {
                            let (b, c) = bc_closed_form(alpha, i).map_err(err_str)?;
                            Ok(&b.scale(&a01) + &c)
                        })
                        .collect::<Result<_, String>>()?;
                    let via_54 = coeffs_via_inversion(alpha, &a01, 10, CoeffRoute::System54)
                        .map_err(err_str)?;
                    let via_52 = coeffs_via_inversion(alpha, &a01, 10, CoeffRoute::System52)
                        .map_err(err_str)?;
                    if via_54 != closed {
                        return Err(format!(
                            "shifted-system route disagrees with closed forms at alpha={alpha}, a01={a01}"
                        ));
                    }
                    if via_52 != closed {
                        return Err(format!(
                            "direct-inversion route disagrees with closed forms at alpha={alpha}, a01={a01}"
                        ));
                    }
                }
                for i in 2..=12usize {
                    expect_pass(identity_55_check(alpha, i).map_err(err_str)?)?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_8_differential_equation() {
    run(
        8,
        "Eq32 residual zero on the full grid, a01 independence, raw systems Eq38, Eq39, Eq50",
        Duration::from_secs(180),
        || {
            let alphas = [int(0), rat(1, 2), rat(-1, 3)];
            let masses = [int(0), int(1), rat(3, 2)];
            for n in 0..=10usize {
                for alpha in &alphas {
                    for mass in &masses {
                        for a01 in [int(0), int(5)] {
                            expect_pass(verify_de(n, alpha, mass, &a01).map_err(err_str)?)?;
                        }
                        let y = gen_ultraspherical(n, alpha, mass).map_err(err_str)?;
                        let r0 = de_residual(n, alpha, mass, &int(0), &y).map_err(err_str)?;
                        let r5 = de_residual(n, alpha, mass, &int(5), &y).map_err(err_str)?;
                        if r0 != r5 {
                            return Err(format!(
                                "residual depends on a01 at n={n}, alpha={alpha}, M={mass}"
                            ));
                        }
                    }
                    for a01 in [int(0), int(5)] {
                        expect_pass(
                            check_raw_system(RawSystem::Eq38, n, alpha, &a01).map_err(err_str)?,
                        )?;
                        expect_pass(
                            check_raw_system(RawSystem::Eq39, n, alpha, &a01).map_err(err_str)?,
                        )?;
                        if n >= 2 {
                            expect_pass(
                                check_raw_system(RawSystem::Eq50, n, alpha, &a01)
                                    .map_err(err_str)?,
                            )?;
                        }
                    }
                }
            }
            Ok(())
        },
    );
}
