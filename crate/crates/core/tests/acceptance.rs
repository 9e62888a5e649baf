//! End-to-end acceptance suite. Each test covers one criterion and prints a
//! single pass/fail line (visible with `--nocapture`).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lagcomb::{
    check_chain, check_negative_claims, check_theorem_r, check_theorem_s, combination_zeros,
    default_tie_tol, identity_sides, interlace_check, laguerre_zero_bound, laguerre_zeros,
    oracle_zeros, run_repro, CombinationSpec, Family, Identity, ParamSet, Poly, Verdict,
};

fn report(criterion: &str, pass: bool) {
    println!(
        "criterion {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
}

/// Criterion 1: the six published zero lists reproduce within 5e-5 relative,
/// in under a second.
#[test]
fn c1_paper_fixture_reproduction() {
    let start = Instant::now();
    let (fixtures, _, _) = run_repro().unwrap();
    let elapsed = start.elapsed();
    let mut pass = fixtures.len() == 6;
    for f in &fixtures {
        if !f.pass {
            eprintln!("fixture {} deviates by {}", f.id, f.max_rel_dev);
        }
        pass &= f.pass;
    }
    pass &= elapsed.as_secs_f64() < 1.0;
    report("1 (paper fixtures, < 1 s)", pass);
}

/// Criterion 2: the three counterexamples all yield verdict `fails` with the
/// first violating pair reported.
#[test]
fn c2_negative_claims() {
    let claims = check_negative_claims().unwrap();
    let mut pass = true;
    for c in claims.iter().filter(|c| c.expected == Verdict::Fails) {
        pass &= c.confirmed && c.violation.is_some();
        if !c.confirmed {
            eprintln!("claim {} got {}", c.id, c.actual);
        }
    }
    pass &= claims.iter().filter(|c| c.expected == Verdict::Fails).count() == 3;
    report("2 (counterexamples fail with violation reported)", pass);
}

fn sample_common(rng: &mut ChaCha8Rng) -> (u32, f64, f64) {
    let n = rng.gen_range(2u32..=25);
    let alpha = rng.gen_range(-0.99f64..=8.0);
    let t = rng.gen_range(f64::MIN_POSITIVE..=2.0);
    (n, alpha, t)
}

/// Criterion 3: 1000 seeded samples of the same-degree theorem, all
/// (interlaces, interlaces), in under 30 s.
#[test]
fn c3_theorem_r_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20260301);
    let mut pass = true;
    for _ in 0..1000 {
        let (n, alpha, t) = sample_common(&mut rng);
        let mut a = rng.gen_range(-10.0f64..=10.0);
        while a == 0.0 || a == -1.0 {
            a = rng.gen_range(-10.0f64..=10.0);
        }
        let result = check_theorem_r(n, alpha, t, a).unwrap();
        if !result.both_interlace() {
            eprintln!(
                "theorem R breach at n={n} alpha={alpha} t={t} a={a}: {:?} / {:?}",
                result.vs_base.verdict, result.vs_shifted.verdict
            );
            pass = false;
        }
    }
    pass &= start.elapsed().as_secs_f64() < 30.0;
    report("3 (theorem R, 1000 samples, < 30 s)", pass);
}

/// Criterion 4: same sampling for the mixed-degree theorem.
#[test]
fn c4_theorem_s_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260302);
    let mut pass = true;
    for _ in 0..1000 {
        let (n, alpha, t) = sample_common(&mut rng);
        let mut b = rng.gen_range(-10.0f64..=10.0);
        while b == 0.0 {
            b = rng.gen_range(-10.0f64..=10.0);
        }
        let result = check_theorem_s(n, alpha, t, b).unwrap();
        if !result.both_interlace() {
            eprintln!(
                "theorem S breach at n={n} alpha={alpha} t={t} b={b}: {:?} / {:?}",
                result.vs_base.verdict, result.vs_shifted.verdict
            );
            pass = false;
        }
    }
    report("4 (theorem S, 1000 samples)", pass);
}

/// Criterion 5: 1000 samples of the four-way chain with t strictly inside
/// (0, 2).
#[test]
fn c5_chain_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260303);
    let mut pass = true;
    for _ in 0..1000 {
        let n = rng.gen_range(2u32..=25);
        let alpha = rng.gen_range(-0.99f64..=8.0);
        let mut t = rng.gen_range(0.0f64..2.0);
        while t == 0.0 {
            t = rng.gen_range(0.0f64..2.0);
        }
        let outcome = check_chain(n, alpha, t).unwrap();
        if !outcome.holds {
            eprintln!(
                "chain breach at n={n} alpha={alpha} t={t}: {:?}",
                outcome.violation
            );
            pass = false;
        }
    }
    report("5 (chain, 1000 samples)", pass);
}

/// Criterion 6: 500 random triples, every identity holds with relative
/// residual <= 1e-10.
#[test]
fn c6_identity_residuals() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260304);
    let mut pass = true;
    for _ in 0..500 {
        let n = rng.gen_range(2u32..=30);
        let alpha = rng.gen_range(-0.99f64..=10.0);
        let x = rng.gen_range(0.0..=laguerre_zero_bound(n, alpha));
        let mut coeff = rng.gen_range(-10.0f64..=10.0);
        while coeff == 0.0 {
            coeff = rng.gen_range(-10.0f64..=10.0);
        }
        for which in [
            Identity::Shift1,
            Identity::Shift2,
            Identity::ThreeTermLc,
            Identity::RT1Rewrite,
            Identity::RT2Rewrite,
            Identity::ST1Rewrite,
        ] {
            let c = which.needs_coeff().then_some(coeff);
            let (lhs, rhs) = identity_sides(which, n, alpha, c, x).unwrap();
            // identities mix parameters alpha..alpha+2; scale over that range
            let scale = [alpha, alpha + 1.0, alpha + 2.0]
                .iter()
                .flat_map(|&a| {
                    [
                        lagcomb::eval_laguerre(n, a, x).unwrap().abs(),
                        lagcomb::eval_laguerre(n - 1, a, x).unwrap().abs(),
                    ]
                })
                .fold(lhs.abs().max(rhs.abs()).max(1.0), f64::max);
            if (lhs - rhs).abs() > 1e-10 * scale {
                eprintln!(
                    "identity {which:?} residual {} at n={n} alpha={alpha} x={x}",
                    (lhs - rhs).abs() / scale
                );
                pass = false;
            }
        }
    }
    report("6 (identity residuals <= 1e-10 relative)", pass);
}

/// Criterion 7: eigenvalue zeros match the grid-bisection oracle within 1e-9
/// absolute, for pure Laguerre and for 100 random combinations.
#[test]
fn c7_oracle_equivalence() {
    let mut pass = true;
    for n in 1u32..=15 {
        for &alpha in &[-0.5, 0.0, 1.45, 5.0] {
            let eig = laguerre_zeros(n, alpha).unwrap();
            let ora = oracle_zeros(&Poly::Laguerre { n, alpha }, 2000.max(10 * n as usize)).unwrap();
            if eig.len() != ora.len() {
                eprintln!("count mismatch at n={n} alpha={alpha}");
                pass = false;
                continue;
            }
            for (a, b) in eig.values.iter().zip(&ora.values) {
                if (a - b).abs() > 1e-9 {
                    eprintln!("zero mismatch at n={n} alpha={alpha}: {a} vs {b}");
                    pass = false;
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(20260305);
    for _ in 0..100 {
        let family = if rng.gen_bool(0.5) { Family::R } else { Family::S };
        let n = rng.gen_range(2u32..=10);
        let alpha = rng.gen_range(-0.9f64..=6.0);
        let t = rng.gen_range(0.05f64..=2.0);
        let mut coeff = rng.gen_range(-10.0f64..=10.0);
        while coeff == 0.0 || (family == Family::R && coeff == -1.0) {
            coeff = rng.gen_range(-10.0f64..=10.0);
        }
        let spec = CombinationSpec::new(family, ParamSet { n, alpha, t, coeff }).unwrap();
        let main = combination_zeros(&spec).unwrap();
        let ora = oracle_zeros(&Poly::Combination(spec), 4000).unwrap();
        if main.len() != ora.len() {
            eprintln!("count mismatch for {spec}: {} vs {}", main.len(), ora.len());
            pass = false;
            continue;
        }
        for (a, b) in main.values.iter().zip(&ora.values) {
            if (a - b).abs() > 1e-9 {
                eprintln!("zero mismatch for {spec}: {a} vs {b}");
                pass = false;
            }
        }
    }
    report("7 (oracle equivalence, 1e-9 absolute)", pass);
}

/// Criterion 8: classical properties on 500 samples: same-family
/// interlacing, monotonicity of zeros in alpha, and the inclusion bound.
#[test]
fn c8_classical_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260306);
    let mut pass = true;
    for _ in 0..500 {
        let n = rng.gen_range(2u32..=25);
        let alpha = rng.gen_range(-0.99f64..=8.0);
        let delta = rng.gen_range(0.05f64..=4.0);

        let zn = laguerre_zeros(n, alpha).unwrap();
        let zn1 = laguerre_zeros(n - 1, alpha).unwrap();
        let shifted = laguerre_zeros(n, alpha + delta).unwrap();

        let report_nn1 = interlace_check(&zn, &zn1, default_tie_tol(&zn, &zn1)).unwrap();
        if report_nn1.verdict != Verdict::Interlaces {
            eprintln!("same-family interlacing breach at n={n} alpha={alpha}");
            pass = false;
        }
        for (a, b) in zn.values.iter().zip(&shifted.values) {
            if *b <= *a {
                eprintln!("monotonicity breach at n={n} alpha={alpha} delta={delta}");
                pass = false;
            }
        }
        let bound = laguerre_zero_bound(n, alpha);
        for &root in &zn.values {
            if !(root > 0.0 && root < bound) {
                eprintln!("bound breach at n={n} alpha={alpha}: {root}");
                pass = false;
            }
        }
    }
    report("8 (classical properties, 500 samples)", pass);
}
