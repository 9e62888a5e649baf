//! Regression fixtures: the six published zero lists (5 distinct, one list
//! appears twice) plus the interlacing claims, reproduced end to end.

use crate::error::Result;
use crate::interlace::{check_negative_claims, ClaimOutcome};
use crate::laguerre::{CombinationSpec, Family, ParamSet};
use crate::rootfind::{combination_zeros, laguerre_zeros};

/// Relative deviation allowed against the 6-significant-figure references.
pub const FIXTURE_TOL: f64 = 5e-5;

#[derive(Debug, Clone, Copy)]
enum Target {
    Laguerre { n: u32, alpha: f64 },
    Combination { family: Family, n: u32, alpha: f64, t: f64, coeff: f64 },
}

struct Fixture {
    id: &'static str,
    label: &'static str,
    target: Target,
    reference: &'static [f64],
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        id: "l4-1.45",
        label: "zeros of L_4^1.45",
        target: Target::Laguerre { n: 4, alpha: 1.45 },
        reference: &[0.954365, 2.94834, 6.26071, 11.6366],
    },
    Fixture {
        id: "r5-1.45-t1",
        label: "zeros of R_5^(1.45,1), a=2.33",
        target: Target::Combination { family: Family::R, n: 5, alpha: 1.45, t: 1.0, coeff: 2.33 },
        reference: &[1.17057, 3.01797, 5.80288, 9.83574, 15.9213],
    },
    Fixture {
        id: "s5-1.45-t1",
        label: "zeros of S_5^(1.45,1), b=2.33",
        target: Target::Combination { family: Family::S, n: 5, alpha: 1.45, t: 1.0, coeff: 2.33 },
        reference: &[1.34638, 3.48132, 6.74108, 11.6384, 20.6928],
    },
    Fixture {
        id: "l4-1.45-bis",
        label: "zeros of L_4^1.45 (revisited against S_5)",
        target: Target::Laguerre { n: 4, alpha: 1.45 },
        reference: &[0.954365, 2.94834, 6.26071, 11.6366],
    },
    Fixture {
        id: "s5-1.45-t2",
        label: "zeros of S_5^(1.45,2), b=2.33",
        target: Target::Combination { family: Family::S, n: 5, alpha: 1.45, t: 2.0, coeff: 2.33 },
        reference: &[1.94417, 4.47751, 8.08954, 12.6085, 16.7802],
    },
    Fixture {
        id: "l5-3.45",
        label: "zeros of L_5^3.45",
        target: Target::Laguerre { n: 5, alpha: 3.45 },
        reference: &[1.70945, 3.92167, 7.07942, 11.5061, 18.0334],
    },
];

#[derive(Debug, Clone)]
pub struct ReproResult {
    pub id: &'static str,
    pub label: &'static str,
    pub computed: Vec<f64>,
    pub reference: Vec<f64>,
    pub max_rel_dev: f64,
    pub pass: bool,
}

/// Recompute every fixture zero list and compare against the references.
pub fn run_fixtures() -> Result<Vec<ReproResult>> {
    let mut out = Vec::with_capacity(FIXTURES.len());
    for fixture in FIXTURES {
        let computed = match fixture.target {
            Target::Laguerre { n, alpha } => laguerre_zeros(n, alpha)?.values,
            Target::Combination { family, n, alpha, t, coeff } => {
                let spec = CombinationSpec::new(family, ParamSet { n, alpha, t, coeff })?;
                combination_zeros(&spec)?.values
            }
        };
        let max_rel_dev = if computed.len() == fixture.reference.len() {
            computed
                .iter()
                .zip(fixture.reference)
                .map(|(c, r)| (c - r).abs() / r.abs())
                .fold(0.0, f64::max)
        } else {
            f64::INFINITY
        };
        out.push(ReproResult {
            id: fixture.id,
            label: fixture.label,
            computed,
            reference: fixture.reference.to_vec(),
            max_rel_dev,
            pass: max_rel_dev <= FIXTURE_TOL,
        });
    }
    Ok(out)
}

/// Fixtures plus the five interlacing claims; `true` when everything passes.
pub fn run_all() -> Result<(Vec<ReproResult>, Vec<ClaimOutcome>, bool)> {
    let fixtures = run_fixtures()?;
    let claims = check_negative_claims()?;
    let ok = fixtures.iter().all(|f| f.pass) && claims.iter().all(|c| c.confirmed);
    Ok((fixtures, claims, ok))
}
