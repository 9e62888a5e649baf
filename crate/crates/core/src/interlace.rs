//! Strict-interlacing predicates and the per-theorem checkers.
//!
//! Two increasing sequences interlace when their merged sort strictly
//! alternates between the sequences; for sizes n and n-1 the larger sequence
//! brackets the smaller. Cross-list gaps below a tie tolerance make the
//! comparison degenerate rather than a pass or fail.

use crate::error::{Error, Result};
use crate::laguerre::{CombinationSpec, Family, ParamSet};
use crate::rootfind::{combination_zeros, laguerre_zeros, ZeroSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Interlaces,
    Fails,
    Degenerate,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Interlaces => write!(f, "interlaces"),
            Verdict::Fails => write!(f, "fails"),
            Verdict::Degenerate => write!(f, "degenerate"),
        }
    }
}

/// Which list leads the alternation when the verdict is `Interlaces`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    AFirst,
    BFirst,
    Mixed,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterlacingReport {
    pub verdict: Verdict,
    pub pattern: Pattern,
    /// 1-based (index into A, index into B) of the first ordering breach.
    pub violation: Option<(usize, usize)>,
    /// Smallest gap between adjacent entries of the merged sequence.
    pub min_gap: f64,
}

/// Default tie tolerance, two orders of magnitude above the root tolerance
/// at the scale of the largest zero involved.
pub fn default_tie_tol(a: &ZeroSet, b: &ZeroSet) -> f64 {
    let largest = a
        .values
        .last()
        .copied()
        .unwrap_or(0.0)
        .max(b.values.last().copied().unwrap_or(0.0));
    1e-8 * (1.0 + largest)
}

fn min_adjacent_gap(a: &[f64], b: &[f64]) -> f64 {
    let mut merged: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    merged.sort_by(|x, y| x.partial_cmp(y).unwrap());
    merged
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min)
}

fn min_cross_gap(a: &[f64], b: &[f64]) -> f64 {
    let mut min = f64::INFINITY;
    for &x in a {
        for &y in b {
            min = min.min((x - y).abs());
        }
    }
    min
}

/// Check strict alternation with `lead` going first: lead[0] < trail[0] <
/// lead[1] < trail[1] < ... Returns the 1-based (lead index, trail index) of
/// the first breach.
fn check_alternation(lead: &[f64], trail: &[f64]) -> Option<(usize, usize)> {
    for i in 0..trail.len() {
        if lead[i] >= trail[i] {
            return Some((i + 1, i + 1));
        }
        if i + 1 < lead.len() && trail[i] >= lead[i + 1] {
            return Some((i + 2, i + 1));
        }
    }
    None
}

/// Strict-interlacing predicate over two increasing zero lists whose sizes
/// differ by at most one.
pub fn interlace_check(a: &ZeroSet, b: &ZeroSet, tie_tol: f64) -> Result<InterlacingReport> {
    let (na, nb) = (a.len(), b.len());
    if na.abs_diff(nb) > 1 {
        return Err(Error::SizeMismatch(na, nb));
    }
    if na == 0 || nb == 0 {
        return Err(Error::Domain("empty zero set".into()));
    }
    let av = &a.values;
    let bv = &b.values;
    let min_gap = min_adjacent_gap(av, bv);
    if min_cross_gap(av, bv) < tie_tol {
        return Ok(InterlacingReport {
            verdict: Verdict::Degenerate,
            pattern: Pattern::NotApplicable,
            violation: None,
            min_gap,
        });
    }

    let (violation, pattern) = if na == nb + 1 {
        (check_alternation(av, bv), Pattern::AFirst)
    } else if nb == na + 1 {
        (
            check_alternation(bv, av).map(|(j, i)| (i, j)),
            Pattern::BFirst,
        )
    } else if av[0] < bv[0] {
        (check_alternation(av, bv), Pattern::AFirst)
    } else {
        (
            check_alternation(bv, av).map(|(j, i)| (i, j)),
            Pattern::BFirst,
        )
    };

    Ok(match violation {
        None => InterlacingReport {
            verdict: Verdict::Interlaces,
            pattern,
            violation: None,
            min_gap,
        },
        Some(pair) => InterlacingReport {
            verdict: Verdict::Fails,
            pattern: Pattern::Mixed,
            violation: Some(pair),
            min_gap,
        },
    })
}

/// Outcome of a two-sided theorem check: the combination's zeros against the
/// unshifted and the shifted comparison family.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub vs_base: InterlacingReport,
    pub vs_shifted: InterlacingReport,
    /// True when coefficient -1 cancelled the leading terms of family R.
    pub reduced_degree: bool,
}

impl TheoremReport {
    pub fn both_interlace(&self) -> bool {
        self.vs_base.verdict == Verdict::Interlaces
            && self.vs_shifted.verdict == Verdict::Interlaces
    }
}

fn check_theorem_hypotheses(n: u32, alpha: f64, t: f64, coeff: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("need n >= 2, got {n}")));
    }
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(Error::Hypothesis(format!("need alpha > -1, got {alpha}")));
    }
    if !(t > 0.0 && t <= 2.0) {
        return Err(Error::Hypothesis(format!("need 0 < t <= 2, got {t}")));
    }
    if coeff == 0.0 || !coeff.is_finite() {
        return Err(Error::Hypothesis(format!(
            "need a nonzero finite coefficient, got {coeff}"
        )));
    }
    Ok(())
}

/// Zeros of `R_n^{α,t}` against those of `L_n^α` and `L_n^{α+t}`. Under the
/// hypotheses 0 < t <= 2, a != 0 (and a != -1) both comparisons must
/// interlace.
pub fn check_theorem_r(n: u32, alpha: f64, t: f64, a: f64) -> Result<TheoremReport> {
    check_theorem_hypotheses(n, alpha, t, a)?;
    let spec = CombinationSpec::new(Family::R, ParamSet { n, alpha, t, coeff: a })?;
    let combo = combination_zeros(&spec)?;
    let base = laguerre_zeros(n, alpha)?;
    let shifted = laguerre_zeros(n, alpha + t)?;
    let tol = default_tie_tol(&combo, &base).max(default_tie_tol(&combo, &shifted));
    Ok(TheoremReport {
        vs_base: interlace_check(&combo, &base, tol)?,
        vs_shifted: interlace_check(&combo, &shifted, tol)?,
        reduced_degree: a == -1.0,
    })
}

/// Zeros of `S_n^{α,t}` against those of `L_n^α` and `L_{n-1}^{α+t}`. Under
/// the hypotheses 0 < t <= 2, b != 0 both comparisons must interlace.
pub fn check_theorem_s(n: u32, alpha: f64, t: f64, b: f64) -> Result<TheoremReport> {
    check_theorem_hypotheses(n, alpha, t, b)?;
    let spec = CombinationSpec::new(Family::S, ParamSet { n, alpha, t, coeff: b })?;
    let combo = combination_zeros(&spec)?;
    let base = laguerre_zeros(n, alpha)?;
    let shifted = laguerre_zeros(n - 1, alpha + t)?;
    let tol = default_tie_tol(&combo, &base).max(default_tie_tol(&combo, &shifted));
    Ok(TheoremReport {
        vs_base: interlace_check(&combo, &base, tol)?,
        vs_shifted: interlace_check(&combo, &shifted, tol)?,
        reduced_degree: false,
    })
}

/// First failing inequality of the four-way chain, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainViolation {
    /// 1-based index k of the failing block.
    pub index: usize,
    /// Human-readable relation that failed, e.g. "t_1 < X_1".
    pub relation: String,
    pub left: f64,
    pub right: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainOutcome {
    pub holds: bool,
    pub violation: Option<ChainViolation>,
}

/// The four-way interleaved chain over the zeros x of `L_n^α`, y of
/// `L_{n-1}^α`, t of `L_{n-1}^{α+t}` and X of `L_{n-1}^{α+2}`:
/// `0 < x_1 < y_1 < t_1 < X_1 < x_2 < ... < X_{n-1} < x_n`, for 0 < t < 2.
pub fn check_chain(n: u32, alpha: f64, t: f64) -> Result<ChainOutcome> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("need n >= 2, got {n}")));
    }
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(Error::Hypothesis(format!("need alpha > -1, got {alpha}")));
    }
    if !(t > 0.0 && t < 2.0) {
        return Err(Error::Hypothesis(format!(
            "chain needs 0 < t < 2 (exclusive), got {t}"
        )));
    }
    let x = laguerre_zeros(n, alpha)?.values;
    let y = laguerre_zeros(n - 1, alpha)?.values;
    let tz = laguerre_zeros(n - 1, alpha + t)?.values;
    let cap = laguerre_zeros(n - 1, alpha + 2.0)?.values;

    for k in 0..(n as usize - 1) {
        let i = k + 1;
        let links: [(String, f64, f64); 5] = [
            (format!("0 < x_{i}"), 0.0, x[k]),
            (format!("x_{i} < y_{i}"), x[k], y[k]),
            (format!("y_{i} < t_{i}"), y[k], tz[k]),
            (format!("t_{i} < X_{i}"), tz[k], cap[k]),
            (format!("X_{i} < x_{}", i + 1), cap[k], x[k + 1]),
        ];
        for (relation, left, right) in links {
            if left >= right {
                return Ok(ChainOutcome {
                    holds: false,
                    violation: Some(ChainViolation {
                        index: i,
                        relation,
                        left,
                        right,
                    }),
                });
            }
        }
    }
    Ok(ChainOutcome {
        holds: true,
        violation: None,
    })
}

/// One checked claim from the worked counterexamples and remarks.
#[derive(Debug, Clone)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: Verdict,
    pub actual: Verdict,
    /// First ordering breach, when the claim is a failure claim.
    pub violation: Option<(usize, usize)>,
    pub confirmed: bool,
}

/// Run the worked counterexamples (expected to fail interlacing) and the two
/// positive remarks (expected to interlace), all at n=5, α=1.45,
/// coefficient 2.33.
pub fn check_negative_claims() -> Result<Vec<ClaimOutcome>> {
    let r5 = combination_zeros(&CombinationSpec::new(
        Family::R,
        ParamSet { n: 5, alpha: 1.45, t: 1.0, coeff: 2.33 },
    )?)?;
    let s5_t1 = combination_zeros(&CombinationSpec::new(
        Family::S,
        ParamSet { n: 5, alpha: 1.45, t: 1.0, coeff: 2.33 },
    )?)?;
    let s5_t2 = combination_zeros(&CombinationSpec::new(
        Family::S,
        ParamSet { n: 5, alpha: 1.45, t: 2.0, coeff: 2.33 },
    )?)?;
    let l4_base = laguerre_zeros(4, 1.45)?;
    let l4_shift = laguerre_zeros(4, 2.45)?;
    let l5_shift1 = laguerre_zeros(5, 2.45)?;
    let l5_shift2 = laguerre_zeros(5, 3.45)?;

    let cases: [(&'static str, &'static str, &ZeroSet, &ZeroSet, Verdict); 5] = [
        (
            "r5-vs-l4-base",
            "R_5^(1.45,1) a=2.33 vs L_4^1.45: no interlacing with the lower-degree base family",
            &r5,
            &l4_base,
            Verdict::Fails,
        ),
        (
            "s5-t1-vs-l4-base",
            "S_5^(1.45,1) b=2.33 vs L_4^1.45: no interlacing with the lower-degree base family",
            &s5_t1,
            &l4_base,
            Verdict::Fails,
        ),
        (
            "s5-t2-vs-l5-shifted",
            "S_5^(1.45,2) b=2.33 vs L_5^3.45: interlacing with the same-degree shifted family fails at t=2",
            &s5_t2,
            &l5_shift2,
            Verdict::Fails,
        ),
        (
            "r5-vs-l4-shifted",
            "R_5^(1.45,1) a=2.33 vs L_4^2.45: interlacing with the lower-degree shifted family holds at t=1",
            &r5,
            &l4_shift,
            Verdict::Interlaces,
        ),
        (
            "s5-t1-vs-l5-shifted",
            "S_5^(1.45,1) b=2.33 vs L_5^2.45: interlacing with the same-degree shifted family holds at t=1",
            &s5_t1,
            &l5_shift1,
            Verdict::Interlaces,
        ),
    ];

    let mut out = Vec::with_capacity(cases.len());
    for (id, description, a, b, expected) in cases {
        let report = interlace_check(a, b, default_tie_tol(a, b))?;
        out.push(ClaimOutcome {
            id,
            description,
            expected,
            actual: report.verdict,
            violation: report.violation,
            confirmed: report.verdict == expected,
        });
    }
    Ok(out)
}
