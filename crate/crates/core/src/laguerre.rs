//! Evaluation of Laguerre polynomials `L_n^α` and of the two linear-combination
//! families built from a parameter shift `t`:
//!
//! * family R: `L_n^α(x) + a·L_n^{α+t}(x)` (same degree, shifted parameter),
//! * family S: `L_n^α(x) + b·L_{n-1}^{α+t}(x)` (degree drops by one in the shifted term).
//!
//! Also exposes the classical parameter-shift identities as checkable residuals.

use crate::error::{Error, Result};

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(Error::Domain(format!(
            "alpha must be finite and > -1, got {alpha}"
        )));
    }
    Ok(())
}

fn check_x(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("abscissa must be finite, got {x}")));
    }
    Ok(())
}

/// Evaluate `L_n^α(x)` by the upward three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}`, starting from
/// `L_0 = 1`, `L_1 = 1+α-x`.
pub fn eval_laguerre(n: u32, alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_x(x)?;
    Ok(eval_unchecked(n, alpha, x))
}

pub(crate) fn eval_unchecked(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Which linear-combination family a spec describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `R_n^{α,t} = L_n^α + a·L_n^{α+t}`
    R,
    /// `S_n^{α,t} = L_n^α + b·L_{n-1}^{α+t}`
    S,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::R => write!(f, "R"),
            Family::S => write!(f, "S"),
        }
    }
}

/// The tuple (n, α, t, coefficient) identifying one combination instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    pub n: u32,
    pub alpha: f64,
    pub t: f64,
    pub coeff: f64,
}

impl ParamSet {
    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha)?;
        if !self.t.is_finite() || self.alpha + self.t <= -1.0 {
            return Err(Error::Domain(format!(
                "shifted parameter alpha + t must be > -1, got {} + {}",
                self.alpha, self.t
            )));
        }
        if self.coeff == 0.0 || !self.coeff.is_finite() {
            return Err(Error::Domain(format!(
                "combination coefficient must be finite and nonzero, got {}",
                self.coeff
            )));
        }
        Ok(())
    }
}

/// A validated combination instance: family plus its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinationSpec {
    pub family: Family,
    pub params: ParamSet,
}

impl CombinationSpec {
    pub fn new(family: Family, params: ParamSet) -> Result<Self> {
        params.validate()?;
        if family == Family::S && params.n == 0 {
            return Err(Error::Domain(
                "family S needs n >= 1 (it involves L_{n-1})".into(),
            ));
        }
        Ok(CombinationSpec { family, params })
    }

    /// Degree of the combination as a polynomial. The leading coefficients of
    /// `L_n^α` and `L_n^{α+t}` are both `(-1)^n/n!`, so family R with
    /// coefficient -1 drops to degree n-1. Family S always has degree n.
    pub fn effective_degree(&self) -> u32 {
        match self.family {
            Family::R if self.params.coeff == -1.0 => self.params.n.saturating_sub(1),
            _ => self.params.n,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let p = &self.params;
        match self.family {
            Family::R => {
                eval_unchecked(p.n, p.alpha, x) + p.coeff * eval_unchecked(p.n, p.alpha + p.t, x)
            }
            Family::S => {
                eval_unchecked(p.n, p.alpha, x)
                    + p.coeff * eval_unchecked(p.n - 1, p.alpha + p.t, x)
            }
        }
    }
}

impl std::fmt::Display for CombinationSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p = &self.params;
        write!(
            f,
            "{}_{}^({},{}) coeff={}",
            self.family, p.n, p.alpha, p.t, p.coeff
        )
    }
}

/// Evaluate the combination described by `spec` at `x`.
pub fn eval_combination(spec: &CombinationSpec, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(spec.eval(x))
}

/// The checkable identities: the two classical parameter shifts, the
/// three-term linear combination, and the rewrites of R and S for t = 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `L_n^α = L_n^{α+1} - L_{n-1}^{α+1}`
    Shift1,
    /// `x L_n^{α+1} = (x-n) L_n^α + (α+n) L_{n-1}^α`
    Shift2,
    /// `(α+1) L_n^{α+1} = (α+n+1) L_n^α + x L_{n-1}^{α+2}`
    ThreeTermLc,
    /// `R_n^{α,1} = (a+1) L_n^{α+1} - L_{n-1}^{α+1}`
    RT1Rewrite,
    /// `R_n^{α,2} = (a+1) L_n^{α+2} - 2 L_{n-1}^{α+2} + L_{n-2}^{α+2}`
    RT2Rewrite,
    /// `S_n^{α,1} = L_n^{α+1} + (b-1) L_{n-1}^{α+1}`
    ST1Rewrite,
}

impl Identity {
    pub fn needs_coeff(self) -> bool {
        matches!(
            self,
            Identity::RT1Rewrite | Identity::RT2Rewrite | Identity::ST1Rewrite
        )
    }
}

/// Left- and right-hand side of the selected identity at `x`. The caller can
/// form a scale-relative residual from the two values.
pub fn identity_sides(
    which: Identity,
    n: u32,
    alpha: f64,
    coeff: Option<f64>,
    x: f64,
) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    check_x(x)?;
    let min_n = if which == Identity::RT2Rewrite { 2 } else { 1 };
    if n < min_n {
        return Err(Error::Domain(format!(
            "identity {which:?} needs n >= {min_n}, got {n}"
        )));
    }
    let c = match (which.needs_coeff(), coeff) {
        (true, Some(c)) => c,
        (true, None) => {
            return Err(Error::Domain(format!(
                "identity {which:?} needs a combination coefficient"
            )))
        }
        (false, _) => f64::NAN,
    };
    let l = |n: u32, a: f64| eval_unchecked(n, a, x);
    let nf = n as f64;
    Ok(match which {
        Identity::Shift1 => (l(n, alpha), l(n, alpha + 1.0) - l(n - 1, alpha + 1.0)),
        Identity::Shift2 => (
            x * l(n, alpha + 1.0),
            (x - nf) * l(n, alpha) + (alpha + nf) * l(n - 1, alpha),
        ),
        Identity::ThreeTermLc => (
            (alpha + 1.0) * l(n, alpha + 1.0),
            (alpha + nf + 1.0) * l(n, alpha) + x * l(n - 1, alpha + 2.0),
        ),
        Identity::RT1Rewrite => (
            l(n, alpha) + c * l(n, alpha + 1.0),
            (c + 1.0) * l(n, alpha + 1.0) - l(n - 1, alpha + 1.0),
        ),
        Identity::RT2Rewrite => (
            l(n, alpha) + c * l(n, alpha + 2.0),
            (c + 1.0) * l(n, alpha + 2.0) - 2.0 * l(n - 1, alpha + 2.0) + l(n - 2, alpha + 2.0),
        ),
        Identity::ST1Rewrite => (
            l(n, alpha) + c * l(n - 1, alpha + 1.0),
            l(n, alpha + 1.0) + (c - 1.0) * l(n - 1, alpha + 1.0),
        ),
    })
}

/// Absolute residual `|LHS - RHS|` of the selected identity.
pub fn identity_residual(
    which: Identity,
    n: u32,
    alpha: f64,
    coeff: Option<f64>,
    x: f64,
) -> Result<f64> {
    let (lhs, rhs) = identity_sides(which, n, alpha, coeff, x)?;
    Ok((lhs - rhs).abs())
}
