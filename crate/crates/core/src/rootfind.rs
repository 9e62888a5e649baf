//! Real zeros of Laguerre polynomials and of R/S combinations.
//!
//! Pure Laguerre zeros come from the eigenvalues of the symmetric tridiagonal
//! Jacobi matrix of the family. Combination zeros come from sign-change
//! isolation on a mesh built from the component zeros, refined by bisection.
//! A brute-force uniform-grid oracle is provided for cross-validation; it
//! shares nothing with the eigenvalue path.

use crate::error::{Error, Result};
use crate::laguerre::{eval_unchecked, CombinationSpec, Family};

/// Strictly increasing list of real zeros plus the achieved tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    pub values: Vec<f64>,
    /// Achieved root tolerance (absolute, at the scale of the largest zero).
    pub tolerance: f64,
    /// True when the number of zeros found matches the effective degree.
    pub complete: bool,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Classical inclusion bound: every zero of L_n^α lies in (0, 4n + 2α + 2).
pub fn laguerre_zero_bound(n: u32, alpha: f64) -> f64 {
    4.0 * n as f64 + 2.0 * alpha + 2.0
}

const QL_MAX_SWEEPS: usize = 50;

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit QL iteration
/// with Wilkinson shifts. `diag` holds the diagonal, `off` the subdiagonal
/// (`off[i]` couples rows i and i+1); both are consumed as workspace.
/// Eigenvalues land in `diag`, unsorted.
fn tridiag_eigenvalues(diag: &mut [f64], off: &mut Vec<f64>) -> Result<()> {
    let n = diag.len();
    off.push(0.0); // sentinel so off[m] is addressable for m = n-1
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            // find the first negligible subdiagonal element at or after l
            let mut m = l;
            while m < n - 1 {
                let scale = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > QL_MAX_SWEEPS {
                return Err(Error::Convergence);
            }
            // Wilkinson shift from the leading 2x2
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                f = (diag[i] - g) * s + 2.0 * c * b;
                p = s * f;
                diag[i + 1] = g + p;
                g = c * f - b;
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    off.pop();
    Ok(())
}

/// All n zeros of `L_n^α`, ascending. Computed as the eigenvalues of the
/// Jacobi matrix with diagonal `2k+α+1` (k = 0..n-1) and off-diagonal
/// `sqrt(k(k+α))` (k = 1..n-1).
pub fn laguerre_zeros(n: u32, alpha: f64) -> Result<ZeroSet> {
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(Error::Domain(format!(
            "alpha must be finite and > -1, got {alpha}"
        )));
    }
    if n < 1 {
        return Err(Error::Domain("degree must be >= 1".into()));
    }
    let mut diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let mut off: Vec<f64> = (1..n).map(|k| (k as f64 * (k as f64 + alpha)).sqrt()).collect();
    tridiag_eigenvalues(&mut diag, &mut off)?;
    diag.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let scale = diag.last().copied().unwrap_or(1.0).abs().max(1.0);
    Ok(ZeroSet {
        values: diag,
        tolerance: 1e-12 * scale,
        complete: true,
    })
}

/// Relative interval width at which bisection stops.
const BISECT_REL_WIDTH: f64 = 1e-13;

/// Bisect a sign-change bracket down to `rel_width`, then polish with a few
/// secant steps kept inside the bracket.
fn refine_root<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, rel_width: f64) -> f64 {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    while hi - lo > rel_width * lo.abs().max(hi.abs()).max(1.0) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval at floating point resolution
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // derivative-free polish
    let mut x0 = lo;
    let mut f0 = flo;
    let mut x1 = hi;
    let mut f1 = fhi;
    for _ in 0..4 {
        if f0 == f1 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !(lo..=hi).contains(&x2) {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1);
        if f1 == 0.0 {
            break;
        }
    }
    if f1.abs() <= f0.abs() {
        x1
    } else {
        x0
    }
}

/// Locate all roots of `f` bracketed by sign changes between consecutive
/// mesh points. The mesh must be sorted ascending.
fn roots_on_mesh<F: Fn(f64) -> f64>(f: &F, mesh: &[f64], rel_width: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    let vals: Vec<f64> = mesh.iter().map(|&x| f(x)).collect();
    for i in 0..mesh.len().saturating_sub(1) {
        if vals[i] == 0.0 {
            roots.push(mesh[i]);
        } else if vals[i] * vals[i + 1] < 0.0 {
            roots.push(refine_root(f, mesh[i], mesh[i + 1], rel_width));
        }
    }
    if let (Some(&x), Some(&v)) = (mesh.last(), vals.last()) {
        if v == 0.0 {
            roots.push(x);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup();
    roots
}

/// Merge roots closer than `tol`; returns whether any merge happened.
fn merge_near_multiple(roots: &mut Vec<f64>, tol: f64) -> bool {
    let mut merged = false;
    let mut out: Vec<f64> = Vec::with_capacity(roots.len());
    for &r in roots.iter() {
        match out.last() {
            Some(&last) if r - last < tol => merged = true,
            _ => out.push(r),
        }
    }
    *roots = out;
    merged
}

impl CombinationSpec {
    /// Search bound covering the zero range of both component polynomials,
    /// with margin.
    pub fn search_bound(&self) -> f64 {
        let p = &self.params;
        4.0 * p.n as f64 + 2.0 * (p.alpha + p.t.max(0.0)) + 6.0
    }

    /// Sign of the combination as x -> +inf, from the leading coefficient.
    /// For family R with coefficient -1 the x^n terms cancel and the x^{n-1}
    /// coefficient is (-1)^n t / (n-1)!.
    fn asymptotic_sign(&self) -> f64 {
        let p = &self.params;
        let parity = if p.n.is_multiple_of(2) { 1.0 } else { -1.0 };
        match self.family {
            Family::R if p.coeff == -1.0 => parity * p.t.signum(),
            Family::R => parity * (1.0 + p.coeff).signum(),
            Family::S => parity,
        }
    }

    /// A large coefficient can push the outermost zero past the component
    /// zero ranges; grow the bound until the sign at the bound matches the
    /// sign at infinity.
    fn extended_bound(&self) -> f64 {
        let mut bound = self.search_bound();
        let target = self.asymptotic_sign();
        for _ in 0..60 {
            if self.eval(bound).signum() == target {
                break;
            }
            bound *= 1.25;
        }
        bound
    }

    fn component_zeros(&self) -> Result<Vec<f64>> {
        let p = &self.params;
        let mut pts = laguerre_zeros(p.n, p.alpha)?.values;
        let shifted_degree = match self.family {
            Family::R => p.n,
            Family::S => p.n - 1,
        };
        if shifted_degree >= 1 {
            pts.extend(laguerre_zeros(shifted_degree, p.alpha + p.t)?.values);
        }
        Ok(pts)
    }
}

/// All real zeros of the combination found in (0, U), ascending. `complete`
/// is true when the count matches the effective degree; for arbitrary
/// coefficients some zeros may be complex, which is reported, not raised.
pub fn combination_zeros(spec: &CombinationSpec) -> Result<ZeroSet> {
    let degree = spec.effective_degree();
    if degree < 1 {
        return Err(Error::Domain(format!(
            "effective degree of {spec} is zero, no zeros to find"
        )));
    }
    let component = spec.component_zeros()?;
    let f = |x: f64| spec.eval(x);
    let mut bound = spec.extended_bound();
    let mut best: Vec<f64> = Vec::new();
    let mut best_merged = false;

    for attempt in 0..=8u32 {
        if attempt >= 4 {
            bound *= 2.0;
        }
        let mut mesh: Vec<f64> = vec![0.0, bound];
        mesh.extend(component.iter().copied().filter(|&z| z < bound));
        if attempt > 0 {
            let density = 64usize << attempt;
            mesh.extend((1..density).map(|i| bound * i as f64 / density as f64));
        }
        mesh.sort_by(|a, b| a.partial_cmp(b).unwrap());
        mesh.dedup();
        // midpoints split cells that contain an even number of roots
        let mids: Vec<f64> = mesh.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        mesh.extend(mids);
        mesh.sort_by(|a, b| a.partial_cmp(b).unwrap());

        let mut roots = roots_on_mesh(&f, &mesh, BISECT_REL_WIDTH);
        let tol = BISECT_REL_WIDTH * bound.max(1.0);
        let merged = merge_near_multiple(&mut roots, tol);
        if roots.len() > best.len() {
            best = roots;
            best_merged = merged;
        }
        if best.len() >= degree as usize {
            break;
        }
    }

    let scale = best.last().copied().unwrap_or(1.0).abs().max(1.0);
    let complete = best.len() == degree as usize && !best_merged;
    Ok(ZeroSet {
        values: best,
        tolerance: BISECT_REL_WIDTH * scale,
        complete,
    })
}

/// A polynomial whose zeros can be requested: a pure Laguerre polynomial or
/// an R/S combination.
#[derive(Debug, Clone, Copy)]
pub enum Poly {
    Laguerre { n: u32, alpha: f64 },
    Combination(CombinationSpec),
}

impl Poly {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Poly::Laguerre { n, alpha } => eval_unchecked(*n, *alpha, x),
            Poly::Combination(spec) => spec.eval(x),
        }
    }

    pub fn effective_degree(&self) -> u32 {
        match self {
            Poly::Laguerre { n, .. } => *n,
            Poly::Combination(spec) => spec.effective_degree(),
        }
    }

    fn search_bound(&self) -> f64 {
        match self {
            Poly::Laguerre { n, alpha } => laguerre_zero_bound(*n, *alpha) + 4.0,
            Poly::Combination(spec) => spec.extended_bound(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Poly::Laguerre { n, alpha } => {
                if *n < 1 {
                    return Err(Error::Domain("degree must be >= 1".into()));
                }
                if !alpha.is_finite() || *alpha <= -1.0 {
                    return Err(Error::Domain(format!(
                        "alpha must be finite and > -1, got {alpha}"
                    )));
                }
                Ok(())
            }
            Poly::Combination(spec) => spec.params.validate(),
        }
    }
}

/// Brute-force oracle: uniform grid over (0, U), bisection on every
/// sign-change cell. Independent of both the eigenvalue path and the
/// component-zero mesh; intended for cross-checks.
pub fn oracle_zeros(poly: &Poly, grid_density: usize) -> Result<ZeroSet> {
    poly.validate()?;
    let degree = poly.effective_degree();
    if degree < 1 {
        return Err(Error::Domain("effective degree is zero".into()));
    }
    if grid_density < 10 * degree as usize {
        return Err(Error::Domain(format!(
            "grid density {grid_density} too coarse for degree {degree}"
        )));
    }
    let bound = poly.search_bound();
    let f = |x: f64| poly.eval(x);
    let mesh: Vec<f64> = (0..=grid_density)
        .map(|i| bound * i as f64 / grid_density as f64)
        .collect();
    let roots = roots_on_mesh(&f, &mesh, 1e-12);
    let scale = roots.last().copied().unwrap_or(1.0).abs().max(1.0);
    let complete = roots.len() == degree as usize;
    Ok(ZeroSet {
        values: roots,
        tolerance: 1e-12 * scale,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre::{Family, ParamSet};

    fn spec(family: Family, n: u32, alpha: f64, t: f64, coeff: f64) -> CombinationSpec {
        CombinationSpec::new(family, ParamSet { n, alpha, t, coeff }).unwrap()
    }

    #[test]
    fn degree_one_zero_in_closed_form() {
        for &alpha in &[-0.5, 0.0, 1.45, 7.0] {
            let z = laguerre_zeros(1, alpha).unwrap();
            assert_eq!(z.len(), 1);
            assert!((z.values[0] - (1.0 + alpha)).abs() < 1e-12);
        }
    }

    #[test]
    fn quadratic_zeros_in_closed_form() {
        // L_2^0(x) = (x^2 - 4x + 2)/2, zeros 2 ± sqrt(2)
        let z = laguerre_zeros(2, 0.0).unwrap();
        assert!((z.values[0] - (2.0 - 2f64.sqrt())).abs() < 1e-12);
        assert!((z.values[1] - (2.0 + 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn paper_l4_zeros() {
        let z = laguerre_zeros(4, 1.45).unwrap();
        let reference = [0.954365, 2.94834, 6.26071, 11.6366];
        assert_eq!(z.len(), 4);
        for (c, r) in z.values.iter().zip(reference) {
            assert!((c - r).abs() / r < 5e-5, "computed {c}, reference {r}");
        }
    }

    #[test]
    fn paper_l5_shifted_zeros() {
        let z = laguerre_zeros(5, 3.45).unwrap();
        let reference = [1.70945, 3.92167, 7.07942, 11.5061, 18.0334];
        for (c, r) in z.values.iter().zip(reference) {
            assert!((c - r).abs() / r < 5e-5, "computed {c}, reference {r}");
        }
    }

    #[test]
    fn zeros_positive_simple_and_bounded() {
        for n in 1..=40 {
            let z = laguerre_zeros(n, 1.45).unwrap();
            assert_eq!(z.len(), n as usize);
            let bound = laguerre_zero_bound(n, 1.45);
            assert!(z.values[0] > 0.0);
            assert!(*z.values.last().unwrap() < bound);
            for w in z.values.windows(2) {
                assert!(w[1] - w[0] > z.tolerance);
            }
        }
    }

    #[test]
    fn residual_small_at_computed_zeros() {
        let z = laguerre_zeros(12, 0.3).unwrap();
        for &root in &z.values {
            let v = eval_unchecked(12, 0.3, root);
            // local slope estimate via a centered difference
            let h = 1e-6 * root.max(1.0);
            let slope = (eval_unchecked(12, 0.3, root + h) - eval_unchecked(12, 0.3, root - h))
                / (2.0 * h);
            assert!(v.abs() <= 1e-9 * slope.abs().max(1.0), "residual {v}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(laguerre_zeros(0, 0.5).is_err());
        assert!(laguerre_zeros(4, -1.0).is_err());
    }

    #[test]
    fn paper_r5_zeros() {
        let z = combination_zeros(&spec(Family::R, 5, 1.45, 1.0, 2.33)).unwrap();
        let reference = [1.17057, 3.01797, 5.80288, 9.83574, 15.9213];
        assert!(z.complete);
        for (c, r) in z.values.iter().zip(reference) {
            assert!((c - r).abs() / r < 5e-5, "computed {c}, reference {r}");
        }
    }

    #[test]
    fn paper_s5_zeros_t1_and_t2() {
        let z1 = combination_zeros(&spec(Family::S, 5, 1.45, 1.0, 2.33)).unwrap();
        let ref1 = [1.34638, 3.48132, 6.74108, 11.6384, 20.6928];
        assert!(z1.complete);
        for (c, r) in z1.values.iter().zip(ref1) {
            assert!((c - r).abs() / r < 5e-5, "computed {c}, reference {r}");
        }

        let z2 = combination_zeros(&spec(Family::S, 5, 1.45, 2.0, 2.33)).unwrap();
        let ref2 = [1.94417, 4.47751, 8.08954, 12.6085, 16.7802];
        assert!(z2.complete);
        for (c, r) in z2.values.iter().zip(ref2) {
            assert!((c - r).abs() / r < 5e-5, "computed {c}, reference {r}");
        }
    }

    #[test]
    fn degree_drop_yields_one_fewer_zero() {
        let z = combination_zeros(&spec(Family::R, 2, 0.0, 1.0, -1.0)).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z.complete);
    }

    #[test]
    fn oracle_matches_closed_form_quadratic() {
        let z = oracle_zeros(&Poly::Laguerre { n: 2, alpha: 0.0 }, 200).unwrap();
        assert_eq!(z.len(), 2);
        assert!((z.values[0] - (2.0 - 2f64.sqrt())).abs() < 1e-9);
        assert!((z.values[1] - (2.0 + 2f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn oracle_matches_eigenvalue_route() {
        let eig = laguerre_zeros(4, 1.45).unwrap();
        let ora = oracle_zeros(&Poly::Laguerre { n: 4, alpha: 1.45 }, 1000).unwrap();
        assert_eq!(eig.len(), ora.len());
        for (a, b) in eig.values.iter().zip(&ora.values) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn oracle_matches_combination_route() {
        let s = spec(Family::R, 3, 0.0, 1.0, 1.0);
        let main = combination_zeros(&s).unwrap();
        let ora = oracle_zeros(&Poly::Combination(s), 1000).unwrap();
        assert_eq!(main.len(), ora.len());
        for (a, b) in main.values.iter().zip(&ora.values) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn oracle_rejects_coarse_grid() {
        assert!(oracle_zeros(&Poly::Laguerre { n: 5, alpha: 0.0 }, 10).is_err());
    }
}
