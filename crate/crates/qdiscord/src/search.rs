//! One-dimensional searches: uniform-scan bracketing with bisection, tangent
//! (no-sign-change) root detection, and golden-section extremum refinement.
//!
//! Bisection is used instead of secant/Newton because the boundary residuals
//! have logarithmic stiffness near the faces of 𝒯; guaranteed brackets matter
//! more than convergence order there. Residual values may be ±∞; only signs
//! are consumed.

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9;

/// A located root of a scanned residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    /// True when the residual touches zero without changing sign.
    pub tangent: bool,
}

/// Scan/refinement controls.
#[derive(Debug, Clone, Copy)]
pub struct ScanOptions {
    pub subdivisions: usize,
    pub xtol: f64,
    pub residual_tol: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            subdivisions: 1000,
            xtol: 1e-12,
            residual_tol: 1e-10,
        }
    }
}

/// Bisection on a bracket with f(lo) and f(hi) of opposite sign.
pub fn bisect<F: Fn(f64) -> f64 + ?Sized>(f: &F, mut lo: f64, mut hi: f64, xtol: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        if (hi - lo).abs() <= xtol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section minimization on [lo, hi] to interval width `xtol`.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64) {
    let mut b = hi - INV_GOLDEN * (hi - lo);
    let mut c = lo + INV_GOLDEN * (hi - lo);
    let mut fb = f(b);
    let mut fc = f(c);
    while (hi - lo).abs() > xtol {
        if fb < fc {
            hi = c;
            c = b;
            fc = fb;
            b = hi - INV_GOLDEN * (hi - lo);
            fb = f(b);
        } else {
            lo = b;
            b = c;
            fb = fc;
            c = lo + INV_GOLDEN * (hi - lo);
            fc = f(c);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Golden-section maximization.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, xtol: f64) -> (f64, f64) {
    let (x, v) = golden_min(|t| -f(t), lo, hi, xtol);
    (x, -v)
}

/// Finds all roots of `f` on [lo, hi]: sign changes are bisected, and local
/// extrema that touch zero within `residual_tol` are reported as tangent
/// roots. Endpoints with |f| ≤ residual_tol count as roots. Roots are
/// deduplicated and sorted ascending. An empty result is a valid outcome.
pub fn scan_roots<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    lo: f64,
    hi: f64,
    opts: &ScanOptions,
) -> Vec<Root> {
    let n = opts.subdivisions.max(2);
    let xs: Vec<f64> = (0..=n)
        .map(|i| lo + (hi - lo) * i as f64 / n as f64)
        .collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    let mut roots: Vec<Root> = Vec::new();
    let mut push = |x: f64, residual: f64, tangent: bool| {
        let dup = roots
            .iter()
            .any(|r| (r.x - x).abs() <= 10.0 * opts.xtol.max(f64::EPSILON));
        if !dup {
            roots.push(Root {
                x,
                residual,
                tangent,
            });
        }
    };

    // endpoints sitting exactly on the boundary condition
    for &i in &[0usize, n] {
        if fs[i].abs() <= opts.residual_tol {
            push(xs[i], fs[i], true);
        }
    }

    for i in 0..n {
        let (fa, fb) = (fs[i], fs[i + 1]);
        if fa == 0.0 {
            push(xs[i], 0.0, false);
            continue;
        }
        if fb == 0.0 {
            continue; // handled by the next window or the endpoint check
        }
        if (fa > 0.0) != (fb > 0.0) {
            let x = bisect(f, xs[i], xs[i + 1], opts.xtol);
            push(x, f(x), false);
        }
    }

    // tangency: interior extrema that come close to zero without crossing
    let window = 1e-4;
    for i in 1..n {
        if !fs[i].is_finite() || fs[i].abs() > window {
            continue;
        }
        let is_min = fs[i] < fs[i - 1] && fs[i] <= fs[i + 1] && fs[i] > 0.0;
        let is_max = fs[i] > fs[i - 1] && fs[i] >= fs[i + 1] && fs[i] < 0.0;
        if !(is_min || is_max) {
            continue;
        }
        let (x, v) = if is_min {
            golden_min(f, xs[i - 1], xs[i + 1], opts.xtol)
        } else {
            golden_max(f, xs[i - 1], xs[i + 1], opts.xtol)
        };
        if v.abs() <= opts.residual_tol {
            push(x, v, true);
        }
    }

    roots.sort_by(|a, b| a.x.total_cmp(&b.x));
    roots
}
