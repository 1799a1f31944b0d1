//! Scalar root finding, one-dimensional maximisation, and quadrature.

/// Bisection root of `f` on `[lo, hi]`.
///
/// Requires a sign change (or an exact zero at an endpoint). Refines until
/// the bracket is narrower than `tol`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    // 200 iterations take any bracket below f64 resolution.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return Some(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if hi - lo < tol {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Golden-section search for the maximum of `f` on `[a, b]`.
///
/// Returns `(x_max, f_max)`.
pub fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const PHI: f64 = 1.618_033_988_749_895;
    const RESP: f64 = 2.0 - PHI;

    let mut x1 = a + RESP * (b - a);
    let mut x2 = b - RESP * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    while (b - a).abs() > tol {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + RESP * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - RESP * (b - a);
            f2 = f(x2);
        }
    }

    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Argmax of `f` on an `n`-point grid over `[lo, hi]`, refined by
/// golden-section search within one grid cell of the best point.
///
/// Ties on the grid resolve to the lowest argument.
pub fn grid_then_golden_max(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    n: usize,
    tol: f64,
) -> (f64, f64) {
    debug_assert!(n >= 2 && hi > lo);
    let step = (hi - lo) / (n - 1) as f64;
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let x = lo + step * i as f64;
        let v = f(x);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let a = lo + step * best_i.saturating_sub(1) as f64;
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    let (x, v) = golden_max(&f, a, b, tol);
    let xg = lo + step * best_i as f64;
    if best >= v {
        (xg, best)
    } else {
        (x, v)
    }
}

/// Number of strict local maxima (plateau-aware) in a sampled function.
///
/// A peak is a maximal run of near-equal values that strictly exceeds both
/// flanking values by more than `tol`. Runs touching the ends of the sample
/// count if they exceed the single interior flank.
pub fn count_peaks(values: &[f64], tol: f64) -> usize {
    let n = values.len();
    if n < 2 {
        return 0;
    }
    let mut peaks = 0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && (values[j + 1] - values[i]).abs() <= tol {
            j += 1;
        }
        let above_left = i == 0 || values[i] > values[i - 1] + tol;
        let above_right = j == n - 1 || values[j] > values[j + 1] + tol;
        // A flat sample (single run spanning everything) is not a peak.
        if above_left && above_right && !(i == 0 && j == n - 1) {
            peaks += 1;
        }
        i = j + 1;
    }
    peaks
}

/// Composite Simpson quadrature of `f` on `[a, b]` with `n` panels
/// (`n` rounded up to even).
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = if n % 2 == 0 { n.max(2) } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + h * i as f64);
    }
    acc * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_quadratic_root() {
        let f = |p: f64| p * (1.1 - p) - 0.09;
        let root = bisect(f, 1e-9, 0.5, 1e-14).unwrap();
        let expected = (1.1 - 0.85f64.sqrt()) / 2.0;
        assert!((root - expected).abs() < 1e-10);
    }

    #[test]
    fn bisect_requires_sign_change() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn golden_max_parabola() {
        let (x, v) = golden_max(|x| -(x - 0.55) * (x - 0.55), 0.0, 2.0, 1e-12);
        assert!((x - 0.55).abs() < 1e-8);
        assert!(v.abs() < 1e-15);
    }

    #[test]
    fn grid_golden_finds_bertrand_monopoly_price() {
        let profit = |p: f64| (p - 0.1) * (1.0 - p).max(0.0);
        let (p, v) = grid_then_golden_max(profit, 0.0, 2.0, 4096, 1e-10);
        assert!((p - 0.55).abs() < 1e-8);
        assert!((v - 0.2025).abs() < 1e-10);
    }

    #[test]
    fn peak_counting() {
        assert_eq!(count_peaks(&[0.0, 1.0, 0.0], 1e-12), 1);
        assert_eq!(count_peaks(&[0.0, 1.0, 0.0, 1.0, 0.0], 1e-12), 2);
        // Rise to a flat-zero tail: single peak at the plateau edge.
        assert_eq!(count_peaks(&[-1.0, -0.5, 0.0, 0.0, 0.0], 1e-12), 1);
        assert_eq!(count_peaks(&[1.0, 1.0, 1.0], 1e-12), 0);
    }

    #[test]
    fn simpson_integrates_polynomial_exactly() {
        let v = simpson(|x| x * x * x, 0.0, 1.0, 16);
        assert!((v - 0.25).abs() < 1e-14);
    }
}
