//! One-dimensional golden-section search.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Maximizes `f` on `[lo, hi]` until the bracket is no wider than `width`.
///
/// Returns the best point evaluated, which for a non-unimodal `f` is a local
/// maximum in the bracket. Ties keep the earlier (smaller) abscissa.
pub(crate) fn golden_max<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    mut lo: f64,
    mut hi: f64,
    width: f64,
) -> Result<(f64, f64), E> {
    debug_assert!(lo <= hi && width > 0.0);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let mut best = if f2 > f1 { (x2, f2) } else { (x1, f1) };
    // The bracket shrinks by INV_PHI per step; the cap only guards against a
    // width below the floating-point resolution of the endpoints.
    for _ in 0..200 {
        if hi - lo <= width {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
            if f1 > best.1 || (f1 == best.1 && x1 < best.0) {
                best = (x1, f1);
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
            if f2 > best.1 {
                best = (x2, f2);
            }
        }
    }
    Ok(best)
}

/// Minimizing counterpart of [`golden_max`].
pub(crate) fn golden_min<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    lo: f64,
    hi: f64,
    width: f64,
) -> Result<(f64, f64), E> {
    let (x, v) = golden_max(|x| f(x).map(|v| -v), lo, hi, width)?;
    Ok((x, -v))
}
