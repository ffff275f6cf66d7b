//! Locale-independent number formatting for the CSV outputs.

/// Formats `x` with at most 12 significant digits, dropping trailing zeros.
///
/// `0.7000000000000002` becomes `0.7`; non-finite values print as
/// `inf`, `-inf` or `nan`.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    format!("{rounded}")
}
