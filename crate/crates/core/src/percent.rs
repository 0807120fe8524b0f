//! Two-decimal, half-up presentation of rates and percentages.

/// Rounds `100 * num / den` to two decimals with half-up rounding, exactly.
///
/// Returns 0.0 when `den` is zero.
pub fn percent_of(num: u64, den: u64) -> f64 {
    if den == 0 {
        return 0.0;
    }
    // hundredths of a percent, rounded half-up in integer arithmetic
    let scaled = (num as u128) * 10_000 * 2 + den as u128;
    let hundredths = scaled / (2 * den as u128);
    hundredths as f64 / 100.0
}

/// Rounds a non-negative value to two decimals, half-up.
pub fn round2(value: f64) -> f64 {
    if !value.is_finite() {
        return value;
    }
    let sign = value.signum();
    let scaled = value.abs() * 100.0;
    // absorb binary representation error such as 1.005 * 100 = 100.49999...
    sign * (scaled + 0.5 + 1e-9).floor() / 100.0
}

/// Formats a value with exactly two decimals after half-up rounding.
pub fn fmt2(value: f64) -> String {
    format!("{:.2}", round2(value))
}
