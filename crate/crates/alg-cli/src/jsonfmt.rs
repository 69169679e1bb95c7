//! Deterministic float formatting for report output: values are rounded to
//! 12 significant digits before serialization, then printed by serde_json's
//! shortest round-trip formatter, so re-runs are byte-identical.

/// Rounds to 12 significant decimal digits.
pub fn round12(x: f64) -> f64 {
    round_sig(x, 12)
}

pub fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 {
        // canonicalize -0.0 (the identity of empty f64 sums) for display
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(digits - 1 - magnitude);
    (x * factor).round() / factor
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_significant_digits() {
        assert_eq!(round_sig(1.23456789, 3), 1.23);
        assert_eq!(round_sig(-0.00123456, 3), -0.00123);
        assert_eq!(round_sig(123456.789, 6), 123457.0);
        assert_eq!(round_sig(0.0, 12), 0.0);
        assert!(round_sig(f64::INFINITY, 12).is_infinite());
    }

    #[test]
    fn negative_zero_canonicalizes() {
        assert_eq!(round12(-0.0).to_string(), "0");
    }

    #[test]
    fn twelve_digits_is_stable() {
        let x = 0.477457514062632;
        assert_eq!(round12(x), round12(round12(x)));
    }
}
