//! Fixed-precision number rendering shared by every report format.

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats with 12 significant digits, trimming trailing zeros.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded = round_sig(x);
    let magnitude = rounded.abs().log10().floor() as i32;
    if !(-5..=15).contains(&magnitude) {
        let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, rounded);
        let (mantissa, exp) = s.split_once('e').expect("scientific form");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{mantissa}e{exp}");
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{rounded:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("scientific literal parses")
}

/// Serde helper for `f64` fields rounded to 12 significant digits.
pub mod sig {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(super::round_sig(*x))
    }
}

/// Serde helper for `Vec<f64>` fields.
pub mod sig_vec {
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&super::round_sig(*x))?;
        }
        seq.end()
    }
}
