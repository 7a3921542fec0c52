//! Deterministic numeric formatting shared by every artifact the binary
//! emits: JSON carries 12 significant digits, human-readable tables 9.

/// Rounds to 12 significant digits and normalizes negative zero, so the
/// shortest-round-trip printer always emits the same text for the same value.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("format is valid");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Applies [`round12`] to every entry.
pub fn round12_all(xs: &[f64]) -> Vec<f64> {
    xs.iter().copied().map(round12).collect()
}

/// Formats with 9 significant digits, in plain decimal whenever the exponent
/// is moderate, with trailing zeros trimmed.
pub fn fmt_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let text = format!("{x:.8e}");
    let (mantissa, exp) = text.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..=12).contains(&exp) {
        let trimmed = trim_zeros(mantissa);
        return format!("{trimmed}e{exp}");
    }
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1; // digits before the decimal point
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digits);
    } else if (point as usize) >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    trim_zeros(&out)
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0');
    t.strip_suffix('.').unwrap_or(t).to_string()
}

/// Serializes a value as pretty JSON with a trailing newline.
pub fn to_json_text<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("artifacts are serializable");
    text.push('\n');
    text
}
