//! Locale-free decimal output with 12 significant digits.

const SIG: usize = 12;

/// Formats `x` with 12 significant digits, rounding half to even on the
/// exact binary value. Plain notation is used for decimal exponents in
/// `[-5, 12)`, scientific otherwise; trailing zeros are dropped.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", SIG - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIG as i32).contains(&exp) {
        let decimals = (SIG as i32 - 1 - exp) as usize;
        trim(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim(mantissa), exp)
    }
}

/// Like [`num`], for optional values; `None` becomes the empty string.
pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
