//! Deterministic number formatting for CSV output.

/// Formats a real with 12 significant digits, `%g` style: plain notation for
/// moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim(mantissa.to_string()), exp)
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" { "0".into() } else { t.to_string() }
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::real;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(real(0.5), "0.5");
        assert_eq!(real(1.0 / 3.0), "0.333333333333");
        assert_eq!(real(2.0), "2");
        assert_eq!(real(-1234.5), "-1234.5");
        assert_eq!(real(6.0 / std::f64::consts::PI.powi(2)), "0.607927101854");
        assert_eq!(real(1.5e-7), "1.5e-7");
        assert_eq!(real(123456789012345.0), "1.23456789012e14");
        assert_eq!(real(0.0), "0");
    }
}
