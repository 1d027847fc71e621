//! Human-readable number formatting (12 significant digits).

use isocartan_core::Complex64;

/// Significant digits in every text report.
pub const SIG_DIGITS: usize = 12;

/// `%.12g`-style formatting: fixed notation for moderate exponents, scientific otherwise.
pub fn g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `a+bi` with both parts in [`g12`].
pub fn c12(z: Complex64) -> String {
    if z.im == 0.0 {
        return g12(z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", g12(z.re), g12(z.im.abs()))
}
