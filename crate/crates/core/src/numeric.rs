//! Decimal rounding and fixed-point formatting.
//!
//! Rounding operates on the shortest decimal representation of an `f64`
//! (the digits `Display` prints), so `5.665` rounds to `5.67` even though
//! its binary value is a hair below the tie.

/// Rounds half away from zero at `dp` decimal places.
pub fn round_dp(x: f64, dp: u32) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let text = format!("{}", x.abs());
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text.as_str(), ""),
    };
    let dp = dp as usize;
    if frac_part.len() <= dp {
        return x;
    }

    let mut digits: Vec<u8> = int_part
        .bytes()
        .chain(frac_part.bytes().take(dp))
        .map(|b| b - b'0')
        .collect();
    let round_up = frac_part.as_bytes()[dp] >= b'5';
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }

    let split = digits.len() - dp;
    let mut out = String::with_capacity(digits.len() + 2);
    if x < 0.0 {
        out.push('-');
    }
    out.extend(digits[..split].iter().map(|d| (d + b'0') as char));
    if dp > 0 {
        out.push('.');
        out.extend(digits[split..].iter().map(|d| (d + b'0') as char));
    }
    out.parse().expect("rounded decimal is a valid float")
}

/// Fixed-point formatting with no exponent; negative zero prints as zero.
pub fn fmt_fixed(x: f64, dp: usize) -> String {
    let s = format!("{:.*}", dp, x);
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}
