//! Exact ordering of decimal grade tokens without floating-point rounding.

use std::cmp::Ordering;

/// Normalized decimal: value = sign · 0.d₁d₂… · 10^exponent, no trailing zero digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecimalKey {
    negative: bool,
    digits: Vec<u8>,
    exponent: i64,
}

const MAX_EXPONENT: i64 = 1 << 40;

impl DecimalKey {
    /// Parses `[+-]digits[.digits][(e|E)[+-]digits]` with at least one mantissa digit.
    pub fn parse(token: &str) -> Option<DecimalKey> {
        let b = token.as_bytes();
        let mut i = 0;
        let mut negative = false;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            negative = b[i] == b'-';
            i += 1;
        }
        let mut mantissa = Vec::new();
        let mut point_shift: i64 = 0;
        let mut seen_point = false;
        let mut any_digit = false;
        while i < b.len() {
            match b[i] {
                d @ b'0'..=b'9' => {
                    any_digit = true;
                    mantissa.push(d - b'0');
                    if seen_point {
                        point_shift += 1;
                    }
                }
                b'.' if !seen_point => seen_point = true,
                _ => break,
            }
            i += 1;
        }
        if !any_digit {
            return None;
        }
        let mut exp: i64 = 0;
        if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
            i += 1;
            let mut eneg = false;
            if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
                eneg = b[i] == b'-';
                i += 1;
            }
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                exp = exp * 10 + (b[i] - b'0') as i64;
                if exp > MAX_EXPONENT {
                    return None;
                }
                i += 1;
            }
            if i == start {
                return None;
            }
            if eneg {
                exp = -exp;
            }
        }
        if i != b.len() {
            return None;
        }
        let lead = mantissa.iter().take_while(|&&d| d == 0).count();
        let digits: Vec<u8> = mantissa[lead..].to_vec();
        let total = mantissa.len() as i64;
        let mut digits = digits;
        while digits.last() == Some(&0) {
            digits.pop();
        }
        if digits.is_empty() {
            return Some(DecimalKey { negative: false, digits, exponent: 0 });
        }
        // Integer part has (total - point_shift) digits, of which `lead` are zeros.
        let exponent = total - point_shift - lead as i64 + exp;
        Some(DecimalKey { negative, digits, exponent })
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.exponent.cmp(&other.exponent).then_with(|| self.digits.cmp(&other.digits)),
        }
    }
}

impl Ord for DecimalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        let sign = |k: &DecimalKey| {
            if k.is_zero() {
                0
            } else if k.negative {
                -1
            } else {
                1
            }
        };
        match sign(self).cmp(&sign(other)) {
            Ordering::Equal if sign(self) < 0 => other.cmp_magnitude(self),
            Ordering::Equal => self.cmp_magnitude(other),
            o => o,
        }
    }
}

impl PartialOrd for DecimalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
