//! Exact decimal numbers with a canonical text form.
//!
//! Deck scripts mix surface spellings (`9.8E12`, `9.8e+12`, `0.00010`) that
//! denote the same value. Everything downstream — flattening, whitelists,
//! jitters, unit-scale errors — needs value-exact arithmetic and one stable
//! spelling per value, so numbers are kept as sign/mantissa/exponent decimals
//! rather than binary floats.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent magnitude at which the canonical form switches to `d.dde±dd`.
const EXPONENT_FORM_THRESHOLD: i32 = 5;

/// An exact decimal: `sign * d1.d2d3... * 10^sci`.
///
/// `digits` holds the significant digits with no leading or trailing zeros
/// (zero itself is `digits == "0"`, `sci == 0`, non-negative).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decimal {
    neg: bool,
    digits: String,
    sci: i32,
}

/// Error for unparseable numeric text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid number literal `{0}`")]
pub struct ParseDecimalError(pub String);

impl Decimal {
    pub fn zero() -> Self {
        Decimal { neg: false, digits: "0".to_string(), sci: 0 }
    }

    pub fn from_int(v: i64) -> Self {
        v.to_string().parse().expect("integer is a valid decimal")
    }

    pub fn is_zero(&self) -> bool {
        self.digits == "0"
    }

    pub fn is_negative(&self) -> bool {
        self.neg
    }

    /// Scientific exponent of the normalized value (0 for zero).
    pub fn scientific_exponent(&self) -> i32 {
        self.sci
    }

    /// Number of significant digits.
    pub fn significant_digits(&self) -> usize {
        self.digits.len()
    }

    /// The canonical text: shortest decimal spelling, switching to
    /// `d.dde±dd` once the scientific exponent reaches ±5 (`9.8e+12`,
    /// `0.0001`, `10`).
    pub fn canonical(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        if self.neg {
            out.push('-');
        }
        if self.sci.abs() >= EXPONENT_FORM_THRESHOLD {
            out.push_str(&self.digits[..1]);
            if self.digits.len() > 1 {
                out.push('.');
                out.push_str(&self.digits[1..]);
            }
            out.push('e');
            out.push(if self.sci < 0 { '-' } else { '+' });
            out.push_str(&format!("{:02}", self.sci.abs()));
        } else if self.sci < 0 {
            out.push_str("0.");
            for _ in 0..(-self.sci - 1) {
                out.push('0');
            }
            out.push_str(&self.digits);
        } else {
            let point = self.sci as usize + 1;
            if self.digits.len() <= point {
                out.push_str(&self.digits);
                for _ in 0..(point - self.digits.len()) {
                    out.push('0');
                }
            } else {
                out.push_str(&self.digits[..point]);
                out.push('.');
                out.push_str(&self.digits[point..]);
            }
        }
        out
    }

    /// Exact multiplication by 10^k.
    pub fn scale10(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.sci += k;
        out
    }

    /// Exact multiplication by the rational `factor_num / 10^factor_den_pow10`.
    ///
    /// Used for jitters like ×(10000+k)/10000 and band edges like ×95/100.
    pub fn mul_rational(&self, factor_num: u64, factor_den_pow10: i32) -> Self {
        assert!(factor_num > 0, "jitter factors are positive");
        if self.is_zero() {
            return self.clone();
        }
        let d: u128 = self.digits.parse().expect("mantissa digits fit in u128");
        let product = d
            .checked_mul(factor_num as u128)
            .expect("mantissa product fits in u128");
        let old_len = self.digits.len() as i32;
        let mut digits = product.to_string();
        let new_len = digits.len() as i32;
        // value = D * 10^(sci - (len-1)); keep the anchor and renormalize.
        let sci = self.sci - (old_len - 1) + (new_len - 1) - factor_den_pow10;
        while digits.len() > 1 && digits.ends_with('0') {
            digits.pop();
        }
        Decimal { neg: self.neg, digits, sci }
    }

    /// Exact multiplication by a small positive integer.
    pub fn mul_int(&self, k: u64) -> Self {
        self.mul_rational(k, 0)
    }

    /// Snap to the nearest 1-significant-digit value (`0.00037` → `0.0004`).
    pub fn snap_one_significant(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let first = self.digits.as_bytes()[0] - b'0';
        let round_up = self
            .digits
            .as_bytes()
            .get(1)
            .map(|&b| b - b'0' >= 5)
            .unwrap_or(false);
        let (digit, sci) = if round_up && first == 9 {
            (1, self.sci + 1)
        } else if round_up {
            (first + 1, self.sci)
        } else {
            (first, self.sci)
        };
        Decimal { neg: self.neg, digits: digit.to_string(), sci }
    }

    /// Snap to the nearest value on the {1, 2, 5} mantissa grid at the same
    /// decade (`9.8e+12` → `1e+13`, `3e+12` → `2e+12`).
    pub fn snap_mantissa_125(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        // Mantissa in [1, 10); the choice of nearest candidate is robust to
        // float rounding because candidates are ≥ 1 apart.
        let mantissa: f64 = format!("{}.{}", &self.digits[..1], {
            let rest = &self.digits[1..];
            if rest.is_empty() { "0" } else { rest }
        })
        .parse()
        .expect("mantissa renders as a float");
        let mut best = (f64::INFINITY, 1u8, 0i32);
        for (cand, value) in [(1u8, 1.0), (2, 2.0), (5, 5.0), (1, 10.0)] {
            let dist = (mantissa - value).abs();
            if dist < best.0 {
                best = (dist, cand, if value == 10.0 { 1 } else { 0 });
            }
        }
        Decimal { neg: self.neg, digits: best.1.to_string(), sci: self.sci + best.2 }
    }

    /// The adjacent value obtained by moving the last significant digit one
    /// step up or down (`0.0001` → `0.0002` / `0.00009`, `9.8e+12` → `9.9e+12`).
    pub fn neighbor_last_digit(&self, up: bool) -> Self {
        if self.is_zero() {
            return Decimal::from_int(if up { 1 } else { -1 });
        }
        let d: u128 = self.digits.parse().expect("mantissa digits fit in u128");
        let old_len = self.digits.len() as i32;
        let (next, borrow_to_nine) = if up {
            (d + 1, false)
        } else if d == 1 {
            // 1 at this precision steps down to 9 one decade lower.
            (9, true)
        } else {
            (d - 1, false)
        };
        let mut digits = next.to_string();
        let new_len = digits.len() as i32;
        let mut sci = self.sci + (new_len - old_len);
        if borrow_to_nine {
            sci = self.sci - 1;
        }
        while digits.len() > 1 && digits.ends_with('0') {
            digits.pop();
        }
        Decimal { neg: self.neg, digits, sci }
    }

    /// True when `self` lies inside `[center·(1−pct/100), center·(1+pct/100)]`.
    pub fn within_percent_of(&self, center: &Decimal, pct: u64) -> bool {
        let lo = center.mul_rational(100 - pct, 2);
        let hi = center.mul_rational(100 + pct, 2);
        if center.is_negative() {
            *self >= hi && *self <= lo
        } else {
            *self >= lo && *self <= hi
        }
    }

    /// Magnitude comparison ignoring sign.
    fn cmp_abs(&self, other: &Decimal) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        self.sci.cmp(&other.sci).then_with(|| {
            // Same decade: compare digit strings padded to a common length.
            let width = self.digits.len().max(other.digits.len());
            let a = format!("{:0<width$}", self.digits, width = width);
            let b = format!("{:0<width$}", other.digits, width = width);
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.neg, other.neg) {
            (false, false) => self.cmp_abs(other),
            (true, true) => other.cmp_abs(self),
            (true, false) => {
                if self.is_zero() && other.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Less
                }
            }
            (false, true) => {
                if self.is_zero() && other.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl FromStr for Decimal {
    type Err = ParseDecimalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseDecimalError(text.to_string());
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(err());
        }
        let neg = match rest.as_bytes()[0] {
            b'-' => {
                rest = &rest[1..];
                true
            }
            b'+' => {
                rest = &rest[1..];
                false
            }
            _ => false,
        };
        let (mantissa, exp_part) = match rest.find(['e', 'E']) {
            Some(i) => (&rest[..i], Some(&rest[i + 1..])),
            None => (rest, None),
        };
        let exp: i32 = match exp_part {
            Some(e) if !e.is_empty() => e.parse().map_err(|_| err())?,
            Some(_) => return Err(err()),
            None => 0,
        };
        let (int_part, frac_part) = match mantissa.find('.') {
            Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(err());
        }
        // Normalize: locate the first significant digit, derive sci from its
        // position relative to the decimal point.
        let all: String = int_part.bytes().chain(frac_part.bytes()).map(char::from).collect();
        let first_sig = match all.find(|c| c != '0') {
            Some(i) => i,
            None => return Ok(Decimal::zero()),
        };
        let point_pos = int_part.len() as i32;
        let sci = point_pos - 1 - first_sig as i32 + exp;
        let mut digits: String = all[first_sig..].to_string();
        while digits.len() > 1 && digits.ends_with('0') {
            digits.pop();
        }
        Ok(Decimal { neg, digits, sci })
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.canonical())
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(|_| D::Error::custom(format!("invalid decimal `{text}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Decimal {
        s.parse().expect("test literal parses")
    }

    #[test]
    fn canonical_spellings() {
        assert_eq!(d("9.8E12").canonical(), "9.8e+12");
        assert_eq!(d("9.8e+12").canonical(), "9.8e+12");
        assert_eq!(d("0.0001").canonical(), "0.0001");
        assert_eq!(d("0.00010").canonical(), "0.0001");
        assert_eq!(d("10").canonical(), "10");
        assert_eq!(d("1").canonical(), "1");
        assert_eq!(d("0").canonical(), "0");
        assert_eq!(d("-0").canonical(), "0");
        assert_eq!(d("0.5").canonical(), "0.5");
        assert_eq!(d("100000").canonical(), "1e+05");
        assert_eq!(d("0.00001").canonical(), "1e-05");
        assert_eq!(d("-3.5e-7").canonical(), "-3.5e-07");
        assert_eq!(d("12.5").canonical(), "12.5");
        assert_eq!(d("1e18").canonical(), "1e+18");
    }

    #[test]
    fn parse_equivalent_spellings() {
        assert_eq!(d("9.8E12"), d("9.8e+12"));
        assert_eq!(d("9.8E12"), d("0.98e13"));
        assert_eq!(d("10"), d("10.0"));
        assert_eq!(d(".5"), d("0.50"));
        assert_eq!(d("0.000"), Decimal::zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Decimal>().is_err());
        assert!("abc".parse::<Decimal>().is_err());
        assert!("1.2.3".parse::<Decimal>().is_err());
        assert!("1e".parse::<Decimal>().is_err());
        assert!(".".parse::<Decimal>().is_err());
    }

    #[test]
    fn scale10_is_exact() {
        assert_eq!(d("9.8e+12").scale10(1).canonical(), "9.8e+13");
        assert_eq!(d("9.8e+12").scale10(-1).canonical(), "9.8e+11");
        assert_eq!(d("0.0001").scale10(1).canonical(), "0.001");
        assert_eq!(Decimal::zero().scale10(3).canonical(), "0");
    }

    #[test]
    fn mul_rational_exact() {
        // ×1.05 and ×0.95 band edges around 0.0001
        assert_eq!(d("0.0001").mul_rational(105, 2).canonical(), "0.000105");
        assert_eq!(d("0.0001").mul_rational(95, 2).canonical(), "9.5e-05");
        assert_eq!(d("10").mul_int(3).canonical(), "30");
        assert_eq!(d("2.5").mul_int(4).canonical(), "10");
    }

    #[test]
    fn ordering_matches_value() {
        assert!(d("9.5e-05") < d("0.0001"));
        assert!(d("0.0001") < d("0.000105"));
        assert!(d("-1") < d("0"));
        assert!(d("-1") < d("1"));
        assert!(d("-2") < d("-1"));
        assert!(d("9.8e+12") < d("1e+13"));
        assert!(d("2") < d("10"));
    }

    #[test]
    fn band_membership() {
        let center = d("0.0001");
        assert!(d("0.000095").within_percent_of(&center, 5));
        assert!(d("0.000105").within_percent_of(&center, 5));
        assert!(d("0.0001").within_percent_of(&center, 5));
        assert!(!d("0.0002").within_percent_of(&center, 5));
        assert!(!d("0.00009").within_percent_of(&center, 5));
    }

    #[test]
    fn grid_snaps() {
        assert_eq!(d("0.00037").snap_one_significant().canonical(), "0.0004");
        assert_eq!(d("0.0001").snap_one_significant().canonical(), "0.0001");
        assert_eq!(d("9.6").snap_one_significant().canonical(), "10");
        assert_eq!(d("9.8e+12").snap_mantissa_125().canonical(), "1e+13");
        assert_eq!(d("3e+12").snap_mantissa_125().canonical(), "2e+12");
        assert_eq!(d("4e+12").snap_mantissa_125().canonical(), "5e+12");
        assert_eq!(d("1.4e+18").snap_mantissa_125().canonical(), "1e+18");
    }

    #[test]
    fn last_digit_neighbors() {
        assert_eq!(d("0.0001").neighbor_last_digit(true).canonical(), "0.0002");
        assert_eq!(d("0.0001").neighbor_last_digit(false).canonical(), "9e-05");
        assert_eq!(d("9.8e+12").neighbor_last_digit(true).canonical(), "9.9e+12");
        assert_eq!(d("9.8e+12").neighbor_last_digit(false).canonical(), "9.7e+12");
        assert_eq!(d("9.9").neighbor_last_digit(true).canonical(), "10");
        assert_eq!(d("10").neighbor_last_digit(true).canonical(), "11");
        assert_eq!(d("1.1").neighbor_last_digit(false).canonical(), "1");
    }

    #[test]
    fn serde_round_trip_uses_canonical_text() {
        let v = d("9.8E12");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "\"9.8e+12\"");
        let back: Decimal = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
