//! Exact number types and their text/JSON renderings.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision nonnegative integer used for subtree counts.
pub type Count = BigUint;

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Ratio = num_rational::BigRational;

/// Builds `num / den` from two counts. Panics if `den` is zero.
pub fn ratio(num: &Count, den: &Count) -> Ratio {
    Ratio::new(
        BigInt::from_biguint(Sign::Plus, num.clone()),
        BigInt::from_biguint(Sign::Plus, den.clone()),
    )
}

pub fn ratio_int(num: i64, den: i64) -> Ratio {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: u64) -> Ratio {
    Ratio::from_integer(BigInt::from(value))
}

pub fn count_to_ratio(c: &Count) -> Ratio {
    Ratio::from_integer(BigInt::from_biguint(Sign::Plus, c.clone()))
}

/// `num/den` in lowest terms, or the bare integer when the denominator is 1.
pub fn fraction(r: &Ratio) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering of `r` rounded (half away from zero) to `digits`
/// significant digits, computed exactly.
pub fn decimal(r: &Ratio, digits: usize) -> String {
    let digits = digits.max(1);
    if r.is_zero() {
        return if digits > 1 {
            format!("0.{}", "0".repeat(digits - 1))
        } else {
            "0".into()
        };
    }
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    let ten = BigInt::from(10u32);

    // exponent e with 10^e <= |r| < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let pow = |k: i64| ten.pow(k.unsigned_abs() as u32);
    let ge_pow = |k: i64| {
        if k >= 0 {
            num >= &den * pow(k)
        } else {
            &num * pow(k) >= den
        }
    };
    while !ge_pow(e) {
        e -= 1;
    }
    while ge_pow(e + 1) {
        e += 1;
    }

    let shift = digits as i64 - 1 - e;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (&num * pow(shift), den.clone())
    } else {
        (num.clone(), &den * pow(shift))
    };
    let (mut q, rem) = scaled_num.div_rem(&scaled_den);
    if rem * 2 >= scaled_den {
        q += 1;
    }
    if q == pow(digits as i64) {
        q /= &ten;
        e += 1;
    }

    let mut body = q.to_string();
    let point = e + 1; // digits before the decimal point
    let rendered = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), body)
    } else if point as usize >= body.len() {
        body.push_str(&"0".repeat(point as usize - body.len()));
        body
    } else {
        let (a, b) = body.split_at(point as usize);
        format!("{a}.{b}")
    };
    if neg {
        format!("-{rendered}")
    } else {
        rendered
    }
}

/// Lossy conversion for thresholds and plotting.
pub fn to_f64(r: &Ratio) -> f64 {
    decimal(r, 17).parse().unwrap_or(f64::NAN)
}

/// Serde adapters: counts as decimal strings, ratios as `{"num","den"}`.
pub mod serde_exact {
    use super::{Count, Ratio};
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct RatioRepr {
        num: String,
        den: String,
    }

    pub mod count {
        use super::*;

        pub fn serialize<S: Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&c.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Count, D::Error> {
            let text = String::deserialize(d)?;
            text.parse().map_err(D::Error::custom)
        }
    }

    pub mod counts {
        use super::*;

        pub fn serialize<S: Serializer>(cs: &[Count], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(cs.iter().map(|c| c.to_string()))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Count>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts.iter().map(|t| t.parse().map_err(D::Error::custom)).collect()
        }
    }

    pub mod opt_count {
        use super::*;

        pub fn serialize<S: Serializer>(c: &Option<Count>, s: S) -> Result<S::Ok, S::Error> {
            c.as_ref().map(|c| c.to_string()).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Count>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| t.parse().map_err(D::Error::custom))
                .transpose()
        }
    }

    fn to_repr(r: &Ratio) -> RatioRepr {
        RatioRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }

    fn from_repr<E: serde::de::Error>(r: RatioRepr) -> Result<Ratio, E> {
        let num: BigInt = r.num.parse().map_err(E::custom)?;
        let den: BigInt = r.den.parse().map_err(E::custom)?;
        if den == BigInt::from(0) {
            return Err(E::custom("zero denominator"));
        }
        Ok(Ratio::new(num, den))
    }

    pub mod ratio {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Ratio, s: S) -> Result<S::Ok, S::Error> {
            to_repr(r).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio, D::Error> {
            from_repr(RatioRepr::deserialize(d)?)
        }
    }

    pub mod opt_ratio {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Ratio>, s: S) -> Result<S::Ok, S::Error> {
            r.as_ref().map(to_repr).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Ratio>, D::Error> {
            Option::<RatioRepr>::deserialize(d)?.map(from_repr).transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rounding() {
        assert_eq!(decimal(&ratio_int(1, 2), 12), "0.500000000000");
        assert_eq!(decimal(&ratio_int(31, 10), 12), "3.10000000000");
        assert_eq!(decimal(&ratio_int(2, 3), 4), "0.6667");
        assert_eq!(decimal(&ratio_int(1, 3000), 3), "0.000333");
        assert_eq!(decimal(&ratio_int(9999, 1000), 3), "10.0");
        assert_eq!(decimal(&ratio_int(12345, 1), 3), "12300");
        assert_eq!(decimal(&ratio_int(-1, 8), 2), "-0.13");
        assert_eq!(decimal(&int(0), 3), "0.00");
        assert_eq!(decimal(&int(1), 1), "1");
    }

    #[test]
    fn fraction_rendering() {
        assert_eq!(fraction(&ratio_int(4, 2)), "2");
        assert_eq!(fraction(&ratio_int(23, 44)), "23/44");
        assert_eq!(fraction(&ratio_int(6, -4)), "-3/2");
    }

    #[test]
    fn f64_conversion() {
        assert!((to_f64(&ratio_int(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
