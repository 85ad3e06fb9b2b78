//! The scalar type and its text format (`p/q`, never floating point).

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(0, alloc::format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Writes `coeff·body` as a signed summand: returns `(negative, text)` where
/// a unit coefficient is elided.
pub(crate) fn signed_term(coeff: &Rational, body: &str, sep: &str) -> (bool, String) {
    let neg = coeff.is_negative();
    let abs = coeff.abs();
    let text = if body.is_empty() {
        format_rational(&abs)
    } else if abs.is_one() {
        body.to_string()
    } else {
        alloc::format!("{}{}{}", format_rational(&abs), sep, body)
    };
    (neg, text)
}

/// Joins signed summands as `a + b - c`; the empty sum is `0`.
pub(crate) fn join_terms<I: IntoIterator<Item = (bool, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (i, (neg, text)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
