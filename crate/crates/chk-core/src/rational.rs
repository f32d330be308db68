//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| format!("bad rational `{s}`"))?;
    let d = BigInt::from_str(den).map_err(|_| format!("bad rational `{s}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Q::new(n, d))
}

pub fn parse_q_list(s: &str) -> Result<Vec<Q>, String> {
    s.split(',').map(parse_q).collect()
}

/// Canonical `"p/q"` with `q > 0`, always including the denominator.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// True iff `x` lies in `Z_{<=0}`.
pub fn is_nonpositive_integer(x: &Q) -> bool {
    x.is_integer() && !x.is_positive()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn floor_i64(x: &Q) -> i64 {
    x.floor().numer().to_i64().expect("floor out of i64 range")
}

/// Smallest common denominator of a list.
pub fn common_denominator(xs: &[Q]) -> BigInt {
    xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub(crate) mod serde_q_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&fmt_q(x))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["3/4", "-1/1", "0/1", "5/6"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(fmt_q(&parse_q("-2").unwrap()), "-2/1");
        assert_eq!(fmt_q(&parse_q("4/-6").unwrap()), "-2/3");
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn nonpositive_integers() {
        assert!(is_nonpositive_integer(&q(0)));
        assert!(is_nonpositive_integer(&q(-3)));
        assert!(!is_nonpositive_integer(&q(1)));
        assert!(!is_nonpositive_integer(&frac(-1, 2)));
    }
}
