//! Exact rationals and their `"p/q"` text form.

use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats as `"p/q"` with `q > 0` and `gcd(p, q) = 1`, integers included (`"3/1"`).
pub fn to_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_pq(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::input(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `x^e` for an integer exponent; `x` must be nonzero when `e < 0`.
pub fn pow(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

fn int_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.sign() == Sign::Minus {
        if n % 2 == 0 {
            return None;
        }
        return int_root(&-x, n).map(|r| -r);
    }
    let r = x.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *x).then_some(r)
}

/// Exact `n`-th root if `x` is an `n`-th power in `Q` (positive root for even `n`).
pub fn exact_root(x: &Rational, n: u32) -> Option<Rational> {
    assert!(n > 0);
    if n == 1 || x.is_zero() {
        return Some(x.clone());
    }
    let p = int_root(x.numer(), n)?;
    let q = int_root(x.denom(), n)?;
    Some(Rational::new(p, q))
}

/// Uniform nonzero rational with `|num| <= max_num`, `1 <= den <= max_den`.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    loop {
        let p = rng.gen_range(-max_num..=max_num);
        if p != 0 {
            let q = rng.gen_range(1..=max_den);
            return frac(p, q);
        }
    }
}

/// Default sampler bounds for chart parameters.
pub fn random_param<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    random_nonzero(rng, 20, 10)
}

/// Serde adapter writing a `Rational` as a `"p/q"` string.
pub mod pq {
    use super::{parse_pq, to_pq, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_pq(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod pq_vec {
    use super::{parse_pq, to_pq, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_pq))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_pq(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter for row-major `Vec<Vec<Rational>>`.
pub mod pq_rows {
    use super::{parse_pq, to_pq, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(rows.iter().map(|r| r.iter().map(to_pq).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_pq(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_format_is_reduced() {
        assert_eq!(to_pq(&frac(6, -4)), "-3/2");
        assert_eq!(to_pq(&int(2)), "2/1");
        assert_eq!(to_pq(&int(0)), "0/1");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_pq("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_pq(" 7 ").unwrap(), int(7));
        assert!(parse_pq("1/0").is_err());
        assert!(parse_pq("x").is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&frac(4, 9), 2), Some(frac(2, 3)));
        assert_eq!(exact_root(&frac(-8, 27), 3), Some(frac(-2, 3)));
        assert_eq!(exact_root(&frac(2, 1), 2), None);
        assert_eq!(exact_root(&frac(-4, 1), 2), None);
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(pow(&frac(2, 3), 0), int(1));
    }
}
