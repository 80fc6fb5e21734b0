//! Exact scalar types: arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rat` is `num_rational::BigRational` (always reduced, positive
//! denominator); `GaussRat` is a complex number with `Rat` parts.  Evaluation
//! on the critical line `s = 1/2 + it` happens in `GaussRat`, everything else
//! stays in `Rat`.

use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;
pub type GaussRat = Complex<Rat>;

/// `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

pub fn gauss(re: Rat, im: Rat) -> GaussRat {
    Complex::new(re, im)
}

/// The imaginary unit.
pub fn gauss_i() -> GaussRat {
    Complex::new(Rat::zero(), Rat::one())
}

pub fn gauss_from_rat(r: Rat) -> GaussRat {
    Complex::new(r, Rat::zero())
}

/// Checked Gaussian-rational division; division by zero is an error, never a
/// NaN-like value.
pub fn gauss_div(a: &GaussRat, b: &GaussRat) -> Result<GaussRat> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a.clone() / b.clone())
}

/// Parse an exact rational literal: `p/q`, `p`, with optional sign.
/// Decimal notation is rejected on purpose; the pipeline is exact.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    if t.is_empty() || t.contains('.') {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1); empty product for n = 0.
pub fn pochhammer(a: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    let mut f = a.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rat::one();
    }
    acc
}

/// n! as a rational.
pub fn factorial(n: usize) -> Rat {
    pochhammer(&Rat::one(), n)
}

/// Binomial coefficient with a rational top and integer bottom:
/// C(a, k) = (a-k+1)_k / k!.
pub fn binomial_rat(a: &Rat, k: usize) -> Rat {
    let base = a - rat_int(k as i64) + Rat::one();
    pochhammer(&base, k) / factorial(k)
}

/// C(n, k) for machine integers.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    binomial_rat(&rat_int(n as i64), k)
}

/// Exact integer power with negative exponents allowed.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow::pow(Rat::one() / base.clone(), (-exp) as usize)
    }
}

pub fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Decimal rendering of a rational to `digits` places, rounding half away
/// from zero.  Exact; used to print certified roots.
pub fn to_decimal(r: &Rat, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    // round(|r| * 10^d)
    let scaled = a * Rat::from_integer(scale.clone());
    let two = BigInt::from(2);
    let rounded = (scaled.numer() * &two + scaled.denom()) / (scaled.denom() * &two);
    let (ip, fp) = (rounded.clone() / &scale, rounded % &scale);
    let mut s = String::new();
    if neg && !(ip.is_zero() && fp.is_zero()) {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if digits > 0 {
        let f = fp.to_string();
        s.push('.');
        for _ in f.len()..digits {
            s.push('0');
        }
        s.push_str(&f);
    }
    s
}

/// Floor of log2(|r|) plus a conversion helper used when promoting exact
/// scalars into the oracle's floats.
pub fn rat_to_f64_approx(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Sign of a big integer as an i8.
pub fn bigint_sign(b: &BigInt) -> i8 {
    match b.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_spec_values() {
        assert_eq!(pochhammer(&rat(1, 2), 0), rat_int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&rat_int(-3), 5), Rat::zero());
    }

    #[test]
    fn parse_rejects_decimals_and_zero_denominators() {
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert_eq!(parse_rat("-1/4").unwrap(), rat(-1, 4));
        assert_eq!(parse_rat("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rat("3").unwrap(), rat_int(3));
        // parsed rationals reduce
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
    }

    #[test]
    fn gauss_division_by_zero_is_an_error() {
        let a = gauss(rat_int(1), rat_int(2));
        assert_eq!(gauss_div(&a, &GaussRat::zero()), Err(Error::DivisionByZero));
        let b = gauss(rat_int(0), rat_int(1));
        assert_eq!(gauss_div(&a, &b).unwrap(), gauss(rat_int(2), rat_int(-1)));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(to_decimal(&rat(1, 2), 0), "1");
        assert_eq!(to_decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&Rat::zero(), 4), "0.0000");
        assert_eq!(to_decimal(&rat(-1, 200000), 4), "0.0000");
    }

    #[test]
    fn binomial_with_rational_top() {
        // C(7/2, 2) = (7/2)(5/2)/2 = 35/8
        assert_eq!(binomial_rat(&rat(7, 2), 2), rat(35, 8));
        assert_eq!(binomial(5, 2), rat_int(10));
        assert_eq!(binomial(3, 5), Rat::zero());
    }
}
