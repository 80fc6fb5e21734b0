//! Formal power series truncated at a fixed order, with coefficients that
//! are themselves polynomials in a secondary variable.
//!
//! This is the engine behind the generating-function checks: a series in `w`
//! (or `t`) whose coefficient of `w^n` is an exact polynomial in `x` (or
//! `s`).  All ring operations discard terms above the truncation order
//! identically.

use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::scalar::{factorial, Rat};
use num_traits::{One, Zero};

/// Series sum_{j<=order} c_j t^j with c_j : DensePoly<Rat>.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<DensePoly<Rat>>,
}

impl TruncatedSeries {
    pub fn new(order: usize, mut coeffs: Vec<DensePoly<Rat>>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, DensePoly::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, DensePoly::one())
    }

    pub fn constant(order: usize, c: DensePoly<Rat>) -> Self {
        Self::new(order, vec![c])
    }

    /// c · t^k.
    pub fn monomial(order: usize, c: DensePoly<Rat>, k: usize) -> Self {
        let mut v = vec![DensePoly::zero(); k + 1];
        if k <= order {
            v[k] = c;
        }
        Self::new(order, v)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, j: usize) -> DensePoly<Rat> {
        self.coeffs.get(j).cloned().unwrap_or_else(DensePoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(DensePoly::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::new(
            order,
            (0..=order).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::new(
            order,
            (0..=order).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut v = vec![DensePoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        Self::new(order, v)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let k = DensePoly::constant(c.clone());
        Self::new(self.order, self.coeffs.iter().map(|a| a * &k).collect())
    }

    pub fn scale_poly(&self, c: &DensePoly<Rat>) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal derivative with respect to the series variable.
    pub fn derivative(&self) -> Self {
        let mut v = Vec::with_capacity(self.order);
        for j in 1..=self.order {
            v.push(self.coeff(j).scale(&Rat::from_integer(j.into())));
        }
        Self::new(self.order, v)
    }

    /// (1+u)^r for a series u with zero constant term.  The exponent may be
    /// any polynomial in the secondary variable (affine exponents like
    /// (s-mu-1)/2 are the interesting case); a plain rational exponent is the
    /// degree-zero instance.  Coefficients are the exact generalized
    /// binomials C(r, j) = r(r-1)...(r-j+1)/j!.
    pub fn binomial_pow(u: &Self, r: &DensePoly<Rat>, order: usize) -> Result<Self> {
        if !u.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Self::one(order);
        let mut upow = Self::one(order);
        let mut cbin = DensePoly::<Rat>::one();
        for j in 1..=order {
            upow = upow.mul(u);
            if upow.is_zero() {
                break;
            }
            // C(r, j) = C(r, j-1) * (r - j + 1) / j
            let fall = r - &DensePoly::constant(Rat::from_integer((j as i64 - 1).into()));
            cbin = &cbin * &fall;
            cbin = cbin.scale(&(Rat::one() / Rat::from_integer((j as i64).into())));
            acc = acc.add(&upow.scale_poly(&cbin));
        }
        Ok(acc)
    }

    /// exp(u) for a series u with zero constant term, via the recurrence
    /// g' = u'·g, i.e. k·g_k = sum_{j=1..k} j·u_j·g_{k-j}.
    pub fn exp(u: &Self, order: usize) -> Result<Self> {
        if !u.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut g = vec![DensePoly::<Rat>::zero(); order + 1];
        g[0] = DensePoly::one();
        for k in 1..=order {
            let mut acc = DensePoly::zero();
            for j in 1..=k {
                let uj = u.coeff(j);
                if uj.is_zero() {
                    continue;
                }
                acc = &acc + &(&uj.scale(&Rat::from_integer((j as i64).into())) * &g[k - j]);
            }
            g[k] = acc.scale(&(Rat::one() / Rat::from_integer((k as i64).into())));
        }
        Ok(Self::new(order, g))
    }

    /// exp(c·t) with a rational constant c.
    pub fn exp_ct(c: &Rat, order: usize) -> Self {
        let mut v = Vec::with_capacity(order + 1);
        let mut p = Rat::one();
        for j in 0..=order {
            if j > 0 {
                p = p * c.clone();
            }
            v.push(DensePoly::constant(p.clone() / factorial(j)));
        }
        Self::new(order, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn c(v: i64) -> DensePoly<Rat> {
        DensePoly::constant(rat_int(v))
    }

    #[test]
    fn binomial_pow_spec_examples() {
        let n = 4;
        // u = 4 t^2, r = -1  ->  1 - 4 t^2 + 16 t^4
        let u = TruncatedSeries::monomial(n, c(4), 2);
        let s = TruncatedSeries::binomial_pow(&u, &DensePoly::constant(rat_int(-1)), n).unwrap();
        assert_eq!(s.coeff(0), c(1));
        assert_eq!(s.coeff(2), c(-4));
        assert_eq!(s.coeff(4), c(16));
        assert_eq!(s.coeff(1), DensePoly::zero());

        // u = -4 t^2, r = 1/2  ->  1 - 2 t^2 - 2 t^4
        let u = TruncatedSeries::monomial(n, c(-4), 2);
        let s = TruncatedSeries::binomial_pow(&u, &DensePoly::constant(rat(1, 2)), n).unwrap();
        assert_eq!(s.coeff(0), c(1));
        assert_eq!(s.coeff(2), c(-2));
        assert_eq!(s.coeff(4), c(-2));

        // u = 0 -> 1
        let s =
            TruncatedSeries::binomial_pow(&TruncatedSeries::zero(n), &DensePoly::constant(rat(7, 3)), n)
                .unwrap();
        assert_eq!(s, TruncatedSeries::one(n));

        // nonzero constant term rejected
        let u = TruncatedSeries::one(n);
        assert!(matches!(
            TruncatedSeries::binomial_pow(&u, &DensePoly::one(), n),
            Err(Error::NonzeroConstantTerm)
        ));
    }

    #[test]
    fn exp_matches_scalar_expansion() {
        let n = 6;
        let u = TruncatedSeries::monomial(n, c(1), 1); // t
        let e = TruncatedSeries::exp(&u, n).unwrap();
        for j in 0..=n {
            assert_eq!(e.coeff(j), DensePoly::constant(Rat::one() / factorial(j)));
        }
        assert_eq!(e, TruncatedSeries::exp_ct(&Rat::one(), n));
    }

    #[test]
    fn binomial_inverse_pair_is_identity() {
        let n = 9;
        // u = 3t + 2t^3
        let u = TruncatedSeries::monomial(n, c(3), 1).add(&TruncatedSeries::monomial(n, c(2), 3));
        let r = DensePoly::constant(rat(5, 7));
        let a = TruncatedSeries::binomial_pow(&u, &r, n).unwrap();
        let b = TruncatedSeries::binomial_pow(&u, &(-r), n).unwrap();
        assert_eq!(a.mul(&b), TruncatedSeries::one(n));
    }
}
