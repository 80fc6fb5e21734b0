//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Dense representation on purpose: nothing in scope exceeds degree ~50, and
//! a plain `Vec` keeps every operation obviously correct.  The coefficient
//! type is generic so the same code serves `Rat`, `GaussRat` and (for the
//! bivariate identity checks) `DensePoly<Rat>` itself.

use crate::error::{Error, Result};
use crate::scalar::{sign_of, GaussRat, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Everything a coefficient ring must provide.  Blanket-implemented.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Dense polynomial; `coeffs[k]` is the coefficient of `X^k`.
/// Invariant: no trailing zero coefficient (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq)]
pub struct DensePoly<T: Coeff> {
    coeffs: Vec<T>,
}

impl<T: Coeff> DensePoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self { coeffs: v }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> DensePoly<U> {
        DensePoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::one();
        for c in &self.coeffs[1..] {
            v.push(c.clone() * k.clone());
            k = k + T::one();
        }
        Self::new(v)
    }

    /// p(a·X + b), expanded by Horner in the affine argument.
    pub fn compose_affine(&self, a: &T, b: &T) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Coeff> Zero for DensePoly<T> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for DensePoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Coeff> Add for DensePoly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Coeff> Add for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn add(self, rhs: Self) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        DensePoly::new(v)
    }
}

impl<T: Coeff> Sub for DensePoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Coeff> Sub for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn sub(self, rhs: Self) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - rhs.coeff(k));
        }
        DensePoly::new(v)
    }
}

impl<T: Coeff> Neg for DensePoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        DensePoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Coeff> Mul for DensePoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Coeff> Mul for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn mul(self, rhs: Self) -> DensePoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::new(v)
    }
}

impl<T: Coeff> fmt::Debug for DensePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly({:?})", self.coeffs)
    }
}

// ---------------------------------------------------------------------------
// Field-coefficient algorithms (division, gcd, squarefree part)
// ---------------------------------------------------------------------------

impl<T: Coeff + Div<Output = T>> DensePoly<T> {
    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap().clone() / lead.clone();
            let k = rd - dd;
            quo[k] = c.clone();
            rem = &rem - &d.scale(&c).shift_up(k);
        }
        Ok((Self::new(quo), rem))
    }

    /// Monic gcd by Euclid's algorithm; gcd(0, 0) is an error.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        let lead = a.leading().unwrap().clone();
        Ok(a.scale(&(T::one() / lead)))
    }

    /// Monic squarefree part p / gcd(p, p').
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative())?;
        let (q, r) = self.div_rem(&g)?;
        debug_assert!(r.is_zero());
        let lead = q.leading().unwrap().clone();
        Ok(q.scale(&(T::one() / lead)))
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }
}

// ---------------------------------------------------------------------------
// Rational-specific helpers
// ---------------------------------------------------------------------------

impl DensePoly<Rat> {
    /// Promote to Gaussian-rational coefficients.
    pub fn to_gauss(&self) -> DensePoly<GaussRat> {
        self.map(|c| GaussRat::new(c.clone(), Rat::zero()))
    }

    /// Evaluate at a Gaussian-rational point.
    pub fn eval_gauss(&self, z: &GaussRat) -> GaussRat {
        self.to_gauss().eval(z)
    }

    pub fn sign_at(&self, x: &Rat) -> i8 {
        sign_of(&self.eval(x))
    }

    /// Sign at +inf (of the leading term) and at -inf.
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, sign_of)
    }

    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign_of(self.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Positive content: gcd of numerators over lcm of denominators.
    /// Dividing by it never changes any coefficient sign.
    pub fn content_positive(&self) -> Rat {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return Rat::one();
        }
        let mut g = BigInt::from(0);
        let mut l = BigInt::from(1);
        for c in &self.coeffs {
            g = g.gcd(&c.numer().abs());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return Rat::one();
        }
        Rat::new(g, l)
    }

    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content_positive();
        self.scale(&(Rat::one() / c))
    }

    /// Human rendering in descending degree with exact fractions.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = mag.is_one();
            if !unit || k == 0 {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if !unit {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for DensePoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, gauss_i, rat, rat_int};

    fn p(cs: &[i64]) -> DensePoly<Rat> {
        DensePoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn compose_affine_spec_examples() {
        // p = X, a = -1, b = 1  ->  1 - X
        let x = DensePoly::<Rat>::var();
        assert_eq!(x.compose_affine(&rat_int(-1), &rat_int(1)), p(&[1, -1]));
        // p = X^2, a = 1, b = 2 -> X^2 + 4X + 4
        let x2 = DensePoly::<Rat>::monomial(Rat::one(), 2);
        assert_eq!(x2.compose_affine(&rat_int(1), &rat_int(2)), p(&[4, 4, 1]));
        // p = 1 - 2X composed over Gaussian rationals at a = i, b = 1/2 -> -2i X
        let q = p(&[1, -2]).to_gauss();
        let r = q.compose_affine(&gauss_i(), &gauss(rat(1, 2), rat_int(0)));
        assert_eq!(
            r,
            DensePoly::monomial(gauss(rat_int(0), rat_int(-2)), 1)
        );
    }

    #[test]
    fn division_and_gcd() {
        // (X-1)(X-2)(X+3) over (X-2)
        let f = &(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[3, 1]);
        let (q, r) = f.div_rem(&p(&[-2, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &p(&[-1, 1]) * &p(&[3, 1]));

        let a = &p(&[-1, 1]) * &p(&[-2, 1]);
        let b = &p(&[-2, 1]) * &p(&[5, 1]);
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, p(&[-2, 1])); // monic
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert!(!f.is_squarefree().unwrap());
        let sf = f.squarefree_part().unwrap();
        assert_eq!(sf, &p(&[-1, 1]) * &p(&[2, 1]));
        assert!(sf.is_squarefree().unwrap());
    }

    #[test]
    fn eval_and_signs() {
        let f = p(&[2, 0, -3]); // 2 - 3x^2
        assert_eq!(f.eval(&rat_int(1)), rat_int(-1));
        assert_eq!(f.sign_at_pos_inf(), -1);
        assert_eq!(f.sign_at_neg_inf(), -1);
        let g = p(&[0, 1, 0, 5]);
        assert_eq!(g.sign_at_neg_inf(), -1);
        assert_eq!(g.sign_at_pos_inf(), 1);
    }

    #[test]
    fn display_descending_with_fractions() {
        let f = DensePoly::new(vec![rat_int(1), rat(-4, 3), rat(4, 3)]);
        assert_eq!(f.display_with("s"), "4/3*s^2 - 4/3*s + 1");
        assert_eq!(p(&[0]).display_with("s"), "0");
        assert_eq!(p(&[0, -1]).display_with("t"), "-t");
    }

    #[test]
    fn bivariate_nesting_works() {
        // (X + Y)^2 with Y the inner variable: outer poly in X over DensePoly<Rat>
        type Bi = DensePoly<DensePoly<Rat>>;
        let xy: Bi = DensePoly::new(vec![DensePoly::var(), DensePoly::one()]);
        let sq = &xy * &xy;
        assert_eq!(sq.coeff(0), &DensePoly::var() * &DensePoly::var());
        assert_eq!(sq.coeff(1), DensePoly::var().scale(&rat_int(2)));
        assert_eq!(sq.coeff(2), DensePoly::one());
    }
}
