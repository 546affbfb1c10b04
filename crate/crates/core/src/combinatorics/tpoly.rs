use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{binomial, Rational};

/// Univariate polynomial in `t` with exact rational coefficients, stored dense
/// in ascending powers of `t`. The last stored coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<Rational>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c0 + c1 t + ...`; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `(1+t)^k`.
    pub fn one_plus_t_pow(k: usize) -> Self {
        Self::from_coeffs(
            (0..=k)
                .map(|i| Rational::from_integer(binomial(k, i)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The value at `t = 0`.
    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Coefficients `c_0..c_d` with `p(t) = sum c_k (1+t)^k`, obtained by
    /// substituting `t = u - 1` and expanding in `u`.
    pub fn to_one_plus_t_powers(&self) -> Vec<Rational> {
        let d = self.coeffs.len();
        let mut out = vec![Rational::zero(); d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let b = Rational::from_integer(binomial(i, j));
                if (i - j) % 2 == 0 {
                    *slot += a * b;
                } else {
                    *slot -= a * b;
                }
            }
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// Inverse of [`TPoly::to_one_plus_t_powers`].
    pub fn from_one_plus_t_powers(c: &[Rational]) -> Self {
        let mut out = vec![Rational::zero(); c.len()];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate().take(k + 1) {
                *slot += ck * Rational::from_integer(binomial(k, i));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = TPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<Rational> for TPoly {
    fn from(c: Rational) -> Self {
        TPoly::constant(c)
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(mut self, rhs: TPoly) -> TPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::rat;
    use proptest::prelude::*;

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn onep_t_examples() {
        // t^2 = (1+t)^2 - 2(1+t) + 1
        assert_eq!(TPoly::from_ints(&[0, 0, 1]).to_one_plus_t_powers(), rats(&[1, -2, 1]));
        assert_eq!(TPoly::one().to_one_plus_t_powers(), rats(&[1]));
        assert_eq!(TPoly::from_ints(&[2, 1]).to_one_plus_t_powers(), rats(&[1, 1]));
        assert!(TPoly::zero().to_one_plus_t_powers().is_empty());
    }

    #[test]
    fn arithmetic_and_display() {
        let p = TPoly::from_ints(&[2, 1]);
        let q = TPoly::from_ints(&[1, 1]);
        assert_eq!(&p * &q, TPoly::from_ints(&[2, 3, 1]));
        assert_eq!(&p - &p, TPoly::zero());
        assert_eq!(TPoly::one_plus_t_pow(3), TPoly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(p.eval(&rat(-1, 1)), rat(1, 1));
        assert_eq!(TPoly::from_ints(&[0, -1, 3]).to_string(), "-t + 3t^2");
        assert_eq!(TPoly::from_ints(&[1, 0, 0]).degree(), Some(0));
    }

    proptest! {
        #[test]
        fn onep_t_round_trip(coeffs in prop::collection::vec((-50i64..50, 1i64..7), 0..13)) {
            let p = TPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect());
            let c = p.to_one_plus_t_powers();
            prop_assert_eq!(TPoly::from_one_plus_t_powers(&c), p);
        }

        #[test]
        fn rational_field_laws(a in any::<i64>(), b in any::<i64>(), c in 1i64..1000, d in 1i64..1000) {
            let x = rat(a, c);
            let y = rat(b, d);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x);
            }
        }
    }
}
