//! Laurent polynomials in one variable with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: BTreeMap<i64, BigInt>,
    var: char,
}

impl Polynomial {
    pub fn zero(var: char) -> Self {
        Polynomial {
            coeffs: BTreeMap::new(),
            var,
        }
    }

    pub fn monomial(var: char, exponent: i64, coeff: BigInt) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exponent, coeff);
        p
    }

    pub fn from_coefficients(var: char, coeffs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in coeffs {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        let entry = self.coeffs.entry(exponent).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let base = if e >= 0 { x.clone() } else { x.recip() };
            total += pow(&base, e.unsigned_abs()) * BigRational::from_integer(c.clone());
        }
        total
    }

    pub fn eval_integer(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Unique polynomial of degree `< points.len()` through the points, or `None`
    /// when its coefficients are not all integers.
    pub fn interpolate(var: char, points: &[(BigInt, BigInt)]) -> Option<Polynomial> {
        // Newton divided differences, then expansion into the monomial basis
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
        let mut table: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from_integer(y.clone())).collect();
        let n = xs.len();
        for level in 1..n {
            for i in (level..n).rev() {
                table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n.max(1)];
        for i in (0..n).rev() {
            // coeffs ← coeffs·(x − xs[i]) + table[i]
            let mut next = vec![BigRational::zero(); n.max(1)];
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if j + 1 < next.len() {
                    next[j + 1] += c;
                }
                next[j] -= c * &xs[i];
            }
            next[0] += &table[i];
            coeffs = next;
        }
        let mut out = Polynomial::zero(var);
        for (e, c) in coeffs.into_iter().enumerate() {
            if !c.is_integer() {
                return None;
            }
            out.add_term(e as i64, c.to_integer());
        }
        Some(out)
    }
}

fn pow(x: &BigRational, e: u64) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= x;
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.var);
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "{}", self.var)?,
                1 => write!(f, "{mag}{}", self.var)?,
                _ if unit => write!(f, "{}^{e}", self.var)?,
                _ => write!(f, "{mag}{}^{e}", self.var)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn display_and_arithmetic() {
        let q = Polynomial::monomial('q', 1, big(1));
        let p = &(&q * &q) - &q;
        assert_eq!(p.to_string(), "q^2 - q");
        assert_eq!(p.eval_integer(3), BigRational::from_integer(big(6)));
        let t = Polynomial::from_coefficients('t', [(0, big(1)), (1, big(3)), (2, big(2))]);
        assert_eq!(t.to_string(), "2t^2 + 3t + 1");
        assert_eq!(Polynomial::zero('t').to_string(), "0");
        let inv = Polynomial::monomial('q', -1, big(-2));
        assert_eq!(inv.to_string(), "-2q^-1");
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let target = Polynomial::from_coefficients('q', [(0, big(-4)), (3, big(7)), (5, big(1))]);
        let points: Vec<(BigInt, BigInt)> = (2..9)
            .map(|x| (big(x), target.eval_integer(x).to_integer()))
            .collect();
        assert_eq!(Polynomial::interpolate('q', &points), Some(target));
        // a line through (0,0), (2,1) has slope 1/2
        assert_eq!(Polynomial::interpolate('q', &[(big(0), big(0)), (big(2), big(1))]), None);
    }
}
