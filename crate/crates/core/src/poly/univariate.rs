use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Dense univariate polynomial over the rationals, coefficients from degree 0 up.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
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

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplicity of 0 as a root; `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient, `None` if there is a remainder.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        (0..n).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Distinct rational roots by the rational root theorem.
    ///
    /// Returns `None` when the extreme coefficients are too large (beyond
    /// `10^12` after clearing denominators) to enumerate their divisors.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        let start = self.order()?;
        let den = self.coeffs[start..]
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs[start..]
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut roots = Vec::new();
        if start > 0 {
            roots.push(Rational::zero());
        }
        if ints.len() == 1 {
            return Some(roots);
        }
        let limit = 1_000_000_000_000u64;
        let a0 = ints[0].abs().to_u64().filter(|v| *v <= limit)?;
        let an = ints[ints.len() - 1]
            .abs()
            .to_u64()
            .filter(|v| *v <= limit)?;
        for p in divisors(a0) {
            for q in divisors(an) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(p) * sign, BigInt::from(q));
                    if !roots.contains(&cand) && self.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        Some(roots)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
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
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn trims_and_orders() {
        assert_eq!(u(&[0, 0, 3, 0]).degree(), Some(2));
        assert_eq!(u(&[0, 0, 3]).order(), Some(2));
        assert_eq!(u(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = &u(&[-1, 1]) * &u(&[2, 1]);
        let b = &u(&[-1, 1]) * &u(&[-3, 1]);
        assert_eq!(a.gcd(&b), u(&[-1, 1]));
        let (q, r) = a.div_rem(&u(&[-1, 1]));
        assert_eq!((q, r), (u(&[2, 1]), UniPoly::zero()));
        assert!(a.div_exact(&u(&[5, 1])).is_none());
        assert_eq!(u(&[1, 2, 1]).derivative(), u(&[2, 2]));
    }

    #[test]
    fn rational_roots_found() {
        // 2x^3 - 3x^2 - 2x = x (2x + 1)(x - 2)
        let mut roots = u(&[0, -2, -3, 2]).rational_roots().unwrap();
        roots.sort();
        assert_eq!(
            roots,
            vec![Rational::new((-1).into(), 2.into()), rat(0), rat(2)]
        );
        assert_eq!(u(&[1, 0, 1]).rational_roots().unwrap(), vec![]);
        assert_eq!(u(&[5]).rational_roots().unwrap(), vec![]);
    }
}
