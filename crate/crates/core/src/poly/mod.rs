//! Sparse bivariate polynomials over the rationals.

mod form;
mod gcd;
mod parse;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;

pub use form::{squarefree_part_binary, BinaryForm};
pub use gcd::gcd_bivariate;
pub use parse::parse_poly;
pub use univariate::UniPoly;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Exponent pair `x^x * y^y`.
///
/// Ordered graded-lexicographically with `x > y`: total degree first, then the
/// power of `x`. The greatest monomial of a polynomial is its leading monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.x).cmp(&(other.degree(), other.x))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

/// A polynomial in `x` and `y` with rational coefficients.
///
/// No stored coefficient is zero, so structural equality is mathematical equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        BiPoly::monomial(0, 1, Rational::one())
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::new(i, j), c);
        p
    }

    /// Builds a polynomial from `(i, j, coefficient)` triples, merging like terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    /// Like [`BiPoly::from_terms`] with integer coefficients.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        BiPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, rat(c))))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&Monomial::ONE)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match var {
                Var::X => m.x,
                Var::Y => m.y,
            })
            .max()
    }

    /// Order at the origin: the lowest total degree present, infinite for zero.
    pub fn order(&self) -> ExtNat {
        match self.terms.keys().next() {
            Some(m) => ExtNat::Finite(m.degree() as u64),
            None => ExtNat::Infinite,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => lo.degree() == hi.degree(),
            _ => true,
        }
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The tangent cone: sum of the terms of lowest total degree.
    pub fn lowest_form(&self) -> Result<BinaryForm> {
        let k = self
            .terms
            .keys()
            .next()
            .ok_or(Error::ZeroPolynomial)?
            .degree();
        Ok(BinaryForm::new_unchecked(self.homogeneous_part(k), k))
    }

    /// Drops every term of total degree above `k`.
    pub fn truncate_above(&mut self, k: u32) {
        self.terms.retain(|m, _| m.degree() <= k);
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by `c * x^i * y^j`.
    pub fn mul_term(&self, i: u32, j: u32, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let s = Monomial::new(i, j);
        BiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m * s, a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut result = BiPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial(&self, var: Var) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let (e, dm) = match var {
                Var::X => (
                    m.x,
                    Monomial {
                        x: m.x.wrapping_sub(1),
                        y: m.y,
                    },
                ),
                Var::Y => (
                    m.y,
                    Monomial {
                        x: m.x,
                        y: m.y.wrapping_sub(1),
                    },
                ),
            };
            if e > 0 {
                out.terms.insert(dm, c * rat(e as i64));
            }
        }
        out
    }

    /// Restriction `p(x, 0)`.
    pub fn restrict_y0(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (m, c) in self.terms.iter().filter(|(m, _)| m.y == 0) {
            let i = m.x as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, Rational::zero());
            }
            coeffs[i] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// Divides by `y`. Every term must contain `y`.
    pub fn div_y(&self) -> BiPoly {
        debug_assert!(self.terms.keys().all(|m| m.y > 0));
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x, m.y - 1), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let (dm, dc) = d.leading_term()?;
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !dm.divides(m) {
                return None;
            }
            let q = Monomial::new(m.x - dm.x, m.y - dm.y);
            let qc = c * &dc_inv;
            rem = &rem - &d.mul_term(q.x, q.y, &qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &BiPoly) -> bool {
        !self.is_zero() && other.div_exact(self).is_some()
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> BiPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => BiPoly::zero(),
        }
    }

    /// Scales to coprime integer coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> BiPoly {
        let Some((_, lc)) = self.leading_term() else {
            return BiPoly::zero();
        };
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut factor = Rational::new(den, num);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Substitutes `x -> a x + b y`, `y -> c x + d y`.
    pub fn substitute_linear(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
    ) -> BiPoly {
        let lx = BiPoly::from_terms([(1, 0, a.clone()), (0, 1, b.clone())]);
        let ly = BiPoly::from_terms([(1, 0, c.clone()), (0, 1, d.clone())]);
        let mut out = BiPoly::zero();
        for (m, coeff) in &self.terms {
            let t = &lx.pow(m.x) * &ly.pow(m.y);
            out = &out + &t.scale(coeff);
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + c
                * num_traits::pow(x.clone(), m.x as usize)
                * num_traits::pow(y.clone(), m.y as usize)
        })
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| &acc * &p)
    }
}

impl<'a> std::iter::Product<&'a BiPoly> for BiPoly {
    fn product<I: Iterator<Item = &'a BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| &acc * p)
    }
}

impl std::str::FromStr for BiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.x), ("y", m.y)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Prints in the input grammar: increasing total degree, and within one degree
/// decreasing powers of `x`. No whitespace.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.degree(), std::cmp::Reverse(m.x)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        assert_eq!(p("x+1").pow(2), p("x^2+2*x+1"));
        assert_eq!(&p("x^2+y") + &-p("y"), p("x^2"));
        assert_eq!(p("x").pow(0), BiPoly::one());
        assert_eq!(
            p("3*x*y").scale(&Rational::new(1.into(), 3.into())),
            p("x*y")
        );
    }

    #[test]
    fn degree_of_product_adds() {
        let a = p("x^3+y-1");
        let b = p("x*y^2+7");
        assert_eq!((&a * &b).total_degree(), Some(6));
        assert_eq!(BiPoly::zero().total_degree(), None);
    }

    #[test]
    fn partials() {
        assert_eq!(p("x^2*y").partial(Var::X), p("2*x*y"));
        assert_eq!(p("x^3").partial(Var::Y), BiPoly::zero());
        assert_eq!(p("x^3+y^4").partial(Var::X), p("3*x^2"));
    }

    #[test]
    fn order_at_origin() {
        assert_eq!(p("x^2+y^3").order(), ExtNat::Finite(2));
        assert_eq!(p("5").order(), ExtNat::Finite(0));
        assert_eq!(p("x+x^2+y^2").order(), ExtNat::Finite(1));
        assert_eq!(BiPoly::zero().order(), ExtNat::Infinite);
    }

    #[test]
    fn lowest_forms() {
        let f = p("x^2+y^3").lowest_form().unwrap();
        assert_eq!((f.form(), f.degree()), (&p("x^2"), 2));
        let f = p("x*(y^3-x^2)").lowest_form().unwrap();
        assert_eq!((f.form(), f.degree()), (&p("-x^3"), 3));
        let f = p("x*y").lowest_form().unwrap();
        assert_eq!((f.form(), f.degree()), (&p("x*y"), 2));
        assert_eq!(
            BiPoly::zero().lowest_form().unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn exact_division() {
        let q = p("x^2-y^2").div_exact(&p("x-y")).unwrap();
        assert_eq!(q, p("x+y"));
        assert!(p("x^2+y").div_exact(&p("x")).is_none());
    }

    #[test]
    fn display_order_and_signs() {
        assert_eq!(p("y^2 + x^2 + x").to_string(), "x+x^2+y^2");
        assert_eq!(p("x*(y^3-x^2)").to_string(), "-x^3+x*y^3");
        assert_eq!(p("-3/2*y^5 + x^2*y + x").to_string(), "x+x^2*y-3/2*y^5");
        assert_eq!(p("-1/2").to_string(), "-1/2");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_integer_scaling() {
        assert_eq!(p("-1/2*x + 3/4*y").primitive_integer(), p("2*x-3*y"));
    }

    #[test]
    fn linear_substitution() {
        let f = p("x^2 - y");
        let g = f.substitute_linear(&rat(1), &rat(1), &rat(0), &rat(1));
        assert_eq!(g, p("x^2+2*x*y+y^2-y"));
    }
}
