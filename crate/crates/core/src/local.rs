//! Local invariants at the origin.

use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{gcd_bivariate, BiPoly, BinaryForm, Monomial, Var};

/// Intersection multiplicity `i_0(f, g)`: the dimension of the local ring at
/// the origin modulo `(f, g)`.
///
/// The value comes from Fulton's reduction on the restrictions to `y = 0`:
///
/// 1. if either curve misses the origin the contribution is 0;
/// 2. order the pair so `deg f(x,0) <= deg g(x,0)` (zero counts as lowest);
/// 3. if `f(x,0) = 0` then `f = y h`, add `ord_0 g(x,0)` for the line `y` and
///    continue with `(h, g)`;
/// 4. otherwise cancel the top coefficient of `g(x,0)` with a multiple of
///    `x^k f` and repeat.
///
/// A finite value never exceeds `deg f * deg g`, so a run that cannot finish
/// within that budget means a common component through the origin.
pub fn intersection_multiplicity(f: &BiPoly, g: &BiPoly) -> Result<ExtNat> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
        return Ok(ExtNat::ZERO);
    }
    let bezout =
        u64::from(f.total_degree().unwrap_or(0)) * u64::from(g.total_degree().unwrap_or(0));
    let lower = (f.order() * g.order()).finite().unwrap_or(0);
    let (fi, gi) = (IntPoly::from_poly(f), IntPoly::from_poly(g));
    let mut budget = (2 * lower).max(8).min(bezout);
    loop {
        if let Some(v) = fulton_reduction(fi.clone(), gi.clone(), budget) {
            return Ok(ExtNat::Finite(v));
        }
        if budget >= bezout {
            return Ok(ExtNat::Infinite);
        }
        budget = (2 * budget).min(bezout);
    }
}

/// Primitive integer polynomial used inside the reduction loop, where
/// rational normalization on every coefficient operation would dominate.
#[derive(Debug, Clone)]
struct IntPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    fn from_poly(p: &BiPoly) -> Self {
        let p = p.primitive_integer();
        IntPoly {
            terms: p.terms().map(|(m, c)| (m, c.to_integer())).collect(),
        }
    }

    fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&Monomial::ONE)
    }

    fn truncate_above(&mut self, k: u32) {
        self.terms.retain(|m, _| m.degree() <= k);
    }

    /// `(order, degree, leading coefficient)` of the restriction `p(x, 0)`.
    fn restriction(&self) -> Option<(u32, u32, &BigInt)> {
        let mut on_axis = self.terms.iter().filter(|(m, _)| m.y == 0);
        let (lo, lc) = on_axis.next()?;
        let (hi, c) = on_axis.next_back().unwrap_or((lo, lc));
        Some((lo.x, hi.x, c))
    }

    fn div_y(&self) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x, m.y - 1), c.clone()))
                .collect(),
        }
    }

    /// `a * self - b * x^k * other`, made primitive.
    fn eliminate(&self, a: &BigInt, b: &BigInt, k: u32, other: &IntPoly) -> IntPoly {
        let mut terms: BTreeMap<Monomial, BigInt> =
            self.terms.iter().map(|(m, c)| (*m, c * a)).collect();
        for (m, c) in &other.terms {
            let key = Monomial::new(m.x + k, m.y);
            let entry = terms.entry(key).or_insert_with(BigInt::zero);
            *entry -= c * b;
            if entry.is_zero() {
                terms.remove(&key);
            }
        }
        let content = terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for c in terms.values_mut() {
                *c /= &content;
            }
        }
        IntPoly { terms }
    }
}

/// Fulton's reduction with every polynomial truncated above a shrinking degree
/// budget.
///
/// If a pair has `i_0 = k` then `m^k` lies in its local ideal, and perturbing
/// the generators by terms in `m^(k+1)` gives the same ideal (Nakayama). Going
/// backwards through the run, each truncation above `bound - total` therefore
/// preserved the ideal whenever the final answer is at most `bound`. A run that
/// would exceed `bound` is abandoned with `None` and the caller retries with a
/// larger one. Conversely, when the true answer is at most `bound` every
/// truncation preserves the ideal going forwards, so the run cannot stall on a
/// common factor `y`; with `bound` at the Bezout number, `None` therefore means
/// the answer is infinite.
fn fulton_reduction(mut f: IntPoly, mut g: IntPoly, bound: u64) -> Option<u64> {
    let mut total = 0u64;
    loop {
        if total > bound {
            return None;
        }
        let budget = (bound - total) as u32;
        f.truncate_above(budget);
        g.truncate_above(budget);
        if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
            return Some(total);
        }
        let deg = |p: &IntPoly| p.restriction().map(|(_, d, _)| d);
        if deg(&f) > deg(&g) {
            std::mem::swap(&mut f, &mut g);
        }
        match (f.restriction(), g.restriction()) {
            // Only reachable after a truncation below the true answer.
            (None, None) => return None,
            (None, Some((ord, _, _))) => {
                total += u64::from(ord);
                f = f.div_y();
            }
            (Some((_, r, a)), Some((_, s, b))) => {
                g = g.eliminate(a, b, s - r, &f);
            }
            (Some(_), None) => unreachable!("ordered by restriction degree"),
        }
    }
}

/// Dimension of the local quotient by `(p, q)`, allowing a zero generator.
fn quotient_dimension(p: &BiPoly, q: &BiPoly) -> Result<ExtNat> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Ok(ExtNat::Infinite),
        (true, false) | (false, true) => {
            let other = if p.is_zero() { q } else { p };
            Ok(if other.vanishes_at_origin() {
                ExtNat::Infinite
            } else {
                ExtNat::ZERO
            })
        }
        (false, false) => intersection_multiplicity(p, q),
    }
}

/// Milnor number `mu_0(f) = i_0(f_x, f_y)`.
///
/// By convention a curve not passing through the origin has Milnor number 0 there.
pub fn milnor_number(f: &BiPoly) -> Result<ExtNat> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.vanishes_at_origin() {
        return Ok(ExtNat::ZERO);
    }
    quotient_dimension(&f.partial(Var::X), &f.partial(Var::Y))
}

/// Tangent cone data of a curve at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentData {
    pub cone: BinaryForm,
    /// Number of distinct tangent lines over the complex numbers.
    pub distinct_count: u32,
    pub order: u32,
}

pub fn tangent_data(f: &BiPoly) -> Result<TangentData> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.vanishes_at_origin() {
        return Err(Error::NotThroughOrigin);
    }
    let cone = f.lowest_form()?;
    Ok(TangentData {
        distinct_count: cone.distinct_lines(),
        order: cone.degree(),
        cone,
    })
}

fn curve_through_origin(f: &BiPoly) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if !f.vanishes_at_origin() {
        Err(Error::NotThroughOrigin)
    } else {
        Ok(())
    }
}

/// Whether the tangent cones of `f` and `g` share a line.
pub fn shares_common_tangent(f: &BiPoly, g: &BiPoly) -> Result<bool> {
    curve_through_origin(f)?;
    curve_through_origin(g)?;
    let cf = f.lowest_form()?;
    let cg = g.lowest_form()?;
    Ok(!gcd_bivariate(cf.form(), cg.form()).is_constant())
}

pub fn is_transverse(f: &BiPoly, g: &BiPoly) -> Result<bool> {
    shares_common_tangent(f, g).map(|shared| !shared)
}

/// Whether the line `l` is tangent to `f = 0` at the origin, i.e.
/// `i_0(f, l) > ord_0 f`. A line that is a component of the curve has
/// `i_0 = inf` and therefore counts as tangent.
pub fn is_tangent_line(f: &BiPoly, l: &BiPoly) -> Result<bool> {
    if l.total_degree() != Some(1) || !l.is_homogeneous() {
        return Err(Error::NotALine(l.to_string()));
    }
    curve_through_origin(f)?;
    Ok(intersection_multiplicity(f, l)? > f.order())
}
