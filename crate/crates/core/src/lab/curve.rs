use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{gcd_bivariate, rat, BiPoly, Rational, UniPoly, Var};

/// How far a factor's irreducibility over the complex numbers is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IrreducibilityStatus {
    VerifiedLinear,
    /// Nondegenerate conic: its symmetric 3x3 coefficient matrix has rank 3.
    VerifiedConic,
    /// Cubic through the origin that is not homogeneous and has no rational
    /// linear factor.
    VerifiedCubic,
    /// Degree >= 4, or coefficients too large for the linear-factor search.
    Assumed,
    /// Shown to split over the complex numbers.
    Reducible,
}

impl IrreducibilityStatus {
    pub fn is_reducible(self) -> bool {
        self == IrreducibilityStatus::Reducible
    }
}

impl fmt::Display for IrreducibilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IrreducibilityStatus::VerifiedLinear => "verified_linear",
            IrreducibilityStatus::VerifiedConic => "verified_conic",
            IrreducibilityStatus::VerifiedCubic => "verified_cubic",
            IrreducibilityStatus::Assumed => "assumed",
            IrreducibilityStatus::Reducible => "reducible",
        })
    }
}

/// Determinant of the symmetric matrix of a conic
/// `a x^2 + b xy + c y^2 + d x + e y + f`.
pub fn conic_determinant(p: &BiPoly) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    let a = p.coeff(2, 0);
    let b = p.coeff(1, 1) * &half;
    let c = p.coeff(0, 2);
    let d = p.coeff(1, 0) * &half;
    let e = p.coeff(0, 1) * &half;
    let f = p.coeff(0, 0);
    &a * (&c * &f - &e * &e) - &b * (&b * &f - &e * &d) + &d * (&b * &e - &c * &d)
}

/// A rational linear factor of `p` (possibly not through the origin).
///
/// Candidate directions are the rational linear factors of the top-degree form;
/// for each, the offset is a common rational root of the coefficients of `p`
/// restricted to the moving line. `None` if the root search gives up on large
/// coefficients; `Some(None)` if there is no such factor.
pub fn rational_linear_factor(p: &BiPoly) -> Option<Option<BiPoly>> {
    let d = p.total_degree()?;
    if d == 0 {
        return Some(None);
    }
    let top = p.homogeneous_part(d);
    let dehom = UniPoly::new((0..=d).map(|i| top.coeff(i, d - i)).collect());
    let mut directions: Vec<(Rational, Rational)> = dehom
        .rational_roots()?
        .into_iter()
        .map(|t| (rat(1), -t))
        .collect();
    if top.coeff(d, 0).is_zero() {
        directions.push((rat(0), rat(1)));
    }
    for (alpha, beta) in directions {
        // New variables (s, g): points of the line alpha x + beta y + g = 0.
        let on_line = if !beta.is_zero() {
            p.substitute_linear(&rat(1), &rat(0), &(-&alpha / &beta), &(-beta.recip()))
        } else {
            p.substitute_linear(&rat(0), &(-alpha.recip()), &rat(1), &rat(0))
        };
        let max_s = on_line.degree_in(Var::X).unwrap_or(0);
        let offset_poly = (0..=max_s).fold(UniPoly::zero(), |acc, i| {
            let coeff = UniPoly::new(
                (0..=on_line.degree_in(Var::Y).unwrap_or(0))
                    .map(|j| on_line.coeff(i, j))
                    .collect(),
            );
            acc.gcd(&coeff)
        });
        if offset_poly.is_zero() {
            continue;
        }
        for gamma in offset_poly.rational_roots()? {
            let line =
                BiPoly::from_terms([(1, 0, alpha.clone()), (0, 1, beta.clone()), (0, 0, gamma)]);
            if line.divides(p) {
                return Some(Some(line));
            }
        }
    }
    Some(None)
}

/// Decides absolute irreducibility where it can be done exactly.
pub fn irreducibility_status(p: &BiPoly) -> IrreducibilityStatus {
    use IrreducibilityStatus::*;
    match p.total_degree() {
        None | Some(0) => Reducible,
        Some(1) => VerifiedLinear,
        Some(2) => {
            if conic_determinant(p).is_zero() {
                Reducible
            } else {
                VerifiedConic
            }
        }
        Some(d) => {
            if p.is_homogeneous() {
                return Reducible;
            }
            match rational_linear_factor(p) {
                Some(Some(_)) => Reducible,
                // A cubic through 0 that splits over C but not over Q is three
                // conjugate lines through 0, hence homogeneous.
                Some(None) if d == 3 && p.vanishes_at_origin() => VerifiedCubic,
                _ => Assumed,
            }
        }
    }
}

/// The components `f_1, ..., f_m` through the origin of a curve
/// `f = f_1 ... f_m`.
///
/// Factors are nonconstant, vanish at 0, are squarefree and pairwise coprime,
/// so the product has an isolated singularity (or a smooth point) at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredCurve {
    factors: Vec<BiPoly>,
    degrees: Vec<u32>,
    status: Vec<IrreducibilityStatus>,
}

impl FactoredCurve {
    pub fn new(factors: Vec<BiPoly>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::NoFactors);
        }
        for (index, f) in factors.iter().enumerate() {
            if f.is_constant() {
                return Err(Error::ConstantFactor { index });
            }
            if !f.vanishes_at_origin() {
                return Err(Error::FactorNotThroughOrigin { index });
            }
            let g = gcd_bivariate(&gcd_bivariate(f, &f.partial(Var::X)), &f.partial(Var::Y));
            if !g.is_constant() {
                return Err(Error::RepeatedComponent { index });
            }
        }
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                if !gcd_bivariate(&factors[i], &factors[j]).is_constant() {
                    return Err(Error::CommonComponent { i, j });
                }
            }
        }
        let degrees = factors.iter().map(|f| f.total_degree().unwrap()).collect();
        let status = factors.iter().map(irreducibility_status).collect();
        Ok(FactoredCurve {
            factors,
            degrees,
            status,
        })
    }

    /// Drops factors that do not vanish at the origin (units of the local
    /// ring, which change no invariant there) and builds the curve.
    pub fn from_factors_stripping_units(factors: Vec<BiPoly>) -> Result<Self> {
        FactoredCurve::new(
            factors
                .into_iter()
                .filter(|f| f.vanishes_at_origin() || f.is_zero())
                .collect(),
        )
    }

    pub fn factors(&self) -> &[BiPoly] {
        &self.factors
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn statuses(&self) -> &[IrreducibilityStatus] {
        &self.status
    }

    /// Number of components, `m`.
    pub fn count(&self) -> usize {
        self.factors.len()
    }

    /// Total degree `d = d_1 + ... + d_m`.
    pub fn degree(&self) -> u32 {
        self.degrees.iter().sum()
    }

    pub fn product(&self) -> BiPoly {
        self.factors.iter().product()
    }

    pub fn any_reducible(&self) -> bool {
        self.status.iter().any(|s| s.is_reducible())
    }
}

impl fmt::Display for FactoredCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use IrreducibilityStatus::*;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn curve(fs: &[&str]) -> Result<FactoredCurve> {
        FactoredCurve::new(fs.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn statuses() {
        assert_eq!(irreducibility_status(&p("x+y")), VerifiedLinear);
        assert_eq!(irreducibility_status(&p("x+x^2+y^2")), VerifiedConic);
        assert_eq!(irreducibility_status(&p("x^2+y^2")), Reducible);
        assert_eq!(irreducibility_status(&p("x*(x+y+1)")), Reducible);
        assert_eq!(irreducibility_status(&p("y^3-x^2")), VerifiedCubic);
        assert_eq!(irreducibility_status(&p("x^3+y^3")), Reducible);
        assert_eq!(irreducibility_status(&p("x*(y^2-x)")), Reducible);
        assert_eq!(irreducibility_status(&p("(x+y-2)*(x^2+y)")), Reducible);
        assert_eq!(
            irreducibility_status(&p("(2*x-3*y+1/2)*(x^2+y^2+y)")),
            Reducible
        );
        assert_eq!(irreducibility_status(&p("x^3+y^4")), Assumed);
        assert_eq!(irreducibility_status(&p("x^3*y+x*y^3+y^4+x^5")), Assumed);
    }

    #[test]
    fn finds_offset_lines() {
        let f = p("(x+2*y-3)*(x^2+y)");
        let l = rational_linear_factor(&f).unwrap().unwrap();
        assert_eq!(l.monic(), p("x+2*y-3"));
        assert_eq!(rational_linear_factor(&p("y^3-x^2")), Some(None));
    }

    #[test]
    fn construction_checks() {
        assert_eq!(curve(&[]), Err(Error::NoFactors));
        assert_eq!(curve(&["x", "2"]), Err(Error::ConstantFactor { index: 1 }));
        assert_eq!(
            curve(&["x", "y+1"]),
            Err(Error::FactorNotThroughOrigin { index: 1 })
        );
        assert_eq!(
            curve(&["x", "x*(y+1)"]),
            Err(Error::CommonComponent { i: 0, j: 1 })
        );
        assert_eq!(
            curve(&["x^2*y"]),
            Err(Error::RepeatedComponent { index: 0 })
        );
        let c = curve(&["x", "x+x^2+y^2", "x+2*x^2+y^2"]).unwrap();
        assert_eq!((c.count(), c.degree()), (3, 5));
        assert_eq!(
            c.statuses(),
            &[VerifiedLinear, VerifiedConic, VerifiedConic]
        );
        assert_eq!(c.product(), p("x*(x+x^2+y^2)*(x+2*x^2+y^2)"));
    }

    #[test]
    fn strips_units() {
        let c =
            FactoredCurve::from_factors_stripping_units(vec![p("x"), p("1+y"), p("3")]).unwrap();
        assert_eq!(c.factors(), &[p("x")]);
    }
}
