use super::{gcd_bivariate, BiPoly, Var};
use crate::error::{Error, Result};

/// A nonzero homogeneous polynomial together with its degree.
///
/// Its linear factors over the complex numbers are lines through the origin;
/// for the lowest form of a curve they are the tangent lines at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    form: BiPoly,
    degree: u32,
}

impl BinaryForm {
    pub fn new(form: BiPoly) -> Result<Self> {
        let degree = form.total_degree().ok_or(Error::ZeroPolynomial)?;
        if !form.is_homogeneous() {
            return Err(Error::Precondition(format!("{form} is not homogeneous")));
        }
        Ok(BinaryForm { form, degree })
    }

    pub(crate) fn new_unchecked(form: BiPoly, degree: u32) -> Self {
        debug_assert!(!form.is_zero() && form.is_homogeneous());
        BinaryForm { form, degree }
    }

    pub fn form(&self) -> &BiPoly {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn into_poly(self) -> BiPoly {
        self.form
    }

    /// Product of the distinct linear factors, as `F / gcd(F, F_x, F_y)`.
    pub fn squarefree_part(&self) -> BinaryForm {
        let g = gcd_bivariate(&self.form, &self.form.partial(Var::X));
        let g = gcd_bivariate(&g, &self.form.partial(Var::Y));
        let sf = self.form.div_exact(&g).expect("gcd divides its argument");
        let degree = sf.total_degree().expect("nonzero quotient");
        BinaryForm { form: sf, degree }
    }

    /// Number of distinct lines (over the complex numbers) in the form.
    pub fn distinct_lines(&self) -> u32 {
        self.squarefree_part().degree
    }
}

/// Squarefree part of a binary form.
pub fn squarefree_part_binary(f: &BinaryForm) -> BinaryForm {
    f.squarefree_part()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn form(s: &str) -> BinaryForm {
        BinaryForm::new(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn squarefree_examples() {
        let sf = form("x^2*y").squarefree_part();
        assert_eq!(sf.degree(), 2);
        assert_eq!(sf.form().monic(), parse_poly("x*y").unwrap());

        let sf = form("(x+y)^3").squarefree_part();
        assert_eq!(sf.degree(), 1);
        assert_eq!(sf.form().monic(), parse_poly("x+y").unwrap());

        let sf = form("x^2+y^2").squarefree_part();
        assert_eq!(sf.degree(), 2);
    }

    #[test]
    fn rejects_bad_forms() {
        assert_eq!(
            BinaryForm::new(BiPoly::zero()).unwrap_err(),
            Error::ZeroPolynomial
        );
        assert!(BinaryForm::new(parse_poly("x+y^2").unwrap()).is_err());
    }

    #[test]
    fn irreducible_quadratic_factor_repeated() {
        // (x^2+y^2)^2 * x has 3 distinct complex lines
        assert_eq!(form("(x^2+y^2)^2*x").distinct_lines(), 3);
    }
}
