use super::curve::FactoredCurve;
use crate::error::{Error, Result};
use crate::poly::{rat, BiPoly};

fn check_degree(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::Precondition(format!("degree {d} < 2")));
    }
    Ok(())
}

/// Conics `x + i x^2 + y^2` for `i = 1..=d/2`, preceded by the line `x` when
/// `d` is odd. All components share the tangent `x = 0` and the product has
/// the largest Milnor number a non-homogeneous degree-`d` curve can reach.
pub fn gen_extremal(d: u32) -> Result<FactoredCurve> {
    check_degree(d)?;
    let mut factors = Vec::new();
    if d % 2 == 1 {
        factors.push(BiPoly::x());
    }
    for i in 1..=i64::from(d / 2) {
        factors.push(BiPoly::from_int_terms(&[(1, 0, 1), (2, 0, i), (0, 2, 1)]));
    }
    FactoredCurve::new(factors)
}

/// `x^(d-1) + y^d`, irreducible with Milnor number `(d-1)(d-2)`.
pub fn gen_irreducible_max(d: u32) -> Result<BiPoly> {
    check_degree(d)?;
    Ok(BiPoly::monomial(d - 1, 0, rat(1)) + BiPoly::monomial(0, d, rat(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::milnor_number;
    use crate::ExtNat;

    #[test]
    fn extremal_small() {
        let s = |d| {
            gen_extremal(d)
                .unwrap()
                .factors()
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(s(2), ["x+x^2+y^2"]);
        assert_eq!(s(4), ["x+x^2+y^2", "x+2*x^2+y^2"]);
        assert_eq!(s(5), ["x", "x+x^2+y^2", "x+2*x^2+y^2"]);
        assert_eq!(gen_extremal(7).unwrap().degree(), 7);
        assert!(gen_extremal(1).is_err());
    }

    #[test]
    fn extremal_milnor() {
        for (d, mu) in [(2, 0), (4, 7), (5, 14)] {
            let f = gen_extremal(d).unwrap().product();
            assert_eq!(milnor_number(&f).unwrap(), ExtNat::Finite(mu));
        }
    }

    #[test]
    fn irreducible_max() {
        assert_eq!(gen_irreducible_max(5).unwrap().to_string(), "x^4+y^5");
        assert_eq!(gen_irreducible_max(2).unwrap().to_string(), "x+y^2");
        let f = gen_irreducible_max(4).unwrap();
        assert_eq!(milnor_number(&f).unwrap(), ExtNat::Finite(6));
        assert!(gen_irreducible_max(0).is_err());
    }
}
