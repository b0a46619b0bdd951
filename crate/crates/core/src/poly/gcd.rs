//! Bivariate gcd over the rationals.
//!
//! Polynomials are viewed in `Q[x][y]`. The content (a gcd in `Q[x]`) is split
//! off, and the primitive parts go through a subresultant remainder sequence in
//! `y`, whose exact divisions keep the `Q[x]` coefficients from blowing up.

use super::{BiPoly, Monomial, UniPoly};

/// Coefficients in `Q[x]` indexed by the power of `y`; no trailing zeros.
type YPoly = Vec<UniPoly>;

fn to_ypoly(p: &BiPoly) -> YPoly {
    let mut out: YPoly = Vec::new();
    let mut cols: Vec<Vec<(usize, super::Rational)>> = Vec::new();
    for (m, c) in p.terms() {
        let j = m.y as usize;
        if cols.len() <= j {
            cols.resize(j + 1, Vec::new());
        }
        cols[j].push((m.x as usize, c.clone()));
    }
    for col in cols {
        let n = col.iter().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut v = vec![super::Rational::default(); n];
        for (i, c) in col {
            v[i] = c;
        }
        out.push(UniPoly::new(v));
    }
    trim(out)
}

fn from_ypoly(p: &[UniPoly]) -> BiPoly {
    let mut out = BiPoly::zero();
    for (j, c) in p.iter().enumerate() {
        for (i, a) in c.coeffs().iter().enumerate() {
            out.add_term(Monomial::new(i as u32, j as u32), a.clone());
        }
    }
    out
}

fn trim(mut p: YPoly) -> YPoly {
    while p.last().is_some_and(UniPoly::is_zero) {
        p.pop();
    }
    p
}

fn ydeg(p: &[UniPoly]) -> usize {
    p.len() - 1
}

fn content(p: &[UniPoly]) -> UniPoly {
    p.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
}

fn div_coeffs(p: &[UniPoly], d: &UniPoly) -> YPoly {
    p.iter()
        .map(|c| c.div_exact(d).expect("inexact division by content"))
        .collect()
}

fn mul_coeffs(p: &[UniPoly], c: &UniPoly) -> YPoly {
    trim(p.iter().map(|a| a * c).collect())
}

fn primitive_part(p: &[UniPoly]) -> YPoly {
    div_coeffs(p, &content(p))
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` in `Q[x][y]`.
fn prem(a: &[UniPoly], b: &[UniPoly]) -> YPoly {
    let db = ydeg(b);
    let lcb = &b[db];
    let mut r: YPoly = a.to_vec();
    let mut e = ydeg(a) + 1 - db;
    while !r.is_empty() && ydeg(&r) >= db {
        let dr = ydeg(&r);
        let lcr = r[dr].clone();
        let mut next = mul_coeffs(&r, lcb);
        next.resize(dr + 1, UniPoly::zero());
        for (i, bc) in b.iter().enumerate() {
            let t = &lcr * bc;
            next[i + dr - db] = &next[i + dr - db] - &t;
        }
        r = trim(next);
        e -= 1;
    }
    let f = lcb.pow(e as u32);
    mul_coeffs(&r, &f)
}

/// Greatest common divisor of two bivariate polynomials.
///
/// The result is normalized to leading coefficient 1 under graded-lex order
/// (`x > y`). `gcd(0, 0) = 0`.
pub fn gcd_bivariate(p: &BiPoly, q: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    let mut a = to_ypoly(p);
    let mut b = to_ypoly(q);
    if ydeg(&b) > ydeg(&a) {
        std::mem::swap(&mut a, &mut b);
    }
    let d = content(&a).gcd(&content(&b));
    a = primitive_part(&a);
    b = primitive_part(&b);

    let mut g = UniPoly::one();
    let mut h = UniPoly::one();
    loop {
        let delta = ydeg(&a) - ydeg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if ydeg(&r) == 0 {
            b = vec![UniPoly::one()];
            break;
        }
        let divisor = &g * &h.pow(delta as u32);
        a = b;
        b = div_coeffs(&r, &divisor);
        g = a[ydeg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta as u32)
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant division")
        };
    }
    let b = primitive_part(&b);
    from_ypoly(&mul_coeffs(&b, &d)).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn known_gcds() {
        assert_eq!(gcd_bivariate(&p("x^2-y^2"), &p("x-y")), p("x-y"));
        assert_eq!(gcd_bivariate(&p("x"), &p("y")), BiPoly::one());
        assert_eq!(gcd_bivariate(&p("x*(y^3-x^2)"), &p("x")), p("x"));
    }

    #[test]
    fn normalization_is_graded_lex_monic() {
        // leading term of 2y - 4x^2 is x^2
        assert_eq!(gcd_bivariate(&p("2*y-4*x^2"), &p("0")), p("x^2-1/2*y"));
        assert_eq!(gcd_bivariate(&p("3*y"), &p("6*x*y")), p("y"));
    }

    #[test]
    fn mixed_content_and_primitive_factors() {
        let h = p("(x+1)*(y^2-x)");
        let a = &h * &p("x*y+3");
        let b = &h * &p("y^3-2*x");
        assert_eq!(gcd_bivariate(&a, &b), h.monic());
    }

    #[test]
    fn constants_and_pure_x() {
        assert_eq!(gcd_bivariate(&p("5"), &p("x+y")), BiPoly::one());
        assert_eq!(gcd_bivariate(&p("x^2-1"), &p("(x-1)*y")), p("x-1"));
    }
}
