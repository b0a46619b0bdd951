//! Brute-force local quotient dimensions by exact row reduction.
//!
//! `dim Q[x,y] / ((f, g) + m^N)` is computed on the space of polynomials of
//! total degree `< N`. This is a test fixture that shares nothing with the
//! reduction in [`crate::local`] except polynomial arithmetic and the gcd used
//! to flag common components.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use crate::poly::{gcd_bivariate, BiPoly, Rational, Var};

/// Truncation degree `N >= 1`: monomials of total degree `< N` are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TruncationLevel(usize);

impl TruncationLevel {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("truncation level must be >= 1".into()));
        }
        Ok(TruncationLevel(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Column of `x^i y^j` in the basis ordered by total degree, then by
/// decreasing power of `x`.
fn column(i: u32, j: u32) -> usize {
    let k = (i + j) as usize;
    k * (k + 1) / 2 + (k - i as usize)
}

type Row = BTreeMap<usize, Rational>;

/// Incremental row echelon form. Each stored row has leading (largest) column
/// equal to its pivot with coefficient 1.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    fn reduce(&self, mut row: Row) -> Row {
        let mut cursor = usize::MAX;
        loop {
            let Some((&col, coeff)) = row.range(..cursor).next_back() else {
                return row;
            };
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let c = coeff.clone();
                    for (k, v) in pivot {
                        let entry = row.entry(*k).or_insert_with(Rational::zero);
                        *entry -= &c * v;
                        if entry.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => cursor = col,
            }
        }
    }

    /// Adds a row; returns whether the rank grew.
    fn insert(&mut self, row: Row) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lc)) = row.iter().next_back() else {
            return false;
        };
        let inv = lc.recip();
        let row: Row = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        debug_assert!(row[&lead].is_one());
        self.pivots.insert(lead, row);
        true
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn truncated_multiples(p: &BiPoly, n: usize, rows: &mut Vec<Row>) {
    let Some(ord) = p.order().finite() else {
        return;
    };
    let ord = ord as usize;
    if ord >= n {
        return;
    }
    for k in 0..n - ord {
        for a in 0..=k as u32 {
            let b = k as u32 - a;
            let row: Row = p
                .terms()
                .filter(|(m, _)| ((m.x + m.y + a + b) as usize) < n)
                .map(|(m, c)| (column(m.x + a, m.y + b), c.clone()))
                .collect();
            rows.push(row);
        }
    }
}

/// `dim Q[x,y] / ((f, g) + m^N)`.
pub fn truncated_quotient_dimension(f: &BiPoly, g: &BiPoly, level: TruncationLevel) -> usize {
    let n = level.get();
    let total = n * (n + 1) / 2;
    let mut rows = Vec::new();
    truncated_multiples(f, n, &mut rows);
    truncated_multiples(g, n, &mut rows);
    let mut ech = Echelon::default();
    for row in rows {
        ech.insert(row);
    }
    total - ech.rank()
}

/// Exact `dim O / (f, g)` at the origin, by truncations at `N = 4, 8, 16, ...`
/// until the truncated dimension is certified stable.
///
/// Since the local value is at most
/// `deg f * deg g`, stabilization happens before `N = 4 deg f deg g + 4`; going
/// past that cap is reported as [`Error::OracleCap`].
pub fn local_quotient_dimension(f: &BiPoly, g: &BiPoly) -> Result<ExtNat> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if gcd_bivariate(f, g).vanishes_at_origin() {
        return Ok(ExtNat::Infinite);
    }
    let df = f.total_degree().unwrap_or(0) as usize;
    let dg = g.total_degree().unwrap_or(0) as usize;
    let cap = 4 * df * dg + 4;

    // a_N = dim at level N. If a_N = a_{N+1} then m^N lies in (f, g) + m^{N+1},
    // hence in (f, g) by Nakayama, and the sequence is constant from N on.
    // Before that it increases strictly from a_1 <= 1, so a_N < N also
    // certifies stabilization.
    let mut n = 4;
    loop {
        let a = truncated_quotient_dimension(f, g, TruncationLevel(n));
        if a < n || a == truncated_quotient_dimension(f, g, TruncationLevel(n + 1)) {
            return Ok(ExtNat::Finite(a as u64));
        }
        if n >= cap {
            break;
        }
        n = (2 * n).min(cap);
    }
    Err(Error::OracleCap { cap })
}

/// Milnor number through [`local_quotient_dimension`] of the partials.
pub fn milnor_oracle(f: &BiPoly) -> Result<ExtNat> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.vanishes_at_origin() {
        return Ok(ExtNat::ZERO);
    }
    let fx = f.partial(Var::X);
    let fy = f.partial(Var::Y);
    match (fx.is_zero(), fy.is_zero()) {
        (false, false) => local_quotient_dimension(&fx, &fy),
        (true, true) => Ok(ExtNat::Infinite),
        _ => {
            let other = if fx.is_zero() { &fy } else { &fx };
            Ok(if other.vanishes_at_origin() {
                ExtNat::Infinite
            } else {
                ExtNat::ZERO
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn level(n: usize) -> TruncationLevel {
        TruncationLevel::new(n).unwrap()
    }

    #[test]
    fn column_order() {
        assert_eq!(column(0, 0), 0);
        assert_eq!(column(1, 0), 1);
        assert_eq!(column(0, 1), 2);
        assert_eq!(column(2, 0), 3);
        assert_eq!(column(1, 1), 4);
        assert_eq!(column(0, 2), 5);
    }

    #[test]
    fn truncated_examples() {
        assert_eq!(
            truncated_quotient_dimension(&p("2*x"), &p("2*y"), level(3)),
            1
        );
        assert_eq!(
            truncated_quotient_dimension(&p("-3*x^2"), &p("2*y"), level(4)),
            2
        );
        assert_eq!(
            truncated_quotient_dimension(&p("3*x^2"), &p("3*y^2"), level(5)),
            4
        );
        assert!(TruncationLevel::new(0).is_err());
    }

    #[test]
    fn truncations_grow_then_stabilize() {
        let (f, g) = (p("-3*x^2"), p("2*y"));
        let dims: Vec<_> = (1..8)
            .map(|n| truncated_quotient_dimension(&f, &g, level(n)))
            .collect();
        assert_eq!(dims, vec![1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn local_examples() {
        assert_eq!(
            local_quotient_dimension(&p("x"), &p("y")).unwrap(),
            1.into()
        );
        assert_eq!(
            local_quotient_dimension(&p("-3*x^2"), &p("2*y")).unwrap(),
            2.into()
        );
        assert_eq!(
            local_quotient_dimension(&p("x*y"), &p("x")).unwrap(),
            ExtNat::Infinite
        );
        assert_eq!(
            local_quotient_dimension(&p("x+1"), &p("y")).unwrap(),
            0.into()
        );
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor_oracle(&p("x*(y^3-x^2)")).unwrap(), 7.into());
        assert_eq!(milnor_oracle(&p("x^2+y^2")).unwrap(), 1.into());
        assert_eq!(milnor_oracle(&p("x^3+y^4")).unwrap(), 6.into());
        assert_eq!(milnor_oracle(&p("y^2-x^3")).unwrap(), 2.into());
        assert_eq!(milnor_oracle(&p("7")), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn echelon_spans_its_input() {
        let f = p("x^2+3*x*y-y^3");
        let g = p("2*y+x^2*y");
        let mut rows = Vec::new();
        truncated_multiples(&f, 6, &mut rows);
        truncated_multiples(&g, 6, &mut rows);
        let mut ech = Echelon::default();
        for r in &rows {
            ech.insert(r.clone());
        }
        for r in rows {
            assert!(ech.reduce(r).is_empty());
        }
    }
}
