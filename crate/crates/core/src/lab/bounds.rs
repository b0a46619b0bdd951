use num_integer::Integer;
use serde::Serialize;

/// Upper bounds for the Milnor number of a degree-`d` curve at the origin.
///
/// Every entry is the exact integer value of its formula. Whether a bound
/// applies to a given curve is decided by the caller (see `Applicability` in
/// the analysis report).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    /// `(d-1)^2`.
    pub bezout: u64,
    /// `(d-1)^2 - floor(d/2)`, for non-homogeneous curves.
    pub thm11: u64,
    /// `(d-1)^2 - d + m` with `m` components through 0, when `m` is known.
    pub lemma25: Option<u64>,
    /// `(d-1)^2 - q(q-1)` with `q = floor(d/2)`, for curves of order 2.
    pub gz: u64,
    /// `(d-1)^2 - (d/d1 - 1)(d - ord)` with `d1 = gcd(ord, d)`, for unibranch
    /// curves whose tangent meets them with multiplicity `d`.
    pub am: u64,
}

impl BoundSet {
    /// `degree >= 1`, `1 <= order <= degree`.
    pub fn new(degree: u32, order: u32, components: Option<u32>) -> Self {
        let d = u64::from(degree);
        let ord = u64::from(order);
        let sq = (d - 1) * (d - 1);
        let q = d / 2;
        let d1 = ord.gcd(&d);
        BoundSet {
            bezout: sq,
            thm11: sq - q,
            lemma25: components.map(|m| sq + u64::from(m) - d),
            gz: sq - q * q.saturating_sub(1),
            am: sq - (d / d1 - 1) * (d - ord),
        }
    }
}

/// `(d-1)^2 - floor(d/2)`.
pub fn thm11_bound(d: u32) -> u64 {
    let d = u64::from(d);
    (d - 1) * (d - 1) - d / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        let b = BoundSet::new(4, 3, Some(2));
        assert_eq!((b.bezout, b.thm11, b.lemma25, b.gz), (9, 7, Some(7), 7));
        // x^3 + y^4: d1 = gcd(3, 4) = 1, 9 - 3 * 1
        assert_eq!(b.am, 6);
        let b = BoundSet::new(5, 3, Some(3));
        assert_eq!((b.thm11, b.lemma25), (14, Some(14)));
        let b = BoundSet::new(6, 2, None);
        // q = 3: 25 - 6
        assert_eq!((b.gz, b.am), (19, 25 - 2 * 4));
        assert_eq!(BoundSet::new(2, 1, Some(1)).thm11, 0);
        assert_eq!(thm11_bound(12), 121 - 6);
    }
}
