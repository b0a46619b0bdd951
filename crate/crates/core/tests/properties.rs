use milnor_core::{
    intersection_multiplicity, is_transverse, local_quotient_dimension, milnor_number,
    poly::gcd_bivariate, BiPoly, ExtNat, Rational,
};
use proptest::prelude::*;

fn poly(max_deg: u32, with_constant: bool) -> impl Strategy<Value = BiPoly> {
    let monomials: Vec<(u32, u32)> = (0..=max_deg)
        .flat_map(|k| (0..=k).map(move |i| (i, k - i)))
        .filter(|&(i, j)| with_constant || i + j > 0)
        .collect();
    let n = monomials.len();
    proptest::collection::vec(prop_oneof![Just(0i64), -6i64..=6], n).prop_map(move |cs| {
        let terms: Vec<(u32, u32, i64)> = monomials
            .iter()
            .zip(cs)
            .map(|(&(i, j), c)| (i, j, c))
            .collect();
        BiPoly::from_int_terms(&terms)
    })
}

/// Nonzero polynomial through the origin.
fn curve(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    poly(max_deg, false).prop_filter("nonzero", |p| !p.is_zero())
}

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn finite(v: ExtNat) -> Option<u64> {
    v.finite()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in poly(3, true), b in poly(3, true), c in poly(3, true)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_parses_back(a in poly(4, true)) {
        let back: BiPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn gcd_divides_both(a in curve(3), b in curve(3), c in curve(2)) {
        let (fa, fb) = (&a * &c, &b * &c);
        let g = gcd_bivariate(&fa, &fb);
        prop_assert!(g.divides(&fa) && g.divides(&fb));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn order_and_lowest_form_multiply(a in curve(3), b in curve(3)) {
        let ab = &a * &b;
        prop_assert_eq!(ab.order(), a.order() + b.order());
        let la = a.lowest_form().unwrap().into_poly();
        let lb = b.lowest_form().unwrap().into_poly();
        prop_assert_eq!(ab.lowest_form().unwrap().into_poly(), &la * &lb);
    }

    #[test]
    fn intersection_is_symmetric(f in curve(3), g in curve(3)) {
        prop_assert_eq!(
            intersection_multiplicity(&f, &g).unwrap(),
            intersection_multiplicity(&g, &f).unwrap()
        );
    }

    #[test]
    fn intersection_is_additive(f in curve(2), g in curve(2), h in curve(2)) {
        let whole = intersection_multiplicity(&f, &(&g * &h)).unwrap();
        let parts = intersection_multiplicity(&f, &g).unwrap()
            + intersection_multiplicity(&f, &h).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn intersection_lower_bound(f in curve(3), g in curve(3)) {
        let i0 = intersection_multiplicity(&f, &g).unwrap();
        let low = f.order() * g.order();
        prop_assert!(i0 >= low);
        if is_transverse(&f, &g).unwrap() {
            prop_assert_eq!(i0, low);
        } else {
            prop_assert!(i0 > low);
        }
    }

    #[test]
    fn reduction_matches_oracle(f in curve(3), g in curve(3)) {
        prop_assert_eq!(
            intersection_multiplicity(&f, &g).unwrap(),
            local_quotient_dimension(&f, &g).unwrap()
        );
    }

    #[test]
    fn invariants_survive_linear_changes(
        f in curve(3),
        g in curve(3),
        m in proptest::array::uniform4(-3i64..=3),
    ) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let [a, b, c, d] = m.map(r);
        let (f2, g2) = (f.substitute_linear(&a, &b, &c, &d), g.substitute_linear(&a, &b, &c, &d));
        prop_assert_eq!(f2.order(), f.order());
        prop_assert_eq!(milnor_number(&f2).unwrap(), milnor_number(&f).unwrap());
        prop_assert_eq!(
            intersection_multiplicity(&f2, &g2).unwrap(),
            intersection_multiplicity(&f, &g).unwrap()
        );
    }

    #[test]
    fn milnor_of_a_product_of_two(f in curve(3), g in curve(3)) {
        let fg = &f * &g;
        let parts = (
            finite(milnor_number(&fg).unwrap()),
            finite(milnor_number(&f).unwrap()),
            finite(milnor_number(&g).unwrap()),
            finite(intersection_multiplicity(&f, &g).unwrap()),
        );
        if let (Some(m), Some(mf), Some(mg), Some(i)) = parts {
            prop_assert_eq!(m + 1, mf + mg + 2 * i);
        } else {
            prop_assert!(parts.0.is_none());
        }
    }
}
