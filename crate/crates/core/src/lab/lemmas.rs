//! Checkers for the identities and inequalities satisfied by factored curves.
//!
//! Each checker recomputes the invariants exactly and compares; a failing check
//! on valid input means a bug in the invariant computations.

use serde::Serialize;

use super::bounds::thm11_bound;
use super::curve::{irreducibility_status, FactoredCurve, IrreducibilityStatus};
use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use crate::local::{
    intersection_multiplicity, is_tangent_line, is_transverse, milnor_number, tangent_data,
};
use crate::poly::{gcd_bivariate, BiPoly};

fn finite(v: ExtNat, what: impl FnOnce() -> String) -> Result<u64> {
    v.finite().ok_or_else(|| Error::NonIsolated(what()))
}

/// Exact invariants of a factored curve shared by all checkers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveInvariants {
    pub degree: u32,
    pub components: u32,
    pub milnor: u64,
    pub order: u32,
    pub factor_milnor: Vec<u64>,
    pub factor_orders: Vec<u32>,
    /// `i_0(f_i, f_j)` for `i < j`, row-major.
    pub pairwise: Vec<(usize, usize, u64)>,
}

impl CurveInvariants {
    pub fn compute(curve: &FactoredCurve) -> Result<Self> {
        let f = curve.factors();
        let product = curve.product();
        let milnor = finite(milnor_number(&product)?, || "product".into())?;
        let factor_milnor = f
            .iter()
            .enumerate()
            .map(|(i, p)| finite(milnor_number(p)?, || format!("factor {i}")))
            .collect::<Result<Vec<_>>>()?;
        let mut pairwise = Vec::new();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let v = intersection_multiplicity(&f[i], &f[j])?;
                pairwise.push((i, j, finite(v, || format!("factors {i}, {j}"))?));
            }
        }
        Ok(CurveInvariants {
            degree: curve.degree(),
            components: curve.count() as u32,
            milnor,
            order: product.order().finite().expect("nonzero") as u32,
            factor_milnor,
            factor_orders: f
                .iter()
                .map(|p| p.order().finite().unwrap() as u32)
                .collect(),
            pairwise,
        })
    }

    fn pair(&self, i: usize, j: usize) -> u64 {
        let (i, j) = (i.min(j), i.max(j));
        self.pairwise
            .iter()
            .find(|(a, b, _)| *a == i && *b == j)
            .map(|t| t.2)
            .expect("pair index in range")
    }
}

/// `mu(f) + m - 1 = sum mu(f_i) + 2 sum_{i<j} i_0(f_i, f_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma21Check {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

pub fn check_lemma21_identity(curve: &FactoredCurve) -> Result<Lemma21Check> {
    Ok(lemma21(&CurveInvariants::compute(curve)?))
}

fn lemma21(inv: &CurveInvariants) -> Lemma21Check {
    let lhs = inv.milnor + u64::from(inv.components) - 1;
    let rhs =
        inv.factor_milnor.iter().sum::<u64>() + 2 * inv.pairwise.iter().map(|t| t.2).sum::<u64>();
    Lemma21Check {
        lhs,
        rhs,
        holds: lhs == rhs,
    }
}

/// Tangent-count bound for components of degree > 1 sharing a tangent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma28Check {
    /// Degree > 1 components exist, share a common tangent and none is reducible.
    pub applicable: bool,
    pub tangent_count: u32,
    /// `sum (d_i - 1) - k + 1` over the `k` components of degree > 1.
    pub bound: i64,
    pub holds: Option<bool>,
}

/// Consequences that hold when `mu = (d-1)^2 - d + m` and `d > 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma42Check {
    pub applicable: bool,
    pub single_tangent_each: bool,
    pub full_contact_pairs: bool,
    /// Only meaningful when `m < d`.
    pub at_most_one_line: bool,
    pub no_conic_cubic_pair: bool,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm14Clauses {
    /// `m = d - floor(d/2)`.
    pub component_count: bool,
    /// All conics, plus one line when `d` is odd.
    pub degree_pattern: bool,
    pub conics_irreducible: bool,
    /// Every pair of conics meets with multiplicity 4.
    pub conic_contacts: bool,
    /// For odd `d`, the line is tangent to every conic.
    pub line_tangent: bool,
}

/// Both sides of the characterization of extremal curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm14Check {
    pub degree: u32,
    pub milnor: u64,
    pub target: u64,
    /// `mu_0(f) = (d-1)^2 - floor(d/2)`.
    pub i_holds: bool,
    /// Structural description of the components.
    pub ii_holds: bool,
    pub clauses: Thm14Clauses,
    pub equivalence_ok: bool,
    /// False for `d = 4`, where the equivalence is known to fail.
    pub equivalence_asserted: bool,
    /// `d = 4`, (i) holds and (ii) fails.
    pub d4_exception: bool,
}

impl Thm14Check {
    pub fn passes(&self) -> bool {
        self.equivalence_ok || !self.equivalence_asserted
    }
}

/// Structural inequalities for a factored curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub invariants: CurveInvariants,
    pub irreducibility: Vec<IrreducibilityStatus>,
    pub lemma21: Lemma21Check,
    /// Per factor: `mu(f_i) <= (d_i-1)(d_i-2)`, `None` for reducible factors.
    pub lemma22: Vec<Option<bool>>,
    /// Transverse pairs `(i, j)` with `d_i > 1` or `d_j > 1`.
    pub lambda: Vec<(usize, usize)>,
    pub lemma24_bound: i64,
    pub lemma24_holds: Option<bool>,
    pub lemma25_bound: i64,
    pub lemma25_holds: Option<bool>,
    /// Equality in the lemma25 bound iff every `mu(f_i) = (d_i-1)(d_i-2)` and
    /// every `i_0(f_i, f_j) = d_i d_j`.
    pub lemma25_equality_consistent: Option<bool>,
    /// `#{i : d_i > 1}`.
    pub lemma27_count: u32,
    pub lemma27_bound: i64,
    pub lemma27_holds: bool,
    pub lemma28: Lemma28Check,
    pub lemma42: Lemma42Check,
    /// Only for `d > 2`.
    pub thm14: Option<Thm14Check>,
}

impl LemmaReport {
    /// Every evaluated check holds.
    pub fn all_hold(&self) -> bool {
        let opt = |o: Option<bool>| o.unwrap_or(true);
        self.lemma21.holds
            && self.lemma22.iter().all(|o| opt(*o))
            && opt(self.lemma24_holds)
            && opt(self.lemma25_holds)
            && opt(self.lemma25_equality_consistent)
            && self.lemma27_holds
            && opt(self.lemma28.holds)
            && opt(self.lemma42.holds)
            && self.thm14.as_ref().is_none_or(Thm14Check::passes)
    }
}

fn lemma22_bound(d: u32) -> u64 {
    let d = u64::from(d);
    (d - 1) * (d.saturating_sub(2))
}

pub fn structural_lemma_checks(curve: &FactoredCurve) -> Result<LemmaReport> {
    let inv = CurveInvariants::compute(curve)?;
    let f = curve.factors();
    let deg = curve.degrees();
    let status = curve.statuses();
    let irreducible = !curve.any_reducible();
    let d = i64::from(inv.degree);
    let m = i64::from(inv.components);
    let mu = inv.milnor as i64;

    let lemma22 = (0..f.len())
        .map(|i| (!status[i].is_reducible()).then(|| inv.factor_milnor[i] <= lemma22_bound(deg[i])))
        .collect();

    let mut lambda = Vec::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if (deg[i] > 1 || deg[j] > 1) && is_transverse(&f[i], &f[j])? {
                lambda.push((i, j));
            }
        }
    }
    let lemma25_bound = (d - 1) * (d - 1) - d + m;
    let lemma24_bound = lemma25_bound - 2 * lambda.len() as i64;

    let components_maximal = (0..f.len()).all(|i| inv.factor_milnor[i] == lemma22_bound(deg[i]));
    let pairs_maximal = inv
        .pairwise
        .iter()
        .all(|&(i, j, v)| v == u64::from(deg[i] * deg[j]));
    let lemma25_equality_consistent =
        irreducible.then_some((mu == lemma25_bound) == (components_maximal && pairs_maximal));

    let lemma27_count = deg.iter().filter(|&&di| di > 1).count() as u32;
    let lemma27_bound = d - m;

    let lemma28 = lemma28(f, deg, status)?;
    let lemma42 = lemma42(
        curve,
        &inv,
        irreducible && mu == lemma25_bound && inv.degree > 2,
    )?;
    let thm14 = if inv.degree > 2 {
        Some(thm14(curve, &inv)?)
    } else {
        None
    };

    Ok(LemmaReport {
        irreducibility: status.to_vec(),
        lemma21: lemma21(&inv),
        lemma22,
        lemma24_holds: irreducible.then_some(mu <= lemma24_bound),
        lemma24_bound,
        lemma25_holds: irreducible.then_some(mu <= lemma25_bound),
        lemma25_bound,
        lemma25_equality_consistent,
        lemma27_count,
        lemma27_bound,
        lemma27_holds: i64::from(lemma27_count) <= lemma27_bound,
        lambda,
        lemma28,
        lemma42,
        thm14,
        invariants: inv,
    })
}

fn lemma28(f: &[BiPoly], deg: &[u32], status: &[IrreducibilityStatus]) -> Result<Lemma28Check> {
    let big: Vec<usize> = (0..f.len()).filter(|&i| deg[i] > 1).collect();
    let k = big.len() as i64;
    let bound = big.iter().map(|&i| i64::from(deg[i]) - 1).sum::<i64>() - k + 1;
    let mut common = None::<BiPoly>;
    for &i in &big {
        let cone = f[i].lowest_form()?.into_poly();
        common = Some(match common {
            None => cone,
            Some(c) => gcd_bivariate(&c, &cone),
        });
    }
    let shares = common.is_some_and(|c| !c.is_constant());
    let applicable = shares && big.iter().all(|&i| !status[i].is_reducible());
    let product: BiPoly = big.iter().map(|&i| &f[i]).product();
    let tangent_count = if big.is_empty() {
        0
    } else {
        tangent_data(&product)?.distinct_count
    };
    Ok(Lemma28Check {
        applicable,
        tangent_count,
        bound,
        holds: applicable.then_some(i64::from(tangent_count) <= bound),
    })
}

fn lemma42(curve: &FactoredCurve, inv: &CurveInvariants, applicable: bool) -> Result<Lemma42Check> {
    let f = curve.factors();
    let deg = curve.degrees();
    let single_tangent_each = f
        .iter()
        .map(|p| tangent_data(p).map(|t| t.distinct_count == 1))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let full_contact_pairs = inv
        .pairwise
        .iter()
        .all(|&(i, j, v)| v == u64::from(deg[i] * deg[j]));
    let lines = deg.iter().filter(|&&di| di == 1).count();
    let at_most_one_line = inv.components >= inv.degree || lines <= 1;
    let no_conic_cubic_pair =
        inv.components >= inv.degree || !(deg.contains(&2) && deg.contains(&3));
    Ok(Lemma42Check {
        applicable,
        single_tangent_each,
        full_contact_pairs,
        at_most_one_line,
        no_conic_cubic_pair,
        holds: applicable.then_some(
            single_tangent_each && full_contact_pairs && at_most_one_line && no_conic_cubic_pair,
        ),
    })
}

/// Evaluates both conditions of the extremal-curve characterization.
///
/// The factors must be the irreducible components of the curve; coarser
/// factorizations make (ii) fail.
pub fn check_thm14(curve: &FactoredCurve) -> Result<Thm14Check> {
    if curve.degree() <= 2 {
        return Err(Error::Precondition(format!(
            "degree {} <= 2",
            curve.degree()
        )));
    }
    thm14(curve, &CurveInvariants::compute(curve)?)
}

fn thm14(curve: &FactoredCurve, inv: &CurveInvariants) -> Result<Thm14Check> {
    let d = inv.degree;
    let target = thm11_bound(d);
    let f = curve.factors();
    let deg = curve.degrees();
    let conics: Vec<usize> = (0..f.len()).filter(|&i| deg[i] == 2).collect();
    let lines: Vec<usize> = (0..f.len()).filter(|&i| deg[i] == 1).collect();

    let component_count = inv.components == d - d / 2;
    let degree_pattern = if d.is_multiple_of(2) {
        conics.len() == f.len()
    } else {
        lines.len() == 1 && conics.len() + 1 == f.len()
    };
    let conics_irreducible = conics
        .iter()
        .all(|&i| irreducibility_status(&f[i]) == IrreducibilityStatus::VerifiedConic);
    let conic_contacts = conics
        .iter()
        .enumerate()
        .all(|(a, &i)| conics[a + 1..].iter().all(|&j| inv.pair(i, j) == 4));
    let line_tangent = if d.is_multiple_of(2) {
        true
    } else {
        match lines.as_slice() {
            [l] => {
                let mut ok = true;
                for &c in &conics {
                    ok &= is_tangent_line(&f[c], &f[*l])?;
                }
                ok
            }
            _ => false,
        }
    };
    let clauses = Thm14Clauses {
        component_count,
        degree_pattern,
        conics_irreducible,
        conic_contacts,
        line_tangent,
    };
    let i_holds = inv.milnor == target;
    let ii_holds =
        component_count && degree_pattern && conics_irreducible && conic_contacts && line_tangent;
    Ok(Thm14Check {
        degree: d,
        milnor: inv.milnor,
        target,
        i_holds,
        ii_holds,
        clauses,
        equivalence_ok: i_holds == ii_holds,
        equivalence_asserted: d != 4,
        d4_exception: d == 4 && i_holds && !ii_holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma41Check {
    pub intersection: u64,
    /// `i_0 < 6`.
    pub holds: bool,
}

/// Contact of a singular one-tangent cubic with a conic stays below 6.
///
/// Preconditions are checked individually: the cubic has degree 3, order at
/// least 2, a single tangent and is not shown reducible; the conic has degree
/// 2, passes through 0 and is nondegenerate.
pub fn check_lemma41(cubic: &BiPoly, conic: &BiPoly) -> Result<Lemma41Check> {
    let pre = |msg: String| Err(Error::Precondition(msg));
    if cubic.total_degree() != Some(3) {
        return pre(format!(
            "cubic has degree {:?}, expected 3",
            cubic.total_degree()
        ));
    }
    if !cubic.vanishes_at_origin() || cubic.order() < ExtNat::Finite(2) {
        return pre("cubic is not singular at the origin".into());
    }
    let t = tangent_data(cubic)?;
    if t.distinct_count != 1 {
        return pre(format!(
            "cubic has {} tangents, expected 1",
            t.distinct_count
        ));
    }
    if irreducibility_status(cubic).is_reducible() {
        return pre("cubic is reducible".into());
    }
    if conic.total_degree() != Some(2) {
        return pre(format!(
            "conic has degree {:?}, expected 2",
            conic.total_degree()
        ));
    }
    if !conic.vanishes_at_origin() {
        return pre("conic does not pass through the origin".into());
    }
    if irreducibility_status(conic) != IrreducibilityStatus::VerifiedConic {
        return pre("conic is degenerate".into());
    }
    let i0 = finite(intersection_multiplicity(cubic, conic)?, || {
        "cubic and conic".into()
    })?;
    Ok(Lemma41Check {
        intersection: i0,
        holds: i0 < 6,
    })
}
