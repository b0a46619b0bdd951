use serde::Serialize;

use super::bounds::BoundSet;
use super::curve::FactoredCurve;
use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use crate::local::{intersection_multiplicity, milnor_number, tangent_data};
use crate::poly::BiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Applicability {
    pub bezout: bool,
    pub thm11: bool,
    pub lemma25: bool,
    pub gz: bool,
    pub am: bool,
}

/// `None` for bounds that were not checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Satisfied {
    pub bezout: Option<bool>,
    pub thm11: Option<bool>,
    pub lemma25: Option<bool>,
    pub gz: Option<bool>,
    pub am: Option<bool>,
}

impl Satisfied {
    pub fn all_hold(&self) -> bool {
        [self.bezout, self.thm11, self.lemma25, self.gz, self.am]
            .iter()
            .all(|s| s.unwrap_or(true))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// `ord_0 f = deg f`.
    pub homogeneous: bool,
    /// `ord_0 f = 1`.
    pub smooth: bool,
    /// The Milnor number reaches `(d-1)^2 - floor(d/2)`.
    pub extremal: bool,
}

/// Invariants of a curve at the origin and the bounds checked against them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub degree: u32,
    pub order: u32,
    pub milnor: ExtNat,
    pub tangent_count: u32,
    pub bounds: BoundSet,
    pub applicable: Applicability,
    pub satisfied: Satisfied,
    pub flags: Flags,
    /// Reasons for skipped checks.
    pub notes: Vec<String>,
}

/// Analyzes `f = 0` at the origin.
///
/// `assume_unibranch` is the caller's promise that the germ is irreducible in
/// the power series ring; the Abhyankar-Moh bound is then applied if the curve
/// also has a single tangent meeting it with multiplicity `deg f`.
pub fn analyze_curve(f: &BiPoly, assume_unibranch: bool) -> Result<AnalysisReport> {
    analyze(f, None, assume_unibranch)
}

/// Like [`analyze_curve`] on the product, with the component count known so
/// the `(d-1)^2 - d + m` bound is checked too.
pub fn analyze_factored(curve: &FactoredCurve, assume_unibranch: bool) -> Result<AnalysisReport> {
    analyze(
        &curve.product(),
        Some(curve.count() as u32),
        assume_unibranch,
    )
}

fn analyze(f: &BiPoly, components: Option<u32>, assume_unibranch: bool) -> Result<AnalysisReport> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.vanishes_at_origin() {
        return Err(Error::NotThroughOrigin);
    }
    let degree = f.total_degree().expect("nonconstant");
    let tangents = tangent_data(f)?;
    let order = tangents.order;
    let milnor = milnor_number(f)?;
    let bounds = BoundSet::new(degree, order, components);
    let mut notes = Vec::new();

    let finite = milnor.is_finite();
    if !finite {
        notes.push("non-isolated singularity: bound checks skipped".to_string());
    }
    let mut applicable = Applicability {
        bezout: finite,
        thm11: finite && degree > 1 && order < degree,
        lemma25: finite && components.is_some(),
        gz: finite && order == 2,
        am: false,
    };
    if finite && order == degree {
        notes.push("homogeneous: the thm11 bound needs ord < d".to_string());
    }
    if finite && assume_unibranch {
        if tangents.distinct_count != 1 {
            notes.push(format!(
                "am: {} distinct tangents, unibranch germs have one",
                tangents.distinct_count
            ));
        } else {
            let line = tangents.cone.squarefree_part().into_poly();
            let contact = intersection_multiplicity(f, &line)?;
            if contact == ExtNat::Finite(u64::from(degree)) {
                applicable.am = true;
            } else {
                notes.push(format!(
                    "am: tangent contact {contact} differs from degree {degree}"
                ));
            }
        }
    } else if finite {
        notes.push("am: unibranch not assumed".to_string());
    }

    let mu = milnor.finite();
    let check = |applies: bool, bound: Option<u64>| match (applies, mu, bound) {
        (true, Some(mu), Some(b)) => Some(mu <= b),
        _ => None,
    };
    let satisfied = Satisfied {
        bezout: check(applicable.bezout, Some(bounds.bezout)),
        thm11: check(applicable.thm11, Some(bounds.thm11)),
        lemma25: check(applicable.lemma25, bounds.lemma25),
        gz: check(applicable.gz, Some(bounds.gz)),
        am: check(applicable.am, Some(bounds.am)),
    };
    let flags = Flags {
        homogeneous: order == degree,
        smooth: order == 1,
        extremal: applicable.thm11 && mu == Some(bounds.thm11),
    };
    Ok(AnalysisReport {
        degree,
        order,
        milnor,
        tangent_count: tangents.distinct_count,
        bounds,
        applicable,
        satisfied,
        flags,
        notes,
    })
}
