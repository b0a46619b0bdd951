//! Exact local invariants of plane algebraic curve singularities.
//!
//! Everything is computed over the rationals with arbitrary precision:
//!
//! - [`poly`]: sparse bivariate polynomials, parsing/printing, gcd, lowest forms
//! - [`local`]: intersection multiplicity at the origin, Milnor number, tangents
//! - [`oracle`]: brute-force quotient dimensions by exact linear algebra
//! - [`lab`]: Milnor-number bounds, lemma checkers, curve families and fuzzing

pub mod error;
pub mod ext_nat;
pub mod lab;
pub mod local;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use ext_nat::ExtNat;
pub use lab::{
    analyze_curve, analyze_factored, check_lemma21_identity, check_lemma41, check_thm14,
    fuzz_campaign, gen_extremal, gen_irreducible_max, random_factored_curve,
    structural_lemma_checks, AnalysisReport, BoundSet, FactoredCurve, FuzzConfig, FuzzSummary,
    IrreducibilityStatus,
};
pub use local::{
    intersection_multiplicity, is_tangent_line, is_transverse, milnor_number,
    shares_common_tangent, tangent_data, TangentData,
};
pub use oracle::{
    local_quotient_dimension, milnor_oracle, truncated_quotient_dimension, TruncationLevel,
};
pub use poly::{parse_poly, BiPoly, BinaryForm, Rational, UniPoly, Var};
