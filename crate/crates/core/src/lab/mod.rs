//! Milnor-number bounds, checkers for the structural lemmas on factored
//! curves, the extremal families and a seeded fuzz harness.

mod analysis;
mod bounds;
mod curve;
mod families;
mod fuzz;
mod lemmas;

pub use analysis::{
    analyze_curve, analyze_factored, AnalysisReport, Applicability, Flags, Satisfied,
};
pub use bounds::{thm11_bound, BoundSet};
pub use curve::{
    conic_determinant, irreducibility_status, rational_linear_factor, FactoredCurve,
    IrreducibilityStatus,
};
pub use families::{gen_extremal, gen_irreducible_max};
pub use fuzz::{
    fuzz_campaign, random_factor, random_factored_curve, random_lemma41_pair, trial_rng,
    trial_seed, FuzzConfig, FuzzSummary, Skips, Violation,
};
pub use lemmas::{
    check_lemma21_identity, check_lemma41, check_thm14, structural_lemma_checks, CurveInvariants,
    Lemma21Check, Lemma28Check, Lemma41Check, Lemma42Check, LemmaReport, Thm14Check, Thm14Clauses,
};
