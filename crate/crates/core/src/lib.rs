//! Exact-arithmetic engine for crossing numbers of tripartite-circle
//! drawings of complete tripartite graphs K_{m,n,p}.
//!
//! The crate computes the label-calculus crossing counts, evaluates every
//! closed-form lower and upper bound (including the exact K_{2,2,n} value
//! and the Harary-Hill comparisons), realizes the bound-attaining
//! constructions as label assignments and stripe models, recounts the
//! constructions with a formula-free inversion oracle, and brute-force
//! verifies the underlying identities and the K_{2,2,n} optimum.

pub mod calculus;
pub mod closed_forms;
pub mod constructions;
pub mod error;
pub mod render;
pub mod stripes;
pub mod verifiers;

pub use calculus::{
    bi_count, binom, cyclic_distance, f, f_min, mono_count, total_count, Circle, CrossingBreakdown,
    DrawingLabels, FMin, LabelVector, TripartiteSpec,
};
pub use closed_forms::{
    balanced_bounds, bcr3_balanced_lower, best_bounds, cr2, cr2_balanced, harary_hill,
    improved_upper_balanced, k22n_exact, lower_general, lower_improved, lower_via_complete,
    upper_general, BalancedThreeCircleBound, Bound, BoundsReport, Candidate, ImprovedUpper,
    KnownValueRegistry, LowerMethod, UpperMethod,
};
pub use constructions::{
    k22n_construction, k22n_green_count, k22n_red_count, k22n_total, linear_labels,
    linear_stripe_model, K22nDrawing,
};
pub use error::{Error, Result};
pub use stripes::{
    stripe_breakdown, stripe_oracle, BoundaryPoint, EdgeId, Stripe, StripeDrawing, StripeKind,
};
pub use verifiers::{
    verify_bichromatic_min, verify_construction, verify_fmin, verify_hh, verify_k22n_lower,
    verify_mixed, verify_table, verify_three_terms, verify_ys, Counterexample, Status,
    VerificationReport, VerifyTarget,
};
