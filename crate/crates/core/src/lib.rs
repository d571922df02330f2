//! Exact verification and construction toolkit for 3-Lie algebras and their bialgebras.
//!
//! All arithmetic is carried out over the Gaussian rationals, so every identity
//! check is an exact zero test.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod double;
pub mod error;
pub mod form;
pub mod io;
pub mod linalg;
pub mod prelie;
pub mod report;
pub mod representation;
pub mod scalar;
pub mod solve;
pub mod suite;
pub mod tensor;
pub mod yang_baxter;

pub use algebra::{AlgebraElement, Bracket, ThreeLieAlgebra};
pub use catalog::{dim3_delta_closed_form, get_algebra, get_paper_bialgebra, CatalogId, CatalogTag};
pub use cohomology::{is_one_cocycle, Cochain};
pub use double::{
    double_bracket, is_double_construction_bialgebra, is_pseudo_metric, local_from_double, matched_pair_bracket,
    plus_form, solve_bialgebra_space, theorem_relations, verify_bialgebra_equations, verify_delta_skew,
    verify_invariance, verify_manin_triple, verify_matched_pair, verify_matched_pair_reduced, BialgebraConstraint,
    BialgebraEquation, MatchedPairData, TheoremRelations,
};
pub use error::{Error, Result};
pub use form::{BilinearForm, Symmetry};
pub use linalg::{Matrix, Vector};
pub use prelie::{
    canonical_r, compatible_prelie_from_invertible_o, left_representation, prelie_from_form, prelie_from_o_operator,
    r_from_o_operator, subadjacent, verify_o_operator, verify_prelie, LinearOperator, PreLieAlgebra,
};
pub use representation::Representation;
pub use report::{VerificationReport, Witness};
pub use scalar::{Rational, Scalar};
pub use solve::{solve_linear, LinearEquation, LinearSolveResult};
pub use tensor::{wedge3, Tensor};
pub use yang_baxter::{
    delta_from_r, dual_structure, is_cybe_solution, mixed_triple_bracket, rrr_variants, triple_r_bracket,
    verify_co_jacobi, verify_thm_condition, Comultiplication, DeltaTriple, RElement,
};
