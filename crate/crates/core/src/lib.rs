//! Exact computations in vacuum modules of the affine Lie algebra `A_l^(1)`:
//! PBW normal forms in `U(sl_{l+1})`, negative-mode monomials, singular vectors,
//! Zhu-algebra polynomials and the classification of highest weights they cut
//! out.
//!
//! Every coefficient is an exact rational; nothing in the crate uses floating
//! point.

pub mod affine;
pub mod error;
pub mod hpoly;
pub mod identities;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod straighten;
pub mod uea;
pub mod weights;
pub mod zhu;

pub use affine::{
    graded_dimension, graded_dimensions, is_singular, psi, psi_generator, psi_lie, singular_space, v2n_vector,
    vlm_vector, zhu_image, ModeGenerator, ModeMonomial, SingularSpace, SingularityCertificate, VacuumModule,
    VermaVector,
};
pub use error::{Error, Result};
pub use hpoly::{AffineForm, HMonomial, HPolynomial};
pub use identities::{check_uea_relations, run_property_suite, IdentityReport};
pub use lie::{
    bracket, generator_bracket, generator_form, invariant_form, root_system, weyl_dim, Generator, LieElement,
    RootSystem, Weight,
};
pub use rational::Rational;
pub use straighten::Monomial;
pub use uea::{PbwMonomial, Uea, UeaElement};
pub use weights::{branch_to_subalgebra, weight_multiplicities, zero_weight_dim, BranchSummand, MultiplicityTable};
pub use zhu::{
    canonical_span, check_lemma64, classify, extract_p0, family_satisfies, generate_adjoint_module, known_families_a2,
    known_families_vl1, known_p0_vl1, known_p_a2, known_vprime_a2, known_vprime_l1, same_span, AdjointModule,
    Lemma64Check, WeightFamily,
};
