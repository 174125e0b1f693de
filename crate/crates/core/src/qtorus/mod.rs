//! The quantum torus algebra, the polynomials `f_{n,i}` and `Ψ̃` as a
//! vacuum matrix element of a product of their powers.

pub mod algebra;
pub mod checks;

pub use algebra::{
    f_poly, generator_count, generator_index, matrix_element, whittaker_matrix_element, whittaker_product, TorusElem,
};
pub use checks::{
    proof_identity_check, q_binomial_identity_check, verify_associativity, verify_f_degrees, verify_matrix_element,
    verify_proof_identity, verify_q_binomial, verify_vacuum,
};
