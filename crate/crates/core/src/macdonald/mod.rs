//! Macdonald polynomials `P_λ(x; q, t)`: Gram–Schmidt construction, the
//! `(q,t)` scalar product, difference operators, the normalized `Φ_λ` and
//! self-duality at `t = q^{-k}`.

pub mod checks;
pub mod eps;
pub mod gram;
pub mod operators;
pub mod phi;
pub mod symfunc;

pub use checks::{verify_norms, verify_orthogonality, verify_self_duality, verify_spectrum};
pub use eps::EpsSeries;
pub use gram::{
    extend_generalized, gram_schmidt_macdonald, macdonald_numeric, macdonald_qpow, macdonald_stable, macdonald_t0,
    norm_closed_form, MacdonaldPoly, SpecPoint,
};
pub use operators::{
    apply_subset_operator, dual_macdonald_apply, eigenvalue_c, elementary_values, macdonald_op_apply, two_rho, varrho,
    Table,
};
pub use phi::{
    normalization_factor, normalize_phi, phi, phi_limit, self_duality_check, verify_dual_on_curve, NormalizedMacdonald,
};
pub use symfunc::{scalar_product, scalar_product_qt, z_lambda, SymFunc};
