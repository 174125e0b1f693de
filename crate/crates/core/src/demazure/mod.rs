//! Affine `gl(ℓ+1)` root data, Demazure operators and characters, and their
//! image under `π` compared with `P_λ(z; q, 0)`.
//!
//! Weights live at level 1 for the characters of interest. The extremal
//! weights of `V_w(ω_0 + λ̇_{k,i})` have nonpositive `δ`-degree, so `π` of a
//! character lies in `ℤ≥0[q^{−1}]`; see [`checks::DemazureReport`] for the
//! exponent actually observed next to the stated one.

pub mod character;
pub mod checks;
pub mod weights;

pub use character::{demazure_character, demazure_op, pi_homomorphism, CharSum};
pub use checks::{
    demazure_pi, prefactor_check, verify_braid, verify_character_shape, verify_demazure_whittaker,
    verify_form_invariance, verify_idempotence, verify_invariant_linearity, verify_opposite_sign,
    verify_rank_one_family, whittaker_from_demazure, DemazureReport,
};
pub use weights::{
    bilinear_form, fundamental_weight, null_root, orbit_base, orbit_representative, simple_root, weyl_apply,
    weyl_reflect, AffineWeight, OrbitData,
};
