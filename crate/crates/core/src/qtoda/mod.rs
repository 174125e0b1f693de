//! q-deformed gl(ℓ+1) Whittaker functions: Gelfand–Zetlin sums, the row
//! recursion, q-Toda Hamiltonians and their duals, and the verifiers tying
//! them to Macdonald polynomials at `t = 0`.

pub mod checks;
pub mod hamiltonians;
pub mod whittaker;

pub use checks::{
    verify_change_of_variables, verify_dual_t0, verify_fundamental_characters, verify_gz_recursive,
    verify_macdonald_bridge, verify_operator_identities, verify_sl2_discrete, verify_symmetry, verify_toda_eigen,
    verify_translation,
};
pub use hamiltonians::{
    hat_dual_apply, hat_x_apply, hat_x_eigenvalue, hat_x_table_at, toda_apply, toda_apply_at, toda_dual_lambda_at,
    toda_dual_x_apply, toda_dual_x_table_at,
};
pub use whittaker::{
    box_points, delta, is_dominant, normalize_whittaker, whittaker_gz, whittaker_normalized, whittaker_recursive,
    whittaker_table,
};
