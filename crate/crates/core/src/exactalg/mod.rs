//! Exact commutative-ring arithmetic: dense matrices, Smith normal form,
//! linear solving and finitely presented modules.

mod matrix;
mod module;
mod ring;
mod snf;

pub use matrix::Matrix;
pub use module::{pushout_factor, pushout_modules, FpModule, FreeQuotient};
pub use ring::{scalar_to_json, Ring, Scalar};
pub use snf::{smith_normal_form, solve_linear, SmithForm};
