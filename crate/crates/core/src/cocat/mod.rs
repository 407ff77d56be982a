//! The generic layer: everything here is written against
//! [`MonoidalContext`] and runs unchanged in both concrete contexts.

mod algebra;
mod axioms;
mod builders;
mod cells;
mod context;
mod invertible;
mod report;
mod squares;
mod structures;

pub use algebra::{
    check_comonoid, check_comonoid_hom, check_hopf, check_lattice, check_lattice_uniqueness,
    check_meet_join_boundaries, check_monoid, comonoid_of, interchange, tensor_comonoid, unit_comonoid, Comonoid,
    Monoid,
};
pub use axioms::{check_cocategory, check_cogroupoid, glue, glue_or_err, Glued};
pub use builders::{coproduct_interval, discrete_interval};
pub use cells::Kit;
pub use context::{ContextExt, Coproduct, MonoidalContext, Pushout};
pub use invertible::{
    check_groupoid_homs, check_interval_isomorphism, check_invertibility, check_j_hopf, extend_invertible_cell,
    extend_to_j, extend_with_inverse, free_invertible_interval, search_i_equivalence, Extension, FreeInvertible,
    FreenessTarget, Invertibility, INVERTIBILITY_CONDITIONS,
};
pub use report::{is_resource_error, CheckItem, CheckReport, Status};
pub use squares::{
    check_cocycle, check_injective_boundaries, check_phi_psi, check_representable, check_two_category, CellSquare,
    Probes,
};
pub use structures::{Boundary, Cocategory, Homotopy, Interval, BOUNDARY_NAMES};
