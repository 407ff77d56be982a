//! Finitely presented categories under the cartesian product: rewriting
//! normal forms, functors and natural transformations, pushouts and
//! quotients, and the intervals `2` and `I`.

mod builtins;
mod category;
mod constructions;
mod context;
mod functor;
mod rewrite;
mod text;

pub use builtins::{cell_of_nat_trans, interval_iso, interval_two, iso, nat_trans_of_cell, two};
pub use category::{Cat, Generator, Limits, Path, PresentedCategory};
pub use constructions::{
    coequalize, copair, coproduct, lift_through, product, product_functor, pushout, pushout_factor, thin_functor,
    ProdGen, Shape, Sum,
};
pub use context::FinCatContext;
pub use functor::{enumerate_functors, enumerate_nat_trans, Functor, NatTrans};
pub use rewrite::{shortlex, Bounds, RewriteSystem, Word};
pub use text::{parse_fincat_input, parse_word, FinCatInput};
