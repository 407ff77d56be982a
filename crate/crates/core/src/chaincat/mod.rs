//! Chain complexes of finitely generated free modules as a symmetric
//! monoidal context, with the interval `I` and the complex on which its
//! boundaries fail to be injective.

mod complex;
mod context;
mod interval;
mod json;
mod pushout;
mod tensor;

pub use complex::{ChainComplex, ChainMap};
pub use context::ChainContext;
pub use interval::{
    corrupted_interval_i, counterexample_c, double_segment, interval_i, segment, ChainInterval, Counterexample,
};
pub use json::{parse_chain_input, ChainInput};
pub use pushout::{pushout_complexes, ComplexPushout, FreePushout};
pub use tensor::{associator, symmetry, tensor_complexes, tensor_maps, TensorLayout};
