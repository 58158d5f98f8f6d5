//! Module categories over a monoidal base, the span `A_f` of a module
//! functor, 2-spans of module transformations, and the laxators.

mod central;
pub mod corpus;
mod end;
mod laxator;
mod module;
mod span;
mod two_span;

pub use central::{
    canonical_central_data, central_embedding, central_fiber_product, central_module_check, central_phi_product,
    central_product, check_central_product, check_phi_product, fully_faithful, induced_central_functor, CenterKind,
    CentralProduct, PhiProduct,
};
pub use end::{end_monoidal, EndCategory};
pub use laxator::{
    chain_product, check_laxator, evaluate, flat_evaluation, laxator, laxator_coherence, pentagon_bracketings,
    pentagon_check, Bracketing, ChainProduct, Coherence, Evaluated, Invertibility, Laxator,
};
pub use module::{
    check_module, check_module_functor, check_module_nat_trans, module_structures_on, ModuleData, ModuleFunctorData,
    ModuleNatTransData,
};
pub use span::{
    build_module_span, build_span, check_span, monoidal_lifts, normalization_check, Normalization, SpanCell,
};
pub use two_span::{build_2span, check_two_span, Quadruple, QuadrupleConditions, TwoSpan};
