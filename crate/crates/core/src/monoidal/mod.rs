//! Monoidal, braided and symmetric structures, monoidal functors and
//! monoidal natural transformations, with exhaustive coherence scans.

mod braiding;
pub mod examples;
mod functor;
mod structure;

pub use braiding::{check_braiding, is_symmetric, Braiding};
pub use examples::{
    bicharacter_braiding, discrete_group_category, skeletal_base, skeletal_group_category, trivial_cocycle,
};
pub use functor::{
    check_braided_functor, check_mon_functor, check_mon_nattrans, compose_mon_functors, MonFunctor, MonNatTrans,
};
pub use structure::{check_monoidal, MonoidalStructure};
pub(crate) use structure::{path_detail, paths_agree};
