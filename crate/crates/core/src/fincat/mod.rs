//! Finite categories, functors and natural transformations as dense tables.

mod budget;
mod category;
mod concrete;
mod functor;
mod functor_category;
mod product;
pub mod standard;
mod subcategory;

pub use budget::{Budget, CAP_ENV};
pub use category::{check_category, CategoryBuilder, FinCategory, Mor, MorphismRecord, Obj};
pub use concrete::{Concrete, ConcreteSpec};
pub use functor::{check_functor, check_nat_trans, compose_functors, same_category, Functor, NatTrans};
pub use functor_category::{
    composition_functor, enumerate_functors, enumerate_nat_trans, functor_category, functor_count_estimate, pullback,
    pushforward, FunctorCategory,
};
pub use product::{product_category, ProductCategory};
pub use subcategory::full_subcategory;
