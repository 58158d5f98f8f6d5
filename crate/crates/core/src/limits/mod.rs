//! Cospan limits of finite categories: 2-fiber products, comma categories
//! and strict pullbacks, with mediators and induced monoidal structure.

mod fiber;
mod monoidal;

pub use fiber::{
    comma, fiber_product, mediate, mediate_2cell, mediating_2cells_exhaustive, strict_pullback, FiberProduct,
    LimitKind, Orientation, Triple,
};
pub use monoidal::{braided_limit, monoidal_limit, MonoidalLimit};
