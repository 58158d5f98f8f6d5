mod drinfeld;
mod half_braiding;
mod hpt;
mod mueger;

pub use drinfeld::{
    center_pullback, center_pushforward, check_intertwiner_actions, drinfeld_center, monoidal_centralizer,
    monoidal_intertwiner, nat_pullback, nat_pushforward, Intertwiner,
};
pub use half_braiding::{CenterCategory, HalfBraiding};
pub use hpt::{check_center_compatibility, check_hpt_conditions, HptCandidate};
pub use mueger::{braided_centralizer, braided_intertwiner, mueger_center, transparent_objects};
