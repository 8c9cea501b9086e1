//! Jacobi symbols, local Hilbert symbols, the Kubota cocycle and its
//! splitting on `SL2(O_v)`, and the product `v0` of local splittings.

mod cocycle;
mod hilbert;
mod jacobi;
mod order;
mod sl2;

pub use cocycle::{kubota_cocycle, splitting_s, v0, v0_by_places, v0_rational_closed_form};
pub use hilbert::{hilbert_symbol, unit_char, Place};
pub use jacobi::{jacobi, jacobi_i64, jacobi_lower, jacobi_upper};
pub use order::min_unit_sq_val;
pub use sl2::Sl2;
