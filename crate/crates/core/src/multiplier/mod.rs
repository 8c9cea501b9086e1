//! Roots of unity, the eta multiplier, the multiplier `v_lambda` attached to
//! an admissible triple, and the automorphy factor `J`.

mod automorphy;
mod eta;
mod lambda;
mod unitroot;

pub use automorphy::{automorphy_j, c_infinity, cocycle_check, weight_factor};
pub use eta::v_eta;
pub use lambda::{kappa_v, psi_local, MultiplierSpec};
pub use unitroot::UnitRoot;
