//! Theta series attached to admissible triples: local factors, lattice
//! enumeration, q-expansions, numerical evaluation, eta and the
//! transformation-law check.

mod eta;
mod evaluate;
mod expansion;
mod lattice;
mod local;
mod verify;

pub use eta::{eta, eta_cubed};
pub use evaluate::{evaluate, evaluate_at, evaluate_relative, tail_bound, term_estimate, Evaluation};
pub use expansion::{q_expansion, ThetaEntry, ThetaExpansion};
pub use local::local_factor;
pub use verify::{act, image_split, verify_transform, verify_transform_at, TransformReport};
