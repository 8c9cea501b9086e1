//! Narrow class groups of real quadratic fields via reduced indefinite forms,
//! and the class-group existence test for admissible triples.

mod forms;
mod group;
mod thm;

pub use forms::QForm;
pub use group::{reduced_forms, ClassGroup};
pub use thm::{theorem2_check, Thm2Case, Thm2Report};
