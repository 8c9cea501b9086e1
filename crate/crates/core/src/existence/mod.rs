//! Existence of admissible triples, explicit constructions and counting of
//! equivalence classes.

mod construct;
mod count;
mod criteria;
mod norms;

pub use construct::{construct_for_class, construct_triple, is_in_g};
pub use count::{equiv_classes, realize_classes, S3Term};
pub use criteria::{existence_report, quadratic_criteria, Criteria, ExistCase, ExistenceReport};
pub use norms::{norm_form_reps, three_u2_v2, three_u2_v2_criterion, two_squares, two_squares_criterion};
