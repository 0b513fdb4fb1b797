//! Zigzag numbers, closed forms for `K`, and exact truncated power series used
//! to check the generating-function identities.

mod closed;
mod identities;
mod series;

pub use closed::{
    bar_d_closed_form, d_closed_form, euler_numbers, euler_numbers_by_division, k_closed_form,
    k_closed_form_product, SequenceName, SequenceTable, EXCEPTIONAL,
};
pub use identities::{verify_identities, IdentityCheck, IdentityReport};
pub use series::EgfSeries;
