//! Binary images of ring codes and their analysis: packed matrices, self-duality
//! and type, distance bounds, exact low-weight counts, weight-enumerator
//! families and the text record format.

mod census;
mod code;
mod dbformat;
mod enumerator;
mod matrix;

pub use census::{census_cost, full_weight_distribution, Census, CensusOptions};
pub use code::{distance_bound, BinaryCode, CodeType};
pub use dbformat::Record;
pub use enumerator::{extract_params, fit_family, EnumeratorParams, Family};
pub use matrix::{gray_lift, half_grouped_order, BinaryMatrix, Rref};
