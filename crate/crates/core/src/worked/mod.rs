//! The two explicit examples: the Daigle–Freudenburg action on `A^5`, whose
//! invariant ring is that of the quasi-affine `V \ Sing V`, and a regular map
//! pulling regular functions on `W \ H` back to `V` while `f(V)` meets `H`.

pub mod appendix;
pub mod df;

pub use appendix::{appendix_dataset, verify_appendix, AppendixDataset};
pub use df::{df_dataset, verify_df, DfDataset};

use crate::poly::Rational;
use crate::report::Report;

/// Both examples in one report.
pub fn verify_all(df: &DfDataset, points: Option<&[Vec<Rational>]>) -> Report {
    Report::merge([verify_df(df, points), verify_appendix(&appendix_dataset())])
}
