pub mod algebra;
pub mod catalog;
pub mod geometry;
pub mod ma;
pub mod paracomplex;
mod par;
