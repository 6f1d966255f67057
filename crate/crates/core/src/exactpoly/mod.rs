//! Exact arithmetic: Laurent polynomials over big integers, rational
//! evaluation and interpolation, and q-integers.

mod laurent;
mod qint;
mod rational;
mod record;
mod shape;

pub use laurent::LaurentPoly;
pub use qint::{q_fact, q_int};
pub use rational::{interpolate, rat, BigRational};
pub use record::{CoeffRecord, Family, Route, Variable};
pub use shape::ShapeReport;
