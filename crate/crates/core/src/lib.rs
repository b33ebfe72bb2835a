//! Rational D(q)-quintuples, the elliptic curves over ℚ(u) that produce them,
//! and root numbers of the quadratic twists that decide which q they reach.

pub mod arith;
pub mod curves;
pub mod density;
pub mod error;
pub mod families;
pub mod polyfield;
pub mod quintuple;
pub mod twist;
