//! Primality testing in the cubic ring Z_n[x]/(x³ − a·x − a) with the
//! parametric family a = 7 + k(k−1), alongside a quadratic companion test
//! over Z_n[z]/(z² + 3z + 1), a Baillie-PSW baseline, and a sweep harness
//! that hunts for pseudoprimes and emits reproducible JSON reports.
//!
//! Operation counters ride along with every verdict so the per-bit cost of
//! the cubic test (6 multiplications, 3 reductions) can be compared against
//! Baillie-PSW (about 4 and 4) under one counting convention.

pub mod bpsw;
pub mod counters;
pub mod cubic;
pub mod cubic_ring;
pub mod harness;
pub mod intmath;
pub mod poly_oracle;
pub mod quad_ring;
pub mod quadratic;

pub use bpsw::{bpsw, is_prime_oracle};
pub use counters::OpCounters;
pub use cubic::{cubic_test, CubicError, CubicOutcome, CubicParams, TestPolicy, Verdict};
pub use quadratic::{quadratic_test, QuadVerdict};
