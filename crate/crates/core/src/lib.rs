//! Finite multiplicative lattices and their zero-divisor graphs.
//!
//! The crate builds finite bounded lattices, attaches and validates
//! multiplications, constructs the meet-based and product-based zero-divisor
//! graphs, computes exact graph invariants, and machine-checks the structural
//! results relating the two (diameter bounds and trichotomy, girth, bipartite
//! characterizations) on concrete instances such as the ideal lattices of
//! Z_n and exhaustively enumerated multiplications on small lattices.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod mult;
pub mod rings;
pub mod theorems;
pub mod zdg;

pub use error::Error;
pub use invariants::{metrics, Diameter, Girth, GraphMetrics};
pub use lattice::{ElementSet, FiniteLattice, SubsetFlags};
pub use mult::{MultLattice, Nilpotence, ZeroDivisors};
pub use rings::{
    annihilator, ideal_lattice_zn, product, with_meet_mult, with_trivial_mult, RingSpec,
};
pub use theorems::{check_all, classify_diameter, TheoremReport, Verdict};
pub use zdg::{gamma_meet, gamma_mult, Graph};
