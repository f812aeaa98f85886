//! Exact combinatorial commutative algebra around the Golod property of
//! monomial quotient rings.
//!
//! The library certifies Golodness through the strong gcd-condition: a
//! linear order on the minimal generators under which every coprime pair
//! `u` before `v` has a third generator after `u` dividing `uv`. Products
//! of proper monomial ideals always admit such an order, built by sorting
//! generators by descending degree with ties broken by a monomial order,
//! and the same construction covers ordinary powers and high symbolic
//! powers that factor as products.
//!
//! On the topological side, the Stanley-Reisner correspondence, Alexander
//! duality, and joins connect product ideals to moment-angle complexes:
//! when a complex arises as the Alexander dual of a join of duals, the
//! multiplication on the cohomology of its moment-angle complex is
//! trivial. The [`moment_angle`] module computes that cohomology exactly,
//! through the Hochster decomposition, and verifies triviality pair by
//! pair.
//!
//! Everything is exact: monomial arithmetic on integer exponent vectors,
//! cohomology over the rationals or a prime field, and power series with
//! rational coefficients. Start with the runnable examples:
//!
//! ```bash
//! cargo run -p golod --example product_golod
//! cargo run -p golod --example symbolic_powers
//! cargo run -p golod --example moment_angle
//! ```

pub mod corpus;
pub mod error;
pub mod field;
pub mod golod;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod moment_angle;
pub mod monomial;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use golod::{
    build_product_order, check_strong_gcd, golod_bound_series, search_order, taylor_betti,
    BettiTable, GeneratorOrder, OrderSearch, SearchMode, StrongGcdReport,
};
pub use ideal::{probe_symbolic_factorization, squarefree_product_check, MonomialIdeal};
pub use moment_angle::{check_triviality, hochster_betti, ma_basis, ma_product, verify_join_dual_pipeline};
pub use monomial::{Monomial, MonomialOrderSpec};
pub use simplicial::{complex_from_squarefree_ideal, join, SimplicialComplex};
