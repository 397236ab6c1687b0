//! Exact-arithmetic toolkit for the algebraic study of graphical models.
//!
//! The crate provides, over the rationals and with no rounding anywhere:
//!
//! * multivariate polynomials, symbolic matrices, determinants and minors;
//! * a Buchberger engine with reduced Groebner bases, ideal membership and
//!   containment, elimination ideals, and minimal-generator degrees;
//! * mixed graphs (directed / bidirected / undirected) with separation,
//!   moralization, d-separation, and trek min-cuts;
//! * pairwise / local / global Markov statement generation;
//! * the statistical layer: markov and gaussian rings, conditional
//!   independence ideals, vanishing ideals of discrete and Gaussian models,
//!   trek ideals, and generic identifiability of parameters in structural
//!   equation models.

pub mod error;
pub mod graph;
pub mod groebner;
pub mod ideal;
pub mod markov;
pub mod matrix;
pub mod model;
pub mod monomial;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use graph::{MixedGraph, VertexSet};
pub use groebner::{normal_form, reduced_groebner_basis, Limits};
pub use ideal::{Ideal, IdealRelation, MinGens};
pub use markov::{
    global_markov, global_markov_with_cap, local_markov, pairwise_markov, CIStatement,
    GLOBAL_MARKOV_DEFAULT_CAP,
};
pub use matrix::PolyMatrix;
pub use model::{
    gaussian_ring, gaussian_ring_from_graph, markov_ring, DiscreteRingSpec, GaussianRingSpec,
    IdentClass, IdentResult, TREK_DEFAULT_CAP,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{int, rat, Integer, Polynomial, Rational};
pub use ring::RingSpec;

#[cfg(test)]
mod concurrency {
    // every value is shareable and sendable between tasks
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Polynomial>();
        assert_send_sync::<crate::PolyMatrix>();
        assert_send_sync::<crate::Ideal>();
        assert_send_sync::<crate::MixedGraph>();
        assert_send_sync::<crate::CIStatement>();
        assert_send_sync::<crate::DiscreteRingSpec>();
        assert_send_sync::<crate::GaussianRingSpec>();
        assert_send_sync::<crate::IdentResult>();
    }
}
