//! Decide, construct, uniformly sample, and exhaustively enumerate simple
//! directed graphs realizing a prescribed bi-degree sequence.
//!
//! A bi-degree sequence assigns each vertex an (out-degree, in-degree)
//! pair. This crate answers the questions one asks about such a
//! prescription:
//!
//! - is it realizable by a simple digraph at all ([`is_bigraphical`]),
//!   also under a forbidden out-neighbor set ([`is_feasible_restricted`]);
//! - build one realization greedily ([`realize_greedy`]);
//! - connect any two realizations by a short sequence of degree-preserving
//!   swaps ([`swap_path`]), the backbone of Markov-chain sampling;
//! - sample realizations uniformly ([`run_chain`]);
//! - list every realization ([`enumerate_all`]).
//!
//! Every decision procedure is cross-checked against the brute-force
//! [`oracle`] in the test suite.
//!
//! ```
//! use bidegree::{BiDegreeSequence, is_bigraphical, realize_greedy, PivotStrategy};
//!
//! let bds = BiDegreeSequence::from_degree_pairs([(1, 1), (1, 1), (1, 1)]);
//! assert!(is_bigraphical(&bds));
//! let g = realize_greedy(&bds, PivotStrategy::MaxOut).into_graph().unwrap();
//! assert_eq!(g.degree_sequence(), bds);
//! ```

pub mod bds;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod order;
pub mod realize;
pub mod reduce;
pub mod sampler;
pub mod swap;

pub use bds::{BiDegreeSequence, DegreePair, VertexId};
pub use enumerate::{
    count_realizations, enumerate_all, enumerate_realizations, feasible_extension, BranchState,
    EnumerateConfig,
};
pub use error::{Error, Result};
pub use graph::{Arc, DiGraph};
pub use order::{normal_order, OutNeighborhood, VertexOrder};
pub use realize::{
    f_normal_order, f_prefix, is_bigraphical, is_bigraphical_with, is_feasible_restricted,
    is_graphical_undirected, realize_greedy, PivotStrategy, RealizeReport, RestrictedInstance,
};
pub use reduce::{a_reduce, reduce_pivot};
pub use sampler::{empirical_tv, run_chain, ChainConfig, ChainState};
pub use swap::{
    apply_swap, canonicalize, shift_left, shift_one, swap_path, verify_path, Swap, SwapSequence,
};
