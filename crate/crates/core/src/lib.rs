//! Combinatorial and homological invariants of t-path ideals of finite simple
//! graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`families`]: graphs, graph surgery, class recognition and
//!   instance generators.
//! * [`hypergraph`]: the t-path and t-connected hypergraphs, minimal vertex
//!   covers, Alexander-dual hypergraphs and induced matchings.
//! * [`ideal`] and [`splitting`]: square-free monomial ideal arithmetic, the
//!   3-path splitting `I_3(G) = J + K` and vertex-splittability certificates.
//! * [`oracle`]: graded Betti numbers through Hochster's formula and every
//!   invariant derived from them (reg, pd, depth, Cohen–Macaulayness, linear
//!   resolutions, componentwise linearity, vertex decomposability).
//! * [`verify`]: verification campaigns over exhaustive and seeded corpora.
//! * [`cli`]: the command-line surface used by the `path-ideals` binary.
//!
//! Vertex subsets are stored as `u32` bitmasks over the vertex list of the
//! owning object (see [`bits`]), so every object is limited to 32 vertices.
//! The configured bounds of the expensive searches are much smaller.

pub mod bits;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod hypergraph;
pub mod ideal;
pub mod oracle;
pub mod splitting;
pub mod verify;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use ideal::SquareFreeIdeal;
pub use oracle::{BettiTable, FieldSpec, InvariantReport, SimplicialComplex};
pub use splitting::SplitCertificate;
