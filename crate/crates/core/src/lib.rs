pub mod adjacency;
pub mod arith;
pub mod error;
pub mod groups;
pub mod independence;
pub mod refdata;
pub mod torus;

pub use adjacency::{adjacent, build_graph, Clause, CriterionTag, Decision, GraphContext, PatternEntry, PrimeGraph};
pub use arith::{Budget, Factorization, SignEps};
pub use error::{Error, Result};
pub use groups::{group_order, parse_spec, prime_set, GroupOrder, GroupSpec, LieGroup, LieSeries, Sporadic};

/// Arbitrary-precision natural numbers.
pub type BigNat = num_bigint::BigUint;
/// Machine-word naturals, used where values are known to be small.
pub type SmallNat = u64;
pub use independence::{
    all_components_cliques, components, max_independent_set, ComponentPartition, IndependenceResult,
};
pub use torus::{cross_validate, enumerate_torus_orders, oracle_adjacent, CrossReport, TorusCensus, TorusOrder};
