//! Exact combinatorial kernels for the extremal theory of triangle-intersecting
//! families of graphs on eight vertices.
//!
//! The crate builds, executes and certifies the computational claims behind the
//! coset-partition bound for non-bipartite-agreeing families on `K8`:
//!
//! * [`gf2`] — arithmetic over `Z2^m` (`m <= 4`): inner products, orthogonal
//!   sets, linear maps and the enumeration of the regular ones.
//! * [`graphs`] — subgraphs of `Kn` as edge indicators, with symmetric
//!   difference, agreement, triangle detection, bipartiteness and the cube
//!   (`Q3`) recognizers.
//! * [`antilinear`] — antilinear and Fano permutations of `S8`: recognition,
//!   signatures, enumeration and the `L∘φ` factorization.
//! * [`cube_subspace`] — the three-dimensional subspace of the `K8` edge space
//!   whose non-zero members are complements of cubes, plus the reverse
//!   coloring analysis bounding the vertex count.
//! * [`families`] — family predicates (triangle/non-bipartite ×
//!   intersecting/agreeing), kernel systems and the coset cap.
//! * [`uniqueness`] — the 56-variable constraint search showing no assignment
//!   of non-zero subspace members to triangles is pairwise compatible.
//! * [`useful_sets`] — usefulness for triangles, the index-set classification
//!   over `Z2^4` and the checkpointed `K9` coloring search.
//! * [`cert`] — the machine-readable certificate schema shared by every check.
//! * [`pipeline`] — the one-shot verification pipeline and its sabotage
//!   harness.

pub mod antilinear;
pub mod cert;
pub mod cube_subspace;
pub mod families;
pub mod gf2;
pub mod graphs;
pub mod pipeline;
pub mod uniqueness;
pub mod useful_sets;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(u8),
    #[error("unsupported vertex count {0}")]
    UnsupportedVertexCount(u8),
    #[error("vertex {0} out of range for n={1}")]
    VertexOutOfRange(u8, u8),
    #[error("invalid edge ({0},{1})")]
    InvalidEdge(u8, u8),
    #[error("not a permutation of 0..8: {0:?}")]
    NotAPermutation([u8; 8]),
    #[error("permutation does not fix 0")]
    DoesNotFixZero,
    #[error("permutation is not antilinear")]
    NotAntilinear,
    #[error("permutation is not Fano")]
    NotFano,
    #[error("map is not regular")]
    NotRegular,
    #[error("invalid cycle notation: {0}")]
    BadCycleNotation(String),
    #[error("invalid canonical edge set: {0}")]
    BadEdgeSetText(String),
    #[error("invalid family: {0}")]
    BadFamily(String),
    #[error("invalid candidate set: {0}")]
    BadCandidateSet(String),
    #[error("invalid index set: {0}")]
    BadIndexSet(String),
    #[error("invalid subspace: {0}")]
    BadSubspace(String),
    #[error("invalid constraint instance: {0}")]
    BadInstance(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Crate version recorded in every certificate.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Runs `f` inside a rayon pool of `workers` threads, or the global pool when
/// `workers` is `None`. Search results must not depend on the choice.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        None => f(),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .expect("building a local thread pool cannot fail");
            pool.install(f)
        }
    }
}
