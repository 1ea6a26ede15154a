//! Exact lattice-theoretic computations for tensor triangular geometry at
//! finite scale.
//!
//! The crate makes four layers executable, each verified against independent
//! routes rather than trusted formulas:
//!
//! * [`poset`]: finite posets and lattices with explicit meet/join tables,
//!   distributivity certificates (M3/N5 forbidden sublattices), ideals, and
//!   the downset construction behind Birkhoff duality.
//! * [`frame`]: finite frames and topological spaces, the points/opens
//!   adjunction with its unit, counit and triangle identities, separation
//!   and coherence predicates, and Hochster duality.
//! * [`poly`]: exact univariate polynomial arithmetic over Q and F_p,
//!   squarefree parts in positive characteristic, irreducibility, and the
//!   frame of radical ideals of k[x].
//! * [`perf`] and [`bigsupport`]: a formal-sum model of perfect complexes
//!   over k[x] with tensor products, supports, the prime/Thomason
//!   classification, and the Cantor-Bendixson local-to-global machinery for
//!   lattice-valued supports.
//!
//! Every capability has a runnable demonstration under `examples/`:
//!
//! | capability | example |
//! |------------|---------|
//! | lattice checks, M3/N5 witnesses | `distributivity_forbidden` |
//! | points/opens duality, triangle identities | `stone_duality` |
//! | Hochster duality, coherence | `hochster_duality` |
//! | radical ideals of k[x] as a frame | `radical_ideal_frame` |
//! | irreducible polynomial census | `irreducible_census` |
//! | derived tensor of torsion modules | `perfect_complex_tensor` |
//! | spectrum primes, Koszul membership, classification | `spectrum_and_classification` |
//! | lattice-valued support functions | `sigma_supports` |
//! | Cantor-Bendixson filtration, local-to-global | `cantor_bendixson_local_to_global` |
//!
//! The `ttlat` binary exposes the same operations as subcommands; see the
//! repository README for the file formats it reads.

pub mod bigsupport;
pub mod bits;
pub mod cli;
pub mod frame;
pub mod perf;
pub mod poly;
pub mod poset;
