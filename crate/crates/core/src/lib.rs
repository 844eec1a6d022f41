//! Relative-entropy vectors of multiparty states.
//!
//! For a pair of `n`-party states `(rho, sigma)` the relative entropies of all
//! `2^n - 1` marginal pairs form a vector that is nonnegative and monotone
//! under enlarging the subset. This crate tests candidate vectors against
//! those inequalities, splits members into nested up-set rays, and builds
//! explicit classical state pairs (from secret-sharing schemes) realizing
//! them.
//!
//! ```
//! use relent_cone::{cone::REVector, realize, states};
//!
//! // v_A = 1, v_B = v_C = 0, every pair and the triple at 1.
//! let target = REVector::from_finite(3, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
//! let result = realize::synthesize(&target).unwrap();
//! assert!(result.max_abs_error < 1e-9);
//! let again = states::re_vector(&result.pair).unwrap();
//! assert!(again.max_abs_diff(&target).unwrap() < 1e-9);
//! ```
//!
//! Modules, bottom up:
//!
//! * [`lattice`]: subset bitmasks, up-sets, enumeration and orbit classes.
//! * [`cone`]: membership checks and layer-cake decomposition.
//! * [`states`]: exact joint distributions and relative entropy.
//! * [`schemes`]: Shamir and XOR secret sharing, and their audit.
//! * [`realize`]: ray realization, synthesis and verification.
//! * [`demo`]: the two worked GF(5) and GF(3) constructions.
//! * [`report`]: plain-text tables and listings.
//! * [`json`]: file formats used by the `relcone` binary.

pub mod cone;
pub mod demo;
pub mod error;
pub mod json;
pub mod lattice;
pub mod realize;
pub mod report;
pub mod schemes;
pub mod states;

pub use cone::{Extended, MembershipReport, REVector, RayDecomposition};
pub use error::{Error, Result};
pub use lattice::{SubsetMask, UpSet};
pub use schemes::{AccessStructure, Scheme};
pub use states::{JointDistribution, StatePair};
