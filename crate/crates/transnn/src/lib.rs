//! Simulation and analysis toolkit for transmission neural networks with
//! excitatory and inhibitory connections.
//!
//! Neurons carry binary firing states. A directed edge `j -> i` is either
//! excitatory or inhibitory and transmits successfully with some probability
//! per step; a neuron fires when at least one excitatory transmission arrives
//! and no inhibitory transmission does. The crate provides, on top of one
//! shared network description ([`model`]):
//!
//! - [`dynamics`]: stochastic sampling of the binary dynamics with
//!   reproducible counter-based random streams, plus Monte Carlo marginal
//!   estimation,
//! - [`oracle`]: exact transition probabilities and distribution evolution
//!   over the full `2^n` state space (ground truth at desk scale),
//! - [`meanfield`]: deterministic propagation of firing probabilities and the
//!   equivalent two-dimensional information-state form built on the
//!   tuneable log-sigmoid activation,
//! - [`limit`]: the infinite-neurotransmitter Poisson limit model,
//! - [`certify`]: induced-norm contraction, spectral-radius stability, and
//!   linear upper-bound certificates for the limit dynamics,
//! - [`logic`]: NOR-gate motifs and compilation of arbitrary truth tables
//!   into deterministic networks.

pub mod certify;
pub mod dynamics;
pub mod error;
pub mod limit;
pub mod logic;
pub mod mat;
pub mod meanfield;
pub mod model;
pub mod oracle;
pub mod rng;

pub use error::Error;
pub use mat::Mat;
pub use model::{Edge, EdgeKind, Frame, NetworkSpec, NetworkTopology, Violation};
pub use rng::DrawStream;
