//! Enumeration of circulant graphs and digraphs of prime-power order.

pub mod arith;
pub mod error;
pub mod golden;
pub mod groupaction;
pub mod layers;
pub mod multiplier;
pub mod oracle;
pub mod polyring;
pub mod structural;

pub use error::{Error, Result};
pub use groupaction::{BlockSystem, Component, GroupKind, MultiplierGroup};
pub use layers::LayerDecomposition;
pub use multiplier::{enumerate, Mode, SelfComplementaryReport, SubproblemReport};
pub use polyring::{CyclicPolynomial, Polynomial};
