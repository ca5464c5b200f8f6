//! Tableau calculus around the Berele row-insertion on symplectic (King)
//! tableaux.
//!
//! The crate provides partitions and punctured partitions, (punctured)
//! semistandard tableaux, Knuth words, jeu de taquin sliding and
//! rectification, Schensted and Berele row-insertion with full route
//! instrumentation, the first-column pruning map and the
//! Littlewood-Richardson map built on it, and the Robinson-Schensted /
//! RSK / dual-RSK correspondences with oscillating-tableau recording
//! objects. The [`verify`] module runs every bijection and coincidence
//! exhaustively over desk-scale ranges.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share and move across threads.

pub mod berele;
pub mod correspondences;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod jdt;
pub mod partition;
pub mod schensted;
pub mod tableau;
pub mod verify;
pub mod word;

pub use error::Error;
pub use partition::{Cell, Partition, PuncturedPartition, SkewPartition};
pub use tableau::{Letter, PuncturedTableau, SkewTableau, Tableau};
pub use word::Word;
