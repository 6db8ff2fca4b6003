//! Exact combinatorial representation theory: tableaux and Schur polynomials,
//! RSK and skew RSK, crystal operators, Hall-Littlewood polynomials through the
//! alcove model, sl2-posets, representation diagrams, and stable graded
//! multiplicities.

pub mod alcove;
pub mod crystal;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod repdiag;
pub mod rsk;
pub mod series;
pub mod stable;
pub mod suite;
pub mod tableau;

pub use error::{Error, Result};
pub use linalg::{QMatrix, Q};
pub use partition::{Cell, Partition, SkewShape};
pub use perm::{Permutation, Transposition};
pub use poly::{MultiPoly, PolyT};
pub use series::TruncSeries;
pub use tableau::{enumerate_ssyt, schur, Filling, Tableau, Word};
