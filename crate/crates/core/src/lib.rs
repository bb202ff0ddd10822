//! Posets with inconsistent pairs, their rooted CAT(0) cubical complexes
//! and crossing complexes.

pub mod coloring;
pub mod cubical;
pub mod error;
pub mod io;
pub mod limits;
pub mod pip;
pub mod poly;
pub mod set;
pub mod simplicial;
pub mod verify;

pub use error::{Error, Result};
pub use pip::{random_pip, ChainCover, CombineMode, Direction, Extremal, Pip, SubPip};
pub use set::ElementSet;
pub use simplicial::{Graph, SimplicialComplex};
pub use cubical::{AbstractCubicalComplex, CubicalComplexP, CubicalFace};
pub use poly::{IntMultiPolynomial, IntPolynomial, MultiPolynomial, Polynomial};
pub use coloring::{CubicalColoring, SimplicialColoring};
