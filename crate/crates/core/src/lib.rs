//! Exact computations for graded braided Hopf algebras built from a datum of
//! lattice characters and torus points: the free braided algebra, the
//! quantum shuffle algebra, the symmetrizer between them, and the graded
//! dimensions of its image.

pub mod datum;
pub mod hilbert;
pub mod scalar;
pub mod shapovalov;
pub mod sl2;
pub mod words;

pub use datum::{BraidingMatrix, Character, Datum, QMatrix, TorusPoint};
pub use hilbert::{GrowthKind, GrowthParams, GrowthVerdict, HilbertTable};
pub use scalar::{Field, Scalar};
pub use shapovalov::{RankReport, SymMatrix};
pub use words::{Element, MultiDegree, Word};
