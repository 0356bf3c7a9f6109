//! Pictures between skew diagrams, Littlewood-Richardson crystals, and the
//! RSK-type bijection
//!
//! ```text
//! P(κ¹, κ²) ↔ S(κ¹, κ²) ↔ W(κ¹, κ²) ↔ ⨆_µ B(µ)^{ν¹}_{λ¹} × B(µ)^{ν²}_{λ²}
//! ```
//!
//! built from column-bumping RSK and the type A crystal structure on
//! tensor words, along with the exhaustive checks that back it.

pub mod correspondence;
pub mod crystal;
pub mod error;
pub mod pictures;
pub mod rsk;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use correspondence::{lr_coefficient, CorrespondenceContext, CrystalPair, LrCount};
pub use crystal::{CrystalOp, EquivMode, LrWitness, TensorWord};
pub use error::{Error, Result};
pub use pictures::Picture;
pub use rsk::{BumpOutcome, TwoRowedArray};
pub use shapes::{Cell, Composition, Partition, SkewShape};
pub use tableaux::{SkewTableau, Word};

/// Size caps for the exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub tableau_cells: usize,
    pub picture_cells: usize,
    pub bfs_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tableau_cells: tableaux::DEFAULT_MAX_CELLS,
            picture_cells: pictures::DEFAULT_MAX_CELLS,
            bfs_len: crystal::DEFAULT_BFS_MAX_LEN,
        }
    }
}

impl Limits {
    /// Same cap for tableau and picture enumeration.
    pub fn with_max_cells(self, cells: usize) -> Self {
        Limits { tableau_cells: cells, picture_cells: cells, ..self }
    }
}
