//! Finite automata, rational transductions and linear languages over
//! alphabets with formal inverses, with the machinery to pass between
//! prefix-closed combings with uniqueness and languages of free generators
//! with significant letters.

pub mod error;
pub mod fixtures;
pub mod format;
mod graph;
pub mod group;
pub mod linear;
pub mod regular;
pub mod structures;
pub mod transduce;
pub mod words;

pub use error::{Error, Result};
pub use group::{CayleyBall, Element, FtMode, GroupOracle, Metric};
pub use linear::{LinearLanguage, Mode};
pub use regular::{CombineOp, Dfa, Nfa};
pub use transduce::{Tape, Transducer};
pub use words::{Alphabet, CenterDistance, Letter, Word};
