//! The character ring: partitions, virtual symmetric functions, and the
//! bigraded FB-characters on which super-plethysm, `sym_exp` and `sym_log` act.

mod character;
mod partition;
mod symfunc;
pub mod tables;

pub use character::{tensor_power_character, FBCharacter, TriDegree};
pub use partition::{factorial, partitions, Partition};
pub use symfunc::{Basis, SymFunc};
