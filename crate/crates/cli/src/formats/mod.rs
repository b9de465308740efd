//! Serialized views of the core objects: JSON (all commands), DOT (posets),
//! CSV (enumerations and chains).

pub mod csv;
pub mod dot;
pub mod json;
