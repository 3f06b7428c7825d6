//! Library half of the `majordex` command: the poset expression language,
//! JSON poset files, and the command implementations.

pub mod commands;
pub mod expr;
pub mod io;
