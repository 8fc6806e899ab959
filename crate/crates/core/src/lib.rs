//! Snow leopard permutations and their threads.

pub mod aztec;
pub mod baxter;
pub mod cli;
pub mod entangle;
pub mod error;
mod memo;
pub mod motzkin;
pub mod paths;
pub mod patterns;
pub mod perm;
pub mod threads;
pub mod verify;

pub use error::{Error, Result};
pub use perm::Perm;
