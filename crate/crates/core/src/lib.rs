pub mod cli;
pub mod error;
pub mod exact_eval;
pub mod expansions;
pub mod methods;
pub mod sample_size;
pub mod special_fn;

pub use error::{Error, Result};
