pub mod algcore;
pub mod dinghom;
pub mod error;
pub mod fuzz;
pub mod homalg;
pub mod linfield;
pub mod modrep;
pub mod par;
pub mod rings;
pub mod trimat;

pub use error::{Error, Result};
