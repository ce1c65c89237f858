//! Vogan and double Vogan superdiagrams of basic classical Lie superalgebras.

pub mod catalog;
pub mod double;
pub mod dynkin;
pub mod error;
pub mod family;
pub mod labels;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod render;
pub mod roots;
pub mod vogan;

pub use error::{Error, Result};
pub use family::{FamilyId, FamilyTag};
pub use rational::Q;
