//! Symmetric matrices with a prescribed minimal polynomial over fields of
//! characteristic two.

pub mod descriptor;
pub mod error;
pub mod ext;
pub mod field;
pub mod forms;
pub mod json;
pub mod local;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod realize;
pub mod transfer;

pub use descriptor::FieldDescriptor;
pub use error::{Error, Result};
pub use field::{BinaryField, Field, Frac, RationalFunctionField, TextField};
pub use matrix::Matrix;
pub use poly::Poly;
