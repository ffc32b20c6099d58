//! Concrete, enumerable models of graded section rings.

pub mod abstract_model;
pub mod forms;
pub mod plane;
pub mod toric;

pub use abstract_model::AbstractModel;
pub use forms::{BinaryForm, HomogeneousForm};
pub use plane::PlaneModel;
pub use toric::{HilbertData, ToricModel};
