pub mod cli;
pub mod constructors;
pub mod document;
pub mod error;
pub mod grouplikes;
pub mod integrals;
pub mod linalg;
pub mod scalar;
pub mod search;
pub mod semisimplicity;
pub mod twisting;
pub mod validate;
pub mod wha;
pub mod zoo;
