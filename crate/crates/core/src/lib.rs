pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod error;
pub mod identity;
pub mod linalg;
pub mod operators;
pub mod quotients;
pub mod samples;
