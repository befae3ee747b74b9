mod error;
pub mod chartab;
pub mod cli;
pub mod clifford;
pub mod coxeter;
pub mod elliptic;
pub mod group;
pub mod linalg;
pub mod phi;
pub mod points;
pub mod reference;
pub mod report;
pub mod rootsys;
pub mod scalars;
pub mod selftest;
pub mod system;

pub use error::Error;
