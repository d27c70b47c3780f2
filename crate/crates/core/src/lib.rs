pub mod families;
pub mod field;
pub mod graph;
pub mod numtheory;
pub mod spectrum;
pub mod theorems;
