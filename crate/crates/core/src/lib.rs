pub mod characterize;
pub mod christoffel;
pub mod cli;
pub mod factor_index;
pub mod word;
pub mod wordgen;
