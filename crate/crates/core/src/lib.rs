pub mod cli;
pub mod exactla;
pub mod hecke;
pub mod hsym;
pub mod qscalar;
pub mod realg;
pub mod spectral;
pub mod verify;
