pub mod error;
pub mod group_algebra;
pub mod hecke;
pub mod partition;
pub mod permutation;
pub mod rational;
pub mod symfunc;
pub mod jack;
pub mod averages;
pub mod series;
pub mod weingarten;
pub mod haar_mc;
pub mod verify;
