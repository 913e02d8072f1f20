pub mod cellmap;
pub mod cli;
pub mod complex;
pub mod document;
pub mod dot;
pub mod dual;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod homology;
pub mod link;
pub mod pi1;
pub mod rotation;
pub mod search;
pub mod skeleton;
pub mod surface;
pub mod trace;
pub mod verdict;
pub mod words;
