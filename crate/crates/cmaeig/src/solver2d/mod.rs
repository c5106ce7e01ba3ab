//! 2D reduced eigensolver. (in progress)
pub struct Grid2DSolution;
