//! Ball-case eigenpairs via radial shooting. (in progress)
pub struct RadialSolution;
