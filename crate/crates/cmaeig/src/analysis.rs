//! Certification on computed solutions. (in progress)
pub struct SpectralReport;
