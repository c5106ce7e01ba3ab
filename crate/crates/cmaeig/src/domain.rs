//! Reinhardt profile geometry. (in progress)
pub struct ReinhardtProfile;
pub struct DeformationPath;
