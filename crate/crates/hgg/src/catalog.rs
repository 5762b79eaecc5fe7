//! Degree-six enumeration and classification of symplectic pairs.
