//! Bounded deterministic search for root-group unipotents.
