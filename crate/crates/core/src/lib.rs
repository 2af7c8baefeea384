//! Computations around the 2-primary stable homotopy groups of spheres:
//! Steenrod algebra arithmetic (classical and C-motivic), Adams E2 charts
//! by minimal resolution and by the cobar complex, closed-form image-of-J
//! groups, and a curated table of the stable stems through dimension 90.

pub mod error;
pub mod ext;
pub mod f2;
pub mod imj;
pub mod motivic;
pub mod steenrod;
pub mod stems;
