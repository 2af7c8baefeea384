//! Adams E2 machinery: minimal free resolutions over the Steenrod algebra,
//! classical and motivic cobar complexes as independent oracles, t-torsion
//! bookkeeping over GF(2)[t], and chart emission.

mod chart;
mod cobar;
mod emit;
mod resolution;
mod tau;

pub use chart::{ext_chart, h_multiplication_lines, Dot, ExtChart, HLine};
pub use cobar::{classical_cobar, motivic_cobar, ClassicalCobar, MotivicCobar};
pub use emit::{emit_chart, ChartFormat};
pub use resolution::{minimal_resolution, Budget, FreeResolutionColumn};
pub use tau::{
    homology_generators, tau_free_rank_in_stem, tau_homology, tau_homology_block,
    TauModuleDescriptor,
};
