//! Exact dynamics of quantum correlations for two two-level atoms coupled to a
//! single cavity mode (the two-atom Tavis-Cummings model at resonance).
//!
//! The total excitation number is conserved, so the evolution decomposes into
//! 4x4 blocks ("manifolds") labelled by an integer `n >= 1`.  Within a manifold
//! the propagator is known in closed form, the field can be traced out exactly
//! (the reduced two-qubit state is an X state with vanishing outer coherence),
//! and both the Wootters concurrence and the quantum discord follow from small
//! dense linear algebra.  On top of that sit the interesting observables:
//! collapse/revival times of entanglement, slope discontinuities ("kinks") of
//! concurrence and discord, and the critical initial-condition parameters at
//! which those features appear, merge, or vanish.
//!
//! Start with [`families::FamilySpec`] + [`dynamics::evolve`] +
//! [`reduction::partial_trace_field`] for raw orbits, [`correlations`] for the
//! quantifiers, [`features`] for detectors and solvers, and [`cli`] for the
//! sweep/export pipeline behind the `tccorr` binary.  The `examples/`
//! directory shows one runnable program per capability.

pub mod cli;
pub mod correlations;
pub mod dynamics;
pub mod error;
pub mod families;
pub mod features;
pub mod qmatrix;
pub mod reduction;
mod solve;
pub mod tol;

pub use cli::{
    emit, run_gate, run_sweep, Column, CorrelationPoint, GateSchedule, GateSegment, OutputFormat,
    SweepConfig,
};
pub use correlations::{
    concurrence_wootters, concurrence_x, conditional_entropy_measured, discord_bruteforce,
    discord_x, mutual_information, Branch, BruteForceGrid, DiscordResult,
};
pub use dynamics::{build_unitary, evolve, ManifoldDensity, ManifoldIndex, TcParams};
pub use error::{Error, Result};
pub use families::{closed_form, make_state, ClosedForm, CriticalAlphaKind, Family, FamilySpec};
pub use features::{
    critical_alpha, find_collapse_revival, find_kinks, solve_alpha_plateau,
    solve_alpha_zero_discord, FeatureReport, Kink, KinkKind,
};
pub use qmatrix::{eig_hermitian, von_neumann_entropy, von_neumann_entropy2, CMat2, CMat4};
pub use reduction::{partial_trace_field, TwoQubitX};
