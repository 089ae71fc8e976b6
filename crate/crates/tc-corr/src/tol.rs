//! Numerical tolerances used across the crate, collected in one place so that
//! implementation and tests agree on what "zero" means.

/// Slack allowed when validating density matrices: Hermiticity residual,
/// trace deviation from one, and negative-eigenvalue excursions.
pub const DENSITY_TOL: f64 = 1e-10;

/// Eigenvalues below this are treated as exactly zero inside entropies
/// (the `x log x -> 0` convention, kept away from the singular derivative).
pub const EIG_CLIP: f64 = 1e-12;

/// An eigenvalue of a nominal positive-semidefinite matrix below this value
/// is a genuine numerical failure rather than round-off.
pub const NEG_EIG_ERR: f64 = -1e-8;

/// Unitarity residual allowed for manifold propagators, `max |UU+ - I|`.
pub const UNITARITY_TOL: f64 = 1e-12;

/// Relative clip (w.r.t. the largest eigenvalue) applied to the spin-flip
/// product spectrum in the Wootters route.  Round-off in the eigensolver is
/// amplified by the square root near zero; clipping keeps the general route
/// in agreement with the X-state closed form to well below 1e-9.
pub const SPINFLIP_CLIP_REL: f64 = 1e-13;

/// Concurrence values (and pre-threshold concurrence arguments) below this
/// magnitude count as zero when classifying collapse/revival structure.
pub const ZERO_CONCURRENCE: f64 = 1e-12;

/// Dimensionless-time resolution to which detected features are refined.
pub const TAU_TOL: f64 = 1e-10;

/// Angle tolerance of the brute-force measurement-basis refinement.
pub const ANGLE_TOL: f64 = 1e-6;

/// Worst-case error of the two-basis X-state discord minimum when neither
/// exactness condition holds (Huang's bound for the Ali-Rau-Alber formula).
pub const HUANG_ERROR_BOUND: f64 = 0.0021;

/// Completeness tolerance for a measurement: `max |P0 + P1 - I|`.
pub const PROJECTOR_COMPLETE_TOL: f64 = 1e-12;

/// Measurement outcomes with probability below this floor contribute nothing
/// to conditional entropies.
pub const MEAS_PROB_FLOOR: f64 = 1e-12;

/// Slack used when evaluating the exactness inequalities for the two-basis
/// discord minimum, so that exact-equality cases (Bell, Werner) land on the
/// "holds" side despite round-off.
pub const CHEN_HUANG_SLACK: f64 = 1e-12;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_are_ordered_sanely() {
        assert!(EIG_CLIP < DENSITY_TOL);
        assert!(DENSITY_TOL < -NEG_EIG_ERR);
        assert!(TAU_TOL < ANGLE_TOL);
        assert!(ZERO_CONCURRENCE < HUANG_ERROR_BOUND);
        assert!(UNITARITY_TOL > 0.0 && PROJECTOR_COMPLETE_TOL > 0.0);
        assert!(MEAS_PROB_FLOOR > 0.0 && CHEN_HUANG_SLACK > 0.0);
        assert!(SPINFLIP_CLIP_REL > f64::EPSILON);
    }
}
