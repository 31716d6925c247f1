use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("input outside the effective domain: {0}")]
    OutsideDomain(String),

    #[error("numeric conjugate unbounded at search radius {radius}")]
    UnboundedConjugate { radius: f64 },

    #[error("invalid parameter: {0}")]
    Invalid(String),

    #[error("power bound |dphi/dt| <= b(phi + c(1+|x|)) violated at t={t}, x={x:?}")]
    PowerBoundViolated { t: f64, x: Vec<f64> },

    #[error("line searches stagnated after {iterations} iterations (best value {best_value})")]
    Stagnation { iterations: usize, best_value: f64 },

    #[error("minimizing-movements step {step} failed: {reason}")]
    StepFailed { step: usize, reason: String },

    #[error("trajectory leaves the spatial domain at t={t}: x={x}")]
    OutOfDomain { t: f64, x: f64 },

    #[error("velocity reconstruction hit vacuum at t={t} (mass {mass} below floor)")]
    ReconstructionDegenerate { t: f64, mass: f64 },

    #[error("no member of the dual family passed the feasibility tolerance (best violation {violation})")]
    InfeasibleFamily { violation: f64 },
}
