//! Quantum discord and conditional-entropy landscapes for two-qubit
//! XXZ-symmetric X states.
//!
//! The crate computes the piecewise discord Q = min{Q_0, Q_{θ*}, Q_{π/2}}
//! on the tetrahedron of physical (s1, c1, c3) states, locates the phase
//! boundaries (branch crossings and the endpoint bifurcation conditions
//! S''_cond(0) = 0, S''_cond(π/2) = 0), classifies the conditional-entropy
//! profiles into types I–V, maps states to thermal XXZ spin dimers, and
//! stress-tests the unimodality conjecture for the underlying
//! one-variable entropy functions.
//!
//! Every closed form is cross-checked against an explicit von Neumann
//! measurement oracle ([`oracle`]) that works on the full density matrix.
//!
//! Start with the `examples/` directory; each example is a runnable tour of
//! one capability (`cargo run --release --example eval_point`). The same
//! functionality is scriptable through the thin `qdiscord` binary.
//!
//! ```
//! use qdiscord::{classify_shape, discord, Branch, ShapeType, XxzState};
//!
//! // a state inside the narrow band where the optimal measurement angle
//! // detaches from the endpoints
//! let state = XxzState::new(0.473267, 0.14, 0.34)?;
//! let result = discord(&state)?;
//! assert_eq!(result.branch, Branch::QThetaStar);
//! assert!(result.theta_opt > 0.0 && result.theta_opt < std::f64::consts::FRAC_PI_2);
//! assert_eq!(classify_shape(&state)?, ShapeType::IV);
//! # Ok::<(), qdiscord::Error>(())
//! ```

pub mod branches;
pub mod cli;
pub mod dimer;
pub mod entropy;
pub mod error;
pub mod optimizer;
pub mod oracle;
pub mod phase;
pub mod sample;
pub mod search;
pub mod state;
pub mod unimodal;

pub use entropy::{h2, h4, EntropyUnit, EntropyValue};
pub use error::{Error, Result};
pub use state::{
    bell_probs, fidelity, validate_general_x, BellDiagonalState, DensityMatrix4, GeneralXState,
    XxzState,
};

pub use branches::{
    edge_discord, luo_discord, q0, q_pi2, s_cond, s_cond_d2_at_0, s_cond_d2_at_pi2,
};
pub use optimizer::{
    classify_shape, discord, find_interior_extremum, pseudo_discord, Branch, DiscordResult,
    ExtremumKind, ExtremumReport, ShapeType,
};
pub use oracle::{
    conditional_entropy_oracle, discord_oracle, post_measurement_ensemble, MeasurementDirection,
    PostMeasurementEnsemble,
};
pub use phase::{
    deviation_curve, slice_scan, solve_bifurcation, solve_crossing, theta_star_volume,
    BoundaryKind, BoundarySolution, DeviationSample, PhaseKind, PhaseLabel, ScanLine, SliceMap,
    VolumeEstimate,
};

pub use dimer::{dimer_energies, dimer_to_state, state_to_dimer, DimerParams};
pub use sample::{sample_general_x, sample_tetrahedron};
pub use unimodal::{conjecture_trial, count_interior_extrema, f1, f2, AppendixFn, AppendixParams};
