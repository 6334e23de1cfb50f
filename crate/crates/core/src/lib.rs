//! Exact diagonalization of the frustrated spin-1/2 J1-J2-J3 Heisenberg
//! hexagon, with thermal-state concurrence and entanglement witnesses
//! (magnetic susceptibility, GHZ fidelity, internal energy / entanglement
//! gap) built on top of the spectrum.
//!
//! All energies are in units of J1, temperatures in units of k_B T / J1,
//! and susceptibilities in units of (g mu_B)^2 / J1.

pub mod entanglement;
pub mod hilbert;
pub mod scan;
pub mod separable;
pub mod spectrum;
pub mod thermal;

pub use entanglement::{
    concurrence, frustration_degree, ghz_fidelity, pair_critical_temperature,
    susceptibility_critical_temperature, thermal_concurrence, witness_report, ConcurrenceValue,
    WitnessReport,
};
pub use hilbert::{
    build_hamiltonian, pair_coupling_matrix, rotation_matrix, BasisState, CouplingParams,
    PairClass, RotationLabel,
};
pub use separable::{
    gap_report, gap_temperature, minimize_separable, product_state_vector, separable_energy,
    GapReport, GapTemperature, ProductStateAngles, SeparableMinimum,
};
pub use spectrum::{
    analytic_eigenvalues, diagonalize, ground_region, EigenPair, GroundRegion, RegionTag, Spectrum,
};
pub use thermal::{
    internal_energy, reduce_to_pair, susceptibility, thermal_density, DensityMatrix,
    PairDensityMatrix, Temperature,
};

/// Errors reported by the engine.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid site pair ({i}, {j}): sites are numbered 1..=6 and must differ")]
    InvalidSites { i: usize, j: usize },
    #[error("invalid coupling parameters: {0}")]
    InvalidParams(String),
    #[error("state vector must have unit norm (got norm {0})")]
    NotNormalized(f64),
    #[error("matrix is not positive semidefinite (smallest eigenvalue {0:.3e})")]
    NotPositiveSemidefinite(f64),
    #[error("negative radicand in {name}: {value:.3e}")]
    NegativeRadicand { name: &'static str, value: f64 },
    #[error("susceptibility is defined for t > 0 only")]
    ZeroTemperature,
    #[error("{0}")]
    Domain(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
