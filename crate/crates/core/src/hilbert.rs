//! The 64-dimensional Hilbert space of six spin-1/2 sites on a hexagon,
//! the exchange operators of the three coupling classes, the full
//! Hamiltonian and the 60-degree rotation operator.
//!
//! Encoding: basis state `b` stores the spin of site `k+1` in bit `k`
//! (little-endian site order), with bit value 1 meaning up (+1/2).

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

/// Number of spin sites on the hexagon.
pub const N_SITES: usize = 6;
/// Hilbert-space dimension, 2^6.
pub const DIM: usize = 64;

/// One of the 64 computational spin configurations, encoded as a 6-bit word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisState(u8);

impl BasisState {
    pub fn new(bits: u8) -> Result<Self> {
        if bits as usize >= DIM {
            return Err(Error::Domain(format!("basis state {bits} out of range 0..64")));
        }
        Ok(Self(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// True when the spin at `site` (1-based) points up.
    pub fn is_up(self, site: usize) -> bool {
        debug_assert!((1..=N_SITES).contains(&site));
        self.0 >> (site - 1) & 1 == 1
    }

    /// Total magnetization S^z_T = (n_up - n_down) / 2, an integer in [-3, 3].
    pub fn magnetization(self) -> i8 {
        self.0.count_ones() as i8 - 3
    }

    /// Image under the 60-degree counter-clockwise rotation:
    /// site i of the rotated state holds the spin of site i+1.
    pub fn rotated(self) -> BasisState {
        BasisState((self.0 >> 1 | (self.0 & 1) << 5) & 0x3f)
    }
}

/// Exchange couplings (J1, J2, J3) with J1 fixed to 1 as the energy unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingParams {
    j1: f64,
    j2: f64,
    j3: f64,
}

impl CouplingParams {
    /// Couplings in units of J1. Antiferromagnetic only: j2, j3 >= 0.
    pub fn new(j2: f64, j3: f64) -> Result<Self> {
        if !j2.is_finite() || !j3.is_finite() {
            return Err(Error::InvalidParams(format!("non-finite couplings ({j2}, {j3})")));
        }
        if j2 < 0.0 || j3 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "antiferromagnetic couplings required, got j2 = {j2}, j3 = {j3}"
            )));
        }
        Ok(Self { j1: 1.0, j2, j3 })
    }

    /// Reduce couplings given in Kelvin to units of J1.
    pub fn from_kelvin(j1_k: f64, j2_k: f64, j3_k: f64) -> Result<Self> {
        if !(j1_k > 0.0) {
            return Err(Error::InvalidParams(format!("J1 must be positive, got {j1_k} K")));
        }
        Self::new(j2_k / j1_k, j3_k / j1_k)
    }

    pub fn j1(&self) -> f64 {
        self.j1
    }

    pub fn j2(&self) -> f64 {
        self.j2
    }

    pub fn j3(&self) -> f64 {
        self.j3
    }
}

/// The three topologically distinct pair classes of the hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    /// Nearest neighbors, ring bonds.
    Nn,
    /// Next-nearest neighbors, the two inscribed triangles.
    Nnn,
    /// Further (diagonal) neighbors, opposite sites.
    Fn,
}

impl PairClass {
    pub const ALL: [PairClass; 3] = [PairClass::Nn, PairClass::Nnn, PairClass::Fn];

    /// Site-index pairs (1-based) belonging to this class.
    pub fn pairs(self) -> &'static [(usize, usize)] {
        match self {
            PairClass::Nn => &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)],
            PairClass::Nnn => &[(1, 3), (2, 4), (3, 5), (4, 6), (5, 1), (6, 2)],
            PairClass::Fn => &[(1, 4), (2, 5), (3, 6)],
        }
    }

    /// Representative pair used when the rotational symmetry makes all
    /// pairs of the class equivalent.
    pub fn representative(self) -> (usize, usize) {
        self.pairs()[0]
    }

    /// Class of an unordered site pair, by ring distance.
    pub fn of_pair(i: usize, j: usize) -> Result<PairClass> {
        if i == j || !(1..=N_SITES).contains(&i) || !(1..=N_SITES).contains(&j) {
            return Err(Error::InvalidSites { i, j });
        }
        let d = i.abs_diff(j);
        Ok(match d.min(N_SITES - d) {
            1 => PairClass::Nn,
            2 => PairClass::Nnn,
            _ => PairClass::Fn,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            PairClass::Nn => "NN",
            PairClass::Nnn => "NNN",
            PairClass::Fn => "FN",
        }
    }
}

impl std::fmt::Display for PairClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for PairClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nn" => Ok(PairClass::Nn),
            "nnn" => Ok(PairClass::Nnn),
            "fn" => Ok(PairClass::Fn),
            other => Err(Error::Domain(format!("unknown pair class '{other}'"))),
        }
    }
}

/// Rotation character of an eigenstate: smallest number of 60-degree
/// rotations `p` after which the state reproduces itself up to the
/// parity sign `lambda_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationLabel {
    pub p: u8,
    pub lambda_r: i8,
}

/// Matrix of the exchange operator S_i . S_j in the full 64-dim basis.
///
/// Diagonal entries are +1/4 (aligned pair) or -1/4 (anti-aligned pair);
/// anti-aligned states additionally connect to the double-flipped state
/// with amplitude 1/2 through (S+_i S-_j + S-_i S+_j) / 2.
pub fn pair_coupling_matrix(i: usize, j: usize) -> Result<DMatrix<f64>> {
    if i == j || !(1..=N_SITES).contains(&i) || !(1..=N_SITES).contains(&j) {
        return Err(Error::InvalidSites { i, j });
    }
    let (bi, bj) = (1u8 << (i - 1), 1u8 << (j - 1));
    let mut m = DMatrix::zeros(DIM, DIM);
    for b in 0..DIM {
        let bits = b as u8;
        if (bits & bi != 0) == (bits & bj != 0) {
            m[(b, b)] = 0.25;
        } else {
            m[(b, b)] = -0.25;
            m[(b, (bits ^ (bi | bj)) as usize)] = 0.5;
        }
    }
    Ok(m)
}

/// Sum of the pair operators of one class with unit coupling.
pub fn class_coupling_matrix(class: PairClass) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(DIM, DIM);
    for &(i, j) in class.pairs() {
        m += pair_coupling_matrix(i, j).expect("class pairs are valid");
    }
    m
}

/// H = J1 * sum_NN + J2 * sum_NNN + J3 * sum_FN, real symmetric, traceless.
pub fn build_hamiltonian(params: &CouplingParams) -> DMatrix<f64> {
    let mut h = class_coupling_matrix(PairClass::Nn) * params.j1();
    h += class_coupling_matrix(PairClass::Nnn) * params.j2();
    h += class_coupling_matrix(PairClass::Fn) * params.j3();
    h
}

/// All-to-all unit-coupling operator H_P = sum over all 15 pairs of
/// S_i . S_j: the Hamiltonian at the point P with J1 = 1, and the
/// correlation sum entering the susceptibility witness.
pub fn all_to_all_matrix() -> DMatrix<f64> {
    let mut m = class_coupling_matrix(PairClass::Nn);
    m += class_coupling_matrix(PairClass::Nnn);
    m += class_coupling_matrix(PairClass::Fn);
    m
}

/// Total-spin-squared operator S_T^2 = 2 H_P + (3/4) N I.
pub fn total_spin_squared() -> DMatrix<f64> {
    let mut m = all_to_all_matrix() * 2.0;
    for b in 0..DIM {
        m[(b, b)] += 0.75 * N_SITES as f64;
    }
    m
}

/// Permutation matrix of the 60-degree rotation
/// R |S1 S2 S3 S4 S5 S6> = |S2 S3 S4 S5 S6 S1>.
pub fn rotation_matrix() -> DMatrix<f64> {
    let mut r = DMatrix::zeros(DIM, DIM);
    for b in 0..DIM {
        let dst = BasisState(b as u8).rotated().bits() as usize;
        r[(dst, b)] = 1.0;
    }
    r
}

/// Apply the rotation operator to a state vector without building the matrix.
pub fn apply_rotation(v: &DVector<f64>) -> DVector<f64> {
    let mut out = DVector::zeros(DIM);
    for b in 0..DIM {
        out[BasisState(b as u8).rotated().bits() as usize] = v[b];
    }
    out
}

/// Classify a normalized state under rotation: the smallest p in 1..=6
/// with R^p v = lambda_r v for lambda_r = +-1 within `tol`. Returns `None`
/// for vectors that do not classify (possible only inside degenerate
/// subspaces where a numeric eigenbasis mixes symmetry sectors).
pub fn classify_rotation(v: &DVector<f64>, tol: f64) -> Result<Option<RotationLabel>> {
    let norm = v.norm();
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::NotNormalized(norm));
    }
    let mut rotated = v.clone();
    for p in 1..=N_SITES as u8 {
        rotated = apply_rotation(&rotated);
        for lambda_r in [1i8, -1i8] {
            let dev = (0..DIM)
                .map(|b| (rotated[b] - f64::from(lambda_r) * v[b]).abs())
                .fold(0.0f64, f64::max);
            if dev <= tol {
                return Ok(Some(RotationLabel { p, lambda_r }));
            }
        }
    }
    Ok(None)
}

/// Basis-state indices of the magnetization sector with `n_up` up spins,
/// in ascending order.
pub fn sector_basis(n_up: usize) -> Vec<usize> {
    (0..DIM).filter(|&b| (b as u8).count_ones() as usize == n_up).collect()
}

/// Collective spin operator M_z = sum_i S^z_i (diagonal).
pub fn magnetization_z() -> DMatrix<f64> {
    DMatrix::from_fn(DIM, DIM, |r, c| {
        if r == c {
            f64::from(BasisState(r as u8).magnetization())
        } else {
            0.0
        }
    })
}

/// Collective spin operator M_x = sum_i S^x_i (real symmetric).
pub fn magnetization_x() -> DMatrix<f64> {
    let mut m = DMatrix::zeros(DIM, DIM);
    for b in 0..DIM {
        for site in 0..N_SITES {
            m[(b ^ (1 << site), b)] = 0.5;
        }
    }
    m
}

/// Real antisymmetric A with M_y = i A: ⟨b^bit|S^y|b⟩ is +i/2 for an
/// up-to-down flip and -i/2 for down-to-up.
pub fn magnetization_y_imag() -> DMatrix<f64> {
    let mut a = DMatrix::zeros(DIM, DIM);
    for b in 0..DIM {
        for site in 0..N_SITES {
            let flipped = b ^ (1 << site);
            a[(flipped, b)] = if b >> site & 1 == 1 { 0.5 } else { -0.5 };
        }
    }
    a
}
