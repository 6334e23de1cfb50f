//! Spectrum of the hexagon Hamiltonian: closed-form energies for all 64
//! eigenstates with their (S_T, S^z_T, lambda_r, p) labels, a per-sector
//! numeric eigensolver checked against them, and the ground-state phase
//! diagram (regions R1 / R2, line L, point P).

use nalgebra::{DMatrix, DVector};

use crate::hilbert::{
    self, build_hamiltonian, classify_rotation, sector_basis, total_spin_squared, CouplingParams,
    RotationLabel, DIM, N_SITES,
};
use crate::{Error, Result};

/// One row of the closed-form energy table.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticLevel {
    /// Conventional state index, 1..=64.
    pub index: u8,
    pub energy: f64,
    pub s_total: u8,
    pub sz_total: i8,
    pub lambda_r: i8,
    pub p: u8,
}

fn radical(name: &'static str, radicand: f64) -> Result<f64> {
    if radicand < -1e-12 {
        return Err(Error::NegativeRadicand { name, value: radicand });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// The three radicals entering the closed-form energies.
pub fn analytic_radicals(params: &CouplingParams) -> Result<(f64, f64, f64)> {
    let (j1, j2, j3) = (params.j1(), params.j2(), params.j3());
    let d1 = radical(
        "d1",
        5.0 * j1 * j1 + 9.0 * j2 * j2 + 4.0 * j3 * j3 - 10.0 * j1 * j2 - 8.0 * j2 * j3,
    )?;
    let d2 = radical(
        "d2",
        17.0 * j1 * j1 + 9.0 * j2 * j2 + 16.0 * j3 * j3
            - 10.0 * j1 * j2
            - 24.0 * j1 * j3
            - 8.0 * j2 * j3,
    )?;
    let d3 = radical(
        "d3",
        13.0 * j1 * j1 + 9.0 * j2 * j2 + 4.0 * j3 * j3 - 18.0 * j1 * j2 - 8.0 * j1 * j3,
    )?;
    Ok((d1, d2, d3))
}

/// All 64 closed-form energy eigenvalues with their quantum-number labels,
/// ordered by the conventional state index.
pub fn analytic_eigenvalues(params: &CouplingParams) -> Result<Vec<AnalyticLevel>> {
    let (j1, j2, j3) = (params.j1(), params.j2(), params.j3());
    let (d1, d2, d3) = analytic_radicals(params)?;

    let septet = 1.5 * (j1 + j2 + 0.5 * j3);
    let q1 = j1 - 0.25 * j3;
    let q2 = 0.75 * j3;
    let q3 = 0.5 * (-j1 + 3.0 * j2 - 0.5 * j3);
    let t1p = -j1 - 0.25 * j3 + 0.5 * d1;
    let t1m = -j1 - 0.25 * j3 - 0.5 * d1;
    let t2 = -j1 - 0.25 * j3;
    let t3 = 0.5 * (j1 - 3.0 * j2 - 0.5 * j3);
    let t4p = -0.25 * (j1 + 3.0 * j2 + j3 - d2);
    let t4m = -0.25 * (j1 + 3.0 * j2 + j3 + d2);
    let s1 = 1.5 * (-j1 - j2 + 0.5 * j3);
    let s2 = -0.5 * (j1 + 3.0 * j2 + 0.5 * j3);
    let s3p = -j1 - 1.25 * j3 + 0.5 * d3;
    let s3m = -j1 - 1.25 * j3 - 0.5 * d3;

    // (energy, S_T, S^z_T, lambda_r, p) in state-index order.
    let rows: [(f64, u8, i8, i8, u8); DIM] = [
        (septet, 3, 3, 1, 1), // E1
        (septet, 3, 2, 1, 1), // E2
        (q1, 2, 2, -1, 3),    // E3
        (q1, 2, 2, -1, 3),    // E4
        (q3, 2, 2, -1, 1),    // E5
        (q2, 2, 2, 1, 3),     // E6
        (q2, 2, 2, 1, 3),     // E7
        (septet, 3, 1, 1, 1), // E8
        (q1, 2, 1, -1, 3),    // E9
        (q1, 2, 1, -1, 3),    // E10
        (q2, 2, 1, 1, 3),     // E11
        (q2, 2, 1, 1, 3),     // E12
        (q3, 2, 1, -1, 1),    // E13
        (t1p, 1, 1, 1, 1),    // E14
        (t1m, 1, 1, 1, 1),    // E15
        (t2, 1, 1, -1, 3),    // E16
        (t2, 1, 1, -1, 3),    // E17
        (t3, 1, 1, -1, 1),    // E18
        (t4p, 1, 1, 1, 3),    // E19
        (t4m, 1, 1, 1, 3),    // E20
        (t4p, 1, 1, 1, 3),    // E21
        (t4m, 1, 1, 1, 3),    // E22
        (septet, 3, 0, 1, 1), // E23
        (q1, 2, 0, -1, 3),    // E24
        (q1, 2, 0, -1, 3),    // E25
        (q2, 2, 0, 1, 3),     // E26
        (q2, 2, 0, 1, 3),     // E27
        (q3, 2, 0, -1, 1),    // E28
        (t1p, 1, 0, 1, 1),    // E29
        (t1m, 1, 0, 1, 1),    // E30
        (t2, 1, 0, -1, 3),    // E31
        (t2, 1, 0, -1, 3),    // E32
        (t3, 1, 0, -1, 1),    // E33
        (t4p, 1, 0, 1, 3),    // E34
        (t4m, 1, 0, 1, 3),    // E35
        (t4p, 1, 0, 1, 3),    // E36
        (t4m, 1, 0, 1, 3),    // E37
        (s1, 0, 0, 1, 1),     // E38
        (s2, 0, 0, -1, 3),    // E39
        (s2, 0, 0, -1, 3),    // E40
        (s3p, 0, 0, -1, 1),   // E41
        (s3m, 0, 0, -1, 1),   // E42
        (septet, 3, -1, 1, 1), // E43
        (q1, 2, -1, -1, 3),   // E44
        (q1, 2, -1, -1, 3),   // E45
        (q2, 2, -1, 1, 3),    // E46
        (q2, 2, -1, 1, 3),    // E47
        (q3, 2, -1, -1, 1),   // E48
        (t1p, 1, -1, 1, 1),   // E49
        (t1m, 1, -1, 1, 1),   // E50
        (t2, 1, -1, -1, 3),   // E51
        (t2, 1, -1, -1, 3),   // E52
        (t3, 1, -1, -1, 1),   // E53
        (t4p, 1, -1, 1, 3),   // E54
        (t4m, 1, -1, 1, 3),   // E55
        (t4p, 1, -1, 1, 3),   // E56
        (t4m, 1, -1, 1, 3),   // E57
        (septet, 3, -2, 1, 1), // E58
        (q1, 2, -2, -1, 3),   // E59
        (q1, 2, -2, -1, 3),   // E60
        (q3, 2, -2, -1, 1),   // E61
        (q2, 2, -2, 1, 3),    // E62
        (q2, 2, -2, 1, 3),    // E63
        (septet, 3, -3, 1, 1), // E64
    ];

    Ok(rows
        .iter()
        .enumerate()
        .map(|(k, &(energy, s_total, sz_total, lambda_r, p))| AnalyticLevel {
            index: (k + 1) as u8,
            energy,
            s_total,
            sz_total,
            lambda_r,
            p,
        })
        .collect())
}

/// Closed-form ground energy in region R1 (state 42).
pub fn analytic_ground_energy_r1(params: &CouplingParams) -> Result<f64> {
    let (_, _, d3) = analytic_radicals(params)?;
    Ok(-params.j1() - 1.25 * params.j3() - 0.5 * d3)
}

/// One numeric eigenpair of the Hamiltonian.
#[derive(Debug, Clone)]
pub struct EigenPair {
    /// Energy in units of J1.
    pub energy: f64,
    /// Unit-norm eigenvector in the full 64-dimensional basis.
    pub vector: DVector<f64>,
    /// Magnetization sector the vector lives in.
    pub sz_total: i8,
    /// Total spin from <S_T^2> = S(S+1), `None` when a degenerate numeric
    /// basis mixes different total-spin sectors.
    pub s_total: Option<u8>,
    /// Rotation character, `None` when the vector does not classify.
    pub rotation: Option<RotationLabel>,
}

/// Full numeric eigendecomposition, sorted ascending by energy.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pairs: Vec<EigenPair>,
    params: CouplingParams,
}

/// Degeneracy tolerance used when collecting the ground level.
pub const GROUND_DEGENERACY_TOL: f64 = 1e-9;

impl Spectrum {
    pub fn pairs(&self) -> &[EigenPair] {
        &self.pairs
    }

    pub fn params(&self) -> &CouplingParams {
        &self.params
    }

    pub fn energies(&self) -> impl Iterator<Item = f64> + '_ {
        self.pairs.iter().map(|p| p.energy)
    }

    pub fn ground_energy(&self) -> f64 {
        self.pairs[0].energy
    }

    /// Indices (into `pairs`) of the degenerate ground level.
    pub fn ground_level(&self) -> Vec<usize> {
        let e0 = self.ground_energy();
        (0..self.pairs.len())
            .filter(|&n| self.pairs[n].energy - e0 <= GROUND_DEGENERACY_TOL)
            .collect()
    }

    pub fn ground_degeneracy(&self) -> usize {
        self.ground_level().len()
    }

    /// Ground-state density matrix: the pure projector in R1/R2, the
    /// uniform mixture over the 2 (line L) or 5 (point P) degenerate
    /// singlets otherwise.
    pub fn ground_projector(&self) -> DMatrix<f64> {
        let level = self.ground_level();
        let w = 1.0 / level.len() as f64;
        let mut rho = DMatrix::zeros(DIM, DIM);
        for n in level {
            rho.ger(w, &self.pairs[n].vector, &self.pairs[n].vector, 1.0);
        }
        rho
    }
}

/// Diagonalize the Hamiltonian per magnetization sector.
pub fn diagonalize(params: &CouplingParams) -> Spectrum {
    let h = build_hamiltonian(params);
    let s2 = total_spin_squared();
    let mut pairs = Vec::with_capacity(DIM);

    for n_up in 0..=N_SITES {
        let basis = sector_basis(n_up);
        let k = basis.len();
        let sub = DMatrix::from_fn(k, k, |r, c| h[(basis[r], basis[c])]);
        let eig = sub.symmetric_eigen();
        for col in 0..k {
            let mut vector = DVector::zeros(DIM);
            for r in 0..k {
                vector[basis[r]] = eig.eigenvectors[(r, col)];
            }
            vector /= vector.norm();
            let s_sq = vector.dot(&(&s2 * &vector));
            let s = (0.5 * ((1.0 + 4.0 * s_sq).sqrt() - 1.0)).round();
            let s_total = if (s_sq - s * (s + 1.0)).abs() <= 1e-8 { Some(s as u8) } else { None };
            let rotation = classify_rotation(&vector, 1e-9).expect("eigenvectors are normalized");
            pairs.push(EigenPair {
                energy: eig.eigenvalues[col],
                vector,
                sz_total: n_up as i8 - 3,
                s_total,
                rotation,
            });
        }
    }

    pairs.sort_by(|a, b| {
        a.energy.total_cmp(&b.energy).then(a.sz_total.cmp(&b.sz_total))
    });
    Spectrum { pairs, params: *params }
}

/// Segment of the (J2, J3) parameter space the ground state belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionTag {
    R1,
    R2,
    L,
    P,
}

impl std::fmt::Display for RegionTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RegionTag::R1 => "R1",
            RegionTag::R2 => "R2",
            RegionTag::L => "L",
            RegionTag::P => "P",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundRegion {
    pub tag: RegionTag,
    pub degeneracy: usize,
}

/// Classify the ground-state region by the sign of J1 + J3 - 2 J2:
/// R1 for positive, R2 for negative, line L at zero, with the special
/// five-fold degenerate point P at J1 = J2 = J3.
pub fn ground_region(params: &CouplingParams, tol: f64) -> GroundRegion {
    let (j1, j2, j3) = (params.j1(), params.j2(), params.j3());
    if (j2 - j1).abs() <= tol && (j3 - j1).abs() <= tol {
        return GroundRegion { tag: RegionTag::P, degeneracy: 5 };
    }
    let disc = j1 + j3 - 2.0 * j2;
    if disc.abs() <= tol {
        GroundRegion { tag: RegionTag::L, degeneracy: 2 }
    } else if disc > 0.0 {
        GroundRegion { tag: RegionTag::R1, degeneracy: 1 }
    } else {
        GroundRegion { tag: RegionTag::R2, degeneracy: 1 }
    }
}

/// Default tolerance for region classification.
pub const REGION_TOL: f64 = 1e-12;

// Seed kets for the closed-form singlet eigenvectors, written in the
// bit encoding (site k+1 in bit k, 1 = up):
//   |0>_0 = |u u u d d d> = 7,   |0>_1 = |u u d d u d> = 19,
//   |0>_2 = |u d u d d u> = 37,  |0>_3 = |u d u d u d> = 21.
const KET0_0: u8 = 7;
const KET0_1: u8 = 19;
const KET0_2: u8 = 37;
const KET0_3: u8 = 21;

/// Cyclic right shift T |abcdef> = |fabcde>, the translation used to
/// spell out the closed-form eigenstates.
fn shift(bits: u8) -> u8 {
    (bits << 1 | bits >> 5) & 0x3f
}

fn orbit(seed: u8, len: usize) -> Vec<usize> {
    let mut states = Vec::with_capacity(len);
    let mut b = seed;
    for _ in 0..len {
        states.push(b as usize);
        b = shift(b);
    }
    states
}

/// Closed form of the singlet that is the non-degenerate ground state in
/// region R2 (state 38): the equal-weight alternating combination of the
/// translates of the two seed kets.
pub fn rvb_state_r2() -> DVector<f64> {
    let mut v = DVector::zeros(DIM);
    let norm = 1.0 / 12f64.sqrt();
    for (n, (&b2, &b1)) in orbit(KET0_2, 6).iter().zip(orbit(KET0_1, 6).iter()).enumerate() {
        let _ = n;
        v[b2] += norm;
        v[b1] -= norm;
    }
    v
}

/// Closed form of the singlet that is the non-degenerate ground state in
/// region R1 (state 42). Not defined at the point P where its
/// coefficients degenerate to 0/0.
pub fn rvb_state_r1(params: &CouplingParams) -> Result<DVector<f64>> {
    let (j1, j2, j3) = (params.j1(), params.j2(), params.j3());
    let (_, _, d3) = analytic_radicals(params)?;
    let den = (3.0 * j1 - j2 - j3 + d3) * (-j1 + 3.0 * j2 + j3 + d3) - 3.0 * j3 * j3;
    if den.abs() < 1e-9 {
        return Err(Error::Domain(
            "closed-form R1 ground state is indeterminate at the point P".into(),
        ));
    }
    let c51 = 2f64.sqrt() * (3.0 * j1 * j3 - (2.0 * j2 - j1) * (-j1 + 3.0 * j2 + j3 + d3)) / den;
    let c52 = -6f64.sqrt() * (j1 * (3.0 * j1 - j2 - j3 + d3) - j3 * (2.0 * j2 - j1)) / den;
    let alpha = (1.0 + c51 * c51 + c52 * c52).sqrt();

    let mut v = DVector::zeros(DIM);
    let base = 1.0 / (alpha * 12f64.sqrt());
    let o0 = orbit(KET0_0, 6);
    let o1 = orbit(KET0_1, 6);
    let o2 = orbit(KET0_2, 6);
    for n in 0..6 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        v[o0[n]] += sign * base * 2f64.sqrt() * c51;
        v[o1[n]] += sign * base;
        v[o2[n]] += sign * base;
    }
    let neel = orbit(KET0_3, 2);
    for n in 0..2 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        v[neel[n]] += sign * base * 6f64.sqrt() * c52;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params(j2: f64, j3: f64) -> CouplingParams {
        CouplingParams::new(j2, j3).unwrap()
    }

    fn sorted_analytic(p: &CouplingParams) -> Vec<f64> {
        let mut e: Vec<f64> =
            analytic_eigenvalues(p).unwrap().iter().map(|l| l.energy).collect();
        e.sort_by(f64::total_cmp);
        e
    }

    #[test]
    fn analytic_ground_at_nn_only() {
        let levels = analytic_eigenvalues(&params(0.0, 0.0)).unwrap();
        let e42 = levels[41].energy;
        assert!((e42 - (-1.0 - 13f64.sqrt() / 2.0)).abs() < 1e-14);
        let min = levels.iter().map(|l| l.energy).fold(f64::INFINITY, f64::min);
        assert_eq!(min, e42);
    }

    #[test]
    fn analytic_fivefold_degeneracy_at_p() {
        let levels = analytic_eigenvalues(&params(1.0, 1.0)).unwrap();
        for idx in 38..=42 {
            assert!(
                (levels[idx - 1].energy - (-2.25)).abs() < 1e-14,
                "E{idx} at P should be -9/4"
            );
        }
        assert!((levels[0].energy - 3.75).abs() < 1e-14, "E1 = 15/4 at P");
    }

    #[test]
    fn analytic_trace_and_counts() {
        let p = params(0.37, 0.81);
        let levels = analytic_eigenvalues(&p).unwrap();
        let sum: f64 = levels.iter().map(|l| l.energy).sum();
        assert!(sum.abs() < 1e-12, "energies sum to zero, got {sum}");
        let singlets = levels.iter().filter(|l| l.s_total == 0).count();
        let triplets = levels.iter().filter(|l| l.s_total == 1).count();
        let quintets = levels.iter().filter(|l| l.s_total == 2).count();
        let septets = levels.iter().filter(|l| l.s_total == 3).count();
        assert_eq!((singlets, triplets, quintets, septets), (5, 27, 25, 7));
        // p never takes the values 2, 4, 5, 6.
        assert!(levels.iter().all(|l| l.p == 1 || l.p == 3));
    }

    #[test]
    fn numeric_matches_analytic_at_generic_point() {
        let p = params(0.3, 0.7);
        let spec = diagonalize(&p);
        let analytic = sorted_analytic(&p);
        for (num, exact) in spec.energies().zip(analytic.iter()) {
            assert!((num - exact).abs() < 1e-10, "numeric {num} vs analytic {exact}");
        }
    }

    #[test]
    fn numeric_matches_analytic_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let p = params(rng.random_range(0.0..1.5), rng.random_range(0.0..1.5));
            let spec = diagonalize(&p);
            let analytic = sorted_analytic(&p);
            let worst = spec
                .energies()
                .zip(analytic.iter())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            assert!(worst < 1e-10, "max deviation {worst} at ({}, {})", p.j2(), p.j3());
        }
    }

    #[test]
    fn ground_state_of_nn_ring() {
        let spec = diagonalize(&params(0.0, 0.0));
        assert!((spec.ground_energy() - (-2.802775637731995)).abs() < 1e-10);
        assert_eq!(spec.pairs()[0].sz_total, 0);
        assert_eq!(spec.pairs()[0].s_total, Some(0));
    }

    #[test]
    fn eigenvectors_orthonormal_and_consistent() {
        let p = params(0.45, 0.9);
        let spec = diagonalize(&p);
        let h = build_hamiltonian(&p);
        let mut v = DMatrix::zeros(DIM, DIM);
        for (col, pair) in spec.pairs().iter().enumerate() {
            v.set_column(col, &pair.vector);
            let residual = &h * &pair.vector - &pair.vector * pair.energy;
            assert!(residual.amax() < 1e-10, "H v = E v violated");
            // Support confined to the magnetization sector.
            for b in 0..DIM {
                if (b as u8).count_ones() as i8 - 3 != pair.sz_total {
                    assert_eq!(pair.vector[b], 0.0);
                }
            }
        }
        let gram = v.transpose() * &v;
        assert!((gram - DMatrix::identity(DIM, DIM)).amax() < 1e-10);
    }

    #[test]
    fn region_classification() {
        assert_eq!(
            ground_region(&params(0.4, 0.2), REGION_TOL),
            GroundRegion { tag: RegionTag::R1, degeneracy: 1 }
        );
        assert_eq!(
            ground_region(&params(1.2, 0.2), REGION_TOL),
            GroundRegion { tag: RegionTag::R2, degeneracy: 1 }
        );
        assert_eq!(
            ground_region(&params(0.75, 0.5), REGION_TOL),
            GroundRegion { tag: RegionTag::L, degeneracy: 2 }
        );
        assert_eq!(
            ground_region(&params(1.0, 1.0), REGION_TOL),
            GroundRegion { tag: RegionTag::P, degeneracy: 5 }
        );
    }

    #[test]
    fn numeric_degeneracy_matches_region() {
        for (j2, j3) in [(0.4, 0.2), (1.2, 0.2), (0.75, 0.5), (1.0, 1.0)] {
            let p = params(j2, j3);
            let spec = diagonalize(&p);
            let region = ground_region(&p, REGION_TOL);
            assert_eq!(
                spec.ground_degeneracy(),
                region.degeneracy,
                "degeneracy mismatch at ({j2}, {j3})"
            );
        }
    }

    #[test]
    fn ground_state_is_singlet() {
        let s2 = total_spin_squared();
        for (j2, j3) in [(0.0, 0.0), (0.4, 0.2), (1.2, 0.2), (0.75, 0.5), (1.0, 1.0)] {
            let spec = diagonalize(&params(j2, j3));
            let rho = spec.ground_projector();
            let expect = (&rho * &s2).trace();
            assert!(expect.abs() < 1e-10, "<S_T^2> = {expect} at ({j2}, {j3})");
        }
    }

    #[test]
    fn closed_form_singlets_are_eigenvectors() {
        // State 42 in R1.
        let p = params(0.3, 0.7);
        let h = build_hamiltonian(&p);
        let v42 = rvb_state_r1(&p).unwrap();
        assert!((v42.norm() - 1.0).abs() < 1e-12);
        let e42 = analytic_eigenvalues(&p).unwrap()[41].energy;
        assert!((&h * &v42 - &v42 * e42).amax() < 1e-10);
        assert_eq!(
            classify_rotation(&v42, 1e-9).unwrap(),
            Some(RotationLabel { p: 1, lambda_r: -1 })
        );

        // State 38 in R2.
        let p = params(1.2, 0.2);
        let h = build_hamiltonian(&p);
        let v38 = rvb_state_r2();
        assert!((v38.norm() - 1.0).abs() < 1e-12);
        let e38 = analytic_eigenvalues(&p).unwrap()[37].energy;
        assert!((&h * &v38 - &v38 * e38).amax() < 1e-10);
        assert_eq!(
            classify_rotation(&v38, 1e-9).unwrap(),
            Some(RotationLabel { p: 1, lambda_r: 1 })
        );

        assert!(rvb_state_r1(&params(1.0, 1.0)).is_err(), "indeterminate at P");
    }

    #[test]
    fn numeric_ground_matches_closed_form_vector() {
        let p = params(0.3, 0.7);
        let spec = diagonalize(&p);
        let v42 = rvb_state_r1(&p).unwrap();
        let overlap = spec.pairs()[0].vector.dot(&v42).abs();
        assert!((overlap - 1.0).abs() < 1e-10, "overlap {overlap}");
    }

    #[test]
    fn rotation_labels_match_table_rows() {
        let p = params(0.23, 0.61);
        let spec = diagonalize(&p);
        let levels = analytic_eigenvalues(&p).unwrap();
        for pair in spec.pairs() {
            // Rows of the same sector within 1e-8 of this energy.
            let rows: Vec<_> = levels
                .iter()
                .filter(|l| l.sz_total == pair.sz_total && (l.energy - pair.energy).abs() < 1e-8)
                .collect();
            assert!(!rows.is_empty(), "no table row for E = {}", pair.energy);
            let consistent = rows
                .iter()
                .all(|l| (l.lambda_r, l.p, l.s_total) == (rows[0].lambda_r, rows[0].p, rows[0].s_total));
            if consistent {
                let label = pair.rotation.expect("level with unique labels must classify");
                assert_eq!((label.lambda_r, label.p), (rows[0].lambda_r, rows[0].p));
                assert_eq!(pair.s_total, Some(rows[0].s_total));
            }
        }
    }

    #[test]
    fn repeated_radical_levels_are_exact_doublets() {
        // The two +d2 rows (and the two -d2 rows) of each sector are a
        // genuine two-fold degeneracy, not a misprint.
        let p = params(0.37, 0.18);
        let spec = diagonalize(&p);
        let levels = analytic_eigenvalues(&p).unwrap();
        for idx in [34usize, 35] {
            let target = levels[idx - 1].energy;
            for sz in [-1i8, 0, 1] {
                let count = spec
                    .pairs()
                    .iter()
                    .filter(|q| q.sz_total == sz && (q.energy - target).abs() < 1e-10)
                    .count();
                assert_eq!(count, 2, "sector {sz} multiplicity of E{idx}");
            }
        }
    }

    #[test]
    fn radicands_vanish_only_at_p() {
        let (d1, d2, d3) = analytic_radicals(&params(1.0, 1.0)).unwrap();
        assert_eq!((d1, d2, d3), (0.0, 0.0, 0.0));
        let (d1, _, _) = analytic_radicals(&params(0.0, 0.0)).unwrap();
        assert!((d1 - 5f64.sqrt()).abs() < 1e-14);
    }
}
