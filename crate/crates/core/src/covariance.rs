//! Collineation groups acting on states, and sharp-covariance checks.
//!
//! A collineation is a unitary `U` or an antiunitary `ψ ↦ U ψ̄`, considered
//! modulo a global phase. Phase classes are compared through a canonical
//! form: the first entry (row-major) of magnitude above
//! [`CANONICAL_ENTRY_FLOOR`] is rotated onto the positive real axis.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{unitarity_defect, CMatrix, C64};
use crate::mub::{MubSet, StateVector};

pub const DEFAULT_MATRIX_TOL: f64 = 1e-9;
pub const DEFAULT_RAY_TOL: f64 = 1e-7;
const CANONICAL_ENTRY_FLOOR: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CovarianceError {
    #[error("matrix is not unitary (defect {0:e})")]
    NotUnitary(f64),
    #[error("collineations act on different dimensions")]
    DimensionMismatch,
    #[error("orbit or closure exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error("group is not closed: product of elements {0} and {1} is missing")]
    NotClosed(usize, usize),
    #[error("unitary subgroup has index {0}, expected 1 or 2")]
    BadIndex(f64),
    #[error("empty group")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Entrywise tolerance for matrix comparisons and unitarity.
    pub matrix: f64,
    /// `1 - |⟨u|v⟩|` below which two rays are identified.
    pub ray: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { matrix: DEFAULT_MATRIX_TOL, ray: DEFAULT_RAY_TOL }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Collineation {
    matrix: CMatrix,
    antiunitary: bool,
}

impl Collineation {
    /// Checked constructor; the matrix must be unitary within `tol`.
    pub fn new(matrix: CMatrix, antiunitary: bool, tol: f64) -> Result<Self, CovarianceError> {
        let c = Collineation::from_parts(matrix, antiunitary);
        let defect = c.unitarity_defect();
        if defect > tol {
            return Err(CovarianceError::NotUnitary(defect));
        }
        Ok(c)
    }

    pub fn from_parts(matrix: CMatrix, antiunitary: bool) -> Self {
        assert!(matrix.is_square(), "collineation matrix must be square");
        Collineation { matrix, antiunitary }
    }

    pub fn unitary(matrix: CMatrix) -> Self {
        Collineation::from_parts(matrix, false)
    }

    pub fn identity(d: usize) -> Self {
        Collineation::unitary(CMatrix::identity(d, d))
    }

    /// Complex conjugation in the computational basis.
    pub fn conjugation(d: usize) -> Self {
        Collineation::from_parts(CMatrix::identity(d, d), true)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn is_antiunitary(&self) -> bool {
        self.antiunitary
    }

    pub fn unitarity_defect(&self) -> f64 {
        unitarity_defect(&self.matrix)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Collineation) -> Collineation {
        let inner = if self.antiunitary { other.matrix.map(|z| z.conj()) } else { other.matrix.clone() };
        Collineation {
            matrix: &self.matrix * inner,
            antiunitary: self.antiunitary ^ other.antiunitary,
        }
    }

    pub fn apply(&self, psi: &StateVector) -> StateVector {
        let v = if self.antiunitary { psi.conj() } else { psi.clone() };
        StateVector(&self.matrix * v.0)
    }

    /// Same matrix multiplied by `e^{iθ}`.
    pub fn rephased(&self, theta: f64) -> Collineation {
        Collineation {
            matrix: &self.matrix * C64::from_polar(1.0, theta),
            antiunitary: self.antiunitary,
        }
    }

    /// Conjugation by a fixed unitary: `V ∘ self ∘ V†`.
    pub fn conjugated_by(&self, v: &CMatrix) -> Collineation {
        let vc = Collineation::unitary(v.clone());
        let vd = Collineation::unitary(v.adjoint());
        vc.compose(self).compose(&vd)
    }

    pub fn canonical(&self) -> CMatrix {
        let d = self.dim();
        let pivot = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| self.matrix[(i, j)])
            .find(|z| z.norm() > CANONICAL_ENTRY_FLOOR)
            .unwrap_or(C64::new(1.0, 0.0));
        let phase = pivot.conj() / pivot.norm();
        &self.matrix * phase
    }

    pub fn eq_mod_phase(&self, other: &Collineation, tol: f64) -> bool {
        self.antiunitary == other.antiunitary
            && self.dim() == other.dim()
            && self
                .canonical()
                .iter()
                .zip(other.canonical().iter())
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn is_identity_mod_phase(&self, tol: f64) -> bool {
        self.eq_mod_phase(&Collineation::identity(self.dim()), tol)
    }
}

#[derive(Serialize, Deserialize)]
struct CollineationRepr {
    matrix: Vec<Vec<[f64; 2]>>,
    antiunitary: bool,
}

impl Serialize for Collineation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let d = self.dim();
        CollineationRepr {
            matrix: (0..d)
                .map(|i| (0..d).map(|j| [self.matrix[(i, j)].re, self.matrix[(i, j)].im]).collect())
                .collect(),
            antiunitary: self.antiunitary,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Collineation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CollineationRepr::deserialize(d)?;
        let n = r.matrix.len();
        if n == 0 || r.matrix.iter().any(|row| row.len() != n) {
            return Err(serde::de::Error::custom("collineation matrix must be square and nonempty"));
        }
        let m = CMatrix::from_fn(n, n, |i, j| C64::new(r.matrix[i][j][0], r.matrix[i][j][1]));
        Ok(Collineation::from_parts(m, r.antiunitary))
    }
}

fn position(group: &[Collineation], c: &Collineation, tol: f64) -> Option<usize> {
    group.iter().position(|x| x.eq_mod_phase(c, tol))
}

/// Closure of the generators (and the identity) mod phase.
pub fn close_group(generators: &[Collineation], cap: usize, tol: f64) -> Result<Vec<Collineation>, CovarianceError> {
    let d = generators.first().ok_or(CovarianceError::Empty)?.dim();
    if generators.iter().any(|g| g.dim() != d) {
        return Err(CovarianceError::DimensionMismatch);
    }
    let mut elements = vec![Collineation::identity(d)];
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        next += 1;
        for g in generators {
            let y = g.compose(&x);
            if position(&elements, &y, tol).is_none() {
                if elements.len() >= cap {
                    return Err(CovarianceError::CapExceeded(cap));
                }
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

/// Every pairwise product lies in the set (mod phase).
pub fn verify_closed(group: &[Collineation], tol: f64) -> Result<(), CovarianceError> {
    if group.is_empty() {
        return Err(CovarianceError::Empty);
    }
    for (i, a) in group.iter().enumerate() {
        for (j, b) in group.iter().enumerate() {
            if position(group, &a.compose(b), tol).is_none() {
                return Err(CovarianceError::NotClosed(i, j));
            }
        }
    }
    Ok(())
}

pub fn same_ray(u: &StateVector, v: &StateVector, ray_tol: f64) -> bool {
    u.inner(v).norm() >= 1.0 - ray_tol
}

/// Distinct rays reachable from the fiducial by repeatedly applying generators.
pub fn orbit(
    generators: &[Collineation],
    fiducial: &StateVector,
    cap: usize,
    ray_tol: f64,
) -> Result<Vec<StateVector>, CovarianceError> {
    if cap == 0 {
        return Err(CovarianceError::CapExceeded(0));
    }
    let mut rays = vec![fiducial.normalized()];
    let mut next = 0;
    while next < rays.len() {
        let x = rays[next].clone();
        next += 1;
        for g in generators {
            let y = g.apply(&x).normalized();
            if !rays.iter().any(|r| same_ray(r, &y, ray_tol)) {
                if rays.len() >= cap {
                    return Err(CovarianceError::CapExceeded(cap));
                }
                rays.push(y);
            }
        }
    }
    Ok(rays)
}

#[derive(Debug, Clone, Serialize)]
pub struct CovarianceVerdict {
    pub dim: usize,
    pub group_order: usize,
    pub expected_order: usize,
    /// `(basis position, state index)` of a fiducial whose orbit is the MUB.
    pub fiducial: Option<(usize, usize)>,
    pub order_ok: bool,
    pub orbit_ok: bool,
    pub regular_ok: bool,
    pub pass: bool,
    pub reasons: Vec<String>,
}

/// Sharp covariance of a MUB under a closed collineation group: order
/// d(d+1), some MUB state's orbit is the whole MUB, and no nonidentity
/// element fixes that state's ray.
pub fn sharp_covariance_check(
    mub: &MubSet,
    group: &[Collineation],
    tol: Tolerances,
) -> Result<CovarianceVerdict, CovarianceError> {
    verify_closed(group, tol.matrix)?;
    let d = mub.dim();
    if group.iter().any(|g| g.dim() != d) {
        return Err(CovarianceError::DimensionMismatch);
    }
    let expected_order = d * (d + 1);
    let states: Vec<(usize, usize, StateVector)> = mub
        .bases()
        .iter()
        .enumerate()
        .flat_map(|(a, b)| b.iter().enumerate().map(move |(s, v)| (a, s, v.normalized())))
        .collect();

    let mut reasons = Vec::new();
    let order_ok = group.len() == expected_order;
    if !order_ok {
        reasons.push(format!("group order {} != d(d+1) = {expected_order}", group.len()));
    }

    let covers = |psi: &StateVector| -> bool {
        let mut hit = vec![false; states.len()];
        for g in group {
            let img = g.apply(psi).normalized();
            match states.iter().position(|(_, _, s)| same_ray(s, &img, tol.ray)) {
                Some(i) => hit[i] = true,
                None => return false,
            }
        }
        hit.iter().all(|&h| h)
    };
    let fiducial = states.iter().find(|(_, _, s)| covers(s)).map(|(a, s, _)| (*a, *s));
    let orbit_ok = fiducial.is_some() && states.len() == expected_order;
    if !orbit_ok {
        reasons.push("no MUB state generates all MUB rays".into());
    }

    let regular_ok = match fiducial {
        Some((a, s)) => {
            let psi = mub.bases()[a][s].normalized();
            let fixing = group
                .iter()
                .filter(|g| same_ray(&g.apply(&psi).normalized(), &psi, tol.ray))
                .count();
            if fixing != 1 {
                reasons.push(format!("{fixing} elements fix the fiducial ray"));
            }
            fixing == 1
        }
        None => false,
    };

    Ok(CovarianceVerdict {
        dim: d,
        group_order: group.len(),
        expected_order,
        fiducial,
        order_ok,
        orbit_ok,
        regular_ok,
        pass: order_ok && orbit_ok && regular_ok,
        reasons,
    })
}

/// Dimension of `{M : MU = UM}` over the unitary members; 1 iff irreducible.
pub fn commutant_dim(group: &[Collineation]) -> usize {
    let unitaries: Vec<&CMatrix> = group.iter().filter(|g| !g.is_antiunitary()).map(|g| g.matrix()).collect();
    commutant_dim_of(&unitaries)
}

/// Null-space dimension of the stacked system `(I ⊗ U - Uᵀ ⊗ I) vec(M) = 0`,
/// read off the eigenvalues of its Gram matrix.
pub fn commutant_dim_of(unitaries: &[&CMatrix]) -> usize {
    let Some(first) = unitaries.first() else {
        return 0;
    };
    let d = first.nrows();
    let n = d * d;
    let id = CMatrix::identity(d, d);
    let mut gram = CMatrix::zeros(n, n);
    for u in unitaries {
        let c = id.kronecker(u) - u.transpose().kronecker(&id);
        gram += c.adjoint() * &c;
    }
    let eig = nalgebra::SymmetricEigen::new(gram);
    let top = eig.eigenvalues.iter().copied().fold(0.0, f64::max).max(1.0);
    eig.eigenvalues.iter().filter(|&&l| l.abs() <= 1e-10 * top).count()
}

fn bloch_rotation(axis: [f64; 3], theta: f64) -> CMatrix {
    let norm = (axis[0].powi(2) + axis[1].powi(2) + axis[2].powi(2)).sqrt();
    let [x, y, z] = axis.map(|a| a / norm);
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let i = C64::new(0.0, 1.0);
    // cos(θ/2) I - i sin(θ/2) n·σ
    CMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(c, 0.0) - i * s * z,
            -i * s * C64::new(x, -y),
            -i * s * C64::new(x, y),
            C64::new(c, 0.0) + i * s * z,
        ],
    )
}

/// Order-6 rotation group generated by 2π/3 about (1,1,1) and π about
/// (1,-1,0). The half-turn axis has to be perpendicular to the three-fold
/// axis; a half-turn about (1,1,0) generates the whole octahedral group.
pub fn qubit_order6_witness() -> Vec<Collineation> {
    let gens = [
        Collineation::unitary(bloch_rotation([1.0, 1.0, 1.0], std::f64::consts::TAU / 3.0)),
        Collineation::unitary(bloch_rotation([1.0, -1.0, 0.0], std::f64::consts::PI)),
    ];
    close_group(&gens, 64, DEFAULT_MATRIX_TOL).expect("finite rotation group")
}

/// Rotation symmetries of the octahedron {±x, ±y, ±z}: order 24 mod phase.
pub fn qubit_octahedral_group() -> Vec<Collineation> {
    let gens = [
        Collineation::unitary(bloch_rotation([1.0, 1.0, 1.0], std::f64::consts::TAU / 3.0)),
        Collineation::unitary(bloch_rotation([0.0, 0.0, 1.0], std::f64::consts::FRAC_PI_2)),
    ];
    close_group(&gens, 64, DEFAULT_MATRIX_TOL).expect("finite rotation group")
}

/// Shift and clock generators of the Weyl–Heisenberg group in dimension d.
pub fn weyl_heisenberg_generators(d: usize) -> Vec<Collineation> {
    let mut x = CMatrix::zeros(d, d);
    let mut z = CMatrix::zeros(d, d);
    for j in 0..d {
        x[((j + 1) % d, j)] = C64::new(1.0, 0.0);
        z[(j, j)] = C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / d as f64);
    }
    vec![Collineation::unitary(x), Collineation::unitary(z)]
}

/// Unitary subgroup and antiunitary coset of a closed group.
pub fn antiunitary_split(
    group: &[Collineation],
    tol: f64,
) -> Result<(Vec<Collineation>, Vec<Collineation>), CovarianceError> {
    verify_closed(group, tol)?;
    let (unitary, anti): (Vec<_>, Vec<_>) = group.iter().cloned().partition(|g| !g.is_antiunitary());
    let index = group.len() as f64 / unitary.len() as f64;
    if !(anti.is_empty() || anti.len() == unitary.len()) {
        return Err(CovarianceError::BadIndex(index));
    }
    Ok((unitary, anti))
}
