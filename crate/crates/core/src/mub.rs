//! Complete sets of mutually unbiased bases in prime dimensions.
//!
//! Basis positions: 0 is the computational basis (label ∞), position `1 + a`
//! holds basis `a`. For odd prime d, state b of basis a has amplitudes
//! `ω^{a j² + b j} / √d` with `ω = e^{2πi/d}`; the exponent is reduced mod d
//! in integers before the angle is formed. For d = 2 the bases are the
//! eigenbases of Z, X and Y.

use nalgebra::DVector;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::gf::is_prime_u64;
use crate::linalg::{numeric_rank, CMatrix, C64};

/// Relative singular-value cutoff for informational completeness.
pub const IC_RANK_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MubError {
    #[error("dimension {0} is not prime")]
    NonPrimeDimension(usize),
    #[error("malformed MUB data: {0}")]
    Malformed(String),
}

/// A ket in C^d.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector(pub DVector<C64>);

impl StateVector {
    pub fn new(amplitudes: Vec<C64>) -> Self {
        StateVector(DVector::from_vec(amplitudes))
    }

    pub fn basis(d: usize, k: usize) -> Self {
        let mut v = DVector::zeros(d);
        v[k] = C64::new(1.0, 0.0);
        StateVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.0
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.0.dotc(&other.0)
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn normalized(&self) -> StateVector {
        StateVector(&self.0 / C64::new(self.norm(), 0.0))
    }

    pub fn projector(&self) -> CMatrix {
        &self.0 * self.0.adjoint()
    }

    pub fn conj(&self) -> StateVector {
        StateVector(self.0.map(|z| z.conj()))
    }
}

/// A candidate collection of bases; validity is established by
/// [`verify_unbiased`], not assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct MubSet {
    dim: usize,
    bases: Vec<Vec<StateVector>>,
}

impl MubSet {
    pub fn new(bases: Vec<Vec<StateVector>>) -> Result<Self, MubError> {
        let dim = bases
            .first()
            .and_then(|b| b.first())
            .map(StateVector::dim)
            .ok_or_else(|| MubError::Malformed("no states".into()))?;
        if dim == 0 || bases.iter().flatten().any(|s| s.dim() != dim) {
            return Err(MubError::Malformed("states of differing dimension".into()));
        }
        Ok(MubSet { dim, bases })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bases(&self) -> &[Vec<StateVector>] {
        &self.bases
    }

    pub fn bases_mut(&mut self) -> &mut [Vec<StateVector>] {
        &mut self.bases
    }

    pub fn states(&self) -> impl Iterator<Item = &StateVector> {
        self.bases.iter().flatten()
    }

    /// Applies `U` to every state.
    pub fn rotated(&self, u: &CMatrix) -> MubSet {
        MubSet {
            dim: self.dim,
            bases: self
                .bases
                .iter()
                .map(|b| b.iter().map(|s| StateVector(u * &s.0)).collect())
                .collect(),
        }
    }

    /// All projectors scaled by `1/(#bases)`.
    pub fn povm(&self) -> Povm {
        let scale = C64::new(1.0 / self.bases.len() as f64, 0.0);
        Povm {
            outcomes: self.states().map(|s| s.projector() * scale).collect(),
        }
    }
}

impl Serialize for MubSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw: Vec<Vec<Vec<[f64; 2]>>> = self
            .bases
            .iter()
            .map(|b| b.iter().map(|st| st.0.iter().map(|z| [z.re, z.im]).collect()).collect())
            .collect();
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MubSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<Vec<Vec<[f64; 2]>>> = Vec::deserialize(d)?;
        let bases = raw
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|st| StateVector::new(st.into_iter().map(|[re, im]| C64::new(re, im)).collect()))
                    .collect()
            })
            .collect();
        MubSet::new(bases).map_err(serde::de::Error::custom)
    }
}

fn root_of_unity(k: usize, d: usize) -> C64 {
    let theta = std::f64::consts::TAU * (k % d) as f64 / d as f64;
    C64::new(theta.cos(), theta.sin())
}

/// The standard complete MUB in prime dimension d.
pub fn construct_mub(d: usize) -> Result<MubSet, MubError> {
    if !is_prime_u64(d as u64) {
        return Err(MubError::NonPrimeDimension(d));
    }
    let computational: Vec<StateVector> = (0..d).map(|k| StateVector::basis(d, k)).collect();
    let mut bases = vec![computational];
    if d == 2 {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let st = |a: C64, b: C64| StateVector::new(vec![a, b]);
        let r = |x: f64| C64::new(x, 0.0);
        bases.push(vec![st(r(h), r(h)), st(r(h), r(-h))]);
        bases.push(vec![st(r(h), C64::new(0.0, h)), st(r(h), C64::new(0.0, -h))]);
    } else {
        let norm = 1.0 / (d as f64).sqrt();
        for a in 0..d {
            let basis = (0..d)
                .map(|b| {
                    StateVector::new(
                        (0..d)
                            .map(|j| root_of_unity((a * j % d) * j % d + b * j % d, d) * norm)
                            .collect(),
                    )
                })
                .collect();
            bases.push(basis);
        }
    }
    MubSet::new(bases)
}

#[derive(Debug, Clone, Serialize)]
pub struct UnbiasedReport {
    pub dim: usize,
    pub bases: usize,
    /// Every basis has exactly d states.
    pub shape_ok: bool,
    /// `max |⟨ψ_i|ψ_j⟩ - δ_ij|` within bases.
    pub orthonormality_defect: f64,
    /// `max | |⟨ψ|φ⟩|² - 1/d |` across distinct bases.
    pub overlap_defect: f64,
    pub tolerance: f64,
    pub pass: bool,
}

pub fn verify_unbiased(mub: &MubSet, tol: f64) -> UnbiasedReport {
    let d = mub.dim();
    let bases = mub.bases();
    let shape_ok = bases.iter().all(|b| b.len() == d);
    let mut ortho: f64 = 0.0;
    for b in bases {
        for (i, u) in b.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                ortho = ortho.max((u.inner(v) - target).norm());
            }
        }
    }
    let target = 1.0 / d as f64;
    let mut overlap: f64 = 0.0;
    for (x, bx) in bases.iter().enumerate() {
        for by in &bases[x + 1..] {
            for u in bx {
                for v in by {
                    overlap = overlap.max((u.inner(v).norm_sqr() - target).abs());
                }
            }
        }
    }
    UnbiasedReport {
        dim: d,
        bases: bases.len(),
        shape_ok,
        orthonormality_defect: ortho,
        overlap_defect: overlap,
        tolerance: tol,
        pass: shape_ok && ortho <= tol && overlap <= tol,
    }
}

/// Positive operators meant to sum to the identity.
#[derive(Debug, Clone)]
pub struct Povm {
    pub outcomes: Vec<CMatrix>,
}

impl Povm {
    pub fn completeness_defect(&self) -> f64 {
        let d = self.outcomes.first().map_or(0, |m| m.nrows());
        let sum = self
            .outcomes
            .iter()
            .fold(CMatrix::zeros(d, d), |acc, m| acc + m);
        (sum - CMatrix::identity(d, d)).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Dimension of the span of the outcomes in the d²-dimensional operator space.
    pub fn rank(&self) -> usize {
        let Some(first) = self.outcomes.first() else {
            return 0;
        };
        let dd = first.len();
        let cols: Vec<C64> = self.outcomes.iter().flat_map(|m| m.iter().copied()).collect();
        numeric_rank(&CMatrix::from_vec(dd, self.outcomes.len(), cols), IC_RANK_TOL)
    }
}

/// Rank of the MUB's POVM; the MUB is IC iff this equals d².
pub fn ic_rank(mub: &MubSet) -> usize {
    mub.povm().rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_mub() {
        let m = construct_mub(2).unwrap();
        assert_eq!(m.states().count(), 6);
        let r = verify_unbiased(&m, 1e-9);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn small_primes_verify() {
        for d in [3, 5] {
            let m = construct_mub(d).unwrap();
            assert_eq!(m.bases().len(), d + 1);
            let r = verify_unbiased(&m, 1e-9);
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(construct_mub(4).unwrap_err(), MubError::NonPrimeDimension(4));
        assert_eq!(construct_mub(1).unwrap_err(), MubError::NonPrimeDimension(1));
    }

    #[test]
    fn repeated_basis_is_maximally_biased() {
        let d = 5;
        let comp: Vec<StateVector> = (0..d).map(|k| StateVector::basis(d, k)).collect();
        let m = MubSet::new(vec![comp.clone(), comp]).unwrap();
        let r = verify_unbiased(&m, 1e-9);
        assert!(!r.pass);
        assert!((r.overlap_defect - (1.0 - 1.0 / d as f64)).abs() < 1e-15);
    }

    #[test]
    fn perturbed_amplitude_fails() {
        let mut m = construct_mub(7).unwrap();
        m.bases_mut()[3][2].0[4] += C64::new(1e-3, 0.0);
        assert!(!verify_unbiased(&m, 1e-9).pass);
    }

    #[test]
    fn ic_ranks() {
        assert_eq!(ic_rank(&construct_mub(2).unwrap()), 4);
        assert_eq!(ic_rank(&construct_mub(3).unwrap()), 9);
        let one = MubSet::new(vec![construct_mub(3).unwrap().bases()[0].clone()]).unwrap();
        assert_eq!(ic_rank(&one), 3);
    }

    #[test]
    fn povm_sums_to_identity() {
        for d in [2, 3, 5] {
            assert!(construct_mub(d).unwrap().povm().completeness_defect() < 1e-9);
        }
    }

    #[test]
    fn json_shape() {
        let m = construct_mub(2).unwrap();
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 3);
        assert_eq!(v[0][1], serde_json::json!([[0.0, 0.0], [1.0, 0.0]]));
        let back: MubSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
    }
}
