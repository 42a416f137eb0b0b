//! Small dense complex helpers shared by the float-side modules.

use nalgebra::{Complex, DMatrix};
use rand::Rng;

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

/// Number of singular values above `rel_tol` times the largest one.
pub fn numeric_rank(m: &CMatrix, rel_tol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.clone().singular_values();
    let top = sv.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Haar-ish random unitary from the QR factorization of a complex Gaussian
/// matrix (Box–Muller), with the phases of R's diagonal folded back into Q.
pub fn random_unitary<R: Rng>(d: usize, rng: &mut R) -> CMatrix {
    let mut gauss = || {
        let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
        let u2: f64 = rng.gen_range(0.0..1.0);
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    };
    let z = CMatrix::from_fn(d, d, |_, _| C64::new(gauss(), gauss()));
    let qr = z.qr();
    let (mut q, r) = qr.unpack();
    for j in 0..d {
        let phase = r[(j, j)] / r[(j, j)].norm();
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// `max |U U† - I|`.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let d = u.nrows();
    let p = u * u.adjoint();
    (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| (p[(i, j)] - if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }).norm())
        .fold(0.0, f64::max)
}
