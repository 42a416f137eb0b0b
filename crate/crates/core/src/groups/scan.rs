//! Ordinary irreducible degrees of small groups from the regular
//! representation.
//!
//! A random Hermitian matrix averaged over conjugation by the left regular
//! representation lands in its commutant. For a generic draw every
//! eigenspace is an irreducible subrepresentation, an irrep of degree d
//! showing up as d eigenvalues of multiplicity d. Restricting the regular
//! representation to an eigenspace gives that irrep's character.

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{catalog, FiniteGroup, GroupError};

const EIGEN_CLUSTER_TOL: f64 = 1e-7;
const CHARACTER_TOL: f64 = 1e-6;

type C64 = Complex<f64>;

#[derive(Debug, Clone, Serialize)]
pub struct IrrepSummary {
    pub degree: usize,
    /// `[re, im]` of the character on each element index.
    pub character: Vec<[f64; 2]>,
    /// Only the identity has `|χ(g)| = χ(1)`, i.e. faithful as a collineation group.
    pub projectively_faithful: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub name: String,
    pub order: usize,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub sum_of_squares: usize,
    pub irreps: Vec<IrrepSummary>,
    /// Whether some projectively faithful irrep has degree p.
    pub faithful_degree_p: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub order: usize,
    /// The prime p with order = p(p+1), when one exists.
    pub p: Option<u64>,
    pub seed: u64,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    /// Names of the catalog groups admitting a faithful irrep of degree p.
    pub fn groups_with_faithful_degree_p(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.faithful_degree_p)
            .map(|e| e.name.as_str())
            .collect()
    }
}

fn prime_for_order(order: usize) -> Option<u64> {
    (2..order as u64)
        .find(|&p| p * (p + 1) == order as u64)
        .filter(|&p| crate::gf::is_prime_u64(p))
}

fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<C64> {
    let mut x = DMatrix::<C64>::zeros(n, n);
    for i in 0..n {
        x[(i, i)] = C64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            x[(i, j)] = z;
            x[(j, i)] = z.conj();
        }
    }
    x
}

/// Characters of the irreducible constituents of the regular representation,
/// one per distinct irrep, sorted by degree.
pub(crate) fn regular_decomposition(g: &FiniteGroup, rng: &mut ChaCha8Rng) -> Result<Vec<IrrepSummary>, GroupError> {
    let n = g.order();
    let x = random_hermitian(n, rng);
    let mut avg = DMatrix::<C64>::zeros(n, n);
    for h in g.elements() {
        for a in 0..n {
            let ha = g.mul(h, a);
            for b in 0..n {
                avg[(a, b)] += x[(ha, g.mul(h, b))];
            }
        }
    }
    avg /= C64::new(n as f64, 0.0);

    let eig = SymmetricEigen::new(avg);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match clusters.last_mut() {
            Some(c) if (eig.eigenvalues[i] - eig.eigenvalues[*c.last().unwrap()]).abs() < EIGEN_CLUSTER_TOL => c.push(i),
            _ => clusters.push(vec![i]),
        }
    }

    // character of each eigenspace: χ(g) = Σ_b P[b][g b]
    let mut found: Vec<(Vec<C64>, usize)> = Vec::new();
    for cluster in &clusters {
        let v = eig.eigenvectors.select_columns(cluster);
        let proj = &v * v.adjoint();
        let chi: Vec<C64> = g
            .elements()
            .map(|h| (0..n).map(|b| proj[(b, g.mul(h, b))]).sum())
            .collect();
        let degree = cluster.len();
        if (chi[g.identity()].re - degree as f64).abs() > CHARACTER_TOL {
            return Err(GroupError::Decomposition(format!(
                "eigenspace of dimension {degree} has character degree {}",
                chi[g.identity()].re
            )));
        }
        match found.iter_mut().find(|(c, _)| {
            c.iter().zip(&chi).all(|(a, b)| (a - b).norm() < CHARACTER_TOL)
        }) {
            Some((_, count)) => *count += 1,
            None => found.push((chi, 1)),
        }
    }

    let mut irreps = Vec::with_capacity(found.len());
    for (chi, count) in found {
        let degree = chi[g.identity()].re.round() as usize;
        if count != degree {
            return Err(GroupError::Decomposition(format!(
                "irrep of degree {degree} appeared {count} times in the regular representation"
            )));
        }
        let projectively_faithful = g
            .elements()
            .filter(|&h| h != g.identity())
            .all(|h| (chi[h].norm() - degree as f64).abs() > CHARACTER_TOL);
        irreps.push(IrrepSummary {
            degree,
            character: chi.iter().map(|z| [z.re, z.im]).collect(),
            projectively_faithful,
        });
    }
    irreps.sort_by_key(|r| r.degree);

    let sum_sq: usize = irreps.iter().map(|r| r.degree * r.degree).sum();
    if sum_sq != n {
        return Err(GroupError::Decomposition(format!(
            "squared degrees sum to {sum_sq}, group order is {n}"
        )));
    }
    Ok(irreps)
}

/// Irreducible degrees of one group from two independently seeded draws,
/// which must agree. `p` selects the degree reported by `faithful_degree_p`.
pub fn scan_group(g: &FiniteGroup, p: Option<u64>, seed: u64) -> Result<ScanEntry, GroupError> {
    let mut draws = Vec::with_capacity(2);
    for stream in 0..2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        draws.push(regular_decomposition(g, &mut rng)?);
    }
    let degrees = |irreps: &[IrrepSummary]| irreps.iter().map(|r| r.degree).collect::<Vec<_>>();
    let first = degrees(&draws[0]);
    if first != degrees(&draws[1]) {
        return Err(GroupError::Decomposition(format!(
            "independent draws disagree on the degrees of {}: {:?} vs {:?}",
            g.name(),
            first,
            degrees(&draws[1])
        )));
    }
    let irreps = draws.swap_remove(0);
    let faithful_degree_p = p.is_some_and(|p| {
        irreps
            .iter()
            .any(|r| r.projectively_faithful && r.degree as u64 == p)
    });
    Ok(ScanEntry {
        name: g.name().to_string(),
        order: g.order(),
        max_degree: *first.iter().max().unwrap_or(&0),
        sum_of_squares: first.iter().map(|d| d * d).sum(),
        degrees: first,
        irreps,
        faithful_degree_p,
    })
}

/// Irreducible degrees of every catalog group of the given order, and which
/// of them admit a faithful irreducible of degree p where order = p(p+1).
pub fn small_order_scan(order: usize, seed: u64) -> Result<ScanReport, GroupError> {
    let groups = catalog(order)?;
    let p = prime_for_order(order);
    let entries = groups
        .iter()
        .map(|g| scan_group(g, p, seed))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ScanReport { order, p, seed, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_twelve() {
        let r = small_order_scan(12, 0).unwrap();
        assert_eq!(r.p, Some(3));
        let by_name = |n: &str| r.entries.iter().find(|e| e.name == n).unwrap();
        assert_eq!(by_name("C12").degrees, vec![1; 12]);
        assert_eq!(by_name("C2xC6").degrees, vec![1; 12]);
        assert_eq!(by_name("D12").degrees, vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(by_name("D12").max_degree, 2);
        assert_eq!(by_name("Dic3").degrees, vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(by_name("A4").degrees, vec![1, 1, 1, 3]);
        assert_eq!(r.groups_with_faithful_degree_p(), vec!["A4"]);
        for e in &r.entries {
            assert_eq!(e.sum_of_squares, 12);
        }
    }

    #[test]
    fn unsupported() {
        assert_eq!(small_order_scan(30, 0).unwrap_err(), GroupError::UnsupportedOrder(30));
    }

    #[test]
    fn seeds_agree() {
        let a = small_order_scan(12, 1).unwrap();
        let b = small_order_scan(12, 99).unwrap();
        for (x, y) in a.entries.iter().zip(&b.entries) {
            assert_eq!(x.degrees, y.degrees);
        }
    }
}
