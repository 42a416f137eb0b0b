//! The degree-(q-1) standard representation of AGL(1,q).
//!
//! Two models are carried side by side. The integer model writes each group
//! element in the lattice basis `f_x = e_x - e_0` (x ≠ 0) of the sum-zero
//! sublattice of the q-point permutation module; every algebraic check runs
//! there in exact arithmetic. The unitary model is the same action in an
//! orthonormal basis of the sum-zero subspace obtained by Gram–Schmidt over
//! the lattice basis. With `B = QR` the two are related by `U = R M R^{-1}`.

use std::collections::HashMap;
use std::sync::Arc;

use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::groups::{FiniteGroup, Subgroup, MAX_TABLE_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReprError {
    #[error("group has no point action attached")]
    NoActionAttached,
    #[error("point action is not transitive")]
    NotTransitive,
    #[error("representation is not faithful: element {0} acts trivially")]
    NotFaithful(usize),
    #[error("subgroup is not the translation subgroup")]
    NotTranslationSubgroup,
    #[error("additive-character eigenbasis needs characteristic 2, field has {0}")]
    UnsupportedCharacteristic(u32),
    #[error("element has order {actual}, expected {expected}")]
    WrongElementOrder { actual: usize, expected: usize },
    #[error("eigenstructure check failed: {0}")]
    EigenCheckFailed(String),
}

/// Square integer matrix stored by sparse columns (sorted rows, no zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        IntMatrix { dim, cols: (0..dim).map(|j| vec![(j, 1)]).collect() }
    }

    fn from_columns(dim: usize, mut cols: Vec<Vec<(usize, i64)>>) -> Self {
        for c in &mut cols {
            c.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(c.len());
            for &(r, v) in c.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *c = merged;
        }
        IntMatrix { dim, cols }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let cols = (0..dim)
            .map(|j| (0..dim).filter(|&i| rows[i][j] != 0).map(|i| (i, rows[i][j])).collect())
            .collect();
        IntMatrix { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.cols[col]
            .binary_search_by_key(&row, |e| e.0)
            .map(|k| self.cols[col][k].1)
            .unwrap_or(0)
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.dim]; self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|j| self.get(j, j)).sum()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .flat_map(|&(k, b)| self.cols[k].iter().map(move |&(i, a)| (i, a * b)))
                    .collect()
            })
            .collect();
        IntMatrix::from_columns(self.dim, cols)
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        IntMatrix::from_columns(self.dim, cols)
    }

    pub fn scale(&self, s: i64) -> IntMatrix {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&(i, v)| (i, v * s)).collect())
            .collect();
        IntMatrix::from_columns(self.dim, cols)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, a) in col {
                out[i] += a * v[j];
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim)
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m[(i, j)] = v as f64;
            }
        }
        m
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_dense().serialize(s)
    }
}

/// The standard representation φ of an affine group on the sum-zero part of
/// its point permutation module.
#[derive(Debug, Clone)]
pub struct Representation {
    group: Arc<FiniteGroup>,
    points: usize,
    /// q × (q-1), orthonormal columns spanning the sum-zero subspace.
    ortho: DMatrix<f64>,
    /// `R` with lattice basis `B = Q R`.
    basis_change: DMatrix<f64>,
    basis_change_inv: DMatrix<f64>,
}

/// Builds φ, checking that the action is transitive and φ faithful.
pub fn standard_rep(group: Arc<FiniteGroup>) -> Result<Representation, ReprError> {
    let q = group.action_degree().ok_or(ReprError::NoActionAttached)?;
    let mut reached = vec![false; q];
    for g in group.elements() {
        reached[group.act(g, 0).ok_or(ReprError::NoActionAttached)?] = true;
    }
    if reached.iter().any(|r| !r) {
        return Err(ReprError::NotTransitive);
    }

    let (ortho, basis_change) = gram_schmidt_sum_zero(q);
    let basis_change_inv = basis_change
        .clone()
        .try_inverse()
        .expect("Gram-Schmidt factor of a basis is invertible");
    let rep = Representation { group, points: q, ortho, basis_change, basis_change_inv };

    let e = rep.group.identity();
    for g in rep.group.elements() {
        if g != e && rep.integer_model(g).is_identity() {
            return Err(ReprError::NotFaithful(g));
        }
    }
    Ok(rep)
}

/// Modified Gram–Schmidt on `e_x - e_0`, x = 1..q-1, in index order.
fn gram_schmidt_sum_zero(q: usize) -> (DMatrix<f64>, DMatrix<f64>) {
    let d = q - 1;
    let mut qm = DMatrix::<f64>::zeros(q, d);
    let mut r = DMatrix::<f64>::zeros(d, d);
    for j in 0..d {
        let mut v = DVector::<f64>::zeros(q);
        v[j + 1] = 1.0;
        v[0] = -1.0;
        for i in 0..j {
            let qi = qm.column(i);
            let c = qi.dot(&v);
            r[(i, j)] = c;
            v -= qi * c;
        }
        let norm = v.norm();
        r[(j, j)] = norm;
        qm.set_column(j, &(v / norm));
    }
    (qm, r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IrreducibilityVerdict {
    pub sum: i64,
    pub group_order: usize,
    pub irreducible: bool,
}

/// `Σ_g χ(g)²` against |G| for a real character.
pub fn character_norm(group_order: usize, characters: impl IntoIterator<Item = i64>) -> IrreducibilityVerdict {
    let sum: i64 = characters.into_iter().map(|c| c * c).sum();
    IrreducibilityVerdict { sum, group_order, irreducible: sum == group_order as i64 }
}

impl Representation {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.points - 1
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn basis_change(&self) -> &DMatrix<f64> {
        &self.basis_change
    }

    /// φ(g) in the lattice basis. Column x-1 holds `e_{π(x)} - e_{π(0)}`
    /// rewritten through `f_y = e_y - e_0` with `f_0 = 0`.
    pub fn integer_model(&self, g: usize) -> IntMatrix {
        let d = self.degree();
        let perm = self.group.point_permutation(g).expect("action checked at construction");
        let p0 = perm[0];
        let cols = (1..self.points)
            .map(|x| {
                let mut col = Vec::with_capacity(2);
                if perm[x] != 0 {
                    col.push((perm[x] - 1, 1));
                }
                if p0 != 0 {
                    col.push((p0 - 1, -1));
                }
                col
            })
            .collect();
        IntMatrix::from_columns(d, cols)
    }

    /// φ(g) in the orthonormal basis: `Qᵀ P(g) Q`.
    pub fn unitary_model(&self, g: usize) -> DMatrix<Complex<f64>> {
        let perm = self.group.point_permutation(g).expect("action checked at construction");
        let mut pq = DMatrix::<f64>::zeros(self.points, self.degree());
        for (x, &px) in perm.iter().enumerate() {
            pq.set_row(px, &self.ortho.row(x));
        }
        let u = self.ortho.transpose() * pq;
        u.map(|v| Complex::new(v, 0.0))
    }

    /// `max |U(g) - R M(g) R^{-1}|`.
    pub fn model_conjugacy_defect(&self, g: usize) -> f64 {
        let via_lattice = &self.basis_change * self.integer_model(g).to_f64() * &self.basis_change_inv;
        let u = self.unitary_model(g);
        u.iter()
            .zip(via_lattice.iter())
            .map(|(a, b)| (a.re - b).abs().max(a.im.abs()))
            .fold(0.0, f64::max)
    }

    /// Exact trace of the integer model.
    pub fn character(&self, g: usize) -> i64 {
        self.integer_model(g).trace()
    }

    pub fn irreducibility_sum(&self) -> IrreducibilityVerdict {
        character_norm(self.group.order(), self.group.elements().map(|g| self.character(g)))
    }

    /// `(Σ_{k∈K} χ(k)², Σ_{k∈K*} χ(k)²)`.
    pub fn subgroup_character_sums(&self, k: &Subgroup) -> (i64, i64) {
        let e = self.group.identity();
        let all: i64 = k.iter().map(|g| self.character(g).pow(2)).sum();
        let star: i64 = k.iter().filter(|&g| g != e).map(|g| self.character(g).pow(2)).sum();
        (all, star)
    }

    /// First pair `(g, h)` with `M(g)M(h) ≠ M(gh)`, if any.
    pub fn homomorphism_violation(&self, pairs: impl IntoIterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
        pairs.into_iter().find(|&(g, h)| {
            self.integer_model(g).mul(&self.integer_model(h)) != self.integer_model(self.group.mul(g, h))
        })
    }

    pub fn check_homomorphism_exhaustive(&self) -> Option<(usize, usize)> {
        let n = self.group.order();
        self.homomorphism_violation((0..n).flat_map(|g| (0..n).map(move |h| (g, h))))
    }

    pub fn check_homomorphism_sampled(&self, samples: usize, seed: u64) -> Option<(usize, usize)> {
        let n = self.group.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs: Vec<(usize, usize)> = (0..samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        self.homomorphism_violation(pairs)
    }

    /// `Σ_{k∈K*} φ(k)` in the integer model.
    pub fn kstar_sum(&self, k: &Subgroup) -> IntMatrix {
        let e = self.group.identity();
        k.iter()
            .filter(|&g| g != e)
            .fold(IntMatrix::zeros(self.degree()), |acc, g| acc.add(&self.integer_model(g)))
    }

    /// `Σ_{k∈K} φ(k)`.
    pub fn subgroup_sum(&self, k: &Subgroup) -> IntMatrix {
        k.iter()
            .fold(IntMatrix::zeros(self.degree()), |acc, g| acc.add(&self.integer_model(g)))
    }

    pub fn dump(&self) -> RepresentationDump {
        let matrices = (self.group.order() <= MAX_TABLE_ORDER)
            .then(|| self.group.elements().map(|g| self.integer_model(g)).collect());
        RepresentationDump {
            group: self.group.name().to_string(),
            degree: self.degree(),
            basis: "e_x - e_0, x = 1..q-1 in field index order".into(),
            matrices,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RepresentationDump {
    pub group: String,
    pub degree: usize,
    pub basis: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<IntMatrix>>,
}

/// Common eigenbasis of φ(K) labelled by nontrivial additive characters.
#[derive(Debug, Clone, Serialize)]
pub struct EigenStructure {
    /// Field index x of the character `b ↦ (-1)^{Tr(xb)}` for each basis vector.
    pub labels: Vec<usize>,
    /// Lattice coordinates of each eigenvector (entries ±1).
    #[serde(skip)]
    pub lattice_vectors: Vec<Vec<i64>>,
    /// Orthonormal-basis coordinates (unitary model) of each eigenvector.
    #[serde(skip)]
    pub basis: Vec<DVector<f64>>,
    /// Elements of K*, in subgroup order.
    pub kernel_elements: Vec<usize>,
    /// `eigenvalue_table[i][j]`: eigenvalue of `φ(kernel_elements[i])` on basis vector j.
    pub eigenvalue_table: Vec<Vec<i8>>,
    /// `(#(+1), #(-1))` per element of K*.
    pub multiplicities: Vec<(usize, usize)>,
}

impl EigenStructure {
    pub fn position_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// Verifies that φ(K) is a commuting family whose common eigenspaces are
/// lines, each spanned by a nontrivial additive character.
pub fn kernel_eigenstructure(rep: &Representation, k: &Subgroup) -> Result<EigenStructure, ReprError> {
    let g = rep.group();
    let field = g.field().ok_or(ReprError::NoActionAttached)?;
    if Some(k) != g.translation_subgroup().as_ref() {
        return Err(ReprError::NotTranslationSubgroup);
    }
    if field.characteristic() != 2 {
        return Err(ReprError::UnsupportedCharacteristic(field.characteristic()));
    }
    let fail = |m: String| Err(ReprError::EigenCheckFailed(m));
    let q = rep.points();

    let models: Vec<(usize, IntMatrix)> = k.iter().map(|x| (x, rep.integer_model(x))).collect();
    for (a, ma) in &models {
        for (b, mb) in &models {
            if ma.mul(mb) != mb.mul(ma) {
                return fail(format!("φ({a}) and φ({b}) do not commute"));
            }
        }
    }

    let labels: Vec<usize> = (1..q).collect();
    let lattice_vectors: Vec<Vec<i64>> = labels
        .iter()
        .map(|&x| {
            let fx = field.element_at(x);
            (1..q)
                .map(|y| if (fx * field.element_at(y)).trace() == 0 { 1 } else { -1 })
                .collect()
        })
        .collect();

    let e = g.identity();
    let kernel_elements = k.nonidentity(e);
    let mut eigenvalue_table = Vec::with_capacity(kernel_elements.len());
    for &kx in &kernel_elements {
        let m = &models.iter().find(|(x, _)| *x == kx).unwrap().1;
        let mut row = Vec::with_capacity(labels.len());
        for (v, &x) in lattice_vectors.iter().zip(&labels) {
            let image = m.mul_vec(v);
            let lambda = image[0] * v[0];
            if lambda.abs() != 1 || image.iter().zip(v).any(|(a, b)| *a != lambda * b) {
                return fail(format!("character {x} is not an eigenvector of φ({kx})"));
            }
            row.push(lambda as i8);
        }
        eigenvalue_table.push(row);
    }

    let multiplicities = eigenvalue_table
        .iter()
        .map(|row| {
            let plus = row.iter().filter(|&&s| s == 1).count();
            (plus, row.len() - plus)
        })
        .collect();

    // nondegenerate: no two basis vectors share all eigenvalues
    let mut signatures: HashMap<Vec<i8>, usize> = HashMap::new();
    for j in 0..labels.len() {
        let sig: Vec<i8> = eigenvalue_table.iter().map(|row| row[j]).collect();
        if let Some(other) = signatures.insert(sig, labels[j]) {
            return fail(format!("labels {other} and {} share a common eigenspace", labels[j]));
        }
    }

    let scale = (q as f64).sqrt();
    let basis: Vec<DVector<f64>> = lattice_vectors
        .iter()
        .map(|v| {
            let c = DVector::from_iterator(v.len(), v.iter().map(|&x| x as f64));
            rep.basis_change() * c / scale
        })
        .collect();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            if (a.dot(b) - expected).abs() > 1e-9 {
                return fail(format!("eigenbasis vectors {i} and {j} are not orthonormal"));
            }
        }
    }

    Ok(EigenStructure {
        labels,
        lattice_vectors,
        basis,
        kernel_elements,
        eigenvalue_table,
        multiplicities,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleWitness {
    pub element: usize,
    /// `permutation[i] = j`: φ(g) sends basis vector i to ±(basis vector j).
    pub permutation: Vec<usize>,
    pub signs: Vec<i8>,
    /// The single cycle as label positions, starting from 0.
    pub cycle: Vec<usize>,
}

/// Checks that φ(g), for g of order q-1, permutes the common eigenbasis of
/// φ(K) as one (q-1)-cycle, and that the permutation is consistent with
/// conjugation on K.
pub fn cyclic_permutation_check(rep: &Representation, eig: &EigenStructure, g: usize) -> Result<CycleWitness, ReprError> {
    let grp = rep.group();
    let expected = rep.degree();
    let actual = grp.element_order(g);
    if actual != expected {
        return Err(ReprError::WrongElementOrder { actual, expected });
    }
    let fail = |m: String| Err(ReprError::EigenCheckFailed(m));
    let index: HashMap<&[i64], usize> = eig
        .lattice_vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();

    let m = rep.integer_model(g);
    let mut permutation = Vec::with_capacity(expected);
    let mut signs = Vec::with_capacity(expected);
    for (i, v) in eig.lattice_vectors.iter().enumerate() {
        let image = m.mul_vec(v);
        let neg: Vec<i64> = image.iter().map(|x| -x).collect();
        if let Some(&j) = index.get(image.as_slice()) {
            permutation.push(j);
            signs.push(1);
        } else if let Some(&j) = index.get(neg.as_slice()) {
            permutation.push(j);
            signs.push(-1);
        } else {
            return fail(format!("φ({g}) does not map eigenvector {i} to an eigenbasis ray"));
        }
    }

    // φ(g) v_i = ±v_j means λ_j(k) = λ_i(g^{-1} k g) for every k ∈ K*
    let pos: HashMap<usize, usize> = eig.kernel_elements.iter().enumerate().map(|(r, &k)| (k, r)).collect();
    for (r, &k) in eig.kernel_elements.iter().enumerate() {
        let Some(&rc) = pos.get(&grp.conjugate(k, g)) else {
            return fail(format!("conjugate of {k} by {g} left K"));
        };
        for (i, &j) in permutation.iter().enumerate() {
            if eig.eigenvalue_table[r][j] != eig.eigenvalue_table[rc][i] {
                return fail(format!("diagonal of φ({k}) not permuted consistently at vector {i}"));
            }
        }
    }

    let mut cycle = vec![0];
    let mut cur = permutation[0];
    while cur != 0 {
        cycle.push(cur);
        cur = permutation[cur];
        if cycle.len() > expected {
            break;
        }
    }
    if cycle.len() != expected {
        return fail(format!("induced permutation has a cycle of length {} < {expected}", cycle.len()));
    }
    Ok(CycleWitness { element: g, permutation, signs, cycle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::groups::agl_construct;

    fn rep(n: u32) -> Representation {
        let f = Arc::new(FieldSpec::with_default_modulus(2, n).unwrap());
        standard_rep(Arc::new(agl_construct(f))).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(rep(2).degree(), 3);
        assert_eq!(rep(3).degree(), 7);
        assert_eq!(rep(4).degree(), 15);
    }

    #[test]
    fn characters_q4() {
        let r = rep(2);
        let g = r.group().clone();
        assert_eq!(r.character(g.identity()), 3);
        for t in g.translation_subgroup().unwrap().nonidentity(0) {
            assert_eq!(r.character(t), -1);
        }
        assert_eq!(r.character(g.singer_element().unwrap()), 0);
    }

    #[test]
    fn irreducibility() {
        let v = rep(2).irreducibility_sum();
        assert_eq!((v.sum, v.irreducible), (12, true));
        let v = rep(3).irreducibility_sum();
        assert_eq!((v.sum, v.irreducible), (56, true));
        // trivial ⊕ trivial
        let v = character_norm(12, std::iter::repeat_n(2, 12));
        assert_eq!((v.sum, v.irreducible), (48, false));
    }

    #[test]
    fn eigenstructure_multiplicities() {
        for (n, plus, minus) in [(2u32, 1usize, 2usize), (3, 3, 4)] {
            let r = rep(n);
            let k = r.group().translation_subgroup().unwrap();
            let eig = kernel_eigenstructure(&r, &k).unwrap();
            assert_eq!(eig.labels.len(), (1 << n) - 1);
            assert!(eig.multiplicities.iter().all(|&m| m == (plus, minus)));
        }
    }

    #[test]
    fn eigenstructure_rejects_wrong_subgroup() {
        let r = rep(2);
        let p = r.group().multiplicative_subgroup().unwrap();
        assert_eq!(kernel_eigenstructure(&r, &p).unwrap_err(), ReprError::NotTranslationSubgroup);
    }

    #[test]
    fn singer_cycles() {
        for n in [2u32, 3] {
            let r = rep(n);
            let k = r.group().translation_subgroup().unwrap();
            let eig = kernel_eigenstructure(&r, &k).unwrap();
            let w = cyclic_permutation_check(&r, &eig, r.group().singer_element().unwrap()).unwrap();
            assert_eq!(w.cycle.len(), (1 << n) - 1);
        }
        let r = rep(2);
        let k = r.group().translation_subgroup().unwrap();
        let eig = kernel_eigenstructure(&r, &k).unwrap();
        assert_eq!(
            cyclic_permutation_check(&r, &eig, 1).unwrap_err(),
            ReprError::WrongElementOrder { actual: 2, expected: 3 }
        );
    }

    #[test]
    fn kernel_sums() {
        for n in [2u32, 3] {
            let r = rep(n);
            let k = r.group().translation_subgroup().unwrap();
            assert_eq!(r.kstar_sum(&k), IntMatrix::identity(r.degree()).scale(-1));
            assert_eq!(r.subgroup_sum(&k), IntMatrix::zeros(r.degree()));
        }
    }

    #[test]
    fn int_matrix_basics() {
        let a = IntMatrix::from_dense(&[vec![1, 2], vec![0, -1]]);
        let b = IntMatrix::from_dense(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).to_dense(), vec![vec![2, 1], vec![-1, 0]]);
        assert_eq!(a.add(&a.scale(-1)), IntMatrix::zeros(2));
        assert_eq!(a.trace(), 0);
        assert_eq!(a.mul_vec(&[1, 1]), vec![3, -1]);
    }

    #[test]
    fn no_action() {
        let g = crate::groups::order12_catalog().remove(0);
        assert_eq!(standard_rep(Arc::new(g)).unwrap_err(), ReprError::NoActionAttached);
    }
}
