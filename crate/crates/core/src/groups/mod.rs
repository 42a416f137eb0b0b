//! Finite groups given by explicit multiplication laws.
//!
//! Small groups carry a full multiplication table that is verified against
//! the group axioms at construction. AGL(1,q) is carried through its field,
//! with elements indexed as `(a_idx - 1) * q + b_idx` for the map `x ↦ ax + b`
//! (field indices in the field's indexed ordering), so the identity is index 0.

mod catalog;
mod scan;

pub use catalog::{catalog, order12_catalog};
pub use scan::{scan_group, small_order_scan, IrrepSummary, ScanEntry, ScanReport};

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::gf::{is_prime_u64, FieldSpec};

/// Largest group order for which [`FiniteGroup::to_table`] and the JSON table
/// dump are produced.
pub const MAX_TABLE_ORDER: usize = 240;

/// Desk-scale guard for [`subgroup_enumerate`].
pub const MAX_ENUMERATION_ORDER: usize = 48;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table violates the group axioms: {0}")]
    AxiomViolation(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {prime} does not divide the group order {order}")]
    PrimeDoesNotDivideOrder { prime: u64, order: usize },
    #[error("subgroup is not a Frobenius complement: {0}")]
    NotFrobeniusComplement(String),
    #[error("Frobenius kernel check failed: {0}")]
    KernelCheckFailed(String),
    #[error("no catalog for groups of order {0}")]
    UnsupportedOrder(usize),
    #[error("group order {0} exceeds the enumeration limit {MAX_ENUMERATION_ORDER}")]
    OrderTooLarge(usize),
    #[error("{order} does not divide the group order {group_order}")]
    OrderDoesNotDivide { order: usize, group_order: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("regular representation decomposition failed: {0}")]
    Decomposition(String),
}

#[derive(Clone)]
enum Law {
    Table(Vec<u32>),
    Affine(Arc<FieldSpec>),
}

/// A finite group on element indices `0..order`.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: usize,
    inverses: Vec<u32>,
    law: Law,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, checking closure,
    /// identity, inverses and associativity exhaustively.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        let axiom = |m: String| Err(GroupError::AxiomViolation(m));
        if order == 0 || table.len() != order * order {
            return axiom(format!("table has {} entries for order {order}", table.len()));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return axiom("table entry out of range".into());
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        let Some(identity) = (0..order).find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x)) else {
            return axiom("no identity".into());
        };
        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            match (0..order).find(|&b| at(a, b) == identity && at(b, a) == identity) {
                Some(b) => inverses.push(b as u32),
                None => return axiom(format!("element {a} has no inverse")),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return axiom(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            order,
            identity,
            inverses,
            law: Law::Table(table),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Table(t) => t[a * self.order + b] as usize,
            Law::Affine(f) => {
                let q = f.order();
                let (a1, b1) = (a / q + 1, a % q);
                let (a2, b2) = (b / q + 1, b % q);
                let a = f.mul_idx(a1, a2);
                let b = f.add_idx(f.mul_idx(a1, b2), b1);
                (a - 1) * q + b
            }
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g^{-1} x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut cur = g;
        let mut k = 1;
        while cur != self.identity {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The underlying field when this is an affine group.
    pub fn field(&self) -> Option<&Arc<FieldSpec>> {
        match &self.law {
            Law::Affine(f) => Some(f),
            Law::Table(_) => None,
        }
    }

    /// Number of points of the attached action, if any.
    pub fn action_degree(&self) -> Option<usize> {
        self.field().map(|f| f.order())
    }

    /// Image of point `x` under `g` for groups with an attached action.
    pub fn act(&self, g: usize, x: usize) -> Option<usize> {
        let f = self.field()?;
        let (a, b) = self.affine_parts(g)?;
        Some(f.add_idx(f.mul_idx(a, x), b))
    }

    /// The permutation of points induced by `g`.
    pub fn point_permutation(&self, g: usize) -> Option<Vec<usize>> {
        let n = self.action_degree()?;
        (0..n).map(|x| self.act(g, x)).collect()
    }

    /// Field indices `(a, b)` of an affine element.
    pub fn affine_parts(&self, g: usize) -> Option<(usize, usize)> {
        let q = self.field()?.order();
        Some((g / q + 1, g % q))
    }

    /// Element index for the affine map with field indices `(a, b)`; `a ≠ 0`.
    pub fn affine_element(&self, a: usize, b: usize) -> Option<usize> {
        let q = self.field()?.order();
        (a >= 1 && a < q && b < q).then(|| (a - 1) * q + b)
    }

    /// Translations `x ↦ x + b`.
    pub fn translation_subgroup(&self) -> Option<Subgroup> {
        let q = self.field()?.order();
        Some(Subgroup::from_sorted((0..q).collect()))
    }

    /// Multiplications `x ↦ ax`.
    pub fn multiplicative_subgroup(&self) -> Option<Subgroup> {
        let q = self.field()?.order();
        Some(Subgroup::from_sorted((1..q).map(|a| (a - 1) * q).collect()))
    }

    /// `x ↦ gx` for the field's primitive element g; order q-1.
    pub fn singer_element(&self) -> Option<usize> {
        let q = self.field()?.order();
        if q == 2 {
            return Some(self.identity);
        }
        self.affine_element(2, 0)
    }

    /// Materialized multiplication table for small groups.
    pub fn to_table(&self) -> Option<Vec<u32>> {
        (self.order <= MAX_TABLE_ORDER).then(|| {
            let mut t = Vec::with_capacity(self.order * self.order);
            for a in self.elements() {
                for b in self.elements() {
                    t.push(self.mul(a, b) as u32);
                }
            }
            t
        })
    }

    /// Closure of a generating set.
    pub fn generate(&self, generators: &[usize]) -> Subgroup {
        let mut seen = HashSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_unsorted(seen.into_iter().collect())
    }

    pub fn is_subgroup(&self, s: &Subgroup) -> bool {
        s.contains(self.identity)
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    /// `g^{-1} H g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        Subgroup::from_unsorted(h.iter().map(|x| self.conjugate(x, g)).collect())
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.elements().all(|g| s.iter().all(|x| s.contains(self.conjugate(x, g))))
    }

    /// Abelian and every nonidentity element of order p for a single prime p.
    pub fn is_elementary_abelian(&self, s: &Subgroup) -> bool {
        let commutes = s.iter().all(|a| s.iter().all(|b| self.mul(a, b) == self.mul(b, a)));
        let orders: BTreeSet<usize> = s
            .iter()
            .filter(|&x| x != self.identity)
            .map(|x| self.element_order(x))
            .collect();
        commutes && orders.len() <= 1 && orders.iter().all(|&o| is_prime_u64(o as u64))
    }

    pub fn fixed_points(&self, g: usize) -> Option<usize> {
        let n = self.action_degree()?;
        Some((0..n).filter(|&x| self.act(g, x) == Some(x)).count())
    }
}

/// Subgroup as a sorted set of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup(Vec<usize>);

impl Subgroup {
    pub fn from_unsorted(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        Subgroup(v)
    }

    fn from_sorted(v: Vec<usize>) -> Self {
        Subgroup(v)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Elements other than `identity`.
    pub fn nonidentity(&self, identity: usize) -> Vec<usize> {
        self.iter().filter(|&x| x != identity).collect()
    }
}

/// AGL(1,q): all maps `x ↦ ax + b` with `a ≠ 0`, acting on the q field
/// elements.
pub fn agl_construct(spec: Arc<FieldSpec>) -> FiniteGroup {
    let q = spec.order();
    let order = q * (q - 1);
    let inverses = (0..order)
        .map(|g| {
            let (a, b) = (g / q + 1, g % q);
            let ainv = spec.inv_idx(a);
            let binv = spec.neg_idx(spec.mul_idx(ainv, b));
            ((ainv - 1) * q + binv) as u32
        })
        .collect();
    FiniteGroup {
        name: format!("AGL(1,{q})"),
        order,
        identity: 0,
        inverses,
        law: Law::Affine(spec),
    }
}

fn p_part(order: usize, p: usize) -> usize {
    let mut m = order;
    let mut pk = 1;
    while m.is_multiple_of(p) {
        m /= p;
        pk *= p;
    }
    pk
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// A Sylow p-subgroup.
///
/// Starts from the trivial subgroup and repeatedly adjoins a p-power-order
/// element whenever the join is still a p-group. A proper p-subgroup of a
/// Sylow subgroup is properly contained in its normalizer there, so the
/// greedy join always reaches the full p-part.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<Subgroup, GroupError> {
    if !is_prime_u64(p) {
        return Err(GroupError::NotPrime(p));
    }
    let pu = p as usize;
    if !g.order().is_multiple_of(pu) {
        return Err(GroupError::PrimeDoesNotDivideOrder { prime: p, order: g.order() });
    }
    let target = p_part(g.order(), pu);
    let candidates: Vec<usize> = {
        let mut c: Vec<(usize, usize)> = g
            .elements()
            .filter(|&x| x != g.identity())
            .map(|x| (g.element_order(x), x))
            .filter(|&(o, _)| is_power_of(o, pu))
            .collect();
        // larger orders first: a cyclic Sylow subgroup is found in one step
        c.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        c.into_iter().map(|(_, x)| x).collect()
    };
    let mut gens: Vec<usize> = Vec::new();
    let mut current = g.generate(&[]);
    while current.order() < target {
        let mut grew = false;
        for &x in &candidates {
            if current.contains(x) {
                continue;
            }
            gens.push(x);
            let joined = g.generate(&gens);
            if is_power_of(joined.order(), pu) {
                current = joined;
                grew = true;
                break;
            }
            gens.pop();
        }
        if !grew {
            unreachable!("Sylow growth stalled below the p-part");
        }
    }
    Ok(current)
}

/// All distinct conjugates `g^{-1} H g` of a subgroup.
pub fn conjugates(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let set: BTreeSet<Subgroup> = g.elements().map(|x| g.conjugate_subgroup(h, x)).collect();
    set.into_iter().collect()
}

/// Number of Sylow p-subgroups, by enumerating the conjugates of one.
pub fn sylow_count(g: &FiniteGroup, p: u64) -> Result<usize, GroupError> {
    let s = sylow_subgroup(g, p)?;
    Ok(conjugates(g, &s).len())
}

/// The Frobenius kernel `(G \ ∪ H^g) ∪ {1}` of a complement H, checked to be
/// a normal subgroup of order `[G:H]`.
pub fn frobenius_kernel(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup, GroupError> {
    let e = g.identity();
    if !g.is_subgroup(h) {
        return Err(GroupError::NotASubgroup);
    }
    if h.order() == 1 || h.order() == g.order() {
        return Err(GroupError::NotFrobeniusComplement("complement must be nontrivial and proper".into()));
    }
    let mut covered = vec![false; g.order()];
    for x in g.elements() {
        let hx = g.conjugate_subgroup(h, x);
        if !h.contains(x) {
            if let Some(y) = hx.iter().find(|&y| y != e && h.contains(y)) {
                return Err(GroupError::NotFrobeniusComplement(format!(
                    "H meets its conjugate by {x} in nonidentity element {y}"
                )));
            }
        }
        for y in hx.iter() {
            covered[y] = true;
        }
    }
    let kernel = Subgroup::from_unsorted(
        g.elements().filter(|&x| x == e || !covered[x]).collect(),
    );
    if kernel.order() * h.order() != g.order() {
        return Err(GroupError::KernelCheckFailed(format!(
            "kernel has order {}, expected {}",
            kernel.order(),
            g.order() / h.order()
        )));
    }
    if !g.is_subgroup(&kernel) {
        return Err(GroupError::KernelCheckFailed("kernel is not closed".into()));
    }
    if !g.is_normal(&kernel) {
        return Err(GroupError::KernelCheckFailed("kernel is not normal".into()));
    }
    Ok(kernel)
}

/// Conjugacy classes, each sorted, ordered by smallest member (identity first).
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|y| g.conjugate(x, y)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// `Some(n)` iff p is prime and p + 1 = 2^n.
pub fn mersenne_check(p: u64) -> Option<u32> {
    if !is_prime_u64(p) {
        return None;
    }
    let s = p.checked_add(1)?;
    s.is_power_of_two().then(|| s.trailing_zeros())
}

pub fn is_prime(n: u64) -> bool {
    is_prime_u64(n)
}

/// Every subgroup of the given order, for groups of order at most 48.
///
/// Walks the subgroup lattice from the cyclic subgroups upward, joining with
/// cyclic subgroups until no new subgroup appears.
pub fn subgroup_enumerate(g: &FiniteGroup, order: usize) -> Result<Vec<Subgroup>, GroupError> {
    if order == 0 || !g.order().is_multiple_of(order) {
        return Err(GroupError::OrderDoesNotDivide { order, group_order: g.order() });
    }
    if g.order() > MAX_ENUMERATION_ORDER {
        return Err(GroupError::OrderTooLarge(g.order()));
    }
    let cyclic: BTreeSet<Subgroup> = g.elements().map(|x| g.generate(&[x])).collect();
    let mut all: BTreeSet<Subgroup> = cyclic.clone();
    let mut frontier: Vec<Subgroup> = cyclic.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            let mut gens: Vec<usize> = s.as_slice().to_vec();
            gens.extend(c.iter());
            let joined = g.generate(&gens);
            if all.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    Ok(all.into_iter().filter(|s| s.order() == order).collect())
}

/// Transitive on ordered pairs of distinct points, with trivial two-point
/// stabilizers.
pub fn is_sharply_two_transitive(g: &FiniteGroup) -> Option<bool> {
    let n = g.action_degree()?;
    let mut hits = vec![0usize; n * n];
    for x in g.elements() {
        let a = g.act(x, 0)?;
        let b = g.act(x, 1.min(n - 1))?;
        if n > 1 {
            hits[a * n + b] += 1;
        }
    }
    if n < 2 {
        return Some(true);
    }
    // (0,1) is sent to every distinct pair exactly once.
    Some((0..n).all(|a| (0..n).all(|b| hits[a * n + b] == usize::from(a != b))))
}

#[derive(Debug, Clone, Serialize)]
pub struct AffinePair {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

/// JSON form of a group: elements, optional table, optional action table.
#[derive(Debug, Clone, Serialize)]
pub struct GroupDump {
    pub name: String,
    pub order: usize,
    pub identity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<AffinePair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplication: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<usize>>>,
}

impl GroupDump {
    pub fn new(g: &FiniteGroup) -> Self {
        let elements = g.field().map(|f| {
            g.elements()
                .map(|x| {
                    let (a, b) = g.affine_parts(x).expect("affine group");
                    AffinePair {
                        a: f.element_at(a).coeffs(),
                        b: f.element_at(b).coeffs(),
                    }
                })
                .collect()
        });
        let multiplication = g
            .to_table()
            .map(|t| t.chunks(g.order()).map(|r| r.to_vec()).collect());
        let action = if g.order() <= MAX_TABLE_ORDER {
            g.action_degree()
                .map(|_| g.elements().map(|x| g.point_permutation(x).unwrap()).collect())
        } else {
            None
        };
        GroupDump {
            name: g.name().to_string(),
            order: g.order(),
            identity: g.identity(),
            elements,
            multiplication,
            action,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agl(n: u32) -> FiniteGroup {
        agl_construct(Arc::new(FieldSpec::with_default_modulus(2, n).unwrap()))
    }

    #[test]
    fn agl_orders() {
        assert_eq!(agl(1).order(), 2);
        assert_eq!(agl(2).order(), 12);
        assert_eq!(agl(3).order(), 56);
    }

    #[test]
    fn agl_tables_satisfy_axioms() {
        for n in 1..=4 {
            let g = agl(n);
            let t = g.to_table().unwrap();
            let checked = FiniteGroup::from_table("copy", g.order(), t).unwrap();
            assert_eq!(checked.identity(), g.identity());
            for x in g.elements() {
                assert_eq!(checked.inv(x), g.inv(x));
            }
        }
    }

    #[test]
    fn action_is_faithful_transitive_with_stabilizers() {
        for n in 1..=4 {
            let g = agl(n);
            let q = 1usize << n;
            let perms: BTreeSet<Vec<usize>> = g.elements().map(|x| g.point_permutation(x).unwrap()).collect();
            assert_eq!(perms.len(), g.order());
            let orbit: BTreeSet<usize> = g.elements().map(|x| g.act(x, 0).unwrap()).collect();
            assert_eq!(orbit.len(), q);
            let stab = g.elements().filter(|&x| g.act(x, 0) == Some(0)).count();
            assert_eq!(stab, q - 1);
            // homomorphism into Sym(q)
            for a in g.elements().step_by(3) {
                for b in g.elements().step_by(5) {
                    for x in 0..q {
                        let lhs = g.act(g.mul(a, b), x).unwrap();
                        let rhs = g.act(a, g.act(b, x).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            assert_eq!(is_sharply_two_transitive(&g), Some(true));
        }
    }

    #[test]
    fn sylow_counts() {
        let g4 = agl(2);
        assert_eq!(sylow_count(&g4, 3).unwrap(), 4);
        assert_eq!(sylow_count(&g4, 2).unwrap(), 1);
        assert_eq!(sylow_subgroup(&g4, 2).unwrap(), g4.translation_subgroup().unwrap());
        let g8 = agl(3);
        assert_eq!(sylow_count(&g8, 7).unwrap(), 8);
        assert_eq!(
            sylow_count(&g4, 5).unwrap_err(),
            GroupError::PrimeDoesNotDivideOrder { prime: 5, order: 12 }
        );
        assert_eq!(sylow_count(&g4, 4).unwrap_err(), GroupError::NotPrime(4));
    }

    #[test]
    fn frobenius_kernels() {
        for n in 2..=3 {
            let g = agl(n);
            let p = g.multiplicative_subgroup().unwrap();
            let k = frobenius_kernel(&g, &p).unwrap();
            assert_eq!(k, g.translation_subgroup().unwrap());
            assert!(g.is_elementary_abelian(&k));
        }
        let g = agl(2);
        let k = g.translation_subgroup().unwrap();
        assert!(matches!(frobenius_kernel(&g, &k), Err(GroupError::NotFrobeniusComplement(_))));
    }

    #[test]
    fn classes_of_agl() {
        for (n, kstar) in [(2u32, 3usize), (3, 7)] {
            let g = agl(n);
            let classes = conjugacy_classes(&g);
            assert_eq!(classes[0], vec![0]);
            let k = g.translation_subgroup().unwrap();
            let kc: Vec<usize> = k.nonidentity(0);
            assert!(classes.contains(&kc));
            assert_eq!(kc.len(), kstar);
            assert_eq!(classes.len(), 1 << n);
        }
        let trivial = FiniteGroup::from_table("1", 1, vec![0]).unwrap();
        assert_eq!(conjugacy_classes(&trivial), vec![vec![0]]);
    }

    #[test]
    fn mersenne() {
        assert_eq!(mersenne_check(3), Some(2));
        assert_eq!(mersenne_check(7), Some(3));
        assert_eq!(mersenne_check(5), None);
        assert_eq!(mersenne_check(15), None);
        assert_eq!(mersenne_check(127), Some(7));
        assert_eq!(mersenne_check(2047), None);
    }

    #[test]
    fn enumerate_subgroups() {
        let g = agl(2);
        assert_eq!(subgroup_enumerate(&g, 3).unwrap().len(), 4);
        assert_eq!(subgroup_enumerate(&g, 12).unwrap().len(), 1);
        assert_eq!(subgroup_enumerate(&g, 1).unwrap().len(), 1);
        // A4 has no subgroup of order 6
        assert_eq!(subgroup_enumerate(&g, 6).unwrap().len(), 0);
        assert_eq!(
            subgroup_enumerate(&g, 5).unwrap_err(),
            GroupError::OrderDoesNotDivide { order: 5, group_order: 12 }
        );
        assert_eq!(subgroup_enumerate(&agl(3), 7).unwrap_err(), GroupError::OrderTooLarge(56));
    }

    #[test]
    fn bad_table_rejected() {
        // not associative: a "group" of order 3 with x*x = x for all x but wrong identity
        let t = vec![0, 1, 2, 1, 1, 0, 2, 0, 2];
        assert!(matches!(FiniteGroup::from_table("bad", 3, t), Err(GroupError::AxiomViolation(_))));
    }

    #[test]
    fn dump_shapes() {
        let d = GroupDump::new(&agl(2));
        assert_eq!(d.elements.as_ref().unwrap().len(), 12);
        assert_eq!(d.multiplication.as_ref().unwrap().len(), 12);
        assert_eq!(d.action.as_ref().unwrap()[0], vec![0, 1, 2, 3]);
    }
}
