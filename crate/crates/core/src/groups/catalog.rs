//! Hardcoded groups of order 12, built from normal forms of their
//! presentations.

use super::{FiniteGroup, GroupError};

fn build(name: &str, order: usize, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let table = (0..order)
        .flat_map(|a| (0..order).map(move |b| (a, b)))
        .map(|(a, b)| mul(a, b) as u32)
        .collect();
    FiniteGroup::from_table(name, order, table).expect("catalog presentation is a group")
}

/// `⟨a | a^12⟩`.
fn cyclic12() -> FiniteGroup {
    build("C12", 12, |a, b| (a + b) % 12)
}

/// `C2 × C6`, element `(i, j)` at index `6i + j`.
fn c2_c6() -> FiniteGroup {
    build("C2xC6", 12, |a, b| {
        let (i1, j1) = (a / 6, a % 6);
        let (i2, j2) = (b / 6, b % 6);
        ((i1 + i2) % 2) * 6 + (j1 + j2) % 6
    })
}

/// `⟨r, s | r^6, s^2, srs^{-1} = r^{-1}⟩`, `r^k s^e` at index `k + 6e`.
fn dihedral12() -> FiniteGroup {
    build("D12", 12, |a, b| {
        let (k, e) = (a % 6, a / 6);
        let (l, f) = (b % 6, b / 6);
        let rot = if e == 0 { (k + l) % 6 } else { (k + 6 - l) % 6 };
        rot + 6 * ((e + f) % 2)
    })
}

/// `⟨a, x | a^6, x^2 = a^3, xax^{-1} = a^{-1}⟩`, `a^k x^e` at index `k + 6e`.
fn dicyclic12() -> FiniteGroup {
    build("Dic3", 12, |a, b| {
        let (k, e) = (a % 6, a / 6);
        let (l, f) = (b % 6, b / 6);
        let mut rot = if e == 0 { (k + l) % 6 } else { (k + 6 - l) % 6 };
        let mut xs = e + f;
        if xs == 2 {
            rot = (rot + 3) % 6;
            xs = 0;
        }
        rot + 6 * xs
    })
}

/// Even permutations of four points, composed as functions (`(στ)(i) = σ(τ(i))`).
fn alternating4() -> FiniteGroup {
    let mut perms: Vec<[usize; 4]> = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    if distinct && inversions(&p).is_multiple_of(2) {
                        perms.push(p);
                    }
                }
            }
        }
    }
    let index = |p: [usize; 4]| perms.iter().position(|&x| x == p).unwrap();
    build("A4", 12, |a, b| {
        let (s, t) = (perms[a], perms[b]);
        index([s[t[0]], s[t[1]], s[t[2]], s[t[3]]])
    })
}

fn inversions(p: &[usize; 4]) -> usize {
    (0..4).map(|i| (i + 1..4).filter(|&j| p[i] > p[j]).count()).sum()
}

/// The five groups of order 12 up to isomorphism.
pub fn order12_catalog() -> Vec<FiniteGroup> {
    vec![cyclic12(), c2_c6(), dihedral12(), dicyclic12(), alternating4()]
}

pub fn catalog(order: usize) -> Result<Vec<FiniteGroup>, GroupError> {
    match order {
        12 => Ok(order12_catalog()),
        _ => Err(GroupError::UnsupportedOrder(order)),
    }
}
