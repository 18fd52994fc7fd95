//! The symmetry group of the 27-line configuration, order 51840, acting as
//! permutations of the line labels.
//!
//! Generators: the five adjacent transpositions of the six blow-up points
//! (relabeling) plus the quadratic Cremona involution based at points
//! {2,4,6}. The group is materialized once by breadth-first closure; orbit
//! and stabilizer computations are brute force over the enumerated group,
//! which is fast at this size and leaves no room for clever-algorithm bugs.

use crate::schlaefli::{Graph27, LineLabel, ALL_LABELS};
use once_cell::sync::Lazy;
use std::collections::{BTreeSet, HashSet, VecDeque};

/// A permutation of the 27 label indices: `p[i]` is the image of `i`.
pub type Perm27 = [u8; 27];

pub const IDENTITY: Perm27 = {
    let mut p = [0u8; 27];
    let mut i = 0;
    while i < 27 {
        p[i] = i as u8;
        i += 1;
    }
    p
};

/// `(a . b)[i] = a[b[i]]` (apply `b` first).
pub fn compose(a: &Perm27, b: &Perm27) -> Perm27 {
    std::array::from_fn(|i| a[b[i] as usize])
}

pub fn inverse(p: &Perm27) -> Perm27 {
    let mut q = [0u8; 27];
    for (i, &x) in p.iter().enumerate() {
        q[x as usize] = i as u8;
    }
    q
}

/// Relabeling action of the transposition (i j) of blow-up points:
/// `Ei <-> Ej`, `Gi <-> Gj`, `Fik <-> Fjk` for `k != i,j`.
pub fn point_transposition(i: u8, j: u8) -> Perm27 {
    assert!((1..=6).contains(&i) && (1..=6).contains(&j) && i != j);
    let sigma = |k: u8| -> u8 {
        if k == i {
            j
        } else if k == j {
            i
        } else {
            k
        }
    };
    let mut p = IDENTITY;
    for (idx, &lab) in ALL_LABELS.iter().enumerate() {
        let img = match lab {
            LineLabel::E(a) => LineLabel::E(sigma(a)),
            LineLabel::G(a) => LineLabel::G(sigma(a)),
            LineLabel::F(a, b) => {
                let (x, y) = (sigma(a), sigma(b));
                LineLabel::F(x.min(y), x.max(y))
            }
        };
        p[idx] = img.index() as u8;
    }
    p
}

/// The quadratic Cremona involution based at points {2,4,6}:
/// `E2<->F46, E4<->F26, E6<->F24, F13<->G5, F15<->G3, F35<->G1`,
/// every other label fixed (15 fixed labels).
pub fn cremona_perm() -> Perm27 {
    let mut p = IDENTITY;
    let pairs = [
        (LineLabel::E(2), LineLabel::F(4, 6)),
        (LineLabel::E(4), LineLabel::F(2, 6)),
        (LineLabel::E(6), LineLabel::F(2, 4)),
        (LineLabel::F(1, 3), LineLabel::G(5)),
        (LineLabel::F(1, 5), LineLabel::G(3)),
        (LineLabel::F(3, 5), LineLabel::G(1)),
    ];
    for (a, b) in pairs {
        p[a.index()] = b.index() as u8;
        p[b.index()] = a.index() as u8;
    }
    p
}

/// Standard generating set: five adjacent point transpositions plus the
/// Cremona involution.
pub fn standard_generators() -> Vec<Perm27> {
    let mut gens: Vec<Perm27> = (1..6).map(|i| point_transposition(i, i + 1)).collect();
    gens.push(cremona_perm());
    gens
}

/// All 720 relabeling permutations (the subgroup fixing the E/F/G types).
pub fn s6_subgroup() -> Vec<Perm27> {
    let gens: Vec<Perm27> = (1..6).map(|i| point_transposition(i, i + 1)).collect();
    closure(&gens)
}

fn closure(gens: &[Perm27]) -> Vec<Perm27> {
    let mut seen: HashSet<Perm27> = HashSet::new();
    let mut queue: VecDeque<Perm27> = VecDeque::new();
    seen.insert(IDENTITY);
    queue.push_back(IDENTITY);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = compose(g, &p);
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Perm27> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// The full symmetry group, enumerated and sorted (51840 elements).
pub fn generate_weyl() -> Vec<Perm27> {
    closure(&standard_generators())
}

/// Cached copy of the full group for repeated orbit/stabilizer queries.
pub static WEYL: Lazy<Vec<Perm27>> = Lazy::new(generate_weyl);

/// Every generator must preserve incidence (sanity invariant).
pub fn preserves_incidence(p: &Perm27, g: &Graph27) -> bool {
    for i in 0..27 {
        for j in (i + 1)..27 {
            if g.adj[i][j] != g.adj[p[i] as usize][p[j] as usize] {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Orbits and stabilizers of triangle sets
// ---------------------------------------------------------------------------

/// Canonical form of a set of triangles under a permutation: apply, re-sort.
pub fn apply_to_triangle_set(p: &Perm27, set: &BTreeSet<[usize; 3]>) -> BTreeSet<[usize; 3]> {
    set.iter()
        .map(|t| {
            let mut u = [p[t[0]] as usize, p[t[1]] as usize, p[t[2]] as usize];
            u.sort_unstable();
            u
        })
        .collect()
}

/// Orbit size and stabilizer order of a set of triangles under the full
/// group. The stabilizer is brute force over all 51840 elements; the orbit
/// is a breadth-first closure under the generators.
pub fn set_orbit_and_stabilizer(set: &BTreeSet<[usize; 3]>) -> (usize, usize) {
    let gens = standard_generators();
    let mut seen: HashSet<Vec<[usize; 3]>> = HashSet::new();
    let key = |s: &BTreeSet<[usize; 3]>| s.iter().cloned().collect::<Vec<_>>();
    let mut queue = VecDeque::new();
    seen.insert(key(set));
    queue.push_back(set.clone());
    while let Some(s) = queue.pop_front() {
        for g in &gens {
            let t = apply_to_triangle_set(g, &s);
            if seen.insert(key(&t)) {
                queue.push_back(t);
            }
        }
    }
    let orbit = seen.len();
    let stab = WEYL.iter().filter(|p| &apply_to_triangle_set(p, set) == set).count();
    (orbit, stab)
}

// ---------------------------------------------------------------------------
// Double sixes and one-factorizations
// ---------------------------------------------------------------------------

/// A double six: two disjoint sextuples of pairwise-skew lines, where line
/// `i` of one half is skew to exactly line `i` of the other half (after the
/// canonical pairing) and meets the remaining five.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DoubleSix {
    pub half_a: [usize; 6],
    pub half_b: [usize; 6],
}

/// All 36 double sixes, canonically ordered (half_a lexicographically
/// smallest; partner aligned so `half_b[k]` is the unique line of the other
/// half skew to `half_a[k]`).
pub fn double_sixes() -> Vec<DoubleSix> {
    let g = Graph27::new();
    // Sixers: independent sets of size 6 (pairwise skew lines).
    let mut sixers: Vec<[usize; 6]> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(start: usize, g: &Graph27, cur: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
        if cur.len() == 6 {
            out.push([cur[0], cur[1], cur[2], cur[3], cur[4], cur[5]]);
            return;
        }
        for v in start..27 {
            if 27 - v < 6 - cur.len() {
                break;
            }
            if cur.iter().all(|&u| !g.adj[u][v]) {
                cur.push(v);
                rec(v + 1, g, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, &g, &mut cur, &mut sixers);
    assert_eq!(sixers.len(), 72, "expected 72 sixers");

    let mut out = Vec::new();
    let mut used: HashSet<[usize; 6]> = HashSet::new();
    for a in &sixers {
        if used.contains(a) {
            continue;
        }
        // The partner consists of all lines skew to exactly one member of `a`.
        let mut partner: Vec<(usize, usize)> = Vec::new(); // (index in a it is skew to, line)
        for v in 0..27 {
            if a.contains(&v) {
                continue;
            }
            let skew: Vec<usize> = (0..6).filter(|&k| !g.adj[a[k]][v]).collect();
            if skew.len() == 1 {
                partner.push((skew[0], v));
            }
        }
        if partner.len() != 6 {
            continue;
        }
        partner.sort_unstable();
        let b: [usize; 6] = std::array::from_fn(|k| partner[k].1);
        // Check that partner is itself a sixer.
        let is_sixer = (0..6).all(|i| ((i + 1)..6).all(|j| !g.adj[b[i]][b[j]]));
        if !is_sixer {
            continue;
        }
        used.insert(*a);
        let mut bs = b;
        bs.sort_unstable();
        used.insert(bs);
        // Canonical orientation: lexicographically smaller half first.
        if *a <= bs {
            out.push(DoubleSix { half_a: *a, half_b: b });
        } else {
            let realigned: [usize; 6] = std::array::from_fn(|k| {
                let v = bs[k];
                let pos = (0..6).find(|&i| b[i] == v).unwrap();
                a[pos]
            });
            out.push(DoubleSix { half_a: bs, half_b: realigned });
        }
    }
    out.sort();
    out
}

/// A one-factorization of the complete graph on {1..6}: five perfect
/// matchings partitioning the 15 edges. There are exactly six.
pub fn one_factorizations() -> Vec<[[(u8, u8); 3]; 5]> {
    // All 15 perfect matchings of K6.
    let mut matchings: Vec<[(u8, u8); 3]> = Vec::new();
    for b in 2..=6u8 {
        let rest: Vec<u8> = (2..=6).filter(|&x| x != b).collect();
        // 1 pairs with b; match the remaining four in 3 ways.
        for k in 1..4 {
            let c = rest[0];
            let d = rest[k];
            let others: Vec<u8> = rest[1..].iter().copied().filter(|&x| x != d).collect();
            let mut m = [(1u8, b), (c.min(d), c.max(d)), (others[0].min(others[1]), others[0].max(others[1]))];
            m.sort_unstable();
            matchings.push(m);
        }
    }
    assert_eq!(matchings.len(), 15);
    matchings.sort_unstable();

    // Backtrack: choose 5 pairwise edge-disjoint matchings covering all 15 edges.
    let mut out: Vec<[[(u8, u8); 3]; 5]> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn disjoint(a: &[(u8, u8); 3], b: &[(u8, u8); 3]) -> bool {
        a.iter().all(|e| !b.contains(e))
    }
    fn rec(
        start: usize,
        matchings: &[[(u8, u8); 3]],
        chosen: &mut Vec<usize>,
        out: &mut Vec<[[(u8, u8); 3]; 5]>,
    ) {
        if chosen.len() == 5 {
            let f: [[(u8, u8); 3]; 5] = std::array::from_fn(|i| matchings[chosen[i]]);
            out.push(f);
            return;
        }
        for m in start..matchings.len() {
            if chosen.iter().all(|&c| disjoint(&matchings[c], &matchings[m])) {
                chosen.push(m);
                rec(m + 1, matchings, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(0, &matchings, &mut chosen, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions_preserving_incidence() {
        let g = Graph27::new();
        for p in standard_generators() {
            assert_eq!(compose(&p, &p), IDENTITY);
            assert!(preserves_incidence(&p, &g));
        }
    }

    #[test]
    fn relabeling_subgroup_is_s6() {
        assert_eq!(s6_subgroup().len(), 720);
    }

    #[test]
    fn cremona_fixes_fifteen_labels() {
        let c = cremona_perm();
        let fixed = (0..27).filter(|&i| c[i] as usize == i).count();
        assert_eq!(fixed, 15);
    }

    #[test]
    fn double_six_structure() {
        let ds = double_sixes();
        assert_eq!(ds.len(), 36);
        let g = Graph27::new();
        // The classical double six: E1..E6 against G1..G6 with Ei skew to Gi.
        let classical = ds
            .iter()
            .find(|d| d.half_a == [0, 1, 2, 3, 4, 5])
            .expect("classical double six present");
        assert_eq!(classical.half_b, [21, 22, 23, 24, 25, 26]);
        for d in &ds {
            for i in 0..6 {
                for j in 0..6 {
                    let meets = g.adj[d.half_a[i]][d.half_b[j]];
                    assert_eq!(meets, i != j);
                }
            }
        }
    }

    #[test]
    fn six_one_factorizations() {
        let f = one_factorizations();
        assert_eq!(f.len(), 6);
        for fac in &f {
            let mut edges: Vec<(u8, u8)> = fac.iter().flatten().copied().collect();
            edges.sort_unstable();
            edges.dedup();
            assert_eq!(edges.len(), 15);
        }
    }
}
