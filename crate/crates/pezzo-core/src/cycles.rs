//! Cycle enumeration and orbit machinery on the 27-vertex incidence graph.
//!
//! Cycles are stored in a canonical form (lexicographically minimal over
//! all rotations and the orientation reversal), so sets and maps of cycles
//! deduplicate correctly and group actions are easy to apply.

use crate::schlaefli::{triangle_through_edge, Graph27};
use crate::weyl::Perm27;
use std::collections::{HashMap, VecDeque};

/// A simple cycle, canonical form (see [`canonical_cycle`]).
pub type Cycle = Vec<u8>;

/// Lexicographically minimal representative over rotations and reflection.
pub fn canonical_cycle(seq: &[u8]) -> Cycle {
    let k = seq.len();
    let mut best: Option<Vec<u8>> = None;
    let mut consider = |cand: Vec<u8>| {
        if best.as_ref().is_none_or(|b| &cand < b) {
            best = Some(cand);
        }
    };
    for r in 0..k {
        let rot: Vec<u8> = (0..k).map(|i| seq[(r + i) % k]).collect();
        let mut rev = rot.clone();
        rev[1..].reverse();
        consider(rot);
        consider(rev);
    }
    best.unwrap()
}

/// Apply a label permutation to a cycle and re-canonicalize.
pub fn apply_perm(p: &Perm27, c: &[u8]) -> Cycle {
    let img: Vec<u8> = c.iter().map(|&v| p[v as usize]).collect();
    canonical_cycle(&img)
}

/// All simple k-cycles of the graph (3 <= k <= 8), canonical, sorted.
/// When `chordless_only` is set, keep only cycles with no chord.
pub fn enumerate_cycles(g: &Graph27, k: usize, chordless_only: bool) -> Vec<Cycle> {
    assert!((3..=8).contains(&k), "cycle length out of supported range");
    let mut out: Vec<Cycle> = Vec::new();
    let mut path: Vec<u8> = Vec::with_capacity(k);
    // Each cycle is emitted exactly once: the start vertex is its minimum,
    // and the second vertex is smaller than the last (fixing orientation).
    fn dfs(g: &Graph27, k: usize, path: &mut Vec<u8>, out: &mut Vec<Cycle>) {
        let last = *path.last().unwrap() as usize;
        let v0 = path[0] as usize;
        if path.len() == k {
            if g.adj[last][v0] && path[1] < path[k - 1] {
                out.push(canonical_cycle(path));
            }
            return;
        }
        for v in (v0 + 1)..27 {
            if g.adj[last][v] && !path.contains(&(v as u8)) {
                path.push(v as u8);
                dfs(g, k, path, out);
                path.pop();
            }
        }
    }
    for v0 in 0..27u8 {
        path.clear();
        path.push(v0);
        dfs(g, k, &mut path, &mut out);
    }
    if chordless_only {
        out.retain(|c| chord_count(g, c) == 0);
    }
    out.sort();
    out
}

/// Number of chords: adjacent pairs of cycle vertices that are not
/// consecutive on the cycle.
pub fn chord_count(g: &Graph27, c: &[u8]) -> usize {
    let k = c.len();
    let mut n = 0;
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && g.adj[c[i] as usize][c[j] as usize] {
                n += 1;
            }
        }
    }
    n
}

/// The chords themselves, as vertex pairs.
pub fn chords(g: &Graph27, c: &[u8]) -> Vec<(u8, u8)> {
    let k = c.len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && g.adj[c[i] as usize][c[j] as usize] {
                out.push((c[i].min(c[j]), c[i].max(c[j])));
            }
        }
    }
    out
}

/// One orbit of the group action on canonical cycles.
pub struct CycleOrbit {
    /// Lexicographically smallest member.
    pub representative: Cycle,
    pub size: usize,
    /// Chord count (constant along the orbit; asserted).
    pub chords: usize,
}

/// Decompose a set of canonical cycles into orbits under the generators.
/// Orbits are returned sorted by (size, representative).
pub fn orbit_decompose(g: &Graph27, cycles: &[Cycle], gens: &[Perm27]) -> Vec<CycleOrbit> {
    let index: HashMap<&Cycle, usize> =
        cycles.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut seen = vec![false; cycles.len()];
    let mut orbits = Vec::new();
    for start in 0..cycles.len() {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            members.push(i);
            for p in gens {
                let img = apply_perm(p, &cycles[i]);
                let &j = index
                    .get(&img)
                    .expect("group action must preserve the cycle set");
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        let rep = members.iter().map(|&i| cycles[i].clone()).min().unwrap();
        let ch = chord_count(g, &rep);
        for &i in &members {
            debug_assert_eq!(chord_count(g, &cycles[i]), ch);
        }
        orbits.push(CycleOrbit { representative: rep, size: members.len(), chords: ch });
    }
    orbits.sort_by(|a, b| (a.size, &a.representative).cmp(&(b.size, &b.representative)));
    orbits
}

/// For a 4-cycle: the unique vertex of the graph adjacent to none of the
/// four cycle vertices. `None` if uniqueness fails (it never does on the
/// incidence graph; the caller asserts).
pub fn adjoint_vertex(g: &Graph27, c: &[u8]) -> Option<u8> {
    assert_eq!(c.len(), 4);
    let mut found = None;
    for v in 0..27u8 {
        if c.contains(&v) {
            continue;
        }
        if c.iter().all(|&u| !g.adj[u as usize][v as usize]) {
            if found.is_some() {
                return None;
            }
            found = Some(v);
        }
    }
    found
}

/// Combinatorial data extracted from a 5-cycle with exactly one chord,
/// used to assemble its canonical rational form downstream.
#[derive(Clone, Debug)]
pub struct PentagonStructure {
    /// The triangle through the chord: the two chord endpoints plus their
    /// common neighbor, which sits between them on the cycle.
    pub h1: [usize; 3],
    /// The chord itself.
    pub chord: (u8, u8),
    /// The cycle edge joining the two vertices not involved in `h1`.
    pub far_edge: (u8, u8),
    /// The unique triangle through `far_edge`.
    pub h2: [usize; 3],
    /// The third vertex of `h2` (not on the cycle).
    pub l: usize,
}

/// Analyze a one-chord 5-cycle. Returns `None` when the chord count is not
/// exactly one.
pub fn pentagon_structure(g: &Graph27, c: &[u8]) -> Option<PentagonStructure> {
    assert_eq!(c.len(), 5);
    let ch = chords(g, c);
    if ch.len() != 1 {
        return None;
    }
    let (a, b) = ch[0];
    // The chord spans two cycle vertices at cyclic distance 2; the vertex
    // between them is cycle-adjacent to both.
    let pos = |x: u8| c.iter().position(|&v| v == x).unwrap();
    let (pa, pb) = (pos(a), pos(b));
    let between = (0..5)
        .find(|&m| {
            let prev = c[(m + 4) % 5];
            let next = c[(m + 1) % 5];
            (prev == a && next == b) || (prev == b && next == a)
        })
        .map(|m| c[m])?;
    let mut h1 = [a as usize, b as usize, between as usize];
    h1.sort_unstable();
    debug_assert_eq!(h1, triangle_through_edge(g, a as usize, b as usize));
    // The two remaining cycle vertices are consecutive on the cycle.
    let rest: Vec<u8> = c
        .iter()
        .copied()
        .filter(|&v| v != a && v != b && v != between)
        .collect();
    debug_assert_eq!(rest.len(), 2);
    let (d, e) = (rest[0], rest[1]);
    debug_assert!(g.adj[d as usize][e as usize]);
    let h2 = triangle_through_edge(g, d as usize, e as usize);
    let l = *h2
        .iter()
        .find(|&&v| v != d as usize && v != e as usize)
        .unwrap();
    let _ = (pa, pb);
    Some(PentagonStructure {
        h1,
        chord: (a, b),
        far_edge: (d.min(e), d.max(e)),
        h2,
        l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::standard_generators;

    #[test]
    fn canonical_form_is_rotation_reflection_invariant() {
        let c = canonical_cycle(&[5, 3, 9, 7, 4]);
        assert_eq!(c, canonical_cycle(&[9, 7, 4, 5, 3]));
        assert_eq!(c, canonical_cycle(&[3, 5, 4, 7, 9]));
        assert_eq!(c[0], 3);
    }

    #[test]
    fn triangle_count_matches() {
        let g = Graph27::new();
        let t = enumerate_cycles(&g, 3, false);
        assert_eq!(t.len(), 45);
        assert!(t.iter().all(|c| chord_count(&g, c) == 0));
    }

    #[test]
    fn four_cycles_are_chordless_single_orbit() {
        let g = Graph27::new();
        let c4 = enumerate_cycles(&g, 4, false);
        assert_eq!(c4.len(), 1080);
        assert!(c4.iter().all(|c| chord_count(&g, c) == 0));
        let orbits = orbit_decompose(&g, &c4, &standard_generators());
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].size, 1080);
    }
}
