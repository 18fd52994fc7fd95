//! Circular orders of intersection points along each line, the region graph
//! they induce, and its chordless-cycle census.
//!
//! Each of the 27 lines meets ten others.  Writing the meeting points in a
//! line's two-point chart as `(alpha : beta)` gives ten points of the real
//! projective line; their cyclic order is the circular order.  The region
//! graph has the 135 meeting points as vertices and an edge for every pair
//! of points consecutive on a common line (270 edges).  Its chordless cycles
//! bound the polygonal regions into which the lines cut the surface.

use crate::rat::{Field, Rat};
use crate::schlaefli::{Graph27, LineLabel, ALL_LABELS};
use crate::surface::{intersection_point, Line};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A chart coordinate on the real projective line.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Slope {
    Finite(Rat),
    Infinity,
}

/// Coincident intersection points on a line (an Eckardt point): the order
/// along that line is not defined.
#[derive(Clone, Debug)]
pub struct DegenerateOrder {
    pub line: LineLabel,
    pub coincident: Vec<LineLabel>,
}

/// The circular order of the ten neighbor lines along each of the 27 lines,
/// as label indices into [`ALL_LABELS`].  Orders are stored starting at the
/// sorted position of the slope chart, which is an arbitrary but fixed
/// rotation; compare with [`canonical_cyclic`].
#[derive(Clone, Debug)]
pub struct CircularOrders {
    pub per_line: Vec<Vec<u8>>,
}

/// Compute all 27 circular orders, or report the lines carrying coincident
/// intersection points.
pub fn circular_orders(
    lines: &[Line<Rat>],
    graph: &Graph27,
) -> Result<CircularOrders, Vec<DegenerateOrder>> {
    assert_eq!(lines.len(), 27);
    let mut per_line = Vec::with_capacity(27);
    let mut bad = Vec::new();
    for li in 0..27 {
        let mut slots: Vec<(Slope, u8)> = Vec::with_capacity(10);
        for mj in 0..27u8 {
            if !graph.adj[li][mj as usize] {
                continue;
            }
            let inter = intersection_point(&lines[li], &lines[mj as usize]);
            let (alpha, beta) = inter.on_a;
            let slope = if Zero::is_zero(&beta) {
                Slope::Infinity
            } else {
                Slope::Finite(alpha / beta)
            };
            slots.push((slope, mj));
        }
        assert_eq!(slots.len(), 10, "every line meets exactly ten others");
        slots.sort();
        let coincident: Vec<LineLabel> = slots
            .windows(2)
            .filter(|w| w[0].0 == w[1].0)
            .flat_map(|w| [ALL_LABELS[w[0].1 as usize], ALL_LABELS[w[1].1 as usize]])
            .collect();
        if !coincident.is_empty() {
            bad.push(DegenerateOrder {
                line: ALL_LABELS[li],
                coincident,
            });
            per_line.push(Vec::new());
            continue;
        }
        per_line.push(slots.into_iter().map(|(_, m)| m).collect());
    }
    if bad.is_empty() {
        Ok(CircularOrders { per_line })
    } else {
        Err(bad)
    }
}

/// Canonical representative of a cyclic sequence up to rotation and
/// reflection: the lexicographically smallest among all rotations of the
/// sequence and of its reverse.
pub fn canonical_cyclic<T: Clone + Ord>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    assert!(n > 0);
    let mut best: Option<Vec<T>> = None;
    let rev: Vec<T> = seq.iter().rev().cloned().collect();
    for s in [seq, rev.as_slice()] {
        for r in 0..n {
            let cand: Vec<T> = (0..n).map(|t| s[(r + t) % n].clone()).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// The graph on the 135 intersection points.
#[derive(Clone, Debug)]
pub struct RegionGraph {
    /// Vertex v = intersection of the two lines `pairs[v]` (label indices, ordered).
    pub pairs: Vec<(u8, u8)>,
    /// Vertex lookup by line pair.
    pub index: BTreeMap<(u8, u8), u32>,
    /// Edges as ordered vertex pairs.
    pub edges: Vec<(u32, u32)>,
    /// Adjacency lists.
    pub adj: Vec<Vec<u32>>,
}

/// Build the region graph: vertices are the incident line pairs; two
/// vertices sharing a line are joined when consecutive in that line's
/// circular order.
pub fn region_graph(orders: &CircularOrders) -> RegionGraph {
    let mut pairs: Vec<(u8, u8)> = Vec::new();
    let mut index = BTreeMap::new();
    for li in 0..27u8 {
        for &mj in &orders.per_line[li as usize] {
            let key = (li.min(mj), li.max(mj));
            if !index.contains_key(&key) {
                index.insert(key, pairs.len() as u32);
                pairs.push(key);
            }
        }
    }
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut adj = vec![Vec::new(); pairs.len()];
    for li in 0..27u8 {
        let ord = &orders.per_line[li as usize];
        let n = ord.len();
        for t in 0..n {
            let a = ord[t];
            let b = ord[(t + 1) % n];
            let va = index[&(li.min(a), li.max(a))];
            let vb = index[&(li.min(b), li.max(b))];
            let e = (va.min(vb), va.max(vb));
            if !edges.contains(&e) {
                edges.push(e);
                adj[e.0 as usize].push(e.1);
                adj[e.1 as usize].push(e.0);
            }
        }
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    RegionGraph {
        pairs,
        index,
        edges,
        adj,
    }
}

/// Length cap for the region census sweep.  The polygonal regions cut out
/// by the lines have at most five sides; sweeping to seven verifies that
/// lengths six and seven are absent rather than assuming it.  The cap is
/// essential: the graph also carries chordless cycles that bound no region
/// (the ten crossings along any single line already form a chordless
/// decagon), and those grow combinatorially with length.
pub const CENSUS_MAX_LENGTH: usize = 7;

impl RegionGraph {
    fn adjacent(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// All chordless cycles of length at most `max_len`, each listed once
    /// as a vertex sequence starting at its minimal vertex.
    ///
    /// Paths grow from a start vertex `v0` through vertices larger than
    /// `v0`; a new vertex may not be adjacent to any interior path vertex
    /// (that would create a chord), and a neighbor of `v0` closes a cycle
    /// rather than extending the path.  Each cycle is found twice, once per
    /// direction, and kept when the second vertex is smaller than the last.
    pub fn chordless_cycles_up_to(&self, max_len: usize) -> Vec<Vec<u32>> {
        let n = self.pairs.len() as u32;
        let mut out = Vec::new();
        let mut path: Vec<u32> = Vec::new();
        for v0 in 0..n {
            path.clear();
            path.push(v0);
            self.grow(v0, &mut path, max_len, &mut out);
        }
        out
    }

    fn grow(&self, v0: u32, path: &mut Vec<u32>, max_len: usize, out: &mut Vec<Vec<u32>>) {
        let last = *path.last().unwrap();
        let k = path.len();
        for &w in &self.adj[last as usize] {
            if w <= v0 || path.contains(&w) {
                continue;
            }
            // A chord from w to an interior vertex (neither v0 nor the last
            // vertex) rules out every cycle through the current path.
            if k >= 3 && path[1..k - 1].iter().any(|&p| self.adjacent(w, p)) {
                continue;
            }
            // At k == 1 every neighbor of v0 is "adjacent to v0" by virtue of
            // the edge being walked, so closing only makes sense from k >= 2.
            if k >= 2 && self.adjacent(w, v0) {
                // Closing edge; extending past w would leave the chord (w, v0).
                if path[1] < w {
                    let mut cyc = path.clone();
                    cyc.push(w);
                    out.push(cyc);
                }
                continue;
            }
            if k + 1 < max_len {
                path.push(w);
                self.grow(v0, path, max_len, out);
                path.pop();
            }
        }
    }

    /// Is the vertex sequence a chordless cycle: at least three distinct
    /// vertices, consecutive ones adjacent, all others non-adjacent?
    pub fn is_chordless_cycle(&self, cycle: &[u32]) -> bool {
        let k = cycle.len();
        if k < 3 {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                if cycle[i] == cycle[j] {
                    return false;
                }
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.adjacent(cycle[i], cycle[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Census of the chordless cycles up to [`CENSUS_MAX_LENGTH`], keyed by
    /// cycle length.  The entries of length at most five are the polygonal
    /// regions; [`RegionGraph::certify_region_cover`] checks that they tile
    /// a closed surface.
    pub fn census(&self) -> BTreeMap<usize, Vec<Vec<u32>>> {
        let mut m: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
        for c in self.chordless_cycles_up_to(CENSUS_MAX_LENGTH) {
            m.entry(c.len()).or_default().push(c);
        }
        m
    }

    /// Certify that the given cycles are the faces of a polygonal
    /// subdivision of a closed surface: every edge must lie on exactly two
    /// of them and every vertex (a crossing of two lines, hence four
    /// corners) on exactly four.  Together with the Euler count
    /// `V - E + F` this pins the census to the surface's cell structure.
    pub fn certify_region_cover(&self, regions: &[Vec<u32>]) -> Result<(), String> {
        let mut edge_count: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        let mut vertex_count = vec![0usize; self.pairs.len()];
        for cyc in regions {
            if !self.is_chordless_cycle(cyc) {
                return Err(format!("not a chordless cycle: {cyc:?}"));
            }
            let k = cyc.len();
            for t in 0..k {
                let a = cyc[t];
                let b = cyc[(t + 1) % k];
                *edge_count.entry((a.min(b), a.max(b))).or_default() += 1;
                vertex_count[a as usize] += 1;
            }
        }
        if edge_count.len() != self.edges.len() {
            return Err(format!(
                "only {} of {} edges covered",
                edge_count.len(),
                self.edges.len()
            ));
        }
        if let Some((e, c)) = edge_count.iter().find(|(_, &c)| c != 2) {
            return Err(format!("edge {e:?} lies on {c} regions, expected 2"));
        }
        if let Some(v) = vertex_count.iter().position(|&c| c != 4) {
            return Err(format!(
                "vertex {v} lies on {} regions, expected 4",
                vertex_count[v]
            ));
        }
        Ok(())
    }

    /// The cyclic sequence of lines supporting a region cycle: consecutive
    /// vertices share exactly one line, and those shared lines read off a
    /// closed walk in the line-intersection graph.
    pub fn label_cycle(&self, cycle: &[u32]) -> Vec<u8> {
        let n = cycle.len();
        let mut labels = Vec::with_capacity(n);
        for t in 0..n {
            let (a0, a1) = self.pairs[cycle[t] as usize];
            let (b0, b1) = self.pairs[cycle[(t + 1) % n] as usize];
            let common = if a0 == b0 || a0 == b1 {
                a0
            } else if a1 == b0 || a1 == b1 {
                a1
            } else {
                panic!("consecutive region-graph vertices must share a line")
            };
            labels.push(common);
        }
        labels
    }
}

/// The exposure summary of a census: which triangles appear, which lines
/// appear in none of them, and the label cycles of the pentagon regions.
#[derive(Clone, Debug)]
pub struct Exposure {
    /// Sorted 3-sets of label indices bounding triangle regions.
    pub triangles: Vec<[u8; 3]>,
    /// Sorted label indices absent from every triangle region.
    pub unused_lines: Vec<u8>,
    /// Canonical label cycles of the pentagon regions.
    pub pentagon_label_cycles: Vec<Vec<u8>>,
}

pub fn exposure(graph: &RegionGraph) -> Exposure {
    let census = graph.census();
    let empty = Vec::new();
    let tris = census.get(&3).unwrap_or(&empty);
    let mut triangles: Vec<[u8; 3]> = tris
        .iter()
        .map(|c| {
            let mut ls = graph.label_cycle(c);
            ls.sort_unstable();
            [ls[0], ls[1], ls[2]]
        })
        .collect();
    triangles.sort();
    let mut used = [false; 27];
    for t in &triangles {
        for &l in t {
            used[l as usize] = true;
        }
    }
    let unused_lines: Vec<u8> = (0..27u8).filter(|&l| !used[l as usize]).collect();
    let pents = census.get(&5).unwrap_or(&empty);
    let mut pentagon_label_cycles: Vec<Vec<u8>> = pents
        .iter()
        .map(|c| canonical_cyclic(&graph.label_cycle(c)))
        .collect();
    pentagon_label_cycles.sort();
    Exposure {
        triangles,
        unused_lines,
        pentagon_label_cycles,
    }
}

/// Intersection points of all incident pairs, keyed by ordered label-index
/// pairs, as primitive projective points.
pub fn intersection_table(lines: &[Line<Rat>], graph: &Graph27) -> BTreeMap<(u8, u8), [Rat; 4]> {
    let mut table = BTreeMap::new();
    for i in 0..27u8 {
        for j in (i + 1)..27u8 {
            if !graph.adj[i as usize][j as usize] {
                continue;
            }
            let inter = intersection_point(&lines[i as usize], &lines[j as usize]);
            let p = crate::rat::primitive(inter.point.as_slice());
            table.insert((i, j), [p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()]);
        }
    }
    table
}

/// Every tritangent triple, its plane, and its Eckardt flag.
#[derive(Clone, Debug)]
pub struct TriplePlane<F> {
    pub triple: [LineLabel; 3],
    pub plane: [F; 4],
    pub eckardt: bool,
}

/// The 45 tritangent planes with Eckardt flags, in triple order.
pub fn tritangent_planes<F: Field>(lines: &[Line<F>]) -> Vec<TriplePlane<F>> {
    use crate::schlaefli::triangles;
    use crate::surface::{eckardt_flag, tritangent_plane};
    triangles()
        .into_iter()
        .map(|t| {
            let trio = [&lines[t[0] as usize], &lines[t[1] as usize], &lines[t[2] as usize]];
            TriplePlane {
                triple: [
                    ALL_LABELS[t[0] as usize],
                    ALL_LABELS[t[1] as usize],
                    ALL_LABELS[t[2] as usize],
                ],
                plane: tritangent_plane(&trio),
                eckardt: eckardt_flag(&trio),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_cyclic_handles_rotation_and_reflection() {
        let a = vec![3u8, 1, 4, 1, 5];
        let rotated = vec![4u8, 1, 5, 3, 1];
        let reflected = vec![5u8, 1, 4, 1, 3];
        let ca = canonical_cyclic(&a);
        assert_eq!(ca, canonical_cyclic(&rotated));
        assert_eq!(ca, canonical_cyclic(&reflected));
        assert_eq!(ca[0], *a.iter().min().unwrap());
    }
}
