//! The 27 line classes on a smooth cubic surface and their incidence graph.
//!
//! Labels follow the classical blow-up naming for six points in the plane:
//! `E1..E6` (exceptional), `Fij` for `i<j` (strict transforms of the lines
//! through points i and j), `G1..G6` (strict transforms of the conics
//! through five of the six points). Two labels are adjacent when the
//! corresponding lines on the surface meet. The graph is the 10-regular
//! strongly regular graph srg(27, 10, 1, 5).
//!
//! Canonical index order: `E1..E6` (0-5), `F12,F13,...,F56` lexicographic
//! (6-20), `G1..G6` (21-26).

use std::fmt;

/// One of the 27 line classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LineLabel {
    /// Exceptional class over point `i` (1-based).
    E(u8),
    /// Line through points `i < j` (1-based).
    F(u8, u8),
    /// Conic omitting point `i` (1-based).
    G(u8),
}

impl LineLabel {
    /// Canonical position in 0..27.
    pub fn index(self) -> usize {
        match self {
            LineLabel::E(i) => (i - 1) as usize,
            LineLabel::F(i, j) => {
                debug_assert!(i < j);
                let (i, j) = ((i - 1) as usize, (j - 1) as usize);
                // Pairs (0,1),(0,2),...,(4,5) in lex order, offset 6.
                6 + (0..i).map(|k| 5 - k).sum::<usize>() + (j - i - 1)
            }
            LineLabel::G(i) => 20 + i as usize,
        }
    }

    pub fn from_index(idx: usize) -> LineLabel {
        ALL_LABELS[idx]
    }

    pub fn parse(s: &str) -> Option<LineLabel> {
        let s = s.trim();
        let mut ch = s.chars();
        let kind = ch.next()?;
        let rest: String = ch.collect();
        match kind {
            'E' | 'e' => {
                let i: u8 = rest.parse().ok()?;
                (1..=6).contains(&i).then_some(LineLabel::E(i))
            }
            'G' | 'g' => {
                let i: u8 = rest.parse().ok()?;
                (1..=6).contains(&i).then_some(LineLabel::G(i))
            }
            'F' | 'f' => {
                let digits: Vec<u8> = rest
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as u8))
                    .collect::<Option<_>>()?;
                if digits.len() != 2 {
                    return None;
                }
                let (i, j) = (digits[0], digits[1]);
                ((1..=6).contains(&i) && (1..=6).contains(&j) && i != j)
                    .then_some(LineLabel::F(i.min(j), i.max(j)))
            }
            _ => None,
        }
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::E(i) => write!(f, "E{}", i),
            LineLabel::F(i, j) => write!(f, "F{}{}", i, j),
            LineLabel::G(i) => write!(f, "G{}", i),
        }
    }
}

/// All 27 labels in canonical index order.
pub static ALL_LABELS: [LineLabel; 27] = {
    let mut out = [LineLabel::E(1); 27];
    let mut k = 0;
    while k < 6 {
        out[k] = LineLabel::E(k as u8 + 1);
        k += 1;
    }
    let mut i = 1u8;
    let mut idx = 6;
    while i <= 5 {
        let mut j = i + 1;
        while j <= 6 {
            out[idx] = LineLabel::F(i, j);
            idx += 1;
            j += 1;
        }
        i += 1;
    }
    let mut g = 1u8;
    while g <= 6 {
        out[20 + g as usize] = LineLabel::G(g);
        g += 1;
    }
    out
};

/// Incidence of two line classes (true when the lines meet on the surface).
pub fn adjacent(a: LineLabel, b: LineLabel) -> bool {
    use LineLabel::*;
    match (a, b) {
        (E(_), E(_)) | (G(_), G(_)) => false,
        (E(i), G(j)) | (G(j), E(i)) => i != j,
        (E(i), F(j, k)) | (F(j, k), E(i)) => i == j || i == k,
        (G(i), F(j, k)) | (F(j, k), G(i)) => i == j || i == k,
        (F(i, j), F(k, l)) => i != k && i != l && j != k && j != l,
    }
}

/// The incidence graph on index space, with adjacency bitmasks.
#[derive(Clone, Debug)]
pub struct Graph27 {
    pub adj: [[bool; 27]; 27],
    pub mask: [u32; 27],
}

impl Graph27 {
    pub fn new() -> Self {
        let mut adj = [[false; 27]; 27];
        let mut mask = [0u32; 27];
        for i in 0..27 {
            for j in 0..27 {
                if i != j && adjacent(ALL_LABELS[i], ALL_LABELS[j]) {
                    adj[i][j] = true;
                    mask[i] |= 1 << j;
                }
            }
        }
        Graph27 { adj, mask }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.mask[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..27 {
            for j in (i + 1)..27 {
                if self.adj[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Common-neighbor count of two distinct vertices.
    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        (self.mask[i] & self.mask[j]).count_ones() as usize
    }
}

impl Default for Graph27 {
    fn default() -> Self {
        Self::new()
    }
}

/// The 45 triangles (triples of pairwise-incident lines), sorted.
pub fn triangles() -> Vec<[usize; 3]> {
    let g = Graph27::new();
    let mut out = Vec::new();
    for i in 0..27 {
        for j in (i + 1)..27 {
            if !g.adj[i][j] {
                continue;
            }
            for k in (j + 1)..27 {
                if g.adj[i][k] && g.adj[j][k] {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// The unique triangle containing a given incident pair (each edge lies in
/// exactly one triangle since the graph has lambda = 1).
pub fn triangle_through_edge(g: &Graph27, i: usize, j: usize) -> [usize; 3] {
    debug_assert!(g.adj[i][j]);
    let common = g.mask[i] & g.mask[j];
    debug_assert_eq!(common.count_ones(), 1);
    let k = common.trailing_zeros() as usize;
    let mut t = [i, j, k];
    t.sort_unstable();
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_roundtrip_and_order() {
        for idx in 0..27 {
            assert_eq!(ALL_LABELS[idx].index(), idx);
        }
        assert_eq!(LineLabel::F(1, 2).index(), 6);
        assert_eq!(LineLabel::F(5, 6).index(), 20);
        assert_eq!(LineLabel::parse("F21"), Some(LineLabel::F(1, 2)));
        assert_eq!(LineLabel::parse("G6"), Some(LineLabel::G(6)));
        assert_eq!(LineLabel::parse("E7"), None);
    }

    #[test]
    fn graph_is_srg_27_10_1_5() {
        let g = Graph27::new();
        for v in 0..27 {
            assert_eq!(g.degree(v), 10);
        }
        assert_eq!(g.edges().len(), 135);
        for i in 0..27 {
            for j in (i + 1)..27 {
                let c = g.common_neighbors(i, j);
                if g.adj[i][j] {
                    assert_eq!(c, 1, "adjacent pair must have 1 common neighbor");
                } else {
                    assert_eq!(c, 5, "non-adjacent pair must have 5 common neighbors");
                }
            }
        }
    }

    #[test]
    fn forty_five_triangles() {
        assert_eq!(triangles().len(), 45);
    }
}
