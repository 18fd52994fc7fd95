//! Exact convex hulls in dimension <= 4 with full face lattices.
//!
//! The hull is built by beneath-beyond insertion over exact rationals:
//! a starting simplex is grown one point at a time, keeping a simplicial
//! triangulation of the boundary whose supporting hyperplanes are exact.
//! Afterwards coplanar simplices are merged into true facets, vertices are
//! certified by the rank of their active facet normals, and the face
//! lattice is obtained by closing the facet vertex sets under pairwise
//! intersection. Every step is an exact rational computation; there are no
//! epsilon tests anywhere.
//!
//! Inputs of any affine dimension `k <= ambient` are accepted: the point
//! set is first mapped isomorphically onto a `k`-dimensional chart. For
//! full-dimensional inputs the chart is the identity, so facet normals are
//! expressed in the original coordinates.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;

use crate::linalg::{mat_nullspace, mat_rank, IncRank};
use crate::rat::{Int, Rat};

/// A facet `normal . x = offset` of a hull, with `normal . x <= offset`
/// holding on the whole polytope.
#[derive(Debug, Clone)]
pub struct Facet {
    /// Primitive integer outer normal (gcd of entries one), expressed in
    /// chart coordinates; for a full-dimensional hull these are the ambient
    /// coordinates.
    pub normal: Vec<Int>,
    /// Right-hand side of the supporting hyperplane in chart coordinates.
    pub offset: Rat,
    /// Indices into [`Hull::vertices`] of the vertices lying on this facet.
    pub vertices: BTreeSet<usize>,
}

/// A convex hull with certified vertices, facets, and full face lattice.
#[derive(Debug, Clone)]
pub struct Hull {
    /// Dimension of the ambient coordinate space of the input points.
    pub ambient: usize,
    /// Affine dimension of the hull.
    pub dim: usize,
    /// The extreme points among the inputs, in ambient coordinates,
    /// ordered deterministically (lexicographically).
    pub vertices: Vec<Vec<Rat>>,
    /// Facets, i.e. faces of dimension `dim - 1`. Empty when `dim == 0`.
    pub facets: Vec<Facet>,
    /// `faces[d]` lists the vertex-index sets of the `d`-dimensional faces
    /// for `0 <= d < dim` (proper faces only; the hull itself is omitted).
    pub faces: Vec<Vec<BTreeSet<usize>>>,
}

impl Hull {
    /// Number of proper faces in each dimension `0..dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|layer| layer.len()).collect()
    }

    /// True when every vertex lies on exactly `dim` facets.
    pub fn is_simple(&self) -> bool {
        (0..self.vertices.len()).all(|v| {
            self.facets.iter().filter(|f| f.vertices.contains(&v)).count() == self.dim
        })
    }

    /// Facets' primitive integer outer normals.
    pub fn facet_normals(&self) -> Vec<Vec<Int>> {
        self.facets.iter().map(|f| f.normal.clone()).collect()
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::default();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A boundary simplex of the incremental triangulation.
struct TriFacet {
    verts: Vec<usize>,
    normal: Vec<Rat>,
    offset: Rat,
}

/// Hyperplane through the affinely independent chart points `ids`, oriented
/// so the interior witness `m` satisfies `normal . m < offset`.
fn oriented_hyperplane(
    ids: &[usize],
    pts: &[Vec<Rat>],
    m: &[Rat],
) -> Result<(Vec<Rat>, Rat), String> {
    let v0 = &pts[ids[0]];
    let rows: Vec<Vec<Rat>> = ids[1..].iter().map(|&i| sub(&pts[i], v0)).collect();
    let kernel = mat_nullspace(&rows);
    if kernel.len() != 1 {
        return Err(format!(
            "facet candidate is affinely degenerate: {} points span a kernel of size {}",
            ids.len(),
            kernel.len()
        ));
    }
    let mut normal = kernel.into_iter().next().unwrap();
    let mut offset = dot(&normal, v0);
    let side = dot(&normal, m);
    if side == offset {
        return Err("interior witness lies on a candidate facet hyperplane".into());
    }
    if side > offset {
        for c in &mut normal {
            *c = -c.clone();
        }
        offset = -offset;
    }
    Ok((normal, offset))
}

fn to_int_vec(v: &[Rat]) -> Vec<Int> {
    v.iter()
        .map(|x| {
            debug_assert!(x.is_integer());
            x.numer().clone()
        })
        .collect()
}

/// Exact convex hull of rational points of any affine dimension `<= 4`.
///
/// Points are deduplicated; the result lists only true extreme points as
/// vertices. Errors are reserved for genuinely malformed input (no points,
/// inconsistent coordinate lengths) and internal certification failures.
pub fn convex_hull(points: &[Vec<Rat>]) -> Result<Hull, String> {
    if points.is_empty() {
        return Err("convex hull of an empty point set".into());
    }
    let ambient = points[0].len();
    if points.iter().any(|p| p.len() != ambient) {
        return Err("points with inconsistent coordinate lengths".into());
    }

    // Deduplicate; sorted order fixes the insertion order deterministically.
    let pts: Vec<Vec<Rat>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();

    // Affine dimension and a greedy affine basis rooted at pts[0].
    let mut inc = IncRank::new(ambient);
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    let mut simplex_ids: Vec<usize> = vec![0];
    for (i, p) in pts.iter().enumerate().skip(1) {
        let d = sub(p, &pts[0]);
        if inc.insert(&d) {
            basis.push(d);
            simplex_ids.push(i);
        }
    }
    let dim = basis.len();

    if dim == 0 {
        return Ok(Hull {
            ambient,
            dim: 0,
            vertices: vec![pts[0].clone()],
            facets: Vec::new(),
            faces: Vec::new(),
        });
    }

    // Chart coordinates: identity for full-dimensional input, otherwise the
    // injective linear image q = B (p - p0) onto Q^dim.
    let chart: Vec<Vec<Rat>> = if dim == ambient {
        pts.clone()
    } else {
        pts.iter()
            .map(|p| {
                let d = sub(p, &pts[0]);
                basis.iter().map(|b| dot(b, &d)).collect()
            })
            .collect()
    };

    if dim == 1 {
        return hull_dim1(ambient, pts, chart);
    }

    // --- Beneath-beyond on the chart points. -----------------------------
    let k = dim;
    let centroid: Vec<Rat> = {
        let mut c = vec![Rat::default(); k];
        for &i in &simplex_ids {
            for (j, x) in chart[i].iter().enumerate() {
                c[j] += x;
            }
        }
        let n = crate::rat::rat_i((k + 1) as i64);
        c.into_iter().map(|x| x / &n).collect()
    };

    let mut tri: Vec<TriFacet> = Vec::new();
    for omit in 0..=k {
        let verts: Vec<usize> =
            simplex_ids.iter().enumerate().filter(|&(j, _)| j != omit).map(|(_, &i)| i).collect();
        let (normal, offset) = oriented_hyperplane(&verts, &chart, &centroid)?;
        tri.push(TriFacet { verts, normal, offset });
    }

    let in_simplex: BTreeSet<usize> = simplex_ids.iter().copied().collect();
    for p in (0..pts.len()).filter(|i| !in_simplex.contains(i)) {
        let q = &chart[p];
        let visible: Vec<usize> =
            (0..tri.len()).filter(|&f| dot(&tri[f].normal, q) > tri[f].offset).collect();
        if visible.is_empty() {
            continue; // inside or on the current hull: never an extreme point
        }
        // Horizon ridges appear in exactly one visible facet.
        let mut ridge_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &f in &visible {
            for omit in 0..k {
                let mut ridge: Vec<usize> = tri[f]
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != omit)
                    .map(|(_, &v)| v)
                    .collect();
                ridge.sort_unstable();
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        let visible_set: BTreeSet<usize> = visible.into_iter().collect();
        let mut keep = Vec::with_capacity(tri.len());
        for (f, facet) in tri.into_iter().enumerate() {
            if !visible_set.contains(&f) {
                keep.push(facet);
            }
        }
        tri = keep;
        for (ridge, count) in ridge_count {
            if count != 1 {
                continue;
            }
            let mut verts = ridge;
            verts.push(p);
            let (normal, offset) = oriented_hyperplane(&verts, &chart, &centroid)?;
            tri.push(TriFacet { verts, normal, offset });
        }
    }

    // --- Merge coplanar simplices into true facets. -----------------------
    // Outward-oriented primitive normals make coplanarity literal equality.
    let mut planes: BTreeMap<(Vec<Int>, Rat), ()> = BTreeMap::new();
    for f in &tri {
        planes.entry((to_int_vec(&f.normal), f.offset.clone())).or_insert(());
    }
    let planes: Vec<(Vec<Int>, Rat)> = planes.into_keys().collect();

    // Exact incidence of every point with every facet hyperplane, plus the
    // containment certificate normal . q <= offset.
    let plane_rats: Vec<Vec<Rat>> = planes
        .iter()
        .map(|(n, _)| n.iter().map(|c| Rat::from_integer(c.clone())).collect())
        .collect();
    let mut incident: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); planes.len()];
    let mut active_at: Vec<Vec<usize>> = vec![Vec::new(); pts.len()];
    for (i, q) in chart.iter().enumerate() {
        for (f, (_, offset)) in planes.iter().enumerate() {
            let v = dot(&plane_rats[f], q);
            if &v == offset {
                incident[f].insert(i);
                active_at[i].push(f);
            } else if &v > offset {
                return Err(format!(
                    "hull certification failed: point {i} lies outside facet hyperplane {f}"
                ));
            }
        }
    }

    // A boundary point is a vertex iff its active facet normals span the
    // full chart dimension (its supporting face is then zero-dimensional).
    let mut vertex_ids: Vec<usize> = Vec::new();
    for i in 0..pts.len() {
        if active_at[i].len() < k {
            continue;
        }
        let rows: Vec<Vec<Rat>> = active_at[i].iter().map(|&f| plane_rats[f].clone()).collect();
        if mat_rank(&rows) == k {
            vertex_ids.push(i);
        }
    }
    let vertex_pos: BTreeMap<usize, usize> =
        vertex_ids.iter().enumerate().map(|(pos, &i)| (i, pos)).collect();

    let facets: Vec<Facet> = planes
        .into_iter()
        .zip(incident)
        .map(|((normal, offset), inc)| Facet {
            normal,
            offset,
            vertices: inc.iter().filter_map(|i| vertex_pos.get(i).copied()).collect(),
        })
        .collect();
    for (f, facet) in facets.iter().enumerate() {
        if facet.vertices.len() < k {
            return Err(format!("facet {f} has fewer than {k} vertices"));
        }
    }

    // --- Face lattice: close facet vertex sets under intersection. --------
    let generators: Vec<BTreeSet<usize>> = facets.iter().map(|f| f.vertices.clone()).collect();
    let mut all: BTreeSet<BTreeSet<usize>> = generators.iter().cloned().collect();
    let mut frontier: Vec<BTreeSet<usize>> = generators.clone();
    while !frontier.is_empty() {
        let mut fresh: Vec<BTreeSet<usize>> = Vec::new();
        for face in &frontier {
            for gen in &generators {
                let meet: BTreeSet<usize> = face.intersection(gen).copied().collect();
                if !meet.is_empty() && !all.contains(&meet) {
                    all.insert(meet.clone());
                    fresh.push(meet);
                }
            }
        }
        frontier = fresh;
    }

    let mut faces: Vec<Vec<BTreeSet<usize>>> = vec![Vec::new(); k];
    for face in all {
        let ids: Vec<usize> = face.iter().map(|&v| vertex_ids[v]).collect();
        let base = &chart[ids[0]];
        let rows: Vec<Vec<Rat>> = ids[1..].iter().map(|&i| sub(&chart[i], base)).collect();
        let d = mat_rank(&rows);
        if d >= k {
            return Err("face lattice produced a face of full dimension".into());
        }
        faces[d].push(face);
    }

    let vertices: Vec<Vec<Rat>> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();
    Ok(Hull { ambient, dim: k, vertices, facets, faces })
}

fn hull_dim1(ambient: usize, pts: Vec<Vec<Rat>>, chart: Vec<Vec<Rat>>) -> Result<Hull, String> {
    let scalars: Vec<&Rat> = chart.iter().map(|q| &q[0]).collect();
    let lo = (0..pts.len()).min_by_key(|&i| scalars[i]).unwrap();
    let hi = (0..pts.len()).max_by_key(|&i| scalars[i]).unwrap();
    let (mut a, mut b) = (lo, hi);
    if pts[a] > pts[b] {
        std::mem::swap(&mut a, &mut b);
    }
    let unit = |s: i64| -> Vec<Int> { vec![Int::from(s)] };
    let facets = vec![
        Facet {
            normal: unit(if scalars[a] < scalars[b] { -1 } else { 1 }),
            offset: if scalars[a] < scalars[b] { -scalars[a].clone() } else { scalars[a].clone() },
            vertices: BTreeSet::from([0]),
        },
        Facet {
            normal: unit(if scalars[b] > scalars[a] { 1 } else { -1 }),
            offset: if scalars[b] > scalars[a] { scalars[b].clone() } else { -scalars[b].clone() },
            vertices: BTreeSet::from([1]),
        },
    ];
    Ok(Hull {
        ambient,
        dim: 1,
        vertices: vec![pts[a].clone(), pts[b].clone()],
        facets,
        faces: vec![vec![BTreeSet::from([0]), BTreeSet::from([1])]],
    })
}

/// Minkowski sum of two vertex sets (all pairwise sums, undeduplicated).
pub fn minkowski_points(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            out.push(p.iter().zip(q).map(|(x, y)| x + y).collect());
        }
    }
    out
}

/// Primitive copy of an integer vector: divided by the gcd of its entries.
/// Used to compare facet normals against reference columns up to scale.
pub fn primitive_int(v: &[Int]) -> Vec<Int> {
    let mut g = Int::from(0);
    for x in v {
        g = num_integer::gcd(g, x.abs());
    }
    if g == Int::from(0) {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    fn ipts(raw: &[&[i64]]) -> Vec<Vec<Rat>> {
        raw.iter().map(|p| p.iter().map(|&c| rat_i(c)).collect()).collect()
    }

    #[test]
    fn point_hull_is_zero_dimensional() {
        let h = convex_hull(&ipts(&[&[3, 4], &[3, 4]])).unwrap();
        assert_eq!(h.dim, 0);
        assert_eq!(h.vertices.len(), 1);
        assert!(h.f_vector().is_empty());
    }

    #[test]
    fn segment_with_midpoint_has_two_vertices() {
        let pts = vec![
            vec![rat_i(0), rat_i(0), rat_i(0), rat_i(0)],
            vec![rat_i(1), rat_i(0), rat_i(0), rat_i(0)],
            vec![rat(1, 2), rat_i(0), rat_i(0), rat_i(0)],
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.dim, 1);
        assert_eq!(h.f_vector(), vec![2]);
        assert_eq!(h.vertices.len(), 2);
        assert_eq!(h.vertices[0][0], rat_i(0));
        assert_eq!(h.vertices[1][0], rat_i(1));
    }

    #[test]
    fn square_discards_edge_midpoints_and_interior_points() {
        let mut pts = ipts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        pts.push(vec![rat(1, 2), rat(1, 2)]); // interior
        pts.push(vec![rat(1, 2), rat_i(0)]); // boundary, not extreme
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.dim, 2);
        assert_eq!(h.f_vector(), vec![4, 4]);
        assert!(h.is_simple());
        let normals: BTreeSet<Vec<Int>> = h.facet_normals().into_iter().collect();
        let expect: BTreeSet<Vec<Int>> = [[1i64, 0], [-1, 0], [0, 1], [0, -1]]
            .iter()
            .map(|n| n.iter().map(|&c| Int::from(c)).collect())
            .collect();
        assert_eq!(normals, expect);
    }

    #[test]
    fn flat_square_in_four_dimensions_uses_a_chart() {
        let pts = ipts(&[&[0, 0, 7, 1], &[1, 0, 7, 1], &[0, 1, 7, 1], &[1, 1, 7, 1]]);
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.ambient, 4);
        assert_eq!(h.dim, 2);
        assert_eq!(h.f_vector(), vec![4, 4]);
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.vertices[0].len(), 4);
    }

    #[test]
    fn cube_face_lattice() {
        let mut pts = Vec::new();
        for mask in 0..8u32 {
            pts.push(vec![
                rat_i((mask & 1) as i64),
                rat_i(((mask >> 1) & 1) as i64),
                rat_i(((mask >> 2) & 1) as i64),
            ]);
        }
        pts.push(vec![rat(1, 2), rat(1, 2), rat(1, 2)]);
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.f_vector(), vec![8, 12, 6]);
        assert!(h.is_simple());
    }

    #[test]
    fn four_dimensional_simplex_and_cube() {
        let simplex = ipts(&[
            &[0, 0, 0, 0],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        let h = convex_hull(&simplex).unwrap();
        assert_eq!(h.f_vector(), vec![5, 10, 10, 5]);
        assert!(h.is_simple());

        let mut cube = Vec::new();
        for mask in 0..16u32 {
            cube.push(vec![
                rat_i((mask & 1) as i64),
                rat_i(((mask >> 1) & 1) as i64),
                rat_i(((mask >> 2) & 1) as i64),
                rat_i(((mask >> 3) & 1) as i64),
            ]);
        }
        let h = convex_hull(&cube).unwrap();
        assert_eq!(h.f_vector(), vec![16, 32, 24, 8]);
        assert!(h.is_simple());
        let euler: i64 = 16 - 32 + 24 - 8;
        assert_eq!(euler, 0);
    }

    #[test]
    fn minkowski_sum_of_two_segments_is_a_square() {
        let a = ipts(&[&[0, 0], &[1, 0]]);
        let b = ipts(&[&[0, 0], &[0, 1]]);
        let h = convex_hull(&minkowski_points(&a, &b)).unwrap();
        assert_eq!(h.f_vector(), vec![4, 4]);
    }
}
