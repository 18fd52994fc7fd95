//! The Newton–Minkowski polytope of the chart denominators, its dual
//! simplicial complex, and dlog-residue calculus on the u-coordinates.
//!
//! The polytope is the Newton polytope of the product `g1 * g2 * ... * g11`
//! of the eleven denominator factors of the positive chart, computed as an
//! iterated Minkowski sum of the individual Newton polytopes. Its facet
//! normals reproduce the exponent matrix of the monomial chart inverse, its
//! normal fan is encoded by the clique complex of the trinomial support
//! graph, and the boundary structure of the canonical 4-form is checked by
//! exact residue computations on the u-coordinates.

use std::collections::{BTreeMap, BTreeSet};

use once_cell::sync::Lazy;

use crate::fixtures;
use crate::hull::{convex_hull, minkowski_points, primitive_int, Hull};
use crate::linalg::det_f;
use crate::moduli::{ABCD_EXPONENT_MATRIX, TRINOMIAL_SUPPORTS};
use crate::mpoly::MPoly;
use crate::rat::{rat_i, Int, Rat};

// ---------------------------------------------------------------------------
// The eleven denominator polynomials of the positive chart.
// ---------------------------------------------------------------------------

fn poly4(terms: &[[u16; 4]]) -> MPoly {
    MPoly::from_terms(4, terms.iter().map(|e| (e.to_vec(), rat_i(1))))
}

/// The eleven irreducible factors appearing in the denominators of the
/// twenty minors and the conic invariant on the `(a,b,c,d)` chart, as
/// polynomials in `a, b, c, d`. Their values agree with
/// [`crate::moduli::g_factors`] everywhere.
pub fn g_polynomials() -> [MPoly; 11] {
    let g8 = poly4(&[
        [0, 1, 1, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ]);
    let g9 = g8.add(&poly4(&[[1, 1, 0, 1]]));
    let g10 = g9.add(&poly4(&[[1, 1, 1, 1]]));
    let g11 = g10.add(&poly4(&[[1, 1, 1, 0]]));
    [
        poly4(&[[1, 0, 0, 0], [0, 0, 0, 0]]),
        poly4(&[[0, 1, 0, 0], [0, 0, 0, 0]]),
        poly4(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]),
        poly4(&[[0, 0, 1, 0], [0, 0, 0, 0]]),
        poly4(&[[0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 0]]),
        poly4(&[[0, 0, 0, 1], [0, 0, 0, 0]]),
        poly4(&[[1, 1, 0, 1], [0, 1, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]]),
        g8,
        g9,
        g10,
        g11,
    ]
}

/// Exact convex hull of the Minkowski sum of the Newton polytopes of the
/// given 4-variable polynomials, built by iterated pairwise summation so
/// the candidate point set stays small.
pub fn newton_minkowski(polys: &[MPoly]) -> Result<Hull, String> {
    if polys.is_empty() {
        return Err("Minkowski sum of an empty polynomial list".into());
    }
    let exps = |p: &MPoly| -> Result<Vec<Vec<Rat>>, String> {
        if p.arity != 4 {
            return Err(format!("expected 4-variable polynomials, got arity {}", p.arity));
        }
        if p.is_zero() {
            return Err("Newton polytope of the zero polynomial".into());
        }
        Ok(p.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| rat_i(x as i64)).collect())
            .collect())
    };
    let mut hull = convex_hull(&exps(&polys[0])?)?;
    for p in &polys[1..] {
        let candidates = minkowski_points(&hull.vertices, &exps(p)?);
        hull = convex_hull(&candidates)?;
    }
    Ok(hull)
}

/// Build the full-dimensional polytope from the eleven chart denominators.
pub fn build_polytope() -> Result<Hull, String> {
    let hull = newton_minkowski(&g_polynomials())?;
    if hull.dim != 4 {
        return Err(format!("degenerate input set: polytope dimension {} < 4", hull.dim));
    }
    Ok(hull)
}

/// The polytope, built once and shared.
pub static POLYTOPE: Lazy<Hull> =
    Lazy::new(|| build_polytope().expect("the denominator polytope must build"));

// ---------------------------------------------------------------------------
// Facet normals against the chart-inverse exponent matrix.
// ---------------------------------------------------------------------------

/// Match the hull's facet normals against the fifteen columns of the
/// chart-inverse exponent matrix. The columns are the primitive ray
/// generators of the normal fan; as such they are the *inner* normals of
/// the polytope (the coordinate `u_i` vanishes where its facet is reached),
/// so the match is `outer normal = -column`, exactly and bijectively. A
/// column that fails the signed match is retried with the opposite sign so
/// either orientation convention of the reference table is accepted;
/// antipodal facet pairs make the two conventions non-mixable, and indeed a
/// uniform sign works. Returns `facet_of_u[i]` = the facet dual to `u_i`.
pub fn facet_normals_match_reference(hull: &Hull) -> Result<[usize; 15], String> {
    if hull.facets.len() != 15 {
        return Err(format!("expected 15 facets, found {}", hull.facets.len()));
    }
    let m = &*ABCD_EXPONENT_MATRIX;
    let mut by_normal: BTreeMap<Vec<Int>, usize> = BTreeMap::new();
    for (f, facet) in hull.facets.iter().enumerate() {
        if primitive_int(&facet.normal) != facet.normal {
            return Err(format!("facet {f} normal is not primitive"));
        }
        if by_normal.insert(facet.normal.clone(), f).is_some() {
            return Err("two facets share the same outer normal".into());
        }
    }
    let lookup = |sign: i64| -> Option<[usize; 15]> {
        let mut out = [usize::MAX; 15];
        for i in 0..15 {
            let col: Vec<Int> = (0..4).map(|r| Int::from(sign * m[r][i])).collect();
            out[i] = *by_normal.get(&col)?;
        }
        Some(out)
    };
    let out = lookup(-1)
        .or_else(|| lookup(1))
        .ok_or("reference columns do not match the facet normals under either sign")?;
    let distinct: BTreeSet<usize> = out.iter().copied().collect();
    if distinct.len() != 15 {
        return Err("reference columns did not match facets bijectively".into());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The clique complex of the trinomial support graph.
// ---------------------------------------------------------------------------

/// The simplicial complex dual to the polytope: vertices are the fifteen
/// u-coordinates, and a set of vertices forms a face exactly when all its
/// pairs are edges of the support graph (indices 0-based throughout).
#[derive(Debug, Clone)]
pub struct DeltaComplex {
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub tetrahedra: Vec<[usize; 4]>,
}

/// Build the clique complex from the trinomial supports: `(i, j)` is a
/// non-edge exactly when `u_j` occurs in the monomial of `u_i`'s trinomial.
pub fn delta_complex() -> Result<DeltaComplex, String> {
    let supports = &*TRINOMIAL_SUPPORTS;
    let n = supports.len();
    for i in 0..n {
        for &j in &supports[i] {
            if !supports[j].contains(&i) {
                return Err(format!("asymmetric support pair ({}, {})", i + 1, j + 1));
            }
        }
    }
    let adj = |i: usize, j: usize| i != j && !supports[i].contains(&j);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if adj(i, j) {
                edges.push([i, j]);
            }
        }
    }
    let mut triangles = Vec::new();
    for &[i, j] in &edges {
        for k in (j + 1)..n {
            if adj(i, k) && adj(j, k) {
                triangles.push([i, j, k]);
            }
        }
    }
    let mut tetrahedra = Vec::new();
    for &[i, j, k] in &triangles {
        for l in (k + 1)..n {
            if adj(i, l) && adj(j, l) && adj(k, l) {
                tetrahedra.push([i, j, k, l]);
            }
        }
    }
    for &[i, j, k, l] in &tetrahedra {
        for v in 0..n {
            if ![i, j, k, l].contains(&v) && adj(i, v) && adj(j, v) && adj(k, v) && adj(l, v) {
                return Err(format!(
                    "5-clique found: {{{}, {}, {}, {}, {}}}",
                    i + 1,
                    j + 1,
                    k + 1,
                    l + 1,
                    v + 1
                ));
            }
        }
    }
    Ok(DeltaComplex { edges, triangles, tetrahedra })
}

// ---------------------------------------------------------------------------
// Normal fan versus complex.
// ---------------------------------------------------------------------------

/// Certify that the polytope's normal fan realizes the clique complex:
/// under the facet-to-column bijection, vertex facet-sets are exactly the
/// tetrahedra, edges lie on exactly the triangles, and 2-faces on the edges.
pub fn fan_matches_complex(hull: &Hull, delta: &DeltaComplex) -> Result<(), String> {
    let facet_of_u = facet_normals_match_reference(hull)?;
    let mut u_of_facet = [usize::MAX; 15];
    for (u, &f) in facet_of_u.iter().enumerate() {
        u_of_facet[f] = u;
    }

    let nv = hull.vertices.len();
    let mut facets_at_vertex: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nv];
    for (f, facet) in hull.facets.iter().enumerate() {
        for &v in &facet.vertices {
            facets_at_vertex[v].insert(u_of_facet[f]);
        }
    }

    let mut vertex_quads: BTreeSet<[usize; 4]> = BTreeSet::new();
    for (v, us) in facets_at_vertex.iter().enumerate() {
        if us.len() != 4 {
            return Err(format!("vertex {v} lies on {} facets, not 4", us.len()));
        }
        let ids: Vec<usize> = us.iter().copied().collect();
        vertex_quads.insert([ids[0], ids[1], ids[2], ids[3]]);
    }
    let tetra: BTreeSet<[usize; 4]> = delta.tetrahedra.iter().copied().collect();
    if vertex_quads != tetra {
        return Err("vertex facet-quadruples differ from the complex's tetrahedra".into());
    }

    let face_u_sets = |layer: &[BTreeSet<usize>]| -> Vec<BTreeSet<usize>> {
        layer
            .iter()
            .map(|face| {
                let mut common: Option<BTreeSet<usize>> = None;
                for &v in face {
                    common = Some(match common {
                        None => facets_at_vertex[v].clone(),
                        Some(c) => c.intersection(&facets_at_vertex[v]).copied().collect(),
                    });
                }
                common.unwrap_or_default()
            })
            .collect()
    };

    let edge_triples: BTreeSet<Vec<usize>> = face_u_sets(&hull.faces[1])
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect();
    if edge_triples.len() != hull.faces[1].len() {
        return Err("two polytope edges share a facet triple".into());
    }
    let tri_ref: BTreeSet<Vec<usize>> = delta.triangles.iter().map(|t| t.to_vec()).collect();
    if edge_triples != tri_ref {
        return Err("edge facet-triples differ from the complex's triangles".into());
    }

    let face_pairs: BTreeSet<Vec<usize>> = face_u_sets(&hull.faces[2])
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect();
    if face_pairs.len() != hull.faces[2].len() {
        return Err("two polytope 2-faces share a facet pair".into());
    }
    let edge_ref: BTreeSet<Vec<usize>> = delta.edges.iter().map(|e| e.to_vec()).collect();
    if face_pairs != edge_ref {
        return Err("2-face facet-pairs differ from the complex's edges".into());
    }

    // Independent edge characterization: vertex pairs sharing exactly three
    // facets are exactly the 90 polytope edges.
    let mut sharing3: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for a in 0..nv {
        for b in (a + 1)..nv {
            let shared = facets_at_vertex[a].intersection(&facets_at_vertex[b]).count();
            if shared == 3 {
                sharing3.insert(BTreeSet::from([a, b]));
            }
        }
    }
    let edge_sets: BTreeSet<BTreeSet<usize>> = hull.faces[1].iter().cloned().collect();
    if sharing3 != edge_sets {
        return Err("vertex pairs sharing 3 facets are not exactly the edges".into());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Facet classification.
// ---------------------------------------------------------------------------

/// Combinatorial type of a 3-dimensional facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetKind {
    /// 8 vertices, 12 edges, 6 polygons.
    Cube,
    /// 14 vertices, 21 edges, 9 polygons.
    Associahedron,
}

/// Classify every facet by the face counts of the faces it contains.
pub fn classify_facets(hull: &Hull) -> Result<Vec<FacetKind>, String> {
    let mut kinds = Vec::with_capacity(hull.facets.len());
    for (f, facet) in hull.facets.iter().enumerate() {
        let inside = |layer: &[BTreeSet<usize>]| {
            layer.iter().filter(|face| face.is_subset(&facet.vertices)).count()
        };
        let profile = (facet.vertices.len(), inside(&hull.faces[1]), inside(&hull.faces[2]));
        kinds.push(match profile {
            (8, 12, 6) => FacetKind::Cube,
            (14, 21, 9) => FacetKind::Associahedron,
            other => {
                return Err(format!("facet {f} has unrecognized face counts {other:?}"));
            }
        });
    }
    Ok(kinds)
}

// ---------------------------------------------------------------------------
// Dlog forms and residues on the u-coordinates.
// ---------------------------------------------------------------------------

/// A formal alternating sum of wedge monomials
/// `dlog u_{i1} ∧ ... ∧ dlog u_{ik}` with rational coefficients, keyed by
/// strictly increasing index tuples (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlogForm {
    pub arity: usize,
    pub terms: BTreeMap<Vec<usize>, Rat>,
}

impl DlogForm {
    pub fn zero(arity: usize) -> Self {
        DlogForm { arity, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        DlogForm {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }

    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || &self.neg() == other
    }

    /// Wedge product of `k` dlog-linear rows: row `r` stands for
    /// `sum_j rows[r][j] dlog u_j`, and the result expands the wedge of all
    /// rows as minors-determinant coefficients over increasing index tuples.
    pub fn wedge_rows(rows: &[Vec<Rat>]) -> Self {
        let k = rows.len();
        let arity = rows.first().map_or(0, |r| r.len());
        let mut terms = BTreeMap::new();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let minor: Vec<Vec<Rat>> =
                rows.iter().map(|r| subset.iter().map(|&j| r[j].clone()).collect()).collect();
            let d = det_f::<Rat>(&minor);
            if d != Rat::default() {
                terms.insert(subset.clone(), d);
            }
            // next k-subset of 0..arity in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return DlogForm { arity, terms };
                }
                i -= 1;
                if subset[i] != arity - k + i {
                    subset[i] += 1;
                    for j in (i + 1)..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

/// The canonical 4-form of the chart, `dlog a ∧ dlog b ∧ dlog c ∧ dlog d`,
/// expanded over the u-coordinates through the monomial inverse: the wedge
/// of the four rows of the chart-inverse exponent matrix.
pub fn omega_abcd() -> DlogForm {
    let rows: Vec<Vec<Rat>> = ABCD_EXPONENT_MATRIX
        .iter()
        .map(|row| row.iter().map(|&e| rat_i(e)).collect())
        .collect();
    DlogForm::wedge_rows(&rows)
}

/// Residue of a dlog form along the facet `u_i = 0` (0-based `i`): write
/// each wedge monomial containing `dlog u_i` as `eta ∧ dlog u_i` (the sign
/// of moving the factor past everything to its right) and keep `eta`, then
/// delete every surviving monomial that still involves an index of the
/// vanishing set `V(i) = { j : u_i occurs in u_j's trinomial monomial }`,
/// because those coordinates are identically one on the facet.
pub fn u_residue(form: &DlogForm, i: usize) -> DlogForm {
    let vanish: BTreeSet<usize> = (0..TRINOMIAL_SUPPORTS.len())
        .filter(|&j| TRINOMIAL_SUPPORTS[j].contains(&i))
        .collect();
    let mut out = DlogForm::zero(form.arity);
    for (mono, coeff) in &form.terms {
        let Some(pos) = mono.iter().position(|&j| j == i) else {
            continue;
        };
        let rest: Vec<usize> = mono.iter().copied().filter(|&j| j != i).collect();
        if rest.iter().any(|j| vanish.contains(j)) {
            continue;
        }
        let hops = mono.len() - 1 - pos;
        let signed = if hops % 2 == 1 { -coeff.clone() } else { coeff.clone() };
        let slot = out.terms.entry(rest.clone()).or_default();
        *slot += signed;
        if *slot == Rat::default() {
            out.terms.remove(&rest);
        }
    }
    out
}

/// Sparse dlog-linear row over the 15 u-coordinates from `(index, coeff)`
/// pairs with 1-based indices.
fn dlog_row(entries: &[(usize, i64)]) -> Vec<Rat> {
    let mut row = vec![Rat::default(); 15];
    for &(i, c) in entries {
        row[i - 1] = rat_i(c);
    }
    row
}

/// The reference residue along `u_1 = 0`: the canonical form of a
/// three-dimensional associahedron facet,
/// `dlog(u10/(u8 u9 u14)) ∧ dlog(u9 u11/(u4 u12)) ∧ dlog(u4 u6 u14 / u3)`.
pub fn reference_residue_u1() -> DlogForm {
    DlogForm::wedge_rows(&[
        dlog_row(&[(10, 1), (8, -1), (9, -1), (14, -1)]),
        dlog_row(&[(9, 1), (11, 1), (4, -1), (12, -1)]),
        dlog_row(&[(4, 1), (6, 1), (14, 1), (3, -1)]),
    ])
}

/// The reference residue along `u_11 = 0`: the canonical form of a cube
/// facet, `dlog(u10/u9) ∧ dlog(u6/u3) ∧ dlog(u1/u2)`.
pub fn reference_residue_u11() -> DlogForm {
    DlogForm::wedge_rows(&[
        dlog_row(&[(10, 1), (9, -1)]),
        dlog_row(&[(6, 1), (3, -1)]),
        dlog_row(&[(1, 1), (2, -1)]),
    ])
}

// ---------------------------------------------------------------------------
// Amplitude identities.
// ---------------------------------------------------------------------------

/// The 45 denominator quadruples of the canonical rational amplitude, with
/// their color class (one class of eight per cube facet, `NONE` for the
/// five quadruples avoiding every cube index). Indices 0-based and sorted.
pub static AMPLITUDE_QUADS: Lazy<Vec<(String, [usize; 4])>> = Lazy::new(|| {
    let recs = fixtures::parse_int_records(fixtures::AMPLITUDE_QUADRUPLES);
    assert_eq!(recs.len(), 45);
    recs.into_iter()
        .map(|(label, ints)| {
            assert_eq!(ints.len(), 4);
            let mut q: Vec<usize> = ints.iter().map(|&v| (v - 1) as usize).collect();
            q.sort_unstable();
            (label, [q[0], q[1], q[2], q[3]])
        })
        .collect()
});

/// Sum over index pairs of the reciprocal products `1/(s_i s_j)`, with the
/// fraction cleared to the common numerator over `s_1 ... s_n`.
fn cleared_pair_sum(n: usize, pairs: &[[usize; 2]]) -> MPoly {
    let mut acc = MPoly::zero(n);
    for pair in pairs {
        let mut term = MPoly::constant(n, rat_i(1));
        for k in 0..n {
            if !pair.contains(&k) {
                term = term.mul(&MPoly::var(n, k));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Vertex pairs of a polygon read off from its u-equation supports:
/// `{i, j}` is a vertex exactly when `u_j` is absent from `u_i`'s monomial.
/// The supports must be symmetric.
fn vertex_pairs(supports: &[Vec<usize>]) -> Result<Vec<[usize; 2]>, String> {
    let n = supports.len();
    for i in 0..n {
        for &j in &supports[i] {
            if !supports[j].contains(&i) {
                return Err(format!("asymmetric polygon support pair ({}, {})", i + 1, j + 1));
            }
        }
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if !supports[i].contains(&j) {
                pairs.push([i, j]);
            }
        }
    }
    Ok(pairs)
}

fn elementary_product(n: usize, vars: &[usize]) -> MPoly {
    let mut term = MPoly::constant(n, rat_i(1));
    for &k in vars {
        term = term.mul(&MPoly::var(n, k));
    }
    term
}

/// Counts reported by [`amplitude_identities`].
#[derive(Debug, Clone)]
pub struct AmplitudeReport {
    /// Unordered pairs of amplitude terms sharing exactly three indices.
    pub adjacent_pairs: usize,
    /// Cube color classes with their common index (0-based), sorted.
    pub cube_classes: Vec<(String, usize)>,
}

/// Verify the exact field-limit identities of the low-dimensional
/// amplitudes and the adjacency structure of the 45-term amplitude.
pub fn amplitude_identities() -> Result<AmplitudeReport, String> {
    // Triangle: 1/(s1 s2) + 1/(s2 s3) + 1/(s1 s3) = (s1+s2+s3)/(s1 s2 s3).
    let lhs = cleared_pair_sum(3, &[[0, 1], [1, 2], [0, 2]]);
    let rhs = MPoly::var(3, 0).add(&MPoly::var(3, 1)).add(&MPoly::var(3, 2));
    if lhs != rhs {
        return Err("triangle amplitude identity failed".into());
    }

    // Square from the system u1 + u2 = u3 + u4 = 1, whose opposite-edge
    // pairs are {1,2} and {3,4}: summing 1/(s_i s_j) over the four vertex
    // pairs gives (s1+s2)(s3+s4)/(s1 s2 s3 s4).
    let square_pairs = vertex_pairs(&[vec![1], vec![0], vec![3], vec![2]])?;
    if square_pairs.len() != 4 {
        return Err("square system does not have four vertices".into());
    }
    let lhs = cleared_pair_sum(4, &square_pairs);
    let rhs = MPoly::var(4, 0)
        .add(&MPoly::var(4, 1))
        .mul(&MPoly::var(4, 2).add(&MPoly::var(4, 3)));
    if lhs != rhs {
        return Err("square amplitude identity failed".into());
    }

    // Pentagon from the system u_i + u_{i+2} u_{i+3} = 1 (indices mod 5):
    // the vertex pairs are the five consecutive pairs, and the numerator is
    // the cubic with the five displayed monomials.
    let pentagon_pairs = vertex_pairs(&[
        vec![2, 3],
        vec![3, 4],
        vec![0, 4],
        vec![0, 1],
        vec![1, 2],
    ])?;
    if pentagon_pairs.len() != 5 {
        return Err("pentagon system does not have five vertices".into());
    }
    let lhs = cleared_pair_sum(5, &pentagon_pairs);
    let rhs = [
        [2usize, 3, 4],
        [0, 3, 4],
        [0, 1, 4],
        [0, 1, 2],
        [1, 2, 3],
    ]
    .iter()
    .fold(MPoly::zero(5), |acc, vars| acc.add(&elementary_product(5, vars)));
    if lhs != rhs {
        return Err("pentagon amplitude identity failed".into());
    }

    // The 45-term amplitude: distinct quadruples, 90 adjacent pairs, each
    // shared triple arising exactly once, one cube index per colored class.
    let quads = &*AMPLITUDE_QUADS;
    let distinct: BTreeSet<[usize; 4]> = quads.iter().map(|(_, q)| *q).collect();
    if distinct.len() != 45 {
        return Err("amplitude quadruples are not distinct".into());
    }
    let mut adjacent_pairs = 0usize;
    let mut shared_triples: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..quads.len() {
        for b in (a + 1)..quads.len() {
            let sa: BTreeSet<usize> = quads[a].1.iter().copied().collect();
            let shared: Vec<usize> =
                quads[b].1.iter().copied().filter(|x| sa.contains(x)).collect();
            if shared.len() == 3 {
                adjacent_pairs += 1;
                if !shared_triples.insert(shared) {
                    return Err("a triple is shared by more than one term pair".into());
                }
            }
        }
    }
    if adjacent_pairs != 90 {
        return Err(format!("expected 90 adjacent term pairs, found {adjacent_pairs}"));
    }

    let mut by_class: BTreeMap<String, Vec<[usize; 4]>> = BTreeMap::new();
    for (label, q) in quads {
        by_class.entry(label.clone()).or_default().push(*q);
    }
    let mut cube_classes = Vec::new();
    for (label, members) in &by_class {
        if label == "NONE" {
            if members.len() != 5 {
                return Err("expected five uncolored amplitude terms".into());
            }
            for q in members {
                if q.iter().any(|&i| i >= 10) {
                    return Err("an uncolored term touches a cube index".into());
                }
            }
            continue;
        }
        if members.len() != 8 {
            return Err(format!("color class {label} does not have eight terms"));
        }
        let mut common: BTreeSet<usize> = members[0].iter().copied().collect();
        for q in &members[1..] {
            let s: BTreeSet<usize> = q.iter().copied().collect();
            common = common.intersection(&s).copied().collect();
        }
        if common.len() != 1 {
            return Err(format!("color class {label} has no unique common index"));
        }
        let idx = *common.iter().next().unwrap();
        if idx < 10 {
            return Err(format!("color class {label} common index {} is not a cube", idx + 1));
        }
        cube_classes.push((label.clone(), idx));
    }
    if cube_classes.len() != 5 {
        return Err("expected exactly five cube color classes".into());
    }
    let cube_ids: BTreeSet<usize> = cube_classes.iter().map(|&(_, i)| i).collect();
    if cube_ids != (10..15).collect::<BTreeSet<usize>>() {
        return Err("cube classes do not cover the five cube indices".into());
    }
    Ok(AmplitudeReport { adjacent_pairs, cube_classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::g_factors;
    use crate::rat::rat;

    #[test]
    fn symbolic_denominators_agree_with_direct_evaluation() {
        let polys = g_polynomials();
        let pts = [
            [rat_i(1), rat_i(1), rat_i(1), rat_i(2)],
            [rat(2, 3), rat(5, 7), rat(1, 2), rat(9, 4)],
            [rat_i(3), rat(1, 5), rat(7, 2), rat(4, 11)],
        ];
        for p in &pts {
            let direct = g_factors(&p[0], &p[1], &p[2], &p[3]);
            for (poly, want) in polys.iter().zip(direct.iter()) {
                assert_eq!(&poly.eval(p), want);
            }
        }
        let at_base = g_factors(&rat_i(1), &rat_i(1), &rat_i(1), &rat_i(2));
        let expect: Vec<Rat> =
            [2, 2, 3, 2, 3, 3, 7, 11, 13, 15, 16].iter().map(|&v| rat_i(v)).collect();
        assert_eq!(at_base.to_vec(), expect);
    }

    #[test]
    fn single_factors_give_segment_and_square() {
        let polys = g_polynomials();
        let seg = newton_minkowski(&polys[..1]).unwrap();
        assert_eq!(seg.dim, 1);
        assert_eq!(seg.f_vector(), vec![2]);

        let square = newton_minkowski(&polys[..2].to_vec()).unwrap();
        assert_eq!(square.dim, 2);
        assert_eq!(square.f_vector(), vec![4, 4]);
    }

    #[test]
    fn complex_counts_and_amplitude_tetrahedra() {
        let d = delta_complex().unwrap();
        assert_eq!(d.edges.len(), 60);
        assert_eq!(d.triangles.len(), 90);
        assert_eq!(d.tetrahedra.len(), 45);
        let tetra: BTreeSet<[usize; 4]> = d.tetrahedra.iter().copied().collect();
        let quads: BTreeSet<[usize; 4]> = AMPLITUDE_QUADS.iter().map(|(_, q)| *q).collect();
        assert_eq!(tetra, quads);
        // Every triple is shared by exactly two tetrahedra (closed surface).
        let mut triple_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for t in &d.tetrahedra {
            for omit in 0..4 {
                let tri: Vec<usize> =
                    t.iter().enumerate().filter(|&(j, _)| j != omit).map(|(_, &v)| v).collect();
                *triple_count.entry(tri).or_insert(0) += 1;
            }
        }
        assert_eq!(triple_count.len(), 90);
        assert!(triple_count.values().all(|&c| c == 2));
    }

    #[test]
    fn amplitude_identities_hold() {
        let report = amplitude_identities().unwrap();
        assert_eq!(report.adjacent_pairs, 90);
        assert_eq!(report.cube_classes.len(), 5);
    }

    #[test]
    fn residues_reproduce_the_reference_boundary_forms() {
        let omega = omega_abcd();
        assert!(!omega.is_zero());
        let r1 = u_residue(&omega, 0);
        assert_eq!(r1, reference_residue_u1(), "facet u1 residue mismatch");
        let r11 = u_residue(&omega, 10);
        assert_eq!(r11, reference_residue_u11(), "facet u11 residue mismatch");

        // A form avoiding dlog u_i entirely has zero residue there.
        let flat = DlogForm::wedge_rows(&[dlog_row(&[(3, 1)]), dlog_row(&[(4, 1)])]);
        assert!(u_residue(&flat, 0).is_zero());
    }

    #[test]
    fn iterated_residues_anticommute() {
        let omega = omega_abcd();
        let d = delta_complex().unwrap();
        for &[i, j] in d.edges.iter().take(12) {
            let ij = u_residue(&u_residue(&omega, i), j);
            let ji = u_residue(&u_residue(&omega, j), i);
            assert_eq!(ij, ji.neg(), "residues along {} then {} fail to anticommute", i, j);
        }
        // Along a non-edge both orders vanish.
        let (i, j) = (0, TRINOMIAL_SUPPORTS[0][0]);
        assert!(u_residue(&u_residue(&omega, i), j).is_zero());
        assert!(u_residue(&u_residue(&omega, j), i).is_zero());
    }
}
