//! Oracles for the Newton–Minkowski polytope of the chart denominators:
//! face counts, facet normals, the dual simplicial complex, and the
//! cube/associahedron classification of the fifteen facets.

use std::collections::BTreeSet;

use pezzo_core::hull::primitive_int;
use pezzo_core::pezzotope::{
    amplitude_identities, classify_facets, delta_complex, facet_normals_match_reference,
    fan_matches_complex, FacetKind, AMPLITUDE_QUADS, POLYTOPE,
};
use pezzo_core::rat::Int;

#[test]
fn polytope_is_the_simple_45_90_60_15_polytope() {
    let hull = &*POLYTOPE;
    assert_eq!(hull.ambient, 4);
    assert_eq!(hull.dim, 4);
    assert_eq!(hull.f_vector(), vec![45, 90, 60, 15]);
    assert!(hull.is_simple());
    // Euler relation for the boundary sphere.
    assert_eq!(45 - 90 + 60 - 15, 0);
    // All vertices are lattice points (exponent vectors are integral).
    for v in &hull.vertices {
        assert!(v.iter().all(|c| c.is_integer()));
    }
}

#[test]
fn facet_normals_are_primitive_and_match_the_reference_columns() {
    let hull = &*POLYTOPE;
    let facet_of_u = facet_normals_match_reference(hull).unwrap();
    let distinct: BTreeSet<usize> = facet_of_u.iter().copied().collect();
    assert_eq!(distinct.len(), 15);
    for facet in &hull.facets {
        assert_eq!(primitive_int(&facet.normal), facet.normal);
        assert!(facet.normal.iter().any(|c| c != &Int::from(0)));
    }
}

#[test]
fn normal_fan_realizes_the_clique_complex() {
    let delta = delta_complex().unwrap();
    assert_eq!(
        (delta.edges.len(), delta.triangles.len(), delta.tetrahedra.len()),
        (60, 90, 45)
    );
    fan_matches_complex(&POLYTOPE, &delta).unwrap();
}

#[test]
fn facets_classify_as_five_cubes_and_ten_associahedra() {
    let hull = &*POLYTOPE;
    let kinds = classify_facets(hull).unwrap();
    let cubes = kinds.iter().filter(|k| **k == FacetKind::Cube).count();
    let assoc = kinds.iter().filter(|k| **k == FacetKind::Associahedron).count();
    assert_eq!((cubes, assoc), (5, 10));
    // Vertex double count: five cubes with 8 vertices and ten associahedra
    // with 14 vertices meet each vertex four times.
    assert_eq!((5 * 8 + 10 * 14) / 4, 45);

    // The cube facets are exactly the ones dual to the five u-coordinates
    // singled out by the amplitude color classes.
    let facet_of_u = facet_normals_match_reference(hull).unwrap();
    let report = amplitude_identities().unwrap();
    let cube_us: BTreeSet<usize> = report.cube_classes.iter().map(|&(_, i)| i).collect();
    for (u, &f) in facet_of_u.iter().enumerate() {
        let expect = if cube_us.contains(&u) { FacetKind::Cube } else { FacetKind::Associahedron };
        assert_eq!(kinds[f], expect, "facet dual to u{} has the wrong type", u + 1);
    }
}

#[test]
fn amplitude_tetrahedra_are_the_polytope_vertices() {
    // 45 distinct quadruples, matching the tetrahedra of the complex, which
    // fan_matches_complex ties to the polytope's vertices.
    let delta = delta_complex().unwrap();
    let tetra: BTreeSet<[usize; 4]> = delta.tetrahedra.iter().copied().collect();
    let quads: BTreeSet<[usize; 4]> = AMPLITUDE_QUADS.iter().map(|(_, q)| *q).collect();
    assert_eq!(tetra, quads);
    assert_eq!(POLYTOPE.vertices.len(), 45);
}
