//! From six points in the plane to a cubic surface with its 27 lines.
//!
//! Pipeline (generic over the scalar [`Field`] except where ordering or
//! canonical integer normalization is required):
//!
//! 1. [`validate_config`] — the six points must be in general position: no
//!    three collinear, not all six on a conic. Violations are reported with
//!    the offending index sets.
//! 2. [`plane_arrangement`] — the 15 lines through point pairs and the 6
//!    conics through point quintuples, as nullspace-normalized forms.
//! 3. [`anticanonical_map`] — four cubics, each a product of three of the
//!    pair lines, mapping the plane onto a cubic surface in P^3.
//! 4. [`surface_equation`] — the cubic polynomial cutting out the image,
//!    found exactly as the one-dimensional nullspace of monomial values at
//!    sampled points and cross-checked at extra points.
//! 5. [`lines_in_p3`] — the 27 lines: exceptional classes via exact
//!    directional derivatives, line/conic classes via images of two rational
//!    curve points. Each line is stored as two spanning points of P^3.
//! 6. Incidence, intersection points, tritangent planes, coplanar-triple
//!    flags (Eckardt points): exact rank and nullspace computations.

use crate::linalg::{mat_nullspace, nullspace_f, rank_f, row_space_canonical};
use crate::mpoly::{monomials_of_degree, MPoly};
use crate::rat::{primitive, proportional_f, rat_i, Field, Rat};
use crate::sample::{rat_in, Sampler};
use crate::schlaefli::{adjacent, LineLabel, ALL_LABELS};
use std::collections::BTreeMap;
use std::fmt;

/// Six labeled points of P^2, as coordinate columns.
#[derive(Clone, Debug)]
pub struct SixPoints<F> {
    pub cols: [[F; 3]; 6],
}

/// The running example: six explicit rational points in general position.
pub fn standard_config() -> SixPoints<Rat> {
    let p = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, -1, 1],
        [6, -4, 3],
        [24, -11, 8],
    ];
    SixPoints {
        cols: std::array::from_fn(|i| std::array::from_fn(|j| rat_i(p[i][j]))),
    }
}

/// General-position failure, naming the offending points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConfigError {
    /// `det(p_i, p_j, p_k) = 0`: indices are 1-based.
    CollinearTriple(u8, u8, u8),
    /// All six points lie on a conic.
    OnCommonConic,
    /// A listed point is the zero vector.
    ZeroPoint(u8),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::CollinearTriple(i, j, k) => {
                write!(f, "points {i}, {j}, {k} are collinear")
            }
            ConfigError::OnCommonConic => write!(f, "all six points lie on a common conic"),
            ConfigError::ZeroPoint(i) => write!(f, "point {i} has all coordinates zero"),
        }
    }
}

/// 3x3 determinant of three points.
pub fn det3<F: Field>(a: &[F; 3], b: &[F; 3], c: &[F; 3]) -> F {
    let t1 = a[0].mul(&b[1].mul(&c[2]).sub(&b[2].mul(&c[1])));
    let t2 = a[1].mul(&b[0].mul(&c[2]).sub(&b[2].mul(&c[0])));
    let t3 = a[2].mul(&b[0].mul(&c[1]).sub(&b[1].mul(&c[0])));
    t1.sub(&t2).add(&t3)
}

/// The six conic monomial values of a point, in the fixed order
/// `x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2`.
pub fn conic_monomials<F: Field>(p: &[F; 3]) -> [F; 6] {
    [
        p[0].mul(&p[0]),
        p[0].mul(&p[1]),
        p[0].mul(&p[2]),
        p[1].mul(&p[1]),
        p[1].mul(&p[2]),
        p[2].mul(&p[2]),
    ]
}

/// Check general position: every point nonzero, every triple independent,
/// and the six conic-monomial rows of rank 6 (no common conic).
pub fn validate_config<F: Field>(pts: &SixPoints<F>) -> Result<(), Vec<ConfigError>> {
    let mut errs = Vec::new();
    for (i, c) in pts.cols.iter().enumerate() {
        if c.iter().all(|x| x.is_zero()) {
            errs.push(ConfigError::ZeroPoint(i as u8 + 1));
        }
    }
    for i in 0..6 {
        for j in (i + 1)..6 {
            for k in (j + 1)..6 {
                if det3(&pts.cols[i], &pts.cols[j], &pts.cols[k]).is_zero() {
                    errs.push(ConfigError::CollinearTriple(i as u8 + 1, j as u8 + 1, k as u8 + 1));
                }
            }
        }
    }
    let rows: Vec<Vec<F>> = pts.cols.iter().map(|p| conic_monomials(p).to_vec()).collect();
    if errs.is_empty() && rank_f(&rows) < 6 {
        errs.push(ConfigError::OnCommonConic);
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

/// The 15 pair lines and 6 quintuple conics of the configuration.
#[derive(Clone, Debug)]
pub struct PlaneArrangement<F> {
    /// `lines[(i,j)]` for `i<j` (1-based): coefficients of the linear form
    /// vanishing on points i and j.
    pub lines: BTreeMap<(u8, u8), [F; 3]>,
    /// `conics[k]` (0-based `k = label - 1`): coefficients (in the conic
    /// monomial order) of the conic through the five points other than k+1.
    pub conics: [[F; 6]; 6],
}

/// Compute the arrangement via exact nullspaces. Over a general field the
/// forms are normalized so their first nonzero coefficient is 1; use
/// [`plane_arrangement_primitive`] for the canonical integer normalization
/// over the rationals.
pub fn plane_arrangement<F: Field>(pts: &SixPoints<F>) -> PlaneArrangement<F> {
    let mut lines = BTreeMap::new();
    for i in 0..6u8 {
        for j in (i + 1)..6u8 {
            let rows: Vec<Vec<F>> = vec![
                pts.cols[i as usize].to_vec(),
                pts.cols[j as usize].to_vec(),
            ];
            let ns = nullspace_f(&rows);
            assert_eq!(ns.len(), 1, "pair line must be unique (validate first)");
            let v = monic(&ns[0]);
            lines.insert((i + 1, j + 1), [v[0].clone(), v[1].clone(), v[2].clone()]);
        }
    }
    let conics = std::array::from_fn(|k| {
        let rows: Vec<Vec<F>> = (0..6)
            .filter(|&m| m != k)
            .map(|m| conic_monomials(&pts.cols[m]).to_vec())
            .collect();
        let ns = nullspace_f(&rows);
        assert_eq!(ns.len(), 1, "quintuple conic must be unique (validate first)");
        let v = monic(&ns[0]);
        std::array::from_fn(|t| v[t].clone())
    });
    PlaneArrangement { lines, conics }
}

fn monic<F: Field>(v: &[F]) -> Vec<F> {
    let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero vector");
    let inv = lead.inv().expect("leading coefficient invertible");
    v.iter().map(|x| x.mul(&inv)).collect()
}

/// Arrangement over the rationals with every form scaled to a primitive
/// integer vector (first nonzero coefficient positive). This is the
/// normalization under which the reference tables are stated.
pub fn plane_arrangement_primitive(pts: &SixPoints<Rat>) -> PlaneArrangement<Rat> {
    let arr = plane_arrangement(pts);
    PlaneArrangement {
        lines: arr
            .lines
            .iter()
            .map(|(k, v)| {
                let p = primitive(v.as_slice());
                (*k, [p[0].clone(), p[1].clone(), p[2].clone()])
            })
            .collect(),
        conics: std::array::from_fn(|k| {
            let p = primitive(arr.conics[k].as_slice());
            std::array::from_fn(|t| p[t].clone())
        }),
    }
}

/// The four map cubics, each a product of three pair lines.
/// Factor index sets (1-based pairs):
/// `y0 = F12 F34 F56`, `y1 = F13 F25 F46`, `y2 = F12 F35 F46`, `y3 = F13 F24 F56`.
pub const Y_FACTORS: [[(u8, u8); 3]; 4] = [
    [(1, 2), (3, 4), (5, 6)],
    [(1, 3), (2, 5), (4, 6)],
    [(1, 2), (3, 5), (4, 6)],
    [(1, 3), (2, 4), (5, 6)],
];

/// The anticanonical map as four triple products of linear forms.
#[derive(Clone, Debug)]
pub struct YMap<F> {
    /// `parts[c]` = the three linear forms whose product is `y_c`.
    pub parts: [[[F; 3]; 3]; 4],
}

pub fn anticanonical_map<F: Field>(arr: &PlaneArrangement<F>) -> YMap<F> {
    YMap {
        parts: std::array::from_fn(|c| {
            std::array::from_fn(|t| arr.lines[&Y_FACTORS[c][t]].clone())
        }),
    }
}

fn form_eval<F: Field>(form: &[F; 3], x: &[F; 3]) -> F {
    form[0].mul(&x[0]).add(&form[1].mul(&x[1])).add(&form[2].mul(&x[2]))
}

impl<F: Field> YMap<F> {
    /// Image of a point.
    pub fn eval(&self, x: &[F; 3]) -> [F; 4] {
        std::array::from_fn(|c| {
            self.parts[c]
                .iter()
                .fold(F::one(), |acc, f| acc.mul(&form_eval(f, x)))
        })
    }

    /// Exact gradient rows at a point: `grad y_c (p)` via the product rule
    /// `grad(ABC) = BC(p) grad A + AC(p) grad B + AB(p) grad C`.
    pub fn gradients(&self, p: &[F; 3]) -> [[F; 3]; 4] {
        std::array::from_fn(|c| {
            let vals: [F; 3] = std::array::from_fn(|t| form_eval(&self.parts[c][t], p));
            let mut grad = [F::zero(), F::zero(), F::zero()];
            for t in 0..3 {
                let others = vals[(t + 1) % 3].mul(&vals[(t + 2) % 3]);
                for x in 0..3 {
                    grad[x] = grad[x].add(&others.mul(&self.parts[c][t][x]));
                }
            }
            grad
        })
    }

    /// The four cubics as explicit polynomials in `x0, x1, x2` (rationals
    /// required; used for the surface equation and for pullback factors).
    pub fn polynomials(&self) -> [MPoly; 4]
    where
        F: IsRat,
    {
        std::array::from_fn(|c| {
            self.parts[c]
                .iter()
                .map(|f| MPoly::linear(&[f[0].to_rat(), f[1].to_rat(), f[2].to_rat()]))
                .fold(MPoly::constant(3, rat_i(1)), |acc, p| acc.mul(&p))
        })
    }
}

/// Marker trait: scalars that are plainly rationals (lets generic code
/// hand polynomials to the rational-only machinery).
pub trait IsRat: Field {
    fn to_rat(&self) -> Rat;
}
impl IsRat for Rat {
    fn to_rat(&self) -> Rat {
        self.clone()
    }
}

// ---------------------------------------------------------------------------
// The surface equation
// ---------------------------------------------------------------------------

/// The cubic polynomial in `y0..y3` cutting out the image surface,
/// normalized to primitive integer coefficients. Found from the
/// one-dimensional nullspace of the 20 cubic monomials evaluated at
/// `sample_count` image points (>= 25), then verified at `verify_count`
/// extra points. Deterministic in the seed, and the normalized result is
/// seed-independent.
pub fn surface_equation(ymap: &YMap<Rat>, seed: u64, sample_count: usize, verify_count: usize) -> MPoly {
    assert!(sample_count >= 25);
    let monos = monomials_of_degree(4, 3);
    assert_eq!(monos.len(), 20);
    let sampler = Sampler::new(seed);
    let mut rng = sampler.stream(0x0c01);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut extra: Vec<[Rat; 4]> = Vec::new();
    while rows.len() < sample_count || extra.len() < verify_count {
        let x: [Rat; 3] = [rat_i(1), rat_in(&mut rng, 40), rat_in(&mut rng, 40)];
        let y = ymap.eval(&x);
        if y.iter().all(|v| v.is_zero()) {
            continue;
        }
        if rows.len() < sample_count {
            let row: Vec<Rat> = monos
                .iter()
                .map(|e| {
                    let mut t = rat_i(1);
                    for (c, &k) in e.iter().enumerate() {
                        for _ in 0..k {
                            t *= &y[c];
                        }
                    }
                    t
                })
                .collect();
            rows.push(row);
        } else {
            extra.push(y);
        }
    }
    let ns = mat_nullspace(&rows);
    assert_eq!(
        ns.len(),
        1,
        "surface equation: expected a one-dimensional cubic relation space"
    );
    let cubic = MPoly::from_terms(4, monos.into_iter().zip(ns[0].iter().cloned()));
    let cubic = cubic.primitive_normalize();
    for y in &extra {
        assert!(
            cubic.eval::<Rat>(y.as_slice()).is_zero(),
            "surface equation must vanish at held-out image points"
        );
    }
    cubic
}

// ---------------------------------------------------------------------------
// The 27 lines
// ---------------------------------------------------------------------------

/// A line in P^3, stored as two spanning points.
#[derive(Clone, Debug)]
pub struct Line<F> {
    pub label: LineLabel,
    pub span: [[F; 4]; 2],
}

/// All 27 lines of the surface, in canonical label order.
pub fn lines_in_p3<F: Field>(pts: &SixPoints<F>, ymap: &YMap<F>, arr: &PlaneArrangement<F>) -> Vec<Line<F>> {
    let mut out = Vec::with_capacity(27);
    for &label in ALL_LABELS.iter() {
        let span = match label {
            LineLabel::E(i) => exceptional_span(pts, ymap, i),
            LineLabel::F(i, j) => pair_line_span(pts, ymap, arr, i, j),
            LineLabel::G(k) => conic_span(pts, ymap, arr, k),
        };
        out.push(Line { label, span });
    }
    out
}

/// Exceptional class over point i: the image of the tangent directions,
/// `v -> (grad y_c (p_i) . v)_c`. Any two directions spanning the quotient
/// by `p_i` give spanning points (the Euler relation kills `p_i` itself).
fn exceptional_span<F: Field>(pts: &SixPoints<F>, ymap: &YMap<F>, i: u8) -> [[F; 4]; 2] {
    let p = &pts.cols[(i - 1) as usize];
    let grads = ymap.gradients(p);
    // Pick two standard basis directions completing p to a basis of F^3
    // (they must be independent modulo p, not merely each independent of p).
    let unit = |b: usize| -> [F; 3] {
        std::array::from_fn(|t| if t == b { F::one() } else { F::zero() })
    };
    let mut dirs: Option<([F; 3], [F; 3])> = None;
    'pairs: for a in 0..3 {
        for b in (a + 1)..3 {
            let rows = vec![p.to_vec(), unit(a).to_vec(), unit(b).to_vec()];
            if rank_f(&rows) == 3 {
                dirs = Some((unit(a), unit(b)));
                break 'pairs;
            }
        }
    }
    let (d1, d2) = dirs.expect("nonzero point extends to a basis with two unit vectors");
    let dirs = [d1, d2];
    let image = |v: &[F; 3]| -> [F; 4] {
        std::array::from_fn(|c| {
            grads[c][0]
                .mul(&v[0])
                .add(&grads[c][1].mul(&v[1]))
                .add(&grads[c][2].mul(&v[2]))
        })
    };
    let a = image(&dirs[0]);
    let b = image(&dirs[1]);
    let rows = vec![a.to_vec(), b.to_vec()];
    assert_eq!(rank_f(&rows), 2, "exceptional line must have a 2-dimensional span");
    [a, b]
}

/// True when the two projective points are equal (proportional) or one is zero.
fn degenerate_image<F: Field>(y: &[F; 4]) -> bool {
    y.iter().all(|v| v.is_zero())
}

fn proportional3<F: Field>(a: &[F; 3], b: &[F; 3]) -> bool {
    proportional_f(a.as_slice(), b.as_slice())
}

/// Line class through points i < j: image of two points of the plane line.
fn pair_line_span<F: Field>(
    pts: &SixPoints<F>,
    ymap: &YMap<F>,
    arr: &PlaneArrangement<F>,
    i: u8,
    j: u8,
) -> [[F; 4]; 2] {
    let form = &arr.lines[&(i, j)];
    let ns = nullspace_f(&[form.to_vec()]);
    assert_eq!(ns.len(), 2);
    let (n1, n2) = (&ns[0], &ns[1]);
    let pi = &pts.cols[(i - 1) as usize];
    let pj = &pts.cols[(j - 1) as usize];
    let mut found: Vec<[F; 4]> = Vec::new();
    for t in 0..100i64 {
        // q = n1 + t n2, then n2 itself as the point at infinity of the chart.
        let q: [F; 3] = if t < 99 {
            let tf = F::from_i64(t);
            std::array::from_fn(|c| n1[c].add(&tf.mul(&n2[c])))
        } else {
            std::array::from_fn(|c| n2[c].clone())
        };
        if q.iter().all(|x| x.is_zero()) || proportional3(&q, pi) || proportional3(&q, pj) {
            continue;
        }
        let y = ymap.eval(&q);
        if degenerate_image(&y) {
            continue;
        }
        if found.iter().any(|a| proportional_f(a.as_slice(), y.as_slice())) {
            continue;
        }
        found.push(y);
        if found.len() == 2 {
            break;
        }
    }
    assert_eq!(found.len(), 2, "pair line: need two independent image points");
    let rows = vec![found[0].to_vec(), found[1].to_vec()];
    assert_eq!(rank_f(&rows), 2);
    [found[0].clone(), found[1].clone()]
}

/// Conic class omitting point k: parametrize the conic by the pencil of
/// lines through one of its points `p_m`. The second intersection of the
/// line through `p_m` with direction `u` is `conic(u) p_m - bil(p_m, u) u`
/// (projective, division-free).
fn conic_span<F: Field>(
    pts: &SixPoints<F>,
    ymap: &YMap<F>,
    arr: &PlaneArrangement<F>,
    k: u8,
) -> [[F; 4]; 2] {
    let coeffs = &arr.conics[(k - 1) as usize];
    let m = (1..=6u8).find(|&m| m != k).unwrap();
    let pm = &pts.cols[(m - 1) as usize];
    let conic_at = |x: &[F; 3]| -> F {
        let mono = conic_monomials(x);
        (0..6).fold(F::zero(), |acc, t| acc.add(&coeffs[t].mul(&mono[t])))
    };
    // Polarization: bil(p, u) = sum_t u_t * d(conic)/dx_t at p.
    let grad_at = |x: &[F; 3]| -> [F; 3] {
        let two = F::from_i64(2);
        [
            two.mul(&coeffs[0]).mul(&x[0]).add(&coeffs[1].mul(&x[1])).add(&coeffs[2].mul(&x[2])),
            coeffs[1].mul(&x[0]).add(&two.mul(&coeffs[3]).mul(&x[1])).add(&coeffs[4].mul(&x[2])),
            coeffs[2].mul(&x[0]).add(&coeffs[4].mul(&x[1])).add(&two.mul(&coeffs[5]).mul(&x[2])),
        ]
    };
    let gp = grad_at(pm);
    let base: Vec<&[F; 3]> = (0..6).filter(|&t| t != (k - 1) as usize).map(|t| &pts.cols[t]).collect();
    let mut found: Vec<[F; 4]> = Vec::new();
    'outer: for s in 0..200i64 {
        // Directions u = e_a + s e_b over a few basis pairs.
        let (a, b, sv) = match s % 4 {
            0 => (0usize, 1usize, s / 4),
            1 => (0, 2, s / 4),
            2 => (1, 2, s / 4),
            _ => (2, 0, s / 4),
        };
        let sf = F::from_i64(sv);
        let u: [F; 3] = std::array::from_fn(|t| {
            let mut v = F::zero();
            if t == a {
                v = v.add(&F::one());
            }
            if t == b {
                v = v.add(&sf);
            }
            v
        });
        let cu = conic_at(&u);
        if cu.is_zero() {
            continue;
        }
        let bil = u[0].mul(&gp[0]).add(&u[1].mul(&gp[1])).add(&u[2].mul(&gp[2]));
        if bil.is_zero() {
            continue;
        }
        let q: [F; 3] = std::array::from_fn(|t| cu.mul(&pm[t]).sub(&bil.mul(&u[t])));
        debug_assert!(conic_at(&q).is_zero());
        for bp in &base {
            if proportional3(&q, bp) {
                continue 'outer;
            }
        }
        let y = ymap.eval(&q);
        if degenerate_image(&y) {
            continue;
        }
        if found.iter().any(|f| proportional_f(f.as_slice(), y.as_slice())) {
            continue;
        }
        found.push(y);
        if found.len() == 2 {
            break;
        }
    }
    assert_eq!(found.len(), 2, "conic class: need two independent image points");
    let rows = vec![found[0].to_vec(), found[1].to_vec()];
    assert_eq!(rank_f(&rows), 2);
    [found[0].clone(), found[1].clone()]
}

// ---------------------------------------------------------------------------
// Incidence, intersections, tritangent planes
// ---------------------------------------------------------------------------

/// Two lines meet iff their stacked spans drop rank (4x4 of rank 3).
pub fn lines_meet<F: Field>(a: &Line<F>, b: &Line<F>) -> bool {
    let rows: Vec<Vec<F>> = vec![
        a.span[0].to_vec(),
        a.span[1].to_vec(),
        b.span[0].to_vec(),
        b.span[1].to_vec(),
    ];
    let r = rank_f(&rows);
    assert!(r >= 2);
    r == 3
}

/// The incidence matrix of the 27 computed lines must match the abstract
/// incidence rule on labels for all 351 pairs; returns the offending pairs.
pub fn incidence_mismatches<F: Field>(lines: &[Line<F>]) -> Vec<(LineLabel, LineLabel)> {
    let mut bad = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let expected = adjacent(lines[i].label, lines[j].label);
            if lines_meet(&lines[i], &lines[j]) != expected {
                bad.push((lines[i].label, lines[j].label));
            }
        }
    }
    bad
}

/// The meeting point of two incident lines, with its chart coordinates on
/// both lines: `point = on_a.0 * A0 + on_a.1 * A1 = on_b.0 * B0 + on_b.1 * B1`.
#[derive(Clone, Debug)]
pub struct Intersection<F> {
    pub point: [F; 4],
    pub on_a: (F, F),
    pub on_b: (F, F),
}

/// Intersection point of two meeting lines: solve
/// `alpha A0 + beta A1 = gamma B0 + delta B1` via the nullspace of the
/// stacked 4x4 system.
pub fn intersection_point<F: Field>(a: &Line<F>, b: &Line<F>) -> Intersection<F> {
    let m: Vec<Vec<F>> = (0..4)
        .map(|r| {
            vec![
                a.span[0][r].clone(),
                a.span[1][r].clone(),
                b.span[0][r].neg(),
                b.span[1][r].neg(),
            ]
        })
        .collect();
    let ns = nullspace_f(&m);
    assert_eq!(ns.len(), 1, "meeting lines must have a unique intersection");
    let v = &ns[0];
    let point: [F; 4] = std::array::from_fn(|r| {
        a.span[0][r].mul(&v[0]).add(&a.span[1][r].mul(&v[1]))
    });
    assert!(!point.iter().all(|x| x.is_zero()));
    Intersection {
        point,
        on_a: (v[0].clone(), v[1].clone()),
        on_b: (v[2].clone(), v[3].clone()),
    }
}

/// The plane through a triangle of pairwise-meeting lines: the unique form
/// vanishing on all six span points.
pub fn tritangent_plane<F: Field>(lines: &[&Line<F>; 3]) -> [F; 4] {
    let rows: Vec<Vec<F>> = lines
        .iter()
        .flat_map(|l| [l.span[0].to_vec(), l.span[1].to_vec()])
        .collect();
    let ns = nullspace_f(&rows);
    assert_eq!(ns.len(), 1, "tritangent plane must be unique");
    std::array::from_fn(|r| ns[0][r].clone())
}

/// A triangle is an Eckardt flag when its three pairwise intersection
/// points coincide.
pub fn eckardt_flag<F: Field>(lines: &[&Line<F>; 3]) -> bool {
    let p01 = intersection_point(lines[0], lines[1]).point;
    let p02 = intersection_point(lines[0], lines[2]).point;
    let p12 = intersection_point(lines[1], lines[2]).point;
    proportional_f(p01.as_slice(), p02.as_slice()) && proportional_f(p01.as_slice(), p12.as_slice())
}

/// Canonical cutting-form pair of a line: the nullspace of its span, as
/// the canonical primitive basis of that 2-dimensional space of forms.
/// Two lines are equal iff these pairs are equal.
pub fn cutting_forms(line: &Line<Rat>) -> Vec<Vec<Rat>> {
    let rows: Vec<Vec<Rat>> = vec![line.span[0].to_vec(), line.span[1].to_vec()];
    let ns = mat_nullspace(&rows);
    assert_eq!(ns.len(), 2);
    row_space_canonical(&ns)
}

/// Primitive Pluecker coordinates of a line, in the index order
/// (01, 02, 03, 12, 13, 23) of the span's 2x2 minors.
pub fn pluecker(line: &Line<Rat>) -> [Rat; 6] {
    let (a, b) = (&line.span[0], &line.span[1]);
    let minor = |i: usize, j: usize| a[i].mul(&b[j]).sub(&a[j].mul(&b[i]));
    let raw = [
        minor(0, 1),
        minor(0, 2),
        minor(0, 3),
        minor(1, 2),
        minor(1, 3),
        minor(2, 3),
    ];
    let p = primitive(raw.as_slice());
    std::array::from_fn(|t| p[t].clone())
}

/// The quadratic relation `p01 p23 - p02 p13 + p03 p12 = 0` every line's
/// Pluecker vector satisfies.
pub fn pluecker_relation_holds(p: &[Rat; 6]) -> bool {
    let v = p[0].mul(&p[5]).sub(&p[1].mul(&p[4])).add(&p[2].mul(&p[3]));
    v.is_zero()
}

/// The cubic restricted to the line vanishes identically: since the
/// restriction has degree 3 on the parameter line, vanishing at four
/// points (t = 0, 1, 2 and infinity) forces it to be zero.
pub fn line_on_surface(cubic: &MPoly, line: &Line<Rat>) -> bool {
    let (a, b) = (&line.span[0], &line.span[1]);
    let at = |s: i64, t: i64| -> [Rat; 4] {
        std::array::from_fn(|r| {
            a[r].mul(&rat_i(s)).add(&b[r].mul(&rat_i(t)))
        })
    };
    [(1, 0), (1, 1), (1, 2), (0, 1)]
        .iter()
        .all(|&(s, t)| cubic.eval::<Rat>(at(s, t).as_slice()).is_zero())
}

// ---------------------------------------------------------------------------
// The assembled model
// ---------------------------------------------------------------------------

/// Everything the pipeline derives from a valid configuration: arrangement,
/// map, cubic, lines, incidence, circular orders, and the region graph.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub config: SixPoints<Rat>,
    pub arrangement: PlaneArrangement<Rat>,
    pub ymap: YMap<Rat>,
    pub map_cubics: [MPoly; 4],
    pub cubic: MPoly,
    pub lines: Vec<Line<Rat>>,
    pub graph: crate::schlaefli::Graph27,
    pub intersections: BTreeMap<(u8, u8), [Rat; 4]>,
    pub orders: crate::orders::CircularOrders,
    pub region: crate::orders::RegionGraph,
}

/// Why a model could not be assembled.
#[derive(Debug)]
pub enum BuildError {
    Config(Vec<ConfigError>),
    DegenerateOrders(Vec<crate::orders::DegenerateOrder>),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Config(errs) => {
                write!(f, "degenerate configuration:")?;
                for e in errs {
                    write!(f, " {e};")?;
                }
                Ok(())
            }
            BuildError::DegenerateOrders(ds) => {
                write!(f, "coincident intersection points (Eckardt points) on:")?;
                for d in ds {
                    write!(f, " {}", d.line)?;
                }
                Ok(())
            }
        }
    }
}

impl SurfaceModel {
    /// Run the full pipeline.  The seed steers the sampling used to find
    /// the cubic; the result does not depend on it.
    pub fn build(config: SixPoints<Rat>, seed: u64) -> Result<SurfaceModel, BuildError> {
        validate_config(&config).map_err(BuildError::Config)?;
        let arrangement = plane_arrangement_primitive(&config);
        let ymap = anticanonical_map(&arrangement);
        let map_cubics = ymap.polynomials();
        let cubic = surface_equation(&ymap, seed, 25, 10);
        let lines = lines_in_p3(&config, &ymap, &arrangement);
        let graph = crate::schlaefli::Graph27::new();
        let mismatches = incidence_mismatches(&lines);
        assert!(
            mismatches.is_empty(),
            "computed incidence must match the label rule: {mismatches:?}"
        );
        let orders =
            crate::orders::circular_orders(&lines, &graph).map_err(BuildError::DegenerateOrders)?;
        let region = crate::orders::region_graph(&orders);
        let intersections = crate::orders::intersection_table(&lines, &graph);
        Ok(SurfaceModel {
            config,
            arrangement,
            ymap,
            map_cubics,
            cubic,
            lines,
            graph,
            intersections,
            orders,
            region,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn standard_config_is_general_position() {
        assert!(validate_config(&standard_config()).is_ok());
    }

    #[test]
    fn collinear_triple_is_named() {
        let mut pts = standard_config();
        pts.cols[3] = [rat_i(1), rat_i(1), rat_i(0)]; // on the line through p1, p2
        let errs = validate_config(&pts).unwrap_err();
        assert!(errs.contains(&ConfigError::CollinearTriple(1, 2, 4)));
    }

    #[test]
    fn arrangement_matches_hand_values() {
        let arr = plane_arrangement_primitive(&standard_config());
        // Line through p3=(0,0,1), p5=(6,-4,3): primitive form 2 x0 + 3 x1.
        assert_eq!(arr.lines[&(3, 5)], [rat_i(2), rat_i(3), rat_i(0)]);
        // Conic omitting p6: x0 x1 + 2 x0 x2 + x1 x2.
        assert_eq!(
            arr.conics[5],
            [rat_i(0), rat_i(1), rat_i(2), rat_i(0), rat_i(1), rat_i(0)]
        );
    }

    #[test]
    fn gradients_match_polynomials() {
        let pts = standard_config();
        let arr = plane_arrangement_primitive(&pts);
        let ymap = anticanonical_map(&arr);
        let polys = ymap.polynomials();
        let p = [rat_i(2), rat_i(3), rat(5, 7)];
        let grads = ymap.gradients(&p);
        for c in 0..4 {
            for x in 0..3 {
                assert_eq!(grads[c][x], polys[c].partial(x).eval::<Rat>(&p));
            }
        }
        let vals = ymap.eval(&p);
        for c in 0..4 {
            assert_eq!(vals[c], polys[c].eval::<Rat>(&p));
        }
    }
}
