//! Charts on the moduli space of six labeled points in the plane, the
//! fifteen u-coordinates with their trinomial relations, the Weyl group
//! action on the 36-root arrangement and its chamber census, and the ten
//! Eckardt hypersurfaces that subdivide the positive chart.
//!
//! Three charts are provided and share one [`ChartPoint`] representation:
//!
//! * the `(a,b,c,d)` chart ([`ParamAbcd`]), whose matrix entries are ratios
//!   of the eleven `g`-factors and which carries the positive region;
//! * the `(x,y,z,w)` normal form ([`ParamXyzw`]) reached by [`gauge_fix`];
//! * the power-basis chart ([`ParamD`]) in which every maximal minor splits
//!   into linear factors drawn from the 36 roots.

use crate::fixtures;
use crate::linalg::rref_f;
use crate::quad::QuadExt5;
use crate::rat::{rat, rat_i, Field, Int, Rat};
use crate::sample::Sampler;
use crate::surface::{det3, SixPoints};
use once_cell::sync::Lazy;
use rand::Rng;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

/// The twenty 3-element subsets of {1,...,6} in lexicographic order; the
/// index of a triple in this list is the canonical index of the minor
/// `p_ijk` everywhere in this crate.
pub const TRIPLES: [[u8; 3]; 20] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [1, 5, 6],
    [2, 3, 4],
    [2, 3, 5],
    [2, 3, 6],
    [2, 4, 5],
    [2, 4, 6],
    [2, 5, 6],
    [3, 4, 5],
    [3, 4, 6],
    [3, 5, 6],
    [4, 5, 6],
];

/// Position of `{i,j,k}` (1-based, any order) in [`TRIPLES`].
pub fn triple_index(i: u8, j: u8, k: u8) -> usize {
    let mut t = [i, j, k];
    t.sort_unstable();
    TRIPLES.iter().position(|&x| x == t).expect("triple out of range")
}

/// Why a matrix fails to be a chart point, or a chart map fails to apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartError {
    /// The maximal minor on these three columns vanishes.
    ZeroMinor(u8, u8, u8),
    /// The six points lie on a common conic.
    ZeroCoconic,
    /// A denominator of the chart formula vanishes.
    ZeroDenominator,
    /// One of the 36 root forms vanishes at the given diagonal.
    ZeroRoot(usize),
    /// A pivot or scaling entry needed by the gauge fix vanishes.
    GaugePivot,
    /// The operation expects the first three columns to be the standard
    /// basis.
    NotNormalForm,
}

impl fmt::Display for ChartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartError::ZeroMinor(i, j, k) => write!(f, "minor p_{i}{j}{k} vanishes"),
            ChartError::ZeroCoconic => write!(f, "the six points lie on a conic"),
            ChartError::ZeroDenominator => write!(f, "a chart denominator vanishes"),
            ChartError::ZeroRoot(r) => write!(f, "root form {r} vanishes"),
            ChartError::GaugePivot => write!(f, "gauge fix hit a zero pivot or scaling entry"),
            ChartError::NotNormalForm => write!(f, "matrix is not in normal form"),
        }
    }
}

impl std::error::Error for ChartError {}

/// All twenty maximal minors of a 3x6 matrix, indexed by [`TRIPLES`].
pub fn minors20<F: Field>(m: &SixPoints<F>) -> [F; 20] {
    std::array::from_fn(|t| {
        let [i, j, k] = TRIPLES[t];
        det3(&m.cols[i as usize - 1], &m.cols[j as usize - 1], &m.cols[k as usize - 1])
    })
}

/// The coconic quartic in the minors: it vanishes exactly when the six
/// points lie on a common conic.
pub fn coconic_q<F: Field>(p: &[F; 20]) -> F {
    let a = p[triple_index(1, 3, 4)]
        .mul(&p[triple_index(1, 5, 6)])
        .mul(&p[triple_index(2, 3, 5)])
        .mul(&p[triple_index(2, 4, 6)]);
    let b = p[triple_index(1, 3, 5)]
        .mul(&p[triple_index(1, 4, 6)])
        .mul(&p[triple_index(2, 3, 4)])
        .mul(&p[triple_index(2, 5, 6)]);
    a.sub(&b)
}

/// A six-point matrix together with its nonvanishing minor data: the shared
/// representation behind every chart.
#[derive(Clone, Debug)]
pub struct ChartPoint<F: Field> {
    pub matrix: SixPoints<F>,
    pub minors: [F; 20],
    pub q: F,
}

impl<F: Field> ChartPoint<F> {
    /// Wrap a matrix, requiring all twenty minors and the coconic quartic
    /// to be nonzero.
    pub fn new(matrix: SixPoints<F>) -> Result<Self, ChartError> {
        let minors = minors20(&matrix);
        for (t, m) in minors.iter().enumerate() {
            if m.is_zero() {
                let [i, j, k] = TRIPLES[t];
                return Err(ChartError::ZeroMinor(i, j, k));
            }
        }
        let q = coconic_q(&minors);
        if q.is_zero() {
            return Err(ChartError::ZeroCoconic);
        }
        Ok(ChartPoint { matrix, minors, q })
    }
}

// ---------------------------------------------------------------------------
// The (a,b,c,d) chart.
// ---------------------------------------------------------------------------

/// The eleven irreducible polynomial factors that govern the `(a,b,c,d)`
/// chart: every maximal minor of [`abcd_matrix`] is a signed Laurent
/// monomial in `a,b,c,d` and these values.
pub fn g_factors<F: Field>(a: &F, b: &F, c: &F, d: &F) -> [F; 11] {
    let one = F::one();
    let ab = a.mul(b);
    let bc = b.mul(c);
    let abd = ab.mul(d);
    let g1 = a.add(&one);
    let g2 = b.add(&one);
    let g3 = ab.add(b).add(&one);
    let g4 = c.add(&one);
    let g5 = bc.add(c).add(&one);
    let g6 = d.add(&one);
    let g7 = g3.mul(d).add(&one);
    let g8 = bc.mul(d).add(&bc).add(&b.mul(d)).add(&c.mul(d)).add(c).add(d).add(&one);
    let g9 = g8.add(&abd);
    let g10 = g9.add(&abd.mul(c));
    let g11 = g10.add(&ab.mul(c));
    [g1, g2, g3, g4, g5, g6, g7, g8, g9, g10, g11]
}

/// The six-point matrix of the `(a,b,c,d)` chart.  Columns 1-4 are the
/// standard projective frame; columns 5 and 6 have entries built from the
/// `g`-factors.  Fails when a denominator (`b`, `bc`, `g3`, `g11`)
/// vanishes.
pub fn abcd_matrix<F: Field>(p: &[F; 4]) -> Result<SixPoints<F>, ChartError> {
    let [a, b, c, d] = p;
    let one = F::one();
    let g = g_factors(a, b, c, d);
    let bc = b.mul(c);
    let col5_top = g[1].div(b).ok_or(ChartError::ZeroDenominator)?;
    let col5_mid = g[0].mul(&g[1]).div(&g[2]).ok_or(ChartError::ZeroDenominator)?.neg();
    let col6_top = g[4].div(&bc).ok_or(ChartError::ZeroDenominator)?;
    let col6_mid = g[0].mul(&g[7]).div(&g[10]).ok_or(ChartError::ZeroDenominator)?.neg();
    Ok(SixPoints {
        cols: [
            [one.clone(), F::zero(), F::zero()],
            [F::zero(), one.clone(), F::zero()],
            [F::zero(), F::zero(), one.clone()],
            [one.clone(), one.neg(), one.clone()],
            [col5_top, col5_mid, one.clone()],
            [col6_top, col6_mid, one],
        ],
    })
}

/// A nondegenerate point of the `(a,b,c,d)` chart.
#[derive(Clone, Debug)]
pub struct ParamAbcd<F: Field> {
    pub point: [F; 4],
    pub g: [F; 11],
    pub chart: ChartPoint<F>,
}

impl<F: Field> ParamAbcd<F> {
    pub fn new(point: [F; 4]) -> Result<Self, ChartError> {
        let [a, b, c, d] = &point;
        let g = g_factors(a, b, c, d);
        let chart = ChartPoint::new(abcd_matrix(&point)?)?;
        Ok(ParamAbcd { point, g, chart })
    }
}

// ---------------------------------------------------------------------------
// The (x,y,z,w) normal form and the gauge fix.
// ---------------------------------------------------------------------------

/// The six-point matrix of the `(x,y,z,w)` normal form: columns are the
/// standard basis, `(1,-1,1)`, `(x,-z,1)`, and `(y,-w,1)`.
pub fn xyzw_matrix<F: Field>(p: &[F; 4]) -> SixPoints<F> {
    let [x, y, z, w] = p;
    let one = F::one();
    SixPoints {
        cols: [
            [one.clone(), F::zero(), F::zero()],
            [F::zero(), one.clone(), F::zero()],
            [F::zero(), F::zero(), one.clone()],
            [one.clone(), one.neg(), one.clone()],
            [x.clone(), z.neg(), one.clone()],
            [y.clone(), w.neg(), one],
        ],
    }
}

/// A nondegenerate point of the `(x,y,z,w)` chart.
#[derive(Clone, Debug)]
pub struct ParamXyzw<F: Field> {
    pub point: [F; 4],
    pub chart: ChartPoint<F>,
}

impl<F: Field> ParamXyzw<F> {
    pub fn new(point: [F; 4]) -> Result<Self, ChartError> {
        let chart = ChartPoint::new(xyzw_matrix(&point))?;
        Ok(ParamXyzw { point, chart })
    }
}

/// Bring an arbitrary 3x6 matrix into the `(x,y,z,w)` normal form and read
/// off the four coordinates.
///
/// The procedure row-reduces columns 1-3 to the identity, then solves the
/// row and column scalings that send column 4 to `(1,-1,1)` and the bottom
/// entries of columns 5 and 6 to `1`.  Fails with [`ChartError::GaugePivot`]
/// when a required pivot or scaling entry vanishes.
pub fn gauge_fix<F: Field>(m: &SixPoints<F>) -> Result<[F; 4], ChartError> {
    let aug: Vec<Vec<F>> = (0..3)
        .map(|r| {
            let mut row: Vec<F> = (0..3).map(|c| m.cols[c][r].clone()).collect();
            row.extend((0..6).map(|c| m.cols[c][r].clone()));
            row
        })
        .collect();
    let (rr, pivots) = rref_f(&aug);
    if pivots != [0, 1, 2] {
        return Err(ChartError::GaugePivot);
    }
    // Entry (r, c) of the reduced matrix whose first three columns are the
    // identity.
    let e = |r: usize, c: usize| rr[r][3 + c].clone();
    let needed = [e(0, 3), e(1, 3), e(2, 3), e(2, 4), e(2, 5)];
    if needed.iter().any(|v| v.is_zero()) {
        return Err(ChartError::GaugePivot);
    }
    let ratio = |num_r: usize, num_c: usize, den_r: usize, den_c: usize| -> Result<F, ChartError> {
        e(num_r, num_c)
            .mul(&e(2, 3))
            .div(&e(den_r, den_c).mul(&e(2, num_c)))
            .ok_or(ChartError::GaugePivot)
    };
    let x = ratio(0, 4, 0, 3)?;
    let y = ratio(0, 5, 0, 3)?;
    let z = ratio(1, 4, 1, 3)?;
    let w = ratio(1, 5, 1, 3)?;
    Ok([x, y, z, w])
}

/// Relabel the six points: new column `i` is old column `perm[i]`.
pub fn permute_columns<F: Field>(m: &SixPoints<F>, perm: &[usize; 6]) -> SixPoints<F> {
    SixPoints { cols: std::array::from_fn(|i| m.cols[perm[i]].clone()) }
}

/// The quadratic involution centered at the first three points, applied to
/// a matrix in normal position (first three columns equal to the standard
/// basis).  The three centers stay fixed; every other column `(x0,x1,x2)`
/// maps to `(x1*x2, x0*x2, x0*x1)`.
pub fn cremona_points<F: Field>(m: &SixPoints<F>) -> Result<SixPoints<F>, ChartError> {
    for i in 0..3 {
        for r in 0..3 {
            let want_one = i == r;
            let entry = &m.cols[i][r];
            if want_one && entry != &F::one() {
                return Err(ChartError::NotNormalForm);
            }
            if !want_one && !entry.is_zero() {
                return Err(ChartError::NotNormalForm);
            }
        }
    }
    let mut cols = m.cols.clone();
    for col in cols.iter_mut().skip(3) {
        let [x0, x1, x2] = col.clone();
        *col = [x1.mul(&x2), x0.mul(&x2), x0.mul(&x1)];
    }
    Ok(SixPoints { cols })
}

// ---------------------------------------------------------------------------
// The u-coordinates.
// ---------------------------------------------------------------------------

/// Each u-coordinate as a signed Laurent monomial in the twenty minors and
/// the coconic quartic: `(constant sign, exponent of q, minor exponents)`.
/// Minor positions refer to [`TRIPLES`].
pub const U_MONOMIALS: [(i8, u32, &[(usize, i8)]); 15] = [
    (-1, 1, &[(3, -1), (5, -1), (10, -1), (19, -1)]),
    (1, 0, &[(4, 1), (9, 1), (11, 1), (14, 1), (5, -1), (8, -1), (10, -1), (15, -1)]),
    (1, 0, &[(4, 1), (18, 1), (5, -1), (17, -1)]),
    (1, 0, &[(6, 1), (7, 1), (5, -1), (8, -1)]),
    (1, 0, &[(2, 1), (6, 1), (14, 1), (16, 1), (3, -1), (5, -1), (13, -1), (17, -1)]),
    (1, 0, &[(6, 1), (11, 1), (5, -1), (12, -1)]),
    (1, 0, &[(0, 1), (7, 1), (14, 1), (18, 1), (1, -1), (5, -1), (12, -1), (19, -1)]),
    (1, 0, &[(2, 1), (18, 1), (5, -1), (15, -1)]),
    (1, 0, &[(2, 1), (4, 1), (1, -1), (5, -1)]),
    (1, 0, &[(7, 1), (11, 1), (5, -1), (13, -1)]),
    (1, 0, &[(5, 1), (10, 1), (4, -1), (11, -1)]),
    (1, 0, &[(5, 1), (19, 1), (7, -1), (18, -1)]),
    (1, 0, &[(1, 1), (5, 1), (15, 1), (17, 1), (2, -1), (4, -1), (14, -1), (18, -1)]),
    (1, 0, &[(3, 1), (5, 1), (2, -1), (6, -1)]),
    (1, 0, &[(5, 1), (8, 1), (12, 1), (13, 1), (6, -1), (7, -1), (11, -1), (14, -1)]),
];

fn pow_signed<F: Field>(base: &F, e: i64) -> Option<F> {
    if e == 0 {
        return Some(F::one());
    }
    let b = if e < 0 { base.inv()? } else { base.clone() };
    let mut acc = F::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc.mul(&b);
    }
    Some(acc)
}

/// Evaluate the fifteen u-coordinates at a chart point.  Well-defined
/// because [`ChartPoint`] guarantees all minors and `q` are nonzero.
pub fn u_map<F: Field>(chart: &ChartPoint<F>) -> [F; 15] {
    std::array::from_fn(|i| {
        let (sign, qe, terms) = U_MONOMIALS[i];
        let mut v = if sign < 0 { F::one().neg() } else { F::one() };
        for _ in 0..qe {
            v = v.mul(&chart.q);
        }
        for &(t, e) in terms {
            let f = pow_signed(&chart.minors[t], e as i64).expect("chart minors are nonzero");
            v = v.mul(&f);
        }
        v
    })
}

/// The 4x15 exponent matrix expressing `a,b,c,d` as monomials in the
/// u-coordinates, parsed from the embedded reference table.
pub static ABCD_EXPONENT_MATRIX: Lazy<[[i64; 15]; 4]> = Lazy::new(|| {
    let recs = fixtures::parse_int_records(fixtures::ABCD_EXPONENTS);
    assert_eq!(recs.len(), 4, "expected four exponent rows");
    std::array::from_fn(|r| {
        let (label, ints) = &recs[r];
        assert_eq!(label, ["A", "B", "C", "D"][r]);
        assert_eq!(ints.len(), 15);
        std::array::from_fn(|c| ints[c])
    })
});

/// Recover `(a,b,c,d)` from the fifteen u-coordinates via the monomial
/// inverse.  Fails when a coordinate with a negative exponent is zero.
pub fn u_inverse<F: Field>(u: &[F; 15]) -> Result<[F; 4], ChartError> {
    let rows = &*ABCD_EXPONENT_MATRIX;
    let mut out: [F; 4] = std::array::from_fn(|_| F::one());
    for (r, row) in rows.iter().enumerate() {
        let mut v = F::one();
        for (j, &e) in row.iter().enumerate() {
            let f = pow_signed(&u[j], e).ok_or(ChartError::ZeroDenominator)?;
            v = v.mul(&f);
        }
        out[r] = v;
    }
    Ok(out)
}

/// Support sets `V(i)` of the fifteen trinomial relations
/// `u_i + prod_{j in V(i)} u_j = 1`, parsed from the embedded table
/// (0-based indices).
pub static TRINOMIAL_SUPPORTS: Lazy<Vec<Vec<usize>>> = Lazy::new(|| {
    let recs = fixtures::parse_int_records(fixtures::U_SUPPORTS);
    assert_eq!(recs.len(), 15);
    recs.iter()
        .enumerate()
        .map(|(i, (label, ints))| {
            assert_eq!(label, &format!("U{}", i + 1));
            ints.iter().map(|&v| (v - 1) as usize).collect()
        })
        .collect()
});

/// The fifteen residuals `u_i + prod_{j in V(i)} u_j - 1`; identically zero
/// on the image of [`u_map`].
pub fn trinomial_residuals<F: Field>(u: &[F; 15]) -> [F; 15] {
    std::array::from_fn(|i| {
        let mut prod = F::one();
        for &j in &TRINOMIAL_SUPPORTS[i] {
            prod = prod.mul(&u[j]);
        }
        u[i].add(&prod).sub(&F::one())
    })
}

/// Jacobian of the fifteen trinomial residuals with respect to the fifteen
/// u-coordinates; at a point of the variety its rank is the codimension.
pub fn trinomial_jacobian<F: Field>(u: &[F; 15]) -> Vec<Vec<F>> {
    (0..15)
        .map(|i| {
            (0..15)
                .map(|j| {
                    let mut entry = if i == j { F::one() } else { F::zero() };
                    if TRINOMIAL_SUPPORTS[i].contains(&j) {
                        let mut prod = F::one();
                        for &k in &TRINOMIAL_SUPPORTS[i] {
                            if k != j {
                                prod = prod.mul(&u[k]);
                            }
                        }
                        entry = entry.add(&prod);
                    }
                    entry
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Laurent-monomial structure of the (a,b,c,d)-chart minors.
// ---------------------------------------------------------------------------

/// One minor as a signed monomial in the basis `a,b,c,d,g1..g11`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GExponent {
    pub sign: i8,
    /// Exponents ordered as `a, b, c, d, g1, ..., g11`.
    pub exps: [i64; 15],
}

/// The frozen exponent table, one record per minor in [`TRIPLES`] order.
pub static G_EXPONENT_TABLE: Lazy<[GExponent; 20]> = Lazy::new(|| {
    let recs = fixtures::parse_int_records(fixtures::G_EXPONENTS);
    assert_eq!(recs.len(), 20);
    std::array::from_fn(|t| {
        let (label, ints) = &recs[t];
        let [i, j, k] = TRIPLES[t];
        assert_eq!(label, &format!("P{i}{j}{k}"));
        assert_eq!(ints.len(), 16);
        assert!(ints[0] == 1 || ints[0] == -1);
        GExponent { sign: ints[0] as i8, exps: std::array::from_fn(|c| ints[c + 1]) }
    })
});

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0);
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn int_val(n: &Int, p: &Int) -> (u32, Int) {
    let mut n = num_traits::Signed::abs(n);
    let mut v = 0;
    while !num_traits::Zero::is_zero(&n) && num_traits::Zero::is_zero(&(&n % p)) {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// Basis values `a,b,c,d,g1..g11` at a chart point.
fn g_basis<F: Field>(p: &ParamAbcd<F>) -> [F; 15] {
    std::array::from_fn(|j| if j < 4 { p.point[j].clone() } else { p.g[j - 4].clone() })
}

/// Recover the exponent table of [`G_EXPONENT_TABLE`] from scratch: sample
/// `panel` chart points with small positive integer coordinates, factor all
/// basis values, and solve the integer linear system equating prime
/// valuations of each minor with valuations of the candidate monomial.
/// Panics if the system is inconsistent or underdetermined, or if a minor
/// has a prime factor outside the basis support (either would falsify the
/// monomial property).
pub fn fit_g_exponents(seed: u64, panel: usize) -> [GExponent; 20] {
    let mut rng = Sampler::new(seed).stream(0x6f17);
    let mut samples: Vec<ParamAbcd<Rat>> = Vec::new();
    while samples.len() < panel {
        let pt: [Rat; 4] = std::array::from_fn(|_| rat_i(rng.gen_range(1..=12)));
        if let Ok(p) = ParamAbcd::new(pt) {
            samples.push(p);
        }
    }
    // One augmented row per (sample, prime): 15 valuation coefficients of the
    // basis, then 20 right-hand sides (one per minor).
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for s in &samples {
        let basis = g_basis(s);
        let basis_ints: Vec<Int> = basis
            .iter()
            .map(|v| {
                assert!(v.denom() == &Int::from(1));
                v.numer().clone()
            })
            .collect();
        let mut primes: BTreeSet<u64> = BTreeSet::new();
        for b in &basis_ints {
            let n =
                u64::try_from(num_traits::Signed::abs(b)).expect("basis value fits in u64");
            for (p, _) in prime_factors(n) {
                primes.insert(p);
            }
        }
        // Minors must factor entirely over the sample's basis primes.
        for m in &s.chart.minors {
            let mut num = num_traits::Signed::abs(m.numer());
            let mut den = num_traits::Signed::abs(m.denom());
            for &p in &primes {
                let bp = Int::from(p);
                num = int_val(&num, &bp).1;
                den = int_val(&den, &bp).1;
            }
            assert!(
                num == Int::from(1) && den == Int::from(1),
                "a minor has prime support outside the basis: monomial property violated"
            );
        }
        for &p in &primes {
            let bp = Int::from(p);
            let mut row: Vec<Rat> =
                basis_ints.iter().map(|b| rat_i(int_val(b, &bp).0 as i64)).collect();
            for m in &s.chart.minors {
                let vn = int_val(m.numer(), &bp).0 as i64;
                let vd = int_val(m.denom(), &bp).0 as i64;
                row.push(rat_i(vn - vd));
            }
            rows.push(row);
        }
    }
    let (rr, pivots) = rref_f(&rows);
    assert_eq!(pivots.len(), 15, "valuation system does not determine the exponents");
    assert!(pivots.iter().all(|&c| c < 15), "valuation system is inconsistent");
    let mut table: Vec<GExponent> = Vec::with_capacity(20);
    for t in 0..20 {
        let mut exps = [0i64; 15];
        for (r, &col) in pivots.iter().enumerate() {
            let v = &rr[r][15 + t];
            assert!(v.denom() == &Int::from(1), "non-integer exponent fitted");
            exps[col] = i64::try_from(v.numer().clone()).expect("small exponent");
        }
        // The sign is the constant ratio minor / monomial across all samples.
        let one = <Rat as Field>::one();
        let mut sign: Option<i8> = None;
        for s in &samples {
            let basis = g_basis(s);
            let mut mono = one.clone();
            for (j, &e) in exps.iter().enumerate() {
                mono = mono.mul(&pow_signed(&basis[j], e).expect("nonzero basis"));
            }
            let ratio = s.chart.minors[t].div(&mono).expect("nonzero monomial");
            let this = if ratio == one {
                1
            } else if ratio == one.neg() {
                -1
            } else {
                panic!("minor is not +/- the fitted monomial at a sample point");
            };
            match sign {
                None => sign = Some(this),
                Some(s0) => assert_eq!(s0, this, "sign is not constant across samples"),
            }
        }
        table.push(GExponent { sign: sign.unwrap(), exps });
    }
    table.try_into().unwrap()
}

/// Render an exponent table in the fixture format (for freezing).
pub fn format_g_exponents(table: &[GExponent; 20]) -> String {
    let mut out = String::new();
    for (t, rec) in table.iter().enumerate() {
        let [i, j, k] = TRIPLES[t];
        out.push_str(&format!("P{i}{j}{k} : {}", rec.sign));
        for e in rec.exps {
            out.push_str(&format!(" {e}"));
        }
        out.push_str(" ;\n");
    }
    out
}

/// Verify, at one chart point, that every minor equals its tabulated signed
/// monomial and that `-q = a*d*g1*g2*g4 / (b*c*g3*g11)`.
pub fn g_factor_check<F: Field>(p: &ParamAbcd<F>) -> Result<(), String> {
    let basis = g_basis(p);
    for (t, rec) in G_EXPONENT_TABLE.iter().enumerate() {
        let mut mono = if rec.sign < 0 { F::one().neg() } else { F::one() };
        for (j, &e) in rec.exps.iter().enumerate() {
            let f = pow_signed(&basis[j], e)
                .ok_or_else(|| format!("basis value {j} is zero with negative exponent"))?;
            mono = mono.mul(&f);
        }
        if p.chart.minors[t] != mono {
            let [i, j, k] = TRIPLES[t];
            return Err(format!("minor p_{i}{j}{k} does not match its monomial"));
        }
    }
    let [a, b, c, d] = &p.point;
    let num = a.mul(d).mul(&p.g[0]).mul(&p.g[1]).mul(&p.g[3]);
    let den = b.mul(c).mul(&p.g[2]).mul(&p.g[10]);
    let rhs = num.div(&den).ok_or("zero denominator in the -q identity")?;
    if p.chart.q.neg() != rhs {
        return Err("-q does not match a*d*g1*g2*g4/(b*c*g3*g11)".to_string());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The diagonal chart and the 36 roots.
// ---------------------------------------------------------------------------

pub const ROOT_COUNT: usize = 36;

/// Index of the difference root `d_j - d_i` (0-based `i < j`).
pub fn diff_root_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 6);
    i * (11 - i) / 2 + (j - i - 1)
}

/// Index of the sum root `d_i + d_j + d_k` for triple number `t`.
pub fn sum_root_index(t: usize) -> usize {
    15 + t
}

/// Index of the full-sum root `d_1 + ... + d_6`.
pub const TOTAL_ROOT: usize = 35;

/// Coefficient vectors of the 36 roots: the 15 differences `d_j - d_i`
/// (`i < j`, lexicographic), the 20 triple sums in [`TRIPLES`] order, and
/// the full sum.  Differences are oriented so that every minor of the
/// diagonal chart is exactly the product of its four roots (no sign).
pub static ROOTS: Lazy<[[i64; 6]; 36]> = Lazy::new(|| {
    let mut out = [[0i64; 6]; 36];
    let mut idx = 0;
    for i in 0..6 {
        for j in i + 1..6 {
            out[idx][j] = 1;
            out[idx][i] = -1;
            idx += 1;
        }
    }
    for t in TRIPLES {
        for v in t {
            out[idx][v as usize - 1] = 1;
        }
        idx += 1;
    }
    out[TOTAL_ROOT] = [1; 6];
    out
});

/// Evaluate all 36 root forms at a diagonal point.
pub fn root_values<F: Field>(d: &[F; 6]) -> [F; 36] {
    std::array::from_fn(|r| {
        let mut v = F::zero();
        for (k, &c) in ROOTS[r].iter().enumerate() {
            match c {
                1 => v = v.add(&d[k]),
                -1 => v = v.sub(&d[k]),
                _ => {}
            }
        }
        v
    })
}

/// The four root indices whose product is the minor on triple `t` of the
/// diagonal chart.
pub fn minor_root_indices(t: usize) -> [usize; 4] {
    let [i, j, k] = TRIPLES[t];
    let (a, b, c) = (i as usize - 1, j as usize - 1, k as usize - 1);
    [diff_root_index(a, b), diff_root_index(a, c), diff_root_index(b, c), sum_root_index(t)]
}

/// The six-point matrix of the diagonal chart: columns `(1, d_i, d_i^3)`.
pub fn d_matrix<F: Field>(d: &[F; 6]) -> SixPoints<F> {
    SixPoints {
        cols: std::array::from_fn(|i| {
            let di = d[i].clone();
            let cube = di.mul(&di).mul(&di);
            [F::one(), di, cube]
        }),
    }
}

/// A nondegenerate point of the diagonal chart: all 36 roots nonzero.
#[derive(Clone, Debug)]
pub struct ParamD<F: Field> {
    pub point: [F; 6],
    pub roots: [F; 36],
    pub chart: ChartPoint<F>,
}

impl<F: Field> ParamD<F> {
    pub fn new(point: [F; 6]) -> Result<Self, ChartError> {
        let roots = root_values(&point);
        if let Some(r) = roots.iter().position(|v| v.is_zero()) {
            return Err(ChartError::ZeroRoot(r));
        }
        let chart = ChartPoint::new(d_matrix(&point))?;
        Ok(ParamD { point, roots, chart })
    }
}

// ---------------------------------------------------------------------------
// The Weyl action on roots and the chamber orbit.
// ---------------------------------------------------------------------------

/// A group element acting on the root set: root `r` composed with the
/// underlying linear map equals `sign * root image[r].0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPerm {
    pub image: [(u8, i8); 36],
}

/// Build the signed root permutation induced by the linear map
/// `d -> M * d`; fails if some root's pullback is not plus or minus a root
/// (which would mean `M` does not preserve the arrangement).
pub fn root_perm_from_matrix(m: &[[Rat; 6]; 6]) -> Result<RootPerm, String> {
    let roots = &*ROOTS;
    let rat_roots: Vec<[Rat; 6]> =
        roots.iter().map(|r| std::array::from_fn(|k| rat_i(r[k]))).collect();
    let mut image = [(0u8, 0i8); 36];
    for (r, root) in rat_roots.iter().enumerate() {
        // Pullback form: (root o M)_k = sum_i root_i * M[i][k].
        let pulled: [Rat; 6] = std::array::from_fn(|k| {
            let mut v = <Rat as Field>::zero();
            for i in 0..6 {
                v = v.add(&root[i].mul(&m[i][k]));
            }
            v
        });
        let neg: [Rat; 6] = std::array::from_fn(|k| pulled[k].neg());
        if let Some(j) = rat_roots.iter().position(|cand| cand == &pulled) {
            image[r] = (j as u8, 1);
        } else if let Some(j) = rat_roots.iter().position(|cand| cand == &neg) {
            image[r] = (j as u8, -1);
        } else {
            return Err(format!("image of root {r} is not one of the 36 roots up to sign"));
        }
    }
    Ok(RootPerm { image })
}

fn identity_matrix() -> [[Rat; 6]; 6] {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { rat_i(1) } else { rat_i(0) }))
}

/// Matrix of the transposition swapping diagonal coordinates `i` and `j`.
fn transposition_matrix(i: usize, j: usize) -> [[Rat; 6]; 6] {
    let mut m = identity_matrix();
    m[i][i] = rat_i(0);
    m[j][j] = rat_i(0);
    m[i][j] = rat_i(1);
    m[j][i] = rat_i(1);
    m
}

/// Matrix of the quadratic involution on the diagonal chart: the
/// reflection at the hyperplane `d_1 + d_2 + d_3 = 0`, sending
/// `d_i -> d_i - (2/3) s` for `i <= 3` and `d_i -> d_i + (1/3) s` for
/// `i >= 4`, where `s = d_1 + d_2 + d_3`.
fn cremona_reflection_matrix() -> [[Rat; 6]; 6] {
    let mut m = identity_matrix();
    for i in 0..3 {
        for k in 0..3 {
            m[i][k] = m[i][k].sub(&rat(2, 3));
        }
    }
    for i in 3..6 {
        for k in 0..3 {
            m[i][k] = m[i][k].add(&rat(1, 3));
        }
    }
    m
}

/// The six generators used for the chamber orbit: the five adjacent
/// transpositions and the quadratic involution.  Panics if any generator
/// failed to permute the root set up to sign.
pub fn weyl_root_generators() -> Vec<RootPerm> {
    let mut gens = Vec::new();
    for i in 0..5 {
        gens.push(
            root_perm_from_matrix(&transposition_matrix(i, i + 1))
                .expect("transposition preserves the root set"),
        );
    }
    gens.push(
        root_perm_from_matrix(&cremona_reflection_matrix())
            .expect("reflection preserves the root set"),
    );
    gens
}

/// Sign mask of a chamber: bit `r` is set iff root `r` is negative there.
pub fn mask_from_signs<F: Field + PartialOrd>(values: &[F; 36]) -> u64 {
    let zero = F::zero();
    let mut mask = 0u64;
    for (r, v) in values.iter().enumerate() {
        assert!(!v.is_zero(), "point lies on a root hyperplane");
        if *v < zero {
            mask |= 1 << r;
        }
    }
    mask
}

/// Sign mask of the base chamber, the one containing `d = (0,1,2,3,4,5)`.
/// With the root orientations of [`ROOTS`] every root is positive there, so
/// the mask is zero.
pub fn base_chamber_mask() -> u64 {
    let d: [Rat; 6] = std::array::from_fn(|i| rat_i(i as i64));
    mask_from_signs(&root_values(&d))
}

/// Transport a chamber mask along a group element.
pub fn apply_root_perm(p: &RootPerm, mask: u64) -> u64 {
    let mut out = 0u64;
    for (r, &(img, sign)) in p.image.iter().enumerate() {
        let was_neg = (mask >> img) & 1 == 1;
        if was_neg != (sign < 0) {
            out |= 1 << r;
        }
    }
    out
}

/// Breadth-first orbit of the base chamber under the six generators.
pub fn chamber_orbit() -> Vec<u64> {
    let gens = weyl_root_generators();
    let base = base_chamber_mask();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut order: Vec<u64> = Vec::new();
    let mut queue: VecDeque<u64> = VecDeque::new();
    seen.insert(base);
    order.push(base);
    queue.push_back(base);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let n = apply_root_perm(g, m);
            if seen.insert(n) {
                order.push(n);
                queue.push_back(n);
            }
        }
        assert!(order.len() <= 60_000, "chamber orbit exceeded the expected bound");
    }
    order
}

// ---------------------------------------------------------------------------
// Sign census projections.
// ---------------------------------------------------------------------------

/// Sign of a root-monomial on a chamber: the product of the signs of the
/// roots appearing with odd exponent, and an overall constant.
#[derive(Clone, Copy, Debug)]
pub struct SignSignature {
    /// Bit `r` set iff root `r` appears with odd exponent.
    pub parity: u64,
    /// Whether the constant prefactor is negative.
    pub negate: bool,
}

impl SignSignature {
    /// True iff the monomial is negative on the chamber.
    pub fn is_negative_on(&self, chamber: u64) -> bool {
        ((self.parity & chamber).count_ones() & 1 == 1) ^ self.negate
    }
}

struct RootExponentAccumulator {
    exps: [i64; 36],
    negate: bool,
}

impl RootExponentAccumulator {
    fn new() -> Self {
        RootExponentAccumulator { exps: [0; 36], negate: false }
    }
    fn mul_minor(&mut self, t: usize, e: i64) {
        for r in minor_root_indices(t) {
            self.exps[r] += e;
        }
    }
    /// The coconic quartic of the diagonal chart is minus the product of
    /// the full-sum root and the fifteen difference roots.
    fn mul_coconic(&mut self, e: i64) {
        self.exps[TOTAL_ROOT] += e;
        for r in 0..15 {
            self.exps[r] += e;
        }
        if e % 2 != 0 {
            self.negate = !self.negate;
        }
    }
    fn signature(&self) -> SignSignature {
        let mut parity = 0u64;
        for (r, &e) in self.exps.iter().enumerate() {
            if e % 2 != 0 {
                parity |= 1 << r;
            }
        }
        SignSignature { parity, negate: self.negate }
    }
}

/// Root-sign signatures of the fifteen u-coordinates on the diagonal chart.
pub fn u_sign_signatures() -> [SignSignature; 15] {
    std::array::from_fn(|i| {
        let (sign, qe, terms) = U_MONOMIALS[i];
        let mut acc = RootExponentAccumulator::new();
        if sign < 0 {
            acc.negate = !acc.negate;
        }
        acc.mul_coconic(qe as i64);
        for &(t, e) in terms {
            acc.mul_minor(t, e as i64);
        }
        acc.signature()
    })
}

/// A factor of one coordinate of the degree-(3,...,3) embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YFactor {
    Minor(usize),
    Coconic,
}

/// The forty coordinates of the degree-(3,...,3) embedding, parsed from the
/// embedded factor table.
pub static YOSHIDA_FACTORS: Lazy<Vec<Vec<YFactor>>> = Lazy::new(|| {
    let recs = fixtures::parse_records(fixtures::YOSHIDA);
    assert_eq!(recs.len(), 40);
    recs.iter()
        .enumerate()
        .map(|(n, (label, toks))| {
            assert_eq!(label, &format!("Y{:02}", n + 1));
            toks.iter()
                .map(|tok| {
                    if tok == "Q" {
                        YFactor::Coconic
                    } else {
                        assert_eq!(tok.len(), 3);
                        let d: Vec<u8> = tok.bytes().map(|b| b - b'0').collect();
                        YFactor::Minor(triple_index(d[0], d[1], d[2]))
                    }
                })
                .collect()
        })
        .collect()
});

/// Evaluate the forty embedding coordinates at a chart point.
pub fn yoshida_coords<F: Field>(chart: &ChartPoint<F>) -> [F; 40] {
    std::array::from_fn(|n| {
        let mut v = F::one();
        for f in &YOSHIDA_FACTORS[n] {
            v = v.mul(match f {
                YFactor::Minor(t) => &chart.minors[*t],
                YFactor::Coconic => &chart.q,
            });
        }
        v
    })
}

/// Root-exponent vectors of the forty embedding coordinates on the
/// diagonal chart (before parity reduction).
pub fn yoshida_root_exponents() -> Vec<[i64; 36]> {
    YOSHIDA_FACTORS
        .iter()
        .map(|factors| {
            let mut acc = RootExponentAccumulator::new();
            for f in factors {
                match f {
                    YFactor::Minor(t) => acc.mul_minor(*t, 1),
                    YFactor::Coconic => acc.mul_coconic(1),
                }
            }
            acc.exps
        })
        .collect()
}

/// Root-sign signatures of the forty embedding coordinates.
pub fn yoshida_sign_signatures() -> Vec<SignSignature> {
    YOSHIDA_FACTORS
        .iter()
        .map(|factors| {
            let mut acc = RootExponentAccumulator::new();
            for f in factors {
                match f {
                    YFactor::Minor(t) => acc.mul_minor(*t, 1),
                    YFactor::Coconic => acc.mul_coconic(1),
                }
            }
            acc.signature()
        })
        .collect()
}

/// The 15-bit u-sign vector of a chamber.
pub fn u_signs_of_chamber(sigs: &[SignSignature; 15], chamber: u64) -> u16 {
    let mut v = 0u16;
    for (i, s) in sigs.iter().enumerate() {
        if s.is_negative_on(chamber) {
            v |= 1 << i;
        }
    }
    v
}

/// The 40-bit embedding sign vector of a chamber.
pub fn yoshida_signs_of_chamber(sigs: &[SignSignature], chamber: u64) -> u64 {
    let mut v = 0u64;
    for (i, s) in sigs.iter().enumerate() {
        if s.is_negative_on(chamber) {
            v |= 1 << i;
        }
    }
    v
}

/// Census of u-sign vectors over a chamber orbit: distinct vectors and
/// their fiber sizes.
pub fn u_sign_census(chambers: &[u64]) -> HashMap<u16, usize> {
    let sigs = u_sign_signatures();
    let mut census: HashMap<u16, usize> = HashMap::new();
    for &c in chambers {
        *census.entry(u_signs_of_chamber(&sigs, c)).or_insert(0) += 1;
    }
    census
}

/// Census of embedding sign vectors over a chamber orbit: the number of
/// distinct raw vectors and the number up to a global sign flip.
pub fn yoshida_sign_census(chambers: &[u64]) -> (usize, usize) {
    let sigs = yoshida_sign_signatures();
    let mask40: u64 = (1u64 << 40) - 1;
    let mut raw: HashSet<u64> = HashSet::new();
    let mut flip: HashSet<u64> = HashSet::new();
    for &c in chambers {
        let v = yoshida_signs_of_chamber(&sigs, c);
        raw.insert(v);
        flip.insert(v.min(v ^ mask40));
    }
    (raw.len(), flip.len())
}

// ---------------------------------------------------------------------------
// The Eckardt hypersurfaces of the positive chart.
// ---------------------------------------------------------------------------

/// A polynomial in `(a,b,c,d)` as a list of `(coefficient, exponents)`.
#[derive(Clone, Debug)]
pub struct PolyAbcd {
    pub terms: Vec<(i64, [u32; 4])>,
}

/// Evaluate at a point of any exact field.
pub fn eval_abcd<F: Field>(p: &PolyAbcd, pt: &[F; 4]) -> F {
    let mut sum = F::zero();
    for (c, exps) in &p.terms {
        let mut term = F::from_i64(*c);
        for (v, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&pt[v]);
            }
        }
        sum = sum.add(&term);
    }
    sum
}

/// The ten polynomials cutting out the Eckardt hypersurfaces that meet the
/// positive chart, parsed from the embedded coefficient table.
pub static ECKARDT_POLYS: Lazy<[PolyAbcd; 10]> = Lazy::new(|| {
    let recs = fixtures::parse_int_records(fixtures::ECKARDT_POLYS);
    assert_eq!(recs.len(), 10);
    std::array::from_fn(|n| {
        let (label, ints) = &recs[n];
        assert_eq!(label, &format!("H{}", n + 1));
        assert_eq!(ints.len() % 5, 0);
        let terms = ints
            .chunks(5)
            .map(|ch| (ch[0], [ch[1] as u32, ch[2] as u32, ch[3] as u32, ch[4] as u32]))
            .collect();
        PolyAbcd { terms }
    })
});

/// The unique positive chart point at which all ten Eckardt polynomials
/// vanish simultaneously, with coordinates in `Q(sqrt 5)`:
/// `d = (3 - sqrt 5)/2`, `a = 3 - d`, `b = 2 - d`, `c = 1 - d`.
pub fn clebsch_point() -> [QuadExt5; 4] {
    let d = QuadExt5::new(rat(3, 2), rat(-1, 2));
    let a = QuadExt5::new(rat(3, 2), rat(1, 2));
    let b = QuadExt5::new(rat(1, 2), rat(1, 2));
    let c = QuadExt5::new(rat(-1, 2), rat(1, 2));
    [a, b, c, d]
}

/// Values of the ten Eckardt polynomials at the Clebsch point (all zero).
pub fn clebsch_values() -> [QuadExt5; 10] {
    let pt = clebsch_point();
    std::array::from_fn(|n| eval_abcd(&ECKARDT_POLYS[n], &pt))
}

/// Result of the Monte-Carlo sign census of the Eckardt subdivision.
#[derive(Clone, Copy, Debug)]
pub struct CensusReport {
    /// Number of distinct sign vectors observed.
    pub distinct: usize,
    /// Index (1-based, in valid samples) at which the last new vector
    /// appeared.
    pub last_new_at: usize,
    /// Number of valid samples drawn.
    pub samples: usize,
}

impl CensusReport {
    /// True when no new vector appeared in the second half of the run.
    pub fn stabilized(&self) -> bool {
        self.last_new_at * 2 <= self.samples
    }
}

/// Count the distinct sign vectors of the ten Eckardt polynomials over
/// seeded positive rational points.  Samples landing exactly on a
/// hypersurface are discarded.  Exact integer arithmetic throughout (the
/// polynomials have per-variable degree at most two, so clearing
/// denominators stays far below the `i128` range).
pub fn eckardt_census(seed: u64, samples: usize) -> CensusReport {
    struct Fast {
        terms: Vec<(i128, [u32; 4])>,
        maxdeg: [u32; 4],
    }
    let fast: Vec<Fast> = ECKARDT_POLYS
        .iter()
        .map(|p| {
            let mut maxdeg = [0u32; 4];
            for (_, e) in &p.terms {
                for v in 0..4 {
                    maxdeg[v] = maxdeg[v].max(e[v]);
                }
            }
            Fast { terms: p.terms.iter().map(|(c, e)| (*c as i128, *e)).collect(), maxdeg }
        })
        .collect();
    let mut rng = Sampler::new(seed).stream(0xec0a);
    let mut first_seen: HashMap<u16, usize> = HashMap::new();
    let mut valid = 0usize;
    let mut last_new_at = 0usize;
    while valid < samples {
        let nums: [i128; 4] = std::array::from_fn(|_| rng.gen_range(1..=60) as i128);
        let dens: [i128; 4] = std::array::from_fn(|_| rng.gen_range(1..=60) as i128);
        let mut key = 0u16;
        let mut on_divisor = false;
        for (n, f) in fast.iter().enumerate() {
            // Clear denominators: multiply by dens[v]^maxdeg[v] > 0.
            let mut sum: i128 = 0;
            for (c, e) in &f.terms {
                let mut term = *c;
                for v in 0..4 {
                    for _ in 0..e[v] {
                        term *= nums[v];
                    }
                    for _ in 0..(f.maxdeg[v] - e[v]) {
                        term *= dens[v];
                    }
                }
                sum += term;
            }
            if sum == 0 {
                on_divisor = true;
                break;
            }
            if sum < 0 {
                key |= 1 << n;
            }
        }
        if on_divisor {
            continue;
        }
        valid += 1;
        if !first_seen.contains_key(&key) {
            first_seen.insert(key, valid);
            last_new_at = valid;
        }
    }
    CensusReport { distinct: first_seen.len(), last_new_at, samples: valid }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::rat_in;

    fn running_point() -> ParamAbcd<Rat> {
        ParamAbcd::new([rat_i(1), rat_i(1), rat_i(1), rat_i(2)]).unwrap()
    }

    #[test]
    fn triples_are_lex_sorted_and_indexable() {
        let mut sorted = TRIPLES;
        sorted.sort();
        assert_eq!(sorted, TRIPLES);
        for (t, &[i, j, k]) in TRIPLES.iter().enumerate() {
            assert_eq!(triple_index(i, j, k), t);
            assert_eq!(triple_index(k, i, j), t);
        }
    }

    #[test]
    fn g_values_at_the_running_point() {
        let p = running_point();
        let want: [i64; 11] = [2, 2, 3, 2, 3, 3, 7, 11, 13, 15, 16];
        for (g, w) in p.g.iter().zip(want) {
            assert_eq!(g, &rat_i(w));
        }
        // Columns five and six are the last two points of the reference
        // configuration, up to scale.
        let m = &p.chart.matrix;
        assert_eq!(m.cols[4], [rat_i(2), rat(-4, 3), rat_i(1)]);
        assert_eq!(m.cols[5], [rat_i(3), rat(-11, 8), rat_i(1)]);
        assert_eq!(p.chart.minors[triple_index(1, 2, 3)], rat_i(1));
    }

    #[test]
    fn exponent_table_is_reproduced_by_fitting() {
        let fitted = fit_g_exponents(2024, 30);
        let again = fit_g_exponents(777, 30);
        assert_eq!(fitted, again, "two sample panels disagree");
        if fitted.as_slice() != G_EXPONENT_TABLE.as_slice() {
            panic!(
                "fitted table differs from the frozen fixture; fitted values are:\n{}",
                format_g_exponents(&fitted)
            );
        }
        assert!(g_factor_check(&running_point()).is_ok());
    }

    #[test]
    fn u_values_at_the_running_point() {
        let p = running_point();
        let u = u_map(&p.chart);
        for r in trinomial_residuals(&u) {
            assert!(r.is_zero());
        }
        let zero = <Rat as Field>::zero();
        let one = <Rat as Field>::one();
        for v in &u {
            assert!(*v > zero && *v < one, "u out of (0,1): {v}");
        }
        let back = u_inverse(&u).unwrap();
        assert_eq!(back, p.point);
        let ones: [Rat; 15] = std::array::from_fn(|_| <Rat as Field>::one());
        assert_eq!(u_inverse(&ones).unwrap(), std::array::from_fn(|_| <Rat as Field>::one()));
    }

    #[test]
    fn coconic_matches_the_xyzw_closed_form() {
        let mut rng = Sampler::new(11).stream(3);
        let mut done = 0;
        while done < 5 {
            let pt: [Rat; 4] = std::array::from_fn(|_| rat_in(&mut rng, 20));
            if let Ok(p) = ParamXyzw::new(pt.clone()) {
                let [x, y, z, w] = &p.point;
                let one = <Rat as Field>::one();
                let closed = w
                    .mul(x)
                    .mul(&y.add(z).sub(&one))
                    .add(&y.mul(z).mul(&one.sub(w).sub(x)));
                assert_eq!(p.chart.q, closed);
                done += 1;
            }
        }
    }

    #[test]
    fn gauge_fix_is_the_identity_on_normal_forms() {
        let pt: [Rat; 4] = [rat(2, 3), rat(5, 7), rat(1, 2), rat(9, 4)];
        let m = xyzw_matrix(&pt);
        assert_eq!(gauge_fix(&m).unwrap(), pt);
    }

    #[test]
    fn gauge_fix_matches_the_closed_form_for_the_2_5_swap() {
        let mut rng = Sampler::new(23).stream(5);
        let mut done = 0;
        while done < 5 {
            let pt: [Rat; 4] = std::array::from_fn(|_| rat_in(&mut rng, 12));
            let [x, y, z, w] = pt.clone();
            let m = xyzw_matrix(&pt);
            let swapped = permute_columns(&m, &[0, 4, 2, 3, 1, 5]);
            let fixed = match gauge_fix(&swapped) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let one = <Rat as Field>::one();
            let xz = x.mul(&z);
            let nx = x.mul(&one.sub(&z)).div(&x.sub(&z));
            let ny = x
                .mul(&z)
                .mul(&w)
                .sub(&x.mul(&w))
                .sub(&y.mul(&z).mul(&z))
                .add(&y.mul(&z))
                .div(&xz.sub(&x.mul(&w)).sub(&z.mul(&z)).add(&z.mul(&w)));
            let nz = one.sub(&z);
            let nw = z.mul(&w).sub(&w).div(&z.sub(&w));
            match (nx, ny, nw) {
                (Some(nx), Some(ny), Some(nw)) => {
                    assert_eq!(fixed, [nx, ny, nz, nw]);
                    done += 1;
                }
                _ => continue,
            }
        }
    }

    #[test]
    fn quadratic_involution_inverts_all_four_coordinates() {
        let pt: [Rat; 4] = [rat(2, 3), rat(5, 7), rat(1, 2), rat(9, 4)];
        let m = xyzw_matrix(&pt);
        let inv = cremona_points(&m).unwrap();
        let fixed = gauge_fix(&inv).unwrap();
        let want: [Rat; 4] = std::array::from_fn(|i| pt[i].inv().unwrap());
        assert_eq!(fixed, want);
    }

    #[test]
    fn diagonal_chart_minors_are_root_products() {
        let d: [Rat; 6] = [rat_i(0), rat_i(1), rat_i(2), rat_i(3), rat_i(4), rat_i(5)];
        let p = ParamD::new(d).unwrap();
        for t in 0..20 {
            let mut prod = <Rat as Field>::one();
            for r in minor_root_indices(t) {
                prod = prod.mul(&p.roots[r]);
            }
            assert_eq!(p.chart.minors[t], prod);
        }
        // The coconic quartic is minus the product of the full sum and the
        // fifteen differences.
        let mut prod = p.roots[TOTAL_ROOT].clone();
        for r in 0..15 {
            prod = prod.mul(&p.roots[r]);
        }
        assert_eq!(p.chart.q, prod.neg());
        assert_eq!(p.chart.q, rat_i(-518_400));
    }

    #[test]
    fn diagonal_chart_satisfies_the_trinomials() {
        let d: [Rat; 6] = [rat_i(0), rat_i(1), rat_i(2), rat_i(3), rat_i(4), rat_i(5)];
        let p = ParamD::new(d).unwrap();
        let u = u_map(&p.chart);
        for r in trinomial_residuals(&u) {
            assert!(r.is_zero());
        }
        let zero = <Rat as Field>::zero();
        for v in &u {
            assert!(*v > zero, "base chamber u-signs should be positive");
        }
    }

    #[test]
    fn root_generators_are_signed_permutations() {
        let gens = weyl_root_generators();
        assert_eq!(gens.len(), 6);
        // Swapping d1, d2 negates the root d2 - d1 (index 0).
        assert_eq!(gens[0].image[0], (0, -1));
        // The reflection fixes roots away from its mirror, e.g. d5 - d4.
        let r45 = diff_root_index(3, 4);
        assert_eq!(gens[5].image[r45], (r45 as u8, 1));
        // And it negates the sum d1 + d2 + d3.
        let s123 = sum_root_index(triple_index(1, 2, 3));
        assert_eq!(gens[5].image[s123], (s123 as u8, -1));
    }

    #[test]
    fn base_chamber_has_all_roots_positive() {
        assert_eq!(base_chamber_mask(), 0);
    }

    #[test]
    fn signatures_match_direct_evaluation_on_transformed_points() {
        let d: [Rat; 6] = [rat_i(0), rat_i(1), rat_i(2), rat_i(3), rat_i(4), rat_i(5)];
        let base = base_chamber_mask();
        let usigs = u_sign_signatures();
        let ysigs = yoshida_sign_signatures();
        let gens = weyl_root_generators();
        let matrices = [transposition_matrix(0, 1), cremona_reflection_matrix()];
        let perms = [&gens[0], &gens[5]];
        for (m, perm) in matrices.iter().zip(perms) {
            let moved: [Rat; 6] = std::array::from_fn(|i| {
                let mut v = <Rat as Field>::zero();
                for k in 0..6 {
                    v = v.add(&m[i][k].mul(&d[k]));
                }
                v
            });
            let p = ParamD::new(moved).unwrap();
            let mask = apply_root_perm(perm, base);
            assert_eq!(mask, mask_from_signs(&p.roots));
            let u = u_map(&p.chart);
            let zero = <Rat as Field>::zero();
            for (i, v) in u.iter().enumerate() {
                assert_eq!(usigs[i].is_negative_on(mask), *v < zero);
            }
            let y = yoshida_coords(&p.chart);
            for (i, v) in y.iter().enumerate() {
                assert_eq!(ysigs[i].is_negative_on(mask), *v < zero);
            }
        }
    }

    #[test]
    fn first_eckardt_polynomial_at_the_running_point() {
        let pt: [Rat; 4] = [rat_i(1), rat_i(1), rat_i(1), rat_i(2)];
        assert_eq!(eval_abcd(&ECKARDT_POLYS[0], &pt), rat_i(1));
    }

    #[test]
    fn clebsch_point_annihilates_all_ten() {
        for v in clebsch_values() {
            assert!(v.is_zero());
        }
        // The point itself is a valid nondegenerate chart point.
        assert!(ParamAbcd::new(clebsch_point()).is_ok());
    }
}
