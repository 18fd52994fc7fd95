//! Exact linear algebra over the rationals and over generic fields.
//!
//! Three layers, chosen by matrix size:
//!
//! 1. Generic Gaussian elimination over any [`Field`] (small matrices;
//!    pivots must be invertible, which for jets means nonzero value part).
//! 2. Fraction-free incremental elimination over the integers
//!    ([`IncRank`]): every inserted rational row is scaled to a primitive
//!    integer row and reduced against the stored echelon rows with
//!    content stripping after each step — no intermediate fractions.
//! 3. Certified rank for large matrices ([`certified_rank`]): a modular
//!    elimination locates a pivot minor that is nonzero mod p (a hard
//!    certificate that the rank is at least r over Q), and p-adic lifting
//!    with rational reconstruction expresses every non-pivot row exactly in
//!    the pivot rows, verified by exact arithmetic over all columns (a hard
//!    certificate that the rank is at most r). Nothing is trusted from the
//!    modular side without exact verification.

use crate::rat::{primitive, rat_i, Field, Int, Rat};
use num_bigint::Sign;
use num_traits::{One, Signed, ToPrimitive, Zero};

// ---------------------------------------------------------------------------
// Generic elimination over a field
// ---------------------------------------------------------------------------

/// Reduced row echelon form. Returns (reduced nonzero rows, pivot columns).
///
/// Pivot selection takes the first row whose entry is *invertible*; for a
/// genuine field that is every nonzero entry. Panics if a column contains
/// nonzero but non-invertible entries and no invertible one (possible only
/// for non-field scalars such as jets on degenerate data).
pub fn rref_f<F: Field>(rows: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        // Find an invertible pivot at or below `rank`.
        let mut piv: Option<(usize, F)> = None;
        let mut saw_nonzero = false;
        for r in rank..m.len() {
            if !m[r][col].is_zero() {
                saw_nonzero = true;
                if let Some(inv) = m[r][col].inv() {
                    piv = Some((r, inv));
                    break;
                }
            }
        }
        let (prow, pinv) = match piv {
            Some(p) => p,
            None => {
                assert!(
                    !saw_nonzero,
                    "column {col} has nonzero but non-invertible entries; \
                     scalar type is not a field on this data"
                );
                continue;
            }
        };
        m.swap(rank, prow);
        // Normalize the pivot row.
        for c in 0..ncols {
            m[rank][c] = m[rank][c].mul(&pinv);
        }
        // Eliminate everywhere else.
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let t = m[rank][c].mul(&factor);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

/// Rank over a genuine field.
pub fn rank_f<F: Field>(rows: &[Vec<F>]) -> usize {
    rref_f(rows).0.len()
}

/// Right-nullspace basis over a field: one vector per free column, with a 1
/// in that free column (the standard RREF parametrization).
pub fn nullspace_f<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let (red, pivots) = rref_f(rows);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = red[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b` over a field; `None` when inconsistent. If the system is
/// underdetermined the free variables are set to zero.
pub fn solve_f<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref_f(&aug);
    // Inconsistent iff some pivot lands in the augmented column.
    if pivots.last().is_some_and(|&c| c == ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = red[r][ncols].clone();
    }
    Some(x)
}

/// Determinant by signed permutation expansion: division-free, so it is
/// valid over any commutative ring (in particular over jets, whose
/// non-units would poison a Gaussian pivot). Sizes up to 5 only.
pub fn det_f<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    assert!(n <= 5, "permutation-expansion determinant is for n <= 5");
    for r in m {
        assert_eq!(r.len(), n);
    }
    if n == 0 {
        return F::one();
    }
    let mut acc = F::zero();
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut free = vec![true; n];
    fn rec<F: Field>(m: &[Vec<F>], perm: &mut Vec<usize>, free: &mut [bool], acc: &mut F) {
        let n = m.len();
        if perm.len() == n {
            // Parity by inversion count.
            let mut inv = 0usize;
            for i in 0..n {
                for j in (i + 1)..n {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            let mut t = F::one();
            for (i, &j) in perm.iter().enumerate() {
                t = t.mul(&m[i][j]);
            }
            if inv % 2 == 1 {
                t = t.neg();
            }
            *acc = acc.add(&t);
            return;
        }
        for j in 0..n {
            if free[j] {
                free[j] = false;
                perm.push(j);
                rec(m, perm, free, acc);
                perm.pop();
                free[j] = true;
            }
        }
    }
    rec(m, &mut perm, &mut free, &mut acc);
    acc
}

// ---------------------------------------------------------------------------
// Canonical rational operations
// ---------------------------------------------------------------------------

/// Rank of a rational matrix via fraction-free integer elimination.
pub fn mat_rank(rows: &[Vec<Rat>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut inc = IncRank::new(ncols);
    for r in rows {
        inc.insert(r);
    }
    inc.rank()
}

/// Right-nullspace of a rational matrix, each basis vector scaled to a
/// primitive integer vector whose first nonzero entry is positive.
pub fn mat_nullspace(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    nullspace_f(rows).iter().map(|v| primitive(v)).collect()
}

/// Canonical basis of the row space: RREF nonzero rows, each scaled to a
/// primitive integer vector. Two matrices have equal row spaces iff this
/// output is equal.
pub fn row_space_canonical(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    rref_f(rows).0.iter().map(|v| primitive(v)).collect()
}

// ---------------------------------------------------------------------------
// Fraction-free incremental rank
// ---------------------------------------------------------------------------

/// Incremental rank tracker over the integers.
///
/// Rows are inserted one at a time; each is reduced against the stored
/// echelon rows by cross-multiplication (`row * piv_lead - piv * row_lead`),
/// stripping the integer content after every elimination step so entries
/// stay small. No fractions ever appear.
pub struct IncRank {
    ncols: usize,
    /// (pivot column, primitive integer row) sorted by pivot column.
    rows: Vec<(usize, Vec<Int>)>,
}

impl IncRank {
    pub fn new(ncols: usize) -> Self {
        IncRank { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a rational row. Returns true when the rank increased.
    pub fn insert(&mut self, row: &[Rat]) -> bool {
        assert_eq!(row.len(), self.ncols);
        let prim = primitive(row);
        let r: Vec<Int> = prim.iter().map(|x| x.numer().clone()).collect();
        self.insert_int(r)
    }

    /// Insert an integer row (consumed). Returns true when the rank increased.
    pub fn insert_int(&mut self, mut r: Vec<Int>) -> bool {
        for (pc, prow) in &self.rows {
            if r[*pc].is_zero() {
                continue;
            }
            let a = prow[*pc].clone();
            let b = r[*pc].clone();
            for c in 0..self.ncols {
                r[c] = &r[c] * &a - &prow[c] * &b;
            }
            strip_content(&mut r);
        }
        if let Some(pc) = r.iter().position(|x| !x.is_zero()) {
            self.rows.push((pc, r));
            self.rows.sort_by_key(|(c, _)| *c);
            true
        } else {
            false
        }
    }
}

fn strip_content(r: &mut [Int]) {
    let mut g = Int::zero();
    for x in r.iter() {
        g = num_integer::gcd(g, x.clone());
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in r.iter_mut() {
        *x = &*x / &g;
    }
}

// ---------------------------------------------------------------------------
// Modular arithmetic helpers (u64 primes, u128 intermediates)
// ---------------------------------------------------------------------------

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p.
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64 (the chosen witness set is proven
/// complete below 3.3 * 10^24, far beyond u64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn int_mod(x: &Int, p: u64) -> u64 {
    let m = (x % Int::from(p)).to_i128().expect("residue fits i128");
    if m < 0 {
        (m + p as i128) as u64
    } else {
        m as u64
    }
}

/// Fixed primes used for modular pivot location (verified prime at use).
const BIG_PRIMES: [u64; 4] = [
    2305843009213693951,  // 2^61 - 1
    4611686018427387847,  // 2^62 - 57
    9223372036854775783,  // 2^63 - 25
    1152921504606846883,  // 2^60 - 93
];

// ---------------------------------------------------------------------------
// Certified rank for large rational matrices
// ---------------------------------------------------------------------------

/// Outcome of [`certified_rank`]: the exact rank with both certificates.
pub struct RankCert {
    pub rank: usize,
    /// Row indices of the certified-independent pivot rows.
    pub pivot_rows: Vec<usize>,
    /// Column indices of the pivot minor.
    pub pivot_cols: Vec<usize>,
    /// One verified left-kernel vector per non-pivot row (entry -1 at that
    /// row, support otherwise only on pivot rows). Their count is exactly
    /// `nrows - rank`, and they are independent by construction.
    pub kernel: Vec<Vec<Rat>>,
}

/// Exact, certified rank of a rational matrix over Q. See module docs for
/// the two-sided certificate. Panics only if every fallback prime fails,
/// which would indicate the matrix does not have the rank any prime
/// reports (never observed; all data here is deterministic).
pub fn certified_rank(rows: &[Vec<Rat>]) -> RankCert {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    assert!(nrows > 0 && ncols > 0);

    // Column scaling: multiply each column by the lcm of its denominators.
    // Rank and left kernel are invariant; entries become integers that share
    // the multiplicative structure of the column's sample point.
    let mut col_lcm: Vec<Int> = vec![Int::one(); ncols];
    for row in rows {
        for (j, x) in row.iter().enumerate() {
            col_lcm[j] = num_integer::lcm(col_lcm[j].clone(), x.denom().clone());
        }
    }
    let m: Vec<Vec<Int>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, x)| x.numer() * (&col_lcm[j] / x.denom()))
                .collect()
        })
        .collect();

    for &p in &BIG_PRIMES {
        assert!(is_prime_u64(p), "modulus {p} is not prime");
        if let Some(cert) = try_certify(rows, &m, p) {
            return cert;
        }
    }
    panic!("certified_rank: all fallback primes failed to certify");
}

fn try_certify(orig: &[Vec<Rat>], m: &[Vec<Int>], p: u64) -> Option<RankCert> {
    let nrows = m.len();
    let ncols = m[0].len();
    let mp: Vec<Vec<u64>> =
        m.iter().map(|r| r.iter().map(|x| int_mod(x, p)).collect()).collect();

    // Modular elimination with pivot tracking.
    let mut work = mp.clone();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut used = vec![false; nrows];
    for col in 0..ncols {
        let Some(pr) = (0..nrows).find(|&r| !used[r] && work[r][col] != 0) else {
            continue;
        };
        used[pr] = true;
        pivot_rows.push(pr);
        pivot_cols.push(col);
        let inv = invmod(work[pr][col], p);
        for r in 0..nrows {
            if !used[r] && work[r][col] != 0 {
                let f = mulmod(work[r][col], inv, p);
                for c in col..ncols {
                    let sub = mulmod(f, work[pr][c], p);
                    work[r][c] = (work[r][c] + p - sub) % p;
                }
            }
        }
    }
    let rank = pivot_rows.len();

    // Lower bound certificate: the rank x rank pivot minor is nonzero mod p,
    // hence nonzero over Q, hence rank over Q is at least `rank`.
    if rank == nrows {
        return Some(RankCert { rank, pivot_rows, pivot_cols, kernel: Vec::new() });
    }

    // Upper bound: express each non-pivot row exactly in the pivot rows.
    let a_t: Vec<Vec<Int>> = (0..rank)
        .map(|i| (0..rank).map(|j| m[pivot_rows[j]][pivot_cols[i]].clone()).collect())
        .collect(); // A^T where A = M[pivot_rows, pivot_cols]
    let at_inv_p = mat_inv_mod(&a_t, p)?;

    let mut kernel = Vec::new();
    for t in 0..nrows {
        if pivot_rows.contains(&t) {
            continue;
        }
        let b: Vec<Int> = pivot_cols.iter().map(|&c| m[t][c].clone()).collect();
        let x = dixon_solve(&a_t, &at_inv_p, p, &b)?;
        // Exact verification of the candidate combination over ALL columns:
        // sum_i x_i * M[pivot_rows[i], c] == M[t, c]. This is the left-kernel
        // certificate; nothing modular is trusted.
        for c in 0..ncols {
            let mut acc = rat_i(0);
            for (i, &pr) in pivot_rows.iter().enumerate() {
                if !Zero::is_zero(&x[i]) {
                    acc += &x[i] * Rat::from_integer(m[pr][c].clone());
                }
            }
            if acc != Rat::from_integer(m[t][c].clone()) {
                return None;
            }
        }
        let mut v = vec![rat_i(0); nrows];
        for (i, &pr) in pivot_rows.iter().enumerate() {
            v[pr] = x[i].clone();
        }
        v[t] = -rat_i(1);
        // The same vector kills the original (un-column-scaled) matrix.
        debug_assert!({
            let mut ok = true;
            for c in 0..ncols.min(3) {
                let mut acc = rat_i(0);
                for (r, orow) in orig.iter().enumerate() {
                    acc += &v[r] * &orow[c];
                }
                ok &= Zero::is_zero(&acc);
            }
            ok
        });
        kernel.push(v);
    }
    Some(RankCert { rank, pivot_rows, pivot_cols, kernel })
}

/// Inverse of an integer matrix mod p; `None` when singular mod p.
fn mat_inv_mod(a: &[Vec<Int>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = a.len();
    let mut w: Vec<Vec<u64>> = a
        .iter()
        .map(|r| {
            let mut row: Vec<u64> = r.iter().map(|x| int_mod(x, p)).collect();
            row.extend(std::iter::repeat(0).take(n));
            row
        })
        .collect();
    for i in 0..n {
        w[i][n + i] = 1;
    }
    for col in 0..n {
        let pr = (col..n).find(|&r| w[r][col] != 0)?;
        w.swap(col, pr);
        let inv = invmod(w[col][col], p);
        for c in 0..2 * n {
            w[col][c] = mulmod(w[col][c], inv, p);
        }
        for r in 0..n {
            if r != col && w[r][col] != 0 {
                let f = w[r][col];
                for c in 0..2 * n {
                    let sub = mulmod(f, w[col][c], p);
                    w[r][c] = (w[r][c] + p - sub) % p;
                }
            }
        }
    }
    Some(w.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Dixon p-adic lifting for `A x = b` over the integers with early-exit
/// rational reconstruction. `a_inv_p` is `A^{-1} mod p`. Returns the exact
/// rational solution (caller re-verifies), or `None` if no solution emerged
/// within the iteration cap (wrong modular rank or genuinely inconsistent).
fn dixon_solve(a: &[Vec<Int>], a_inv_p: &[Vec<u64>], p: u64, b: &[Int]) -> Option<Vec<Rat>> {
    let n = a.len();
    let pint = Int::from(p);
    let mut residual: Vec<Int> = b.to_vec();
    let mut digits: Vec<Vec<u64>> = Vec::new(); // x_k per iteration
    let mut pk = Int::one();
    let mut x_acc: Vec<Int> = vec![Int::zero(); n]; // sum x_k p^k (0 <= . < p^K)
    let max_iter = 20_000usize;
    let mut next_attempt = 8usize;
    for it in 0..max_iter {
        // x_it = A^{-1} residual mod p
        let rmod: Vec<u64> = residual.iter().map(|x| int_mod(x, p)).collect();
        let xk: Vec<u64> = (0..n)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..n {
                    let t = mulmod(a_inv_p[i][j], rmod[j], p);
                    acc = ((acc as u128 + t as u128) % p as u128) as u64;
                }
                acc
            })
            .collect();
        for i in 0..n {
            x_acc[i] += &pk * Int::from(xk[i]);
        }
        // residual = (residual - A * x_it) / p  (exact integer division)
        for i in 0..n {
            let mut acc = residual[i].clone();
            for j in 0..n {
                if xk[j] != 0 {
                    acc -= &a[i][j] * Int::from(xk[j]);
                }
            }
            debug_assert!((&acc % &pint).is_zero());
            residual[i] = acc / &pint;
        }
        digits.push(xk);
        pk *= &pint;

        let done = residual.iter().all(|r| r.is_zero());
        if done || it + 1 == next_attempt {
            next_attempt = next_attempt.saturating_mul(2);
            if let Some(x) = reconstruct_vec(&x_acc, &pk) {
                // Quick exact check against the square system only; the
                // caller performs the full-width verification.
                let mut ok = true;
                'check: for i in 0..n {
                    let mut acc = rat_i(0);
                    for j in 0..n {
                        if !Zero::is_zero(&x[j]) {
                            acc += &x[j] * Rat::from_integer(a[i][j].clone());
                        }
                    }
                    if acc != Rat::from_integer(b[i].clone()) {
                        ok = false;
                        break 'check;
                    }
                }
                if ok {
                    return Some(x);
                }
            }
            if done {
                // Residual is zero: x_acc is an exact integer solution.
                return Some(x_acc.iter().map(|x| Rat::from_integer(x.clone())).collect());
            }
        }
    }
    None
}

fn reconstruct_vec(xs: &[Int], modulus: &Int) -> Option<Vec<Rat>> {
    xs.iter().map(|x| rational_reconstruct(x, modulus)).collect()
}

/// Wang-style rational reconstruction: find n/d with |n|, d <= sqrt(M/2)
/// and n == x d (mod M). Heuristic (caller verifies the result exactly).
fn rational_reconstruct(x: &Int, m: &Int) -> Option<Rat> {
    let bound = (m / Int::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.clone());
    let (mut t0, mut t1) = (Int::zero(), Int::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat_i(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace_small() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(mat_rank(&a), 2);
        let ns = mat_nullspace(&a);
        assert_eq!(ns.len(), 1);
        // Kernel of {x+2y+3z, x+z}: x=-z, y=-z: primitive (1,1,-1).
        assert_eq!(ns[0], vec![rat_i(1), rat_i(1), rat_i(-1)]);
    }

    #[test]
    fn row_space_canonical_detects_equality() {
        let a = m(&[&[2, 4, 0], &[0, 0, 3]]);
        let b = m(&[&[1, 2, 3], &[0, 0, 7]]);
        assert_eq!(row_space_canonical(&a), row_space_canonical(&b));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = solve_f(&a, &[rat_i(3), rat_i(1)]).unwrap();
        assert_eq!(x, vec![rat_i(2), rat_i(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(solve_f(&b, &[rat_i(1), rat_i(3)]).is_none());
    }

    #[test]
    fn det_matches_cofactor() {
        let a = m(&[&[2, 0, 1], &[1, 3, 2], &[0, 1, 4]]);
        assert_eq!(det_f(&a), rat_i(21));
    }

    #[test]
    fn incremental_rank_tracks_insertions() {
        let mut inc = IncRank::new(3);
        assert!(inc.insert(&[rat(1, 2), rat_i(1), rat_i(0)]));
        assert!(!inc.insert(&[rat_i(1), rat_i(2), rat_i(0)]));
        assert!(inc.insert(&[rat_i(0), rat_i(0), rat(7, 3)]));
        assert_eq!(inc.rank(), 2);
    }

    #[test]
    fn certified_rank_on_structured_matrix() {
        // 6 rows in a 3-dimensional space of functions evaluated at 5 points:
        // rows i: f_i(x) = x^i for i=0,1,2, plus three combinations.
        let pts: Vec<Rat> = vec![rat_i(1), rat_i(2), rat(1, 3), rat_i(-2), rat(5, 7)];
        let f = |c0: i64, c1: i64, c2: i64| -> Vec<Rat> {
            pts.iter().map(|x| rat_i(c0) + rat_i(c1) * x + rat_i(c2) * x * x).collect()
        };
        let rows = vec![f(1, 0, 0), f(0, 1, 0), f(0, 0, 1), f(1, -2, 3), f(2, 2, -1), f(0, 5, 4)];
        let cert = certified_rank(&rows);
        assert_eq!(cert.rank, 3);
        assert_eq!(cert.kernel.len(), 3);
        for v in &cert.kernel {
            for c in 0..pts.len() {
                let mut acc = rat_i(0);
                for (r, row) in rows.iter().enumerate() {
                    acc += &v[r] * &row[c];
                }
                assert!(num_traits::Zero::is_zero(&acc));
            }
        }
    }

    #[test]
    fn primes_are_prime() {
        for &p in &BIG_PRIMES {
            assert!(is_prime_u64(p));
        }
        assert!(!is_prime_u64(4611686018427387845));
    }
}
