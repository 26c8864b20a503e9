//! Dense complex linear algebra: commutators, Schur forms, null spaces and
//! the joint generalized eigenspace decomposition of commuting families.

use nalgebra::{DMatrix, SVD};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

/// Dense complex matrix, row/column access through nalgebra.
pub type CMatrix = DMatrix<Complex64>;

/// Default clustering tolerance, relative to operator norms.
pub const DEFAULT_TOL: f64 = 1e-8;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[inline]
pub fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `exp(2 pi i a / n)`.
pub fn root_of_unity(n: u64, a: i64) -> Complex64 {
    let a = a.rem_euclid(n as i64);
    match (4 * a).checked_rem(n as i64) {
        // quarter turns are returned exactly
        Some(0) => match 4 * a / n as i64 {
            0 => ONE,
            1 => cx(0.0, 1.0),
            2 => cx(-1.0, 0.0),
            _ => cx(0.0, -1.0),
        },
        _ => Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * a as f64 / n as f64),
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian sample.
pub fn random_complex<R: rand::Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    cx(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn random_matrix<R: rand::Rng>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    // column-major fill keeps the draw order stable across nalgebra versions
    let mut m = CMatrix::zeros(rows, cols);
    for j in 0..cols {
        for i in 0..rows {
            m[(i, j)] = random_complex(rng);
        }
    }
    m
}

pub fn is_finite(m: &CMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

fn ensure_square(m: &CMatrix, what: &str) -> Result<usize> {
    if m.nrows() == 0 || m.nrows() != m.ncols() {
        return Err(Error::Dimension(format!(
            "{what} must be square and non-empty, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(m.nrows())
}

/// Frobenius norm of `ab - ba`.
pub fn commutator_norm(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    let n = ensure_square(a, "left operand")?;
    let m = ensure_square(b, "right operand")?;
    if n != m {
        return Err(Error::Dimension(format!("commutator of {n}x{n} and {m}x{m}")));
    }
    Ok((a * b - b * a).norm())
}

/// Complex Schur decomposition `m = q t q^*` with `t` upper triangular.
///
/// The mean eigenvalue is shifted out first: the underlying QR iteration can
/// stall on nearly scalar matrices. Iterations are capped, and a stalled run
/// is retried under a fixed unitary similarity.
pub fn schur(m: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    let n = m.nrows();
    if n == 1 {
        return Ok((CMatrix::identity(1, 1), m.clone()));
    }
    let mu = m.trace() / n as f64;
    let shifted = m - CMatrix::identity(n, n) * mu;
    let mut rng = rng_from_seed(0x5eed);
    let mut basis = CMatrix::identity(n, n);
    for _ in 0..4 {
        let a = basis.adjoint() * &shifted * &basis;
        if let Some(s) = nalgebra::linalg::Schur::try_new(a, f64::EPSILON, 500 * n) {
            let (q, mut t) = s.unpack();
            for j in 0..n {
                for i in (j + 1)..n {
                    t[(i, j)] = ZERO;
                }
                t[(j, j)] += mu;
            }
            return Ok((&basis * q, t));
        }
        basis = orthonormalize(&random_matrix(n, n, &mut rng));
    }
    Err(Error::Numerical(format!("Schur iteration did not converge on a {n}x{n} matrix")))
}

/// Swaps the adjacent diagonal entries `p` and `p + 1` of a triangular Schur
/// factor with a Givens rotation, updating `q` so that `q t q^*` is unchanged.
fn swap_adjacent(q: &mut CMatrix, t: &mut CMatrix, p: usize) {
    let n = t.nrows();
    let a = t[(p, p)];
    let b = t[(p, p + 1)];
    let c = t[(p + 1, p + 1)];
    let x2 = c - a;
    let nrm = (b.norm_sqr() + x2.norm_sqr()).sqrt();
    if nrm == 0.0 {
        return;
    }
    let g1 = b / nrm;
    let g2 = x2 / nrm;
    for j in 0..n {
        let tp = t[(p, j)];
        let tq = t[(p + 1, j)];
        t[(p, j)] = g1.conj() * tp + g2.conj() * tq;
        t[(p + 1, j)] = -g2 * tp + g1 * tq;
    }
    for i in 0..n {
        let tp = t[(i, p)];
        let tq = t[(i, p + 1)];
        t[(i, p)] = tp * g1 + tq * g2;
        t[(i, p + 1)] = -tp * g2.conj() + tq * g1.conj();
    }
    for i in 0..q.nrows() {
        let qp = q[(i, p)];
        let qq = q[(i, p + 1)];
        q[(i, p)] = qp * g1 + qq * g2;
        q[(i, p + 1)] = -qp * g2.conj() + qq * g1.conj();
    }
    t[(p + 1, p)] = ZERO;
    t[(p, p)] = c;
    t[(p + 1, p + 1)] = a;
}

/// Orthonormal basis of the invariant subspace attached to the selected
/// diagonal entries of a Schur pair. Selected entries must be separated from
/// the unselected ones.
pub fn leading_invariant_subspace(q: &CMatrix, t: &CMatrix, selected: &[bool]) -> CMatrix {
    let mut q = q.clone();
    let mut t = t.clone();
    let mut target = 0;
    for (k, &keep) in selected.iter().enumerate() {
        if keep {
            for p in (target..k).rev() {
                swap_adjacent(&mut q, &mut t, p);
            }
            target += 1;
        }
    }
    q.columns(0, target).into_owned()
}

/// Single-linkage clustering of complex values. Groups are listed by their
/// smallest member index.
pub fn cluster_values(values: &[Complex64], threshold: f64) -> Vec<Vec<usize>> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (values[i] - values[j]).norm() <= threshold {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    groups
}

pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let mut s: Vec<f64> = SVD::new(m.clone(), false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Ratio of extreme singular values; infinite for singular matrices.
pub fn condition_number(m: &CMatrix) -> f64 {
    let s = singular_values(m);
    match (s.first(), s.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        _ => f64::INFINITY,
    }
}

/// Numerical rank with singular values above `tol * max(1, sigma_max)`.
pub fn rank(m: &CMatrix, tol: f64) -> usize {
    let s = singular_values(m);
    let cut = tol * s.first().copied().unwrap_or(0.0).max(1.0);
    s.iter().filter(|&&x| x > cut).count()
}

/// Orthonormal basis (as columns) of the kernel of `m`.
pub fn null_space(m: &CMatrix, tol: f64) -> CMatrix {
    let (r, c) = m.shape();
    let padded = if r < c {
        let mut p = CMatrix::zeros(c, c);
        p.view_mut((0, 0), (r, c)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = SVD::new(padded, false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &b| a.max(b));
    let cut = tol * smax.max(1.0);
    let mut cols = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s <= cut {
            cols.push(v_t.row(i).adjoint());
        }
    }
    if cols.is_empty() {
        CMatrix::zeros(c, 0)
    } else {
        CMatrix::from_columns(&cols)
    }
}

/// Orthonormal basis of the column space of a full-column-rank matrix.
pub fn orthonormalize(m: &CMatrix) -> CMatrix {
    let k = m.ncols();
    let q = nalgebra::linalg::QR::new(m.clone()).q();
    q.columns(0, k).into_owned()
}

/// One joint generalized eigenspace of a commuting family.
#[derive(Clone, Debug)]
pub struct SpectralCluster {
    /// One eigenvalue per input operator.
    pub eigenvalues: Vec<Complex64>,
    pub multiplicity: usize,
    /// Orthonormal columns spanning the generalized eigenspace.
    pub basis: CMatrix,
    /// `max_i |((A_i - lambda_i) / scale)^m|` on the cluster.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct JointSpectrum {
    pub clusters: Vec<SpectralCluster>,
    /// Two clusters closer than `10 * tol` (relative).
    pub unstable: bool,
    /// Smallest relative distance between eigenvalue tuples of distinct clusters.
    pub min_separation: f64,
    /// Condition number of the stacked cluster bases.
    pub basis_condition: f64,
    pub commutator_residual: f64,
    pub scale: f64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SpectralOptions {
    pub tol: f64,
    pub seed: u64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions { tol: DEFAULT_TOL, seed: 0 }
    }
}

fn restrict(op: &CMatrix, basis: &CMatrix) -> CMatrix {
    basis.adjoint() * op * basis
}

/// Invariant subspaces of `a`, one per eigenvalue cluster.
fn eigen_subspaces(a: &CMatrix, tol: f64, copies: usize) -> Result<Vec<CMatrix>> {
    let (q, t) = schur(a)?;
    let diag: Vec<Complex64> = (0..t.nrows()).map(|i| t[(i, i)]).collect();
    let scale = diag.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let atoms: Vec<(Vec<Complex64>, usize)> = diag.iter().map(|&z| (vec![z], 1)).collect();
    let groups = jordan_groups(&atoms, |k| unresolved_radius(tol, k.div_ceil(copies).max(1)) * scale);
    if groups.len() == 1 {
        return Ok(vec![CMatrix::identity(a.nrows(), a.nrows())]);
    }
    Ok(groups
        .iter()
        .map(|g| {
            let mut mask = vec![false; diag.len()];
            for &i in g {
                mask[i] = true;
            }
            leading_invariant_subspace(&q, &t, &mask)
        })
        .collect())
}

fn split<R: rand::Rng>(ops: &[CMatrix], tol: f64, copies: usize, rng: &mut R) -> Result<Vec<CMatrix>> {
    let m = ops[0].nrows();
    if m == 1 {
        return Ok(vec![CMatrix::identity(1, 1)]);
    }
    let mut combo = CMatrix::zeros(m, m);
    for op in ops {
        combo += op * random_complex(rng);
    }
    let mut parts = eigen_subspaces(&combo, tol, copies)?;
    if parts.len() == 1 {
        // the random combination did not separate anything; refine by the
        // individual operators before accepting a single block
        for op in ops {
            let p = eigen_subspaces(op, tol, copies)?;
            if p.len() > 1 {
                parts = p;
                break;
            }
        }
        if parts.len() == 1 {
            return Ok(parts);
        }
    }
    let mut out = Vec::new();
    for u in parts {
        let restricted: Vec<CMatrix> = ops.iter().map(|op| restrict(op, &u)).collect();
        for s in split(&restricted, tol, copies, rng)? {
            out.push(orthonormalize(&(&u * s)));
        }
    }
    Ok(out)
}

fn tuple_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn cmp_tuple(a: &[Complex64], b: &[Complex64], tol: f64) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        for (p, q) in [(x.re, y.re), (x.im, y.im)] {
            if (p - q).abs() > tol {
                return p.total_cmp(&q);
            }
        }
    }
    std::cmp::Ordering::Equal
}

/// Decomposes the ambient space into joint generalized eigenspaces of a
/// commuting family of square matrices.
///
/// Eigenvalues are clustered on the Schur form of a seeded random linear
/// combination, then each block is refined by the individual operators.
/// `tol` is relative to `max(1, max |A_i|_F)`.
pub fn joint_generalized_eigenspaces(ops: &[CMatrix], opts: SpectralOptions) -> Result<JointSpectrum> {
    joint_generalized_eigenspaces_in_copies(ops, opts, 1)
}

/// As [`joint_generalized_eigenspaces`] for operators known to act as
/// `copies` identical blocks, so a cluster of multiplicity `m` holds Jordan
/// blocks of size at most `m / copies`. Only the clustering radius uses this.
pub fn joint_generalized_eigenspaces_in_copies(
    ops: &[CMatrix],
    opts: SpectralOptions,
    copies: usize,
) -> Result<JointSpectrum> {
    let copies = copies.max(1);
    if ops.is_empty() {
        return Err(Error::Dimension("empty operator list".into()));
    }
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::Input(format!("tolerance must be positive, got {}", opts.tol)));
    }
    let n = ensure_square(&ops[0], "operator 0")?;
    for (i, op) in ops.iter().enumerate() {
        if ensure_square(op, &format!("operator {i}"))? != n {
            return Err(Error::Dimension(format!("operator {i} is not {n}x{n}")));
        }
        if !is_finite(op) {
            return Err(Error::Numerical(format!("operator {i} has non-finite entries")));
        }
    }
    let max_norm = ops.iter().map(|op| op.norm()).fold(0.0, f64::max);
    let scale = max_norm.max(1.0);
    let mut comm = 0.0f64;
    for i in 0..ops.len() {
        for j in (i + 1)..ops.len() {
            comm = comm.max(commutator_norm(&ops[i], &ops[j])?);
        }
    }
    let bound = opts.tol * (1.0 + max_norm);
    if comm > bound {
        return Err(Error::Commutativity { residual: comm, bound });
    }

    let scaled: Vec<CMatrix> = ops.iter().map(|op| op / cx(scale, 0.0)).collect();
    let mut rng = rng_from_seed(opts.seed);
    let bases = split(&scaled, opts.tol, copies, &mut rng)?;

    let atoms: Vec<(Vec<Complex64>, usize)> = bases
        .iter()
        .map(|basis| {
            let m = basis.ncols();
            (scaled.iter().map(|op| restrict(op, basis).trace() / m as f64 * scale).collect(), m)
        })
        .collect();
    let reach = |k: usize| unresolved_radius(opts.tol, k.div_ceil(copies).max(1)) * scale;
    let mut clusters: Vec<SpectralCluster> = jordan_groups(&atoms, reach)
        .into_iter()
        .map(|group| {
            let cols: Vec<_> = group.iter().flat_map(|&i| bases[i].column_iter().map(|v| v.into_owned())).collect();
            let basis = if group.len() == 1 { bases[group[0]].clone() } else { orthonormalize(&CMatrix::from_columns(&cols)) };
            let m = basis.ncols();
            let eigenvalues = scaled.iter().map(|op| restrict(op, &basis).trace() / m as f64 * scale).collect();
            SpectralCluster { eigenvalues, multiplicity: m, basis, residual: 0.0 }
        })
        .collect();
    for c in clusters.iter_mut() {
        let m = c.multiplicity;
        let mut res = 0.0f64;
        for (op, lam) in scaled.iter().zip(&c.eigenvalues) {
            let shifted = restrict(op, &c.basis) - CMatrix::identity(m, m) * (lam / scale);
            let mut pow = shifted.clone();
            for _ in 1..m {
                pow = &pow * &shifted;
            }
            res = res.max(pow.norm());
        }
        c.residual = res;
        c.eigenvalues = c.eigenvalues.iter().map(|z| clean(*z, scale * opts.tol * 1e-3)).collect();
    }
    clusters.sort_by(|a, b| cmp_tuple(&a.eigenvalues, &b.eigenvalues, opts.tol * scale));

    let mut min_sep = f64::INFINITY;
    let mut unstable = false;
    for i in 0..clusters.len() {
        for j in (i + 1)..clusters.len() {
            let dist = tuple_distance(&clusters[i].eigenvalues, &clusters[j].eigenvalues);
            min_sep = min_sep.min(dist / scale);
            unstable |= dist < 10.0 * reach(clusters[i].multiplicity + clusters[j].multiplicity);
        }
    }
    let stacked = CMatrix::from_columns(
        &clusters.iter().flat_map(|c| c.basis.column_iter().map(|v| v.into_owned())).collect::<Vec<_>>(),
    );
    Ok(JointSpectrum {
        unstable,
        min_separation: min_sep,
        basis_condition: condition_number(&stacked),
        commutator_residual: comm,
        scale,
        seed: opts.seed,
        clusters,
    })
}

/// Longest Jordan block the clustering will recognize.
pub const MAX_JORDAN: usize = 8;

/// Radius within which `k` eigenvalues are indistinguishable from one
/// eigenvalue with a Jordan block of size `k`: a relative perturbation `tol`
/// moves such an eigenvalue by about `tol^(1/k)`.
pub fn unresolved_radius(tol: f64, k: usize) -> f64 {
    tol.powf(1.0 / k.clamp(1, MAX_JORDAN) as f64)
}

/// `(length, from, to)` of a spanning-tree edge.
type Edge = (f64, usize, usize);

/// Groups `(point, multiplicity)` atoms top-down along a minimum spanning
/// tree: a component whose diameter is at most `2 * reach(total
/// multiplicity)` is one group, otherwise it is cut at its longest edge.
fn jordan_groups(atoms: &[(Vec<Complex64>, usize)], reach: impl Fn(usize) -> f64) -> Vec<Vec<usize>> {
    let n = atoms.len();
    let dist = |i: usize, j: usize| tuple_distance(&atoms[i].0, &atoms[j].0);
    // Prim's algorithm on the complete graph
    let mut tree: Vec<(f64, usize, usize)> = Vec::with_capacity(n.saturating_sub(1));
    let mut best: Vec<(f64, usize)> = (0..n).map(|j| (if j == 0 { 0.0 } else { dist(0, j) }, 0)).collect();
    let mut done = vec![false; n];
    if n > 0 {
        done[0] = true;
    }
    for _ in 1..n {
        let j = (0..n).filter(|&j| !done[j]).min_by(|&a, &b| best[a].0.total_cmp(&best[b].0)).unwrap();
        done[j] = true;
        tree.push((best[j].0, best[j].1, j));
        for k in 0..n {
            if !done[k] && dist(j, k) < best[k].0 {
                best[k] = (dist(j, k), j);
            }
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<Edge>)> = vec![((0..n).collect(), tree)];
    while let Some((nodes, edges)) = stack.pop() {
        let size: usize = nodes.iter().map(|&i| atoms[i].1).sum();
        let mut diam = 0.0f64;
        for (a, &i) in nodes.iter().enumerate() {
            for &j in &nodes[a + 1..] {
                diam = diam.max(dist(i, j));
            }
        }
        if nodes.len() == 1 || diam <= 2.0 * reach(size) {
            out.push(nodes);
            continue;
        }
        let cut = (0..edges.len()).max_by(|&a, &b| edges[a].0.total_cmp(&edges[b].0)).unwrap();
        let rest: Vec<(f64, usize, usize)> = edges.iter().enumerate().filter(|&(i, _)| i != cut).map(|(_, &e)| e).collect();
        // side of the cut containing the first endpoint
        let mut side = vec![edges[cut].1];
        let mut grew = true;
        while grew {
            grew = false;
            for &(_, a, b) in &rest {
                let (ia, ib) = (side.contains(&a), side.contains(&b));
                if ia != ib {
                    side.push(if ia { b } else { a });
                    grew = true;
                }
            }
        }
        let (left, right): (Vec<usize>, Vec<usize>) = nodes.iter().partition(|i| side.contains(i));
        let (le, re): (Vec<_>, Vec<_>) = rest.into_iter().partition(|e| side.contains(&e.1));
        stack.push((right, re));
        stack.push((left, le));
    }
    for g in out.iter_mut() {
        g.sort_unstable();
    }
    out.sort();
    out
}

/// Flushes real or imaginary parts below `eps` to zero.
pub fn clean(z: Complex64, eps: f64) -> Complex64 {
    let f = |x: f64| if x.abs() < eps { 0.0 } else { x };
    cx(f(z.re), f(z.im))
}
