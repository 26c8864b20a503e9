//! Conjugacy classes, character tables, central idempotents, the action of a
//! normalizing matrix on characters, extended character norms and
//! b-invariants.
//!
//! Tables are computed from the simultaneous eigenvectors of the class-sum
//! multiplication matrices. Symmetric groups take their rows from the
//! Murnaghan-Nakayama rule instead, labelled by partitions.

use std::f64::consts::PI;

use nalgebra::SymmetricEigen;
use num_complex::Complex64;
use serde::Serialize;

use crate::combinatorics_sn::{MnEvaluator, Partition, Permutation};
use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::numerics::{
    cluster_values, cx, joint_generalized_eigenspaces, orthonormalize, random_complex, random_matrix, rng_from_seed,
    singular_values, CMatrix, SpectralOptions, ONE, ZERO,
};
use crate::reflection_groups::{max_entry_diff, Builtin, MatrixGroup, ParamC, ReflectionGroup};
use crate::report::{cx_vec, Cx};

/// Largest power tried when looking for the order of a matrix.
pub const ORDER_CAP: usize = 10_000;

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    /// Smallest element index in each class; class 0 is the identity.
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }
}

pub fn conjugacy_classes(g: &MatrixGroup) -> ConjugacyClasses {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        class_of[start] = id;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for &s in g.generator_indices() {
                let y = g.conjugate(x, s);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    ConjugacyClasses {
        representatives: members.iter().map(|m| m[0]).collect(),
        sizes: members.iter().map(Vec::len).collect(),
        class_of,
        members,
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: ConjugacyClasses,
    /// `rows[chi][class]`.
    pub rows: Vec<Vec<Complex64>>,
    pub degrees: Vec<usize>,
    pub labels: Vec<String>,
    /// Row labels as partitions, for symmetric groups.
    pub partitions: Option<Vec<Partition>>,
    pub order: usize,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `chi(w)` for an element index.
    pub fn value(&self, row: usize, element: usize) -> Complex64 {
        self.rows[row][self.classes.class_of[element]]
    }

    pub fn row_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn row_by_partition(&self, p: &Partition) -> Option<usize> {
        self.partitions.as_ref()?.iter().position(|q| q == p)
    }

    /// Row of the trivial character.
    pub fn trivial_row(&self) -> usize {
        self.rows
            .iter()
            .position(|r| r.iter().all(|z| (z - ONE).norm() < 1e-6))
            .expect("trivial character present")
    }

    /// `(1/|W|) sum_w f(w) conj(chi(w))` for a class function `f`.
    pub fn inner_product(&self, row: usize, f: &[Complex64]) -> Complex64 {
        let s: Complex64 = (0..self.classes.len())
            .map(|l| f[l] * self.rows[row][l].conj() * self.classes.sizes[l] as f64)
            .sum();
        s / self.order as f64
    }

    /// Largest deviations from row and column orthogonality.
    pub fn orthogonality_residuals(&self) -> (f64, f64) {
        let r = self.len();
        let mut row_res = 0.0f64;
        for a in 0..r {
            for b in 0..r {
                let ip = self.inner_product(a, &self.rows[b]);
                let want = if a == b { ONE } else { ZERO };
                row_res = row_res.max((ip - want).norm());
            }
        }
        let mut col_res = 0.0f64;
        let k = self.classes.len();
        for x in 0..k {
            for y in 0..k {
                let s: Complex64 = self.rows.iter().map(|row| row[x] * row[y].conj()).sum();
                let want = if x == y { (self.order / self.classes.sizes[x]) as f64 } else { 0.0 };
                col_res = col_res.max((s - cx(want, 0.0)).norm() / (1.0 + want));
            }
        }
        (row_res, col_res)
    }
}

/// Table from class-sum eigenvectors, valid for any finite group.
pub fn burnside_table(g: &MatrixGroup, opts: SpectralOptions) -> Result<CharacterTable> {
    let classes = conjugacy_classes(g);
    let r = classes.len();
    let n = g.order();
    // ops[j][(k, l)] = #{x in C_j : x^-1 z_l in C_k}
    let mut ops = vec![CMatrix::zeros(r, r); r];
    for (l, &z) in classes.representatives.iter().enumerate() {
        for x in 0..n {
            let j = classes.class_of[x];
            let k = classes.class_of[g.mul(g.inv(x), z)];
            ops[j][(k, l)] += ONE;
        }
    }
    let spectrum = joint_generalized_eigenspaces(&ops, opts)?;
    if spectrum.clusters.len() != r {
        return Err(Error::Numerical(format!(
            "class-sum eigenvectors split into {} clusters for {r} classes (min separation {:.3e})",
            spectrum.clusters.len(),
            spectrum.min_separation
        )));
    }
    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for c in &spectrum.clusters {
        let u = c.basis.column(0);
        if u[0].norm() < 1e-12 {
            return Err(Error::Numerical("class-sum eigenvector vanishes at the identity".into()));
        }
        let omega: Vec<Complex64> = u.iter().map(|x| x / u[0]).collect();
        let denom: f64 = omega.iter().zip(&classes.sizes).map(|(w, &s)| w.norm_sqr() / s as f64).sum();
        let deg_sq = n as f64 / denom;
        let deg = deg_sq.sqrt().round();
        if deg < 1.0 || (deg * deg - deg_sq).abs() > 1e-6 * deg_sq {
            return Err(Error::Numerical(format!("character degree squared {deg_sq} is not a square integer")));
        }
        rows.push(omega.iter().zip(&classes.sizes).map(|(w, &s)| w * deg / s as f64).collect::<Vec<_>>());
        degrees.push(deg as usize);
    }
    let mut table = CharacterTable { classes, rows, degrees, labels: Vec::new(), partitions: None, order: n };
    sort_rows(&mut table);
    table.labels = (0..r).map(|i| format!("chi{i}")).collect();
    check_orthogonality(&table)?;
    Ok(table)
}

fn row_key(row: &[Complex64]) -> Vec<(i64, i64)> {
    row.iter().map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64)).collect()
}

/// Trivial first, then by degree and rounded values.
fn sort_rows(t: &mut CharacterTable) {
    let mut idx: Vec<usize> = (0..t.rows.len()).collect();
    let trivial = t.trivial_row();
    idx.sort_by(|&a, &b| {
        (a != trivial, t.degrees[a], row_key(&t.rows[a])).cmp(&(b != trivial, t.degrees[b], row_key(&t.rows[b])))
    });
    t.rows = idx.iter().map(|&i| t.rows[i].clone()).collect();
    t.degrees = idx.iter().map(|&i| t.degrees[i]).collect();
}

fn check_orthogonality(t: &CharacterTable) -> Result<()> {
    let (a, b) = t.orthogonality_residuals();
    let res = a.max(b);
    if res > 1e-6 {
        return Err(Error::Consistency { what: "character orthogonality".into(), residual: res });
    }
    Ok(())
}

/// Reads a permutation matrix as a permutation of coordinates.
pub fn permutation_of_matrix(m: &CMatrix) -> Option<Permutation> {
    let n = m.nrows();
    let mut img = vec![0; n];
    for j in 0..n {
        let rows: Vec<usize> = (0..n).filter(|&i| m[(i, j)].norm() > 0.5).collect();
        if rows.len() != 1 || (m[(rows[0], j)] - ONE).norm() > 1e-9 {
            return None;
        }
        img[j] = rows[0];
    }
    Permutation::from_images(img).ok()
}

fn symmetric_table(g: &MatrixGroup, n: usize) -> Result<CharacterTable> {
    let classes = conjugacy_classes(g);
    let types: Vec<Partition> = classes
        .representatives
        .iter()
        .map(|&r| {
            permutation_of_matrix(g.element(r))
                .map(|p| p.cycle_type())
                .ok_or_else(|| Error::Input("symmetric group element is not a permutation matrix".into()))
        })
        .collect::<Result<_>>()?;
    let parts = Partition::all(n);
    let mut rows = vec![vec![ZERO; classes.len()]; parts.len()];
    for (l, ct) in types.iter().enumerate() {
        let mut mn = MnEvaluator::new(ct);
        for (i, lambda) in parts.iter().enumerate() {
            rows[i][l] = cx(mn.value(lambda)? as f64, 0.0);
        }
    }
    let degrees = parts.iter().map(|p| p.dim() as usize).collect();
    let table = CharacterTable {
        classes,
        rows,
        degrees,
        labels: parts.iter().map(|p| p.to_string()).collect(),
        partitions: Some(parts),
        order: g.order(),
    };
    check_orthogonality(&table)?;
    Ok(table)
}

fn cyclic_labels(g: &MatrixGroup, e: usize, t: &mut CharacterTable) {
    let s = g.generator_indices()[0];
    let class = t.classes.class_of[s];
    let exps: Vec<usize> = t
        .rows
        .iter()
        .map(|row| {
            let a = row[class].arg() / (2.0 * PI / e as f64);
            (a.round() as i64).rem_euclid(e as i64) as usize
        })
        .collect();
    let mut idx: Vec<usize> = (0..t.rows.len()).collect();
    idx.sort_by_key(|&i| exps[i]);
    t.rows = idx.iter().map(|&i| t.rows[i].clone()).collect();
    t.degrees = idx.iter().map(|&i| t.degrees[i]).collect();
    t.labels = idx.iter().map(|&i| format!("chi{}", exps[i])).collect();
}

pub fn character_table(g: &ReflectionGroup) -> Result<CharacterTable> {
    character_table_with(g, SpectralOptions::default())
}

pub fn character_table_with(g: &ReflectionGroup, opts: SpectralOptions) -> Result<CharacterTable> {
    match g.builtin() {
        Some(Builtin::Symmetric { n }) => symmetric_table(g.group(), n),
        Some(Builtin::Cyclic { e }) => {
            let mut t = burnside_table(g.group(), opts)?;
            cyclic_labels(g.group(), e, &mut t);
            Ok(t)
        }
        _ => burnside_table(g.group(), opts),
    }
}

/// `e_chi = (chi(1)/|W|) sum_w chi(w^-1) w`.
pub fn central_idempotent(g: &MatrixGroup, table: &CharacterTable, row: usize) -> GroupAlgebraElement {
    let n = g.order();
    let f = table.degrees[row] as f64 / n as f64;
    GroupAlgebraElement { coeffs: (0..n).map(|w| table.value(row, g.inv(w)) * f).collect() }
}

/// `tau = scalar * element` with the element in the group.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InnerPart {
    pub element: usize,
    pub scalar: Complex64,
}

/// Finds `w` and a scalar with `t = scalar * w`.
pub fn inner_part(g: &MatrixGroup, t: &CMatrix) -> Option<InnerPart> {
    let dim = g.dim();
    (0..g.order()).find_map(|w| {
        let p = t * g.element(g.inv(w));
        let scalar = p[(0, 0)];
        (scalar.norm() > 1e-9 && max_entry_diff(&p, &(CMatrix::identity(dim, dim) * scalar)) < 1e-9)
            .then_some(InnerPart { element: w, scalar })
    })
}

/// Smallest `m >= 1` with `t^m = I`.
pub fn matrix_order(t: &CMatrix) -> Result<usize> {
    let n = t.nrows();
    let id = CMatrix::identity(n, n);
    let mut p = t.clone();
    for m in 1..=ORDER_CAP {
        if max_entry_diff(&p, &id) < 1e-9 {
            return Ok(m);
        }
        p = &p * t;
        if p.iter().any(|z| z.norm() > 1e6) {
            break;
        }
    }
    Err(Error::Order(ORDER_CAP))
}

/// How a normalizing matrix acts on the group and on its characters.
#[derive(Clone, Debug)]
pub struct TauData {
    pub tau: CMatrix,
    pub order: usize,
    /// `w -> tau w tau^-1` on element indices.
    pub element_perm: Vec<usize>,
    pub class_perm: Vec<usize>,
    /// `chi -> chi o conj(tau)^-1` on rows.
    pub irr_permutation: Vec<usize>,
    pub stable_rows: Vec<usize>,
    pub inner: Option<InnerPart>,
}

impl TauData {
    pub fn is_stable(&self, row: usize) -> bool {
        self.irr_permutation[row] == row
    }

    /// Elements commuting with `tau`.
    pub fn fixed_elements(&self) -> Vec<usize> {
        (0..self.element_perm.len()).filter(|&w| self.element_perm[w] == w).collect()
    }
}

/// Fails with a stability error unless `c(tau s tau^-1) = c(s)` on every reflection.
pub fn check_parameter_stable(g: &ReflectionGroup, element_perm: &[usize], c: &ParamC) -> Result<()> {
    let scale = 1.0 + c.max_abs();
    for (i, r) in g.reflections().iter().enumerate() {
        let image = g
            .arrangement()
            .reflection_of_element(element_perm[r.element])
            .ok_or_else(|| Error::Normalizer("conjugate of a reflection is not a reflection".into()))?;
        let a = c.of_reflection(g, i);
        let b = c.of_class(image.class);
        if (a - b).norm() > 1e-12 * scale {
            return Err(Error::ParameterStability(format!(
                "c differs on reflection class {} and its image class {}",
                r.class, image.class
            )));
        }
    }
    Ok(())
}

pub fn tau_data(g: &ReflectionGroup, table: &CharacterTable, tau: &CMatrix, c: Option<&ParamC>) -> Result<TauData> {
    let element_perm = g.conjugation_permutation(tau)?;
    let order = matrix_order(tau)?;
    if let Some(c) = c {
        check_parameter_stable(g, &element_perm, c)?;
    }
    let cls = &table.classes;
    let class_perm: Vec<usize> = cls.representatives.iter().map(|&r| cls.class_of[element_perm[r]]).collect();
    let mut inv_class = vec![0; class_perm.len()];
    for (l, &m) in class_perm.iter().enumerate() {
        inv_class[m] = l;
    }
    let mut irr_permutation = Vec::with_capacity(table.len());
    for row in &table.rows {
        let image: Vec<Complex64> = (0..cls.len()).map(|l| row[inv_class[l]]).collect();
        let m = table
            .rows
            .iter()
            .position(|r| r.iter().zip(&image).all(|(a, b)| (a - b).norm() < 1e-6))
            .ok_or_else(|| Error::Numerical("twisted character matches no row".into()))?;
        irr_permutation.push(m);
    }
    let stable_rows = (0..table.len()).filter(|&i| irr_permutation[i] == i).collect();
    Ok(TauData {
        tau: tau.clone(),
        order,
        element_perm,
        class_perm,
        irr_permutation,
        stable_rows,
        inner: inner_part(g.group(), tau),
    })
}

/// `(L(e_chi) X)` without forming the `|W| x |W|` matrix.
fn project(g: &MatrixGroup, e: &GroupAlgebraElement, x: &CMatrix) -> CMatrix {
    let n = g.order();
    let mut out = CMatrix::zeros(n, x.ncols());
    for (a, &ca) in e.coeffs.iter().enumerate() {
        if ca.norm() < 1e-15 {
            continue;
        }
        for u in 0..n {
            let target = g.mul(a, u);
            for j in 0..x.ncols() {
                out[(target, j)] += ca * x[(u, j)];
            }
        }
    }
    out
}

/// Orthonormal basis of `CW e_chi`, of dimension `chi(1)^2`.
pub fn isotypic_basis<R: rand::Rng>(
    g: &MatrixGroup,
    table: &CharacterTable,
    row: usize,
    rng: &mut R,
) -> Result<CMatrix> {
    let d = table.degrees[row];
    let e = central_idempotent(g, table, row);
    let x = random_matrix(g.order(), d * d, rng);
    let px = project(g, &e, &x);
    let sv = singular_values(&px);
    let smallest = sv.iter().copied().fold(f64::INFINITY, f64::min);
    if smallest < 1e-8 * sv.iter().copied().fold(0.0, f64::max) {
        return Err(Error::Numerical(format!("isotypic block of row {row} has deficient rank")));
    }
    Ok(orthonormalize(&px))
}

/// Unitary matrices `rho(w)` of an irreducible representation with
/// character `chi`, one per element.
pub fn explicit_representation(g: &MatrixGroup, table: &CharacterTable, row: usize, seed: u64) -> Result<Vec<CMatrix>> {
    let d = table.degrees[row];
    let n = g.order();
    let mut rng = rng_from_seed(seed);
    for _attempt in 0..4 {
        let q = isotypic_basis(g, table, row, &mut rng)?;
        let h = if d == 1 {
            None
        } else {
            // Hermitian element a + a*, acting by right multiplication
            let a: Vec<Complex64> = (0..n).map(|_| random_complex(&mut rng)).collect();
            Some((0..n).map(|w| a[w] + a[g.inv(w)].conj()).collect::<Vec<_>>())
        };
        let u = match h {
            None => q,
            Some(h) => {
                let mut rq = CMatrix::zeros(n, q.ncols());
                for u in 0..n {
                    for (b, &hb) in h.iter().enumerate() {
                        let src = g.mul(u, g.inv(b));
                        for j in 0..q.ncols() {
                            rq[(u, j)] += q[(src, j)] * hb;
                        }
                    }
                }
                let mut hm = q.adjoint() * rq;
                hm = (&hm + hm.adjoint()) * cx(0.5, 0.0);
                let eig = SymmetricEigen::new(hm);
                let vals: Vec<Complex64> = eig.eigenvalues.iter().map(|&x| cx(x, 0.0)).collect();
                let scale = vals.iter().map(|z| z.norm()).fold(1.0, f64::max);
                let groups = cluster_values(&vals, 1e-8 * scale);
                if groups.len() != d || groups.iter().any(|g| g.len() != d) {
                    continue;
                }
                let cols: Vec<_> = groups[0].iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect();
                &q * CMatrix::from_columns(&cols)
            }
        };
        let mut rho = Vec::with_capacity(n);
        for w in 0..n {
            let mut m = CMatrix::zeros(d, d);
            for x in 0..n {
                let y = g.mul(w, x);
                for i in 0..d {
                    let a = u[(y, i)].conj();
                    for j in 0..d {
                        m[(i, j)] += a * u[(x, j)];
                    }
                }
            }
            rho.push(m);
        }
        let res = (0..n).map(|w| (rho[w].trace() - table.value(row, w)).norm()).fold(0.0, f64::max);
        if res > 1e-6 {
            return Err(Error::Consistency { what: "explicit representation character".into(), residual: res });
        }
        return Ok(rho);
    }
    Err(Error::Numerical(format!("could not split the isotypic block of row {row} into irreducibles")))
}

/// `|chi~(tau)|^2`, the squared trace of `tau` on any extension of a
/// `tau`-stable irreducible to the group generated by `W` and `tau`.
pub fn extended_norm_sq(g: &MatrixGroup, table: &CharacterTable, tau: &TauData, row: usize, seed: u64) -> Result<f64> {
    if !tau.is_stable(row) {
        return Err(Error::Precondition(format!("row {} is not tau-stable", table.labels[row])));
    }
    match tau.inner {
        Some(p) => Ok(table.value(row, p.element).norm_sqr()),
        None => extended_norm_sq_explicit(g, table, tau, row, seed),
    }
}

/// The explicit-representation path, available for any `tau`.
pub fn extended_norm_sq_explicit(
    g: &MatrixGroup,
    table: &CharacterTable,
    tau: &TauData,
    row: usize,
    seed: u64,
) -> Result<f64> {
    if !tau.is_stable(row) {
        return Err(Error::Precondition(format!("row {} is not tau-stable", table.labels[row])));
    }
    let d = table.degrees[row];
    let n = g.order();
    let rho = explicit_representation(g, table, row, seed)?;
    let mut rng = rng_from_seed(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut t = None;
    for _ in 0..4 {
        let x = random_matrix(d, d, &mut rng);
        let mut acc = CMatrix::zeros(d, d);
        for w in 0..n {
            acc += &rho[tau.element_perm[w]] * &x * rho[w].adjoint();
        }
        if acc.norm() > 1e-8 * n as f64 {
            t = Some(acc);
            break;
        }
    }
    let mut t = t.ok_or_else(|| Error::Numerical("no intertwiner found; the character is not tau-stable".into()))?;
    let s = (&t * t.adjoint()).trace().re / d as f64;
    t /= cx(s.sqrt(), 0.0);
    let mut res = max_entry_diff(&(&t * t.adjoint()), &CMatrix::identity(d, d));
    for &s in g.generator_indices() {
        res = res.max(max_entry_diff(&(&t * &rho[s]), &(&rho[tau.element_perm[s]] * &t)));
    }
    if res > 1e-8 {
        return Err(Error::Consistency { what: "intertwiner".into(), residual: res });
    }
    // tau^m = scalar * w for the least m; T^m must then be a unit multiple of rho(w)
    let mut tm = t.clone();
    let mut taum = tau.tau.clone();
    for _ in 1..=tau.order {
        if let Some(p) = inner_part(g, &taum) {
            let lambda = (rho[p.element].adjoint() * &tm).trace() / d as f64;
            let fit = max_entry_diff(&tm, &(&rho[p.element] * lambda));
            if fit > 1e-8 || (lambda.norm() - 1.0).abs() > 1e-8 {
                return Err(Error::UnsupportedTau(format!(
                    "T^m is not a unit multiple of rho(tau^m) (fit {fit:.3e}, |lambda| = {})",
                    lambda.norm()
                )));
            }
            break;
        }
        tm = &tm * &t;
        taum = &taum * &tau.tau;
    }
    Ok(t.trace().norm_sqr())
}

/// Coefficients `h_0..=h_max` of `det(1 - q w)^-1` from power sums of `w`.
fn symmetric_power_traces(g: &MatrixGroup, w: usize, max: usize) -> Vec<Complex64> {
    let p: Vec<Complex64> = (0..=max).map(|i| g.element(g.power(w, i)).trace()).collect();
    let mut h = vec![ONE];
    for j in 1..=max {
        let s: Complex64 = (1..=j).map(|i| p[i] * h[j - i]).sum();
        h.push(s / j as f64);
    }
    h
}

/// Least `j` such that `chi` occurs in the `j`-th symmetric power of `V`.
pub fn b_invariant(g: &ReflectionGroup, table: &CharacterTable, row: usize) -> Result<usize> {
    let cap = 2 * g.reflections().len() + 2;
    let per_class: Vec<Vec<Complex64>> =
        table.classes.representatives.iter().map(|&r| symmetric_power_traces(g.group(), r, cap)).collect();
    for j in 0..=cap {
        let f: Vec<Complex64> = per_class.iter().map(|h| h[j]).collect();
        if table.inner_product(row, &f).re > 0.5 {
            return Ok(j);
        }
    }
    Err(Error::Numerical(format!("row {} does not occur up to degree {cap}", table.labels[row])))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassExport {
    pub representative: usize,
    /// Generator positions whose ordered product is the representative.
    pub word: Vec<usize>,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableExport {
    pub classes: Vec<ClassExport>,
    pub labels: Vec<String>,
    pub rows: Vec<Vec<Cx>>,
    pub degrees: Vec<usize>,
    pub b_invariants: Vec<usize>,
}

pub fn export_table(g: &ReflectionGroup, table: &CharacterTable) -> Result<TableExport> {
    Ok(TableExport {
        classes: table
            .classes
            .representatives
            .iter()
            .zip(&table.classes.sizes)
            .map(|(&r, &s)| ClassExport { representative: r, word: g.group().word(r), size: s })
            .collect(),
        labels: table.labels.clone(),
        rows: table.rows.iter().map(|r| cx_vec(r)).collect(),
        degrees: table.degrees.clone(),
        b_invariants: (0..table.len()).map(|i| b_invariant(g, table, i)).collect::<Result<_>>()?,
    })
}
