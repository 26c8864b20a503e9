//! Gaudin operators `D_y = sum_s det(s) c(s) alpha_s(y) / alpha_s(v) s`
//! specialized at a regular point `v`, and their joint eigenvalue covectors
//! on each isotypic component of the regular representation.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::char_theory::{check_parameter_stable, explicit_representation, isotypic_basis, CharacterTable};
use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::numerics::{
    cx, joint_generalized_eigenspaces, joint_generalized_eigenspaces_in_copies, rng_from_seed, CMatrix, JointSpectrum,
    SpectralOptions, ZERO,
};
use crate::reflection_groups::{pair, MatrixGroup, ParamC, ReflectionGroup};
use crate::regular_elts::RegularAutomorphism;
use crate::report::{cx_vec, Cx, Real};

/// Relative size of `alpha(v)` below which `v` counts as lying on a hyperplane.
pub const HYPERPLANE_TOL: f64 = 1e-12;

/// `alpha_s(v)` for every reflection, failing if `v` is not regular.
fn denominators(g: &ReflectionGroup, v: &[Complex64]) -> Result<Vec<Complex64>> {
    if v.len() != g.dim() {
        return Err(Error::Dimension(format!("base point has length {}, expected {}", v.len(), g.dim())));
    }
    let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for h in g.hyperplanes() {
        let an = h.functional.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let value = pair(&h.functional, v).norm();
        if value <= HYPERPLANE_TOL * vn * an {
            return Err(Error::OnHyperplane { hyperplane: h.id, value });
        }
    }
    Ok(g.reflections().iter().map(|r| pair(&r.functional, v)).collect())
}

/// The specialized Gaudin element `D_y` at the base point `v`.
pub fn build_dy(g: &ReflectionGroup, c: &ParamC, v: &[Complex64], y: &[Complex64]) -> Result<GroupAlgebraElement> {
    let den = denominators(g, v)?;
    if y.len() != g.dim() {
        return Err(Error::Dimension(format!("y has length {}, expected {}", y.len(), g.dim())));
    }
    let mut out = GroupAlgebraElement::zero(g.order());
    for (i, r) in g.reflections().iter().enumerate() {
        out.coeffs[r.element] += r.det * c.of_reflection(g, i) * pair(&r.functional, y) / den[i];
    }
    Ok(out)
}

/// `D_{e_i}` for the standard basis of `V`.
pub fn build_basis_operators(g: &ReflectionGroup, c: &ParamC, v: &[Complex64]) -> Result<Vec<GroupAlgebraElement>> {
    let n = g.dim();
    (0..n)
        .map(|i| {
            let mut y = vec![ZERO; n];
            y[i] = cx(1.0, 0.0);
            build_dy(g, c, v, &y)
        })
        .collect()
}

/// Matrix of left multiplication by `a` in the element basis.
pub fn left_regular_matrix(g: &MatrixGroup, a: &GroupAlgebraElement) -> CMatrix {
    a.left_regular_matrix(g)
}

fn l2(a: &GroupAlgebraElement) -> f64 {
    a.coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest Frobenius norm of `[L(D_i), L(D_j)]` over basis pairs, and the
/// largest `|L(D_i)|_F` (at least 1). Computed in the group algebra, where
/// `|L(a)|_F = sqrt(|W|) |a|_2`.
pub fn commutator_residual(g: &ReflectionGroup, c: &ParamC, v: &[Complex64]) -> Result<(f64, f64)> {
    let ops = build_basis_operators(g, c, v)?;
    let root = (g.order() as f64).sqrt();
    let scale = ops.iter().map(|a| root * l2(a)).fold(1.0, f64::max);
    let mut res = 0.0f64;
    for i in 0..ops.len() {
        for j in (i + 1)..ops.len() {
            let ab = ops[i].mul(&ops[j], g.group());
            let ba = ops[j].mul(&ops[i], g.group());
            let mut diff = ab;
            diff.add_assign_scaled(&ba, cx(-1.0, 0.0));
            res = res.max(root * l2(&diff));
        }
    }
    Ok((res, scale))
}

#[derive(Clone, Debug)]
pub struct CovectorEntry {
    /// `<e_i, v*>` for the standard basis.
    pub covector: Vec<Complex64>,
    pub multiplicity: usize,
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct CovectorSpectrum {
    pub chi: usize,
    pub degree: usize,
    pub base_point: Vec<Complex64>,
    pub entries: Vec<CovectorEntry>,
    pub commutator_residual: f64,
    pub max_cluster_residual: f64,
    pub min_separation: f64,
    pub basis_condition: f64,
    pub unstable: bool,
    pub scale: f64,
    pub tol: f64,
    pub seed: u64,
}

impl CovectorSpectrum {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

/// `(Q^* L(s) Q)` for every reflection `s`.
fn restricted_reflections(g: &ReflectionGroup, q: &CMatrix) -> Vec<CMatrix> {
    let gr = g.group();
    let m = q.ncols();
    g.reflections()
        .iter()
        .map(|r| {
            let mut out = CMatrix::zeros(m, m);
            for w in 0..gr.order() {
                let sw = gr.mul(r.element, w);
                for a in 0..m {
                    let x = q[(sw, a)].conj();
                    if x == ZERO {
                        continue;
                    }
                    for b in 0..m {
                        out[(a, b)] += x * q[(w, b)];
                    }
                }
            }
            out
        })
        .collect()
}

fn row_seed(seed: u64, row: usize) -> u64 {
    seed ^ (row as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn assemble(
    table: &CharacterTable,
    v: &[Complex64],
    row: usize,
    opts: SpectralOptions,
    js: JointSpectrum,
    copies: usize,
) -> CovectorSpectrum {
    let entries = js
        .clusters
        .iter()
        .map(|cl| CovectorEntry {
            covector: cl.eigenvalues.clone(),
            multiplicity: cl.multiplicity * copies,
            residual: cl.residual,
        })
        .collect();
    CovectorSpectrum {
        chi: row,
        degree: table.degrees[row],
        base_point: v.to_vec(),
        entries,
        commutator_residual: js.commutator_residual,
        max_cluster_residual: js.clusters.iter().map(|c| c.residual).fold(0.0, f64::max),
        min_separation: js.min_separation,
        basis_condition: js.basis_condition,
        unstable: js.unstable,
        scale: js.scale,
        tol: opts.tol,
        seed: opts.seed,
    }
}

/// `sum_s coef(s) m(s)` for each operator, over the reflections.
fn on_reflections(g: &ReflectionGroup, ops: &[GroupAlgebraElement], images: &[CMatrix]) -> Vec<CMatrix> {
    let m = images.first().map_or(0, |x| x.nrows());
    ops.iter()
        .map(|d| {
            let mut b = CMatrix::zeros(m, m);
            for (r, gs) in g.reflections().iter().zip(images) {
                let coef = d.coeffs[r.element];
                if coef != ZERO {
                    b += gs * coef;
                }
            }
            b
        })
        .collect()
}

/// Joint eigenvalue covectors of `D_{e_1}, .., D_{e_n}` on `CW e_chi`.
///
/// `CW e_chi` is `chi(1)` copies of the irreducible `E_chi` under left
/// multiplication, so the operators are diagonalized on `E_chi` itself and
/// multiplicities scaled by `chi(1)`. Working on one copy keeps Jordan
/// blocks visible at their true size.
pub fn chi_spectrum(
    g: &ReflectionGroup,
    table: &CharacterTable,
    c: &ParamC,
    v: &[Complex64],
    row: usize,
    opts: SpectralOptions,
) -> Result<CovectorSpectrum> {
    let ops = build_basis_operators(g, c, v)?;
    let seed = row_seed(opts.seed, row);
    let rho = explicit_representation(g.group(), table, row, seed)?;
    let images: Vec<CMatrix> = g.reflections().iter().map(|r| rho[r.element].clone()).collect();
    let blocks = on_reflections(g, &ops, &images);
    let js = joint_generalized_eigenspaces(&blocks, SpectralOptions { tol: opts.tol, seed })?;
    Ok(assemble(table, v, row, opts, js, table.degrees[row]))
}

/// The same spectrum computed on all of `CW e_chi` (dimension `chi(1)^2`)
/// without splitting it into irreducibles. Multiplicities here are found
/// directly, so their divisibility by `chi(1)` is a genuine check.
pub fn chi_spectrum_isotypic(
    g: &ReflectionGroup,
    table: &CharacterTable,
    c: &ParamC,
    v: &[Complex64],
    row: usize,
    opts: SpectralOptions,
) -> Result<CovectorSpectrum> {
    let ops = build_basis_operators(g, c, v)?;
    let seed = row_seed(opts.seed, row);
    let mut rng = rng_from_seed(seed);
    let q = isotypic_basis(g.group(), table, row, &mut rng)?;
    let blocks = on_reflections(g, &ops, &restricted_reflections(g, &q));
    let copies = table.degrees[row];
    let js = joint_generalized_eigenspaces_in_copies(&blocks, SpectralOptions { tol: opts.tol, seed }, copies)?;
    Ok(assemble(table, v, row, opts, js, 1))
}

/// Spectra for several rows, computed in parallel; output order follows `rows`.
pub fn spectra(
    g: &ReflectionGroup,
    table: &CharacterTable,
    c: &ParamC,
    v: &[Complex64],
    rows: &[usize],
    opts: SpectralOptions,
) -> Result<Vec<CovectorSpectrum>> {
    rows.par_iter().map(|&r| chi_spectrum(g, table, c, v, r, opts)).collect()
}

/// `tau . phi` with `<y, tau . phi> = <tau^-1 y, phi>`.
pub fn act_on_covector(tau: &CMatrix, phi: &[Complex64]) -> Result<Vec<Complex64>> {
    let inv = tau.clone().try_inverse().ok_or_else(|| Error::Input("tau is not invertible".into()))?;
    let n = phi.len();
    Ok((0..n).map(|i| (0..n).map(|j| inv[(j, i)] * phi[j]).sum()).collect())
}

fn covector_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Indices of entries whose covector is fixed by `tau`, within `tol`
/// relative to the operator scale.
pub fn tau_fixed_covectors(spec: &CovectorSpectrum, tau: &RegularAutomorphism, tol: f64) -> Result<Vec<usize>> {
    if !tau.fixes(&spec.base_point, 1e-9) {
        return Err(Error::Precondition("the base point is not fixed by tau".into()));
    }
    let mut out = Vec::new();
    for (i, e) in spec.entries.iter().enumerate() {
        let image = act_on_covector(&tau.tau, &e.covector)?;
        if covector_distance(&image, &e.covector) <= tol * spec.scale {
            out.push(i);
        }
    }
    Ok(out)
}

/// True when `tau` maps the multiset of covector entries onto itself.
pub fn tau_permutes_entries(spec: &CovectorSpectrum, tau: &RegularAutomorphism, tol: f64) -> Result<bool> {
    let mut used = vec![false; spec.entries.len()];
    for e in &spec.entries {
        let image = act_on_covector(&tau.tau, &e.covector)?;
        let hit = spec.entries.iter().enumerate().position(|(j, f)| {
            !used[j] && f.multiplicity == e.multiplicity && covector_distance(&image, &f.covector) <= tol * spec.scale
        });
        match hit {
            Some(j) => used[j] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// `max_i |conj_tau(L(D_{e_i})) - L(D_{tau e_i})|_F`, where `conj_tau`
/// permutes the element basis by `w -> tau w tau^-1`.
pub fn equivariance_check(g: &ReflectionGroup, c: &ParamC, v: &[Complex64], tau: &RegularAutomorphism) -> Result<f64> {
    if !tau.fixes(v, 1e-9) {
        return Err(Error::Precondition("the base point is not fixed by tau".into()));
    }
    check_parameter_stable(g, &tau.element_perm, c)?;
    let n = g.dim();
    let root = (g.order() as f64).sqrt();
    let mut res = 0.0f64;
    for i in 0..n {
        let mut y = vec![ZERO; n];
        y[i] = cx(1.0, 0.0);
        let d = build_dy(g, c, v, &y)?;
        let ty: Vec<Complex64> = (0..n).map(|k| tau.tau[(k, i)]).collect();
        let dt = build_dy(g, c, v, &ty)?;
        let mut diff = dt.scaled(cx(-1.0, 0.0));
        for (w, &a) in d.coeffs.iter().enumerate() {
            diff.coeffs[tau.element_perm[w]] += a;
        }
        res = res.max(root * l2(&diff));
    }
    Ok(res)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub vstar: Vec<Cx>,
    pub mult: usize,
    pub tau_fixed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumResiduals {
    pub commutator: Real,
    pub cluster: Real,
    pub min_separation: Real,
    pub basis_condition: Real,
    pub unstable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub chi: String,
    pub degree: usize,
    pub base_point: Vec<Cx>,
    pub entries: Vec<EntryReport>,
    pub residuals: SpectrumResiduals,
}

pub fn spectrum_report(
    table: &CharacterTable,
    spec: &CovectorSpectrum,
    tau: &RegularAutomorphism,
) -> Result<SpectrumReport> {
    let fixed = tau_fixed_covectors(spec, tau, spec.tol)?;
    Ok(SpectrumReport {
        chi: table.labels[spec.chi].clone(),
        degree: spec.degree,
        base_point: cx_vec(&spec.base_point),
        entries: spec
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| EntryReport { vstar: cx_vec(&e.covector), mult: e.multiplicity, tau_fixed: fixed.contains(&i) })
            .collect(),
        residuals: SpectrumResiduals {
            commutator: Real(spec.commutator_residual),
            cluster: Real(spec.max_cluster_residual),
            min_separation: Real(if spec.min_separation.is_finite() { spec.min_separation } else { 0.0 }),
            basis_condition: Real(spec.basis_condition),
            unstable: spec.unstable,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_theory::character_table;
    use crate::numerics::{random_complex, root_of_unity, ONE};
    use crate::reflection_groups::Builtin;
    use crate::regular_elts::find_regular_element;

    #[test]
    fn mu2_and_mu3_elements() {
        let g = Builtin::Cyclic { e: 2 }.build().unwrap();
        let kappa = cx(0.3, 0.4);
        let c = ParamC::constant(&g, kappa);
        let d = build_dy(&g, &c, &[ONE], &[ONE]).unwrap();
        let s = g.reflections()[0].element;
        assert!((d.coeffs[s] + kappa).norm() < 1e-14 && d.coeffs[0] == ZERO);

        let g = Builtin::Cyclic { e: 3 }.build().unwrap();
        let c = ParamC::new(&g, vec![cx(1.0, 0.0), cx(2.0, 0.0)]).unwrap();
        let d = build_dy(&g, &c, &[ONE], &[ONE]).unwrap();
        for (i, r) in g.reflections().iter().enumerate() {
            assert!((d.coeffs[r.element] - r.det * c.of_reflection(&g, i)).norm() < 1e-14);
        }
        assert!((g.reflections()[0].det - root_of_unity(3, 1)).norm() < 1e-14
            || (g.reflections()[0].det - root_of_unity(3, 2)).norm() < 1e-14);
    }

    #[test]
    fn rejects_points_on_hyperplanes() {
        let g = Builtin::Symmetric { n: 3 }.build().unwrap();
        let c = ParamC::constant(&g, ONE);
        let v = [ONE, ONE, cx(2.0, 0.0)];
        assert!(matches!(build_dy(&g, &c, &v, &v), Err(Error::OnHyperplane { .. })));
    }

    #[test]
    fn left_regular_examples() {
        let g = Builtin::Cyclic { e: 2 }.build().unwrap();
        let mut a = GroupAlgebraElement::identity(2);
        assert_eq!(left_regular_matrix(g.group(), &a), CMatrix::identity(2, 2));
        a.coeffs[1] = ONE;
        let p = left_regular_matrix(g.group(), &a.scaled(cx(0.5, 0.0)));
        assert!((p.trace() - ONE).norm() < 1e-15);
        assert!((&p * &p - &p).norm() < 1e-15);
    }

    #[test]
    fn zero_parameter_and_trivial_row() {
        let g = Builtin::Imprimitive { d: 2, r: 2 }.build().unwrap();
        let t = character_table(&g).unwrap();
        let v = crate::regular_elts::RegularAutomorphism::identity(&g).witness;
        let zero = ParamC::zero(&g);
        for row in 0..t.len() {
            let s = chi_spectrum(&g, &t, &zero, &v, row, SpectralOptions::default()).unwrap();
            assert_eq!(s.entries.len(), 1);
            assert_eq!(s.entries[0].multiplicity, t.degrees[row].pow(2));
            assert!(s.entries[0].covector.iter().all(|z| z.norm() < 1e-14));
        }
        let mut rng = rng_from_seed(5);
        let c = ParamC::new(&g, (0..g.arrangement().classes.len()).map(|_| random_complex(&mut rng)).collect()).unwrap();
        let triv = t.trivial_row();
        let s = chi_spectrum(&g, &t, &c, &v, triv, SpectralOptions::default()).unwrap();
        assert_eq!(s.entries.len(), 1);
        for i in 0..g.dim() {
            let want: Complex64 = g
                .reflections()
                .iter()
                .enumerate()
                .map(|(k, r)| r.det * c.of_reflection(&g, k) * r.functional[i] / pair(&r.functional, &v))
                .sum();
            assert!((s.entries[0].covector[i] - want).norm() < 1e-10);
        }
    }

    #[test]
    fn mu2_sign_row() {
        let g = Builtin::Cyclic { e: 2 }.build().unwrap();
        let t = character_table(&g).unwrap();
        let kappa = cx(1.5, -0.5);
        let c = ParamC::constant(&g, kappa);
        let sign = t.row_by_label("chi1").unwrap();
        let s = chi_spectrum(&g, &t, &c, &[ONE], sign, SpectralOptions::default()).unwrap();
        assert_eq!(s.entries.len(), 1);
        assert!((s.entries[0].covector[0] - kappa).norm() < 1e-12);
    }

    #[test]
    fn s3_standard_has_no_fixed_covector() {
        let g = Builtin::Symmetric { n: 3 }.build().unwrap();
        let t = character_table(&g).unwrap();
        let tau = RegularAutomorphism::inner(&g, &find_regular_element(&g, 2).unwrap());
        let c = ParamC::constant(&g, cx(0.7, 0.0));
        let row = t.row_by_label("(2,1)").unwrap();
        let s = chi_spectrum(&g, &t, &c, &tau.witness, row, SpectralOptions::default()).unwrap();
        assert_eq!(s.total_multiplicity(), 4);
        assert!(s.entries.iter().all(|e| e.multiplicity % 2 == 0));
        assert!(tau_fixed_covectors(&s, &tau, 1e-8).unwrap().is_empty());
        assert!(tau_permutes_entries(&s, &tau, 1e-8).unwrap());
        for label in ["(3)", "(1,1,1)"] {
            let s = chi_spectrum(&g, &t, &c, &tau.witness, t.row_by_label(label).unwrap(), SpectralOptions::default())
                .unwrap();
            assert_eq!(tau_fixed_covectors(&s, &tau, 1e-8).unwrap().len(), 1);
        }
    }

    #[test]
    fn equivariance_small() {
        let g = Builtin::Symmetric { n: 4 }.build().unwrap();
        let c = ParamC::constant(&g, cx(0.4, 1.1));
        for d in [1, 2, 3, 4] {
            let tau = RegularAutomorphism::inner(&g, &find_regular_element(&g, d).unwrap());
            assert!(equivariance_check(&g, &c, &tau.witness, &tau).unwrap() < 1e-9);
        }
        let (res, scale) = commutator_residual(&g, &c, &[ONE, cx(2.0, 0.0), cx(-1.0, 0.5), cx(0.3, 0.0)]).unwrap();
        assert!(res < 1e-8 * scale);
    }
}
