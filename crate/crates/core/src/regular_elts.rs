//! Regular numbers, `zeta_d`-regular elements, the normalizing element
//! `tau`, the fixed pair `(V^tau, W^tau)` and Springer's theorem that
//! `W^tau` acts on `V^tau` as a reflection group.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::char_theory::{inner_part, matrix_order};
use crate::error::{Error, Result};
use crate::numerics::{cx, null_space, random_complex, rank, rng_from_seed, root_of_unity, CMatrix, ZERO};
use crate::reflection_groups::{generate_group, max_entry_diff, ReflectionGroup, DEFAULT_CAP};
use crate::report::{cx_vec, Cx};

const EIGEN_TOL: f64 = 1e-9;

/// Canonical basis of a column space: the reduced column echelon form with
/// pivots at the first independent rows.
pub fn echelon_basis(b: &CMatrix) -> CMatrix {
    let r = b.ncols();
    if r == 0 {
        return b.clone();
    }
    let mut pivots: Vec<usize> = Vec::with_capacity(r);
    for i in 0..b.nrows() {
        let mut rows = pivots.clone();
        rows.push(i);
        let sub = b.select_rows(rows.iter());
        if rank(&sub, 1e-9) == rows.len() {
            pivots.push(i);
            if pivots.len() == r {
                break;
            }
        }
    }
    let square = b.select_rows(pivots.iter());
    let inv = square.try_inverse().expect("pivot block invertible");
    (b * inv).map(|z| {
        let f = |x: f64| if x.abs() < 1e-13 { 0.0 } else { x };
        cx(f(z.re), f(z.im))
    })
}

/// Columns spanning `ker(m - lambda)`, in echelon form.
pub fn eigenspace(m: &CMatrix, lambda: Complex64) -> CMatrix {
    let n = m.nrows();
    echelon_basis(&null_space(&(m - CMatrix::identity(n, n) * lambda), EIGEN_TOL))
}

/// True when the span of the columns lies in no reflecting hyperplane.
pub fn meets_regular_set(g: &ReflectionGroup, basis: &CMatrix) -> bool {
    basis.ncols() > 0
        && g.hyperplanes().iter().all(|h| {
            let alpha = CMatrix::from_row_slice(1, h.functional.len(), &h.functional);
            (alpha * basis).iter().any(|z| z.norm() > EIGEN_TOL)
        })
}

fn coefficient_order(bound: i64) -> Vec<i64> {
    let mut v = vec![0];
    for b in 1..=bound {
        v.push(b);
        v.push(-b);
    }
    v
}

/// First integer combination of the columns that avoids every hyperplane,
/// scanning boxes of growing size in lexicographic order.
pub fn regular_witness(g: &ReflectionGroup, basis: &CMatrix) -> Option<Vec<Complex64>> {
    if !meets_regular_set(g, basis) {
        return None;
    }
    let r = basis.ncols();
    let max_bound = (g.hyperplanes().len() as i64 + 2).max(2);
    for bound in 1..=max_bound {
        let values = coefficient_order(bound);
        let mut idx = vec![0usize; r];
        loop {
            let coeffs: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
            if coeffs.iter().any(|c| c.abs() == bound) {
                let mut v = vec![ZERO; basis.nrows()];
                for (j, &c) in coeffs.iter().enumerate() {
                    for (i, x) in v.iter_mut().enumerate() {
                        *x += basis[(i, j)] * c as f64;
                    }
                }
                if g.is_regular_vector(&v) {
                    return Some(v);
                }
            }
            // odometer, last coordinate fastest
            let mut k = r;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < values.len() {
                    break;
                }
                idx[k] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    None
}

/// A random combination of the columns, retried until regular.
pub fn generic_vector<R: Rng>(g: &ReflectionGroup, basis: &CMatrix, rng: &mut R) -> Option<Vec<Complex64>> {
    if !meets_regular_set(g, basis) {
        return None;
    }
    for _ in 0..32 {
        let c: Vec<Complex64> = (0..basis.ncols()).map(|_| random_complex(rng)).collect();
        let v: Vec<Complex64> =
            (0..basis.nrows()).map(|i| (0..basis.ncols()).map(|j| basis[(i, j)] * c[j]).sum()).collect();
        if g.is_regular_vector(&v) {
            return Some(v);
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct RegularElement {
    pub d: usize,
    pub zeta: Complex64,
    pub element: usize,
    /// Echelon basis of the `zeta`-eigenspace.
    pub eigenspace: CMatrix,
    pub witness: Vec<Complex64>,
}

/// First element, in index order, whose `exp(2 pi i / d)`-eigenspace meets
/// the regular set.
pub fn find_regular_element(g: &ReflectionGroup, d: usize) -> Option<RegularElement> {
    if d == 0 {
        return None;
    }
    find_regular_element_with(g, d, root_of_unity(d as u64, 1))
}

/// As [`find_regular_element`] with another primitive `d`-th root.
pub fn find_regular_element_with(g: &ReflectionGroup, d: usize, zeta: Complex64) -> Option<RegularElement> {
    let group = g.group();
    (0..group.order()).filter(|&w| group.element_order(w).is_multiple_of(d)).find_map(|w| {
        let e = eigenspace(group.element(w), zeta);
        let witness = regular_witness(g, &e)?;
        Some(RegularElement { d, zeta, element: w, eigenspace: e, witness })
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum TauKind {
    /// `tau = zeta^-1 w` with `w` in the group.
    InnerRegular { d: usize, zeta: Complex64, element: usize },
    General,
}

/// A regular element of the normalizer together with a fixed regular vector.
#[derive(Clone, Debug)]
pub struct RegularAutomorphism {
    pub tau: CMatrix,
    pub order: usize,
    pub witness: Vec<Complex64>,
    pub kind: TauKind,
    /// `w -> tau w tau^-1`.
    pub element_perm: Vec<usize>,
}

impl RegularAutomorphism {
    pub fn identity(g: &ReflectionGroup) -> Self {
        let n = g.dim();
        let basis = CMatrix::identity(n, n);
        RegularAutomorphism {
            tau: basis.clone(),
            order: 1,
            witness: regular_witness(g, &basis).expect("a reflection group has regular vectors"),
            kind: TauKind::InnerRegular { d: 1, zeta: cx(1.0, 0.0), element: 0 },
            element_perm: (0..g.order()).collect(),
        }
    }

    pub fn inner(g: &ReflectionGroup, r: &RegularElement) -> Self {
        let tau = g.group().element(r.element) / r.zeta;
        let element_perm = (0..g.order()).map(|w| g.group().conjugate(w, r.element)).collect();
        RegularAutomorphism {
            order: matrix_order(&tau).expect("a scaled group element has finite order"),
            tau,
            witness: r.witness.clone(),
            kind: TauKind::InnerRegular { d: r.d, zeta: r.zeta, element: r.element },
            element_perm,
        }
    }

    /// Checks that `tau` normalizes the group, has finite order and fixes a
    /// regular vector.
    pub fn general(g: &ReflectionGroup, tau: CMatrix) -> Result<Self> {
        let element_perm = g.conjugation_permutation(&tau)?;
        let order = matrix_order(&tau)?;
        let fixed = eigenspace(&tau, cx(1.0, 0.0));
        let witness = regular_witness(g, &fixed)
            .ok_or_else(|| Error::NotRegular("the fixed space of tau lies in a reflecting hyperplane".into()))?;
        let kind = match inner_part(g.group(), &tau) {
            // tau = s w with s a scalar root of unity of order d
            Some(p) if (p.scalar.norm() - 1.0).abs() < 1e-9 => {
                let zeta = p.scalar.inv();
                let d = matrix_order(&CMatrix::from_element(1, 1, zeta))?;
                TauKind::InnerRegular { d, zeta, element: p.element }
            }
            _ => TauKind::General,
        };
        Ok(RegularAutomorphism { tau, order, witness, kind, element_perm })
    }

    /// `V^tau` in echelon form.
    pub fn fixed_space(&self) -> CMatrix {
        eigenspace(&self.tau, cx(1.0, 0.0))
    }

    pub fn fixed_elements(&self) -> Vec<usize> {
        (0..self.element_perm.len()).filter(|&w| self.element_perm[w] == w).collect()
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = v.len();
        (0..n).map(|i| (0..n).map(|j| self.tau[(i, j)] * v[j]).sum()).collect()
    }

    pub fn fixes(&self, v: &[Complex64], tol: f64) -> bool {
        let scale = v.iter().map(|z| z.norm()).fold(1.0, f64::max);
        self.apply(v).iter().zip(v).all(|(a, b)| (a - b).norm() <= tol * scale)
    }
}

#[derive(Clone, Debug)]
pub struct FixedPair {
    pub v_tau_basis: CMatrix,
    pub w_tau: Vec<usize>,
    /// Matrix of each element of `w_tau` on `v_tau_basis`.
    pub restricted: Vec<CMatrix>,
}

pub fn fixed_pair(g: &ReflectionGroup, tau: &RegularAutomorphism) -> Result<FixedPair> {
    let basis = tau.fixed_space();
    let w_tau = tau.fixed_elements();
    if let TauKind::InnerRegular { element, .. } = tau.kind {
        let gr = g.group();
        let centralizer: Vec<usize> = (0..gr.order()).filter(|&w| gr.mul(w, element) == gr.mul(element, w)).collect();
        if centralizer != w_tau {
            return Err(Error::Consistency {
                what: "fixed elements against the centralizer".into(),
                residual: centralizer.len().abs_diff(w_tau.len()) as f64,
            });
        }
    }
    let pinv = (basis.adjoint() * &basis).try_inverse().expect("basis has full rank") * basis.adjoint();
    let mut restricted = Vec::with_capacity(w_tau.len());
    for &w in &w_tau {
        let image = g.group().element(w) * &basis;
        let r = &pinv * &image;
        let res = max_entry_diff(&image, &(&basis * &r));
        if res > 1e-8 {
            return Err(Error::Consistency { what: "V^tau is not stable under W^tau".into(), residual: res });
        }
        restricted.push(r);
    }
    Ok(FixedPair { v_tau_basis: basis, w_tau, restricted })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpringerReport {
    pub dim_v_tau: usize,
    pub order_w_tau: usize,
    pub faithful: bool,
    /// Element indices of `W^tau` acting as reflections on `V^tau`.
    pub restricted_reflections: Vec<usize>,
    /// Order of the group generated by the restricted reflections.
    pub reflection_subgroup_order: usize,
    pub reflection_generated: bool,
    pub pass: bool,
}

pub fn springer_verify(g: &ReflectionGroup, tau: &RegularAutomorphism) -> Result<SpringerReport> {
    let fp = fixed_pair(g, tau)?;
    let m = fp.w_tau.len();
    let r = fp.v_tau_basis.ncols();
    let mut faithful = true;
    'outer: for a in 0..m {
        for b in (a + 1)..m {
            if max_entry_diff(&fp.restricted[a], &fp.restricted[b]) < 1e-8 {
                faithful = false;
                break 'outer;
            }
        }
    }
    let id = CMatrix::identity(r, r);
    let refl_pos: Vec<usize> = (0..m).filter(|&i| rank(&(&fp.restricted[i] - &id), 1e-8) == 1).collect();
    let sub_order = if refl_pos.is_empty() {
        1
    } else {
        let gens: Vec<CMatrix> = refl_pos.iter().map(|&i| fp.restricted[i].clone()).collect();
        generate_group(&gens, DEFAULT_CAP.max(2 * m))?.order()
    };
    let reflection_generated = sub_order == m;
    Ok(SpringerReport {
        dim_v_tau: r,
        order_w_tau: m,
        faithful,
        restricted_reflections: refl_pos.iter().map(|&i| fp.w_tau[i]).collect(),
        reflection_subgroup_order: sub_order,
        reflection_generated,
        pass: faithful && reflection_generated,
    })
}

/// One line of the regular-number scan.
#[derive(Clone, Debug, Serialize)]
pub struct RegularReport {
    pub d: usize,
    pub regular: bool,
    pub wd_word: Option<Vec<usize>>,
    #[serde(rename = "dim_V_tau")]
    pub dim_v_tau: Option<usize>,
    #[serde(rename = "order_W_tau")]
    pub order_w_tau: Option<usize>,
    pub springer_pass: Option<bool>,
    /// The regular vector found for `w_d`.
    pub witness: Option<Vec<Cx>>,
    /// Echelon basis of `V^tau`, one column per entry.
    #[serde(rename = "V_tau_basis")]
    pub v_tau_basis: Option<Vec<Vec<Cx>>>,
    #[serde(rename = "W_tau")]
    pub w_tau: Option<Vec<usize>>,
    pub springer: Option<SpringerReport>,
}

pub fn regular_report(g: &ReflectionGroup, d: usize) -> Result<RegularReport> {
    let mut out = RegularReport {
        d,
        regular: false,
        wd_word: None,
        dim_v_tau: None,
        order_w_tau: None,
        springer_pass: None,
        witness: None,
        v_tau_basis: None,
        w_tau: None,
        springer: None,
    };
    if let Some(re) = find_regular_element(g, d) {
        let tau = RegularAutomorphism::inner(g, &re);
        let fp = fixed_pair(g, &tau)?;
        let s = springer_verify(g, &tau)?;
        out.regular = true;
        out.wd_word = Some(g.group().word(re.element));
        out.dim_v_tau = Some(s.dim_v_tau);
        out.order_w_tau = Some(s.order_w_tau);
        out.springer_pass = Some(s.pass);
        out.witness = Some(cx_vec(&re.witness));
        out.v_tau_basis = Some(fp.v_tau_basis.column_iter().map(|c| c.iter().copied().map(Cx).collect()).collect());
        out.w_tau = Some(fp.w_tau);
        out.springer = Some(s);
    }
    Ok(out)
}

/// Largest element order; no `d` beyond it can be regular.
pub fn max_element_order(g: &ReflectionGroup) -> usize {
    (0..g.order()).map(|w| g.group().element_order(w)).max().unwrap_or(1)
}

/// A seeded random `tau`-fixed regular vector, for stability checks.
pub fn perturbed_base_point(g: &ReflectionGroup, tau: &RegularAutomorphism, seed: u64) -> Option<Vec<Complex64>> {
    generic_vector(g, &tau.fixed_space(), &mut rng_from_seed(seed))
}
