//! Finite complex reflection groups: closure from generators, reflections,
//! reflecting hyperplanes and their orbits, regular vectors, and the two
//! parameter spaces attached to the hyperplane orbits.

mod builtins;
mod file;
mod generate;
mod params;

use std::collections::VecDeque;

use num_complex::Complex64;

pub use builtins::Builtin;
pub use file::{load_group_spec, parse_complex, parse_entry, parse_group_spec, parse_matrix, GroupSpec};
pub use generate::{generate_group, max_entry_diff, MatrixGroup, DEFAULT_CAP, ELEMENT_TOL};
pub use params::{c_to_k, euler_element, k_to_c, ParamC, ParamK};

use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::numerics::{cx, CMatrix, ONE};

const GEOM_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct Reflection {
    pub element: usize,
    /// `alpha_H`, first nonzero coordinate equal to 1.
    pub functional: Vec<Complex64>,
    /// Spans the stable complement of `H`, scaled so `alpha_H(coroot) = 1`.
    pub coroot: Vec<Complex64>,
    /// `det(s)`, a nontrivial root of unity.
    pub det: Complex64,
    /// `det(s) = zeta_e^det_exponent` with `e = e_H`.
    pub det_exponent: usize,
    pub hyperplane: usize,
    pub orbit: usize,
    /// Conjugacy class among reflections.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub id: usize,
    pub functional: Vec<Complex64>,
    pub coroot: Vec<Complex64>,
    pub orbit: usize,
    /// Pointwise stabilizer `W_H` (sorted element indices, identity first).
    pub stabilizer: Vec<usize>,
    /// Indices into the reflection list.
    pub reflections: Vec<usize>,
}

impl Hyperplane {
    pub fn e(&self) -> usize {
        self.stabilizer.len()
    }
}

#[derive(Clone, Debug)]
pub struct HyperplaneOrbit {
    pub id: usize,
    pub hyperplanes: Vec<usize>,
    pub e: usize,
}

/// A conjugacy class of reflections. Within an orbit of hyperplanes these
/// are labelled by the exponent of the determinant.
#[derive(Clone, Debug)]
pub struct ReflectionClass {
    pub id: usize,
    pub orbit: usize,
    pub det_exponent: usize,
    pub reflections: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    pub reflections: Vec<Reflection>,
    pub hyperplanes: Vec<Hyperplane>,
    pub orbits: Vec<HyperplaneOrbit>,
    pub classes: Vec<ReflectionClass>,
    reflection_of_element: Vec<Option<usize>>,
}

impl Arrangement {
    pub fn reflection_of_element(&self, element: usize) -> Option<&Reflection> {
        self.reflection_of_element[element].map(|i| &self.reflections[i])
    }
}

pub(crate) fn pair(functional: &[Complex64], v: &[Complex64]) -> Complex64 {
    functional.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn normalize_first(v: &mut [Complex64]) {
    let big = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(p) = v.iter().position(|z| z.norm() > GEOM_TOL * big.max(1.0)) {
        let lead = v[p];
        for z in v.iter_mut() {
            *z /= lead;
        }
        for z in v.iter_mut().take(p) {
            *z = cx(0.0, 0.0);
        }
    }
}

fn vec_close(a: &[Complex64], b: &[Complex64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() <= GEOM_TOL)
}

/// Finds every reflection of the group, the reflecting hyperplanes, their
/// orbits under `W` and the classes of reflections; fails unless the group
/// is generated by its reflections.
pub fn classify_reflections(group: &MatrixGroup) -> Result<Arrangement> {
    let dim = group.dim();
    let id = CMatrix::identity(dim, dim);
    let mut reflections: Vec<Reflection> = Vec::new();
    let mut hyperplanes: Vec<Hyperplane> = Vec::new();
    let mut reflection_of_element = vec![None; group.order()];
    for (w, slot) in reflection_of_element.iter_mut().enumerate().skip(1) {
        let m = group.element(w) - &id;
        if crate::numerics::rank(&m, GEOM_TOL) != 1 {
            continue;
        }
        // rows of w - 1 vanish on the fixed hyperplane, columns span the image
        let (mut best_row, mut best_col) = (0, 0);
        for i in 0..dim {
            if m.row(i).norm() > m.row(best_row).norm() {
                best_row = i;
            }
            if m.column(i).norm() > m.column(best_col).norm() {
                best_col = i;
            }
        }
        let mut functional: Vec<Complex64> = m.row(best_row).iter().copied().collect();
        normalize_first(&mut functional);
        let mut coroot: Vec<Complex64> = m.column(best_col).iter().copied().collect();
        let s = pair(&functional, &coroot);
        for z in coroot.iter_mut() {
            *z /= s;
        }
        let det = group.element(w).trace() - cx(dim as f64 - 1.0, 0.0);
        let h = match hyperplanes.iter().position(|h| vec_close(&h.functional, &functional)) {
            Some(h) => h,
            None => {
                hyperplanes.push(Hyperplane {
                    id: hyperplanes.len(),
                    functional: functional.clone(),
                    coroot: coroot.clone(),
                    orbit: 0,
                    stabilizer: vec![0],
                    reflections: Vec::new(),
                });
                hyperplanes.len() - 1
            }
        };
        hyperplanes[h].stabilizer.push(w);
        hyperplanes[h].reflections.push(reflections.len());
        *slot = Some(reflections.len());
        reflections.push(Reflection {
            element: w,
            functional: hyperplanes[h].functional.clone(),
            coroot: hyperplanes[h].coroot.clone(),
            det,
            det_exponent: 0,
            hyperplane: h,
            orbit: 0,
            class: 0,
        });
    }
    for r in reflections.iter_mut() {
        let e = hyperplanes[r.hyperplane].e();
        let t = r.det.arg() / (2.0 * std::f64::consts::PI) * e as f64;
        r.det_exponent = (t.round() as i64).rem_euclid(e as i64) as usize;
    }

    let all: Vec<usize> = reflections.iter().map(|r| r.element).collect();
    if group.subgroup_closure(&all).len() != group.order() {
        return Err(Error::Hypothesis(format!(
            "the group of order {} is not generated by its {} reflections",
            group.order(),
            all.len()
        )));
    }

    // W-orbits of hyperplanes and classes of reflections, through conjugation
    // by generators acting on reflection indices
    let conj_ref = |r: usize, g: usize| -> usize {
        let c = group.conjugate(reflections[r].element, g);
        reflection_of_element[c].expect("conjugate of a reflection is a reflection")
    };
    let mut class_of = vec![usize::MAX; reflections.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..reflections.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        class_of[start] = cid;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(r) = queue.pop_front() {
            for &g in group.generator_indices() {
                let c = conj_ref(r, g);
                if class_of[c] == usize::MAX {
                    class_of[c] = cid;
                    members.push(c);
                    queue.push_back(c);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let mut orbit_of = vec![usize::MAX; hyperplanes.len()];
    let mut orbits: Vec<HyperplaneOrbit> = Vec::new();
    for start in 0..hyperplanes.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let oid = orbits.len();
        orbit_of[start] = oid;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(h) = queue.pop_front() {
            let r = hyperplanes[h].reflections[0];
            for &g in group.generator_indices() {
                let h2 = reflections[conj_ref(r, g)].hyperplane;
                if orbit_of[h2] == usize::MAX {
                    orbit_of[h2] = oid;
                    members.push(h2);
                    queue.push_back(h2);
                }
            }
        }
        members.sort_unstable();
        let e = hyperplanes[start].e();
        orbits.push(HyperplaneOrbit { id: oid, hyperplanes: members, e });
    }
    for h in hyperplanes.iter_mut() {
        h.orbit = orbit_of[h.id];
    }
    for (i, r) in reflections.iter_mut().enumerate() {
        r.orbit = orbit_of[r.hyperplane];
        r.class = class_of[i];
    }
    let classes = classes
        .into_iter()
        .enumerate()
        .map(|(id, members)| {
            let r = &reflections[members[0]];
            ReflectionClass { id, orbit: r.orbit, det_exponent: r.det_exponent, reflections: members }
        })
        .collect();
    Ok(Arrangement { reflections, hyperplanes, orbits, classes, reflection_of_element })
}

/// A finite complex reflection group together with its arrangement data.
#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    name: String,
    builtin: Option<Builtin>,
    group: MatrixGroup,
    arrangement: Arrangement,
}

impl ReflectionGroup {
    pub fn new(name: impl Into<String>, group: MatrixGroup) -> Result<Self> {
        let arrangement = classify_reflections(&group)?;
        Ok(ReflectionGroup { name: name.into(), builtin: None, group, arrangement })
    }

    pub fn from_generators(name: impl Into<String>, generators: &[CMatrix], cap: usize) -> Result<Self> {
        Self::new(name, generate_group(generators, cap)?)
    }

    pub(crate) fn with_builtin(mut self, b: Builtin) -> Self {
        self.builtin = Some(b);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn builtin(&self) -> Option<Builtin> {
        self.builtin
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.arrangement.reflections
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.arrangement.hyperplanes
    }

    pub fn orbits(&self) -> &[HyperplaneOrbit] {
        &self.arrangement.orbits
    }

    pub fn is_regular_vector(&self, v: &[Complex64]) -> bool {
        self.is_regular_vector_tol(v, GEOM_TOL)
    }

    /// True iff `v` avoids every reflecting hyperplane:
    /// `|alpha_H(v)| > tol * |v| * |alpha_H|` for all `H`.
    pub fn is_regular_vector_tol(&self, v: &[Complex64], tol: f64) -> bool {
        if v.len() != self.dim() {
            return false;
        }
        let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        self.hyperplanes().iter().all(|h| {
            let an = h.functional.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            pair(&h.functional, v).norm() > tol * vn * an
        })
    }

    /// `(1/e_H) sum_{w in W_H} det(w)^j w`.
    pub fn epsilon_idempotent(&self, hyperplane: usize, j: i64) -> GroupAlgebraElement {
        let h = &self.hyperplanes()[hyperplane];
        let mut out = GroupAlgebraElement::zero(self.order());
        let e = h.e() as f64;
        for &w in &h.stabilizer {
            let det = if w == 0 { ONE } else { self.arrangement.reflection_of_element(w).unwrap().det };
            out.coeffs[w] += det.powi(j as i32) / e;
        }
        out
    }

    /// Permutation of elements induced by conjugation `w -> t w t^-1` with
    /// an arbitrary invertible matrix; fails unless `t` normalizes the group.
    pub fn conjugation_permutation(&self, t: &CMatrix) -> Result<Vec<usize>> {
        if t.nrows() != self.dim() || t.ncols() != self.dim() {
            return Err(Error::Dimension(format!("matrix must be {0}x{0}", self.dim())));
        }
        let t_inv = t
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Input("matrix is not invertible".into()))?;
        let mut perm = vec![0usize; self.order()];
        for (w, m) in self.group.elements().iter().enumerate() {
            let c = t * m * &t_inv;
            perm[w] = self
                .group
                .index_of(&c)
                .ok_or_else(|| Error::Normalizer(format!("conjugate of element {w} is not in the group")))?;
        }
        Ok(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_arrangement() {
        let g = Builtin::Symmetric { n: 3 }.build().unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.reflections().len(), 3);
        assert_eq!(g.hyperplanes().len(), 3);
        assert_eq!(g.orbits().len(), 1);
        assert_eq!(g.orbits()[0].e, 2);
        for h in g.hyperplanes() {
            // x_i - x_j with leading coefficient 1
            let nz: Vec<_> = h.functional.iter().filter(|z| z.norm() > 1e-12).collect();
            assert_eq!(nz.len(), 2);
            assert!((nz[0] - ONE).norm() < 1e-12 && (nz[1] + ONE).norm() < 1e-12);
            assert!((pair(&h.functional, &h.coroot) - ONE).norm() < 1e-12);
        }
    }

    #[test]
    fn mu3_arrangement() {
        let g = Builtin::Cyclic { e: 3 }.build().unwrap();
        assert_eq!(g.reflections().len(), 2);
        assert_eq!(g.hyperplanes().len(), 1);
        assert_eq!(g.orbits()[0].e, 3);
    }

    #[test]
    fn b2_arrangement() {
        let g = Builtin::Imprimitive { d: 2, r: 2 }.build().unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.reflections().len(), 4);
        assert_eq!(g.orbits().len(), 2);
        let mut sizes: Vec<_> = g.orbits().iter().map(|o| (o.hyperplanes.len(), o.e)).collect();
        sizes.sort();
        assert_eq!(sizes, vec![(2, 2), (2, 2)]);
    }

    #[test]
    fn reflection_count_identity() {
        for b in [
            Builtin::Symmetric { n: 4 },
            Builtin::Cyclic { e: 5 },
            Builtin::Dihedral { e: 6 },
            Builtin::Imprimitive { d: 3, r: 2 },
        ] {
            let g = b.build().unwrap();
            let s: usize = g.hyperplanes().iter().map(|h| h.e() - 1).sum();
            assert_eq!(s, g.reflections().len(), "{b:?}");
        }
    }

    #[test]
    fn regular_vectors() {
        let s3 = Builtin::Symmetric { n: 3 }.build().unwrap();
        assert!(s3.is_regular_vector(&[cx(1., 0.), cx(2., 0.), cx(3., 0.)]));
        assert!(!s3.is_regular_vector(&[cx(1., 0.), cx(1., 0.), cx(0., 0.)]));
        let mu3 = Builtin::Cyclic { e: 3 }.build().unwrap();
        assert!(mu3.is_regular_vector(&[cx(5., 0.)]));
    }

    #[test]
    fn epsilon_idempotents() {
        let s2 = Builtin::Cyclic { e: 2 }.build().unwrap();
        let e0 = s2.epsilon_idempotent(0, 0);
        assert!((e0.coeffs[0] - cx(0.5, 0.)).norm() < 1e-15 && (e0.coeffs[1] - cx(0.5, 0.)).norm() < 1e-15);

        let mu3 = Builtin::Cyclic { e: 3 }.build().unwrap();
        let e1 = mu3.epsilon_idempotent(0, 1);
        let z = crate::numerics::root_of_unity(3, 1);
        let s = mu3.group().generator_indices()[0];
        let s2 = mu3.group().mul(s, s);
        assert!((e1.coeffs[0] - cx(1. / 3., 0.)).norm() < 1e-12);
        assert!((e1.coeffs[s] - z / 3.0).norm() < 1e-12);
        assert!((e1.coeffs[s2] - z * z / 3.0).norm() < 1e-12);

        for g in [mu3, Builtin::Imprimitive { d: 3, r: 2 }.build().unwrap()] {
            for h in 0..g.hyperplanes().len() {
                let e = g.hyperplanes()[h].e() as i64;
                let mut total = GroupAlgebraElement::zero(g.order());
                for j in 0..e {
                    let p = g.epsilon_idempotent(h, j);
                    assert!(p.mul(&p, g.group()).max_abs_diff(&p) < 1e-12);
                    for k in (j + 1)..e {
                        let q = g.epsilon_idempotent(h, k);
                        assert!(p.mul(&q, g.group()).max_abs_diff(&GroupAlgebraElement::zero(g.order())) < 1e-12);
                    }
                    total.add_assign_scaled(&p, ONE);
                }
                assert!(total.max_abs_diff(&GroupAlgebraElement::identity(g.order())) < 1e-12);
            }
        }
    }

    #[test]
    fn non_reflection_group_rejected() {
        // -I on C^2 generates a group of order 2 without reflections
        let m = CMatrix::identity(2, 2) * cx(-1.0, 0.0);
        let r = ReflectionGroup::from_generators("minus-one", &[m], DEFAULT_CAP);
        assert!(matches!(r, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn generator_order_independence() {
        let b = Builtin::Imprimitive { d: 2, r: 3 };
        let g1 = b.build().unwrap();
        let mut gens = b.generators();
        gens.reverse();
        let g2 = ReflectionGroup::from_generators("shuffled", &gens, DEFAULT_CAP).unwrap();
        assert_eq!(g1.hyperplanes().len(), g2.hyperplanes().len());
        for h in g1.hyperplanes() {
            assert!(g2.hyperplanes().iter().any(|h2| vec_close(&h.functional, &h2.functional)));
        }
        let mut o1: Vec<usize> = g1.orbits().iter().map(|o| o.hyperplanes.len()).collect();
        let mut o2: Vec<usize> = g2.orbits().iter().map(|o| o.hyperplanes.len()).collect();
        o1.sort();
        o2.sort();
        assert_eq!(o1, o2);
    }
}
