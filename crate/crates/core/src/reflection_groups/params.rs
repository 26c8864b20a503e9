use num_complex::Complex64;

use super::ReflectionGroup;
use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::numerics::{root_of_unity, ONE, ZERO};

/// Parameter `k`: one value per `(orbit, j)` with `0 <= j < e_orbit`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamK {
    values: Vec<Vec<Complex64>>,
}

impl ParamK {
    pub fn new(group: &ReflectionGroup, values: Vec<Vec<Complex64>>) -> Result<Self> {
        if values.len() != group.orbits().len() {
            return Err(Error::Input(format!(
                "k needs {} orbit blocks, got {}",
                group.orbits().len(),
                values.len()
            )));
        }
        for (o, v) in group.orbits().iter().zip(&values) {
            if v.len() != o.e {
                return Err(Error::Input(format!("orbit {} needs {} values, got {}", o.id, o.e, v.len())));
            }
        }
        Ok(ParamK { values })
    }

    pub fn zero(group: &ReflectionGroup) -> Self {
        ParamK { values: group.orbits().iter().map(|o| vec![ZERO; o.e]).collect() }
    }

    /// `k_{Omega,j}` for any integer `j`, reduced modulo `e_Omega`.
    pub fn get(&self, orbit: usize, j: i64) -> Complex64 {
        let v = &self.values[orbit];
        v[j.rem_euclid(v.len() as i64) as usize]
    }

    pub fn values(&self) -> &[Vec<Complex64>] {
        &self.values
    }

    pub fn shifted(&self, shifts: &[Complex64]) -> Self {
        ParamK {
            values: self
                .values
                .iter()
                .zip(shifts)
                .map(|(v, &l)| v.iter().map(|x| x + l).collect())
                .collect(),
        }
    }
}

/// Parameter `c`: one value per conjugacy class of reflections.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamC {
    values: Vec<Complex64>,
}

impl ParamC {
    pub fn new(group: &ReflectionGroup, values: Vec<Complex64>) -> Result<Self> {
        let n = group.arrangement().classes.len();
        if values.len() != n {
            return Err(Error::Input(format!("c needs {n} class values, got {}", values.len())));
        }
        Ok(ParamC { values })
    }

    pub fn zero(group: &ReflectionGroup) -> Self {
        ParamC { values: vec![ZERO; group.arrangement().classes.len()] }
    }

    /// The same value on every reflection.
    pub fn constant(group: &ReflectionGroup, value: Complex64) -> Self {
        ParamC { values: vec![value; group.arrangement().classes.len()] }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn of_class(&self, class: usize) -> Complex64 {
        self.values[class]
    }

    /// `c(s)` for a reflection index.
    pub fn of_reflection(&self, group: &ReflectionGroup, reflection: usize) -> Complex64 {
        self.values[group.reflections()[reflection].class]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|z| *z == ZERO)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// `sum_{(Omega,j)} sum_{H in Omega} (k_{H,j} - k_{H,j+1}) e_H eps_{H,j}`.
fn k_side(group: &ReflectionGroup, k: &ParamK) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(group.order());
    for h in group.hyperplanes() {
        let e = h.e() as i64;
        for j in 0..e {
            let diff = k.get(h.orbit, j) - k.get(h.orbit, j + 1);
            if diff != ZERO {
                out.add_assign_scaled(&group.epsilon_idempotent(h.id, j), diff * e as f64);
            }
        }
    }
    out
}

/// `sum_s (det(s) - 1) c(s) s`, a central element supported on reflections.
pub fn euler_element(group: &ReflectionGroup, c: &ParamC) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(group.order());
    for (i, r) in group.reflections().iter().enumerate() {
        out.coeffs[r.element] += (r.det - ONE) * c.of_reflection(group, i);
    }
    out
}

/// The unique `c` with `sum (k_{H,j} - k_{H,j+1}) e_H eps_{H,j} = sum_s (det(s) - 1) c(s) s`,
/// checked by expanding both sides in the group algebra.
pub fn k_to_c(group: &ReflectionGroup, k: &ParamK) -> Result<ParamC> {
    let arr = group.arrangement();
    let values: Vec<Complex64> = arr
        .classes
        .iter()
        .map(|cl| {
            let r = &arr.reflections[cl.reflections[0]];
            let e = group.hyperplanes()[r.hyperplane].e() as i64;
            let mut acc = ZERO;
            for j in 0..e {
                acc += (k.get(r.orbit, j) - k.get(r.orbit, j + 1)) * r.det.powi(j as i32);
            }
            acc / (r.det - ONE)
        })
        .collect();
    let c = ParamC { values };
    let residual = k_side(group, k).max_abs_diff(&euler_element(group, &c));
    let scale = 1.0 + k.values.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    if residual > 1e-9 * scale {
        return Err(Error::Consistency { what: "k_to_c group-algebra identity".into(), residual });
    }
    Ok(c)
}

/// The unique `k` with `k_{Omega,0} = 0` on every orbit and `k_to_c(k) = c`.
pub fn c_to_k(group: &ReflectionGroup, c: &ParamC) -> Result<ParamK> {
    let arr = group.arrangement();
    let mut values = Vec::with_capacity(arr.orbits.len());
    for orbit in &arr.orbits {
        let e = orbit.e;
        // hat_a[i] = c(s_i) (zeta^i - 1) where det(s_i) = zeta_e^i
        let mut hat = vec![ZERO; e];
        for cl in arr.classes.iter().filter(|cl| cl.orbit == orbit.id) {
            let i = cl.det_exponent;
            hat[i] = c.of_class(cl.id) * (root_of_unity(e as u64, i as i64) - ONE);
        }
        let mut k = vec![ZERO; e];
        for j in 0..e {
            let a_j: Complex64 =
                (1..e).map(|i| hat[i] * root_of_unity(e as u64, -((i * j) as i64))).sum::<Complex64>() / e as f64;
            if j + 1 < e {
                k[j + 1] = k[j] - a_j;
            }
        }
        values.push(k);
    }
    let k = ParamK { values };
    let back = k_to_c(group, &k)?;
    let residual = back.values.iter().zip(&c.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    if residual > 1e-9 * (1.0 + c.max_abs()) {
        return Err(Error::Consistency { what: "c_to_k round trip".into(), residual });
    }
    Ok(k)
}
