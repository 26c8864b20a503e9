use std::collections::{HashMap, VecDeque};

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::numerics::{cx, rng_from_seed, root_of_unity, CMatrix};

/// Entrywise tolerance for identifying group elements.
pub const ELEMENT_TOL: f64 = 1e-10;

/// Default bound on the group order during closure.
pub const DEFAULT_CAP: usize = 20_000;

const KEY_GRID: f64 = 1e-6;
const MAX_ENTRY: f64 = 1e6;

/// Hash index over matrices compared up to [`ELEMENT_TOL`].
///
/// Keys are a fixed random linear functional of the entries, bucketed on a
/// coarse grid; lookups probe the neighbouring buckets as well.
#[derive(Clone, Debug)]
pub(crate) struct MatrixIndex {
    weights: Vec<(f64, f64)>,
    buckets: HashMap<i64, Vec<usize>>,
}

impl MatrixIndex {
    fn new(dim: usize) -> Self {
        let mut rng = rng_from_seed(0x005e_ed0f_9a0d);
        let weights = (0..dim * dim).map(|_| (rng.random_range(0.5..1.5), rng.random_range(0.5..1.5))).collect();
        MatrixIndex { weights, buckets: HashMap::new() }
    }

    fn key(&self, m: &CMatrix) -> i64 {
        let f: f64 = m.iter().zip(&self.weights).map(|(z, (a, b))| z.re * a + z.im * b).sum();
        (f / KEY_GRID).floor() as i64
    }

    fn find(&self, m: &CMatrix, elements: &[CMatrix]) -> Option<usize> {
        let k = self.key(m);
        for kk in [k - 1, k, k + 1] {
            if let Some(list) = self.buckets.get(&kk) {
                for &i in list {
                    if max_entry_diff(&elements[i], m) <= ELEMENT_TOL {
                        return Some(i);
                    }
                }
            }
        }
        None
    }

    fn insert(&mut self, m: &CMatrix, idx: usize) {
        let k = self.key(m);
        self.buckets.entry(k).or_default().push(idx);
    }
}

pub fn max_entry_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Monomial matrix with root-of-unity entries: row `i` has `zeta_L^exps[i]`
/// in column `cols[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Monomial {
    cols: Vec<u16>,
    exps: Vec<u32>,
}

impl Monomial {
    fn mul(&self, other: &Monomial, modulus: u32) -> Monomial {
        let n = self.cols.len();
        let mut cols = vec![0u16; n];
        let mut exps = vec![0u32; n];
        for i in 0..n {
            let j = self.cols[i] as usize;
            cols[i] = other.cols[j];
            exps[i] = (self.exps[i] + other.exps[j]) % modulus;
        }
        Monomial { cols, exps }
    }

    fn to_matrix(&self, modulus: u32) -> CMatrix {
        let n = self.cols.len();
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, self.cols[i] as usize)] = root_of_unity(modulus as u64, self.exps[i] as i64);
        }
        m
    }
}

fn root_order(z: Complex64) -> Option<u32> {
    if (z.norm() - 1.0).abs() > 1e-9 {
        return None;
    }
    let mut p = z;
    for q in 1..=1000u32 {
        if (p - cx(1.0, 0.0)).norm() < 1e-9 {
            return Some(q);
        }
        p *= z;
    }
    None
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Recognizes generators that are monomial with root-of-unity entries and
/// returns them in exact form together with the common root order.
fn as_monomials(generators: &[CMatrix]) -> Option<(Vec<Monomial>, u32)> {
    let n = generators[0].nrows();
    if n > u16::MAX as usize {
        return None;
    }
    let mut modulus: u64 = 1;
    let mut shapes = Vec::new();
    for g in generators {
        let mut cols = Vec::with_capacity(n);
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&j| g[(i, j)].norm() > 1e-12).collect();
            if nz.len() != 1 {
                return None;
            }
            let z = g[(i, nz[0])];
            let q = root_order(z)? as u64;
            modulus = modulus / gcd(modulus, q) * q;
            if modulus > 1_000_000 {
                return None;
            }
            cols.push(nz[0] as u16);
            entries.push(z);
        }
        let mut seen = vec![false; n];
        for &c in &cols {
            if std::mem::replace(&mut seen[c as usize], true) {
                return None;
            }
        }
        shapes.push((cols, entries));
    }
    let modulus = modulus as u32;
    let mons = shapes
        .into_iter()
        .map(|(cols, entries)| {
            let exps = entries
                .iter()
                .map(|z| {
                    let t = z.arg() / (2.0 * std::f64::consts::PI) * modulus as f64;
                    (t.round() as i64).rem_euclid(modulus as i64) as u32
                })
                .collect();
            Monomial { cols, exps }
        })
        .collect();
    Some((mons, modulus))
}

/// A finite matrix group with full multiplication and inversion tables.
///
/// Element 0 is the identity. Elements are numbered in breadth-first order
/// of their words in the generators.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    elements: Vec<CMatrix>,
    mult: Vec<u32>,
    inv: Vec<usize>,
    generators: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
    index: MatrixIndex,
    exact: bool,
}

impl MatrixGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &CMatrix {
        &self.elements[i]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `b a b^-1`
    pub fn conjugate(&self, a: usize, by: usize) -> usize {
        self.mul(self.mul(by, a), self.inv(by))
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    /// True when the closure was computed over exact monomial entries.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Word in the generators (0-based generator positions) whose ordered
    /// product is the element.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, g)) = self.parent[i] {
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }

    pub fn index_of(&self, m: &CMatrix) -> Option<usize> {
        if m.nrows() != self.dim || m.ncols() != self.dim {
            return None;
        }
        self.index.find(m, &self.elements)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Subgroup generated by the given elements, as a sorted index list.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

enum Closure {
    Exact { elems: Vec<Monomial>, modulus: u32 },
    Float { elems: Vec<CMatrix> },
}

/// Closure of the generators under multiplication, with tables.
pub fn generate_group(generators: &[CMatrix], cap: usize) -> Result<MatrixGroup> {
    if generators.is_empty() {
        return Err(Error::Input("at least one generator is required".into()));
    }
    let dim = generators[0].nrows();
    for (i, g) in generators.iter().enumerate() {
        if g.nrows() != dim || g.ncols() != dim || dim == 0 {
            return Err(Error::Dimension(format!("generator {i} is {}x{}, expected {dim}x{dim}", g.nrows(), g.ncols())));
        }
        if !crate::numerics::is_finite(g) {
            return Err(Error::Input(format!("generator {i} has non-finite entries")));
        }
        if g.determinant().norm() < 1e-12 {
            return Err(Error::Input(format!("generator {i} is not invertible")));
        }
    }
    let ngen = generators.len();
    let mut right: Vec<u32> = Vec::new();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut index = MatrixIndex::new(dim);

    let closure = if let Some((mons, modulus)) = as_monomials(generators) {
        let id = Monomial { cols: (0..dim as u16).collect(), exps: vec![0; dim] };
        let mut elems = vec![id.clone()];
        let mut lookup: HashMap<Monomial, usize> = HashMap::from([(id, 0)]);
        let mut head = 0;
        while head < elems.len() {
            for (gi, g) in mons.iter().enumerate() {
                let y = elems[head].mul(g, modulus);
                let idx = match lookup.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = elems.len();
                        if i >= cap {
                            return Err(Error::Generation(format!("group order exceeds cap {cap}")));
                        }
                        lookup.insert(y.clone(), i);
                        elems.push(y);
                        parent.push(Some((head, gi)));
                        i
                    }
                };
                right.push(idx as u32);
            }
            head += 1;
        }
        Closure::Exact { elems, modulus }
    } else {
        let mut elems = vec![CMatrix::identity(dim, dim)];
        index.insert(&elems[0], 0);
        let mut head = 0;
        while head < elems.len() {
            for (gi, g) in generators.iter().enumerate() {
                let y = &elems[head] * g;
                let idx = match index.find(&y, &elems) {
                    Some(i) => i,
                    None => {
                        let i = elems.len();
                        if i >= cap {
                            return Err(Error::Generation(format!("group order exceeds cap {cap}")));
                        }
                        let det = y.determinant().norm();
                        if (det - 1.0).abs() > 1e-6 || y.iter().any(|z| z.norm().is_nan() || z.norm() >= MAX_ENTRY) {
                            return Err(Error::Generation(format!(
                                "element {i} has |det| = {det:.6} or unbounded entries; the group is infinite"
                            )));
                        }
                        index.insert(&y, i);
                        elems.push(y);
                        parent.push(Some((head, gi)));
                        i
                    }
                };
                right.push(idx as u32);
            }
            head += 1;
        }
        Closure::Float { elems }
    };

    let (elements, exact) = match closure {
        Closure::Exact { elems, modulus } => {
            let mats: Vec<CMatrix> = elems.iter().map(|m| m.to_matrix(modulus)).collect();
            for (i, m) in mats.iter().enumerate() {
                index.insert(m, i);
            }
            (mats, true)
        }
        Closure::Float { elems } => (elems, false),
    };

    let n = elements.len();
    let mut mult = vec![0u32; n * n];
    for a in 0..n {
        let row = &mut mult[a * n..(a + 1) * n];
        row[0] = a as u32;
        for b in 1..n {
            let (p, g) = parent[b].expect("non-identity elements have parents");
            row[b] = right[row[p] as usize * ngen + g];
        }
    }
    let mut inv = vec![usize::MAX; n];
    for a in 0..n {
        if inv[a] != usize::MAX {
            continue;
        }
        let b = (0..n).find(|&b| mult[a * n + b] == 0).ok_or_else(|| {
            Error::Generation(format!("element {a} has no inverse in the closure"))
        })?;
        inv[a] = b;
        inv[b] = a;
    }
    let generators = (0..ngen).map(|g| right[g] as usize).collect();
    Ok(MatrixGroup { dim, elements, mult, inv, generators, parent, index, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm_matrix(images: &[usize]) -> CMatrix {
        let n = images.len();
        let mut m = CMatrix::zeros(n, n);
        for (j, &i) in images.iter().enumerate() {
            m[(i, j)] = cx(1.0, 0.0);
        }
        m
    }

    #[test]
    fn s3_from_transpositions() {
        let g = generate_group(&[perm_matrix(&[1, 0, 2]), perm_matrix(&[0, 2, 1])], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_exact());
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..6 {
                let prod = g.element(a) * g.element(b);
                assert!(max_entry_diff(&prod, g.element(g.mul(a, b))) < 1e-12);
            }
        }
    }

    #[test]
    fn cyclic_of_order_four() {
        let g = generate_group(&[CMatrix::from_element(1, 1, cx(0.0, 1.0))], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn infinite_group_hits_cap() {
        let r = generate_group(&[CMatrix::from_element(1, 1, cx(2.0, 0.0))], DEFAULT_CAP);
        assert!(matches!(r, Err(Error::Generation(_))));
        let r = generate_group(&[CMatrix::from_element(1, 1, cx(0.0, 1.0))], 3);
        assert!(matches!(r, Err(Error::Generation(_))));
    }

    #[test]
    fn singular_generator_rejected() {
        let r = generate_group(&[CMatrix::zeros(2, 2)], DEFAULT_CAP);
        assert!(matches!(r, Err(Error::Input(_))));
    }

    #[test]
    fn float_path_rotation() {
        // rotation by 2pi/5 is not monomial: exercises the tolerance index
        let (s, c) = (2.0 * std::f64::consts::PI / 5.0).sin_cos();
        let rot = CMatrix::from_row_slice(2, 2, &[cx(c, 0.), cx(-s, 0.), cx(s, 0.), cx(c, 0.)]);
        let refl = CMatrix::from_row_slice(2, 2, &[cx(1., 0.), cx(0., 0.), cx(0., 0.), cx(-1., 0.)]);
        let g = generate_group(&[rot, refl], DEFAULT_CAP).unwrap();
        assert!(!g.is_exact());
        assert_eq!(g.order(), 10);
        let w = g.word(7);
        let prod = w.iter().fold(CMatrix::identity(2, 2), |acc, &k| acc * g.element(g.generator_indices()[k]));
        assert_eq!(g.index_of(&prod), Some(7));
    }
}
