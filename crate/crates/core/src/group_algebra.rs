//! Elements of the group algebra `CW`, stored as coefficient vectors over
//! the element list of a [`MatrixGroup`].

use num_complex::Complex64;

use crate::numerics::{CMatrix, ONE, ZERO};
use crate::reflection_groups::MatrixGroup;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement {
    pub coeffs: Vec<Complex64>,
}

impl GroupAlgebraElement {
    pub fn zero(order: usize) -> Self {
        GroupAlgebraElement { coeffs: vec![ZERO; order] }
    }

    pub fn basis(order: usize, element: usize) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[element] = ONE;
        e
    }

    pub fn identity(order: usize) -> Self {
        Self::basis(order, 0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_assign_scaled(&mut self, other: &Self, factor: Complex64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * factor;
        }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        GroupAlgebraElement { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn mul(&self, other: &Self, group: &MatrixGroup) -> Self {
        let mut out = Self::zero(self.len());
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == ZERO {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb != ZERO {
                    out.coeffs[group.mul(a, b)] += ca * cb;
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest deviation from commuting with the group generators.
    pub fn centrality_residual(&self, group: &MatrixGroup) -> f64 {
        group
            .generator_indices()
            .iter()
            .map(|&g| {
                let gen = Self::basis(self.len(), g);
                self.mul(&gen, group).max_abs_diff(&gen.mul(self, group))
            })
            .fold(0.0, f64::max)
    }

    /// Matrix of left multiplication in the element basis.
    pub fn left_regular_matrix(&self, group: &MatrixGroup) -> CMatrix {
        let n = self.len();
        let mut m = CMatrix::zeros(n, n);
        for (g, &c) in self.coeffs.iter().enumerate() {
            if c == ZERO {
                continue;
            }
            for w in 0..n {
                m[(group.mul(g, w), w)] += c;
            }
        }
        m
    }
}
