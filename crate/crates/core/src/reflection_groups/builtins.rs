use serde::{Deserialize, Serialize};

use super::{ReflectionGroup, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::numerics::{root_of_unity, CMatrix, ONE};

/// Built-in families, all given by monomial generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "builtin", rename_all = "lowercase")]
pub enum Builtin {
    /// `S_n` permuting the coordinates of `C^n`.
    Symmetric { n: usize },
    /// `mu_e` acting on `C`.
    Cyclic { e: usize },
    /// `G(e, e, 2)`, the dihedral group of order `2e` on `C^2`.
    Dihedral { e: usize },
    /// `G(d, 1, r)`, monomial `r x r` matrices with `d`-th roots of unity.
    Imprimitive { d: usize, r: usize },
}

fn transposition(n: usize, i: usize) -> CMatrix {
    let mut m = CMatrix::identity(n, n);
    m.swap_rows(i, i + 1);
    m
}

impl Builtin {
    pub fn name(&self) -> String {
        match *self {
            Builtin::Symmetric { n } => format!("S{n}"),
            Builtin::Cyclic { e } => format!("mu{e}"),
            Builtin::Dihedral { e } => format!("G({e},{e},2)"),
            Builtin::Imprimitive { d, r } => format!("G({d},1,{r})"),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Builtin::Symmetric { n } => n >= 2,
            Builtin::Cyclic { e } => e >= 2,
            Builtin::Dihedral { e } => e >= 2,
            Builtin::Imprimitive { d, r } => d >= 1 && r >= 1 && (d >= 2 || r >= 2),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Input(format!("{self:?} is not a nontrivial reflection group")))
        }
    }

    pub fn generators(&self) -> Vec<CMatrix> {
        match *self {
            Builtin::Symmetric { n } => (0..n - 1).map(|i| transposition(n, i)).collect(),
            Builtin::Cyclic { e } => vec![CMatrix::from_element(1, 1, root_of_unity(e as u64, 1))],
            Builtin::Dihedral { e } => {
                let z = root_of_unity(e as u64, 1);
                let s = CMatrix::from_row_slice(2, 2, &[0.0.into(), ONE, ONE, 0.0.into()]);
                let t = CMatrix::from_row_slice(2, 2, &[0.0.into(), z, z.inv(), 0.0.into()]);
                vec![s, t]
            }
            Builtin::Imprimitive { d, r } => {
                let mut gens: Vec<CMatrix> = (0..r.saturating_sub(1)).map(|i| transposition(r, i)).collect();
                if d >= 2 {
                    let mut t = CMatrix::identity(r, r);
                    t[(0, 0)] = root_of_unity(d as u64, 1);
                    gens.push(t);
                }
                gens
            }
        }
    }

    pub fn build(&self) -> Result<ReflectionGroup> {
        self.build_with_cap(DEFAULT_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<ReflectionGroup> {
        self.validate()?;
        Ok(ReflectionGroup::from_generators(self.name(), &self.generators(), cap)?.with_builtin(*self))
    }
}
