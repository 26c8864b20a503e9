//! Partitions of the irreducible characters into families, the criterion
//! `sum_{chi in F^tau} |chi~(tau)|^2`, and the reports that compare it with
//! the existence of `tau`-fixed Gaudin covectors.
//!
//! The exact family partition is not computed. [`euler_partition`] gives
//! the level sets of the central character on one central element, which
//! the true partition refines; every partition records where it came from.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::char_theory::{b_invariant, character_table_with, extended_norm_sq, tau_data, CharacterTable, TauData};
use crate::combinatorics_sn::{
    d_core, d_quotient, multipartition_dim, partition_table, regular_split, regular_wd, MnEvaluator, Multipartition,
    Partition, PartitionRow,
};
use crate::error::{Error, Result};
use crate::gaudin::{spectra, tau_fixed_covectors, CovectorSpectrum};
use crate::numerics::{cluster_values, SpectralOptions};
use crate::reflection_groups::{euler_element, k_to_c, Builtin, ParamC, ParamK, ReflectionGroup};
use crate::regular_elts::{perturbed_base_point, RegularAutomorphism, TauKind};
use crate::report::{cx_vec, Cx, Real};

/// Criterion values at or below this count as zero.
pub const CRITERION_ZERO: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    EulerBound,
    User,
    SingletonSmooth,
}

#[derive(Clone, Debug)]
pub struct FamilyPartition {
    /// Row indices, each block sorted, blocks ordered by first row.
    pub blocks: Vec<Vec<usize>>,
    pub provenance: Provenance,
}

impl FamilyPartition {
    fn new(mut blocks: Vec<Vec<usize>>, provenance: Provenance, rows: usize) -> Result<Self> {
        let mut seen = vec![false; rows];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::Input("empty block".into()));
            }
            b.sort_unstable();
            for &r in b.iter() {
                if r >= rows || std::mem::replace(&mut seen[r], true) {
                    return Err(Error::Input(format!("row {r} is missing from the table or repeated")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Input("blocks do not cover every character".into()));
        }
        blocks.sort();
        Ok(FamilyPartition { blocks, provenance })
    }

    pub fn block_of(&self, row: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&row)).expect("partition covers all rows")
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &FamilyPartition) -> bool {
        self.blocks.iter().all(|b| {
            let o = other.block_of(b[0]);
            b.iter().all(|&r| other.block_of(r) == o)
        })
    }
}

/// `omega_chi(z) = chi(z) / chi(1)` for a group-algebra element `z`.
pub fn central_character(table: &CharacterTable, row: usize, z: &[Complex64]) -> Complex64 {
    let s: Complex64 = z.iter().enumerate().map(|(w, &a)| a * table.value(row, w)).sum();
    s / table.degrees[row] as f64
}

/// Level sets of `chi -> omega_chi(sum_s (det(s) - 1) c(s) s)`.
pub fn euler_partition_c(g: &ReflectionGroup, table: &CharacterTable, c: &ParamC, tol: f64) -> FamilyPartition {
    let z = euler_element(g, c);
    let omega: Vec<Complex64> = (0..table.len()).map(|r| central_character(table, r, &z.coeffs)).collect();
    let scale = omega.iter().map(|w| w.norm()).fold(1.0, f64::max);
    let blocks = cluster_values(&omega, tol * scale);
    FamilyPartition::new(blocks, Provenance::EulerBound, table.len()).expect("clusters partition the rows")
}

pub fn euler_partition(g: &ReflectionGroup, table: &CharacterTable, k: &ParamK, tol: f64) -> Result<FamilyPartition> {
    Ok(euler_partition_c(g, table, &k_to_c(g, k)?, tol))
}

/// Singletons, for symmetric groups with `k_0 != k_1`, where the families
/// are known to be singletons.
pub fn singleton_partition(g: &ReflectionGroup, table: &CharacterTable, k: &ParamK) -> Result<FamilyPartition> {
    match g.builtin() {
        Some(Builtin::Symmetric { .. }) => {
            let (a, b) = (k.get(0, 0), k.get(0, 1));
            if (a - b).norm() <= 1e-12 * (1.0 + a.norm().max(b.norm())) {
                return Err(Error::Refused("k_0 = k_1: the families need not be singletons".into()));
            }
            FamilyPartition::new((0..table.len()).map(|r| vec![r]).collect(), Provenance::SingletonSmooth, table.len())
        }
        _ => Err(Error::Refused(format!(
            "singleton families are only certified for symmetric groups, not {}",
            g.name()
        ))),
    }
}

/// Blocks given by character labels.
pub fn user_partition(table: &CharacterTable, blocks: &[Vec<String>]) -> Result<FamilyPartition> {
    let rows = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|l| table.row_by_label(l).ok_or_else(|| Error::Input(format!("unknown character label {l}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FamilyPartition::new(rows, Provenance::User, table.len())
}

/// `|chi~(tau)|^2` for the `tau`-stable rows, `None` elsewhere.
pub fn extended_norms(g: &ReflectionGroup, table: &CharacterTable, tau: &TauData, seed: u64) -> Result<Vec<Option<f64>>> {
    (0..table.len())
        .map(|r| if tau.is_stable(r) { extended_norm_sq(g.group(), table, tau, r, seed).map(Some) } else { Ok(None) })
        .collect()
}

/// Sum of the extended norms over the `tau`-stable rows of a block.
pub fn criterion_sum(norms: &[Option<f64>], block: &[usize]) -> f64 {
    block.iter().filter_map(|&r| norms[r]).sum()
}

/// Everything the reports share: the group, its table, `c`, `tau`, the base
/// point, extended norms and one spectrum per character.
pub struct Context {
    pub group: ReflectionGroup,
    pub table: CharacterTable,
    pub c: ParamC,
    pub tau: RegularAutomorphism,
    pub tau_data: TauData,
    pub base_point: Vec<Complex64>,
    pub norms: Vec<Option<f64>>,
    pub spectra: Vec<CovectorSpectrum>,
    pub fixed_counts: Vec<usize>,
    pub opts: SpectralOptions,
}

impl Context {
    /// Uses the witness of `tau` as base point.
    pub fn new(group: ReflectionGroup, c: ParamC, tau: RegularAutomorphism, opts: SpectralOptions) -> Result<Self> {
        let v = tau.witness.clone();
        Self::with_base_point(group, c, tau, v, opts)
    }

    pub fn with_base_point(
        group: ReflectionGroup,
        c: ParamC,
        tau: RegularAutomorphism,
        base_point: Vec<Complex64>,
        opts: SpectralOptions,
    ) -> Result<Self> {
        if !tau.fixes(&base_point, 1e-9) {
            return Err(Error::Precondition("the base point is not fixed by tau".into()));
        }
        let table = character_table_with(&group, opts)?;
        let tau_data = tau_data(&group, &table, &tau.tau, Some(&c))?;
        let norms = extended_norms(&group, &table, &tau_data, opts.seed)?;
        let rows: Vec<usize> = (0..table.len()).collect();
        let spectra = spectra(&group, &table, &c, &base_point, &rows, opts)?;
        let fixed_counts =
            spectra.iter().map(|s| tau_fixed_covectors(s, &tau, opts.tol).map(|f| f.len())).collect::<Result<_>>()?;
        Ok(Context { group, table, c, tau, tau_data, base_point, norms, spectra, fixed_counts, opts })
    }

    pub fn order_w_tau(&self) -> usize {
        self.tau.fixed_elements().len()
    }

    pub fn descriptor(&self) -> TauDescriptor {
        TauDescriptor {
            kind: match self.tau.kind {
                TauKind::InnerRegular { .. } => "inner-regular".into(),
                TauKind::General => "general".into(),
            },
            d: match self.tau.kind {
                TauKind::InnerRegular { d, .. } => Some(d),
                TauKind::General => None,
            },
            order: self.tau.order,
            matrix: self.tau.tau.row_iter().map(|r| r.iter().copied().map(Cx).collect()).collect(),
            base_point: cx_vec(&self.base_point),
        }
    }

    pub fn global(&self) -> Global {
        let sum: f64 = self.norms.iter().flatten().sum();
        let order = self.order_w_tau();
        Global {
            sum_criteria: Real(sum),
            order_w_tau: order,
            second_orthogonality_residual: Real((sum - order as f64).abs()),
            seed: self.opts.seed,
            tol: Real(self.opts.tol),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TauDescriptor {
    pub kind: String,
    pub d: Option<usize>,
    pub order: usize,
    pub matrix: Vec<Vec<Cx>>,
    pub base_point: Vec<Cx>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Global {
    pub sum_criteria: Real,
    #[serde(rename = "order_W_tau")]
    pub order_w_tau: usize,
    pub second_orthogonality_residual: Real,
    pub seed: u64,
    pub tol: Real,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterFinding {
    pub chi: String,
    pub tau_stable: bool,
    pub criterion: Option<Real>,
    pub tau_fixed_count: usize,
    /// Count at a second, randomly chosen `tau`-fixed regular base point.
    pub tau_fixed_count_perturbed: usize,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremAReport {
    pub group: String,
    pub tau: TauDescriptor,
    pub characters: Vec<CharacterFinding>,
    pub base_point_stable: bool,
    pub global: Global,
    pub pass: bool,
}

/// For every `tau`-stable character with nonzero extended norm, asserts a
/// `tau`-fixed covector at the witness and at a perturbed base point.
pub fn theorem_a_report(ctx: &Context) -> Result<TheoremAReport> {
    let v2 = perturbed_base_point(&ctx.group, &ctx.tau, ctx.opts.seed.wrapping_add(1))
        .ok_or_else(|| Error::NotRegular("no tau-fixed regular vector".into()))?;
    let rows: Vec<usize> = (0..ctx.table.len()).collect();
    let second = spectra(&ctx.group, &ctx.table, &ctx.c, &v2, &rows, ctx.opts)?;
    let mut characters = Vec::new();
    let mut pass = true;
    let mut stable = true;
    for r in rows {
        let count = ctx.fixed_counts[r];
        let count2 = tau_fixed_covectors(&second[r], &ctx.tau, ctx.opts.tol)?.len();
        stable &= count == count2;
        let verdict = match ctx.norms[r] {
            None => "not tau-stable".to_string(),
            Some(x) if x <= CRITERION_ZERO => "not asserted (criterion 0)".to_string(),
            Some(_) if count > 0 && count2 > 0 => "PASS".to_string(),
            Some(_) => {
                pass = false;
                "FAIL".to_string()
            }
        };
        characters.push(CharacterFinding {
            chi: ctx.table.labels[r].clone(),
            tau_stable: ctx.norms[r].is_some(),
            criterion: ctx.norms[r].map(Real),
            tau_fixed_count: count,
            tau_fixed_count_perturbed: count2,
            verdict,
        });
    }
    Ok(TheoremAReport {
        group: ctx.group.name().to_string(),
        tau: ctx.descriptor(),
        characters,
        base_point_stable: stable,
        global: ctx.global(),
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockFinding {
    pub chis: Vec<String>,
    pub tau_stable_block: bool,
    pub criterion: Real,
    /// `None` for characters that are not `tau`-stable.
    pub tau_fixed_counts: Vec<Option<usize>>,
    /// Characters of minimal b-invariant in the block.
    pub min_b_chis: Vec<String>,
    pub min_b_tau_stable: bool,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureBReport {
    pub group: String,
    pub tau: TauDescriptor,
    pub partition_provenance: Provenance,
    pub blocks: Vec<BlockFinding>,
    pub global: Global,
    /// False only if a block with nonzero criterion breaks the proved direction.
    pub pass: bool,
}

pub const EVIDENCE_CONSISTENT: &str = "evidence: no tau-fixed covector (consistent with the converse)";
pub const EVIDENCE_AGAINST: &str = "evidence: tau-fixed covector found (bears against the converse)";

/// Blocks with zero criterion are reported as evidence only; blocks with
/// nonzero criterion carry the proved per-character assertion.
pub fn conjecture_b_report(ctx: &Context, partition: &FamilyPartition) -> Result<ConjectureBReport> {
    let t = &ctx.table;
    let mut blocks = Vec::new();
    let mut pass = true;
    for b in &partition.blocks {
        let stable_block = b.iter().all(|&r| b.contains(&ctx.tau_data.irr_permutation[r]));
        let crit = criterion_sum(&ctx.norms, b);
        let counts: Vec<Option<usize>> = b.iter().map(|&r| ctx.norms[r].map(|_| ctx.fixed_counts[r])).collect();
        let bs: Vec<usize> = b.iter().map(|&r| b_invariant(&ctx.group, t, r)).collect::<Result<_>>()?;
        let min_b = bs.iter().copied().min().unwrap_or(0);
        let min_rows: Vec<usize> = b.iter().zip(&bs).filter(|(_, &x)| x == min_b).map(|(&r, _)| r).collect();
        let verdict = if !stable_block {
            "skipped: block not tau-stable".to_string()
        } else if crit > CRITERION_ZERO {
            let ok = b.iter().all(|&r| match ctx.norms[r] {
                Some(x) if x > CRITERION_ZERO => ctx.fixed_counts[r] > 0,
                _ => true,
            });
            pass &= ok;
            if ok { "PASS" } else { "FAIL" }.to_string()
        } else if b.iter().any(|&r| ctx.fixed_counts[r] > 0) {
            EVIDENCE_AGAINST.to_string()
        } else {
            EVIDENCE_CONSISTENT.to_string()
        };
        blocks.push(BlockFinding {
            chis: b.iter().map(|&r| t.labels[r].clone()).collect(),
            tau_stable_block: stable_block,
            criterion: Real(crit),
            tau_fixed_counts: counts,
            min_b_tau_stable: min_rows.iter().all(|&r| ctx.tau_data.is_stable(r)),
            min_b_chis: min_rows.iter().map(|&r| t.labels[r].clone()).collect(),
            verdict,
        });
    }
    Ok(ConjectureBReport {
        group: ctx.group.name().to_string(),
        tau: ctx.descriptor(),
        partition_provenance: partition.provenance,
        blocks,
        global: ctx.global(),
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct JeanRow {
    pub lambda: Partition,
    #[serde(rename = "in_Part_n_d")]
    pub in_part_n_d: bool,
    /// `|chi_lambda(w_d)|^2`.
    pub lhs: i64,
    /// `chi_{quo_d(lambda)}(1)^2` on `Part(n, d)`, else 0.
    pub rhs: u128,
    pub quotient: Option<Multipartition>,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct JeanReport {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub j: usize,
    pub wd: String,
    pub rows: Vec<JeanRow>,
    pub pass: bool,
}

/// The symmetric-group instance of the predicted equality between extended
/// norms on singleton families and squared degrees of `G(d,1,r)`.
pub fn conjecture_jean_report_sn(n: usize, d: usize, k: (Complex64, Complex64)) -> Result<JeanReport> {
    if (k.0 - k.1).norm() <= 1e-12 * (1.0 + k.0.norm().max(k.1.norm())) {
        return Err(Error::Refused("k_0 = k_1: the families need not be singletons".into()));
    }
    let (j, r) = regular_split(n, d)?;
    let wd = regular_wd(n, d)?;
    let mut mn = MnEvaluator::new(&wd.cycle_type());
    let target = if j == 0 { Partition::empty() } else { Partition::new(vec![1])? };
    let mut rows = Vec::new();
    for lambda in Partition::all(n) {
        let chi = mn.value(&lambda)?;
        let in_part = d_core(&lambda, d)? == target;
        let quotient = if in_part { Some(d_quotient(&lambda, d)?) } else { None };
        let rhs = quotient.as_ref().map(|q| multipartition_dim(q).pow(2)).unwrap_or(0);
        let lhs = chi * chi;
        rows.push(JeanRow { equal: lhs as u128 == rhs, lambda, in_part_n_d: in_part, lhs, rhs, quotient });
    }
    Ok(JeanReport { n, d, r, j, wd: wd.to_string(), pass: rows.iter().all(|x| x.equal), rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct CombinatoricsReport {
    pub n: usize,
    pub d: usize,
    /// Nonzero at `w_d` exactly on `Part(n, d)`.
    pub vanishing_matches_cores: bool,
    /// `|chi_lambda(w_d)| = chi_{quo_d(lambda)}(1)` on `Part(n, d)`.
    pub values_match_quotients: bool,
    /// `quo_d` is a bijection from `Part(n, d)` onto the `d`-partitions of `r`.
    pub quotient_bijective: bool,
    pub part_n_d_size: usize,
    pub multipartitions_size: usize,
    pub table: Vec<PartitionRow>,
    pub pass: bool,
}

pub fn combinatorics_report(n: usize, d: usize) -> Result<CombinatoricsReport> {
    let (_, r) = regular_split(n, d)?;
    let table = partition_table(n, d)?;
    let vanishing = table.iter().all(|row| (row.chi_at_wd != 0) == row.in_part_n_d);
    let values = table.iter().filter(|row| row.in_part_n_d).all(|row| row.chi_at_wd.unsigned_abs() as u128 == row.quotient_dim);
    let mut quotients: Vec<Multipartition> = table.iter().filter(|row| row.in_part_n_d).map(|row| row.quotient.clone()).collect();
    quotients.sort();
    let mut all = Multipartition::all(d, r);
    all.sort();
    let bijective = quotients == all;
    Ok(CombinatoricsReport {
        n,
        d,
        vanishing_matches_cores: vanishing,
        values_match_quotients: values,
        quotient_bijective: bijective,
        part_n_d_size: quotients.len(),
        multipartitions_size: all.len(),
        pass: vanishing && values && bijective,
        table,
    })
}

/// `(k_0, k_1)` of a one-orbit parameter, for the symmetric-group reports.
pub fn two_values(k: &ParamK) -> Result<(Complex64, Complex64)> {
    match k.values() {
        [v] if v.len() == 2 => Ok((v[0], v[1])),
        _ => Err(Error::Input("expected one orbit with two k values".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_theory::character_table;
    use crate::numerics::{cx, ONE, ZERO};
    use crate::regular_elts::find_regular_element;

    fn s(n: usize) -> ReflectionGroup {
        Builtin::Symmetric { n }.build().unwrap()
    }

    fn kappa_k(g: &ReflectionGroup, kappa: Complex64) -> ParamK {
        ParamK::new(g, vec![vec![ZERO, kappa]]).unwrap()
    }

    #[test]
    fn euler_examples() {
        let g = s(2);
        let t = character_table(&g).unwrap();
        let zero = euler_partition(&g, &t, &ParamK::zero(&g), 1e-8).unwrap();
        assert_eq!(zero.blocks.len(), 1);
        let kappa = cx(0.6, 0.0);
        let p = euler_partition(&g, &t, &kappa_k(&g, kappa), 1e-8).unwrap();
        assert_eq!(p.blocks.len(), 2);
        let z = euler_element(&g, &k_to_c(&g, &kappa_k(&g, kappa)).unwrap());
        let triv = t.row_by_label("(2)").unwrap();
        let sign = t.row_by_label("(1,1)").unwrap();
        assert!((central_character(&t, triv, &z.coeffs) + kappa * 2.0).norm() < 1e-12);
        assert!((central_character(&t, sign, &z.coeffs) - kappa * 2.0).norm() < 1e-12);

        let g = s(3);
        let t = character_table(&g).unwrap();
        let k = kappa_k(&g, ONE);
        let p = euler_partition(&g, &t, &k, 1e-8).unwrap();
        assert_eq!(p.blocks.len(), 3);
        let z = euler_element(&g, &k_to_c(&g, &k).unwrap());
        let mut vals: Vec<f64> = (0..3).map(|r| central_character(&t, r, &z.coeffs).re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 6.0).abs() < 1e-12 && vals[1].abs() < 1e-12 && (vals[2] - 6.0).abs() < 1e-12);
        let sp = singleton_partition(&g, &t, &k).unwrap();
        assert!(sp.refines(&p) && p.refines(&sp));
    }

    #[test]
    fn singleton_refusals() {
        let g = s(2);
        let t = character_table(&g).unwrap();
        assert!(matches!(singleton_partition(&g, &t, &ParamK::zero(&g)), Err(Error::Refused(_))));
        let g4 = s(4);
        let t4 = character_table(&g4).unwrap();
        assert_eq!(singleton_partition(&g4, &t4, &kappa_k(&g4, ONE)).unwrap().blocks.len(), 5);
        let d = Builtin::Dihedral { e: 4 }.build().unwrap();
        let td = character_table(&d).unwrap();
        assert!(matches!(singleton_partition(&d, &td, &ParamK::zero(&d)), Err(Error::Refused(_))));
    }

    #[test]
    fn s3_d2_reports() {
        let g = s(3);
        let tau = RegularAutomorphism::inner(&g, &find_regular_element(&g, 2).unwrap());
        let k = kappa_k(&g, cx(0.7, 0.0));
        let c = k_to_c(&g, &k).unwrap();
        let ctx = Context::new(g.clone(), c, tau, SpectralOptions::default()).unwrap();
        let std = ctx.table.row_by_label("(2,1)").unwrap();
        let triv = ctx.table.row_by_label("(3)").unwrap();
        assert!(criterion_sum(&ctx.norms, &[std]).abs() < 1e-9);
        assert!((criterion_sum(&ctx.norms, &[triv]) - 1.0).abs() < 1e-9);
        let a = theorem_a_report(&ctx).unwrap();
        assert!(a.pass);
        let verdicts: Vec<&str> = a.characters.iter().map(|c| c.verdict.as_str()).collect();
        assert_eq!(verdicts.iter().filter(|v| **v == "PASS").count(), 2);
        let p = singleton_partition(&g, &ctx.table, &k).unwrap();
        let b = conjecture_b_report(&ctx, &p).unwrap();
        let block = b.blocks.iter().find(|x| x.chis == vec!["(2,1)".to_string()]).unwrap();
        assert_eq!(block.verdict, EVIDENCE_CONSISTENT);
        assert!(block.verdict.starts_with("evidence"));
        assert_eq!(block.tau_fixed_counts, vec![Some(0)]);
    }

    #[test]
    fn identity_tau_criterion_is_degree_squared() {
        let g = Builtin::Dihedral { e: 5 }.build().unwrap();
        let c = ParamC::constant(&g, cx(0.3, 0.2));
        let ctx = Context::new(g.clone(), c, RegularAutomorphism::identity(&g), SpectralOptions::default()).unwrap();
        for r in 0..ctx.table.len() {
            let d = ctx.table.degrees[r] as f64;
            assert!((criterion_sum(&ctx.norms, &[r]) - d * d).abs() < 1e-9);
            assert_eq!(ctx.fixed_counts[r], ctx.spectra[r].entries.len());
        }
        let p = euler_partition_c(&g, &ctx.table, &ctx.c, 1e-8);
        let b = conjecture_b_report(&ctx, &p).unwrap();
        assert!(b.pass && b.blocks.iter().all(|x| x.verdict == "PASS"));
    }

    #[test]
    fn jean_examples() {
        let k = (ZERO, ONE);
        let r = conjecture_jean_report_sn(4, 2, k).unwrap();
        assert!(r.pass);
        let row = r.rows.iter().find(|x| x.lambda.parts() == [2, 2]).unwrap();
        assert_eq!((row.lhs, row.rhs), (4, 4));
        let r = conjecture_jean_report_sn(3, 2, k).unwrap();
        let row = r.rows.iter().find(|x| x.lambda.parts() == [2, 1]).unwrap();
        assert!(!row.in_part_n_d && row.lhs == 0);
        for d in 2..=6 {
            let r = conjecture_jean_report_sn(d, d, k).unwrap();
            let hooks: Vec<_> = r.rows.iter().filter(|x| x.in_part_n_d).collect();
            assert_eq!(hooks.len(), d);
            assert!(hooks.iter().all(|x| x.lhs == 1 && x.rhs == 1));
        }
        assert!(matches!(conjecture_jean_report_sn(4, 2, (ONE, ONE)), Err(Error::Refused(_))));
    }

    #[test]
    fn combinatorics_check() {
        let r = combinatorics_report(8, 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.part_n_d_size, r.multipartitions_size);
    }
}
