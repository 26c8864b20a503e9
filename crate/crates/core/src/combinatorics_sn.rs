//! Partition combinatorics for the symmetric group: Murnaghan-Nakayama
//! character values, `d`-cores and `d`-quotients on the abacus, the sets
//! `Part(n, d)`, dimensions of `G(d,1,r)` characters and the regular
//! elements `w_d`.
//!
//! Beta-sets use a bead count equal to the smallest multiple of `d` that is
//! at least the number of parts; this fixes the labelling of quotient
//! components.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

/// A partition read as the cycle lengths of a permutation.
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Input(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Beta-set with `beads` beads (at least the number of parts), decreasing.
    pub fn beta_set(&self, beads: usize) -> Vec<usize> {
        assert!(beads >= self.len());
        (0..beads).map(|i| self.0.get(i).copied().unwrap_or(0) + beads - 1 - i).collect()
    }

    fn from_beta(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let n = beta.len();
        Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b - (n - 1 - i)).collect())
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dim(&self) -> u128 {
        let conj = self.conjugate();
        let hooks: u128 = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| (0..row).map(move |j| (i, j, row)))
            .map(|(i, j, row)| (row - j + conj.0[j] - i - 1) as u128)
            .product();
        (1..=self.size() as u128).product::<u128>() / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A `d`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition(components)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// All `d`-partitions of `r`.
    pub fn all(d: usize, r: usize) -> Vec<Multipartition> {
        fn rec(d: usize, rem: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
            if cur.len() + 1 == d {
                for p in Partition::all(rem) {
                    cur.push(p);
                    out.push(Multipartition(cur.clone()));
                    cur.pop();
                }
                return;
            }
            for s in 0..=rem {
                for p in Partition::all(s) {
                    cur.push(p);
                    rec(d, rem - s, cur, out);
                    cur.pop();
                }
            }
        }
        if d == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        rec(d, r, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Memoized Murnaghan-Nakayama evaluation for one fixed cycle type.
pub struct MnEvaluator {
    cycles: Vec<usize>,
    memo: HashMap<(Partition, usize), i64>,
}

impl MnEvaluator {
    pub fn new(ct: &CycleType) -> Self {
        MnEvaluator { cycles: ct.parts().to_vec(), memo: HashMap::new() }
    }

    pub fn value(&mut self, lambda: &Partition) -> Result<i64> {
        if lambda.size() != self.cycles.iter().sum::<usize>() {
            return Err(Error::Input(format!(
                "|{lambda}| = {} differs from the cycle type size {}",
                lambda.size(),
                self.cycles.iter().sum::<usize>()
            )));
        }
        Ok(self.eval(lambda.clone(), 0))
    }

    fn eval(&mut self, lambda: Partition, pos: usize) -> i64 {
        if pos == self.cycles.len() {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(lambda.clone(), pos)) {
            return v;
        }
        let h = self.cycles[pos];
        let beta = lambda.beta_set(lambda.len());
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < h || beta.contains(&(b - h)) {
                continue;
            }
            // beads strictly between b - h and b give the leg length
            let leg = beta.iter().filter(|&&x| x > b - h && x < b).count();
            let mut nb = beta.clone();
            nb[idx] = b - h;
            let sign = if leg % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(Partition::from_beta(nb), pos + 1);
        }
        self.memo.insert((lambda, pos), total);
        total
    }
}

/// `chi_lambda` at a permutation of the given cycle type, with `chi_(n)`
/// trivial and `chi_(1^n)` the sign.
pub fn mn_character(lambda: &Partition, ct: &CycleType) -> Result<i64> {
    MnEvaluator::new(ct).value(lambda)
}

fn beads_for(lambda: &Partition, d: usize) -> usize {
    lambda.len().div_ceil(d) * d
}

fn runners(lambda: &Partition, d: usize) -> Vec<Vec<usize>> {
    let mut r = vec![Vec::new(); d];
    for b in lambda.beta_set(beads_for(lambda, d)) {
        r[b % d].push(b / d);
    }
    r
}

pub fn d_core(lambda: &Partition, d: usize) -> Result<Partition> {
    if d == 0 {
        return Err(Error::Input("d must be at least 1".into()));
    }
    let beta: Vec<usize> = runners(lambda, d)
        .iter()
        .enumerate()
        .flat_map(|(i, pos)| (0..pos.len()).map(move |p| i + d * p))
        .collect();
    Ok(Partition::from_beta(beta))
}

pub fn d_quotient(lambda: &Partition, d: usize) -> Result<Multipartition> {
    if d == 0 {
        return Err(Error::Input("d must be at least 1".into()));
    }
    Ok(Multipartition(runners(lambda, d).into_iter().map(Partition::from_beta).collect()))
}

/// `(j, r)` with `j` in `{0, 1}`, `d | n - j` and `r = (n - j) / d`.
pub fn regular_split(n: usize, d: usize) -> Result<(usize, usize)> {
    if d == 0 || n == 0 {
        return Err(Error::Input("n and d must be positive".into()));
    }
    if n.is_multiple_of(d) {
        Ok((0, n / d))
    } else if (n - 1).is_multiple_of(d) {
        Ok((1, (n - 1) / d))
    } else {
        Err(Error::Input(format!("d = {d} divides neither n = {n} nor n - 1")))
    }
}

/// Partitions of `n` whose `d`-core is the partition of `j`.
pub fn part_n_d(n: usize, d: usize) -> Result<Vec<Partition>> {
    let (j, _) = regular_split(n, d)?;
    let target = if j == 0 { Partition::empty() } else { Partition(vec![1]) };
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        if d_core(&lambda, d)? == target {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// Degree of the irreducible character of `G(d,1,r)` labelled by `mu`.
pub fn multipartition_dim(mu: &Multipartition) -> u128 {
    let r = mu.size() as u128;
    let mut out: u128 = (1..=r).product();
    for p in mu.components() {
        let s = p.size() as u128;
        out /= (1..=s).product::<u128>();
    }
    for p in mu.components() {
        out *= p.dim();
    }
    out
}

/// Permutation of `{0, .., n-1}` stored as the image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Input(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.0.len();
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, n - moved));
        Partition::from_unsorted(lens)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on `1..n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

/// `w_d = (1..d)(d+1..2d)...((r-1)d+1..rd)`, fixing the last `j` points.
pub fn regular_wd(n: usize, d: usize) -> Result<Permutation> {
    let (_, r) = regular_split(n, d)?;
    let mut img: Vec<usize> = (0..n).collect();
    for a in 0..r {
        for b in 0..d {
            img[a * d + b] = a * d + (b + 1) % d;
        }
    }
    Permutation::from_images(img)
}

/// One row of the `(n, d)` table: core, quotient and the character value at `w_d`.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionRow {
    pub lambda: Partition,
    #[serde(rename = "in_Part_n_d")]
    pub in_part_n_d: bool,
    pub chi_at_wd: i64,
    pub core: Partition,
    pub quotient: Multipartition,
    pub quotient_dim: u128,
}

pub fn partition_table(n: usize, d: usize) -> Result<Vec<PartitionRow>> {
    let (j, _) = regular_split(n, d)?;
    let ct = regular_wd(n, d)?.cycle_type();
    let mut mn = MnEvaluator::new(&ct);
    let target = if j == 0 { Partition::empty() } else { Partition(vec![1]) };
    Partition::all(n)
        .into_iter()
        .map(|lambda| {
            let core = d_core(&lambda, d)?;
            let quotient = d_quotient(&lambda, d)?;
            Ok(PartitionRow {
                in_part_n_d: core == target,
                chi_at_wd: mn.value(&lambda)?,
                quotient_dim: multipartition_dim(&quotient),
                lambda,
                core,
                quotient,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap as Map;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Frobenius formula oracle: chi_lambda(rho) is the coefficient of
    /// x^(lambda + delta) in a_delta * prod_k p_{rho_k}, expanded as sparse
    /// polynomials in len(lambda) variables.
    fn frobenius(lambda: &Partition, rho: &Partition) -> i64 {
        let m = lambda.len().max(1);
        type Poly = Map<Vec<usize>, i64>;
        let mul = |a: &Poly, b: &Poly| -> Poly {
            let mut out = Poly::new();
            for (ea, ca) in a {
                for (eb, cb) in b {
                    let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    *out.entry(e).or_default() += ca * cb;
                }
            }
            out.retain(|_, c| *c != 0);
            out
        };
        let mut acc: Poly = Map::from([(vec![0; m], 1)]);
        for i in 0..m {
            for j in (i + 1)..m {
                let mut xi = vec![0; m];
                xi[i] = 1;
                let mut xj = vec![0; m];
                xj[j] = 1;
                acc = mul(&acc, &Map::from([(xi, 1), (xj, -1)]));
            }
        }
        for &k in rho.parts() {
            let pk: Poly = (0..m)
                .map(|i| {
                    let mut e = vec![0; m];
                    e[i] = k;
                    (e, 1)
                })
                .collect();
            acc = mul(&acc, &pk);
        }
        let target: Vec<usize> = (0..m).map(|i| lambda.parts().get(i).copied().unwrap_or(0) + m - 1 - i).collect();
        acc.get(&target).copied().unwrap_or(0)
    }

    #[test]
    fn mn_examples() {
        for n in 1..=6 {
            for ct in Partition::all(n) {
                assert_eq!(mn_character(&p(&[n]), &ct).unwrap(), 1);
            }
        }
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
        // sign character
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
    }

    #[test]
    fn mn_matches_frobenius_oracle() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                for rho in Partition::all(n) {
                    assert_eq!(mn_character(&lambda, &rho).unwrap(), frobenius(&lambda, &rho), "{lambda} at {rho}");
                }
            }
        }
    }

    fn centralizer_order(rho: &Partition) -> i64 {
        let mut counts: Map<usize, i64> = Map::new();
        for &k in rho.parts() {
            *counts.entry(k).or_default() += 1;
        }
        counts.iter().map(|(&k, &m)| (k as i64).pow(m as u32) * (1..=m).product::<i64>()).product()
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let parts = Partition::all(n);
            for a in &parts {
                for b in &parts {
                    let s: i64 =
                        parts.iter().map(|l| mn_character(l, a).unwrap() * mn_character(l, b).unwrap()).sum();
                    assert_eq!(s, if a == b { centralizer_order(a) } else { 0 });
                }
            }
        }
    }

    #[test]
    fn core_quotient_examples() {
        assert_eq!(d_core(&p(&[2, 2]), 2).unwrap(), Partition::empty());
        assert_eq!(d_quotient(&p(&[2, 2]), 2).unwrap(), Multipartition(vec![p(&[1]), p(&[1])]));
        assert_eq!(d_core(&p(&[2, 1]), 2).unwrap(), p(&[2, 1]));
        assert_eq!(d_quotient(&p(&[2, 1]), 2).unwrap(), Multipartition(vec![Partition::empty(), Partition::empty()]));
        let l = p(&[4, 2, 1]);
        assert_eq!(d_core(&l, 1).unwrap(), Partition::empty());
        assert_eq!(d_quotient(&l, 1).unwrap(), Multipartition(vec![l.clone()]));
    }

    #[test]
    fn part_n_d_examples() {
        assert_eq!(part_n_d(2, 2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        let s = part_n_d(3, 2).unwrap();
        assert_eq!(s, vec![p(&[3]), p(&[1, 1, 1])]);
        assert_eq!(s.len(), Multipartition::all(2, 1).len());
        assert!(part_n_d(4, 5).is_err());
    }

    #[test]
    fn multipartition_dims() {
        assert_eq!(multipartition_dim(&Multipartition(vec![p(&[3]), Partition::empty()])), 1);
        assert_eq!(multipartition_dim(&Multipartition(vec![p(&[1]), p(&[1])])), 2);
        for d in 1..=3 {
            for r in 0..=4 {
                let total: u128 = Multipartition::all(d, r).iter().map(|m| multipartition_dim(m).pow(2)).sum();
                let order = (d as u128).pow(r as u32) * (1..=r as u128).product::<u128>();
                assert_eq!(total, order, "G({d},1,{r})");
            }
        }
    }

    #[test]
    fn regular_wd_examples() {
        assert_eq!(regular_wd(4, 2).unwrap().to_string(), "(1,2)(3,4)");
        assert_eq!(regular_wd(3, 2).unwrap().to_string(), "(1,2)");
        assert_eq!(regular_wd(3, 3).unwrap().to_string(), "(1,2,3)");
        assert_eq!(regular_wd(7, 3).unwrap().cycle_type(), p(&[3, 3, 1]));
        assert!(regular_wd(4, 5).is_err());
    }

    #[test]
    fn hook_dimension_matches_character_degree() {
        for n in 1..=7 {
            let id = Partition::from_unsorted(vec![1; n]);
            for l in Partition::all(n) {
                assert_eq!(l.dim() as i64, mn_character(&l, &id).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn size_identity(parts in proptest::collection::vec(1usize..7, 0..7), d in 1usize..5) {
            let l = Partition::from_unsorted(parts);
            let core = d_core(&l, d).unwrap();
            let quo = d_quotient(&l, d).unwrap();
            prop_assert_eq!(l.size(), core.size() + d * quo.size());
            prop_assert_eq!(quo.components().len(), d);
            // the core has no hook of length d: removing one would change the core size
            prop_assert_eq!(d_core(&core, d).unwrap(), core.clone());
            prop_assert!(d_quotient(&core, d).unwrap().size() == 0);
        }
    }
}
