//! The `cm-gaudin` command line: argument parsing, configuration checks and
//! the four commands `info`, `regular`, `spectrum` and `check`.
//!
//! Exit codes: 0 when every assertion holds, 1 when one fails, 2 for bad
//! input or any other error. Evidence-only findings never change the code.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::char_theory::{character_table_with, export_table, TableExport};
use crate::combinatorics_sn::regular_split;
use crate::error::{Error, Result};
use crate::families::{
    combinatorics_report, conjecture_b_report, conjecture_jean_report_sn, euler_partition_c, singleton_partition,
    theorem_a_report, two_values, user_partition, Context, FamilyPartition, TauDescriptor,
};
use crate::gaudin::{spectrum_report, SpectrumReport};
use crate::numerics::{SpectralOptions, DEFAULT_TOL, ONE, ZERO};
use crate::reflection_groups::{
    c_to_k, k_to_c, load_group_spec, parse_complex, parse_entry, parse_matrix, Builtin, GroupSpec, ParamC, ParamK,
    ReflectionGroup,
};
use crate::regular_elts::{find_regular_element, max_element_order, regular_report, RegularAutomorphism, RegularReport};
use crate::report::{to_json, Cx};

#[derive(Debug, Parser)]
#[command(name = "cm-gaudin", version, about = "Gaudin spectra and tau-fixed points for complex reflection groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub args: GlobalArgs,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GlobalArgs {
    /// JSON group file (`{"dim", "generators"}` or `{"builtin", ...}`).
    #[arg(long, global = true, value_name = "PATH")]
    pub group: Option<PathBuf>,
    /// symmetric, cyclic, dihedral, imprimitive, or a name such as S4, mu3, G(4,4,2), G(2,1,3).
    #[arg(long, global = true)]
    pub builtin: Option<String>,
    /// `n` for symmetric groups; `r` for imprimitive ones.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// `e` for cyclic and dihedral groups; `d` of `G(d,1,r)` for imprimitive ones.
    #[arg(long, global = true)]
    pub e: Option<usize>,
    /// Regular number selecting `tau`.
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// `k` as `k00,k01;k10,...` (one block per orbit) or a JSON file.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// `c` as one value per reflection class, a single constant, or a JSON file.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// JSON file holding the matrix of `tau`.
    #[arg(long, global = true, value_name = "PATH")]
    pub tau_file: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Family partition for conjecture-b: euler, singleton, or a JSON file of label blocks.
    #[arg(long, global = true)]
    pub partition: Option<String>,
    /// Restrict `spectrum` to one character label.
    #[arg(long, global = true)]
    pub chi: Option<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Order, reflections, hyperplane orbits and character table.
    Info,
    /// Regular numbers with Springer checks.
    Regular,
    /// Covector spectra of the Gaudin operators.
    Spectrum,
    /// Runs one of the checks and sets the exit code.
    Check {
        #[arg(value_enum)]
        which: Check,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    TheoremA,
    ConjectureB,
    Jean,
    Combinatorics,
}

/// Parameter as given on the command line, before the group is known.
#[derive(Clone, Debug)]
pub enum ParamInput {
    K(Vec<Vec<Complex64>>),
    C(Vec<Complex64>),
}

#[derive(Clone, Debug)]
pub enum TauInput {
    Regular(usize),
    Matrix(Value),
}

#[derive(Clone, Debug)]
pub enum PartitionInput {
    Euler,
    Singleton,
    Blocks(Vec<Vec<String>>),
}

/// Validated configuration of one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: GroupSpec,
    pub param: Option<ParamInput>,
    pub tau: Option<TauInput>,
    pub opts: SpectralOptions,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub partition: Option<PartitionInput>,
    pub chi: Option<String>,
    /// Raw `--n` and `--d`, used by the symmetric-group checks.
    pub n: Option<usize>,
    pub d: Option<usize>,
}

/// Report text and exit code of a finished run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn parse_builtin(name: &str, a: &GlobalArgs) -> Result<Builtin> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Error::Input(format!("--builtin {name} needs --{flag}")));
    let lower = name.trim().to_ascii_lowercase();
    let b = match lower.as_str() {
        "symmetric" => Builtin::Symmetric { n: need(a.n, "n")? },
        "cyclic" => Builtin::Cyclic { e: need(a.e, "e")? },
        "dihedral" => Builtin::Dihedral { e: need(a.e, "e")? },
        "imprimitive" => Builtin::Imprimitive { d: need(a.e, "e")?, r: need(a.n, "n")? },
        s => parse_builtin_name(s).ok_or_else(|| Error::Input(format!("unknown built-in group {name}")))?,
    };
    let ok = match b {
        Builtin::Symmetric { n } => n >= 2,
        Builtin::Cyclic { e } => e >= 2,
        Builtin::Dihedral { e } => e >= 2,
        Builtin::Imprimitive { d, r } => d >= 1 && r >= 1 && d + r > 2,
    };
    if !ok {
        return Err(Error::Input(format!("{} is not a nontrivial reflection group", b.name())));
    }
    Ok(b)
}

fn parse_builtin_name(s: &str) -> Option<Builtin> {
    if let Some(n) = s.strip_prefix('s') {
        return n.parse().ok().map(|n| Builtin::Symmetric { n });
    }
    if let Some(e) = s.strip_prefix("mu") {
        return e.parse().ok().map(|e| Builtin::Cyclic { e });
    }
    let inner = s.strip_prefix("g(")?.strip_suffix(')')?;
    let v: Vec<usize> = inner.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
    match v[..] {
        [e, p, 2] if e == p => Some(Builtin::Dihedral { e }),
        [d, 1, r] => Some(Builtin::Imprimitive { d, r }),
        _ => None,
    }
}

fn read_json(path: &Path) -> Result<Value> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

fn complex_list(v: &Value) -> Result<Vec<Complex64>> {
    match v {
        Value::Array(items) => items.iter().map(parse_entry).collect(),
        other => Ok(vec![parse_entry(other)?]),
    }
}

fn parse_k(s: &str) -> Result<Vec<Vec<Complex64>>> {
    let path = Path::new(s);
    if path.is_file() {
        let v = read_json(path)?;
        let v = v.get("k").cloned().unwrap_or(v);
        let blocks = v.as_array().ok_or_else(|| Error::Input("k file must hold an array of orbit blocks".into()))?;
        return blocks.iter().map(complex_list).collect();
    }
    s.split(';').map(|b| b.split(',').map(parse_complex).collect()).collect()
}

fn parse_c(s: &str) -> Result<Vec<Complex64>> {
    let path = Path::new(s);
    if path.is_file() {
        let v = read_json(path)?;
        return complex_list(v.get("c").unwrap_or(&v));
    }
    s.split(',').map(parse_complex).collect()
}

impl RunConfig {
    pub fn from_args(a: &GlobalArgs) -> Result<Self> {
        let group = match (&a.group, &a.builtin) {
            (Some(p), None) => load_group_spec(p)?,
            (None, Some(b)) => GroupSpec::Builtin(parse_builtin(b, a)?),
            (Some(_), Some(_)) => return Err(Error::Input("give only one of --group and --builtin".into())),
            (None, None) => return Err(Error::Input("a group is required: --group or --builtin".into())),
        };
        let param = match (&a.k, &a.c) {
            (Some(_), Some(_)) => return Err(Error::Input("give only one of --k and --c".into())),
            (Some(k), None) => Some(ParamInput::K(parse_k(k)?)),
            (None, Some(c)) => Some(ParamInput::C(parse_c(c)?)),
            (None, None) => None,
        };
        let tau = match (a.d, &a.tau_file) {
            (Some(_), Some(_)) => return Err(Error::Input("give only one of --d and --tau-file".into())),
            (Some(0), None) => return Err(Error::Input("--d must be positive".into())),
            (Some(d), None) => Some(TauInput::Regular(d)),
            (None, Some(p)) => {
                let v = read_json(p)?;
                Some(TauInput::Matrix(v.get("tau").cloned().unwrap_or(v)))
            }
            (None, None) => None,
        };
        if !(a.tol.is_finite() && a.tol > 0.0) {
            return Err(Error::Input(format!("--tol must be positive, got {}", a.tol)));
        }
        if a.jobs == Some(0) {
            return Err(Error::Input("--jobs must be positive".into()));
        }
        let partition = match a.partition.as_deref() {
            None => None,
            Some("euler") => Some(PartitionInput::Euler),
            Some("singleton") => Some(PartitionInput::Singleton),
            Some(p) => {
                let v = read_json(Path::new(p))?;
                let blocks: Vec<Vec<String>> = serde_json::from_value(v.get("blocks").cloned().unwrap_or(v))
                    .map_err(|e| Error::Input(format!("partition file: {e}")))?;
                Some(PartitionInput::Blocks(blocks))
            }
        };
        Ok(RunConfig {
            group,
            param,
            tau,
            opts: SpectralOptions { tol: a.tol, seed: a.seed },
            jobs: a.jobs,
            out: a.out.clone(),
            partition,
            chi: a.chi.clone(),
            n: a.n,
            d: a.d,
        })
    }

    pub fn build_group(&self) -> Result<ReflectionGroup> {
        self.group.build_default()
    }

    /// `c`, converting from `k` when that was given.
    pub fn param_c(&self, g: &ReflectionGroup) -> Result<ParamC> {
        match &self.param {
            Some(ParamInput::C(v)) if v.len() == 1 && g.arrangement().classes.len() > 1 => Ok(ParamC::constant(g, v[0])),
            Some(ParamInput::C(v)) => ParamC::new(g, v.clone()),
            Some(ParamInput::K(v)) => k_to_c(g, &ParamK::new(g, v.clone())?),
            None => Err(Error::Input("this command needs a parameter: --k or --c".into())),
        }
    }

    pub fn param_k(&self, g: &ReflectionGroup) -> Result<ParamK> {
        match &self.param {
            Some(ParamInput::K(v)) => ParamK::new(g, v.clone()),
            Some(ParamInput::C(_)) => c_to_k(g, &self.param_c(g)?),
            None => Err(Error::Input("this command needs a parameter: --k or --c".into())),
        }
    }

    pub fn tau(&self, g: &ReflectionGroup) -> Result<RegularAutomorphism> {
        match &self.tau {
            Some(TauInput::Regular(d)) => find_regular_element(g, *d)
                .map(|re| RegularAutomorphism::inner(g, &re))
                .ok_or_else(|| Error::NotRegular(format!("{d} is not a regular number of {}", g.name()))),
            Some(TauInput::Matrix(v)) => RegularAutomorphism::general(g, parse_matrix(v, g.dim())?),
            None => Err(Error::Input("this command needs --d or --tau-file".into())),
        }
    }
}

#[derive(Serialize)]
struct ReflectionInfo {
    element: usize,
    word: Vec<usize>,
    order: usize,
    det: Cx,
    hyperplane: usize,
    orbit: usize,
    class: usize,
}

#[derive(Serialize)]
struct OrbitInfo {
    id: usize,
    hyperplanes: usize,
    e: usize,
}

#[derive(Serialize)]
struct ClassInfo {
    id: usize,
    orbit: usize,
    det_exponent: usize,
    size: usize,
}

#[derive(Serialize)]
struct GroupInfo {
    group: String,
    dim: usize,
    order: usize,
    exact: bool,
    reflections: Vec<ReflectionInfo>,
    hyperplanes: usize,
    orbits: Vec<OrbitInfo>,
    reflection_classes: Vec<ClassInfo>,
    character_table: TableExport,
}

pub fn cmd_group_info(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.build_group()?;
    let table = character_table_with(&g, cfg.opts)?;
    let gr = g.group();
    let arr = g.arrangement();
    let info = GroupInfo {
        group: g.name().to_string(),
        dim: g.dim(),
        order: g.order(),
        exact: gr.is_exact(),
        reflections: arr
            .reflections
            .iter()
            .map(|r| ReflectionInfo {
                element: r.element,
                word: gr.word(r.element),
                order: gr.element_order(r.element),
                det: Cx(r.det),
                hyperplane: r.hyperplane,
                orbit: r.orbit,
                class: r.class,
            })
            .collect(),
        hyperplanes: arr.hyperplanes.len(),
        orbits: arr.orbits.iter().map(|o| OrbitInfo { id: o.id, hyperplanes: o.hyperplanes.len(), e: o.e }).collect(),
        reflection_classes: arr
            .classes
            .iter()
            .map(|c| ClassInfo { id: c.id, orbit: c.orbit, det_exponent: c.det_exponent, size: c.reflections.len() })
            .collect(),
        character_table: export_table(&g, &table)?,
    };
    Ok(Outcome { output: to_json(&info), code: 0 })
}

#[derive(Serialize)]
struct RegularScan {
    group: String,
    max_element_order: usize,
    regular_numbers: Vec<usize>,
    reports: Vec<RegularReport>,
    pass: bool,
}

/// Scans `d = 1..=max element order`; larger `d` cannot be regular.
pub fn cmd_regular(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.build_group()?;
    let top = max_element_order(&g);
    let reports: Vec<RegularReport> = (1..=top).map(|d| regular_report(&g, d)).collect::<Result<_>>()?;
    let pass = reports.iter().all(|r| r.springer_pass != Some(false));
    let scan = RegularScan {
        group: g.name().to_string(),
        max_element_order: top,
        regular_numbers: reports.iter().filter(|r| r.regular).map(|r| r.d).collect(),
        reports,
        pass,
    };
    Ok(Outcome { output: to_json(&scan), code: if pass { 0 } else { 1 } })
}

#[derive(Serialize)]
struct SpectrumOutput {
    group: String,
    c: Vec<Cx>,
    tau: TauDescriptor,
    spectra: Vec<SpectrumReport>,
}

/// Without `--d` or `--tau-file` the identity is used as `tau`.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.build_group()?;
    let c = cfg.param_c(&g)?;
    let tau = match cfg.tau {
        Some(_) => cfg.tau(&g)?,
        None => RegularAutomorphism::identity(&g),
    };
    let ctx = Context::new(g, c, tau, cfg.opts)?;
    let rows: Vec<usize> = match &cfg.chi {
        Some(l) => vec![ctx.table.row_by_label(l).ok_or_else(|| Error::Input(format!("unknown character {l}")))?],
        None => (0..ctx.table.len()).collect(),
    };
    let spectra = rows.iter().map(|&r| spectrum_report(&ctx.table, &ctx.spectra[r], &ctx.tau)).collect::<Result<_>>()?;
    let out = SpectrumOutput {
        group: ctx.group.name().to_string(),
        c: ctx.c.values().iter().copied().map(Cx).collect(),
        tau: ctx.descriptor(),
        spectra,
    };
    Ok(Outcome { output: to_json(&out), code: 0 })
}

fn symmetric_n(cfg: &RunConfig) -> Result<usize> {
    match cfg.group {
        GroupSpec::Builtin(Builtin::Symmetric { n }) => Ok(n),
        _ => cfg.n.ok_or_else(|| Error::Input("this check needs a symmetric group (--builtin symmetric --n N)".into())),
    }
}

/// The `d` to check: the one given, or every regular number of `S_n`.
fn symmetric_ds(cfg: &RunConfig, n: usize) -> Result<Vec<usize>> {
    match cfg.d {
        Some(d) => {
            regular_split(n, d)?;
            Ok(vec![d])
        }
        None => Ok((1..=n).filter(|&d| n.is_multiple_of(d) || (n - 1).is_multiple_of(d)).collect()),
    }
}

#[derive(Serialize)]
struct Many<T> {
    reports: Vec<T>,
    pass: bool,
}

fn many<T: Serialize>(reports: Vec<T>, pass: impl Fn(&T) -> bool) -> Outcome {
    let ok = reports.iter().all(pass);
    let output = if reports.len() == 1 {
        to_json(&reports[0])
    } else {
        to_json(&Many { pass: ok, reports })
    };
    Outcome { output, code: if ok { 0 } else { 1 } }
}

fn family_partition(cfg: &RunConfig, ctx: &Context) -> Result<FamilyPartition> {
    let g = &ctx.group;
    let symmetric = matches!(g.builtin(), Some(Builtin::Symmetric { .. }));
    let choice = cfg.partition.clone().unwrap_or(if symmetric { PartitionInput::Singleton } else { PartitionInput::Euler });
    match choice {
        PartitionInput::Euler => Ok(euler_partition_c(g, &ctx.table, &ctx.c, cfg.opts.tol)),
        PartitionInput::Singleton => singleton_partition(g, &ctx.table, &cfg.param_k(g)?),
        PartitionInput::Blocks(b) => user_partition(&ctx.table, &b),
    }
}

pub fn cmd_check(cfg: &RunConfig, which: Check) -> Result<Outcome> {
    match which {
        Check::TheoremA | Check::ConjectureB => {
            let g = cfg.build_group()?;
            let c = cfg.param_c(&g)?;
            let tau = cfg.tau(&g)?;
            let ctx = Context::new(g, c, tau, cfg.opts)?;
            if which == Check::TheoremA {
                let r = theorem_a_report(&ctx)?;
                Ok(Outcome { code: if r.pass { 0 } else { 1 }, output: to_json(&r) })
            } else {
                let r = conjecture_b_report(&ctx, &family_partition(cfg, &ctx)?)?;
                Ok(Outcome { code: if r.pass { 0 } else { 1 }, output: to_json(&r) })
            }
        }
        Check::Jean => {
            let n = symmetric_n(cfg)?;
            let k = match cfg.param {
                None => (ZERO, ONE),
                Some(_) => two_values(&cfg.param_k(&cfg.build_group()?)?)?,
            };
            let reports = symmetric_ds(cfg, n)?
                .into_iter()
                .map(|d| conjecture_jean_report_sn(n, d, k))
                .collect::<Result<Vec<_>>>()?;
            Ok(many(reports, |r| r.pass))
        }
        Check::Combinatorics => {
            let n = symmetric_n(cfg)?;
            let reports =
                symmetric_ds(cfg, n)?.into_iter().map(|d| combinatorics_report(n, d)).collect::<Result<Vec<_>>>()?;
            Ok(many(reports, |r| r.pass))
        }
    }
}

pub fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    let run = || match cmd {
        Command::Info => cmd_group_info(cfg),
        Command::Regular => cmd_regular(cfg),
        Command::Spectrum => cmd_spectrum(cfg),
        Command::Check { which } => cmd_check(cfg, *which),
    };
    match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

/// Parses arguments, runs the command and writes `--out` if given. Errors
/// become exit code 2 with the message as output.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { output: e.to_string(), code };
        }
    };
    let result = RunConfig::from_args(&cli.args).and_then(|cfg| {
        let out = dispatch(&cli.command, &cfg)?;
        if let Some(p) = &cfg.out {
            std::fs::write(p, &out.output)?;
        }
        Ok(out)
    });
    result.unwrap_or_else(|e| Outcome { output: format!("error: {e}\n"), code: 2 })
}
