//! Verification campaigns behind the command-line tool: configuration, per-element
//! check bundles and their JSON/CSV reports.
//!
//! Every command returns an [`Output`]: the rendered report plus a regression flag
//! that is raised when an element of the admissible set fails an enabled check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::family;
use crate::field::{make_field, Felt, FieldCtx, MAX_E};
use crate::linpoly::LinPoly;
use crate::linset;
use crate::mrd::{self, EquivBranch, EquivWitness};
use crate::scatter::{self, FamilyKind, Subspace};

pub const DEFAULT_SEED: u64 = 0x5eed_6e6e;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "SCATTER_THREADS";

/// A verification that can be run on one coefficient c.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    ScatteredFiber,
    ScatteredDickson,
    Factorization,
    PhiIdentities,
    Lemmas,
    Mrd,
    Idealizers,
    Linset,
    Equivalence,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::ScatteredFiber,
        Check::ScatteredDickson,
        Check::Factorization,
        Check::PhiIdentities,
        Check::Lemmas,
        Check::Mrd,
        Check::Idealizers,
        Check::Linset,
        Check::Equivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ScatteredFiber => "scattered_fiber",
            Check::ScatteredDickson => "scattered_dickson",
            Check::Factorization => "factorization",
            Check::PhiIdentities => "phi_identities",
            Check::Lemmas => "lemmas",
            Check::Mrd => "mrd",
            Check::Idealizers => "idealizers",
            Check::Linset => "linset",
            Check::Equivalence => "equivalence",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check '{s}'")))
    }
}

/// Comma-separated check names; `all` selects every check.
pub fn parse_checks(text: &str) -> Result<BTreeSet<Check>> {
    let mut checks = BTreeSet::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            checks.extend(Check::ALL);
        } else {
            checks.insert(item.parse()?);
        }
    }
    if checks.is_empty() {
        return Err(param("no checks selected"));
    }
    Ok(checks)
}

/// Result of one check on one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The element violates the hypotheses of the checked statement.
    NotApplicable,
}

impl Outcome {
    fn from_bool(ok: bool) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Parse(format!("unknown output format '{s}'"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

/// Hex with an optional `0x` prefix.
pub fn parse_modulus(text: &str) -> Result<u64> {
    let digits = text.trim().trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|_| Error::Parse(format!("malformed modulus '{text}'")))
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub e: u32,
    pub s: i64,
    pub modulus_override: Option<u64>,
    pub threads: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub checks: BTreeSet<Check>,
    pub seed: u64,
    /// Check a seeded sample of at most this many elements.
    pub limit: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            e: 2,
            s: 1,
            modulus_override: None,
            threads: 1,
            output_format: OutputFormat::Json,
            output_path: None,
            checks: Check::ALL.into_iter().collect(),
            seed: DEFAULT_SEED,
            limit: None,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_E).contains(&self.e) {
            return Err(param(format!("e = {} outside 1..={MAX_E}", self.e)));
        }
        if !matches!(self.s, 1 | 5) {
            return Err(param(format!("s = {} not in {{1, 5}}", self.s)));
        }
        if self.threads == 0 {
            return Err(param("threads must be at least 1"));
        }
        if self.checks.is_empty() {
            return Err(param("no checks selected"));
        }
        Ok(())
    }

    pub fn field(&self) -> Result<FieldCtx> {
        self.validate()?;
        make_field(self.e, self.modulus_override)
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
        Ok(pool.install(job))
    }

    fn sample<T: Copy>(&self, items: &[T]) -> Vec<T> {
        match self.limit {
            Some(limit) if limit < items.len() => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let mut picked = index::sample(&mut rng, items.len(), limit).into_vec();
                picked.sort_unstable();
                picked.into_iter().map(|i| items[i]).collect()
            }
            _ => items.to_vec(),
        }
    }
}

/// A rendered report and whether it signals a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub regression: bool,
}

impl Output {
    /// 0 on success, 2 when a check failed.
    pub fn exit_code(&self) -> i32 {
        if self.regression {
            2
        } else {
            0
        }
    }

    /// Writes to `path`, or to standard output when absent.
    pub fn emit(&self, path: Option<&Path>) -> Result<()> {
        match path {
            Some(path) => std::fs::write(path, &self.body)?,
            None => print!("{}", self.body),
        }
        Ok(())
    }
}

fn render_json<T: Serialize>(value: &T) -> Result<String> {
    let mut body = serde_json::to_string_pretty(value)?;
    body.push('\n');
    Ok(body)
}

fn render_csv(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn modulus_hex(ctx: &FieldCtx) -> String {
    format!("{:#x}", ctx.modulus())
}

/// Runs one check on f_{c,s}.
pub fn run_check(ctx: &FieldCtx, c: Felt, s: i64, check: Check) -> Outcome {
    let Ok(f) = LinPoly::trinomial(ctx, c, s) else {
        return Outcome::NotApplicable;
    };
    match check {
        Check::ScatteredFiber => Outcome::from_bool(scatter::is_scattered_fibers(&f)),
        Check::ScatteredDickson => Outcome::from_bool(scatter::is_scattered_dickson(&f)),
        Check::Factorization => match family::verify_factorization(ctx, c) {
            Ok(holds) => Outcome::from_bool(holds),
            Err(_) => Outcome::NotApplicable,
        },
        Check::PhiIdentities => phi_outcome(ctx, c),
        Check::Lemmas => Outcome::from_bool(family::lemma_checks(ctx, c).all() && f.is_bijective()),
        Check::Mrd => match mrd::build_code(ctx, c, s) {
            Ok(code) => Outcome::from_bool(code.is_mrd()),
            Err(_) => Outcome::NotApplicable,
        },
        Check::Idealizers => match mrd::build_code(ctx, c, s) {
            Ok(code) => {
                let q = ctx.q();
                let right = code.right_idealizer();
                let left = code.left_idealizer();
                Outcome::from_bool(
                    right.order() == q * q && right.is_subfield_scalars(2) && left.order() == ctx.order(),
                )
            }
            Err(_) => Outcome::NotApplicable,
        },
        Check::Linset => {
            Outcome::from_bool(linset::linear_set(&Subspace::graph(f)).is_maximum_scattered())
        }
        Check::Equivalence => equivalence_outcome(ctx, c, s),
    }
}

fn phi_outcome(ctx: &FieldCtx, c: Felt) -> Outcome {
    let f1_vanishes = family::eval_f(ctx, 1, c).map(|v| v.is_zero()).unwrap_or(false);
    if !f1_vanishes || ctx.in_subfield(c, 2) {
        return Outcome::NotApplicable;
    }
    match family::phi_identities(ctx, c) {
        Ok((phi, psi)) => Outcome::from_bool(phi == ctx.frobenius(c, 4) && psi == ctx.frobenius(c, 5)),
        Err(_) => Outcome::Fail,
    }
}

/// Same-step witnesses to every automorphic image, and the opposite-step witness
/// from the explicit image formula.
fn equivalence_outcome(ctx: &FieldCtx, c: Felt, s: i64) -> Outcome {
    if c.is_zero() {
        return Outcome::NotApplicable;
    }
    let validated = |c1: Felt, s1: i64, c2: Felt, t: i64| -> Result<bool> {
        Ok(match mrd::codes_equivalent(ctx, c1, s1, c2, t)?.witness {
            Some(w) => w.validates(ctx, c1, s1, c2, t)?,
            None => false,
        })
    };
    let run = || -> Result<bool> {
        for k in 0..ctx.degree() {
            if !validated(c, s, ctx.automorphism(c, k), s)? {
                return Ok(false);
            }
        }
        match mrd::opposite_step_image(ctx, c, 6 - s) {
            Some(image) if !image.is_zero() => validated(image, 6 - s, c, s),
            _ => Ok(true),
        }
    };
    match run() {
        Ok(ok) => Outcome::from_bool(ok),
        Err(_) => Outcome::NotApplicable,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRecord {
    pub c: String,
    pub scattered: bool,
    pub checks: BTreeMap<Check, Outcome>,
}

impl ElementRecord {
    pub fn new(ctx: &FieldCtx, c: Felt, s: i64, checks: &BTreeSet<Check>) -> ElementRecord {
        let outcomes: BTreeMap<Check, Outcome> = checks.iter().map(|&k| (k, run_check(ctx, c, s, k))).collect();
        let scattered = match outcomes.get(&Check::ScatteredFiber) {
            Some(o) => *o == Outcome::Pass,
            None => run_check(ctx, c, s, Check::ScatteredFiber) == Outcome::Pass,
        };
        ElementRecord { c: ctx.to_hex(c), scattered, checks: outcomes }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|o| *o == Outcome::Pass)
    }

    fn csv_cells(&self) -> Vec<String> {
        let mut cells = vec![self.c.clone(), self.scattered.to_string()];
        cells.extend(self.checks.values().map(|o| o.name().to_string()));
        cells
    }
}

fn check_columns(checks: &BTreeSet<Check>) -> impl Iterator<Item = String> + '_ {
    checks.iter().map(|c| c.name().to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub e: u32,
    pub q: u64,
    pub modulus: String,
    pub frak_c_size: usize,
    pub records: Vec<ElementRecord>,
}

/// Enumerates the admissible set and runs the enabled checks on it (or on a
/// seeded sample of `limit` elements).
pub fn cmd_enumerate(config: &CampaignConfig) -> Result<Output> {
    let ctx = config.field()?;
    let report = config.run(|| {
        let members = family::frak_c(&ctx);
        let chosen = config.sample(&members);
        let records: Vec<ElementRecord> = chosen
            .par_iter()
            .map(|&c| ElementRecord::new(&ctx, c, config.s, &config.checks))
            .collect();
        CampaignReport {
            e: ctx.e(),
            q: ctx.q(),
            modulus: modulus_hex(&ctx),
            frak_c_size: members.len(),
            records,
        }
    })?;
    let regression = report.records.iter().any(|r| !r.all_pass());
    let body = match config.output_format {
        OutputFormat::Json => render_json(&report)?,
        OutputFormat::Csv => {
            let header: Vec<String> = ["e", "q", "modulus", "frak_c_size", "c", "scattered"]
                .iter()
                .map(|s| s.to_string())
                .chain(check_columns(&config.checks))
                .collect();
            let prefix = [
                report.e.to_string(),
                report.q.to_string(),
                report.modulus.clone(),
                report.frak_c_size.to_string(),
            ];
            let rows: Vec<Vec<String>> = report
                .records
                .iter()
                .map(|r| prefix.iter().cloned().chain(r.csv_cells()).collect())
                .collect();
            render_csv(&header, &rows)?
        }
    };
    Ok(Output { body, regression })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub e: u32,
    pub q: u64,
    pub modulus: String,
    pub s: i64,
    pub c: String,
    pub in_frak_c: bool,
    pub scattered: bool,
    pub checks: BTreeMap<Check, Outcome>,
}

/// Runs the enabled checks on one coefficient.
pub fn cmd_check(config: &CampaignConfig, c_hex: &str) -> Result<Output> {
    let ctx = config.field()?;
    let c = ctx.parse_hex(c_hex)?;
    let record = config.run(|| ElementRecord::new(&ctx, c, config.s, &config.checks))?;
    let in_frak_c = family::in_frak_c(&ctx, c);
    let regression = in_frak_c && !record.all_pass();
    let report = CheckReport {
        e: ctx.e(),
        q: ctx.q(),
        modulus: modulus_hex(&ctx),
        s: config.s,
        c: record.c,
        in_frak_c,
        scattered: record.scattered,
        checks: record.checks,
    };
    let body = match config.output_format {
        OutputFormat::Json => render_json(&report)?,
        OutputFormat::Csv => {
            let header: Vec<String> = ["e", "q", "modulus", "s", "c", "in_frak_c", "scattered"]
                .iter()
                .map(|s| s.to_string())
                .chain(check_columns(&config.checks))
                .collect();
            let mut row = vec![
                report.e.to_string(),
                report.q.to_string(),
                report.modulus.clone(),
                report.s.to_string(),
                report.c.clone(),
                report.in_frak_c.to_string(),
                report.scattered.to_string(),
            ];
            row.extend(report.checks.values().map(|o| o.name().to_string()));
            render_csv(&header, &[row])?
        }
    };
    Ok(Output { body, regression })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub c: String,
    pub s: i64,
    pub min_distance: usize,
    pub is_mrd: bool,
    pub right_idealizer_order: u64,
    pub left_idealizer_order: u64,
}

impl CodeReport {
    pub fn new(ctx: &FieldCtx, c: Felt, s: i64) -> Result<CodeReport> {
        let code = mrd::build_code(ctx, c, s)?;
        let min_distance = code.min_distance();
        Ok(CodeReport {
            c: ctx.to_hex(c),
            s,
            min_distance,
            is_mrd: code.dim_q() == 6 * (7 - min_distance),
            right_idealizer_order: code.right_idealizer().order(),
            left_idealizer_order: code.left_idealizer().order(),
        })
    }
}

/// Parameters of the code D_{c,s}.
pub fn cmd_code_report(config: &CampaignConfig, c_hex: &str) -> Result<Output> {
    let ctx = config.field()?;
    let c = ctx.parse_hex(c_hex)?;
    let report = config.run(|| CodeReport::new(&ctx, c, config.s))??;
    let q = ctx.q();
    let regression = family::in_frak_c(&ctx, c)
        && !(report.is_mrd && report.right_idealizer_order == q * q && report.left_idealizer_order == ctx.order());
    let body = match config.output_format {
        OutputFormat::Json => render_json(&report)?,
        OutputFormat::Csv => render_csv(
            &["c", "s", "min_distance", "is_mrd", "right_idealizer_order", "left_idealizer_order"]
                .map(String::from),
            &[vec![
                report.c.clone(),
                report.s.to_string(),
                report.min_distance.to_string(),
                report.is_mrd.to_string(),
                report.right_idealizer_order.to_string(),
                report.left_idealizer_order.to_string(),
            ]],
        )?,
    };
    Ok(Output { body, regression })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeRef {
    pub c: String,
    pub s: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub from: CodeRef,
    pub to: CodeRef,
    pub rho: u32,
    pub branch: &'static str,
    /// (A, D) for the same-step branch, (B, C) for the opposite-step branch.
    pub scalars: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivReport {
    pub e: u32,
    pub q: u64,
    pub modulus: String,
    pub frak_c_size: usize,
    pub steps: Vec<u8>,
    pub class_count: usize,
    pub lower_stated: String,
    pub lower_conservative: String,
    pub meets_stated_bound: bool,
    pub meets_conservative_bound: bool,
    pub images_outside: usize,
    pub classes: Vec<Vec<CodeRef>>,
    pub witnesses: Vec<WitnessRecord>,
}

fn code_ref(ctx: &FieldCtx, (c, s): mrd::CodeId) -> CodeRef {
    CodeRef { c: ctx.to_hex(c), s }
}

fn witness_record(ctx: &FieldCtx, from: mrd::CodeId, to: mrd::CodeId, w: &EquivWitness) -> WitnessRecord {
    let (branch, x, y) = match w.branch {
        EquivBranch::SameStep { a, d } => ("same_step", a, d),
        EquivBranch::OppositeStep { b, c } => ("opposite_step", b, c),
    };
    WitnessRecord {
        from: code_ref(ctx, from),
        to: code_ref(ctx, to),
        rho: w.rho,
        branch,
        scalars: [ctx.to_hex(x), ctx.to_hex(y)],
    }
}

/// Equivalence classes of the codes over the admissible set, for both steps or
/// for one.
pub fn cmd_equiv(config: &CampaignConfig, step: Option<i64>) -> Result<Output> {
    let ctx = config.field()?;
    let steps: Vec<u8> = match step {
        None => vec![1, 5],
        Some(s @ (1 | 5)) => vec![s as u8],
        Some(s) => return Err(param(format!("s = {s} not in {{1, 5}}"))),
    };
    let (members, partition) = config.run(|| -> Result<_> {
        let members = family::frak_c(&ctx);
        let partition = mrd::partition_steps(&ctx, &members, &steps)?;
        Ok((members, partition))
    })??;
    let (stated, conservative) = mrd::class_count_bounds(members.len() as u64, ctx.e());
    let count = num_rational::Ratio::from_integer(partition.classes.len() as u64);
    let report = EquivReport {
        e: ctx.e(),
        q: ctx.q(),
        modulus: modulus_hex(&ctx),
        frak_c_size: members.len(),
        steps,
        class_count: partition.classes.len(),
        lower_stated: stated.to_string(),
        lower_conservative: conservative.to_string(),
        meets_stated_bound: count >= stated,
        meets_conservative_bound: count >= conservative,
        images_outside: partition.images_outside,
        classes: partition
            .classes
            .iter()
            .map(|class| class.iter().map(|&id| code_ref(&ctx, id)).collect())
            .collect(),
        witnesses: partition
            .edges
            .iter()
            .map(|(from, to, w)| witness_record(&ctx, *from, *to, w))
            .collect(),
    };
    let regression = !(report.meets_stated_bound && report.meets_conservative_bound);
    let body = match config.output_format {
        OutputFormat::Json => render_json(&report)?,
        OutputFormat::Csv => {
            let header = ["e", "q", "modulus", "frak_c_size", "class_count", "class", "c", "s"].map(String::from);
            let rows: Vec<Vec<String>> = report
                .classes
                .iter()
                .enumerate()
                .flat_map(|(i, class)| {
                    let report = &report;
                    class.iter().map(move |code| {
                        vec![
                            report.e.to_string(),
                            report.q.to_string(),
                            report.modulus.clone(),
                            report.frak_c_size.to_string(),
                            report.class_count.to_string(),
                            i.to_string(),
                            code.c.clone(),
                            code.s.to_string(),
                        ]
                    })
                })
                .collect();
            render_csv(&header, &rows)?
        }
    };
    Ok(Output { body, regression })
}

/// Size and weight distribution of the linear set of U_{c,s}.
pub fn cmd_linset(config: &CampaignConfig, c_hex: &str) -> Result<Output> {
    let ctx = config.field()?;
    let c = ctx.parse_hex(c_hex)?;
    let f = LinPoly::trinomial(&ctx, c, config.s)?;
    let report = config.run(|| linset::linear_set(&Subspace::graph(f)).report())?;
    let regression = family::in_frak_c(&ctx, c) && !report.max_scattered;
    let body = match config.output_format {
        OutputFormat::Json => render_json(&report)?,
        OutputFormat::Csv => {
            let histogram: Vec<String> = report.weight_histogram.iter().map(|(w, n)| format!("{w}:{n}")).collect();
            render_csv(
                &["size", "weight_histogram", "max_scattered"].map(String::from),
                &[vec![report.size.to_string(), histogram.join(";"), report.max_scattered.to_string()]],
            )?
        }
    };
    Ok(Output { body, regression })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    pub rho: u32,
    pub matrix: [[String; 2]; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub family: &'static str,
    pub s: i64,
    pub delta: Option<String>,
    pub witness: Option<WitnessSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSample {
    pub b: String,
    pub c: String,
    pub scattered: bool,
    pub comparisons: Vec<OracleComparison>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub q: u64,
    pub modulus: String,
    pub swap: Option<WitnessSummary>,
    pub lp_deltas: usize,
    pub half_shift_deltas: usize,
    pub candidates: usize,
    pub samples: Vec<OracleSample>,
}

fn witness_summary(ctx: &FieldCtx, w: &scatter::GammaLWitness) -> WitnessSummary {
    WitnessSummary { rho: w.rho, matrix: w.matrix.map(|row| row.map(|x| ctx.to_hex(x))) }
}

/// The subspace {(x, x^q + b x^(q^3) + c x^(q^5))}.
pub fn u_bc(ctx: &FieldCtx, b: Felt, c: Felt) -> Result<Subspace<'_>> {
    Ok(Subspace::graph(LinPoly::new(
        ctx,
        1,
        [Felt::ZERO, Felt::ONE, Felt::ZERO, b, Felt::ZERO, c],
    )?))
}

/// Known-family subspaces at this field: pseudoregulus for s = 1, 5 and every
/// admissible δ of the LP and half-shift families.
pub fn known_family_subspaces(ctx: &FieldCtx) -> Vec<(FamilyKind, i64, Option<Felt>, Subspace<'_>)> {
    let mut out = Vec::new();
    for s in [1, 5] {
        let u = scatter::family_subspace(ctx, FamilyKind::Pseudoregulus, s, Felt::ZERO).expect("valid step");
        out.push((FamilyKind::Pseudoregulus, s, None, u));
    }
    for (kind, steps) in [(FamilyKind::LunardonPolverino, &[1i64, 5][..]), (FamilyKind::HalfShift, &[1, 2, 4, 5][..])] {
        for &s in steps {
            for delta in ctx.nonzero_elements() {
                if let Ok(u) = scatter::family_subspace(ctx, kind, s, delta) {
                    out.push((kind, s, Some(delta), u));
                }
            }
        }
    }
    out
}

fn family_name(kind: FamilyKind) -> &'static str {
    match kind {
        FamilyKind::Pseudoregulus => "pseudoregulus",
        FamilyKind::LunardonPolverino => "lunardon_polverino",
        FamilyKind::HalfShift => "half_shift",
    }
}

/// Brute-force ΓL(2, 2^6) runs: the coordinate swap between the two
/// pseudoregulus subspaces, then a seeded sample of U_{b,c} with b != 0 and
/// c outside {0, 1, b^(q^2+1)} compared against every known-family subspace.
pub fn cmd_oracle_q2(config: &CampaignConfig) -> Result<Output> {
    let ctx = config.field()?;
    if ctx.e() != 1 {
        return Err(Error::Feasibility(format!("the ΓL oracle needs q = 2, got e = {}", ctx.e())));
    }
    let report = config.run(|| -> Result<OracleReport> {
        let a1 = scatter::family_subspace(&ctx, FamilyKind::Pseudoregulus, 1, Felt::ZERO)?;
        let a5 = scatter::family_subspace(&ctx, FamilyKind::Pseudoregulus, 5, Felt::ZERO)?;
        let swap = scatter::gammal_equivalent_bruteforce(&a1, &a5)?.map(|w| witness_summary(&ctx, &w));

        let q2 = ctx.q() * ctx.q();
        let mut candidates = Vec::new();
        for b in ctx.nonzero_elements() {
            let excluded = ctx.pow(b, q2 + 1);
            for c in ctx.nonzero_elements() {
                if c != Felt::ONE && c != excluded {
                    candidates.push((b, c));
                }
            }
        }
        let chosen = config.sample(&candidates);
        let families = known_family_subspaces(&ctx);
        let samples = chosen
            .par_iter()
            .map(|&(b, c)| -> Result<OracleSample> {
                let u = u_bc(&ctx, b, c)?;
                let mut comparisons = Vec::new();
                for (kind, s, delta, v) in &families {
                    let witness = scatter::gammal_equivalent_bruteforce(&u, v)?;
                    comparisons.push(OracleComparison {
                        family: family_name(*kind),
                        s: *s,
                        delta: delta.map(|d| ctx.to_hex(d)),
                        witness: witness.map(|w| witness_summary(&ctx, &w)),
                    });
                }
                Ok(OracleSample { b: ctx.to_hex(b), c: ctx.to_hex(c), scattered: u.is_scattered(), comparisons })
            })
            .collect::<Result<Vec<_>>>()?;
        let count = |kind| families.iter().filter(|(k, ..)| *k == kind).count();
        Ok(OracleReport {
            q: ctx.q(),
            modulus: modulus_hex(&ctx),
            swap,
            lp_deltas: count(FamilyKind::LunardonPolverino),
            half_shift_deltas: count(FamilyKind::HalfShift),
            candidates: candidates.len(),
            samples,
        })
    })??;
    let regression = report.swap.is_none()
        || report.samples.iter().flat_map(|s| &s.comparisons).any(|c| c.witness.is_some());
    let body = match config.output_format {
        OutputFormat::Json => render_json(&report)?,
        OutputFormat::Csv => {
            let header = ["b", "c", "family", "s", "delta", "witness_found"].map(String::from);
            let rows: Vec<Vec<String>> = report
                .samples
                .iter()
                .flat_map(|sample| {
                    sample.comparisons.iter().map(move |cmp| {
                        vec![
                            sample.b.clone(),
                            sample.c.clone(),
                            cmp.family.to_string(),
                            cmp.s.to_string(),
                            cmp.delta.clone().unwrap_or_default(),
                            cmp.witness.is_some().to_string(),
                        ]
                    })
                })
                .collect();
            render_csv(&header, &rows)?
        }
    };
    Ok(Output { body, regression })
}
