//! Serializable results for the command-line tool.
//!
//! Every builder returns an [`OutputRecord`] whose embedded dimension has
//! already been re-checked against its decomposition.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chartab::{character_table, format_entry, CharDecomp, IrrepLabel};
use crate::context::{ContextOptions, HurwitzContext};
use crate::cyclo::{rational_to_string, Cyc};
use crate::error::{Error, Result};
use crate::galois::{fast_ld, fast_ld_uncorrected};
use crate::induce::{induced_closed_form, induced_oracle, InducedQuery};
use crate::psl2::{classify_q, ClassLabel, QInfo};
use crate::rrmod::{
    canonical_discrepancy, canonical_module, degeq_table_divergences, equivariant_degree, h1,
    ld_table_divergences, ramification_module, riemann_roch, riemann_roch_unchecked, Divisor,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompEntry {
    pub label: IrrepLabel,
    pub dimension: u64,
    pub multiplicity: i64,
}

pub fn entries(d: &CharDecomp) -> Vec<DecompEntry> {
    d.entries()
        .into_iter()
        .map(|(label, dimension, multiplicity)| DecompEntry {
            label,
            dimension,
            multiplicity,
        })
        .collect()
}

fn entries_dim(e: &[DecompEntry]) -> i128 {
    e.iter()
        .map(|x| x.multiplicity as i128 * x.dimension as i128)
        .sum()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scalars {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i128>,
    /// `sum multiplicity * dimension` of the decomposition.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<i128>,
}

/// How a decomposition was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Oracle,
    BruteForce,
    Assembly,
    FastFormula,
    CaseFormula,
    CharacterTable,
    Residues,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DiscrepancyStatus {
    /// A known inconsistency in a published formula, reproduced on purpose.
    Expected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub status: DiscrepancyStatus,
    pub id: String,
    pub detail: String,
}

impl Discrepancy {
    pub fn expected(id: &str, detail: impl Into<String>) -> Self {
        Discrepancy {
            status: DiscrepancyStatus::Expected,
            id: id.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub status: SuiteStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: IrrepLabel,
    pub dimension: u64,
    /// `[N] c0 + c1*z^e1 + ...` in the basis of the N-th roots of unity.
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub conductor: u64,
    pub classes: Vec<ClassLabel>,
    pub class_sizes: Vec<u64>,
    pub rows: Vec<TableRow>,
    pub orthogonality: bool,
}

/// Parses an entry written by [`format_entry`].
pub fn parse_entry(s: &str) -> Result<Cyc> {
    match s.strip_prefix('[') {
        Some(rest) => {
            let (n, body) = rest
                .split_once("] ")
                .ok_or_else(|| Error::Parse(format!("bad entry {s:?}")))?;
            let n = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad conductor in {s:?}")))?;
            Cyc::parse(n, body)
        }
        None => Cyc::parse(1, s),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub q: u64,
    pub command: String,
    pub admissible: bool,
    pub inputs: BTreeMap<String, Value>,
    pub decomposition: Vec<DecompEntry>,
    pub scalars: Scalars,
    pub provenance: Vec<Provenance>,
    pub discrepancies: Vec<Discrepancy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residues: Option<QInfo>,
    /// Named sub-decompositions, e.g. the three parts of the ramification module.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parts: BTreeMap<String, Vec<DecompEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<SuiteResult>>,
}

impl OutputRecord {
    fn new(ctx: &HurwitzContext, command: &str) -> Self {
        OutputRecord {
            q: ctx.q(),
            command: command.to_string(),
            admissible: true,
            inputs: BTreeMap::new(),
            decomposition: Vec::new(),
            scalars: Scalars {
                genus: Some(ctx.genus()),
                group_order: Some(ctx.order()),
                ..Default::default()
            },
            provenance: Vec::new(),
            discrepancies: Vec::new(),
            reason: None,
            residues: None,
            parts: BTreeMap::new(),
            table: None,
            suites: None,
        }
    }

    pub(crate) fn verify_report(ctx: &HurwitzContext, deep: bool) -> Self {
        OutputRecord::new(ctx, "verify").input("deep", deep)
    }

    fn with_decomposition(mut self, d: &CharDecomp) -> Self {
        self.decomposition = entries(d);
        self.scalars.dim = Some(d.dim());
        self
    }

    fn input(mut self, key: &str, v: impl Serialize) -> Self {
        self.inputs.insert(
            key.to_string(),
            serde_json::to_value(v).expect("plain data serializes"),
        );
        self
    }

    /// The stored `dim` equals `sum multiplicity * dimension`.
    pub fn check_dimension(&self) -> Result<()> {
        if let Some(dim) = self.scalars.dim {
            let sum = entries_dim(&self.decomposition);
            if sum != dim {
                return Err(Error::IdentityFailure(format!(
                    "record dim {dim} but entries sum to {sum}"
                )));
            }
        }
        Ok(())
    }

    fn checked(self) -> Result<Self> {
        self.check_dimension()?;
        Ok(self)
    }

    /// True unless some suite failed.
    pub fn passed(&self) -> bool {
        self.suites
            .as_ref()
            .is_none_or(|s| s.iter().all(|x| x.status != SuiteStatus::Fail))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    /// Plain-text rendering for people.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command  {}", self.command);
        let _ = writeln!(out, "q        {}", self.q);
        if !self.admissible {
            let _ = writeln!(
                out,
                "verdict  inadmissible: {}",
                self.reason.as_deref().unwrap_or("")
            );
            return out;
        }
        for (k, v) in &self.inputs {
            match serde_json::from_value::<Divisor>(v.clone()) {
                Ok(d) => writeln!(out, "{k:<8} {d}"),
                Err(_) => writeln!(out, "{k:<8} {v}"),
            }
            .ok();
        }
        let s = &self.scalars;
        for (k, v) in [
            ("genus", s.genus.map(|x| x as i128)),
            ("|G|", s.group_order.map(|x| x as i128)),
            ("degree", s.degree),
            ("dim", s.dim),
        ] {
            if let Some(v) = v {
                let _ = writeln!(out, "{k:<8} {v}");
            }
        }
        if let Some(r) = &self.residues {
            let _ = writeln!(
                out,
                "residues q = {}^{}; mod 4 {}, 3 {}, 7 {}, 8 {}, 12 {}, 28 {}, 84 {}, 168 {}",
                r.p, r.n, r.mod4, r.mod3, r.mod7, r.mod8, r.mod12, r.mod28, r.mod84, r.mod168
            );
        }
        if !self.provenance.is_empty() {
            let names: Vec<String> = self.provenance.iter().map(enum_name).collect();
            let _ = writeln!(out, "via      {}", names.join(", "));
        }
        if !self.decomposition.is_empty() {
            out.push('\n');
            write_entries(&mut out, &self.decomposition);
        }
        for (name, part) in &self.parts {
            let _ = writeln!(out, "\n{name} (dim {})", entries_dim(part));
            write_entries(&mut out, part);
        }
        if let Some(t) = &self.table {
            let _ = writeln!(
                out,
                "\nconductor {}  orthogonality {}",
                t.conductor, t.orthogonality
            );
            let mut header = String::from("irrep\tdim");
            for (c, n) in t.classes.iter().zip(&t.class_sizes) {
                let _ = write!(header, "\t{c}#{n}");
            }
            let _ = writeln!(out, "{header}");
            for row in &t.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}",
                    row.label,
                    row.dimension,
                    row.values.join("\t")
                );
            }
        }
        if let Some(suites) = &self.suites {
            out.push('\n');
            for s in suites {
                let _ = writeln!(
                    out,
                    "{:<8} {:<22} {}",
                    enum_name(&s.status).to_uppercase(),
                    s.name,
                    s.detail
                );
            }
        }
        for d in &self.discrepancies {
            let _ = writeln!(out, "{} {}: {}", enum_name(&d.status), d.id, d.detail);
        }
        out
    }
}

fn enum_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

fn write_entries(out: &mut String, e: &[DecompEntry]) {
    let _ = writeln!(out, "{:<8} {:>10} {:>14}", "irrep", "dim", "multiplicity");
    for x in e {
        let _ = writeln!(
            out,
            "{:<8} {:>10} {:>14}",
            x.label.to_string(),
            x.dimension,
            x.multiplicity
        );
    }
}

/// Admissibility verdict. Never fails: rejection is a record with
/// `admissible = false` and the violated condition.
pub fn classify_record(q: u64) -> OutputRecord {
    match HurwitzContext::new(q) {
        Ok(ctx) => {
            let mut r = OutputRecord::new(&ctx, "classify");
            r.residues = Some(ctx.info().clone());
            r.provenance = vec![Provenance::Residues];
            r
        }
        Err(e) => OutputRecord {
            q,
            command: "classify".into(),
            admissible: false,
            inputs: BTreeMap::new(),
            decomposition: Vec::new(),
            scalars: Scalars::default(),
            provenance: vec![Provenance::Residues],
            discrepancies: Vec::new(),
            reason: Some(match classify_q(q) {
                Err(Error::Inadmissible { reason, .. }) => reason.to_string(),
                _ => e.to_string(),
            }),
            residues: None,
            parts: BTreeMap::new(),
            table: None,
            suites: None,
        },
    }
}

fn divergence_entries(list: &[crate::rrmod::TableDivergence], id: &str) -> Vec<Discrepancy> {
    list.iter()
        .map(|t| {
            Discrepancy::expected(
                id,
                format!(
                    "D = {}: {} table {} vs assembled {}",
                    t.divisor, t.label, t.table, t.assembled
                ),
            )
        })
        .collect()
}

/// `L(D)`. With `fast`, through the invariant-dimension formula (needs
/// `r7 mod 7` in {0, 3, 6}). With `unsafe_degree`, the non-speciality guard
/// is skipped and the result is only the Euler characteristic.
pub fn ld_record(
    ctx: &HurwitzContext,
    d: Divisor,
    fast: bool,
    unsafe_degree: bool,
) -> Result<OutputRecord> {
    let degree = d.degree(ctx.order());
    let (value, provenance) = if fast {
        (fast_ld(ctx, d)?, Provenance::FastFormula)
    } else if unsafe_degree {
        (riemann_roch_unchecked(ctx, d)?, Provenance::Assembly)
    } else {
        (riemann_roch(ctx, d)?, Provenance::Assembly)
    };
    let mut r = OutputRecord::new(ctx, "ld")
        .input("divisor", d)
        .with_decomposition(&value);
    if unsafe_degree && !fast {
        r = r.input("unsafe", true);
    }
    r.scalars.degree = Some(degree);
    let want = degree + 1 - ctx.genus() as i128;
    if degree > 0 && value.dim() != want {
        return Err(Error::IdentityFailure(format!(
            "dim {} but deg + 1 - g = {want}",
            value.dim()
        )));
    }
    r.provenance = vec![provenance];
    if d.reduced().r2 == 1 {
        r.discrepancies =
            divergence_entries(&ld_table_divergences(ctx, d)?, "ld-table-r2-coefficient");
    }
    r.checked()
}

pub fn degeq_record(ctx: &HurwitzContext, d: Divisor) -> Result<OutputRecord> {
    let value = equivariant_degree(ctx, d)?;
    let degree = d.degree(ctx.order());
    if value.dim() != degree {
        return Err(Error::IdentityFailure(format!(
            "dim deg_eq {} but deg {degree}",
            value.dim()
        )));
    }
    let mut r = OutputRecord::new(ctx, "degeq")
        .input("divisor", d)
        .with_decomposition(&value);
    r.scalars.degree = Some(degree);
    r.provenance = vec![Provenance::ClosedForm, Provenance::Assembly];
    r.discrepancies = divergence_entries(
        &degeq_table_divergences(ctx, d)?,
        "degeq-table-r2-coefficient",
    );
    r.checked()
}

/// `L(K)` with `H^1 = 2 L(K)` as a part.
pub fn canonical_record(ctx: &HurwitzContext) -> Result<OutputRecord> {
    let value = canonical_module(ctx)?;
    let mut r = OutputRecord::new(ctx, "canonical").with_decomposition(&value);
    r.provenance = vec![Provenance::CaseFormula];
    r.parts.insert("h1".into(), entries(&h1(ctx)?));
    let disc = canonical_discrepancy(ctx)?;
    if disc.is_single_trivial() {
        r.discrepancies.push(canonical_discrepancy_entry());
    } else {
        return Err(Error::IdentityFailure(format!(
            "L(K) - (Gamma - C[G]) = {}, expected one Triv",
            disc.difference
        )));
    }
    r.checked()
}

fn canonical_discrepancy_entry() -> Discrepancy {
    Discrepancy::expected(
        "canonical-vs-gamma-minus-regular",
        "L(K) = (Gamma - C[G]) + Triv: Gamma - C[G] has Triv multiplicity -1 and dim g - 1, \
         the case formula has dim g",
    )
}

pub fn gamma_record(ctx: &HurwitzContext) -> Result<OutputRecord> {
    let m = ramification_module(ctx)?;
    let mut r = OutputRecord::new(ctx, "gamma").with_decomposition(&m.total);
    r.provenance = vec![Provenance::ClosedForm, Provenance::CaseFormula];
    for (name, part) in [("h2", &m.h2), ("h3", &m.h3), ("h7", &m.h7)] {
        r.parts.insert(name.into(), entries(part));
    }
    r.checked()
}

pub fn induced_record(
    ctx: &HurwitzContext,
    query: InducedQuery,
    oracle: bool,
) -> Result<OutputRecord> {
    let value = induced_closed_form(ctx, query)?;
    let mut r = OutputRecord::new(ctx, "induced")
        .input("l", query.l)
        .input("k", query.k);
    r.provenance = vec![Provenance::ClosedForm];
    if oracle {
        let o = induced_oracle(ctx, query)?;
        if o != value {
            return Err(Error::IdentityFailure(format!(
                "closed form {value} but oracle {o}"
            )));
        }
        r.provenance.push(Provenance::Oracle);
    }
    let want = (ctx.order() / query.l) as i128;
    if value.dim() != want {
        return Err(Error::IdentityFailure(format!(
            "dim {} but |G|/l = {want}",
            value.dim()
        )));
    }
    r.with_decomposition(&value).checked()
}

pub fn chartable_record(ctx: &HurwitzContext) -> Result<OutputRecord> {
    let t = character_table(ctx)?;
    let orthogonality =
        t.check_row_orthogonality().is_ok() && t.check_column_orthogonality().is_ok();
    let rows = t
        .irreps
        .iter()
        .zip(&t.values)
        .map(|(&(label, dimension), vals)| TableRow {
            label,
            dimension,
            values: vals.iter().map(format_entry).collect(),
        })
        .collect();
    let mut r = OutputRecord::new(ctx, "chartable");
    r.provenance = vec![Provenance::CharacterTable];
    r.table = Some(TableRecord {
        conductor: ctx.conductor(),
        classes: t.classes.clone(),
        class_sizes: t.class_sizes.clone(),
        rows,
        orthogonality,
    });
    if !orthogonality {
        return Err(Error::IdentityFailure(format!(
            "orthogonality fails for q = {}",
            ctx.q()
        )));
    }
    r.checked()
}

/// A context able to evaluate every character value (the trace reading of
/// the Gauss periods for prime cubes).
pub fn full_context(q: u64) -> Result<HurwitzContext> {
    HurwitzContext::with_options(
        q,
        ContextOptions {
            trace_gauss_periods: true,
            ..Default::default()
        },
    )
}

/// Triv multiplicity of `L(D)` by the printed and the corrected fast formula.
pub(crate) fn rational_triv(ctx: &HurwitzContext, d: Divisor) -> Result<(String, i64)> {
    let printed = fast_ld_uncorrected(ctx, d)?.get(IrrepLabel::Triv);
    let corrected = fast_ld(ctx, d)?.get(IrrepLabel::Triv);
    Ok((rational_to_string(&printed), corrected))
}
