//! Self-verification of every identity the library relies on, for one q.

use std::time::Instant;

use crate::chartab::{char_value, character_table, irreps, CharDecomp, IrrepLabel};
use crate::context::HurwitzContext;
use crate::error::{Error, Result};
use crate::galois::{
    check_permutation, fast_ld, generators, invariant_outside_sufficient_range, is_invariant,
};
use crate::induce::{
    induced_brute_force, induced_closed_form, induced_h3_as_printed, induced_oracle, InducedQuery,
};
use crate::psl2::{enumeration_cap, ClassLabel};
use crate::record::{
    full_context, rational_triv, Discrepancy, OutputRecord, Provenance, SuiteResult, SuiteStatus,
};
use crate::rrmod::{
    base_m, canonical_discrepancy, canonical_module, degeq_table_divergences, equivariant_degree,
    h1, ld_table_divergences, ramification_base_m, ramification_from_invariants,
    ramification_module, riemann_roch, Divisor,
};

/// Orthogonality is checked in full up to this q; beyond it only the
/// dimension identities of the table are checked.
pub const ORTHOGONALITY_MAX_Q: u64 = 200;

/// `r1 in {0,1}, r2 in {0,1}, r3 in {0,1,2}, r7 in {0..6}` with positive degree.
pub fn divisor_sweep(ctx: &HurwitzContext) -> Vec<Divisor> {
    let mut out = Vec::new();
    for r1 in 0..2 {
        for r2 in 0..2 {
            for r3 in 0..3 {
                for r7 in 0..7 {
                    let d = Divisor::new(r1, r2, r3, r7);
                    if d.degree(ctx.order()) > 0 {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::IdentityFailure(msg()))
    }
}

pub fn check_constants(ctx: &HurwitzContext) -> Result<String> {
    let (q, order, g) = (ctx.q() as u128, ctx.order() as u128, ctx.genus() as u128);
    ensure(order == q * (q * q - 1) / 2, || format!("|G| = {order}"))?;
    ensure(168 * (g - 1) == q * (q * q - 1), || format!("g = {g}"))?;
    ensure(order == 84 * (g - 1), || "|G| != 84(g - 1)".into())?;
    let m = base_m(ctx.q())?;
    Ok(format!(
        "|G| = {order}, g = {g}, m = {m}, V in Gamma {}",
        ramification_base_m(ctx)
    ))
}

pub fn check_character_table(ctx: &HurwitzContext, orthogonality: bool) -> Result<String> {
    let q = ctx.q();
    let irr = irreps(q);
    ensure(irr.len() as u64 == 3 + (q - 1) / 2, || {
        format!("{} irreducibles", irr.len())
    })?;
    let squares: u128 = irr.iter().map(|&(_, d)| d as u128 * d as u128).sum();
    ensure(squares == ctx.order() as u128, || {
        format!("sum dim^2 = {squares}")
    })?;
    for &(l, d) in &irr {
        let v = char_value(ctx, l, ClassLabel::Identity)?;
        ensure(v.to_i64() == Some(d as i64), || format!("chi_{l}(1) = {v}"))?;
    }
    if !orthogonality {
        return Ok(format!(
            "{} irreducibles, sum dim^2 = |G|; orthogonality not run",
            irr.len()
        ));
    }
    let t = character_table(ctx)?;
    t.check_row_orthogonality()?;
    t.check_column_orthogonality()?;
    for row in &t.values {
        for v in row {
            ensure(v.is_algebraic_integer(), || {
                format!("{v} is not an algebraic integer")
            })?;
        }
    }
    Ok(format!(
        "{} irreducibles, both orthogonality relations exact",
        irr.len()
    ))
}

pub fn check_induced_oracle(ctx: &HurwitzContext) -> Result<String> {
    for query in InducedQuery::all() {
        let c = induced_closed_form(ctx, query)?;
        let o = induced_oracle(ctx, query)?;
        ensure(c == o, || {
            format!(
                "l = {}, k = {}: closed form {c} but oracle {o}",
                query.l, query.k
            )
        })?;
        ensure(c.dim() == (ctx.order() / query.l) as i128, || {
            format!("dim Ind = {}", c.dim())
        })?;
        ensure(c.get(IrrepLabel::Triv) == 0, || {
            "Triv in an induced character".into()
        })?;
    }
    Ok("closed form = reciprocity oracle for all 9 (l, k)".into())
}

pub fn check_induced_brute_force(ctx: &HurwitzContext) -> Result<String> {
    for query in InducedQuery::all() {
        let c = induced_closed_form(ctx, query)?;
        let b = induced_brute_force(ctx, query)?;
        ensure(c == b, || {
            format!(
                "l = {}, k = {}: closed form {c} but brute force {b}",
                query.l, query.k
            )
        })?;
    }
    Ok(format!(
        "closed form = explicit induction over all {} elements",
        ctx.order()
    ))
}

pub fn check_ramification(ctx: &HurwitzContext) -> Result<String> {
    // ramification_module itself compares against the case formula
    let m = ramification_module(ctx)?;
    let inv = ramification_from_invariants(ctx)?;
    ensure(m.total == inv, || {
        format!(
            "from invariant dimensions {inv} but compositional {}",
            m.total
        )
    })?;
    let want = 85 * (ctx.genus() as i128 - 1);
    ensure(m.total.dim() == want, || {
        format!("dim Gamma = {}", m.total.dim())
    })?;
    ensure(m.total.get(IrrepLabel::Triv) == 0, || {
        "Triv in Gamma".into()
    })?;
    ensure(&(&m.h2 + &m.h3) + &m.h7 == m.total, || {
        "parts do not sum to Gamma".into()
    })?;
    Ok(format!("three paths agree, dim Gamma = {want}"))
}

pub fn check_riemann_roch(ctx: &HurwitzContext) -> Result<String> {
    let sweep = divisor_sweep(ctx);
    for &d in &sweep {
        riemann_roch(ctx, d)?;
    }
    let gamma = ramification_module(ctx)?.total;
    let k = equivariant_degree(ctx, Divisor::CANONICAL)?;
    let want = &CharDecomp::regular(ctx.q()).scale(-2) + &gamma.scale(2);
    ensure(k == want, || format!("deg_eq(K) = {k}"))?;
    Ok(format!(
        "{} divisors: dim = deg + 1 - g, all multiplicities >= 0",
        sweep.len()
    ))
}

pub fn check_canonical(ctx: &HurwitzContext) -> Result<String> {
    let k = canonical_module(ctx)?;
    let g = ctx.genus() as i128;
    ensure(k.dim() == g && k.is_nonnegative(), || format!("L(K) = {k}"))?;
    ensure(h1(ctx)?.dim() == 2 * g, || "dim H^1 != 2g".into())?;
    ensure(is_invariant(ctx, &k)?.is_none(), || {
        "L(K) is not Galois-invariant".into()
    })?;
    let disc = canonical_discrepancy(ctx)?;
    ensure(disc.is_single_trivial(), || {
        format!("L(K) - (Gamma - C[G]) = {}", disc.difference)
    })?;
    Ok(format!("dim L(K) = g = {g}, dim H^1 = {}", 2 * g))
}

pub fn check_galois(ctx: &HurwitzContext) -> Result<String> {
    let gens = generators(ctx);
    for &j in &gens {
        check_permutation(ctx, j as i64)?;
    }
    check_permutation(ctx, -1)?;
    let gamma = ramification_module(ctx)?.total;
    if let Some(w) = is_invariant(ctx, &gamma)? {
        return Err(Error::IdentityFailure(format!(
            "Gamma not invariant: {w:?}"
        )));
    }
    let mut fast = 0;
    for d in divisor_sweep(ctx) {
        if matches!(d.r7, 0 | 3 | 6) {
            if let Some(w) = is_invariant(ctx, &equivariant_degree(ctx, d)?)? {
                return Err(Error::IdentityFailure(format!(
                    "deg_eq{d} not invariant: {w:?}"
                )));
            }
            let f = fast_ld(ctx, d)?;
            let a = riemann_roch(ctx, d)?;
            ensure(f == a, || format!("D = {d}: fast {f} but assembled {a}"))?;
            fast += 1;
        }
    }
    let extra = invariant_outside_sufficient_range(ctx)?;
    Ok(format!(
        "{} generators; Gamma invariant; fast = assembled on {fast} divisors; \
         {} invariant divisors with r7 outside {{0, 3, 6}}",
        gens.len(),
        extra.len()
    ))
}

/// The modifier tables agree with the assembled modules whenever `r2 = 0`.
pub fn check_tables(ctx: &HurwitzContext) -> Result<String> {
    let mut n = 0;
    for d in divisor_sweep(ctx).into_iter().filter(|d| d.r2 == 0) {
        let a = degeq_table_divergences(ctx, d)?;
        let b = ld_table_divergences(ctx, d)?;
        ensure(a.is_empty() && b.is_empty(), || {
            format!("D = {d}: {a:?} {b:?}")
        })?;
        n += 1;
    }
    Ok(format!("tables match on {n} divisors with r2 = 0"))
}

/// Known inconsistencies in published formulas, reproduced at this q.
pub fn expected_discrepancies(ctx: &HurwitzContext) -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    let d2 = Divisor::new(0, 1, 0, 0);
    for t in degeq_table_divergences(ctx, d2)? {
        out.push(Discrepancy::expected(
            "degeq-table-r2-coefficient",
            format!(
                "D = {}: {} table {} vs assembled {}",
                t.divisor, t.label, t.table, t.assembled
            ),
        ));
    }
    let mut r2_rows = 0;
    for d in divisor_sweep(ctx).into_iter().filter(|d| d.r2 == 1) {
        r2_rows += (!ld_table_divergences(ctx, d)?.is_empty()) as usize;
    }
    if r2_rows > 0 {
        out.push(Discrepancy::expected(
            "ld-table-r2-coefficient",
            format!(
                "{r2_rows} divisors with r2 = 1 where the L(D) table disagrees with the assembly"
            ),
        ));
    }
    let disc = canonical_discrepancy(ctx)?;
    if disc.is_single_trivial() {
        out.push(Discrepancy::expected(
            "canonical-vs-gamma-minus-regular",
            format!(
                "Gamma - C[G] has dim {} and Triv multiplicity {}; L(K) has dim {}",
                disc.euler_characteristic.dim(),
                disc.euler_characteristic.get(IrrepLabel::Triv),
                disc.case_formula.dim()
            ),
        ));
    }
    if let Some(printed) = induced_h3_as_printed(ctx)? {
        let o = induced_oracle(ctx, InducedQuery::new(3, 1)?)?;
        if printed != o {
            out.push(Discrepancy::expected(
                "induced-h3-q5mod12-bracket",
                format!(
                    "second bracket read as beta(omega) = 1 gives dim {} (want {}); beta(omega) != 1 matches the oracle",
                    printed.dim(),
                    ctx.order() / 3
                ),
            ));
        }
    }
    let (printed, m) = (base_m(ctx.q())? as i64, ramification_base_m(ctx));
    if printed != m {
        out.push(Discrepancy::expected(
            "base-multiplicity-q-1-83-mod-84",
            format!("m = q + floor/ceil(q/84) gives {printed}; V occurs {m} times in the ramification module"),
        ));
    }
    let h2 = induced_closed_form(ctx, InducedQuery::new(2, 1)?)?;
    let v = h2.get(IrrepLabel::V);
    let gaps: Vec<i64> = h2
        .iter()
        .filter(|(l, _)| matches!(l, IrrepLabel::W(_) | IrrepLabel::X(_)))
        .map(|(_, m)| (m - v).abs())
        .filter(|&g| g != 0)
        .collect();
    if let Some(&g) = gaps.first() {
        out.push(Discrepancy::expected(
            "induced-h2-gap",
            format!(
                "Ind theta_2: summands off the V multiplicity differ from it by {g}, not by one"
            ),
        ));
    }
    let (mod3, mod7) = (ctx.info().mod3, ctx.info().mod7);
    if (mod3 == 1) != (mod7 == 1) {
        out.push(Discrepancy::expected(
            "h7-generator-case-label",
            format!("q = {mod3} mod 3 but {mod7} mod 7; the generator of H_7 follows q mod 7"),
        ));
    }
    let (printed, corrected) = rational_triv(ctx, Divisor::new(1, 0, 0, 0))?;
    out.push(Discrepancy::expected(
        "fast-formula-leading-coefficient",
        format!("D = (1, 0, 0, 0): leading 1 + r1 + ... gives Triv {printed}; r1 + ... - 1/2 gives {corrected}"),
    ));
    Ok(out)
}

fn run(name: &str, f: impl FnOnce() -> Result<String>) -> SuiteResult {
    let start = Instant::now();
    let (status, detail) = match f() {
        Ok(d) => (SuiteStatus::Pass, d),
        Err(e) => (SuiteStatus::Fail, e.to_string()),
    };
    SuiteResult {
        name: name.into(),
        status,
        detail: format!("{detail} ({:.2?})", start.elapsed()),
    }
}

fn skipped(name: &str, why: String) -> SuiteResult {
    SuiteResult {
        name: name.into(),
        status: SuiteStatus::Skipped,
        detail: why,
    }
}

/// Runs every suite for q. With `deep`, also enumerates G, failing with
/// [`Error::EnumerationCap`] when `|G|` exceeds the cap.
pub fn verify(q: u64, deep: bool) -> Result<OutputRecord> {
    let ctx = full_context(q)?;
    let cap = enumeration_cap();
    if deep && ctx.order() > cap {
        return Err(Error::EnumerationCap {
            order: ctx.order(),
            cap,
        });
    }
    let c = &ctx;
    let mut suites = vec![
        run("constants", || check_constants(c)),
        run("character-table", || {
            check_character_table(c, q <= ORTHOGONALITY_MAX_Q)
        }),
        run("induced-oracle", || check_induced_oracle(c)),
    ];
    suites.push(if deep {
        run("induced-brute-force", || check_induced_brute_force(c))
    } else if ctx.order() > cap {
        skipped(
            "induced-brute-force",
            format!("|G| = {} exceeds the enumeration cap {cap}", ctx.order()),
        )
    } else {
        skipped("induced-brute-force", "enumeration runs with --deep".into())
    });
    suites.extend([
        run("ramification", || check_ramification(c)),
        run("riemann-roch", || check_riemann_roch(c)),
        run("canonical", || check_canonical(c)),
        run("galois", || check_galois(c)),
        run("modifier-tables", || check_tables(c)),
    ]);
    let mut record = OutputRecord::verify_report(&ctx, deep);
    record.provenance = vec![
        Provenance::ClosedForm,
        Provenance::Oracle,
        Provenance::Assembly,
    ];
    if deep {
        record.provenance.push(Provenance::BruteForce);
    }
    record.discrepancies = expected_discrepancies(&ctx)?;
    record.suites = Some(suites);
    Ok(record)
}
