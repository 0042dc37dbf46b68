//! Ramification module, equivariant degree, Riemann-Roch spaces and the
//! canonical module of a Hurwitz curve with automorphism group PSL(2, q).
//!
//! Everything is assembled from the closed-form induced characters; the
//! consolidated case formulas (ramification module, canonical module) are
//! cross-checked against that assembly, and the consolidated modifier tables
//! are evaluated only as diagnostics.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chartab::{irreps, CharDecomp, IrrepLabel, RationalDecomp};
use crate::context::HurwitzContext;
use crate::cyclo::{rational_to_string, RootOfUnity};
use crate::error::{Error, Result};
use crate::induce::{fixed_dim, induced_closed_form, special_value, InducedQuery};
use crate::psl2::classify_q;

/// `r1 D1 + r2 D2 + r3 D3 + r7 D7`, where `Di` is the reduced orbit whose
/// points have stabilizers of order `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Divisor {
    pub r1: i64,
    pub r2: i64,
    pub r3: i64,
    pub r7: i64,
}

impl Divisor {
    pub const fn new(r1: i64, r2: i64, r3: i64, r7: i64) -> Self {
        Divisor { r1, r2, r3, r7 }
    }

    /// The canonical divisor `-2 D1 + D2 + 2 D3 + 6 D7`.
    pub const CANONICAL: Divisor = Divisor::new(-2, 1, 2, 6);

    /// `r1 |G| + r2 |G|/2 + r3 |G|/3 + r7 |G|/7`.
    pub fn degree(&self, order: u64) -> i128 {
        let g = order as i128;
        self.r1 as i128 * g
            + self.r2 as i128 * g / 2
            + self.r3 as i128 * g / 3
            + self.r7 as i128 * g / 7
    }

    /// Moves whole multiples of `i` in `ri` into `r1`, leaving `0 <= ri < i`.
    pub fn reduced(&self) -> Divisor {
        let (a2, r2) = (self.r2.div_euclid(2), self.r2.rem_euclid(2));
        let (a3, r3) = (self.r3.div_euclid(3), self.r3.rem_euclid(3));
        let (a7, r7) = (self.r7.div_euclid(7), self.r7.rem_euclid(7));
        Divisor {
            r1: self.r1 + a2 + a3 + a7,
            r2,
            r3,
            r7,
        }
    }

    pub fn is_reduced(&self) -> bool {
        (0..2).contains(&self.r2) && (0..3).contains(&self.r3) && (0..7).contains(&self.r7)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.r1, self.r2, self.r3, self.r7)
    }
}

/// The ramification module and its contributions from `H_2`, `H_3`, `H_7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationModule {
    pub total: CharDecomp,
    pub h2: CharDecomp,
    pub h3: CharDecomp,
    pub h7: CharDecomp,
}

fn induced(ctx: &HurwitzContext, l: u64, k: u64) -> Result<CharDecomp> {
    let query = InducedQuery::new(l, k)?;
    ctx.cached_induced(l, k, || induced_closed_form(ctx, query))
}

/// `m = q + floor(q/84)` or `q + ceil(q/84)` depending on q mod 84.
pub fn base_m(q: u64) -> Result<u64> {
    let info = classify_q(q)?;
    match info.mod84 {
        1 | 13 | 29 | 43 => Ok(q + q / 84),
        41 | 55 | 71 | 83 => Ok(q + q.div_ceil(84)),
        r => Err(Error::IdentityFailure(format!(
            "q = {q} has residue {r} mod 84"
        ))),
    }
}

/// `(N_alpha, N_beta)`: for each `W` (resp. `X`), the number of special
/// elements `i, omega, phi` in `F^x` (resp. `T`) where the character is not 1.
pub fn n_values(
    ctx: &HurwitzContext,
) -> Result<(BTreeMap<IrrepLabel, u8>, BTreeMap<IrrepLabel, u8>)> {
    let mut na = BTreeMap::new();
    let mut nb = BTreeMap::new();
    for (label, _) in irreps(ctx.q()) {
        let target = match label {
            IrrepLabel::W(_) => &mut na,
            IrrepLabel::X(_) => &mut nb,
            _ => continue,
        };
        let mut n = 0u8;
        for l in [2, 3, 7] {
            if let Some(v) = special_value(ctx, label, l)? {
                n += u8::from(!v.is_one());
            }
        }
        target.insert(label, n);
    }
    Ok((na, nb))
}

/// Ramification module as `1/2 Ind theta_2 + Ind theta_3 + (Ind theta_7 +
/// Ind theta_7^2 + Ind theta_7^4)`, checked against the consolidated formula.
pub fn ramification_module(ctx: &HurwitzContext) -> Result<RamificationModule> {
    let h2 = induced(ctx, 2, 1)?.div_exact(2)?;
    let h3 = induced(ctx, 3, 1)?;
    let h7 = &(&induced(ctx, 7, 1)? + &induced(ctx, 7, 2)?) + &induced(ctx, 7, 4)?;
    let total = &(&h2 + &h3) + &h7;
    let consolidated = ramification_formula(ctx)?;
    if total != consolidated {
        return Err(Error::IdentityFailure(format!(
            "ramification module for q = {}: assembled and case formula differ at {:?}",
            ctx.q(),
            total.diff(&consolidated)
        )));
    }
    let expected_dim = 85 * (ctx.genus() as i128 - 1);
    if total.dim() != expected_dim || total.get(IrrepLabel::Triv) != 0 {
        return Err(Error::IdentityFailure(format!(
            "ramification module for q = {} has dim {} (want {expected_dim})",
            ctx.q(),
            total.dim()
        )));
    }
    Ok(RamificationModule { total, h2, h3, h7 })
}

/// The consolidated case formula by q mod 8, using the multiplicity of `V`
/// from [`ramification_base_m`] together with `N_alpha`, `N_beta`.
pub fn ramification_formula(ctx: &HurwitzContext) -> Result<CharDecomp> {
    let q = ctx.q();
    let m = ramification_base_m(ctx);
    let (na, nb) = n_values(ctx)?;
    let mut out = CharDecomp::zero(q);
    let (pair, twice_pair) = match ctx.info().mod8 {
        1 => ([IrrepLabel::Wp, IrrepLabel::Wpp], m),
        3 => ([IrrepLabel::Xp, IrrepLabel::Xpp], m - 1),
        5 => ([IrrepLabel::Wp, IrrepLabel::Wpp], m + 1),
        _ => ([IrrepLabel::Xp, IrrepLabel::Xpp], m),
    };
    for l in pair {
        out.set(l, half_exact(l, twice_pair)?);
    }
    out.set(IrrepLabel::V, m);
    for (l, n) in nb {
        out.set(l, m - n as i64);
    }
    for (l, n) in na {
        out.set(l, m + n as i64);
    }
    Ok(out)
}

/// Multiplicity of `V` in the ramification module:
/// `(85 q + 21 e2 + 28 e3 + 36 e7) / 84`, where `e_l` is `+1` when the
/// elements of order `l` are nonsplit and `-1` when they are split.
///
/// Agrees with [`base_m`] except for q = 1 mod 84 (one less) and
/// q = 83 mod 84 (one more).
pub fn ramification_base_m(ctx: &HurwitzContext) -> i64 {
    let q = ctx.q() as i64;
    let sign = |l: i64| if q.rem_euclid(l) == 1 { -1 } else { 1 };
    let e2 = if q.rem_euclid(4) == 1 { -1 } else { 1 };
    (85 * q + 21 * e2 + 28 * sign(3) + 36 * sign(7)) / 84
}

fn half_exact(label: IrrepLabel, v: i64) -> Result<i64> {
    if v % 2 != 0 {
        return Err(Error::NonIntegral {
            label: label.to_string(),
            value: format!("{v}/2"),
        });
    }
    Ok(v / 2)
}

/// Ramification module from invariant dimensions:
/// `sum_l 1/2 (dim pi - dim pi^{H_l})` for every irreducible `pi`.
pub fn ramification_from_invariants(ctx: &HurwitzContext) -> Result<CharDecomp> {
    let q = ctx.q();
    let mut out = CharDecomp::zero(q);
    for (label, d) in irreps(q) {
        let mut twice = 0i64;
        for l in [2, 3, 7] {
            twice += d as i64 - fixed_dim(ctx, label, l)? as i64;
        }
        out.set(label, half_exact(label, twice)?);
    }
    Ok(out)
}

/// Equivariant degree of an invariant divisor (any signs of the `ri`).
pub fn equivariant_degree(ctx: &HurwitzContext, d: Divisor) -> Result<CharDecomp> {
    let q = ctx.q();
    let r = d.reduced();
    let mut out = CharDecomp::regular(q).scale(r.r1);
    if r.r2 == 1 {
        out = &out + &induced(ctx, 2, 1)?;
    }
    if r.r3 > 0 {
        out = &out + &induced(ctx, 3, 1)?.scale(r.r3);
    }
    for k in 1..=r.r7 as u64 {
        out = &out + &induced(ctx, 7, k)?;
    }
    Ok(out)
}

/// `L(D) = C[G] + deg_eq(D) - Gamma` for `deg D > 0`, where every invariant
/// divisor is non-special. Verifies `dim = deg + 1 - g` and nonnegativity.
pub fn riemann_roch(ctx: &HurwitzContext, d: Divisor) -> Result<CharDecomp> {
    let degree = d.degree(ctx.order());
    if degree <= 0 {
        return Err(Error::NonPositiveDegree {
            degree: degree as i64,
        });
    }
    let out = riemann_roch_unchecked(ctx, d)?;
    let want = degree + 1 - ctx.genus() as i128;
    if out.dim() != want {
        return Err(Error::IdentityFailure(format!(
            "dim L{d} = {} but deg + 1 - g = {want} (q = {})",
            out.dim(),
            ctx.q()
        )));
    }
    if !out.is_nonnegative() {
        return Err(Error::IdentityFailure(format!(
            "L{d} has a negative multiplicity: {out}"
        )));
    }
    Ok(out)
}

/// The same formula without the non-speciality guard. For special divisors
/// (such as the canonical one) the result is only the Euler characteristic.
pub fn riemann_roch_unchecked(ctx: &HurwitzContext, d: Divisor) -> Result<CharDecomp> {
    let gamma = ramification_module(ctx)?.total;
    Ok(&(&CharDecomp::regular(ctx.q()) + &equivariant_degree(ctx, d)?) - &gamma)
}

/// `L(K_X) = H^0(X, Omega^1)` by the case formula on q mod 168.
pub fn canonical_module(ctx: &HurwitzContext) -> Result<CharDecomp> {
    use IrrepLabel as L;
    let q = ctx.q();
    let a = ramification_base_m(ctx) - q as i64;
    let (na, nb) = n_values(ctx)?;
    // (split pair, pair multiplicity times 2)
    let (pair, twice_pair) = match ctx.info().mod168 {
        1 | 41 | 97 | 113 => ([L::Wp, L::Wpp], a - 1),
        43 | 83 | 139 | 155 => ([L::Xp, L::Xpp], a),
        13 | 29 | 85 | 125 => ([L::Wp, L::Wpp], a),
        55 | 71 | 127 | 167 => ([L::Xp, L::Xpp], a + 1),
        r => {
            return Err(Error::IdentityFailure(format!(
                "q = {q} has residue {r} mod 168"
            )))
        }
    };
    let mut out = CharDecomp::zero(q);
    for l in pair {
        out.set(l, half_exact(l, twice_pair)?);
    }
    out.set(L::V, a);
    for (l, n) in nb {
        out.set(l, a + 1 - n as i64);
    }
    for (l, n) in na {
        out.set(l, a - 1 + n as i64);
    }
    if out.dim() != ctx.genus() as i128 {
        return Err(Error::IdentityFailure(format!(
            "L(K) for q = {q} has dim {} but g = {}",
            out.dim(),
            ctx.genus()
        )));
    }
    Ok(out)
}

/// `H^1(X, C) = L(K) + conj L(K) = 2 L(K)`.
pub fn h1(ctx: &HurwitzContext) -> Result<CharDecomp> {
    Ok(canonical_module(ctx)?.scale(2))
}

/// The canonical module against `Gamma - C[G]`, the value of the
/// Riemann-Roch formula at the (special) canonical divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDiscrepancy {
    pub case_formula: CharDecomp,
    pub euler_characteristic: CharDecomp,
    /// `case_formula - euler_characteristic`.
    pub difference: CharDecomp,
}

impl CanonicalDiscrepancy {
    /// The difference is exactly one trivial summand, matching
    /// `h^0(K) - h^1(K) = g - 1`.
    pub fn is_single_trivial(&self) -> bool {
        self.difference == CharDecomp::trivial(self.difference.q())
    }
}

pub fn canonical_discrepancy(ctx: &HurwitzContext) -> Result<CanonicalDiscrepancy> {
    let case_formula = canonical_module(ctx)?;
    let euler_characteristic = riemann_roch_unchecked(ctx, Divisor::CANONICAL)?;
    let difference = &case_formula - &euler_characteristic;
    Ok(CanonicalDiscrepancy {
        case_formula,
        euler_characteristic,
        difference,
    })
}

/// Ingredients of the consolidated modifier tables for a reduced divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseMultiplicities {
    pub m: i64,
    pub b2: i64,
    pub b3: i64,
    pub b7: i64,
    pub b: i64,
    pub n_alpha: BTreeMap<IrrepLabel, u8>,
    pub n_beta: BTreeMap<IrrepLabel, u8>,
}

pub fn base_multiplicities(ctx: &HurwitzContext, d: Divisor) -> Result<BaseMultiplicities> {
    let q = ctx.q() as i64;
    let info = ctx.info();
    let r = d.reduced();
    let b2 = r.r2
        * if info.mod4 == 1 {
            (q - 1) / 2
        } else {
            (q + 1) / 2
        };
    let b3 = r.r3
        * if info.mod3 == 1 {
            (q - 1) / 3
        } else {
            (q + 1) / 3
        };
    let b7 = r.r7
        * if info.mod7 == 1 {
            (q - 1) / 7
        } else {
            (q + 1) / 7
        };
    let (n_alpha, n_beta) = n_values(ctx)?;
    Ok(BaseMultiplicities {
        m: ramification_base_m(ctx),
        b2,
        b3,
        b7,
        b: b2 + b3 + b7,
        n_alpha,
        n_beta,
    })
}

/// One entry where a consolidated table disagrees with the assembled module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableDivergence {
    pub divisor: Divisor,
    pub label: IrrepLabel,
    /// Exact table value (may be fractional), as `n` or `n/d`.
    pub table: String,
    pub assembled: i64,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Evaluates the modifier rows. `equivariant` selects the degree table,
/// otherwise the Riemann-Roch table.
fn table_value(ctx: &HurwitzContext, d: Divisor, equivariant: bool) -> Result<RationalDecomp> {
    use IrrepLabel as L;
    let q = ctx.q();
    let info = ctx.info();
    let r = d.reduced();
    let base = base_multiplicities(ctx, d)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut out = RationalDecomp::zero(q);
    let common = if equivariant { base.b } else { base.b - base.m };
    if equivariant {
        // the displayed formula omits r1 C[G]; the regular part is added back
        for (l, dm) in irreps(q) {
            out.add_to(l, &rat(r.r1 * dm as i64));
        }
    } else {
        for (l, dm) in irreps(q) {
            out.add_to(l, &rat((1 + r.r1) * dm as i64));
        }
    }
    for (l, _) in irreps(q) {
        if matches!(l, L::V | L::W(_) | L::X(_)) {
            out.add_to(l, &rat(common));
        }
    }
    let value =
        |label: IrrepLabel, l: u64| -> Result<Option<RootOfUnity>> { special_value(ctx, label, l) };
    let minus_one = RootOfUnity::new(1, 2);
    let labels: Vec<IrrepLabel> = irreps(q).into_iter().map(|(l, _)| l).collect();
    // mod 8 row
    let (pair, pair_num, family_coef, family_is_w) = match (info.mod8, equivariant) {
        (1, true) => ([L::Wp, L::Wpp], base.b, r.r2, true),
        (3, true) => ([L::Xp, L::Xpp], base.b - r.r2, -r.r2, false),
        (5, true) => ([L::Wp, L::Wpp], base.b + r.r2, r.r2, true),
        (7, true) => ([L::Xp, L::Xpp], base.b, -r.r2, false),
        (1, false) => ([L::Wp, L::Wpp], base.b - base.m, r.r2 - 1, true),
        (3, false) => ([L::Xp, L::Xpp], base.b - base.m + 1 - r.r2, 1 - r.r2, false),
        (5, false) => ([L::Wp, L::Wpp], base.b - base.m + r.r2 - 1, r.r2 - 1, true),
        (_, false) => ([L::Xp, L::Xpp], base.b - base.m, 1 - r.r2, false),
        (_, true) => ([L::Xp, L::Xpp], base.b, -r.r2, false),
    };
    for l in pair {
        out.add_to(l, &(rat(pair_num) * &half));
    }
    for &l in &labels {
        let fits = matches!((family_is_w, l), (true, L::W(_)) | (false, L::X(_)));
        if fits && value(l, 2)? == Some(minus_one) {
            out.add_to(l, &rat(family_coef));
        }
    }
    // mod 3 row
    let coef3 = match (info.mod3, equivariant) {
        (1, true) => r.r3,
        (_, true) => -r.r3,
        (1, false) => r.r3 - 1,
        (_, false) => 1 - r.r3,
    };
    for &l in &labels {
        if let Some(v) = value(l, 3)? {
            if !v.is_one() {
                out.add_to(l, &rat(coef3));
            }
        }
    }
    // mod 7 row
    for &l in &labels {
        let Some(v) = value(l, 7)? else { continue };
        let hits = (1..=r.r7)
            .filter(|&k| {
                v == RootOfUnity::new(k as i128, 7) || v == RootOfUnity::new(-(k as i128), 7)
            })
            .count() as i64;
        let sign = if info.mod7 == 1 { 1 } else { -1 };
        let mut c = sign * hits;
        if !equivariant && !v.is_one() {
            c -= sign;
        }
        out.add_to(l, &rat(c));
    }
    Ok(out)
}

fn divergences(table: &RationalDecomp, assembled: &CharDecomp, d: Divisor) -> Vec<TableDivergence> {
    irreps(assembled.q())
        .into_iter()
        .filter_map(|(l, _)| {
            let t = table.get(l);
            let a = assembled.get(l);
            (t != rat(a)).then(|| TableDivergence {
                divisor: d,
                label: l,
                table: rational_to_string(&t),
                assembled: a,
            })
        })
        .collect()
}

/// Entries where the equivariant-degree modifier table disagrees with
/// [`equivariant_degree`]. The divisor is reduced first.
pub fn degeq_table_divergences(ctx: &HurwitzContext, d: Divisor) -> Result<Vec<TableDivergence>> {
    let r = d.reduced();
    let table = table_value(ctx, r, true)?;
    Ok(divergences(&table, &equivariant_degree(ctx, r)?, r))
}

/// Entries where the Riemann-Roch modifier table disagrees with
/// [`riemann_roch`] (evaluated without the degree guard).
pub fn ld_table_divergences(ctx: &HurwitzContext, d: Divisor) -> Result<Vec<TableDivergence>> {
    let r = d.reduced();
    let table = table_value(ctx, r, false)?;
    Ok(divergences(&table, &riemann_roch_unchecked(ctx, r)?, r))
}

/// Rational-valued table evaluation, for display.
pub fn degeq_table(ctx: &HurwitzContext, d: Divisor) -> Result<RationalDecomp> {
    table_value(ctx, d.reduced(), true)
}

pub fn ld_table(ctx: &HurwitzContext, d: Divisor) -> Result<RationalDecomp> {
    table_value(ctx, d.reduced(), false)
}
