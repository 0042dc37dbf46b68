//! Irreducible characters of PSL(2, q) and integer combinations of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::context::HurwitzContext;
use crate::cyclo::{Accumulator, Cyc};
use crate::error::{Error, Result};
use crate::psl2::{class_exists, class_size, classes, ClassLabel};

/// An irreducible representation of PSL(2, q).
///
/// `W(k)` is the principal series member with `alpha(eps) = zeta_(q-1)^k` and
/// `X(k)` the discrete series member with `beta(tau) = zeta_(q+1)^k`; `k` is
/// even and below half the modulus. The derived order is the output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepLabel {
    Triv,
    V,
    Wp,
    Wpp,
    Xp,
    Xpp,
    X(u64),
    W(u64),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Triv => write!(f, "Triv"),
            IrrepLabel::V => write!(f, "V"),
            IrrepLabel::Wp => write!(f, "W'"),
            IrrepLabel::Wpp => write!(f, "W''"),
            IrrepLabel::Xp => write!(f, "X'"),
            IrrepLabel::Xpp => write!(f, "X''"),
            IrrepLabel::X(k) => write!(f, "X({k})"),
            IrrepLabel::W(k) => write!(f, "W({k})"),
        }
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let index = |prefix: &str| -> Option<u64> {
            s.strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .parse()
                .ok()
        };
        match s {
            "Triv" => Ok(IrrepLabel::Triv),
            "V" => Ok(IrrepLabel::V),
            "W'" => Ok(IrrepLabel::Wp),
            "W''" => Ok(IrrepLabel::Wpp),
            "X'" => Ok(IrrepLabel::Xp),
            "X''" => Ok(IrrepLabel::Xpp),
            _ => index("W")
                .map(IrrepLabel::W)
                .or_else(|| index("X").map(IrrepLabel::X))
                .ok_or_else(|| Error::Parse(format!("unknown irrep label {s:?}"))),
        }
    }
}

impl Serialize for IrrepLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IrrepLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether `label` is an irreducible of PSL(2, q).
pub fn label_exists(q: u64, label: IrrepLabel) -> bool {
    match label {
        IrrepLabel::Triv | IrrepLabel::V => true,
        IrrepLabel::Wp | IrrepLabel::Wpp => q % 4 == 1,
        IrrepLabel::Xp | IrrepLabel::Xpp => q % 4 == 3,
        IrrepLabel::W(k) => k > 0 && k % 2 == 0 && 2 * k < q - 1,
        IrrepLabel::X(k) => k > 0 && k % 2 == 0 && 2 * k < q + 1,
    }
}

/// Dimension of an irreducible.
pub fn dim(q: u64, label: IrrepLabel) -> u64 {
    match label {
        IrrepLabel::Triv => 1,
        IrrepLabel::V => q,
        IrrepLabel::Wp | IrrepLabel::Wpp => q.div_ceil(2),
        IrrepLabel::Xp | IrrepLabel::Xpp => (q - 1) / 2,
        IrrepLabel::X(_) => q - 1,
        IrrepLabel::W(_) => q + 1,
    }
}

/// All irreducibles with their dimensions, in label order; there are `(q+5)/2`.
pub fn irreps(q: u64) -> Vec<(IrrepLabel, u64)> {
    let mut out = vec![IrrepLabel::Triv, IrrepLabel::V];
    if q % 4 == 1 {
        out.extend([IrrepLabel::Wp, IrrepLabel::Wpp]);
    } else {
        out.extend([IrrepLabel::Xp, IrrepLabel::Xpp]);
    }
    out.extend(
        (2..)
            .step_by(2)
            .take_while(|k| 2 * k < q + 1)
            .map(IrrepLabel::X),
    );
    out.extend(
        (2..)
            .step_by(2)
            .take_while(|k| 2 * k < q - 1)
            .map(IrrepLabel::W),
    );
    out.into_iter().map(|l| (l, dim(q, l))).collect()
}

fn check_label(q: u64, label: IrrepLabel) -> Result<()> {
    if label_exists(q, label) {
        Ok(())
    } else {
        Err(Error::InvalidLabel {
            label: label.to_string(),
            q,
        })
    }
}

/// `zeta_n^e + zeta_n^-e`.
fn two_cos(n: u64, e: u64) -> Cyc {
    let e = (e % n) as i64;
    let z = Cyc::root_of_unity(n, e).expect("n > 0");
    let zi = Cyc::root_of_unity(n, -e).expect("n > 0");
    &z + &zi
}

fn sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exact value of the character of `label` on the class `c`.
pub fn char_value(ctx: &HurwitzContext, label: IrrepLabel, c: ClassLabel) -> Result<Cyc> {
    use ClassLabel as C;
    use IrrepLabel as L;
    let q = ctx.q();
    check_label(q, label)?;
    if !class_exists(q, c) {
        return Err(Error::InvalidClass {
            class: c.to_string(),
            q,
        });
    }
    if c == C::Identity {
        return Ok(Cyc::from_int(dim(q, label) as i64));
    }
    let int = |v: i64| Ok(Cyc::from_int(v));
    match (label, c) {
        (L::Triv, _) => int(1),
        (L::V, C::Split(_)) => int(1),
        (L::V, C::NonSplit(_)) => int(-1),
        (L::V, _) => int(0),
        (L::W(j), C::Split(k)) => Ok(two_cos(q - 1, j * k)),
        (L::W(_), C::NonSplit(_)) => int(0),
        (L::W(_), _) => int(1),
        (L::X(_), C::Split(_)) => int(0),
        (L::X(j), C::NonSplit(k)) => Ok(-two_cos(q + 1, j * k)),
        (L::X(_), _) => int(-1),
        (L::Wp | L::Wpp, C::Split(k)) => int(sign(k)),
        (L::Wp | L::Wpp, C::NonSplit(_)) => int(0),
        (L::Xp | L::Xpp, C::Split(_)) => int(0),
        (L::Xp | L::Xpp, C::NonSplit(k)) => int(-sign(k)),
        (_, C::UnipotentMain | C::UnipotentTwisted) => {
            let (xi, xi2) = ctx.gauss_periods()?;
            let first = matches!(
                (label, c),
                (L::Wp | L::Xp, C::UnipotentMain) | (L::Wpp | L::Xpp, C::UnipotentTwisted)
            );
            let period = if first { xi } else { xi2 };
            Ok(if matches!(label, L::Wp | L::Wpp) {
                &Cyc::one() + &period
            } else {
                period
            })
        }
        (_, C::Identity) => unreachable!(),
    }
}

/// A class function, keyed by conjugacy class.
pub type ClassFunction = BTreeMap<ClassLabel, Cyc>;

/// The character of `label` as a class function.
pub fn character(ctx: &HurwitzContext, label: IrrepLabel) -> Result<ClassFunction> {
    classes(ctx.q())
        .into_iter()
        .map(|c| Ok((c, char_value(ctx, label, c)?)))
        .collect()
}

/// The character of the regular representation.
pub fn regular_character(q: u64) -> ClassFunction {
    let order = q * (q * q - 1) / 2;
    classes(q)
        .into_iter()
        .map(|c| {
            (
                c,
                if c == ClassLabel::Identity {
                    Cyc::from_int(order as i64)
                } else {
                    Cyc::zero()
                },
            )
        })
        .collect()
}

/// `(1/|G|) sum_c |c| f(c) conj(h(c))`; missing classes count as zero.
pub fn inner_product(q: u64, f: &ClassFunction, h: &ClassFunction) -> Result<Cyc> {
    let order = BigInt::from(q * (q * q - 1) / 2);
    let mut acc = Accumulator::default();
    for (c, fv) in f {
        let Some(hv) = h.get(c) else { continue };
        let w = BigRational::new(BigInt::from(class_size(q, *c)?), order.clone());
        acc.add_product(&w, fv, &hv.conj());
    }
    Ok(acc.finish())
}

/// Multiplicities of the irreducibles in a class function that is a
/// character; fails if some multiplicity is not an integer.
pub fn decompose(ctx: &HurwitzContext, f: &ClassFunction) -> Result<CharDecomp> {
    let q = ctx.q();
    let mut out = CharDecomp::zero(q);
    for (label, _) in irreps(q) {
        let v = inner_product(q, f, &character(ctx, label)?)?;
        let m = v.to_i64().ok_or_else(|| Error::NonIntegral {
            label: label.to_string(),
            value: v.to_canonical_string(),
        })?;
        out.set(label, m);
    }
    Ok(out)
}

/// The full table, rows in label order and columns in class order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub q: u64,
    pub irreps: Vec<(IrrepLabel, u64)>,
    pub classes: Vec<ClassLabel>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<Cyc>>,
}

pub fn character_table(ctx: &HurwitzContext) -> Result<CharacterTable> {
    let q = ctx.q();
    let irr = irreps(q);
    let cls = classes(q);
    let class_sizes = cls
        .iter()
        .map(|&c| class_size(q, c))
        .collect::<Result<_>>()?;
    let values = irr
        .iter()
        .map(|&(l, _)| {
            cls.iter()
                .map(|&c| char_value(ctx, l, c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(CharacterTable {
        q,
        irreps: irr,
        classes: cls,
        class_sizes,
        values,
    })
}

impl CharacterTable {
    fn row(&self, i: usize) -> ClassFunction {
        self.classes
            .iter()
            .copied()
            .zip(self.values[i].iter().cloned())
            .collect()
    }

    /// `<chi_i, chi_j> = delta_ij` for all rows.
    pub fn check_row_orthogonality(&self) -> Result<()> {
        for i in 0..self.irreps.len() {
            let ri = self.row(i);
            for j in i..self.irreps.len() {
                let v = inner_product(self.q, &ri, &self.row(j))?;
                let want = Cyc::from_int((i == j) as i64);
                if v != want {
                    return Err(Error::IdentityFailure(format!(
                        "<{}, {}> = {} for q = {}",
                        self.irreps[i].0, self.irreps[j].0, v, self.q
                    )));
                }
            }
        }
        Ok(())
    }

    /// `sum_chi chi(c) conj(chi(c')) = delta |C_G(c)|` for all class pairs.
    pub fn check_column_orthogonality(&self) -> Result<()> {
        let order = self.q * (self.q * self.q - 1) / 2;
        let one = BigRational::one();
        for a in 0..self.classes.len() {
            for b in a..self.classes.len() {
                let mut acc = Accumulator::default();
                for row in &self.values {
                    acc.add_product(&one, &row[a], &row[b].conj());
                }
                let v = acc.finish();
                let want = if a == b {
                    (order / self.class_sizes[a]) as i64
                } else {
                    0
                };
                if v != Cyc::from_int(want) {
                    return Err(Error::IdentityFailure(format!(
                        "column sum ({}, {}) = {} for q = {}",
                        self.classes[a], self.classes[b], v, self.q
                    )));
                }
            }
        }
        Ok(())
    }

    /// Rows of canonical strings; the conductor of each entry is in brackets
    /// when it is not 1.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        out.push_str("irrep\tdim");
        for c in &self.classes {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for ((label, d), row) in self.irreps.iter().zip(&self.values) {
            out.push_str(&format!("{label}\t{d}"));
            for v in row {
                out.push('\t');
                out.push_str(&format_entry(v));
            }
            out.push('\n');
        }
        out
    }
}

/// `[N] c0 + c1*z^e1 + ...`, or the plain string for rationals.
pub fn format_entry(v: &Cyc) -> String {
    if v.conductor() == 1 {
        v.to_canonical_string()
    } else {
        format!("[{}] {}", v.conductor(), v.to_canonical_string())
    }
}

/// A virtual character: integer multiplicities of irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharDecomp {
    q: u64,
    mults: BTreeMap<IrrepLabel, i64>,
}

impl CharDecomp {
    pub fn zero(q: u64) -> Self {
        CharDecomp {
            q,
            mults: BTreeMap::new(),
        }
    }

    /// The regular representation: every irreducible with multiplicity dim.
    pub fn regular(q: u64) -> Self {
        let mut d = CharDecomp::zero(q);
        for (l, n) in irreps(q) {
            d.set(l, n as i64);
        }
        d
    }

    pub fn trivial(q: u64) -> Self {
        let mut d = CharDecomp::zero(q);
        d.set(IrrepLabel::Triv, 1);
        d
    }

    pub fn from_entries(
        q: u64,
        entries: impl IntoIterator<Item = (IrrepLabel, i64)>,
    ) -> Result<Self> {
        let mut d = CharDecomp::zero(q);
        for (l, m) in entries {
            check_label(q, l)?;
            d.add_to(l, m);
        }
        Ok(d)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn get(&self, label: IrrepLabel) -> i64 {
        self.mults.get(&label).copied().unwrap_or(0)
    }

    pub fn set(&mut self, label: IrrepLabel, m: i64) {
        debug_assert!(label_exists(self.q, label), "{label} for q = {}", self.q);
        if m == 0 {
            self.mults.remove(&label);
        } else {
            self.mults.insert(label, m);
        }
    }

    pub fn add_to(&mut self, label: IrrepLabel, m: i64) {
        let v = self.get(label) + m;
        self.set(label, v);
    }

    /// Nonzero entries in label order.
    pub fn iter(&self) -> impl Iterator<Item = (IrrepLabel, i64)> + '_ {
        self.mults.iter().map(|(&l, &m)| (l, m))
    }

    /// Every irreducible of the group, zeros included, in label order.
    pub fn entries(&self) -> Vec<(IrrepLabel, u64, i64)> {
        irreps(self.q)
            .into_iter()
            .map(|(l, d)| (l, d, self.get(l)))
            .collect()
    }

    /// `sum mult * dim`.
    pub fn dim(&self) -> i128 {
        self.iter()
            .map(|(l, m)| m as i128 * dim(self.q, l) as i128)
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mults.values().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn scale(&self, k: i64) -> CharDecomp {
        CharDecomp {
            q: self.q,
            mults: self
                .mults
                .iter()
                .filter(|_| k != 0)
                .map(|(&l, &m)| (l, m * k))
                .collect(),
        }
    }

    /// Exact division by `k`; fails if some multiplicity is not divisible.
    pub fn div_exact(&self, k: i64) -> Result<CharDecomp> {
        let mut out = CharDecomp::zero(self.q);
        for (l, m) in self.iter() {
            if m % k != 0 {
                return Err(Error::NonIntegral {
                    label: l.to_string(),
                    value: format!("{m}/{k}"),
                });
            }
            out.set(l, m / k);
        }
        Ok(out)
    }

    /// The character as a class function.
    pub fn class_function(&self, ctx: &HurwitzContext) -> Result<ClassFunction> {
        let mut out = ClassFunction::new();
        for c in classes(self.q) {
            let mut acc = Accumulator::default();
            for (l, m) in self.iter() {
                acc.add(
                    &BigRational::from_integer(BigInt::from(m)),
                    &char_value(ctx, l, c)?,
                );
            }
            out.insert(c, acc.finish());
        }
        Ok(out)
    }

    /// Entries where `self` and `other` differ: `(label, self, other)`.
    pub fn diff(&self, other: &CharDecomp) -> Vec<(IrrepLabel, i64, i64)> {
        irreps(self.q)
            .into_iter()
            .filter_map(|(l, _)| {
                let (a, b) = (self.get(l), other.get(l));
                (a != b).then_some((l, a, b))
            })
            .collect()
    }
}

impl fmt::Display for CharDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(l, m)| format!("{l}:{m}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl Add for &CharDecomp {
    type Output = CharDecomp;
    fn add(self, rhs: &CharDecomp) -> CharDecomp {
        assert_eq!(self.q, rhs.q, "decompositions for different q");
        let mut out = self.clone();
        for (l, m) in rhs.iter() {
            out.add_to(l, m);
        }
        out
    }
}

impl Sub for &CharDecomp {
    type Output = CharDecomp;
    fn sub(self, rhs: &CharDecomp) -> CharDecomp {
        self + &(-rhs)
    }
}

impl Neg for &CharDecomp {
    type Output = CharDecomp;
    fn neg(self) -> CharDecomp {
        self.scale(-1)
    }
}

impl Add for CharDecomp {
    type Output = CharDecomp;
    fn add(self, rhs: CharDecomp) -> CharDecomp {
        &self + &rhs
    }
}

impl Sub for CharDecomp {
    type Output = CharDecomp;
    fn sub(self, rhs: CharDecomp) -> CharDecomp {
        &self - &rhs
    }
}

/// Rational multiplicities, for formulas whose terms need not be integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalDecomp {
    pub q: u64,
    pub mults: BTreeMap<IrrepLabel, BigRational>,
}

impl RationalDecomp {
    pub fn zero(q: u64) -> Self {
        RationalDecomp {
            q,
            mults: BTreeMap::new(),
        }
    }

    pub fn get(&self, label: IrrepLabel) -> BigRational {
        self.mults
            .get(&label)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_to(&mut self, label: IrrepLabel, v: &BigRational) {
        let e = self.mults.entry(label).or_insert_with(BigRational::zero);
        *e += v;
        if e.is_zero() {
            self.mults.remove(&label);
        }
    }

    /// The integral decomposition, if every coefficient is an integer.
    pub fn to_integral(&self) -> Option<CharDecomp> {
        let mut out = CharDecomp::zero(self.q);
        for (l, v) in &self.mults {
            if !v.is_integer() {
                return None;
            }
            out.set(*l, i64::try_from(v.to_integer()).ok()?);
        }
        Some(out)
    }
}

impl From<&CharDecomp> for RationalDecomp {
    fn from(d: &CharDecomp) -> Self {
        RationalDecomp {
            q: d.q,
            mults: d
                .iter()
                .map(|(l, m)| (l, BigRational::from_integer(BigInt::from(m))))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psl2::classify_q;

    #[test]
    fn q13_inventory() {
        let irr = irreps(13);
        assert_eq!(irr.len(), 9);
        let names: Vec<String> = irr.iter().map(|(l, _)| l.to_string()).collect();
        assert_eq!(
            names,
            ["Triv", "V", "W'", "W''", "X(2)", "X(4)", "X(6)", "W(2)", "W(4)"]
        );
        assert_eq!(irr.iter().map(|(_, d)| d * d).sum::<u64>(), 1092);
    }

    #[test]
    fn q29_inventory() {
        let irr = irreps(29);
        assert_eq!(irr.len(), 17);
        assert_eq!(
            irr.iter()
                .filter(|(l, _)| matches!(l, IrrepLabel::X(_)))
                .count(),
            7
        );
        assert_eq!(
            irr.iter()
                .filter(|(l, _)| matches!(l, IrrepLabel::W(_)))
                .count(),
            6
        );
        assert_eq!(irr.iter().map(|(_, d)| d * d).sum::<u64>(), 12180);
    }

    #[test]
    fn q13_values() {
        let ctx = HurwitzContext::new(13).unwrap();
        assert_eq!(
            char_value(&ctx, IrrepLabel::V, ClassLabel::Identity).unwrap(),
            Cyc::from_int(13)
        );
        assert_eq!(
            char_value(&ctx, IrrepLabel::V, ClassLabel::NonSplit(2)).unwrap(),
            Cyc::from_int(-1)
        );
        let (xi, _) = ctx.gauss_periods().unwrap();
        assert_eq!(
            char_value(&ctx, IrrepLabel::Wp, ClassLabel::UnipotentMain).unwrap(),
            &Cyc::one() + &xi
        );
        assert!(char_value(&ctx, IrrepLabel::Xp, ClassLabel::Identity).is_err());
        assert!(char_value(&ctx, IrrepLabel::V, ClassLabel::Split(4)).is_err());
    }

    #[test]
    fn orthogonality_small() {
        for q in [13u64, 29, 43, 71] {
            let ctx = HurwitzContext::new(q).unwrap();
            let t = character_table(&ctx).unwrap();
            assert_eq!(t.irreps.len(), t.classes.len());
            t.check_row_orthogonality().unwrap();
            t.check_column_orthogonality().unwrap();
        }
    }

    #[test]
    fn cube_table_with_trace_periods() {
        let opts = crate::ContextOptions {
            trace_gauss_periods: true,
            ..Default::default()
        };
        let ctx = HurwitzContext::with_options(125, opts).unwrap();
        let t = character_table(&ctx).unwrap();
        t.check_row_orthogonality().unwrap();
    }

    #[test]
    fn regular_and_values_are_integral() {
        let ctx = HurwitzContext::new(29).unwrap();
        let reg = regular_character(29);
        assert_eq!(
            inner_product(29, &reg, &character(&ctx, IrrepLabel::Triv).unwrap()).unwrap(),
            Cyc::one()
        );
        assert_eq!(decompose(&ctx, &reg).unwrap(), CharDecomp::regular(29));
        let t = character_table(&ctx).unwrap();
        assert!(t.values.iter().flatten().all(Cyc::is_algebraic_integer));
    }

    #[test]
    fn conjugation_swaps_split_pair_only() {
        for q in [13u64, 43] {
            let ctx = HurwitzContext::new(q).unwrap();
            for (l, _) in irreps(q) {
                let image = match (l, q % 4) {
                    // conj fixes the periods iff -1 is a square
                    (IrrepLabel::Xp, 3) => IrrepLabel::Xpp,
                    (IrrepLabel::Xpp, 3) => IrrepLabel::Xp,
                    _ => l,
                };
                for c in classes(q) {
                    assert_eq!(
                        char_value(&ctx, l, c).unwrap().conj(),
                        char_value(&ctx, image, c).unwrap(),
                        "q={q} {l} {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn labels_roundtrip() {
        for q in [13u64, 43] {
            classify_q(q).unwrap();
            for (l, _) in irreps(q) {
                assert_eq!(l.to_string().parse::<IrrepLabel>().unwrap(), l);
                assert!(label_exists(q, l));
            }
        }
        assert!(!label_exists(13, IrrepLabel::W(6)));
        assert!(!label_exists(13, IrrepLabel::Xp));
    }

    #[test]
    fn decomp_arithmetic() {
        let r = CharDecomp::regular(13);
        assert_eq!(r.dim(), 1092);
        let t = CharDecomp::trivial(13);
        let d = &r - &t;
        assert_eq!(d.get(IrrepLabel::Triv), 0);
        assert_eq!(d.dim(), 1091);
        assert!(r.scale(3).div_exact(2).is_err());
        assert_eq!(r.scale(2).div_exact(2).unwrap(), r);
    }
}
