//! The group PSL(2, q): admissible orders, elements, conjugacy classes and the
//! cyclic subgroups of order 2, 3 and 7.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, prime_power};
use crate::context::HurwitzContext;
use crate::error::{Error, Inadmissibility, Result};
use crate::ffield::{Field, Fq, Fq2, Location};

/// Largest q accepted by [`classify_q`].
pub const MAX_Q: u64 = 1_000_000;

/// Default bound on |G| for explicit enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 200_000;

/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_ENV: &str = "HURWITZ_ENUM_CAP";

/// The enumeration cap in effect for this process.
pub fn enumeration_cap() -> u64 {
    std::env::var(ENUM_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// An admissible q together with the residues the case analysis needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QInfo {
    pub q: u64,
    pub p: u64,
    pub n: u32,
    pub mod4: u64,
    pub mod3: u64,
    pub mod7: u64,
    pub mod8: u64,
    pub mod12: u64,
    pub mod28: u64,
    pub mod84: u64,
    pub mod168: u64,
}

/// Accepts q iff PSL(2, q) is a Hurwitz group: q prime with q = +-1 mod 7, or
/// q = p^3 with p = +-2, +-3 mod 7, in both cases coprime to 42.
pub fn classify_q(q: u64) -> Result<QInfo> {
    let reject = |reason| Err(Error::Inadmissible { q, reason });
    if q < 2 {
        return reject(Inadmissibility::TooSmall);
    }
    let Some((p, n)) = prime_power(q) else {
        return reject(Inadmissibility::NotPrimePower);
    };
    if gcd(q, 42) != 1 {
        return reject(Inadmissibility::SharesFactorWith42);
    }
    match n {
        1 if !matches!(p % 7, 1 | 6) => {
            return reject(Inadmissibility::PrimeNotPlusMinusOneMod7 { residue: p % 7 })
        }
        3 if !matches!(p % 7, 2..=5) => {
            return reject(Inadmissibility::CubeBaseNotPlusMinusTwoThreeMod7 { residue: p % 7 })
        }
        1 | 3 => {}
        _ => {
            return reject(Inadmissibility::UnsupportedExponent {
                base: p,
                exponent: n,
            })
        }
    }
    if q > MAX_Q {
        return reject(Inadmissibility::TooLarge { q, bound: MAX_Q });
    }
    let info = QInfo {
        q,
        p,
        n,
        mod4: q % 4,
        mod3: q % 3,
        mod7: q % 7,
        mod8: q % 8,
        mod12: q % 12,
        mod28: q % 28,
        mod84: q % 84,
        mod168: q % 168,
    };
    assert!(
        matches!(info.mod84, 1 | 13 | 29 | 41 | 43 | 55 | 71 | 83),
        "admissible q = {q} has unexpected residue {} mod 84",
        info.mod84
    );
    Ok(info)
}

/// |PSL(2, q)| = q(q^2 - 1)/2.
pub fn group_order(q: u64) -> Result<u64> {
    classify_q(q)?;
    Ok(q * (q * q - 1) / 2)
}

/// Genus 1 + q(q^2 - 1)/168 of the Hurwitz curve.
pub fn genus(q: u64) -> Result<u64> {
    classify_q(q)?;
    Ok(1 + q * (q * q - 1) / 168)
}

/// An element of PSL(2, q): a determinant-one matrix, stored as the smaller
/// of `M` and `-M` in the packed element order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjMat {
    pub a: Fq,
    pub b: Fq,
    pub c: Fq,
    pub d: Fq,
}

impl ProjMat {
    /// Canonical representative of `[[a, b], [c, d]]`, if its determinant is 1.
    pub fn new(field: &Field, a: Fq, b: Fq, c: Fq, d: Fq) -> Option<Self> {
        let det = field.sub(field.mul(a, d), field.mul(b, c));
        (det == field.one()).then(|| ProjMat::canonical(field, a, b, c, d))
    }

    fn canonical(field: &Field, a: Fq, b: Fq, c: Fq, d: Fq) -> Self {
        let m = ProjMat { a, b, c, d };
        let n = ProjMat {
            a: field.neg(a),
            b: field.neg(b),
            c: field.neg(c),
            d: field.neg(d),
        };
        m.min(n)
    }

    pub fn identity(field: &Field) -> Self {
        ProjMat::canonical(field, field.one(), field.zero(), field.zero(), field.one())
    }

    pub fn mul(&self, field: &Field, o: &ProjMat) -> ProjMat {
        let f = field;
        ProjMat::canonical(
            f,
            f.add(f.mul(self.a, o.a), f.mul(self.b, o.c)),
            f.add(f.mul(self.a, o.b), f.mul(self.b, o.d)),
            f.add(f.mul(self.c, o.a), f.mul(self.d, o.c)),
            f.add(f.mul(self.c, o.b), f.mul(self.d, o.d)),
        )
    }

    pub fn inv(&self, field: &Field) -> ProjMat {
        ProjMat::canonical(field, self.d, field.neg(self.b), field.neg(self.c), self.a)
    }

    pub fn pow(&self, field: &Field, mut e: u64) -> ProjMat {
        let mut acc = ProjMat::identity(field);
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base);
            }
            base = base.mul(field, &base);
            e >>= 1;
        }
        acc
    }

    /// `h g h^-1`.
    pub fn conjugate_by(&self, field: &Field, h: &ProjMat) -> ProjMat {
        h.mul(field, self).mul(field, &h.inv(field))
    }

    pub fn is_identity(&self, field: &Field) -> bool {
        *self == ProjMat::identity(field)
    }

    pub fn trace(&self, field: &Field) -> Fq {
        field.add(self.a, self.d)
    }

    /// Multiplicative order in PSL(2, q).
    pub fn order(&self, field: &Field) -> u64 {
        let mut x = *self;
        let mut n = 1;
        while !x.is_identity(field) {
            x = x.mul(field, self);
            n += 1;
        }
        n
    }

    /// Matrix `[[x, eps y], [y, x]]` of a torus element `x + y sqrt(eps)`.
    pub fn from_torus(field: &Field, eps: Fq, z: Fq2) -> ProjMat {
        ProjMat::canonical(field, z.a, field.mul(eps, z.b), z.b, z.a)
    }

    /// `diag(x, x^-1)`.
    pub fn diagonal(field: &Field, x: Fq) -> ProjMat {
        let inv = field.inv(x).expect("nonzero diagonal entry");
        ProjMat::canonical(field, x, field.zero(), field.zero(), inv)
    }
}

/// All elements of PSL(2, q) in increasing canonical order.
///
/// Fails when |G| exceeds `cap`; the closed-form paths need no enumeration.
pub fn enumerate_group(field: &Field, cap: u64) -> Result<Vec<ProjMat>> {
    let q = field.order();
    let order = q * (q * q - 1) / 2;
    if order > cap {
        return Err(Error::EnumerationCap { order, cap });
    }
    let mut out = Vec::with_capacity(order as usize);
    let zero = field.zero();
    for a in field.elements() {
        if a == zero {
            for b in field.elements().filter(|&b| b != zero) {
                let c = field.neg(field.inv(b).expect("nonzero"));
                for d in field.elements() {
                    push_canonical(field, &mut out, a, b, c, d);
                }
            }
        } else {
            let ainv = field.inv(a).expect("nonzero");
            for b in field.elements() {
                for c in field.elements() {
                    let d = field.mul(field.add(field.one(), field.mul(b, c)), ainv);
                    push_canonical(field, &mut out, a, b, c, d);
                }
            }
        }
    }
    out.sort_unstable();
    debug_assert_eq!(out.len() as u64, order);
    Ok(out)
}

fn push_canonical(field: &Field, out: &mut Vec<ProjMat>, a: Fq, b: Fq, c: Fq, d: Fq) {
    let m = ProjMat { a, b, c, d };
    if ProjMat::canonical(field, a, b, c, d) == m {
        out.push(m);
    }
}

/// A conjugacy class of PSL(2, q).
///
/// `Split(k)` holds `diag(eps^k, eps^-k)` and `NonSplit(k)` the torus element
/// `tau^k`; `k` is the least member of its orbit under `k -> -k` and
/// multiplication by `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    Identity,
    UnipotentMain,
    UnipotentTwisted,
    Split(u64),
    NonSplit(u64),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Identity => write!(f, "Identity"),
            ClassLabel::UnipotentMain => write!(f, "UnipotentMain"),
            ClassLabel::UnipotentTwisted => write!(f, "UnipotentTwisted"),
            ClassLabel::Split(k) => write!(f, "Split({k})"),
            ClassLabel::NonSplit(k) => write!(f, "NonSplit({k})"),
        }
    }
}

impl FromStr for ClassLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown class label {s:?}"));
        let s = s.trim();
        let index = |prefix: &str| -> Option<u64> {
            s.strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .parse()
                .ok()
        };
        match s {
            "Identity" => Ok(ClassLabel::Identity),
            "UnipotentMain" => Ok(ClassLabel::UnipotentMain),
            "UnipotentTwisted" => Ok(ClassLabel::UnipotentTwisted),
            _ => index("Split")
                .map(ClassLabel::Split)
                .or_else(|| index("NonSplit").map(ClassLabel::NonSplit))
                .ok_or_else(bad),
        }
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Least element of `{k, -k, k + h, -k + h}` modulo `2h`.
pub(crate) fn canonical_index(k: u64, modulus: u64) -> u64 {
    let h = modulus / 2;
    let k = k % modulus;
    let neg = (modulus - k) % modulus;
    [k, neg, (k + h) % modulus, (neg + h) % modulus]
        .into_iter()
        .min()
        .unwrap()
}

/// All conjugacy classes, in label order; there are `3 + (q - 1)/2`.
pub fn classes(q: u64) -> Vec<ClassLabel> {
    let mut out = vec![
        ClassLabel::Identity,
        ClassLabel::UnipotentMain,
        ClassLabel::UnipotentTwisted,
    ];
    out.extend((1..=(q - 1) / 4).map(ClassLabel::Split));
    out.extend((1..=(q + 1) / 4).map(ClassLabel::NonSplit));
    out
}

/// Whether `c` names a class of PSL(2, q).
pub fn class_exists(q: u64, c: ClassLabel) -> bool {
    match c {
        ClassLabel::Split(k) => (1..=(q - 1) / 4).contains(&k),
        ClassLabel::NonSplit(k) => (1..=(q + 1) / 4).contains(&k),
        _ => true,
    }
}

/// Number of elements in the class.
pub fn class_size(q: u64, c: ClassLabel) -> Result<u64> {
    if !class_exists(q, c) {
        return Err(Error::InvalidClass {
            class: c.to_string(),
            q,
        });
    }
    Ok(match c {
        ClassLabel::Identity => 1,
        ClassLabel::UnipotentMain | ClassLabel::UnipotentTwisted => (q * q - 1) / 2,
        ClassLabel::Split(k) if 4 * k == q - 1 => q * (q + 1) / 2,
        ClassLabel::Split(_) => q * (q + 1),
        ClassLabel::NonSplit(k) if 4 * k == q + 1 => q * (q - 1) / 2,
        ClassLabel::NonSplit(_) => q * (q - 1),
    })
}

/// Order of the elements in the class.
pub fn element_order(q: u64, c: ClassLabel, p: u64) -> u64 {
    match c {
        ClassLabel::Identity => 1,
        ClassLabel::UnipotentMain | ClassLabel::UnipotentTwisted => p,
        // eps^k up to sign has order (q-1)/gcd(q-1, 2k) in PSL
        ClassLabel::Split(k) => (q - 1) / gcd(q - 1, 2 * k),
        ClassLabel::NonSplit(k) => (q + 1) / gcd(q + 1, 2 * k),
    }
}

/// The conjugacy class of `g`.
pub fn class_of(ctx: &HurwitzContext, g: &ProjMat) -> ClassLabel {
    let f = ctx.field();
    if g.is_identity(f) {
        return ClassLabel::Identity;
    }
    let two = f.from_int(2);
    let mut t = g.trace(f);
    let disc = f.sub(f.mul(t, t), f.from_int(4));
    if disc == f.zero() {
        // normalize to trace 2; then g = I + N with N = h E12 h^-1 up to eps
        let (b, c) = if t == two {
            (g.b, g.c)
        } else {
            (f.neg(g.b), f.neg(g.c))
        };
        let main = if b != f.zero() {
            f.is_square(b)
        } else {
            f.is_square(f.neg(c))
        };
        return if main {
            ClassLabel::UnipotentMain
        } else {
            ClassLabel::UnipotentTwisted
        };
    }
    let half = f.inv(two).expect("odd characteristic");
    if let Some(s) = f.sqrt(disc) {
        let x = f.mul(f.add(t, s), half);
        let k = ctx.dlog().log_unit(x).expect("nonzero eigenvalue");
        return ClassLabel::Split(canonical_index(k, ctx.q() - 1));
    }
    // eigenvalue (t + y sqrt eps)/2 with y^2 = disc/eps
    let eps = ctx.special().eps;
    let y = f
        .sqrt(f.div(disc, eps).expect("eps != 0"))
        .expect("disc/eps is a square");
    t = f.mul(t, half);
    let z = Fq2 {
        a: t,
        b: f.mul(y, half),
    };
    let k = ctx.dlog().log_torus(z).expect("norm-one eigenvalue");
    ClassLabel::NonSplit(canonical_index(k, ctx.q() + 1))
}

/// A fixed element of the class.
pub fn class_representative(ctx: &HurwitzContext, c: ClassLabel) -> Result<ProjMat> {
    let q = ctx.q();
    if !class_exists(q, c) {
        return Err(Error::InvalidClass {
            class: c.to_string(),
            q,
        });
    }
    let f = ctx.field();
    let eps = ctx.special().eps;
    let (zero, one) = (f.zero(), f.one());
    Ok(match c {
        ClassLabel::Identity => ProjMat::identity(f),
        ClassLabel::UnipotentMain => ProjMat::canonical(f, one, one, zero, one),
        ClassLabel::UnipotentTwisted => ProjMat::canonical(f, one, eps, zero, one),
        ClassLabel::Split(k) => ProjMat::diagonal(f, f.pow(eps, k)),
        ClassLabel::NonSplit(k) => {
            let ext = f.ext(eps);
            ProjMat::from_torus(f, eps, ext.pow(ctx.special().tau, k))
        }
    })
}

/// A cyclic subgroup `H_l` of order 2, 3 or 7 with its generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupHandle {
    pub order: u64,
    pub generator: ProjMat,
    /// `generator^0, ..., generator^(order - 1)`.
    pub elements: Vec<ProjMat>,
}

/// `H_l` generated by `diag(x, x^-1)` or `[[x, eps y], [y, x]]`, where `x` is
/// `i`, `omega` or `phi` for `l = 2, 3, 7`.
pub fn subgroup(ctx: &HurwitzContext, l: u64) -> Result<SubgroupHandle> {
    let special = match l {
        2 => ctx.special().i,
        3 => ctx.special().omega,
        7 => ctx.special().phi,
        _ => return Err(Error::InvalidSubgroupOrder(l)),
    };
    let f = ctx.field();
    let generator = match special.location {
        Location::Split { value, .. } => ProjMat::diagonal(f, value),
        Location::Torus { value, .. } => ProjMat::from_torus(f, ctx.special().eps, value),
    };
    let mut elements = vec![ProjMat::identity(f)];
    for _ in 1..l {
        let next = elements.last().unwrap().mul(f, &generator);
        elements.push(next);
    }
    debug_assert!(elements.last().unwrap().mul(f, &generator).is_identity(f));
    Ok(SubgroupHandle {
        order: l,
        generator,
        elements,
    })
}

/// The class of `generator^j` in `H_l`, read off from the special element's
/// exponent without any matrix arithmetic.
pub fn subgroup_power_class(ctx: &HurwitzContext, l: u64, j: u64) -> Result<ClassLabel> {
    let special = match l {
        2 => ctx.special().i,
        3 => ctx.special().omega,
        7 => ctx.special().phi,
        _ => return Err(Error::InvalidSubgroupOrder(l)),
    };
    let q = ctx.q();
    let j = j % l;
    if j == 0 {
        return Ok(ClassLabel::Identity);
    }
    Ok(match special.location {
        Location::Split { exponent, .. } => {
            ClassLabel::Split(canonical_index(exponent * j % (q - 1), q - 1))
        }
        Location::Torus { exponent, .. } => {
            ClassLabel::NonSplit(canonical_index(exponent * j % (q + 1), q + 1))
        }
    })
}
