//! Galois action on the irreducibles of PSL(2, q), invariance tests, and the
//! invariant-dimension formula for L(D).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{factorize, gcd, legendre, pow_mod};
use crate::chartab::{char_value, irreps, CharDecomp, IrrepLabel, RationalDecomp};
use crate::context::HurwitzContext;
use crate::error::{Error, Result};
use crate::induce::fixed_dim;
use crate::psl2::classes;
use crate::rrmod::{equivariant_degree, Divisor};

fn check_unit(ctx: &HurwitzContext, j: i64) -> Result<u64> {
    let n = ctx.conductor();
    let jr = j.rem_euclid(n as i64) as u64;
    if gcd(jr, n) != 1 {
        return Err(Error::NotCoprime { j, conductor: n });
    }
    Ok(jr)
}

fn fold(k: u64, modulus: u64) -> u64 {
    let k = k % modulus;
    k.min(modulus - k)
}

/// Image of `label` under `sigma_j: zeta -> zeta^j`.
pub fn permute_label(ctx: &HurwitzContext, j: i64, label: IrrepLabel) -> Result<IrrepLabel> {
    let jr = check_unit(ctx, j)?;
    let q = ctx.q();
    let swap = legendre((jr % ctx.p()) as i64, ctx.p()) == -1;
    let mulmod = |k: u64, m: u64| ((jr as u128 * k as u128) % m as u128) as u64;
    Ok(match label {
        IrrepLabel::Triv | IrrepLabel::V => label,
        IrrepLabel::W(k) => IrrepLabel::W(fold(mulmod(k, q - 1), q - 1)),
        IrrepLabel::X(k) => IrrepLabel::X(fold(mulmod(k, q + 1), q + 1)),
        IrrepLabel::Wp if swap => IrrepLabel::Wpp,
        IrrepLabel::Wpp if swap => IrrepLabel::Wp,
        IrrepLabel::Xp if swap => IrrepLabel::Xpp,
        IrrepLabel::Xpp if swap => IrrepLabel::Xp,
        _ => label,
    })
}

/// Checks `sigma_j(chi_pi(c)) = chi_{sigma_j pi}(c)` for every label and class.
pub fn check_permutation(ctx: &HurwitzContext, j: i64) -> Result<()> {
    for (label, _) in irreps(ctx.q()) {
        let image = permute_label(ctx, j, label)?;
        for c in classes(ctx.q()) {
            let lhs = char_value(ctx, label, c)?.galois(j)?;
            let rhs = char_value(ctx, image, c)?;
            if lhs != rhs {
                return Err(Error::IdentityFailure(format!(
                    "sigma_{j} maps {label} to {image} but differs at {c}"
                )));
            }
        }
    }
    Ok(())
}

/// Residues generating `(Z/N)^x`, one CRT lift per cyclic factor.
pub fn generators(ctx: &HurwitzContext) -> Vec<u64> {
    let n = ctx.conductor();
    let mut out = Vec::new();
    for (p, a) in factorize(n) {
        let pa = p.pow(a);
        let rest = n / pa;
        let local: Vec<u64> = if p == 2 {
            match a {
                1 => vec![],
                2 => vec![3],
                _ => vec![pa - 1, 5],
            }
        } else {
            vec![primitive_root_prime_power(p, a)]
        };
        for g in local {
            out.push(crt_lift(g, pa, rest));
        }
    }
    if out.is_empty() {
        out.push(1);
    }
    out
}

/// `x = g mod pa`, `x = 1 mod rest`.
fn crt_lift(g: u64, pa: u64, rest: u64) -> u64 {
    if rest == 1 {
        return g % pa;
    }
    let n = pa as u128 * rest as u128;
    let inv = crate::arith::inv_mod(rest % pa, pa).expect("coprime") as u128;
    // x = 1 + rest * t with rest t = g - 1 mod pa
    let t = ((g as u128 + pa as u128 - 1) % pa as u128) * inv % pa as u128;
    ((1 + rest as u128 * t) % n) as u64
}

fn primitive_root_prime_power(p: u64, a: u32) -> u64 {
    let phi = p - 1;
    let factors: Vec<u64> = factorize(phi).into_iter().map(|(f, _)| f).collect();
    let g = (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, phi / f, p) != 1))
        .unwrap_or(1);
    if a == 1 {
        return g;
    }
    // g generates mod p^a iff g^(p-1) != 1 mod p^2
    if pow_mod(g, p - 1, p * p) != 1 {
        g
    } else {
        g + p
    }
}

/// Why a decomposition is not Galois-invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceWitness {
    pub j: u64,
    pub label: IrrepLabel,
    pub image: IrrepLabel,
    pub label_mult: i64,
    pub image_mult: i64,
}

/// `None` if `d` is fixed by every generator of the Galois action, else a
/// witness.
pub fn is_invariant(ctx: &HurwitzContext, d: &CharDecomp) -> Result<Option<InvarianceWitness>> {
    for j in generators(ctx) {
        for (label, _) in irreps(ctx.q()) {
            let image = permute_label(ctx, j as i64, label)?;
            let (a, b) = (d.get(label), d.get(image));
            if a != b {
                return Ok(Some(InvarianceWitness {
                    j,
                    label,
                    image,
                    label_mult: a,
                    image_mult: b,
                }));
            }
        }
    }
    Ok(None)
}

/// Invariant dimensions `dim pi^{H_l}` for every irreducible.
pub fn fixed_dims(ctx: &HurwitzContext) -> Result<BTreeMap<IrrepLabel, [u64; 3]>> {
    irreps(ctx.q())
        .into_iter()
        .map(|(l, _)| {
            Ok((
                l,
                [
                    fixed_dim(ctx, l, 2)?,
                    fixed_dim(ctx, l, 3)?,
                    fixed_dim(ctx, l, 7)?,
                ],
            ))
        })
        .collect()
}

fn invariant_dimension_formula(
    ctx: &HurwitzContext,
    d: Divisor,
    lead: BigRational,
) -> Result<RationalDecomp> {
    let q = ctx.q();
    let r = d.reduced();
    let frac = |n: i64, den: i64| BigRational::new(BigInt::from(n), BigInt::from(den));
    let half = frac(1, 2);
    let c_dim = lead + frac(r.r1, 1) + frac(r.r2, 1) + frac(r.r3, 2) + frac(r.r7, 6);
    let c2 = &half - frac(r.r2, 1);
    let c3 = &half - frac(r.r3, 2);
    let c7 = &half - frac(r.r7, 6);
    let mut out = RationalDecomp::zero(q);
    for (label, [f2, f3, f7]) in fixed_dims(ctx)? {
        let d = frac(crate::chartab::dim(q, label) as i64, 1);
        let v = &c_dim * d
            + &c2 * frac(f2 as i64, 1)
            + &c3 * frac(f3 as i64, 1)
            + &c7 * frac(f7 as i64, 1);
        out.add_to(label, &v);
    }
    Ok(out)
}

fn check_fast_domain(ctx: &HurwitzContext, d: Divisor) -> Result<()> {
    if !matches!(d.reduced().r7, 0 | 3 | 6) {
        return Err(Error::DivisorOutOfDomain(format!(
            "{d}: r7 mod 7 must be 0, 3 or 6"
        )));
    }
    let degree = d.degree(ctx.order());
    if degree <= 0 {
        return Err(Error::NonPositiveDegree {
            degree: degree as i64,
        });
    }
    Ok(())
}

/// L(D) from invariant dimensions on the reduced divisor, for
/// `r7 mod 7 in {0, 3, 6}`:
///
/// ```text
/// (r1 + r2 + r3/2 + r7/6 - 1/2) dim pi + (1/2 - r2) dim pi^{H_2}
///   + (1/2 - r3/2) dim pi^{H_3} + (1/2 - r7/6) dim pi^{H_7}
/// ```
pub fn fast_ld(ctx: &HurwitzContext, d: Divisor) -> Result<CharDecomp> {
    check_fast_domain(ctx, d)?;
    let v =
        invariant_dimension_formula(ctx, d, BigRational::new(BigInt::from(-1), BigInt::from(2)))?;
    v.to_integral().ok_or_else(|| {
        let (label, value) = v
            .mults
            .iter()
            .find(|(_, x)| !x.is_integer())
            .expect("some entry is fractional");
        Error::NonIntegral {
            label: label.to_string(),
            value: value.to_string(),
        }
    })
}

/// The same formula with leading coefficient `1 + r1 + ...` in place of
/// `r1 + ... - 1/2`. It exceeds [`fast_ld`] by `3/2 dim pi`, so it is not
/// integral for odd-dimensional `pi`.
pub fn fast_ld_uncorrected(ctx: &HurwitzContext, d: Divisor) -> Result<RationalDecomp> {
    check_fast_domain(ctx, d)?;
    invariant_dimension_formula(ctx, d, BigRational::from_integer(BigInt::from(1)))
}

/// Reduced divisors outside `r7 in {0, 3, 6}` whose equivariant degree is
/// nevertheless Galois-invariant.
pub fn invariant_outside_sufficient_range(ctx: &HurwitzContext) -> Result<Vec<Divisor>> {
    let mut out = Vec::new();
    for r2 in 0..2 {
        for r3 in 0..3 {
            for r7 in [1, 2, 4, 5] {
                let d = Divisor::new(0, r2, r3, r7);
                if is_invariant(ctx, &equivariant_degree(ctx, d)?)?.is_none() {
                    out.push(d);
                }
            }
        }
    }
    Ok(out)
}
