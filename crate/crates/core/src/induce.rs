//! Induced characters `Ind_{H_l}^G theta_l^k` for the cyclic subgroups of
//! order 2, 3 and 7.
//!
//! Three independent computations are provided:
//! * [`induced_closed_form`]: the case formulas by q mod 8, 12 and 28;
//! * [`induced_oracle`]: Frobenius reciprocity on the `l` subgroup elements;
//! * [`induced_brute_force`]: induced character values summed over all of G,
//!   then decomposed with inner products over classes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::chartab::{char_value, decompose, irreps, CharDecomp, ClassFunction, IrrepLabel};
use crate::context::HurwitzContext;
use crate::cyclo::{Accumulator, Cyc, RootOfUnity};
use crate::error::{Error, Result};
use crate::ffield::{Location, Special};
use crate::psl2::{
    class_of, class_representative, classes, enumerate_group, enumeration_cap, subgroup, ProjMat,
};

/// The character `theta_l^k` of `H_l`, with `theta_l(generator) = zeta_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InducedQuery {
    pub l: u64,
    pub k: u64,
}

impl InducedQuery {
    pub fn new(l: u64, k: u64) -> Result<Self> {
        if !matches!(l, 2 | 3 | 7) {
            return Err(Error::InvalidSubgroupOrder(l));
        }
        if k == 0 || k >= l {
            return Err(Error::InvalidCharacterIndex { order: l, k });
        }
        Ok(InducedQuery { l, k })
    }

    /// Every nontrivial character of every subgroup.
    pub fn all() -> Vec<InducedQuery> {
        [2u64, 3, 7]
            .into_iter()
            .flat_map(|l| (1..l).map(move |k| InducedQuery { l, k }))
            .collect()
    }
}

fn special_for(ctx: &HurwitzContext, l: u64) -> Result<Special> {
    match l {
        2 => Ok(ctx.special().i),
        3 => Ok(ctx.special().omega),
        7 => Ok(ctx.special().phi),
        _ => Err(Error::InvalidSubgroupOrder(l)),
    }
}

/// `alpha(x)` for `W(j)` when the special element `x` of `H_l` lies in `F^x`,
/// or `beta(x)` for `X(j)` when it lies in `T`; `None` otherwise.
pub fn special_value(
    ctx: &HurwitzContext,
    label: IrrepLabel,
    l: u64,
) -> Result<Option<RootOfUnity>> {
    let q = ctx.q();
    let special = special_for(ctx, l)?;
    Ok(match (label, special.location) {
        (IrrepLabel::W(j), Location::Split { exponent, .. }) => {
            Some(RootOfUnity::new(j as i128 * exponent as i128, q - 1))
        }
        (IrrepLabel::X(j), Location::Torus { exponent, .. }) => {
            Some(RootOfUnity::new(j as i128 * exponent as i128, q + 1))
        }
        _ => None,
    })
}

fn half(label: IrrepLabel, c: i64) -> Result<i64> {
    if c % 2 != 0 {
        return Err(Error::NonIntegral {
            label: label.to_string(),
            value: format!("{c}/2"),
        });
    }
    Ok(c / 2)
}

/// Which labels a display puts in the "excess" group.
#[derive(Clone, Copy)]
enum Excess {
    /// `W` with `alpha(x) != 1`, resp. `= zeta_7^(+-k)`.
    W,
    /// `X` with `beta(x) != 1`, resp. `= zeta_7^(+-k)`.
    X,
}

/// One displayed decomposition: `base` on V, on every W and X outside the
/// excess group, and half of it on the split pair unless the pair sits in the
/// excess bracket; `excess` on the excess group.
struct Display {
    base: i64,
    excess: i64,
    group: Excess,
    pair_in_excess: bool,
}

/// Closed-form decomposition of `Ind_{H_l}^G theta_l^k`.
pub fn induced_closed_form(ctx: &HurwitzContext, query: InducedQuery) -> Result<CharDecomp> {
    let InducedQuery { l, k } = InducedQuery::new(query.l, query.k)?;
    let info = ctx.info();
    let q = ctx.q() as i64;
    let display = match l {
        2 => match info.mod8 {
            1 => Display {
                base: (q - 1) / 2,
                excess: (q + 3) / 2,
                group: Excess::W,
                pair_in_excess: false,
            },
            3 => Display {
                base: (q + 1) / 2,
                excess: (q - 3) / 2,
                group: Excess::X,
                pair_in_excess: true,
            },
            5 => Display {
                base: (q - 1) / 2,
                excess: (q + 3) / 2,
                group: Excess::W,
                pair_in_excess: true,
            },
            7 => Display {
                base: (q + 1) / 2,
                excess: (q - 3) / 2,
                group: Excess::X,
                pair_in_excess: false,
            },
            r => panic!("admissible q has residue {r} mod 8"),
        },
        3 => match info.mod12 {
            1 | 7 => Display {
                base: (q - 1) / 3,
                excess: (q + 2) / 3,
                group: Excess::W,
                pair_in_excess: false,
            },
            5 | 11 => Display {
                base: (q + 1) / 3,
                excess: (q - 2) / 3,
                group: Excess::X,
                pair_in_excess: false,
            },
            r => panic!("admissible q has residue {r} mod 12"),
        },
        7 => match info.mod28 {
            1 | 15 => Display {
                base: (q - 1) / 7,
                excess: (q + 6) / 7,
                group: Excess::W,
                pair_in_excess: false,
            },
            13 | 27 => Display {
                base: (q + 1) / 7,
                excess: (q - 6) / 7,
                group: Excess::X,
                pair_in_excess: false,
            },
            r => panic!("admissible q has residue {r} mod 28"),
        },
        _ => unreachable!(),
    };
    // membership in the excess group from the value on the special element
    let in_excess = |v: RootOfUnity| -> bool {
        match l {
            2 => v == RootOfUnity::new(1, 2),
            3 => !v.is_one(),
            _ => v == RootOfUnity::new(k as i128, 7) || v == RootOfUnity::new(-(k as i128), 7),
        }
    };
    let mut out = CharDecomp::zero(ctx.q());
    for (label, _) in irreps(ctx.q()) {
        let m = match label {
            IrrepLabel::Triv => 0,
            IrrepLabel::V => display.base,
            IrrepLabel::Wp | IrrepLabel::Wpp | IrrepLabel::Xp | IrrepLabel::Xpp => half(
                label,
                if display.pair_in_excess {
                    display.excess
                } else {
                    display.base
                },
            )?,
            IrrepLabel::W(_) | IrrepLabel::X(_) => {
                let grouped = matches!(
                    (display.group, label),
                    (Excess::W, IrrepLabel::W(_)) | (Excess::X, IrrepLabel::X(_))
                );
                let excess = grouped
                    && in_excess(special_value(ctx, label, l)?.expect("family matches location"));
                if excess {
                    display.excess
                } else {
                    display.base
                }
            }
        };
        out.set(label, m);
    }
    Ok(out)
}

/// The `H_3` display for q = 5 mod 12 read literally: both brackets run over
/// the `X` with `beta(omega) = 1`, so that family gets `(2q - 1)/3` and the
/// `X` with `beta(omega) != 1` get nothing. `None` for other residues.
/// Kept for diagnostics; [`induced_closed_form`] uses `beta(omega) != 1` in
/// the second bracket.
pub fn induced_h3_as_printed(ctx: &HurwitzContext) -> Result<Option<CharDecomp>> {
    if ctx.info().mod12 != 5 {
        return Ok(None);
    }
    let q = ctx.q() as i64;
    let (base, excess) = ((q + 1) / 3, (q - 2) / 3);
    let mut out = CharDecomp::zero(ctx.q());
    for (label, _) in irreps(ctx.q()) {
        let m = match label {
            IrrepLabel::Triv => 0,
            IrrepLabel::Wp | IrrepLabel::Wpp => half(label, base)?,
            IrrepLabel::X(_) => {
                let fixed = special_value(ctx, label, 3)?.is_some_and(|v| v.is_one());
                if fixed {
                    base + excess
                } else {
                    0
                }
            }
            _ => base,
        };
        out.set(label, m);
    }
    Ok(Some(out))
}

fn theta(query: InducedQuery, j: u64) -> Cyc {
    Cyc::root_of_unity(query.l, (query.k * j) as i64).expect("l > 0")
}

/// `<theta_l^k, Res pi>` for every irreducible `pi`, evaluating characters on
/// the explicit subgroup elements.
pub fn induced_oracle(ctx: &HurwitzContext, query: InducedQuery) -> Result<CharDecomp> {
    let query = InducedQuery::new(query.l, query.k)?;
    let h = subgroup(ctx, query.l)?;
    let fused: Vec<_> = h.elements.iter().map(|x| class_of(ctx, x)).collect();
    let weight = BigRational::new(BigInt::from(1), BigInt::from(query.l));
    let mut out = CharDecomp::zero(ctx.q());
    for (label, _) in irreps(ctx.q()) {
        let mut acc = Accumulator::default();
        for (j, c) in fused.iter().enumerate() {
            acc.add_product(
                &weight,
                &theta(query, j as u64),
                &char_value(ctx, label, *c)?.conj(),
            );
        }
        let v = acc.finish();
        let m = v
            .to_i64()
            .filter(|&m| m >= 0)
            .ok_or_else(|| Error::NonIntegral {
                label: label.to_string(),
                value: v.to_canonical_string(),
            })?;
        out.set(label, m);
    }
    Ok(out)
}

/// `dim pi^{H_l} = (1/l) sum_{h in H_l} chi_pi(h)`.
pub fn fixed_dim(ctx: &HurwitzContext, label: IrrepLabel, l: u64) -> Result<u64> {
    let h = subgroup(ctx, l)?;
    let v = Cyc::sum(
        h.elements
            .iter()
            .map(|x| char_value(ctx, label, class_of(ctx, x)))
            .collect::<Result<Vec<_>>>()?,
    );
    let v = v.scale(&BigRational::new(BigInt::from(1), BigInt::from(l)));
    v.to_i64()
        .and_then(|m| u64::try_from(m).ok())
        .ok_or_else(|| Error::NonIntegral {
            label: label.to_string(),
            value: v.to_canonical_string(),
        })
}

/// Induced character values computed by summing `theta` over all conjugates,
/// `Ind theta (g) = (1/l) sum_{x in G} theta°(x g x^-1)`, then decomposed.
/// Enumerates G, so the enumeration cap applies.
pub fn induced_brute_force(ctx: &HurwitzContext, query: InducedQuery) -> Result<CharDecomp> {
    let query = InducedQuery::new(query.l, query.k)?;
    let f = ctx.field();
    let group = enumerate_group(f, enumeration_cap())?;
    let h = subgroup(ctx, query.l)?;
    let index: HashMap<ProjMat, u64> = h
        .elements
        .iter()
        .enumerate()
        .map(|(j, x)| (*x, j as u64))
        .collect();
    let cls = classes(ctx.q());
    let reps = cls
        .iter()
        .map(|&c| class_representative(ctx, c))
        .collect::<Result<Vec<_>>>()?;
    let weight = BigRational::new(BigInt::from(1), BigInt::from(query.l));
    let values: Vec<Cyc> = reps
        .par_iter()
        .map(|g| {
            let mut counts = vec![0i64; query.l as usize];
            for x in &group {
                if let Some(&j) = index.get(&g.conjugate_by(f, x)) {
                    counts[j as usize] += 1;
                }
            }
            let mut acc = Accumulator::default();
            for (j, &n) in counts.iter().enumerate() {
                if n != 0 {
                    acc.add(&(&weight * BigInt::from(n)), &theta(query, j as u64));
                }
            }
            acc.finish()
        })
        .collect();
    let function: ClassFunction = cls.into_iter().zip(values).collect();
    decompose(ctx, &function)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(q: u64, entries: &[(&str, i64)]) -> CharDecomp {
        CharDecomp::from_entries(q, entries.iter().map(|(l, m)| (l.parse().unwrap(), *m))).unwrap()
    }

    #[test]
    fn q13_h2() {
        let ctx = HurwitzContext::new(13).unwrap();
        let got = induced_closed_form(&ctx, InducedQuery::new(2, 1).unwrap()).unwrap();
        let want = d(
            13,
            &[
                ("V", 6),
                ("X(2)", 6),
                ("X(4)", 6),
                ("X(6)", 6),
                ("W(4)", 6),
                ("W(2)", 8),
                ("W'", 4),
                ("W''", 4),
            ],
        );
        assert_eq!(got, want);
        assert_eq!(got.dim(), 546);
    }

    #[test]
    fn closed_form_matches_oracles_small() {
        for q in [13u64, 29] {
            let ctx = HurwitzContext::new(q).unwrap();
            for query in InducedQuery::all() {
                let closed = induced_closed_form(&ctx, query).unwrap();
                assert_eq!(
                    closed,
                    induced_oracle(&ctx, query).unwrap(),
                    "q={q} {query:?}"
                );
                assert_eq!(
                    closed,
                    induced_brute_force(&ctx, query).unwrap(),
                    "q={q} {query:?}"
                );
                assert_eq!(closed.dim(), (ctx.order() / query.l) as i128);
                assert_eq!(closed.get(IrrepLabel::Triv), 0);
            }
        }
    }

    #[test]
    fn symmetric_in_k() {
        let ctx = HurwitzContext::new(13).unwrap();
        let ind = |l, k| induced_closed_form(&ctx, InducedQuery::new(l, k).unwrap()).unwrap();
        assert_eq!(ind(3, 1), ind(3, 2));
        for k in 1..7 {
            assert_eq!(ind(7, k), ind(7, 7 - k));
        }
    }

    #[test]
    fn fixed_dims() {
        let ctx = HurwitzContext::new(13).unwrap();
        assert_eq!(fixed_dim(&ctx, IrrepLabel::V, 2).unwrap(), 7);
        for l in [2u64, 3, 7] {
            assert_eq!(fixed_dim(&ctx, IrrepLabel::Triv, l).unwrap(), 1);
            let total: u64 = irreps(13)
                .iter()
                .map(|&(lab, dm)| dm * fixed_dim(&ctx, lab, l).unwrap())
                .sum();
            assert_eq!(total, ctx.order() / l);
        }
    }

    #[test]
    fn query_validation() {
        assert_eq!(
            InducedQuery::new(5, 1).unwrap_err(),
            Error::InvalidSubgroupOrder(5)
        );
        assert_eq!(
            InducedQuery::new(3, 3).unwrap_err(),
            Error::InvalidCharacterIndex { order: 3, k: 3 }
        );
        assert_eq!(InducedQuery::all().len(), 1 + 2 + 6);
    }
}
