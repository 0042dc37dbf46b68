//! Worked values at small q.

use std::collections::BTreeMap;

use hurwitz::chartab::{char_value, irreps, CharDecomp, IrrepLabel as L};
use hurwitz::ffield::{GeneratorChoice, Location};
use hurwitz::induce::{
    fixed_dim, induced_closed_form, induced_oracle, special_value, InducedQuery,
};
use hurwitz::psl2::{classify_q, enumerate_group, subgroup, ClassLabel, ProjMat, DEFAULT_ENUM_CAP};
use hurwitz::rrmod::{
    base_m, canonical_module, equivariant_degree, h1, n_values, ramification_base_m,
    ramification_module, riemann_roch, Divisor,
};
use hurwitz::{ContextOptions, Error, HurwitzContext};

fn ctx(q: u64) -> HurwitzContext {
    HurwitzContext::new(q).unwrap()
}

fn decomp(q: u64, e: &[(L, i64)]) -> CharDecomp {
    CharDecomp::from_entries(q, e.iter().copied()).unwrap()
}

#[test]
fn admissibility() {
    for q in [13, 29, 41, 43, 83, 97, 113, 125, 127] {
        assert!(classify_q(q).is_ok(), "{q}");
    }
    for q in [7, 8, 11, 27, 343, 2, 9, 49, 2197] {
        assert!(
            matches!(classify_q(q), Err(Error::Inadmissible { .. })),
            "{q}"
        );
    }
    let c = ctx(29);
    assert_eq!((c.order(), c.genus()), (12180, 146));
}

#[test]
fn irreducible_inventory() {
    let want13 = [
        (L::Triv, 1),
        (L::V, 13),
        (L::Wp, 7),
        (L::Wpp, 7),
        (L::X(2), 12),
        (L::X(4), 12),
        (L::X(6), 12),
        (L::W(2), 14),
        (L::W(4), 14),
    ];
    assert_eq!(irreps(13), want13);
    let irr = irreps(29);
    assert_eq!(irr.len(), 17);
    assert_eq!(
        irr.iter()
            .filter(|(l, d)| matches!(l, L::X(_)) && *d == 28)
            .count(),
        7
    );
    assert_eq!(
        irr.iter()
            .filter(|(l, d)| matches!(l, L::W(_)) && *d == 30)
            .count(),
        6
    );
    assert!(irr.contains(&(L::Wp, 15)) && irr.contains(&(L::Wpp, 15)));
}

#[test]
fn character_values_q13() {
    let c = ctx(13);
    assert_eq!(
        char_value(&c, L::V, ClassLabel::Identity).unwrap().to_i64(),
        Some(13)
    );
    for k in 1..=3 {
        assert_eq!(
            char_value(&c, L::V, ClassLabel::NonSplit(k))
                .unwrap()
                .to_i64(),
            Some(-1)
        );
    }
    let (xi, xi2) = c.gauss_periods().unwrap();
    assert_eq!(
        char_value(&c, L::Wp, ClassLabel::UnipotentMain).unwrap(),
        &hurwitz::cyclo::Cyc::one() + &xi
    );
    assert_eq!(
        char_value(&c, L::Wpp, ClassLabel::UnipotentMain).unwrap(),
        &hurwitz::cyclo::Cyc::one() + &xi2
    );
}

#[test]
fn group_enumeration() {
    assert_eq!(
        enumerate_group(ctx(13).field(), DEFAULT_ENUM_CAP)
            .unwrap()
            .len(),
        1092
    );
    assert_eq!(
        enumerate_group(ctx(29).field(), DEFAULT_ENUM_CAP)
            .unwrap()
            .len(),
        12180
    );
    assert_eq!(
        enumerate_group(ctx(113).field(), DEFAULT_ENUM_CAP).unwrap_err(),
        Error::EnumerationCap {
            order: 721392,
            cap: DEFAULT_ENUM_CAP
        }
    );
}

#[test]
fn subgroup_generators_q13() {
    let c = ctx(13);
    let f = c.field();
    let eps = c.special().eps;
    let i = f.pow(eps, 3);
    assert_eq!(subgroup(&c, 2).unwrap().generator, ProjMat::diagonal(f, i));
    let h7 = subgroup(&c, 7).unwrap();
    let Location::Torus { value, .. } = c.special().phi.location else {
        panic!("phi lies in the torus for q = 13")
    };
    assert_eq!(h7.generator, ProjMat::from_torus(f, eps, value));
    for l in [2, 3, 7] {
        let h = subgroup(&c, l).unwrap();
        assert_eq!(h.generator.order(f), l);
        assert_eq!(h.elements.len() as u64, l);
    }
}

#[test]
fn induced_h2_q13() {
    let c = ctx(13);
    let want = decomp(
        13,
        &[
            (L::V, 6),
            (L::Wp, 4),
            (L::Wpp, 4),
            (L::X(2), 6),
            (L::X(4), 6),
            (L::X(6), 6),
            (L::W(2), 8),
            (L::W(4), 6),
        ],
    );
    let q = InducedQuery::new(2, 1).unwrap();
    assert_eq!(induced_closed_form(&c, q).unwrap(), want);
    assert_eq!(induced_oracle(&c, q).unwrap(), want);
    assert_eq!(want.dim(), 546);
}

/// A `W` (resp. `X`) summand of `Ind theta_l^k` has the multiplicity of `V`,
/// except where its value at the special element is -1 (l = 2), nontrivial
/// (l = 3) or `zeta_7^(+-k)` (l = 7). There it is larger (resp. smaller), by 2
/// for l = 2 and by 1 otherwise.
#[test]
fn special_value_multiplicity_pattern() {
    use hurwitz::cyclo::RootOfUnity;
    for q in [13u64, 29, 41, 43, 71, 83, 97, 113, 125, 127, 167] {
        let c = ctx(q);
        for query in InducedQuery::all() {
            let (l, k) = (query.l, query.k);
            let ind = induced_closed_form(&c, query).unwrap();
            let v = ind.get(L::V);
            let gap = if l == 2 { 2 } else { 1 };
            for (label, _) in irreps(q) {
                let Some(value) = special_value(&c, label, l).unwrap() else {
                    continue;
                };
                let hit = match l {
                    2 => value == RootOfUnity::new(1, 2),
                    3 => !value.is_one(),
                    _ => {
                        value == RootOfUnity::new(k as i128, 7)
                            || value == RootOfUnity::new(-(k as i128), 7)
                    }
                };
                let want = match label {
                    L::W(_) if hit => v + gap,
                    L::X(_) if hit => v - gap,
                    L::W(_) | L::X(_) => v,
                    _ => continue,
                };
                assert_eq!(ind.get(label), want, "q = {q}, l = {l}, k = {k}, {label}");
            }
        }
    }
}

#[test]
fn induced_dimensions() {
    for q in [13u64, 29, 41, 43] {
        let c = ctx(q);
        for query in InducedQuery::all() {
            let o = induced_oracle(&c, query).unwrap();
            assert_eq!(o.dim(), (c.order() / query.l) as i128);
            assert_eq!(o.get(L::Triv), 0);
        }
    }
}

#[test]
fn fixed_dimensions() {
    let c = ctx(13);
    assert_eq!(fixed_dim(&c, L::V, 2).unwrap(), 7);
    for q in [13u64, 29, 43] {
        let c = ctx(q);
        for l in [2, 3, 7] {
            assert_eq!(fixed_dim(&c, L::Triv, l).unwrap(), 1);
            let total: u64 = irreps(q)
                .into_iter()
                .map(|(p, d)| d * fixed_dim(&c, p, l).unwrap())
                .sum();
            assert_eq!(total, c.order() / l);
        }
    }
}

#[test]
fn base_multiplicity() {
    assert_eq!(base_m(13).unwrap(), 13);
    assert_eq!(base_m(97).unwrap(), 98);
    assert_eq!(base_m(167).unwrap(), 169);
    assert_eq!(ramification_base_m(&ctx(167)), 170);
    assert_eq!(ramification_base_m(&ctx(337)), 340);
    for q in [13u64, 29, 41, 43, 71, 97, 113, 125, 127] {
        assert_eq!(
            ramification_base_m(&ctx(q)),
            base_m(q).unwrap() as i64,
            "q = {q}"
        );
    }
}

#[test]
fn n_values_small_q() {
    let (na, nb) = n_values(&ctx(13)).unwrap();
    assert_eq!(na, BTreeMap::from([(L::W(2), 2), (L::W(4), 1)]));
    assert_eq!(
        nb,
        BTreeMap::from([(L::X(2), 1), (L::X(4), 1), (L::X(6), 1)])
    );
    let (_, nb) = n_values(&ctx(29)).unwrap();
    let zero: Vec<L> = nb
        .iter()
        .filter(|(_, &n)| n == 0)
        .map(|(&l, _)| l)
        .collect();
    assert_eq!(zero, [L::X(6), L::X(12)]);
    assert!(nb.values().all(|&n| n <= 1));
}

#[test]
fn ramification_module_q13() {
    let want = decomp(
        13,
        &[
            (L::V, 13),
            (L::Wp, 7),
            (L::Wpp, 7),
            (L::X(2), 12),
            (L::X(4), 12),
            (L::X(6), 12),
            (L::W(2), 15),
            (L::W(4), 14),
        ],
    );
    let m = ramification_module(&ctx(13)).unwrap();
    assert_eq!(m.total, want);
    assert_eq!(m.total.dim(), 85 * 13);
    assert_eq!(ramification_module(&ctx(29)).unwrap().total.dim(), 12325);
}

#[test]
fn equivariant_degrees_q13() {
    let c = ctx(13);
    assert_eq!(
        equivariant_degree(&c, Divisor::new(1, 0, 0, 0)).unwrap(),
        CharDecomp::regular(13)
    );
    let h7 = ramification_module(&c).unwrap().h7;
    assert_eq!(
        equivariant_degree(&c, Divisor::new(0, 0, 0, 3)).unwrap(),
        h7
    );
    assert_eq!(
        equivariant_degree(&c, Divisor::new(0, 0, 0, 6)).unwrap(),
        h7.scale(2)
    );
}

#[test]
fn riemann_roch_q13() {
    let c = ctx(13);
    let d2 = riemann_roch(&c, Divisor::new(0, 1, 0, 0)).unwrap();
    let want = decomp(
        13,
        &[
            (L::Triv, 1),
            (L::V, 6),
            (L::Wp, 4),
            (L::Wpp, 4),
            (L::X(2), 6),
            (L::X(4), 6),
            (L::X(6), 6),
            (L::W(2), 7),
            (L::W(4), 6),
        ],
    );
    assert_eq!(d2, want);
    assert_eq!(d2.dim(), 533);
    assert_eq!(
        riemann_roch(&c, Divisor::new(1, 0, 0, 0)).unwrap().dim(),
        1079
    );
    assert!(matches!(
        riemann_roch(&c, Divisor::new(0, 0, 0, 0)),
        Err(Error::NonPositiveDegree { degree: 0 })
    ));
}

#[test]
fn canonical_small_q() {
    let c = ctx(13);
    assert_eq!(canonical_module(&c).unwrap(), decomp(13, &[(L::W(2), 1)]));
    assert_eq!(h1(&c).unwrap().dim(), 28);
    assert_eq!(canonical_module(&ctx(29)).unwrap().dim(), 146);
}

fn profile(d: &CharDecomp) -> Vec<(u64, i64)> {
    let mut v: Vec<(u64, i64)> = d
        .entries()
        .into_iter()
        .map(|(_, dim, m)| (dim, m))
        .collect();
    v.sort();
    v
}

/// Choosing other generators for `F^x` and the torus only relabels the
/// principal and discrete series.
#[test]
fn generator_choice_invariance() {
    for q in [13u64, 29, 41, 43, 71] {
        let a = ctx(q);
        let opts = ContextOptions {
            generators: GeneratorChoice {
                eps_rank: 1,
                tau_rank: 1,
            },
            ..Default::default()
        };
        let b = HurwitzContext::with_options(q, opts).unwrap();
        assert_ne!(
            (a.special().eps, a.special().tau),
            (b.special().eps, b.special().tau)
        );
        for l in [2u64, 3] {
            let query = InducedQuery::new(l, 1).unwrap();
            assert_eq!(
                profile(&induced_oracle(&a, query).unwrap()),
                profile(&induced_oracle(&b, query).unwrap())
            );
        }
        let multiset = |c: &HurwitzContext| {
            let mut v: Vec<_> = (1..7)
                .map(|k| profile(&induced_oracle(c, InducedQuery::new(7, k).unwrap()).unwrap()))
                .collect();
            v.sort();
            v
        };
        assert_eq!(multiset(&a), multiset(&b), "q = {q}");
        assert_eq!(
            profile(&ramification_module(&a).unwrap().total),
            profile(&ramification_module(&b).unwrap().total)
        );
        assert_eq!(
            profile(&canonical_module(&a).unwrap()),
            profile(&canonical_module(&b).unwrap())
        );
    }
}

/// The least admissible q of every residue class mod 168, against the
/// composition and the invariant-dimension formula.
#[test]
fn case_formulas_cover_every_residue_class() {
    use hurwitz::rrmod::{canonical_discrepancy, ramification_from_invariants};
    let mut reps = BTreeMap::new();
    for q in 2..2000u64 {
        if classify_q(q).is_ok() {
            reps.entry(q % 168).or_insert(q);
        }
    }
    assert_eq!(reps.len(), 16);
    for &q in reps.values() {
        let c = ctx(q);
        let gamma = ramification_module(&c).unwrap().total;
        assert_eq!(gamma, ramification_from_invariants(&c).unwrap(), "q = {q}");
        assert_eq!(gamma.get(L::V), ramification_base_m(&c), "q = {q}");
        let k = canonical_module(&c).unwrap();
        assert!(k.is_nonnegative(), "q = {q}: {k}");
        assert!(
            canonical_discrepancy(&c).unwrap().is_single_trivial(),
            "q = {q}"
        );
    }
}
