//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! A [`Cyc`] is stored in a canonical normal form: the smallest conductor `N`
//! whose field contains the value (never `N = 2 mod 4`), and rational
//! coefficients over a fixed basis of roots of unity `zeta_N^e`. Equality is
//! therefore plain structural equality.
//!
//! The basis is a tensor product over the prime powers `p^a || N`. Write the
//! `p`-component of an exponent as `f = f0 + p^(a-1) f1` with
//! `0 <= f0 < p^(a-1)`. For odd `p` the basis keeps `f1 != 0` and rewrites
//! `f1 = 0` with `zeta_p^0 = -(zeta_p + ... + zeta_p^(p-1))`; for `p = 2` it
//! keeps `f1 = 0` and rewrites `zeta_(2^a)^(2^(a-1)) = -1`. Each rewrite only
//! touches one prime component, so reducing prime by prime terminates in the
//! basis. Rational numbers end up at conductor 1 with support `{0}`.
//!
//! Values are combined in the group ring Q[Z/N] (plain exponent maps, where
//! products are convolutions) and only reduced at the end of an operation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{factorize, gcd, inv_mod, lcm, legendre};
use crate::error::{Error, Result};
use crate::ffield::Field;

pub type Rational = BigRational;

#[derive(Debug)]
struct PrimeData {
    p: u64,
    a: u32,
    /// p^a
    pa: u64,
    /// p^(a-1)
    top: u64,
    /// inverse of N / p^a modulo p^a
    u: u64,
}

#[derive(Debug)]
struct ConductorInfo {
    n: u64,
    primes: Vec<PrimeData>,
}

impl ConductorInfo {
    fn new(n: u64) -> Self {
        let primes = factorize(n)
            .into_iter()
            .map(|(p, a)| {
                let pa = p.pow(a);
                let u = inv_mod((n / pa) % pa, pa).expect("coprime cofactor");
                PrimeData {
                    p,
                    a,
                    pa,
                    top: pa / p,
                    u,
                }
            })
            .collect();
        ConductorInfo { n, primes }
    }

    /// p-component of the exponent, in `[0, p^a)`.
    fn component(&self, pd: &PrimeData, e: u64) -> u64 {
        ((e % pd.pa) as u128 * pd.u as u128 % pd.pa as u128) as u64
    }
}

fn conductor_info(n: u64) -> Arc<ConductorInfo> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ConductorInfo>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(info) = cache.lock().unwrap().get(&n) {
        return info.clone();
    }
    let info = Arc::new(ConductorInfo::new(n));
    cache.lock().unwrap().insert(n, info.clone());
    info
}

fn accumulate(map: &mut HashMap<u64, Rational>, e: u64, c: Rational) {
    use std::collections::hash_map::Entry;
    match map.entry(e) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
    }
}

/// Rewrites a group-ring element at conductor `n` into the canonical basis.
fn reduce(n: u64, terms: HashMap<u64, Rational>) -> HashMap<u64, Rational> {
    let info = conductor_info(n);
    let mut cur = terms;
    for pd in &info.primes {
        let needs_work = cur.keys().any(|&e| !in_basis(&info, pd, e));
        if !needs_work {
            continue;
        }
        let mut next: HashMap<u64, Rational> = HashMap::with_capacity(cur.len() * 2);
        for (e, c) in cur {
            if in_basis(&info, pd, e) {
                accumulate(&mut next, e, c);
            } else if pd.p == 2 {
                // zeta^(n/2) = -1
                accumulate(&mut next, (e + n / 2) % n, -c);
            } else {
                let step = n / pd.p;
                for j in 1..pd.p {
                    accumulate(&mut next, (e + j * step) % n, -c.clone());
                }
            }
        }
        cur = next;
    }
    cur
}

fn in_basis(info: &ConductorInfo, pd: &PrimeData, e: u64) -> bool {
    let f = info.component(pd, e);
    if pd.p == 2 {
        f < pd.top
    } else {
        f / pd.top != 0
    }
}

/// Moves a canonical element to the smallest conductor containing it.
fn minimize(mut n: u64, mut terms: HashMap<u64, Rational>) -> (u64, HashMap<u64, Rational>) {
    if terms.is_empty() {
        return (1, terms);
    }
    'outer: loop {
        if n % 4 == 2 {
            // the 2-component of every basis exponent is 0
            debug_assert!(terms.keys().all(|e| e % 2 == 0));
            terms = terms.into_iter().map(|(e, c)| (e / 2, c)).collect();
            n /= 2;
            continue;
        }
        let info = conductor_info(n);
        for pd in &info.primes {
            if pd.a >= 2 {
                if terms.keys().all(|e| e % pd.p == 0) {
                    terms = terms.into_iter().map(|(e, c)| (e / pd.p, c)).collect();
                    n /= pd.p;
                    continue 'outer;
                }
            } else if let Some(sub) = descend_prime(&info, pd, &terms) {
                terms = sub;
                n /= pd.p;
                continue 'outer;
            }
        }
        break;
    }
    (n, terms)
}

/// For `p || n`, the element lies in Q(zeta_(n/p)) iff along every fiber
/// `e + t n/p` the `p - 1` basis coefficients agree.
fn descend_prime(
    info: &ConductorInfo,
    pd: &PrimeData,
    terms: &HashMap<u64, Rational>,
) -> Option<HashMap<u64, Rational>> {
    let n = info.n;
    let step = n / pd.p;
    if !(terms.len() as u64).is_multiple_of(pd.p - 1) {
        return None;
    }
    let mut fibers: HashMap<u64, (u64, &Rational, u64)> = HashMap::new();
    for (&e, c) in terms {
        let key = e % step;
        let entry = fibers.entry(key).or_insert((0, c, e));
        if entry.1 != c {
            return None;
        }
        entry.0 += 1;
    }
    let mut out = HashMap::with_capacity(fibers.len());
    for (_, (count, c, e)) in fibers {
        if count != pd.p - 1 {
            return None;
        }
        let f = info.component(pd, e);
        // representative of the fiber with zero p-component
        let e0 = (e + n - (f as u128 * step as u128 % n as u128) as u64) % n;
        debug_assert_eq!(e0 % pd.p, 0);
        out.insert(e0 / pd.p, -c.clone());
    }
    Some(out)
}

/// An exact element of a cyclotomic field in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyc {
    conductor: u64,
    terms: BTreeMap<u64, Rational>,
}

impl Default for Cyc {
    fn default() -> Self {
        Cyc::zero()
    }
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc {
            conductor: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Cyc::from_rational(Rational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Cyc::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(0, r);
        }
        Cyc {
            conductor: 1,
            terms,
        }
    }

    /// Canonical form of `zeta_n^e`.
    pub fn root_of_unity(n: u64, e: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroConductor);
        }
        let e = e.rem_euclid(n as i64) as u64;
        Ok(Cyc::from_group_ring(n, [(e, Rational::one())]))
    }

    /// Builds the element `sum c_e zeta_n^e` from arbitrary exponents.
    pub fn from_group_ring(n: u64, terms: impl IntoIterator<Item = (u64, Rational)>) -> Self {
        assert!(n > 0, "conductor must be positive");
        let mut map = HashMap::new();
        for (e, c) in terms {
            accumulate(&mut map, e % n, c);
        }
        Cyc::canonicalize(n, map)
    }

    fn canonicalize(n: u64, map: HashMap<u64, Rational>) -> Self {
        let reduced = reduce(n, map);
        let (conductor, terms) = minimize(n, reduced);
        Cyc {
            conductor,
            terms: terms.into_iter().collect(),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Canonical `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The exact rational value, if the element is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.conductor != 1 {
            return None;
        }
        Some(self.terms.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    /// The exact integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// Integral coefficients in the canonical basis, which is an integral
    /// basis of `Z[zeta_N]`.
    pub fn is_algebraic_integer(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Terms lifted to conductor `l` (a multiple of the own conductor),
    /// without re-reduction.
    fn lifted(&self, l: u64) -> impl Iterator<Item = (u64, &Rational)> {
        let scale = l / self.conductor;
        self.terms.iter().map(move |(&e, c)| (e * scale, c))
    }

    pub fn scale(&self, r: &Rational) -> Cyc {
        if r.is_zero() {
            return Cyc::zero();
        }
        Cyc {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    /// Image under `zeta -> zeta^j`. Requires `gcd(j, conductor) = 1`.
    pub fn galois(&self, j: i64) -> Result<Cyc> {
        let n = self.conductor;
        let jr = j.rem_euclid(n as i64) as u64;
        if gcd(jr, n) != 1 {
            return Err(Error::NotCoprime { j, conductor: n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let map = self
            .terms
            .iter()
            .map(|(&e, c)| (((e as u128 * jr as u128) % n as u128) as u64, c.clone()))
            .collect();
        Ok(Cyc::canonicalize(n, map))
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyc {
        self.galois(-1)
            .expect("-1 is a unit modulo every conductor")
    }

    /// Sum of many values, grouped by conductor before the final merge so
    /// that each group is reduced in its own (small) field.
    pub fn sum<I: IntoIterator<Item = Cyc>>(iter: I) -> Cyc {
        let mut acc = Accumulator::default();
        for x in iter {
            acc.add(&Rational::one(), &x);
        }
        acc.finish()
    }

    /// `c0 + c1*z^e1 + ...` over the canonical basis of this conductor.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(&e, c)| {
                if e == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*z^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses [`Cyc::to_canonical_string`] output at the given conductor.
    pub fn parse(conductor: u64, s: &str) -> Result<Cyc> {
        if conductor == 0 {
            return Err(Error::ZeroConductor);
        }
        let s = s.trim();
        if s == "0" {
            return Ok(Cyc::zero());
        }
        let mut terms = Vec::new();
        for part in s.split(" + ") {
            let (coef, exp) = match part.split_once("*z^") {
                Some((c, e)) => {
                    let e: u64 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?;
                    (c, e)
                }
                None => (part, 0),
            };
            let coef = Rational::from_str(coef.trim())
                .map_err(|_| Error::Parse(format!("bad coefficient in {part:?}")))?;
            terms.push((exp, coef));
        }
        Ok(Cyc::from_group_ring(conductor, terms))
    }
}

/// Collects sums of (scaled) values and products, bucketed by conductor.
#[derive(Default)]
pub struct Accumulator {
    buckets: HashMap<u64, HashMap<u64, Rational>>,
}

impl Accumulator {
    pub fn add(&mut self, coef: &Rational, x: &Cyc) {
        if coef.is_zero() || x.is_zero() {
            return;
        }
        let bucket = self.buckets.entry(x.conductor).or_default();
        for (&e, c) in &x.terms {
            accumulate(bucket, e, c * coef);
        }
    }

    /// Adds `coef * x * y`.
    pub fn add_product(&mut self, coef: &Rational, x: &Cyc, y: &Cyc) {
        if coef.is_zero() || x.is_zero() || y.is_zero() {
            return;
        }
        let l = lcm(x.conductor, y.conductor);
        let bucket = self.buckets.entry(l).or_default();
        let ys: Vec<(u64, Rational)> = y.lifted(l).map(|(e, c)| (e, c * coef)).collect();
        for (ex, cx) in x.lifted(l) {
            for (ey, cy) in &ys {
                accumulate(bucket, (ex + ey) % l, cx * cy);
            }
        }
    }

    pub fn finish(self) -> Cyc {
        let mut parts: Vec<Cyc> = self
            .buckets
            .into_iter()
            .filter(|(_, m)| !m.is_empty())
            .map(|(n, m)| Cyc::canonicalize(n, m))
            .collect();
        // merge small conductors first
        parts.sort_by_key(|c| c.conductor);
        parts.into_iter().fold(Cyc::zero(), |acc, x| &acc + &x)
    }
}

fn combine(x: &Cyc, y: &Cyc, sign: i8) -> Cyc {
    if y.is_zero() {
        return x.clone();
    }
    if x.is_zero() {
        return if sign > 0 { y.clone() } else { -y };
    }
    let l = lcm(x.conductor, y.conductor);
    let mut map: HashMap<u64, Rational> = HashMap::new();
    for (e, c) in x.lifted(l) {
        accumulate(&mut map, e, c.clone());
    }
    for (e, c) in y.lifted(l) {
        accumulate(&mut map, e, if sign > 0 { c.clone() } else { -c.clone() });
    }
    if l == x.conductor && l == y.conductor {
        // both already canonical at l; only the conductor may shrink
        let (conductor, terms) = minimize(l, map);
        return Cyc {
            conductor,
            terms: terms.into_iter().collect(),
        };
    }
    Cyc::canonicalize(l, map)
}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        combine(self, rhs, 1)
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        combine(self, rhs, -1)
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        let mut acc = Accumulator::default();
        acc.add_product(&Rational::one(), self, rhs);
        acc.finish()
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: Cyc) -> Cyc {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "{}", self.to_canonical_string())
        } else {
            write!(
                f,
                "{} (z = E({}))",
                self.to_canonical_string(),
                self.conductor
            )
        }
    }
}

/// A root of unity `exp(2 pi i num/den)` kept as a reduced fraction in
/// `[0, 1)`. Used to compare character values symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub fn new(num: i128, den: u64) -> Self {
        assert!(den > 0);
        let num = num.rem_euclid(den as i128) as u64;
        let g = gcd(num, den);
        if num == 0 {
            return RootOfUnity { num: 0, den: 1 };
        }
        RootOfUnity {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn inverse(&self) -> Self {
        RootOfUnity::new(-(self.num as i128), self.den)
    }

    pub fn to_cyc(&self) -> Cyc {
        Cyc::root_of_unity(self.den, self.num as i64).expect("den > 0")
    }
}

/// Gauss periods `(xi, xi')`: sums of `zeta_q^a` over the quadratic residues
/// and nonresidues modulo an odd prime `q`.
pub fn gauss_periods(q: u64) -> Result<(Cyc, Cyc)> {
    if q < 3 || !crate::arith::is_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    let mut res = Vec::new();
    let mut non = Vec::new();
    for a in 1..q {
        if legendre(a as i64, q) == 1 {
            res.push((a, Rational::one()));
        } else {
            non.push((a, Rational::one()));
        }
    }
    Ok((Cyc::from_group_ring(q, res), Cyc::from_group_ring(q, non)))
}

/// Gauss periods for a non-prime field GF(p^n): sums of `zeta_p^Tr(x)` over
/// the nonzero squares and nonsquares `x`. This is an interpretation of the
/// prime-field definition (additive character through the absolute trace);
/// callers opt into it explicitly.
pub fn gauss_periods_trace(field: &Field) -> (Cyc, Cyc) {
    let p = field.characteristic();
    let mut res: HashMap<u64, Rational> = HashMap::new();
    let mut non: HashMap<u64, Rational> = HashMap::new();
    for x in field.elements().skip(1) {
        let t = field.trace(x);
        let target = if field.is_square(x) {
            &mut res
        } else {
            &mut non
        };
        accumulate(target, t, Rational::one());
    }
    (Cyc::from_group_ring(p, res), Cyc::from_group_ring(p, non))
}

/// `n` or `n/d` in lowest terms.
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn z(n: u64, e: i64) -> Cyc {
        Cyc::root_of_unity(n, e).unwrap()
    }

    #[test]
    fn roots_of_unity() {
        let i = z(4, 1);
        assert_eq!((&i * &i).to_rational(), Some(rational(-1, 1)));
        assert_eq!(z(14, 7).to_rational(), Some(rational(-1, 1)));
        assert_eq!(z(1, 0), Cyc::one());
        assert_eq!(z(12, 12), Cyc::one());
        assert_eq!(Cyc::root_of_unity(0, 1).unwrap_err(), Error::ZeroConductor);
    }

    #[test]
    fn all_roots_sum_to_zero() {
        for n in [2u64, 3, 4, 6, 9, 12, 14, 45, 98] {
            let s = Cyc::sum((0..n as i64).map(|e| z(n, e)));
            assert!(s.is_zero(), "n={n}");
        }
    }

    #[test]
    fn minimal_conductor() {
        // zeta_6 = -zeta_3^2
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(12, 4).conductor(), 3);
        assert_eq!((&z(12, 1) + &z(12, 11)).conductor(), 12);
        // zeta_12 + zeta_12^-1 = sqrt 3
        let s3 = &z(12, 1) + &z(12, 11);
        assert_eq!((&s3 * &s3).to_rational(), Some(rational(3, 1)));
    }

    #[test]
    fn gauss_period_products() {
        let (xi, xi2) = gauss_periods(13).unwrap();
        assert_eq!((&xi + &xi2).to_rational(), Some(rational(-1, 1)));
        assert_eq!((&xi * &xi2).to_rational(), Some(rational(-3, 1)));
        let (xi, xi2) = gauss_periods(43).unwrap();
        assert_eq!((&xi * &xi2).to_rational(), Some(rational(11, 1)));
        assert!(gauss_periods(15).is_err());
    }

    #[test]
    fn gauss_period_oracle() {
        // independent expansion of the product: count pairs (a, b) of residue
        // and nonresidue by a + b mod q.
        for q in [13u64, 29, 43] {
            let res: Vec<u64> = (1..q).filter(|&a| legendre(a as i64, q) == 1).collect();
            let non: Vec<u64> = (1..q).filter(|&a| legendre(a as i64, q) == -1).collect();
            let mut counts = vec![0i64; q as usize];
            for a in &res {
                for b in &non {
                    counts[((a + b) % q) as usize] += 1;
                }
            }
            // every nonzero class gets the same count c; value = counts[0] - c
            let c = counts[1];
            assert!(counts[1..].iter().all(|&x| x == c));
            let expected = counts[0] - c;
            let (xi, xi2) = gauss_periods(q).unwrap();
            assert_eq!((&xi * &xi2).to_i64(), Some(expected));
            let want = if q % 4 == 1 {
                (1 - q as i64) / 4
            } else {
                (1 + q as i64) / 4
            };
            assert_eq!(expected, want);
        }
    }

    #[test]
    fn galois_swaps_periods() {
        let (xi, xi2) = gauss_periods(13).unwrap();
        // 2 is a nonresidue mod 13
        assert_eq!(xi.galois(2).unwrap(), xi2);
        assert_eq!(xi.galois(4).unwrap(), xi);
        assert_eq!(z(7, 1).galois(-1).unwrap(), z(7, 6));
        assert_eq!(z(7, 1).conj(), z(7, -1));
        assert!(z(12, 1).galois(3).is_err());
    }

    #[test]
    fn trace_gauss_periods() {
        let f = crate::ffield::make_field(5, 3).unwrap();
        let (xi, xi2) = gauss_periods_trace(&f);
        assert_eq!((&xi + &xi2).to_rational(), Some(rational(-1, 1)));
        // (xi - xi')^2 = (-1/q) q with q = 125 = 1 mod 4
        let d = &xi - &xi2;
        assert_eq!((&d * &d).to_rational(), Some(rational(125, 1)));
    }

    #[test]
    fn string_roundtrip() {
        let x = &(&z(21, 2) + &z(21, 5).scale(&rational(-3, 2))) + &Cyc::from_int(4);
        let s = x.to_canonical_string();
        assert_eq!(Cyc::parse(x.conductor(), &s).unwrap(), x);
        assert_eq!(Cyc::parse(1, "0").unwrap(), Cyc::zero());
    }

    #[test]
    fn root_of_unity_fraction() {
        assert_eq!(RootOfUnity::new(6, 12), RootOfUnity::new(1, 2));
        assert!(RootOfUnity::new(14, 7).is_one());
        assert_eq!(RootOfUnity::new(-1, 7), RootOfUnity::new(6, 7));
        assert_eq!(RootOfUnity::new(4, 12).order(), 3);
    }
}
