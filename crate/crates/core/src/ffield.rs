//! Arithmetic in GF(q) for q = p or p^3, in the quadratic extension
//! GF(q^2) = GF(q)(sqrt eps), and the distinguished elements eps, tau, i,
//! omega and phi used to build the subgroups of orders 2, 3 and 7.
//!
//! Elements of GF(q) are polynomials over GF(p) of degree < n, packed into a
//! single integer `c0 + c1 p + c2 p^2`. The packed integer order is the
//! canonical element order (coefficient tuples compared from the leading
//! coefficient down); every "smallest element" choice in the crate uses it.

use std::collections::HashMap;
use std::fmt;

use crate::arith::{factorize, is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 31;

/// An element of GF(q), packed as `c0 + c1 p + c2 p^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fq(pub(crate) u64);

impl Fq {
    /// Packed integer encoding; also the canonical sort key.
    pub fn index(self) -> u64 {
        self.0
    }
}

/// `a + b sqrt(eps)` in GF(q^2). Ordered by `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fq2 {
    pub a: Fq,
    pub b: Fq,
}

/// GF(p^n) for n in {1, 3}.
#[derive(Clone, Debug)]
pub struct Field {
    p: u64,
    n: u32,
    q: u64,
    /// `x^3 = red[0] + red[1] x + red[2] x^2` in the cubic case.
    red: [u64; 3],
    /// Monic defining polynomial, constant term first (degree-1 case: `x`).
    modulus: Vec<u64>,
    unit_primes: Vec<u64>,
    torus_primes: Vec<u64>,
}

/// Builds GF(p^n). The cubic modulus is the least monic irreducible cubic
/// under the packed order of its lower coefficients.
pub fn make_field(p: u64, n: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n != 1 && n != 3 {
        return Err(Error::UnsupportedDegree(n));
    }
    if matches!(p, 2 | 3 | 7) {
        return Err(Error::ExcludedCharacteristic(p));
    }
    let q = (p as u128).pow(n);
    if q > MAX_FIELD_ORDER as u128 {
        return Err(Error::FieldTooLarge(q));
    }
    let q = q as u64;
    let (red, modulus) = if n == 1 {
        ([0, 0, 0], vec![0, 1])
    } else {
        let m = least_irreducible_cubic(p);
        (
            [(p - m[0]) % p, (p - m[1]) % p, (p - m[2]) % p],
            vec![m[0], m[1], m[2], 1],
        )
    };
    Ok(Field {
        p,
        n,
        q,
        red,
        modulus,
        unit_primes: factorize(q - 1).into_iter().map(|(r, _)| r).collect(),
        torus_primes: factorize(q + 1).into_iter().map(|(r, _)| r).collect(),
    })
}

/// A monic cubic over GF(p) is irreducible iff it has no root.
fn least_irreducible_cubic(p: u64) -> [u64; 3] {
    for a2 in 0..p {
        for a1 in 0..p {
            for a0 in 1..p {
                let has_root = (0..p).any(|x| {
                    let x2 = mul_mod(x, x, p);
                    let x3 = mul_mod(x2, x, p);
                    (x3 + mul_mod(a2, x2, p) + mul_mod(a1, x, p) + a0).is_multiple_of(p)
                });
                if !has_root {
                    return [a0, a1, a2];
                }
            }
        }
    }
    unreachable!("irreducible cubics exist over every prime field")
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq(0)
    }

    pub fn one(&self) -> Fq {
        Fq(1)
    }

    pub fn from_int(&self, v: i64) -> Fq {
        Fq(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Fq {
        assert!(coeffs.len() <= self.n as usize, "too many coefficients");
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = acc * self.p + c % self.p;
        }
        Fq(acc)
    }

    /// Coefficient vector of length n, constant term first.
    pub fn coeffs(&self, a: Fq) -> Vec<u64> {
        let d = self.digits(a);
        d[..self.n as usize].to_vec()
    }

    fn digits(&self, a: Fq) -> [u64; 3] {
        if self.n == 1 {
            return [a.0, 0, 0];
        }
        let p = self.p;
        [a.0 % p, (a.0 / p) % p, a.0 / (p * p)]
    }

    fn pack(&self, d: [u64; 3]) -> Fq {
        Fq(d[0] + self.p * (d[1] + self.p * d[2]))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.n == 1 {
            return Fq((a.0 + b.0) % self.p);
        }
        let (x, y) = (self.digits(a), self.digits(b));
        self.pack([
            (x[0] + y[0]) % self.p,
            (x[1] + y[1]) % self.p,
            (x[2] + y[2]) % self.p,
        ])
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.n == 1 {
            return Fq((self.p - a.0) % self.p);
        }
        let x = self.digits(a);
        self.pack([
            (self.p - x[0]) % self.p,
            (self.p - x[1]) % self.p,
            (self.p - x[2]) % self.p,
        ])
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p;
        if self.n == 1 {
            return Fq(mul_mod(a.0, b.0, p));
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut c = [0u64; 5];
        for i in 0..3 {
            for j in 0..3 {
                c[i + j] = (c[i + j] + mul_mod(x[i], y[j], p)) % p;
            }
        }
        // x^4 = x * x^3, then fold x^3.
        for deg in [4usize, 3] {
            let top = c[deg];
            if top == 0 {
                continue;
            }
            c[deg] = 0;
            for k in 0..3 {
                c[deg - 3 + k] = (c[deg - 3 + k] + mul_mod(top, self.red[k], p)) % p;
            }
        }
        self.pack([c[0], c[1], c[2]])
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a == self.zero() {
            return None;
        }
        if self.n == 1 {
            return Some(Fq(pow_mod(a.0, self.p - 2, self.p)));
        }
        Some(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Option<Fq> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// Nonzero squares, by Euler's criterion.
    pub fn is_square(&self, a: Fq) -> bool {
        a != self.zero() && self.pow(a, (self.q - 1) / 2) == self.one()
    }

    /// Quadratic character: 0, 1 or -1.
    pub fn quadratic_character(&self, a: Fq) -> i8 {
        if a == self.zero() {
            0
        } else if self.is_square(a) {
            1
        } else {
            -1
        }
    }

    /// A square root (Tonelli-Shanks), or `None` for nonsquares.
    pub fn sqrt(&self, a: Fq) -> Option<Fq> {
        if a == self.zero() {
            return Some(a);
        }
        if !self.is_square(a) {
            return None;
        }
        let mut s = 0u32;
        let mut t = self.q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let z = self
            .elements()
            .find(|&z| z != self.zero() && !self.is_square(z))
            .expect("odd-order fields have nonsquares");
        let mut m = s;
        let mut c = self.pow(z, t);
        let mut r = self.pow(a, t.div_ceil(2));
        let mut u = self.pow(a, t);
        while u != self.one() {
            let mut i = 0u32;
            let mut probe = u;
            while probe != self.one() {
                probe = self.mul(probe, probe);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            r = self.mul(r, b);
            u = self.mul(u, c);
        }
        Some(r)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Fq) -> u64 {
        order_from_primes(self.q - 1, &self.unit_primes, |e| {
            self.pow(a, e) == self.one()
        })
    }

    pub fn is_generator(&self, a: Fq) -> bool {
        a != self.zero()
            && self
                .unit_primes
                .iter()
                .all(|&r| self.pow(a, (self.q - 1) / r) != self.one())
    }

    /// Absolute trace GF(q) -> GF(p), returned as a residue.
    pub fn trace(&self, a: Fq) -> u64 {
        let mut acc = self.zero();
        let mut conj = a;
        for _ in 0..self.n {
            acc = self.add(acc, conj);
            conj = self.pow(conj, self.p);
        }
        debug_assert!(acc.0 < self.p);
        acc.0
    }

    /// View of GF(q^2) = GF(q)(sqrt eps) for a fixed nonsquare `eps`.
    pub fn ext(&self, eps: Fq) -> Ext<'_> {
        debug_assert!(!self.is_square(eps));
        Ext { field: self, eps }
    }

    pub(crate) fn torus_primes(&self) -> &[u64] {
        &self.torus_primes
    }

    pub fn format(&self, a: Fq) -> String {
        if self.n == 1 {
            return a.0.to_string();
        }
        let c = self.coeffs(a);
        format!(
            "[{}]",
            c.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Order of an element of a cyclic group of order `n` given the primes of `n`
/// and a predicate testing `x^e == 1`.
fn order_from_primes(n: u64, primes: &[u64], is_one: impl Fn(u64) -> bool) -> u64 {
    let mut ord = n;
    for &r in primes {
        while ord.is_multiple_of(r) && is_one(ord / r) {
            ord /= r;
        }
    }
    ord
}

/// Arithmetic in GF(q^2) with `(sqrt eps)^2 = eps`.
#[derive(Clone, Copy)]
pub struct Ext<'a> {
    field: &'a Field,
    eps: Fq,
}

impl<'a> Ext<'a> {
    pub fn one(&self) -> Fq2 {
        Fq2 {
            a: self.field.one(),
            b: self.field.zero(),
        }
    }

    pub fn embed(&self, a: Fq) -> Fq2 {
        Fq2 {
            a,
            b: self.field.zero(),
        }
    }

    pub fn mul(&self, x: Fq2, y: Fq2) -> Fq2 {
        let f = self.field;
        let ac = f.mul(x.a, y.a);
        let bd = f.mul(x.b, y.b);
        Fq2 {
            a: f.add(ac, f.mul(self.eps, bd)),
            b: f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)),
        }
    }

    pub fn pow(&self, x: Fq2, mut e: u64) -> Fq2 {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a - b sqrt(eps)`, the image under Frobenius.
    pub fn conj(&self, x: Fq2) -> Fq2 {
        Fq2 {
            a: x.a,
            b: self.field.neg(x.b),
        }
    }

    /// `N(a + b sqrt eps) = a^2 - eps b^2`.
    pub fn norm(&self, x: Fq2) -> Fq {
        let f = self.field;
        f.sub(f.mul(x.a, x.a), f.mul(self.eps, f.mul(x.b, x.b)))
    }

    pub fn neg(&self, x: Fq2) -> Fq2 {
        Fq2 {
            a: self.field.neg(x.a),
            b: self.field.neg(x.b),
        }
    }

    /// Order of an element of the norm-one torus T (order q+1).
    pub fn torus_order(&self, x: Fq2) -> u64 {
        let n = self.field.q + 1;
        order_from_primes(n, self.field.torus_primes(), |e| {
            self.pow(x, e) == self.one()
        })
    }

    /// Norm-one elements in canonical `(a, b)` order.
    pub fn torus_elements(&self) -> impl Iterator<Item = Fq2> + '_ {
        let f = self.field;
        f.elements().flat_map(move |a| {
            // b^2 = (a^2 - 1) / eps
            let rhs = f
                .div(f.sub(f.mul(a, a), f.one()), self.eps)
                .expect("eps != 0");
            let mut roots: Vec<Fq> = match f.sqrt(rhs) {
                Some(b) if b == f.zero() => vec![b],
                Some(b) => vec![b, f.neg(b)],
                None => vec![],
            };
            roots.sort();
            roots.into_iter().map(move |b| Fq2 { a, b })
        })
    }
}

/// Where a special element lives: in `F^x` as a power of eps, or in the torus
/// `T` as a power of tau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Split { value: Fq, exponent: u64 },
    Torus { value: Fq2, exponent: u64 },
}

impl Location {
    pub fn is_split(&self) -> bool {
        matches!(self, Location::Split { .. })
    }

    pub fn exponent(&self) -> u64 {
        match *self {
            Location::Split { exponent, .. } | Location::Torus { exponent, .. } => exponent,
        }
    }
}

/// A primitive root of unity of order 4, 6 or 14 (named i, omega, phi).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Special {
    pub order: u64,
    pub location: Location,
}

#[derive(Clone, Debug)]
pub struct SpecialElements {
    pub eps: Fq,
    pub tau: Fq2,
    pub i: Special,
    pub omega: Special,
    pub phi: Special,
    pub q_mod4: u64,
    pub q_mod3: u64,
    pub q_mod7: u64,
}

/// Which generator to take for eps and tau: `0` is the smallest in canonical
/// order, `1` the second smallest, and so on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GeneratorChoice {
    pub eps_rank: usize,
    pub tau_rank: usize,
}

/// Distinguished elements for a field with q coprime to 6 and q = +-1 mod 7.
pub fn special_elements(field: &Field, choice: GeneratorChoice) -> Result<SpecialElements> {
    let q = field.order();
    if q.is_multiple_of(2) || q.is_multiple_of(3) || !(q % 7 == 1 || q % 7 == 6) {
        return Err(Error::Inadmissible {
            q,
            reason: if q % 7 == 1 || q % 7 == 6 {
                crate::error::Inadmissibility::SharesFactorWith42
            } else {
                crate::error::Inadmissibility::PrimeNotPlusMinusOneMod7 { residue: q % 7 }
            },
        });
    }
    let eps = field
        .elements()
        .filter(|&x| field.is_generator(x))
        .nth(choice.eps_rank)
        .expect("generator rank out of range");
    let ext = field.ext(eps);
    let tau = ext
        .torus_elements()
        .filter(|&z| ext.torus_order(z) == q + 1)
        .nth(choice.tau_rank)
        .expect("generator rank out of range");

    let locate = |order: u64, split: bool| -> Special {
        let location = if split {
            let exponent = (q - 1) / order;
            Location::Split {
                value: field.pow(eps, exponent),
                exponent,
            }
        } else {
            let exponent = (q + 1) / order;
            Location::Torus {
                value: ext.pow(tau, exponent),
                exponent,
            }
        };
        Special { order, location }
    };
    Ok(SpecialElements {
        eps,
        tau,
        i: locate(4, q % 4 == 1),
        omega: locate(6, q % 3 == 1),
        phi: locate(14, q % 7 == 1),
        q_mod4: q % 4,
        q_mod3: q % 3,
        q_mod7: q % 7,
    })
}

/// Discrete logarithms to base eps in `F^x` and to base tau in `T`.
#[derive(Debug)]
pub struct DiscreteLog {
    unit: Vec<u32>,
    torus: HashMap<Fq2, u32>,
}

impl DiscreteLog {
    pub fn new(field: &Field, eps: Fq, tau: Fq2) -> Self {
        let q = field.order();
        let mut unit = vec![u32::MAX; q as usize];
        let mut x = field.one();
        for e in 0..(q - 1) {
            unit[x.0 as usize] = e as u32;
            x = field.mul(x, eps);
        }
        let ext = field.ext(eps);
        let mut torus = HashMap::with_capacity(q as usize + 1);
        let mut z = ext.one();
        for e in 0..=q {
            torus.insert(z, e as u32);
            z = ext.mul(z, tau);
        }
        DiscreteLog { unit, torus }
    }

    pub fn log_unit(&self, x: Fq) -> Option<u64> {
        match self.unit.get(x.0 as usize) {
            Some(&e) if e != u32::MAX => Some(e as u64),
            _ => None,
        }
    }

    pub fn log_torus(&self, z: Fq2) -> Option<u64> {
        self.torus.get(&z).map(|&e| e as u64)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
