//! Exact scalars: rationals and prime-field residues.
//!
//! Rationals keep a machine-word fast path and promote to arbitrary
//! precision on overflow. A value is stored in the small representation
//! whenever it fits, so equality stays structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    /// Integers modulo a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rat::Small(Ratio::from_integer(v))),
            Field::Prime(p) => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Reduces a rational number into this field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let n = self.from_i64(num);
        let d = self
            .from_i64(den)
            .inv()
            .ok_or_else(|| Error::Parse { what: "scalar", input: format!("{num}/{den}") })?;
        Ok(&n * &d)
    }

    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let err = || Error::Parse { what: "scalar", input: s.to_string() };
        let s = s.trim();
        if let Some(body) = s.strip_suffix(')') {
            let (k, rest) = body.split_once("(mod").ok_or_else(err)?;
            let p: u32 = rest.trim().parse().map_err(|_| err())?;
            if self != Field::Prime(p) {
                return Err(err());
            }
            let k: i64 = k.trim().parse().map_err(|_| err())?;
            return Ok(self.from_i64(k));
        }
        match s.split_once('/') {
            Some((a, b)) => {
                let a = BigInt::from_str(a.trim()).map_err(|_| err())?;
                let b = BigInt::from_str(b.trim()).map_err(|_| err())?;
                if b.is_zero() {
                    return Err(err());
                }
                match self {
                    Field::Rational => Ok(Scalar::Rational(Rat::from_big(BigRational::new(a, b)))),
                    Field::Prime(p) => {
                        let a = self.from_bigint(&a);
                        let b = self.from_bigint(&b).inv().ok_or_else(err)?;
                        let _ = p;
                        Ok(&a * &b)
                    }
                }
            }
            None => {
                let a = BigInt::from_str(s).map_err(|_| err())?;
                Ok(match self {
                    Field::Rational => Scalar::Rational(Rat::from_big(BigRational::from_integer(a))),
                    Field::Prime(_) => self.from_bigint(&a),
                })
            }
        }
    }

    fn from_bigint(self, a: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rat::from_big(BigRational::from_integer(a.clone()))),
            Field::Prime(p) => {
                let r = a.mod_floor(&BigInt::from(p));
                self.from_i64(r.to_i64().expect("residue fits"))
            }
        }
    }

    /// Textual descriptor used on the command line: `rational` or `gfp:<p>`.
    pub fn descriptor(self) -> String {
        match self {
            Field::Rational => "rational".into(),
            Field::Prime(p) => format!("gfp:{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.trim() {
            "rational" | "Q" | "QQ" => Ok(Field::Rational),
            other => {
                let p = other
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse { what: "field", input: s.into() })?;
                Field::prime(p)
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.descriptor())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A rational number with a machine-word fast path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rat {
    fn from_big(b: BigRational) -> Rat {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(Ratio::new_raw(n, d)),
            _ => Rat::Big(b),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(b) => b.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(b) => b.is_zero(),
        }
    }

    fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(self.to_big() + o.to_big())
    }

    fn sub(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(self.to_big() - o.to_big())
    }

    fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(self.to_big() * o.to_big())
    }

    fn neg(&self) -> Rat {
        match self {
            Rat::Small(a) if *a.numer() != i64::MIN => Rat::Small(-a),
            _ => Rat::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rat::Small(a) if *a.numer() != i64::MIN => Rat::Small(a.recip()),
            _ => Rat::from_big(self.to_big().recip()),
        })
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(r) => write!(f, "{r}"),
            Rat::Big(b) => write!(f, "{b}"),
        }
    }
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rat),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub(crate) fn from_big_rational(r: BigRational) -> Scalar {
        Scalar::Rational(Rat::from_big(r))
    }

    /// The image modulo `p`, if the denominator is prime to `p`. A modular scalar
    /// is returned as is when `p` is its own modulus.
    pub(crate) fn residue(&self, p: u64) -> Option<u64> {
        let reduce = |n: &BigInt| -> u64 { n.mod_floor(&BigInt::from(p)).to_u64().expect("below p") };
        match self {
            Scalar::Modular { value, modulus } => (*modulus as u64 == p).then_some(*value as u64),
            Scalar::Rational(Rat::Small(r)) => {
                let num = (*r.numer() as i128).rem_euclid(p as i128) as u64;
                if *r.denom() == 1 || num == 0 {
                    return Some(num);
                }
                let den = (*r.denom() as i128).rem_euclid(p as i128) as u64;
                (den != 0).then(|| super::modular::mul_mod(num, super::modular::inv_mod(den, p), p))
            }
            Scalar::Rational(Rat::Big(b)) => {
                if b.denom().is_one() {
                    return Some(reduce(b.numer()));
                }
                let den = reduce(b.denom());
                (den != 0).then(|| super::modular::mul_mod(reduce(b.numer()), super::modular::inv_mod(den, p), p))
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(Rat::Small(r)) => r.is_one(),
            Scalar::Rational(Rat::Big(_)) => false,
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.inv().map(Scalar::Rational),
            Scalar::Modular { value, modulus } => {
                if *value == 0 {
                    return None;
                }
                Some(Scalar::Modular {
                    value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                    modulus: *modulus,
                })
            }
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field().one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Some(acc)
    }

    /// Multiplicative order in a prime field; `None` for rationals other than ±1 or for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = self.field().one();
        let mut x = self.clone();
        for k in 1..=1_000_000u64 {
            if x == one {
                return Some(k);
            }
            if let Scalar::Rational(_) = self {
                if k > 2 {
                    return None;
                }
            }
            x = &x * self;
        }
        None
    }

    fn check(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!("scalar field mismatch: {} vs {}", self.field(), other.field());
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.sub(b)),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u64 + *modulus as u64 - *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, modulus } => write!(f, "{value} (mod {modulus})"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses either `k (mod p)` or a rational `a/b` / integer `a`.
    fn from_str(s: &str) -> Result<Scalar> {
        if let Some(idx) = s.find("(mod") {
            let p: u32 = s[idx + 4..]
                .trim_end_matches(')')
                .trim()
                .parse()
                .map_err(|_| Error::Parse { what: "scalar", input: s.into() })?;
            return Field::prime(p)?.parse_scalar(s);
        }
        Field::Rational.parse_scalar(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
