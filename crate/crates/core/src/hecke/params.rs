use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{is_prime, Field, Scalar};
use crate::error::{Error, Result};

/// Parameters `(ℓ, n, R, q, Q_1..Q_ℓ)` of an Ariki-Koike algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct Params {
    pub ell: usize,
    pub n: usize,
    pub field: Field,
    pub q: Scalar,
    pub big_q: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    ell: usize,
    n: usize,
    field: Field,
    q: String,
    #[serde(rename = "Q")]
    big_q: Vec<String>,
}

impl TryFrom<RawParams> for Params {
    type Error = Error;

    fn try_from(r: RawParams) -> Result<Params> {
        let q = r.field.parse_scalar(&r.q)?;
        let big_q = r.big_q.iter().map(|s| r.field.parse_scalar(s)).collect::<Result<Vec<_>>>()?;
        Params::new(r.ell, r.n, r.field, q, big_q)
    }
}

impl From<Params> for RawParams {
    fn from(p: Params) -> RawParams {
        RawParams {
            ell: p.ell,
            n: p.n,
            field: p.field,
            q: p.q.to_string(),
            big_q: p.big_q.iter().map(|x| x.to_string()).collect(),
        }
    }
}

impl Params {
    pub fn new(ell: usize, n: usize, field: Field, q: Scalar, big_q: Vec<Scalar>) -> Result<Params> {
        if ell == 0 {
            return Err(Error::InvalidParams("ℓ must be at least 1".into()));
        }
        if big_q.len() != ell {
            return Err(Error::InvalidParams(format!("expected {ell} values of Q, got {}", big_q.len())));
        }
        if n > 9 {
            return Err(Error::InvalidParams("n above 9 is not supported".into()));
        }
        for x in std::iter::once(&q).chain(&big_q) {
            if x.field() != field {
                return Err(Error::FieldMismatch(field, x.field()));
            }
        }
        if q.is_zero() {
            return Err(Error::InvalidParams("q must be invertible".into()));
        }
        Ok(Params { ell, n, field, q, big_q })
    }

    /// The same algebra parameters in rank `n`.
    pub fn with_n(&self, n: usize) -> Params {
        Params { n, ..self.clone() }
    }

    /// Ambient dimension `ℓ^n n!`.
    pub fn dimension(&self) -> usize {
        self.ell.pow(self.n as u32) * (1..=self.n).product::<usize>()
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn key(&self) -> String {
        let json = serde_json::to_string(self).expect("params serialize");
        hex::encode(Sha256::digest(json.as_bytes()))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qs: Vec<String> = self.big_q.iter().map(|x| x.to_string()).collect();
        write!(f, "ℓ={} n={} over {} q={} Q=[{}]", self.ell, self.n, self.field, self.q, qs.join(", "))
    }
}

/// A named recipe for choosing `(R, q, Q)` given `(ℓ, n)`.
pub trait Preset: Send + Sync {
    fn name(&self) -> String;
    fn params(&self, ell: usize, n: usize) -> Result<Params>;
}

/// `ℚ`, `q = 7`, `Q_s` the `s`-th prime.
pub struct Generic;

impl Preset for Generic {
    fn name(&self) -> String {
        "generic".into()
    }

    fn params(&self, ell: usize, n: usize) -> Result<Params> {
        let f = Field::Rational;
        let primes: Vec<Scalar> = (2u32..).filter(|&p| is_prime(p)).take(ell).map(|p| f.from_i64(p as i64)).collect();
        Params::new(ell, n, f, f.from_i64(7), primes)
    }
}

/// `F_p` with `p` the least prime `≡ 1 (mod e)`, `q` the least element of order `e`,
/// and `Q_s = q^(s-1)`.
pub struct RootOfUnity {
    pub e: u64,
}

impl RootOfUnity {
    pub fn field_and_q(&self) -> Result<(Field, Scalar)> {
        if self.e < 2 || self.e > 1000 {
            return Err(Error::InvalidParams(format!("root-of-unity order {} must lie in 2..=1000", self.e)));
        }
        let p = (2u32..).find(|&p| is_prime(p) && (p as u64 - 1).is_multiple_of(self.e)).expect("Dirichlet");
        let f = Field::prime(p)?;
        let q = (2..p as i64)
            .map(|k| f.from_i64(k))
            .find(|x| x.multiplicative_order() == Some(self.e))
            .expect("cyclic group has an element of each order dividing p-1");
        Ok((f, q))
    }
}

impl Preset for RootOfUnity {
    fn name(&self) -> String {
        format!("root-of-unity:{}", self.e)
    }

    fn params(&self, ell: usize, n: usize) -> Result<Params> {
        let (f, q) = self.field_and_q()?;
        let big_q = (0..ell as i64).map(|s| q.pow(s).expect("nonzero")).collect();
        Params::new(ell, n, f, q, big_q)
    }
}

/// Looks up a preset by name: `generic` or `root-of-unity:<e>`.
pub fn preset(name: &str) -> Result<Box<dyn Preset>> {
    let name = name.trim();
    if name == "generic" {
        return Ok(Box::new(Generic));
    }
    if let Some(e) = name.strip_prefix("root-of-unity:") {
        let e = e.parse().map_err(|_| Error::Parse { what: "preset", input: name.into() })?;
        return Ok(Box::new(RootOfUnity { e }));
    }
    Err(Error::Parse { what: "preset", input: name.into() })
}
