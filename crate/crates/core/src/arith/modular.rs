//! Echelon forms modulo word-sized primes, and rational reconstruction from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Scalar;

/// Primes just below `2^62`, largest first.
pub(crate) const PRIMES: [u64; 16] = [
    0x3fffffffffffffc7,
    0x3fffffffffffffa9,
    0x3fffffffffffff8b,
    0x3fffffffffffff71,
    0x3fffffffffffff67,
    0x3fffffffffffff59,
    0x3fffffffffffff55,
    0x3fffffffffffff3d,
    0x3fffffffffffff35,
    0x3ffffffffffffeef,
    0x3ffffffffffffee1,
    0x3ffffffffffffec3,
    0x3ffffffffffffe45,
    0x3ffffffffffffe1d,
    0x3ffffffffffffe11,
    0x3ffffffffffffdc1,
];

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn residues(v: &[Scalar], p: u64) -> Option<Vec<u64>> {
    v.iter().map(|x| x.residue(p)).collect()
}

/// `v -= c * row` from column `from` on.
fn axpy(v: &mut [u64], c: u64, row: &[u64], from: usize, p: u64) {
    for (x, &r) in v[from..].iter_mut().zip(&row[from..]) {
        if r != 0 {
            *x = sub_mod(*x, mul_mod(c, r, p), p);
        }
    }
}

/// The reduced echelon form modulo `p` of the images of independent vectors
/// `b_0, .., b_{k-1}`, with each row written in terms of the `b_j`.
#[derive(Clone, Debug)]
pub(crate) struct Image {
    pub p: u64,
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
    transforms: Vec<Vec<u64>>,
    count: usize,
}

/// The outcome of eliminating a vector against an [`Image`].
pub(crate) struct Reduced {
    pub residual: Vec<u64>,
    /// Multiples of each echelon row that were subtracted.
    pub row_coeffs: Vec<u64>,
}

impl Reduced {
    pub fn is_member(&self) -> bool {
        self.residual.iter().all(|&x| x == 0)
    }
}

impl Image {
    pub fn empty(p: u64) -> Self {
        Image { p, rows: Vec::new(), pivots: Vec::new(), transforms: Vec::new(), count: 0 }
    }

    /// The image of `basis`, if every entry has a residue and the residues stay independent.
    pub fn build(p: u64, basis: &[Vec<Scalar>]) -> Option<Self> {
        let mut im = Image::empty(p);
        for b in basis {
            let red = im.reduce(residues(b, p)?);
            if red.is_member() {
                return None;
            }
            im.push(red);
        }
        Some(im)
    }

    pub fn reduce(&self, mut v: Vec<u64>) -> Reduced {
        let p = self.p;
        let mut c = vec![0; self.rows.len()];
        for ((row, &piv), ci) in self.rows.iter().zip(&self.pivots).zip(c.iter_mut()) {
            if v[piv] != 0 {
                *ci = v[piv];
                axpy(&mut v, *ci, row, piv, p);
            }
        }
        Reduced { residual: v, row_coeffs: c }
    }

    /// `sum_i a_i t_i` where row `i` is `sum_j t_ij b_j`.
    pub fn combine_transforms(&self, a: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.count];
        for (&c, t) in a.iter().zip(&self.transforms) {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(t) {
                    if x != 0 {
                        *o = (*o + mul_mod(c, x, self.p)) % self.p;
                    }
                }
            }
        }
        out
    }

    /// Coordinates in terms of the `b_j` of a member.
    pub fn coordinates(&self, red: &Reduced) -> Vec<u64> {
        self.combine_transforms(&red.row_coeffs)
    }

    /// Records a new `b_k` from its non-zero reduction.
    pub fn push(&mut self, red: Reduced) {
        let p = self.p;
        let Reduced { mut residual, row_coeffs } = red;
        let piv = residual.iter().position(|&x| x != 0).expect("non-member");
        let k = self.count;
        for tr in self.transforms.iter_mut() {
            tr.push(0);
        }
        let mut t = vec![0; k + 1];
        t[k] = 1;
        for (&c, tr) in row_coeffs.iter().zip(&self.transforms) {
            if c != 0 {
                axpy(&mut t, c, tr, 0, p);
            }
        }
        let inv = inv_mod(residual[piv], p);
        for x in residual[piv..].iter_mut().chain(t.iter_mut()) {
            *x = mul_mod(*x, inv, p);
        }
        for (row, tr) in self.rows.iter_mut().zip(self.transforms.iter_mut()) {
            let c = row[piv];
            if c != 0 {
                axpy(row, c, &residual, piv, p);
                axpy(tr, c, &t, 0, p);
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, residual);
        self.transforms.insert(at, t);
        self.count += 1;
    }
}

/// The rational `a/b` with `|a|, |b| <= sqrt(m/2)` congruent to `x` modulo `m`, if any.
fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

/// Chinese remaindering of per-prime residues followed by rational reconstruction.
pub(crate) fn reconstruct(values: &[(u64, u64)]) -> Option<BigRational> {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for &(v, p) in values {
        let pb = BigInt::from(p);
        let cur = x.mod_floor(&pb);
        let cur = u64::try_from(cur).expect("below p");
        let m_mod = u64::try_from(m.mod_floor(&pb)).expect("below p");
        // x + m * k with k = (v - x) / m mod p
        let k = mul_mod(sub_mod(v, cur, p), inv_mod(m_mod, p), p);
        x += &m * BigInt::from(k);
        m *= pb;
    }
    rational_reconstruct(&x, &m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_small_fractions() {
        let r = BigRational::new(BigInt::from(-355), BigInt::from(113));
        let vals: Vec<(u64, u64)> =
            PRIMES[..2].iter().map(|&p| (Scalar::from_big_rational(r.clone()).residue(p).unwrap(), p)).collect();
        assert_eq!(reconstruct(&vals), Some(r));
    }

    #[test]
    fn image_coordinates() {
        let p = PRIMES[0];
        let f = super::super::Field::Rational;
        let basis = vec![vec![f.from_i64(1), f.from_i64(1)], vec![f.from_i64(0), f.from_i64(2)]];
        let im = Image::build(p, &basis).unwrap();
        let red = im.reduce(vec![3, 7]);
        assert!(red.is_member());
        assert_eq!(im.coordinates(&red), vec![3, 2]);
    }
}
