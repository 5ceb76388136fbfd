//! Symmetric groups: permutations in one-line notation acting on the right.
//!
//! `i^(uv) = (i^u)^v`, so the product `uv` applies `u` first. A word
//! `s_{i_1} .. s_{i_k}` therefore corresponds to applying `s_{i_1}` first.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::MultiPartition;
use crate::error::{Error, Result};

/// A permutation of `{1..n}`; internally zero-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// From one-line notation with images in `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPerm(format!("{images:?}")));
            }
            seen[i - 1] = true;
        }
        Ok(Perm(images.iter().map(|&i| (i - 1) as u8).collect()))
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Perm> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange { index: i, range: format!("1..{n}") });
        }
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, i);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of `i` (one-based).
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm(self.0.iter().map(|&i| other.0[i as usize]).collect()))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `self * s_i`: swaps the values `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm(self.0.iter().map(|&v| if v == a { b } else if v == b { a } else { v }).collect())
    }

    /// `s_i * self`: swaps the positions `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Perm {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Perm(p)
    }

    /// Whether `l(self * s_i) > l(self)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v).expect("bijection");
        pos((i - 1) as u8) < pos(i as u8)
    }

    /// Whether `l(s_i * self) > l(self)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// Lexicographically smallest reduced word, found by stripping the first left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| !w.left_ascent(i)) {
            word.push(i);
            w = w.simple_mul(i);
        }
        word
    }

    /// Every reduced word of the permutation.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in (1..self.degree()).filter(|&i| !self.left_ascent(i)) {
            for mut tail in self.simple_mul(i).all_reduced_words() {
                tail.insert(0, i);
                out.push(tail);
            }
        }
        out
    }

    pub fn from_word(n: usize, word: &[usize]) -> Result<Perm> {
        let mut p = Perm::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::OutOfRange { index: i, range: format!("1..{n}") });
            }
            p = p.mul_simple(i);
        }
        Ok(p)
    }

    /// Extends to `S_{n+1}` fixing `n+1`.
    pub fn extend(&self) -> Perm {
        let mut p = self.0.clone();
        p.push(self.0.len() as u8);
        Perm(p)
    }

    /// Restricts to `S_{n-1}` if the last point is fixed.
    pub fn restrict(&self) -> Option<Perm> {
        let n = self.degree();
        if n == 0 || self.0[n - 1] as usize != n - 1 {
            return None;
        }
        Some(Perm(self.0[..n - 1].to_vec()))
    }

    /// All permutations of degree `n`, in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_images(&v).map_err(serde::de::Error::custom)
    }
}

/// The elements of the Young subgroup `S_λ`, which permutes each row block of `t^λ`.
pub fn parabolic_elements(lambda: &MultiPartition, n: usize) -> Result<Vec<Perm>> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.size(), n));
    }
    let blocks: Vec<(usize, usize)> = lambda.row_blocks();
    let mut out = vec![Perm::identity(n)];
    for (start, len) in blocks {
        if len < 2 {
            continue;
        }
        let local = Perm::all(len);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for p in &out {
            for l in &local {
                let mut img = p.0.clone();
                for k in 0..len {
                    img[start + k] = (start + l.0[k] as usize) as u8;
                }
                next.push(Perm(img));
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Elements of the symmetric group on `{a, .., b}` inside `S_n`.
pub fn interval_group(n: usize, a: usize, b: usize) -> Vec<Perm> {
    if b <= a {
        return vec![Perm::identity(n)];
    }
    let len = b - a + 1;
    Perm::all(len)
        .into_iter()
        .map(|l| {
            let mut img: Vec<u8> = (0..n as u8).collect();
            for k in 0..len {
                img[a - 1 + k] = (a - 1 + l.0[k] as usize) as u8;
            }
            Perm(img)
        })
        .collect()
}

/// `s_{b,a} = (b,b+1)(b-1,b)..(a,a+1)`, the identity when `b < a`.
pub fn interval_perm(n: usize, b: usize, a: usize) -> Result<Perm> {
    Perm::from_word(n, &interval_word(b, a))
}

/// The word `[b, b-1, .., a]` for `T_{b,a} = T_b .. T_a`.
pub fn interval_word(b: usize, a: usize) -> Vec<usize> {
    if b < a {
        return Vec::new();
    }
    (a..=b).rev().collect()
}
