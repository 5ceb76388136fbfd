//! Row subspaces over an exact field.
//!
//! A subspace keeps the independent vectors it was built from and reduced echelon
//! forms of their images modulo a few large primes. A nonzero residual modulo a prime
//! proves a vector lies outside. For membership the exact reduced echelon form is
//! reconstructed from the residues and checked against the basis; a vector lies in
//! the space exactly when it equals the combination of echelon rows given by its
//! pivot entries. Over a prime field the single image is the space itself.

use std::sync::{Arc, Mutex, MutexGuard};

use super::modular::{reconstruct, residues, Image, Reduced, PRIMES};
use super::{ExactMatrix, Field, Scalar};
use crate::error::{Error, Result};

const BASE_IMAGES: usize = 2;

/// The reduced echelon form over the field itself; each row keeps only its entries
/// outside the pivot columns.
#[derive(Clone, Debug)]
struct Echelon {
    rows: Vec<Vec<(usize, Scalar)>>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// Whether `v = sum_i v[p_i] * row_i`.
    fn expresses(&self, v: &[Scalar]) -> bool {
        let Some(field) = v.first().map(Scalar::field) else {
            return true;
        };
        let mut acc = vec![field.zero(); v.len()];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            for (j, x) in row {
                acc[*j] += &(&v[p] * x);
            }
        }
        for &p in &self.pivots {
            acc[p] = v[p].clone();
        }
        acc == v
    }
}

#[derive(Clone, Debug, Default)]
struct State {
    images: Vec<Image>,
    exact: Option<Arc<Echelon>>,
}

impl State {
    /// Adds an image modulo a prime not yet in use.
    fn grow(&mut self, field: Field, basis: &[Vec<Scalar>]) -> bool {
        if let Field::Prime(_) = field {
            return false;
        }
        let used: Vec<u64> = self.images.iter().map(|im| im.p).collect();
        match PRIMES.iter().filter(|p| !used.contains(p)).find_map(|&p| Image::build(p, basis)) {
            Some(im) => {
                self.images.push(im);
                true
            }
            None => false,
        }
    }

    /// Images sharing the lexicographically least pivot set, which is the one over the field
    /// unless every prime in use is bad.
    fn agreeing(&self) -> Vec<&Image> {
        let Some(best) = self.images.iter().map(|im| &im.pivots).min() else {
            return Vec::new();
        };
        self.images.iter().filter(|im| &im.pivots == best).collect()
    }

    fn reductions(&self, v: &[Scalar]) -> Vec<Option<Reduced>> {
        self.images.iter().map(|im| residues(v, im.p).map(|r| im.reduce(r))).collect()
    }
}

/// A subspace of row vectors with a basis of independent input vectors.
#[derive(Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    state: Mutex<State>,
}

impl Clone for Subspace {
    fn clone(&self) -> Self {
        Subspace { field: self.field, ambient: self.ambient, basis: self.basis.clone(), state: Mutex::new(self.lock().clone()) }
    }
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        let images = match field {
            Field::Prime(q) => vec![Image::empty(q as u64)],
            Field::Rational => PRIMES[..BASE_IMAGES].iter().map(|&p| Image::empty(p)).collect(),
        };
        Subspace { field, ambient, basis: Vec::new(), state: Mutex::new(State { images, exact: None }) }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            s.insert(super::unit_vec(field, ambient, i)).expect("unit vectors are independent");
        }
        s
    }

    pub fn span<I>(field: Field, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    fn lock(&self) -> MutexGuard<'_, State> {
        self.state.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The inserted vectors that enlarged the space, in insertion order.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_rows(self.field, self.ambient, self.basis.clone()).expect("consistent rows")
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        Ok(())
    }

    /// `Some(false)` when some image proves `v` outside, `Some(true)` when the images are
    /// exact and contain it, `None` when only the exact form can decide.
    fn screen(&self, reds: &[Option<Reduced>]) -> Option<bool> {
        if reds.iter().flatten().any(|r| !r.is_member()) {
            return Some(false);
        }
        match self.field {
            Field::Prime(_) => Some(true),
            Field::Rational => None,
        }
    }

    fn echelon(&self) -> Result<Arc<Echelon>> {
        let mut st = self.lock();
        if let Some(e) = &st.exact {
            return Ok(e.clone());
        }
        let e = loop {
            if let Some(e) = self.lift_echelon(&st.agreeing()) {
                break e;
            }
            if !st.grow(self.field, &self.basis) {
                log::debug!("exact elimination in dimension {}", self.dim());
                let (m, pivots, rank) = self.to_matrix().rref();
                let rows = m
                    .row_vecs()
                    .into_iter()
                    .take(rank)
                    .map(|r| {
                        r.into_iter().enumerate().filter(|(j, x)| !x.is_zero() && pivots.binary_search(j).is_err()).collect()
                    })
                    .collect();
                break Echelon { rows, pivots };
            }
        };
        let e = Arc::new(e);
        st.exact = Some(e.clone());
        Ok(e)
    }

    fn lift_echelon(&self, images: &[&Image]) -> Option<Echelon> {
        let first = images.first()?;
        let pivots = first.pivots.clone();
        let mut rows = Vec::with_capacity(pivots.len());
        for i in 0..pivots.len() {
            let mut row = Vec::new();
            for j in pivots[i] + 1..self.ambient {
                if pivots.binary_search(&j).is_ok() {
                    continue;
                }
                if images.iter().all(|im| im.rows[i][j] == 0) {
                    continue;
                }
                let vals: Vec<(u64, u64)> = images.iter().map(|im| (im.rows[i][j], im.p)).collect();
                row.push((j, Scalar::from_big_rational(reconstruct(&vals)?)));
            }
            rows.push(row);
        }
        let e = Echelon { rows, pivots };
        self.basis.iter().all(|b| e.expresses(b)).then_some(e)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v)?;
        let screened = self.screen(&self.lock().reductions(v));
        match screened {
            Some(b) => Ok(b),
            None => Ok(self.echelon()?.expresses(v)),
        }
    }

    /// Coordinates with respect to [`Subspace::basis`], if `v` lies in the space.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_len(v)?;
        if let Field::Prime(_) = self.field {
            let st = self.lock();
            let red = st.images[0].reduce(residues(v, st.images[0].p).expect("same field"));
            return Ok(red.is_member().then(|| st.images[0].coordinates(&red).into_iter().map(|x| self.field.from_i64(x as i64)).collect()));
        }
        if !self.contains(v)? {
            return Ok(None);
        }
        let e = self.echelon()?;
        let a: Vec<Scalar> = e.pivots.iter().map(|&p| v[p].clone()).collect();
        // c with sum_j c_j b_j[p_i] = a_i for every pivot p_i
        let solves = |c: &[Scalar]| {
            e.pivots.iter().zip(&a).all(|(&p, ai)| {
                let mut s = self.field.zero();
                for (cj, b) in c.iter().zip(&self.basis) {
                    if !cj.is_zero() && !b[p].is_zero() {
                        s += &(cj * &b[p]);
                    }
                }
                &s == ai
            })
        };
        let mut st = self.lock();
        loop {
            let images: Vec<&Image> = st.agreeing().into_iter().filter(|im| im.pivots == e.pivots).collect();
            if let Some(c) = self.lift_coordinates(&images, &a) {
                if solves(&c) {
                    return Ok(Some(c));
                }
            }
            if !st.grow(self.field, &self.basis) {
                break;
            }
        }
        drop(st);
        log::debug!("exact solve in dimension {}", self.dim());
        let d = self.dim();
        let mut rows: Vec<Vec<Scalar>> = self.basis.iter().map(|b| e.pivots.iter().map(|&p| b[p].clone()).collect()).collect();
        rows.push(a.iter().map(|x| -x).collect());
        let kernel = ExactMatrix::from_rows(self.field, d, rows)?.left_kernel();
        let k = kernel.iter().find(|k| !k[d].is_zero()).expect("v lies in the span");
        let inv = k[d].inv().expect("nonzero");
        Ok(Some(k[..d].iter().map(|x| x * &inv).collect()))
    }

    fn lift_coordinates(&self, images: &[&Image], a: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut per: Vec<(u64, Vec<u64>)> = Vec::with_capacity(images.len());
        for im in images {
            let ap = residues(a, im.p)?;
            per.push((im.p, im.combine_transforms(&ap)));
        }
        if per.is_empty() {
            return None;
        }
        (0..self.dim())
            .map(|j| {
                let vals: Vec<(u64, u64)> = per.iter().map(|(p, c)| (c[j], *p)).collect();
                reconstruct(&vals).map(Scalar::from_big_rational)
            })
            .collect()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> Result<bool> {
        self.insert_inner(v, false)
    }

    /// Like [`Subspace::insert`], but treats a vector as dependent as soon as its residual
    /// modulo the first prime vanishes. Over the rationals this can wrongly reject an
    /// independent vector; callers must certify the result.
    pub(crate) fn insert_probable(&mut self, v: Vec<Scalar>) -> Result<bool> {
        self.insert_inner(v, true)
    }

    fn insert_inner(&mut self, v: Vec<Scalar>, probable: bool) -> Result<bool> {
        self.check_len(&v)?;
        if v.iter().all(Scalar::is_zero) {
            return Ok(false);
        }
        if probable {
            let st = self.lock();
            if let Some(r) = residues(&v, st.images[0].p) {
                if st.images[0].reduce(r).is_member() {
                    return Ok(false);
                }
            }
        }
        let reds = self.lock().reductions(&v);
        let outside = match self.screen(&reds) {
            Some(inside) => !inside,
            None => !self.echelon()?.expresses(&v),
        };
        if !outside {
            return Ok(false);
        }
        self.basis.push(v);
        let st = self.state.get_mut().unwrap_or_else(|e| e.into_inner());
        st.exact = None;
        let mut kept = Vec::with_capacity(st.images.len());
        for (im, red) in std::mem::take(&mut st.images).into_iter().zip(reds) {
            if let Some(r) = red.filter(|r| !r.is_member()) {
                let mut im = im;
                im.push(r);
                kept.push(im);
            }
        }
        st.images = kept;
        while st.images.len() < BASE_IMAGES.min(PRIMES.len()) && matches!(self.field, Field::Rational) {
            if !st.grow(self.field, &self.basis) {
                break;
            }
        }
        if st.images.is_empty() {
            return Err(Error::Singular("no prime keeps the basis independent".into()));
        }
        Ok(true)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone())?;
        }
        Ok(s)
    }

    /// Intersection, via the kernel of `[A; -B]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().map(|r| r.iter().map(|x| -x).collect()));
        let stacked = ExactMatrix::from_rows(self.field, self.ambient, rows)?;
        let kernel = stacked.left_kernel();
        let a = self.to_matrix();
        let vectors = kernel.into_iter().map(|k| a.apply(&k[..self.dim()]));
        Subspace::span(self.field, self.ambient, vectors)
    }
}

/// Coordinates with respect to an explicit list of independent vectors.
#[derive(Clone, Debug)]
pub struct Frame {
    space: Subspace,
}

impl Frame {
    pub fn new(field: Field, ambient: usize) -> Self {
        Frame { space: Subspace::zero(field, ambient) }
    }

    pub fn from_vectors<I>(field: Field, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut f = Frame::new(field, ambient);
        for v in vectors {
            f.push(v)?;
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.space.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.space.dim() == 0
    }

    pub fn span(&self) -> &Subspace {
        &self.space
    }

    /// Appends an input vector; fails if it is dependent on the previous ones.
    pub fn push(&mut self, v: Vec<Scalar>) -> Result<()> {
        let k = self.len();
        if !self.space.insert(v)? {
            return Err(Error::Singular(format!("frame vector {k} is dependent")));
        }
        Ok(())
    }

    /// Coefficients `c` with `v = sum_i c_i * input_i`, if `v` is in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.space.coordinates(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecq(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Field::Rational.from_i64(x)).collect()
    }

    #[test]
    fn zero_vector_is_member() {
        let s = Subspace::span(Field::Rational, 2, [vecq(&[1, 1])]).unwrap();
        assert_eq!(s.coordinates(&vecq(&[0, 0])).unwrap(), Some(vecq(&[0])));
        let z = Subspace::zero(Field::Rational, 2);
        assert!(z.contains(&vecq(&[0, 0])).unwrap());
    }

    #[test]
    fn non_member() {
        let s = Subspace::span(Field::Rational, 2, [vecq(&[0, 1])]).unwrap();
        assert!(!s.contains(&vecq(&[1, 0])).unwrap());
        assert_eq!(s.coordinates(&vecq(&[1, 0])).unwrap(), None);
    }

    #[test]
    fn member_with_coordinates() {
        let s = Subspace::span(Field::Rational, 2, [vecq(&[1, 2])]).unwrap();
        assert_eq!(s.coordinates(&vecq(&[3, 6])).unwrap(), Some(vecq(&[3])));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let s = Subspace::zero(Field::Rational, 3);
        assert!(matches!(s.contains(&vecq(&[1, 0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(Field::Rational, 3, [vecq(&[1, 0, 0]), vecq(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(Field::Rational, 3, [vecq(&[0, 1, 0]), vecq(&[0, 0, 1])]).unwrap();
        let c = a.intersection(&b).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&vecq(&[0, 5, 0])).unwrap());
    }

    #[test]
    fn frame_coordinates_follow_inputs() {
        let f = Frame::from_vectors(Field::Rational, 3, [vecq(&[1, 1, 0]), vecq(&[0, 1, 1])]).unwrap();
        let c = f.coordinates(&vecq(&[2, 5, 3])).unwrap().unwrap();
        assert_eq!(c, vecq(&[2, 3]));
        assert!(f.coordinates(&vecq(&[1, 0, 0])).unwrap().is_none());
        let mut g = f.clone();
        assert!(g.push(vecq(&[1, 2, 1])).is_err());
        assert_eq!(g.len(), 2);
    }

    proptest::proptest! {
        #[test]
        fn coordinates_reproduce_members(a in proptest::collection::vec(-4i64..5, 8), c in proptest::collection::vec(-4i64..5, 2)) {
            let rows: Vec<Vec<Scalar>> = a.chunks(4).map(vecq).collect();
            let s = Subspace::span(Field::Rational, 4, rows.clone()).unwrap();
            let mut v = vecq(&[0, 0, 0, 0]);
            for (row, k) in rows.iter().zip(&c) {
                let k = Field::Rational.from_i64(*k);
                for (x, y) in v.iter_mut().zip(row) {
                    *x += &(&k * y);
                }
            }
            let coords = s.coordinates(&v).unwrap().unwrap();
            let back = if s.dim() == 0 { vecq(&[0, 0, 0, 0]) } else { s.to_matrix().apply(&coords) };
            proptest::prop_assert_eq!(back, v);
        }
    }
}
