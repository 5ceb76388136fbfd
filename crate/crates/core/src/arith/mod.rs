//! Exact scalar fields and the linear-algebra kernel.

mod eigen;
mod matrix;
mod modular;
mod scalar;
mod subspace;

pub use eigen::{joint_generalized_eigenspaces, EigenDecomposition};
pub use matrix::ExactMatrix;
pub use scalar::{is_prime, Field, Rat, Scalar};
pub use subspace::{Frame, Subspace};

pub fn zero_vec(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a + c * b`, elementwise.
pub fn add_scaled(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += &(c * y);
        }
    }
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * c).collect()
}
