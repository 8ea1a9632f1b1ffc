//! Exact scalar arithmetic and dense linear algebra over GF(p) and ℚ.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{rref, EchelonBasis, Matrix, Rref};
pub use scalar::{Field, Scalar};
pub use subspace::{kernel, Subspace};

/// Vectors are plain scalar slices; these helpers assume equal lengths and a
/// common field.
pub mod vector {
    use super::{Field, Scalar};

    pub fn zero(field: Field, n: usize) -> Vec<Scalar> {
        vec![field.zero(); n]
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zero(field, n);
        v[i] = field.one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| c * x).collect()
    }

    pub fn add_assign(acc: &mut [Scalar], b: &[Scalar]) {
        for (x, y) in acc.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = &*x + y;
            }
        }
    }

    pub fn sub_assign(acc: &mut [Scalar], b: &[Scalar]) {
        for (x, y) in acc.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = &*x - y;
            }
        }
    }

    /// Signed sum of terms: `Σ sign_i * term_i`.
    pub fn combine(field: Field, n: usize, terms: &[(i64, Vec<Scalar>)]) -> Vec<Scalar> {
        let mut acc = zero(field, n);
        for (sign, t) in terms {
            match sign {
                1 => add_assign(&mut acc, t),
                -1 => sub_assign(&mut acc, t),
                s => add_assign(&mut acc, &scale(&field.from_i64(*s), t)),
            }
        }
        acc
    }
}
