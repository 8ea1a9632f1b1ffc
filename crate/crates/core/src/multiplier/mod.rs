//! Pairs of linear maps `(f·, ·f)` on an algebra: the pair product, the
//! bimultiplication conditions, closures into actor algebras, the map `d`,
//! and the evaluators for the B and A expressions.

mod closure;
mod conditions;
mod expressions;

pub use closure::{bim, certify, closure, relative_actor, ActorAlgebra, Exactness};
pub use conditions::{pair_conditions_residual, solve_pair_space, variant_residuals, ConditionResidual, Variant};
pub use expressions::{expression_a, identity_b, BIdentity};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Field, Matrix, Scalar, Subspace};

/// `(L, R)` with `f a = L a` and `a f = R a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplierPair {
    pub left: Matrix,
    pub right: Matrix,
}

impl MultiplierPair {
    pub fn new(left: Matrix, right: Matrix) -> Result<MultiplierPair> {
        let n = left.rows();
        let square = |m: &Matrix| m.rows() == n && m.cols() == n;
        if !square(&left) || !square(&right) {
            return Err(Error::DimensionMismatch(format!(
                "pair of {}x{} and {}x{} maps",
                left.rows(),
                left.cols(),
                right.rows(),
                right.cols()
            )));
        }
        if left.field() != right.field() {
            return Err(Error::FieldMismatch {
                expected: left.field(),
                found: right.field(),
            });
        }
        Ok(MultiplierPair { left, right })
    }

    pub fn zero(field: Field, n: usize) -> MultiplierPair {
        MultiplierPair {
            left: Matrix::zeros(field, n, n),
            right: Matrix::zeros(field, n, n),
        }
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    /// Dimension of the algebra the maps act on.
    pub fn size(&self) -> usize {
        self.left.rows()
    }

    /// `[vec(L), vec(R)]`, both row-major; length `2n²`.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.left.data().iter().chain(self.right.data()).cloned().collect()
    }

    pub fn from_vector(field: Field, n: usize, v: &[Scalar]) -> Result<MultiplierPair> {
        if v.len() != 2 * n * n {
            return Err(Error::DimensionMismatch(format!(
                "pair vector of length {} for dimension {n}",
                v.len()
            )));
        }
        let rows = |part: &[Scalar]| part.chunks(n.max(1)).map(<[Scalar]>::to_vec).collect::<Vec<_>>();
        let (l, r) = v.split_at(n * n);
        let left = if n == 0 {
            Matrix::zeros(field, 0, 0)
        } else {
            Matrix::from_rows(field, n, rows(l))?
        };
        let right = if n == 0 {
            Matrix::zeros(field, 0, 0)
        } else {
            Matrix::from_rows(field, n, rows(r))?
        };
        Ok(MultiplierPair { left, right })
    }

    /// `f a`.
    pub fn act_left(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.left.apply(a)
    }

    /// `a f`.
    pub fn act_right(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.right.apply(a)
    }

    pub fn add(&self, other: &MultiplierPair) -> Result<MultiplierPair> {
        Ok(MultiplierPair {
            left: self.left.add(&other.left)?,
            right: self.right.add(&other.right)?,
        })
    }

    pub fn scale(&self, c: &Scalar) -> MultiplierPair {
        MultiplierPair {
            left: self.left.scale(c),
            right: self.right.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }

    /// The pair product; see [`pair_mul`].
    pub fn mul(&self, other: &MultiplierPair) -> Result<MultiplierPair> {
        pair_mul(self, other)
    }

    pub(crate) fn mul_unchecked(&self, g: &MultiplierPair) -> MultiplierPair {
        let (lf, rf, lg, rg) = (&self.left, &self.right, &g.left, &g.right);
        let lfrg = lf.mul_unchecked(rg);
        let left = lf
            .mul_unchecked(lg)
            .add(&lfrg)
            .and_then(|m| m.sub(&rg.mul_unchecked(lf)));
        let right = rg
            .mul_unchecked(rf)
            .add(&rg.mul_unchecked(lf))
            .and_then(|m| m.sub(&lfrg));
        MultiplierPair {
            left: left.expect("square maps of one size"),
            right: right.expect("square maps of one size"),
        }
    }
}

#[derive(Serialize)]
struct PairRepr {
    left: Vec<Vec<Scalar>>,
    right: Vec<Vec<Scalar>>,
}

impl Serialize for MultiplierPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PairRepr {
            left: self.left.row_vectors(),
            right: self.right.row_vectors(),
        }
        .serialize(s)
    }
}

/// `(ff')a = f(f'a) + f(af') − (fa)f'` and `a(ff') = (af)f' + (fa)f' − f(af')`,
/// that is `L'' = L_f L_g + L_f R_g − R_g L_f`, `R'' = R_g R_f + R_g L_f − L_f R_g`.
pub fn pair_mul(f: &MultiplierPair, g: &MultiplierPair) -> Result<MultiplierPair> {
    if f.size() != g.size() {
        return Err(Error::DimensionMismatch(format!(
            "pairs on algebras of dimension {} and {}",
            f.size(),
            g.size()
        )));
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch {
            expected: f.field(),
            found: g.field(),
        });
    }
    Ok(f.mul_unchecked(g))
}

/// `d(x) = (x·, ·x)`.
pub fn d(a: &Algebra, x: &[Scalar]) -> MultiplierPair {
    MultiplierPair {
        left: a.left_operator(x),
        right: a.right_operator(x),
    }
}

/// The linear map `d: A → pair space` and its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DMap {
    /// `2n² × n`, column `i` is `d(e_i)` as a pair vector.
    pub matrix: Matrix,
    pub kernel: Subspace,
}

pub fn d_map(a: &Algebra) -> DMap {
    let n = a.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| d(a, &a.unit_vector(i)).to_vector()).collect();
    let matrix = Matrix::from_columns(a.field(), 2 * n * n, &cols).expect("pair vectors");
    let kernel = kernel(&matrix);
    DMap { matrix, kernel }
}
