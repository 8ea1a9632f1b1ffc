use serde::Serialize;

use crate::error::{Error, Result};

use super::matrix::{rref, EchelonBasis, Matrix};
use super::scalar::{Field, Scalar};

/// A linear subspace of `F^ambient`, stored canonically as the nonzero rows
/// of a reduced row-echelon matrix. Two subspaces are equal exactly when
/// their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let r = rref(m);
        let mut data = Vec::with_capacity(r.rank * m.cols());
        for i in 0..r.rank {
            data.push(r.matrix.row(i).to_vec());
        }
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), data).expect("rows of a valid matrix"),
            pivots: r.pivots,
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        let m = Matrix::from_rows(field, ambient, vectors.to_vec())?;
        Ok(Subspace::row_space(&m))
    }

    pub fn from_echelon(eb: &EchelonBasis) -> Subspace {
        Subspace {
            ambient: eb.width(),
            basis: eb.to_matrix(),
            pivots: eb.pivots(),
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: other.field(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn to_echelon(&self) -> EchelonBasis {
        let mut eb = EchelonBasis::new(self.field(), self.ambient);
        for r in self.basis_vectors() {
            eb.insert(&r);
        }
        eb
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient {}",
                v.len(),
                self.ambient
            )));
        }
        // RREF basis: v is in the span iff v minus its pivot combination vanishes
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in w.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x = &*x - &(&c * b);
                }
            }
        }
        Ok(w.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` with respect to the canonical basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for r in self.basis_vectors() {
            if !other.contains(&r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Rows of a matrix whose kernel is exactly this subspace.
    pub fn equations(&self) -> Matrix {
        let k = kernel(&self.basis);
        k.basis
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let eqs = self.equations().vstack(&other.equations())?;
        Ok(kernel(&eqs))
    }

    /// `{ v : m v ∈ w }` for a matrix `m` from this ambient space into `w`'s.
    pub fn preimage_under(m: &Matrix, w: &Subspace) -> Result<Subspace> {
        if m.field() != w.field() {
            return Err(Error::FieldMismatch {
                expected: w.field(),
                found: m.field(),
            });
        }
        if m.rows() != w.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map into {} dimensions, subspace of ambient {}",
                m.rows(),
                w.ambient
            )));
        }
        let eqs = w.equations().mul(m)?;
        Ok(kernel(&eqs))
    }

    /// Image of this subspace under `m`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map from {} dimensions applied to ambient {}",
                m.cols(),
                self.ambient
            )));
        }
        let imgs: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::span(self.field(), m.rows(), &imgs)
    }
}

/// `{ v : m v = 0 }`, of dimension `cols - rank`.
pub fn kernel(m: &Matrix) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let r = rref(m);
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (i, &p) in r.pivots.iter().enumerate() {
            v[p] = -r.matrix.get(i, free);
        }
        vectors.push(v);
    }
    Subspace::span(field, n, &vectors).expect("kernel vectors are well formed")
}

#[derive(Serialize)]
struct SubspaceRepr {
    ambient: usize,
    dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr {
            ambient: self.ambient,
            dim: self.dim(),
            basis: self.basis_vectors(),
        }
        .serialize(s)
    }
}
