use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};

use super::ActionData;

/// A split extension `0 → A →i E →p B → 0` with section `s`. Maps are
/// matrices acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitExtensionData {
    pub extension: Algebra,
    pub acting: Algebra,
    pub kernel: Algebra,
    /// `A → E`, `dim E × dim A`.
    pub inclusion: Matrix,
    /// `E → B`, `dim B × dim E`.
    pub projection: Matrix,
    /// `B → E`, `dim E × dim B`.
    pub section: Matrix,
}

impl SplitExtensionData {
    /// The semidirect product with its canonical maps.
    pub fn canonical(act: &ActionData) -> SplitExtensionData {
        let f = act.field();
        let (nb, na) = (act.acting().dim(), act.target().dim());
        let d = nb + na;
        let mut inclusion = Matrix::zeros(f, d, na);
        let mut projection = Matrix::zeros(f, nb, d);
        let mut section = Matrix::zeros(f, d, nb);
        for j in 0..na {
            inclusion.set(nb + j, j, f.one());
        }
        for j in 0..nb {
            projection.set(j, j, f.one());
            section.set(j, j, f.one());
        }
        SplitExtensionData {
            extension: act.semidirect(),
            acting: act.acting().clone(),
            kernel: act.target().clone(),
            inclusion,
            projection,
            section,
        }
    }

    /// The same extension with `E` rewritten in the basis given by the
    /// columns of the invertible matrix `t`.
    pub fn rebased(&self, t: &Matrix) -> Result<SplitExtensionData> {
        let inv = t
            .inverse()
            .ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
        Ok(SplitExtensionData {
            extension: self.extension.change_basis(t)?,
            acting: self.acting.clone(),
            kernel: self.kernel.clone(),
            inclusion: inv.mul(&self.inclusion)?,
            projection: self.projection.mul(t)?,
            section: inv.mul(&self.section)?,
        })
    }

    /// The extension `E = B ⊕ A` given by an ideal `A` and a complementary
    /// subalgebra `B`, each carried by its echelon basis.
    pub fn from_ideal(extension: &Algebra, ideal: &Subspace, complement: &Subspace) -> Result<SplitExtensionData> {
        let f = extension.field();
        let n = extension.dim();
        if extension.ideal_generated(ideal)? != *ideal {
            return Err(Error::MalformedExtension("kernel is not an ideal".into()));
        }
        if extension.subalgebra_generated(complement)? != *complement {
            return Err(Error::MalformedExtension("complement is not a subalgebra".into()));
        }
        if !ideal.intersect(complement)?.is_zero() || ideal.dim() + complement.dim() != n {
            return Err(Error::MalformedExtension(
                "kernel and complement do not split the algebra".into(),
            ));
        }
        let (kernel, inclusion) = extension.restrict_to(ideal)?;
        let (acting, section) = extension.restrict_to(complement)?;
        let nb = acting.dim();
        let mut cols: Vec<Vec<Scalar>> = (0..nb).map(|j| section.column(j)).collect();
        cols.extend((0..kernel.dim()).map(|j| inclusion.column(j)));
        let inv = Matrix::from_columns(f, n, &cols)?
            .inverse()
            .ok_or_else(|| Error::MalformedExtension("kernel and complement are dependent".into()))?;
        let rows: Vec<Vec<Scalar>> = inv.row_vectors().into_iter().take(nb).collect();
        let projection = if nb == 0 {
            Matrix::zeros(f, 0, n)
        } else {
            Matrix::from_rows(f, n, rows)?
        };
        let out = SplitExtensionData {
            extension: extension.clone(),
            acting,
            kernel,
            inclusion,
            projection,
            section,
        };
        out.validate()?;
        Ok(out)
    }

    /// Checks every structural condition; the error names the first failure.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedExtension(m.to_string()));
        let (ne, nb, na) = (self.extension.dim(), self.acting.dim(), self.kernel.dim());
        let f = self.extension.field();
        if self.acting.field() != f || self.kernel.field() != f {
            return bad("algebras over different fields");
        }
        let shapes = [
            (&self.inclusion, ne, na, "inclusion"),
            (&self.projection, nb, ne, "projection"),
            (&self.section, ne, nb, "section"),
        ];
        for (m, r, c, what) in shapes {
            if m.rows() != r || m.cols() != c || m.field() != f {
                return Err(Error::MalformedExtension(format!(
                    "{what} is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if !self.projection.mul(&self.inclusion)?.is_zero() {
            return bad("p∘i is not zero");
        }
        if self.projection.mul(&self.section)? != Matrix::identity(f, nb) {
            return bad("p∘s is not the identity");
        }
        if self.inclusion.rank() != na {
            return bad("inclusion is not injective");
        }
        if na + nb != ne || self.projection.rank() != nb {
            return bad("image of the inclusion is not the kernel of the projection");
        }
        if !self.kernel.is_homomorphism(&self.extension, &self.inclusion)? {
            return bad("inclusion is not a homomorphism");
        }
        if !self.extension.is_homomorphism(&self.acting, &self.projection)? {
            return bad("projection is not a homomorphism");
        }
        if !self.acting.is_homomorphism(&self.extension, &self.section)? {
            return bad("section is not a homomorphism");
        }
        let image = self.image();
        let ideal = self.extension.ideal_generated(&image)?;
        if ideal != image {
            return bad("image of the inclusion is not an ideal");
        }
        Ok(())
    }

    fn image(&self) -> Subspace {
        Subspace::row_space(&self.inclusion.transpose())
    }

    /// The action `b·a = s(b) i(a)` and `a·b = i(a) s(b)`, pulled back to `A`.
    pub fn action_from_section(&self) -> Result<ActionData> {
        self.validate()?;
        let f = self.extension.field();
        let (nb, na) = (self.acting.dim(), self.kernel.dim());
        let pull = |v: &[Scalar]| -> Result<Vec<Scalar>> {
            self.inclusion
                .solve(v)?
                .ok_or_else(|| Error::MalformedExtension("product leaves the image of the inclusion".into()))
        };
        let mut left = Vec::with_capacity(nb * na * na);
        let mut right = vec![f.zero(); na * nb * na];
        for b in 0..nb {
            let sb = self.section.column(b);
            for a in 0..na {
                let ia = self.inclusion.column(a);
                left.extend(pull(&self.extension.mul(&sb, &ia))?);
                let r = pull(&self.extension.mul(&ia, &sb))?;
                for (k, c) in r.into_iter().enumerate() {
                    right[(a * nb + b) * na + k] = c;
                }
            }
        }
        ActionData::new(self.acting.clone(), self.kernel.clone(), left, right)
    }

    /// The map `(b, a) ↦ s(b) + i(a)` from the semidirect product to `E`.
    pub fn comparison_map(&self) -> Matrix {
        let f = self.extension.field();
        let cols: Vec<Vec<Scalar>> = (0..self.acting.dim())
            .map(|b| self.section.column(b))
            .chain((0..self.kernel.dim()).map(|a| self.inclusion.column(a)))
            .collect();
        Matrix::from_columns(f, self.extension.dim(), &cols).expect("columns of E")
    }

    /// Whether `semidirect(action_from_section)` maps isomorphically onto `E`.
    pub fn round_trip_holds(&self) -> Result<bool> {
        let act = self.action_from_section()?;
        let sd = act.semidirect();
        let phi = self.comparison_map();
        Ok(phi.inverse().is_some() && sd.is_homomorphism(&self.extension, &phi)?)
    }
}
