//! Finite-dimensional algebras given by structure constants.

mod laws;

pub(crate) use laws::scan_tuples;
pub use laws::{classify, Classification, Law, LawReport, Witness, DEFAULT_WITNESS_CAP};

use crate::error::{Error, Result};
use crate::linalg::{kernel, vector, Field, Matrix, Scalar, Subspace};

/// An algebra over an exact field: `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: Field,
    dim: usize,
    names: Vec<String>,
    table: Vec<Scalar>,
}

impl Algebra {
    /// Builds an algebra from a flat `dim³` tensor indexed `(i * dim + j) * dim + k`.
    pub fn new(field: Field, names: Vec<String>, table: Vec<Scalar>) -> Result<Algebra> {
        let dim = names.len();
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor has {} entries, expected {}",
                table.len(),
                dim * dim * dim
            )));
        }
        if let Some(s) = table.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: s.field(),
            });
        }
        Ok(Algebra {
            field,
            dim,
            names,
            table,
        })
    }

    pub fn zero(field: Field, dim: usize) -> Algebra {
        Algebra {
            field,
            dim,
            names: default_names(dim),
            table: vec![field.zero(); dim * dim * dim],
        }
    }

    /// The one-dimensional unital algebra `F` with basis `1`.
    pub fn scalars(field: Field) -> Algebra {
        Algebra {
            field,
            dim: 1,
            names: vec!["1".to_string()],
            table: vec![field.one()],
        }
    }

    /// Builds from sparse `(i, j, k, coefficient)` records over small integers.
    pub fn from_sparse(field: Field, names: &[&str], entries: &[(usize, usize, usize, i64)]) -> Algebra {
        let dim = names.len();
        let mut a = Algebra {
            field,
            dim,
            names: names.iter().map(|s| s.to_string()).collect(),
            table: vec![field.zero(); dim * dim * dim],
        };
        for &(i, j, k, c) in entries {
            let idx = a.index(i, j, k);
            a.table[idx] = &a.table[idx] + &field.from_i64(c);
        }
        a
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Algebra> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[self.index(i, j, k)]
    }

    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: c.field(),
            });
        }
        if i >= self.dim || j >= self.dim || k >= self.dim {
            return Err(Error::DimensionMismatch(format!(
                "index ({i},{j},{k}) out of range for dimension {}",
                self.dim
            )));
        }
        let idx = self.index(i, j, k);
        self.table[idx] = c;
        Ok(())
    }

    /// `e_i e_j` as a coordinate slice.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.table[start..start + self.dim]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vector::zero(self.field, self.dim)
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in an algebra of dimension {}",
                v.len(),
                self.dim
            )));
        }
        if let Some(s) = v.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: s.field(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure tensor.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked product; callers guarantee matching lengths and field.
    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let row = &self.table[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, t) in out.iter_mut().zip(row) {
                    if !t.is_zero() {
                        o.add_assign_mul(&c, t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ a v`.
    pub fn left_operator(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(a, &self.unit_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("well-formed columns")
    }

    /// Matrix of `v ↦ v a`.
    pub fn right_operator(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&self.unit_vector(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("well-formed columns")
    }

    pub fn left_basis_operator(&self, i: usize) -> Matrix {
        self.left_operator(&self.unit_vector(i))
    }

    pub fn right_basis_operator(&self, i: usize) -> Matrix {
        self.right_operator(&self.unit_vector(i))
    }

    pub fn check_law(&self, law: Law) -> LawReport {
        law.check(self, DEFAULT_WITNESS_CAP)
    }

    pub fn satisfies(&self, law: Law) -> bool {
        law.holds(self)
    }

    pub fn classify(&self) -> Classification {
        classify(self)
    }

    /// `{ z : e_i z = z e_i = 0 for every basis e_i }`.
    pub fn annihilator(&self) -> Subspace {
        let mut stacked = Matrix::zeros(self.field, 0, self.dim);
        for i in 0..self.dim {
            stacked = stacked
                .vstack(&self.left_basis_operator(i))
                .and_then(|m| m.vstack(&self.right_basis_operator(i)))
                .expect("square operators of equal size");
        }
        kernel(&stacked)
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_generated(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.dim || s.field() != self.field {
            return Err(Error::DimensionMismatch(format!(
                "subspace of ambient {} over {} in an algebra of dimension {} over {}",
                s.ambient(),
                s.field(),
                self.dim,
                self.field
            )));
        }
        let mut eb = s.to_echelon();
        let mut frontier = s.basis_vectors();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for i in 0..self.dim {
                    let e = self.unit_vector(i);
                    for w in [self.mul(&e, v), self.mul(v, &e)] {
                        if eb.insert(&w) {
                            next.push(w);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(Subspace::from_echelon(&eb))
    }

    /// Smallest subalgebra containing `s`.
    pub fn subalgebra_generated(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.dim {
            return Err(Error::DimensionMismatch("subspace outside the algebra".into()));
        }
        let mut eb = s.to_echelon();
        let mut all = s.basis_vectors();
        let mut frontier = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for w in all.clone() {
                    for p in [self.mul(v, &w), self.mul(&w, v)] {
                        if eb.insert(&p) {
                            next.push(p.clone());
                            all.push(p);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(Subspace::from_echelon(&eb))
    }

    /// The algebra structure induced on a subspace closed under
    /// multiplication, in its canonical basis, together with the inclusion
    /// matrix (columns are the basis vectors).
    pub fn restrict_to(&self, s: &Subspace) -> Result<(Algebra, Matrix)> {
        let basis = s.basis_vectors();
        let d = basis.len();
        let mut table = Vec::with_capacity(d * d * d);
        for u in &basis {
            for v in &basis {
                let p = self.mul(u, v);
                let coords = s
                    .coordinates(&p)?
                    .ok_or_else(|| Error::Precondition("subspace is not closed under multiplication".into()))?;
                table.extend(coords);
            }
        }
        let names = default_names(d);
        let inclusion = Matrix::from_columns(self.field, self.dim, &basis)?;
        Ok((Algebra::new(self.field, names, table)?, inclusion))
    }

    /// Quotient by a two-sided ideal, on the canonical complement of the
    /// ideal's pivot columns. Returns the quotient and the projection matrix.
    pub fn quotient_by(&self, ideal: &Subspace) -> Result<(Algebra, Matrix)> {
        let pivots = ideal.pivots();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let d = free.len();
        let reduce = |v: &[Scalar]| -> Vec<Scalar> {
            let mut w = v.to_vec();
            for (r, &p) in ideal.basis_vectors().iter().zip(pivots) {
                let c = w[p].clone();
                if !c.is_zero() {
                    for (x, b) in w.iter_mut().zip(r) {
                        *x = &*x - &(&c * b);
                    }
                }
            }
            free.iter().map(|&j| w[j].clone()).collect()
        };
        let mut table = Vec::with_capacity(d * d * d);
        for &i in &free {
            for &j in &free {
                table.extend(reduce(self.basis_product(i, j)));
            }
        }
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| reduce(&self.unit_vector(j))).collect();
        let projection = Matrix::from_columns(self.field, d, &cols)?;
        let names = free.iter().map(|&j| self.names[j].clone()).collect();
        Ok((Algebra::new(self.field, names, table)?, projection))
    }

    /// Same algebra in the basis given by the columns of `t` (invertible):
    /// new `e'_j = Σ_i t[i][j] e_i`.
    pub fn change_basis(&self, t: &Matrix) -> Result<Algebra> {
        if t.rows() != self.dim || t.cols() != self.dim {
            return Err(Error::DimensionMismatch("change of basis must be square".into()));
        }
        let inv = t
            .inverse()
            .ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
        let n = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| t.column(j)).collect();
        let mut table = Vec::with_capacity(n * n * n);
        for u in &cols {
            for v in &cols {
                table.extend(inv.apply(&self.mul(u, v)));
            }
        }
        Algebra::new(self.field, default_names(n), table)
    }

    /// Whether the linear map `m` (columns: images of this algebra's basis in
    /// `target`) preserves products.
    pub fn is_homomorphism(&self, target: &Algebra, m: &Matrix) -> Result<bool> {
        if m.rows() != target.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} map between algebras of dimension {} and {}",
                m.rows(),
                m.cols(),
                self.dim,
                target.dim
            )));
        }
        for i in 0..self.dim {
            let mi = m.column(i);
            for j in 0..self.dim {
                let mj = m.column(j);
                let lhs = m.apply(self.basis_product(i, j));
                let rhs = target.mul(&mi, &mj);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Direct product `self × other` with basis `self` then `other`.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        let (m, n) = (self.dim, other.dim);
        let d = m + n;
        let mut out = Algebra::zero(self.field, d);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let idx = out.index(i, j, k);
                    out.table[idx] = self.coefficient(i, j, k).clone();
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = out.index(m + i, m + j, m + k);
                    out.table[idx] = other.coefficient(i, j, k).clone();
                }
            }
        }
        let mut names: Vec<String> = self.names.iter().map(|s| format!("{s}.0")).collect();
        names.extend(other.names.iter().map(|s| format!("{s}.1")));
        out.names = names;
        Ok(out)
    }

    /// Human-readable rendering of a vector in this basis.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_in_basis(&self.names, v)
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

pub fn format_in_basis(names: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, name)| {
            if c.is_one() {
                name.clone()
            } else {
                format!("{c}*{name}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[derive(serde::Serialize)]
struct AlgebraRepr {
    field: String,
    dim: usize,
    basis: Vec<String>,
    /// `(i, j, k, coefficient)` for every nonzero constant, lexicographic.
    products: Vec<(usize, usize, usize, String)>,
}

impl serde::Serialize for Algebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim;
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.coefficient(i, j, k);
                    if !c.is_zero() {
                        products.push((i, j, k, c.to_string()));
                    }
                }
            }
        }
        AlgebraRepr {
            field: self.field.to_string(),
            dim: n,
            basis: self.names.clone(),
            products,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h5() -> Algebra {
        Algebra::from_sparse(Field::Prime(5), &["x1", "x2", "z"], &[(0, 1, 2, 1), (1, 0, 2, -1)])
    }

    #[test]
    fn zero_products() {
        let a = h5();
        let y = vec![a.field().one(), a.field().from_i64(3), a.field().zero()];
        assert!(vector::is_zero(&a.multiply(&a.zero_vector(), &y).unwrap()));
        assert!(a.multiply(&y[..2], &y).is_err());
    }

    #[test]
    fn annihilator_cases() {
        let f = Field::Prime(3);
        assert!(Algebra::zero(f, 4).annihilator().is_full());
        assert!(Algebra::scalars(f).annihilator().is_zero());
        let a = h5();
        let ann = a.annihilator();
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&a.unit_vector(2)).unwrap());
    }

    #[test]
    fn annihilator_matches_direct_system() {
        // 2*9 equations e_i z = 0, z e_i = 0 solved by brute force over GF(5)^3
        let a = h5();
        let f = a.field();
        let mut count = 0;
        for x in 0..125i64 {
            let z = vec![f.from_i64(x % 5), f.from_i64(x / 5 % 5), f.from_i64(x / 25)];
            let kills = (0..3).all(|i| {
                let e = a.unit_vector(i);
                vector::is_zero(&a.mul(&e, &z)) && vector::is_zero(&a.mul(&z, &e))
            });
            if kills {
                count += 1;
                assert!(a.annihilator().contains(&z).unwrap());
            }
        }
        assert_eq!(count, 5);
    }

    #[test]
    fn ideals() {
        let a = h5();
        let f = a.field();
        assert!(a.ideal_generated(&Subspace::zero(f, 3)).unwrap().is_zero());
        let s = Subspace::span(f, 3, &[a.unit_vector(0)]).unwrap();
        let i = a.ideal_generated(&s).unwrap();
        let expected = Subspace::span(f, 3, &[a.unit_vector(0), a.unit_vector(2)]).unwrap();
        assert_eq!(i, expected);
        let z = Algebra::zero(f, 3);
        assert_eq!(z.ideal_generated(&s).unwrap(), s);
    }

    #[test]
    fn change_of_basis_is_isomorphism() {
        let a = h5();
        let f = a.field();
        let t = Matrix::from_i64(f, &[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
        let b = a.change_basis(&t).unwrap();
        // t maps b-coordinates to a-coordinates and is a homomorphism b → a
        assert!(b.is_homomorphism(&a, &t).unwrap());
        assert_eq!(b.annihilator().dim(), 1);
    }

    #[test]
    fn restriction_and_quotient() {
        let a = h5();
        let f = a.field();
        let ann = a.annihilator();
        let (sub, inc) = a.restrict_to(&ann).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.is_homomorphism(&a, &inc).unwrap());
        let (q, proj) = a.quotient_by(&ann).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(a.is_homomorphism(&q, &proj).unwrap());
        assert!(q.annihilator().is_full());
        let span_x1 = Subspace::span(f, 3, &[a.unit_vector(0)]).unwrap();
        assert!(a.restrict_to(&span_x1).is_ok());
        let not_closed = Subspace::span(f, 3, &[a.unit_vector(0), a.unit_vector(1)]).unwrap();
        assert!(a.restrict_to(&not_closed).is_err());
    }
}
