//! Canonical algebras, the product-algebra counterexample, and seeded search
//! for algebras that witness a law or identity failure.

mod search;

pub use search::{random_galt, sample_table, search, SearchHit, SearchMode, SearchReport, SearchSpec, Target};

use serde::Serialize;

use crate::action::{ActionData, Category};
use crate::algebra::{Algebra, Law, LawReport};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::multiplier::{identity_b, relative_actor, ActorAlgebra, BIdentity, MultiplierPair};

/// Names accepted by [`canonical`].
pub const CANONICAL_NAMES: [&str; 6] = ["zero(n)", "gf4", "h5", "w4", "octonions", "unital-gf5-dim2"];

/// `zero(n)` is the zero algebra over ℚ; the others are fixed tables.
pub fn canonical(name: &str) -> Result<Algebra> {
    let name = name.trim().to_ascii_lowercase();
    if let Some(n) = name
        .strip_prefix("zero(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| name.strip_prefix("zero"))
    {
        let n: usize = n.trim().parse().map_err(|_| Error::UnknownAlgebra(name.clone()))?;
        return Ok(Algebra::zero(Field::Rationals, n));
    }
    Ok(match name.as_str() {
        "gf4" => gf4(),
        "h5" => h5(Field::Prime(5)),
        "w4" => w4(),
        "octonions" => octonions(),
        "unital-gf5-dim2" => Algebra::from_sparse(
            Field::Prime(5),
            &["e", "n"],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        ),
        _ => return Err(Error::UnknownAlgebra(name)),
    })
}

/// GF(4) as a 2-dimensional algebra over GF(2): `t² = 1 + t`.
pub fn gf4() -> Algebra {
    Algebra::from_sparse(
        Field::Prime(2),
        &["1", "t"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
    )
}

/// `x₁x₂ = z = −x₂x₁` over the given field.
pub fn h5(field: Field) -> Algebra {
    Algebra::from_sparse(field, &["x1", "x2", "z"], &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// The free g-alternative algebra on one generator over GF(2), truncated at
/// degree 3: `xx = u`, `xu = v`, `ux = w`.
pub fn w4() -> Algebra {
    Algebra::from_sparse(
        Field::Prime(2),
        &["x", "u", "v", "w"],
        &[(0, 0, 1, 1), (0, 1, 2, 1), (1, 0, 3, 1)],
    )
}

/// Cayley–Dickson doubling `(p,q)(r,s) = (pr − s̄q, sp + qr̄)` starting from ℚ.
pub fn octonions() -> Algebra {
    fn conj(a: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = a.iter().map(|x| -x).collect();
        out[0] = a[0];
        out
    }
    fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.len() == 1 {
            return vec![a[0] * b[0]];
        }
        let h = a.len() / 2;
        let (p, q) = a.split_at(h);
        let (r, s) = b.split_at(h);
        let sub = |x: Vec<i64>, y: Vec<i64>| x.iter().zip(&y).map(|(u, v)| u - v).collect::<Vec<_>>();
        let add = |x: Vec<i64>, y: Vec<i64>| x.iter().zip(&y).map(|(u, v)| u + v).collect::<Vec<_>>();
        let mut out = sub(mul(p, r), mul(&conj(s), q));
        out.extend(add(mul(s, p), mul(q, &conj(r))));
        out
    }
    let names = ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];
    let mut entries = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let mut u = vec![0; 8];
            let mut v = vec![0; 8];
            u[i] = 1;
            v[j] = 1;
            for (k, c) in mul(&u, &v).into_iter().enumerate() {
                if c != 0 {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    Algebra::from_sparse(Field::Rationals, &names, &entries)
}

/// The reconstruction of the product-algebra counterexample over GF(p).
#[derive(Clone, Debug)]
pub struct ProductCounterexample {
    pub p: u32,
    /// `A × A` with `A = h5` over GF(p).
    pub product: Algebra,
    /// The unital 1-dimensional algebra acting by `r(a,a') = (ra, 0)`.
    pub unital_action: ActionData,
    /// `h5` acting by `λ(a,a') = (0, λa)`, `(a,a')λ = (0, aλ)`.
    pub lambda_action: ActionData,
    pub unital_report: LawReport,
    pub lambda_report: LawReport,
    /// B1 at `(λ = x₁, 1, 1; a = (x₂, 0))`.
    pub residual: Vec<Scalar>,
    /// The coordinate of the residual on `(0, z)`.
    pub coefficient: Scalar,
    pub closure: ActorAlgebra,
    pub closure_axiom21: LawReport,
}

#[derive(Serialize)]
struct ProductCounterexampleRepr<'a> {
    p: u32,
    product: &'a Algebra,
    unital_action_derived: &'a LawReport,
    lambda_action_derived: &'a LawReport,
    b1_residual: &'a [Scalar],
    coefficient: String,
    coefficient_symmetric: Option<i64>,
    closure_dim: usize,
    closure_axiom_2_1: &'a LawReport,
}

impl Serialize for ProductCounterexample {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProductCounterexampleRepr {
            p: self.p,
            product: &self.product,
            unital_action_derived: &self.unital_report,
            lambda_action_derived: &self.lambda_report,
            b1_residual: &self.residual,
            coefficient: self.coefficient.to_string(),
            coefficient_symmetric: self.coefficient.symmetric_residue(),
            closure_dim: self.closure.dim(),
            closure_axiom_2_1: &self.closure_axiom21,
        }
        .serialize(s)
    }
}

/// Builds `A × A` for `A = h5` over GF(p), the two actions on it, the B1
/// residual, and the closure of the two families with the regular action.
pub fn example_5_1(p: u32) -> Result<ProductCounterexample> {
    if p == 2 || p == 3 {
        return Err(Error::Precondition(format!("characteristic {p} is excluded")));
    }
    let field = Field::prime(p)?;
    let a = h5(field);
    let product = a.direct_product(&a)?;
    let n = a.dim();
    let m = product.dim();
    let unit = Algebra::scalars(field);

    // r acts on the first component only
    let mut id_first = Matrix::zeros(field, m, m);
    for i in 0..n {
        id_first.set(i, i, field.one());
    }
    let unital_action = ActionData::from_operators(unit, product.clone(), &[id_first.clone()], &[id_first])?;

    // λ moves the first component into the second: (a, a') ↦ (0, λa)
    let embed = |op: Matrix| {
        let mut out = Matrix::zeros(field, m, m);
        for r in 0..n {
            for c in 0..n {
                out.set(n + r, c, op.get(r, c).clone());
            }
        }
        out
    };
    let lefts: Vec<Matrix> = (0..n).map(|i| embed(a.left_basis_operator(i))).collect();
    let rights: Vec<Matrix> = (0..n).map(|i| embed(a.right_basis_operator(i))).collect();
    let lambda_action = ActionData::from_operators(a.clone(), product.clone(), &lefts, &rights)?;

    let unital_report = unital_action.check_derived(Category::Galt);
    let lambda_report = lambda_action.check_derived(Category::Galt);

    let pair = |act: &ActionData, i: usize| MultiplierPair {
        left: act.left_operator(&act.acting().unit_vector(i)),
        right: act.right_operator(&act.acting().unit_vector(i)),
    };
    let lambda = pair(&lambda_action, 0);
    let one = pair(&unital_action, 0);
    let residual = identity_b(BIdentity::B1, &lambda, &one, &one, &product.unit_vector(1))?;
    let coefficient = residual[n + 2].clone();
    let closure = relative_actor(&product, &[unital_action.clone(), lambda_action.clone()])?;
    let closure_axiom21 = closure.algebra().check_law(Law::Axiom21);
    Ok(ProductCounterexample {
        p,
        product,
        unital_action,
        lambda_action,
        unital_report,
        lambda_report,
        residual,
        coefficient,
        closure,
        closure_axiom21,
    })
}
