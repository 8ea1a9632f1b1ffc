use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::MultiplierPair;
use crate::algebra::{Algebra, Law};
use crate::error::{Error, Result};
use crate::linalg::{vector, EchelonBasis, Scalar, Subspace};

/// Which linear system defines the bimultiplications.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// The four conditions: the defining laws on the one-pair triples.
    Galt,
    /// Galt plus the linear condition `a(fa) = (af)a`; the quadratic
    /// `f(af) = (fa)f` is checked afterwards on the closure.
    Alt,
    /// Classical bimultiplications of an associative algebra.
    Assoc,
    /// Multipliers `f(aa') = f(a)a'` of a commutative associative algebra,
    /// stored as pairs `(f, f)`.
    Mult,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Galt, Variant::Alt, Variant::Assoc, Variant::Mult];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Galt => "galt",
            Variant::Alt => "alt",
            Variant::Assoc => "assoc",
            Variant::Mult => "mult",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Precondition(format!("unknown variant {s:?}, expected galt, alt, assoc or mult")))
    }
}

/// A nonzero residual of one condition at the basis pair `(a1, a2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResidual {
    pub condition: &'static str,
    pub a1: usize,
    pub a2: usize,
    pub residual: Vec<Scalar>,
}

/// Every condition of the variant at every basis pair, zero residuals
/// included, in a fixed order.
fn evaluate(a: &Algebra, f: &MultiplierPair, variant: Variant) -> Vec<(&'static str, usize, usize, Vec<Scalar>)> {
    let n = a.dim();
    let field = a.field();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| a.unit_vector(i)).collect();
    let fl: Vec<Vec<Scalar>> = units.iter().map(|u| f.act_left(u)).collect();
    let fr: Vec<Vec<Scalar>> = units.iter().map(|u| f.act_right(u)).collect();
    let m = |x: &[Scalar], y: &[Scalar]| a.mul(x, y);
    let c = |terms: Vec<(i64, Vec<Scalar>)>| vector::combine(field, n, &terms);
    let mut out = Vec::new();
    if variant == Variant::Mult {
        for j in 0..n {
            out.push(("L=R", j, j, vector::sub(&fl[j], &fr[j])));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (&units[i], &units[j]);
            let xy = m(x, y);
            match variant {
                Variant::Galt | Variant::Alt => {
                    let yx = m(y, x);
                    out.push((
                        "pair1",
                        i,
                        j,
                        c(vec![
                            (1, f.act_left(&xy)),
                            (-1, m(&fl[i], y)),
                            (-1, m(&fr[i], y)),
                            (1, m(x, &fl[j])),
                        ]),
                    ));
                    out.push((
                        "pair2",
                        i,
                        j,
                        c(vec![
                            (1, f.act_right(&xy)),
                            (-1, m(x, &fr[j])),
                            (-1, m(x, &fl[j])),
                            (1, m(&fr[i], y)),
                        ]),
                    ));
                    out.push((
                        "pair3",
                        i,
                        j,
                        c(vec![
                            (1, m(&fl[i], y)),
                            (-1, f.act_left(&xy)),
                            (-1, f.act_left(&yx)),
                            (1, m(&fl[j], x)),
                        ]),
                    ));
                    out.push((
                        "pair4",
                        i,
                        j,
                        c(vec![
                            (1, m(x, &fr[j])),
                            (-1, f.act_right(&xy)),
                            (-1, f.act_right(&yx)),
                            (1, m(y, &fr[i])),
                        ]),
                    ));
                    if variant == Variant::Alt && i <= j {
                        // a(fa) = (af)a, polarized off the diagonal
                        let mut r = vector::sub(&m(x, &fl[j]), &m(&fr[i], y));
                        if i < j {
                            vector::add_assign(&mut r, &vector::sub(&m(y, &fl[i]), &m(&fr[j], x)));
                        }
                        out.push(("alt-a(fa)=(af)a", i, j, r));
                    }
                }
                Variant::Assoc => {
                    out.push(("f(a1a2)=(fa1)a2", i, j, vector::sub(&f.act_left(&xy), &m(&fl[i], y))));
                    out.push(("(a1a2)f=a1(a2f)", i, j, vector::sub(&f.act_right(&xy), &m(x, &fr[j]))));
                    out.push(("(a1f)a2=a1(fa2)", i, j, vector::sub(&m(&fr[i], y), &m(x, &fl[j]))));
                }
                Variant::Mult => {
                    out.push(("f(aa')=f(a)a'", i, j, vector::sub(&f.act_left(&xy), &m(&fl[i], y))));
                }
            }
        }
    }
    out
}

/// Nonzero residuals of the four bimultiplication conditions
/// `f(a1a2) = (fa1)a2 + (a1f)a2 − a1(fa2)` and companions.
pub fn pair_conditions_residual(a: &Algebra, f: &MultiplierPair) -> Vec<ConditionResidual> {
    variant_residuals(a, f, Variant::Galt)
}

pub fn variant_residuals(a: &Algebra, f: &MultiplierPair, variant: Variant) -> Vec<ConditionResidual> {
    evaluate(a, f, variant)
        .into_iter()
        .filter(|(_, _, _, r)| !vector::is_zero(r))
        .map(|(condition, a1, a2, residual)| ConditionResidual {
            condition,
            a1,
            a2,
            residual,
        })
        .collect()
}

/// Solutions of the variant's linear conditions, as a subspace of pair space
/// (ambient `2n²`).
pub fn solve_pair_space(a: &Algebra, variant: Variant) -> Result<Subspace> {
    if variant == Variant::Mult && !(Law::Commutative.holds(a) && Law::Associative.holds(a)) {
        return Err(Error::Precondition(
            "multipliers are defined for commutative associative algebras".into(),
        ));
    }
    let n = a.dim();
    let field = a.field();
    let width = 2 * n * n;
    // column u = all residuals at the unit pair u; collect them as rows of the
    // transposed system, then keep an echelon basis of the constraint rows
    let columns: Vec<Vec<Scalar>> = (0..width)
        .map(|u| {
            let unit = MultiplierPair::from_vector(field, n, &vector::unit(field, width, u)).expect("unit pair");
            evaluate(a, &unit, variant)
                .into_iter()
                .flat_map(|(_, _, _, r)| r)
                .collect()
        })
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let mut constraints = EchelonBasis::new(field, width);
    for r in 0..rows {
        if constraints.dim() == width {
            break;
        }
        let row: Vec<Scalar> = columns.iter().map(|col| col[r].clone()).collect();
        if !vector::is_zero(&row) {
            constraints.insert(&row);
        }
    }
    Ok(crate::linalg::kernel(&constraints.to_matrix()))
}
